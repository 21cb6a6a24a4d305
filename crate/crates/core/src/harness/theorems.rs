//! Registry of statements verified exhaustively over finite structures.
//!
//! Each entry instantiates its hypotheses over every structure in a scope
//! (all hyperideals, the expansions d0, d1 and dH, multiplicative subsets,
//! homomorphisms, quotients and products as the statement needs) and checks
//! the conclusion. Structures whose unit equals the zero are skipped.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::classify::checks::{multiplicative_subsets, sampled_multiplicative_subsets, Classifier, Family, MultSubset};
use crate::classify::expansion::{is_intersection_preserving, ExpansionFn};
use crate::constructions::{
    homomorphisms, product, product_set, quotient, restrict, subhyperrings, Homomorphism, QuotientRing,
};
use crate::error::{Error, Result};
use crate::harness::catalog::CatalogEntry;
use crate::ideals::{generated, residual_unchecked, Hyperideal};
use crate::ring::HyperRing;
use crate::set::{Elem, ElementSet};
use crate::tuples::Multisets;
use crate::verdict::{Reading, Witness};

/// Multiplicative subsets are enumerated exhaustively up to this carrier size.
pub const EXHAUSTIVE_SUBSETS: usize = 4;
/// Largest product carrier built for the product statements.
pub const PRODUCT_LIMIT: usize = 16;
/// Largest factor carrier used by the product S-N statements.
pub const S_N_FACTOR_LIMIT: usize = 3;

type Checker = fn(&[CatalogEntry], Reading, &mut Run);

/// One registered statement.
pub struct TheoremInfo {
    pub id: &'static str,
    pub statement: &'static str,
    /// Part of the gate that must pass under [`Reading::Strict`].
    pub core: bool,
    /// Findings are reported but never fail a run.
    pub report_only: bool,
    check: Checker,
}

macro_rules! entry {
    ($id:literal, $core:literal, $report:literal, $check:ident, $text:literal) => {
        TheoremInfo { id: $id, statement: $text, core: $core, report_only: $report, check: $check }
    };
}

/// Every registered statement in a fixed order.
pub static REGISTRY: &[TheoremInfo] = &[
    entry!("n-within-nilradical", true, false, n_within_nilradical, "Every N-hyperideal lies inside the nilradical."),
    entry!("prime-n-iff-nilradical", true, false, prime_n_iff_nilradical, "A prime hyperideal is an N-hyperideal iff it equals the nilradical."),
    entry!("nilradical-prime-iff-n", false, false, nilradical_prime_iff_n, "The nilradical is prime iff it is an N-hyperideal."),
    entry!("principal-n-implies-all", false, false, principal_n_implies_all, "If every proper principal hyperideal is N, every proper hyperideal is N."),
    entry!("n-residual-characterization", false, false, n_residual_characterization, "I is N iff I = E_x for every x outside the nilradical iff the ideal-level N condition holds."),
    entry!("residual-set-n", false, false, residual_set_n, "For an N-hyperideal I and T not inside I, E_T is an N-hyperideal."),
    entry!("maximal-n-is-nilradical", false, false, maximal_n_is_nilradical, "An N-hyperideal maximal among N-hyperideals equals the nilradical."),
    entry!("n-exists-iff-nilradical-prime", true, false, n_exists_iff_nilradical_prime, "A structure has an N-hyperideal iff its nilradical is prime."),
    entry!("n-iff-primary-below-nilradical", false, true, n_iff_primary_below_nilradical, "A hyperideal inside the nilradical is N iff it is primary."),
    entry!("zero-only-n-iff-domain", true, false, zero_only_n_iff_domain, "{0} is the only N-hyperideal iff the structure is an integral domain."),
    entry!("product-has-no-n", true, false, product_has_no_n, "A product of two unital structures has no N-hyperideal."),
    entry!("hom-preimage-n", true, false, hom_preimage_n, "The preimage of an N-hyperideal under a monomorphism is N."),
    entry!("hom-image-n", true, false, hom_image_n, "The image of an N-hyperideal containing the kernel of an epimorphism is N."),
    entry!("subring-intersection-n", false, false, subring_intersection_n, "For an N-hyperideal I and a subhyperring H' not inside I, H' ∩ I is N in H'."),
    entry!("quotient-image-n", true, false, quotient_image_n, "For J ⊆ I with I an N-hyperideal, I/J is N in H/J."),
    entry!("quotient-lift-n", true, false, quotient_lift_n, "For J ⊆ I with J inside the nilradical, I/J N in H/J implies I is N."),
    entry!("quotient-lift-via-n-modulus", false, false, quotient_lift_via_n_modulus, "For J ⊆ I with J an N-hyperideal, I/J N in H/J implies I is N."),
    entry!("delta-primary-below-nilradical", false, false, delta_primary_below_nilradical, "A δ-primary hyperideal inside the nilradical is δ-N."),
    entry!("nilradical-delta-n-is-delta-primary", false, false, nilradical_delta_n_is_delta_primary, "If the nilradical is δ-N it is δ-primary."),
    entry!("delta-n-characterization", false, false, delta_n_characterization, "δ-N, the residual condition, and both ideal-level conditions agree."),
    entry!("residual-delta-n", false, false, residual_delta_n, "For I δ-N and x outside δ(I) with F_x ⊆ δ(E_x), E_x is δ-N."),
    entry!("delta-n-intersection", true, false, delta_n_intersection, "For an intersection-preserving δ, an intersection of n δ-N-hyperideals is δ-N."),
    entry!("delta-n-sandwich", false, false, delta_n_sandwich, "For I1 ⊆ I2 ⊆ I3 with δ(I1) = δ(I3) and I3 δ-N, I2 is δ-N."),
    entry!("delta-image-n-gives-delta-n", false, false, delta_image_n_gives_delta_n, "If δ(I) is an N-hyperideal then I is δ-N."),
    entry!("radical-of-d1-n-is-n", true, false, radical_of_d1_n_is_n, "If I is d1-N then its radical is an N-hyperideal."),
    entry!("local-principal-delta-primary", false, true, local_principal_delta_primary, "If the nilradical is the only maximal hyperideal, every proper principal hyperideal is δ-primary."),
    entry!("idempotent-delta-residual", false, false, idempotent_delta_residual, "For idempotent δ on I, I δ-N and x outside the nilradical, δ(E_x) = δ(I)."),
    entry!("maximal-delta-n-is-prime-nilradical", false, true, maximal_delta_n_is_prime_nilradical, "A maximal δ-N-hyperideal with some x outside δ(I) and F_x ⊆ δ(E_x) is the prime nilradical."),
    entry!("expansion-comparison", true, false, expansion_comparison, "γ-N implies δ-N when γ ≤ δ; δ(I) γ-N implies I is (γ∘δ)-N."),
    entry!("delta-gamma-hom-transfer", false, false, delta_gamma_hom_transfer, "δγ-homomorphisms pull γ-N back to δ-N (mono) and push δ-N to γ-N (epi)."),
    entry!("quotient-delta-q", false, false, quotient_delta_q, "For J ⊆ I with I δ-N, I/J is δq-N in H/J."),
    entry!("radical-delta-n", false, false, radical_delta_n, "For I δ-N with √δ(I) ⊆ δ(√I), √I is δ-N."),
    entry!("radical-intersection-preserving", false, false, radical_intersection_preserving, "The radical expansion preserves intersections."),
    entry!("absorbing-n-radical", false, false, absorbing_n_radical, "If I is (k,n)-absorbing d0-N then √I is (k,n)-absorbing δ-N."),
    entry!("absorbing-two-to-three", false, false, absorbing_two_to_three, "If δ(I) is (2,n)-absorbing d0-N then I is (3,n)-absorbing δ-N."),
    entry!("absorbing-delta-lift", false, false, absorbing_delta_lift, "If δ(I) is (k,n)-absorbing δ-N then so is I."),
    entry!("delta-n-two-absorbing", true, false, delta_n_two_absorbing, "Every δ-N-hyperideal is (2,n)-absorbing δ-N."),
    entry!("absorbing-monotone-in-k", true, false, absorbing_monotone_in_k, "(k,n)-absorbing δ-N implies (k+1,n)-absorbing δ-N."),
    entry!("s-n-ideal-characterization", true, false, s_n_ideal_characterization, "S-N agrees with its ideal-level form."),
    entry!("s-n-intersection", false, false, s_n_intersection, "An intersection of n S-N-hyperideals is S-N."),
    entry!("s-n-from-residual", false, false, s_n_from_residual, "If E_s is an N-hyperideal for some s in S, I is S-N."),
    entry!("s-n-residual-converse", false, false, s_n_residual_converse, "For an S-element s of an S-N-hyperideal I with F_s an N-hyperideal, E_s is N."),
    entry!("s-n-subset-transfer", false, false, s_n_subset_transfer, "For S ⊆ S' where every s in S' has a partner s' with g(s,s',1) in S, S'-N implies S-N."),
    entry!("product-s-n-whole-factor", true, false, product_s_n_whole_factor, "I1 × H2 is S1×S2-N iff I1 is S1-N and S2 meets the nilradical of H2, and symmetrically."),
    entry!("product-s-n-proper-factors", true, false, product_s_n_proper_factors, "I1 × I2 is S1×S2-N when one factor is S-N and the other S meets its nilradical."),
];

/// Registered IDs in order.
pub fn theorem_ids() -> Vec<&'static str> {
    REGISTRY.iter().map(|t| t.id).collect()
}

pub fn theorem_info(id: &str) -> Option<&'static TheoremInfo> {
    REGISTRY.iter().find(|t| t.id == id)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    /// No instance satisfied the hypotheses.
    Vacuous,
}

impl Status {
    pub fn as_str(self) -> &'static str {
        match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::Vacuous => "vacuous",
        }
    }
}

/// One instance whose hypotheses held and whose conclusion did not.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TheoremViolation {
    pub structures: Vec<String>,
    pub ideals: Vec<ElementSet>,
    /// Expansions, multiplicative subsets or maps involved.
    pub params: String,
    pub detail: String,
    pub witness: Option<Witness>,
}

#[derive(Debug, Clone, Serialize)]
pub struct TheoremReport {
    pub id: String,
    pub reading: Reading,
    pub structures_checked: usize,
    /// Instances whose hypotheses held.
    pub instances: u64,
    /// Structures or constructions that could not be evaluated.
    pub skipped: u64,
    pub violations: Vec<TheoremViolation>,
    pub status: Status,
}

/// Run one statement over `scope`.
pub fn verify_theorem(id: &str, scope: &[CatalogEntry], reading: Reading) -> Result<TheoremReport> {
    let info = theorem_info(id).ok_or_else(|| Error::UnknownTheorem(id.to_string()))?;
    let mut run = Run::default();
    (info.check)(scope, reading, &mut run);
    let status = if !run.violations.is_empty() {
        Status::Fail
    } else if run.instances == 0 {
        Status::Vacuous
    } else {
        Status::Pass
    };
    Ok(TheoremReport {
        id: id.to_string(),
        reading,
        structures_checked: run.structures,
        instances: run.instances,
        skipped: run.skipped,
        violations: run.violations,
        status,
    })
}

/// Re-run `id` on only the structures a violation names and confirm the same
/// violation is produced.
pub fn replay_violation(id: &str, scope: &[CatalogEntry], reading: Reading, v: &TheoremViolation) -> Result<bool> {
    let sub: Vec<CatalogEntry> = scope.iter().filter(|e| v.structures.contains(&e.name)).cloned().collect();
    Ok(verify_theorem(id, &sub, reading)?.violations.contains(v))
}

#[derive(Default)]
struct Run {
    structures: usize,
    instances: u64,
    skipped: u64,
    violations: Vec<TheoremViolation>,
}

impl Run {
    fn check(&mut self, ok: bool, violation: impl FnOnce() -> TheoremViolation) {
        self.check_many(1, ok, violation);
    }

    fn check_many(&mut self, count: u64, ok: bool, violation: impl FnOnce() -> TheoremViolation) {
        self.instances += count;
        if !ok {
            self.violations.push(violation());
        }
    }
}

/// A structure with its classifier under one reading.
struct Ctx<'a> {
    name: String,
    h: &'a HyperRing,
    c: Classifier<'a>,
    r: Reading,
    unit: Elem,
}

impl<'a> Ctx<'a> {
    fn new(name: &str, h: &'a HyperRing, r: Reading) -> Option<Self> {
        let unit = h.unit().filter(|&u| u != h.zero())?;
        Some(Ctx { name: name.to_string(), h, c: Classifier::new(h).ok()?, r, unit })
    }

    fn nil(&self) -> ElementSet {
        self.c.lat.nilradical
    }

    fn full(&self) -> ElementSet {
        self.h.carrier()
    }

    fn ideals(&self) -> &[ElementSet] {
        &self.c.lat.ideals
    }

    fn proper(&self) -> Vec<ElementSet> {
        self.c.lat.proper().collect()
    }

    fn is_proper_ideal(&self, x: ElementSet) -> bool {
        x != self.full() && self.c.lat.is_ideal(x)
    }

    fn prime(&self, x: ElementSet) -> bool {
        self.c.lat.primes.contains(&x)
    }

    fn fmt(&self, x: ElementSet) -> String {
        self.h.format_set(x)
    }

    fn n_witness(&self, x: ElementSet) -> Option<Witness> {
        if !self.is_proper_ideal(x) {
            return None;
        }
        self.c.is_n(Hyperideal::trusted(x), self.r).ok().and_then(|v| v.witness)
    }

    fn n(&self, x: ElementSet) -> bool {
        self.is_proper_ideal(x) && self.c.is_n(Hyperideal::trusted(x), self.r).is_ok_and(|v| v.holds)
    }

    fn apply(&self, d: &ExpansionFn, x: ElementSet) -> ElementSet {
        self.c.apply(d, x).expect("standard expansions map hyperideals to hyperideals")
    }

    fn dn(&self, x: ElementSet, d: &ExpansionFn) -> bool {
        self.is_proper_ideal(x) && self.c.is_delta_n(Hyperideal::trusted(x), d, self.r).is_ok_and(|v| v.holds)
    }

    fn dn_witness(&self, x: ElementSet, d: &ExpansionFn) -> Option<Witness> {
        if !self.is_proper_ideal(x) {
            return None;
        }
        self.c.is_delta_n(Hyperideal::trusted(x), d, self.r).ok().and_then(|v| v.witness)
    }

    fn delta_primary(&self, x: ElementSet, d: &ExpansionFn) -> bool {
        self.is_proper_ideal(x) && self.c.is_delta_primary(Hyperideal::trusted(x), d).is_ok_and(|v| v.holds)
    }

    fn abs(&self, x: ElementSet, k: usize, d: &ExpansionFn) -> bool {
        self.is_proper_ideal(x) && self.c.is_kn_absorbing(Hyperideal::trusted(x), k, d, self.r).is_ok_and(|v| v.holds)
    }

    fn abs_witness(&self, x: ElementSet, k: usize, d: &ExpansionFn) -> Option<Witness> {
        if !self.is_proper_ideal(x) {
            return None;
        }
        self.c.is_kn_absorbing(Hyperideal::trusted(x), k, d, self.r).ok().and_then(|v| v.witness)
    }

    fn sn(&self, x: ElementSet, s: MultSubset) -> bool {
        self.is_proper_ideal(x)
            && x.is_disjoint(s.members())
            && self.c.is_s_n(Hyperideal::trusted(x), s, self.r).is_ok_and(|v| v.holds)
    }

    fn sn_witness(&self, x: ElementSet, s: MultSubset) -> Option<Witness> {
        if !self.is_proper_ideal(x) || !x.is_disjoint(s.members()) {
            return None;
        }
        self.c.is_s_n(Hyperideal::trusted(x), s, self.r).ok().and_then(|v| v.witness)
    }

    fn residual(&self, x: ElementSet, a: Elem) -> ElementSet {
        residual_unchecked(self.h, x, a)
    }

    fn mult_subsets(&self) -> Vec<MultSubset> {
        sampled_multiplicative_subsets(self.h, EXHAUSTIVE_SUBSETS)
    }

    fn violation(&self, ideals: Vec<ElementSet>, params: impl Into<String>, detail: impl Into<String>) -> TheoremViolation {
        TheoremViolation {
            structures: vec![self.name.clone()],
            ideals,
            params: params.into(),
            detail: detail.into(),
            witness: None,
        }
    }
}

fn with_witness(mut v: TheoremViolation, w: Option<Witness>) -> TheoremViolation {
    v.witness = w;
    v
}

fn contexts<'a>(scope: &'a [CatalogEntry], r: Reading, run: &mut Run) -> Vec<Ctx<'a>> {
    let out: Vec<Ctx> = scope.iter().filter_map(|e| Ctx::new(&e.name, &e.ring, r)).collect();
    run.structures += out.len();
    run.skipped += (scope.len() - out.len()) as u64;
    out
}

fn expansions() -> [ExpansionFn; 3] {
    ExpansionFn::standard()
}

fn meet_all(sets: &[ElementSet], full: ElementSet) -> ElementSet {
    sets.iter().fold(full, |acc, &s| acc.intersection(s))
}

/// Multisets of length `len` drawn from `items`.
fn multisets_of<T: Copy>(items: &[T], len: usize) -> Vec<Vec<T>> {
    let mut out = vec![];
    if items.is_empty() {
        return out;
    }
    let mut it = Multisets::new(items.len(), len);
    while let Some(idx) = it.next_tuple() {
        out.push(idx.iter().map(|&i| items[i]).collect());
    }
    out
}

// N-hyperideals.

fn n_within_nilradical(scope: &[CatalogEntry], r: Reading, run: &mut Run) {
    for c in contexts(scope, r, run) {
        for i in c.proper() {
            if c.n(i) {
                run.check(i.is_subset(c.nil()), || {
                    c.violation(vec![i], "", format!("N-hyperideal {} is not inside the nilradical {}", c.fmt(i), c.fmt(c.nil())))
                });
            }
        }
    }
}

fn prime_n_iff_nilradical(scope: &[CatalogEntry], r: Reading, run: &mut Run) {
    for c in contexts(scope, r, run) {
        for p in c.c.lat.primes.clone() {
            let n = c.n(p);
            run.check(n == (p == c.nil()), || {
                with_witness(
                    c.violation(vec![p], "", format!("prime {}: N is {n}, equals the nilradical is {}", c.fmt(p), p == c.nil())),
                    c.n_witness(p),
                )
            });
        }
    }
}

fn nilradical_prime_iff_n(scope: &[CatalogEntry], r: Reading, run: &mut Run) {
    for c in contexts(scope, r, run) {
        let nil = c.nil();
        let (prime, n) = (c.prime(nil), c.n(nil));
        run.check(prime == n, || {
            with_witness(c.violation(vec![nil], "", format!("nilradical prime is {prime}, N is {n}")), c.n_witness(nil))
        });
    }
}

fn principal_n_implies_all(scope: &[CatalogEntry], r: Reading, run: &mut Run) {
    'outer: for c in contexts(scope, r, run) {
        let mut all_principal_n = true;
        for a in c.h.elements() {
            let Ok(p) = generated(c.h, a) else {
                run.skipped += 1;
                continue 'outer;
            };
            let p = p.members();
            if p != c.full() && !c.n(p) {
                all_principal_n = false;
            }
        }
        if !all_principal_n {
            continue;
        }
        for i in c.proper() {
            run.check(c.n(i), || {
                with_witness(
                    c.violation(vec![i], "", format!("every proper principal hyperideal is N but {} is not", c.fmt(i))),
                    c.n_witness(i),
                )
            });
        }
    }
}

fn n_residual_characterization(scope: &[CatalogEntry], r: Reading, run: &mut Run) {
    for c in contexts(scope, r, run) {
        let outside = c.nil().complement(c.h.size());
        for i in c.proper() {
            let one = c.n(i);
            let two = outside.iter().all(|x| c.residual(i, x) == i);
            let level = c.c.ideal_level_failure(i, i, c.unit, r);
            let three = level.is_none();
            run.check(one == two && two == three, || {
                with_witness(
                    c.violation(vec![i], "", format!("{}: N {one}, residual form {two}, ideal-level form {three}", c.fmt(i))),
                    c.n_witness(i).or(level),
                )
            });
        }
    }
}

fn residual_set_n(scope: &[CatalogEntry], r: Reading, run: &mut Run) {
    for c in contexts(scope, r, run) {
        let size = c.h.size();
        for i in c.proper() {
            if !c.n(i) {
                continue;
            }
            let mut values: BTreeMap<ElementSet, (u64, ElementSet)> = BTreeMap::new();
            for bits in 1u128..(1u128 << size) {
                let t = ElementSet::from_bits(bits);
                if t.is_subset(i) {
                    continue;
                }
                let e = t.iter().fold(c.full(), |acc, x| acc.intersection(c.residual(i, x)));
                values.entry(e).or_insert((0, t)).0 += 1;
            }
            for (e, (count, t)) in values {
                run.check_many(count, c.n(e), || {
                    with_witness(
                        c.violation(
                            vec![i, e],
                            format!("T = {}", c.fmt(t)),
                            format!("E_T = {} is not an N-hyperideal", c.fmt(e)),
                        ),
                        c.n_witness(e),
                    )
                });
            }
        }
    }
}

fn n_ideals(c: &Ctx) -> Vec<ElementSet> {
    c.proper().into_iter().filter(|&i| c.n(i)).collect()
}

fn maximal_n_is_nilradical(scope: &[CatalogEntry], r: Reading, run: &mut Run) {
    for c in contexts(scope, r, run) {
        let ns = n_ideals(&c);
        for &i in &ns {
            if ns.iter().any(|&j| j != i && i.is_subset(j)) {
                continue;
            }
            run.check(i == c.nil(), || {
                c.violation(vec![i], "", format!("maximal N-hyperideal {} differs from the nilradical {}", c.fmt(i), c.fmt(c.nil())))
            });
        }
    }
}

fn n_exists_iff_nilradical_prime(scope: &[CatalogEntry], r: Reading, run: &mut Run) {
    for c in contexts(scope, r, run) {
        let ns = n_ideals(&c);
        let prime = c.prime(c.nil());
        run.check(ns.is_empty() != prime, || {
            c.violation(ns.clone(), "", format!("N-hyperideals found: {}, nilradical prime: {prime}", ns.len()))
        });
    }
}

fn n_iff_primary_below_nilradical(scope: &[CatalogEntry], r: Reading, run: &mut Run) {
    for c in contexts(scope, r, run) {
        for i in c.proper() {
            if !i.is_subset(c.nil()) {
                continue;
            }
            let (n, primary) = (c.n(i), c.delta_primary(i, &ExpansionFn::Radical));
            run.check(n == primary, || {
                with_witness(c.violation(vec![i], "", format!("{}: N {n}, primary {primary}", c.fmt(i))), c.n_witness(i))
            });
        }
    }
}

/// No product of `n` nonzero elements is zero.
fn is_domain(h: &HyperRing) -> Option<Vec<Elem>> {
    let mut it = Multisets::new(h.size(), h.n());
    while let Some(t) = it.next_tuple() {
        if h.g(t) == h.zero() && !t.contains(&h.zero()) {
            return Some(t.to_vec());
        }
    }
    None
}

fn zero_only_n_iff_domain(scope: &[CatalogEntry], r: Reading, run: &mut Run) {
    for c in contexts(scope, r, run) {
        let ns = n_ideals(&c);
        let zero = ElementSet::singleton(c.h.zero());
        let only_zero = ns == [zero];
        let zero_divisors = is_domain(c.h);
        let domain = zero_divisors.is_none();
        run.check(only_zero == domain, || {
            with_witness(
                c.violation(ns.clone(), "", format!("only {{0}} is N: {only_zero}, integral domain: {domain}")),
                zero_divisors.map(Witness::tuple),
            )
        });
    }
}

/// Unordered pairs of eligible structures with equal arities whose product
/// fits in `limit` elements and whose factors are at most `factor_limit`.
fn product_pairs<'a>(
    scope: &'a [CatalogEntry],
    r: Reading,
    limit: usize,
    factor_limit: usize,
    run: &mut Run,
) -> Vec<(&'a CatalogEntry, &'a CatalogEntry, HyperRing)> {
    let eligible: Vec<&CatalogEntry> = scope
        .iter()
        .filter(|e| Ctx::new(&e.name, &e.ring, r).is_some() && e.ring.size() <= factor_limit)
        .collect();
    let mut out = vec![];
    for (a_idx, &a) in eligible.iter().enumerate() {
        for &b in &eligible[a_idx..] {
            if a.ring.m() != b.ring.m() || a.ring.n() != b.ring.n() || a.ring.size() * b.ring.size() > limit {
                continue;
            }
            match product(&a.ring, &b.ring) {
                Ok(p) => out.push((a, b, p)),
                Err(_) => run.skipped += 1,
            }
        }
    }
    run.structures += out.len();
    out
}

fn pair_violation(a: &str, b: &str, ideals: Vec<ElementSet>, params: String, detail: String, w: Option<Witness>) -> TheoremViolation {
    TheoremViolation { structures: vec![a.to_string(), b.to_string()], ideals, params, detail, witness: w }
}

fn product_has_no_n(scope: &[CatalogEntry], r: Reading, run: &mut Run) {
    for (a, b, p) in product_pairs(scope, r, PRODUCT_LIMIT, usize::MAX, run) {
        let Some(c) = Ctx::new(p.name(), &p, r) else { continue };
        for i in c.proper() {
            let n = c.n(i);
            run.check(!n, || {
                pair_violation(&a.name, &b.name, vec![i], String::new(), format!("{} is N in the product", c.fmt(i)), None)
            });
        }
    }
}

/// A structure-preserving map between two owned structures.
struct HomCase {
    structures: Vec<String>,
    label: String,
    source: HyperRing,
    target: HyperRing,
    map: Vec<Elem>,
}

impl HomCase {
    fn hom(&self) -> Homomorphism<'_> {
        Homomorphism::new(&self.source, &self.target, self.map.clone())
    }

    fn violation(&self, ideals: Vec<ElementSet>, params: String, detail: String, w: Option<Witness>) -> TheoremViolation {
        TheoremViolation {
            structures: self.structures.clone(),
            ideals,
            params: if params.is_empty() { self.label.clone() } else { format!("{}; {params}", self.label) },
            detail,
            witness: w,
        }
    }
}

/// Unital homomorphisms between scope members, quotient projections and
/// subhyperring inclusions.
fn hom_cases(scope: &[CatalogEntry], r: Reading, run: &mut Run) -> Vec<HomCase> {
    let eligible: Vec<&CatalogEntry> = scope.iter().filter(|e| Ctx::new(&e.name, &e.ring, r).is_some()).collect();
    let mut out = vec![];
    for &a in &eligible {
        for &b in &eligible {
            if a.ring.m() != b.ring.m() || a.ring.n() != b.ring.n() {
                continue;
            }
            let Ok(maps) = homomorphisms(&a.ring, &b.ring, true) else { continue };
            for map in maps {
                let label = format!("{} -> {} map {:?}", a.name, b.name, map);
                out.push(HomCase {
                    structures: vec![a.name.clone(), b.name.clone()],
                    label,
                    source: a.ring.clone(),
                    target: b.ring.clone(),
                    map,
                });
            }
        }
        let c = Ctx::new(&a.name, &a.ring, r).expect("eligible");
        for j in c.proper() {
            match quotient(&a.ring, Hyperideal::trusted(j)) {
                Ok(q) => out.push(HomCase {
                    structures: vec![a.name.clone()],
                    label: format!("projection {} -> {}/{}", a.name, a.name, c.fmt(j)),
                    source: a.ring.clone(),
                    target: q.ring.clone(),
                    map: q.projection.clone(),
                }),
                Err(_) => run.skipped += 1,
            }
        }
        if a.ring.size() <= 16 {
            for s in subhyperrings(&a.ring) {
                if s == a.ring.carrier() {
                    continue;
                }
                if let Ok((sub, members)) = restrict(&a.ring, s) {
                    out.push(HomCase {
                        structures: vec![a.name.clone()],
                        label: format!("inclusion of {} into {}", c.fmt(s), a.name),
                        source: sub,
                        target: a.ring.clone(),
                        map: members,
                    });
                }
            }
        }
    }
    run.structures += out.len();
    out
}

fn hom_preimage_n(scope: &[CatalogEntry], r: Reading, run: &mut Run) {
    for case in hom_cases(scope, r, run) {
        let h = case.hom();
        if !h.is_injective() {
            continue;
        }
        let (Some(s), Some(t)) = (Ctx::new("source", &case.source, r), Ctx::new("target", &case.target, r)) else {
            continue;
        };
        for i2 in t.proper() {
            if !t.n(i2) {
                continue;
            }
            let pre = h.preimage_set(i2);
            run.check(s.n(pre), || {
                case.violation(
                    vec![i2, pre],
                    String::new(),
                    format!("preimage {} of N-hyperideal {} is not N", s.fmt(pre), t.fmt(i2)),
                    s.n_witness(pre),
                )
            });
        }
    }
}

fn hom_image_n(scope: &[CatalogEntry], r: Reading, run: &mut Run) {
    for case in hom_cases(scope, r, run) {
        let h = case.hom();
        if !h.is_surjective() {
            continue;
        }
        let (Some(s), Some(t)) = (Ctx::new("source", &case.source, r), Ctx::new("target", &case.target, r)) else {
            continue;
        };
        let ker = h.kernel();
        for i1 in s.proper() {
            if !ker.is_subset(i1) || !s.n(i1) {
                continue;
            }
            let img = h.image_set(i1);
            run.check(t.n(img), || {
                case.violation(
                    vec![i1, img],
                    String::new(),
                    format!("image {} of N-hyperideal {} is not a proper N-hyperideal", t.fmt(img), s.fmt(i1)),
                    t.n_witness(img),
                )
            });
        }
    }
}

fn local_set(members: &[Elem], x: ElementSet) -> ElementSet {
    members.iter().enumerate().filter(|(_, &a)| x.contains(a)).map(|(k, _)| k).collect()
}

fn subring_intersection_n(scope: &[CatalogEntry], r: Reading, run: &mut Run) {
    for c in contexts(scope, r, run) {
        if c.h.size() > 16 {
            continue;
        }
        let ns = n_ideals(&c);
        for s in subhyperrings(c.h) {
            let Ok((sub, members)) = restrict(c.h, s) else {
                run.skipped += 1;
                continue;
            };
            let Some(local) = Ctx::new("sub", &sub, r) else { continue };
            for &i in &ns {
                if s.is_subset(i) {
                    continue;
                }
                let x = local_set(&members, s.intersection(i));
                run.check(local.n(x), || {
                    with_witness(
                        c.violation(
                            vec![i, s],
                            format!("subhyperring {}", c.fmt(s)),
                            format!("{} is not N in the subhyperring", c.fmt(s.intersection(i))),
                        ),
                        local.n_witness(x),
                    )
                });
            }
        }
    }
}

fn quotients(c: &Ctx, run: &mut Run) -> Vec<(ElementSet, QuotientRing)> {
    let mut out = vec![];
    for j in c.proper() {
        match quotient(c.h, Hyperideal::trusted(j)) {
            Ok(q) => out.push((j, q)),
            Err(_) => run.skipped += 1,
        }
    }
    out
}

fn quotient_image_n(scope: &[CatalogEntry], r: Reading, run: &mut Run) {
    for c in contexts(scope, r, run) {
        for (j, q) in quotients(&c, run) {
            let Some(qc) = Ctx::new("quotient", &q.ring, r) else { continue };
            for i in c.proper() {
                if !j.is_subset(i) || !c.n(i) {
                    continue;
                }
                let x = q.project(i);
                run.check(qc.n(x), || {
                    with_witness(
                        c.violation(vec![i, j], format!("J = {}", c.fmt(j)), format!("{}/J is not N in H/J", c.fmt(i))),
                        qc.n_witness(x),
                    )
                });
            }
        }
    }
}

fn quotient_lift(scope: &[CatalogEntry], r: Reading, run: &mut Run, modulus_ok: fn(&Ctx, ElementSet) -> bool) {
    for c in contexts(scope, r, run) {
        for (j, q) in quotients(&c, run) {
            if !modulus_ok(&c, j) {
                continue;
            }
            let Some(qc) = Ctx::new("quotient", &q.ring, r) else { continue };
            for i in c.proper() {
                if !j.is_subset(i) || !qc.n(q.project(i)) {
                    continue;
                }
                run.check(c.n(i), || {
                    with_witness(
                        c.violation(vec![i, j], format!("J = {}", c.fmt(j)), format!("{}/J is N but {} is not", c.fmt(i), c.fmt(i))),
                        c.n_witness(i),
                    )
                });
            }
        }
    }
}

fn quotient_lift_n(scope: &[CatalogEntry], r: Reading, run: &mut Run) {
    quotient_lift(scope, r, run, |c, j| j.is_subset(c.nil()));
}

fn quotient_lift_via_n_modulus(scope: &[CatalogEntry], r: Reading, run: &mut Run) {
    quotient_lift(scope, r, run, |c, j| c.n(j));
}

// δ-N-hyperideals.

fn delta_primary_below_nilradical(scope: &[CatalogEntry], r: Reading, run: &mut Run) {
    for c in contexts(scope, r, run) {
        for d in expansions() {
            for i in c.proper() {
                if !i.is_subset(c.nil()) || !c.delta_primary(i, &d) {
                    continue;
                }
                run.check(c.dn(i, &d), || {
                    with_witness(
                        c.violation(vec![i], d.label(), format!("{} is {d}-primary inside the nilradical but not {d}-N", c.fmt(i))),
                        c.dn_witness(i, &d),
                    )
                });
            }
        }
    }
}

fn nilradical_delta_n_is_delta_primary(scope: &[CatalogEntry], r: Reading, run: &mut Run) {
    for c in contexts(scope, r, run) {
        let nil = c.nil();
        for d in expansions() {
            if !c.dn(nil, &d) {
                continue;
            }
            run.check(c.delta_primary(nil, &d), || {
                c.violation(vec![nil], d.label(), format!("the nilradical is {d}-N but not {d}-primary"))
            });
        }
    }
}

fn delta_n_characterization(scope: &[CatalogEntry], r: Reading, run: &mut Run) {
    for c in contexts(scope, r, run) {
        let n = c.h.n();
        let unit_set = ElementSet::singleton(c.unit);
        let lists = multisets_of(c.ideals(), n - 1);
        for d in expansions() {
            for i in c.proper() {
                let t = c.apply(&d, i);
                let one = c.dn(i, &d);
                let two = t.complement(c.h.size()).iter().all(|x| c.residual(i, x).is_subset(c.nil()));
                let three = c.h.elements().all(|x| {
                    lists.iter().all(|list| {
                        let mut sets = vec![ElementSet::singleton(x)];
                        sets.extend_from_slice(list);
                        if !c.c.set_product(&sets).is_subset(i) || c.nil().contains(x) {
                            return true;
                        }
                        sets[0] = unit_set;
                        c.c.set_product(&sets).is_subset(t)
                    })
                });
                let level = c.c.ideal_level_failure(i, t, c.unit, r);
                let four = level.is_none();
                run.check(one == two && two == three && three == four, || {
                    with_witness(
                        c.violation(
                            vec![i],
                            d.label(),
                            format!("{}: (1) {one}, (2) {two}, (3) {three}, (4) {four}", c.fmt(i)),
                        ),
                        c.dn_witness(i, &d).or(level),
                    )
                });
            }
        }
    }
}

fn residual_delta_n(scope: &[CatalogEntry], r: Reading, run: &mut Run) {
    for c in contexts(scope, r, run) {
        for d in expansions() {
            for i in c.proper() {
                if !c.dn(i, &d) {
                    continue;
                }
                let t = c.apply(&d, i);
                for x in t.complement(c.h.size()) {
                    let e = c.residual(i, x);
                    if !c.c.lat.is_ideal(e) {
                        run.check(false, || {
                            c.violation(vec![i, e], format!("{d}; x = {}", c.h.elem_name(x)), format!("E_x = {} is not a hyperideal", c.fmt(e)))
                        });
                        continue;
                    }
                    let f = c.residual(t, x);
                    if !f.is_subset(c.apply(&d, e)) {
                        continue;
                    }
                    run.check(c.dn(e, &d), || {
                        with_witness(
                            c.violation(vec![i, e], format!("{d}; x = {}", c.h.elem_name(x)), format!("E_x = {} is not {d}-N", c.fmt(e))),
                            c.dn_witness(e, &d),
                        )
                    });
                }
            }
        }
    }
}

fn delta_n_intersection(scope: &[CatalogEntry], r: Reading, run: &mut Run) {
    for c in contexts(scope, r, run) {
        for d in expansions() {
            if !is_intersection_preserving(&d, c.h).is_ok_and(|v| v.holds) {
                continue;
            }
            let dns: Vec<ElementSet> = c.proper().into_iter().filter(|&i| c.dn(i, &d)).collect();
            for list in multisets_of(&dns, c.h.n()) {
                let meet = meet_all(&list, c.full());
                run.check(c.dn(meet, &d), || {
                    with_witness(
                        c.violation(list.clone(), d.label(), format!("the intersection {} is not {d}-N", c.fmt(meet))),
                        c.dn_witness(meet, &d),
                    )
                });
            }
        }
    }
}

fn delta_n_sandwich(scope: &[CatalogEntry], r: Reading, run: &mut Run) {
    for c in contexts(scope, r, run) {
        let proper = c.proper();
        for d in expansions() {
            for &i3 in &proper {
                if !c.dn(i3, &d) {
                    continue;
                }
                let d3 = c.apply(&d, i3);
                for &i1 in proper.iter().filter(|&&i1| i1.is_subset(i3) && c.apply(&d, i1) == d3) {
                    for &i2 in proper.iter().filter(|&&i2| i1.is_subset(i2) && i2.is_subset(i3)) {
                        run.check(c.dn(i2, &d), || {
                            with_witness(
                                c.violation(vec![i1, i2, i3], d.label(), format!("{} is not {d}-N", c.fmt(i2))),
                                c.dn_witness(i2, &d),
                            )
                        });
                    }
                }
            }
        }
    }
}

fn delta_image_n_gives_delta_n(scope: &[CatalogEntry], r: Reading, run: &mut Run) {
    for c in contexts(scope, r, run) {
        for d in expansions() {
            for i in c.proper() {
                if !c.n(c.apply(&d, i)) {
                    continue;
                }
                run.check(c.dn(i, &d), || {
                    with_witness(
                        c.violation(vec![i], d.label(), format!("{d}({}) is N but {} is not {d}-N", c.fmt(i), c.fmt(i))),
                        c.dn_witness(i, &d),
                    )
                });
            }
        }
    }
}

fn radical_of_d1_n_is_n(scope: &[CatalogEntry], r: Reading, run: &mut Run) {
    for c in contexts(scope, r, run) {
        for i in c.proper() {
            if !c.dn(i, &ExpansionFn::Radical) {
                continue;
            }
            let rad = c.c.lat.radical(i);
            run.check(c.n(rad), || {
                with_witness(
                    c.violation(vec![i, rad], "d1", format!("the radical {} is not a proper N-hyperideal", c.fmt(rad))),
                    c.n_witness(rad),
                )
            });
        }
    }
}

fn local_principal_delta_primary(scope: &[CatalogEntry], r: Reading, run: &mut Run) {
    for c in contexts(scope, r, run) {
        if c.c.lat.maximals != [c.nil()] {
            continue;
        }
        for a in c.h.elements() {
            let Ok(p) = generated(c.h, a) else {
                run.skipped += 1;
                continue;
            };
            let p = p.members();
            if p == c.full() {
                continue;
            }
            for d in expansions() {
                run.check(c.delta_primary(p, &d), || {
                    c.violation(vec![p], format!("{d}; a = {}", c.h.elem_name(a)), format!("<a> = {} is not {d}-primary", c.fmt(p)))
                });
            }
        }
    }
}

fn idempotent_delta_residual(scope: &[CatalogEntry], r: Reading, run: &mut Run) {
    for c in contexts(scope, r, run) {
        for d in expansions() {
            for i in c.proper() {
                let t = c.apply(&d, i);
                if c.apply(&d, t) != t || !c.dn(i, &d) {
                    continue;
                }
                for x in c.nil().complement(c.h.size()) {
                    let e = c.residual(i, x);
                    let ok = c.c.lat.is_ideal(e) && c.apply(&d, e) == t;
                    run.check(ok, || {
                        c.violation(
                            vec![i, e],
                            format!("{d}; x = {}", c.h.elem_name(x)),
                            format!("E_x = {} and {d}(E_x) differs from {d}(I) = {}", c.fmt(e), c.fmt(t)),
                        )
                    });
                }
            }
        }
    }
}

fn maximal_delta_n_is_prime_nilradical(scope: &[CatalogEntry], r: Reading, run: &mut Run) {
    for c in contexts(scope, r, run) {
        for d in expansions() {
            let dns: Vec<ElementSet> = c.proper().into_iter().filter(|&i| c.dn(i, &d)).collect();
            for &i in &dns {
                if dns.iter().any(|&j| j != i && i.is_subset(j)) {
                    continue;
                }
                let t = c.apply(&d, i);
                for x in t.complement(c.h.size()) {
                    let e = c.residual(i, x);
                    if !c.c.lat.is_ideal(e) || !c.residual(t, x).is_subset(c.apply(&d, e)) {
                        continue;
                    }
                    run.check(i == c.nil() && c.prime(i), || {
                        c.violation(
                            vec![i],
                            format!("{d}; x = {}", c.h.elem_name(x)),
                            format!("maximal {d}-N-hyperideal {} is not the prime nilradical", c.fmt(i)),
                        )
                    });
                }
            }
        }
    }
}

fn expansion_comparison(scope: &[CatalogEntry], r: Reading, run: &mut Run) {
    for c in contexts(scope, r, run) {
        let all = expansions();
        for gamma in &all {
            for delta in &all {
                let below = c.ideals().iter().all(|&j| c.apply(gamma, j).is_subset(c.apply(delta, j)));
                let composed = ExpansionFn::compose(gamma.clone(), delta.clone());
                for i in c.proper() {
                    if below && c.dn(i, gamma) {
                        run.check(c.dn(i, delta), || {
                            with_witness(
                                c.violation(vec![i], format!("{gamma} <= {delta}"), format!("{} is {gamma}-N but not {delta}-N", c.fmt(i))),
                                c.dn_witness(i, delta),
                            )
                        });
                    }
                    let di = c.apply(delta, i);
                    if c.dn(di, gamma) {
                        run.check(c.dn(i, &composed), || {
                            with_witness(
                                c.violation(
                                    vec![i, di],
                                    composed.label(),
                                    format!("{delta}(I) = {} is {gamma}-N but I is not {composed}-N", c.fmt(di)),
                                ),
                                c.dn_witness(i, &composed),
                            )
                        });
                    }
                }
            }
        }
    }
}

fn delta_gamma_hom_transfer(scope: &[CatalogEntry], r: Reading, run: &mut Run) {
    for case in hom_cases(scope, r, run) {
        let h = case.hom();
        let (injective, surjective) = (h.is_injective(), h.is_surjective());
        if !injective && !surjective {
            continue;
        }
        let (Some(s), Some(t)) = (Ctx::new("source", &case.source, r), Ctx::new("target", &case.target, r)) else {
            continue;
        };
        let ker = h.kernel();
        for delta in expansions() {
            for gamma in expansions() {
                if !h.is_delta_gamma_hom(&delta, &gamma).is_ok_and(|v| v.holds) {
                    continue;
                }
                let params = format!("{delta}, {gamma}");
                if injective {
                    for i2 in t.proper() {
                        if !t.dn(i2, &gamma) {
                            continue;
                        }
                        let pre = h.preimage_set(i2);
                        run.check(s.dn(pre, &delta), || {
                            case.violation(
                                vec![i2, pre],
                                params.clone(),
                                format!("preimage {} is not {delta}-N", s.fmt(pre)),
                                s.dn_witness(pre, &delta),
                            )
                        });
                    }
                }
                if surjective {
                    for i1 in s.proper() {
                        if !ker.is_subset(i1) || !s.dn(i1, &delta) {
                            continue;
                        }
                        let img = h.image_set(i1);
                        run.check(t.dn(img, &gamma), || {
                            case.violation(
                                vec![i1, img],
                                params.clone(),
                                format!("image {} is not a proper {gamma}-N-hyperideal", t.fmt(img)),
                                t.dn_witness(img, &gamma),
                            )
                        });
                    }
                }
            }
        }
    }
}

fn quotient_delta_q(scope: &[CatalogEntry], r: Reading, run: &mut Run) {
    for c in contexts(scope, r, run) {
        for (j, q) in quotients(&c, run) {
            let qring = q.ring.clone();
            let Some(qc) = Ctx::new("quotient", &qring, r) else { continue };
            for d in expansions() {
                let dq = ExpansionFn::quotient_lift(d.clone(), q.clone());
                for i in c.proper() {
                    if !j.is_subset(i) || !c.dn(i, &d) {
                        continue;
                    }
                    let x = q.project(i);
                    run.check(qc.dn(x, &dq), || {
                        with_witness(
                            c.violation(vec![i, j], format!("{d}; J = {}", c.fmt(j)), format!("{}/J is not {dq}-N", c.fmt(i))),
                            qc.dn_witness(x, &dq),
                        )
                    });
                }
            }
        }
    }
}

fn radical_delta_n(scope: &[CatalogEntry], r: Reading, run: &mut Run) {
    for c in contexts(scope, r, run) {
        for d in expansions() {
            for i in c.proper() {
                if !c.dn(i, &d) {
                    continue;
                }
                let rad = c.c.lat.radical(i);
                if !c.c.lat.radical(c.apply(&d, i)).is_subset(c.apply(&d, rad)) {
                    continue;
                }
                run.check(c.dn(rad, &d), || {
                    with_witness(
                        c.violation(vec![i, rad], d.label(), format!("the radical {} is not a proper {d}-N-hyperideal", c.fmt(rad))),
                        c.dn_witness(rad, &d),
                    )
                });
            }
        }
    }
}

fn radical_intersection_preserving(scope: &[CatalogEntry], r: Reading, run: &mut Run) {
    for c in contexts(scope, r, run) {
        let v = is_intersection_preserving(&ExpansionFn::Radical, c.h).expect("radicals are hyperideals");
        let w = v.witness.clone();
        run.check(v.holds, || {
            let ideals = w.as_ref().map(|w| w.sets.clone()).unwrap_or_default();
            c.violation(ideals, "d1", "the radical of an intersection differs from the intersection of radicals")
        });
    }
}

// (k,n)-absorbing δ-N-hyperideals.

const ABSORBING_ORDERS: [usize; 2] = [2, 3];

fn absorbing_n_radical(scope: &[CatalogEntry], r: Reading, run: &mut Run) {
    for c in contexts(scope, r, run) {
        for k in ABSORBING_ORDERS {
            for i in c.proper() {
                if !c.abs(i, k, &ExpansionFn::Identity) {
                    continue;
                }
                let rad = c.c.lat.radical(i);
                for d in expansions() {
                    run.check(c.abs(rad, k, &d), || {
                        with_witness(
                            c.violation(vec![i, rad], format!("k = {k}; {d}"), format!("the radical {} is not ({k},n)-absorbing {d}-N", c.fmt(rad))),
                            c.abs_witness(rad, k, &d),
                        )
                    });
                }
            }
        }
    }
}

fn absorbing_two_to_three(scope: &[CatalogEntry], r: Reading, run: &mut Run) {
    for c in contexts(scope, r, run) {
        for d in expansions() {
            for i in c.proper() {
                let t = c.apply(&d, i);
                if !c.abs(t, 2, &ExpansionFn::Identity) {
                    continue;
                }
                run.check(c.abs(i, 3, &d), || {
                    with_witness(
                        c.violation(vec![i, t], d.label(), format!("{} is not (3,n)-absorbing {d}-N", c.fmt(i))),
                        c.abs_witness(i, 3, &d),
                    )
                });
            }
        }
    }
}

fn absorbing_delta_lift(scope: &[CatalogEntry], r: Reading, run: &mut Run) {
    for c in contexts(scope, r, run) {
        for k in ABSORBING_ORDERS {
            for d in expansions() {
                for i in c.proper() {
                    let t = c.apply(&d, i);
                    if !c.abs(t, k, &d) {
                        continue;
                    }
                    run.check(c.abs(i, k, &d), || {
                        with_witness(
                            c.violation(vec![i, t], format!("k = {k}; {d}"), format!("{} is not ({k},n)-absorbing {d}-N", c.fmt(i))),
                            c.abs_witness(i, k, &d),
                        )
                    });
                }
            }
        }
    }
}

fn delta_n_two_absorbing(scope: &[CatalogEntry], r: Reading, run: &mut Run) {
    for c in contexts(scope, r, run) {
        for d in expansions() {
            for i in c.proper() {
                if !c.dn(i, &d) {
                    continue;
                }
                run.check(c.abs(i, 2, &d), || {
                    with_witness(
                        c.violation(vec![i], d.label(), format!("{} is {d}-N but not (2,n)-absorbing {d}-N", c.fmt(i))),
                        c.abs_witness(i, 2, &d),
                    )
                });
            }
        }
    }
}

fn absorbing_monotone_in_k(scope: &[CatalogEntry], r: Reading, run: &mut Run) {
    for c in contexts(scope, r, run) {
        for d in expansions() {
            for i in c.proper() {
                if !c.abs(i, 2, &d) {
                    continue;
                }
                run.check(c.abs(i, 3, &d), || {
                    with_witness(
                        c.violation(vec![i], format!("k = 2; {d}"), format!("{} is (2,n)- but not (3,n)-absorbing {d}-N", c.fmt(i))),
                        c.abs_witness(i, 3, &d),
                    )
                });
            }
        }
    }
}

// S-N-hyperideals.

fn s_params(c: &Ctx, s: MultSubset) -> String {
    format!("S = {}", c.fmt(s.members()))
}

fn s_n_ideal_characterization(scope: &[CatalogEntry], r: Reading, run: &mut Run) {
    for c in contexts(scope, r, run) {
        if c.h.size() > EXHAUSTIVE_SUBSETS {
            continue;
        }
        for s in multiplicative_subsets(c.h) {
            for i in c.proper() {
                if !i.is_disjoint(s.members()) {
                    continue;
                }
                let element = c.sn(i, s);
                let ideal = c.c.is_s_n_ideal_level(Hyperideal::trusted(i), s, r).expect("checked preconditions");
                run.check(element == ideal.holds, || {
                    with_witness(
                        c.violation(vec![i], s_params(&c, s), format!("element form {element}, ideal form {}", ideal.holds)),
                        c.sn_witness(i, s).or(ideal.witness.clone()),
                    )
                });
            }
        }
    }
}

fn s_n_intersection(scope: &[CatalogEntry], r: Reading, run: &mut Run) {
    for c in contexts(scope, r, run) {
        for s in c.mult_subsets() {
            let sns: Vec<ElementSet> = c.proper().into_iter().filter(|&i| c.sn(i, s)).collect();
            for list in multisets_of(&sns, c.h.n()) {
                let meet = meet_all(&list, c.full());
                run.check(c.sn(meet, s), || {
                    with_witness(
                        c.violation(list.clone(), s_params(&c, s), format!("the intersection {} is not S-N", c.fmt(meet))),
                        c.sn_witness(meet, s),
                    )
                });
            }
        }
    }
}

fn s_n_from_residual(scope: &[CatalogEntry], r: Reading, run: &mut Run) {
    for c in contexts(scope, r, run) {
        for s in c.mult_subsets() {
            for i in c.proper() {
                if !i.is_disjoint(s.members()) {
                    continue;
                }
                let Some(e) = s.members().iter().find(|&x| c.n(c.residual(i, x))) else { continue };
                run.check(c.sn(i, s), || {
                    with_witness(
                        c.violation(
                            vec![i],
                            format!("{}; s = {}", s_params(&c, s), c.h.elem_name(e)),
                            format!("E_s is N but {} is not S-N", c.fmt(i)),
                        ),
                        c.sn_witness(i, s),
                    )
                });
            }
        }
    }
}

fn s_n_residual_converse(scope: &[CatalogEntry], r: Reading, run: &mut Run) {
    for c in contexts(scope, r, run) {
        for s in c.mult_subsets() {
            for i in c.proper() {
                if !c.sn(i, s) {
                    continue;
                }
                for e in s.members() {
                    if c.c.family_witness(i, i, Family::Scaled(e), r).is_some() || !c.n(c.residual(c.nil(), e)) {
                        continue;
                    }
                    let es = c.residual(i, e);
                    run.check(c.n(es), || {
                        with_witness(
                            c.violation(
                                vec![i, es],
                                format!("{}; s = {}", s_params(&c, s), c.h.elem_name(e)),
                                format!("E_s = {} is not a proper N-hyperideal", c.fmt(es)),
                            ),
                            c.n_witness(es),
                        )
                    });
                }
            }
        }
    }
}

fn s_n_subset_transfer(scope: &[CatalogEntry], r: Reading, run: &mut Run) {
    for c in contexts(scope, r, run) {
        let subsets = c.mult_subsets();
        for &big in &subsets {
            for &small in subsets.iter().filter(|s| s.members().is_subset(big.members())) {
                let linked = big
                    .members()
                    .iter()
                    .all(|x| big.members().iter().any(|y| small.members().contains(c.h.mul2(x, y))));
                if !linked {
                    continue;
                }
                for i in c.proper() {
                    if !c.sn(i, big) {
                        continue;
                    }
                    run.check(c.sn(i, small), || {
                        with_witness(
                            c.violation(
                                vec![i],
                                format!("S = {}, S' = {}", c.fmt(small.members()), c.fmt(big.members())),
                                format!("{} is S'-N but not S-N", c.fmt(i)),
                            ),
                            c.sn_witness(i, small),
                        )
                    });
                }
            }
        }
    }
}

/// Products of small factors together with everything the product S-N
/// statements quantify over.
struct ProductCase<'a> {
    a: Ctx<'a>,
    b: Ctx<'a>,
    p: Ctx<'a>,
}

fn for_each_small_product(scope: &[CatalogEntry], r: Reading, run: &mut Run, mut body: impl FnMut(&ProductCase, &mut Run)) {
    for (ea, eb, ring) in product_pairs(scope, r, PRODUCT_LIMIT, S_N_FACTOR_LIMIT, run) {
        let (Some(a), Some(b), Some(p)) =
            (Ctx::new(&ea.name, &ea.ring, r), Ctx::new(&eb.name, &eb.ring, r), Ctx::new(ring.name(), &ring, r))
        else {
            continue;
        };
        body(&ProductCase { a, b, p }, run);
    }
}

impl ProductCase<'_> {
    fn set(&self, x: ElementSet, y: ElementSet) -> ElementSet {
        product_set(self.b.h, x, y)
    }

    fn params(&self, s1: MultSubset, s2: MultSubset) -> String {
        format!("S1 = {}, S2 = {}", self.a.fmt(s1.members()), self.b.fmt(s2.members()))
    }

    fn violation(&self, ideals: Vec<ElementSet>, params: String, detail: String, w: Option<Witness>) -> TheoremViolation {
        pair_violation(&self.a.name, &self.b.name, ideals, params, detail, w)
    }
}

fn product_s_n_whole_factor(scope: &[CatalogEntry], r: Reading, run: &mut Run) {
    for_each_small_product(scope, r, run, |pc, run| {
        for s1 in multiplicative_subsets(pc.a.h) {
            for s2 in multiplicative_subsets(pc.b.h) {
                let s = MultSubset::new(pc.p.h, pc.set(s1.members(), s2.members()));
                let Ok(s) = s else {
                    run.check(false, || {
                        pc.violation(vec![], pc.params(s1, s2), "S1 x S2 is not multiplicative".into(), None)
                    });
                    continue;
                };
                for i1 in pc.a.proper() {
                    let x = pc.set(i1, pc.b.full());
                    let lhs = pc.p.sn(x, s);
                    let rhs = pc.a.sn(i1, s1) && !s2.members().is_disjoint(pc.b.nil());
                    run.check(lhs == rhs, || {
                        pc.violation(
                            vec![i1],
                            pc.params(s1, s2),
                            format!("I1 = {}: I1 x H2 S-N {lhs}, factor condition {rhs}", pc.a.fmt(i1)),
                            pc.p.sn_witness(x, s),
                        )
                    });
                }
                for i2 in pc.b.proper() {
                    let x = pc.set(pc.a.full(), i2);
                    let lhs = pc.p.sn(x, s);
                    let rhs = pc.b.sn(i2, s2) && !s1.members().is_disjoint(pc.a.nil());
                    run.check(lhs == rhs, || {
                        pc.violation(
                            vec![i2],
                            pc.params(s1, s2),
                            format!("I2 = {}: H1 x I2 S-N {lhs}, factor condition {rhs}", pc.b.fmt(i2)),
                            pc.p.sn_witness(x, s),
                        )
                    });
                }
            }
        }
    });
}

fn product_s_n_proper_factors(scope: &[CatalogEntry], r: Reading, run: &mut Run) {
    for_each_small_product(scope, r, run, |pc, run| {
        for s1 in multiplicative_subsets(pc.a.h) {
            for s2 in multiplicative_subsets(pc.b.h) {
                let Ok(s) = MultSubset::new(pc.p.h, pc.set(s1.members(), s2.members())) else { continue };
                let first_nil = !s1.members().is_disjoint(pc.a.nil());
                let second_nil = !s2.members().is_disjoint(pc.b.nil());
                for i1 in pc.a.proper() {
                    for i2 in pc.b.proper() {
                        let case1 = second_nil && pc.a.sn(i1, s1);
                        let case2 = first_nil && pc.b.sn(i2, s2);
                        if !case1 && !case2 {
                            continue;
                        }
                        let x = pc.set(i1, i2);
                        run.check(pc.p.sn(x, s), || {
                            pc.violation(
                                vec![i1, i2],
                                pc.params(s1, s2),
                                format!("{} x {} is not S1 x S2-N", pc.a.fmt(i1), pc.b.fmt(i2)),
                                pc.p.sn_witness(x, s),
                            )
                        });
                    }
                }
            }
        }
    });
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::harness::catalog::{builtin_catalog, z12_mod_units, Provenance};

    fn z12_scope() -> Vec<CatalogEntry> {
        vec![CatalogEntry::new(z12_mod_units(), Provenance::Hyperstructure, "")]
    }

    #[test]
    fn ids_are_unique() {
        let mut ids = theorem_ids();
        let len = ids.len();
        ids.sort_unstable();
        ids.dedup();
        assert_eq!(ids.len(), len);
    }

    #[test]
    fn unknown_id_is_an_error() {
        assert_eq!(
            verify_theorem("no-such", &[], Reading::Strict).unwrap_err(),
            Error::UnknownTheorem("no-such".into())
        );
    }

    #[test]
    fn empty_scope_is_vacuous() {
        for id in theorem_ids() {
            assert_eq!(verify_theorem(id, &[], Reading::Strict).unwrap().status, Status::Vacuous, "{id}");
        }
    }

    #[test]
    fn nilradical_bound_on_z12() {
        let scope = z12_scope();
        let strict = verify_theorem("n-within-nilradical", &scope, Reading::Strict).unwrap();
        assert_eq!(strict.status, Status::Vacuous);
        let lax = verify_theorem("n-within-nilradical", &scope, Reading::Lax).unwrap();
        assert_eq!(lax.status, Status::Fail);
        let h = z12_mod_units();
        let even = h.set_from_names(&["c0", "c2", "c4", "c6"]).unwrap();
        assert!(lax.violations.iter().any(|v| v.ideals == vec![even]));
        for v in &lax.violations {
            assert!(replay_violation("n-within-nilradical", &scope, Reading::Lax, v).unwrap());
        }
    }

    #[test]
    fn existence_is_a_biconditional_on_z12() {
        let r = verify_theorem("n-exists-iff-nilradical-prime", &z12_scope(), Reading::Strict).unwrap();
        assert_eq!((r.status, r.instances), (Status::Pass, 1));
    }

    #[test]
    fn classical_rings_pass_the_nilradical_statements() {
        let scope: Vec<CatalogEntry> =
            builtin_catalog().into_iter().filter(|e| e.provenance == Provenance::ClassicalRing).collect();
        for id in ["n-within-nilradical", "prime-n-iff-nilradical", "zero-only-n-iff-domain"] {
            let r = verify_theorem(id, &scope, Reading::Strict).unwrap();
            assert_ne!(r.status, Status::Fail, "{id}: {:?}", r.violations);
        }
    }
}
