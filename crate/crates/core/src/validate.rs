//! Exhaustive checking of the hyperring axioms.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::ring::HyperRing;
use crate::set::{Elem, ElementSet};
use crate::tuples::Tuples;

/// One checkable family of axiom instances.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Axiom {
    /// `f` is invariant under permuting its arguments.
    FSymmetry,
    /// The nested evaluations of `f` over `2m-1` arguments agree.
    FAssociativity,
    /// `f(a, 0^(m-1)) = {a}`.
    FIdentity,
    /// No element other than 0 behaves as an additive identity.
    IdentityUnique,
    /// `neg(0) = 0`.
    ZeroSelfInverse,
    /// `0 ∈ f(a, neg(a), 0^(m-2))`.
    FInverse,
    /// `neg(a)` is the only partner of `a` whose sum with it contains 0.
    InverseUnique,
    /// `neg(neg(a)) = a`.
    NegInvolution,
    /// `a ∈ f(a_1..a_m)` implies `a_i ∈ f(a, neg of the others)`.
    Reversibility,
    GSymmetry,
    GAssociativity,
    /// `g` distributes over `f` in every position.
    Distributivity,
    /// Any product with a zero factor is zero.
    ZeroAbsorbing,
    /// `g(a, 1^(n-1)) = a` for the declared unit.
    UnitIdentity,
}

impl Axiom {
    pub const ALL: [Axiom; 14] = [
        Axiom::FSymmetry,
        Axiom::FAssociativity,
        Axiom::FIdentity,
        Axiom::IdentityUnique,
        Axiom::ZeroSelfInverse,
        Axiom::FInverse,
        Axiom::InverseUnique,
        Axiom::NegInvolution,
        Axiom::Reversibility,
        Axiom::GSymmetry,
        Axiom::GAssociativity,
        Axiom::Distributivity,
        Axiom::ZeroAbsorbing,
        Axiom::UnitIdentity,
    ];

    pub fn label(self) -> &'static str {
        match self {
            Axiom::FSymmetry => "f-symmetry",
            Axiom::FAssociativity => "f-associativity",
            Axiom::FIdentity => "f-identity",
            Axiom::IdentityUnique => "identity-unique",
            Axiom::ZeroSelfInverse => "zero-self-inverse",
            Axiom::FInverse => "f-inverse",
            Axiom::InverseUnique => "inverse-unique",
            Axiom::NegInvolution => "neg-involution",
            Axiom::Reversibility => "reversibility",
            Axiom::GSymmetry => "g-symmetry",
            Axiom::GAssociativity => "g-associativity",
            Axiom::Distributivity => "distributivity",
            Axiom::ZeroAbsorbing => "zero-absorbing",
            Axiom::UnitIdentity => "unit-identity",
        }
    }
}

impl fmt::Display for Axiom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

/// The lexicographically first failing instance of an axiom.
///
/// The layout of `witness` depends on the axiom:
/// - symmetry, zero absorption: the argument tuple;
/// - associativity: the `2k-1` arguments, with `position` the inner start index;
/// - identity, inverse, involution, unit: `[a]`; inverse uniqueness `[a, b]`;
/// - reversibility: the `m` arguments followed by the member `a`, with `position` = `i`;
/// - distributivity: the `n-1` fixed factors followed by the `m` summands,
///   with `position` the slot the sum occupies.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Violation {
    pub axiom: Axiom,
    pub witness: Vec<Elem>,
    pub position: Option<usize>,
    pub expected: ElementSet,
    pub actual: ElementSet,
    /// Number of failing instances of this axiom.
    pub occurrences: usize,
}

impl Violation {
    /// Re-evaluate the recorded instance; true iff it still fails on `h`.
    pub fn replay(&self, h: &HyperRing) -> bool {
        instance(h, self.axiom, &self.witness, self.position).is_some()
    }

    pub fn describe(&self, h: &HyperRing) -> String {
        let mut s = format!("{}: {}", self.axiom, h.format_tuple(&self.witness));
        if let Some(p) = self.position {
            s.push_str(&format!(" at {}", p + 1));
        }
        s.push_str(&format!(
            " expected {} got {}",
            h.format_set(self.expected),
            h.format_set(self.actual)
        ));
        if self.occurrences > 1 {
            s.push_str(&format!(" ({} instances)", self.occurrences));
        }
        s
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ValidationReport {
    pub violations: Vec<Violation>,
}

impl ValidationReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn violation(&self, axiom: Axiom) -> Option<&Violation> {
        self.violations.iter().find(|v| v.axiom == axiom)
    }
}

/// Evaluate one axiom instance. Returns `(expected, actual)` when it fails.
pub fn instance(
    h: &HyperRing,
    axiom: Axiom,
    w: &[Elem],
    position: Option<usize>,
) -> Option<(ElementSet, ElementSet)> {
    let (m, n, zero) = (h.m(), h.n(), h.zero());
    let single = ElementSet::singleton;
    let check = |expected: ElementSet, actual: ElementSet| (expected != actual).then_some((expected, actual));
    match axiom {
        Axiom::FSymmetry => {
            let mut sorted = w.to_vec();
            sorted.sort_unstable();
            check(h.f(&sorted), h.f(w))
        }
        Axiom::GSymmetry => {
            let mut sorted = w.to_vec();
            sorted.sort_unstable();
            check(single(h.g(&sorted)), single(h.g(w)))
        }
        Axiom::FAssociativity => {
            let i = position?;
            let left = h.f_sets(&lift_nested(h.f(&w[..m]), &w[m..], 0));
            let inner = h.f(&w[i..i + m]);
            let mut rest: Vec<Elem> = w[..i].to_vec();
            rest.extend_from_slice(&w[i + m..]);
            let right = h.f_sets(&lift_nested(inner, &rest, i));
            check(left, right)
        }
        Axiom::GAssociativity => {
            let i = position?;
            let mut outer = vec![h.g(&w[..n])];
            outer.extend_from_slice(&w[n..]);
            let left = h.g(&outer);
            let mut alt = w[..i].to_vec();
            alt.push(h.g(&w[i..i + n]));
            alt.extend_from_slice(&w[i + n..]);
            check(single(left), single(h.g(&alt)))
        }
        Axiom::FIdentity => {
            let mut t = vec![zero; m];
            t[0] = w[0];
            check(single(w[0]), h.f(&t))
        }
        Axiom::IdentityUnique => {
            let e = w[0];
            if e == zero {
                return None;
            }
            let mut t = vec![e; m];
            let acts = h.elements().all(|a| {
                t[0] = a;
                h.f(&t) == single(a)
            });
            acts.then_some((single(zero), single(zero).with(e)))
        }
        Axiom::ZeroSelfInverse => check(single(zero), single(h.neg(zero))),
        Axiom::FInverse => {
            let mut t = vec![zero; m];
            t[0] = w[0];
            t[1] = h.neg(w[0]);
            let v = h.f(&t);
            (!v.contains(zero)).then_some((v.with(zero), v))
        }
        Axiom::InverseUnique => {
            let (a, b) = (w[0], w[1]);
            if b == h.neg(a) {
                return None;
            }
            let mut t = vec![zero; m];
            t[0] = a;
            t[1] = b;
            let v = h.f(&t);
            v.contains(zero).then_some((v.difference(single(zero)), v))
        }
        Axiom::NegInvolution => check(single(w[0]), single(h.neg(h.neg(w[0])))),
        Axiom::Reversibility => {
            let i = position?;
            let (args, a) = (&w[..m], w[m]);
            if !h.f(args).contains(a) {
                return None;
            }
            let mut t = Vec::with_capacity(m);
            t.push(a);
            t.extend(args.iter().enumerate().filter(|&(j, _)| j != i).map(|(_, &x)| h.neg(x)));
            let v = h.f(&t);
            (!v.contains(args[i])).then_some((v.with(args[i]), v))
        }
        Axiom::Distributivity => {
            let i = position?;
            let (fixed, xs) = (&w[..n - 1], &w[n - 1..]);
            let mut t = Vec::with_capacity(n);
            t.extend_from_slice(&fixed[..i]);
            t.push(0);
            t.extend_from_slice(&fixed[i..]);
            let left: ElementSet = h.f(xs).iter().map(|s| h.g_replace(&t, i, s)).collect();
            let products: Vec<Elem> = xs.iter().map(|&x| h.g_replace(&t, i, x)).collect();
            check(left, h.f(&products))
        }
        Axiom::ZeroAbsorbing => {
            if !w.contains(&zero) {
                return None;
            }
            check(single(zero), single(h.g(w)))
        }
        Axiom::UnitIdentity => {
            let u = h.unit()?;
            let mut t = vec![u; n];
            t[0] = w[0];
            check(single(w[0]), single(h.g(&t)))
        }
    }
}

/// Arguments for an outer `f` where `inner` sits at slot `at` among `rest`.
fn lift_nested(inner: ElementSet, rest: &[Elem], at: usize) -> Vec<ElementSet> {
    let mut out: Vec<ElementSet> = rest.iter().map(|&x| ElementSet::singleton(x)).collect();
    out.insert(at, inner);
    out
}

/// Witness tuple length and the positions checked for each axiom.
fn domain(h: &HyperRing, axiom: Axiom) -> (usize, Vec<Option<usize>>) {
    let (m, n) = (h.m(), h.n());
    match axiom {
        Axiom::FSymmetry => (m, vec![None]),
        Axiom::GSymmetry | Axiom::ZeroAbsorbing => (n, vec![None]),
        Axiom::FAssociativity => (2 * m - 1, (1..m).map(Some).collect()),
        Axiom::GAssociativity => (2 * n - 1, (1..n).map(Some).collect()),
        Axiom::ZeroSelfInverse => (1, vec![None]),
        Axiom::FIdentity | Axiom::IdentityUnique | Axiom::FInverse | Axiom::NegInvolution | Axiom::UnitIdentity => {
            (1, vec![None])
        }
        Axiom::InverseUnique => (2, vec![None]),
        Axiom::Reversibility => (m + 1, (0..m).map(Some).collect()),
        Axiom::Distributivity => (n - 1 + m, (0..n).map(Some).collect()),
    }
}

/// Check every axiom instance exhaustively.
///
/// Each failing axiom appears once, with its lexicographically first witness
/// (tuple order, then position) and the total number of failing instances.
pub fn validate_axioms(h: &HyperRing) -> ValidationReport {
    let violations = Axiom::ALL.iter().filter_map(|&ax| first_violation(h, ax)).collect();
    ValidationReport { violations }
}

fn first_violation(h: &HyperRing, axiom: Axiom) -> Option<Violation> {
    if axiom == Axiom::UnitIdentity && h.unit().is_none() {
        return None;
    }
    if axiom == Axiom::ZeroSelfInverse {
        let w = [h.zero()];
        return instance(h, axiom, &w, None).map(|(expected, actual)| Violation {
            axiom,
            witness: w.to_vec(),
            position: None,
            expected,
            actual,
            occurrences: 1,
        });
    }
    let (len, positions) = domain(h, axiom);
    let mut first: Option<Violation> = None;
    let mut count = 0;
    let mut it = Tuples::new(h.size(), len);
    while let Some(t) = it.next_tuple() {
        for &p in &positions {
            if let Some((expected, actual)) = instance(h, axiom, t, p) {
                count += 1;
                if first.is_none() {
                    first = Some(Violation {
                        axiom,
                        witness: t.to_vec(),
                        position: p,
                        expected,
                        actual,
                        occurrences: 0,
                    });
                }
            }
        }
    }
    first.map(|v| Violation { occurrences: count, ..v })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::harness::catalog;

    #[test]
    fn catalog_entries_validate() {
        for entry in catalog::builtin_catalog() {
            let report = validate_axioms(&entry.ring);
            assert!(report.passed(), "{}: {:?}", entry.name, report.violations);
        }
    }

    #[test]
    fn altered_double_six_breaks_inverse() {
        let h = catalog::z12_mod_units();
        let (c1, c6) = (h.elem_by_name("c1").unwrap(), h.elem_by_name("c6").unwrap());
        let bad = h.with_f_cell(&[c6, c6], ElementSet::singleton(c1));
        let report = validate_axioms(&bad);
        let v = report.violation(Axiom::FInverse).expect("inverse violation");
        assert_eq!(v.witness, vec![c6]);
        assert!(v.replay(&bad));
        assert!(!v.replay(&h));
    }

    #[test]
    fn variant_ternary_tables_fail_distributivity() {
        let h = catalog::ternary_variant();
        let report = validate_axioms(&h);
        assert_eq!(report.violations.len(), 1, "{:?}", report.violations);
        let v = &report.violations[0];
        assert_eq!(v.axiom, Axiom::Distributivity);
        assert!(v.replay(&h));
    }

    #[test]
    fn relabeled_catalog_still_validates() {
        for entry in catalog::builtin_catalog() {
            let size = entry.ring.size();
            let perm: Vec<usize> = (0..size).rev().collect();
            assert!(validate_axioms(&entry.ring.relabel(&perm)).passed(), "{}", entry.name);
        }
    }

    #[test]
    fn missing_unit_identity_is_reported() {
        let h = catalog::zn(4).with_unit(Some(2));
        let v = validate_axioms(&h);
        assert_eq!(v.violations.len(), 1);
        assert_eq!(v.violations[0].axiom, Axiom::UnitIdentity);
    }
}
