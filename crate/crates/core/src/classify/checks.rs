//! The N-family classifiers.

use crate::classify::expansion::{expansion_apply_set, ExpansionFn};
use crate::error::{Error, Result};
use crate::ideals::{drop_witness, Hyperideal, Lattice};
use crate::ring::HyperRing;
use crate::set::{Elem, ElementSet};
use crate::tuples::{index_subsets, Multisets};
use crate::verdict::{Reading, Verdict, Witness};

/// A nonempty subset closed under `g`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct MultSubset(ElementSet);

impl MultSubset {
    pub fn new(h: &HyperRing, s: ElementSet) -> Result<Self> {
        if s.is_empty() {
            return Err(Error::EmptySet);
        }
        if let Some(e) = s.difference(h.carrier()).first() {
            return Err(Error::ElementOutOfRange(e));
        }
        match multiplicative_witness(h, s) {
            None => Ok(MultSubset(s)),
            Some(t) => Err(Error::NotMultiplicative(format!(
                "{} maps to {}",
                h.format_tuple(&t),
                h.elem_name(h.g(&t))
            ))),
        }
    }

    pub fn members(self) -> ElementSet {
        self.0
    }
}

fn multiplicative_witness(h: &HyperRing, s: ElementSet) -> Option<Vec<Elem>> {
    let members: Vec<Elem> = s.iter().collect();
    let mut it = Multisets::new(members.len(), h.n());
    while let Some(idx) = it.next_tuple() {
        let t: Vec<Elem> = idx.iter().map(|&i| members[i]).collect();
        if !s.contains(h.g(&t)) {
            return Some(t);
        }
    }
    None
}

/// Every multiplicative subset, ordered by cardinality then bitmask.
pub fn multiplicative_subsets(h: &HyperRing) -> Vec<MultSubset> {
    assert!(h.size() <= 16, "subset search is exponential");
    let mut out: Vec<ElementSet> = (1u128..(1u128 << h.size()))
        .map(ElementSet::from_bits)
        .filter(|&s| multiplicative_witness(h, s).is_none())
        .collect();
    out.sort_by(ElementSet::canonical_cmp);
    out.into_iter().map(MultSubset).collect()
}

/// The smallest multiplicative subset containing `a`.
pub fn multiplicative_closure(h: &HyperRing, a: Elem) -> MultSubset {
    let mut s = ElementSet::singleton(a);
    loop {
        let members: Vec<Elem> = s.iter().collect();
        let mut next = s;
        let mut it = Multisets::new(members.len(), h.n());
        while let Some(idx) = it.next_tuple() {
            let t: Vec<Elem> = idx.iter().map(|&i| members[i]).collect();
            next.insert(h.g(&t));
        }
        if next == s {
            return MultSubset(s);
        }
        s = next;
    }
}

/// Multiplicative subsets used for a structure: all of them on carriers up
/// to `exhaustive_limit`, otherwise `{1}` and the closures of single elements.
pub fn sampled_multiplicative_subsets(h: &HyperRing, exhaustive_limit: usize) -> Vec<MultSubset> {
    if h.size() <= exhaustive_limit {
        return multiplicative_subsets(h);
    }
    let mut out: Vec<ElementSet> = h.elements().map(|a| multiplicative_closure(h, a).0).collect();
    if let Some(u) = h.unit() {
        out.push(ElementSet::singleton(u));
    }
    out.sort_by(ElementSet::canonical_cmp);
    out.dedup();
    out.into_iter().map(MultSubset).collect()
}

/// Which condition a tuple check evaluates.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Family {
    /// Qualifying index: `x_i ∉ √0`; drop-product replaces `x_i` by 1.
    Plain,
    /// Qualifying index: `g(s, x_i, 1^(n-2)) ∉ √0`; drop-product replaces `x_i` by `s`.
    Scaled(Elem),
}

/// A structure with its hyperideal lattice, shared by the checks.
#[derive(Debug, Clone)]
pub struct Classifier<'a> {
    pub h: &'a HyperRing,
    pub lat: Lattice,
    unit: Elem,
}

impl<'a> Classifier<'a> {
    pub fn new(h: &'a HyperRing) -> Result<Self> {
        let unit = h.require_unit("classification")?;
        Ok(Classifier { h, lat: Lattice::new(h), unit })
    }

    pub fn nilradical(&self) -> ElementSet {
        self.lat.nilradical
    }

    pub fn apply(&self, delta: &ExpansionFn, i: ElementSet) -> Result<ElementSet> {
        expansion_apply_set(delta, self.h, &self.lat, i)
    }

    fn require(&self, i: Hyperideal) -> Result<ElementSet> {
        let x = i.members();
        if x == self.h.carrier() {
            return Err(Error::NotProper);
        }
        if !self.lat.is_ideal(x) {
            return Err(Error::NotHyperideal(self.h.format_set(x)));
        }
        Ok(x)
    }

    fn qualifies(&self, family: Family, x: Elem) -> bool {
        match family {
            Family::Plain => !self.lat.nilradical.contains(x),
            Family::Scaled(s) => !self.lat.nilradical.contains(self.h.mul2(s, x)),
        }
    }

    fn drop(&self, family: Family, t: &[Elem], k: usize) -> Elem {
        let r = match family {
            Family::Plain => self.unit,
            Family::Scaled(s) => s,
        };
        self.h.g_replace(t, k, r)
    }

    /// The failure of one tuple, if any: `Some(Some(k))` names the failing index
    /// under Strict, `Some(None)` a Lax failure. Tuples with product outside
    /// `within` never fail.
    pub fn tuple_failure(
        &self,
        within: ElementSet,
        target: ElementSet,
        family: Family,
        reading: Reading,
        t: &[Elem],
    ) -> Option<Option<usize>> {
        if !within.contains(self.h.g(t)) {
            return None;
        }
        let mut any_qualifying = false;
        for k in 0..t.len() {
            if !self.qualifies(family, t[k]) {
                continue;
            }
            any_qualifying = true;
            let ok = target.contains(self.drop(family, t, k));
            match reading {
                Reading::Strict if !ok => return Some(Some(k)),
                Reading::Lax if ok => return None,
                _ => {}
            }
        }
        (reading == Reading::Lax && any_qualifying).then_some(None)
    }

    /// First failing tuple, scanning multisets in lexicographic order. By
    /// symmetry of `g` this is also the first failing ordered tuple.
    pub fn family_witness(
        &self,
        within: ElementSet,
        target: ElementSet,
        family: Family,
        reading: Reading,
    ) -> Option<Witness> {
        let mut it = Multisets::new(self.h.size(), self.h.n());
        while let Some(t) = it.next_tuple() {
            if let Some(k) = self.tuple_failure(within, target, family, reading, t) {
                return Some(Witness { tuple: t.to_vec(), positions: k.into_iter().collect(), sets: vec![] });
            }
        }
        None
    }

    /// Replay a recorded failure of the N-family condition.
    pub fn replay_family(
        &self,
        within: ElementSet,
        target: ElementSet,
        family: Family,
        reading: Reading,
        w: &Witness,
    ) -> bool {
        if w.tuple.len() != self.h.n() {
            return false;
        }
        if !within.contains(self.h.g(&w.tuple)) {
            return false;
        }
        match (reading, w.positions.as_slice()) {
            (Reading::Strict, &[k]) if k < w.tuple.len() => {
                self.qualifies(family, w.tuple[k]) && !target.contains(self.drop(family, &w.tuple, k))
            }
            (Reading::Lax, &[]) => self.tuple_failure(within, target, family, reading, &w.tuple).is_some(),
            _ => false,
        }
    }

    pub fn is_n(&self, i: Hyperideal, reading: Reading) -> Result<Verdict> {
        let x = self.require(i)?;
        Ok(Verdict::from_witness(Some(reading), self.family_witness(x, x, Family::Plain, reading)))
    }

    pub fn is_delta_n(&self, i: Hyperideal, delta: &ExpansionFn, reading: Reading) -> Result<Verdict> {
        let x = self.require(i)?;
        let target = self.apply(delta, x)?;
        Ok(Verdict::from_witness(Some(reading), self.family_witness(x, target, Family::Plain, reading)))
    }

    /// δ-primary: a product in `I` with a factor outside `I` has that factor's
    /// drop-product in `δ(I)`.
    pub fn is_delta_primary(&self, i: Hyperideal, delta: &ExpansionFn) -> Result<Verdict> {
        let x = self.require(i)?;
        let target = self.apply(delta, x)?;
        Ok(Verdict::from_witness(None, drop_witness(self.h, x, target)))
    }

    pub fn is_primary(&self, i: Hyperideal) -> Result<Verdict> {
        self.is_delta_primary(i, &ExpansionFn::Radical)
    }

    pub fn is_prime(&self, i: Hyperideal) -> Result<Verdict> {
        let x = self.require(i)?;
        if self.lat.primes.contains(&x) {
            return Ok(Verdict::pass(None));
        }
        crate::ideals::is_prime(self.h, i)
    }

    pub fn is_maximal(&self, i: Hyperideal) -> Result<Verdict> {
        let x = self.require(i)?;
        let between = self.lat.proper().find(|&j| j != x && x.is_subset(j));
        Ok(Verdict::from_witness(None, between.map(|j| Witness::sets(vec![j]))))
    }

    /// `(k,n)`-absorbing δ-N.
    ///
    /// For `K = k(n-1)+1` factors with product in `I`, a designated set `D` of
    /// `L = (k-1)(n-1)+1` positions is acceptable when `g(a_D) ∈ √0` or some other
    /// `L`-subset has product in `δ(I)`. Strict requires every designated `D`
    /// to be acceptable (the definition quantified over all orderings); Lax
    /// requires one. The witness holds the factors and, under Strict, the
    /// designated positions.
    pub fn is_kn_absorbing(&self, i: Hyperideal, k: usize, delta: &ExpansionFn, reading: Reading) -> Result<Verdict> {
        if k < 2 {
            return Err(Error::AbsorbingOrder(k));
        }
        let x = self.require(i)?;
        let target = self.apply(delta, x)?;
        let n = self.h.n();
        let (big, small) = (k * (n - 1) + 1, (k - 1) * (n - 1) + 1);
        let subsets = index_subsets(big, small);
        let mut prods = vec![0; subsets.len()];
        let mut buf = Vec::with_capacity(small);
        let mut it = Multisets::new(self.h.size(), big);
        while let Some(a) = it.next_tuple() {
            if !x.contains(self.h.g_fold(a)) {
                continue;
            }
            for (j, d) in subsets.iter().enumerate() {
                buf.clear();
                buf.extend(d.iter().map(|&p| a[p]));
                prods[j] = self.h.g_fold(&buf);
            }
            let hits = prods.iter().filter(|&&p| target.contains(p)).count();
            let acceptable =
                |j: usize| self.lat.nilradical.contains(prods[j]) || hits > usize::from(target.contains(prods[j]));
            let failure = match reading {
                Reading::Strict => (0..subsets.len()).find(|&j| !acceptable(j)).map(|j| subsets[j].clone()),
                Reading::Lax => (!(0..subsets.len()).any(acceptable)).then(Vec::new),
            };
            if let Some(positions) = failure {
                return Ok(Verdict::fail(Some(reading), Witness { tuple: a.to_vec(), positions, sets: vec![] }));
            }
        }
        Ok(Verdict::pass(Some(reading)))
    }

    /// Replay an absorbing-check witness; true iff it is a genuine failure.
    pub fn replay_absorbing(&self, i: ElementSet, k: usize, target: ElementSet, reading: Reading, w: &Witness) -> bool {
        let n = self.h.n();
        let (big, small) = (k * (n - 1) + 1, (k - 1) * (n - 1) + 1);
        if w.tuple.len() != big || !i.contains(self.h.g_fold(&w.tuple)) {
            return false;
        }
        let prod = |d: &[usize]| self.h.g_fold(&d.iter().map(|&p| w.tuple[p]).collect::<Vec<_>>());
        let subsets = index_subsets(big, small);
        let acceptable = |d: &[usize]| {
            self.lat.nilradical.contains(prod(d)) || subsets.iter().any(|e| e != d && target.contains(prod(e)))
        };
        match reading {
            Reading::Strict => w.positions.len() == small && !acceptable(&w.positions),
            Reading::Lax => subsets.iter().all(|d| !acceptable(d)),
        }
    }

    /// S-N: some `s ∈ S` makes the scaled condition hold. The S-element is the
    /// first such `s` in carrier order; on failure the witness is the one
    /// found for the first element of `S`.
    pub fn is_s_n(&self, i: Hyperideal, s: MultSubset, reading: Reading) -> Result<Verdict> {
        let x = self.require(i)?;
        if !x.is_disjoint(s.0) {
            return Err(Error::NotDisjoint);
        }
        let mut first_witness = None;
        for e in s.0 {
            match self.family_witness(x, x, Family::Scaled(e), reading) {
                None => {
                    return Ok(Verdict { holds: true, reading: Some(reading), witness: None, s_element: Some(e) });
                }
                Some(w) => {
                    first_witness.get_or_insert(w);
                }
            }
        }
        Ok(Verdict::fail(Some(reading), first_witness.expect("S is nonempty")))
    }

    /// The ideal-level form of the S-N condition: some `s ∈ S` such that for all
    /// hyperideals `I_1..I_n` with `g(I_1..I_n) ⊆ I`, each index `i` either has
    /// `g(s, I_i, 1^(n-2)) ⊆ √0` or `g(I_1..s..I_n) ⊆ I` (Strict: every index;
    /// Lax: all indices of the first kind, or one qualifying index of the second).
    pub fn is_s_n_ideal_level(&self, i: Hyperideal, s: MultSubset, reading: Reading) -> Result<Verdict> {
        let x = self.require(i)?;
        if !x.is_disjoint(s.0) {
            return Err(Error::NotDisjoint);
        }
        let mut first_witness = None;
        for e in s.0 {
            match self.ideal_level_failure(x, x, e, reading) {
                None => return Ok(Verdict { holds: true, reading: Some(reading), witness: None, s_element: Some(e) }),
                Some(w) => {
                    first_witness.get_or_insert(w);
                }
            }
        }
        Ok(Verdict::fail(Some(reading), first_witness.expect("S is nonempty")))
    }

    /// First hyperideal list `I_1..I_n` (as a multiset of the lattice) with
    /// `g(I_1..I_n) ⊆ within` that breaks the scaled ideal-level condition with
    /// drop target `target`. With `s = 1` this is the ideal-level N condition.
    pub fn ideal_level_failure(&self, within: ElementSet, target: ElementSet, s: Elem, reading: Reading) -> Option<Witness> {
        let ideals = &self.lat.ideals;
        let n = self.h.n();
        let mut it = Multisets::new(ideals.len(), n);
        while let Some(idx) = it.next_tuple() {
            let sets: Vec<ElementSet> = idx.iter().map(|&j| ideals[j]).collect();
            if !self.set_product(&sets).is_subset(within) {
                continue;
            }
            let mut any_qualifying = false;
            let mut bad = None;
            let mut good = false;
            for k in 0..n {
                let scaled: ElementSet = sets[k].iter().map(|y| self.h.mul2(s, y)).collect();
                if scaled.is_subset(self.lat.nilradical) {
                    continue;
                }
                any_qualifying = true;
                let mut dropped = sets.clone();
                dropped[k] = ElementSet::singleton(s);
                if self.set_product(&dropped).is_subset(target) {
                    good = true;
                } else if bad.is_none() {
                    bad = Some(k);
                }
            }
            let fails = match reading {
                Reading::Strict => bad.is_some(),
                Reading::Lax => any_qualifying && !good,
            };
            if fails {
                let positions = if reading == Reading::Strict { bad.into_iter().collect() } else { vec![] };
                return Some(Witness { tuple: vec![], positions, sets });
            }
        }
        None
    }

    /// `g(X_1, ..., X_n)` lifted to sets.
    pub fn set_product(&self, sets: &[ElementSet]) -> ElementSet {
        let members: Vec<Vec<Elem>> = sets.iter().map(|s| s.iter().collect()).collect();
        let mut out = ElementSet::EMPTY;
        let mut t = vec![0; sets.len()];
        fn rec(h: &HyperRing, members: &[Vec<Elem>], k: usize, t: &mut Vec<Elem>, out: &mut ElementSet) {
            if k == members.len() {
                out.insert(h.g(t));
                return;
            }
            for &a in &members[k] {
                t[k] = a;
                rec(h, members, k + 1, t, out);
            }
        }
        rec(self.h, &members, 0, &mut t, &mut out);
        out
    }
}

/// Strict or Lax N-hyperideal test.
pub fn is_n_hyperideal(h: &HyperRing, i: Hyperideal, reading: Reading) -> Result<Verdict> {
    Classifier::new(h)?.is_n(i, reading)
}

/// δ-N test: drop-products land in `δ(I)` instead of `I`.
pub fn is_delta_n(h: &HyperRing, i: Hyperideal, delta: &ExpansionFn, reading: Reading) -> Result<Verdict> {
    Classifier::new(h)?.is_delta_n(i, delta, reading)
}

pub fn is_kn_absorbing_delta_n(
    h: &HyperRing,
    i: Hyperideal,
    k: usize,
    delta: &ExpansionFn,
    reading: Reading,
) -> Result<Verdict> {
    Classifier::new(h)?.is_kn_absorbing(i, k, delta, reading)
}

pub fn is_s_n(h: &HyperRing, i: Hyperideal, s: MultSubset, reading: Reading) -> Result<Verdict> {
    Classifier::new(h)?.is_s_n(i, s, reading)
}
