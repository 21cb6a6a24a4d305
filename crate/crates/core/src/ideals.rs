//! Hyperideals: recognition, enumeration, radicals and residuals.

use std::collections::HashSet;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::ring::HyperRing;
use crate::set::{Elem, ElementSet};
use crate::tuples::Tuples;
use crate::verdict::{Verdict, Witness};

/// A subset already checked to be a hyperideal of some structure.
///
/// The value does not remember which structure; pass it back only to the
/// structure it was checked against.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Hyperideal(ElementSet);

impl Hyperideal {
    pub fn new(h: &HyperRing, set: ElementSet) -> Result<Self> {
        let v = is_hyperideal(h, set)?;
        match v.witness {
            None => Ok(Hyperideal(set)),
            Some(w) => Err(Error::NotHyperideal(format!("{} fails at {}", h.format_set(set), w.describe(h)))),
        }
    }

    /// The zero hyperideal.
    pub fn zero(h: &HyperRing) -> Self {
        Hyperideal(ElementSet::singleton(h.zero()))
    }

    pub fn whole(h: &HyperRing) -> Self {
        Hyperideal(h.carrier())
    }

    pub(crate) fn trusted(set: ElementSet) -> Self {
        Hyperideal(set)
    }

    pub fn members(self) -> ElementSet {
        self.0
    }

    pub fn is_proper(self, h: &HyperRing) -> bool {
        self.0 != h.carrier()
    }
}

/// Check the hyperideal conditions: contains 0, closed under `neg` and `f`,
/// and absorbs `g` in every position.
pub fn is_hyperideal(h: &HyperRing, x: ElementSet) -> Result<Verdict> {
    if x.is_empty() {
        return Err(Error::EmptySet);
    }
    if let Some(e) = x.difference(h.carrier()).first() {
        return Err(Error::ElementOutOfRange(e));
    }
    Ok(Verdict::from_witness(None, hyperideal_witness(h, x)))
}

fn hyperideal_witness(h: &HyperRing, x: ElementSet) -> Option<Witness> {
    if !x.contains(h.zero()) {
        return Some(Witness::tuple(vec![h.zero()]));
    }
    if let Some(a) = x.iter().find(|&a| !x.contains(h.neg(a))) {
        return Some(Witness::tuple(vec![a]));
    }
    let members: Vec<Elem> = x.iter().collect();
    let mut it = Tuples::new(members.len(), h.m());
    while let Some(idx) = it.next_tuple() {
        let t: Vec<Elem> = idx.iter().map(|&i| members[i]).collect();
        if !h.f(&t).is_subset(x) {
            return Some(Witness::tuple(t));
        }
    }
    let mut it = Tuples::new(h.size(), h.n());
    while let Some(t) = it.next_tuple() {
        if let Some(i) = t.iter().position(|&a| x.contains(a)) {
            if !x.contains(h.g(t)) {
                return Some(Witness::at(t.to_vec(), i));
            }
        }
    }
    None
}

/// The smallest hyperideal containing `x`.
pub fn closure(h: &HyperRing, x: ElementSet) -> ElementSet {
    let mut cur = x.with(h.zero());
    loop {
        let mut next = cur;
        for a in cur {
            next.insert(h.neg(a));
        }
        let members: Vec<Elem> = next.iter().collect();
        let mut it = Tuples::new(members.len(), h.m());
        while let Some(idx) = it.next_tuple() {
            let t: Vec<Elem> = idx.iter().map(|&i| members[i]).collect();
            next = next.union(h.f(&t));
        }
        let mut it = Tuples::new(h.size(), h.n() - 1);
        while let Some(rest) = it.next_tuple() {
            let mut t = Vec::with_capacity(h.n());
            t.push(0);
            t.extend_from_slice(rest);
            for a in members.iter().copied() {
                t[0] = a;
                next.insert(h.g(&t));
            }
        }
        if next == cur {
            return cur;
        }
        cur = next;
    }
}

/// Every hyperideal, ordered by cardinality then bitmask.
///
/// Starts from the closure of `{0}` and repeatedly closes each found
/// hyperideal together with one more element. Every hyperideal `J` is reached
/// because each proper step from a hyperideal inside `J` stays inside `J`.
pub fn enumerate_hyperideals(h: &HyperRing) -> Vec<Hyperideal> {
    let start = closure(h, ElementSet::singleton(h.zero()));
    let mut seen: HashSet<ElementSet> = HashSet::from([start]);
    let mut stack = vec![start];
    while let Some(i) = stack.pop() {
        for a in i.complement(h.size()) {
            let j = closure(h, i.with(a));
            if seen.insert(j) {
                stack.push(j);
            }
        }
    }
    let mut out: Vec<ElementSet> = seen.into_iter().collect();
    out.sort_by(ElementSet::canonical_cmp);
    out.into_iter().map(Hyperideal).collect()
}

/// Brute-force twin of [`enumerate_hyperideals`]: test every subset.
pub fn enumerate_hyperideals_naive(h: &HyperRing) -> Vec<Hyperideal> {
    assert!(h.size() <= 20, "naive enumeration is exponential");
    let mut out: Vec<ElementSet> = (1u128..(1u128 << h.size()))
        .map(ElementSet::from_bits)
        .filter(|&x| hyperideal_witness(h, x).is_none())
        .collect();
    out.sort_by(ElementSet::canonical_cmp);
    out.into_iter().map(Hyperideal).collect()
}

/// `⟨a⟩ = {g(r, a, 1^(n-2)) : r ∈ H}`, checked to be a hyperideal.
pub fn generated(h: &HyperRing, a: Elem) -> Result<Hyperideal> {
    h.require_unit("generated hyperideal")?;
    if a >= h.size() {
        return Err(Error::ElementOutOfRange(a));
    }
    let set: ElementSet = h.elements().map(|r| h.mul2(r, a)).collect();
    match hyperideal_witness(h, set) {
        None => Ok(Hyperideal(set)),
        Some(w) => Err(Error::Precondition(format!(
            "the multiples of {} form {}, which is not a hyperideal ({})",
            h.elem_name(a),
            h.format_set(set),
            w.describe(h)
        ))),
    }
}

fn require_proper(h: &HyperRing, i: Hyperideal) -> Result<()> {
    if i.is_proper(h) {
        Ok(())
    } else {
        Err(Error::NotProper)
    }
}

/// Elementwise primality: every product landing in `I` has a factor in `I`.
pub fn is_prime(h: &HyperRing, i: Hyperideal) -> Result<Verdict> {
    require_proper(h, i)?;
    Ok(Verdict::from_witness(None, prime_witness(h, i.0)))
}

fn prime_witness(h: &HyperRing, i: ElementSet) -> Option<Witness> {
    let mut it = Tuples::new(h.size(), h.n());
    while let Some(t) = it.next_tuple() {
        if i.contains(h.g(t)) && !t.iter().any(|&a| i.contains(a)) {
            return Some(Witness::tuple(t.to_vec()));
        }
    }
    None
}

/// Precomputed hyperideal data for one structure.
#[derive(Debug, Clone)]
pub struct Lattice {
    pub ideals: Vec<ElementSet>,
    pub primes: Vec<ElementSet>,
    pub maximals: Vec<ElementSet>,
    pub nilradical: ElementSet,
    carrier: ElementSet,
}

impl Lattice {
    pub fn new(h: &HyperRing) -> Self {
        let ideals: Vec<ElementSet> = enumerate_hyperideals(h).into_iter().map(|i| i.0).collect();
        let carrier = h.carrier();
        let proper: Vec<ElementSet> = ideals.iter().copied().filter(|&i| i != carrier).collect();
        let primes: Vec<ElementSet> = proper.iter().copied().filter(|&p| prime_witness(h, p).is_none()).collect();
        let maximals = proper
            .iter()
            .copied()
            .filter(|&i| !proper.iter().any(|&j| j != i && i.is_subset(j)))
            .collect();
        let mut lat = Lattice { ideals, primes, maximals, nilradical: ElementSet::EMPTY, carrier };
        lat.nilradical = lat.radical(ElementSet::singleton(h.zero()));
        lat
    }

    /// Intersection of the primes containing `i`; the carrier if there are none.
    pub fn radical(&self, i: ElementSet) -> ElementSet {
        self.primes
            .iter()
            .filter(|&&p| i.is_subset(p))
            .fold(self.carrier, |acc, &p| acc.intersection(p))
    }

    pub fn jacobson(&self) -> ElementSet {
        self.maximals.iter().fold(self.carrier, |acc, &m| acc.intersection(m))
    }

    pub fn is_ideal(&self, x: ElementSet) -> bool {
        self.ideals.binary_search_by(|p| p.canonical_cmp(&x)).is_ok()
    }

    pub fn proper(&self) -> impl Iterator<Item = ElementSet> + '_ {
        self.ideals.iter().copied().filter(move |&i| i != self.carrier)
    }
}

/// `√I`: the intersection of the primes containing `I`, or `H` if none does.
pub fn radical(h: &HyperRing, i: Hyperideal) -> ElementSet {
    Lattice::new(h).radical(i.0)
}

/// `{a : some representable power of a lies in I}`; equal to [`radical`] on
/// valid structures.
pub fn radical_by_powers(h: &HyperRing, i: Hyperideal) -> ElementSet {
    h.radical_by_powers(i.0)
}

/// Intersection of the maximal hyperideals, or `H` if there are none.
pub fn jacobson_radical(h: &HyperRing) -> ElementSet {
    Lattice::new(h).jacobson()
}

/// No hyperideal lies strictly between `I` and `H`.
pub fn is_maximal(h: &HyperRing, i: Hyperideal) -> Result<Verdict> {
    require_proper(h, i)?;
    let between = enumerate_hyperideals(h)
        .into_iter()
        .map(|j| j.0)
        .find(|&j| j != i.0 && j != h.carrier() && i.0.is_subset(j));
    Ok(Verdict::from_witness(None, between.map(|j| Witness::sets(vec![j]))))
}

/// Primary: whenever `g(a_1..a_n) ∈ I`, every factor outside `I` has its
/// drop-product in `√I`.
pub fn is_primary(h: &HyperRing, i: Hyperideal) -> Result<Verdict> {
    require_proper(h, i)?;
    h.require_unit("primary test")?;
    let rad = radical(h, i);
    Ok(Verdict::from_witness(None, drop_witness(h, i.0, rad)))
}

/// First `(tuple, i)` with `g(tuple) ∈ within`, `tuple[i] ∉ within` and the
/// `i`-th drop-product outside `target`.
pub(crate) fn drop_witness(h: &HyperRing, within: ElementSet, target: ElementSet) -> Option<Witness> {
    let u = h.unit()?;
    let mut it = Tuples::new(h.size(), h.n());
    while let Some(t) = it.next_tuple() {
        if !within.contains(h.g(t)) {
            continue;
        }
        for (k, &a) in t.iter().enumerate() {
            if !within.contains(a) && !target.contains(h.g_replace(t, k, u)) {
                return Some(Witness::at(t.to_vec(), k));
            }
        }
    }
    None
}

/// `E_x = {y : g(x, y, 1^(n-2)) ∈ I}`.
pub fn residual(h: &HyperRing, i: Hyperideal, x: Elem) -> Result<ElementSet> {
    h.require_unit("residual")?;
    if x >= h.size() {
        return Err(Error::ElementOutOfRange(x));
    }
    Ok(residual_unchecked(h, i.0, x))
}

pub(crate) fn residual_unchecked(h: &HyperRing, i: ElementSet, x: Elem) -> ElementSet {
    h.elements().filter(|&y| i.contains(h.mul2(x, y))).collect()
}

/// `E_T = {x : g(x, t, 1^(n-2)) ∈ I for every t ∈ T}`.
pub fn residual_set(h: &HyperRing, i: Hyperideal, t: ElementSet) -> Result<ElementSet> {
    h.require_unit("residual")?;
    if t.is_empty() {
        return Err(Error::EmptySet);
    }
    if let Some(e) = t.difference(h.carrier()).first() {
        return Err(Error::ElementOutOfRange(e));
    }
    Ok(t.iter().fold(h.carrier(), |acc, x| acc.intersection(residual_unchecked(h, i.0, x))))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::harness::catalog;

    fn s(h: &HyperRing, names: &[&str]) -> ElementSet {
        h.set_from_names(names).unwrap()
    }

    fn ideal(h: &HyperRing, names: &[&str]) -> Hyperideal {
        Hyperideal::new(h, s(h, names)).unwrap()
    }

    #[test]
    fn recognition() {
        let h = catalog::z12_mod_units();
        assert!(is_hyperideal(&h, s(&h, &["c0", "c2", "c4", "c6"])).unwrap().holds);
        let v = is_hyperideal(&h, s(&h, &["c0", "c1"])).unwrap();
        assert!(!v.holds);
        assert_eq!(v.witness.unwrap().tuple, vec![1, 1]);
        assert!(is_hyperideal(&h, ElementSet::singleton(0)).unwrap().holds);
        assert_eq!(is_hyperideal(&h, ElementSet::EMPTY), Err(Error::EmptySet));
    }

    #[test]
    fn enumeration_matches_naive_filter() {
        let h = catalog::z12_mod_units();
        let got: Vec<ElementSet> = enumerate_hyperideals(&h).into_iter().map(|i| i.members()).collect();
        let want = vec![
            s(&h, &["c0"]),
            s(&h, &["c0", "c4"]),
            s(&h, &["c0", "c6"]),
            s(&h, &["c0", "c3", "c6"]),
            s(&h, &["c0", "c2", "c4", "c6"]),
            h.carrier(),
        ];
        assert_eq!(got, want);
        for e in catalog::builtin_catalog() {
            assert_eq!(enumerate_hyperideals(&e.ring), enumerate_hyperideals_naive(&e.ring), "{}", e.name);
        }
    }

    #[test]
    fn ternary_sign_is_a_hyperfield() {
        let h = catalog::ternary_sign();
        let ideals = enumerate_hyperideals(&h);
        assert_eq!(ideals.len(), 2);
        assert_eq!(jacobson_radical(&h), ElementSet::singleton(0));
        assert!(!is_hyperideal(&h, s(&h, &["0", "a"])).unwrap().holds);
    }

    #[test]
    fn generated_examples() {
        let h = catalog::z12_mod_units();
        assert_eq!(generated(&h, 2).unwrap().members(), s(&h, &["c0", "c2", "c4", "c6"]));
        assert_eq!(generated(&h, 0).unwrap().members(), ElementSet::singleton(0));
        assert_eq!(generated(&h, 1).unwrap().members(), h.carrier());
    }

    #[test]
    fn prime_examples() {
        let h = catalog::z12_mod_units();
        assert!(is_prime(&h, ideal(&h, &["c0", "c3", "c6"])).unwrap().holds);
        let v = is_prime(&h, ideal(&h, &["c0", "c6"])).unwrap();
        assert_eq!(v.witness.unwrap().tuple, s(&h, &["c2", "c3"]).iter().collect::<Vec<_>>());
        assert!(is_prime(&catalog::ternary_sign(), Hyperideal::zero(&catalog::ternary_sign())).unwrap().holds);
        assert_eq!(is_prime(&h, Hyperideal::whole(&h)), Err(Error::NotProper));
    }

    #[test]
    fn primary_examples() {
        let z8 = catalog::zn(8);
        assert!(is_primary(&z8, ideal(&z8, &["0", "4"])).unwrap().holds);
        let z12 = catalog::zn(12);
        let v = is_primary(&z12, ideal(&z12, &["0", "6"])).unwrap();
        assert_eq!(v.witness.unwrap(), Witness::at(vec![2, 3], 0));
    }

    #[test]
    fn radicals_agree() {
        let h = catalog::z12_mod_units();
        assert_eq!(radical(&h, Hyperideal::zero(&h)), s(&h, &["c0", "c6"]));
        let i = ideal(&h, &["c0", "c2", "c4", "c6"]);
        assert_eq!(radical(&h, i), i.members());
        for e in catalog::builtin_catalog() {
            let lat = Lattice::new(&e.ring);
            for &i in &lat.ideals {
                assert_eq!(lat.radical(i), e.ring.radical_by_powers(i), "{} {:?}", e.name, i);
            }
            assert_eq!(lat.nilradical, e.ring.nilradical());
        }
    }

    #[test]
    fn maximal_and_jacobson() {
        let h = catalog::z12_mod_units();
        assert!(is_maximal(&h, ideal(&h, &["c0", "c2", "c4", "c6"])).unwrap().holds);
        let v = is_maximal(&h, Hyperideal::zero(&h)).unwrap();
        assert_eq!(v.witness.unwrap().sets, vec![s(&h, &["c0", "c4"])]);
        assert_eq!(is_maximal(&h, Hyperideal::whole(&h)), Err(Error::NotProper));
        assert_eq!(jacobson_radical(&h), s(&h, &["c0", "c6"]));
    }

    #[test]
    fn residual_examples() {
        let h = catalog::z12_mod_units();
        let even = ideal(&h, &["c0", "c2", "c4", "c6"]);
        assert_eq!(residual(&h, even, 2).unwrap(), h.carrier());
        assert_eq!(residual(&h, even, 1).unwrap(), even.members());
        let small = ideal(&h, &["c0", "c6"]);
        assert_eq!(residual(&h, small, 2).unwrap(), s(&h, &["c0", "c3", "c6"]));
        let t = s(&h, &["c2", "c3"]);
        assert_eq!(residual_set(&h, small, t).unwrap(), s(&h, &["c0", "c6"]));
        assert_eq!(residual_set(&h, small, ElementSet::EMPTY), Err(Error::EmptySet));
        for e in catalog::builtin_catalog() {
            for i in enumerate_hyperideals(&e.ring) {
                for x in e.ring.elements() {
                    let r = residual(&e.ring, i, x).unwrap();
                    assert!(i.members().is_subset(r));
                    assert!(is_hyperideal(&e.ring, r).unwrap().holds);
                }
            }
        }
    }
}
