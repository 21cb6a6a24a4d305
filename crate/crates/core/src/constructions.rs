//! Products, quotients, homomorphisms and subhyperrings.

use crate::classify::expansion::{expansion_apply_set, ExpansionFn};
use crate::error::{Error, Result};
use crate::ideals::{enumerate_hyperideals, Hyperideal, Lattice};
use crate::ring::{HyperRing, RingShape};
use crate::set::{Elem, ElementSet};
use crate::tuples::Tuples;
use crate::validate::validate_axioms;
use crate::verdict::{Verdict, Witness};

fn check_arities(h1: &HyperRing, h2: &HyperRing) -> Result<()> {
    if h1.m() != h2.m() || h1.n() != h2.n() {
        return Err(Error::ArityMismatch(h1.m(), h1.n(), h2.m(), h2.n()));
    }
    Ok(())
}

/// Componentwise product. Element `(x, y)` has index `x * |H2| + y` and name `x.y`.
pub fn product(h1: &HyperRing, h2: &HyperRing) -> Result<HyperRing> {
    check_arities(h1, h2)?;
    let k = h2.size();
    let pair = |x: Elem, y: Elem| x * k + y;
    let mut names = Vec::with_capacity(h1.size() * k);
    let mut neg = Vec::with_capacity(h1.size() * k);
    for x in h1.elements() {
        for y in h2.elements() {
            names.push(format!("{}.{}", h1.elem_name(x), h2.elem_name(y)));
            neg.push(pair(h1.neg(x), h2.neg(y)));
        }
    }
    let shape = RingShape {
        name: format!("{}x{}", h1.name(), h2.name()),
        m: h1.m(),
        n: h1.n(),
        names,
        zero: pair(h1.zero(), h2.zero()),
        unit: h1.unit().zip(h2.unit()).map(|(u, v)| pair(u, v)),
        neg,
    };
    let split = |t: &[Elem]| -> (Vec<Elem>, Vec<Elem>) { t.iter().map(|&p| (p / k, p % k)).unzip() };
    let ring = HyperRing::from_fns(
        shape,
        |t| {
            let (xs, ys) = split(t);
            let (fx, fy) = (h1.f(&xs), h2.f(&ys));
            fx.iter().flat_map(|x| fy.iter().map(move |y| pair(x, y))).collect()
        },
        |t| {
            let (xs, ys) = split(t);
            pair(h1.g(&xs), h2.g(&ys))
        },
    )?;
    Ok(ring)
}

/// Index of `(x, y)` in [`product`]`(h1, h2)`.
pub fn product_index(h2: &HyperRing, x: Elem, y: Elem) -> Elem {
    x * h2.size() + y
}

/// `I1 × I2` as a subset of the product carrier.
pub fn product_set(h2: &HyperRing, a: ElementSet, b: ElementSet) -> ElementSet {
    a.iter().flat_map(|x| b.iter().map(move |y| product_index(h2, x, y))).collect()
}

/// `H/J` together with the data that produced it.
#[derive(Debug, Clone)]
pub struct QuotientRing {
    pub base: HyperRing,
    pub modulus: Hyperideal,
    /// Cosets in order of their smallest member; coset `c` is element `c` of `ring`.
    pub cosets: Vec<ElementSet>,
    pub ring: HyperRing,
    /// Coset index of each base element.
    pub projection: Vec<Elem>,
}

impl QuotientRing {
    pub fn projection_hom(&self) -> Homomorphism<'_> {
        Homomorphism::new(&self.base, &self.ring, self.projection.clone())
    }

    /// The union of the cosets in `x`, a subset of the quotient carrier.
    pub fn lift(&self, x: ElementSet) -> ElementSet {
        x.iter().fold(ElementSet::EMPTY, |acc, c| acc.union(self.cosets[c]))
    }

    /// The cosets meeting `x`, a subset of the base carrier.
    pub fn project(&self, x: ElementSet) -> ElementSet {
        x.iter().map(|a| self.projection[a]).collect()
    }
}

/// Build `H/J` with cosets `f(a, J, 0^(m-2))`.
///
/// Operations are computed on every choice of representatives. Any dependence
/// on the choice, a non-partitioning coset family, or a failed validation of
/// the result is reported as [`Error::QuotientInconsistent`].
pub fn quotient(h: &HyperRing, j: Hyperideal) -> Result<QuotientRing> {
    if !j.is_proper(h) {
        return Err(Error::NotProper);
    }
    let (m, n) = (h.m(), h.n());
    let zero = ElementSet::singleton(h.zero());
    let coset_of = |a: Elem| {
        let mut args = vec![zero; m];
        args[0] = ElementSet::singleton(a);
        args[1] = j.members();
        h.f_sets(&args)
    };
    let mut cosets: Vec<ElementSet> = Vec::new();
    let mut projection = vec![usize::MAX; h.size()];
    for a in h.elements() {
        if projection[a] != usize::MAX {
            continue;
        }
        let c = coset_of(a);
        for b in c {
            if coset_of(b) != c || (projection[b] != usize::MAX && projection[b] != cosets.len()) {
                return Err(Error::QuotientInconsistent(format!(
                    "cosets of {} and {} overlap without coinciding",
                    h.elem_name(a),
                    h.elem_name(b)
                )));
            }
            projection[b] = cosets.len();
        }
        cosets.push(c);
    }
    let names: Vec<String> = cosets
        .iter()
        .map(|c| {
            let parts: Vec<&str> = c.iter().map(|a| h.elem_name(a)).collect();
            format!("[{}]", parts.join("|"))
        })
        .collect();
    let proj = |x: ElementSet| -> ElementSet { x.iter().map(|a| projection[a]).collect() };
    let rep = |c: Elem| cosets[c].first().unwrap();
    let mut neg = Vec::with_capacity(cosets.len());
    for (ci, c) in cosets.iter().enumerate() {
        let images: ElementSet = c.iter().map(|a| projection[h.neg(a)]).collect();
        if images.len() != 1 {
            return Err(Error::QuotientInconsistent(format!("inverse of coset {} is not well defined", names[ci])));
        }
        neg.push(images.first().unwrap());
    }
    let mut problem: Option<String> = None;
    let f_val = |t: &[Elem]| -> ElementSet {
        let base: Vec<Elem> = t.iter().map(|&c| rep(c)).collect();
        proj(h.f(&base))
    };
    let g_val = |t: &[Elem]| -> Elem {
        let base: Vec<Elem> = t.iter().map(|&c| rep(c)).collect();
        projection[h.g(&base)]
    };
    let size = cosets.len();
    for (arity, is_f) in [(m, true), (n, false)] {
        let mut it = Tuples::new(size, arity);
        'outer: while let Some(t) = it.next_tuple() {
            let expected = if is_f { f_val(t) } else { ElementSet::singleton(g_val(t)) };
            let members: Vec<Vec<Elem>> = t.iter().map(|&c| cosets[c].iter().collect()).collect();
            let lens: Vec<usize> = members.iter().map(Vec::len).collect();
            let mut choice = MixedRadix::new(lens);
            while let Some(idx) = choice.next_digits() {
                let base: Vec<Elem> = idx.iter().enumerate().map(|(p, &k)| members[p][k]).collect();
                let got = if is_f { proj(h.f(&base)) } else { ElementSet::singleton(projection[h.g(&base)]) };
                if got != expected {
                    let table = if is_f { 'f' } else { 'g' };
                    let args: Vec<&str> = t.iter().map(|&c| names[c].as_str()).collect();
                    problem = Some(format!("{table}({}) depends on representatives", args.join(",")));
                    break 'outer;
                }
            }
        }
        if problem.is_some() {
            break;
        }
    }
    if let Some(p) = problem {
        return Err(Error::QuotientInconsistent(p));
    }
    let shape = RingShape {
        name: format!("{}/{}", h.name(), h.format_set(j.members())),
        m,
        n,
        names,
        zero: projection[h.zero()],
        unit: h.unit().map(|u| projection[u]),
        neg,
    };
    let ring = HyperRing::from_fns(shape, f_val, g_val)?;
    let report = validate_axioms(&ring);
    if let Some(v) = report.violations.first() {
        return Err(Error::QuotientInconsistent(v.describe(&ring)));
    }
    Ok(QuotientRing { base: h.clone(), modulus: j, cosets, ring, projection })
}

/// Odometer over digit vectors with per-position bounds.
struct MixedRadix {
    bounds: Vec<usize>,
    cur: Vec<usize>,
    started: bool,
}

impl MixedRadix {
    fn new(bounds: Vec<usize>) -> Self {
        let cur = vec![0; bounds.len()];
        MixedRadix { bounds, cur, started: false }
    }

    fn next_digits(&mut self) -> Option<&[usize]> {
        if !self.started {
            self.started = true;
            return Some(&self.cur);
        }
        for i in (0..self.cur.len()).rev() {
            if self.cur[i] + 1 < self.bounds[i] {
                self.cur[i] += 1;
                self.cur[i + 1..].iter_mut().for_each(|x| *x = 0);
                return Some(&self.cur);
            }
        }
        None
    }
}

/// A map between carriers, not yet known to preserve structure.
#[derive(Debug, Clone)]
pub struct Homomorphism<'a> {
    pub source: &'a HyperRing,
    pub target: &'a HyperRing,
    pub map: Vec<Elem>,
}

impl<'a> Homomorphism<'a> {
    pub fn new(source: &'a HyperRing, target: &'a HyperRing, map: Vec<Elem>) -> Self {
        assert_eq!(map.len(), source.size());
        assert!(map.iter().all(|&y| y < target.size()));
        Homomorphism { source, target, map }
    }

    pub fn image_set(&self, x: ElementSet) -> ElementSet {
        x.iter().map(|a| self.map[a]).collect()
    }

    pub fn preimage_set(&self, y: ElementSet) -> ElementSet {
        self.source.elements().filter(|&a| y.contains(self.map[a])).collect()
    }

    pub fn is_injective(&self) -> bool {
        self.image_set(self.source.carrier()).len() == self.source.size()
    }

    pub fn is_surjective(&self) -> bool {
        self.image_set(self.source.carrier()) == self.target.carrier()
    }

    pub fn kernel(&self) -> ElementSet {
        self.preimage_set(ElementSet::singleton(self.target.zero()))
    }

    /// Check `h(f1(a)) = f2(h(a))` and `h(g1(b)) = g2(h(b))` on every tuple.
    /// The witness is the first failing tuple, with `sets[0]` naming the table
    /// (`{0}` for f, `{1}` for g).
    pub fn is_homomorphism(&self) -> Result<Verdict> {
        check_arities(self.source, self.target)?;
        Ok(Verdict::from_witness(None, self.hom_witness()))
    }

    fn hom_witness(&self) -> Option<Witness> {
        let (s, t) = (self.source, self.target);
        let image = |x: &[Elem]| -> Vec<Elem> { x.iter().map(|&a| self.map[a]).collect() };
        let mut it = Tuples::new(s.size(), s.m());
        while let Some(a) = it.next_tuple() {
            if self.image_set(s.f(a)) != t.f(&image(a)) {
                return Some(Witness { tuple: a.to_vec(), positions: vec![], sets: vec![ElementSet::singleton(0)] });
            }
        }
        let mut it = Tuples::new(s.size(), s.n());
        while let Some(b) = it.next_tuple() {
            if self.map[s.g(b)] != t.g(&image(b)) {
                return Some(Witness { tuple: b.to_vec(), positions: vec![], sets: vec![ElementSet::singleton(1)] });
            }
        }
        None
    }

    /// `h^{-1}(I2)`, checked to be a hyperideal of the source.
    pub fn preimage_ideal(&self, i2: Hyperideal) -> Result<Hyperideal> {
        Hyperideal::new(self.source, self.preimage_set(i2.members()))
    }

    /// `h(I1)`; requires `h` surjective and `Ker(h) ⊆ I1`.
    pub fn image_ideal(&self, i1: Hyperideal) -> Result<Hyperideal> {
        if !self.is_surjective() {
            return Err(Error::Precondition("the map is not surjective".into()));
        }
        if !self.kernel().is_subset(i1.members()) {
            return Err(Error::Precondition("the kernel is not contained in the hyperideal".into()));
        }
        Hyperideal::new(self.target, self.image_set(i1.members()))
    }

    /// `δ(h^{-1}(I2)) = h^{-1}(γ(I2))` for every hyperideal `I2` of the target.
    /// The witness carries the offending `I2`.
    pub fn is_delta_gamma_hom(&self, delta: &ExpansionFn, gamma: &ExpansionFn) -> Result<Verdict> {
        let lat1 = Lattice::new(self.source);
        let lat2 = Lattice::new(self.target);
        for i2 in &lat2.ideals {
            let pre = self.preimage_set(*i2);
            let left = expansion_apply_set(delta, self.source, &lat1, pre)?;
            let right = self.preimage_set(expansion_apply_set(gamma, self.target, &lat2, *i2)?);
            if left != right {
                return Ok(Verdict::fail(None, Witness::sets(vec![*i2])));
            }
        }
        Ok(Verdict::pass(None))
    }
}

/// Every homomorphism `h1 → h2` with `h(0) = 0` and, when `unital`, `h(1) = 1`.
/// Found by backtracking over elements in carrier order; maps are returned in
/// lexicographic order.
pub fn homomorphisms(h1: &HyperRing, h2: &HyperRing, unital: bool) -> Result<Vec<Vec<Elem>>> {
    check_arities(h1, h2)?;
    let mut fixed: Vec<Option<Elem>> = vec![None; h1.size()];
    fixed[h1.zero()] = Some(h2.zero());
    if unital {
        match (h1.unit(), h2.unit()) {
            (Some(u1), Some(u2)) => {
                if fixed[u1].is_some_and(|z| z != u2) {
                    return Ok(Vec::new());
                }
                fixed[u1] = Some(u2);
            }
            _ => return Err(Error::UnitRequired("unital homomorphism search")),
        }
    }
    let mut out = Vec::new();
    let mut map = vec![0; h1.size()];
    extend_hom(h1, h2, &fixed, 0, &mut map, &mut out);
    Ok(out)
}

fn extend_hom(
    h1: &HyperRing,
    h2: &HyperRing,
    fixed: &[Option<Elem>],
    k: usize,
    map: &mut Vec<Elem>,
    out: &mut Vec<Vec<Elem>>,
) {
    if k == h1.size() {
        out.push(map.clone());
        return;
    }
    let choices: Vec<Elem> = match fixed[k] {
        Some(v) => vec![v],
        None => h2.elements().collect(),
    };
    for v in choices {
        map[k] = v;
        if consistent_upto(h1, h2, map, k) {
            extend_hom(h1, h2, fixed, k + 1, map, out);
        }
    }
}

/// Check every tuple over `0..=k` that uses element `k`.
fn consistent_upto(h1: &HyperRing, h2: &HyperRing, map: &[Elem], k: usize) -> bool {
    let image = |x: &[Elem]| -> Vec<Elem> { x.iter().map(|&a| map[a]).collect() };
    let mut it = Tuples::new(k + 1, h1.m());
    while let Some(a) = it.next_tuple() {
        if !a.contains(&k) {
            continue;
        }
        let fa = h1.f(a);
        if fa.iter().all(|x| x <= k) {
            let img: ElementSet = fa.iter().map(|x| map[x]).collect();
            if img != h2.f(&image(a)) {
                return false;
            }
        }
    }
    let mut it = Tuples::new(k + 1, h1.n());
    while let Some(b) = it.next_tuple() {
        if !b.contains(&k) {
            continue;
        }
        let gb = h1.g(b);
        if gb <= k && map[gb] != h2.g(&image(b)) {
            return false;
        }
    }
    true
}

/// Subsets containing 0 and the unit that are closed under `neg`, `f` and `g`,
/// ordered by cardinality then bitmask.
pub fn subhyperrings(h: &HyperRing) -> Vec<ElementSet> {
    assert!(h.size() <= 16, "subset search is exponential");
    let mut base = ElementSet::singleton(h.zero());
    if let Some(u) = h.unit() {
        base.insert(u);
    }
    let mut out: Vec<ElementSet> = (0u128..(1u128 << h.size()))
        .map(ElementSet::from_bits)
        .filter(|&s| base.is_subset(s) && is_closed(h, s))
        .collect();
    out.sort_by(ElementSet::canonical_cmp);
    out
}

fn is_closed(h: &HyperRing, s: ElementSet) -> bool {
    if s.iter().any(|a| !s.contains(h.neg(a))) {
        return false;
    }
    let members: Vec<Elem> = s.iter().collect();
    let mut it = Tuples::new(members.len(), h.m());
    while let Some(idx) = it.next_tuple() {
        let t: Vec<Elem> = idx.iter().map(|&i| members[i]).collect();
        if !h.f(&t).is_subset(s) {
            return false;
        }
    }
    let mut it = Tuples::new(members.len(), h.n());
    while let Some(idx) = it.next_tuple() {
        let t: Vec<Elem> = idx.iter().map(|&i| members[i]).collect();
        if !s.contains(h.g(&t)) {
            return false;
        }
    }
    true
}

/// The structure induced on a closed subset, with elements in carrier order.
/// Returns it with the inclusion map.
pub fn restrict(h: &HyperRing, s: ElementSet) -> Result<(HyperRing, Vec<Elem>)> {
    if !s.contains(h.zero()) || !is_closed(h, s) {
        return Err(Error::Precondition(format!("{} is not a subhyperring", h.format_set(s))));
    }
    let members: Vec<Elem> = s.iter().collect();
    let local = |a: Elem| members.iter().position(|&x| x == a).unwrap();
    let shape = RingShape {
        name: format!("{}|{}", h.name(), h.format_set(s)),
        m: h.m(),
        n: h.n(),
        names: members.iter().map(|&a| h.elem_name(a).to_string()).collect(),
        zero: local(h.zero()),
        unit: h.unit().filter(|&u| s.contains(u)).map(local),
        neg: members.iter().map(|&a| local(h.neg(a))).collect(),
    };
    let lift = |t: &[Elem]| -> Vec<Elem> { t.iter().map(|&i| members[i]).collect() };
    let ring = HyperRing::from_fns(
        shape,
        |t| h.f(&lift(t)).iter().map(local).collect(),
        |t| local(h.g(&lift(t))),
    )?;
    Ok((ring, members))
}

/// All hyperideals of `h`, convenience for callers holding only a ring.
pub fn hyperideals(h: &HyperRing) -> Vec<Hyperideal> {
    enumerate_hyperideals(h)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::harness::catalog;

    #[test]
    fn product_basics() {
        let s = catalog::ternary_sign();
        let p = product(&s, &s).unwrap();
        assert_eq!(p.size(), 9);
        assert!(validate_axioms(&p).passed());
        let z4 = catalog::zn(4);
        let z6 = catalog::zn(6);
        assert!(matches!(product(&z4, &s), Err(Error::ArityMismatch(2, 2, 3, 3))));
        let q = product(&z4, &z6).unwrap();
        let (e1, e2) = (product_index(&z6, 1, 0), product_index(&z6, 0, 1));
        assert_eq!(q.g(&[e1, e2]), q.zero());
        let nil = product_set(&z6, z4.nilradical(), z6.nilradical());
        assert_eq!(q.nilradical(), nil);
    }

    #[test]
    fn quotient_of_z12_mod_units() {
        let h = catalog::z12_mod_units();
        let j = Hyperideal::new(&h, h.set_from_names(&["c0", "c6"]).unwrap()).unwrap();
        let q = quotient(&h, j).unwrap();
        let want: Vec<ElementSet> = [&["c0", "c6"][..], &["c1"], &["c2", "c4"], &["c3"]]
            .iter()
            .map(|n| h.set_from_names(n).unwrap())
            .collect();
        assert_eq!(q.cosets, want);
        assert!(q.projection_hom().is_homomorphism().unwrap().holds);
        let even = Hyperideal::new(&h, h.set_from_names(&["c0", "c2", "c4", "c6"]).unwrap()).unwrap();
        let img = q.projection_hom().image_ideal(even).unwrap();
        assert_eq!(img.members(), [0, 2].into_iter().collect());
        assert_eq!(q.projection_hom().preimage_ideal(img).unwrap(), even);
        let small = Hyperideal::new(&h, h.set_from_names(&["c0", "c4"]).unwrap()).unwrap();
        assert!(matches!(q.projection_hom().image_ideal(small), Err(Error::Precondition(_))));
    }

    #[test]
    fn quotient_by_zero_and_classical() {
        for e in catalog::builtin_catalog() {
            let q = quotient(&e.ring, Hyperideal::zero(&e.ring)).unwrap();
            assert_eq!(q.ring.size(), e.ring.size(), "{}", e.name);
        }
        let z12 = catalog::zn(12);
        let j = Hyperideal::new(&z12, [0, 6].into_iter().collect()).unwrap();
        let q = quotient(&z12, j).unwrap();
        assert_eq!(q.ring.size(), 6);
        for x in 0..12 {
            for y in 0..12 {
                let c = q.ring.g(&[q.projection[x], q.projection[y]]);
                assert!(q.cosets[c].contains((x * y) % 12));
            }
        }
        assert!(matches!(quotient(&z12, Hyperideal::whole(&z12)), Err(Error::NotProper)));
    }

    #[test]
    fn swap_on_variant_fails_multiplicatively() {
        let v = catalog::ternary_variant();
        let swap = Homomorphism::new(&v, &v, vec![0, 2, 1]);
        let verdict = swap.is_homomorphism().unwrap();
        let w = verdict.witness.unwrap();
        assert_eq!(w.sets, vec![ElementSet::singleton(1)]);
        assert_eq!(w.tuple, vec![1, 1, 2]);
        let s = catalog::ternary_sign();
        let homs = homomorphisms(&s, &s, false).unwrap();
        assert!(homs.contains(&vec![0, 1, 2]));
    }

    #[test]
    fn enumeration_agrees_with_direct_check() {
        let (z4, z2) = (catalog::zn(4), catalog::zn(2));
        let homs = homomorphisms(&z4, &z2, true).unwrap();
        assert_eq!(homs, vec![vec![0, 1, 0, 1]]);
        for map in crate::tuples::all_tuples(2, 4) {
            let h = Homomorphism::new(&z4, &z2, map.clone());
            let ok = map[0] == 0 && map[1] == 1 && h.is_homomorphism().unwrap().holds;
            assert_eq!(ok, homs.contains(&map));
        }
    }

    #[test]
    fn subhyperring_inclusion() {
        let p = product(&catalog::zn(2), &catalog::zn(2)).unwrap();
        let subs = subhyperrings(&p);
        assert_eq!(subs.len(), 2);
        let (r, incl) = restrict(&p, subs[0]).unwrap();
        assert!(validate_axioms(&r).passed());
        assert!(Homomorphism::new(&r, &p, incl).is_homomorphism().unwrap().holds);
    }
}
