//! Exhaustive search for small Krasner (m,n)-hyperrings.
//!
//! Element 0 is the zero. Cells forced by the identity and absorption axioms
//! are fixed up front; the remaining canonical cells are filled addition
//! first, then multiplication, with associativity and distributivity checked
//! on every fully determined instance. Complete addition tables are screened
//! as canonical hypergroups before any multiplication cell is tried. Results
//! are deduplicated up to relabelings that fix 0.

use std::collections::BTreeSet;

use crate::harness::catalog::{CatalogEntry, Provenance};
use crate::ring::{HyperRing, RingShape};
use crate::set::{Elem, ElementSet};
use crate::tuples::{all_multisets, permutations, Tuples};
use crate::validate::validate_axioms;

/// Largest carrier the search accepts.
pub const MAX_SEARCH_SIZE: usize = 4;

#[derive(Debug, Clone)]
pub struct SearchOutcome {
    pub entries: Vec<CatalogEntry>,
    /// False when the node budget ran out before the space was exhausted.
    pub complete: bool,
    pub nodes: u64,
}

/// All structures with carriers of size `1..=max_size`, ordered by size and
/// then by canonical form.
pub fn search_hyperrings(m: usize, n: usize, max_size: usize, budget: u64) -> SearchOutcome {
    assert!(m >= 2 && n >= 2, "arities must be at least 2");
    assert!(max_size <= MAX_SEARCH_SIZE, "carriers above {MAX_SEARCH_SIZE} are not supported");
    let mut out = SearchOutcome { entries: vec![], complete: true, nodes: 0 };
    for size in 1..=max_size {
        let mut s = Searcher::new(m, n, size, budget.saturating_sub(out.nodes));
        s.run();
        out.nodes += s.nodes;
        out.complete &= !s.exhausted;
        let found = s.found.len();
        for (idx, (_, ring)) in s.found.into_iter().enumerate() {
            let name = format!("search-{m}{n}-s{size}-{idx}");
            let note = format!("structure {} of {found} on {size} elements", idx + 1);
            out.entries.push(CatalogEntry::new(ring.renamed(name), Provenance::Search, note));
        }
        if !out.complete {
            break;
        }
    }
    out
}

/// Reference enumeration without pruning: every free cell takes every value,
/// and each complete table is validated. Feasible only for tiny carriers.
pub fn search_naive(m: usize, n: usize, size: usize) -> Vec<HyperRing> {
    let proto = Searcher::new(m, n, size, u64::MAX);
    let f_choices: Vec<ElementSet> = (1u128..(1 << size)).map(ElementSet::from_bits).collect();
    let mut found = BTreeSet::new();
    let mut rings = vec![];
    let mut fi = Tuples::new(f_choices.len(), proto.f_free.len());
    while let Some(fc) = fi.next_tuple() {
        let mut f = proto.f.clone();
        for (cell, &c) in proto.f_free.iter().zip(fc) {
            set_all(&mut f, size, cell, Some(f_choices[c]));
        }
        let mut gi = Tuples::new(size, proto.g_free.len());
        while let Some(gc) = gi.next_tuple() {
            let mut g = proto.g.clone();
            for (cell, &c) in proto.g_free.iter().zip(gc) {
                set_all(&mut g, size, cell, Some(c));
            }
            if let Some(h) = assemble(m, n, size, &f, &g) {
                if validate_axioms(&h).passed() {
                    let (key, canon) = canonical(&h);
                    if found.insert(key) {
                        rings.push(canon);
                    }
                }
            }
        }
    }
    rings.sort_by_key(|h| canonical(h).0);
    rings
}

/// The lexicographically least table encoding over relabelings fixing 0,
/// together with the relabeled structure. The unit of the result is its
/// first scalar identity.
pub fn canonical(h: &HyperRing) -> (Vec<u128>, HyperRing) {
    let s = h.size();
    let mut best: Option<(Vec<u128>, Vec<Elem>)> = None;
    for p in permutations(s.saturating_sub(1)) {
        let perm: Vec<Elem> = std::iter::once(0).chain(p.iter().map(|&x| x + 1)).collect();
        let key = encode(h, &perm);
        if best.as_ref().is_none_or(|(b, _)| key < *b) {
            best = Some((key, perm));
        }
    }
    let (key, perm) = best.expect("at least one relabeling");
    let r = h.relabel(&perm);
    let unit = r.scalar_identities().first().copied();
    (key, r.with_unit(unit))
}

fn encode(h: &HyperRing, perm: &[Elem]) -> Vec<u128> {
    let s = h.size();
    let mut inv = vec![0; s];
    for (a, &b) in perm.iter().enumerate() {
        inv[b] = a;
    }
    let mut key = vec![];
    for t in all_multisets(s, h.m()) {
        let src: Vec<Elem> = t.iter().map(|&x| inv[x]).collect();
        key.push(h.f(&src).iter().map(|x| 1u128 << perm[x]).sum());
    }
    for t in all_multisets(s, h.n()) {
        let src: Vec<Elem> = t.iter().map(|&x| inv[x]).collect();
        key.push(perm[h.g(&src)] as u128);
    }
    key
}

fn index(size: usize, t: &[Elem]) -> usize {
    t.iter().fold(0, |acc, &x| acc * size + x)
}

fn set_all<T: Copy>(table: &mut [Option<T>], size: usize, cell: &[Elem], v: Option<T>) {
    let mut seen = BTreeSet::new();
    for p in permutations(cell.len()) {
        let t: Vec<Elem> = p.iter().map(|&i| cell[i]).collect();
        if seen.insert(t.clone()) {
            table[index(size, &t)] = v;
        }
    }
}

/// Build the structure from complete tables; `None` if additive inverses are
/// not unique.
fn assemble(m: usize, n: usize, size: usize, f: &[Option<ElementSet>], g: &[Option<Elem>]) -> Option<HyperRing> {
    let neg = derive_neg(m, size, f)?;
    let shape = RingShape {
        name: "candidate".into(),
        m,
        n,
        names: (0..size).map(|i| i.to_string()).collect(),
        zero: 0,
        unit: None,
        neg,
    };
    let h = HyperRing::from_fns(shape, |t| f[index(size, t)].unwrap(), |t| g[index(size, t)].unwrap()).ok()?;
    let unit = h.scalar_identities().first().copied();
    Some(h.with_unit(unit))
}

fn derive_neg(m: usize, size: usize, f: &[Option<ElementSet>]) -> Option<Vec<Elem>> {
    let mut t = vec![0; m];
    (0..size)
        .map(|a| {
            let mut partners = (0..size).filter(|&b| {
                t[0] = a;
                t[1] = b;
                f[index(size, &t)].unwrap().contains(0)
            });
            let b = partners.next()?;
            partners.next().is_none().then_some(b)
        })
        .collect()
}

struct Searcher {
    m: usize,
    n: usize,
    size: usize,
    f: Vec<Option<ElementSet>>,
    g: Vec<Option<Elem>>,
    f_free: Vec<Vec<Elem>>,
    g_free: Vec<Vec<Elem>>,
    budget: u64,
    nodes: u64,
    exhausted: bool,
    found: Vec<(Vec<u128>, HyperRing)>,
    keys: BTreeSet<Vec<u128>>,
}

impl Searcher {
    fn new(m: usize, n: usize, size: usize, budget: u64) -> Self {
        let mut f = vec![None; size.pow(m as u32)];
        let mut g = vec![None; size.pow(n as u32)];
        let mut f_free = vec![];
        let mut g_free = vec![];
        for t in all_multisets(size, m) {
            let nonzero: Vec<Elem> = t.iter().copied().filter(|&x| x != 0).collect();
            if nonzero.len() <= 1 {
                let v = ElementSet::singleton(nonzero.first().copied().unwrap_or(0));
                set_all(&mut f, size, &t, Some(v));
            } else {
                f_free.push(t);
            }
        }
        for t in all_multisets(size, n) {
            if t.contains(&0) {
                set_all(&mut g, size, &t, Some(0));
            } else {
                g_free.push(t);
            }
        }
        Searcher {
            m,
            n,
            size,
            f,
            g,
            f_free,
            g_free,
            budget,
            nodes: 0,
            exhausted: false,
            found: vec![],
            keys: BTreeSet::new(),
        }
    }

    fn run(&mut self) {
        self.fill_f(0);
        self.found.sort_by(|a, b| a.0.cmp(&b.0));
    }

    fn tick(&mut self) -> bool {
        self.nodes += 1;
        if self.nodes > self.budget {
            self.exhausted = true;
        }
        !self.exhausted
    }

    fn fill_f(&mut self, k: usize) {
        if !self.tick() {
            return;
        }
        if k == self.f_free.len() {
            if self.additive_ok() {
                self.fill_g(0);
            }
            return;
        }
        let cell = self.f_free[k].clone();
        for bits in 1u128..(1 << self.size) {
            set_all(&mut self.f, self.size, &cell, Some(ElementSet::from_bits(bits)));
            if self.f_assoc_ok() && self.inverse_ok() {
                self.fill_f(k + 1);
            }
            if self.exhausted {
                break;
            }
        }
        set_all(&mut self.f, self.size, &cell, None);
    }

    fn fill_g(&mut self, k: usize) {
        if !self.tick() {
            return;
        }
        if k == self.g_free.len() {
            self.accept();
            return;
        }
        let cell = self.g_free[k].clone();
        for v in 1..self.size {
            set_all(&mut self.g, self.size, &cell, Some(v));
            if self.g_assoc_ok() && self.distributive_ok() {
                self.fill_g(k + 1);
            }
            if self.exhausted {
                break;
            }
        }
        // Products of nonzero elements may also vanish.
        if !self.exhausted {
            set_all(&mut self.g, self.size, &cell, Some(0));
            if self.g_assoc_ok() && self.distributive_ok() {
                self.fill_g(k + 1);
            }
        }
        set_all(&mut self.g, self.size, &cell, None);
    }

    fn accept(&mut self) {
        let Some(h) = assemble(self.m, self.n, self.size, &self.f, &self.g) else { return };
        if !validate_axioms(&h).passed() {
            return;
        }
        let (key, canon) = canonical(&h);
        if self.keys.insert(key.clone()) {
            self.found.push((key, canon));
        }
    }

    fn fv(&self, t: &[Elem]) -> Option<ElementSet> {
        self.f[index(self.size, t)]
    }

    /// `f` with the argument at `pos` ranging over `x`; `None` if a needed cell is open.
    fn f_over(&self, args: &mut [Elem], pos: usize, x: ElementSet) -> Option<ElementSet> {
        let mut acc = ElementSet::EMPTY;
        for v in x {
            args[pos] = v;
            acc = acc.union(self.fv(args)?);
        }
        Some(acc)
    }

    fn f_assoc_ok(&self) -> bool {
        let m = self.m;
        let mut it = Tuples::new(self.size, 2 * m - 1);
        let mut outer = vec![0; m];
        while let Some(a) = it.next_tuple() {
            let mut first: Option<ElementSet> = None;
            for i in 0..m {
                let Some(inner) = self.fv(&a[i..i + m]) else { continue };
                outer[..i].copy_from_slice(&a[..i]);
                outer[i + 1..].copy_from_slice(&a[i + m..]);
                let Some(v) = self.f_over(&mut outer, i, inner) else { continue };
                match first {
                    None => first = Some(v),
                    Some(w) if w != v => return false,
                    _ => {}
                }
            }
        }
        true
    }

    /// No element has two known additive partners.
    fn inverse_ok(&self) -> bool {
        let mut t = vec![0; self.m];
        (0..self.size).all(|a| {
            t[0] = a;
            (0..self.size)
                .filter(|&b| {
                    t[1] = b;
                    self.fv(&t).is_some_and(|v| v.contains(0))
                })
                .count()
                <= 1
        })
    }

    /// The complete addition is a canonical hypergroup: checked by validating it
    /// together with the zero multiplication, which every canonical hypergroup admits.
    fn additive_ok(&self) -> bool {
        let zero = vec![Some(0); self.g.len()];
        match assemble(self.m, self.n, self.size, &self.f, &zero) {
            Some(h) => validate_axioms(&h).passed(),
            None => false,
        }
    }

    fn gv(&self, t: &[Elem]) -> Option<Elem> {
        self.g[index(self.size, t)]
    }

    fn g_assoc_ok(&self) -> bool {
        let n = self.n;
        let mut it = Tuples::new(self.size, 2 * n - 1);
        let mut outer = vec![0; n];
        while let Some(a) = it.next_tuple() {
            let mut first = None;
            for i in 0..n {
                let Some(inner) = self.gv(&a[i..i + n]) else { continue };
                outer[..i].copy_from_slice(&a[..i]);
                outer[i] = inner;
                outer[i + 1..].copy_from_slice(&a[i + n..]);
                let Some(v) = self.gv(&outer) else { continue };
                match first {
                    None => first = Some(v),
                    Some(w) if w != v => return false,
                    _ => {}
                }
            }
        }
        true
    }

    /// `g(f(x_1..x_m), a_2..a_n) = f(g(x_1, a..), .., g(x_m, a..))` wherever determined.
    fn distributive_ok(&self) -> bool {
        let (m, n) = (self.m, self.n);
        let mut rest = Tuples::new(self.size, n - 1);
        let mut gt = vec![0; n];
        let mut ft = vec![0; m];
        while let Some(a) = rest.next_tuple() {
            gt[1..].copy_from_slice(a);
            let mut xs = Tuples::new(self.size, m);
            'x: while let Some(x) = xs.next_tuple() {
                let sum = self.fv(x).expect("addition is complete");
                let mut lhs = ElementSet::EMPTY;
                for y in sum {
                    gt[0] = y;
                    match self.gv(&gt) {
                        Some(v) => lhs.insert(v),
                        None => continue 'x,
                    }
                }
                for (j, &xj) in x.iter().enumerate() {
                    gt[0] = xj;
                    match self.gv(&gt) {
                        Some(v) => ft[j] = v,
                        None => continue 'x,
                    }
                }
                if self.fv(&ft) != Some(lhs) {
                    return false;
                }
            }
        }
        true
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn size_one_is_the_zero_ring() {
        let out = search_hyperrings(2, 2, 1, 1_000);
        assert!(out.complete);
        assert_eq!(out.entries.len(), 1);
    }

    #[test]
    fn pruned_matches_naive_on_two_elements() {
        for (m, n) in [(2, 2), (3, 3), (2, 3)] {
            let pruned: Vec<Vec<u128>> = search_hyperrings(m, n, 2, 1_000_000)
                .entries
                .iter()
                .filter(|e| e.ring.size() == 2)
                .map(|e| canonical(&e.ring).0)
                .collect();
            let naive: Vec<Vec<u128>> = search_naive(m, n, 2).iter().map(|h| canonical(h).0).collect();
            assert_eq!(pruned, naive, "({m},{n})");
        }
    }

    #[test]
    fn two_element_field_is_found() {
        let out = search_hyperrings(2, 2, 2, 1_000_000);
        let z2 = crate::harness::catalog::zn(2);
        let key = canonical(&z2).0;
        assert!(out.entries.iter().any(|e| canonical(&e.ring).0 == key));
    }

    #[test]
    fn budget_is_reported() {
        let out = search_hyperrings(2, 2, 3, 10);
        assert!(!out.complete);
    }
}
