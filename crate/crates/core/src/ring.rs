//! Finite commutative Krasner (m,n)-hyperrings stored as dense tables.

use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Error, Result, StructureError};
use crate::set::{Elem, ElementSet, MAX_CARRIER};
use crate::tuples::{Multisets, Tuples};

const MAX_TABLE: usize = 1 << 22;

/// Everything about a structure except its two operation tables.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RingShape {
    pub name: String,
    /// Arity of the additive hyperoperation.
    pub m: usize,
    /// Arity of the multiplication.
    pub n: usize,
    pub names: Vec<String>,
    pub zero: Elem,
    pub unit: Option<Elem>,
    /// Additive inverse of each element.
    pub neg: Vec<Elem>,
}

/// A finite structure `(H, f, g)` with an m-ary hyperoperation `f` and an
/// n-ary operation `g`.
///
/// Construction only checks that the tables are total over the carrier. Use
/// [`crate::validate::validate_axioms`] to check the hyperring axioms.
/// Values are immutable once built; the `with_*` methods return modified copies.
#[derive(Clone, PartialEq, Eq)]
pub struct HyperRing {
    name: String,
    m: usize,
    n: usize,
    names: Vec<String>,
    zero: Elem,
    unit: Option<Elem>,
    neg: Vec<Elem>,
    f: Vec<ElementSet>,
    g: Vec<u8>,
}

fn table_len(size: usize, arity: usize) -> std::result::Result<usize, StructureError> {
    let mut len: usize = 1;
    for _ in 0..arity {
        len = len
            .checked_mul(size)
            .filter(|&l| l <= MAX_TABLE)
            .ok_or(StructureError::TableTooLarge { size, arity })?;
    }
    Ok(len)
}

fn check_shape(shape: &RingShape) -> std::result::Result<(), StructureError> {
    let size = shape.names.len();
    if size == 0 {
        return Err(StructureError::EmptyCarrier);
    }
    if size > MAX_CARRIER {
        return Err(StructureError::CarrierTooLarge(size));
    }
    for &a in &[shape.m, shape.n] {
        if a < 2 {
            return Err(StructureError::ArityTooSmall(a));
        }
    }
    let mut seen = std::collections::HashSet::new();
    for name in &shape.names {
        if !seen.insert(name.as_str()) {
            return Err(StructureError::DuplicateName(name.clone()));
        }
    }
    let oob = |role: &str, index: Elem| StructureError::OutOfCarrier { role: role.to_string(), index };
    if shape.zero >= size {
        return Err(oob("zero", shape.zero));
    }
    if let Some(u) = shape.unit {
        if u >= size {
            return Err(oob("unit", u));
        }
    }
    if shape.neg.len() != size {
        return Err(StructureError::NegLength { expected: size, got: shape.neg.len() });
    }
    if let Some(&bad) = shape.neg.iter().find(|&&x| x >= size) {
        return Err(oob("neg", bad));
    }
    table_len(size, shape.m)?;
    table_len(size, shape.n)?;
    Ok(())
}

impl HyperRing {
    /// Build from closures evaluated on every tuple. The closures need not be
    /// symmetric; asymmetry is reported later by the validator.
    pub fn from_fns(
        shape: RingShape,
        f: impl Fn(&[Elem]) -> ElementSet,
        g: impl Fn(&[Elem]) -> Elem,
    ) -> std::result::Result<Self, StructureError> {
        check_shape(&shape)?;
        let size = shape.names.len();
        let full = ElementSet::full(size);
        let mut f_table = Vec::with_capacity(table_len(size, shape.m)?);
        let mut it = Tuples::new(size, shape.m);
        while let Some(t) = it.next_tuple() {
            let v = f(t);
            if v.is_empty() {
                return Err(StructureError::EmptyValue(t.to_vec()));
            }
            if !v.is_subset(full) {
                let bad = v.difference(full).first().unwrap();
                return Err(StructureError::OutOfCarrier { role: format!("f{:?}", t), index: bad });
            }
            f_table.push(v);
        }
        let mut g_table = Vec::with_capacity(table_len(size, shape.n)?);
        let mut it = Tuples::new(size, shape.n);
        while let Some(t) = it.next_tuple() {
            let v = g(t);
            if v >= size {
                return Err(StructureError::OutOfCarrier { role: format!("g{:?}", t), index: v });
            }
            g_table.push(v as u8);
        }
        Ok(HyperRing {
            name: shape.name,
            m: shape.m,
            n: shape.n,
            names: shape.names,
            zero: shape.zero,
            unit: shape.unit,
            neg: shape.neg,
            f: f_table,
            g: g_table,
        })
    }

    /// Build from one entry per multiset, keyed by the sorted argument tuple.
    /// Every multiset must be present exactly once; symmetry holds by construction.
    pub fn from_cells(
        shape: RingShape,
        f_cells: &BTreeMap<Vec<Elem>, ElementSet>,
        g_cells: &BTreeMap<Vec<Elem>, Elem>,
    ) -> std::result::Result<Self, StructureError> {
        check_shape(&shape)?;
        let size = shape.names.len();
        check_cells('f', shape.m, size, f_cells.keys())?;
        check_cells('g', shape.n, size, g_cells.keys())?;
        let mut ms = Multisets::new(size, shape.m);
        while let Some(t) = ms.next_tuple() {
            if !f_cells.contains_key(t) {
                return Err(StructureError::MissingCell { table: 'f', key: t.to_vec() });
            }
        }
        let mut ms = Multisets::new(size, shape.n);
        while let Some(t) = ms.next_tuple() {
            if !g_cells.contains_key(t) {
                return Err(StructureError::MissingCell { table: 'g', key: t.to_vec() });
            }
        }
        HyperRing::from_fns(
            shape,
            |t| {
                let mut k = t.to_vec();
                k.sort_unstable();
                f_cells[&k]
            },
            |t| {
                let mut k = t.to_vec();
                k.sort_unstable();
                g_cells[&k]
            },
        )
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn size(&self) -> usize {
        self.names.len()
    }

    pub fn zero(&self) -> Elem {
        self.zero
    }

    pub fn unit(&self) -> Option<Elem> {
        self.unit
    }

    /// The unit, or [`Error::UnitRequired`] naming `op`.
    pub fn require_unit(&self, op: &'static str) -> Result<Elem> {
        self.unit.ok_or(Error::UnitRequired(op))
    }

    pub fn neg(&self, a: Elem) -> Elem {
        self.neg[a]
    }

    pub fn neg_map(&self) -> &[Elem] {
        &self.neg
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn elem_name(&self, a: Elem) -> &str {
        &self.names[a]
    }

    pub fn elem_by_name(&self, name: &str) -> Option<Elem> {
        self.names.iter().position(|n| n == name)
    }

    pub fn carrier(&self) -> ElementSet {
        ElementSet::full(self.size())
    }

    pub fn elements(&self) -> std::ops::Range<Elem> {
        0..self.size()
    }

    pub fn shape(&self) -> RingShape {
        RingShape {
            name: self.name.clone(),
            m: self.m,
            n: self.n,
            names: self.names.clone(),
            zero: self.zero,
            unit: self.unit,
            neg: self.neg.clone(),
        }
    }

    pub fn renamed(&self, name: impl Into<String>) -> HyperRing {
        HyperRing { name: name.into(), ..self.clone() }
    }

    fn index(&self, t: &[Elem]) -> usize {
        let size = self.size();
        t.iter().fold(0, |acc, &x| acc * size + x)
    }

    /// `f` on an m-tuple of elements.
    pub fn f(&self, t: &[Elem]) -> ElementSet {
        debug_assert_eq!(t.len(), self.m);
        self.f[self.index(t)]
    }

    /// `g` on an n-tuple of elements.
    pub fn g(&self, t: &[Elem]) -> Elem {
        debug_assert_eq!(t.len(), self.n);
        self.g[self.index(t)] as Elem
    }

    /// `f` lifted to sets: the union of `f` over the Cartesian product.
    pub fn f_extend(&self, sets: &[ElementSet]) -> Result<ElementSet> {
        if sets.len() != self.m {
            return Err(Error::WrongLength { expected: self.m, got: sets.len() });
        }
        if sets.iter().any(|s| s.is_empty()) {
            return Err(Error::EmptySet);
        }
        let full = self.carrier();
        if let Some(s) = sets.iter().find(|s| !s.is_subset(full)) {
            return Err(Error::ElementOutOfRange(s.difference(full).first().unwrap()));
        }
        Ok(self.f_sets(sets))
    }

    /// Unchecked set-lifted `f`; callers guarantee `m` nonempty sets.
    pub(crate) fn f_sets(&self, sets: &[ElementSet]) -> ElementSet {
        let members: Vec<Vec<Elem>> = sets.iter().map(|s| s.iter().collect()).collect();
        let mut idx = vec![0usize; self.m];
        let mut tuple: Vec<Elem> = members.iter().map(|v| v[0]).collect();
        let mut acc = ElementSet::EMPTY;
        loop {
            acc = acc.union(self.f(&tuple));
            let mut pos = self.m;
            loop {
                if pos == 0 {
                    return acc;
                }
                pos -= 1;
                idx[pos] += 1;
                if idx[pos] < members[pos].len() {
                    tuple[pos] = members[pos][idx[pos]];
                    break;
                }
                idx[pos] = 0;
                tuple[pos] = members[pos][0];
            }
        }
    }

    /// Iterated multiplication over `l(n-1)+1` arguments, folded from the left.
    pub fn g_iter(&self, l: usize, elems: &[Elem]) -> Result<Elem> {
        let expected = l * (self.n - 1) + 1;
        if l == 0 || elems.len() != expected {
            return Err(Error::WrongLength { expected, got: elems.len() });
        }
        self.check_elems(elems)?;
        Ok(self.g_fold(elems))
    }

    /// Left fold of `g`; `elems.len()` must be `l(n-1)+1` for some `l >= 1`.
    pub(crate) fn g_fold(&self, elems: &[Elem]) -> Elem {
        let n = self.n;
        let mut buf = Vec::with_capacity(n);
        buf.extend_from_slice(&elems[..n]);
        let mut acc = self.g(&buf);
        for chunk in elems[n..].chunks(n - 1) {
            buf.clear();
            buf.push(acc);
            buf.extend_from_slice(chunk);
            acc = self.g(&buf);
        }
        acc
    }

    /// Iterated hyperoperation over `l(m-1)+1` arguments, folded from the left.
    pub fn f_iter(&self, l: usize, elems: &[Elem]) -> Result<ElementSet> {
        let expected = l * (self.m - 1) + 1;
        if l == 0 || elems.len() != expected {
            return Err(Error::WrongLength { expected, got: elems.len() });
        }
        self.check_elems(elems)?;
        let m = self.m;
        let mut acc = self.f(&elems[..m]);
        let mut sets = Vec::with_capacity(m);
        for chunk in elems[m..].chunks(m - 1) {
            sets.clear();
            sets.push(acc);
            sets.extend(chunk.iter().map(|&x| ElementSet::singleton(x)));
            acc = self.f_sets(&sets);
        }
        Ok(acc)
    }

    fn check_elems(&self, elems: &[Elem]) -> Result<()> {
        match elems.iter().find(|&&x| x >= self.size()) {
            Some(&x) => Err(Error::ElementOutOfRange(x)),
            None => Ok(()),
        }
    }

    /// `g(args, 1^{(n - args.len())})`. Needs a unit unless `args.len() == n`.
    pub fn g_padded(&self, args: &[Elem]) -> Result<Elem> {
        if args.len() > self.n || args.is_empty() {
            return Err(Error::WrongLength { expected: self.n, got: args.len() });
        }
        self.check_elems(args)?;
        if args.len() == self.n {
            return Ok(self.g(args));
        }
        let u = self.require_unit("unit padding")?;
        let mut t = args.to_vec();
        t.resize(self.n, u);
        Ok(self.g(&t))
    }

    /// `g(x, y, 1^{(n-2)})`; callers guarantee a unit when `n > 2`.
    pub(crate) fn mul2(&self, x: Elem, y: Elem) -> Elem {
        if self.n == 2 {
            return self.g(&[x, y]);
        }
        let u = self.unit.expect("mul2 needs a unit");
        let mut t = vec![u; self.n];
        t[0] = x;
        t[1] = y;
        self.g(&t)
    }

    /// `g` of `t` with position `i` replaced by `r`.
    pub(crate) fn g_replace(&self, t: &[Elem], i: usize, r: Elem) -> Elem {
        let mut buf = t.to_vec();
        buf[i] = r;
        self.g(&buf)
    }

    /// The `t`-th power of `a`: `g(a^{(t)}, 1^{(n-t)})` for `t <= n`, and the
    /// iterated product of `t` copies of `a` when `t = l(n-1)+1 > n`.
    pub fn power(&self, a: Elem, t: usize) -> Result<Elem> {
        self.check_elems(&[a])?;
        let n = self.n;
        if t == 0 {
            return Err(Error::ExponentNotRepresentable { t, n });
        }
        if t < n {
            let u = self.require_unit("power")?;
            let mut args = vec![a; t];
            args.resize(n, u);
            return Ok(self.g(&args));
        }
        if !(t - 1).is_multiple_of(n - 1) {
            return Err(Error::ExponentNotRepresentable { t, n });
        }
        Ok(self.g_fold(&vec![a; t]))
    }

    /// Every value taken by a representable power of `a`.
    ///
    /// Exponents below `n` are used only when a unit exists. From `t = n` on,
    /// each step multiplies by `n-1` further copies of `a`, so the sequence is
    /// determined by its current value and stops at its first repeat.
    pub fn power_values(&self, a: Elem) -> ElementSet {
        let n = self.n;
        let mut out = ElementSet::EMPTY;
        if let Some(u) = self.unit {
            let mut args = vec![u; n];
            for t in 1..n {
                args[t - 1] = a;
                out.insert(self.g(&args));
            }
        }
        let mut step = vec![a; n];
        let mut p = self.g(&step);
        let mut tail = ElementSet::EMPTY;
        while !tail.contains(p) {
            tail.insert(p);
            step[0] = p;
            p = self.g(&step);
        }
        out.union(tail)
    }

    /// Elements with some representable power in `target`.
    pub fn radical_by_powers(&self, target: ElementSet) -> ElementSet {
        self.elements()
            .filter(|&a| !self.power_values(a).is_disjoint(target))
            .collect()
    }

    /// Elements some representable power of which is zero.
    pub fn nilradical(&self) -> ElementSet {
        self.radical_by_powers(ElementSet::singleton(self.zero))
    }

    /// Elements `e` with `g(a, e^{(n-1)}) = a` for every `a`, in carrier order.
    pub fn scalar_identities(&self) -> Vec<Elem> {
        let n = self.n;
        self.elements()
            .filter(|&e| {
                let mut t = vec![e; n];
                self.elements().all(|a| {
                    t[0] = a;
                    self.g(&t) == a
                })
            })
            .collect()
    }

    /// Copy with a different declared unit.
    pub fn with_unit(&self, unit: Option<Elem>) -> HyperRing {
        HyperRing { unit, ..self.clone() }
    }

    /// Copy with the `f` cell for the multiset `key` (all its orderings) replaced.
    pub fn with_f_cell(&self, key: &[Elem], value: ElementSet) -> HyperRing {
        let mut out = self.clone();
        for p in orderings(key) {
            let i = self.index(&p);
            out.f[i] = value;
        }
        out
    }

    /// Copy with the `g` cell for the multiset `key` (all its orderings) replaced.
    pub fn with_g_cell(&self, key: &[Elem], value: Elem) -> HyperRing {
        let mut out = self.clone();
        for p in orderings(key) {
            let i = self.index(&p);
            out.g[i] = value as u8;
        }
        out
    }

    /// Copy with a different `neg` map.
    pub fn with_neg(&self, neg: Vec<Elem>) -> HyperRing {
        HyperRing { neg, ..self.clone() }
    }

    /// Canonical `f` cells: sorted keys with their values.
    pub fn f_cells(&self) -> BTreeMap<Vec<Elem>, ElementSet> {
        let mut out = BTreeMap::new();
        let mut ms = Multisets::new(self.size(), self.m);
        while let Some(t) = ms.next_tuple() {
            out.insert(t.to_vec(), self.f(t));
        }
        out
    }

    /// Canonical `g` cells: sorted keys with their values.
    pub fn g_cells(&self) -> BTreeMap<Vec<Elem>, Elem> {
        let mut out = BTreeMap::new();
        let mut ms = Multisets::new(self.size(), self.n);
        while let Some(t) = ms.next_tuple() {
            out.insert(t.to_vec(), self.g(t));
        }
        out
    }

    /// The same structure with element `a` renamed to position `perm[a]`.
    pub fn relabel(&self, perm: &[Elem]) -> HyperRing {
        let size = self.size();
        assert_eq!(perm.len(), size);
        let mut inv = vec![0; size];
        for (a, &p) in perm.iter().enumerate() {
            inv[p] = a;
        }
        let mut names = vec![String::new(); size];
        for a in 0..size {
            names[perm[a]] = self.names[a].clone();
        }
        let shape = RingShape {
            name: self.name.clone(),
            m: self.m,
            n: self.n,
            names,
            zero: perm[self.zero],
            unit: self.unit.map(|u| perm[u]),
            neg: (0..size).map(|b| perm[self.neg[inv[b]]]).collect(),
        };
        let map_set = |s: ElementSet| s.iter().map(|x| perm[x]).collect::<ElementSet>();
        HyperRing::from_fns(
            shape,
            |t| {
                let orig: Vec<Elem> = t.iter().map(|&b| inv[b]).collect();
                map_set(self.f(&orig))
            },
            |t| {
                let orig: Vec<Elem> = t.iter().map(|&b| inv[b]).collect();
                perm[self.g(&orig)]
            },
        )
        .expect("relabeling preserves well-formedness")
    }

    /// `{a,b,...}` using element names.
    pub fn format_set(&self, s: ElementSet) -> String {
        let parts: Vec<&str> = s.iter().map(|e| self.elem_name(e)).collect();
        format!("{{{}}}", parts.join(","))
    }

    /// `(a,b,...)` using element names.
    pub fn format_tuple(&self, t: &[Elem]) -> String {
        let parts: Vec<&str> = t.iter().map(|&e| self.elem_name(e)).collect();
        format!("({})", parts.join(","))
    }

    /// Parse a list of element names into a set.
    pub fn set_from_names<S: AsRef<str>>(&self, names: &[S]) -> Option<ElementSet> {
        names.iter().map(|n| self.elem_by_name(n.as_ref())).collect()
    }
}

fn orderings(key: &[Elem]) -> Vec<Vec<Elem>> {
    let mut out: Vec<Vec<Elem>> = crate::tuples::permutations(key.len())
        .into_iter()
        .map(|p| p.iter().map(|&i| key[i]).collect())
        .collect();
    out.sort();
    out.dedup();
    out
}

fn check_cells<'a>(
    table: char,
    arity: usize,
    size: usize,
    keys: impl Iterator<Item = &'a Vec<Elem>>,
) -> std::result::Result<(), StructureError> {
    for key in keys {
        if key.len() != arity {
            return Err(StructureError::KeyArity { table, key: key.clone(), expected: arity, got: key.len() });
        }
        if let Some(&bad) = key.iter().find(|&&x| x >= size) {
            return Err(StructureError::OutOfCarrier { role: format!("{table} key"), index: bad });
        }
        if key.windows(2).any(|w| w[0] > w[1]) {
            return Err(StructureError::NonCanonicalKey { table, key: key.clone() });
        }
    }
    Ok(())
}

impl fmt::Debug for HyperRing {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("HyperRing")
            .field("name", &self.name)
            .field("arity", &(self.m, self.n))
            .field("names", &self.names)
            .field("zero", &self.zero)
            .field("unit", &self.unit)
            .finish_non_exhaustive()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::harness::catalog;

    fn set(h: &HyperRing, names: &[&str]) -> ElementSet {
        h.set_from_names(names).unwrap()
    }

    #[test]
    fn f_extend_examples() {
        let h = catalog::z12_mod_units();
        let c1 = set(&h, &["c1"]);
        assert_eq!(h.f_extend(&[c1, c1]).unwrap(), set(&h, &["c0", "c2", "c4", "c6"]));
        let got = h.f_extend(&[set(&h, &["c2", "c3"]), set(&h, &["c6"])]).unwrap();
        assert_eq!(got, set(&h, &["c3", "c4"]));
        for a in h.elements() {
            let z = ElementSet::singleton(h.zero());
            assert_eq!(h.f_extend(&[ElementSet::singleton(a), z]).unwrap(), ElementSet::singleton(a));
        }
        assert_eq!(h.f_extend(&[c1, ElementSet::EMPTY]), Err(Error::EmptySet));
        assert_eq!(h.f_extend(&[c1]), Err(Error::WrongLength { expected: 2, got: 1 }));
    }

    #[test]
    fn g_iter_examples() {
        let h = catalog::ternary_variant();
        let (one, a) = (h.elem_by_name("1").unwrap(), h.elem_by_name("a").unwrap());
        assert_eq!(h.g_iter(1, &[a, a, a]).unwrap(), a);
        assert_eq!(h.g_iter(2, &[a, a, a, one, one]).unwrap(), a);
        assert_eq!(h.g_iter(2, &[a, a, 0, one, one]).unwrap(), h.zero());
        assert_eq!(h.g_iter(2, &[a, a, a]), Err(Error::WrongLength { expected: 5, got: 3 }));
    }

    #[test]
    fn f_iter_examples() {
        let h = catalog::z12_mod_units();
        let e = |s: &str| h.elem_by_name(s).unwrap();
        assert_eq!(h.f_iter(2, &[e("c1"), e("c0"), e("c0")]).unwrap(), set(&h, &["c1"]));
        assert_eq!(h.f_iter(2, &[e("c2"), e("c2"), e("c6")]).unwrap(), set(&h, &["c2", "c6"]));
        let h6 = catalog::ternary_variant();
        let e6 = |s: &str| h6.elem_by_name(s).unwrap();
        assert_eq!(h6.f_iter(1, &[e6("1"), e6("a"), e6("a")]).unwrap(), h6.carrier());
    }

    #[test]
    fn power_examples() {
        let h = catalog::z12_mod_units();
        let e = |s: &str| h.elem_by_name(s).unwrap();
        assert_eq!(h.power(e("c6"), 2).unwrap(), e("c0"));
        assert_eq!(h.power(e("c2"), 3).unwrap(), e("c4"));
        for t in 1..6 {
            assert_eq!(h.power(e("c1"), t).unwrap(), e("c1"));
        }
        assert!(matches!(h.power(e("c1"), 0), Err(Error::ExponentNotRepresentable { .. })));
        let h6 = catalog::ternary_sign();
        assert!(matches!(h6.power(1, 4), Err(Error::ExponentNotRepresentable { t: 4, n: 3 })));
        assert_eq!(h6.power(1, 5).unwrap(), 1);
        let unitless = h6.with_unit(None);
        assert_eq!(unitless.power(1, 2), Err(Error::UnitRequired("power")));
        assert_eq!(unitless.power(1, 3).unwrap(), 1);
    }

    #[test]
    fn nilradical_examples() {
        let h = catalog::z12_mod_units();
        assert_eq!(h.nilradical(), set(&h, &["c0", "c6"]));
        let h6 = catalog::ternary_variant();
        assert_eq!(h6.nilradical(), ElementSet::singleton(h6.zero()));
        assert_eq!(catalog::ternary_sign().nilradical(), ElementSet::singleton(0));
    }

    #[test]
    fn power_at_n_is_plain_product() {
        for h in [catalog::z12_mod_units(), catalog::ternary_sign(), catalog::zn(8)] {
            for a in h.elements() {
                assert_eq!(h.power(a, h.n()).unwrap(), h.g(&vec![a; h.n()]));
            }
        }
    }

    #[test]
    fn from_cells_rejects_bad_keys() {
        let h = catalog::z12_mod_units();
        let mut f = h.f_cells();
        let g = h.g_cells();
        let (k, v) = f.pop_last().unwrap();
        assert!(matches!(
            HyperRing::from_cells(h.shape(), &f, &g),
            Err(StructureError::MissingCell { table: 'f', .. })
        ));
        f.insert(k.clone(), v);
        let mut rev = k.clone();
        rev.reverse();
        if rev != k {
            f.insert(rev, v);
            assert!(matches!(
                HyperRing::from_cells(h.shape(), &f, &g),
                Err(StructureError::NonCanonicalKey { .. })
            ));
        }
    }

    #[test]
    fn relabel_round_trip() {
        let h = catalog::z12_mod_units();
        let perm = vec![0, 5, 4, 3, 2, 1];
        let back = h.relabel(&perm).relabel(&perm);
        assert!(back == h);
    }
}
