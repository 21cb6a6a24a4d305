//! Built-in structures: two small hyperrings, classical rings and a product.

use serde::Serialize;

use crate::constructions::product;
use crate::ring::{HyperRing, RingShape};
use crate::set::{Elem, ElementSet};

/// Where a catalog structure comes from.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Provenance {
    Hyperstructure,
    ClassicalRing,
    Product,
    Search,
}

#[derive(Debug, Clone)]
pub struct CatalogEntry {
    pub name: String,
    pub ring: HyperRing,
    pub provenance: Provenance,
    pub note: String,
}

impl CatalogEntry {
    pub fn new(ring: HyperRing, provenance: Provenance, note: impl Into<String>) -> Self {
        CatalogEntry { name: ring.name().to_string(), ring, provenance, note: note.into() }
    }
}

/// `Z/k` as a Krasner (2,2)-hyperring with singleton sums.
pub fn zn(k: usize) -> HyperRing {
    assert!((1..=64).contains(&k));
    let shape = RingShape {
        name: format!("z{k}"),
        m: 2,
        n: 2,
        names: (0..k).map(|i| i.to_string()).collect(),
        zero: 0,
        unit: (k > 1).then_some(1),
        neg: (0..k).map(|a| (k - a) % k).collect(),
    };
    HyperRing::from_fns(shape, |t| ElementSet::singleton((t[0] + t[1]) % k), |t| (t[0] * t[1]) % k)
        .expect("Z/k is well formed")
}

const Z12_CLASSES: [&str; 6] = ["c0", "c1", "c2", "c3", "c4", "c6"];

/// Index of the class of `x mod 12` among the classes of Z12 modulo its unit group.
fn z12_class(x: usize) -> Elem {
    match x % 12 {
        0 => 0,
        1 | 5 | 7 | 11 => 1,
        2 | 10 => 2,
        3 | 9 => 3,
        4 | 8 => 4,
        6 => 5,
        _ => unreachable!(),
    }
}

/// Z12 modulo its unit group {1,5,7,11}: classes `c0 c1 c2 c3 c4 c6`, with the
/// the addition table given cell by cell and `c_x * c_y = c_{xy}`.
pub fn z12_mod_units() -> HyperRing {
    let sum: [[&[Elem]; 6]; 6] = [
        [&[0], &[1], &[2], &[3], &[4], &[5]],
        [&[1], &[0, 2, 4, 5], &[1, 3], &[2, 4], &[1, 3], &[1]],
        [&[2], &[1, 3], &[0, 4], &[1], &[2, 5], &[4]],
        [&[3], &[2, 4], &[1], &[0, 5], &[1], &[3]],
        [&[4], &[1, 3], &[2, 5], &[1], &[0, 4], &[2]],
        [&[5], &[1], &[4], &[3], &[2], &[0]],
    ];
    let reps = [0usize, 1, 2, 3, 4, 6];
    let shape = RingShape {
        name: "z12-mod-units".into(),
        m: 2,
        n: 2,
        names: Z12_CLASSES.iter().map(|s| s.to_string()).collect(),
        zero: 0,
        unit: Some(1),
        neg: (0..6).collect(),
    };
    HyperRing::from_fns(
        shape,
        |t| sum[t[0]][t[1]].iter().copied().collect(),
        |t| z12_class(reps[t[0]] * reps[t[1]]),
    )
    .expect("table is total")
}

/// Signed ternary structure on `{0, 1, a}`: the sign hyperfield with 3-ary
/// operations, `a` playing the role of -1.
pub fn ternary_sign() -> HyperRing {
    ternary(true)
}

/// The same sums as [`ternary_sign`] but with `g(1,a,a) = a`. This table is
/// not distributive: `g(a,a,f(1,1,a)) = {0,a}` while the distributed sum is `{a}`.
pub fn ternary_variant() -> HyperRing {
    ternary(false)
}

fn ternary(signed: bool) -> HyperRing {
    let (z, one, a) = (0, 1, 2);
    let shape = RingShape {
        name: if signed { "ternary-sign" } else { "ternary-variant" }.into(),
        m: 3,
        n: 3,
        names: vec!["0".into(), "1".into(), "a".into()],
        zero: z,
        unit: Some(one),
        neg: vec![z, a, one],
    };
    let whole = ElementSet::full(3);
    HyperRing::from_fns(
        shape,
        |t| {
            let ones = t.iter().filter(|&&x| x == one).count();
            let minus = t.iter().filter(|&&x| x == a).count();
            match (ones > 0, minus > 0) {
                (false, false) => ElementSet::singleton(z),
                (true, false) => ElementSet::singleton(one),
                (false, true) => ElementSet::singleton(a),
                (true, true) => whole,
            }
        },
        |t| {
            if t.contains(&z) {
                return z;
            }
            let minus = t.iter().filter(|&&x| x == a).count();
            match (signed, minus) {
                (_, 0) => one,
                (false, _) => a,
                (true, k) if k % 2 == 1 => a,
                (true, _) => one,
            }
        },
    )
    .expect("ternary tables are total")
}

/// The catalog every harness run starts from.
pub fn builtin_catalog() -> Vec<CatalogEntry> {
    let sign = ternary_sign();
    let squared = product(&sign, &sign).expect("equal arities").renamed("ternary-sign-squared");
    let mut out = vec![
        CatalogEntry::new(
            z12_mod_units(),
            Provenance::Hyperstructure,
            "classes of Z12 under multiplication by units",
        ),
        CatalogEntry::new(
            sign,
            Provenance::Hyperstructure,
            "sign hyperfield with ternary operations",
        ),
    ];
    for k in [4, 6, 8, 12] {
        out.push(CatalogEntry::new(zn(k), Provenance::ClassicalRing, format!("Z/{k} with singleton sums")));
    }
    out.push(CatalogEntry::new(squared, Provenance::Product, "ternary-sign x ternary-sign"));
    out
}

/// Look up a catalog entry by name, including the non-catalog variant.
pub fn by_name(name: &str) -> Option<HyperRing> {
    if name == "ternary-variant" {
        return Some(ternary_variant());
    }
    if let Some(k) = name.strip_prefix('z').and_then(|k| k.parse::<usize>().ok()) {
        if (1..=64).contains(&k) {
            return Some(zn(k));
        }
    }
    builtin_catalog().into_iter().find(|e| e.name == name).map(|e| e.ring)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn class_table_matches_class_arithmetic() {
        let h = z12_mod_units();
        let reps: [&[usize]; 6] = [&[0], &[1, 5, 7, 11], &[2, 10], &[3, 9], &[4, 8], &[6]];
        for x in 0..6 {
            for y in 0..6 {
                let sums: ElementSet =
                    reps[x].iter().flat_map(|&p| reps[y].iter().map(move |&q| z12_class(p + q))).collect();
                assert_eq!(h.f(&[x, y]), sums, "{} + {}", Z12_CLASSES[x], Z12_CLASSES[y]);
            }
        }
        assert_eq!(h.size(), 6);
    }

    #[test]
    fn ternary_structures_differ_in_one_cell() {
        let (s, v) = (ternary_sign(), ternary_variant());
        let diffs: Vec<_> = s.g_cells().into_iter().filter(|(k, val)| v.g(k) != *val).collect();
        assert_eq!(diffs, vec![(vec![1, 2, 2], 1)]);
        assert_eq!(s.f_cells(), v.f_cells());
    }

    #[test]
    fn catalog_shape() {
        let cat = builtin_catalog();
        let names: Vec<&str> = cat.iter().map(|e| e.name.as_str()).collect();
        assert_eq!(
            names,
            ["z12-mod-units", "ternary-sign", "z4", "z6", "z8", "z12", "ternary-sign-squared"]
        );
        assert_eq!(cat.last().unwrap().ring.size(), 9);
        assert_eq!(zn(4).nilradical(), [0, 2].into_iter().collect());
    }
}
