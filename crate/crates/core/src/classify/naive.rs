//! Reference implementations by full enumeration of ordered tuples.
//!
//! These share no code with the optimized checks beyond the structure itself
//! and exist to cross-check verdicts.

use crate::ring::HyperRing;
use crate::set::{Elem, ElementSet};
use crate::tuples::{all_tuples, index_subsets, permutations};
use crate::verdict::Reading;

/// Nilradical as the set of elements with some power equal to zero.
pub fn nilradical(h: &HyperRing) -> ElementSet {
    let (n, size) = (h.n(), h.size());
    let bound = n + (size + 1) * (n - 1);
    h.elements()
        .filter(|&a| {
            (1..=bound)
                .filter_map(|t| h.power(a, t).ok())
                .any(|p| p == h.zero())
        })
        .collect()
}

/// Radical as the intersection of all prime hyperideals containing `i`.
pub fn radical(h: &HyperRing, i: ElementSet) -> ElementSet {
    let mut out = h.carrier();
    for p in crate::ideals::enumerate_hyperideals_naive(h) {
        let p = p.members();
        if i.is_subset(p) && p != h.carrier() && is_prime_naive(h, p) {
            out = out.intersection(p);
        }
    }
    out
}

fn is_prime_naive(h: &HyperRing, p: ElementSet) -> bool {
    all_tuples(h.size(), h.n())
        .iter()
        .all(|t| !p.contains(h.g(t)) || t.iter().any(|&a| p.contains(a)))
}

fn product(h: &HyperRing, a: &[Elem]) -> Elem {
    let l = (a.len() - 1) / (h.n() - 1);
    h.g_iter(l, a).expect("representable length")
}

fn drop_one(h: &HyperRing, t: &[Elem], k: usize, r: Elem) -> Elem {
    let mut u = t.to_vec();
    u[k] = r;
    h.g(&u)
}

fn family(h: &HyperRing, i: ElementSet, target: ElementSet, scale: Option<Elem>, reading: Reading) -> bool {
    let nil = nilradical(h);
    let unit = h.unit().expect("unit");
    all_tuples(h.size(), h.n()).iter().all(|t| {
        if !i.contains(h.g(t)) {
            return true;
        }
        let qualifying: Vec<usize> = (0..t.len())
            .filter(|&k| match scale {
                None => !nil.contains(t[k]),
                Some(s) => !nil.contains(h.g_padded(&[s, t[k]]).expect("unit")),
            })
            .collect();
        let ok = |k: usize| target.contains(drop_one(h, t, k, scale.unwrap_or(unit)));
        match reading {
            Reading::Strict => qualifying.iter().all(|&k| ok(k)),
            Reading::Lax => qualifying.is_empty() || qualifying.iter().any(|&k| ok(k)),
        }
    })
}

pub fn is_n(h: &HyperRing, i: ElementSet, reading: Reading) -> bool {
    family(h, i, i, None, reading)
}

pub fn is_delta_n(h: &HyperRing, i: ElementSet, target: ElementSet, reading: Reading) -> bool {
    family(h, i, target, None, reading)
}

pub fn is_s_n(h: &HyperRing, i: ElementSet, s: ElementSet, reading: Reading) -> bool {
    s.iter().any(|e| family(h, i, i, Some(e), reading))
}

/// `(k,n)`-absorbing over ordered tuples. The designated set is the prefix of
/// length `L` of some reordering; Strict asks every reordering to work.
pub fn is_kn_absorbing(h: &HyperRing, i: ElementSet, target: ElementSet, k: usize, reading: Reading) -> bool {
    let nil = nilradical(h);
    let n = h.n();
    let (big, small) = (k * (n - 1) + 1, (k - 1) * (n - 1) + 1);
    let subsets = index_subsets(big, small);
    let perms = permutations(big);
    all_tuples(h.size(), big).iter().all(|a| {
        if !i.contains(product(h, a)) {
            return true;
        }
        let prod = |d: &[usize]| product(h, &d.iter().map(|&p| a[p]).collect::<Vec<_>>());
        let ordering_ok = |perm: &Vec<usize>| {
            let mut d: Vec<usize> = perm[..small].to_vec();
            d.sort_unstable();
            nil.contains(prod(&d)) || subsets.iter().any(|e| *e != d && target.contains(prod(e)))
        };
        match reading {
            Reading::Strict => perms.iter().all(ordering_ok),
            Reading::Lax => perms.iter().any(ordering_ok),
        }
    })
}
