//! Allocation-free odometers over tuples and multisets of carrier elements.

use crate::set::Elem;

/// Every tuple in `0..base` of length `len`, in lexicographic order.
pub struct Tuples {
    base: usize,
    cur: Vec<Elem>,
    started: bool,
    done: bool,
}

impl Tuples {
    pub fn new(base: usize, len: usize) -> Self {
        Tuples {
            base,
            cur: vec![0; len],
            started: false,
            done: base == 0 && len > 0,
        }
    }

    /// Advance and return the next tuple, or `None` when exhausted.
    pub fn next_tuple(&mut self) -> Option<&[Elem]> {
        if self.done {
            return None;
        }
        if !self.started {
            self.started = true;
            return Some(&self.cur);
        }
        for i in (0..self.cur.len()).rev() {
            if self.cur[i] + 1 < self.base {
                self.cur[i] += 1;
                for x in &mut self.cur[i + 1..] {
                    *x = 0;
                }
                return Some(&self.cur);
            }
        }
        self.done = true;
        None
    }
}

/// Every non-decreasing tuple in `0..base` of length `len` (one per multiset),
/// in lexicographic order.
pub struct Multisets {
    base: usize,
    cur: Vec<Elem>,
    started: bool,
    done: bool,
}

impl Multisets {
    pub fn new(base: usize, len: usize) -> Self {
        Multisets {
            base,
            cur: vec![0; len],
            started: false,
            done: base == 0 && len > 0,
        }
    }

    pub fn next_tuple(&mut self) -> Option<&[Elem]> {
        if self.done {
            return None;
        }
        if !self.started {
            self.started = true;
            return Some(&self.cur);
        }
        for i in (0..self.cur.len()).rev() {
            if self.cur[i] + 1 < self.base {
                let v = self.cur[i] + 1;
                for x in &mut self.cur[i..] {
                    *x = v;
                }
                return Some(&self.cur);
            }
        }
        self.done = true;
        None
    }
}

/// Collect every tuple (convenience for small cases and tests).
pub fn all_tuples(base: usize, len: usize) -> Vec<Vec<Elem>> {
    let mut it = Tuples::new(base, len);
    let mut out = Vec::new();
    while let Some(t) = it.next_tuple() {
        out.push(t.to_vec());
    }
    out
}

/// Collect every multiset as a sorted tuple.
pub fn all_multisets(base: usize, len: usize) -> Vec<Vec<Elem>> {
    let mut it = Multisets::new(base, len);
    let mut out = Vec::new();
    while let Some(t) = it.next_tuple() {
        out.push(t.to_vec());
    }
    out
}

/// All `k`-element index subsets of `0..len`, each ascending, in lexicographic order.
pub fn index_subsets(len: usize, k: usize) -> Vec<Vec<usize>> {
    fn rec(start: usize, len: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        let need = k - cur.len();
        for i in start..=len.saturating_sub(need) {
            if i >= len {
                break;
            }
            cur.push(i);
            rec(i + 1, len, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    if k <= len {
        rec(0, len, k, &mut Vec::with_capacity(k), &mut out);
    }
    out
}

/// Every permutation of `0..len` in lexicographic order.
pub fn permutations(len: usize) -> Vec<Vec<usize>> {
    let mut cur: Vec<usize> = (0..len).collect();
    let mut out = vec![cur.clone()];
    while let Some(i) = (1..len).rev().find(|&i| cur[i - 1] < cur[i]) {
        let j = (i..len).rev().find(|&j| cur[j] > cur[i - 1]).unwrap();
        cur.swap(i - 1, j);
        cur[i..].reverse();
        out.push(cur.clone());
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn binom(n: usize, k: usize) -> usize {
        (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
    }

    #[test]
    fn tuple_counts() {
        assert_eq!(all_tuples(3, 4).len(), 81);
        assert_eq!(all_tuples(1, 3), vec![vec![0, 0, 0]]);
        assert_eq!(all_tuples(0, 2).len(), 0);
        assert_eq!(all_tuples(5, 0), vec![Vec::<usize>::new()]);
    }

    #[test]
    fn multiset_counts_match_stars_and_bars() {
        for base in 1..6 {
            for len in 1..5 {
                let ms = all_multisets(base, len);
                assert_eq!(ms.len(), binom(base + len - 1, len));
                assert!(ms.iter().all(|t| t.windows(2).all(|w| w[0] <= w[1])));
            }
        }
    }

    #[test]
    fn subsets_and_permutations() {
        assert_eq!(index_subsets(4, 2).len(), 6);
        assert_eq!(index_subsets(3, 3), vec![vec![0, 1, 2]]);
        assert_eq!(index_subsets(2, 3).len(), 0);
        assert_eq!(permutations(4).len(), 24);
        assert_eq!(permutations(0), vec![Vec::<usize>::new()]);
    }
}
