//! Fixed-width subsets of a finite carrier.

use std::cmp::Ordering;
use std::fmt;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

/// Index of an element inside its carrier.
pub type Elem = usize;

/// Largest carrier an [`ElementSet`] can describe.
pub const MAX_CARRIER: usize = 128;

/// A subset of a carrier of at most [`MAX_CARRIER`] elements, stored as a bitmask.
///
/// Bit `i` is set iff carrier element `i` is a member. The set does not know
/// its carrier size; operations that need it (complement, full set) take it
/// as an argument.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default, PartialOrd, Ord)]
pub struct ElementSet(u128);

impl ElementSet {
    pub const EMPTY: ElementSet = ElementSet(0);

    pub fn from_bits(bits: u128) -> Self {
        ElementSet(bits)
    }

    pub fn bits(self) -> u128 {
        self.0
    }

    pub fn singleton(e: Elem) -> Self {
        debug_assert!(e < MAX_CARRIER);
        ElementSet(1u128 << e)
    }

    /// All elements `0..size`.
    pub fn full(size: usize) -> Self {
        debug_assert!(size <= MAX_CARRIER);
        if size == MAX_CARRIER {
            ElementSet(u128::MAX)
        } else {
            ElementSet((1u128 << size) - 1)
        }
    }

    pub fn contains(self, e: Elem) -> bool {
        e < MAX_CARRIER && (self.0 >> e) & 1 == 1
    }

    pub fn insert(&mut self, e: Elem) {
        self.0 |= 1u128 << e;
    }

    pub fn remove(&mut self, e: Elem) {
        self.0 &= !(1u128 << e);
    }

    pub fn with(self, e: Elem) -> Self {
        ElementSet(self.0 | (1u128 << e))
    }

    pub fn union(self, other: Self) -> Self {
        ElementSet(self.0 | other.0)
    }

    pub fn intersection(self, other: Self) -> Self {
        ElementSet(self.0 & other.0)
    }

    pub fn difference(self, other: Self) -> Self {
        ElementSet(self.0 & !other.0)
    }

    pub fn complement(self, size: usize) -> Self {
        ElementSet(!self.0 & Self::full(size).0)
    }

    pub fn is_subset(self, other: Self) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn is_disjoint(self, other: Self) -> bool {
        self.0 & other.0 == 0
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    /// Smallest member, if any.
    pub fn first(self) -> Option<Elem> {
        if self.0 == 0 {
            None
        } else {
            Some(self.0.trailing_zeros() as usize)
        }
    }

    /// Members in ascending order.
    pub fn iter(self) -> Members {
        Members(self.0)
    }

    /// The ordering used for every listing of subsets: cardinality first,
    /// then the bitmask read as an unsigned integer.
    pub fn canonical_cmp(&self, other: &Self) -> Ordering {
        self.len().cmp(&other.len()).then(self.0.cmp(&other.0))
    }
}

impl FromIterator<Elem> for ElementSet {
    fn from_iter<T: IntoIterator<Item = Elem>>(iter: T) -> Self {
        let mut s = ElementSet::EMPTY;
        for e in iter {
            s.insert(e);
        }
        s
    }
}

impl IntoIterator for ElementSet {
    type Item = Elem;
    type IntoIter = Members;
    fn into_iter(self) -> Members {
        self.iter()
    }
}

/// Iterator over the members of an [`ElementSet`].
#[derive(Clone)]
pub struct Members(u128);

impl Iterator for Members {
    type Item = Elem;

    fn next(&mut self) -> Option<Elem> {
        if self.0 == 0 {
            return None;
        }
        let e = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(e)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let n = self.0.count_ones() as usize;
        (n, Some(n))
    }
}

impl ExactSizeIterator for Members {}

/// Serialized as the ascending list of member indices.
impl Serialize for ElementSet {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_seq(self.iter())
    }
}

impl<'de> Deserialize<'de> for ElementSet {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let v = Vec::<Elem>::deserialize(d)?;
        if let Some(&e) = v.iter().find(|&&e| e >= MAX_CARRIER) {
            return Err(serde::de::Error::custom(format!("element {e} exceeds the carrier limit")));
        }
        Ok(v.into_iter().collect())
    }
}

impl fmt::Debug for ElementSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}
