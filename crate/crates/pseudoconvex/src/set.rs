//! Fixed-width vertex sets.
//!
//! Vertices are ranks `0..n` in the left-to-right order of the hypergraph.
//! A set is a `u128` bitmask, so every pairwise operation used by the ABA
//! tests is constant time. The library therefore caps hypergraphs at
//! [`MAX_VERTICES`] vertices and reports a size error beyond that.

use serde::{Deserialize, Deserializer, Serialize, Serializer};
use std::fmt;

/// Hard cap on the number of vertices of any hypergraph in this crate.
pub const MAX_VERTICES: usize = 128;

/// A subset of vertex ranks, stored as a bitmask (bit `r` = rank `r`).
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct VertexSet(pub u128);

impl VertexSet {
    pub const EMPTY: VertexSet = VertexSet(0);

    /// The full set `{0, .., n-1}`.
    pub fn full(n: usize) -> VertexSet {
        assert!(n <= MAX_VERTICES);
        if n == MAX_VERTICES {
            VertexSet(u128::MAX)
        } else {
            VertexSet((1u128 << n) - 1)
        }
    }

    pub fn singleton(v: usize) -> VertexSet {
        assert!(v < MAX_VERTICES);
        VertexSet(1u128 << v)
    }

    pub fn from_ranks<I: IntoIterator<Item = usize>>(ranks: I) -> VertexSet {
        let mut s = VertexSet::EMPTY;
        for r in ranks {
            s.insert(r);
        }
        s
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn contains(self, v: usize) -> bool {
        v < MAX_VERTICES && self.0 >> v & 1 == 1
    }

    pub fn insert(&mut self, v: usize) {
        assert!(v < MAX_VERTICES);
        self.0 |= 1u128 << v;
    }

    pub fn remove(&mut self, v: usize) {
        if v < MAX_VERTICES {
            self.0 &= !(1u128 << v);
        }
    }

    pub fn with(self, v: usize) -> VertexSet {
        let mut s = self;
        s.insert(v);
        s
    }

    pub fn without(self, v: usize) -> VertexSet {
        let mut s = self;
        s.remove(v);
        s
    }

    pub fn union(self, other: VertexSet) -> VertexSet {
        VertexSet(self.0 | other.0)
    }

    pub fn intersect(self, other: VertexSet) -> VertexSet {
        VertexSet(self.0 & other.0)
    }

    pub fn difference(self, other: VertexSet) -> VertexSet {
        VertexSet(self.0 & !other.0)
    }

    pub fn sym_diff(self, other: VertexSet) -> VertexSet {
        VertexSet(self.0 ^ other.0)
    }

    /// Complement within the full set on `n` vertices.
    pub fn complement(self, n: usize) -> VertexSet {
        VertexSet(!self.0).intersect(VertexSet::full(n))
    }

    pub fn is_subset_of(self, other: VertexSet) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn min(self) -> Option<usize> {
        if self.is_empty() {
            None
        } else {
            Some(self.0.trailing_zeros() as usize)
        }
    }

    pub fn max(self) -> Option<usize> {
        if self.is_empty() {
            None
        } else {
            Some(127 - self.0.leading_zeros() as usize)
        }
    }

    /// Ranks strictly between `lo` and `hi`, i.e. `{lo+1, .., hi-1}`.
    pub fn strictly_between(lo: usize, hi: usize) -> VertexSet {
        if hi <= lo + 1 {
            return VertexSet::EMPTY;
        }
        VertexSet::full(hi).difference(VertexSet::full(lo + 1))
    }

    /// Ranks strictly above `v`.
    pub fn above(v: usize) -> VertexSet {
        VertexSet(!0u128).difference(VertexSet::full(v + 1))
    }

    /// Iterate members in ascending rank order.
    pub fn iter(self) -> impl Iterator<Item = usize> {
        let mut bits = self.0;
        std::iter::from_fn(move || {
            if bits == 0 {
                None
            } else {
                let v = bits.trailing_zeros() as usize;
                bits &= bits - 1;
                Some(v)
            }
        })
    }

    pub fn to_vec(self) -> Vec<usize> {
        self.iter().collect()
    }

    /// Re-rank the members through an induced-subset map: member `v` of
    /// `self ∩ keep` becomes the position of `v` within `keep`.
    pub fn compress(self, keep: VertexSet) -> VertexSet {
        let mut out = VertexSet::EMPTY;
        for (new_rank, old_rank) in keep.iter().enumerate() {
            if self.contains(old_rank) {
                out.insert(new_rank);
            }
        }
        out
    }

    /// Shift ranks `>= position` up by one, freeing the bit at `position`.
    pub fn shift_up_at(self, position: usize) -> VertexSet {
        let low = self.0 & (VertexSet::full(position).0);
        let high = (self.0 & !VertexSet::full(position).0) << 1;
        VertexSet(low | high)
    }

    /// Inverse of `shift_up_at` after removing the bit at `position`.
    pub fn collapse_at(self, position: usize) -> VertexSet {
        let low = self.0 & VertexSet::full(position).0;
        let high = (self.0 & !VertexSet::full(position + 1).0) >> 1;
        VertexSet(low | high)
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        VertexSet::from_ranks(iter)
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, v) in self.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "}}")
    }
}

impl fmt::Display for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

// On the wire a vertex set is a sorted array of ranks.
impl Serialize for VertexSet {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_seq(self.iter())
    }
}

impl<'de> Deserialize<'de> for VertexSet {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let ranks = Vec::<usize>::deserialize(deserializer)?;
        for &r in &ranks {
            if r >= MAX_VERTICES {
                return Err(serde::de::Error::custom(format!(
                    "vertex rank {r} exceeds the {MAX_VERTICES}-vertex cap"
                )));
            }
        }
        Ok(VertexSet::from_ranks(ranks))
    }
}
