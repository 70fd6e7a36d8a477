use std::cmp::Ordering;
use std::fmt;

use fixedbitset::FixedBitSet;

use crate::error::{Error, Result};

/// A set of vertex identifiers backed by a bitset of fixed capacity.
///
/// The capacity ties a set to the graph it belongs to: all binary operations
/// require both operands to share it. Iteration is always in ascending vertex
/// order, which keeps every consumer deterministic.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct VertexSet {
    bits: FixedBitSet,
}

impl VertexSet {
    pub fn empty(capacity: usize) -> Self {
        VertexSet {
            bits: FixedBitSet::with_capacity(capacity),
        }
    }

    pub fn full(capacity: usize) -> Self {
        let mut bits = FixedBitSet::with_capacity(capacity);
        bits.insert_range(..);
        VertexSet { bits }
    }

    pub fn singleton(capacity: usize, v: usize) -> Self {
        let mut s = Self::empty(capacity);
        s.insert(v);
        s
    }

    /// Builds a set from explicit members, rejecting out-of-range vertices.
    pub fn from_vertices<I>(capacity: usize, vertices: I) -> Result<Self>
    where
        I: IntoIterator<Item = usize>,
    {
        let mut s = Self::empty(capacity);
        for v in vertices {
            if v >= capacity {
                return Err(Error::VertexOutOfRange {
                    vertex: v,
                    vertex_count: capacity,
                });
            }
            s.insert(v);
        }
        Ok(s)
    }

    pub fn capacity(&self) -> usize {
        self.bits.len()
    }

    pub fn len(&self) -> usize {
        self.bits.count_ones(..)
    }

    pub fn is_empty(&self) -> bool {
        self.bits.is_clear()
    }

    pub fn contains(&self, v: usize) -> bool {
        v < self.bits.len() && self.bits.contains(v)
    }

    pub fn insert(&mut self, v: usize) {
        self.bits.insert(v);
    }

    pub fn remove(&mut self, v: usize) {
        self.bits.set(v, false);
    }

    /// Members in ascending order.
    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.bits.ones()
    }

    pub fn first(&self) -> Option<usize> {
        self.bits.ones().next()
    }

    pub fn to_vec(&self) -> Vec<usize> {
        self.iter().collect()
    }

    fn check(&self, other: &VertexSet) {
        assert_eq!(
            self.capacity(),
            other.capacity(),
            "vertex sets from different graphs"
        );
    }

    pub fn union(&self, other: &VertexSet) -> VertexSet {
        self.check(other);
        let mut bits = self.bits.clone();
        bits.union_with(&other.bits);
        VertexSet { bits }
    }

    pub fn union_with(&mut self, other: &VertexSet) {
        self.check(other);
        self.bits.union_with(&other.bits);
    }

    pub fn intersection(&self, other: &VertexSet) -> VertexSet {
        self.check(other);
        let mut bits = self.bits.clone();
        bits.intersect_with(&other.bits);
        VertexSet { bits }
    }

    pub fn difference(&self, other: &VertexSet) -> VertexSet {
        self.check(other);
        let mut bits = self.bits.clone();
        bits.difference_with(&other.bits);
        VertexSet { bits }
    }

    pub fn is_subset(&self, other: &VertexSet) -> bool {
        self.check(other);
        self.bits.is_subset(&other.bits)
    }

    pub fn is_disjoint(&self, other: &VertexSet) -> bool {
        self.check(other);
        self.bits.is_disjoint(&other.bits)
    }
}

/// Lexicographic over the ascending member sequence; this is the order the
/// solver's tie-break rule uses for stroke areas.
impl Ord for VertexSet {
    fn cmp(&self, other: &Self) -> Ordering {
        self.iter().cmp(other.iter())
    }
}

impl PartialOrd for VertexSet {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl fmt::Display for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}
