use std::cmp::Ordering;
use std::fmt;

/// A set of vertices of a simplicial complex, stored as a 64-bit mask.
///
/// Vertex labels are `0..n` with `n <= 63`, so every face, facet and
/// enumeration subset fits in one machine word. Set algebra is bitwise.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct VertexSubset(pub u64);

pub const MAX_VERTICES: usize = 63;

impl VertexSubset {
    pub const EMPTY: VertexSubset = VertexSubset(0);

    pub fn singleton(v: usize) -> Self {
        VertexSubset(1 << v)
    }

    pub fn full(n: usize) -> Self {
        debug_assert!(n <= MAX_VERTICES);
        VertexSubset(if n == 64 { u64::MAX } else { (1u64 << n) - 1 })
    }

    pub fn from_vertices<I: IntoIterator<Item = usize>>(vs: I) -> Self {
        let mut mask = 0u64;
        for v in vs {
            debug_assert!(v <= MAX_VERTICES);
            mask |= 1 << v;
        }
        VertexSubset(mask)
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn contains(self, v: usize) -> bool {
        self.0 >> v & 1 == 1
    }

    pub fn insert(&mut self, v: usize) {
        self.0 |= 1 << v;
    }

    pub fn remove(&mut self, v: usize) {
        self.0 &= !(1 << v);
    }

    pub fn union(self, other: Self) -> Self {
        VertexSubset(self.0 | other.0)
    }

    pub fn intersection(self, other: Self) -> Self {
        VertexSubset(self.0 & other.0)
    }

    pub fn difference(self, other: Self) -> Self {
        VertexSubset(self.0 & !other.0)
    }

    pub fn is_subset_of(self, other: Self) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn is_disjoint_from(self, other: Self) -> bool {
        self.0 & other.0 == 0
    }

    /// Vertices in increasing label order.
    pub fn iter(self) -> BitIter {
        BitIter(self.0)
    }

    pub fn to_vec(self) -> Vec<usize> {
        self.iter().collect()
    }

    /// Position of `v` within the set when members are listed increasingly.
    /// Used for boundary map signs.
    pub fn rank_of(self, v: usize) -> usize {
        (self.0 & ((1u64 << v) - 1)).count_ones() as usize
    }

    /// Lexicographic comparison of the increasing vertex sequences, so that
    /// e.g. {0,3} < {1,2} and a set precedes its proper supersets.
    pub fn lex_cmp(self, other: Self) -> Ordering {
        let mut a = self.0;
        let mut b = other.0;
        while a != 0 && b != 0 {
            let va = a.trailing_zeros();
            let vb = b.trailing_zeros();
            match va.cmp(&vb) {
                Ordering::Equal => {
                    a &= a - 1;
                    b &= b - 1;
                }
                ord => return ord,
            }
        }
        a.count_ones().cmp(&b.count_ones())
    }
}

impl fmt::Debug for VertexSubset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

pub struct BitIter(u64);

impl Iterator for BitIter {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            None
        } else {
            let v = self.0.trailing_zeros() as usize;
            self.0 &= self.0 - 1;
            Some(v)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rank_counts_smaller_members() {
        let s = VertexSubset::from_vertices([1, 4, 7]);
        assert_eq!(s.rank_of(1), 0);
        assert_eq!(s.rank_of(4), 1);
        assert_eq!(s.rank_of(7), 2);
    }

    #[test]
    fn lex_order_on_vertex_sequences() {
        let a = VertexSubset::from_vertices([0, 3]);
        let b = VertexSubset::from_vertices([1, 2]);
        assert_eq!(a.lex_cmp(b), Ordering::Less);
        let p = VertexSubset::from_vertices([0]);
        let q = VertexSubset::from_vertices([0, 1]);
        assert_eq!(p.lex_cmp(q), Ordering::Less);
        assert_eq!(q.lex_cmp(p), Ordering::Greater);
        assert_eq!(p.lex_cmp(p), Ordering::Equal);
    }

    #[test]
    fn iter_is_increasing() {
        let s = VertexSubset::from_vertices([5, 0, 2]);
        assert_eq!(s.to_vec(), vec![0, 2, 5]);
        assert_eq!(s.len(), 3);
    }
}
