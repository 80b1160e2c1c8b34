//! Vertex subsets of `{1..n}` packed into a single machine word.

use std::fmt;

/// Largest vertex count a [`VertexSet`] can address.
pub const MAX_VERTICES: usize = 64;

/// A subset of `{1..=64}`. Vertex `v` is stored in bit `v - 1`.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct VertexSet(u64);

impl VertexSet {
    pub const EMPTY: VertexSet = VertexSet(0);

    pub const fn from_bits(bits: u64) -> Self {
        VertexSet(bits)
    }

    pub const fn bits(self) -> u64 {
        self.0
    }

    /// `{1..=n}`.
    pub fn full(n: usize) -> Self {
        assert!(n <= MAX_VERTICES, "vertex count {n} exceeds {MAX_VERTICES}");
        if n == 64 {
            VertexSet(u64::MAX)
        } else {
            VertexSet((1u64 << n) - 1)
        }
    }

    pub fn singleton(v: usize) -> Self {
        assert!((1..=MAX_VERTICES).contains(&v), "vertex {v} out of range");
        VertexSet(1u64 << (v - 1))
    }

    /// Builds a set from 1-based vertex labels.
    ///
    /// Panics on labels outside `1..=64`; use [`VertexSet::try_from_vertices`]
    /// for untrusted input.
    pub fn from_vertices<I: IntoIterator<Item = usize>>(vs: I) -> Self {
        vs.into_iter().fold(Self::EMPTY, |acc, v| acc.with(v))
    }

    pub fn try_from_vertices<I: IntoIterator<Item = usize>>(vs: I) -> Option<Self> {
        let mut bits = 0u64;
        for v in vs {
            if !(1..=MAX_VERTICES).contains(&v) {
                return None;
            }
            bits |= 1u64 << (v - 1);
        }
        Some(VertexSet(bits))
    }

    pub fn with(self, v: usize) -> Self {
        VertexSet(self.0 | Self::singleton(v).0)
    }

    pub fn without(self, v: usize) -> Self {
        VertexSet(self.0 & !Self::singleton(v).0)
    }

    pub fn contains(self, v: usize) -> bool {
        (1..=MAX_VERTICES).contains(&v) && self.0 >> (v - 1) & 1 == 1
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn is_subset(self, other: VertexSet) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn union(self, other: VertexSet) -> Self {
        VertexSet(self.0 | other.0)
    }

    pub fn intersection(self, other: VertexSet) -> Self {
        VertexSet(self.0 & other.0)
    }

    pub fn difference(self, other: VertexSet) -> Self {
        VertexSet(self.0 & !other.0)
    }

    pub fn is_disjoint(self, other: VertexSet) -> bool {
        self.0 & other.0 == 0
    }

    /// Smallest vertex, if any.
    pub fn min_vertex(self) -> Option<usize> {
        (self.0 != 0).then(|| self.0.trailing_zeros() as usize + 1)
    }

    /// Largest vertex, if any.
    pub fn max_vertex(self) -> Option<usize> {
        (self.0 != 0).then(|| 64 - self.0.leading_zeros() as usize)
    }

    /// Ascending iterator over the 1-based members.
    pub fn iter(self) -> VertexIter {
        VertexIter(self.0)
    }

    pub fn to_vec(self) -> Vec<usize> {
        self.iter().collect()
    }

    /// Applies a map on 0-based vertex indices (`map[v - 1]` is the 0-based
    /// image of `v`).
    pub fn map_zero_based(self, map: &[u8]) -> Self {
        let mut out = 0u64;
        let mut bits = self.0;
        while bits != 0 {
            let i = bits.trailing_zeros() as usize;
            out |= 1u64 << map[i];
            bits &= bits - 1;
        }
        VertexSet(out)
    }

    /// All subsets of `self`, including `self` and the empty set.
    pub fn subsets(self) -> SubsetIter {
        SubsetIter {
            set: self.0,
            next: Some(0),
        }
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl fmt::Display for VertexSet {
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

/// Serialized as the ascending list of its vertices.
impl serde::Serialize for VertexSet {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_seq(self.iter())
    }
}

impl<'de> serde::Deserialize<'de> for VertexSet {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let v: Vec<usize> = Vec::deserialize(d)?;
        VertexSet::try_from_vertices(v).ok_or_else(|| serde::de::Error::custom("vertex out of range"))
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        Self::from_vertices(iter)
    }
}

impl IntoIterator for VertexSet {
    type Item = usize;
    type IntoIter = VertexIter;
    fn into_iter(self) -> VertexIter {
        self.iter()
    }
}

pub struct VertexIter(u64);

impl Iterator for VertexIter {
    type Item = usize;
    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let i = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(i + 1)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let n = self.0.count_ones() as usize;
        (n, Some(n))
    }
}

impl ExactSizeIterator for VertexIter {}

/// Gosper-free subset walk: `next = (cur - set) & set`.
pub struct SubsetIter {
    set: u64,
    next: Option<u64>,
}

impl Iterator for SubsetIter {
    type Item = VertexSet;
    fn next(&mut self) -> Option<VertexSet> {
        let cur = self.next?;
        self.next = if cur == self.set {
            None
        } else {
            Some(cur.wrapping_sub(self.set) & self.set)
        };
        Some(VertexSet(cur))
    }
}

/// All `k`-element subsets of `{1..=n}` in increasing bitmask order.
pub fn k_subsets(n: usize, k: usize) -> KSubsets {
    assert!(n <= MAX_VERTICES);
    let next = if k > n {
        None
    } else if k == 0 {
        Some(0)
    } else {
        Some(if k == 64 { u64::MAX } else { (1u64 << k) - 1 })
    };
    KSubsets {
        limit: VertexSet::full(n).0,
        next,
    }
}

pub struct KSubsets {
    limit: u64,
    next: Option<u64>,
}

impl Iterator for KSubsets {
    type Item = VertexSet;
    fn next(&mut self) -> Option<VertexSet> {
        let cur = self.next?;
        self.next = if cur == 0 {
            None
        } else {
            // Gosper's hack
            let c = cur & cur.wrapping_neg();
            let r = cur.wrapping_add(c);
            if r == 0 {
                None
            } else {
                let nxt = (((r ^ cur) >> 2) / c) | r;
                (nxt & !self.limit == 0).then_some(nxt)
            }
        };
        Some(VertexSet(cur))
    }
}

/// Binomial coefficient as `u64`; panics on overflow.
pub fn binomial(n: u64, k: u64) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * (n - i) as u128 / (i + 1) as u128;
    }
    u64::try_from(acc).expect("binomial overflow")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn basic_set_ops() {
        let a = VertexSet::from_vertices([1, 3, 5]);
        let b = VertexSet::from_vertices([3, 5]);
        assert!(b.is_subset(a));
        assert!(!a.is_subset(b));
        assert_eq!(a.len(), 3);
        assert_eq!(a.difference(b).to_vec(), vec![1]);
        assert_eq!(a.min_vertex(), Some(1));
        assert_eq!(a.max_vertex(), Some(5));
        assert_eq!(format!("{a}"), "{1,3,5}");
        assert!(VertexSet::full(64).contains(64));
        assert_eq!(VertexSet::full(64).len(), 64);
    }

    #[test]
    fn subsets_and_k_subsets() {
        let s = VertexSet::from_vertices([2, 4, 7]);
        assert_eq!(s.subsets().count(), 8);
        assert!(s.subsets().all(|t| t.is_subset(s)));
        assert_eq!(k_subsets(6, 3).count(), 20);
        assert_eq!(k_subsets(15, 9).count() as u64, binomial(15, 9));
        assert!(k_subsets(7, 4).all(|t| t.len() == 4 && t.is_subset(VertexSet::full(7))));
        assert_eq!(k_subsets(5, 0).count(), 1);
        assert_eq!(k_subsets(5, 6).count(), 0);
        assert_eq!(k_subsets(5, 5).count(), 1);
    }

    #[test]
    fn binomials() {
        assert_eq!(binomial(15, 5), 3003);
        assert_eq!(binomial(27, 13), 20058300);
        assert_eq!(binomial(3, 4), 0);
    }
}
