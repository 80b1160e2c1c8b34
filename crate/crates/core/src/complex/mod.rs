//! Finite simplicial complexes on at most 64 vertices, stored by facets.
//!
//! A complex is kept as its list of maximal faces in increasing bitmask
//! order, so two complexes are equal exactly when their representations are.
//! Faces are only materialized when a computation needs all of them
//! (f-vectors, complementarity, homology).

mod dehn_sommerville;
mod predicates;

use std::collections::HashSet;

pub use dehn_sommerville::{solve_bk_fvector, solve_neighborly_fvector, HVector};
pub use predicates::{Complementarity, PseudomanifoldStatus, DEFAULT_COMPLEMENTARITY_CAP};

use crate::error::ComplexError;
use crate::vertex_set::{VertexSet, MAX_VERTICES};

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SimplicialComplex {
    n: usize,
    facets: Vec<VertexSet>,
}

impl SimplicialComplex {
    /// The complex `{∅}` with no vertices.
    pub fn empty() -> Self {
        SimplicialComplex {
            n: 0,
            facets: Vec::new(),
        }
    }

    /// Builds the complex generated by `facets` on the vertex set `{1..n}`.
    ///
    /// Sets contained in other listed sets are absorbed. Every vertex of
    /// `1..=n` must occur in some facet.
    pub fn from_facets<I>(n: usize, facets: I) -> Result<Self, ComplexError>
    where
        I: IntoIterator<Item = VertexSet>,
    {
        if n > MAX_VERTICES {
            return Err(ComplexError::TooManyVertices(n));
        }
        let full = VertexSet::full(n);
        let mut sets: Vec<VertexSet> = Vec::new();
        for f in facets {
            if !f.is_subset(full) {
                let v = f.difference(full).min_vertex().unwrap();
                return Err(ComplexError::VertexOutOfRange { vertex: v, n });
            }
            if !f.is_empty() {
                sets.push(f);
            }
        }
        if sets.is_empty() {
            return if n == 0 {
                Ok(Self::empty())
            } else {
                Err(ComplexError::NoFacets(n))
            };
        }
        let facets = maximal_sets(sets);
        let covered = facets.iter().fold(VertexSet::EMPTY, |a, f| a.union(*f));
        if let Some(v) = full.difference(covered).min_vertex() {
            return Err(ComplexError::GhostVertex(v));
        }
        Ok(SimplicialComplex { n, facets })
    }

    /// Convenience constructor from 1-based vertex lists.
    pub fn from_vertex_lists(n: usize, lists: &[&[usize]]) -> Result<Self, ComplexError> {
        let mut sets = Vec::with_capacity(lists.len());
        for l in lists {
            let s = VertexSet::try_from_vertices(l.iter().copied()).ok_or(
                ComplexError::VertexOutOfRange {
                    vertex: l.iter().copied().max().unwrap_or(0),
                    n,
                },
            )?;
            sets.push(s);
        }
        Self::from_facets(n, sets)
    }

    /// Builds the complex generated by `facets` on whatever vertices occur,
    /// relabelled to `1..m` in increasing order. Returns the complex and the
    /// original label of each new vertex.
    pub fn compact_from_facets<I>(facets: I) -> (Self, Vec<usize>)
    where
        I: IntoIterator<Item = VertexSet>,
    {
        let sets: Vec<VertexSet> = facets.into_iter().filter(|f| !f.is_empty()).collect();
        let support = sets.iter().fold(VertexSet::EMPTY, |a, f| a.union(*f));
        let labels = support.to_vec();
        let mut map = [0u8; MAX_VERTICES];
        for (i, &v) in labels.iter().enumerate() {
            map[v - 1] = i as u8;
        }
        let relabelled = sets.into_iter().map(|f| f.map_zero_based(&map));
        let k = Self::from_facets(labels.len(), relabelled).expect("support has no ghost vertices");
        (k, labels)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn facets(&self) -> &[VertexSet] {
        &self.facets
    }

    pub fn vertex_set(&self) -> VertexSet {
        VertexSet::full(self.n)
    }

    /// Top dimension; `-1` for the empty complex.
    pub fn dim(&self) -> isize {
        self.facets.iter().map(|f| f.len() as isize - 1).max().unwrap_or(-1)
    }

    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    pub fn is_pure(&self) -> bool {
        let d = self.dim();
        self.facets.iter().all(|f| f.len() as isize - 1 == d)
    }

    pub fn contains_face(&self, sigma: VertexSet) -> bool {
        sigma.is_empty() || self.facets.iter().any(|f| sigma.is_subset(*f))
    }

    /// `link(σ) = {τ : σ ∩ τ = ∅, σ ∪ τ ∈ K}` on the vertices that occur in
    /// it, relabelled to `1..m`. The second component lists the original
    /// label of every link vertex.
    pub fn link_with_labels(
        &self,
        sigma: VertexSet,
    ) -> Result<(SimplicialComplex, Vec<usize>), ComplexError> {
        if !self.contains_face(sigma) {
            return Err(ComplexError::NotAFace(sigma));
        }
        let parts = self
            .facets
            .iter()
            .filter(|f| sigma.is_subset(**f))
            .map(|f| f.difference(sigma));
        Ok(Self::compact_from_facets(parts))
    }

    pub fn link(&self, sigma: VertexSet) -> Result<SimplicialComplex, ComplexError> {
        self.link_with_labels(sigma).map(|(k, _)| k)
    }

    /// Applies a vertex relabelling given as 0-based images (`map[v-1]` is
    /// the new 0-based label of `v`).
    pub fn relabel_zero_based(&self, map: &[u8]) -> SimplicialComplex {
        let mut facets: Vec<VertexSet> = self.facets.iter().map(|f| f.map_zero_based(map)).collect();
        facets.sort_unstable();
        SimplicialComplex { n: self.n, facets }
    }

    /// All faces of a given dimension, sorted by bitmask.
    pub fn faces_of_dim(&self, dim: isize) -> Vec<VertexSet> {
        if dim < 0 {
            return vec![VertexSet::EMPTY];
        }
        let k = (dim + 1) as usize;
        let mut seen: HashSet<VertexSet> = HashSet::new();
        for f in &self.facets {
            if f.len() < k {
                continue;
            }
            if f.len() == k {
                seen.insert(*f);
                continue;
            }
            for s in crate::vertex_set::k_subsets(f.len(), k) {
                seen.insert(expand_subset(*f, s));
            }
        }
        let mut out: Vec<VertexSet> = seen.into_iter().collect();
        out.sort_unstable();
        out
    }

    /// Every nonempty face, grouped by dimension (index `i` holds the
    /// `i`-dimensional faces).
    pub fn faces_by_dim(&self) -> Vec<Vec<VertexSet>> {
        let d = self.dim();
        (0..=d).map(|i| self.faces_of_dim(i)).collect()
    }

    /// Face counts `(f₋₁, f₀, …, f_d)`.
    pub fn f_vector(&self) -> FVector {
        let d = self.dim();
        let mut counts = vec![1u64];
        if d >= 0 {
            let mut seen: HashSet<VertexSet> = HashSet::new();
            for f in &self.facets {
                for s in f.subsets() {
                    if !s.is_empty() {
                        seen.insert(s);
                    }
                }
            }
            counts.resize(d as usize + 2, 0);
            for s in seen {
                counts[s.len()] += 1;
            }
        }
        FVector(counts)
    }

    pub fn euler_characteristic(&self) -> i64 {
        self.f_vector().euler_characteristic()
    }

    pub fn facet_count(&self) -> usize {
        self.facets.len()
    }
}

/// Picks out the members of `f` selected by the positions set in `s`.
pub(crate) fn expand_subset(f: VertexSet, s: VertexSet) -> VertexSet {
    let members: Vec<usize> = f.to_vec();
    s.iter().map(|i| members[i - 1]).collect()
}

fn maximal_sets(mut sets: Vec<VertexSet>) -> Vec<VertexSet> {
    sets.sort_unstable_by(|a, b| b.len().cmp(&a.len()).then(a.cmp(b)));
    sets.dedup();
    let mut kept: Vec<VertexSet> = Vec::with_capacity(sets.len());
    for s in sets {
        if !kept.iter().any(|k| s.is_subset(*k)) {
            kept.push(s);
        }
    }
    kept.sort_unstable();
    kept
}

impl std::fmt::Debug for SimplicialComplex {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "SimplicialComplex(n={}, facets=[", self.n)?;
        for (i, s) in self.facets.iter().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            write!(f, "{s}")?;
        }
        write!(f, "])")
    }
}

/// `(f₋₁, f₀, …, f_d)` with `f₋₁ = 1`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FVector(pub Vec<u64>);

impl FVector {
    /// `f_i` for `i ≥ -1`; zero past the top dimension.
    pub fn get(&self, i: isize) -> u64 {
        self.0.get((i + 1) as usize).copied().unwrap_or(0)
    }

    /// The entries `(f₀, …, f_d)` without the leading `f₋₁`.
    pub fn nonempty(&self) -> &[u64] {
        &self.0[1..]
    }

    pub fn dim(&self) -> isize {
        self.0.len() as isize - 2
    }

    pub fn euler_characteristic(&self) -> i64 {
        self.nonempty()
            .iter()
            .enumerate()
            .map(|(i, &f)| if i % 2 == 0 { f as i64 } else { -(f as i64) })
            .sum()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn vs(v: &[usize]) -> VertexSet {
        VertexSet::from_vertices(v.iter().copied())
    }

    pub(crate) fn boundary_tetrahedron() -> SimplicialComplex {
        SimplicialComplex::from_vertex_lists(4, &[&[1, 2, 3], &[1, 2, 4], &[1, 3, 4], &[2, 3, 4]])
            .unwrap()
    }

    #[test]
    fn from_facets_absorbs_dominated_sets() {
        let k = SimplicialComplex::from_vertex_lists(3, &[&[1, 2, 3], &[1, 2]]).unwrap();
        assert_eq!(k.facets(), &[vs(&[1, 2, 3])]);
    }

    #[test]
    fn from_facets_rejects_ghosts_and_out_of_range() {
        assert_eq!(
            SimplicialComplex::from_vertex_lists(4, &[&[1, 2, 3], &[1, 2]]),
            Err(ComplexError::GhostVertex(4))
        );
        assert!(matches!(
            SimplicialComplex::from_vertex_lists(3, &[&[1, 2, 5]]),
            Err(ComplexError::VertexOutOfRange { vertex: 5, n: 3 })
        ));
        assert_eq!(
            SimplicialComplex::from_facets(3, []),
            Err(ComplexError::NoFacets(3))
        );
    }

    #[test]
    fn from_facets_is_idempotent() {
        let k = boundary_tetrahedron();
        let again = SimplicialComplex::from_facets(k.n(), k.facets().iter().copied()).unwrap();
        assert_eq!(k, again);
    }

    #[test]
    fn contains_face_basics() {
        let k = boundary_tetrahedron();
        assert!(!k.contains_face(vs(&[1, 2, 3, 4])));
        assert!(k.contains_face(vs(&[2, 4])));
        assert!(k.contains_face(VertexSet::EMPTY));
        assert!(SimplicialComplex::empty().contains_face(VertexSet::EMPTY));
    }

    #[test]
    fn link_in_boundary_of_simplex() {
        let k = boundary_tetrahedron();
        let (l, labels) = k.link_with_labels(vs(&[1])).unwrap();
        assert_eq!(labels, vec![2, 3, 4]);
        assert_eq!(l.facets(), &[vs(&[1, 2]), vs(&[1, 3]), vs(&[2, 3])]);
        let top = k.link(vs(&[1, 2, 3])).unwrap();
        assert!(top.is_empty());
        assert_eq!(top.f_vector().0, vec![1]);
        assert_eq!(k.link(vs(&[1, 2, 3, 4])), Err(ComplexError::NotAFace(vs(&[1, 2, 3, 4]))));
    }

    #[test]
    fn f_vector_and_euler() {
        let k = boundary_tetrahedron();
        assert_eq!(k.f_vector().0, vec![1, 4, 6, 4]);
        assert_eq!(k.euler_characteristic(), 2);
        assert_eq!(k.faces_of_dim(1).len(), 6);
        assert_eq!(k.faces_by_dim().iter().map(Vec::len).collect::<Vec<_>>(), vec![4, 6, 4]);
        assert_eq!(SimplicialComplex::empty().euler_characteristic(), 0);
    }

    #[test]
    fn expand_subset_picks_positions() {
        assert_eq!(expand_subset(vs(&[2, 5, 9]), vs(&[1, 3])), vs(&[2, 9]));
    }
}
