use std::collections::{HashMap, VecDeque};

use serde::Serialize;

use super::SimplicialComplex;
use crate::error::ComplexError;
use crate::vertex_set::{binomial, VertexSet};

/// Largest vertex count for which the `2ⁿ`-bit face indicator is built.
pub const DEFAULT_COMPLEMENTARITY_CAP: usize = 27;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct PseudomanifoldStatus {
    pub pure: bool,
    pub weak: bool,
    pub strong: bool,
    /// Only meaningful when `weak` holds; always `false` otherwise.
    pub orientable: bool,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Complementarity {
    /// For every `σ ⊆ V` exactly one of `σ`, `V∖σ` is a face.
    Full,
    /// At most one of them is a face, and for some `σ` neither is.
    Half,
    Neither,
}

impl Complementarity {
    /// True for `Full` and `Half`.
    pub fn at_most_one(self) -> bool {
        !matches!(self, Complementarity::Neither)
    }
}

impl SimplicialComplex {
    /// Largest `k` such that every `k`-subset of the vertices is a face.
    pub fn neighborliness(&self) -> usize {
        let f = self.f_vector();
        let n = self.n() as u64;
        let mut k = 0;
        while k < self.n() && f.get(k as isize) == binomial(n, k as u64 + 1) {
            k += 1;
        }
        k
    }

    pub fn pseudomanifold_status(&self, d: usize) -> PseudomanifoldStatus {
        let mut status = PseudomanifoldStatus {
            pure: false,
            weak: false,
            strong: false,
            orientable: false,
        };
        if self.is_empty() || self.facets().iter().any(|f| f.len() != d + 1) {
            return status;
        }
        status.pure = true;
        if d == 0 {
            // Ridges are the empty face; a weak 0-pseudomanifold is two points.
            status.weak = self.facets().len() == 2;
            status.strong = false;
            status.orientable = status.weak;
            return status;
        }

        let facets = self.facets();
        let mut ridge_cofacets: HashMap<VertexSet, Vec<usize>> = HashMap::new();
        for (i, f) in facets.iter().enumerate() {
            for v in f.iter() {
                ridge_cofacets.entry(f.without(v)).or_default().push(i);
            }
        }
        if ridge_cofacets.values().any(|c| c.len() != 2) {
            return status;
        }
        status.weak = true;

        // BFS over the dual graph, propagating ±1 orientations. A facet's
        // reference orientation is its ascending vertex order; dropping the
        // vertex at position `p` induces sign (-1)^p on the ridge.
        let position = |f: VertexSet, v: usize| f.iter().position(|w| w == v).unwrap();
        let mut sign: Vec<i8> = vec![0; facets.len()];
        let mut components = 0;
        let mut orientable = true;
        for start in 0..facets.len() {
            if sign[start] != 0 {
                continue;
            }
            components += 1;
            sign[start] = 1;
            let mut queue = VecDeque::from([start]);
            while let Some(i) = queue.pop_front() {
                let f = facets[i];
                for v in f.iter() {
                    let ridge = f.without(v);
                    let pair = &ridge_cofacets[&ridge];
                    let j = if pair[0] == i { pair[1] } else { pair[0] };
                    let g = facets[j];
                    let w = g.difference(ridge).min_vertex().unwrap();
                    let parity = (position(f, v) + position(g, w)) % 2;
                    let wanted = if parity == 0 { -sign[i] } else { sign[i] };
                    if sign[j] == 0 {
                        sign[j] = wanted;
                        queue.push_back(j);
                    } else if sign[j] != wanted {
                        orientable = false;
                    }
                }
            }
        }
        status.strong = components == 1;
        status.orientable = orientable;
        status
    }

    /// Strongly connected components of the facet dual graph (facets
    /// adjacent through a shared codimension-one face), as facet index lists.
    pub fn strong_components(&self) -> Vec<Vec<usize>> {
        let facets = self.facets();
        let mut by_ridge: HashMap<VertexSet, Vec<usize>> = HashMap::new();
        for (i, f) in facets.iter().enumerate() {
            for v in f.iter() {
                by_ridge.entry(f.without(v)).or_default().push(i);
            }
        }
        let mut comp = vec![usize::MAX; facets.len()];
        let mut out = Vec::new();
        for s in 0..facets.len() {
            if comp[s] != usize::MAX {
                continue;
            }
            let id = out.len();
            let mut members = vec![s];
            comp[s] = id;
            let mut k = 0;
            while k < members.len() {
                let i = members[k];
                k += 1;
                for v in facets[i].iter() {
                    for &j in &by_ridge[&facets[i].without(v)] {
                        if comp[j] == usize::MAX && facets[j].len() == facets[i].len() {
                            comp[j] = id;
                            members.push(j);
                        }
                    }
                }
            }
            members.sort_unstable();
            out.push(members);
        }
        out
    }

    pub fn complementarity_status(&self) -> Result<Complementarity, ComplexError> {
        self.complementarity_status_with_cap(DEFAULT_COMPLEMENTARITY_CAP)
    }

    /// Materializes the `2ⁿ`-bit face indicator and scans the `2ⁿ⁻¹`
    /// complementary pairs.
    pub fn complementarity_status_with_cap(
        &self,
        cap: usize,
    ) -> Result<Complementarity, ComplexError> {
        let n = self.n();
        if n > cap {
            return Err(ComplexError::ComplementarityCap { n, cap });
        }
        if n == 0 {
            // Only σ = ∅ = V, which is a face of itself: both, not exactly one.
            return Ok(Complementarity::Neither);
        }
        let faces = FaceIndicator::new(self);
        let full = VertexSet::full(n).bits();
        let half = 1u64 << (n - 1);
        let mut both = false;
        let mut neither = false;
        for m in 0..half {
            match (faces.get(m), faces.get(full ^ m)) {
                (true, true) => both = true,
                (false, false) => neither = true,
                _ => {}
            }
            if both {
                break;
            }
        }
        Ok(if both {
            Complementarity::Neither
        } else if neither {
            Complementarity::Half
        } else {
            Complementarity::Full
        })
    }
}

/// Bitset over all `2ⁿ` vertex subsets marking the faces of a complex.
pub(crate) struct FaceIndicator {
    words: Vec<u64>,
}

impl FaceIndicator {
    pub(crate) fn new(k: &SimplicialComplex) -> Self {
        let n = k.n();
        let nwords = if n <= 6 { 1 } else { 1usize << (n - 6) };
        let mut words = vec![0u64; nwords];
        for f in k.facets() {
            let b = f.bits();
            words[(b >> 6) as usize] |= 1u64 << (b & 63);
        }
        // Downward closure, one coordinate at a time.
        const LOW: [u64; 6] = [
            0xAAAA_AAAA_AAAA_AAAA,
            0xCCCC_CCCC_CCCC_CCCC,
            0xF0F0_F0F0_F0F0_F0F0,
            0xFF00_FF00_FF00_FF00,
            0xFFFF_0000_FFFF_0000,
            0xFFFF_FFFF_0000_0000,
        ];
        for (i, mask) in LOW.iter().enumerate().take(n.min(6)) {
            for w in words.iter_mut() {
                *w |= (*w & mask) >> (1u32 << i);
            }
        }
        for j in 0..n.saturating_sub(6) {
            let bit = 1usize << j;
            for idx in 0..nwords {
                if idx & bit != 0 {
                    let v = words[idx];
                    words[idx ^ bit] |= v;
                }
            }
        }
        FaceIndicator { words }
    }

    #[inline]
    pub(crate) fn get(&self, mask: u64) -> bool {
        self.words[(mask >> 6) as usize] >> (mask & 63) & 1 == 1
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn lists(n: usize, l: &[&[usize]]) -> SimplicialComplex {
        SimplicialComplex::from_vertex_lists(n, l).unwrap()
    }

    fn boundary(k: usize) -> SimplicialComplex {
        let facets = crate::vertex_set::k_subsets(k + 1, k);
        SimplicialComplex::from_facets(k + 1, facets).unwrap()
    }

    #[test]
    fn neighborliness_of_simplex_boundaries() {
        for d in 1..6 {
            assert_eq!(boundary(d).neighborliness(), d);
        }
    }

    #[test]
    fn sphere_is_strong_orientable() {
        let s = boundary(3).pseudomanifold_status(2);
        assert_eq!(
            s,
            PseudomanifoldStatus {
                pure: true,
                weak: true,
                strong: true,
                orientable: true
            }
        );
        assert!(!boundary(3).pseudomanifold_status(3).pure);
    }

    #[test]
    fn two_circles_are_weak_not_strong() {
        let k = lists(6, &[&[1, 2], &[1, 3], &[2, 3], &[4, 5], &[4, 6], &[5, 6]]);
        let s = k.pseudomanifold_status(1);
        assert!(s.pure && s.weak && !s.strong && s.orientable);
        assert_eq!(k.strong_components().len(), 2);
    }

    #[test]
    fn pinched_complex_is_not_weak() {
        // Three triangles around an edge.
        let k = lists(5, &[&[1, 2, 3], &[1, 2, 4], &[1, 2, 5]]);
        let s = k.pseudomanifold_status(2);
        assert!(s.pure && !s.weak && !s.orientable);
    }

    #[test]
    fn moebius_strip_boundary_is_detected_nonorientable_via_rp2() {
        // Six-vertex projective plane, listed by hand.
        let rp2 = lists(
            6,
            &[
                &[1, 2, 3],
                &[1, 3, 4],
                &[1, 4, 5],
                &[1, 5, 6],
                &[1, 2, 6],
                &[2, 3, 5],
                &[3, 4, 6],
                &[4, 5, 2],
                &[5, 6, 3],
                &[6, 2, 4],
            ],
        );
        let s = rp2.pseudomanifold_status(2);
        assert!(s.weak && s.strong && !s.orientable);
    }

    #[test]
    fn complementarity_cases() {
        assert_eq!(boundary(2).complementarity_status(), Ok(Complementarity::Neither));
        let pt_circle = lists(4, &[&[1, 2], &[1, 3], &[2, 3], &[4]]);
        assert_eq!(pt_circle.complementarity_status(), Ok(Complementarity::Full));
        let three_points = lists(3, &[&[1], &[2], &[3]]);
        assert_eq!(three_points.complementarity_status(), Ok(Complementarity::Full));
        // A single edge on 4 vertices... plus isolated points: {1,2},{3},{4}.
        // {3,4} and {1,2} are complementary; {3,4} is not a face: half at best.
        let k = lists(4, &[&[1, 2], &[3], &[4]]);
        assert_eq!(k.complementarity_status(), Ok(Complementarity::Half));
        let big = SimplicialComplex::from_facets(30, [VertexSet::full(30)]).unwrap();
        assert!(matches!(
            big.complementarity_status(),
            Err(ComplexError::ComplementarityCap { n: 30, cap: 27 })
        ));
    }

    #[test]
    fn face_indicator_matches_contains_face() {
        let k = lists(8, &[&[1, 2, 3, 7], &[3, 4, 5], &[5, 6, 8, 1], &[2, 4, 6, 8]]);
        let ind = FaceIndicator::new(&k);
        for m in 0u64..256 {
            assert_eq!(ind.get(m), k.contains_face(VertexSet::from_bits(m)), "mask {m}");
        }
    }
}
