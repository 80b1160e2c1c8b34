//! The 9-vertex complex projective plane on the affine plane over `F₃`.
//!
//! Point `(x, y)` is vertex `3y + x + 1`, so vertices 1..3 form the special
//! line `y = 0`, 4..6 the line `y = 1` and 7..9 the line `y = 2`.

use std::fmt;

use serde::Serialize;

use super::blocks::f3_affine;
use crate::complex::SimplicialComplex;
use crate::group::PermGroup;
use crate::vertex_set::VertexSet;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct AffinePoint {
    pub x: u8,
    pub y: u8,
}

impl AffinePoint {
    /// Coordinates are reduced mod 3.
    pub fn new(x: i64, y: i64) -> Self {
        AffinePoint {
            x: x.rem_euclid(3) as u8,
            y: y.rem_euclid(3) as u8,
        }
    }

    pub fn vertex(self) -> usize {
        3 * self.y as usize + self.x as usize + 1
    }

    pub fn from_vertex(v: usize) -> Self {
        assert!((1..=9).contains(&v));
        AffinePoint {
            x: ((v - 1) % 3) as u8,
            y: ((v - 1) / 3) as u8,
        }
    }

    /// All nine points in vertex order.
    pub fn all() -> impl Iterator<Item = AffinePoint> {
        (1..=9).map(AffinePoint::from_vertex)
    }
}

impl fmt::Display for AffinePoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.x, self.y)
    }
}

/// Vertex set of a list of points.
pub fn points_to_set<I: IntoIterator<Item = AffinePoint>>(pts: I) -> VertexSet {
    pts.into_iter().map(AffinePoint::vertex).collect()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Line {
    pub points: VertexSet,
    /// `Some(t)` for the special line `y = t`.
    pub special: Option<u8>,
}

/// The 12 lines of the plane: the three special lines `y = t` first, then
/// the nine non-special ones.
pub fn lines() -> Vec<Line> {
    let mut out = Vec::with_capacity(12);
    for t in 0..3 {
        out.push(Line {
            points: points_to_set((0..3).map(|x| AffinePoint::new(x, t))),
            special: Some(t as u8),
        });
    }
    // Directions (0,1), (1,1), (1,2) through each point of the line y = 0.
    for (dx, dy) in [(0i64, 1i64), (1, 1), (1, 2)] {
        for x0 in 0..3 {
            out.push(Line {
                points: points_to_set((0..3).map(|s| AffinePoint::new(x0 + s * dx, s * dy))),
                special: None,
            });
        }
    }
    out
}

/// `(27 unions of intersecting non-special lines, 9 sets ℓ_t ∪ (ℓ_{t+1}∖{v}))`.
pub fn cp2_9_facets_by_type() -> (Vec<VertexSet>, Vec<VertexSet>) {
    let all = lines();
    let nonspecial: Vec<VertexSet> =
        all.iter().filter(|l| l.special.is_none()).map(|l| l.points).collect();
    let mut first = Vec::new();
    for (i, a) in nonspecial.iter().enumerate() {
        for b in &nonspecial[i + 1..] {
            if a.intersection(*b).len() == 1 {
                first.push(a.union(*b));
            }
        }
    }
    let special = |t: usize| all[t % 3].points;
    let mut second = Vec::new();
    for t in 0..3 {
        for v in special(t + 1).iter() {
            second.push(special(t).union(special(t + 1).without(v)));
        }
    }
    first.sort_unstable();
    second.sort_unstable();
    (first, second)
}

pub fn cp2_9() -> SimplicialComplex {
    let (a, b) = cp2_9_facets_by_type();
    SimplicialComplex::from_facets(9, a.into_iter().chain(b)).expect("nine-vertex facets")
}

/// `(x, y) ↦ (±x + c·y + a, y + b)`, generated by two translations, the
/// shear `(x + y, y)` and the reflection `(-x, y)`.
pub fn sym_cp2_9() -> PermGroup {
    let gens = vec![
        f3_affine(&[&[1, 0], &[0, 1]], &[1, 0]),
        f3_affine(&[&[1, 0], &[0, 1]], &[0, 1]),
        f3_affine(&[&[1, 1], &[0, 1]], &[0, 0]),
        f3_affine(&[&[-1, 0], &[0, 1]], &[0, 0]),
    ];
    PermGroup::generate(9, gens).expect("order 54")
}

/// The index-2 subgroup of maps `(x + c·y + a, y + b)`.
pub fn heisenberg_on_plane() -> PermGroup {
    let gens = vec![
        f3_affine(&[&[1, 0], &[0, 1]], &[1, 0]),
        f3_affine(&[&[1, 0], &[0, 1]], &[0, 1]),
        f3_affine(&[&[1, 1], &[0, 1]], &[0, 0]),
    ];
    PermGroup::generate(9, gens).expect("order 27")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complex::Complementarity;

    #[test]
    fn vertex_map_round_trip() {
        for v in 1..=9 {
            assert_eq!(AffinePoint::from_vertex(v).vertex(), v);
        }
        assert_eq!(AffinePoint::new(1, 2).vertex(), 8);
        assert_eq!(AffinePoint::new(-1, 4).to_string(), "(2,1)");
    }

    #[test]
    fn lines_form_an_affine_plane() {
        let l = lines();
        assert_eq!(l.len(), 12);
        // Any two distinct points lie on exactly one line.
        for p in 1..=9 {
            for q in p + 1..=9 {
                let pair = VertexSet::from_vertices([p, q]);
                assert_eq!(l.iter().filter(|x| pair.is_subset(x.points)).count(), 1);
            }
        }
    }

    #[test]
    fn facet_types() {
        let (a, b) = cp2_9_facets_by_type();
        assert_eq!(a.len(), 27);
        assert_eq!(b.len(), 9);
        let k = cp2_9();
        assert_eq!(k.facets().len(), 36);
        assert!(k.facets().iter().all(|f| f.len() == 5));
        assert_eq!(k.complementarity_status(), Ok(Complementarity::Full));
        let s = k.pseudomanifold_status(4);
        assert!(s.pure && s.weak && s.strong && s.orientable);
        assert_eq!(k.f_vector().0, vec![1, 9, 36, 84, 90, 36]);
    }

    #[test]
    fn symmetry_group() {
        let g = sym_cp2_9();
        assert_eq!(g.order(), 54);
        let k = cp2_9();
        for e in g.elements() {
            for f in k.facets() {
                assert!(k.facets().contains(&e.apply_set(*f)));
            }
        }
        // Involutions are exactly the maps with sign -1 and b = 0.
        assert_eq!(g.element_order_multiset()[&2], 9);
        let h = heisenberg_on_plane();
        assert_eq!(h.order(), 27);
        assert!(h.is_subgroup_of(&g));
    }

    #[test]
    fn three_subsets_forcing_all_four_supersets() {
        let k = cp2_9();
        let nonspecial: Vec<VertexSet> =
            lines().into_iter().filter(|l| l.special.is_none()).map(|l| l.points).collect();
        for m in crate::vertex_set::k_subsets(9, 3) {
            let all_faces = (1..=9)
                .filter(|&v| !m.contains(v))
                .all(|v| k.contains_face(m.with(v)));
            assert_eq!(all_faces, nonspecial.contains(&m), "subset {m}");
        }
    }

    #[test]
    fn membership_facts_for_every_t() {
        let k = cp2_9();
        let p = |x: i64, y: i64| AffinePoint::new(x, y);
        for t in 0..3 {
            let f1 = points_to_set([p(0, t), p(1, t), p(2, t), p(1, t + 1), p(2, t + 1)]);
            let f2 = points_to_set([p(0, t), p(1, t + 1), p(2, t + 1), p(1, t + 2), p(2, t + 2)]);
            assert!(k.facets().contains(&f1));
            assert!(k.facets().contains(&f2));
            let n1 = points_to_set([p(0, 0), p(0, 1), p(0, 2), p(1, t + 1), p(1, t + 2)]);
            let n2 = points_to_set([p(0, 0), p(0, 1), p(0, 2), p(2, t + 1), p(2, t + 2)]);
            assert!(!k.contains_face(n1));
            assert!(!k.contains_face(n2));
        }
    }
}
