//! Fixed-point complexes `K^G` and the actions they inherit.
//!
//! The vertices of `K^G` are the barycentres of the `G`-orbits that are
//! faces of `K`; a set of such orbits spans a face iff their union is a
//! face of `K`.

use std::collections::HashSet;

use crate::complex::SimplicialComplex;
use crate::error::GroupError;
use crate::group::PermGroup;
use crate::perm::Permutation;
use crate::vertex_set::VertexSet;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FixedPointComplex {
    pub complex: SimplicialComplex,
    /// `vertex_labels[i]` is the orbit represented by vertex `i + 1`, sorted
    /// by smallest member.
    pub vertex_labels: Vec<VertexSet>,
}

impl FixedPointComplex {
    /// Vertex of `K^G` whose label is `orbit`.
    pub fn vertex_of(&self, orbit: VertexSet) -> Option<usize> {
        self.vertex_labels.iter().position(|&o| o == orbit).map(|i| i + 1)
    }

    /// The ambient face spanned by a face of `K^G`.
    pub fn ambient_face(&self, face: VertexSet) -> VertexSet {
        face.iter().fold(VertexSet::EMPTY, |acc, v| acc.union(self.vertex_labels[v - 1]))
    }
}

/// Checks that each permutation maps facets of `k` to facets of `k`.
pub fn validate_action(k: &SimplicialComplex, gens: &[Permutation]) -> Result<(), GroupError> {
    let facets: HashSet<VertexSet> = k.facets().iter().copied().collect();
    for g in gens {
        if g.degree() != k.n() {
            return Err(GroupError::DegreeMismatch {
                expected: k.n(),
                found: g.degree(),
            });
        }
        if k.facets().iter().any(|f| !facets.contains(&g.apply_set(*f))) {
            return Err(GroupError::NotAnAction);
        }
    }
    Ok(())
}

pub fn fixed_point_complex(
    k: &SimplicialComplex,
    g: &PermGroup,
) -> Result<FixedPointComplex, GroupError> {
    if g.degree() != k.n() {
        return Err(GroupError::DegreeMismatch {
            expected: k.n(),
            found: g.degree(),
        });
    }
    validate_action(k, g.generators())?;
    let labels: Vec<VertexSet> = g
        .orbits()
        .orbits
        .into_iter()
        .filter(|o| k.contains_face(*o))
        .collect();
    let facets = k.facets().iter().map(|f| {
        labels
            .iter()
            .enumerate()
            .filter(|(_, o)| o.is_subset(*f))
            .map(|(i, _)| i + 1)
            .collect::<VertexSet>()
    });
    let complex = SimplicialComplex::from_facets(labels.len(), facets)
        .expect("every face orbit lies in some facet");
    Ok(FixedPointComplex {
        complex,
        vertex_labels: labels,
    })
}

/// Coarse shape of a fixed-point complex.
#[derive(Clone, Copy, Debug, PartialEq, Eq, serde::Serialize)]
pub enum FixedShape {
    Empty,
    /// A single simplex of the given dimension.
    Simplex(usize),
    /// Full complementarity on this many vertices, and not a simplex.
    Complementary(usize),
    Other,
}

pub fn fixed_shape(k: &SimplicialComplex) -> FixedShape {
    if k.is_empty() {
        return FixedShape::Empty;
    }
    if k.facets().len() == 1 && k.facets()[0] == VertexSet::full(k.n()) {
        return FixedShape::Simplex(k.n() - 1);
    }
    match k.complementarity_status() {
        Ok(crate::complex::Complementarity::Full) => FixedShape::Complementary(k.n()),
        _ => FixedShape::Other,
    }
}

/// For `K` with full complementarity and `r` orbits of `G`: `K^G` is empty
/// if `r = 1`, a point if `r = 2`, and otherwise an `(r-2)`-simplex or an
/// `r`-vertex complex with complementarity; it is empty or a simplex iff
/// some orbit is a non-face. Returns the shape, and whether the rule held.
pub fn complementarity_inheritance(
    k: &SimplicialComplex,
    g: &PermGroup,
) -> Result<(FixedShape, bool), GroupError> {
    let fixed = fixed_point_complex(k, g)?;
    let orbits = g.orbits();
    let r = orbits.count();
    let shape = fixed_shape(&fixed.complex);
    let expected_by_r = match r {
        1 => shape == FixedShape::Empty,
        2 => shape == FixedShape::Simplex(0),
        _ => shape == FixedShape::Simplex(r - 2) || shape == FixedShape::Complementary(r),
    };
    let some_non_face = orbits.orbits.iter().any(|o| !k.contains_face(*o));
    let empty_or_simplex = matches!(shape, FixedShape::Empty | FixedShape::Simplex(_));
    Ok((shape, expected_by_r && some_non_face == empty_or_simplex))
}

/// `K^N` together with the action of `G` on it, for `N` normal in `G`.
/// The returned group is the image of `G`, so `N` acts trivially.
pub fn induced_action(
    k: &SimplicialComplex,
    g: &PermGroup,
    n: &PermGroup,
) -> Result<(FixedPointComplex, PermGroup), GroupError> {
    validate_action(k, g.generators())?;
    if !g.is_normal_subgroup(n) {
        return Err(GroupError::NotNormal);
    }
    let fixed = fixed_point_complex(k, n)?;
    let m = fixed.vertex_labels.len();
    let gens: Vec<Permutation> = g
        .generators()
        .iter()
        .map(|h| {
            let images: Vec<usize> = fixed
                .vertex_labels
                .iter()
                .map(|&o| fixed.vertex_of(h.apply_set(o)).expect("normality permutes N-orbits"))
                .collect();
            Permutation::from_images(&images).expect("orbit images are distinct")
        })
        .collect();
    let quotient = PermGroup::generate(m, gens)?;
    validate_action(&fixed.complex, quotient.generators())?;
    Ok((fixed, quotient))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::{boundary_simplex, cp2_9, pt_disjoint_boundary, rp2_6, sym_cp2_9};

    #[test]
    fn trivial_group_gives_the_complex_back() {
        let k = cp2_9();
        let f = fixed_point_complex(&k, &PermGroup::trivial(9)).unwrap();
        assert_eq!(f.complex, k);
        assert!(f.vertex_labels.iter().enumerate().all(|(i, l)| *l == VertexSet::singleton(i + 1)));
    }

    #[test]
    fn non_action_is_rejected() {
        let k = pt_disjoint_boundary(2);
        let g = PermGroup::generate(4, vec![Permutation::parse_cycles(4, "(1 4)").unwrap()]).unwrap();
        assert_eq!(fixed_point_complex(&k, &g), Err(GroupError::NotAnAction));
    }

    #[test]
    fn involutions_of_cp2_fix_six_vertex_planes() {
        let k = cp2_9();
        let sym = sym_cp2_9();
        let invs: Vec<&Permutation> = sym.elements().iter().filter(|e| e.order() == 2).collect();
        assert_eq!(invs.len(), 9);
        for s in invs {
            let f = fixed_point_complex(&k, &PermGroup::cyclic(s)).unwrap();
            assert_eq!(f.complex.n(), 6);
            assert_eq!(f.complex.f_vector(), rp2_6().f_vector());
        }
    }

    #[test]
    fn transitive_group_has_empty_fixed_complex() {
        let k = boundary_simplex(3);
        let g = PermGroup::generate(4, vec![Permutation::parse_cycles(4, "(1 2 3 4)").unwrap()]).unwrap();
        let f = fixed_point_complex(&k, &g).unwrap();
        assert!(f.complex.is_empty());
        assert!(f.vertex_labels.is_empty());
    }

    #[test]
    fn induced_action_with_trivial_kernel() {
        let k = cp2_9();
        let s = sym_cp2_9().elements().iter().find(|e| e.order() == 2).unwrap().clone();
        let g = PermGroup::cyclic(&s);
        let (fixed, q) = induced_action(&k, &g, &PermGroup::trivial(9)).unwrap();
        assert_eq!(fixed.complex, k);
        assert_eq!(q.elements(), g.elements());
    }

    #[test]
    fn inheritance_on_cp2_subgroups() {
        let k = cp2_9();
        for h in sym_cp2_9().all_subgroups() {
            let (shape, ok) = complementarity_inheritance(&k, &h).unwrap();
            assert!(ok, "{shape:?} for order {}", h.order());
        }
    }

    #[test]
    fn non_normal_is_rejected() {
        let k = cp2_9();
        let sym = sym_cp2_9();
        let s = sym.elements().iter().find(|e| e.order() == 2).unwrap();
        assert_eq!(
            induced_action(&k, &sym, &PermGroup::cyclic(s)).unwrap_err(),
            GroupError::NotNormal
        );
    }
}
