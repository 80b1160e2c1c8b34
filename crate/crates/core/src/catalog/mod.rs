//! Named complexes and group actions: simplex boundaries, the six-vertex
//! real projective plane, the nine-vertex complex projective plane with its
//! symmetry group, the 27 group actions on 27 points, and the order-4 seed
//! configuration on 15 vertices.

mod blocks;
mod cp2;
mod table1;

pub use cp2::{
    cp2_9, cp2_9_facets_by_type, heisenberg_on_plane, lines, points_to_set, sym_cp2_9, AffinePoint,
    Line,
};
pub use table1::{table1_actions, CatalogEntry};

use crate::complex::SimplicialComplex;
use crate::group::PermGroup;
use crate::perm::Permutation;
use crate::vertex_set::{k_subsets, VertexSet};

/// `∂Δᵏ` on vertices `1..=k+1`.
pub fn boundary_simplex(k: usize) -> SimplicialComplex {
    assert!(k >= 1);
    SimplicialComplex::from_facets(k + 1, k_subsets(k + 1, k)).expect("simplex boundary")
}

/// `pt ⊔ ∂Δᵏ`, with the isolated point as vertex `k + 2`.
pub fn pt_disjoint_boundary(k: usize) -> SimplicialComplex {
    assert!(k >= 1);
    let facets = k_subsets(k + 1, k).chain(std::iter::once(VertexSet::singleton(k + 2)));
    SimplicialComplex::from_facets(k + 2, facets).expect("point plus simplex boundary")
}

/// The full simplex `Δᵏ` on `k + 1` vertices.
pub fn simplex(k: usize) -> SimplicialComplex {
    SimplicialComplex::from_facets(k + 1, [VertexSet::full(k + 1)]).expect("simplex")
}

/// Boundary of the icosahedron: vertex 1 on top, 2..6 the upper ring,
/// 7..11 the lower ring (vertex `7+i` sits between `2+i` and `3+i`), 12 at
/// the bottom.
const ICOSAHEDRON: [[usize; 3]; 20] = [
    [1, 2, 3],
    [1, 2, 6],
    [1, 3, 4],
    [1, 4, 5],
    [1, 5, 6],
    [2, 3, 7],
    [2, 6, 11],
    [2, 7, 11],
    [3, 4, 8],
    [3, 7, 8],
    [4, 5, 9],
    [4, 8, 9],
    [5, 6, 10],
    [5, 9, 10],
    [6, 10, 11],
    [7, 8, 12],
    [7, 11, 12],
    [8, 9, 12],
    [9, 10, 12],
    [10, 11, 12],
];

/// Antipodal vertex of each icosahedron vertex (index `v - 1`).
const ANTIPODE: [usize; 12] = [12, 9, 10, 11, 7, 8, 5, 6, 2, 3, 4, 1];

pub fn icosahedron() -> SimplicialComplex {
    SimplicialComplex::from_facets(12, ICOSAHEDRON.iter().map(|t| t.iter().copied().collect()))
        .expect("icosahedron")
}

/// The antipodal involution of [`icosahedron`].
pub fn icosahedron_antipode() -> Permutation {
    Permutation::from_images(&ANTIPODE).expect("antipode is a bijection")
}

/// Quotient of the icosahedron by the antipodal map: 6 vertices, 10
/// triangles. Antipodal classes are numbered by their smaller member.
pub fn rp2_6() -> SimplicialComplex {
    let mut class = [0usize; 12];
    let mut next = 0;
    for v in 1..=12 {
        let a = ANTIPODE[v - 1];
        if a > v {
            next += 1;
            class[v - 1] = next;
            class[a - 1] = next;
        }
    }
    let facets = ICOSAHEDRON
        .iter()
        .map(|t| t.iter().map(|&v| class[v - 1]).collect::<VertexSet>());
    SimplicialComplex::from_facets(6, facets).expect("projective plane quotient")
}

/// The order-4 permutation on 15 points and the twelve 9-element facets it
/// seeds.
pub fn c4_seed_configuration() -> (Permutation, Vec<VertexSet>) {
    let a = Permutation::parse_cycles(15, "(1 3 2 4)(5 7 6 8)(9 11 10 12)").expect("valid cycles");
    const SEEDS: [[usize; 9]; 12] = [
        [1, 2, 3, 4, 5, 6, 7, 8, 15],
        [1, 2, 3, 4, 5, 6, 7, 8, 13],
        [5, 6, 7, 8, 9, 10, 11, 12, 13],
        [5, 6, 7, 8, 9, 10, 11, 12, 14],
        [1, 2, 3, 4, 9, 10, 11, 12, 14],
        [1, 2, 3, 4, 9, 10, 11, 12, 15],
        [1, 2, 3, 4, 5, 6, 9, 10, 14],
        [1, 2, 3, 4, 5, 6, 9, 10, 15],
        [1, 2, 5, 6, 7, 8, 9, 10, 15],
        [1, 2, 5, 6, 7, 8, 9, 10, 13],
        [1, 2, 5, 6, 9, 10, 11, 12, 13],
        [1, 2, 5, 6, 9, 10, 11, 12, 14],
    ];
    let facets = SEEDS.iter().map(|f| f.iter().copied().collect()).collect();
    (a, facets)
}

/// The 15-point orbits of the order-2 subgroup `⟨A²⟩` laid out on the
/// affine plane: entry `[y][x]` is the orbit placed at point `(x, y)`.
pub fn c4_seed_orbit_layout() -> [[VertexSet; 3]; 3] {
    let s = |v: &[usize]| v.iter().copied().collect::<VertexSet>();
    [
        [s(&[13]), s(&[1, 2]), s(&[3, 4])],
        [s(&[14]), s(&[5, 6]), s(&[7, 8])],
        [s(&[15]), s(&[9, 10]), s(&[11, 12])],
    ]
}

/// `Q₈` acting regularly on the 8 nonzero vectors of `F₃²`, as the
/// subgroup of `SL(2,3)` generated by `[[0,-1],[1,0]]` and `[[1,1],[1,-1]]`.
pub fn q8_regular() -> PermGroup {
    let gens = blocks::q8_on_nonzero_vectors();
    PermGroup::generate(8, gens).expect("Q8 has order 8")
}

/// `C₂³` acting regularly on 8 points.
pub fn elementary_abelian_8_regular() -> PermGroup {
    let model = vec![
        Permutation::parse_cycles(6, "(1 2)").unwrap(),
        Permutation::parse_cycles(6, "(3 4)").unwrap(),
        Permutation::parse_cycles(6, "(5 6)").unwrap(),
    ];
    let gens = blocks::regular(&model);
    PermGroup::generate(8, gens).expect("order 8")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complex::Complementarity;

    #[test]
    fn simplex_boundaries() {
        let b2 = boundary_simplex(2);
        assert_eq!(b2.facets().len(), 3);
        assert_eq!(b2.f_vector().0, vec![1, 3, 3]);
        let p1 = pt_disjoint_boundary(1);
        assert_eq!(p1.n(), 3);
        assert_eq!(p1.dim(), 0);
        assert_eq!(p1.facets().len(), 3);
        let p5 = pt_disjoint_boundary(5);
        assert_eq!(p5.n(), 7);
        assert!(p5.facets().contains(&VertexSet::singleton(7)));
        assert_eq!(p5.complementarity_status(), Ok(Complementarity::Full));
    }

    #[test]
    fn icosahedron_is_a_sphere_with_free_antipode() {
        let ico = icosahedron();
        assert_eq!(ico.f_vector().0, vec![1, 12, 30, 20]);
        let a = icosahedron_antipode();
        assert!(a.pow(2).is_identity());
        assert!(a.fixed_points().is_empty());
        for f in ico.facets() {
            assert!(ico.facets().contains(&a.apply_set(*f)));
        }
        let s = ico.pseudomanifold_status(2);
        assert!(s.strong && s.orientable);
    }

    #[test]
    fn rp2_counts() {
        let k = rp2_6();
        assert_eq!(k.f_vector().0, vec![1, 6, 15, 10]);
        assert_eq!(k.euler_characteristic(), 1);
        assert_eq!(k.neighborliness(), 2);
        assert_eq!(k.complementarity_status(), Ok(Complementarity::Full));
    }

    #[test]
    fn seed_configuration() {
        let (a, facets) = c4_seed_configuration();
        assert_eq!(facets.len(), 12);
        assert!(facets.iter().all(|f| f.len() == 9));
        assert_eq!(facets[0], VertexSet::from_vertices([1, 2, 3, 4, 5, 6, 7, 8, 15]));
        assert_eq!(a.pow(2).to_cycle_string(), "(1 2)(3 4)(5 6)(7 8)(9 10)(11 12)");
        // The twelve facets alone are not closed under A.
        assert!(facets.iter().any(|f| !facets.contains(&a.apply_set(*f))));
    }

    #[test]
    fn q8_and_c2_cubed() {
        let q = q8_regular();
        assert_eq!(
            q.element_order_multiset(),
            std::collections::BTreeMap::from([(1, 1), (2, 1), (4, 6)])
        );
        assert_eq!(q.orbits().lengths(), vec![8]);
        let e = elementary_abelian_8_regular();
        assert_eq!(e.order(), 8);
        assert_eq!(e.orbits().lengths(), vec![8]);
        assert_eq!(e.exponent(), 2);
    }

    #[test]
    fn heisenberg_is_transitive_exponent_three() {
        let h = heisenberg_on_plane();
        assert_eq!(h.order(), 27);
        assert_eq!(h.exponent(), 3);
        assert!(!h.is_abelian());
        assert_eq!(h.orbits().lengths(), vec![9]);
    }
}
