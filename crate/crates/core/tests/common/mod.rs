#![allow(dead_code)]

use std::sync::OnceLock;

use projtri::catalog;
use projtri::vertex_set::k_subsets;
use projtri::{PermGroup, SimplicialComplex, VertexSet};

/// Named catalog complexes with their dimension.
pub fn catalog_complexes() -> Vec<(&'static str, SimplicialComplex, usize)> {
    vec![
        ("boundary_simplex_2", catalog::boundary_simplex(2), 1),
        ("boundary_simplex_3", catalog::boundary_simplex(3), 2),
        ("pt_disjoint_boundary_2", catalog::pt_disjoint_boundary(2), 1),
        ("pt_disjoint_boundary_3", catalog::pt_disjoint_boundary(3), 2),
        ("icosahedron", catalog::icosahedron(), 2),
        ("rp2_6", catalog::rp2_6(), 2),
        ("cp2_9", catalog::cp2_9(), 4),
    ]
}

/// Every family of triangles on 6 vertices, of any size, whose complex
/// covers all six vertices, is a weak 2-pseudomanifold and has at most
/// one of each complementary pair as a face. Found by testing all 2^20
/// subsets directly.
pub fn all_six_vertex_families() -> &'static [Vec<VertexSet>] {
    static CELL: OnceLock<Vec<Vec<VertexSet>>> = OnceLock::new();
    CELL.get_or_init(|| {
        let triangles: Vec<VertexSet> = k_subsets(6, 3).collect();
        let full = VertexSet::full(6);
        let mut out = Vec::new();
        for mask in 1u32..1 << 20 {
            let fam: Vec<VertexSet> = (0..20).filter(|i| mask >> i & 1 == 1).map(|i| triangles[i]).collect();
            if fam.iter().fold(VertexSet::EMPTY, |a, f| a.union(*f)) != full {
                continue;
            }
            // Every edge in zero or two triangles.
            let ok_edges = k_subsets(6, 2).all(|e| {
                let c = fam.iter().filter(|t| e.is_subset(**t)).count();
                c == 0 || c == 2
            });
            if !ok_edges {
                continue;
            }
            // Half-complementarity straight from the definition: no subset
            // and its complement both lie in triangles.
            let is_face = |s: VertexSet| fam.iter().any(|t| s.is_subset(*t));
            let ok_comp = (0u64..64).all(|bits| {
                let s = VertexSet::from_bits(bits);
                !(is_face(s) && is_face(full.difference(s)))
            });
            if ok_comp {
                let mut fam = fam;
                fam.sort();
                out.push(fam);
            }
        }
        out.sort();
        out
    })
}

pub fn is_invariant(fam: &[VertexSet], g: &PermGroup) -> bool {
    g.generators().iter().all(|p| fam.iter().all(|f| fam.contains(&p.apply_set(*f))))
}
