//! Randomized invariants across modules.

mod common;

use proptest::prelude::*;

use projtri::catalog::{cp2_9, heisenberg_on_plane, rp2_6};
use projtri::homology::snf::smith_normal_form_with_transforms;
use projtri::homology::snf::{mat_mul, Matrix};
use projtri::iso::{are_isomorphic, canonical_form, canonical_hash, symmetry_group, verify_certificate};
use projtri::search::{enumerate, enumerate_with, SearchError, SearchOptions, SearchProblem};
use projtri::{PermGroup, Permutation, SimplicialComplex, VertexSet};

fn perm(n: usize) -> impl Strategy<Value = Vec<u8>> {
    Just((0..n as u8).collect::<Vec<u8>>()).prop_shuffle()
}

fn to_perm(map: &[u8]) -> Permutation {
    Permutation::from_images(&map.iter().map(|&x| x as usize + 1).collect::<Vec<_>>()).unwrap()
}

fn six_vertex_outputs(g: &PermGroup, min_facets: usize) -> Vec<SimplicialComplex> {
    match enumerate(&SearchProblem::new(2, 6, min_facets, g.clone())) {
        Ok(out) => out.solutions,
        Err(e) => panic!("{e}"),
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn relabeling_preserves_predicates_and_canonical_form(map in perm(9)) {
        let k = cp2_9();
        let r = k.relabel_zero_based(&map);
        prop_assert_eq!(r.f_vector(), k.f_vector());
        prop_assert_eq!(r.pseudomanifold_status(4), k.pseudomanifold_status(4));
        prop_assert_eq!(r.complementarity_status(), k.complementarity_status());
        prop_assert_eq!(canonical_form(&r), canonical_form(&k));
        prop_assert_eq!(canonical_hash(&r), canonical_hash(&k));
        let cert = are_isomorphic(&k, &r).unwrap();
        prop_assert!(verify_certificate(&k, &r, &cert));
    }

    #[test]
    fn conjugate_symmetry_group(map in perm(6)) {
        let k = rp2_6();
        let r = k.relabel_zero_based(&map);
        let g = symmetry_group(&k).unwrap();
        let h = symmetry_group(&r).unwrap();
        let conj = g.conjugate_by(&to_perm(&map));
        prop_assert_eq!(h.elements(), conj.elements());
    }

    #[test]
    fn order_is_lcm_of_cycle_lengths(map in perm(12)) {
        let p = to_perm(&map);
        let lcm = p.cycle_type().keys().fold(1usize, |a, &b| num_lcm(a, b));
        prop_assert_eq!(p.order(), lcm);
        prop_assert!(p.pow(p.order() as u64).is_identity());
        prop_assert_eq!(p.compose(&p.inverse()), Permutation::identity(12));
    }

    #[test]
    fn smith_form_reconstructs(rows in 1usize..6, cols in 1usize..6, entries in proptest::collection::vec(-6i64..7, 36)) {
        let a: Matrix = (0..rows).map(|i| (0..cols).map(|j| entries[i * 6 + j].into()).collect()).collect();
        let s = smith_normal_form_with_transforms(a.clone());
        let (u, v) = s.transforms.clone().unwrap();
        let d = mat_mul(&mat_mul(&u, &a), &v);
        for i in 0..rows {
            for j in 0..cols {
                let want = if i == j && i < s.diagonal.len() { s.diagonal[i].clone() } else { 0.into() };
                prop_assert_eq!(&d[i][j], &want);
            }
        }
        for w in s.diagonal.windows(2) {
            prop_assert!(w[0].sign() != num_bigint::Sign::Minus);
            if w[0] != 0.into() {
                prop_assert!((&w[1] % &w[0]) == 0.into());
            }
        }
    }
}

fn num_lcm(a: usize, b: usize) -> usize {
    fn gcd(a: usize, b: usize) -> usize {
        if b == 0 { a } else { gcd(b, a % b) }
    }
    a / gcd(a, b) * b
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    /// Exact agreement with the direct oracle for random subgroups of S6.
    #[test]
    fn six_vertex_search_matches_oracle(a in perm(6), b in perm(6), use_b in any::<bool>(), n in 1usize..12) {
        let mut gens = vec![to_perm(&a)];
        if use_b {
            gens.push(to_perm(&b));
        }
        let g = PermGroup::generate(6, gens).unwrap();
        let got = six_vertex_outputs(&g, n);
        let want: Vec<SimplicialComplex> = common::all_six_vertex_families()
            .iter()
            .filter(|f| f.len() >= n && common::is_invariant(f, &g))
            .map(|f| SimplicialComplex::from_facets(6, f.iter().copied()).unwrap())
            .collect();
        let mut want = want;
        want.sort();
        prop_assert_eq!(got, want);
    }

    /// Seeded outputs are a subset of unseeded ones.
    #[test]
    fn seeds_only_shrink_the_output(a in perm(6), seeds in proptest::collection::vec(0usize..20, 1..3)) {
        let g = PermGroup::generate(6, vec![to_perm(&a)]).unwrap();
        let triangles: Vec<VertexSet> = projtri::vertex_set::k_subsets(6, 3).collect();
        let seeds: Vec<VertexSet> = seeds.into_iter().map(|i| triangles[i]).collect();
        let base = six_vertex_outputs(&g, 1);
        let p = SearchProblem::new(2, 6, 1, g).with_seeds(seeds.clone());
        let seeded = match enumerate(&p) {
            Ok(out) => out.solutions,
            Err(SearchError::InfeasibleSeed(_)) => Vec::new(),
            Err(e) => panic!("{e}"),
        };
        for k in &seeded {
            prop_assert!(base.contains(k));
            prop_assert!(seeds.iter().all(|s| k.facets().contains(s)));
        }
        // Conversely every unseeded output holding the seeds is found.
        let expected = base.iter().filter(|k| seeds.iter().all(|s| k.facets().contains(s))).count();
        prop_assert_eq!(seeded.len(), expected);
    }
}

#[test]
fn output_is_deterministic_across_threads_and_splits() {
    let p = SearchProblem::new(4, 9, 36, PermGroup::trivial(9));
    let base = enumerate(&p).unwrap().solutions;
    for (threads, target) in [(1, 16), (3, 1000)] {
        let opts = SearchOptions {
            threads: Some(threads),
            target_tasks: Some(target),
            ..Default::default()
        };
        assert_eq!(enumerate_with(&p, &opts).unwrap().solutions, base);
    }
}

#[test]
fn heisenberg_outputs_are_invariant_and_complementary() {
    let g = heisenberg_on_plane();
    for k in enumerate(&SearchProblem::new(4, 9, 36, g.clone())).unwrap().solutions {
        assert!(common::is_invariant(k.facets(), &g));
        assert!(k.complementarity_status().unwrap().at_most_one());
    }
}
