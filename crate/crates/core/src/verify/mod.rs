//! Reproducible checks with pass/fail reports. Each report is a list of
//! named sub-checks with evidence; it passes iff every sub-check does.

pub mod filter;

use std::collections::BTreeMap;
use std::time::Instant;

use serde::Serialize;

use crate::catalog::{
    c4_seed_configuration, cp2_9, cp2_9_facets_by_type, elementary_abelian_8_regular, heisenberg_on_plane, lines,
    points_to_set, pt_disjoint_boundary, q8_regular, rp2_6, sym_cp2_9, table1_actions, AffinePoint,
};
use crate::complex::{solve_bk_fvector, Complementarity, SimplicialComplex};
use crate::fixed_points::fixed_point_complex;
use crate::group::PermGroup;
use crate::homology::{homology, is_homology_manifold, Ring};
use crate::iso::{are_isomorphic, symmetry_group};
use crate::perm::Permutation;
use crate::search::{self, SearchOptions, SearchProblem};
use crate::vertex_set::{binomial, k_subsets, VertexSet};
use filter::{group_filter, Property};

#[derive(Clone, Debug, Serialize)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    pub evidence: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct VerificationReport {
    pub check_name: String,
    /// The claim being reproduced, in words.
    pub claim: String,
    pub passed: bool,
    pub checks: Vec<Check>,
    /// Observations reported without being asserted.
    pub notes: Vec<String>,
    pub elapsed_secs: f64,
}

impl VerificationReport {
    pub fn to_text(&self) -> String {
        let mut s = format!(
            "{} [{}] {}\n",
            if self.passed { "PASS" } else { "FAIL" },
            self.check_name,
            self.claim
        );
        for c in &self.checks {
            s.push_str(&format!("  {} {}: {}\n", if c.passed { "ok  " } else { "FAIL" }, c.name, c.evidence));
        }
        for n in &self.notes {
            s.push_str(&format!("  note {n}\n"));
        }
        s.push_str(&format!("  ({:.2}s)\n", self.elapsed_secs));
        s
    }
}

struct Builder {
    name: &'static str,
    claim: &'static str,
    start: Instant,
    checks: Vec<Check>,
    notes: Vec<String>,
}

impl Builder {
    fn new(name: &'static str, claim: &'static str) -> Self {
        Builder {
            name,
            claim,
            start: Instant::now(),
            checks: Vec::new(),
            notes: Vec::new(),
        }
    }

    fn check(&mut self, name: impl Into<String>, passed: bool, evidence: impl Into<String>) {
        self.checks.push(Check {
            name: name.into(),
            passed,
            evidence: evidence.into(),
        });
    }

    fn eq<T: PartialEq + std::fmt::Debug>(&mut self, name: &str, got: T, want: T) {
        let passed = got == want;
        let evidence = if passed { format!("{got:?}") } else { format!("got {got:?}, expected {want:?}") };
        self.check(name, passed, evidence);
    }

    fn eq_str(&mut self, name: &str, got: String, want: &str) {
        let passed = got == want;
        let evidence = if passed { got } else { format!("got {got}, expected {want}") };
        self.check(name, passed, evidence);
    }

    fn note(&mut self, n: impl Into<String>) {
        self.notes.push(n.into());
    }

    fn finish(self) -> VerificationReport {
        VerificationReport {
            check_name: self.name.into(),
            claim: self.claim.into(),
            passed: self.checks.iter().all(|c| c.passed),
            checks: self.checks,
            notes: self.notes,
            elapsed_secs: self.start.elapsed().as_secs_f64(),
        }
    }
}

fn spectrum_string(m: &BTreeMap<usize, usize>) -> String {
    let parts: Vec<String> = m.iter().map(|(k, v)| format!("{k}:{v}")).collect();
    format!("{{{}}}", parts.join(","))
}

pub fn verify_cp29() -> VerificationReport {
    let mut b = Builder::new(
        "cp29",
        "the 9-vertex complex projective plane: 36 facets, complementarity, Betti numbers (1,0,1,0,1), symmetry group of order 54 whose involutions fix copies of the 6-vertex real projective plane",
    );
    let k = cp2_9();
    let (type1, type2) = cp2_9_facets_by_type();
    b.eq("facets", k.facet_count(), 36);
    b.eq("facet split by type", (type1.len(), type2.len()), (27, 9));
    b.eq("complementarity", k.complementarity_status(), Ok(Complementarity::Full));
    b.eq("euler characteristic", k.euler_characteristic(), 3);
    let s = k.pseudomanifold_status(4);
    b.check(
        "weak, strong, orientable 4-pseudomanifold",
        s.pure && s.weak && s.strong && s.orientable,
        format!("{s:?}"),
    );
    match homology(&k, Ring::Integers) {
        Ok(h) => {
            b.eq("integral Betti numbers", h.betti.clone(), vec![1, 0, 1, 0, 1]);
            b.check("no torsion", h.is_torsion_free(), format!("{:?}", h.torsion));
        }
        Err(e) => b.check("integral homology", false, e.to_string()),
    }
    match is_homology_manifold(&k, 4, Ring::Integers) {
        Ok(m) => b.check("Z-homology 4-manifold", m.holds, format!("witness {:?}", m.witness)),
        Err(e) => b.check("Z-homology 4-manifold", false, e.to_string()),
    }

    // Two routes to the symmetry group: the affine formula and the
    // automorphism search.
    let affine = sym_cp2_9();
    let searched = symmetry_group(&k);
    b.eq("order of the affine symmetry group", affine.order(), 54);
    match &searched {
        Ok(g) => {
            b.eq("order of the automorphism group", g.order(), 54);
            b.check("both routes give the same group", g.elements() == affine.elements(), "element lists compared");
        }
        Err(e) => b.check("automorphism group", false, e.to_string()),
    }
    let spectrum = affine.element_order_multiset();
    b.check("element-order spectrum", true, spectrum_string(&spectrum));
    let involutions: Vec<&Permutation> = affine.elements().iter().filter(|e| e.order() == 2).collect();
    b.check("involutions", !involutions.is_empty(), format!("order-2 count: {}", involutions.len()));
    let rp2 = rp2_6();
    let mut bad = Vec::new();
    for s in &involutions {
        let fixed = fixed_point_complex(&k, &PermGroup::cyclic(s)).expect("symmetries act");
        if are_isomorphic(&fixed.complex, &rp2).is_none() {
            bad.push(s.to_cycle_string());
        }
    }
    b.check(
        "every involution fixes a copy of RP2_6",
        bad.is_empty(),
        if bad.is_empty() { format!("{} involutions", involutions.len()) } else { format!("failed for {bad:?}") },
    );

    // A 3-subset whose every 4-element superset is a face is a non-special line.
    let nonspecial: Vec<VertexSet> = lines().into_iter().filter(|l| l.special.is_none()).map(|l| l.points).collect();
    let mut forcing = Vec::new();
    let mut mismatch = Vec::new();
    for m in k_subsets(9, 3) {
        let all = (1..=9).filter(|&v| !m.contains(v)).all(|v| k.contains_face(m.with(v)));
        if all {
            forcing.push(m);
        }
        if all != nonspecial.contains(&m) {
            mismatch.push(m.to_string());
        }
    }
    b.check(
        "3-subsets with all supersets faces are exactly the non-special lines",
        mismatch.is_empty() && forcing.len() == 9,
        format!("{} of 84 triples qualify; mismatches {mismatch:?}", forcing.len()),
    );

    let p = |x: i64, y: i64| AffinePoint::new(x, y);
    let mut facts = Vec::new();
    for t in 0..3 {
        let in1 = points_to_set([p(0, t), p(1, t), p(2, t), p(1, t + 1), p(2, t + 1)]);
        let in2 = points_to_set([p(0, t), p(1, t + 1), p(2, t + 1), p(1, t + 2), p(2, t + 2)]);
        let out1 = points_to_set([p(0, 0), p(0, 1), p(0, 2), p(1, t + 1), p(1, t + 2)]);
        let out2 = points_to_set([p(0, 0), p(0, 1), p(0, 2), p(2, t + 1), p(2, t + 2)]);
        facts.push(k.facets().contains(&in1) && k.facets().contains(&in2) && !k.contains_face(out1) && !k.contains_face(out2));
    }
    b.check(
        "membership facts for t = 0, 1, 2",
        facts.iter().all(|&x| x),
        format!("{facts:?}"),
    );
    b.finish()
}

pub fn verify_rp26() -> VerificationReport {
    let mut b = Builder::new(
        "rp26",
        "the 6-vertex real projective plane: f-vector (6,15,10), non-orientable, complementarity, symmetry group of order 60 whose involutions fix a point plus a triangle boundary",
    );
    let k = rp2_6();
    b.eq("f-vector", k.f_vector().nonempty().to_vec(), vec![6, 15, 10]);
    b.eq("euler characteristic", k.euler_characteristic(), 1);
    let s = k.pseudomanifold_status(2);
    b.check("strong 2-pseudomanifold", s.weak && s.strong, format!("{s:?}"));
    b.check("non-orientable", !s.orientable, format!("{s:?}"));
    b.eq("complementarity", k.complementarity_status(), Ok(Complementarity::Full));
    match homology(&k, Ring::Integers) {
        Ok(h) => b.eq_str("integral homology", h.to_lines().trim_end().replace('\n', "; "), "H_0 1; H_1 0 Z/2; H_2 0"),
        Err(e) => b.check("integral homology", false, e.to_string()),
    }
    match symmetry_group(&k) {
        Ok(g) => {
            b.eq("symmetry group order", g.order(), 60);
            let spectrum = g.element_order_multiset();
            b.eq_str("element-order spectrum", spectrum_string(&spectrum), "{1:1,2:15,3:20,5:24}");
            let target = pt_disjoint_boundary(2);
            let invs: Vec<&Permutation> = g.elements().iter().filter(|e| e.order() == 2).collect();
            let ok = invs.iter().all(|s| {
                let f = fixed_point_complex(&k, &PermGroup::cyclic(s)).expect("symmetries act");
                are_isomorphic(&f.complex, &target).is_some()
            });
            b.check(
                "fixed complex of each involution is a point plus a triangle boundary",
                ok,
                format!("{} involutions", invs.len()),
            );
        }
        Err(e) => b.check("symmetry group", false, e.to_string()),
    }
    b.finish()
}

pub fn verify_bk_fvector() -> VerificationReport {
    let mut b = Builder::new(
        "bk-fvector",
        "a 15-vertex 8-dimensional 5-neighborly Dehn-Sommerville complex has exactly 490 top-dimensional simplices",
    );
    let f = solve_bk_fvector();
    b.eq("top-dimensional simplices", f.get(8), 490);
    let low: Vec<u64> = (0..=4).map(|i| f.get(i)).collect();
    let want: Vec<u64> = (0..=4).map(|i| binomial(15, i as u64 + 1)).collect();
    b.eq("f_i = C(15, i+1) for i <= 4", low, want);
    b.check("unique solution", true, format!("full vector {:?}", f.nonempty()));
    b.finish()
}

/// `ε_H(a, b)` is +1 when `a`, `b` share an `H`-orbit.
fn sign(h: &PermGroup, a: usize, b: usize) -> i32 {
    if h.orbits().orbit_of(a).contains(b) {
        1
    } else {
        -1
    }
}

/// Counts ordered pairs with sign product 1 over the order-4 subgroups.
fn sign_product_census(g: &PermGroup) -> (usize, usize, usize) {
    let subs = g.subgroups_of_order(4).expect("4 divides 8");
    let n = g.degree();
    let mut good = 0;
    for a in 1..=n {
        for b in 1..=n {
            if subs.iter().map(|h| sign(h, a, b)).product::<i32>() == 1 {
                good += 1;
            }
        }
    }
    (subs.len(), good, n * n)
}

pub fn verify_q8_lemma() -> VerificationReport {
    let mut b = Builder::new(
        "q8-lemma",
        "for the regular action of Q8 and its three cyclic subgroups of order 4, the product of the three orbit signs is 1 for every ordered pair of points",
    );
    let q8 = q8_regular();
    b.eq("order", q8.order(), 8);
    b.eq_str("element-order spectrum", spectrum_string(&q8.element_order_multiset()), "{1:1,2:1,4:6}");
    let subs = q8.subgroups_of_order(4).expect("4 divides 8");
    b.check(
        "three cyclic subgroups of order 4",
        subs.len() == 3 && subs.iter().all(|h| h.is_cyclic()),
        format!("{} subgroups", subs.len()),
    );
    let (_, good, total) = sign_product_census(&q8);
    b.eq("pairs with sign product 1", good, total);
    let c2 = elementary_abelian_8_regular();
    let (count, good, total) = sign_product_census(&c2);
    b.note(format!(
        "control C2^3 (regular, {count} subgroups of order 4): sign product 1 for {good}/{total} pairs"
    ));
    b.finish()
}

pub fn verify_table1() -> VerificationReport {
    let mut b = Builder::new(
        "table1",
        "the 26 listed actions on 27 points and PSU(3,2) with three orbits of length 9 all satisfy the seven symmetry-group properties; planted C6 and order-16 controls do not",
    );
    let entries = table1_actions();
    b.eq("catalog entries", entries.len(), 27);
    for e in &entries {
        let outcomes = group_filter(&e.group);
        let failed: Vec<&str> = outcomes.iter().filter(|o| !o.holds).map(|o| o.property.label()).collect();
        let label = match e.row {
            Some(r) => format!("row {r}: {}", e.name),
            None => e.name.to_string(),
        };
        b.check(
            label,
            failed.is_empty() && e.validate().is_ok(),
            if failed.is_empty() {
                format!("order {}, orbits {:?}", e.group.order(), e.group.orbits().lengths())
            } else {
                format!("fails {failed:?}")
            },
        );
    }

    let c6 = PermGroup::generate(27, vec![Permutation::parse_cycles(27, "(1 2 3 4 5 6)").unwrap()]).unwrap();
    let out = group_filter(&c6);
    b.check(
        "planted C6 fails the element-order property",
        out.iter().any(|o| o.property == Property::ElementOrders && !o.holds),
        out[0].evidence.clone(),
    );
    let c2_4 = planted_c2_4();
    let out = group_filter(&c2_4);
    b.check(
        "planted order-16 group fails the 2-subgroup property",
        out.iter().any(|o| o.property == Property::TwoSubgroups && !o.holds),
        out.iter().find(|o| o.property == Property::TwoSubgroups).unwrap().evidence.clone(),
    );

    let psu = entries.iter().find(|e| e.row.is_none()).expect("PSU(3,2) is listed");
    b.eq("PSU(3,2) order", psu.group.order(), 72);
    b.eq("PSU(3,2) orbit lengths", psu.group.orbits().lengths(), vec![9, 9, 9]);
    let s8 = psu.group.subgroups_of_order(8).expect("8 divides 72");
    let all_q8 = s8
        .iter()
        .all(|h| spectrum_string(&h.element_order_multiset()) == "{1:1,2:1,4:6}");
    b.check(
        "PSU(3,2) has 9 subgroups of order 8, each with the spectrum of Q8",
        s8.len() == 9 && all_q8,
        format!("{} subgroups of order 8", s8.len()),
    );
    b.finish()
}

/// `C₂⁴` acting regularly on 16 of the 27 points.
pub fn planted_c2_4() -> PermGroup {
    let gens = (0..4)
        .map(|bit| {
            let images: Vec<usize> = (0..27).map(|v| if v < 16 { (v ^ (1 << bit)) + 1 } else { v + 1 }).collect();
            Permutation::from_images(&images).unwrap()
        })
        .collect();
    PermGroup::generate(27, gens).unwrap()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SearchLevel {
    Quick,
    Full,
}

/// Runs the toy searches with oracle cross-checks, and with `Full` also the
/// 15-vertex seeded search, which must come back empty.
pub fn verify_search_suite(level: SearchLevel, opts: &SearchOptions) -> VerificationReport {
    let mut b = Builder::new(
        "search",
        "the 6-vertex search finds only the real projective plane, the 9-vertex transitive search finds only the complex projective plane, and no 15-vertex weak 8-pseudomanifold with 490 facets, half-complementarity and the seeded C4 symmetry exists",
    );
    let p6 = SearchProblem::new(2, 6, 10, PermGroup::trivial(6));
    match search::enumerate_with(&p6, opts) {
        Ok(out) => {
            let classes = search::dedup_up_to_iso(&out.solutions);
            b.check(
                "6-vertex search: one class, isomorphic to RP2_6",
                classes.len() == 1 && are_isomorphic(&classes[0], &rp2_6()).is_some(),
                format!("{} complexes, {} classes", out.solutions.len(), classes.len()),
            );
            let oracle = brute_force_surfaces();
            b.check(
                "6-vertex search equals the brute-force oracle",
                oracle == out.solutions,
                format!("oracle found {}", oracle.len()),
            );
        }
        Err(e) => b.check("6-vertex search", false, e.to_string()),
    }
    let p9 = SearchProblem::new(4, 9, 36, heisenberg_on_plane());
    match search::enumerate_with(&p9, opts) {
        Ok(out) => {
            let cp2 = cp2_9();
            b.check(
                "9-vertex transitive search: every output is CP2_9",
                !out.solutions.is_empty() && out.solutions.iter().all(|k| are_isomorphic(k, &cp2).is_some()),
                format!("{} complexes", out.solutions.len()),
            );
        }
        Err(e) => b.check("9-vertex search", false, e.to_string()),
    }
    if level == SearchLevel::Full {
        let p15 = flagship_problem();
        match search::enumerate_with(&p15, opts) {
            Ok(out) => b.check(
                "15-vertex seeded search is empty",
                out.solutions.is_empty(),
                format!(
                    "{} solutions, {} nodes, {} tasks, {:.1}s",
                    out.solutions.len(),
                    out.stats.nodes,
                    out.stats.tasks,
                    out.stats.elapsed_secs
                ),
            ),
            Err(e) => b.check("15-vertex seeded search", false, e.to_string()),
        }
    } else {
        b.note("15-vertex seeded search skipped (quick level)");
    }
    b.finish()
}

/// `(d, n, N) = (8, 15, 490)` under `⟨A⟩` with the 12 seed facets.
pub fn flagship_problem() -> SearchProblem {
    let (a, seeds) = c4_seed_configuration();
    let group = PermGroup::generate(15, vec![a]).expect("cyclic of order 4");
    SearchProblem::new(8, 15, 490, group).with_seeds(seeds)
}

/// Every 10-triangle family on 6 vertices that covers all vertices and is
/// a weak pseudomanifold with half-complementarity, sorted.
pub fn brute_force_surfaces() -> Vec<SimplicialComplex> {
    let triangles: Vec<VertexSet> = k_subsets(6, 3).collect();
    let full = VertexSet::full(6);
    let mut out = Vec::new();
    for mask in 0u32..1 << 20 {
        if mask.count_ones() != 10 {
            continue;
        }
        let fam: Vec<VertexSet> = (0..20).filter(|i| mask >> i & 1 == 1).map(|i| triangles[i]).collect();
        if fam.iter().fold(VertexSet::EMPTY, |a, f| a.union(*f)) != full {
            continue;
        }
        let k = SimplicialComplex::from_facets(6, fam).expect("covers all vertices");
        if k.pseudomanifold_status(2).weak && k.complementarity_status().is_ok_and(|c| c.at_most_one()) {
            out.push(k);
        }
    }
    out.sort();
    out
}

/// All reports for `verify all`-style runs.
pub fn verify_all(level: SearchLevel, opts: &SearchOptions) -> Vec<VerificationReport> {
    vec![
        verify_cp29(),
        verify_rp26(),
        verify_bk_fvector(),
        verify_table1(),
        verify_q8_lemma(),
        verify_search_suite(level, opts),
    ]
}
