//! Exhaustive searches on 6 and 9 vertices, with isomorphism classes.

use projtri::catalog::heisenberg_on_plane;
use projtri::homology::{homology, Ring};
use projtri::iso::symmetry_group;
use projtri::search::{dedup_up_to_iso, enumerate, facet_orbits, SearchProblem};
use projtri::PermGroup;

fn report(problem: &SearchProblem) -> anyhow::Result<()> {
    println!("d = {}, n = {}, N = {}, |G| = {}", problem.d, problem.n, problem.min_facets, problem.group.order());
    println!("  {} facet orbits", facet_orbits(problem)?.len());
    let out = enumerate(problem)?;
    println!("  {} complexes, {} nodes, {:.2}s", out.solutions.len(), out.stats.nodes, out.stats.elapsed_secs);
    for k in dedup_up_to_iso(&out.solutions) {
        let h = homology(&k, Ring::Integers)?;
        println!(
            "  class: f = {:?}, |Aut| = {}, homology {}",
            k.f_vector().nonempty(),
            symmetry_group(&k)?.order(),
            h.to_lines().trim_end().replace('\n', "; ")
        );
    }
    Ok(())
}

fn main() -> anyhow::Result<()> {
    report(&SearchProblem::new(2, 6, 10, PermGroup::trivial(6)))?;
    report(&SearchProblem::new(4, 9, 36, heisenberg_on_plane()))?;
    // Without symmetry the 9-vertex search also finds a non-manifold.
    report(&SearchProblem::new(4, 9, 36, PermGroup::trivial(9)))?;
    Ok(())
}
