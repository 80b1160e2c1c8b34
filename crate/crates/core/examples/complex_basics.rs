//! Building complexes and reading off their combinatorics.

use projtri::catalog::{cp2_9, rp2_6};
use projtri::{SimplicialComplex, VertexSet};

fn main() -> anyhow::Result<()> {
    // The boundary of a tetrahedron, from vertex lists.
    let sphere = SimplicialComplex::from_vertex_lists(4, &[&[1, 2, 3], &[1, 2, 4], &[1, 3, 4], &[2, 3, 4]])?;
    println!("tetrahedron boundary: f = {:?}, chi = {}", sphere.f_vector().nonempty(), sphere.euler_characteristic());

    for (name, k, d) in [("RP2_6", rp2_6(), 2), ("CP2_9", cp2_9(), 4)] {
        println!("{name}");
        println!("  f-vector        {:?}", k.f_vector().nonempty());
        println!("  h-vector        {:?}", k.h_vector()?.0);
        println!("  Dehn-Sommerville residual {:?}", k.dehn_sommerville_residual(d)?);
        println!("  neighborliness  {}", k.neighborliness());
        println!("  pseudomanifold  {:?}", k.pseudomanifold_status(d));
        println!("  complementarity {:?}", k.complementarity_status()?);
        let v = VertexSet::singleton(1);
        let link = k.link(v)?;
        println!("  link of vertex 1: {} facets, f = {:?}", link.facet_count(), link.f_vector().nonempty());
    }
    Ok(())
}
