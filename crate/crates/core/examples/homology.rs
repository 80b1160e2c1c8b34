//! Homology over the integers and over prime fields, and the
//! homology-manifold test.

use projtri::catalog::{cp2_9, icosahedron, pt_disjoint_boundary, rp2_6};
use projtri::homology::{homology, is_homology_manifold, Ring};

fn main() -> anyhow::Result<()> {
    let cases = [
        ("icosahedron", icosahedron(), 2),
        ("RP2_6", rp2_6(), 2),
        ("CP2_9", cp2_9(), 4),
        ("point + triangle boundary", pt_disjoint_boundary(2), 1),
    ];
    for (name, k, d) in cases {
        println!("{name}");
        for ring in [Ring::Integers, Ring::Prime(2), Ring::Prime(3)] {
            let h = homology(&k, ring)?;
            println!("  over {ring}: betti {:?}, torsion {:?}, chi {}", h.betti, h.torsion, h.euler_characteristic());
        }
        let m = is_homology_manifold(&k, d, Ring::Integers)?;
        println!("  Z-homology {d}-manifold: {} (witness {:?})", m.holds, m.witness);
    }
    Ok(())
}
