//! Canonical forms, isomorphism certificates and automorphism groups.

use rand::seq::SliceRandom;

use projtri::catalog::{cp2_9, icosahedron, rp2_6};
use projtri::iso::{are_isomorphic, canonical_form, canonical_hash, symmetry_group, verify_certificate};

fn main() -> anyhow::Result<()> {
    let k = cp2_9();
    let mut map: Vec<u8> = (0..9).collect();
    map.shuffle(&mut rand::thread_rng());
    let shuffled = k.relabel_zero_based(&map);
    println!("relabelled CP2_9 with map {map:?}");
    println!("same canonical form: {}", canonical_form(&k) == canonical_form(&shuffled));
    println!("hash {}", canonical_hash(&k));
    let cert = are_isomorphic(&k, &shuffled).expect("relabelling is an isomorphism");
    println!("certificate {} verified: {}", cert.as_permutation().to_cycle_string(), verify_certificate(&k, &shuffled, &cert));
    println!("RP2_6 vs CP2_9: {:?}", are_isomorphic(&rp2_6(), &k).map(|c| c.mapping));

    for (name, c) in [("RP2_6", rp2_6()), ("CP2_9", k), ("icosahedron", icosahedron())] {
        let g = symmetry_group(&c)?;
        println!("|Aut({name})| = {}, element orders {:?}", g.order(), g.element_order_multiset());
    }
    Ok(())
}
