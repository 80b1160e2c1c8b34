//! Fixed-point complexes of group actions and the induced action on them.

use projtri::catalog::{cp2_9, heisenberg_on_plane, rp2_6, sym_cp2_9};
use projtri::fixed_points::{complementarity_inheritance, fixed_point_complex, induced_action};
use projtri::io::write_fixed_point_complex;
use projtri::iso::are_isomorphic;
use projtri::PermGroup;

fn main() -> anyhow::Result<()> {
    let k = cp2_9();
    let sym = sym_cp2_9();
    let s = sym.elements().iter().find(|e| e.order() == 2).expect("involutions exist");
    let fixed = fixed_point_complex(&k, &PermGroup::cyclic(s))?;
    println!("fixed complex of {}:", s.to_cycle_string());
    print!("{}", write_fixed_point_complex(&fixed));
    println!("isomorphic to RP2_6: {}", are_isomorphic(&fixed.complex, &rp2_6()).is_some());

    // The centre-free part: CP2_9 modulo the translation subgroup.
    let translations = PermGroup::generate(9, sym.elements().iter().filter(|e| e.order() == 3 && e.fixed_points().is_empty()).take(2).cloned().collect())?;
    if sym.is_normal_subgroup(&translations) {
        let (f, q) = induced_action(&k, &sym, &translations)?;
        println!("K^T has {} vertices; induced group of order {}", f.complex.n(), q.order());
    }

    println!("shapes of K^H over all subgroups H of Sym(CP2_9):");
    let mut shapes = std::collections::BTreeMap::new();
    for h in sym.all_subgroups() {
        let (shape, ok) = complementarity_inheritance(&k, &h)?;
        assert!(ok);
        *shapes.entry(format!("{shape:?}")).or_insert(0) += 1;
    }
    println!("  {shapes:?}");
    println!("He3 is transitive, so K^He3 is empty: {}", fixed_point_complex(&k, &heisenberg_on_plane())?.complex.is_empty());
    Ok(())
}
