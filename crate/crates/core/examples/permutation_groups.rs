//! Permutation groups: closure, orbits, stabilizers, element orders and
//! subgroup enumeration.

use projtri::catalog::{q8_regular, sym_cp2_9};
use projtri::{PermGroup, Permutation};

fn main() -> anyhow::Result<()> {
    let a = Permutation::parse_cycles(15, "(1 3 2 4)(5 7 6 8)(9 11 10 12)")?;
    println!("A = {} has order {} and cycle type {:?}", a.to_cycle_string(), a.order(), a.cycle_type());
    println!("fixed points of A: {}", a.fixed_points());

    let g = sym_cp2_9();
    println!("Sym(CP2_9): order {}, element orders {:?}", g.order(), g.element_order_multiset());
    println!("  orbits {:?}, stabilizer of 1 has order {}", g.orbits().lengths(), g.stabilizer(1).order());
    for k in [2, 3, 6, 9, 18, 27] {
        println!("  subgroups of order {k}: {}", g.subgroups_of_order(k)?.len());
    }

    let q8 = q8_regular();
    let c4s = q8.subgroups_of_order(4)?;
    println!("Q8 regular on 8 points: {} subgroups of order 4, all cyclic: {}", c4s.len(), c4s.iter().all(PermGroup::is_cyclic));
    for h in &c4s {
        println!("  {} with orbits {:?}", h.generators()[0].to_cycle_string(), h.orbits().orbits);
    }
    Ok(())
}
