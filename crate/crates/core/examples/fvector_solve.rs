//! Solving the Dehn-Sommerville system for neighborly complexes.

use projtri::complex::{solve_bk_fvector, solve_neighborly_fvector};

fn main() -> anyhow::Result<()> {
    println!("6 vertices, dim 2, 2-neighborly: {:?}", solve_neighborly_fvector(6, 2, 2)?.nonempty());
    println!("9 vertices, dim 4, 3-neighborly: {:?}", solve_neighborly_fvector(9, 4, 3)?.nonempty());
    let f = solve_bk_fvector();
    println!("15 vertices, dim 8, 5-neighborly: {:?}", f.nonempty());
    println!("top-dimensional simplices: {}", f.get(8));
    Ok(())
}
