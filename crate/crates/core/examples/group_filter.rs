//! The 27-point actions and the seven-property symmetry-group filter.

use projtri::catalog::table1_actions;
use projtri::verify::filter::group_filter;
use projtri::verify::planted_c2_4;

fn main() {
    for e in table1_actions() {
        let failed: Vec<_> = group_filter(&e.group).into_iter().filter(|o| !o.holds).collect();
        println!(
            "{:>4} {:<12} order {:>3} orbits {:?} {}",
            e.row.map(|r| r.to_string()).unwrap_or_else(|| "-".into()),
            e.name,
            e.group.order(),
            e.group.orbits().lengths(),
            if failed.is_empty() { "passes".to_string() } else { format!("fails {failed:?}") }
        );
    }
    println!("control C2^4:");
    for o in group_filter(&planted_c2_4()) {
        println!("  {:<48} {} ({})", o.property.label(), o.holds, o.evidence);
    }
}
