//! Writes the catalog complexes and groups in the text formats.
//!
//!     cargo run --example export_catalog -- <dir>

use std::fs;
use std::path::PathBuf;

use projtri::catalog::{self, c4_seed_configuration, table1_actions};
use projtri::io::{write_complex, write_group};
use projtri::{PermGroup, SimplicialComplex};

fn main() -> anyhow::Result<()> {
    let dir = PathBuf::from(std::env::args().nth(1).unwrap_or_else(|| "catalog".into()));
    fs::create_dir_all(&dir)?;
    let complexes: [(&str, SimplicialComplex); 5] = [
        ("rp2_6", catalog::rp2_6()),
        ("cp2_9", catalog::cp2_9()),
        ("icosahedron", catalog::icosahedron()),
        ("boundary_simplex_3", catalog::boundary_simplex(3)),
        ("pt_disjoint_boundary_2", catalog::pt_disjoint_boundary(2)),
    ];
    for (name, k) in &complexes {
        fs::write(dir.join(format!("{name}.complex")), write_complex(k))?;
    }
    fs::write(dir.join("sym_cp2_9.group"), write_group(&catalog::sym_cp2_9()))?;
    fs::write(dir.join("heisenberg_9.group"), write_group(&catalog::heisenberg_on_plane()))?;

    let (a, seeds) = c4_seed_configuration();
    fs::write(dir.join("c4_15.group"), write_group(&PermGroup::generate(15, vec![a])?))?;
    let seed_text: String = seeds
        .iter()
        .map(|s| format!("facet {}\n", s.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(" ")))
        .collect();
    fs::write(dir.join("c4_15.seeds"), seed_text)?;

    for e in table1_actions() {
        let name = match e.row {
            Some(r) => format!("table_row_{r:02}.group"),
            None => "psu_3_2.group".into(),
        };
        fs::write(dir.join(name), format!("# {}\n{}", e.name, write_group(&e.group)))?;
    }
    println!("wrote catalog to {}", dir.display());
    Ok(())
}
