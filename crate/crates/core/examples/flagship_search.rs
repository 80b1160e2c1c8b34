//! The 15-vertex, 8-dimensional search seeded with the C₄ configuration.
//! Long-running; pass a checkpoint path to make it resumable.
//!
//!     cargo run --release --example flagship_search -- [checkpoint.json]

use std::time::Duration;

use projtri::catalog::c4_seed_configuration;
use projtri::search::{enumerate_with, SearchOptions, SearchProblem};
use projtri::PermGroup;

fn main() -> anyhow::Result<()> {
    let (a, seeds) = c4_seed_configuration();
    let group = PermGroup::generate(15, vec![a])?;
    let problem = SearchProblem::new(8, 15, 490, group).with_seeds(seeds);
    let opts = SearchOptions {
        checkpoint: std::env::args().nth(1).map(Into::into),
        checkpoint_interval: Some(Duration::from_secs(30)),
        threads: std::env::var("PROJTRI_THREADS").ok().and_then(|t| t.parse().ok()),
        progress: true,
        ..Default::default()
    };
    let out = enumerate_with(&problem, &opts)?;
    println!("{} solutions", out.solutions.len());
    println!("{}", serde_json::to_string_pretty(&out.stats)?);
    Ok(())
}
