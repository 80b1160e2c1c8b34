//! Thin command-line front end. Exit codes: 0 pass, 1 fail, 2 usage or
//! input error.

use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Duration;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use projtri::fixed_points::{fixed_point_complex, induced_action};
use projtri::homology::{face_budget_for_bytes, homology_with_budget, is_homology_manifold_with_budget, Ring, DEFAULT_MEMORY_BUDGET_BYTES};
use projtri::search::{self, SearchOptions, SearchProblem};
use projtri::verify::{self, SearchLevel, VerificationReport};
use projtri::{io, iso};

#[derive(Parser)]
#[command(name = "projtri", version, about = "Small triangulations, their symmetry groups and exhaustive searches")]
struct Cli {
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    format: Format,
    /// Worker threads for the search.
    #[arg(long, env = "PROJTRI_THREADS", global = true)]
    threads: Option<usize>,
    /// Memory budget in bytes for face enumeration.
    #[arg(long, env = "PROJTRI_MEMORY_BUDGET", global = true)]
    memory_budget: Option<u64>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum Level {
    Quick,
    Full,
}

#[derive(Clone, Copy, ValueEnum)]
enum Check {
    Cp29,
    Rp26,
    Table1,
    BkFvector,
    Q8Lemma,
    Search,
    All,
}

#[derive(Subcommand)]
enum Command {
    /// Run a reproducible check and print its report.
    Verify {
        #[arg(value_enum)]
        check: Check,
        #[arg(long, value_enum, default_value_t = Level::Quick)]
        level: Level,
        /// Checkpoint file for the long search.
        #[arg(long)]
        resume: Option<PathBuf>,
    },
    /// Homology groups of a complex file.
    Homology {
        complex: PathBuf,
        /// `Z` or a prime.
        #[arg(long, default_value = "Z")]
        ring: String,
        /// Also test the homology-manifold property in this dimension.
        #[arg(long)]
        manifold: Option<usize>,
    },
    /// Symmetry group of a complex file, in the group format.
    Sym { complex: PathBuf },
    /// Isomorphism test between two complex files.
    Iso { a: PathBuf, b: PathBuf },
    /// Enumerate invariant weak pseudomanifolds.
    Search {
        #[arg(long)]
        dim: usize,
        #[arg(long)]
        vertices: usize,
        #[arg(long)]
        min_facets: usize,
        /// Group file; the trivial group if omitted.
        #[arg(long)]
        group: Option<PathBuf>,
        /// File of `facet` lines forced into every solution.
        #[arg(long)]
        seed: Option<PathBuf>,
        #[arg(long)]
        resume: Option<PathBuf>,
        /// Directory receiving one complex file per solution.
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long)]
        max_nodes: Option<u64>,
        #[arg(long)]
        max_seconds: Option<u64>,
        /// Report one representative per isomorphism class.
        #[arg(long)]
        dedup: bool,
    },
    /// Fixed-point complex of a group acting on a complex.
    FixedPoints {
        complex: PathBuf,
        group: PathBuf,
        /// Normal subgroup; prints `K^N` with the induced action of the group.
        #[arg(long)]
        normal: Option<PathBuf>,
    },
}

enum Failure {
    /// The check ran and failed.
    Failed,
    Usage(String),
}

impl<E: std::fmt::Display> From<E> for Failure {
    fn from(e: E) -> Self {
        Failure::Usage(e.to_string())
    }
}

fn print_reports(reports: &[VerificationReport], format: Format) -> Result<(), Failure> {
    match format {
        Format::Json => println!("{}", serde_json::to_string_pretty(reports)?),
        Format::Text => reports.iter().for_each(|r| print!("{}", r.to_text())),
    }
    if reports.iter().all(|r| r.passed) {
        Ok(())
    } else {
        Err(Failure::Failed)
    }
}

fn parse_ring(s: &str) -> Result<Ring, Failure> {
    match s {
        "Z" | "z" => Ok(Ring::Integers),
        p => p
            .trim_start_matches("F")
            .parse()
            .map(Ring::Prime)
            .map_err(|_| Failure::Usage(format!("ring must be Z or a prime, got {s:?}"))),
    }
}

fn run(cli: Cli) -> Result<(), Failure> {
    let format = cli.format;
    let budget = face_budget_for_bytes(cli.memory_budget.unwrap_or(DEFAULT_MEMORY_BUDGET_BYTES));
    match cli.command {
        Command::Verify { check, level, resume } => {
            let opts = SearchOptions {
                threads: cli.threads,
                checkpoint: resume,
                progress: format == Format::Text,
                ..Default::default()
            };
            let level = match level {
                Level::Quick => SearchLevel::Quick,
                Level::Full => SearchLevel::Full,
            };
            let reports = match check {
                Check::Cp29 => vec![verify::verify_cp29()],
                Check::Rp26 => vec![verify::verify_rp26()],
                Check::Table1 => vec![verify::verify_table1()],
                Check::BkFvector => vec![verify::verify_bk_fvector()],
                Check::Q8Lemma => vec![verify::verify_q8_lemma()],
                Check::Search => vec![verify::verify_search_suite(level, &opts)],
                Check::All => verify::verify_all(level, &opts),
            };
            print_reports(&reports, format)
        }
        Command::Homology { complex, ring, manifold } => {
            let k = io::read_complex(&complex)?;
            let ring = parse_ring(&ring)?;
            let h = homology_with_budget(&k, ring, budget)?;
            let m = manifold.map(|d| is_homology_manifold_with_budget(&k, d, ring, budget)).transpose()?;
            match format {
                Format::Json => println!("{}", json!({"homology": h, "euler_characteristic": h.euler_characteristic(), "manifold": m})),
                Format::Text => {
                    print!("{}", h.to_lines());
                    println!("chi {}", h.euler_characteristic());
                    if let Some(m) = &m {
                        println!("homology manifold {}", m.holds);
                    }
                }
            }
            match m {
                Some(m) if !m.holds => Err(Failure::Failed),
                _ => Ok(()),
            }
        }
        Command::Sym { complex } => {
            let k = io::read_complex(&complex)?;
            let g = iso::symmetry_group(&k)?;
            match format {
                Format::Json => println!(
                    "{}",
                    json!({
                        "order": g.order(),
                        "generators": g.generators().iter().map(|p| p.to_cycle_string()).collect::<Vec<_>>(),
                        "element_orders": g.element_order_multiset(),
                        "orbit_lengths": g.orbits().lengths(),
                    })
                ),
                Format::Text => {
                    println!("# order {}", g.order());
                    print!("{}", io::write_group(&g));
                }
            }
            Ok(())
        }
        Command::Iso { a, b } => {
            let (ka, kb) = (io::read_complex(&a)?, io::read_complex(&b)?);
            let cert = iso::are_isomorphic(&ka, &kb);
            match format {
                Format::Json => println!("{}", json!({"isomorphic": cert.is_some(), "certificate": cert})),
                Format::Text => match &cert {
                    Some(c) => println!("isomorphic {}", c.as_permutation().to_cycle_string()),
                    None => println!("not isomorphic"),
                },
            }
            cert.map(|_| ()).ok_or(Failure::Failed)
        }
        Command::Search {
            dim,
            vertices,
            min_facets,
            group,
            seed,
            resume,
            out,
            max_nodes,
            max_seconds,
            dedup,
        } => {
            let group = match group {
                Some(p) => io::read_group(&p)?,
                None => projtri::PermGroup::trivial(vertices),
            };
            let seeds = match seed {
                Some(p) => io::parse_facet_list(&std::fs::read_to_string(p)?)?,
                None => Vec::new(),
            };
            let mut problem = SearchProblem::new(dim, vertices, min_facets, group).with_seeds(seeds);
            problem.limits.max_nodes = max_nodes;
            problem.limits.max_time = max_seconds.map(Duration::from_secs);
            let opts = SearchOptions {
                threads: cli.threads,
                checkpoint: resume,
                progress: format == Format::Text,
                ..Default::default()
            };
            let outcome = match search::enumerate_with(&problem, &opts) {
                Ok(o) => o,
                Err(e @ search::SearchError::BudgetExceeded { .. }) => {
                    eprintln!("{e}");
                    return Err(Failure::Failed);
                }
                Err(e) => return Err(e.into()),
            };
            let solutions = if dedup { search::dedup_up_to_iso(&outcome.solutions) } else { outcome.solutions };
            let mut files = Vec::new();
            if let Some(dir) = out {
                std::fs::create_dir_all(&dir)?;
                for k in &solutions {
                    let path = dir.join(format!("{}.complex", iso::canonical_hash(k)));
                    std::fs::write(&path, io::write_complex(k))?;
                    files.push(path.display().to_string());
                }
            }
            match format {
                Format::Json => println!(
                    "{}",
                    json!({
                        "solutions": solutions.iter().map(|k| k.facets().to_vec()).collect::<Vec<_>>(),
                        "files": files,
                        "stats": outcome.stats,
                    })
                ),
                Format::Text => {
                    println!("{} solutions", solutions.len());
                    for k in &solutions {
                        println!("# {}", iso::canonical_hash(k));
                        print!("{}", io::write_complex(k));
                    }
                }
            }
            Ok(())
        }
        Command::FixedPoints { complex, group, normal } => {
            let k = io::read_complex(&complex)?;
            let g = io::read_group(&group)?;
            let (fixed, quotient) = match normal {
                Some(n) => {
                    let (f, q) = induced_action(&k, &g, &io::read_group(&n)?)?;
                    (f, Some(q))
                }
                None => (fixed_point_complex(&k, &g)?, None),
            };
            match format {
                Format::Json => println!(
                    "{}",
                    json!({
                        "facets": fixed.complex.facets(),
                        "vertices": fixed.complex.n(),
                        "labels": fixed.vertex_labels,
                        "induced_generators": quotient.as_ref().map(|q| q.generators().iter().map(|p| p.to_cycle_string()).collect::<Vec<_>>()),
                    })
                ),
                Format::Text => {
                    print!("{}", io::write_fixed_point_complex(&fixed));
                    if let Some(q) = quotient {
                        println!("# induced action");
                        for line in io::write_group(&q).lines() {
                            println!("# {line}");
                        }
                    }
                }
            }
            Ok(())
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Failed) => ExitCode::from(1),
        Err(Failure::Usage(msg)) => {
            eprintln!("projtri: {msg}");
            ExitCode::from(2)
        }
    }
}
