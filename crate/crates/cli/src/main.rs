use anyhow::{bail, Context, Result};
use clap::{Parser, Subcommand, ValueEnum};
use extremal_core::asymptotics::crossover_scan;
use extremal_core::constructions::{quasi_clique, quasi_complete_bipartite, quasi_star};
use extremal_core::counting::{count_copies, count_stars, inj_homs};
use extremal_core::decomposition::{edge_star_cover, spanning_tree, star_factor_profile, star_partition};
use extremal_core::edgelist;
use extremal_core::nested::{run_transformation, WeightParams};
use extremal_core::oracle::{extremal_search, HostClass, OracleConfig};
use extremal_core::report::{emit_report, Format, Records};
use extremal_core::verify::{run_verify_suite, Scale};
use extremal_core::Graph;
use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

#[derive(Parser)]
#[command(name = "extremal", version, about = "Extremal star and subgraph counts on small graphs")]
struct Cli {
    /// Seed for randomized checks.
    #[arg(long, global = true, default_value_t = 42)]
    seed: u64,
    /// Worker threads; 0 uses every core.
    #[arg(long, global = true, default_value_t = 0)]
    threads: usize,
    /// Format for tabular output.
    #[arg(long, global = true, value_enum, default_value_t = OutFormat::Csv)]
    format: OutFormat,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum OutFormat {
    Csv,
    Json,
}

impl From<OutFormat> for Format {
    fn from(f: OutFormat) -> Format {
        match f {
            OutFormat::Csv => Format::Csv,
            OutFormat::Json => Format::Json,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum Family {
    QuasiClique,
    QuasiStar,
    QuasiBipartite,
}

#[derive(Clone, Copy, ValueEnum)]
enum CountKind {
    Copies,
    Injhoms,
    Stars,
}

#[derive(Clone, Copy, ValueEnum)]
enum Decomposition {
    StarPartition,
    EdgeStarCover,
    Profile,
}

#[derive(Clone, Copy, ValueEnum)]
enum Class {
    All,
    Bipartite,
    Trifree,
}

#[derive(Clone, Copy, ValueEnum)]
enum VerifyScale {
    Quick,
    Full,
}

#[derive(Subcommand)]
enum Command {
    /// Write a quasi-clique, quasi-star or quasi-complete bipartite graph.
    Construct {
        #[arg(long, value_enum)]
        family: Family,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        e: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Count copies, injective homomorphisms or stars in a host graph.
    Count {
        #[arg(long, required_unless_present = "k")]
        pattern: Option<PathBuf>,
        #[arg(long)]
        host: PathBuf,
        #[arg(long, value_enum, default_value_t = CountKind::Copies)]
        kind: CountKind,
        /// Leaf count for `--kind stars`.
        #[arg(long)]
        k: Option<usize>,
    },
    /// Transform a bipartite graph into the quasi-complete bipartite graph.
    Transform {
        #[arg(long)]
        host: PathBuf,
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 2)]
        k: usize,
        #[arg(long)]
        trace_out: Option<PathBuf>,
    },
    /// Star partition of a spanning tree, or a matching-plus-star cover.
    Decompose {
        #[arg(long)]
        pattern: PathBuf,
        #[arg(long, value_enum, default_value_t = Decomposition::StarPartition)]
        what: Decomposition,
    },
    /// Exhaustive maximum number of pattern copies over hosts of a class.
    Oracle {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        e: usize,
        #[arg(long)]
        pattern: PathBuf,
        #[arg(long, value_enum, default_value_t = Class::All)]
        class: Class,
        #[arg(long, default_value_t = OracleConfig::default().budget)]
        budget: u128,
        #[arg(long, default_value_t = OracleConfig::default().witnesses)]
        witnesses: usize,
        #[arg(long)]
        csv: Option<PathBuf>,
    },
    /// Compare star counts of the quasi-clique and quasi-star across densities.
    ScanCrossover {
        #[arg(long)]
        j: usize,
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 1)]
        step: usize,
        #[arg(long)]
        csv: Option<PathBuf>,
    },
    /// Run the self-check suite.
    Verify {
        #[arg(long, value_enum, default_value_t = VerifyScale::Quick)]
        scale: VerifyScale,
    },
}

fn read_graph(path: &Path) -> Result<Graph> {
    edgelist::read_file(path).with_context(|| format!("reading {}", path.display()))
}

/// Writes to `path`, or to stdout when absent.
fn emit(path: Option<&Path>, text: &str) -> Result<()> {
    match path {
        Some(p) => fs::write(p, text).with_context(|| format!("writing {}", p.display())),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn join(xs: &[usize]) -> String {
    xs.iter().map(usize::to_string).collect::<Vec<_>>().join(" ")
}

fn run(cli: Cli) -> Result<bool> {
    let format = Format::from(cli.format);
    match cli.command {
        Command::Construct { family, n, e, out } => {
            let g = match family {
                Family::QuasiClique => quasi_clique(n, e)?,
                Family::QuasiStar => quasi_star(n, e)?,
                Family::QuasiBipartite => quasi_complete_bipartite(n, e)?,
            };
            emit(out.as_deref(), &edgelist::write(&g))?;
        }
        Command::Count { pattern, host, kind, k } => {
            let g = read_graph(&host)?;
            let value = match kind {
                CountKind::Stars => {
                    let Some(k) = k else { bail!("--kind stars needs --k") };
                    count_stars(&g, k)
                }
                CountKind::Copies | CountKind::Injhoms => {
                    let Some(p) = pattern else { bail!("--pattern is required for this kind") };
                    let h = read_graph(&p)?;
                    if matches!(kind, CountKind::Copies) {
                        count_copies(&h, &g)
                    } else {
                        inj_homs(&h, &g)
                    }
                }
            };
            println!("{value}");
        }
        Command::Transform { host, n, k, trace_out } => {
            let g = read_graph(&host)?;
            let (end, trace) = run_transformation(&g, n, WeightParams::new(k)?)?;
            if let Some(path) = trace_out {
                emit(Some(&path), &emit_report(Records::Trace(&trace), format))?;
            }
            print!("{}", edgelist::write(&end));
        }
        Command::Decompose { pattern, what } => {
            let h = read_graph(&pattern)?;
            match what {
                Decomposition::StarPartition => {
                    let p = star_partition(&spanning_tree(&h)?)?;
                    for (part, c) in p.parts.iter().zip(&p.centers) {
                        println!("center {c}: {}", join(part));
                    }
                }
                Decomposition::EdgeStarCover => match edge_star_cover(&h) {
                    Some(cover) => {
                        if let Some((c, leaves)) = &cover.star {
                            println!("star {c}: {}", join(leaves));
                        }
                        for (u, v) in &cover.matching {
                            println!("edge {u} {v}");
                        }
                    }
                    None => println!("none"),
                },
                Decomposition::Profile => println!("{}", join(&star_factor_profile(&h)?)),
            }
        }
        Command::Oracle { n, e, pattern, class, budget, witnesses, csv } => {
            let h = read_graph(&pattern)?;
            let class = match class {
                Class::All => HostClass::All,
                Class::Bipartite => HostClass::Bipartite,
                Class::Trifree => HostClass::TriangleFree,
            };
            let cfg = OracleConfig { budget, witnesses, ..OracleConfig::default() };
            let record = extremal_search(n, e, &h, class, &cfg)?;
            emit(csv.as_deref(), &emit_report(Records::Extremal(std::slice::from_ref(&record)), format))?;
        }
        Command::ScanCrossover { j, n, step, csv } => {
            let scan = crossover_scan(j, n, step)?;
            emit(csv.as_deref(), &emit_report(Records::Scan(&scan), format))?;
            eprintln!(
                "crossover_e={} density={:.4} sign_changes={:?}",
                scan.crossover_e,
                scan.crossover_density(),
                scan.sign_changes
            );
        }
        Command::Verify { scale } => {
            let scale = match scale {
                VerifyScale::Quick => Scale::Quick,
                VerifyScale::Full => Scale::Full,
            };
            let report = run_verify_suite(scale, cli.seed);
            match format {
                Format::Csv => print!("{report}"),
                Format::Json => println!("{}", serde_json::to_string_pretty(&report)?),
            }
            return Ok(report.passed());
        }
    }
    Ok(true)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if cli.threads > 0 {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(cli.threads).build_global() {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    }
    match run(cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::FAILURE,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
