//! `tvc`: generate, convert, solve, validate and benchmark sliding window
//! temporal vertex cover instances.
//!
//! Exit codes: 0 on success, 1 when a cover is invalid, 2 on usage, parse or
//! input errors.

use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Parser, Subcommand, ValueEnum};
use tvc_core::bench::{compare, read_csv, write_csv, BenchOptions};
use tvc_core::exact::{exact_solve, DEFAULT_BUDGET};
use tvc_core::io::{convert_snap_file, parse_cover, parse_native, write_cover, write_native, SnapOptions};
use tvc_core::{
    generate_always_star, run_benchmark, worst_case_acov_instance, worst_case_sc_instance, Algorithm, Cover,
    CoverCheck, GeneratorConfig, TemporalGraph,
};

#[derive(Parser)]
#[command(name = "tvc", version, about = "Sliding window temporal vertex cover toolkit")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Family {
    /// Random always-star graph.
    Random,
    /// Periodic instance where star-acov reaches its worst ratio.
    AcovWorst,
    /// Static single edge where star-sc reaches its worst ratio.
    ScWorst,
}

#[derive(Subcommand)]
enum Command {
    /// Generate an instance in the native format.
    Generate {
        #[arg(long, value_enum, default_value = "random")]
        family: Family,
        /// Number of vertices.
        #[arg(short, long, default_value_t = 128)]
        n: usize,
        /// Lifetime (number of time steps).
        #[arg(short = 'T', long, default_value_t = 64)]
        lifetime: usize,
        /// Maximum leaves per snapshot.
        #[arg(short = 'd', long, default_value_t = 10)]
        max_leaves: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Keep one center for the whole lifetime.
        #[arg(long)]
        underlying_star: bool,
        #[arg(long, default_value_t = 0.0)]
        empty_prob: f64,
        /// Window size of a worst-case family.
        #[arg(long, default_value_t = 3)]
        delta: usize,
        /// Periods of the acov-worst family.
        #[arg(long, default_value_t = 2)]
        reps: usize,
        /// Leaves of the acov-worst family (default Δ - 1).
        #[arg(long)]
        leaves: Option<usize>,
        /// Output file (stdout if omitted).
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Convert a SNAP temporal edge list (`src dst unix_seconds`).
    ConvertSnap {
        #[arg(short, long)]
        input: PathBuf,
        #[arg(short, long)]
        output: Option<PathBuf>,
        /// Bucket width in seconds.
        #[arg(long, default_value_t = 3600)]
        bucket: u64,
        /// Drop empty buckets instead of keeping them as empty snapshots.
        #[arg(long)]
        no_gaps: bool,
    },
    /// Compute a cover.
    Solve {
        #[arg(short, long)]
        algo: Algorithm,
        #[arg(long)]
        delta: usize,
        #[arg(short, long)]
        input: PathBuf,
        /// Cover file (stdout if omitted).
        #[arg(short, long)]
        output: Option<PathBuf>,
        /// Check the cover before writing it.
        #[arg(long)]
        validate: bool,
        /// Node budget of the exact search.
        #[arg(long, default_value_t = DEFAULT_BUDGET)]
        budget: u64,
    },
    /// Check a cover against an instance.
    Validate {
        #[arg(short, long)]
        input: PathBuf,
        #[arg(long)]
        delta: usize,
        #[arg(short, long)]
        cover: PathBuf,
    },
    /// Time algorithms on instances and write a CSV report.
    Bench {
        #[arg(required = true)]
        inputs: Vec<PathBuf>,
        /// Comma-separated algorithm names.
        #[arg(
            short,
            long,
            value_delimiter = ',',
            default_value = "star-sc,star-acov,d-approx,d-approx-s,d-1-approx"
        )]
        algos: Vec<Algorithm>,
        #[arg(long)]
        delta: usize,
        #[arg(long, default_value_t = 3)]
        reps: usize,
        /// CSV file (stdout if omitted).
        #[arg(short, long)]
        output: Option<PathBuf>,
        /// Run cells concurrently; timings are then not comparable.
        #[arg(long)]
        parallel: bool,
        /// Directory receiving `<instance>.<algo>.cov` for every solved cell.
        #[arg(long)]
        covers_dir: Option<PathBuf>,
    },
    /// Improvement of one algorithm over another in a benchmark CSV.
    Compare {
        csv: PathBuf,
        improved: String,
        baseline: String,
    },
}

fn sink(path: Option<&Path>) -> Result<Box<dyn Write>> {
    Ok(match path {
        Some(p) => Box::new(BufWriter::new(
            File::create(p).with_context(|| format!("cannot create {}", p.display()))?,
        )),
        None => Box::new(BufWriter::new(io::stdout().lock())),
    })
}

fn load(path: &Path) -> Result<TemporalGraph> {
    parse_native(path).with_context(|| format!("reading {}", path.display()))
}

fn instance_name(path: &Path) -> String {
    path.file_stem()
        .map(|s| s.to_string_lossy().into_owned())
        .unwrap_or_else(|| path.display().to_string())
}

fn describe_witness(g: &TemporalGraph, delta: usize, check: CoverCheck) -> Option<String> {
    match check {
        CoverCheck::Valid => None,
        CoverCheck::Invalid(d) => {
            let e = g.edge(d.edge);
            Some(format!(
                "edge ({}, {}) uncovered in window [{}, {}]",
                e.u,
                e.v,
                d.window_start,
                d.window_start + delta - 1
            ))
        }
    }
}

fn run(cli: Cli) -> Result<ExitCode> {
    match cli.command {
        Command::Generate {
            family,
            n,
            lifetime,
            max_leaves,
            seed,
            underlying_star,
            empty_prob,
            delta,
            reps,
            leaves,
            output,
        } => {
            let g = match family {
                Family::Random => generate_always_star(
                    &GeneratorConfig::new(n, lifetime, max_leaves, seed)
                        .underlying_star(underlying_star)
                        .empty_snapshot_prob(empty_prob),
                )?,
                Family::AcovWorst => worst_case_acov_instance(delta, reps, leaves.unwrap_or(delta.saturating_sub(1)))?,
                Family::ScWorst => worst_case_sc_instance(delta)?,
            };
            let mut w = sink(output.as_deref())?;
            write_native(&g, &mut w)?;
            w.flush()?;
        }
        Command::ConvertSnap {
            input,
            output,
            bucket,
            no_gaps,
        } => {
            if bucket == 0 {
                bail!("bucket width must be positive");
            }
            let opts = SnapOptions {
                bucket_seconds: bucket,
                keep_gaps: !no_gaps,
            };
            let g = convert_snap_file(&input, opts).with_context(|| format!("converting {}", input.display()))?;
            eprintln!(
                "n={} m={} T={} appearances={}",
                g.n(),
                g.m(),
                g.lifetime(),
                g.total_appearances()
            );
            let mut w = sink(output.as_deref())?;
            write_native(&g, &mut w)?;
            w.flush()?;
        }
        Command::Solve {
            algo,
            delta,
            input,
            output,
            validate,
            budget,
        } => {
            let g = load(&input)?;
            let cover = match algo {
                Algorithm::Exact => {
                    g.check_delta(delta)?;
                    exact_solve(&g, delta, budget)?
                }
                _ => algo.solve(&g, delta)?,
            };
            if validate {
                if let Some(msg) = describe_witness(&g, delta, g.validate_cover(delta, &cover)?) {
                    eprintln!("invalid cover: {msg}");
                    return Ok(ExitCode::from(1));
                }
            }
            eprintln!("{algo}: cover size {}", cover.len());
            let mut w = sink(output.as_deref())?;
            write_cover(&cover, &mut w)?;
            w.flush()?;
        }
        Command::Validate { input, delta, cover } => {
            let g = load(&input)?;
            let c: Cover = parse_cover(&cover).with_context(|| format!("reading {}", cover.display()))?;
            match describe_witness(&g, delta, g.validate_cover(delta, &c)?) {
                None => println!("valid ({} appearances)", c.len()),
                Some(msg) => {
                    println!("invalid: {msg}");
                    return Ok(ExitCode::from(1));
                }
            }
        }
        Command::Bench {
            inputs,
            algos,
            delta,
            reps,
            output,
            parallel,
            covers_dir,
        } => {
            if reps == 0 {
                bail!("at least one repetition required");
            }
            let instances = inputs
                .iter()
                .map(|p| Ok((instance_name(p), load(p)?)))
                .collect::<Result<Vec<_>>>()?;
            let opts = BenchOptions {
                delta,
                repetitions: reps,
                parallel,
            };
            let cells = run_benchmark(&instances, &algos, &opts);
            if let Some(dir) = &covers_dir {
                std::fs::create_dir_all(dir)?;
                for cell in &cells {
                    if let Some(cover) = &cell.cover {
                        let path = dir.join(format!("{}.{}.cov", cell.record.instance, cell.record.algorithm));
                        tvc_core::io::save_cover(cover, &path)?;
                    }
                }
            }
            let records: Vec<_> = cells.into_iter().map(|c| c.record).collect();
            let mut w = sink(output.as_deref())?;
            write_csv(&records, &mut w)?;
            w.flush()?;
        }
        Command::Compare {
            csv,
            improved,
            baseline,
        } => {
            let file = File::open(&csv).with_context(|| format!("cannot open {}", csv.display()))?;
            let rows = read_csv(file).with_context(|| format!("reading {}", csv.display()))?;
            let c = compare(&rows, &improved, &baseline)
                .with_context(|| format!("no valid rows pairing {improved} with {baseline}"))?;
            println!("pairs: {}", c.pairs);
            println!(
                "size: {improved} {:.3}, {baseline} {:.3}, improvement {:.2}%",
                c.mean_size_improved, c.mean_size_baseline, c.size_improvement
            );
            println!(
                "time: {improved} {:.4} ms, {baseline} {:.4} ms, improvement {:.2}%",
                c.mean_time_improved, c.mean_time_baseline, c.time_improvement
            );
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
