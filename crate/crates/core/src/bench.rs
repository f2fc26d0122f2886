//! Benchmark harness: algorithm dispatch, timing, summary metrics and the CSV
//! report.
//!
//! Each `(instance, algorithm)` cell is solved once untimed and validated,
//! then warmed up once and timed for the requested repetitions. Timings cover
//! the solve only and are summarized by their geometric mean.

use std::fmt;
use std::io::{BufRead, BufReader, Read, Write};
use std::str::FromStr;
use std::time::Instant;

use rayon::prelude::*;

use crate::degree::{d1_approx_solve, d_approx_s_solve, d_approx_solve};
use crate::error::{Error, Result};
use crate::exact::{exact_solve, DEFAULT_BUDGET};
use crate::graph::{Cover, CoverCheck, TemporalGraph, Time};
use crate::star::{star_acov, star_sc, AlwaysStar};

pub const CSV_HEADER: &str = "graph,algo,delta,cover_size,valid,time_ms_geomean,reps";

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Algorithm {
    StarSc,
    StarAcov,
    DApprox,
    DApproxS,
    D1Approx,
    Exact,
}

impl Algorithm {
    pub const ALL: [Algorithm; 6] = [
        Algorithm::StarSc,
        Algorithm::StarAcov,
        Algorithm::DApprox,
        Algorithm::DApproxS,
        Algorithm::D1Approx,
        Algorithm::Exact,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Algorithm::StarSc => "star-sc",
            Algorithm::StarAcov => "star-acov",
            Algorithm::DApprox => "d-approx",
            Algorithm::DApproxS => "d-approx-s",
            Algorithm::D1Approx => "d-1-approx",
            Algorithm::Exact => "exact",
        }
    }

    pub fn needs_always_star(self) -> bool {
        matches!(self, Algorithm::StarSc | Algorithm::StarAcov)
    }

    /// Checks the inputs, then solves.
    pub fn solve(self, g: &TemporalGraph, delta: Time) -> Result<Cover> {
        g.check_delta(delta)?;
        let prepared = Prepared::new(self, g)?;
        prepared.solve(delta)
    }
}

impl fmt::Display for Algorithm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Algorithm {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Algorithm::ALL
            .into_iter()
            .find(|a| a.name() == s)
            .ok_or_else(|| Error::UnknownAlgorithm(s.to_owned()))
    }
}

/// An algorithm bound to a graph whose preconditions were checked up front,
/// so that timed runs measure the solve alone.
struct Prepared<'g> {
    algo: Algorithm,
    graph: &'g TemporalGraph,
    star: Option<AlwaysStar<'g>>,
}

impl<'g> Prepared<'g> {
    fn new(algo: Algorithm, graph: &'g TemporalGraph) -> Result<Self> {
        let star = if algo.needs_always_star() {
            Some(AlwaysStar::certify(graph)?)
        } else {
            None
        };
        Ok(Self { algo, graph, star })
    }

    fn solve(&self, delta: Time) -> Result<Cover> {
        match (self.algo, self.star) {
            (Algorithm::StarSc, Some(star)) => Ok(star_sc(star)),
            (Algorithm::StarAcov, Some(star)) => Ok(star_acov(star, delta)),
            (Algorithm::DApprox, _) => d_approx_solve(self.graph, delta),
            (Algorithm::DApproxS, _) => d_approx_s_solve(self.graph, delta),
            (Algorithm::D1Approx, _) => d1_approx_solve(self.graph, delta),
            (Algorithm::Exact, _) => exact_solve(self.graph, delta, DEFAULT_BUDGET),
            _ => unreachable!("star algorithms are always prepared with a certificate"),
        }
    }
}

pub fn geometric_mean(samples: &[f64]) -> Result<f64> {
    if samples.is_empty() {
        return Err(Error::EmptyInput);
    }
    if let Some(&bad) = samples.iter().find(|&&x| x.is_nan() || x <= 0.0) {
        return Err(Error::NonPositiveSample(bad));
    }
    let log_sum: f64 = samples.iter().map(|x| x.ln()).sum();
    Ok((log_sum / samples.len() as f64).exp())
}

/// Percentage by which `improved` beats `baseline`: `(baseline / improved - 1) * 100`.
pub fn improvement(improved: f64, baseline: f64) -> Result<f64> {
    if improved.is_nan() || improved <= 0.0 {
        return Err(Error::NonPositive(improved));
    }
    Ok((baseline / improved - 1.0) * 100.0)
}

#[derive(Debug, Clone, PartialEq)]
pub enum CellOutcome {
    Solved {
        cover_size: usize,
        valid: bool,
        time_ms: f64,
    },
    SkippedNotAlwaysStar,
    Failed(String),
}

#[derive(Debug, Clone, PartialEq)]
pub struct BenchRecord {
    pub instance: String,
    pub algorithm: Algorithm,
    pub delta: Time,
    pub repetitions: usize,
    pub outcome: CellOutcome,
}

impl BenchRecord {
    pub fn cover_size(&self) -> Option<usize> {
        match self.outcome {
            CellOutcome::Solved { cover_size, .. } => Some(cover_size),
            _ => None,
        }
    }

    pub fn time_ms(&self) -> Option<f64> {
        match self.outcome {
            CellOutcome::Solved { time_ms, .. } => Some(time_ms),
            _ => None,
        }
    }

    /// Solved with a cover that passed validation.
    pub fn is_valid(&self) -> bool {
        matches!(self.outcome, CellOutcome::Solved { valid: true, .. })
    }

    fn csv_row(&self) -> String {
        let (size, valid, time) = match &self.outcome {
            CellOutcome::Solved {
                cover_size,
                valid,
                time_ms,
            } => (cover_size.to_string(), valid.to_string(), format!("{time_ms:.6}")),
            CellOutcome::SkippedNotAlwaysStar => (String::new(), "skipped_not_always_star".to_owned(), String::new()),
            CellOutcome::Failed(msg) => (String::new(), format!("error: {}", csv_safe(msg)), String::new()),
        };
        format!(
            "{},{},{},{},{},{},{}",
            csv_safe(&self.instance),
            self.algorithm,
            self.delta,
            size,
            valid,
            time,
            self.repetitions
        )
    }
}

fn csv_safe(s: &str) -> String {
    s.replace([',', '\n', '\r'], " ")
}

#[derive(Debug, Clone)]
pub struct BenchOptions {
    pub delta: Time,
    pub repetitions: usize,
    /// Run distinct cells concurrently. Timings from parallel runs contend
    /// for cores and should not be compared.
    pub parallel: bool,
}

/// A solved cell together with its cover.
#[derive(Debug, Clone)]
pub struct BenchCell {
    pub record: BenchRecord,
    pub cover: Option<Cover>,
}

fn run_cell(name: &str, g: &TemporalGraph, algo: Algorithm, opts: &BenchOptions) -> BenchCell {
    let record = |outcome| BenchRecord {
        instance: name.to_owned(),
        algorithm: algo,
        delta: opts.delta,
        repetitions: opts.repetitions,
        outcome,
    };
    let prepared = match g.check_delta(opts.delta).and_then(|()| Prepared::new(algo, g)) {
        Ok(p) => p,
        Err(Error::NotAlwaysStar(_)) => {
            return BenchCell {
                record: record(CellOutcome::SkippedNotAlwaysStar),
                cover: None,
            }
        }
        Err(e) => {
            return BenchCell {
                record: record(CellOutcome::Failed(e.to_string())),
                cover: None,
            }
        }
    };
    let outcome = (|| -> Result<(Cover, CellOutcome)> {
        let cover = prepared.solve(opts.delta)?;
        let valid = g.validate_cover(opts.delta, &cover)? == CoverCheck::Valid;
        // warm-up
        prepared.solve(opts.delta)?;
        let mut samples = Vec::with_capacity(opts.repetitions);
        for _ in 0..opts.repetitions.max(1) {
            let start = Instant::now();
            let c = prepared.solve(opts.delta)?;
            let elapsed = start.elapsed().as_secs_f64() * 1e3;
            std::hint::black_box(c);
            samples.push(elapsed.max(1e-6));
        }
        let time_ms = geometric_mean(&samples)?;
        let size = cover.len();
        Ok((
            cover,
            CellOutcome::Solved {
                cover_size: size,
                valid,
                time_ms,
            },
        ))
    })();
    match outcome {
        Ok((cover, outcome)) => BenchCell {
            record: record(outcome),
            cover: Some(cover),
        },
        Err(e) => BenchCell {
            record: record(CellOutcome::Failed(e.to_string())),
            cover: None,
        },
    }
}

/// Runs every algorithm on every instance. Failures stay inside their cell.
pub fn run_benchmark(
    instances: &[(String, TemporalGraph)],
    algorithms: &[Algorithm],
    opts: &BenchOptions,
) -> Vec<BenchCell> {
    let cells: Vec<(usize, Algorithm)> = (0..instances.len())
        .flat_map(|i| algorithms.iter().map(move |&a| (i, a)))
        .collect();
    let run = |&(i, algo): &(usize, Algorithm)| {
        let (name, g) = &instances[i];
        run_cell(name, g, algo, opts)
    };
    if opts.parallel {
        cells.par_iter().map(run).collect()
    } else {
        cells.iter().map(run).collect()
    }
}

pub fn write_csv<W: Write>(records: &[BenchRecord], mut w: W) -> Result<()> {
    writeln!(w, "{CSV_HEADER}")?;
    for r in records {
        writeln!(w, "{}", r.csv_row())?;
    }
    w.flush()?;
    Ok(())
}

/// One parsed CSV row. Size and time are absent for skipped or failed cells.
#[derive(Debug, Clone, PartialEq)]
pub struct CsvRow {
    pub graph: String,
    pub algo: String,
    pub delta: Time,
    pub cover_size: Option<usize>,
    pub valid: bool,
    pub time_ms: Option<f64>,
    pub reps: usize,
}

pub fn read_csv<R: Read>(reader: R) -> Result<Vec<CsvRow>> {
    let mut rows = Vec::new();
    for (i, line) in BufReader::new(reader).lines().enumerate() {
        let line = line?;
        let lno = i + 1;
        if lno == 1 {
            if line.trim() != CSV_HEADER {
                return Err(Error::parse(1, format!("expected header `{CSV_HEADER}`")));
            }
            continue;
        }
        if line.trim().is_empty() {
            continue;
        }
        let f: Vec<&str> = line.split(',').collect();
        if f.len() != 7 {
            return Err(Error::parse(lno, "expected 7 columns"));
        }
        let opt = |s: &str| (!s.is_empty()).then(|| s.to_owned());
        rows.push(CsvRow {
            graph: f[0].to_owned(),
            algo: f[1].to_owned(),
            delta: f[2].parse().map_err(|_| Error::parse(lno, "bad delta"))?,
            cover_size: opt(f[3])
                .map(|s| s.parse().map_err(|_| Error::parse(lno, "bad cover size")))
                .transpose()?,
            valid: f[4] == "true",
            time_ms: opt(f[5])
                .map(|s| s.parse().map_err(|_| Error::parse(lno, "bad time")))
                .transpose()?,
            reps: f[6].parse().map_err(|_| Error::parse(lno, "bad repetition count"))?,
        });
    }
    Ok(rows)
}

#[derive(Debug, Clone, PartialEq)]
pub struct Comparison {
    /// Number of `(graph, delta)` pairs where both algorithms have valid rows.
    pub pairs: usize,
    pub mean_size_improved: f64,
    pub mean_size_baseline: f64,
    pub mean_time_improved: f64,
    pub mean_time_baseline: f64,
    pub size_improvement: f64,
    pub time_improvement: f64,
}

/// Compares two algorithms over the rows where both produced valid covers,
/// applying [`improvement`] to the averages.
pub fn compare(rows: &[CsvRow], improved: &str, baseline: &str) -> Result<Comparison> {
    let find = |algo: &str, graph: &str, delta: Time| {
        rows.iter()
            .find(|r| r.algo == algo && r.graph == graph && r.delta == delta && r.valid)
    };
    let mut sums = [0.0f64; 4];
    let mut pairs = 0;
    for a in rows.iter().filter(|r| r.algo == improved && r.valid) {
        let Some(b) = find(baseline, &a.graph, a.delta) else {
            continue;
        };
        let (Some(sa), Some(sb), Some(ta), Some(tb)) = (a.cover_size, b.cover_size, a.time_ms, b.time_ms) else {
            continue;
        };
        sums[0] += sa as f64;
        sums[1] += sb as f64;
        sums[2] += ta;
        sums[3] += tb;
        pairs += 1;
    }
    if pairs == 0 {
        return Err(Error::EmptyInput);
    }
    let [sa, sb, ta, tb] = sums.map(|s| s / pairs as f64);
    Ok(Comparison {
        pairs,
        mean_size_improved: sa,
        mean_size_baseline: sb,
        mean_time_improved: ta,
        mean_time_baseline: tb,
        size_improvement: improvement(sa, sb)?,
        time_improvement: improvement(ta, tb)?,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generator::worst_case_acov_instance;

    #[test]
    fn geometric_means() {
        assert!((geometric_mean(&[2.0, 4.0, 8.0]).unwrap() - 4.0).abs() < 1e-12);
        assert!((geometric_mean(&[5.0, 5.0, 5.0]).unwrap() - 5.0).abs() < 1e-12);
        assert!((geometric_mean(&[1.0, 100.0]).unwrap() - 10.0).abs() < 1e-12);
        assert_eq!(geometric_mean(&[]), Err(Error::EmptyInput));
        assert_eq!(geometric_mean(&[1.0, 0.0]), Err(Error::NonPositiveSample(0.0)));
        assert!(geometric_mean(&[-1.0]).is_err());
    }

    #[test]
    fn improvements() {
        assert!((improvement(100.0, 150.0).unwrap() - 50.0).abs() < 1e-12);
        assert_eq!(improvement(7.0, 7.0).unwrap(), 0.0);
        let pct = improvement(2450.0, 3441.0).unwrap();
        assert!((pct - 40.4).abs() <= 0.1, "{pct}");
        assert_eq!(improvement(0.0, 1.0), Err(Error::NonPositive(0.0)));
    }

    #[test]
    fn algorithm_names_roundtrip() {
        for a in Algorithm::ALL {
            assert_eq!(a.name().parse::<Algorithm>().unwrap(), a);
        }
        assert!("greedy".parse::<Algorithm>().is_err());
    }

    #[test]
    fn periodic_bench_rows() {
        let g = worst_case_acov_instance(3, 2, 3).unwrap();
        let instances = vec![("periodic".to_owned(), g)];
        let opts = BenchOptions {
            delta: 3,
            repetitions: 3,
            parallel: false,
        };
        let cells = run_benchmark(&instances, &[Algorithm::StarAcov, Algorithm::Exact], &opts);
        let sizes: Vec<_> = cells.iter().map(|c| c.record.cover_size()).collect();
        assert_eq!(sizes, vec![Some(4), Some(2)]);
        assert!(cells.iter().all(|c| c.record.is_valid()));
        assert!(cells.iter().all(|c| c.record.time_ms().unwrap() > 0.0));
    }

    #[test]
    fn non_star_cells_are_skipped() {
        let g = TemporalGraph::build(4, 2, vec![(0, 1, vec![1]), (2, 3, vec![1, 2])]).unwrap();
        let instances = vec![("pair".to_owned(), g)];
        let opts = BenchOptions {
            delta: 2,
            repetitions: 1,
            parallel: true,
        };
        let cells = run_benchmark(&instances, &[Algorithm::StarSc, Algorithm::DApprox], &opts);
        assert_eq!(cells[0].record.outcome, CellOutcome::SkippedNotAlwaysStar);
        assert!(cells[1].record.is_valid());

        let bad = BenchOptions { delta: 5, ..opts };
        let cells = run_benchmark(&instances, &[Algorithm::DApprox], &bad);
        assert!(matches!(cells[0].record.outcome, CellOutcome::Failed(_)));
    }

    #[test]
    fn csv_roundtrip_and_compare() {
        let rec = |algo, size, time| BenchRecord {
            instance: "g".into(),
            algorithm: algo,
            delta: 3,
            repetitions: 3,
            outcome: CellOutcome::Solved {
                cover_size: size,
                valid: true,
                time_ms: time,
            },
        };
        let records = vec![
            rec(Algorithm::StarAcov, 2450, 2.0),
            rec(Algorithm::D1Approx, 3441, 4.0),
            BenchRecord {
                outcome: CellOutcome::SkippedNotAlwaysStar,
                ..rec(Algorithm::StarSc, 0, 0.0)
            },
        ];
        let mut buf = Vec::new();
        write_csv(&records, &mut buf).unwrap();
        let text = String::from_utf8(buf.clone()).unwrap();
        assert!(text.starts_with(&format!("{CSV_HEADER}\n")));
        assert!(text.contains("g,star-sc,3,,skipped_not_always_star,,3"));

        let rows = read_csv(buf.as_slice()).unwrap();
        assert_eq!(rows.len(), 3);
        assert_eq!(rows[0].cover_size, Some(2450));
        assert!(!rows[2].valid);

        let cmp = compare(&rows, "star-acov", "d-1-approx").unwrap();
        assert_eq!(cmp.pairs, 1);
        assert!((cmp.size_improvement - 40.45).abs() < 0.01);
        assert!((cmp.time_improvement - 100.0).abs() < 1e-9);
        assert_eq!(compare(&rows, "star-sc", "d-1-approx"), Err(Error::EmptyInput));
    }

    #[test]
    fn empty_instance_list() {
        let cells = run_benchmark(
            &[],
            &[Algorithm::StarSc],
            &BenchOptions {
                delta: 1,
                repetitions: 1,
                parallel: false,
            },
        );
        assert!(cells.is_empty());
        let mut buf = Vec::new();
        write_csv(&[], &mut buf).unwrap();
        assert_eq!(String::from_utf8(buf).unwrap(), format!("{CSV_HEADER}\n"));
    }
}
