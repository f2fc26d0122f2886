//! Text formats: native temporal graphs, cover files and raw SNAP contact lists.
//!
//! Native graph format:
//!
//! ```text
//! # comment
//! n m T
//! u v k t1 t2 ... tk      (m lines, u < v, 1 <= t1 < ... < tk <= T)
//! ```
//!
//! Cover format: one `v t` pair per line.

use std::collections::HashSet;
use std::fs::File;
use std::io::{BufRead, BufReader, BufWriter, Read, Write};
use std::path::Path;

use indexmap::IndexMap;

use crate::error::{Error, Result};
use crate::graph::{Cover, TemporalGraph, Time, Vertex, VertexAppearance};

/// Lines that carry data, with 1-based line numbers.
fn data_lines<R: BufRead>(reader: R) -> impl Iterator<Item = Result<(usize, String)>> {
    reader.lines().enumerate().filter_map(|(i, line)| match line {
        Err(e) => Some(Err(Error::from(e))),
        Ok(l) => {
            let trimmed = l.trim();
            if trimmed.is_empty() || trimmed.starts_with('#') {
                None
            } else {
                Some(Ok((i + 1, trimmed.to_owned())))
            }
        }
    })
}

fn number<T: std::str::FromStr>(line: usize, tok: &str, what: &str) -> Result<T> {
    tok.parse()
        .map_err(|_| Error::parse(line, format!("bad {what} `{tok}`")))
}

pub fn read_native<R: Read>(reader: R) -> Result<TemporalGraph> {
    let mut lines = data_lines(BufReader::new(reader));
    let (hline, header) = lines.next().ok_or_else(|| Error::parse(0, "missing header"))??;
    let fields: Vec<&str> = header.split_whitespace().collect();
    if fields.len() != 3 {
        return Err(Error::parse(hline, "header must be `n m T`"));
    }
    let n: usize = number(hline, fields[0], "vertex count")?;
    let m: usize = number(hline, fields[1], "edge count")?;
    let lifetime: Time = number(hline, fields[2], "lifetime")?;

    let mut edges = Vec::with_capacity(m);
    let mut last_line = hline;
    for item in lines {
        let (lno, line) = item?;
        last_line = lno;
        if edges.len() == m {
            return Err(Error::parse(lno, format!("more than {m} edge lines")));
        }
        let toks: Vec<&str> = line.split_whitespace().collect();
        if toks.len() < 3 {
            return Err(Error::parse(lno, "edge line must be `u v k t1 ... tk`"));
        }
        let u: Vertex = number(lno, toks[0], "vertex")?;
        let v: Vertex = number(lno, toks[1], "vertex")?;
        let k: usize = number(lno, toks[2], "label count")?;
        if k == 0 {
            return Err(Error::parse(lno, "an edge needs at least one label"));
        }
        if toks.len() != 3 + k {
            return Err(Error::parse(
                lno,
                format!("expected {k} labels, found {}", toks.len() - 3),
            ));
        }
        if u > v {
            return Err(Error::parse(lno, "endpoints must satisfy u < v"));
        }
        let labels = toks[3..]
            .iter()
            .map(|t| number::<Time>(lno, t, "label"))
            .collect::<Result<Vec<_>>>()?;
        if labels.windows(2).any(|w| w[0] >= w[1]) {
            return Err(Error::parse(lno, "labels must be strictly increasing"));
        }
        edges.push((u, v, labels));
    }
    if edges.len() != m {
        return Err(Error::parse(
            last_line,
            format!("header announces {m} edges, found {}", edges.len()),
        ));
    }
    TemporalGraph::build(n, lifetime, edges)
}

pub fn write_native<W: Write>(g: &TemporalGraph, writer: W) -> Result<()> {
    let mut w = BufWriter::new(writer);
    writeln!(w, "{} {} {}", g.n(), g.m(), g.lifetime())?;
    for e in g.edges() {
        write!(w, "{} {} {}", e.u, e.v, e.appearances.len())?;
        for t in &e.appearances {
            write!(w, " {t}")?;
        }
        writeln!(w)?;
    }
    w.flush()?;
    Ok(())
}

pub fn parse_native(path: impl AsRef<Path>) -> Result<TemporalGraph> {
    read_native(File::open(path)?)
}

pub fn save_native(g: &TemporalGraph, path: impl AsRef<Path>) -> Result<()> {
    write_native(g, File::create(path)?)
}

pub fn native_to_string(g: &TemporalGraph) -> String {
    let mut buf = Vec::new();
    write_native(g, &mut buf).expect("writing to memory");
    String::from_utf8(buf).expect("ascii output")
}

pub fn read_cover<R: Read>(reader: R) -> Result<Cover> {
    let mut cover = Cover::new();
    for item in data_lines(BufReader::new(reader)) {
        let (lno, line) = item?;
        let toks: Vec<&str> = line.split_whitespace().collect();
        if toks.len() != 2 {
            return Err(Error::parse(lno, "cover line must be `v t`"));
        }
        let vertex: Vertex = number(lno, toks[0], "vertex")?;
        let time: Time = number(lno, toks[1], "time step")?;
        if time == 0 {
            return Err(Error::parse(lno, "time steps start at 1"));
        }
        let appearance = VertexAppearance::new(vertex, time);
        if !cover.insert(appearance) {
            return Err(Error::DuplicateAppearance { appearance, line: lno });
        }
    }
    Ok(cover)
}

pub fn write_cover<W: Write>(cover: &Cover, writer: W) -> Result<()> {
    let mut w = BufWriter::new(writer);
    for a in cover {
        writeln!(w, "{} {}", a.vertex, a.time)?;
    }
    w.flush()?;
    Ok(())
}

pub fn parse_cover(path: impl AsRef<Path>) -> Result<Cover> {
    read_cover(File::open(path)?)
}

pub fn save_cover(cover: &Cover, path: impl AsRef<Path>) -> Result<()> {
    write_cover(cover, File::create(path)?)
}

/// Options for [`convert_snap`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SnapOptions {
    pub bucket_seconds: u64,
    /// Keep empty buckets as empty snapshots; otherwise nonempty buckets are
    /// renumbered consecutively.
    pub keep_gaps: bool,
}

impl Default for SnapOptions {
    fn default() -> Self {
        Self {
            bucket_seconds: 3600,
            keep_gaps: true,
        }
    }
}

/// Converts `src dst timestamp [extra...]` lines into a temporal graph.
///
/// Directions are dropped, self-loops skipped and repeated contacts merged.
/// External keys get dense ids in order of first appearance. Time step of a
/// contact is `(timestamp - min_timestamp) / bucket_seconds + 1`.
pub fn convert_snap<R: Read>(reader: R, opts: SnapOptions) -> Result<TemporalGraph> {
    if opts.bucket_seconds == 0 {
        return Err(Error::BadConfig("bucket width must be positive".into()));
    }
    let mut ids: IndexMap<String, ()> = IndexMap::new();
    let mut contacts: Vec<(Vertex, Vertex, i64)> = Vec::new();
    let mut seen_any = false;
    let mut intern = |key: &str| -> Vertex {
        match ids.get_index_of(key) {
            Some(i) => i,
            None => ids.insert_full(key.to_owned(), ()).0,
        }
    };
    for item in data_lines(BufReader::new(reader)) {
        let (lno, line) = item?;
        if line.starts_with('%') {
            continue;
        }
        seen_any = true;
        let toks: Vec<&str> = line.split_whitespace().collect();
        if toks.len() < 3 {
            return Err(Error::parse(lno, "expected `src dst timestamp`"));
        }
        let ts: i64 = number(lno, toks[2], "timestamp")?;
        if ts < 0 {
            return Err(Error::NegativeTimestamp {
                line: lno,
                timestamp: ts,
            });
        }
        if toks[0] == toks[1] {
            continue;
        }
        let (a, b) = (intern(toks[0]), intern(toks[1]));
        contacts.push((a.min(b), a.max(b), ts));
    }
    if !seen_any || contacts.is_empty() {
        return Err(Error::EmptyInput);
    }
    let n = ids.len();
    let min_ts = contacts.iter().map(|c| c.2).min().expect("nonempty");
    let bucket = |ts: i64| ((ts - min_ts) as u64 / opts.bucket_seconds) as Time + 1;

    let remap: Option<std::collections::HashMap<Time, Time>> = if opts.keep_gaps {
        None
    } else {
        let mut used: Vec<Time> = contacts
            .iter()
            .map(|c| bucket(c.2))
            .collect::<HashSet<_>>()
            .into_iter()
            .collect();
        used.sort_unstable();
        Some(used.into_iter().zip(1..).collect())
    };
    let step = |ts: i64| {
        let b = bucket(ts);
        remap.as_ref().map_or(b, |m| m[&b])
    };

    let mut labels: IndexMap<(Vertex, Vertex), Vec<Time>> = IndexMap::new();
    let mut lifetime = 0;
    for &(u, v, ts) in &contacts {
        let t = step(ts);
        lifetime = lifetime.max(t);
        labels.entry((u, v)).or_default().push(t);
    }
    TemporalGraph::build(n, lifetime, labels.into_iter().map(|((u, v), ts)| (u, v, ts)))
}

pub fn convert_snap_file(path: impl AsRef<Path>, opts: SnapOptions) -> Result<TemporalGraph> {
    convert_snap(File::open(path)?, opts)
}
