//! Text input formats: circuit lists, rational matrices, graphs, and
//! previously written JSON reports.

use std::path::Path;
use std::str::FromStr;

use num_rational::BigRational;
use osa_core::matroid::{Arrangement, Graph};
use osa_core::{ElementSet, Matroid};
use serde_json::Value;

use crate::error::CliError;

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Circuits,
    Matrix,
    Graph,
    /// JSON written by `osa report`.
    Report,
}

impl Format {
    pub fn name(self) -> &'static str {
        match self {
            Format::Circuits => "circuits",
            Format::Matrix => "matrix",
            Format::Graph => "graph",
            Format::Report => "report",
        }
    }

    /// Guesses the format from the file extension.
    pub fn from_extension(path: &Path) -> Option<Format> {
        match path.extension()?.to_str()?.to_ascii_lowercase().as_str() {
            "circuits" | "cir" => Some(Format::Circuits),
            "matrix" | "mat" => Some(Format::Matrix),
            "graph" => Some(Format::Graph),
            "json" => Some(Format::Report),
            _ => None,
        }
    }
}

/// What the file described, kept for echoing back in reports.
#[derive(Clone, Debug)]
pub enum Source {
    Circuits,
    Matrix(Vec<Vec<BigRational>>),
    Graph {
        vertices: usize,
        edges: Vec<(usize, usize)>,
    },
    Report,
}

#[derive(Clone, Debug)]
pub struct Input {
    pub format: Format,
    pub source: Source,
    pub matroid: Matroid,
}

pub fn parse_input(path: &Path, format: Option<Format>) -> Result<Input, CliError> {
    let format = match format.or_else(|| Format::from_extension(path)) {
        Some(f) => f,
        None => sniff(path)?,
    };
    let text = std::fs::read_to_string(path)
        .map_err(|e| CliError::Input(format!("cannot read {}: {e}", path.display())))?;
    parse_str(&text, format)
}

// Only circuit files are recognisable by content alone.
fn sniff(path: &Path) -> Result<Format, CliError> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| CliError::Input(format!("cannot read {}: {e}", path.display())))?;
    let (lines, _) = content_lines(&text)?;
    match lines.first() {
        Some(l) if l.text.split_whitespace().next() == Some("n") => Ok(Format::Circuits),
        _ if text.trim_start().starts_with('{') => Ok(Format::Report),
        _ => Err(CliError::Input(format!(
            "cannot tell the format of {}; pass --format circuits|matrix|graph|report",
            path.display()
        ))),
    }
}

pub fn parse_str(text: &str, format: Format) -> Result<Input, CliError> {
    if format == Format::Report {
        let value: Value = serde_json::from_str(text)
            .map_err(|e| CliError::parse(e.line(), format!("invalid JSON: {e}")))?;
        return Ok(Input {
            format,
            source: Source::Report,
            matroid: crate::report::matroid_from_report(&value)?,
        });
    }
    let (lines, labels) = content_lines(text)?;
    let (source, matroid) = match format {
        Format::Circuits => (Source::Circuits, parse_circuits(&lines)?),
        Format::Matrix => parse_matrix(&lines)?,
        Format::Graph => parse_graph(&lines)?,
        Format::Report => unreachable!(),
    };
    let matroid = match labels {
        Some((line, labels)) => matroid
            .with_labels(labels)
            .map_err(|e| CliError::parse(line, e.to_string()))?,
        None => matroid,
    };
    Ok(Input {
        format,
        source,
        matroid,
    })
}

struct Line<'a> {
    number: usize,
    text: &'a str,
}

type Labels = Option<(usize, Vec<String>)>;

// Non-blank lines with comments stripped, plus the `labels:` line if present.
fn content_lines(text: &str) -> Result<(Vec<Line<'_>>, Labels), CliError> {
    let mut lines = Vec::new();
    let mut labels = None;
    for (i, raw) in text.lines().enumerate() {
        let number = i + 1;
        let body = raw.split('#').next().unwrap_or("").trim();
        if body.is_empty() {
            continue;
        }
        if let Some(rest) = body.strip_prefix("labels:") {
            if labels.is_some() {
                return Err(CliError::parse(number, "second labels: line"));
            }
            let names: Vec<String> = rest
                .split(|c: char| c.is_whitespace() || c == ',')
                .filter(|t| !t.is_empty())
                .map(str::to_string)
                .collect();
            if let Some(bad) = names.iter().find(|l| l.contains('<')) {
                return Err(CliError::parse(
                    number,
                    format!("label {bad:?} contains '<'"),
                ));
            }
            labels = Some((number, names));
            continue;
        }
        lines.push(Line { number, text: body });
    }
    Ok((lines, labels))
}

fn parse_usize(line: &Line, token: &str, what: &str) -> Result<usize, CliError> {
    token
        .parse()
        .map_err(|_| CliError::parse(line.number, format!("expected {what}, found {token:?}")))
}

fn header<'a>(lines: &'a [Line<'a>], what: &str) -> Result<(&'a Line<'a>, Vec<&'a str>), CliError> {
    let first = lines
        .first()
        .ok_or_else(|| CliError::parse(0, format!("empty input, expected {what} header")))?;
    Ok((first, first.text.split_whitespace().collect()))
}

fn parse_circuits(lines: &[Line]) -> Result<Matroid, CliError> {
    let (head, tokens) = header(lines, "`n <N>`")?;
    let n = match tokens.as_slice() {
        ["n", count] => parse_usize(head, count, "element count")?,
        _ => return Err(CliError::parse(head.number, "expected header `n <N>`")),
    };
    check_size(head, n)?;
    let mut circuits = Vec::new();
    for line in &lines[1..] {
        let mut set = ElementSet::EMPTY;
        for token in line.text.split_whitespace() {
            let i = parse_usize(line, token, "a 1-based element index")?;
            if i == 0 || i > n {
                return Err(CliError::parse(
                    line.number,
                    format!("index {i} outside 1..={n}"),
                ));
            }
            if set.contains(i - 1) {
                return Err(CliError::parse(line.number, format!("index {i} repeated")));
            }
            set = set.with(i - 1);
        }
        circuits.push(set);
    }
    Matroid::from_circuits(n, circuits).map_err(CliError::from)
}

fn check_size(head: &Line, n: usize) -> Result<usize, CliError> {
    if n > osa_core::bitset::MAX_ELEMENTS {
        return Err(CliError::parse(
            head.number,
            format!(
                "{n} elements exceeds the limit of {}",
                osa_core::bitset::MAX_ELEMENTS
            ),
        ));
    }
    Ok(n)
}

fn parse_matrix(lines: &[Line]) -> Result<(Source, Matroid), CliError> {
    let (head, tokens) = header(lines, "`<n> <d>`")?;
    let (n, d) = match tokens.as_slice() {
        [n, d] => (
            parse_usize(head, n, "row count")?,
            parse_usize(head, d, "column count")?,
        ),
        _ => return Err(CliError::parse(head.number, "expected header `<n> <d>`")),
    };
    check_size(head, n)?;
    let body = &lines[1..];
    if body.len() != n {
        let at = body.get(n).map_or(head.number, |l| l.number);
        return Err(CliError::parse(
            at,
            format!("expected {n} matrix rows, found {}", body.len()),
        ));
    }
    let mut rows = Vec::with_capacity(n);
    for line in body {
        let row = line
            .text
            .split_whitespace()
            .map(|t| {
                BigRational::from_str(t).map_err(|_| {
                    CliError::parse(line.number, format!("expected a rational p/q, found {t:?}"))
                })
            })
            .collect::<Result<Vec<_>, _>>()?;
        if row.len() != d {
            return Err(CliError::parse(
                line.number,
                format!("expected {d} entries, found {}", row.len()),
            ));
        }
        rows.push(row);
    }
    let arrangement = Arrangement::new(rows.clone())?;
    let matroid = Matroid::from_matrix(&arrangement)?;
    Ok((Source::Matrix(rows), matroid))
}

fn parse_graph(lines: &[Line]) -> Result<(Source, Matroid), CliError> {
    let (head, tokens) = header(lines, "`<V> <E>`")?;
    let (v, e) = match tokens.as_slice() {
        [v, e] => (
            parse_usize(head, v, "vertex count")?,
            parse_usize(head, e, "edge count")?,
        ),
        _ => return Err(CliError::parse(head.number, "expected header `<V> <E>`")),
    };
    check_size(head, e)?;
    let body = &lines[1..];
    if body.len() != e {
        let at = body.get(e).map_or(head.number, |l| l.number);
        return Err(CliError::parse(
            at,
            format!("expected {e} edge lines, found {}", body.len()),
        ));
    }
    let mut edges = Vec::with_capacity(e);
    for line in body {
        let ends: Vec<&str> = line.text.split_whitespace().collect();
        let [a, b] = ends.as_slice() else {
            return Err(CliError::parse(line.number, "expected an edge `u v`"));
        };
        let (a, b) = (
            parse_usize(line, a, "a vertex")?,
            parse_usize(line, b, "a vertex")?,
        );
        for x in [a, b] {
            if x == 0 || x > v {
                return Err(CliError::parse(
                    line.number,
                    format!("vertex {x} outside 1..={v}"),
                ));
            }
        }
        edges.push((a - 1, b - 1));
    }
    let graph = Graph::new(v, edges.clone())?;
    let matroid = Matroid::from_graph(graph.vertices(), graph.edges())?;
    Ok((Source::Graph { vertices: v, edges }, matroid))
}
