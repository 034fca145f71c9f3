//! Plain-text instance files.
//!
//! ```text
//! bg <n> <m>        dg <n> <m>        mat <n>
//! <i> <j>           <i> <j>           <n characters from {0,1}>
//! ...               ...               ...
//! ```
//!
//! Indices are 1-based: `i j` in a `bg` file is the edge `u_i w_j`, in a `dg` file the
//! arc `v_i -> v_j`. Blank lines and lines starting with `#` are ignored.

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::graph::{
    validate, BipartiteGraph, Digraph, RawBipartite, RawDigraph, RawInstance, RawMatrix, ValidationReport,
    Vertex, ZeroOneMatrix,
};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FormatError {
    #[error("line {line}, column {column}: {message}")]
    Syntax { line: usize, column: usize, message: String },
    #[error("{0}")]
    Invalid(ValidationReport),
    #[error("expected a {expected} file, found {found}")]
    WrongKind { expected: InstanceKind, found: InstanceKind },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum InstanceKind {
    Bipartite,
    Digraph,
    Matrix,
}

impl fmt::Display for InstanceKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            InstanceKind::Bipartite => "bg",
            InstanceKind::Digraph => "dg",
            InstanceKind::Matrix => "mat",
        })
    }
}

impl FromStr for InstanceKind {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "bg" => Ok(InstanceKind::Bipartite),
            "dg" => Ok(InstanceKind::Digraph),
            "mat" => Ok(InstanceKind::Matrix),
            other => Err(format!("unknown instance kind `{other}` (expected bg, dg or mat)")),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Instance {
    Bipartite(BipartiteGraph),
    Digraph(Digraph),
    Matrix(ZeroOneMatrix),
}

impl Instance {
    pub fn kind(&self) -> InstanceKind {
        match self {
            Instance::Bipartite(_) => InstanceKind::Bipartite,
            Instance::Digraph(_) => InstanceKind::Digraph,
            Instance::Matrix(_) => InstanceKind::Matrix,
        }
    }
}

impl fmt::Display for Instance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&write_instance(self))
    }
}

struct Token<'a> {
    text: &'a str,
    column: usize,
}

struct Line<'a> {
    number: usize,
    tokens: Vec<Token<'a>>,
}

fn lines(text: &str) -> Vec<Line<'_>> {
    text.lines()
        .enumerate()
        .filter_map(|(i, line)| {
            let trimmed = line.trim_start();
            if trimmed.is_empty() || trimmed.starts_with('#') {
                return None;
            }
            let mut tokens = Vec::new();
            let mut start = None;
            for (pos, ch) in line.char_indices().chain([(line.len(), ' ')]) {
                match (ch.is_whitespace(), start) {
                    (false, None) => start = Some(pos),
                    (true, Some(s)) => {
                        tokens.push(Token { text: &line[s..pos], column: s + 1 });
                        start = None;
                    }
                    _ => {}
                }
            }
            Some(Line { number: i + 1, tokens })
        })
        .collect()
}

fn syntax(line: usize, column: usize, message: impl Into<String>) -> FormatError {
    FormatError::Syntax { line, column, message: message.into() }
}

fn number(line: &Line, index: usize, what: &str) -> Result<usize, FormatError> {
    let Some(tok) = line.tokens.get(index) else {
        let column = line.tokens.last().map_or(1, |t| t.column + t.text.len());
        return Err(syntax(line.number, column, format!("missing {what}")));
    };
    tok.text
        .parse()
        .map_err(|_| syntax(line.number, tok.column, format!("expected {what}, found `{}`", tok.text)))
}

fn index(line: &Line, i: usize, n: usize) -> Result<usize, FormatError> {
    let value = number(line, i, "a vertex index")?;
    if value == 0 || value > n {
        let tok = &line.tokens[i];
        return Err(syntax(line.number, tok.column, format!("index {value} outside 1..={n}")));
    }
    Ok(value - 1)
}

fn expect_len(line: &Line, len: usize) -> Result<(), FormatError> {
    if let Some(extra) = line.tokens.get(len) {
        return Err(syntax(line.number, extra.column, format!("unexpected `{}`", extra.text)));
    }
    Ok(())
}

/// Parses any of the three file kinds.
pub fn parse(text: &str) -> Result<Instance, FormatError> {
    let lines = lines(text);
    let Some(header) = lines.first() else {
        return Err(syntax(1, 1, "empty input"));
    };
    let kind: InstanceKind = header.tokens[0]
        .text
        .parse()
        .map_err(|e: String| syntax(header.number, header.tokens[0].column, e))?;
    let body = &lines[1..];
    let end_line = text.lines().count() + 1;
    match kind {
        InstanceKind::Bipartite | InstanceKind::Digraph => {
            let n = number(header, 1, "the order n")?;
            let m = number(header, 2, "the edge count m")?;
            expect_len(header, 3)?;
            if n == 0 {
                return Err(syntax(header.number, header.tokens[1].column, "order must be at least 1"));
            }
            if body.len() < m {
                return Err(syntax(end_line, 1, format!("expected {m} pairs, found {}", body.len())));
            }
            if let Some(extra) = body.get(m) {
                return Err(syntax(extra.number, 1, format!("more than {m} pairs")));
            }
            let mut pairs = Vec::with_capacity(m);
            for line in body {
                let (i, j) = (index(line, 0, n)?, index(line, 1, n)?);
                expect_len(line, 2)?;
                pairs.push((i, j));
            }
            if kind == InstanceKind::Bipartite {
                let raw = RawBipartite { n, edges: pairs.iter().map(|&(i, j)| (Vertex::U(i), Vertex::W(j))).collect() };
                BipartiteGraph::from_raw(&raw).map(Instance::Bipartite).map_err(FormatError::Invalid)
            } else {
                let raw = RawDigraph { n, arcs: pairs, loops_allowed: false };
                Digraph::from_raw(&raw).map(Instance::Digraph).map_err(FormatError::Invalid)
            }
        }
        InstanceKind::Matrix => {
            let n = number(header, 1, "the order n")?;
            expect_len(header, 2)?;
            if n == 0 {
                return Err(syntax(header.number, header.tokens[1].column, "order must be at least 1"));
            }
            if body.len() < n {
                return Err(syntax(end_line, 1, format!("expected {n} rows, found {}", body.len())));
            }
            if let Some(extra) = body.get(n) {
                return Err(syntax(extra.number, 1, format!("more than {n} rows")));
            }
            let mut rows = Vec::with_capacity(n);
            for line in body {
                expect_len(line, 1)?;
                let tok = &line.tokens[0];
                let mut row = Vec::with_capacity(n);
                for (offset, ch) in tok.text.char_indices() {
                    let Some(digit) = ch.to_digit(10) else {
                        return Err(syntax(line.number, tok.column + offset, format!("unexpected character `{ch}`")));
                    };
                    row.push(digit as u8);
                }
                rows.push(row);
            }
            let report = validate(&RawInstance::Matrix(RawMatrix { rows: rows.clone() }));
            if !report.is_valid() {
                return Err(FormatError::Invalid(report));
            }
            Ok(Instance::Matrix(ZeroOneMatrix::from_rows(&rows).expect("validated")))
        }
    }
}

/// Parses and insists on a particular kind.
pub fn parse_as(text: &str, expected: InstanceKind) -> Result<Instance, FormatError> {
    let instance = parse(text)?;
    if instance.kind() != expected {
        return Err(FormatError::WrongKind { expected, found: instance.kind() });
    }
    Ok(instance)
}

/// Canonical text: sorted edges or arcs, one per line, trailing newline.
pub fn write_instance(instance: &Instance) -> String {
    let mut out = String::new();
    match instance {
        Instance::Bipartite(g) => {
            out.push_str(&format!("bg {} {}\n", g.n(), g.edge_count()));
            for e in g.edges() {
                out.push_str(&format!("{} {}\n", e.u + 1, e.w + 1));
            }
        }
        Instance::Digraph(d) => {
            out.push_str(&format!("dg {} {}\n", d.n(), d.arc_count()));
            for (a, b) in d.arcs() {
                out.push_str(&format!("{} {}\n", a + 1, b + 1));
            }
        }
        Instance::Matrix(a) => {
            out.push_str(&format!("mat {}\n{a}\n", a.n()));
        }
    }
    out
}
