//! Command-line shorthands for graphs, fields and linear forms, and the
//! edge-list file format.

use std::fmt;
use std::fs;
use std::path::{Path, PathBuf};
use std::str::FromStr;

use toricode_core::{Elem, FiniteField, Graph};

#[derive(Debug, thiserror::Error)]
pub enum SpecError {
    #[error("unrecognized graph spec {0:?}; expected cycle:N, path:N, kbip:A,B, empty:N, @FILE, or a +-joined union")]
    UnknownGraph(String),
    #[error("unrecognized field spec {0:?}; expected Q or P^E")]
    UnknownField(String),
    #[error("bad number {0:?}")]
    BadNumber(String),
    #[error("{path}: line {line}: {message}")]
    EdgeFile { path: String, line: usize, message: String },
    #[error("coefficient {value} is not below q = {q}")]
    BadCoefficient { value: String, q: u32 },
    #[error("cannot read {path}: {source}")]
    Io { path: String, source: std::io::Error },
    #[error(transparent)]
    Core(#[from] toricode_core::Error),
}

fn number<T: FromStr>(s: &str) -> Result<T, SpecError> {
    s.trim().parse().map_err(|_| SpecError::BadNumber(s.to_string()))
}

/// A graph given by name on the command line. `Display` gives back the
/// spec string.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GraphSpec {
    Cycle(usize),
    /// Path with the given number of vertices.
    Path(usize),
    CompleteBipartite(usize, usize),
    /// Isolated vertices only.
    Empty(usize),
    File(PathBuf),
    /// Disjoint union, written with `+`.
    Union(Vec<GraphSpec>),
}

impl FromStr for GraphSpec {
    type Err = SpecError;

    fn from_str(s: &str) -> Result<Self, SpecError> {
        let s = s.trim();
        if s.contains('+') {
            return s.split('+').map(str::parse).collect::<Result<_, _>>().map(GraphSpec::Union);
        }
        if let Some(path) = s.strip_prefix('@') {
            return Ok(GraphSpec::File(PathBuf::from(path)));
        }
        let Some((kind, arg)) = s.split_once(':') else {
            return Err(SpecError::UnknownGraph(s.to_string()));
        };
        match kind {
            "cycle" => Ok(GraphSpec::Cycle(number(arg)?)),
            "path" => Ok(GraphSpec::Path(number(arg)?)),
            "empty" => Ok(GraphSpec::Empty(number(arg)?)),
            "kbip" => {
                let (a, b) = arg.split_once(',').ok_or_else(|| SpecError::UnknownGraph(s.to_string()))?;
                Ok(GraphSpec::CompleteBipartite(number(a)?, number(b)?))
            }
            _ => Err(SpecError::UnknownGraph(s.to_string())),
        }
    }
}

impl fmt::Display for GraphSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GraphSpec::Cycle(n) => write!(f, "cycle:{n}"),
            GraphSpec::Path(n) => write!(f, "path:{n}"),
            GraphSpec::CompleteBipartite(a, b) => write!(f, "kbip:{a},{b}"),
            GraphSpec::Empty(n) => write!(f, "empty:{n}"),
            GraphSpec::File(p) => write!(f, "@{}", p.display()),
            GraphSpec::Union(parts) => {
                for (i, part) in parts.iter().enumerate() {
                    if i > 0 {
                        f.write_str("+")?;
                    }
                    write!(f, "{part}")?;
                }
                Ok(())
            }
        }
    }
}

impl GraphSpec {
    pub fn build(&self) -> Result<Graph, SpecError> {
        match self {
            GraphSpec::Cycle(n) => Ok(Graph::cycle(*n)?),
            GraphSpec::Path(n) => Ok(Graph::path(*n)?),
            GraphSpec::CompleteBipartite(a, b) => Ok(Graph::complete_bipartite(*a, *b)?),
            GraphSpec::Empty(n) => Ok(Graph::new(*n, &[])?),
            GraphSpec::File(p) => read_edge_file(p),
            GraphSpec::Union(parts) => {
                let mut it = parts.iter();
                let first = it.next().ok_or_else(|| SpecError::UnknownGraph(String::new()))?.build()?;
                it.try_fold(first, |acc, p| Ok(acc.disjoint_union(&p.build()?)))
            }
        }
    }
}

/// Parses "Q" (any prime power) or "P^E".
pub fn parse_field(s: &str) -> Result<FiniteField, SpecError> {
    let s = s.trim();
    let field = match s.split_once('^') {
        Some((p, e)) => FiniteField::new(number(p)?, number(e)?),
        None => FiniteField::with_order(number(s)?),
    };
    field.map_err(|err| match err {
        toricode_core::Error::NotPrime(_) => SpecError::UnknownField(s.to_string()),
        other => SpecError::Core(other),
    })
}

/// Parses "1,-1,0,0". Entries are element encodings below q; a leading
/// minus sign takes the additive inverse.
pub fn parse_form(field: &FiniteField, s: &str) -> Result<Vec<Elem>, SpecError> {
    s.split(',')
        .map(|tok| {
            let tok = tok.trim();
            let (neg, digits) = match tok.strip_prefix('-') {
                Some(rest) => (true, rest),
                None => (false, tok),
            };
            let v: u32 = number(digits)?;
            let e = field
                .elem(v)
                .map_err(|_| SpecError::BadCoefficient { value: tok.to_string(), q: field.order() })?;
            Ok(if neg { field.neg(e) } else { e })
        })
        .collect()
}

pub fn parse_edge_list(text: &str, origin: &str) -> Result<Graph, SpecError> {
    let err = |line: usize, message: String| SpecError::EdgeFile { path: origin.to_string(), line, message };
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.split('#').next().unwrap_or("").trim()))
        .filter(|(_, l)| !l.is_empty());
    let (hline, header) = lines.next().ok_or_else(|| err(1, "missing \"n s\" header".into()))?;
    let pair = |line: usize, l: &str| -> Result<(usize, usize), SpecError> {
        let mut it = l.split_whitespace();
        match (it.next(), it.next(), it.next()) {
            (Some(a), Some(b), None) => Ok((
                a.parse().map_err(|_| err(line, format!("bad integer {a:?}")))?,
                b.parse().map_err(|_| err(line, format!("bad integer {b:?}")))?,
            )),
            _ => Err(err(line, format!("expected two integers, got {l:?}"))),
        }
    };
    let (n, s) = pair(hline, header)?;
    let mut edges = Vec::with_capacity(s);
    for (line, l) in lines {
        edges.push(pair(line, l)?);
    }
    if edges.len() != s {
        return Err(err(hline, format!("header announces {s} edges, found {}", edges.len())));
    }
    Graph::new(n, &edges).map_err(|e| err(hline, e.to_string()))
}

pub fn read_edge_file(path: &Path) -> Result<Graph, SpecError> {
    let text = fs::read_to_string(path)
        .map_err(|source| SpecError::Io { path: path.display().to_string(), source })?;
    parse_edge_list(&text, &path.display().to_string())
}

pub fn format_edge_list(graph: &Graph) -> String {
    let mut out = format!("{} {}\n", graph.vertex_count(), graph.edge_count());
    for (i, j) in graph.edges() {
        out.push_str(&format!("{i} {j}\n"));
    }
    out
}

/// Canonical spec string for a field: "q" for prime fields, "p^e" otherwise.
pub fn field_spec(field: &FiniteField) -> String {
    field.to_string()
}
