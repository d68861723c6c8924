//! Simple undirected graphs and the plain-text edge-list format.
//!
//! The format is a header line `n m` followed by `m` lines `u v` with
//! `0 <= u < v < n`. Lines starting with `#` and blank lines are skipped.

use std::collections::HashSet;
use std::fmt::Write as _;

use crate::error::{GraphError, ParseError};

/// A simple undirected graph on vertices `0..n`.
///
/// Neighbour lists are kept sorted and free of duplicates, so equality of two
/// graphs is equality of their labelled edge sets.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    adjacency: Vec<Vec<usize>>,
}

impl Graph {
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        if n == 0 {
            return Err(GraphError::Empty);
        }
        let mut adjacency = vec![Vec::new(); n];
        for (u, v) in edges {
            for vertex in [u, v] {
                if vertex >= n {
                    return Err(GraphError::VertexOutOfRange { vertex, n });
                }
            }
            if u == v {
                return Err(GraphError::SelfLoop(u));
            }
            adjacency[u].push(v);
            adjacency[v].push(u);
        }
        for (u, list) in adjacency.iter_mut().enumerate() {
            list.sort_unstable();
            if let Some(w) = list.windows(2).find(|w| w[0] == w[1]) {
                let (a, b) = (u.min(w[0]), u.max(w[0]));
                return Err(GraphError::DuplicateEdge(a, b));
            }
        }
        Ok(Self { adjacency })
    }

    pub fn vertex_count(&self) -> usize {
        self.adjacency.len()
    }

    pub fn edge_count(&self) -> usize {
        self.adjacency.iter().map(Vec::len).sum::<usize>() / 2
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adjacency[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adjacency[v].len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adjacency[u].binary_search(&v).is_ok()
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adjacency
            .iter()
            .enumerate()
            .flat_map(|(u, list)| list.iter().filter(move |&&v| v > u).map(move |&v| (u, v)))
    }

    /// Returns the common degree, if every vertex has the same degree.
    pub fn regular_degree(&self) -> Option<usize> {
        let d = self.degree(0);
        self.adjacency.iter().all(|l| l.len() == d).then_some(d)
    }

    pub fn parse(text: &str) -> Result<Self, ParseError> {
        let mut lines = text
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l.trim()))
            .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));

        let (header_line, header) = lines
            .next()
            .ok_or_else(|| ParseError::new(1, "missing header line `n m`"))?;
        let (n, m) = parse_pair(header_line, header)?;
        if n == 0 {
            return Err(ParseError::new(header_line, "vertex count must be positive"));
        }

        let mut adjacency: Vec<Vec<usize>> = vec![Vec::new(); n];
        let mut seen = HashSet::new();
        let mut count = 0usize;
        let mut last_line = header_line;
        for (line, body) in lines {
            last_line = line;
            let (u, v) = parse_pair(line, body)?;
            if v >= n {
                return Err(ParseError::new(
                    line,
                    format!("vertex {v} out of range for n = {n}"),
                ));
            }
            if u >= v {
                return Err(ParseError::new(
                    line,
                    format!("edge `{u} {v}` must satisfy u < v"),
                ));
            }
            if !seen.insert((u, v)) {
                return Err(ParseError::new(line, format!("duplicate edge {u} {v}")));
            }
            adjacency[u].push(v);
            adjacency[v].push(u);
            count += 1;
        }
        if count != m {
            return Err(ParseError::new(
                last_line,
                format!("header announces {m} edges but {count} were given"),
            ));
        }
        for list in &mut adjacency {
            list.sort_unstable();
        }
        Ok(Self { adjacency })
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "{} {}", self.vertex_count(), self.edge_count());
        for (u, v) in self.edges() {
            let _ = writeln!(out, "{u} {v}");
        }
        out
    }
}

fn parse_pair(line: usize, body: &str) -> Result<(usize, usize), ParseError> {
    let mut fields = body.split_whitespace();
    let mut next = |what: &str| -> Result<usize, ParseError> {
        let tok = fields
            .next()
            .ok_or_else(|| ParseError::new(line, format!("missing {what}")))?;
        tok.parse::<usize>()
            .map_err(|_| ParseError::new(line, format!("`{tok}` is not a non-negative integer")))
    };
    let a = next("first field")?;
    let b = next("second field")?;
    if fields.next().is_some() {
        return Err(ParseError::new(line, "expected exactly two fields"));
    }
    Ok((a, b))
}
