//! Generators for the concrete witness graphs.

use crate::error::{FamilyError, GraphError, ParseError};
use crate::graph::Graph;

/// Largest vertex count accepted by [`kneser`].
pub const KNESER_MAX_VERTICES: u64 = 100_000;

fn built(g: Result<Graph, GraphError>) -> Graph {
    g.expect("generators only emit valid edge lists")
}

/// The `d`-cube: vertices `0..2^d`, adjacent when they differ in one bit.
pub fn hypercube(d: u32) -> Result<Graph, FamilyError> {
    if !(1..=16).contains(&d) {
        return Err(FamilyError::OutOfRange {
            family: "hypercube",
            reason: format!("d = {d}, need 1 <= d <= 16"),
        });
    }
    let n = 1usize << d;
    let edges = (0..n).flat_map(|v| {
        (0..d)
            .map(move |bit| v ^ (1 << bit))
            .filter(move |&w| w > v)
            .map(move |w| (v, w))
    });
    Ok(built(Graph::from_edges(n, edges)))
}

pub fn cycle(n: usize) -> Result<Graph, FamilyError> {
    if n < 3 {
        return Err(FamilyError::OutOfRange {
            family: "cycle",
            reason: format!("n = {n}, need n >= 3"),
        });
    }
    Ok(built(Graph::from_edges(n, (0..n).map(|v| (v, (v + 1) % n)))))
}

fn binomial(n: u64, k: u64) -> u64 {
    (0..k).fold(1u64, |acc, i| acc.saturating_mul(n - i) / (i + 1))
}

/// Kneser graph: `t`-subsets of a `v`-set, adjacent when disjoint.
///
/// Vertices are numbered by the lexicographic order of their subsets.
pub fn kneser(v: u32, t: u32) -> Result<Graph, FamilyError> {
    if t == 0 || v < 2 * t + 1 || v > 63 {
        return Err(FamilyError::OutOfRange {
            family: "kneser",
            reason: format!("v = {v}, t = {t}, need t >= 1 and 2t + 1 <= v <= 63"),
        });
    }
    let count = binomial(v as u64, t as u64);
    if count > KNESER_MAX_VERTICES {
        return Err(FamilyError::OutOfRange {
            family: "kneser",
            reason: format!("{count} vertices exceeds {KNESER_MAX_VERTICES}"),
        });
    }
    let subsets: Vec<u64> = subsets_lex(v, t);
    let mut edges = Vec::new();
    for (i, a) in subsets.iter().enumerate() {
        for (j, b) in subsets.iter().enumerate().skip(i + 1) {
            if a & b == 0 {
                edges.push((i, j));
            }
        }
    }
    Ok(built(Graph::from_edges(subsets.len(), edges)))
}

// t-subsets of {0..v} as bitmasks, lexicographic on sorted element lists.
fn subsets_lex(v: u32, t: u32) -> Vec<u64> {
    fn go(start: u32, v: u32, left: u32, mask: u64, out: &mut Vec<u64>) {
        if left == 0 {
            out.push(mask);
            return;
        }
        for x in start..=(v - left) {
            go(x + 1, v, left - 1, mask | (1 << x), out);
        }
    }
    let mut out = Vec::new();
    go(0, v, t, 0, &mut out);
    out
}

/// A square matrix with entries `+1` / `-1`, stored row-major.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SignMatrix {
    order: usize,
    entries: Vec<i8>,
}

impl SignMatrix {
    pub fn new(order: usize, entries: Vec<i8>) -> Result<Self, FamilyError> {
        if entries.len() != order * order || entries.iter().any(|&e| e != 1 && e != -1) {
            return Err(FamilyError::BadEntry);
        }
        Ok(Self { order, entries })
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn get(&self, i: usize, j: usize) -> i8 {
        self.entries[i * self.order + j]
    }

    pub fn row(&self, i: usize) -> &[i8] {
        &self.entries[i * self.order..(i + 1) * self.order]
    }

    /// First pair of non-orthogonal rows, if any.
    pub fn hadamard_violation(&self) -> Option<(usize, usize)> {
        (0..self.order).find_map(|i| {
            (i + 1..self.order).find_map(|j| {
                let dot: i64 = self
                    .row(i)
                    .iter()
                    .zip(self.row(j))
                    .map(|(a, b)| (*a as i64) * (*b as i64))
                    .sum();
                (dot != 0).then_some((i, j))
            })
        })
    }

    pub fn is_hadamard(&self) -> bool {
        self.hadamard_violation().is_none()
    }

    /// `H Hᵀ`.
    pub fn gram(&self) -> Vec<Vec<i64>> {
        (0..self.order)
            .map(|i| {
                (0..self.order)
                    .map(|j| {
                        self.row(i)
                            .iter()
                            .zip(self.row(j))
                            .map(|(a, b)| (*a as i64) * (*b as i64))
                            .sum()
                    })
                    .collect()
            })
            .collect()
    }

    /// Parses the matrix file format: the order on the first line, then one
    /// row per line, entries `+`/`-` or `1`/`-1`, either whitespace-separated
    /// or (for `+`/`-`) written as a single run like `+-+-`.
    pub fn parse(text: &str) -> Result<Self, ParseError> {
        let mut lines = text
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l.trim()))
            .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));
        let (line, header) = lines
            .next()
            .ok_or_else(|| ParseError::new(1, "missing matrix order"))?;
        let order: usize = header
            .parse()
            .map_err(|_| ParseError::new(line, format!("`{header}` is not a matrix order")))?;
        if order == 0 {
            return Err(ParseError::new(line, "matrix order must be positive"));
        }
        let mut entries = Vec::with_capacity(order * order);
        let mut rows = 0;
        for (line, body) in lines {
            let tokens: Vec<&str> = body.split_whitespace().collect();
            let row: Vec<i8> = if tokens.len() == 1 && order > 1 {
                body.chars()
                    .map(|ch| match ch {
                        '+' => Ok(1),
                        '-' => Ok(-1),
                        _ => Err(ParseError::new(line, format!("unexpected character `{ch}`"))),
                    })
                    .collect::<Result<_, _>>()?
            } else {
                tokens
                    .iter()
                    .map(|t| match *t {
                        "+" | "1" | "+1" => Ok(1),
                        "-" | "-1" => Ok(-1),
                        _ => Err(ParseError::new(line, format!("unexpected entry `{t}`"))),
                    })
                    .collect::<Result<_, _>>()?
            };
            if row.len() != order {
                return Err(ParseError::new(
                    line,
                    format!("row has {} entries, expected {order}", row.len()),
                ));
            }
            rows += 1;
            if rows > order {
                return Err(ParseError::new(line, format!("more than {order} rows")));
            }
            entries.extend(row);
        }
        if rows != order {
            return Err(ParseError::new(
                text.lines().count().max(1),
                format!("expected {order} rows, found {rows}"),
            ));
        }
        Ok(Self { order, entries })
    }

    pub fn to_text(&self) -> String {
        let mut out = format!("{}\n", self.order);
        for i in 0..self.order {
            out.extend(self.row(i).iter().map(|&e| if e > 0 { '+' } else { '-' }));
            out.push('\n');
        }
        out
    }
}

/// Sylvester's doubling construction `H_{2n} = [[H, H], [H, -H]]`, order `2^t`.
pub fn hadamard_matrix_sylvester(t: u32) -> Result<SignMatrix, FamilyError> {
    if t > 6 {
        return Err(FamilyError::OutOfRange {
            family: "sylvester",
            reason: format!("t = {t}, need t <= 6"),
        });
    }
    let mut order = 1usize;
    let mut entries = vec![1i8];
    for _ in 0..t {
        let next_order = 2 * order;
        let mut next = vec![0i8; next_order * next_order];
        for i in 0..order {
            for j in 0..order {
                let h = entries[i * order + j];
                next[i * next_order + j] = h;
                next[i * next_order + j + order] = h;
                next[(i + order) * next_order + j] = h;
                next[(i + order) * next_order + j + order] = -h;
            }
        }
        order = next_order;
        entries = next;
    }
    Ok(SignMatrix { order, entries })
}

/// Incidence graph of the symmetric `(2, mu)`-net of a Hadamard matrix of
/// order `2 mu`.
///
/// Vertices: row `i` with sign `+` is `i`, with `-` is `N + i`; column `j`
/// with `+` is `2N + j`, with `-` is `3N + j` (`N` the order). Row `(i, s)`
/// meets column `(j, t)` when `H[i][j] = s t`.
pub fn hadamard_graph(h: &SignMatrix) -> Result<Graph, FamilyError> {
    let n = h.order();
    if !n.is_multiple_of(2) {
        return Err(FamilyError::OddOrder(n));
    }
    if let Some((i, j)) = h.hadamard_violation() {
        return Err(FamilyError::NotHadamard(i, j));
    }
    let mut edges = Vec::with_capacity(2 * n * n);
    for i in 0..n {
        for j in 0..n {
            for (s, row) in [(1i8, i), (-1, n + i)] {
                let t = h.get(i, j) * s;
                let col = if t > 0 { 2 * n + j } else { 3 * n + j };
                edges.push((row, col));
            }
        }
    }
    Ok(built(Graph::from_edges(4 * n, edges)))
}
