use std::collections::VecDeque;

use rayon::prelude::*;

use crate::error::GraphError;
use crate::graph::Graph;

/// Sentinel distance between vertices in different components.
pub const UNREACHABLE: u32 = u32::MAX;

/// All-pairs hop distances.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DistanceData {
    n: usize,
    dist: Vec<u32>,
    diameter: u32,
    connected: bool,
}

impl DistanceData {
    pub fn vertex_count(&self) -> usize {
        self.n
    }

    /// Distance between `u` and `v`, or [`UNREACHABLE`].
    pub fn get(&self, u: usize, v: usize) -> u32 {
        self.dist[u * self.n + v]
    }

    pub fn row(&self, u: usize) -> &[u32] {
        &self.dist[u * self.n..(u + 1) * self.n]
    }

    /// Largest finite distance.
    pub fn diameter(&self) -> u32 {
        self.diameter
    }

    pub fn is_connected(&self) -> bool {
        self.connected
    }
}

fn bfs(g: &Graph, source: usize) -> Vec<u32> {
    let mut dist = vec![UNREACHABLE; g.vertex_count()];
    let mut queue = VecDeque::new();
    dist[source] = 0;
    queue.push_back(source);
    while let Some(u) = queue.pop_front() {
        let next = dist[u] + 1;
        for &w in g.neighbors(u) {
            if dist[w] == UNREACHABLE {
                dist[w] = next;
                queue.push_back(w);
            }
        }
    }
    dist
}

/// Breadth-first search from every vertex.
pub fn distances(g: &Graph) -> DistanceData {
    let n = g.vertex_count();
    let rows: Vec<Vec<u32>> = (0..n).into_par_iter().map(|v| bfs(g, v)).collect();
    let dist: Vec<u32> = rows.into_iter().flatten().collect();
    let connected = dist.iter().all(|&d| d != UNREACHABLE);
    let diameter = dist
        .iter()
        .copied()
        .filter(|&d| d != UNREACHABLE)
        .max()
        .unwrap_or(0);
    DistanceData {
        n,
        dist,
        diameter,
        connected,
    }
}

/// The distance-`i` graph: same vertices, `u ~ v` iff `dist(u, v) = i`.
pub fn distance_graph(g: &Graph, i: u32) -> Result<Graph, GraphError> {
    distance_graph_from(&distances(g), i)
}

pub fn distance_graph_from(data: &DistanceData, i: u32) -> Result<Graph, GraphError> {
    if i == 0 || i > data.diameter {
        return Err(GraphError::DistanceOutOfRange {
            requested: i,
            diameter: data.diameter,
        });
    }
    let n = data.n;
    let edges = (0..n).flat_map(|u| {
        data.row(u)
            .iter()
            .enumerate()
            .skip(u + 1)
            .filter(move |&(_, &d)| d == i)
            .map(move |(v, _)| (u, v))
    });
    Graph::from_edges(n, edges)
}

/// Outcome of the two-colouring search.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Bipartition {
    /// Colour (0 or 1) of every vertex.
    Bipartite(Vec<u8>),
    /// Vertices of an odd closed walk, listed along the cycle.
    OddCycle(Vec<usize>),
}

impl Bipartition {
    pub fn is_bipartite(&self) -> bool {
        matches!(self, Bipartition::Bipartite(_))
    }
}

pub fn is_bipartite(g: &Graph) -> Bipartition {
    let n = g.vertex_count();
    let mut colour: Vec<Option<u8>> = vec![None; n];
    let mut parent = vec![usize::MAX; n];
    let mut depth = vec![0usize; n];
    for root in 0..n {
        if colour[root].is_some() {
            continue;
        }
        colour[root] = Some(0);
        let mut queue = VecDeque::from([root]);
        while let Some(u) = queue.pop_front() {
            let cu = colour[u].unwrap();
            for &w in g.neighbors(u) {
                match colour[w] {
                    None => {
                        colour[w] = Some(1 - cu);
                        parent[w] = u;
                        depth[w] = depth[u] + 1;
                        queue.push_back(w);
                    }
                    Some(cw) if cw == cu => {
                        return Bipartition::OddCycle(odd_cycle(&parent, &depth, u, w));
                    }
                    Some(_) => {}
                }
            }
        }
    }
    Bipartition::Bipartite(colour.into_iter().map(Option::unwrap).collect())
}

// Joins the two tree paths from `u` and `w` up to their common ancestor.
fn odd_cycle(parent: &[usize], depth: &[usize], u: usize, w: usize) -> Vec<usize> {
    let (mut a, mut b) = (u, w);
    let mut left = vec![a];
    let mut right = vec![b];
    while depth[a] > depth[b] {
        a = parent[a];
        left.push(a);
    }
    while depth[b] > depth[a] {
        b = parent[b];
        right.push(b);
    }
    while a != b {
        a = parent[a];
        b = parent[b];
        left.push(a);
        right.push(b);
    }
    right.pop();
    left.extend(right.into_iter().rev());
    left
}
