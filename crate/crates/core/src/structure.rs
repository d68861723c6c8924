//! Direct combinatorial checks: distance-regularity, strong regularity and
//! antipodality, all decided by exhaustive counting on the graph itself.

use rayon::prelude::*;

use crate::array::IntersectionArray;
use crate::distance::{distances, DistanceData};
use crate::error::{AntipodalError, Counts, Degenerate, DrgError, SrgError, SrgWitness};
use crate::graph::Graph;

/// Intersection numbers of a distance-regular graph of any diameter.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DrgParameters {
    /// `b_0 .. b_{d-1}`.
    pub b: Vec<u64>,
    /// `c_1 .. c_d`.
    pub c: Vec<u64>,
}

impl DrgParameters {
    pub fn diameter(&self) -> u32 {
        self.c.len() as u32
    }

    pub fn to_diameter_four(&self) -> Result<IntersectionArray, DrgError> {
        let (Ok(b), Ok(c)) = (
            <[u64; 4]>::try_from(self.b.as_slice()),
            <[u64; 4]>::try_from(self.c.as_slice()),
        ) else {
            return Err(DrgError::WrongDiameter(self.diameter()));
        };
        Ok(IntersectionArray::new(b, c).expect("counted arrays of real graphs are valid"))
    }
}

impl std::fmt::Display for DrgParameters {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let join = |v: &[u64]| v.iter().map(u64::to_string).collect::<Vec<_>>().join(" ");
        write!(f, "{} ; {}", join(&self.b), join(&self.c))
    }
}

type Triples = Vec<Option<(usize, Counts)>>;

// Per-vertex table: for each distance i, the first u seen and its counts.
fn local_counts(g: &Graph, data: &DistanceData, v: usize) -> Result<Triples, DrgError> {
    let d = data.diameter() as usize;
    let row = data.row(v);
    let mut table: Triples = vec![None; d + 1];
    for u in 0..g.vertex_count() {
        let i = row[u];
        let (mut c, mut a, mut b) = (0, 0, 0);
        for &w in g.neighbors(u) {
            match row[w] {
                x if x + 1 == i => c += 1,
                x if x == i => a += 1,
                _ => b += 1,
            }
        }
        let counts = (c, a, b);
        match table[i as usize] {
            None => table[i as usize] = Some((u, counts)),
            Some((_, expected)) if expected != counts => {
                return Err(DrgError::NotDistanceRegular {
                    v,
                    u,
                    distance: i,
                    observed: counts,
                    expected,
                })
            }
            Some(_) => {}
        }
    }
    Ok(table)
}

/// Checks distance-regularity over every pair of vertices.
pub fn drg_parameters(g: &Graph) -> Result<DrgParameters, DrgError> {
    drg_parameters_from(g, &distances(g))
}

pub fn drg_parameters_from(g: &Graph, data: &DistanceData) -> Result<DrgParameters, DrgError> {
    if !data.is_connected() {
        return Err(DrgError::NotConnected);
    }
    let tables: Vec<Result<Triples, DrgError>> = (0..g.vertex_count())
        .into_par_iter()
        .map(|v| local_counts(g, data, v))
        .collect();
    let mut reference: Option<Triples> = None;
    for (v, table) in tables.into_iter().enumerate() {
        let table = table?;
        match &reference {
            None => reference = Some(table),
            Some(expected) => {
                for (i, (slot, want)) in table.iter().zip(expected).enumerate() {
                    let ((u, observed), (_, expected)) = (slot.unwrap(), want.unwrap());
                    if observed != expected {
                        return Err(DrgError::NotDistanceRegular {
                            v,
                            u,
                            distance: i as u32,
                            observed,
                            expected,
                        });
                    }
                }
            }
        }
    }
    let table = reference.expect("graphs have at least one vertex");
    let counts: Vec<Counts> = table.into_iter().map(|t| t.unwrap().1).collect();
    let d = counts.len() - 1;
    Ok(DrgParameters {
        b: counts[..d].iter().map(|t| t.2).collect(),
        c: counts[1..].iter().map(|t| t.0).collect(),
    })
}

/// The diameter-4 intersection array of `g`, counted exhaustively.
pub fn intersection_array(g: &Graph) -> Result<IntersectionArray, DrgError> {
    drg_parameters(g)?.to_diameter_four()
}

/// Strongly regular parameters `(n, k', lambda', mu')`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct SrgParams {
    pub n: usize,
    pub k: usize,
    pub lambda: usize,
    pub mu: usize,
}

impl SrgParams {
    /// `k(k - lambda - 1) = (n - k - 1) mu`.
    pub fn satisfies_counting_identity(&self) -> bool {
        self.k * (self.k - self.lambda - 1) == (self.n - self.k - 1) * self.mu
    }
}

impl std::fmt::Display for SrgParams {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "({}, {}, {}, {})", self.n, self.k, self.lambda, self.mu)
    }
}

struct BitRows {
    words: usize,
    bits: Vec<u64>,
}

impl BitRows {
    fn new(g: &Graph) -> Self {
        let n = g.vertex_count();
        let words = n.div_ceil(64);
        let mut bits = vec![0u64; n * words];
        for u in 0..n {
            for &v in g.neighbors(u) {
                bits[u * words + v / 64] |= 1 << (v % 64);
            }
        }
        Self { words, bits }
    }

    fn common(&self, u: usize, v: usize) -> usize {
        let a = &self.bits[u * self.words..(u + 1) * self.words];
        let b = &self.bits[v * self.words..(v + 1) * self.words];
        a.iter().zip(b).map(|(x, y)| (x & y).count_ones() as usize).sum()
    }
}

/// Decides strong regularity by counting common neighbours of every pair.
///
/// Disjoint unions of equal cliques (`mu' = 0`) are accepted; complete and
/// edgeless graphs are rejected as degenerate.
pub fn srg_params(g: &Graph) -> Result<SrgParams, SrgError> {
    let n = g.vertex_count();
    let k = g.degree(0);
    if let Some(vertex) = (0..n).find(|&v| g.degree(v) != k) {
        return Err(SrgError::NotStronglyRegular(SrgWitness::Irregular {
            reference: 0,
            vertex,
            expected: k,
            degree: g.degree(vertex),
        }));
    }
    if k == 0 {
        return Err(SrgError::Degenerate(Degenerate::Empty));
    }
    if k == n - 1 {
        return Err(SrgError::Degenerate(Degenerate::Complete));
    }

    let rows = BitRows::new(g);
    let adjacent_ref = (0, g.neighbors(0)[0]);
    let non_adjacent_ref = (0, (1..n).find(|&v| !g.has_edge(0, v)).unwrap());
    let lambda = rows.common(adjacent_ref.0, adjacent_ref.1);
    let mu = rows.common(non_adjacent_ref.0, non_adjacent_ref.1);

    let witness = (0..n).into_par_iter().find_map_first(|u| {
        (u + 1..n).find_map(|v| {
            let observed = rows.common(u, v);
            if g.has_edge(u, v) {
                (observed != lambda).then_some(SrgWitness::Adjacent {
                    reference: adjacent_ref,
                    pair: (u, v),
                    expected: lambda,
                    observed,
                })
            } else {
                (observed != mu).then_some(SrgWitness::NonAdjacent {
                    reference: non_adjacent_ref,
                    pair: (u, v),
                    expected: mu,
                    observed,
                })
            }
        })
    });
    match witness {
        Some(w) => Err(SrgError::NotStronglyRegular(w)),
        None => Ok(SrgParams { n, k, lambda, mu }),
    }
}

/// The classes of "at distance 0 or d", all of common size `r`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FibrePartition {
    pub r: usize,
    /// Each fibre sorted; fibres ordered by their smallest vertex.
    pub fibres: Vec<Vec<usize>>,
}

pub fn antipodal_fibres(g: &Graph) -> Result<FibrePartition, AntipodalError> {
    antipodal_fibres_from(&distances(g))
}

pub fn antipodal_fibres_from(data: &DistanceData) -> Result<FibrePartition, AntipodalError> {
    if !data.is_connected() {
        return Err(AntipodalError::NotConnected);
    }
    let d = data.diameter();
    if d == 0 {
        return Err(AntipodalError::Trivial);
    }
    let n = data.vertex_count();
    let class = |u: usize| -> Vec<usize> {
        (0..n)
            .filter(|&v| {
                let x = data.get(u, v);
                x == 0 || x == d
            })
            .collect()
    };

    let classes: Vec<Vec<usize>> = (0..n).into_par_iter().map(class).collect();
    for (u, members) in classes.iter().enumerate() {
        for &v in members {
            for &w in &classes[v] {
                let x = data.get(u, w);
                if x != 0 && x != d {
                    return Err(AntipodalError::NotAntipodal { u, v, w, distance: x });
                }
            }
        }
    }
    let mut seen = vec![false; n];
    let mut fibres: Vec<Vec<usize>> = Vec::new();
    for (u, members) in classes.into_iter().enumerate() {
        if !seen[u] {
            for &v in &members {
                seen[v] = true;
            }
            fibres.push(members);
        }
    }
    let r = fibres[0].len();
    if fibres.iter().any(|f| f.len() != r) {
        return Err(AntipodalError::UnequalFibres(
            fibres.iter().map(Vec::len).collect(),
        ));
    }
    Ok(FibrePartition { r, fibres })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::distance::distance_graph;
    use crate::families::{cycle, hypercube, kneser};

    fn path(n: usize) -> Graph {
        Graph::from_edges(n, (1..n).map(|v| (v - 1, v))).unwrap()
    }

    #[test]
    fn arrays_of_small_graphs() {
        let c8 = intersection_array(&cycle(8).unwrap()).unwrap();
        assert_eq!((c8.b(), c8.c()), ([2, 1, 1, 1], [1, 1, 1, 2]));
        let q4 = intersection_array(&hypercube(4).unwrap()).unwrap();
        assert_eq!((q4.b(), q4.c()), ([4, 3, 2, 1], [1, 2, 3, 4]));
    }

    #[test]
    fn paths_are_not_distance_regular() {
        assert!(matches!(
            intersection_array(&path(4)),
            Err(DrgError::NotDistanceRegular { .. })
        ));
        let disconnected = Graph::from_edges(4, [(0, 1), (2, 3)]).unwrap();
        assert_eq!(intersection_array(&disconnected), Err(DrgError::NotConnected));
    }

    #[test]
    fn petersen_has_diameter_two() {
        let petersen = kneser(5, 2).unwrap();
        let params = drg_parameters(&petersen).unwrap();
        assert_eq!((params.b.clone(), params.c.clone()), (vec![3, 2], vec![1, 1]));
        assert_eq!(params.to_diameter_four(), Err(DrgError::WrongDiameter(2)));
    }

    #[test]
    fn srg_examples() {
        let matching = Graph::from_edges(16, (0..8).map(|i| (2 * i, 2 * i + 1))).unwrap();
        let p = srg_params(&matching).unwrap();
        assert_eq!(p, SrgParams { n: 16, k: 1, lambda: 0, mu: 0 });
        assert!(p.satisfies_counting_identity());

        let petersen = srg_params(&kneser(5, 2).unwrap()).unwrap();
        assert_eq!(petersen, SrgParams { n: 10, k: 3, lambda: 0, mu: 1 });

        let c6 = cycle(6).unwrap();
        assert!(matches!(
            srg_params(&c6),
            Err(SrgError::NotStronglyRegular(SrgWitness::NonAdjacent { .. }))
        ));

        assert_eq!(
            srg_params(&cycle(3).unwrap()),
            Err(SrgError::Degenerate(Degenerate::Complete))
        );
        assert_eq!(
            srg_params(&Graph::from_edges(3, []).unwrap()),
            Err(SrgError::Degenerate(Degenerate::Empty))
        );
        assert!(matches!(
            srg_params(&path(3)),
            Err(SrgError::NotStronglyRegular(SrgWitness::Irregular { .. }))
        ));
    }

    #[test]
    fn antipodal_examples() {
        let q4 = antipodal_fibres(&hypercube(4).unwrap()).unwrap();
        assert_eq!((q4.r, q4.fibres.len()), (2, 8));
        assert!(q4.fibres.iter().all(|f| f[1] == f[0] ^ 15));

        let c8 = antipodal_fibres(&cycle(8).unwrap()).unwrap();
        assert_eq!((c8.r, c8.fibres.len()), (2, 4));

        let err = antipodal_fibres(&kneser(5, 2).unwrap()).unwrap_err();
        let AntipodalError::NotAntipodal { u, v, w, distance } = err else {
            panic!("expected a witness triple, got {err:?}");
        };
        let d = distances(&kneser(5, 2).unwrap());
        assert_eq!(d.get(u, v), 2);
        assert_eq!(d.get(v, w), 2);
        assert_eq!(d.get(u, w), distance);
        assert_eq!(distance, 1);
    }

    #[test]
    fn unequal_fibres() {
        // P3: the middle vertex has nothing at distance 2.
        assert_eq!(
            antipodal_fibres(&path(3)),
            Err(AntipodalError::UnequalFibres(vec![2, 1]))
        );
    }

    #[test]
    fn odd_graph_distance_four_graph_is_not_strongly_regular() {
        let o5 = kneser(9, 4).unwrap();
        let g4 = distance_graph(&o5, 4).unwrap();
        assert_eq!(g4.regular_degree(), Some(60));
        assert!(matches!(srg_params(&g4), Err(SrgError::NotStronglyRegular(_))));
        assert!(matches!(
            antipodal_fibres(&o5),
            Err(AntipodalError::NotAntipodal { .. })
        ));
    }
}
