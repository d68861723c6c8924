use thiserror::Error;

/// Errors raised while building a [`Graph`](crate::Graph) from an edge list.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("a graph needs at least one vertex")]
    Empty,
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("duplicate edge {0} {1}")]
    DuplicateEdge(usize, usize),
    #[error("distance {requested} outside 1..={diameter}")]
    DistanceOutOfRange { requested: u32, diameter: u32 },
    #[error("graph is not connected")]
    NotConnected,
}

/// A line-numbered diagnostic from one of the text formats.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("line {line}: {message}")]
pub struct ParseError {
    pub line: usize,
    pub message: String,
}

impl ParseError {
    pub(crate) fn new(line: usize, message: impl Into<String>) -> Self {
        Self {
            line,
            message: message.into(),
        }
    }
}

/// Counts `(c_i, a_i, b_i)` seen for one pair of vertices.
pub type Counts = (u64, u64, u64);

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DrgError {
    #[error("graph is not connected")]
    NotConnected,
    #[error(
        "not distance-regular: vertex {u} at distance {distance} from {v} has (c, a, b) = {observed:?}, expected {expected:?}"
    )]
    NotDistanceRegular {
        v: usize,
        u: usize,
        distance: u32,
        observed: Counts,
        expected: Counts,
    },
    #[error("distance-regular of diameter {0}, expected diameter 4")]
    WrongDiameter(u32),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Degenerate {
    Complete,
    Empty,
}

/// Why a graph failed the direct strong-regularity count.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SrgWitness {
    Irregular {
        reference: usize,
        vertex: usize,
        expected: usize,
        degree: usize,
    },
    /// Two adjacent pairs with different common-neighbour counts.
    Adjacent {
        reference: (usize, usize),
        pair: (usize, usize),
        expected: usize,
        observed: usize,
    },
    /// Two non-adjacent pairs with different common-neighbour counts.
    NonAdjacent {
        reference: (usize, usize),
        pair: (usize, usize),
        expected: usize,
        observed: usize,
    },
}

impl std::fmt::Display for SrgWitness {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            SrgWitness::Irregular {
                reference,
                vertex,
                expected,
                degree,
            } => write!(
                f,
                "vertex {vertex} has degree {degree} but vertex {reference} has degree {expected}"
            ),
            SrgWitness::Adjacent {
                reference,
                pair,
                expected,
                observed,
            } => write!(
                f,
                "adjacent pair {} {} has {observed} common neighbours but adjacent pair {} {} has {expected}",
                pair.0, pair.1, reference.0, reference.1
            ),
            SrgWitness::NonAdjacent {
                reference,
                pair,
                expected,
                observed,
            } => write!(
                f,
                "non-adjacent pair {} {} has {observed} common neighbours but non-adjacent pair {} {} has {expected}",
                pair.0, pair.1, reference.0, reference.1
            ),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SrgError {
    #[error("degenerate graph ({0:?}) is not counted as strongly regular")]
    Degenerate(Degenerate),
    #[error("not strongly regular: {0}")]
    NotStronglyRegular(SrgWitness),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AntipodalError {
    #[error("graph is not connected")]
    NotConnected,
    #[error("graph has diameter 0")]
    Trivial,
    #[error(
        "not antipodal: d({u},{v}) and d({v},{w}) are 0 or the diameter but d({u},{w}) = {distance}"
    )]
    NotAntipodal {
        u: usize,
        v: usize,
        w: usize,
        distance: u32,
    },
    #[error("fibres have unequal sizes {0:?}")]
    UnequalFibres(Vec<usize>),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ArrayError {
    #[error("c1 must be 1, got {0}")]
    C1NotOne(u64),
    #[error("intersection numbers must be positive")]
    ZeroEntry,
    #[error("{0} is not monotone")]
    NotMonotone(&'static str),
    #[error("c4 = {c4} exceeds b0 = {b0}")]
    CExceedsDegree { c4: u64, b0: u64 },
    #[error("a{index} would be negative")]
    NegativeA { index: usize },
    #[error("k{index} = {numer}/{denom} is not an integer")]
    NonIntegralK { index: usize, numer: u128, denom: u128 },
    #[error("n = {0} overflows")]
    Overflow(String),
    #[error("net parameters m = {m}, mu = {mu} are out of range")]
    NetParameters { m: u64, mu: u64 },
    #[error("malformed intersection array: {0}")]
    Parse(String),
}

#[derive(Debug, Clone, PartialEq, Error)]
pub enum SpectrumError {
    #[error("characteristic polynomial has a repeated root")]
    RepeatedRoot,
    #[error("expected 5 real roots, found {0}")]
    MissingRoots(usize),
    #[error("multiplicity of eigenvalue {index} is not an integer (about {approx})")]
    NonIntegralMultiplicity { index: usize, approx: f64 },
    #[error("multiplicity of eigenvalue {index} could not be settled at the current precision")]
    Undecided { index: usize },
    #[error("eigenvalues must be strictly decreasing")]
    NotDecreasing,
    #[error("invalid multiplicities: {0}")]
    InvalidMultiplicities(String),
    #[error("polynomial degree {0} exceeds 4")]
    DegreeTooHigh(usize),
    #[error("epsilon must lie in (0, 1], got {0}")]
    InvalidEpsilon(f64),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CriteriaError {
    #[error("array is not bipartite: a{0} != 0")]
    NotBipartiteArray(usize),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FamilyError {
    #[error("{family}: parameters out of range ({reason})")]
    OutOfRange {
        family: &'static str,
        reason: String,
    },
    #[error("matrix is not Hadamard: rows {0} and {1} are not orthogonal")]
    NotHadamard(usize, usize),
    #[error("matrix entries must be +1 or -1")]
    BadEntry,
    #[error("Hadamard order {0} must be even")]
    OddOrder(usize),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ScanError {
    #[error("k_max = {0} outside 2..=64")]
    KMax(u64),
    #[error("n_max = {0} outside 1..=1000000")]
    NMax(u64),
}
