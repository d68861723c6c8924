//! Diameter-four intersection arrays `{b0, b1, b2, b3; c1, c2, c3, c4}`.

use std::fmt;
use std::str::FromStr;

use num_rational::Ratio;

use crate::error::ArrayError;

/// A validated intersection array of diameter 4.
///
/// Construction checks `c1 = 1`, positivity, monotonicity of both rows,
/// `a_i >= 0` and integrality of every `k_i`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct IntersectionArray {
    b: [u64; 4],
    c: [u64; 4],
}

impl IntersectionArray {
    pub fn new(b: [u64; 4], c: [u64; 4]) -> Result<Self, ArrayError> {
        check_structure(&b, &c)?;
        let sizes = distance_sizes(&b, &c)?;
        for (index, k) in sizes.iter().enumerate() {
            if !k.is_integer() {
                return Err(ArrayError::NonIntegralK {
                    index,
                    numer: *k.numer(),
                    denom: *k.denom(),
                });
            }
        }
        Ok(Self { b, c })
    }

    pub fn b(&self) -> [u64; 4] {
        self.b
    }

    pub fn c(&self) -> [u64; 4] {
        self.c
    }

    /// Valency `k = b0`.
    pub fn k(&self) -> u64 {
        self.b[0]
    }

    /// `b_i` for `i` in `0..=4`, with `b4 = 0`.
    pub fn b_at(&self, i: usize) -> u64 {
        if i < 4 {
            self.b[i]
        } else {
            0
        }
    }

    /// `c_i` for `i` in `0..=4`, with `c0 = 0`.
    pub fn c_at(&self, i: usize) -> u64 {
        if i == 0 {
            0
        } else {
            self.c[i - 1]
        }
    }

    /// `a_i = k - b_i - c_i`.
    pub fn a_at(&self, i: usize) -> u64 {
        self.k() - self.b_at(i) - self.c_at(i)
    }

    pub fn a(&self) -> [u64; 5] {
        std::array::from_fn(|i| self.a_at(i))
    }

    pub fn a1(&self) -> u64 {
        self.a_at(1)
    }

    pub fn b1(&self) -> u64 {
        self.b[1]
    }

    /// `k_i`, the number of vertices at distance `i` from a fixed vertex.
    pub fn distance_sizes(&self) -> [u64; 5] {
        let sizes = distance_sizes(&self.b, &self.c).expect("validated on construction");
        sizes.map(|k| *k.numer() as u64)
    }

    pub fn vertex_count(&self) -> u64 {
        self.distance_sizes().iter().sum()
    }

    pub fn is_bipartite(&self) -> bool {
        (0..=4).all(|i| self.a_at(i) == 0)
    }
}

/// Everything except integrality of the `k_i`.
pub fn check_structure(b: &[u64; 4], c: &[u64; 4]) -> Result<(), ArrayError> {
    if c[0] != 1 {
        return Err(ArrayError::C1NotOne(c[0]));
    }
    if b.iter().chain(c).any(|&x| x == 0) {
        return Err(ArrayError::ZeroEntry);
    }
    if b.windows(2).any(|w| w[0] < w[1]) {
        return Err(ArrayError::NotMonotone("b0 >= b1 >= b2 >= b3"));
    }
    if c.windows(2).any(|w| w[0] > w[1]) {
        return Err(ArrayError::NotMonotone("c1 <= c2 <= c3 <= c4"));
    }
    let k = b[0];
    if c[3] > k {
        return Err(ArrayError::CExceedsDegree { c4: c[3], b0: k });
    }
    for i in 1..4 {
        if b[i] + c[i - 1] > k {
            return Err(ArrayError::NegativeA { index: i });
        }
    }
    Ok(())
}

/// `k_i` as exact rationals; `k_{i+1} = k_i b_i / c_{i+1}`.
pub fn distance_sizes(b: &[u64; 4], c: &[u64; 4]) -> Result<[Ratio<u128>; 5], ArrayError> {
    let mut sizes = [Ratio::from_integer(1u128); 5];
    for i in 0..4 {
        let numer = sizes[i]
            .numer()
            .checked_mul(b[i] as u128)
            .ok_or_else(|| ArrayError::Overflow(format!("k{}", i + 1)))?;
        let denom = sizes[i]
            .denom()
            .checked_mul(c[i] as u128)
            .ok_or_else(|| ArrayError::Overflow(format!("k{}", i + 1)))?;
        sizes[i + 1] = Ratio::new(numer, denom);
    }
    Ok(sizes)
}

impl fmt::Display for IntersectionArray {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_array(f, &self.b, &self.c)
    }
}

pub(crate) fn write_array(f: &mut impl fmt::Write, b: &[u64; 4], c: &[u64; 4]) -> fmt::Result {
    write!(
        f,
        "{} {} {} {} ; {} {} {} {}",
        b[0], b[1], b[2], b[3], c[0], c[1], c[2], c[3]
    )
}

/// Parses `b0 b1 b2 b3 ; c1 c2 c3 c4` into its two rows without validating.
pub fn parse_rows(s: &str) -> Result<([u64; 4], [u64; 4]), ArrayError> {
    let (left, right) = s
        .split_once(';')
        .ok_or_else(|| ArrayError::Parse("expected `b0 b1 b2 b3 ; c1 c2 c3 c4`".into()))?;
    let row = |part: &str, name: &str| -> Result<[u64; 4], ArrayError> {
        let values = part
            .split(|ch: char| ch.is_whitespace() || ch == ',')
            .filter(|t| !t.is_empty())
            .map(|t| {
                t.parse::<u64>()
                    .map_err(|_| ArrayError::Parse(format!("`{t}` is not a non-negative integer")))
            })
            .collect::<Result<Vec<_>, _>>()?;
        values.try_into().map_err(|v: Vec<u64>| {
            ArrayError::Parse(format!("{name} row has {} entries, expected 4", v.len()))
        })
    };
    Ok((row(left, "b")?, row(right, "c")?))
}

impl FromStr for IntersectionArray {
    type Err = ArrayError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let (b, c) = parse_rows(s)?;
        Self::new(b, c)
    }
}
