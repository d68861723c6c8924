//! Spectra of diameter-four distance-regular graphs computed from the
//! intersection array alone.
//!
//! The distinct eigenvalues are the roots of the characteristic polynomial of
//! the 5x5 tridiagonal quotient matrix. That polynomial is formed over the
//! integers; integer roots are found exactly and the rest are isolated with a
//! Sturm sequence and refined by bisection. Multiplicities follow from
//! `m(theta) = n / sum_j k_j u_j(theta)^2`, where `u_0 = 1`, `u_1 = theta / k`
//! and `c_j u_{j-1} + a_j u_j + b_j u_{j+1} = theta u_j`.

use std::cmp::Ordering;
use std::fmt::Write as _;
use std::sync::Arc;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive};

use crate::array::IntersectionArray;
use crate::error::SpectrumError;
use crate::format::render_interval;
use crate::interval::{ratio_from_f64, Interval};
use crate::poly::{isolate_real_roots, IntPoly};
use crate::root::{IsolatedRoot, RealRoot};

pub const DEFAULT_EPSILON: f64 = 1e-12;

/// `|m - round(m)|` below this accepts a multiplicity as integral.
pub const MULTIPLICITY_TOLERANCE: f64 = 1e-6;

/// Extra bisection steps taken by the single "refine and retry" pass.
pub const REFINEMENT_BITS: u32 = 80;

/// Width to which irrational eigenvalues are refined.
#[derive(Debug, Clone, PartialEq)]
pub struct Precision {
    epsilon: f64,
    exact: BigRational,
}

impl Precision {
    pub fn new(epsilon: f64) -> Result<Self, SpectrumError> {
        if !(epsilon > 0.0 && epsilon <= 1.0) {
            return Err(SpectrumError::InvalidEpsilon(epsilon));
        }
        Ok(Self {
            epsilon,
            exact: ratio_from_f64(epsilon),
        })
    }

    pub fn epsilon(&self) -> f64 {
        self.epsilon
    }

    pub fn exact(&self) -> &BigRational {
        &self.exact
    }

    /// The tighter width used when a decision comes out undecided.
    pub fn refined(&self) -> BigRational {
        &self.exact / BigRational::from_integer(BigInt::one() << REFINEMENT_BITS as usize)
    }
}

impl Default for Precision {
    fn default() -> Self {
        Self::new(DEFAULT_EPSILON).unwrap()
    }
}

/// Tridiagonal intersection matrix: `B[i][i] = a_i`, `B[i][i+1] = b_i`,
/// `B[i+1][i] = c_{i+1}`.
pub fn quotient_matrix(ia: &IntersectionArray) -> [[i64; 5]; 5] {
    let mut m = [[0i64; 5]; 5];
    for i in 0..5 {
        m[i][i] = ia.a_at(i) as i64;
        if i < 4 {
            m[i][i + 1] = ia.b_at(i) as i64;
            m[i + 1][i] = ia.c_at(i + 1) as i64;
        }
    }
    m
}

pub fn characteristic_polynomial(ia: &IntersectionArray) -> IntPoly {
    let q = quotient_matrix(ia);
    let diag: Vec<i64> = (0..5).map(|i| q[i][i]).collect();
    let off: Vec<i64> = (0..4).map(|i| q[i][i + 1] * q[i + 1][i]).collect();
    IntPoly::tridiagonal_charpoly(&diag, &off)
}

pub fn eigenvalues(ia: &IntersectionArray) -> Result<[RealRoot; 5], SpectrumError> {
    eigenvalues_with(ia, &Precision::default())
}

/// The five distinct eigenvalues in decreasing order.
pub fn eigenvalues_with(
    ia: &IntersectionArray,
    precision: &Precision,
) -> Result<[RealRoot; 5], SpectrumError> {
    let k = ia.k() as i64;
    let mut rest = characteristic_polynomial(ia);
    let mut exact = Vec::new();
    // Monic with spectral radius k, so every rational root is an integer in [-k, k].
    for r in (-k..=k).rev() {
        let big = BigInt::from(r);
        let (q, rem) = rest.div_linear(&big);
        if rem == BigInt::from(0) {
            if q.eval(&big) == BigInt::from(0) {
                return Err(SpectrumError::RepeatedRoot);
            }
            exact.push(r);
            rest = q;
        }
    }

    let mut roots: Vec<RealRoot> = exact.iter().map(|&r| RealRoot::Exact(r)).collect();
    if rest.degree() > 0 {
        if !rest.is_square_free() {
            return Err(SpectrumError::RepeatedRoot);
        }
        let isolated = isolate_real_roots(&rest);
        if isolated.len() != rest.degree() {
            return Err(SpectrumError::MissingRoots(exact.len() + isolated.len()));
        }
        let poly = Arc::new(rest);
        for (lo, hi, e) in isolated {
            let mut root = IsolatedRoot::new(poly.clone(), lo, hi, e);
            root.refine_to(precision.exact());
            // keep bisecting until no integer eigenvalue sits inside the interval
            while exact.iter().any(|&x| {
                let x = BigRational::from_integer(x.into());
                root.lower() <= x && x <= root.upper()
            }) {
                let half = root.width() / BigRational::from_integer(2.into());
                root.refine_to(&half);
            }
            roots.push(RealRoot::Isolated(root));
        }
    }
    roots.sort_by(|a, b| compare_roots(b, a));
    let roots: [RealRoot; 5] = roots
        .try_into()
        .map_err(|v: Vec<RealRoot>| SpectrumError::MissingRoots(v.len()))?;
    assert_eq!(roots[0], RealRoot::Exact(k), "k is the largest eigenvalue");
    Ok(roots)
}

fn compare_roots(a: &RealRoot, b: &RealRoot) -> Ordering {
    let (x, y) = (a.interval(), b.interval());
    if x.hi() < y.lo() {
        Ordering::Less
    } else if y.hi() < x.lo() {
        Ordering::Greater
    } else {
        x.lo().cmp(y.lo())
    }
}

fn multiplicity_interval(ia: &IntersectionArray, theta: &Interval) -> Interval {
    let k = ia.k() as i64;
    let sizes = ia.distance_sizes();
    let mut u = vec![Interval::from_int(1)];
    u.push(theta.scale(&BigRational::new(1.into(), k.into())));
    for j in 1..4 {
        let shifted = theta - &Interval::from_int(ia.a_at(j) as i64);
        let numer = &(&shifted * &u[j]) - &u[j - 1].scale(&BigRational::from_integer(ia.c_at(j).into()));
        u.push(numer.scale(&BigRational::new(1.into(), ia.b_at(j).into())));
    }
    let norm = u
        .iter()
        .zip(sizes)
        .fold(Interval::zero(), |acc, (uj, kj)| {
            acc + uj.square().scale(&BigRational::from_integer(kj.into()))
        });
    let n = BigRational::from_integer(ia.vertex_count().into());
    // norm >= k_0 u_0^2 = 1
    Interval::new(&n / norm.hi(), &n / norm.lo())
}

enum Integrality {
    Integer(u64),
    NotInteger(f64),
    Unsettled,
}

fn integrality(m: &Interval) -> Integrality {
    let tol = ratio_from_f64(MULTIPLICITY_TOLERANCE);
    let nearest = m.midpoint().round();
    if m.within(&nearest, &tol) {
        return match nearest.to_integer().to_u64() {
            Some(v) if v >= 1 => Integrality::Integer(v),
            _ => Integrality::NotInteger(m.to_f64()),
        };
    }
    let disjoint = m.hi() <= &(&nearest - &tol) || m.lo() >= &(&nearest + &tol);
    let narrow = m.width() < tol;
    if disjoint && narrow {
        Integrality::NotInteger(m.to_f64())
    } else {
        Integrality::Unsettled
    }
}

pub fn multiplicities(
    ia: &IntersectionArray,
    eigs: &[RealRoot; 5],
) -> Result<[u64; 5], SpectrumError> {
    multiplicities_with(ia, eigs, &Precision::default())
}

pub fn multiplicities_with(
    ia: &IntersectionArray,
    eigs: &[RealRoot; 5],
    precision: &Precision,
) -> Result<[u64; 5], SpectrumError> {
    let mut out = [0u64; 5];
    for (index, eig) in eigs.iter().enumerate() {
        let mut verdict = integrality(&multiplicity_interval(ia, &eig.interval()));
        if let Integrality::Unsettled = verdict {
            let refined = eig.refined(&precision.refined());
            verdict = integrality(&multiplicity_interval(ia, &refined.interval()));
        }
        out[index] = match verdict {
            Integrality::Integer(v) => v,
            Integrality::NotInteger(approx) => {
                return Err(SpectrumError::NonIntegralMultiplicity { index, approx })
            }
            Integrality::Unsettled => return Err(SpectrumError::Undecided { index }),
        };
    }
    Ok(out)
}

/// `pi_i = prod_{j != i} |lambda_i - lambda_j|`.
pub fn pi_products(eigs: &[RealRoot; 5]) -> [Interval; 5] {
    let intervals: Vec<Interval> = eigs.iter().map(RealRoot::interval).collect();
    pi_products_of(&intervals)
}

pub(crate) fn pi_products_of(intervals: &[Interval]) -> [Interval; 5] {
    std::array::from_fn(|i| {
        (0..5)
            .filter(|&j| j != i)
            .fold(Interval::from_int(1), |acc, j| {
                acc * (&intervals[i] - &intervals[j]).abs()
            })
    })
}

/// Distinct eigenvalues with their multiplicities.
#[derive(Debug, Clone, PartialEq)]
pub struct Spectrum {
    eigenvalues: [RealRoot; 5],
    multiplicities: [u64; 5],
}

impl Spectrum {
    /// Checks `lambda_0` is an exact integer, the eigenvalues strictly decrease
    /// and `m_0 = 1 <= m_i`.
    pub fn new(eigenvalues: [RealRoot; 5], multiplicities: [u64; 5]) -> Result<Self, SpectrumError> {
        if eigenvalues[0].as_exact().is_none() {
            return Err(SpectrumError::InvalidMultiplicities(
                "largest eigenvalue must be the integer valency".into(),
            ));
        }
        if eigenvalues
            .windows(2)
            .any(|w| w[0].interval().lo() <= w[1].interval().hi())
        {
            return Err(SpectrumError::NotDecreasing);
        }
        if multiplicities[0] != 1 || multiplicities.contains(&0) {
            return Err(SpectrumError::InvalidMultiplicities(format!(
                "{multiplicities:?}"
            )));
        }
        Ok(Self {
            eigenvalues,
            multiplicities,
        })
    }

    pub fn from_array(ia: &IntersectionArray) -> Result<Self, SpectrumError> {
        Self::from_array_with(ia, &Precision::default())
    }

    pub fn from_array_with(
        ia: &IntersectionArray,
        precision: &Precision,
    ) -> Result<Self, SpectrumError> {
        let eigs = eigenvalues_with(ia, precision)?;
        let mults = multiplicities_with(ia, &eigs, precision)?;
        Self::new(eigs, mults)
    }

    pub fn eigenvalues(&self) -> &[RealRoot; 5] {
        &self.eigenvalues
    }

    pub fn multiplicities(&self) -> [u64; 5] {
        self.multiplicities
    }

    pub fn vertex_count(&self) -> u64 {
        self.multiplicities.iter().sum()
    }

    pub fn valency(&self) -> i64 {
        self.eigenvalues[0].as_exact().unwrap()
    }

    pub fn intervals(&self) -> [Interval; 5] {
        std::array::from_fn(|i| self.eigenvalues[i].interval())
    }

    pub fn pi_products(&self) -> [Interval; 5] {
        pi_products(&self.eigenvalues)
    }

    /// A copy with each irrational eigenvalue refined to width `epsilon`.
    pub fn refined(&self, epsilon: &BigRational) -> Spectrum {
        Spectrum {
            eigenvalues: std::array::from_fn(|i| self.eigenvalues[i].refined(epsilon)),
            multiplicities: self.multiplicities,
        }
    }

    /// One line per eigenvalue: `lambda_i <value> multiplicity m_i`.
    pub fn report_lines(&self) -> String {
        let mut out = String::new();
        for (i, (e, m)) in self.eigenvalues.iter().zip(self.multiplicities).enumerate() {
            let _ = writeln!(out, "lambda_{i} {e} multiplicity {m}");
        }
        out
    }
}

fn horner(coeffs: &[Interval], x: &Interval) -> Interval {
    coeffs
        .iter()
        .rev()
        .fold(Interval::zero(), |acc, c| &(&acc * x) + c)
}

/// `<p, q> = (1/n) sum_i m_i p(lambda_i) q(lambda_i)`, coefficients lowest
/// degree first, both of degree at most 4.
pub fn spectral_inner_product(
    p: &[Interval],
    q: &[Interval],
    spectrum: &Spectrum,
) -> Result<Interval, SpectrumError> {
    for poly in [p, q] {
        if poly.len() > 5 {
            return Err(SpectrumError::DegreeTooHigh(poly.len() - 1));
        }
    }
    Ok(inner_product_at(p, q, spectrum, &spectrum.intervals()))
}

pub(crate) fn inner_product_at(
    p: &[Interval],
    q: &[Interval],
    spectrum: &Spectrum,
    eigs: &[Interval; 5],
) -> Interval {
    let sum = eigs
        .iter()
        .zip(spectrum.multiplicities)
        .fold(Interval::zero(), |acc, (x, m)| {
            let term = &horner(p, x) * &horner(q, x);
            acc + term.scale(&BigRational::from_integer(m.into()))
        });
    sum.scale(&BigRational::new(1.into(), spectrum.vertex_count().into()))
}

/// Coefficients of `prod (x - r)` over the given roots.
pub fn monic_from_roots(roots: &[Interval]) -> Vec<Interval> {
    let mut coeffs = vec![Interval::from_int(1)];
    for r in roots {
        let mut next = vec![Interval::zero(); coeffs.len() + 1];
        for (i, c) in coeffs.iter().enumerate() {
            next[i + 1] = &next[i + 1] + c;
            next[i] = &next[i] - &(c * r);
        }
        coeffs = next;
    }
    coeffs
}

/// `x^j` as a coefficient vector.
pub fn monomial(j: usize) -> Vec<Interval> {
    let mut v = vec![Interval::zero(); j + 1];
    v[j] = Interval::from_int(1);
    v
}

/// Residuals of `<1,1> = 1`, `<x,1> = 0`, `<x^2,1> = k`, `<x^3,1> = k a_1`.
pub fn moment_residuals(spectrum: &Spectrum, k: u64, a1: u64) -> [Interval; 4] {
    let targets = [1, 0, k as i64, (k * a1) as i64];
    let one = monomial(0);
    std::array::from_fn(|j| {
        let value = spectral_inner_product(&monomial(j), &one, spectrum).expect("degree <= 3");
        &value - &Interval::from_int(targets[j])
    })
}

/// Full spectrum report: eigenvalue lines, pi-products and moment residuals.
pub fn spectrum_report(ia: &IntersectionArray, spectrum: &Spectrum) -> String {
    let mut out = spectrum.report_lines();
    for (i, pi) in spectrum.pi_products().iter().enumerate() {
        let _ = writeln!(out, "pi_{i} {}", render_interval(pi));
    }
    for (j, r) in moment_residuals(spectrum, ia.k(), ia.a1()).iter().enumerate() {
        let _ = writeln!(out, "moment_{j}_residual {}", render_interval(r));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn arr(s: &str) -> IntersectionArray {
        s.parse().unwrap()
    }

    fn approx(eigs: &[RealRoot; 5]) -> Vec<f64> {
        eigs.iter().map(RealRoot::to_f64).collect()
    }

    #[test]
    fn quotient_matrices() {
        let q4 = quotient_matrix(&arr("4 3 2 1 ; 1 2 3 4"));
        for i in 0..5 {
            assert_eq!(q4[i][i], 0);
        }
        assert_eq!([q4[0][1], q4[1][2], q4[2][3], q4[3][4]], [4, 3, 2, 1]);
        assert_eq!([q4[1][0], q4[2][1], q4[3][2], q4[4][3]], [1, 2, 3, 4]);

        let c8 = quotient_matrix(&arr("2 1 1 1 ; 1 1 1 2"));
        assert_eq!([c8[0][1], c8[1][2], c8[2][3], c8[3][4]], [2, 1, 1, 1]);
        assert_eq!([c8[1][0], c8[2][1], c8[3][2], c8[4][3]], [1, 1, 1, 2]);
        assert!((0..5).all(|i| c8[i][i] == 0));

        let net = quotient_matrix(&arr("8 7 4 1 ; 1 4 7 8"));
        assert!((0..5).all(|i| net[i][i] == 0));
    }

    #[test]
    fn eigenvalues_of_q4_are_exact() {
        let eigs = eigenvalues(&arr("4 3 2 1 ; 1 2 3 4")).unwrap();
        let exact: Vec<_> = eigs.iter().map(|e| e.as_exact()).collect();
        assert_eq!(exact, [Some(4), Some(2), Some(0), Some(-2), Some(-4)]);
    }

    #[test]
    fn eigenvalues_of_c8_include_surds() {
        let eigs = eigenvalues(&arr("2 1 1 1 ; 1 1 1 2")).unwrap();
        assert_eq!(eigs[0], RealRoot::Exact(2));
        assert_eq!(eigs[2], RealRoot::Exact(0));
        assert_eq!(eigs[4], RealRoot::Exact(-2));
        let s = 2f64.sqrt();
        let v = approx(&eigs);
        assert!((v[1] - s).abs() < 1e-12 && (v[3] + s).abs() < 1e-12);
        let two = BigRational::from_integer(2.into());
        for e in [&eigs[1], &eigs[3]] {
            let iv = e.interval();
            assert!(iv.width() <= ratio_from_f64(1e-12));
            assert!(iv.square().contains(&two));
        }
    }

    #[test]
    fn spectrum_of_net_array() {
        let ia = arr("8 7 4 1 ; 1 4 7 8");
        let s = Spectrum::from_array(&ia).unwrap();
        assert_eq!(s.multiplicities(), [1, 8, 14, 8, 1]);
        let v: Vec<f64> = s.eigenvalues().iter().map(RealRoot::to_f64).collect();
        let r = 8f64.sqrt();
        for (x, y) in v.iter().zip([8.0, r, 0.0, -r, -8.0]) {
            assert!((x - y).abs() < 1e-12);
        }
    }

    #[test]
    fn multiplicity_examples() {
        let q4 = arr("4 3 2 1 ; 1 2 3 4");
        assert_eq!(multiplicities(&q4, &eigenvalues(&q4).unwrap()).unwrap(), [1, 4, 6, 4, 1]);
        let c8 = arr("2 1 1 1 ; 1 1 1 2");
        assert_eq!(multiplicities(&c8, &eigenvalues(&c8).unwrap()).unwrap(), [1, 2, 2, 2, 1]);
        let o5 = arr("5 4 4 3 ; 1 1 2 2");
        assert_eq!(
            multiplicities(&o5, &eigenvalues(&o5).unwrap()).unwrap(),
            [1, 27, 42, 48, 8]
        );
    }

    #[test]
    fn non_integral_multiplicities_are_rejected() {
        // k_i integral (1, 3, 6, 6, 2) but the spectrum is not feasible
        let ia = arr("3 2 2 1 ; 1 1 2 3");
        assert!(Spectrum::from_array(&ia).is_ok());
        let bad = arr("3 2 1 1 ; 1 1 1 3");
        assert!(matches!(
            Spectrum::from_array(&bad),
            Err(SpectrumError::NonIntegralMultiplicity { .. })
        ));
    }

    #[test]
    fn pi_product_examples() {
        let q4 = eigenvalues(&arr("4 3 2 1 ; 1 2 3 4")).unwrap();
        let pi = pi_products(&q4);
        let expect = [384, 96, 64, 96, 384].map(Interval::from_int);
        assert_eq!(pi, expect);

        let c8 = eigenvalues(&arr("2 1 1 1 ; 1 1 1 2")).unwrap();
        let pi = pi_products(&c8);
        assert!(pi[0].contains(&BigRational::from_integer(16.into())));
        assert!(pi[0].width() < ratio_from_f64(1e-9));
        // symmetric spectrum
        assert!((pi[0].to_f64() - pi[4].to_f64()).abs() < 1e-9);
        assert!((pi[1].to_f64() - pi[3].to_f64()).abs() < 1e-9);
    }

    #[test]
    fn inner_product_examples() {
        let q4 = Spectrum::from_array(&arr("4 3 2 1 ; 1 2 3 4")).unwrap();
        let one = monomial(0);
        assert_eq!(spectral_inner_product(&one, &one, &q4).unwrap(), Interval::from_int(1));
        assert_eq!(spectral_inner_product(&monomial(1), &one, &q4).unwrap(), Interval::zero());
        assert_eq!(spectral_inner_product(&monomial(3), &one, &q4).unwrap(), Interval::zero());
        assert_eq!(spectral_inner_product(&monomial(2), &one, &q4).unwrap(), Interval::from_int(4));
        assert!(matches!(
            spectral_inner_product(&monomial(5), &one, &q4),
            Err(SpectrumError::DegreeTooHigh(5))
        ));
    }

    #[test]
    fn monic_expansion() {
        let roots = [2, -3].map(Interval::from_int);
        assert_eq!(
            monic_from_roots(&roots),
            vec![Interval::from_int(-6), Interval::from_int(1), Interval::from_int(1)]
        );
    }

    #[test]
    fn report_lines_format() {
        let q4 = Spectrum::from_array(&arr("4 3 2 1 ; 1 2 3 4")).unwrap();
        assert_eq!(
            q4.report_lines(),
            "lambda_0 4 multiplicity 1\nlambda_1 2 multiplicity 4\nlambda_2 0 multiplicity 6\n\
             lambda_3 -2 multiplicity 4\nlambda_4 -4 multiplicity 1\n"
        );
    }

    #[test]
    fn precision_validation() {
        assert!(Precision::new(0.0).is_err());
        assert!(Precision::new(f64::NAN).is_err());
        assert!(Precision::new(1e-6).is_ok());
    }
}
