//! Spectral predicates for diameter-four distance-regular graphs.
//!
//! Every equality is decided on intervals (see [`decide_equal`]). When the
//! first evaluation is undecided, the eigenvalues are refined once by
//! [`REFINEMENT_BITS`] bisection steps and the predicate is evaluated again;
//! what is still undecided after that is reported as such.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};

use crate::array::IntersectionArray;
use crate::error::{ArrayError, CriteriaError};
use crate::interval::{decide_equal, decide_zero, ratio_from_f64, Interval, Verdict};
use crate::root::RealRoot;
use crate::spectrum::{inner_product_at, monic_from_roots, pi_products_of, Spectrum, REFINEMENT_BITS};

/// Tolerance for the fibre size `r` to count as an integer.
pub const FIBRE_SIZE_TOLERANCE: f64 = 1e-6;

trait Settled {
    fn undecided(&self) -> bool;
}

fn settle<T: Settled>(eigs: &[RealRoot; 5], eval: impl Fn(&[Interval; 5]) -> T) -> T {
    let first = eval(&std::array::from_fn(|i| eigs[i].interval()));
    if !first.undecided() {
        return first;
    }
    let tightened: [Interval; 5] = std::array::from_fn(|i| eigs[i].tightened(REFINEMENT_BITS).interval());
    eval(&tightened)
}

/// Outcome of the antipodal multiplicity pattern test.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum AntipodalLemma {
    Holds { r: u64 },
    /// First index at which the pattern breaks.
    Fails { index: usize },
    Undecided { index: usize },
}

impl AntipodalLemma {
    pub fn r(&self) -> Option<u64> {
        match self {
            AntipodalLemma::Holds { r } => Some(*r),
            _ => None,
        }
    }

    pub fn verdict(&self) -> Verdict {
        match self {
            AntipodalLemma::Holds { .. } => Verdict::Yes,
            AntipodalLemma::Fails { .. } => Verdict::No,
            AntipodalLemma::Undecided { .. } => Verdict::Undecided,
        }
    }
}

impl std::fmt::Display for AntipodalLemma {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            AntipodalLemma::Holds { r } => write!(f, "r={r}"),
            AntipodalLemma::Fails { index } => write!(f, "fails@{index}"),
            AntipodalLemma::Undecided { index } => write!(f, "undecided@{index}"),
        }
    }
}

impl Settled for AntipodalLemma {
    fn undecided(&self) -> bool {
        matches!(self, AntipodalLemma::Undecided { .. })
    }
}

fn times(m: u64, x: &Interval) -> Interval {
    x.scale(&BigRational::from_integer(m.into()))
}

enum NearInteger {
    Is(BigInt),
    Not,
    Unsure,
}

fn near_integer(x: &Interval, target: Option<&BigInt>) -> NearInteger {
    let tol = ratio_from_f64(FIBRE_SIZE_TOLERANCE);
    let nearest = match target {
        Some(t) => BigRational::from_integer(t.clone()),
        None => x.midpoint().round(),
    };
    if x.within(&nearest, &tol) {
        NearInteger::Is(nearest.to_integer())
    } else if x.hi() <= &(&nearest - &tol) || x.lo() >= &(&nearest + &tol) {
        NearInteger::Not
    } else {
        NearInteger::Unsure
    }
}

/// Tests `m_i = pi_0 / pi_i` for even `i` and `m_i = (r - 1) pi_0 / pi_i` for
/// odd `i`, with a single integer `r >= 2`.
pub fn lemma_antipodal(s: &Spectrum) -> AntipodalLemma {
    let m = s.multiplicities();
    settle(s.eigenvalues(), |eigs| {
        let pi = pi_products_of(eigs);
        for i in [2, 4] {
            match decide_zero(&(&times(m[i], &pi[i]) - &pi[0])) {
                Verdict::Yes => {}
                Verdict::No => return AntipodalLemma::Fails { index: i },
                Verdict::Undecided => return AntipodalLemma::Undecided { index: i },
            }
        }
        let ratio = |i: usize| {
            times(m[i], &pi[i])
                .checked_div(&pi[0])
                .map(|q| q + Interval::from_int(1))
        };
        let (Some(r1), Some(r3)) = (ratio(1), ratio(3)) else {
            return AntipodalLemma::Undecided { index: 0 };
        };
        let r = match near_integer(&r1, None) {
            NearInteger::Is(r) if r >= BigInt::from(2) => r,
            NearInteger::Is(_) | NearInteger::Not => return AntipodalLemma::Fails { index: 1 },
            NearInteger::Unsure => return AntipodalLemma::Undecided { index: 1 },
        };
        match near_integer(&r3, Some(&r)) {
            NearInteger::Is(_) => AntipodalLemma::Holds {
                r: r.try_into().expect("r is a small positive integer"),
            },
            NearInteger::Not => AntipodalLemma::Fails { index: 3 },
            NearInteger::Unsure => AntipodalLemma::Undecided { index: 3 },
        }
    })
}

/// `m_i pi_i` for odd and for even nonzero indices, and whether each pair agrees.
#[derive(Debug, Clone, PartialEq)]
pub struct LemmaBResult {
    /// `m_1 pi_1`.
    pub alpha: Interval,
    /// `m_3 pi_3`.
    pub alpha_other: Interval,
    /// `m_2 pi_2`.
    pub beta: Interval,
    /// `m_4 pi_4`.
    pub beta_other: Interval,
    /// `m_1 pi_1 = m_3 pi_3`.
    pub odd: Verdict,
    /// `m_2 pi_2 = m_4 pi_4`.
    pub even: Verdict,
    pub holds: Verdict,
}

impl Settled for LemmaBResult {
    fn undecided(&self) -> bool {
        self.holds == Verdict::Undecided
    }
}

pub fn lemma_sdrg(s: &Spectrum) -> LemmaBResult {
    let m = s.multiplicities();
    settle(s.eigenvalues(), |eigs| {
        let pi = pi_products_of(eigs);
        let p: Vec<Interval> = (0..5).map(|i| times(m[i], &pi[i])).collect();
        let odd = decide_zero(&(&p[1] - &p[3]));
        let even = decide_zero(&(&p[2] - &p[4]));
        LemmaBResult {
            alpha: p[1].clone(),
            alpha_other: p[3].clone(),
            beta: p[2].clone(),
            beta_other: p[4].clone(),
            odd,
            even,
            holds: odd.and(even),
        }
    })
}

/// `(1 + lambda_1)(1 + lambda_3) = (1 + lambda_2)(1 + lambda_4) = -b_1`.
#[derive(Debug, Clone, PartialEq)]
pub struct Condition1 {
    /// `(1 + lambda_1)(1 + lambda_3)`.
    pub odd_product: Interval,
    /// `(1 + lambda_2)(1 + lambda_4)`.
    pub even_product: Interval,
    pub target: i64,
    pub odd: Verdict,
    pub even: Verdict,
    pub verdict: Verdict,
}

impl Settled for Condition1 {
    fn undecided(&self) -> bool {
        self.verdict == Verdict::Undecided
    }
}

fn shifted_product(x: &Interval, y: &Interval) -> Interval {
    let one = Interval::from_int(1);
    &(x + &one) * &(y + &one)
}

pub fn condition1(eigs: &[RealRoot; 5], b1: u64) -> Condition1 {
    let target = -(b1 as i64);
    let t = BigRational::from_integer(target.into());
    settle(eigs, |e| {
        let odd_product = shifted_product(&e[1], &e[3]);
        let even_product = shifted_product(&e[2], &e[4]);
        let odd = decide_equal(&odd_product, &t);
        let even = decide_equal(&even_product, &t);
        Condition1 {
            odd_product,
            even_product,
            target,
            odd,
            even,
            verdict: odd.and(even),
        }
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Disjunct {
    Both,
    /// `lambda_1 lambda_3 = -k` only.
    Product,
    /// `lambda_1 + lambda_3 = a_1` only.
    Sum,
    Neither,
}

impl Disjunct {
    pub fn as_str(self) -> &'static str {
        match self {
            Disjunct::Both => "both",
            Disjunct::Product => "product",
            Disjunct::Sum => "sum",
            Disjunct::Neither => "none",
        }
    }
}

/// `lambda_1 lambda_3 = -k` or `lambda_1 + lambda_3 = a_1`.
#[derive(Debug, Clone, PartialEq)]
pub struct Condition2 {
    pub product: Interval,
    pub sum: Interval,
    pub product_holds: Verdict,
    pub sum_holds: Verdict,
    pub verdict: Verdict,
    pub disjunct: Disjunct,
}

impl Settled for Condition2 {
    fn undecided(&self) -> bool {
        self.product_holds == Verdict::Undecided || self.sum_holds == Verdict::Undecided
    }
}

pub fn condition2(eigs: &[RealRoot; 5], k: u64, a1: u64) -> Condition2 {
    let minus_k = BigRational::from_integer(BigInt::from(-(k as i64)));
    let a1 = BigRational::from_integer(BigInt::from(a1));
    settle(eigs, |e| {
        let product = &e[1] * &e[3];
        let sum = &e[1] + &e[3];
        let product_holds = decide_equal(&product, &minus_k);
        let sum_holds = decide_equal(&sum, &a1);
        let disjunct = match (product_holds, sum_holds) {
            (Verdict::Yes, Verdict::Yes) => Disjunct::Both,
            (Verdict::Yes, _) => Disjunct::Product,
            (_, Verdict::Yes) => Disjunct::Sum,
            _ => Disjunct::Neither,
        };
        Condition2 {
            product,
            sum,
            product_holds,
            sum_holds,
            verdict: product_holds.or(sum_holds),
            disjunct,
        }
    })
}

/// The identities linking `m_i pi_i` pairs, inner products and shifted
/// eigenvalue products, each decided independently.
#[derive(Debug, Clone, PartialEq)]
pub struct PairIdentities {
    /// `m_1 pi_1 = m_3 pi_3`.
    pub odd_moment: Verdict,
    /// `m_2 pi_2 = m_4 pi_4`.
    pub even_moment: Verdict,
    /// `<(x - l0)(x - l2)(x - l4), 1> = 0`.
    pub odd_inner: Verdict,
    /// `<(x - l0)(x - l1)(x - l3), 1> = 0`.
    pub even_inner: Verdict,
    /// `<(x - l1)(x - l2)(x - l3), 1> = 0`, equivalent to `m_0 pi_0 = m_4 pi_4`.
    pub antipodal_inner: Verdict,
    /// `m_0 pi_0 = m_4 pi_4`.
    pub antipodal_moment: Verdict,
    /// `(l1 + 1)(l3 + 1) = -b_1`.
    pub odd_product: Verdict,
    /// `(l2 + 1)(l4 + 1) = -b_1`.
    pub even_product: Verdict,
}

impl Settled for PairIdentities {
    fn undecided(&self) -> bool {
        [
            self.odd_moment,
            self.even_moment,
            self.odd_inner,
            self.even_inner,
            self.antipodal_inner,
            self.antipodal_moment,
            self.odd_product,
            self.even_product,
        ]
        .contains(&Verdict::Undecided)
    }
}

pub fn pair_identities(s: &Spectrum, b1: u64) -> PairIdentities {
    let m = s.multiplicities();
    let target = BigRational::from_integer(BigInt::from(-(b1 as i64)));
    settle(s.eigenvalues(), |e| {
        let pi = pi_products_of(e);
        let mp: Vec<Interval> = (0..5).map(|i| times(m[i], &pi[i])).collect();
        let one = [Interval::from_int(1)];
        let inner = |roots: [usize; 3]| {
            let p = monic_from_roots(&roots.map(|i| e[i].clone()));
            decide_zero(&inner_product_at(&p, &one, s, e))
        };
        PairIdentities {
            odd_moment: decide_zero(&(&mp[1] - &mp[3])),
            even_moment: decide_zero(&(&mp[2] - &mp[4])),
            odd_inner: inner([0, 2, 4]),
            even_inner: inner([0, 1, 3]),
            antipodal_inner: inner([1, 2, 3]),
            antipodal_moment: decide_zero(&(&mp[0] - &mp[4])),
            odd_product: decide_equal(&shifted_product(&e[1], &e[3]), &target),
            even_product: decide_equal(&shifted_product(&e[2], &e[4]), &target),
        }
    })
}

/// Whether `root` equals `sign * sqrt(k)`, decided exactly.
pub fn equals_signed_sqrt(root: &RealRoot, k: u64, negative: bool) -> bool {
    match root {
        RealRoot::Exact(v) => {
            let v = *v as i128;
            v * v == k as i128 && (v < 0) == negative && (v != 0 || k == 0)
        }
        RealRoot::Isolated(r) => {
            let s = num_integer::Roots::sqrt(&k);
            if s * s == k {
                // isolated roots are irrational
                return false;
            }
            // p(sqrt k) = A + B sqrt k with integers A, B
            let kk = BigInt::from(k);
            let (mut a, mut b) = (BigInt::zero(), BigInt::zero());
            for (i, c) in r.polynomial().coeffs().iter().enumerate() {
                let term = c * num_traits::pow(kk.clone(), i / 2);
                if i % 2 == 0 {
                    a += term;
                } else {
                    b += term;
                }
            }
            if !(a.is_zero() && b.is_zero()) {
                return false;
            }
            let k = BigRational::from_integer(kk);
            let (lo, hi) = if negative {
                (-r.upper(), -r.lower())
            } else {
                (r.lower(), r.upper())
            };
            // lo < sqrt k < hi
            (!lo.is_positive() || &lo * &lo < k) && hi.is_positive() && &hi * &hi > k
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CorollaryResult {
    /// `lambda_1 = sqrt(k)`.
    pub verdict: Verdict,
    /// `(1, n/2 - k, 2k - 2, n/2 - k, 1)` when the verdict is yes.
    pub predicted: Option<[u64; 5]>,
    /// Whether the computed spectrum is exactly `{k, sqrt k, 0, -sqrt k, -k}`
    /// with the predicted multiplicities.
    pub matches_computed: Option<bool>,
}

pub fn corollary_bipartite(
    ia: &IntersectionArray,
    s: &Spectrum,
) -> Result<CorollaryResult, CriteriaError> {
    if let Some(i) = (0..=4).find(|&i| ia.a_at(i) != 0) {
        return Err(CriteriaError::NotBipartiteArray(i));
    }
    let k = ia.k();
    let eigs = s.eigenvalues();
    let holds = equals_signed_sqrt(&eigs[1], k, false);
    if !holds {
        return Ok(CorollaryResult {
            verdict: Verdict::No,
            predicted: None,
            matches_computed: None,
        });
    }
    let n = ia.vertex_count();
    let half_minus_k = (n / 2).checked_sub(k).filter(|_| n.is_multiple_of(2));
    let predicted = half_minus_k.map(|h| [1, h, 2 * k - 2, h, 1]);
    let matches = predicted.is_some_and(|p| p == s.multiplicities())
        && eigs[0] == RealRoot::Exact(k as i64)
        && eigs[2] == RealRoot::Exact(0)
        && equals_signed_sqrt(&eigs[3], k, true)
        && eigs[4] == RealRoot::Exact(-(k as i64));
    Ok(CorollaryResult {
        verdict: Verdict::Yes,
        predicted,
        matches_computed: Some(matches),
    })
}

/// Intersection array `{k, k-1, k-mu, 1; 1, mu, k-1, k}` of the incidence
/// graph of a symmetric `(m, mu)`-net, `k = m mu`, on `2 m^2 mu` vertices.
pub fn net_array(m: u64, mu: u64) -> Result<IntersectionArray, ArrayError> {
    let k = m.checked_mul(mu).ok_or(ArrayError::NetParameters { m, mu })?;
    if m < 2 || mu == 0 || mu + 1 > k {
        return Err(ArrayError::NetParameters { m, mu });
    }
    let ia = IntersectionArray::new([k, k - 1, k - mu, 1], [1, mu, k - 1, k])?;
    debug_assert_eq!(ia.vertex_count(), 2 * m * m * mu);
    Ok(ia)
}
