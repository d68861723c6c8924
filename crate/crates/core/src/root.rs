use std::cmp::Ordering;
use std::fmt;
use std::sync::Arc;

use num_bigint::BigInt;
use num_rational::BigRational;

use crate::interval::Interval;
use crate::poly::{dyadic, IntPoly};

/// One real eigenvalue: an exact integer, or an irrational root of an integer
/// polynomial pinned down by a dyadic isolating interval.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum RealRoot {
    Exact(i64),
    Isolated(IsolatedRoot),
}

/// The unique root of `poly` in `(lo / 2^exp, hi / 2^exp)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct IsolatedRoot {
    poly: Arc<IntPoly>,
    lo: BigInt,
    hi: BigInt,
    exp: u32,
}

impl IsolatedRoot {
    /// `poly` must change sign across the interval and have exactly one root in it.
    pub fn new(poly: Arc<IntPoly>, lo: BigInt, hi: BigInt, exp: u32) -> Self {
        debug_assert_ne!(
            poly.sign_at_dyadic(&lo, exp),
            poly.sign_at_dyadic(&hi, exp)
        );
        Self { poly, lo, hi, exp }
    }

    pub fn polynomial(&self) -> &IntPoly {
        &self.poly
    }

    pub fn lower(&self) -> BigRational {
        dyadic(&self.lo, self.exp)
    }

    pub fn upper(&self) -> BigRational {
        dyadic(&self.hi, self.exp)
    }

    pub fn width(&self) -> BigRational {
        dyadic(&(&self.hi - &self.lo), self.exp)
    }

    fn bisect(&mut self) {
        let lo_sign = self.poly.sign_at_dyadic(&self.lo, self.exp);
        let mid = &self.lo + &self.hi;
        let exp = self.exp + 1;
        match self.poly.sign_at_dyadic(&mid, exp) {
            Ordering::Equal => unreachable!("dyadic midpoint cannot be a root of the isolating polynomial"),
            s if s == lo_sign => {
                self.lo = mid;
                self.hi = &self.hi * 2;
            }
            _ => {
                self.lo = &self.lo * 2;
                self.hi = mid;
            }
        }
        self.exp = exp;
    }

    /// Bisects until the width is at most `epsilon`.
    pub fn refine_to(&mut self, epsilon: &BigRational) {
        while &self.width() > epsilon {
            self.bisect();
        }
    }
}

impl RealRoot {
    pub fn interval(&self) -> Interval {
        match self {
            RealRoot::Exact(v) => Interval::from_int(*v),
            RealRoot::Isolated(r) => Interval::new(r.lower(), r.upper()),
        }
    }

    pub fn as_exact(&self) -> Option<i64> {
        match self {
            RealRoot::Exact(v) => Some(*v),
            RealRoot::Isolated(_) => None,
        }
    }

    pub fn to_f64(&self) -> f64 {
        self.interval().to_f64()
    }

    /// A copy whose interval is `2^bits` times narrower.
    pub fn tightened(&self, bits: u32) -> RealRoot {
        match self {
            RealRoot::Exact(_) => self.clone(),
            RealRoot::Isolated(r) => {
                let mut r = r.clone();
                for _ in 0..bits {
                    r.bisect();
                }
                RealRoot::Isolated(r)
            }
        }
    }

    /// A copy narrowed to width at most `epsilon`; exact roots are unchanged.
    pub fn refined(&self, epsilon: &BigRational) -> RealRoot {
        match self {
            RealRoot::Exact(_) => self.clone(),
            RealRoot::Isolated(r) => {
                let mut r = r.clone();
                r.refine_to(epsilon);
                RealRoot::Isolated(r)
            }
        }
    }
}

impl fmt::Display for RealRoot {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&crate::format::render_interval(&self.interval()))
    }
}
