//! Closed intervals with exact rational endpoints, and the tri-state
//! equality decision built on them.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

/// Widest interval around an equality target that still counts as "equal".
pub const EQUALITY_WIDTH: f64 = 1e-9;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Verdict {
    Yes,
    No,
    Undecided,
}

impl Verdict {
    pub fn is_yes(self) -> bool {
        self == Verdict::Yes
    }

    pub fn from_bool(b: bool) -> Self {
        if b {
            Verdict::Yes
        } else {
            Verdict::No
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            Verdict::Yes => "yes",
            Verdict::No => "no",
            Verdict::Undecided => "undecided",
        }
    }

    pub fn and(self, other: Verdict) -> Verdict {
        match (self, other) {
            (Verdict::No, _) | (_, Verdict::No) => Verdict::No,
            (Verdict::Yes, Verdict::Yes) => Verdict::Yes,
            _ => Verdict::Undecided,
        }
    }

    pub fn or(self, other: Verdict) -> Verdict {
        match (self, other) {
            (Verdict::Yes, _) | (_, Verdict::Yes) => Verdict::Yes,
            (Verdict::No, Verdict::No) => Verdict::No,
            _ => Verdict::Undecided,
        }
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// `[lo, hi]` with `lo <= hi`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Interval {
    lo: BigRational,
    hi: BigRational,
}

impl Interval {
    pub fn new(lo: BigRational, hi: BigRational) -> Self {
        assert!(lo <= hi, "interval endpoints out of order");
        Self { lo, hi }
    }

    pub fn point(x: BigRational) -> Self {
        Self {
            lo: x.clone(),
            hi: x,
        }
    }

    pub fn from_int(x: i64) -> Self {
        Self::point(BigRational::from_integer(BigInt::from(x)))
    }

    pub fn zero() -> Self {
        Self::from_int(0)
    }

    pub fn lo(&self) -> &BigRational {
        &self.lo
    }

    pub fn hi(&self) -> &BigRational {
        &self.hi
    }

    pub fn width(&self) -> BigRational {
        &self.hi - &self.lo
    }

    pub fn is_point(&self) -> bool {
        self.lo == self.hi
    }

    pub fn midpoint(&self) -> BigRational {
        (&self.lo + &self.hi) / BigRational::from_integer(BigInt::from(2))
    }

    pub fn to_f64(&self) -> f64 {
        self.midpoint().to_f64().unwrap_or(f64::NAN)
    }

    pub fn contains(&self, x: &BigRational) -> bool {
        &self.lo <= x && x <= &self.hi
    }

    pub fn contains_zero(&self) -> bool {
        !self.lo.is_positive() && !self.hi.is_negative()
    }

    pub fn is_positive(&self) -> bool {
        self.lo.is_positive()
    }

    pub fn abs(&self) -> Interval {
        if !self.lo.is_negative() {
            self.clone()
        } else if !self.hi.is_positive() {
            -self
        } else {
            let hi = (-&self.lo).max(self.hi.clone());
            Interval::new(BigRational::zero(), hi)
        }
    }

    /// `None` when the divisor straddles zero.
    pub fn checked_div(&self, other: &Interval) -> Option<Interval> {
        if other.contains_zero() {
            return None;
        }
        let recip = Interval::new(other.hi.recip(), other.lo.recip());
        Some(self * &recip)
    }

    pub fn scale(&self, factor: &BigRational) -> Interval {
        let a = &self.lo * factor;
        let b = &self.hi * factor;
        if a <= b {
            Interval::new(a, b)
        } else {
            Interval::new(b, a)
        }
    }

    pub fn square(&self) -> Interval {
        let a = self.abs();
        Interval::new(&a.lo * &a.lo, &a.hi * &a.hi)
    }

    pub fn pow(&self, e: u32) -> Interval {
        (0..e).fold(Interval::from_int(1), |acc, _| &acc * self)
    }

    /// Whether `self` lies entirely inside the open window `(x - tol, x + tol)`.
    pub fn within(&self, x: &BigRational, tol: &BigRational) -> bool {
        self.lo > (x - tol) && self.hi < (x + tol)
    }
}

/// Decides `x = target`: `No` if the interval excludes the target, `Yes` if it
/// contains it and is narrower than [`EQUALITY_WIDTH`], `Undecided` otherwise.
pub fn decide_equal(x: &Interval, target: &BigRational) -> Verdict {
    if !x.contains(target) {
        Verdict::No
    } else if x.width() < equality_width() {
        Verdict::Yes
    } else {
        Verdict::Undecided
    }
}

pub fn decide_zero(x: &Interval) -> Verdict {
    decide_equal(x, &BigRational::zero())
}

pub(crate) fn equality_width() -> BigRational {
    BigRational::new(BigInt::one(), BigInt::from(1_000_000_000u64))
}

pub(crate) fn ratio_from_f64(x: f64) -> BigRational {
    BigRational::from_float(x).expect("finite")
}

impl Add for &Interval {
    type Output = Interval;
    fn add(self, rhs: &Interval) -> Interval {
        Interval::new(&self.lo + &rhs.lo, &self.hi + &rhs.hi)
    }
}

impl Sub for &Interval {
    type Output = Interval;
    fn sub(self, rhs: &Interval) -> Interval {
        Interval::new(&self.lo - &rhs.hi, &self.hi - &rhs.lo)
    }
}

impl Mul for &Interval {
    type Output = Interval;
    fn mul(self, rhs: &Interval) -> Interval {
        if self.is_point() {
            return rhs.scale(&self.lo);
        }
        if rhs.is_point() {
            return self.scale(&rhs.lo);
        }
        let products = [
            &self.lo * &rhs.lo,
            &self.lo * &rhs.hi,
            &self.hi * &rhs.lo,
            &self.hi * &rhs.hi,
        ];
        let lo = products.iter().min().unwrap().clone();
        let hi = products.iter().max().unwrap().clone();
        Interval::new(lo, hi)
    }
}

impl Neg for &Interval {
    type Output = Interval;
    fn neg(self) -> Interval {
        Interval::new(-&self.hi, -&self.lo)
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for Interval {
            type Output = Interval;
            fn $m(self, rhs: Interval) -> Interval {
                (&self).$m(&rhs)
            }
        }
        impl $tr<&Interval> for Interval {
            type Output = Interval;
            fn $m(self, rhs: &Interval) -> Interval {
                (&self).$m(rhs)
            }
        }
    };
}

forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for Interval {
    type Output = Interval;
    fn neg(self) -> Interval {
        -&self
    }
}

impl From<i64> for Interval {
    fn from(x: i64) -> Self {
        Interval::from_int(x)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn iv(lo: i64, hi: i64) -> Interval {
        Interval::new(
            BigRational::from_integer(lo.into()),
            BigRational::from_integer(hi.into()),
        )
    }

    #[test]
    fn arithmetic() {
        assert_eq!(&iv(1, 2) * &iv(-3, 4), iv(-6, 8));
        assert_eq!(&iv(1, 2) - &iv(-3, 4), iv(-3, 5));
        assert_eq!(iv(-3, 2).abs(), iv(0, 3));
        assert_eq!(iv(-3, 2).square(), iv(0, 9));
        assert!(iv(-1, 1).checked_div(&iv(-1, 1)).is_none());
        assert_eq!(iv(2, 4).checked_div(&iv(2, 2)).unwrap(), iv(1, 2));
    }

    #[test]
    fn equality_decisions() {
        let zero = BigRational::zero();
        assert_eq!(decide_zero(&Interval::zero()), Verdict::Yes);
        assert_eq!(decide_zero(&iv(1, 2)), Verdict::No);
        assert_eq!(decide_zero(&iv(-1, 1)), Verdict::Undecided);
        let tiny = BigRational::new(1.into(), BigInt::from(10u64).pow(10));
        assert_eq!(decide_equal(&Interval::new(-&tiny, tiny.clone()), &zero), Verdict::Yes);
    }

    #[test]
    fn verdict_logic() {
        use Verdict::*;
        assert_eq!(Yes.and(Undecided), Undecided);
        assert_eq!(No.and(Undecided), No);
        assert_eq!(Yes.or(Undecided), Yes);
        assert_eq!(No.or(Undecided), Undecided);
    }

    proptest! {
        #[test]
        fn operations_enclose_pointwise_results(
            a in -50i64..50, wa in 0i64..20, b in -50i64..50, wb in 0i64..20,
            ta in 0i64..=10, tb in 0i64..=10,
        ) {
            let x = iv(a, a + wa);
            let y = iv(b, b + wb);
            // sample points inside each interval
            let px = BigRational::new((10 * a + ta * wa).into(), 10.into());
            let py = BigRational::new((10 * b + tb * wb).into(), 10.into());
            prop_assert!((&x + &y).contains(&(&px + &py)));
            prop_assert!((&x - &y).contains(&(&px - &py)));
            prop_assert!((&x * &y).contains(&(&px * &py)));
            prop_assert!(x.abs().contains(&px.abs()));
            if let Some(q) = x.checked_div(&y) {
                prop_assert!(q.contains(&(&px / &py)));
            }
        }
    }
}
