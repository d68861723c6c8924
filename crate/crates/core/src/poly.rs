//! Integer polynomials, Sturm sequences and real-root isolation.

use std::cmp::Ordering;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Polynomial with integer coefficients, lowest degree first.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct IntPoly {
    coeffs: Vec<BigInt>,
}

impl IntPoly {
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.len() > 1 && coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        if coeffs.is_empty() {
            coeffs.push(BigInt::zero());
        }
        Self { coeffs }
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_zero()
    }

    /// Characteristic polynomial `det(xI - T)` of the tridiagonal matrix with
    /// the given diagonal and off-diagonal products `upper[i] * lower[i]`.
    pub fn tridiagonal_charpoly(diag: &[i64], off_products: &[i64]) -> Self {
        assert_eq!(off_products.len() + 1, diag.len());
        let x = IntPoly::from_i64(&[0, 1]);
        let mut prev = IntPoly::from_i64(&[1]);
        let mut cur = x.sub(&IntPoly::from_i64(&[diag[0]]));
        for i in 1..diag.len() {
            let shifted = cur.mul(&x.sub(&IntPoly::from_i64(&[diag[i]])));
            let next = shifted.sub(&prev.scale(&BigInt::from(off_products[i - 1])));
            prev = cur;
            cur = next;
        }
        cur
    }

    pub fn eval(&self, x: &BigInt) -> BigInt {
        self.coeffs
            .iter()
            .rev()
            .fold(BigInt::zero(), |acc, c| acc * x + c)
    }

    /// Sign of `p(num / 2^exp)`.
    pub fn sign_at_dyadic(&self, num: &BigInt, exp: u32) -> Ordering {
        let d = self.degree();
        let mut acc = BigInt::zero();
        let mut power = BigInt::one();
        for (i, c) in self.coeffs.iter().enumerate() {
            acc += (c * &power) << (exp as usize * (d - i));
            power *= num;
        }
        acc.cmp(&BigInt::zero())
    }

    /// Divides by `x - r`, returning quotient and remainder.
    pub fn div_linear(&self, r: &BigInt) -> (IntPoly, BigInt) {
        let d = self.degree();
        if d == 0 {
            return (IntPoly::from_i64(&[0]), self.coeffs[0].clone());
        }
        let mut quotient = vec![BigInt::zero(); d];
        let mut carry = BigInt::zero();
        for i in (0..=d).rev() {
            let value = &self.coeffs[i] + &carry * r;
            if i == 0 {
                return (IntPoly::new(quotient), value);
            }
            quotient[i - 1] = value.clone();
            carry = value;
        }
        unreachable!()
    }

    pub fn derivative(&self) -> IntPoly {
        if self.degree() == 0 {
            return IntPoly::from_i64(&[0]);
        }
        IntPoly::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * BigInt::from(i))
                .collect(),
        )
    }

    fn scale(&self, s: &BigInt) -> IntPoly {
        IntPoly::new(self.coeffs.iter().map(|c| c * s).collect())
    }

    fn sub(&self, other: &IntPoly) -> IntPoly {
        let n = self.coeffs.len().max(other.coeffs.len());
        IntPoly::new(
            (0..n)
                .map(|i| {
                    let a = self.coeffs.get(i).cloned().unwrap_or_default();
                    let b = other.coeffs.get(i).cloned().unwrap_or_default();
                    a - b
                })
                .collect(),
        )
    }

    fn mul(&self, other: &IntPoly) -> IntPoly {
        let mut out = vec![BigInt::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        IntPoly::new(out)
    }

    /// Integer `R` with every real root strictly inside `(-R, R)`
    /// (Cauchy's bound for a monic-up-to-sign leading coefficient).
    pub fn root_bound(&self) -> BigInt {
        let lead = self.coeffs.last().unwrap().abs();
        let max = self.coeffs[..self.degree()]
            .iter()
            .map(|c| c.abs())
            .max()
            .unwrap_or_default();
        max.div_ceil(&lead) + BigInt::from(2)
    }

    /// True when `gcd(p, p')` is constant, i.e. `p` has no repeated root.
    pub fn is_square_free(&self) -> bool {
        if self.degree() <= 1 {
            return true;
        }
        let mut a = RatPoly::from_int(self);
        let mut b = RatPoly::from_int(&self.derivative());
        while !b.is_zero() {
            let r = a.rem(&b);
            a = b;
            b = r;
        }
        a.degree() == 0
    }
}

#[derive(Debug, Clone)]
struct RatPoly {
    coeffs: Vec<BigRational>,
}

impl RatPoly {
    fn from_int(p: &IntPoly) -> Self {
        Self::trimmed(
            p.coeffs
                .iter()
                .map(|c| BigRational::from_integer(c.clone()))
                .collect(),
        )
    }

    fn trimmed(mut coeffs: Vec<BigRational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    fn degree(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    fn rem(&self, divisor: &RatPoly) -> RatPoly {
        let mut r = self.coeffs.clone();
        let dd = divisor.degree();
        let lead = divisor.coeffs.last().unwrap();
        while r.len() > dd && !r.is_empty() {
            let shift = r.len() - 1 - dd;
            let factor = r.last().unwrap() / lead;
            for (i, c) in divisor.coeffs.iter().enumerate() {
                r[i + shift] -= &factor * c;
            }
            r.pop();
            while r.last().is_some_and(Zero::is_zero) {
                r.pop();
            }
        }
        RatPoly::trimmed(r)
    }

    fn sign_at(&self, x: &BigRational) -> Ordering {
        let v = self
            .coeffs
            .iter()
            .rev()
            .fold(BigRational::zero(), |acc, c| acc * x + c);
        v.cmp(&BigRational::zero())
    }
}

/// Sturm sequence `p, p', -rem(p, p'), ...`.
pub struct SturmChain {
    chain: Vec<RatPoly>,
}

impl SturmChain {
    pub fn new(p: &IntPoly) -> Self {
        let mut chain = vec![RatPoly::from_int(p), RatPoly::from_int(&p.derivative())];
        loop {
            let n = chain.len();
            if chain[n - 1].is_zero() {
                chain.pop();
                break;
            }
            let r = chain[n - 2].rem(&chain[n - 1]);
            if r.is_zero() {
                break;
            }
            let neg = RatPoly::trimmed(r.coeffs.into_iter().map(|c| -c).collect());
            chain.push(neg);
        }
        Self { chain }
    }

    pub fn sign_changes(&self, x: &BigRational) -> usize {
        let signs: Vec<Ordering> = self
            .chain
            .iter()
            .map(|p| p.sign_at(x))
            .filter(|s| *s != Ordering::Equal)
            .collect();
        signs.windows(2).filter(|w| w[0] != w[1]).count()
    }

    /// Number of distinct real roots in `(a, b]`.
    pub fn count_roots(&self, a: &BigRational, b: &BigRational) -> usize {
        self.sign_changes(a) - self.sign_changes(b)
    }
}

/// Dyadic isolating intervals `(lo / 2^exp, hi / 2^exp)`, one per real root,
/// in increasing order.
///
/// `p` must be square-free with no rational roots, so that no dyadic point is a
/// root.
pub fn isolate_real_roots(p: &IntPoly) -> Vec<(BigInt, BigInt, u32)> {
    let sturm = SturmChain::new(p);
    let bound = p.root_bound();
    let mut out = Vec::new();
    let mut stack = vec![(-bound.clone(), bound, 0u32)];
    while let Some((lo, hi, exp)) = stack.pop() {
        let a = dyadic(&lo, exp);
        let b = dyadic(&hi, exp);
        match sturm.count_roots(&a, &b) {
            0 => {}
            1 => out.push((lo, hi, exp)),
            _ => {
                let mid = &lo + &hi;
                // push the upper half first so the lower half is popped first
                stack.push((mid.clone(), hi * 2, exp + 1));
                stack.push((lo * 2, mid, exp + 1));
            }
        }
    }
    out
}

pub(crate) fn dyadic(num: &BigInt, exp: u32) -> BigRational {
    BigRational::new(num.clone(), BigInt::one() << exp as usize)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn tridiagonal_charpoly_of_q4_quotient() {
        // diag 0, b_i c_{i+1} = 4, 6, 6, 4: roots 4, 2, 0, -2, -4
        let p = IntPoly::tridiagonal_charpoly(&[0; 5], &[4, 6, 6, 4]);
        assert_eq!(p, IntPoly::from_i64(&[0, 64, 0, -20, 0, 1]));
        for r in [-4, -2, 0, 2, 4] {
            assert!(p.eval(&BigInt::from(r)).is_zero());
        }
    }

    #[test]
    fn linear_division() {
        let p = IntPoly::from_i64(&[-6, 11, -6, 1]); // (x-1)(x-2)(x-3)
        let (q, r) = p.div_linear(&BigInt::from(2));
        assert!(r.is_zero());
        assert_eq!(q, IntPoly::from_i64(&[3, -4, 1]));
        let (_, r) = p.div_linear(&BigInt::from(0));
        assert_eq!(r, BigInt::from(-6));
    }

    #[test]
    fn square_freeness() {
        assert!(IntPoly::from_i64(&[-2, 0, 1]).is_square_free());
        assert!(!IntPoly::from_i64(&[1, -2, 1]).is_square_free());
    }

    #[test]
    fn sturm_isolation_of_surds() {
        let p = IntPoly::from_i64(&[-2, 0, 1]);
        let roots = isolate_real_roots(&p);
        assert_eq!(roots.len(), 2);
        let (lo, hi, e) = &roots[0];
        assert!(dyadic(lo, *e) < BigRational::from_float(-1.41).unwrap());
        assert!(dyadic(hi, *e) > BigRational::from_float(-1.42).unwrap());

        // x^4 - 10x^2 + 1, roots +-sqrt(2) +- sqrt(3)
        let q = IntPoly::from_i64(&[1, 0, -10, 0, 1]);
        assert_eq!(isolate_real_roots(&q).len(), 4);
        let sturm = SturmChain::new(&q);
        let ten = BigRational::from_integer(10.into());
        assert_eq!(sturm.count_roots(&-ten.clone(), &ten), 4);
    }

    #[test]
    fn dyadic_signs() {
        let p = IntPoly::from_i64(&[-2, 0, 1]);
        // 3/2 -> 1/4 > 0, 5/4 -> -7/16 < 0
        assert_eq!(p.sign_at_dyadic(&BigInt::from(3), 1), Ordering::Greater);
        assert_eq!(p.sign_at_dyadic(&BigInt::from(5), 2), Ordering::Less);
        assert_eq!(p.sign_at_dyadic(&BigInt::from(-5), 2), Ordering::Less);
    }
}
