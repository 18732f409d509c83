use std::fmt;
use std::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::poly::IntPoly;
use super::ScalarError;

/// An element of Q(q), kept as a reduced fraction of integer polynomials.
///
/// Invariants: the denominator is nonzero, numerator and denominator are
/// coprime in Z[q] up to units, and the denominator has a positive leading
/// coefficient. Zero is `0/1`. Two values are equal iff their fields are.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RationalScalar {
    num: IntPoly,
    den: IntPoly,
}

impl RationalScalar {
    pub fn zero() -> Self {
        RationalScalar {
            num: IntPoly::zero(),
            den: IntPoly::one(),
        }
    }

    pub fn one() -> Self {
        Self::from_int(1)
    }

    pub fn from_int(c: i64) -> Self {
        RationalScalar {
            num: IntPoly::constant(c),
            den: IntPoly::one(),
        }
    }

    pub fn from_poly(p: IntPoly) -> Self {
        RationalScalar {
            num: p,
            den: IntPoly::one(),
        }
    }

    /// The indeterminate `q`.
    pub fn q() -> Self {
        Self::from_poly(IntPoly::q())
    }

    /// `q^k` for any integer `k`; negative powers are stored as `1/q^|k|`.
    pub fn q_pow(k: i64) -> Self {
        let m = IntPoly::monomial(1, k.unsigned_abs() as usize);
        if k >= 0 {
            Self::from_poly(m)
        } else {
            RationalScalar {
                num: IntPoly::one(),
                den: m,
            }
        }
    }

    /// `q - q^{-1}`.
    pub fn hecke() -> Self {
        Self::q() - Self::q_pow(-1)
    }

    /// Build the canonical representative of `num/den`.
    pub fn normalize(num: IntPoly, den: IntPoly) -> Result<Self, ScalarError> {
        if den.is_zero() {
            return Err(ScalarError::ZeroDenominator);
        }
        Ok(Self::reduce(num, den))
    }

    fn reduce(num: IntPoly, den: IntPoly) -> Self {
        if num.is_zero() {
            return Self::zero();
        }
        let g = num.gcd(&den);
        let (mut num, mut den) = if g.is_one() {
            (num, den)
        } else {
            (num.div_exact(&g).unwrap(), den.div_exact(&g).unwrap())
        };
        if den.leading().is_some_and(|l| l.is_negative()) {
            num = num.neg();
            den = den.neg();
        }
        RationalScalar { num, den }
    }

    pub fn numerator(&self) -> &IntPoly {
        &self.num
    }

    pub fn denominator(&self) -> &IntPoly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    pub fn is_polynomial(&self) -> bool {
        self.den.is_one()
    }

    /// If this is `±q^k` return `(sign, k)`.
    pub fn as_signed_monomial(&self) -> Option<(i8, i64)> {
        if !self.num.is_monomial() || !self.den.is_monomial() {
            return None;
        }
        let nc = self.num.leading().unwrap();
        let dc = self.den.leading().unwrap();
        if !nc.abs().is_one() || !dc.is_one() {
            return None;
        }
        let sign = if nc.is_negative() { -1 } else { 1 };
        Some((sign, self.num.degree().unwrap() as i64 - self.den.degree().unwrap() as i64))
    }

    /// Largest degree among numerator and denominator.
    pub fn size_degree(&self) -> usize {
        self.num.degree().unwrap_or(0).max(self.den.degree().unwrap_or(0))
    }

    pub fn inv(&self) -> Result<Self, ScalarError> {
        if self.is_zero() {
            return Err(ScalarError::InverseOfZero);
        }
        let (mut num, mut den) = (self.den.clone(), self.num.clone());
        if den.leading().is_some_and(|l| l.is_negative()) {
            num = num.neg();
            den = den.neg();
        }
        Ok(RationalScalar { num, den })
    }

    pub fn checked_div(&self, other: &Self) -> Result<Self, ScalarError> {
        Ok(self * &other.inv()?)
    }

    pub fn pow(&self, e: i64) -> Self {
        let base = if e < 0 { self.inv().expect("negative power of zero") } else { self.clone() };
        let mut acc = Self::one();
        for _ in 0..e.unsigned_abs() {
            acc = &acc * &base;
        }
        acc
    }

    /// Multiply by an integer polynomial.
    pub fn mul_poly(&self, p: &IntPoly) -> Self {
        Self::reduce(self.num.mul(p), self.den.clone())
    }

    fn add_impl(&self, other: &Self, negate: bool) -> Self {
        if other.is_zero() {
            return self.clone();
        }
        if self.is_zero() {
            return if negate { -other.clone() } else { other.clone() };
        }
        let other_num = if negate { other.num.neg() } else { other.num.clone() };
        if self.den == other.den {
            let num = self.num.add(&other_num);
            if self.den.is_one() {
                return RationalScalar { num, den: IntPoly::one() };
            }
            return Self::reduce(num, self.den.clone());
        }
        // Henrici: with g = gcd(b, d), gcd(a d/g + c b/g, b d/g) = gcd(that, g).
        let g = self.den.gcd(&other.den);
        let b1 = self.den.div_exact(&g).unwrap();
        let d1 = other.den.div_exact(&g).unwrap();
        let num = self.num.mul(&d1).add(&other_num.mul(&b1));
        if num.is_zero() {
            return Self::zero();
        }
        let den = b1.mul(&other.den);
        if g.is_one() {
            let mut r = RationalScalar { num, den };
            if r.den.leading().is_some_and(|l| l.is_negative()) {
                r.num = r.num.neg();
                r.den = r.den.neg();
            }
            return r;
        }
        let h = num.gcd(&g);
        if h.is_one() {
            RationalScalar { num, den }
        } else {
            RationalScalar {
                num: num.div_exact(&h).unwrap(),
                den: den.div_exact(&h).unwrap(),
            }
        }
    }

    fn mul_impl(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        if self.den.is_one() && other.den.is_one() {
            return RationalScalar {
                num: self.num.mul(&other.num),
                den: IntPoly::one(),
            };
        }
        let g1 = self.num.gcd(&other.den);
        let g2 = other.num.gcd(&self.den);
        let a = if g1.is_one() { self.num.clone() } else { self.num.div_exact(&g1).unwrap() };
        let d = if g1.is_one() { other.den.clone() } else { other.den.div_exact(&g1).unwrap() };
        let c = if g2.is_one() { other.num.clone() } else { other.num.div_exact(&g2).unwrap() };
        let b = if g2.is_one() { self.den.clone() } else { self.den.div_exact(&g2).unwrap() };
        let mut num = a.mul(&c);
        let mut den = b.mul(&d);
        if den.leading().is_some_and(|l| l.is_negative()) {
            num = num.neg();
            den = den.neg();
        }
        RationalScalar { num, den }
    }

    /// Value at `q0` modulo the prime `p`. Fails when the denominator
    /// vanishes there, in which case the caller should pick another point.
    pub fn eval_mod_p(&self, q0: u64, p: u64) -> Result<u64, ScalarError> {
        let d = self.den.eval_mod(q0, p);
        if d == 0 {
            return Err(ScalarError::Pole { q0, p });
        }
        let n = self.num.eval_mod(q0, p);
        Ok(super::modp::mul(n, super::modp::inv(d, p), p))
    }

    pub fn scale_int(&self, c: i64) -> Self {
        if c == 0 {
            return Self::zero();
        }
        self * &Self::from_int(c)
    }
}

impl Default for RationalScalar {
    fn default() -> Self {
        Self::zero()
    }
}

impl From<i64> for RationalScalar {
    fn from(c: i64) -> Self {
        Self::from_int(c)
    }
}

impl From<BigInt> for RationalScalar {
    fn from(c: BigInt) -> Self {
        Self::from_poly(IntPoly::constant(c))
    }
}

impl fmt::Display for RationalScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})/({})", self.num, self.den)
    }
}

impl fmt::Debug for RationalScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl Neg for RationalScalar {
    type Output = RationalScalar;
    fn neg(self) -> Self {
        RationalScalar {
            num: self.num.neg(),
            den: self.den,
        }
    }
}

impl Neg for &RationalScalar {
    type Output = RationalScalar;
    fn neg(self) -> RationalScalar {
        RationalScalar {
            num: self.num.neg(),
            den: self.den.clone(),
        }
    }
}

macro_rules! binop {
    ($tr:ident, $m:ident, $body:expr) => {
        impl $tr<&RationalScalar> for &RationalScalar {
            type Output = RationalScalar;
            fn $m(self, rhs: &RationalScalar) -> RationalScalar {
                let f: fn(&RationalScalar, &RationalScalar) -> RationalScalar = $body;
                f(self, rhs)
            }
        }
        impl $tr<RationalScalar> for RationalScalar {
            type Output = RationalScalar;
            fn $m(self, rhs: RationalScalar) -> RationalScalar {
                (&self).$m(&rhs)
            }
        }
        impl $tr<&RationalScalar> for RationalScalar {
            type Output = RationalScalar;
            fn $m(self, rhs: &RationalScalar) -> RationalScalar {
                (&self).$m(rhs)
            }
        }
        impl $tr<RationalScalar> for &RationalScalar {
            type Output = RationalScalar;
            fn $m(self, rhs: RationalScalar) -> RationalScalar {
                self.$m(&rhs)
            }
        }
    };
}

binop!(Add, add, |a, b| a.add_impl(b, false));
binop!(Sub, sub, |a, b| a.add_impl(b, true));
binop!(Mul, mul, |a, b| a.mul_impl(b));
binop!(Div, div, |a, b| a.checked_div(b).expect("division by zero in Q(q)"));

impl AddAssign<&RationalScalar> for RationalScalar {
    fn add_assign(&mut self, rhs: &RationalScalar) {
        *self = self.add_impl(rhs, false);
    }
}

impl SubAssign<&RationalScalar> for RationalScalar {
    fn sub_assign(&mut self, rhs: &RationalScalar) {
        *self = self.add_impl(rhs, true);
    }
}

impl MulAssign<&RationalScalar> for RationalScalar {
    fn mul_assign(&mut self, rhs: &RationalScalar) {
        *self = self.mul_impl(rhs);
    }
}

impl Zero for RationalScalar {
    fn zero() -> Self {
        RationalScalar::zero()
    }
    fn is_zero(&self) -> bool {
        RationalScalar::is_zero(self)
    }
}

impl One for RationalScalar {
    fn one() -> Self {
        RationalScalar::one()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(cs: &[i64]) -> IntPoly {
        IntPoly::from_i64s(cs)
    }

    #[test]
    fn cancels_common_factor() {
        let s = RationalScalar::normalize(p(&[-1, 0, 1]), p(&[-1, 1])).unwrap();
        assert_eq!(s, RationalScalar::from_poly(p(&[1, 1])));
        assert_eq!(s.to_string(), "(q+1)/(1)");
    }

    #[test]
    fn hecke_coefficient_is_reduced() {
        let s = RationalScalar::normalize(p(&[-1, 0, 1]), p(&[0, 1])).unwrap();
        assert_eq!(s.to_string(), "(q^2-1)/(q)");
        assert_eq!(s, RationalScalar::hecke());
    }

    #[test]
    fn zero_is_canonical() {
        let s = RationalScalar::normalize(IntPoly::zero(), p(&[0, 0, 0, 1])).unwrap();
        assert_eq!(s.to_string(), "(0)/(1)");
        assert!(s.is_zero());
    }

    #[test]
    fn negative_denominator_is_flipped() {
        let s = RationalScalar::normalize(p(&[1]), p(&[0, -2])).unwrap();
        assert_eq!(s.to_string(), "(-1)/(2*q)");
    }

    #[test]
    fn domain_errors() {
        assert_eq!(
            RationalScalar::normalize(p(&[1]), IntPoly::zero()),
            Err(ScalarError::ZeroDenominator)
        );
        assert_eq!(RationalScalar::zero().inv(), Err(ScalarError::InverseOfZero));
    }

    #[test]
    fn eval_mod_p_examples() {
        let s = RationalScalar::from_poly(p(&[1, 1]));
        assert_eq!(s.eval_mod_p(2, 7), Ok(3));
        let t = RationalScalar::normalize(p(&[-1, 0, 1]), p(&[-1, 1])).unwrap();
        assert_eq!(t.eval_mod_p(3, 11), Ok(4));
        let u = RationalScalar::normalize(p(&[1]), p(&[-2, 1])).unwrap();
        assert_eq!(u.eval_mod_p(2, 5), Err(ScalarError::Pole { q0: 2, p: 5 }));
    }

    #[test]
    fn monomial_detection() {
        assert_eq!(RationalScalar::q_pow(-3).as_signed_monomial(), Some((1, -3)));
        assert_eq!((-RationalScalar::q()).as_signed_monomial(), Some((-1, 1)));
        assert_eq!(RationalScalar::hecke().as_signed_monomial(), None);
    }
}
