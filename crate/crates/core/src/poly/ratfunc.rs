//! Reduced quotients of rational polynomials.

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_traits::{One, Zero};

use super::rational::Rational;
use super::univariate::RationalPoly;
use crate::error::{Error, Result};

/// `num / den` with `gcd(num, den) = 1` and monic `den`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RationalFunction {
    num: RationalPoly,
    den: RationalPoly,
}

impl RationalFunction {
    pub fn new(num: RationalPoly, den: RationalPoly) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::ZeroDivisor);
        }
        if num.is_zero() {
            return Ok(Self::zero());
        }
        let g = num.gcd(&den)?;
        let num = num.exact_div(&g)?;
        let den = den.exact_div(&g)?;
        let lead = den.leading();
        let inv = Rational::one() / lead;
        Ok(Self { num: num.scale(&inv), den: den.scale(&inv) })
    }

    pub fn from_poly(p: RationalPoly) -> Self {
        Self { num: p, den: RationalPoly::one() }
    }

    pub fn constant(c: Rational) -> Self {
        Self::from_poly(RationalPoly::constant(c))
    }

    pub fn zero() -> Self {
        Self { num: RationalPoly::zero(), den: RationalPoly::one() }
    }

    /// The parameter itself.
    pub fn param() -> Self {
        Self::from_poly(RationalPoly::x())
    }

    pub fn num(&self) -> &RationalPoly {
        &self.num
    }

    pub fn den(&self) -> &RationalPoly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn recip(&self) -> Result<Self> {
        Self::new(self.den.clone(), self.num.clone())
    }

    pub fn square(&self) -> Self {
        self * self
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self { num: self.num.scale(c), den: self.den.clone() }
    }

    /// `None` where the denominator vanishes.
    pub fn eval(&self, x: &Rational) -> Option<Rational> {
        let d = self.den.eval(x);
        if d.is_zero() {
            None
        } else {
            Some(self.num.eval(x) / d)
        }
    }

    /// If both parts are even, the same function written in `X = t^2`.
    pub fn even_reduction(&self) -> Option<Self> {
        let n = self.num.even_reduction()?;
        let d = self.den.even_reduction()?;
        Self::new(n, d).ok()
    }

    /// `f(t^2)`.
    pub fn compose_square(&self) -> Self {
        Self::new(self.num.compose_square(), self.den.compose_square())
            .expect("denominator stays nonzero")
    }

    pub fn display_in(&self, var: &str) -> String {
        if self.den.is_constant() {
            return self.num.display_in(var);
        }
        format!("({}) / ({})", self.num.display_in(var), self.den.display_in(var))
    }
}

impl fmt::Display for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.display_in("t"))
    }
}

impl<'a> Add<&'a RationalFunction> for &'a RationalFunction {
    type Output = RationalFunction;
    fn add(self, rhs: &RationalFunction) -> RationalFunction {
        RationalFunction::new(
            &(&self.num * &rhs.den) + &(&rhs.num * &self.den),
            &self.den * &rhs.den,
        )
        .expect("nonzero denominators")
    }
}

impl<'a> Sub<&'a RationalFunction> for &'a RationalFunction {
    type Output = RationalFunction;
    fn sub(self, rhs: &RationalFunction) -> RationalFunction {
        self + &(-rhs)
    }
}

impl<'a> Mul<&'a RationalFunction> for &'a RationalFunction {
    type Output = RationalFunction;
    fn mul(self, rhs: &RationalFunction) -> RationalFunction {
        RationalFunction::new(&self.num * &rhs.num, &self.den * &rhs.den).expect("nonzero denominators")
    }
}

impl<'a> Div<&'a RationalFunction> for &'a RationalFunction {
    type Output = RationalFunction;
    fn div(self, rhs: &RationalFunction) -> RationalFunction {
        self * &rhs.recip().expect("division by the zero function")
    }
}

impl Neg for &RationalFunction {
    type Output = RationalFunction;
    fn neg(self) -> RationalFunction {
        RationalFunction { num: -&self.num, den: self.den.clone() }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::rational::int;

    fn p(c: &[i64]) -> RationalPoly {
        RationalPoly::from_ints(c)
    }

    #[test]
    fn reduces_common_factors() {
        let f = RationalFunction::new(p(&[-1, 0, 1]), p(&[-2, 2])).unwrap();
        assert_eq!(f.num(), &RationalPoly::new(vec![crate::poly::rational::rat(1, 2), crate::poly::rational::rat(1, 2)]));
        assert_eq!(f.den(), &RationalPoly::one());
    }

    #[test]
    fn cot_double_angle_identity() {
        // 2cot(2u) = t - 1/t with t = cot u.
        let t = RationalFunction::param();
        let two_cot2 = RationalFunction::new(p(&[-1, 0, 1]), p(&[0, 1])).unwrap();
        assert_eq!(&t - &t.recip().unwrap(), two_cot2);
        assert_eq!(two_cot2.eval(&int(1)), Some(int(0)));
        assert_eq!(two_cot2.eval(&int(0)), None);
    }

    #[test]
    fn even_reduction_roundtrip() {
        let f = RationalFunction::new(p(&[1, 0, 3]), p(&[0, 0, 1])).unwrap();
        let g = f.even_reduction().unwrap();
        assert_eq!(g.compose_square(), f);
        assert!(RationalFunction::param().even_reduction().is_none());
    }

    #[test]
    fn zero_denominator_rejected() {
        assert_eq!(RationalFunction::new(p(&[1]), RationalPoly::zero()), Err(Error::ZeroDivisor));
    }
}
