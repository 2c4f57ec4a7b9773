//! Exact numbers `a + b·√d` with rational `a`, `b` and square-free integer `d`.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::rational::{int, pow10, rational_string, Rational};
use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct QuadExt {
    a: Rational,
    b: Rational,
    d: i64,
}

fn is_square_free(d: i64) -> bool {
    let mut k = 2i64;
    while k * k <= d {
        if d % (k * k) == 0 {
            return false;
        }
        k += 1;
    }
    true
}

impl QuadExt {
    pub fn new(a: Rational, b: Rational, d: i64) -> Result<Self> {
        if d < 1 || !is_square_free(d) {
            return Err(Error::InvalidRadicand(d));
        }
        Ok(Self::normalized(a, b, d))
    }

    fn normalized(a: Rational, b: Rational, d: i64) -> Self {
        if d == 1 {
            Self { a: a + b, b: Rational::zero(), d }
        } else {
            Self { a, b, d }
        }
    }

    pub fn from_rational(a: Rational, d: i64) -> Self {
        Self { a, b: Rational::zero(), d }
    }

    /// `a + b·√n` for any positive integer `n`; square factors of `n` are pulled out.
    pub fn with_surd(a: Rational, b: Rational, n: i64) -> Result<Self> {
        if n < 1 {
            return Err(Error::InvalidRadicand(n));
        }
        let mut d = n;
        let mut s = 1i64;
        let mut k = 2i64;
        while k * k <= d {
            while d % (k * k) == 0 {
                d /= k * k;
                s *= k;
            }
            k += 1;
        }
        Self::new(a, b * int(s), d)
    }

    /// `√d` itself.
    pub fn sqrt(d: i64) -> Result<Self> {
        Self::with_surd(Rational::zero(), Rational::one(), d)
    }

    pub fn rational_part(&self) -> &Rational {
        &self.a
    }

    pub fn surd_part(&self) -> &Rational {
        &self.b
    }

    pub fn radicand(&self) -> i64 {
        self.d
    }

    pub fn is_rational(&self) -> bool {
        self.b.is_zero()
    }

    pub fn as_rational(&self) -> Option<&Rational> {
        self.is_rational().then_some(&self.a)
    }

    pub fn conj(&self) -> Self {
        Self { a: self.a.clone(), b: -&self.b, d: self.d }
    }

    /// `(a + b√d)(a − b√d) = a² − d b²`.
    pub fn norm(&self) -> Rational {
        &self.a * &self.a - &self.b * &self.b * int(self.d)
    }

    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }

    /// Exact sign: compares `a²` with `d b²` when the parts disagree in sign.
    pub fn signum(&self) -> i32 {
        let sa = sign_of(&self.a);
        let sb = sign_of(&self.b);
        if sb == 0 {
            return sa;
        }
        if sa == 0 || sa == sb {
            return sb;
        }
        // Opposite signs: the larger of |a| and |b|√d wins.
        match (&self.a * &self.a).cmp(&(&self.b * &self.b * int(self.d))) {
            Ordering::Greater => sa,
            Ordering::Less => sb,
            Ordering::Equal => 0,
        }
    }

    pub fn cmp_rational(&self, q: &Rational) -> Ordering {
        let diff = Self { a: &self.a - q, b: self.b.clone(), d: self.d };
        diff.signum().cmp(&0)
    }

    pub fn inverse(&self) -> Option<Self> {
        let n = self.norm();
        if n.is_zero() {
            return None;
        }
        Some(Self { a: &self.a / &n, b: -&self.b / &n, d: self.d })
    }

    fn common_radicand(&self, other: &Self) -> i64 {
        if self.b.is_zero() {
            other.d
        } else if other.b.is_zero() || self.d == other.d {
            self.d
        } else {
            panic!("mixing quadratic fields Q(√{}) and Q(√{})", self.d, other.d)
        }
    }

    /// Rational lower and upper bounds of width at most `10^-digits`.
    pub fn enclosure(&self, digits: u32) -> (Rational, Rational) {
        if self.b.is_zero() {
            return (self.a.clone(), self.a.clone());
        }
        let scale = pow10(digits + 1);
        // |b|√d = √(b² d); bound √(b² d)·scale via integer square roots.
        let radicand = &self.b * &self.b * int(self.d) * Rational::from_integer(&scale * &scale);
        let floor = radicand.floor().to_integer().sqrt();
        let lo = Rational::new(floor.clone(), scale.clone());
        let hi = Rational::new(floor + BigInt::one(), scale);
        if self.b.is_positive() {
            (&self.a + lo, &self.a + hi)
        } else {
            (&self.a - hi, &self.a - lo)
        }
    }

    pub fn to_f64(&self) -> f64 {
        let (lo, hi) = self.enclosure(20);
        super::rational::to_f64(&((lo + hi) / int(2)))
    }
}

fn sign_of(q: &Rational) -> i32 {
    if q.is_zero() {
        0
    } else if q.is_positive() {
        1
    } else {
        -1
    }
}

impl PartialOrd for QuadExt {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for QuadExt {
    fn cmp(&self, other: &Self) -> Ordering {
        (self - other).signum().cmp(&0)
    }
}

impl fmt::Display for QuadExt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.b.is_zero() {
            return f.write_str(&rational_string(&self.a));
        }
        let surd = if self.b.is_one() {
            format!("√{}", self.d)
        } else if (-&self.b).is_one() {
            format!("-√{}", self.d)
        } else {
            format!("({})√{}", rational_string(&self.b), self.d)
        };
        if self.a.is_zero() {
            f.write_str(&surd)
        } else {
            write!(f, "{} + {}", rational_string(&self.a), surd)
        }
    }
}

impl<'a> Add<&'a QuadExt> for &'a QuadExt {
    type Output = QuadExt;
    fn add(self, rhs: &QuadExt) -> QuadExt {
        let d = self.common_radicand(rhs);
        QuadExt::normalized(&self.a + &rhs.a, &self.b + &rhs.b, d)
    }
}

impl<'a> Sub<&'a QuadExt> for &'a QuadExt {
    type Output = QuadExt;
    fn sub(self, rhs: &QuadExt) -> QuadExt {
        let d = self.common_radicand(rhs);
        QuadExt::normalized(&self.a - &rhs.a, &self.b - &rhs.b, d)
    }
}

impl<'a> Mul<&'a QuadExt> for &'a QuadExt {
    type Output = QuadExt;
    fn mul(self, rhs: &QuadExt) -> QuadExt {
        let d = self.common_radicand(rhs);
        QuadExt::normalized(
            &self.a * &rhs.a + &self.b * &rhs.b * int(d),
            &self.a * &rhs.b + &self.b * &rhs.a,
            d,
        )
    }
}

impl<'a> Div<&'a QuadExt> for &'a QuadExt {
    type Output = QuadExt;
    fn div(self, rhs: &QuadExt) -> QuadExt {
        self * &rhs.inverse().expect("division by zero in quadratic field")
    }
}

impl Neg for &QuadExt {
    type Output = QuadExt;
    fn neg(self) -> QuadExt {
        QuadExt { a: -&self.a, b: -&self.b, d: self.d }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::rational::rat;

    #[test]
    fn inverse_sqrt3_is_sqrt3_over_3() {
        let s = QuadExt::sqrt(3).unwrap();
        let inv = s.inverse().unwrap();
        assert_eq!(inv, QuadExt::new(int(0), rat(1, 3), 3).unwrap());
        assert_eq!(&s * &inv, QuadExt::from_rational(int(1), 3));
    }

    #[test]
    fn sign_with_opposite_parts() {
        // 1 - √2 < 0, 2 - √3 > 0, 3 - √9 handled by with_surd as rational 0.
        assert_eq!(QuadExt::new(int(1), int(-1), 2).unwrap().signum(), -1);
        assert_eq!(QuadExt::new(int(2), int(-1), 3).unwrap().signum(), 1);
        assert!(QuadExt::with_surd(int(3), int(-1), 9).unwrap().is_zero());
    }

    #[test]
    fn surd_extraction() {
        let x = QuadExt::with_surd(int(0), int(1), 28).unwrap();
        assert_eq!(x.radicand(), 7);
        assert_eq!(x.surd_part(), &int(2));
        assert_eq!(QuadExt::new(int(0), int(1), 12), Err(Error::InvalidRadicand(12)));
    }

    #[test]
    fn comparison_with_rationals() {
        let r = QuadExt::new(int(0), rat(1, 3), 3).unwrap(); // 0.5773...
        assert_eq!(r.cmp_rational(&rat(57, 100)), Ordering::Greater);
        assert_eq!(r.cmp_rational(&rat(58, 100)), Ordering::Less);
        let (lo, hi) = r.enclosure(30);
        assert!(r.cmp_rational(&lo) != Ordering::Less && r.cmp_rational(&hi) != Ordering::Greater);
    }
}
