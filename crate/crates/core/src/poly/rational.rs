//! Helpers around `BigRational`: construction, parsing and certified decimal output.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

pub type Rational = BigRational;

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

pub fn pow10(e: u32) -> BigInt {
    num_traits::pow(BigInt::from(10), e as usize)
}

pub fn to_f64(x: &Rational) -> f64 {
    x.to_f64().unwrap_or(f64::NAN)
}

/// Parses `"p"`, `"-p/q"` or a finite decimal such as `"0.25"`.
pub fn parse_rational(s: &str) -> Option<Rational> {
    let s = s.trim();
    if let Some((n, d)) = s.split_once('/') {
        let n: BigInt = n.trim().parse().ok()?;
        let d: BigInt = d.trim().parse().ok()?;
        if d.is_zero() {
            return None;
        }
        return Some(Rational::new(n, d));
    }
    if let Some((whole, frac)) = s.split_once('.') {
        let neg = whole.starts_with('-');
        let digits = format!("{}{}", whole.trim_start_matches('-'), frac);
        let n: BigInt = digits.parse().ok()?;
        let q = Rational::new(n, pow10(frac.len() as u32));
        return Some(if neg { -q } else { q });
    }
    s.parse::<BigInt>().ok().map(Rational::from_integer)
}

/// Canonical `p/q` text (or `p` for integers).
pub fn rational_string(x: &Rational) -> String {
    if x.is_integer() {
        x.numer().to_string()
    } else {
        format!("{}/{}", x.numer(), x.denom())
    }
}

/// How the last printed digit is obtained.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum DecimalMode {
    /// Round half away from zero.
    #[default]
    Round,
    /// Truncate toward zero.
    Truncate,
}

/// Largest `e` with `10^e <= a`, for `a > 0`.
pub fn decimal_exponent(a: &Rational) -> i64 {
    debug_assert!(a.is_positive());
    // log10(a) from bit lengths, then correct by at most a few steps.
    let bits = a.numer().bits() as i64 - a.denom().bits() as i64;
    let mut e = (bits as f64 * std::f64::consts::LOG10_2).floor() as i64;
    loop {
        let lower = pow10_rational(e);
        if &lower > a {
            e -= 1;
            continue;
        }
        let upper = pow10_rational(e + 1);
        if &upper <= a {
            e += 1;
            continue;
        }
        return e;
    }
}

fn pow10_rational(e: i64) -> Rational {
    if e >= 0 {
        Rational::from_integer(pow10(e as u32))
    } else {
        Rational::new(BigInt::one(), pow10((-e) as u32))
    }
}

/// Formats `x` with `digits` significant digits.
pub fn format_significant(x: &Rational, digits: u32, mode: DecimalMode) -> String {
    let digits = digits.max(1);
    if x.is_zero() {
        return "0".to_string();
    }
    let negative = x.is_negative();
    let a = x.abs();
    let mut e = decimal_exponent(&a);
    let shift = digits as i64 - 1 - e;
    let scaled = &a * pow10_rational(shift);
    let mut m = match mode {
        DecimalMode::Truncate => scaled.floor().to_integer(),
        DecimalMode::Round => {
            let (q, r) = scaled.numer().div_rem(scaled.denom());
            if r * BigInt::from(2) >= *scaled.denom() {
                q + BigInt::one()
            } else {
                q
            }
        }
    };
    if m == pow10(digits) {
        m /= BigInt::from(10);
        e += 1;
    }
    let s = m.to_string();
    let body = if e >= digits as i64 - 1 {
        format!("{}{}", s, "0".repeat((e - (digits as i64 - 1)) as usize))
    } else if e >= 0 {
        let split = (e + 1) as usize;
        format!("{}.{}", &s[..split], &s[split..])
    } else {
        format!("0.{}{}", "0".repeat((-e - 1) as usize), s)
    };
    if negative {
        format!("-{body}")
    } else {
        body
    }
}

/// Midpoint of two rationals.
pub fn midpoint(a: &Rational, b: &Rational) -> Rational {
    (a + b) / int(2)
}

/// Smallest power of two `2^k >= x` for positive `x`, as a rational.
pub fn power_of_two_above(x: &Rational) -> Rational {
    let mut p = Rational::one();
    while &p < x {
        p *= int(2);
    }
    p
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn significant_digits_round_and_truncate() {
        let x = parse_rational("2.7962588867").unwrap();
        assert_eq!(format_significant(&x, 6, DecimalMode::Round), "2.79626");
        assert_eq!(format_significant(&x, 6, DecimalMode::Truncate), "2.79625");
        let y = parse_rational("7.819063762").unwrap();
        assert_eq!(format_significant(&y, 6, DecimalMode::Round), "7.81906");
        let z = parse_rational("0.000123456").unwrap();
        assert_eq!(format_significant(&z, 3, DecimalMode::Round), "0.000123");
        assert_eq!(format_significant(&int(-1), 3, DecimalMode::Round), "-1.00");
        assert_eq!(format_significant(&int(12345), 3, DecimalMode::Round), "12300");
        assert_eq!(format_significant(&rat(9999, 1000), 3, DecimalMode::Round), "10.0");
        assert_eq!(format_significant(&int(0), 5, DecimalMode::Round), "0");
    }

    #[test]
    fn exponent_at_powers_of_ten() {
        assert_eq!(decimal_exponent(&int(1)), 0);
        assert_eq!(decimal_exponent(&int(10)), 1);
        assert_eq!(decimal_exponent(&rat(1, 10)), -1);
        assert_eq!(decimal_exponent(&rat(99, 1000)), -2);
    }

    #[test]
    fn parsing() {
        assert_eq!(parse_rational("-3/6"), Some(rat(-1, 2)));
        assert_eq!(parse_rational("0.25"), Some(rat(1, 4)));
        assert_eq!(parse_rational("-1.5"), Some(rat(-3, 2)));
        assert_eq!(parse_rational("1/0"), None);
    }
}
