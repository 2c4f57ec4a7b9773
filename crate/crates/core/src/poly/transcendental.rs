//! Rigorous rational enclosures of square roots, arctangents and π.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::rational::{int, Rational};

/// Working precision in bits for `digits` decimal digits, with guard bits.
fn bits_for(digits: u32) -> u32 {
    (digits as f64 * 3.33).ceil() as u32 + 24
}

fn scaled(bits: u32) -> BigInt {
    BigInt::one() << bits as usize
}

/// `(lo, hi)` with `lo <= √q <= hi`, width about `10^-digits`.
pub fn sqrt_enclosure(q: &Rational, digits: u32) -> (Rational, Rational) {
    assert!(!q.is_negative(), "square root of a negative number");
    let bits = bits_for(digits);
    let s = scaled(bits);
    let four = Rational::from_integer(&s * &s);
    let x = q * four;
    let lo = x.floor().to_integer().sqrt();
    let hi = x.ceil().to_integer().sqrt() + BigInt::one();
    (Rational::new(lo, s.clone()), Rational::new(hi, s))
}

/// Enclosure of `arctan(x)` for `0 <= x <= 1` by Euler's series
/// `Σ 4^k (k!)^2/(2k+1)! · x^(2k+1)/(1+x^2)^(k+1)`, whose term ratio is at most `y = x²/(1+x²) <= 1/2`.
fn arctan_unit(x: &Rational, digits: u32) -> (Rational, Rational) {
    debug_assert!(!x.is_negative() && x <= &Rational::one());
    if x.is_zero() {
        return (Rational::zero(), Rational::zero());
    }
    let bits = bits_for(digits);
    let s = scaled(bits);
    let y = x * x / (Rational::one() + x * x);
    // First term x/(1+x²) in fixed point, rounded down and up.
    let t0 = x / (Rational::one() + x * x) * Rational::from_integer(s.clone());
    let mut lo_term = t0.floor().to_integer();
    let mut hi_term = t0.ceil().to_integer();
    let mut lo_sum = BigInt::zero();
    let mut hi_sum = BigInt::zero();
    let (yn, yd) = (y.numer().clone(), y.denom().clone());
    let mut k: u64 = 0;
    loop {
        lo_sum += &lo_term;
        hi_sum += &hi_term;
        let num = &yn * BigInt::from(2 * k + 2);
        let den = &yd * BigInt::from(2 * k + 3);
        lo_term = (&lo_term * &num).div_floor(&den);
        hi_term = (&hi_term * &num).div_ceil(&den);
        k += 1;
        if hi_term <= BigInt::one() || k > 20_000 {
            break;
        }
    }
    // Remaining tail is at most hi_term / (1 - y) <= 2 hi_term.
    let tail = &hi_term * BigInt::from(2) + BigInt::one();
    (Rational::new(lo_sum, s.clone()), Rational::new(hi_sum + tail, s))
}

/// Enclosure of π.
pub fn pi_enclosure(digits: u32) -> (Rational, Rational) {
    let (lo, hi) = arctan_unit(&Rational::one(), digits + 2);
    (lo * int(4), hi * int(4))
}

/// Enclosure of `arctan(x)` for any rational `x`.
pub fn arctan_enclosure(x: &Rational, digits: u32) -> (Rational, Rational) {
    if x.is_negative() {
        let (lo, hi) = arctan_enclosure(&-x, digits);
        return (-hi, -lo);
    }
    if x <= &Rational::one() {
        return arctan_unit(x, digits);
    }
    // arctan x = π/2 - arctan(1/x).
    let (plo, phi) = pi_enclosure(digits + 1);
    let (alo, ahi) = arctan_unit(&(Rational::one() / x), digits + 1);
    (plo / int(2) - ahi, phi / int(2) - alo)
}

/// Enclosure of `arccot(t) ∈ (0, π)`.
pub fn arccot_enclosure(t: &Rational, digits: u32) -> (Rational, Rational) {
    let (plo, phi) = pi_enclosure(digits + 1);
    if t.is_zero() {
        return (plo / int(2), phi / int(2));
    }
    let (alo, ahi) = arctan_enclosure(&(Rational::one() / t), digits + 1);
    if t.is_positive() {
        (alo, ahi)
    } else {
        (plo + alo, phi + ahi)
    }
}

/// Enclosure of `arccot` over `[lo, hi]` (decreasing function).
pub fn arccot_interval(lo: &Rational, hi: &Rational, digits: u32) -> (Rational, Rational) {
    let (a, _) = arccot_enclosure(hi, digits);
    let (_, b) = arccot_enclosure(lo, digits);
    (a, b)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::rational::{format_significant, parse_rational, DecimalMode};

    #[test]
    fn pi_digits() {
        let (lo, hi) = pi_enclosure(50);
        let below = parse_rational("3.14159265358979323846264338327950288419716939937510582097").unwrap();
        let above = parse_rational("3.14159265358979323846264338327950288419716939937510582098").unwrap();
        assert!(lo <= above && below <= hi);
        assert!(lo >= parse_rational("3.1415926535897932384626433832795028841971693993751058").unwrap());
        assert!(&hi - &lo < parse_rational("1/1000000000000000000000000000000000000000000000000").unwrap());
    }

    #[test]
    fn arccot_of_quoted_root() {
        // t = 2.79625888679025 -> u = 0.343447645...
        let t = parse_rational("2.79625888679025").unwrap();
        let (lo, hi) = arccot_enclosure(&t, 30);
        assert_eq!(format_significant(&lo, 6, DecimalMode::Round), "0.343448");
        assert_eq!(format_significant(&hi, 6, DecimalMode::Round), "0.343448");
        let (lo, _) = arccot_enclosure(&int(-1), 20);
        assert_eq!(format_significant(&lo, 8, DecimalMode::Round), "2.3561945");
    }

    #[test]
    fn sqrt_bounds() {
        let (lo, hi) = sqrt_enclosure(&int(2), 40);
        assert!(&lo * &lo <= int(2) && &hi * &hi >= int(2));
        assert_eq!(format_significant(&lo, 10, DecimalMode::Truncate), "1.414213562");
    }
}
