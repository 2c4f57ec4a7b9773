//! Real-root isolation by Sturm bisection and certified decimal refinement.

use std::cmp::Ordering;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use rayon::prelude::*;
use serde::Serialize;

use super::rational::{format_significant, int, midpoint, rational_string, DecimalMode, Rational};
use super::sturm::{rational_between, sign_variations, signum, sturm_sequence, Bound, Interval};
use super::univariate::RationalPoly;
use crate::error::{Error, Result};

/// Hard cap on bisection steps spent on one decimal string.
const MAX_REFINEMENT_STEPS: usize = 4000;

/// A root of a square-free polynomial bracketed by the open rational interval `(low, high)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Bracket {
    pub low: Rational,
    pub high: Rational,
    /// Set when the root is rational and has been identified exactly.
    pub exact: Option<Rational>,
}

impl Bracket {
    pub fn width(&self) -> Rational {
        &self.high - &self.low
    }

    /// One bisection step against the square-free polynomial `p`.
    pub fn bisect(&mut self, p: &RationalPoly) {
        if self.exact.is_some() {
            let e = self.exact.clone().unwrap();
            let half = self.width() / int(4);
            self.low = &e - &half;
            self.high = &e + &half;
            return;
        }
        let mid = midpoint(&self.low, &self.high);
        let sm = signum(&p.eval(&mid));
        if sm == 0 {
            self.exact = Some(mid);
            self.bisect(p);
            return;
        }
        let sl = signum(&p.eval(&self.low));
        if sl == sm {
            self.low = mid;
        } else {
            self.high = mid;
        }
    }

    pub fn refine_to_width(&mut self, p: &RationalPoly, width: &Rational) {
        while &self.width() >= width {
            self.bisect(p);
        }
    }

    /// Tries to identify a rational root: any rational root has denominator dividing
    /// the leading coefficient `L` of the primitive form, so once the bracket is narrower
    /// than `1/L` there is at most one candidate `k/L` inside.
    pub fn identify_rational(&mut self, p: &RationalPoly) {
        if self.exact.is_some() {
            return;
        }
        let prim = p.primitive();
        let lead = prim.leading();
        let limit = Rational::one() / &lead;
        while self.width() >= limit && self.exact.is_none() {
            self.bisect(p);
        }
        if self.exact.is_some() {
            return;
        }
        let k = (&self.high * &lead).floor();
        let candidate = k / &lead;
        if candidate > self.low && candidate < self.high && p.eval(&candidate).is_zero() {
            self.exact = Some(candidate);
        }
    }

    pub fn midpoint(&self) -> Rational {
        self.exact.clone().unwrap_or_else(|| midpoint(&self.low, &self.high))
    }

    /// Certified decimal of `f(root)` for a monotone `f` given as an interval enclosure
    /// `enclose(lo, hi)`; `exact_image` short-circuits when the image is known exactly.
    pub fn decimal_of<F>(
        &mut self,
        p: &RationalPoly,
        digits: u32,
        mode: DecimalMode,
        exact_image: Option<Rational>,
        enclose: F,
    ) -> String
    where
        F: Fn(&Rational, &Rational) -> (Rational, Rational),
    {
        if let Some(v) = exact_image {
            return format_significant(&v, digits, mode);
        }
        // A value that is exactly zero can never be separated from zero; stop once the
        // enclosure is far below the printed resolution.
        let negligible = Rational::new(BigInt::one(), super::rational::pow10(3 * digits + 20));
        for _ in 0..MAX_REFINEMENT_STEPS {
            let (a, b) = enclose(&self.low, &self.high);
            if a.is_negative() && b.is_positive() && &b - &a < negligible {
                break;
            }
            let same_sign = signum(&a) == signum(&b) && !a.is_zero();
            if same_sign {
                let sa = format_significant(&a, digits, mode);
                if sa == format_significant(&b, digits, mode) {
                    return sa;
                }
            }
            self.bisect(p);
        }
        let (a, b) = enclose(&self.low, &self.high);
        format_significant(&midpoint(&a, &b), digits, mode)
    }

    /// Certified decimal of the root itself.
    pub fn decimal(&mut self, p: &RationalPoly, digits: u32, mode: DecimalMode) -> String {
        let exact = self.exact.clone();
        self.decimal_of(p, digits, mode, exact, |a, b| (a.clone(), b.clone()))
    }
}

/// An isolated real root together with its printed value.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct IsolatedRoot {
    #[serde(serialize_with = "ser_rational")]
    pub low: Rational,
    #[serde(serialize_with = "ser_rational")]
    pub high: Rational,
    /// The root is a simple root of the source polynomial.
    pub simple: bool,
    #[serde(serialize_with = "ser_opt_rational")]
    pub exact: Option<Rational>,
    pub decimal: String,
}

fn ser_rational<S: serde::Serializer>(q: &Rational, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&rational_string(q))
}

fn ser_opt_rational<S: serde::Serializer>(
    q: &Option<Rational>,
    s: S,
) -> std::result::Result<S::Ok, S::Error> {
    match q {
        Some(q) => s.serialize_str(&rational_string(q)),
        None => s.serialize_none(),
    }
}

impl IsolatedRoot {
    pub fn bracket(&self) -> Bracket {
        Bracket { low: self.low.clone(), high: self.high.clone(), exact: self.exact.clone() }
    }

    pub fn interval(&self) -> Interval {
        Interval { lo: Bound::Rat(self.low.clone()), hi: Bound::Rat(self.high.clone()) }
    }
}

/// Replaces infinite bounds by a Cauchy bound of `p`.
fn finite_search_bounds(p: &RationalPoly, interval: &Interval) -> (Bound, Bound) {
    let b = p.cauchy_bound();
    let lo = match &interval.lo {
        Bound::NegInf => Bound::Rat(-b.clone()),
        other => other.clone(),
    };
    let hi = match &interval.hi {
        Bound::PosInf => Bound::Rat(b),
        other => other.clone(),
    };
    (lo, hi)
}

/// Isolating brackets for every distinct real root of `p` in the open interval,
/// sorted by lower endpoint.
pub fn isolate(p: &RationalPoly, interval: &Interval) -> Result<Vec<Bracket>> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let sf = p.square_free_part()?;
    for b in [&interval.lo, &interval.hi] {
        if b.is_finite() && b.sign_of(&sf) == 0 {
            return Err(Error::EndpointRoot(b.to_string()));
        }
    }
    if sf.is_constant() {
        return Ok(Vec::new());
    }
    let chain = sturm_sequence(&sf)?;
    let (lo, hi) = finite_search_bounds(&sf, interval);
    if lo.compare(&hi) != Ordering::Less {
        return Ok(Vec::new());
    }
    let count = |a: &Bound, b: &Bound| {
        sign_variations(&chain, a).saturating_sub(sign_variations(&chain, b))
    };

    let mut out = Vec::new();
    let mut stack = vec![(lo.clone(), hi.clone(), count(&lo, &hi))];
    while let Some((a, b, n)) = stack.pop() {
        if n == 0 {
            continue;
        }
        if n == 1 {
            if let (Bound::Rat(l), Bound::Rat(h)) = (&a, &b) {
                out.push(Bracket { low: l.clone(), high: h.clone(), exact: None });
                continue;
            }
        }
        let m = rational_between(&a, &b);
        if sf.eval(&m).is_zero() {
            // Rational root hit exactly: wrap it in a small clean bracket.
            let mut delta = distance_floor(&a, &m).min(distance_floor(&b, &m)) / int(2);
            loop {
                let l = Bound::Rat(&m - &delta);
                let h = Bound::Rat(&m + &delta);
                if l.sign_of(&sf) != 0 && h.sign_of(&sf) != 0 && count(&l, &h) == 1 {
                    out.push(Bracket {
                        low: &m - &delta,
                        high: &m + &delta,
                        exact: Some(m.clone()),
                    });
                    let left = count(&a, &l);
                    let right = count(&h, &b);
                    stack.push((a, l, left));
                    stack.push((h, b, right));
                    break;
                }
                delta /= int(2);
            }
            continue;
        }
        let mb = Bound::Rat(m);
        let left = count(&a, &mb);
        let right = n - left;
        stack.push((a, mb.clone(), left));
        stack.push((mb, b, right));
    }
    out.sort_by(|x, y| x.low.cmp(&y.low));
    Ok(out)
}

/// A positive rational not exceeding the distance between a finite bound and `m`.
fn distance_floor(b: &Bound, m: &Rational) -> Rational {
    match b {
        Bound::Rat(r) => (r - m).abs(),
        Bound::Quad(_) => {
            let (l, h) = b.enclosure(30).expect("finite");
            let d1 = (&l - m).abs();
            let d2 = (&h - m).abs();
            let d = d1.min(d2);
            if d.is_zero() {
                Rational::new(BigInt::one(), super::rational::pow10(30))
            } else {
                d
            }
        }
        _ => Rational::one(),
    }
}

/// Isolates the roots of `p` in the interval and prints each to `digits` significant digits.
pub fn isolate_and_refine(
    p: &RationalPoly,
    interval: &Interval,
    digits: u32,
    mode: DecimalMode,
) -> Result<Vec<IsolatedRoot>> {
    if digits == 0 {
        return Err(Error::InvalidParameter("precision_digits must be at least 1".into()));
    }
    let sf = p.square_free_part()?;
    let brackets = isolate(p, interval)?;
    let repeated = p.gcd(&p.derivative()).unwrap_or_else(|_| RationalPoly::one());
    let roots: Vec<IsolatedRoot> = brackets
        .into_par_iter()
        .map(|mut b| {
            b.identify_rational(&sf);
            let decimal = b.decimal(&sf, digits, mode);
            let simple = match &b.exact {
                _ if repeated.is_constant() => true,
                Some(e) => !repeated.eval(e).is_zero(),
                None => {
                    let i = Interval { lo: Bound::Rat(b.low.clone()), hi: Bound::Rat(b.high.clone()) };
                    super::sturm::count_roots(&repeated, &i).map_or(true, |n| n == 0)
                }
            };
            IsolatedRoot { low: b.low, high: b.high, simple, exact: b.exact, decimal }
        })
        .collect();
    Ok(roots)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(c: &[i64]) -> RationalPoly {
        RationalPoly::from_ints(c)
    }

    #[test]
    fn displayed_cubic_roots() {
        let h = p(&[-15, 41, 43, 11]);
        let r = isolate_and_refine(&h, &Interval::above(Bound::Rat(int(0))), 6, DecimalMode::Round).unwrap();
        assert_eq!(r.len(), 1);
        assert_eq!(r[0].decimal, "0.278629");
        let k = p(&[-9, 43, -107, 13]);
        let r = isolate_and_refine(&k, &Interval::above(Bound::Rat(int(1))), 6, DecimalMode::Round).unwrap();
        assert_eq!(r.len(), 1);
        assert_eq!(r[0].decimal, "7.81906");
    }

    #[test]
    fn rational_roots_are_exact() {
        let r = isolate_and_refine(&p(&[-1, 0, 1]), &Interval::real_line(), 3, DecimalMode::Truncate).unwrap();
        let ds: Vec<_> = r.iter().map(|x| x.decimal.as_str()).collect();
        assert_eq!(ds, ["-1.00", "1.00"]);
        assert_eq!(r[1].exact, Some(int(1)));
        assert!(r.iter().all(|x| x.simple && x.low < x.high));
    }

    #[test]
    fn multiplicity_reported() {
        let sq = &p(&[-2, 0, 1]) * &p(&[-2, 0, 1]);
        let r = isolate_and_refine(&sq, &Interval::real_line(), 4, DecimalMode::Round).unwrap();
        assert_eq!(r.len(), 2);
        assert!(r.iter().all(|x| !x.simple));
        assert_eq!(r[1].decimal, "1.414");
    }

    #[test]
    fn zero_digits_rejected() {
        assert!(isolate_and_refine(&p(&[-1, 1]), &Interval::real_line(), 0, DecimalMode::Round).is_err());
    }

    #[test]
    fn midpoint_hits_root() {
        // Root exactly at 0 which is the first bisection point of (-B, B).
        let r = isolate(&p(&[0, -1, 0, 1]), &Interval::real_line()).unwrap();
        assert_eq!(r.len(), 3);
        assert_eq!(r[1].exact, Some(int(0)));
    }
}
