//! Sturm chains and exact real-root counting on intervals whose endpoints
//! may be rational, quadratic irrational, or infinite.

use std::cmp::Ordering;
use std::fmt;

use num_traits::{One, Signed, Zero};
use serde::{Serialize, Serializer};

use super::quadext::QuadExt;
use super::rational::{int, midpoint, rational_string, Rational};
use super::univariate::RationalPoly;
use crate::error::{Error, Result};

/// One end of an open interval.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Bound {
    NegInf,
    PosInf,
    Rat(Rational),
    Quad(QuadExt),
}

impl Bound {
    pub fn rat(q: Rational) -> Self {
        Bound::Rat(q)
    }

    /// Collapses quadratic values with zero surd part to rationals.
    pub fn quad(q: QuadExt) -> Self {
        match q.as_rational() {
            Some(r) => Bound::Rat(r.clone()),
            None => Bound::Quad(q),
        }
    }

    pub fn is_finite(&self) -> bool {
        matches!(self, Bound::Rat(_) | Bound::Quad(_))
    }

    /// Rational lower/upper enclosure of a finite bound.
    pub fn enclosure(&self, digits: u32) -> Option<(Rational, Rational)> {
        match self {
            Bound::Rat(r) => Some((r.clone(), r.clone())),
            Bound::Quad(q) => Some(q.enclosure(digits)),
            _ => None,
        }
    }

    pub fn cmp_rational(&self, q: &Rational) -> Ordering {
        match self {
            Bound::NegInf => Ordering::Less,
            Bound::PosInf => Ordering::Greater,
            Bound::Rat(r) => r.cmp(q),
            Bound::Quad(x) => x.cmp_rational(q),
        }
    }

    pub fn compare(&self, other: &Bound) -> Ordering {
        use Bound::*;
        match (self, other) {
            (NegInf, NegInf) | (PosInf, PosInf) => Ordering::Equal,
            (NegInf, _) | (_, PosInf) => Ordering::Less,
            (PosInf, _) | (_, NegInf) => Ordering::Greater,
            (_, Rat(r)) => self.cmp_rational(r),
            (Rat(r), _) => other.cmp_rational(r).reverse(),
            (Quad(a), Quad(b)) if a.radicand() == b.radicand() => a.cmp(b),
            (Quad(a), Quad(b)) => {
                // Distinct irrational fields never meet; separate by enclosures.
                let mut digits = 10;
                loop {
                    let (alo, ahi) = a.enclosure(digits);
                    let (blo, bhi) = b.enclosure(digits);
                    if ahi < blo {
                        return Ordering::Less;
                    }
                    if bhi < alo {
                        return Ordering::Greater;
                    }
                    digits *= 2;
                }
            }
        }
    }

    /// Sign of `p` at this bound (limit sign at infinities).
    pub fn sign_of(&self, p: &RationalPoly) -> i32 {
        match self {
            Bound::Rat(r) => signum(&p.eval(r)),
            Bound::Quad(q) => p.eval_quad(q).signum(),
            Bound::PosInf => signum(&p.leading()),
            Bound::NegInf => {
                let s = signum(&p.leading());
                if p.degree().unwrap_or(0) % 2 == 0 {
                    s
                } else {
                    -s
                }
            }
        }
    }
}

impl fmt::Display for Bound {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Bound::NegInf => f.write_str("-inf"),
            Bound::PosInf => f.write_str("inf"),
            Bound::Rat(r) => f.write_str(&rational_string(r)),
            Bound::Quad(q) => write!(f, "{q}"),
        }
    }
}

impl Serialize for Bound {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

pub(crate) fn signum(q: &Rational) -> i32 {
    if q.is_zero() {
        0
    } else if q.is_positive() {
        1
    } else {
        -1
    }
}

/// Open interval `(lo, hi)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Interval {
    pub lo: Bound,
    pub hi: Bound,
}

impl Interval {
    pub fn new(lo: Bound, hi: Bound) -> Result<Self> {
        if lo.compare(&hi) != Ordering::Less {
            return Err(Error::EmptyInterval { lo: lo.to_string(), hi: hi.to_string() });
        }
        Ok(Self { lo, hi })
    }

    pub fn real_line() -> Self {
        Self { lo: Bound::NegInf, hi: Bound::PosInf }
    }

    pub fn rational(lo: Rational, hi: Rational) -> Result<Self> {
        Self::new(Bound::Rat(lo), Bound::Rat(hi))
    }

    /// `(lo, +inf)`.
    pub fn above(lo: Bound) -> Self {
        Self { lo, hi: Bound::PosInf }
    }

    pub fn contains_rational(&self, q: &Rational) -> bool {
        self.lo.cmp_rational(q) == Ordering::Less && self.hi.cmp_rational(q) == Ordering::Greater
    }

    /// A rational strictly inside the interval.
    pub fn interior_point(&self) -> Rational {
        rational_between(&self.lo, &self.hi)
    }
}

impl fmt::Display for Interval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.lo, self.hi)
    }
}

/// A rational strictly between `lo < hi`.
pub fn rational_between(lo: &Bound, hi: &Bound) -> Rational {
    match (lo, hi) {
        (Bound::NegInf, Bound::PosInf) => Rational::zero(),
        (Bound::NegInf, b) => {
            let (l, _) = b.enclosure(4).expect("finite");
            l.floor() - Rational::one()
        }
        (a, Bound::PosInf) => {
            let (_, h) = a.enclosure(4).expect("finite");
            h.floor() + Rational::one()
        }
        (Bound::Rat(a), Bound::Rat(b)) => midpoint(a, b),
        (a, b) => {
            let mut digits = 8;
            loop {
                let (_, ah) = a.enclosure(digits).expect("finite");
                let (bl, _) = b.enclosure(digits).expect("finite");
                if ah < bl {
                    let m = midpoint(&ah, &bl);
                    if a.cmp_rational(&m) == Ordering::Less && b.cmp_rational(&m) == Ordering::Greater
                    {
                        return m;
                    }
                }
                digits *= 2;
            }
        }
    }
}

/// Canonical chain `p, p', -rem(p_{i-1}, p_i), ...` without rescaling.
pub fn sturm_sequence(p: &RationalPoly) -> Result<Vec<RationalPoly>> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let mut chain = vec![p.clone()];
    let d = p.derivative();
    if d.is_zero() {
        return Ok(chain);
    }
    chain.push(d);
    loop {
        let n = chain.len();
        let r = chain[n - 2].rem(&chain[n - 1])?;
        if r.is_zero() {
            break;
        }
        chain.push(-&r);
    }
    Ok(chain)
}

/// Number of sign changes in the chain at `at`, zeros skipped.
pub fn sign_variations(chain: &[RationalPoly], at: &Bound) -> usize {
    let mut last = 0;
    let mut changes = 0;
    for p in chain {
        let s = at.sign_of(p);
        if s == 0 {
            continue;
        }
        if last != 0 && s != last {
            changes += 1;
        }
        last = s;
    }
    changes
}

fn check_endpoint(p: &RationalPoly, b: &Bound) -> Result<()> {
    if b.is_finite() && b.sign_of(p) == 0 {
        return Err(Error::EndpointRoot(b.to_string()));
    }
    Ok(())
}

/// Number of distinct real roots of `p` in the open interval.
pub fn count_roots(p: &RationalPoly, interval: &Interval) -> Result<usize> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let sf = p.square_free_part()?;
    check_endpoint(&sf, &interval.lo)?;
    check_endpoint(&sf, &interval.hi)?;
    let chain = sturm_sequence(&sf)?;
    let vl = sign_variations(&chain, &interval.lo);
    let vh = sign_variations(&chain, &interval.hi);
    Ok(vl.saturating_sub(vh))
}

/// Divides out every factor of `p` vanishing at a finite endpoint of the interval.
/// Returns the deflated polynomial and the endpoints that were removed.
pub fn deflate_endpoint_roots(p: &RationalPoly, interval: &Interval) -> Result<(RationalPoly, Vec<Bound>)> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let mut q = p.clone();
    let mut removed = Vec::new();
    for b in [&interval.lo, &interval.hi] {
        loop {
            if !b.is_finite() || q.is_constant() || b.sign_of(&q) != 0 {
                break;
            }
            let factor = match b {
                Bound::Rat(r) => RationalPoly::new(vec![-r.clone(), Rational::one()]),
                Bound::Quad(x) => {
                    let a = x.rational_part();
                    RationalPoly::new(vec![x.norm(), -(a * int(2)), Rational::one()])
                }
                _ => unreachable!(),
            };
            q = q.exact_div(&factor)?;
            removed.push(b.clone());
        }
    }
    Ok((q, removed))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::rational::rat;

    fn p(c: &[i64]) -> RationalPoly {
        RationalPoly::from_ints(c)
    }

    #[test]
    fn textbook_chain_for_x2_minus_2() {
        assert_eq!(sturm_sequence(&p(&[-2, 0, 1])).unwrap(), vec![p(&[-2, 0, 1]), p(&[0, 2]), p(&[2])]);
    }

    #[test]
    fn repeated_root_chain_ends_at_gcd() {
        let chain = sturm_sequence(&p(&[0, 0, 1])).unwrap();
        assert_eq!(chain.last().unwrap().degree(), Some(1));
    }

    #[test]
    fn counts() {
        let i = Interval::rational(int(0), int(2)).unwrap();
        assert_eq!(count_roots(&p(&[-2, 0, 1]), &i).unwrap(), 1);
        assert_eq!(count_roots(&p(&[-2, 0, 1]), &Interval::real_line()).unwrap(), 2);
        let h = p(&[-15, 41, 43, 11]);
        assert_eq!(count_roots(&h, &Interval::above(Bound::Rat(int(0)))).unwrap(), 1);
        let k = p(&[-9, 43, -107, 13]);
        assert_eq!(count_roots(&k, &Interval::above(Bound::Rat(int(1)))).unwrap(), 1);
        // Only one real root: the other two are complex conjugates.
        assert_eq!(count_roots(&k, &Interval::real_line()).unwrap(), 1);
    }

    #[test]
    fn endpoint_root_is_an_error() {
        let i = Interval::rational(int(1), int(3)).unwrap();
        assert!(matches!(count_roots(&p(&[-1, 1]), &i), Err(Error::EndpointRoot(_))));
        assert_eq!(count_roots(&RationalPoly::zero(), &i), Err(Error::ZeroPolynomial));
    }

    #[test]
    fn quadratic_endpoints_are_exact() {
        // 3y^2 - 1 vanishes at 1/√3; counting on (1/√3, inf) must refuse, deflation must fix it.
        let lo = Bound::quad(QuadExt::new(int(0), rat(1, 3), 3).unwrap());
        let i = Interval::above(lo.clone());
        let den = &p(&[-1, 0, 3]) * &p(&[0, 1]);
        assert!(matches!(count_roots(&den, &i), Err(Error::EndpointRoot(_))));
        let (q, removed) = deflate_endpoint_roots(&den, &i).unwrap();
        assert_eq!(removed, vec![lo]);
        assert_eq!(count_roots(&q, &i).unwrap(), 0);
        // x^2 - 2 on (1/√3, √3): the root √2 lies inside.
        let j = Interval::new(
            Bound::quad(QuadExt::new(int(0), rat(1, 3), 3).unwrap()),
            Bound::quad(QuadExt::sqrt(3).unwrap()),
        )
        .unwrap();
        assert_eq!(count_roots(&p(&[-2, 0, 1]), &j).unwrap(), 1);
    }

    #[test]
    fn rational_between_is_strict() {
        let a = Bound::quad(QuadExt::sqrt(2).unwrap());
        let b = Bound::Rat(rat(1415, 1000));
        let m = rational_between(&a, &b);
        assert_eq!(a.cmp_rational(&m), Ordering::Less);
        assert_eq!(b.cmp_rational(&m), Ordering::Greater);
    }

    #[test]
    fn empty_interval_rejected() {
        assert!(Interval::rational(int(2), int(1)).is_err());
    }
}
