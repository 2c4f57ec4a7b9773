//! Sign certificates: zero Sturm count on an interval plus one signed sample.

use serde::Serialize;

use super::isolate::{isolate, Bracket};
use super::rational::{rational_string, Rational};
use super::sturm::{count_roots, signum, Interval};
use super::univariate::RationalPoly;
use crate::error::{Error, Result};

/// Proof that `polynomial` has constant sign `sign` on the open `interval`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SignCertificate {
    #[serde(serialize_with = "ser_poly")]
    pub polynomial: RationalPoly,
    pub interval: Interval,
    pub root_count: usize,
    #[serde(serialize_with = "ser_rational")]
    pub sample: Rational,
    pub sign: i32,
}

fn ser_poly<S: serde::Serializer>(p: &RationalPoly, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.collect_seq(p.coefficient_strings())
}

fn ser_rational<S: serde::Serializer>(q: &Rational, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&rational_string(q))
}

impl SignCertificate {
    /// Re-derives the certificate's two facts from scratch.
    pub fn verify(&self) -> bool {
        self.root_count == 0
            && count_roots(&self.polynomial, &self.interval) == Ok(0)
            && self.interval.contains_rational(&self.sample)
            && signum(&self.polynomial.eval(&self.sample)) == self.sign
            && self.sign != 0
    }

    pub fn is_positive(&self) -> bool {
        self.sign > 0
    }
}

/// Result of asking whether a polynomial is positive on an interval.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Positivity {
    Positive(SignCertificate),
    /// Constant negative sign on the interval.
    Negative(SignCertificate),
    /// The polynomial has a root in the interval; `witness` isolates the first one.
    HasRoot { witness: Bracket },
}

/// Certifies a constant sign of `p` on the interval, if it has no roots there.
pub fn certify_sign(p: &RationalPoly, interval: &Interval) -> Result<Option<SignCertificate>> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let n = count_roots(p, interval)?;
    if n > 0 {
        return Ok(None);
    }
    let sample = interval.interior_point();
    let sign = signum(&p.eval(&sample));
    Ok(Some(SignCertificate {
        polynomial: p.clone(),
        interval: interval.clone(),
        root_count: 0,
        sample,
        sign,
    }))
}

pub fn certify_positive(p: &RationalPoly, interval: &Interval) -> Result<Positivity> {
    match certify_sign(p, interval)? {
        Some(c) if c.sign > 0 => Ok(Positivity::Positive(c)),
        Some(c) => Ok(Positivity::Negative(c)),
        None => {
            let witness = isolate(p, interval)?
                .into_iter()
                .next()
                .expect("positive root count implies a bracket");
            Ok(Positivity::HasRoot { witness })
        }
    }
}
