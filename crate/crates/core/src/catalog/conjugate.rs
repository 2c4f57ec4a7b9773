//! Curvature branches living in `Q(√d)(y)` that only ever appear together with
//! their Galois conjugate, so every symmetric combination is rational.

use serde::Serialize;

use crate::poly::{int, QuadExt, Rational, RationalFunction, RationalPoly};

/// `p0 + √d·p1` with rational polynomials `p0`, `p1`.
#[derive(Debug, Clone, PartialEq, Eq)]
struct SurdPoly {
    rat: RationalPoly,
    irr: RationalPoly,
    d: i64,
}

impl SurdPoly {
    fn mul(&self, o: &SurdPoly) -> SurdPoly {
        let d = RationalPoly::constant(int(self.d));
        SurdPoly {
            rat: &(&self.rat * &o.rat) + &(&(&self.irr * &o.irr) * &d),
            irr: &(&self.rat * &o.irr) + &(&self.irr * &o.rat),
            d: self.d,
        }
    }

    fn conj(&self) -> SurdPoly {
        SurdPoly { rat: self.rat.clone(), irr: -&self.irr, d: self.d }
    }
}

/// The branch `(n0 + √d n1) / (d0 + √d d1)`; its partner replaces `√d` by `-√d`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConjugatePair {
    num: SurdPoly,
    den: SurdPoly,
}

#[derive(Debug, Clone, Serialize)]
pub struct ConjugatePairJson {
    pub radicand: i64,
    pub num_rational: Vec<String>,
    pub num_surd: Vec<String>,
    pub den_rational: Vec<String>,
    pub den_surd: Vec<String>,
}

impl ConjugatePair {
    pub fn new(
        num_rational: RationalPoly,
        num_surd: RationalPoly,
        den_rational: RationalPoly,
        den_surd: RationalPoly,
        d: i64,
    ) -> Self {
        Self {
            num: SurdPoly { rat: num_rational, irr: num_surd, d },
            den: SurdPoly { rat: den_rational, irr: den_surd, d },
        }
    }

    /// Branch `cot(θ + α)` written in `y = cot θ`, where `cot α = c ∈ Q(√d)`:
    /// `(c·y − 1)/(y + c)`.
    pub fn cot_shift(c: &QuadExt) -> Self {
        let a = c.rational_part().clone();
        let b = c.surd_part().clone();
        Self::new(
            RationalPoly::new(vec![int(-1), a.clone()]),
            RationalPoly::new(vec![int(0), b.clone()]),
            RationalPoly::new(vec![a, int(1)]),
            RationalPoly::constant(b),
            c.radicand(),
        )
    }

    pub fn radicand(&self) -> i64 {
        self.num.d
    }

    /// `β + β̄`.
    pub fn sum(&self) -> RationalFunction {
        let den_norm = self.den.mul(&self.den.conj());
        debug_assert!(den_norm.irr.is_zero());
        let cross = self.num.mul(&self.den.conj());
        RationalFunction::new(cross.rat.scale(&int(2)), den_norm.rat).expect("nonzero norm")
    }

    /// `β² + β̄²`.
    pub fn sum_of_squares(&self) -> RationalFunction {
        let den_norm = self.den.mul(&self.den.conj());
        let n2 = self.num.mul(&self.num);
        let dbar2 = self.den.conj().mul(&self.den.conj());
        let top = n2.mul(&dbar2);
        let bottom = &den_norm.rat * &den_norm.rat;
        RationalFunction::new(top.rat.scale(&int(2)), bottom).expect("nonzero norm")
    }

    /// The branch evaluated at a rational parameter, exactly in `Q(√d)`.
    pub fn eval(&self, y: &Rational) -> Option<QuadExt> {
        let d = self.num.d;
        let n = QuadExt::new(self.num.rat.eval(y), self.num.irr.eval(y), d).ok()?;
        let m = QuadExt::new(self.den.rat.eval(y), self.den.irr.eval(y), d).ok()?;
        if m.is_zero() {
            return None;
        }
        Some(&n / &m)
    }

    pub fn to_json(&self) -> ConjugatePairJson {
        ConjugatePairJson {
            radicand: self.num.d,
            num_rational: self.num.rat.coefficient_strings(),
            num_surd: self.num.irr.coefficient_strings(),
            den_rational: self.den.rat.coefficient_strings(),
            den_surd: self.den.irr.coefficient_strings(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::rat;

    #[test]
    fn cot_shift_by_pi_over_3() {
        // cot(π/3) = √3/3; branch = (y − √3)/(√3 y + 1).
        let c = QuadExt::new(int(0), rat(1, 3), 3).unwrap();
        let b = ConjugatePair::cot_shift(&c);
        let v = b.eval(&int(2)).unwrap();
        let expect = &QuadExt::new(int(2), int(-1), 3).unwrap() / &QuadExt::new(int(1), int(2), 3).unwrap();
        assert_eq!(v, expect);
    }

    #[test]
    fn symmetric_functions_match_pointwise_values() {
        let c = QuadExt::new(int(0), rat(1, 3), 3).unwrap();
        let b = ConjugatePair::cot_shift(&c);
        for y in [int(1), rat(7, 3), int(5)] {
            let v = b.eval(&y).unwrap();
            let w = v.conj();
            let s = &v + &w;
            let q = &(&v * &v) + &(&w * &w);
            assert_eq!(s.as_rational().unwrap(), &b.sum().eval(&y).unwrap());
            assert_eq!(q.as_rational().unwrap(), &b.sum_of_squares().eval(&y).unwrap());
        }
    }
}
