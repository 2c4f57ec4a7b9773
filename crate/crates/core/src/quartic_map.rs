//! Exact multivariate polynomials and the biharmonic quartic map
//! `φᵢ(x) = Σⱼ xⱼ⁴ − m·xᵢ⁴` on `ℝ^m`.
//!
//! Components beyond the first `m` are at most linear, so every Laplacian of them
//! vanishes and they are not modelled.

use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Signed, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Serialize, Serializer};

use crate::poly::rational::rational_string;
use crate::poly::{int, Rational};

/// Polynomial in `x₁ … x_m` with exact rational coefficients; zero terms are never stored.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct MultiPoly {
    nvars: usize,
    terms: BTreeMap<Vec<u32>, Rational>,
}

impl MultiPoly {
    pub fn zero(nvars: usize) -> Self {
        MultiPoly { nvars, terms: BTreeMap::new() }
    }

    pub fn constant(nvars: usize, c: Rational) -> Self {
        Self::monomial(nvars, c, vec![0; nvars])
    }

    pub fn monomial(nvars: usize, c: Rational, exps: Vec<u32>) -> Self {
        assert_eq!(exps.len(), nvars, "exponent vector length");
        let mut p = Self::zero(nvars);
        if !c.is_zero() {
            p.terms.insert(exps, c);
        }
        p
    }

    /// `x_i^k` (0-based index).
    pub fn var_pow(nvars: usize, i: usize, k: u32) -> Self {
        let mut e = vec![0; nvars];
        e[i] = k;
        Self::monomial(nvars, int(1), e)
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<u32>, &Rational)> {
        self.terms.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().map(|e| e.iter().sum()).max()
    }

    fn add_term(&mut self, e: Vec<u32>, c: Rational) {
        let entry = self.terms.entry(e).or_insert_with(Rational::zero);
        *entry += c;
        if entry.is_zero() {
            self.terms.retain(|_, v| !v.is_zero());
        }
    }

    pub fn scale(&self, c: &Rational) -> Self {
        let mut out = Self::zero(self.nvars);
        if c.is_zero() {
            return out;
        }
        out.terms = self.terms.iter().map(|(e, v)| (e.clone(), v * c)).collect();
        out
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(self.nvars, other.nvars);
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.scale(&int(-1)))
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.nvars, other.nvars);
        let mut out = Self::zero(self.nvars);
        for (e1, c1) in &self.terms {
            for (e2, c2) in &other.terms {
                let e: Vec<u32> = e1.iter().zip(e2).map(|(a, b)| a + b).collect();
                out.add_term(e, c1 * c2);
            }
        }
        out
    }

    pub fn square(&self) -> Self {
        self.mul(self)
    }

    /// `∂/∂x_i`.
    pub fn derivative(&self, i: usize) -> Self {
        let mut out = Self::zero(self.nvars);
        for (e, c) in &self.terms {
            if e[i] == 0 {
                continue;
            }
            let mut e2 = e.clone();
            e2[i] -= 1;
            out.add_term(e2, c * int(e[i] as i64));
        }
        out
    }

    /// `Σₖ ∂²/∂xₖ²`.
    pub fn laplacian(&self) -> Self {
        (0..self.nvars).fold(Self::zero(self.nvars), |acc, k| acc.add(&self.derivative(k).derivative(k)))
    }

    pub fn eval(&self, x: &[Rational]) -> Rational {
        assert_eq!(x.len(), self.nvars);
        self.terms
            .iter()
            .map(|(e, c)| {
                e.iter().zip(x).fold(c.clone(), |acc, (&k, xi)| acc * num_traits::pow(xi.clone(), k as usize))
            })
            .fold(Rational::zero(), |a, b| a + b)
    }

    /// Renames variables by `perm`: `x_i ↦ x_{perm[i]}`.
    pub fn permute(&self, perm: &[usize]) -> Self {
        let mut out = Self::zero(self.nvars);
        for (e, c) in &self.terms {
            let mut e2 = vec![0; self.nvars];
            for (i, &k) in e.iter().enumerate() {
                e2[perm[i]] = k;
            }
            out.add_term(e2, c.clone());
        }
        out
    }
}

impl fmt::Display for MultiPoly {
    /// Highest total degree first, then lexicographically by exponent vector.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        let mut terms: Vec<_> = self.terms.iter().collect();
        terms.sort_by(|(a, _), (b, _)| {
            let (da, db): (u32, u32) = (a.iter().sum(), b.iter().sum());
            db.cmp(&da).then_with(|| b.cmp(a))
        });
        for (idx, (e, c)) in terms.into_iter().enumerate() {
            let mono: Vec<String> = e
                .iter()
                .enumerate()
                .filter(|(_, &k)| k > 0)
                .map(|(i, &k)| if k == 1 { format!("x{}", i + 1) } else { format!("x{}^{k}", i + 1) })
                .collect();
            let neg = c.is_negative();
            let mag = c.abs();
            if idx == 0 {
                if neg {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if neg { " - " } else { " + " })?;
            }
            let coeff = rational_string(&mag);
            match (mono.is_empty(), mag.is_one()) {
                (true, _) => f.write_str(&coeff)?,
                (false, true) => f.write_str(&mono.join("*"))?,
                (false, false) => write!(f, "{coeff}*{}", mono.join("*"))?,
            }
        }
        Ok(())
    }
}

impl Serialize for MultiPoly {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

/// `Σⱼ xⱼ^k`.
pub fn power_sum(m: usize, k: u32) -> MultiPoly {
    (0..m).fold(MultiPoly::zero(m), |acc, j| acc.add(&MultiPoly::var_pow(m, j, k)))
}

/// The component `φᵢ = Σⱼ xⱼ⁴ − m·xᵢ⁴` (0-based `i`).
pub fn component(m: usize, i: usize) -> MultiPoly {
    power_sum(m, 4).sub(&MultiPoly::var_pow(m, i, 4).scale(&int(m as i64)))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct IdentityCheck {
    pub name: String,
    pub claimed: MultiPoly,
    pub computed: MultiPoly,
    pub equal: bool,
    pub difference: MultiPoly,
}

impl IdentityCheck {
    fn new(name: impl Into<String>, claimed: MultiPoly, computed: MultiPoly) -> Self {
        let difference = computed.sub(&claimed);
        IdentityCheck { name: name.into(), equal: difference.is_zero(), claimed, computed, difference }
    }
}

/// Sampled check of `m·Σxⱼ⁴ ≥ (Σxⱼ²)²`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PowerMeanCheck {
    pub points: usize,
    pub seed: u64,
    pub violations: usize,
    pub equal: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VerificationReport {
    pub m: usize,
    pub identities: Vec<IdentityCheck>,
    pub power_mean: PowerMeanCheck,
}

impl VerificationReport {
    pub fn all_equal(&self) -> bool {
        self.identities.iter().all(|c| c.equal) && self.power_mean.equal
    }

    pub fn mismatches(&self) -> Vec<&IdentityCheck> {
        self.identities.iter().filter(|c| !c.equal).collect()
    }
}

pub const POWER_MEAN_POINTS: usize = 1000;
pub const POWER_MEAN_SEED: u64 = 81;

/// Checks the displayed identities for the quartic map on `ℝ^m`:
///
/// * `a[i]`: `Δφᵢ = 12(Σxⱼ² − m xᵢ²)`
/// * `b[i]`: `ΔΔφᵢ = 0`
/// * `c`: `Σᵢ(Δφᵢ)² = 144 m (m Σxⱼ⁴ − (Σxⱼ²)²)`
/// * `d`: `Σᵢₖ(∂ₖΔφᵢ)²` against `576 m(m−1)(Σxⱼ²)²` as displayed and against
///   the closed form `576 m(m−1) Σxⱼ²`
/// * `e`: `m Σxⱼ⁴ ≥ (Σxⱼ²)²` at random rational points
pub fn verify_example(m: usize) -> VerificationReport {
    assert!(m >= 1, "m must be at least 1");
    let mi = int(m as i64);
    let s2 = power_sum(m, 2);
    let s4 = power_sum(m, 4);
    let phis: Vec<MultiPoly> = (0..m).map(|i| component(m, i)).collect();
    let taus: Vec<MultiPoly> = phis.iter().map(MultiPoly::laplacian).collect();
    let mut ids = Vec::new();

    for (i, tau) in taus.iter().enumerate() {
        let claimed = s2.sub(&MultiPoly::var_pow(m, i, 2).scale(&mi)).scale(&int(12));
        ids.push(IdentityCheck::new(format!("a[{}]: tension component", i + 1), claimed, tau.clone()));
    }
    for (i, tau) in taus.iter().enumerate() {
        ids.push(IdentityCheck::new(format!("b[{}]: bitension component", i + 1), MultiPoly::zero(m), tau.laplacian()));
    }

    let norm_tau = taus.iter().fold(MultiPoly::zero(m), |acc, t| acc.add(&t.square()));
    let claimed_c = s4.scale(&mi).sub(&s2.square()).scale(&(int(144) * &mi));
    ids.push(IdentityCheck::new("c: squared norm of the tension field", claimed_c, norm_tau));

    let grad_tau = taus.iter().fold(MultiPoly::zero(m), |acc, t| {
        (0..m).fold(acc, |acc, k| acc.add(&t.derivative(k).square()))
    });
    let factor = int(576) * &mi * (&mi - int(1));
    ids.push(IdentityCheck::new(
        "d: squared norm of the gradient of the tension field, as displayed",
        s2.square().scale(&factor),
        grad_tau.clone(),
    ));
    ids.push(IdentityCheck::new(
        "d: squared norm of the gradient of the tension field, closed form",
        s2.scale(&factor),
        grad_tau,
    ));

    let power_mean = sample_power_mean(m, POWER_MEAN_POINTS, POWER_MEAN_SEED);
    VerificationReport { m, identities: ids, power_mean }
}

fn sample_power_mean(m: usize, points: usize, seed: u64) -> PowerMeanCheck {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let lhs = power_sum(m, 4).scale(&int(m as i64));
    let rhs = power_sum(m, 2).square();
    let mut violations = 0;
    for _ in 0..points {
        let x: Vec<Rational> =
            (0..m).map(|_| Rational::new(rng.gen_range(-50..=50).into(), rng.gen_range(1..=20).into())).collect();
        if lhs.eval(&x) < rhs.eval(&x) {
            violations += 1;
        }
    }
    PowerMeanCheck { points, seed, violations, equal: violations == 0 }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn laplacian_of_quartic() {
        let p = MultiPoly::var_pow(1, 0, 4);
        assert_eq!(p.laplacian(), MultiPoly::var_pow(1, 0, 2).scale(&int(12)));
        assert!(MultiPoly::constant(3, int(7)).laplacian().is_zero());
    }

    #[test]
    fn component_laplacian_three_variables() {
        let lap = component(3, 0).laplacian();
        let want = power_sum(3, 2).scale(&int(12)).sub(&MultiPoly::var_pow(3, 0, 2).scale(&int(36)));
        assert_eq!(lap, want);
    }

    #[test]
    fn display_is_canonical() {
        let p = component(2, 0);
        assert_eq!(p.to_string(), "-x1^4 + x2^4");
        assert_eq!(MultiPoly::zero(2).to_string(), "0");
    }

    #[test]
    fn degenerate_m_one() {
        let r = verify_example(1);
        assert!(component(1, 0).is_zero());
        assert!(r.all_equal());
    }

    #[test]
    fn displayed_gradient_norm_has_wrong_degree() {
        let r = verify_example(3);
        let d: Vec<_> = r.identities.iter().filter(|c| c.name.starts_with("d:")).collect();
        assert!(!d[0].equal);
        assert!(d[1].equal);
        assert_eq!(d[0].computed.degree(), Some(2));
        assert_eq!(r.mismatches().len(), 1);
    }
}
