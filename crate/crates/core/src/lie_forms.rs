//! Pointwise algebra of `so(r)`-valued 1- and 2-forms on an `m`-dimensional inner
//! product space, with exact checks of the curvature-action identity and of the
//! inequalities used to show that small bi-Yang–Mills fields are Yang–Mills.

use num_rational::Ratio;
use num_integer::Integer;
use num_traits::{Signed, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};

/// Exact scalar. Entries stay small (|x| <= 9 before products), so 128-bit
/// rationals never overflow at the dimensions used here.
pub type Scalar = Ratio<i128>;

fn q(n: i128) -> Scalar {
    Scalar::from_integer(n)
}

fn ser_scalar<S: Serializer>(x: &Scalar, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&x.to_string())
}

fn ser_scalars<S: Serializer>(xs: &[Scalar], s: S) -> std::result::Result<S::Ok, S::Error> {
    s.collect_seq(xs.iter().map(|x| x.to_string()))
}

/// Skew-symmetric `r × r` matrix with rational entries, stored row-major as
/// integer numerators over one positive common denominator.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SkewEndo {
    pub r: usize,
    num: Vec<i128>,
    den: i128,
}

impl Serialize for SkewEndo {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let entries: Vec<String> = (0..self.r * self.r).map(|k| self.entry(k).to_string()).collect();
        let mut st = s.serialize_struct("SkewEndo", 2)?;
        st.serialize_field("r", &self.r)?;
        st.serialize_field("entries", &entries)?;
        st.end()
    }
}

impl SkewEndo {
    pub fn zero(r: usize) -> Self {
        SkewEndo { r, num: vec![0; r * r], den: 1 }
    }

    fn normalized(r: usize, mut num: Vec<i128>, mut den: i128) -> Self {
        if den < 0 {
            den = -den;
            num.iter_mut().for_each(|x| *x = -*x);
        }
        if den != 1 {
            let g = num.iter().fold(den, |g, &x| g.gcd(&x));
            if g > 1 {
                den /= g;
                num.iter_mut().for_each(|x| *x /= g);
            }
        }
        SkewEndo { r, num, den }
    }

    pub fn from_rows(rows: &[Vec<i128>]) -> Result<Self> {
        let r = rows.len();
        if rows.iter().any(|row| row.len() != r) {
            return Err(Error::DimensionMismatch("matrix must be square".into()));
        }
        let a = SkewEndo { r, num: rows.iter().flatten().copied().collect(), den: 1 };
        for i in 0..r {
            for j in 0..r {
                if a.num[i * r + j] != -a.num[j * r + i] {
                    return Err(Error::InvalidParameter("matrix is not skew-symmetric".into()));
                }
            }
        }
        Ok(a)
    }

    /// Upper-triangle entries drawn from `[−9, 9]`, lower triangle negated.
    pub fn random<R: Rng>(r: usize, rng: &mut R) -> Self {
        let mut a = Self::zero(r);
        for i in 0..r {
            for j in i + 1..r {
                let x = rng.gen_range(-9..=9);
                a.num[i * r + j] = x;
                a.num[j * r + i] = -x;
            }
        }
        a
    }

    fn entry(&self, k: usize) -> Scalar {
        Scalar::new(self.num[k], self.den)
    }

    pub fn get(&self, i: usize, j: usize) -> Scalar {
        self.entry(i * self.r + j)
    }

    pub fn is_zero(&self) -> bool {
        self.num.iter().all(|&x| x == 0)
    }

    fn combine(&self, o: &Self, sign: i128) -> Self {
        if self.den == o.den {
            let num = self.num.iter().zip(&o.num).map(|(a, b)| a + sign * b).collect();
            return Self::normalized(self.r, num, self.den);
        }
        let num = self.num.iter().zip(&o.num).map(|(a, b)| a * o.den + sign * b * self.den).collect();
        Self::normalized(self.r, num, self.den * o.den)
    }

    pub fn add(&self, o: &Self) -> Self {
        self.combine(o, 1)
    }

    pub fn sub(&self, o: &Self) -> Self {
        self.combine(o, -1)
    }

    pub fn scale(&self, c: Scalar) -> Self {
        let num = self.num.iter().map(|a| a * c.numer()).collect();
        Self::normalized(self.r, num, self.den * c.denom())
    }

    fn matmul(&self, o: &Self) -> Vec<i128> {
        let r = self.r;
        let mut out = vec![0i128; r * r];
        for i in 0..r {
            for k in 0..r {
                let a = self.num[i * r + k];
                if a == 0 {
                    continue;
                }
                for j in 0..r {
                    out[i * r + j] += a * o.num[k * r + j];
                }
            }
        }
        out
    }

    /// Commutator `AB − BA`, again skew.
    pub fn bracket(&self, o: &Self) -> Self {
        let ab = self.matmul(o);
        let ba = o.matmul(self);
        Self::normalized(self.r, ab.iter().zip(&ba).map(|(x, y)| x - y).collect(), self.den * o.den)
    }

    /// `tr(AᵀB)`.
    pub fn inner(&self, o: &Self) -> Scalar {
        let s: i128 = self.num.iter().zip(&o.num).map(|(a, b)| a * b).sum();
        Scalar::new(s, self.den * o.den)
    }

    pub fn norm2(&self) -> Scalar {
        self.inner(self)
    }
}

/// An alternating 1- or 2-form with values in skew endomorphisms.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LieValuedForm {
    pub degree: u8,
    pub m: usize,
    pub r: usize,
    /// Degree 1: `α(eᵢ)` for `i < m`. Degree 2: `φ(eᵢ, eⱼ)` for `i < j` in lexicographic order.
    components: Vec<SkewEndo>,
}

fn pair_index(m: usize, i: usize, j: usize) -> usize {
    debug_assert!(i < j && j < m);
    i * m - i * (i + 1) / 2 + (j - i - 1)
}

impl LieValuedForm {
    pub fn zero(degree: u8, m: usize, r: usize) -> Self {
        let n = match degree {
            1 => m,
            2 => m * (m.saturating_sub(1)) / 2,
            _ => panic!("only degrees 1 and 2 are modelled"),
        };
        LieValuedForm { degree, m, r, components: vec![SkewEndo::zero(r); n] }
    }

    pub fn random<R: Rng>(degree: u8, m: usize, r: usize, rng: &mut R) -> Self {
        let mut f = Self::zero(degree, m, r);
        for c in &mut f.components {
            *c = SkewEndo::random(r, rng);
        }
        f
    }

    pub fn one_form(components: Vec<SkewEndo>) -> Result<Self> {
        let r = components.first().map_or(0, |c| c.r);
        if components.iter().any(|c| c.r != r) {
            return Err(Error::DimensionMismatch("components of different sizes".into()));
        }
        Ok(LieValuedForm { degree: 1, m: components.len(), r, components })
    }

    /// `α(eᵢ)` for a 1-form.
    pub fn at(&self, i: usize) -> &SkewEndo {
        assert_eq!(self.degree, 1);
        &self.components[i]
    }

    /// `φ(eᵢ, eⱼ)` for a 2-form, using alternation for `i ≥ j`.
    pub fn pair(&self, i: usize, j: usize) -> SkewEndo {
        assert_eq!(self.degree, 2);
        match i.cmp(&j) {
            std::cmp::Ordering::Less => self.components[pair_index(self.m, i, j)].clone(),
            std::cmp::Ordering::Greater => self.components[pair_index(self.m, j, i)].scale(q(-1)),
            std::cmp::Ordering::Equal => SkewEndo::zero(self.r),
        }
    }

    pub fn set_pair(&mut self, i: usize, j: usize, v: SkewEndo) {
        assert!(i < j);
        let k = pair_index(self.m, i, j);
        self.components[k] = v;
    }

    /// Sum over increasing index tuples of the componentwise inner products.
    pub fn inner(&self, o: &Self) -> Scalar {
        self.components.iter().zip(&o.components).map(|(a, b)| a.inner(b)).sum()
    }

    pub fn norm2(&self) -> Scalar {
        self.inner(self)
    }

    pub fn is_zero(&self) -> bool {
        self.components.iter().all(SkewEndo::is_zero)
    }

    pub fn add(&self, o: &Self) -> Self {
        let components = self.components.iter().zip(&o.components).map(|(a, b)| a.add(b)).collect();
        LieValuedForm { components, ..*self }
    }

    pub fn scale(&self, c: Scalar) -> Self {
        LieValuedForm { components: self.components.iter().map(|a| a.scale(c)).collect(), ..*self }
    }
}

fn check_same(a: &LieValuedForm, b: &LieValuedForm, da: u8, db: u8) -> Result<()> {
    if a.degree != da || b.degree != db {
        return Err(Error::DimensionMismatch(format!(
            "expected degrees ({da}, {db}), got ({}, {})",
            a.degree, b.degree
        )));
    }
    if a.m != b.m || a.r != b.r {
        return Err(Error::DimensionMismatch(format!("(m, r) = ({}, {}) vs ({}, {})", a.m, a.r, b.m, b.r)));
    }
    Ok(())
}

/// `[β₁∧β₂](eᵢ, eⱼ) = [β₁(eᵢ), β₂(eⱼ)] − [β₁(eⱼ), β₂(eᵢ)]`.
pub fn bracket_wedge(b1: &LieValuedForm, b2: &LieValuedForm) -> Result<LieValuedForm> {
    check_same(b1, b2, 1, 1)?;
    let mut out = LieValuedForm::zero(2, b1.m, b1.r);
    for i in 0..b1.m {
        for j in i + 1..b1.m {
            let v = b1.at(i).bracket(b2.at(j)).sub(&b1.at(j).bracket(b2.at(i)));
            out.set_pair(i, j, v);
        }
    }
    Ok(out)
}

/// `𝓡(φ)(β)(eᵢ) = Σⱼ [φ(eⱼ, eᵢ), β(eⱼ)]`.
pub fn curvature_action(phi: &LieValuedForm, beta: &LieValuedForm) -> Result<LieValuedForm> {
    check_same(phi, beta, 2, 1)?;
    let comps = (0..beta.m)
        .map(|i| {
            (0..beta.m).fold(SkewEndo::zero(beta.r), |acc, j| acc.add(&phi.pair(j, i).bracket(beta.at(j))))
        })
        .collect();
    LieValuedForm::one_form(comps)
}

/// Symmetric `m × m` matrix with a claimed lower bound `Ric ≥ k·Id`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RicciModel {
    pub m: usize,
    #[serde(serialize_with = "ser_scalars")]
    data: Vec<Scalar>,
    #[serde(serialize_with = "ser_scalar")]
    pub k: Scalar,
}

impl RicciModel {
    pub fn new(m: usize, data: Vec<Scalar>, k: Scalar) -> Result<Self> {
        if data.len() != m * m {
            return Err(Error::DimensionMismatch("Ricci matrix must be m x m".into()));
        }
        for i in 0..m {
            for j in 0..m {
                if data[i * m + j] != data[j * m + i] {
                    return Err(Error::InvalidParameter("Ricci matrix must be symmetric".into()));
                }
            }
        }
        Ok(RicciModel { m, data, k })
    }

    pub fn identity(m: usize) -> Self {
        Self::scalar(m, q(1))
    }

    /// `k·Id` with bound `k`.
    pub fn scalar(m: usize, k: Scalar) -> Self {
        let mut data = vec![Scalar::zero(); m * m];
        for i in 0..m {
            data[i * m + i] = k;
        }
        RicciModel { m, data, k }
    }

    /// `k·Id + GᵀG` for integer `G` with entries in `[−3, 3]` and `k ∈ [0, 5]`.
    pub fn random<R: Rng>(m: usize, rng: &mut R) -> Self {
        let k = q(rng.gen_range(0..=5));
        let g: Vec<i128> = (0..m * m).map(|_| rng.gen_range(-3..=3)).collect();
        let mut data = vec![Scalar::zero(); m * m];
        for i in 0..m {
            for j in 0..m {
                let s: i128 = (0..m).map(|l| g[l * m + i] * g[l * m + j]).sum();
                data[i * m + j] = q(s) + if i == j { k } else { Scalar::zero() };
            }
        }
        RicciModel { m, data, k }
    }

    pub fn get(&self, i: usize, j: usize) -> Scalar {
        self.data[i * self.m + j]
    }

    /// Certifies `Ric − k·Id ⪰ 0` by exact LDLᵀ with diagonal pivoting.
    pub fn bound_certified(&self) -> bool {
        let m = self.m;
        let mut a: Vec<Scalar> = self.data.clone();
        for i in 0..m {
            a[i * m + i] -= self.k;
        }
        let mut active: Vec<usize> = (0..m).collect();
        while !active.is_empty() {
            let (pos, &p) = active
                .iter()
                .enumerate()
                .max_by(|(_, &x), (_, &y)| a[x * m + x].cmp(&a[y * m + y]))
                .expect("nonempty");
            let d = a[p * m + p];
            if d.is_negative() {
                return false;
            }
            active.remove(pos);
            if d.is_zero() {
                // A zero pivot forces its whole row to vanish.
                return active.iter().all(|&i| a[i * m + p].is_zero()) && {
                    // Remaining block must itself be PSD; the largest diagonal was zero so it is zero.
                    active.iter().all(|&i| active.iter().all(|&j| a[i * m + j].is_zero()))
                };
            }
            for &i in &active {
                for &j in &active {
                    let upd = a[i * m + p] * a[p * m + j] / d;
                    a[i * m + j] -= upd;
                }
            }
        }
        true
    }
}

/// `(α∘Ric)(eᵢ) = Σⱼ Ric_{ji} α(eⱼ)`.
pub fn ricci_compose(alpha: &LieValuedForm, ric: &RicciModel) -> Result<LieValuedForm> {
    if alpha.degree != 1 || alpha.m != ric.m {
        return Err(Error::DimensionMismatch(format!("1-form on R^{} vs Ricci model on R^{}", alpha.m, ric.m)));
    }
    let comps = (0..alpha.m)
        .map(|i| (0..alpha.m).fold(SkewEndo::zero(alpha.r), |acc, j| acc.add(&alpha.at(j).scale(ric.get(j, i)))))
        .collect();
    LieValuedForm::one_form(comps)
}

/// `Σ_{i<j} ⟨φ(eᵢ,eⱼ), [φ(eᵢ,eⱼ), ψ]⟩`, which vanishes identically.
pub fn self_bracket_contraction(phi: &LieValuedForm, psi: &SkewEndo) -> Scalar {
    phi.components.iter().map(|c| c.inner(&c.bracket(psi))).sum()
}

/// All quantities evaluated on one random instance.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct TrialOutcome {
    pub trial: u64,
    pub identity_holds: bool,
    pub ad_invariance_holds: bool,
    pub contraction_vanishes: bool,
    pub ricci_bound_certified: bool,
    /// `⟨𝓡(φ)α, α⟩² ≤ ‖φ‖²‖α‖⁴`.
    pub curvature_bound_holds: bool,
    /// `‖[α∧α]‖² ≤ ‖α‖⁴`.
    pub bracket_bound_holds: bool,
    /// `⟨α∘Ric, α⟩ ≥ k‖α‖²`.
    pub ricci_inequality_holds: bool,
    #[serde(skip)]
    ratios: [f64; 3],
}

impl TrialOutcome {
    pub fn all_hold(&self) -> bool {
        self.identity_holds
            && self.ad_invariance_holds
            && self.contraction_vanishes
            && self.ricci_bound_certified
            && self.curvature_bound_holds
            && self.bracket_bound_holds
            && self.ricci_inequality_holds
    }
}

/// Random data of one trial, kept for counterexample reports.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TrialData {
    pub phi: LieValuedForm,
    pub alpha: LieValuedForm,
    pub beta1: LieValuedForm,
    pub beta2: LieValuedForm,
    pub ric: RicciModel,
    pub eta: SkewEndo,
    pub psi: SkewEndo,
    pub xi: SkewEndo,
}

fn ratio(num: Scalar, den: Scalar) -> f64 {
    if den.is_zero() {
        return if num.is_zero() { 0.0 } else { f64::INFINITY };
    }
    let v = num / den;
    *v.numer() as f64 / *v.denom() as f64
}

/// Trial `t` uses stream `t` of a ChaCha8 generator seeded with the master seed.
pub fn trial_data(seed: u64, trial: u64, m: usize, r: usize) -> TrialData {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(trial);
    TrialData {
        phi: LieValuedForm::random(2, m, r, &mut rng),
        alpha: LieValuedForm::random(1, m, r, &mut rng),
        beta1: LieValuedForm::random(1, m, r, &mut rng),
        beta2: LieValuedForm::random(1, m, r, &mut rng),
        ric: RicciModel::random(m, &mut rng),
        eta: SkewEndo::random(r, &mut rng),
        psi: SkewEndo::random(r, &mut rng),
        xi: SkewEndo::random(r, &mut rng),
    }
}

pub fn evaluate(trial: u64, d: &TrialData) -> Result<TrialOutcome> {
    let lhs = d.phi.inner(&bracket_wedge(&d.beta1, &d.beta2)?);
    let mid = curvature_action(&d.phi, &d.beta2)?.inner(&d.beta1);
    let rhs = d.beta2.inner(&curvature_action(&d.phi, &d.beta1)?);
    let identity_holds = lhs == mid && mid == rhs;

    let ad = d.eta.bracket(&d.psi).inner(&d.xi) + d.psi.inner(&d.eta.bracket(&d.xi));
    let ad_invariance_holds = ad.is_zero();
    let contraction_vanishes = self_bracket_contraction(&d.phi, &d.psi).is_zero();
    let ricci_bound_certified = d.ric.bound_certified();

    let a2 = d.alpha.norm2();
    let a4 = a2 * a2;
    let ra = curvature_action(&d.phi, &d.alpha)?.inner(&d.alpha);
    let curv_lhs = ra * ra;
    let curv_rhs = d.phi.norm2() * a4;
    let br = bracket_wedge(&d.alpha, &d.alpha)?.norm2();
    let ric_lhs = ricci_compose(&d.alpha, &d.ric)?.inner(&d.alpha);
    let ric_rhs = d.ric.k * a2;

    Ok(TrialOutcome {
        trial,
        identity_holds,
        ad_invariance_holds,
        contraction_vanishes,
        ricci_bound_certified,
        curvature_bound_holds: curv_lhs <= curv_rhs,
        bracket_bound_holds: br <= a4,
        ricci_inequality_holds: ric_lhs >= ric_rhs,
        ratios: [ratio(curv_lhs, curv_rhs), ratio(br, a4), ratio(ric_rhs, ric_lhs)],
    })
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct InequalityReport {
    pub m: usize,
    pub r: usize,
    pub trials: u64,
    pub seed: u64,
    pub identity_violations: usize,
    pub ad_invariance_violations: usize,
    pub contraction_violations: usize,
    pub ricci_certificate_failures: usize,
    pub curvature_bound_violations: usize,
    pub bracket_bound_violations: usize,
    pub ricci_inequality_violations: usize,
    /// Largest observed `lhs/rhs` for the three inequalities (squared curvature form,
    /// bracket norm, and `k‖α‖²/⟨α∘Ric, α⟩`).
    pub max_tightness: [f64; 3],
    pub first_counterexample: Option<Counterexample>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Counterexample {
    pub outcome: TrialOutcome,
    pub data: TrialData,
}

impl InequalityReport {
    pub fn violations(&self) -> usize {
        self.identity_violations
            + self.ad_invariance_violations
            + self.contraction_violations
            + self.ricci_certificate_failures
            + self.curvature_bound_violations
            + self.bracket_bound_violations
            + self.ricci_inequality_violations
    }
}

/// Runs `trials` independent random instances in parallel.
pub fn check_inequalities(trials: u64, seed: u64, m: usize, r: usize) -> Result<InequalityReport> {
    if trials == 0 {
        return Err(Error::InvalidParameter("trials must be at least 1".into()));
    }
    if m < 1 || r < 1 {
        return Err(Error::InvalidParameter("m and r must be at least 1".into()));
    }
    let outcomes: Vec<TrialOutcome> =
        (0..trials).into_par_iter().map(|t| evaluate(t, &trial_data(seed, t, m, r))).collect::<Result<_>>()?;
    let count = |f: fn(&TrialOutcome) -> bool| outcomes.iter().filter(|o| !f(o)).count();
    let mut max_tightness = [0.0f64; 3];
    for o in &outcomes {
        for (mx, v) in max_tightness.iter_mut().zip(o.ratios) {
            *mx = mx.max(v);
        }
    }
    let first_counterexample = outcomes
        .iter()
        .find(|o| !o.all_hold())
        .map(|o| Counterexample { outcome: o.clone(), data: trial_data(seed, o.trial, m, r) });
    Ok(InequalityReport {
        m,
        r,
        trials,
        seed,
        identity_violations: count(|o| o.identity_holds),
        ad_invariance_violations: count(|o| o.ad_invariance_holds),
        contraction_violations: count(|o| o.contraction_vanishes),
        ricci_certificate_failures: count(|o| o.ricci_bound_certified),
        curvature_bound_violations: count(|o| o.curvature_bound_holds),
        bracket_bound_violations: count(|o| o.bracket_bound_holds),
        ricci_inequality_violations: count(|o| o.ricci_inequality_holds),
        max_tightness,
        first_counterexample,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rng() -> ChaCha8Rng {
        ChaCha8Rng::seed_from_u64(7)
    }

    #[test]
    fn skew_validation() {
        assert!(SkewEndo::from_rows(&[vec![0, 1], vec![-1, 0]]).is_ok());
        assert!(SkewEndo::from_rows(&[vec![0, 1], vec![1, 0]]).is_err());
        assert!(SkewEndo::from_rows(&[vec![1, 0], vec![0, -1]]).is_err());
    }

    #[test]
    fn pair_indexing_is_a_bijection() {
        let m = 5;
        let mut seen = vec![false; m * (m - 1) / 2];
        for i in 0..m {
            for j in i + 1..m {
                let k = pair_index(m, i, j);
                assert!(!seen[k]);
                seen[k] = true;
            }
        }
        assert!(seen.into_iter().all(|b| b));
    }

    #[test]
    fn wedge_against_double_loop() {
        let mut g = rng();
        let (b1, b2) = (LieValuedForm::random(1, 4, 3, &mut g), LieValuedForm::random(1, 4, 3, &mut g));
        let w = bracket_wedge(&b1, &b2).unwrap();
        for i in 0..4 {
            for j in 0..4 {
                let want = b1.at(i).bracket(b2.at(j)).sub(&b1.at(j).bracket(b2.at(i)));
                assert_eq!(w.pair(i, j), want, "({i},{j})");
            }
        }
    }

    #[test]
    fn so2_is_abelian() {
        let mut g = rng();
        let (b1, b2) = (LieValuedForm::random(1, 3, 2, &mut g), LieValuedForm::random(1, 3, 2, &mut g));
        assert!(bracket_wedge(&b1, &b2).unwrap().is_zero());
    }

    #[test]
    fn zero_inputs() {
        let mut g = rng();
        let phi = LieValuedForm::random(2, 3, 3, &mut g);
        let zero1 = LieValuedForm::zero(1, 3, 3);
        assert!(curvature_action(&phi, &zero1).unwrap().is_zero());
        let beta = LieValuedForm::random(1, 3, 3, &mut g);
        assert!(curvature_action(&LieValuedForm::zero(2, 3, 3), &beta).unwrap().is_zero());
        assert!(bracket_wedge(&zero1, &zero1).unwrap().is_zero());
    }

    #[test]
    fn zero_alpha_gives_equalities() {
        let mut d = trial_data(1, 0, 3, 3);
        d.alpha = LieValuedForm::zero(1, 3, 3);
        let o = evaluate(0, &d).unwrap();
        assert!(o.all_hold());
    }

    #[test]
    fn ricci_identity_and_scalar() {
        let mut g = rng();
        let alpha = LieValuedForm::random(1, 4, 3, &mut g);
        assert_eq!(ricci_compose(&alpha, &RicciModel::identity(4)).unwrap(), alpha);
        let k = q(3);
        let ric = RicciModel::scalar(4, k);
        assert_eq!(ricci_compose(&alpha, &ric).unwrap().inner(&alpha), k * alpha.norm2());
        assert!(ric.bound_certified());
    }

    #[test]
    fn ricci_diagonal_weights() {
        let mut g = rng();
        let alpha = LieValuedForm::random(1, 3, 3, &mut g);
        let mu = [q(2), q(5), q(7)];
        let mut data = vec![Scalar::zero(); 9];
        for i in 0..3 {
            data[i * 3 + i] = mu[i];
        }
        let ric = RicciModel::new(3, data, q(2)).unwrap();
        let want: Scalar = (0..3).map(|i| mu[i] * alpha.at(i).norm2()).sum();
        assert_eq!(ricci_compose(&alpha, &ric).unwrap().inner(&alpha), want);
    }

    #[test]
    fn ricci_bound_rejects_overclaim() {
        let ric = RicciModel::new(2, vec![q(2), q(1), q(1), q(2)], q(1)).unwrap();
        assert!(ric.bound_certified());
        let ric = RicciModel::new(2, vec![q(2), q(1), q(1), q(2)], Scalar::new(3, 2)).unwrap();
        assert!(!ric.bound_certified());
    }

    #[test]
    fn dimension_mismatch() {
        let a = LieValuedForm::zero(1, 3, 3);
        let b = LieValuedForm::zero(1, 4, 3);
        assert!(matches!(bracket_wedge(&a, &b), Err(Error::DimensionMismatch(_))));
        assert!(ricci_compose(&a, &RicciModel::identity(4)).is_err());
    }

    #[test]
    fn small_run_is_deterministic() {
        let a = check_inequalities(50, 42, 3, 3).unwrap();
        let b = check_inequalities(50, 42, 3, 3).unwrap();
        assert_eq!(a, b);
        assert_eq!(a.identity_violations, 0);
    }
}
