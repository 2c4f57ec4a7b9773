//! Families of hypersurfaces with constant principal curvatures, each stored as a
//! spectrum of principal curvatures in one parameter together with its admissible range.

mod conjugate;
pub mod reference;

use std::fmt;

use serde::Serialize;

pub use conjugate::{ConjugatePair, ConjugatePairJson};

use crate::error::{Error, Result};
use crate::poly::{int, rat, Bound, Interval, QuadExt, Rational, RationalFunction, RationalPoly};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum AmbientKind {
    Sphere,
    ComplexProjective,
    QuaternionProjective,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AmbientSpace {
    pub kind: AmbientKind,
    /// Sectional curvature (sphere), holomorphic or quaternionic sectional curvature.
    pub c: Rational,
    /// Sphere dimension `n` for `S^n`, complex/quaternionic dimension otherwise.
    pub n: u32,
}

impl AmbientSpace {
    pub fn default_c(kind: AmbientKind) -> Rational {
        match kind {
            AmbientKind::Sphere => int(1),
            _ => int(4),
        }
    }
}

/// Identifies a family together with its discrete parameters.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum FamilyId {
    SphereG1 { n: u32 },
    SphereG2 { n: u32, p: u32 },
    SphereG3 { mult: u32 },
    SphereG4 { m1: u32, m2: u32 },
    SphereG6 { mult: u32 },
    CpA { p: u32, q: u32 },
    CpB { n: u32 },
    CpC { n: u32 },
    CpD,
    CpE,
    HpGeodesicSphere { n: u32 },
    HpCpTube { n: u32 },
    HpHpkTube { n: u32, k: u32 },
}

impl FamilyId {
    /// Short kebab-case name used on the command line.
    pub fn slug(&self) -> &'static str {
        match self {
            FamilyId::SphereG1 { .. } => "sphere-g1",
            FamilyId::SphereG2 { .. } => "sphere-g2",
            FamilyId::SphereG3 { .. } => "sphere-g3",
            FamilyId::SphereG4 { .. } => "sphere-g4",
            FamilyId::SphereG6 { .. } => "sphere-g6",
            FamilyId::CpA { .. } => "cp-a",
            FamilyId::CpB { .. } => "cp-b",
            FamilyId::CpC { .. } => "cp-c",
            FamilyId::CpD => "cp-d",
            FamilyId::CpE => "cp-e",
            FamilyId::HpGeodesicSphere { .. } => "hp-sphere",
            FamilyId::HpCpTube { .. } => "hp-cp-tube",
            FamilyId::HpHpkTube { .. } => "hp-hpk-tube",
        }
    }

    /// Named integer parameters in a fixed order.
    pub fn params(&self) -> Vec<(&'static str, u32)> {
        match *self {
            FamilyId::SphereG1 { n } => vec![("n", n)],
            FamilyId::SphereG2 { n, p } => vec![("n", n), ("p", p)],
            FamilyId::SphereG3 { mult } => vec![("mult", mult)],
            FamilyId::SphereG4 { m1, m2 } => vec![("m1", m1), ("m2", m2)],
            FamilyId::SphereG6 { mult } => vec![("mult", mult)],
            FamilyId::CpA { p, q } => vec![("p", p), ("q", q)],
            FamilyId::CpB { n } | FamilyId::CpC { n } => vec![("n", n)],
            FamilyId::CpD | FamilyId::CpE => vec![],
            FamilyId::HpGeodesicSphere { n } | FamilyId::HpCpTube { n } => vec![("n", n)],
            FamilyId::HpHpkTube { n, k } => vec![("n", n), ("k", k)],
        }
    }

    pub fn ambient_kind(&self) -> AmbientKind {
        match self {
            FamilyId::SphereG1 { .. }
            | FamilyId::SphereG2 { .. }
            | FamilyId::SphereG3 { .. }
            | FamilyId::SphereG4 { .. }
            | FamilyId::SphereG6 { .. } => AmbientKind::Sphere,
            FamilyId::CpA { .. } | FamilyId::CpB { .. } | FamilyId::CpC { .. } | FamilyId::CpD | FamilyId::CpE => {
                AmbientKind::ComplexProjective
            }
            _ => AmbientKind::QuaternionProjective,
        }
    }

    /// Number of distinct principal curvatures for the sphere families.
    pub fn sphere_g(&self) -> Option<u32> {
        match self {
            FamilyId::SphereG1 { .. } => Some(1),
            FamilyId::SphereG2 { .. } => Some(2),
            FamilyId::SphereG3 { .. } => Some(3),
            FamilyId::SphereG4 { .. } => Some(4),
            FamilyId::SphereG6 { .. } => Some(6),
            _ => None,
        }
    }
}

impl fmt::Display for FamilyId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.slug())?;
        let ps = self.params();
        if !ps.is_empty() {
            let inner: Vec<String> = ps.iter().map(|(k, v)| format!("{k}={v}")).collect();
            write!(f, "({})", inner.join(","))?;
        }
        Ok(())
    }
}

/// A principal curvature as a function of the family parameter.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CurvatureValue {
    Rational(RationalFunction),
    /// Two branches conjugate under `√d → −√d`, each carrying the multiplicity.
    ConjugatePair(ConjugatePair),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PrincipalCurvature {
    pub label: String,
    pub value: CurvatureValue,
    pub multiplicity: u32,
}

impl PrincipalCurvature {
    fn rational(label: impl Into<String>, value: RationalFunction, multiplicity: u32) -> Self {
        Self { label: label.into(), value: CurvatureValue::Rational(value), multiplicity }
    }

    /// Total multiplicity contributed to the hypersurface dimension.
    pub fn total_multiplicity(&self) -> u32 {
        match self.value {
            CurvatureValue::Rational(_) => self.multiplicity,
            CurvatureValue::ConjugatePair(_) => 2 * self.multiplicity,
        }
    }
}

/// How the family parameter relates to the geometric radius.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Substitution {
    /// `t = cot u` for a tube radius `u`.
    CotRadius,
    /// `y = cot(x/g)` with `x = arccos(level)` for isoparametric level sets.
    CotLevelAngle { g: u32 },
}

impl Substitution {
    pub fn describe(&self) -> String {
        match self {
            Substitution::CotRadius => "t = cot u".into(),
            Substitution::CotLevelAngle { g: 1 } => "t = cot x, x = arccos(level)".into(),
            Substitution::CotLevelAngle { g } => format!("t = cot(x/{g}), x = arccos(level)"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Family {
    pub id: FamilyId,
    pub ambient: AmbientSpace,
    pub dim: u32,
    pub substitution: Substitution,
    /// Admissible open range of the parameter.
    pub range: Interval,
    pub spectrum: Vec<PrincipalCurvature>,
}

fn poly(c: &[i64]) -> RationalPoly {
    RationalPoly::from_ints(c)
}

fn rf(num: &[i64], den: &[i64]) -> RationalFunction {
    RationalFunction::new(poly(num), poly(den)).expect("nonzero denominator")
}

// Spectrum entries in t = cot u.
fn cot_u() -> RationalFunction {
    rf(&[0, 1], &[1])
}
fn neg_cot_u() -> RationalFunction {
    rf(&[0, -1], &[1])
}
fn tan_u() -> RationalFunction {
    rf(&[1], &[0, 1])
}
fn neg_tan_u() -> RationalFunction {
    rf(&[-1], &[0, 1])
}
/// `2cot 2u = (t² − 1)/t`.
fn two_cot_2u() -> RationalFunction {
    rf(&[-1, 0, 1], &[0, 1])
}
/// `2tan 2u = 4t/(t² − 1)`.
fn two_tan_2u() -> RationalFunction {
    rf(&[0, 4], &[-1, 0, 1])
}
/// `cot(π/4 − u) = (t + 1)/(t − 1)`.
fn cot_quarter_minus_u() -> RationalFunction {
    rf(&[1, 1], &[-1, 1])
}
/// `cot(3π/4 − u) = −(t − 1)/(t + 1)`.
fn cot_three_quarter_minus_u() -> RationalFunction {
    rf(&[1, -1], &[1, 1])
}

/// `cot(jπ/g)` for the offsets used by isoparametric families; `None` when infinite.
fn cot_of_pi_fraction(j: u32, g: u32) -> Option<QuadExt> {
    let third = || QuadExt::new(int(0), rat(1, 3), 3).expect("3 is square-free");
    let root3 = || QuadExt::sqrt(3).expect("3 is square-free");
    let r = |q: i64| QuadExt::from_rational(int(q), 3);
    match (j % g, g) {
        (0, _) => None,
        (1, 2) | (2, 4) | (3, 6) => Some(r(0)),
        (1, 4) => Some(r(1)),
        (3, 4) => Some(r(-1)),
        (1, 3) | (2, 6) => Some(third()),
        (2, 3) | (4, 6) => Some(-&third()),
        (1, 6) => Some(root3()),
        (5, 6) => Some(-&root3()),
        _ => unreachable!("g must be 1, 2, 3, 4 or 6"),
    }
}

/// Branch `cot(θ + jπ/g)` in `y = cot θ`.
enum SphereBranch {
    Rational(RationalFunction),
    Surd(ConjugatePair),
}

fn sphere_branch(j: u32, g: u32) -> SphereBranch {
    match cot_of_pi_fraction(j, g) {
        None => SphereBranch::Rational(RationalFunction::param()),
        Some(c) => match c.as_rational() {
            // (c·y − 1)/(y + c)
            Some(c) => SphereBranch::Rational(
                RationalFunction::new(
                    RationalPoly::new(vec![int(-1), c.clone()]),
                    RationalPoly::new(vec![c.clone(), int(1)]),
                )
                .expect("nonzero"),
            ),
            None => SphereBranch::Surd(ConjugatePair::cot_shift(&c)),
        },
    }
}

/// Spectrum `cot(θ + jπ/g)`, `j = 0..g`, with multiplicities alternating `m1, m2`.
/// Conjugate branches are paired (each pair shares a multiplicity).
fn isoparametric_spectrum(g: u32, m1: u32, m2: u32) -> Vec<PrincipalCurvature> {
    let mut out = Vec::new();
    let mut paired = vec![false; g as usize];
    for j in 0..g {
        if paired[j as usize] {
            continue;
        }
        let mult = if j % 2 == 0 { m1 } else { m2 };
        let label = if j == 0 {
            format!("cot(x/{g})")
        } else {
            format!("cot((x + {j}π)/{g})")
        };
        match sphere_branch(j, g) {
            SphereBranch::Rational(f) => out.push(PrincipalCurvature::rational(label, f, mult)),
            SphereBranch::Surd(pair) => {
                // Partner offset has cot(j'π/g) = conjugate, i.e. j' = g − j.
                let partner = g - j;
                paired[partner as usize] = true;
                let partner_mult = if partner % 2 == 0 { m1 } else { m2 };
                debug_assert_eq!(mult, partner_mult, "conjugate branches must share multiplicity");
                out.push(PrincipalCurvature {
                    label: format!("cot((x + {j}π)/{g}) and cot((x + {partner}π)/{g})"),
                    value: CurvatureValue::ConjugatePair(pair),
                    multiplicity: mult,
                });
            }
        }
    }
    out
}

fn invalid(msg: impl Into<String>) -> Error {
    Error::InvalidParameter(msg.into())
}

/// Assembles the spectrum, dimension and parameter range of a family.
pub fn build_family(id: FamilyId) -> Result<Family> {
    use FamilyId::*;
    let quad_bound = |q: QuadExt| Bound::quad(q);
    let (n_ambient, dim, substitution, range, spectrum) = match id {
        SphereG1 { n } => {
            if n < 2 {
                return Err(invalid("sphere g=1 requires n >= 2"));
            }
            let spectrum = vec![PrincipalCurvature::rational("cot x", RationalFunction::param(), n - 1)];
            (n, n - 1, Substitution::CotLevelAngle { g: 1 }, Interval::real_line(), spectrum)
        }
        SphereG2 { n, p } => {
            if p < 2 {
                return Err(invalid("sphere g=2 requires p >= 2"));
            }
            if p > (n + 1) / 2 {
                return Err(invalid(format!("sphere g=2 requires p <= [(n+1)/2] = {}", (n + 1) / 2)));
            }
            let spectrum = isoparametric_spectrum(2, p - 1, n - p);
            (n, n - 1, Substitution::CotLevelAngle { g: 2 }, Interval::above(Bound::Rat(int(0))), spectrum)
        }
        SphereG3 { mult } => {
            if ![1, 2, 4, 8].contains(&mult) {
                return Err(invalid("sphere g=3 requires m1 = m2 in {1, 2, 4, 8}"));
            }
            let lo = QuadExt::new(int(0), rat(1, 3), 3).expect("square-free");
            let spectrum = isoparametric_spectrum(3, mult, mult);
            (3 * mult + 1, 3 * mult, Substitution::CotLevelAngle { g: 3 }, Interval::above(quad_bound(lo)), spectrum)
        }
        SphereG4 { m1, m2 } => {
            if m1 < 1 || m2 < 1 {
                return Err(invalid("sphere g=4 requires m1 >= 1 and m2 >= 1"));
            }
            let dim = 2 * (m1 + m2);
            let spectrum = isoparametric_spectrum(4, m1, m2);
            (dim + 1, dim, Substitution::CotLevelAngle { g: 4 }, Interval::above(Bound::Rat(int(1))), spectrum)
        }
        SphereG6 { mult } => {
            if ![1, 2].contains(&mult) {
                return Err(invalid("sphere g=6 requires m1 = m2 in {1, 2}"));
            }
            let lo = QuadExt::sqrt(3).expect("square-free");
            let spectrum = isoparametric_spectrum(6, mult, mult);
            (6 * mult + 1, 6 * mult, Substitution::CotLevelAngle { g: 6 }, Interval::above(quad_bound(lo)), spectrum)
        }
        CpA { p, q } => {
            if q == 0 {
                return Err(invalid("A-type requires 0 < q"));
            }
            if p > q {
                return Err(invalid("A-type requires p <= q"));
            }
            let n = p + q + 1;
            let spectrum = vec![
                PrincipalCurvature::rational("-tan u", neg_tan_u(), 2 * p),
                PrincipalCurvature::rational("cot u", cot_u(), 2 * q),
                PrincipalCurvature::rational("2cot 2u", two_cot_2u(), 1),
            ];
            (n, 2 * n - 1, Substitution::CotRadius, Interval::above(Bound::Rat(int(0))), spectrum)
        }
        CpB { n } => {
            if n < 2 {
                return Err(invalid("B-type requires m = n + 1 >= 3"));
            }
            let spectrum = vec![
                PrincipalCurvature::rational("-cot u", neg_cot_u(), n - 1),
                PrincipalCurvature::rational("tan u", tan_u(), n - 1),
                PrincipalCurvature::rational("2tan 2u", two_tan_2u(), 1),
            ];
            (n, 2 * n - 1, Substitution::CotRadius, Interval::above(Bound::Rat(int(1))), spectrum)
        }
        CpC { n } => {
            if n < 3 {
                return Err(invalid("C-type requires n >= 3"));
            }
            (n, 2 * n - 1, Substitution::CotRadius, Interval::above(Bound::Rat(int(1))), tube_spectrum(n - 3, 2))
        }
        CpD => (9, 17, Substitution::CotRadius, Interval::above(Bound::Rat(int(1))), tube_spectrum(4, 4)),
        CpE => (15, 29, Substitution::CotRadius, Interval::above(Bound::Rat(int(1))), tube_spectrum(8, 6)),
        HpGeodesicSphere { n } => {
            if n < 2 {
                return Err(invalid("quaternionic families require n >= 2"));
            }
            let spectrum = vec![
                PrincipalCurvature::rational("cot u", cot_u(), 4 * (n - 1)),
                PrincipalCurvature::rational("2cot 2u", two_cot_2u(), 3),
            ];
            (n, 4 * n - 1, Substitution::CotRadius, Interval::above(Bound::Rat(int(0))), spectrum)
        }
        HpCpTube { n } => {
            if n < 2 {
                return Err(invalid("quaternionic families require n >= 2"));
            }
            let spectrum = vec![
                PrincipalCurvature::rational("cot u", cot_u(), 2 * (n - 1)),
                PrincipalCurvature::rational("-tan u", neg_tan_u(), 2 * (n - 1)),
                PrincipalCurvature::rational("2cot 2u", two_cot_2u(), 1),
                PrincipalCurvature::rational("-2tan 2u", -&two_tan_2u(), 2),
            ];
            (n, 4 * n - 1, Substitution::CotRadius, Interval::above(Bound::Rat(int(1))), spectrum)
        }
        HpHpkTube { n, k } => {
            if n < 2 {
                return Err(invalid("quaternionic families require n >= 2"));
            }
            if k < 1 || k > n - 1 {
                return Err(invalid("tube over HP^k requires 1 <= k <= n - 1"));
            }
            let spectrum = vec![
                PrincipalCurvature::rational("cot u", cot_u(), 4 * (n - k - 1)),
                PrincipalCurvature::rational("-tan u", neg_tan_u(), 4 * k),
                PrincipalCurvature::rational("2cot 2u", two_cot_2u(), 3),
            ];
            (n, 4 * n - 1, Substitution::CotRadius, Interval::above(Bound::Rat(int(1))), spectrum)
        }
    };
    let kind = id.ambient_kind();
    let family = Family {
        id,
        ambient: AmbientSpace { kind, c: AmbientSpace::default_c(kind), n: n_ambient },
        dim,
        substitution,
        range,
        spectrum,
    };
    let total: u32 = family.spectrum.iter().map(PrincipalCurvature::total_multiplicity).sum();
    if total != family.dim {
        return Err(invalid(format!("multiplicities sum to {total}, expected dim M = {}", family.dim)));
    }
    Ok(family)
}

/// Tubes of types C, D, E: `−cot u, cot(π/4−u), tan u, cot(3π/4−u), −2cot 2u`.
fn tube_spectrum(m_outer: u32, m_inner: u32) -> Vec<PrincipalCurvature> {
    vec![
        PrincipalCurvature::rational("-cot u", neg_cot_u(), m_outer),
        PrincipalCurvature::rational("cot(π/4 - u)", cot_quarter_minus_u(), m_inner),
        PrincipalCurvature::rational("cot(π/2 - u)", tan_u(), m_outer),
        PrincipalCurvature::rational("cot(3π/4 - u)", cot_three_quarter_minus_u(), m_inner),
        PrincipalCurvature::rational("-2cot 2u", -&two_cot_2u(), 1),
    ]
}

impl Family {
    /// Overrides the ambient curvature constant (thresholds scale with it).
    pub fn with_ambient_c(mut self, c: Rational) -> Self {
        self.ambient.c = c;
        self
    }

    /// Symbol used for the parameter in printed formulas.
    pub fn variable(&self) -> &'static str {
        "t"
    }
}

/// `dim M · H = Σ mᵢ λᵢ`.
pub fn mean_curvature(f: &Family) -> RationalFunction {
    f.spectrum.iter().fold(RationalFunction::zero(), |acc, pc| {
        let m = int(pc.multiplicity as i64);
        let term = match &pc.value {
            CurvatureValue::Rational(l) => l.scale(&m),
            CurvatureValue::ConjugatePair(b) => b.sum().scale(&m),
        };
        &acc + &term
    })
}

/// `‖B‖² = Σ mᵢ λᵢ²`.
pub fn second_form_norm2(f: &Family) -> RationalFunction {
    f.spectrum.iter().fold(RationalFunction::zero(), |acc, pc| {
        let m = int(pc.multiplicity as i64);
        let term = match &pc.value {
            CurvatureValue::Rational(l) => l.square().scale(&m),
            CurvatureValue::ConjugatePair(b) => b.sum_of_squares().scale(&m),
        };
        &acc + &term
    })
}

/// The constant value of `‖B‖²` characterising nonminimal biharmonic members:
/// `c·dim M` in spheres, `(n+1)c/2` in `CP^n`, `(n+2)c` in `HP^n`.
pub fn biharmonic_threshold(f: &Family) -> Rational {
    let c = &f.ambient.c;
    let n = int(f.ambient.n as i64);
    match f.ambient.kind {
        AmbientKind::Sphere => c * int(f.dim as i64),
        AmbientKind::ComplexProjective => (n + int(1)) * c / int(2),
        AmbientKind::QuaternionProjective => (n + int(2)) * c,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(c: &[i64]) -> RationalPoly {
        RationalPoly::from_ints(c)
    }

    #[test]
    fn a_type_with_p_zero() {
        let f = build_family(FamilyId::CpA { p: 0, q: 4 }).unwrap();
        assert_eq!(f.dim, 9);
        assert_eq!(f.ambient.n, 5);
        let mults: Vec<_> = f.spectrum.iter().map(|c| (c.label.as_str(), c.multiplicity)).collect();
        assert_eq!(mults, [("-tan u", 0), ("cot u", 8), ("2cot 2u", 1)]);
    }

    #[test]
    fn quaternionic_geodesic_sphere() {
        let f = build_family(FamilyId::HpGeodesicSphere { n: 2 }).unwrap();
        assert_eq!(f.dim, 7);
        let mults: Vec<_> = f.spectrum.iter().map(|c| (c.label.as_str(), c.multiplicity)).collect();
        assert_eq!(mults, [("cot u", 4), ("2cot 2u", 3)]);
        assert_eq!(biharmonic_threshold(&f), int(16));
    }

    #[test]
    fn sphere_g1_single_curvature() {
        let f = build_family(FamilyId::SphereG1 { n: 6 }).unwrap();
        assert_eq!(f.spectrum.len(), 1);
        assert_eq!(f.spectrum[0].multiplicity, 5);
        assert_eq!(f.range, Interval::real_line());
    }

    #[test]
    fn thresholds() {
        assert_eq!(biharmonic_threshold(&build_family(FamilyId::SphereG2 { n: 4, p: 2 }).unwrap()), int(3));
        assert_eq!(biharmonic_threshold(&build_family(FamilyId::CpD).unwrap()), int(20));
        let f = build_family(FamilyId::CpD).unwrap().with_ambient_c(int(2));
        assert_eq!(biharmonic_threshold(&f), int(10));
    }

    #[test]
    fn a_type_mean_curvature_and_norm() {
        for (pp, q) in [(0u32, 1u32), (1, 3), (2, 2)] {
            let f = build_family(FamilyId::CpA { p: pp, q }).unwrap();
            let h = mean_curvature(&f);
            let (a, b) = ((2 * q + 1) as i64, (2 * pp + 1) as i64);
            assert_eq!(h, RationalFunction::new(p(&[-b, 0, a]), p(&[0, 1])).unwrap());
            let b2 = second_form_norm2(&f);
            assert_eq!(b2, RationalFunction::new(p(&[b, 0, -2, 0, a]), p(&[0, 0, 1])).unwrap());
        }
    }

    #[test]
    fn a_type_symmetric_case_is_minimal_at_one() {
        let f = build_family(FamilyId::CpA { p: 2, q: 2 }).unwrap();
        assert_eq!(mean_curvature(&f).eval(&int(1)), Some(int(0)));
    }

    #[test]
    fn hpk_tube_norm() {
        let (n, k) = (5i64, 2i64);
        let f = build_family(FamilyId::HpHpkTube { n: 5, k: 2 }).unwrap();
        let want = RationalFunction::new(p(&[4 * k + 3, 0, -6, 0, 4 * n - 4 * k - 1]), p(&[0, 0, 1])).unwrap();
        assert_eq!(second_form_norm2(&f), want);
    }

    #[test]
    fn g4_norm_matches_bracket_form() {
        let (m1, m2) = (2i64, 3i64);
        let f = build_family(FamilyId::SphereG4 { m1: 2, m2: 3 }).unwrap();
        let y = RationalFunction::param();
        let inv = y.recip().unwrap();
        let r = RationalFunction::new(p(&[-1, 1]), p(&[1, 1])).unwrap();
        let want = &(&y.square() + &inv.square()).scale(&int(m1))
            + &(&r.square() + &r.recip().unwrap().square()).scale(&int(m2));
        assert_eq!(second_form_norm2(&f), want);
    }

    #[test]
    fn g2_minimality_in_half_angle_form() {
        // (p − 1)y − (n − p)/y vanishes iff (p − 1)y² = n − p.
        let f = build_family(FamilyId::SphereG2 { n: 9, p: 3 }).unwrap();
        let h = mean_curvature(&f);
        assert!(h.num().is_proportional(&p(&[-6, 0, 2])));
    }

    #[test]
    fn multiplicities_sum_to_dimension() {
        let ids = [
            FamilyId::SphereG3 { mult: 8 },
            FamilyId::SphereG6 { mult: 2 },
            FamilyId::CpC { n: 7 },
            FamilyId::CpE,
            FamilyId::HpCpTube { n: 4 },
        ];
        for id in ids {
            let f = build_family(id).unwrap();
            let s: u32 = f.spectrum.iter().map(|c| c.total_multiplicity()).sum();
            assert_eq!(s, f.dim, "{id}");
        }
    }

    #[test]
    fn constraint_violations_name_the_inequality() {
        let e = build_family(FamilyId::CpA { p: 3, q: 1 }).unwrap_err();
        assert!(e.to_string().contains("p <= q"));
        let e = build_family(FamilyId::HpHpkTube { n: 3, k: 3 }).unwrap_err();
        assert!(e.to_string().contains("1 <= k <= n - 1"));
        assert!(build_family(FamilyId::SphereG3 { mult: 3 }).is_err());
        assert!(build_family(FamilyId::SphereG2 { n: 5, p: 4 }).is_err());
    }

    #[test]
    fn surd_families_match_trigonometric_sums() {
        for (id, g) in [(FamilyId::SphereG3 { mult: 2 }, 3u32), (FamilyId::SphereG6 { mult: 1 }, 6)] {
            let f = build_family(id).unwrap();
            let m = if g == 3 { 2.0 } else { 1.0 };
            for x in [0.3f64, 1.1, 2.9] {
                let theta = x / g as f64;
                let y = 1.0 / theta.tan();
                let cot = |k: u32| 1.0 / (theta + k as f64 * std::f64::consts::PI / g as f64).tan();
                let h: f64 = (0..g).map(|k| m * cot(k)).sum();
                let b: f64 = (0..g).map(|k| m * cot(k).powi(2)).sum();
                let yq = Rational::from_float(y).unwrap();
                let got_h = crate::poly::rational::to_f64(&mean_curvature(&f).eval(&yq).unwrap());
                let got_b = crate::poly::rational::to_f64(&second_form_norm2(&f).eval(&yq).unwrap());
                assert!((got_h - h).abs() < 1e-9 * (1.0 + h.abs()), "{id} H at x={x}");
                assert!((got_b - b).abs() < 1e-9 * (1.0 + b), "{id} B at x={x}");
            }
        }
    }
}
