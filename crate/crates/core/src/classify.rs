//! Minimality and biharmonicity equations for a family, certified roots on the
//! admissible range, nonexistence certificates and comparison against displayed formulas.

use std::cmp::Ordering;

use num_traits::{One, Signed, Zero};
use rayon::prelude::*;
use serde::Serialize;

use crate::catalog::reference::{references, Quantity, ReferenceFormula, RootVariable};
use crate::catalog::{
    biharmonic_threshold, build_family, mean_curvature, second_form_norm2, FamilyId, Family, Substitution,
};
use crate::error::{Error, Result};
use crate::poly::rational::{parse_rational, pow10, rational_string};
use crate::poly::transcendental::{arccot_interval, sqrt_enclosure};
use crate::poly::{
    certify_sign, count_roots, deflate_endpoint_roots, format_significant, int, isolate, isolate_and_refine, Bound,
    Bracket, DecimalMode, Interval, IsolatedRoot, Rational, RationalFunction, RationalPoly, SignCertificate,
};

/// Digits used for transcendental enclosures regardless of the printed precision.
const ENCLOSURE_DIGITS: u32 = 50;

/// A polynomial equation in the family parameter with its denominator certified
/// nonvanishing on the admissible range.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Equation {
    /// Square-free, primitive, positive leading coefficient.
    pub polynomial: RationalPoly,
    pub denominator: RationalPoly,
    /// Denominator with endpoint roots divided out, certified to have no roots inside.
    pub denominator_certificate: SignCertificate,
    pub deflated_endpoints: Vec<Bound>,
}

impl Equation {
    /// The polynomial in `X = t²` when it only has even powers.
    pub fn in_x(&self) -> Option<RationalPoly> {
        self.polynomial.even_reduction()
    }

    pub fn display(&self) -> String {
        display_equation(&self.polynomial)
    }
}

fn display_equation(p: &RationalPoly) -> String {
    match p.even_reduction() {
        Some(q) => q.display_in("X"),
        None => p.display_in("t"),
    }
}

fn normalise(p: &RationalPoly) -> Result<RationalPoly> {
    Ok(p.square_free_part()?.primitive())
}

fn build_equation(f: &RationalFunction, range: &Interval, what: &str) -> Result<Equation> {
    let num = normalise(f.num())?;
    for b in [&range.lo, &range.hi] {
        if b.is_finite() && b.sign_of(&num) == 0 {
            return Err(Error::EndpointRoot(format!("{b} (range endpoint is a root of the {what} equation)")));
        }
    }
    let den = f.den().clone();
    let (deflated, removed) = deflate_endpoint_roots(&den, range)?;
    let cert = certify_sign(&deflated, range)?.ok_or_else(|| {
        Error::InvalidParameter(format!("denominator of the {what} equation vanishes inside the range"))
    })?;
    Ok(Equation { polynomial: num, denominator: den, denominator_certificate: cert, deflated_endpoints: removed })
}

/// Numerator of `dim M · H`, reduced.
pub fn minimality_equation(f: &Family) -> Result<Equation> {
    let h = mean_curvature(f);
    if h.is_zero() {
        return Err(Error::MinimalForAllParameters);
    }
    build_equation(&h, &f.range, "minimality")
}

/// `‖B‖² − threshold` as a rational function.
pub fn biharmonic_excess(f: &Family) -> RationalFunction {
    &second_form_norm2(f) - &RationalFunction::constant(biharmonic_threshold(f))
}

/// Numerator of `‖B‖² − threshold`, reduced.
pub fn biharmonicity_equation(f: &Family) -> Result<Equation> {
    build_equation(&biharmonic_excess(f), &f.range, "biharmonicity")
}

/// Exact residual of a root: the defining rational function evaluated at a point
/// within `10^(−2·digits)` of the root.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Residual {
    /// True when the root is rational and the residual is exactly zero.
    pub exact: bool,
    pub magnitude: String,
    /// `|residual| < 10^(1 − digits)`.
    pub within_tolerance: bool,
}

/// A root of an equation together with every derived geometric quantity.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RootReport {
    pub t: IsolatedRoot,
    #[serde(rename = "X", skip_serializing_if = "Option::is_none")]
    pub x: Option<String>,
    #[serde(rename = "X_exact", skip_serializing_if = "Option::is_none", serialize_with = "ser_opt_rational")]
    pub x_exact: Option<Rational>,
    /// Tube radius `u = arccot t`.
    #[serde(rename = "u", skip_serializing_if = "Option::is_none")]
    pub radius: Option<String>,
    /// Isoparametric angle `x = g·arccot t`.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub angle: Option<String>,
    /// Isoparametric level `cos x`.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub level: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none", serialize_with = "ser_opt_rational")]
    pub level_exact: Option<Rational>,
    #[serde(skip_serializing_if = "Option::is_none", serialize_with = "ser_opt_rational")]
    pub level_squared_exact: Option<Rational>,
    pub residual: Residual,
}

fn ser_opt_rational<S: serde::Serializer>(q: &Option<Rational>, s: S) -> std::result::Result<S::Ok, S::Error> {
    match q {
        Some(q) => s.serialize_str(&rational_string(q)),
        None => s.serialize_none(),
    }
}

fn ser_rational<S: serde::Serializer>(q: &Rational, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&rational_string(q))
}

/// `‖B‖² − threshold` has no zero on the range; `excess_sign` is its constant sign.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct NonexistenceCertificate {
    pub numerator: SignCertificate,
    pub denominator: SignCertificate,
    pub excess_sign: i32,
}

impl NonexistenceCertificate {
    pub fn verify(&self) -> bool {
        self.numerator.verify() && self.denominator.verify()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum LedgerStatus {
    Agrees,
    Differs,
}

/// A root of a displayed (not derived) equation.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LedgerRoot {
    pub t: String,
    #[serde(rename = "X", skip_serializing_if = "Option::is_none")]
    pub x: Option<String>,
    #[serde(rename = "u", skip_serializing_if = "Option::is_none")]
    pub u: Option<String>,
    pub in_range: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LedgerEntry {
    pub subject: String,
    pub source: String,
    pub displayed: String,
    pub derived: String,
    pub status: LedgerStatus,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub displayed_roots: Vec<LedgerRoot>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ClassificationResult {
    #[serde(serialize_with = "ser_family")]
    pub family: Family,
    pub digits: u32,
    pub mode: DecimalMode,
    #[serde(serialize_with = "ser_rf")]
    pub mean_curvature: RationalFunction,
    #[serde(serialize_with = "ser_rf")]
    pub second_form_norm2: RationalFunction,
    #[serde(serialize_with = "ser_rational")]
    pub threshold: Rational,
    #[serde(serialize_with = "ser_equation")]
    pub minimality_equation: Equation,
    #[serde(serialize_with = "ser_equation")]
    pub biharmonicity_equation: Equation,
    pub minimal: Vec<RootReport>,
    pub biharmonic: Vec<RootReport>,
    pub nonminimal_biharmonic: Vec<RootReport>,
    pub nonexistence_certificate: Option<NonexistenceCertificate>,
    pub ledger: Vec<LedgerEntry>,
}

fn ser_family<S: serde::Serializer>(f: &Family, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&f.id.to_string())
}

fn ser_rf<S: serde::Serializer>(f: &RationalFunction, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&f.display_in("t"))
}

fn ser_equation<S: serde::Serializer>(e: &Equation, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&e.display())
}

/// Context shared by every root report of one family.
struct RootContext<'a> {
    family: &'a Family,
    digits: u32,
    mode: DecimalMode,
}

impl RootContext<'_> {
    fn report(&self, poly: &RationalPoly, root: IsolatedRoot, defining: &RationalFunction) -> RootReport {
        let mut bracket = root.bracket();
        keep_sign(&mut bracket, poly);

        let (x, x_exact) = match poly.even_reduction() {
            Some(xp) => {
                let (d, e) = square_decimal(&bracket, &xp, self.digits, self.mode);
                (Some(d), e)
            }
            None => (None, bracket.exact.as_ref().map(|t| t * t)),
        };

        let mut radius = None;
        let mut angle = None;
        let mut level = None;
        let mut level_exact = None;
        let mut level_squared_exact = None;
        match self.family.substitution {
            Substitution::CotRadius => {
                let mut b = bracket.clone();
                radius = Some(b.decimal_of(poly, self.digits, self.mode, None, |lo, hi| {
                    arccot_interval(lo, hi, ENCLOSURE_DIGITS)
                }));
            }
            Substitution::CotLevelAngle { g } => {
                let gq = int(g as i64);
                let mut b = bracket.clone();
                angle = Some(b.decimal_of(poly, self.digits, self.mode, None, |lo, hi| {
                    let (a, c) = arccot_interval(lo, hi, ENCLOSURE_DIGITS);
                    (a * &gq, c * &gq)
                }));
                let map = LevelMap::new(g);
                let sq = x_exact.as_ref().map(|xq| map.level_squared(xq));
                let exact = match (&bracket.exact, &x_exact) {
                    _ if map.vanishes_at(&bracket, poly) => Some(int(0)),
                    (Some(t), _) => map.level_at_rational(t),
                    (None, Some(xq)) if g % 2 == 0 => Some(map.level_from_square(xq)),
                    _ => sq.as_ref().and_then(rational_sqrt).map(|r| {
                        if r.is_zero() {
                            r
                        } else {
                            r * int(map.sign_near(&bracket, poly) as i64)
                        }
                    }),
                };
                let mut b = bracket.clone();
                level = Some(b.decimal_of(poly, self.digits, self.mode, exact.clone(), |lo, hi| {
                    (map.enclose(lo, ENCLOSURE_DIGITS).0, map.enclose(hi, ENCLOSURE_DIGITS).1)
                }));
                level_exact = exact;
                level_squared_exact = sq;
            }
        }

        let residual = residual(&bracket, poly, defining, self.digits);
        RootReport { t: root, x, x_exact, radius, angle, level, level_exact, level_squared_exact, residual }
    }
}

/// Refines a bracket until it excludes zero (unless the root is exactly zero).
fn keep_sign(b: &mut Bracket, p: &RationalPoly) {
    while b.exact.is_none() && b.low.is_negative() && b.high.is_positive() {
        b.bisect(p);
    }
}

/// Decimal and (when rational) exact value of `t²` for a root bracketed in `b`.
fn square_decimal(b: &Bracket, xp: &RationalPoly, digits: u32, mode: DecimalMode) -> (String, Option<Rational>) {
    if let Some(t) = &b.exact {
        let v = t * t;
        return (format_significant(&v, digits, mode), Some(v));
    }
    let (l2, h2) = (&b.low * &b.low, &b.high * &b.high);
    let (low, high) = if l2 < h2 { (l2, h2) } else { (h2, l2) };
    let mut xb = Bracket { low, high, exact: None };
    let sf = xp.square_free_part().expect("nonzero");
    xb.identify_rational(&sf);
    let d = xb.decimal(&sf, digits, mode);
    (d, xb.exact)
}

fn residual(b: &Bracket, p: &RationalPoly, f: &RationalFunction, digits: u32) -> Residual {
    let tol = Rational::new(int(10).numer().clone(), pow10(digits));
    if let Some(e) = &b.exact {
        let v = f.eval(e).unwrap_or_else(Rational::one).abs();
        return Residual { exact: v.is_zero(), magnitude: format_significant(&v, 3, DecimalMode::Round), within_tolerance: v < tol };
    }
    let mut b = b.clone();
    let width = Rational::new(num_bigint::BigInt::one(), pow10(2 * digits));
    let sf = p.square_free_part().expect("nonzero");
    b.refine_to_width(&sf, &width);
    let v = f.eval(&b.midpoint()).map(|v| v.abs());
    match v {
        Some(v) => Residual {
            exact: v.is_zero(),
            magnitude: format_significant(&v, 3, DecimalMode::Round),
            within_tolerance: v < tol,
        },
        None => Residual { exact: false, magnitude: "undefined".into(), within_tolerance: false },
    }
}

/// `cos(g·θ)` as a function of `y = cot θ`: `Re((y + i)^g) / (1 + y²)^(g/2)`.
struct LevelMap {
    g: u32,
    real_part: RationalPoly,
}

impl LevelMap {
    fn new(g: u32) -> Self {
        // Re((y + i)^g) = Σ_{k even} C(g,k) y^(g−k) (−1)^(k/2)
        let mut coeffs = vec![int(0); g as usize + 1];
        let mut binom = int(1);
        for k in 0..=g {
            if k % 2 == 0 {
                let s = if (k / 2) % 2 == 0 { int(1) } else { int(-1) };
                coeffs[(g - k) as usize] = &binom * s;
            }
            binom = binom * int((g - k) as i64) / int(k as i64 + 1);
        }
        LevelMap { g, real_part: RationalPoly::new(coeffs) }
    }

    fn level_squared_at(&self, y: &Rational) -> Rational {
        let r = self.real_part.eval(y);
        let base = int(1) + y * y;
        &r * &r / num_traits::pow(base, self.g as usize)
    }

    /// `level²` as a function of `X = y²` (well defined since `Re((y+i)^g)²` is even in `y`).
    fn level_squared(&self, x: &Rational) -> Rational {
        let r2 = (&self.real_part * &self.real_part).even_reduction().expect("even").eval(x);
        r2 / num_traits::pow(int(1) + x, self.g as usize)
    }

    /// For even `g` the level is itself a function of `X`.
    fn level_from_square(&self, x: &Rational) -> Rational {
        let r = self.real_part.even_reduction().expect("even g").eval(x);
        r / num_traits::pow(int(1) + x, (self.g / 2) as usize)
    }

    fn level_at_rational(&self, y: &Rational) -> Option<Rational> {
        if self.g % 2 == 0 {
            return Some(self.real_part.eval(y) / num_traits::pow(int(1) + y * y, (self.g / 2) as usize));
        }
        let root = rational_sqrt(&self.level_squared_at(y))?;
        Some(if self.real_part.eval(y).is_negative() { -root } else { root })
    }

    /// Whether the level is exactly zero at the root bracketed by `b`, decided through
    /// the common factor of `p` and `Re((y + i)^g)`.
    fn vanishes_at(&self, b: &Bracket, p: &RationalPoly) -> bool {
        if let Some(e) = &b.exact {
            return self.real_part.eval(e).is_zero();
        }
        let common = match p.gcd(&self.real_part) {
            Ok(c) if !c.is_constant() => c,
            _ => return false,
        };
        let i = Interval { lo: Bound::Rat(b.low.clone()), hi: Bound::Rat(b.high.clone()) };
        count_roots(&common, &i).map_or(false, |n| n > 0)
    }

    /// Sign of the level at the root bracketed by `b`, assuming it is nonzero.
    fn sign_near(&self, b: &Bracket, p: &RationalPoly) -> i32 {
        let mut b = b.clone();
        let sf = p.square_free_part().expect("nonzero");
        loop {
            let (l, h) = (self.real_part.eval(&b.low), self.real_part.eval(&b.high));
            if l.is_positive() && h.is_positive() {
                return 1;
            }
            if l.is_negative() && h.is_negative() {
                return -1;
            }
            b.bisect(&sf);
        }
    }

    /// Enclosure of the level at a rational `y`.
    fn enclose(&self, y: &Rational, digits: u32) -> (Rational, Rational) {
        if let Some(v) = self.level_at_rational(y) {
            return (v.clone(), v);
        }
        let (lo, hi) = sqrt_enclosure(&self.level_squared_at(y), digits);
        if self.real_part.eval(y).is_negative() {
            (-hi, -lo)
        } else {
            (lo, hi)
        }
    }
}

/// Exact square root of a nonnegative rational when it is rational.
fn rational_sqrt(q: &Rational) -> Option<Rational> {
    if q.is_negative() {
        return None;
    }
    let (n, d) = (q.numer().sqrt(), q.denom().sqrt());
    (&n * &n == *q.numer() && &d * &d == *q.denom()).then(|| Rational::new(n, d))
}

/// Classifies one family at the given printed precision.
pub fn classify(f: &Family, digits: u32, mode: DecimalMode) -> Result<ClassificationResult> {
    classify_inner(f, digits, mode).map_err(|e| e.in_family(f.id.to_string()))
}

fn classify_inner(f: &Family, digits: u32, mode: DecimalMode) -> Result<ClassificationResult> {
    if !(1..=50).contains(&digits) {
        return Err(Error::InvalidParameter("precision_digits must lie in [1, 50]".into()));
    }
    let h = mean_curvature(f);
    let excess = biharmonic_excess(f);
    let min_eq = minimality_equation(f)?;
    let bih_eq = biharmonicity_equation(f)?;
    let ctx = RootContext { family: f, digits, mode };

    let minimal = roots_of(&ctx, &min_eq, &h)?;
    let biharmonic = roots_of(&ctx, &bih_eq, &excess)?;
    let nonminimal_biharmonic = separate_nonminimal(&biharmonic, &bih_eq.polynomial, &min_eq.polynomial)?;
    let nonexistence_certificate = if biharmonic.is_empty() { nonexistence(&bih_eq, &excess, &f.range)? } else { None };
    let ledger = ledger(f, &h, &second_form_norm2(f), &min_eq, &bih_eq, &biharmonic, &minimal, digits, mode)?;

    Ok(ClassificationResult {
        family: f.clone(),
        digits,
        mode,
        mean_curvature: h,
        second_form_norm2: second_form_norm2(f),
        threshold: biharmonic_threshold(f),
        minimality_equation: min_eq,
        biharmonicity_equation: bih_eq,
        minimal,
        biharmonic,
        nonminimal_biharmonic,
        nonexistence_certificate,
        ledger,
    })
}

fn roots_of(ctx: &RootContext<'_>, eq: &Equation, defining: &RationalFunction) -> Result<Vec<RootReport>> {
    let roots = isolate_and_refine(&eq.polynomial, &ctx.family.range, ctx.digits, ctx.mode)?;
    Ok(roots.into_par_iter().map(|r| ctx.report(&eq.polynomial, r, defining)).collect())
}

/// Biharmonic roots that are not roots of the minimality equation, decided exactly
/// through the common factor of the two equations.
fn separate_nonminimal(
    biharmonic: &[RootReport],
    bih: &RationalPoly,
    min: &RationalPoly,
) -> Result<Vec<RootReport>> {
    let common = bih.gcd(min)?;
    let mut out = Vec::new();
    for r in biharmonic {
        let shared = if common.is_constant() {
            false
        } else {
            match &r.t.exact {
                Some(e) => common.eval(e).is_zero(),
                None => count_roots(&common, &r.t.interval())? > 0,
            }
        };
        if !shared {
            out.push(r.clone());
        }
    }
    Ok(out)
}

fn nonexistence(eq: &Equation, excess: &RationalFunction, range: &Interval) -> Result<Option<NonexistenceCertificate>> {
    let Some(numerator) = certify_sign(&eq.polynomial, range)? else {
        return Ok(None);
    };
    let excess_sign = excess.eval(&numerator.sample).map_or(0, |v| crate::poly::sturm::signum(&v));
    Ok(Some(NonexistenceCertificate { numerator, denominator: eq.denominator_certificate.clone(), excess_sign }))
}

/// Upper parameter bound for isolating roots of displayed equations when reporting them.
fn report_domain(f: &Family) -> Interval {
    match f.range.lo.cmp_rational(&int(0)) {
        Ordering::Less => Interval::real_line(),
        _ => Interval::above(Bound::Rat(int(0))),
    }
}

fn ledger_roots(f: &Family, p: &RationalPoly, digits: u32, mode: DecimalMode) -> Result<Vec<LedgerRoot>> {
    let domain = report_domain(f);
    let p = normalise(p)?;
    let (p, _) = deflate_endpoint_roots(&p, &domain)?;
    if p.is_constant() {
        return Ok(Vec::new());
    }
    let roots = isolate_and_refine(&p, &domain, digits, mode)?;
    let xp = p.even_reduction();
    Ok(roots
        .into_iter()
        .map(|r| {
            let mut b = r.bracket();
            keep_sign(&mut b, &p);
            let x = xp.as_ref().map(|xp| square_decimal(&b, xp, digits, mode).0);
            let u = (f.substitution == Substitution::CotRadius).then(|| {
                let mut b = b.clone();
                b.decimal_of(&p, digits, mode, None, |lo, hi| arccot_interval(lo, hi, ENCLOSURE_DIGITS))
            });
            let in_range = f.range.lo.cmp_rational(&b.low) != Ordering::Greater
                && f.range.hi.cmp_rational(&b.high) != Ordering::Less
                && !(f.range.lo.cmp_rational(&b.midpoint()) == Ordering::Equal);
            LedgerRoot { t: r.decimal, x, u, in_range }
        })
        .collect())
}

fn equations_agree(a: &RationalPoly, b: &RationalPoly) -> Result<bool> {
    Ok(normalise(a)?.is_proportional(&normalise(b)?))
}

fn formulas_agree(q: Quantity, derived: &RationalFunction, displayed: &RationalFunction) -> bool {
    match q {
        Quantity::SecondFormNorm => derived == displayed,
        Quantity::MeanCurvature => {
            let lhs = derived.num() * displayed.den();
            let rhs = displayed.num() * derived.den();
            lhs.is_proportional(&rhs)
        }
        _ => unreachable!("equations compare as polynomials"),
    }
}

fn subject(q: Quantity) -> &'static str {
    match q {
        Quantity::MeanCurvature => "mean curvature (dim M times H)",
        Quantity::SecondFormNorm => "squared norm of the second fundamental form",
        Quantity::MinimalEquation => "minimality equation",
        Quantity::BiharmonicEquation => "biharmonicity equation",
    }
}

#[allow(clippy::too_many_arguments)]
fn ledger(
    f: &Family,
    h: &RationalFunction,
    b2: &RationalFunction,
    min_eq: &Equation,
    bih_eq: &Equation,
    biharmonic: &[RootReport],
    minimal: &[RootReport],
    digits: u32,
    mode: DecimalMode,
) -> Result<Vec<LedgerEntry>> {
    let refs = references(f.id);
    let mut out = Vec::new();
    let equation_refs: Vec<&ReferenceFormula> = refs
        .formulas
        .iter()
        .filter(|r| matches!(r.quantity, Quantity::MinimalEquation | Quantity::BiharmonicEquation))
        .collect();

    for r in &refs.formulas {
        let entry = match r.quantity {
            Quantity::MeanCurvature | Quantity::SecondFormNorm => {
                let derived = if r.quantity == Quantity::MeanCurvature { h } else { b2 };
                let ok = formulas_agree(r.quantity, derived, &r.value);
                LedgerEntry {
                    subject: subject(r.quantity).into(),
                    source: r.source.into(),
                    displayed: r.display.clone(),
                    derived: derived.display_in("t"),
                    status: if ok { LedgerStatus::Agrees } else { LedgerStatus::Differs },
                    displayed_roots: Vec::new(),
                    note: None,
                }
            }
            Quantity::MinimalEquation | Quantity::BiharmonicEquation => {
                let derived = if r.quantity == Quantity::MinimalEquation { min_eq } else { bih_eq };
                let displayed = r.value.num();
                let ok = equations_agree(displayed, &derived.polynomial)?;
                let displayed_roots = if ok { Vec::new() } else { ledger_roots(f, displayed, digits, mode)? };
                let mut same = Vec::new();
                for other in &equation_refs {
                    if other.source != r.source
                        && other.quantity == r.quantity
                        && equations_agree(other.value.num(), displayed)?
                    {
                        same.push(other.source);
                    }
                }
                let note = (!same.is_empty()).then(|| format!("equivalent to: {}", same.join("; ")));
                LedgerEntry {
                    subject: subject(r.quantity).into(),
                    source: r.source.into(),
                    displayed: r.display.clone(),
                    derived: derived.display(),
                    status: if ok { LedgerStatus::Agrees } else { LedgerStatus::Differs },
                    displayed_roots,
                    note,
                }
            }
        };
        out.push(entry);
    }

    for v in &refs.values {
        let derived_roots = match v.equation {
            Quantity::MinimalEquation => minimal,
            _ => biharmonic,
        };
        let pick = |rr: &RootReport| -> Option<String> {
            match v.variable {
                RootVariable::T => Some(rr.t.decimal.clone()),
                RootVariable::X => rr.x.clone(),
                RootVariable::U => rr.radius.clone(),
            }
        };
        let pick_ledger = |lr: &LedgerRoot| -> Option<String> {
            match v.variable {
                RootVariable::T => Some(lr.t.clone()),
                RootVariable::X => lr.x.clone(),
                RootVariable::U => lr.u.clone(),
            }
        };
        let candidates: Vec<String> = derived_roots.iter().filter_map(pick).collect();
        let ok = candidates.iter().any(|c| quoted_agrees(v.value, c));
        let mut note = None;
        if !ok {
            // Look for the quoted value among roots of the displayed equations.
            let mut hits = Vec::new();
            for r in equation_refs.iter().filter(|r| r.quantity == v.equation) {
                for lr in ledger_roots(f, r.value.num(), digits, mode)? {
                    if pick_ledger(&lr).is_some_and(|c| quoted_agrees(v.value, &c)) {
                        let place = if lr.in_range { "inside" } else { "outside" };
                        hits.push(format!("{} (root {place} the admissible range)", r.source));
                    }
                }
            }
            note = Some(if hits.is_empty() {
                "matches no derived or displayed root".to_string()
            } else {
                format!("matches a root of: {}", hits.join("; "))
            });
        }
        let var = match v.variable {
            RootVariable::T => "t",
            RootVariable::X => "X",
            RootVariable::U => "u",
        };
        out.push(LedgerEntry {
            subject: format!("quoted {var} for a root of the {}", subject(v.equation)),
            source: v.source.into(),
            displayed: v.value.into(),
            derived: if candidates.is_empty() { "no root in range".into() } else { candidates.join(", ") },
            status: if ok { LedgerStatus::Agrees } else { LedgerStatus::Differs },
            displayed_roots: Vec::new(),
            note,
        });
    }

    for bound in &refs.bounds {
        let excess = b2 - &RationalFunction::constant(bound.bound.clone());
        let (holds, attained) = nonnegative_on(&excess, &f.range)?;
        out.push(LedgerEntry {
            subject: "lower bound for the squared norm of the second fundamental form".into(),
            source: bound.source.into(),
            displayed: format!(">= {}", rational_string(&bound.bound)),
            derived: match (holds, attained) {
                (true, true) => "holds, attained inside the range".into(),
                (true, false) => "holds strictly on the range".into(),
                (false, _) => "fails somewhere on the range".into(),
            },
            status: if holds { LedgerStatus::Agrees } else { LedgerStatus::Differs },
            displayed_roots: Vec::new(),
            note: None,
        });
    }
    Ok(out)
}

/// Whether `f ≥ 0` on the open interval, and whether `f` vanishes there.
pub fn nonnegative_on(f: &RationalFunction, range: &Interval) -> Result<(bool, bool)> {
    let (num, _) = deflate_endpoint_roots(&normalise(f.num())?, range)?;
    let (den, _) = deflate_endpoint_roots(f.den(), range)?;
    let den_cert = certify_sign(&den, range)?
        .ok_or_else(|| Error::InvalidParameter("denominator vanishes inside the range".into()))?;
    let brackets = if num.is_constant() { Vec::new() } else { isolate(&num, range)? };
    let mut samples = Vec::new();
    let mut prev = range.lo.clone();
    for b in &brackets {
        samples.push(crate::poly::sturm::rational_between(&prev, &Bound::Rat(b.low.clone())));
        prev = Bound::Rat(b.high.clone());
    }
    samples.push(crate::poly::sturm::rational_between(&prev, &range.hi));
    let holds = samples.iter().all(|s| {
        f.eval(s).is_some_and(|v| !v.is_negative())
    });
    let _ = den_cert;
    Ok((holds, !brackets.is_empty()))
}

/// `|computed − quoted| ≤ ½·10^(−d)` where `d` is the number of decimals quoted.
fn quoted_agrees(quoted: &str, computed: &str) -> bool {
    let (Some(q), Some(c)) = (parse_rational(quoted), parse_rational(computed)) else {
        return false;
    };
    let decimals = quoted.split('.').nth(1).map_or(0, |s| s.len()) as u32;
    let half = Rational::new(num_bigint::BigInt::from(5), pow10(decimals + 1));
    // The computed value is itself rounded; allow one unit in its last place.
    let c_decimals = computed.split('.').nth(1).map_or(0, |s| s.len()) as u32;
    let slack = Rational::new(num_bigint::BigInt::one(), pow10(c_decimals));
    (q - c).abs() <= half + slack
}

/// One classified family in a sweep, or the reason it could not be classified.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SweepRow {
    pub family: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub result: Option<ClassificationResult>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
    /// Roots of the biharmonicity equation when the full classification failed.
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub biharmonic_fallback: Vec<RootReport>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SummaryRow {
    pub case: String,
    pub families: usize,
    pub outcome: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SweepReport {
    pub theorem: String,
    pub rows: Vec<SweepRow>,
    pub summary: Vec<SummaryRow>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Theorem {
    /// Isoparametric hypersurfaces of the unit sphere.
    Sphere,
    /// Homogeneous real hypersurfaces of complex projective space.
    ComplexProjective,
    /// Curvature-adapted real hypersurfaces of quaternionic projective space.
    QuaternionProjective,
}

impl Theorem {
    pub fn parse(s: &str) -> Option<Self> {
        match s {
            "4.1" | "sphere" => Some(Theorem::Sphere),
            "6.2" | "cp" => Some(Theorem::ComplexProjective),
            "7.3" | "hp" => Some(Theorem::QuaternionProjective),
            _ => None,
        }
    }

    pub fn label(&self) -> &'static str {
        match self {
            Theorem::Sphere => "4.1",
            Theorem::ComplexProjective => "6.2",
            Theorem::QuaternionProjective => "7.3",
        }
    }
}

/// Parameter bounds for sweeps.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SweepRange {
    pub n_min: u32,
    pub n_max: u32,
}

impl SweepRange {
    pub fn default_for(t: Theorem) -> Self {
        match t {
            Theorem::Sphere => SweepRange { n_min: 3, n_max: 10 },
            Theorem::ComplexProjective => SweepRange { n_min: 2, n_max: 12 },
            Theorem::QuaternionProjective => SweepRange { n_min: 2, n_max: 8 },
        }
    }
}

/// Families covered by a sweep, in report order.
pub fn sweep_families(t: Theorem, r: &SweepRange) -> Vec<FamilyId> {
    let ns = r.n_min..=r.n_max;
    let mut ids = Vec::new();
    match t {
        Theorem::Sphere => {
            ids.extend(ns.clone().map(|n| FamilyId::SphereG1 { n }));
            for n in ns.clone() {
                ids.extend((2..=(n + 1) / 2).map(|p| FamilyId::SphereG2 { n, p }));
            }
            ids.extend([1, 2, 4, 8].map(|mult| FamilyId::SphereG3 { mult }));
            for n in ns.clone() {
                if n % 2 == 1 {
                    let half = (n - 1) / 2;
                    ids.extend((1..half).map(|m1| FamilyId::SphereG4 { m1, m2: half - m1 }));
                }
            }
            ids.extend([1, 2].map(|mult| FamilyId::SphereG6 { mult }));
        }
        Theorem::ComplexProjective => {
            // A-type tubes are swept up to n = 10 (p + q <= 9) regardless of n_max.
            for n in r.n_min.max(2)..=r.n_max.min(10) {
                for p in 0..=(n - 1) / 2 {
                    ids.push(FamilyId::CpA { p, q: n - 1 - p });
                }
            }
            ids.extend(ns.clone().filter(|&n| n >= 2).map(|n| FamilyId::CpB { n }));
            ids.extend(ns.clone().filter(|&n| n >= 3).map(|n| FamilyId::CpC { n }));
            ids.push(FamilyId::CpD);
            ids.push(FamilyId::CpE);
        }
        Theorem::QuaternionProjective => {
            let ns: Vec<u32> = ns.filter(|&n| n >= 2).collect();
            ids.extend(ns.iter().map(|&n| FamilyId::HpGeodesicSphere { n }));
            ids.extend(ns.iter().map(|&n| FamilyId::HpCpTube { n }));
            for &n in &ns {
                ids.extend((1..n).map(|k| FamilyId::HpHpkTube { n, k }));
            }
        }
    }
    ids
}

fn sweep_row(id: FamilyId, digits: u32, mode: DecimalMode, ambient_c: Option<&Rational>) -> SweepRow {
    let label = id.to_string();
    let fam = match build_family(id) {
        Ok(s) => match ambient_c {
            Some(c) => s.with_ambient_c(c.clone()),
            None => s,
        },
        Err(e) => return SweepRow { family: label, result: None, error: Some(e.to_string()), biharmonic_fallback: Vec::new() },
    };
    match classify(&fam, digits, mode) {
        Ok(r) => SweepRow { family: label, result: Some(r), error: None, biharmonic_fallback: Vec::new() },
        Err(e) => {
            let ctx = RootContext { family: &fam, digits, mode };
            let fallback = biharmonicity_equation(&fam)
                .and_then(|eq| roots_of(&ctx, &eq, &biharmonic_excess(&fam)))
                .unwrap_or_default();
            SweepRow { family: label, result: None, error: Some(e.to_string()), biharmonic_fallback: fallback }
        }
    }
}

/// Classifies every family of a theorem in parallel; rows keep catalog order.
pub fn sweep(t: Theorem, range: &SweepRange, digits: u32, mode: DecimalMode, ambient_c: Option<&Rational>) -> SweepReport {
    let ids = sweep_families(t, range);
    let rows: Vec<SweepRow> = ids.par_iter().map(|&id| sweep_row(id, digits, mode, ambient_c)).collect();
    let summary = summarise(t, &rows);
    SweepReport { theorem: t.label().into(), rows, summary }
}

fn case_key(family: &str) -> String {
    family.split('(').next().unwrap_or(family).to_string()
}

fn summarise(t: Theorem, rows: &[SweepRow]) -> Vec<SummaryRow> {
    let mut keys: Vec<String> = Vec::new();
    for r in rows {
        let k = case_key(&r.family);
        if !keys.contains(&k) {
            keys.push(k);
        }
    }
    keys.into_iter()
        .map(|k| {
            let group: Vec<&SweepRow> = rows.iter().filter(|r| case_key(&r.family) == k).collect();
            let errors = group.iter().filter(|r| r.error.is_some()).count();
            let certified = group
                .iter()
                .filter(|r| r.result.as_ref().is_some_and(|x| x.nonexistence_certificate.is_some()))
                .count();
            let with_roots = group
                .iter()
                .filter(|r| r.result.as_ref().is_some_and(|x| !x.nonminimal_biharmonic.is_empty()))
                .count();
            let mut parts = Vec::new();
            if with_roots > 0 {
                parts.push(format!("{with_roots} with nonminimal biharmonic members"));
            }
            if certified > 0 {
                parts.push(format!("{certified} certified nonexistent"));
            }
            let only_minimal = group.len() - errors - certified - with_roots;
            if only_minimal > 0 {
                parts.push(format!("{only_minimal} biharmonic only where minimal"));
            }
            if errors > 0 {
                parts.push(format!("{errors} endpoint or parameter errors"));
            }
            let outcome = match (t, k.as_str()) {
                (Theorem::Sphere, "sphere-g1") if with_roots == group.len() => {
                    format!("small sphere at level +-1/sqrt(2) for all {}", group.len())
                }
                _ => parts.join("; "),
            };
            SummaryRow { case: k, families: group.len(), outcome }
        })
        .collect()
}
