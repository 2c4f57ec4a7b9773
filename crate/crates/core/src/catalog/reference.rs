//! Formulas and numerical values as displayed in the published derivations of each family.
//!
//! These are never used to classify anything. The classifier recomputes every quantity
//! from the spectrum and compares against these entries, recording each disagreement.

use serde::Serialize;

use super::FamilyId;
use crate::poly::{int, Rational, RationalFunction, RationalPoly};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Quantity {
    /// `dim M · H`, compared up to a nonzero constant factor.
    MeanCurvature,
    /// `‖B‖²`, compared exactly.
    SecondFormNorm,
    /// Polynomial whose admissible roots are the minimal members.
    MinimalEquation,
    /// Polynomial whose admissible roots are the nonminimal biharmonic members.
    BiharmonicEquation,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReferenceFormula {
    pub source: &'static str,
    pub quantity: Quantity,
    /// Expressed in the family parameter `t` (forms in `X = t²` are substituted).
    pub value: RationalFunction,
    /// Human-readable transcription.
    pub display: String,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum RootVariable {
    X,
    T,
    U,
}

/// A decimal value quoted for a root of the minimal or biharmonic equation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReferenceValue {
    pub source: &'static str,
    pub equation: Quantity,
    pub variable: RootVariable,
    pub value: &'static str,
}

/// A claimed lower bound `‖B‖² ≥ bound` on the whole range.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReferenceBound {
    pub source: &'static str,
    pub bound: Rational,
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct References {
    pub formulas: Vec<ReferenceFormula>,
    pub values: Vec<ReferenceValue>,
    pub bounds: Vec<ReferenceBound>,
}

fn t_poly(c: &[i64]) -> RationalPoly {
    RationalPoly::from_ints(c)
}

/// Polynomial in `X` given low-degree first, substituted with `X = t²`.
fn x_poly(c: &[i64]) -> RationalPoly {
    RationalPoly::from_ints(c).compose_square()
}

fn poly_formula(source: &'static str, quantity: Quantity, p: RationalPoly, var: &str) -> ReferenceFormula {
    let display = if var == "X" {
        p.even_reduction().map(|q| q.display_in("X")).unwrap_or_else(|| p.display_in("t"))
    } else {
        p.display_in("t")
    };
    ReferenceFormula { source, quantity, value: RationalFunction::from_poly(p), display }
}

fn ratio_formula(source: &'static str, quantity: Quantity, num: RationalPoly, den: RationalPoly, shift: i64) -> ReferenceFormula {
    let value = &RationalFunction::new(num, den).expect("nonzero denominator") + &RationalFunction::constant(int(shift));
    let display = value.display_in("t");
    ReferenceFormula { source, quantity, value, display }
}

/// `X(X − 1)²` in `t`.
fn x_xm1_sq() -> RationalPoly {
    x_poly(&[0, 1, -2, 1])
}

fn value(source: &'static str, equation: Quantity, variable: RootVariable, value: &'static str) -> ReferenceValue {
    ReferenceValue { source, equation, variable, value }
}

pub fn references(id: FamilyId) -> References {
    use FamilyId::*;
    use Quantity::*;
    let i = |v: u32| v as i64;
    let mut r = References::default();
    match id {
        SphereG3 { mult } => r.bounds.push(ReferenceBound {
            source: "lower bound asserted for the three-curvature sum",
            bound: int(6 * i(mult)),
        }),
        SphereG4 { m1, m2 } => r.bounds.push(ReferenceBound {
            source: "lower bound by the arithmetic-geometric mean inequality",
            bound: int(2 * i(m1) + 2 * i(m2)),
        }),
        SphereG6 { mult } => r.bounds.push(ReferenceBound {
            source: "lower bound from the limits of the two bracket terms",
            bound: int(12 * i(mult)),
        }),
        SphereG1 { .. } | SphereG2 { .. } => {}
        CpA { p, q } => {
            let (a, b) = (2 * i(q) + 1, 2 * i(p) + 1);
            r.formulas.push(ratio_formula("displayed mean curvature", MeanCurvature, t_poly(&[-b, 0, a]), t_poly(&[0, 1]), 0));
            r.formulas.push(ratio_formula(
                "displayed norm of the second fundamental form",
                SecondFormNorm,
                t_poly(&[b, 0, 0, 0, a]),
                t_poly(&[0, 0, 1]),
                -2,
            ));
            r.formulas.push(poly_formula("displayed minimality condition", MinimalEquation, t_poly(&[-b, 0, a]), "t"));
            r.formulas.push(poly_formula(
                "displayed biharmonicity equation",
                BiharmonicEquation,
                t_poly(&[b, 0, -2 * i(p + q + 3), 0, a]),
                "t",
            ));
        }
        CpB { n } => {
            let n = i(n);
            // (n−1)(X−1)²(X²+1) + 16X² = (n−1)(X⁴ − 2X³ + 2X² − 2X + 1) + 16X²
            let num = [n - 1, -2 * (n - 1), 2 * (n - 1) + 16, -2 * (n - 1), n - 1];
            r.formulas.push(ratio_formula(
                "displayed mean curvature",
                MeanCurvature,
                t_poly(&[-(n - 1), 0, 2 * (n + 1), 0, -(n - 1)]),
                t_poly(&[0, -1, 0, 1]),
                0,
            ));
            r.formulas.push(ratio_formula("displayed norm of the second fundamental form", SecondFormNorm, x_poly(&num), x_xm1_sq(), 0));
            r.formulas.push(poly_formula(
                "displayed minimality condition",
                MinimalEquation,
                x_poly(&[n - 1, -2 * (n + 1), n - 1]),
                "X",
            ));
            // f(X) = numerator − 2(n+1)X(X−1)²
            let m = 2 * (n + 1);
            let f = [num[0], num[1] - m, num[2] + 2 * m, num[3] - m, num[4]];
            r.formulas.push(poly_formula("displayed biharmonicity equation f(X)", BiharmonicEquation, x_poly(&f), "X"));
        }
        CpC { n } => {
            let n = i(n);
            // C(X) = (n−2)X²(X−1)² + (n−2)(X−1)² + 4X(X²+6X+1) − 2X(X−1)²
            let sq = xm1_sq();
            let c = &(&(&(&RationalPoly::from_ints(&[0, 0, n - 2]) * &sq) + &sq.scale(&int(n - 2)))
                + &RationalPoly::from_ints(&[0, 4, 24, 4]))
                - &(&RationalPoly::from_ints(&[0, 2]) * &sq);
            let g = &c - &(&RationalPoly::from_ints(&[0, 2 * (n + 1)]) * &sq);
            r.formulas.push(ratio_formula(
                "displayed mean curvature",
                MeanCurvature,
                t_poly(&[-(n - 2), 0, 2 * (n + 2), 0, -(n - 2)]),
                t_poly(&[0, -1, 0, 1]),
                0,
            ));
            r.formulas.push(ratio_formula(
                "displayed norm of the second fundamental form C(X)/(X(X-1)^2)",
                SecondFormNorm,
                c.compose_square(),
                x_xm1_sq(),
                0,
            ));
            r.formulas.push(poly_formula("displayed biharmonicity equation g(X)", BiharmonicEquation, g.compose_square(), "X"));
        }
        CpD => {
            r.formulas.push(ratio_formula("displayed mean curvature", MeanCurvature, t_poly(&[-5, 0, 26, 0, -5]), t_poly(&[0, -1, 0, 1]), 0));
            r.formulas.push(ratio_formula(
                "displayed norm of the second fundamental form D(X)/(X(X-1)^2)",
                SecondFormNorm,
                x_poly(&[5, 1, 63, 11]),
                x_xm1_sq(),
                0,
            ));
            // D(X) − 20X(X−1)²
            r.formulas.push(poly_formula("displayed equation D(X) - 20X(X-1)^2", BiharmonicEquation, x_poly(&[5, -19, 103, -9]), "X"));
            r.formulas.push(poly_formula("displayed reduced equation h(X)", BiharmonicEquation, x_poly(&[-15, 41, 43, 11]), "X"));
            r.formulas.push(poly_formula(
                "equation in the classification theorem statement",
                BiharmonicEquation,
                t_poly(&[-15, 0, 41, 0, 43, 0, 41]),
                "t",
            ));
            r.formulas.push(poly_formula("displayed minimal radius t = 1/5", MinimalEquation, t_poly(&[-1, 5]), "t"));
            r.values.push(value("proof of the classification", BiharmonicEquation, RootVariable::X, "0.278629"));
            r.values.push(value("proof of the classification", BiharmonicEquation, RootVariable::T, "0.527853"));
            r.values.push(value("proof of the classification", BiharmonicEquation, RootVariable::U, "1.08512"));
            r.values.push(value("classification theorem statement", BiharmonicEquation, RootVariable::U, "1.0917"));
        }
        CpE => {
            r.formulas.push(ratio_formula("displayed mean curvature", MeanCurvature, t_poly(&[-9, 0, 42, 0, -9]), t_poly(&[0, -1, 0, 1]), 0));
            r.formulas.push(ratio_formula(
                "displayed norm of the second fundamental form E(X)/(X(X-1)^2) - 2",
                SecondFormNorm,
                x_poly(&[9, -9, 99, 21]),
                x_xm1_sq(),
                -2,
            ));
            r.formulas.push(poly_formula("displayed equation E(X) - 2X(X-1)^2", BiharmonicEquation, x_poly(&[9, -11, 103, 19]), "X"));
            r.formulas.push(poly_formula("displayed reduced equation k(X)", BiharmonicEquation, x_poly(&[-9, 43, -107, 13]), "X"));
            r.formulas.push(poly_formula(
                "equation in the classification theorem statement",
                BiharmonicEquation,
                t_poly(&[-9, 0, 43, 0, -107, 0, 13]),
                "t",
            ));
            r.values.push(value("proof of the classification", MinimalEquation, RootVariable::U, "0.443039"));
            r.values.push(value("proof of the classification", BiharmonicEquation, RootVariable::X, "7.81906"));
            r.values.push(value("proof of the classification", BiharmonicEquation, RootVariable::T, "2.79626"));
            r.values.push(value("proof of the classification", BiharmonicEquation, RootVariable::U, "0.343448"));
        }
        HpGeodesicSphere { n } => {
            let n = i(n);
            r.formulas.push(poly_formula("displayed minimal radius", MinimalEquation, t_poly(&[-3, 0, 4 * n - 1]), "t"));
            r.formulas.push(ratio_formula(
                "displayed norm of the second fundamental form",
                SecondFormNorm,
                t_poly(&[3, 0, 0, 0, 4 * n - 1]),
                t_poly(&[0, 0, 1]),
                -6,
            ));
            r.formulas.push(poly_formula(
                "displayed biharmonicity equation",
                BiharmonicEquation,
                t_poly(&[3, 0, -2 * (2 * n + 7), 0, 4 * n - 1]),
                "t",
            ));
        }
        HpCpTube { n } => {
            let n = i(n);
            r.formulas.push(ratio_formula(
                "displayed mean curvature",
                MeanCurvature,
                t_poly(&[2 * (n - 1), 0, -(4 * n + 5), 0, 2 * n - 1]),
                t_poly(&[0, -1, 0, 1]),
                0,
            ));
            r.formulas.push(poly_formula(
                "minimality condition in the theorem statement",
                MinimalEquation,
                x_poly(&[2 * (n - 1), -(4 * n + 5), 2 * n - 1]),
                "X",
            ));
            r.formulas.push(poly_formula(
                "minimality condition solved in the proof",
                MinimalEquation,
                x_poly(&[2 * (n - 1), -(4 * n + 5), 2 * (n - 1)]),
                "X",
            ));
            // ((2n−1)X²(X−1)² + (2n−1)(X−1)² − 2X(X−1)² + 32X²) / (X(X−1)²)
            let num = &(&RationalPoly::from_ints(&[2 * n - 1, -2, 2 * n - 1]) * &xm1_sq())
                + &RationalPoly::from_ints(&[0, 0, 32]);
            r.formulas.push(ratio_formula(
                "displayed norm of the second fundamental form",
                SecondFormNorm,
                num.compose_square(),
                x_xm1_sq(),
                0,
            ));
            r.formulas.push(poly_formula(
                "displayed biharmonicity equation",
                BiharmonicEquation,
                x_poly(&[-12, -2 * (2 * n - 1), -(6 * n + 11), -8 * (n + 1), 2 * n - 1]),
                "X",
            ));
        }
        HpHpkTube { n, k } => {
            let (n, k) = (i(n), i(k));
            r.formulas.push(poly_formula(
                "displayed minimal radius",
                MinimalEquation,
                t_poly(&[-(4 * k + 3), 0, 4 * n - 4 * k - 1]),
                "t",
            ));
            r.formulas.push(ratio_formula(
                "displayed norm of the second fundamental form",
                SecondFormNorm,
                t_poly(&[4 * k + 3, 0, 0, 0, 4 * n - 4 * k - 1]),
                t_poly(&[0, 0, 1]),
                -6,
            ));
            r.formulas.push(poly_formula(
                "displayed biharmonicity equation",
                BiharmonicEquation,
                t_poly(&[4 * k + 3, 0, -2 * (2 * n + 4), 0, 4 * n - 4 * k - 1]),
                "t",
            ));
        }
    }
    r
}

/// `(X − 1)²` as a polynomial in `X`.
fn xm1_sq() -> RationalPoly {
    RationalPoly::from_ints(&[1, -2, 1])
}
