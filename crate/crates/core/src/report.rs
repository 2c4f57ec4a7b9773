//! JSON and plain-text rendering of catalog dumps, classifications and sweeps.

use std::fmt::Write as _;

use serde_json::{json, Value};

use crate::catalog::{biharmonic_threshold, CurvatureValue, Family};
use crate::classify::{ClassificationResult, LedgerStatus, RootReport, SweepReport};
use crate::poly::rational::rational_string;

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Json,
    Table,
}

pub const NO_ROOTS_CERTIFIED: &str = "no nonminimal biharmonic radii; certificate attached";
pub const NO_ROOTS_ALL_MINIMAL: &str = "no nonminimal biharmonic radii; every biharmonic member is minimal";

fn params_json(f: &Family) -> Value {
    let mut m = serde_json::Map::new();
    for (k, v) in f.id.params() {
        m.insert(k.into(), json!(v));
    }
    m.insert("n_ambient".into(), json!(f.ambient.n));
    Value::Object(m)
}

pub fn family_json(f: &Family) -> Value {
    let spectrum: Vec<Value> = f
        .spectrum
        .iter()
        .map(|pc| match &pc.value {
            CurvatureValue::Rational(r) => json!({
                "label": pc.label,
                "num_coeffs": r.num().coefficient_strings(),
                "den_coeffs": r.den().coefficient_strings(),
                "multiplicity": pc.multiplicity,
            }),
            CurvatureValue::ConjugatePair(p) => json!({
                "label": pc.label,
                "conjugate_pair": p.to_json(),
                "multiplicity": pc.multiplicity,
            }),
        })
        .collect();
    json!({
        "id": f.id.slug(),
        "params": params_json(f),
        "ambient": {
            "kind": f.ambient.kind,
            "c": rational_string(&f.ambient.c),
        },
        "dim": f.dim,
        "substitution": f.substitution.describe(),
        "range": f.range.to_string(),
        "threshold": rational_string(&biharmonic_threshold(f)),
        "spectrum": spectrum,
    })
}

pub fn catalog_json(families: &[Family]) -> Value {
    json!({
        "schema": SCHEMA_VERSION,
        "families": families.iter().map(family_json).collect::<Vec<_>>(),
    })
}

fn outcome_line(r: &ClassificationResult) -> String {
    if !r.nonminimal_biharmonic.is_empty() {
        let ts: Vec<&str> = r.nonminimal_biharmonic.iter().map(|x| x.t.decimal.as_str()).collect();
        format!("nonminimal biharmonic at t = {}", ts.join(", "))
    } else if r.nonexistence_certificate.is_some() {
        NO_ROOTS_CERTIFIED.into()
    } else {
        NO_ROOTS_ALL_MINIMAL.into()
    }
}

pub fn classification_json(r: &ClassificationResult) -> Value {
    let mut v = serde_json::to_value(r).expect("serializable");
    let obj = v.as_object_mut().expect("object");
    obj.insert("schema".into(), json!(SCHEMA_VERSION));
    obj.insert("family".into(), json!(r.family.id.slug()));
    obj.insert("params".into(), params_json(&r.family));
    obj.insert("range".into(), json!(r.family.range.to_string()));
    obj.insert("substitution".into(), json!(r.family.substitution.describe()));
    obj.insert(
        "biharmonic_X".into(),
        json!(r.nonminimal_biharmonic.iter().filter_map(|x| x.x.clone()).collect::<Vec<_>>()),
    );
    obj.insert("outcome".into(), json!(outcome_line(r)));
    v
}

fn root_line(r: &RootReport) -> String {
    let mut s = format!("t = {}", r.t.decimal);
    let mut add = |k: &str, v: &Option<String>| {
        if let Some(v) = v {
            let _ = write!(s, ", {k} = {v}");
        }
    };
    add("X", &r.x);
    add("u", &r.radius);
    add("x", &r.angle);
    add("level", &r.level);
    if let Some(l) = &r.level_exact {
        let _ = write!(s, " (exact {})", rational_string(l));
    } else if let Some(l) = &r.level_squared_exact {
        let _ = write!(s, " (level^2 = {})", rational_string(l));
    }
    let _ = write!(
        s,
        "  [residual {}{}]",
        if r.residual.exact { "0 exact" } else { r.residual.magnitude.as_str() },
        if r.residual.within_tolerance { "" } else { ", OUT OF TOLERANCE" }
    );
    s
}

pub fn classification_table(r: &ClassificationResult) -> String {
    let mut s = String::new();
    let f = &r.family;
    let _ = writeln!(s, "family        {}", f.id);
    let _ = writeln!(s, "dimension     {} (ambient n = {}, c = {})", f.dim, f.ambient.n, rational_string(&f.ambient.c));
    let _ = writeln!(s, "parameter     {} on {}", f.substitution.describe(), f.range);
    let _ = writeln!(s, "dim M * H     {}", r.mean_curvature.display_in("t"));
    let _ = writeln!(s, "|B|^2         {}", r.second_form_norm2.display_in("t"));
    let _ = writeln!(s, "threshold     {}", rational_string(&r.threshold));
    let _ = writeln!(s, "minimal eq    {} = 0", r.minimality_equation.display());
    let _ = writeln!(s, "biharm eq     {} = 0", r.biharmonicity_equation.display());
    let sections = [("minimal", &r.minimal), ("biharmonic", &r.biharmonic), ("nonminimal biharmonic", &r.nonminimal_biharmonic)];
    for (name, roots) in sections {
        let _ = writeln!(s, "{name}:");
        if roots.is_empty() {
            let _ = writeln!(s, "  none in range");
        }
        for root in roots {
            let _ = writeln!(s, "  {}", root_line(root));
        }
    }
    if let Some(c) = &r.nonexistence_certificate {
        let _ = writeln!(
            s,
            "certificate:  numerator has 0 roots on {}, sign {} at t = {}; |B|^2 - threshold has sign {}",
            c.numerator.interval,
            c.numerator.sign,
            rational_string(&c.numerator.sample),
            c.excess_sign
        );
    }
    let _ = writeln!(s, "outcome:      {}", outcome_line(r));
    if !r.ledger.is_empty() {
        let _ = writeln!(s, "ledger:");
        for e in &r.ledger {
            let tag = match e.status {
                LedgerStatus::Agrees => "agrees",
                LedgerStatus::Differs => "DIFFERS",
            };
            let _ = writeln!(s, "  [{tag}] {} ({})", e.subject, e.source);
            let _ = writeln!(s, "      displayed: {}", e.displayed);
            let _ = writeln!(s, "      derived:   {}", e.derived);
            for lr in &e.displayed_roots {
                let mut line = format!("t = {}", lr.t);
                if let Some(x) = &lr.x {
                    let _ = write!(line, ", X = {x}");
                }
                if let Some(u) = &lr.u {
                    let _ = write!(line, ", u = {u}");
                }
                let _ = writeln!(s, "      displayed root: {line}{}", if lr.in_range { "" } else { " (outside range)" });
            }
            if let Some(n) = &e.note {
                let _ = writeln!(s, "      note: {n}");
            }
        }
    }
    s
}

pub fn sweep_json(r: &SweepReport) -> Value {
    let rows: Vec<Value> = r
        .rows
        .iter()
        .map(|row| match &row.result {
            Some(c) => classification_json(c),
            None => json!({
                "family": row.family,
                "error": row.error,
                "biharmonic": row.biharmonic_fallback,
            }),
        })
        .collect();
    json!({
        "schema": SCHEMA_VERSION,
        "theorem": r.theorem,
        "summary": r.summary,
        "rows": rows,
    })
}

fn sweep_row_outcome(row: &crate::classify::SweepRow) -> String {
    match (&row.result, &row.error) {
        (Some(c), _) => {
            let mut s = outcome_line(c);
            let levels: Vec<&str> = c.nonminimal_biharmonic.iter().filter_map(|x| x.level.as_deref()).collect();
            if !levels.is_empty() {
                s = format!("{s} (level {})", levels.join(", "));
            }
            let differs = c.ledger.iter().filter(|e| e.status == LedgerStatus::Differs).count();
            if differs > 0 {
                let _ = write!(s, "; {differs} ledger discrepancies");
            }
            s
        }
        (None, Some(e)) => {
            let ts: Vec<&str> = row.biharmonic_fallback.iter().map(|x| x.t.decimal.as_str()).collect();
            format!("error: {e}; biharmonic t = [{}]", ts.join(", "))
        }
        (None, None) => "not classified".into(),
    }
}

pub fn sweep_table(r: &SweepReport) -> String {
    let mut s = String::new();
    let _ = writeln!(s, "sweep {}", r.theorem);
    let width = r.rows.iter().map(|x| x.family.len()).max().unwrap_or(6).max(6);
    for row in &r.rows {
        let _ = writeln!(s, "  {:<width$}  {}", row.family, sweep_row_outcome(row));
    }
    let _ = writeln!(s, "summary:");
    let cw = r.summary.iter().map(|x| x.case.len()).max().unwrap_or(4).max(4);
    let _ = writeln!(s, "  {:<cw$}  {:>8}  outcome", "case", "families");
    for row in &r.summary {
        let _ = writeln!(s, "  {:<cw$}  {:>8}  {}", row.case, row.families, row.outcome);
    }
    s
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::{build_family, FamilyId};
    use crate::classify::{classify, sweep, SweepRange, Theorem};
    use crate::poly::DecimalMode;

    #[test]
    fn certificate_wording() {
        let r = classify(&build_family(FamilyId::CpB { n: 3 }).unwrap(), 6, DecimalMode::Round).unwrap();
        assert!(classification_table(&r).contains(NO_ROOTS_CERTIFIED));
        assert_eq!(classification_json(&r)["outcome"], NO_ROOTS_CERTIFIED);
        assert_eq!(classification_json(&r)["schema"], 1);
    }

    #[test]
    fn d_type_json_mentions_quoted_root() {
        let r = classify(&build_family(FamilyId::CpD).unwrap(), 6, DecimalMode::Round).unwrap();
        let s = serde_json::to_string(&classification_json(&r)).unwrap();
        assert!(s.contains("\"X\":\"0.278629\""));
        assert!(s.contains("\"t\":\"0.527853\""));
    }

    #[test]
    fn sphere_summary_has_five_rows() {
        let rep = sweep(Theorem::Sphere, &SweepRange::default_for(Theorem::Sphere), 6, DecimalMode::Round, None);
        assert_eq!(rep.summary.len(), 5);
        assert_eq!(sweep_table(&rep).lines().filter(|l| l.starts_with("  sphere-g")).count(), rep.rows.len() + 5);
    }

    #[test]
    fn catalog_dump_shape() {
        let f = build_family(FamilyId::SphereG3 { mult: 1 }).unwrap();
        let v = catalog_json(&[f]);
        assert_eq!(v["schema"], 1);
        let spectrum = &v["families"][0]["spectrum"];
        assert_eq!(spectrum.as_array().unwrap().len(), 2);
        assert!(spectrum[1]["conjugate_pair"].is_object());
    }
}
