use std::fmt::Write as _;
use std::io::Write as _;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use serde_json::{json, Value};

use biharm_core::catalog::{build_family, FamilyId, Family};
use biharm_core::classify::{classify, sweep, sweep_families, SweepRange, Theorem};
use biharm_core::lie_forms::check_inequalities;
use biharm_core::poly::rational::parse_rational;
use biharm_core::poly::{DecimalMode, Rational};
use biharm_core::quartic_map::verify_example;
use biharm_core::report::{
    catalog_json, classification_json, classification_table, sweep_json, sweep_table, SCHEMA_VERSION,
};
use biharm_core::Error;

const EXIT_USAGE: u8 = 2;
const EXIT_CERTIFICATION: u8 = 3;
const EXIT_QUARTIC_MISMATCH: u8 = 4;
const EXIT_INEQUALITY_VIOLATION: u8 = 5;

#[derive(Parser)]
#[command(name = "biharm", version, about = "Biharmonic hypersurface classification and related exact checks")]
struct Cli {
    #[command(subcommand)]
    verb: Verb,
}

#[derive(Args)]
struct Output {
    /// Emit JSON instead of a table.
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
struct Precision {
    /// Significant digits of reported decimals (1 to 50).
    #[arg(long, default_value_t = 6, value_parser = clap::value_parser!(u32).range(1..=50))]
    digits: u32,
    /// Truncate decimals toward zero instead of rounding.
    #[arg(long)]
    truncate: bool,
    /// Holomorphic or sectional curvature constant of the ambient space, e.g. 4 or 1/2.
    #[arg(long, value_parser = parse_positive_rational)]
    ambient_c: Option<Rational>,
}

impl Precision {
    fn mode(&self) -> DecimalMode {
        if self.truncate {
            DecimalMode::Truncate
        } else {
            DecimalMode::Round
        }
    }
}

#[derive(Subcommand)]
enum Verb {
    /// Classify the biharmonic members of one family.
    Classify {
        /// Family name, e.g. cp-d, sphere-g2, hp-hpk-tube.
        #[arg(long)]
        family: String,
        #[arg(long)]
        n: Option<u32>,
        #[arg(long)]
        p: Option<u32>,
        #[arg(long)]
        q: Option<u32>,
        #[arg(long)]
        k: Option<u32>,
        #[arg(long)]
        mult: Option<u32>,
        #[arg(long)]
        m1: Option<u32>,
        #[arg(long)]
        m2: Option<u32>,
        #[command(flatten)]
        precision: Precision,
        #[command(flatten)]
        output: Output,
    },
    /// Classify every family of one ambient space over a range of dimensions.
    Sweep {
        /// 4.1 (spheres), 6.2 (complex projective) or 7.3 (quaternionic projective).
        #[arg(long)]
        theorem: String,
        #[arg(long)]
        n_min: Option<u32>,
        #[arg(long)]
        n_max: Option<u32>,
        #[command(flatten)]
        precision: Precision,
        #[command(flatten)]
        output: Output,
    },
    /// Dump the principal curvature catalog as JSON.
    CatalogDump {
        #[arg(long)]
        n_min: Option<u32>,
        #[arg(long)]
        n_max: Option<u32>,
    },
    /// Check the identities of the quartic polynomial map on R^m.
    #[command(name = "verify-example81")]
    VerifyExample81 {
        #[arg(long)]
        m: usize,
        #[command(flatten)]
        output: Output,
    },
    /// Check the pointwise identities and inequalities for Lie-algebra-valued forms.
    YmCheck {
        #[arg(long)]
        m: usize,
        #[arg(long)]
        r: usize,
        #[arg(long, default_value_t = 1000)]
        trials: u64,
        #[arg(long, default_value_t = 42)]
        seed: u64,
        #[command(flatten)]
        output: Output,
    },
}

fn parse_positive_rational(s: &str) -> Result<Rational, String> {
    match parse_rational(s) {
        Some(c) if c > Rational::from_integer(0.into()) => Ok(c),
        Some(_) => Err("must be positive".into()),
        None => Err(format!("not a rational number: {s}")),
    }
}

struct Failure {
    code: u8,
    message: String,
}

fn usage(message: impl Into<String>) -> Failure {
    Failure { code: EXIT_USAGE, message: message.into() }
}

fn from_core(e: Error) -> Failure {
    let code = match e.root_cause() {
        Error::InvalidParameter(_) | Error::DimensionMismatch(_) => EXIT_USAGE,
        _ => EXIT_CERTIFICATION,
    };
    Failure { code, message: e.to_string() }
}

struct FamilyParams {
    n: Option<u32>,
    p: Option<u32>,
    q: Option<u32>,
    k: Option<u32>,
    mult: Option<u32>,
    m1: Option<u32>,
    m2: Option<u32>,
}

fn family_id(name: &str, a: &FamilyParams) -> Result<FamilyId, Failure> {
    let need = |v: Option<u32>, flag: &str| v.ok_or_else(|| usage(format!("family {name} requires --{flag}")));
    Ok(match name {
        "sphere-g1" => FamilyId::SphereG1 { n: need(a.n, "n")? },
        "sphere-g2" => FamilyId::SphereG2 { n: need(a.n, "n")?, p: need(a.p, "p")? },
        "sphere-g3" => FamilyId::SphereG3 { mult: need(a.mult, "mult")? },
        "sphere-g4" => FamilyId::SphereG4 { m1: need(a.m1, "m1")?, m2: need(a.m2, "m2")? },
        "sphere-g6" => FamilyId::SphereG6 { mult: need(a.mult, "mult")? },
        "cp-a" => FamilyId::CpA { p: need(a.p, "p")?, q: need(a.q, "q")? },
        "cp-b" => FamilyId::CpB { n: need(a.n, "n")? },
        "cp-c" => FamilyId::CpC { n: need(a.n, "n")? },
        "cp-d" => FamilyId::CpD,
        "cp-e" => FamilyId::CpE,
        "hp-sphere" => FamilyId::HpGeodesicSphere { n: need(a.n, "n")? },
        "hp-cp-tube" => FamilyId::HpCpTube { n: need(a.n, "n")? },
        "hp-hpk-tube" => FamilyId::HpHpkTube { n: need(a.n, "n")?, k: need(a.k, "k")? },
        other => {
            return Err(usage(format!(
                "unknown family '{other}'; expected one of sphere-g1, sphere-g2, sphere-g3, sphere-g4, sphere-g6, \
                 cp-a, cp-b, cp-c, cp-d, cp-e, hp-sphere, hp-cp-tube, hp-hpk-tube"
            )))
        }
    })
}

fn build(id: FamilyId, c: Option<&Rational>) -> Result<Family, Failure> {
    let f = build_family(id).map_err(from_core)?;
    Ok(match c {
        Some(c) => f.with_ambient_c(c.clone()),
        None => f,
    })
}

fn range(t: Theorem, n_min: Option<u32>, n_max: Option<u32>) -> Result<SweepRange, Failure> {
    let d = SweepRange::default_for(t);
    let r = SweepRange { n_min: n_min.unwrap_or(d.n_min), n_max: n_max.unwrap_or(d.n_max) };
    if r.n_min > r.n_max {
        return Err(usage(format!("empty range: --n-min {} exceeds --n-max {}", r.n_min, r.n_max)));
    }
    Ok(r)
}

fn pretty(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("serializable");
    s.push('\n');
    s
}

fn run(cli: Cli) -> Result<(String, u8), Failure> {
    match cli.verb {
        Verb::Classify { family, n, p, q, k, mult, m1, m2, precision, output } => {
            let id = family_id(&family, &FamilyParams { n, p, q, k, mult, m1, m2 })?;
            let f = build(id, precision.ambient_c.as_ref())?;
            let r = classify(&f, precision.digits, precision.mode()).map_err(from_core)?;
            let doc = if output.json { pretty(&classification_json(&r)) } else { classification_table(&r) };
            Ok((doc, 0))
        }
        Verb::Sweep { theorem, n_min, n_max, precision, output } => {
            let t = Theorem::parse(&theorem)
                .ok_or_else(|| usage(format!("unknown theorem '{theorem}'; expected 4.1, 6.2 or 7.3")))?;
            let r = range(t, n_min, n_max)?;
            let rep = sweep(t, &r, precision.digits, precision.mode(), precision.ambient_c.as_ref());
            let doc = if output.json { pretty(&sweep_json(&rep)) } else { sweep_table(&rep) };
            Ok((doc, 0))
        }
        Verb::CatalogDump { n_min, n_max } => {
            let mut families = Vec::new();
            for t in [Theorem::Sphere, Theorem::ComplexProjective, Theorem::QuaternionProjective] {
                let r = range(t, n_min, n_max)?;
                for id in sweep_families(t, &r) {
                    // Parameter combinations that violate a family constraint are skipped.
                    if let Ok(f) = build_family(id) {
                        families.push(f);
                    }
                }
            }
            Ok((pretty(&catalog_json(&families)), 0))
        }
        Verb::VerifyExample81 { m, output } => {
            if m == 0 {
                return Err(usage("--m must be at least 1"));
            }
            let rep = verify_example(m);
            let code = if rep.all_equal() { 0 } else { EXIT_QUARTIC_MISMATCH };
            let doc = if output.json {
                let mut v = serde_json::to_value(&rep).expect("serializable");
                v.as_object_mut().expect("object").insert("schema".into(), json!(SCHEMA_VERSION));
                v["all_equal"] = json!(rep.all_equal());
                pretty(&v)
            } else {
                let mut s = format!("quartic map on R^{m}\n");
                for c in &rep.identities {
                    let _ = writeln!(s, "  [{}] {}", if c.equal { "equal" } else { "DIFFERS" }, c.name);
                    if !c.equal {
                        let _ = writeln!(s, "      claimed:    {}", c.claimed);
                        let _ = writeln!(s, "      computed:   {}", c.computed);
                        let _ = writeln!(s, "      difference: {}", c.difference);
                    }
                }
                let pm = &rep.power_mean;
                let _ = writeln!(
                    s,
                    "  [{}] e: m*sum x^4 >= (sum x^2)^2 at {} random rational points (seed {}), {} violations",
                    if pm.equal { "holds" } else { "FAILS" },
                    pm.points,
                    pm.seed,
                    pm.violations
                );
                s
            };
            Ok((doc, code))
        }
        Verb::YmCheck { m, r, trials, seed, output } => {
            let rep = check_inequalities(trials, seed, m, r).map_err(|e| usage(e.to_string()))?;
            let code = if rep.violations() == 0 { 0 } else { EXIT_INEQUALITY_VIOLATION };
            let doc = if output.json {
                let mut v = serde_json::to_value(&rep).expect("serializable");
                v.as_object_mut().expect("object").insert("schema".into(), json!(SCHEMA_VERSION));
                pretty(&v)
            } else {
                let mut s = format!("forms on R^{m} with values in so({r}), {trials} trials, seed {seed}\n");
                let rows = [
                    ("curvature action identity", rep.identity_violations),
                    ("ad-invariance", rep.ad_invariance_violations),
                    ("self-bracket contraction vanishes", rep.contraction_violations),
                    ("Ricci lower bound certificate", rep.ricci_certificate_failures),
                    ("<R(a),a>^2 <= |R|^2 |a|^4", rep.curvature_bound_violations),
                    ("|[a^a]|^2 <= |a|^4", rep.bracket_bound_violations),
                    ("<a.Ric,a> >= k |a|^2", rep.ricci_inequality_violations),
                ];
                for (name, v) in rows {
                    let _ = writeln!(s, "  {name:<36} {v} violations");
                }
                let _ = writeln!(
                    s,
                    "  max tightness: curvature {:.6}, bracket {:.6}, Ricci {:.6}",
                    rep.max_tightness[0], rep.max_tightness[1], rep.max_tightness[2]
                );
                if let Some(c) = &rep.first_counterexample {
                    let _ = writeln!(s, "  first counterexample (trial {}):", c.outcome.trial);
                    let _ = writeln!(s, "{}", serde_json::to_string(&c.data).expect("serializable"));
                }
                s
            };
            Ok((doc, code))
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { EXIT_USAGE } else { 0 });
        }
    };
    match run(cli) {
        Ok((doc, code)) => {
            // A closed pipe (e.g. `| head`) is not an error worth reporting.
            let _ = std::io::stdout().lock().write_all(doc.as_bytes());
            ExitCode::from(code)
        }
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}
