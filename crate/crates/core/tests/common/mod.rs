//! Shared oracles for the integration tests.
#![allow(dead_code)]

use biharm_core::poly::rational::to_f64;
use biharm_core::poly::{count_roots, int, isolate, rat, Interval, RationalPoly};

fn poly(coeffs: Vec<i64>) -> RationalPoly {
    RationalPoly::from_ints(&coeffs)
}

/// Tiny deterministic generator so the 500-polynomial run is reproducible without proptest shrinking.
pub struct Lcg(pub u64);

impl Lcg {
    pub fn next(&mut self) -> u64 {
        self.0 = self.0.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
        self.0 >> 33
    }
    pub fn range(&mut self, lo: i64, hi: i64) -> i64 {
        lo + (self.next() % (hi - lo + 1) as u64) as i64
    }
}

/// Polynomial of degree at most 6 with known distinct real roots at half-integers in
/// `[-5, 5]`, odd multiplicities and an optional positive quadratic factor.
pub fn random_known_roots(g: &mut Lcg) -> (RationalPoly, Vec<f64>) {
    let mut p = RationalPoly::constant(int(g.range(1, 5) * if g.range(0, 1) == 0 { 1 } else { -1 }));
    let mut roots: Vec<i64> = Vec::new();
    let mut degree = 0;
    let budget = g.range(1, 6);
    if g.range(0, 2) == 0 && budget >= 2 {
        // x^2 + bx + c with |b| <= 2 < 2 sqrt(c): no real roots.
        p = &p * &poly(vec![g.range(2, 6), g.range(-2, 2), 1]);
        degree += 2;
    }
    while degree < budget {
        let r = g.range(-10, 10);
        if roots.contains(&r) {
            continue;
        }
        let mult = if degree + 3 <= budget && g.range(0, 3) == 0 { 3 } else { 1 };
        for _ in 0..mult {
            p = &p * &poly(vec![-r, 2]);
        }
        roots.push(r);
        degree += mult;
    }
    (p, roots.into_iter().map(|r| r as f64 / 2.0).collect())
}

pub fn sampled_sign_changes(p: &RationalPoly, lo: f64, hi: f64, samples: usize) -> usize {
    let h = (hi - lo) / samples as f64;
    let mut changes = 0;
    let mut prev = p.eval_f64(lo + 0.5 * h).signum();
    for i in 1..samples {
        let s = p.eval_f64(lo + (i as f64 + 0.5) * h).signum();
        if s != prev && s != 0.0 && prev != 0.0 {
            changes += 1;
        }
        prev = s;
    }
    changes
}


/// Outcome of comparing Sturm counts against the sampling and construction oracles.
pub struct OracleRun {
    pub cases: usize,
    pub mismatches: Vec<String>,
}

/// Runs the Sturm count oracle on `cases` random polynomials of degree at most 6.
pub fn sturm_oracle(cases: usize, seed: u64) -> OracleRun {
    let mut g = Lcg(seed);
    let mut mismatches = Vec::new();
    for case in 0..cases {
        let (p, roots) = random_known_roots(&mut g);
        // Endpoints sit at a/2 + 1/6, so they never coincide with a half-integer root.
        let a = g.range(-20, 19);
        let b = g.range(a + 1, 20);
        let (lo, hi) = (rat(3 * a + 1, 6), rat(3 * b + 1, 6));
        let interval = Interval::rational(lo.clone(), hi.clone()).unwrap();
        let sturm = count_roots(&p, &interval).unwrap();
        let (flo, fhi) = (to_f64(&lo), to_f64(&hi));
        // Every real root has odd multiplicity, so each one is a sign change of p itself.
        let sampled = sampled_sign_changes(&p, flo, fhi, 4000);
        let known = roots.iter().filter(|&&r| r > flo && r < fhi).count();
        let isolated = isolate(&p, &interval).unwrap().len();
        if sturm != sampled || sturm != known || isolated != sturm {
            mismatches.push(format!(
                "case {case}: p = {p} on ({lo}, {hi}): sturm {sturm}, sampled {sampled}, constructed {known}, isolated {isolated}"
            ));
        }
    }
    OracleRun { cases, mismatches }
}
