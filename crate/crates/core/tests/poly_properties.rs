use biharm_core::poly::{
    certify_positive, count_roots, int, rat, Bound, Interval, Positivity, QuadExt, RationalFunction,
    RationalPoly,
};
use proptest::prelude::*;

mod common;

fn poly(coeffs: Vec<i64>) -> RationalPoly {
    RationalPoly::from_ints(&coeffs)
}

fn small_poly() -> impl Strategy<Value = RationalPoly> {
    prop::collection::vec(-9i64..=9, 0..6).prop_map(poly)
}

fn quad(d: i64) -> impl Strategy<Value = QuadExt> {
    (-20i64..=20, 1i64..=6, -20i64..=20, 1i64..=6)
        .prop_map(move |(a, da, b, db)| QuadExt::new(rat(a, da), rat(b, db), d).unwrap())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn poly_ring_axioms(a in small_poly(), b in small_poly(), c in small_poly()) {
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&a - &a, RationalPoly::zero());
        prop_assert_eq!(&a * &RationalPoly::one(), a.clone());
    }

    #[test]
    fn poly_division(a in small_poly(), b in small_poly()) {
        prop_assume!(!b.is_zero());
        let (q, r) = a.div_rem(&b).unwrap();
        prop_assert_eq!(&(&q * &b) + &r, a);
        prop_assert!(r.is_zero() || r.degree() < b.degree());
    }

    #[test]
    fn gcd_divides_both(a in small_poly(), b in small_poly(), c in small_poly()) {
        prop_assume!(!c.is_zero() && !b.is_zero());
        let (ac, bc) = (&a * &c, &b * &c);
        let g = ac.gcd(&bc).unwrap();
        prop_assert!(ac.rem(&g).unwrap().is_zero());
        prop_assert!(bc.rem(&g).unwrap().is_zero());
        prop_assert!(g.rem(&c.monic()).unwrap().is_zero());
    }

    #[test]
    fn eval_is_a_ring_map(a in small_poly(), b in small_poly(), n in -30i64..=30, d in 1i64..=7) {
        let x = rat(n, d);
        prop_assert_eq!((&a * &b).eval(&x), a.eval(&x) * b.eval(&x));
        prop_assert_eq!((&a + &b).eval(&x), a.eval(&x) + b.eval(&x));
    }

    #[test]
    fn quad_field_axioms(a in quad(3), b in quad(3), c in quad(3)) {
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!((&a * &a.conj()).as_rational().cloned(), Some(a.norm()));
        if !b.is_zero() {
            prop_assert_eq!(&(&a * &b) / &b, a.clone());
        }
    }

    #[test]
    fn quad_order_matches_floats(a in quad(5), b in quad(5)) {
        let (x, y) = (a.to_f64(), b.to_f64());
        if (x - y).abs() > 1e-9 {
            prop_assert_eq!(a < b, x < y);
        }
        prop_assert_eq!(a.cmp(&a), std::cmp::Ordering::Equal);
    }

    #[test]
    fn quad_enclosure_contains_value(a in quad(7)) {
        let (lo, hi) = a.enclosure(12);
        prop_assert!(lo <= hi);
        prop_assert!(a.cmp_rational(&lo) != std::cmp::Ordering::Less);
        prop_assert!(a.cmp_rational(&hi) != std::cmp::Ordering::Greater);
    }

    #[test]
    fn rational_function_field_ops(a in small_poly(), b in small_poly(), c in small_poly()) {
        prop_assume!(!b.is_zero() && !c.is_zero());
        let f = RationalFunction::new(a.clone(), b.clone()).unwrap();
        let g = RationalFunction::new(c.clone(), b.clone()).unwrap();
        prop_assert_eq!(&(&f + &g) - &g, f.clone());
        if !f.is_zero() {
            let one = RationalFunction::constant(int(1));
            prop_assert_eq!(&f * &f.recip().unwrap(), one);
        }
    }

    #[test]
    fn positive_by_construction(a in -20i64..=20, d in 1i64..=5, c in 1i64..=9) {
        // (x - a/d)^2 + c/9 has no real roots.
        let shift = poly(vec![-a, d]);
        let p = &(&shift * &shift) + &RationalPoly::constant(rat(c * d * d, 9));
        match certify_positive(&p, &Interval::real_line()).unwrap() {
            Positivity::Positive(cert) => prop_assert!(cert.verify()),
            other => prop_assert!(false, "expected positive, got {:?}", other),
        }
        let q = &p - &RationalPoly::constant(rat(c * d * d, 9));
        let is_root = matches!(certify_positive(&q, &Interval::real_line()).unwrap(), Positivity::HasRoot { .. });
        prop_assert!(is_root);
    }
}

#[test]
fn sturm_counts_match_dense_sampling() {
    let run = common::sturm_oracle(500, 2024);
    assert!(run.mismatches.is_empty(), "{}", run.mismatches.join("\n"));
}

#[test]
fn counts_on_unbounded_intervals() {
    // (x - 1)(x + 2)(x^2 + 1)
    let p = &(&poly(vec![-1, 1]) * &poly(vec![2, 1])) * &poly(vec![1, 0, 1]);
    assert_eq!(count_roots(&p, &Interval::real_line()).unwrap(), 2);
    assert_eq!(count_roots(&p, &Interval::above(Bound::Rat(int(0)))).unwrap(), 1);
    let sqrt3 = QuadExt::sqrt(3).unwrap();
    let p = poly(vec![-2, 0, 1]);
    assert_eq!(count_roots(&p, &Interval::above(Bound::quad(sqrt3.clone()))).unwrap(), 0);
    assert_eq!(count_roots(&p, &Interval::new(Bound::Rat(int(0)), Bound::quad(sqrt3.clone())).unwrap()).unwrap(), 1);
    // A root on an irrational endpoint is reported rather than silently counted.
    let p = poly(vec![-3, 0, 1]);
    assert!(count_roots(&p, &Interval::above(Bound::quad(sqrt3))).is_err());
}
