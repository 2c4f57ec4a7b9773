use biharm_core::lie_forms::{bracket_wedge, curvature_action, ricci_compose, LieValuedForm, RicciModel, SkewEndo};
use biharm_core::poly::{int, rat};
use biharm_core::quartic_map::{component, power_sum, MultiPoly};
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn multipoly(m: usize) -> impl Strategy<Value = MultiPoly> {
    prop::collection::vec((-5i64..=5, prop::collection::vec(0u32..=4, m)), 0..6).prop_map(move |terms| {
        terms.into_iter().fold(MultiPoly::zero(m), |acc, (c, e)| acc.add(&MultiPoly::monomial(m, int(c), e)))
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]

    #[test]
    fn laplacian_is_linear(f in multipoly(3), g in multipoly(3), a in -4i64..=4, b in 1i64..=4) {
        let c = rat(a, b);
        prop_assert_eq!(f.add(&g.scale(&c)).laplacian(), f.laplacian().add(&g.laplacian().scale(&c)));
    }

    #[test]
    fn laplacian_commutes_with_permutations(f in multipoly(3), k in 0usize..6) {
        let perms = [[0, 1, 2], [0, 2, 1], [1, 0, 2], [1, 2, 0], [2, 0, 1], [2, 1, 0]];
        let p = &perms[k];
        prop_assert_eq!(f.permute(p).laplacian(), f.laplacian().permute(p));
    }

    #[test]
    fn product_rule(f in multipoly(2), g in multipoly(2), i in 0usize..2) {
        let lhs = f.mul(&g).derivative(i);
        let rhs = f.derivative(i).mul(&g).add(&f.mul(&g.derivative(i)));
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn multipoly_eval_is_a_ring_map(f in multipoly(2), g in multipoly(2), x in -6i64..=6, y in 1i64..=5) {
        let pt = [rat(x, y), rat(y, 3)];
        prop_assert_eq!(f.mul(&g).eval(&pt), f.eval(&pt) * g.eval(&pt));
    }

    #[test]
    fn ricci_form_is_symmetric(seed in 0u64..10_000, m in 2usize..=4, r in 2usize..=4) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let a = LieValuedForm::random(1, m, r, &mut rng);
        let b = LieValuedForm::random(1, m, r, &mut rng);
        let ric = RicciModel::random(m, &mut rng);
        prop_assert_eq!(ricci_compose(&a, &ric).unwrap().inner(&b), a.inner(&ricci_compose(&b, &ric).unwrap()));
        prop_assert!(ric.bound_certified());
    }

    #[test]
    fn wedge_is_symmetric_and_bilinear(seed in 0u64..10_000) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let (b1, b2, b3) = (
            LieValuedForm::random(1, 3, 3, &mut rng),
            LieValuedForm::random(1, 3, 3, &mut rng),
            LieValuedForm::random(1, 3, 3, &mut rng),
        );
        prop_assert_eq!(bracket_wedge(&b1, &b2).unwrap(), bracket_wedge(&b2, &b1).unwrap());
        prop_assert_eq!(
            bracket_wedge(&b1.add(&b3), &b2).unwrap(),
            bracket_wedge(&b1, &b2).unwrap().add(&bracket_wedge(&b3, &b2).unwrap())
        );
    }

    #[test]
    fn curvature_action_is_linear(seed in 0u64..10_000) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let phi = LieValuedForm::random(2, 4, 3, &mut rng);
        let (a, b) = (LieValuedForm::random(1, 4, 3, &mut rng), LieValuedForm::random(1, 4, 3, &mut rng));
        prop_assert_eq!(
            curvature_action(&phi, &a.add(&b)).unwrap(),
            curvature_action(&phi, &a).unwrap().add(&curvature_action(&phi, &b).unwrap())
        );
    }

    #[test]
    fn jacobi_identity(seed in 0u64..10_000, r in 2usize..=5) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let (x, y, z) = (SkewEndo::random(r, &mut rng), SkewEndo::random(r, &mut rng), SkewEndo::random(r, &mut rng));
        let sum = x.bracket(&y.bracket(&z)).add(&y.bracket(&z.bracket(&x))).add(&z.bracket(&x.bracket(&y)));
        prop_assert!(sum.is_zero());
    }
}

#[test]
fn components_sum_to_zero() {
    for m in 1..=5 {
        let total = (0..m).fold(MultiPoly::zero(m), |acc, i| acc.add(&component(m, i)));
        assert!(total.is_zero(), "m = {m}");
    }
}

#[test]
fn laplacian_of_power_sums() {
    // Δ Σ x^4 = 12 Σ x^2 and Δ (Σ x^2) = 2m.
    for m in 1..=4 {
        assert_eq!(power_sum(m, 4).laplacian(), power_sum(m, 2).scale(&int(12)));
        assert_eq!(power_sum(m, 2).laplacian(), MultiPoly::constant(m, int(2 * m as i64)));
    }
}
