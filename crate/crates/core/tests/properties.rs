use proptest::prelude::*;

use admissible_poisson::algebra::{algebra_from_json, algebra_to_json, AlgebraStructure, Cochain2};
use admissible_poisson::cohomology::delta2;
use admissible_poisson::deformations::{obstructions, order_residual, FormalDeformation};
use admissible_poisson::exactnum::{format_rational, parse_rational, rat};
use admissible_poisson::identities::{admissibility_residual, check_admissible, check_flexible};
use admissible_poisson::random;
use admissible_poisson::structure::{combine, split};

proptest! {
    #![proptest_config(ProptestConfig { cases: 48, failure_persistence: None, ..ProptestConfig::default() })]

    #[test]
    fn rational_strings_round_trip(n in -10_000i64..10_000, d in 1i64..10_000) {
        let r = rat(n, d);
        prop_assert_eq!(parse_rational(&format_rational(&r)).unwrap(), r);
    }

    #[test]
    fn base_change_preserves_admissibility(seed in any::<u64>(), n in 2usize..4) {
        let mut rng = random::rng(seed);
        let alg = random::admissible_algebra(&mut rng, n);
        let p = random::invertible_map(&mut rng, n, 3);
        let moved = alg.change_basis(&p).unwrap();
        prop_assert!(check_admissible(&moved).all_hold());
        prop_assert!(check_flexible(&moved).all_hold());
        let back = moved.change_basis(&p.inverse().unwrap()).unwrap();
        prop_assert_eq!(back.mu(), alg.mu());
    }

    #[test]
    fn split_combine_round_trip(seed in any::<u64>(), n in 2usize..5) {
        let alg = random::admissible_algebra(&mut random::rng(seed), n);
        let back = combine(&split(&alg).unwrap()).unwrap();
        prop_assert_eq!(back.mu(), alg.mu());
    }

    #[test]
    fn json_round_trip(seed in any::<u64>(), n in 1usize..4) {
        let mut rng = random::rng(seed);
        let alg = random::algebra(&mut rng, n, 5).with_name("random");
        prop_assert_eq!(algebra_from_json(&algebra_to_json(&alg)).unwrap(), alg);
        let c = random::cochain2(&mut rng, n, 5);
        let text = serde_json::to_string(&c).unwrap();
        prop_assert_eq!(serde_json::from_str::<Cochain2>(&text).unwrap(), c);
    }

    #[test]
    fn delta2_linearizes_the_residual(seed in any::<u64>(), n in 2usize..4) {
        let mut rng = random::rng(seed);
        let mu = random::cochain2(&mut rng, n, 3);
        let phi = random::cochain2(&mut rng, n, 3);
        let plus = admissibility_residual(&mu.add(&phi).unwrap());
        let minus = admissibility_residual(&mu.sub(&phi).unwrap());
        let expected = plus.sub(&minus).unwrap().scale(&rat(1, 2));
        prop_assert_eq!(delta2(&AlgebraStructure::new(mu), &phi).unwrap(), expected);
    }

    #[test]
    fn order_residuals_are_residual_coefficients(seed in any::<u64>()) {
        let mut rng = random::rng(seed);
        let base = random::admissible_algebra(&mut rng, 2);
        let terms = vec![random::cochain2(&mut rng, 2, 2), random::cochain2(&mut rng, 2, 2)];
        let d = FormalDeformation::new(base, terms).unwrap();
        // R(μ_t) / 3 is a polynomial of degree 4 in t; recover its t¹ and t²
        // coefficients by interpolation at t = 0, ±1, ±2.
        let r = |t: i64| admissibility_residual(&d.evaluate(&rat(t, 1))).scale(&rat(1, 3));
        let (m2, m1, p1, p2) = (r(-2), r(-1), r(1), r(2));
        let c1 = p1.sub(&m1).unwrap().scale(&rat(2, 3)).sub(&p2.sub(&m2).unwrap().scale(&rat(1, 12))).unwrap();
        let c2 = p1.add(&m1).unwrap().scale(&rat(2, 3))
            .sub(&p2.add(&m2).unwrap().scale(&rat(1, 24))).unwrap()
            .sub(&r(0).scale(&rat(5, 4))).unwrap();
        prop_assert_eq!(order_residual(&d, 1).unwrap(), c1);
        prop_assert_eq!(order_residual(&d, 2).unwrap(), c2);
        prop_assert_eq!(obstructions(&d).unwrap().orders.len(), 2);
    }
}
