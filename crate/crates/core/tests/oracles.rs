//! Identities between the cohomology operators, checked against
//! independently computed values.

use admissible_poisson::algebra::{AlgebraStructure, Cochain2, LinearMap};
use admissible_poisson::catalog::{self, fixture, fixture_with};
use admissible_poisson::cohomology::{
    delta1, delta2, delta_chevalley, delta_harrison, delta_lp, derivations, inner_derivations, is_biderivation,
};
use admissible_poisson::deformations::{apply_equivalence, first_order_space, FormalDeformation};
use admissible_poisson::exactnum::{int, rat};
use admissible_poisson::identities::{act_on_tensor, check_admissible, check_sigma3, GroupAlgebraVector, Permutation};
use admissible_poisson::random;
use admissible_poisson::structure::{combine, compatible_products, split};
use admissible_poisson::symalg::{biderivation_extend, build_symalg, fixtures, Bivector, SparsePoly};

fn vector(terms: &[(Permutation, i64)]) -> GroupAlgebraVector {
    GroupAlgebraVector::new(terms.iter().map(|&(p, c)| (p, int(c))))
}

#[test]
fn alternating_sums_of_delta2_give_twelve_times_classical_coboundaries() {
    use Permutation::*;
    let chevalley = vector(&[(Id, 1), (T12, -1), (T13, -1), (T23, -1), (C1, 1), (C2, 1)]);
    let harrison = vector(&[(Id, 1), (T13, -1), (T23, 1), (C2, -1)]);
    let mut rng = random::rng(12);
    for k in 0..20 {
        let alg = random::admissible_algebra(&mut rng, 2 + k % 2);
        let pair = split(&alg).unwrap();
        let phi = random::cochain2(&mut rng, alg.dim(), 3);
        let d = delta2(&alg, &phi).unwrap();
        let c = delta_chevalley(pair.bracket(), &phi.skew_part()).unwrap().scale(&int(12));
        let h = delta_harrison(pair.product(), &phi.symmetric_part()).unwrap().scale(&int(12));
        assert_eq!(act_on_tensor(&d, &chevalley), c);
        assert_eq!(act_on_tensor(&d, &harrison), h);
    }
}

#[test]
fn delta2_is_minus_twice_delta_lp_on_biderivations() {
    let g = fixtures::rigid6();
    let s = build_symalg(&g, 2).unwrap();
    let alg = combine(&s.pair).unwrap();
    let mut rng = random::rng(4);
    for _ in 0..3 {
        let mut phi = Bivector::zero(6);
        for (i, j) in [(0, 1), (1, 3), (2, 4)] {
            let mut v = SparsePoly::zero(6);
            for (a, b) in [(1, 2), (0, 5), (3, 3)] {
                let mut m = vec![0; 6];
                m[a] += 1;
                m[b] += 1;
                v.add_term(m, random::small_int(&mut rng, 3));
            }
            phi.set(i, j, v);
        }
        let ext = biderivation_extend(&s, &phi).unwrap();
        assert!(is_biderivation(&s.pair, &ext).unwrap());
        assert_eq!(delta2(&alg, &ext).unwrap(), delta_lp(&s.pair, &ext).unwrap().scale(&int(-2)));
    }
}

#[test]
fn derivations_are_common_derivations_of_both_parts() {
    for alg in catalog::admissible_fixtures() {
        let pair = split(&alg).unwrap();
        let both = derivations(pair.bracket()).intersection(&derivations(pair.product())).unwrap();
        assert_eq!(derivations(&alg), both, "{:?}", alg.name());
        assert!(inner_derivations(&alg).is_subspace_of(&both).unwrap());
    }
}

#[test]
fn sigma3_identity_does_not_imply_admissibility() {
    let a = fixture("sigma3_not_admissible").unwrap();
    assert_eq!(check_sigma3(&a).holds("sigma3"), Some(true));
    assert_eq!(check_admissible(&a).holds("admissible"), Some(false));
}

#[test]
fn diagonalizable_ad_with_simple_zero_forces_trivial_product() {
    let brackets = [
        fixture("lie2").unwrap(),
        fixture("sl2").unwrap(),
        fixture_with("P_3_7", "alpha", int(2)).unwrap().skew_part(),
        fixture_with("P_3_7", "alpha", rat(-1, 2)).unwrap().skew_part(),
        fixture("P_3_8").unwrap().skew_part(),
    ];
    for b in brackets {
        assert_eq!(compatible_products(&b).unwrap().variety().dim, Some(0), "{:?}", b.name());
    }
}

#[test]
fn equivalence_shifts_first_order_term_by_a_coboundary() {
    let mut rng = random::rng(21);
    for _ in 0..10 {
        let alg = random::admissible_algebra(&mut rng, 3);
        let phi = random::cochain2(&mut rng, 3, 2);
        let g = random::linear_map(&mut rng, 3, 2);
        let d = FormalDeformation::new(alg.clone(), vec![phi.clone()]).unwrap();
        let e = apply_equivalence(&d, &[LinearMap::identity(3), g.clone()]).unwrap();
        assert_eq!(e.base.mu(), alg.mu());
        assert_eq!(e.terms[0], phi.add(&delta1(&alg, &g).unwrap()).unwrap());
    }
}

#[test]
fn infinitesimal_deformations_of_the_two_dim_algebra() {
    let a = fixture("P_2_6").unwrap();
    let z = first_order_space(&a).unwrap();
    assert_eq!(z.dim(), 3);
    let symmetric = Cochain2::from_entries(2, [(0, 0, 0, int(2)), (0, 1, 1, int(1)), (1, 0, 1, int(1))]);
    assert!(z.contains(&symmetric.flatten()));
    assert!(delta2(&a, &symmetric).unwrap().is_zero());
    assert!(!AlgebraStructure::new(a.mu().add(&symmetric).unwrap()).is_zero_product());
}
