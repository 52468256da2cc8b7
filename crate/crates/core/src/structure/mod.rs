//! Structure theory: the bracket/product split, the Lie center,
//! idempotents and Pierce decompositions, radicals, compatible products for
//! a fixed bracket, and the multiplication operator algebra.

mod idempotents;
mod lie;
mod operators;
mod pair;
mod pierce;
mod products;
mod radicals;

use crate::exactnum::{Matrix, Subspace};

pub use idempotents::{find_idempotents, is_idempotent, DEFAULT_SEARCH_BUDGET};
pub use lie::{derived_algebra, is_nilpotent, is_solvable, killing_form, lie_type, LieType};
pub use operators::{
    ideal_closure, multiplication_algebra, operator_relation_failure, operator_span, MultiplicationAlgebraReport,
    SimplicityVerdict,
};
pub use pair::{combine, split, split_unchecked, PoissonPair};
pub use pierce::{pierce, pierce_multi, PierceDecomposition};
pub use products::{compatible_products, CompatibleProducts, ProductVariety};
pub use radicals::{
    is_nilpotent_element, largest_ideal_in, radicals, radicals_with, trace_form_radical, RadicalOptions, RadicalReport,
};

/// `{x : {x, e_j} = 0 for all j}`.
pub fn lie_center(pair: &PoissonPair) -> Subspace {
    let b = pair.bracket();
    let n = b.dim();
    Matrix::from_fn(n * n, n, |row, i| b.product(i, row / n)[row % n].clone()).nullspace()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{AlgebraStructure, Element};
    use crate::catalog::{fixture, fixture_with};
    use crate::exactnum::int;

    fn span(n: usize, idx: &[usize]) -> Subspace {
        Subspace::span(n, &idx.iter().map(|&i| Element::basis(n, i).0).collect::<Vec<_>>()).unwrap()
    }

    #[test]
    fn split_p32() {
        let pair = split(&fixture("P_3_2").unwrap()).unwrap();
        assert_eq!(pair.bracket().mu(), fixture("heisenberg").unwrap().mu());
        let prod = pair.product();
        assert_eq!(prod.mu().nonzero_entries().count(), 1);
        assert_eq!(prod.product(0, 0), &[int(0), int(0), int(1)]);
    }

    #[test]
    fn split_p36() {
        let pair = split(&fixture("P_3_6").unwrap()).unwrap();
        assert_eq!(pair.bracket().product(0, 1), &[int(0), int(1), int(0)]);
        let p = pair.product();
        assert_eq!(p.product(2, 2), &[int(0), int(0), int(1)]);
        assert_eq!(p.product(0, 2), &[int(1), int(0), int(0)]);
        assert_eq!(p.product(1, 2), &[int(0), int(1), int(0)]);
        assert_eq!(p.product(0, 1), &[int(0), int(0), int(0)]);
    }

    #[test]
    fn split_rejects_non_admissible() {
        assert!(split(&fixture("sigma3_not_admissible").unwrap()).is_err());
        let zero = split(&AlgebraStructure::zero(2)).unwrap();
        assert!(zero.bracket().is_zero_product() && zero.product().is_zero_product());
    }

    #[test]
    fn combine_heisenberg_with_alpha_product() {
        let bracket = fixture("heisenberg").unwrap();
        let product = AlgebraStructure::from_entries(3, [(0, 0, 2, int(1))]);
        let alg = combine(&PoissonPair::new(bracket, product).unwrap()).unwrap();
        assert_eq!(alg.mu(), fixture("P_3_2").unwrap().mu());
    }

    #[test]
    fn centers() {
        assert_eq!(lie_center(&split(&fixture("sl2").unwrap()).unwrap()).dim(), 0);
        assert!(lie_center(&split(&AlgebraStructure::zero(3)).unwrap()).is_full());
        assert_eq!(lie_center(&split(&fixture("P_3_5").unwrap()).unwrap()), span(3, &[2]));
    }

    #[test]
    fn idempotent_examples() {
        let p36 = fixture("P_3_6").unwrap();
        assert!(is_idempotent(&p36, &Element::basis(3, 2)).unwrap());
        assert!(find_idempotents(&AlgebraStructure::zero(3), DEFAULT_SEARCH_BUDGET).is_empty());
        let p33 = fixture_with("P_3_3", "alpha", int(1)).unwrap();
        assert!(find_idempotents(&p33, DEFAULT_SEARCH_BUDGET).contains(&Element::basis(3, 2)));
    }

    #[test]
    fn pierce_examples() {
        let e3 = Element::basis(3, 2);
        let d = pierce(&fixture("P_3_6").unwrap(), &e3).unwrap();
        assert!(d.p00.is_zero() && d.is_unit());
        let d = pierce(&fixture_with("P_3_3", "alpha", int(0)).unwrap(), &e3).unwrap();
        assert_eq!(d.p00, span(3, &[0, 1]));
        assert_eq!(d.p11, span(3, &[2]));
        let sum = fixture("P_3_6").unwrap().direct_sum(&AlgebraStructure::zero(2));
        let d = pierce(&sum, &Element::basis(5, 2)).unwrap();
        assert_eq!(d.p00, span(5, &[3, 4]));
        assert!(matches!(pierce(&sum, &Element::basis(5, 0)), Err(crate::Error::NotIdempotent)));
    }

    #[test]
    fn pierce_multi_blocks() {
        let p36 = fixture("P_3_6").unwrap();
        let two = p36.direct_sum(&p36);
        let parts = pierce_multi(&two, &[Element::basis(6, 2), Element::basis(6, 5)]).unwrap();
        assert_eq!(parts.iter().map(Subspace::dim).collect::<Vec<_>>(), vec![0, 3, 3]);
        let with_zero = p36.direct_sum(&AlgebraStructure::zero(2));
        let parts = pierce_multi(&with_zero, &[Element::basis(5, 2)]).unwrap();
        assert_eq!(parts[0].dim(), 2);
        let e = Element::basis(3, 2);
        assert!(matches!(pierce_multi(&p36, &[e.clone(), e]), Err(crate::Error::NotOrthogonal(0, 1))));
    }

    #[test]
    fn radical_examples() {
        let r = radicals(&fixture("nil_simple").unwrap()).unwrap();
        assert!(r.is_nilalgebra && r.nilradical.is_full() && r.jacobson_of_product.is_full());
        assert!(r.nilradical_is_whole && r.sampled_nilpotent);
        let r = radicals(&fixture_with("P_3_3", "alpha", int(0)).unwrap()).unwrap();
        assert_eq!(r.jacobson_of_product, span(3, &[0, 1]));
        assert_eq!(r.nilradical, span(3, &[0, 1]));
        assert!(!r.is_nilalgebra);
        assert_eq!(r.principal_idempotent, Some(Element::basis(3, 2)));
        let r = radicals(&AlgebraStructure::zero(2)).unwrap();
        assert!(r.is_nilalgebra && r.nilradical.is_full());
    }

    #[test]
    fn compatible_product_examples() {
        let sl2 = compatible_products(&fixture("sl2").unwrap()).unwrap();
        assert_eq!(sl2.dim(), 0);
        assert_eq!(sl2.variety().dim, Some(0));
        let heis = compatible_products(&fixture("heisenberg").unwrap()).unwrap();
        let v = heis.variety();
        assert_eq!(v.dim, Some(3));
        assert_eq!(v.is_subspace, Some(true));
        for (i, j) in [(0, 0), (1, 1), (0, 1)] {
            let mut c = crate::algebra::Cochain2::zeros(3);
            c.set(i, j, 2, int(1));
            c.set(j, i, 2, int(1));
            assert!(v.core.contains(&c.flatten()));
        }
        let lie2 = compatible_products(&fixture("lie2").unwrap()).unwrap();
        assert_eq!(lie2.variety().dim, Some(0));
        assert!(compatible_products(&fixture("P_3_2").unwrap()).is_err());
    }

    #[test]
    fn operator_algebra_examples() {
        let r = multiplication_algebra(&fixture("nil_simple").unwrap(), 10, 1);
        assert_eq!(r.simplicity, SimplicityVerdict::ProbablySimple);
        assert!(r.relations.values().all(|&b| b));
        let r = multiplication_algebra(&fixture("P_3_5").unwrap(), 10, 1);
        assert_eq!(r.simplicity, SimplicityVerdict::NotSimple);
        assert_eq!(r.ideal, Some(span(3, &[1])));
        let r = multiplication_algebra(&AlgebraStructure::zero(2), 10, 1);
        assert_eq!(r.simplicity, SimplicityVerdict::NotSimple);
    }

    #[test]
    fn lie_types() {
        assert_eq!(lie_type(&fixture("sl2").unwrap()), LieType::Semisimple);
        assert_eq!(lie_type(&fixture("heisenberg").unwrap()), LieType::Nilpotent);
        assert_eq!(lie_type(&fixture("lie2").unwrap()), LieType::Solvable);
        assert_eq!(lie_type(&AlgebraStructure::zero(2)), LieType::Abelian);
        let mixed = fixture("sl2").unwrap().direct_sum(&AlgebraStructure::zero(1));
        assert_eq!(lie_type(&mixed), LieType::Mixed);
    }
}
