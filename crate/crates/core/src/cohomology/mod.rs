//! Coboundaries of the single-product complex in degrees 0, 1, 2, their
//! matrices, and the resulting cohomology dimensions. The classical Lie,
//! Harrison and Lichnerowicz operators live in [`classical`].

pub mod classical;

use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::algebra::{add_assign, axpy, sub_assign, AlgebraStructure, Cochain2, Cochain3, Element, LinearMap};
use crate::error::{check_dim, Error, Result};
use crate::exactnum::{int, Matrix, Rational, Subspace};
use crate::identities::check_admissible;

pub use classical::{
    classical_operators, decomposition_coefficients, delta_chevalley, delta_harrison, delta_lp, is_biderivation,
    l1, l2, ClassicalOperators, DECOMPOSITION_COEFFICIENTS,
};

/// `outer(inner(e_a, e_b), e_c)`.
pub(crate) fn left_nest(outer: &Cochain2, inner: &Cochain2, a: usize, b: usize, c: usize) -> Vec<Rational> {
    outer.eval_right_basis(inner.at(a, b), c)
}

/// `outer(e_a, inner(e_b, e_c))`.
pub(crate) fn right_nest(outer: &Cochain2, inner: &Cochain2, a: usize, b: usize, c: usize) -> Vec<Rational> {
    outer.eval_left_basis(a, inner.at(b, c))
}

/// A coboundary as a matrix from flattened `degree`-cochains to flattened
/// `degree + 1`-cochains (flattenings of [`LinearMap`], [`Cochain2`],
/// [`Cochain3`]).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoboundaryMatrix {
    pub degree: usize,
    pub matrix: Matrix,
}

/// `H⁰ = {X : X·Y = 0 for all Y}`.
pub fn delta0(alg: &AlgebraStructure) -> Subspace {
    let n = alg.dim();
    Matrix::from_fn(n * n, n, |row, i| alg.product(i, row / n)[row % n].clone()).nullspace()
}

/// `{X : X·Y = Y·X = 0 for all Y}`.
pub fn delta0_two_sided(alg: &AlgebraStructure) -> Subspace {
    let n = alg.dim();
    let right = Matrix::from_fn(n * n, n, |row, i| alg.product(row / n, i)[row % n].clone()).nullspace();
    delta0(alg).intersection(&right).expect("same ambient dimension")
}

/// `δ¹f(X, Y) = f(X)·Y + X·f(Y) − f(X·Y)`.
pub fn delta1(alg: &AlgebraStructure, f: &LinearMap) -> Result<Cochain2> {
    check_dim(alg.dim(), f.dim())?;
    let n = alg.dim();
    let images: Vec<Vec<Rational>> = (0..n).map(|i| f.image(i)).collect();
    let mu = alg.mu();
    Ok(Cochain2::from_fn(n, |i, j| {
        let mut out = mu.eval_right_basis(&images[i], j);
        add_assign(&mut out, &mu.eval_left_basis(i, &images[j]));
        sub_assign(&mut out, &f.eval(mu.at(i, j)));
        out
    }))
}

/// `δ²φ(X,Y,Z) = 3φ(XY,Z) − 3φ(X,YZ) − φ(XZ,Y) − φ(YZ,X) + φ(YX,Z) + φ(ZX,Y)
///             + 3φ(X,Y)Z − 3Xφ(Y,Z) − φ(X,Z)Y − φ(Y,Z)X + φ(Y,X)Z + φ(Z,X)Y`
/// for the multiplication `mu`.
pub fn delta2_mu(mu: &Cochain2, phi: &Cochain2) -> Result<Cochain3> {
    check_dim(mu.dim(), phi.dim())?;
    let n = mu.dim();
    let (three, minus_three) = (int(3), int(-3));
    Ok(Cochain3::from_fn(n, |x, y, z| {
        let mut out = vec![Rational::zero(); n];
        axpy(&mut out, &three, &left_nest(phi, mu, x, y, z));
        axpy(&mut out, &minus_three, &right_nest(phi, mu, x, y, z));
        sub_assign(&mut out, &left_nest(phi, mu, x, z, y));
        sub_assign(&mut out, &left_nest(phi, mu, y, z, x));
        add_assign(&mut out, &left_nest(phi, mu, y, x, z));
        add_assign(&mut out, &left_nest(phi, mu, z, x, y));
        axpy(&mut out, &three, &left_nest(mu, phi, x, y, z));
        axpy(&mut out, &minus_three, &right_nest(mu, phi, x, y, z));
        sub_assign(&mut out, &left_nest(mu, phi, x, z, y));
        sub_assign(&mut out, &left_nest(mu, phi, y, z, x));
        add_assign(&mut out, &left_nest(mu, phi, y, x, z));
        add_assign(&mut out, &left_nest(mu, phi, z, x, y));
        out
    }))
}

pub fn delta2(alg: &AlgebraStructure, phi: &Cochain2) -> Result<Cochain3> {
    delta2_mu(alg.mu(), phi)
}

fn unit_map(n: usize, k: usize, i: usize) -> LinearMap {
    let mut flat = vec![Rational::zero(); n * n];
    flat[k * n + i] = int(1);
    LinearMap::from_flat(n, &flat).expect("n² entries")
}

/// Columns are `δ¹` of the unit maps in flattened order.
pub fn delta1_matrix(alg: &AlgebraStructure) -> CoboundaryMatrix {
    let n = alg.dim();
    let columns: Vec<Vec<Rational>> = (0..n * n)
        .map(|c| delta1(alg, &unit_map(n, c / n, c % n)).expect("same dimension").flatten())
        .collect();
    let matrix = Matrix::from_fn(n * n * n, n * n, |r, c| columns[c][r].clone());
    CoboundaryMatrix { degree: 1, matrix }
}

/// Columns are `δ²` of the unit cochains in flattened order.
pub fn delta2_matrix(alg: &AlgebraStructure) -> CoboundaryMatrix {
    let n = alg.dim();
    let n3 = n * n * n;
    let columns: Vec<Vec<Rational>> = (0..n3)
        .map(|c| {
            let mut flat = vec![Rational::zero(); n3];
            flat[c] = int(1);
            let phi = Cochain2::from_flat(n, &flat).expect("n³ entries");
            delta2(alg, &phi).expect("same dimension").flatten()
        })
        .collect();
    let matrix = Matrix::from_fn(n * n3, n3, |r, c| columns[c][r].clone());
    CoboundaryMatrix { degree: 2, matrix }
}

/// Derivations of the multiplication, as flattened linear maps.
pub fn derivations(alg: &AlgebraStructure) -> Subspace {
    delta1_matrix(alg).matrix.nullspace()
}

/// `ad_X = {X, ·}` for the bracket part, as flattened linear maps.
pub fn inner_derivations(alg: &AlgebraStructure) -> Subspace {
    let n = alg.dim();
    let bracket = alg.skew_part();
    let rows: Vec<Vec<Rational>> =
        (0..n).map(|i| bracket.left_mul_matrix(&Element::basis(n, i)).data().to_vec()).collect();
    Subspace::span(n * n, &rows).expect("n² entries")
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CohomologyDims {
    pub cocycles: usize,
    pub coboundaries: usize,
    pub cohomology: usize,
}

impl CohomologyDims {
    fn new(cocycles: usize, coboundaries: usize) -> Self {
        Self { cocycles, coboundaries, cohomology: cocycles - coboundaries }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CohomologyReport {
    pub dim_z2: usize,
    pub dim_b2: usize,
    pub dim_h2: usize,
    pub z2_basis: Vec<Cochain2>,
    pub b2_basis: Vec<Cochain2>,
    /// Left annihilator.
    pub h0_basis: Subspace,
    pub h0_two_sided: Subspace,
    /// `(Z¹, B¹, H¹)` with `Z¹` the derivations and `B¹` the inner
    /// derivations of the bracket.
    pub h1_dims: CohomologyDims,
}

fn cochains(n: usize, s: &Subspace) -> Vec<Cochain2> {
    s.basis().iter().map(|v| Cochain2::from_flat(n, v).expect("n³ entries")).collect()
}

pub fn cohomology_report(alg: &AlgebraStructure) -> Result<CohomologyReport> {
    let report = check_admissible(alg);
    if !report.all_hold() {
        return Err(Error::NotAdmissible(format!("{:?}", report.witnesses)));
    }
    let n = alg.dim();
    let d1 = delta1_matrix(alg).matrix;
    let z1 = d1.nullspace();
    let b1 = inner_derivations(alg);
    if !b1.is_subspace_of(&z1)? {
        return Err(Error::Invariant("an inner derivation is not a derivation".into()));
    }
    let z2 = delta2_matrix(alg).matrix.nullspace();
    let b2 = d1.column_space();
    if !b2.is_subspace_of(&z2)? {
        return Err(Error::Invariant("δ²∘δ¹ ≠ 0".into()));
    }
    Ok(CohomologyReport {
        dim_z2: z2.dim(),
        dim_b2: b2.dim(),
        dim_h2: z2.dim() - b2.dim(),
        z2_basis: cochains(n, &z2),
        b2_basis: cochains(n, &b2),
        h0_basis: delta0(alg),
        h0_two_sided: delta0_two_sided(alg),
        h1_dims: CohomologyDims::new(z1.dim(), b1.dim()),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::fixture;

    #[test]
    fn delta1_of_identity_is_mu() {
        let a = fixture("P_3_8").unwrap();
        assert_eq!(&delta1(&a, &LinearMap::identity(3)).unwrap(), a.mu());
        let z = AlgebraStructure::zero(2);
        assert!(delta1(&z, &LinearMap::from_i64(2, &[1, 2, 3, 4]).unwrap()).unwrap().is_zero());
    }

    #[test]
    fn delta1_on_two_dim_is_skew_in_plane() {
        let a = fixture("P_2_6").unwrap();
        let d = delta1(&a, &LinearMap::from_i64(2, &[1, 2, 3, 4]).unwrap()).unwrap();
        assert!(d.is_skew());
        assert_eq!(d.at(0, 0), &[int(0), int(0)]);
        assert_eq!(d.at(1, 1), &[int(0), int(0)]);
    }

    #[test]
    fn annihilators() {
        assert!(delta0(&AlgebraStructure::zero(3)).is_full());
        assert!(delta0(&fixture("P_3_6").unwrap()).is_zero());
        let p35 = delta0(&fixture("P_3_5").unwrap());
        assert_eq!(p35, Subspace::span(3, &[Element::basis(3, 2).0]).unwrap());
        assert_eq!(delta0_two_sided(&fixture("P_3_5").unwrap()), p35);
    }

    #[test]
    fn zero_algebra_cohomology() {
        let r = cohomology_report(&AlgebraStructure::zero(2)).unwrap();
        assert_eq!((r.dim_z2, r.dim_b2, r.dim_h2), (8, 0, 8));
    }

    #[test]
    fn delta2_matrix_kills_coboundaries() {
        let a = fixture("P_3_9").unwrap();
        let prod = delta2_matrix(&a).matrix.mul(&delta1_matrix(&a).matrix).unwrap();
        assert!(prod.is_zero());
    }
}
