use serde::{Deserialize, Serialize};

use crate::algebra::AlgebraStructure;
use crate::exactnum::{Matrix, Rational, Subspace};

/// Coarse isomorphism-invariant type of a Lie algebra.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum LieType {
    Abelian,
    /// Nilpotent and not abelian.
    Nilpotent,
    /// Solvable and not nilpotent.
    Solvable,
    Semisimple,
    /// Neither solvable nor semisimple.
    Mixed,
}

fn bracket_span(bracket: &AlgebraStructure, a: &[Vec<Rational>], b: &[Vec<Rational>]) -> Subspace {
    let rows: Vec<Vec<Rational>> = a.iter().flat_map(|u| b.iter().map(move |v| bracket.mul(u, v))).collect();
    Subspace::span(bracket.dim(), &rows).expect("products have the ambient length")
}

/// `[g, g]`.
pub fn derived_algebra(bracket: &AlgebraStructure) -> Subspace {
    let full = Subspace::full(bracket.dim());
    bracket_span(bracket, full.basis(), full.basis())
}

pub fn is_nilpotent(bracket: &AlgebraStructure) -> bool {
    let full = Subspace::full(bracket.dim());
    let mut c = full.clone();
    for _ in 0..=bracket.dim() {
        if c.is_zero() {
            return true;
        }
        c = bracket_span(bracket, full.basis(), c.basis());
    }
    c.is_zero()
}

pub fn is_solvable(bracket: &AlgebraStructure) -> bool {
    let mut d = Subspace::full(bracket.dim());
    for _ in 0..=bracket.dim() {
        if d.is_zero() {
            return true;
        }
        d = bracket_span(bracket, d.basis(), d.basis());
    }
    d.is_zero()
}

/// Gram matrix of `(x, y) ↦ tr(ad x ∘ ad y)`.
pub fn killing_form(bracket: &AlgebraStructure) -> Matrix {
    let n = bracket.dim();
    let ads: Vec<Matrix> = (0..n)
        .map(|i| bracket.left_mul_matrix(&crate::algebra::Element::basis(n, i)))
        .collect();
    Matrix::from_fn(n, n, |i, j| ads[i].mul(&ads[j]).expect("square").trace())
}

/// Classifies a Lie bracket (assumed to satisfy the Lie axioms).
pub fn lie_type(bracket: &AlgebraStructure) -> LieType {
    if bracket.is_zero_product() {
        LieType::Abelian
    } else if is_nilpotent(bracket) {
        LieType::Nilpotent
    } else if is_solvable(bracket) {
        LieType::Solvable
    } else if killing_form(bracket).rank() == bracket.dim() {
        LieType::Semisimple
    } else {
        LieType::Mixed
    }
}
