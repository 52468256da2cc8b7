use num_traits::Zero;
use serde::{Deserialize, Serialize};

use super::cochain::Cochain2;
use super::element::{sub_assign, Element};
use super::linear_map::LinearMap;
use crate::error::{check_dim, Error, Result};
use crate::exactnum::{Matrix, Rational};

/// A finite-dimensional algebra given by structure constants:
/// `e_i · e_j = Σ_k c[i][j][k] e_k`. No symmetry is assumed.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "super::json::AlgebraWire", into = "super::json::AlgebraWire")]
pub struct AlgebraStructure {
    name: Option<String>,
    mu: Cochain2,
}

impl AlgebraStructure {
    pub fn new(mu: Cochain2) -> Self {
        Self { name: None, mu }
    }

    pub fn zero(n: usize) -> Self {
        Self::new(Cochain2::zeros(n))
    }

    /// Builds from `(i, j, k, c)` entries meaning `e_i · e_j += c e_k`.
    pub fn from_entries(n: usize, entries: impl IntoIterator<Item = (usize, usize, usize, Rational)>) -> Self {
        Self::new(Cochain2::from_entries(n, entries))
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = Some(name.into());
        self
    }

    pub fn name(&self) -> Option<&str> {
        self.name.as_deref()
    }

    pub fn dim(&self) -> usize {
        self.mu.dim()
    }

    /// The multiplication as a bilinear map.
    pub fn mu(&self) -> &Cochain2 {
        &self.mu
    }

    pub fn into_mu(self) -> Cochain2 {
        self.mu
    }

    /// `e_i · e_j`.
    pub fn product(&self, i: usize, j: usize) -> &[Rational] {
        self.mu.at(i, j)
    }

    pub fn multiply(&self, x: &Element, y: &Element) -> Result<Element> {
        self.mu.apply(x, y)
    }

    pub(crate) fn mul(&self, x: &[Rational], y: &[Rational]) -> Vec<Rational> {
        self.mu.eval(x, y)
    }

    pub(crate) fn assoc(&self, x: &[Rational], y: &[Rational], z: &[Rational]) -> Vec<Rational> {
        let mut out = self.mul(&self.mul(x, y), z);
        sub_assign(&mut out, &self.mul(x, &self.mul(y, z)));
        out
    }

    /// `A(e_i, e_j, e_k) = (e_i e_j) e_k − e_i (e_j e_k)`.
    pub fn associator_basis(&self, i: usize, j: usize, k: usize) -> Vec<Rational> {
        let mut out = self.mu.eval_right_basis(self.product(i, j), k);
        sub_assign(&mut out, &self.mu.eval_left_basis(i, self.product(j, k)));
        out
    }

    pub fn associator(&self, x: &Element, y: &Element, z: &Element) -> Result<Element> {
        for v in [x, y, z] {
            check_dim(self.dim(), v.dim())?;
        }
        Ok(Element(self.assoc(x, y, z)))
    }

    pub fn is_associative(&self) -> bool {
        let n = self.dim();
        (0..n).all(|i| (0..n).all(|j| (0..n).all(|k| self.associator_basis(i, j, k).iter().all(Zero::is_zero))))
    }

    pub fn is_commutative(&self) -> bool {
        self.mu.is_symmetric()
    }

    pub fn is_anticommutative(&self) -> bool {
        self.mu.is_skew()
    }

    pub fn is_zero_product(&self) -> bool {
        self.mu.is_zero()
    }

    /// Left power `x^1 = x`, `x^{i+1} = x · x^i`.
    pub fn power(&self, x: &Element, k: usize) -> Result<Element> {
        check_dim(self.dim(), x.dim())?;
        if k == 0 {
            return Err(Error::ZeroExponent);
        }
        let mut acc = x.0.clone();
        for _ in 1..k {
            acc = self.mul(x, &acc);
        }
        Ok(Element(acc))
    }

    /// The algebra `x ∗ y = p⁻¹(p(x) · p(y))`, i.e. the structure constants in
    /// the basis formed by the columns of `p`.
    pub fn change_basis(&self, p: &LinearMap) -> Result<AlgebraStructure> {
        check_dim(self.dim(), p.dim())?;
        let inv = p.inverse()?;
        let n = self.dim();
        let images: Vec<Vec<Rational>> = (0..n).map(|i| p.image(i)).collect();
        let mu = Cochain2::from_fn(n, |a, b| inv.eval(&self.mul(&images[a], &images[b])));
        Ok(AlgebraStructure { name: self.name.clone(), mu })
    }

    /// Block-diagonal direct sum; basis of `self` first.
    pub fn direct_sum(&self, other: &AlgebraStructure) -> AlgebraStructure {
        let (n, m) = (self.dim(), other.dim());
        let mut entries = Vec::new();
        for (i, j, k, v) in self.mu.nonzero_entries() {
            entries.push((i, j, k, v.clone()));
        }
        for (i, j, k, v) in other.mu.nonzero_entries() {
            entries.push((i + n, j + n, k + n, v.clone()));
        }
        AlgebraStructure::from_entries(n + m, entries)
    }

    /// The algebra with product `½(xy − yx)`.
    pub fn skew_part(&self) -> AlgebraStructure {
        AlgebraStructure::new(self.mu.skew_part())
    }

    /// The algebra with product `½(xy + yx)`.
    pub fn symmetric_part(&self) -> AlgebraStructure {
        AlgebraStructure::new(self.mu.symmetric_part())
    }

    /// Matrix of `L_x: y ↦ x · y`.
    pub fn left_mul_matrix(&self, x: &[Rational]) -> Matrix {
        let n = self.dim();
        let cols: Vec<Vec<Rational>> = (0..n).map(|j| self.mu.eval_right_basis(x, j)).collect();
        Matrix::from_fn(n, n, |k, j| cols[j][k].clone())
    }

    /// Matrix of `R_x: y ↦ y · x`.
    pub fn right_mul_matrix(&self, x: &[Rational]) -> Matrix {
        let n = self.dim();
        let cols: Vec<Vec<Rational>> = (0..n).map(|j| self.mu.eval_left_basis(j, x)).collect();
        Matrix::from_fn(n, n, |k, j| cols[j][k].clone())
    }

    /// `P² = span{e_i e_j}`.
    pub fn square_span(&self) -> crate::exactnum::Subspace {
        let n = self.dim();
        let rows: Vec<Vec<Rational>> =
            (0..n).flat_map(|i| (0..n).map(move |j| (i, j))).map(|(i, j)| self.product(i, j).to_vec()).collect();
        crate::exactnum::Subspace::span(n, &rows).expect("rows have length n")
    }
}

impl From<Cochain2> for AlgebraStructure {
    fn from(mu: Cochain2) -> Self {
        AlgebraStructure::new(mu)
    }
}
