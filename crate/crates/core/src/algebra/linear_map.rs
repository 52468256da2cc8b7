use serde::{Deserialize, Serialize};

use super::element::Element;
use crate::error::{check_dim, Error, Result};
use crate::exactnum::{Matrix, Rational};

/// An endomorphism `f` of an `n`-dimensional space. Column `i` of the matrix
/// is `f(e_i)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "MapWire", into = "MapWire")]
pub struct LinearMap {
    matrix: Matrix,
}

#[derive(Serialize, Deserialize)]
struct MapWire {
    dim: usize,
    #[serde(with = "crate::exactnum::rational::serde_rational_vec")]
    matrix: Vec<Rational>,
}

impl From<LinearMap> for MapWire {
    fn from(f: LinearMap) -> Self {
        MapWire { dim: f.dim(), matrix: f.matrix.data().to_vec() }
    }
}

impl TryFrom<MapWire> for LinearMap {
    type Error = Error;
    fn try_from(w: MapWire) -> Result<Self> {
        LinearMap::from_matrix(Matrix::from_vec(w.dim, w.dim, w.matrix)?)
    }
}

impl LinearMap {
    pub fn identity(n: usize) -> Self {
        Self { matrix: Matrix::identity(n) }
    }

    pub fn zero(n: usize) -> Self {
        Self { matrix: Matrix::zeros(n, n) }
    }

    pub fn from_matrix(matrix: Matrix) -> Result<Self> {
        check_dim(matrix.rows(), matrix.cols())?;
        Ok(Self { matrix })
    }

    /// Builds the map from the images of the basis vectors.
    pub fn from_images(images: &[Vec<Rational>]) -> Result<Self> {
        let n = images.len();
        for v in images {
            check_dim(n, v.len())?;
        }
        Ok(Self { matrix: Matrix::from_fn(n, n, |k, i| images[i][k].clone()) })
    }

    pub fn from_i64(n: usize, row_major: &[i64]) -> Result<Self> {
        Self::from_matrix(Matrix::from_i64(n, n, row_major)?)
    }

    pub fn dim(&self) -> usize {
        self.matrix.rows()
    }

    pub fn matrix(&self) -> &Matrix {
        &self.matrix
    }

    pub fn image(&self, i: usize) -> Vec<Rational> {
        self.matrix.column(i)
    }

    pub(crate) fn eval(&self, x: &[Rational]) -> Vec<Rational> {
        self.matrix.mul_vec(x).expect("dimension checked by caller")
    }

    pub fn apply(&self, x: &Element) -> Result<Element> {
        Ok(Element(self.matrix.mul_vec(x)?))
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &LinearMap) -> Result<LinearMap> {
        Ok(LinearMap { matrix: self.matrix.mul(&other.matrix)? })
    }

    pub fn add(&self, other: &LinearMap) -> Result<LinearMap> {
        Ok(LinearMap { matrix: self.matrix.add(&other.matrix)? })
    }

    pub fn sub(&self, other: &LinearMap) -> Result<LinearMap> {
        Ok(LinearMap { matrix: self.matrix.sub(&other.matrix)? })
    }

    pub fn scale(&self, s: &Rational) -> LinearMap {
        LinearMap { matrix: self.matrix.scale(s) }
    }

    pub fn inverse(&self) -> Result<LinearMap> {
        self.matrix.inverse().map(|matrix| LinearMap { matrix }).ok_or(Error::Singular)
    }

    pub fn is_zero(&self) -> bool {
        self.matrix.is_zero()
    }

    /// Flat coordinates with index `k·n + i` for the `e_k` coordinate of `f(e_i)`.
    pub fn flatten(&self) -> Vec<Rational> {
        self.matrix.data().to_vec()
    }

    pub fn from_flat(n: usize, flat: &[Rational]) -> Result<LinearMap> {
        Self::from_matrix(Matrix::from_vec(n, n, flat.to_vec())?)
    }
}
