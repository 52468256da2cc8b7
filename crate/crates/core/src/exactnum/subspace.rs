use num_traits::Zero;
use serde::{Deserialize, Serialize};

use super::matrix::Matrix;
use super::rational::Rational;
use crate::error::{check_dim, Result};

/// A linear subspace of ℚ^n stored by its reduced row echelon basis, so equal
/// subspaces have identical representations.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Subspace {
    ambient_dim: usize,
    #[serde(with = "serde_rows")]
    basis: Vec<Vec<Rational>>,
}

mod serde_rows {
    use super::Rational;
    use crate::exactnum::rational::{format_rational, parse_rational};
    use serde::{Deserialize, Deserializer, Serialize, Serializer};

    pub fn serialize<S: Serializer>(rows: &[Vec<Rational>], s: S) -> Result<S::Ok, S::Error> {
        let text: Vec<Vec<String>> =
            rows.iter().map(|r| r.iter().map(format_rational).collect()).collect();
        text.serialize(s)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Vec<Vec<Rational>>, D::Error> {
        let text = Vec::<Vec<String>>::deserialize(d)?;
        text.iter()
            .map(|r| r.iter().map(|t| parse_rational(t).map_err(serde::de::Error::custom)).collect())
            .collect()
    }
}

impl Subspace {
    pub fn zero(n: usize) -> Self {
        Self { ambient_dim: n, basis: Vec::new() }
    }

    pub fn full(n: usize) -> Self {
        let basis = (0..n)
            .map(|i| (0..n).map(|j| if i == j { super::one() } else { super::zero() }).collect())
            .collect();
        Self { ambient_dim: n, basis }
    }

    /// Span of arbitrary (possibly dependent) vectors.
    pub fn span(n: usize, vectors: &[Vec<Rational>]) -> Result<Self> {
        for v in vectors {
            check_dim(n, v.len())?;
        }
        Ok(Self::from_rows_unchecked(n, vectors.to_vec()))
    }

    pub(crate) fn from_independent(n: usize, vectors: Vec<Vec<Rational>>) -> Self {
        Self::from_rows_unchecked(n, vectors)
    }

    pub(crate) fn from_rows_unchecked(n: usize, rows: Vec<Vec<Rational>>) -> Self {
        if rows.is_empty() || n == 0 {
            return Self::zero(n);
        }
        let m = Matrix::from_vec(rows.len(), n, rows.into_iter().flatten().collect())
            .expect("row lengths checked by caller");
        let ech = m.rref();
        let basis = (0..ech.pivots.len()).map(|i| ech.matrix.row(i).to_vec()).collect();
        Self { ambient_dim: n, basis }
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[Vec<Rational>] {
        &self.basis
    }

    pub fn is_zero(&self) -> bool {
        self.basis.is_empty()
    }

    pub fn is_full(&self) -> bool {
        self.basis.len() == self.ambient_dim
    }

    fn pivot(row: &[Rational]) -> usize {
        row.iter().position(|x| !x.is_zero()).expect("echelon rows are nonzero")
    }

    /// Coordinates of `v` in the echelon basis, or `None` when `v` is not in
    /// the subspace.
    pub fn coordinates(&self, v: &[Rational]) -> Option<Vec<Rational>> {
        if v.len() != self.ambient_dim {
            return None;
        }
        let mut rest = v.to_vec();
        let mut coords = Vec::with_capacity(self.basis.len());
        for row in &self.basis {
            let p = Self::pivot(row);
            let c = rest[p].clone();
            if !c.is_zero() {
                for (r, b) in rest.iter_mut().zip(row) {
                    if !b.is_zero() {
                        *r -= &c * b;
                    }
                }
            }
            coords.push(c);
        }
        rest.iter().all(Zero::is_zero).then_some(coords)
    }

    pub fn contains(&self, v: &[Rational]) -> bool {
        self.coordinates(v).is_some()
    }

    /// Linear combination of the basis with the given coefficients.
    pub fn combination(&self, coeffs: &[Rational]) -> Result<Vec<Rational>> {
        check_dim(self.basis.len(), coeffs.len())?;
        let mut out = vec![Rational::zero(); self.ambient_dim];
        for (c, row) in coeffs.iter().zip(&self.basis) {
            if c.is_zero() {
                continue;
            }
            for (o, b) in out.iter_mut().zip(row) {
                if !b.is_zero() {
                    *o += c * b;
                }
            }
        }
        Ok(out)
    }

    pub fn sum(&self, other: &Subspace) -> Result<Subspace> {
        check_dim(self.ambient_dim, other.ambient_dim)?;
        let rows = self.basis.iter().chain(&other.basis).cloned().collect();
        Ok(Self::from_rows_unchecked(self.ambient_dim, rows))
    }

    /// Intersection via the kernel of `[A^T | -B^T]`.
    pub fn intersection(&self, other: &Subspace) -> Result<Subspace> {
        check_dim(self.ambient_dim, other.ambient_dim)?;
        let (a, b) = (self.dim(), other.dim());
        if a == 0 || b == 0 {
            return Ok(Self::zero(self.ambient_dim));
        }
        let n = self.ambient_dim;
        let stacked = Matrix::from_fn(n, a + b, |i, j| {
            if j < a {
                self.basis[j][i].clone()
            } else {
                -other.basis[j - a][i].clone()
            }
        });
        let kernel = stacked.nullspace();
        let rows = kernel
            .basis()
            .iter()
            .map(|k| self.combination(&k[..a]).expect("length a"))
            .collect();
        Ok(Self::from_rows_unchecked(n, rows))
    }

    pub fn is_subspace_of(&self, other: &Subspace) -> Result<bool> {
        check_dim(self.ambient_dim, other.ambient_dim)?;
        Ok(self.basis.iter().all(|v| other.contains(v)))
    }

    /// The orthogonal complement with respect to the standard pairing; its
    /// basis vectors are linear functionals cutting out `self`.
    pub fn annihilator(&self) -> Subspace {
        if self.basis.is_empty() {
            return Self::full(self.ambient_dim);
        }
        Matrix::from_rows(self.ambient_dim, &self.basis)
            .expect("consistent rows")
            .nullspace()
    }

    /// Standard basis vectors completing `self` to a basis of the ambient
    /// space (indices of the non-pivot coordinates).
    pub fn complement_indices(&self) -> Vec<usize> {
        let pivots: Vec<usize> = self.basis.iter().map(|r| Self::pivot(r)).collect();
        (0..self.ambient_dim).filter(|i| !pivots.contains(i)).collect()
    }

    /// The image of `self` under the linear map given by `m` (acting on
    /// column vectors).
    pub fn image(&self, m: &Matrix) -> Result<Subspace> {
        check_dim(self.ambient_dim, m.cols())?;
        let rows = self.basis.iter().map(|v| m.mul_vec(v)).collect::<Result<Vec<_>>>()?;
        Ok(Self::from_rows_unchecked(m.rows(), rows))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::int;

    fn e(n: usize, i: usize) -> Vec<Rational> {
        (0..n).map(|j| int((i == j) as i64)).collect()
    }

    #[test]
    fn sum_and_intersection_in_plane() {
        let a = Subspace::span(2, &[e(2, 0)]).unwrap();
        let b = Subspace::span(2, &[e(2, 1)]).unwrap();
        assert_eq!(a.intersection(&b).unwrap().dim(), 0);
        assert_eq!(a.sum(&b).unwrap().dim(), 2);
    }

    #[test]
    fn diagonal_meets_coordinate_plane() {
        let diag = Subspace::span(3, &[vec![int(1), int(1), int(0)]]).unwrap();
        let plane = Subspace::span(3, &[e(3, 0), e(3, 1)]).unwrap();
        assert_eq!(diag.intersection(&plane).unwrap(), diag);
    }

    #[test]
    fn canonical_form_is_basis_independent() {
        let a = Subspace::span(3, &[vec![int(1), int(2), int(3)], vec![int(0), int(1), int(1)]]).unwrap();
        let b = Subspace::span(3, &[vec![int(1), int(3), int(4)], vec![int(2), int(5), int(7)]]).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn dimension_mismatch_is_reported() {
        let a = Subspace::zero(2);
        let b = Subspace::zero(3);
        assert!(a.sum(&b).is_err());
        assert!(a.intersection(&b).is_err());
    }

    #[test]
    fn annihilator_cuts_out_subspace() {
        let a = Subspace::span(3, &[vec![int(1), int(1), int(0)]]).unwrap();
        let ann = a.annihilator();
        assert_eq!(ann.dim(), 2);
        for f in ann.basis() {
            let dot: Rational = f.iter().zip(&a.basis()[0]).map(|(x, y)| x * y).sum();
            assert!(dot.is_zero());
        }
    }
}
