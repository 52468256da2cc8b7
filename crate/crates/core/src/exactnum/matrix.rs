use num_traits::{One, Zero};

use super::rational::Rational;
use super::subspace::Subspace;
use crate::error::{check_dim, Result};

/// Dense row-major matrix over the rationals.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<Rational>,
}

/// Reduced row echelon form together with its pivot columns.
#[derive(Clone, Debug)]
pub struct Echelon {
    pub matrix: Matrix,
    pub pivots: Vec<usize>,
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self { rows, cols, data: vec![Rational::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.data[i * n + i] = Rational::one();
        }
        m
    }

    pub fn from_vec(rows: usize, cols: usize, data: Vec<Rational>) -> Result<Self> {
        check_dim(rows * cols, data.len())?;
        Ok(Self { rows, cols, data })
    }

    /// Builds a matrix from rows; all rows must have length `cols`.
    pub fn from_rows(cols: usize, rows: &[Vec<Rational>]) -> Result<Self> {
        let mut data = Vec::with_capacity(rows.len() * cols);
        for r in rows {
            check_dim(cols, r.len())?;
            data.extend(r.iter().cloned());
        }
        Ok(Self { rows: rows.len(), cols, data })
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> Rational) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Self { rows, cols, data }
    }

    pub fn from_i64(rows: usize, cols: usize, values: &[i64]) -> Result<Self> {
        Self::from_vec(rows, cols, values.iter().map(|&v| super::int(v)).collect())
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn data(&self) -> &[Rational] {
        &self.data
    }

    pub fn get(&self, i: usize, j: usize) -> &Rational {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Rational) {
        self.data[i * self.cols + j] = v;
    }

    pub fn add_to(&mut self, i: usize, j: usize, v: &Rational) {
        self.data[i * self.cols + j] += v;
    }

    pub fn row(&self, i: usize) -> &[Rational] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vec<Rational> {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Zero::is_zero)
    }

    pub fn transpose(&self) -> Matrix {
        Matrix::from_fn(self.cols, self.rows, |i, j| self.get(j, i).clone())
    }

    pub fn mul(&self, other: &Matrix) -> Result<Matrix> {
        check_dim(self.cols, other.rows)?;
        let mut out = Matrix::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(k, j);
                    if !b.is_zero() {
                        out.data[i * other.cols + j] += a * b;
                    }
                }
            }
        }
        Ok(out)
    }

    pub fn mul_vec(&self, v: &[Rational]) -> Result<Vec<Rational>> {
        check_dim(self.cols, v.len())?;
        Ok((0..self.rows)
            .map(|i| {
                let mut acc = Rational::zero();
                for (a, b) in self.row(i).iter().zip(v) {
                    if !a.is_zero() && !b.is_zero() {
                        acc += a * b;
                    }
                }
                acc
            })
            .collect())
    }

    pub fn add(&self, other: &Matrix) -> Result<Matrix> {
        check_dim(self.rows, other.rows)?;
        check_dim(self.cols, other.cols)?;
        let data = self.data.iter().zip(&other.data).map(|(a, b)| a + b).collect();
        Ok(Matrix { rows: self.rows, cols: self.cols, data })
    }

    pub fn sub(&self, other: &Matrix) -> Result<Matrix> {
        check_dim(self.rows, other.rows)?;
        check_dim(self.cols, other.cols)?;
        let data = self.data.iter().zip(&other.data).map(|(a, b)| a - b).collect();
        Ok(Matrix { rows: self.rows, cols: self.cols, data })
    }

    pub fn scale(&self, s: &Rational) -> Matrix {
        Matrix { rows: self.rows, cols: self.cols, data: self.data.iter().map(|a| a * s).collect() }
    }

    /// Stacks `other` below `self`.
    pub fn vstack(&self, other: &Matrix) -> Result<Matrix> {
        check_dim(self.cols, other.cols)?;
        let mut data = self.data.clone();
        data.extend(other.data.iter().cloned());
        Ok(Matrix { rows: self.rows + other.rows, cols: self.cols, data })
    }

    pub fn trace(&self) -> Rational {
        (0..self.rows.min(self.cols)).map(|i| self.get(i, i).clone()).sum()
    }

    /// Gauss-Jordan elimination to reduced row echelon form.
    pub fn rref(&self) -> Echelon {
        let (rows, cols) = (self.rows, self.cols);
        let mut m: Vec<Vec<Rational>> = (0..rows).map(|i| self.row(i).to_vec()).collect();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..cols {
            if r == rows {
                break;
            }
            let Some(p) = (r..rows).find(|&i| !m[i][c].is_zero()) else {
                continue;
            };
            m.swap(r, p);
            let inv = m[r][c].recip();
            let support: Vec<usize> = (c..cols).filter(|&j| !m[r][j].is_zero()).collect();
            for &j in &support {
                m[r][j] *= &inv;
            }
            let pivot_row = std::mem::take(&mut m[r]);
            for (i, row) in m.iter_mut().enumerate() {
                if i == r || row.is_empty() || row[c].is_zero() {
                    continue;
                }
                let factor = row[c].clone();
                for &j in &support {
                    row[j] -= &factor * &pivot_row[j];
                }
            }
            m[r] = pivot_row;
            pivots.push(c);
            r += 1;
        }
        let data = m.into_iter().flatten().collect();
        Echelon { matrix: Matrix { rows, cols, data }, pivots }
    }

    pub fn rank(&self) -> usize {
        self.rref().pivots.len()
    }

    /// Exact kernel; `dim = cols - rank`.
    pub fn nullspace(&self) -> Subspace {
        let ech = self.rref();
        let n = self.cols;
        let mut is_pivot = vec![false; n];
        for &p in &ech.pivots {
            is_pivot[p] = true;
        }
        let basis: Vec<Vec<Rational>> = (0..n)
            .filter(|&f| !is_pivot[f])
            .map(|free| {
                let mut v = vec![Rational::zero(); n];
                v[free] = Rational::one();
                for (r, &p) in ech.pivots.iter().enumerate() {
                    let a = ech.matrix.get(r, free);
                    if !a.is_zero() {
                        v[p] = -a;
                    }
                }
                v
            })
            .collect();
        Subspace::from_independent(n, basis)
    }

    /// Span of the columns.
    pub fn column_space(&self) -> Subspace {
        let t = self.transpose();
        Subspace::from_rows_unchecked(self.rows, (0..t.rows).map(|i| t.row(i).to_vec()).collect())
    }

    pub fn inverse(&self) -> Option<Matrix> {
        if self.rows != self.cols {
            return None;
        }
        let n = self.rows;
        let aug = Matrix::from_fn(n, 2 * n, |i, j| {
            if j < n {
                self.get(i, j).clone()
            } else if j - n == i {
                Rational::one()
            } else {
                Rational::zero()
            }
        });
        let ech = aug.rref();
        if ech.pivots.len() < n || ech.pivots[n - 1] != n - 1 {
            return None;
        }
        Some(Matrix::from_fn(n, n, |i, j| ech.matrix.get(i, n + j).clone()))
    }

    /// One solution of `self * x = b`, or `None` when inconsistent.
    pub fn solve(&self, b: &[Rational]) -> Option<Vec<Rational>> {
        if b.len() != self.rows {
            return None;
        }
        let aug = Matrix::from_fn(self.rows, self.cols + 1, |i, j| {
            if j < self.cols {
                self.get(i, j).clone()
            } else {
                b[i].clone()
            }
        });
        let ech = aug.rref();
        if ech.pivots.last() == Some(&self.cols) {
            return None;
        }
        let mut x = vec![Rational::zero(); self.cols];
        for (r, &p) in ech.pivots.iter().enumerate() {
            x[p] = ech.matrix.get(r, self.cols).clone();
        }
        Some(x)
    }
}

pub fn rank(m: &Matrix) -> usize {
    m.rank()
}

pub fn nullspace(m: &Matrix) -> Subspace {
    m.nullspace()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::{int, rat};

    #[test]
    fn rank_examples() {
        assert_eq!(Matrix::identity(2).rank(), 2);
        assert_eq!(Matrix::zeros(3, 5).rank(), 0);
        assert_eq!(Matrix::from_i64(2, 2, &[1, 2, 2, 4]).unwrap().rank(), 1);
    }

    #[test]
    fn nullspace_examples() {
        assert_eq!(Matrix::identity(3).nullspace().dim(), 0);
        assert_eq!(Matrix::zeros(2, 4).nullspace().dim(), 4);
        let k = Matrix::from_i64(1, 3, &[1, 1, 0]).unwrap().nullspace();
        assert_eq!(k.dim(), 2);
        assert!(k.contains(&[int(1), int(-1), int(0)]));
        assert!(k.contains(&[int(0), int(0), int(1)]));
        assert!(!k.contains(&[int(1), int(0), int(0)]));
    }

    #[test]
    fn inverse_and_solve() {
        let m = Matrix::from_i64(2, 2, &[2, 1, 1, 1]).unwrap();
        let inv = m.inverse().unwrap();
        assert_eq!(m.mul(&inv).unwrap(), Matrix::identity(2));
        assert!(Matrix::from_i64(2, 2, &[1, 2, 2, 4]).unwrap().inverse().is_none());
        let x = m.solve(&[int(3), int(2)]).unwrap();
        assert_eq!(x, vec![int(1), int(1)]);
        let singular = Matrix::from_i64(2, 2, &[1, 1, 1, 1]).unwrap();
        assert!(singular.solve(&[int(1), int(2)]).is_none());
        assert_eq!(singular.solve(&[rat(1, 2), rat(1, 2)]).unwrap().len(), 2);
    }
}
