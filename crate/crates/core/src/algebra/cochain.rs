use num_traits::Zero;

use super::element::{add_assign, axpy, Element};
use crate::error::{check_dim, Result};
use crate::exactnum::{rat, Rational};

/// A bilinear map `φ: V × V → V` on an `n`-dimensional space, with
/// `φ(e_i, e_j) = Σ_k values[i][j][k] e_k`.
///
/// Storage is `(i, j, k)` with `k` fastest. The flattening used for
/// coboundary matrices is different: see [`Cochain2::flatten`].
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Cochain2 {
    dim: usize,
    values: Vec<Rational>,
}

impl Cochain2 {
    pub fn zeros(n: usize) -> Self {
        Self { dim: n, values: vec![Rational::zero(); n * n * n] }
    }

    pub fn from_fn(n: usize, mut f: impl FnMut(usize, usize) -> Vec<Rational>) -> Self {
        let mut values = Vec::with_capacity(n * n * n);
        for i in 0..n {
            for j in 0..n {
                let out = f(i, j);
                assert_eq!(out.len(), n, "cochain output has wrong length");
                values.extend(out);
            }
        }
        Self { dim: n, values }
    }

    /// Builds from `(i, j, k, value)` entries; repeated entries accumulate.
    pub fn from_entries(n: usize, entries: impl IntoIterator<Item = (usize, usize, usize, Rational)>) -> Self {
        let mut c = Self::zeros(n);
        for (i, j, k, v) in entries {
            c.values[(i * n + j) * n + k] += v;
        }
        c
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn values(&self) -> &[Rational] {
        &self.values
    }

    pub fn get(&self, i: usize, j: usize, k: usize) -> &Rational {
        &self.values[(i * self.dim + j) * self.dim + k]
    }

    pub fn set(&mut self, i: usize, j: usize, k: usize, v: Rational) {
        let n = self.dim;
        self.values[(i * n + j) * n + k] = v;
    }

    /// `φ(e_i, e_j)` as a coordinate slice.
    pub fn at(&self, i: usize, j: usize) -> &[Rational] {
        let n = self.dim;
        let start = (i * n + j) * n;
        &self.values[start..start + n]
    }

    pub fn at_mut(&mut self, i: usize, j: usize) -> &mut [Rational] {
        let n = self.dim;
        let start = (i * n + j) * n;
        &mut self.values[start..start + n]
    }

    /// Bilinear evaluation `φ(x, y)` without dimension checks.
    pub(crate) fn eval(&self, x: &[Rational], y: &[Rational]) -> Vec<Rational> {
        let n = self.dim;
        let mut out = vec![Rational::zero(); n];
        for (i, xi) in x.iter().enumerate() {
            if xi.is_zero() {
                continue;
            }
            for (j, yj) in y.iter().enumerate() {
                if yj.is_zero() {
                    continue;
                }
                axpy(&mut out, &(xi * yj), self.at(i, j));
            }
        }
        out
    }

    /// `φ(e_i, y)`.
    pub(crate) fn eval_left_basis(&self, i: usize, y: &[Rational]) -> Vec<Rational> {
        let mut out = vec![Rational::zero(); self.dim];
        for (j, yj) in y.iter().enumerate() {
            axpy(&mut out, yj, self.at(i, j));
        }
        out
    }

    /// `φ(x, e_j)`.
    pub(crate) fn eval_right_basis(&self, x: &[Rational], j: usize) -> Vec<Rational> {
        let mut out = vec![Rational::zero(); self.dim];
        for (i, xi) in x.iter().enumerate() {
            axpy(&mut out, xi, self.at(i, j));
        }
        out
    }

    pub fn apply(&self, x: &Element, y: &Element) -> Result<Element> {
        check_dim(self.dim, x.dim())?;
        check_dim(self.dim, y.dim())?;
        Ok(Element(self.eval(x, y)))
    }

    pub fn is_zero(&self) -> bool {
        self.values.iter().all(Zero::is_zero)
    }

    pub fn add(&self, other: &Cochain2) -> Result<Cochain2> {
        check_dim(self.dim, other.dim)?;
        let values = self.values.iter().zip(&other.values).map(|(a, b)| a + b).collect();
        Ok(Cochain2 { dim: self.dim, values })
    }

    pub fn sub(&self, other: &Cochain2) -> Result<Cochain2> {
        check_dim(self.dim, other.dim)?;
        let values = self.values.iter().zip(&other.values).map(|(a, b)| a - b).collect();
        Ok(Cochain2 { dim: self.dim, values })
    }

    pub fn scale(&self, s: &Rational) -> Cochain2 {
        Cochain2 { dim: self.dim, values: self.values.iter().map(|a| a * s).collect() }
    }

    /// `(X, Y) ↦ φ(Y, X)`.
    pub fn swapped(&self) -> Cochain2 {
        Cochain2::from_fn(self.dim, |i, j| self.at(j, i).to_vec())
    }

    /// `φ_s(X, Y) = (φ(X, Y) + φ(Y, X)) / 2`.
    pub fn symmetric_part(&self) -> Cochain2 {
        let half = rat(1, 2);
        Cochain2::from_fn(self.dim, |i, j| {
            self.at(i, j).iter().zip(self.at(j, i)).map(|(a, b)| (a + b) * &half).collect()
        })
    }

    /// `φ_a(X, Y) = (φ(X, Y) − φ(Y, X)) / 2`.
    pub fn skew_part(&self) -> Cochain2 {
        let half = rat(1, 2);
        Cochain2::from_fn(self.dim, |i, j| {
            self.at(i, j).iter().zip(self.at(j, i)).map(|(a, b)| (a - b) * &half).collect()
        })
    }

    pub fn is_symmetric(&self) -> bool {
        let n = self.dim;
        (0..n).all(|i| (i + 1..n).all(|j| self.at(i, j) == self.at(j, i)))
    }

    pub fn is_skew(&self) -> bool {
        let n = self.dim;
        (0..n).all(|i| {
            self.at(i, i).iter().all(Zero::is_zero)
                && (i + 1..n).all(|j| self.at(i, j).iter().zip(self.at(j, i)).all(|(a, b)| (a + b).is_zero()))
        })
    }

    /// Flat coordinate vector with index `k·n² + i·n + j` (output slowest).
    pub fn flatten(&self) -> Vec<Rational> {
        let n = self.dim;
        let mut out = vec![Rational::zero(); n * n * n];
        for i in 0..n {
            for j in 0..n {
                for (k, v) in self.at(i, j).iter().enumerate() {
                    out[k * n * n + i * n + j] = v.clone();
                }
            }
        }
        out
    }

    pub fn from_flat(n: usize, flat: &[Rational]) -> Result<Cochain2> {
        check_dim(n * n * n, flat.len())?;
        Ok(Cochain2::from_fn(n, |i, j| (0..n).map(|k| flat[k * n * n + i * n + j].clone()).collect()))
    }

    /// Entries `(i, j, k, v)` with `v ≠ 0`, in storage order.
    pub fn nonzero_entries(&self) -> impl Iterator<Item = (usize, usize, usize, &Rational)> + '_ {
        let n = self.dim;
        self.values.iter().enumerate().filter(|(_, v)| !v.is_zero()).map(move |(idx, v)| {
            (idx / (n * n), (idx / n) % n, idx % n, v)
        })
    }
}

/// A trilinear map `V × V × V → V`, with `values[i][j][l][k]` the `e_k`
/// coordinate of `ψ(e_i, e_j, e_l)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Cochain3 {
    dim: usize,
    values: Vec<Rational>,
}

impl Cochain3 {
    pub fn zeros(n: usize) -> Self {
        Self { dim: n, values: vec![Rational::zero(); n * n * n * n] }
    }

    pub fn from_fn(n: usize, mut f: impl FnMut(usize, usize, usize) -> Vec<Rational>) -> Self {
        let mut values = Vec::with_capacity(n.pow(4));
        for i in 0..n {
            for j in 0..n {
                for l in 0..n {
                    let out = f(i, j, l);
                    assert_eq!(out.len(), n, "cochain output has wrong length");
                    values.extend(out);
                }
            }
        }
        Self { dim: n, values }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn values(&self) -> &[Rational] {
        &self.values
    }

    pub fn at(&self, i: usize, j: usize, l: usize) -> &[Rational] {
        let n = self.dim;
        let start = ((i * n + j) * n + l) * n;
        &self.values[start..start + n]
    }

    pub fn is_zero(&self) -> bool {
        self.values.iter().all(Zero::is_zero)
    }

    pub fn add(&self, other: &Cochain3) -> Result<Cochain3> {
        check_dim(self.dim, other.dim)?;
        let values = self.values.iter().zip(&other.values).map(|(a, b)| a + b).collect();
        Ok(Cochain3 { dim: self.dim, values })
    }

    pub fn sub(&self, other: &Cochain3) -> Result<Cochain3> {
        check_dim(self.dim, other.dim)?;
        let values = self.values.iter().zip(&other.values).map(|(a, b)| a - b).collect();
        Ok(Cochain3 { dim: self.dim, values })
    }

    pub fn scale(&self, s: &Rational) -> Cochain3 {
        Cochain3 { dim: self.dim, values: self.values.iter().map(|a| a * s).collect() }
    }

    pub(crate) fn add_assign(&mut self, other: &Cochain3) {
        add_assign(&mut self.values, &other.values);
    }

    /// Lexicographically first basis triple with a nonzero value.
    pub fn first_nonzero(&self) -> Option<([usize; 3], Element)> {
        let n = self.dim;
        (0..n * n * n).find_map(|t| {
            let (i, j, l) = (t / (n * n), (t / n) % n, t % n);
            let v = self.at(i, j, l);
            (!v.iter().all(Zero::is_zero)).then(|| ([i, j, l], Element(v.to_vec())))
        })
    }

    /// Flat coordinate vector with index `k·n³ + i·n² + j·n + l`.
    pub fn flatten(&self) -> Vec<Rational> {
        let n = self.dim;
        let n3 = n * n * n;
        let mut out = vec![Rational::zero(); n * n3];
        for t in 0..n3 {
            for k in 0..n {
                out[k * n3 + t] = self.values[t * n + k].clone();
            }
        }
        out
    }

    pub fn from_flat(n: usize, flat: &[Rational]) -> Result<Cochain3> {
        let n3 = n * n * n;
        check_dim(n * n3, flat.len())?;
        let mut values = Vec::with_capacity(n * n3);
        for t in 0..n3 {
            for k in 0..n {
                values.push(flat[k * n3 + t].clone());
            }
        }
        Ok(Cochain3 { dim: n, values })
    }
}
