use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::algebra::{AlgebraStructure, Cochain2, Cochain3};
use crate::error::{check_dim, Error, Result};
use crate::exactnum::{int, rat, Matrix, Rational, Subspace, UniPoly};
use crate::identities::{associator_tensor, check_lie, leibniz_residual};

/// Symmetric products `•` satisfying the Leibniz rule with a fixed Lie
/// bracket. This is a linear space; the Poisson products are its points
/// with vanishing associator.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CompatibleProducts {
    bracket: AlgebraStructure,
    /// Flattened `Cochain2` coordinates (see [`Cochain2::flatten`]).
    space: Subspace,
    basis: Vec<Cochain2>,
}

/// The set of associative points of a [`CompatibleProducts`] space.
///
/// The associator is a quadratic map `P ↦ B(P, P)`. Its radical
/// `core = {P : B(P, Q) = 0 for all Q}` lies in the set, and the set is
/// `core ⊕ (zeros on a complement)`. The complement part is decided exactly
/// when it has dimension at most 2.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ProductVariety {
    pub linear_dim: usize,
    pub core: Subspace,
    pub complement_dim: usize,
    /// Dimension of the set over ℂ, when decided.
    pub dim: Option<usize>,
    /// Whether the set is a linear subspace, when decided.
    pub is_subspace: Option<bool>,
    /// Number of lines (over ℂ) of zeros on the complement, when decided.
    pub extra_lines: Option<usize>,
}

fn unit_product(n: usize, i: usize, j: usize, k: usize) -> Cochain2 {
    let mut c = Cochain2::zeros(n);
    c.set(i, j, k, int(1));
    c.set(j, i, k, int(1));
    c
}

fn leibniz_tensor(bracket: &Cochain2, product: &Cochain2) -> Vec<Rational> {
    let n = bracket.dim();
    let mut out = Vec::with_capacity(n.pow(4));
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                out.extend(leibniz_residual(bracket, product, i, j, k));
            }
        }
    }
    out
}

pub fn compatible_products(bracket: &AlgebraStructure) -> Result<CompatibleProducts> {
    let report = check_lie(bracket);
    if !report.all_hold() {
        return Err(Error::NotLie(format!("{:?}", report.witnesses)));
    }
    let n = bracket.dim();
    let units: Vec<Cochain2> = (0..n)
        .flat_map(|i| (i..n).flat_map(move |j| (0..n).map(move |k| (i, j, k))))
        .map(|(i, j, k)| unit_product(n, i, j, k))
        .collect();
    let columns: Vec<Vec<Rational>> = units.iter().map(|u| leibniz_tensor(bracket.mu(), u)).collect();
    let rows = n.pow(4);
    let m = Matrix::from_fn(rows, units.len(), |r, c| columns[c][r].clone());
    let kernel = m.nullspace();
    let vectors: Vec<Vec<Rational>> = kernel
        .basis()
        .iter()
        .map(|coeffs| {
            let mut acc = Cochain2::zeros(n);
            for (c, u) in coeffs.iter().zip(&units) {
                if !c.is_zero() {
                    acc = acc.add(&u.scale(c)).expect("same dimension");
                }
            }
            acc.flatten()
        })
        .collect();
    let space = Subspace::span(n * n * n, &vectors)?;
    let basis = space.basis().iter().map(|v| Cochain2::from_flat(n, v).expect("flattened length")).collect();
    Ok(CompatibleProducts { bracket: bracket.clone(), space, basis })
}

impl CompatibleProducts {
    pub fn bracket(&self) -> &AlgebraStructure {
        &self.bracket
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn space(&self) -> &Subspace {
        &self.space
    }

    pub fn basis(&self) -> &[Cochain2] {
        &self.basis
    }

    /// `Σ c_a basis[a]`.
    pub fn product_at(&self, coeffs: &[Rational]) -> Result<Cochain2> {
        check_dim(self.dim(), coeffs.len())?;
        let flat = self.space.combination(coeffs)?;
        Cochain2::from_flat(self.bracket.dim(), &flat)
    }

    pub fn contains(&self, product: &Cochain2) -> bool {
        product.dim() == self.bracket.dim() && self.space.contains(&product.flatten())
    }

    /// Associator of the product at the given coordinates.
    pub fn associativity_residual(&self, coeffs: &[Rational]) -> Result<Cochain3> {
        Ok(associator_tensor(&AlgebraStructure::new(self.product_at(coeffs)?)))
    }

    /// Polarization `B(P, Q) = ½(A(P+Q) − A(P) − A(Q))` of basis vectors.
    fn polar(&self, a: usize, b: usize) -> Vec<Rational> {
        let assoc = |c: &Cochain2| associator_tensor(&AlgebraStructure::new(c.clone())).flatten();
        let (p, q) = (&self.basis[a], &self.basis[b]);
        let sum = assoc(&p.add(q).expect("same dimension"));
        let (ap, aq) = (assoc(p), assoc(q));
        let half = rat(1, 2);
        sum.iter().zip(&ap).zip(&aq).map(|((s, x), y)| (s - x - y) * &half).collect()
    }

    pub fn variety(&self) -> ProductVariety {
        let d = self.dim();
        let polar: Vec<Vec<Vec<Rational>>> = (0..d).map(|a| (0..d).map(|b| self.polar(a, b)).collect()).collect();
        let len = polar.first().map_or(0, |p| p.first().map_or(0, Vec::len));
        let mut rows = Vec::new();
        for b in 0..d {
            for t in 0..len {
                rows.push((0..d).map(|a| polar[a][b][t].clone()).collect::<Vec<_>>());
            }
        }
        let radical = if rows.is_empty() {
            Subspace::full(d)
        } else {
            Matrix::from_rows(d, &rows).expect("consistent rows").nullspace()
        };
        let core_vectors: Vec<Vec<Rational>> =
            radical.basis().iter().map(|c| self.space.combination(c).expect("coefficient length")).collect();
        let core = Subspace::span(self.space.ambient_dim(), &core_vectors).expect("ambient length");
        let complement = radical.complement_indices();
        let r = core.dim();
        let (dim, is_subspace, extra_lines) = match complement.len() {
            0 | 1 => (Some(r), Some(true), Some(0)),
            2 => {
                let (u, v) = (complement[0], complement[1]);
                let lines = count_zero_lines(&polar[u][u], &polar[u][v], &polar[v][v]);
                (Some(r + usize::from(lines > 0)), Some(lines <= 1), Some(lines))
            }
            _ => (None, None, None),
        };
        ProductVariety { linear_dim: d, core, complement_dim: complement.len(), dim, is_subspace, extra_lines }
    }
}

/// Number of complex lines `[s : t]` on which every binary form
/// `b11 s² + 2 b12 st + b22 t²` vanishes.
fn count_zero_lines(b11: &[Rational], b12: &[Rational], b22: &[Rational]) -> usize {
    let at_infinity = b11.iter().all(Zero::is_zero);
    let mut g = UniPoly::zero();
    for ((a, b), c) in b11.iter().zip(b12).zip(b22) {
        let p = UniPoly::new(vec![c.clone(), b * int(2), a.clone()]);
        if !p.is_zero() {
            g = g.gcd(&p);
        }
    }
    let finite = if g.is_zero() { 0 } else { g.squarefree_part().degree().unwrap_or(0) };
    finite + usize::from(at_infinity)
}
