//! Truncated formal deformations `μ_t = μ + tφ₁ + t²φ₂ + ⋯`: the
//! `∘`-composition, order-by-order obstructions, and base changes by formal
//! power series of linear maps.

use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::algebra::{add_assign, axpy, sub_assign, AlgebraStructure, Cochain2, Cochain3, Element, LinearMap};
use crate::cohomology::{delta2_matrix, delta2_mu};
use crate::error::{check_dim, Error, Result};
use crate::exactnum::{rat, Rational, Subspace};
use crate::identities::check_admissible;

/// Default truncation order.
pub const DEFAULT_ORDER: usize = 4;

/// `φ∘ψ(X,Y,Z) = φ(ψ(X,Y),Z) − φ(X,ψ(Y,Z)) − ⅓φ(ψ(X,Z),Y) − ⅓φ(ψ(Y,Z),X)
///              + ⅓φ(ψ(Y,X),Z) + ⅓φ(ψ(Z,X),Y)`.
pub fn circ(phi: &Cochain2, psi: &Cochain2) -> Result<Cochain3> {
    check_dim(phi.dim(), psi.dim())?;
    let n = phi.dim();
    let (third, minus_third) = (rat(1, 3), rat(-1, 3));
    let outer = |a: usize, b: usize, c: usize| phi.eval_right_basis(psi.at(a, b), c);
    Ok(Cochain3::from_fn(n, |x, y, z| {
        let mut out = outer(x, y, z);
        sub_assign(&mut out, &phi.eval_left_basis(x, psi.at(y, z)));
        axpy(&mut out, &minus_third, &outer(x, z, y));
        axpy(&mut out, &minus_third, &outer(y, z, x));
        axpy(&mut out, &third, &outer(y, x, z));
        axpy(&mut out, &third, &outer(z, x, y));
        out
    }))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FormalDeformation {
    pub base: AlgebraStructure,
    /// `φ₁, …, φ_K`; the truncation order is `K`.
    pub terms: Vec<Cochain2>,
}

impl FormalDeformation {
    pub fn new(base: AlgebraStructure, terms: Vec<Cochain2>) -> Result<Self> {
        for t in &terms {
            check_dim(base.dim(), t.dim())?;
        }
        Ok(Self { base, terms })
    }

    /// The trivial deformation truncated at `order`.
    pub fn trivial(base: AlgebraStructure, order: usize) -> Self {
        let n = base.dim();
        Self { base, terms: vec![Cochain2::zeros(n); order] }
    }

    pub fn order(&self) -> usize {
        self.terms.len()
    }

    /// Pads with zero terms (or truncates) to the given order.
    pub fn with_order(mut self, order: usize) -> Self {
        let n = self.base.dim();
        self.terms.resize(order, Cochain2::zeros(n));
        self
    }

    /// `φ_k` with `φ₀ = μ` and zero beyond the stored terms.
    pub fn term(&self, k: usize) -> Cochain2 {
        match k {
            0 => self.base.mu().clone(),
            _ => self.terms.get(k - 1).cloned().unwrap_or_else(|| Cochain2::zeros(self.base.dim())),
        }
    }

    /// `μ + Σ t^k φ_k` at a rational `t`.
    pub fn evaluate(&self, t: &Rational) -> Cochain2 {
        let mut acc = self.base.mu().clone();
        let mut power = t.clone();
        for phi in &self.terms {
            acc = acc.add(&phi.scale(&power)).expect("same dimension");
            power *= t;
        }
        acc
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct OrderResidual {
    pub order: usize,
    pub vanishes: bool,
    pub witness: Option<(Vec<usize>, Element)>,
    pub residual: Cochain3,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ObstructionReport {
    pub orders: Vec<OrderResidual>,
    pub first_failing_order: Option<usize>,
}

impl ObstructionReport {
    pub fn all_vanish(&self) -> bool {
        self.first_failing_order.is_none()
    }
}

/// `⅓δ²φ_m + Σ_{i+j=m, i,j≥1} φ_i∘φ_j`, the coefficient of `t^m` in a third of
/// the admissibility residual of `μ_t`.
pub fn order_residual(d: &FormalDeformation, m: usize) -> Result<Cochain3> {
    let mu = d.base.mu();
    let mut acc = delta2_mu(mu, &d.term(m))?.scale(&rat(1, 3));
    for i in 1..m {
        let (a, b) = (d.term(i), d.term(m - i));
        if a.is_zero() || b.is_zero() {
            continue;
        }
        acc.add_assign(&circ(&a, &b)?);
    }
    Ok(acc)
}

/// Residuals for orders `1..=d.order()`.
pub fn obstructions(d: &FormalDeformation) -> Result<ObstructionReport> {
    let mut orders = Vec::new();
    let mut first_failing_order = None;
    for m in 1..=d.order() {
        let residual = order_residual(d, m)?;
        let witness = residual.first_nonzero().map(|(idx, v)| (idx.to_vec(), v));
        if witness.is_some() && first_failing_order.is_none() {
            first_failing_order = Some(m);
        }
        orders.push(OrderResidual { order: m, vanishes: witness.is_none(), witness, residual });
    }
    Ok(ObstructionReport { orders, first_failing_order })
}

fn series_inverse(f: &[LinearMap], order: usize) -> Result<Vec<LinearMap>> {
    let n = f[0].dim();
    let f0_inv = f[0].inverse()?;
    let mut g = vec![f0_inv.clone()];
    for m in 1..=order {
        let mut acc = LinearMap::zero(n);
        for k in 1..=m.min(f.len() - 1) {
            acc = acc.add(&f[k].compose(&g[m - k])?)?;
        }
        g.push(f0_inv.compose(&acc)?.scale(&rat(-1, 1)));
    }
    Ok(g)
}

/// The deformation `f⁻¹(μ_t(fX, fY))` with `f = f₀ + t f₁ + ⋯`, truncated at
/// the order of `d`.
pub fn apply_equivalence(d: &FormalDeformation, f_terms: &[LinearMap]) -> Result<FormalDeformation> {
    let n = d.base.dim();
    if f_terms.is_empty() {
        return Err(Error::InvalidData("an equivalence needs at least the constant term".into()));
    }
    for f in f_terms {
        check_dim(n, f.dim())?;
    }
    let k = d.order();
    let f: Vec<LinearMap> = (0..=k).map(|i| f_terms.get(i).cloned().unwrap_or_else(|| LinearMap::zero(n))).collect();
    let g = series_inverse(&f, k)?;
    let images: Vec<Vec<Vec<Rational>>> = f.iter().map(|fi| (0..n).map(|i| fi.image(i)).collect()).collect();
    let phis: Vec<Cochain2> = (0..=k).map(|i| d.term(i)).collect();
    let coefficient = |m: usize| {
        Cochain2::from_fn(n, |x, y| {
            let mut out = vec![Rational::zero(); n];
            for a in 0..=m {
                for b in 0..=m - a {
                    if phis[b].is_zero() {
                        continue;
                    }
                    for c in 0..=m - a - b {
                        let e = m - a - b - c;
                        let inner = phis[b].eval(&images[c][x], &images[e][y]);
                        if inner.iter().all(Zero::is_zero) {
                            continue;
                        }
                        add_assign(&mut out, &g[a].eval(&inner));
                    }
                }
            }
            out
        })
    };
    let base = AlgebraStructure::new(coefficient(0));
    let base = match d.base.name() {
        Some(name) => base.with_name(name),
        None => base,
    };
    FormalDeformation::new(base, (1..=k).map(coefficient).collect())
}

/// Infinitesimal deformations: the kernel of `δ²`, as flattened cochains.
pub fn first_order_space(alg: &AlgebraStructure) -> Result<Subspace> {
    let report = check_admissible(alg);
    if !report.all_hold() {
        return Err(Error::NotAdmissible(format!("{:?}", report.witnesses)));
    }
    Ok(delta2_matrix(alg).matrix.nullspace())
}

/// A `φ₂` with `⅓δ²φ₂ + φ₁∘φ₁ = 0`, if one exists.
pub fn second_order_extension(alg: &AlgebraStructure, phi1: &Cochain2) -> Result<Option<Cochain2>> {
    check_dim(alg.dim(), phi1.dim())?;
    let rhs: Vec<Rational> = circ(phi1, phi1)?.flatten().into_iter().map(|v| v * rat(-3, 1)).collect();
    Ok(match delta2_matrix(alg).matrix.solve(&rhs) {
        Some(x) => Some(Cochain2::from_flat(alg.dim(), &x)?),
        None => None,
    })
}
