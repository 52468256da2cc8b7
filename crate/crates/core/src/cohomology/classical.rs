//! Chevalley, Harrison and Lichnerowicz–Poisson coboundaries of a Poisson
//! pair, the correction operators `L₁`, `L₂`, and the decomposition of `δ²`
//! into them.

use num_traits::Zero;
use serde::{Deserialize, Serialize};

use super::{delta2_mu, left_nest, right_nest};
use crate::algebra::{add_assign, axpy, sub_assign, AlgebraStructure, Cochain2, Cochain3};
use crate::error::{check_dim, Error, Result};
use crate::exactnum::{int, Matrix, Rational};
use crate::structure::PoissonPair;

/// Coefficients `c` with
/// `δ²φ = c₀ δ_C φ_a + c₁ δ_H φ_s + c₂ δ̃_C φ_s + c₃ δ̃_H φ_a + c₄ L₁(φ_a) + c₅ L₂(φ_s)`.
pub const DECOMPOSITION_COEFFICIENTS: [i64; 6] = [2, 4, 2, 2, 2, 2];

fn trilinear(n: usize, mut f: impl FnMut(&mut Vec<Rational>, usize, usize, usize)) -> Cochain3 {
    Cochain3::from_fn(n, |x, y, z| {
        let mut out = vec![Rational::zero(); n];
        f(&mut out, x, y, z);
        out
    })
}

/// `{φ(X,Y),Z} + {φ(Y,Z),X} + {φ(Z,X),Y} + φ({X,Y},Z) + φ({Y,Z},X) + φ({Z,X},Y)`,
/// applied to any bilinear `φ` (this is `δ̃_C` off the skew cochains).
pub fn delta_chevalley(bracket: &AlgebraStructure, phi: &Cochain2) -> Result<Cochain3> {
    check_dim(bracket.dim(), phi.dim())?;
    let b = bracket.mu();
    Ok(trilinear(b.dim(), |out, x, y, z| {
        for (p, q, r) in [(x, y, z), (y, z, x), (z, x, y)] {
            add_assign(out, &left_nest(b, phi, p, q, r));
            add_assign(out, &left_nest(phi, b, p, q, r));
        }
    }))
}

/// `φ(X,Y)•Z − X•φ(Y,Z) + φ(X•Y,Z) − φ(X,Y•Z)`, applied to any bilinear `φ`
/// (this is `δ̃_H` off the symmetric cochains).
pub fn delta_harrison(product: &AlgebraStructure, phi: &Cochain2) -> Result<Cochain3> {
    check_dim(product.dim(), phi.dim())?;
    let p = product.mu();
    Ok(trilinear(p.dim(), |out, x, y, z| {
        add_assign(out, &left_nest(p, phi, x, y, z));
        sub_assign(out, &right_nest(p, phi, x, y, z));
        add_assign(out, &left_nest(phi, p, x, y, z));
        sub_assign(out, &right_nest(phi, p, x, y, z));
    }))
}

/// `L₁(φ)(X,Y,Z) = φ(X•Y,Z) − φ(X,Z)•Y − X•φ(Y,Z)`.
pub fn l1(product: &AlgebraStructure, phi: &Cochain2) -> Result<Cochain3> {
    check_dim(product.dim(), phi.dim())?;
    let p = product.mu();
    Ok(trilinear(p.dim(), |out, x, y, z| {
        add_assign(out, &left_nest(phi, p, x, y, z));
        sub_assign(out, &left_nest(p, phi, x, z, y));
        sub_assign(out, &right_nest(p, phi, x, y, z));
    }))
}

/// `L₂(φ)(X,Y,Z) = −3φ(X,{Y,Z}) + {φ(X,Y),Z} − {φ(X,Z),Y}`.
pub fn l2(bracket: &AlgebraStructure, phi: &Cochain2) -> Result<Cochain3> {
    check_dim(bracket.dim(), phi.dim())?;
    let b = bracket.mu();
    let minus_three = int(-3);
    Ok(trilinear(b.dim(), |out, x, y, z| {
        axpy(out, &minus_three, &right_nest(phi, b, x, y, z));
        add_assign(out, &left_nest(b, phi, x, y, z));
        sub_assign(out, &left_nest(b, phi, x, z, y));
    }))
}

/// Skew-symmetric and a derivation of the product in each argument.
pub fn is_biderivation(pair: &PoissonPair, phi: &Cochain2) -> Result<bool> {
    Ok(phi.is_skew() && l1(pair.product(), phi)?.is_zero())
}

/// Lichnerowicz–Poisson coboundary of a skew biderivation:
/// `[X₀,φ(X₁,X₂)] − [X₁,φ(X₀,X₂)] + [X₂,φ(X₀,X₁)]
///  − φ({X₀,X₁},X₂) + φ({X₀,X₂},X₁) − φ({X₁,X₂},X₀)`.
pub fn delta_lp(pair: &PoissonPair, phi: &Cochain2) -> Result<Cochain3> {
    check_dim(pair.dim(), phi.dim())?;
    if !phi.is_skew() {
        return Err(Error::NotBiderivation("cochain is not skew-symmetric".into()));
    }
    if let Some((idx, v)) = l1(pair.product(), phi)?.first_nonzero() {
        return Err(Error::NotBiderivation(format!("L1 is nonzero at {idx:?}: {:?}", v.0)));
    }
    Ok(delta_lp_unchecked(pair.bracket(), phi))
}

pub(crate) fn delta_lp_unchecked(bracket: &AlgebraStructure, phi: &Cochain2) -> Cochain3 {
    let b = bracket.mu();
    trilinear(b.dim(), |out, x, y, z| {
        add_assign(out, &right_nest(b, phi, x, y, z));
        sub_assign(out, &right_nest(b, phi, y, x, z));
        add_assign(out, &right_nest(b, phi, z, x, y));
        sub_assign(out, &left_nest(phi, b, x, y, z));
        add_assign(out, &left_nest(phi, b, x, z, y));
        sub_assign(out, &left_nest(phi, b, y, z, x));
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassicalOperators {
    pub delta_c_skew: Cochain3,
    pub delta_h_sym: Cochain3,
    pub tilde_delta_c_sym: Cochain3,
    pub tilde_delta_h_skew: Cochain3,
    pub l1_skew: Cochain3,
    pub l2_sym: Cochain3,
    /// Present when `φ` is a skew biderivation.
    pub delta_lp: Option<Cochain3>,
}

impl ClassicalOperators {
    /// The six terms in [`DECOMPOSITION_COEFFICIENTS`] order.
    pub fn terms(&self) -> [&Cochain3; 6] {
        [
            &self.delta_c_skew,
            &self.delta_h_sym,
            &self.tilde_delta_c_sym,
            &self.tilde_delta_h_skew,
            &self.l1_skew,
            &self.l2_sym,
        ]
    }

    /// `Σ cᵢ termᵢ`.
    pub fn combination(&self, coeffs: &[Rational]) -> Result<Cochain3> {
        check_dim(6, coeffs.len())?;
        let mut acc = Cochain3::zeros(self.delta_c_skew.dim());
        for (c, t) in coeffs.iter().zip(self.terms()) {
            acc.add_assign(&t.scale(c));
        }
        Ok(acc)
    }
}

pub fn classical_operators(pair: &PoissonPair, phi: &Cochain2) -> Result<ClassicalOperators> {
    check_dim(pair.dim(), phi.dim())?;
    let (b, p) = (pair.bracket(), pair.product());
    let (skew, sym) = (phi.skew_part(), phi.symmetric_part());
    let delta_lp = if is_biderivation(pair, phi)? { Some(delta_lp_unchecked(b, phi)) } else { None };
    Ok(ClassicalOperators {
        delta_c_skew: delta_chevalley(b, &skew)?,
        delta_h_sym: delta_harrison(p, &sym)?,
        tilde_delta_c_sym: delta_chevalley(b, &sym)?,
        tilde_delta_h_skew: delta_harrison(p, &skew)?,
        l1_skew: l1(p, &skew)?,
        l2_sym: l2(b, &sym)?,
        delta_lp,
    })
}

/// Solves for the coefficient vector reproducing `δ²φ` from the six
/// classical terms jointly over all samples. Returns `None` when the system
/// is inconsistent or the solution is not unique.
pub fn decomposition_coefficients(samples: &[(PoissonPair, Cochain2)]) -> Result<Option<Vec<Rational>>> {
    let mut rows = Vec::new();
    let mut rhs = Vec::new();
    for (pair, phi) in samples {
        let ops = classical_operators(pair, phi)?;
        let mu = pair.bracket().mu().add(pair.product().mu())?;
        let target = delta2_mu(&mu, phi)?.flatten();
        let terms: Vec<Vec<Rational>> = ops.terms().iter().map(|t| t.flatten()).collect();
        for (t, value) in target.into_iter().enumerate() {
            rows.push(terms.iter().map(|col| col[t].clone()).collect::<Vec<_>>());
            rhs.push(value);
        }
    }
    let m = Matrix::from_rows(6, &rows)?;
    if m.rank() < 6 {
        return Ok(None);
    }
    Ok(m.solve(&rhs))
}
