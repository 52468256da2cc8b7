use serde::{Deserialize, Serialize};

use crate::algebra::{AlgebraStructure, Element};
use crate::error::{check_dim, Error, Result};
use crate::exactnum::{Matrix, Rational, Subspace};

/// `P = P₀₀ ⊕ P₁₁` for an idempotent `e`: `e` annihilates `P₀₀` from both
/// sides and acts as the identity on `P₁₁`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PierceDecomposition {
    pub idempotent: Element,
    pub p00: Subspace,
    pub p11: Subspace,
}

impl PierceDecomposition {
    /// True when `e` is a unit of the algebra.
    pub fn is_unit(&self) -> bool {
        self.p11.is_full()
    }
}

fn kernel_of(m: &Matrix, shift: bool) -> Subspace {
    if shift {
        m.sub(&Matrix::identity(m.rows())).expect("square").nullspace()
    } else {
        m.nullspace()
    }
}

fn closed(alg: &AlgebraStructure, s: &Subspace) -> bool {
    let b = s.basis();
    b.iter().all(|x| b.iter().all(|y| s.contains(&alg.mul(x, y))))
}

pub fn pierce(alg: &AlgebraStructure, e: &Element) -> Result<PierceDecomposition> {
    check_dim(alg.dim(), e.dim())?;
    if e.is_zero() || alg.mul(e, e) != e.0 {
        return Err(Error::NotIdempotent);
    }
    let l = alg.left_mul_matrix(e);
    let r = alg.right_mul_matrix(e);
    let p00 = kernel_of(&l, false).intersection(&kernel_of(&r, false))?;
    let p11 = kernel_of(&l, true).intersection(&kernel_of(&r, true))?;
    if p00.dim() + p11.dim() != alg.dim() {
        return Err(Error::UnexpectedEigenvalue);
    }
    for (name, s) in [("P00", &p00), ("P11", &p11)] {
        if !closed(alg, s) {
            return Err(Error::Invariant(format!("{name} is not closed under multiplication")));
        }
    }
    Ok(PierceDecomposition { idempotent: e.clone(), p00, p11 })
}

/// For pairwise orthogonal idempotents `e_1, …, e_k`, returns
/// `[∩ P^i₀₀, P^1₁₁, …, P^k₁₁]`, a direct sum decomposition of the space.
pub fn pierce_multi(alg: &AlgebraStructure, es: &[Element]) -> Result<Vec<Subspace>> {
    let n = alg.dim();
    for (a, ea) in es.iter().enumerate() {
        check_dim(n, ea.dim())?;
        for (b, eb) in es.iter().enumerate().skip(a + 1) {
            check_dim(n, eb.dim())?;
            let zero = |v: Vec<Rational>| v.iter().all(num_traits::Zero::is_zero);
            if !zero(alg.mul(ea, eb)) || !zero(alg.mul(eb, ea)) {
                return Err(Error::NotOrthogonal(a, b));
            }
        }
    }
    let parts = es.iter().map(|e| pierce(alg, e)).collect::<Result<Vec<_>>>()?;
    let mut kernel = Subspace::full(n);
    for p in &parts {
        kernel = kernel.intersection(&p.p00)?;
    }
    let mut out = vec![kernel];
    out.extend(parts.into_iter().map(|p| p.p11));
    let total: usize = out.iter().map(Subspace::dim).sum();
    let mut sum = Subspace::zero(n);
    for s in &out {
        sum = sum.sum(s)?;
    }
    if total != n || !sum.is_full() {
        return Err(Error::Invariant(format!(
            "summands have total dimension {total} and span {} of {n}",
            sum.dim()
        )));
    }
    Ok(out)
}
