use serde::{Deserialize, Serialize};

use super::idempotents::{find_idempotents, DEFAULT_SEARCH_BUDGET};
use super::pierce::pierce;
use crate::algebra::{AlgebraStructure, Element};
use crate::error::{Error, Result};
use crate::exactnum::{Matrix, Rational, Subspace};
use crate::identities::check_admissible;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct RadicalOptions {
    /// Random elements tested for nilpotency in addition to the basis.
    pub trials: usize,
    pub seed: u64,
    pub idempotent_budget: usize,
}

impl Default for RadicalOptions {
    fn default() -> Self {
        Self { trials: 50, seed: 0, idempotent_budget: DEFAULT_SEARCH_BUDGET }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RadicalReport {
    /// Radical of the commutative associative part.
    pub jacobson_of_product: Subspace,
    /// Largest two-sided ideal contained in `jacobson_of_product`.
    pub nilradical: Subspace,
    pub is_nilalgebra: bool,
    /// Set when the nilradical is the whole (nonzero) space.
    pub nilradical_is_whole: bool,
    /// Whether every sampled element `x` satisfied `x^{n+1} = 0`.
    pub sampled_nilpotent: bool,
    pub principal_idempotent: Option<Element>,
}

/// Kernel of the trace form `(x, y) ↦ tr(L_{x•y})` of a commutative
/// associative product.
pub fn trace_form_radical(product: &AlgebraStructure) -> Subspace {
    let n = product.dim();
    let traces: Vec<Rational> = (0..n).map(|k| product.left_mul_matrix(&Element::basis(n, k)).trace()).collect();
    Matrix::from_fn(n, n, |i, j| product.product(i, j).iter().zip(&traces).map(|(a, t)| a * t).sum()).nullspace()
}

/// `{x ∈ w : x·P + P·x ⊆ w}`.
fn ideal_step(alg: &AlgebraStructure, w: &Subspace) -> Subspace {
    let n = alg.dim();
    if w.is_zero() {
        return w.clone();
    }
    let functionals = w.annihilator();
    let basis = w.basis();
    let mut rows = Vec::new();
    for f in functionals.basis() {
        for j in 0..n {
            let ej = Element::basis(n, j);
            let dot = |v: Vec<Rational>| -> Rational { f.iter().zip(&v).map(|(a, b)| a * b).sum() };
            rows.push(basis.iter().map(|x| dot(alg.mul(x, &ej))).collect::<Vec<_>>());
            rows.push(basis.iter().map(|x| dot(alg.mul(&ej, x))).collect::<Vec<_>>());
        }
    }
    if rows.is_empty() {
        return w.clone();
    }
    let kernel = Matrix::from_rows(basis.len(), &rows).expect("consistent rows").nullspace();
    let vectors: Vec<Vec<Rational>> =
        kernel.basis().iter().map(|c| w.combination(c).expect("coefficient length")).collect();
    Subspace::span(n, &vectors).expect("ambient length")
}

/// Largest subspace of `start` that is a two-sided ideal.
pub fn largest_ideal_in(alg: &AlgebraStructure, start: &Subspace) -> Subspace {
    let mut w = start.clone();
    loop {
        let next = ideal_step(alg, &w);
        if next.dim() == w.dim() {
            return next;
        }
        w = next;
    }
}

/// `x^{n+1} = 0`.
pub fn is_nilpotent_element(alg: &AlgebraStructure, x: &Element) -> bool {
    let n = alg.dim();
    alg.power(x, n + 1).map(|p| p.is_zero()).unwrap_or(false)
}

pub fn radicals(alg: &AlgebraStructure) -> Result<RadicalReport> {
    radicals_with(alg, RadicalOptions::default())
}

/// `J(A_P)` by the trace form, `N(P)` by descending fixpoint inside it.
///
/// Powers in an admissible algebra coincide with powers in its commutative
/// part, so `P` is a nilalgebra exactly when `J(A_P) = P`; that is the
/// verdict. Sampling is run as a cross-check.
pub fn radicals_with(alg: &AlgebraStructure, opts: RadicalOptions) -> Result<RadicalReport> {
    let report = check_admissible(alg);
    if !report.all_hold() {
        return Err(Error::NotAdmissible(format!("{:?}", report.witnesses)));
    }
    let n = alg.dim();
    let product = alg.symmetric_part();
    let jacobson_of_product = trace_form_radical(&product);
    let nilradical = largest_ideal_in(alg, &jacobson_of_product);
    let is_nilalgebra = jacobson_of_product.is_full();

    let mut rng = crate::random::rng(opts.seed);
    let sampled_nilpotent = (0..n)
        .map(|i| Element::basis(n, i))
        .chain((0..opts.trials).map(|_| crate::random::element(&mut rng, n)))
        .all(|x| is_nilpotent_element(alg, &x));
    if is_nilalgebra && !sampled_nilpotent {
        return Err(Error::Invariant("radical certificate says nil but a sample is not nilpotent".into()));
    }

    let mut principal_idempotent = None;
    let mut best = 0;
    for e in find_idempotents(alg, opts.idempotent_budget) {
        let d = pierce(alg, &e)?.p11.dim();
        if d > best {
            best = d;
            principal_idempotent = Some(e);
        }
    }
    Ok(RadicalReport {
        nilradical_is_whole: n > 0 && nilradical.is_full(),
        jacobson_of_product,
        nilradical,
        is_nilalgebra,
        sampled_nilpotent,
        principal_idempotent,
    })
}
