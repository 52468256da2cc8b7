use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;

use crate::algebra::{AlgebraStructure, Element};
use crate::exactnum::{int, Matrix, Rational, Subspace};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum SimplicityVerdict {
    NotSimple,
    ProbablySimple,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MultiplicationAlgebraReport {
    /// Dimension of the associative algebra generated by all `L_x`, `R_x`.
    pub dim: usize,
    /// Basis of that algebra in row-major flattened `n × n` matrices.
    pub basis: Subspace,
    /// The operator relations, each checked on the basis and random elements.
    pub relations: BTreeMap<String, bool>,
    pub simplicity: SimplicityVerdict,
    /// A proper nonzero two-sided ideal when one was found.
    pub ideal: Option<Subspace>,
    pub reason: String,
}

fn flat(m: &Matrix) -> Vec<Rational> {
    m.data().to_vec()
}

fn unflat(n: usize, v: &[Rational]) -> Matrix {
    Matrix::from_vec(n, n, v.to_vec()).expect("n² entries")
}

fn generators(alg: &AlgebraStructure) -> Vec<Matrix> {
    let n = alg.dim();
    (0..n)
        .flat_map(|i| {
            let e = Element::basis(n, i);
            [alg.left_mul_matrix(&e), alg.right_mul_matrix(&e)]
        })
        .collect()
}

/// Closure of `{L_{e_i}, R_{e_i}}` under composition.
pub fn operator_span(alg: &AlgebraStructure) -> Subspace {
    let n = alg.dim();
    let gens = generators(alg);
    let rows: Vec<Vec<Rational>> = gens.iter().map(flat).collect();
    let mut span = Subspace::span(n * n, &rows).expect("n² entries");
    loop {
        let mut rows: Vec<Vec<Rational>> = span.basis().to_vec();
        for s in span.basis() {
            let m = unflat(n, s);
            for g in &gens {
                rows.push(flat(&g.mul(&m).expect("square")));
            }
        }
        let next = Subspace::span(n * n, &rows).expect("n² entries");
        if next.dim() == span.dim() {
            return span;
        }
        span = next;
    }
}

/// `L_x R_x = R_x L_x`, `4L_{x²} = 3L_x² − R_x² + 2R_xL_x` and
/// `4R_{x²} = 3R_x² − L_x² + 2R_xL_x`, or `None` if all hold.
pub fn operator_relation_failure(alg: &AlgebraStructure, x: &[Rational]) -> Option<&'static str> {
    let l = alg.left_mul_matrix(x);
    let r = alg.right_mul_matrix(x);
    let x2 = alg.mul(x, x);
    let mm = |a: &Matrix, b: &Matrix| a.mul(b).expect("square");
    let (ll, rr, rl, lr) = (mm(&l, &l), mm(&r, &r), mm(&r, &l), mm(&l, &r));
    if lr != rl {
        return Some("commuting");
    }
    let lhs = alg.left_mul_matrix(&x2).scale(&int(4));
    let rhs = ll.scale(&int(3)).sub(&rr).and_then(|m| m.add(&rl.scale(&int(2)))).expect("square");
    if lhs != rhs {
        return Some("left_square");
    }
    let lhs = alg.right_mul_matrix(&x2).scale(&int(4));
    let rhs = rr.scale(&int(3)).sub(&ll).and_then(|m| m.add(&rl.scale(&int(2)))).expect("square");
    if lhs != rhs {
        return Some("right_square");
    }
    None
}

/// Smallest two-sided ideal containing `v`.
pub fn ideal_closure(alg: &AlgebraStructure, v: &[Rational]) -> Subspace {
    let n = alg.dim();
    let mut span = Subspace::span(n, &[v.to_vec()]).expect("length n");
    loop {
        let mut rows = span.basis().to_vec();
        for b in span.basis() {
            for j in 0..n {
                let e = Element::basis(n, j);
                rows.push(alg.mul(b, &e));
                rows.push(alg.mul(&e, b));
            }
        }
        let next = Subspace::span(n, &rows).expect("length n");
        if next.dim() == span.dim() {
            return span;
        }
        span = next;
    }
}

pub fn multiplication_algebra(alg: &AlgebraStructure, trials: usize, seed: u64) -> MultiplicationAlgebraReport {
    let n = alg.dim();
    let basis = operator_span(alg);
    let mut rng = crate::random::rng(seed);
    let samples: Vec<Element> = (0..n)
        .map(|i| Element::basis(n, i))
        .chain((0..trials).map(|_| crate::random::element(&mut rng, n)))
        .collect();
    let mut relations: BTreeMap<String, bool> =
        ["commuting", "left_square", "right_square"].iter().map(|k| (k.to_string(), true)).collect();
    for x in &samples {
        if let Some(name) = operator_relation_failure(alg, x) {
            relations.insert(name.to_string(), false);
        }
    }

    let square = alg.square_span();
    let (simplicity, ideal, reason) = if n == 0 || alg.is_zero_product() {
        let ideal = (n > 1).then(|| Subspace::span(n, &[Element::basis(n, 0).0]).expect("length n"));
        (SimplicityVerdict::NotSimple, ideal, "P² = 0".to_string())
    } else if !square.is_full() {
        (SimplicityVerdict::NotSimple, Some(square), "P² is a proper ideal".to_string())
    } else {
        let found = samples.iter().filter(|x| !x.is_zero()).map(|x| ideal_closure(alg, x)).find(|s| !s.is_full());
        match found {
            Some(s) => (SimplicityVerdict::NotSimple, Some(s), "ideal generated by a probe element".to_string()),
            None => (
                SimplicityVerdict::ProbablySimple,
                None,
                format!("ideals generated by {} probe elements are all the whole space", samples.len()),
            ),
        }
    };
    MultiplicationAlgebraReport { dim: basis.dim(), basis, relations, simplicity, ideal, reason }
}
