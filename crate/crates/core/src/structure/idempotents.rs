use num_traits::Zero;

use crate::algebra::{AlgebraStructure, Element};
use crate::error::{check_dim, Result};
use crate::exactnum::{int, rat, Rational, UniPoly};

/// Default number of grid candidates tried by [`find_idempotents`].
pub const DEFAULT_SEARCH_BUDGET: usize = 20_000;

/// `e · e = e` exactly (the zero vector counts as idempotent here).
pub fn is_idempotent(alg: &AlgebraStructure, e: &Element) -> Result<bool> {
    check_dim(alg.dim(), e.dim())?;
    Ok(alg.mul(e, e) == e.0)
}

fn push_unique(found: &mut Vec<Element>, e: Element) {
    if !e.is_zero() && !found.contains(&e) {
        found.push(e);
    }
}

/// Nonzero idempotents found by basis vectors, a coefficient grid over
/// `{0, 1, −1, ½, −½}` (at most `budget` candidates), and for `dim ≤ 2` an
/// exact solve. The exact solve finds every rational idempotent unless the
/// algebra has a one-parameter family of them. No completeness is claimed
/// for `dim ≥ 3`.
pub fn find_idempotents(alg: &AlgebraStructure, budget: usize) -> Vec<Element> {
    let n = alg.dim();
    let mut found = Vec::new();
    for i in 0..n {
        let e = Element::basis(n, i);
        if alg.mul(&e, &e) == e.0 {
            push_unique(&mut found, e);
        }
    }
    match n {
        1 => {
            let c = &alg.product(0, 0)[0];
            if !c.is_zero() {
                push_unique(&mut found, Element(vec![c.recip()]));
            }
        }
        2 => {
            for e in exact_dim2(alg) {
                push_unique(&mut found, e);
            }
        }
        _ => {}
    }
    let grid = [int(0), int(1), int(-1), rat(1, 2), rat(-1, 2)];
    let mut digits = vec![0usize; n];
    for _ in 0..budget {
        if !advance(&mut digits, grid.len()) {
            break;
        }
        let e = Element(digits.iter().map(|&d| grid[d].clone()).collect());
        if alg.mul(&e, &e) == e.0 {
            push_unique(&mut found, e);
        }
    }
    found.sort_by(|a, b| a.0.cmp(&b.0));
    found
}

fn advance(digits: &mut [usize], base: usize) -> bool {
    for d in digits.iter_mut() {
        *d += 1;
        if *d < base {
            return true;
        }
        *d = 0;
    }
    false
}

/// Idempotents of a 2-dimensional algebra. An idempotent spans a line `v`
/// with `v² = λv`, `λ ≠ 0`; for `v = (1, t)` that is the cubic
/// `t·(v²)₀ − (v²)₁ = 0`, and `v = (0, 1)` is checked separately.
fn exact_dim2(alg: &AlgebraStructure) -> Vec<Element> {
    let c = |i: usize, j: usize, k: usize| alg.product(i, j)[k].clone();
    let q = |k: usize| [c(0, 0, k), c(0, 1, k) + c(1, 0, k), c(1, 1, k)];
    let (q0, q1) = (q(0), q(1));
    let cubic = UniPoly::new(vec![
        -q1[0].clone(),
        q0[0].clone() - &q1[1],
        q0[1].clone() - &q1[2],
        q0[2].clone(),
    ]);
    let mut out = Vec::new();
    let mut directions = vec![vec![int(0), int(1)]];
    if let Some(roots) = cubic.rational_roots() {
        directions.extend(roots.into_iter().map(|t| vec![int(1), t]));
    }
    for v in directions {
        let sq = alg.mul(&v, &v);
        let pivot = if v[0].is_zero() { 1 } else { 0 };
        let lambda = &sq[pivot] / &v[pivot];
        if lambda.is_zero() {
            continue;
        }
        let e: Vec<Rational> = v.iter().map(|x| x / &lambda).collect();
        if alg.mul(&e, &e) == e {
            out.push(Element(e));
        }
    }
    out
}
