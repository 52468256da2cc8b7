//! Seeded generators for rational test data.

use num_bigint::BigInt;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::algebra::{AlgebraStructure, Cochain2, Element, LinearMap};
use crate::exactnum::{Matrix, Rational};

pub type TestRng = ChaCha8Rng;

pub fn rng(seed: u64) -> TestRng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// A rational with numerator in `-9..=9` and denominator in `1..=9`.
pub fn small_rational(rng: &mut impl Rng) -> Rational {
    Rational::new(BigInt::from(rng.gen_range(-9i64..=9)), BigInt::from(rng.gen_range(1i64..=9)))
}

/// An integer in `-bound..=bound`.
pub fn small_int(rng: &mut impl Rng, bound: i64) -> Rational {
    Rational::from_integer(BigInt::from(rng.gen_range(-bound..=bound)))
}

pub fn element(rng: &mut impl Rng, n: usize) -> Element {
    Element((0..n).map(|_| small_rational(rng)).collect())
}

pub fn int_element(rng: &mut impl Rng, n: usize, bound: i64) -> Element {
    Element((0..n).map(|_| small_int(rng, bound)).collect())
}

/// A dense bilinear map with small integer entries.
pub fn cochain2(rng: &mut impl Rng, n: usize, bound: i64) -> Cochain2 {
    Cochain2::from_fn(n, |_, _| (0..n).map(|_| small_int(rng, bound)).collect())
}

pub fn linear_map(rng: &mut impl Rng, n: usize, bound: i64) -> LinearMap {
    LinearMap::from_matrix(Matrix::from_fn(n, n, |_, _| small_int(rng, bound))).expect("square")
}

/// An invertible map with small integer entries (rejection sampling).
pub fn invertible_map(rng: &mut impl Rng, n: usize, bound: i64) -> LinearMap {
    loop {
        let m = linear_map(rng, n, bound);
        if m.matrix().rank() == n {
            return m;
        }
    }
}

/// A structure-constants tensor with no identity imposed.
pub fn algebra(rng: &mut impl Rng, n: usize, bound: i64) -> AlgebraStructure {
    AlgebraStructure::new(cochain2(rng, n, bound))
}

fn admissible_block(rng: &mut impl Rng, n: usize) -> AlgebraStructure {
    use crate::catalog::{fixture, fixture_with};
    use crate::exactnum::int;
    match n {
        1 => {
            if rng.gen_bool(0.5) {
                AlgebraStructure::from_entries(1, [(0, 0, 0, int(1))])
            } else {
                AlgebraStructure::zero(1)
            }
        }
        2 => {
            let names = ["P_2_6", "comm2_idempotent", "comm2_nilpotent", "comm2_zero"];
            fixture(names[rng.gen_range(0..names.len())]).expect("catalog fixture")
        }
        _ => {
            let names = ["P_3_2", "P_3_4", "P_3_5", "P_3_6", "P_3_8", "P_3_9", "nil_simple"];
            match rng.gen_range(0..names.len() + 3) {
                k if k < names.len() => fixture(names[k]),
                k if k == names.len() => fixture_with("P_3_1", "gamma", small_rational(rng)),
                k if k == names.len() + 1 => fixture_with("P_3_3", "alpha", small_rational(rng)),
                _ => {
                    let mut a = small_rational(rng);
                    if a == Rational::from_integer(0.into()) {
                        a = int(1);
                    }
                    fixture_with("P_3_7", "alpha", a)
                }
            }
            .expect("catalog fixture")
        }
    }
}

/// A random admissible algebra of dimension `n ≥ 1`: a direct sum of
/// catalog blocks, scaled by a nonzero rational and moved by a random
/// invertible base change.
pub fn admissible_algebra(rng: &mut impl Rng, n: usize) -> AlgebraStructure {
    let mut alg = AlgebraStructure::zero(0);
    let mut left = n;
    while left > 0 {
        let size = rng.gen_range(1..=left.min(3));
        alg = alg.direct_sum(&admissible_block(rng, size));
        left -= size;
    }
    let mut s = small_rational(rng);
    while s == Rational::from_integer(0.into()) {
        s = small_rational(rng);
    }
    let scaled = AlgebraStructure::new(alg.mu().scale(&s));
    scaled.change_basis(&invertible_map(rng, n, 2)).expect("invertible")
}
