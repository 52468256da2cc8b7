use std::ops::{Deref, DerefMut};

use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::exactnum::{int, Rational};

/// A vector of an algebra written in the fixed basis `e_0, ..., e_{n-1}`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Element(#[serde(with = "crate::exactnum::rational::serde_rational_vec")] pub Vec<Rational>);

impl Element {
    pub fn zero(n: usize) -> Self {
        Element(vec![Rational::zero(); n])
    }

    /// The basis vector `e_i`.
    pub fn basis(n: usize, i: usize) -> Self {
        let mut v = Self::zero(n);
        v.0[i] = int(1);
        v
    }

    pub fn from_i64(values: &[i64]) -> Self {
        Element(values.iter().map(|&v| int(v)).collect())
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn coords(&self) -> &[Rational] {
        &self.0
    }

    pub fn into_coords(self) -> Vec<Rational> {
        self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(Zero::is_zero)
    }

    pub fn add(&self, other: &Element) -> Element {
        Element(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn sub(&self, other: &Element) -> Element {
        Element(self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect())
    }

    pub fn scale(&self, s: &Rational) -> Element {
        Element(self.0.iter().map(|a| a * s).collect())
    }
}

impl Deref for Element {
    type Target = [Rational];
    fn deref(&self) -> &[Rational] {
        &self.0
    }
}

impl DerefMut for Element {
    fn deref_mut(&mut self) -> &mut [Rational] {
        &mut self.0
    }
}

impl From<Vec<Rational>> for Element {
    fn from(v: Vec<Rational>) -> Self {
        Element(v)
    }
}

/// `acc += c * v`, skipping zeros.
pub(crate) fn axpy(acc: &mut [Rational], c: &Rational, v: &[Rational]) {
    if c.is_zero() {
        return;
    }
    for (a, b) in acc.iter_mut().zip(v) {
        if !b.is_zero() {
            *a += c * b;
        }
    }
}

pub(crate) fn sub_assign(acc: &mut [Rational], v: &[Rational]) {
    for (a, b) in acc.iter_mut().zip(v) {
        if !b.is_zero() {
            *a -= b;
        }
    }
}

pub(crate) fn add_assign(acc: &mut [Rational], v: &[Rational]) {
    for (a, b) in acc.iter_mut().zip(v) {
        if !b.is_zero() {
            *a += b;
        }
    }
}
