use std::collections::BTreeMap;
use std::fmt;

use num_traits::Zero;

use crate::exactnum::{int, Rational};

/// An exponent vector.
pub type Monomial = Vec<u32>;

/// A sparse polynomial in commuting variables with rational coefficients.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SparsePoly {
    nvars: usize,
    terms: BTreeMap<Monomial, Rational>,
}

impl SparsePoly {
    pub fn zero(nvars: usize) -> Self {
        Self { nvars, terms: BTreeMap::new() }
    }

    pub fn constant(nvars: usize, c: Rational) -> Self {
        Self::monomial(vec![0; nvars], c)
    }

    pub fn monomial(exponents: Monomial, c: Rational) -> Self {
        let mut p = Self::zero(exponents.len());
        p.add_term(exponents, c);
        p
    }

    /// The variable `x_i`.
    pub fn var(nvars: usize, i: usize) -> Self {
        let mut e = vec![0; nvars];
        e[i] = 1;
        Self::monomial(e, int(1))
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Rational)> {
        self.terms.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Total degree, `None` for zero.
    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().map(|m| m.iter().sum()).max()
    }

    pub fn add_term(&mut self, exponents: Monomial, c: Rational) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(exponents).or_insert_with(Rational::zero);
        *entry += c;
        if entry.is_zero() {
            self.terms.retain(|_, v| !v.is_zero());
        }
    }

    pub fn add_scaled(&mut self, c: &Rational, other: &SparsePoly) {
        for (m, v) in &other.terms {
            self.add_term(m.clone(), c * v);
        }
    }

    pub fn add(&self, other: &SparsePoly) -> SparsePoly {
        let mut out = self.clone();
        out.add_scaled(&int(1), other);
        out
    }

    pub fn sub(&self, other: &SparsePoly) -> SparsePoly {
        let mut out = self.clone();
        out.add_scaled(&int(-1), other);
        out
    }

    pub fn scale(&self, c: &Rational) -> SparsePoly {
        let mut out = Self::zero(self.nvars);
        out.add_scaled(c, self);
        out
    }

    pub fn mul(&self, other: &SparsePoly) -> SparsePoly {
        let mut out = Self::zero(self.nvars);
        for (a, x) in &self.terms {
            for (b, y) in &other.terms {
                let m = a.iter().zip(b).map(|(i, j)| i + j).collect();
                out.add_term(m, x * y);
            }
        }
        out
    }

    /// `∂/∂x_i`.
    pub fn derivative(&self, i: usize) -> SparsePoly {
        let mut out = Self::zero(self.nvars);
        for (m, v) in &self.terms {
            if m[i] > 0 {
                let mut d = m.clone();
                d[i] -= 1;
                out.add_term(d, v * int(m[i] as i64));
            }
        }
        out
    }

    /// Drops every term of total degree above `p`.
    pub fn truncate(&self, p: u32) -> SparsePoly {
        let terms = self.terms.iter().filter(|(m, _)| m.iter().sum::<u32>() <= p).map(|(m, v)| (m.clone(), v.clone()));
        Self { nvars: self.nvars, terms: terms.collect() }
    }
}

/// Renders a monomial as `X^2Y` given generator names; `1` for the constant.
pub fn monomial_label(names: &[String], m: &[u32]) -> String {
    let mut s = String::new();
    for (name, &e) in names.iter().zip(m) {
        match e {
            0 => {}
            1 => s.push_str(name),
            _ => s.push_str(&format!("{name}^{e}")),
        }
    }
    if s.is_empty() {
        s.push('1');
    }
    s
}

impl fmt::Display for SparsePoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let names: Vec<String> = (1..=self.nvars).map(|i| format!("x{i}")).collect();
        let parts: Vec<String> = self.terms.iter().map(|(m, v)| format!("{v}*{}", monomial_label(&names, m))).collect();
        f.write_str(&parts.join(" + "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn leibniz_for_derivative() {
        let x = SparsePoly::var(2, 0);
        let y = SparsePoly::var(2, 1);
        let p = x.mul(&x).add(&x.mul(&y));
        let q = y.mul(&y).add(&SparsePoly::constant(2, int(3)));
        let lhs = p.mul(&q).derivative(0);
        let rhs = p.derivative(0).mul(&q).add(&p.mul(&q.derivative(0)));
        assert_eq!(lhs, rhs);
        assert_eq!(p.degree(), Some(2));
        assert!(x.sub(&x).is_zero());
        assert_eq!(p.mul(&q).truncate(2), p.scale(&int(3)));
    }
}
