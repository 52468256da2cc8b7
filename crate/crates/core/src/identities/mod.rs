//! Polynomial identities of a single multiplication: admissibility,
//! flexibility, the symmetric-group form of both, Lie and commutative
//! associative axioms, the Leibniz rule, and power associativity.
//!
//! Every identity here except power associativity is multilinear, so
//! checking basis triples is a complete decision procedure.

mod sigma3;

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::str::FromStr;

use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::algebra::{add_assign, axpy, sub_assign, AlgebraStructure, Cochain2, Cochain3, Element};
use crate::error::{check_dim, Error, Result};
use crate::exactnum::{int, Rational};

pub use sigma3::{
    act_on_tensor, action_matrix, annihilated_subspace, associator_tensor, sigma3_annihilates,
    GroupAlgebraVector, Permutation,
};

/// Evidence that an identity fails.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Witness {
    /// A basis tuple (pairs are padded to the first two entries) and the
    /// nonzero residual there.
    Basis { indices: Vec<usize>, residual: Element },
    /// An element whose powers disagree: `x^i x^j ≠ x^{i+j}`.
    Power { element: Element, i: usize, j: usize, residual: Element },
}

/// Verdicts for a set of named identities.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct IdentityReport {
    pub verdicts: BTreeMap<String, bool>,
    pub witnesses: BTreeMap<String, Witness>,
    /// Identities whose verdict was computed but whose hypotheses fail.
    #[serde(default, skip_serializing_if = "BTreeSet::is_empty")]
    pub non_applicable: BTreeSet<String>,
}

impl IdentityReport {
    fn single(name: &str, witness: Option<Witness>) -> Self {
        let mut r = Self::default();
        r.record(name, witness);
        r
    }

    fn record(&mut self, name: &str, witness: Option<Witness>) {
        self.verdicts.insert(name.to_string(), witness.is_none());
        if let Some(w) = witness {
            self.witnesses.insert(name.to_string(), w);
        }
    }

    pub fn merge(mut self, other: IdentityReport) -> Self {
        self.verdicts.extend(other.verdicts);
        self.witnesses.extend(other.witnesses);
        self.non_applicable.extend(other.non_applicable);
        self
    }

    /// True when every verdict holds.
    pub fn all_hold(&self) -> bool {
        self.verdicts.values().all(|&v| v)
    }

    pub fn holds(&self, name: &str) -> Option<bool> {
        self.verdicts.get(name).copied()
    }
}

/// Names accepted by [`check`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Identity {
    Admissible,
    Flexible,
    Eq6,
    Sigma3,
    Lie,
    CommAssoc,
    Leibniz,
    PowerAssociative,
}

impl Identity {
    pub const ALL: [Identity; 8] = [
        Identity::Admissible,
        Identity::Flexible,
        Identity::Eq6,
        Identity::Sigma3,
        Identity::Lie,
        Identity::CommAssoc,
        Identity::Leibniz,
        Identity::PowerAssociative,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            Identity::Admissible => "admissible",
            Identity::Flexible => "flexible",
            Identity::Eq6 => "eq6",
            Identity::Sigma3 => "sigma3",
            Identity::Lie => "lie",
            Identity::CommAssoc => "comm_assoc",
            Identity::Leibniz => "leibniz",
            Identity::PowerAssociative => "power_associative",
        }
    }
}

impl fmt::Display for Identity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Identity {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Identity::ALL
            .into_iter()
            .find(|i| i.as_str() == s.trim())
            .ok_or_else(|| Error::InvalidParameter(format!("unknown identity {s:?}")))
    }
}

fn first_failure(n: usize, mut f: impl FnMut(usize, usize, usize) -> Vec<Rational>) -> Option<Witness> {
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                let r = f(i, j, k);
                if !r.iter().all(Zero::is_zero) {
                    return Some(Witness::Basis { indices: vec![i, j, k], residual: Element(r) });
                }
            }
        }
    }
    None
}

fn tensor_witness(t: &Cochain3) -> Option<Witness> {
    t.first_nonzero().map(|(idx, residual)| Witness::Basis { indices: idx.to_vec(), residual })
}

/// `(e_i e_j) e_k` for the bilinear map `mu`.
fn left_nested(mu: &Cochain2, i: usize, j: usize, k: usize) -> Vec<Rational> {
    mu.eval_right_basis(mu.at(i, j), k)
}

/// The admissibility residual
/// `R(X,Y,Z) = 3A(X,Y,Z) − (XZ)Y − (YZ)X + (YX)Z + (ZX)Y`
/// of an arbitrary bilinear map, as a trilinear tensor.
pub fn admissibility_residual(mu: &Cochain2) -> Cochain3 {
    let n = mu.dim();
    let three = int(3);
    Cochain3::from_fn(n, |i, j, k| {
        let mut assoc = left_nested(mu, i, j, k);
        sub_assign(&mut assoc, &mu.eval_left_basis(i, mu.at(j, k)));
        let mut out = vec![Rational::zero(); n];
        axpy(&mut out, &three, &assoc);
        sub_assign(&mut out, &left_nested(mu, i, k, j));
        sub_assign(&mut out, &left_nested(mu, j, k, i));
        add_assign(&mut out, &left_nested(mu, j, i, k));
        add_assign(&mut out, &left_nested(mu, k, i, j));
        out
    })
}

pub fn check_admissible(alg: &AlgebraStructure) -> IdentityReport {
    IdentityReport::single("admissible", tensor_witness(&admissibility_residual(alg.mu())))
}

fn check_sigma_form(name: &str, alg: &AlgebraStructure, v: &GroupAlgebraVector) -> IdentityReport {
    IdentityReport::single(name, tensor_witness(&act_on_tensor(&associator_tensor(alg), v)))
}

/// `A(X,Y,Z) + A(Z,Y,X) = 0`.
pub fn check_flexible(alg: &AlgebraStructure) -> IdentityReport {
    check_sigma_form("flexible", alg, &GroupAlgebraVector::v2())
}

/// `A(X,Y,Z) + A(Y,Z,X) − A(Y,X,Z) = 0`.
pub fn check_eq6(alg: &AlgebraStructure) -> IdentityReport {
    check_sigma_form("eq6", alg, &GroupAlgebraVector::v1())
}

/// `2A(X,Y,Z) + ½A(Y,X,Z) + A(Z,Y,X) + A(Y,Z,X) + (3/2)A(Z,X,Y) = 0`.
pub fn check_sigma3(alg: &AlgebraStructure) -> IdentityReport {
    check_sigma_form("sigma3", alg, &GroupAlgebraVector::combined())
}

fn skew_witness(mu: &Cochain2) -> Option<Witness> {
    let n = mu.dim();
    for i in 0..n {
        for j in i..n {
            let mut r = mu.at(i, j).to_vec();
            add_assign(&mut r, mu.at(j, i));
            if !r.iter().all(Zero::is_zero) {
                return Some(Witness::Basis { indices: vec![i, j], residual: Element(r) });
            }
        }
    }
    None
}

fn symmetry_witness(mu: &Cochain2) -> Option<Witness> {
    let n = mu.dim();
    for i in 0..n {
        for j in i + 1..n {
            let mut r = mu.at(i, j).to_vec();
            sub_assign(&mut r, mu.at(j, i));
            if !r.iter().all(Zero::is_zero) {
                return Some(Witness::Basis { indices: vec![i, j], residual: Element(r) });
            }
        }
    }
    None
}

/// Jacobiator `[[X,Y],Z] + [[Y,Z],X] + [[Z,X],Y]`.
pub fn jacobiator(bracket: &Cochain2, i: usize, j: usize, k: usize) -> Vec<Rational> {
    let mut out = left_nested(bracket, i, j, k);
    add_assign(&mut out, &left_nested(bracket, j, k, i));
    add_assign(&mut out, &left_nested(bracket, k, i, j));
    out
}

/// Skew-symmetry and the Jacobi identity, reported separately as
/// `skew_symmetric` and `jacobi`.
pub fn check_lie(bracket: &AlgebraStructure) -> IdentityReport {
    let mu = bracket.mu();
    let mut r = IdentityReport::default();
    r.record("skew_symmetric", skew_witness(mu));
    r.record("jacobi", first_failure(mu.dim(), |i, j, k| jacobiator(mu, i, j, k)));
    r
}

/// Commutativity and associativity, reported as `commutative` and `associative`.
pub fn check_comm_assoc(product: &AlgebraStructure) -> IdentityReport {
    let mut r = IdentityReport::default();
    r.record("commutative", symmetry_witness(product.mu()));
    r.record("associative", first_failure(product.dim(), |i, j, k| product.associator_basis(i, j, k)));
    r
}

/// `{X•Y, Z} − X•{Y,Z} − {X,Z}•Y` at basis vectors.
pub fn leibniz_residual(bracket: &Cochain2, product: &Cochain2, i: usize, j: usize, k: usize) -> Vec<Rational> {
    let mut out = bracket.eval_right_basis(product.at(i, j), k);
    sub_assign(&mut out, &product.eval_left_basis(i, bracket.at(j, k)));
    sub_assign(&mut out, &product.eval_right_basis(bracket.at(i, k), j));
    out
}

/// The rule `{X•Y, Z} = X•{Y,Z} + {X,Z}•Y`.
pub fn check_leibniz(bracket: &AlgebraStructure, product: &AlgebraStructure) -> Result<IdentityReport> {
    check_dim(bracket.dim(), product.dim())?;
    let (b, p) = (bracket.mu(), product.mu());
    Ok(IdentityReport::single("leibniz", first_failure(b.dim(), |i, j, k| leibniz_residual(b, p, i, j, k))))
}

/// Options for [`check_power_associative`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PowerOptions {
    pub trials: usize,
    pub max_total_degree: usize,
    pub seed: u64,
}

impl Default for PowerOptions {
    fn default() -> Self {
        Self { trials: 100, max_total_degree: 8, seed: 0 }
    }
}

fn power_witness(alg: &AlgebraStructure, x: &Element, max_degree: usize) -> Option<Witness> {
    let mut powers = vec![x.0.clone()];
    for _ in 1..max_degree {
        let next = alg.mul(x, powers.last().unwrap());
        powers.push(next);
    }
    for total in 2..=max_degree {
        for i in 1..total {
            let j = total - i;
            let mut r = alg.mul(&powers[i - 1], &powers[j - 1]);
            sub_assign(&mut r, &powers[total - 1]);
            if !r.iter().all(Zero::is_zero) {
                return Some(Witness::Power { element: x.clone(), i, j, residual: Element(r) });
            }
        }
    }
    None
}

/// Checks `x^i x^j = x^{i+j}` for `i + j ≤ max_total_degree` on every basis
/// vector and `trials` seeded random elements. For algebras that are not
/// admissible the verdict is still computed but marked non-applicable.
pub fn check_power_associative(alg: &AlgebraStructure, opts: PowerOptions) -> IdentityReport {
    let n = alg.dim();
    let mut rng = crate::random::rng(opts.seed);
    let candidates = (0..n)
        .map(|i| Element::basis(n, i))
        .chain((0..opts.trials).map(|_| crate::random::element(&mut rng, n)));
    let mut witness = None;
    for x in candidates {
        if let Some(w) = power_witness(alg, &x, opts.max_total_degree) {
            witness = Some(w);
            break;
        }
    }
    let mut r = IdentityReport::single("power_associative", witness);
    if !check_admissible(alg).all_hold() {
        r.non_applicable.insert("power_associative".into());
    }
    r
}

/// Runs the named identities on a single multiplication. `lie` and
/// `comm_assoc` are applied to the skew and symmetric parts; `leibniz` to
/// both together.
pub fn check(alg: &AlgebraStructure, which: &[Identity], power: PowerOptions) -> IdentityReport {
    let mut report = IdentityReport::default();
    for id in which {
        let r = match id {
            Identity::Admissible => check_admissible(alg),
            Identity::Flexible => check_flexible(alg),
            Identity::Eq6 => check_eq6(alg),
            Identity::Sigma3 => check_sigma3(alg),
            Identity::Lie => check_lie(&alg.skew_part()),
            Identity::CommAssoc => check_comm_assoc(&alg.symmetric_part()),
            Identity::Leibniz => check_leibniz(&alg.skew_part(), &alg.symmetric_part()).expect("same dimension"),
            Identity::PowerAssociative => check_power_associative(alg, power),
        };
        report = report.merge(r);
    }
    report
}

#[cfg(test)]
mod tests {
    use super::*;

    fn table(n: usize, entries: &[(usize, usize, usize, i64)]) -> AlgebraStructure {
        AlgebraStructure::from_entries(n, entries.iter().map(|&(i, j, k, v)| (i, j, k, int(v))))
    }

    fn sl2() -> AlgebraStructure {
        table(3, &[(0, 1, 1, 2), (1, 0, 1, -2), (0, 2, 2, -2), (2, 0, 2, 2), (1, 2, 0, 1), (2, 1, 0, -1)])
    }

    #[test]
    fn commutative_example_is_not_admissible() {
        let a = table(2, &[(0, 0, 1, 1), (0, 1, 0, 1), (1, 0, 0, 1)]);
        let r = check_admissible(&a);
        assert_eq!(r.holds("admissible"), Some(false));
        assert_eq!(
            r.witnesses["admissible"],
            Witness::Basis { indices: vec![0, 0, 1], residual: Element::from_i64(&[0, -4]) }
        );
        // Commutative algebras satisfy the three associator identities regardless.
        assert!(check_flexible(&a).all_hold());
        assert!(check_eq6(&a).all_hold());
        assert!(check_sigma3(&a).all_hold());
    }

    #[test]
    fn sl2_is_admissible_and_lie() {
        let a = sl2();
        for r in [check_admissible(&a), check_flexible(&a), check_eq6(&a), check_sigma3(&a), check_lie(&a)] {
            assert!(r.all_hold(), "{r:?}");
            assert!(r.witnesses.is_empty());
        }
    }

    #[test]
    fn jacobi_failure_witness() {
        let a = table(3, &[(0, 1, 0, 1), (1, 0, 0, -1), (1, 2, 1, 1), (2, 1, 1, -1), (2, 0, 2, 1), (0, 2, 2, -1)]);
        let r = check_lie(&a);
        assert_eq!(r.holds("skew_symmetric"), Some(true));
        assert_eq!(r.holds("jacobi"), Some(false));
        let Witness::Basis { indices, residual } = &r.witnesses["jacobi"] else { panic!() };
        assert_eq!(indices, &vec![0, 1, 2]);
        assert_eq!(residual, &Element::from_i64(&[-1, -1, -1]));
    }

    #[test]
    fn comm_assoc_examples() {
        assert!(check_comm_assoc(&AlgebraStructure::zero(2)).all_hold());
        assert!(check_comm_assoc(&table(3, &[(0, 0, 2, 1)])).all_hold());
        let asym = table(2, &[(0, 0, 0, 1), (0, 1, 1, 1), (1, 1, 0, 1)]);
        assert_eq!(check_comm_assoc(&asym).holds("commutative"), Some(false));
    }

    #[test]
    fn leibniz_examples() {
        let product = table(3, &[(0, 0, 0, 1)]);
        let r = check_leibniz(&sl2(), &product).unwrap();
        assert_eq!(r.holds("leibniz"), Some(false));
        assert!(check_leibniz(&sl2(), &AlgebraStructure::zero(3)).unwrap().all_hold());
        assert!(check_leibniz(&sl2(), &AlgebraStructure::zero(2)).is_err());
    }

    #[test]
    fn power_associativity_of_heisenberg_type() {
        let a = table(3, &[(0, 0, 2, 1), (0, 1, 2, 1), (1, 0, 2, -1)]);
        let r = check_power_associative(&a, PowerOptions { trials: 20, ..Default::default() });
        assert!(r.all_hold());
        assert!(r.non_applicable.is_empty());
    }

    #[test]
    fn non_power_associative_is_flagged() {
        // e1 e1 = e2, e1 e2 = e1 (left powers cycle, right products do not)
        let a = table(2, &[(0, 0, 1, 1), (0, 1, 0, 1)]);
        let r = check_power_associative(&a, PowerOptions { trials: 0, ..Default::default() });
        assert_eq!(r.holds("power_associative"), Some(false));
        assert!(r.non_applicable.contains("power_associative"));
    }

    #[test]
    fn identity_names_parse() {
        for id in Identity::ALL {
            assert_eq!(id.as_str().parse::<Identity>().unwrap(), id);
        }
        assert!("nope".parse::<Identity>().is_err());
    }
}
