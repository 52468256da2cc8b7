//! Named algebras: the 2- and 3-dimensional admissible Poisson algebras,
//! a simple nilalgebra, common Lie algebras, and a few counterexamples.
//!
//! Basis indices in tables are 0-based (`e1` of the usual notation is index 0).

mod audit;

use std::collections::BTreeMap;

use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::algebra::{AlgebraStructure, Element};
use crate::error::{Error, Result};
use crate::exactnum::{int, parse_rational, rat, Rational};
use crate::structure::LieType;

pub use audit::{audit, audit_all, AuditEntry, AuditReport};

/// Where a fixture comes from.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Source {
    /// The classification tables and worked examples.
    Classification,
    /// Standard commutative associative algebras (outside the classification).
    Reference,
    /// Lie algebras and counterexamples used by tests.
    Auxiliary,
}

#[derive(Clone, Debug, Serialize)]
pub struct FixtureInfo {
    pub name: &'static str,
    pub params: &'static [&'static str],
    pub source: Source,
    pub description: &'static str,
}

/// Invariants a fixture is expected to have.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Expected {
    pub admissible: bool,
    pub lie_type: Option<LieType>,
    pub product_trivial: Option<bool>,
    pub idempotents: Vec<Element>,
    pub unit: bool,
    /// `(dim Z², dim B², dim H²)` where a baseline is recorded.
    pub h2: Option<(usize, usize, usize)>,
}

impl Expected {
    fn poisson(lie_type: LieType, product_trivial: bool) -> Self {
        Self {
            admissible: true,
            lie_type: Some(lie_type),
            product_trivial: Some(product_trivial),
            idempotents: Vec::new(),
            unit: false,
            h2: None,
        }
    }

    fn idempotent(mut self, e: Element) -> Self {
        self.idempotents.push(e);
        self
    }

    fn unit(mut self) -> Self {
        self.unit = true;
        self
    }

    fn h2(mut self, z: usize, b: usize, h: usize) -> Self {
        self.h2 = Some((z, b, h));
        self
    }
}

const FIXTURES: &[FixtureInfo] = &[
    FixtureInfo { name: "zero", params: &["dim"], source: Source::Auxiliary, description: "all products zero" },
    FixtureInfo { name: "comm2_zero", params: &[], source: Source::Reference, description: "2-dim commutative associative, zero product" },
    FixtureInfo { name: "comm2_idempotent", params: &[], source: Source::Reference, description: "2-dim commutative associative, e1e1 = e1" },
    FixtureInfo { name: "comm2_nilpotent", params: &[], source: Source::Reference, description: "2-dim commutative associative, e1e1 = e2" },
    FixtureInfo { name: "P_2_6", params: &[], source: Source::Classification, description: "2-dim non-abelian: e1e2 = e2 = -e2e1" },
    FixtureInfo { name: "P_3_1", params: &["gamma"], source: Source::Classification, description: "Heisenberg bracket, e1e2 = (1+gamma)e3, e2e1 = (gamma-1)e3" },
    FixtureInfo { name: "P_3_2", params: &[], source: Source::Classification, description: "Heisenberg bracket, e1e1 = e3, e1e2 = e3 = -e2e1" },
    FixtureInfo { name: "P_3_3", params: &["alpha"], source: Source::Classification, description: "solvable bracket, e1e1 = alpha^2 e3, e1e3 = e3e1 = alpha e3, e3e3 = e3" },
    FixtureInfo { name: "P_3_4", params: &[], source: Source::Classification, description: "solvable bracket, e1e1 = e3" },
    FixtureInfo { name: "P_3_5", params: &[], source: Source::Classification, description: "solvable bracket e1e2 = e2 = -e2e1, zero product" },
    FixtureInfo { name: "P_3_6", params: &[], source: Source::Classification, description: "solvable bracket with unit e3" },
    FixtureInfo { name: "P_3_7", params: &["alpha"], source: Source::Classification, description: "e1e2 = e2, e1e3 = alpha e3 (skew), alpha != 0" },
    FixtureInfo { name: "P_3_8", params: &[], source: Source::Classification, description: "e1e2 = e2 + e3, e1e3 = e3 (skew)" },
    FixtureInfo { name: "P_3_9", params: &[], source: Source::Classification, description: "sl2: e1e2 = 2e2, e1e3 = -2e3, e2e3 = e1 (skew)" },
    FixtureInfo { name: "nil_simple", params: &[], source: Source::Classification, description: "simple nilalgebra: e1e2 = e2, e1e3 = -e3, e2e3 = e1 (skew)" },
    FixtureInfo { name: "heisenberg", params: &[], source: Source::Auxiliary, description: "Lie bracket {e1,e2} = e3" },
    FixtureInfo { name: "sl2", params: &[], source: Source::Auxiliary, description: "Lie bracket {e1,e2} = 2e2, {e1,e3} = -2e3, {e2,e3} = e1" },
    FixtureInfo { name: "lie2", params: &[], source: Source::Auxiliary, description: "Lie bracket {e1,e2} = e2" },
    FixtureInfo { name: "sigma3_not_admissible", params: &[], source: Source::Auxiliary, description: "commutative e1e1 = e2, e1e2 = e2e1 = e1: satisfies the Sigma3 identity but is not admissible" },
];

/// The sampled parameter values used by audits.
pub fn parameter_samples() -> Vec<Rational> {
    vec![int(-2), int(-1), int(0), rat(1, 2), int(1), int(3)]
}

pub fn list() -> &'static [FixtureInfo] {
    FIXTURES
}

pub fn info(name: &str) -> Result<&'static FixtureInfo> {
    FIXTURES.iter().find(|f| f.name == name).ok_or_else(|| Error::UnknownFixture(name.to_string()))
}

/// Parses `key=value` parameter assignments; `γ` and `α` are accepted as
/// aliases of `gamma` and `alpha`.
pub fn parse_params<S: AsRef<str>>(items: &[S]) -> Result<BTreeMap<String, Rational>> {
    let mut out = BTreeMap::new();
    for item in items {
        let item = item.as_ref();
        let (k, v) = item
            .split_once('=')
            .ok_or_else(|| Error::InvalidParameter(format!("expected key=value, got {item:?}")))?;
        let key = match k.trim() {
            "γ" => "gamma",
            "α" => "alpha",
            other => other,
        };
        out.insert(key.to_string(), parse_rational(v)?);
    }
    Ok(out)
}

fn table(n: usize, entries: &[(usize, usize, usize, Rational)]) -> AlgebraStructure {
    AlgebraStructure::from_entries(n, entries.iter().cloned())
}

/// Skew table from `(i, j, k, c)` meaning `e_i e_j = c e_k = −e_j e_i`.
fn skew(n: usize, entries: &[(usize, usize, usize, Rational)]) -> AlgebraStructure {
    let all = entries.iter().flat_map(|(i, j, k, c)| [(*i, *j, *k, c.clone()), (*j, *i, *k, -c.clone())]);
    AlgebraStructure::from_entries(n, all)
}

fn param(name: &str, params: &BTreeMap<String, Rational>, key: &str) -> Result<Rational> {
    params
        .get(key)
        .cloned()
        .ok_or_else(|| Error::MissingParameter { fixture: name.to_string(), param: key.to_string() })
}

fn e(i: usize) -> Element {
    Element::basis(3, i)
}

/// Builds a fixture together with its expected invariants.
pub fn get_with_expected(name: &str, params: &BTreeMap<String, Rational>) -> Result<(AlgebraStructure, Expected)> {
    let info = info(name)?;
    for key in params.keys() {
        if !info.params.contains(&key.as_str()) {
            return Err(Error::InvalidParameter(format!("fixture {name} has no parameter {key:?}")));
        }
    }
    let one = || int(1);
    let (alg, expected) = match name {
        "zero" => {
            let d = param(name, params, "dim")?;
            if !d.is_integer() || d < int(0) || d > int(64) {
                return Err(Error::InvalidParameter(format!("dim must be an integer in 0..=64, got {d}")));
            }
            let n: usize = d.to_integer().try_into().expect("bounded");
            let ex = Expected::poisson(LieType::Abelian, true).h2(n.pow(3), 0, n.pow(3));
            (AlgebraStructure::zero(n), ex)
        }
        "comm2_zero" => (AlgebraStructure::zero(2), Expected::poisson(LieType::Abelian, true)),
        "comm2_idempotent" => (
            table(2, &[(0, 0, 0, one())]),
            Expected::poisson(LieType::Abelian, false).idempotent(Element::basis(2, 0)),
        ),
        "comm2_nilpotent" => (table(2, &[(0, 0, 1, one())]), Expected::poisson(LieType::Abelian, false)),
        "P_2_6" | "lie2" => (skew(2, &[(0, 1, 1, one())]), Expected::poisson(LieType::Solvable, true).h2(3, 2, 1)),
        "P_3_1" => {
            let g = param(name, params, "gamma")?;
            let alg = table(3, &[(0, 1, 2, one() + &g), (1, 0, 2, g.clone() - one())]);
            let mut ex = Expected::poisson(LieType::Nilpotent, g.is_zero());
            if g.is_zero() {
                ex = ex.h2(13, 3, 10);
            } else if g == rat(1, 2) {
                ex = ex.h2(8, 5, 3);
            }
            (alg, ex)
        }
        "P_3_2" => (
            table(3, &[(0, 0, 2, one()), (0, 1, 2, one()), (1, 0, 2, int(-1))]),
            Expected::poisson(LieType::Nilpotent, false).h2(10, 5, 5),
        ),
        "heisenberg" => (skew(3, &[(0, 1, 2, one())]), Expected::poisson(LieType::Nilpotent, true).h2(13, 3, 10)),
        "P_3_3" => {
            let a = param(name, params, "alpha")?;
            let alg = table(
                3,
                &[
                    (0, 0, 2, a.clone() * &a),
                    (0, 1, 1, one()),
                    (1, 0, 1, int(-1)),
                    (0, 2, 2, a.clone()),
                    (2, 0, 2, a.clone()),
                    (2, 2, 2, one()),
                ],
            );
            let mut ex = Expected::poisson(LieType::Solvable, false).idempotent(e(2));
            if a.is_zero() || a == int(1) {
                ex = ex.h2(8, 7, 1);
            }
            (alg, ex)
        }
        "P_3_4" => (
            table(3, &[(0, 0, 2, one()), (0, 1, 1, one()), (1, 0, 1, int(-1))]),
            Expected::poisson(LieType::Solvable, false).h2(8, 6, 2),
        ),
        "P_3_5" => (skew(3, &[(0, 1, 1, one())]), Expected::poisson(LieType::Solvable, true).h2(11, 5, 6)),
        "P_3_6" => (
            table(
                3,
                &[
                    (0, 1, 1, one()),
                    (1, 0, 1, int(-1)),
                    (2, 2, 2, one()),
                    (0, 2, 0, one()),
                    (2, 0, 0, one()),
                    (1, 2, 1, one()),
                    (2, 1, 1, one()),
                ],
            ),
            Expected::poisson(LieType::Solvable, false).idempotent(e(2)).unit().h2(7, 7, 0),
        ),
        "P_3_7" => {
            let a = param(name, params, "alpha")?;
            if a.is_zero() {
                return Err(Error::InvalidParameter(
                    "P_3_7 requires alpha != 0; alpha = 0 gives the bracket of P_3_5".into(),
                ));
            }
            let mut ex = Expected::poisson(LieType::Solvable, true);
            if a == int(2) {
                ex = ex.h2(7, 5, 2);
            }
            (skew(3, &[(0, 1, 1, one()), (0, 2, 2, a)]), ex)
        }
        "P_3_8" => (
            skew(3, &[(0, 1, 1, one()), (0, 1, 2, one()), (0, 2, 2, one())]),
            Expected::poisson(LieType::Solvable, true).h2(7, 5, 2),
        ),
        "P_3_9" | "sl2" => (
            skew(3, &[(0, 1, 1, int(2)), (0, 2, 2, int(-2)), (1, 2, 0, one())]),
            Expected::poisson(LieType::Semisimple, true).h2(6, 6, 0),
        ),
        "nil_simple" => (
            skew(3, &[(0, 1, 1, one()), (0, 2, 2, int(-1)), (1, 2, 0, one())]),
            Expected::poisson(LieType::Semisimple, true).h2(6, 6, 0),
        ),
        "sigma3_not_admissible" => (
            table(2, &[(0, 0, 1, one()), (0, 1, 0, one()), (1, 0, 0, one())]),
            Expected {
                admissible: false,
                lie_type: None,
                product_trivial: None,
                idempotents: Vec::new(),
                unit: false,
                h2: None,
            },
        ),
        _ => unreachable!("name validated against the fixture list"),
    };
    Ok((alg.with_name(name), expected))
}

pub fn get(name: &str, params: &BTreeMap<String, Rational>) -> Result<AlgebraStructure> {
    get_with_expected(name, params).map(|(a, _)| a)
}

/// Builds a fixture that takes no parameters.
pub fn fixture(name: &str) -> Result<AlgebraStructure> {
    get(name, &BTreeMap::new())
}

/// Builds a one-parameter fixture.
pub fn fixture_with(name: &str, key: &str, value: Rational) -> Result<AlgebraStructure> {
    get(name, &BTreeMap::from([(key.to_string(), value)]))
}

/// Every admissible fixture, with one-parameter families at each sampled value.
pub fn admissible_fixtures() -> Vec<AlgebraStructure> {
    let mut out = Vec::new();
    for (name, params, _) in sampled_instances() {
        let (alg, ex) = get_with_expected(name, &params).expect("catalog fixtures build");
        if ex.admissible {
            out.push(alg);
        }
    }
    out
}

/// All `(name, params, label)` instances exercised by audits.
pub fn sampled_instances() -> Vec<(&'static str, BTreeMap<String, Rational>, String)> {
    let mut out = Vec::new();
    for f in FIXTURES {
        match f.params {
            [] => out.push((f.name, BTreeMap::new(), f.name.to_string())),
            ["dim"] => {
                for d in [1, 2, 3] {
                    out.push((f.name, BTreeMap::from([("dim".to_string(), int(d))]), format!("{}(dim={d})", f.name)));
                }
            }
            [p] => {
                for v in parameter_samples() {
                    if f.name == "P_3_7" && v.is_zero() {
                        continue;
                    }
                    let label = format!("{}({p}={v})", f.name);
                    out.push((f.name, BTreeMap::from([(p.to_string(), v)]), label));
                }
            }
            _ => unreachable!("fixtures take at most one parameter"),
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn p31_at_zero() {
        let a = fixture_with("P_3_1", "gamma", int(0)).unwrap();
        assert_eq!(a.product(0, 1), &[int(0), int(0), int(1)]);
        assert_eq!(a.product(1, 0), &[int(0), int(0), int(-1)]);
        assert_eq!(a.mu().nonzero_entries().count(), 2);
    }

    #[test]
    fn p39_is_sl2() {
        let a = fixture("P_3_9").unwrap();
        assert_eq!(a.product(1, 2), &[int(1), int(0), int(0)]);
        assert_eq!(a.product(0, 2), &[int(0), int(0), int(-2)]);
        assert_eq!(a.mu(), fixture("sl2").unwrap().mu());
    }

    #[test]
    fn errors() {
        assert!(matches!(fixture("nope"), Err(Error::UnknownFixture(_))));
        assert!(matches!(fixture("P_3_1"), Err(Error::MissingParameter { .. })));
        assert!(fixture_with("P_3_7", "alpha", int(0)).is_err());
        assert!(fixture_with("P_3_9", "alpha", int(1)).is_err());
        assert_eq!(fixture_with("zero", "dim", int(3)).unwrap(), AlgebraStructure::zero(3).with_name("zero"));
    }

    #[test]
    fn params_parse() {
        let p = parse_params(&["γ=1/2", "alpha = -3"]).unwrap();
        assert_eq!(p["gamma"], rat(1, 2));
        assert_eq!(p["alpha"], int(-3));
        assert!(parse_params(&["gamma"]).is_err());
    }
}
