//! The canonical JSON encoding of algebras and cochains.
//!
//! ```json
//! { "name": "P_3_9", "dim": 3, "products": [ {"i":0,"j":1,"out":[{"k":1,"v":"2"}]} ] }
//! ```
//!
//! Indices are 0-based, omitted pairs are zero, values are rational strings.
//! Cochains use the key `"cochain"` instead of `"products"`.

use std::collections::BTreeSet;

use serde::de::DeserializeOwned;
use serde::{Deserialize, Serialize};

use super::cochain::{Cochain2, Cochain3};
use super::structure_constants::AlgebraStructure;
use crate::error::{Error, Result};
use crate::exactnum::{format_rational, parse_rational, Rational};

#[derive(Clone, Debug, Serialize, Deserialize)]
pub(crate) struct OutEntry {
    k: usize,
    v: String,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub(crate) struct PairEntry {
    i: usize,
    j: usize,
    out: Vec<OutEntry>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub(crate) struct AlgebraWire {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    name: Option<String>,
    dim: usize,
    products: Vec<PairEntry>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub(crate) struct CochainWire {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    name: Option<String>,
    dim: usize,
    cochain: Vec<PairEntry>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub(crate) struct TripleEntry {
    i: usize,
    j: usize,
    l: usize,
    out: Vec<OutEntry>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub(crate) struct Cochain3Wire {
    dim: usize,
    cochain3: Vec<TripleEntry>,
}

fn encode_out(v: &[Rational]) -> Vec<OutEntry> {
    v.iter()
        .enumerate()
        .filter(|(_, x)| !num_traits::Zero::is_zero(*x))
        .map(|(k, x)| OutEntry { k, v: format_rational(x) })
        .collect()
}

fn encode_pairs(c: &Cochain2) -> Vec<PairEntry> {
    let n = c.dim();
    let mut out = Vec::new();
    for i in 0..n {
        for j in 0..n {
            let o = encode_out(c.at(i, j));
            if !o.is_empty() {
                out.push(PairEntry { i, j, out: o });
            }
        }
    }
    out
}

fn decode_out(n: usize, out: &[OutEntry], target: &mut [Rational], ctx: &str) -> Result<()> {
    let mut seen = BTreeSet::new();
    for e in out {
        if e.k >= n {
            return Err(Error::InvalidData(format!("{ctx}: output index {} out of range for dim {n}", e.k)));
        }
        if !seen.insert(e.k) {
            return Err(Error::InvalidData(format!("{ctx}: output index {} repeated", e.k)));
        }
        target[e.k] = parse_rational(&e.v)?;
    }
    Ok(())
}

fn decode_pairs(n: usize, entries: &[PairEntry]) -> Result<Cochain2> {
    let mut c = Cochain2::zeros(n);
    let mut seen = BTreeSet::new();
    for e in entries {
        if e.i >= n || e.j >= n {
            return Err(Error::InvalidData(format!("pair ({}, {}) out of range for dim {n}", e.i, e.j)));
        }
        if !seen.insert((e.i, e.j)) {
            return Err(Error::InvalidData(format!("pair ({}, {}) listed twice", e.i, e.j)));
        }
        decode_out(n, &e.out, c.at_mut(e.i, e.j), &format!("pair ({}, {})", e.i, e.j))?;
    }
    Ok(c)
}

impl From<AlgebraStructure> for AlgebraWire {
    fn from(a: AlgebraStructure) -> Self {
        AlgebraWire { name: a.name().map(str::to_string), dim: a.dim(), products: encode_pairs(a.mu()) }
    }
}

impl TryFrom<AlgebraWire> for AlgebraStructure {
    type Error = Error;
    fn try_from(w: AlgebraWire) -> Result<Self> {
        let alg = AlgebraStructure::new(decode_pairs(w.dim, &w.products)?);
        Ok(match w.name {
            Some(name) => alg.with_name(name),
            None => alg,
        })
    }
}

impl Serialize for Cochain2 {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        CochainWire { name: None, dim: self.dim(), cochain: encode_pairs(self) }.serialize(s)
    }
}

impl<'de> Deserialize<'de> for Cochain2 {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let w = CochainWire::deserialize(d)?;
        decode_pairs(w.dim, &w.cochain).map_err(serde::de::Error::custom)
    }
}

impl Serialize for Cochain3 {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let n = self.dim();
        let mut entries = Vec::new();
        for i in 0..n {
            for j in 0..n {
                for l in 0..n {
                    let out = encode_out(self.at(i, j, l));
                    if !out.is_empty() {
                        entries.push(TripleEntry { i, j, l, out });
                    }
                }
            }
        }
        Cochain3Wire { dim: n, cochain3: entries }.serialize(s)
    }
}

impl<'de> Deserialize<'de> for Cochain3 {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let w = Cochain3Wire::deserialize(d)?;
        let n = w.dim;
        let mut vals = vec![vec![Rational::from_integer(0.into()); n]; n * n * n];
        let mut seen = BTreeSet::new();
        for e in &w.cochain3 {
            if e.i >= n || e.j >= n || e.l >= n || !seen.insert((e.i, e.j, e.l)) {
                return Err(serde::de::Error::custom(format!("bad triple ({}, {}, {})", e.i, e.j, e.l)));
            }
            decode_out(n, &e.out, &mut vals[(e.i * n + e.j) * n + e.l], "triple").map_err(serde::de::Error::custom)?;
        }
        Ok(Cochain3::from_fn(n, |i, j, l| vals[(i * n + j) * n + l].clone()))
    }
}

/// Strips any number of `{"payload": ...}` envelopes (as produced by the
/// command line tool) from a JSON document.
pub fn unwrap_envelope(mut v: serde_json::Value) -> serde_json::Value {
    while let Some(inner) = v.as_object_mut().and_then(|o| o.remove("payload")) {
        v = inner;
    }
    v
}

/// Parses a JSON document, accepting a command-result envelope.
pub fn from_json_str<T: DeserializeOwned>(text: &str) -> Result<T> {
    let value: serde_json::Value = serde_json::from_str(text)?;
    Ok(serde_json::from_value(unwrap_envelope(value))?)
}

pub fn algebra_from_json(text: &str) -> Result<AlgebraStructure> {
    from_json_str(text)
}

pub fn algebra_to_json(alg: &AlgebraStructure) -> String {
    serde_json::to_string(alg).expect("algebra serialization is infallible")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::{int, rat};

    #[test]
    fn algebra_round_trip_is_exact() {
        let a = AlgebraStructure::from_entries(3, [(0, 1, 1, int(2)), (1, 0, 1, int(-2)), (1, 2, 0, rat(-3, 2))])
            .with_name("demo");
        let text = algebra_to_json(&a);
        assert_eq!(
            text,
            r#"{"name":"demo","dim":3,"products":[{"i":0,"j":1,"out":[{"k":1,"v":"2"}]},{"i":1,"j":0,"out":[{"k":1,"v":"-2"}]},{"i":1,"j":2,"out":[{"k":0,"v":"-3/2"}]}]}"#
        );
        let back = algebra_from_json(&text).unwrap();
        assert_eq!(back, a);
        assert_eq!(algebra_to_json(&back), text);
    }

    #[test]
    fn envelope_is_accepted() {
        let text = r#"{"status":"ok","payload":{"dim":1,"products":[{"i":0,"j":0,"out":[{"k":0,"v":"1"}]}]},"diagnostics":[]}"#;
        let a = algebra_from_json(text).unwrap();
        assert_eq!(a.product(0, 0), &[int(1)]);
    }

    #[test]
    fn malformed_input_is_rejected() {
        assert!(algebra_from_json(r#"{"dim":2,"products":[{"i":2,"j":0,"out":[]}]}"#).is_err());
        assert!(algebra_from_json(r#"{"dim":2,"products":[{"i":0,"j":0,"out":[{"k":0,"v":"1/0"}]}]}"#).is_err());
        assert!(algebra_from_json(r#"{"dim":2,"products":[{"i":0,"j":0,"out":[]},{"i":0,"j":0,"out":[]}]}"#).is_err());
    }

    #[test]
    fn cochains_use_their_own_key() {
        let c = Cochain2::from_entries(2, [(0, 1, 0, int(1))]);
        let text = serde_json::to_string(&c).unwrap();
        assert!(text.contains("\"cochain\""));
        assert_eq!(from_json_str::<Cochain2>(&text).unwrap(), c);
        let t = Cochain3::from_fn(2, |i, _, l| vec![int(i as i64), int(l as i64)]);
        let text = serde_json::to_string(&t).unwrap();
        assert_eq!(from_json_str::<Cochain3>(&text).unwrap(), t);
    }
}
