use std::collections::BTreeMap;
use std::fmt;

use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::algebra::{axpy, AlgebraStructure, Cochain3};
use crate::error::{Error, Result};
use crate::exactnum::{int, rat, Matrix, Rational, Subspace};

/// An element of the symmetric group on three letters.
///
/// Acting on argument triples, `σ` sends `(v_1, v_2, v_3)` to
/// `(v_σ(1), v_σ(2), v_σ(3))`. Under this convention `c1` (the cycle
/// `1 → 2 → 3 → 1`) maps `(X, Y, Z)` to `(Y, Z, X)`, so the associator
/// identity `A(X,Y,Z) + A(Y,Z,X) − A(Y,X,Z) = 0` reads `A ∘ Φ_{Id − τ12 + c1} = 0`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Permutation {
    Id,
    T12,
    T13,
    T23,
    C1,
    C2,
}

impl Permutation {
    pub const ALL: [Permutation; 6] =
        [Permutation::Id, Permutation::T12, Permutation::T13, Permutation::T23, Permutation::C1, Permutation::C2];

    /// `[σ(1), σ(2), σ(3)]`, 0-based.
    pub fn images(self) -> [usize; 3] {
        match self {
            Permutation::Id => [0, 1, 2],
            Permutation::T12 => [1, 0, 2],
            Permutation::T13 => [2, 1, 0],
            Permutation::T23 => [0, 2, 1],
            Permutation::C1 => [1, 2, 0],
            Permutation::C2 => [2, 0, 1],
        }
    }

    pub fn act<T: Copy>(self, v: [T; 3]) -> [T; 3] {
        let s = self.images();
        [v[s[0]], v[s[1]], v[s[2]]]
    }

    pub fn compose(self, other: Permutation) -> Permutation {
        let (a, b) = (self.images(), other.images());
        let c = [b[a[0]], b[a[1]], b[a[2]]];
        *Permutation::ALL.iter().find(|p| p.images() == c).expect("closed under composition")
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Permutation::Id => "id",
            Permutation::T12 => "t12",
            Permutation::T13 => "t13",
            Permutation::T23 => "t23",
            Permutation::C1 => "c1",
            Permutation::C2 => "c2",
        };
        f.write_str(s)
    }
}

/// A vector of the group algebra `ℚ[Σ₃]`.
#[derive(Clone, Debug, PartialEq, Eq, Default, Serialize, Deserialize)]
pub struct GroupAlgebraVector {
    #[serde(with = "coeff_map")]
    coeffs: BTreeMap<Permutation, Rational>,
}

mod coeff_map {
    use super::*;
    use crate::exactnum::{format_rational, parse_rational};
    use serde::{Deserializer, Serializer};

    pub fn serialize<S: Serializer>(m: &BTreeMap<Permutation, Rational>, s: S) -> std::result::Result<S::Ok, S::Error> {
        let text: BTreeMap<Permutation, String> = m.iter().map(|(k, v)| (*k, format_rational(v))).collect();
        text.serialize(s)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> std::result::Result<BTreeMap<Permutation, Rational>, D::Error> {
        let text = BTreeMap::<Permutation, String>::deserialize(d)?;
        text.into_iter()
            .map(|(k, v)| parse_rational(&v).map(|r| (k, r)).map_err(serde::de::Error::custom))
            .collect()
    }
}

impl GroupAlgebraVector {
    pub fn new(terms: impl IntoIterator<Item = (Permutation, Rational)>) -> Self {
        let mut coeffs = BTreeMap::new();
        for (p, c) in terms {
            *coeffs.entry(p).or_insert_with(Rational::zero) += c;
        }
        coeffs.retain(|_, c: &mut Rational| !c.is_zero());
        Self { coeffs }
    }

    pub fn coeff(&self, p: Permutation) -> Rational {
        self.coeffs.get(&p).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (Permutation, &Rational)> {
        self.coeffs.iter().map(|(p, c)| (*p, c))
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `Id − τ12 + c1`.
    pub fn v1() -> Self {
        Self::new([(Permutation::Id, int(1)), (Permutation::T12, int(-1)), (Permutation::C1, int(1))])
    }

    /// `Id + τ13`.
    pub fn v2() -> Self {
        Self::new([(Permutation::Id, int(1)), (Permutation::T13, int(1))])
    }

    /// `2·Id + ½τ12 + τ13 + c1 + (3/2)c2`.
    pub fn combined() -> Self {
        Self::new([
            (Permutation::Id, int(2)),
            (Permutation::T12, rat(1, 2)),
            (Permutation::T13, int(1)),
            (Permutation::C1, int(1)),
            (Permutation::C2, rat(3, 2)),
        ])
    }
}

/// `(T ∘ Φ_v)(e_i, e_j, e_k) = Σ_σ v_σ T(Φ_σ(e_i, e_j, e_k))`.
pub fn act_on_tensor(t: &Cochain3, v: &GroupAlgebraVector) -> Cochain3 {
    let n = t.dim();
    Cochain3::from_fn(n, |i, j, k| {
        let mut out = vec![Rational::zero(); n];
        for (p, c) in v.terms() {
            let [a, b, d] = p.act([i, j, k]);
            axpy(&mut out, c, t.at(a, b, d));
        }
        out
    })
}

/// The associator as a trilinear tensor.
pub fn associator_tensor(alg: &AlgebraStructure) -> Cochain3 {
    Cochain3::from_fn(alg.dim(), |i, j, k| alg.associator_basis(i, j, k))
}

/// True iff `A ∘ Φ_v` vanishes on every basis triple.
pub fn sigma3_annihilates(alg: &AlgebraStructure, v: &GroupAlgebraVector) -> Result<bool> {
    if v.is_zero() {
        return Err(Error::ZeroGroupAlgebraVector);
    }
    Ok(act_on_tensor(&associator_tensor(alg), v).is_zero())
}

/// Matrix of `T ↦ T ∘ Φ_v` on the flattened space of trilinear tensors.
pub fn action_matrix(n: usize, v: &GroupAlgebraVector) -> Matrix {
    let n3 = n * n * n;
    let size = n * n3;
    let mut m = Matrix::zeros(size, size);
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                let row_base = i * n * n + j * n + k;
                for (p, c) in v.terms() {
                    let [a, b, d] = p.act([i, j, k]);
                    let col_base = a * n * n + b * n + d;
                    for out in 0..n {
                        m.add_to(out * n3 + row_base, out * n3 + col_base, c);
                    }
                }
            }
        }
    }
    m
}

/// The subspace of trilinear tensors (flattened, see [`Cochain3::flatten`])
/// annihilated by every vector in `vs`.
pub fn annihilated_subspace(n: usize, vs: &[GroupAlgebraVector]) -> Result<Subspace> {
    let size = n.pow(4);
    let mut stacked = Matrix::zeros(0, size);
    for v in vs {
        stacked = stacked.vstack(&action_matrix(n, v))?;
    }
    Ok(stacked.nullspace())
}
