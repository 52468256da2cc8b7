//! Truncated symmetric algebras `S_p(g) = S(g)/I_{p+1}` of a Lie algebra `g`,
//! with the linear Poisson bracket
//! `P₀(p,q) = Σ C^k_{ij} e_k ∂_i p ∂_j q` and polynomial multiplication.
//!
//! The result is an ordinary [`PoissonPair`] on the monomial basis, so every
//! other module applies to it.

mod poly;

use std::collections::HashMap;

use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::algebra::{AlgebraStructure, Cochain2, Element};
use crate::error::{Error, Result};
use crate::exactnum::{int, Rational};
use crate::identities::check_lie;
use crate::structure::{combine, PoissonPair};

pub use poly::{monomial_label, Monomial, SparsePoly};

/// Default truncation degree.
pub const DEFAULT_TRUNCATION: usize = 2;

/// A Lie algebra with named generators.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "LieWire", into = "LieWire")]
pub struct LiePresentation {
    generators: Vec<String>,
    bracket: AlgebraStructure,
}

#[derive(Serialize, Deserialize)]
struct LieWire {
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    generators: Vec<String>,
    #[serde(flatten)]
    bracket: AlgebraStructure,
}

impl From<LiePresentation> for LieWire {
    fn from(g: LiePresentation) -> Self {
        LieWire { generators: g.generators, bracket: g.bracket }
    }
}

impl TryFrom<LieWire> for LiePresentation {
    type Error = Error;
    fn try_from(w: LieWire) -> Result<Self> {
        let names = if w.generators.is_empty() { default_names(w.bracket.dim()) } else { w.generators };
        LiePresentation::new(names, w.bracket)
    }
}

fn default_names(n: usize) -> Vec<String> {
    (1..=n).map(|i| format!("e{i}")).collect()
}

impl LiePresentation {
    pub fn new(generators: Vec<String>, bracket: AlgebraStructure) -> Result<Self> {
        if generators.len() != bracket.dim() {
            return Err(Error::DimensionMismatch { expected: bracket.dim(), found: generators.len() });
        }
        let report = check_lie(&bracket);
        if !report.all_hold() {
            let failing: Vec<&String> = report.verdicts.iter().filter(|(_, ok)| !**ok).map(|(k, _)| k).collect();
            return Err(Error::NotLie(format!("{failing:?} fails")));
        }
        Ok(Self { generators, bracket })
    }

    /// From `(i, j, k, c)` meaning `[e_i, e_j] = c e_k = −[e_j, e_i]`.
    pub fn from_brackets(names: &[&str], entries: &[(usize, usize, usize, i64)]) -> Result<Self> {
        let n = names.len();
        let skew = entries.iter().flat_map(|&(i, j, k, c)| [(i, j, k, int(c)), (j, i, k, int(-c))]);
        Self::new(names.iter().map(|s| s.to_string()).collect(), AlgebraStructure::from_entries(n, skew))
    }

    pub fn dim(&self) -> usize {
        self.bracket.dim()
    }

    pub fn generators(&self) -> &[String] {
        &self.generators
    }

    pub fn bracket(&self) -> &AlgebraStructure {
        &self.bracket
    }

    /// The linear bivector `(i, j) ↦ [e_i, e_j]` as polynomials.
    pub fn bivector(&self) -> Bivector {
        let n = self.dim();
        let mut b = Bivector::zero(n);
        for i in 0..n {
            for j in 0..n {
                let mut v = SparsePoly::zero(n);
                for (k, c) in self.bracket.product(i, j).iter().enumerate() {
                    v.add_scaled(c, &SparsePoly::var(n, k));
                }
                b.entries[i * n + j] = v;
            }
        }
        b
    }

    /// Untruncated `P₀(p, q)`.
    pub fn poisson_bracket(&self, p: &SparsePoly, q: &SparsePoly) -> SparsePoly {
        self.bivector().apply(p, q)
    }
}

/// A skew matrix of polynomials `φ(e_i, e_j)`, acting on `S(g)` as the
/// biderivation `φ(p, q) = Σ φ(e_i, e_j) ∂_i p ∂_j q`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Bivector {
    dim: usize,
    entries: Vec<SparsePoly>,
}

impl Bivector {
    pub fn zero(n: usize) -> Self {
        Self { dim: n, entries: vec![SparsePoly::zero(n); n * n] }
    }

    /// Sets `φ(e_i, e_j) = v` and `φ(e_j, e_i) = −v`.
    pub fn set(&mut self, i: usize, j: usize, v: SparsePoly) {
        let n = self.dim;
        self.entries[j * n + i] = v.scale(&int(-1));
        self.entries[i * n + j] = v;
    }

    pub fn with(mut self, i: usize, j: usize, v: SparsePoly) -> Self {
        self.set(i, j, v);
        self
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn get(&self, i: usize, j: usize) -> &SparsePoly {
        &self.entries[i * self.dim + j]
    }

    pub fn apply(&self, p: &SparsePoly, q: &SparsePoly) -> SparsePoly {
        let n = self.dim;
        let dp: Vec<SparsePoly> = (0..n).map(|i| p.derivative(i)).collect();
        let dq: Vec<SparsePoly> = (0..n).map(|j| q.derivative(j)).collect();
        let mut out = SparsePoly::zero(n);
        for i in 0..n {
            if dp[i].is_zero() {
                continue;
            }
            for j in 0..n {
                let e = self.get(i, j);
                if e.is_zero() || dq[j].is_zero() {
                    continue;
                }
                out = out.add(&e.mul(&dp[i]).mul(&dq[j]));
            }
        }
        out
    }
}

/// Monomials of total degree `≤ p`, ordered by degree and then by exponent
/// vector in decreasing lexicographic order (`1, X, Y, X², XY, Y²`).
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MonomialBasis {
    pub generators: Vec<String>,
    pub truncation: usize,
    pub monomials: Vec<Monomial>,
    #[serde(skip)]
    index: HashMap<Monomial, usize>,
}

fn compositions(n: usize, d: u32) -> Vec<Monomial> {
    if n == 0 {
        return if d == 0 { vec![vec![]] } else { vec![] };
    }
    let mut out = Vec::new();
    for first in (0..=d).rev() {
        for mut rest in compositions(n - 1, d - first) {
            rest.insert(0, first);
            out.push(rest);
        }
    }
    out
}

impl MonomialBasis {
    pub fn new(generators: Vec<String>, truncation: usize) -> Self {
        let n = generators.len();
        let monomials: Vec<Monomial> = (0..=truncation as u32).flat_map(|d| compositions(n, d)).collect();
        let index = monomials.iter().cloned().enumerate().map(|(i, m)| (m, i)).collect();
        Self { generators, truncation, monomials, index }
    }

    pub fn len(&self) -> usize {
        self.monomials.len()
    }

    pub fn is_empty(&self) -> bool {
        self.monomials.is_empty()
    }

    pub fn index_of(&self, m: &[u32]) -> Option<usize> {
        self.index.get(m).copied()
    }

    /// Index of the generator `e_i` (degree-1 monomial).
    pub fn generator_index(&self, i: usize) -> usize {
        let mut m = vec![0; self.generators.len()];
        m[i] = 1;
        self.index[&m]
    }

    pub fn label(&self, i: usize) -> String {
        monomial_label(&self.generators, &self.monomials[i])
    }

    pub fn labels(&self) -> Vec<String> {
        (0..self.len()).map(|i| self.label(i)).collect()
    }

    pub fn poly(&self, i: usize) -> SparsePoly {
        SparsePoly::monomial(self.monomials[i].clone(), int(1))
    }

    pub fn to_poly(&self, x: &[Rational]) -> SparsePoly {
        let mut out = SparsePoly::zero(self.generators.len());
        for (i, c) in x.iter().enumerate() {
            out.add_term(self.monomials[i].clone(), c.clone());
        }
        out
    }

    /// Coordinates of `p` after dropping terms of degree above the truncation.
    pub fn coords(&self, p: &SparsePoly) -> Vec<Rational> {
        let mut out = vec![Rational::zero(); self.len()];
        for (m, v) in p.truncate(self.truncation as u32).terms() {
            out[self.index[m]] = v.clone();
        }
        out
    }
}

/// `S_p(g)` together with its monomial basis.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SymAlgebra {
    pub lie: LiePresentation,
    pub basis: MonomialBasis,
    pub pair: PoissonPair,
}

impl SymAlgebra {
    /// The single multiplication `P₀ + •`.
    pub fn algebra(&self) -> AlgebraStructure {
        combine(&self.pair).expect("dimensions agree")
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    /// Element for the generator `e_i`.
    pub fn generator(&self, i: usize) -> Element {
        Element::basis(self.dim(), self.basis.generator_index(i))
    }
}

fn table(basis: &MonomialBasis, mut f: impl FnMut(&SparsePoly, &SparsePoly) -> SparsePoly) -> Cochain2 {
    let polys: Vec<SparsePoly> = (0..basis.len()).map(|i| basis.poly(i)).collect();
    Cochain2::from_fn(basis.len(), |i, j| basis.coords(&f(&polys[i], &polys[j])))
}

/// Builds `S_p(g)` with the truncated bracket `P₀` and truncated product.
/// The pair is validated (Jacobi, commutativity, associativity, Leibniz).
pub fn build_symalg(g: &LiePresentation, p: usize) -> Result<SymAlgebra> {
    if p == 0 {
        return Err(Error::InvalidParameter("truncation must be at least 1".into()));
    }
    let basis = MonomialBasis::new(g.generators.clone(), p);
    let bivector = g.bivector();
    let name = format!("S_{p}({})", g.bracket.name().unwrap_or("g"));
    let bracket = AlgebraStructure::new(table(&basis, |a, b| bivector.apply(a, b))).with_name(name.clone());
    let product = AlgebraStructure::new(table(&basis, |a, b| a.mul(b)));
    let pair = PoissonPair::new(bracket, product)?.with_name(name);
    Ok(SymAlgebra { lie: g.clone(), basis, pair })
}

/// The biderivation extension of `φ` to the monomial basis, truncated.
pub fn biderivation_extend(sym: &SymAlgebra, phi: &Bivector) -> Result<Cochain2> {
    if phi.dim() != sym.lie.dim() {
        return Err(Error::DimensionMismatch { expected: sym.lie.dim(), found: phi.dim() });
    }
    Ok(table(&sym.basis, |a, b| phi.apply(a, b)))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AdSpectrum {
    pub diagonal: bool,
    /// Diagonal entries in basis order, when `ad x` is diagonal.
    pub eigenvalues: Option<Element>,
    /// A basis index `j` with `{x, e_j}` off the line of `e_j`.
    pub witness: Option<(usize, Element)>,
}

impl AdSpectrum {
    /// Eigenvalues as a sorted multiset.
    pub fn multiset(&self) -> Option<Vec<Rational>> {
        self.eigenvalues.as_ref().map(|v| {
            let mut s = v.0.clone();
            s.sort();
            s
        })
    }
}

/// Checks whether `ad x = {x, ·}` is diagonal in the basis and returns its
/// diagonal.
pub fn ad_spectrum(pair: &PoissonPair, x: &Element) -> Result<AdSpectrum> {
    let n = pair.dim();
    let mut diag = Vec::with_capacity(n);
    for j in 0..n {
        let image = pair.bracket().multiply(x, &Element::basis(n, j))?;
        let off = image.iter().enumerate().any(|(k, v)| k != j && !v.is_zero());
        if off {
            return Ok(AdSpectrum { diagonal: false, eigenvalues: None, witness: Some((j, image)) });
        }
        diag.push(image[j].clone());
    }
    Ok(AdSpectrum { diagonal: true, eigenvalues: Some(Element(diag)), witness: None })
}

/// Untruncated Lichnerowicz–Poisson coboundary of the biderivation `φ` at
/// three polynomials.
pub fn delta_lp_poly(g: &LiePresentation, phi: &Bivector, x: [&SparsePoly; 3]) -> SparsePoly {
    let p0 = g.bivector();
    let [a, b, c] = x;
    let mut out = p0.apply(a, &phi.apply(b, c));
    out = out.sub(&p0.apply(b, &phi.apply(a, c)));
    out = out.add(&p0.apply(c, &phi.apply(a, b)));
    out = out.sub(&phi.apply(&p0.apply(a, b), c));
    out = out.add(&phi.apply(&p0.apply(a, c), b));
    out.sub(&phi.apply(&p0.apply(b, c), a))
}

/// First monomial triple of degree `≤ degree` at which the untruncated
/// `δ_LP φ` is nonzero.
pub fn lp_cocycle_witness(g: &LiePresentation, phi: &Bivector, degree: usize) -> Option<([Monomial; 3], SparsePoly)> {
    let basis = MonomialBasis::new(g.generators.clone(), degree);
    let polys: Vec<SparsePoly> = (0..basis.len()).map(|i| basis.poly(i)).collect();
    for (i, a) in polys.iter().enumerate() {
        for (j, b) in polys.iter().enumerate().skip(i + 1) {
            for (k, c) in polys.iter().enumerate().skip(j + 1) {
                let r = delta_lp_poly(g, phi, [a, b, c]);
                if !r.is_zero() {
                    let m = &basis.monomials;
                    return Some(([m[i].clone(), m[j].clone(), m[k].clone()], r));
                }
            }
        }
    }
    None
}

/// Lie algebras used with this module.
pub mod fixtures {
    use super::LiePresentation;

    /// `[X, Y] = Y`.
    pub fn lie2() -> LiePresentation {
        LiePresentation::from_brackets(&["X", "Y"], &[(0, 1, 1, 1)]).expect("Lie").named("lie2")
    }

    /// `[X, Y_i] = i Y_i` for `i = 1, 2`.
    pub fn diagonal3() -> LiePresentation {
        LiePresentation::from_brackets(&["X", "Y1", "Y2"], &[(0, 1, 1, 1), (0, 2, 2, 2)]).expect("Lie").named("diagonal3")
    }

    /// `[X, Y_i] = i Y_i`, `[Y1, Y_i] = Y_{i+1}` for `i = 2, 3, 4`, `[Y2, Y3] = Y5`.
    pub fn rigid6() -> LiePresentation {
        let mut e: Vec<(usize, usize, usize, i64)> = (1..=5).map(|i| (0, i, i, i as i64)).collect();
        e.extend([(1, 2, 3, 1), (1, 3, 4, 1), (1, 4, 5, 1), (2, 3, 5, 1)]);
        LiePresentation::from_brackets(&["X", "Y1", "Y2", "Y3", "Y4", "Y5"], &e).expect("Lie").named("rigid6")
    }

    /// `[X1, Y1] = Y1`, `[X2, Y2] = Y2`.
    pub fn torus4() -> LiePresentation {
        LiePresentation::from_brackets(&["X1", "X2", "Y1", "Y2"], &[(0, 2, 2, 1), (1, 3, 3, 1)]).expect("Lie").named("torus4")
    }

    pub fn by_name(name: &str) -> Option<LiePresentation> {
        match name {
            "lie2" => Some(lie2()),
            "diagonal3" => Some(diagonal3()),
            "rigid6" => Some(rigid6()),
            "torus4" => Some(torus4()),
            _ => None,
        }
    }

    pub const NAMES: [&str; 4] = ["lie2", "diagonal3", "rigid6", "torus4"];
}

impl LiePresentation {
    pub fn named(mut self, name: &str) -> Self {
        self.bracket = self.bracket.with_name(name);
        self
    }
}

#[cfg(test)]
mod tests {
    use super::fixtures::*;
    use super::*;
    use crate::cohomology::{delta_lp, is_biderivation};
    use crate::exactnum::rat;

    fn ints(v: &[i64]) -> Vec<Rational> {
        v.iter().map(|&x| int(x)).collect()
    }

    #[test]
    fn lie2_truncated_at_two() {
        let s = build_symalg(&lie2(), 2).unwrap();
        assert_eq!(s.basis.labels(), ["1", "X", "Y", "X^2", "XY", "Y^2"]);
        let b = s.pair.bracket();
        assert_eq!(b.product(1, 5), ints(&[0, 0, 0, 0, 0, 2]).as_slice());
        assert_eq!(b.product(3, 2), ints(&[0, 0, 0, 0, 2, 0]).as_slice());
        let sp = ad_spectrum(&s.pair, &s.generator(0)).unwrap();
        assert_eq!(sp.multiset().unwrap(), ints(&[0, 0, 0, 1, 1, 2]));
    }

    #[test]
    fn degree_one_reproduces_g() {
        let g = diagonal3();
        let s = build_symalg(&g, 1).unwrap();
        for i in 0..3 {
            assert!(s.pair.bracket().product(0, s.basis.generator_index(i)).iter().all(Zero::is_zero));
            for j in 0..3 {
                let got = s.pair.bracket().product(s.basis.generator_index(i), s.basis.generator_index(j));
                assert_eq!(&got[1..], g.bracket().product(i, j));
            }
        }
    }

    #[test]
    fn abelian_gives_zero_bracket() {
        let g = LiePresentation::from_brackets(&["a", "b"], &[]).unwrap();
        let s = build_symalg(&g, 3).unwrap();
        assert_eq!(s.dim(), 10);
        assert!(s.pair.bracket().mu().is_zero());
        let x = Element(vec![rat(1, 2); 10]);
        assert!(ad_spectrum(&s.pair, &x).unwrap().multiset().unwrap().iter().all(Zero::is_zero));
    }

    #[test]
    fn non_lie_rejected() {
        let bad = AlgebraStructure::from_entries(2, [(0, 1, 1, int(1))]);
        assert!(LiePresentation::new(vec!["a".into(), "b".into()], bad).is_err());
    }

    #[test]
    fn rigid6_cocycle() {
        let g = rigid6();
        let s = build_symalg(&g, 2).unwrap();
        assert_eq!(s.dim(), 28);
        let sp = ad_spectrum(&s.pair, &s.generator(0)).unwrap();
        let deg1: Vec<Rational> = (0..6).map(|i| sp.eigenvalues.as_ref().unwrap()[s.basis.generator_index(i)].clone()).collect();
        assert_eq!(deg1, ints(&[0, 1, 2, 3, 4, 5]));
        let y2sq = SparsePoly::var(6, 2).mul(&SparsePoly::var(6, 2));
        let phi = Bivector::zero(6).with(1, 3, y2sq);
        let ext = biderivation_extend(&s, &phi).unwrap();
        assert!(is_biderivation(&s.pair, &ext).unwrap());
        assert!(delta_lp(&s.pair, &ext).unwrap().is_zero());
        assert!(lp_cocycle_witness(&g, &phi, 2).is_none());
    }

    #[test]
    fn torus_cocycle_holds_only_untruncated() {
        let g = torus4();
        let phi = Bivector::zero(4).with(0, 1, SparsePoly::constant(4, int(1)));
        assert!(lp_cocycle_witness(&g, &phi, 3).is_none());
        let s = build_symalg(&g, 2).unwrap();
        let ext = biderivation_extend(&s, &phi).unwrap();
        let truncated = delta_lp(&s.pair, &ext).map(|r| r.is_zero()).unwrap_or(false);
        assert!(!truncated);
    }

    #[test]
    fn lie_json_round_trip() {
        let g = rigid6();
        let text = serde_json::to_string(&g).unwrap();
        let back: LiePresentation = serde_json::from_str(&text).unwrap();
        assert_eq!(back, g);
        let plain: LiePresentation = serde_json::from_str(&crate::algebra::algebra_to_json(g.bracket())).unwrap();
        assert_eq!(plain.generators()[0], "e1");
    }
}
