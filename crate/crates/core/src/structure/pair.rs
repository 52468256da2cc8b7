use serde::{Deserialize, Serialize};

use crate::algebra::AlgebraStructure;
use crate::error::{check_dim, Error, Result};
use crate::identities::{check_admissible, check_comm_assoc, check_leibniz, check_lie, IdentityReport, Witness};

/// A Lie bracket and a commutative associative product on the same space,
/// related by the Leibniz rule.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "PairWire", into = "PairWire")]
pub struct PoissonPair {
    name: Option<String>,
    bracket: AlgebraStructure,
    product: AlgebraStructure,
    validated: bool,
}

#[derive(Serialize, Deserialize)]
struct PairWire {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    name: Option<String>,
    bracket: AlgebraStructure,
    product: AlgebraStructure,
}

impl From<PoissonPair> for PairWire {
    fn from(p: PoissonPair) -> Self {
        PairWire { name: p.name, bracket: p.bracket, product: p.product }
    }
}

impl TryFrom<PairWire> for PoissonPair {
    type Error = Error;
    fn try_from(w: PairWire) -> Result<Self> {
        let mut p = PoissonPair::new(w.bracket, w.product)?;
        p.name = w.name;
        Ok(p)
    }
}

fn describe(report: &IdentityReport) -> String {
    report
        .verdicts
        .iter()
        .filter(|(_, ok)| !**ok)
        .map(|(name, _)| match report.witnesses.get(name) {
            Some(Witness::Basis { indices, residual }) => {
                let r: Vec<String> = residual.iter().map(|x| x.to_string()).collect();
                format!("{name} fails at {indices:?} with residual [{}]", r.join(", "))
            }
            _ => format!("{name} fails"),
        })
        .collect::<Vec<_>>()
        .join("; ")
}

impl PoissonPair {
    /// Validates skew-symmetry, Jacobi, commutativity, associativity and
    /// the Leibniz rule.
    pub fn new(bracket: AlgebraStructure, product: AlgebraStructure) -> Result<Self> {
        check_dim(bracket.dim(), product.dim())?;
        let pair = Self::new_unchecked(bracket, product);
        let report = pair.validate();
        if !report.all_hold() {
            return Err(Error::InvalidPair(describe(&report)));
        }
        Ok(Self { validated: true, ..pair })
    }

    /// Builds a pair without checking any axiom.
    pub fn new_unchecked(bracket: AlgebraStructure, product: AlgebraStructure) -> Self {
        Self { name: None, bracket: strip(bracket), product: strip(product), validated: false }
    }

    pub fn validate(&self) -> IdentityReport {
        check_lie(&self.bracket)
            .merge(check_comm_assoc(&self.product))
            .merge(check_leibniz(&self.bracket, &self.product).expect("dimensions checked"))
    }

    pub fn is_validated(&self) -> bool {
        self.validated
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = Some(name.into());
        self
    }

    pub fn name(&self) -> Option<&str> {
        self.name.as_deref()
    }

    pub fn dim(&self) -> usize {
        self.bracket.dim()
    }

    pub fn bracket(&self) -> &AlgebraStructure {
        &self.bracket
    }

    pub fn product(&self) -> &AlgebraStructure {
        &self.product
    }
}

fn strip(a: AlgebraStructure) -> AlgebraStructure {
    AlgebraStructure::new(a.into_mu())
}

/// Splits an admissible algebra into `{X,Y} = ½(XY − YX)` and
/// `X•Y = ½(XY + YX)`. Fails for algebras that are not admissible.
pub fn split(alg: &AlgebraStructure) -> Result<PoissonPair> {
    let report = check_admissible(alg);
    if !report.all_hold() {
        return Err(Error::NotAdmissible(describe(&report)));
    }
    let pair = split_unchecked(alg);
    let report = pair.validate();
    if !report.all_hold() {
        return Err(Error::Invariant(format!("split of an admissible algebra is not Poisson: {}", describe(&report))));
    }
    Ok(PoissonPair { validated: true, ..pair })
}

/// The half-sum split without the admissibility precondition.
pub fn split_unchecked(alg: &AlgebraStructure) -> PoissonPair {
    let mut pair = PoissonPair::new_unchecked(alg.skew_part(), alg.symmetric_part());
    pair.name = alg.name().map(str::to_string);
    pair
}

/// `X·Y = {X,Y} + X•Y`.
pub fn combine(pair: &PoissonPair) -> Result<AlgebraStructure> {
    if !pair.validated {
        let report = pair.validate();
        if !report.all_hold() {
            return Err(Error::InvalidPair(describe(&report)));
        }
    }
    let mu = pair.bracket.mu().add(pair.product.mu())?;
    let alg = AlgebraStructure::new(mu);
    Ok(match &pair.name {
        Some(n) => alg.with_name(n.clone()),
        None => alg,
    })
}
