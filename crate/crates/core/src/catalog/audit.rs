use std::collections::BTreeMap;

use serde::Serialize;

use super::{get_with_expected, sampled_instances};
use crate::cohomology::cohomology_report;
use crate::error::Result;
use crate::exactnum::Rational;
use crate::identities::{check_admissible, check_eq6, check_flexible, check_power_associative, check_sigma3, PowerOptions};
use crate::structure::{find_idempotents, is_idempotent, lie_type, pierce, split, DEFAULT_SEARCH_BUDGET};

#[derive(Clone, Debug, Serialize)]
pub struct AuditEntry {
    pub label: String,
    pub name: String,
    pub checks: BTreeMap<String, bool>,
    pub failures: Vec<String>,
}

impl AuditEntry {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct AuditReport {
    pub entries: Vec<AuditEntry>,
    pub all_pass: bool,
}

/// Recomputes every recorded invariant of one fixture instance.
pub fn audit(name: &str, params: &BTreeMap<String, Rational>) -> Result<AuditEntry> {
    let (alg, ex) = get_with_expected(name, params)?;
    let mut checks = BTreeMap::new();
    let admissible = check_admissible(&alg).all_hold();
    checks.insert("admissible".to_string(), admissible == ex.admissible);
    if ex.admissible {
        checks.insert("flexible".into(), check_flexible(&alg).all_hold());
        checks.insert("eq6".into(), check_eq6(&alg).all_hold());
        checks.insert("power_associative".into(), check_power_associative(&alg, PowerOptions::default()).all_hold());
    }
    checks.insert("sigma3".into(), check_sigma3(&alg).all_hold());
    if admissible {
        let pair = split(&alg)?;
        if let Some(t) = ex.lie_type {
            checks.insert("lie_type".into(), lie_type(pair.bracket()) == t);
        }
        if let Some(trivial) = ex.product_trivial {
            checks.insert("product_trivial".into(), pair.product().mu().is_zero() == trivial);
        }
        let found = find_idempotents(&alg, DEFAULT_SEARCH_BUDGET);
        let listed = ex.idempotents.iter().all(|e| is_idempotent(&alg, e).unwrap_or(false) && found.contains(e));
        checks.insert("idempotents".into(), listed);
        let has_unit = found.iter().any(|e| pierce(&alg, e).is_ok_and(|p| p.is_unit()));
        checks.insert("unit".into(), has_unit == ex.unit);
        if let Some((z, b, h)) = ex.h2 {
            let r = cohomology_report(&alg)?;
            checks.insert("h2".into(), (r.dim_z2, r.dim_b2, r.dim_h2) == (z, b, h));
        }
    }
    let failures = checks.iter().filter(|(_, ok)| !**ok).map(|(k, _)| k.clone()).collect();
    let label = match params.iter().next() {
        None => name.to_string(),
        Some((k, v)) => format!("{name}({k}={v})"),
    };
    Ok(AuditEntry { label, name: name.to_string(), checks, failures })
}

/// Audits every sampled catalog instance.
pub fn audit_all() -> Result<AuditReport> {
    let entries = sampled_instances()
        .into_iter()
        .map(|(name, params, _)| audit(name, &params))
        .collect::<Result<Vec<_>>>()?;
    let all_pass = entries.iter().all(AuditEntry::passed);
    Ok(AuditReport { entries, all_pass })
}
