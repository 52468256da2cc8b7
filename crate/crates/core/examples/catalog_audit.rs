//! Recomputes every recorded invariant of the catalog.

use admissible_poisson::catalog::{audit_all, list};

fn main() -> admissible_poisson::Result<()> {
    println!("{} fixtures", list().len());
    let report = audit_all()?;
    for e in &report.entries {
        let status = if e.passed() { "ok" } else { "FAIL" };
        println!("{status:<4} {:<28} {}", e.label, e.checks.keys().cloned().collect::<Vec<_>>().join(","));
    }
    println!("all pass: {}", report.all_pass);
    Ok(())
}
