//! Identity verdicts across the catalog, plus an algebra that satisfies the
//! Σ₃ identity without being admissible.

use admissible_poisson::catalog;
use admissible_poisson::identities::{check, check_admissible, check_sigma3, Identity, PowerOptions};

fn main() -> admissible_poisson::Result<()> {
    for (name, params, label) in catalog::sampled_instances() {
        let alg = catalog::get(name, &params)?;
        let r = check(&alg, &Identity::ALL, PowerOptions::default());
        let failed: Vec<_> = r.verdicts.iter().filter(|(_, ok)| !**ok).map(|(k, _)| k.as_str()).collect();
        println!("{label:<24} failing: {failed:?}");
    }

    let odd = catalog::fixture("sigma3_not_admissible")?;
    let adm = check_admissible(&odd);
    println!("\nsigma3 holds: {:?}", check_sigma3(&odd).holds("sigma3"));
    println!("admissible:   {:?}", adm.holds("admissible"));
    if let Some(w) = adm.witnesses.get("admissible") {
        println!("witness:      {}", serde_json::to_string(w)?);
    }
    Ok(())
}
