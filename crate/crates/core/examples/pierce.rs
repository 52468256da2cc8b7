//! Idempotent search and Pierce decompositions.

use admissible_poisson::algebra::Element;
use admissible_poisson::catalog::{fixture, fixture_with};
use admissible_poisson::exactnum::int;
use admissible_poisson::structure::{find_idempotents, pierce, DEFAULT_SEARCH_BUDGET};

fn main() -> admissible_poisson::Result<()> {
    for alg in [fixture("P_3_6")?, fixture_with("P_3_3", "alpha", int(1))?, fixture("comm2_idempotent")?] {
        println!("{}", alg.name().unwrap_or("?"));
        for e in find_idempotents(&alg, DEFAULT_SEARCH_BUDGET) {
            let d = pierce(&alg, &e)?;
            println!("  e = {:?}: dim P00 = {}, dim P11 = {}, unit = {}", coords(&e), d.p00.dim(), d.p11.dim(), d.is_unit());
        }
    }
    Ok(())
}

fn coords(e: &Element) -> Vec<String> {
    e.iter().map(|c| c.to_string()).collect()
}
