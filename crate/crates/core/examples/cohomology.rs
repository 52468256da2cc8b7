//! Second cohomology of every admissible catalog algebra, and the classical
//! operators of one cocycle.

use admissible_poisson::catalog;
use admissible_poisson::cohomology::{classical_operators, cohomology_report};
use admissible_poisson::structure::split;

fn main() -> admissible_poisson::Result<()> {
    println!("{:<24} {:>3} {:>3} {:>3}", "algebra", "Z2", "B2", "H2");
    for (name, params, label) in catalog::sampled_instances() {
        let alg = catalog::get(name, &params)?;
        if let Ok(r) = cohomology_report(&alg) {
            println!("{label:<24} {:>3} {:>3} {:>3}", r.dim_z2, r.dim_b2, r.dim_h2);
        }
    }

    let alg = catalog::fixture("P_2_6")?;
    let r = cohomology_report(&alg)?;
    let ops = classical_operators(&split(&alg)?, &r.z2_basis[0])?;
    println!("\nP_2_6 cocycle: δ_C(φ_a) = 0: {}, δ_H(φ_s) = 0: {}", ops.delta_c_skew.is_zero(), ops.delta_h_sym.is_zero());
    Ok(())
}
