//! The P_3_7 family as a one-parameter deformation, and a formal equivalence.

use admissible_poisson::algebra::{Cochain2, LinearMap};
use admissible_poisson::catalog::fixture_with;
use admissible_poisson::cohomology::delta1;
use admissible_poisson::deformations::{apply_equivalence, obstructions, FormalDeformation, DEFAULT_ORDER};
use admissible_poisson::exactnum::int;

fn main() -> admissible_poisson::Result<()> {
    let base = fixture_with("P_3_7", "alpha", int(2))?;
    let phi = Cochain2::from_entries(3, [(0, 2, 2, int(1)), (2, 0, 2, int(-1))]);
    let d = FormalDeformation::new(base.clone(), vec![phi])?.with_order(DEFAULT_ORDER);
    let report = obstructions(&d)?;
    for o in &report.orders {
        println!("order {}: residual vanishes = {}", o.order, o.vanishes);
    }

    let g = LinearMap::from_i64(3, &[0, 1, 0, 0, 0, 0, 0, 0, 1])?;
    let trivial = FormalDeformation::new(base.clone(), vec![delta1(&base, &g)?])?;
    let f = [LinearMap::identity(3), g.scale(&int(-1))];
    let e = apply_equivalence(&trivial, &f)?;
    println!("\nf = id - t·g removes t·δ¹g: first-order term zero = {}", e.terms[0].is_zero());
    Ok(())
}
