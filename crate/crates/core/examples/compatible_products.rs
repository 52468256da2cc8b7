//! Commutative associative products making a Lie bracket into a Poisson algebra.

use admissible_poisson::catalog::fixture;
use admissible_poisson::structure::compatible_products;

fn main() -> admissible_poisson::Result<()> {
    for name in ["sl2", "heisenberg", "lie2"] {
        let p = compatible_products(&fixture(name)?)?;
        let v = p.variety();
        println!(
            "{name:<11} linear span {}  variety dim {:?} (subspace: {:?})",
            p.dim(),
            v.dim,
            v.is_subspace
        );
    }
    Ok(())
}
