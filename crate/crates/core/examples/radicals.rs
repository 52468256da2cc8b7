//! Radicals, the nilalgebra test and the multiplication algebra.

use admissible_poisson::catalog::{fixture, fixture_with};
use admissible_poisson::exactnum::int;
use admissible_poisson::structure::{multiplication_algebra, radicals};

fn main() -> admissible_poisson::Result<()> {
    for alg in [fixture("nil_simple")?, fixture_with("P_3_3", "alpha", int(0))?, fixture("P_3_5")?] {
        let r = radicals(&alg)?;
        let m = multiplication_algebra(&alg, 50, 0);
        println!(
            "{:<12} nilalgebra={:<5} dim N={} dim J={}  M(A): dim {} {:?}",
            alg.name().unwrap_or("?"),
            r.is_nilalgebra,
            r.nilradical.dim(),
            r.jacobson_of_product.dim(),
            m.dim,
            m.simplicity
        );
    }
    Ok(())
}
