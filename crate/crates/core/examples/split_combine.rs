//! Splitting an admissible algebra into a Poisson pair and putting it back.

use admissible_poisson::catalog::fixture;
use admissible_poisson::structure::{combine, lie_center, lie_type, split};

fn main() -> admissible_poisson::Result<()> {
    let alg = fixture("P_3_2")?;
    let pair = split(&alg)?;
    println!("bracket lie type: {:?}", lie_type(pair.bracket()));
    println!("bracket:  {}", serde_json::to_string(pair.bracket())?);
    println!("product:  {}", serde_json::to_string(pair.product())?);
    println!("center dim: {}", lie_center(&pair).dim());
    let back = combine(&pair)?;
    assert_eq!(back.mu(), alg.mu());
    println!("combine(split(P_3_2)) == P_3_2");
    Ok(())
}
