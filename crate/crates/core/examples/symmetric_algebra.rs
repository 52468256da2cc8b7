//! Truncated symmetric algebras with the linear Poisson bracket.

use admissible_poisson::cohomology::delta_lp;
use admissible_poisson::exactnum::int;
use admissible_poisson::symalg::{ad_spectrum, biderivation_extend, build_symalg, fixtures, lp_cocycle_witness, Bivector, SparsePoly};

fn main() -> admissible_poisson::Result<()> {
    let s = build_symalg(&fixtures::lie2(), 2)?;
    let spectrum = ad_spectrum(&s.pair, &s.generator(0))?;
    println!("S_2([X,Y]=Y) basis {:?}", s.basis.labels());
    println!("ad X eigenvalues {:?}", spectrum.eigenvalues.map(|e| e.iter().map(|c| c.to_string()).collect::<Vec<_>>()));

    let g = fixtures::rigid6();
    let s = build_symalg(&g, 2)?;
    let y2 = SparsePoly::var(6, 2);
    let phi = Bivector::zero(6).with(1, 3, y2.mul(&y2));
    let ext = biderivation_extend(&s, &phi)?;
    println!("\nrigid6: dim S_2 = {}, δ_LP φ₁ = 0: {}", s.dim(), delta_lp(&s.pair, &ext)?.is_zero());

    let torus = fixtures::torus4();
    let phi = Bivector::zero(4).with(0, 1, SparsePoly::constant(4, int(1)));
    println!("torus4: φ(X1,X2) = 1 is an LP cocycle up to degree 4: {}", lp_cocycle_witness(&torus, &phi, 4).is_none());
    Ok(())
}
