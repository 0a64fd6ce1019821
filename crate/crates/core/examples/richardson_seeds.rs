// The N_w seed of a reduced word, the Richardson seed for a prefix, and the
// morphism that sends the prefix variables to 1.

use cluster_richardson::laurent::LaurentPolynomial;
use cluster_richardson::richardson::{build_nw_seed, build_richardson_seed, richardson_morphism};
use cluster_richardson::weyl::{CartanDatum, Word};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let a3 = CartanDatum::type_a(3);
    let w: Word = "1,2,1,3,2,1".parse()?;

    let nw = build_nw_seed(&a3, &w)?;
    println!("N_w seed: mutable {:?}, frozen {:?}", nw.quiver().mutable(), nw.quiver().frozen());
    println!("{}", nw.to_dot());

    let rich = build_richardson_seed(&a3, &w, 2)?;
    for (v, l) in rich.quiver().vertices().iter().zip(rich.labels()) {
        println!("  vertex {v}: {l}");
    }

    let phi = richardson_morphism(&a3, &w, 1)?;
    let d = phi.decompose()?;
    println!("phi kills {:?}; decomposition F={:?} E={:?} H={:?}", phi.kill_set(), d.kill, d.freeze, d.embed);
    let f = LaurentPolynomial::parse(phi.source().ambient(), "x1 * x2 + x4")?;
    println!("phi({f}) = {}", phi.apply(&f)?);
    println!("phi commutes with mu_3 mu_2 mu_3: {}", phi.commutes_with_mutation(&[3, 2, 3], &phi.source().seed())?);
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
