// Reduced words, beta roots, Bruhat order and the frozen-position rule.

use cluster_richardson::weyl::{CartanDatum, Weight, Word};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let a3 = CartanDatum::preset("A3")?;
    let w0: Word = "1,2,1,3,2,1".parse()?;

    println!("{w0} reduced: {}", a3.is_reduced(&w0)?);
    for (k, b) in a3.beta_roots(&w0)?.iter().enumerate() {
        println!("  beta_{} = {b}", k + 1);
    }
    println!("frozen positions: {:?}", a3.frozen_set(&w0)?);
    println!("w0(w1) = {}", a3.act(&w0, &Weight::fundamental(3, 1))?);

    let v: Word = "2,3".parse()?;
    println!("{v} <= {w0}: {}", a3.bruhat_leq(&v, &w0)?);
    println!("l(v^-1 w0) = l(w0) - l(v): {}", a3.length_additive(&w0, &v)?);
    println!("reduce [1,2,1,2,1] in A2: {}", CartanDatum::type_a(2).reduce(&"1,2,1,2,1".parse()?)?);

    let affine = CartanDatum::new(vec![vec![2, -2], vec![-2, 2]])?;
    let long: Word = "1,2,1,2,1,2,1,2".parse()?;
    println!("affine A1: {long} reduced: {}", affine.is_reduced(&long)?);
    println!("D4 has {} elements", CartanDatum::type_d4().elements_up_to_length(12).len());
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
