// Exact Laurent arithmetic over named variables.

use std::collections::BTreeMap;

use cluster_richardson::laurent::{Ambient, LaurentPolynomial};
use num_rational::BigRational;

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let amb = Ambient::new(["x1", "x2", "x3"])?;
    let p = |s: &str| LaurentPolynomial::parse(&amb, s);

    let f = p("(x1 + x2)^2 - x3/x1")?;
    println!("f = {f}");

    let g = &p("x1 + x2 + 1")? * &p("x1 - x2^-1")?;
    let back = g.exact_divide(&p("x1 - x2^-1")?)?;
    println!("(x1 + x2 + 1)(x1 - 1/x2) / (x1 - 1/x2) = {back}");

    match p("x1 + 1")?.exact_divide(&p("x1 + x2")?) {
        Ok(q) => println!("unexpected quotient {q}"),
        Err(e) => println!("x1 + x2 does not divide x1 + 1: {e}"),
    }

    let at = BTreeMap::from([("x1".to_string(), BigRational::from_integer(2.into()))]);
    println!("f(x1 = 2) = {}", f.specialize(&at)?);
    println!("as JSON: {}", serde_json::to_string(&p("x1^-1 + 3/4")?.to_json_terms())?);
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
