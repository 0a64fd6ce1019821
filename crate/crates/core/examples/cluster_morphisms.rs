// Elementary cluster morphisms, validation, decomposition and kernels.

use std::collections::{BTreeMap, BTreeSet};

use cluster_richardson::laurent::LaurentPolynomial;
use cluster_richardson::morphism::{ClusterMorphism, SeedAmbient};
use cluster_richardson::quiver::ExchangeQuiver;

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    // A3 path 1 -> 2 -> 3 with a frozen vertex 4 attached to 3
    let full = vec![vec![0, 1, 0, 0], vec![-1, 0, 1, 0], vec![0, -1, 0, -1], vec![0, 0, 1, 0]];
    let q = ExchangeQuiver::from_square(vec![1, 2, 3, 4], &BTreeSet::from([1, 2, 3]), &full)?;
    let t = SeedAmbient::with_prefix(q, "x");

    let del = ClusterMorphism::deleting(&t, &BTreeSet::from([1]))?;
    let frz = ClusterMorphism::freezing(del.target(), &BTreeSet::from([2]))?;
    println!("deleting {{1}}: {:?}", del.validate());
    println!("freezing {{2}} of the result runs from a seed with mutable set {:?}", frz.source().quiver().mutable());

    let frz1 = ClusterMorphism::freezing(&t, &BTreeSet::from([3]))?;
    let composite = frz1.then(&del)?;
    let d = composite.decompose()?;
    println!("decomposition of the composite: F={:?} sigma={:?} E={:?} H={:?}", d.kill, d.sigma, d.freeze, d.embed);

    let rename = ClusterMorphism::similarity(&t, &BTreeMap::from([(1, 1), (2, 2), (3, 3), (4, 4)]), Some("y"))?;
    println!("renaming to y: x2 -> {}", rename.apply(&LaurentPolynomial::parse(t.ambient(), "x2")?)?);

    let f = LaurentPolynomial::parse(t.ambient(), "(x1 - 1) * (x2 + x3^-2)")?;
    let g = LaurentPolynomial::parse(t.ambient(), "x1 + x2")?;
    println!("{f} in ker Del_1: {}", del.kernel_contains(&f)?);
    println!("{g} in ker Del_1: {}", del.kernel_contains(&g)?);

    let bad = ClusterMorphism::new(t.clone(), t.clone(), BTreeMap::from([(1, Some(2)), (2, Some(1)), (3, Some(3)), (4, Some(4))]));
    if let Err(v) = bad.validate() {
        println!("swapping 1 and 2 is not a morphism: {v} ({} violations in all)", bad.violations().len());
    }

    let s = t.seed();
    println!("Del_1 commutes with mu_2 mu_3 mu_2: {}", del.commutes_with_mutation(&[2, 3, 2], &s)?);
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
