// Quiver mutation by the matrix rule and by the arrow rule, which are
// cross-checked on every call.

use std::collections::BTreeSet;

use cluster_richardson::quiver::ExchangeQuiver;

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    // oriented 3-cycle 1 -> 2 -> 3 -> 1 with a frozen vertex 4 fed by 3
    let full = vec![vec![0, 1, -1, 0], vec![-1, 0, 1, 0], vec![1, -1, 0, 1], vec![0, 0, -1, 0]];
    let q = ExchangeQuiver::from_square(vec![1, 2, 3, 4], &BTreeSet::from([1, 2, 3]), &full)?;
    q.validate()?;

    let m = q.mutate(2)?;
    assert_eq!(m, q.mutate_graph_rule(2)?);
    assert_eq!(m.mutate(2)?, q);
    println!("mu_2 of the 3-cycle:\n{}", m.to_dot(None));

    println!("components: {:?}", m.components());
    match q.mutate(4) {
        Err(e) => println!("mutating at 4: {e}"),
        Ok(_) => unreachable!(),
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
