// The A2 seed: five cluster variables and the pentagon recurrence.

use cluster_richardson::quiver::ExchangeQuiver;
use cluster_richardson::seed::Seed;

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let q = ExchangeQuiver::new(vec![1, 2], vec![1, 2], vec![vec![0, 1], vec![-1, 0]])?;
    let s = Seed::initial(q);

    let mut t = s.clone();
    for (step, k) in [1, 2, 1, 2, 1].into_iter().enumerate() {
        t = t.mutate(k)?;
        println!("step {}: mu_{k} gives {}", step + 1, t.var(k).unwrap());
    }
    assert_eq!(t.var(1), s.var(2));
    assert_eq!(t.var(2), s.var(1));

    let e = s.enumerate_clusters(5)?;
    println!("{} seeds, {} cluster variables:", e.seed_count, e.variables.len());
    for v in &e.variables {
        println!("  {v}");
    }

    let kronecker = ExchangeQuiver::new(vec![1, 2], vec![1, 2], vec![vec![0, 2], vec![-2, 0]])?;
    let e = Seed::initial(kronecker).enumerate_clusters(4)?;
    println!("Kronecker quiver, depth 4: {} variables and still growing", e.variables.len());
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
