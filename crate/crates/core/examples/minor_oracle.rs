// Type-A minors as cluster variables, and exchange relations checked
// exactly and by random evaluation.

use cluster_richardson::minors::{generalized_minor, nonvanishing_report, realize_seed, verify_exchange, Mode};
use cluster_richardson::weyl::Word;

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let w: Word = "1,2,1".parse()?;
    for (v, m) in realize_seed(2, &w, 0)? {
        println!("D({v},0) = {}  (rows {:?}, cols {:?})", m.value, m.rows, m.cols);
    }
    for (v, m) in realize_seed(2, &w, 1)? {
        println!("Richardson vertex {v} = {}", m.value);
    }

    let exact = verify_exchange(2, &w, 0, 1, Mode::Exact, 0, 0)?;
    println!("{}", serde_json::to_string(&exact)?);
    let w0: Word = "1,2,1,3,2,1".parse()?;
    for k in 1..=3 {
        let pit = verify_exchange(3, &w0, 0, k, Mode::Pit, 20, 7)?;
        println!("A3 vertex {k} by random evaluation: {}", pit.result);
    }

    let m = generalized_minor(3, &"1,2,3".parse()?, &Word::identity(), 2)?;
    println!("D(s1s2s3 w2, w2) = {}", m.value);
    let r = nonvanishing_report(2, &Word::identity(), &"2".parse()?, 1)?;
    println!("u = e, v = s2, i = 1: minor {} nonzero={} v<=u={} on coset reps={}", r.minor, r.nonzero, r.bruhat, r.parabolic_bruhat);
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
