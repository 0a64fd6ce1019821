use cluster_richardson::minors::{realized_seed, verify_exchange, Mode};
use cluster_richardson::weyl::{CartanDatum, Word};

fn reduced_words(c: &CartanDatum, len: usize) -> Vec<Word> {
    let mut layer = vec![Word::identity()];
    for _ in 0..len {
        layer = layer
            .iter()
            .flat_map(|x| (1..=c.rank()).map(move |i| Word([x.0.clone(), vec![i]].concat())))
            .filter(|y| c.is_reduced(y).unwrap())
            .collect();
    }
    layer
}

#[test]
fn pit_agrees_with_exact_on_longest_words() {
    let mut cases = 0;
    for r in [2, 3] {
        let c = CartanDatum::type_a(r);
        for word in reduced_words(&c, r * (r + 1) / 2) {
            for p in 0..=word.len() {
                let seed = realized_seed(r, &word, p).unwrap();
                for &k in seed.quiver().mutable() {
                    let exact = verify_exchange(r, &word, p, k, Mode::Exact, 0, 0).unwrap();
                    let pit = verify_exchange(r, &word, p, k, Mode::Pit, 5, 11).unwrap();
                    assert_eq!(exact.result, pit.result, "{word} p={p} k={k}");
                    assert!(exact.result, "{word} p={p} k={k}");
                    cases += 1;
                }
            }
        }
    }
    assert!(cases > 50);
}
