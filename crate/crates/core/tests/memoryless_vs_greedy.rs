use std::collections::HashSet;

use rectgen::gen_driver::{run_greedy_reference, run_memoryless, GreedyStop};
use rectgen::rect_tree::{enumerate_brute, ClassSpec};

fn compare(spec: &ClassSpec, n: usize) {
    let mut got = Vec::new();
    run_memoryless(spec, n, |g, _| {
        if let Err(v) = g.r.validate() {
            panic!("invalid after {} visits: {v:?}", got.len());
        }
        got.push(g.r.canonical_code());
    })
    .unwrap();
    let set: HashSet<Vec<usize>> = enumerate_brute(spec, n).into_iter().collect();
    let (want, stop) = run_greedy_reference(&set, &got[0]).unwrap();
    assert_eq!(stop, GreedyStop::Complete);
    for (i, (a, b)) in got.iter().zip(&want).enumerate() {
        assert_eq!(a, b, "n={n} step {i}");
    }
    assert_eq!(got.len(), want.len());
}

#[test]
fn generic_matches_greedy() {
    for n in 1..=6 {
        compare(&ClassSpec::generic(), n);
    }
}

#[test]
fn diagonal_matches_greedy() {
    for n in 1..=6 {
        compare(&ClassSpec::diagonal(), n);
    }
}
