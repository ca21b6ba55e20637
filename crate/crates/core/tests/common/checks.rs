//! Checks shared by the focused test files and the acceptance run. Each
//! panics on the first mismatch.

use std::collections::{BTreeSet, HashSet};

use rectgen::gen_driver::{jump_between, memoryless_codes, run_memoryless};
use rectgen::permlang::{
    enumerate_language, gamma_floorplan, gamma_preimage, is_two_clumped, perm_insert,
    perm_run_greedy, rho_floorplan, Permutation,
};
use rectgen::rect_edit::Dir;
use rectgen::rect_tree::{enumerate_brute, ClassSpec};

use super::golden;

pub fn check_listing(class: &str, spec: &ClassSpec) {
    for n in 1..=5 {
        let want = golden(class, n);
        let got = memoryless_codes(spec, n).unwrap();
        assert_eq!(got.len(), want.len(), "{class} n={n}");
        for (i, (code, g)) in got.iter().zip(&want).enumerate() {
            assert_eq!(code, &g.code, "{class} n={n} entry {}", i + 1);
            let perm = gamma_preimage(code);
            assert_eq!(perm.entries(), &g.perm[..], "{class} n={n} entry {}", i + 1);
        }
    }
}

/// Diagonal n = 4: jump out of each visit, then `o` and `s` at the visit.
const TRACE_D4: [(&str, &str, &str); 22] = [
    ("L4,1", "LLLL", "1234"),
    ("L4,1", "LLLL", "1234"),
    ("L4,1", "LLLL", "1234"),
    ("L3,1", "LLLR", "1233"),
    ("R4,1", "LLLR", "1234"),
    ("R4,1", "LLLR", "1234"),
    ("R4,1", "LLLR", "1234"),
    ("L3,1", "LLLL", "1233"),
    ("L4,1", "LLRL", "1224"),
    ("L4,2", "LLRL", "1224"),
    ("L2,1", "LLRR", "1232"),
    ("R4,1", "LRRR", "1134"),
    ("R4,1", "LRRR", "1134"),
    ("R4,1", "LRRR", "1134"),
    ("R3,1", "LRRL", "1133"),
    ("L4,1", "LRRL", "1134"),
    ("L4,1", "LRRL", "1134"),
    ("L4,1", "LRRL", "1134"),
    ("R3,1", "LRRR", "1133"),
    ("R4,1", "LRLR", "1214"),
    ("R4,2", "LRLR", "1214"),
    ("", "LRLL", "1231"),
];

pub fn diagonal_four_trace() {
    let mut rows: Vec<(Vec<usize>, String, String)> = Vec::new();
    run_memoryless(&ClassSpec::diagonal(), 4, |g, _| {
        let o: String = g.o[1..]
            .iter()
            .map(|d| if *d == Dir::Left { 'L' } else { 'R' })
            .collect();
        let s: String = g.s[1..].iter().map(|x| x.to_string()).collect();
        rows.push((g.r.canonical_code(), o, s));
    })
    .unwrap();
    assert_eq!(rows.len(), 22);
    for (i, (want, got)) in TRACE_D4.iter().zip(&rows).enumerate() {
        let jump = match rows.get(i + 1) {
            Some(next) => {
                let c = jump_between(&got.0, &next.0).unwrap();
                let d = if c.dir() == Dir::Left { 'L' } else { 'R' };
                format!("{d}{},{}", c.j, c.steps())
            }
            None => String::new(),
        };
        assert_eq!(
            (jump.as_str(), got.1.as_str(), got.2.as_str()),
            *want,
            "row {}",
            i + 1
        );
    }
    assert_eq!(gamma_preimage(&rows[0].0), Permutation::identity(4));
}

pub fn rho_maps_s4_onto_the_diagonal_class() {
    let image: BTreeSet<Vec<usize>> = enumerate_language(|_| true, 4)
        .iter()
        .map(|p| rho_floorplan(p).code().unwrap())
        .collect();
    assert_eq!(image, enumerate_brute(&ClassSpec::diagonal(), 4));
}

pub fn gamma_on_two_clumped_is_onto_generic() {
    for n in 1..=6 {
        let image: Vec<Vec<usize>> = enumerate_language(is_two_clumped, n)
            .iter()
            .map(|p| gamma_floorplan(p).code().unwrap())
            .collect();
        let distinct: BTreeSet<Vec<usize>> = image.iter().cloned().collect();
        assert_eq!(distinct.len(), image.len(), "n={n}: not injective");
        assert_eq!(distinct, enumerate_brute(&ClassSpec::generic(), n), "n={n}");
    }
}

pub fn children_form_intervals_with_one_two_clumped_each() {
    for n in 1..=5 {
        for p in enumerate_language(is_two_clumped, n) {
            let parent = gamma_floorplan(&p);
            let nu = parent.insertion_points().len();
            let children: Vec<(usize, bool)> = (1..=n + 1)
                .map(|i| {
                    let c = perm_insert(&p, i).unwrap();
                    let code = gamma_floorplan(&c).code().unwrap();
                    assert_eq!(code[..n - 1], parent.code().unwrap()[..], "{c}");
                    (code[n - 1], is_two_clumped(&c))
                })
                .collect();
            // consecutive runs of equal child, covering 1..=nu in order
            let mut runs: Vec<(usize, usize)> = Vec::new();
            for &(k, clumped) in &children {
                match runs.last_mut() {
                    Some((last, count)) if *last == k => *count += clumped as usize,
                    _ => runs.push((k, clumped as usize)),
                }
            }
            let values: Vec<usize> = runs.iter().map(|r| r.0).collect();
            assert_eq!(values, (1..=nu).collect::<Vec<_>>(), "{p}");
            assert!(runs.iter().all(|r| r.1 == 1), "{p}: {runs:?}");
        }
    }
}

fn transported(spec: &ClassSpec, n: usize) -> Vec<Vec<usize>> {
    let lang: HashSet<Permutation> = enumerate_language(is_two_clumped, n)
        .into_iter()
        .filter(|p| spec.admits(&gamma_floorplan(p)))
        .collect();
    let order = perm_run_greedy(&lang, &Permutation::identity(n));
    assert_eq!(
        order.len(),
        lang.len(),
        "greedy run on permutations incomplete at n={n}"
    );
    order
        .iter()
        .map(|p| gamma_floorplan(p).code().unwrap())
        .collect()
}

pub fn gamma_transports_the_permutation_order() {
    for spec in [ClassSpec::generic(), ClassSpec::diagonal()] {
        for n in 1..=6 {
            assert_eq!(
                transported(&spec, n),
                memoryless_codes(&spec, n).unwrap(),
                "n={n}"
            );
        }
    }
}
