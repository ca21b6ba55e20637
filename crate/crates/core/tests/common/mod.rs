#![allow(dead_code)]

pub mod checks;

use std::collections::{BTreeSet, HashMap};

use rectgen::floorplan::Floorplan;
use rectgen::rect_tree::{enumerate_brute, ClassSpec};

/// One line of a golden listing: the caption permutation and the code of the
/// drawn rectangulation.
pub struct Golden {
    pub perm: Vec<usize>,
    pub code: Vec<usize>,
    pub marked: bool,
}

pub fn golden(class: &str, n: usize) -> Vec<Golden> {
    let path = format!("{}/tests/data/{class}_{n}.txt", env!("CARGO_MANIFEST_DIR"));
    let txt = std::fs::read_to_string(path).unwrap();
    txt.lines()
        .map(|line| {
            let (head, boxes) = line.split_once('|').unwrap();
            let head = head.trim();
            let marked = head.ends_with('*');
            let perm = head
                .trim_end_matches('*')
                .trim()
                .chars()
                .map(|c| c.to_digit(10).unwrap() as usize)
                .collect();
            let boxes: Vec<[i64; 4]> = boxes
                .split_whitespace()
                .map(|b| {
                    let v: Vec<i64> = b
                        .split(',')
                        .map(|x| (x.parse::<f64>().unwrap() * 10000.0).round() as i64)
                        .collect();
                    [v[0], v[1], v[2], v[3]]
                })
                .collect();
            let code = Floorplan::from_boxes(&boxes).unwrap().code().unwrap();
            Golden { perm, code, marked }
        })
        .collect()
}

/// All ways of re-cutting the union of rectangles `n-1` and `n` the other
/// way round, with `n` staying bottom-right.
fn flips(f: &Floorplan) -> Vec<Vec<usize>> {
    let n = f.n();
    let b: Vec<[i64; 4]> = f.layout().iter().map(|b| b.map(|x| x * 1000)).collect();
    let (p, q) = (b[n - 2], b[n - 1]);
    let mut out = Vec::new();
    let cut = |lo: i64, hi: i64, axis: usize| -> Vec<i64> {
        let mut cs: BTreeSet<i64> = b
            .iter()
            .flat_map(|x| [x[axis], x[axis + 2]])
            .filter(|&c| c > lo && c < hi)
            .collect();
        cs.insert(lo);
        cs.insert(hi);
        let cs: Vec<i64> = cs.into_iter().collect();
        cs.windows(2).map(|w| (w[0] + w[1]) / 2 + 1).collect()
    };
    let mut try_boxes = |u: [i64; 4], v: [i64; 4]| {
        let mut nb = b.clone();
        nb[n - 2] = u;
        nb[n - 1] = v;
        if let Some(c) = Floorplan::from_boxes(&nb).ok().and_then(|g| g.code()) {
            out.push(c);
        }
    };
    if p[1] == q[1] && p[3] == q[3] {
        // side by side: stack them, n below
        for y in cut(p[1], p[3], 1) {
            try_boxes([p[0], y, q[2], p[3]], [p[0], p[1], q[2], y]);
        }
    } else if p[0] == q[0] && p[2] == q[2] {
        for x in cut(p[0], p[2], 0) {
            try_boxes([p[0], q[1], x, p[3]], [x, q[1], p[2], p[3]]);
        }
    }
    out
}

/// The member of `level` glued to `code`: `code` itself or its flipped twin.
pub fn block_rep(level: &BTreeSet<Vec<usize>>, code: &[usize]) -> Vec<usize> {
    if level.contains(code) {
        return code.to_vec();
    }
    let f = Floorplan::from_code(code).unwrap();
    let reps: Vec<Vec<usize>> = flips(&f)
        .into_iter()
        .filter(|c| level.contains(c))
        .collect();
    assert_eq!(reps.len(), 1, "{code:?} has twins {reps:?}");
    reps[0].clone()
}

/// `((horizontal, insertion index), code)` of one child.
type Child = ((bool, usize), Vec<usize>);

/// Gray code order of the block-aligned class: the tree whose nodes glue
/// each member with its flipped twin, children ordered vertical insertions
/// first, then horizontal ones, each by position; siblings are listed in
/// alternating direction, starting backwards.
pub fn block_reference_order(spec: &ClassSpec, n: usize) -> Vec<Vec<usize>> {
    let mut order: Vec<Vec<usize>> = enumerate_brute(spec, n.min(2)).into_iter().collect();
    for m in 3..=n {
        let prev: BTreeSet<Vec<usize>> = enumerate_brute(spec, m - 1);
        let mut kids: HashMap<Vec<usize>, Vec<Child>> = HashMap::new();
        for code in enumerate_brute(spec, m) {
            let (parent, k) = Floorplan::from_code(&code).unwrap().delete().unwrap();
            let horizontal = !parent.insertion_points()[k - 1].vertical;
            let rep = block_rep(&prev, &parent.code().unwrap());
            kids.entry(rep).or_default().push(((horizontal, k), code));
        }
        let mut next = Vec::new();
        for (i, p) in order.iter().enumerate() {
            let mut ks = kids.remove(p).unwrap_or_default();
            ks.sort();
            if i % 2 == 0 {
                ks.reverse();
            }
            next.extend(ks.into_iter().map(|(_, c)| c));
        }
        assert!(kids.is_empty());
        order = next;
    }
    order
}
