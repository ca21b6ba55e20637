use std::collections::HashSet;

use rectgen::block::{block_partition_floorplan, is_block_aligned_floorplan, BlockKind};
use rectgen::floorplan::Floorplan;
use rectgen::gen_driver::{
    check_gray, memoryless_codes, run_greedy_reference, run_memoryless, Flip, GreedyStop,
};
use rectgen::oracles::{contains_incremental, next_generic, JumpRequest, Move};
use rectgen::rect_core::Rectangulation;
use rectgen::rect_edit::{Dir, WorkCounter};
use rectgen::rect_tree::{contains_pattern_full, enumerate_brute, Base, ClassSpec, RectPattern};

fn spec(base: Base, avoid: &[usize]) -> ClassSpec {
    let ps: Vec<RectPattern> = avoid
        .iter()
        .map(|&k| RectPattern::from_number(k).unwrap())
        .collect();
    ClassSpec::new(base, &ps).unwrap()
}

fn count(s: &ClassSpec, n: usize) -> u64 {
    run_memoryless(s, n, |_, _| {}).unwrap()
}

#[test]
fn five_element_set_greedy_runs() {
    let (r1, r2, r3, r4, r5) = (
        vec![1, 3, 4],
        vec![1, 3, 3],
        vec![1, 3, 1],
        vec![2, 3, 1],
        vec![2, 3, 3],
    );
    let set: HashSet<Vec<usize>> = [&r1, &r2, &r3, &r4, &r5].into_iter().cloned().collect();

    let (order, stop) = run_greedy_reference(&set, &r1).unwrap();
    assert_eq!(order, [r1.clone(), r2.clone(), r3.clone(), r4, r5]);
    assert_eq!(stop, GreedyStop::Complete);

    let (order, stop) = run_greedy_reference(&set, &r3).unwrap();
    assert_eq!((order.len(), stop), (3, GreedyStop::Stuck));

    let (order, stop) = run_greedy_reference(&set, &r2).unwrap();
    assert_eq!(order, [r2]);
    assert_eq!(stop, GreedyStop::Ambiguous);

    assert!(run_greedy_reference(&set, &[2, 2, 2]).is_err());
}

#[test]
fn two_rect_simple_flip_toggles() {
    let mut r = Rectangulation::from_code(&[2]).unwrap();
    let mut w = WorkCounter::new();
    let m = next_generic(&mut r, JumpRequest { j: 2, d: Dir::Left }, &mut w);
    assert_eq!(m, Move::S);
    assert_eq!(r.canonical_code(), vec![1]);
    let m = next_generic(
        &mut r,
        JumpRequest {
            j: 2,
            d: Dir::Right,
        },
        &mut w,
    );
    assert_eq!(m, Move::S);
    assert_eq!(r.canonical_code(), vec![2]);
    assert_eq!(w.s_jumps, 2);
}

#[test]
fn diagonal_runs_never_slide_walls() {
    for n in 2..=7 {
        let codes = memoryless_codes(&ClassSpec::diagonal(), n).unwrap();
        let rep = check_gray(&codes, None);
        assert!(rep.single_jumps);
        assert_eq!(rep.flips.get(&Flip::W), None, "n = {n}");
        assert_eq!(rep.flips.get(&Flip::Compound), None, "n = {n}");
    }
}

#[test]
fn generic_runs_use_every_flip_type() {
    let codes = memoryless_codes(&ClassSpec::generic(), 5).unwrap();
    assert_eq!(codes.len(), 116);
    assert_eq!(codes[0], vec![2, 3, 4, 5]);
    let set: HashSet<Vec<usize>> = codes.iter().cloned().collect();
    let rep = check_gray(&codes, Some(&set));
    assert_eq!(rep.distinct, 116);
    assert!(rep.single_jumps && rep.cyclic);
    assert_eq!(rep.minimal, Some(true));
    for f in [Flip::W, Flip::S, Flip::T] {
        assert!(rep.flips.get(&f).copied().unwrap_or(0) > 0, "{f:?}");
    }
    assert_eq!(rep.flips.get(&Flip::Compound), None);
}

#[test]
fn step_tags_match_local_jumps() {
    let mut steps = 0;
    run_memoryless(&ClassSpec::generic(), 6, |_, s| {
        if let Some(s) = s {
            steps += 1;
            let [w, sj, t] = s.local;
            assert_eq!(w + sj + t, 1);
            let expect = if w == 1 {
                Move::W
            } else if sj == 1 {
                Move::S
            } else {
                Move::T
            };
            assert_eq!(s.tag, Some(expect));
        }
    })
    .unwrap();
    assert_eq!(steps, 641);
}

#[test]
fn block_steps_are_one_flip_plus_simple_flips() {
    for n in 3..=8 {
        run_memoryless(&ClassSpec::block_aligned(), n, |_, s| {
            if let Some(s) = s {
                let [w, sj, t] = s.local;
                assert_eq!((w, t), (0, 1), "n = {n}");
                match s.tag {
                    Some(Move::D) => assert!(sj <= 4),
                    Some(Move::T) => assert!(sj <= 3),
                    other => panic!("unexpected tag {other:?}"),
                }
            }
        })
        .unwrap();
    }
}

#[test]
fn pattern_avoiding_counts() {
    assert_eq!(count(&spec(Base::Generic, &[1, 2]), 5), 114);
    assert_eq!(count(&spec(Base::Generic, &[3, 4, 5, 6]), 6), 274);
    assert_eq!(
        count(&spec(Base::Generic, &[1, 2, 3, 4, 5, 6, 7, 8]), 8),
        2704
    );
    assert_eq!(count(&spec(Base::BlockAligned, &[1, 2]), 8), 948);
    let block: Vec<u64> = (1..=9)
        .map(|n| count(&ClassSpec::block_aligned(), n))
        .collect();
    assert_eq!(block, [1, 1, 2, 6, 22, 88, 374, 1668, 7744]);
}

#[test]
fn block_aligned_rejects_joint_patterns() {
    assert!(ClassSpec::new(Base::BlockAligned, &[RectPattern::P3]).is_err());
    assert!(ClassSpec::new(Base::BlockAligned, &[RectPattern::P2]).is_ok());
}

#[test]
fn incremental_containment_agrees_with_full_test() {
    for n in 2..=6 {
        for c in enumerate_brute(&ClassSpec::generic(), n) {
            let r = Rectangulation::from_code(&c).unwrap();
            let parent = Rectangulation::from_code(&c[..n - 2]).unwrap();
            for p in RectPattern::ALL {
                if contains_pattern_full(&parent, p) {
                    continue;
                }
                let fast = contains_incremental(&r, n, p, &mut WorkCounter::new());
                assert_eq!(fast, contains_pattern_full(&r, p), "{c:?} {p:?}");
            }
        }
    }
}

#[test]
fn row_is_one_vertical_block() {
    for n in 3..=7 {
        let f = Floorplan::from_code(&(2..=n).collect::<Vec<_>>()).unwrap();
        let info = block_partition_floorplan(&f).unwrap();
        assert_eq!(info.blocks.len(), 1);
        assert_eq!(info.blocks[0].rects, (1..=n).collect::<Vec<_>>());
        let kind = info.blocks[0].kind;
        assert!(matches!(kind, BlockKind::V | BlockKind::Both), "{kind:?}");
        assert!(is_block_aligned_floorplan(&f));
    }
}

#[test]
fn block_aligned_is_a_diagonal_subset() {
    for n in 1..=6 {
        let diag = enumerate_brute(&ClassSpec::diagonal(), n);
        for c in enumerate_brute(&ClassSpec::block_aligned(), n) {
            assert!(diag.contains(&c));
        }
    }
    // the stacked pair is the only block-aligned member of the second level
    assert_eq!(enumerate_brute(&ClassSpec::block_aligned(), 2).len(), 1);
}
