//! Partition of a diagonal rectangulation into maximal alignable blocks, and
//! the block-aligned membership test built on it.

use std::collections::HashSet;

use crate::floorplan::{Floorplan, Sides, BOTTOM, LEFT};
use crate::patterns::{contains, RectPattern};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum BlockKind {
    /// A single rectangle.
    Single,
    /// Vertically stacked rows of one rectangle or two side by side.
    H,
    /// Horizontally glued columns of one rectangle or two stacked.
    V,
    /// Two rectangles; both readings apply.
    Both,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Alignment {
    Aligned,
    Almost,
    Neither,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Block {
    /// 1-based rectangle labels, ascending.
    pub rects: Vec<usize>,
    pub kind: BlockKind,
    /// Bounding walls `(left, right, bottom, top)`.
    pub bounds: [usize; 4],
    /// Label of the bottom-right rectangle.
    pub corner: usize,
    /// Locked as an H-block (for `Both`, the V reading is the opposite).
    pub locked_h: bool,
    pub h_state: Alignment,
    pub v_state: Alignment,
}

impl Block {
    /// Contains the whole bottom side of the rectangulation.
    pub fn is_base(&self) -> bool {
        self.bounds[0] == LEFT && self.bounds[2] == BOTTOM
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BlockInfo {
    pub blocks: Vec<Block>,
    /// `owner[i]` is the index into `blocks` of rectangle `i` (1-based, slot 0 unused).
    pub owner: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum BlockError {
    #[error("block partition is only defined for diagonal rectangulations")]
    NotDiagonal,
}

fn is_diagonal(f: &Floorplan) -> bool {
    !contains(f, RectPattern::P3) && !contains(f, RectPattern::P4)
}

type Mask = u128;

#[derive(Clone, Copy)]
struct Unit {
    mask: Mask,
    b: [usize; 4],
}

fn bit(i: usize) -> Mask {
    1 << i
}

/// Units are single rectangles or pairs; `across` pairs sit side by side for
/// H-stacks and on top of each other for V-chains.
fn units(rs: &[Sides], across_vertical_wall: bool) -> Vec<Unit> {
    let mut out: Vec<Unit> = rs
        .iter()
        .enumerate()
        .map(|(i, s)| Unit {
            mask: bit(i),
            b: [s.left, s.right, s.bottom, s.top],
        })
        .collect();
    for (i, a) in rs.iter().enumerate() {
        for (k, c) in rs.iter().enumerate() {
            if across_vertical_wall {
                if a.right == c.left && a.top == c.top && a.bottom == c.bottom {
                    out.push(Unit {
                        mask: bit(i) | bit(k),
                        b: [a.left, c.right, a.bottom, a.top],
                    });
                }
            } else if a.bottom == c.top && a.left == c.left && a.right == c.right {
                out.push(Unit {
                    mask: bit(i) | bit(k),
                    b: [a.left, a.right, c.bottom, a.top],
                });
            }
        }
    }
    out
}

/// All alignable blocks with at least two rectangles, tagged H or V.
fn alignable(rs: &[Sides]) -> Vec<(Mask, BlockKind, [usize; 4])> {
    let mut out = Vec::new();
    // H: stack units bottom to top with equal left and right walls
    let hu = units(rs, true);
    for u in &hu {
        let mut cur = *u;
        loop {
            if cur.mask.count_ones() >= 2 {
                out.push((cur.mask, BlockKind::H, cur.b));
            }
            match hu
                .iter()
                .find(|v| v.b[0] == cur.b[0] && v.b[1] == cur.b[1] && v.b[2] == cur.b[3])
            {
                Some(v) => {
                    cur = Unit {
                        mask: cur.mask | v.mask,
                        b: [cur.b[0], cur.b[1], cur.b[2], v.b[3]],
                    }
                }
                None => break,
            }
        }
    }
    let vu = units(rs, false);
    for u in &vu {
        let mut cur = *u;
        loop {
            if cur.mask.count_ones() >= 2 {
                out.push((cur.mask, BlockKind::V, cur.b));
            }
            match vu
                .iter()
                .find(|v| v.b[2] == cur.b[2] && v.b[3] == cur.b[3] && v.b[0] == cur.b[1])
            {
                Some(v) => {
                    cur = Unit {
                        mask: cur.mask | v.mask,
                        b: [cur.b[0], v.b[1], cur.b[2], cur.b[3]],
                    }
                }
                None => break,
            }
        }
    }
    out
}

fn state(rs: &[Sides], mask: Mask, b: [usize; 4], h: bool) -> Alignment {
    let members: Vec<&Sides> = rs
        .iter()
        .enumerate()
        .filter(|(i, _)| mask & bit(*i) != 0)
        .map(|(_, s)| s)
        .collect();
    let spans = |s: &Sides| {
        if h {
            s.left == b[0] && s.right == b[1]
        } else {
            s.bottom == b[2] && s.top == b[3]
        }
    };
    let short: Vec<&&Sides> = members.iter().filter(|s| !spans(s)).collect();
    if short.is_empty() {
        return Alignment::Aligned;
    }
    if short.len() == 2 {
        let ok = if h {
            short.iter().all(|s| s.bottom == b[2]) && short[0].top == short[1].top
        } else {
            short.iter().all(|s| s.right == b[1]) && short[0].left == short[1].left
        };
        if ok {
            return Alignment::Almost;
        }
    }
    Alignment::Neither
}

pub fn block_partition_floorplan(f: &Floorplan) -> Result<BlockInfo, BlockError> {
    if !is_diagonal(f) {
        return Err(BlockError::NotDiagonal);
    }
    let rs = &f.rects;
    let n = rs.len();
    let cands = alignable(rs);
    let mut seen = HashSet::new();
    let mut maximal: Vec<(Mask, BlockKind, [usize; 4])> = Vec::new();
    for &(m, k, b) in &cands {
        if cands.iter().any(|&(m2, _, _)| m2 != m && m2 & m == m) || !seen.insert(m) {
            continue;
        }
        let kind = if m.count_ones() == 2 {
            BlockKind::Both
        } else {
            k
        };
        maximal.push((m, kind, b));
    }
    let mut covered: Mask = 0;
    for &(m, _, _) in &maximal {
        covered |= m;
    }
    for (i, s) in rs.iter().enumerate() {
        if covered & bit(i) == 0 {
            maximal.push((
                bit(i),
                BlockKind::Single,
                [s.left, s.right, s.bottom, s.top],
            ));
        }
    }
    maximal.sort_by_key(|&(m, _, _)| m.trailing_zeros());
    let mut owner = vec![0; n + 1];
    let blocks = maximal
        .iter()
        .enumerate()
        .map(|(bi, &(m, kind, b))| {
            let labels: Vec<usize> = (0..n).filter(|&i| m & bit(i) != 0).map(|i| i + 1).collect();
            for &l in &labels {
                owner[l] = bi;
            }
            let corner = *labels
                .iter()
                .find(|&&l| rs[l - 1].right == b[1] && rs[l - 1].bottom == b[2])
                .expect("block has a bottom-right rectangle");
            let locked_h = corner < n && rs[corner].left == rs[corner - 1].right;
            Block {
                rects: labels,
                kind,
                bounds: b,
                corner,
                locked_h,
                h_state: state(rs, m, b, true),
                v_state: state(rs, m, b, false),
            }
        })
        .collect();
    Ok(BlockInfo { blocks, owner })
}

/// Every block of size at least two is aligned, or almost aligned when
/// locked, with the special rule for a two-element block holding `r_n`.
pub fn is_block_aligned_floorplan(f: &Floorplan) -> bool {
    let Ok(info) = block_partition_floorplan(f) else {
        return false;
    };
    let n = f.n();
    info.blocks.iter().all(|bl| match bl.kind {
        BlockKind::Single => true,
        BlockKind::Both if bl.rects.contains(&n) => {
            if bl.is_base() {
                bl.h_state == Alignment::Aligned
            } else {
                bl.v_state == Alignment::Aligned
            }
        }
        BlockKind::H | BlockKind::Both => {
            let want = if bl.locked_h {
                Alignment::Almost
            } else {
                Alignment::Aligned
            };
            bl.h_state == want
        }
        BlockKind::V => {
            // a V-block is locked exactly when the next rectangle sits below
            let want = if bl.locked_h || bl.corner == n {
                Alignment::Aligned
            } else {
                Alignment::Almost
            };
            bl.v_state == want
        }
    })
}
