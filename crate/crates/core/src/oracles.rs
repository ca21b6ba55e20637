//! Minimal jump oracles. Each call moves rectangle `j` to the next insertion
//! point of `R^[j-1]` in direction `d` that yields a member of the class.

use crate::patterns::RectPattern;
use crate::rect_core::{Rectangulation, VertexType};
use crate::rect_edit::{local_jump, Dir, JumpKind, WorkCounter};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct JumpRequest {
    pub j: usize,
    pub d: Dir,
}

/// The flip performed by one oracle call, as seen from the outside.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Move {
    W,
    S,
    T,
    /// Simple flip, T-flip, simple flip, counted as one move.
    D,
}

fn tail(r: &Rectangulation, e: usize) -> usize {
    r.edges[e].tail
}

fn head(r: &Rectangulation, e: usize) -> usize {
    r.edges[e].head
}

fn jump(
    r: &mut Rectangulation,
    kind: JumpKind,
    j: usize,
    d: Dir,
    e: usize,
    w: &mut WorkCounter,
) -> Move {
    local_jump(r, kind, j, d, e, w);
    match kind {
        JumpKind::WH | JumpKind::WV => Move::W,
        JumpKind::S => Move::S,
        JumpKind::TH | JumpKind::TV => Move::T,
    }
}

/// One step through all insertion points of `R^[j-1]`.
pub fn next_generic(r: &mut Rectangulation, req: JumpRequest, w: &mut WorkCounter) -> Move {
    use VertexType::*;
    let JumpRequest { j, d } = req;
    let a = r.rects[j].nw;
    let va = r.vertices[a];
    match (d, va.kind) {
        (Dir::Left, BottomT) => {
            let b = tail(r, va.south);
            let c = tail(r, va.west);
            if r.vtype(c) == TopT {
                let g = r.vertices[c].west;
                jump(r, JumpKind::WH, j, d, g, w)
            } else if r.vtype(b) == LeftT {
                let g = r.vertices[b].west;
                jump(r, JumpKind::TH, j, d, g, w)
            } else {
                let g = r.vertices[c].south;
                jump(r, JumpKind::S, j, d, g, w)
            }
        }
        (Dir::Right, BottomT) => {
            let b = head(r, va.east);
            if r.vtype(b) == TopT {
                let g = r.vertices[b].east;
                jump(r, JumpKind::WH, j, d, g, w)
            } else {
                let k = r.edges[va.east].left;
                let c = r.rects[k].nw;
                let g = r.vertices[c].east;
                jump(r, JumpKind::TH, j, d, g, w)
            }
        }
        (Dir::Right, RightT) => {
            let b = head(r, va.east);
            let c = head(r, va.north);
            if r.vtype(c) == LeftT {
                let g = r.vertices[c].north;
                jump(r, JumpKind::WV, j, d, g, w)
            } else if r.vtype(b) == TopT {
                let g = r.vertices[b].north;
                jump(r, JumpKind::TV, j, d, g, w)
            } else {
                let g = r.vertices[c].east;
                jump(r, JumpKind::S, j, d, g, w)
            }
        }
        (Dir::Left, RightT) => {
            let b = tail(r, va.south);
            if r.vtype(b) == LeftT {
                let g = r.vertices[b].south;
                jump(r, JumpKind::WV, j, d, g, w)
            } else {
                let k = r.edges[va.south].left;
                let c = r.rects[k].nw;
                let g = r.vertices[c].south;
                jump(r, JumpKind::TV, j, d, g, w)
            }
        }
        _ => panic!(
            "rectangle {j} has no jump {d:?} from a {:?} corner",
            va.kind
        ),
    }
}

/// One step through the first point of every vertical group and the last
/// point of every horizontal group.
pub fn next_diagonal(r: &mut Rectangulation, req: JumpRequest, w: &mut WorkCounter) -> Move {
    use VertexType::*;
    let JumpRequest { j, d } = req;
    let a = r.rects[j].nw;
    let va = r.vertices[a];
    match (d, va.kind) {
        (Dir::Left, BottomT) => {
            let b = tail(r, va.south);
            if r.vtype(b) == LeftT {
                let g = r.vertices[b].west;
                jump(r, JumpKind::TH, j, d, g, w)
            } else {
                let c = r.rects[j - 1].sw;
                let g = r.vertices[c].north;
                jump(r, JumpKind::S, j, d, g, w)
            }
        }
        (Dir::Right, BottomT) => {
            let k = r.edges[va.east].left;
            let b = r.rects[k].ne;
            let g = r.vertices[b].west;
            jump(r, JumpKind::TH, j, d, g, w)
        }
        (Dir::Right, RightT) => {
            let b = head(r, va.east);
            if r.vtype(b) == TopT {
                let g = r.vertices[b].north;
                jump(r, JumpKind::TV, j, d, g, w)
            } else {
                let c = r.rects[j - 1].ne;
                let g = r.vertices[c].west;
                jump(r, JumpKind::S, j, d, g, w)
            }
        }
        (Dir::Left, RightT) => {
            let k = r.edges[va.south].left;
            let b = r.rects[k].sw;
            let g = r.vertices[b].north;
            jump(r, JumpKind::TV, j, d, g, w)
        }
        _ => panic!(
            "rectangle {j} has no jump {d:?} from a {:?} corner",
            va.kind
        ),
    }
}

/// Localized containment test for `P` around rectangle `j`. Only valid right
/// after jumps of `r_j` that started from a rectangulation avoiding `P`.
pub fn contains_incremental(
    r: &Rectangulation,
    j: usize,
    p: RectPattern,
    w: &mut WorkCounter,
) -> bool {
    use VertexType::*;
    w.tick(1);
    let a = r.rects[j].nw;
    let va = r.vertices[a];
    let t = |v: usize| r.vertices[v].kind;
    match p {
        RectPattern::P1 => {
            if va.kind != RightT {
                return false;
            }
            let b = r.walls[r.edges[va.north].wall].last;
            let c = r.walls[r.edges[r.vertices[b].east].wall].last;
            let d = r.walls[r.edges[r.vertices[c].south].wall].first;
            let delta = r.vertices[d].west;
            delta != 0 && r.edges[delta].right == j
        }
        RectPattern::P2 => {
            if va.kind != BottomT {
                return false;
            }
            let b = r.walls[r.edges[va.west].wall].first;
            let c = r.walls[r.edges[r.vertices[b].south].wall].first;
            let d = r.walls[r.edges[r.vertices[c].east].wall].last;
            let delta = r.vertices[d].north;
            delta != 0 && r.edges[delta].right == j
        }
        RectPattern::P3 => va.kind == RightT && t(tail(r, va.south)) == LeftT,
        RectPattern::P5 => va.kind == RightT && t(head(r, va.north)) == LeftT,
        RectPattern::P4 => va.kind == BottomT && t(head(r, va.east)) == TopT,
        RectPattern::P6 => va.kind == BottomT && t(tail(r, va.west)) == TopT,
        RectPattern::P7 => {
            if va.kind != RightT {
                return false;
            }
            // up the left side of r_j, left along each wall ending there,
            // up each wall standing on that one
            let mut b = r.rects[j].sw;
            while !matches!(t(b), BottomT | Corner) {
                w.tick(1);
                let mut c = b;
                while !matches!(t(c), RightT | Corner) {
                    w.tick(1);
                    if t(c) == TopT {
                        let mut d = c;
                        while d != b && !matches!(t(d), BottomT | Corner) {
                            w.tick(1);
                            if t(d) == LeftT {
                                return true;
                            }
                            d = head(r, r.vertices[d].north);
                        }
                    }
                    c = tail(r, r.vertices[c].west);
                }
                b = head(r, r.vertices[b].north);
            }
            false
        }
        RectPattern::P8 => {
            if va.kind != BottomT {
                return false;
            }
            let mut b = r.rects[j].ne;
            while !matches!(t(b), RightT | Corner) {
                w.tick(1);
                let mut c = b;
                while !matches!(t(c), BottomT | Corner) {
                    w.tick(1);
                    if t(c) == LeftT {
                        let mut d = c;
                        while d != b && !matches!(t(d), RightT | Corner) {
                            w.tick(1);
                            if t(d) == TopT {
                                return true;
                            }
                            d = tail(r, r.vertices[d].west);
                        }
                    }
                    c = head(r, r.vertices[c].north);
                }
                b = tail(r, r.vertices[b].west);
            }
            false
        }
    }
}

/// Base oracle selector for [`next_pattern_avoiding`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BaseOracle {
    Generic,
    Diagonal,
    Block,
}

/// Repeats the base oracle until `R` avoids every pattern in `avoid` and
/// returns the number of base steps taken. With `windmill_shortcut`, a
/// windmill test result is reused until the next T-jump, since W- and S-jumps
/// do not change whether a rectangulation is guillotine.
pub fn next_pattern_avoiding(
    r: &mut Rectangulation,
    req: JumpRequest,
    base: BaseOracle,
    avoid: &[RectPattern],
    windmill_shortcut: bool,
    w: &mut WorkCounter,
) -> usize {
    let mut mills: [Option<bool>; 2] = [None, None];
    let mut steps = 0;
    loop {
        let m = match base {
            BaseOracle::Generic => next_generic(r, req, w),
            BaseOracle::Diagonal => next_diagonal(r, req, w),
            BaseOracle::Block => next_block(r, req, w),
        };
        steps += 1;
        if matches!(m, Move::T | Move::D) || !windmill_shortcut {
            mills = [None, None];
        }
        // the block oracle may also reshape r_{j-1} and r_{j+1}
        let near = if base == BaseOracle::Block {
            req.j - 1..=(req.j + 1).min(r.n)
        } else {
            req.j..=req.j
        };
        let test = |p: RectPattern, w: &mut WorkCounter| {
            near.clone().any(|i| contains_incremental(r, i, p, w))
        };
        let hit = avoid.iter().any(|&p| match p {
            RectPattern::P1 | RectPattern::P2 => {
                let slot = &mut mills[p as usize];
                *slot.get_or_insert_with(|| test(p, w))
            }
            _ => test(p, w),
        });
        if !hit {
            return steps;
        }
    }
}

/// Direction of the alignment that [`lock`] restores.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum LockDir {
    /// H-aligned block whose bottom pair must sit side by side.
    Right,
    /// V-aligned block whose right pair must be stacked.
    Up,
}

fn kind(r: &Rectangulation, v: usize) -> VertexType {
    r.vertices[v].kind
}

fn sjump(r: &mut Rectangulation, i: usize, d: Dir, e: usize, w: &mut WorkCounter) {
    local_jump(r, JumpKind::S, i, d, e, w);
}

/// Turns the block of `r_j` into its locked shape by a simple flip between
/// `r_j` and `r_{j+1}` if the next rectangle requires it.
pub fn lock(r: &mut Rectangulation, j: usize, dir: LockDir, w: &mut WorkCounter) {
    use VertexType::*;
    w.tick(1);
    if j >= r.n {
        return;
    }
    match dir {
        LockDir::Right => {
            let (a, b, c) = (r.rects[j].ne, r.rects[j].sw, r.rects[j].se);
            let alpha = r.vertices[a].west;
            let beta = r.vertices[b].east;
            if kind(r, b) != RightT || kind(r, c) != LeftT || head(r, beta) != c {
                return;
            }
            if kind(r, r.rects[j + 1].se) == TopT {
                sjump(r, j + 1, Dir::Right, alpha, w);
            }
        }
        LockDir::Up => {
            let (a, b, c) = (r.rects[j].sw, r.rects[j].ne, r.rects[j].se);
            let alpha = r.vertices[a].north;
            let beta = r.vertices[b].south;
            if kind(r, b) != BottomT || kind(r, c) != TopT || tail(r, beta) != c {
                return;
            }
            if kind(r, r.rects[j + 1].se) == LeftT {
                sjump(r, j + 1, Dir::Left, alpha, w);
            }
        }
    }
}

/// Undoes [`lock`] before `r_j` jumps in direction `d`.
pub fn unlock(r: &mut Rectangulation, j: usize, d: Dir, w: &mut WorkCounter) {
    use VertexType::*;
    w.tick(1);
    if j >= r.n {
        return;
    }
    match d {
        Dir::Right => {
            let (a, b, c) = (r.rects[j].ne, r.rects[j].se, r.rects[j].sw);
            let gamma = r.vertices[c].north;
            if kind(r, a) == BottomT && kind(r, b) == TopT {
                sjump(r, j + 1, Dir::Left, gamma, w);
            }
        }
        Dir::Left => {
            let (a, b, c) = (r.rects[j].sw, r.rects[j].se, r.rects[j].ne);
            let gamma = r.vertices[c].west;
            if kind(r, a) == RightT && kind(r, b) == LeftT {
                sjump(r, j + 1, Dir::Right, gamma, w);
            }
        }
    }
}

/// One step through the children of the glued tree of block-aligned
/// rectangulations: a T-flip or D-flip plus at most three simple flips.
pub fn next_block(r: &mut Rectangulation, req: JumpRequest, w: &mut WorkCounter) -> Move {
    use VertexType::*;
    let JumpRequest { j, d } = req;
    let n = r.n;
    unlock(r, j, d, w);
    let a = r.rects[j].nw;
    let va = r.vertices[a];
    match (d, va.kind) {
        (Dir::Left, BottomT) if kind(r, tail(r, va.south)) == LeftT => {
            let b = tail(r, va.south);
            let g = r.vertices[b].west;
            local_jump(r, JumpKind::TH, j, Dir::Left, g, w);
            let a = r.rects[j].nw;
            let b = tail(r, r.vertices[a].south);
            let c = r.rects[j - 1].sw;
            let g = r.vertices[c].north;
            let c2 = r.rects[j].se;
            if kind(r, b) == TopT && (kind(r, c2) == LeftT || (j == n && r.edges[g].left == 0)) {
                sjump(r, j, Dir::Left, g, w);
            }
            lock(r, j, LockDir::Right, w);
            Move::T
        }
        (Dir::Left, BottomT) => {
            let c = r.rects[j - 1].sw;
            let g = r.vertices[c].north;
            sjump(r, j, Dir::Left, g, w);
            let g = r.vertices[c].north;
            let k = r.edges[g].left;
            let g2 = r.vertices[r.rects[k].sw].north;
            local_jump(r, JumpKind::TV, j, Dir::Left, g2, w);
            let c = r.rects[j - 1].sw;
            let a = head(r, r.vertices[c].north);
            if kind(r, a) == BottomT {
                let g2 = r.vertices[r.rects[j - 2].sw].north;
                sjump(r, j - 1, Dir::Left, g2, w);
            }
            lock(r, j - 1, LockDir::Right, w);
            Move::D
        }
        (Dir::Right, BottomT) => {
            let k = r.edges[va.east].left;
            let g = r.vertices[r.rects[k].ne].west;
            local_jump(r, JumpKind::TH, j, Dir::Right, g, w);
            let a = r.rects[j].nw;
            let b = tail(r, r.vertices[a].south);
            let (beta, g) = (r.vertices[b].south, r.vertices[b].west);
            if beta != 0
                && g != 0
                && kind(r, tail(r, beta)) == TopT
                && kind(r, tail(r, g)) == RightT
            {
                let g2 = r.vertices[a].west;
                sjump(r, j - 1, Dir::Right, g2, w);
            }
            lock(r, j, LockDir::Up, w);
            Move::T
        }
        (Dir::Right, RightT) if kind(r, head(r, va.east)) == TopT => {
            let b = head(r, va.east);
            let g = r.vertices[b].north;
            local_jump(r, JumpKind::TV, j, Dir::Right, g, w);
            let a = r.rects[j].nw;
            let b = head(r, r.vertices[a].east);
            let c = r.rects[j - 1].ne;
            let g = r.vertices[c].west;
            let c2 = r.rects[j].se;
            let e = r.rects[j - 1].nw;
            let base = kind(r, e) == RightT && tail(r, g) == e;
            if kind(r, b) == LeftT && (kind(r, c2) == TopT || (j == n && !base)) {
                sjump(r, j, Dir::Right, g, w);
            }
            lock(r, j, LockDir::Up, w);
            Move::T
        }
        (Dir::Right, RightT) => {
            let c = r.rects[j - 1].ne;
            let g = r.vertices[c].west;
            sjump(r, j, Dir::Right, g, w);
            let g = r.vertices[c].west;
            let k = r.edges[g].left;
            let g2 = r.vertices[r.rects[k].ne].west;
            local_jump(r, JumpKind::TH, j, Dir::Right, g2, w);
            let c = r.rects[j - 1].ne;
            let a = tail(r, r.vertices[c].west);
            if kind(r, a) == RightT {
                let g2 = r.vertices[r.rects[j - 2].ne].west;
                sjump(r, j - 1, Dir::Right, g2, w);
            }
            lock(r, j - 1, LockDir::Up, w);
            Move::D
        }
        (Dir::Left, RightT) => {
            let k = r.edges[va.south].left;
            let g = r.vertices[r.rects[k].sw].north;
            local_jump(r, JumpKind::TV, j, Dir::Left, g, w);
            let a = r.rects[j].nw;
            let b = head(r, r.vertices[a].east);
            let (beta, g) = (r.vertices[b].east, r.vertices[b].north);
            if beta != 0
                && g != 0
                && kind(r, head(r, beta)) == LeftT
                && kind(r, head(r, g)) == BottomT
            {
                let g2 = r.vertices[a].north;
                sjump(r, j - 1, Dir::Left, g2, w);
            }
            lock(r, j, LockDir::Right, w);
            Move::T
        }
        _ => panic!(
            "rectangle {j} has no jump {d:?} from a {:?} corner",
            va.kind
        ),
    }
}
