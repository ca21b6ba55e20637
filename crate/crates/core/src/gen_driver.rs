//! Generation drivers: the memoryless generator on the incidence structure
//! and the greedy reference on explicit code sets.

use std::collections::{BTreeMap, HashSet};

use crate::floorplan::Floorplan;
use crate::oracles::{
    next_block, next_diagonal, next_generic, next_pattern_avoiding, BaseOracle, JumpRequest, Move,
};
use crate::patterns::RectPattern;
use crate::rect_core::{Rectangulation, VertexType};
use crate::rect_edit::{Dir, WorkCounter};
use crate::rect_tree::{Base, ClassSpec};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GenState {
    pub r: Rectangulation,
    /// `o[j]`, 1-based.
    pub o: Vec<Dir>,
    /// `s[j]`, 1-based.
    pub s: Vec<usize>,
}

impl GenState {
    pub fn new(n: usize) -> GenState {
        GenState {
            r: Rectangulation::make_row(n).expect("n >= 1"),
            o: vec![Dir::Left; n + 1],
            s: (0..=n).collect(),
        }
    }
}

/// What happened between the previous visit and this one.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Step {
    pub j: usize,
    pub d: Dir,
    /// Work units spent on the jump and on the bookkeeping after it.
    pub work: u64,
    /// Local W-, S- and T-jumps the step was made of.
    pub local: [u64; 3],
    /// The oracle's tag for the step; `None` when a pattern oracle chained
    /// several base moves.
    pub tag: Option<Move>,
}

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum DriverError {
    #[error("unsupported class: {0}")]
    Unsupported(String),
    #[error("n must be at least 1")]
    Empty,
}

/// `R^[j]` has a rectangle along its whole bottom side.
pub fn bottom_based(r: &Rectangulation, j: usize) -> bool {
    let v = r.vertices[r.rects[j].nw];
    j == 1 || (v.kind == VertexType::RightT && r.edges[v.north].left == 0)
}

/// `R^[j]` has a rectangle along its whole right side.
pub fn right_based(r: &Rectangulation, j: usize) -> bool {
    let v = r.vertices[r.rects[j].nw];
    j == 1 || (v.kind == VertexType::BottomT && r.edges[v.east].left == 0)
}

/// `R^[j]` is bottom-based, or becomes so by flipping the wall between
/// `r_{j-1}` and `r_j` when the two sit side by side.
pub fn bottom_based_up_to_flip(r: &Rectangulation, j: usize) -> bool {
    if bottom_based(r, j) {
        return true;
    }
    let (p, q) = (r.rects[j - 1], r.rects[j]);
    let v = r.vertices[p.nw];
    q.nw == p.ne && q.sw == p.se && v.kind == VertexType::RightT && r.edges[v.north].left == 0
}

/// `R^[j]` is right-based, or becomes so by flipping the wall between
/// `r_{j-1}` and `r_j` when the two are stacked.
pub fn right_based_up_to_flip(r: &Rectangulation, j: usize) -> bool {
    if right_based(r, j) {
        return true;
    }
    let (p, q) = (r.rects[j - 1], r.rects[j]);
    let v = r.vertices[p.nw];
    q.nw == p.sw && q.ne == p.se && v.kind == VertexType::BottomT && r.edges[v.east].left == 0
}

pub fn check_spec(spec: &ClassSpec) -> Result<(), DriverError> {
    if spec.base == Base::BlockAligned
        && spec
            .avoid
            .iter()
            .any(|p| !matches!(p, RectPattern::P1 | RectPattern::P2))
    {
        return Err(DriverError::Unsupported(
            "block-aligned classes only support avoiding P1 and P2".into(),
        ));
    }
    Ok(())
}

/// Runs the memoryless generator with the oracle for `spec` and calls `visit` once per
/// member of the class. Returns the number of visits.
pub fn run_memoryless<F>(spec: &ClassSpec, n: usize, mut visit: F) -> Result<u64, DriverError>
where
    F: FnMut(&GenState, Option<Step>),
{
    check_spec(spec)?;
    if n == 0 {
        return Err(DriverError::Empty);
    }
    if spec.base == Base::BlockAligned && n <= 2 {
        // the glued tree starts at n = 3; below that the class is listed directly
        let g = GenState {
            r: Rectangulation::from_code(&vec![1; n - 1]).expect("valid code"),
            o: vec![Dir::Left; n + 1],
            s: vec![1; n + 1],
        };
        visit(&g, None);
        return Ok(1);
    }
    let avoid: Vec<RectPattern> = spec
        .avoid
        .iter()
        .copied()
        .filter(|p| {
            !(spec.base == Base::Diagonal && matches!(p, RectPattern::P3 | RectPattern::P4))
        })
        .collect();
    let base = match spec.base {
        Base::Generic => BaseOracle::Generic,
        Base::Diagonal => BaseOracle::Diagonal,
        Base::BlockAligned => BaseOracle::Block,
    };
    let mut g = GenState::new(n);
    if base == BaseOracle::Block {
        // B_2 has a single member, so r_2 never moves
        g.s[2] = 1;
    }
    let mut count = 0;
    let mut last = None;
    loop {
        visit(&g, last);
        count += 1;
        let j = g.s[n];
        if j == 1 {
            return Ok(count);
        }
        let d = g.o[j];
        let req = JumpRequest { j, d };
        let mut w = WorkCounter::new();
        let tag = if avoid.is_empty() {
            Some(match base {
                BaseOracle::Generic => next_generic(&mut g.r, req, &mut w),
                BaseOracle::Diagonal => next_diagonal(&mut g.r, req, &mut w),
                BaseOracle::Block => next_block(&mut g.r, req, &mut w),
            })
        } else {
            next_pattern_avoiding(&mut g.r, req, base, &avoid, true, &mut w);
            None
        };
        g.s[n] = n;
        let turn = match (d, base) {
            (Dir::Left, BaseOracle::Block) => bottom_based_up_to_flip(&g.r, j),
            (Dir::Right, BaseOracle::Block) => right_based_up_to_flip(&g.r, j),
            (Dir::Left, _) => bottom_based(&g.r, j),
            (Dir::Right, _) => right_based(&g.r, j),
        };
        if turn {
            g.o[j] = d.flip();
            g.s[j] = g.s[j - 1];
            g.s[j - 1] = j - 1;
        }
        w.tick(1);
        last = Some(Step {
            j,
            d,
            work: w.ops,
            local: [w.w_jumps, w.s_jumps, w.t_jumps],
            tag,
        });
    }
}

/// Convenience wrapper collecting canonical codes.
pub fn memoryless_codes(spec: &ClassSpec, n: usize) -> Result<Vec<Vec<usize>>, DriverError> {
    let mut out = Vec::new();
    run_memoryless(spec, n, |g, _| out.push(g.r.canonical_code()))?;
    Ok(out)
}

fn nu(prefix: &[usize]) -> usize {
    Floorplan::from_code(prefix)
        .expect("valid code")
        .insertion_points()
        .len()
}

/// Moves rectangle `j` of the rectangulation with code `code` to insertion
/// point `k`, keeping every higher rectangle at the first or last insertion
/// point of its parent. `None` if some higher rectangle sits elsewhere or
/// `k` is out of range.
pub fn code_jump(code: &[usize], j: usize, k: usize) -> Option<Vec<usize>> {
    if j < 2 || j > code.len() + 1 {
        return None;
    }
    let mut out = code[..j - 2].to_vec();
    if k == 0 || k > nu(&out) {
        return None;
    }
    out.push(k);
    for i in j..=code.len() {
        let old = code[i - 1];
        let new = if old == 1 {
            1
        } else if old == nu(&code[..i - 1]) {
            nu(&out)
        } else {
            return None;
        };
        out.push(new);
    }
    Some(out)
}

/// A jump between two codes: rectangle `j` moves from insertion point
/// `from` to `to` of `R^[j-1]`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CodeJump {
    pub j: usize,
    pub from: usize,
    pub to: usize,
}

impl CodeJump {
    pub fn dir(&self) -> Dir {
        if self.to > self.from {
            Dir::Right
        } else {
            Dir::Left
        }
    }

    pub fn steps(&self) -> usize {
        self.from.abs_diff(self.to)
    }
}

pub fn jump_between(a: &[usize], b: &[usize]) -> Option<CodeJump> {
    if a.len() != b.len() {
        return None;
    }
    let i = a.iter().zip(b).position(|(x, y)| x != y)?;
    let j = i + 2;
    (code_jump(a, j, b[i]).as_deref() == Some(b)).then_some(CodeJump {
        j,
        from: a[i],
        to: b[i],
    })
}

fn minimal_target(
    set: &HashSet<Vec<usize>>,
    code: &[usize],
    j: usize,
    d: Dir,
) -> Option<Vec<usize>> {
    let cur = code[j - 2];
    let limit = nu(&code[..j - 2]);
    let range: Box<dyn Iterator<Item = usize>> = match d {
        Dir::Right => Box::new(cur + 1..=limit),
        Dir::Left => Box::new((1..cur).rev()),
    };
    for k in range {
        let c = code_jump(code, j, k)?;
        if set.contains(&c) {
            return Some(c);
        }
    }
    None
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GreedyStop {
    /// Every member was visited.
    Complete,
    /// No minimal jump leads to an unvisited member.
    Stuck,
    /// Minimal jumps in both directions lead to unvisited members.
    Ambiguous,
}

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum GreedyError {
    #[error("start is not a member of the class")]
    StartNotInSet,
}

/// Greedy reference: repeatedly jump the highest rectangle that has a minimal jump
/// to an unvisited member.
pub fn run_greedy_reference(
    set: &HashSet<Vec<usize>>,
    start: &[usize],
) -> Result<(Vec<Vec<usize>>, GreedyStop), GreedyError> {
    if !set.contains(start) {
        return Err(GreedyError::StartNotInSet);
    }
    let mut seen: HashSet<Vec<usize>> = HashSet::from([start.to_vec()]);
    let mut order = vec![start.to_vec()];
    let n = start.len() + 1;
    'outer: while order.len() < set.len() {
        let cur = order.last().unwrap().clone();
        for j in (2..=n).rev() {
            let fresh: Vec<Vec<usize>> = [Dir::Left, Dir::Right]
                .into_iter()
                .filter_map(|d| minimal_target(set, &cur, j, d))
                .filter(|c| !seen.contains(c))
                .collect();
            match fresh.len() {
                0 => continue,
                1 => {
                    seen.insert(fresh[0].clone());
                    order.push(fresh[0].clone());
                    continue 'outer;
                }
                _ => return Ok((order, GreedyStop::Ambiguous)),
            }
        }
        return Ok((order, GreedyStop::Stuck));
    }
    Ok((order, GreedyStop::Complete))
}

/// Flip type of a jump, read off the insertion points of the parent.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Flip {
    /// Both points on one wall.
    W,
    /// Last vertical wall to first horizontal wall.
    S,
    /// Neighbouring walls of the same orientation.
    T,
    /// Anything else: a composition of several flips.
    Compound,
}

pub fn classify(code: &[usize], jump: CodeJump) -> Flip {
    let parent = Floorplan::from_code(&code[..jump.j - 2]).expect("valid code");
    let pts = parent.insertion_points();
    let (p, q) = (pts[jump.from - 1], pts[jump.to - 1]);
    let walls = |vertical: bool| {
        let mut ws: Vec<usize> = pts
            .iter()
            .filter(|x| x.vertical == vertical)
            .map(|x| x.wall)
            .collect();
        ws.dedup();
        ws
    };
    let rank =
        |x: &crate::floorplan::Slot| walls(x.vertical).iter().position(|&w| w == x.wall).unwrap();
    if p.vertical == q.vertical {
        if p.wall == q.wall {
            Flip::W
        } else if rank(&p).abs_diff(rank(&q)) == 1 {
            Flip::T
        } else {
            Flip::Compound
        }
    } else {
        let (v, h) = if p.vertical { (p, q) } else { (q, p) };
        if rank(&v) + 1 == walls(true).len() && rank(&h) == 0 {
            Flip::S
        } else {
            Flip::Compound
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct GrayReport {
    pub visits: usize,
    /// Number of distinct codes among the visits.
    pub distinct: usize,
    /// Every consecutive pair differs in a jump of one rectangle.
    pub single_jumps: bool,
    /// Every jump is minimal with respect to the class; `None` if not checked.
    pub minimal: Option<bool>,
    /// First and last visit differ in a minimal jump.
    pub cyclic: bool,
    pub flips: BTreeMap<Flip, usize>,
}

/// Checks a listing of codes. `class` enables the minimality checks.
pub fn check_gray(visits: &[Vec<usize>], class: Option<&HashSet<Vec<usize>>>) -> GrayReport {
    let mut rep = GrayReport {
        visits: visits.len(),
        distinct: visits.iter().collect::<HashSet<_>>().len(),
        single_jumps: true,
        minimal: class.map(|_| true),
        ..Default::default()
    };
    let is_minimal = |a: &[usize], jp: CodeJump, set: &HashSet<Vec<usize>>| {
        minimal_target(set, a, jp.j, jp.dir()).as_deref() == code_jump(a, jp.j, jp.to).as_deref()
    };
    for pair in visits.windows(2) {
        match jump_between(&pair[0], &pair[1]) {
            Some(jp) => {
                *rep.flips.entry(classify(&pair[0], jp)).or_default() += 1;
                if let Some(set) = class {
                    if !is_minimal(&pair[0], jp, set) {
                        rep.minimal = Some(false);
                    }
                }
            }
            None => rep.single_jumps = false,
        }
    }
    if visits.len() >= 2 {
        let (a, b) = (&visits[visits.len() - 1], &visits[0]);
        rep.cyclic = match jump_between(a, b) {
            Some(jp) => class.is_none_or(|set| is_minimal(a, jp, set)),
            None => false,
        };
    }
    rep
}
