//! Insertion points, parent and child moves, and brute-force class
//! enumeration over the tree of rectangulations.

use std::collections::BTreeSet;

use crate::block::is_block_aligned_floorplan;
use crate::floorplan::Floorplan;
pub use crate::patterns::RectPattern;
use crate::rect_core::Rectangulation;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Base {
    Generic,
    Diagonal,
    BlockAligned,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ClassSpec {
    pub base: Base,
    /// Sorted, without duplicates.
    pub avoid: Vec<RectPattern>,
}

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum SpecError {
    #[error("block-aligned classes may only avoid the windmills P1 and P2, got P{0}")]
    BlockPattern(usize),
}

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum TreeError {
    #[error("the single rectangle has no parent")]
    NoParent,
    #[error("insertion index {i} out of range 1..={nu}")]
    BadIndex { i: usize, nu: usize },
    #[error("the last rectangle is not in the bottom-right corner")]
    NotInCorner,
}

impl ClassSpec {
    pub fn new(base: Base, avoid: &[RectPattern]) -> Result<ClassSpec, SpecError> {
        let mut avoid = avoid.to_vec();
        avoid.sort();
        avoid.dedup();
        if base == Base::BlockAligned {
            if let Some(p) = avoid
                .iter()
                .find(|p| !matches!(p, RectPattern::P1 | RectPattern::P2))
            {
                return Err(SpecError::BlockPattern(p.number()));
            }
        }
        Ok(ClassSpec { base, avoid })
    }

    pub fn generic() -> ClassSpec {
        ClassSpec {
            base: Base::Generic,
            avoid: vec![],
        }
    }

    pub fn diagonal() -> ClassSpec {
        ClassSpec {
            base: Base::Diagonal,
            avoid: vec![],
        }
    }

    pub fn block_aligned() -> ClassSpec {
        ClassSpec {
            base: Base::BlockAligned,
            avoid: vec![],
        }
    }

    /// Closed under reflection, so the Gray code is cyclic.
    pub fn is_symmetric(&self) -> bool {
        self.avoid.iter().all(|p| self.avoid.contains(&p.mirror()))
    }

    /// Membership of a single floorplan, checked from the definitions.
    pub fn admits(&self, f: &Floorplan) -> bool {
        let base_ok = match self.base {
            Base::Generic => true,
            Base::Diagonal => {
                !crate::patterns::contains(f, RectPattern::P3)
                    && !crate::patterns::contains(f, RectPattern::P4)
            }
            Base::BlockAligned => is_block_aligned_floorplan(f),
        };
        base_ok && self.avoid.iter().all(|&p| !crate::patterns::contains(f, p))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum PointKind {
    Vertical,
    Horizontal,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct InsertionPoint {
    pub kind: PointKind,
    /// The edge carrying the point.
    pub edge: usize,
    /// 1-based group number within the vertical or the horizontal points.
    pub group: usize,
}

/// `I(R)` by walking the bottom boundary left to right, then the right
/// boundary bottom to top.
pub fn insertion_points(r: &Rectangulation) -> Vec<InsertionPoint> {
    let mut out = Vec::new();
    let corner = |north: bool, east: bool| {
        (1..r.vertices.len())
            .find(|&v| {
                let x = &r.vertices[v];
                (x.north != 0) == north
                    && (x.east != 0) == east
                    && (x.south != 0) != north
                    && (x.west != 0) != east
            })
            .expect("corner vertex")
    };
    let bl = corner(true, true);
    let mut v = bl;
    let mut group = 0;
    while r.vertices[v].east != 0 {
        let k = r.edges[r.vertices[v].east].left;
        group += 1;
        let (sw, nw) = (r.rects[k].sw, r.rects[k].nw);
        let mut u = sw;
        while u != nw {
            let e = r.vertices[u].north;
            out.push(InsertionPoint {
                kind: PointKind::Vertical,
                edge: e,
                group,
            });
            u = r.edges[e].head;
        }
        v = r.rects[k].se;
    }
    let mut group = 0;
    while r.vertices[v].north != 0 {
        let k = r.edges[r.vertices[v].north].left;
        group += 1;
        let (nw, ne) = (r.rects[k].nw, r.rects[k].ne);
        let mut u = nw;
        while u != ne {
            let e = r.vertices[u].east;
            out.push(InsertionPoint {
                kind: PointKind::Horizontal,
                edge: e,
                group,
            });
            u = r.edges[e].head;
        }
        v = ne;
    }
    out
}

pub fn delete(r: &Rectangulation) -> Result<Rectangulation, TreeError> {
    if r.n < 2 {
        return Err(TreeError::NoParent);
    }
    let (p, _) = r.to_floorplan().delete().ok_or(TreeError::NotInCorner)?;
    Ok(Rectangulation::from_floorplan(&p))
}

pub fn insert_at(r: &Rectangulation, i: usize) -> Result<Rectangulation, TreeError> {
    let f = r.to_floorplan();
    let nu = f.insertion_points().len();
    f.insert_at(i)
        .map(|c| Rectangulation::from_floorplan(&c))
        .ok_or(TreeError::BadIndex { i, nu })
}

pub fn contains_pattern_full(r: &Rectangulation, p: RectPattern) -> bool {
    crate::patterns::contains(&r.to_floorplan(), p)
}

/// Levels `1..=n` of the class, each as a set of codes. Members at level `k`
/// are the admitted children of members at level `k - 1`.
pub fn enumerate_levels(spec: &ClassSpec, n: usize) -> Vec<BTreeSet<Vec<usize>>> {
    let mut levels = Vec::new();
    let mut cur = vec![Floorplan::single()];
    levels.push(BTreeSet::from([vec![]]));
    for _ in 1..n {
        let mut next = Vec::new();
        let mut codes = BTreeSet::new();
        for f in &cur {
            for i in 1..=f.insertion_points().len() {
                let c = f.insert_at(i).expect("index in range");
                if spec.admits(&c) && codes.insert(c.code().expect("inserted labelling")) {
                    next.push(c);
                }
            }
        }
        levels.push(codes);
        cur = next;
    }
    levels
}

pub fn enumerate_brute(spec: &ClassSpec, n: usize) -> BTreeSet<Vec<usize>> {
    if n == 0 {
        return BTreeSet::new();
    }
    if spec.base == Base::BlockAligned {
        // block-aligned parents need not be block-aligned: filter the
        // diagonal level instead
        let outer = ClassSpec {
            base: Base::Diagonal,
            avoid: spec.avoid.clone(),
        };
        return enumerate_brute(&outer, n)
            .into_iter()
            .filter(|c| is_block_aligned_floorplan(&Floorplan::from_code(c).expect("valid code")))
            .collect();
    }
    enumerate_levels(spec, n).pop().expect("n >= 1")
}

/// Checks the zigzag conditions on `levels[k]` = codes with `k + 1`
/// rectangles: every member's parent is a member, and the first and last
/// child of every member below the top level are members.
pub fn is_zigzag(levels: &[BTreeSet<Vec<usize>>]) -> bool {
    for (k, level) in levels.iter().enumerate() {
        for code in level {
            if k > 0 && !levels[k - 1].contains(&code[..code.len() - 1]) {
                return false;
            }
            if k + 1 < levels.len() {
                let f = Floorplan::from_code(code).expect("valid code");
                let nu = f.insertion_points().len();
                for i in [1, nu] {
                    let mut c = code.clone();
                    c.push(i);
                    if !levels[k + 1].contains(&c) {
                        return false;
                    }
                }
            }
        }
    }
    true
}
