//! Index-array incidence structure for generic rectangulations.
//!
//! All arrays are 1-based; slot 0 is a sentinel and the value 0 means "absent"
//! (or the outer face for rectangle references).

use std::collections::HashMap;
use std::fmt;

use crate::floorplan::{Floorplan, Sides, Wall, BOTTOM, LEFT, RIGHT, TOP};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Default)]
pub enum VertexType {
    /// ┬: no north edge.
    BottomT,
    /// ├: no west edge.
    RightT,
    /// ┴: no south edge.
    TopT,
    /// ┤: no east edge.
    LeftT,
    #[default]
    Corner,
}

impl VertexType {
    pub fn reflect(self) -> VertexType {
        match self {
            VertexType::BottomT => VertexType::RightT,
            VertexType::RightT => VertexType::BottomT,
            VertexType::TopT => VertexType::LeftT,
            VertexType::LeftT => VertexType::TopT,
            VertexType::Corner => VertexType::Corner,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Default)]
pub enum Orientation {
    /// Left to right.
    #[default]
    Horizontal,
    /// Bottom to top.
    Vertical,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Default)]
pub struct Rect {
    pub ne: usize,
    pub se: usize,
    pub sw: usize,
    pub nw: usize,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Default)]
pub struct Vertex {
    pub north: usize,
    pub east: usize,
    pub south: usize,
    pub west: usize,
    pub kind: VertexType,
}

/// For a horizontal edge `left` is the rectangle above and `right` the one
/// below; for a vertical edge `left` is west and `right` is east.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Default)]
pub struct Edge {
    pub dir: Orientation,
    pub tail: usize,
    pub head: usize,
    pub prev: usize,
    pub next: usize,
    pub left: usize,
    pub right: usize,
    pub wall: usize,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Default)]
pub struct WallEnds {
    pub first: usize,
    pub last: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Rectangulation {
    pub n: usize,
    pub rects: Vec<Rect>,
    pub vertices: Vec<Vertex>,
    pub edges: Vec<Edge>,
    pub walls: Vec<WallEnds>,
}

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum Violation {
    #[error("array sizes do not match n = {n}")]
    Counts { n: usize },
    #[error("edge {0}: {1}")]
    Edge(usize, &'static str),
    #[error("vertex {0}: {1}")]
    Vertex(usize, &'static str),
    #[error("wall {0}: {1}")]
    Wall(usize, &'static str),
    #[error("rectangle {0}: {1}")]
    Rect(usize, &'static str),
    #[error("expected 4 corner vertices, found {0}")]
    Corners(usize),
    #[error("rectangle labels are not a reverse-deletion order")]
    Numbering,
}

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum CoreError {
    #[error("a rectangulation needs at least one rectangle")]
    Empty,
}

impl Rectangulation {
    /// `n` vertical slices, `r_1` leftmost.
    pub fn make_row(n: usize) -> Result<Rectangulation, CoreError> {
        if n == 0 {
            return Err(CoreError::Empty);
        }
        let mut f = Floorplan::single();
        for j in 1..n {
            f = f.insert_at(j + 1).expect("last insertion point");
        }
        Ok(Rectangulation::from_floorplan(&f))
    }

    pub fn single() -> Rectangulation {
        Rectangulation::from_floorplan(&Floorplan::single())
    }

    pub fn vtype(&self, v: usize) -> VertexType {
        self.vertices[v].kind
    }

    pub fn from_floorplan(f: &Floorplan) -> Rectangulation {
        let n = f.n();
        let mut ids: HashMap<(usize, usize), usize> = HashMap::new();
        // corners are keyed by the pair of boundary walls
        for (i, key) in [(LEFT, BOTTOM), (RIGHT, BOTTOM), (LEFT, TOP), (RIGHT, TOP)]
            .iter()
            .enumerate()
        {
            ids.insert(*key, i + 1);
        }
        let mut next_id = 5;
        for w in 4..f.walls.len() {
            for end in [0, 1] {
                ids.insert((w, 100_000 + end), next_id);
                next_id += 1;
            }
        }
        let corner = |a: usize, b: usize| {
            let (v, h) = if f.walls[a].vertical { (a, b) } else { (b, a) };
            ids[&(v, h)]
        };
        let vid = |u: usize, k: usize| -> usize {
            let js = &f.walls[u].joints;
            let last = js.len() - 1;
            if k == 0 || k == last {
                if Floorplan::is_boundary(u) && Floorplan::is_boundary(js[k]) {
                    corner(u, js[k])
                } else if k == 0 {
                    ids[&(u, 100_000)]
                } else {
                    ids[&(u, 100_001)]
                }
            } else {
                let v = js[k];
                if f.walls[v].joints[0] == u {
                    ids[&(v, 100_000)]
                } else {
                    ids[&(v, 100_001)]
                }
            }
        };
        let lv = f.levels();
        let mut vertices = vec![Vertex::default(); 2 * n + 3];
        let mut edges = vec![Edge::default(); 3 * n + 2];
        let mut walls = vec![WallEnds::default(); n + 4];
        let mut eid = 1;
        for (u, w) in f.walls.iter().enumerate() {
            let js = &w.joints;
            let last = js.len() - 1;
            walls[u + 1] = WallEnds {
                first: vid(u, 0),
                last: vid(u, last),
            };
            let start = eid;
            for k in 0..last {
                let (tail, head) = (vid(u, k), vid(u, k + 1));
                let (lo, hi) = (lv[js[k]], lv[js[k + 1]]);
                let side = |pick: &dyn Fn(&Sides) -> (usize, usize, usize)| {
                    f.rects
                        .iter()
                        .position(|s| {
                            let (wall, a, b) = pick(s);
                            wall == u && lv[a] <= lo && hi <= lv[b]
                        })
                        .map_or(0, |i| i + 1)
                };
                let (dir, left, right) = if w.vertical {
                    vertices[tail].north = eid;
                    vertices[head].south = eid;
                    (
                        Orientation::Vertical,
                        side(&|s| (s.right, s.bottom, s.top)),
                        side(&|s| (s.left, s.bottom, s.top)),
                    )
                } else {
                    vertices[tail].east = eid;
                    vertices[head].west = eid;
                    (
                        Orientation::Horizontal,
                        side(&|s| (s.bottom, s.left, s.right)),
                        side(&|s| (s.top, s.left, s.right)),
                    )
                };
                edges[eid] = Edge {
                    dir,
                    tail,
                    head,
                    prev: if k == 0 { 0 } else { eid - 1 },
                    next: if k + 1 == last { 0 } else { eid + 1 },
                    left,
                    right,
                    wall: u + 1,
                };
                eid += 1;
            }
            debug_assert!(eid > start);
        }
        for v in vertices.iter_mut().skip(1) {
            v.kind = kind_of(v);
        }
        let meet = |a: usize, b: usize, a_end: usize, b_end: usize| {
            // vertex where wall a (at end a_end) meets wall b (at end b_end)
            let ja = &f.walls[a].joints;
            let ia = if a_end == 0 { 0 } else { ja.len() - 1 };
            if ja[ia] == b {
                vid(a, ia)
            } else {
                let jb = &f.walls[b].joints;
                let ib = if b_end == 0 { 0 } else { jb.len() - 1 };
                vid(b, ib)
            }
        };
        let mut rects = vec![Rect::default(); n + 1];
        for (i, s) in f.rects.iter().enumerate() {
            rects[i + 1] = Rect {
                nw: meet(s.left, s.top, 1, 0),
                ne: meet(s.right, s.top, 1, 1),
                se: meet(s.right, s.bottom, 0, 1),
                sw: meet(s.left, s.bottom, 0, 0),
            };
        }
        Rectangulation {
            n,
            rects,
            vertices,
            edges,
            walls,
        }
    }

    /// Converts to the wall model. Panics on structurally broken input; call
    /// `validate` first when the input is untrusted.
    pub fn to_floorplan(&self) -> Floorplan {
        let nw = self.walls.len() - 1;
        let mut map = vec![usize::MAX; nw + 1];
        let mut next = 4;
        for w in 1..=nw {
            let first = self.walls[w].first;
            let last = self.walls[w].last;
            let boundary =
                self.vtype(first) == VertexType::Corner && self.vtype(last) == VertexType::Corner;
            if boundary {
                let v = &self.vertices[first];
                let e = &self.edges[if v.east != 0 && self.edges[v.east].wall == w {
                    v.east
                } else {
                    v.north
                }];
                map[w] = match (e.dir, e.left == 0) {
                    (Orientation::Vertical, true) => LEFT,
                    (Orientation::Vertical, false) => RIGHT,
                    (Orientation::Horizontal, true) => TOP,
                    (Orientation::Horizontal, false) => BOTTOM,
                };
            } else {
                map[w] = next;
                next += 1;
            }
        }
        let mut walls = vec![
            Wall {
                vertical: false,
                joints: vec![]
            };
            nw
        ];
        for w in 1..=nw {
            let mut v = self.walls[w].first;
            let first_edge = {
                let x = &self.vertices[v];
                if x.east != 0 && self.edges[x.east].wall == w {
                    x.east
                } else {
                    x.north
                }
            };
            let vertical = self.edges[first_edge].dir == Orientation::Vertical;
            let perp = |v: usize| {
                let x = &self.vertices[v];
                let e = if vertical {
                    if x.east != 0 {
                        x.east
                    } else {
                        x.west
                    }
                } else if x.north != 0 {
                    x.north
                } else {
                    x.south
                };
                map[self.edges[e].wall]
            };
            let mut joints = vec![perp(v)];
            let mut e = first_edge;
            while e != 0 {
                v = self.edges[e].head;
                joints.push(perp(v));
                e = self.edges[e].next;
            }
            walls[map[w]] = Wall { vertical, joints };
        }
        let rects = self.rects[1..]
            .iter()
            .map(|r| {
                let nwv = &self.vertices[r.nw];
                let sev = &self.vertices[r.se];
                Sides {
                    left: map[self.edges[nwv.south].wall],
                    top: map[self.edges[nwv.east].wall],
                    right: map[self.edges[sev.north].wall],
                    bottom: map[self.edges[sev.west].wall],
                }
            })
            .collect();
        Floorplan { walls, rects }
    }

    pub fn canonical_code(&self) -> Vec<usize> {
        self.to_floorplan().code().expect("valid rectangulation")
    }

    pub fn from_code(code: &[usize]) -> Option<Rectangulation> {
        Floorplan::from_code(code).map(|f| Rectangulation::from_floorplan(&f))
    }

    pub fn reflect(&self) -> Rectangulation {
        Rectangulation::from_floorplan(&self.to_floorplan().reflect())
    }

    pub fn validate(&self) -> Result<(), Violation> {
        let n = self.n;
        if n == 0
            || self.rects.len() != n + 1
            || self.vertices.len() != 2 * n + 3
            || self.edges.len() != 3 * n + 2
            || self.walls.len() != n + 4
        {
            return Err(Violation::Counts { n });
        }
        let nv = self.vertices.len();
        let nwalls = self.walls.len();
        let ne = self.edges.len();
        let mut owner = vec![0usize; ne];
        for (w, ends) in self.walls.iter().enumerate().skip(1) {
            let bad = |m| Err(Violation::Wall(w, m));
            if ends.first == 0 || ends.first >= nv || ends.last == 0 || ends.last >= nv {
                return bad("end vertex out of range");
            }
            let v = &self.vertices[ends.first];
            let walk = |mut e: usize| -> Option<Vec<usize>> {
                let mut chain = Vec::new();
                while e != 0 {
                    if e >= ne || chain.len() > ne {
                        return None;
                    }
                    chain.push(e);
                    if self.edges[e].next == 0 {
                        return (self.edges[e].head == ends.last).then_some(chain);
                    }
                    e = self.edges[e].next;
                }
                None
            };
            let chain = [v.east, v.north]
                .into_iter()
                .filter(|&e| e != 0 && e < ne && self.edges[e].prev == 0)
                .filter_map(walk)
                .find(|c| c.iter().all(|&e| owner[e] == 0));
            let Some(chain) = chain else {
                return bad("no edge chain from first to last vertex");
            };
            for e in chain {
                owner[e] = w;
            }
        }
        for (i, e) in self.edges.iter().enumerate().skip(1) {
            let bad = |m| Err(Violation::Edge(i, m));
            if owner[i] == 0 {
                return bad("edge on no wall chain");
            }
            if e.wall != owner[i] {
                return bad("wall link does not match its chain");
            }
            if e.tail == 0 || e.head == 0 || e.tail >= nv || e.head >= nv || e.tail == e.head {
                return bad("endpoint out of range");
            }
            if e.wall == 0 || e.wall >= nwalls {
                return bad("wall out of range");
            }
            if e.left > n || e.right > n || (e.left == 0 && e.right == 0) {
                return bad("side rectangle out of range");
            }
            let (t, h) = (&self.vertices[e.tail], &self.vertices[e.head]);
            let ok = match e.dir {
                Orientation::Horizontal => t.east == i && h.west == i,
                Orientation::Vertical => t.north == i && h.south == i,
            };
            if !ok {
                return bad("endpoint slot does not point back");
            }
            for (link, back) in [(e.prev, true), (e.next, false)] {
                if link == 0 {
                    let w = &self.walls[e.wall];
                    if (back && w.first != e.tail) || (!back && w.last != e.head) {
                        return bad("chain end is not the wall end");
                    }
                    continue;
                }
                if link >= self.edges.len() {
                    return bad("chain link out of range");
                }
                let o = &self.edges[link];
                let joined = if back {
                    o.next == i && o.head == e.tail
                } else {
                    o.prev == i && o.tail == e.head
                };
                if !joined || o.dir != e.dir {
                    return bad("chain link inconsistent");
                }
            }
        }
        let mut corners = 0;
        for (i, v) in self.vertices.iter().enumerate().skip(1) {
            let bad = |m| Err(Violation::Vertex(i, m));
            for (slot, is_tail, dir) in [
                (v.north, true, Orientation::Vertical),
                (v.south, false, Orientation::Vertical),
                (v.east, true, Orientation::Horizontal),
                (v.west, false, Orientation::Horizontal),
            ] {
                if slot == 0 {
                    continue;
                }
                if slot >= self.edges.len() {
                    return bad("edge slot out of range");
                }
                let e = &self.edges[slot];
                let end = if is_tail { e.tail } else { e.head };
                if e.dir != dir || end != i {
                    return bad("edge slot does not point back");
                }
            }
            let count = [v.north, v.east, v.south, v.west]
                .iter()
                .filter(|&&s| s != 0)
                .count();
            if count < 2 || (count == 2 && kind_of(v) != VertexType::Corner) {
                return bad("degenerate vertex");
            }
            if count == 2 {
                corners += 1;
            }
            if v.kind != kind_of(v) {
                return bad("type does not match incident edges");
            }
        }
        if corners != 4 {
            return Err(Violation::Corners(corners));
        }
        for (i, r) in self.rects.iter().enumerate().skip(1) {
            let bad = |m| Err(Violation::Rect(i, m));
            if [r.ne, r.se, r.sw, r.nw].iter().any(|&c| c == 0 || c >= nv) {
                return bad("corner out of range");
            }
            let (nw, ne, se, sw) = (
                &self.vertices[r.nw],
                &self.vertices[r.ne],
                &self.vertices[r.se],
                &self.vertices[r.sw],
            );
            let checks = [
                (nw.east, false),
                (nw.south, false),
                (ne.west, false),
                (ne.south, true),
                (se.north, true),
                (se.west, true),
                (sw.north, false),
                (sw.east, true),
            ];
            for (e, use_left) in checks {
                if e == 0 {
                    return bad("missing corner edge");
                }
                let edge = &self.edges[e];
                let side = if use_left { edge.left } else { edge.right };
                // north-side of a horizontal edge is `left`; west-side of a vertical edge is `left`
                if side != i {
                    return bad("corner edge does not border the rectangle");
                }
            }
        }
        let code = self.to_floorplan().code();
        if code.is_none() {
            return Err(Violation::Numbering);
        }
        Ok(())
    }
}

fn kind_of(v: &Vertex) -> VertexType {
    match (v.north != 0, v.east != 0, v.south != 0, v.west != 0) {
        (false, true, true, true) => VertexType::BottomT,
        (true, true, true, false) => VertexType::RightT,
        (true, true, false, true) => VertexType::TopT,
        (true, false, true, true) => VertexType::LeftT,
        _ => VertexType::Corner,
    }
}

impl fmt::Display for Rectangulation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "n = {}", self.n)?;
        for (i, r) in self.rects.iter().enumerate().skip(1) {
            writeln!(f, "r{i}: ne={} se={} sw={} nw={}", r.ne, r.se, r.sw, r.nw)?;
        }
        for (i, v) in self.vertices.iter().enumerate().skip(1) {
            writeln!(
                f,
                "v{i}: N={} E={} S={} W={} {:?}",
                v.north, v.east, v.south, v.west, v.kind
            )?;
        }
        for (i, e) in self.edges.iter().enumerate().skip(1) {
            writeln!(
                f,
                "e{i}: {:?} {}->{} prev={} next={} left={} right={} wall={}",
                e.dir, e.tail, e.head, e.prev, e.next, e.left, e.right, e.wall
            )?;
        }
        for (i, w) in self.walls.iter().enumerate().skip(1) {
            writeln!(f, "w{i}: first={} last={}", w.first, w.last)?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn row_code() {
        assert_eq!(
            Rectangulation::make_row(4).unwrap().canonical_code(),
            vec![2, 3, 4]
        );
        assert!(Rectangulation::make_row(0).is_err());
    }

    #[test]
    fn single_has_four_corners() {
        let r = Rectangulation::single();
        assert!(r.validate().is_ok());
        assert!(r.vertices[1..].iter().all(|v| v.kind == VertexType::Corner));
        assert_eq!(r.edges.len() - 1, 4);
    }

    #[test]
    fn corrupted_wall_link_is_reported() {
        let mut r = Rectangulation::make_row(5).unwrap();
        r.edges[7].wall = if r.edges[7].wall == 1 { 2 } else { 1 };
        match r.validate() {
            Err(Violation::Edge(7, _)) => {}
            other => panic!("unexpected {other:?}"),
        }
    }
}
