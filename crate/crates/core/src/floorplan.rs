//! Wall/joint model of a generic rectangulation.
//!
//! Every wall (the four boundary sides included) stores the ordered list of
//! perpendicular walls that touch it: bottom to top for vertical walls, left
//! to right for horizontal ones. The first and last entries are the walls it
//! ends on. Rectangles store their four side walls. This model is slower than
//! the incidence structure in `rect_core` but easy to get right, so it serves
//! as the reference for insertion, deletion, codes and pattern tests.

use std::collections::HashMap;

pub const LEFT: usize = 0;
pub const RIGHT: usize = 1;
pub const BOTTOM: usize = 2;
pub const TOP: usize = 3;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Wall {
    pub vertical: bool,
    pub joints: Vec<usize>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Sides {
    pub left: usize,
    pub right: usize,
    pub bottom: usize,
    pub top: usize,
}

/// An insertion point: the edge of `wall` between `joints[pos]` and `joints[pos + 1]`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Slot {
    pub vertical: bool,
    pub wall: usize,
    pub pos: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Floorplan {
    pub walls: Vec<Wall>,
    /// `rects[i]` is rectangle `i + 1`.
    pub rects: Vec<Sides>,
}

/// Shape of a joint as seen from the wall carrying it.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Joint {
    /// Horizontal wall leaving a vertical wall to the east.
    East,
    /// Horizontal wall arriving at a vertical wall from the west.
    West,
    /// Vertical wall leaving a horizontal wall to the north.
    North,
    /// Vertical wall arriving at a horizontal wall from the south.
    South,
}

impl Floorplan {
    pub fn single() -> Self {
        let walls = vec![
            Wall {
                vertical: true,
                joints: vec![BOTTOM, TOP],
            },
            Wall {
                vertical: true,
                joints: vec![BOTTOM, TOP],
            },
            Wall {
                vertical: false,
                joints: vec![LEFT, RIGHT],
            },
            Wall {
                vertical: false,
                joints: vec![LEFT, RIGHT],
            },
        ];
        let rects = vec![Sides {
            left: LEFT,
            right: RIGHT,
            bottom: BOTTOM,
            top: TOP,
        }];
        Floorplan { walls, rects }
    }

    pub fn n(&self) -> usize {
        self.rects.len()
    }

    pub fn is_boundary(w: usize) -> bool {
        w < 4
    }

    fn index_in(&self, wall: usize, other: usize) -> usize {
        self.walls[wall]
            .joints
            .iter()
            .position(|&x| x == other)
            .expect("joint present")
    }

    /// How the interior joint `other` meets `wall`.
    pub fn joint(&self, wall: usize, other: usize) -> Joint {
        let starts = self.walls[other].joints[0] == wall;
        match (self.walls[wall].vertical, starts) {
            (true, true) => Joint::East,
            (true, false) => Joint::West,
            (false, true) => Joint::North,
            (false, false) => Joint::South,
        }
    }

    pub fn insertion_points(&self) -> Vec<Slot> {
        let mut out = Vec::new();
        let bj = &self.walls[BOTTOM].joints;
        for &x in &bj[..bj.len() - 1] {
            let r = self
                .rects
                .iter()
                .find(|s| s.bottom == BOTTOM && s.left == x)
                .expect("bottom rectangle");
            let ti = self.index_in(x, r.top);
            for pos in 0..ti {
                out.push(Slot {
                    vertical: true,
                    wall: x,
                    pos,
                });
            }
        }
        let rj = &self.walls[RIGHT].joints;
        for &y in &rj[1..] {
            let r = self
                .rects
                .iter()
                .find(|s| s.right == RIGHT && s.top == y)
                .expect("right rectangle");
            let li = self.index_in(y, r.left);
            for pos in li..self.walls[y].joints.len() - 1 {
                out.push(Slot {
                    vertical: false,
                    wall: y,
                    pos,
                });
            }
        }
        out
    }

    pub fn insert(&self, slot: Slot) -> Floorplan {
        let mut f = self.clone();
        let nw = f.walls.len();
        if slot.vertical {
            let x = slot.wall;
            let bj = f.walls[BOTTOM].joints.clone();
            let ix = bj.iter().position(|&w| w == x).expect("wall on bottom");
            let lifted: Vec<usize> = bj[ix + 1..bj.len() - 1].to_vec();
            for &v in &lifted {
                f.walls[v].joints[0] = nw;
            }
            for s in f.rects.iter_mut() {
                if s.bottom == BOTTOM && (s.left == x || lifted.contains(&s.left)) {
                    s.bottom = nw;
                }
            }
            f.walls[BOTTOM].joints = vec![];
            f.walls[BOTTOM].joints.extend_from_slice(&bj[..=ix]);
            f.walls[BOTTOM].joints.push(RIGHT);
            f.walls[x].joints.insert(slot.pos + 1, nw);
            f.walls[RIGHT].joints.insert(1, nw);
            let mut joints = vec![x];
            joints.extend(lifted);
            joints.push(RIGHT);
            f.walls.push(Wall {
                vertical: false,
                joints,
            });
            f.rects.push(Sides {
                left: x,
                right: RIGHT,
                bottom: BOTTOM,
                top: nw,
            });
        } else {
            let y = slot.wall;
            let rj = f.walls[RIGHT].joints.clone();
            let iy = rj.iter().position(|&w| w == y).expect("wall on right");
            let pushed: Vec<usize> = rj[1..iy].to_vec();
            for &h in &pushed {
                *f.walls[h].joints.last_mut().unwrap() = nw;
            }
            for s in f.rects.iter_mut() {
                if s.right == RIGHT && (s.top == y || pushed.contains(&s.top)) {
                    s.right = nw;
                }
            }
            f.walls[RIGHT].joints = vec![BOTTOM];
            f.walls[RIGHT].joints.extend_from_slice(&rj[iy..]);
            f.walls[y].joints.insert(slot.pos + 1, nw);
            let bl = f.walls[BOTTOM].joints.len();
            f.walls[BOTTOM].joints.insert(bl - 1, nw);
            let mut joints = vec![BOTTOM];
            joints.extend(pushed);
            joints.push(y);
            f.walls.push(Wall {
                vertical: true,
                joints,
            });
            f.rects.push(Sides {
                left: nw,
                right: RIGHT,
                bottom: BOTTOM,
                top: y,
            });
        }
        f
    }

    pub fn insert_at(&self, k: usize) -> Option<Floorplan> {
        let pts = self.insertion_points();
        if k == 0 || k > pts.len() {
            return None;
        }
        Some(self.insert(pts[k - 1]))
    }

    /// Removes the last rectangle. Returns the parent and the 1-based
    /// insertion point index that recreates `self`. `None` if the last
    /// rectangle is not in the bottom-right corner.
    pub fn delete(&self) -> Option<(Floorplan, usize)> {
        let n = self.n();
        if n < 2 {
            return None;
        }
        let s = self.rects[n - 1];
        if s.right != RIGHT || s.bottom != BOTTOM {
            return None;
        }
        let mut f = self.clone();
        f.rects.pop();
        let (l, t) = (s.left, s.top);
        let (gone, slot) = if f.walls[t].joints[0] == l {
            let tj = f.walls[t].joints.clone();
            let standing = tj[1..tj.len() - 1].to_vec();
            for &v in &standing {
                f.walls[v].joints[0] = BOTTOM;
            }
            for r in f.rects.iter_mut() {
                if r.bottom == t {
                    r.bottom = BOTTOM;
                }
            }
            let pt = f.index_in(l, t);
            f.walls[l].joints.remove(pt);
            let pr = f.index_in(RIGHT, t);
            f.walls[RIGHT].joints.remove(pr);
            let pl = f.index_in(BOTTOM, l);
            for (i, &v) in standing.iter().enumerate() {
                f.walls[BOTTOM].joints.insert(pl + 1 + i, v);
            }
            (
                t,
                Slot {
                    vertical: true,
                    wall: l,
                    pos: pt - 1,
                },
            )
        } else if *f.walls[l].joints.last().unwrap() == t {
            let lj = f.walls[l].joints.clone();
            let ending = lj[1..lj.len() - 1].to_vec();
            for &h in &ending {
                *f.walls[h].joints.last_mut().unwrap() = RIGHT;
            }
            for r in f.rects.iter_mut() {
                if r.right == l {
                    r.right = RIGHT;
                }
            }
            let pl = f.index_in(t, l);
            f.walls[t].joints.remove(pl);
            let pb = f.index_in(BOTTOM, l);
            f.walls[BOTTOM].joints.remove(pb);
            for (i, &h) in ending.iter().enumerate() {
                f.walls[RIGHT].joints.insert(1 + i, h);
            }
            (
                l,
                Slot {
                    vertical: false,
                    wall: t,
                    pos: pl - 1,
                },
            )
        } else {
            return None;
        };
        f.drop_wall(gone);
        let slot = Slot {
            wall: if slot.wall > gone {
                slot.wall - 1
            } else {
                slot.wall
            },
            ..slot
        };
        let k = f.insertion_points().iter().position(|&p| p == slot)? + 1;
        Some((f, k))
    }

    fn drop_wall(&mut self, gone: usize) {
        let fix = |w: usize| if w > gone { w - 1 } else { w };
        self.walls.remove(gone);
        for w in self.walls.iter_mut() {
            for j in w.joints.iter_mut() {
                *j = fix(*j);
            }
        }
        for r in self.rects.iter_mut() {
            r.left = fix(r.left);
            r.right = fix(r.right);
            r.bottom = fix(r.bottom);
            r.top = fix(r.top);
        }
    }

    /// The code `(k_2, ..., k_n)`; `None` if the labelling is not a
    /// reverse-deletion order.
    pub fn code(&self) -> Option<Vec<usize>> {
        let mut ks = Vec::with_capacity(self.n().saturating_sub(1));
        let mut f = self.clone();
        while f.n() > 1 {
            let (p, k) = f.delete()?;
            ks.push(k);
            f = p;
        }
        ks.reverse();
        Some(ks)
    }

    pub fn from_code(code: &[usize]) -> Option<Floorplan> {
        let mut f = Floorplan::single();
        for &k in code {
            f = f.insert_at(k)?;
        }
        Some(f)
    }

    /// Reflection across the top-left to bottom-right diagonal.
    pub fn reflect(&self) -> Floorplan {
        let map = |w: usize| match w {
            LEFT => TOP,
            TOP => LEFT,
            RIGHT => BOTTOM,
            BOTTOM => RIGHT,
            w => w,
        };
        let mut walls = self.walls.clone();
        for (i, w) in self.walls.iter().enumerate() {
            walls[map(i)] = Wall {
                vertical: !w.vertical,
                joints: w.joints.iter().rev().map(|&j| map(j)).collect(),
            };
        }
        let rects = self
            .rects
            .iter()
            .map(|s| Sides {
                left: map(s.top),
                top: map(s.left),
                right: map(s.bottom),
                bottom: map(s.right),
            })
            .collect();
        Floorplan { walls, rects }
    }

    /// Integer coordinates of every wall via longest paths on the joint orders.
    /// Returns `(x of vertical walls, y of horizontal walls)` indexed by wall id.
    pub fn levels(&self) -> Vec<i64> {
        let m = self.walls.len();
        let mut level = vec![0i64; m];
        for vertical in [true, false] {
            // walls of the other orientation carry the ordering constraints
            let mut succ: Vec<Vec<usize>> = vec![vec![]; m];
            let mut indeg = vec![0usize; m];
            for w in &self.walls {
                if w.vertical == vertical {
                    continue;
                }
                for p in w.joints.windows(2) {
                    succ[p[0]].push(p[1]);
                    indeg[p[1]] += 1;
                }
            }
            let mut stack: Vec<usize> = (0..m)
                .filter(|&i| self.walls[i].vertical == vertical && indeg[i] == 0)
                .collect();
            while let Some(u) = stack.pop() {
                for &v in &succ[u] {
                    level[v] = level[v].max(level[u] + 1);
                    indeg[v] -= 1;
                    if indeg[v] == 0 {
                        stack.push(v);
                    }
                }
            }
        }
        level
    }

    /// Boxes `(x0, y0, x1, y1)` of a concrete layout, y pointing up.
    pub fn layout(&self) -> Vec<[i64; 4]> {
        let lv = self.levels();
        self.rects
            .iter()
            .map(|s| [lv[s.left], lv[s.bottom], lv[s.right], lv[s.top]])
            .collect()
    }

    /// Builds the model from rectangle boxes given in label order. The boxes
    /// must tile a rectangle with no four-way crossings.
    pub fn from_boxes(boxes: &[[i64; 4]]) -> Result<Floorplan, String> {
        if boxes.is_empty() {
            return Err("no rectangles".into());
        }
        let x_lo = boxes.iter().map(|b| b[0]).min().unwrap();
        let y_lo = boxes.iter().map(|b| b[1]).min().unwrap();
        let x_hi = boxes.iter().map(|b| b[2]).max().unwrap();
        let y_hi = boxes.iter().map(|b| b[3]).max().unwrap();
        let area: i64 = boxes.iter().map(|b| (b[2] - b[0]) * (b[3] - b[1])).sum();
        if area != (x_hi - x_lo) * (y_hi - y_lo)
            || boxes.iter().any(|b| b[0] >= b[2] || b[1] >= b[3])
        {
            return Err("boxes do not tile a rectangle".into());
        }
        // segments: (vertical, position, lo, hi)
        let mut segs: Vec<(bool, i64, i64, i64)> = vec![
            (true, x_lo, y_lo, y_hi),
            (true, x_hi, y_lo, y_hi),
            (false, y_lo, x_lo, x_hi),
            (false, y_hi, x_lo, x_hi),
        ];
        for vertical in [true, false] {
            let mut by_line: HashMap<i64, Vec<(i64, i64)>> = HashMap::new();
            for b in boxes {
                let (p0, p1, lo, hi) = if vertical {
                    (b[0], b[2], b[1], b[3])
                } else {
                    (b[1], b[3], b[0], b[2])
                };
                for p in [p0, p1] {
                    let inner = if vertical {
                        p != x_lo && p != x_hi
                    } else {
                        p != y_lo && p != y_hi
                    };
                    if inner {
                        by_line.entry(p).or_default().push((lo, hi));
                    }
                }
            }
            let mut lines: Vec<_> = by_line.into_iter().collect();
            lines.sort();
            for (p, mut iv) in lines {
                iv.sort();
                let mut cur = iv[0];
                for &(lo, hi) in &iv[1..] {
                    if lo <= cur.1 {
                        cur.1 = cur.1.max(hi);
                    } else {
                        segs.push((vertical, p, cur.0, cur.1));
                        cur = (lo, hi);
                    }
                }
                segs.push((vertical, p, cur.0, cur.1));
            }
        }
        let mut walls = Vec::with_capacity(segs.len());
        for (i, &(v, p, lo, hi)) in segs.iter().enumerate() {
            let mut touching: Vec<(i64, usize)> = Vec::new();
            for (k, &(v2, p2, lo2, hi2)) in segs.iter().enumerate() {
                if v2 == v || p2 < lo || p2 > hi || p < lo2 || p > hi2 {
                    continue;
                }
                let ends_here = p == lo2 || p == hi2;
                let at_end = p2 == lo || p2 == hi;
                if !ends_here && !at_end {
                    return Err(format!("crossing walls at segment {i}"));
                }
                if ends_here && at_end && !(Self::is_boundary(i) && Self::is_boundary(k)) {
                    return Err(format!("four-way or corner contact at segment {i}"));
                }
                touching.push((p2, k));
            }
            touching.sort();
            walls.push(Wall {
                vertical: v,
                joints: touching.into_iter().map(|t| t.1).collect(),
            });
        }
        let find = |vertical: bool, p: i64, lo: i64, hi: i64| {
            segs.iter()
                .position(|&(v, q, a, b)| v == vertical && q == p && a <= lo && hi <= b)
                .expect("side on a wall")
        };
        let rects = boxes
            .iter()
            .map(|b| Sides {
                left: find(true, b[0], b[1], b[3]),
                right: find(true, b[2], b[1], b[3]),
                bottom: find(false, b[1], b[0], b[2]),
                top: find(false, b[3], b[0], b[2]),
            })
            .collect();
        Ok(Floorplan { walls, rects })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn all(n: usize) -> Vec<Floorplan> {
        let mut level = vec![Floorplan::single()];
        for _ in 1..n {
            level = level
                .iter()
                .flat_map(|f| f.insertion_points().into_iter().map(move |s| f.insert(s)))
                .collect();
        }
        level
    }

    #[test]
    fn generic_counts() {
        let counts: Vec<usize> = (1..=6).map(|n| all(n).len()).collect();
        assert_eq!(counts, vec![1, 2, 6, 24, 116, 642]);
    }

    #[test]
    fn insert_then_delete() {
        for f in all(5) {
            let code = f.code().unwrap();
            assert_eq!(Floorplan::from_code(&code).unwrap(), f);
            let boxes = f.layout();
            let g = Floorplan::from_boxes(&boxes).unwrap();
            assert_eq!(g.code().unwrap(), code);
        }
    }

    #[test]
    fn reflect_is_involution_and_keeps_labels() {
        for f in all(5) {
            let r = f.reflect();
            assert!(r.code().is_some());
            assert_eq!(r.reflect(), f);
            let pts = f.insertion_points().len();
            assert_eq!(r.insertion_points().len(), pts);
        }
    }

    #[test]
    fn row_of_four() {
        let f = Floorplan::from_boxes(&[[0, 0, 1, 1], [1, 0, 2, 1], [2, 0, 3, 1], [3, 0, 4, 1]])
            .unwrap();
        assert_eq!(f.code().unwrap(), vec![2, 3, 4]);
    }
}
