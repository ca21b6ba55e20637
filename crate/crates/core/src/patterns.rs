//! Whole-rectangulation pattern tests on the wall model.

use crate::floorplan::{Floorplan, Joint, BOTTOM};

/// The eight forbidden wall configurations.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum RectPattern {
    /// Clockwise windmill.
    P1,
    /// Counterclockwise windmill.
    P2,
    /// On a vertical wall, a joint from the west directly below one from the east.
    P3,
    /// On a horizontal wall, a joint from the south directly left of one from the north.
    P4,
    /// On a vertical wall, a joint from the east directly below one from the west.
    P5,
    /// On a horizontal wall, a joint from the north directly left of one from the south.
    P6,
    /// H-shaped configuration with vertical stems.
    P7,
    /// H-shaped configuration with horizontal stems, the mirror image of `P7`.
    P8,
}

impl RectPattern {
    pub const ALL: [RectPattern; 8] = [
        RectPattern::P1,
        RectPattern::P2,
        RectPattern::P3,
        RectPattern::P4,
        RectPattern::P5,
        RectPattern::P6,
        RectPattern::P7,
        RectPattern::P8,
    ];

    pub fn number(self) -> usize {
        self as usize + 1
    }

    pub fn from_number(k: usize) -> Option<RectPattern> {
        RectPattern::ALL.get(k.checked_sub(1)?).copied()
    }

    /// The pattern obtained by reflecting across the main diagonal.
    pub fn mirror(self) -> RectPattern {
        RectPattern::ALL[(self as usize) ^ 1]
    }
}

pub fn contains(f: &Floorplan, p: RectPattern) -> bool {
    match p {
        RectPattern::P1 => windmill(f),
        RectPattern::P3 => adjacent_joints(f, true, Joint::West, Joint::East),
        RectPattern::P5 => adjacent_joints(f, true, Joint::East, Joint::West),
        RectPattern::P7 => {
            let mut g = f.clone();
            loop {
                if h_pattern(&g) {
                    return true;
                }
                match g.delete() {
                    Some((p, _)) => g = p,
                    None => return false,
                }
            }
        }
        _ => contains(&f.reflect(), p.mirror()),
    }
}

fn interior(f: &Floorplan, w: usize) -> &[usize] {
    let j = &f.walls[w].joints;
    &j[1..j.len() - 1]
}

fn adjacent_joints(f: &Floorplan, vertical: bool, lower: Joint, upper: Joint) -> bool {
    (4..f.walls.len())
        .filter(|&w| f.walls[w].vertical == vertical)
        .any(|w| {
            interior(f, w)
                .windows(2)
                .any(|p| f.joint(w, p[0]) == lower && f.joint(w, p[1]) == upper)
        })
}

fn windmill(f: &Floorplan) -> bool {
    (4..f.walls.len())
        .filter(|&x| f.walls[x].vertical)
        .any(|x| {
            let y = *f.walls[x].joints.last().unwrap();
            let z = *f.walls[y].joints.last().unwrap();
            let t = f.walls[z].joints[0];
            [y, z, t].iter().all(|&w| !Floorplan::is_boundary(w)) && f.walls[t].joints[0] == x
        })
}

/// A vertical wall `x` with a joint from the east, a horizontal line `y` that
/// either ends on `x` from the west or carries the foot of `x`, a vertical wall
/// `z` standing on `y` west of `x`, and a joint from the west on `z`.
fn h_pattern(f: &Floorplan) -> bool {
    for x in 4..f.walls.len() {
        if !f.walls[x].vertical || !interior(f, x).iter().any(|&h| f.joint(x, h) == Joint::East) {
            continue;
        }
        let foot = f.walls[x].joints[0];
        let lines = std::iter::once(foot).chain(
            interior(f, x)
                .iter()
                .copied()
                .filter(|&h| f.joint(x, h) == Joint::West),
        );
        for y in lines {
            let yj = &f.walls[y].joints;
            let ix = yj.iter().position(|&w| w == x).unwrap();
            for &z in yj[1..ix].iter().rev() {
                if f.joint(y, z) == Joint::North
                    && interior(f, z).iter().any(|&h| f.joint(z, h) == Joint::West)
                {
                    return true;
                }
            }
        }
    }
    let _ = BOTTOM;
    false
}
