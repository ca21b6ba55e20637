//! Permutations as a second model of the same Gray codes: jumps, greedy and
//! memoryless generation of zigzag languages, vincular patterns, and the maps
//! rho and gamma onto diagonal and generic rectangulations.

use std::collections::{HashMap, HashSet};
use std::fmt;

use crate::floorplan::{Floorplan, Joint};
use crate::rect_core::Rectangulation;
use crate::rect_edit::Dir;

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation(Vec<usize>);

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum PermError {
    #[error("not a permutation of 1..={0}")]
    NotBijective(usize),
    #[error("value {0} does not occur")]
    NoSuchValue(usize),
    #[error("jump of {value} by {steps} steps passes a larger value or leaves the permutation")]
    BadJump { value: usize, steps: usize },
    #[error("insertion position {i} out of range 1..={max}")]
    BadPosition { i: usize, max: usize },
    #[error("the empty permutation has no parent")]
    Empty,
}

impl Permutation {
    pub fn new(entries: Vec<usize>) -> Result<Permutation, PermError> {
        let n = entries.len();
        let mut seen = vec![false; n + 1];
        for &a in &entries {
            if a == 0 || a > n || std::mem::replace(&mut seen[a], true) {
                return Err(PermError::NotBijective(n));
            }
        }
        Ok(Permutation(entries))
    }

    pub fn identity(n: usize) -> Permutation {
        Permutation((1..=n).collect())
    }

    /// One-line notation with single digits, e.g. `"265134"`.
    pub fn parse(s: &str) -> Result<Permutation, PermError> {
        let v: Option<Vec<usize>> = s
            .chars()
            .map(|c| c.to_digit(10).map(|d| d as usize))
            .collect();
        Permutation::new(v.ok_or(PermError::NotBijective(s.len()))?)
    }

    pub fn entries(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// 0-based position of `value`.
    pub fn position(&self, value: usize) -> Option<usize> {
        self.0.iter().position(|&a| a == value)
    }

    /// `pos[v]` = 0-based position of value `v`.
    fn positions(&self) -> Vec<usize> {
        let mut pos = vec![0; self.len() + 1];
        for (i, &a) in self.0.iter().enumerate() {
            pos[a] = i;
        }
        pos
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let sep = if self.len() > 9 { " " } else { "" };
        let parts: Vec<String> = self.0.iter().map(|a| a.to_string()).collect();
        write!(f, "{}", parts.join(sep))
    }
}

/// Jump of `value` by `steps` positions; every entry passed must be smaller.
pub fn perm_jump(
    pi: &Permutation,
    value: usize,
    d: Dir,
    steps: usize,
) -> Result<Permutation, PermError> {
    let i = pi.position(value).ok_or(PermError::NoSuchValue(value))?;
    let bad = PermError::BadJump { value, steps };
    let (lo, hi) = match d {
        Dir::Right => (
            i,
            i.checked_add(steps)
                .filter(|&h| h < pi.len())
                .ok_or(bad.clone())?,
        ),
        Dir::Left => (i.checked_sub(steps).ok_or(bad.clone())?, i),
    };
    if steps == 0 || pi.0[lo..=hi].iter().any(|&a| a > value) {
        return Err(bad);
    }
    let mut v = pi.0.clone();
    match d {
        Dir::Right => v[lo..=hi].rotate_left(1),
        Dir::Left => v[lo..=hi].rotate_right(1),
    }
    Ok(Permutation(v))
}

/// `p(pi)`: removes the largest value.
pub fn perm_delete(pi: &Permutation) -> Result<Permutation, PermError> {
    let n = pi.len();
    if n == 0 {
        return Err(PermError::Empty);
    }
    Ok(Permutation(
        pi.0.iter().copied().filter(|&a| a != n).collect(),
    ))
}

/// `c_i(pi)`: inserts the new largest value at 1-based position `i`.
pub fn perm_insert(pi: &Permutation, i: usize) -> Result<Permutation, PermError> {
    let n = pi.len() + 1;
    if i == 0 || i > n {
        return Err(PermError::BadPosition { i, max: n });
    }
    let mut v = pi.0.clone();
    v.insert(i - 1, n);
    Ok(Permutation(v))
}

/// A pattern whose entries at `bond` and `bond + 1` (0-based) must match
/// adjacent positions.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct VincularPattern {
    pub pattern: Vec<usize>,
    pub bond: Option<usize>,
}

impl VincularPattern {
    pub fn new(pattern: &[usize], bond: Option<usize>) -> VincularPattern {
        assert!(
            bond.is_none_or(|b| b + 1 < pattern.len()),
            "bond outside the pattern"
        );
        VincularPattern {
            pattern: pattern.to_vec(),
            bond,
        }
    }

    /// The four patterns that 2-clumped permutations avoid.
    pub fn two_clumped_set() -> [VincularPattern; 4] {
        [
            VincularPattern::new(&[3, 5, 1, 2, 4], Some(1)),
            VincularPattern::new(&[3, 5, 1, 4, 2], Some(1)),
            VincularPattern::new(&[2, 4, 5, 1, 3], Some(2)),
            VincularPattern::new(&[4, 2, 5, 1, 3], Some(2)),
        ]
    }
}

pub fn contains_vincular(pi: &Permutation, pat: &VincularPattern) -> bool {
    let k = pat.pattern.len();
    let mut chosen = Vec::with_capacity(k);
    fn rec(pi: &[usize], pat: &VincularPattern, start: usize, chosen: &mut Vec<usize>) -> bool {
        let t = chosen.len();
        if t == pat.pattern.len() {
            return true;
        }
        for i in start..pi.len() {
            if pat.bond == Some(t.wrapping_sub(1)) && i != chosen[t - 1] + 1 {
                break;
            }
            // same relative order as the pattern prefix
            let ok = chosen
                .iter()
                .enumerate()
                .all(|(s, &c)| (pi[c] < pi[i]) == (pat.pattern[s] < pat.pattern[t]));
            if ok {
                chosen.push(i);
                if rec(pi, pat, i + 1, chosen) {
                    return true;
                }
                chosen.pop();
            }
        }
        false
    }
    rec(&pi.0, pat, 0, &mut chosen)
}

pub fn contains_pattern(pi: &Permutation, tau: &[usize]) -> bool {
    contains_vincular(pi, &VincularPattern::new(tau, None))
}

pub fn is_two_clumped(pi: &Permutation) -> bool {
    VincularPattern::two_clumped_set()
        .iter()
        .all(|p| !contains_vincular(pi, p))
}

/// All permutations of `n` in a zigzag language, level by level from the
/// empty permutation; `member` is asked only about children of members.
pub fn enumerate_language<F: Fn(&Permutation) -> bool>(member: F, n: usize) -> Vec<Permutation> {
    let mut level = vec![Permutation(vec![])];
    for m in 1..=n {
        level = level
            .iter()
            .flat_map(|p| (1..=m).map(move |i| perm_insert(p, i).expect("position in range")))
            .filter(|c| member(c))
            .collect();
    }
    level
}

fn minimal_jump<F: Fn(&Permutation) -> bool>(
    pi: &Permutation,
    j: usize,
    d: Dir,
    member: &F,
) -> Option<(Permutation, usize)> {
    (1..pi.len())
        .map_while(|s| perm_jump(pi, j, d, s).ok().map(|p| (p, s)))
        .find(|(p, _)| member(p))
}

/// A jump between consecutive visits.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PermStep {
    pub value: usize,
    pub d: Dir,
    pub steps: usize,
}

/// Memoryless generation of a zigzag language given by its membership test.
pub fn perm_run_memoryless<F, V>(member: F, n: usize, mut visit: V) -> u64
where
    F: Fn(&Permutation) -> bool,
    V: FnMut(&Permutation, Option<PermStep>),
{
    let mut pi = Permutation::identity(n);
    let mut o = vec![Dir::Left; n + 1];
    let mut s: Vec<usize> = (0..=n).collect();
    let mut count = 0;
    let mut last = None;
    loop {
        visit(&pi, last);
        count += 1;
        let j = s[n];
        if j <= 1 {
            return count;
        }
        let d = o[j];
        let (next, steps) =
            minimal_jump(&pi, j, d, &member).expect("zigzag language has a minimal jump");
        pi = next;
        s[n] = n;
        let i = pi.position(j).expect("value present");
        let at_end = match d {
            Dir::Left => i == 0 || pi.0[i - 1] > j,
            Dir::Right => i + 1 == n || pi.0[i + 1] > j,
        };
        if at_end {
            o[j] = d.flip();
            s[j] = s[j - 1];
            s[j - 1] = j - 1;
        }
        last = Some(PermStep { value: j, d, steps });
    }
}

/// Greedy minimal jumps of the largest possible value. Stops
/// early on an ambiguous direction or when no jump reaches a new member.
pub fn perm_run_greedy(set: &HashSet<Permutation>, start: &Permutation) -> Vec<Permutation> {
    let member = |p: &Permutation| set.contains(p);
    let mut seen = HashSet::from([start.clone()]);
    let mut order = vec![start.clone()];
    'outer: while order.len() < set.len() {
        let cur = order.last().unwrap().clone();
        for j in (2..=cur.len()).rev() {
            let fresh: Vec<Permutation> = [Dir::Left, Dir::Right]
                .into_iter()
                .filter_map(|d| minimal_jump(&cur, j, d, &member).map(|(p, _)| p))
                .filter(|p| !seen.contains(p))
                .collect();
            match fresh.len() {
                0 => continue,
                1 => {
                    seen.insert(fresh[0].clone());
                    order.push(fresh[0].clone());
                    continue 'outer;
                }
                _ => break 'outer,
            }
        }
        break;
    }
    order
}

/// Boxes of `rho(pi)` in label order, `(x0, y0, x1, y1)` with y pointing
/// up; rectangle `i` meets the diagonal in its `i`-th unit segment.
pub fn rho_boxes(pi: &Permutation) -> Vec<[i64; 4]> {
    let n = pi.len() as i64;
    // the staircase, with y pointing down from the top edge: column x is
    // covered from height[x] to the bottom
    let mut height = vec![n; n as usize];
    let mut boxes = vec![[0i64; 4]; n as usize];
    for &a in &pi.0 {
        let a = a as i64;
        let col = (a - 1) as usize;
        let y1 = height[col];
        let mut s = col;
        while s > 0 && height[s - 1] == y1 {
            s -= 1;
        }
        let mut e = col + 1;
        while (e as i64) < n && height[e] == y1 {
            e += 1;
        }
        let x1 = if y1 == a { e } else { a as usize };
        let y0 = if s as i64 == a - 1 {
            if s == 0 {
                0
            } else {
                height[s - 1]
            }
        } else {
            a - 1
        };
        for h in &mut height[s..x1] {
            *h = y0;
        }
        boxes[col] = [s as i64, n - y1, x1 as i64, n - y0];
    }
    boxes
}

pub fn rho_floorplan(pi: &Permutation) -> Floorplan {
    Floorplan::from_boxes(&rho_boxes(pi)).expect("staircase boxes tile the square")
}

/// The diagonal rectangulation `rho(pi)`.
pub fn rho(pi: &Permutation) -> Rectangulation {
    Rectangulation::from_floorplan(&rho_floorplan(pi))
}

/// `rho(pi)` with every wall slid so that the rectangles along it appear
/// in the order of `pi`.
pub fn gamma_floorplan(pi: &Permutation) -> Floorplan {
    let mut f = rho_floorplan(pi);
    let pos = pi.positions();
    for w in 4..f.walls.len() {
        let joints = f.walls[w].joints.clone();
        let m = joints.len();
        let mut inner: Vec<(usize, usize)> = joints[1..m - 1]
            .iter()
            .map(|&x| {
                let find = |pred: &dyn Fn(&crate::floorplan::Sides) -> bool| {
                    f.rects.iter().position(pred).expect("rectangle at joint") + 1
                };
                let r = match f.joint(w, x) {
                    Joint::South => find(&|s| s.top == w && s.left == x),
                    Joint::North => find(&|s| s.bottom == w && s.right == x),
                    Joint::West => find(&|s| s.right == w && s.bottom == x),
                    Joint::East => find(&|s| s.left == w && s.top == x),
                };
                (pos[r], x)
            })
            .collect();
        inner.sort();
        for (k, (_, x)) in inner.into_iter().enumerate() {
            f.walls[w].joints[k + 1] = x;
        }
    }
    f
}

/// The generic rectangulation `gamma(pi)`.
pub fn gamma(pi: &Permutation) -> Rectangulation {
    Rectangulation::from_floorplan(&gamma_floorplan(pi))
}

fn preimage_child(parent: &Permutation, code: &[usize]) -> Permutation {
    (1..=parent.len() + 1)
        .map(|i| perm_insert(parent, i).expect("position in range"))
        .find(|c| is_two_clumped(c) && gamma_floorplan(c).code().as_deref() == Some(code))
        .expect("gamma is onto and bijective on 2-clumped permutations")
}

/// The unique 2-clumped permutation mapped to `code` by gamma, found by
/// following the insertion code down the tree.
pub fn gamma_preimage(code: &[usize]) -> Permutation {
    let mut pi = Permutation::identity(1);
    for k in 1..=code.len() {
        pi = preimage_child(&pi, &code[..k]);
    }
    pi
}

/// [`gamma_preimage`] for long listings: preimages of proper prefixes are
/// memoised, so each call costs a single tree level.
#[derive(Default)]
pub struct PreimageCache {
    memo: HashMap<Vec<usize>, Permutation>,
}

impl PreimageCache {
    const LIMIT: usize = 1 << 20;

    pub fn new() -> PreimageCache {
        PreimageCache::default()
    }

    pub fn get(&mut self, code: &[usize]) -> Permutation {
        let Some((_, prefix)) = code.split_last() else {
            return Permutation::identity(1);
        };
        let parent = match self.memo.get(prefix) {
            Some(p) => p.clone(),
            None => {
                let p = self.get(prefix);
                if self.memo.len() >= Self::LIMIT {
                    self.memo.clear();
                }
                self.memo.insert(prefix.to_vec(), p.clone());
                p
            }
        };
        preimage_child(&parent, code)
    }
}
