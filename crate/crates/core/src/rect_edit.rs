//! Edge primitives and local jumps (W, S, T) on the incidence structure.
//!
//! Every function charges its elementary steps to a [`WorkCounter`]: one unit
//! per primitive call, one per loop iteration that relabels an edge, and one
//! per jump.

use crate::rect_core::{Orientation, Rectangulation, VertexType};

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct WorkCounter {
    pub ops: u64,
    /// Local jumps performed, by kind.
    pub w_jumps: u64,
    pub s_jumps: u64,
    pub t_jumps: u64,
}

impl WorkCounter {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn tick(&mut self, k: u64) {
        self.ops += k;
    }
}

/// Which end vertex disappears together with a removed edge.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum End {
    Head,
    Tail,
}

/// Where an edge is inserted relative to an existing one.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Place {
    Before(usize),
    After(usize),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum JumpKind {
    WH,
    WV,
    S,
    TH,
    TV,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Dir {
    Left,
    Right,
}

impl Dir {
    pub fn flip(self) -> Dir {
        match self {
            Dir::Left => Dir::Right,
            Dir::Right => Dir::Left,
        }
    }
}

/// Removes edge `beta` together with its head (`End::Head`) or tail vertex.
pub fn remove_edge(r: &mut Rectangulation, beta: usize, end: End, w: &mut WorkCounter) {
    w.tick(1);
    let e = r.edges[beta];
    let (alpha, gamma) = (e.prev, e.next);
    match end {
        End::Head => {
            let a = e.tail;
            if alpha != 0 {
                r.edges[alpha].next = gamma;
            }
            if gamma != 0 {
                r.edges[gamma].prev = alpha;
                r.edges[gamma].tail = a;
            }
            match e.dir {
                Orientation::Horizontal => r.vertices[a].east = gamma,
                Orientation::Vertical => r.vertices[a].north = gamma,
            }
            if e.head == r.walls[e.wall].last {
                r.walls[e.wall].last = a;
            }
        }
        End::Tail => {
            let b = e.head;
            if gamma != 0 {
                r.edges[gamma].prev = alpha;
            }
            if alpha != 0 {
                r.edges[alpha].next = gamma;
                r.edges[alpha].head = b;
            }
            match e.dir {
                Orientation::Horizontal => r.vertices[b].west = alpha,
                Orientation::Vertical => r.vertices[b].south = alpha,
            }
            if e.tail == r.walls[e.wall].first {
                r.walls[e.wall].first = b;
            }
        }
    }
}

/// Inserts edge `beta` next to an existing edge, splitting it at vertex `a`.
/// `Before(g)`: `beta` gets head `a` and precedes `g`. `After(al)`: `beta`
/// gets tail `a` and follows `al`.
pub fn insert_edge(
    r: &mut Rectangulation,
    place: Place,
    beta: usize,
    a: usize,
    w: &mut WorkCounter,
) {
    w.tick(1);
    match place {
        Place::Before(gamma) => {
            let g = r.edges[gamma];
            let (alpha, b) = (g.prev, g.tail);
            {
                let e = &mut r.edges[beta];
                e.tail = b;
                e.head = a;
                e.prev = alpha;
                e.next = gamma;
                e.dir = g.dir;
                e.wall = g.wall;
            }
            r.edges[gamma].tail = a;
            r.edges[gamma].prev = beta;
            if alpha != 0 {
                r.edges[alpha].next = beta;
            }
            match g.dir {
                Orientation::Horizontal => {
                    r.vertices[a].west = beta;
                    r.vertices[a].east = gamma;
                    r.vertices[b].east = beta;
                }
                Orientation::Vertical => {
                    r.vertices[a].south = beta;
                    r.vertices[a].north = gamma;
                    r.vertices[b].north = beta;
                }
            }
        }
        Place::After(alpha) => {
            let al = r.edges[alpha];
            let (gamma, b) = (al.next, al.head);
            {
                let e = &mut r.edges[beta];
                e.tail = a;
                e.head = b;
                e.prev = alpha;
                e.next = gamma;
                e.dir = al.dir;
                e.wall = al.wall;
            }
            r.edges[alpha].head = a;
            r.edges[alpha].next = beta;
            if gamma != 0 {
                r.edges[gamma].prev = beta;
            }
            match al.dir {
                Orientation::Horizontal => {
                    r.vertices[a].west = alpha;
                    r.vertices[a].east = beta;
                    r.vertices[b].west = beta;
                }
                Orientation::Vertical => {
                    r.vertices[a].south = alpha;
                    r.vertices[a].north = beta;
                    r.vertices[b].south = beta;
                }
            }
        }
    }
}

/// Recomputes the type of `v` from its incident edges.
pub fn retype(r: &mut Rectangulation, v: usize) {
    if v == 0 {
        return;
    }
    let x = &r.vertices[v];
    let present = [x.north != 0, x.east != 0, x.south != 0, x.west != 0];
    r.vertices[v].kind = match present {
        [false, true, true, true] => VertexType::BottomT,
        [true, true, true, false] => VertexType::RightT,
        [true, true, false, true] => VertexType::TopT,
        [true, false, true, true] => VertexType::LeftT,
        _ => VertexType::Corner,
    };
}

/// Performs a local jump of rectangle `j` in direction `d`. For left W-, S-
/// and T-jumps and for right vertical ones, `alpha` is the edge containing
/// the insertion point that becomes the top-left vertex of `r_j`. For right
/// horizontal and left vertical W-jumps it is the edge on the far side of that
/// point, and for right horizontal and left vertical T-jumps it is any edge of
/// the group being entered.
pub fn local_jump(
    r: &mut Rectangulation,
    kind: JumpKind,
    j: usize,
    d: Dir,
    alpha: usize,
    w: &mut WorkCounter,
) {
    w.tick(1);
    match kind {
        JumpKind::WH | JumpKind::WV => w.w_jumps += 1,
        JumpKind::S => w.s_jumps += 1,
        JumpKind::TH | JumpKind::TV => w.t_jumps += 1,
    }
    match (kind, d) {
        (JumpKind::WH, Dir::Left) => wjump_h_left(r, j, alpha, w),
        (JumpKind::WH, Dir::Right) => wjump_h_right(r, j, alpha, w),
        (JumpKind::WV, Dir::Right) => wjump_v_right(r, j, alpha, w),
        (JumpKind::WV, Dir::Left) => wjump_v_left(r, j, alpha, w),
        (JumpKind::S, Dir::Left) => sjump_left(r, j, alpha, w),
        (JumpKind::S, Dir::Right) => sjump_right(r, j, alpha, w),
        (JumpKind::TH, Dir::Left) => tjump_h_left(r, j, alpha, w),
        (JumpKind::TH, Dir::Right) => tjump_h_right(r, j, alpha, w),
        (JumpKind::TV, Dir::Right) => tjump_v_right(r, j, alpha, w),
        (JumpKind::TV, Dir::Left) => tjump_v_left(r, j, alpha, w),
    }
}

fn retype_edges(r: &mut Rectangulation, es: &[usize]) {
    for &e in es {
        if e != 0 {
            let (t, h) = (r.edges[e].tail, r.edges[e].head);
            retype(r, t);
            retype(r, h);
        }
    }
}

fn wjump_h_left(r: &mut Rectangulation, j: usize, alpha: usize, w: &mut WorkCounter) {
    let a = r.rects[j].nw;
    let beta = r.vertices[a].west;
    let k = r.edges[alpha].left;
    remove_edge(r, beta, End::Head, w);
    insert_edge(r, Place::After(alpha), beta, a, w);
    r.edges[beta].left = k;
    r.edges[beta].right = j;
}

fn wjump_h_right(r: &mut Rectangulation, j: usize, gamma: usize, w: &mut WorkCounter) {
    let a = r.rects[j].nw;
    let beta = r.vertices[a].east;
    let k = r.edges[r.vertices[a].west].right;
    let m = r.edges[gamma].left;
    remove_edge(r, beta, End::Tail, w);
    insert_edge(r, Place::Before(gamma), beta, a, w);
    r.edges[beta].left = m;
    r.edges[beta].right = k;
}

fn wjump_v_right(r: &mut Rectangulation, j: usize, alpha: usize, w: &mut WorkCounter) {
    let a = r.rects[j].nw;
    let beta = r.vertices[a].north;
    let k = r.edges[alpha].left;
    remove_edge(r, beta, End::Tail, w);
    insert_edge(r, Place::Before(alpha), beta, a, w);
    r.edges[beta].left = k;
    r.edges[beta].right = j;
}

fn wjump_v_left(r: &mut Rectangulation, j: usize, gamma: usize, w: &mut WorkCounter) {
    let a = r.rects[j].nw;
    let beta = r.vertices[a].south;
    let k = r.edges[r.vertices[a].north].right;
    let m = r.edges[gamma].left;
    remove_edge(r, beta, End::Head, w);
    insert_edge(r, Place::After(gamma), beta, a, w);
    r.edges[beta].left = m;
    r.edges[beta].right = k;
}

fn sjump_left(r: &mut Rectangulation, j: usize, alpha: usize, w: &mut WorkCounter) {
    let a = r.rects[j].nw;
    let b = r.rects[j].sw;
    let c = r.rects[j].ne;
    let alpha2 = r.vertices[a].west;
    let beta = r.vertices[a].east;
    let beta2 = r.vertices[b].west;
    let gamma = r.vertices[c].south;
    let delta = r.vertices[a].south;
    let c2 = r.edges[beta2].tail;
    let k = r.edges[alpha].left;
    let l = r.edges[gamma].right;
    let x = r.edges[delta].wall;
    remove_edge(r, beta, End::Tail, w);
    remove_edge(r, beta2, End::Head, w);
    insert_edge(r, Place::Before(alpha), beta, a, w);
    insert_edge(r, Place::After(gamma), beta2, b, w);
    {
        let e = &mut r.edges[delta];
        e.dir = Orientation::Horizontal;
        e.tail = a;
        e.head = b;
    }
    r.vertices[a].east = delta;
    r.vertices[a].west = 0;
    r.vertices[a].kind = VertexType::RightT;
    r.vertices[b].east = 0;
    r.vertices[b].west = delta;
    r.vertices[b].kind = VertexType::LeftT;
    r.walls[x].first = a;
    r.walls[x].last = b;
    r.rects[j].ne = b;
    r.rects[j].sw = c2;
    r.rects[j - 1].ne = c;
    r.rects[j - 1].sw = a;
    let mut nu = r.vertices[c].west;
    while nu != alpha2 {
        w.tick(1);
        r.edges[nu].right = j - 1;
        nu = r.edges[nu].prev;
    }
    let mut nu = r.vertices[c2].north;
    while nu != alpha {
        w.tick(1);
        r.edges[nu].right = j;
        nu = r.edges[nu].next;
    }
    r.edges[beta].left = k;
    r.edges[beta].right = j;
    r.edges[beta2].left = j - 1;
    r.edges[beta2].right = l;
}

fn sjump_right(r: &mut Rectangulation, j: usize, alpha: usize, w: &mut WorkCounter) {
    let a = r.rects[j].nw;
    let b = r.rects[j].ne;
    let c = r.rects[j].sw;
    let alpha2 = r.vertices[a].north;
    let beta = r.vertices[a].south;
    let beta2 = r.vertices[b].north;
    let gamma = r.vertices[c].east;
    let delta = r.vertices[a].east;
    let c2 = r.edges[beta2].head;
    let k = r.edges[alpha].left;
    let l = r.edges[gamma].right;
    let x = r.edges[delta].wall;
    remove_edge(r, beta, End::Head, w);
    remove_edge(r, beta2, End::Tail, w);
    insert_edge(r, Place::After(alpha), beta, a, w);
    insert_edge(r, Place::Before(gamma), beta2, b, w);
    {
        let e = &mut r.edges[delta];
        e.dir = Orientation::Vertical;
        e.head = a;
        e.tail = b;
    }
    r.vertices[a].south = delta;
    r.vertices[a].north = 0;
    r.vertices[a].kind = VertexType::BottomT;
    r.vertices[b].south = 0;
    r.vertices[b].north = delta;
    r.vertices[b].kind = VertexType::TopT;
    r.walls[x].last = a;
    r.walls[x].first = b;
    r.rects[j].sw = b;
    r.rects[j].ne = c2;
    r.rects[j - 1].sw = c;
    r.rects[j - 1].ne = a;
    let mut nu = r.vertices[c].north;
    while nu != alpha2 {
        w.tick(1);
        r.edges[nu].right = j - 1;
        nu = r.edges[nu].next;
    }
    let mut nu = r.vertices[c2].west;
    while nu != alpha {
        w.tick(1);
        r.edges[nu].right = j;
        nu = r.edges[nu].prev;
    }
    r.edges[beta].left = k;
    r.edges[beta].right = j;
    r.edges[beta2].left = j - 1;
    r.edges[beta2].right = l;
}

fn tjump_h_left(r: &mut Rectangulation, j: usize, alpha: usize, w: &mut WorkCounter) {
    let a = r.rects[j].nw;
    let b = r.edges[alpha].head;
    let c = r.rects[j].ne;
    let alpha2 = r.vertices[a].west;
    let beta = r.vertices[a].east;
    let beta2 = r.vertices[a].south;
    let gamma = r.vertices[c].south;
    let gamma2 = r.vertices[b].south;
    let k = r.edges[beta2].left;
    let l = r.edges[gamma].right;
    let m = r.edges[alpha].right;
    let x = r.edges[alpha].wall;
    let y = r.edges[gamma2].wall;
    remove_edge(r, beta, End::Tail, w);
    remove_edge(r, beta2, End::Tail, w);
    insert_edge(r, Place::After(alpha), beta, a, w);
    insert_edge(r, Place::After(gamma), beta2, b, w);
    r.edges[beta].head = b;
    r.edges[gamma2].head = a;
    r.vertices[a].south = gamma2;
    r.vertices[b].west = beta;
    r.walls[x].last = b;
    r.walls[y].last = a;
    r.rects[j].ne = b;
    r.rects[k].ne = c;
    r.rects[m].ne = a;
    let mut nu = r.vertices[c].west;
    while nu != alpha2 {
        w.tick(1);
        r.edges[nu].right = k;
        nu = r.edges[nu].prev;
    }
    r.edges[beta].left = k;
    r.edges[beta2].right = l;
    retype_edges(r, &[alpha, alpha2, beta, beta2, gamma, gamma2]);
}

fn tjump_h_right(r: &mut Rectangulation, j: usize, delta: usize, w: &mut WorkCounter) {
    let a = r.rects[j].nw;
    let beta = r.vertices[a].east;
    let alpha = r.vertices[a].west;
    let gamma2 = r.vertices[a].south;
    let b = r.edges[beta].head;
    let beta2 = r.vertices[b].north;
    let c = r.edges[beta2].head;
    let k = r.edges[alpha].left;
    let m = r.edges[alpha].right;
    let dl = r.edges[delta].left;
    remove_edge(r, beta2, End::Tail, w);
    remove_edge(r, beta, End::Tail, w);
    insert_edge(r, Place::After(delta), beta, a, w);
    insert_edge(r, Place::After(gamma2), beta2, b, w);
    r.rects[j].ne = c;
    r.rects[k].ne = a;
    r.rects[m].ne = b;
    let mut nu = r.vertices[c].west;
    loop {
        w.tick(1);
        r.edges[nu].right = j;
        if nu == beta {
            break;
        }
        nu = r.edges[nu].prev;
    }
    r.edges[beta].left = dl;
    r.edges[beta2].left = k;
    r.edges[beta2].right = j;
    for v in [a, b, c] {
        retype(r, v);
    }
}

fn tjump_v_right(r: &mut Rectangulation, j: usize, alpha: usize, w: &mut WorkCounter) {
    let a = r.rects[j].nw;
    let b = r.edges[alpha].tail;
    let c = r.rects[j].sw;
    let alpha2 = r.vertices[a].north;
    let beta = r.vertices[a].south;
    let beta2 = r.vertices[a].east;
    let gamma = r.vertices[c].east;
    let gamma2 = r.vertices[b].east;
    let k = r.edges[beta2].left;
    let l = r.edges[gamma].right;
    let m = r.edges[alpha].right;
    let x = r.edges[alpha].wall;
    let y = r.edges[gamma2].wall;
    remove_edge(r, beta, End::Head, w);
    remove_edge(r, beta2, End::Head, w);
    insert_edge(r, Place::Before(alpha), beta, a, w);
    insert_edge(r, Place::Before(gamma), beta2, b, w);
    r.edges[beta].tail = b;
    r.edges[gamma2].tail = a;
    r.vertices[a].east = gamma2;
    r.vertices[b].north = beta;
    r.walls[x].first = b;
    r.walls[y].first = a;
    r.rects[j].sw = b;
    r.rects[k].sw = c;
    r.rects[m].sw = a;
    let mut nu = r.vertices[c].north;
    while nu != alpha2 {
        w.tick(1);
        r.edges[nu].right = k;
        nu = r.edges[nu].next;
    }
    r.edges[beta].left = k;
    r.edges[beta2].right = l;
    retype_edges(r, &[alpha, alpha2, beta, beta2, gamma, gamma2]);
}

fn tjump_v_left(r: &mut Rectangulation, j: usize, delta: usize, w: &mut WorkCounter) {
    let a = r.rects[j].nw;
    let beta = r.vertices[a].south;
    let alpha = r.vertices[a].north;
    let gamma2 = r.vertices[a].east;
    let b = r.edges[beta].tail;
    let beta2 = r.vertices[b].west;
    let c = r.edges[beta2].tail;
    let k = r.edges[alpha].left;
    let m = r.edges[alpha].right;
    let dl = r.edges[delta].left;
    remove_edge(r, beta2, End::Head, w);
    remove_edge(r, beta, End::Head, w);
    insert_edge(r, Place::Before(delta), beta, a, w);
    insert_edge(r, Place::Before(gamma2), beta2, b, w);
    r.rects[j].sw = c;
    r.rects[k].sw = a;
    r.rects[m].sw = b;
    let mut nu = r.vertices[c].north;
    loop {
        w.tick(1);
        r.edges[nu].right = j;
        if nu == beta {
            break;
        }
        nu = r.edges[nu].next;
    }
    r.edges[beta].left = dl;
    r.edges[beta2].left = k;
    r.edges[beta2].right = j;
    for v in [a, b, c] {
        retype(r, v);
    }
}
