//! Hamiltonian cycles on even-sized rectangles and the edge surgery that
//! splices cycles with each other and with a path.

use grid_core::{v, Rect, Vertex};
use std::fmt;

/// The side of a rectangle whose boundary edges the cycle is allowed to skip.
/// The other three sides are traversed completely, which is what makes the
/// cycle mergeable with a neighbor on any closed side.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Side {
    Top,
    Bottom,
    Left,
    Right,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CycleError {
    /// Odd vertex count: the two color classes cannot alternate evenly.
    NotEvenSized,
    /// A side of length 1, or an odd-length open side.
    DegenerateSide,
}

impl fmt::Display for CycleError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CycleError::NotEvenSized => write!(f, "rectangle has an odd number of vertices"),
            CycleError::DegenerateSide => write!(f, "side too short or open side of odd length"),
        }
    }
}

impl std::error::Error for CycleError {}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MergeError {
    /// No pair of parallel edges faces each other across the shared border.
    NoParallelEdges,
}

impl fmt::Display for MergeError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "no parallel edge pair between the two pieces")
    }
}

impl std::error::Error for MergeError {}

/// Hamiltonian cycle on an even-sized rectangle, in clockwise order,
/// containing every boundary edge of the three sides other than `open`.
/// On the open side the cycle runs comb-like teeth, covering the boundary
/// edges in alternate pairs starting from the lower-coordinate corner.
pub fn hamiltonian_cycle(rect: Rect, open: Side) -> Result<Vec<Vertex>, CycleError> {
    if !rect.is_even_sized() || rect.is_empty() {
        return Err(CycleError::NotEvenSized);
    }
    if rect.m < 2 || rect.n < 2 {
        return Err(CycleError::DegenerateSide);
    }
    let open_len = match open {
        Side::Top | Side::Bottom => rect.m,
        Side::Left | Side::Right => rect.n,
    };
    if open_len % 2 != 0 {
        return Err(CycleError::DegenerateSide);
    }
    // Build in a canonical frame (even width, open side at the bottom) and
    // rotate into place; rotations keep the clockwise orientation.
    let (a, b) = match open {
        Side::Top | Side::Bottom => (rect.m, rect.n),
        Side::Left | Side::Right => (rect.n, rect.m),
    };
    let cycle = canonical_cycle(a, b);
    let place = |p: Vertex| -> Vertex {
        let q = match open {
            Side::Bottom => p,
            Side::Top => v(a + 1 - p.x, b + 1 - p.y),
            Side::Left => v(b + 1 - p.y, p.x),
            Side::Right => v(p.y, a + 1 - p.x),
        };
        rect.to_global(q)
    };
    Ok(cycle.into_iter().map(place).collect())
}

/// The generator: width `a` even, open side at the bottom, clockwise from
/// (1,1). Top row east, then down-and-up teeth column pairs back to the west.
fn canonical_cycle(a: i32, b: i32) -> Vec<Vertex> {
    let mut cycle = Vec::with_capacity((a * b) as usize);
    let mut p = v(1, 1);
    loop {
        cycle.push(p);
        p = if p.y == 1 {
            if p.x < a {
                v(p.x + 1, 1)
            } else {
                v(a, 2)
            }
        } else if p.x % 2 == 0 {
            if p.y < b {
                v(p.x, p.y + 1)
            } else {
                v(p.x - 1, b)
            }
        } else if p.x > 1 {
            if p.y > 2 {
                v(p.x, p.y - 1)
            } else {
                v(p.x - 1, 2)
            }
        } else {
            v(1, p.y - 1)
        };
        if p == v(1, 1) {
            return cycle;
        }
    }
}

/// Splice two vertex-disjoint cycles into one across a pair of parallel
/// edges: the two edges are removed and replaced by the two edges that cross
/// between them.
pub fn merge_cycles(c1: &[Vertex], c2: &[Vertex]) -> Result<Vec<Vertex>, MergeError> {
    let edges = EdgeIndex::build(c1);
    for j in 0..c2.len() {
        let u = c2[j];
        let w = c2[(j + 1) % c2.len()];
        for (pu, pw) in parallel_partners(u, w) {
            if let Some(i) = edges.get(pu, pw) {
                return Ok(splice_cycles(c1, c2, i, j));
            }
        }
    }
    Err(MergeError::NoParallelEdges)
}

/// Absorb a cycle into a path the same way; the path keeps its endpoints and
/// gains every cycle vertex.
pub fn merge_cycle_path(cycle: &[Vertex], path: &[Vertex]) -> Result<Vec<Vertex>, MergeError> {
    let edges = EdgeIndex::build(cycle);
    for i in 0..path.len().saturating_sub(1) {
        let u = path[i];
        let w = path[i + 1];
        for (pu, pw) in parallel_partners(u, w) {
            if let Some(k) = edges.get(pu, pw) {
                return Ok(splice_into_path(cycle, path, k, i));
            }
        }
    }
    Err(MergeError::NoParallelEdges)
}

/// The two unit edges parallel to (u,w) at distance one, nearest first on the
/// lower-coordinate side for determinism.
fn parallel_partners(u: Vertex, w: Vertex) -> [(Vertex, Vertex); 2] {
    if u.x == w.x {
        [(v(u.x - 1, u.y), v(w.x - 1, w.y)), (v(u.x + 1, u.y), v(w.x + 1, w.y))]
    } else {
        [(v(u.x, u.y - 1), v(w.x, w.y - 1)), (v(u.x, u.y + 1), v(w.x, w.y + 1))]
    }
}

/// Undirected-edge-to-cycle-position index over the cycle's bounding box.
/// Two dense slabs (one per edge direction) keep lookups at array speed;
/// hashing the edges of a million-vertex border cycle would dominate the
/// whole solve.
struct EdgeIndex {
    x0: i32,
    y0: i32,
    w: i32,
    h: i32,
    horiz: Vec<u32>,
    vert: Vec<u32>,
}

const NO_EDGE: u32 = u32::MAX;

impl EdgeIndex {
    fn build(cycle: &[Vertex]) -> EdgeIndex {
        let x0 = cycle.iter().map(|p| p.x).min().unwrap_or(1);
        let y0 = cycle.iter().map(|p| p.y).min().unwrap_or(1);
        let x1 = cycle.iter().map(|p| p.x).max().unwrap_or(1);
        let y1 = cycle.iter().map(|p| p.y).max().unwrap_or(1);
        let (w, h) = (x1 - x0 + 1, y1 - y0 + 1);
        let mut index = EdgeIndex {
            x0,
            y0,
            w,
            h,
            horiz: vec![NO_EDGE; (w * h) as usize],
            vert: vec![NO_EDGE; (w * h) as usize],
        };
        for i in 0..cycle.len() {
            let (a, b) = (cycle[i], cycle[(i + 1) % cycle.len()]);
            let lower = if a <= b { a } else { b };
            let slot = ((lower.y - y0) * w + (lower.x - x0)) as usize;
            if a.y == b.y {
                index.horiz[slot] = i as u32;
            } else {
                index.vert[slot] = i as u32;
            }
        }
        index
    }

    /// Cycle position of the undirected unit edge (a,b), if present.
    fn get(&self, a: Vertex, b: Vertex) -> Option<usize> {
        let lower = if a <= b { a } else { b };
        if lower.x < self.x0
            || lower.y < self.y0
            || lower.x >= self.x0 + self.w
            || lower.y >= self.y0 + self.h
        {
            return None;
        }
        let slot = ((lower.y - self.y0) * self.w + (lower.x - self.x0)) as usize;
        let hit = if a.y == b.y { self.horiz[slot] } else { self.vert[slot] };
        (hit != NO_EDGE).then_some(hit as usize)
    }
}

/// Replace edge i of c1 and edge j of c2 by the two crossing edges. The
/// traversal direction of c2 is chosen so consecutive vertices stay adjacent.
fn splice_cycles(c1: &[Vertex], c2: &[Vertex], i: usize, j: usize) -> Vec<Vertex> {
    let a = c1[i];
    let u = c2[j];
    let mut out = Vec::with_capacity(c1.len() + c2.len());
    out.extend_from_slice(&c1[..=i]);
    if a.adjacent(u) {
        // a-u crossing: walk c2 backward from u around to its other end.
        for k in 0..c2.len() {
            out.push(c2[(j + c2.len() - k) % c2.len()]);
        }
    } else {
        // a is adjacent to the far end: walk c2 forward from there.
        for k in 0..c2.len() {
            out.push(c2[(j + 1 + k) % c2.len()]);
        }
    }
    out.extend_from_slice(&c1[i + 1..]);
    out
}

/// Insert all of `cycle` into `path` between path positions i and i+1,
/// entering at whichever end of cycle edge k touches path[i].
fn splice_into_path(cycle: &[Vertex], path: &[Vertex], k: usize, i: usize) -> Vec<Vertex> {
    let a = cycle[k];
    let mut out = Vec::with_capacity(cycle.len() + path.len());
    out.extend_from_slice(&path[..=i]);
    if path[i].adjacent(a) {
        for step in 0..cycle.len() {
            out.push(cycle[(k + cycle.len() - step) % cycle.len()]);
        }
    } else {
        for step in 0..cycle.len() {
            out.push(cycle[(k + 1 + step) % cycle.len()]);
        }
    }
    out.extend_from_slice(&path[i + 1..]);
    out
}
