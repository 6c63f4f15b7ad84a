//! Closed pattern table for the 3x3 rectangle, the one case that is neither
//! a strip nor worth peeling.

use crate::strip::{solve_strip1, solve_strip2};
use grid_core::{upper_bound, v, Rect, Vertex};

/// Longest path in any rectangle with both sides at most 3. Strips defer to
/// the strip solvers; the 3x3 core is answered from a table of eight
/// endpoint-pair orbits under the symmetries of the square.
pub fn solve_small(rect: Rect, s: Vertex, t: Vertex) -> Vec<Vertex> {
    assert!(rect.m <= 3 && rect.n <= 3, "not a small rectangle: {rect}");
    assert!(rect.contains(s) && rect.contains(t) && s != t);
    if rect.m == 1 || rect.n == 1 {
        return solve_strip1(rect, s, t);
    }
    if rect.m == 2 || rect.n == 2 {
        return solve_strip2(rect, s, t);
    }
    let ls = rect.to_local(s);
    let lt = rect.to_local(t);
    let path: Vec<Vertex> = table_3x3(ls, lt).into_iter().map(|p| rect.to_global(p)).collect();
    debug_assert_eq!(path.len() as i64, upper_bound(rect, s, t));
    path
}

/// One representative per orbit: (s, t, path attaining the bound).
const ORBITS: [(Vertex, Vertex, &[Vertex]); 8] = [
    // Corner to corner along a side: Hamiltonian.
    (
        Vertex { x: 1, y: 1 },
        Vertex { x: 3, y: 1 },
        &[
            Vertex { x: 1, y: 1 },
            Vertex { x: 1, y: 2 },
            Vertex { x: 1, y: 3 },
            Vertex { x: 2, y: 3 },
            Vertex { x: 3, y: 3 },
            Vertex { x: 3, y: 2 },
            Vertex { x: 2, y: 2 },
            Vertex { x: 2, y: 1 },
            Vertex { x: 3, y: 1 },
        ],
    ),
    // Opposite corners: Hamiltonian serpentine.
    (
        Vertex { x: 1, y: 1 },
        Vertex { x: 3, y: 3 },
        &[
            Vertex { x: 1, y: 1 },
            Vertex { x: 2, y: 1 },
            Vertex { x: 3, y: 1 },
            Vertex { x: 3, y: 2 },
            Vertex { x: 2, y: 2 },
            Vertex { x: 1, y: 2 },
            Vertex { x: 1, y: 3 },
            Vertex { x: 2, y: 3 },
            Vertex { x: 3, y: 3 },
        ],
    ),
    // Corner to center: Hamiltonian spiral.
    (
        Vertex { x: 1, y: 1 },
        Vertex { x: 2, y: 2 },
        &[
            Vertex { x: 1, y: 1 },
            Vertex { x: 2, y: 1 },
            Vertex { x: 3, y: 1 },
            Vertex { x: 3, y: 2 },
            Vertex { x: 3, y: 3 },
            Vertex { x: 2, y: 3 },
            Vertex { x: 1, y: 3 },
            Vertex { x: 1, y: 2 },
            Vertex { x: 2, y: 2 },
        ],
    ),
    // Corner to adjacent edge midpoint: one vertex stays out.
    (
        Vertex { x: 1, y: 1 },
        Vertex { x: 2, y: 1 },
        &[
            Vertex { x: 1, y: 1 },
            Vertex { x: 1, y: 2 },
            Vertex { x: 1, y: 3 },
            Vertex { x: 2, y: 3 },
            Vertex { x: 3, y: 3 },
            Vertex { x: 3, y: 2 },
            Vertex { x: 2, y: 2 },
            Vertex { x: 2, y: 1 },
        ],
    ),
    // Corner to far edge midpoint: one vertex stays out.
    (
        Vertex { x: 1, y: 1 },
        Vertex { x: 3, y: 2 },
        &[
            Vertex { x: 1, y: 1 },
            Vertex { x: 1, y: 2 },
            Vertex { x: 1, y: 3 },
            Vertex { x: 2, y: 3 },
            Vertex { x: 2, y: 2 },
            Vertex { x: 2, y: 1 },
            Vertex { x: 3, y: 1 },
            Vertex { x: 3, y: 2 },
        ],
    ),
    // Edge midpoint to center: one vertex stays out.
    (
        Vertex { x: 2, y: 1 },
        Vertex { x: 2, y: 2 },
        &[
            Vertex { x: 2, y: 1 },
            Vertex { x: 1, y: 1 },
            Vertex { x: 1, y: 2 },
            Vertex { x: 1, y: 3 },
            Vertex { x: 2, y: 3 },
            Vertex { x: 3, y: 3 },
            Vertex { x: 3, y: 2 },
            Vertex { x: 2, y: 2 },
        ],
    ),
    // Midpoints of two adjacent sides: two vertices stay out.
    (
        Vertex { x: 2, y: 1 },
        Vertex { x: 1, y: 2 },
        &[
            Vertex { x: 2, y: 1 },
            Vertex { x: 3, y: 1 },
            Vertex { x: 3, y: 2 },
            Vertex { x: 3, y: 3 },
            Vertex { x: 2, y: 3 },
            Vertex { x: 2, y: 2 },
            Vertex { x: 1, y: 2 },
        ],
    ),
    // Midpoints of two opposite sides: two vertices stay out.
    (
        Vertex { x: 2, y: 1 },
        Vertex { x: 2, y: 3 },
        &[
            Vertex { x: 2, y: 1 },
            Vertex { x: 3, y: 1 },
            Vertex { x: 3, y: 2 },
            Vertex { x: 2, y: 2 },
            Vertex { x: 1, y: 2 },
            Vertex { x: 1, y: 3 },
            Vertex { x: 2, y: 3 },
        ],
    ),
];

fn d4_apply(tr: bool, fx: bool, fy: bool, p: Vertex) -> Vertex {
    let p = if tr { v(p.y, p.x) } else { p };
    let x = if fx { 4 - p.x } else { p.x };
    let y = if fy { 4 - p.y } else { p.y };
    v(x, y)
}

fn d4_unapply(tr: bool, fx: bool, fy: bool, p: Vertex) -> Vertex {
    let x = if fx { 4 - p.x } else { p.x };
    let y = if fy { 4 - p.y } else { p.y };
    if tr {
        v(y, x)
    } else {
        v(x, y)
    }
}

/// Find the symmetry carrying (s,t) onto a tabulated orbit representative and
/// pull the stored path back through it.
fn table_3x3(s: Vertex, t: Vertex) -> Vec<Vertex> {
    for (rs, rt, rpath) in ORBITS {
        for variant in 0..16 {
            let (tr, fx, fy, swap) =
                (variant & 1 != 0, variant & 2 != 0, variant & 4 != 0, variant & 8 != 0);
            let (a, b) = if swap { (t, s) } else { (s, t) };
            if d4_apply(tr, fx, fy, a) == rs && d4_apply(tr, fx, fy, b) == rt {
                let mut path: Vec<Vertex> =
                    rpath.iter().map(|&p| d4_unapply(tr, fx, fy, p)).collect();
                if swap {
                    path.reverse();
                }
                return path;
            }
        }
    }
    unreachable!("every 3x3 endpoint pair belongs to one of the eight orbits")
}
