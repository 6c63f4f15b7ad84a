//! Longest paths in 1- and 2-rectangles, the base cases everything else
//! reduces to.

use grid_core::{upper_bound, v, Rect, Vertex};

/// Longest path in a single row or column: the straight segment from s to t.
pub fn solve_strip1(rect: Rect, s: Vertex, t: Vertex) -> Vec<Vertex> {
    assert!(rect.m == 1 || rect.n == 1, "not a 1-rectangle: {rect}");
    assert!(rect.contains(s) && rect.contains(t) && s != t);
    let path = if rect.n == 1 {
        segment_x(s.x, t.x, s.y)
    } else {
        segment_y(s.y, t.y, s.x)
    };
    debug_assert_eq!(path.len() as i64, upper_bound(rect, s, t));
    path
}

/// Longest path in a 2-rectangle. One of four shapes applies: a U-turn for
/// same-column endpoints, a hook for diagonally adjacent ones, and a
/// wing-zigzag-wing sweep otherwise, skipping one vertex when the endpoint
/// colors force it.
pub fn solve_strip2(rect: Rect, s: Vertex, t: Vertex) -> Vec<Vertex> {
    assert!(rect.m == 2 || rect.n == 2, "not a 2-rectangle: {rect}");
    assert!(rect.contains(s) && rect.contains(t) && s != t);
    let transposed = rect.n != 2;
    let (m, ls, lt) = {
        let a = rect.to_local(s);
        let b = rect.to_local(t);
        if transposed {
            (rect.n, v(a.y, a.x), v(b.y, b.x))
        } else {
            (rect.m, a, b)
        }
    };
    let local = strip2_local(m, ls, lt);
    let path: Vec<Vertex> = local
        .into_iter()
        .map(|p| rect.to_global(if transposed { v(p.y, p.x) } else { p }))
        .collect();
    debug_assert_eq!(path.len() as i64, upper_bound(rect, s, t));
    path
}

/// Core 2-row construction on the canonical frame (m columns, rows 1 and 2).
fn strip2_local(m: i32, s: Vertex, t: Vertex) -> Vec<Vertex> {
    if s.x > t.x {
        let mx = |p: Vertex| v(m + 1 - p.x, p.y);
        let mut path = strip2_local(m, mx(s), mx(t));
        for p in &mut path {
            *p = mx(*p);
        }
        return path;
    }
    if s.x == t.x {
        return u_turn(m, s.x, s.y);
    }
    if s.x + 1 == t.x && s.y != t.y {
        return hook(m, s);
    }
    sweep(m, s, t)
}

/// Same-column endpoints: go around the longer of the two ends.
fn u_turn(m: i32, x: i32, sy: i32) -> Vec<Vertex> {
    let ty = flip(sy);
    let left = 2 * x;
    let right = 2 * (m - x) + 2;
    let mut path = Vec::new();
    if left >= right {
        path.extend(segment_x(x, 1, sy));
        path.extend(segment_x(1, x, ty));
    } else {
        path.extend(segment_x(x, m, sy));
        path.extend(segment_x(m, x, ty));
    }
    path
}

/// Diagonally adjacent endpoints: sweep around the longer end, finishing on
/// the neighbor column.
fn hook(m: i32, s: Vertex) -> Vec<Vertex> {
    let (x, sy) = (s.x, s.y);
    let ty = flip(sy);
    let left = 2 * x + 1;
    let right = 2 * (m - x) + 1;
    let mut path = Vec::new();
    if left >= right {
        path.extend(segment_x(x, 1, sy));
        path.extend(segment_x(1, x + 1, ty));
    } else {
        path.extend(segment_x(x, m, sy));
        path.extend(segment_x(m, x + 1, ty));
    }
    path
}

/// The general shape: cover everything left of s, zigzag across the middle,
/// cover everything right of t. When s and t have equal colors no full cover
/// exists; one vertex next to s is skipped to repair the parity.
fn sweep(m: i32, s: Vertex, t: Vertex) -> Vec<Vertex> {
    let skip = (s.x + s.y) % 2 == (t.x + t.y) % 2;
    let mut path = Vec::new();
    path.extend(segment_x(s.x, 1, s.y));
    path.extend(segment_x(1, s.x, flip(s.y)));
    let mut row = flip(s.y);
    let mut first_mid = s.x + 1;
    if skip {
        // Pass straight under the skipped vertex (s.x + 1, s.y).
        path.push(v(s.x + 1, row));
        first_mid += 1;
    }
    for x in first_mid..t.x {
        path.push(v(x, row));
        row = flip(row);
        path.push(v(x, row));
    }
    path.extend(segment_x(t.x, m, row));
    path.extend(segment_x(m, t.x, flip(row)));
    debug_assert_eq!(*path.last().unwrap(), t, "sweep must land on t");
    path
}

fn flip(y: i32) -> i32 {
    3 - y
}

/// Inclusive horizontal run at height y, in either direction.
pub(crate) fn segment_x(from: i32, to: i32, y: i32) -> Vec<Vertex> {
    if from <= to {
        (from..=to).map(|x| v(x, y)).collect()
    } else {
        (to..=from).rev().map(|x| v(x, y)).collect()
    }
}

/// Inclusive vertical run at column x.
pub(crate) fn segment_y(from: i32, to: i32, x: i32) -> Vec<Vertex> {
    if from <= to {
        (from..=to).map(|y| v(x, y)).collect()
    } else {
        (to..=from).rev().map(|y| v(x, y)).collect()
    }
}
