//! Corner-to-corner paths in arbitrary rectangles. These appear as the middle
//! segment of a trisection and as building blocks of merged cycles, and they
//! must attain the bound: all of the rectangle, or all but one vertex when
//! the corner colors forbid a full cover.

use crate::strip::{segment_x, segment_y, solve_strip2};
use grid_core::{upper_bound, v, Rect, Vertex};

/// Path between two distinct corners of `rect` whose vertex count equals the
/// longest-path bound (mn, or mn-1 when no Hamiltonian path exists).
pub fn corner_ham_path(rect: Rect, a: Vertex, b: Vertex) -> Vec<Vertex> {
    assert!(is_corner(rect, a) && is_corner(rect, b) && a != b, "{a},{b} must be corners of {rect}");
    // Width-2 rectangles have their own exact construction; the serpentine
    // shapes below need room to turn.
    if rect.m == 2 || rect.n == 2 {
        return solve_strip2(rect, a, b);
    }
    let la = rect.to_local(a);
    let lb = rect.to_local(b);
    let path: Vec<Vertex> =
        corner_local(rect.m, rect.n, la, lb).into_iter().map(|p| rect.to_global(p)).collect();
    debug_assert_eq!(path.len() as i64, upper_bound(rect, a, b));
    path
}

fn is_corner(rect: Rect, p: Vertex) -> bool {
    rect.contains(p) && (p.x == rect.x0 || p.x == rect.x1()) && (p.y == rect.y0 || p.y == rect.y1())
}

/// Local frame dispatcher: reflect so the start is (1,1), transpose the
/// same-column case onto the same-row one, then build.
fn corner_local(m: i32, n: i32, s: Vertex, t: Vertex) -> Vec<Vertex> {
    if s.x != 1 {
        return mirror_x(m, corner_local(m, n, mirror_x_v(m, s), mirror_x_v(m, t)));
    }
    if s.y != 1 {
        return mirror_y(n, corner_local(m, n, mirror_y_v(n, s), mirror_y_v(n, t)));
    }
    if t == v(1, n) {
        return transpose(corner_local(n, m, v(1, 1), v(n, 1)));
    }
    if t == v(m, 1) {
        same_row(m, n)
    } else {
        diagonal(m, n)
    }
}

/// (1,1) to (m,1).
fn same_row(m: i32, n: i32) -> Vec<Vertex> {
    if n == 1 {
        return segment_x(1, m, 1);
    }
    if m % 2 == 0 {
        return column_serpentine(1, m, n);
    }
    if n % 2 == 1 {
        // Down the first column, then sweep the rest upward row by row.
        let mut path = segment_y(1, n, 1);
        for y in (1..=n).rev() {
            if (n - y) % 2 == 0 {
                path.extend(segment_x(2, m, y));
            } else {
                path.extend(segment_x(m, 2, y));
            }
        }
        return path;
    }
    // Odd width, even height: no full cover exists. Serpentine most of the
    // rectangle, then snake up the last two columns leaving out (m-1, 1).
    let mut path = if m >= 5 { column_serpentine(1, m - 3, n) } else { Vec::new() };
    path.extend(segment_y(1, n, m - 2));
    for y in (1..=n).rev() {
        if y == 1 {
            path.push(v(m, 1));
        } else if (n - y) % 2 == 0 {
            path.push(v(m - 1, y));
            path.push(v(m, y));
        } else {
            path.push(v(m, y));
            path.push(v(m - 1, y));
        }
    }
    path
}

/// (1,1) to (m,n).
fn diagonal(m: i32, n: i32) -> Vec<Vertex> {
    if m == 1 {
        return segment_y(1, n, 1);
    }
    if n == 1 {
        return segment_x(1, m, 1);
    }
    if n % 2 == 1 {
        return row_serpentine(m, n);
    }
    if m % 2 == 1 {
        return column_serpentine(1, m, n);
    }
    // Both even: equal corner colors, so one vertex must stay out. Spend the
    // first column, then cross the rest corner to corner along the bottom.
    let mut path = segment_y(1, n, 1);
    let rest = corner_local(m - 1, n, v(1, n), v(m - 1, n));
    path.extend(rest.into_iter().map(|p| v(p.x + 1, p.y)));
    path
}

/// Boustrophedon over columns x0..=x1, starting at (x0,1), width even so it
/// ends at (x1,1).
fn column_serpentine(x0: i32, x1: i32, n: i32) -> Vec<Vertex> {
    let mut path = Vec::new();
    for x in x0..=x1 {
        if (x - x0) % 2 == 0 {
            path.extend(segment_y(1, n, x));
        } else {
            path.extend(segment_y(n, 1, x));
        }
    }
    path
}

/// Boustrophedon over rows, (1,1) to (m,n) for odd n.
fn row_serpentine(m: i32, n: i32) -> Vec<Vertex> {
    let mut path = Vec::new();
    for y in 1..=n {
        if y % 2 == 1 {
            path.extend(segment_x(1, m, y));
        } else {
            path.extend(segment_x(m, 1, y));
        }
    }
    path
}

fn mirror_x_v(m: i32, p: Vertex) -> Vertex {
    v(m + 1 - p.x, p.y)
}

fn mirror_y_v(n: i32, p: Vertex) -> Vertex {
    v(p.x, n + 1 - p.y)
}

fn mirror_x(m: i32, mut path: Vec<Vertex>) -> Vec<Vertex> {
    for p in &mut path {
        *p = mirror_x_v(m, *p);
    }
    path
}

fn mirror_y(n: i32, mut path: Vec<Vertex>) -> Vec<Vertex> {
    for p in &mut path {
        *p = mirror_y_v(n, *p);
    }
    path
}

fn transpose(mut path: Vec<Vertex>) -> Vec<Vertex> {
    for p in &mut path {
        *p = v(p.y, p.x);
    }
    path
}
