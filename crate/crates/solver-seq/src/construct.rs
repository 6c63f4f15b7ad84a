//! Bound-attaining paths by divide and conquer.
//!
//! [`attain`] builds a longest path for instances the peel-and-trisect
//! pipeline does not cover: every Hamiltonian-class instance, all 3-row
//! rectangles, and the occasional core or merge layout the border machinery
//! gives up on. Three strategies nest: cut the rectangle in two across a
//! separating line whose two sub-bounds add up exactly, shed a border band
//! as a Hamiltonian cycle spliced back into the remainder's path, and — for
//! the bounded pocket of shapes that resist both — exhaustive search.

use crate::cycle::{hamiltonian_cycle, merge_cycle_path, Side};
use crate::small::solve_small;
use crate::strip::{solve_strip1, solve_strip2};
use grid_core::{upper_bound, v, Rect, Vertex};

/// Path from s to t in `rect` with vertex count exactly `upper_bound`.
pub fn attain(rect: Rect, s: Vertex, t: Vertex) -> Vec<Vertex> {
    assert!(rect.contains(s) && rect.contains(t) && s != t);
    let path = go(rect, s, t);
    debug_assert_eq!(path.len() as i64, upper_bound(rect, s, t));
    path
}

fn go(rect: Rect, s: Vertex, t: Vertex) -> Vec<Vertex> {
    if rect.m == 1 || rect.n == 1 {
        return solve_strip1(rect, s, t);
    }
    if rect.m == 2 || rect.n == 2 {
        return solve_strip2(rect, s, t);
    }
    if rect.m <= 3 && rect.n <= 3 {
        return solve_small(rect, s, t);
    }
    if let Some(path) = split(rect, s, t) {
        return path;
    }
    if let Some(path) = shed_band(rect, s, t) {
        return path;
    }
    pocket(rect, s, t)
}

/// Cut between two grid lines strictly separating s from t, crossing at one
/// edge, so that the two sub-bounds sum to the parent bound. Cut positions
/// are tried middle-first: balanced halves keep the recursion shallow and
/// the total work linear.
fn split(rect: Rect, s: Vertex, t: Vertex) -> Option<Vec<Vertex>> {
    let target = upper_bound(rect, s, t);
    let axes = if rect.m >= rect.n { [true, false] } else { [false, true] };
    for vertical in axes {
        if let Some(path) = split_axis(rect, s, t, target, vertical) {
            return Some(path);
        }
    }
    None
}

fn split_axis(rect: Rect, s: Vertex, t: Vertex, target: i64, vertical: bool) -> Option<Vec<Vertex>> {
    let (sc, tc) = if vertical { (s.x, t.x) } else { (s.y, t.y) };
    if sc == tc {
        return None;
    }
    let (a, b, swapped) = if sc < tc { (s, t, false) } else { (t, s, true) };
    let (lo, hi) = if vertical { (a.x, b.x - 1) } else { (a.y, b.y - 1) };
    let center = if vertical { rect.x0 + (rect.m - 1) / 2 } else { rect.y0 + (rect.n - 1) / 2 };
    for k in middle_out(lo, hi, center) {
        let (left, right) = halves(rect, k, vertical);
        let lanes = if vertical { rect.y0..=rect.y1() } else { rect.x0..=rect.x1() };
        for w in lanes {
            let (c, c2) = if vertical { (v(k, w), v(k + 1, w)) } else { (v(w, k), v(w, k + 1)) };
            if c == a || c2 == b {
                continue;
            }
            if upper_bound(left, a, c) + upper_bound(right, c2, b) == target {
                let mut path = go(left, a, c);
                path.extend(go(right, c2, b));
                if swapped {
                    path.reverse();
                }
                return Some(path);
            }
        }
    }
    None
}

fn halves(rect: Rect, k: i32, vertical: bool) -> (Rect, Rect) {
    if vertical {
        (
            Rect::at(rect.x0, rect.y0, k - rect.x0 + 1, rect.n),
            Rect::at(k + 1, rect.y0, rect.x1() - k, rect.n),
        )
    } else {
        (
            Rect::at(rect.x0, rect.y0, rect.m, k - rect.y0 + 1),
            Rect::at(rect.x0, k + 1, rect.m, rect.y1() - k),
        )
    }
}

/// k-values of lo..=hi ordered by distance from `center`.
fn middle_out(lo: i32, hi: i32, center: i32) -> impl Iterator<Item = i32> {
    let start = center.clamp(lo, hi);
    let mut out = vec![start];
    for d in 1..=(hi - lo) {
        if start + d <= hi {
            out.push(start + d);
        }
        if start - d >= lo {
            out.push(start - d);
        }
    }
    out.into_iter()
}

/// Both endpoints on one side: keep the smallest rectangle holding them
/// whose bound plus the shed band's full size meets the parent bound, cover
/// the band with a Hamiltonian cycle opened away from the kept part, and
/// splice it into the kept part's path. One shot per side; the kept part
/// hugs the endpoints, so the recursion never sheds twice in a row from the
/// same side.
fn shed_band(rect: Rect, s: Vertex, t: Vertex) -> Option<Vec<Vertex>> {
    let target = upper_bound(rect, s, t);
    // (side to shed from, local extent the kept part must reach)
    let plans = [
        (Side::Right, s.x.max(t.x) - rect.x0 + 1),
        (Side::Left, rect.x1() - s.x.min(t.x) + 1),
        (Side::Bottom, s.y.max(t.y) - rect.y0 + 1),
        (Side::Top, rect.y1() - s.y.min(t.y) + 1),
    ];
    for (side, extent) in plans {
        let along = match side {
            Side::Left | Side::Right => rect.m,
            Side::Top | Side::Bottom => rect.n,
        };
        let mut band = along - extent;
        band -= band % 2;
        while band >= 2 {
            let (kept, shed) = carve(rect, side, band);
            if upper_bound(kept, s, t) + shed.size() == target {
                let inner = go(kept, s, t);
                // Open the cycle on a side perpendicular to the border with
                // the kept part: its length is the band width, always even,
                // and the border side stays fully traversed for the splice.
                let open = match side {
                    Side::Left | Side::Right => Side::Top,
                    Side::Top | Side::Bottom => Side::Left,
                };
                let cycle = hamiltonian_cycle(shed, open)
                    .expect("shed band is even-sized with both sides above 1");
                if let Ok(path) = merge_cycle_path(&cycle, &inner) {
                    return Some(path);
                }
            }
            band -= 2;
        }
    }
    None
}

/// Split `rect` into the kept part and a `band`-wide block on `side`.
fn carve(rect: Rect, side: Side, band: i32) -> (Rect, Rect) {
    match side {
        Side::Right => (
            Rect::at(rect.x0, rect.y0, rect.m - band, rect.n),
            Rect::at(rect.x1() - band + 1, rect.y0, band, rect.n),
        ),
        Side::Left => (
            Rect::at(rect.x0 + band, rect.y0, rect.m - band, rect.n),
            Rect::at(rect.x0, rect.y0, band, rect.n),
        ),
        Side::Bottom => (
            Rect::at(rect.x0, rect.y0, rect.m, rect.n - band),
            Rect::at(rect.x0, rect.y1() - band + 1, rect.m, band),
        ),
        Side::Top => (
            Rect::at(rect.x0, rect.y0 + band, rect.m, rect.n - band),
            Rect::at(rect.x0, rect.y0, rect.m, band),
        ),
    }
}

/// Exhaustive fallback for the leftover shapes. These are small by
/// construction — splitting and shedding strip any instance whose endpoints
/// leave room along some axis — so a depth-first search for a bound-length
/// path returns quickly.
fn pocket(rect: Rect, s: Vertex, t: Vertex) -> Vec<Vertex> {
    assert!(
        rect.size() <= 64,
        "pocket search is reserved for bounded leftovers, got {rect} ({} vertices)",
        rect.size()
    );
    let target = upper_bound(rect, s, t) as usize;
    let idx = |p: Vertex| ((p.y - rect.y0) * rect.m + (p.x - rect.x0)) as u32;
    let mut path = vec![s];
    let mut seen: u64 = 1 << idx(s);
    assert!(
        extend(rect, t, target, &mut path, &mut seen, idx),
        "no bound-length path found in pocket {rect}"
    );
    path
}

fn extend(
    rect: Rect,
    t: Vertex,
    target: usize,
    path: &mut Vec<Vertex>,
    seen: &mut u64,
    idx: impl Fn(Vertex) -> u32 + Copy,
) -> bool {
    let cur = *path.last().unwrap();
    if cur == t {
        return path.len() == target;
    }
    let steps = [v(cur.x + 1, cur.y), v(cur.x, cur.y + 1), v(cur.x - 1, cur.y), v(cur.x, cur.y - 1)];
    for next in steps {
        if !rect.contains(next) || *seen & (1 << idx(next)) != 0 {
            continue;
        }
        // t closes the path; stepping onto it early wastes the tail.
        if next == t && path.len() + 1 != target {
            continue;
        }
        path.push(next);
        *seen |= 1 << idx(next);
        if extend(rect, t, target, path, seen, idx) {
            return true;
        }
        *seen &= !(1 << idx(next));
        path.pop();
    }
    false
}
