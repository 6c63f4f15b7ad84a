//! Trisecting the peeled core into two 2-rectangle end bands and a middle
//! block, and picking the junction vertices where the path hands over from
//! band to band.

use crate::corner::corner_ham_path;
use crate::small::solve_small;
use crate::strip::{solve_strip1, solve_strip2};
use grid_core::{upper_bound, v, Rect, Vertex};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Orientation {
    /// Bands are row ranges: Rs and Rt are 2 rows tall.
    Horizontal,
    /// Bands are column ranges: Rs and Rt are 2 columns wide.
    Vertical,
}

/// A partition of the core into the band holding s, the band holding t, and
/// the (possibly empty) middle block between them.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Trisection {
    pub rs: Rect,
    pub rm: Rect,
    pub rt: Rect,
    pub orientation: Orientation,
}

/// Where the three sub-paths meet: the s-band path ends at p, the middle
/// path (when a middle exists) runs corner to corner from m_enter next to p
/// through m_exit next to q, and the t-band path starts at q.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct JunctionAssignment {
    pub p: Vertex,
    pub q: Vertex,
    pub m_enter: Option<Vertex>,
    pub m_exit: Option<Vertex>,
}

/// Which band layouts separate the endpoints: horizontal needs the core at
/// least 4 tall with s and t in opposite 2-row end bands, vertical the same
/// on columns (s left, as normalization orders it).
fn layouts(r5: Rect, s: Vertex, t: Vertex) -> (bool, bool) {
    let ls = r5.to_local(s);
    let lt = r5.to_local(t);
    let valid_h =
        r5.n >= 4 && ((ls.y <= 2 && lt.y >= r5.n - 1) || (lt.y <= 2 && ls.y >= r5.n - 1));
    let valid_v = r5.m >= 4 && ls.x <= 2 && lt.x >= r5.m - 1;
    (valid_h, valid_v)
}

/// Split the core into bands. Cuts run horizontally when the core is at
/// least 4 tall and the endpoints sit in opposite end bands, vertically
/// otherwise; with both sides at least 4 and both layouts available the
/// horizontal one is preferred.
pub fn trisect(r5: Rect, s: Vertex, t: Vertex) -> Trisection {
    assert!(r5.contains(s) && r5.contains(t) && s != t);
    let (m5, n5) = (r5.m, r5.n);
    assert!(m5.max(n5) > 3 && m5.min(n5) > 2, "trisection applies only above the base cases");
    let (valid_h, valid_v) = layouts(r5, s, t);
    let horizontal = if n5 >= 4 {
        if !valid_h {
            assert!(valid_v, "no band layout separates {s} and {t} in {r5}");
        }
        valid_h
    } else {
        if !valid_v {
            assert!(valid_h, "no band layout separates {s} and {t} in {r5}");
        }
        !valid_v
    };
    oriented(r5, s, horizontal)
}

/// Build the band partition for one orientation (assumed valid).
fn oriented(r5: Rect, s: Vertex, horizontal: bool) -> Trisection {
    let (m5, n5) = (r5.m, r5.n);
    let band_y = |ya: i32, yb: i32| Rect::at(r5.x0, r5.y0 + ya - 1, m5, yb - ya + 1);
    let band_x = |xa: i32, xb: i32| Rect::at(r5.x0 + xa - 1, r5.y0, xb - xa + 1, n5);
    if horizontal {
        let s_top = r5.to_local(s).y <= 2;
        let top = band_y(1, 2);
        let mid = if n5 > 4 { band_y(3, n5 - 2) } else { Rect::empty() };
        let bottom = band_y(n5 - 1, n5);
        Trisection {
            rs: if s_top { top } else { bottom },
            rm: mid,
            rt: if s_top { bottom } else { top },
            orientation: Orientation::Horizontal,
        }
    } else {
        let mid = if m5 > 4 { band_x(3, m5 - 2) } else { Rect::empty() };
        Trisection {
            rs: band_x(1, 2),
            rm: mid,
            rt: band_x(m5 - 1, m5),
            orientation: Orientation::Vertical,
        }
    }
}

/// The row (or column) of `band` nearest to the rest of the core.
fn facing_line(band: Rect, other: Rect, horizontal: bool) -> i32 {
    if horizontal {
        if band.y0 < other.y0 {
            band.y1()
        } else {
            band.y0
        }
    } else if band.x0 < other.x0 {
        band.x1()
    } else {
        band.x0
    }
}

/// Search the constant-size candidate set for junction vertices: p must be a
/// corner of Rs on its facing line, q a corner of Rt likewise, the entry and
/// exit corners of the middle block sit in the same columns (rows), and the
/// three sub-bounds must add up to the bound of the whole core. Returns the
/// lexicographically first (p,q) that works, or nothing in the one known
/// exceptional layout (core 4 deep, empty middle, endpoints on the facing
/// lines).
pub fn find_junctions(
    tri: &Trisection,
    r5: Rect,
    s: Vertex,
    t: Vertex,
) -> Option<JunctionAssignment> {
    let target = upper_bound(r5, s, t);
    let horizontal = tri.orientation == Orientation::Horizontal;
    let fs = facing_line(tri.rs, tri.rt, horizontal);
    let ft = facing_line(tri.rt, tri.rs, horizontal);
    let corners = |rect: Rect, line: i32| -> [Vertex; 2] {
        if horizontal {
            [v(rect.x0, line), v(rect.x1(), line)]
        } else {
            [v(line, rect.y0), v(line, rect.y1())]
        }
    };
    for p in corners(tri.rs, fs) {
        if p == s {
            continue;
        }
        for q in corners(tri.rt, ft) {
            if q == t {
                continue;
            }
            let (m_enter, m_exit) = if tri.rm.is_empty() {
                if !p.adjacent(q) {
                    continue;
                }
                (None, None)
            } else {
                let enter_line = facing_line(tri.rm, tri.rs, horizontal);
                let exit_line = facing_line(tri.rm, tri.rt, horizontal);
                let (me, mx) = if horizontal {
                    (v(p.x, enter_line), v(q.x, exit_line))
                } else {
                    (v(enter_line, p.y), v(exit_line, q.y))
                };
                if me == mx {
                    continue;
                }
                (Some(me), Some(mx))
            };
            let mut total = upper_bound(tri.rs, s, p) + upper_bound(tri.rt, q, t);
            if let (Some(me), Some(mx)) = (m_enter, m_exit) {
                total += upper_bound(tri.rm, me, mx);
            }
            if total == target {
                return Some(JunctionAssignment { p, q, m_enter, m_exit });
            }
        }
    }
    None
}

/// Fallback for the junction-free layout: the two bands face each other
/// directly and the path must cross between them at an interior border
/// column (row). Scans the interior crossings for one where the two band
/// bounds add up to the core bound, then builds both band paths.
pub fn solve_no_junction(rs: Rect, rt: Rect, s: Vertex, t: Vertex) -> Vec<Vertex> {
    try_no_junction(rs, rt, s, t)
        .expect("an interior crossing attains the bound in the junction-free layout")
}

fn try_no_junction(rs: Rect, rt: Rect, s: Vertex, t: Vertex) -> Option<Vec<Vertex>> {
    let horizontal = rs.x0 == rt.x0 && rs.m == rt.m;
    let r5 = rs_union(rs, rt, horizontal);
    let target = upper_bound(r5, s, t);
    let fs = facing_line(rs, rt, horizontal);
    let ft = facing_line(rt, rs, horizontal);
    let interior: Vec<(Vertex, Vertex)> = if horizontal {
        (rs.x0 + 1..rs.x1()).map(|x| (v(x, fs), v(x, ft))).collect()
    } else {
        (rs.y0 + 1..rs.y1()).map(|y| (v(fs, y), v(ft, y))).collect()
    };
    for (cross_s, cross_t) in interior {
        if cross_s == s || cross_t == t {
            continue;
        }
        if upper_bound(rs, s, cross_s) + upper_bound(rt, cross_t, t) == target {
            let mut path = solve_strip2(rs, s, cross_s);
            path.extend(solve_strip2(rt, cross_t, t));
            return Some(path);
        }
    }
    None
}

fn rs_union(rs: Rect, rt: Rect, horizontal: bool) -> Rect {
    if horizontal {
        Rect::at(rs.x0, rs.y0.min(rt.y0), rs.m, rs.n + rt.n)
    } else {
        Rect::at(rs.x0.min(rt.x0), rs.y0, rs.m + rt.m, rs.n)
    }
}

/// Longest path in the core: strips and the 3x3 go straight to their
/// constructions; everything else is trisected, joined at the junctions, or
/// routed through the junction-free crossing. The preferred band layout is
/// tried first and the perpendicular one second, since junction corners can
/// carry the wrong color in one orientation yet work in the other. A core
/// that resists both layouts returns nothing; the caller falls back to the
/// general constructor.
pub fn solve_core(r5: Rect, s: Vertex, t: Vertex) -> Option<Vec<Vertex>> {
    if r5.m == 1 || r5.n == 1 {
        return Some(solve_strip1(r5, s, t));
    }
    if r5.m == 2 || r5.n == 2 {
        return Some(solve_strip2(r5, s, t));
    }
    if r5.m <= 3 && r5.n <= 3 {
        return Some(solve_small(r5, s, t));
    }
    let (valid_h, valid_v) = layouts(r5, s, t);
    let order = [(valid_h, true), (valid_v, false)];
    for (_, horizontal) in order.iter().filter(|(valid, _)| *valid) {
        let tri = oriented(r5, s, *horizontal);
        if let Some(j) = find_junctions(&tri, r5, s, t) {
            let mut path = solve_strip2(tri.rs, s, j.p);
            if let (Some(me), Some(mx)) = (j.m_enter, j.m_exit) {
                debug_assert!(j.p.adjacent(me) && mx.adjacent(j.q));
                path.extend(middle_path(tri.rm, me, mx));
            } else {
                debug_assert!(j.p.adjacent(j.q));
            }
            path.extend(solve_strip2(tri.rt, j.q, t));
            return Some(path);
        }
        if tri.rm.is_empty() {
            if let Some(path) = try_no_junction(tri.rs, tri.rt, s, t) {
                return Some(path);
            }
        }
    }
    None
}

/// The middle block is always entered and left at corners.
fn middle_path(rm: Rect, enter: Vertex, exit: Vertex) -> Vec<Vertex> {
    if rm.m == 1 || rm.n == 1 {
        solve_strip1(rm, enter, exit)
    } else {
        corner_ham_path(rm, enter, exit)
    }
}
