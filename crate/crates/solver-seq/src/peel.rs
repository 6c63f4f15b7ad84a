//! Peeling: splitting a rectangle into four even-sized border parts and a
//! core that still contains both endpoints near opposite sides.

use grid_core::{upper_bound, Rect, Vertex};
use std::fmt;

/// Five disjoint rectangles covering the parent: two column blocks (R1 left,
/// R2 right), two row blocks (R3 above, R4 below), and the core R5 holding
/// s and t. Parts other than R5 may be empty.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Peeling {
    pub r1: Rect,
    pub r2: Rect,
    pub r3: Rect,
    pub r4: Rect,
    pub r5: Rect,
}

impl Peeling {
    /// The four border parts in merge order.
    pub fn ring(&self) -> [Rect; 4] {
        [self.r3, self.r1, self.r4, self.r2]
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct AdjustmentFailed;

impl fmt::Display for AdjustmentFailed {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "no adjustment move restores properness")
    }
}

impl std::error::Error for AdjustmentFailed {}

/// Cut positions in local coordinates: R1 is columns 1..=c1, R2 is columns
/// c2..=m, R3 is rows 1..=c3, R4 is rows c4..=n, R5 is what remains.
fn cuts(rect: Rect, s: Vertex, t: Vertex) -> (i32, i32, i32, i32) {
    let ls = rect.to_local(s);
    let lt = rect.to_local(t);
    let c1 = if ls.x % 2 == 0 { ls.x - 2 } else { ls.x - 1 };
    let c2 = if (lt.x - rect.m) % 2 == 0 { lt.x + 1 } else { lt.x + 2 };
    let (ymin, ymax) = (ls.y.min(lt.y), ls.y.max(lt.y));
    let c3 = if ymin % 2 == 0 { ymin - 2 } else { ymin - 1 };
    let c4 = if (ymax - rect.n) % 2 == 0 { ymax + 1 } else { ymax + 2 };
    (c1, c2, c3, c4)
}

/// The column cuts normally run the full height and the row cuts only span
/// the middle band; with an odd width and both endpoints in one column the
/// core is too narrow for the row blocks, so the order flips.
fn reversed_order(rect: Rect, s: Vertex, t: Vertex) -> bool {
    rect.m % 2 == 1 && s.x == t.x
}

fn assemble(rect: Rect, c: (i32, i32, i32, i32), reversed: bool) -> Peeling {
    let (c1, c2, c3, c4) = c;
    let (m, n) = (rect.m, rect.n);
    let sub = |xa: i32, xb: i32, ya: i32, yb: i32| {
        if xb < xa || yb < ya {
            Rect::empty()
        } else {
            Rect::at(rect.x0 + xa - 1, rect.y0 + ya - 1, xb - xa + 1, yb - ya + 1)
        }
    };
    let r5 = sub(c1 + 1, c2 - 1, c3 + 1, c4 - 1);
    if reversed {
        Peeling {
            r1: sub(1, c1, c3 + 1, c4 - 1),
            r2: sub(c2, m, c3 + 1, c4 - 1),
            r3: sub(1, m, 1, c3),
            r4: sub(1, m, c4, n),
            r5,
        }
    } else {
        Peeling {
            r1: sub(1, c1, 1, n),
            r2: sub(c2, m, 1, n),
            r3: sub(c1 + 1, c2 - 1, 1, c3),
            r4: sub(c1 + 1, c2 - 1, c4, n),
            r5,
        }
    }
}

/// Peel `rect` around the endpoints. Requires a canonical instance: width at
/// least height, height above 2, s weakly left of t.
pub fn peel(rect: Rect, s: Vertex, t: Vertex) -> Peeling {
    assert!(rect.m >= rect.n && rect.n > 2, "peel expects a canonical non-strip rectangle");
    assert!(rect.contains(s) && rect.contains(t) && s != t);
    assert!(s.x <= t.x, "peel expects s weakly left of t");
    let peeling = assemble(rect, cuts(rect, s, t), reversed_order(rect, s, t));
    debug_assert!(structurally_valid(&peeling, rect, s, t));
    peeling
}

/// A peeling is proper when solving the core at its own bound accounts for
/// every vertex the parent bound promises: |R1|+|R2|+|R3|+|R4|+U(R5,s,t)
/// must equal U(R,s,t).
pub fn is_proper(peeling: &Peeling, rect: Rect, s: Vertex, t: Vertex) -> bool {
    let ring: i64 = peeling.ring().iter().map(|r| r.size()).sum();
    ring + upper_bound(peeling.r5, s, t) == upper_bound(rect, s, t)
}

/// Repair an improper peeling by sliding cuts: try giving R5 one or two
/// columns from R1 or R2, one or two rows from R3 or R4, or handing R5's
/// outermost row to R4 or R3, in that order, keeping the first move that
/// yields a structurally valid, proper peeling. A single move is not always
/// enough (a core collapsed onto one shared row can need both axes
/// widened), so combinations of two listed moves follow in the same order.
pub fn adjust_peeling(
    peeling: Peeling,
    rect: Rect,
    s: Vertex,
    t: Vertex,
) -> Result<Peeling, AdjustmentFailed> {
    if is_proper(&peeling, rect, s, t) {
        return Ok(peeling);
    }
    let c1 = peeling.r5.x0 - rect.x0;
    let c2 = c1 + peeling.r5.m + 1;
    let c3 = peeling.r5.y0 - rect.y0;
    let c4 = c3 + peeling.r5.n + 1;
    let reversed = reversed_order(rect, s, t);
    const MOVES: [(i32, i32, i32, i32); 10] = [
        (-1, 0, 0, 0),
        (-2, 0, 0, 0),
        (0, 1, 0, 0),
        (0, 2, 0, 0),
        (0, 0, -1, 0),
        (0, 0, -2, 0),
        (0, 0, 0, 1),
        (0, 0, 0, 2),
        (0, 0, 0, -1),
        (0, 0, 1, 0),
    ];
    let try_delta = |d: (i32, i32, i32, i32)| -> Option<Peeling> {
        let c = (c1 + d.0, c2 + d.1, c3 + d.2, c4 + d.3);
        if c.0 < 0 || c.1 > rect.m + 1 || c.2 < 0 || c.3 > rect.n + 1 {
            return None;
        }
        if c.1 - c.0 < 2 || c.3 - c.2 < 2 {
            return None;
        }
        let candidate = assemble(rect, c, reversed);
        (structurally_valid(&candidate, rect, s, t) && is_proper(&candidate, rect, s, t))
            .then_some(candidate)
    };
    for d in MOVES {
        if let Some(fixed) = try_delta(d) {
            return Ok(fixed);
        }
    }
    for a in MOVES {
        for b in MOVES {
            let d = (a.0 + b.0, a.1 + b.1, a.2 + b.2, a.3 + b.3);
            if d == (0, 0, 0, 0) {
                continue;
            }
            if let Some(fixed) = try_delta(d) {
                return Ok(fixed);
            }
        }
    }
    Err(AdjustmentFailed)
}

/// The shape invariants every peeling must satisfy (endpoint position within
/// the core aside): a disjoint cover, even-sized ring parts with both sides
/// above 1, core side parities matching the parent, and endpoint colors
/// unchanged in core-local coordinates.
fn structurally_valid(peeling: &Peeling, rect: Rect, s: Vertex, t: Vertex) -> bool {
    let r5 = peeling.r5;
    if r5.is_empty() || !r5.contains(s) || !r5.contains(t) {
        return false;
    }
    let mut total = r5.size();
    for part in peeling.ring() {
        if part.is_empty() {
            continue;
        }
        total += part.size();
        if part.size() % 2 != 0 || part.m < 2 || part.n < 2 {
            return false;
        }
    }
    if total != rect.size() {
        return false;
    }
    if r5.m % 2 != rect.m % 2 || r5.n % 2 != rect.n % 2 {
        return false;
    }
    let (ls, lt) = (r5.to_local(s), r5.to_local(t));
    // The endpoints must stay antipodes of the core, each nearly touching a
    // vertical boundary. Without this, cut sliding could "repair" properness
    // by swallowing the whole rectangle into a core the band stages cannot
    // cut down.
    if ls.x > 2 || lt.x < r5.m - 1 {
        return false;
    }
    ls.color() == rect.to_local(s).color() && lt.color() == rect.to_local(t).color()
}
