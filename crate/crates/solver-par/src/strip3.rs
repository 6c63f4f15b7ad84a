//! Paths through a three-lane strip.
//!
//! Coordinates are (u, v) with u along 1..=k and v in {1, 2, 3} across; lane
//! 2 is the middle. The evaluator resolves a requested vertex count into one
//! composite shape and then answers per-cell successor queries in constant
//! time, like the two-lane module it builds on.
//!
//! Shape grammar for separated endpoints (different columns):
//!
//! * an end-block tour over the columns up to each endpoint: a run along
//!   the endpoint's lane to the strip edge plus a two-lane sub-path over
//!   the remaining lanes. Each tour enters at its endpoint and leaves on a
//!   chosen lane of its boundary column, shedding a controlled number of
//!   cells.
//! * a middle of full columns covered by vertical three-cell runs that
//!   alternate direction. The alternation fixes the leaving lane's parity;
//!   a two-column interchange flips that parity without dropping cells, a
//!   straight pass through one column flips it for two dropped cells, and a
//!   one-column shear enters or leaves the middle on the center lane for
//!   one dropped cell.
//!
//! Endpoints sharing a column are routed as two one-sided tours stitched
//! through the shared column, in either side order.

use crate::strip2::{self, DuoSpec, SkipEnd};

pub type Cell = (i32, i32);

#[derive(Debug, Clone, Copy)]
pub struct TrioSpec {
    pub k: i32,
    pub a: Cell,
    pub b: Cell,
    /// Requested number of vertices on the path, endpoints included.
    pub len: i64,
}

// ---------------------------------------------------------------------------
// End-block tours.
//
// A tour covers the block of columns 1..=c entering at (c, p) and leaving at
// (c, q), p != q, visiting 3c - sigma cells. For c == 1 the tour is the
// column itself. Otherwise: entering on an outer lane p, run along p to
// column 1, cross to the middle, and cover the remaining two lanes with a
// two-lane path ending at the exit; entering on the middle lane, cover the
// middle and far lane first and leave the near cross to the end. Skips are
// delegated to the two-lane path.
// ---------------------------------------------------------------------------

/// Map a lane pair {2, o} onto two-lane coordinates: lane 2 is track 1.
#[inline]
fn to_duo(v: i32) -> i32 {
    if v == 2 {
        1
    } else {
        2
    }
}

fn ctour_duo(c: i32, p: i32, q: i32, sigma: i32) -> Option<DuoSpec> {
    let len = (3 * c - sigma) as i64 - c as i64;
    if p != 2 {
        // Lane-p run first, then the two-lane path from (1, lane 2) to the
        // exit, which is (c, q) itself.
        Some(DuoSpec { k: c, a: (1, 1), b: (c, to_duo(q)), len, skew: SkipEnd::NearB })
    } else {
        // Two-lane path from the entry (c, lane 2) down to (1, lane 2),
        // then cross to lane q and run back along it.
        Some(DuoSpec { k: c, a: (c, 1), b: (1, 1), len, skew: SkipEnd::NearB })
    }
}

fn ctour_ok(c: i32, p: i32, q: i32, sigma: i32) -> bool {
    debug_assert!(p != q);
    if sigma < 0 {
        return false;
    }
    if c == 0 {
        return false;
    }
    if c == 1 {
        // The single column: opposite outer lanes pass through the middle
        // cell; adjacent lanes drop the third cell.
        return if (p - q).abs() == 2 { sigma == 0 } else { sigma == 1 };
    }
    let spec = ctour_duo(c, p, q, sigma).unwrap();
    strip2::duo_feasible(spec.k, spec.a, spec.b, spec.len)
}

/// Successor within the tour. `None` at the exit cell (c, q) and on skipped
/// cells; the caller splices the exit onto the next region.
fn ctour_succ(c: i32, p: i32, q: i32, sigma: i32, cell: Cell) -> Option<Cell> {
    let (u, v) = cell;
    debug_assert!(u >= 1 && u <= c);
    if c == 1 {
        if (p - q).abs() == 2 {
            // p -> 2 -> q.
            return if v == p {
                Some((1, 2))
            } else if v == 2 {
                Some((1, q))
            } else {
                None
            };
        }
        return if v == p { Some((1, q)) } else { None };
    }
    let o = if p != 2 { 4 - p } else { 4 - q };
    let spec = ctour_duo(c, p, q, sigma).unwrap();
    let duo_of = |(du, dv): Cell| -> Cell { (du, if dv == 1 { 2 } else { o }) };
    if p != 2 {
        if v == p {
            return if u > 1 { Some((u - 1, p)) } else { Some((1, 2)) };
        }
        // Two-lane region over lanes {2, o}.
        let d = strip2::duo_succ(&spec, (u, to_duo(v)))?;
        Some(duo_of(d))
    } else {
        if v == q {
            return if u < c { Some((u + 1, q)) } else { None };
        }
        match strip2::duo_succ(&spec, (u, to_duo(v))) {
            Some(d) => Some(duo_of(d)),
            // The two-lane path ends at (1, lane 2); cross onto lane q.
            None => {
                if (u, v) == (1, 2) {
                    Some((1, q))
                } else {
                    None
                }
            }
        }
    }
}

// ---------------------------------------------------------------------------
// Resolution.
// ---------------------------------------------------------------------------

#[derive(Debug, Clone, Copy)]
struct SepPlan {
    e_a: i32,
    e_b: i32,
    /// Serp entry lane when the entry is sheared off the middle lane.
    z1: i32,
    gadget: bool,
    /// Straight pass through the first middle column (two dropped cells).
    pass: bool,
    sa: i32,
    sb: i32,
}

#[derive(Debug, Clone, Copy)]
struct ColPlan {
    right_first: bool,
    sl: i32,
    sr: i32,
}

/// Three crossings of the cut just right of a's column, lanes va, x2, x3 in
/// that order. The right side is picked up twice (a short stub and the rest),
/// the left remainder once, each piece a same-column sub-problem. Needed
/// whenever a parity obstruction rules every single-crossing split out.
#[derive(Debug, Clone, Copy)]
struct TriplePlan {
    x2: i32,
    x3: i32,
    s2: i32,
    s3: i32,
    /// Vertex count of the right-tail sub-path when b lies beyond the stub.
    len4: i64,
}

#[derive(Debug, Clone, Copy)]
enum Kind {
    Single,
    Sep(SepPlan),
    Col(ColPlan),
    Triple(TriplePlan),
}

#[derive(Debug, Clone, Copy)]
struct Resolved {
    flip_u: bool,
    flip_v: bool,
    a: Cell,
    b: Cell,
    kind: Kind,
}

/// Column routes for shared-column endpoints, after normalizing a above b:
/// the tours' entry/exit lanes and how the shared column is threaded.
/// Returns (left entry, left exit, right entry, right exit).
fn col_lanes(av: i32, bv: i32, right_first: bool) -> (i32, i32, i32, i32) {
    match (av, bv, right_first) {
        (1, 3, false) => (1, 2, 2, 3),
        (1, 3, true) => (2, 3, 1, 2),
        (1, 2, false) => (1, 3, 3, 2),
        (1, 2, true) => (3, 2, 1, 3),
        (2, 3, false) => (2, 1, 1, 3),
        (2, 3, true) => (1, 3, 2, 1),
        _ => unreachable!("lanes are normalized to av < bv"),
    }
}

fn resolve(spec: &TrioSpec) -> Option<Resolved> {
    let TrioSpec { k, mut a, mut b, len } = *spec;
    debug_assert!(a != b);
    debug_assert!(1 <= a.0 && a.0 <= k && 1 <= b.0 && b.0 <= k);
    debug_assert!((1..=3).contains(&a.1) && (1..=3).contains(&b.1));
    let deficit64 = 3 * k as i64 - len;
    if deficit64 < 0 || deficit64 > 64 {
        return None;
    }
    let d = deficit64 as i32;

    let flip_u = a.0 > b.0;
    if flip_u {
        a = (k + 1 - a.0, a.1);
        b = (k + 1 - b.0, b.1);
    }
    let flip_v = a.0 == b.0 && a.1 > b.1;
    if flip_v {
        a = (a.0, 4 - a.1);
        b = (b.0, 4 - b.1);
    }
    let (au, av) = a;
    let (bu, bv) = b;

    if k == 1 {
        let need = if (av - bv).abs() == 2 { 0 } else { 1 };
        if d != need {
            return None;
        }
        return Some(Resolved { flip_u, flip_v, a, b, kind: Kind::Single });
    }

    if au == bu {
        // Shared column: a one-sided tour on each side, stitched through
        // the free cell(s) of the column. A missing side collapses to a
        // direct lane move, which must then be a single lane step.
        for right_first in [false, true] {
            let (pl, ql, pr, qr) = col_lanes(av, bv, right_first);
            let cl = au - 1;
            let cr = k - au;
            let left_ok = |s: i32| if cl == 0 { s == 0 && (pl - ql).abs() == 1 } else { ctour_ok(cl, pl, ql, s) };
            let right_ok = |s: i32| if cr == 0 { s == 0 && (pr - qr).abs() == 1 } else { ctour_ok(cr, pr, qr, s) };
            for sl in 0..=d {
                let sr = d - sl;
                if left_ok(sl) && right_ok(sr) {
                    let kind = Kind::Col(ColPlan { right_first, sl, sr });
                    return Some(Resolved { flip_u, flip_v, a, b, kind });
                }
            }
        }
        return None;
    }

    // Separated endpoints.
    let wm = bu - au - 1;
    let cb = k - bu + 1;
    let triple = |t: TriplePlan| Resolved { flip_u, flip_v, a, b, kind: Kind::Triple(t) };
    if wm == 0 {
        // Blocks touch: the hand-off lane is shared.
        for e in 1..=3 {
            if e == av || e == bv {
                continue;
            }
            for sa in 0..=d {
                let sb = d - sa;
                if ctour_ok(au, av, e, sa) && ctour_ok(cb, e, bv, sb) {
                    let plan = SepPlan { e_a: e, e_b: e, z1: 0, gadget: false, pass: false, sa, sb };
                    return Some(Resolved { flip_u, flip_v, a, b, kind: Kind::Sep(plan) });
                }
            }
        }
        return triple_search(k, a, b, d, len).map(triple);
    }

    for e_a in [1, 3, 2] {
        if e_a == av {
            continue;
        }
        for e_b in [1, 3, 2] {
            if e_b == bv {
                continue;
            }
            for (pass, gadget) in [(false, false), (false, true), (true, false)] {
                if (pass || gadget) && e_a == 2 {
                    continue;
                }
                let span = wm
                    - i32::from(e_a == 2)
                    - i32::from(e_b == 2)
                    - i32::from(pass)
                    - 2 * i32::from(gadget);
                if span < 0 {
                    continue;
                }
                let drop = i32::from(e_a == 2) + i32::from(e_b == 2) + 2 * i32::from(pass);
                if drop > d {
                    continue;
                }
                for z1 in if e_a == 2 { [1, 3].as_slice() } else { &[0] } {
                    let e0 = if e_a == 2 { *z1 } else { e_a };
                    let e1 = if gadget { 4 - e0 } else { e0 };
                    let e_out = if span % 2 == 1 { 4 - e1 } else { e1 };
                    if e_b != 2 && e_out != e_b {
                        continue;
                    }
                    for sa in 0..=(d - drop) {
                        let sb = d - drop - sa;
                        if ctour_ok(au, av, e_a, sa) && ctour_ok(cb, e_b, bv, sb) {
                            let plan = SepPlan { e_a, e_b, z1: *z1, gadget, pass, sa, sb };
                            return Some(Resolved { flip_u, flip_v, a, b, kind: Kind::Sep(plan) });
                        }
                    }
                }
            }
        }
    }
    triple_search(k, a, b, d, len).map(triple)
}

/// Look for a triple-crossing split at the cut right of a's column. The
/// crossing lanes are av, then x2, then x3 = the remaining lane. Sides
/// resolve recursively on strictly smaller strips.
fn triple_search(k: i32, a: Cell, b: Cell, d: i32, len: i64) -> Option<TriplePlan> {
    let (au, av) = a;
    let (bu, bv) = b;
    let left_direct = au == 1;
    if bu == au + 1 {
        // The third crossing lands on b itself.
        if av == bv {
            return None;
        }
        let x3 = bv;
        let x2 = 6 - av - bv;
        let right_direct = au + 1 == k;
        if right_direct && (av - x2).abs() != 1 {
            return None;
        }
        if left_direct && (x2 - x3).abs() != 1 {
            return None;
        }
        for s2 in 0..=d {
            let s3 = d - s2;
            if (right_direct && s2 != 0) || (left_direct && s3 != 0) {
                continue;
            }
            let ok2 = right_direct || {
                let kk = k - au - 1;
                trio_feasible(kk, (1, av), (1, x2), 3 * kk as i64 - s2 as i64)
            };
            let ok3 = left_direct || {
                let kk = au - 1;
                trio_feasible(kk, (kk, x2), (kk, x3), 3 * kk as i64 - s3 as i64)
            };
            if ok2 && ok3 {
                return Some(TriplePlan { x2, x3, s2, s3, len4: 0 });
            }
        }
        return None;
    }
    // b lies beyond the stub: the right side minus the two stub cells is a
    // recursive tail entered on lane x3 one column further out.
    for x2 in [av - 1, av + 1] {
        if !(1..=3).contains(&x2) {
            continue;
        }
        let x3 = 6 - av - x2;
        if left_direct && (x2 - x3).abs() != 1 {
            continue;
        }
        let tail_b = (bu - au - 1, bv);
        if tail_b == (1, x3) {
            continue;
        }
        for s3 in 0..=d {
            if left_direct && s3 != 0 {
                continue;
            }
            let i3 = if left_direct { 2 } else { 2 + 3 * (au as i64 - 1) - s3 as i64 };
            let len4 = len - 4 - i3;
            if len4 < 2 {
                continue;
            }
            let ok3 = left_direct
                || trio_feasible(au - 1, (au - 1, x2), (au - 1, x3), 3 * (au as i64 - 1) - s3 as i64);
            if ok3 && trio_feasible(k - au - 1, (1, x3), tail_b, len4) {
                return Some(TriplePlan { x2, x3, s2: 0, s3, len4 });
            }
        }
    }
    None
}

pub fn trio_feasible(k: i32, a: Cell, b: Cell, len: i64) -> bool {
    resolve(&TrioSpec { k, a, b, len }).is_some()
}

/// Largest reachable vertex count between `a` and `b`.
pub fn trio_max(k: i32, a: Cell, b: Cell) -> i64 {
    for sigma in 0..=6 {
        let len = 3 * k as i64 - sigma;
        if len >= 2 && trio_feasible(k, a, b, len) {
            return len;
        }
    }
    0
}

pub fn trio_succ(spec: &TrioSpec, p: Cell) -> Option<Cell> {
    let r = resolve(spec).expect("caller must check trio_feasible first");
    let k = spec.k;
    let fwd = |mut c: Cell| -> Cell {
        if r.flip_u {
            c = (k + 1 - c.0, c.1);
        }
        if r.flip_v {
            c = (c.0, 4 - c.1);
        }
        c
    };
    let s = succ_canonical(k, &r, fwd(p))?;
    Some(fwd(s))
}

fn succ_canonical(k: i32, r: &Resolved, cell: Cell) -> Option<Cell> {
    let (au, av) = r.a;
    let (bu, bv) = r.b;
    let (_, v) = cell;
    match r.kind {
        Kind::Single => {
            if (av - bv).abs() == 2 {
                if v == av {
                    Some((1, 2))
                } else if v == 2 {
                    Some((1, bv))
                } else {
                    None
                }
            } else if v == av {
                Some((1, bv))
            } else {
                None
            }
        }
        Kind::Col(plan) => col_succ(k, au, av, bv, plan, cell),
        Kind::Sep(plan) => sep_succ(k, (au, av), (bu, bv), plan, cell),
        Kind::Triple(plan) => triple_succ(k, (au, av), (bu, bv), plan, cell),
    }
}

fn triple_succ(k: i32, a: Cell, b: Cell, t: TriplePlan, cell: Cell) -> Option<Cell> {
    let (au, av) = a;
    let (bu, bv) = b;
    let (u, v) = cell;
    let beta = bu > au + 1;
    if cell == b {
        return None;
    }
    if cell == a {
        return Some((au + 1, av));
    }
    if u == au + 1 && v == av {
        // End of the first crossing: tour the far right side if the stub
        // column is interior, otherwise turn within the stub.
        return if !beta && au + 1 < k { Some((au + 2, av)) } else { Some((au + 1, t.x2)) };
    }
    if u == au + 1 && v == t.x2 {
        return Some((au, t.x2));
    }
    if u == au && v == t.x2 {
        return if au == 1 { Some((au, t.x3)) } else { Some((au - 1, t.x2)) };
    }
    if u == au && v == t.x3 {
        return Some((au + 1, t.x3));
    }
    if u == au + 1 && v == t.x3 {
        debug_assert!(beta, "in the touching case this cell is b");
        return Some((au + 2, t.x3));
    }
    if u < au {
        let kk = au - 1;
        let spec =
            TrioSpec { k: kk, a: (kk, t.x2), b: (kk, t.x3), len: 3 * kk as i64 - t.s3 as i64 };
        return match trio_succ(&spec, (u, v)) {
            Some(n) => Some(n),
            None if (u, v) == (kk, t.x3) => Some((au, t.x3)),
            None => None,
        };
    }
    debug_assert!(u >= au + 2);
    let kk = k - au - 1;
    let loc = (u - au - 1, v);
    if beta {
        let spec = TrioSpec { k: kk, a: (1, t.x3), b: (bu - au - 1, bv), len: t.len4 };
        return trio_succ(&spec, loc).map(|n| (n.0 + au + 1, n.1));
    }
    let spec = TrioSpec { k: kk, a: (1, av), b: (1, t.x2), len: 3 * kk as i64 - t.s2 as i64 };
    match trio_succ(&spec, loc) {
        Some(n) => Some((n.0 + au + 1, n.1)),
        None if loc == (1, t.x2) => Some((au + 1, t.x2)),
        None => None,
    }
}

fn col_succ(k: i32, c0: i32, av: i32, bv: i32, plan: ColPlan, cell: Cell) -> Option<Cell> {
    let (pl, ql, pr, qr) = col_lanes(av, bv, plan.right_first);
    let (cl, cr) = (c0 - 1, k - c0);
    let (u, v) = cell;
    // The middle stop on the shared column: the lane the first tour returns
    // to, from which the second tour departs.
    let mid = if plan.right_first { qr } else { ql };
    if u == c0 {
        if v == av {
            // Start of the path.
            return Some(if plan.right_first {
                if cr == 0 { (c0, qr) } else { (c0 + 1, pr) }
            } else if cl == 0 {
                (c0, ql)
            } else {
                (c0 - 1, pl)
            });
        }
        if v == bv {
            return None;
        }
        debug_assert_eq!(v, mid);
        // Depart into the second tour.
        return Some(if plan.right_first {
            if cl == 0 { (c0, ql) } else { (c0 - 1, pl) }
        } else if cr == 0 {
            (c0, qr)
        } else {
            (c0 + 1, pr)
        });
    }
    if u < c0 {
        if cl == 0 {
            return None;
        }
        let step = ctour_succ(cl, pl, ql, plan.sl, (u, v));
        return match step {
            Some(n) => Some(n),
            None if (u, v) == (cl, ql) => Some((c0, ql)),
            None => None,
        };
    }
    if cr == 0 {
        return None;
    }
    // Right block in mirrored coordinates: local j = k - u + 1, boundary at
    // the block's low column c0 + 1.
    let j = k - u + 1;
    let back = |c: Cell| (k - c.0 + 1, c.1);
    let step = ctour_succ(cr, pr, qr, plan.sr, (j, v));
    match step {
        Some(n) => Some(back(n)),
        None if (j, v) == (cr, qr) => Some((c0, qr)),
        None => None,
    }
}

fn sep_succ(k: i32, a: Cell, b: Cell, plan: SepPlan, cell: Cell) -> Option<Cell> {
    let (au, av) = a;
    let (bu, bv) = b;
    let wm = bu - au - 1;
    let cb = k - bu + 1;
    let (u, v) = cell;

    if u <= au {
        let step = ctour_succ(au, av, plan.e_a, plan.sa, (u, v));
        return match step {
            Some(n) => Some(n),
            None if (u, v) == (au, plan.e_a) => Some((au + 1, plan.e_a)),
            None => None,
        };
    }
    if u >= bu {
        let j = k - u + 1;
        let back = |c: Cell| (k - c.0 + 1, c.1);
        return ctour_succ(cb, plan.e_b, bv, plan.sb, (j, v)).map(back);
    }

    // Middle region, local column j in 1..=wm.
    let j = u - au;
    let out = |c: (i32, i32)| -> Option<Cell> { Some((au + c.0, c.1)) };

    let head = i32::from(plan.e_a == 2);
    let e0 = if plan.e_a == 2 { plan.z1 } else { plan.e_a };
    if plan.e_a == 2 && j == 1 {
        // Entry shear: off the middle lane onto z1, dropping the far cell.
        return if v == 2 {
            out((1, e0))
        } else if v == e0 {
            out((2, e0))
        } else {
            None
        };
    }
    if plan.pass && j == head + 1 {
        return if v == e0 { out((j + 1, e0)) } else { None };
    }
    if plan.gadget && (j == head + 1 || j == head + 2) {
        // Two-column interchange entered on lane e0 at local column g.
        let g = head + 1;
        let rl = e0;
        return match (j - g, v) {
            (0, x) if x == rl => out((g + 1, rl)),
            (1, x) if x == rl => out((g + 1, 2)),
            (1, 2) => out((g, 2)),
            (0, 2) => out((g, 4 - rl)),
            (0, x) if x == 4 - rl => out((g + 1, 4 - rl)),
            (1, x) if x == 4 - rl => out((g + 2, 4 - rl)),
            _ => None,
        };
    }

    let serp_from = head + i32::from(plan.pass) + 2 * i32::from(plan.gadget) + 1;
    let serp_to = wm - i32::from(plan.e_b == 2);
    let e1 = if plan.gadget { 4 - e0 } else { e0 };
    if plan.e_b == 2 && j == serp_to + 1 {
        // Exit shear onto the middle lane.
        let arrive = if (j - serp_from) % 2 == 0 { e1 } else { 4 - e1 };
        return if v == arrive {
            out((j, 2))
        } else if v == 2 {
            out((j + 1, 2))
        } else {
            None
        };
    }
    debug_assert!(j >= serp_from && j <= serp_to, "middle layout exhausted");
    let enter = if (j - serp_from) % 2 == 0 { e1 } else { 4 - e1 };
    if v == enter {
        out((j, 2))
    } else if v == 2 {
        out((j, 4 - enter))
    } else {
        out((j + 1, v))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    pub(crate) fn walk(spec: &TrioSpec) -> Vec<Cell> {
        let mut seen = vec![false; (spec.k as usize + 1) * 4];
        let idx = |c: Cell| (c.0 as usize) * 4 + c.1 as usize;
        let mut path = vec![spec.a];
        seen[idx(spec.a)] = true;
        let mut cur = spec.a;
        while let Some(next) = trio_succ(spec, cur) {
            assert!(
                (next.0 - cur.0).abs() + (next.1 - cur.1).abs() == 1,
                "non-adjacent step {cur:?} -> {next:?} in {spec:?}"
            );
            assert!(next.0 >= 1 && next.0 <= spec.k && next.1 >= 1 && next.1 <= 3);
            assert!(!seen[idx(next)], "revisit of {next:?} in {spec:?}");
            seen[idx(next)] = true;
            path.push(next);
            cur = next;
        }
        assert_eq!(cur, spec.b, "walk from a must end at b in {spec:?}");
        path
    }

    #[test]
    fn every_feasible_length_walks() {
        for k in 1..=8 {
            for au in 1..=k {
                for av in 1..=3 {
                    for bu in 1..=k {
                        for bv in 1..=3 {
                            let (a, b) = ((au, av), (bu, bv));
                            if a == b {
                                continue;
                            }
                            for len in 2..=(3 * k as i64) {
                                if !trio_feasible(k, a, b, len) {
                                    continue;
                                }
                                let spec = TrioSpec { k, a, b, len };
                                let path = walk(&spec);
                                assert_eq!(path.len() as i64, len, "{spec:?}");
                            }
                        }
                    }
                }
            }
        }
        println!("three-lane evaluator: all feasible lengths walk for k <= 8");
    }
}
