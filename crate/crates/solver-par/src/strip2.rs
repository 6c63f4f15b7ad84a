//! Paths through a two-lane strip.
//!
//! A strip is addressed as (u, v) with u running 1..=k along the strip and
//! v in {1, 2} across it. Given endpoints a, b and a requested vertex count,
//! the evaluator picks one canonical path shape and then answers successor
//! queries for single cells in constant time. Cells the chosen path does not
//! visit get `None`, as does the terminal endpoint.
//!
//! Shape families:
//!
//! * endpoints in the same column: a C-shaped tour toward one end of the
//!   strip; only even counts up to the better end are reachable.
//! * endpoints on a diagonally adjacent pair: the same C-tours with one
//!   extra step, giving odd counts.
//! * everything else: a hook over each end of the strip joined by a weave
//!   across the middle columns. The weave crosses lanes in every column it
//!   fully covers; a column it passes straight through drops one cell and
//!   keeps the lane, which is how small deficits and the lane-parity
//!   equation are absorbed. Hooks can also retreat by whole columns, two
//!   cells at a time.

pub type Cell = (i32, i32);

/// Where the straight (cell-dropping) weave columns sit.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SkipEnd {
    NearA,
    NearB,
}

#[derive(Debug, Clone, Copy)]
pub struct DuoSpec {
    pub k: i32,
    pub a: Cell,
    pub b: Cell,
    /// Requested number of vertices on the path, endpoints included.
    pub len: i64,
    pub skew: SkipEnd,
}

#[derive(Debug, Clone, Copy)]
enum Shape {
    /// Same-column pair covering columns turn..=c0 (low) or c0..=turn (high).
    SameCol { low: bool, turn: i32 },
    /// Diagonal pair; tour over the low or high side of the pair.
    Diag { low: bool, turn: i32 },
    /// General shape: hooks cover a_start..=au and bu..=b_end, the weave
    /// covers the columns between with `w_skip` straight columns.
    Weave { a_start: i32, b_end: i32, w_skip: i32 },
}

#[derive(Debug, Clone, Copy)]
struct Resolved {
    flip_u: bool,
    a: Cell,
    b: Cell,
    shape: Shape,
}

fn resolve(spec: &DuoSpec) -> Option<Resolved> {
    let DuoSpec { k, mut a, mut b, len, .. } = *spec;
    debug_assert!(a != b);
    debug_assert!(1 <= a.0 && a.0 <= k && 1 <= b.0 && b.0 <= k);
    debug_assert!(a.1 >= 1 && a.1 <= 2 && b.1 >= 1 && b.1 <= 2);
    let flip_u = a.0 > b.0;
    if flip_u {
        a = (k + 1 - a.0, a.1);
        b = (k + 1 - b.0, b.1);
    }
    let (au, av) = a;
    let (bu, bv) = b;

    if au == bu {
        // Same column, so av != bv. Even counts only.
        if len < 2 || len % 2 != 0 {
            return None;
        }
        let half = (len / 2) as i32;
        let shape = if half <= au {
            Shape::SameCol { low: true, turn: au - half + 1 }
        } else if half <= k - au + 1 {
            Shape::SameCol { low: false, turn: au + half - 1 }
        } else {
            return None;
        };
        return Some(Resolved { flip_u, a, b, shape });
    }

    if bu == au + 1 && av != bv {
        // Diagonal pair. Odd counts only.
        if len < 3 || len % 2 != 1 {
            return None;
        }
        let half = ((len - 1) / 2) as i32;
        let shape = if half <= au {
            Shape::Diag { low: true, turn: au - half + 1 }
        } else if half <= k - bu + 1 {
            Shape::Diag { low: false, turn: bu + half - 1 }
        } else {
            return None;
        };
        return Some(Resolved { flip_u, a, b, shape });
    }

    // General shape. Deficit must satisfy the lane-parity equation of the
    // weave; whatever the straight columns cannot absorb retreats into the
    // hooks two cells at a time.
    let deficit = 2 * k as i64 - len;
    if deficit < 0 {
        return None;
    }
    let deficit = deficit as i32;
    let span = bu - au - 1;
    let want_parity = ((span - if av != bv { 1 } else { 0 }) % 2 + 2) % 2;
    let mut w_skip = deficit.min(span);
    if w_skip % 2 != want_parity {
        w_skip -= 1;
    }
    if w_skip < 0 {
        return None;
    }
    let hooks = deficit - w_skip;
    if hooks % 2 != 0 {
        // Lane parity cannot meet the requested count: the color census of
        // the endpoints contradicts it.
        return None;
    }
    let cap_a = 2 * (au - 1);
    let cap_b = 2 * (k - bu);
    if hooks > cap_a + cap_b {
        return None;
    }
    let sb = hooks.min(cap_b);
    let sa = hooks - sb;
    let shape = Shape::Weave {
        a_start: 1 + sa / 2,
        b_end: k - sb / 2,
        w_skip,
    };
    Some(Resolved { flip_u, a, b, shape })
}

/// Largest reachable vertex count between `a` and `b`.
pub fn duo_max(k: i32, a: Cell, b: Cell) -> i64 {
    let (mut a, mut b) = (a, b);
    if a.0 > b.0 {
        a = (k + 1 - a.0, a.1);
        b = (k + 1 - b.0, b.1);
    }
    let (au, av) = (a.0 as i64, a.1);
    let (bu, bv) = (b.0 as i64, b.1);
    let k = k as i64;
    if au == bu {
        (2 * au).max(2 * (k - au + 1))
    } else if bu == au + 1 && av != bv {
        (au + bu).max(2 * k - au - bu + 2)
    } else {
        let span = bu - au - 1;
        let want = (span - if av != bv { 1 } else { 0 }).rem_euclid(2);
        2 * k - want
    }
}

/// Can a path of exactly `len` vertices run from `a` to `b`?
pub fn duo_feasible(k: i32, a: Cell, b: Cell, len: i64) -> bool {
    resolve(&DuoSpec { k, a, b, len, skew: SkipEnd::NearA }).is_some()
}

/// Successor of `p` on the chosen path; `None` off the path and at `b`.
pub fn duo_succ(spec: &DuoSpec, p: Cell) -> Option<Cell> {
    let r = resolve(spec).expect("caller must check duo_feasible first");
    let q = if r.flip_u { (spec.k + 1 - p.0, p.1) } else { p };
    let s = succ_canonical(spec, &r, q)?;
    Some(if r.flip_u { (spec.k + 1 - s.0, s.1) } else { s })
}

fn succ_canonical(spec: &DuoSpec, r: &Resolved, p: Cell) -> Option<Cell> {
    let (au, av) = r.a;
    let (bu, bv) = r.b;
    let (u, v) = p;
    match r.shape {
        Shape::SameCol { low, turn } => {
            if low {
                if u < turn || u > au {
                    return None;
                }
                if v == av {
                    if u > turn {
                        Some((u - 1, av))
                    } else {
                        Some((turn, bv))
                    }
                } else if u < au {
                    Some((u + 1, bv))
                } else {
                    None
                }
            } else {
                if u < au || u > turn {
                    return None;
                }
                if v == av {
                    if u < turn {
                        Some((u + 1, av))
                    } else {
                        Some((turn, bv))
                    }
                } else if u > au {
                    Some((u - 1, bv))
                } else {
                    None
                }
            }
        }
        Shape::Diag { low, turn } => {
            if low {
                // Covers turn..=au on both lanes, then one step to b.
                if u < turn || u > bu || (u == bu && v != bv) {
                    return None;
                }
                if v == av && u <= au {
                    if u > turn {
                        Some((u - 1, av))
                    } else {
                        Some((turn, bv))
                    }
                } else if v == bv {
                    if u < au {
                        Some((u + 1, bv))
                    } else if u == au {
                        Some((bu, bv))
                    } else {
                        None
                    }
                } else {
                    None
                }
            } else {
                // a steps onto the high side, which is toured back to b.
                if u > turn || u < au || (u == au && v != av) {
                    return None;
                }
                if v == av {
                    if u < turn {
                        Some((u + 1, av))
                    } else {
                        Some((turn, bv))
                    }
                } else if u > bu {
                    Some((u - 1, bv))
                } else {
                    None
                }
            }
        }
        Shape::Weave { a_start, b_end, w_skip } => {
            if u < a_start || u > b_end {
                return None;
            }
            if u <= au {
                // Entry hook.
                if v == av {
                    if u > a_start {
                        Some((u - 1, av))
                    } else {
                        Some((a_start, 3 - av))
                    }
                } else if u < au {
                    Some((u + 1, 3 - av))
                } else {
                    Some((au + 1, 3 - av))
                }
            } else if u >= bu {
                // Exit hook.
                if v == bv {
                    if u == bu {
                        None
                    } else {
                        Some((u - 1, bv))
                    }
                } else if u < b_end {
                    Some((u + 1, 3 - bv))
                } else {
                    Some((b_end, bv))
                }
            } else {
                // Weave column; straight columns hug the chosen end.
                let straight = match spec.skew {
                    SkipEnd::NearA => u - au <= w_skip,
                    SkipEnd::NearB => bu - u <= w_skip,
                };
                let before = match spec.skew {
                    SkipEnd::NearA => w_skip.min(u - 1 - au),
                    SkipEnd::NearB => (u - (bu - w_skip)).max(0),
                };
                let flips = (u - 1 - au) - before;
                let arr = if flips % 2 == 0 { 3 - av } else { av };
                if straight {
                    if v == arr {
                        Some((u + 1, v))
                    } else {
                        None
                    }
                } else if v == arr {
                    Some((u, 3 - v))
                } else {
                    Some((u + 1, v))
                }
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Walk the successor map from a and report the visited path, panicking
    /// on revisits or adjacency violations.
    pub(crate) fn walk(spec: &DuoSpec) -> Vec<Cell> {
        let mut seen = vec![false; (spec.k as usize + 1) * 3];
        let idx = |c: Cell| (c.0 as usize) * 3 + c.1 as usize;
        let mut path = vec![spec.a];
        seen[idx(spec.a)] = true;
        let mut cur = spec.a;
        while let Some(next) = duo_succ(spec, cur) {
            assert!(
                (next.0 - cur.0).abs() + (next.1 - cur.1).abs() == 1,
                "non-adjacent step {cur:?} -> {next:?} in {spec:?}"
            );
            assert!(next.0 >= 1 && next.0 <= spec.k && next.1 >= 1 && next.1 <= 2);
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
        for k in 1..=9 {
            for au in 1..=k {
                for av in 1..=2 {
                    for bu in 1..=k {
                        for bv in 1..=2 {
                            let (a, b) = ((au, av), (bu, bv));
                            if a == b {
                                continue;
                            }
                            let mut best = 0;
                            for len in 2..=(2 * k as i64) {
                                if !duo_feasible(k, a, b, len) {
                                    continue;
                                }
                                best = best.max(len);
                                for skew in [SkipEnd::NearA, SkipEnd::NearB] {
                                    let spec = DuoSpec { k, a, b, len, skew };
                                    let path = walk(&spec);
                                    assert_eq!(path.len() as i64, len, "{spec:?}");
                                }
                            }
                            assert_eq!(
                                best,
                                duo_max(k, a, b),
                                "reported max must be reachable for k={k} {a:?} {b:?}"
                            );
                        }
                    }
                }
            }
        }
        println!("two-lane evaluator: all feasible lengths walk for k <= 9");
    }
}
