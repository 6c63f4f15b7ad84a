//! Hamiltonian cycles on even-sized grids, presented as successor maps.
//!
//! The canonical cycle lives on an a x b frame with a even: the full first
//! row, a rising column at p == a, falling teeth on odd columns down to row
//! 2 with a hook left, rising teeth on even columns up to row b, and the
//! first column falling back to the start. Every even-sized grid admits one
//! after at most a transpose.
//!
//! Reflections (both axes), the transpose, and traversal direction give a
//! family of sixteen variants. They exist so a caller can demand that one
//! designated directed edge lie on the cycle: cutting the cycle at that edge
//! yields a Hamiltonian path between two chosen adjacent vertices.

pub type Pt = (i32, i32);

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CombVariant {
    pub transpose: bool,
    pub fp: bool,
    pub fq: bool,
    pub rev: bool,
}

impl CombVariant {
    pub const IDENTITY: CombVariant =
        CombVariant { transpose: false, fp: false, fq: false, rev: false };

    pub fn all() -> impl Iterator<Item = CombVariant> {
        (0..16).map(|i| CombVariant {
            transpose: i & 1 != 0,
            fp: i & 2 != 0,
            fq: i & 4 != 0,
            rev: i & 8 != 0,
        })
    }
}

/// Successor along the canonical cycle; `a` must be even, `b >= 2`.
fn canon_succ(a: i32, b: i32, c: Pt) -> Pt {
    let (p, q) = c;
    debug_assert!(a % 2 == 0 && b >= 2);
    debug_assert!(1 <= p && p <= a && 1 <= q && q <= b);
    if q == 1 {
        return if p < a { (p + 1, 1) } else { (a, 2) };
    }
    if p == 1 {
        return (1, q - 1);
    }
    if p % 2 == 0 {
        if q < b {
            (p, q + 1)
        } else {
            (p - 1, b)
        }
    } else if q > 2 {
        (p, q - 1)
    } else {
        (p - 1, 2)
    }
}

/// Predecessor along the canonical cycle: the inverse of [`canon_succ`].
fn canon_pred(a: i32, b: i32, c: Pt) -> Pt {
    let (p, q) = c;
    debug_assert!(a % 2 == 0 && b >= 2);
    if q == 1 {
        return if p > 1 { (p - 1, 1) } else { (1, 2) };
    }
    if p == 1 {
        return if q < b { (1, q + 1) } else { (2, b) };
    }
    if p == a {
        return if q == 2 { (a, 1) } else { (a, q - 1) };
    }
    if p % 2 == 0 {
        if q == 2 {
            (p + 1, 2)
        } else {
            (p, q - 1)
        }
    } else if q < b {
        (p, q + 1)
    } else {
        (p + 1, b)
    }
}

/// Next vertex on the variant's cycle through an m x n grid, or `None` when
/// the variant's frame has odd width and so carries no comb.
pub fn cycle_succ(m: i32, n: i32, var: CombVariant, v: Pt) -> Option<Pt> {
    let (a, b) = if var.transpose { (n, m) } else { (m, n) };
    if a % 2 != 0 || b < 2 {
        return None;
    }
    let (x, y) = v;
    let (mut p, mut q) = if var.transpose { (y, x) } else { (x, y) };
    if var.fp {
        p = a + 1 - p;
    }
    if var.fq {
        q = b + 1 - q;
    }
    let (mut p, mut q) = if var.rev { canon_pred(a, b, (p, q)) } else { canon_succ(a, b, (p, q)) };
    if var.fq {
        q = b + 1 - q;
    }
    if var.fp {
        p = a + 1 - p;
    }
    Some(if var.transpose { (q, p) } else { (p, q) })
}

/// A variant whose frame is guaranteed combed: prefer the grid orientation.
pub fn default_variant(m: i32, n: i32) -> Option<CombVariant> {
    if m % 2 == 0 && n >= 2 {
        Some(CombVariant::IDENTITY)
    } else if n % 2 == 0 && m >= 2 {
        Some(CombVariant { transpose: true, ..CombVariant::IDENTITY })
    } else {
        None
    }
}

/// Find a variant whose cycle contains the directed edge `from -> to`.
pub fn find_variant(m: i32, n: i32, from: Pt, to: Pt) -> Option<CombVariant> {
    CombVariant::all().find(|&var| cycle_succ(m, n, var, from) == Some(to))
}
