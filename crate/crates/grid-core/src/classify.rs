use crate::{v, Color, GridError, ProblemClass, Rect, Transform, Vertex};

/// Which of the three forbidden conditions hold for an instance. The instance
/// has a Hamiltonian s-t path exactly when the endpoint colors are compatible
/// and none of these hold.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Forbidden {
    /// 1-rectangle whose endpoints are not the two ends of the row.
    pub f1: bool,
    /// 2-rectangle where s and t form an interior rung: the edge (s,t) is
    /// perpendicular to the long sides and not on the boundary.
    pub f2: bool,
    /// 3-rectangle obstruction, evaluated over all symmetries and the
    /// endpoint swap; see [`forbidden_conditions`].
    pub f3: bool,
}

impl Forbidden {
    pub fn any(self) -> bool {
        self.f1 || self.f2 || self.f3
    }
}

/// Bring an instance into the canonical frame: width at least height, and s
/// weakly left of t. Returns the normalized rectangle (anchored at (1,1)),
/// the mapped endpoints, and the transform needed to carry answers back.
pub fn normalize(
    rect: Rect,
    s: Vertex,
    t: Vertex,
) -> Result<(Rect, Vertex, Vertex, Transform), GridError> {
    if !rect.contains(s) {
        return Err(GridError::OutOfBounds { v: s });
    }
    if !rect.contains(t) {
        return Err(GridError::OutOfBounds { v: t });
    }
    if s == t {
        return Err(GridError::IdenticalEndpoints);
    }
    let mut tr = Transform::identity(rect);
    tr.transpose = rect.n > rect.m;
    let (m, n) = tr.dst_dims();
    let mut ns = tr.apply(s);
    let mut nt = tr.apply(t);
    if ns.x > nt.x {
        tr.swap = true;
        std::mem::swap(&mut ns, &mut nt);
    }
    Ok((Rect::new(m, n), ns, nt, tr))
}

/// Color compatibility of the endpoints, in the rectangle's own coordinates:
/// an odd-sized rectangle needs two majority-color (white) endpoints, an
/// even-sized one needs endpoints of different colors. This is necessary for
/// a Hamiltonian path because colors alternate along any path.
pub fn color_compatible(rect: Rect, s: Vertex, t: Vertex) -> bool {
    assert!(rect.contains(s) && rect.contains(t), "endpoints must lie in {rect}");
    let cs = rect.to_local(s).color();
    let ct = rect.to_local(t).color();
    if rect.is_even_sized() {
        cs != ct
    } else {
        cs == Color::White && ct == Color::White
    }
}

/// Evaluate the three forbidden conditions for (rect, s, t).
///
/// F1 and F2 are checked in the canonical frame. F3 is a property of
/// 3-rectangles stated for one fundamental position; it is reported if any
/// symmetry of the rectangle, with either endpoint order, lands the instance
/// in that position: width even, first endpoint black, second endpoint white,
/// and the first endpoint strictly left of the second (by two columns unless
/// the first sits on the middle row).
pub fn forbidden_conditions(rect: Rect, s: Vertex, t: Vertex) -> Forbidden {
    let (nr, ns, nt, _) = normalize(rect, s, t).expect("instance must be valid");
    let (m, n) = (nr.m, nr.n);

    let f1 = n == 1 && !(ns == v(1, 1) && nt == v(m, 1));
    let f2 = n == 2 && ns.x == nt.x && ns.x > 1 && ns.x < m;

    let mut f3 = false;
    let mut frames: Vec<(i32, Vertex, Vertex)> = Vec::new();
    if n == 3 {
        frames.push((m, ns, nt));
    }
    if m == 3 {
        frames.push((n, v(ns.y, ns.x), v(nt.y, nt.x)));
    }
    for (w, a0, b0) in frames {
        for variant in 0..8 {
            let (flip_x, flip_y, swap) = (variant & 1 != 0, variant & 2 != 0, variant & 4 != 0);
            let map = |p: Vertex| {
                let x = if flip_x { w + 1 - p.x } else { p.x };
                let y = if flip_y { 4 - p.y } else { p.y };
                v(x, y)
            };
            let (a, b) = if swap { (map(b0), map(a0)) } else { (map(a0), map(b0)) };
            if w % 2 == 0
                && a.color() == Color::Black
                && b.color() == Color::White
                && ((a.y == 2 && a.x < b.x) || (a.y != 2 && a.x < b.x - 1))
            {
                f3 = true;
            }
        }
    }
    Forbidden { f1, f2, f3 }
}

/// Exact Hamiltonicity test: compatible colors and no forbidden condition.
pub fn is_hamiltonian(rect: Rect, s: Vertex, t: Vertex) -> bool {
    color_compatible(rect, s, t) && !forbidden_conditions(rect, s, t).any()
}

/// Assign the instance to the unique class that determines its bound U.
///
/// F1 takes precedence, then the 2-rectangle class F2 (same column, or
/// adjacent columns with different rows), then C0/C2/C1 by Hamiltonicity,
/// color census and the 3-rectangle obstruction.
pub fn classify(rect: Rect, s: Vertex, t: Vertex) -> ProblemClass {
    let (nr, ns, nt, _) = normalize(rect, s, t).expect("instance must be valid");
    let fc = forbidden_conditions(rect, s, t);
    if fc.f1 {
        return ProblemClass::F1;
    }
    if nr.n == 2 && (ns.x == nt.x || (ns.x == nt.x - 1 && ns.y != nt.y)) {
        return ProblemClass::F2Star;
    }
    let compatible = color_compatible(rect, s, t);
    if compatible && !fc.any() {
        return ProblemClass::C0;
    }
    let both_black = ns.color() == Color::Black && nt.color() == Color::Black;
    if (!nr.is_even_sized() && both_black) || (compatible && fc.f3) {
        ProblemClass::C2
    } else {
        ProblemClass::C1
    }
}

/// The number of vertices of a longest s-t path. The closed form is exact:
/// the construction in the solver crates always attains it.
pub fn upper_bound(rect: Rect, s: Vertex, t: Vertex) -> i64 {
    let (nr, ns, nt, _) = normalize(rect, s, t).expect("instance must be valid");
    let (m, size) = (nr.m as i64, nr.size());
    let (sx, tx) = (ns.x as i64, nt.x as i64);
    match classify(rect, s, t) {
        ProblemClass::F1 => tx - sx + 1,
        ProblemClass::F2Star => (tx + sx).max(2 * m - tx - sx + 2),
        ProblemClass::C0 => size,
        ProblemClass::C1 => size - 1,
        ProblemClass::C2 => size - 2,
    }
}
