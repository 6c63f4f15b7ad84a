//! Canonical frame for the per-vertex solver.
//!
//! Every processor maps the instance through at most two axis reflections so
//! that the source endpoint sits weakly up-left of the target. Reflections
//! keep rows as rows and columns as columns, so the peeled frame regions and
//! the strip patterns keep their orientation; only coordinates are mirrored
//! on the way in and the computed successor is mirrored back on the way out.

use grid_core::{v, Vertex};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Frame {
    pub m: i32,
    pub n: i32,
    /// Mirror x: original column x reads as m+1-x in the frame.
    pub fx: bool,
    /// Mirror y.
    pub fy: bool,
}

impl Frame {
    /// Build the frame for (m, n, s, t) and return the mapped endpoints.
    /// Afterwards `s.x <= t.x` and `s.y <= t.y` hold in frame coordinates.
    pub fn canonical(m: i32, n: i32, s: Vertex, t: Vertex) -> (Frame, Vertex, Vertex) {
        let f = Frame { m, n, fx: s.x > t.x, fy: s.y > t.y };
        (f, f.map(s), f.map(t))
    }

    /// Original coordinates to frame coordinates.
    pub fn map(&self, p: Vertex) -> Vertex {
        let x = if self.fx { self.m + 1 - p.x } else { p.x };
        let y = if self.fy { self.n + 1 - p.y } else { p.y };
        v(x, y)
    }

    /// Frame coordinates back to original coordinates. Reflections are
    /// involutions, so this is the same arithmetic.
    pub fn unmap(&self, p: Vertex) -> Vertex {
        self.map(p)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn canonical_orders_endpoints() {
        let (f, s, t) = Frame::canonical(7, 5, v(6, 1), v(2, 4));
        assert!(f.fx && !f.fy);
        assert_eq!((s, t), (v(2, 1), v(6, 4)));
        assert_eq!(f.unmap(s), v(6, 1));
        assert_eq!(f.unmap(t), v(2, 4));
    }

    #[test]
    fn map_roundtrips() {
        let f = Frame { m: 9, n: 4, fx: true, fy: true };
        for x in 1..=9 {
            for y in 1..=4 {
                assert_eq!(f.unmap(f.map(v(x, y))), v(x, y));
            }
        }
    }
}
