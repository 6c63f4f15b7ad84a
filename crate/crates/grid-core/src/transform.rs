use crate::{Rect, Vertex};

/// An invertible change of frame between a source rectangle and a normalized
/// rectangle anchored at (1,1).
///
/// The forward direction rebases to the origin, then transposes, then mirrors
/// each axis. `swap` records that the endpoints were exchanged on top of the
/// coordinate map, so a path computed in the normalized frame must be reversed
/// when carried back.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Transform {
    pub src: Rect,
    pub transpose: bool,
    pub flip_x: bool,
    pub flip_y: bool,
    pub swap: bool,
}

impl Transform {
    pub fn identity(src: Rect) -> Transform {
        Transform { src, transpose: false, flip_x: false, flip_y: false, swap: false }
    }

    /// Width and height of the normalized frame.
    pub fn dst_dims(&self) -> (i32, i32) {
        if self.transpose {
            (self.src.n, self.src.m)
        } else {
            (self.src.m, self.src.n)
        }
    }

    /// Map an absolute source vertex into the normalized frame.
    pub fn apply(&self, v: Vertex) -> Vertex {
        let local = self.src.to_local(v);
        let (mut x, mut y) = if self.transpose { (local.y, local.x) } else { (local.x, local.y) };
        let (m, n) = self.dst_dims();
        if self.flip_x {
            x = m + 1 - x;
        }
        if self.flip_y {
            y = n + 1 - y;
        }
        Vertex { x, y }
    }

    /// Map a normalized-frame vertex back to absolute source coordinates.
    pub fn unapply(&self, v: Vertex) -> Vertex {
        let (m, n) = self.dst_dims();
        let x = if self.flip_x { m + 1 - v.x } else { v.x };
        let y = if self.flip_y { n + 1 - v.y } else { v.y };
        let local = if self.transpose { Vertex { x: y, y: x } } else { Vertex { x, y } };
        self.src.to_global(local)
    }

    /// Carry a whole path back to the source frame, undoing the endpoint swap
    /// by reversing the vertex order.
    pub fn unapply_path(&self, path: &[Vertex]) -> Vec<Vertex> {
        let mut out: Vec<Vertex> = path.iter().map(|&v| self.unapply(v)).collect();
        if self.swap {
            out.reverse();
        }
        out
    }
}
