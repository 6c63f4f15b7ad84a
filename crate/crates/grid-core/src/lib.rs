//! Geometry and classification for rectangular grid graphs.
//!
//! The mesh R(m,n) is the graph on all lattice points (x,y) with 1 <= x <= m,
//! 1 <= y <= n and unit-distance edges; (1,1) sits in the upper-left corner.
//! This crate owns the vocabulary shared by every solver: vertices, (possibly
//! empty) subrectangles with absolute origins, the parity coloring, instance
//! normalization, the Hamiltonicity characterization, the five-way instance
//! classification and the closed-form upper bound U on the vertex count of a
//! longest s-t path.

mod classify;
mod transform;

pub use classify::{
    classify, color_compatible, forbidden_conditions, is_hamiltonian, normalize, upper_bound,
    Forbidden,
};
pub use transform::Transform;

use std::fmt;

/// A lattice point with 1-based coordinates; `x` is the column, `y` the row.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Vertex {
    pub x: i32,
    pub y: i32,
}

/// Shorthand constructor used throughout the workspace.
pub fn v(x: i32, y: i32) -> Vertex {
    Vertex { x, y }
}

impl Vertex {
    /// Grid adjacency: unit Manhattan distance.
    pub fn adjacent(self, other: Vertex) -> bool {
        (self.x - other.x).abs() + (self.y - other.y).abs() == 1
    }

    pub fn color(self) -> Color {
        if (self.x + self.y) % 2 == 0 {
            Color::White
        } else {
            Color::Black
        }
    }

    pub fn as_tuple(self) -> (i32, i32) {
        (self.x, self.y)
    }
}

impl fmt::Display for Vertex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.x, self.y)
    }
}

/// The parity coloring of the grid; white iff x+y is even, so (1,1) is white.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Color {
    White,
    Black,
}

/// Color of a vertex. See [`Vertex::color`].
pub fn color(v: Vertex) -> Color {
    v.color()
}

/// An axis-aligned subrectangle of the grid with an absolute origin.
///
/// `origin` is the absolute position of the local vertex (1,1); `m` and `n`
/// are width and height in vertices. Width or height 0 denotes the empty
/// rectangle, a first-class value used for absent peel parts.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Rect {
    pub x0: i32,
    pub y0: i32,
    pub m: i32,
    pub n: i32,
}

impl Rect {
    /// The full rectangle R(m,n) anchored at (1,1).
    pub fn new(m: i32, n: i32) -> Rect {
        Rect { x0: 1, y0: 1, m, n }
    }

    /// A subrectangle at an absolute origin.
    pub fn at(x0: i32, y0: i32, m: i32, n: i32) -> Rect {
        Rect { x0, y0, m, n }
    }

    pub fn empty() -> Rect {
        Rect { x0: 1, y0: 1, m: 0, n: 0 }
    }

    pub fn is_empty(self) -> bool {
        self.m == 0 || self.n == 0
    }

    /// Vertex count m*n.
    pub fn size(self) -> i64 {
        self.m as i64 * self.n as i64
    }

    pub fn is_even_sized(self) -> bool {
        self.size() % 2 == 0
    }

    /// Absolute column of the rightmost vertex.
    pub fn x1(self) -> i32 {
        self.x0 + self.m - 1
    }

    /// Absolute row of the bottom vertex.
    pub fn y1(self) -> i32 {
        self.y0 + self.n - 1
    }

    pub fn contains(self, v: Vertex) -> bool {
        !self.is_empty() && v.x >= self.x0 && v.x <= self.x1() && v.y >= self.y0 && v.y <= self.y1()
    }

    /// Absolute to local coordinates (local (1,1) is the origin vertex).
    pub fn to_local(self, v: Vertex) -> Vertex {
        Vertex { x: v.x - self.x0 + 1, y: v.y - self.y0 + 1 }
    }

    /// Local to absolute coordinates.
    pub fn to_global(self, v: Vertex) -> Vertex {
        Vertex { x: v.x + self.x0 - 1, y: v.y + self.y0 - 1 }
    }

    /// True if the two rectangles are disjoint and share a border segment
    /// (some vertex of one is grid-adjacent to some vertex of the other).
    pub fn touches(self, other: Rect) -> bool {
        if self.is_empty() || other.is_empty() {
            return false;
        }
        let horizontal_gap = (self.x0.max(other.x0) - self.x1().min(other.x1())).max(0);
        let vertical_gap = (self.y0.max(other.y0) - self.y1().min(other.y1())).max(0);
        horizontal_gap + vertical_gap == 1
    }
}

impl fmt::Display for Rect {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.x0 == 1 && self.y0 == 1 {
            write!(f, "R({},{})", self.m, self.n)
        } else {
            write!(f, "R({},{})@({},{})", self.m, self.n, self.x0, self.y0)
        }
    }
}

/// Exactly one class applies to every normalized instance with distinct
/// endpoints; the class selects the closed-form upper bound U.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ProblemClass {
    /// 1-rectangle with an endpoint away from a corner: U = t_x - s_x + 1.
    F1,
    /// 2-rectangle with s_x = t_x, or s_x = t_x - 1 and s_y != t_y:
    /// U = max(t_x + s_x, 2m - t_x - s_x + 2).
    F2Star,
    /// Hamiltonian: U = mn.
    C0,
    /// U = mn - 1.
    C1,
    /// U = mn - 2.
    C2,
}

impl ProblemClass {
    pub fn as_str(self) -> &'static str {
        match self {
            ProblemClass::F1 => "F1",
            ProblemClass::F2Star => "F2",
            ProblemClass::C0 => "C0",
            ProblemClass::C1 => "C1",
            ProblemClass::C2 => "C2",
        }
    }
}

impl fmt::Display for ProblemClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GridError {
    IdenticalEndpoints,
    OutOfBounds { v: Vertex },
}

impl fmt::Display for GridError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GridError::IdenticalEndpoints => write!(f, "endpoints must be distinct"),
            GridError::OutOfBounds { v } => write!(f, "vertex {v} lies outside the rectangle"),
        }
    }
}

impl std::error::Error for GridError {}
