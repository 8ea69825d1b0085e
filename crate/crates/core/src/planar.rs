//! Winding number of a planar polygon about the origin, with detection of the
//! origin lying on a side.
//!
//! This is Sunday's crossing-rule winding number specialised to the origin as
//! the test point. A side is reported as containing the origin when the
//! origin is collinear with it and lies between its endpoints, i.e.
//! `x_i y_j - y_i x_j = 0`, `x_i x_j <= 0` and `y_i y_j <= 0`. All three
//! comparisons are relative: each is allowed a slack of `tol * s^2`, where
//! `s` is the largest coordinate magnitude of the side, so the outcome does
//! not depend on the overall scale of the projection.

use crate::error::{Error, Result};

/// Default relative tolerance of the origin-on-side test.
pub const DEFAULT_TOLERANCE: f64 = 1e-12;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PlanarPoint {
    pub x: f64,
    pub y: f64,
}

impl PlanarPoint {
    pub const fn new(x: f64, y: f64) -> Self {
        Self { x, y }
    }
}

/// A closed planar polygon; the last vertex connects back to the first.
#[derive(Debug, Clone, PartialEq)]
pub struct PlanarPolygon {
    vertices: Vec<PlanarPoint>,
}

impl PlanarPolygon {
    pub fn new(vertices: Vec<PlanarPoint>) -> Result<Self> {
        if vertices.len() < 3 {
            return Err(Error::TooFewVertices(vertices.len()));
        }
        if vertices.iter().any(|p| !p.x.is_finite() || !p.y.is_finite()) {
            return Err(Error::NonFinite);
        }
        Ok(Self { vertices })
    }

    pub fn vertices(&self) -> &[PlanarPoint] {
        &self.vertices
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    /// Sides as `(index, start, end)` with 1-based indices.
    pub fn sides(&self) -> impl Iterator<Item = (usize, PlanarPoint, PlanarPoint)> + '_ {
        let n = self.vertices.len();
        (0..n).map(move |i| (i + 1, self.vertices[i], self.vertices[(i + 1) % n]))
    }
}

impl FromIterator<(f64, f64)> for PlanarPolygon {
    /// Panics on fewer than three points or non-finite values; use
    /// [`PlanarPolygon::new`] for fallible construction.
    fn from_iter<I: IntoIterator<Item = (f64, f64)>>(iter: I) -> Self {
        Self::new(iter.into_iter().map(|(x, y)| PlanarPoint::new(x, y)).collect())
            .expect("valid planar polygon")
    }
}

/// Position of the origin relative to a planar polygon.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PlanarState {
    /// The origin is on side `edge` (1-based); the first such side is reported.
    OnBoundary { edge: usize },
    /// Winding number is positive.
    Interior { wn: i32 },
    /// Winding number is zero or negative.
    Exterior { wn: i32 },
}

impl PlanarState {
    pub fn winding_number(&self) -> Option<i32> {
        match *self {
            Self::OnBoundary { .. } => None,
            Self::Interior { wn } | Self::Exterior { wn } => Some(wn),
        }
    }
}

/// `a x b`, which also equals Sunday's `isLeft(a, b, O)`.
#[inline]
fn cross(a: PlanarPoint, b: PlanarPoint) -> f64 {
    a.x * b.y - a.y * b.x
}

/// Whether the closed side `a -> b` passes through the origin within `tol`.
pub fn origin_on_side(a: PlanarPoint, b: PlanarPoint, tol: f64) -> bool {
    let s = a.x.abs().max(a.y.abs()).max(b.x.abs()).max(b.y.abs());
    let slack = tol * s * s;
    cross(a, b).abs() <= slack && a.x * b.x <= slack && a.y * b.y <= slack
}

/// Classifies the origin against `g`.
///
/// Every side is processed before the interior/exterior decision is made.
/// Upward crossings of the +x axis with the origin strictly left of the side
/// add one; downward crossings with the origin strictly right subtract one.
/// Zero-length sides never cross and only host the origin when the repeated
/// vertex is the origin itself, which the boundary test already catches.
pub fn classify_origin(g: &PlanarPolygon, tol: f64) -> PlanarState {
    let mut wn = 0i32;
    for (edge, a, b) in g.sides() {
        if origin_on_side(a, b, tol) {
            return PlanarState::OnBoundary { edge };
        }
        if a.y <= 0.0 {
            if b.y > 0.0 && cross(a, b) > 0.0 {
                wn += 1;
            }
        } else if b.y <= 0.0 && cross(a, b) < 0.0 {
            wn -= 1;
        }
    }
    if wn > 0 {
        PlanarState::Interior { wn }
    } else {
        PlanarState::Exterior { wn }
    }
}
