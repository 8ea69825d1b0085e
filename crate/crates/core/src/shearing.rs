//! Shearing-based reduction.
//!
//! Instead of rotating, the `±Q` axis is sheared onto the coordinate axis
//! where `Q = (a, b, c)` has its largest component, e.g. for the x-axis
//!
//! ```text
//! T_x(x, y, z) = (x, y - (b/a) x, z - (c/a) x)
//! ```
//!
//! and the sheared vertices are projected onto the orthogonal coordinate
//! plane. The two projected coordinates are ordered so the plane is viewed
//! from the `+Q` side, which keeps the orientation of the boundary: a
//! shear has determinant one, and the coordinate pair is swapped whenever
//! `Q` points along the negative axis.
//!
//! Because `max(|a|, |b|, |c|)^2 >= (a^2 + b^2 + c^2) / 3 = 1/3`, the divisor
//! is never smaller than `1/sqrt(3)`.

use crate::classification::Classification;
use crate::error::{Error, Result};
use crate::planar::{classify_origin, PlanarPoint, PlanarPolygon, PlanarState};
use crate::sphere::{chord_midpoint_side, MidpointSide, SphericalPolygon, UnitVector3, Vector3};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Axis {
    X,
    Y,
    Z,
}

/// The shear chosen for one query point, reusable across polygons.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ShearPlan {
    q: UnitVector3,
    axis: Axis,
    positive: bool,
    coefficients: [f64; 2],
}

impl ShearPlan {
    /// Picks the dominant axis of `q`, breaking ties in x, y, z order.
    pub fn new(q: UnitVector3) -> Self {
        let (a, b, c) = (q.x(), q.y(), q.z());
        let (axis, dominant, coefficients) = if a.abs() >= b.abs() && a.abs() >= c.abs() {
            (Axis::X, a, [b / a, c / a])
        } else if b.abs() >= c.abs() {
            (Axis::Y, b, [a / b, c / b])
        } else {
            (Axis::Z, c, [a / c, b / c])
        };
        Self { q, axis, positive: dominant > 0.0, coefficients }
    }

    pub fn query(&self) -> UnitVector3 {
        self.q
    }

    pub fn axis(&self) -> Axis {
        self.axis
    }

    /// Sign of the dominant coordinate of `q`.
    pub fn positive(&self) -> bool {
        self.positive
    }

    /// The two shear ratios, in coordinate order: `(b/a, c/a)` for x,
    /// `(a/b, c/b)` for y and `(a/c, b/c)` for z.
    pub fn coefficients(&self) -> [f64; 2] {
        self.coefficients
    }

    /// Magnitude of the coordinate used as divisor.
    pub fn dominant_magnitude(&self) -> f64 {
        match self.axis {
            Axis::X => self.q.x().abs(),
            Axis::Y => self.q.y().abs(),
            Axis::Z => self.q.z().abs(),
        }
    }

    pub fn shear(&self, v: Vector3) -> Vector3 {
        let [s, t] = self.coefficients;
        match self.axis {
            Axis::X => Vector3::new(v.x, v.y - s * v.x, v.z - t * v.x),
            Axis::Y => Vector3::new(v.x - s * v.y, v.y, v.z - t * v.y),
            Axis::Z => Vector3::new(v.x - s * v.z, v.y - t * v.z, v.z),
        }
    }

    /// Drops the dominant coordinate of a sheared point, ordering the other
    /// two so the plane is seen from the `+Q` side.
    pub fn project_point(&self, sheared: Vector3) -> PlanarPoint {
        let Vector3 { x, y, z } = sheared;
        let (u, v) = match (self.axis, self.positive) {
            (Axis::X, true) => (y, z),
            (Axis::X, false) => (z, y),
            (Axis::Y, true) => (z, x),
            (Axis::Y, false) => (x, z),
            (Axis::Z, true) => (x, y),
            (Axis::Z, false) => (y, x),
        };
        PlanarPoint::new(u, v)
    }

    pub fn project(&self, g: &SphericalPolygon) -> PlanarPolygon {
        PlanarPolygon::new(
            g.vertices()
                .iter()
                .map(|v| self.project_point(self.shear(v.vector())))
                .collect(),
        )
        .expect("a spherical polygon has at least three finite vertices")
    }

    /// Classifies the query point against `g`, which should be BAE.
    ///
    /// When the projected polygon passes through the origin on side `i`, the
    /// side holds `Q` or `-Q`; the sign of `Q . (v_i + v_j)` on the original,
    /// unsheared vertices decides which.
    pub fn classify(&self, g: &SphericalPolygon, tol: f64) -> Result<Classification> {
        match classify_origin(&self.project(g), tol) {
            PlanarState::OnBoundary { edge } => {
                let (vi, vj) = g.side(edge);
                match chord_midpoint_side(vi, vj, self.q, tol) {
                    Ok(MidpointSide::QSide) => Ok(Classification::Boundary { edge }),
                    Ok(MidpointSide::AntipodeSide) => Ok(Classification::AntipodalBoundary { edge }),
                    Err(Error::AmbiguousMidpoint { dot }) => Err(Error::AmbiguousBoundary { edge, dot }),
                    Err(e) => Err(e),
                }
            }
            PlanarState::Interior { wn } => Ok(Classification::Interior { wn }),
            PlanarState::Exterior { wn } => Ok(Classification::Exterior { wn }),
        }
    }
}

/// Free-function form of [`ShearPlan::new`].
pub fn plan_shear(q: UnitVector3) -> ShearPlan {
    ShearPlan::new(q)
}

/// Free-function form of [`ShearPlan::project`].
pub fn shear_project(g: &SphericalPolygon, q: UnitVector3) -> PlanarPolygon {
    ShearPlan::new(q).project(g)
}

/// One-shot shearing-based classification.
pub fn classify(g: &SphericalPolygon, q: UnitVector3, tol: f64) -> Result<Classification> {
    ShearPlan::new(q).classify(g, tol)
}
