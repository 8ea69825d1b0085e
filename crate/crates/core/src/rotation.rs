//! Rotation-based reduction.
//!
//! The sphere is rotated so the query point `Q` becomes the north pole, the
//! rotated vertices are dropped onto the xy-plane, and the planar winding
//! number about the origin decides the outcome. A side through the origin
//! means `Q` or `-Q` is on that side; the sign of the rotated chord-midpoint
//! height tells which.

use crate::classification::Classification;
use crate::error::{Error, Result};
use crate::planar::{classify_origin, PlanarPoint, PlanarPolygon, PlanarState};
use crate::sphere::{SphericalAngles, SphericalPolygon, UnitVector3, Vector3};

pub type Matrix3 = [[f64; 3]; 3];

/// A rotation built with Rodrigues' formula `R = I + sin(t) K + (1 - cos(t)) K^2`,
/// keeping the axis `k` and its cross-product matrix `K` alongside `R`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RotationMatrix3 {
    matrix: Matrix3,
    axis: Vector3,
    cross_matrix: Matrix3,
}

fn cross_matrix(k: Vector3) -> Matrix3 {
    [[0.0, -k.z, k.y], [k.z, 0.0, -k.x], [-k.y, k.x, 0.0]]
}

fn mat_mul(a: &Matrix3, b: &Matrix3) -> Matrix3 {
    let mut out = [[0.0; 3]; 3];
    for (r, row) in out.iter_mut().enumerate() {
        for (c, cell) in row.iter_mut().enumerate() {
            *cell = (0..3).map(|i| a[r][i] * b[i][c]).sum();
        }
    }
    out
}

impl RotationMatrix3 {
    /// Rotation by `angle` radians, counter-clockwise about the unit `axis`.
    pub fn rodrigues(axis: UnitVector3, angle: f64) -> Self {
        Self::from_axis(axis.vector(), angle)
    }

    fn from_axis(k: Vector3, angle: f64) -> Self {
        let kk = cross_matrix(k);
        let k2 = mat_mul(&kk, &kk);
        let (s, c) = angle.sin_cos();
        let mut matrix = [[0.0; 3]; 3];
        for r in 0..3 {
            for col in 0..3 {
                let id = if r == col { 1.0 } else { 0.0 };
                matrix[r][col] = id + s * kk[r][col] + (1.0 - c) * k2[r][col];
            }
        }
        Self { matrix, axis: k, cross_matrix: kk }
    }

    /// The rotation along the meridian through `q` that carries `q` to the
    /// north pole: axis `[sin(phi), -cos(phi), 0]`, angle `theta`.
    ///
    /// `theta = 0` gives the identity; `theta = pi` gives a half turn about the
    /// axis, which is one of the many rotations taking the south pole north.
    pub fn to_north(q: SphericalAngles) -> Self {
        let (sp, cp) = q.phi().sin_cos();
        Self::from_axis(Vector3::new(sp, -cp, 0.0), q.theta())
    }

    pub fn matrix(&self) -> &Matrix3 {
        &self.matrix
    }

    pub fn axis(&self) -> Vector3 {
        self.axis
    }

    pub fn cross_matrix(&self) -> &Matrix3 {
        &self.cross_matrix
    }

    pub fn transpose(&self) -> Matrix3 {
        let m = &self.matrix;
        [
            [m[0][0], m[1][0], m[2][0]],
            [m[0][1], m[1][1], m[2][1]],
            [m[0][2], m[1][2], m[2][2]],
        ]
    }

    pub fn determinant(&self) -> f64 {
        let m = &self.matrix;
        m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1])
            - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0])
            + m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0])
    }

    /// Largest entry of `|R^T R - I|`.
    pub fn orthogonality_error(&self) -> f64 {
        let rtr = mat_mul(&self.transpose(), &self.matrix);
        let mut worst = 0.0f64;
        for (r, row) in rtr.iter().enumerate() {
            for (c, v) in row.iter().enumerate() {
                let id = if r == c { 1.0 } else { 0.0 };
                worst = worst.max((v - id).abs());
            }
        }
        worst
    }

    pub fn apply(&self, v: Vector3) -> Vector3 {
        let m = &self.matrix;
        Vector3::new(
            m[0][0] * v.x + m[0][1] * v.y + m[0][2] * v.z,
            m[1][0] * v.x + m[1][1] * v.y + m[1][2] * v.z,
            m[2][0] * v.x + m[2][1] * v.y + m[2][2] * v.z,
        )
    }

    /// Rotates a point on the sphere. Rounding can move the norm by a few ulp,
    /// well inside the unit tolerance.
    pub fn rotate(&self, p: UnitVector3) -> UnitVector3 {
        let v = self.apply(p.vector());
        UnitVector3::new(v.x, v.y, v.z).expect("rotation preserves the norm")
    }

    /// Rotates many points at once, the `3 x n` product `R [v_1 .. v_n]`.
    pub fn apply_all(&self, points: &[UnitVector3]) -> Vec<Vector3> {
        points.iter().map(|p| self.apply(p.vector())).collect()
    }
}

/// Rotation-based classifier for a fixed query point.
///
/// Building one computes the rotation once; it can then be applied to any
/// number of polygons.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RotationReduction {
    rotation: RotationMatrix3,
}

impl RotationReduction {
    pub fn new(q: SphericalAngles) -> Self {
        Self { rotation: RotationMatrix3::to_north(q) }
    }

    /// Converts a Cartesian query point to angles via `atan2` first.
    pub fn from_point(q: UnitVector3) -> Self {
        Self::new(q.to_angles())
    }

    pub fn rotation(&self) -> &RotationMatrix3 {
        &self.rotation
    }

    /// Rotated vertices `R v_i`.
    pub fn rotate_vertices(&self, g: &SphericalPolygon) -> Vec<Vector3> {
        self.rotation.apply_all(g.vertices())
    }

    /// The planar polygon `(x_i', y_i')` handed to the winding-number test.
    pub fn project(&self, g: &SphericalPolygon) -> PlanarPolygon {
        planar_drop(&self.rotate_vertices(g))
    }

    /// Classifies the query point against `g`, which should be BAE.
    ///
    /// Validation is left to the caller. A side through the origin whose
    /// rotated chord midpoint has `|z| <= tol` cannot come from a BAE polygon
    /// and is reported as [`Error::AmbiguousBoundary`].
    pub fn classify(&self, g: &SphericalPolygon, tol: f64) -> Result<Classification> {
        let rotated = self.rotate_vertices(g);
        match classify_origin(&planar_drop(&rotated), tol) {
            PlanarState::OnBoundary { edge } => {
                let n = rotated.len();
                let mid_z = 0.5 * (rotated[edge - 1].z + rotated[edge % n].z);
                if mid_z.abs() <= tol {
                    Err(Error::AmbiguousBoundary { edge, dot: mid_z })
                } else if mid_z > 0.0 {
                    Ok(Classification::Boundary { edge })
                } else {
                    Ok(Classification::AntipodalBoundary { edge })
                }
            }
            PlanarState::Interior { wn } => Ok(Classification::Interior { wn }),
            PlanarState::Exterior { wn } => Ok(Classification::Exterior { wn }),
        }
    }
}

fn planar_drop(points: &[Vector3]) -> PlanarPolygon {
    PlanarPolygon::new(points.iter().map(|p| PlanarPoint::new(p.x, p.y)).collect())
        .expect("a spherical polygon has at least three finite vertices")
}

/// One-shot rotation-based classification with `Q` given by its angles.
pub fn classify(g: &SphericalPolygon, q: SphericalAngles, tol: f64) -> Result<Classification> {
    RotationReduction::new(q).classify(g, tol)
}

/// One-shot rotation-based classification with `Q` given in Cartesian form.
pub fn classify_point(g: &SphericalPolygon, q: UnitVector3, tol: f64) -> Result<Classification> {
    RotationReduction::from_point(q).classify(g, tol)
}
