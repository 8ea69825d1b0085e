use std::f64::consts::PI;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use crate::error::{Error, Result};

/// Tolerance on `| |v| - 1 |` for a vector to count as a point on the unit sphere.
pub const EPS_NORM: f64 = 1e-9;

/// A plain Cartesian 3-vector.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct Vector3 {
    pub x: f64,
    pub y: f64,
    pub z: f64,
}

impl Vector3 {
    pub const fn new(x: f64, y: f64, z: f64) -> Self {
        Self { x, y, z }
    }

    pub fn dot(self, other: Self) -> f64 {
        self.x * other.x + self.y * other.y + self.z * other.z
    }

    pub fn cross(self, other: Self) -> Self {
        Self {
            x: self.y * other.z - self.z * other.y,
            y: self.z * other.x - self.x * other.z,
            z: self.x * other.y - self.y * other.x,
        }
    }

    pub fn norm(self) -> f64 {
        self.dot(self).sqrt()
    }

    pub fn is_finite(self) -> bool {
        self.x.is_finite() && self.y.is_finite() && self.z.is_finite()
    }

    pub fn to_array(self) -> [f64; 3] {
        [self.x, self.y, self.z]
    }
}

impl From<[f64; 3]> for Vector3 {
    fn from([x, y, z]: [f64; 3]) -> Self {
        Self { x, y, z }
    }
}

impl Add for Vector3 {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        Self::new(self.x + rhs.x, self.y + rhs.y, self.z + rhs.z)
    }
}

impl Sub for Vector3 {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        Self::new(self.x - rhs.x, self.y - rhs.y, self.z - rhs.z)
    }
}

impl Neg for Vector3 {
    type Output = Self;
    fn neg(self) -> Self {
        Self::new(-self.x, -self.y, -self.z)
    }
}

impl Mul<f64> for Vector3 {
    type Output = Self;
    fn mul(self, s: f64) -> Self {
        Self::new(self.x * s, self.y * s, self.z * s)
    }
}

impl Div<f64> for Vector3 {
    type Output = Self;
    fn div(self, s: f64) -> Self {
        Self::new(self.x / s, self.y / s, self.z / s)
    }
}

/// Polar angle `theta` in `[0, pi]` measured from the north pole `[0, 0, 1]`,
/// and azimuth `phi` measured from the +x axis towards +y.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SphericalAngles {
    theta: f64,
    phi: f64,
}

impl SphericalAngles {
    pub fn new(theta: f64, phi: f64) -> Result<Self> {
        if !theta.is_finite() || !phi.is_finite() {
            return Err(Error::NonFinite);
        }
        if !(0.0..=PI).contains(&theta) {
            return Err(Error::PolarAngleOutOfRange(theta));
        }
        Ok(Self { theta, phi })
    }

    pub fn from_degrees(theta: f64, phi: f64) -> Result<Self> {
        Self::new(theta.to_radians(), phi.to_radians())
    }

    pub fn theta(&self) -> f64 {
        self.theta
    }

    pub fn phi(&self) -> f64 {
        self.phi
    }
}

/// A point on the unit sphere.
///
/// Construction through [`UnitVector3::new`] rejects vectors whose norm is
/// off by more than [`EPS_NORM`]; the components are kept as given.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct UnitVector3(Vector3);

impl UnitVector3 {
    pub const NORTH: Self = Self(Vector3::new(0.0, 0.0, 1.0));
    pub const SOUTH: Self = Self(Vector3::new(0.0, 0.0, -1.0));

    pub fn new(x: f64, y: f64, z: f64) -> Result<Self> {
        let v = Vector3::new(x, y, z);
        if !v.is_finite() {
            return Err(Error::NonFinite);
        }
        let norm = v.norm();
        if (norm - 1.0).abs() > EPS_NORM {
            return Err(Error::NotUnit { x, y, z, norm });
        }
        Ok(Self(v))
    }

    /// Scales a non-zero vector onto the sphere.
    pub fn normalize(v: Vector3) -> Result<Self> {
        if !v.is_finite() {
            return Err(Error::NonFinite);
        }
        let norm = v.norm();
        if norm == 0.0 {
            return Err(Error::ZeroVector);
        }
        Ok(Self(v / norm))
    }

    /// `[sin(theta) cos(phi), sin(theta) sin(phi), cos(theta)]`.
    pub fn from_angles(a: SphericalAngles) -> Self {
        let (st, ct) = a.theta.sin_cos();
        let (sp, cp) = a.phi.sin_cos();
        Self(Vector3::new(st * cp, st * sp, ct))
    }

    /// Inverse of [`UnitVector3::from_angles`]; `phi` lands in `(-pi, pi]`.
    ///
    /// `theta` is taken from `atan2(hypot(x, y), z)`, which stays accurate near
    /// both poles where `acos(z)` loses digits.
    pub fn to_angles(self) -> SphericalAngles {
        let Vector3 { x, y, z } = self.0;
        SphericalAngles {
            theta: x.hypot(y).atan2(z),
            phi: y.atan2(x),
        }
    }

    pub fn antipode(self) -> Self {
        Self(-self.0)
    }

    pub fn x(&self) -> f64 {
        self.0.x
    }

    pub fn y(&self) -> f64 {
        self.0.y
    }

    pub fn z(&self) -> f64 {
        self.0.z
    }

    pub fn vector(self) -> Vector3 {
        self.0
    }

    pub fn dot(self, other: Self) -> f64 {
        self.0.dot(other.0)
    }

    pub fn to_array(self) -> [f64; 3] {
        self.0.to_array()
    }
}

impl fmt::Display for UnitVector3 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}, {}, {}]", self.0.x, self.0.y, self.0.z)
    }
}

/// Free-function form of [`UnitVector3::from_angles`].
pub fn from_angles(a: SphericalAngles) -> UnitVector3 {
    UnitVector3::from_angles(a)
}

/// Free-function form of [`UnitVector3::antipode`].
pub fn antipode(p: UnitVector3) -> UnitVector3 {
    p.antipode()
}
