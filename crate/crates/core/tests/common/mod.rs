#![allow(dead_code)]

use std::f64::consts::{PI, TAU};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use spip::oracle::boundary_distance;
use spip::planar::{PlanarPoint, PlanarPolygon};
use spip::sphere::{SphericalPolygon, UnitVector3, Vector3};

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Uniform on the sphere: `z` uniform in `[-1, 1]`, azimuth uniform.
pub fn unit(rng: &mut impl Rng) -> UnitVector3 {
    let z: f64 = rng.random_range(-1.0..=1.0);
    let phi: f64 = rng.random_range(0.0..TAU);
    let r = (1.0 - z * z).max(0.0).sqrt();
    UnitVector3::normalize(Vector3::new(r * phi.cos(), r * phi.sin(), z)).unwrap()
}

/// Some unit vector orthogonal to `c`.
fn orthogonal(c: UnitVector3) -> UnitVector3 {
    let v = c.vector();
    let helper = if v.x.abs() < 0.9 { Vector3::new(1.0, 0.0, 0.0) } else { Vector3::new(0.0, 1.0, 0.0) };
    UnitVector3::normalize(v.cross(helper)).unwrap()
}

/// The point at angular distance `d` from `c` in direction `azimuth`.
pub fn offset(c: UnitVector3, d: f64, azimuth: f64) -> UnitVector3 {
    let e1 = orthogonal(c);
    let e2 = UnitVector3::normalize(c.vector().cross(e1.vector())).unwrap();
    let dir = e1.vector() * azimuth.cos() + e2.vector() * azimuth.sin();
    UnitVector3::normalize(c.vector() * d.cos() + dir * d.sin()).unwrap()
}

/// A polygon with vertices scattered inside a cap, in random order, so it
/// may be self-intersecting and wind several times. Sides shorter than
/// about 1e-3 rad are avoided.
#[derive(Debug, Clone)]
pub struct CapPolygon {
    pub center: UnitVector3,
    pub radius: f64,
    pub polygon: SphericalPolygon,
}

pub fn cap_polygon(rng: &mut impl Rng, radius_range: (f64, f64), n_range: (usize, usize)) -> CapPolygon {
    let center = unit(rng);
    let radius = rng.random_range(radius_range.0..=radius_range.1);
    let n = rng.random_range(n_range.0..=n_range.1);
    loop {
        let vertices: Vec<UnitVector3> = (0..n)
            .map(|_| offset(center, radius * rng.random::<f64>().sqrt(), rng.random_range(0.0..TAU)))
            .collect();
        let ok = (0..n).all(|i| {
            let (a, b) = (vertices[i], vertices[(i + 1) % n]);
            a.vector().cross(b.vector()).norm() > 1e-3
        });
        if ok {
            return CapPolygon { center, radius, polygon: SphericalPolygon::new(vertices).unwrap() };
        }
    }
}

/// Distance from `q` and from `-q` to the boundary, whichever is smaller.
pub fn axis_margin(g: &SphericalPolygon, q: UnitVector3) -> f64 {
    boundary_distance(g, q).unwrap().min(boundary_distance(g, q.antipode()).unwrap())
}

/// A query near the cap half of the time and anywhere on the sphere
/// otherwise, at least `margin` from the boundary and its antipode.
pub fn query(rng: &mut impl Rng, cap: &CapPolygon, margin: f64) -> UnitVector3 {
    loop {
        let q = if rng.random::<bool>() {
            offset(cap.center, rng.random_range(0.0..cap.radius + 0.2), rng.random_range(0.0..TAU))
        } else {
            unit(rng)
        };
        if axis_margin(&cap.polygon, q) >= margin {
            return q;
        }
    }
}

/// The midpoint of side `edge` (1-based).
pub fn side_midpoint(g: &SphericalPolygon, edge: usize) -> UnitVector3 {
    let (a, b) = g.side(edge);
    UnitVector3::normalize(a.vector() + b.vector()).unwrap()
}

/// A uniformly random rotation from a random unit quaternion.
pub fn rotation(rng: &mut impl Rng) -> [[f64; 3]; 3] {
    let (u1, u2, u3): (f64, f64, f64) = (rng.random(), rng.random(), rng.random());
    let (a, b) = ((1.0 - u1).sqrt(), u1.sqrt());
    let (w, x, y, z) = (a * (TAU * u2).sin(), a * (TAU * u2).cos(), b * (TAU * u3).sin(), b * (TAU * u3).cos());
    [
        [1.0 - 2.0 * (y * y + z * z), 2.0 * (x * y - z * w), 2.0 * (x * z + y * w)],
        [2.0 * (x * y + z * w), 1.0 - 2.0 * (x * x + z * z), 2.0 * (y * z - x * w)],
        [2.0 * (x * z - y * w), 2.0 * (y * z + x * w), 1.0 - 2.0 * (x * x + y * y)],
    ]
}

pub fn apply(m: &[[f64; 3]; 3], p: UnitVector3) -> UnitVector3 {
    let v = p.vector();
    let r = |row: [f64; 3]| row[0] * v.x + row[1] * v.y + row[2] * v.z;
    UnitVector3::normalize(Vector3::new(r(m[0]), r(m[1]), r(m[2]))).unwrap()
}

pub fn rotate_polygon(m: &[[f64; 3]; 3], g: &SphericalPolygon) -> SphericalPolygon {
    g.map_vertices(|v| Ok(apply(m, v))).unwrap()
}

/// A random planar polygon in `[-1, 1]^2` with every side at least
/// `clearance` from the origin.
pub fn planar_polygon(rng: &mut impl Rng, n_range: (usize, usize), clearance: f64) -> PlanarPolygon {
    let n = rng.random_range(n_range.0..=n_range.1);
    loop {
        let pts: Vec<PlanarPoint> = (0..n)
            .map(|_| PlanarPoint::new(rng.random_range(-1.0..1.0), rng.random_range(-1.0..1.0)))
            .collect();
        if (0..n).all(|i| segment_origin_distance(pts[i], pts[(i + 1) % n]) >= clearance) {
            return PlanarPolygon::new(pts).unwrap();
        }
    }
}

pub fn segment_origin_distance(a: PlanarPoint, b: PlanarPoint) -> f64 {
    let (dx, dy) = (b.x - a.x, b.y - a.y);
    let len2 = dx * dx + dy * dy;
    let t = if len2 == 0.0 { 0.0 } else { (-(a.x * dx + a.y * dy) / len2).clamp(0.0, 1.0) };
    (a.x + t * dx).hypot(a.y + t * dy)
}

/// Uniform polar and azimuthal angles, `theta` in `[0, pi]`.
pub fn angles(rng: &mut impl Rng) -> (f64, f64) {
    (rng.random_range(0.0..=PI), rng.random_range(0.0..TAU))
}
