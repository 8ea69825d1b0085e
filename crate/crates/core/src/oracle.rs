//! Slow, independent classification paths used to cross-check the
//! reductions.
//!
//! * [`angle_sum_wn`] sums the signed angle each side subtends at the origin,
//!   instead of counting axis crossings.
//! * [`stereographic`] is the map `p -> 2 cot(theta/2) [x, y]`, which takes
//!   `S^2` minus both poles homeomorphically onto a punctured disc. Since
//!   `[x, y] = sin(theta) [cos(phi), sin(phi)]` its radius is
//!   `2 cot(theta/2) sin(theta) = 2 (1 + cos(theta))`: the south pole goes to
//!   the origin and the north pole would land on the whole circle of radius 4,
//!   so the north pole has no image and both poles are rejected.
//! * [`classify_by_subdivision`] rotates `Q` north, walks each side as a
//!   polyline of great-circle samples, maps it through [`stereographic`] and
//!   takes the angle-sum winding number. Points on or antipodal to a side are
//!   found by measuring spherical distance to the poles.

use std::f64::consts::{PI, TAU};

use crate::classification::Classification;
use crate::error::{Error, Result};
use crate::planar::{PlanarPoint, PlanarPolygon};
use crate::rotation::RotationReduction;
use crate::sphere::{arc_distance, chord_midpoint_side, MidpointSide, SphericalPolygon, UnitVector3};

/// Points with `hypot(x, y)` at or below this are treated as poles.
pub const POLE_GUARD: f64 = 1e-12;

/// Number of chords each side is split into.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SubdivisionConfig {
    segments_per_arc: usize,
}

impl SubdivisionConfig {
    pub fn new(segments_per_arc: usize) -> Result<Self> {
        if segments_per_arc == 0 {
            return Err(Error::InvalidSubdivision);
        }
        Ok(Self { segments_per_arc })
    }

    pub fn segments_per_arc(&self) -> usize {
        self.segments_per_arc
    }
}

impl Default for SubdivisionConfig {
    fn default() -> Self {
        Self { segments_per_arc: 64 }
    }
}

/// Winding number about the origin as `(1 / 2 pi) * sum(delta_theta_i)`.
///
/// Each side contributes `atan2(cross, dot)` of its endpoints, which lies in
/// `(-pi, pi)` as long as the side misses the origin.
pub fn angle_sum_wn(g: &PlanarPolygon) -> Result<i32> {
    let mut total = 0.0;
    for (edge, a, b) in g.sides() {
        let cross = a.x * b.y - a.y * b.x;
        let dot = a.x * b.x + a.y * b.y;
        let at_origin = |p: PlanarPoint| p.x == 0.0 && p.y == 0.0;
        if at_origin(a) || at_origin(b) || (cross == 0.0 && dot < 0.0) {
            return Err(Error::OriginOnEdge { edge });
        }
        total += cross.atan2(dot);
    }
    let turns = total / TAU;
    let rounded = turns.round();
    if (turns - rounded).abs() >= 1e-6 {
        return Err(Error::NonIntegralWinding(turns));
    }
    Ok(rounded as i32)
}

/// `2 cot(theta/2) [x, y]` for a point off both poles.
///
/// `cot(theta/2)` is evaluated as `(1 + cos theta) / sin theta` on the
/// northern half and as `sin theta / (1 - cos theta)` on the southern half,
/// so neither form suffers cancellation.
pub fn stereographic(p: UnitVector3) -> Result<PlanarPoint> {
    let (x, y, z) = (p.x(), p.y(), p.z());
    let rho = x.hypot(y);
    if rho <= POLE_GUARD {
        return Err(Error::PoleProjection);
    }
    let cot_half = if z >= 0.0 { (1.0 + z) / rho } else { rho / (1.0 - z) };
    Ok(PlanarPoint::new(2.0 * cot_half * x, 2.0 * cot_half * y))
}

/// Point at fraction `t` along the minor arc `a -> b`.
pub fn slerp(a: UnitVector3, b: UnitVector3, t: f64) -> UnitVector3 {
    if t == 0.0 {
        return a;
    }
    let (av, bv) = (a.vector(), b.vector());
    let omega = av.cross(bv).norm().atan2(av.dot(bv));
    let s = omega.sin();
    let v = av * (((1.0 - t) * omega).sin() / s) + bv * ((t * omega).sin() / s);
    UnitVector3::normalize(v).expect("slerp of distinct non-antipodal points")
}

/// Classifies `q` against `g` through the subdivided stereographic image.
///
/// A side within angular distance `tol` of `q` or `-q` decides the outcome
/// before any projection; the chord-midpoint side test picks which of the two
/// it passes through.
pub fn classify_by_subdivision(
    g: &SphericalPolygon,
    q: UnitVector3,
    cfg: SubdivisionConfig,
    tol: f64,
) -> Result<Classification> {
    let rotation = *RotationReduction::from_point(q).rotation();
    let rotated: Vec<UnitVector3> = g.vertices().iter().map(|&v| rotation.rotate(v)).collect();
    let n = rotated.len();

    for i in 0..n {
        let (a, b) = (rotated[i], rotated[(i + 1) % n]);
        let near_north = arc_distance(a, b, UnitVector3::NORTH)?;
        let near_south = arc_distance(a, b, UnitVector3::SOUTH)?;
        if near_north.min(near_south) <= tol {
            let edge = i + 1;
            return match chord_midpoint_side(a, b, UnitVector3::NORTH, tol) {
                Ok(MidpointSide::QSide) => Ok(Classification::Boundary { edge }),
                Ok(MidpointSide::AntipodeSide) => Ok(Classification::AntipodalBoundary { edge }),
                Err(Error::AmbiguousMidpoint { dot }) => Err(Error::AmbiguousBoundary { edge, dot }),
                Err(e) => Err(e),
            };
        }
    }

    let m = cfg.segments_per_arc();
    let mut samples = Vec::with_capacity(n * m);
    for i in 0..n {
        let (a, b) = (rotated[i], rotated[(i + 1) % n]);
        for k in 0..m {
            samples.push(stereographic(slerp(a, b, k as f64 / m as f64))?);
        }
    }
    let wn = angle_sum_wn(&PlanarPolygon::new(samples)?)?;
    Ok(if wn > 0 {
        Classification::Interior { wn }
    } else {
        Classification::Exterior { wn }
    })
}

/// Angular distance from `p` to the nearest point of the boundary of `g`.
pub fn boundary_distance(g: &SphericalPolygon, p: UnitVector3) -> Result<f64> {
    g.sides()
        .map(|(_, a, b)| arc_distance(a, b, p))
        .try_fold(PI, |best, d| d.map(|d| best.min(d)))
}
