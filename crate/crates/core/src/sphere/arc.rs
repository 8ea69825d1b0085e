//! Minor great-circle arcs: containment, distance, pairwise intersection and
//! the chord-midpoint test that tells a point from its antipode on an arc.

use crate::error::{Error, Result};
use crate::sphere::vector::{UnitVector3, Vector3, EPS_NORM};

/// Normal-vector cross products below this are treated as one great circle.
const COPLANAR_EPS: f64 = 1e-12;

/// Which of `q` / `-q` an arc through the `±q` axis passes through.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MidpointSide {
    /// The chord midpoint is in the open hemisphere centred at `q`.
    QSide,
    /// The chord midpoint is in the open hemisphere centred at `-q`.
    AntipodeSide,
}

/// Unit normal of the great circle through `a` and `b`, oriented so that the
/// minor arc runs counter-clockwise from `a` to `b` about it.
pub(crate) fn arc_normal(a: UnitVector3, b: UnitVector3) -> Result<Vector3> {
    let n = a.vector().cross(b.vector());
    let len = n.norm();
    if len <= EPS_NORM {
        return Err(Error::DegenerateArc);
    }
    Ok(n / len)
}

/// Whether `p`, assumed to lie on the great circle with unit normal `n`,
/// falls on the minor arc `a -> b`, with `tol` slack at the endpoints.
fn along_arc(p: Vector3, a: Vector3, b: Vector3, n: Vector3, tol: f64) -> bool {
    a.cross(p).dot(n) >= -tol && p.cross(b).dot(n) >= -tol && p.dot(a + b) > 0.0
}

/// Whether `p` lies on the minor arc `a -> b` within `tol`.
pub fn arc_contains(a: UnitVector3, b: UnitVector3, p: UnitVector3, tol: f64) -> Result<bool> {
    let n = arc_normal(a, b)?;
    let p = p.vector();
    Ok(p.dot(n).abs() <= tol.max(COPLANAR_EPS) && along_arc(p, a.vector(), b.vector(), n, tol))
}

/// Angular distance in radians from `p` to the closest point of the minor arc `a -> b`.
pub fn arc_distance(a: UnitVector3, b: UnitVector3, p: UnitVector3) -> Result<f64> {
    let n = arc_normal(a, b)?;
    let (av, bv, pv) = (a.vector(), b.vector(), p.vector());
    let off_plane = pv.dot(n);
    let foot = pv - n * off_plane;
    if foot.norm() > 0.0 && along_arc(foot, av, bv, n, 0.0) {
        return Ok(off_plane.abs().min(1.0).asin());
    }
    let angle = |u: Vector3| pv.cross(u).norm().atan2(pv.dot(u));
    Ok(angle(av).min(angle(bv)))
}

/// Whether the minor arcs `a1 -> a2` and `b1 -> b2` share a point.
///
/// Touching at an endpoint counts. The two great circles meet at
/// `±(n_a x n_b)`; each candidate is tested against both arcs. Arcs on one
/// great circle fall back to endpoint containment.
pub fn arcs_intersect(
    a1: UnitVector3,
    a2: UnitVector3,
    b1: UnitVector3,
    b2: UnitVector3,
    tol: f64,
) -> Result<bool> {
    let na = arc_normal(a1, a2)?;
    let nb = arc_normal(b1, b2)?;
    let (a1v, a2v, b1v, b2v) = (a1.vector(), a2.vector(), b1.vector(), b2.vector());

    let line = na.cross(nb);
    let len = line.norm();
    if len <= tol.max(COPLANAR_EPS) {
        return Ok([
            arc_contains(a1, a2, b1, tol)?,
            arc_contains(a1, a2, b2, tol)?,
            arc_contains(b1, b2, a1, tol)?,
            arc_contains(b1, b2, a2, tol)?,
        ]
        .into_iter()
        .any(|hit| hit));
    }
    let p = line / len;
    Ok([p, -p].into_iter().any(|c| {
        along_arc(c, a1v, a2v, na, tol) && along_arc(c, b1v, b2v, nb, tol)
    }))
}

/// Decides whether `q` or `-q` lies on the minor arc `vi -> vj`, given that the
/// arc is already known to meet the line through `±q`.
///
/// The chord midpoint `(vi + vj) / 2` sits in the hemisphere of whichever of
/// `±q` the arc passes through, so only the sign of `q . (vi + vj)` matters.
pub fn chord_midpoint_side(
    vi: UnitVector3,
    vj: UnitVector3,
    q: UnitVector3,
    tol: f64,
) -> Result<MidpointSide> {
    let dot = q.vector().dot(vi.vector() + vj.vector());
    if dot.abs() <= tol {
        Err(Error::AmbiguousMidpoint { dot })
    } else if dot > 0.0 {
        Ok(MidpointSide::QSide)
    } else {
        Ok(MidpointSide::AntipodeSide)
    }
}
