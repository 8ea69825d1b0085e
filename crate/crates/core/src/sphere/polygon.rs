use crate::error::{Error, Result};
use crate::sphere::arc::arcs_intersect;
use crate::sphere::hemisphere::is_hemisphere_contained;
use crate::sphere::vector::{UnitVector3, EPS_NORM};

/// A spherical polygon given by its vertex loop.
///
/// Side `i` (1-based) is the minor great-circle arc from vertex `i` to vertex
/// `i + 1`, wrapping around at the end. Non-adjacent repeated vertices are
/// allowed; the boundary may self-intersect.
#[derive(Debug, Clone, PartialEq)]
pub struct SphericalPolygon {
    vertices: Vec<UnitVector3>,
}

impl SphericalPolygon {
    pub fn new(vertices: Vec<UnitVector3>) -> Result<Self> {
        if vertices.len() < 3 {
            return Err(Error::TooFewVertices(vertices.len()));
        }
        if let Some(err) = side_defects(&vertices).into_iter().next() {
            return Err(err);
        }
        Ok(Self { vertices })
    }

    pub fn vertices(&self) -> &[UnitVector3] {
        &self.vertices
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    /// Endpoints of side `edge` (1-based).
    pub fn side(&self, edge: usize) -> (UnitVector3, UnitVector3) {
        let n = self.vertices.len();
        (self.vertices[edge - 1], self.vertices[edge % n])
    }

    /// Sides as `(index, start, end)` with 1-based indices.
    pub fn sides(&self) -> impl Iterator<Item = (usize, UnitVector3, UnitVector3)> + '_ {
        let n = self.vertices.len();
        (0..n).map(move |i| (i + 1, self.vertices[i], self.vertices[(i + 1) % n]))
    }

    /// Applies `f` to every vertex, for instance a rigid rotation.
    pub fn map_vertices(&self, f: impl Fn(UnitVector3) -> Result<UnitVector3>) -> Result<Self> {
        Self::new(self.vertices.iter().copied().map(f).collect::<Result<_>>()?)
    }

    pub fn reversed(&self) -> Self {
        let mut vertices = self.vertices.clone();
        vertices.reverse();
        Self { vertices }
    }
}

fn side_defects(vertices: &[UnitVector3]) -> Vec<Error> {
    let n = vertices.len();
    (0..n)
        .filter_map(|i| {
            let (a, b) = (vertices[i], vertices[(i + 1) % n]);
            if a.vector().cross(b.vector()).norm() > EPS_NORM {
                None
            } else if a.dot(b) > 0.0 {
                Some(Error::RepeatedVertex { edge: i + 1 })
            } else {
                Some(Error::AntipodalVertices { edge: i + 1 })
            }
        })
        .collect()
}

/// Checks that no side meets the antipodal image of any side.
///
/// Returns the 1-based side pairs `(i, j)`, `i <= j`, for which side `i`
/// touches `-(side j)`. The relation is symmetric, so only `i <= j` is tested.
/// Costs `O(n^2)` arc tests; meant for validation, not per query.
pub fn is_bae(g: &SphericalPolygon, tol: f64) -> Result<(bool, Vec<(usize, usize)>)> {
    let sides: Vec<_> = g.sides().collect();
    let mut failing = Vec::new();
    for (pos, &(i, a1, a2)) in sides.iter().enumerate() {
        for &(j, b1, b2) in &sides[pos..] {
            if arcs_intersect(a1, a2, b1.antipode(), b2.antipode(), tol)? {
                failing.push((i, j));
            }
        }
    }
    Ok((failing.is_empty(), failing))
}

/// Outcome of [`validate`].
#[derive(Debug, Clone, PartialEq)]
pub struct ValidationReport {
    /// Every vertex has unit norm within `EPS_NORM`.
    pub is_unit: bool,
    /// At least three vertices and no side joins identical or antipodal vertices.
    pub edges_ok: bool,
    pub is_bae: bool,
    pub is_hc: bool,
    pub hc_witness: Option<UnitVector3>,
    /// Side pairs `(i, j)` where side `i` meets the antipode of side `j`.
    pub failing_edge_pairs: Vec<(usize, usize)>,
    /// Human-readable reasons for every failed check.
    pub problems: Vec<String>,
}

impl ValidationReport {
    pub fn passed(&self) -> bool {
        self.is_unit && self.edges_ok && self.is_bae
    }
}

/// Runs every polygon check on raw Cartesian vertices.
///
/// BAE and hemisphere containment are only evaluated once the vertices are
/// unit and the sides well defined. The two are computed independently; a
/// hemisphere-contained polygon is always BAE, so `is_hc` implies `is_bae`.
pub fn validate(raw: &[[f64; 3]], tol: f64) -> ValidationReport {
    let mut report = ValidationReport {
        is_unit: true,
        edges_ok: true,
        is_bae: false,
        is_hc: false,
        hc_witness: None,
        failing_edge_pairs: Vec::new(),
        problems: Vec::new(),
    };

    let mut vertices = Vec::with_capacity(raw.len());
    for (k, &v) in raw.iter().enumerate() {
        match UnitVector3::new(v[0], v[1], v[2]) {
            Ok(u) => vertices.push(u),
            Err(e) => {
                report.is_unit = false;
                report.problems.push(format!("vertex {}: {e}", k + 1));
            }
        }
    }
    if !report.is_unit {
        report.edges_ok = false;
        return report;
    }

    if vertices.len() < 3 {
        report.edges_ok = false;
        report.problems.push(Error::TooFewVertices(vertices.len()).to_string());
        return report;
    }
    let defects = side_defects(&vertices);
    if !defects.is_empty() {
        report.edges_ok = false;
        report.problems.extend(defects.iter().map(ToString::to_string));
        return report;
    }

    let polygon = SphericalPolygon { vertices };
    match is_bae(&polygon, tol) {
        Ok((ok, pairs)) => {
            report.is_bae = ok;
            if !ok {
                report.problems.push(format!(
                    "boundary meets its antipode at side pairs {pairs:?}"
                ));
            }
            report.failing_edge_pairs = pairs;
        }
        Err(e) => report.problems.push(e.to_string()),
    }
    report.hc_witness = is_hemisphere_contained(polygon.vertices());
    report.is_hc = report.hc_witness.is_some();
    report
}

/// Convenience for callers holding an already-constructed polygon.
pub fn validate_polygon(g: &SphericalPolygon, tol: f64) -> ValidationReport {
    let raw: Vec<[f64; 3]> = g.vertices().iter().map(|v| v.to_array()).collect();
    validate(&raw, tol)
}

/// Smallest `v_i . v_j` over the sides; above `-1` means every side is shorter
/// than a semicircle.
pub fn min_side_dot(g: &SphericalPolygon) -> f64 {
    g.sides()
        .map(|(_, a, b)| a.dot(b))
        .fold(f64::INFINITY, f64::min)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sphere::vector::{from_angles, SphericalAngles};
    use std::f64::consts::{FRAC_PI_2, PI};

    fn ang(theta: f64, phi: f64) -> UnitVector3 {
        from_angles(SphericalAngles::new(theta, phi).unwrap())
    }

    fn octant() -> SphericalPolygon {
        SphericalPolygon::new(vec![ang(FRAC_PI_2, 0.0), ang(PI, 0.0), ang(FRAC_PI_2, FRAC_PI_2)])
            .unwrap()
    }

    #[test]
    fn construction_checks() {
        let a = ang(0.3, 0.0);
        let b = ang(0.3, 2.0);
        let c = ang(0.3, 4.0);
        assert_eq!(SphericalPolygon::new(vec![a, b]), Err(Error::TooFewVertices(2)));
        assert_eq!(
            SphericalPolygon::new(vec![a, b, b, c]),
            Err(Error::RepeatedVertex { edge: 2 })
        );
        assert_eq!(
            SphericalPolygon::new(vec![a, b, c, c.antipode()]),
            Err(Error::AntipodalVertices { edge: 3 })
        );
        // A repeat that is not adjacent is fine.
        assert!(SphericalPolygon::new(vec![a, b, c, a, ang(0.5, 1.0)]).is_ok());
    }

    #[test]
    fn octant_is_bae() {
        let (ok, pairs) = is_bae(&octant(), 1e-12).unwrap();
        assert!(ok, "{pairs:?}");
    }

    #[test]
    fn antipodal_vertices_break_bae() {
        let v = ang(1.0, 0.5);
        let g = SphericalPolygon::new(vec![v, ang(FRAC_PI_2, 2.0), v.antipode(), ang(FRAC_PI_2, 4.0)])
            .unwrap();
        let (ok, pairs) = is_bae(&g, 1e-12).unwrap();
        assert!(!ok);
        assert!(!pairs.is_empty());
    }

    #[test]
    fn report_for_zero_vertex() {
        let r = validate(&[[1.0, 0.0, 0.0], [0.0, 0.0, 0.0], [0.0, 1.0, 0.0]], 1e-12);
        assert!(!r.is_unit && !r.edges_ok && !r.passed());
        assert!(r.problems[0].starts_with("vertex 2"), "{:?}", r.problems);
    }

    #[test]
    fn report_for_octant() {
        let r = validate_polygon(&octant(), 1e-12);
        assert!(r.passed());
        assert!(r.is_hc && r.is_bae);
        assert!(min_side_dot(&octant()) > -1.0);
    }

    #[test]
    fn side_lookup_wraps() {
        let g = octant();
        assert_eq!(g.side(3), (g.vertices()[2], g.vertices()[0]));
        assert_eq!(g.sides().count(), 3);
    }
}
