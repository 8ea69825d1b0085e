//! Points, arcs and polygons on the unit sphere, plus the polygon checks
//! (BAE, hemisphere containment) the reductions rely on.

mod arc;
mod hemisphere;
mod polygon;
mod vector;

pub use arc::{arc_contains, arc_distance, arcs_intersect, chord_midpoint_side, MidpointSide};
pub use hemisphere::{is_hemisphere_contained, HC_MARGIN};
pub use polygon::{
    is_bae, min_side_dot, validate, validate_polygon, SphericalPolygon, ValidationReport,
};
pub use vector::{antipode, from_angles, SphericalAngles, UnitVector3, Vector3, EPS_NORM};
