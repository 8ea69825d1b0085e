use thiserror::Error;

/// Errors raised by the geometric layer.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("polar angle {0} is outside [0, pi]")]
    PolarAngleOutOfRange(f64),

    #[error("non-finite coordinate")]
    NonFinite,

    #[error("vector [{x}, {y}, {z}] has norm {norm}, expected a unit vector")]
    NotUnit { x: f64, y: f64, z: f64, norm: f64 },

    #[error("cannot normalize a zero vector")]
    ZeroVector,

    #[error("polygon needs at least 3 vertices, got {0}")]
    TooFewVertices(usize),

    #[error("side {edge}: consecutive vertices coincide")]
    RepeatedVertex { edge: usize },

    #[error("side {edge}: consecutive vertices are antipodal, the arc is undefined")]
    AntipodalVertices { edge: usize },

    #[error("arc endpoints are identical or antipodal")]
    DegenerateArc,

    #[error("chord midpoint is orthogonal to the query axis (dot {dot:e})")]
    AmbiguousMidpoint { dot: f64 },

    /// The chord midpoint of a side that contains the query axis is orthogonal
    /// to that axis, so neither the point nor its antipode can be placed on the side.
    #[error("side {edge}: cannot decide whether the point or its antipode lies on it (midpoint dot {dot:e}); polygon is not BAE")]
    AmbiguousBoundary { edge: usize, dot: f64 },

    #[error("angle sum undefined: side {edge} passes through the origin")]
    OriginOnEdge { edge: usize },

    #[error("angle sum {0} is not within 1e-6 of an integer multiple of 2*pi")]
    NonIntegralWinding(f64),

    #[error("point lies on or too close to a pole; projection undefined")]
    PoleProjection,

    #[error("segments per arc must be at least 1")]
    InvalidSubdivision,
}

pub type Result<T> = std::result::Result<T, Error>;
