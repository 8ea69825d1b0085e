use serde::{Deserialize, Serialize};
use std::fmt;

/// Where a query point lies relative to a spherical polygon.
///
/// Side numbers are 1-based. Winding numbers are counted counter-clockwise
/// about the query point as seen from outside the sphere; a positive count
/// means interior.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Classification {
    /// The point lies on side `edge`.
    Boundary { edge: usize },
    Interior { wn: i32 },
    Exterior { wn: i32 },
    /// The antipode of the point lies on side `edge`, so for a BAE polygon the
    /// point itself is exterior. No winding number is computed in this case.
    AntipodalBoundary { edge: usize },
}

/// The three-way outcome without the attached data.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Outcome {
    Boundary,
    Interior,
    Exterior,
}

impl Outcome {
    pub fn as_str(self) -> &'static str {
        match self {
            Outcome::Boundary => "boundary",
            Outcome::Interior => "interior",
            Outcome::Exterior => "exterior",
        }
    }
}

impl fmt::Display for Outcome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl Classification {
    pub fn outcome(&self) -> Outcome {
        match self {
            Self::Boundary { .. } => Outcome::Boundary,
            Self::Interior { .. } => Outcome::Interior,
            Self::Exterior { .. } | Self::AntipodalBoundary { .. } => Outcome::Exterior,
        }
    }

    /// `None` for boundary points and for the antipode-on-boundary branch.
    pub fn winding_number(&self) -> Option<i32> {
        match *self {
            Self::Interior { wn } | Self::Exterior { wn } => Some(wn),
            _ => None,
        }
    }

    /// The side containing the point; `None` unless the outcome is boundary.
    pub fn edge_index(&self) -> Option<usize> {
        match *self {
            Self::Boundary { edge } => Some(edge),
            _ => None,
        }
    }

    pub fn is_antipodal_boundary(&self) -> bool {
        matches!(self, Self::AntipodalBoundary { .. })
    }
}

impl fmt::Display for Classification {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::Boundary { edge } => write!(f, "boundary(side {edge})"),
            Self::Interior { wn } => write!(f, "interior(wn {wn})"),
            Self::Exterior { wn } => write!(f, "exterior(wn {wn})"),
            Self::AntipodalBoundary { edge } => write!(f, "exterior(antipode on side {edge})"),
        }
    }
}
