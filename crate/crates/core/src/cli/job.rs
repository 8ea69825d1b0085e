//! Job documents: one JSON object per line, tagged by `"type"`.
//!
//! ```text
//! {"type":"job","method":"both","tolerance":1e-12,"verify":false,"angle_unit":"radians"}
//! {"type":"polygon","id":"tri","vertices":[{"theta":0.5,"phi":0.0},[0.0,0.6,0.8],...]}
//! {"type":"point","id":"q","position":{"theta":0.0,"phi":0.0}}
//! ```
//!
//! The `job` line is optional and every field in it has a default. Blank
//! lines are skipped. See `docs/format.md` for the full field list.

use std::collections::HashSet;
use std::fmt::Write as _;
use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::planar::DEFAULT_TOLERANCE;
use crate::sphere::{validate, SphericalAngles, SphericalPolygon, UnitVector3, ValidationReport, Vector3};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize, clap::ValueEnum)]
#[serde(rename_all = "lowercase")]
pub enum Method {
    Rotation,
    Shearing,
    #[default]
    Both,
}

/// A single reduction, as named in result records.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Reduction {
    Rotation,
    Shearing,
}

impl Method {
    pub fn reductions(self) -> &'static [Reduction] {
        match self {
            Method::Rotation => &[Reduction::Rotation],
            Method::Shearing => &[Reduction::Shearing],
            Method::Both => &[Reduction::Rotation, Reduction::Shearing],
        }
    }
}

impl Reduction {
    pub fn as_str(self) -> &'static str {
        match self {
            Reduction::Rotation => "rotation",
            Reduction::Shearing => "shearing",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum AngleUnit {
    #[default]
    Radians,
    Degrees,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Angles {
    pub theta: f64,
    pub phi: f64,
}

/// A position as polar/azimuthal angles or as a Cartesian triple.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Coordinates {
    Angles(Angles),
    Cartesian([f64; 3]),
}

impl Coordinates {
    fn is_finite(&self) -> bool {
        match *self {
            Coordinates::Angles(a) => a.theta.is_finite() && a.phi.is_finite(),
            Coordinates::Cartesian(c) => c.iter().all(|v| v.is_finite()),
        }
    }

    /// Cartesian coordinates, with angles converted from `unit`. No unit
    /// norm check is made here.
    pub fn to_cartesian(&self, unit: AngleUnit) -> crate::Result<[f64; 3]> {
        match *self {
            Coordinates::Angles(Angles { theta, phi }) => {
                let a = match unit {
                    AngleUnit::Radians => SphericalAngles::new(theta, phi)?,
                    AngleUnit::Degrees => SphericalAngles::from_degrees(theta, phi)?,
                };
                Ok(UnitVector3::from_angles(a).to_array())
            }
            Coordinates::Cartesian(c) => Ok(c),
        }
    }
}

impl std::fmt::Display for Coordinates {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Coordinates::Angles(a) => write!(f, "(theta {}, phi {})", a.theta, a.phi),
            Coordinates::Cartesian([x, y, z]) => write!(f, "[{x}, {y}, {z}]"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PolygonInput {
    pub id: String,
    pub vertices: Vec<Coordinates>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PointInput {
    pub id: String,
    pub position: Coordinates,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields, default)]
struct Header {
    method: Method,
    tolerance: f64,
    verify: bool,
    angle_unit: AngleUnit,
    normalize: bool,
    strict_validate: bool,
}

impl Default for Header {
    fn default() -> Self {
        Self {
            method: Method::default(),
            tolerance: DEFAULT_TOLERANCE,
            verify: false,
            angle_unit: AngleUnit::default(),
            normalize: false,
            strict_validate: false,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "lowercase")]
enum Line {
    Job(Header),
    Polygon(PolygonInput),
    Point(PointInput),
}

#[derive(Debug, Error)]
pub enum InputError {
    #[error("cannot read {path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
    #[error("line {line}: {message}")]
    Syntax { line: usize, message: String },
    #[error("line {line}: a second job header")]
    DuplicateHeader { line: usize },
    #[error("duplicate {kind} id {id:?}")]
    DuplicateId { kind: &'static str, id: String },
    #[error("tolerance must be positive and finite, got {0}")]
    Tolerance(f64),
    #[error("{0}: non-finite value")]
    NonFinite(String),
    #[error("{what}: {source}")]
    Coordinate {
        what: String,
        #[source]
        source: crate::Error,
    },
}

/// A job exactly as written, before any geometric conversion.
#[derive(Debug, Clone, PartialEq)]
pub struct JobSpec {
    pub method: Method,
    pub tolerance: f64,
    pub verify: bool,
    pub angle_unit: AngleUnit,
    /// Rescale Cartesian inputs onto the sphere instead of rejecting them.
    pub normalize: bool,
    /// Leave polygons that fail validation unclassified.
    pub strict_validate: bool,
    pub polygons: Vec<PolygonInput>,
    pub points: Vec<PointInput>,
}

impl Default for JobSpec {
    fn default() -> Self {
        Self::from_header(Header::default())
    }
}

impl JobSpec {
    fn from_header(h: Header) -> Self {
        Self {
            method: h.method,
            tolerance: h.tolerance,
            verify: h.verify,
            angle_unit: h.angle_unit,
            normalize: h.normalize,
            strict_validate: h.strict_validate,
            polygons: Vec::new(),
            points: Vec::new(),
        }
    }

    fn header(&self) -> Header {
        Header {
            method: self.method,
            tolerance: self.tolerance,
            verify: self.verify,
            angle_unit: self.angle_unit,
            normalize: self.normalize,
            strict_validate: self.strict_validate,
        }
    }

    /// Parses and checks a job document.
    pub fn parse_str(text: &str) -> Result<Self, InputError> {
        let mut header = None;
        let mut polygons = Vec::new();
        let mut points = Vec::new();
        for (k, raw) in text.lines().enumerate() {
            let line = k + 1;
            if raw.trim().is_empty() {
                continue;
            }
            let parsed: Line = serde_json::from_str(raw)
                .map_err(|e| InputError::Syntax { line, message: e.to_string() })?;
            match parsed {
                Line::Job(h) => {
                    if header.replace(h).is_some() {
                        return Err(InputError::DuplicateHeader { line });
                    }
                }
                Line::Polygon(p) => polygons.push(p),
                Line::Point(p) => points.push(p),
            }
        }
        let job = Self { polygons, points, ..Self::from_header(header.unwrap_or_default()) };
        job.check()?;
        Ok(job)
    }

    /// Id uniqueness, tolerance and finiteness.
    pub fn check(&self) -> Result<(), InputError> {
        if !(self.tolerance.is_finite() && self.tolerance > 0.0) {
            return Err(InputError::Tolerance(self.tolerance));
        }
        let mut seen = HashSet::new();
        for p in &self.polygons {
            if !seen.insert(p.id.as_str()) {
                return Err(InputError::DuplicateId { kind: "polygon", id: p.id.clone() });
            }
            for (k, v) in p.vertices.iter().enumerate() {
                if !v.is_finite() {
                    return Err(InputError::NonFinite(format!("polygon {:?} vertex {}", p.id, k + 1)));
                }
            }
        }
        seen.clear();
        for p in &self.points {
            if !seen.insert(p.id.as_str()) {
                return Err(InputError::DuplicateId { kind: "point", id: p.id.clone() });
            }
            if !p.position.is_finite() {
                return Err(InputError::NonFinite(format!("point {:?}", p.id)));
            }
        }
        Ok(())
    }

    /// Writes the job back out; [`JobSpec::parse_str`] of the result gives
    /// an equal job.
    pub fn to_jsonl(&self) -> String {
        let mut out = String::new();
        let mut push = |line: &Line| {
            let _ = writeln!(out, "{}", serde_json::to_string(line).expect("job lines serialize"));
        };
        push(&Line::Job(self.header()));
        for p in &self.polygons {
            push(&Line::Polygon(p.clone()));
        }
        for p in &self.points {
            push(&Line::Point(p.clone()));
        }
        out
    }

    fn position(&self, c: &Coordinates, what: impl Fn() -> String) -> Result<UnitVector3, InputError> {
        let wrap = |source| InputError::Coordinate { what: format!("{} {c}", what()), source };
        let [x, y, z] = c.to_cartesian(self.angle_unit).map_err(wrap)?;
        if self.normalize {
            UnitVector3::normalize(Vector3::new(x, y, z)).map_err(wrap)
        } else {
            UnitVector3::new(x, y, z).map_err(wrap)
        }
    }

    /// Raw Cartesian vertices of polygon `index`, normalized if requested but
    /// not required to be unit.
    pub fn raw_vertices(&self, index: usize) -> Result<Vec<[f64; 3]>, InputError> {
        let p = &self.polygons[index];
        p.vertices
            .iter()
            .enumerate()
            .map(|(k, c)| {
                let what = || format!("polygon {:?} vertex {}", p.id, k + 1);
                if self.normalize {
                    self.position(c, what).map(UnitVector3::to_array)
                } else {
                    c.to_cartesian(self.angle_unit)
                        .map_err(|source| InputError::Coordinate { what: format!("{} {c}", what()), source })
                }
            })
            .collect()
    }

    /// Converts every position to a unit vector and validates each polygon.
    ///
    /// A vertex or point off the sphere is an input error naming it; a
    /// polygon that is not BAE is not, and is only flagged in its report.
    pub fn resolve(&self) -> Result<Job, InputError> {
        self.check()?;
        let mut polygons = Vec::with_capacity(self.polygons.len());
        for p in &self.polygons {
            let vertices = p
                .vertices
                .iter()
                .enumerate()
                .map(|(k, c)| self.position(c, || format!("polygon {:?} vertex {}", p.id, k + 1)))
                .collect::<Result<Vec<_>, _>>()?;
            let raw: Vec<[f64; 3]> = vertices.iter().map(|v| v.to_array()).collect();
            let report = validate(&raw, self.tolerance);
            let polygon = if report.edges_ok { SphericalPolygon::new(vertices).ok() } else { None };
            polygons.push(JobPolygon { id: p.id.clone(), polygon, report });
        }
        let points = self
            .points
            .iter()
            .map(|p| {
                Ok(JobPoint {
                    id: p.id.clone(),
                    position: self.position(&p.position, || format!("point {:?}", p.id))?,
                })
            })
            .collect::<Result<Vec<_>, InputError>>()?;
        Ok(Job {
            method: self.method,
            tolerance: self.tolerance,
            verify: self.verify,
            strict_validate: self.strict_validate,
            polygons,
            points,
        })
    }
}

/// Reads a job document from `path`; `-` reads standard input.
pub fn parse_input(path: impl AsRef<Path>) -> Result<JobSpec, InputError> {
    let path = path.as_ref();
    let text = if path == Path::new("-") {
        std::io::read_to_string(std::io::stdin())
    } else {
        std::fs::read_to_string(path)
    }
    .map_err(|source| InputError::Io { path: path.to_path_buf(), source })?;
    JobSpec::parse_str(&text)
}

#[derive(Debug, Clone)]
pub struct JobPolygon {
    pub id: String,
    /// `None` when the vertices do not form a polygon at all.
    pub polygon: Option<SphericalPolygon>,
    pub report: ValidationReport,
}

#[derive(Debug, Clone)]
pub struct JobPoint {
    pub id: String,
    pub position: UnitVector3,
}

/// A job with every position on the sphere and every polygon validated.
#[derive(Debug, Clone)]
pub struct Job {
    pub method: Method,
    pub tolerance: f64,
    pub verify: bool,
    pub strict_validate: bool,
    pub polygons: Vec<JobPolygon>,
    pub points: Vec<JobPoint>,
}
