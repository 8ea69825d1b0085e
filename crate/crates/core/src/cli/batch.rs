//! Classifies every (point, polygon) pair of a job.

use serde::{Deserialize, Serialize};

use super::job::{Job, JobPolygon, Reduction};
use crate::classification::{Classification, Outcome};
use crate::oracle::{classify_by_subdivision, SubdivisionConfig};
use crate::rotation::RotationReduction;
use crate::shearing::ShearPlan;
use crate::sphere::{SphericalPolygon, ValidationReport};

/// Segments per side used by `--verify`.
pub const VERIFY_SEGMENTS: usize = 64;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Validation {
    pub status: Status,
    pub reasons: Vec<String>,
}

impl From<&ValidationReport> for Validation {
    fn from(r: &ValidationReport) -> Self {
        Self {
            status: if r.passed() { Status::Pass } else { Status::Fail },
            reasons: r.problems.clone(),
        }
    }
}

/// One output line.
///
/// `outcome` is null only when no classification was made (failed strict
/// validation or an error). `edge_index` is set exactly for boundary
/// outcomes, and `wn` for interior/exterior outcomes except when the
/// antipode of the point was found on the boundary.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ResultRecord {
    pub polygon_id: String,
    pub point_id: String,
    pub method: Reduction,
    pub outcome: Option<Outcome>,
    pub wn: Option<i32>,
    pub edge_index: Option<usize>,
    pub antipode_on_boundary: bool,
    pub validation: Validation,
    /// Oracle agreement; null unless verification was requested.
    pub verified: Option<bool>,
    pub error: Option<String>,
}

impl ResultRecord {
    fn blank(polygon: &JobPolygon, point_id: &str, method: Reduction) -> Self {
        Self {
            polygon_id: polygon.id.clone(),
            point_id: point_id.to_owned(),
            method,
            outcome: None,
            wn: None,
            edge_index: None,
            antipode_on_boundary: false,
            validation: Validation::from(&polygon.report),
            verified: None,
            error: None,
        }
    }

    fn set(&mut self, c: Classification) {
        self.outcome = Some(c.outcome());
        self.wn = c.winding_number();
        self.edge_index = c.edge_index();
        self.antipode_on_boundary = c.is_antipodal_boundary();
    }

    /// A record counts as a disagreement when it carries an error or the
    /// oracle rejected it.
    pub fn is_disagreement(&self) -> bool {
        self.error.is_some() || self.verified == Some(false)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("records serialize")
    }
}

#[derive(Debug, Clone, Default)]
pub struct BatchResult {
    pub records: Vec<ResultRecord>,
    pub polygons: usize,
    pub failed_polygons: usize,
    pub strict: bool,
}

pub const EXIT_OK: i32 = 0;
pub const EXIT_DISAGREEMENT: i32 = 1;
pub const EXIT_INPUT: i32 = 2;
pub const EXIT_VALIDATION: i32 = 3;

impl BatchResult {
    pub fn disagreements(&self) -> usize {
        self.records.iter().filter(|r| r.is_disagreement()).count()
    }

    pub fn exit_code(&self) -> i32 {
        let all_failed = self.polygons > 0 && self.failed_polygons == self.polygons;
        if self.failed_polygons > 0 && (self.strict || all_failed) {
            EXIT_VALIDATION
        } else if self.disagreements() > 0 {
            EXIT_DISAGREEMENT
        } else {
            EXIT_OK
        }
    }

    /// Records as JSON lines.
    pub fn to_jsonl(&self) -> String {
        self.records.iter().map(|r| r.to_json() + "\n").collect()
    }
}

/// Per-point state shared by every polygon.
struct PointPlan {
    rotation: RotationReduction,
    shear: ShearPlan,
}

fn classify_with(
    plan: &PointPlan,
    method: Reduction,
    g: &SphericalPolygon,
    tol: f64,
) -> crate::Result<Classification> {
    match method {
        Reduction::Rotation => plan.rotation.classify(g, tol),
        Reduction::Shearing => plan.shear.classify(g, tol),
    }
}

/// Runs the job. Output order is points, then polygons, then reductions
/// (rotation before shearing), all in input order.
pub fn run(job: &Job) -> BatchResult {
    let cfg = SubdivisionConfig::new(VERIFY_SEGMENTS).expect("positive segment count");
    let failed = job.polygons.iter().filter(|p| !p.report.passed()).count();
    let mut records = Vec::with_capacity(job.points.len() * job.polygons.len() * 2);

    for point in &job.points {
        let q = point.position;
        let plan = PointPlan { rotation: RotationReduction::from_point(q), shear: ShearPlan::new(q) };
        for polygon in &job.polygons {
            let first = records.len();
            let classifiable = match &polygon.polygon {
                Some(g) if polygon.report.passed() || !job.strict_validate => Some(g),
                _ => None,
            };
            let mut oracle = None;
            for &method in job.method.reductions() {
                let mut record = ResultRecord::blank(polygon, &point.id, method);
                if let Some(g) = classifiable {
                    match classify_with(&plan, method, g, job.tolerance) {
                        Ok(c) => {
                            record.set(c);
                            if job.verify {
                                let expected = oracle
                                    .get_or_insert_with(|| classify_by_subdivision(g, q, cfg, job.tolerance));
                                match expected {
                                    Ok(o) => record.verified = Some(*o == c),
                                    Err(e) => {
                                        record.verified = Some(false);
                                        record.error = Some(format!("oracle: {e}"));
                                    }
                                }
                            }
                        }
                        Err(e) => record.error = Some(e.to_string()),
                    }
                }
                records.push(record);
            }
            mark_method_disagreement(&mut records[first..]);
        }
    }

    BatchResult { records, polygons: job.polygons.len(), failed_polygons: failed, strict: job.strict_validate }
}

fn mark_method_disagreement(pair: &mut [ResultRecord]) {
    if let [a, b] = pair {
        let same = (a.outcome, a.wn, a.edge_index, a.antipode_on_boundary)
            == (b.outcome, b.wn, b.edge_index, b.antipode_on_boundary);
        if !same && a.error.is_none() && b.error.is_none() {
            for r in [a, b] {
                r.error = Some("rotation and shearing disagree".into());
            }
        }
    }
}
