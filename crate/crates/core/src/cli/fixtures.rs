//! The three reference cases, run through the same path as `classify`.

use std::fmt::Write as _;

use super::batch::{run, ResultRecord};
use super::job::JobSpec;
use crate::classification::Outcome;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Expected {
    pub outcome: Outcome,
    pub wn: Option<i32>,
    pub edge_index: Option<usize>,
    pub antipode_on_boundary: bool,
}

impl Expected {
    pub fn matches(&self, r: &ResultRecord) -> bool {
        r.error.is_none()
            && r.outcome == Some(self.outcome)
            && r.wn == self.wn
            && r.edge_index == self.edge_index
            && r.antipode_on_boundary == self.antipode_on_boundary
    }
}

#[derive(Debug, Clone, Copy)]
pub struct FixtureCase {
    pub name: &'static str,
    pub document: &'static str,
    pub expected: Expected,
}

impl FixtureCase {
    pub fn job(&self) -> JobSpec {
        JobSpec::parse_str(self.document).expect("built-in fixture parses")
    }
}

/// The octant with `Q` at the north pole: `-Q` is a vertex.
pub const ANTIPODE_ON_BOUNDARY: FixtureCase = FixtureCase {
    name: "antipode-on-boundary",
    document: include_str!("../../fixtures/antipode_on_boundary.jsonl"),
    expected: Expected { outcome: Outcome::Exterior, wn: None, edge_index: None, antipode_on_boundary: true },
};

/// An isosceles triangle whose third side passes over the north pole.
pub const BOUNDARY_EDGE: FixtureCase = FixtureCase {
    name: "boundary-edge",
    document: include_str!("../../fixtures/boundary_edge.jsonl"),
    expected: Expected { outcome: Outcome::Boundary, wn: None, edge_index: Some(3), antipode_on_boundary: false },
};

/// A ten-vertex self-intersecting polygon wound twice around `Q`.
pub const DOUBLE_WINDING: FixtureCase = FixtureCase {
    name: "double-winding",
    document: include_str!("../../fixtures/double_winding.jsonl"),
    expected: Expected { outcome: Outcome::Interior, wn: Some(2), edge_index: None, antipode_on_boundary: false },
};

/// The same polygon written in degrees.
pub const DOUBLE_WINDING_DEGREES: &str = include_str!("../../fixtures/double_winding_degrees.jsonl");

pub const CASES: [FixtureCase; 3] = [ANTIPODE_ON_BOUNDARY, BOUNDARY_EDGE, DOUBLE_WINDING];

#[derive(Debug, Clone)]
pub struct FixtureRow {
    pub case: &'static str,
    pub expected: Expected,
    pub record: ResultRecord,
}

impl FixtureRow {
    pub fn passed(&self) -> bool {
        self.expected.matches(&self.record)
    }
}

/// One row per case and reduction, in case order.
pub fn run_fixtures() -> Vec<FixtureRow> {
    CASES
        .iter()
        .flat_map(|case| {
            let job = case.job().resolve().expect("built-in fixture resolves");
            run(&job)
                .records
                .into_iter()
                .map(|record| FixtureRow { case: case.name, expected: case.expected, record })
        })
        .collect()
}

fn describe(outcome: Option<Outcome>, wn: Option<i32>, edge: Option<usize>, antipode: bool) -> String {
    match (outcome, wn, edge) {
        (None, ..) => "none".into(),
        (Some(o), _, Some(e)) => format!("{o}(side {e})"),
        (Some(o), Some(w), None) => format!("{o}(wn {w})"),
        (Some(o), None, None) if antipode => format!("{o}(antipode on boundary)"),
        (Some(o), None, None) => o.to_string(),
    }
}

/// A fixed-width expected-versus-actual table followed by a summary line.
pub fn render_table(rows: &[FixtureRow]) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "{:<22}{:<10}{:<34}{:<34}status", "case", "method", "expected", "actual");
    for row in rows {
        let e = row.expected;
        let r = &row.record;
        let actual = match &r.error {
            Some(err) => format!("error: {err}"),
            None => describe(r.outcome, r.wn, r.edge_index, r.antipode_on_boundary),
        };
        let _ = writeln!(
            out,
            "{:<22}{:<10}{:<34}{:<34}{}",
            row.case,
            r.method.as_str(),
            describe(Some(e.outcome), e.wn, e.edge_index, e.antipode_on_boundary),
            actual,
            if row.passed() { "ok" } else { "FAIL" }
        );
    }
    let passed = rows.iter().filter(|r| r.passed()).count();
    let _ = writeln!(out, "{passed}/{} passed", rows.len());
    out
}
