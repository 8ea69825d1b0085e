//! SVG panels of projected polygons, one per (point, polygon, reduction).

use std::fmt::Write as _;

use super::job::{Job, Reduction};
use crate::planar::PlanarPolygon;
use crate::rotation::RotationReduction;
use crate::shearing::ShearPlan;

const PANEL: f64 = 260.0;
const COLUMNS: usize = 3;

fn escape(s: &str) -> String {
    s.replace('&', "&amp;").replace('<', "&lt;").replace('>', "&gt;").replace('"', "&quot;")
}

fn panel(out: &mut String, x0: f64, y0: f64, label: &str, g: &PlanarPolygon) {
    let c = PANEL / 2.0;
    let extent = g
        .vertices()
        .iter()
        .map(|p| p.x.abs().max(p.y.abs()))
        .fold(0.0, f64::max)
        .max(1e-12);
    let scale = 0.42 * PANEL / extent;
    let _ = writeln!(out, r##"<g transform="translate({x0},{y0})">"##);
    let _ = writeln!(out, r##"<rect width="{PANEL}" height="{PANEL}" fill="#fff" stroke="#999"/>"##);
    let _ = writeln!(out, r##"<line x1="0" y1="{c}" x2="{PANEL}" y2="{c}" stroke="#ddd"/>"##);
    let _ = writeln!(out, r##"<line x1="{c}" y1="0" x2="{c}" y2="{PANEL}" stroke="#ddd"/>"##);
    let points: Vec<String> = g
        .vertices()
        .iter()
        .map(|p| format!("{:.3},{:.3}", c + p.x * scale, c - p.y * scale))
        .collect();
    let _ = writeln!(
        out,
        r##"<polygon points="{}" fill="#4a7ab733" stroke="#1f4e8c" stroke-width="1.2"/>"##,
        points.join(" ")
    );
    let first = &g.vertices()[0];
    let _ = writeln!(
        out,
        r##"<circle cx="{:.3}" cy="{:.3}" r="3" fill="#1f4e8c"/>"##,
        c + first.x * scale,
        c - first.y * scale
    );
    let _ = writeln!(out, r##"<circle cx="{c}" cy="{c}" r="3.5" fill="#c0392b"/>"##);
    let _ = writeln!(out, r##"<text x="6" y="16" font-family="monospace" font-size="11">{}</text>"##, escape(label));
    let _ = writeln!(out, "</g>");
}

/// Renders every projection the job would classify.
pub fn render(job: &Job) -> String {
    let mut panels = Vec::new();
    for point in &job.points {
        let rotation = RotationReduction::from_point(point.position);
        let shear = ShearPlan::new(point.position);
        for polygon in &job.polygons {
            let Some(g) = &polygon.polygon else { continue };
            for &method in job.method.reductions() {
                let projected = match method {
                    Reduction::Rotation => rotation.project(g),
                    Reduction::Shearing => shear.project(g),
                };
                panels.push((format!("{} / {} / {}", polygon.id, point.id, method.as_str()), projected));
            }
        }
    }

    let cols = panels.len().clamp(1, COLUMNS);
    let rows = panels.len().div_ceil(COLUMNS).max(1);
    let mut out = String::new();
    let _ = writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{}" height="{}">"#,
        cols as f64 * PANEL,
        rows as f64 * PANEL
    );
    for (k, (label, g)) in panels.iter().enumerate() {
        let (r, c) = (k / COLUMNS, k % COLUMNS);
        panel(&mut out, c as f64 * PANEL, r as f64 * PANEL, label, g);
    }
    out.push_str("</svg>\n");
    out
}
