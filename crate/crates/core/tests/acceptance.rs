//! One PASS/FAIL line per acceptance criterion; exits non-zero on any failure.

mod common;

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::process::Command;
use std::time::{Duration, Instant};

use common::*;
use rand::Rng;
use spip::cli::fixtures::{ANTIPODE_ON_BOUNDARY, BOUNDARY_EDGE, DOUBLE_WINDING};
use spip::oracle::{angle_sum_wn, classify_by_subdivision, SubdivisionConfig};
use spip::planar::classify_origin;
use spip::rotation::RotationMatrix3;
use spip::shearing::ShearPlan;
use spip::sphere::{arc_distance, chord_midpoint_side, MidpointSide, SphericalAngles, SphericalPolygon, UnitVector3};
use spip::{rotation, shearing, Classification};

const TOL: f64 = 1e-12;
const CASE1_BUDGET: Duration = Duration::from_millis(1);
const RANDOM_BUDGET: Duration = Duration::from_secs(60);
const MATRIX_TOL: f64 = 1e-12;
const SHEAR_BOUND_SLACK: f64 = 1e-15;
const INVARIANCE_MARGIN: f64 = 1e-6;
const SEED: u64 = 0x5eed_5919;

type Check = Result<String, String>;
type Criterion<'a> = (&'static str, Box<dyn Fn() -> Check + 'a>);

fn fixture(case: &spip::cli::fixtures::FixtureCase) -> (SphericalPolygon, UnitVector3) {
    let job = case.job().resolve().expect("fixture resolves");
    (job.polygons[0].polygon.clone().expect("fixture polygon"), job.points[0].position)
}

fn both(g: &SphericalPolygon, q: UnitVector3) -> Result<(Classification, Classification), String> {
    let a = rotation::classify_point(g, q, TOL).map_err(|e| format!("rotation: {e}"))?;
    let b = shearing::classify(g, q, TOL).map_err(|e| format!("shearing: {e}"))?;
    Ok((a, b))
}

fn oracle(g: &SphericalPolygon, q: UnitVector3, segments: usize) -> Result<Classification, String> {
    classify_by_subdivision(g, q, SubdivisionConfig::new(segments).unwrap(), TOL).map_err(|e| format!("oracle: {e}"))
}

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn case1() -> Check {
    let (g, q) = fixture(&ANTIPODE_ON_BOUNDARY);
    let start = Instant::now();
    let (a, b) = both(&g, q)?;
    let elapsed = start.elapsed();
    for (name, c) in [("rotation", a), ("shearing", b)] {
        ensure(c.is_antipodal_boundary() && c.outcome() == spip::Outcome::Exterior, || {
            format!("{name}: {c}")
        })?;
    }
    ensure(elapsed < CASE1_BUDGET, || format!("took {elapsed:?}"))?;
    Ok(format!("rotation {a}, shearing {b}, {elapsed:?}"))
}

fn case2() -> Check {
    let (g, q) = fixture(&BOUNDARY_EDGE);
    let (a, b) = both(&g, q)?;
    let want = Classification::Boundary { edge: 3 };
    ensure(a == want && b == want, || format!("rotation {a}, shearing {b}"))?;
    let (v3, v1) = g.side(3);
    let side = chord_midpoint_side(v3, v1, q, TOL).map_err(|e| e.to_string())?;
    ensure(side == MidpointSide::QSide, || format!("midpoint side {side:?}"))?;
    Ok(format!("both {a}, midpoint on the Q side"))
}

fn case3() -> Check {
    let (g, q) = fixture(&DOUBLE_WINDING);
    let (a, b) = both(&g, q)?;
    let want = Classification::Interior { wn: 2 };
    ensure(a == want && b == want, || format!("rotation {a}, shearing {b}"))?;
    for segments in [16, 64, 256] {
        let o = oracle(&g, q, segments)?;
        ensure(o == want, || format!("oracle at {segments} segments: {o}"))?;
    }
    Ok("rotation, shearing and oracle (16/64/256) all interior(wn 2)".into())
}

struct Instance {
    cap: CapPolygon,
    queries: Vec<UnitVector3>,
}

fn random_instances() -> Vec<Instance> {
    let mut r = rng(SEED);
    (0..1000)
        .map(|_| {
            let cap = cap_polygon(&mut r, (0.1, 1.4), (3, 12));
            let queries = (0..10).map(|_| query(&mut r, &cap, 1e-9)).collect();
            Instance { cap, queries }
        })
        .collect()
}

fn cross_method(instances: &[Instance]) -> Check {
    let start = Instant::now();
    let mut disagreements = Vec::new();
    let mut counts = [0usize; 3];
    let mut max_wn = 0;
    for (k, inst) in instances.iter().enumerate() {
        for (j, &q) in inst.queries.iter().enumerate() {
            let (a, b) = both(&inst.cap.polygon, q)?;
            let o = oracle(&inst.cap.polygon, q, 64)?;
            if a != b || a != o {
                disagreements.push(format!("instance {k} query {j}: rotation {a}, shearing {b}, oracle {o}"));
            }
            counts[a.outcome() as usize] += 1;
            max_wn = max_wn.max(a.winding_number().unwrap_or(0).abs());
        }
    }
    let elapsed = start.elapsed();
    ensure(disagreements.is_empty(), || {
        format!("{} disagreements, first: {}", disagreements.len(), disagreements[0])
    })?;
    ensure(elapsed < RANDOM_BUDGET, || format!("took {elapsed:?}"))?;
    Ok(format!(
        "10000 queries agree (boundary {}, interior {}, exterior {}, max |wn| {max_wn}), {elapsed:.2?}",
        counts[0], counts[1], counts[2]
    ))
}

fn rotation_contract() -> Check {
    let mut r = rng(SEED ^ 5);
    let (mut orth, mut det, mut image) = (0.0f64, 0.0f64, 0.0f64);
    for _ in 0..100_000 {
        let (theta, phi) = angles(&mut r);
        let a = SphericalAngles::new(theta, phi).unwrap();
        let rot = RotationMatrix3::to_north(a);
        let m = rot.matrix();
        // Infinity norm of R^T R - I: largest absolute row sum.
        let row_sum = (0..3)
            .map(|i| {
                (0..3)
                    .map(|j| {
                        let v: f64 = (0..3).map(|k| m[k][i] * m[k][j]).sum();
                        (v - if i == j { 1.0 } else { 0.0 }).abs()
                    })
                    .sum::<f64>()
            })
            .fold(0.0, f64::max);
        orth = orth.max(row_sum);
        det = det.max((rot.determinant() - 1.0).abs());
        let p = rot.apply(UnitVector3::from_angles(a).vector());
        image = image.max((p - UnitVector3::NORTH.vector()).norm());
    }
    ensure(orth < MATRIX_TOL && det < MATRIX_TOL && image < MATRIX_TOL, || {
        format!("max |R^T R - I| {orth:e}, |det - 1| {det:e}, |RQ - N| {image:e}")
    })?;
    Ok(format!("max |R^T R - I| {orth:.1e}, |det - 1| {det:.1e}, |RQ - N| {image:.1e}"))
}

fn planar_equivalence() -> Check {
    let mut r = rng(SEED ^ 6);
    let mut wns = std::collections::BTreeSet::new();
    for k in 0..1000 {
        let g = planar_polygon(&mut r, (3, 24), 1e-6);
        let crossing = classify_origin(&g, TOL).winding_number();
        let angle = angle_sum_wn(&g).map_err(|e| format!("polygon {k}: {e}"))?;
        ensure(crossing == Some(angle), || format!("polygon {k}: crossing {crossing:?}, angle sum {angle}"))?;
        wns.insert(angle);
    }
    Ok(format!("1000 polygons, winding numbers {wns:?}"))
}

fn antipode_duality(instances: &[Instance]) -> Check {
    let mut r = rng(SEED ^ 7);
    for (k, inst) in instances.iter().enumerate() {
        let g = &inst.cap.polygon;
        let edge = r.random_range(1..=g.len());
        let q = side_midpoint(g, edge);
        let (a, b) = both(g, q)?;
        ensure(a.outcome() == spip::Outcome::Boundary && b.outcome() == spip::Outcome::Boundary, || {
            format!("instance {k}, midpoint of side {edge}: rotation {a}, shearing {b}")
        })?;
        let (a, b) = both(g, q.antipode())?;
        ensure(a.outcome() == spip::Outcome::Exterior && b.outcome() == spip::Outcome::Exterior, || {
            format!("instance {k}, antipode of midpoint of side {edge}: rotation {a}, shearing {b}")
        })?;
    }
    Ok(format!("{} side midpoints on the boundary, antipodes exterior", instances.len()))
}

fn clear_of_other_sides(g: &SphericalPolygon, edge: usize, q: UnitVector3, margin: f64) -> bool {
    g.sides().filter(|&(e, ..)| e != edge).all(|(_, a, b)| {
        arc_distance(a, b, q).unwrap() >= margin && arc_distance(a, b, q.antipode()).unwrap() >= margin
    }) && {
        let (a, b) = g.side(edge);
        arc_distance(a, b, q.antipode()).unwrap() >= margin
    }
}

fn rotation_invariance() -> Check {
    let mut r = rng(SEED ^ 8);
    let mut boundary = 0;
    for k in 0..200 {
        let cap = cap_polygon(&mut r, (0.1, 1.4), (3, 12));
        let g = &cap.polygon;
        let q = if k % 2 == 0 {
            query(&mut r, &cap, INVARIANCE_MARGIN)
        } else {
            loop {
                let edge = r.random_range(1..=g.len());
                let q = side_midpoint(g, edge);
                if clear_of_other_sides(g, edge, q, INVARIANCE_MARGIN) {
                    boundary += 1;
                    break q;
                }
            }
        };
        let s = rotation(&mut r);
        let before = both(g, q)?;
        let after = both(&rotate_polygon(&s, g), apply(&s, q))?;
        ensure(before == after, || format!("instance {k}: {before:?} became {after:?}"))?;
    }
    Ok(format!("200 instances ({boundary} on the boundary) unchanged"))
}

fn shear_bound() -> Check {
    let mut r = rng(SEED ^ 9);
    let bound = 1.0 / 3f64.sqrt() - SHEAR_BOUND_SLACK;
    let mut worst = f64::INFINITY;
    let diagonals = (0..8).map(|s| {
        let sign = |b: i32| if s & b == 0 { 1.0 } else { -1.0 };
        UnitVector3::normalize(spip::sphere::Vector3::new(sign(1), sign(2), sign(4))).unwrap()
    });
    let samples: Vec<UnitVector3> = diagonals.chain((0..1_000_000).map(|_| unit(&mut r))).collect();
    for q in samples {
        worst = worst.min(ShearPlan::new(q).dominant_magnitude());
    }
    ensure(worst >= bound, || format!("smallest dominant coordinate {worst}"))?;
    Ok(format!("smallest dominant coordinate {worst:.17} over 1000008 vectors"))
}

fn determinism() -> Check {
    let exe = env!("CARGO_BIN_EXE_spip");
    let runs: Vec<_> = (0..2)
        .map(|_| Command::new(exe).arg("fixtures").output().map_err(|e| e.to_string()))
        .collect::<Result<_, _>>()?;
    for out in &runs {
        ensure(out.status.success(), || format!("exit {:?}", out.status.code()))?;
    }
    ensure(runs[0].stdout == runs[1].stdout && !runs[0].stdout.is_empty(), || {
        "outputs differ".into()
    })?;
    Ok(format!("two runs, {} identical bytes", runs[0].stdout.len()))
}

fn main() {
    let instances = random_instances();
    let criteria: Vec<Criterion> = vec![
        ("antipode on boundary case is exterior", Box::new(case1)),
        ("boundary case on side 3", Box::new(case2)),
        ("double winding case is interior(2)", Box::new(case3)),
        ("cross-method agreement on random polygons", Box::new(|| cross_method(&instances))),
        ("rotation matrix contract", Box::new(rotation_contract)),
        ("planar winding number equivalence", Box::new(planar_equivalence)),
        ("antipode duality", Box::new(|| antipode_duality(&instances))),
        ("global rotation invariance", Box::new(rotation_invariance)),
        ("shear denominator bound", Box::new(shear_bound)),
        ("fixture output determinism", Box::new(determinism)),
    ];

    let mut failed = 0;
    for (k, (name, check)) in criteria.iter().enumerate() {
        let result = catch_unwind(AssertUnwindSafe(check)).unwrap_or_else(|p| {
            let msg = p.downcast_ref::<String>().cloned();
            Err(msg.or_else(|| p.downcast_ref::<&str>().map(|s| s.to_string())).unwrap_or_else(|| "panic".into()))
        });
        match result {
            Ok(detail) => println!("criterion {:>2} PASS  {name}: {detail}", k + 1),
            Err(detail) => {
                failed += 1;
                println!("criterion {:>2} FAIL  {name}: {detail}", k + 1);
            }
        }
    }
    println!("{} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed > 0 {
        std::process::exit(1);
    }
}
