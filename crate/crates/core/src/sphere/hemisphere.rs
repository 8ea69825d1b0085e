//! Open-hemisphere containment.
//!
//! Vertices `v_i` fit in an open hemisphere exactly when the origin is outside
//! their convex hull. If `p` is the point of the hull nearest the origin then
//! `p . v >= |p|^2` for every hull point, so `w = p / |p|` has `w . v_i >= |p| > 0`
//! and serves as the hemisphere centre. The nearest point is found with
//! Wolfe's minimum-norm-point iteration.
//!
//! Vertex containment is enough for the whole polygon: every side is a minor
//! arc, and a minor arc between two points of an open hemisphere stays inside
//! it (its points are positive combinations of the endpoints). The region
//! bounded by sides inside the hemisphere is then inside it as well.

use crate::sphere::vector::{UnitVector3, Vector3};

/// Minimum `w . v_i` required of a witness; separates open from closed hemispheres.
pub const HC_MARGIN: f64 = 1e-9;

const WEIGHT_EPS: f64 = 1e-14;
const MAX_MAJOR_ITERS: usize = 1000;

/// Returns a centre `w` with `w . v > HC_MARGIN` for every vertex, if one exists.
pub fn is_hemisphere_contained(vertices: &[UnitVector3]) -> Option<UnitVector3> {
    if vertices.is_empty() {
        return None;
    }
    let points: Vec<Vector3> = vertices.iter().map(|v| v.vector()).collect();
    let nearest = min_norm_point(&points);
    let len = nearest.norm();
    if len <= HC_MARGIN {
        return None;
    }
    let w = UnitVector3::normalize(nearest).ok()?;
    vertices
        .iter()
        .all(|v| w.dot(*v) >= HC_MARGIN)
        .then_some(w)
}

/// Point of `conv(points)` closest to the origin.
fn min_norm_point(points: &[Vector3]) -> Vector3 {
    let start = points
        .iter()
        .enumerate()
        .min_by(|(_, a), (_, b)| a.dot(**a).total_cmp(&b.dot(**b)))
        .map(|(i, _)| i)
        .expect("non-empty point set");

    let mut corral = vec![start];
    let mut weights = vec![1.0];
    let mut x = points[start];

    for _ in 0..MAX_MAJOR_ITERS {
        let xx = x.dot(x);
        if xx == 0.0 {
            break;
        }
        let (j, xj) = points
            .iter()
            .enumerate()
            .map(|(i, p)| (i, x.dot(*p)))
            .min_by(|a, b| a.1.total_cmp(&b.1))
            .expect("non-empty point set");
        if xj >= xx - 1e-15 || corral.contains(&j) {
            break;
        }
        corral.push(j);
        weights.push(0.0);

        loop {
            let Some(alpha) = affine_min_weights(points, &corral) else {
                return x;
            };
            if alpha.iter().all(|&a| a > WEIGHT_EPS) {
                weights = alpha;
                x = combine(points, &corral, &weights);
                break;
            }
            // Step from the current weights towards alpha until one hits zero.
            let step = weights
                .iter()
                .zip(&alpha)
                .filter(|(_, &a)| a <= WEIGHT_EPS)
                .map(|(&w, &a)| w / (w - a))
                .fold(1.0f64, f64::min);
            for (w, a) in weights.iter_mut().zip(&alpha) {
                *w = (1.0 - step) * *w + step * a;
            }
            let mut k = 0;
            while k < corral.len() {
                if weights[k] <= WEIGHT_EPS {
                    corral.remove(k);
                    weights.remove(k);
                } else {
                    k += 1;
                }
            }
            let total: f64 = weights.iter().sum();
            weights.iter_mut().for_each(|w| *w /= total);
            x = combine(points, &corral, &weights);
        }
    }
    x
}

fn combine(points: &[Vector3], idx: &[usize], weights: &[f64]) -> Vector3 {
    idx.iter()
        .zip(weights)
        .fold(Vector3::default(), |acc, (&i, &w)| acc + points[i] * w)
}

/// Weights (summing to one) of the minimum-norm point of the affine hull.
fn affine_min_weights(points: &[Vector3], idx: &[usize]) -> Option<Vec<f64>> {
    let k = idx.len();
    let n = k + 1;
    let mut m = vec![vec![0.0; n + 1]; n];
    for r in 0..k {
        for c in 0..k {
            m[r][c] = points[idx[r]].dot(points[idx[c]]);
        }
        m[r][k] = 1.0;
        m[k][r] = 1.0;
    }
    m[k][n] = 1.0;

    for col in 0..n {
        let pivot = (col..n).max_by(|&a, &b| m[a][col].abs().total_cmp(&m[b][col].abs()))?;
        if m[pivot][col].abs() < 1e-13 {
            return None;
        }
        m.swap(col, pivot);
        for r in 0..n {
            if r != col {
                let f = m[r][col] / m[col][col];
                for c in col..=n {
                    m[r][c] -= f * m[col][c];
                }
            }
        }
    }
    Some((0..k).map(|r| m[r][n] / m[r][r]).collect())
}
