//! Global invariants: the height of the focus-focus value, the polygon invariant with
//! its group action, the twisting index through the privileged momentum map, and the
//! number of focus-focus points.
//!
//! Polygon coordinates are unscaled and written relative to the focus-focus value, which
//! sits at the origin; the cut line is the vertical axis.

use std::f64::consts::PI;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::abelian;
use crate::error::{Error, Result};
use crate::params::{FixedPointClass, ModelParams, ParamChart};
use crate::quadrature::{tanh_sinh, Tolerance};
use crate::reduced::ReducedSystem;

/// Height invariant from its closed form, with arctangents taken in `[0, pi]`.
pub fn height_closed_form(p: &ModelParams) -> Result<f64> {
    let ra = p.ra()?;
    let (r, t) = (p.ratio(), p.t);
    let bracket = ra - 2.0 * r * t * ra.atan2(r - t) - 2.0 * t * ra.atan2(r + t - 2.0 * r * t);
    Ok(2.0 * p.r1.min(p.r2) + p.r1 / (PI * t) * bracket)
}

/// Height invariant as the symplectic volume below the critical level in the reduced space
/// `l = 0`: `2 min(R1, R2) - (R1/pi) int arccos(ratio) dp` over the physical interval
/// `[0, min(2, 2R)]`, with the ratio clamped to `[-1, 1]`.
///
/// The interval is split at the upper root `z3` of the critical level, beyond which the
/// level curve no longer exists and the clamped integrand is constant.
pub fn height_numeric(p: &ModelParams) -> Result<f64> {
    p.require_focus_focus()?;
    let (r, t) = (p.ratio(), p.t);
    let end = 2f64.min(2.0 * r);
    let upper = (p.ra_squared() / (2.0 * r * t * (1.0 - t))).min(end);
    let ratio = |x: f64| {
        let d = ((x - 2.0) * (x - 2.0 * r)).max(0.0).sqrt();
        ((r + (x - 1.0) * t - 2.0 * r * t) / (t * d)).clamp(-1.0, 1.0).acos()
    };
    let tol = Tolerance { abs: 1e-14, rel: 1e-13, max_level: 16 };
    let mut total = tanh_sinh(|x, _, _| ratio(x), 0.0, upper, tol)?.value;
    if end > upper {
        total += tanh_sinh(|x, _, _| ratio(x), upper, end, tol)?.value;
    }
    Ok(2.0 * p.r1.min(p.r2) - p.r1 / PI * total)
}

/// Height invariant from the chart coordinates `(u, v, kappa)`.
pub fn height_uv(c: &ParamChart) -> f64 {
    let (u, v, kappa) = (c.u, c.v, c.kappa);
    let arccot = |x: f64| 1f64.atan2(x);
    kappa
        * (2.0 * (-u.abs()).exp() + 2.0 / (PI * v.cosh())
            - 2.0 * u.exp() / PI * arccot(v.sinh() + u.exp() * v.cosh())
            - 2.0 * (-u).exp() / PI * arccot(v.sinh() + (-u).exp() * v.cosh()))
}

/// Number of focus-focus points together with the class of the candidate fixed point.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct FocusFocusCount {
    pub count: u32,
    pub class: FixedPointClass,
}

/// One focus-focus point inside the critical interval, none outside it.
pub fn ff_count(p: &ModelParams) -> FocusFocusCount {
    let class = p.classify();
    FocusFocusCount { count: class.ff_count(), class }
}

/// A rational convex polygon with the vertical cut line through `lambda`, the sign of the
/// cut half-line and the twisting index of the focus-focus value.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct WeightedPolygon {
    /// Vertices in counter-clockwise order.
    pub vertices: Vec<[f64; 2]>,
    pub lambda: f64,
    pub epsilon: i8,
    pub k: i32,
}

/// Tolerance for collinearity and integrality of slopes in polygon arithmetic.
const POLY_TOL: f64 = 1e-9;

impl WeightedPolygon {
    /// Integer slopes of the edges in vertex order; `None` marks a vertical edge.
    ///
    /// Fails if a non-vertical edge has a non-integral slope.
    pub fn edge_slopes(&self) -> Result<Vec<Option<i64>>> {
        let n = self.vertices.len();
        (0..n)
            .map(|i| {
                let [x0, y0] = self.vertices[i];
                let [x1, y1] = self.vertices[(i + 1) % n];
                let dx = x1 - x0;
                if dx.abs() < POLY_TOL {
                    return Ok(None);
                }
                let s = (y1 - y0) / dx;
                if (s - s.round()).abs() > 1e-7 {
                    return Err(Error::InvalidParameters(format!("edge slope {s} is not integral")));
                }
                Ok(Some(s.round() as i64))
            })
            .collect()
    }

    /// Upper or lower boundary height at abscissa `x`, if `x` lies within the polygon's range.
    pub fn boundary_at(&self, x: f64, upper: bool) -> Option<f64> {
        let n = self.vertices.len();
        let mut best: Option<f64> = None;
        for i in 0..n {
            let [x0, y0] = self.vertices[i];
            let [x1, y1] = self.vertices[(i + 1) % n];
            let (lo, hi) = if x0 < x1 { (x0, x1) } else { (x1, x0) };
            if x < lo - POLY_TOL || x > hi + POLY_TOL || (x1 - x0).abs() < POLY_TOL {
                continue;
            }
            let y = y0 + (y1 - y0) * (x - x0) / (x1 - x0);
            best = Some(match best {
                None => y,
                Some(b) if upper => b.max(y),
                Some(b) => b.min(y),
            });
        }
        best
    }

    /// Slope change of the upper (`upper = true`) or lower boundary across the cut line.
    pub fn kink_at_cut(&self, upper: bool) -> Option<f64> {
        let d = 1e-6;
        let x = self.lambda;
        let left = (self.boundary_at(x, upper)? - self.boundary_at(x - d, upper)?) / d;
        let right = (self.boundary_at(x + d, upper)? - self.boundary_at(x, upper)?) / d;
        Some(right - left)
    }

    /// Signed area (positive for counter-clockwise order).
    pub fn area(&self) -> f64 {
        let n = self.vertices.len();
        0.5 * (0..n)
            .map(|i| {
                let [x0, y0] = self.vertices[i];
                let [x1, y1] = self.vertices[(i + 1) % n];
                x0 * y1 - x1 * y0
            })
            .sum::<f64>()
    }

    /// Largest distance between matching vertices of two polygons with the same corner count.
    pub fn vertex_distance(&self, other: &WeightedPolygon) -> f64 {
        if self.vertices.len() != other.vertices.len() {
            return f64::INFINITY;
        }
        self.vertices
            .iter()
            .map(|a| other.vertices.iter().map(|b| (a[0] - b[0]).hypot(a[1] - b[1])).fold(f64::INFINITY, f64::min))
            .fold(0.0, f64::max)
    }

    /// Distance from a point to the polygon boundary.
    pub fn boundary_distance(&self, q: [f64; 2]) -> f64 {
        let n = self.vertices.len();
        (0..n).map(|i| segment_distance(q, self.vertices[i], self.vertices[(i + 1) % n])).fold(f64::INFINITY, f64::min)
    }
}

fn segment_distance(q: [f64; 2], a: [f64; 2], b: [f64; 2]) -> f64 {
    let (dx, dy) = (b[0] - a[0], b[1] - a[1]);
    let len2 = dx * dx + dy * dy;
    let s = if len2 == 0.0 { 0.0 } else { (((q[0] - a[0]) * dx + (q[1] - a[1]) * dy) / len2).clamp(0.0, 1.0) };
    (q[0] - a[0] - s * dx).hypot(q[1] - a[1] - s * dy)
}

/// Removes repeated and collinear vertices.
fn simplify(vertices: Vec<[f64; 2]>) -> Vec<[f64; 2]> {
    let mut v = vertices;
    loop {
        let n = v.len();
        if n < 3 {
            return v;
        }
        let drop = (0..n).find(|&i| {
            let a = v[(i + n - 1) % n];
            let b = v[i];
            let c = v[(i + 1) % n];
            let cross = (b[0] - a[0]) * (c[1] - b[1]) - (b[1] - a[1]) * (c[0] - b[0]);
            cross.abs() < POLY_TOL || (a[0] - b[0]).hypot(a[1] - b[1]) < POLY_TOL
        });
        match drop {
            Some(i) => {
                v.remove(i);
            }
            None => return v,
        }
    }
}

/// Applies the group element `(epsilon', T^{k'})`: the global shear `T^{k'}`, then the
/// half-plane shear `t_u` right of the cut with `u = (epsilon - epsilon' epsilon) / 2`.
/// The sign becomes `epsilon' epsilon` and the index `k' + k`.
pub fn act(epsilon_prime: i8, k_prime: i32, poly: &WeightedPolygon) -> WeightedPolygon {
    let lambda = poly.lambda;
    let n = poly.vertices.len();
    let mut split = Vec::with_capacity(n + 2);
    for i in 0..n {
        let a = poly.vertices[i];
        let b = poly.vertices[(i + 1) % n];
        split.push(a);
        if (a[0] - lambda) * (b[0] - lambda) < 0.0 {
            let s = (lambda - a[0]) / (b[0] - a[0]);
            split.push([lambda, a[1] + s * (b[1] - a[1])]);
        }
    }
    let epsilon = epsilon_prime * poly.epsilon;
    let u = f64::from(poly.epsilon - epsilon) / 2.0;
    let kp = f64::from(k_prime);
    let mapped = split
        .into_iter()
        .map(|[x, y]| {
            let y = y + kp * (x - lambda);
            let y = if x > lambda { y + u * (x - lambda) } else { y };
            [x, y]
        })
        .collect();
    WeightedPolygon { vertices: simplify(mapped), lambda, epsilon, k: poly.k + k_prime }
}

/// The representative with sign `epsilon` and twisting index `k`, obtained from the
/// `(+1, 0)` polygon by the group action.
///
/// The `(+1, 0)` polygon has corners `(-2R1, b)`, `(2R2 - 2R1, b)`, `(2R2, b + 2R1)` and
/// `(0, b + 2R1)` shifted so that the width over the cut is `2 min(R1, R2)`, with the bottom
/// `b + 2R1 - 2 min(R1, R2) = -height`.
pub fn polygon_representative(p: &ModelParams, epsilon: i8, k: i32) -> Result<WeightedPolygon> {
    if epsilon != 1 && epsilon != -1 {
        return Err(Error::InvalidParameters(format!("epsilon = {epsilon} must be +1 or -1")));
    }
    let height = height_closed_form(p)?;
    let m = p.r1.min(p.r2);
    let top = 2.0 * m - height;
    let bottom = top - 2.0 * p.r1;
    let base = WeightedPolygon {
        vertices: simplify(vec![
            [-2.0 * p.r1, bottom],
            [2.0 * p.r2 - 2.0 * p.r1, bottom],
            [2.0 * p.r2, top],
            [0.0, top],
        ]),
        lambda: 0.0,
        epsilon: 1,
        k: 0,
    };
    Ok(act(epsilon, k, &base))
}

/// A phase-space point with its images under `F = (L, H)` and the privileged map `(L, nu2)`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct MomentumSample {
    pub theta1: f64,
    pub z1: f64,
    pub theta2: f64,
    pub z2: f64,
    pub l: f64,
    pub h: f64,
    pub nu2: f64,
}

/// Evaluates `F = (L, H)` at a point given in cylindrical coordinates.
pub fn momentum_map(p: &ModelParams, theta1: f64, z1: f64, theta2: f64, z2: f64) -> (f64, f64) {
    let rho = (1.0 - z1 * z1).max(0.0).sqrt() * (1.0 - z2 * z2).max(0.0).sqrt();
    let l = p.r1 * (z1 - 1.0) + p.r2 * (z2 + 1.0);
    let h = (1.0 - p.t) * z1 + p.t * (rho * (theta1 - theta2).cos() + z1 * z2) + 2.0 * p.t - 1.0;
    (l, h)
}

/// Samples of the privileged momentum map with the count of skipped points.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct MomentumCloud {
    pub samples: Vec<MomentumSample>,
    pub skipped: usize,
    /// Grid spacings in `z` and in the relative angle.
    pub dz: f64,
    pub dtheta: f64,
}

/// Samples `nu = (L, R1 (I(l, h) - I(0, 0)) + min(L, 0))` on a uniform grid in `(z1, z2, theta1 - theta2)`.
///
/// Both `F` and the action depend on the angles only through their difference, so the grid
/// fixes `theta2 = 0`. The poles are approached to within `1e-9` in `z`. About `n_points`
/// samples are produced; points whose action integral fails are skipped and counted.
pub fn privileged_map_sample(p: &ModelParams, n_points: usize) -> Result<MomentumCloud> {
    p.require_focus_focus()?;
    if n_points == 0 {
        return Err(Error::InvalidParameters("at least one sample point is required".into()));
    }
    let s = ReducedSystem::new(p);
    let offset = abelian::area_action(&s, 0.0, 0.0)?;
    let n = ((n_points as f64).cbrt().round() as usize).max(2);
    let zmax = 1.0 - 1e-9;
    let dz = 2.0 * zmax / (n - 1) as f64;
    let dtheta = 2.0 * PI / n as f64;
    let grid: Vec<(usize, usize, usize)> =
        (0..n).flat_map(|a| (0..n).flat_map(move |b| (0..n).map(move |c| (a, b, c)))).collect();
    let results: Vec<Option<MomentumSample>> = grid
        .par_iter()
        .map(|&(a, b, c)| {
            let z1 = -zmax + a as f64 * dz;
            let z2 = -zmax + b as f64 * dz;
            let theta1 = c as f64 * dtheta;
            let (l, h) = momentum_map(p, theta1, z1, 0.0, z2);
            let action = abelian::area_action(&s, l / p.r1, h).ok()?;
            let nu2 = p.r1 * (action - offset) + l.min(0.0);
            Some(MomentumSample { theta1, z1, theta2: 0.0, z2, l, h, nu2 })
        })
        .collect();
    let skipped = results.iter().filter(|r| r.is_none()).count();
    Ok(MomentumCloud { samples: results.into_iter().flatten().collect(), skipped, dz, dtheta })
}

/// Convex hull by the monotone chain, counter-clockwise, without collinear points.
pub fn convex_hull(points: &[[f64; 2]]) -> Vec<[f64; 2]> {
    let mut pts: Vec<[f64; 2]> = points.to_vec();
    pts.sort_by(|a, b| a[0].total_cmp(&b[0]).then(a[1].total_cmp(&b[1])));
    pts.dedup();
    if pts.len() < 3 {
        return pts;
    }
    let cross = |o: [f64; 2], a: [f64; 2], b: [f64; 2]| (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0]);
    let mut hull: Vec<[f64; 2]> = Vec::with_capacity(2 * pts.len());
    for pass in 0..2 {
        let start = hull.len();
        let iter: Box<dyn Iterator<Item = &[f64; 2]>> =
            if pass == 0 { Box::new(pts.iter()) } else { Box::new(pts.iter().rev()) };
        for &q in iter {
            while hull.len() >= start + 2 && cross(hull[hull.len() - 2], hull[hull.len() - 1], q) <= 0.0 {
                hull.pop();
            }
            hull.push(q);
        }
        hull.pop();
    }
    hull
}

/// Hull of a cloud compared with the representative of each index.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TwistingMatch {
    pub k: i32,
    /// Largest distance from a polygon corner to the hull, and from a hull corner to the polygon boundary.
    pub distance: f64,
    pub tolerance: f64,
}

/// Index `k` in `[-3, 3]` whose `(+1, k)` representative matches the hull of the privileged map.
pub fn match_twisting_index(p: &ModelParams, cloud: &MomentumCloud) -> Result<TwistingMatch> {
    let points: Vec<[f64; 2]> = cloud.samples.iter().map(|s| [s.l, s.nu2]).collect();
    let hull = convex_hull(&points);
    let scale = p.r1.max(p.r2);
    let tolerance = 2.0 * (cloud.dtheta * scale).max(cloud.dz * scale);
    let mut best: Option<TwistingMatch> = None;
    for k in -3..=3 {
        let poly = polygon_representative(p, 1, k)?;
        let corner = poly
            .vertices
            .iter()
            .map(|v| hull.iter().map(|h| (v[0] - h[0]).hypot(v[1] - h[1])).fold(f64::INFINITY, f64::min))
            .fold(0.0, f64::max);
        let edge = hull.iter().map(|&h| poly.boundary_distance(h)).fold(0.0, f64::max);
        let distance = corner.max(edge);
        if best.as_ref().is_none_or(|b| distance < b.distance) {
            best = Some(TwistingMatch { k, distance, tolerance });
        }
    }
    match best {
        Some(m) if m.distance <= m.tolerance => Ok(m),
        _ => Err(Error::NoMatchingPolygon { lo: -3, hi: 3 }),
    }
}

/// Twisting index at `p` and at three interior couplings with the same radii.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TwistingReport {
    pub k: i32,
    pub at_parameters: TwistingMatch,
    pub interior: Vec<(f64, TwistingMatch)>,
}

impl TwistingReport {
    /// Whether every coupling produced the same index.
    pub fn independent_of_t(&self) -> bool {
        self.interior.iter().all(|(_, m)| m.k == self.k)
    }
}

/// Computes the twisting index from a cloud of about `n_points` samples and repeats the
/// computation at the quartiles of the critical interval.
pub fn twisting_index_verify(p: &ModelParams, n_points: usize) -> Result<TwistingReport> {
    let at_parameters = match_twisting_index(p, &privileged_map_sample(p, n_points)?)?;
    let ci = p.critical_interval();
    let hi = ci.t_plus.min(1.0);
    let mut interior = Vec::new();
    for frac in [0.25, 0.5, 0.75] {
        let t = ci.t_minus + frac * (hi - ci.t_minus);
        let q = ModelParams::new(p.r1, p.r2, t)?;
        interior.push((t, match_twisting_index(&q, &privileged_map_sample(&q, n_points)?)?));
    }
    Ok(TwistingReport { k: at_parameters.k, at_parameters, interior })
}
