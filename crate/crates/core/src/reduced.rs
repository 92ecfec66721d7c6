//! The reduced system in scaled units (`R1 = 1`, `R = R2/R1`).
//!
//! Reducing by the circle action generated by `L` leaves one degree of freedom
//! `(q2, p2)` at each level `l`. The reduced Hamiltonian is
//! `H_l = A(p2) + sqrt(B(p2)) cos(q2)` and the level curves of energy `h` are
//! governed by the cubic `P = B - (h - A)^2`.

use nalgebra::Matrix3;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::params::ModelParams;

/// Tolerance used to decide whether a level lies on a separatrix.
pub const SEPARATRIX_TOL: f64 = 1e-12;

/// The reduced system for fixed `(R, t)`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ReducedSystem {
    pub r: f64,
    pub t: f64,
}

/// A level `(l, h)` of the reduced momentum map.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ReducedLevel {
    pub l: f64,
    pub h: f64,
}

/// Polynomial coefficients (ascending powers of `p2`) of `A`, `B` and `P` at a level.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ReducedModel {
    pub a: [f64; 3],
    pub b: [f64; 5],
    pub p: [f64; 4],
    /// The degree-four coefficient of `B - (h - A)^2`, which vanishes identically.
    pub leading_residue: f64,
}

/// Values of `A` at the four edges `p2 = 0, l, 2R, l + 2` of the physical region.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct EdgeValues {
    pub at_zero: f64,
    pub at_l: f64,
    pub at_2r: f64,
    pub at_l_plus_2: f64,
}

/// Real roots `z1 <= z2 <= z3` of the cubic `P`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct CubicRoots {
    pub z1: f64,
    pub z2: f64,
    pub z3: f64,
}

/// The three kinds of regular orbits of the reduced flow near the focus-focus value.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum OrbitType {
    /// `h > A(max{0, l})`.
    TypeI,
    /// Between the two thresholds.
    TypeII,
    /// `h < A(min{l + 2, 2R})`.
    TypeIII,
}

fn horner(c: &[f64], x: f64) -> f64 {
    c.iter().rev().fold(0.0, |acc, &a| acc * x + a)
}

fn poly_mul(a: &[f64], b: &[f64]) -> Vec<f64> {
    let mut out = vec![0.0; a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

impl ReducedSystem {
    /// Scaled system for the given parameters.
    pub fn new(p: &ModelParams) -> Self {
        Self { r: p.ratio(), t: p.t }
    }

    /// Scaled system from the ratio `R` and coupling `t`.
    pub fn from_ratio(r: f64, t: f64) -> Self {
        Self { r, t }
    }

    /// `rA^2` for this system.
    pub fn ra_squared(&self) -> f64 {
        crate::params::ra_squared(self.r, self.t)
    }

    /// Positive constant `c` with `P = c (p - z1)(p - z2)(z3 - p)`.
    pub fn cubic_scale(&self) -> f64 {
        2.0 * self.t * (1.0 - self.t) / self.r
    }

    /// Coefficients of `A(p2) = (R l (1-2t) + (t - R(1-2t) + l t) p2 - t p2^2) / R`.
    pub fn a_coeffs(&self, l: f64) -> [f64; 3] {
        let (r, t) = (self.r, self.t);
        [l * (1.0 - 2.0 * t), (t - r * (1.0 - 2.0 * t) + l * t) / r, -t / r]
    }

    /// `A(p2)`.
    pub fn a(&self, l: f64, p2: f64) -> f64 {
        horner(&self.a_coeffs(l), p2)
    }

    /// `B(p2) = (t^2/R^2) p2 (p2 - l)(p2 - 2R)(p2 - l - 2)`.
    pub fn b(&self, l: f64, p2: f64) -> f64 {
        let (r, t) = (self.r, self.t);
        t * t / (r * r) * p2 * (p2 - l) * (p2 - 2.0 * r) * (p2 - l - 2.0)
    }

    /// Coefficients of the cubic `P = B - (h - A)^2`, written so that the
    /// coefficients that are small near the focus-focus value carry no cancellation.
    pub fn p_coeffs(&self, l: f64, h: f64) -> [f64; 4] {
        let (r, t) = (self.r, self.t);
        let a0 = h - l * (1.0 - 2.0 * t);
        let c0 = -a0 * a0;
        let c1 = 2.0 / r
            * (h * (2.0 * r * t - r + t + l * t) + l * (r * (1.0 - 2.0 * t).powi(2) - t) - l * l * t * (1.0 - t));
        let c2 = (self.ra_squared() - 2.0 * r * h * t + 4.0 * r * l * t * (1.0 - t)) / (r * r);
        let c3 = -self.cubic_scale();
        [c0, c1, c2, c3]
    }

    /// `P(p2)` at level `(l, h)`.
    pub fn p(&self, l: f64, h: f64, p2: f64) -> f64 {
        horner(&self.p_coeffs(l, h), p2)
    }

    /// Full coefficient data at a level, with `P` assembled from `A` and `B` by
    /// polynomial arithmetic so that the degree-four cancellation is observable.
    pub fn model(&self, l: f64, h: f64) -> ReducedModel {
        let (r, t) = (self.r, self.t);
        let a = self.a_coeffs(l);
        let s = t * t / (r * r);
        let b1 = poly_mul(&[0.0, 1.0], &[-l, 1.0]);
        let b2 = poly_mul(&[-2.0 * r, 1.0], &[-l - 2.0, 1.0]);
        let bv = poly_mul(&b1, &b2);
        let b = [s * bv[0], s * bv[1], s * bv[2], s * bv[3], s * bv[4]];
        let ha = [h - a[0], -a[1], -a[2]];
        let sq = poly_mul(&ha, &ha);
        let full: Vec<f64> = (0..5).map(|i| b[i] - sq[i]).collect();
        ReducedModel { a, b, p: [full[0], full[1], full[2], full[3]], leading_residue: full[4] }
    }

    /// `(A(0), A(l), A(2R), A(l+2))` from their closed forms.
    pub fn edge_values(&self, l: f64) -> EdgeValues {
        let (r, t) = (self.r, self.t);
        EdgeValues {
            at_zero: (1.0 - 2.0 * t) * l,
            at_l: t * l / r,
            at_2r: l - 2.0 * r + 2.0 * t,
            at_l_plus_2: -2.0 + 4.0 * t - t / r * (2.0 + l),
        }
    }

    /// Bounds `max{0, l} <= p2 <= min{l + 2, 2R}` of the physical region.
    pub fn physical_interval(&self, l: f64) -> (f64, f64) {
        (l.max(0.0), (l + 2.0).min(2.0 * self.r))
    }

    /// Reduced Hamiltonian `A(p2) + sqrt(B(p2)) cos(q2)`.
    pub fn hamiltonian(&self, l: f64, q2: f64, p2: f64) -> Result<f64> {
        let b = self.b(l, p2);
        if b < -1e-12 {
            return Err(Error::OutsidePhysicalRegion(p2));
        }
        Ok(self.a(l, p2) + b.max(0.0).sqrt() * q2.cos())
    }

    /// Ordered real roots of `P` at `(l, h)`.
    ///
    /// Initial approximations come from the eigenvalues of the companion matrix.
    /// The best separated root is polished by Newton's method and deflated; the
    /// remaining quadratic is solved in cancellation-free form and both roots are
    /// polished on the full cubic.
    pub fn solve_roots(&self, l: f64, h: f64) -> Result<CubicRoots> {
        let c = self.p_coeffs(l, h);
        let m = Matrix3::new(0.0, 0.0, -c[0] / c[3], 1.0, 0.0, -c[1] / c[3], 0.0, 1.0, -c[2] / c[3]);
        let ev = m.complex_eigenvalues();
        let ev: Vec<(f64, f64)> = ev.iter().map(|z| (z.re, z.im)).collect();
        let scale = 1.0 + ev.iter().map(|z| z.0.abs()).fold(0.0, f64::max);
        // choose the eigenvalue farthest from the other two
        let dist = |i: usize| -> f64 {
            (0..3)
                .filter(|&j| j != i)
                .map(|j| ((ev[i].0 - ev[j].0).powi(2) + (ev[i].1 - ev[j].1).powi(2)).sqrt())
                .fold(f64::INFINITY, f64::min)
        };
        let iso = (0..3).max_by(|&a, &b| dist(a).total_cmp(&dist(b))).unwrap_or(0);
        if ev[iso].1.abs() > 1e-9 * scale {
            return Err(Error::ComplexRoots { l, h });
        }
        let r0 = newton_polish(&c, ev[iso].0);
        let others_max = (0..3).filter(|&j| j != iso).map(|j| ev[j].0.abs()).fold(0.0, f64::max);
        let q = if r0.abs() >= others_max && r0 != 0.0 {
            // backward deflation keeps the small roots accurate
            let q0 = -c[0] / r0;
            let q1 = (q0 - c[1]) / r0;
            [q0, q1, c[3]]
        } else {
            let q2 = c[3];
            let q1 = c[2] + q2 * r0;
            let q0 = c[1] + q1 * r0;
            [q0, q1, q2]
        };
        let mut disc = q[1] * q[1] - 4.0 * q[2] * q[0];
        let disc_scale = q[1] * q[1] + (4.0 * q[2] * q[0]).abs();
        if disc < 0.0 {
            if disc > -1e-10 * disc_scale {
                disc = 0.0;
            } else {
                return Err(Error::ComplexRoots { l, h });
            }
        }
        let s = -0.5 * (q[1] + q[1].signum() * disc.sqrt());
        let (x1, x2) = if s == 0.0 { (0.0, 0.0) } else { (s / q[2], q[0] / s) };
        let mut roots = [r0, newton_polish(&c, x1), newton_polish(&c, x2)];
        roots.sort_by(f64::total_cmp);
        Ok(CubicRoots { z1: roots[0], z2: roots[1], z3: roots[2] })
    }

    /// Whether the roots obey `z1 < min{0,l}`, `max{0,l} < z2 <= z3 < min{l+2, 2R}`.
    pub fn roots_ordered(&self, l: f64, z: &CubicRoots) -> bool {
        let (lo, hi) = self.physical_interval(l);
        z.z1 < l.min(0.0) && lo < z.z2 && z.z2 <= z.z3 && z.z3 < hi
    }

    /// Orbit type of a regular level.
    pub fn orbit_type(&self, l: f64, h: f64) -> Result<OrbitType> {
        let upper = self.a(l, l.max(0.0));
        let lower = self.a(l, (l + 2.0).min(2.0 * self.r));
        if (h - upper).abs() < SEPARATRIX_TOL || (h - lower).abs() < SEPARATRIX_TOL {
            return Err(Error::OnSeparatrix { l, h });
        }
        Ok(if h > upper {
            OrbitType::TypeI
        } else if h < lower {
            OrbitType::TypeIII
        } else {
            OrbitType::TypeII
        })
    }

    /// Whether the level lies in the region `l > 0`, `h R < l t` where the action
    /// picks up the extra `+l` term.
    pub fn in_shifted_branch(&self, l: f64, h: f64) -> bool {
        l > 0.0 && h * self.r < l * self.t
    }
}

fn newton_polish(c: &[f64; 4], x0: f64) -> f64 {
    let mut x = x0;
    let mut fx = horner(c, x);
    for _ in 0..4 {
        let d = c[1] + x * (2.0 * c[2] + 3.0 * c[3] * x);
        if d == 0.0 {
            break;
        }
        let xn = x - fx / d;
        let fn_ = horner(c, xn);
        if fn_.abs() < fx.abs() {
            x = xn;
            fx = fn_;
        } else {
            break;
        }
    }
    x
}
