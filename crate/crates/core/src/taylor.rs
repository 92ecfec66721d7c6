//! The Taylor series invariant `S(l, j)` through second order: the closed form,
//! its recovery by least squares on numerically integrated partial derivatives,
//! the Kepler and reverse specialisations, and the `(u, v, kappa)` asymptotics.
//!
//! Coefficients are stored in unscaled units unless a function says otherwise.
//! The scaled series `s(l, j)` of the system with `R1 = 1` relates to the unscaled one by
//! `S(l, j) = R1 s(l / R1, j / R1) + j ln R1`.

use std::f64::consts::PI;

use nalgebra::{DMatrix, DVector};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::abelian;
use crate::coefficients::Family;
use crate::error::{Error, Result};
use crate::params::{ModelParams, ParamChart};
use crate::reduced::ReducedSystem;
use crate::series::{arg_lower_cut, FocusSeries};

/// Largest accepted condition number of the regression design matrix.
pub const MAX_CONDITION: f64 = 1e8;

/// The five coefficients of `S(l, j) = c_l l + c_j j + c_ll l^2 + c_lj l j + c_jj j^2 + O(3)`.
///
/// `c_l` is defined modulo `pi` and is stored in `[0, pi)`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct TaylorInvariant {
    pub c_l: f64,
    pub c_j: f64,
    pub c_ll: f64,
    pub c_lj: f64,
    pub c_jj: f64,
}

/// Reduces an angle to `[0, pi)`.
pub fn mod_pi(x: f64) -> f64 {
    let r = x.rem_euclid(PI);
    if r >= PI {
        0.0
    } else {
        r
    }
}

/// Distance between two angles modulo `pi`.
pub fn mod_pi_distance(a: f64, b: f64) -> f64 {
    let d = mod_pi(a - b);
    d.min(PI - d)
}

impl TaylorInvariant {
    /// Builds an invariant, reducing `c_l` to `[0, pi)`.
    pub fn new(c_l: f64, c_j: f64, c_ll: f64, c_lj: f64, c_jj: f64) -> Self {
        Self { c_l: mod_pi(c_l), c_j, c_ll, c_lj, c_jj }
    }

    /// Evaluates the truncated series.
    pub fn eval(&self, l: f64, j: f64) -> f64 {
        self.c_l * l + self.c_j * j + self.c_ll * l * l + self.c_lj * l * j + self.c_jj * j * j
    }

    /// Converts scaled coefficients (system with `R1 = 1`) to unscaled ones.
    pub fn unscale(&self, r1: f64) -> Self {
        Self {
            c_l: self.c_l,
            c_j: self.c_j + r1.ln(),
            c_ll: self.c_ll / r1,
            c_lj: self.c_lj / r1,
            c_jj: self.c_jj / r1,
        }
    }

    /// The series of the same system with the sign of `l` reversed: `S(-l, j) + pi l`.
    pub fn reflect_l(&self) -> Self {
        Self::new(PI - self.c_l, self.c_j, self.c_ll, -self.c_lj, self.c_jj)
    }

    /// Coefficients in the order `c_l, c_j, c_ll, c_lj, c_jj`.
    pub fn to_array(&self) -> [f64; 5] {
        [self.c_l, self.c_j, self.c_ll, self.c_lj, self.c_jj]
    }

    /// Per-coefficient relative differences to `reference`, with `c_l` compared modulo `pi`.
    ///
    /// A coefficient whose reference vanishes is compared in absolute terms.
    pub fn relative_differences(&self, reference: &TaylorInvariant) -> [f64; 5] {
        let a = self.to_array();
        let b = reference.to_array();
        let mut out = [0.0; 5];
        for i in 0..5 {
            let diff = if i == 0 { mod_pi_distance(a[0], b[0]) } else { (a[i] - b[i]).abs() };
            out[i] = if b[i] == 0.0 { diff } else { diff / b[i].abs() };
        }
        out
    }

    /// Largest absolute difference to `other`, with `c_l` compared modulo `pi`.
    pub fn max_abs_difference(&self, other: &TaylorInvariant) -> f64 {
        let a = self.to_array();
        let b = other.to_array();
        (1..5).map(|i| (a[i] - b[i]).abs()).fold(mod_pi_distance(a[0], b[0]), f64::max)
    }
}

/// Coefficients of the scaled series at ratio `R` and coupling `t`.
pub fn scaled_closed_form(r: f64, t: f64) -> Result<TaylorInvariant> {
    ModelParams::new(1.0, r, t)?.require_focus_focus()?;
    let ra2 = crate::params::ra_squared(r, t);
    let ra = ra2.sqrt();
    let ra3 = ra2 * ra;
    let s = 2.0 * t - 1.0;
    let num = t - r * (1.0 + t) - r * r * (1.0 - 2.0 * t);
    let c_l = num.atan2((1.0 - r) * ra);
    let c_j = (4.0 * ra3 / (r.powf(1.5) * (1.0 - t) * t * t)).ln();
    let ll = -r.powi(4) * s.powi(3) + r.powi(3) * (1.0 - 17.0 * t + 46.0 * t * t - 32.0 * t.powi(3))
        - 3.0 * r * r * t * (1.0 - 7.0 * t + 4.0 * t * t)
        + r * (3.0 - 5.0 * t) * t * t
        - t.powi(3);
    let lj = (r - 1.0) * (r * r * s * s + 2.0 * r * t * (6.0 * t - 1.0) + t * t);
    let jj = r.powi(4) * s.powi(3) - r.powi(3) * (1.0 + 15.0 * t - 42.0 * t * t + 16.0 * t.powi(3))
        + r * r * t * (3.0 + 3.0 * t - 28.0 * t * t)
        + r * t * t * (13.0 * t - 3.0)
        + t.powi(3);
    Ok(TaylorInvariant::new(c_l, c_j, ll / (16.0 * r * ra3), lj / (8.0 * r * ra2), jj / (16.0 * r * ra3)))
}

/// Closed-form Taylor series invariant in unscaled units.
pub fn closed_form(p: &ModelParams) -> Result<TaylorInvariant> {
    p.require_focus_focus()?;
    Ok(scaled_closed_form(p.ratio(), p.t)?.unscale(p.r1))
}

/// Taylor series invariant of the reduced Kepler problem with scale `n`, through the
/// parameter `c = (1 - t) / (2 t)`.
pub fn kepler_form(n: f64, t: f64) -> Result<TaylorInvariant> {
    if !(n.is_finite() && n > 0.0) {
        return Err(Error::InvalidParameters(format!("n = {n} must be positive")));
    }
    if !(t > 0.2 && t < 1.0) {
        return Err(Error::OutOfFocusFocusRange { t, t_minus: 0.2, t_plus: 1.0 });
    }
    let c = (1.0 - t) / (2.0 * t);
    let d = 16.0 * n * c.sqrt() * (2.0 - c).powf(1.5);
    Ok(TaylorInvariant::new(
        PI / 2.0,
        d.ln(),
        -(-9.0 + 10.0 * c - 2.0 * c * c) / d,
        0.0,
        -(-3.0 + 6.0 * c + 2.0 * c * c) / d,
    ))
}

/// Partial derivatives `(ds/dl, ds/dj)` of the scaled series at a point of the
/// normal-form plane, from the periods and rotation numbers of the level `J(l, h) = j`.
///
/// `ds/dj = 2 pi T / T^alpha + ln|w|` and `ds/dl = 2 pi (W^alpha T / T^alpha - W) + arg(w)`,
/// with the argument taken on the same branch as the rotation number.
pub fn partials_numeric(s: &ReducedSystem, fs: &FocusSeries, l: f64, j: f64) -> Result<(f64, f64)> {
    if l == 0.0 && j == 0.0 {
        return Err(Error::OriginSingular);
    }
    let h = abelian::level_for_imaginary_action(s, l, j, fs.birkhoff(l, j))?;
    let period = abelian::period(s, l, h)?;
    let rotation = abelian::rotation_number(s, l, h)?;
    let t_alpha = abelian::imaginary_period(s, l, h)?;
    let w_alpha = abelian::imaginary_rotation(s, l, h)?;
    let ratio = period / t_alpha;
    let ds_dj = 2.0 * PI * ratio + l.hypot(j).ln();
    let ds_dl = 2.0 * PI * (w_alpha * ratio - rotation) + arg_lower_cut(l, j);
    Ok((ds_dl, ds_dj))
}

/// Partial derivatives of the scaled series from the tabulated expansions, with the
/// constant of `ds/dl` taken modulo `pi`.
pub fn partials_series(fs: &FocusSeries, l: f64, j: f64) -> (f64, f64) {
    let (r, t, ra) = (fs.r, fs.t, fs.ra);
    let k = fs.coefficients();
    let num = t - r * (1.0 + t) - r * r * (1.0 - 2.0 * t);
    let ds_dl = mod_pi(num.atan2((1.0 - r) * ra))
        + (k.get(Family::Mu, &[1, 0]) * l + k.get(Family::Mu, &[0, 1]) * j)
            / (8.0 * r * ra.powi(3) * (t + r * (2.0 * t - 1.0)));
    let quad = k.get(Family::Kappa, &[2, 0]) * l * l
        + k.get(Family::Kappa, &[1, 1]) * l * j
        + k.get(Family::Kappa, &[0, 2]) * j * j;
    let ds_dj = fs.log_constant()
        + (k.get(Family::Kappa, &[1, 0]) * l + k.get(Family::Kappa, &[0, 1]) * j) / (8.0 * r * ra.powi(3))
        + quad / (64.0 * r * r * ra.powi(6));
    (ds_dl, ds_dj)
}

/// Sample points of the annulus `radius / 4 <= |w| <= radius`, area-uniform along a golden-angle spiral.
pub fn sample_disc(radius: f64, n: usize) -> Vec<(f64, f64)> {
    let golden = PI * (3.0 - 5f64.sqrt());
    (0..n)
        .map(|i| {
            let frac = (i as f64 + 0.5) / n as f64;
            let rho = radius * (1.0 / 16.0 + 15.0 / 16.0 * frac).sqrt();
            let theta = 0.1 + golden * i as f64;
            (rho * theta.cos(), rho * theta.sin())
        })
        .collect()
}

/// Recovers the five coefficients by least squares on numerically integrated partial derivatives
/// over a disc of unscaled radius `sample_radius`.
///
/// Both partials are fitted jointly by the gradient of a quadratic without constant term.
pub fn recover_coefficients(p: &ModelParams, sample_radius: f64, n_samples: usize) -> Result<TaylorInvariant> {
    p.require_focus_focus()?;
    if !(sample_radius > 0.0) || n_samples < 3 {
        return Err(Error::InvalidParameters(format!(
            "sample radius {sample_radius} and count {n_samples} must be positive and at least 3"
        )));
    }
    let s = ReducedSystem::new(&p.scaled());
    let fs = FocusSeries::new(&s)?;
    let points = sample_disc(sample_radius / p.r1, n_samples);
    let partials: Vec<(f64, f64)> =
        points.par_iter().map(|&(l, j)| partials_numeric(&s, &fs, l, j)).collect::<Result<_>>()?;

    let reference = partials[0].0;
    let unwrap = |x: f64| x - 2.0 * PI * ((x - reference) / (2.0 * PI)).round();

    // Unknowns: [a_l, a_j, c_ll, c_lj, c_jj]; ds/dl = a_l + 2 c_ll l + c_lj j, ds/dj = a_j + c_lj l + 2 c_jj j.
    let n = points.len();
    let mut a = DMatrix::<f64>::zeros(2 * n, 5);
    let mut b = DVector::<f64>::zeros(2 * n);
    for (i, (&(l, j), &(dl, dj))) in points.iter().zip(&partials).enumerate() {
        a[(2 * i, 0)] = 1.0;
        a[(2 * i, 2)] = 2.0 * l;
        a[(2 * i, 3)] = j;
        b[2 * i] = unwrap(dl);
        a[(2 * i + 1, 1)] = 1.0;
        a[(2 * i + 1, 3)] = l;
        a[(2 * i + 1, 4)] = 2.0 * j;
        b[2 * i + 1] = dj;
    }
    // Column equilibration so that the condition number reflects the sample geometry only.
    let norms: Vec<f64> = (0..5).map(|c| a.column(c).norm()).collect();
    for (c, &norm) in norms.iter().enumerate() {
        a.column_mut(c).scale_mut(1.0 / norm);
    }
    let svd = a.svd(true, true);
    let max = svd.singular_values.max();
    let min = svd.singular_values.min();
    let condition = if min > 0.0 { max / min } else { f64::INFINITY };
    if condition > MAX_CONDITION {
        return Err(Error::IllConditionedFit(condition));
    }
    let x = svd.solve(&b, 0.0).map_err(|_| Error::IllConditionedFit(condition))?;
    let c: Vec<f64> = (0..5).map(|i| x[i] / norms[i]).collect();
    Ok(TaylorInvariant::new(c[0], c[1], c[2], c[3], c[4]).unscale(p.r1))
}

/// Closed forms on both sides of the reverse isomorphism.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ReverseSymmetryReport {
    pub forward: TaylorInvariant,
    pub reversed: TaylorInvariant,
    /// Largest difference between `forward` with `l` reflected and `reversed`.
    pub series_difference: f64,
    /// Largest deviation of the reversed chart point from `(-u, v, kappa)`.
    pub chart_difference: f64,
}

impl ReverseSymmetryReport {
    pub fn passes(&self, tol: f64) -> bool {
        self.series_difference <= tol && self.chart_difference <= tol
    }
}

/// Compares the series with that of the reverse system, where `l` changes sign.
pub fn reverse_symmetry_check(p: &ModelParams) -> Result<ReverseSymmetryReport> {
    let forward = closed_form(p)?;
    let q = p.reverse();
    let reversed = closed_form(&q)?;
    let a = p.to_chart()?;
    let b = q.to_chart()?;
    let chart_difference = (a.u + b.u).abs().max((a.v - b.v).abs()).max((a.kappa - b.kappa).abs());
    Ok(ReverseSymmetryReport {
        forward,
        reversed,
        series_difference: forward.reflect_l().max_abs_difference(&reversed),
        chart_difference,
    })
}

/// The coefficients written directly in the chart coordinates `(u, v, kappa)`.
///
/// Only the linear coefficients agree with the closed form; the quadratic ones are kept for comparison.
pub fn display_form(c: &ParamChart) -> TaylorInvariant {
    let (u, v, kappa) = (c.u, c.v, c.kappa);
    let c_l = ((2.0 * u.exp() * v.cosh() + v.sinh() + (2.0 * u).exp() * v.sinh()) / (1.0 - (2.0 * u).exp())).atan();
    let c_j = (16.0 * kappa / (v.cosh().powi(3) * (u.cosh() + v.tanh()))).ln();
    let c_ll = -(-7.0 * v.cosh() + 3.0 * (3.0 * v).cosh() + u.cosh()) * (11.0 * v.sinh() + 3.0 * (3.0 * v).sinh())
        / (64.0 * kappa);
    let c_lj = -(1.0 + 3.0 * (2.0 * v).cosh()) * u.sinh() / (8.0 * kappa);
    let c_jj = -(3.0 * v.cosh() + 17.0 * (3.0 * v).cosh() + u.cosh()) * (9.0 * v.sinh() + 17.0 * (3.0 * v).sinh())
        / (64.0 * kappa);
    TaylorInvariant::new(c_l, c_j, c_ll, c_lj, c_jj)
}

/// Closed form at a chart point together with the reference large-`|v|` laws.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct AsymptoticReport {
    pub chart: ParamChart,
    pub invariant: TaylorInvariant,
    /// `c_ll / (-sign(v) 9/(256 kappa) e^{6|v|})`.
    pub c_ll_ratio: f64,
    /// `c_jj / (-sign(v) 289/(256 kappa) e^{6|v|})`.
    pub c_jj_ratio: f64,
    /// `c_lj / (-3/(16 kappa) sinh(u) e^{2|v|})`; not defined when `u = 0`.
    pub c_lj_ratio: Option<f64>,
    /// `c_j` minus its logarithmic asymptote.
    pub c_j_residual: f64,
    /// Distance modulo `pi` between `c_l` and `-pi/2 + 2 arctan(e^{-v} tanh(u/2))`.
    pub c_l_residual: f64,
    /// The `(u, v)` display evaluated at the same point.
    pub display: TaylorInvariant,
}

/// Evaluates the closed form at a chart point and compares it with the large-`|v|` laws.
pub fn asymptotics_uv(c: &ParamChart) -> Result<AsymptoticReport> {
    let invariant = closed_form(&c.to_params()?)?;
    let (u, v, kappa) = (c.u, c.v, c.kappa);
    let sign = v.signum();
    let grow6 = (6.0 * v.abs()).exp();
    let c_ll_ratio = invariant.c_ll / (-sign * 9.0 / (256.0 * kappa) * grow6);
    let c_jj_ratio = invariant.c_jj / (-sign * 289.0 / (256.0 * kappa) * grow6);
    let c_lj_ratio = (u != 0.0).then(|| invariant.c_lj / (-3.0 / (16.0 * kappa) * u.sinh() * (2.0 * v.abs()).exp()));
    let c_j_law = if v >= 0.0 {
        -3.0 * v + (64.0 * kappa / (u / 2.0).cosh().powi(2)).ln()
    } else if u != 0.0 {
        3.0 * v + (64.0 * kappa / (u / 2.0).sinh().powi(2)).ln()
    } else {
        v + (64.0 * kappa).ln()
    };
    let c_l_law = -PI / 2.0 + 2.0 * ((-v).exp() * (u / 2.0).tanh()).atan();
    Ok(AsymptoticReport {
        chart: *c,
        invariant,
        c_ll_ratio,
        c_jj_ratio,
        c_lj_ratio,
        c_j_residual: invariant.c_j - c_j_law,
        c_l_residual: mod_pi_distance(invariant.c_l, c_l_law),
        display: display_form(c),
    })
}
