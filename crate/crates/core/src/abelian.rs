//! Abelian integrals on the elliptic curve `s^2 = P(p2)`: action, period and
//! rotation number over the real cycle `[z2, z3]`, and their imaginary
//! counterparts over the vanishing cycle `[z1, z2]`.
//!
//! Real-cycle integrals are evaluated both by Legendre reduction to complete
//! elliptic integrals and by tanh-sinh quadrature after the substitution
//! `p = z2 + (z2 - z1) sinh^2 v`. Imaginary-cycle integrals carry a simple pole
//! at `p = l` inside `[z1, z2]` and are evaluated as principal values with the
//! pole subtracted analytically.

use std::f64::consts::PI;
use std::sync::OnceLock;

use nalgebra::Matrix3;
use serde::{Deserialize, Serialize};

use crate::elliptic::{complete_k, complete_pi, Characteristic, EllipticModulus};
use crate::error::{Error, Result};
use crate::quadrature::{tanh_sinh, GaussLegendre, Tolerance};
use crate::reduced::{CubicRoots, ReducedSystem};

/// Smallest root gap accepted for a cycle.
pub const MIN_CYCLE_GAP: f64 = 1e-14;

/// Period, rotation number and their imaginary counterparts at a level.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct PeriodData {
    pub t: f64,
    pub w: f64,
    pub t_alpha: f64,
    pub w_alpha: f64,
}

/// Value of the scaled action together with the branch used.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ActionValue {
    pub value: f64,
    /// Whether the `+l` term for `l > 0`, `h R < l t` was added.
    pub shifted: bool,
}

fn quad_tol() -> Tolerance {
    Tolerance { abs: 1e-13, rel: 1e-12, max_level: 14 }
}

fn gauss() -> &'static GaussLegendre {
    static RULE: OnceLock<GaussLegendre> = OnceLock::new();
    RULE.get_or_init(|| GaussLegendre::new(64))
}

/// Integrand `R_I` of the action.
pub fn action_integrand(s: &ReducedSystem, l: f64, h: f64, p: f64) -> f64 {
    let (r, t) = (s.r, s.t);
    1.0 - 3.0 * t + r + t / r - l * (1.0 - t)
        + 2.0 * h
        + (1.0 - t) * p
        + 0.5
            * ((h - s.a(l, l)) * l / (p - l)
                + (h - s.a(l, 2.0 * r)) * 2.0 * r / (p - 2.0 * r)
                + (h - s.a(l, l + 2.0)) * (l + 2.0) / (p - l - 2.0))
}

/// Part of `R_I` that is regular at `p = l`.
fn action_integrand_regular(s: &ReducedSystem, l: f64, h: f64, p: f64) -> f64 {
    let (r, t) = (s.r, s.t);
    1.0 - 3.0 * t + r + t / r - l * (1.0 - t)
        + 2.0 * h
        + (1.0 - t) * p
        + 0.5 * ((h - s.a(l, 2.0 * r)) * 2.0 * r / (p - 2.0 * r) + (h - s.a(l, l + 2.0)) * (l + 2.0) / (p - l - 2.0))
}

/// Integrand `R_W` of the rotation number.
pub fn rotation_integrand(s: &ReducedSystem, l: f64, h: f64, p: f64) -> f64 {
    -0.5 * ((h - s.a(l, l)) / (p - l) + (h - s.a(l, l + 2.0)) / (p - l - 2.0))
}

fn real_roots(s: &ReducedSystem, l: f64, h: f64) -> Result<CubicRoots> {
    if l == 0.0 && h == 0.0 {
        return Err(Error::SingularFibre);
    }
    let z = s.solve_roots(l, h)?;
    if z.z3 - z.z2 < MIN_CYCLE_GAP {
        return Err(Error::DegenerateCycle(z.z3 - z.z2));
    }
    if z.z2 - z.z1 < MIN_CYCLE_GAP {
        return Err(Error::DegenerateCycle(z.z2 - z.z1));
    }
    Ok(z)
}

/// `int_{z2}^{z3} f(p) dp / sqrt(P)` by tanh-sinh.
///
/// The cycle is split at its midpoint. The lower half uses `p = z2 + (z2 - z1) sinh^2 v`
/// and the upper half `p = z3 - (z3 - z2) sinh^2 v`; both substitutions remove the root
/// singularity and resolve features near either root on the same scale.
pub fn real_cycle_quadrature<F: Fn(f64) -> f64>(s: &ReducedSystem, z: &CubicRoots, f: F) -> Result<f64> {
    let c = s.cubic_scale();
    let half = 0.5 * (z.z3 - z.z2);
    let d_low = z.z2 - z.z1;
    let lower = tanh_sinh(
        |v, _, _| {
            let p = z.z2 + d_low * v.sinh().powi(2);
            2.0 * f(p) / (c * (z.z3 - p)).sqrt()
        },
        0.0,
        (half / d_low).sqrt().asinh(),
        quad_tol(),
    )?;
    let d_up = z.z3 - z.z2;
    let upper = tanh_sinh(
        |v, _, _| {
            let p = z.z3 - d_up * v.sinh().powi(2);
            2.0 * f(p) * d_up.sqrt() * v.cosh() / (c * (p - z.z1) * (p - z.z2)).sqrt()
        },
        0.0,
        0.5f64.sqrt().asinh(),
        quad_tol(),
    )?;
    Ok(lower.value + upper.value)
}

/// Principal value of `int_{z1}^{z2} (residue/(p - pole) + regular(p)) dp / sqrt(-P)`.
///
/// With `p = m + d cos(theta)` the measure becomes `dtheta / sqrt(c (z3 - p))`. The pole is
/// removed by subtracting `residue / ((p - pole) sqrt(c (z3 - pole)))`, whose principal value
/// over `[0, pi]` is known in closed form.
pub fn imaginary_cycle_pv<F: Fn(f64) -> f64>(
    s: &ReducedSystem,
    z: &CubicRoots,
    pole: f64,
    residue: f64,
    regular: F,
) -> f64 {
    let c = s.cubic_scale();
    let m = 0.5 * (z.z1 + z.z2);
    let d = 0.5 * (z.z2 - z.z1);
    let gp = (z.z3 - pole).sqrt();
    let integrand = |theta: f64| {
        let p = m + d * theta.cos();
        let gz = (z.z3 - p).sqrt();
        (regular(p) / gz + residue / (gz * gp * (gp + gz))) / c.sqrt()
    };
    let x = (pole - m) / d;
    let rule = gauss();
    let smooth = if x.abs() < 1.0 {
        let theta0 = x.acos();
        rule.integrate(integrand, 0.0, theta0) + rule.integrate(integrand, theta0, PI)
    } else {
        rule.integrate(integrand, 0.0, PI)
    };
    let pv = if x.abs() < 1.0 { 0.0 } else { PI * (m - pole).signum() / ((m - pole).powi(2) - d * d).sqrt() };
    smooth + residue / (c * (z.z3 - pole)).sqrt() * pv
}

/// Signed distances `(z2 - a, z3 - a)` for a pole `a` on an edge of the physical interval.
///
/// At `a = l` and `a = l + 2` the polynomial reduces to `P(a) = -(h - A(a))^2`, so the
/// product of the two distances is `(h - A(a))^2 / (c (a - z1))`. The distance to the
/// nearer root is taken from that product, avoiding cancellation.
fn pole_gaps(s: &ReducedSystem, z: &CubicRoots, l: f64, h: f64, a: f64) -> (f64, f64) {
    let e = h - s.a(l, a);
    let product = e * e / (s.cubic_scale() * (a - z.z1));
    if (a - z.z2).abs() < (a - z.z3).abs() {
        let g3 = z.z3 - a;
        (product / g3, g3)
    } else {
        let g2 = z.z2 - a;
        (g2, product / g2)
    }
}

fn pole_characteristic(z: &CubicRoots, a: f64, (g2, g3): (f64, f64)) -> Result<Characteristic> {
    Characteristic::from_parts((z.z3 - z.z2) / g3, g2 / g3, (z.z3 - z.z2) * (a - z.z1) / (g3 * (z.z3 - z.z1)))
}

/// `residue * int_{z2}^{z3} dp / ((p - a) sqrt(P))` for an edge pole `a` outside `(z2, z3)`.
fn real_cycle_pole(s: &ReducedSystem, z: &CubicRoots, l: f64, h: f64, a: f64, residue: f64) -> Result<f64> {
    if residue == 0.0 {
        return Ok(0.0);
    }
    let c = s.cubic_scale();
    let m = EllipticModulus::from_kp2((z.z2 - z.z1) / (z.z3 - z.z1))?;
    let gaps = pole_gaps(s, z, l, h, a);
    let ch = pole_characteristic(z, a, gaps)?;
    Ok(residue * 2.0 * complete_pi(ch, m)? / (c.sqrt() * (z.z3 - z.z1).sqrt() * gaps.1))
}

/// Characteristics `(n_l, n_{l+2})` at a level.
pub fn characteristics(s: &ReducedSystem, l: f64, h: f64) -> Result<(Characteristic, Characteristic)> {
    let z = real_roots(s, l, h)?;
    let mk = |a: f64| pole_characteristic(&z, a, pole_gaps(s, &z, l, h, a));
    Ok((mk(l)?, mk(l + 2.0)?))
}

/// Elliptic modulus `k^2 = (z3 - z2)/(z3 - z1)` of the level.
pub fn modulus(s: &ReducedSystem, l: f64, h: f64) -> Result<EllipticModulus> {
    let z = real_roots(s, l, h)?;
    EllipticModulus::from_kp2((z.z2 - z.z1) / (z.z3 - z.z1))
}

/// Reduced period `T = 4 K(k) / (sqrt(c) sqrt(z3 - z1))`.
pub fn period(s: &ReducedSystem, l: f64, h: f64) -> Result<f64> {
    let z = real_roots(s, l, h)?;
    let m = EllipticModulus::from_kp2((z.z2 - z.z1) / (z.z3 - z.z1))?;
    Ok(4.0 * complete_k(m)? / (s.cubic_scale().sqrt() * (z.z3 - z.z1).sqrt()))
}

/// Reduced period by quadrature of `2 int_{z2}^{z3} dp / sqrt(P)`.
pub fn period_quadrature(s: &ReducedSystem, l: f64, h: f64) -> Result<f64> {
    let z = real_roots(s, l, h)?;
    Ok(2.0 * real_cycle_quadrature(s, &z, |_| 1.0)?)
}

/// Rotation integral `(1/pi) int_{z2}^{z3} R_W dp / sqrt(P)` through Heuman's lambda.
pub fn rotation_integral(s: &ReducedSystem, l: f64, h: f64) -> Result<f64> {
    let z = real_roots(s, l, h)?;
    let pl = real_cycle_pole(s, &z, l, h, l, h - s.a(l, l))?;
    let pl2 = real_cycle_pole(s, &z, l, h, l + 2.0, h - s.a(l, l + 2.0))?;
    Ok(-0.5 / PI * (pl + pl2))
}

/// Rotation integral by direct quadrature.
pub fn rotation_integral_quadrature(s: &ReducedSystem, l: f64, h: f64) -> Result<f64> {
    let z = real_roots(s, l, h)?;
    Ok(real_cycle_quadrature(s, &z, |p| rotation_integrand(s, l, h, p))? / PI)
}

/// Rotation number `W = -dI/dl`, including the jump of the action branch.
pub fn rotation_number(s: &ReducedSystem, l: f64, h: f64) -> Result<f64> {
    let w = rotation_integral(s, l, h)?;
    Ok(if s.in_shifted_branch(l, h) { w - 1.0 } else { w })
}

/// Scaled action: the real-cycle integral of `R_I`, plus `l` for `l > 0`, `h R < l t`.
///
/// The pole of `R_I` at `p = l` is integrated through the complete third-kind integral
/// and the remainder by quadrature.
pub fn action(s: &ReducedSystem, l: f64, h: f64) -> Result<ActionValue> {
    let z = real_roots(s, l, h)?;
    let regular = real_cycle_quadrature(s, &z, |p| action_integrand_regular(s, l, h, p))?;
    let pole = real_cycle_pole(s, &z, l, h, l, 0.5 * (h - s.a(l, l)) * l)?;
    let base = (regular + pole) / PI;
    let shifted = s.in_shifted_branch(l, h);
    Ok(ActionValue { value: if shifted { base + l } else { base }, shifted })
}

/// Scaled action as the enclosed area `-(C_L + (1/pi) int_{z2}^{z3} arccos((h - A)/sqrt(B)) dp)`.
pub fn action_arccos(s: &ReducedSystem, l: f64, h: f64) -> Result<f64> {
    let z = real_roots(s, l, h)?;
    let upper = s.a(l, l.max(0.0));
    let c_l = if h > upper {
        0.0
    } else if l < 0.0 {
        z.z2
    } else {
        z.z2 - l
    };
    let q = tanh_sinh(|p, _, _| arccos_ratio(s, l, h, p), z.z2, z.z3, quad_tol())?;
    Ok(-(c_l + q.value / PI))
}

fn arccos_ratio(s: &ReducedSystem, l: f64, h: f64, p: f64) -> f64 {
    let b = s.b(l, p);
    if b <= 0.0 {
        return if h - s.a(l, p) < 0.0 { PI } else { 0.0 };
    }
    ((h - s.a(l, p)) / b.sqrt()).clamp(-1.0, 1.0).acos()
}

/// Real roots of `P` at any level, ascending.
pub fn all_real_roots(s: &ReducedSystem, l: f64, h: f64) -> Vec<f64> {
    if let Ok(z) = s.solve_roots(l, h) {
        return vec![z.z1, z.z2, z.z3];
    }
    let c = s.p_coeffs(l, h);
    let m = Matrix3::new(0.0, 0.0, -c[0] / c[3], 1.0, 0.0, -c[1] / c[3], 0.0, 1.0, -c[2] / c[3]);
    let ev = m.complex_eigenvalues();
    let scale = 1.0 + ev.iter().map(|z| z.re.abs()).fold(0.0, f64::max);
    let mut out: Vec<f64> = ev
        .iter()
        .filter(|z| z.im.abs() <= 1e-9 * scale)
        .map(|z| {
            let mut x = z.re;
            for _ in 0..3 {
                let f = c[0] + x * (c[1] + x * (c[2] + x * c[3]));
                let d = c[1] + x * (2.0 * c[2] + 3.0 * c[3] * x);
                if d != 0.0 {
                    x -= f / d;
                }
            }
            x
        })
        .collect();
    out.sort_by(f64::total_cmp);
    out
}

/// Action as the area `-(1/pi) int arccos(clamp((h - A)/sqrt(B))) dp` over the whole
/// physical interval. Valid at every level of the momentum image and equal to
/// [`action`] near the focus-focus value.
pub fn area_action(s: &ReducedSystem, l: f64, h: f64) -> Result<f64> {
    let (lo, hi) = s.physical_interval(l);
    if hi <= lo {
        return Ok(0.0);
    }
    let mut cuts = vec![lo];
    cuts.extend(all_real_roots(s, l, h).into_iter().filter(|&x| x > lo && x < hi));
    cuts.push(hi);
    let mut total = 0.0;
    for w in cuts.windows(2) {
        let (a, b) = (w[0], w[1]);
        if b - a <= 0.0 {
            continue;
        }
        let mid = 0.5 * (a + b);
        if s.p(l, h, mid) <= 0.0 {
            if h - s.a(l, mid) < 0.0 {
                total += PI * (b - a);
            }
        } else {
            total += tanh_sinh(|p, _, _| arccos_ratio(s, l, h, p), a, b, quad_tol())?.value;
        }
    }
    Ok(-total / PI)
}

/// Imaginary action `J = (2/pi) PV int_{z1}^{z2} R_I dp / sqrt(-P)`.
pub fn imaginary_action(s: &ReducedSystem, l: f64, h: f64) -> Result<f64> {
    if l == 0.0 && h == 0.0 {
        return Ok(0.0);
    }
    let z = real_roots(s, l, h)?;
    let res = 0.5 * (h - s.a(l, l)) * l;
    Ok(2.0 / PI * imaginary_cycle_pv(s, &z, l, res, |p| action_integrand_regular(s, l, h, p)))
}

/// Imaginary period `T^alpha = 8 K(k') / (sqrt(c) sqrt(z3 - z1))`.
pub fn imaginary_period(s: &ReducedSystem, l: f64, h: f64) -> Result<f64> {
    let z = real_roots(s, l, h)?;
    let m = EllipticModulus::from_kp2((z.z3 - z.z2) / (z.z3 - z.z1))?;
    Ok(8.0 * complete_k(m)? / (s.cubic_scale().sqrt() * (z.z3 - z.z1).sqrt()))
}

/// Imaginary period by quadrature of `4 int_{z1}^{z2} dp / sqrt(-P)`.
pub fn imaginary_period_quadrature(s: &ReducedSystem, l: f64, h: f64) -> Result<f64> {
    let z = real_roots(s, l, h)?;
    Ok(4.0 * imaginary_cycle_pv(s, &z, l, 0.0, |_| 1.0))
}

/// Imaginary rotation number `W^alpha = (2/pi) PV int_{z1}^{z2} R_W dp / sqrt(-P) = -dJ/dl`.
pub fn imaginary_rotation(s: &ReducedSystem, l: f64, h: f64) -> Result<f64> {
    let z = real_roots(s, l, h)?;
    let res = -0.5 * (h - s.a(l, l));
    let a2 = h - s.a(l, l + 2.0);
    Ok(2.0 / PI * imaginary_cycle_pv(s, &z, l, res, |p| -0.5 * a2 / (p - l - 2.0)))
}

/// Energy `h` with `J(l, h) = j`, by Newton iteration from `guess` using `dJ/dh = T^alpha / (2 pi)`.
pub fn level_for_imaginary_action(s: &ReducedSystem, l: f64, j: f64, guess: f64) -> Result<f64> {
    let mut h = guess;
    for _ in 0..30 {
        let residual = imaginary_action(s, l, h)? - j;
        let step = residual * 2.0 * PI / imaginary_period(s, l, h)?;
        h -= step;
        if step.abs() <= 1e-15 * (l.abs() + h.abs()) {
            return Ok(h);
        }
    }
    Ok(h)
}

/// All four period quantities at a level.
pub fn period_data(s: &ReducedSystem, l: f64, h: f64) -> Result<PeriodData> {
    Ok(PeriodData {
        t: period(s, l, h)?,
        w: rotation_number(s, l, h)?,
        t_alpha: imaginary_period(s, l, h)?,
        w_alpha: imaginary_rotation(s, l, h)?,
    })
}

/// Richardson-extrapolated limit of `f(eps (dl, dh))` as `eps -> 0`, assuming an
/// expansion in integer powers of `eps`.
pub fn origin_limit<F: Fn(f64, f64) -> Result<f64>>(f: F, dl: f64, dh: f64, eps0: f64) -> Result<f64> {
    let levels = 5;
    let mut table: Vec<f64> = Vec::with_capacity(levels);
    for i in 0..levels {
        let e = eps0 / 2f64.powi(i as i32);
        table.push(f(e * dl, e * dh)?);
    }
    for k in 1..levels {
        let fac = 2f64.powi(k as i32);
        for i in (k..levels).rev() {
            table[i] = (fac * table[i] - table[i - 1]) / (fac - 1.0);
        }
    }
    Ok(table[levels - 1])
}
