//! Numerical quadrature: a double-exponential (tanh-sinh) rule that passes
//! exact endpoint distances to the integrand, and Gauss-Legendre rules.

use std::f64::consts::FRAC_PI_2;

use crate::error::{Error, Result};

/// Tolerances for [`tanh_sinh`].
#[derive(Debug, Clone, Copy)]
pub struct Tolerance {
    pub abs: f64,
    pub rel: f64,
    pub max_level: u32,
}

impl Default for Tolerance {
    fn default() -> Self {
        Self { abs: 1e-12, rel: 1e-12, max_level: 12 }
    }
}

/// Result of an adaptive integration together with its error estimate.
#[derive(Debug, Clone, Copy)]
pub struct Quad {
    pub value: f64,
    pub error: f64,
    pub evaluations: usize,
}

const T_MAX: f64 = 4.0;

/// Integrates `f(x, x - a, b - x)` over `[a, b]` with the tanh-sinh rule.
///
/// The second and third arguments are the distances to the endpoints,
/// computed without cancellation so that integrands with endpoint
/// singularities can be evaluated accurately.
pub fn tanh_sinh<F>(f: F, a: f64, b: f64, tol: Tolerance) -> Result<Quad>
where
    F: Fn(f64, f64, f64) -> f64,
{
    if a == b {
        return Ok(Quad { value: 0.0, error: 0.0, evaluations: 0 });
    }
    if b < a {
        let q = tanh_sinh_ordered(&|x, da, db| f(x, db, da), b, a, tol)?;
        return Ok(Quad { value: -q.value, ..q });
    }
    tanh_sinh_ordered(&f, a, b, tol)
}

fn tanh_sinh_ordered(f: &dyn Fn(f64, f64, f64) -> f64, a: f64, b: f64, tol: Tolerance) -> Result<Quad> {
    let half = 0.5 * (b - a);
    let mid = 0.5 * (a + b);
    let mut evaluations = 0usize;
    let mut eval = |t: f64| -> f64 {
        let s = FRAC_PI_2 * t.sinh();
        let cs = s.cosh();
        let w = half * FRAC_PI_2 * t.cosh() / (cs * cs);
        // distance to the nearer endpoint: (b - a) / (1 + e^{2|s|})
        let near = (b - a) / (1.0 + (2.0 * s.abs()).exp());
        if near == 0.0 || w == 0.0 {
            return 0.0;
        }
        let far = (b - a) - near;
        let (x, da, db) = if s >= 0.0 { (b - near, far, near) } else { (a + near, near, far) };
        let x = if s == 0.0 { mid } else { x };
        evaluations += 1;
        w * f(x, da, db)
    };

    let mut h = 1.0;
    let mut sum = eval(0.0);
    let mut k = 1;
    while (k as f64) * h <= T_MAX {
        let t = k as f64 * h;
        sum += eval(t) + eval(-t);
        k += 1;
    }
    let mut estimate = sum * h;
    for level in 1..=tol.max_level {
        h *= 0.5;
        let mut k = 1;
        while (k as f64) * h <= T_MAX {
            let t = k as f64 * h;
            sum += eval(t) + eval(-t);
            k += 2;
        }
        let next = sum * h;
        let error = (next - estimate).abs();
        if !next.is_finite() {
            return Err(Error::QuadratureFailure(format!("non-finite integrand on [{a}, {b}]")));
        }
        estimate = next;
        if error <= tol.abs.max(tol.rel * next.abs()) && level >= 3 {
            return Ok(Quad { value: next, error, evaluations });
        }
    }
    Err(Error::QuadratureFailure(format!("tanh-sinh did not converge on [{a}, {b}] (estimate {estimate})")))
}

/// Convenience wrapper for smooth or mildly singular integrands.
pub fn integrate<F: Fn(f64) -> f64>(f: F, a: f64, b: f64, tol: Tolerance) -> Result<f64> {
    tanh_sinh(|x, _, _| f(x), a, b, tol).map(|q| q.value)
}

/// Gauss-Legendre rule on `[-1, 1]`.
#[derive(Debug, Clone)]
pub struct GaussLegendre {
    pub nodes: Vec<f64>,
    pub weights: Vec<f64>,
}

impl GaussLegendre {
    /// Builds an `n`-point rule; nodes are found by Newton iteration on the
    /// Legendre polynomial from Chebyshev initial guesses.
    pub fn new(n: usize) -> Self {
        assert!(n >= 1, "Gauss-Legendre rule needs at least one node");
        let mut nodes = vec![0.0; n];
        let mut weights = vec![0.0; n];
        let nf = n as f64;
        for i in 0..n.div_ceil(2) {
            let mut x = (std::f64::consts::PI * (i as f64 + 0.75) / (nf + 0.5)).cos();
            let mut dp = 0.0;
            for _ in 0..100 {
                let (p, d) = legendre(n, x);
                dp = d;
                let dx = p / d;
                x -= dx;
                if dx.abs() < 1e-16 {
                    break;
                }
            }
            let (_, d) = legendre(n, x);
            if d != 0.0 {
                dp = d;
            }
            let w = 2.0 / ((1.0 - x * x) * dp * dp);
            nodes[i] = -x;
            nodes[n - 1 - i] = x;
            weights[i] = w;
            weights[n - 1 - i] = w;
        }
        Self { nodes, weights }
    }

    /// Integrates `f` over `[a, b]`.
    pub fn integrate<F: FnMut(f64) -> f64>(&self, mut f: F, a: f64, b: f64) -> f64 {
        let half = 0.5 * (b - a);
        let mid = 0.5 * (a + b);
        self.nodes.iter().zip(&self.weights).map(|(x, w)| w * f(mid + half * x)).sum::<f64>() * half
    }
}

/// Legendre polynomial `P_n(x)` and its derivative.
fn legendre(n: usize, x: f64) -> (f64, f64) {
    let (mut p0, mut p1) = (1.0, x);
    for k in 2..=n {
        let kf = k as f64;
        let p2 = ((2.0 * kf - 1.0) * x * p1 - (kf - 1.0) * p0) / kf;
        p0 = p1;
        p1 = p2;
    }
    if n == 0 {
        return (1.0, 0.0);
    }
    let d = n as f64 * (x * p1 - p0) / (x * x - 1.0);
    (p1, d)
}
