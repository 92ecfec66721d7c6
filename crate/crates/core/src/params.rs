//! Model parameters `(R1, R2, t)`, the focus-focus interval, the discriminant
//! root `rA` and the `(u, v, kappa)` chart on parameter space.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Absolute tolerance for detecting `t = t^-` or `t = t^+`.
pub const DEGENERATE_TOL: f64 = 1e-12;

/// Slack allowed on `t` outside `[0, 1]` before a parameter set is rejected.
pub const T_SLACK: f64 = 1e-12;

/// Radii of the two spheres and the coupling parameter.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ModelParams {
    pub r1: f64,
    pub r2: f64,
    pub t: f64,
}

/// The interval `]t^-, t^+[` on which the fixed point `m` is focus-focus.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct CriticalInterval {
    pub t_minus: f64,
    pub t_plus: f64,
}

impl CriticalInterval {
    pub fn contains(&self, t: f64) -> bool {
        t > self.t_minus && t < self.t_plus
    }
}

/// `rA^2 = -R^2 (1-2t)^2 + 2 R t - t^2` and its non-negative square root.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct DiscriminantRoot {
    pub ra_squared: f64,
    pub ra: f64,
}

/// Coordinates `(u, v, kappa)` on the focus-focus part of parameter space.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ParamChart {
    pub u: f64,
    pub v: f64,
    pub kappa: f64,
}

/// Type of the fixed point `m = (0,0,1,0,0,-1)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum FixedPointClass {
    FocusFocus,
    EllipticElliptic,
    Degenerate,
}

impl FixedPointClass {
    /// Number of focus-focus points of the system.
    pub fn ff_count(&self) -> u32 {
        match self {
            FixedPointClass::FocusFocus => 1,
            _ => 0,
        }
    }
}

impl ModelParams {
    /// Validates and builds a parameter triple.
    pub fn new(r1: f64, r2: f64, t: f64) -> Result<Self> {
        if !(r1.is_finite() && r1 > 0.0) {
            return Err(Error::InvalidParameters(format!("R1 = {r1} must be positive")));
        }
        if !(r2.is_finite() && r2 > 0.0) {
            return Err(Error::InvalidParameters(format!("R2 = {r2} must be positive")));
        }
        if !t.is_finite() || !(-T_SLACK..=1.0 + T_SLACK).contains(&t) {
            return Err(Error::InvalidParameters(format!("t = {t} must lie in [0, 1]")));
        }
        Ok(Self { r1, r2, t: t.clamp(0.0, 1.0) })
    }

    /// Ratio `R = R2 / R1`.
    pub fn ratio(&self) -> f64 {
        self.r2 / self.r1
    }

    /// `t^± = R2 / (2 R2 + R1 ∓ 2 sqrt(R1 R2))`.
    pub fn critical_interval(&self) -> CriticalInterval {
        let s = 2.0 * (self.r1 * self.r2).sqrt();
        CriticalInterval {
            t_minus: self.r2 / (2.0 * self.r2 + self.r1 + s),
            t_plus: self.r2 / (2.0 * self.r2 + self.r1 - s),
        }
    }

    /// `rA^2` in expanded polynomial form.
    pub fn ra_squared(&self) -> f64 {
        ra_squared(self.ratio(), self.t)
    }

    /// `rA^2` in factored form `(1 + 4 R^2)(t - t^-)(t^+ - t)`.
    pub fn ra_squared_factored(&self) -> f64 {
        let r = self.ratio();
        let ci = self.critical_interval();
        (1.0 + 4.0 * r * r) * (self.t - ci.t_minus) * (ci.t_plus - self.t)
    }

    /// The discriminant root, defined on the closed interval `[t^-, t^+]`.
    pub fn discriminant_root(&self) -> Result<DiscriminantRoot> {
        let ci = self.critical_interval();
        if self.t < ci.t_minus - DEGENERATE_TOL || self.t > ci.t_plus + DEGENERATE_TOL {
            return Err(self.out_of_range());
        }
        let ra_squared = self.ra_squared().max(0.0);
        Ok(DiscriminantRoot { ra_squared, ra: ra_squared.sqrt() })
    }

    /// Focus-focus, elliptic-elliptic or degenerate.
    pub fn classify(&self) -> FixedPointClass {
        let ci = self.critical_interval();
        if (self.t - ci.t_minus).abs() < DEGENERATE_TOL || (self.t - ci.t_plus).abs() < DEGENERATE_TOL {
            FixedPointClass::Degenerate
        } else if ci.contains(self.t) {
            FixedPointClass::FocusFocus
        } else {
            FixedPointClass::EllipticElliptic
        }
    }

    /// Errors unless the fixed point is non-degenerate focus-focus.
    pub fn require_focus_focus(&self) -> Result<()> {
        match self.classify() {
            FixedPointClass::FocusFocus => Ok(()),
            _ => Err(self.out_of_range()),
        }
    }

    /// `rA` for a focus-focus parameter set.
    pub fn ra(&self) -> Result<f64> {
        self.require_focus_focus()?;
        Ok(self.ra_squared().sqrt())
    }

    fn out_of_range(&self) -> Error {
        let ci = self.critical_interval();
        Error::OutOfFocusFocusRange { t: self.t, t_minus: ci.t_minus, t_plus: ci.t_plus }
    }

    /// Chart coordinates `u = -ln(R)/2`, `v = artanh((R - t - 2Rt)/(2 sqrt(R) t))`,
    /// `kappa = sqrt(R1 R2)`.
    pub fn to_chart(&self) -> Result<ParamChart> {
        let r = self.ratio();
        let arg = (r - self.t - 2.0 * r * self.t) / (2.0 * r.sqrt() * self.t);
        if !(arg.abs() < 1.0) {
            return Err(self.out_of_range());
        }
        Ok(ParamChart { u: -0.5 * r.ln(), v: arg.atanh(), kappa: (self.r1 * self.r2).sqrt() })
    }

    /// The isomorphic system with the spheres exchanged and `L` reversed:
    /// `(R2, R1, R1 t / (R2 + R1 t - R2 t))`.
    pub fn reverse(&self) -> ModelParams {
        let t = self.r1 * self.t / (self.r2 + self.r1 * self.t - self.r2 * self.t);
        ModelParams { r1: self.r2, r2: self.r1, t }
    }

    /// The same system with `R1` scaled to one.
    pub fn scaled(&self) -> ModelParams {
        ModelParams { r1: 1.0, r2: self.ratio(), t: self.t }
    }
}

impl ParamChart {
    /// Inverse chart: `R1 = kappa e^u`, `R2 = kappa e^-u`,
    /// `t = R / (1 + 2R + 2 sqrt(R) tanh v)` with `R = e^{-2u}`.
    pub fn to_params(&self) -> Result<ModelParams> {
        if !(self.kappa > 0.0) {
            return Err(Error::InvalidParameters(format!("kappa = {} must be positive", self.kappa)));
        }
        let r = (-2.0 * self.u).exp();
        let t = r / (1.0 + 2.0 * r + 2.0 * r.sqrt() * self.v.tanh());
        ModelParams::new(self.kappa * self.u.exp(), self.kappa * (-self.u).exp(), t)
    }
}

/// `rA^2` as a function of the ratio `R` and the coupling `t`.
pub fn ra_squared(r: f64, t: f64) -> f64 {
    let a = 1.0 - 2.0 * t;
    -r * r * a * a + 2.0 * r * t - t * t
}
