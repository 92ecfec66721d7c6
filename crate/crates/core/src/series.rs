//! Expansions near the focus-focus value: the Birkhoff normal form, the
//! imaginary action, the roots of the reduced cubic, the discriminant radius,
//! the elliptic modulus, the period and the rotation number.
//!
//! Series in `(l, h)` are polynomials; series in the normal-form coordinates
//! `(l, j)` also involve `|w| = sqrt(l^2 + j^2)`, `arg(w)` and `ln|w|`.

use std::f64::consts::PI;
use std::ops::{Add, Mul, Neg, Sub};

use crate::coefficients::{CoefficientTables, Coefficients, Family};
use crate::error::{Error, Result};
use crate::params::ModelParams;
use crate::reduced::{CubicRoots, ReducedSystem};

/// Highest total degree kept by [`Poly2`].
pub const MAX_DEGREE: usize = 3;

const N: usize = MAX_DEGREE + 1;

/// Bivariate polynomial truncated at total degree [`MAX_DEGREE`], stored as a dense grid.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct Poly2 {
    c: [[f64; N]; N],
}

impl Poly2 {
    /// The zero polynomial.
    pub fn zero() -> Self {
        Self::default()
    }

    /// A constant.
    pub fn constant(a: f64) -> Self {
        let mut p = Self::zero();
        p.c[0][0] = a;
        p
    }

    /// The first variable.
    pub fn x() -> Self {
        Self::from_terms(&[(1, 0, 1.0)])
    }

    /// The second variable.
    pub fn y() -> Self {
        Self::from_terms(&[(0, 1, 1.0)])
    }

    /// Builds a polynomial from `(m, n, coefficient)` triples; terms above the
    /// truncation degree are dropped.
    pub fn from_terms(terms: &[(usize, usize, f64)]) -> Self {
        let mut p = Self::zero();
        for &(m, n, v) in terms {
            if m + n <= MAX_DEGREE {
                p.c[m][n] += v;
            }
        }
        p
    }

    /// Coefficient of `x^m y^n`.
    pub fn coeff(&self, m: usize, n: usize) -> f64 {
        if m + n <= MAX_DEGREE {
            self.c[m][n]
        } else {
            0.0
        }
    }

    /// Drops all terms of total degree above `order`.
    pub fn truncate(&self, order: usize) -> Self {
        let mut p = *self;
        for m in 0..N {
            for n in 0..N {
                if m + n > order {
                    p.c[m][n] = 0.0;
                }
            }
        }
        p
    }

    /// Homogeneous part of total degree `d`.
    pub fn homogeneous(&self, d: usize) -> Self {
        let mut p = Self::zero();
        for m in 0..=d.min(MAX_DEGREE) {
            let n = d - m;
            if n < N {
                p.c[m][n] = self.c[m][n];
            }
        }
        p
    }

    /// Evaluates the polynomial.
    pub fn eval(&self, x: f64, y: f64) -> f64 {
        let mut acc = 0.0;
        for m in (0..N).rev() {
            let mut row = 0.0;
            for n in (0..N - m).rev() {
                row = row * y + self.c[m][n];
            }
            acc = acc * x + row;
        }
        acc
    }

    /// Multiplies every coefficient by `a`.
    pub fn scale(&self, a: f64) -> Self {
        let mut p = *self;
        p.c.iter_mut().flatten().for_each(|v| *v *= a);
        p
    }

    /// Partial derivative in the first variable.
    pub fn d_dx(&self) -> Self {
        let mut p = Self::zero();
        for m in 1..N {
            for n in 0..N - m {
                p.c[m - 1][n] = m as f64 * self.c[m][n];
            }
        }
        p
    }

    /// Partial derivative in the second variable.
    pub fn d_dy(&self) -> Self {
        let mut p = Self::zero();
        for m in 0..N {
            for n in 1..N - m {
                p.c[m][n - 1] = n as f64 * self.c[m][n];
            }
        }
        p
    }

    /// Substitutes `x -> fx(x, y)` and `y -> fy(x, y)`, truncating the result.
    pub fn compose(&self, fx: &Poly2, fy: &Poly2) -> Self {
        let mut xp = [Poly2::constant(1.0); N];
        let mut yp = [Poly2::constant(1.0); N];
        for k in 1..N {
            xp[k] = xp[k - 1] * *fx;
            yp[k] = yp[k - 1] * *fy;
        }
        let mut out = Self::zero();
        for m in 0..N {
            for n in 0..N - m {
                if self.c[m][n] != 0.0 {
                    out = out + (xp[m] * yp[n]).scale(self.c[m][n]);
                }
            }
        }
        out
    }
}

impl Add for Poly2 {
    type Output = Poly2;
    fn add(mut self, rhs: Poly2) -> Poly2 {
        for m in 0..N {
            for n in 0..N {
                self.c[m][n] += rhs.c[m][n];
            }
        }
        self
    }
}

impl Sub for Poly2 {
    type Output = Poly2;
    fn sub(self, rhs: Poly2) -> Poly2 {
        self + (-rhs)
    }
}

impl Neg for Poly2 {
    type Output = Poly2;
    fn neg(self) -> Poly2 {
        self.scale(-1.0)
    }
}

impl Mul for Poly2 {
    type Output = Poly2;
    fn mul(self, rhs: Poly2) -> Poly2 {
        let mut out = Poly2::zero();
        for m1 in 0..N {
            for n1 in 0..N - m1 {
                let a = self.c[m1][n1];
                if a == 0.0 {
                    continue;
                }
                for m2 in 0..N - m1 {
                    for n2 in 0..N - m1 - m2 {
                        if m1 + n1 + m2 + n2 <= MAX_DEGREE {
                            out.c[m1 + m2][n1 + n2] += a * rhs.c[m2][n2];
                        }
                    }
                }
            }
        }
        out
    }
}

/// Inverts `z = f(x, y)` in its second variable with `x` held fixed: returns
/// `g` with `f(x, g(x, z)) = z` through the truncation degree.
///
/// `f` must have no constant term and a nonzero coefficient of `y`.
pub fn invert_series(f: &Poly2) -> Result<Poly2> {
    let lin = f.coeff(0, 1);
    if lin == 0.0 || !lin.is_finite() || f.coeff(0, 0) != 0.0 {
        return Err(Error::NonInvertibleLinearPart);
    }
    let rest = *f - Poly2::y().scale(lin);
    let mut g = Poly2::y().scale(1.0 / lin);
    for _ in 0..N {
        g = (Poly2::y() - rest.compose(&Poly2::x(), &g)).scale(1.0 / lin);
    }
    Ok(g)
}

/// `arg(w)` for `w = l + i j`, taking values in `[-pi/2, 3pi/2)`.
///
/// The cut runs along the negative `j` axis, where the rotation number of the
/// action branch in use jumps by one.
pub fn arg_lower_cut(l: f64, j: f64) -> f64 {
    let a = j.atan2(l);
    if a < -PI / 2.0 {
        a + 2.0 * PI
    } else {
        a
    }
}

/// Expansions at a fixed focus-focus parameter point `(R, t)`.
#[derive(Debug, Clone)]
pub struct FocusSeries {
    pub r: f64,
    pub t: f64,
    pub ra: f64,
    sr: f64,
    k: Coefficients,
}

impl FocusSeries {
    /// Prepares the coefficient values for a scaled system in the focus-focus regime.
    pub fn new(s: &ReducedSystem) -> Result<Self> {
        ModelParams::new(1.0, s.r, s.t)?.require_focus_focus()?;
        let k = CoefficientTables::embedded().evaluate(s.r, s.t);
        Ok(Self { r: s.r, t: s.t, ra: s.ra_squared().sqrt(), sr: s.r.sqrt(), k })
    }

    /// The coefficient values at this parameter point.
    pub fn coefficients(&self) -> &Coefficients {
        &self.k
    }

    fn g(&self, f: Family, i: &[u8]) -> f64 {
        self.k.get(f, i)
    }

    fn quadratic(&self, f: Family, x: f64, y: f64) -> f64 {
        self.g(f, &[2, 0]) * x * x + self.g(f, &[1, 1]) * x * y + self.g(f, &[0, 2]) * y * y
    }

    fn cubic(&self, f: Family, x: f64, y: f64) -> f64 {
        self.g(f, &[3, 0]) * x.powi(3)
            + self.g(f, &[2, 1]) * x * x * y
            + self.g(f, &[1, 2]) * x * y * y
            + self.g(f, &[0, 3]) * y.powi(3)
    }

    /// `R + t - 2 R t`, the `l` weight of the linear normal form.
    fn sigma(&self) -> f64 {
        self.r + self.t - 2.0 * self.r * self.t
    }

    /// Birkhoff normal form `h = B(l, j)` as a polynomial in `(l, j)`.
    pub fn birkhoff_poly(&self) -> Poly2 {
        let (r, t, ra) = (self.r, self.t, self.ra);
        let q = t / (8.0 * r * ra * ra);
        let c = t * t * (t - 1.0) / (8.0 * ra.powi(6));
        let a = |m: u8, n: u8| self.g(Family::A, &[m, n]);
        Poly2::from_terms(&[
            (1, 0, self.sigma() / (2.0 * r)),
            (0, 1, ra / (2.0 * r)),
            (2, 0, q * a(2, 0)),
            (1, 1, q * a(1, 1)),
            (0, 2, q * a(0, 2)),
            (3, 0, c * a(3, 0)),
            (2, 1, c * a(2, 1)),
            (1, 2, c * a(1, 2)),
            (0, 3, c * a(0, 3)),
        ])
    }

    /// Birkhoff normal form `h = B(l, j)` through cubic order.
    pub fn birkhoff(&self, l: f64, j: f64) -> f64 {
        self.birkhoff_poly().eval(l, j)
    }

    /// Imaginary action `j = J(l, h)` as a polynomial in `(l, h)`, truncated at `order` (1 to 3).
    pub fn imaginary_action_poly(&self, order: usize) -> Result<Poly2> {
        if !(1..=MAX_DEGREE).contains(&order) {
            return Err(Error::InvalidParameters(format!("series order {order} is outside 1..=3")));
        }
        let (r, ra) = (self.r, self.ra);
        let q = 1.0 / ra.powi(5);
        let c = 1.0 / ra.powi(9);
        let k = |m: u8, n: u8| self.g(Family::C, &[m, n]);
        let p = Poly2::from_terms(&[
            (1, 0, -self.sigma() / ra),
            (0, 1, 2.0 * r / ra),
            (2, 0, q * k(2, 0)),
            (1, 1, q * k(1, 1)),
            (0, 2, q * k(0, 2)),
            (3, 0, c * k(3, 0)),
            (2, 1, c * k(2, 1)),
            (1, 2, c * k(1, 2)),
            (0, 3, c * k(0, 3)),
        ]);
        Ok(p.truncate(order))
    }

    /// Imaginary action `J(l, h)` through the given order.
    pub fn imaginary_action_series(&self, l: f64, h: f64, order: usize) -> Result<f64> {
        Ok(self.imaginary_action_poly(order)?.eval(l, h))
    }

    /// Imaginary period `T^alpha = 2 pi dJ/dh` through quadratic order.
    pub fn imaginary_period_series(&self, l: f64, h: f64) -> f64 {
        2.0 * PI * self.imaginary_action_poly(MAX_DEGREE).expect("valid order").d_dy().eval(l, h)
    }

    /// Imaginary rotation number `W^alpha = -dJ/dl` through quadratic order.
    pub fn imaginary_rotation_series(&self, l: f64, h: f64) -> f64 {
        -self.imaginary_action_poly(MAX_DEGREE).expect("valid order").d_dx().eval(l, h)
    }

    /// Discriminant radius `rC = sqrt(l^2 (1 - t) t - l h (R + t - 2Rt) + h^2 R)`.
    pub fn discriminant_radius(&self, l: f64, h: f64) -> f64 {
        let (r, t) = (self.r, self.t);
        (l * l * (1.0 - t) * t - l * h * self.sigma() + h * h * r).max(0.0).sqrt()
    }

    /// Discriminant radius along the normal form, `rC(l, B(l, j))`, through cubic order.
    pub fn rc_series(&self, l: f64, j: f64) -> f64 {
        let (t, ra, sr) = (self.t, self.ra, self.sr);
        let w2 = l * l + j * j;
        if w2 == 0.0 {
            return 0.0;
        }
        let w = w2.sqrt();
        let u = |m: u8, n: u8| self.g(Family::U, &[m, n]);
        let sextic: f64 = (0..=6u8).map(|i| u(6 - i, i) * l.powi(6 - i as i32) * j.powi(i as i32)).sum();
        ra / (2.0 * sr) * w
            + t * j / (8.0 * sr * ra * ra * w) * self.quadratic(Family::U, l, j)
            + t * t / (64.0 * sr * ra.powi(5) * w2 * w) * sextic
    }

    /// Leading value of the upper root at the focus-focus value.
    pub fn upper_root_at_origin(&self) -> f64 {
        self.ra * self.ra / (2.0 * self.r * self.t * (1.0 - self.t))
    }

    /// Roots of the reduced cubic as series in `(l, h)`.
    ///
    /// `order = 1` keeps the linear terms; `order = 2` adds the quadratic terms of all
    /// three roots; `order = 3` adds the cubic term of the upper root.
    pub fn roots_lh_series(&self, l: f64, h: f64, order: usize) -> Result<CubicRoots> {
        if !(1..=MAX_DEGREE).contains(&order) {
            return Err(Error::InvalidParameters(format!("series order {order} is outside 1..=3")));
        }
        let (r, t, ra) = (self.r, self.t, self.ra);
        let rc = self.discriminant_radius(l, h);
        let lower = |f: Family| {
            let k = |i: [u8; 3]| self.g(f, &i);
            let first = (k([1, 0, 0]) * l + k([0, 1, 0]) * h + k([0, 0, 1]) * rc) / (ra * ra);
            if order < 2 || rc == 0.0 {
                return first;
            }
            let poly = k([3, 0, 0]) * l.powi(3)
                + k([2, 1, 0]) * l * l * h
                + k([2, 0, 1]) * l * l * rc
                + k([1, 2, 0]) * l * h * h
                + k([1, 1, 1]) * l * h * rc
                + k([0, 3, 0]) * h.powi(3)
                + k([0, 2, 1]) * h * h * rc;
            first + r / (2.0 * ra.powi(6) * rc) * poly
        };
        let f = |m: u8, n: u8| self.g(Family::F, &[m, n]);
        let mut z3 = self.upper_root_at_origin() + (r - t) / ((1.0 - t) * ra * ra) * (f(1, 0) * l + f(0, 1) * h);
        if order >= 2 {
            z3 += 2.0 * r * t / ra.powi(6) * self.quadratic(Family::F, l, h);
        }
        if order >= 3 {
            z3 += 4.0 * r * r * t * t / ra.powi(10) * self.cubic(Family::F, l, h);
        }
        Ok(CubicRoots { z1: lower(Family::D), z2: lower(Family::E), z3 })
    }

    /// Roots of the reduced cubic as series in `(l, j)`.
    pub fn roots_lj_series(&self, l: f64, j: f64) -> CubicRoots {
        let (r, t, ra, sr) = (self.r, self.t, self.ra, self.sr);
        let w = l.hypot(j);
        let lower = |f: Family| {
            let k = |i: [u8; 3]| self.g(f, &i);
            let first = (k([1, 0, 0]) * l + k([0, 1, 0]) * j + k([0, 0, 1]) * w) / (2.0 * ra);
            if w == 0.0 {
                return first;
            }
            let odd = k([3, 0, 0]) * l.powi(3)
                + k([2, 1, 0]) * l * l * j
                + k([1, 2, 0]) * l * j * j
                + k([0, 3, 0]) * j.powi(3);
            let even = k([2, 0, 1]) * l * l + k([1, 1, 1]) * l * j + k([0, 2, 1]) * j * j;
            first + (odd + even * w) / (8.0 * ra.powi(4) * sr * w)
        };
        let g = |m: u8, n: u8| self.g(Family::Gamma, &[m, n]);
        let z3 = self.upper_root_at_origin()
            + (g(1, 0) * l + g(0, 1) * j) / (2.0 * r * ra * (t - 1.0))
            + self.quadratic(Family::Gamma, l, j) / (8.0 * r * ra.powi(4) * (t - 1.0))
            + t * t / (8.0 * ra.powi(8)) * self.cubic(Family::Gamma, l, j);
        CubicRoots { z1: lower(Family::Alpha), z2: lower(Family::Beta), z3 }
    }

    /// Squared elliptic modulus `k^2` through second order in `(l, j)`.
    pub fn modulus_series(&self, l: f64, j: f64) -> f64 {
        let (t, ra, sr) = (self.t, self.ra, self.sr);
        let w = l.hypot(j);
        if w == 0.0 {
            return 1.0;
        }
        let k = |i: [u8; 3]| self.g(Family::Delta, &i);
        let odd =
            k([3, 0, 0]) * l.powi(3) + k([2, 1, 0]) * l * l * j + k([1, 2, 0]) * l * j * j + k([0, 3, 0]) * j.powi(3);
        let even = k([2, 0, 1]) * l * l + k([1, 1, 1]) * l * j + k([0, 2, 1]) * j * j;
        1.0 + self.modulus_slope() * w + sr * (1.0 - t) * t * t / (2.0 * ra.powi(9) * w) * (odd + even * w)
    }

    /// Coefficient of `|w|` in `k^2 - 1`: `4 R^{3/2} (t - 1) t^2 / rA^3`.
    pub fn modulus_slope(&self) -> f64 {
        4.0 * self.r * self.sr * (self.t - 1.0) * self.t * self.t / self.ra.powi(3)
    }

    /// The constant `ln(4 rA^3 / (R^{3/2} (1 - t) t^2))` accompanying `ln|w|`.
    pub fn log_constant(&self) -> f64 {
        let (r, t, ra) = (self.r, self.t, self.ra);
        (4.0 * ra.powi(3) / (r * self.sr * (1.0 - t) * t * t)).ln()
    }

    /// Coefficient of `-ln|w|` in the period: `2R / rA`.
    pub fn period_log_coefficient(&self) -> f64 {
        2.0 * self.r / self.ra
    }

    /// Reduced period `T(l, j)` through second order.
    pub fn period_series(&self, l: f64, j: f64) -> Result<f64> {
        let (r, t, ra) = (self.r, self.t, self.ra);
        let w = l.hypot(j);
        if w == 0.0 {
            return Err(Error::OriginSingular);
        }
        let h = |m: u8, n: u8| self.g(Family::H, &[m, n]);
        let hl = |m: u8, n: u8| self.g(Family::HL, &[m, n]);
        let regular = (h(1, 0) * l + h(0, 1) * j) / (4.0 * ra.powi(5))
            + self.quadratic(Family::H, l, j) / (32.0 * r * ra.powi(8));
        let log_part = -self.period_log_coefficient()
            + r * t / ra.powi(4) * (hl(1, 0) * l + hl(0, 1) * j)
            + r * t * t / (2.0 * ra.powi(9)) * self.quadratic(Family::HL, l, j);
        Ok(regular + (w.ln() - self.log_constant()) * log_part)
    }

    /// Constant term of `2 pi W`, excluding `arg(w)`.
    ///
    /// Written with `atan2` so that it is continuous through `R = 1`.
    pub fn rotation_constant(&self) -> f64 {
        let (r, t) = (self.r, self.t);
        let num = t - r * (1.0 + t) - r * r * (1.0 - 2.0 * t);
        -num.atan2((1.0 - r) * self.ra) - PI
    }

    /// Rotation number `W(l, j)` of the action branch in use, through first order.
    pub fn rotation_series(&self, l: f64, j: f64) -> Result<f64> {
        let (r, t, ra) = (self.r, self.t, self.ra);
        let w = l.hypot(j);
        if w == 0.0 {
            return Err(Error::OriginSingular);
        }
        let v = |m: u8, n: u8| self.g(Family::V, &[m, n]);
        let vl = |m: u8, n: u8| self.g(Family::VL, &[m, n]);
        let regular = (v(1, 0) * l + v(0, 1) * j) / (4.0 * ra.powi(5));
        let log_part = -self.sigma() / ra + r * (t - 1.0) * t / ra.powi(4) * (vl(1, 0) * l + vl(0, 1) * j);
        let two_pi_w =
            self.rotation_constant() + arg_lower_cut(l, j) + regular + (w.ln() - self.log_constant()) * log_part;
        Ok(two_pi_w / (2.0 * PI))
    }

    /// Expansion of `2 R_I / sqrt(P)` at fixed `p2` through second order in `(l, h)`.
    pub fn action_integrand_series(&self, l: f64, h: f64, p2: f64) -> f64 {
        let (r, t) = (self.r, self.t);
        let tables = CoefficientTables::embedded();
        let b = |i: u8, j: u8| tables.integrand_coefficient(i, j, r, t, p2).expect("integrand coefficient");
        let rb = (-r * r * (1.0 - 2.0 * t).powi(2) + 2.0 * r * (1.0 + p2 * (t - 1.0)) * t - t * t).sqrt();
        b(0, 0) / ((p2 - 2.0) * (p2 - 2.0 * r) * rb)
            + (b(1, 0) * l + b(0, 1) * h) / (p2 * (p2 - 2.0).powi(2) * rb.powi(3))
            + (b(2, 0) * l * l + b(1, 1) * l * h + b(0, 2) * h * h)
                / (p2 * p2 * (p2 - 2.0).powi(3) * (p2 - 2.0 * r) * rb.powi(5))
    }
}
