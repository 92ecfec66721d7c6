//! Complete elliptic integrals of the first, second and third kind,
//! Heuman's lambda function, and logarithmic expansions near `k = 1`.
//!
//! Complete integrals of the first and second kind use the arithmetic-geometric
//! mean. Incomplete integrals use Carlson's symmetric forms. The third kind is
//! evaluated in the two circular regimes through Heuman's lambda function.

use std::f64::consts::{FRAC_PI_2, PI};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::quadrature::{tanh_sinh, Tolerance};

/// Below this value of `1 - k^2` the logarithmic expansions replace the AGM.
pub const NEAR_ONE_THRESHOLD: f64 = 1e-6;

/// An elliptic modulus stored as `k^2` together with its complement `1 - k^2`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct EllipticModulus {
    pub k2: f64,
    pub kp2: f64,
}

impl EllipticModulus {
    /// Modulus from `k^2`; requires `0 <= k^2 <= 1`.
    pub fn from_k2(k2: f64) -> Result<Self> {
        if !(0.0..=1.0).contains(&k2) {
            return Err(Error::ModulusOutOfRange(k2));
        }
        Ok(Self { k2, kp2: 1.0 - k2 })
    }

    /// Modulus from the complement `k'^2 = 1 - k^2`, avoiding cancellation when `k` is near one.
    pub fn from_kp2(kp2: f64) -> Result<Self> {
        if !(0.0..=1.0).contains(&kp2) {
            return Err(Error::ModulusOutOfRange(1.0 - kp2));
        }
        Ok(Self { k2: 1.0 - kp2, kp2 })
    }

    /// The complementary modulus `k'`.
    pub fn complement(&self) -> Self {
        Self { k2: self.kp2, kp2: self.k2 }
    }

    pub fn k(&self) -> f64 {
        self.k2.sqrt()
    }
}

/// The two circular regimes of the characteristic.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum CircularRegime {
    /// `k^2 < n < 1`.
    Positive,
    /// `n < 0`.
    Negative,
}

/// Characteristic `n` of the third-kind integral, with `1 - n` and `n - k^2`
/// stored separately so callers can supply them without cancellation.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Characteristic {
    pub n: f64,
    pub one_minus_n: f64,
    pub n_minus_k2: f64,
    pub regime: CircularRegime,
}

impl Characteristic {
    /// Characteristic from `n` alone.
    pub fn new(n: f64, m: EllipticModulus) -> Result<Self> {
        Self::from_parts(n, 1.0 - n, n - m.k2)
    }

    /// Characteristic from independently computed `n`, `1 - n` and `n - k^2`.
    pub fn from_parts(n: f64, one_minus_n: f64, n_minus_k2: f64) -> Result<Self> {
        let k2 = n - n_minus_k2;
        let regime = if n < 0.0 {
            CircularRegime::Negative
        } else if n_minus_k2 > 0.0 && one_minus_n > 0.0 {
            CircularRegime::Positive
        } else {
            return Err(Error::RegimeViolation { n, k2 });
        };
        Ok(Self { n, one_minus_n, n_minus_k2, regime })
    }
}

/// Arithmetic-geometric mean of two non-negative numbers.
pub fn agm(mut a: f64, mut b: f64) -> f64 {
    for _ in 0..64 {
        let an = 0.5 * (a + b);
        let bn = (a * b).sqrt();
        if (an - bn).abs() <= 1e-15 * an {
            return 0.5 * (an + bn);
        }
        a = an;
        b = bn;
    }
    a
}

/// `K(k)`: AGM away from `k = 1`, logarithmic expansion below [`NEAR_ONE_THRESHOLD`].
pub fn complete_k(m: EllipticModulus) -> Result<f64> {
    if m.kp2 <= 0.0 {
        return Err(Error::ModulusOutOfRange(m.k2));
    }
    if m.kp2 < NEAR_ONE_THRESHOLD {
        Ok(complete_k_near_one(m.kp2))
    } else {
        Ok(complete_k_agm(m))
    }
}

/// `K(k) = pi / (2 AGM(1, k'))`.
pub fn complete_k_agm(m: EllipticModulus) -> f64 {
    FRAC_PI_2 / agm(1.0, m.kp2.sqrt())
}

/// Logarithmic expansion of `K` in `x = k^2 - 1` through cubic order.
pub fn complete_k_near_one(kp2: f64) -> f64 {
    let x = -kp2;
    let lg = (kp2 / 16.0).ln();
    0.25 * x - 21.0 / 128.0 * x * x
        + 185.0 / 1536.0 * x * x * x
        + lg * (-0.5 + x / 8.0 - 9.0 / 128.0 * x * x + 25.0 / 512.0 * x * x * x)
}

/// `E(k)` by the AGM with the Gauss sum; `E(1) = 1`.
pub fn complete_e(m: EllipticModulus) -> f64 {
    if m.kp2 <= 0.0 {
        return 1.0;
    }
    let mut a = 1.0;
    let mut b = m.kp2.sqrt();
    let mut sum = 0.5 * m.k2;
    let mut pow = 0.5;
    for _ in 0..64 {
        let c = 0.5 * (a - b);
        let an = 0.5 * (a + b);
        b = (a * b).sqrt();
        a = an;
        pow *= 2.0;
        sum += pow * c * c;
        if c.abs() <= 1e-16 * a {
            break;
        }
    }
    FRAC_PI_2 / a * (1.0 - sum)
}

/// Carlson's symmetric integral `R_F(x, y, z)`.
pub fn carlson_rf(x: f64, y: f64, z: f64) -> f64 {
    let (mut x, mut y, mut z) = (x, y, z);
    for _ in 0..100 {
        let mu = (x + y + z) / 3.0;
        let dx = 1.0 - x / mu;
        let dy = 1.0 - y / mu;
        let dz = 1.0 - z / mu;
        if dx.abs().max(dy.abs()).max(dz.abs()) < 1e-4 {
            let e2 = dx * dy - dz * dz;
            let e3 = dx * dy * dz;
            return (1.0 - e2 / 10.0 + e3 / 14.0 + e2 * e2 / 24.0 - 3.0 * e2 * e3 / 44.0) / mu.sqrt();
        }
        let (sx, sy, sz) = (x.sqrt(), y.sqrt(), z.sqrt());
        let lambda = sx * (sy + sz) + sy * sz;
        x = 0.25 * (x + lambda);
        y = 0.25 * (y + lambda);
        z = 0.25 * (z + lambda);
    }
    1.0 / ((x + y + z) / 3.0).sqrt()
}

/// Carlson's symmetric integral `R_D(x, y, z)`.
pub fn carlson_rd(x: f64, y: f64, z: f64) -> f64 {
    let (mut x, mut y, mut z) = (x, y, z);
    let mut sum = 0.0;
    let mut fac = 1.0;
    for _ in 0..100 {
        let mu = (x + y + 3.0 * z) / 5.0;
        let dx = 1.0 - x / mu;
        let dy = 1.0 - y / mu;
        let dz = 1.0 - z / mu;
        if dx.abs().max(dy.abs()).max(dz.abs()) < 1e-4 {
            let ea = dx * dy;
            let eb = dz * dz;
            let ec = ea - eb;
            let ed = ea - 6.0 * eb;
            let ee = ed + ec + ec;
            let s = 1.0
                + ed * (-3.0 / 14.0 + 9.0 / 88.0 * ed - 4.5 / 26.0 * dz * ee)
                + dz * (ee / 6.0 + dz * (-9.0 / 22.0 * ec + dz * 3.0 / 26.0 * ea));
            return 3.0 * sum + fac * s / (mu * mu.sqrt());
        }
        let (sx, sy, sz) = (x.sqrt(), y.sqrt(), z.sqrt());
        let lambda = sx * (sy + sz) + sy * sz;
        sum += fac / (sz * (z + lambda));
        fac *= 0.25;
        x = 0.25 * (x + lambda);
        y = 0.25 * (y + lambda);
        z = 0.25 * (z + lambda);
    }
    3.0 * sum + fac / (((x + y + 3.0 * z) / 5.0).powf(1.5))
}

/// Incomplete integral of the first kind `F(phi, k)` with `m = k^2`, `0 <= phi <= pi/2`.
pub fn incomplete_f(phi: f64, m: f64) -> f64 {
    let (s, c) = phi.sin_cos();
    s * carlson_rf(c * c, 1.0 - m * s * s, 1.0)
}

/// Incomplete integral of the second kind `E(phi, k)` with `m = k^2`, `0 <= phi <= pi/2`.
pub fn incomplete_e(phi: f64, m: f64) -> f64 {
    let (s, c) = phi.sin_cos();
    let y = 1.0 - m * s * s;
    s * carlson_rf(c * c, y, 1.0) - m * s * s * s / 3.0 * carlson_rd(c * c, y, 1.0)
}

/// `F(phi, k) - E(phi, k)` without cancellation.
fn incomplete_f_minus_e(phi: f64, m: f64) -> f64 {
    let (s, c) = phi.sin_cos();
    m * s * s * s / 3.0 * carlson_rd(c * c, 1.0 - m * s * s, 1.0)
}

/// Heuman's lambda function
/// `Lambda0 = (2/pi)(E(k) F(theta, k') + K(k) E(theta, k') - K(k) F(theta, k'))`.
pub fn heuman_lambda(theta: f64, m: EllipticModulus) -> Result<f64> {
    if m.kp2 <= 0.0 {
        return Err(Error::ModulusOutOfRange(m.k2));
    }
    if m.kp2 < NEAR_ONE_THRESHOLD {
        return Ok(heuman_lambda_near_one(theta, m.kp2));
    }
    Ok(heuman_lambda_definition(theta, m))
}

/// Heuman's lambda by its defining combination of complete and incomplete integrals.
pub fn heuman_lambda_definition(theta: f64, m: EllipticModulus) -> f64 {
    let k = complete_k_agm(m);
    let e = complete_e(m);
    let f = incomplete_f(theta, m.kp2);
    2.0 / PI * (e * f - k * incomplete_f_minus_e(theta, m.kp2))
}

/// Logarithmic expansion of Heuman's lambda in `x = k^2 - 1` through quadratic order.
pub fn heuman_lambda_near_one(theta: f64, kp2: f64) -> f64 {
    let x = -kp2;
    let (s, c) = theta.sin_cos();
    let s2 = s * s;
    let lg = (kp2 / 16.0).ln();
    2.0 / PI * theta
        + s * c * (x / (2.0 * PI) - (13.0 / (32.0 * PI) + 3.0 * s2 / (16.0 * PI)) * x * x)
        + s * c * lg * (x / (2.0 * PI) - (3.0 / (16.0 * PI) + s2 / (8.0 * PI)) * x * x)
}

/// Complete integral of the third kind `Pi(n, k)` in the circular regimes, via Heuman's lambda.
///
/// Positive regime: `Pi = K + (pi/2) sqrt(n / ((1-n)(n-k^2))) (1 - Lambda0(theta))` with
/// `theta = arcsin sqrt((1-n)/(1-k^2))`. Negative regime: `Pi = K/(1-n) + (same term)` with
/// `theta = arcsin(1/sqrt(1-n))`.
pub fn complete_pi(n: Characteristic, m: EllipticModulus) -> Result<f64> {
    let k = complete_k(m)?;
    let pref = FRAC_PI_2 * (n.n / (n.one_minus_n * n.n_minus_k2)).sqrt();
    match n.regime {
        CircularRegime::Positive => {
            let theta = (n.one_minus_n / m.kp2).sqrt().min(1.0).asin();
            Ok(k + pref * (1.0 - heuman_lambda(theta, m)?))
        }
        CircularRegime::Negative => {
            let theta = (1.0 / n.one_minus_n.sqrt()).min(1.0).asin();
            Ok(k / n.one_minus_n + pref * (1.0 - heuman_lambda(theta, m)?))
        }
    }
}

/// `K(k)` by tanh-sinh quadrature of `int_0^1 dt / sqrt((1-t^2)(1-k^2 t^2))`.
pub fn complete_k_quadrature(m: EllipticModulus) -> Result<f64> {
    let tol = Tolerance { abs: 1e-14, rel: 1e-14, max_level: 14 };
    tanh_sinh(|t, _, db| 1.0 / ((db * (2.0 - db)) * (1.0 - m.k2 * t * t)).sqrt(), 0.0, 1.0, tol).map(|q| q.value)
}

/// `E(k)` by tanh-sinh quadrature of `int_0^{pi/2} sqrt(1 - k^2 sin^2 phi) dphi`.
pub fn complete_e_quadrature(m: EllipticModulus) -> Result<f64> {
    let tol = Tolerance { abs: 1e-14, rel: 1e-14, max_level: 14 };
    tanh_sinh(|phi, _, _| (1.0 - m.k2 * phi.sin().powi(2)).sqrt(), 0.0, FRAC_PI_2, tol).map(|q| q.value)
}

/// `Pi(n, k)` by tanh-sinh quadrature of `int_0^{pi/2} dphi / ((1 - n sin^2) sqrt(1 - k^2 sin^2))`.
pub fn complete_pi_quadrature(n: f64, m: EllipticModulus) -> Result<f64> {
    let tol = Tolerance { abs: 1e-13, rel: 1e-13, max_level: 16 };
    tanh_sinh(
        |phi, _, _| {
            let s2 = phi.sin().powi(2);
            1.0 / ((1.0 - n * s2) * (1.0 - m.k2 * s2).sqrt())
        },
        0.0,
        FRAC_PI_2,
        tol,
    )
    .map(|q| q.value)
}
