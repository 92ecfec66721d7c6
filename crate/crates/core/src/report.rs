//! Serialisable reports and file formats emitted by the command line tool.
//!
//! Reports are JSON documents carrying a `schema_version`; tables are CSV with every
//! number written to 17 significant digits; polygon figures are plain SVG 1.1 shapes.

use std::fmt::Write as _;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::global::{
    height_closed_form, height_numeric, match_twisting_index, polygon_representative, privileged_map_sample,
    MomentumCloud, WeightedPolygon,
};
use crate::params::{CriticalInterval, FixedPointClass, ModelParams, ParamChart};
use crate::taylor::{closed_form, recover_coefficients, reverse_symmetry_check, TaylorInvariant};

/// Version of the JSON documents written by this crate.
pub const SCHEMA_VERSION: u32 = 1;

/// Samples of the privileged momentum map used by the invariant report.
pub const REPORT_CLOUD_POINTS: usize = 20_000;

/// Disc radius and sample count of the coefficient regression used by the invariant report.
pub const REPORT_FIT_RADIUS: f64 = 1e-2;
pub const REPORT_FIT_SAMPLES: usize = 64;

/// Twisting indices covered by the polygon list of the invariant report.
pub const REPORT_K_RANGE: (i32, i32) = (-2, 2);

/// Agreement between each closed form and its independent oracle.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Residuals {
    /// Closed-form height minus the quadrature of the volume integral.
    pub height_dual_path: f64,
    /// Largest relative difference between the regressed and closed-form Taylor coefficients.
    pub taylor_regression: f64,
    /// Difference between the series and the series of the reverse system with `l` reflected.
    pub reverse_symmetry: f64,
    /// Distance between the hull of the privileged map and the matched polygon.
    pub twisting_hull_distance: f64,
    /// Grid tolerance the hull distance is compared with.
    pub twisting_hull_tolerance: f64,
}

/// Every invariant of one parameter triple together with its verification residuals.
///
/// Outside the focus-focus regime only the classification fields are filled.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct InvariantReport {
    pub schema_version: u32,
    pub parameters: ModelParams,
    pub classification: FixedPointClass,
    pub critical_interval: CriticalInterval,
    pub n_ff: u32,
    pub chart: Option<ParamChart>,
    pub taylor: Option<TaylorInvariant>,
    pub height: Option<f64>,
    pub twisting_index: Option<i32>,
    pub polygons: Vec<WeightedPolygon>,
    pub residuals: Option<Residuals>,
}

impl InvariantReport {
    /// Report holding only the classification of the fixed point.
    pub fn classification_only(p: &ModelParams) -> Self {
        let classification = p.classify();
        InvariantReport {
            schema_version: SCHEMA_VERSION,
            parameters: *p,
            classification,
            critical_interval: p.critical_interval(),
            n_ff: classification.ff_count(),
            chart: None,
            taylor: None,
            height: None,
            twisting_index: None,
            polygons: Vec::new(),
            residuals: None,
        }
    }

    /// Computes the full report, sampling the privileged momentum map at about `cloud_points` points.
    ///
    /// Returns [`Error::OutOfFocusFocusRange`] outside the focus-focus regime; callers wanting
    /// the classification in that case use [`InvariantReport::classification_only`].
    pub fn compute(p: &ModelParams, cloud_points: usize) -> Result<Self> {
        p.require_focus_focus()?;
        let mut report = InvariantReport::classification_only(p);
        let taylor = closed_form(p)?;
        let fitted = recover_coefficients(p, REPORT_FIT_RADIUS, REPORT_FIT_SAMPLES)?;
        let height = height_closed_form(p)?;
        let matched = match_twisting_index(p, &privileged_map_sample(p, cloud_points)?)?;
        let mut polygons = Vec::new();
        for epsilon in [1, -1] {
            for k in REPORT_K_RANGE.0..=REPORT_K_RANGE.1 {
                polygons.push(polygon_representative(p, epsilon, k)?);
            }
        }
        report.residuals = Some(Residuals {
            height_dual_path: height - height_numeric(p)?,
            taylor_regression: fitted.relative_differences(&taylor).iter().fold(0.0, |a, &b| f64::max(a, b)),
            reverse_symmetry: reverse_symmetry_check(p)?.series_difference,
            twisting_hull_distance: matched.distance,
            twisting_hull_tolerance: matched.tolerance,
        });
        report.chart = Some(p.to_chart()?);
        report.taylor = Some(taylor);
        report.height = Some(height);
        report.twisting_index = Some(matched.k);
        report.polygons = polygons;
        Ok(report)
    }
}

/// A polygon representative with the parameters it belongs to.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PolygonFile {
    pub schema_version: u32,
    pub parameters: ModelParams,
    pub height: f64,
    pub polygon: WeightedPolygon,
}

impl PolygonFile {
    pub fn new(p: &ModelParams, epsilon: i8, k: i32) -> Result<Self> {
        Ok(PolygonFile {
            schema_version: SCHEMA_VERSION,
            parameters: *p,
            height: height_closed_form(p)?,
            polygon: polygon_representative(p, epsilon, k)?,
        })
    }

    /// Parses a document written by [`PolygonFile::to_json`].
    pub fn from_json(text: &str) -> Result<Self> {
        let file: PolygonFile = serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
        if file.schema_version != SCHEMA_VERSION {
            return Err(Error::Parse(format!("unsupported schema version {}", file.schema_version)));
        }
        Ok(file)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("polygon documents contain only finite numbers")
    }

    /// File name stem `polygon_eps+1_k0`.
    pub fn stem(&self) -> String {
        format!("polygon_eps{:+}_k{}", self.polygon.epsilon, self.polygon.k)
    }

    /// SVG 1.1 drawing with the polygon, the cut half-line and the focus-focus value.
    ///
    /// The view box is fixed in units of `max(R1, R2)` so that drawings of different
    /// parameters are comparable; the `y` axis points up.
    pub fn to_svg(&self) -> String {
        let scale = self.parameters.r1.max(self.parameters.r2);
        let poly = &self.polygon;
        let box_half = 4.0 * scale;
        let x0 = -box_half;
        let width = 2.0 * box_half;
        let stroke = 0.02 * scale;
        let mut svg = String::new();
        let _ = writeln!(svg, r#"<?xml version="1.0" encoding="UTF-8"?>"#);
        let _ = writeln!(
            svg,
            r#"<svg xmlns="http://www.w3.org/2000/svg" version="1.1" viewBox="{x0} {x0} {width} {width}" width="400" height="400">"#
        );
        let _ = writeln!(svg, r#"  <g transform="scale(1,-1)">"#);
        let points: Vec<String> = poly.vertices.iter().map(|v| format!("{:.6},{:.6}", v[0], v[1])).collect();
        let _ = writeln!(
            svg,
            r#"    <polygon points="{}" fill="lightsteelblue" stroke="black" stroke-width="{stroke}"/>"#,
            points.join(" ")
        );
        let end = poly.boundary_at(poly.lambda, poly.epsilon > 0).unwrap_or(0.0);
        let _ = writeln!(
            svg,
            r#"    <line x1="{:.6}" y1="0" x2="{:.6}" y2="{end:.6}" stroke="black" stroke-width="{stroke}" stroke-dasharray="{} {}"/>"#,
            poly.lambda,
            poly.lambda,
            4.0 * stroke,
            2.0 * stroke
        );
        let _ = writeln!(svg, r#"    <circle cx="{:.6}" cy="0" r="{}" fill="black"/>"#, poly.lambda, 3.0 * stroke);
        let _ = writeln!(svg, "  </g>");
        let _ = writeln!(
            svg,
            r#"  <text x="{}" y="{}" font-size="{}">epsilon = {:+}, k = {}</text>"#,
            x0 + 0.2 * scale,
            x0 + 0.5 * scale,
            0.3 * scale,
            poly.epsilon,
            poly.k
        );
        svg.push_str("</svg>\n");
        svg
    }
}

/// Number written to 17 significant digits.
pub fn csv_number(x: f64) -> String {
    if x.is_finite() {
        format!("{x:.16e}")
    } else {
        "NaN".to_string()
    }
}

/// Quantity tabulated by a parameter sweep.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SweepField {
    CL,
    CJ,
    CLL,
    CLJ,
    CJJ,
    Height,
}

impl SweepField {
    pub fn parse(name: &str) -> Result<Self> {
        Ok(match name {
            "c_l" => SweepField::CL,
            "c_j" => SweepField::CJ,
            "c_ll" => SweepField::CLL,
            "c_lj" => SweepField::CLJ,
            "c_jj" => SweepField::CJJ,
            "height" => SweepField::Height,
            other => return Err(Error::InvalidParameters(format!("unknown sweep field {other}"))),
        })
    }

    /// Value of the field at a chart point.
    pub fn eval(&self, c: &ParamChart) -> Result<f64> {
        let p = c.to_params()?;
        if let SweepField::Height = self {
            return height_closed_form(&p);
        }
        let s = closed_form(&p)?;
        Ok(match self {
            SweepField::CL => s.c_l,
            SweepField::CJ => s.c_j,
            SweepField::CLL => s.c_ll,
            SweepField::CLJ => s.c_lj,
            SweepField::CJJ => s.c_jj,
            SweepField::Height => unreachable!("handled above"),
        })
    }
}

/// Rectangular grid on the `(u, v)` chart at fixed `kappa`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SweepGrid {
    pub nu: usize,
    pub nv: usize,
    pub u: (f64, f64),
    pub v: (f64, f64),
    pub kappa: f64,
}

impl SweepGrid {
    fn axis(n: usize, (lo, hi): (f64, f64), i: usize) -> f64 {
        if n == 1 {
            lo
        } else {
            lo + (hi - lo) * i as f64 / (n - 1) as f64
        }
    }

    /// Grid points in row-major order, `v` varying fastest.
    pub fn points(&self) -> Vec<ParamChart> {
        (0..self.nu)
            .flat_map(|i| {
                (0..self.nv).map(move |j| ParamChart {
                    u: Self::axis(self.nu, self.u, i),
                    v: Self::axis(self.nv, self.v, j),
                    kappa: self.kappa,
                })
            })
            .collect()
    }
}

/// CSV table `u,v,value,reason` of a field over a chart grid; cells where the field is
/// undefined hold `NaN` and the reason.
pub fn sweep_csv(grid: &SweepGrid, field: SweepField) -> Result<String> {
    let finite = [grid.u.0, grid.u.1, grid.v.0, grid.v.1, grid.kappa].iter().all(|x| x.is_finite());
    if !finite || grid.nu == 0 || grid.nv == 0 {
        return Err(Error::InvalidParameters("sweep bounds must be finite and the grid non-empty".into()));
    }
    let points = grid.points();
    let values: Vec<Result<f64>> = points.par_iter().map(|c| field.eval(c)).collect();
    let mut out = String::from("u,v,value,reason\n");
    for (c, value) in points.iter().zip(values) {
        let (value, reason) = match value {
            Ok(x) if x.is_finite() => (x, String::new()),
            Ok(_) => (f64::NAN, "non-finite value".to_string()),
            Err(e) => (f64::NAN, e.to_string().replace(',', ";")),
        };
        let _ = writeln!(out, "{},{},{},{}", csv_number(c.u), csv_number(c.v), csv_number(value), reason);
    }
    Ok(out)
}

/// CSV table `l,h,nu2` of a momentum cloud, preceded by a comment with the skipped count.
pub fn cloud_csv(cloud: &MomentumCloud) -> String {
    let mut out = format!("# skipped singular points: {}\nl,h,nu2\n", cloud.skipped);
    for s in &cloud.samples {
        let _ = writeln!(out, "{},{},{}", csv_number(s.l), csv_number(s.h), csv_number(s.nu2));
    }
    out
}
