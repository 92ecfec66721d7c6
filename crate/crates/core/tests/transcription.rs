//! Cross-checks the coefficient data file against an independently typed copy
//! of the printed tables. Records that carry a correction in the data file are
//! compared against the documented correction of the printed value.

#![allow(unused_variables)]

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use semitoric::coefficients::{CoefficientTables, Family, Variables};

#[derive(Clone, Copy)]
struct V {
    r: f64,
    t: f64,
    ra: f64,
    sr: f64,
    p2: f64,
}

fn pw(x: f64, n: i32) -> f64 {
    x.powi(n)
}

type Printed = (&'static str, &'static [u8], fn(&V) -> f64);

fn printed() -> Vec<Printed> {
    vec![
        ("a", &[2, 0], |v: &V| {
            let V { r, t, ra, sr, p2 } = *v;
            -pw(r, 2) * (2.0 - 7.0 * t + 6.0 * pw(t, 2)) - r * (-3.0 + t) * t - pw(t, 2)
        }),
        ("a", &[1, 1], |v: &V| {
            let V { r, t, ra, sr, p2 } = *v;
            2.0 * (-1.0 + r) * ra * t
        }),
        ("a", &[0, 2], |v: &V| {
            let V { r, t, ra, sr, p2 } = *v;
            -pw(r, 2) * (2.0 - 5.0 * t + 2.0 * pw(t, 2)) - r * t * (-1.0 + 3.0 * t) + pw(t, 2)
        }),
        ("a", &[3, 0], |v: &V| {
            let V { r, t, ra, sr, p2 } = *v;
            -(-1.0 + r)
                * t
                * (pw(r, 3) * pw(-1.0 + 2.0 * t, 3)
                    + pw(r, 2) * t * (3.0 - 8.0 * t + 4.0 * pw(t, 2))
                    + r * pw(t, 2) * (-3.0 + 2.0 * t)
                    + pw(t, 3))
        }),
        ("a", &[2, 1], |v: &V| {
            let V { r, t, ra, sr, p2 } = *v;
            -r * ra * (-1.0 + t) * (pw(r, 2) * pw(1.0 - 2.0 * t, 2) + r * t * (-2.0 + 9.0 * t) + pw(t, 2))
        }),
        ("a", &[1, 2], |v: &V| {
            let V { r, t, ra, sr, p2 } = *v;
            -3.0 * (-1.0 + r)
                * t
                * (pw(r, 3) * pw(-1.0 + 2.0 * t, 3)
                    + pw(r, 2) * t * (3.0 - 8.0 * t + 4.0 * pw(t, 2))
                    + r * pw(t, 2) * (-3.0 + 2.0 * t)
                    + pw(t, 3))
        }),
        ("a", &[0, 3], |v: &V| {
            let V { r, t, ra, sr, p2 } = *v;
            ra * (pw(r, 3) * (1.0 - 3.0 * t + 4.0 * pw(t, 3))
                + pw(r, 2) * (7.0 - 9.0 * t) * pw(t, 2)
                + r * (-3.0 + t) * pw(t, 2)
                + 2.0 * pw(t, 3))
        }),
        ("b", &[0, 0], |v: &V| {
            let V { r, t, ra, sr, p2 } = *v;
            -2.0 * p2 * (pw(r, 2) * (1.0 - 2.0 * t) + r * (1.0 + p2 * (-1.0 + t) + t) - t)
        }),
        ("b", &[1, 0], |v: &V| {
            let V { r, t, ra, sr, p2 } = *v;
            2.0 * (-t + r * (-1.0 + 2.0 * t))
                * (2.0 * (-1.0 + p2) * pw(r, 2) * pw(1.0 - 2.0 * t, 2)
                    + 2.0 * (-1.0 + p2) * pw(t, 2)
                    + r * t * (4.0 - 5.0 * pw(p2, 2) * (-1.0 + t) + 2.0 * p2 * (-5.0 + 3.0 * t)))
        }),
        ("b", &[0, 1], |v: &V| {
            let V { r, t, ra, sr, p2 } = *v;
            2.0 * pw(-2.0 + p2, 2)
                * r
                * (pw(r, 2) * pw(1.0 - 2.0 * t, 2) + r * (-2.0 - 3.0 * p2 * (-1.0 + t)) * t + pw(t, 2))
        }),
        ("b", &[2, 0], |v: &V| {
            let V { r, t, ra, sr, p2 } = *v;
            2.0 * (-7.0 * pw(p2, 5) * pw(r, 2) * pw(-1.0 + t, 2) * pw(t, 2) * (-3.0 * t + r * (-2.0 + 4.0 * t))
                + 8.0
                    * r
                    * (5.0 * r * pw(t, 4) - pw(t, 5) + pw(r, 5) * pw(-1.0 + 2.0 * t, 5)
                        - pw(r, 4) * t * pw(-1.0 + 2.0 * t, 3) * (1.0 + 4.0 * t)
                        - 2.0 * pw(r, 2) * pw(t, 3) * (4.0 - 5.0 * t + 6.0 * pw(t, 2))
                        + 2.0 * pw(r, 3) * pw(t, 2) * (2.0 - 9.0 * t + 8.0 * pw(t, 2) + 4.0 * pw(t, 3)))
                + pw(p2, 4)
                    * r
                    * (-1.0 + t)
                    * t
                    * (r * (80.0 - 37.0 * t) * pw(t, 2) - 15.0 * pw(t, 3)
                        + pw(r, 2) * t * (32.0 - 13.0 * t - 60.0 * pw(t, 2))
                        + pw(r, 3) * (-13.0 + 106.0 * t - 240.0 * pw(t, 2) + 160.0 * pw(t, 3)))
                + 2.0
                    * pw(p2, 2)
                    * (r * (25.0 - 13.0 * t) * pw(t, 4) - 3.0 * pw(t, 5)
                        + 3.0 * pw(r, 6) * pw(-1.0 + 2.0 * t, 5)
                        + 3.0 * pw(r, 5) * pw(-1.0 + 2.0 * t, 3) * (1.0 - 15.0 * t + 10.0 * pw(t, 2))
                        - 3.0 * pw(r, 2) * pw(t, 3) * (16.0 - 31.0 * t + 20.0 * pw(t, 2))
                        + 2.0 * pw(r, 3) * pw(t, 2) * (8.0 - 113.0 * t + 151.0 * pw(t, 2) - 46.0 * pw(t, 3))
                        + pw(r, 4) * t * (13.0 - 82.0 * t + 72.0 * pw(t, 2) + 148.0 * pw(t, 3) - 136.0 * pw(t, 4)))
                + pw(p2, 3)
                    * (3.0 * pw(t, 5)
                        + 15.0 * r * pw(t, 4) * (-3.0 + 2.0 * t)
                        + 6.0 * pw(r, 2) * pw(t, 3) * (21.0 - 29.0 * t + 13.0 * pw(t, 2))
                        - pw(r, 5) * pw(-1.0 + 2.0 * t, 3) * (3.0 - 38.0 * t + 38.0 * pw(t, 2))
                        + 2.0 * pw(r, 3) * pw(t, 2) * (3.0 + 116.0 * t - 231.0 * pw(t, 2) + 97.0 * pw(t, 3))
                        + pw(r, 4) * t * (-33.0 + 280.0 * t - 678.0 * pw(t, 2) + 554.0 * pw(t, 3) - 108.0 * pw(t, 4)))
                - 4.0
                    * p2
                    * (r * (5.0 - 3.0 * t) * pw(t, 4) - pw(t, 5)
                        + 3.0 * pw(r, 6) * pw(-1.0 + 2.0 * t, 5)
                        + pw(r, 2) * pw(t, 3) * (-8.0 + 35.0 * t - 22.0 * pw(t, 2))
                        + pw(r, 5) * pw(-1.0 + 2.0 * t, 3) * (1.0 - 17.0 * t + 2.0 * pw(t, 2))
                        + 2.0 * pw(r, 3) * pw(t, 2) * (2.0 - 33.0 * t + 32.0 * pw(t, 2) - 11.0 * pw(t, 3))
                        + pw(r, 4) * (t + 14.0 * pw(t, 2) - 112.0 * pw(t, 3) + 198.0 * pw(t, 4) - 76.0 * pw(t, 5))))
        }),
        ("b", &[1, 1], |v: &V| {
            let V { r, t, ra, sr, p2 } = *v;
            2.0 * pw(-2.0 + p2, 3)
                * (p2 - 2.0 * r)
                * pw(r, 2)
                * (2.0 * pw(r, 3) * pw(1.0 - 2.0 * t, 4)
                    - 2.0 * (1.0 + p2 * (-1.0 + t)) * pw(t, 3)
                    - 3.0 * (2.0 + 3.0 * p2 * (-1.0 + t)) * t * pw(r - 2.0 * r * t, 2)
                    + r * pw(t, 2)
                        * (6.0 + 11.0 * (-1.0 + t) + 10.0 * pw(p2, 2) * pw(-1.0 + t, 2) - 8.0 * t + 8.0 * pw(t, 2)))
        }),
        ("b", &[0, 2], |v: &V| {
            let V { r, t, ra, sr, p2 } = *v;
            pw(-2.0 + p2, 3)
                * (p2 - 2.0 * r)
                * pw(r, 2)
                * (-(-2.0 + p2) * pw(t, 3)
                    + 2.0 * pw(r, 3) * pw(-1.0 + 2.0 * t, 3)
                    + r * pw(t, 2) * (-6.0 + p2 * (9.0 - 7.0 * t) + 5.0 * pw(p2, 2) * (-1.0 + t) + 4.0 * t)
                    - pw(r, 2) * t * (-1.0 + 2.0 * t) * (6.0 - 4.0 * t + p2 * (-8.0 + 9.0 * t)))
        }),
        ("c", &[2, 0], |v: &V| {
            let V { r, t, ra, sr, p2 } = *v;
            -3.0 * pw(r, 2) * pw(-1.0 + t, 2) * pw(t, 2) * (t + r * (-1.0 + 2.0 * t))
        }),
        ("c", &[1, 1], |v: &V| {
            let V { r, t, ra, sr, p2 } = *v;
            2.0 * pw(r, 2) * (-1.0 + t) * t * (pw(r, 2) * pw(1.0 - 2.0 * t, 2) + r * t - 2.0 * pw(t, 2))
        }),
        ("c", &[0, 2], |v: &V| {
            let V { r, t, ra, sr, p2 } = *v;
            pw(r, 2) * t * (-pw(t, 2) + r * t * (-1.0 + 3.0 * t) + pw(r, 2) * (2.0 - 5.0 * t + 2.0 * pw(t, 2)))
        }),
        ("c", &[3, 0], |v: &V| {
            let V { r, t, ra, sr, p2 } = *v;
            -5.0 * pw(r, 3)
                * pw(-1.0 + t, 3)
                * pw(t, 3)
                * (r * (3.0 - 5.0 * t) * pw(t, 2) - 2.0 * pw(t, 3)
                    + 3.0 * pw(r, 2) * pw(t, 2) * (-1.0 + 2.0 * t)
                    + pw(r, 3) * pw(-1.0 + 2.0 * t, 3))
        }),
        ("c", &[2, 1], |v: &V| {
            let V { r, t, ra, sr, p2 } = *v;
            3.0 * pw(r, 3)
                * pw(-1.0 + t, 2)
                * pw(t, 2)
                * (pw(r, 4) * pw(1.0 - 2.0 * t, 4) + 6.0 * pw(r, 3) * pw(1.0 - 2.0 * t, 2) * t - 4.0 * r * pw(t, 3)
                    + 6.0 * pw(t, 4)
                    - 3.0 * pw(r, 2) * pw(t, 2) * (3.0 - 14.0 * t + 14.0 * pw(t, 2)))
        }),
        ("c", &[1, 2], |v: &V| {
            let V { r, t, ra, sr, p2 } = *v;
            3.0 * pw(r, 3)
                * (-1.0 + t)
                * pw(t, 2)
                * (r * (3.0 - 10.0 * t) * pw(t, 3) + 3.0 * pw(t, 4) + pw(r, 4) * (-3.0 + t) * pw(-1.0 + 2.0 * t, 3)
                    - 3.0 * pw(r, 2) * pw(t, 2) * (4.0 - 12.0 * t + 7.0 * pw(t, 2))
                    + 3.0 * pw(r, 3) * t * (1.0 + t - 11.0 * pw(t, 2) + 10.0 * pw(t, 3)))
        }),
        ("c", &[0, 3], |v: &V| {
            let V { r, t, ra, sr, p2 } = *v;
            pw(r, 3)
                * pw(t, 2)
                * (2.0 * r * (3.0 - 5.0 * t) * pw(t, 3) + pw(t, 4)
                    - pw(r, 4) * pw(1.0 - 2.0 * t, 2) * (-6.0 + 4.0 * t + pw(t, 2))
                    + 3.0 * pw(r, 2) * pw(t, 2) * (-3.0 + 4.0 * t + pw(t, 2))
                    + 2.0 * pw(r, 3) * t * (-2.0 + 18.0 * t - 33.0 * pw(t, 2) + 15.0 * pw(t, 3)))
        }),
        ("d", &[1, 0, 0], |v: &V| {
            let V { r, t, ra, sr, p2 } = *v;
            r * (-r * pw(1.0 - 2.0 * t, 2) + t)
        }),
        ("d", &[0, 1, 0], |v: &V| {
            let V { r, t, ra, sr, p2 } = *v;
            r * (r - t - 2.0 * r * t)
        }),
        ("d", &[0, 0, 1], |v: &V| {
            let V { r, t, ra, sr, p2 } = *v;
            -2.0 * r * t
        }),
        ("d", &[3, 0, 0], |v: &V| {
            let V { r, t, ra, sr, p2 } = *v;
            (-1.0 + t)
                * pw(t, 2)
                * (3.0 * pw(r, 2) * pw(1.0 - 2.0 * t, 2) * t - 3.0 * r * pw(1.0 - 2.0 * t, 2) * pw(t, 2)
                    + pw(t, 3)
                    + pw(r, 3) * pw(1.0 - 2.0 * t, 2) * (-1.0 - 4.0 * t + 4.0 * pw(t, 2)))
        }),
        ("d", &[2, 1, 0], |v: &V| {
            let V { r, t, ra, sr, p2 } = *v;
            t * (-(-2.0 + t) * pw(t, 4) + r * pw(t, 3) * (-5.0 + 19.0 * t - 18.0 * pw(t, 2))
                - pw(r, 4) * pw(-1.0 + 2.0 * t, 3) * (-1.0 - 4.0 * t + 4.0 * pw(t, 2))
                + 3.0 * pw(r, 2) * pw(t, 2) * (1.0 + t - 12.0 * pw(t, 2) + 12.0 * pw(t, 3))
                + pw(r, 3) * t * (1.0 - 23.0 * t + 78.0 * pw(t, 2) - 84.0 * pw(t, 3) + 24.0 * pw(t, 4)))
        }),
        ("d", &[2, 0, 1], |v: &V| {
            let V { r, t, ra, sr, p2 } = *v;
            -2.0 * (-1.0 + t)
                * pw(t, 2)
                * (2.0 * pw(r, 3) * pw(1.0 - 2.0 * t, 2) - 3.0 * pw(r, 2) * pw(1.0 - 2.0 * t, 2) * t + pw(t, 3))
        }),
        ("d", &[1, 2, 0], |v: &V| {
            let V { r, t, ra, sr, p2 } = *v;
            t * (pw(r, 5) * pw(1.0 - 2.0 * t, 4)
                - pw(t, 4)
                - pw(r, 4) * pw(1.0 - 2.0 * t, 2) * (-2.0 - 9.0 * t + 8.0 * pw(t, 2))
                + pw(r, 2) * pw(t, 2) * (3.0 - 25.0 * t + 36.0 * pw(t, 2))
                - pw(r, 3) * t * (5.0 - 27.0 * t + 24.0 * pw(t, 2) + 12.0 * pw(t, 3))
                + r * (pw(t, 3) - 4.0 * pw(t, 4)))
        }),
        ("d", &[1, 1, 1], |v: &V| {
            let V { r, t, ra, sr, p2 } = *v;
            -2.0 * t
                * (2.0 * r * (1.0 - 2.0 * t) * pw(t, 3) + pw(t, 4)
                    - pw(r, 4) * pw(-1.0 + 2.0 * t, 3)
                    - 6.0 * pw(r, 2) * pw(t, 2) * (1.0 - 3.0 * t + 2.0 * pw(t, 2))
                    + 2.0 * pw(r, 3) * (t - 8.0 * pw(t, 3) + 8.0 * pw(t, 4)))
        }),
        ("d", &[0, 3, 0], |v: &V| {
            let V { r, t, ra, sr, p2 } = *v;
            r * t
                * (pw(t, 3)
                    + pw(r, 4) * pw(-1.0 + 2.0 * t, 3)
                    + r * pw(t, 2) * (-3.0 + 7.0 * t)
                    + pw(r, 2) * t * (3.0 - 3.0 * t - 10.0 * pw(t, 2))
                    - pw(r, 3) * (1.0 + 3.0 * t - 12.0 * pw(t, 2) + 4.0 * pw(t, 3)))
        }),
        ("d", &[0, 2, 1], |v: &V| {
            let V { r, t, ra, sr, p2 } = *v;
            2.0 * r
                * t
                * (2.0 * pw(r, 2) * (3.0 - 4.0 * t) * pw(t, 2)
                    + r * (-3.0 + t) * pw(t, 2)
                    + 2.0 * pw(t, 3)
                    + pw(r, 3) * (1.0 - 3.0 * t + 4.0 * pw(t, 3)))
        }),
        ("e", &[1, 0, 0], |v: &V| {
            let V { r, t, ra, sr, p2 } = *v;
            r * (-r * pw(1.0 - 2.0 * t, 2) + t)
        }),
        ("e", &[0, 1, 0], |v: &V| {
            let V { r, t, ra, sr, p2 } = *v;
            r * (r - t - 2.0 * r * t)
        }),
        ("e", &[0, 0, 1], |v: &V| {
            let V { r, t, ra, sr, p2 } = *v;
            2.0 * r * t
        }),
        ("e", &[3, 0, 0], |v: &V| {
            let V { r, t, ra, sr, p2 } = *v;
            (1.0 - t)
                * pw(t, 2)
                * (3.0 * pw(r, 2) * pw(1.0 - 2.0 * t, 2) * t - 3.0 * r * pw(1.0 - 2.0 * t, 2) * pw(t, 2)
                    + pw(t, 3)
                    + pw(r, 3) * pw(1.0 - 2.0 * t, 2) * (-1.0 - 4.0 * t + 4.0 * pw(t, 2)))
        }),
        ("e", &[2, 1, 0], |v: &V| {
            let V { r, t, ra, sr, p2 } = *v;
            t * ((-2.0 + t) * pw(t, 4)
                + pw(r, 4) * pw(-1.0 + 2.0 * t, 3) * (-1.0 - 4.0 * t + 4.0 * pw(t, 2))
                + r * pw(t, 3) * (5.0 - 19.0 * t + 18.0 * pw(t, 2))
                - 3.0 * pw(r, 2) * pw(t, 2) * (1.0 + t - 12.0 * pw(t, 2) + 12.0 * pw(t, 3))
                - pw(r, 3) * t * (1.0 - 23.0 * t + 78.0 * pw(t, 2) - 84.0 * pw(t, 3) + 24.0 * pw(t, 4)))
        }),
        ("e", &[2, 0, 1], |v: &V| {
            let V { r, t, ra, sr, p2 } = *v;
            -2.0 * (-1.0 + t)
                * pw(t, 2)
                * (2.0 * pw(r, 3) * pw(1.0 - 2.0 * t, 2) - 3.0 * pw(r, 2) * pw(1.0 - 2.0 * t, 2) * t + pw(t, 3))
        }),
        ("e", &[1, 2, 0], |v: &V| {
            let V { r, t, ra, sr, p2 } = *v;
            -t * (pw(r, 5) * pw(1.0 - 2.0 * t, 4)
                - pw(t, 4)
                - pw(r, 4) * pw(1.0 - 2.0 * t, 2) * (-2.0 - 9.0 * t + 8.0 * pw(t, 2))
                + pw(r, 2) * pw(t, 2) * (3.0 - 25.0 * t + 36.0 * pw(t, 2))
                - pw(r, 3) * t * (5.0 - 27.0 * t + 24.0 * pw(t, 2) + 12.0 * pw(t, 3))
                + r * (pw(t, 3) - 4.0 * pw(t, 4)))
        }),
        ("e", &[1, 1, 1], |v: &V| {
            let V { r, t, ra, sr, p2 } = *v;
            -2.0 * t
                * (2.0 * r * (1.0 - 2.0 * t) * pw(t, 3) + pw(t, 4)
                    - pw(r, 4) * pw(-1.0 + 2.0 * t, 3)
                    - 6.0 * pw(r, 2) * pw(t, 2) * (1.0 - 3.0 * t + 2.0 * pw(t, 2))
                    + 2.0 * pw(r, 3) * (t - 8.0 * pw(t, 3) + 8.0 * pw(t, 4)))
        }),
        ("e", &[0, 3, 0], |v: &V| {
            let V { r, t, ra, sr, p2 } = *v;
            r * t
                * (r * (3.0 - 7.0 * t) * pw(t, 2) - pw(t, 3) - pw(r, 4) * pw(-1.0 + 2.0 * t, 3)
                    + pw(r, 2) * t * (-3.0 + 3.0 * t + 10.0 * pw(t, 2))
                    + pw(r, 3) * (1.0 + 3.0 * t - 12.0 * pw(t, 2) + 4.0 * pw(t, 3)))
        }),
        ("e", &[0, 2, 1], |v: &V| {
            let V { r, t, ra, sr, p2 } = *v;
            2.0 * r
                * t
                * (2.0 * pw(r, 2) * (3.0 - 4.0 * t) * pw(t, 2)
                    + r * (-3.0 + t) * pw(t, 2)
                    + 2.0 * pw(t, 3)
                    + pw(r, 3) * (1.0 - 3.0 * t + 4.0 * pw(t, 3)))
        }),
        ("f", &[1, 0], |v: &V| {
            let V { r, t, ra, sr, p2 } = *v;
            -2.0 * (-1.0 + t) * t
        }),
        ("f", &[0, 1], |v: &V| {
            let V { r, t, ra, sr, p2 } = *v;
            -t + r * (-1.0 + 2.0 * t)
        }),
        ("f", &[2, 0], |v: &V| {
            let V { r, t, ra, sr, p2 } = *v;
            (-1.0 + t)
                * t
                * (2.0 * pw(r, 3) * pw(1.0 - 2.0 * t, 2) - 3.0 * pw(r, 2) * pw(1.0 - 2.0 * t, 2) * t + pw(t, 3))
        }),
        ("f", &[1, 1], |v: &V| {
            let V { r, t, ra, sr, p2 } = *v;
            2.0 * r * (1.0 - 2.0 * t) * pw(t, 3) + pw(t, 4)
                - pw(r, 4) * pw(-1.0 + 2.0 * t, 3)
                - 6.0 * pw(r, 2) * pw(t, 2) * (1.0 - 3.0 * t + 2.0 * pw(t, 2))
                + 2.0 * pw(r, 3) * (t - 8.0 * pw(t, 3) + 8.0 * pw(t, 4))
        }),
        ("f", &[0, 2], |v: &V| {
            let V { r, t, ra, sr, p2 } = *v;
            -r * (2.0 * pw(r, 2) * (3.0 - 4.0 * t) * pw(t, 2)
                + r * (-3.0 + t) * pw(t, 2)
                + 2.0 * pw(t, 3)
                + pw(r, 3) * (1.0 - 3.0 * t + 4.0 * pw(t, 3)))
        }),
        ("f", &[3, 0], |v: &V| {
            let V { r, t, ra, sr, p2 } = *v;
            -2.0 * pw(-1.0 + t, 2)
                * t
                * (-pw(r, 5) * pw(1.0 - 2.0 * t, 4)
                    + 5.0 * pw(r, 3) * pw(1.0 - 2.0 * t, 2) * pw(t, 2)
                    + 8.0 * pw(r, 4) * pw(1.0 - 2.0 * t, 2) * (-1.0 + t) * pw(t, 2)
                    - 5.0 * pw(r, 2) * pw(1.0 - 2.0 * t, 2) * pw(t, 3)
                    + pw(t, 5))
        }),
        ("f", &[2, 1], |v: &V| {
            let V { r, t, ra, sr, p2 } = *v;
            -(-1.0 + t)
                * (6.0 * r * (1.0 - 2.0 * t) * pw(t, 5) + 3.0 * pw(t, 6) + pw(r, 6) * pw(-1.0 + 2.0 * t, 5)
                    - 2.0 * pw(r, 5) * t * pw(-1.0 + 2.0 * t, 3) * (-4.0 - 3.0 * t + 6.0 * pw(t, 2))
                    - 5.0 * pw(r, 2) * pw(t, 4) * (5.0 - 16.0 * t + 12.0 * pw(t, 2))
                    + 10.0 * pw(r, 3) * pw(t, 3) * (1.0 + t - 12.0 * pw(t, 2) + 12.0 * pw(t, 3))
                    + pw(r, 4) * pw(t, 2) * (15.0 - 130.0 * t + 348.0 * pw(t, 2) - 344.0 * pw(t, 3) + 96.0 * pw(t, 4)))
        }),
        ("f", &[1, 2], |v: &V| {
            let V { r, t, ra, sr, p2 } = *v;
            -pw(t, 6) + 4.0 * r * pw(t, 5) * (-2.0 + 3.0 * t)
                - pw(r, 6) * pw(1.0 - 2.0 * t, 4) * (-3.0 + 2.0 * pw(t, 2))
                + pw(r, 2) * pw(t, 4) * (15.0 - 28.0 * t + 8.0 * pw(t, 2))
                + 2.0 * pw(r, 5) * pw(1.0 - 2.0 * t, 2) * t * (3.0 + 12.0 * t - 29.0 * pw(t, 2) + 12.0 * pw(t, 3))
                - 10.0 * pw(r, 3) * pw(t, 3) * (-1.0 + 10.0 * t - 21.0 * pw(t, 2) + 12.0 * pw(t, 3))
                + pw(r, 4) * pw(t, 2) * (-25.0 + 140.0 * t - 222.0 * pw(t, 2) + 72.0 * pw(t, 3) + 40.0 * pw(t, 4))
        }),
        ("f", &[0, 3], |v: &V| {
            let V { r, t, ra, sr, p2 } = *v;
            -2.0 * r
                * (-pw(t, 5)
                    + 3.0 * r * pw(t, 5)
                    + pw(r, 5) * pw(-1.0 + 2.0 * t, 3) * (-1.0 - t + pw(t, 2))
                    + pw(r, 2) * pw(t, 3) * (5.0 - 18.0 * t + 11.0 * pw(t, 2))
                    + pw(r, 3) * pw(t, 2) * (-5.0 + 10.0 * t + 11.0 * pw(t, 2) - 18.0 * pw(t, 3))
                    + pw(r, 4) * pw(t, 2) * (10.0 - 35.0 * t + 32.0 * pw(t, 2) - 4.0 * pw(t, 3)))
        }),
        ("h", &[1, 0], |v: &V| {
            let V { r, t, ra, sr, p2 } = *v;
            -(-1.0 + r)
                * (pw(r, 4) * pw(1.0 - 2.0 * t, 4)
                    + pw(t, 4)
                    + 4.0 * pw(r, 3) * pw(1.0 - 2.0 * t, 2) * t * (-1.0 + 3.0 * t)
                    + 4.0 * r * pw(t, 3) * (-1.0 + 3.0 * t)
                    + 2.0 * pw(r, 2) * pw(t, 2) * (3.0 - 16.0 * t + 4.0 * pw(t, 2)))
        }),
        ("h", &[0, 1], |v: &V| {
            let V { r, t, ra, sr, p2 } = *v;
            ra * (pw(t, 3)
                + pw(r, 4) * pw(-1.0 + 2.0 * t, 3)
                + r * pw(t, 2) * (-3.0 + 13.0 * t)
                + pw(r, 2) * t * (3.0 + 3.0 * t - 28.0 * pw(t, 2))
                - pw(r, 3) * (1.0 + 15.0 * t - 42.0 * pw(t, 2) + 16.0 * pw(t, 3)))
        }),
        ("h", &[2, 0], |v: &V| {
            let V { r, t, ra, sr, p2 } = *v;
            -ra * (pw(r, 8) * pw(1.0 - 2.0 * t, 6) + pw(t, 6)
                - 2.0 * pw(r, 7) * pw(1.0 - 2.0 * t, 4) * t * (3.0 + 2.0 * t)
                - 2.0 * r * pw(t, 5) * (3.0 + 2.0 * t)
                + pw(r, 2) * pw(t, 4) * (15.0 + 4.0 * t - 49.0 * pw(t, 2))
                + 2.0 * pw(r, 3) * pw(t, 3) * (-10.0 + 12.0 * t + 39.0 * pw(t, 2) + 56.0 * pw(t, 3))
                + pw(r, 4) * pw(t, 2) * (15.0 - 56.0 * t + 113.0 * pw(t, 2) - 212.0 * pw(t, 3) - 170.0 * pw(t, 4))
                + pw(r, 6)
                    * pw(1.0 - 2.0 * t, 2)
                    * (1.0 - 8.0 * t + 95.0 * pw(t, 2) - 164.0 * pw(t, 3) + 46.0 * pw(t, 4))
                + 2.0
                    * pw(r, 5)
                    * t
                    * (-3.0 + 22.0 * t - 134.0 * pw(t, 2) + 490.0 * pw(t, 3) - 698.0 * pw(t, 4) + 420.0 * pw(t, 5)))
        }),
        ("h", &[1, 1], |v: &V| {
            let V { r, t, ra, sr, p2 } = *v;
            -2.0 * (-1.0 + r)
                * (pw(t, 7) + pw(r, 8) * pw(-1.0 + 2.0 * t, 7) - r * pw(t, 6) * (7.0 + 3.0 * t)
                    + pw(r, 2) * pw(t, 5) * (21.0 - 5.0 * t - 56.0 * pw(t, 2))
                    + pw(r, 7) * pw(-1.0 + 2.0 * t, 5) * (1.0 - 15.0 * t + 4.0 * pw(t, 2))
                    + pw(r, 6) * t * pw(-1.0 + 2.0 * t, 3) * (-7.0 + 65.0 * t - 322.0 * pw(t, 2) + 224.0 * pw(t, 3))
                    + pw(r, 3) * pw(t, 4) * (-35.0 + 71.0 * t - 130.0 * pw(t, 2) + 328.0 * pw(t, 3))
                    + pw(r, 4)
                        * pw(t, 3)
                        * (35.0 - 175.0 * t + 878.0 * pw(t, 2) - 1308.0 * pw(t, 3) + 200.0 * pw(t, 4))
                    + 3.0
                        * pw(r, 5)
                        * pw(t, 2)
                        * (-7.0 + 65.0 * t - 436.0 * pw(t, 2) + 1112.0 * pw(t, 3) - 1120.0 * pw(t, 4)
                            + 464.0 * pw(t, 5)))
        }),
        ("h", &[0, 2], |v: &V| {
            let V { r, t, ra, sr, p2 } = *v;
            ra * (pw(r, 8) * pw(1.0 - 2.0 * t, 6)
                + pw(t, 6)
                + 2.0 * pw(r, 7) * pw(1.0 - 2.0 * t, 4) * t * (-7.0 + 2.0 * t)
                - 2.0 * r * pw(t, 5) * (3.0 + 2.0 * t)
                + pw(r, 2) * pw(t, 4) * (15.0 - 4.0 * t - 57.0 * pw(t, 2))
                + 2.0 * pw(r, 3) * pw(t, 3) * (-10.0 + 28.0 * t - 237.0 * pw(t, 2) + 348.0 * pw(t, 3))
                + pw(r, 4) * pw(t, 2) * (15.0 - 104.0 * t + 833.0 * pw(t, 2) - 1012.0 * pw(t, 3) - 138.0 * pw(t, 4))
                + pw(r, 6)
                    * pw(1.0 - 2.0 * t, 2)
                    * (1.0 - 16.0 * t - 329.0 * pw(t, 2) + 188.0 * pw(t, 3) + 110.0 * pw(t, 4))
                - 2.0
                    * pw(r, 5)
                    * t
                    * (3.0 - 38.0 * t + 14.0 * pw(t, 2) + 886.0 * pw(t, 3) - 1878.0 * pw(t, 4) + 884.0 * pw(t, 5)))
        }),
        ("hL", &[1, 0], |v: &V| {
            let V { r, t, ra, sr, p2 } = *v;
            (-1.0 + r) * ra * t
        }),
        ("hL", &[0, 1], |v: &V| {
            let V { r, t, ra, sr, p2 } = *v;
            pw(t, 2) + r * (t - 3.0 * pw(t, 2)) + pw(r, 2) * (-2.0 + 5.0 * t - 2.0 * pw(t, 2))
        }),
        ("hL", &[2, 0], |v: &V| {
            let V { r, t, ra, sr, p2 } = *v;
            -pw(t, 6) + 2.0 * r * pw(t, 5) * (2.0 + t)
                - pw(r, 6) * pw(-1.0 + 2.0 * t, 5)
                - pw(r, 2) * pw(t, 4) * (5.0 + 2.0 * t + 8.0 * pw(t, 2))
                + pw(r, 3) * pw(t, 4) * (13.0 - 18.0 * t + 25.0 * pw(t, 2))
                + pw(r, 5) * pw(1.0 - 2.0 * t, 2) * t * (-4.0 + 19.0 * t - 26.0 * pw(t, 2) + 17.0 * pw(t, 3))
                + pw(r, 4) * pw(t, 2) * (5.0 - 38.0 * t + 68.0 * pw(t, 2) - 34.0 * pw(t, 3) - 16.0 * pw(t, 4))
        }),
        ("hL", &[1, 1], |v: &V| {
            let V { r, t, ra, sr, p2 } = *v;
            -2.0 * (-1.0 + r)
                * ra
                * t
                * (-pw(t, 4)
                    + 2.0 * r * pw(t, 3) * (-1.0 + 3.0 * t)
                    + pw(r, 4) * pw(-1.0 + 2.0 * t, 3) * (-5.0 + 4.0 * t)
                    + 2.0 * pw(r, 2) * pw(t, 2) * (6.0 - 11.0 * t + 2.0 * pw(t, 2))
                    + 2.0 * pw(r, 3) * t * (-7.0 + 25.0 * t - 28.0 * pw(t, 2) + 12.0 * pw(t, 3)))
        }),
        ("hL", &[0, 2], |v: &V| {
            let V { r, t, ra, sr, p2 } = *v;
            -pw(ra, 2)
                * (4.0 * r * (2.0 - 3.0 * t) * pw(t, 3)
                    + pw(t, 4)
                    + 2.0 * pw(r, 2) * pw(t, 2) * (-6.0 + 8.0 * t + pw(t, 2))
                    - pw(r, 4) * pw(1.0 - 2.0 * t, 2) * (-7.0 + 4.0 * t + 2.0 * pw(t, 2))
                    + pw(r, 3) * t * (-4.0 + 43.0 * t - 82.0 * pw(t, 2) + 39.0 * pw(t, 3)))
        }),
        ("u", &[2, 0], |v: &V| {
            let V { r, t, ra, sr, p2 } = *v;
            -r * (-3.0 + t) * t - pw(t, 2) - pw(r, 2) * (2.0 - 7.0 * t + 6.0 * pw(t, 2))
        }),
        ("u", &[1, 1], |v: &V| {
            let V { r, t, ra, sr, p2 } = *v;
            2.0 * (-1.0 + r) * ra * t
        }),
        ("u", &[0, 2], |v: &V| {
            let V { r, t, ra, sr, p2 } = *v;
            pw(t, 2) + r * (t - 3.0 * pw(t, 2)) + pw(r, 2) * (-2.0 + 5.0 * t - 2.0 * pw(t, 2))
        }),
        ("u", &[6, 0], |v: &V| {
            let V { r, t, ra, sr, p2 } = *v;
            pw(r * (-3.0 + t) * t + pw(t, 2) + pw(r, 2) * (2.0 - 7.0 * t + 6.0 * pw(t, 2)), 2)
        }),
        ("u", &[5, 1], |v: &V| {
            let V { r, t, ra, sr, p2 } = *v;
            4.0 * ra * pw(t, 2) * (pw(r, 3) * (1.0 - 2.0 * t) + t + 3.0 * pw(r, 2) * t - r * (1.0 + 2.0 * t))
        }),
        ("u", &[4, 2], |v: &V| {
            let V { r, t, ra, sr, p2 } = *v;
            -6.0 * pw(t, 2)
                * (pw(r, 3) * (6.0 - 10.0 * t) + pw(r, 4) * pw(1.0 - 2.0 * t, 2) + pw(t, 2) - 2.0 * r * t * (1.0 + t)
                    + pw(r, 2) * (1.0 + 5.0 * pw(t, 2)))
        }),
        ("u", &[3, 3], |v: &V| {
            let V { r, t, ra, sr, p2 } = *v;
            4.0 * (-1.0 + r)
                * ra
                * t
                * (pw(t, 2) + r * t * (-7.0 + 5.0 * t) + pw(r, 2) * (6.0 - 19.0 * t + 14.0 * pw(t, 2)))
        }),
        ("u", &[2, 4], |v: &V| {
            let V { r, t, ra, sr, p2 } = *v;
            pw(t, 4)
                + 2.0 * r * pw(t, 3) * (-7.0 + 5.0 * t)
                + pw(r, 4) * pw(1.0 - 2.0 * t, 2) * (-12.0 + 12.0 * t + pw(t, 2))
                + pw(r, 2) * pw(t, 2) * (13.0 - 12.0 * t + 5.0 * pw(t, 2))
                - 2.0 * pw(r, 3) * t * (-6.0 + 69.0 * t - 127.0 * pw(t, 2) + 66.0 * pw(t, 3))
        }),
        ("u", &[1, 5], |v: &V| {
            let V { r, t, ra, sr, p2 } = *v;
            24.0 * (-1.0 + r) * r * ra * (-1.0 + t) * t * (t + r * (-1.0 + 2.0 * t))
        }),
        ("u", &[0, 6], |v: &V| {
            let V { r, t, ra, sr, p2 } = *v;
            8.0 * r
                * (-1.0 + t)
                * (pw(r, 2) * (7.0 - 9.0 * t) * pw(t, 2)
                    + r * (-3.0 + t) * pw(t, 2)
                    + 2.0 * pw(t, 3)
                    + pw(r, 3) * (1.0 - 3.0 * t + 4.0 * pw(t, 3)))
        }),
        ("alpha", &[1, 0, 0], |v: &V| {
            let V { r, t, ra, sr, p2 } = *v;
            ra
        }),
        ("alpha", &[0, 1, 0], |v: &V| {
            let V { r, t, ra, sr, p2 } = *v;
            r - t - 2.0 * r * t
        }),
        ("alpha", &[0, 0, 1], |v: &V| {
            let V { r, t, ra, sr, p2 } = *v;
            -2.0 * sr * t
        }),
        ("alpha", &[3, 0, 0], |v: &V| {
            let V { r, t, ra, sr, p2 } = *v;
            0.0
        }),
        ("alpha", &[2, 1, 0], |v: &V| {
            let V { r, t, ra, sr, p2 } = *v;
            t * (pw(t, 3)
                + pw(r, 4) * pw(-1.0 + 2.0 * t, 3)
                + r * pw(t, 2) * (-3.0 + 5.0 * t)
                + pw(r, 2) * t * (3.0 - 5.0 * t - 4.0 * pw(t, 2))
                + pw(r, 3) * (-1.0 + t + 2.0 * pw(t, 2)))
        }),
        ("alpha", &[1, 2, 0], |v: &V| {
            let V { r, t, ra, sr, p2 } = *v;
            (-1.0 + r) * ra * t * pw(t + r * (-1.0 + 2.0 * t), 2)
        }),
        ("alpha", &[0, 3, 0], |v: &V| {
            let V { r, t, ra, sr, p2 } = *v;
            0.0
        }),
        ("alpha", &[2, 0, 1], |v: &V| {
            let V { r, t, ra, sr, p2 } = *v;
            sr * pw(t, 2)
                * (pw(r, 2) * (1.0 - 2.0 * t) + pw(r, 3) * pw(1.0 - 2.0 * t, 2) + r * (-2.0 + t) * t + pw(t, 2))
        }),
        ("alpha", &[1, 1, 1], |v: &V| {
            let V { r, t, ra, sr, p2 } = *v;
            2.0 * (-1.0 + r) * sr * ra * pw(t, 2) * (t + r * (-1.0 + 2.0 * t))
        }),
        ("alpha", &[0, 2, 1], |v: &V| {
            let V { r, t, ra, sr, p2 } = *v;
            sr * pw(t, 2)
                * (3.0 * pw(r, 3) * pw(1.0 - 2.0 * t, 2)
                    + 3.0 * r * (-2.0 + t) * t
                    + 3.0 * pw(t, 2)
                    + pw(r, 2) * (3.0 + 2.0 * t - 8.0 * pw(t, 2)))
        }),
        ("beta", &[1, 0, 0], |v: &V| {
            let V { r, t, ra, sr, p2 } = *v;
            ra
        }),
        ("beta", &[0, 1, 0], |v: &V| {
            let V { r, t, ra, sr, p2 } = *v;
            r - t - 2.0 * r * t
        }),
        ("beta", &[0, 0, 1], |v: &V| {
            let V { r, t, ra, sr, p2 } = *v;
            2.0 * sr * t
        }),
        ("beta", &[3, 0, 0], |v: &V| {
            let V { r, t, ra, sr, p2 } = *v;
            0.0
        }),
        ("beta", &[2, 1, 0], |v: &V| {
            let V { r, t, ra, sr, p2 } = *v;
            t * (r * (3.0 - 5.0 * t) * pw(t, 2)
                - pw(t, 3)
                - pw(r, 4) * pw(-1.0 + 2.0 * t, 3)
                - pw(r, 3) * (-1.0 + t + 2.0 * pw(t, 2))
                + pw(r, 2) * t * (-3.0 + 5.0 * t + 4.0 * pw(t, 2)))
        }),
        ("beta", &[1, 2, 0], |v: &V| {
            let V { r, t, ra, sr, p2 } = *v;
            -(-1.0 + r) * ra * t * pw(t + r * (-1.0 + 2.0 * t), 2)
        }),
        ("beta", &[0, 3, 0], |v: &V| {
            let V { r, t, ra, sr, p2 } = *v;
            0.0
        }),
        ("beta", &[2, 0, 1], |v: &V| {
            let V { r, t, ra, sr, p2 } = *v;
            sr * pw(t, 2)
                * (pw(r, 2) * (1.0 - 2.0 * t) + pw(r, 3) * pw(1.0 - 2.0 * t, 2) + r * (-2.0 + t) * t + pw(t, 2))
        }),
        ("beta", &[1, 1, 1], |v: &V| {
            let V { r, t, ra, sr, p2 } = *v;
            2.0 * (-1.0 + r) * sr * ra * pw(t, 2) * (t + r * (-1.0 + 2.0 * t))
        }),
        ("beta", &[0, 2, 1], |v: &V| {
            let V { r, t, ra, sr, p2 } = *v;
            sr * pw(t, 2)
                * (3.0 * pw(r, 3) * pw(1.0 - 2.0 * t, 2)
                    + 3.0 * r * (-2.0 + t) * t
                    + 3.0 * pw(t, 2)
                    + pw(r, 2) * (3.0 + 2.0 * t - 8.0 * pw(t, 2)))
        }),
        ("gamma", &[1, 0], |v: &V| {
            let V { r, t, ra, sr, p2 } = *v;
            ra * (-r + t)
        }),
        ("gamma", &[0, 1], |v: &V| {
            let V { r, t, ra, sr, p2 } = *v;
            pw(r, 2) - 2.0 * pw(r, 2) * t + (-1.0 + 2.0 * r) * pw(t, 2)
        }),
        ("gamma", &[2, 0], |v: &V| {
            let V { r, t, ra, sr, p2 } = *v;
            t * (pw(r, 3) * pw(1.0 - 2.0 * t, 2) * (-5.0 + t) * t + pw(t, 4) - r * pw(t, 3) * (3.0 + t)
                + pw(r, 4) * pw(1.0 - 2.0 * t, 2) * (2.0 - 5.0 * t + 4.0 * pw(t, 2))
                + pw(r, 2) * pw(t, 2) * (5.0 - 7.0 * t + 8.0 * pw(t, 2)))
        }),
        ("gamma", &[1, 1], |v: &V| {
            let V { r, t, ra, sr, p2 } = *v;
            -2.0 * (-1.0 + r)
                * ra
                * pw(t, 2)
                * (2.0 * r * (-2.0 + t) * t + pw(t, 2) + pw(r, 2) * (3.0 - 10.0 * t + 8.0 * pw(t, 2)))
        }),
        ("gamma", &[0, 2], |v: &V| {
            let V { r, t, ra, sr, p2 } = *v;
            t * (r * (7.0 - 3.0 * t) * pw(t, 3) - pw(t, 4)
                + pw(r, 2) * pw(t, 2) * (-9.0 + 11.0 * t - 8.0 * pw(t, 2))
                + pw(r, 3) * t * (1.0 + 15.0 * t - 40.0 * pw(t, 2) + 28.0 * pw(t, 3))
                + pw(r, 4) * (2.0 - 7.0 * t + 20.0 * pw(t, 3) - 16.0 * pw(t, 4)))
        }),
        ("gamma", &[3, 0], |v: &V| {
            let V { r, t, ra, sr, p2 } = *v;
            (-1.0 + r)
                * t
                * (-pw(t, 5)
                    + pw(r, 5) * pw(1.0 - 2.0 * t, 4) * (-3.0 + 2.0 * t)
                    + r * pw(t, 4) * (1.0 + 2.0 * t)
                    + 2.0 * pw(r, 2) * pw(t, 3) * (3.0 - 8.0 * t + 4.0 * pw(t, 2))
                    + pw(r, 4) * pw(1.0 - 2.0 * t, 2) * t * (11.0 - 20.0 * t + 12.0 * pw(t, 2))
                    + 2.0 * pw(r, 3) * pw(t, 2) * (-7.0 + 26.0 * t - 28.0 * pw(t, 2) + 8.0 * pw(t, 3)))
        }),
        ("gamma", &[2, 1], |v: &V| {
            let V { r, t, ra, sr, p2 } = *v;
            r * ra
                * (-1.0 + t)
                * (-pw(t, 4) - 3.0 * r * pw(t, 4)
                    + pw(r, 4) * (-3.0 + 2.0 * t) * pw(-1.0 + 2.0 * t, 3)
                    + 2.0 * pw(r, 2) * pw(t, 2) * (3.0 - 22.0 * t + 23.0 * pw(t, 2))
                    + pw(r, 3) * t * (-8.0 + 67.0 * t - 142.0 * pw(t, 2) + 80.0 * pw(t, 3)))
        }),
        ("gamma", &[1, 2], |v: &V| {
            let V { r, t, ra, sr, p2 } = *v;
            (-1.0 + r)
                * t
                * (-3.0 * pw(t, 5)
                    + pw(r, 5) * pw(1.0 - 2.0 * t, 4) * (-13.0 + 10.0 * t)
                    + r * pw(t, 4) * (-1.0 + 10.0 * t)
                    + 2.0 * pw(r, 2) * pw(t, 3) * (17.0 - 48.0 * t + 28.0 * pw(t, 2))
                    + pw(r, 4) * pw(1.0 - 2.0 * t, 2) * t * (49.0 - 108.0 * t + 68.0 * pw(t, 2))
                    + 2.0 * pw(r, 3) * pw(t, 2) * (-33.0 + 138.0 * t - 148.0 * pw(t, 2) + 40.0 * pw(t, 3)))
        }),
        ("gamma", &[0, 3], |v: &V| {
            let V { r, t, ra, sr, p2 } = *v;
            -ra * (-2.0 * pw(t, 5)
                + r * pw(t, 4) * (-5.0 + 11.0 * t)
                + pw(r, 5) * pw(-1.0 + 2.0 * t, 3) * (-3.0 - 5.0 * t + 6.0 * pw(t, 2))
                + pw(r, 2) * pw(t, 3) * (24.0 - 75.0 * t + 47.0 * pw(t, 2))
                + 2.0 * pw(r, 3) * pw(t, 2) * (-11.0 + 21.0 * t + 23.0 * pw(t, 2) - 35.0 * pw(t, 3))
                + pw(r, 4) * t * (2.0 + 35.0 * t - 141.0 * pw(t, 2) + 142.0 * pw(t, 3) - 32.0 * pw(t, 4)))
        }),
        ("delta", &[3, 0, 0], |v: &V| {
            let V { r, t, ra, sr, p2 } = *v;
            0.0
        }),
        ("delta", &[2, 1, 0], |v: &V| {
            let V { r, t, ra, sr, p2 } = *v;
            ra * (r * (5.0 - 13.0 * t) * pw(t, 4) - pw(t, 5) - pw(r, 6) * pw(-1.0 + 2.0 * t, 5)
                + pw(r, 5) * pw(-1.0 + 2.0 * t, 3) * (-1.0 - 15.0 * t + 8.0 * pw(t, 2))
                + pw(r, 2) * pw(t, 3) * (-10.0 + 27.0 * t + 24.0 * pw(t, 2))
                - 2.0 * pw(r, 3) * pw(t, 2) * (-5.0 + 2.0 * t + 17.0 * pw(t, 2) + 18.0 * pw(t, 3))
                + pw(r, 4) * t * (-5.0 - 20.0 * t + 106.0 * pw(t, 2) - 144.0 * pw(t, 3) + 104.0 * pw(t, 4)))
        }),
        ("delta", &[1, 2, 0], |v: &V| {
            let V { r, t, ra, sr, p2 } = *v;
            (-1.0 + r) * pw(ra, 4) * (pw(r, 2) * pw(1.0 - 2.0 * t, 2) + pw(t, 2) + 2.0 * r * t * (-1.0 + 6.0 * t))
        }),
        ("delta", &[0, 3, 0], |v: &V| {
            let V { r, t, ra, sr, p2 } = *v;
            0.0
        }),
        ("delta", &[2, 0, 1], |v: &V| {
            let V { r, t, ra, sr, p2 } = *v;
            16.0 * pw(r, 2) * sr * pw(ra, 3) * (-1.0 + t) * pw(t, 2)
        }),
        ("delta", &[1, 1, 1], |v: &V| {
            let V { r, t, ra, sr, p2 } = *v;
            0.0
        }),
        ("delta", &[0, 2, 1], |v: &V| {
            let V { r, t, ra, sr, p2 } = *v;
            -16.0 * pw(r, 2) * sr * pw(ra, 3) * (-1.0 + t) * pw(t, 2)
        }),
        ("v", &[1, 0], |v: &V| {
            let V { r, t, ra, sr, p2 } = *v;
            pw(t, 4) * (1.0 + 2.0 * t) + r * pw(t, 3) * (-4.0 + 13.0 * t - 21.0 * pw(t, 2))
                - pw(r, 4) * pw(-1.0 + 2.0 * t, 3) * (1.0 - 9.0 * t + 5.0 * pw(t, 2))
                + pw(r, 2) * pw(t, 2) * (6.0 - 47.0 * t + 61.0 * pw(t, 2) - 2.0 * pw(t, 3))
                + pw(r, 3) * t * (-4.0 + 47.0 * t - 143.0 * pw(t, 2) + 172.0 * pw(t, 3) - 84.0 * pw(t, 4))
        }),
        ("v", &[0, 1], |v: &V| {
            let V { r, t, ra, sr, p2 } = *v;
            ra * (pw(t, 3)
                + r * pw(t, 2) * (-3.0 + 25.0 * t - 25.0 * pw(t, 2))
                + pw(r, 3) * pw(1.0 - 2.0 * t, 2) * (-1.0 - 9.0 * t + 9.0 * pw(t, 2))
                + pw(r, 2) * t * (3.0 - 20.0 * t + 20.0 * pw(t, 2)))
        }),
        ("vL", &[1, 0], |v: &V| {
            let V { r, t, ra, sr, p2 } = *v;
            ra * (2.0 * t + r * (-1.0 + 2.0 * t))
        }),
        ("vL", &[0, 1], |v: &V| {
            let V { r, t, ra, sr, p2 } = *v;
            pw(r, 2) * pw(1.0 - 2.0 * t, 2) + r * t - 2.0 * pw(t, 2)
        }),
        ("mu", &[1, 0], |v: &V| {
            let V { r, t, ra, sr, p2 } = *v;
            (t + r * (-1.0 + 2.0 * t))
                * (pw(t, 3)
                    + pw(r, 4) * pw(-1.0 + 2.0 * t, 3)
                    + r * pw(t, 2) * (-3.0 + 5.0 * t)
                    + 3.0 * pw(r, 2) * t * (1.0 - 7.0 * t + 4.0 * pw(t, 2))
                    + pw(r, 3) * (-1.0 + 17.0 * t - 46.0 * pw(t, 2) + 32.0 * pw(t, 3)))
        }),
        ("mu", &[0, 1], |v: &V| {
            let V { r, t, ra, sr, p2 } = *v;
            (-1.0 + r)
                * ra
                * (pw(t, 3)
                    + pw(r, 3) * pw(-1.0 + 2.0 * t, 3)
                    + r * pw(t, 2) * (-3.0 + 14.0 * t)
                    + pw(r, 2) * t * (3.0 - 20.0 * t + 28.0 * pw(t, 2)))
        }),
        ("kappa", &[1, 0], |v: &V| {
            let V { r, t, ra, sr, p2 } = *v;
            (-1.0 + r) * ra * (pw(r, 2) * pw(1.0 - 2.0 * t, 2) + pw(t, 2) + 2.0 * r * t * (-1.0 + 6.0 * t))
        }),
        ("kappa", &[0, 1], |v: &V| {
            let V { r, t, ra, sr, p2 } = *v;
            pw(t, 3)
                + pw(r, 4) * pw(-1.0 + 2.0 * t, 3)
                + r * pw(t, 2) * (-3.0 + 13.0 * t)
                + pw(r, 2) * t * (3.0 + 3.0 * t - 28.0 * pw(t, 2))
                - pw(r, 3) * (1.0 + 15.0 * t - 42.0 * pw(t, 2) + 16.0 * pw(t, 3))
        }),
        ("kappa", &[2, 0], |v: &V| {
            let V { r, t, ra, sr, p2 } = *v;
            -pw(r, 8) * pw(1.0 - 2.0 * t, 6) + 6.0 * pw(r, 7) * pw(1.0 - 2.0 * t, 4) * t + 6.0 * r * pw(t, 5) - pw(t, 6)
                + 3.0 * pw(r, 2) * pw(t, 4) * (-5.0 + 4.0 * t + 3.0 * pw(t, 2))
                + 2.0 * pw(r, 3) * pw(t, 3) * (10.0 - 24.0 * t + 9.0 * pw(t, 2) - 26.0 * pw(t, 3))
                - 3.0 * pw(r, 4) * pw(t, 2) * (5.0 - 24.0 * t + 59.0 * pw(t, 2) - 76.0 * pw(t, 3) + 2.0 * pw(t, 4))
                - pw(r, 6)
                    * pw(1.0 - 2.0 * t, 2)
                    * (1.0 - 8.0 * t + 87.0 * pw(t, 2) - 148.0 * pw(t, 3) + 62.0 * pw(t, 4))
                + 2.0
                    * pw(r, 5)
                    * t
                    * (3.0 - 24.0 * t + 134.0 * pw(t, 2) - 438.0 * pw(t, 3) + 570.0 * pw(t, 4) - 276.0 * pw(t, 5))
        }),
        ("kappa", &[1, 1], |v: &V| {
            let V { r, t, ra, sr, p2 } = *v;
            2.0 * (-1.0 + r)
                * ra
                * (r * (-5.0 + t) * pw(t, 4)
                    + pw(t, 5)
                    + pw(r, 6) * pw(-1.0 + 2.0 * t, 5)
                    + pw(r, 2) * pw(t, 3) * (10.0 - 15.0 * t - 16.0 * pw(t, 2))
                    + pw(r, 5) * pw(-1.0 + 2.0 * t, 3) * (1.0 - 9.0 * t + 4.0 * pw(t, 2))
                    + 2.0 * pw(r, 3) * pw(t, 2) * (-5.0 + 20.0 * t - 99.0 * pw(t, 2) + 108.0 * pw(t, 3))
                    + pw(r, 4) * t * (5.0 - 40.0 * t + 274.0 * pw(t, 2) - 596.0 * pw(t, 3) + 336.0 * pw(t, 4)))
        }),
        ("kappa", &[0, 2], |v: &V| {
            let V { r, t, ra, sr, p2 } = *v;
            pw(r, 8) * pw(1.0 - 2.0 * t, 6) - 6.0 * pw(r, 7) * pw(1.0 - 2.0 * t, 4) * t - 6.0 * r * pw(t, 5)
                + pw(t, 6)
                + pw(r, 2) * pw(t, 4) * (15.0 - 12.0 * t - 17.0 * pw(t, 2))
                + 2.0 * pw(r, 3) * pw(t, 3) * (-10.0 + 24.0 * t - 177.0 * pw(t, 2) + 210.0 * pw(t, 3))
                + 3.0 * pw(r, 4) * pw(t, 2) * (5.0 - 24.0 * t + 195.0 * pw(t, 2) - 236.0 * pw(t, 3) + 10.0 * pw(t, 4))
                + pw(r, 6)
                    * pw(1.0 - 2.0 * t, 2)
                    * (1.0 - 8.0 * t - 201.0 * pw(t, 2) + 76.0 * pw(t, 3) + 118.0 * pw(t, 4))
                - 2.0
                    * pw(r, 5)
                    * t
                    * (3.0 - 24.0 * t + 22.0 * pw(t, 2) + 570.0 * pw(t, 3) - 1278.0 * pw(t, 4) + 660.0 * pw(t, 5))
        }),
    ]
}

fn lookup(table: &[Printed], family: &str, index: &[u8]) -> fn(&V) -> f64 {
    table.iter().find(|(f, i, _)| *f == family && *i == index).map(|e| e.2).expect("printed entry")
}

/// Value the data file should hold, given the printed table.
fn expected(table: &[Printed], family: &str, index: &[u8], v: &V) -> f64 {
    let p = |f: &str, i: &[u8]| lookup(table, f, i)(v);
    match (family, index) {
        ("alpha" | "beta" | "delta", [3, 0, 0]) => p(family, &[1, 2, 0]),
        ("alpha" | "beta" | "delta", [0, 3, 0]) => p(family, &[2, 1, 0]),
        ("delta", [2, 0, 1]) => -p(family, index),
        ("b", [0, 1]) => -p(family, index),
        ("b", [1, 1]) => {
            let prefactor = 2.0 * pw(v.p2 - 2.0, 3) * (v.p2 - 2.0 * v.r) * v.r * v.r;
            p(family, index) + prefactor * v.r * v.t * v.t * 11.0 * (v.t - 1.0) * (v.p2 - 1.0)
        }
        ("mu", [1, 0]) => -p(family, index),
        _ => p(family, index),
    }
}

#[test]
fn data_file_matches_printed_tables() {
    let table = printed();
    let tables = CoefficientTables::embedded();
    assert_eq!(table.len(), tables.records().len());
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    for _ in 0..3 {
        let v = V {
            r: rng.gen_range(0.3..3.0),
            t: rng.gen_range(0.1..0.9),
            ra: rng.gen_range(0.2..1.5),
            sr: rng.gen_range(0.5..2.0),
            p2: rng.gen_range(-1.0..3.0),
        };
        let vars = Variables { r: v.r, t: v.t, ra: v.ra, sr: v.sr, p2: v.p2 };
        for rec in tables.records() {
            let name = rec.family.name();
            let want = expected(&table, name, &rec.index, &v);
            let got = rec.expr.eval(&vars);
            assert!(
                (got - want).abs() <= 1e-12 * want.abs().max(1.0),
                "{name} {:?}: data {got} vs printed {want}",
                rec.index
            );
        }
    }
}

#[test]
fn every_printed_entry_has_a_record() {
    let tables = CoefficientTables::embedded();
    for (family, index, _) in printed() {
        let f: Family = family.parse().unwrap();
        assert!(tables.expr(f, index).is_some(), "{family} {index:?}");
    }
}
