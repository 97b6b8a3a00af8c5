//! Zeros and global extrema of trigonometric polynomials on one period.
//!
//! Both searches start from a uniform grid over `[0, 2π)`. A trig polynomial of
//! degree `d` has at most `2d` zeros and `2d` local extrema per period, so a grid of
//! `max(4096, 64 d)` points brackets every simple zero at the degrees used here.

use std::f64::consts::TAU;

use crate::error::{Error, Result};
use crate::fourier::TrigPoly;

/// Absolute threshold below which `|f|` at a grid-local minimum counts as a
/// tangential (even-order) zero.
pub const TANGENTIAL_ZERO_TOL: f64 = 1e-9;

/// Bisection stops once the bracket is narrower than this.
const BISECTION_WIDTH: f64 = 1e-13;

/// Golden-section refinement stops once the bracket is narrower than this.
const GOLDEN_WIDTH: f64 = 1e-12;

const INV_PHI: f64 = 0.618_033_988_749_894_9;

/// A zero of a trigonometric polynomial in `[0, 2π)`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Zero {
    pub s: f64,
    /// False for tangential zeros found without a sign change.
    pub sign_change: bool,
}

/// Grid size used for zero finding: `max(4096, 64 · degree)`.
pub fn zero_grid_size(f: &TrigPoly) -> usize {
    4096.max(64 * f.degree() as usize)
}

/// Grid size used for sup-norm searches: `4096 · max(1, degree)`.
pub fn extremum_grid_size(f: &TrigPoly) -> usize {
    4096 * (f.degree().max(1) as usize)
}

fn wrap(s: f64) -> f64 {
    let r = s.rem_euclid(TAU);
    if r >= TAU {
        0.0
    } else {
        r
    }
}

/// All zeros of `f` on `[0, 2π)`, sorted by angle.
///
/// The identically zero polynomial has no isolated zeros and yields an empty list;
/// constant nonzero polynomials likewise.
pub fn find_zeros(f: &TrigPoly) -> Result<Vec<Zero>> {
    if f.harmonics().is_empty() {
        return Ok(Vec::new());
    }
    let n = zero_grid_size(f);
    let step = TAU / n as f64;
    let values = f.sample_uniform(n, 0);
    let scale = f.amplitude_bound().max(1.0);
    let mut zeros = Vec::new();

    for i in 0..n {
        let v = values[i];
        let next = values[(i + 1) % n];
        let lo = step * i as f64;
        if v == 0.0 {
            zeros.push(Zero { s: lo, sign_change: f.evaluate(lo, 1) != 0.0 });
        } else if v * next < 0.0 {
            let s = refine_sign_change(f, lo, lo + step, v)?;
            if f.value(s).abs() > 1e-8 * scale {
                return Err(Error::RootRefinement { lo, hi: lo + step });
            }
            zeros.push(Zero { s: wrap(s), sign_change: true });
        } else {
            let prev = values[(i + n - 1) % n];
            let is_local_min = v.abs() <= prev.abs() && v.abs() < next.abs();
            let same_sign = v * prev > 0.0 && v * next > 0.0;
            if is_local_min && same_sign {
                let (s, m) = golden_minimize(|t| f.value(t).abs(), lo - step, lo + step);
                if m < TANGENTIAL_ZERO_TOL {
                    zeros.push(Zero { s: wrap(s), sign_change: false });
                }
            }
        }
    }

    zeros.sort_by(|a, b| a.s.total_cmp(&b.s));
    zeros.dedup_by(|b, a| (b.s - a.s).abs() < 1e-9);
    if zeros.len() > 1 {
        let (first, last) = (zeros[0].s, zeros[zeros.len() - 1].s);
        if TAU - last + first < 1e-9 {
            zeros.pop();
        }
    }
    Ok(zeros)
}

/// Bisection on a sign-change bracket followed by one Newton step, kept only if it
/// stays inside the final bracket.
fn refine_sign_change(f: &TrigPoly, mut lo: f64, mut hi: f64, f_lo: f64) -> Result<f64> {
    let mut sign_lo = f_lo.signum();
    let (lo0, hi0) = (lo, hi);
    for _ in 0..200 {
        if hi - lo < BISECTION_WIDTH {
            break;
        }
        let mid = 0.5 * (lo + hi);
        let fm = f.value(mid);
        if fm == 0.0 {
            return Ok(mid);
        }
        if fm.signum() == sign_lo {
            lo = mid;
            sign_lo = fm.signum();
        } else {
            hi = mid;
        }
    }
    if hi - lo >= BISECTION_WIDTH {
        return Err(Error::RootRefinement { lo: lo0, hi: hi0 });
    }
    let mid = 0.5 * (lo + hi);
    let d = f.evaluate(mid, 1);
    if d != 0.0 {
        let polished = mid - f.value(mid) / d;
        if polished >= lo && polished <= hi {
            return Ok(polished);
        }
    }
    Ok(mid)
}

/// Golden-section search for the minimum of a unimodal `g` on `[lo, hi]`.
pub fn golden_minimize(g: impl Fn(f64) -> f64, mut lo: f64, mut hi: f64) -> (f64, f64) {
    let mut x1 = hi - INV_PHI * (hi - lo);
    let mut x2 = lo + INV_PHI * (hi - lo);
    let (mut g1, mut g2) = (g(x1), g(x2));
    while hi - lo > GOLDEN_WIDTH {
        if g1 <= g2 {
            hi = x2;
            x2 = x1;
            g2 = g1;
            x1 = hi - INV_PHI * (hi - lo);
            g1 = g(x1);
        } else {
            lo = x1;
            x1 = x2;
            g1 = g2;
            x2 = lo + INV_PHI * (hi - lo);
            g2 = g(x2);
        }
    }
    let s = 0.5 * (lo + hi);
    let candidates = [(x1, g1), (x2, g2), (s, g(s))];
    candidates
        .into_iter()
        .min_by(|a, b| a.1.total_cmp(&b.1))
        .expect("non-empty")
}

/// Global maximum of `g` sampled as `values` on the uniform grid, refined by golden
/// section around every grid-local maximum. Returns `(s, value)`.
fn refine_grid_maximum(values: &[f64], g: impl Fn(f64) -> f64) -> (f64, f64) {
    let n = values.len();
    let step = TAU / n as f64;
    let mut best = (0.0, f64::NEG_INFINITY);
    for i in 0..n {
        let v = values[i];
        if v > best.1 {
            best = (step * i as f64, v);
        }
        let prev = values[(i + n - 1) % n];
        let next = values[(i + 1) % n];
        if v >= prev && v > next {
            let centre = step * i as f64;
            let (s, m) = golden_minimize(|t| -g(t), centre - step, centre + step);
            if -m > best.1 {
                best = (wrap(s), -m);
            }
        }
    }
    best
}

/// Global minimum and maximum of `f` over one period.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Extrema {
    pub min: f64,
    pub argmin: f64,
    pub max: f64,
    pub argmax: f64,
}

/// Global extrema of `f` from a grid of `grid` points plus golden-section refinement.
pub fn global_extrema(f: &TrigPoly, grid: usize) -> Extrema {
    if f.harmonics().is_empty() {
        return Extrema { min: f.a0(), argmin: 0.0, max: f.a0(), argmax: 0.0 };
    }
    let values = f.sample_uniform(grid, 0);
    let (argmax, max) = refine_grid_maximum(&values, |t| f.value(t));
    let negated: Vec<f64> = values.iter().map(|v| -v).collect();
    let (argmin, neg_min) = refine_grid_maximum(&negated, |t| -f.value(t));
    Extrema { min: -neg_min, argmin, max, argmax }
}

/// `max_s |f(s)|` with its location.
pub fn max_abs(f: &TrigPoly, grid: usize) -> (f64, f64) {
    if f.harmonics().is_empty() {
        return (0.0, f.a0().abs());
    }
    let values: Vec<f64> = f.sample_uniform(grid, 0).into_iter().map(f64::abs).collect();
    refine_grid_maximum(&values, |t| f.value(t).abs())
}
