//! Quadrature and winding-number cross-checks for the closed forms.
//!
//! Nothing here reads Fourier coefficients except to evaluate the support function
//! pointwise. Curves are integrated from their literal parameterizations with the
//! composite trapezoid rule, which is spectrally accurate for smooth periodic
//! integrands.

use std::f64::consts::{PI, TAU};

use crate::curvegeom::{Hedgehog, Point2};
use crate::error::{check_order, Error, Result};

/// Smallest sample count accepted by the quadrature routines.
pub const MIN_SAMPLES: usize = 64;

/// A closed parametric curve with its derivative.
pub trait ClosedCurve {
    /// Length of the parameter interval `[0, period]`.
    fn period(&self) -> f64;
    fn position(&self, s: f64) -> Point2;
    fn velocity(&self, s: f64) -> Point2;
    /// Size of the terms summed to form a point, for roundoff-level closure tests.
    fn magnitude(&self) -> f64 {
        0.0
    }
}

/// `H(s) = h(s) u(s) + h'(s) u'(s)` evaluated literally.
#[derive(Clone, Copy, Debug)]
pub struct HedgehogCurve<'a>(pub &'a Hedgehog);

impl ClosedCurve for HedgehogCurve<'_> {
    fn period(&self) -> f64 {
        TAU
    }

    fn position(&self, s: f64) -> Point2 {
        let f = self.0.support();
        f.value(s) * Point2::unit_dir(s) + f.evaluate(s, 1) * Point2::unit_normal_rot(s)
    }

    // Product rule, deliberately unsimplified: h'u + hu' + h''u' + h'u''.
    fn velocity(&self, s: f64) -> Point2 {
        let f = self.0.support();
        let (h, dh, d2h) = (f.value(s), f.evaluate(s, 1), f.evaluate(s, 2));
        let u = Point2::unit_dir(s);
        let du = Point2::unit_normal_rot(s);
        dh * u + h * du + d2h * du + dh * (-u)
    }

    fn magnitude(&self) -> f64 {
        self.0.support().amplitude_bound()
    }
}

/// The midpoint curve `(2/k) Σ_{j=1..k} h(s + 2πj/k) u(s + 2πj/k)` from its defining
/// sum, over `[0, 2π/k]` or the `k`-fold cover `[0, 2π]`.
#[derive(Clone, Debug)]
pub struct MidpointCurve<'a> {
    parent: &'a Hedgehog,
    k: usize,
    full_turn: bool,
}

impl<'a> MidpointCurve<'a> {
    pub fn fundamental(parent: &'a Hedgehog, k: usize) -> Result<Self> {
        check_order(k)?;
        Ok(Self { parent, k, full_turn: false })
    }

    pub fn full_turn(parent: &'a Hedgehog, k: usize) -> Result<Self> {
        check_order(k)?;
        Ok(Self { parent, k, full_turn: true })
    }

    fn angles(&self, s: f64) -> impl Iterator<Item = f64> {
        let k = self.k;
        (1..=k).map(move |j| s + TAU * j as f64 / k as f64)
    }
}

impl ClosedCurve for MidpointCurve<'_> {
    fn period(&self) -> f64 {
        if self.full_turn {
            TAU
        } else {
            TAU / self.k as f64
        }
    }

    fn position(&self, s: f64) -> Point2 {
        let f = self.parent.support();
        let sum = self.angles(s).fold(Point2::ORIGIN, |acc, t| acc + f.value(t) * Point2::unit_dir(t));
        sum * (2.0 / self.k as f64)
    }

    fn velocity(&self, s: f64) -> Point2 {
        let f = self.parent.support();
        let sum = self.angles(s).fold(Point2::ORIGIN, |acc, t| {
            acc + f.evaluate(t, 1) * Point2::unit_dir(t) + f.value(t) * Point2::unit_normal_rot(t)
        });
        sum * (2.0 / self.k as f64)
    }

    fn magnitude(&self) -> f64 {
        2.0 * self.parent.support().amplitude_bound()
    }
}

fn check_samples(samples: usize) -> Result<()> {
    if samples < MIN_SAMPLES {
        return Err(Error::InvalidParameter {
            name: "samples",
            reason: format!("need at least {MIN_SAMPLES}, got {samples}"),
        });
    }
    Ok(())
}

/// Diagonal of the bounding box, a cheap stand-in for the diameter.
fn extent(points: &[Point2]) -> f64 {
    let (mut lo, mut hi) = (Point2::new(f64::INFINITY, f64::INFINITY), Point2::new(f64::NEG_INFINITY, f64::NEG_INFINITY));
    for p in points {
        lo = Point2::new(lo.x.min(p.x), lo.y.min(p.y));
        hi = Point2::new(hi.x.max(p.x), hi.y.max(p.y));
    }
    if points.is_empty() {
        0.0
    } else {
        hi.distance(lo)
    }
}

/// `samples` points at `s_i = i · period / samples`, `i = 0..samples`.
pub fn sample_curve(curve: &impl ClosedCurve, samples: usize) -> Vec<Point2> {
    let step = curve.period() / samples as f64;
    (0..samples).map(|i| curve.position(step * i as f64)).collect()
}

/// `(1/2) ∮ x dy - y dx` by the trapezoid rule on `x y' - y x'`.
///
/// Fails with an input error if the curve does not close: `|C(period) - C(0)|` above
/// `1e-6` times the extent of the samples, beyond roundoff in the curve's terms.
pub fn green_area(curve: &impl ClosedCurve, samples: usize) -> Result<f64> {
    check_samples(samples)?;
    let period = curve.period();
    let step = period / samples as f64;
    let mut points = Vec::with_capacity(samples);
    let mut sum = 0.0;
    for i in 0..samples {
        let s = step * i as f64;
        let p = curve.position(s);
        let v = curve.velocity(s);
        sum += p.cross(v);
        points.push(p);
    }
    let gap = curve.position(period).distance(points[0]);
    let size = extent(&points);
    if gap > 1e-6 * size + 1e-12 * curve.magnitude() {
        return Err(Error::Sampling(format!(
            "curve does not close: endpoint gap {gap:e} against extent {size:e}"
        )));
    }
    let area = 0.5 * sum * step;
    if !area.is_finite() {
        return Err(Error::Numerical("non-finite Green integral".into()));
    }
    Ok(area)
}

/// Shoelace area of a closed polyline; the closing edge is implied.
pub fn polygon_area(points: &[Point2]) -> f64 {
    let n = points.len();
    0.5 * (0..n).map(|i| points[i].cross(points[(i + 1) % n])).sum::<f64>()
}

/// `∫_0^{2π} f(s) ds` by the composite trapezoid rule on `samples` points.
pub fn quadrature_integral(f: impl Fn(f64) -> f64, samples: usize) -> Result<f64> {
    check_samples(samples)?;
    let step = TAU / samples as f64;
    Ok(step * (0..samples).map(|i| f(step * i as f64)).sum::<f64>())
}

/// `∫ h ds`, the algebraic length.
pub fn length_quadrature(h: &Hedgehog, samples: usize) -> Result<f64> {
    quadrature_integral(|s| h.support().value(s), samples)
}

/// `(1/π) ∫ h(s) u(s) ds`.
pub fn steiner_point_quadrature(h: &Hedgehog, samples: usize) -> Result<Point2> {
    let f = h.support();
    let x = quadrature_integral(|s| f.value(s) * s.cos(), samples)?;
    let y = quadrature_integral(|s| f.value(s) * s.sin(), samples)?;
    Ok(Point2::new(x / PI, y / PI))
}

/// `max |f|` over `samples` uniform points, without refinement.
pub fn dense_max_abs(f: impl Fn(f64) -> f64, samples: usize) -> Result<f64> {
    check_samples(samples)?;
    let step = TAU / samples as f64;
    Ok((0..samples).map(|i| f(step * i as f64).abs()).fold(0.0, f64::max))
}

fn distance_to_segment(p: Point2, a: Point2, b: Point2) -> f64 {
    let ab = b - a;
    let len2 = ab.dot(ab);
    let t = if len2 > 0.0 { ((p - a).dot(ab) / len2).clamp(0.0, 1.0) } else { 0.0 };
    p.distance(a + ab * t)
}

/// Winding number of the closed polyline `points` (closing edge implied) about `p`.
///
/// Sums the signed angles subtended by each edge. Fails with an input error if `p`
/// lies within `1e-9` times the extent of the polyline, and with a numerical error
/// if the total is more than `0.05` away from an integer.
pub fn winding_number(points: &[Point2], p: Point2) -> Result<i64> {
    if points.len() < 3 {
        return Err(Error::InvalidParameter {
            name: "points",
            reason: format!("need at least 3 vertices, got {}", points.len()),
        });
    }
    let n = points.len();
    let size = extent(points);
    let mut turning = 0.0;
    for i in 0..n {
        let (a, b) = (points[i], points[(i + 1) % n]);
        if distance_to_segment(p, a, b) <= 1e-9 * size {
            return Err(Error::InvalidParameter {
                name: "p",
                reason: format!("({}, {}) lies on the curve", p.x, p.y),
            });
        }
        let (da, db) = (a - p, b - p);
        turning += da.cross(db).atan2(da.dot(db));
    }
    let w = turning / TAU;
    let rounded = w.round();
    let off = (w - rounded).abs();
    if off > 0.05 {
        return Err(Error::Numerical(format!(
            "winding accumulation {w} is not near an integer; the curve is under-sampled"
        )));
    }
    if off > 0.01 {
        log::warn!("winding accumulation {w} is {off} from the nearest integer");
    }
    Ok(rounded as i64)
}
