//! Hedgehog geometry.
//!
//! A hedgehog with support function `h` is parameterized by its normal angle:
//! `H(s) = h(s) u(s) + h'(s) u'(s)`, `u(s) = (cos s, sin s)`, `u'(s) = (-sin s, cos s)`.
//! Orientation is counterclockwise in `s`, so oriented areas follow the Green form
//! `(1/2) ∮ x dy - y dx`.
//!
//! Differentiating gives `H'(s) = ρ(s) u'(s)` with the signed radius of curvature
//! `ρ = h + h''`. Singular points are the zeros of `ρ`.
//!
//! # Cusp criterion
//!
//! A singular point of a plane curve is an ordinary cusp iff `H' = 0` and
//! `det(H'', H''') ≠ 0`. With `H' = ρ u'` and `u'' = -u`:
//!
//! ```text
//! H''  = ρ' u' - ρ u
//! H''' = (ρ'' - ρ) u' - 2ρ' u
//! ```
//!
//! At a zero of `ρ` this leaves `H'' = ρ' u'` and `H''' = ρ'' u' - 2ρ' u`, hence
//! `det(H'', H''') = -2ρ'² det(u', u) = 2ρ'²`. The determinant is nonzero exactly when
//! `ρ'(s) ≠ 0`, which is the test implemented here; no third derivatives of `H` are
//! formed.

use std::f64::consts::{PI, TAU};
use std::ops::{Add, AddAssign, Mul, Neg, Sub};

use serde::Serialize;

use crate::error::{check_order, Result};
use crate::fourier::TrigPoly;
use crate::roots::{find_zeros, global_extrema, zero_grid_size};

/// Absolute threshold on `ρ` for convexity and on `ρ'` for the cusp test.
pub const CURVATURE_TOL: f64 = 1e-9;

#[derive(Clone, Copy, Debug, Default, PartialEq, Serialize)]
pub struct Point2 {
    pub x: f64,
    pub y: f64,
}

impl Point2 {
    pub const ORIGIN: Point2 = Point2 { x: 0.0, y: 0.0 };

    pub fn new(x: f64, y: f64) -> Self {
        Self { x, y }
    }

    /// `u(s) = (cos s, sin s)`.
    pub fn unit_dir(s: f64) -> Self {
        let (sn, cs) = s.sin_cos();
        Self::new(cs, sn)
    }

    /// `u'(s) = (-sin s, cos s)`, i.e. `u(s)` turned a quarter counterclockwise.
    pub fn unit_normal_rot(s: f64) -> Self {
        let (sn, cs) = s.sin_cos();
        Self::new(-sn, cs)
    }

    /// Counterclockwise rotation about the origin.
    pub fn rotate(self, alpha: f64) -> Self {
        let (sn, cs) = alpha.sin_cos();
        Self::new(cs * self.x - sn * self.y, sn * self.x + cs * self.y)
    }

    /// Quarter turn counterclockwise: `(x, y) -> (-y, x)`.
    pub fn perp(self) -> Self {
        Self::new(-self.y, self.x)
    }

    pub fn dot(self, other: Self) -> f64 {
        self.x * other.x + self.y * other.y
    }

    pub fn cross(self, other: Self) -> f64 {
        self.x * other.y - self.y * other.x
    }

    pub fn norm(self) -> f64 {
        self.x.hypot(self.y)
    }

    pub fn distance(self, other: Self) -> f64 {
        (self - other).norm()
    }

    pub fn is_finite(self) -> bool {
        self.x.is_finite() && self.y.is_finite()
    }
}

impl Add for Point2 {
    type Output = Point2;
    fn add(self, o: Point2) -> Point2 {
        Point2::new(self.x + o.x, self.y + o.y)
    }
}

impl AddAssign for Point2 {
    fn add_assign(&mut self, o: Point2) {
        self.x += o.x;
        self.y += o.y;
    }
}

impl Sub for Point2 {
    type Output = Point2;
    fn sub(self, o: Point2) -> Point2 {
        Point2::new(self.x - o.x, self.y - o.y)
    }
}

impl Neg for Point2 {
    type Output = Point2;
    fn neg(self) -> Point2 {
        Point2::new(-self.x, -self.y)
    }
}

impl Mul<f64> for Point2 {
    type Output = Point2;
    fn mul(self, c: f64) -> Point2 {
        Point2::new(c * self.x, c * self.y)
    }
}

impl Mul<Point2> for f64 {
    type Output = Point2;
    fn mul(self, p: Point2) -> Point2 {
        p * self
    }
}

/// Disk centred at the Steiner point with radius half the absolute average width.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct SteinerDisk {
    pub center: Point2,
    pub radius: f64,
}

impl SteinerDisk {
    /// The disk as a hedgehog: support `radius + cx cos s + cy sin s`.
    pub fn as_hedgehog(&self) -> Hedgehog {
        let support = TrigPoly::constant(self.radius)
            + TrigPoly::harmonic(1, self.center.x, self.center.y);
        Hedgehog::new(support)
    }
}

/// A zero of the radius of curvature.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct SingularPoint {
    /// Normal angle in `[0, 2π)`.
    pub s: f64,
    pub location: Point2,
    pub is_cusp: bool,
}

/// Outcome of the constant-sign test on `ρ`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Convexity {
    Convex,
    Nonconvex,
    /// `ρ` keeps its sign but comes within the tolerance of zero.
    Marginal,
}

/// A point of an isogonal family and its partner on the quarter-turned hedgehog.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct IsogonalPair {
    pub point: Point2,
    pub perp: Point2,
}

/// A planar hedgehog, identified with its support function.
#[derive(Clone, Debug, PartialEq, Default)]
pub struct Hedgehog {
    support: TrigPoly,
}

impl Hedgehog {
    pub fn new(support: TrigPoly) -> Self {
        Self { support }
    }

    /// Circle of radius `r` centred at the origin.
    pub fn circle(r: f64) -> Self {
        Self::new(TrigPoly::constant(r))
    }

    pub fn support(&self) -> &TrigPoly {
        &self.support
    }

    pub fn into_support(self) -> TrigPoly {
        self.support
    }

    /// `(h cos s - h' sin s, h sin s + h' cos s)`.
    pub fn point_at(&self, s: f64) -> Point2 {
        let h = self.support.evaluate(s, 0);
        let dh = self.support.evaluate(s, 1);
        h * Point2::unit_dir(s) + dh * Point2::unit_normal_rot(s)
    }

    /// The point of the quarter-turned hedgehog paired with `point_at(s)`.
    pub fn perp_point_at(&self, s: f64) -> Point2 {
        self.point_at(s).perp()
    }

    /// Counterclockwise rotation about the origin: support `h(s - alpha)`.
    pub fn rotate(&self, alpha: f64) -> Hedgehog {
        Hedgehog::new(self.support.phase_shift(-alpha))
    }

    /// `h(s) + h(s + π)`.
    pub fn width(&self, s: f64) -> f64 {
        self.support.value(s) + self.support.value(s + PI)
    }

    /// `2 a0`.
    pub fn average_width(&self) -> f64 {
        2.0 * self.support.a0()
    }

    /// `(a1, b1)`.
    pub fn steiner_point(&self) -> Point2 {
        let (a1, b1) = self.support.coefficient(1);
        Point2::new(a1, b1)
    }

    pub fn steiner_disk(&self) -> SteinerDisk {
        SteinerDisk { center: self.steiner_point(), radius: 0.5 * self.average_width().abs() }
    }

    /// `2π a0`: the perimeter of an oval, the algebraic length of a hedgehog.
    pub fn algebraic_length(&self) -> f64 {
        TAU * self.support.a0()
    }

    /// `π a0² - (π/2) Σ_{n≥2} (n² - 1)(a_n² + b_n²)`.
    pub fn oriented_area(&self) -> f64 {
        let a0 = self.support.a0();
        let tail: f64 = self
            .support
            .harmonics()
            .iter()
            .map(|t| {
                let n = f64::from(t.n);
                (n * n - 1.0) * t.energy()
            })
            .sum();
        PI * a0 * a0 - 0.5 * PI * tail
    }

    /// `ρ(s) = h(s) + h''(s)`.
    pub fn radius_of_curvature(&self, s: f64) -> f64 {
        self.support.evaluate(s, 0) + self.support.evaluate(s, 2)
    }

    /// `ρ = h + h''` as a polynomial: coefficients scaled by `1 - n²`.
    pub fn curvature_radius_poly(&self) -> TrigPoly {
        let d2 = self.support.derivative().derivative();
        &self.support + &d2
    }

    /// True when the hedgehog collapses to a single point (`ρ ≡ 0`).
    pub fn is_point(&self) -> bool {
        self.curvature_radius_poly().is_zero()
    }

    /// Constant-sign classification of `ρ` from its global extrema.
    pub fn convexity(&self) -> Convexity {
        let rho = self.curvature_radius_poly();
        let e = global_extrema(&rho, zero_grid_size(&rho));
        if e.min > CURVATURE_TOL || e.max < -CURVATURE_TOL {
            Convexity::Convex
        } else if e.min >= -CURVATURE_TOL || e.max <= CURVATURE_TOL {
            Convexity::Marginal
        } else {
            Convexity::Nonconvex
        }
    }

    /// Marginal cases count as not convex.
    pub fn is_convex(&self) -> bool {
        self.convexity() == Convexity::Convex
    }

    /// Zeros of `ρ` in `[0, 2π)`, sorted by angle, each tagged with the cusp test
    /// `ρ' ≠ 0`. A hedgehog that is a single point has no isolated singular points
    /// and yields an empty list; see [`Hedgehog::is_point`].
    pub fn singular_points(&self) -> Result<Vec<SingularPoint>> {
        let rho = self.curvature_radius_poly();
        let zeros = find_zeros(&rho)?;
        Ok(zeros
            .into_iter()
            .map(|z| SingularPoint {
                s: z.s,
                location: self.point_at(z.s),
                is_cusp: z.sign_change && rho.evaluate(z.s, 1).abs() > CURVATURE_TOL,
            })
            .collect())
    }

    /// The pairs `(H(s + 2πj/k), H^⊥(s + 2πj/k))` for `j = 1..k`.
    pub fn isogonal_family(&self, s: f64, k: usize) -> Result<Vec<IsogonalPair>> {
        check_order(k)?;
        Ok((1..=k)
            .map(|j| {
                let t = s + TAU * j as f64 / k as f64;
                IsogonalPair { point: self.point_at(t), perp: self.perp_point_at(t) }
            })
            .collect())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn worked_example() -> Hedgehog {
        Hedgehog::new(
            TrigPoly::constant(137.0)
                + TrigPoly::cos(2, 21.0)
                + TrigPoly::sin(5, 1.0)
                + TrigPoly::cos(6, 1.0)
                + TrigPoly::sin(9, -1.0 / 3.0)
                + TrigPoly::sin(10, 1.0 / 3.0),
        )
    }

    fn close(a: Point2, b: Point2, tol: f64) -> bool {
        a.distance(b) <= tol
    }

    #[test]
    fn point_at_examples() {
        let c = Hedgehog::circle(3.0);
        assert!(close(c.point_at(PI / 2.0), Point2::new(0.0, 3.0), 1e-15));

        let h = Hedgehog::new(
            TrigPoly::constant(20.0) + TrigPoly::sin(2, 1.0) + TrigPoly::cos(3, 1.0),
        );
        // h(0) = 21, h'(0) = 2cos0 - 3sin0 = 2.
        assert!(close(h.point_at(0.0), Point2::new(21.0, 2.0), 1e-13));
        for &s in &[0.4, 2.0, 5.5] {
            assert!(close(h.point_at(s + TAU), h.point_at(s), 1e-12));
        }
    }

    #[test]
    fn perp_point_examples() {
        let h = worked_example();
        for &s in &[0.0, 1.1, 3.3] {
            let p = h.point_at(s);
            let q = h.perp_point_at(s);
            assert_eq!(q, Point2::new(-p.y, p.x));
            let back = q.perp().perp().perp();
            assert!(close(back, p, 1e-12));
            // Same point through the literal perpendicular parameterization.
            let (hv, dh) = (h.support().value(s), h.support().evaluate(s, 1));
            let (sn, cs) = s.sin_cos();
            let literal = Point2::new(-(hv * sn + dh * cs), -(-hv * cs + dh * sn));
            assert!(close(q, literal, 1e-11));
        }
        assert!(close(Hedgehog::circle(2.0).perp_point_at(0.0), Point2::new(0.0, 2.0), 1e-15));
    }

    #[test]
    fn rotate_examples() {
        let h = worked_example();
        assert_eq!(h.rotate(0.0), h);
        let full = h.rotate(TAU);
        for (x, y) in full.support().harmonics().iter().zip(h.support().harmonics()) {
            assert!((x.a - y.a).abs() < 1e-12 && (x.b - y.b).abs() < 1e-12);
        }
        assert_eq!(Hedgehog::circle(4.0).rotate(1.3), Hedgehog::circle(4.0));
        // Rotating the curve rotates its points.
        let alpha = 0.7;
        let r = h.rotate(alpha);
        for &s in &[0.2, 1.9] {
            assert!(close(r.point_at(s + alpha), h.point_at(s).rotate(alpha), 1e-10));
        }
    }

    #[test]
    fn width_examples() {
        assert!((worked_example().average_width() - 274.0).abs() < 1e-12);
        let c = Hedgehog::circle(2.5);
        assert!((c.width(0.9) - 5.0).abs() < 1e-15);
        let h = Hedgehog::new(TrigPoly::constant(7.0) + TrigPoly::cos(3, 1.0));
        assert!((h.width(0.0) - 14.0).abs() < 1e-14);
    }

    #[test]
    fn steiner_examples() {
        let h = worked_example();
        assert_eq!(h.steiner_point(), Point2::ORIGIN);
        assert_eq!(h.steiner_disk().radius, 137.0);
        let t = Hedgehog::new(TrigPoly::constant(5.0) + TrigPoly::harmonic(1, 3.0, -2.0));
        assert_eq!(t.steiner_disk(), SteinerDisk { center: Point2::new(3.0, -2.0), radius: 5.0 });
        let d = Hedgehog::new(TrigPoly::cos(2, 1.0)).steiner_disk();
        assert_eq!(d, SteinerDisk { center: Point2::ORIGIN, radius: 0.0 });
    }

    #[test]
    fn length_and_area_examples() {
        let h = worked_example();
        assert!((h.algebraic_length() / (274.0 * PI) - 1.0).abs() < 1e-14);
        assert!((h.oriented_area() / (325225.0 * PI / 18.0) - 1.0).abs() < 1e-14);
        let c = Hedgehog::circle(2.0);
        assert!((c.algebraic_length() - 4.0 * PI).abs() < 1e-14);
        assert!((c.oriented_area() - 4.0 * PI).abs() < 1e-14);
        let p = Hedgehog::new(TrigPoly::sin(5, 1.0) + TrigPoly::sin(10, 1.0 / 3.0));
        assert!((p.oriented_area() / (-35.0 * PI / 2.0) - 1.0).abs() < 1e-14);
    }

    #[test]
    fn radius_of_curvature_examples() {
        assert_eq!(Hedgehog::circle(3.0).radius_of_curvature(1.0), 3.0);
        let h = Hedgehog::new(TrigPoly::constant(5.0) + TrigPoly::cos(3, 1.0));
        for &s in &[0.0, 0.5, 2.5] {
            assert!((h.radius_of_curvature(s) - (5.0 - 8.0 * (3.0 * s).cos())).abs() < 1e-13);
        }
        // 137 + 21 + 1 from h(0); -84 - 36 from h''(0).
        assert!((worked_example().radius_of_curvature(0.0) - 39.0).abs() < 1e-12);
        let poly = worked_example().curvature_radius_poly();
        assert!((poly.value(0.77) - worked_example().radius_of_curvature(0.77)).abs() < 1e-11);
    }

    #[test]
    fn convexity_examples() {
        let oval = Hedgehog::new(
            TrigPoly::constant(20.0) + TrigPoly::sin(2, 1.0) + TrigPoly::cos(3, 1.0),
        );
        assert!(oval.is_convex());
        let hedgehog = Hedgehog::new(
            TrigPoly::constant(10.0)
                + TrigPoly::sin(2, 1.0)
                + TrigPoly::cos(3, 1.0)
                + TrigPoly::cos(6, 1.0),
        );
        assert_eq!(hedgehog.convexity(), Convexity::Nonconvex);
        assert!(Hedgehog::circle(1.0).is_convex());
        assert!(Hedgehog::circle(-1.0).is_convex());
        // ρ = 8 - 8cos3s touches zero.
        let marginal = Hedgehog::new(TrigPoly::constant(8.0) + TrigPoly::cos(3, 1.0));
        assert_eq!(marginal.convexity(), Convexity::Marginal);
        assert!(!marginal.is_convex());
    }

    #[test]
    fn singular_points_examples() {
        let h = Hedgehog::new(TrigPoly::cos(3, 1.0));
        let sp = h.singular_points().unwrap();
        assert_eq!(sp.len(), 6);
        for (m, p) in sp.iter().enumerate() {
            assert!((p.s - (PI / 6.0 + m as f64 * PI / 3.0)).abs() < 1e-12);
            assert!(p.is_cusp);
            assert!(close(p.location, h.point_at(p.s), 1e-15));
        }
        assert!(Hedgehog::circle(2.0).singular_points().unwrap().is_empty());
        let p4 = Hedgehog::new(TrigPoly::cos(4, 1.0));
        let sp = p4.singular_points().unwrap();
        assert_eq!(sp.len(), 8);
        assert!(sp.iter().all(|p| p.is_cusp));
    }

    #[test]
    fn tangential_singularity_is_not_a_cusp() {
        let marginal = Hedgehog::new(TrigPoly::constant(8.0) + TrigPoly::cos(3, 1.0));
        let sp = marginal.singular_points().unwrap();
        assert_eq!(sp.len(), 3);
        assert!(sp.iter().all(|p| !p.is_cusp));
    }

    #[test]
    fn isogonal_family_examples() {
        let c = Hedgehog::circle(2.0);
        let fam = c.isogonal_family(0.0, 4).unwrap();
        let expected = [(0.0, 2.0), (-2.0, 0.0), (0.0, -2.0), (2.0, 0.0)];
        for (pair, (x, y)) in fam.iter().zip(expected) {
            assert!(close(pair.point, Point2::new(x, y), 1e-14));
        }

        let h = Hedgehog::new(
            TrigPoly::constant(20.0) + TrigPoly::sin(2, 1.0) + TrigPoly::cos(3, 1.0),
        );
        let fam = h.isogonal_family(0.4, 3).unwrap();
        assert_eq!(fam.len(), 3);
        // Tangents H'(t) ∥ u'(t), so consecutive normals are 2π/3 apart.
        for (j, pair) in fam.iter().enumerate() {
            let t = 0.4 + TAU * (j + 1) as f64 / 3.0;
            let tangent = h.point_at(t + 1e-6) - h.point_at(t - 1e-6);
            assert!(tangent.dot(Point2::unit_dir(t)).abs() < 1e-9 * tangent.norm().max(1.0));
            assert!(close(pair.perp, pair.point.perp(), 0.0));
        }

        let shifted = h.isogonal_family(0.4 + TAU / 3.0, 3).unwrap();
        for j in 0..3 {
            assert!(close(shifted[j].point, fam[(j + 1) % 3].point, 1e-12));
        }
        assert!(h.isogonal_family(0.0, 2).is_err());
    }
}
