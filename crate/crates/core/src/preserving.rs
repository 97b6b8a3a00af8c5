//! kth order preserving sets.
//!
//! For a hedgehog with support `h` and `k ≥ 3`, the preserving set `P_k` is the
//! hedgehog with support `h_k = (1/k) Σ_j h(s + 2πj/k) - a0`, which keeps exactly the
//! harmonics with `k | n`, `n > 1`. It is built from isogonal families as
//!
//! ```text
//! P_k(s) = (1/k) Σ_{j=1..k} rot(H(s + 2πj/k), -2πj/k) - a0 · u(s)
//! ```
//!
//! Both routes are implemented; [`preserving_from_isogonal`] is the geometric one.
//!
//! `P_k + D` (with `D` the Steiner disk) has support `A_k[h] + a1 cos s + b1 sin s`,
//! while the k-central symmetral has support `A_k[h]`. The two agree only when the
//! Steiner point is at the origin.

use std::f64::consts::{PI, TAU};

use crate::curvegeom::{Hedgehog, Point2, SingularPoint};
use crate::error::{check_order, Result};

/// The kth order preserving set of a hedgehog.
#[derive(Clone, Debug, PartialEq)]
pub struct PreservingSet {
    k: usize,
    parent: Hedgehog,
    hedgehog: Hedgehog,
}

impl PreservingSet {
    pub fn new(parent: &Hedgehog, k: usize) -> Result<Self> {
        check_order(k)?;
        let kk = k as u32;
        let support = parent.support().filter_indices(|n| n % kk == 0 && n > 1, false);
        Ok(Self { k, parent: parent.clone(), hedgehog: Hedgehog::new(support) })
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn parent(&self) -> &Hedgehog {
        &self.parent
    }

    /// `P_k` as a hedgehog with support `h_k`.
    pub fn as_hedgehog(&self) -> &Hedgehog {
        &self.hedgehog
    }

    /// True when `h_k ≡ 0`, i.e. `P_k` is the origin.
    pub fn is_degenerate(&self) -> bool {
        self.hedgehog.support().is_zero()
    }

    /// `P_k(s) = h_k(s) u(s) + h_k'(s) u'(s)`.
    pub fn point_at(&self, s: f64) -> Point2 {
        self.hedgehog.point_at(s)
    }

    /// `(π/2) Σ_{k|n, n>1} (1 - n²)(a_n² + b_n²)`, from the parent's coefficients.
    pub fn oriented_area(&self) -> f64 {
        let k = self.k as u32;
        let sum: f64 = self
            .parent
            .support()
            .harmonics()
            .iter()
            .filter(|t| t.n % k == 0 && t.n > 1)
            .map(|t| {
                let n = f64::from(t.n);
                (1.0 - n * n) * t.energy()
            })
            .sum();
        0.5 * PI * sum
    }

    /// Signed radius of curvature `h_k + h_k''` at `s`.
    pub fn curvature(&self, s: f64) -> f64 {
        self.hedgehog.radius_of_curvature(s)
    }

    /// The same radius as the isogonal mean of the parent's radii minus `w̄/2`.
    pub fn curvature_from_isogonal(&self, s: f64) -> f64 {
        let k = self.k as f64;
        let mean = (1..=self.k)
            .map(|j| self.parent.radius_of_curvature(s + TAU * j as f64 / k))
            .sum::<f64>()
            / k;
        mean - 0.5 * self.parent.average_width()
    }

    /// Singular points of `P_k`. Their number is divisible by `k` whenever they are
    /// finitely many and all simple; a miscount is a debug assertion and a warning
    /// in release builds.
    pub fn singularities(&self) -> Result<Vec<SingularPoint>> {
        let points = self.hedgehog.singular_points()?;
        if !points.is_empty() && points.iter().all(|p| p.is_cusp) && points.len() % self.k != 0 {
            let msg = format!(
                "preserving set of order {} has {} cusps, not a multiple of the order",
                self.k,
                points.len()
            );
            debug_assert!(false, "{msg}");
            log::warn!("{msg}");
        }
        Ok(points)
    }
}

/// The literal isogonal-family construction of `P_k` at parameter `s`.
///
/// Sums `cos(2πj/k) p_j - sin(2πj/k) p_j^⊥` over `p_j = H(s + 2πj/k)`, `j = 1..k`, and
/// subtracts `(w̄/2) u(s)`. The normal `u(s)` belongs to `p_k = H(s + 2π)`, the
/// member whose rotation angle is a full turn; this is the phase that makes the
/// sum coincide with `P_k(s)`.
pub fn preserving_from_isogonal(h: &Hedgehog, k: usize, s: f64) -> Result<Point2> {
    let family = h.isogonal_family(s, k)?;
    let mut acc = Point2::ORIGIN;
    for (idx, pair) in family.iter().enumerate() {
        let angle = TAU * (idx + 1) as f64 / k as f64;
        let (sn, cs) = angle.sin_cos();
        acc += cs * pair.point - sn * pair.perp;
    }
    Ok(acc * (1.0 / k as f64) - 0.5 * h.average_width() * Point2::unit_dir(s))
}

/// `(1/k)(C + rot(C, 2π/k) + … + rot(C, 2π(k-1)/k))`, support `A_k[h]`.
pub fn k_central_symmetral(h: &Hedgehog, k: usize) -> Result<Hedgehog> {
    Ok(Hedgehog::new(h.support().directional_average(k)?))
}

/// Minkowski sum: support functions add.
pub fn minkowski_sum(a: &Hedgehog, b: &Hedgehog) -> Hedgehog {
    Hedgehog::new(a.support() + b.support())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fourier::TrigPoly;

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

    fn figure_two() -> Hedgehog {
        Hedgehog::new(
            TrigPoly::constant(30.0)
                + TrigPoly::sin(2, 1.0)
                + TrigPoly::cos(3, 1.0)
                + TrigPoly::cos(4, 1.0),
        )
    }

    #[test]
    fn preserving_support_examples() {
        let p5 = PreservingSet::new(&worked_example(), 5).unwrap();
        assert_eq!(
            p5.as_hedgehog().support(),
            &(TrigPoly::sin(5, 1.0) + TrigPoly::sin(10, 1.0 / 3.0))
        );
        let p3 = PreservingSet::new(&figure_two(), 3).unwrap();
        assert_eq!(p3.as_hedgehog().support(), &TrigPoly::cos(3, 1.0));
        let none = Hedgehog::new(TrigPoly::constant(4.0) + TrigPoly::cos(2, 1.0));
        let p = PreservingSet::new(&none, 5).unwrap();
        assert!(p.is_degenerate());
        assert_eq!(p.point_at(1.0), Point2::ORIGIN);
        assert!(PreservingSet::new(&none, 2).is_err());
    }

    #[test]
    fn preserving_support_matches_average_minus_half_width() {
        let h = worked_example();
        let p5 = PreservingSet::new(&h, 5).unwrap();
        for i in 0..25 {
            let s = 0.25 * i as f64;
            let avg: f64 = (0..5).map(|j| h.support().value(s + TAU * j as f64 / 5.0)).sum::<f64>() / 5.0;
            let expected = avg - 0.5 * h.average_width();
            assert!((p5.as_hedgehog().support().value(s) - expected).abs() < 1e-11);
        }
    }

    #[test]
    fn preserving_point_examples() {
        let p3 = PreservingSet::new(&figure_two(), 3).unwrap();
        assert!(p3.point_at(0.0).distance(Point2::new(1.0, 0.0)) < 1e-15);
        // P(s + 2π/k) is P(s) rotated by 2π/k.
        let p5 = PreservingSet::new(&worked_example(), 5).unwrap();
        for &s in &[0.1, 0.9, 2.2] {
            let lhs = p5.point_at(s + TAU / 5.0);
            let rhs = p5.point_at(s).rotate(TAU / 5.0);
            assert!(lhs.distance(rhs) < 1e-12);
        }
    }

    #[test]
    fn isogonal_route_matches_closed_form() {
        let circle = Hedgehog::circle(3.0);
        for k in 3..7 {
            assert!(preserving_from_isogonal(&circle, k, 0.8).unwrap().norm() < 1e-13);
        }
        let h = worked_example();
        let p5 = PreservingSet::new(&h, 5).unwrap();
        for i in 0..40 {
            let s = 0.16 * i as f64;
            let geometric = preserving_from_isogonal(&h, 5, s).unwrap();
            assert!(geometric.distance(p5.point_at(s)) < 1e-9, "s = {s}");
        }
        for k in 3..8u32 {
            let h = Hedgehog::new(TrigPoly::constant(11.0) + TrigPoly::cos(k, 1.0));
            let p = PreservingSet::new(&h, k as usize).unwrap();
            for i in 0..100 {
                let s = 0.0629 * i as f64;
                let geometric = preserving_from_isogonal(&h, k as usize, s).unwrap();
                assert!(geometric.distance(p.point_at(s)) < 1e-10);
                // |P_k(s)| = |(cos ks, -k sin ks)|
                let ks = f64::from(k) * s;
                let expected = ks.cos().hypot(f64::from(k) * ks.sin());
                assert!((geometric.norm() - expected).abs() < 1e-10);
            }
        }
    }

    #[test]
    fn oriented_area_examples() {
        let p5 = PreservingSet::new(&worked_example(), 5).unwrap();
        assert!((p5.oriented_area() / (-35.0 * PI / 2.0) - 1.0).abs() < 1e-14);
        let p3 = PreservingSet::new(&figure_two(), 3).unwrap();
        assert!((p3.oriented_area() + 4.0 * PI).abs() < 1e-13);
        let p7 = PreservingSet::new(&figure_two(), 7).unwrap();
        assert_eq!(p7.oriented_area(), 0.0);
        assert!((p3.oriented_area() - p3.as_hedgehog().oriented_area()).abs() < 1e-13);
    }

    #[test]
    fn curvature_examples() {
        for k in 3..7 {
            let p = PreservingSet::new(&Hedgehog::circle(2.0), k).unwrap();
            for &s in &[0.0, 1.0] {
                assert_eq!(p.curvature(s), 0.0);
                assert!(p.curvature_from_isogonal(s).abs() < 1e-13);
            }
        }
        let p3 = PreservingSet::new(&figure_two(), 3).unwrap();
        assert!((p3.curvature(0.0) + 8.0).abs() < 1e-13);
        for i in 0..30 {
            let s = 0.2 * i as f64;
            assert!((p3.curvature(s) - p3.curvature_from_isogonal(s)).abs() < 1e-11);
        }
    }

    #[test]
    fn singularity_criterion_mean_radius() {
        let h = worked_example();
        let p5 = PreservingSet::new(&h, 5).unwrap();
        for sp in p5.singularities().unwrap() {
            let mean: f64 =
                (1..=5).map(|j| h.radius_of_curvature(sp.s + TAU * j as f64 / 5.0)).sum::<f64>() / 5.0;
            assert!((mean - 0.5 * h.average_width()).abs() < 1e-9);
        }
    }

    #[test]
    fn cusp_counts() {
        let p3 = PreservingSet::new(&figure_two(), 3).unwrap();
        let c3 = p3.singularities().unwrap();
        assert_eq!(c3.len(), 6);
        assert!(c3.iter().all(|p| p.is_cusp));
        let p4 = PreservingSet::new(&figure_two(), 4).unwrap();
        assert_eq!(p4.singularities().unwrap().len(), 8);

        let singular = Hedgehog::new(
            TrigPoly::constant(10.0)
                + TrigPoly::sin(2, 1.0)
                + TrigPoly::cos(3, 1.0)
                + TrigPoly::cos(6, 1.0),
        );
        let p = PreservingSet::new(&singular, 3).unwrap();
        let zeros = p.singularities().unwrap();
        // ρ = -8cos3s - 35cos6s: 70c² + 8c - 35 = 0 in c = cos 3s has two roots
        // inside (-1, 1), each hit six times per period.
        assert_eq!(zeros.len(), 12);
        assert_eq!(zeros.len() % 3, 0);
    }

    #[test]
    fn symmetral_examples() {
        let h = worked_example();
        let s5 = k_central_symmetral(&h, 5).unwrap();
        assert_eq!(
            s5.support(),
            &(TrigPoly::constant(137.0) + TrigPoly::sin(5, 1.0) + TrigPoly::sin(10, 1.0 / 3.0))
        );
        let c = Hedgehog::circle(2.0);
        assert_eq!(k_central_symmetral(&c, 4).unwrap(), c);

        // Steiner point at the origin: symmetral = P_k + Steiner disk.
        let p5 = PreservingSet::new(&h, 5).unwrap();
        let sum = minkowski_sum(p5.as_hedgehog(), &h.steiner_disk().as_hedgehog());
        assert_eq!(sum, s5);

        // Literal Minkowski average of rotated copies.
        let rotated = (0..5).fold(TrigPoly::zero(), |acc, j| {
            &acc + h.rotate(TAU * j as f64 / 5.0).support()
        });
        let avg = rotated.scaled(0.2);
        for i in 0..20 {
            let s = 0.3 * i as f64;
            assert!((avg.value(s) - s5.support().value(s)).abs() < 1e-10);
        }
        assert!(k_central_symmetral(&h, 1).is_err());
    }

    #[test]
    fn minkowski_sum_examples() {
        let a = Hedgehog::circle(2.0);
        let b = Hedgehog::new(TrigPoly::constant(3.0) + TrigPoly::cos(1, 1.0));
        assert_eq!(
            minkowski_sum(&a, &b).support(),
            &(TrigPoly::constant(5.0) + TrigPoly::cos(1, 1.0))
        );
        let h = worked_example();
        assert_eq!(minkowski_sum(&h, &Hedgehog::default()), h);
    }
}
