//! Equiangular circumscribed k-gons and kth order midpoint sets.
//!
//! For each `s` the support lines with normals `u(s + 2πj/k)`, `j = 1..k`, bound an
//! equiangular k-gon. The midpoint set is the curve of their vertex centroids,
//!
//! ```text
//! Ω(s) = (2/k) Σ_{j=1..k} h(s + 2πj/k) u(s + 2πj/k),   s ∈ [0, 2π/k].
//! ```
//!
//! In complex form `Ω(s) = 2 Σ_{k | n+1} c_n e^{i(n+1)s}` over all integer `n`, so
//! only harmonics with `n ≡ ±1 (mod k)` move the point, and the curve closes after
//! `2π/k`. Running `s` over `[0, 2π]` covers it `k` times.

use std::f64::consts::{PI, TAU};

use crate::curvegeom::{Hedgehog, Point2};
use crate::error::{check_order, Error, Result};

/// An equiangular k-gon circumscribed about a hedgehog.
#[derive(Clone, Debug, PartialEq)]
pub struct CircumscribedPolygon {
    pub k: usize,
    pub base_angle: f64,
    /// `v_j` is the intersection of the support lines `j` and `j + 1` (cyclically).
    pub vertices: Vec<Point2>,
    /// `w_j = h_j u_j`, the foot of the perpendicular from the origin to line `j`.
    pub foot_points: Vec<Point2>,
}

impl CircumscribedPolygon {
    pub fn centroid(&self) -> Point2 {
        let sum = self.vertices.iter().fold(Point2::ORIGIN, |acc, &v| acc + v);
        sum * (1.0 / self.k as f64)
    }

    /// Normal angle of support line `j` (1-based).
    pub fn edge_normal_angle(&self, j: usize) -> f64 {
        self.base_angle + TAU * j as f64 / self.k as f64
    }
}

/// Vertices from the pairwise intersections of consecutive support lines:
///
/// `v_j = h_{j+1} u_{j+1} + ((h_j - h_{j+1} cos θ) / sin θ) (sin φ_{j+1}, -cos φ_{j+1})`
///
/// with `θ = 2π/k` and `φ_j = s + jθ`. `sin θ > 0` for every `k ≥ 3`.
pub fn circumscribed_polygon(h: &Hedgehog, k: usize, s: f64) -> Result<CircumscribedPolygon> {
    check_order(k)?;
    let theta = TAU / k as f64;
    let (sin_t, cos_t) = theta.sin_cos();
    let angle = |j: usize| s + theta * j as f64;
    let support: Vec<f64> = (1..=k + 1).map(|j| h.support().value(angle(j))).collect();

    let mut vertices = Vec::with_capacity(k);
    let mut foot_points = Vec::with_capacity(k);
    for j in 1..=k {
        let hj = support[j - 1];
        let hn = support[j];
        let (sn, cs) = angle(j + 1).sin_cos();
        let along = (hj - hn * cos_t) / sin_t;
        vertices.push(Point2::new(hn * cs + along * sn, hn * sn - along * cs));
        foot_points.push(hj * Point2::unit_dir(angle(j)));
    }
    Ok(CircumscribedPolygon { k, base_angle: s, vertices, foot_points })
}

/// `Ω(s) = (2/k) Σ_{j=1..k} h(s + 2πj/k) u(s + 2πj/k)`.
pub fn midpoint_point_at(h: &Hedgehog, k: usize, s: f64) -> Result<Point2> {
    check_order(k)?;
    Ok(midpoint_sum(h, k, s))
}

fn midpoint_sum(h: &Hedgehog, k: usize, s: f64) -> Point2 {
    let mut acc = Point2::ORIGIN;
    for j in 1..=k {
        let t = s + TAU * j as f64 / k as f64;
        acc += h.support().value(t) * Point2::unit_dir(t);
    }
    acc * (2.0 / k as f64)
}

/// True iff no stored harmonic has `n ≡ ±1 (mod k)`. The `n = 1` term always
/// counts, since a translation moves the point.
pub fn midpoint_is_degenerate(h: &Hedgehog, k: usize) -> Result<bool> {
    check_order(k)?;
    let k = k as u32;
    Ok(h.support().harmonics().iter().all(|t| {
        let r = t.n % k;
        r != 1 && r != k - 1
    }))
}

/// `π Σ_{m≥1} m (a²_{km-1} + b²_{km-1} - a²_{km+1} - b²_{km+1})`.
pub fn midpoint_oriented_area(h: &Hedgehog, k: usize) -> Result<f64> {
    Ok(PI * midpoint_area_terms(h, k)?.iter().sum::<f64>())
}

/// The signed summands `±m (a_n² + b_n²)` of the midpoint area, without the `π`.
pub fn midpoint_area_terms(h: &Hedgehog, k: usize) -> Result<Vec<f64>> {
    check_order(k)?;
    let k = k as u32;
    Ok(h
        .support()
        .harmonics()
        .iter()
        .filter_map(|t| match t.n % k {
            r if r == k - 1 => Some(f64::from((t.n + 1) / k) * t.energy()),
            1 if t.n > 1 => Some(-f64::from((t.n - 1) / k) * t.energy()),
            _ => None,
        })
        .collect())
}

/// True iff every harmonic with `n > 1`, `k ∤ n` has amplitude at most `tolerance`:
/// then every circumscribed equiangular k-gon is regular and centred at the
/// Steiner point.
pub fn all_kgons_regular(h: &Hedgehog, k: usize, tolerance: f64) -> Result<bool> {
    check_order(k)?;
    if tolerance.is_nan() || tolerance <= 0.0 {
        return Err(Error::InvalidParameter {
            name: "tolerance",
            reason: format!("must be positive, got {tolerance}"),
        });
    }
    let k = k as u32;
    Ok(h
        .support()
        .harmonics()
        .iter()
        .filter(|t| t.n > 1 && t.n % k != 0)
        .all(|t| t.amplitude() <= tolerance))
}

/// The kth order midpoint set as a closed curve on `[0, 2π/k]`.
#[derive(Clone, Debug, PartialEq)]
pub struct MidpointSet {
    k: usize,
    parent: Hedgehog,
}

impl MidpointSet {
    /// Default number of samples per fundamental period, per unit of `k`.
    pub const SAMPLES_PER_ORDER: usize = 256;

    pub fn new(parent: &Hedgehog, k: usize) -> Result<Self> {
        check_order(k)?;
        Ok(Self { k, parent: parent.clone() })
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn parent(&self) -> &Hedgehog {
        &self.parent
    }

    /// Length of the fundamental parameter interval, `2π/k`.
    pub fn period(&self) -> f64 {
        TAU / self.k as f64
    }

    pub fn point_at(&self, s: f64) -> Point2 {
        midpoint_sum(&self.parent, self.k, s)
    }

    /// `count` points at `s_i = i · period / (count - 1)`; first and last coincide.
    pub fn sample(&self, count: usize) -> Vec<Point2> {
        let count = count.max(2);
        let step = self.period() / (count - 1) as f64;
        (0..count).map(|i| self.point_at(step * i as f64)).collect()
    }

    /// The default `256 k` samples over one period.
    pub fn sample_default(&self) -> Vec<Point2> {
        self.sample(Self::SAMPLES_PER_ORDER * self.k)
    }

    pub fn oriented_area(&self) -> f64 {
        midpoint_oriented_area(&self.parent, self.k).expect("order validated at construction")
    }

    pub fn is_degenerate(&self) -> bool {
        midpoint_is_degenerate(&self.parent, self.k).expect("order validated at construction")
    }

    /// Largest pairwise distance among the default samples.
    pub fn sampled_diameter(&self) -> f64 {
        diameter(&self.sample_default())
    }
}

/// Largest pairwise distance of a point set.
pub fn diameter(points: &[Point2]) -> f64 {
    let mut best: f64 = 0.0;
    for (i, p) in points.iter().enumerate() {
        for q in &points[i + 1..] {
            best = best.max(p.distance(*q));
        }
    }
    best
}
