use std::f64::consts::{PI, TAU};

use hedgehog::inequality::{
    check_thm1, check_thm2, d_2, isoperimetric_deficit, preserving_slack, stability_bounds,
    stability_constant, CheckOptions,
};
use hedgehog::midpoint::{circumscribed_polygon, midpoint_oriented_area, midpoint_point_at};
use hedgehog::oracle::{
    green_area, length_quadrature, quadrature_integral, sample_curve, steiner_point_quadrature,
    winding_number, ClosedCurve, HedgehogCurve, MidpointCurve,
};
use hedgehog::preserving::preserving_from_isogonal;
use hedgehog::random::random_convex_hedgehog;
use hedgehog::{Harmonic, Hedgehog, MidpointSet, Point2, PreservingSet, TrigPoly};
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn arb_poly(max_degree: u32) -> impl Strategy<Value = TrigPoly> {
    let coeff = prop_oneof![1 => Just(0.0), 3 => -3.0..3.0f64];
    (
        -40.0..40.0f64,
        prop::collection::vec((coeff.clone(), coeff), 1..=max_degree as usize),
    )
        .prop_map(|(a0, cs)| {
            let harmonics = cs.into_iter().enumerate().map(|(i, (a, b))| Harmonic::new(i as u32 + 1, a, b));
            TrigPoly::new(a0, harmonics).unwrap()
        })
}

fn arb_hedgehog(max_degree: u32) -> impl Strategy<Value = Hedgehog> {
    arb_poly(max_degree).prop_map(Hedgehog::new)
}

fn arb_oval(max_degree: u32) -> impl Strategy<Value = Hedgehog> {
    any::<u64>().prop_map(move |seed| {
        random_convex_hedgehog(&mut ChaCha8Rng::seed_from_u64(seed), max_degree).unwrap()
    })
}

fn scale(f: &TrigPoly) -> f64 {
    f.amplitude_bound().max(1.0)
}

struct Shifted<'a>(HedgehogCurve<'a>, f64);

impl ClosedCurve for Shifted<'_> {
    fn period(&self) -> f64 {
        TAU
    }
    fn position(&self, s: f64) -> Point2 {
        self.0.position(s + self.1)
    }
    fn velocity(&self, s: f64) -> Point2 {
        self.0.velocity(s + self.1)
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn phase_shift_round_trip(f in arb_poly(12), alpha in -10.0..10.0f64) {
        let back = f.phase_shift(alpha).phase_shift(-alpha);
        prop_assert!((back.a0() - f.a0()).abs() == 0.0);
        for n in 1..=12 {
            let (a, b) = f.coefficient(n);
            let (c, d) = back.coefficient(n);
            prop_assert!((a - c).abs() <= 1e-12 * scale(&f) && (b - d).abs() <= 1e-12 * scale(&f));
        }
    }

    #[test]
    fn directional_average_is_periodic_and_literal(f in arb_poly(12), k in 3usize..10, s in 0.0..TAU) {
        let avg = f.directional_average(k).unwrap();
        let tol = 1e-11 * scale(&f);
        prop_assert!((avg.value(s + TAU / k as f64) - avg.value(s)).abs() <= tol);
        let literal = (0..k).map(|j| f.value(s + TAU * j as f64 / k as f64)).sum::<f64>() / k as f64;
        prop_assert!((avg.value(s) - literal).abs() <= tol);
        prop_assert!((f.generalized_k_width(k, s).unwrap() - k as f64 * literal).abs() <= k as f64 * tol);
    }

    #[test]
    fn t_operator_is_a_shifted_average(f in arb_poly(12), k in 3usize..10, s in 0.0..TAU) {
        let t = f.t_k_operator(k).unwrap();
        let shifted = f.directional_average(k).unwrap().value(s + PI / k as f64);
        prop_assert!((t.value(s) - shifted).abs() <= 1e-11 * scale(&f));
    }

    #[test]
    fn l2_norm_matches_quadrature(f in arb_poly(12)) {
        let q = quadrature_integral(|s| f.value(s).powi(2), 256).unwrap();
        prop_assert!((q - f.l2_norm_squared()).abs() <= 1e-10 * q.max(1.0));
    }

    #[test]
    fn support_and_tangent_consistency(h in arb_hedgehog(10), s in 0.0..TAU) {
        let p = h.point_at(s);
        let tol = 1e-10 * scale(h.support());
        prop_assert!((p.dot(Point2::unit_dir(s)) - h.support().value(s)).abs() <= tol);
        let eps = 1e-5;
        let tangent = (h.point_at(s + eps) - h.point_at(s - eps)) * (0.5 / eps);
        prop_assert!(tangent.dot(Point2::unit_dir(s)).abs() <= 1e-6 * scale(h.support()) * 100.0);
        let along = tangent.dot(Point2::unit_normal_rot(s));
        prop_assert!((along - h.radius_of_curvature(s)).abs() <= 1e-4 * scale(h.support()));
    }

    #[test]
    fn closed_forms_match_quadrature(h in arb_hedgehog(10)) {
        let area = green_area(&HedgehogCurve(&h), 1 << 12).unwrap();
        let exact = h.oriented_area();
        prop_assert!((area - exact).abs() <= 1e-8 * exact.abs().max(1.0), "{area} vs {exact}");
        let len = length_quadrature(&h, 256).unwrap();
        prop_assert!((len - h.algebraic_length()).abs() <= 1e-8 * len.abs().max(1.0));
        let st = steiner_point_quadrature(&h, 256).unwrap();
        prop_assert!(st.distance(h.steiner_point()) <= 1e-10 * scale(h.support()));
    }

    #[test]
    fn green_area_is_shift_invariant(h in arb_hedgehog(6), i in 1usize..512) {
        let n = 512;
        let base = green_area(&HedgehogCurve(&h), n).unwrap();
        let shifted = green_area(&Shifted(HedgehogCurve(&h), TAU * i as f64 / n as f64), n).unwrap();
        prop_assert!((base - shifted).abs() <= 1e-12 * base.abs().max(1.0) * 100.0);
    }

    #[test]
    fn preserving_set_dual_route(h in arb_hedgehog(12), k in 3usize..9, s in 0.0..TAU) {
        let p = PreservingSet::new(&h, k).unwrap();
        let geometric = preserving_from_isogonal(&h, k, s).unwrap();
        prop_assert!(geometric.distance(p.point_at(s)) <= 1e-8 * (1.0 + scale(h.support())));
    }

    #[test]
    fn preserving_set_parallel_tangents(h in arb_hedgehog(12), k in 3usize..9, s in 0.0..TAU) {
        let p = PreservingSet::new(&h, k).unwrap();
        let tol = 1e-9 * scale(h.support());
        prop_assert!((p.curvature(s) - p.curvature_from_isogonal(s)).abs() <= tol * 100.0);
        // Where both curves are regular their tangents at s are parallel.
        let scale = scale(h.support());
        if p.curvature(s).abs() > 1e-3 * scale && h.radius_of_curvature(s).abs() > 1e-3 * scale {
            let tp = HedgehogCurve(p.as_hedgehog()).velocity(s);
            let th = HedgehogCurve(&h).velocity(s);
            prop_assert!(tp.cross(th).abs() <= 1e-6 * tp.norm() * th.norm());
        }
    }

    #[test]
    fn preserving_set_degenerates_beyond_degree(h in arb_hedgehog(8), extra in 1usize..10) {
        let k = (h.support().degree() as usize + extra).max(3);
        prop_assert!(PreservingSet::new(&h, k).unwrap().is_degenerate());
    }

    #[test]
    fn polygon_centroid_is_midpoint(h in arb_hedgehog(12), k in 3usize..9, s in 0.0..TAU) {
        let poly = circumscribed_polygon(&h, k, s).unwrap();
        let omega = midpoint_point_at(&h, k, s).unwrap();
        prop_assert!(poly.centroid().distance(omega) <= 1e-9 * scale(h.support()));
    }

    #[test]
    fn midpoint_green_integral_covers_k_times(h in arb_hedgehog(12), k in 3usize..9) {
        let full = green_area(&MidpointCurve::full_turn(&h, k).unwrap(), 1 << 11).unwrap();
        let one = midpoint_oriented_area(&h, k).unwrap();
        let tol = 1e-8 * h.support().l2_norm_squared().max(1.0);
        prop_assert!((full - k as f64 * one).abs() <= tol, "{full} vs {k}·{one}");
    }

    #[test]
    fn midpoint_degeneracy_matches_diameter(h in arb_hedgehog(9), k in 3usize..9) {
        let m = MidpointSet::new(&h, k).unwrap();
        let collapsed = m.sampled_diameter() <= 1e-9 * (1.0 + scale(h.support()));
        if m.is_degenerate() {
            prop_assert!(collapsed);
        }
        // The translation term only moves Ω, so shape degeneracy is decided without it.
        let centred = Hedgehog::new(h.support().filter_indices(|n| n > 1, true));
        prop_assert_eq!(MidpointSet::new(&centred, k).unwrap().is_degenerate(), collapsed);
    }

    #[test]
    fn d2_matches_quadrature(a in arb_hedgehog(12), b in arb_hedgehog(12)) {
        let q = quadrature_integral(|s| (a.support().value(s) - b.support().value(s)).powi(2), 256).unwrap();
        let d = d_2(&a, &b);
        prop_assert!((d * d - q).abs() <= 1e-9 * q.max(1.0));
    }

    #[test]
    fn deficit_is_rigid_motion_invariant(h in arb_hedgehog(12), alpha in 0.0..TAU, tx in -50.0..50.0f64, ty in -50.0..50.0f64) {
        let base = isoperimetric_deficit(&h);
        let moved = Hedgehog::new(h.rotate(alpha).support() + &TrigPoly::harmonic(1, tx, ty));
        prop_assert!((isoperimetric_deficit(&moved) - base).abs() <= 1e-10 * base.max(1.0));
    }

    #[test]
    fn monotone_chain_on_ovals(o in arb_oval(12), k in 3usize..13) {
        let opts = CheckOptions::default();
        let t1 = check_thm1(&o, k, &opts).unwrap();
        let t2 = check_thm2(&o, k, &opts).unwrap();
        let tol = 1e-9 * t1.lhs.max(1.0);
        prop_assert!(t1.lhs >= t1.slack - tol);
        prop_assert!(t1.slack >= t2.slack - tol);
        prop_assert!(t2.slack >= -tol);
        prop_assert!((t1.lhs - t1.rhs - t1.slack).abs() <= tol);
        if t1.equality {
            prop_assert!(t1.slack.abs() <= tol);
        }
    }

    #[test]
    fn stability_bounds_below_slack(o in arb_oval(12)) {
        for k in 3..=12 {
            let b = stability_bounds(&o, k, &CheckOptions::default()).unwrap();
            let slack = preserving_slack(&o, k).unwrap();
            let tol = 1e-9 * isoperimetric_deficit(&o).max(1.0);
            prop_assert!(b.stab1 <= slack + tol, "k={k}: {} > {slack}", b.stab1);
            prop_assert!(b.stab2 <= slack + tol, "k={k}: {} > {slack}", b.stab2);
        }
    }

    #[test]
    fn winding_stable_under_sample_doubling(o in arb_oval(8)) {
        let c = o.steiner_point();
        let coarse = winding_number(&sample_curve(&HedgehogCurve(&o), 256), c).unwrap();
        let fine = winding_number(&sample_curve(&HedgehogCurve(&o), 512), c).unwrap();
        prop_assert_eq!(coarse, fine);
        prop_assert_eq!(coarse, o.support().a0().signum() as i64);
    }
}

#[test]
fn cotangent_constant_and_partial_fractions() {
    let cot5 = 1.0 / (PI / 5.0).tan();
    assert!((cot5 - (1.0 + 2.0 / 5f64.sqrt()).sqrt()).abs() < 1e-12);
    // π cot(πx) = 1/x + Σ_{m≥1} 2x / (x² - m²)
    for k in 3..=12 {
        let x = 1.0 / k as f64;
        let series = 1.0 / x + (1..=1_000_000u32).map(|m| 2.0 * x / (x * x - f64::from(m).powi(2))).sum::<f64>();
        let direct = PI / (PI * x).tan();
        assert!((series - direct).abs() < 1e-5, "k={k}: {series} vs {direct}");
        let c = stability_constant(k).unwrap();
        assert!((c - 8.0 * PI * PI * k as f64 / (2.0 * direct + k as f64)).abs() < 1e-10 * c);
    }
}
