//! Isoperimetric deficit, the preserving/midpoint inequalities and their stability
//! bounds.
//!
//! For an oval with support `h`:
//!
//! ```text
//! L² - 4πA                       = 2π² Σ_{n≥2} (n² - 1)(a_n² + b_n²)
//! L² - 4πA - 4π|A_{P_k}|          = 2π² Σ_{n>1, k∤n} (n² - 1)(a_n² + b_n²)   (=: Δ_k)
//! L² - 4πA - 4π|A_{P_k}| - 2π|A_Ω| ≥ 0
//! Δ_k ≥ 8π²k / (2π cot(π/k) + k) · d∞²(O, P_k + D_O)
//! Δ_k ≥ 6π d₂²(O, P_k + D_O)
//! ```
//!
//! The theorems are stated for ovals. [`HypothesisMode::Strict`] refuses other
//! input; [`HypothesisMode::Unchecked`] evaluates the coefficient formulas anyway.
//! Stability bounds are attached to `Δ_k` only, not to the midpoint-augmented
//! slack.

use std::f64::consts::PI;

use serde::Serialize;

use crate::curvegeom::{Convexity, Hedgehog};
use crate::error::{check_order, Error, Result};
use crate::midpoint::{all_kgons_regular, midpoint_oriented_area};
use crate::preserving::{minkowski_sum, PreservingSet};
use crate::roots::{extremum_grid_size, max_abs};

/// Default relative tolerance for "this harmonic is zero" in equality detection.
pub const DEFAULT_EQUALITY_TOL: f64 = 1e-9;

/// Relative tolerance on the report invariants, against `max(1, deficit)`.
pub const SLACK_TOL: f64 = 1e-9;

/// Whether to enforce the oval hypothesis of the theorems.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum HypothesisMode {
    #[default]
    Strict,
    /// Evaluate the formulas for any hedgehog; results are outside the theorems.
    Unchecked,
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct CheckOptions {
    /// A harmonic counts as zero when its amplitude is at most
    /// `equality_tol · max(1, a0)`.
    pub equality_tol: f64,
    pub mode: HypothesisMode,
}

impl Default for CheckOptions {
    fn default() -> Self {
        Self { equality_tol: DEFAULT_EQUALITY_TOL, mode: HypothesisMode::Strict }
    }
}

impl CheckOptions {
    pub fn unchecked() -> Self {
        Self { mode: HypothesisMode::Unchecked, ..Self::default() }
    }

    fn harmonic_tolerance(&self, o: &Hedgehog) -> f64 {
        self.equality_tol * o.support().a0().abs().max(1.0)
    }

    /// Returns the convexity status, or an error in strict mode for non-ovals.
    fn admit(&self, o: &Hedgehog) -> Result<Convexity> {
        let status = o.convexity();
        if self.mode == HypothesisMode::Strict && status != Convexity::Convex {
            return Err(Error::OutsideHypotheses(format!(
                "the inequalities are stated for ovals; radius of curvature is {}",
                match status {
                    Convexity::Marginal => "marginal (within 1e-9 of zero)",
                    _ => "not of constant sign",
                }
            )));
        }
        Ok(status)
    }
}

/// Both sides of one inequality.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct TheoremCheck {
    pub lhs: f64,
    pub rhs: f64,
    pub slack: f64,
    pub equality: bool,
}

/// `L² - 4πA = 2π² Σ_{n≥2} (n² - 1)(a_n² + b_n²)`.
pub fn isoperimetric_deficit(o: &Hedgehog) -> f64 {
    2.0 * PI * PI * weighted_energy(o, |_| true)
}

/// `Σ (n² - 1)(a_n² + b_n²)` over `n ≥ 2` satisfying `keep`.
fn weighted_energy(o: &Hedgehog, keep: impl Fn(u32) -> bool) -> f64 {
    o.support()
        .harmonics()
        .iter()
        .filter(|t| t.n >= 2 && keep(t.n))
        .map(|t| {
            let n = f64::from(t.n);
            (n * n - 1.0) * t.energy()
        })
        .sum()
}

/// `Δ_k = 2π² Σ_{n>1, k∤n} (n² - 1)(a_n² + b_n²)`, summed directly so that it is
/// free of cancellation.
pub fn preserving_slack(o: &Hedgehog, k: usize) -> Result<f64> {
    check_order(k)?;
    let k = k as u32;
    Ok(2.0 * PI * PI * weighted_energy(o, |n| n % k != 0))
}

/// `L² - 4πA ≥ 4π|A_{P_k}|`, with equality iff every circumscribed equiangular k-gon
/// is regular and centred at the Steiner point.
pub fn check_thm1(o: &Hedgehog, k: usize, opts: &CheckOptions) -> Result<TheoremCheck> {
    check_order(k)?;
    opts.admit(o)?;
    Ok(thm1_unchecked(o, k, opts))
}

fn thm1_unchecked(o: &Hedgehog, k: usize, opts: &CheckOptions) -> TheoremCheck {
    let p = PreservingSet::new(o, k).expect("order validated");
    let lhs = isoperimetric_deficit(o);
    let rhs = 4.0 * PI * p.oriented_area().abs();
    let slack = preserving_slack(o, k).expect("order validated");
    let equality = all_kgons_regular(o, k, opts.harmonic_tolerance(o)).expect("order validated");
    TheoremCheck { lhs, rhs, slack, equality }
}

/// `L² - 4πA ≥ 4π|A_{P_k}| + 2π|A_Ω|`, same equality condition.
pub fn check_thm2(o: &Hedgehog, k: usize, opts: &CheckOptions) -> Result<TheoremCheck> {
    check_order(k)?;
    opts.admit(o)?;
    Ok(thm2_unchecked(o, k, opts))
}

fn thm2_unchecked(o: &Hedgehog, k: usize, opts: &CheckOptions) -> TheoremCheck {
    let first = thm1_unchecked(o, k, opts);
    let midpoint_term = 2.0 * PI * midpoint_oriented_area(o, k).expect("order validated").abs();
    TheoremCheck {
        lhs: first.lhs,
        rhs: first.rhs + midpoint_term,
        slack: first.slack - midpoint_term,
        equality: first.equality,
    }
}

/// `max_s |h_A(s) - h_B(s)|`.
///
/// Grid search over `4096 · max(1, degree)` points with golden-section refinement of
/// every local maximum. The result is checked against the amplitude bound
/// `Σ √(a_n² + b_n²)`; exceeding it signals a numerical failure.
pub fn d_inf(a: &Hedgehog, b: &Hedgehog) -> Result<f64> {
    let diff = a.support() - b.support();
    let (_, value) = max_abs(&diff, extremum_grid_size(&diff));
    let bound = diff.amplitude_bound();
    if value > bound * (1.0 + 1e-12) + f64::MIN_POSITIVE {
        return Err(Error::Numerical(format!(
            "sup-norm search returned {value}, above the amplitude bound {bound}"
        )));
    }
    Ok(value)
}

/// `(∫ |h_A - h_B|² ds)^{1/2}` by Parseval.
pub fn d_2(a: &Hedgehog, b: &Hedgehog) -> f64 {
    (a.support() - b.support()).l2_norm_squared().sqrt()
}

/// `8π²k / (2π cot(π/k) + k)`.
pub fn stability_constant(k: usize) -> Result<f64> {
    check_order(k)?;
    let kf = k as f64;
    let cot = 1.0 / (PI / kf).tan();
    Ok(8.0 * PI * PI * kf / (2.0 * PI * cot + kf))
}

/// `P_k + D_O`, the reference body of the stability bounds.
pub fn stability_reference(o: &Hedgehog, k: usize) -> Result<Hedgehog> {
    let p = PreservingSet::new(o, k)?;
    Ok(minkowski_sum(p.as_hedgehog(), &o.steiner_disk().as_hedgehog()))
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct StabilityBounds {
    pub d_inf: f64,
    pub d_2: f64,
    pub stab1: f64,
    pub stab2: f64,
}

/// Right-hand sides of the d∞ and d₂ stability bounds for `Δ_k`.
pub fn stability_bounds(o: &Hedgehog, k: usize, opts: &CheckOptions) -> Result<StabilityBounds> {
    check_order(k)?;
    opts.admit(o)?;
    stability_unchecked(o, k)
}

fn stability_unchecked(o: &Hedgehog, k: usize) -> Result<StabilityBounds> {
    let reference = stability_reference(o, k)?;
    let di = d_inf(o, &reference)?;
    let d2 = d_2(o, &reference);
    Ok(StabilityBounds {
        d_inf: di,
        d_2: d2,
        stab1: stability_constant(k)? * di * di,
        stab2: 6.0 * PI * d2 * d2,
    })
}

/// `((8/3)π² d∞²(O, D_O), 6π d₂²(O, D_O))`, the limits of the stability bounds as
/// `k → ∞`; both are bounded by the full deficit.
pub fn corollary_bounds(o: &Hedgehog, opts: &CheckOptions) -> Result<(f64, f64)> {
    opts.admit(o)?;
    corollary_unchecked(o)
}

fn corollary_unchecked(o: &Hedgehog) -> Result<(f64, f64)> {
    let disk = o.steiner_disk().as_hedgehog();
    let di = d_inf(o, &disk)?;
    let d2 = d_2(o, &disk);
    Ok((8.0 / 3.0 * PI * PI * di * di, 6.0 * PI * d2 * d2))
}

/// All inequality quantities for one oval and order.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct InequalityReport {
    pub k: usize,
    /// `L² - 4πA`.
    pub deficit: f64,
    /// `4π|A_{P_k}|`.
    pub abs_area_preserving: f64,
    /// `2π|A_Ω|`.
    pub abs_area_midpoint_term: f64,
    pub slack_thm1: f64,
    pub slack_thm2: f64,
    pub equality_thm1: bool,
    pub equality_thm2: bool,
    pub d_inf: f64,
    pub d_2: f64,
    pub stab1_bound: f64,
    pub stab2_bound: f64,
    /// `(b∞, b₂)` against the full deficit.
    pub corollary_bounds: (f64, f64),
    pub convexity_status: Convexity,
    /// False when produced in unchecked mode for a non-oval.
    pub within_hypotheses: bool,
}

impl InequalityReport {
    /// `max(1, deficit)`.
    pub fn scale(&self) -> f64 {
        self.deficit.max(1.0)
    }

    /// Violated report invariants, as human-readable lines. Empty for a sound report.
    ///
    /// Inequalities are only required to hold within the theorem hypotheses;
    /// identities (the monotone chain of sides, equality-flag soundness) are
    /// checked always.
    pub fn violations(&self) -> Vec<String> {
        let tol = SLACK_TOL * self.scale();
        let mut out = Vec::new();
        let mut require = |ok: bool, what: String| {
            if !ok {
                out.push(what);
            }
        };
        let values = [
            self.deficit,
            self.abs_area_preserving,
            self.abs_area_midpoint_term,
            self.slack_thm1,
            self.slack_thm2,
            self.d_inf,
            self.d_2,
            self.stab1_bound,
            self.stab2_bound,
            self.corollary_bounds.0,
            self.corollary_bounds.1,
        ];
        require(values.iter().all(|v| v.is_finite()), "non-finite value in report".into());
        require(
            (self.deficit - self.abs_area_preserving - self.slack_thm1).abs() <= tol,
            format!(
                "slack_thm1 {} differs from deficit - 4π|A_Pk| = {}",
                self.slack_thm1,
                self.deficit - self.abs_area_preserving
            ),
        );
        require(
            (self.slack_thm1 - self.abs_area_midpoint_term - self.slack_thm2).abs() <= tol,
            format!("slack_thm2 {} inconsistent with slack_thm1", self.slack_thm2),
        );
        if self.equality_thm1 {
            require(
                self.slack_thm1.abs() <= tol,
                format!("equality flagged but slack_thm1 = {}", self.slack_thm1),
            );
        }
        if self.within_hypotheses {
            require(self.slack_thm1 >= -tol, format!("slack_thm1 = {} < 0", self.slack_thm1));
            require(self.slack_thm2 >= -tol, format!("slack_thm2 = {} < 0", self.slack_thm2));
            require(
                self.stab1_bound <= self.slack_thm1 + tol,
                format!("stab1 {} exceeds slack_thm1 {}", self.stab1_bound, self.slack_thm1),
            );
            require(
                self.stab2_bound <= self.slack_thm1 + tol,
                format!("stab2 {} exceeds slack_thm1 {}", self.stab2_bound, self.slack_thm1),
            );
            require(
                self.corollary_bounds.0 <= self.deficit + tol,
                format!("corollary d∞ bound {} exceeds deficit", self.corollary_bounds.0),
            );
            require(
                self.corollary_bounds.1 <= self.deficit + tol,
                format!("corollary d₂ bound {} exceeds deficit", self.corollary_bounds.1),
            );
        }
        out
    }
}

/// Builds the full report. In strict mode non-ovals are refused.
pub fn full_report(o: &Hedgehog, k: usize, opts: &CheckOptions) -> Result<InequalityReport> {
    check_order(k)?;
    let status = opts.admit(o)?;
    let thm1 = thm1_unchecked(o, k, opts);
    let thm2 = thm2_unchecked(o, k, opts);
    let stab = stability_unchecked(o, k)?;
    let corollary = corollary_unchecked(o)?;
    Ok(InequalityReport {
        k,
        deficit: thm1.lhs,
        abs_area_preserving: thm1.rhs,
        abs_area_midpoint_term: thm2.rhs - thm1.rhs,
        slack_thm1: thm1.slack,
        slack_thm2: thm2.slack,
        equality_thm1: thm1.equality,
        equality_thm2: thm2.equality,
        d_inf: stab.d_inf,
        d_2: stab.d_2,
        stab1_bound: stab.stab1,
        stab2_bound: stab.stab2,
        corollary_bounds: corollary,
        convexity_status: status,
        within_hypotheses: status == Convexity::Convex,
    })
}
