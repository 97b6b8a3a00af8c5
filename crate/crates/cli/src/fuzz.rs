//! Seeded fuzzing of the whole invariant suite on random ovals.
//!
//! Trial `i` draws from a ChaCha8 stream keyed by `(seed, i)`, so results do not
//! depend on how trials are scheduled across threads.

use std::f64::consts::TAU;
use std::fmt;

use hedgehog::inequality::{full_report, CheckOptions};
use hedgehog::midpoint::{circumscribed_polygon, midpoint_oriented_area, midpoint_point_at};
use hedgehog::oracle::{
    green_area, length_quadrature, steiner_point_quadrature, HedgehogCurve, MidpointCurve,
};
use hedgehog::preserving::preserving_from_isogonal;
use hedgehog::random::random_convex_hedgehog;
use hedgehog::{Hedgehog, PreservingSet, TrigPoly};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::error::{CliError, Result};
use crate::spec::CurveSpec;

/// Quadrature samples for the Green-integral checks; exact for degree ≤ 12 inputs.
pub const QUADRATURE_SAMPLES: usize = 1024;

/// Parameters probed by the pointwise dual-route checks.
const PROBES: usize = 16;

/// Which family of checks a violation belongs to.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Category {
    /// Closed forms against quadrature and geometric constructions.
    Oracle,
    /// Inequalities and report invariants.
    Inequality,
}

#[derive(Clone, Debug, PartialEq)]
pub struct Violation {
    pub category: Category,
    pub message: String,
}

fn relative_gap(approx: f64, exact: f64, floor: f64) -> f64 {
    (approx - exact).abs() / exact.abs().max(floor)
}

/// Runs every check on one oval and order. Numerical failures surface as `Err`.
pub fn check_invariants(h: &Hedgehog, k: usize) -> Result<Vec<Violation>, hedgehog::Error> {
    let mut out = Vec::new();
    let mut oracle = |ok: bool, message: String| {
        if !ok {
            out.push(Violation { category: Category::Oracle, message });
        }
    };

    let area = h.oriented_area();
    let q_area = green_area(&HedgehogCurve(h), QUADRATURE_SAMPLES)?;
    let gap = relative_gap(q_area, area, 1.0);
    oracle(gap <= 1e-7, format!("area {area} vs quadrature {q_area} (relative {gap:e})"));

    let length = h.algebraic_length();
    let q_length = length_quadrature(h, QUADRATURE_SAMPLES)?;
    let gap = relative_gap(q_length, length, 1.0);
    oracle(gap <= 1e-7, format!("length {length} vs quadrature {q_length} (relative {gap:e})"));

    let steiner = h.steiner_point();
    let q_steiner = steiner_point_quadrature(h, QUADRATURE_SAMPLES)?;
    let gap = q_steiner.distance(steiner) / steiner.norm().max(1.0);
    oracle(gap <= 1e-7, format!("Steiner point {steiner:?} vs quadrature {q_steiner:?}"));

    let mid_area = midpoint_oriented_area(h, k)?;
    let q_mid = green_area(&MidpointCurve::fundamental(h, k)?, QUADRATURE_SAMPLES)?;
    let gap = relative_gap(q_mid, mid_area, 1.0);
    oracle(gap <= 1e-7, format!("midpoint area {mid_area} vs quadrature {q_mid} (relative {gap:e})"));

    let covered = green_area(&MidpointCurve::full_turn(h, k)?, QUADRATURE_SAMPLES)?;
    let target = k as f64 * mid_area;
    let gap = relative_gap(covered, target, 1.0);
    oracle(gap <= 1e-7, format!("full-turn Green integral {covered} vs k·A_Ω = {target}"));

    let sup = sup_norm(h.support());
    let preserving = PreservingSet::new(h, k)?;
    for i in 0..PROBES {
        let s = TAU * (i as f64 + 0.5) / PROBES as f64;
        let geometric = preserving_from_isogonal(h, k, s)?;
        let analytic = preserving.point_at(s);
        let d = geometric.distance(analytic);
        oracle(d <= 1e-8 * (1.0 + sup), format!("preserving point at s = {s}: routes differ by {d:e}"));
        let centroid = circumscribed_polygon(h, k, s)?.centroid();
        let d = centroid.distance(midpoint_point_at(h, k, s)?);
        oracle(d <= 1e-9 * (1.0 + sup), format!("polygon centroid at s = {s} off the midpoint set by {d:e}"));
    }

    let report = full_report(h, k, &CheckOptions::default())?;
    out.extend(
        report
            .violations()
            .into_iter()
            .map(|message| Violation { category: Category::Inequality, message }),
    );
    Ok(out)
}

/// `max |f|` over a dense grid.
fn sup_norm(f: &TrigPoly) -> f64 {
    f.sample_uniform(4096, 0).into_iter().fold(0.0, |m, v| m.max(v.abs()))
}

/// `MIN..MAX` (inclusive) or a single order.
pub fn parse_k_range(text: &str) -> Result<(usize, usize)> {
    let parse = |s: &str| {
        s.trim()
            .parse::<usize>()
            .map_err(|_| CliError::Input(format!("--k: '{s}' is not a non-negative integer")))
    };
    let (lo, hi) = match text.split_once("..") {
        Some((lo, hi)) => (parse(lo)?, parse(hi.trim_start_matches('='))?),
        None => {
            let k = parse(text)?;
            (k, k)
        }
    };
    if lo < 3 || hi < lo {
        return Err(CliError::Input(format!("--k: need 3 ≤ MIN ≤ MAX, got {lo}..{hi}")));
    }
    Ok((lo, hi))
}

#[derive(Clone, Debug, PartialEq)]
pub struct FuzzConfig {
    pub seed: u64,
    pub trials: usize,
    pub max_degree: u32,
    pub k_min: usize,
    pub k_max: usize,
    /// Worker threads; 0 lets the pool decide.
    pub jobs: usize,
}

/// The oval and order drawn for trial `index`.
pub fn trial_input(config: &FuzzConfig, index: u64) -> Result<(Hedgehog, usize), hedgehog::Error> {
    let mut rng = ChaCha8Rng::seed_from_u64(config.seed);
    rng.set_stream(index);
    let k = rng.random_range(config.k_min..=config.k_max);
    let h = random_convex_hedgehog(&mut rng, config.max_degree)?;
    Ok((h, k))
}

#[derive(Clone, Debug, PartialEq)]
pub enum Outcome {
    Pass,
    Violated(Vec<Violation>),
    Numerical(String),
}

#[derive(Clone, Debug, PartialEq)]
pub struct Failure {
    pub trial: u64,
    pub k: usize,
    pub outcome: Outcome,
    pub minimized: Option<TrigPoly>,
}

#[derive(Clone, Debug, PartialEq)]
pub struct FuzzSummary {
    pub config: FuzzConfig,
    pub passed: usize,
    pub violated: usize,
    pub numerical: usize,
    pub first_failure: Option<Failure>,
}

impl FuzzSummary {
    pub fn exit_code(&self) -> i32 {
        if self.violated > 0 {
            2
        } else if self.numerical > 0 {
            3
        } else {
            0
        }
    }
}

impl fmt::Display for FuzzSummary {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let c = &self.config;
        writeln!(
            f,
            "fuzz seed={} trials={} max_degree={} k={}..{}",
            c.seed, c.trials, c.max_degree, c.k_min, c.k_max
        )?;
        writeln!(f, "passed: {}", self.passed)?;
        writeln!(f, "violations: {}", self.violated)?;
        writeln!(f, "numerical failures: {}", self.numerical)?;
        if let Some(fail) = &self.first_failure {
            writeln!(f, "first failure: trial {} (k = {})", fail.trial, fail.k)?;
            match &fail.outcome {
                Outcome::Violated(vs) => {
                    for v in vs {
                        writeln!(f, "  - [{:?}] {}", v.category, v.message)?;
                    }
                }
                Outcome::Numerical(msg) => writeln!(f, "  - numerical: {msg}")?,
                Outcome::Pass => {}
            }
            if let Some(poly) = &fail.minimized {
                writeln!(f, "minimized counterexample:")?;
                writeln!(f, "{}", CurveSpec::from_poly(poly, None).to_json())?;
            }
        }
        Ok(())
    }
}

fn run_trial(h: &Hedgehog, k: usize) -> Outcome {
    match check_invariants(h, k) {
        Ok(v) if v.is_empty() => Outcome::Pass,
        Ok(v) => Outcome::Violated(v),
        Err(e) => Outcome::Numerical(e.to_string()),
    }
}

fn fails(h: &Hedgehog, k: usize) -> bool {
    h.is_convex() && run_trial(h, k) != Outcome::Pass
}

/// Greedy coefficient zeroing: drop one harmonic at a time while the input stays
/// convex and keeps failing.
pub fn minimize(h: &Hedgehog, k: usize) -> TrigPoly {
    let mut current = h.support().clone();
    loop {
        let mut shrunk = false;
        for t in current.harmonics().to_vec() {
            let candidate = current.filter_indices(|n| n != t.n, true);
            if fails(&Hedgehog::new(candidate.clone()), k) {
                current = candidate;
                shrunk = true;
                break;
            }
        }
        if !shrunk {
            return current;
        }
    }
}

/// Runs all trials on a pool of `config.jobs` threads.
pub fn run(config: &FuzzConfig) -> Result<FuzzSummary> {
    if config.trials == 0 {
        return Err(CliError::Input("--trials must be at least 1".into()));
    }
    if config.max_degree == 0 {
        return Err(CliError::Input("--max-degree must be at least 1".into()));
    }
    if config.k_min < 3 || config.k_max < config.k_min {
        return Err(CliError::Input("--k: need 3 ≤ MIN ≤ MAX".into()));
    }
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(config.jobs)
        .build()
        .map_err(|e| CliError::Input(format!("--jobs: {e}")))?;
    let results: Vec<(usize, Outcome)> = pool.install(|| {
        (0..config.trials as u64)
            .into_par_iter()
            .map(|i| match trial_input(config, i) {
                Ok((h, k)) => (k, run_trial(&h, k)),
                Err(e) => (0, Outcome::Numerical(e.to_string())),
            })
            .collect()
    });

    let mut summary = FuzzSummary {
        config: config.clone(),
        passed: 0,
        violated: 0,
        numerical: 0,
        first_failure: None,
    };
    for (i, (k, outcome)) in results.into_iter().enumerate() {
        match &outcome {
            Outcome::Pass => summary.passed += 1,
            Outcome::Violated(_) => summary.violated += 1,
            Outcome::Numerical(_) => summary.numerical += 1,
        }
        if outcome != Outcome::Pass && summary.first_failure.is_none() {
            let minimized = trial_input(config, i as u64).ok().map(|(h, _)| minimize(&h, k));
            summary.first_failure = Some(Failure { trial: i as u64, k, outcome, minimized });
        }
    }
    Ok(summary)
}
