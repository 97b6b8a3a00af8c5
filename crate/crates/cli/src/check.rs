//! Inequality reports.

use hedgehog::inequality::{full_report, CheckOptions, HypothesisMode, DEFAULT_EQUALITY_TOL};
use hedgehog::InequalityReport;

use crate::error::{CliError, Result};
use crate::format::quantity;
use crate::spec::CurveSpec;

pub const TOLERANCE_VAR: &str = "HEDGEHOG_TOL";

/// Parses the equality tolerance override; `None` gives the default.
pub fn parse_tolerance(value: Option<&str>) -> Result<f64> {
    let Some(text) = value else {
        return Ok(DEFAULT_EQUALITY_TOL);
    };
    match text.trim().parse::<f64>() {
        Ok(t) if t > 0.0 && t.is_finite() => Ok(t),
        _ => Err(CliError::Input(format!("{TOLERANCE_VAR}: expected a positive decimal, got '{text}'"))),
    }
}

pub fn tolerance_from_env() -> Result<f64> {
    parse_tolerance(std::env::var(TOLERANCE_VAR).ok().as_deref())
}

pub fn check(spec: &CurveSpec, k: usize, unchecked: bool, equality_tol: f64) -> Result<InequalityReport> {
    let h = spec.to_hedgehog()?;
    let mode = if unchecked { HypothesisMode::Unchecked } else { HypothesisMode::Strict };
    Ok(full_report(&h, k, &CheckOptions { equality_tol, mode })?)
}

pub fn to_json(report: &InequalityReport) -> String {
    serde_json::to_string_pretty(report).expect("report serializes")
}

pub fn to_text(r: &InequalityReport) -> String {
    let rows = [
        ("k", r.k.to_string()),
        ("L² - 4πA", quantity(r.deficit)),
        ("4π|A_Pk|", quantity(r.abs_area_preserving)),
        ("2π|A_Ω|", quantity(r.abs_area_midpoint_term)),
        ("slack (preserving)", quantity(r.slack_thm1)),
        ("slack (preserving + midpoint)", quantity(r.slack_thm2)),
        ("equality (preserving)", r.equality_thm1.to_string()),
        ("equality (preserving + midpoint)", r.equality_thm2.to_string()),
        ("d∞(O, P_k + D)", quantity(r.d_inf)),
        ("d₂(O, P_k + D)", quantity(r.d_2)),
        ("d∞ stability bound", quantity(r.stab1_bound)),
        ("d₂ stability bound", quantity(r.stab2_bound)),
        ("d∞ bound vs disk", quantity(r.corollary_bounds.0)),
        ("d₂ bound vs disk", quantity(r.corollary_bounds.1)),
    ];
    let mut out = String::new();
    if !r.within_hypotheses {
        out.push_str("note: outside theorem hypotheses (not an oval); values are formal\n");
    }
    for (name, value) in rows {
        out.push_str(&format!("{name:<34}{value}\n"));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn tolerance_parsing() {
        assert_eq!(parse_tolerance(None).unwrap(), 1e-9);
        assert_eq!(parse_tolerance(Some("1e-6")).unwrap(), 1e-6);
        assert!(parse_tolerance(Some("-1")).is_err());
        assert!(parse_tolerance(Some("abc")).is_err());
    }

    #[test]
    fn equality_case() {
        let spec = CurveSpec::from_expr("130 + sin(5s) + sin(10s)").unwrap();
        let r = check(&spec, 5, false, 1e-9).unwrap();
        assert!(r.equality_thm1 && r.equality_thm2);
        assert!(to_text(&r).contains("equality (preserving)"));
    }

    #[test]
    fn nonconvex_requires_unchecked() {
        let spec = CurveSpec::from_expr("10 + sin(2s) + cos(3s) + cos(6s)").unwrap();
        let err = check(&spec, 3, false, 1e-9).unwrap_err();
        assert_eq!(err.exit_code(), 1);
        assert!(err.to_string().contains("outside theorem hypotheses"));
        let r = check(&spec, 3, true, 1e-9).unwrap();
        assert!(to_text(&r).starts_with("note: outside theorem hypotheses"));
    }
}
