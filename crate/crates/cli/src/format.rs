//! Number formatting: 15 significant digits, plus an exact form `p π^m / q` when
//! the value is recognizably a rational multiple of `1`, `π` or `π²`.

use std::f64::consts::PI;

/// Largest denominator tried by [`exact_form`].
pub const MAX_DENOMINATOR: i64 = 1_000_000;

/// Relative tolerance on `value / π^m` for a rational match.
const MATCH_TOL: f64 = 1e-14;

/// A match must satisfy `q² · tolerance ≤ CHANCE_BOUND`; rationals with larger
/// denominators lie so densely that agreement within the tolerance says nothing.
const CHANCE_BOUND: f64 = 1e-4;

/// Decimal with 15 significant digits, trailing zeros trimmed.
pub fn decimal(x: f64) -> String {
    if x == 0.0 {
        return "0".into();
    }
    if !x.is_finite() {
        return format!("{x}");
    }
    let magnitude = x.abs().log10().floor() as i32;
    if !(-5..=15).contains(&magnitude) {
        let s = format!("{x:.14e}");
        let (mantissa, exp) = s.split_once('e').expect("exponent form");
        return format!("{}e{exp}", trim(mantissa));
    }
    let places = (14 - magnitude).max(0) as usize;
    trim(&format!("{x:.places$}")).to_string()
}

fn trim(s: &str) -> &str {
    if s.contains('.') {
        s.trim_end_matches('0').trim_end_matches('.')
    } else {
        s
    }
}

/// Best rational approximation `p/q` of `x` with `q ≤ max_q`, by continued fractions.
fn rational(x: f64, tol: f64, max_q: i64) -> Option<(i64, i64)> {
    let (mut h0, mut h1) = (0i64, 1i64);
    let (mut k0, mut k1) = (1i64, 0i64);
    let mut r = x;
    for _ in 0..64 {
        let a = r.floor();
        if a.abs() > 1e15 {
            return None;
        }
        let a = a as i64;
        let h2 = a.checked_mul(h1)?.checked_add(h0)?;
        let k2 = a.checked_mul(k1)?.checked_add(k0)?;
        if k2 > max_q {
            return None;
        }
        if (h2 as f64 / k2 as f64 - x).abs() <= tol {
            return Some((h2, k2));
        }
        (h0, h1, k0, k1) = (h1, h2, k1, k2);
        let frac = r - a as f64;
        if frac == 0.0 {
            return None;
        }
        r = 1.0 / frac;
    }
    None
}

/// `p π^m / q` rendering, e.g. `325225π/18`, `-35π/2`, `24604π²/9`, `67/3`.
pub fn exact_form(x: f64) -> Option<String> {
    if !x.is_finite() {
        return None;
    }
    if x == 0.0 {
        return Some("0".into());
    }
    let mut best: Option<(i64, i64, i32)> = None;
    for m in 0..=2 {
        let r = x / PI.powi(m);
        let tol = MATCH_TOL * r.abs().max(1.0);
        let max_q = ((CHANCE_BOUND / tol).sqrt() as i64).min(MAX_DENOMINATOR);
        if let Some((p, q)) = rational(r, tol, max_q) {
            if p != 0 && best.is_none_or(|(_, bq, _)| q < bq) {
                best = Some((p, q, m));
            }
        }
    }
    let (p, q, m) = best?;
    let power = ["", "π", "π²"][m as usize];
    let numerator = match (p, m) {
        (1, 1 | 2) => power.to_string(),
        (-1, 1 | 2) => format!("-{power}"),
        _ => format!("{p}{power}"),
    };
    Some(if q == 1 { numerator } else { format!("{numerator}/{q}") })
}

/// `exact = decimal` when an exact form exists and differs from the decimal,
/// otherwise the decimal alone.
pub fn quantity(x: f64) -> String {
    let dec = decimal(x);
    match exact_form(x) {
        Some(exact) if exact != dec => format!("{exact} = {dec}"),
        _ => dec,
    }
}
