//! Curve input: a JSON document or a short expression.
//!
//! ```json
//! {"a0": 137, "harmonics": [{"n": 2, "a": 21, "b": 0}], "label": "oval"}
//! ```
//!
//! Expressions are sums of `C`, `A*cos(N s)` and `A*sin(N s)` terms joined by `+`
//! or `-`. `A` and `C` are decimals or rationals `p/q`, optionally parenthesized;
//! `N` is a positive integer and may be omitted for `N = 1`. Each index may appear
//! once per function and the constant at most once.

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::path::Path;

use hedgehog::{Harmonic, Hedgehog, TrigPoly};
use serde::{Deserialize, Serialize};

use crate::error::{CliError, Result};

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct HarmonicSpec {
    pub n: u32,
    #[serde(default)]
    pub a: f64,
    #[serde(default)]
    pub b: f64,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CurveSpec {
    pub a0: f64,
    #[serde(default)]
    pub harmonics: Vec<HarmonicSpec>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub label: Option<String>,
}

impl CurveSpec {
    pub fn from_json(text: &str) -> Result<Self> {
        let spec: CurveSpec = serde_json::from_str(text).map_err(|e| {
            CliError::Input(format!("line {}, column {}: {e}", e.line(), e.column()))
        })?;
        spec.validate()?;
        Ok(spec)
    }

    pub fn from_file(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path).map_err(|e| CliError::io(path, e))?;
        Self::from_json(&text).map_err(|e| match e {
            CliError::Input(msg) => CliError::Input(format!("{}: {msg}", path.display())),
            other => other,
        })
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("plain data serializes")
    }

    fn validate(&self) -> Result<()> {
        if !self.a0.is_finite() {
            return Err(CliError::Input("field a0: must be finite".into()));
        }
        let mut seen = BTreeMap::new();
        for (i, h) in self.harmonics.iter().enumerate() {
            if h.n == 0 {
                return Err(CliError::Input(format!(
                    "field harmonics[{i}].n: must be at least 1 (use a0 for the constant)"
                )));
            }
            if !h.a.is_finite() || !h.b.is_finite() {
                return Err(CliError::Input(format!("field harmonics[{i}]: coefficients must be finite")));
            }
            if let Some(j) = seen.insert(h.n, i) {
                return Err(CliError::Input(format!(
                    "field harmonics[{i}].n: duplicate index {} (also harmonics[{j}])",
                    h.n
                )));
            }
        }
        Ok(())
    }

    pub fn to_poly(&self) -> Result<TrigPoly> {
        self.validate()?;
        let harmonics = self.harmonics.iter().map(|h| Harmonic::new(h.n, h.a, h.b));
        Ok(TrigPoly::new(self.a0, harmonics)?)
    }

    pub fn to_hedgehog(&self) -> Result<Hedgehog> {
        Ok(Hedgehog::new(self.to_poly()?))
    }

    /// The canonical spec of a polynomial: harmonics sorted, zero terms omitted.
    pub fn from_poly(poly: &TrigPoly, label: Option<String>) -> Self {
        let harmonics = poly
            .harmonics()
            .iter()
            .map(|h| HarmonicSpec { n: h.n, a: h.a, b: h.b })
            .collect();
        CurveSpec { a0: poly.a0(), harmonics, label }
    }

    /// `137 + 21*cos(2s) + …`, parseable by [`CurveSpec::from_expr`].
    pub fn to_expr(&self) -> String {
        let mut out = format!("{}", self.a0);
        let mut term = |c: f64, f: &str, n: u32| {
            if c != 0.0 {
                let sign = if c < 0.0 { '-' } else { '+' };
                let _ = match c.abs() {
                    1.0 => write!(out, " {sign} {f}({n}s)"),
                    m => write!(out, " {sign} {m}*{f}({n}s)"),
                };
            }
        };
        for h in &self.harmonics {
            term(h.a, "cos", h.n);
            term(h.b, "sin", h.n);
        }
        out
    }

    pub fn from_expr(text: &str) -> Result<Self> {
        Parser::new(text).parse()
    }
}

#[derive(Clone, Copy, Debug, PartialEq)]
enum Func {
    Cos,
    Sin,
}

struct Parser<'a> {
    src: &'a str,
    pos: usize,
}

impl<'a> Parser<'a> {
    fn new(src: &'a str) -> Self {
        Self { src, pos: 0 }
    }

    fn error(&self, msg: impl AsRef<str>) -> CliError {
        CliError::Input(format!("expression column {}: {}", self.pos + 1, msg.as_ref()))
    }

    fn skip_ws(&mut self) {
        while self.peek().is_some_and(char::is_whitespace) {
            self.pos += 1;
        }
    }

    fn peek(&self) -> Option<char> {
        self.src[self.pos..].chars().next()
    }

    fn eat(&mut self, c: char) -> bool {
        self.skip_ws();
        if self.peek() == Some(c) {
            self.pos += c.len_utf8();
            true
        } else {
            false
        }
    }

    fn expect(&mut self, c: char) -> Result<()> {
        if self.eat(c) {
            Ok(())
        } else {
            Err(self.error(format!("expected '{c}'")))
        }
    }

    fn parse(mut self) -> Result<CurveSpec> {
        let mut constant: Option<f64> = None;
        let mut coeffs: BTreeMap<u32, (Option<f64>, Option<f64>)> = BTreeMap::new();
        let mut first = true;
        loop {
            self.skip_ws();
            if self.peek().is_none() {
                if first {
                    return Err(self.error("empty expression"));
                }
                break;
            }
            let sign = if self.eat('+') {
                1.0
            } else if self.eat('-') {
                -1.0
            } else if first {
                1.0
            } else {
                return Err(self.error("expected '+' or '-'"));
            };
            first = false;
            let start = self.pos;
            let (value, trig) = self.term()?;
            let value = sign * value;
            match trig {
                None => {
                    if constant.replace(value).is_some() {
                        self.pos = start;
                        return Err(self.error("second constant term"));
                    }
                }
                Some((func, n)) => {
                    let slot = coeffs.entry(n).or_default();
                    let target = match func {
                        Func::Cos => &mut slot.0,
                        Func::Sin => &mut slot.1,
                    };
                    if target.replace(value).is_some() {
                        self.pos = start;
                        let name = if func == Func::Cos { "cos" } else { "sin" };
                        return Err(self.error(format!("duplicate term {name}({n}s)")));
                    }
                }
            }
        }
        let harmonics = coeffs
            .into_iter()
            .map(|(n, (a, b))| HarmonicSpec { n, a: a.unwrap_or(0.0), b: b.unwrap_or(0.0) })
            .collect();
        Ok(CurveSpec { a0: constant.unwrap_or(0.0), harmonics, label: None })
    }

    /// `C`, `A*f(N s)` or `f(N s)`.
    fn term(&mut self) -> Result<(f64, Option<(Func, u32)>)> {
        self.skip_ws();
        if let Some(func) = self.func_name() {
            return Ok((1.0, Some((func, self.argument()?))));
        }
        let value = self.coefficient()?;
        if self.eat('*') {
            self.skip_ws();
            let func = self.func_name().ok_or_else(|| self.error("expected cos or sin"))?;
            return Ok((value, Some((func, self.argument()?))));
        }
        Ok((value, None))
    }

    fn func_name(&mut self) -> Option<Func> {
        let rest = &self.src[self.pos..];
        let func = if rest.starts_with("cos") {
            Func::Cos
        } else if rest.starts_with("sin") {
            Func::Sin
        } else {
            return None;
        };
        self.pos += 3;
        Some(func)
    }

    /// `(N s)`, `(N*s)`, `(Ns)` or `(s)`.
    fn argument(&mut self) -> Result<u32> {
        self.expect('(')?;
        self.skip_ws();
        let n = if self.peek().is_some_and(|c| c.is_ascii_digit()) {
            let digits = self.digits();
            let n: u32 = digits.parse().map_err(|_| self.error("harmonic index out of range"))?;
            self.eat('*');
            n
        } else {
            1
        };
        if n == 0 {
            return Err(self.error("harmonic index must be at least 1"));
        }
        self.expect('s')?;
        self.expect(')')?;
        Ok(n)
    }

    fn digits(&mut self) -> &'a str {
        let start = self.pos;
        while self.peek().is_some_and(|c| c.is_ascii_digit()) {
            self.pos += 1;
        }
        &self.src[start..self.pos]
    }

    /// A decimal or `p/q`, optionally in parentheses.
    fn coefficient(&mut self) -> Result<f64> {
        if self.eat('(') {
            let v = self.coefficient()?;
            self.expect(')')?;
            return Ok(v);
        }
        let p = self.decimal()?;
        if self.eat('/') {
            let q = self.decimal()?;
            if q == 0.0 {
                return Err(self.error("zero denominator"));
            }
            return Ok(p / q);
        }
        Ok(p)
    }

    fn decimal(&mut self) -> Result<f64> {
        self.skip_ws();
        let start = self.pos;
        self.digits();
        if self.peek() == Some('.') {
            self.pos += 1;
            self.digits();
        }
        if matches!(self.peek(), Some('e' | 'E')) {
            self.pos += 1;
            if matches!(self.peek(), Some('+' | '-')) {
                self.pos += 1;
            }
            self.digits();
        }
        let text = &self.src[start..self.pos];
        if text.is_empty() {
            return Err(self.error("expected a number, cos or sin"));
        }
        text.parse().map_err(|_| {
            self.pos = start;
            self.error(format!("malformed number '{text}'"))
        })
    }
}
