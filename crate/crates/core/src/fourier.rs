//! Truncated trigonometric polynomials.
//!
//! A [`TrigPoly`] stores `a0 + Σ a_n cos(ns) + b_n sin(ns)` over a finite, strictly
//! increasing set of indices `n ≥ 1`. Harmonics whose two coefficients are exactly
//! zero are dropped, so equality of values is equality of coefficient lists. No
//! tolerance is applied anywhere in this module.

use std::f64::consts::{PI, TAU};
use std::ops::{Add, Mul, Neg, Sub};

use crate::error::{check_order, Error, Result};

/// Highest derivative order accepted by [`TrigPoly::evaluate`].
pub const MAX_DERIVATIVE_ORDER: u32 = 4;

/// One term `a cos(ns) + b sin(ns)`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Harmonic {
    pub n: u32,
    pub a: f64,
    pub b: f64,
}

impl Harmonic {
    pub fn new(n: u32, a: f64, b: f64) -> Self {
        Self { n, a, b }
    }

    /// `√(a² + b²)`, the peak of `|a cos(ns) + b sin(ns)|`.
    pub fn amplitude(&self) -> f64 {
        self.a.hypot(self.b)
    }

    pub fn energy(&self) -> f64 {
        self.a * self.a + self.b * self.b
    }

    fn is_zero(&self) -> bool {
        self.a == 0.0 && self.b == 0.0
    }

    /// Coefficients of the m-th derivative: each step maps `(a, b)` to `(n b, -n a)`.
    fn derived(&self, order: u32) -> (f64, f64) {
        let n = f64::from(self.n);
        let (mut a, mut b) = (self.a, self.b);
        for _ in 0..order {
            (a, b) = (n * b, -n * a);
        }
        (a, b)
    }
}

/// Truncated Fourier series of a 2π-periodic function.
#[derive(Clone, Debug, Default, PartialEq)]
pub struct TrigPoly {
    a0: f64,
    harmonics: Vec<Harmonic>,
}

impl TrigPoly {
    /// Builds a polynomial, rejecting `n = 0`, repeated indices and non-finite values.
    pub fn new(a0: f64, harmonics: impl IntoIterator<Item = Harmonic>) -> Result<Self> {
        if !a0.is_finite() {
            return Err(Error::InvalidPolynomial(format!("constant term {a0} is not finite")));
        }
        let mut terms: Vec<Harmonic> = harmonics.into_iter().collect();
        for t in &terms {
            if t.n == 0 {
                return Err(Error::InvalidPolynomial(
                    "harmonic index 0 is reserved for the constant term".into(),
                ));
            }
            if !t.a.is_finite() || !t.b.is_finite() {
                return Err(Error::InvalidPolynomial(format!(
                    "harmonic {} has non-finite coefficients",
                    t.n
                )));
            }
        }
        terms.sort_by_key(|t| t.n);
        if let Some(w) = terms.windows(2).find(|w| w[0].n == w[1].n) {
            return Err(Error::InvalidPolynomial(format!("duplicate harmonic index {}", w[0].n)));
        }
        terms.retain(|t| !t.is_zero());
        Ok(Self { a0, harmonics: terms })
    }

    /// Internal constructor for already sorted, unique terms.
    fn from_sorted(a0: f64, mut harmonics: Vec<Harmonic>) -> Self {
        harmonics.retain(|t| !t.is_zero());
        Self { a0, harmonics }
    }

    pub fn zero() -> Self {
        Self::default()
    }

    pub fn constant(c: f64) -> Self {
        Self { a0: c, harmonics: Vec::new() }
    }

    /// `a cos(ns) + b sin(ns)`. Panics if `n == 0`.
    pub fn harmonic(n: u32, a: f64, b: f64) -> Self {
        assert!(n >= 1, "harmonic index must be positive");
        Self::from_sorted(0.0, vec![Harmonic::new(n, a, b)])
    }

    pub fn cos(n: u32, amplitude: f64) -> Self {
        Self::harmonic(n, amplitude, 0.0)
    }

    pub fn sin(n: u32, amplitude: f64) -> Self {
        Self::harmonic(n, 0.0, amplitude)
    }

    pub fn a0(&self) -> f64 {
        self.a0
    }

    pub fn harmonics(&self) -> &[Harmonic] {
        &self.harmonics
    }

    /// `(a_n, b_n)`; `n = 0` yields `(a0, 0)`.
    pub fn coefficient(&self, n: u32) -> (f64, f64) {
        if n == 0 {
            return (self.a0, 0.0);
        }
        match self.harmonics.binary_search_by_key(&n, |t| t.n) {
            Ok(i) => (self.harmonics[i].a, self.harmonics[i].b),
            Err(_) => (0.0, 0.0),
        }
    }

    pub fn degree(&self) -> u32 {
        self.harmonics.last().map_or(0, |t| t.n)
    }

    pub fn is_zero(&self) -> bool {
        self.a0 == 0.0 && self.harmonics.is_empty()
    }

    /// m-th derivative at `s`, by term-wise differentiation.
    ///
    /// Panics if `order > MAX_DERIVATIVE_ORDER`.
    pub fn evaluate(&self, s: f64, order: u32) -> f64 {
        assert!(
            order <= MAX_DERIVATIVE_ORDER,
            "derivative order {order} exceeds {MAX_DERIVATIVE_ORDER}"
        );
        let mut acc = if order == 0 { self.a0 } else { 0.0 };
        for t in &self.harmonics {
            let (a, b) = t.derived(order);
            let (sn, cs) = (f64::from(t.n) * s).sin_cos();
            acc += a * cs + b * sn;
        }
        acc
    }

    /// `f(s)`.
    pub fn value(&self, s: f64) -> f64 {
        self.evaluate(s, 0)
    }

    /// The derivative as a polynomial.
    pub fn derivative(&self) -> TrigPoly {
        let harmonics = self
            .harmonics
            .iter()
            .map(|t| {
                let (a, b) = t.derived(1);
                Harmonic::new(t.n, a, b)
            })
            .collect();
        Self::from_sorted(0.0, harmonics)
    }

    /// Values of the m-th derivative at `s_i = 2π i / count`, `i = 0..count`.
    ///
    /// Uses a phasor recurrence reseeded every 64 steps, so the round-off stays at a
    /// few ulps of the amplitude while costing one complex product per term.
    pub fn sample_uniform(&self, count: usize, order: u32) -> Vec<f64> {
        assert!(order <= MAX_DERIVATIVE_ORDER);
        let mut out = vec![if order == 0 { self.a0 } else { 0.0 }; count];
        if count == 0 {
            return out;
        }
        let step = TAU / count as f64;
        for t in &self.harmonics {
            let (a, b) = t.derived(order);
            let n = f64::from(t.n);
            let (ws, wc) = (n * step).sin_cos();
            let (mut zs, mut zc) = (0.0, 1.0);
            for (i, slot) in out.iter_mut().enumerate() {
                if i % 64 == 0 {
                    (zs, zc) = (n * step * i as f64).sin_cos();
                }
                *slot += a * zc + b * zs;
                (zc, zs) = (zc * wc - zs * ws, zs * wc + zc * ws);
            }
        }
        out
    }

    /// `g(s) = f(s + alpha)` on coefficients.
    pub fn phase_shift(&self, alpha: f64) -> TrigPoly {
        let harmonics = self
            .harmonics
            .iter()
            .map(|t| {
                let (sn, cs) = (f64::from(t.n) * alpha).sin_cos();
                Harmonic::new(t.n, t.a * cs + t.b * sn, t.b * cs - t.a * sn)
            })
            .collect();
        Self::from_sorted(self.a0, harmonics)
    }

    /// Keeps the harmonics whose index satisfies `keep`; the constant survives iff
    /// `keep_constant`.
    pub fn filter_indices(&self, keep: impl Fn(u32) -> bool, keep_constant: bool) -> TrigPoly {
        let harmonics = self.harmonics.iter().copied().filter(|t| keep(t.n)).collect();
        Self::from_sorted(if keep_constant { self.a0 } else { 0.0 }, harmonics)
    }

    /// `(1/k) Σ_{j<k} f(s + 2πj/k)`: the index filter keeping `a0` and every `n`
    /// divisible by `k`.
    pub fn directional_average(&self, k: usize) -> Result<TrigPoly> {
        check_order(k)?;
        let k = k as u32;
        Ok(self.filter_indices(|n| n % k == 0, true))
    }

    /// `(1/k) Σ_{m=1..k} f(s + (2m-1)π/k)`: keeps `n = kq` with sign `(-1)^q`.
    pub fn t_k_operator(&self, k: usize) -> Result<TrigPoly> {
        check_order(k)?;
        let k = k as u32;
        let harmonics = self
            .harmonics
            .iter()
            .filter(|t| t.n % k == 0)
            .map(|t| {
                if (t.n / k) % 2 == 1 {
                    Harmonic::new(t.n, -t.a, -t.b)
                } else {
                    *t
                }
            })
            .collect();
        Ok(Self::from_sorted(self.a0, harmonics))
    }

    /// `Σ_{j<k} f(s + 2πj/k)`.
    pub fn generalized_k_width(&self, k: usize, s: f64) -> Result<f64> {
        let avg = self.directional_average(k)?;
        Ok(k as f64 * avg.value(s))
    }

    /// `∫₀^{2π} f² ds = 2π a0² + π Σ (a_n² + b_n²)`.
    pub fn l2_norm_squared(&self) -> f64 {
        2.0 * PI * self.a0 * self.a0 + PI * self.harmonics.iter().map(Harmonic::energy).sum::<f64>()
    }

    /// `|a0| + Σ √(a_n² + b_n²)`, an upper bound for `max |f|`.
    pub fn amplitude_bound(&self) -> f64 {
        self.a0.abs() + self.harmonics.iter().map(Harmonic::amplitude).sum::<f64>()
    }

    /// Coefficient-wise combination of two polynomials.
    fn zip_with(&self, other: &TrigPoly, op: impl Fn(f64, f64) -> f64) -> TrigPoly {
        let mut out = Vec::with_capacity(self.harmonics.len() + other.harmonics.len());
        let (mut i, mut j) = (0, 0);
        let (lhs, rhs) = (&self.harmonics, &other.harmonics);
        while i < lhs.len() || j < rhs.len() {
            let take_l = j >= rhs.len() || (i < lhs.len() && lhs[i].n <= rhs[j].n);
            let take_r = i >= lhs.len() || (j < rhs.len() && rhs[j].n <= lhs[i].n);
            let n = if take_l { lhs[i].n } else { rhs[j].n };
            let (la, lb) = if take_l { (lhs[i].a, lhs[i].b) } else { (0.0, 0.0) };
            let (ra, rb) = if take_r { (rhs[j].a, rhs[j].b) } else { (0.0, 0.0) };
            out.push(Harmonic::new(n, op(la, ra), op(lb, rb)));
            i += usize::from(take_l);
            j += usize::from(take_r);
        }
        Self::from_sorted(op(self.a0, other.a0), out)
    }

    pub fn scaled(&self, c: f64) -> TrigPoly {
        let harmonics = self
            .harmonics
            .iter()
            .map(|t| Harmonic::new(t.n, c * t.a, c * t.b))
            .collect();
        Self::from_sorted(c * self.a0, harmonics)
    }
}

impl Add for &TrigPoly {
    type Output = TrigPoly;
    fn add(self, rhs: &TrigPoly) -> TrigPoly {
        self.zip_with(rhs, |a, b| a + b)
    }
}

impl Add for TrigPoly {
    type Output = TrigPoly;
    fn add(self, rhs: TrigPoly) -> TrigPoly {
        &self + &rhs
    }
}

impl Sub for &TrigPoly {
    type Output = TrigPoly;
    fn sub(self, rhs: &TrigPoly) -> TrigPoly {
        self.zip_with(rhs, |a, b| a - b)
    }
}

impl Sub for TrigPoly {
    type Output = TrigPoly;
    fn sub(self, rhs: TrigPoly) -> TrigPoly {
        &self - &rhs
    }
}

impl Neg for &TrigPoly {
    type Output = TrigPoly;
    fn neg(self) -> TrigPoly {
        self.scaled(-1.0)
    }
}

impl Mul<f64> for &TrigPoly {
    type Output = TrigPoly;
    fn mul(self, c: f64) -> TrigPoly {
        self.scaled(c)
    }
}
