//! Seeded random ovals.

use std::f64::consts::TAU;

use rand::Rng;

use crate::curvegeom::Hedgehog;
use crate::error::{Error, Result};
use crate::fourier::{Harmonic, TrigPoly};

/// Draws before [`random_convex_hedgehog`] gives up.
pub const MAX_ATTEMPTS: usize = 10_000;

/// Probability that a given index `2..=max_degree` carries a harmonic.
const INCLUSION: f64 = 0.75;

fn random_harmonic<R: Rng + ?Sized>(rng: &mut R, n: u32, amplitude: f64) -> Harmonic {
    let phase = rng.random::<f64>() * TAU;
    let (sn, cs) = phase.sin_cos();
    Harmonic::new(n, amplitude * cs, amplitude * sn)
}

/// A random support function of degree at most `max_degree` whose radius of
/// curvature is positive.
///
/// `a0` is uniform in `[10, 200]`; the translation term has amplitude up to
/// `a0 / 2`; each higher index is present with probability 3/4, with amplitude
/// `0.3 a0 U / n²` and uniform phase. Draws that are not convex are rejected.
pub fn random_convex_hedgehog<R: Rng + ?Sized>(rng: &mut R, max_degree: u32) -> Result<Hedgehog> {
    if max_degree == 0 {
        return Err(Error::InvalidParameter {
            name: "max_degree",
            reason: "must be at least 1".into(),
        });
    }
    for _ in 0..MAX_ATTEMPTS {
        let a0 = rng.random_range(10.0..=200.0);
        let shift = 0.5 * a0 * rng.random::<f64>();
        let mut harmonics = vec![random_harmonic(rng, 1, shift)];
        for n in 2..=max_degree {
            if rng.random_bool(INCLUSION) {
                let nf = f64::from(n);
                let amplitude = 0.3 * a0 * rng.random::<f64>() / (nf * nf);
                harmonics.push(random_harmonic(rng, n, amplitude));
            }
        }
        let h = Hedgehog::new(TrigPoly::new(a0, harmonics)?);
        if h.is_convex() {
            return Ok(h);
        }
    }
    Err(Error::Sampling(format!("no convex draw in {MAX_ATTEMPTS} attempts")))
}
