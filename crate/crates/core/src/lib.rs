//! Planar hedgehogs given by truncated trigonometric support functions.
//!
//! A hedgehog is parameterized by the outward normal angle `s` as
//! `h(s) u(s) + h'(s) u'(s)` with `u(s) = (cos s, sin s)`. Everything here works on
//! the Fourier coefficients of `h` directly, so lengths, areas, Steiner points and
//! the derived curve families come out as exact finite sums:
//!
//! - [`fourier`]: the [`TrigPoly`] value type and its linear operators.
//! - [`curvegeom`]: hedgehog geometry, curvature and singular points.
//! - [`preserving`]: kth order preserving sets and the k-central symmetral.
//! - [`midpoint`]: circumscribed equiangular k-gons and kth order midpoint sets.
//! - [`inequality`]: isoperimetric deficit, the preserving/midpoint inequalities
//!   and their stability bounds.
//! - [`oracle`]: quadrature and winding-number cross-checks for the closed forms.
//! - [`random`]: seeded generation of random ovals for fuzzing.
//!
//! All values are immutable after construction and all operations are pure.

pub mod curvegeom;
mod error;
pub mod fourier;
pub mod inequality;
pub mod midpoint;
pub mod oracle;
pub mod preserving;
pub mod random;
pub mod roots;

pub use curvegeom::{Convexity, Hedgehog, IsogonalPair, Point2, SingularPoint, SteinerDisk};
pub use error::{Error, Result};
pub use fourier::{Harmonic, TrigPoly};
pub use inequality::{CheckOptions, HypothesisMode, InequalityReport, TheoremCheck};
pub use midpoint::{CircumscribedPolygon, MidpointSet};
pub use preserving::PreservingSet;
