use thiserror::Error;

/// Errors raised by the hedgehog toolkit.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("invalid parameter `{name}`: {reason}")]
    InvalidParameter { name: &'static str, reason: String },

    #[error("invalid trigonometric polynomial: {0}")]
    InvalidPolynomial(String),

    #[error("root refinement did not converge on bracket [{lo}, {hi}]")]
    RootRefinement { lo: f64, hi: f64 },

    #[error("numerical failure: {0}")]
    Numerical(String),

    #[error("outside theorem hypotheses: {0}")]
    OutsideHypotheses(String),

    #[error("invalid curve sampling: {0}")]
    Sampling(String),
}

impl Error {
    /// True for failures of the numerical machinery rather than of the input.
    pub fn is_numerical(&self) -> bool {
        matches!(self, Error::RootRefinement { .. } | Error::Numerical(_))
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

/// Symmetry orders below 3 are outside the toolkit (k = 2 is a different object).
pub(crate) fn check_order(k: usize) -> Result<()> {
    if k < 3 {
        return Err(Error::InvalidParameter {
            name: "k",
            reason: format!("symmetry order must be at least 3, got {k}"),
        });
    }
    Ok(())
}
