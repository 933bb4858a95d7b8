/// Errors shared by the numerics, bounds and Monte-Carlo modules.
#[derive(Debug, thiserror::Error)]
pub enum Error {
    /// An argument lies outside the mathematical domain of the operation.
    #[error("domain error: {0}")]
    Domain(String),

    /// A root-finding bracket does not straddle a sign change.
    #[error("bracket [{lo}, {hi}] does not straddle a sign change")]
    Bracket { lo: f64, hi: f64 },

    /// A user-supplied function returned NaN or infinity where a finite
    /// value is required.
    #[error("objective evaluated to a non-finite value at {at}")]
    Evaluation { at: f64 },

    /// Quadrature failed to reach the requested tolerance.
    #[error("quadrature did not reach tolerance {tol:e} within subdivision depth {depth}")]
    Accuracy { tol: f64, depth: u32 },

    /// A finite result would overflow the representable range of `f64`.
    #[error("result overflows f64: {0}")]
    Range(String),

    /// Path generation failed (for example, the circulant embedding produced
    /// a significantly negative eigenvalue).
    #[error("sampler error: {0}")]
    Sampler(String),

    /// An internal invariant was violated; indicates a bug rather than bad input.
    #[error("internal error: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;
