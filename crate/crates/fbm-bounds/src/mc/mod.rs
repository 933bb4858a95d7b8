//! Monte-Carlo simulation of the increment process and estimators for the
//! quantities the analytic bounds constrain.
//!
//! Sampling is exact in distribution on the grid: circulant embedding of
//! the stationary increment covariance (FFT-based, the default) or a dense
//! Cholesky factor on small grids for cross-checking. Paths are addressed
//! by (seed, path index) through independent counter-based RNG streams,
//! so every estimate is reproducible bit-for-bit regardless of thread
//! scheduling, and any single path can be regenerated on its own.
//!
//! Estimators:
//! - [`estimate_sup_drift`]: mean supremum of the drifted path over a
//!   finite horizon.
//! - [`adaptive_horizon`]: the same statistic with the horizon doubled
//!   until the supremum stops growing, for all-time supremum targets.
//! - [`estimate_mu_moment`]: moments of the supremum over the unit
//!   interval.
//! - [`estimate_timechanged_tail`]: ruin probability of the variance-clock
//!   comparison process against its power barrier.

mod estimate;
mod sampler;

pub use estimate::{
    adaptive_horizon, estimate_mu_moment, estimate_sup_drift, estimate_timechanged_tail, McResult,
};
pub use sampler::{FgnSampler, SamplerMethod, SamplerSpec, Scratch};
