//! Analytic upper and lower bounds on the expected supremum
//! M(H) = E[sup_{t≥0} (B_H(t) − t)] of fractional Brownian motion with
//! linear drift, together with Monte-Carlo machinery to validate them.

pub mod bounds;
pub mod error;
pub mod mc;
pub mod numerics;

pub use bounds::{
    combined_bounds, drift_rescale, BoundsReport, Hurst, MuBounds, OmegaBranch, OmegaBreakdown,
    SudakovConfig, SudakovForm,
};
pub use error::{Error, Result};
pub use mc::{McResult, SamplerMethod, SamplerSpec};
