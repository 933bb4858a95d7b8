//! Analytic bounds on M(H) = E[sup_{t≥0}(B_H(t) − t)].
//!
//! Lower bounds: `lower_l1` (all H), `lower_l2` and `lower_l3` (H ≤ 1/2).
//! Upper bounds: `upper_u1` (H ≥ 1/2), `upper_u2` and its refinement
//! `upper_u2_sudakov` (H ≤ 1/2). [`combined_bounds`] evaluates and merges
//! everything applicable at a given H; [`drift_rescale`] moves any of these
//! from unit drift to drift c.
//!
//! Supporting machinery: the discrete-supremum moment bounds [`mu_bounds`],
//! the optimized envelope constant [`omega`] with its independent
//! cross-check [`omega_direct`], and the tail-rate normalizer [`lambda_u`].

mod combined;
mod hurst;
mod lambda;
mod mu;
mod omega;
mod special;

pub use combined::{
    combined_bounds, drift_rescale, upper_u2, upper_u2_sudakov, upper_u2_sudakov_with,
    upper_u2_with, BoundsReport,
};
pub use hurst::Hurst;
pub use lambda::lambda_u;
pub use mu::{
    c_minus, mu_bounds, mu_bounds_with, mu_one_upper_borovkov, mu_one_upper_sudakov,
    mu_one_upper_sudakov_with, MuBounds, SudakovConfig, SudakovForm, C_PLUS,
};
pub use omega::{
    h_zero, omega, omega1, omega2, omega_direct, psi, tau_circ, OmegaBranch, OmegaBreakdown,
};
pub use special::{kappa, lower_l1, lower_l2, lower_l3, nu, upper_u1};
