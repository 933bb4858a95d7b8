//! Self-contained special functions, root finding, minimization and
//! quadrature used by the bound evaluations.
//!
//! Everything here is deterministic: the same inputs produce the same
//! bits on every run and every thread count.

mod gamma;
mod minimize;
mod normal;
mod quad;
mod root;

pub use gamma::{abs_normal_moment, ln_gamma};
pub use minimize::{minimize_1d, MinimizeResult};
pub use normal::std_normal_cdf;
pub use quad::integrate_semiinfinite;
pub use root::{find_root, Bracket};
