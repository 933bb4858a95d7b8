use super::hurst::Hurst;
use crate::error::{Error, Result};
use crate::numerics::{abs_normal_moment, minimize_1d, Bracket};

/// Margin kept between optimization variables and the boundary of their
/// open domains.
pub(crate) const EDGE_MARGIN: f64 = 1e-6;

/// Upper constant of the discrete-supremum moment estimate: 1.695.
pub const C_PLUS: f64 = 1.695;

/// Lower constant (2 √(π e ln 2))^{−1} ≈ 0.205511 of the small-ball
/// estimate on μ(H, 1).
pub fn c_minus() -> f64 {
    1.0 / (2.0 * (std::f64::consts::PI * std::f64::consts::E * std::f64::consts::LN_2).sqrt())
}

/// Which argument the entropy-refinement remainder term evaluates the
/// base bound at.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SudakovForm {
    /// Remainder uses the bound at the target index H itself.
    TargetIndex,
    /// Remainder uses the bound at the splitting index H°.
    SplitIndex,
}

/// Tunables of the entropy-based refinement of the first-moment upper
/// bound. `c_half` is the constant substituted for μ(1/2, 1); the default
/// √(π/2) is its proven upper estimate, while √(2/π) is the exact value.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SudakovConfig {
    pub c_half: f64,
    pub form: SudakovForm,
}

impl Default for SudakovConfig {
    fn default() -> Self {
        Self {
            c_half: (std::f64::consts::PI / 2.0).sqrt(),
            form: SudakovForm::TargetIndex,
        }
    }
}

/// Two-sided bounds on μ(H, α) = E(sup_{t∈\[0,1\]} B_H(t))^α-type moments.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MuBounds {
    pub h: Hurst,
    pub alpha: f64,
    /// (C⁻/√H)^α.
    pub lower: f64,
    /// For α = 1 the dyadic-chaining bound; for α > 1 the moment transfer
    /// applied to the best available first-moment bound.
    pub upper_borovkov: f64,
    /// The entropy refinement, reported only for α = 1 where the two
    /// routes stay distinct.
    pub upper_sudakov: Option<f64>,
    pub upper_combined: f64,
}

/// First-moment upper bound C⁺ √(L/2) with L = log2 ⌈2^{2/H}⌉ for H ≤ 1/2.
///
/// The ceiling is evaluated exactly while 2^{2/H} stays inside the 52-bit
/// integer range; beyond that L is computed as 2/H + log2(1 + 2^{−2/H}),
/// which agrees to machine precision.
pub fn mu_one_upper_borovkov(h: Hurst) -> Result<f64> {
    if !h.is_subdiffusive() {
        return Err(Error::Domain(format!(
            "mu_one_upper_borovkov requires H <= 1/2, got {h}"
        )));
    }
    let p = 2.0 / h.value();
    let l = if p <= 52.0 {
        let ceil = 2f64.powf(p).ceil() as u64;
        (ceil as f64).log2()
    } else {
        p + 2f64.powf(-p).ln_1p() / std::f64::consts::LN_2
    };
    Ok(C_PLUS * (0.5 * l).sqrt())
}

/// Exponent-transfer weight A(H | H°) = 2(H − H°)/(1 − 2H°).
fn a_factor(h: f64, h0: f64) -> f64 {
    2.0 * (h - h0) / (1.0 - 2.0 * h0)
}

fn sudakov_objective(h: Hurst, h0: f64, config: &SudakovConfig) -> Result<f64> {
    let a = a_factor(h.value(), h0);
    let base = match config.form {
        SudakovForm::TargetIndex => mu_one_upper_borovkov(h)?,
        SudakovForm::SplitIndex => mu_one_upper_borovkov(Hurst::new(h0)?)?,
    };
    Ok(a.sqrt() * config.c_half + (1.0 - a).max(0.0).sqrt() * base)
}

/// Entropy-based refinement of the first-moment upper bound: the infimum
/// over splitting indices H° ∈ (0, H) of
/// √A(H|H°) · c_half + √(1 − A(H|H°)) · (base bound), H ≤ 1/2.
///
/// Returns +∞ when H is too close to 0 for any admissible splitting index.
pub fn mu_one_upper_sudakov_with(h: Hurst, config: &SudakovConfig) -> Result<f64> {
    if !h.is_subdiffusive() {
        return Err(Error::Domain(format!(
            "mu_one_upper_sudakov requires H <= 1/2, got {h}"
        )));
    }
    let hv = h.value();
    if hv <= 2.0 * EDGE_MARGIN {
        return Ok(f64::INFINITY);
    }
    let bracket = Bracket::new(EDGE_MARGIN, hv - EDGE_MARGIN)?;
    let result = minimize_1d(
        |h0| sudakov_objective(h, h0, config).expect("objective finite inside bracket"),
        bracket,
        1e-10,
    )?;
    Ok(result.value)
}

/// [`mu_one_upper_sudakov_with`] at the default configuration.
pub fn mu_one_upper_sudakov(h: Hurst) -> Result<f64> {
    mu_one_upper_sudakov_with(h, &SudakovConfig::default())
}

/// Two-sided bounds on the α-th supremum moment over the unit interval,
/// H ≤ 1/2,
/// α ≥ 1. For α = 1 both upper routes are reported separately; for α > 1
/// the moment-transfer inequality
/// μ̄^α + max{1, 2^{α−2}} α √(π/2) (μ̄^{α−1} + E|N|^{α−1})
/// is applied to the combined first-moment bound μ̄.
pub fn mu_bounds_with(h: Hurst, alpha: f64, config: &SudakovConfig) -> Result<MuBounds> {
    if !h.is_subdiffusive() {
        return Err(Error::Domain(format!(
            "mu_bounds requires H <= 1/2, got {h}"
        )));
    }
    if !alpha.is_finite() || alpha < 1.0 {
        return Err(Error::Domain(format!(
            "mu_bounds requires alpha >= 1, got {alpha}"
        )));
    }
    let hv = h.value();
    let lower = (alpha * (c_minus().ln() - 0.5 * hv.ln())).exp();
    let bor = mu_one_upper_borovkov(h)?;
    let sud = mu_one_upper_sudakov_with(h, config)?;
    let first_moment = bor.min(sud);
    if alpha == 1.0 {
        return Ok(MuBounds {
            h,
            alpha,
            lower,
            upper_borovkov: bor,
            upper_sudakov: Some(sud),
            upper_combined: first_moment,
        });
    }
    let factor = 1f64.max(2f64.powf(alpha - 2.0));
    let sqrt_half_pi = (std::f64::consts::PI / 2.0).sqrt();
    let upper = first_moment.powf(alpha)
        + factor
            * alpha
            * sqrt_half_pi
            * (first_moment.powf(alpha - 1.0) + abs_normal_moment(alpha - 1.0)?);
    if !upper.is_finite() {
        return Err(Error::Range(format!(
            "moment bound overflows f64 at H = {hv}, alpha = {alpha}"
        )));
    }
    Ok(MuBounds {
        h,
        alpha,
        lower,
        upper_borovkov: upper,
        upper_sudakov: None,
        upper_combined: upper,
    })
}

/// [`mu_bounds_with`] at the default configuration.
pub fn mu_bounds(h: Hurst, alpha: f64) -> Result<MuBounds> {
    mu_bounds_with(h, alpha, &SudakovConfig::default())
}
