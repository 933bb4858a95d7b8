use super::hurst::Hurst;
use super::mu::{mu_bounds_with, SudakovConfig, EDGE_MARGIN};
use super::omega::omega;
use super::special::{lower_l1, lower_l2, lower_l3, upper_u1};
use crate::error::{Error, Result};
use crate::numerics::{minimize_1d, Bracket};

/// Every individual bound on M(H) = E[sup_{t≥0}(B_H(t) − t)] together with
/// the per-regime combination. Bounds that do not apply at the given H are
/// `None`; `l1` applies everywhere.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BoundsReport {
    pub h: Hurst,
    pub l1: f64,
    pub l2: Option<f64>,
    pub l3: Option<f64>,
    pub lower_combined: f64,
    pub u1: Option<f64>,
    pub u2: Option<f64>,
    pub u2_sudakov: Option<f64>,
    pub u2_circ: Option<f64>,
    pub upper_combined: f64,
    pub ratio: f64,
}

/// Upper bound ω(H) · (upper bound on μ(H, 1/(1−H))) for H ≤ 1/2.
pub fn upper_u2_with(h: Hurst, config: &SudakovConfig) -> Result<f64> {
    let alpha = 1.0 / (1.0 - h.value());
    let envelope = omega(h)?.omega;
    let moment = mu_bounds_with(h, alpha, config)?.upper_combined;
    let value = envelope * moment;
    if value.is_finite() {
        Ok(value)
    } else {
        Err(Error::Range(format!("upper_u2 overflows f64 at H = {h}")))
    }
}

/// [`upper_u2_with`] at the default configuration.
pub fn upper_u2(h: Hurst) -> Result<f64> {
    upper_u2_with(h, &SudakovConfig::default())
}

/// Scale factor γ(H | H°) = ((1−2H)/(1−2H°))^{(1−2H°)/(2(1−H°))} that
/// transfers an upper bound at H° < H to one at H ≤ 1/2.
fn gamma_factor(h: f64, h0: f64) -> f64 {
    let e = (1.0 - 2.0 * h0) / (2.0 * (1.0 - h0));
    ((1.0 - 2.0 * h) / (1.0 - 2.0 * h0)).powf(e)
}

/// Refined upper bound 1/2 + inf_{H° ∈ (0, H)} γ(H | H°) · U₂(H°) for
/// H ≤ 1/2. Equals exactly 1/2 at H = 1/2 (the scale factor vanishes) and
/// +∞ when H is too close to 0 for any admissible splitting index.
pub fn upper_u2_sudakov_with(h: Hurst, config: &SudakovConfig) -> Result<f64> {
    if !h.is_subdiffusive() {
        return Err(Error::Domain(format!(
            "upper_u2_sudakov requires H <= 1/2, got {h}"
        )));
    }
    let hv = h.value();
    if hv <= 2.0 * EDGE_MARGIN {
        return Ok(f64::INFINITY);
    }
    let bracket = Bracket::new(EDGE_MARGIN, hv - EDGE_MARGIN)?;
    let result = minimize_1d(
        |h0| {
            let g = gamma_factor(hv, h0);
            if g == 0.0 {
                // Avoid evaluating U₂ when the factor already kills the term.
                return 0.0;
            }
            let u2 = upper_u2_with(Hurst::new(h0).expect("h0 inside (0, 1/2)"), config)
                .expect("upper_u2 finite on the splitting range");
            g * u2
        },
        bracket,
        1e-10,
    )?;
    Ok(0.5 + result.value)
}

/// [`upper_u2_sudakov_with`] at the default configuration.
pub fn upper_u2_sudakov(h: Hurst) -> Result<f64> {
    upper_u2_sudakov_with(h, &SudakovConfig::default())
}

/// Evaluates every applicable bound at H and combines them per regime:
/// max{L₂, L₃} and min{U₂, U₂'} on (0, 1/2], L₁ and U₁ on [1/2, 1), with
/// both regimes active at exactly 1/2.
pub fn combined_bounds(h: Hurst) -> Result<BoundsReport> {
    let config = SudakovConfig::default();
    let l1 = lower_l1(h)?;
    let (l2, l3, u2, u2s, u2c) = if h.is_subdiffusive() {
        let l2 = lower_l2(h)?;
        let l3 = lower_l3(h)?;
        let u2 = upper_u2_with(h, &config)?;
        let u2s = upper_u2_sudakov_with(h, &config)?;
        (Some(l2), Some(l3), Some(u2), Some(u2s), Some(u2.min(u2s)))
    } else {
        (None, None, None, None, None)
    };
    let u1 = if h.is_superdiffusive() {
        Some(upper_u1(h)?)
    } else {
        None
    };

    let mut lower = f64::NEG_INFINITY;
    if let (Some(l2), Some(l3)) = (l2, l3) {
        lower = l2.max(l3);
    }
    if h.is_superdiffusive() {
        lower = lower.max(l1);
    }
    let upper = match (u2c, u1) {
        (Some(a), Some(b)) => a.min(b),
        (Some(a), None) => a,
        (None, Some(b)) => b,
        (None, None) => {
            return Err(Error::Internal(format!(
                "no upper bound applies at H = {h}"
            )))
        }
    };
    Ok(BoundsReport {
        h,
        l1,
        l2,
        l3,
        lower_combined: lower,
        u1,
        u2,
        u2_sudakov: u2s,
        u2_circ: u2c,
        upper_combined: upper,
        ratio: upper / lower,
    })
}

/// Transfers a value bounded at unit drift to drift c > 0:
/// M(H, c) = c^{H/(H−1)} M(H, 1), and the same scaling applies to every
/// bound.
pub fn drift_rescale(h: Hurst, c: f64, value: f64) -> Result<f64> {
    if c <= 0.0 || !c.is_finite() {
        return Err(Error::Domain(format!(
            "drift_rescale requires c > 0, got {c}"
        )));
    }
    let hv = h.value();
    let factor = (hv / (hv - 1.0) * c.ln()).exp();
    let scaled = factor * value;
    if scaled.is_finite() || value.is_infinite() || value.is_nan() {
        Ok(scaled)
    } else {
        Err(Error::Range(format!(
            "drift rescaling overflows f64 (H = {hv}, c = {c})"
        )))
    }
}
