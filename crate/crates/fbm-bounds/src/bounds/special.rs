use super::hurst::Hurst;
use super::mu::c_minus;
use crate::error::{Error, Result};
use crate::numerics::abs_normal_moment;

/// κ(H) = E|N|^{1/(1−H)} for a standard normal N.
///
/// Grows superexponentially as H → 1; overflow surfaces as a range error
/// (this happens for H > 1 − 1e-6 and already somewhat below).
pub fn kappa(h: Hurst) -> Result<f64> {
    abs_normal_moment(1.0 / (1.0 - h.value()))
}

/// ν(H) = H^H (1−H)^{1−H}, evaluated in log space.
pub fn nu(h: Hurst) -> f64 {
    let h = h.value();
    (h * h.ln() + (1.0 - h) * (1.0 - h).ln()).exp()
}

/// Lower bound valid for every H in (0, 1):
/// (1/2) ν(H)^{1/(1−H)} κ(H) = (1/2)(1−H) H^{H/(1−H)} κ(H).
pub fn lower_l1(h: Hurst) -> Result<f64> {
    let k = kappa(h)?;
    let hv = h.value();
    let value = 0.5 * (1.0 - hv) * (hv / (1.0 - hv) * hv.ln()).exp() * k;
    if value.is_finite() {
        Ok(value)
    } else {
        Err(Error::Range(format!("lower_l1 overflows f64 at H = {hv}")))
    }
}

/// Upper bound κ(H)/2, valid for H ≥ 1/2.
pub fn upper_u1(h: Hurst) -> Result<f64> {
    if !h.is_superdiffusive() {
        return Err(Error::Domain(format!(
            "upper_u1 requires H >= 1/2, got {h}"
        )));
    }
    Ok(0.5 * kappa(h)?)
}

/// Lower bound (1−H) κ(H), valid for H ≤ 1/2.
pub fn lower_l2(h: Hurst) -> Result<f64> {
    if !h.is_subdiffusive() {
        return Err(Error::Domain(format!(
            "lower_l2 requires H <= 1/2, got {h}"
        )));
    }
    Ok((1.0 - h.value()) * kappa(h)?)
}

/// Lower bound [ν(H) · C⁻ / √H]^{1/(1−H)}, valid for H ≤ 1/2, built from
/// the small-ball lower estimate on μ(H, 1).
pub fn lower_l3(h: Hurst) -> Result<f64> {
    if !h.is_subdiffusive() {
        return Err(Error::Domain(format!(
            "lower_l3 requires H <= 1/2, got {h}"
        )));
    }
    let hv = h.value();
    let ln_nu = hv * hv.ln() + (1.0 - hv) * (1.0 - hv).ln();
    let ln_base = ln_nu + c_minus().ln() - 0.5 * hv.ln();
    Ok((ln_base / (1.0 - hv)).exp())
}
