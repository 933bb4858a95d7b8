use super::hurst::Hurst;
use crate::error::{Error, Result};
use crate::numerics::integrate_semiinfinite;

const LN_TWO_PI: f64 = 1.837_877_066_409_345_5;
const MAX_LN: f64 = 709.0;

/// Tail-rate normalizer
/// λ(u, H) = [ ∫₀^∞ (2π t^{2H})^{−1/2} exp(−(t+u)²/(2 t^{2H})) dt ]^{−1}
/// for u > 0. The integrand is the density of B_H(t) − t at −u, so the
/// integral is the expected occupation density of the drifted path at
/// level u. At H = 1/2 the closed form is λ = e^{2u}.
///
/// Evaluation: the substitution t = s^{1/(1−H)} makes the integrand flat
/// at the origin and Gaussian-tailed in s for every H, and the peak of the
/// log-integrand is scaled out so the quadrature tolerance acts relatively.
/// Relative accuracy is about 1e-10. Overflow (u far into the tail)
/// surfaces as a range error.
pub fn lambda_u(u: f64, h: Hurst) -> Result<f64> {
    if u <= 0.0 || !u.is_finite() {
        return Err(Error::Domain(format!("lambda_u requires u > 0, got {u}")));
    }
    let hv = h.value();
    let q = 1.0 / (1.0 - hv);
    // ln of the transformed integrand f(s^q) q s^{q−1} as a function of ln s.
    let ln_integrand = move |ln_s: f64| -> f64 {
        let ln_t = q * ln_s;
        let t = ln_t.exp();
        -0.5 * (LN_TWO_PI + 2.0 * hv * ln_t) - 0.5 * (t + u) * (t + u) * (-2.0 * hv * ln_t).exp()
            + q.ln()
            + (q - 1.0) * ln_s
    };

    // Coarse scan of the log-integrand to locate its scale.
    let mut peak = f64::NEG_INFINITY;
    for k in 0..=800 {
        let ln_s = -40.0 + k as f64 * 0.1;
        peak = peak.max(ln_integrand(ln_s));
    }
    if !peak.is_finite() {
        return Err(Error::Range(format!(
            "occupation integrand degenerate at u = {u}, H = {hv}"
        )));
    }

    let scaled = integrate_semiinfinite(
        move |s| {
            if s <= 0.0 {
                return 0.0;
            }
            (ln_integrand(s.ln()) - peak).exp()
        },
        1e-12,
    )?;
    if scaled <= 0.0 || !scaled.is_finite() {
        return Err(Error::Range(format!(
            "occupation integral degenerate at u = {u}, H = {hv}: {scaled}"
        )));
    }
    let ln_lambda = -peak - scaled.ln();
    if ln_lambda > MAX_LN {
        return Err(Error::Range(format!(
            "tail rate overflows f64 at u = {u}, H = {hv}"
        )));
    }
    Ok(ln_lambda.exp())
}
