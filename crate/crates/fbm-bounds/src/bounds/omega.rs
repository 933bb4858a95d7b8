use std::sync::OnceLock;

use super::hurst::Hurst;
use super::special::nu;
use crate::error::{Error, Result};
use crate::numerics::{find_root, minimize_1d, Bracket, MinimizeResult};

/// Which closed form attains the optimized envelope constant ω(H).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OmegaBranch {
    /// The large-horizon stationary-phase form (only competitive for
    /// H ≤ the split point).
    Omega0,
    /// The small-horizon form, optimal for all H above the split point.
    Omega1,
}

/// The envelope constant ω(H) together with every candidate closed form
/// that went into it.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct OmegaBreakdown {
    pub h: Hurst,
    pub omega: f64,
    pub branch: OmegaBranch,
    /// Stationary-phase candidate τ°^α (1 + (1+τ°)^{−(α+1)}); present only
    /// when H lies at or below the split point.
    pub omega0: Option<f64>,
    /// Small-horizon candidate 2 (2H)^{H/(1−H)} (1−2H)^{(1−2H)/(2−2H)}.
    pub omega1: f64,
    /// Crude envelope 1/ν(H); never attains the optimum but bounds it.
    pub omega2: f64,
    /// Stationary point of the large-horizon form, ≥ 1 + H/(1−H).
    pub tau_circ: Option<f64>,
    /// Argmin found by direct minimization, filled by the caller when the
    /// cross-check has been run.
    pub argmin_t_direct: Option<f64>,
}

/// Effective-horizon weight ψ(T, H) = min{T (1−2H)/(2H), 1} for H ≤ 1/2.
pub fn psi(t: f64, h: Hurst) -> f64 {
    debug_assert!(t > 0.0, "psi requires T > 0");
    debug_assert!(h.is_subdiffusive(), "psi requires H <= 1/2");
    let hv = h.value();
    (t * (1.0 - 2.0 * hv) / (2.0 * hv)).min(1.0)
}

/// The envelope objective
/// T^{H/(1−H)} + (ψ^{1−2H} T^H / (ψ + T))^{1/(1−H)}
/// whose infimum over T > 0 is ω(H). At H = 1/2 the 0⁰ limit makes this
/// T + 1/T.
pub(crate) fn omega_objective(t: f64, h: Hurst) -> f64 {
    let hv = h.value();
    let alpha = hv / (1.0 - hv);
    let p = psi(t, h);
    let base = p.powf(1.0 - 2.0 * hv) * t.powf(hv) / (p + t);
    t.powf(alpha) + base.powf(1.0 / (1.0 - hv))
}

/// Small-horizon closed form ω₁(H) = 2 (2H)^{H/(1−H)} (1−2H)^{(1−2H)/(2−2H)}.
pub fn omega1(h: Hurst) -> Result<f64> {
    if !h.is_subdiffusive() {
        return Err(Error::Domain(format!("omega1 requires H <= 1/2, got {h}")));
    }
    let hv = h.value();
    let one_minus = 1.0 - 2.0 * hv;
    Ok(2.0 * (2.0 * hv).powf(hv / (1.0 - hv)) * one_minus.powf(one_minus / (2.0 - 2.0 * hv)))
}

/// Crude envelope ω₂(H) = 1/ν(H).
pub fn omega2(h: Hurst) -> Result<f64> {
    if !h.is_subdiffusive() {
        return Err(Error::Domain(format!("omega2 requires H <= 1/2, got {h}")));
    }
    Ok(1.0 / nu(h))
}

/// Stationary point of the large-horizon form: the unique root T ≥ 1 + α
/// of α + (α − T)(1 + T)^{−(α+2)} = 0, with α = H/(1−H).
pub fn tau_circ(h: Hurst) -> Result<f64> {
    if !h.is_subdiffusive() {
        return Err(Error::Domain(format!(
            "tau_circ requires H <= 1/2, got {h}"
        )));
    }
    let alpha = h.value() / (1.0 - h.value());
    let f = |t: f64| alpha + (alpha - t) * (1.0 + t).powf(-(alpha + 2.0));
    let lo = 1.0 + alpha;
    if f(lo) >= 0.0 {
        // At the split point itself the stationary point collides with the
        // bracket start.
        return Ok(lo);
    }
    let mut hi = 2.0 * lo;
    let mut doublings = 0;
    while f(hi) <= 0.0 {
        hi *= 2.0;
        doublings += 1;
        if doublings > 200 {
            return Err(Error::Internal(format!(
                "no sign change located for the stationary point at H = {h}"
            )));
        }
    }
    find_root(f, Bracket::new(lo, hi)?, 1e-12)
}

/// Hurst index below which the large-horizon form can win: the root of
/// H/(1−H) = ((2−H)/(1−H))^{−(2−H)/(1−H)}, ≈ 0.154100. Computed once and
/// cached.
pub fn h_zero() -> f64 {
    static H_ZERO: OnceLock<f64> = OnceLock::new();
    *H_ZERO.get_or_init(|| {
        let g = |h: f64| {
            let q = (2.0 - h) / (1.0 - h);
            h / (1.0 - h) - (-q * q.ln()).exp()
        };
        find_root(g, Bracket::new(0.05, 0.4).unwrap(), 1e-14)
            .expect("fixed bracket straddles the split-point equation")
    })
}

/// ω(H) for H ≤ 1/2 via the closed-form branch rule: ω₁ above the split
/// point, min{ω₀, ω₁} at or below it.
pub fn omega(h: Hurst) -> Result<OmegaBreakdown> {
    if !h.is_subdiffusive() {
        return Err(Error::Domain(format!("omega requires H <= 1/2, got {h}")));
    }
    let o1 = omega1(h)?;
    let o2 = omega2(h)?;
    if h.value() > h_zero() {
        return Ok(OmegaBreakdown {
            h,
            omega: o1,
            branch: OmegaBranch::Omega1,
            omega0: None,
            omega1: o1,
            omega2: o2,
            tau_circ: None,
            argmin_t_direct: None,
        });
    }
    let tau = tau_circ(h)?;
    let alpha = h.value() / (1.0 - h.value());
    let o0 = tau.powf(alpha) * (1.0 + (1.0 + tau).powf(-(alpha + 1.0)));
    let (omega, branch) = if o0 <= o1 {
        (o0, OmegaBranch::Omega0)
    } else {
        (o1, OmegaBranch::Omega1)
    };
    Ok(OmegaBreakdown {
        h,
        omega,
        branch,
        omega0: Some(o0),
        omega1: o1,
        omega2: o2,
        tau_circ: Some(tau),
        argmin_t_direct: None,
    })
}

/// ω(H) by direct minimization of the envelope objective, independent of
/// the branch rule. The T axis splits at τ = 2H/(1−2H) into two regions on
/// each of which the objective is unimodal; both are minimized in log-T
/// coordinates and the better point is returned.
pub fn omega_direct(h: Hurst) -> Result<MinimizeResult> {
    if !h.is_subdiffusive() {
        return Err(Error::Domain(format!(
            "omega_direct requires H <= 1/2, got {h}"
        )));
    }
    const LOG_LO: f64 = -18.420_680_743_952_367; // ln 1e-8
    const LOG_HI: f64 = 18.420_680_743_952_367; // ln 1e8
    let hv = h.value();
    let log_obj = |y: f64| omega_objective(y.exp(), h);

    let tau_regime = if hv < 0.5 {
        2.0 * hv / (1.0 - 2.0 * hv)
    } else {
        f64::INFINITY
    };
    let split = tau_regime.ln().clamp(LOG_LO, LOG_HI);

    let mut best = minimize_1d(
        log_obj,
        Bracket::new(LOG_LO, split.max(LOG_LO + 1e-9))?,
        1e-12,
    )?;
    if split < LOG_HI {
        let right = minimize_1d(log_obj, Bracket::new(split, LOG_HI)?, 1e-12)?;
        let iterations = best.iterations + right.iterations;
        if right.value < best.value {
            best = right;
        }
        best.iterations = iterations;
    }
    Ok(MinimizeResult {
        argmin: best.argmin.exp(),
        value: best.value,
        iterations: best.iterations,
    })
}
