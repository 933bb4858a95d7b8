use rayon::prelude::*;

use super::sampler::{FgnSampler, SamplerMethod, SamplerSpec};
use crate::bounds::Hurst;
use crate::error::{Error, Result};

/// Longest geometric horizon search: the base horizon is doubled at most
/// this many times.
const MAX_DOUBLINGS: u32 = 8;

/// Convergence threshold for the horizon search, as a fraction of the
/// current standard error.
const GAIN_FRACTION: f64 = 0.1;

/// Outcome of a Monte-Carlo estimation run.
#[derive(Clone, Copy, Debug)]
pub struct McResult {
    /// Sample mean of the per-path statistic.
    pub estimate: f64,
    /// Standard error of the mean.
    pub std_error: f64,
    /// Number of independent paths.
    pub paths: u64,
    /// Grid points per path.
    pub steps: usize,
    /// Time horizon the paths were simulated on.
    pub horizon: f64,
    /// Seed the run is reproducible from.
    pub seed: u64,
    /// Whether the run's stopping rule was satisfied. Fixed-horizon
    /// estimators always report true; the adaptive horizon search reports
    /// false when it exhausted its doubling budget.
    pub converged: bool,
}

/// Applies `f` to each path's increments, in path order.
///
/// Path RNG streams are indexed by path number, and the per-path results
/// are collected in order before any reduction, so results are identical
/// for every thread-pool size.
fn map_paths<T, F>(sampler: &FgnSampler, paths: u64, seed: u64, f: F) -> Vec<T>
where
    T: Send,
    F: Fn(&[f64]) -> T + Sync,
{
    (0..paths)
        .into_par_iter()
        .map_init(
            || (sampler.scratch(), vec![0.0; sampler.spec().steps()]),
            |(scratch, buf), p| {
                sampler.sample_into(seed, p, scratch, buf);
                f(buf)
            },
        )
        .collect()
}

/// Sequential mean and standard error (Welford accumulation).
fn mean_se(values: &[f64]) -> (f64, f64) {
    let mut mean = 0.0;
    let mut m2 = 0.0;
    for (i, v) in values.iter().enumerate() {
        let delta = v - mean;
        mean += delta / (i + 1) as f64;
        m2 += delta * (v - mean);
    }
    let n = values.len() as f64;
    let var = if values.len() > 1 {
        m2 / (n - 1.0)
    } else {
        0.0
    };
    (mean, (var / n).sqrt())
}

/// Running maximum of the drifted partial-sum path, including the starting
/// point (so the result is never negative). `take` limits the scan to a
/// grid prefix.
fn sup_drifted(increments: &[f64], dt: f64, drift: f64, take: usize) -> f64 {
    let mut level = 0.0;
    let mut best = 0.0f64;
    for (i, inc) in increments.iter().take(take).enumerate() {
        level += inc;
        best = best.max(level - drift * (i + 1) as f64 * dt);
    }
    best
}

fn validate_paths(paths: u64) -> Result<()> {
    if paths < 2 {
        return Err(Error::Domain(format!(
            "at least 2 paths are required, got {paths}"
        )));
    }
    Ok(())
}

/// Estimates E[sup_{0 ≤ t ≤ horizon} (B_H(t) − drift · t)] on a uniform
/// grid of `steps` points.
///
/// The supremum includes t = 0, so per-path values are nonnegative. For
/// horizons long enough that the drift dominates, this approximates the
/// all-time supremum from below (both the finite horizon and the finite
/// grid bias the estimate downward).
pub fn estimate_sup_drift(
    h: Hurst,
    drift: f64,
    horizon: f64,
    steps: usize,
    paths: u64,
    seed: u64,
    method: SamplerMethod,
) -> Result<McResult> {
    if horizon <= 0.0 || !horizon.is_finite() {
        return Err(Error::Domain(format!(
            "horizon must be positive, got {horizon}"
        )));
    }
    if drift < 0.0 || !drift.is_finite() {
        return Err(Error::Domain(format!(
            "drift must be nonnegative, got {drift}"
        )));
    }
    validate_paths(paths)?;
    let dt = horizon / steps as f64;
    let sampler = FgnSampler::new(SamplerSpec::new(h, steps, dt, method)?)?;
    let values = map_paths(&sampler, paths, seed, |inc| {
        sup_drifted(inc, dt, drift, inc.len())
    });
    let (estimate, std_error) = mean_se(&values);
    Ok(McResult {
        estimate,
        std_error,
        paths,
        steps,
        horizon,
        seed,
        converged: true,
    })
}

/// Estimates the α-th moment of sup_{0 ≤ t ≤ 1} B_H(t) on a uniform grid.
pub fn estimate_mu_moment(
    h: Hurst,
    alpha: f64,
    steps: usize,
    paths: u64,
    seed: u64,
    method: SamplerMethod,
) -> Result<McResult> {
    if alpha < 1.0 || !alpha.is_finite() {
        return Err(Error::Domain(format!(
            "moment order must be at least 1, got {alpha}"
        )));
    }
    validate_paths(paths)?;
    let steps_f = steps as f64;
    let sampler = FgnSampler::new(SamplerSpec::new(h, steps, 1.0 / steps_f, method)?)?;
    let values = map_paths(&sampler, paths, seed, |inc| {
        sup_drifted(inc, 1.0 / steps_f, 0.0, inc.len()).powf(alpha)
    });
    let (estimate, std_error) = mean_se(&values);
    Ok(McResult {
        estimate,
        std_error,
        paths,
        steps,
        horizon: 1.0,
        seed,
        converged: true,
    })
}

/// Estimates the ruin probability of the variance-clock comparison
/// process: a standard Brownian motion W on the clock s ∈ [0, horizon^{2H}]
/// against the barrier u + s^{1/(2H)}. Returns the fraction of paths whose
/// grid maximum of W(s) − s^{1/(2H)} exceeds u.
pub fn estimate_timechanged_tail(
    h: Hurst,
    u: f64,
    horizon: f64,
    steps: usize,
    paths: u64,
    seed: u64,
) -> Result<McResult> {
    if u <= 0.0 || !u.is_finite() {
        return Err(Error::Domain(format!("level u must be positive, got {u}")));
    }
    if horizon <= 0.0 || !horizon.is_finite() {
        return Err(Error::Domain(format!(
            "horizon must be positive, got {horizon}"
        )));
    }
    validate_paths(paths)?;
    let two_h = 2.0 * h.value();
    let span = horizon.powf(two_h);
    let ds = span / steps as f64;
    let exponent = 1.0 / two_h;
    // W has independent N(0, ds) increments: the memoryless sampler.
    let brownian = Hurst::new(0.5).expect("1/2 is a valid index");
    let sampler = FgnSampler::new(SamplerSpec::new(
        brownian,
        steps,
        ds,
        SamplerMethod::Circulant,
    )?)?;
    let values = map_paths(&sampler, paths, seed, |inc| {
        let mut level = 0.0;
        for (k, z) in inc.iter().enumerate() {
            level += z;
            let s = (k + 1) as f64 * ds;
            if level - s.powf(exponent) > u {
                return 1.0;
            }
        }
        0.0
    });
    let (estimate, std_error) = mean_se(&values);
    Ok(McResult {
        estimate,
        std_error,
        paths,
        steps,
        horizon,
        seed,
        converged: true,
    })
}

/// Estimates E[sup_{t ≥ 0} (B_H(t) − drift · t)] by doubling the horizon
/// until the marginal gain is negligible.
///
/// Starting from `base_horizon` (a power of two) with `steps_per_unit`
/// grid points per unit of time (also a power of two), the horizon doubles
/// until the mean per-path gain of the current doubling — the difference
/// between the path supremum over the full grid and over its first half —
/// drops below a tenth of the current standard error, or the doubling
/// budget is exhausted (reported via `converged: false`). Path streams are
/// indexed identically at every level, so the search is reproducible.
pub fn adaptive_horizon(
    h: Hurst,
    drift: f64,
    base_horizon: f64,
    steps_per_unit: usize,
    paths: u64,
    seed: u64,
    method: SamplerMethod,
) -> Result<McResult> {
    if drift <= 0.0 || !drift.is_finite() {
        return Err(Error::Domain(format!(
            "horizon search needs a positive drift, got {drift}"
        )));
    }
    if base_horizon <= 0.0 || base_horizon.log2().fract() != 0.0 {
        return Err(Error::Domain(format!(
            "base horizon must be a power of two, got {base_horizon}"
        )));
    }
    let base_steps = base_horizon * steps_per_unit as f64;
    if base_steps.fract() != 0.0 || base_steps < 2.0 {
        return Err(Error::Domain(format!(
            "base horizon times steps-per-unit must be an integer >= 2, \
             got {base_steps}"
        )));
    }
    let base_steps = base_steps as usize;
    if !base_steps.is_power_of_two() {
        return Err(Error::Domain(format!(
            "steps per unit must be a power of two, got {steps_per_unit}"
        )));
    }
    validate_paths(paths)?;

    let dt = 1.0 / steps_per_unit as f64;
    let mut last = None;
    for level in 0..=MAX_DOUBLINGS {
        let steps = base_steps << level;
        let horizon = base_horizon * f64::powi(2.0, level as i32);
        let sampler = FgnSampler::new(SamplerSpec::new(h, steps, dt, method)?)?;
        let values = map_paths(&sampler, paths, seed, |inc| {
            let full = sup_drifted(inc, dt, drift, inc.len());
            let half = sup_drifted(inc, dt, drift, inc.len() / 2);
            (full, full - half)
        });
        let full: Vec<f64> = values.iter().map(|v| v.0).collect();
        let (estimate, std_error) = mean_se(&full);
        let gain = values.iter().map(|v| v.1).sum::<f64>() / paths as f64;
        let result = McResult {
            estimate,
            std_error,
            paths,
            steps,
            horizon,
            seed,
            converged: true,
        };
        // The first level has no previous horizon to compare against.
        if level >= 1 && gain < GAIN_FRACTION * std_error {
            return Ok(result);
        }
        last = Some(result);
    }
    let mut result = last.expect("at least one level simulated");
    result.converged = false;
    Ok(result)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn h(v: f64) -> Hurst {
        Hurst::new(v).unwrap()
    }

    #[test]
    fn identical_results_for_any_thread_pool_size() {
        let run =
            || estimate_sup_drift(h(0.3), 1.0, 4.0, 512, 100, 9, SamplerMethod::Circulant).unwrap();
        let base = run();
        for threads in [1usize, 3] {
            let pool = rayon::ThreadPoolBuilder::new()
                .num_threads(threads)
                .build()
                .unwrap();
            let other = pool.install(run);
            assert_eq!(base.estimate.to_bits(), other.estimate.to_bits());
            assert_eq!(base.std_error.to_bits(), other.std_error.to_bits());
        }
    }

    #[test]
    fn memoryless_sup_with_unit_drift_is_near_half() {
        // E[sup (W(t) − t)] = 1/2; finite grid and horizon bias downward.
        let r = estimate_sup_drift(
            h(0.5),
            1.0,
            16.0,
            16 * 1024,
            2000,
            42,
            SamplerMethod::Circulant,
        )
        .unwrap();
        assert!(
            (r.estimate - 0.5).abs() < 0.02 + 5.0 * r.std_error,
            "estimate {} se {}",
            r.estimate,
            r.std_error
        );
    }

    #[test]
    fn memoryless_first_moment_matches_reflection_value() {
        // E[sup_{[0,1]} W] = sqrt(2/π).
        let want = (2.0 / std::f64::consts::PI).sqrt();
        let r = estimate_mu_moment(h(0.5), 1.0, 8192, 2000, 7, SamplerMethod::Circulant).unwrap();
        assert!(
            (r.estimate - want).abs() < 0.02 + 5.0 * r.std_error,
            "estimate {} want {want}",
            r.estimate
        );
    }

    #[test]
    fn linear_barrier_crossing_matches_closed_form() {
        // For H = 1/2 the barrier is linear and P = e^{−2u} exactly; the
        // grid misses some crossings, so allow a small downward bias.
        let want = (-1.0f64).exp();
        let r = estimate_timechanged_tail(h(0.5), 0.5, 16.0, 4096, 2000, 11).unwrap();
        assert!(
            r.estimate <= want + 5.0 * r.std_error,
            "estimate {} want <= {want}",
            r.estimate
        );
        assert!(
            r.estimate >= want - 0.03 - 5.0 * r.std_error,
            "estimate {} want ~{want}",
            r.estimate
        );
    }

    #[test]
    fn horizon_search_converges_on_memoryless_case() {
        let r = adaptive_horizon(h(0.5), 1.0, 1.0, 256, 400, 5, SamplerMethod::Circulant).unwrap();
        assert!(r.converged, "did not converge: {r:?}");
        assert!(
            r.horizon >= 2.0 && r.horizon <= 256.0,
            "horizon {}",
            r.horizon
        );
        assert!((r.estimate - 0.5).abs() < 0.15, "estimate {}", r.estimate);
    }

    #[test]
    fn rejects_invalid_arguments() {
        let hh = h(0.3);
        let m = SamplerMethod::Circulant;
        assert!(estimate_sup_drift(hh, 1.0, 4.0, 512, 1, 0, m).is_err());
        assert!(estimate_sup_drift(hh, -1.0, 4.0, 512, 10, 0, m).is_err());
        assert!(estimate_sup_drift(hh, 1.0, 0.0, 512, 10, 0, m).is_err());
        assert!(estimate_mu_moment(hh, 0.5, 512, 10, 0, m).is_err());
        assert!(estimate_timechanged_tail(hh, 0.0, 4.0, 512, 10, 0).is_err());
        assert!(adaptive_horizon(hh, 0.0, 4.0, 256, 10, 0, m).is_err());
        assert!(adaptive_horizon(hh, 1.0, 3.0, 256, 10, 0, m).is_err());
    }
}
