use std::sync::Arc;

use rand::Rng as _;
use rand::SeedableRng as _;
use rand_chacha::ChaCha8Rng;
use rand_distr::StandardNormal;
use rustfft::num_complex::Complex;
use rustfft::{Fft, FftPlanner};

use crate::bounds::Hurst;
use crate::error::{Error, Result};

/// Largest grid the samplers will allocate (per-path buffers stay well
/// under a gigabyte).
const MAX_STEPS: usize = 1 << 26;

/// Grids a dense Cholesky factorization is still reasonable for.
const MAX_CHOLESKY_STEPS: usize = 1 << 10;

/// Exact-sampling backend for the stationary Gaussian increment sequence.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SamplerMethod {
    /// Circulant embedding of the increment covariance; O(n log n) per path.
    Circulant,
    /// Dense Cholesky factor of the covariance; O(n^3) setup, O(n^2) per
    /// path. Only available on small grids, intended for cross-checks.
    Cholesky,
}

/// Description of a uniform simulation grid for the increment process.
///
/// `steps` increments of span `dt` each; the increment sequence is
/// stationary Gaussian with Var = dt^{2H} and the long-memory covariance
/// determined by the self-similarity index.
#[derive(Clone, Copy, Debug)]
pub struct SamplerSpec {
    h: Hurst,
    steps: usize,
    dt: f64,
    method: SamplerMethod,
}

impl SamplerSpec {
    /// Validates a grid description. `steps` must be a power of two (at
    /// least 2) so grids nest exactly under horizon doubling; `dt` must be
    /// positive and finite. The Cholesky backend is limited to small grids.
    pub fn new(h: Hurst, steps: usize, dt: f64, method: SamplerMethod) -> Result<Self> {
        if steps < 2 || !steps.is_power_of_two() {
            return Err(Error::Domain(format!(
                "steps must be a power of two >= 2, got {steps}"
            )));
        }
        if steps > MAX_STEPS {
            return Err(Error::Domain(format!(
                "steps must be at most {MAX_STEPS}, got {steps}"
            )));
        }
        if dt <= 0.0 || !dt.is_finite() {
            return Err(Error::Domain(format!("dt must be positive, got {dt}")));
        }
        if method == SamplerMethod::Cholesky && steps > MAX_CHOLESKY_STEPS {
            return Err(Error::Domain(format!(
                "Cholesky backend supports at most {MAX_CHOLESKY_STEPS} steps, got {steps}"
            )));
        }
        Ok(Self {
            h,
            steps,
            dt,
            method,
        })
    }

    pub fn h(&self) -> Hurst {
        self.h
    }

    pub fn steps(&self) -> usize {
        self.steps
    }

    pub fn dt(&self) -> f64 {
        self.dt
    }

    pub fn method(&self) -> SamplerMethod {
        self.method
    }

    /// Autocovariance of the increment sequence at lag `k`:
    /// dt^{2H} ((k+1)^{2H} − 2 k^{2H} + (k−1)^{2H}) / 2.
    fn autocovariance(&self, k: usize) -> f64 {
        let two_h = 2.0 * self.h.value();
        let scale = self.dt.powf(two_h);
        if k == 0 {
            return scale;
        }
        let k = k as f64;
        0.5 * scale * ((k + 1.0).powf(two_h) - 2.0 * k.powf(two_h) + (k - 1.0).powf(two_h))
    }
}

enum Plan {
    /// Independent increments; exact when the increments are memoryless.
    Iid { sd: f64 },
    /// Spectral factorization of the circulant extension of the covariance.
    Circulant {
        inverse: Arc<dyn Fft<f64>>,
        weights: Vec<f64>,
    },
    /// Packed lower-triangular Cholesky factor of the dense covariance.
    Cholesky { lower: Vec<f64> },
}

/// Reusable per-thread buffers for path generation.
pub struct Scratch {
    normals: Vec<f64>,
    freq: Vec<Complex<f64>>,
    fft_work: Vec<Complex<f64>>,
}

/// Exact sampler for the stationary Gaussian increment sequence on a
/// uniform grid.
///
/// Paths are indexed reproducibly: path `i` under seed `s` is generated
/// from an independent counter-based stream, so results do not depend on
/// thread scheduling and individual paths can be regenerated in isolation.
pub struct FgnSampler {
    spec: SamplerSpec,
    plan: Plan,
}

impl FgnSampler {
    pub fn new(spec: SamplerSpec) -> Result<Self> {
        // Memoryless increments: sample directly regardless of backend.
        if spec.h.value() == 0.5 {
            return Ok(Self {
                spec,
                plan: Plan::Iid { sd: spec.dt.sqrt() },
            });
        }
        let plan = match spec.method {
            SamplerMethod::Circulant => Self::plan_circulant(&spec)?,
            SamplerMethod::Cholesky => Self::plan_cholesky(&spec)?,
        };
        Ok(Self { spec, plan })
    }

    pub fn spec(&self) -> &SamplerSpec {
        &self.spec
    }

    fn plan_circulant(spec: &SamplerSpec) -> Result<Plan> {
        let n = spec.steps;
        let m = 2 * n;
        // First row of the circulant extension.
        let mut row: Vec<Complex<f64>> = (0..m)
            .map(|j| {
                let lag = if j <= n { j } else { m - j };
                Complex::new(spec.autocovariance(lag), 0.0)
            })
            .collect();
        let mut planner = FftPlanner::new();
        let forward = planner.plan_fft_forward(m);
        let mut work = vec![Complex::new(0.0, 0.0); forward.get_inplace_scratch_len()];
        forward.process_with_scratch(&mut row, &mut work);

        let max_eig = row.iter().map(|c| c.re).fold(f64::NEG_INFINITY, f64::max);
        if !max_eig.is_finite() || max_eig <= 0.0 {
            return Err(Error::Sampler(format!(
                "degenerate circulant spectrum (max eigenvalue {max_eig})"
            )));
        }
        let min_eig = row.iter().map(|c| c.re).fold(f64::INFINITY, f64::min);
        if min_eig < -1e-10 * max_eig {
            return Err(Error::Sampler(format!(
                "circulant extension is not nonnegative definite \
                 (min eigenvalue {min_eig:e} vs max {max_eig:e})"
            )));
        }

        let mf = m as f64;
        let weights: Vec<f64> = row
            .iter()
            .enumerate()
            .map(|(k, c)| {
                let eig = c.re.max(0.0);
                if k == 0 || k == n {
                    (eig / mf).sqrt()
                } else {
                    (eig / (2.0 * mf)).sqrt()
                }
            })
            .collect();
        let inverse = planner.plan_fft_inverse(m);
        Ok(Plan::Circulant { inverse, weights })
    }

    fn plan_cholesky(spec: &SamplerSpec) -> Result<Plan> {
        let n = spec.steps;
        let cov: Vec<f64> = (0..n).map(|k| spec.autocovariance(k)).collect();
        // Packed row-major lower triangle: entry (i, j) at i(i+1)/2 + j.
        let mut lower = vec![0.0; n * (n + 1) / 2];
        for i in 0..n {
            for j in 0..=i {
                let mut s = cov[i - j];
                for k in 0..j {
                    s -= lower[i * (i + 1) / 2 + k] * lower[j * (j + 1) / 2 + k];
                }
                if i == j {
                    if !s.is_finite() || s <= 0.0 {
                        return Err(Error::Sampler(format!(
                            "covariance lost positive definiteness at pivot {i} ({s:e})"
                        )));
                    }
                    lower[i * (i + 1) / 2 + j] = s.sqrt();
                } else {
                    lower[i * (i + 1) / 2 + j] = s / lower[j * (j + 1) / 2 + j];
                }
            }
        }
        Ok(Plan::Cholesky { lower })
    }

    /// Number of standard normals one path consumes.
    fn normals_len(&self) -> usize {
        match &self.plan {
            Plan::Iid { .. } | Plan::Cholesky { .. } => self.spec.steps,
            Plan::Circulant { .. } => 2 * self.spec.steps,
        }
    }

    /// Allocates buffers sized for this sampler, reusable across paths.
    pub fn scratch(&self) -> Scratch {
        let (freq, fft_work) = match &self.plan {
            Plan::Circulant { inverse, .. } => (
                vec![Complex::new(0.0, 0.0); 2 * self.spec.steps],
                vec![Complex::new(0.0, 0.0); inverse.get_inplace_scratch_len()],
            ),
            _ => (Vec::new(), Vec::new()),
        };
        Scratch {
            normals: vec![0.0; self.normals_len()],
            freq,
            fft_work,
        }
    }

    /// Fills `out` with the increments of path `path_index` under `seed`.
    ///
    /// `out.len()` must equal `spec().steps()`. The same (seed, path)
    /// pair always yields the same increments.
    pub fn sample_into(&self, seed: u64, path_index: u64, scratch: &mut Scratch, out: &mut [f64]) {
        assert_eq!(
            out.len(),
            self.spec.steps,
            "output buffer must hold exactly `steps` increments"
        );
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        rng.set_stream(path_index);
        for z in scratch.normals.iter_mut() {
            *z = rng.sample(StandardNormal);
        }
        self.assemble(scratch, out);
    }

    /// Deterministic linear map from a standard-normal vector to one path
    /// of increments.
    fn assemble(&self, scratch: &mut Scratch, out: &mut [f64]) {
        match &self.plan {
            Plan::Iid { sd } => {
                for (o, z) in out.iter_mut().zip(&scratch.normals) {
                    *o = sd * z;
                }
            }
            Plan::Cholesky { lower } => {
                let n = self.spec.steps;
                for i in 0..n {
                    let row = &lower[i * (i + 1) / 2..i * (i + 1) / 2 + i + 1];
                    out[i] = row
                        .iter()
                        .zip(&scratch.normals[..=i])
                        .map(|(l, z)| l * z)
                        .sum();
                }
            }
            Plan::Circulant { inverse, weights } => {
                let n = self.spec.steps;
                let m = 2 * n;
                let z = &scratch.normals;
                let freq = &mut scratch.freq;
                // Hermitian spectral noise: entries 0 and n real, the rest
                // conjugate pairs. Normals are consumed in index order.
                freq[0] = Complex::new(weights[0] * z[0], 0.0);
                for k in 1..n {
                    let re = weights[k] * z[2 * k - 1];
                    let im = weights[k] * z[2 * k];
                    freq[k] = Complex::new(re, im);
                    freq[m - k] = Complex::new(re, -im);
                }
                freq[n] = Complex::new(weights[n] * z[m - 1], 0.0);
                inverse.process_with_scratch(freq, &mut scratch.fft_work);
                for (o, c) in out.iter_mut().zip(freq.iter().take(n)) {
                    *o = c.re;
                }
            }
        }
    }

    /// Convenience allocation-per-call variant of [`sample_into`].
    ///
    /// [`sample_into`]: FgnSampler::sample_into
    pub fn sample(&self, seed: u64, path_index: u64) -> Vec<f64> {
        let mut scratch = self.scratch();
        let mut out = vec![0.0; self.spec.steps];
        self.sample_into(seed, path_index, &mut scratch, &mut out);
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn h(v: f64) -> Hurst {
        Hurst::new(v).unwrap()
    }

    /// Builds the exact output covariance of a sampler by pushing standard
    /// basis vectors through its linear map.
    fn exact_covariance(sampler: &FgnSampler) -> Vec<Vec<f64>> {
        let n = sampler.spec().steps();
        let dim = sampler.normals_len();
        let mut scratch = sampler.scratch();
        let mut columns = Vec::with_capacity(dim);
        for j in 0..dim {
            scratch.normals.iter_mut().for_each(|z| *z = 0.0);
            scratch.normals[j] = 1.0;
            let mut out = vec![0.0; n];
            sampler.assemble(&mut scratch, &mut out);
            columns.push(out);
        }
        (0..n)
            .map(|i| {
                (0..n)
                    .map(|k| columns.iter().map(|c| c[i] * c[k]).sum())
                    .collect()
            })
            .collect()
    }

    fn assert_covariance_matches(hv: f64, steps: usize, dt: f64, method: SamplerMethod, tol: f64) {
        let spec = SamplerSpec::new(h(hv), steps, dt, method).unwrap();
        let sampler = FgnSampler::new(spec).unwrap();
        let cov = exact_covariance(&sampler);
        for (i, row) in cov.iter().enumerate() {
            for (j, &got) in row.iter().enumerate() {
                let want = spec.autocovariance(i.abs_diff(j));
                assert!(
                    (got - want).abs() < tol,
                    "H={hv} {method:?} cov[{i}][{j}] = {got} want {want}"
                );
            }
        }
    }

    #[test]
    fn circulant_covariance_is_exact_small_grid() {
        assert_covariance_matches(0.3, 8, 1.0, SamplerMethod::Circulant, 1e-12);
        assert_covariance_matches(0.7, 8, 0.25, SamplerMethod::Circulant, 1e-12);
    }

    #[test]
    fn cholesky_covariance_is_exact_small_grid() {
        assert_covariance_matches(0.3, 8, 1.0, SamplerMethod::Cholesky, 1e-12);
        assert_covariance_matches(0.7, 8, 0.25, SamplerMethod::Cholesky, 1e-12);
    }

    #[test]
    fn backends_agree_on_moderate_grid() {
        for hv in [0.3, 0.7] {
            let spec_c =
                SamplerSpec::new(h(hv), 256, 1.0 / 256.0, SamplerMethod::Circulant).unwrap();
            let spec_l =
                SamplerSpec::new(h(hv), 256, 1.0 / 256.0, SamplerMethod::Cholesky).unwrap();
            let cov_c = exact_covariance(&FgnSampler::new(spec_c).unwrap());
            let cov_l = exact_covariance(&FgnSampler::new(spec_l).unwrap());
            for i in (0..256).step_by(51) {
                for j in (0..256).step_by(37) {
                    assert!(
                        (cov_c[i][j] - cov_l[i][j]).abs() < 1e-12,
                        "H={hv} backends disagree at ({i}, {j})"
                    );
                }
            }
        }
    }

    #[test]
    fn memoryless_fast_path_scales_normals_exactly() {
        use rand::Rng as _;
        use rand::SeedableRng as _;

        let spec = SamplerSpec::new(h(0.5), 16, 0.25, SamplerMethod::Circulant).unwrap();
        let sampler = FgnSampler::new(spec).unwrap();
        let path = sampler.sample(7, 3);
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        rng.set_stream(3);
        for x in path {
            let z: f64 = rng.sample(StandardNormal);
            assert_eq!(x, 0.5 * z);
        }
    }

    #[test]
    fn paths_are_reproducible_and_distinct() {
        let spec = SamplerSpec::new(h(0.3), 64, 1.0, SamplerMethod::Circulant).unwrap();
        let sampler = FgnSampler::new(spec).unwrap();
        assert_eq!(sampler.sample(42, 0), sampler.sample(42, 0));
        assert_ne!(sampler.sample(42, 0), sampler.sample(42, 1));
        assert_ne!(sampler.sample(42, 0), sampler.sample(43, 0));
    }

    #[test]
    fn empirical_moments_match_theory() {
        // Marginal variance dt^{2H} and the lag-1 increment correlation
        // 2^{2H−1} − 1, pooled across paths; 5-sigma windows.
        for hv in [0.3, 0.7] {
            let steps = 512;
            let paths = 1000u64;
            let spec = SamplerSpec::new(h(hv), steps, 1.0, SamplerMethod::Circulant).unwrap();
            let sampler = FgnSampler::new(spec).unwrap();
            let mut scratch = sampler.scratch();
            let mut buf = vec![0.0; steps];
            let (mut sum, mut sum_sq, mut sum_lag) = (0.0, 0.0, 0.0);
            for p in 0..paths {
                sampler.sample_into(11, p, &mut scratch, &mut buf);
                for i in 0..steps {
                    sum += buf[i];
                    sum_sq += buf[i] * buf[i];
                    if i + 1 < steps {
                        sum_lag += buf[i] * buf[i + 1];
                    }
                }
            }
            let n = (paths as usize * steps) as f64;
            let n_lag = (paths as usize * (steps - 1)) as f64;
            let mean = sum / n;
            let var = sum_sq / n;
            let corr = sum_lag / n_lag / var;
            let want_corr = (2.0f64).powf(2.0 * hv - 1.0) - 1.0;
            assert!(mean.abs() < 5.0 / n.sqrt(), "H={hv} mean {mean}");
            assert!(
                (var - 1.0).abs() < 5.0 * (2.0 / n).sqrt() * 3.0,
                "H={hv} variance {var}"
            );
            // The product estimator's variance is below 2/n_lag for these
            // lags; 5 sigma with a margin factor.
            assert!(
                (corr - want_corr).abs() < 5.0 * (2.0 / n_lag).sqrt() * 3.0,
                "H={hv} lag-1 correlation {corr} want {want_corr}"
            );
        }
    }

    #[test]
    fn rejects_invalid_specs() {
        assert!(SamplerSpec::new(h(0.3), 3, 1.0, SamplerMethod::Circulant).is_err());
        assert!(SamplerSpec::new(h(0.3), 0, 1.0, SamplerMethod::Circulant).is_err());
        assert!(SamplerSpec::new(h(0.3), 64, 0.0, SamplerMethod::Circulant).is_err());
        assert!(SamplerSpec::new(h(0.3), 64, f64::NAN, SamplerMethod::Circulant).is_err());
        assert!(SamplerSpec::new(h(0.3), 2048, 1.0, SamplerMethod::Cholesky).is_err());
        assert!(SamplerSpec::new(h(0.3), 1024, 1.0, SamplerMethod::Cholesky).is_ok());
    }
}
