use super::root::Bracket;
use crate::error::{Error, Result};

/// Result of a one-dimensional minimization.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MinimizeResult {
    pub argmin: f64,
    pub value: f64,
    /// Number of objective evaluations performed (always at least 1).
    pub iterations: u32,
}

const COARSE_CELLS: u32 = 64;
const GOLDEN_RATIO_COMPLEMENT: f64 = 0.381_966_011_250_105_1;

/// Minimizes `f` over `bracket` by scanning 64 equal cells for the best
/// probe and refining the surrounding cell pair with golden-section search
/// until its width drops below `tol`.
///
/// The procedure is deterministic. It finds the global minimum whenever the
/// objective is unimodal on the bracket, and more generally whenever the
/// coarse scan's best probe falls in the global minimum's basin.
pub fn minimize_1d<F>(mut f: F, bracket: Bracket, tol: f64) -> Result<MinimizeResult>
where
    F: FnMut(f64) -> f64,
{
    if tol <= 0.0 || tol.is_nan() {
        return Err(Error::Domain(format!(
            "tolerance must be positive, got {tol}"
        )));
    }
    let lo = bracket.lo();
    let hi = bracket.hi();
    let width = hi - lo;
    let evals = std::cell::Cell::new(0u32);
    let mut eval = |x: f64| -> Result<f64> {
        let v = f(x);
        evals.set(evals.get() + 1);
        if v.is_finite() {
            Ok(v)
        } else {
            Err(Error::Evaluation { at: x })
        }
    };

    let mut best_i = 0u32;
    let mut best_x = lo;
    let mut best_v = f64::INFINITY;
    for i in 0..=COARSE_CELLS {
        let x = if i == COARSE_CELLS {
            hi
        } else {
            lo + width * i as f64 / COARSE_CELLS as f64
        };
        let v = eval(x)?;
        if v < best_v {
            best_i = i;
            best_x = x;
            best_v = v;
        }
    }

    let mut a = lo + width * best_i.saturating_sub(1) as f64 / COARSE_CELLS as f64;
    let mut b = if best_i >= COARSE_CELLS - 1 {
        hi
    } else {
        lo + width * (best_i + 1) as f64 / COARSE_CELLS as f64
    };

    // Golden-section refinement on [a, b].
    let mut x1 = a + GOLDEN_RATIO_COMPLEMENT * (b - a);
    let mut x2 = b - GOLDEN_RATIO_COMPLEMENT * (b - a);
    let mut f1 = eval(x1)?;
    let mut f2 = eval(x2)?;
    while b - a > tol && evals.get() < 10_000 {
        if f1 <= f2 {
            b = x2;
            x2 = x1;
            f2 = f1;
            x1 = a + GOLDEN_RATIO_COMPLEMENT * (b - a);
            f1 = eval(x1)?;
        } else {
            a = x1;
            x1 = x2;
            f1 = f2;
            x2 = b - GOLDEN_RATIO_COMPLEMENT * (b - a);
            f2 = eval(x2)?;
        }
    }

    let (mut argmin, mut value) = if f1 <= f2 { (x1, f1) } else { (x2, f2) };
    // The coarse probe can only be better than the refined point if the
    // refinement slid into a different basin; keep whichever is lower.
    if best_v < value {
        argmin = best_x;
        value = best_v;
    }
    Ok(MinimizeResult {
        argmin,
        value,
        iterations: evals.get(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn finds_parabola_minimum() {
        let b = Bracket::new(-4.0, 6.0).unwrap();
        let r = minimize_1d(|x| (x - 1.0) * (x - 1.0), b, 1e-12).unwrap();
        assert!((r.argmin - 1.0).abs() < 1e-6);
        assert!(r.value < 1e-12);
        assert!(r.iterations >= 1);
    }

    #[test]
    fn finds_reciprocal_sum_minimum() {
        let b = Bracket::new(0.01, 100.0).unwrap();
        let r = minimize_1d(|x| x + 1.0 / x, b, 1e-12).unwrap();
        assert!((r.argmin - 1.0).abs() < 1e-7, "argmin {}", r.argmin);
        assert!((r.value - 2.0).abs() < 1e-13, "value {}", r.value);
    }

    #[test]
    fn finds_cosine_minimum() {
        let b = Bracket::new(0.0, 2.0 * std::f64::consts::PI).unwrap();
        let r = minimize_1d(|x| x.cos(), b, 1e-12).unwrap();
        assert!((r.argmin - std::f64::consts::PI).abs() < 1e-6);
        assert!((r.value + 1.0).abs() < 1e-12);
    }

    #[test]
    fn deterministic_across_runs() {
        let b = Bracket::new(0.2, 9.0).unwrap();
        let obj = |x: f64| x.powf(0.3) + (x - 3.0) * (x - 3.0) * 0.1;
        let r1 = minimize_1d(obj, b, 1e-12).unwrap();
        let r2 = minimize_1d(obj, b, 1e-12).unwrap();
        assert_eq!(r1.argmin.to_bits(), r2.argmin.to_bits());
        assert_eq!(r1.value.to_bits(), r2.value.to_bits());
        assert_eq!(r1.iterations, r2.iterations);
    }

    #[test]
    fn reports_nonfinite_objective() {
        let b = Bracket::new(0.0, 1.0).unwrap();
        let err = minimize_1d(|x| if x > 0.5 { f64::NAN } else { x }, b, 1e-10).unwrap_err();
        assert!(matches!(err, Error::Evaluation { .. }));
    }

    #[test]
    fn endpoint_minimum_is_found() {
        let b = Bracket::new(0.0, 1.0).unwrap();
        let r = minimize_1d(|x| x, b, 1e-12).unwrap();
        assert!(r.argmin < 1e-6);
        assert!(r.value < 1e-6);
    }
}
