use crate::error::{Error, Result};

const MAX_DEPTH: u32 = 50;
const INITIAL_PANELS: usize = 8;

/// Integrates `f` over [0, ∞) to absolute tolerance `tol`.
///
/// The half line is mapped to [0, 1) by t = x/(1−x) and the transformed
/// integrand is handled with adaptive Simpson quadrature (Richardson
/// correction, per-panel error budget). `f` must be finite on [0, ∞) and
/// decay fast enough that f(t)·t² → 0 as t → ∞. Panels whose residual
/// falls below the roundoff floor of the coarse whole-integral estimate
/// are accepted as converged, so the achievable accuracy bottoms out near
/// machine epsilon relative to the result.
pub fn integrate_semiinfinite<F>(mut f: F, tol: f64) -> Result<f64>
where
    F: FnMut(f64) -> f64,
{
    if tol <= 0.0 || tol.is_nan() {
        return Err(Error::Domain(format!(
            "tolerance must be positive, got {tol}"
        )));
    }
    let mut g = |x: f64| -> Result<f64> {
        if x >= 1.0 {
            return Ok(0.0);
        }
        let enlarge = 1.0 - x;
        let v = f(x / enlarge) / (enlarge * enlarge);
        if v.is_finite() {
            Ok(v)
        } else {
            Err(Error::Evaluation { at: x / enlarge })
        }
    };

    let mut samples = [[0.0; 3]; INITIAL_PANELS];
    let mut rough = 0.0;
    for (i, panel) in samples.iter_mut().enumerate() {
        let a = i as f64 / INITIAL_PANELS as f64;
        let b = (i + 1) as f64 / INITIAL_PANELS as f64;
        *panel = [g(a)?, g(0.5 * (a + b))?, g(b)?];
        rough += (b - a) / 6.0 * (panel[0] + 4.0 * panel[1] + panel[2]);
    }
    let floor = f64::EPSILON * rough.abs();

    let mut total = 0.0;
    let panel_tol = tol / INITIAL_PANELS as f64;
    for (i, [fa, fm, fb]) in samples.into_iter().enumerate() {
        let a = i as f64 / INITIAL_PANELS as f64;
        let b = (i + 1) as f64 / INITIAL_PANELS as f64;
        let whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
        total += adaptive(&mut g, a, b, fa, fm, fb, whole, panel_tol, floor, 0)?;
    }
    Ok(total)
}

#[allow(clippy::too_many_arguments)]
fn adaptive<G>(
    g: &mut G,
    a: f64,
    b: f64,
    fa: f64,
    fm: f64,
    fb: f64,
    whole: f64,
    tol: f64,
    floor: f64,
    depth: u32,
) -> Result<f64>
where
    G: FnMut(f64) -> Result<f64>,
{
    let m = 0.5 * (a + b);
    let lm = 0.5 * (a + m);
    let rm = 0.5 * (m + b);
    let flm = g(lm)?;
    let frm = g(rm)?;
    let left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
    let right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
    let refined = left + right;
    let err = refined - whole;
    if err.abs() <= (15.0 * tol).max(floor) {
        return Ok(refined + err / 15.0);
    }
    if depth >= MAX_DEPTH {
        return Err(Error::Accuracy {
            tol,
            depth: MAX_DEPTH,
        });
    }
    let half_tol = 0.5 * tol;
    Ok(
        adaptive(g, a, m, fa, flm, fm, left, half_tol, floor, depth + 1)?
            + adaptive(g, m, b, fm, frm, fb, right, half_tol, floor, depth + 1)?,
    )
}
