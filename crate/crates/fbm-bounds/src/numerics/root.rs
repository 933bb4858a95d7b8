use crate::error::{Error, Result};

/// A closed interval [lo, hi] with lo < hi, used to bracket roots and minima.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Bracket {
    lo: f64,
    hi: f64,
}

impl Bracket {
    pub fn new(lo: f64, hi: f64) -> Result<Self> {
        if !lo.is_finite() || !hi.is_finite() || lo >= hi {
            return Err(Error::Domain(format!(
                "bracket requires finite lo < hi, got [{lo}, {hi}]"
            )));
        }
        Ok(Self { lo, hi })
    }

    pub fn lo(&self) -> f64 {
        self.lo
    }

    pub fn hi(&self) -> f64 {
        self.hi
    }
}

/// Finds a root of `f` inside `bracket` with Brent's method (inverse
/// quadratic interpolation and secant steps, falling back to bisection),
/// stopping when the enclosing interval is narrower than `tol`.
///
/// The endpoint values must straddle zero; an endpoint that evaluates to
/// exactly zero is returned immediately.
pub fn find_root<F>(mut f: F, bracket: Bracket, tol: f64) -> Result<f64>
where
    F: FnMut(f64) -> f64,
{
    if tol <= 0.0 || tol.is_nan() {
        return Err(Error::Domain(format!(
            "tolerance must be positive, got {tol}"
        )));
    }
    let mut a = bracket.lo();
    let mut b = bracket.hi();
    let mut fa = f(a);
    let mut fb = f(b);
    if !fa.is_finite() {
        return Err(Error::Evaluation { at: a });
    }
    if !fb.is_finite() {
        return Err(Error::Evaluation { at: b });
    }
    if fa == 0.0 {
        return Ok(a);
    }
    if fb == 0.0 {
        return Ok(b);
    }
    if fa.signum() == fb.signum() {
        return Err(Error::Bracket { lo: a, hi: b });
    }

    // Keep b the best estimate: |f(b)| <= |f(a)|.
    if fa.abs() < fb.abs() {
        std::mem::swap(&mut a, &mut b);
        std::mem::swap(&mut fa, &mut fb);
    }
    let mut c = a;
    let mut fc = fa;
    let mut d = b - a;
    let mut e = d;

    for _ in 0..200 {
        if fb.signum() == fc.signum() {
            c = a;
            fc = fa;
            d = b - a;
            e = d;
        }
        if fc.abs() < fb.abs() {
            a = b;
            b = c;
            c = a;
            fa = fb;
            fb = fc;
            fc = fa;
        }
        let tol1 = 2.0 * f64::EPSILON * b.abs() + 0.5 * tol;
        let xm = 0.5 * (c - b);
        if xm.abs() <= tol1 || fb == 0.0 {
            return Ok(b);
        }
        if e.abs() >= tol1 && fa.abs() > fb.abs() {
            // Attempt inverse quadratic interpolation (secant if a == c).
            let s = fb / fa;
            let (mut p, mut q) = if a == c {
                (2.0 * xm * s, 1.0 - s)
            } else {
                let q = fa / fc;
                let r = fb / fc;
                (
                    s * (2.0 * xm * q * (q - r) - (b - a) * (r - 1.0)),
                    (q - 1.0) * (r - 1.0) * (s - 1.0),
                )
            };
            if p > 0.0 {
                q = -q;
            }
            p = p.abs();
            let min1 = 3.0 * xm * q - (tol1 * q).abs();
            let min2 = (e * q).abs();
            if 2.0 * p < min1.min(min2) {
                e = d;
                d = p / q;
            } else {
                d = xm;
                e = d;
            }
        } else {
            d = xm;
            e = d;
        }
        a = b;
        fa = fb;
        b += if d.abs() > tol1 { d } else { tol1.copysign(xm) };
        fb = f(b);
        if !fb.is_finite() {
            return Err(Error::Evaluation { at: b });
        }
    }
    Err(Error::Internal(format!(
        "root iteration did not converge in bracket [{}, {}]",
        bracket.lo(),
        bracket.hi()
    )))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn finds_sqrt_two() {
        let b = Bracket::new(0.0, 2.0).unwrap();
        let r = find_root(|x| x * x - 2.0, b, 1e-14).unwrap();
        assert!((r - std::f64::consts::SQRT_2).abs() < 1e-12);
    }

    #[test]
    fn finds_linear_root() {
        let b = Bracket::new(-1.0, 1.0).unwrap();
        let r = find_root(|x| 10.0 * (x - 0.3), b, 1e-14).unwrap();
        assert!((r - 0.3).abs() < 1e-12);
    }

    #[test]
    fn finds_transcendental_root() {
        let b = Bracket::new(0.0, 1.0).unwrap();
        // cos x = x near 0.739085.
        let r = find_root(|x| x.cos() - x, b, 1e-14).unwrap();
        assert!((r - 0.739_085_133_215_160_6).abs() < 1e-12);
    }

    #[test]
    fn rejects_unsigned_bracket() {
        let b = Bracket::new(-1.0, 1.0).unwrap();
        let err = find_root(|x| x * x + 1.0, b, 1e-12).unwrap_err();
        assert!(matches!(err, Error::Bracket { .. }));
    }

    #[test]
    fn reports_nonfinite_objective() {
        let b = Bracket::new(-1.0, 1.0).unwrap();
        let err = find_root(|_| f64::NAN, b, 1e-12).unwrap_err();
        assert!(matches!(err, Error::Evaluation { .. }));
    }

    #[test]
    fn exact_zero_at_endpoint_returns_endpoint() {
        let b = Bracket::new(0.0, 1.0).unwrap();
        let r = find_root(|x| x, b, 1e-12).unwrap();
        assert_eq!(r, 0.0);
    }

    #[test]
    fn bracket_validation() {
        assert!(Bracket::new(1.0, 1.0).is_err());
        assert!(Bracket::new(2.0, 1.0).is_err());
        assert!(Bracket::new(f64::NAN, 1.0).is_err());
        assert!(Bracket::new(0.0, f64::INFINITY).is_err());
    }
}
