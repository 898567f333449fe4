use crate::error::{Error, Result};

/// Bisection stops once the bracket is narrower than this.
pub const BISECTION_WIDTH: f64 = 1e-12;
/// A refined sign change only counts as a root if `|f|` is below this.
pub const ROOT_RESIDUAL: f64 = 1e-10;

const MAX_BISECTIONS: usize = 200;

/// An interval whose endpoints have function values of opposite sign.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RootBracket {
    pub lo: f64,
    pub hi: f64,
    pub f_lo: f64,
    pub f_hi: f64,
}

impl RootBracket {
    pub fn new(lo: f64, hi: f64, f_lo: f64, f_hi: f64) -> Result<Self> {
        if lo.is_nan() || hi.is_nan() || lo >= hi {
            return Err(Error::domain(format!(
                "bracket needs lo < hi, got [{lo}, {hi}]"
            )));
        }
        let product = f_lo * f_hi;
        if product.is_nan() || product >= 0.0 {
            return Err(Error::domain(format!(
                "bracket [{lo}, {hi}] has no sign change ({f_lo}, {f_hi})"
            )));
        }
        Ok(RootBracket { lo, hi, f_lo, f_hi })
    }
}

/// Halves `bracket` until it is narrower than [`BISECTION_WIDTH`] or can no
/// longer be split in floating point, and returns the midpoint.
pub fn bisect<F>(f: F, bracket: RootBracket) -> Result<f64>
where
    F: Fn(f64) -> f64,
{
    let RootBracket {
        mut lo,
        mut hi,
        mut f_lo,
        ..
    } = bracket;
    for _ in 0..MAX_BISECTIONS {
        let mid = 0.5 * (lo + hi);
        if hi - lo < BISECTION_WIDTH || mid <= lo || mid >= hi {
            return Ok(mid);
        }
        let f_mid = f(mid);
        if !f_mid.is_finite() {
            return Err(Error::NonFinite {
                at: mid,
                value: f_mid,
            });
        }
        if f_mid == 0.0 {
            return Ok(mid);
        }
        if (f_mid < 0.0) == (f_lo < 0.0) {
            lo = mid;
            f_lo = f_mid;
        } else {
            hi = mid;
        }
    }
    Ok(0.5 * (lo + hi))
}

/// Scans `[lo, hi]` with spacing `scan_step` and refines every sign change
/// by bisection, returning at most `n_max` roots in ascending order.
///
/// Only sign changes are detected, so roots of even multiplicity are
/// missed. Sign changes across poles are refined but dropped because the
/// residual there never falls below [`ROOT_RESIDUAL`].
pub fn find_roots<F>(f: F, lo: f64, hi: f64, n_max: usize, scan_step: f64) -> Result<Vec<f64>>
where
    F: Fn(f64) -> f64,
{
    if !(lo.is_finite() && hi.is_finite() && lo < hi) {
        return Err(Error::domain(format!(
            "scan interval [{lo}, {hi}] is empty"
        )));
    }
    if !(scan_step.is_finite() && scan_step > 0.0) {
        return Err(Error::domain(format!(
            "scan step must be > 0, got {scan_step}"
        )));
    }
    let eval = |x: f64| -> Result<f64> {
        let v = f(x);
        if v.is_finite() {
            Ok(v)
        } else {
            Err(Error::NonFinite { at: x, value: v })
        }
    };

    let mut roots = Vec::new();
    if n_max == 0 {
        return Ok(roots);
    }
    let steps = ((hi - lo) / scan_step).ceil() as usize;
    let mut x_prev = lo;
    let mut f_prev = eval(lo)?;
    if f_prev == 0.0 {
        roots.push(lo);
    }
    for i in 1..=steps {
        if roots.len() >= n_max {
            break;
        }
        let x = if i == steps {
            hi
        } else {
            lo + i as f64 * scan_step
        };
        let fx = eval(x)?;
        if fx == 0.0 {
            roots.push(x);
        } else if f_prev * fx < 0.0 {
            let root = bisect(&f, RootBracket::new(x_prev, x, f_prev, fx)?)?;
            let residual = eval(root)?;
            if residual.abs() < ROOT_RESIDUAL {
                roots.push(root);
            } else {
                log::debug!("sign change near {root} is not a root (|f| = {residual:e})");
            }
        }
        x_prev = x;
        f_prev = fx;
    }
    roots.truncate(n_max);
    Ok(roots)
}
