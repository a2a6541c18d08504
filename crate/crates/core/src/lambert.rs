//! Real branches of the Lambert W function (the inverse of w * e^w).
//!
//! Both real branches appear in the closed-form profit optimum: the principal
//! branch W0 (W >= -1) and the lower branch W-1 (W <= -1), defined for
//! arguments in [-1/e, 0). Values are refined by Halley iteration from a
//! branch-appropriate initial guess until the relative step drops below
//! 1e-14, which leaves the defining residual w * e^w - x at machine level.

use std::f64::consts::E;
use std::fmt;

/// Branch point of the real Lambert W function.
pub const NEG_INV_E: f64 = -1.0 / E;

/// Which real branch to evaluate.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Branch {
    /// W0, the branch with W >= -1, defined for x >= -1/e.
    Principal,
    /// W-1, the branch with W <= -1, defined for -1/e <= x < 0.
    MinusOne,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LambertWError {
    /// x < -1/e: w * e^w = x has no real solution.
    NoRealSolution,
    /// The minus-one branch is only defined for negative arguments.
    OutsideBranchDomain,
}

impl fmt::Display for LambertWError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::NoRealSolution => write!(f, "no real Lambert W solution for x < -1/e"),
            Self::OutsideBranchDomain => {
                write!(f, "minus-one branch of Lambert W requires -1/e <= x < 0")
            }
        }
    }
}

impl std::error::Error for LambertWError {}

/// Evaluate the requested real branch of W at `x`.
///
/// The returned w satisfies w * e^w = x to a relative error of 1e-12 or
/// better (absolute near x = 0).
pub fn lambert_w(branch: Branch, x: f64) -> Result<f64, LambertWError> {
    if x < NEG_INV_E || x.is_nan() {
        return Err(LambertWError::NoRealSolution);
    }
    match branch {
        Branch::Principal => Ok(principal(x)),
        Branch::MinusOne => {
            if x >= 0.0 {
                return Err(LambertWError::OutsideBranchDomain);
            }
            Ok(minus_one(x))
        }
    }
}

fn principal(x: f64) -> f64 {
    if x == 0.0 {
        return 0.0;
    }
    if x == NEG_INV_E {
        return -1.0;
    }
    let w0 = if x < NEG_INV_E + 0.04 {
        // Series around the branch point: W = -1 + p - p^2/3 + 11 p^3/72.
        let p = (2.0 * (E * x + 1.0)).max(0.0).sqrt();
        -1.0 + p - p * p / 3.0 + 11.0 * p * p * p / 72.0
    } else if x < 0.0 {
        x * (1.0 - x)
    } else if x <= E {
        x / (1.0 + x)
    } else {
        // Asymptotic: W ~ ln x - ln ln x.
        let l = x.ln();
        l - l.ln()
    };
    halley(x, w0, Branch::Principal)
}

fn minus_one(x: f64) -> f64 {
    if x == NEG_INV_E {
        return -1.0;
    }
    let w0 = if x < NEG_INV_E + 0.04 {
        let p = (2.0 * (E * x + 1.0)).max(0.0).sqrt();
        -1.0 - p - p * p / 3.0 - 11.0 * p * p * p / 72.0
    } else {
        // W-1(x) ~ ln(-x) - ln(-ln(-x)) as x -> 0^-.
        let l = (-x).ln();
        if l < -1.0 {
            l - (-l).ln()
        } else {
            // ln(-x) >= -1 only right next to the branch point; a start
            // just inside the branch keeps Halley on the lower sheet.
            -1.5
        }
    };
    halley(x, w0, Branch::MinusOne)
}

/// Halley-refine w towards the root of f(w) = w e^w - x, pinning iterates
/// to the requested branch (w >= -1 for principal, w <= -1 for minus-one).
fn halley(x: f64, start: f64, branch: Branch) -> f64 {
    let mut w = start;
    for _ in 0..100 {
        let ew = w.exp();
        let f = w * ew - x;
        if f == 0.0 {
            break;
        }
        let d1 = (w + 1.0) * ew;
        let d2 = (w + 2.0) * ew;
        let newton = f / d1;
        let mut step = newton / (1.0 - newton * d2 / (2.0 * d1));
        if !step.is_finite() {
            step = newton;
        }
        if !step.is_finite() {
            break;
        }
        let mut next = w - step;
        // An overshoot across w = -1 would leave the branch (and zero the
        // derivative); damp towards the branch point instead.
        let crossed = match branch {
            Branch::Principal => next < -1.0,
            Branch::MinusOne => next > -1.0,
        };
        if crossed {
            next = 0.5 * (w - 1.0);
        }
        let done = (next - w).abs() <= 1e-14 * next.abs().max(1e-300);
        w = next;
        if done {
            break;
        }
    }
    w
}
