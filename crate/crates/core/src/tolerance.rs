use serde::{Deserialize, Serialize};

/// Numerical thresholds shared by every routine in the crate.
///
/// `limit_switch` is the bound on `|nu.n alpha|` (and the analogous small
/// arguments) below which truncated Taylor series replace the closed forms.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Tolerance {
    pub abs_tol: f64,
    pub rel_tol: f64,
    pub limit_switch: f64,
}

impl Default for Tolerance {
    fn default() -> Self {
        Tolerance {
            abs_tol: 1e-10,
            rel_tol: 1e-10,
            limit_switch: 1e-4,
        }
    }
}

impl Tolerance {
    /// Same absolute and relative tolerance, default series switch.
    pub fn uniform(tol: f64) -> Option<Self> {
        Tolerance {
            abs_tol: tol,
            rel_tol: tol,
            ..Default::default()
        }
        .validated()
    }

    pub fn validated(self) -> Option<Self> {
        let ok = |x: f64| x.is_finite() && x > 0.0;
        (ok(self.abs_tol) && ok(self.rel_tol) && ok(self.limit_switch)).then_some(self)
    }

    /// `|a - b| <= abs_tol + rel_tol * max(|a|, |b|)`
    pub fn close(&self, a: f64, b: f64) -> bool {
        (a - b).abs() <= self.abs_tol + self.rel_tol * a.abs().max(b.abs())
    }
}
