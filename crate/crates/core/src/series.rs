//! Removable-singularity kernels that appear in the closed-form boost
//! coefficients. Each one switches to its Taylor polynomial (through the
//! fourth power) when `|arg| < switch`; the closed forms are written so
//! that they stay accurate right down to the switch point.

/// `(e^s - 1) / s`
pub fn expm1_ratio(s: f64, switch: f64) -> f64 {
    if s.abs() < switch {
        1.0 + s * (1.0 / 2.0 + s * (1.0 / 6.0 + s * (1.0 / 24.0 + s / 120.0)))
    } else {
        s.exp_m1() / s
    }
}

/// `(1 - e^{-s}) / s`
pub fn one_minus_exp_neg_ratio(s: f64, switch: f64) -> f64 {
    expm1_ratio(-s, switch)
}

/// `(cosh s - 1) / s^2`
pub fn cosh_m1_ratio(s: f64, switch: f64) -> f64 {
    if s.abs() < switch {
        let s2 = s * s;
        0.5 + s2 * (1.0 / 24.0 + s2 / 720.0)
    } else {
        let h = (0.5 * s).sinh() / s;
        2.0 * h * h
    }
}

/// `sinh(y) / y`
pub fn sinhc(y: f64, switch: f64) -> f64 {
    if y.abs() < switch {
        let y2 = y * y;
        1.0 + y2 * (1.0 / 6.0 + y2 / 120.0)
    } else {
        y.sinh() / y
    }
}

/// `ln(1 + t) / t`
pub fn log1p_ratio(t: f64, switch: f64) -> f64 {
    if t.abs() < switch {
        1.0 + t * (-1.0 / 2.0 + t * (1.0 / 3.0 + t * (-1.0 / 4.0 + t / 5.0)))
    } else {
        t.ln_1p() / t
    }
}
