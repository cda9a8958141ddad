//! Minkowski and axially symmetric Finsler line elements.

use serde::{Deserialize, Serialize};

use crate::error::{FinslerError, Result};
use crate::vector::{FourVector, UnitVector3};

/// The fixed background of the flat Finsler spacetime: preferred direction
/// `nu` and the dimensionless anisotropy exponent `r`.
///
/// Any finite `r` is accepted; `r = 0` is Minkowski space.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "RawSpec")]
pub struct AnisotropySpec {
    pub nu: UnitVector3,
    pub r: f64,
}

#[derive(Deserialize)]
struct RawSpec {
    nu: UnitVector3,
    r: f64,
}

impl TryFrom<RawSpec> for AnisotropySpec {
    type Error = FinslerError;
    fn try_from(raw: RawSpec) -> Result<Self> {
        AnisotropySpec::new(raw.nu, raw.r)
    }
}

impl AnisotropySpec {
    pub fn new(nu: UnitVector3, r: f64) -> Result<Self> {
        if !r.is_finite() {
            return Err(FinslerError::NonFinite("anisotropy parameter r"));
        }
        Ok(AnisotropySpec { nu, r })
    }

    pub fn minkowski(nu: UnitVector3) -> Self {
        AnisotropySpec { nu, r: 0.0 }
    }
}

/// `dt^2 - |dx|^2`.
pub fn minkowski_interval(dx: FourVector) -> f64 {
    dx.t * dx.t - dx.spatial().norm_sqr()
}

/// Squared Finsler interval
/// `[(dx0 - nu.dx)^2 / (dx0^2 - dx^2)]^r (dx0^2 - dx^2)`.
///
/// On the light cone the value is the limit of the closed form:
/// zero along `nu`, zero for `r < 1`, `(dx0 - nu.dx)^2` for `r = 1`,
/// and divergent (an error) for `r > 1`.
pub fn finsler_interval_sq(dx: FourVector, spec: &AnisotropySpec) -> Result<f64> {
    let r = spec.r;
    let interval = minkowski_interval(dx);
    let along = dx.t - spec.nu.dot(dx.spatial());
    let scale = dx.t * dx.t + dx.spatial().norm_sqr();
    let eps = 8.0 * f64::EPSILON;

    if interval.abs() <= eps * scale {
        if along.abs() <= eps * scale.sqrt() || r < 1.0 {
            return Ok(0.0);
        }
        if r == 1.0 {
            return Ok(along * along);
        }
        return Err(FinslerError::DegenerateRatio { r });
    }
    if interval < 0.0 && r.fract() != 0.0 {
        return Err(FinslerError::SpacelikeInput { interval, r });
    }
    if r == 0.0 {
        return Ok(interval);
    }
    Ok((along * along / interval).powf(r) * interval)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn spec(r: f64) -> AnisotropySpec {
        AnisotropySpec::new(UnitVector3::Z, r).unwrap()
    }

    #[test]
    fn minkowski_examples() {
        assert_eq!(minkowski_interval(FourVector::new(1.0, 0.0, 0.0, 0.0)), 1.0);
        assert_eq!(minkowski_interval(FourVector::new(1.0, 1.0, 0.0, 0.0)), 0.0);
        assert_eq!(minkowski_interval(FourVector::new(2.0, 1.0, 1.0, 1.0)), 1.0);
    }

    #[test]
    fn finsler_examples() {
        let rest = FourVector::new(1.0, 0.0, 0.0, 0.0);
        for r in [-0.7, 0.0, 0.2, 3.5] {
            assert_eq!(finsler_interval_sq(rest, &spec(r)).unwrap(), 1.0);
        }
        let null_nu = FourVector::new(1.0, 0.0, 0.0, 1.0);
        assert_eq!(finsler_interval_sq(null_nu, &spec(0.2)).unwrap(), 0.0);
        let dx = FourVector::new(2.0, 1.0, 0.0, 0.0);
        let got = finsler_interval_sq(dx, &spec(0.5)).unwrap();
        assert!((got - 2.0 * 3f64.sqrt()).abs() < 1e-14);
    }

    #[test]
    fn spacelike_rejected_for_fractional_r() {
        let dx = FourVector::new(1.0, 2.0, 0.0, 0.0);
        assert!(matches!(
            finsler_interval_sq(dx, &spec(0.3)),
            Err(FinslerError::SpacelikeInput { .. })
        ));
        // integer powers of a negative base are fine: (1/-3)^2 * -3 = -1/3
        let got = finsler_interval_sq(dx, &spec(2.0)).unwrap();
        assert!((got + 1.0 / 3.0).abs() < 1e-15);
        assert_eq!(finsler_interval_sq(dx, &spec(0.0)).unwrap(), -3.0);
    }

    #[test]
    fn lightlike_off_axis_limits() {
        let dx = FourVector::new(1.0, 1.0, 0.0, 0.0);
        assert_eq!(finsler_interval_sq(dx, &spec(0.5)).unwrap(), 0.0);
        assert_eq!(finsler_interval_sq(dx, &spec(-0.5)).unwrap(), 0.0);
        assert_eq!(finsler_interval_sq(dx, &spec(1.0)).unwrap(), 1.0);
        assert_eq!(
            finsler_interval_sq(dx, &spec(1.5)),
            Err(FinslerError::DegenerateRatio { r: 1.5 })
        );
    }

    #[test]
    fn spec_json_shape() {
        let s: AnisotropySpec = serde_json::from_str(r#"{"nu":[0,0,1],"r":0.25}"#).unwrap();
        assert_eq!(s, spec(0.25));
        assert_eq!(
            serde_json::to_string(&s).unwrap(),
            r#"{"nu":[0.0,0.0,1.0],"r":0.25}"#
        );
        assert!(serde_json::from_str::<AnisotropySpec>(r#"{"nu":[0,1,1],"r":0.25}"#).is_err());
    }
}
