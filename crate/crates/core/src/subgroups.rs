//! The two noncompact subgroups of the generalized boost group in closed
//! form: the Abelian 2-parameter subgroup (`n` orthogonal to `nu`, where the
//! dilatation is trivial) and the 1-parameter subgroup of boosts along `nu`.

use serde::{Deserialize, Serialize};

use crate::error::{FinslerError, Result};
use crate::metric::AnisotropySpec;
use crate::vector::{FourVector, UnitVector3, Vec3, Velocity3};
use crate::velocity_space::horosphere_level;

/// Orthogonality tolerance for Abelian directions.
pub const ORTHOGONALITY_TOL: f64 = 1e-12;

/// Gate on `|(1 - v.nu)/sqrt(1 - v^2) - 1|` for horosphere membership.
pub const HOROSPHERE_TOL: f64 = 1e-8;

/// Parameters `(n, alpha)` of the Abelian subgroup, `n` orthogonal to `nu`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct AbelianParams {
    pub n: UnitVector3,
    pub alpha: f64,
}

fn check_orthogonal(nu: UnitVector3, n: UnitVector3) -> Result<()> {
    let dot = nu.dot(n);
    if dot.abs() > ORTHOGONALITY_TOL {
        return Err(FinslerError::NonOrthogonal { dot });
    }
    Ok(())
}

impl AbelianParams {
    pub fn new(nu: UnitVector3, n: UnitVector3, alpha: f64) -> Result<Self> {
        check_orthogonal(nu, n)?;
        if !alpha.is_finite() {
            return Err(FinslerError::NonFinite("rapidity"));
        }
        Ok(AbelianParams { n, alpha })
    }

    /// From the free 2-vector `n alpha` lying in the plane orthogonal to `nu`.
    pub fn from_vector(nu: UnitVector3, w: Vec3) -> Result<Self> {
        if !w.is_finite() {
            return Err(FinslerError::NonFinite("rapidity vector"));
        }
        let alpha = w.norm();
        if alpha == 0.0 {
            return Ok(AbelianParams {
                n: nu.orthonormal_pair().0,
                alpha: 0.0,
            });
        }
        let dot = nu.dot(w) / alpha;
        if dot.abs() > ORTHOGONALITY_TOL {
            return Err(FinslerError::NonOrthogonal { dot });
        }
        Ok(AbelianParams {
            n: UnitVector3::normalize(w)?,
            alpha,
        })
    }

    pub fn vector(&self) -> Vec3 {
        self.n.vec() * self.alpha
    }

    /// Group law of the Abelian subgroup: the vectors `n alpha` add.
    pub fn compose(&self, nu: UnitVector3, other: &AbelianParams) -> Result<AbelianParams> {
        AbelianParams::from_vector(nu, self.vector() + other.vector())
    }
}

/// Parameter of the 1-parameter subgroup (rapidity along `nu`).
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct AxialParams {
    pub alpha: f64,
}

fn abelian_apply(nu: UnitVector3, n: Vec3, alpha: f64, x: FourVector) -> FourVector {
    let nu = nu.vec();
    let s = x.spatial();
    let nx = n.dot(s);
    let nux = nu.dot(s);
    let half_sq = 0.5 * alpha * alpha;
    let t = (half_sq + 1.0) * x.t - alpha * nx - half_sq * nux;
    let space = s + n * ((nux - x.t) * alpha) + nu * ((x.t - nux) * half_sq - nx * alpha);
    FourVector::from_parts(t, space)
}

/// Finite Abelian transformation, the `nu.n -> 0` limit of the boost group.
pub fn abelian_transform(nu: UnitVector3, p: &AbelianParams, x: FourVector) -> Result<FourVector> {
    check_orthogonal(nu, p.n)?;
    Ok(abelian_apply(nu, p.n.vec(), p.alpha, x))
}

/// Inverse of [`abelian_transform`] (`alpha -> -alpha`).
pub fn abelian_transform_inverse(
    nu: UnitVector3,
    p: &AbelianParams,
    x: FourVector,
) -> Result<FourVector> {
    check_orthogonal(nu, p.n)?;
    Ok(abelian_apply(nu, p.n.vec(), -p.alpha, x))
}

/// `v = (n alpha + nu alpha^2/2) / (1 + alpha^2/2)`; lies on the unit horosphere.
pub fn abelian_velocity(nu: UnitVector3, p: &AbelianParams) -> Result<Velocity3> {
    let half_sq = 0.5 * p.alpha * p.alpha;
    Velocity3::try_from_vec((p.n.vec() * p.alpha + nu.vec() * half_sq) / (1.0 + half_sq))
}

fn check_horosphere(nu: UnitVector3, v: &Velocity3) -> Result<()> {
    let level = horosphere_level(nu, v);
    if (level - 1.0).abs() >= HOROSPHERE_TOL {
        return Err(FinslerError::OffHorosphere { level });
    }
    Ok(())
}

/// Inverse of [`abelian_velocity`]:
/// `alpha = sqrt(2 v.nu / (1 - v.nu))`, `n = (v (1 + alpha^2/2) - nu alpha^2/2) / alpha`.
pub fn abelian_params_from_velocity(nu: UnitVector3, v: &Velocity3) -> Result<AbelianParams> {
    check_horosphere(nu, v)?;
    if v.speed() == 0.0 {
        return Err(FinslerError::ZeroVelocity);
    }
    let p = nu.dot(v.vec()).max(0.0);
    let alpha = (2.0 * p / (1.0 - p)).sqrt();
    if alpha == 0.0 {
        return Err(FinslerError::ZeroVelocity);
    }
    let half_sq = 0.5 * alpha * alpha;
    let n = (v.vec() * (1.0 + half_sq) - nu.vec() * half_sq) / alpha;
    // drop the round-off component along nu before normalizing
    let n = n - nu.vec() * nu.dot(n);
    Ok(AbelianParams {
        n: UnitVector3::normalize(n)?,
        alpha,
    })
}

/// Abelian transformation parametrized by the frame velocity, which must lie
/// on the unit horosphere. Preserves `x0^2 - x^2` and `x0 - nu.x`.
pub fn abelian_transform_v(nu: UnitVector3, v: &Velocity3, x: FourVector) -> Result<FourVector> {
    check_horosphere(nu, v)?;
    let vv = v.vec();
    let nuv = nu.vec();
    let s = x.spatial();
    let p = nuv.dot(vv);
    let nux = nuv.dot(s);
    let vx = vv.dot(s);
    let denom = 1.0 - p;
    let t = (x.t - vx) / denom;
    let space = s - (vv * (x.t - nux) - nuv * ((2.0 * x.t - nux) * p - vx)) / denom;
    Ok(FourVector::from_parts(t, space))
}

fn axial_apply(spec: &AnisotropySpec, alpha: f64, x: FourVector) -> FourVector {
    let nu = spec.nu.vec();
    let s = x.spatial();
    let nux = nu.dot(s);
    let (sh, ch) = (alpha.sinh(), alpha.cosh());
    let d = (-spec.r * alpha).exp();
    let t = d * (x.t * ch - nux * sh);
    let space = (s - nu * nux + nu * (-x.t * sh + nux * ch)) * d;
    FourVector::from_parts(t, space)
}

/// Generalized boost along `nu` with dilatation `e^{-r alpha}`.
pub fn axial_transform(spec: &AnisotropySpec, p: &AxialParams, x: FourVector) -> FourVector {
    axial_apply(spec, p.alpha, x)
}

/// Inverse of [`axial_transform`].
pub fn axial_transform_inverse(
    spec: &AnisotropySpec,
    p: &AxialParams,
    x: FourVector,
) -> FourVector {
    axial_apply(spec, -p.alpha, x)
}

/// Frame velocity of the axial boost, `nu tanh(alpha)`.
pub fn axial_velocity(nu: UnitVector3, p: &AxialParams) -> Result<Velocity3> {
    Velocity3::from_rapidity(nu, p.alpha)
}

/// Quantities with simple behaviour under the axial subgroup.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct AxialInvariants {
    /// `x0 - nu.x`; scales by `e^{(1-r) alpha}`.
    pub along: f64,
    /// `x0^2 - x^2`; scales by `e^{-2 r alpha}`.
    pub interval: f64,
    /// `|x x nu| / sqrt(x0^2 - x^2)`; invariant.
    pub ratio: f64,
}

pub fn axial_invariants(spec: &AnisotropySpec, x: FourVector) -> Result<AxialInvariants> {
    let s = x.spatial();
    let interval = x.t * x.t - s.norm_sqr();
    if interval <= 0.0 {
        return Err(FinslerError::NonTimelike { interval });
    }
    Ok(AxialInvariants {
        along: x.t - spec.nu.dot(s),
        interval,
        ratio: s.cross(spec.nu.vec()).norm() / interval.sqrt(),
    })
}
