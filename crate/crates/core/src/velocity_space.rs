//! Lobachevski geometry of the space of frame velocities.
//!
//! Boosts act on velocities through the induced motion `v -> v'`, the
//! velocity of the same worldline seen from the boosted frame. The Abelian
//! subgroup preserves every horosphere `(1 - v.nu)/sqrt(1 - v^2) = const`,
//! and boosts along `nu` preserve every equidistant cylinder
//! `(v^2 - (v.nu)^2)/(1 - v^2) = const`.

use std::f64::consts::TAU;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::boost::{boost_matrix, params_from_velocity};
use crate::error::{FinslerError, Result};
use crate::subgroups::{abelian_transform, AbelianParams};
use crate::tolerance::Tolerance;
use crate::vector::{FourVector, UnitVector3, Vec3, Velocity3};

/// How closely every sampled point must reproduce its level.
pub const SAMPLE_TOL: f64 = 1e-8;

/// Hyperbolic distance: rapidity of the relative velocity.
pub fn lobachevsky_distance(v1: &Velocity3, v2: &Velocity3) -> f64 {
    let (a, b) = (v1.vec(), v2.vec());
    let diff = (a - b).norm_sqr();
    let cross = a.cross(b).norm_sqr();
    let denom = 1.0 - a.dot(b);
    let rel = ((diff - cross).max(0.0)).sqrt() / denom;
    rel.min(1.0).atanh()
}

/// `(1 - v.nu) / sqrt(1 - v^2)`, always positive.
pub fn horosphere_level(nu: UnitVector3, v: &Velocity3) -> f64 {
    (1.0 - nu.dot(v.vec())) / v.inv_gamma()
}

/// `(v^2 - (v.nu)^2) / (1 - v^2)`, zero exactly on the `nu` axis.
pub fn cylinder_level(nu: UnitVector3, v: &Velocity3) -> f64 {
    let w = v.inv_gamma();
    v.vec().cross(nu.vec()).norm_sqr() / (w * w)
}

/// Velocity `v` as seen from the frame moving at `frame_v`.
///
/// This is the inverse of velocity addition:
/// `add_velocities(nu, frame_v, induced_motion(nu, frame_v, v)) == v`.
pub fn induced_motion(
    nu: UnitVector3,
    frame_v: &Velocity3,
    v: &Velocity3,
    tol: &Tolerance,
) -> Result<Velocity3> {
    let params = params_from_velocity(nu, frame_v, tol)?;
    let u = boost_matrix(nu, &params, tol) * v.worldline_tangent();
    Velocity3::try_from_vec(u.spatial() / u.t)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum SurfaceFamily {
    Horosphere,
    Cylinder,
}

impl SurfaceFamily {
    pub fn name(self) -> &'static str {
        match self {
            SurfaceFamily::Horosphere => "horosphere",
            SurfaceFamily::Cylinder => "cylinder",
        }
    }

    pub fn level(self, nu: UnitVector3, v: &Velocity3) -> f64 {
        match self {
            SurfaceFamily::Horosphere => horosphere_level(nu, v),
            SurfaceFamily::Cylinder => cylinder_level(nu, v),
        }
    }
}

impl fmt::Display for SurfaceFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Parametric grid for [`sample_surface`].
///
/// Horospheres: `rows x cols` inner Euclidean coordinates in
/// `[-extent, extent]^2`. Cylinders: `rows` axial rapidities in
/// `[-extent, extent]` times `cols` azimuths in `[0, 2 pi)`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Resolution {
    pub rows: usize,
    pub cols: usize,
    pub extent: f64,
}

impl Default for Resolution {
    fn default() -> Self {
        Resolution {
            rows: 8,
            cols: 8,
            extent: 1.5,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SurfaceSample {
    pub family: SurfaceFamily,
    pub level: f64,
    pub points: Vec<Velocity3>,
}

impl SurfaceSample {
    /// True for the zero-radius cylinder, which collapses to the `nu` axis.
    pub fn is_degenerate(&self) -> bool {
        self.family == SurfaceFamily::Cylinder && self.level == 0.0
    }
}

fn linspace(count: usize, extent: f64) -> impl Iterator<Item = f64> {
    (0..count).map(move |i| {
        if count == 1 {
            0.0
        } else {
            -extent + 2.0 * extent * i as f64 / (count - 1) as f64
        }
    })
}

/// Deterministic grid of points on one level set; every point is checked
/// against the family function to [`SAMPLE_TOL`].
pub fn sample_surface(
    nu: UnitVector3,
    family: SurfaceFamily,
    level: f64,
    res: &Resolution,
) -> Result<SurfaceSample> {
    let out_of_range = Err(FinslerError::OutOfRange {
        family: family.name(),
        level,
    });
    let valid = match family {
        SurfaceFamily::Horosphere => level.is_finite() && level > 0.0,
        SurfaceFamily::Cylinder => level.is_finite() && level >= 0.0,
    };
    if !valid {
        return out_of_range;
    }
    if res.rows == 0 || res.cols == 0 || !res.extent.is_finite() || res.extent < 0.0 {
        return Err(FinslerError::NonFinite("surface resolution"));
    }
    let (e1, e2) = nu.orthonormal_pair();

    let points = match family {
        SurfaceFamily::Horosphere => {
            // horosphere through the axial velocity with e^{-beta} = level
            let beta = -level.ln();
            let base = FourVector::from_parts(beta.cosh(), nu.vec() * beta.sinh());
            let mut pts = Vec::with_capacity(res.rows * res.cols);
            for a in linspace(res.rows, res.extent) {
                for b in linspace(res.cols, res.extent) {
                    let w = e1.vec() * a + e2.vec() * b;
                    let u = abelian_transform(nu, &AbelianParams::from_vector(nu, w)?, base)?;
                    pts.push(Velocity3::try_from_vec(u.spatial() / u.t)?);
                }
            }
            pts
        }
        SurfaceFamily::Cylinder => {
            let cols = if level == 0.0 { 1 } else { res.cols };
            let radial = level.sqrt();
            let axial = (1.0 + level).sqrt();
            let mut pts = Vec::with_capacity(res.rows * cols);
            for eta in linspace(res.rows, res.extent) {
                for k in 0..cols {
                    let phi = TAU * k as f64 / cols as f64;
                    let perp: Vec3 = e1.vec() * phi.cos() + e2.vec() * phi.sin();
                    let u_space = nu.vec() * (axial * eta.sinh()) + perp * radial;
                    pts.push(Velocity3::try_from_vec(u_space / (axial * eta.cosh()))?);
                }
            }
            pts
        }
    };

    for v in &points {
        let deviation = (family.level(nu, v) - level).abs();
        if deviation > SAMPLE_TOL * level.max(1.0) {
            return Err(FinslerError::SampleVerification { deviation });
        }
    }
    Ok(SurfaceSample {
        family,
        level,
        points,
    })
}
