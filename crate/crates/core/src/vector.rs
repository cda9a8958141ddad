//! Three- and four-component value types.
//!
//! Signature is (+,-,-,-) with `x0` the time coordinate and `c = 1`.
//! Spatial covariant components are the negated contravariant ones.

use std::ops::{Add, Div, Mul, Neg, Sub};

use serde::{Deserialize, Serialize};

use crate::error::{FinslerError, Result};

/// Unit-norm tolerance for [`UnitVector3`].
pub const UNIT_NORM_TOL: f64 = 1e-12;

/// Plain Euclidean 3-vector.
#[derive(Debug, Clone, Copy, PartialEq, Default, Serialize, Deserialize)]
#[serde(from = "[f64; 3]", into = "[f64; 3]")]
pub struct Vec3 {
    pub x: f64,
    pub y: f64,
    pub z: f64,
}

impl Vec3 {
    pub const ZERO: Vec3 = Vec3 {
        x: 0.0,
        y: 0.0,
        z: 0.0,
    };

    pub const fn new(x: f64, y: f64, z: f64) -> Self {
        Vec3 { x, y, z }
    }

    pub fn dot(self, other: Vec3) -> f64 {
        self.x * other.x + self.y * other.y + self.z * other.z
    }

    pub fn cross(self, other: Vec3) -> Vec3 {
        Vec3 {
            x: self.y * other.z - self.z * other.y,
            y: self.z * other.x - self.x * other.z,
            z: self.x * other.y - self.y * other.x,
        }
    }

    pub fn norm_sqr(self) -> f64 {
        self.dot(self)
    }

    pub fn norm(self) -> f64 {
        self.x.hypot(self.y).hypot(self.z)
    }

    pub fn is_finite(self) -> bool {
        self.x.is_finite() && self.y.is_finite() && self.z.is_finite()
    }

    pub fn to_array(self) -> [f64; 3] {
        [self.x, self.y, self.z]
    }

    pub fn max_abs_diff(self, other: Vec3) -> f64 {
        let d = self - other;
        d.x.abs().max(d.y.abs()).max(d.z.abs())
    }
}

impl From<[f64; 3]> for Vec3 {
    fn from(a: [f64; 3]) -> Self {
        Vec3::new(a[0], a[1], a[2])
    }
}

impl From<Vec3> for [f64; 3] {
    fn from(v: Vec3) -> Self {
        v.to_array()
    }
}

impl Add for Vec3 {
    type Output = Vec3;
    fn add(self, o: Vec3) -> Vec3 {
        Vec3::new(self.x + o.x, self.y + o.y, self.z + o.z)
    }
}

impl Sub for Vec3 {
    type Output = Vec3;
    fn sub(self, o: Vec3) -> Vec3 {
        Vec3::new(self.x - o.x, self.y - o.y, self.z - o.z)
    }
}

impl Neg for Vec3 {
    type Output = Vec3;
    fn neg(self) -> Vec3 {
        Vec3::new(-self.x, -self.y, -self.z)
    }
}

impl Mul<f64> for Vec3 {
    type Output = Vec3;
    fn mul(self, k: f64) -> Vec3 {
        Vec3::new(self.x * k, self.y * k, self.z * k)
    }
}

impl Mul<Vec3> for f64 {
    type Output = Vec3;
    fn mul(self, v: Vec3) -> Vec3 {
        v * self
    }
}

impl Div<f64> for Vec3 {
    type Output = Vec3;
    fn div(self, k: f64) -> Vec3 {
        Vec3::new(self.x / k, self.y / k, self.z / k)
    }
}

pub fn dot3(a: Vec3, b: Vec3) -> f64 {
    a.dot(b)
}

pub fn cross3(a: Vec3, b: Vec3) -> Vec3 {
    a.cross(b)
}

pub fn norm3(a: Vec3) -> f64 {
    a.norm()
}

/// A direction in 3-space, `|v| = 1` to within [`UNIT_NORM_TOL`].
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "[f64; 3]", into = "[f64; 3]")]
pub struct UnitVector3(Vec3);

impl UnitVector3 {
    pub const X: UnitVector3 = UnitVector3(Vec3::new(1.0, 0.0, 0.0));
    pub const Y: UnitVector3 = UnitVector3(Vec3::new(0.0, 1.0, 0.0));
    pub const Z: UnitVector3 = UnitVector3(Vec3::new(0.0, 0.0, 1.0));

    /// Checked constructor; the input must already be unit-norm.
    pub fn new(x: f64, y: f64, z: f64) -> Result<Self> {
        Self::try_from_vec(Vec3::new(x, y, z))
    }

    pub fn try_from_vec(v: Vec3) -> Result<Self> {
        if !v.is_finite() {
            return Err(FinslerError::NonFinite("unit vector"));
        }
        let norm = v.norm();
        if (norm - 1.0).abs() > UNIT_NORM_TOL {
            return Err(FinslerError::NotUnit { norm });
        }
        Ok(UnitVector3(v))
    }

    pub fn normalize(v: Vec3) -> Result<Self> {
        if !v.is_finite() {
            return Err(FinslerError::NonFinite("unit vector"));
        }
        let norm = v.norm();
        if norm == 0.0 {
            return Err(FinslerError::ZeroDirection);
        }
        Ok(UnitVector3(v / norm))
    }

    pub fn vec(self) -> Vec3 {
        self.0
    }

    pub fn dot(self, other: impl Into<Vec3>) -> f64 {
        self.0.dot(other.into())
    }

    /// Reversed direction.
    pub fn flip(self) -> Self {
        UnitVector3(-self.0)
    }

    /// Two unit vectors completing `self` to a right-handed orthonormal frame.
    pub fn orthonormal_pair(self) -> (UnitVector3, UnitVector3) {
        let v = self.0;
        // pick the coordinate axis least aligned with v
        let seed = if v.x.abs() <= v.y.abs() && v.x.abs() <= v.z.abs() {
            Vec3::new(1.0, 0.0, 0.0)
        } else if v.y.abs() <= v.z.abs() {
            Vec3::new(0.0, 1.0, 0.0)
        } else {
            Vec3::new(0.0, 0.0, 1.0)
        };
        let e1 = seed - v * v.dot(seed);
        let e1 = e1 / e1.norm();
        let e2 = v.cross(e1);
        (UnitVector3(e1), UnitVector3(e2 / e2.norm()))
    }
}

impl From<UnitVector3> for Vec3 {
    fn from(u: UnitVector3) -> Vec3 {
        u.0
    }
}

impl TryFrom<[f64; 3]> for UnitVector3 {
    type Error = FinslerError;
    fn try_from(a: [f64; 3]) -> Result<Self> {
        UnitVector3::try_from_vec(a.into())
    }
}

impl From<UnitVector3> for [f64; 3] {
    fn from(u: UnitVector3) -> Self {
        u.0.to_array()
    }
}

/// 3-velocity of a reference frame, strictly subluminal.
#[derive(Debug, Clone, Copy, PartialEq, Default, Serialize, Deserialize)]
#[serde(try_from = "[f64; 3]", into = "[f64; 3]")]
pub struct Velocity3(Vec3);

impl Velocity3 {
    pub const ZERO: Velocity3 = Velocity3(Vec3::ZERO);

    pub fn new(vx: f64, vy: f64, vz: f64) -> Result<Self> {
        Self::try_from_vec(Vec3::new(vx, vy, vz))
    }

    pub fn try_from_vec(v: Vec3) -> Result<Self> {
        if !v.is_finite() {
            return Err(FinslerError::NonFinite("velocity"));
        }
        let speed_sqr = v.norm_sqr();
        if speed_sqr >= 1.0 {
            return Err(FinslerError::Superluminal {
                speed: speed_sqr.sqrt(),
            });
        }
        Ok(Velocity3(v))
    }

    /// Velocity with rapidity `eta` along `dir`.
    pub fn from_rapidity(dir: UnitVector3, eta: f64) -> Result<Self> {
        Self::try_from_vec(dir.vec() * eta.tanh())
    }

    pub fn vec(self) -> Vec3 {
        self.0
    }

    pub fn speed(self) -> f64 {
        self.0.norm()
    }

    /// `sqrt(1 - v^2)`, the inverse Lorentz factor.
    pub fn inv_gamma(self) -> f64 {
        // (1 - |v|)(1 + |v|) keeps relative accuracy close to the light cone
        let s = self.speed();
        ((1.0 - s) * (1.0 + s)).sqrt()
    }

    /// Unit-time-component 4-vector `(1, v)` of the worldline.
    pub fn worldline_tangent(self) -> FourVector {
        FourVector::from_parts(1.0, self.0)
    }
}

impl From<Velocity3> for Vec3 {
    fn from(v: Velocity3) -> Vec3 {
        v.0
    }
}

impl TryFrom<[f64; 3]> for Velocity3 {
    type Error = FinslerError;
    fn try_from(a: [f64; 3]) -> Result<Self> {
        Velocity3::try_from_vec(a.into())
    }
}

impl From<Velocity3> for [f64; 3] {
    fn from(v: Velocity3) -> Self {
        v.0.to_array()
    }
}

/// Contravariant event coordinates `(x0, x1, x2, x3)`.
#[derive(Debug, Clone, Copy, PartialEq, Default, Serialize, Deserialize)]
#[serde(from = "[f64; 4]", into = "[f64; 4]")]
pub struct FourVector {
    pub t: f64,
    pub x: f64,
    pub y: f64,
    pub z: f64,
}

impl FourVector {
    pub const fn new(t: f64, x: f64, y: f64, z: f64) -> Self {
        FourVector { t, x, y, z }
    }

    pub fn from_parts(t: f64, space: Vec3) -> Self {
        FourVector::new(t, space.x, space.y, space.z)
    }

    pub fn spatial(self) -> Vec3 {
        Vec3::new(self.x, self.y, self.z)
    }

    pub fn to_array(self) -> [f64; 4] {
        [self.t, self.x, self.y, self.z]
    }

    pub fn is_finite(self) -> bool {
        self.to_array().iter().all(|c| c.is_finite())
    }

    pub fn scale(self, k: f64) -> Self {
        FourVector::new(self.t * k, self.x * k, self.y * k, self.z * k)
    }

    pub fn max_abs_diff(self, other: FourVector) -> f64 {
        self.to_array()
            .iter()
            .zip(other.to_array())
            .map(|(a, b)| (a - b).abs())
            .fold(0.0, f64::max)
    }
}

impl From<[f64; 4]> for FourVector {
    fn from(a: [f64; 4]) -> Self {
        FourVector::new(a[0], a[1], a[2], a[3])
    }
}

impl From<FourVector> for [f64; 4] {
    fn from(v: FourVector) -> Self {
        v.to_array()
    }
}

impl Add for FourVector {
    type Output = FourVector;
    fn add(self, o: FourVector) -> FourVector {
        FourVector::new(self.t + o.t, self.x + o.x, self.y + o.y, self.z + o.z)
    }
}

impl Sub for FourVector {
    type Output = FourVector;
    fn sub(self, o: FourVector) -> FourVector {
        FourVector::new(self.t - o.t, self.x - o.x, self.y - o.y, self.z - o.z)
    }
}
