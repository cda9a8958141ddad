//! The 3-parameter noncompact boost group at fixed preferred direction `nu`,
//! its dilatation-extended form, and the velocity parametrization.
//!
//! Every element is a Lorentz boost followed by the spatial turn that keeps
//! `nu` fixed. Elements are parametrized by a unit direction `n` and a
//! rapidity-like `alpha`; the combination `s = nu.n alpha` controls all the
//! coefficients and is additive under composition.
//!
//! Matrices are passive: they map event coordinates of the initial frame to
//! those of the primed frame. `compose(g1, g2)` is the element `g2 g1`,
//! i.e. `Lambda(compose(g1, g2)) = Lambda(g2) * Lambda(g1)`.

use serde::{Deserialize, Serialize};

use crate::error::{FinslerError, Result};
use crate::matrix::Matrix4;
use crate::metric::AnisotropySpec;
use crate::series::{cosh_m1_ratio, expm1_ratio, log1p_ratio, one_minus_exp_neg_ratio};
use crate::tolerance::Tolerance;
use crate::vector::{FourVector, UnitVector3, Vec3, Velocity3};

/// Group parameters `(n, alpha)` in canonical form: `alpha >= 0`, with the
/// sign carried by `n`. The identity is `(nu, 0)`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct BoostParams {
    pub n: UnitVector3,
    pub alpha: f64,
}

impl BoostParams {
    /// Canonicalizes `(n, alpha)` with `alpha < 0` to `(-n, -alpha)`.
    pub fn new(n: UnitVector3, alpha: f64) -> Result<Self> {
        if !alpha.is_finite() {
            return Err(FinslerError::NonFinite("rapidity"));
        }
        Ok(if alpha < 0.0 {
            BoostParams {
                n: n.flip(),
                alpha: -alpha,
            }
        } else {
            BoostParams { n, alpha }
        })
    }

    pub fn identity(nu: UnitVector3) -> Self {
        BoostParams { n: nu, alpha: 0.0 }
    }

    /// Builds the element whose `n alpha` equals `w`. Vectors shorter than
    /// `zero_tol` give the identity.
    pub fn from_vector(nu: UnitVector3, w: Vec3, zero_tol: f64) -> Result<Self> {
        if !w.is_finite() {
            return Err(FinslerError::NonFinite("rapidity vector"));
        }
        let alpha = w.norm();
        if alpha < zero_tol {
            return Ok(BoostParams::identity(nu));
        }
        Ok(BoostParams {
            n: UnitVector3::normalize(w)?,
            alpha,
        })
    }

    pub fn is_identity(&self) -> bool {
        self.alpha == 0.0
    }

    /// The vector `n alpha`.
    pub fn vector(&self) -> Vec3 {
        self.n.vec() * self.alpha
    }

    /// `nu.n alpha`, the additive part of the parametrization.
    pub fn axial_rapidity(&self, nu: UnitVector3) -> f64 {
        nu.dot(self.n) * self.alpha
    }

    /// Inverse element, `(n, -alpha)` in canonical form.
    pub fn inverse(&self) -> Self {
        if self.is_identity() {
            return *self;
        }
        BoostParams {
            n: self.n.flip(),
            alpha: self.alpha,
        }
    }
}

/// Infinitesimal generator `omega^i_k / d alpha` of the boost group.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct GeneratorMatrix(pub Matrix4);

impl GeneratorMatrix {
    pub fn matrix(&self) -> Matrix4 {
        self.0
    }

    /// Generator with the index pair lowered by `diag(1,-1,-1,-1)`,
    /// which is antisymmetric.
    pub fn lowered(&self) -> Matrix4 {
        let mut m = self.0;
        for (i, row) in m.0.iter_mut().enumerate() {
            if i > 0 {
                row.iter_mut().for_each(|e| *e = -*e);
            }
        }
        m
    }
}

/// `dx0 = -(n.x) d alpha`, `dx = (-n x0 - x x (nu x n)) d alpha`.
pub fn generator(nu: UnitVector3, n: UnitVector3) -> GeneratorMatrix {
    let (nu, n) = (nu.vec().to_array(), n.vec().to_array());
    let mut g = Matrix4::ZERO;
    for b in 0..3 {
        g.0[0][b + 1] = -n[b];
        g.0[b + 1][0] = -n[b];
        for c in 0..3 {
            // -x x (nu x n) = n (nu.x) - nu (n.x)
            g.0[b + 1][c + 1] = n[b] * nu[c] - nu[b] * n[c];
        }
    }
    GeneratorMatrix(g)
}

/// Generator of the dilatation-extended group: `G - r (nu.n) I`.
pub fn generalized_generator(spec: &AnisotropySpec, n: UnitVector3) -> Matrix4 {
    let mut g = generator(spec.nu, n).0;
    let shift = spec.r * spec.nu.dot(n);
    for i in 0..4 {
        g.0[i][i] -= shift;
    }
    g
}

/// Closed-form group element for any sign of `alpha`.
fn lambda(nu: UnitVector3, n: UnitVector3, alpha: f64, tol: &Tolerance) -> Matrix4 {
    let s = nu.dot(n) * alpha;
    let sw = tol.limit_switch;
    // (cosh s - 1)/(nu.n)^2, (1 - e^{-s})/(nu.n), (1 - e^{s})/(nu.n)
    let quad = alpha * alpha * cosh_m1_ratio(s, sw);
    let lead = alpha * one_minus_exp_neg_ratio(s, sw);
    let trail = -alpha * expm1_ratio(s, sw);

    let (nu, n) = (nu.vec().to_array(), n.vec().to_array());
    let mut m = Matrix4::IDENTITY;
    m.0[0][0] = 1.0 + quad;
    // covariant spatial components are negated
    let row0: [f64; 3] = std::array::from_fn(|b| -lead * n[b] - quad * nu[b]);
    for b in 0..3 {
        m.0[0][b + 1] = row0[b];
        m.0[b + 1][0] = trail * n[b] + quad * nu[b];
        for c in 0..3 {
            m.0[b + 1][c + 1] += -trail * n[b] * nu[c] + nu[b] * row0[c];
        }
    }
    m
}

/// Boost matrix `Lambda(nu; n, alpha)`; `det = 1`, Minkowski interval preserved.
pub fn boost_matrix(nu: UnitVector3, params: &BoostParams, tol: &Tolerance) -> Matrix4 {
    lambda(nu, params.n, params.alpha, tol)
}

/// `Lambda(nu; n, -alpha)`.
pub fn boost_matrix_inverse(nu: UnitVector3, params: &BoostParams, tol: &Tolerance) -> Matrix4 {
    lambda(nu, params.n, -params.alpha, tol)
}

/// Group law: parameters of `g2 g1`.
///
/// Returns the identity `(nu, 0)` when the composed rapidity vector is
/// shorter than `tol.abs_tol`; check with [`BoostParams::is_identity`].
pub fn compose(
    nu: UnitVector3,
    g1: &BoostParams,
    g2: &BoostParams,
    tol: &Tolerance,
) -> Result<BoostParams> {
    let sw = tol.limit_switch;
    let s1 = g1.axial_rapidity(nu);
    let s2 = g2.axial_rapidity(nu);
    let w = (g1.n.vec() * (g1.alpha * expm1_ratio(s1, sw))
        + g2.n.vec() * (s1.exp() * g2.alpha * expm1_ratio(s2, sw)))
        / expm1_ratio(s1 + s2, sw);
    BoostParams::from_vector(nu, w, tol.abs_tol)
}

/// Velocity of the primed frame in the initial frame.
///
/// Fails only when the rapidity is so large that the speed rounds to 1.
pub fn velocity_from_params(
    nu: UnitVector3,
    params: &BoostParams,
    tol: &Tolerance,
) -> Result<Velocity3> {
    let alpha = params.alpha;
    let s = params.axial_rapidity(nu);
    let quad = alpha * alpha * cosh_m1_ratio(s, tol.limit_switch);
    let lead = alpha * one_minus_exp_neg_ratio(s, tol.limit_switch);
    let v = (params.n.vec() * lead + nu.vec() * quad) / (1.0 + quad);
    Velocity3::try_from_vec(v)
}

/// Inverse of [`velocity_from_params`]. The zero velocity maps to the
/// identity `(nu, 0)`.
///
/// Near the unit horosphere, where the logarithmic factor is 0/0, the
/// rapidity reduces continuously to the Abelian-subgroup inversion
/// `alpha = sqrt(2 v.nu / (1 - v.nu))`.
pub fn params_from_velocity(
    nu: UnitVector3,
    v: &Velocity3,
    tol: &Tolerance,
) -> Result<BoostParams> {
    let speed = v.speed();
    if speed < tol.abs_tol {
        return Ok(BoostParams::identity(nu));
    }
    let dir = v.vec() / speed;
    let p = nu.dot(v.vec());
    let w = v.inv_gamma();
    let one_m_p = 1.0 - p;
    // 1 - sqrt(1 - v^2) written without cancellation
    let one_m_w = speed * speed / (1.0 + w);

    let n =
        dir * ((1.0 + w) / (2.0 * one_m_p)).sqrt() - nu.vec() * (one_m_w / (2.0 * one_m_p)).sqrt();
    // w / (1 - v.nu) = 1 + t; t = 0 on the unit horosphere
    let t = (w - one_m_p) / one_m_p;
    let alpha = speed * (2.0 / ((1.0 + w) * one_m_p)).sqrt() * log1p_ratio(t, tol.limit_switch);
    Ok(BoostParams {
        n: UnitVector3::normalize(n)?,
        alpha,
    })
}

/// Velocity addition for `Lambda(v) = Lambda(v2) Lambda(v1)`, with `v2`
/// given in the turned axes of the `v1` frame.
pub fn add_velocities(nu: UnitVector3, v1: &Velocity3, v2: &Velocity3) -> Result<Velocity3> {
    Velocity3::try_from_vec(add_velocity_vectors(nu, v1, v2.vec()))
}

/// Raw addition formula; `v2` may be lightlike (`|v2| = 1`). In particular
/// `v2 = nu` returns `nu` for every `v1`.
pub fn add_velocity_vectors(nu: UnitVector3, v1: &Velocity3, v2: Vec3) -> Vec3 {
    let nu = nu.vec();
    let a = v1.vec();
    let w1 = v1.inv_gamma();
    let p1 = a.dot(nu);
    let p2 = v2.dot(nu);
    let v12 = a.dot(v2);
    let num = (a * (1.0 - p2) + v2 * w1) * (1.0 - p1) + nu * ((v12 + p2 * (w1 - 1.0)) * w1);
    let den = 1.0 - p1 + v12 * w1 + p2 * (1.0 - p1 + w1) * (w1 - 1.0);
    num / den
}

/// Dilatation `D = ((1 - v.nu) / sqrt(1 - v^2))^r`.
pub fn dilation_factor(spec: &AnisotropySpec, v: &Velocity3) -> f64 {
    ((1.0 - spec.nu.dot(v.vec())) / v.inv_gamma()).powf(spec.r)
}

/// Dilatation in group parameters, `D = e^{-r nu.n alpha}`.
pub fn dilation_from_params(spec: &AnisotropySpec, params: &BoostParams) -> f64 {
    (-spec.r * params.axial_rapidity(spec.nu)).exp()
}

/// `D Lambda`, the generalized Lorentz boost preserving the Finsler metric.
pub fn generalized_boost_matrix(
    spec: &AnisotropySpec,
    params: &BoostParams,
    tol: &Tolerance,
) -> Matrix4 {
    let m = boost_matrix(spec.nu, params, tol);
    if spec.r == 0.0 {
        return m;
    }
    m.scale(dilation_from_params(spec, params))
}

/// Passive rotation of the spatial axes by `phi` about `nu`.
pub fn axial_rotation(nu: UnitVector3, phi: f64) -> Matrix4 {
    let (sin, cos) = phi.sin_cos();
    let axis = nu.vec();
    let rotate = |x: Vec3| x * cos - axis.cross(x) * sin + axis * (axis.dot(x) * (1.0 - cos));
    let mut m = Matrix4::IDENTITY;
    let basis = [
        Vec3::new(1.0, 0.0, 0.0),
        Vec3::new(0.0, 1.0, 0.0),
        Vec3::new(0.0, 0.0, 1.0),
    ];
    for (c, e) in basis.into_iter().enumerate() {
        let col = rotate(e).to_array();
        for r in 0..3 {
            m.0[r + 1][c + 1] = col[r];
        }
    }
    m
}

/// Spacetime translation by `a`.
pub fn translate(x: FourVector, a: FourVector) -> FourVector {
    x + a
}
