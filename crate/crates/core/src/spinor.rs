//! Bispinor representation of the generalized boosts.
//!
//! Gamma matrices are in the standard Dirac basis. A boost `D Lambda` acts
//! on bispinors as `psi' = D^{-3/2} S psi`, where `S` satisfies
//! `S^-1 gamma^n S = Lambda^n_m gamma^m`.

use std::ops::{Add, Mul, Sub};

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::boost::BoostParams;
use crate::error::{FinslerError, Result};
use crate::metric::AnisotropySpec;
use crate::series::sinhc;
use crate::tolerance::Tolerance;
use crate::vector::{UnitVector3, Vec3, Velocity3};

const ZERO: Complex64 = Complex64::new(0.0, 0.0);
const ONE: Complex64 = Complex64::new(1.0, 0.0);
const I: Complex64 = Complex64::new(0.0, 1.0);

/// Scale weight of bispinors under the dilatation.
pub const SPINOR_WEIGHT: f64 = -1.5;

/// Complex 4x4 matrix on bispinor indices.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SpinorMatrix(pub [[Complex64; 4]; 4]);

impl SpinorMatrix {
    pub fn zero() -> Self {
        SpinorMatrix([[ZERO; 4]; 4])
    }

    pub fn identity() -> Self {
        let mut m = Self::zero();
        (0..4).for_each(|i| m.0[i][i] = ONE);
        m
    }

    pub fn scale(&self, k: Complex64) -> Self {
        SpinorMatrix(self.0.map(|row| row.map(|z| z * k)))
    }

    pub fn scale_real(&self, k: f64) -> Self {
        self.scale(Complex64::new(k, 0.0))
    }

    pub fn apply(&self, psi: &Bispinor) -> Bispinor {
        Bispinor(std::array::from_fn(|i| {
            (0..4).map(|k| self.0[i][k] * psi.0[k]).sum()
        }))
    }

    pub fn conj_transpose(&self) -> Self {
        let mut out = Self::zero();
        for i in 0..4 {
            for j in 0..4 {
                out.0[i][j] = self.0[j][i].conj();
            }
        }
        out
    }

    /// Determinant by Gaussian elimination with partial pivoting.
    pub fn det(&self) -> Complex64 {
        let mut m = self.0;
        let mut det = ONE;
        for col in 0..4 {
            let pivot = (col..4)
                .max_by(|&i, &j| m[i][col].norm().total_cmp(&m[j][col].norm()))
                .unwrap_or(col);
            if m[pivot][col].norm() == 0.0 {
                return ZERO;
            }
            if pivot != col {
                m.swap(col, pivot);
                det = -det;
            }
            det *= m[col][col];
            for row in col + 1..4 {
                let f = m[row][col] / m[col][col];
                for j in col..4 {
                    let sub = f * m[col][j];
                    m[row][j] -= sub;
                }
            }
        }
        det
    }

    pub fn max_abs_diff(&self, other: &SpinorMatrix) -> f64 {
        self.0
            .iter()
            .flatten()
            .zip(other.0.iter().flatten())
            .map(|(a, b)| (a - b).norm())
            .fold(0.0, f64::max)
    }

    pub fn max_abs(&self) -> f64 {
        self.0
            .iter()
            .flatten()
            .map(|z| z.norm())
            .fold(0.0, f64::max)
    }

    /// Rows of `[re, im]` pairs.
    pub fn to_pairs(&self) -> [[[f64; 2]; 4]; 4] {
        self.0.map(|row| row.map(|z| [z.re, z.im]))
    }
}

impl Mul for SpinorMatrix {
    type Output = SpinorMatrix;
    fn mul(self, rhs: SpinorMatrix) -> SpinorMatrix {
        let mut out = SpinorMatrix::zero();
        for i in 0..4 {
            for j in 0..4 {
                out.0[i][j] = (0..4).map(|k| self.0[i][k] * rhs.0[k][j]).sum();
            }
        }
        out
    }
}

impl Add for SpinorMatrix {
    type Output = SpinorMatrix;
    fn add(mut self, rhs: SpinorMatrix) -> SpinorMatrix {
        self.0
            .iter_mut()
            .flatten()
            .zip(rhs.0.iter().flatten())
            .for_each(|(a, b)| *a += b);
        self
    }
}

impl Sub for SpinorMatrix {
    type Output = SpinorMatrix;
    fn sub(self, rhs: SpinorMatrix) -> SpinorMatrix {
        self + rhs.scale_real(-1.0)
    }
}

/// Four complex components; serialized as `[[re, im]; 4]`.
#[derive(Debug, Clone, Copy, PartialEq, Default, Serialize, Deserialize)]
#[serde(from = "[[f64; 2]; 4]", into = "[[f64; 2]; 4]")]
pub struct Bispinor(pub [Complex64; 4]);

impl Bispinor {
    pub fn from_pairs(pairs: [[f64; 2]; 4]) -> Self {
        Bispinor(pairs.map(|[re, im]| Complex64::new(re, im)))
    }

    pub fn to_pairs(&self) -> [[f64; 2]; 4] {
        self.0.map(|z| [z.re, z.im])
    }

    pub fn is_finite(&self) -> bool {
        self.0.iter().all(|z| z.is_finite())
    }

    pub fn scale(&self, k: f64) -> Bispinor {
        Bispinor(self.0.map(|z| z * k))
    }

    pub fn max_abs_diff(&self, other: &Bispinor) -> f64 {
        self.0
            .iter()
            .zip(other.0.iter())
            .map(|(a, b)| (a - b).norm())
            .fold(0.0, f64::max)
    }

    pub fn norm_sqr(&self) -> f64 {
        self.0.iter().map(|z| z.norm_sqr()).sum()
    }
}

impl From<[[f64; 2]; 4]> for Bispinor {
    fn from(p: [[f64; 2]; 4]) -> Self {
        Bispinor::from_pairs(p)
    }
}

impl From<Bispinor> for [[f64; 2]; 4] {
    fn from(b: Bispinor) -> Self {
        b.to_pairs()
    }
}

/// Row bispinor `psibar = psi^dagger gamma^0`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AdjointBispinor(pub [Complex64; 4]);

impl AdjointBispinor {
    /// `psibar M psi`.
    pub fn sandwich(&self, m: &SpinorMatrix, psi: &Bispinor) -> Complex64 {
        let mpsi = m.apply(psi);
        (0..4).map(|i| self.0[i] * mpsi.0[i]).sum()
    }

    pub fn contract(&self, psi: &Bispinor) -> Complex64 {
        (0..4).map(|i| self.0[i] * psi.0[i]).sum()
    }
}

/// Dirac matrices `gamma^0..gamma^3` and spin matrices `Sigma = diag(sigma, sigma)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GammaBasis {
    pub gamma: [SpinorMatrix; 4],
    pub sigma: [SpinorMatrix; 3],
}

impl GammaBasis {
    /// `gamma . a` over the spatial gammas (contravariant components).
    pub fn gamma_dot(&self, a: Vec3) -> SpinorMatrix {
        self.combine(&self.gamma[1..], a)
    }

    /// `Sigma . a`
    pub fn sigma_dot(&self, a: Vec3) -> SpinorMatrix {
        self.combine(&self.sigma, a)
    }

    fn combine(&self, mats: &[SpinorMatrix], a: Vec3) -> SpinorMatrix {
        mats.iter()
            .zip(a.to_array())
            .fold(SpinorMatrix::zero(), |acc, (m, c)| acc + m.scale_real(c))
    }
}

fn pauli() -> [[[Complex64; 2]; 2]; 3] {
    [
        [[ZERO, ONE], [ONE, ZERO]],
        [[ZERO, -I], [I, ZERO]],
        [[ONE, ZERO], [ZERO, -ONE]],
    ]
}

/// Standard Dirac representation.
pub fn gamma_basis() -> GammaBasis {
    let mut g0 = SpinorMatrix::zero();
    for i in 0..4 {
        g0.0[i][i] = if i < 2 { ONE } else { -ONE };
    }
    let sigma2 = pauli();
    let gk = |k: usize| {
        let mut m = SpinorMatrix::zero();
        for a in 0..2 {
            for b in 0..2 {
                m.0[a][b + 2] = sigma2[k][a][b];
                m.0[a + 2][b] = -sigma2[k][a][b];
            }
        }
        m
    };
    let sk = |k: usize| {
        let mut m = SpinorMatrix::zero();
        for a in 0..2 {
            for b in 0..2 {
                m.0[a][b] = sigma2[k][a][b];
                m.0[a + 2][b + 2] = sigma2[k][a][b];
            }
        }
        m
    };
    GammaBasis {
        gamma: [g0, gk(0), gk(1), gk(2)],
        sigma: [sk(0), sk(1), sk(2)],
    }
}

/// `-gamma^0 (gamma.n) - i Sigma.(nu x n)`; squares to `(nu.n)^2 I`.
pub fn spinor_generator(nu: UnitVector3, n: UnitVector3) -> SpinorMatrix {
    let basis = gamma_basis();
    let boost = basis.gamma[0] * basis.gamma_dot(n.vec());
    let rot = basis.sigma_dot(nu.vec().cross(n.vec())).scale(I);
    (boost + rot).scale_real(-1.0)
}

fn spinor_boost_raw(nu: UnitVector3, n: UnitVector3, alpha: f64, tol: &Tolerance) -> SpinorMatrix {
    let half = 0.5 * nu.dot(n) * alpha;
    // sinh(nu.n alpha/2)/(nu.n) = (alpha/2) sinhc(half); switch tracks |nu.n alpha|
    let odd = 0.5 * alpha * sinhc(half, 0.5 * tol.limit_switch);
    SpinorMatrix::identity().scale_real(half.cosh()) + spinor_generator(nu, n).scale_real(odd)
}

/// `S(nu; n, alpha) = exp({...} alpha / 2)` in closed form.
pub fn spinor_boost(nu: UnitVector3, params: &BoostParams, tol: &Tolerance) -> SpinorMatrix {
    spinor_boost_raw(nu, params.n, params.alpha, tol)
}

/// `S(nu; n, -alpha)`.
pub fn spinor_boost_inverse(
    nu: UnitVector3,
    params: &BoostParams,
    tol: &Tolerance,
) -> SpinorMatrix {
    spinor_boost_raw(nu, params.n, -params.alpha, tol)
}

/// Full bispinor transformation matrix `D^{-3/2} S` written directly in
/// terms of the frame velocity.
pub fn bispinor_matrix(spec: &AnisotropySpec, v: &Velocity3) -> SpinorMatrix {
    let basis = gamma_basis();
    let nu = spec.nu.vec();
    let vv = v.vec();
    let p = nu.dot(vv);
    let w = v.inv_gamma();
    let speed = v.speed();
    let one_m_w = speed * speed / (1.0 + w);
    let level = (1.0 - p) / w;
    let prefactor = level.powf(SPINOR_WEIGHT * spec.r) / (2.0 * ((1.0 - p) * w).sqrt());

    let scalar = SpinorMatrix::identity().scale_real(1.0 - p + w);
    let rot = basis.sigma_dot(nu.cross(vv)).scale(I);
    let boost = basis.gamma[0] * basis.gamma_dot(vv - nu * one_m_w);
    (scalar - rot - boost).scale_real(prefactor)
}

/// `psi' = D^{-3/2} S psi` for the frame moving at `v`.
pub fn bispinor_transform(spec: &AnisotropySpec, v: &Velocity3, psi: &Bispinor) -> Bispinor {
    bispinor_matrix(spec, v).apply(psi)
}

/// `psibar = psi^dagger gamma^0`.
pub fn dirac_adjoint(psi: &Bispinor) -> AdjointBispinor {
    let p = psi.0;
    AdjointBispinor([p[0].conj(), p[1].conj(), -p[2].conj(), -p[3].conj()])
}

fn real_part(z: Complex64, scale: f64) -> f64 {
    debug_assert!(
        z.im.abs() <= 1e-10 * scale.max(1.0),
        "bilinear has imaginary part {}",
        z.im
    );
    z.re
}

/// Scalar density `psibar psi`.
pub fn scalar_density(psi: &Bispinor) -> f64 {
    real_part(dirac_adjoint(psi).contract(psi), psi.norm_sqr())
}

/// Vector current `psibar gamma^n psi`, contravariant.
pub fn vector_current(psi: &Bispinor) -> [f64; 4] {
    let basis = gamma_basis();
    let adj = dirac_adjoint(psi);
    let scale = psi.norm_sqr();
    basis.gamma.map(|g| real_part(adj.sandwich(&g, psi), scale))
}

/// `[(nu_n psibar gamma^n psi / psibar psi)^2]^{-3r/2} psibar psi` with
/// `nu_n = (1, -nu)`.
pub fn finsler_bispinor_invariant(
    spec: &AnisotropySpec,
    psi: &Bispinor,
    tol: &Tolerance,
) -> Result<f64> {
    let density = scalar_density(psi);
    if density.abs() < tol.abs_tol {
        return Err(FinslerError::NullDensity {
            density: density.abs(),
        });
    }
    if spec.r == 0.0 {
        return Ok(density);
    }
    let j = vector_current(psi);
    let nu = spec.nu.vec();
    let projected = j[0] - (nu.x * j[1] + nu.y * j[2] + nu.z * j[3]);
    if projected.abs() <= tol.abs_tol * psi.norm_sqr() && spec.r > 0.0 {
        return Err(FinslerError::NullCurrent { r: spec.r });
    }
    let ratio = projected / density;
    Ok((ratio * ratio).powf(SPINOR_WEIGHT * spec.r) * density)
}
