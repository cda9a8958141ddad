//! Reference routines used only to cross-check the closed forms: a
//! scaling-and-squaring Taylor matrix exponential and Gauss-Jordan
//! inversion for 4x4 matrices. Nothing on the production path calls these.

use num_complex::Complex64;

use crate::matrix::Matrix4;
use crate::spinor::SpinorMatrix;

type CMat = [[Complex64; 4]; 4];

const ZERO: Complex64 = Complex64::new(0.0, 0.0);
const ONE: Complex64 = Complex64::new(1.0, 0.0);

fn identity() -> CMat {
    let mut m = [[ZERO; 4]; 4];
    (0..4).for_each(|i| m[i][i] = ONE);
    m
}

fn mul(a: &CMat, b: &CMat) -> CMat {
    let mut out = [[ZERO; 4]; 4];
    for i in 0..4 {
        for j in 0..4 {
            out[i][j] = (0..4).map(|k| a[i][k] * b[k][j]).sum();
        }
    }
    out
}

fn norm_inf(a: &CMat) -> f64 {
    a.iter()
        .map(|row| row.iter().map(|z| z.norm()).sum::<f64>())
        .fold(0.0, f64::max)
}

fn expm_raw(a: &CMat) -> CMat {
    // scale so the Taylor series converges to round-off in ~20 terms
    let norm = norm_inf(a);
    let squarings = if norm > 0.25 {
        (norm / 0.25).log2().ceil() as i32
    } else {
        0
    };
    let scale = 0.5f64.powi(squarings);
    let scaled: CMat = a.map(|row| row.map(|z| z * scale));

    let mut sum = identity();
    let mut term = identity();
    for k in 1..=24 {
        term = mul(&term, &scaled).map(|row| row.map(|z| z / k as f64));
        for i in 0..4 {
            for j in 0..4 {
                sum[i][j] += term[i][j];
            }
        }
    }
    for _ in 0..squarings {
        sum = mul(&sum, &sum);
    }
    sum
}

/// Matrix exponential of a real 4x4 matrix.
pub fn expm_real(a: &Matrix4) -> Matrix4 {
    let c: CMat = a.0.map(|row| row.map(|x| Complex64::new(x, 0.0)));
    Matrix4(expm_raw(&c).map(|row| row.map(|z| z.re)))
}

/// Matrix exponential of a complex 4x4 matrix.
pub fn expm_complex(a: &SpinorMatrix) -> SpinorMatrix {
    SpinorMatrix(expm_raw(&a.0))
}

/// Gauss-Jordan inverse with partial pivoting; `None` if singular.
pub fn inverse_complex(a: &SpinorMatrix) -> Option<SpinorMatrix> {
    let mut m = a.0;
    let mut inv = identity();
    for col in 0..4 {
        let pivot = (col..4).max_by(|&i, &j| m[i][col].norm().total_cmp(&m[j][col].norm()))?;
        if m[pivot][col].norm() == 0.0 {
            return None;
        }
        m.swap(col, pivot);
        inv.swap(col, pivot);
        let p = m[col][col];
        for j in 0..4 {
            m[col][j] /= p;
            inv[col][j] /= p;
        }
        for row in 0..4 {
            if row != col {
                let f = m[row][col];
                for j in 0..4 {
                    m[row][j] -= f * m[col][j];
                    inv[row][j] -= f * inv[col][j];
                }
            }
        }
    }
    Some(SpinorMatrix(inv))
}
