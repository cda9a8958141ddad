use std::ops::Mul;

use serde::{Deserialize, Serialize};

use crate::vector::FourVector;

/// Real 4x4 matrix acting on contravariant four-vectors.
///
/// Row index is the upper index, column index the lower one, so
/// `x'^i = M[i][k] x^k`. Serialized row-major as 16 numbers.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "Vec<f64>", into = "Vec<f64>")]
pub struct Matrix4(pub [[f64; 4]; 4]);

impl Matrix4 {
    pub const IDENTITY: Matrix4 = Matrix4([
        [1.0, 0.0, 0.0, 0.0],
        [0.0, 1.0, 0.0, 0.0],
        [0.0, 0.0, 1.0, 0.0],
        [0.0, 0.0, 0.0, 1.0],
    ]);

    pub const ZERO: Matrix4 = Matrix4([[0.0; 4]; 4]);

    pub fn get(&self, row: usize, col: usize) -> f64 {
        self.0[row][col]
    }

    pub fn scale(&self, k: f64) -> Matrix4 {
        let mut out = *self;
        out.0.iter_mut().flatten().for_each(|e| *e *= k);
        out
    }

    pub fn transpose(&self) -> Matrix4 {
        let mut out = Matrix4::ZERO;
        for i in 0..4 {
            for j in 0..4 {
                out.0[i][j] = self.0[j][i];
            }
        }
        out
    }

    pub fn apply(&self, x: FourVector) -> FourVector {
        let v = x.to_array();
        let row = |i: usize| (0..4).map(|k| self.0[i][k] * v[k]).sum::<f64>();
        FourVector::new(row(0), row(1), row(2), row(3))
    }

    /// Determinant by cofactor expansion along the first row.
    pub fn det(&self) -> f64 {
        let m = &self.0;
        let minor = |skip: usize| {
            let cols: Vec<usize> = (0..4).filter(|&c| c != skip).collect();
            let a = |r: usize, c: usize| m[r][cols[c]];
            a(1, 0) * (a(2, 1) * a(3, 2) - a(2, 2) * a(3, 1))
                - a(1, 1) * (a(2, 0) * a(3, 2) - a(2, 2) * a(3, 0))
                + a(1, 2) * (a(2, 0) * a(3, 1) - a(2, 1) * a(3, 0))
        };
        (0..4)
            .map(|c| {
                let sign = if c % 2 == 0 { 1.0 } else { -1.0 };
                sign * m[0][c] * minor(c)
            })
            .sum()
    }

    pub fn max_abs_diff(&self, other: &Matrix4) -> f64 {
        self.0
            .iter()
            .flatten()
            .zip(other.0.iter().flatten())
            .map(|(a, b)| (a - b).abs())
            .fold(0.0, f64::max)
    }

    pub fn is_finite(&self) -> bool {
        self.0.iter().flatten().all(|e| e.is_finite())
    }

    pub fn to_row_major(&self) -> Vec<f64> {
        self.0.iter().flatten().copied().collect()
    }
}

impl Mul for Matrix4 {
    type Output = Matrix4;
    fn mul(self, rhs: Matrix4) -> Matrix4 {
        let mut out = Matrix4::ZERO;
        for i in 0..4 {
            for j in 0..4 {
                out.0[i][j] = (0..4).map(|k| self.0[i][k] * rhs.0[k][j]).sum();
            }
        }
        out
    }
}

impl Mul<FourVector> for Matrix4 {
    type Output = FourVector;
    fn mul(self, x: FourVector) -> FourVector {
        self.apply(x)
    }
}

impl TryFrom<Vec<f64>> for Matrix4 {
    type Error = String;
    fn try_from(v: Vec<f64>) -> Result<Self, String> {
        if v.len() != 16 {
            return Err(format!("expected 16 entries, got {}", v.len()));
        }
        let mut m = Matrix4::ZERO;
        for (i, e) in v.into_iter().enumerate() {
            m.0[i / 4][i % 4] = e;
        }
        Ok(m)
    }
}

impl From<Matrix4> for Vec<f64> {
    fn from(m: Matrix4) -> Vec<f64> {
        m.to_row_major()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn determinant_of_known_matrices() {
        assert_eq!(Matrix4::IDENTITY.det(), 1.0);
        assert_eq!(Matrix4::IDENTITY.scale(2.0).det(), 16.0);
        let m = Matrix4([
            [2.0, 1.0, 0.0, 0.0],
            [1.0, 3.0, 1.0, 0.0],
            [0.0, 1.0, 4.0, 1.0],
            [0.0, 0.0, 1.0, 5.0],
        ]);
        // tridiagonal recurrence: 2, 5, 18, 85
        assert!((m.det() - 85.0).abs() < 1e-12);
    }

    #[test]
    fn product_and_apply_agree() {
        let a = Matrix4([
            [1.0, 2.0, 0.0, 0.0],
            [0.0, 1.0, 0.0, 3.0],
            [0.0, 0.0, 1.0, 0.0],
            [4.0, 0.0, 0.0, 1.0],
        ]);
        let x = FourVector::new(1.0, -1.0, 2.0, 0.5);
        assert_eq!((a * a) * x, a * (a * x));
        assert_eq!(a.transpose().transpose(), a);
    }

    #[test]
    fn serializes_row_major() {
        let json = serde_json::to_string(&Matrix4::IDENTITY).unwrap();
        assert_eq!(
            json,
            "[1.0,0.0,0.0,0.0,0.0,1.0,0.0,0.0,0.0,0.0,1.0,0.0,0.0,0.0,0.0,1.0]"
        );
        let back: Matrix4 = serde_json::from_str(&json).unwrap();
        assert_eq!(back, Matrix4::IDENTITY);
        assert!(serde_json::from_str::<Matrix4>("[1,2,3]").is_err());
    }
}
