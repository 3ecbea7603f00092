#![allow(dead_code)]

use dfrft::{Complex64, Matrix};
use std::f64::consts::PI;

pub fn c(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}

/// Confluent Vandermonde matrix for N = 7, as printed (integer / unit entries).
pub fn printed_vandermonde_7() -> Matrix {
    let i = c(0.0, 1.0);
    let r = |x: f64| c(x, 0.0);
    let rows: [[Complex64; 7]; 7] = [
        [r(1.0), r(0.0), r(1.0), r(0.0), r(1.0), r(0.0), r(1.0)],
        [r(1.0), r(1.0), r(-1.0), r(1.0), -i, r(1.0), i],
        [r(1.0), r(2.0), r(1.0), r(-2.0), r(-1.0), -i * 2.0, r(-1.0)],
        [r(1.0), r(3.0), r(-1.0), r(3.0), i, r(-3.0), -i],
        [r(1.0), r(4.0), r(1.0), r(-4.0), r(1.0), i * 4.0, r(1.0)],
        [r(1.0), r(5.0), r(-1.0), r(5.0), -i, r(5.0), i],
        [r(1.0), r(6.0), r(1.0), r(-6.0), r(-1.0), -i * 6.0, r(-1.0)],
    ];
    Matrix::from_row_major(7, 7, rows.iter().flatten().copied().collect()).unwrap()
}

/// Printed (Λᵀ)⁻¹ for N = 7; entries in sixteenths.
pub fn printed_transpose_inverse_7() -> Matrix {
    let s = |re: f64, im: f64| c(re / 16.0, im / 16.0);
    let rows: [[Complex64; 7]; 7] = [
        [
            s(4.0, 3.0),
            s(-1.0, -1.0),
            s(4.0, -3.0),
            s(1.0, -1.0),
            s(7.0, 0.0),
            s(0.0, 2.0),
            s(1.0, 0.0),
        ],
        [
            s(8.0, 0.0),
            s(-2.0, 0.0),
            s(-8.0, 0.0),
            s(-2.0, 0.0),
            s(0.0, 2.0),
            s(0.0, 0.0),
            s(0.0, -2.0),
        ],
        [
            s(6.0, -3.0),
            s(-1.0, 1.0),
            s(6.0, 3.0),
            s(1.0, 1.0),
            s(-9.0, 0.0),
            s(0.0, -2.0),
            s(-3.0, 0.0),
        ],
        [
            s(4.0, 0.0),
            s(0.0, 0.0),
            s(-4.0, 0.0),
            s(0.0, 0.0),
            s(0.0, -4.0),
            s(0.0, 0.0),
            s(0.0, 4.0),
        ],
        [
            s(0.0, -3.0),
            s(1.0, 1.0),
            s(0.0, 3.0),
            s(-1.0, 1.0),
            s(-3.0, 0.0),
            s(0.0, -2.0),
            s(3.0, 0.0),
        ],
        [
            s(-4.0, 0.0),
            s(2.0, 0.0),
            s(4.0, 0.0),
            s(2.0, 0.0),
            s(0.0, 2.0),
            s(0.0, 0.0),
            s(0.0, -2.0),
        ],
        [
            s(-2.0, 3.0),
            s(1.0, -1.0),
            s(-2.0, -3.0),
            s(-1.0, -1.0),
            s(5.0, 0.0),
            s(0.0, 2.0),
            s(-1.0, 0.0),
        ],
    ];
    Matrix::from_row_major(7, 7, rows.iter().flatten().copied().collect()).unwrap()
}

/// `(−1)^x = e^{iπx}`, the notation used for the printed f vector.
fn neg_one_pow(x: f64) -> Complex64 {
    Complex64::from_polar(1.0, PI * x)
}

/// Printed f vector for α = 3/7, N = 7, evaluated literally.
pub fn printed_f_3_7() -> Vec<Complex64> {
    let a = 3.0 / 7.0;
    vec![
        c(1.0, 0.0),
        c(a, 0.0),
        neg_one_pow(3.0 / 7.0),
        -neg_one_pow(3.0 / 7.0) * a,
        -neg_one_pow(11.0 / 14.0),
        neg_one_pow(2.0 / 7.0) * a,
        neg_one_pow(3.0 / 14.0),
    ]
}

/// Entry-by-entry DFT definition with 1-based indices, no modular reduction.
pub fn dft_by_definition(n: usize) -> Matrix {
    Matrix::from_fn(n, n, |r, col| {
        let (j, k) = (r + 1, col + 1);
        Complex64::from_polar(
            1.0 / (n as f64).sqrt(),
            -2.0 * PI * ((j - 1) * (k - 1)) as f64 / n as f64,
        )
    })
}

/// Textbook triple loop.
pub fn naive_matmul(a: &Matrix, b: &Matrix) -> Matrix {
    Matrix::from_fn(a.rows(), b.cols(), |i, j| {
        (0..a.cols()).map(|k| a[(i, k)] * b[(k, j)]).sum()
    })
}

pub fn naive_matvec(a: &Matrix, x: &[Complex64]) -> Vec<Complex64> {
    (0..a.rows())
        .map(|i| (0..a.cols()).map(|k| a[(i, k)] * x[k]).sum())
        .collect()
}

pub fn max_diff(a: &[Complex64], b: &[Complex64]) -> f64 {
    assert_eq!(a.len(), b.len());
    a.iter()
        .zip(b)
        .map(|(x, y)| (x - y).norm())
        .fold(0.0, f64::max)
}

/// Deterministic pseudo-random complex entries in [−1, 1]².
pub struct Lcg(pub u64);

impl Lcg {
    pub fn next_f64(&mut self) -> f64 {
        self.0 = self
            .0
            .wrapping_mul(6364136223846793005)
            .wrapping_add(1442695040888963407);
        ((self.0 >> 11) as f64 / (1u64 << 53) as f64) * 2.0 - 1.0
    }

    pub fn complex(&mut self) -> Complex64 {
        c(self.next_f64(), self.next_f64())
    }

    pub fn vector(&mut self, n: usize) -> Vec<Complex64> {
        (0..n).map(|_| self.complex()).collect()
    }

    pub fn matrix(&mut self, n: usize) -> Matrix {
        Matrix::from_fn(n, n, |_, _| self.complex())
    }
}
