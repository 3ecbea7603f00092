//! Dense complex matrices and a partially pivoted linear solver.
//!
//! Storage is row-major. Matrix products sum left to right over the inner
//! index so results are bitwise reproducible for fixed inputs.

use std::cell::Cell;
use std::fmt;
use std::ops::{Index, IndexMut};

use num_complex::Complex64;

use crate::error::{DfrftError, Result};

/// Relative pivot threshold below which a system is treated as singular.
pub const SINGULAR_PIVOT_RTOL: f64 = 1e-14;

pub(crate) const ZERO: Complex64 = Complex64::new(0.0, 0.0);
pub(crate) const ONE: Complex64 = Complex64::new(1.0, 0.0);

thread_local! {
    static MATMUL_COUNT: Cell<u64> = const { Cell::new(0) };
}

/// Number of matrix-matrix products performed on this thread.
pub fn matmul_count() -> u64 {
    MATMUL_COUNT.with(Cell::get)
}

pub fn reset_matmul_count() {
    MATMUL_COUNT.with(|c| c.set(0));
}

/// Row-major dense complex matrix.
#[derive(Clone, PartialEq)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<Complex64>,
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self {
            rows,
            cols,
            data: vec![ZERO; rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = ONE;
        }
        m
    }

    /// Builds a matrix from row-major entries.
    pub fn from_row_major(rows: usize, cols: usize, data: Vec<Complex64>) -> Result<Self> {
        if data.len() != rows * cols {
            return Err(DfrftError::DimensionMismatch {
                op: "from_row_major",
                expected: rows * cols,
                actual: data.len(),
            });
        }
        Ok(Self { rows, cols, data })
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> Complex64) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Self { rows, cols, data }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn as_slice(&self) -> &[Complex64] {
        &self.data
    }

    pub fn row(&self, i: usize) -> &[Complex64] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vec<Complex64> {
        (0..self.rows).map(|i| self[(i, j)]).collect()
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |i, j| self[(j, i)])
    }

    /// Conjugate transpose.
    pub fn adjoint(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |i, j| self[(j, i)].conj())
    }

    pub fn trace(&self) -> Complex64 {
        (0..self.rows.min(self.cols)).map(|i| self[(i, i)]).sum()
    }

    pub fn scale(&self, s: Complex64) -> Self {
        Self {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|z| z * s).collect(),
        }
    }

    /// `self += s * other`.
    pub fn axpy(&mut self, s: Complex64, other: &Matrix) -> Result<()> {
        self.check_same_shape(other, "axpy")?;
        for (a, b) in self.data.iter_mut().zip(&other.data) {
            *a += s * b;
        }
        Ok(())
    }

    pub fn sub(&self, other: &Matrix) -> Result<Matrix> {
        self.check_same_shape(other, "sub")?;
        let data = self
            .data
            .iter()
            .zip(&other.data)
            .map(|(a, b)| a - b)
            .collect();
        Ok(Self {
            rows: self.rows,
            cols: self.cols,
            data,
        })
    }

    /// Adds `s` to every diagonal entry.
    pub fn add_diagonal(&mut self, s: Complex64) {
        for i in 0..self.rows.min(self.cols) {
            self[(i, i)] += s;
        }
    }

    /// Max row-sum norm.
    pub fn norm_inf(&self) -> f64 {
        (0..self.rows)
            .map(|i| self.row(i).iter().map(|z| z.norm()).sum::<f64>())
            .fold(0.0, f64::max)
    }

    /// Largest entry modulus.
    pub fn norm_max_entry(&self) -> f64 {
        self.data.iter().map(|z| z.norm()).fold(0.0, f64::max)
    }

    /// Largest entrywise modulus of `self - other`.
    pub fn max_abs_diff(&self, other: &Matrix) -> Result<f64> {
        self.check_same_shape(other, "max_abs_diff")?;
        Ok(self
            .data
            .iter()
            .zip(&other.data)
            .map(|(a, b)| (a - b).norm())
            .fold(0.0, f64::max))
    }

    pub fn approx_eq(&self, other: &Matrix, tol: f64) -> Result<bool> {
        Ok(self.max_abs_diff(other)? <= tol)
    }

    /// `‖self − I‖max`, for square matrices.
    pub fn distance_from_identity(&self) -> Result<f64> {
        self.max_abs_diff(&Matrix::identity(self.rows))
    }

    pub fn matmul(&self, other: &Matrix) -> Result<Matrix> {
        if self.cols != other.rows {
            return Err(DfrftError::DimensionMismatch {
                op: "matmul",
                expected: self.cols,
                actual: other.rows,
            });
        }
        MATMUL_COUNT.with(|c| c.set(c.get() + 1));
        let mut out = Matrix::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            let a_row = self.row(i);
            for j in 0..other.cols {
                let mut acc = ZERO;
                for (k, a) in a_row.iter().enumerate() {
                    acc += a * other.data[k * other.cols + j];
                }
                out.data[i * other.cols + j] = acc;
            }
        }
        Ok(out)
    }

    pub fn matvec(&self, x: &[Complex64]) -> Result<Vec<Complex64>> {
        if self.cols != x.len() {
            return Err(DfrftError::DimensionMismatch {
                op: "matvec",
                expected: self.cols,
                actual: x.len(),
            });
        }
        Ok((0..self.rows)
            .map(|i| {
                self.row(i)
                    .iter()
                    .zip(x)
                    .fold(ZERO, |acc, (a, b)| acc + a * b)
            })
            .collect())
    }

    /// `‖U·U† − I‖max`.
    pub fn unitarity_defect(&self) -> Result<f64> {
        self.matmul(&self.adjoint())?.distance_from_identity()
    }

    pub fn is_finite(&self) -> bool {
        self.data
            .iter()
            .all(|z| z.re.is_finite() && z.im.is_finite())
    }

    fn check_same_shape(&self, other: &Matrix, op: &'static str) -> Result<()> {
        if self.rows != other.rows || self.cols != other.cols {
            return Err(DfrftError::ShapeMismatch {
                op,
                left: (self.rows, self.cols),
                right: (other.rows, other.cols),
            });
        }
        Ok(())
    }
}

impl Index<(usize, usize)> for Matrix {
    type Output = Complex64;

    fn index(&self, (i, j): (usize, usize)) -> &Complex64 {
        assert!(
            i < self.rows && j < self.cols,
            "index ({i}, {j}) out of bounds"
        );
        &self.data[i * self.cols + j]
    }
}

impl IndexMut<(usize, usize)> for Matrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Complex64 {
        assert!(
            i < self.rows && j < self.cols,
            "index ({i}, {j}) out of bounds"
        );
        &mut self.data[i * self.cols + j]
    }
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Matrix {}x{} [", self.rows, self.cols)?;
        for i in 0..self.rows {
            write!(f, "  ")?;
            for z in self.row(i) {
                write!(f, "{:>10.6}{:+.6}i ", z.re, z.im)?;
            }
            writeln!(f)?;
        }
        write!(f, "]")
    }
}

/// Max-modulus norm of a vector.
pub fn vec_norm_inf(x: &[Complex64]) -> f64 {
    x.iter().map(|z| z.norm()).fold(0.0, f64::max)
}

pub fn vec_norm2(x: &[Complex64]) -> f64 {
    x.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt()
}

pub fn vec_max_abs_diff(a: &[Complex64], b: &[Complex64]) -> f64 {
    debug_assert_eq!(a.len(), b.len());
    a.iter()
        .zip(b)
        .map(|(x, y)| (x - y).norm())
        .fold(0.0, f64::max)
}

/// `‖a·x − rhs‖∞`.
pub fn residual_inf(a: &Matrix, x: &[Complex64], rhs: &[Complex64]) -> Result<f64> {
    let ax = a.matvec(x)?;
    if ax.len() != rhs.len() {
        return Err(DfrftError::DimensionMismatch {
            op: "residual_inf",
            expected: ax.len(),
            actual: rhs.len(),
        });
    }
    Ok(vec_max_abs_diff(&ax, rhs))
}

/// LU factorization with partial (row) pivoting, `P·A = L·U` packed in place.
#[derive(Debug, Clone)]
pub struct LuFactors {
    lu: Matrix,
    perm: Vec<usize>,
}

impl LuFactors {
    pub fn factor(a: &Matrix) -> Result<Self> {
        if !a.is_square() {
            return Err(DfrftError::NotSquare {
                rows: a.rows,
                cols: a.cols,
            });
        }
        let n = a.rows;
        let threshold = SINGULAR_PIVOT_RTOL * a.norm_max_entry();
        let mut lu = a.clone();
        let mut perm: Vec<usize> = (0..n).collect();

        for k in 0..n {
            let (p, pivot_abs) =
                (k..n)
                    .map(|i| (i, lu[(i, k)].norm()))
                    .fold(
                        (k, -1.0),
                        |best, cur| if cur.1 > best.1 { cur } else { best },
                    );
            if pivot_abs <= threshold || pivot_abs == 0.0 {
                return Err(DfrftError::Singular {
                    column: k,
                    pivot: pivot_abs,
                    threshold,
                });
            }
            if p != k {
                for j in 0..n {
                    lu.data.swap(k * n + j, p * n + j);
                }
                perm.swap(k, p);
            }
            let pivot = lu[(k, k)];
            for i in k + 1..n {
                let l = lu[(i, k)] / pivot;
                lu[(i, k)] = l;
                if l != ZERO {
                    for j in k + 1..n {
                        let u = lu[(k, j)];
                        lu[(i, j)] -= l * u;
                    }
                }
            }
        }
        Ok(Self { lu, perm })
    }

    pub fn solve(&self, rhs: &[Complex64]) -> Result<Vec<Complex64>> {
        let n = self.lu.rows;
        if rhs.len() != n {
            return Err(DfrftError::DimensionMismatch {
                op: "solve",
                expected: n,
                actual: rhs.len(),
            });
        }
        let mut x: Vec<Complex64> = self.perm.iter().map(|&p| rhs[p]).collect();
        for i in 0..n {
            let row = self.lu.row(i);
            let acc = row[..i]
                .iter()
                .zip(&x[..i])
                .fold(x[i], |acc, (l, xj)| acc - l * xj);
            x[i] = acc;
        }
        for i in (0..n).rev() {
            let row = self.lu.row(i);
            let acc = row[i + 1..]
                .iter()
                .zip(&x[i + 1..])
                .fold(x[i], |acc, (u, xj)| acc - u * xj);
            x[i] = acc / row[i];
        }
        Ok(x)
    }
}

/// Solution of a square system together with its infinity-norm residual.
#[derive(Debug, Clone)]
pub struct Solution {
    pub x: Vec<Complex64>,
    pub residual_inf: f64,
}

/// Solves `a·x = rhs` by partially pivoted elimination and reports `‖a·x − rhs‖∞`.
pub fn solve_linear(a: &Matrix, rhs: &[Complex64]) -> Result<Solution> {
    if a.rows != rhs.len() {
        return Err(DfrftError::DimensionMismatch {
            op: "solve_linear",
            expected: a.rows,
            actual: rhs.len(),
        });
    }
    let x = LuFactors::factor(a)?.solve(rhs)?;
    let residual_inf = residual_inf(a, &x, rhs)?;
    Ok(Solution { x, residual_inf })
}

/// Explicit inverse by solving against each basis vector.
pub fn invert(a: &Matrix) -> Result<Matrix> {
    let lu = LuFactors::factor(a)?;
    let n = a.rows;
    let mut inv = Matrix::zeros(n, n);
    let mut e = vec![ZERO; n];
    for j in 0..n {
        e.iter_mut().for_each(|z| *z = ZERO);
        e[j] = ONE;
        let col = lu.solve(&e)?;
        for (i, z) in col.into_iter().enumerate() {
            inv[(i, j)] = z;
        }
    }
    Ok(inv)
}
