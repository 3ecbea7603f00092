//! Confluent Vandermonde systems for matrix functions of the DFT matrix.
//!
//! A function `f` of a matrix whose eigenvalues `λ_i` repeat with
//! multiplicity `m_i` is the matrix polynomial `p(U) = Σ c_n Uⁿ`, where `p`
//! is the Hermite interpolant matching `f^{(j)}(λ_i)` for `j < m_i`. The
//! interpolation conditions are the rows of `Λᵀ`, where `Λ` is the confluent
//! Vandermonde matrix whose block `i` holds the first `m_i` derivatives of
//! the monomials `λ^0 … λ^{N−1}` at `λ_i`.

use num_complex::Complex64;

use crate::error::{DfrftError, Result};
use crate::numerics::{self, Matrix, ZERO};
use crate::spectrum::{FourthRoot, Spectrum};

/// Tolerance on `|λ| − 1` accepted by [`principal_power`].
pub const UNIT_CIRCLE_TOL: f64 = 1e-12;

/// `α(α−1)···(α−d+1)`; `1` for `d = 0`.
pub fn falling_factorial(alpha: f64, d: usize) -> f64 {
    (0..d).fold(1.0, |acc, t| acc * (alpha - t as f64))
}

/// Principal argument in `(−π, π]`.
pub fn principal_arg(z: Complex64) -> f64 {
    let a = z.arg();
    if a == -std::f64::consts::PI {
        std::f64::consts::PI
    } else {
        a
    }
}

/// `λ^α = exp(iα·Arg λ)` for `λ` on the unit circle, principal branch.
pub fn principal_power(lambda: Complex64, alpha: f64) -> Result<Complex64> {
    let modulus = lambda.norm();
    if modulus == 0.0 {
        return Err(DfrftError::ZeroBase);
    }
    if (modulus - 1.0).abs() > UNIT_CIRCLE_TOL {
        return Err(DfrftError::OffUnitCircle { modulus });
    }
    Ok(Complex64::from_polar(1.0, alpha * principal_arg(lambda)))
}

/// `d^d/dλ^d λ^α = α(α−1)···(α−d+1)·λ^{α−d}` on the principal branch.
pub fn power_derivative(lambda: Complex64, alpha: f64, d: usize) -> Result<Complex64> {
    let base = principal_power(lambda, alpha - d as f64)?;
    Ok(base * falling_factorial(alpha, d))
}

impl FourthRoot {
    /// Principal-branch real power; integer exponents are exact.
    pub fn pow_real(self, x: f64) -> Complex64 {
        if x.fract() == 0.0 && x.abs() < 9.0e15 {
            self.powi(x as i64)
        } else {
            Complex64::from_polar(1.0, x * self.arg())
        }
    }

    /// `d`-th derivative of `λ^α` at this root.
    pub fn power_derivative(self, alpha: f64, d: usize) -> Complex64 {
        self.pow_real(alpha - d as f64) * falling_factorial(alpha, d)
    }
}

/// `d`-th derivative of the monomial `λ^k` at `root`: `k!/(k−d)!·λ^{k−d}`.
fn monomial_derivative(root: FourthRoot, k: usize, d: usize) -> Complex64 {
    if d > k {
        return ZERO;
    }
    let coeff = (0..d).fold(1u128, |acc, t| acc * (k - t) as u128);
    root.powi((k - d) as i64) * coeff as f64
}

/// Confluent Vandermonde matrix `Λ` of a DFT spectrum.
#[derive(Debug, Clone, PartialEq)]
pub struct ConfluentVandermonde {
    spectrum: Spectrum,
    matrix: Matrix,
}

impl ConfluentVandermonde {
    /// Row `k` (0-based) of block `i`, column `j`, is `d^j/dλ^j λ^k` at `λ_i`.
    pub fn new(spectrum: &Spectrum) -> Result<Self> {
        let n = spectrum.size();
        let sum = spectrum.total_multiplicity();
        if sum != n {
            return Err(DfrftError::InconsistentSpectrum { size: n, sum });
        }
        let columns: Vec<(FourthRoot, usize)> = spectrum
            .entries()
            .iter()
            .flat_map(|&(root, m)| (0..m).map(move |d| (root, d)))
            .collect();
        let matrix = Matrix::from_fn(n, n, |k, col| {
            let (root, d) = columns[col];
            monomial_derivative(root, k, d)
        });
        Ok(Self {
            spectrum: spectrum.clone(),
            matrix,
        })
    }

    pub fn size(&self) -> usize {
        self.spectrum.size()
    }

    pub fn matrix(&self) -> &Matrix {
        &self.matrix
    }

    pub fn spectrum(&self) -> &Spectrum {
        &self.spectrum
    }

    /// Explicit `(Λᵀ)⁻¹`. Diagnostic only; coefficients are obtained by a direct solve.
    pub fn transpose_inverse(&self) -> Result<Matrix> {
        numerics::invert(&self.matrix.transpose())
    }
}

pub fn build_vandermonde(spectrum: &Spectrum) -> Result<ConfluentVandermonde> {
    ConfluentVandermonde::new(spectrum)
}

pub fn invert_vandermonde_transpose(v: &ConfluentVandermonde) -> Result<Matrix> {
    v.transpose_inverse()
}

/// Right-hand side `f`: block `i` holds `d^j/dλ^j λ^α` at `λ_i`, `j < m_i`.
#[derive(Debug, Clone, PartialEq)]
pub struct OrderFunctionVector {
    pub order: f64,
    pub entries: Vec<Complex64>,
}

pub fn build_f_vector(alpha: f64, spectrum: &Spectrum) -> OrderFunctionVector {
    let entries = spectrum
        .entries()
        .iter()
        .flat_map(|&(root, m)| (0..m).map(move |d| root.power_derivative(alpha, d)))
        .collect();
    OrderFunctionVector {
        order: alpha,
        entries,
    }
}

/// Coefficients of `F_α = Σ c_{n} Uⁿ` (0-based `n`), with the residual of `Λᵀc = f`.
#[derive(Debug, Clone, PartialEq)]
pub struct CoefficientVector {
    pub order: f64,
    pub entries: Vec<Complex64>,
    pub solve_residual_inf: f64,
}

impl CoefficientVector {
    pub fn size(&self) -> usize {
        self.entries.len()
    }
}

/// Solves `Λᵀc = f` for the Vandermonde of `spectrum`.
pub fn solve_coefficients_for(alpha: f64, spectrum: &Spectrum) -> Result<CoefficientVector> {
    let lambda = ConfluentVandermonde::new(spectrum)?;
    let f = build_f_vector(alpha, spectrum);
    let sol = numerics::solve_linear(&lambda.matrix.transpose(), &f.entries)?;
    Ok(CoefficientVector {
        order: alpha,
        entries: sol.x,
        solve_residual_inf: sol.residual_inf,
    })
}

pub fn solve_coefficients(alpha: f64, n: usize) -> Result<CoefficientVector> {
    solve_coefficients_for(alpha, &Spectrum::new(n)?)
}
