//! Assembly of `F_α = U^α` and its application to signals.
//!
//! Two constructions are provided. [`frft_vandermonde`] evaluates the Hermite
//! interpolating polynomial of `λ^α` at `U` by Horner's scheme.
//! [`frft_projector`] combines the spectral projectors of `U`, each a cubic
//! (at most) Lagrange polynomial in `U`. Since `U` is unitary, both must
//! agree up to rounding; the projector route never solves a linear system.

use std::cell::Cell;
use std::fmt;
use std::str::FromStr;

use num_complex::Complex64;

use crate::error::{DfrftError, Result};
use crate::hermite::{self, principal_arg, CoefficientVector};
use crate::numerics::{self, Matrix, ONE, ZERO};
use crate::order::FrftOrder;
use crate::spectrum::{self, FourthRoot, Spectrum};

/// Vandermonde solve residual above which the result is flagged as ill-conditioned.
pub const ILL_CONDITIONED_RESIDUAL: f64 = 1e-8;

thread_local! {
    static DFT_MATVEC_COUNT: Cell<u64> = const { Cell::new(0) };
}

/// Number of matrix-free DFT matvecs performed on this thread.
pub fn dft_matvec_count() -> u64 {
    DFT_MATVEC_COUNT.with(Cell::get)
}

pub fn reset_dft_matvec_count() {
    DFT_MATVEC_COUNT.with(|c| c.set(0));
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Method {
    #[default]
    Projector,
    Vandermonde,
}

impl Method {
    pub fn as_str(self) -> &'static str {
        match self {
            Method::Projector => "projector",
            Method::Vandermonde => "vandermonde",
        }
    }
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Method {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "projector" => Ok(Method::Projector),
            "vandermonde" => Ok(Method::Vandermonde),
            other => Err(format!(
                "unknown method {other:?} (expected projector or vandermonde)"
            )),
        }
    }
}

/// A computed fractional transform matrix with its provenance.
#[derive(Debug, Clone)]
pub struct FrftMatrix {
    pub order: FrftOrder,
    pub matrix: Matrix,
    pub method: Method,
    /// `‖Λᵀc − f‖∞` for the Vandermonde route, `0` for the projector route.
    pub solve_residual_inf: f64,
    /// Polynomial coefficients, present for the Vandermonde route.
    pub coefficients: Option<CoefficientVector>,
}

impl FrftMatrix {
    pub fn size(&self) -> usize {
        self.matrix.rows()
    }

    pub fn is_ill_conditioned(&self) -> bool {
        self.solve_residual_inf > ILL_CONDITIONED_RESIDUAL
    }

    /// `y = F·x`.
    pub fn apply(&self, x: &[Complex64]) -> Result<Vec<Complex64>> {
        apply(self, x)
    }
}

pub fn frft(order: FrftOrder, n: usize, method: Method) -> Result<FrftMatrix> {
    match method {
        Method::Projector => frft_projector(order, n),
        Method::Vandermonde => frft_vandermonde(order, n),
    }
}

/// Evaluates `Σ c_{n+1} Uⁿ` by Horner's scheme, highest coefficient first.
pub fn eval_matrix_polynomial(coeffs: &[Complex64], u: &Matrix) -> Result<Matrix> {
    let n = u.rows();
    let Some((&last, rest)) = coeffs.split_last() else {
        return Ok(Matrix::zeros(n, n));
    };
    let mut acc = Matrix::identity(n).scale(last);
    for &c in rest.iter().rev() {
        acc = acc.matmul(u)?;
        acc.add_diagonal(c);
    }
    Ok(acc)
}

/// `F_α` as the Hermite interpolating polynomial of `λ^α` evaluated at `U`.
pub fn frft_vandermonde(order: FrftOrder, n: usize) -> Result<FrftMatrix> {
    let u = spectrum::dft_matrix(n)?.into_matrix();
    let coeffs = hermite::solve_coefficients(order.value(), n)?;
    let matrix = eval_matrix_polynomial(&coeffs.entries, &u)?;
    Ok(FrftMatrix {
        order,
        matrix,
        method: Method::Vandermonde,
        solve_residual_inf: coeffs.solve_residual_inf,
        coefficients: Some(coeffs),
    })
}

/// Monomial coefficients (ascending) of the Lagrange basis polynomial
/// `L_i(x) = Π_{j≠i} (x − λ_j)/(λ_i − λ_j)` over the spectrum's distinct eigenvalues.
pub fn lagrange_basis(spectrum: &Spectrum, i: usize) -> Result<Vec<Complex64>> {
    let roots: Vec<Complex64> = spectrum.eigenvalues().map(FourthRoot::value).collect();
    let Some(&li) = roots.get(i) else {
        return Err(DfrftError::EigenvalueIndex {
            index: i,
            len: roots.len(),
        });
    };
    let mut poly = vec![ONE];
    for (j, &lj) in roots.iter().enumerate() {
        if j == i {
            continue;
        }
        let denom = li - lj;
        let mut next = vec![ZERO; poly.len() + 1];
        for (k, &a) in poly.iter().enumerate() {
            next[k + 1] += a / denom;
            next[k] -= a * lj / denom;
        }
        poly = next;
    }
    Ok(poly)
}

/// Coefficients `w_k` with `Σ_i g(λ_i) P_i = Σ_k w_k U^k`.
fn spectral_weights(
    spectrum: &Spectrum,
    g: impl Fn(FourthRoot) -> Complex64,
) -> Result<Vec<Complex64>> {
    let mut weights = vec![ZERO; spectrum.len()];
    for (i, root) in spectrum.eigenvalues().enumerate() {
        let gi = g(root);
        for (w, l) in weights.iter_mut().zip(lagrange_basis(spectrum, i)?) {
            *w += gi * l;
        }
    }
    Ok(weights)
}

/// `[I, U, U², …]` up to degree `len − 1` (at most `U³`).
fn dft_powers(u: &Matrix, len: usize) -> Result<Vec<Matrix>> {
    let mut powers = vec![Matrix::identity(u.rows())];
    if len > 1 {
        powers.push(u.clone());
    }
    while powers.len() < len {
        let next = powers.last().expect("nonempty").matmul(u)?;
        powers.push(next);
    }
    Ok(powers)
}

fn combine(powers: &[Matrix], weights: &[Complex64]) -> Result<Matrix> {
    let n = powers[0].rows();
    let mut out = Matrix::zeros(n, n);
    for (p, &w) in powers.iter().zip(weights) {
        out.axpy(w, p)?;
    }
    Ok(out)
}

/// `Σ_i g(λ_i)·P_i` for the size-`n` DFT.
pub fn spectral_function(n: usize, g: impl Fn(FourthRoot) -> Complex64) -> Result<Matrix> {
    let spectrum = Spectrum::new(n)?;
    let u = spectrum::dft_matrix(n)?.into_matrix();
    let weights = spectral_weights(&spectrum, g)?;
    combine(&dft_powers(&u, weights.len())?, &weights)
}

/// Orthogonal projector onto the eigenspace of the `i`-th active eigenvalue.
pub fn spectral_projector(i: usize, n: usize) -> Result<Matrix> {
    let spectrum = Spectrum::new(n)?;
    let basis = lagrange_basis(&spectrum, i)?;
    let u = spectrum::dft_matrix(n)?.into_matrix();
    combine(&dft_powers(&u, basis.len())?, &basis)
}

/// `F_α = Σ_i λ_i^α P_i` with principal-branch powers.
pub fn frft_projector(order: FrftOrder, n: usize) -> Result<FrftMatrix> {
    let alpha = order.value();
    let matrix = spectral_function(n, |root| root.pow_real(alpha))?;
    Ok(FrftMatrix {
        order,
        matrix,
        method: Method::Projector,
        solve_residual_inf: 0.0,
        coefficients: None,
    })
}

/// `(F_α)^s`, defined eigenvalue by eigenvalue: `Σ_i exp(i·s·Arg(λ_i^α))·P_i`.
pub fn real_power(order: FrftOrder, s: f64, n: usize) -> Result<FrftMatrix> {
    let alpha = order.value();
    let matrix = spectral_function(n, |root| {
        let inner = root.pow_real(alpha);
        Complex64::from_polar(1.0, s * principal_arg(inner))
    })?;
    let order = match order.as_rational() {
        Some((p, q)) if s.fract() == 0.0 => FrftOrder::rational(p * s as i64, q)?,
        _ => FrftOrder::new(alpha * s)?,
    };
    Ok(FrftMatrix {
        order,
        matrix,
        method: Method::Projector,
        solve_residual_inf: 0.0,
        coefficients: None,
    })
}

/// `y = F·x`.
pub fn apply(f: &FrftMatrix, x: &[Complex64]) -> Result<Vec<Complex64>> {
    if x.len() != f.size() {
        return Err(DfrftError::DimensionMismatch {
            op: "apply",
            expected: f.size(),
            actual: x.len(),
        });
    }
    f.matrix.matvec(x)
}

/// Matrix-free unitary DFT of size `n`, `O(n²)` per application.
#[derive(Debug, Clone)]
pub struct DftOperator {
    table: Vec<Complex64>,
}

impl DftOperator {
    pub fn new(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(DfrftError::InvalidSize);
        }
        let scale = 1.0 / (n as f64).sqrt();
        Ok(Self {
            table: (0..n).map(|e| spectrum::twiddle(e, n) * scale).collect(),
        })
    }

    pub fn size(&self) -> usize {
        self.table.len()
    }

    pub fn apply(&self, x: &[Complex64]) -> Result<Vec<Complex64>> {
        let n = self.size();
        if x.len() != n {
            return Err(DfrftError::DimensionMismatch {
                op: "dft matvec",
                expected: n,
                actual: x.len(),
            });
        }
        DFT_MATVEC_COUNT.with(|c| c.set(c.get() + 1));
        Ok((0..n)
            .map(|j| {
                let mut acc = ZERO;
                let mut e = 0usize;
                for xk in x {
                    acc += self.table[e] * xk;
                    e += j;
                    if e >= n {
                        e -= n;
                    }
                }
                acc
            })
            .collect())
    }
}

/// `F_α·x` without forming `F_α`: combines `x, Ux, U²x, U³x` with the
/// Lagrange weights of `λ^α`. Uses at most three DFT matvecs.
pub fn apply_fast(order: FrftOrder, x: &[Complex64]) -> Result<Vec<Complex64>> {
    let n = x.len();
    let spectrum = Spectrum::new(n)?;
    let alpha = order.value();
    let weights = spectral_weights(&spectrum, |root| root.pow_real(alpha))?;
    let op = DftOperator::new(n)?;

    let mut y: Vec<Complex64> = x.iter().map(|v| v * weights[0]).collect();
    let mut current = x.to_vec();
    for &w in &weights[1..] {
        current = op.apply(&current)?;
        for (yi, ci) in y.iter_mut().zip(&current) {
            *yi += w * ci;
        }
    }
    Ok(y)
}

/// `‖F_α − F_β‖max`, convenience for the verification suite.
pub fn max_difference(a: &FrftMatrix, b: &FrftMatrix) -> Result<f64> {
    a.matrix.max_abs_diff(&b.matrix)
}

/// `‖x‖₂` helper re-exported for callers checking norm preservation.
pub fn norm2(x: &[Complex64]) -> f64 {
    numerics::vec_norm2(x)
}
