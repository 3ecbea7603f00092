//! Discrete fractional Fourier transform `F_α = U^α` of the unitary DFT
//! matrix `U`, for any real order `α`.
//!
//! The transform is built as a matrix function: `U` has only the fourth
//! roots of unity as eigenvalues, with multiplicities fixed by `N mod 4`,
//! so `U^α` is a polynomial in `U` whose coefficients solve a confluent
//! Vandermonde system. A spectral-projector construction serves as the
//! default, condition-free route and as an independent check.
//!
//! ```
//! use dfrft::{frft, FrftOrder, Method};
//!
//! let order: FrftOrder = "1/2".parse().unwrap();
//! let half = frft(order, 8, Method::Projector).unwrap();
//! let full = half.matrix.matmul(&half.matrix).unwrap();
//! let dft = dfrft::dft_matrix(8).unwrap();
//! assert!(full.max_abs_diff(dft.matrix()).unwrap() < 1e-12);
//! ```

pub mod cli;
pub mod engine;
pub mod error;
pub mod hermite;
pub mod io;
pub mod numerics;
pub mod order;
pub mod spectrum;
pub mod verify;

pub use engine::{
    apply, apply_fast, frft, frft_projector, frft_vandermonde, real_power, spectral_projector,
    FrftMatrix, Method,
};
pub use error::{DfrftError, Result};
pub use hermite::{
    build_f_vector, build_vandermonde, invert_vandermonde_transpose, power_derivative,
    principal_power, solve_coefficients, CoefficientVector, ConfluentVandermonde,
    OrderFunctionVector,
};
pub use numerics::{solve_linear, Matrix};
pub use order::FrftOrder;
pub use spectrum::{dft_matrix, multiplicities, DftMatrix, FourthRoot, Multiplicities, Spectrum};

pub use num_complex::Complex64;
