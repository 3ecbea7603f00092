//! C ABI over `dfrft`.
//!
//! Transform matrices are exposed as an opaque `DfrftMatrix` handle that the
//! caller owns and releases with `dfrft_matrix_free`. Every fallible call
//! returns a `DfrftStatus`; outputs are written through pointer arguments
//! only on success. Complex numbers cross the boundary as `{re, im}` pairs,
//! matrices in row-major order.

use std::ffi::c_char;
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;
use std::slice;

use dfrft::{engine, hermite, spectrum, DfrftError, FrftMatrix, FrftOrder, Method};
use num_complex::Complex64;

/// Result code of every fallible call.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DfrftStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidSize = 2,
    InvalidOrder = 3,
    LengthMismatch = 4,
    Singular = 5,
    InvalidArgument = 6,
    Panic = 7,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DfrftMethod {
    Projector = 0,
    Vandermonde = 1,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct DfrftComplex {
    pub re: f64,
    pub im: f64,
}

impl From<Complex64> for DfrftComplex {
    fn from(z: Complex64) -> Self {
        Self { re: z.re, im: z.im }
    }
}

impl From<DfrftComplex> for Complex64 {
    fn from(z: DfrftComplex) -> Self {
        Complex64::new(z.re, z.im)
    }
}

/// Opaque transform matrix.
pub struct DfrftMatrix {
    inner: FrftMatrix,
}

impl From<DfrftMethod> for Method {
    fn from(m: DfrftMethod) -> Self {
        match m {
            DfrftMethod::Projector => Method::Projector,
            DfrftMethod::Vandermonde => Method::Vandermonde,
        }
    }
}

fn status_of(e: &DfrftError) -> DfrftStatus {
    match e {
        DfrftError::InvalidSize => DfrftStatus::InvalidSize,
        DfrftError::InvalidOrder(_) => DfrftStatus::InvalidOrder,
        DfrftError::DimensionMismatch { .. } | DfrftError::ShapeMismatch { .. } => {
            DfrftStatus::LengthMismatch
        }
        DfrftError::Singular { .. } => DfrftStatus::Singular,
        _ => DfrftStatus::InvalidArgument,
    }
}

fn guard(f: impl FnOnce() -> Result<(), DfrftStatus>) -> DfrftStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => DfrftStatus::Ok,
        Ok(Err(s)) => s,
        Err(_) => DfrftStatus::Panic,
    }
}

fn lift<T>(r: dfrft::Result<T>) -> Result<T, DfrftStatus> {
    r.map_err(|e| status_of(&e))
}

fn order_of(value: f64) -> Result<FrftOrder, DfrftStatus> {
    FrftOrder::new(value).map_err(|_| DfrftStatus::InvalidOrder)
}

unsafe fn input<'a>(
    ptr: *const DfrftComplex,
    len: usize,
) -> Result<&'a [DfrftComplex], DfrftStatus> {
    if ptr.is_null() {
        return if len == 0 {
            Ok(&[])
        } else {
            Err(DfrftStatus::NullPointer)
        };
    }
    Ok(slice::from_raw_parts(ptr, len))
}

unsafe fn output<'a>(
    ptr: *mut DfrftComplex,
    len: usize,
) -> Result<&'a mut [DfrftComplex], DfrftStatus> {
    if ptr.is_null() {
        return Err(DfrftStatus::NullPointer);
    }
    Ok(slice::from_raw_parts_mut(ptr, len))
}

unsafe fn store_handle(out: *mut *mut DfrftMatrix, inner: FrftMatrix) -> Result<(), DfrftStatus> {
    *out = Box::into_raw(Box::new(DfrftMatrix { inner }));
    Ok(())
}

/// Static, NUL-terminated description of a status code. Never free it.
#[no_mangle]
pub extern "C" fn dfrft_status_message(status: DfrftStatus) -> *const c_char {
    let s: &'static [u8] = match status {
        DfrftStatus::Ok => b"ok\0",
        DfrftStatus::NullPointer => b"null pointer argument\0",
        DfrftStatus::InvalidSize => b"transform size must be at least 1\0",
        DfrftStatus::InvalidOrder => b"invalid transform order\0",
        DfrftStatus::LengthMismatch => b"buffer length does not match the transform size\0",
        DfrftStatus::Singular => b"linear system is singular to working precision\0",
        DfrftStatus::InvalidArgument => b"invalid argument\0",
        DfrftStatus::Panic => b"internal error\0",
    };
    s.as_ptr().cast()
}

/// Builds `F_order` of size `n`.
///
/// # Safety
/// `out` must be a valid pointer to writable storage for one handle.
#[no_mangle]
pub unsafe extern "C" fn dfrft_matrix_new(
    order: f64,
    n: usize,
    method: DfrftMethod,
    out: *mut *mut DfrftMatrix,
) -> DfrftStatus {
    guard(|| {
        if out.is_null() {
            return Err(DfrftStatus::NullPointer);
        }
        let f = lift(engine::frft(order_of(order)?, n, method.into()))?;
        store_handle(out, f)
    })
}

/// Builds `F_{p/q}` keeping the exact rational order.
///
/// # Safety
/// `out` must be a valid pointer to writable storage for one handle.
#[no_mangle]
pub unsafe extern "C" fn dfrft_matrix_new_rational(
    numerator: i64,
    denominator: i64,
    n: usize,
    method: DfrftMethod,
    out: *mut *mut DfrftMatrix,
) -> DfrftStatus {
    guard(|| {
        if out.is_null() {
            return Err(DfrftStatus::NullPointer);
        }
        let order = lift(FrftOrder::rational(numerator, denominator))?;
        let f = lift(engine::frft(order, n, method.into()))?;
        store_handle(out, f)
    })
}

/// Builds `(F_order)^s` by per-eigenvalue branch composition.
///
/// # Safety
/// `out` must be a valid pointer to writable storage for one handle.
#[no_mangle]
pub unsafe extern "C" fn dfrft_real_power(
    order: f64,
    s: f64,
    n: usize,
    out: *mut *mut DfrftMatrix,
) -> DfrftStatus {
    guard(|| {
        if out.is_null() {
            return Err(DfrftStatus::NullPointer);
        }
        if !s.is_finite() {
            return Err(DfrftStatus::InvalidArgument);
        }
        let f = lift(engine::real_power(order_of(order)?, s, n))?;
        store_handle(out, f)
    })
}

/// Releases a handle. Null is ignored.
///
/// # Safety
/// `m` must be null or a handle returned by this library that has not been freed.
#[no_mangle]
pub unsafe extern "C" fn dfrft_matrix_free(m: *mut DfrftMatrix) {
    if !m.is_null() {
        drop(Box::from_raw(m));
    }
}

/// Transform size, or 0 for a null handle.
///
/// # Safety
/// `m` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn dfrft_matrix_size(m: *const DfrftMatrix) -> usize {
    m.as_ref().map_or(0, |m| m.inner.size())
}

/// Order value of the handle, NaN for a null handle.
///
/// # Safety
/// `m` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn dfrft_matrix_order(m: *const DfrftMatrix) -> f64 {
    m.as_ref().map_or(f64::NAN, |m| m.inner.order.value())
}

/// Vandermonde solve residual (`0` for the projector method).
///
/// # Safety
/// `m` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn dfrft_matrix_residual(m: *const DfrftMatrix) -> f64 {
    m.as_ref().map_or(f64::NAN, |m| m.inner.solve_residual_inf)
}

/// Copies the `n*n` row-major entries into `out`; `len` must equal `n*n`.
///
/// # Safety
/// `m` must be a live handle and `out` must point to `len` writable elements.
#[no_mangle]
pub unsafe extern "C" fn dfrft_matrix_entries(
    m: *const DfrftMatrix,
    out: *mut DfrftComplex,
    len: usize,
) -> DfrftStatus {
    guard(|| {
        let m = m.as_ref().ok_or(DfrftStatus::NullPointer)?;
        let data = m.inner.matrix.as_slice();
        if len != data.len() {
            return Err(DfrftStatus::LengthMismatch);
        }
        for (o, &z) in output(out, len)?.iter_mut().zip(data) {
            *o = z.into();
        }
        Ok(())
    })
}

/// `y = F·x` with a materialized matrix; `len` must equal the transform size.
///
/// # Safety
/// `m` must be a live handle; `x` and `y` must each point to `len` elements and may not overlap.
#[no_mangle]
pub unsafe extern "C" fn dfrft_matrix_apply(
    m: *const DfrftMatrix,
    x: *const DfrftComplex,
    y: *mut DfrftComplex,
    len: usize,
) -> DfrftStatus {
    guard(|| {
        let m = m.as_ref().ok_or(DfrftStatus::NullPointer)?;
        if len != m.inner.size() {
            return Err(DfrftStatus::LengthMismatch);
        }
        let x: Vec<Complex64> = input(x, len)?.iter().map(|&z| z.into()).collect();
        let out = output(y, len)?;
        let result = lift(m.inner.apply(&x))?;
        for (o, z) in out.iter_mut().zip(result) {
            *o = z.into();
        }
        Ok(())
    })
}

/// `y = F_order·x` without forming the matrix (at most three DFT matvecs).
///
/// # Safety
/// `x` and `y` must each point to `len` elements; they may alias.
#[no_mangle]
pub unsafe extern "C" fn dfrft_apply_fast(
    order: f64,
    x: *const DfrftComplex,
    y: *mut DfrftComplex,
    len: usize,
) -> DfrftStatus {
    guard(|| {
        if len == 0 {
            return Err(DfrftStatus::InvalidSize);
        }
        let x: Vec<Complex64> = input(x, len)?.iter().map(|&z| z.into()).collect();
        let result = lift(engine::apply_fast(order_of(order)?, &x))?;
        for (o, z) in output(y, len)?.iter_mut().zip(result) {
            *o = z.into();
        }
        Ok(())
    })
}

/// Polynomial coefficients `c` with `F = Σ c[k] U^k`, plus the solve residual.
///
/// # Safety
/// `out` must point to `n` writable elements; `residual` may be null.
#[no_mangle]
pub unsafe extern "C" fn dfrft_coefficients(
    order: f64,
    n: usize,
    out: *mut DfrftComplex,
    residual: *mut f64,
) -> DfrftStatus {
    guard(|| {
        let coeffs = lift(hermite::solve_coefficients(order_of(order)?.value(), n))?;
        for (o, &z) in output(out, n)?.iter_mut().zip(&coeffs.entries) {
            *o = z.into();
        }
        if !residual.is_null() {
            *residual = coeffs.solve_residual_inf;
        }
        Ok(())
    })
}

/// Eigenvalue multiplicities of the size-`n` DFT in the order `+1, -1, -i, +i`.
///
/// # Safety
/// `out` must point to 4 writable elements.
#[no_mangle]
pub unsafe extern "C" fn dfrft_multiplicities(n: usize, out: *mut usize) -> DfrftStatus {
    guard(|| {
        if out.is_null() {
            return Err(DfrftStatus::NullPointer);
        }
        let m = lift(spectrum::multiplicities(n))?;
        ptr::copy_nonoverlapping(m.as_array().as_ptr(), out, 4);
        Ok(())
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::ffi::CStr;

    #[test]
    fn status_messages_are_terminated() {
        for s in [DfrftStatus::Ok, DfrftStatus::Singular, DfrftStatus::Panic] {
            let msg = unsafe { CStr::from_ptr(dfrft_status_message(s)) };
            assert!(!msg.to_str().unwrap().is_empty());
        }
    }

    #[test]
    fn error_mapping() {
        assert_eq!(
            status_of(&DfrftError::InvalidSize),
            DfrftStatus::InvalidSize
        );
        let e = DfrftError::Singular {
            column: 0,
            pivot: 0.0,
            threshold: 1.0,
        };
        assert_eq!(status_of(&e), DfrftStatus::Singular);
        assert_eq!(order_of(f64::NAN).unwrap_err(), DfrftStatus::InvalidOrder);
    }
}
