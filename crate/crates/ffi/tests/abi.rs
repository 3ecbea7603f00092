use std::ptr;

use dfrft::{dft_matrix, frft_projector, Complex64, FrftOrder};
use dfrft_ffi::*;

fn handle(order: f64, n: usize, method: DfrftMethod) -> *mut DfrftMatrix {
    let mut h = ptr::null_mut();
    assert_eq!(
        unsafe { dfrft_matrix_new(order, n, method, &mut h) },
        DfrftStatus::Ok
    );
    assert!(!h.is_null());
    h
}

fn entries(h: *const DfrftMatrix) -> Vec<Complex64> {
    let n = unsafe { dfrft_matrix_size(h) };
    let mut buf = vec![DfrftComplex::default(); n * n];
    assert_eq!(
        unsafe { dfrft_matrix_entries(h, buf.as_mut_ptr(), buf.len()) },
        DfrftStatus::Ok
    );
    buf.into_iter().map(Complex64::from).collect()
}

fn max_diff(a: &[Complex64], b: &[Complex64]) -> f64 {
    a.iter()
        .zip(b)
        .map(|(x, y)| (x - y).norm())
        .fold(0.0, f64::max)
}

#[test]
fn order_one_handle_holds_the_dft() {
    let h = handle(1.0, 6, DfrftMethod::Vandermonde);
    assert_eq!(unsafe { dfrft_matrix_size(h) }, 6);
    assert_eq!(unsafe { dfrft_matrix_order(h) }, 1.0);
    assert!(unsafe { dfrft_matrix_residual(h) } < 1e-12);
    let u = dft_matrix(6).unwrap();
    assert!(max_diff(&entries(h), u.matrix().as_slice()) < 1e-12);
    unsafe { dfrft_matrix_free(h) };
}

#[test]
fn rational_handle_and_real_power() {
    let mut h = ptr::null_mut();
    assert_eq!(
        unsafe { dfrft_matrix_new_rational(3, 7, 7, DfrftMethod::Vandermonde, &mut h) },
        DfrftStatus::Ok
    );
    let expected = frft_projector(FrftOrder::rational(3, 7).unwrap(), 7).unwrap();
    assert!(max_diff(&entries(h), expected.matrix.as_slice()) < 1e-12);
    unsafe { dfrft_matrix_free(h) };

    let mut p = ptr::null_mut();
    assert_eq!(
        unsafe { dfrft_real_power(3.0 / 7.0, 7.0 / 3.0, 7, &mut p) },
        DfrftStatus::Ok
    );
    let u = dft_matrix(7).unwrap();
    assert!(max_diff(&entries(p), u.matrix().as_slice()) < 1e-9);
    unsafe { dfrft_matrix_free(p) };
}

#[test]
fn apply_and_fast_apply_agree() {
    let n = 16;
    let x: Vec<DfrftComplex> = (0..n)
        .map(|k| DfrftComplex {
            re: (k as f64).sin(),
            im: 0.5 - k as f64 / 16.0,
        })
        .collect();
    let h = handle(0.37, n, DfrftMethod::Projector);
    let mut y = vec![DfrftComplex::default(); n];
    assert_eq!(
        unsafe { dfrft_matrix_apply(h, x.as_ptr(), y.as_mut_ptr(), n) },
        DfrftStatus::Ok
    );
    let mut z = vec![DfrftComplex::default(); n];
    assert_eq!(
        unsafe { dfrft_apply_fast(0.37, x.as_ptr(), z.as_mut_ptr(), n) },
        DfrftStatus::Ok
    );
    let y: Vec<Complex64> = y.into_iter().map(Into::into).collect();
    let z: Vec<Complex64> = z.into_iter().map(Into::into).collect();
    assert!(max_diff(&y, &z) < 1e-9);

    // in-place fast apply
    let mut w = x.clone();
    assert_eq!(
        unsafe { dfrft_apply_fast(0.37, w.as_ptr(), w.as_mut_ptr(), n) },
        DfrftStatus::Ok
    );
    let w: Vec<Complex64> = w.into_iter().map(Into::into).collect();
    assert!(max_diff(&w, &z) < 1e-15);
    unsafe { dfrft_matrix_free(h) };
}

#[test]
fn coefficients_and_multiplicities() {
    let mut c = vec![DfrftComplex::default(); 7];
    let mut residual = -1.0;
    assert_eq!(
        unsafe { dfrft_coefficients(1.0, 7, c.as_mut_ptr(), &mut residual) },
        DfrftStatus::Ok
    );
    assert!((c[1].re - 1.0).abs() < 1e-12 && c[0].re.abs() < 1e-12);
    assert!(residual >= 0.0);
    assert_eq!(
        unsafe { dfrft_coefficients(0.5, 7, c.as_mut_ptr(), ptr::null_mut()) },
        DfrftStatus::Ok
    );

    let mut m = [0usize; 4];
    assert_eq!(
        unsafe { dfrft_multiplicities(7, m.as_mut_ptr()) },
        DfrftStatus::Ok
    );
    assert_eq!(m, [2, 2, 2, 1]);
    assert_eq!(
        unsafe { dfrft_multiplicities(0, m.as_mut_ptr()) },
        DfrftStatus::InvalidSize
    );
}

#[test]
fn error_codes() {
    let mut h = ptr::null_mut();
    unsafe {
        assert_eq!(
            dfrft_matrix_new(0.5, 0, DfrftMethod::Projector, &mut h),
            DfrftStatus::InvalidSize
        );
        assert_eq!(
            dfrft_matrix_new(f64::NAN, 4, DfrftMethod::Projector, &mut h),
            DfrftStatus::InvalidOrder
        );
        assert_eq!(
            dfrft_matrix_new(0.5, 4, DfrftMethod::Projector, ptr::null_mut()),
            DfrftStatus::NullPointer
        );
        assert_eq!(
            dfrft_matrix_new_rational(1, 0, 4, DfrftMethod::Projector, &mut h),
            DfrftStatus::InvalidOrder
        );
        assert_eq!(
            dfrft_matrix_new(0.5, 48, DfrftMethod::Vandermonde, &mut h),
            DfrftStatus::Singular
        );
        assert_eq!(
            dfrft_real_power(0.5, f64::INFINITY, 4, &mut h),
            DfrftStatus::InvalidArgument
        );
        assert!(h.is_null());

        let h = handle(0.5, 4, DfrftMethod::Projector);
        let mut small = vec![DfrftComplex::default(); 3];
        assert_eq!(
            dfrft_matrix_entries(h, small.as_mut_ptr(), 3),
            DfrftStatus::LengthMismatch
        );
        assert_eq!(
            dfrft_matrix_apply(h, small.as_ptr(), small.as_mut_ptr(), 3),
            DfrftStatus::LengthMismatch
        );
        assert_eq!(
            dfrft_matrix_apply(h, ptr::null(), small.as_mut_ptr(), 4),
            DfrftStatus::NullPointer
        );
        assert_eq!(
            dfrft_matrix_entries(ptr::null(), small.as_mut_ptr(), 3),
            DfrftStatus::NullPointer
        );
        assert_eq!(
            dfrft_apply_fast(0.5, small.as_ptr(), small.as_mut_ptr(), 0),
            DfrftStatus::InvalidSize
        );
        assert_eq!(dfrft_matrix_size(ptr::null()), 0);
        dfrft_matrix_free(h);
        dfrft_matrix_free(ptr::null_mut());
    }
}
