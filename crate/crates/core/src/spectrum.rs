//! The unitary DFT matrix and its eigenvalue spectrum.
//!
//! Formulas use 1-based `(j, k)` as in `U_{jk} = N^{-1/2} ω^{(j-1)(k-1)}`;
//! storage is 0-based, so stored entry `(r, c)` carries exponent `r·c`.

use std::f64::consts::{FRAC_PI_2, PI};

use num_complex::Complex64;

use crate::error::{DfrftError, Result};
use crate::numerics::Matrix;

/// The four possible DFT eigenvalues, in the fixed order `+1, −1, −i, +i`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum FourthRoot {
    PlusOne,
    MinusOne,
    MinusI,
    PlusI,
}

impl FourthRoot {
    pub const ALL: [FourthRoot; 4] = [
        FourthRoot::PlusOne,
        FourthRoot::MinusOne,
        FourthRoot::MinusI,
        FourthRoot::PlusI,
    ];

    pub fn value(self) -> Complex64 {
        match self {
            FourthRoot::PlusOne => Complex64::new(1.0, 0.0),
            FourthRoot::MinusOne => Complex64::new(-1.0, 0.0),
            FourthRoot::MinusI => Complex64::new(0.0, -1.0),
            FourthRoot::PlusI => Complex64::new(0.0, 1.0),
        }
    }

    /// Principal argument in `(−π, π]`.
    pub fn arg(self) -> f64 {
        match self {
            FourthRoot::PlusOne => 0.0,
            FourthRoot::MinusOne => PI,
            FourthRoot::MinusI => -FRAC_PI_2,
            FourthRoot::PlusI => FRAC_PI_2,
        }
    }

    /// Exact integer power `λ^k`.
    pub fn powi(self, k: i64) -> Complex64 {
        let quarter_turns = match self {
            FourthRoot::PlusOne => 0,
            FourthRoot::MinusOne => 2,
            FourthRoot::MinusI => 3,
            FourthRoot::PlusI => 1,
        };
        match (quarter_turns * k).rem_euclid(4) {
            0 => Complex64::new(1.0, 0.0),
            1 => Complex64::new(0.0, 1.0),
            2 => Complex64::new(-1.0, 0.0),
            _ => Complex64::new(0.0, -1.0),
        }
    }

    pub fn label(self) -> &'static str {
        match self {
            FourthRoot::PlusOne => "+1",
            FourthRoot::MinusOne => "-1",
            FourthRoot::MinusI => "-i",
            FourthRoot::PlusI => "+i",
        }
    }
}

/// Eigenvalue multiplicities `(m₊₁, m₋₁, m₋ᵢ, m₊ᵢ)` of the size-`n` DFT matrix.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Multiplicities {
    pub plus_one: usize,
    pub minus_one: usize,
    pub minus_i: usize,
    pub plus_i: usize,
}

impl Multiplicities {
    pub fn as_array(&self) -> [usize; 4] {
        [self.plus_one, self.minus_one, self.minus_i, self.plus_i]
    }

    pub fn total(&self) -> usize {
        self.as_array().iter().sum()
    }
}

/// Multiplicities by residue class of `n` modulo 4.
pub fn multiplicities(n: usize) -> Result<Multiplicities> {
    if n == 0 {
        return Err(DfrftError::InvalidSize);
    }
    let m = n / 4;
    let [plus_one, minus_one, minus_i, plus_i] = match n % 4 {
        0 => [m + 1, m, m, m - 1],
        1 => [m + 1, m, m, m],
        2 => [m + 1, m + 1, m, m],
        _ => [m + 1, m + 1, m + 1, m],
    };
    Ok(Multiplicities {
        plus_one,
        minus_one,
        minus_i,
        plus_i,
    })
}

/// Multiplicities read off the characteristic polynomial exponents
/// `⌊(n+4)/4⌋, ⌊(n+2)/4⌋, ⌊(n+1)/4⌋, ⌊(n−1)/4⌋`.
pub fn multiplicities_floor_form(n: usize) -> Result<Multiplicities> {
    if n == 0 {
        return Err(DfrftError::InvalidSize);
    }
    Ok(Multiplicities {
        plus_one: (n + 4) / 4,
        minus_one: (n + 2) / 4,
        minus_i: (n + 1) / 4,
        plus_i: (n - 1) / 4,
    })
}

/// Distinct eigenvalues actually present, with multiplicities, in the fixed order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Spectrum {
    size: usize,
    entries: Vec<(FourthRoot, usize)>,
}

impl Spectrum {
    pub fn new(n: usize) -> Result<Self> {
        let m = multiplicities(n)?;
        let entries = FourthRoot::ALL
            .into_iter()
            .zip(m.as_array())
            .filter(|&(_, mult)| mult > 0)
            .collect();
        Ok(Self { size: n, entries })
    }

    /// Builds a spectrum from explicit entries; zero multiplicities are dropped.
    pub fn from_entries(size: usize, entries: Vec<(FourthRoot, usize)>) -> Result<Self> {
        let entries: Vec<_> = entries.into_iter().filter(|&(_, m)| m > 0).collect();
        let sum: usize = entries.iter().map(|e| e.1).sum();
        if sum != size {
            return Err(DfrftError::InconsistentSpectrum { size, sum });
        }
        Ok(Self { size, entries })
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn entries(&self) -> &[(FourthRoot, usize)] {
        &self.entries
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn eigenvalues(&self) -> impl Iterator<Item = FourthRoot> + '_ {
        self.entries.iter().map(|e| e.0)
    }

    pub fn total_multiplicity(&self) -> usize {
        self.entries.iter().map(|e| e.1).sum()
    }

    /// `Σ m_i λ_i`, which must equal `trace(U)`.
    pub fn weighted_sum(&self) -> Complex64 {
        self.entries
            .iter()
            .map(|&(l, m)| l.value() * m as f64)
            .sum()
    }
}

/// `exp(−2πi·e/n)` for `e` reduced mod `n`.
pub(crate) fn twiddle(e: usize, n: usize) -> Complex64 {
    let e = e % n;
    Complex64::from_polar(1.0, -2.0 * PI * e as f64 / n as f64)
}

/// Unitary DFT matrix of size `n`.
#[derive(Debug, Clone, PartialEq)]
pub struct DftMatrix {
    size: usize,
    matrix: Matrix,
}

impl DftMatrix {
    pub fn new(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(DfrftError::InvalidSize);
        }
        let scale = 1.0 / (n as f64).sqrt();
        let table: Vec<Complex64> = (0..n).map(|e| twiddle(e, n) * scale).collect();
        let matrix = Matrix::from_fn(n, n, |r, c| table[(r * c) % n]);
        Ok(Self { size: n, matrix })
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn matrix(&self) -> &Matrix {
        &self.matrix
    }

    pub fn into_matrix(self) -> Matrix {
        self.matrix
    }
}

pub fn dft_matrix(n: usize) -> Result<DftMatrix> {
    DftMatrix::new(n)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn dft_small_sizes() {
        let u1 = dft_matrix(1).unwrap();
        assert_eq!(u1.matrix().as_slice(), &[c(1.0, 0.0)]);

        let s = 1.0 / 2f64.sqrt();
        let u2 = dft_matrix(2).unwrap();
        let expected = [c(s, 0.0), c(s, 0.0), c(s, 0.0), c(-s, 0.0)];
        for (a, b) in u2.matrix().as_slice().iter().zip(expected) {
            assert!((a - b).norm() < 1e-15);
        }

        let u4 = dft_matrix(4).unwrap();
        assert!((u4.matrix()[(1, 1)] - c(0.0, -0.5)).norm() < 1e-15);
    }

    #[test]
    fn dft_entries_match_definition() {
        for n in 1..=16 {
            let u = dft_matrix(n).unwrap();
            for j in 1..=n {
                for k in 1..=n {
                    let theta = -2.0 * PI * ((j - 1) * (k - 1)) as f64 / n as f64;
                    let expected = Complex64::from_polar(1.0 / (n as f64).sqrt(), theta);
                    assert!(
                        (u.matrix()[(j - 1, k - 1)] - expected).norm() < 1e-14,
                        "n={n} j={j} k={k}"
                    );
                }
            }
        }
    }

    #[test]
    fn dft_is_unitary() {
        for n in 1..=32 {
            let u = dft_matrix(n).unwrap();
            assert!(u.matrix().unitarity_defect().unwrap() <= 1e-13 * n as f64);
        }
    }

    #[test]
    fn zero_size_rejected() {
        assert_eq!(dft_matrix(0).unwrap_err(), DfrftError::InvalidSize);
        assert_eq!(multiplicities(0).unwrap_err(), DfrftError::InvalidSize);
        assert_eq!(Spectrum::new(0).unwrap_err(), DfrftError::InvalidSize);
    }

    #[test]
    fn table_rows() {
        assert_eq!(multiplicities(7).unwrap().as_array(), [2, 2, 2, 1]);
        assert_eq!(multiplicities(4).unwrap().as_array(), [2, 1, 1, 0]);
        assert_eq!(multiplicities(12).unwrap().as_array(), [4, 3, 3, 2]);
    }

    #[test]
    fn table_and_floor_form_agree() {
        for n in 1..=1000 {
            let t = multiplicities(n).unwrap();
            assert_eq!(t, multiplicities_floor_form(n).unwrap(), "n={n}");
            assert_eq!(t.total(), n);
        }
    }

    #[test]
    fn spectrum_drops_empty_eigenvalues() {
        use FourthRoot::*;
        assert_eq!(
            Spectrum::new(7).unwrap().entries(),
            &[(PlusOne, 2), (MinusOne, 2), (MinusI, 2), (PlusI, 1)]
        );
        assert_eq!(Spectrum::new(1).unwrap().entries(), &[(PlusOne, 1)]);
        assert_eq!(
            Spectrum::new(4).unwrap().entries(),
            &[(PlusOne, 2), (MinusOne, 1), (MinusI, 1)]
        );
    }

    #[test]
    fn inconsistent_spectrum_rejected() {
        let err = Spectrum::from_entries(3, vec![(FourthRoot::PlusOne, 1)]).unwrap_err();
        assert_eq!(err, DfrftError::InconsistentSpectrum { size: 3, sum: 1 });
    }

    #[test]
    fn exact_integer_powers() {
        for root in FourthRoot::ALL {
            let mut acc = c(1.0, 0.0);
            for k in 0..9 {
                assert_eq!(root.powi(k), acc);
                acc *= root.value();
            }
            assert_eq!(root.powi(-1) * root.value(), c(1.0, 0.0));
        }
    }
}
