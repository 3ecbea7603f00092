use std::fmt;
use std::str::FromStr;

use crate::error::{DfrftError, Result};

/// Transform order `α`, optionally carrying the exact rational it was parsed from.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FrftOrder {
    value: f64,
    rational: Option<(i64, i64)>,
}

impl FrftOrder {
    pub fn new(value: f64) -> Result<Self> {
        if !value.is_finite() {
            return Err(DfrftError::InvalidOrder(value.to_string()));
        }
        Ok(Self {
            value,
            rational: None,
        })
    }

    /// `p/q` with `q ≠ 0`; the sign is normalized onto the numerator.
    pub fn rational(p: i64, q: i64) -> Result<Self> {
        if q == 0 {
            return Err(DfrftError::InvalidOrder(format!("{p}/{q}")));
        }
        let (p, q) = if q < 0 { (-p, -q) } else { (p, q) };
        Ok(Self {
            value: p as f64 / q as f64,
            rational: Some((p, q)),
        })
    }

    pub fn value(&self) -> f64 {
        self.value
    }

    pub fn as_rational(&self) -> Option<(i64, i64)> {
        self.rational
    }

    pub fn neg(&self) -> Self {
        Self {
            value: -self.value,
            rational: self.rational.map(|(p, q)| (-p, q)),
        }
    }
}

impl From<f64> for FrftOrder {
    /// Panics on non-finite input; use [`FrftOrder::new`] to handle it.
    fn from(value: f64) -> Self {
        Self::new(value).expect("finite order")
    }
}

impl FromStr for FrftOrder {
    type Err = DfrftError;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let bad = || DfrftError::InvalidOrder(s.to_string());
        if let Some((p, q)) = s.split_once('/') {
            let p: i64 = p.trim().parse().map_err(|_| bad())?;
            let q: i64 = q.trim().parse().map_err(|_| bad())?;
            return Self::rational(p, q).map_err(|_| bad());
        }
        let v: f64 = s.parse().map_err(|_| bad())?;
        Self::new(v).map_err(|_| bad())
    }
}

impl fmt::Display for FrftOrder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.rational {
            Some((p, q)) => write!(f, "{p}/{q}"),
            None => write!(f, "{}", self.value),
        }
    }
}
