//! Text formats for matrices and signals.
//!
//! CSV matrices have one line per row and one `a+bi` token per cell.
//! CSV signals have a `index,re,im` header followed by one line per sample.
//! JSON documents carry `[re, im]` pairs. All output uses LF line endings.

use std::fmt::Write as _;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::numerics::Matrix;

#[derive(Debug, thiserror::Error)]
pub enum FormatError {
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("matrix is not square: row {row} has {found} cells, expected {expected}")]
    Ragged {
        row: usize,
        found: usize,
        expected: usize,
    },
    #[error("empty input")]
    Empty,
    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Format {
    #[default]
    Csv,
    Json,
}

impl std::str::FromStr for Format {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "csv" => Ok(Format::Csv),
            "json" => Ok(Format::Json),
            other => Err(format!("unknown format {other:?} (expected csv or json)")),
        }
    }
}

/// Formats `x` with `digits` significant digits in scientific notation.
pub fn format_real(x: f64, digits: usize) -> String {
    let digits = digits.max(1);
    if x == 0.0 {
        return "0".to_string();
    }
    format!("{:.*e}", digits - 1, x)
}

/// `a+bi` / `a-bi` token.
pub fn format_complex(z: Complex64, digits: usize) -> String {
    let re = format_real(z.re, digits);
    let im = format_real(z.im.abs(), digits);
    let sign = if z.im.is_sign_negative() && z.im != 0.0 {
        '-'
    } else {
        '+'
    };
    format!("{re}{sign}{im}i")
}

/// Parses `a+bi`, `a-bi`, `a`, or `bi`.
pub fn parse_complex(token: &str) -> Result<Complex64, String> {
    let t = token.trim();
    if t.is_empty() {
        return Err("empty complex token".into());
    }
    let bad = || format!("invalid complex number {t:?}");
    let Some(body) = t.strip_suffix('i') else {
        return t
            .parse::<f64>()
            .map(|re| Complex64::new(re, 0.0))
            .map_err(|_| bad());
    };
    let bytes = body.as_bytes();
    let split = (1..bytes.len())
        .rev()
        .find(|&k| matches!(bytes[k], b'+' | b'-') && !matches!(bytes[k - 1], b'e' | b'E'));
    let (re, im) = match split {
        Some(k) => (&body[..k], &body[k..]),
        None => ("0", body),
    };
    let im = match im {
        "+" | "" => "1",
        "-" => "-1",
        s => s,
    };
    let re: f64 = re.parse().map_err(|_| bad())?;
    let im: f64 = im.trim_start_matches('+').parse().map_err(|_| bad())?;
    Ok(Complex64::new(re, im))
}

pub fn matrix_to_csv(m: &Matrix, digits: usize) -> String {
    let mut out = String::new();
    for i in 0..m.rows() {
        let cells: Vec<String> = m
            .row(i)
            .iter()
            .map(|&z| format_complex(z, digits))
            .collect();
        out.push_str(&cells.join(","));
        out.push('\n');
    }
    out
}

pub fn matrix_from_csv(text: &str) -> Result<Matrix, FormatError> {
    let mut data = Vec::new();
    let mut cols = None;
    let mut rows = 0;
    for (lineno, line) in text.lines().enumerate() {
        if line.trim().is_empty() {
            continue;
        }
        let row: Vec<Complex64> = line
            .split(',')
            .map(parse_complex)
            .collect::<Result<_, _>>()
            .map_err(|msg| FormatError::Parse {
                line: lineno + 1,
                msg,
            })?;
        let expected = *cols.get_or_insert(row.len());
        if row.len() != expected {
            return Err(FormatError::Ragged {
                row: rows,
                found: row.len(),
                expected,
            });
        }
        data.extend(row);
        rows += 1;
    }
    let cols = cols.ok_or(FormatError::Empty)?;
    if rows != cols {
        return Err(FormatError::Ragged {
            row: rows,
            found: cols,
            expected: rows,
        });
    }
    Ok(Matrix::from_row_major(rows, cols, data).expect("shape checked"))
}

pub fn vector_to_csv(x: &[Complex64], digits: usize) -> String {
    let mut out = String::from("index,re,im\n");
    for (k, z) in x.iter().enumerate() {
        let _ = writeln!(
            out,
            "{k},{},{}",
            format_real(z.re, digits),
            format_real(z.im, digits)
        );
    }
    out
}

/// Reads an `index,re,im` table. Indices must run `0, 1, 2, …`; a missing `im` column means zero.
pub fn vector_from_csv(text: &str) -> Result<Vec<Complex64>, FormatError> {
    let mut out = Vec::new();
    for (lineno, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() || (lineno == 0 && line.starts_with(|c: char| c.is_ascii_alphabetic())) {
            continue;
        }
        let err = |msg: String| FormatError::Parse {
            line: lineno + 1,
            msg,
        };
        let fields: Vec<&str> = line.split(',').map(str::trim).collect();
        if !(2..=3).contains(&fields.len()) {
            return Err(err(format!(
                "expected index,re,im but found {} fields",
                fields.len()
            )));
        }
        let index: usize = fields[0]
            .parse()
            .map_err(|_| err(format!("bad index {:?}", fields[0])))?;
        if index != out.len() {
            return Err(err(format!(
                "index {index} out of sequence (expected {})",
                out.len()
            )));
        }
        let re: f64 = fields[1]
            .parse()
            .map_err(|_| err(format!("bad real part {:?}", fields[1])))?;
        let im: f64 = match fields.get(2) {
            Some(s) => s
                .parse()
                .map_err(|_| err(format!("bad imaginary part {s:?}")))?,
            None => 0.0,
        };
        out.push(Complex64::new(re, im));
    }
    if out.is_empty() {
        return Err(FormatError::Empty);
    }
    Ok(out)
}

fn pairs(x: &[Complex64]) -> Vec<[f64; 2]> {
    x.iter().map(|z| [z.re, z.im]).collect()
}

fn unpair(x: &[[f64; 2]]) -> Vec<Complex64> {
    x.iter().map(|&[re, im]| Complex64::new(re, im)).collect()
}

/// JSON envelope for a transform matrix.
#[derive(Debug, Clone, Serialize, Deserialize, PartialEq)]
pub struct MatrixDocument {
    pub order: f64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub order_rational: Option<[i64; 2]>,
    pub size: usize,
    pub method: String,
    pub residual: f64,
    pub entries: Vec<Vec<[f64; 2]>>,
}

impl MatrixDocument {
    pub fn new(
        order: f64,
        order_rational: Option<(i64, i64)>,
        method: &str,
        residual: f64,
        m: &Matrix,
    ) -> Self {
        Self {
            order,
            order_rational: order_rational.map(|(p, q)| [p, q]),
            size: m.rows(),
            method: method.to_string(),
            residual,
            entries: (0..m.rows()).map(|i| pairs(m.row(i))).collect(),
        }
    }

    pub fn to_matrix(&self) -> Result<Matrix, FormatError> {
        let n = self.entries.len();
        let mut data = Vec::with_capacity(n * n);
        for (row, cells) in self.entries.iter().enumerate() {
            if cells.len() != n {
                return Err(FormatError::Ragged {
                    row,
                    found: cells.len(),
                    expected: n,
                });
            }
            data.extend(unpair(cells));
        }
        if n == 0 {
            return Err(FormatError::Empty);
        }
        Ok(Matrix::from_row_major(n, n, data).expect("shape checked"))
    }
}

/// JSON envelope for a signal or coefficient vector.
#[derive(Debug, Clone, Serialize, Deserialize, PartialEq)]
pub struct VectorDocument {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub order: Option<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub method: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub residual: Option<f64>,
    pub entries: Vec<[f64; 2]>,
}

impl VectorDocument {
    pub fn new(entries: &[Complex64]) -> Self {
        Self {
            order: None,
            method: None,
            residual: None,
            entries: pairs(entries),
        }
    }

    pub fn values(&self) -> Vec<Complex64> {
        unpair(&self.entries)
    }
}

/// Accepts either a bare `[[re, im], …]` array or a [`VectorDocument`].
pub fn vector_from_json(text: &str) -> Result<Vec<Complex64>, FormatError> {
    #[derive(Deserialize)]
    #[serde(untagged)]
    enum Input {
        Bare(Vec<[f64; 2]>),
        Doc(VectorDocument),
    }
    let v = match serde_json::from_str::<Input>(text)? {
        Input::Bare(e) => unpair(&e),
        Input::Doc(d) => d.values(),
    };
    if v.is_empty() {
        return Err(FormatError::Empty);
    }
    Ok(v)
}

/// JSON report of a coefficient solve.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct CoefficientDocument {
    pub order: f64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub order_rational: Option<[i64; 2]>,
    pub size: usize,
    pub residual: f64,
    pub coefficients: Vec<[f64; 2]>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub f: Option<Vec<[f64; 2]>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub vandermonde: Option<Vec<Vec<[f64; 2]>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub inverse: Option<Vec<Vec<[f64; 2]>>>,
}

pub fn matrix_pairs(m: &Matrix) -> Vec<Vec<[f64; 2]>> {
    (0..m.rows()).map(|i| pairs(m.row(i))).collect()
}

pub fn vector_pairs(x: &[Complex64]) -> Vec<[f64; 2]> {
    pairs(x)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn complex_tokens() {
        assert_eq!(format_complex(c(0.25, 0.1875), 3), "2.50e-1+1.88e-1i");
        assert_eq!(format_complex(c(-1.0, -2.0), 2), "-1.0e0-2.0e0i");
        assert_eq!(format_complex(c(0.0, 0.0), 5), "0+0i");
        assert_eq!(parse_complex("2.50e-1+1.875e-1i").unwrap(), c(0.25, 0.1875));
        assert_eq!(parse_complex("-1e-3-2E+2i").unwrap(), c(-1e-3, -200.0));
        assert_eq!(parse_complex("3").unwrap(), c(3.0, 0.0));
        assert_eq!(parse_complex("-i").unwrap(), c(0.0, -1.0));
        assert_eq!(parse_complex("2.5i").unwrap(), c(0.0, 2.5));
        assert_eq!(parse_complex("1+i").unwrap(), c(1.0, 1.0));
        assert!(parse_complex("1+2j").is_err());
        assert!(parse_complex("").is_err());
    }

    #[test]
    fn matrix_csv_rejects_ragged_rows() {
        let err = matrix_from_csv("1,2\n3\n").unwrap_err();
        assert!(matches!(err, FormatError::Ragged { row: 1, .. }));
        assert!(matches!(matrix_from_csv("\n"), Err(FormatError::Empty)));
    }

    #[test]
    fn signal_csv() {
        let text = "index,re,im\n0,1.5,0\n1,-2,0.5\n2,0\n";
        assert_eq!(
            vector_from_csv(text).unwrap(),
            vec![c(1.5, 0.0), c(-2.0, 0.5), c(0.0, 0.0)]
        );
        assert!(matches!(
            vector_from_csv("index,re,im\n1,1,1\n"),
            Err(FormatError::Parse { line: 2, .. })
        ));
        let out = vector_to_csv(&[c(1.0, -0.5)], 4);
        assert_eq!(out, "index,re,im\n0,1.000e0,-5.000e-1\n");
    }

    #[test]
    fn signal_json_variants() {
        assert_eq!(
            vector_from_json("[[1,0],[0,1]]").unwrap(),
            vec![c(1.0, 0.0), c(0.0, 1.0)]
        );
        let doc = serde_json::to_string(&VectorDocument::new(&[c(2.0, 3.0)])).unwrap();
        assert_eq!(vector_from_json(&doc).unwrap(), vec![c(2.0, 3.0)]);
        assert!(vector_from_json("[]").is_err());
    }

    fn finite() -> impl Strategy<Value = f64> {
        prop_oneof![-1e6..1e6f64, -1.0..1.0f64, Just(0.0), Just(-1.0)]
    }

    proptest! {
        #[test]
        fn complex_token_round_trip(re in finite(), im in finite(), digits in 6usize..17) {
            let z = c(re, im);
            let back = parse_complex(&format_complex(z, digits)).unwrap();
            let tol = 10f64.powi(1 - digits as i32) * z.norm().max(1e-300) * 2.0;
            prop_assert!((back - z).norm() <= tol, "{z} -> {back}");
        }

        #[test]
        fn matrix_csv_round_trip(n in 1usize..6, seed in any::<u64>(), digits in 10usize..18) {
            let mut s = seed | 1;
            let m = Matrix::from_fn(n, n, |_, _| {
                s ^= s << 13; s ^= s >> 7; s ^= s << 17;
                c((s % 2001) as f64 / 1000.0 - 1.0, (s / 2001 % 2001) as f64 / 1000.0 - 1.0)
            });
            let back = matrix_from_csv(&matrix_to_csv(&m, digits)).unwrap();
            prop_assert!(back.max_abs_diff(&m).unwrap() <= 10f64.powi(1 - digits as i32) * 2.0);
        }
    }
}
