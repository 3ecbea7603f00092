//! Command-line front end.
//!
//! Exit codes: 0 success, 1 verification failure, 2 argument or file
//! error, 3 numerical warning under `--strict`.

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::time::Instant;

use clap::{Args, Parser, Subcommand};
use num_complex::Complex64;
use rand::{Rng, SeedableRng};

use crate::engine::{self, Method};
use crate::error::DfrftError;
use crate::hermite;
use crate::io::{self, CoefficientDocument, Format, MatrixDocument, VectorDocument};
use crate::numerics;
use crate::order::FrftOrder;
use crate::spectrum::Spectrum;
use crate::verify::{self, Tolerances};

pub const EXIT_OK: i32 = 0;
pub const EXIT_VERIFY_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_NUMERICAL_WARNING: i32 = 3;

#[derive(Debug, Parser)]
#[command(
    name = "dfrft",
    version,
    about = "Discrete fractional Fourier transform via matrix functions of the DFT"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Write the N×N transform matrix F_α.
    Matrix(CommonArgs),
    /// Solve for the polynomial coefficients c with F_α = Σ c_{n+1} Uⁿ.
    Coeffs(CoeffsArgs),
    /// Transform a signal read from --input.
    Apply(CommonArgs),
    /// Run the invariant suite and report the worst residual per property.
    Verify(CommonArgs),
    /// Time matrix construction and signal application.
    Bench(CommonArgs),
}

#[derive(Debug, Clone, Args)]
pub struct CommonArgs {
    /// Transform order, decimal or rational p/q.
    #[arg(long, allow_hyphen_values = true)]
    pub order: Option<FrftOrder>,
    /// Transform size N.
    #[arg(long)]
    pub size: Option<usize>,
    #[arg(long, default_value = "projector")]
    pub method: Method,
    #[arg(long, default_value = "csv")]
    pub format: Format,
    #[arg(long)]
    pub input: Option<PathBuf>,
    #[arg(long)]
    pub output: Option<PathBuf>,
    #[arg(long, default_value_t = 1e-9)]
    pub tolerance: f64,
    /// Significant digits in CSV output.
    #[arg(long = "precision", default_value_t = 12)]
    pub precision_digits: usize,
    /// Exit with code 3 when a numerical warning is raised.
    #[arg(long)]
    pub strict: bool,
}

#[derive(Debug, Clone, Args)]
pub struct CoeffsArgs {
    #[command(flatten)]
    pub common: CommonArgs,
    /// Also emit the confluent Vandermonde matrix Λ.
    #[arg(long)]
    pub show_vandermonde: bool,
    /// Also emit the explicit (Λᵀ)⁻¹.
    #[arg(long)]
    pub show_inverse: bool,
    /// Also emit the right-hand side f.
    #[arg(long)]
    pub show_f: bool,
}

/// Failure carrying the process exit code.
#[derive(Debug)]
pub struct CliError {
    pub code: i32,
    pub message: String,
}

impl CliError {
    fn usage(message: impl Into<String>) -> Self {
        Self {
            code: EXIT_USAGE,
            message: message.into(),
        }
    }
}

impl From<DfrftError> for CliError {
    fn from(e: DfrftError) -> Self {
        Self::usage(e.to_string())
    }
}

impl From<io::FormatError> for CliError {
    fn from(e: io::FormatError) -> Self {
        Self::usage(e.to_string())
    }
}

type CliResult = Result<i32, CliError>;

/// Parses `args` (including the program name) and runs the command.
/// Returns the exit code; diagnostics go to `stderr`.
pub fn main_with_args<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = write!(stderr, "{e}");
            return if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
        }
    };
    match run(&cli, stdout, stderr) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(stderr, "error: {}", e.message);
            e.code
        }
    }
}

pub fn run(cli: &Cli, stdout: &mut dyn Write, stderr: &mut dyn Write) -> CliResult {
    match &cli.command {
        Command::Matrix(a) => cmd_matrix(a, stdout, stderr),
        Command::Coeffs(a) => cmd_coeffs(a, stdout, stderr),
        Command::Apply(a) => cmd_apply(a, stdout, stderr),
        Command::Verify(a) => cmd_verify(a, stdout),
        Command::Bench(a) => cmd_bench(a, stdout),
    }
}

fn require_order(a: &CommonArgs) -> Result<FrftOrder, CliError> {
    a.order
        .ok_or_else(|| CliError::usage("--order is required"))
}

fn require_size(a: &CommonArgs) -> Result<usize, CliError> {
    match a.size {
        Some(0) => Err(CliError::usage("--size must be at least 1")),
        Some(n) => Ok(n),
        None => Err(CliError::usage("--size is required")),
    }
}

fn emit(a: &CommonArgs, text: &str, stdout: &mut dyn Write) -> Result<(), CliError> {
    match &a.output {
        Some(path) => fs::write(path, text)
            .map_err(|e| CliError::usage(format!("cannot write {}: {e}", path.display()))),
        None => stdout
            .write_all(text.as_bytes())
            .map_err(|e| CliError::usage(format!("stdout: {e}"))),
    }
}

fn warn(a: &CommonArgs, stderr: &mut dyn Write, msg: &str) -> i32 {
    let _ = writeln!(stderr, "warning: {msg}");
    if a.strict {
        EXIT_NUMERICAL_WARNING
    } else {
        EXIT_OK
    }
}

fn json<T: serde::Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("serializable");
    s.push('\n');
    s
}

pub fn cmd_matrix(a: &CommonArgs, stdout: &mut dyn Write, stderr: &mut dyn Write) -> CliResult {
    let order = require_order(a)?;
    let n = require_size(a)?;
    let f = engine::frft(order, n, a.method)?;
    let text = match a.format {
        Format::Csv => io::matrix_to_csv(&f.matrix, a.precision_digits),
        Format::Json => json(&MatrixDocument::new(
            order.value(),
            order.as_rational(),
            f.method.as_str(),
            f.solve_residual_inf,
            &f.matrix,
        )),
    };
    emit(a, &text, stdout)?;
    let _ = writeln!(
        stderr,
        "order={order} size={n} method={} residual={:.3e}",
        f.method, f.solve_residual_inf
    );
    if f.is_ill_conditioned() {
        return Ok(warn(
            a,
            stderr,
            &format!(
                "Vandermonde solve residual {:.3e} exceeds {:.0e}; the system is ill-conditioned",
                f.solve_residual_inf,
                engine::ILL_CONDITIONED_RESIDUAL
            ),
        ));
    }
    Ok(EXIT_OK)
}

pub fn cmd_coeffs(args: &CoeffsArgs, stdout: &mut dyn Write, stderr: &mut dyn Write) -> CliResult {
    let a = &args.common;
    let order = require_order(a)?;
    let n = require_size(a)?;
    let spectrum = Spectrum::new(n)?;
    let coeffs = hermite::solve_coefficients_for(order.value(), &spectrum)?;
    let vandermonde = hermite::build_vandermonde(&spectrum)?;
    let f = args
        .show_f
        .then(|| hermite::build_f_vector(order.value(), &spectrum));
    let inverse = if args.show_inverse {
        Some(vandermonde.transpose_inverse()?)
    } else {
        None
    };
    let shown_vandermonde = args.show_vandermonde.then(|| vandermonde.matrix().clone());

    let text = match a.format {
        Format::Csv => {
            let d = a.precision_digits;
            let mut out = format!(
                "# coefficients order={order} size={n} residual={:.3e}\n",
                coeffs.solve_residual_inf
            );
            out.push_str(&io::vector_to_csv(&coeffs.entries, d));
            if let Some(f) = &f {
                out.push_str("# f\n");
                out.push_str(&io::vector_to_csv(&f.entries, d));
            }
            if let Some(m) = &shown_vandermonde {
                out.push_str("# vandermonde\n");
                out.push_str(&io::matrix_to_csv(m, d));
            }
            if let Some(m) = &inverse {
                out.push_str("# inverse\n");
                out.push_str(&io::matrix_to_csv(m, d));
            }
            out
        }
        Format::Json => json(&CoefficientDocument {
            order: order.value(),
            order_rational: order.as_rational().map(|(p, q)| [p, q]),
            size: n,
            residual: coeffs.solve_residual_inf,
            coefficients: io::vector_pairs(&coeffs.entries),
            f: f.as_ref().map(|f| io::vector_pairs(&f.entries)),
            vandermonde: shown_vandermonde.as_ref().map(io::matrix_pairs),
            inverse: inverse.as_ref().map(io::matrix_pairs),
        }),
    };
    emit(a, &text, stdout)?;
    if coeffs.solve_residual_inf > engine::ILL_CONDITIONED_RESIDUAL {
        return Ok(warn(
            a,
            stderr,
            &format!("solve residual {:.3e} is large", coeffs.solve_residual_inf),
        ));
    }
    Ok(EXIT_OK)
}

fn read_signal(path: &Path, format: Format) -> Result<Vec<Complex64>, CliError> {
    let text = fs::read_to_string(path)
        .map_err(|e| CliError::usage(format!("cannot read {}: {e}", path.display())))?;
    let is_json = format == Format::Json || path.extension().is_some_and(|e| e == "json");
    Ok(if is_json {
        io::vector_from_json(&text)?
    } else {
        io::vector_from_csv(&text)?
    })
}

pub fn cmd_apply(a: &CommonArgs, stdout: &mut dyn Write, stderr: &mut dyn Write) -> CliResult {
    let order = require_order(a)?;
    let input = a
        .input
        .as_ref()
        .ok_or_else(|| CliError::usage("--input is required"))?;
    let x = read_signal(input, a.format)?;
    if let Some(n) = a.size {
        if n != x.len() {
            return Err(CliError::usage(format!(
                "signal length mismatch: expected {n} samples, found {} in {}",
                x.len(),
                input.display()
            )));
        }
    }
    let (y, residual) = match a.method {
        Method::Projector => (engine::apply_fast(order, &x)?, 0.0),
        Method::Vandermonde => {
            let f = engine::frft_vandermonde(order, x.len())?;
            (f.apply(&x)?, f.solve_residual_inf)
        }
    };
    let text = match a.format {
        Format::Csv => io::vector_to_csv(&y, a.precision_digits),
        Format::Json => json(&VectorDocument {
            order: Some(order.value()),
            method: Some(a.method.to_string()),
            residual: Some(residual),
            entries: io::vector_pairs(&y),
        }),
    };
    emit(a, &text, stdout)?;

    let (nx, ny) = (numerics::vec_norm2(&x), numerics::vec_norm2(&y));
    let drift = (nx - ny).abs() / nx.max(1.0);
    let _ = writeln!(
        stderr,
        "order={order} size={} method={} norm_drift={drift:.3e}",
        x.len(),
        a.method
    );
    if drift > a.tolerance {
        return Ok(warn(
            a,
            stderr,
            &format!(
                "norm not preserved: relative drift {drift:.3e} > {:.1e}",
                a.tolerance
            ),
        ));
    }
    if residual > engine::ILL_CONDITIONED_RESIDUAL {
        return Ok(warn(
            a,
            stderr,
            &format!("Vandermonde solve residual {residual:.3e} is large"),
        ));
    }
    Ok(EXIT_OK)
}

pub fn cmd_verify(a: &CommonArgs, stdout: &mut dyn Write) -> CliResult {
    let sizes = match a.size {
        Some(0) => return Err(CliError::usage("--size must be at least 1")),
        Some(n) => vec![n],
        None => verify::default_sizes(),
    };
    let orders = match a.order {
        Some(o) => vec![o],
        None => verify::default_orders(),
    };
    let report = verify::run(&sizes, &orders, Tolerances::from_base(a.tolerance))?;
    let mut text = report.to_string();
    text.push_str(if report.passed() {
        "all properties within tolerance\n"
    } else {
        "verification FAILED\n"
    });
    emit(a, &text, stdout)?;
    Ok(if report.passed() {
        EXIT_OK
    } else {
        EXIT_VERIFY_FAILED
    })
}

/// One benchmark row; times in microseconds.
#[derive(Debug, Clone)]
pub struct BenchRow {
    pub size: usize,
    pub projector_us: f64,
    pub vandermonde_us: Option<f64>,
    pub apply_us: f64,
    pub apply_fast_us: f64,
    pub projector_matmuls: u64,
    pub vandermonde_matmuls: u64,
    pub fast_matvecs: u64,
}

pub const BENCH_SIZES: [usize; 5] = [8, 16, 32, 64, 128];

fn micros(start: Instant) -> f64 {
    start.elapsed().as_secs_f64() * 1e6
}

pub fn bench_row(order: FrftOrder, n: usize, rng: &mut impl Rng) -> Result<BenchRow, DfrftError> {
    numerics::reset_matmul_count();
    let t = Instant::now();
    let f = engine::frft_projector(order, n)?;
    let projector_us = micros(t);
    let projector_matmuls = numerics::matmul_count();

    numerics::reset_matmul_count();
    let t = Instant::now();
    let vandermonde_us = engine::frft_vandermonde(order, n).ok().map(|_| micros(t));
    let vandermonde_matmuls = numerics::matmul_count();

    let x: Vec<Complex64> = (0..n)
        .map(|_| Complex64::new(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0)))
        .collect();
    let t = Instant::now();
    let _ = f.apply(&x)?;
    let apply_us = micros(t);

    engine::reset_dft_matvec_count();
    let t = Instant::now();
    let _ = engine::apply_fast(order, &x)?;
    let apply_fast_us = micros(t);
    let fast_matvecs = engine::dft_matvec_count();

    Ok(BenchRow {
        size: n,
        projector_us,
        vandermonde_us,
        apply_us,
        apply_fast_us,
        projector_matmuls,
        vandermonde_matmuls,
        fast_matvecs,
    })
}

pub fn cmd_bench(a: &CommonArgs, stdout: &mut dyn Write) -> CliResult {
    let order = a.order.unwrap_or_else(|| FrftOrder::from(0.5));
    let sizes = match a.size {
        Some(0) => return Err(CliError::usage("--size must be at least 1")),
        Some(n) => vec![n],
        None => BENCH_SIZES.to_vec(),
    };
    let mut rng = rand::rngs::StdRng::seed_from_u64(0x5eed);
    let mut text = String::from(
        "N,projector_us,vandermonde_us,apply_us,apply_fast_us,projector_matmuls,vandermonde_matmuls,fast_matvecs\n",
    );
    for n in sizes {
        let r = bench_row(order, n, &mut rng)?;
        let vdm = r
            .vandermonde_us
            .map_or_else(|| "singular".to_string(), |v| format!("{v:.1}"));
        text.push_str(&format!(
            "{},{:.1},{},{:.1},{:.1},{},{},{}\n",
            r.size,
            r.projector_us,
            vdm,
            r.apply_us,
            r.apply_fast_us,
            r.projector_matmuls,
            r.vandermonde_matmuls,
            r.fast_matvecs
        ));
    }
    emit(a, &text, stdout)?;
    Ok(EXIT_OK)
}
