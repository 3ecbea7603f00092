//! Invariant suite over a grid of sizes and orders.
//!
//! Every property is reduced to a single worst-case residual per grid so
//! the CLI can print one line per property.

use std::fmt;

use crate::engine::{self, FrftMatrix};
use crate::error::Result;
use crate::numerics::Matrix;
use crate::order::FrftOrder;
use crate::spectrum;

/// Largest size at which the two constructions must agree to the absolute tolerance.
pub const ABSOLUTE_EQUIVALENCE_MAX_N: usize = 12;
/// Largest size checked against the Vandermonde solve residual.
pub const RESIDUAL_EQUIVALENCE_MAX_N: usize = 20;
/// Allowed ratio of method disagreement to solve residual beyond the absolute range.
pub const RESIDUAL_RATIO: f64 = 100.0;

/// Nine orders evenly spanning `[−2, 4]`.
pub fn default_orders() -> Vec<FrftOrder> {
    (0..9)
        .map(|k| FrftOrder::from(-2.0 + 0.75 * k as f64))
        .collect()
}

pub fn default_sizes() -> Vec<usize> {
    (1..=16).collect()
}

/// Per-property thresholds.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Tolerances {
    pub unitarity: f64,
    pub additivity: f64,
    pub dft_identity: f64,
    pub inverse: f64,
    pub periodicity: f64,
    pub commutation: f64,
    pub equivalence: f64,
    pub power_checks: f64,
}

impl Tolerances {
    /// Scales every threshold from a base tolerance (default `1e-9`).
    pub fn from_base(base: f64) -> Self {
        Self {
            unitarity: base,
            additivity: 10.0 * base,
            dft_identity: 1e-3 * base,
            inverse: base,
            periodicity: base,
            commutation: base,
            equivalence: 10.0 * base,
            power_checks: base,
        }
    }
}

impl Default for Tolerances {
    fn default() -> Self {
        Self::from_base(1e-9)
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct PropertyResult {
    pub name: &'static str,
    /// Worst residual over the grid (for ratio checks, the worst ratio).
    pub max_residual: f64,
    pub tolerance: f64,
    pub cells: usize,
    /// Where the worst residual occurred.
    pub worst_cell: Option<(usize, f64)>,
}

impl PropertyResult {
    fn new(name: &'static str, tolerance: f64) -> Self {
        Self {
            name,
            max_residual: 0.0,
            tolerance,
            cells: 0,
            worst_cell: None,
        }
    }

    fn record(&mut self, residual: f64, n: usize, alpha: f64) {
        self.cells += 1;
        if residual > self.max_residual || residual.is_nan() {
            self.max_residual = residual;
            self.worst_cell = Some((n, alpha));
        }
    }

    pub fn passed(&self) -> bool {
        self.max_residual <= self.tolerance
    }
}

impl fmt::Display for PropertyResult {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let status = if self.passed() { "PASS" } else { "FAIL" };
        write!(
            f,
            "{status}  {:<26} max {:>10.3e}  tol {:>8.1e}  cells {:>4}",
            self.name, self.max_residual, self.tolerance, self.cells
        )?;
        if let (false, Some((n, a))) = (self.passed(), self.worst_cell) {
            write!(f, "  worst at N={n}, order={a}")?;
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Default)]
pub struct Report {
    pub properties: Vec<PropertyResult>,
}

impl Report {
    pub fn passed(&self) -> bool {
        self.properties.iter().all(PropertyResult::passed)
    }

    pub fn get(&self, name: &str) -> Option<&PropertyResult> {
        self.properties.iter().find(|p| p.name == name)
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for p in &self.properties {
            writeln!(f, "{p}")?;
        }
        Ok(())
    }
}

/// Disagreement between the two constructions, normalized for the residual check.
///
/// Returns `disagreement / max(residual, N·ε)`; an exact solve still leaves
/// rounding from the two matrix evaluations.
pub fn residual_ratio(disagreement: f64, residual: f64, n: usize) -> f64 {
    disagreement / residual.max(n as f64 * f64::EPSILON)
}

/// Runs the full invariant suite on every `(N, α)` cell of the grid.
pub fn run(sizes: &[usize], orders: &[FrftOrder], tol: Tolerances) -> Result<Report> {
    let mut unitarity = PropertyResult::new("unitarity", tol.unitarity);
    let mut unitarity_vdm = PropertyResult::new("unitarity (vandermonde)", tol.unitarity);
    let mut additivity = PropertyResult::new("additivity", tol.additivity);
    let mut dft_identity = PropertyResult::new("F_1 = U", tol.dft_identity);
    let mut inverse = PropertyResult::new("F_a F_-a = I", tol.inverse);
    let mut periodicity = PropertyResult::new("4-periodicity", tol.periodicity);
    let mut commutation = PropertyResult::new("commutes with U", tol.commutation);
    let mut equivalence = PropertyResult::new("method equivalence", tol.equivalence);
    let mut residual_equiv = PropertyResult::new("equivalence / residual", RESIDUAL_RATIO);
    let mut power_to_dft = PropertyResult::new("(F_a)^(1/a) = U", tol.power_checks);
    let mut power_to_identity = PropertyResult::new("(F_a)^(4/a) = I", tol.power_checks);

    for &n in sizes {
        let u = spectrum::dft_matrix(n)?.into_matrix();
        let f1 = engine::frft_projector(FrftOrder::from(1.0), n)?;
        dft_identity.record(f1.matrix.max_abs_diff(&u)?, n, 1.0);

        let cache: Vec<FrftMatrix> = orders
            .iter()
            .map(|&a| engine::frft_projector(a, n))
            .collect::<Result<_>>()?;

        for (idx, (&order, fa)) in orders.iter().zip(&cache).enumerate() {
            let alpha = order.value();
            unitarity.record(fa.matrix.unitarity_defect()?, n, alpha);

            let neg = engine::frft_projector(order.neg(), n)?;
            inverse.record(
                fa.matrix.matmul(&neg.matrix)?.distance_from_identity()?,
                n,
                alpha,
            );

            let shifted = engine::frft_projector(FrftOrder::from(alpha + 4.0), n)?;
            periodicity.record(shifted.matrix.max_abs_diff(&fa.matrix)?, n, alpha);

            let fu = fa.matrix.matmul(&u)?;
            let uf = u.matmul(&fa.matrix)?;
            commutation.record(fu.max_abs_diff(&uf)?, n, alpha);

            // pair each order with the next one in the grid
            let beta_idx = (idx + 1) % orders.len();
            let (beta, fb) = (orders[beta_idx].value(), &cache[beta_idx]);
            let sum = engine::frft_projector(FrftOrder::from(alpha + beta), n)?;
            additivity.record(
                fa.matrix.matmul(&fb.matrix)?.max_abs_diff(&sum.matrix)?,
                n,
                alpha,
            );

            if n <= RESIDUAL_EQUIVALENCE_MAX_N {
                let vdm = engine::frft_vandermonde(order, n)?;
                let diff = vdm.matrix.max_abs_diff(&fa.matrix)?;
                if n <= ABSOLUTE_EQUIVALENCE_MAX_N {
                    equivalence.record(diff, n, alpha);
                    unitarity_vdm.record(vdm.matrix.unitarity_defect()?, n, alpha);
                } else {
                    residual_equiv.record(
                        residual_ratio(diff, vdm.solve_residual_inf, n),
                        n,
                        alpha,
                    );
                }
            }

            if alpha != 0.0 && alpha.abs() <= 1.0 {
                let back = engine::real_power(order, 1.0 / alpha, n)?;
                power_to_dft.record(back.matrix.max_abs_diff(&u)?, n, alpha);
                let id = engine::real_power(order, 4.0 / alpha, n)?;
                power_to_identity.record(id.matrix.distance_from_identity()?, n, alpha);
            }
        }
    }

    let properties = vec![
        unitarity,
        unitarity_vdm,
        additivity,
        dft_identity,
        inverse,
        periodicity,
        commutation,
        equivalence,
        residual_equiv,
        power_to_dft,
        power_to_identity,
    ];
    Ok(Report {
        properties: properties.into_iter().filter(|p| p.cells > 0).collect(),
    })
}

/// `‖F_a^s − target‖max` through the spectral power.
pub fn power_residual(order: FrftOrder, s: f64, n: usize, target: &Matrix) -> Result<f64> {
    engine::real_power(order, s, n)?.matrix.max_abs_diff(target)
}
