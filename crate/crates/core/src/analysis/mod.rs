//! Equilibria, their linear stability, and prime period-two cycles for any `nu`.
//!
//! An equilibrium of `x -> q / (±p + x^nu)` is a root of
//! `x^(nu+1) ± p x - q`. On the Plus branch this polynomial is increasing on
//! `(0, inf)`, on the Minus branch with odd `nu` it is decreasing on
//! `(-inf, 0)`, and with even `nu` it is concave on `(-inf, 0)`; each case gets a
//! guaranteed sign bracket and bisection. The value `x = ±1` is decided exactly
//! from the rational parameters, so the reported location never depends on
//! rounding.

mod period_two;
mod roots;

pub use period_two::{
    approx_period_two_form, minus_even_cycle_threshold, period_two_cycles, solve_period_two,
    PeriodTwoCycle, MINUS_EVEN_NU_CAP,
};
pub use roots::bisect;

use num_traits::{One, Signed, Zero};
use serde::Serialize;

use crate::closed_form;
use crate::equation::{Branch, EquationSpec};
use crate::error::{Error, Result};
use crate::exact::{int, Rational};

/// Relative residual an equilibrium must meet against its polynomial.
pub const EQUILIBRIUM_TOL: f64 = 1e-10;
/// Half-width of the band around `|multiplier| = 1` labelled marginal.
pub const MARGINAL_BAND: f64 = 1e-12;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Stability {
    LocallyAsymptoticallyStable,
    MarginallyStable,
    Unstable,
}

impl Stability {
    pub fn from_multiplier(multiplier: f64) -> Self {
        let m = multiplier.abs();
        if m < 1.0 - MARGINAL_BAND {
            Stability::LocallyAsymptoticallyStable
        } else if m > 1.0 + MARGINAL_BAND {
            Stability::Unstable
        } else {
            Stability::MarginallyStable
        }
    }
}

/// Location of an equilibrium relative to `±1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Bracket {
    InUnitInterval,
    AtOne,
    BeyondOne,
    InMinusUnit,
    AtMinusOne,
    BelowMinusOne,
}

impl Bracket {
    fn of(value: f64) -> Self {
        if value > 0.0 {
            if value < 1.0 {
                Bracket::InUnitInterval
            } else if value == 1.0 {
                Bracket::AtOne
            } else {
                Bracket::BeyondOne
            }
        } else if value > -1.0 {
            Bracket::InMinusUnit
        } else if value == -1.0 {
            Bracket::AtMinusOne
        } else {
            Bracket::BelowMinusOne
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct EquilibriumReport {
    pub value: f64,
    /// Derivative of the map at `value`.
    pub multiplier: f64,
    pub classification: Stability,
    pub bracket: Bracket,
}

impl EquilibriumReport {
    fn at(eq: &EquationSpec, value: f64) -> Self {
        let multiplier = eq.derivative_f64(value);
        Self {
            value,
            multiplier,
            classification: Stability::from_multiplier(multiplier),
            bracket: Bracket::of(value),
        }
    }
}

/// `|x^(nu+1) ± p x - q|`.
pub fn equilibrium_residual(eq: &EquationSpec, x: f64) -> f64 {
    (x.powi(eq.nu() as i32 + 1) + eq.signed_p_f64() * x - eq.q_f64()).abs()
}

fn polynomial(eq: &EquationSpec) -> impl Fn(f64) -> f64 + '_ {
    move |x| x.powi(eq.nu() as i32 + 1) + eq.signed_p_f64() * x - eq.q_f64()
}

/// Exact value of `x^(nu+1) ± p x - q` at `x = point` (`point` is `±1`).
fn polynomial_at_unit(eq: &EquationSpec, point: i64) -> Rational {
    let x = int(point);
    let mut pow = Rational::one();
    for _ in 0..=eq.nu() {
        pow *= &x;
    }
    pow + eq.signed_p() * x - eq.q()
}

/// Bisect on `[lo, hi]`, first narrowing to the half on one side of `unit`
/// (which is `±1`) by the exact sign of the polynomial there.
fn root_in(eq: &EquationSpec, lo: f64, hi: f64, unit: i64) -> Result<f64> {
    let f = polynomial(eq);
    let u = unit as f64;
    let (mut a, mut b) = (lo, hi);
    if a < u && u < b {
        let at_unit = polynomial_at_unit(eq, unit);
        if at_unit.is_zero() {
            return Ok(u);
        }
        let unit_positive = at_unit.is_positive();
        if (f(a) > 0.0) == unit_positive {
            a = u;
        } else {
            b = u;
        }
    }
    bisect(&f, a, b, 0.0)
}

/// All equilibria the theory tracks: the unique positive one on the Plus
/// branch, and the negative ones on the Minus branch. Each report is classified.
pub fn equilibria(eq: &EquationSpec) -> Result<Vec<EquilibriumReport>> {
    let (p, q) = (eq.p_f64(), eq.q_f64());
    let nu = eq.nu();
    let values: Vec<f64> = match eq.branch() {
        Branch::Plus => {
            let value = if polynomial_at_unit(eq, 1).is_zero() {
                1.0
            } else if nu == 1 {
                closed_form::asymptotic_limit(eq)?
            } else {
                root_in(eq, 0.0, (q / p).max(1.0) + 1.0, 1)?
            };
            vec![value]
        }
        Branch::Minus if nu % 2 == 1 => {
            let value = if polynomial_at_unit(eq, -1).is_zero() {
                -1.0
            } else if nu == 1 {
                closed_form::asymptotic_limit(eq)?
            } else {
                root_in(eq, -((q / p).max(1.0) + 1.0), 0.0, -1)?
            };
            vec![value]
        }
        Branch::Minus => minus_even_roots(eq)?,
    };
    Ok(values
        .into_iter()
        .map(|v| EquilibriumReport::at(eq, v))
        .collect())
}

/// Negative roots of the concave `x^(nu+1) - p x - q` (even `nu`), ascending.
fn minus_even_roots(eq: &EquationSpec) -> Result<Vec<f64>> {
    let (p, q) = (eq.p_f64(), eq.q_f64());
    let nu = eq.nu();
    let f = polynomial(eq);
    // The maximum on (-inf, 0) sits where (nu+1) x^nu = p.
    let peak_is_unit = *eq.p() == int(i64::from(nu) + 1);
    let peak = if peak_is_unit {
        -1.0
    } else {
        -(p / f64::from(nu + 1)).powf(1.0 / f64::from(nu))
    };
    let far = -(p.powf(1.0 / f64::from(nu)) + 1.0);
    let at_minus_one = polynomial_at_unit(eq, -1);

    if at_minus_one.is_zero() {
        if peak_is_unit {
            return Ok(vec![-1.0]);
        }
        return Ok(if peak > -1.0 {
            vec![-1.0, bisect(&f, peak, 0.0, 0.0)?]
        } else {
            vec![bisect(&f, far, peak, 0.0)?, -1.0]
        });
    }
    let top = f(peak);
    let tangency = 1e-15 * q.max(1.0);
    if top > tangency || (peak_is_unit && at_minus_one.is_positive()) {
        Ok(vec![root_in(eq, far, peak, -1)?, root_in(eq, peak, 0.0, -1)?])
    } else if top.abs() <= tangency {
        Ok(vec![peak])
    } else {
        Ok(Vec::new())
    }
}

/// Recompute multiplier and classification, rejecting non-equilibria.
pub fn classify_stability(eq: &EquationSpec, report: &EquilibriumReport) -> Result<EquilibriumReport> {
    let residual = equilibrium_residual(eq, report.value);
    if !(residual < EQUILIBRIUM_TOL * eq.q_f64().max(1.0)) {
        return Err(Error::NotAnEquilibrium { residual });
    }
    Ok(EquilibriumReport::at(eq, report.value))
}

/// Coefficients `c` of the linearization `u_{n+1} + c u_n = 0` about `value`.
pub fn linearization(eq: &EquationSpec, value: f64) -> Vec<f64> {
    vec![-eq.derivative_f64(value)]
}

/// Sufficient condition for asymptotic stability of `x_{n+k} + c_1 x_{n+k-1} + ... + c_k x_n = 0`:
/// `sum |c_i| < 1`.
pub fn theorem_a_check(coeffs: &[f64]) -> bool {
    coeffs.iter().map(|c| c.abs()).sum::<f64>() < 1.0
}
