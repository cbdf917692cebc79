//! Explicit solutions for `nu = 1`.
//!
//! With `W = W(0, 1; p, q)` the Plus equation `x_{n+1} = q / (p + x_n)` has
//!
//! ```text
//! x_n = q (W_n + x_0 W_{n-1}) / (W_{n+1} + x_0 W_n)
//! ```
//!
//! and the Minus equation is the same recurrence with `p -> -p`, i.e. the formula
//! with the sign-mirrored sequence `W_{-n} = (-1)^{n+1} W_n`. Every identity here
//! is rational in `p, q, x_0`, so it is evaluated exactly; doubles appear only
//! where the irrational roots `Φ±` of `x^2 = p x + q` enter.

mod products;

pub use products::{
    docagne_limit_gap, docagne_product, johnson_product, product_analysis, product_closed_form,
    reconstruct_horadam, ProductAnalysis, ProductRegime,
};

use num_traits::{Signed, Zero};

use crate::dynamics;
use crate::equation::{Branch, EquationSpec};
use crate::error::{Error, Result};
use crate::exact::Rational;
use crate::horadam::{binet_roots, HoradamSpec, QuadraticRoots};

/// Default depth to which forbidden-set membership is checked.
pub const DEFAULT_FORBIDDEN_DEPTH: usize = 64;

/// Floating distance at which an initial value counts as an excluded point.
pub const EXCLUDED_POINT_TOL: f64 = 1e-12;

/// `W(0, 1; ±p, q)`: the sequence whose ratios solve the given branch.
pub(crate) fn solving_sequence(eq: &EquationSpec) -> HoradamSpec {
    HoradamSpec::canonical(eq.signed_p(), eq.q().clone())
        .expect("p, q > 0 gives a nondegenerate recurrence")
}

pub(crate) fn roots(eq: &EquationSpec) -> QuadraticRoots {
    binet_roots(eq.p_f64(), eq.q_f64()).expect("p, q > 0 gives real roots")
}

/// Smallest `m <= depth` at which the orbit of `x0` is undefined, if any.
///
/// `Ok(None)` means "clear to depth `depth`", not "not forbidden".
pub fn forbidden_depth(eq: &EquationSpec, x0: &Rational, depth: usize) -> Result<Option<usize>> {
    eq.require_linear()?;
    let w = solving_sequence(eq).terms(1, depth as i64 + 1);
    Ok((1..=depth).find(|&m| (&w[m] + x0 * &w[m - 1]).is_zero()))
}

/// `x_n` from the closed form. Fails if the orbit is undefined at some step `<= n`.
pub fn solve_closed_form(eq: &EquationSpec, x0: &Rational, n: usize) -> Result<Rational> {
    eq.require_linear()?;
    if let Some(depth) = forbidden_depth(eq, x0, n)? {
        return Err(Error::ForbiddenInitialCondition { depth });
    }
    if n == 0 {
        return Ok(x0.clone());
    }
    let w = solving_sequence(eq).terms(n as i64 - 1, n as i64 + 1);
    Ok(eq.q() * (&w[1] + x0 * &w[0]) / (&w[2] + x0 * &w[1]))
}

/// `x_0, ..., x_n` from the closed form.
pub fn closed_form_series(eq: &EquationSpec, x0: &Rational, n: usize) -> Result<Vec<Rational>> {
    eq.require_linear()?;
    // w[i] = W_{i-1}, i = 0..=n+2
    let w = solving_sequence(eq).terms(-1, n as i64 + 1);
    let mut out = Vec::with_capacity(n + 1);
    out.push(x0.clone());
    for k in 1..=n {
        let den = &w[k + 2] + x0 * &w[k + 1];
        if den.is_zero() {
            return Err(Error::ForbiddenInitialCondition { depth: k });
        }
        out.push(eq.q() * (&w[k + 1] + x0 * &w[k]) / den);
    }
    Ok(out)
}

/// Closed form on doubles; useful at irrational initial values such as `1/Φ±`.
pub fn solve_closed_form_f64(eq: &EquationSpec, x0: f64, n: usize) -> Result<f64> {
    eq.require_linear()?;
    if n == 0 {
        return Ok(x0);
    }
    let (p, q) = (eq.signed_p_f64(), eq.q_f64());
    let (mut prev, mut cur) = (0.0_f64, 1.0_f64); // W_{k-1}, W_k with k = 1
    for _ in 1..n {
        let next = p * cur + q * prev;
        prev = cur;
        cur = next;
    }
    let next = p * cur + q * prev;
    let den = next + x0 * cur;
    if den == 0.0 {
        return Err(Error::ForbiddenInitialCondition { depth: n });
    }
    Ok(q * (cur + x0 * prev) / den)
}

/// A point of the forbidden set: the orbit starting at `value` is undefined at step `m`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ForbiddenPoint {
    pub m: usize,
    pub value: Rational,
}

impl ForbiddenPoint {
    /// Iterate exactly and return the step at which the denominator vanishes.
    pub fn certify(&self, eq: &EquationSpec) -> Option<usize> {
        match dynamics::iterate_exact(eq, self.value.clone(), self.m).status {
            dynamics::OrbitStatus::HitSingularity(step) => Some(step),
            _ => None,
        }
    }
}

/// `-W_{m+1}/W_m` (Plus) or `W_{m+1}/W_m` (Minus) for `m = 1..=depth`.
pub fn forbidden_points(eq: &EquationSpec, depth: usize) -> Result<Vec<ForbiddenPoint>> {
    eq.require_linear()?;
    let w = solving_sequence(eq).terms(1, depth as i64 + 1);
    Ok((1..=depth)
        .map(|m| ForbiddenPoint {
            m,
            value: -(&w[m] / &w[m - 1]),
        })
        .collect())
}

/// The two real points removed from the domain besides the forbidden sequence:
/// the constant solutions, `q/Φ±` on the Plus branch (this is `1/Φ±` when
/// `q = 1`) and `Φ±` on the Minus branch.
pub fn excluded_points(eq: &EquationSpec) -> Result<[f64; 2]> {
    eq.require_linear()?;
    let r = roots(eq);
    Ok(match eq.branch() {
        Branch::Plus => [eq.q_f64() / r.phi_plus, eq.q_f64() / r.phi_minus],
        Branch::Minus => [r.phi_plus, r.phi_minus],
    })
}

pub fn at_excluded_point(eq: &EquationSpec, x0: f64) -> Result<bool> {
    Ok(excluded_points(eq)?
        .iter()
        .any(|pt| (x0 - pt).abs() < EXCLUDED_POINT_TOL))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Root {
    PhiPlus,
    PhiMinus,
}

/// An initial value whose orbit is constant.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FixedSolution {
    pub initial: f64,
    pub value: f64,
}

impl FixedSolution {
    /// Largest `|x_n - value|` over `steps` floating iterations of the map.
    pub fn max_deviation(&self, eq: &EquationSpec, steps: usize) -> f64 {
        let mut x = self.initial;
        let mut worst = (x - self.value).abs();
        for _ in 0..steps {
            x = eq.map_f64(x);
            worst = worst.max((x - self.value).abs());
        }
        worst
    }
}

/// Plus: `x_0 = x_n = q/Φ±`. Minus: `y_0 = y_n = Φ±`.
pub fn fixed_solution(eq: &EquationSpec, which: Root) -> Result<FixedSolution> {
    eq.require_linear()?;
    let r = roots(eq);
    let phi = match which {
        Root::PhiPlus => r.phi_plus,
        Root::PhiMinus => r.phi_minus,
    };
    let value = match eq.branch() {
        Branch::Plus => eq.q_f64() / phi,
        Branch::Minus => phi,
    };
    Ok(FixedSolution {
        initial: value,
        value,
    })
}

/// `-Φ-` on the Plus branch, `Φ-` on the Minus branch.
pub fn asymptotic_limit(eq: &EquationSpec) -> Result<f64> {
    eq.require_linear()?;
    let (p, q) = (eq.p_f64(), eq.q_f64());
    // -Φ- = 2q / (p + sqrt(p^2 + 4q)), free of cancellation.
    let minus_phi_minus = 2.0 * q / (p + (p * p + 4.0 * q).sqrt());
    Ok(match eq.branch() {
        Branch::Plus => minus_phi_minus,
        Branch::Minus => -minus_phi_minus,
    })
}

/// `x_n + y_n` for the Plus orbit of `x0` and the Minus orbit of `-x0`.
pub fn conjugate_orbit_check(p: &Rational, q: &Rational, x0: &Rational, n: usize) -> Result<Rational> {
    let plus = EquationSpec::plus(p.clone(), q.clone(), 1)?;
    let minus = plus.with_branch(Branch::Minus);
    Ok(solve_closed_form(&plus, x0, n)? + solve_closed_form(&minus, &-x0.clone(), n)?)
}

/// Whether `x0` is the repelling constant solution: `-Φ+` (Plus) or `Φ+` (Minus).
/// Only possible for rational `x0` when `p^2 + 4q` is a perfect square.
pub(crate) fn is_repelling_equilibrium(eq: &EquationSpec, x0: &Rational) -> bool {
    // Both points satisfy x^2 ± p x - q = 0 and have sign ∓.
    let poly = x0 * x0 + eq.signed_p() * x0 - eq.q();
    poly.is_zero()
        && match eq.branch() {
            Branch::Plus => x0.is_negative(),
            Branch::Minus => x0.is_positive(),
        }
}
