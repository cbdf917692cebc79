//! Prime period-two cycles as sign changes of `(f(f(x)) - x) / (f(x) - x)`.

use serde::Serialize;

use super::equilibria;
use super::roots::bisect;
use crate::dynamics::bounds_envelope;
use crate::equation::{Branch, EquationSpec};
use crate::exact::{from_f64, int, powi, sign, Rational};

/// Largest `nu` tried by [`minus_even_cycle_threshold`].
pub const MINUS_EVEN_NU_CAP: u32 = 64;
/// Points closer than this are treated as one (cycle separation, equilibrium exclusion).
const SEPARATION: f64 = 1e-8;
const GRID: usize = 20_000;

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct PeriodTwoCycle {
    /// Cycle point of larger magnitude.
    pub phi: f64,
    pub psi: f64,
    /// `max(|phi(±p + psi^nu) - q|, |psi(±p + phi^nu) - q|)`.
    pub residual: f64,
    /// Approximate closed candidates for `(phi, psi)`.
    pub approx_form: (f64, f64),
}

impl PeriodTwoCycle {
    /// Relative deviation of the solved cycle from `approx_form`, per component.
    pub fn approx_deviation(&self) -> (f64, f64) {
        let rel = |x: f64, a: f64| ((x - a) / a).abs();
        (rel(self.phi, self.approx_form.0), rel(self.psi, self.approx_form.1))
    }

    /// `|(psi^nu - phi^nu)/(psi^(nu-1) - phi^(nu-1)) - (±q/p)|`; absent for
    /// `nu = 1` or a vanishing denominator.
    pub fn quotient_residual(&self, eq: &EquationSpec) -> Option<f64> {
        let nu = eq.nu() as i32;
        if nu < 2 {
            return None;
        }
        let den = self.psi.powi(nu - 1) - self.phi.powi(nu - 1);
        if den == 0.0 {
            return None;
        }
        let lhs = (self.psi.powi(nu) - self.phi.powi(nu)) / den;
        let rhs = eq.q_f64() / eq.signed_p_f64();
        Some((lhs - rhs).abs())
    }
}

fn cycle_residual(eq: &EquationSpec, phi: f64, psi: f64) -> f64 {
    let (sp, q, nu) = (eq.signed_p_f64(), eq.q_f64(), eq.nu() as i32);
    let a = (phi * (sp + psi.powi(nu)) - q).abs();
    let b = (psi * (sp + phi.powi(nu)) - q).abs();
    a.max(b)
}

fn map_exact(eq: &EquationSpec, x: &Rational) -> Option<Rational> {
    let den = eq.signed_p() + powi(x, i64::from(eq.nu()));
    (sign(&den) != 0).then(|| eq.q() / den)
}

/// Exact sign of `(f(f(x)) - x) / (f(x) - x)`.
fn deflated_sign(eq: &EquationSpec, x: f64) -> Option<i8> {
    let x = from_f64(x).ok()?;
    let y = map_exact(eq, &x)?;
    let z = map_exact(eq, &y)?;
    Some(sign(&(z - &x)) * sign(&(y - &x)))
}

/// A float root is kept only if the exact deflated function changes sign
/// across a small bracket around it.
fn certified(eq: &EquationSpec, x: f64) -> bool {
    let w = 1e-9 * x.abs().max(1.0);
    match (deflated_sign(eq, x - w), deflated_sign(eq, x + w)) {
        (Some(a), Some(b)) => a * b < 0,
        _ => false,
    }
}

/// The approximate closed candidates for a two-cycle on this branch and parity.
pub fn approx_period_two_form(eq: &EquationSpec) -> (f64, f64) {
    let (p, q, nu) = (eq.p_f64(), eq.q_f64(), eq.nu() as i32);
    let r = q / p;
    match eq.branch() {
        Branch::Plus => (r, q / (p + r.powi(nu))),
        Branch::Minus if nu % 2 == 1 => (-r, -q / (p + r.powi(nu))),
        Branch::Minus => (-r, q / (-p + r.powi(nu))),
    }
}

/// Scan interval for cycle points.
fn search_domain(eq: &EquationSpec) -> (f64, f64) {
    let (p, q, nu) = (eq.p_f64(), eq.q_f64(), eq.nu());
    let plus = eq.with_branch(Branch::Plus);
    let env = bounds_envelope(&plus).expect("plus branch has an envelope");
    match eq.branch() {
        Branch::Plus => (env.lo, env.hi),
        Branch::Minus if nu % 2 == 1 => (-env.hi, -env.lo),
        Branch::Minus => {
            let reach = (q / p).max(p.powf(1.0 / f64::from(nu))).max(1.0);
            (-(2.0 * reach + 1.0), 0.0)
        }
    }
}

/// Grid over `[a, b]`: uniform, plus geometric clustering toward both ends.
fn grid(a: f64, b: f64) -> Vec<f64> {
    let mut t: Vec<f64> = (0..=GRID).map(|i| i as f64 / GRID as f64).collect();
    for k in 1..=52 {
        let h = 0.5f64.powi(k);
        t.push(h);
        t.push(1.0 - h);
    }
    t.sort_by(|x, y| x.partial_cmp(y).unwrap());
    t.dedup();
    let mut xs: Vec<f64> = t.into_iter().map(|s| a + s * (b - a)).collect();
    xs.dedup();
    xs
}

/// All prime two-cycles found in the search domain, ordered by `phi`.
///
/// Each sign change of `(f(f(x)) - x) / (f(x) - x)` is bisected to full double precision;
/// a root is kept when its cycle residual is below `max(tol, 1e-10) * max(1, q)`
/// and exact arithmetic confirms the sign change.
pub fn period_two_cycles(eq: &EquationSpec, tol: f64) -> Vec<PeriodTwoCycle> {
    let f = |x: f64| eq.map_f64(x);
    // Dividing out f(x) - x removes the equilibria. A marginal equilibrium is a
    // triple root of f(f(x)) - x, which rounding would otherwise split into a
    // spurious cycle.
    let g = |x: f64| (f(f(x)) - x) / (f(x) - x);
    let fixed: Vec<f64> = equilibria(eq)
        .map(|v| v.into_iter().map(|r| r.value).collect())
        .unwrap_or_default();
    let (a, b) = search_domain(eq);
    let xs = grid(a, b);
    let values: Vec<f64> = xs.iter().map(|&x| g(x)).collect();
    let limit = tol.max(1e-10) * eq.q_f64().max(1.0);
    let approx_form = approx_period_two_form(eq);

    let mut cycles: Vec<PeriodTwoCycle> = Vec::new();
    for i in 0..xs.len() - 1 {
        let (g0, g1) = (values[i], values[i + 1]);
        if !(g0.is_finite() && g1.is_finite()) || (g0 != 0.0 && g0.signum() == g1.signum()) {
            continue;
        }
        if g1 == 0.0 && g0 != 0.0 {
            // picked up as the left end of the next interval
            continue;
        }
        let Ok(x) = bisect(g, xs[i], xs[i + 1], 0.0) else {
            continue;
        };
        let y = f(x);
        if !y.is_finite() || (x - y).abs() <= SEPARATION {
            continue;
        }
        if fixed.iter().any(|e| (x - e).abs() < SEPARATION) {
            continue;
        }
        let (phi, psi) = if x.abs() >= y.abs() { (x, y) } else { (y, x) };
        let residual = cycle_residual(eq, phi, psi);
        if !(residual < limit) {
            continue;
        }
        if cycles.iter().any(|c| (c.phi - phi).abs() < SEPARATION) || !certified(eq, x) {
            continue;
        }
        cycles.push(PeriodTwoCycle {
            phi,
            psi,
            residual,
            approx_form,
        });
    }
    cycles.sort_by(|x, y| x.phi.partial_cmp(&y.phi).unwrap());
    cycles
}

/// The widest prime two-cycle, if any.
pub fn solve_period_two(eq: &EquationSpec, tol: f64) -> Option<PeriodTwoCycle> {
    period_two_cycles(eq, tol).into_iter().max_by(|x, y| {
        (x.phi - x.psi)
            .abs()
            .partial_cmp(&(y.phi - y.psi).abs())
            .unwrap()
    })
}

/// Smallest even `nu > q` (up to [`MINUS_EVEN_NU_CAP`]) for which the Minus
/// equation has a prime two-cycle.
pub fn minus_even_cycle_threshold(p: &Rational, q: &Rational, tol: f64) -> Option<u32> {
    let mut nu = 2u32;
    while int(i64::from(nu)) <= *q {
        nu += 2;
    }
    while nu <= MINUS_EVEN_NU_CAP {
        let eq = EquationSpec::minus(p.clone(), q.clone(), nu).ok()?;
        if solve_period_two(&eq, tol).is_some() {
            return Some(nu);
        }
        nu += 2;
    }
    None
}
