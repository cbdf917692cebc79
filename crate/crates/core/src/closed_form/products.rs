//! Products of consecutive iterates for `nu = 1`.
//!
//! Telescoping the closed form gives, on either branch,
//! `x_0 x_1 ... x_n = q^n x_0 / (W_{n+1} + x_0 W_n)` with `W = W(0, 1; ±p, q)`.
//! Its behaviour as `n` grows is governed by the sign of `p - (q - 1)`.

use num_traits::{One, Signed, Zero};

use super::{forbidden_depth, is_repelling_equilibrium, roots, solving_sequence};
use crate::dynamics::{iterate_exact, OrbitStatus};
use crate::equation::{Branch, EquationSpec};
use crate::error::{Error, Result};
use crate::exact::{self, int, powi, Rational};
use crate::horadam::HoradamSpec;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ProductRegime {
    /// `p > q - 1`: the product tends to `W_0 = 0`.
    PGreaterQm1,
    /// `p = q - 1`: finite nonzero limit.
    PEqualQm1,
    /// `p < q - 1`: unbounded.
    PLessQm1,
}

impl ProductRegime {
    pub fn of(p: &Rational, q: &Rational) -> Self {
        let d = p - (q - Rational::one());
        if d.is_positive() {
            ProductRegime::PGreaterQm1
        } else if d.is_zero() {
            ProductRegime::PEqualQm1
        } else {
            ProductRegime::PLessQm1
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct ProductAnalysis {
    pub regime: ProductRegime,
    /// `0` when `p > q - 1`; `x_0 sqrt(p^2 + 4q) / (Φ+ + x_0)` when `p = q - 1`
    /// (with `x_0 = -y_0` on the Minus branch); `None` when divergent.
    pub predicted_limit: Option<f64>,
    /// Minus branch with `p = q - 1`: the product of the first `n + 1` terms
    /// tends to `(-1)^(n+1)` times `predicted_limit`.
    pub alternating: bool,
    /// `partials[n] = x_0 x_1 ... x_n`, exact.
    pub partials: Vec<Rational>,
}

impl ProductAnalysis {
    /// Limit of the subsequence through index `n`.
    pub fn limit_at(&self, n: usize) -> Option<f64> {
        let l = self.predicted_limit?;
        Some(if self.alternating && n % 2 == 0 { -l } else { l })
    }

    /// `(even-index limit, odd-index limit)`.
    pub fn parity_limits(&self) -> Option<(f64, f64)> {
        Some((self.limit_at(0)?, self.limit_at(1)?))
    }

    pub fn partials_f64(&self) -> Vec<f64> {
        self.partials.iter().map(exact::to_f64).collect()
    }

    /// `max_{i <= n} |partials[i]|` for every `n`.
    pub fn running_max_abs(&self) -> Vec<f64> {
        let mut best = 0.0_f64;
        self.partials
            .iter()
            .map(|x| {
                best = best.max(exact::to_f64(&x.abs()));
                best
            })
            .collect()
    }

    /// Growth certificate for divergence: the running maximum of `|partials|`
    /// strictly increases at every index after `burn_in`.
    pub fn growth_certified(&self, burn_in: usize) -> bool {
        if self.partials.len() < burn_in + 2 {
            return false;
        }
        let abs: Vec<Rational> = self.partials.iter().map(|x| x.abs()).collect();
        let mut max = abs[..=burn_in].iter().max().cloned().unwrap_or_else(Rational::zero);
        for a in &abs[burn_in + 1..] {
            if *a <= max {
                return false;
            }
            max = a.clone();
        }
        true
    }
}

/// `x_0 x_1 ... x_n` from the telescoped closed form.
pub fn product_closed_form(eq: &EquationSpec, x0: &Rational, n: usize) -> Result<Rational> {
    eq.require_linear()?;
    if let Some(depth) = forbidden_depth(eq, x0, n)? {
        return Err(Error::ForbiddenInitialCondition { depth });
    }
    let w = solving_sequence(eq);
    let n = n as i64;
    Ok(powi(eq.q(), n) * x0 / (w.at(n + 1) + x0 * w.at(n)))
}

/// Partial products over `steps` exact iterations, with the predicted limit.
pub fn product_analysis(eq: &EquationSpec, x0: &Rational, steps: usize) -> Result<ProductAnalysis> {
    eq.require_linear()?;
    if is_repelling_equilibrium(eq, x0) {
        return Err(Error::InitialAtMinusPhiPlus);
    }
    let orbit = iterate_exact(eq, x0.clone(), steps);
    if let OrbitStatus::HitSingularity(depth) = orbit.status {
        return Err(Error::ForbiddenInitialCondition { depth });
    }
    let mut acc = Rational::one();
    let partials = orbit
        .exact_values()
        .expect("exact orbit")
        .iter()
        .map(|x| {
            acc *= x;
            acc.clone()
        })
        .collect();

    let regime = ProductRegime::of(eq.p(), eq.q());
    let (predicted_limit, alternating) = match regime {
        ProductRegime::PGreaterQm1 => (Some(0.0), false),
        ProductRegime::PLessQm1 => (None, false),
        ProductRegime::PEqualQm1 => {
            let r = roots(eq);
            let x = match eq.branch() {
                Branch::Plus => exact::to_f64(x0),
                Branch::Minus => -exact::to_f64(x0),
            };
            let limit = x * r.discriminant.sqrt() / (r.phi_plus + x);
            (Some(limit), eq.branch() == Branch::Minus)
        }
    };
    Ok(ProductAnalysis {
        regime,
        predicted_limit,
        alternating,
        partials,
    })
}

fn plus_equation(p: &Rational, q: &Rational) -> Result<EquationSpec> {
    EquationSpec::plus(p.clone(), q.clone(), 1)
}

/// Product `x_1 ... x_count` of the exact Plus orbit of `x0`.
fn orbit_product(eq: &EquationSpec, x0: Rational, count: usize) -> Result<Rational> {
    let orbit = iterate_exact(eq, x0, count);
    if let OrbitStatus::HitSingularity(step) = orbit.status {
        return Err(Error::ZeroDenominator { step: step as i64 });
    }
    Ok(orbit.exact_values().expect("exact orbit")[1..]
        .iter()
        .fold(Rational::one(), |acc, x| acc * x))
}

/// Recover `W_n` from the orbit of `x_0 = q W_k / W_{k+1}`:
/// `W_n = q^(n-k-1) W_{k+1} / (x_1 ... x_{n-k-1})`.
pub fn reconstruct_horadam(p: &Rational, q: &Rational, k: u32, n: i64) -> Result<Rational> {
    let k = i64::from(k);
    if n <= k + 1 {
        return Err(Error::InvalidParameter(format!("need n > k + 1 (n = {n}, k = {k})")));
    }
    let eq = plus_equation(p, q)?;
    let w = HoradamSpec::canonical(p.clone(), q.clone())?;
    let count = n - k - 1;
    let x0 = q * w.at(k) / w.at(k + 1);
    let product = orbit_product(&eq, x0, count as usize)?;
    if product.is_zero() {
        return Err(Error::ZeroDenominator { step: count });
    }
    Ok(powi(q, count) * w.at(k + 1) / product)
}

/// `(-1)^n x_1 ... x_n` for `x_0 = -W_{n+r+1} / W_{n+r}`; equals `W_{n+r} / W_r`.
pub fn docagne_product(p: &Rational, q: &Rational, n: u32, r: u32) -> Result<Rational> {
    if n == 0 || r == 0 {
        return Err(Error::InvalidParameter("need n, r >= 1".into()));
    }
    let eq = plus_equation(p, q)?;
    let w = HoradamSpec::canonical(p.clone(), q.clone())?;
    let top = i64::from(n + r);
    let den = w.at(top);
    if den.is_zero() {
        return Err(Error::ZeroDenominator { step: 0 });
    }
    let x0 = -(w.at(top + 1) / den);
    let product = orbit_product(&eq, x0, n as usize)?;
    Ok(if n % 2 == 0 { product } else { -product })
}

/// `|W_{n+r} / W_r - Φ+^n|`, which shrinks as `r` grows.
pub fn docagne_limit_gap(p: &Rational, q: &Rational, n: u32, r: u32) -> Result<f64> {
    let eq = plus_equation(p, q)?;
    let w = HoradamSpec::canonical(p.clone(), q.clone())?;
    let ratio = exact::to_f64(&(w.at(i64::from(n + r)) / w.at(i64::from(r))));
    Ok((ratio - roots(&eq).phi_plus.powi(n as i32)).abs())
}

/// `(-1)^(r+1) q^(r-n) x_1 ... x_n` for `x_0 = -W_{r+1} / W_r`; equals `W_r / W_{n-r}`.
///
/// That `x_0` is itself forbidden at depth `r`, so the orbit only exists for
/// `n < r` and `W_{n-r}` has a negative index. For `n >= r` the iteration stops
/// with `ZeroDenominator { step: r }`.
pub fn johnson_product(p: &Rational, q: &Rational, r: u32, n: u32) -> Result<Rational> {
    if r == 0 || n == 0 {
        return Err(Error::InvalidParameter("need r, n >= 1".into()));
    }
    let eq = plus_equation(p, q)?;
    let w = HoradamSpec::canonical(p.clone(), q.clone())?;
    let x0 = -(w.at(i64::from(r) + 1) / w.at(i64::from(r)));
    let product = orbit_product(&eq, x0, n as usize)?;
    let sign = if r % 2 == 1 { 1 } else { -1 };
    Ok(int(sign) * powi(q, i64::from(r) - i64::from(n)) * product)
}
