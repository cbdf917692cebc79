//! Forward iteration of `x -> q / (±p + x^nu)` on the exact and floating planes.

mod profile;

pub use profile::{
    detect_period, detect_period_with_burn_in, oscillation_profile, OscillationProfile, Period,
    Semicycle, Side, DEFAULT_BURN_IN, DEFAULT_PERIOD_TOL,
};

use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::equation::{Branch, EquationSpec};
use crate::error::{Error, Result};
use crate::exact::{self, powi, Rational};

/// Relative size below which a floating denominator counts as singular.
pub const NEAR_SINGULAR_GUARD: f64 = 1e-12;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Plane {
    Exact,
    Float,
}

#[derive(Debug, Clone, PartialEq)]
pub enum Series {
    Exact(Vec<Rational>),
    Float(Vec<f64>),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", content = "step", rename_all = "snake_case")]
pub enum OrbitStatus {
    Completed,
    /// The denominator is exactly zero when computing this step.
    HitSingularity(usize),
    /// The floating guard tripped when computing this step.
    NearSingular(usize),
}

/// A trajectory `x_0, x_1, ...`; `series[0]` is the initial value.
#[derive(Debug, Clone, PartialEq)]
pub struct Orbit {
    pub eq: EquationSpec,
    pub series: Series,
    pub status: OrbitStatus,
}

impl Orbit {
    pub fn plane(&self) -> Plane {
        match self.series {
            Series::Exact(_) => Plane::Exact,
            Series::Float(_) => Plane::Float,
        }
    }

    pub fn len(&self) -> usize {
        match &self.series {
            Series::Exact(v) => v.len(),
            Series::Float(v) => v.len(),
        }
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn exact_values(&self) -> Option<&[Rational]> {
        match &self.series {
            Series::Exact(v) => Some(v),
            Series::Float(_) => None,
        }
    }

    pub fn values_f64(&self) -> Vec<f64> {
        match &self.series {
            Series::Exact(v) => v.iter().map(exact::to_f64).collect(),
            Series::Float(v) => v.clone(),
        }
    }

    pub fn last_f64(&self) -> Option<f64> {
        match &self.series {
            Series::Exact(v) => v.last().map(exact::to_f64),
            Series::Float(v) => v.last().copied(),
        }
    }

    /// Largest violation of `x_{n+1} = f(x_n)` over recorded pairs: zero or
    /// infinity on the exact plane, a relative error on the floating plane.
    pub fn max_step_residual(&self) -> f64 {
        match &self.series {
            Series::Exact(v) => {
                let ok = v
                    .windows(2)
                    .all(|w| step_exact(&self.eq, &w[0]).map_or(false, |x| x == w[1]));
                if ok {
                    0.0
                } else {
                    f64::INFINITY
                }
            }
            Series::Float(v) => v
                .windows(2)
                .map(|w| {
                    let expected = self.eq.map_f64(w[0]);
                    (w[1] - expected).abs() / expected.abs().max(f64::MIN_POSITIVE)
                })
                .fold(0.0, f64::max),
        }
    }
}

/// One exact step. A zero denominator is reported as `Singularity { step: 1 }`,
/// counting from the input value.
pub fn step_exact(eq: &EquationSpec, x: &Rational) -> Result<Rational> {
    let den = eq.signed_p() + powi(x, i64::from(eq.nu()));
    if den.is_zero() {
        return Err(Error::Singularity { step: 1 });
    }
    Ok(eq.q() / den)
}

/// One floating step, refusing denominators with `|den| < 1e-12 max(p, 1)`.
pub fn step_float(eq: &EquationSpec, x: f64) -> Result<f64> {
    let den = eq.signed_p_f64() + x.powi(eq.nu() as i32);
    if den == 0.0 {
        return Err(Error::Singularity { step: 1 });
    }
    if den.abs() < NEAR_SINGULAR_GUARD * eq.p_f64().max(1.0) {
        return Err(Error::NearSingularity { step: 1 });
    }
    Ok(eq.q_f64() / den)
}

pub fn iterate_exact(eq: &EquationSpec, x0: Rational, steps: usize) -> Orbit {
    let mut values = Vec::with_capacity(steps + 1);
    values.push(x0);
    let mut status = OrbitStatus::Completed;
    for n in 1..=steps {
        match step_exact(eq, &values[n - 1]) {
            Ok(x) => values.push(x),
            Err(_) => {
                status = OrbitStatus::HitSingularity(n);
                break;
            }
        }
    }
    Orbit {
        eq: eq.clone(),
        series: Series::Exact(values),
        status,
    }
}

pub fn iterate_float(eq: &EquationSpec, x0: f64, steps: usize) -> Orbit {
    let mut values = Vec::with_capacity(steps + 1);
    values.push(x0);
    let mut status = OrbitStatus::Completed;
    for n in 1..=steps {
        match step_float(eq, values[n - 1]) {
            Ok(x) => values.push(x),
            Err(Error::Singularity { .. }) => {
                status = OrbitStatus::HitSingularity(n);
                break;
            }
            Err(_) => {
                status = OrbitStatus::NearSingular(n);
                break;
            }
        }
    }
    Orbit {
        eq: eq.clone(),
        series: Series::Float(values),
        status,
    }
}

/// Iterate from a rational initial value on the chosen plane.
///
/// Exact orbits with `nu > 1` grow in size geometrically (the digit count is
/// multiplied by `nu` every step), so keep `steps` small there.
pub fn iterate(eq: &EquationSpec, x0: &Rational, steps: usize, plane: Plane) -> Orbit {
    match plane {
        Plane::Exact => iterate_exact(eq, x0.clone(), steps),
        Plane::Float => iterate_float(eq, exact::to_f64(x0), steps),
    }
}

/// Closed interval `[lo, hi]`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct BoundsEnvelope {
    pub lo: f64,
    pub hi: f64,
}

impl BoundsEnvelope {
    pub fn contains(&self, x: f64, slack: f64) -> bool {
        x >= self.lo - slack && x <= self.hi + slack
    }
}

/// `[q/(p + (q/p)^nu), q/p]`.
///
/// Every positive Plus orbit has `x_n <= q/p` for `n >= 1`, hence lies in the
/// envelope from step 2 on. Step 1 is inside as well exactly when `x_0 <= q/p`;
/// a larger `x_0` sends `x_1` below `lo`.
pub fn bounds_envelope(eq: &EquationSpec) -> Result<BoundsEnvelope> {
    if eq.branch() != Branch::Plus {
        return Err(Error::WrongBranch);
    }
    let (p, q) = (eq.p_f64(), eq.q_f64());
    let hi = q / p;
    Ok(BoundsEnvelope {
        lo: q / (p + hi.powi(eq.nu() as i32)),
        hi,
    })
}

/// Envelope for orbits of the Minus equation that stay negative.
///
/// For odd `nu`, `y -> -y` turns the Minus equation into the Plus one, so the
/// envelope is the reflected Plus envelope and holds from step 2 on. For even `nu` a negative iterate
/// needs `y^nu < p`, giving `[-p^(1/nu), -q/p]` from step 1 on; it is empty when
/// `q/p >= p^(1/nu)`.
pub fn reflected_envelope(eq: &EquationSpec) -> Result<BoundsEnvelope> {
    if eq.branch() != Branch::Minus {
        return Err(Error::WrongBranch);
    }
    let (p, q) = (eq.p_f64(), eq.q_f64());
    if eq.nu() % 2 == 1 {
        let plus = bounds_envelope(&eq.with_branch(Branch::Plus))?;
        Ok(BoundsEnvelope {
            lo: -plus.hi,
            hi: -plus.lo,
        })
    } else {
        let root = p.powf(1.0 / f64::from(eq.nu()));
        if q / p >= root {
            return Err(Error::EmptyEnvelope);
        }
        Ok(BoundsEnvelope { lo: -root, hi: -q / p })
    }
}
