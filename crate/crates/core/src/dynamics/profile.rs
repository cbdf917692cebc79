use num_traits::Signed;

use super::{Orbit, Series};
use crate::error::{Error, Result};
use crate::exact;

pub const DEFAULT_BURN_IN: usize = 100;
pub const DEFAULT_PERIOD_TOL: f64 = 1e-9;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Side {
    Above,
    Below,
    At,
}

/// A maximal run of consecutive values on the same side of the center.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Semicycle {
    pub side: Side,
    pub start: usize,
    pub len: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OscillationProfile {
    pub sides: Vec<Side>,
    pub semicycles: Vec<Semicycle>,
}

impl OscillationProfile {
    /// True when every value from `start` on changes side, with no `At`.
    pub fn strictly_alternating_from(&self, start: usize) -> bool {
        let tail = &self.sides[start.min(self.sides.len())..];
        tail.iter().all(|s| *s != Side::At) && tail.windows(2).all(|w| w[0] != w[1])
    }
}

/// Side of `center` for every value. Exact orbits compare exactly; floating
/// orbits treat `|x - center| <= 1e-12 max(1, |center|)` as `At`.
pub fn oscillation_profile(orbit: &Orbit, center: f64) -> Result<OscillationProfile> {
    if orbit.len() < 4 {
        return Err(Error::OrbitTooShort {
            len: orbit.len(),
            required: 4,
        });
    }
    let sides: Vec<Side> = match &orbit.series {
        Series::Exact(values) => {
            let c = exact::from_f64(center)?;
            values
                .iter()
                .map(|x| {
                    let d = x - &c;
                    if d.is_positive() {
                        Side::Above
                    } else if d.is_negative() {
                        Side::Below
                    } else {
                        Side::At
                    }
                })
                .collect()
        }
        Series::Float(values) => {
            let tol = 1e-12 * center.abs().max(1.0);
            values
                .iter()
                .map(|&x| {
                    if (x - center).abs() <= tol {
                        Side::At
                    } else if x > center {
                        Side::Above
                    } else {
                        Side::Below
                    }
                })
                .collect()
        }
    };
    let mut semicycles: Vec<Semicycle> = Vec::new();
    for (i, &side) in sides.iter().enumerate() {
        match semicycles.last_mut() {
            Some(run) if run.side == side => run.len += 1,
            _ => semicycles.push(Semicycle { side, start: i, len: 1 }),
        }
    }
    Ok(OscillationProfile { sides, semicycles })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Period {
    pub period: usize,
    /// First index from which `|x_{n+period} - x_n| < tol` holds for the rest of the orbit.
    pub phase: usize,
}

/// [`detect_period_with_burn_in`] with a burn-in of 100 values.
pub fn detect_period(orbit: &Orbit, max_period: usize, tol: f64) -> Result<Option<Period>> {
    detect_period_with_burn_in(orbit, max_period, tol, DEFAULT_BURN_IN)
}

/// Smallest `period <= max_period` with `|x_{n+period} - x_n| < tol` for every
/// `n >= burn_in`. Needs at least `3 max_period + burn_in` values.
pub fn detect_period_with_burn_in(
    orbit: &Orbit,
    max_period: usize,
    tol: f64,
    burn_in: usize,
) -> Result<Option<Period>> {
    let required = 3 * max_period + burn_in;
    if orbit.len() < required || max_period == 0 {
        return Err(Error::OrbitTooShort {
            len: orbit.len(),
            required: required.max(1),
        });
    }
    let values = orbit.values_f64();
    let close = |n: usize, period: usize| (values[n + period] - values[n]).abs() < tol;
    for period in 1..=max_period {
        let last = values.len() - period;
        if !(burn_in..last).all(|n| close(n, period)) {
            continue;
        }
        let mut phase = burn_in;
        while phase > 0 && close(phase - 1, period) {
            phase -= 1;
        }
        return Ok(Some(Period { period, phase }));
    }
    Ok(None)
}
