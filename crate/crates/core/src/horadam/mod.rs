//! The Horadam sequence `W_n(a, b; p, q)`:
//! `W_0 = a`, `W_1 = b`, `W_{n+1} = p W_n + q W_{n-1}`.
//!
//! Values are exact rationals. Negative indices run the recurrence backwards,
//! `W_{n-1} = (W_{n+1} - p W_n) / q`, so the forward recurrence holds on all of
//! the integers. For the canonical sequence this gives
//! `W_{-n} = (-1)^{n+1} W_n / q^n`, which is the familiar sign-mirror
//! `(-1)^{n+1} W_n` only when `q = 1`.
//!
//! The sign-mirrored sequence used by the closed form of the Minus equation is
//! available separately as [`HoradamSpec::reflected_at`].

mod identity;
mod quadratic;

pub use identity::{check_identity, Identity, IdentityKind, Residual};
pub use quadratic::{phi_power, QuadraticElement};

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::exact::{self, int, Rational};

/// Parameters `(a, b; p, q)` of a second-order linear recurrence.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HoradamSpec {
    a: Rational,
    b: Rational,
    p: Rational,
    q: Rational,
}

impl HoradamSpec {
    /// Requires `q != 0` (backward steps divide by `q`) and `p^2 + 4q != 0`.
    pub fn new(a: Rational, b: Rational, p: Rational, q: Rational) -> Result<Self> {
        let disc = &p * &p + int(4) * &q;
        if q.is_zero() || disc.is_zero() {
            return Err(Error::DegenerateRecurrence);
        }
        Ok(Self { a, b, p, q })
    }

    /// `W_n(0, 1; p, q)`.
    pub fn canonical(p: Rational, q: Rational) -> Result<Self> {
        Self::new(Rational::zero(), Rational::one(), p, q)
    }

    pub fn fibonacci() -> Self {
        Self::canonical(int(1), int(1)).expect("fibonacci parameters are valid")
    }

    pub fn pell() -> Self {
        Self::canonical(int(2), int(1)).expect("pell parameters are valid")
    }

    pub fn jacobsthal() -> Self {
        Self::canonical(int(1), int(2)).expect("jacobsthal parameters are valid")
    }

    pub fn a(&self) -> &Rational {
        &self.a
    }

    pub fn b(&self) -> &Rational {
        &self.b
    }

    pub fn p(&self) -> &Rational {
        &self.p
    }

    pub fn q(&self) -> &Rational {
        &self.q
    }

    pub fn is_canonical(&self) -> bool {
        self.a.is_zero() && self.b.is_one()
    }

    pub(crate) fn require_canonical(&self) -> Result<()> {
        if self.is_canonical() {
            Ok(())
        } else {
            Err(Error::SpecNotCanonical)
        }
    }

    /// `p^2 + 4q`.
    pub fn discriminant(&self) -> Rational {
        &self.p * &self.p + int(4) * &self.q
    }

    /// `W_n`, exact, for any integer `n`.
    pub fn at(&self, n: i64) -> Rational {
        if n >= 0 {
            let (mut prev, mut cur) = (self.a.clone(), self.b.clone());
            if n == 0 {
                return prev;
            }
            for _ in 1..n {
                let next = &self.p * &cur + &self.q * &prev;
                prev = std::mem::replace(&mut cur, next);
            }
            cur
        } else {
            // (cur, next) = (W_k, W_{k+1}), walking k downwards.
            let (mut cur, mut next) = (self.a.clone(), self.b.clone());
            for _ in 0..n.unsigned_abs() {
                let prev = (&next - &self.p * &cur) / &self.q;
                next = std::mem::replace(&mut cur, prev);
            }
            cur
        }
    }

    /// `W_from ..= W_to` in order. Empty when `to < from`.
    pub fn terms(&self, from: i64, to: i64) -> Vec<Rational> {
        if to < from {
            return Vec::new();
        }
        let mut out = Vec::with_capacity((to - from + 1) as usize);
        let mut prev = self.at(from);
        out.push(prev.clone());
        if to == from {
            return out;
        }
        let mut cur = self.at(from + 1);
        out.push(cur.clone());
        for _ in from + 2..=to {
            let next = &self.p * &cur + &self.q * &prev;
            out.push(next.clone());
            prev = std::mem::replace(&mut cur, next);
        }
        out
    }

    /// The same recurrence with `p` replaced by `-p`.
    pub fn reflected(&self) -> Self {
        Self {
            a: self.a.clone(),
            b: self.b.clone(),
            p: -self.p.clone(),
            q: self.q.clone(),
        }
    }

    /// `W_{-n}` under the mirrored recurrence `W_{-n} = -p W_{-n+1} + q W_{-n+2}`
    /// started from `W_0, W_{-1} = a, b`; this is `W_n(a, b; -p, q)` and, for the
    /// canonical sequence, equals `(-1)^{n+1} W_n` for every `q`.
    pub fn reflected_at(&self, n: i64) -> Rational {
        self.reflected().at(n)
    }

    /// Roots of `x^2 = p x + q` and the Binet coefficients for this `(a, b)`.
    pub fn binet(&self) -> Result<QuadraticRoots> {
        let mut roots = binet_roots(exact::to_f64(&self.p), exact::to_f64(&self.q))?;
        let (a, b) = (exact::to_f64(&self.a), exact::to_f64(&self.b));
        roots.a_coeff = b - a * roots.phi_minus;
        roots.b_coeff = b - a * roots.phi_plus;
        Ok(roots)
    }
}

/// Free-function form of [`HoradamSpec::at`].
pub fn horadam_at(spec: &HoradamSpec, n: i64) -> Rational {
    spec.at(n)
}

/// Roots `phi_plus > phi_minus` of `x^2 = p x + q` with Binet coefficients `A`, `B`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QuadraticRoots {
    pub phi_plus: f64,
    pub phi_minus: f64,
    pub discriminant: f64,
    /// `A = b - a phi_minus`
    pub a_coeff: f64,
    /// `B = b - a phi_plus`
    pub b_coeff: f64,
}

impl QuadraticRoots {
    /// `W_n = (A phi_plus^n - B phi_minus^n) / (phi_plus - phi_minus)`.
    pub fn eval(&self, n: i32) -> f64 {
        (self.a_coeff * self.phi_plus.powi(n) - self.b_coeff * self.phi_minus.powi(n))
            / self.discriminant.sqrt()
    }
}

/// Roots of `x^2 = p x + q`, with canonical Binet coefficients `A = B = 1`.
pub fn binet_roots(p: f64, q: f64) -> Result<QuadraticRoots> {
    let discriminant = p * p + 4.0 * q;
    if !(discriminant > 0.0) {
        return Err(Error::NonRealRoots { discriminant });
    }
    let s = discriminant.sqrt();
    // The root of larger magnitude is formed without cancellation, the other from
    // the product phi_plus * phi_minus = -q.
    let (phi_plus, phi_minus) = if p >= 0.0 {
        let big = (p + s) / 2.0;
        (big, -q / big)
    } else {
        let big = (p - s) / 2.0;
        (-q / big, big)
    };
    Ok(QuadraticRoots {
        phi_plus,
        phi_minus,
        discriminant,
        a_coeff: 1.0,
        b_coeff: 1.0,
    })
}

/// `W_{n+r} / W_n` as a double; tends to `phi_plus^r` as `n` grows.
pub fn ratio_estimate(spec: &HoradamSpec, r: i64, n: i64) -> Result<f64> {
    let den = spec.at(n);
    if den.is_zero() {
        return Err(Error::ZeroDenominator { step: n });
    }
    Ok(exact::to_f64(&(spec.at(n + r) / den)))
}
