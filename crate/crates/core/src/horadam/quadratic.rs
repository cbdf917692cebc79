use std::fmt;
use std::ops::Mul;

use num_traits::{One, Zero};

use crate::exact::Rational;

/// `u + v·Φ` in the ring `Q[Φ] / (Φ^2 - pΦ - q)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuadraticElement {
    pub u: Rational,
    pub v: Rational,
    p: Rational,
    q: Rational,
}

impl QuadraticElement {
    pub fn new(u: Rational, v: Rational, p: Rational, q: Rational) -> Self {
        Self { u, v, p, q }
    }

    pub fn one(p: Rational, q: Rational) -> Self {
        Self::new(Rational::one(), Rational::zero(), p, q)
    }

    /// The generator `Φ` itself.
    pub fn phi(p: Rational, q: Rational) -> Self {
        Self::new(Rational::zero(), Rational::one(), p, q)
    }

    pub fn p(&self) -> &Rational {
        &self.p
    }

    pub fn q(&self) -> &Rational {
        &self.q
    }

    /// Evaluate at a numeric root.
    pub fn eval(&self, phi: f64) -> f64 {
        crate::exact::to_f64(&self.u) + crate::exact::to_f64(&self.v) * phi
    }
}

impl Mul for &QuadraticElement {
    type Output = QuadraticElement;

    fn mul(self, rhs: &QuadraticElement) -> QuadraticElement {
        debug_assert!(self.p == rhs.p && self.q == rhs.q, "elements of different rings");
        let vv = &self.v * &rhs.v;
        QuadraticElement {
            u: &self.u * &rhs.u + &self.q * &vv,
            v: &self.u * &rhs.v + &rhs.u * &self.v + &self.p * &vv,
            p: self.p.clone(),
            q: self.q.clone(),
        }
    }
}

impl fmt::Display for QuadraticElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} + {}·Φ", self.u, self.v)
    }
}

/// `Φ^n` by repeated multiplication in the quadratic ring.
///
/// With `W = W(0, 1; p, q)` the result is `q W_{n-1} + W_n Φ`.
pub fn phi_power(p: &Rational, q: &Rational, n: u32) -> QuadraticElement {
    let phi = QuadraticElement::phi(p.clone(), q.clone());
    let mut acc = QuadraticElement::one(p.clone(), q.clone());
    for _ in 0..n {
        acc = &acc * &phi;
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::int;

    #[test]
    fn golden_square() {
        let e = phi_power(&int(1), &int(1), 2);
        assert_eq!((e.u, e.v), (int(1), int(1)));
    }

    #[test]
    fn pell_cube() {
        // Φ^2 = 2Φ + 1, Φ^3 = 2Φ^2 + Φ = 5Φ + 2.
        let e = phi_power(&int(2), &int(1), 3);
        assert_eq!((e.u, e.v), (int(2), int(5)));
    }

    #[test]
    fn jacobsthal_fourth_power_carries_q() {
        // Φ^2 = Φ + 2, Φ^3 = 3Φ + 2, Φ^4 = 3Φ^2 + 2Φ = 5Φ + 6 = q·J_3 + J_4·Φ.
        let e = phi_power(&int(1), &int(2), 4);
        assert_eq!((e.u.clone(), e.v.clone()), (int(6), int(5)));
        assert!((e.eval(2.0) - 16.0).abs() < 1e-12);
        assert!((e.eval(-1.0) - 1.0).abs() < 1e-12);
    }

    #[test]
    fn zeroth_power_is_one() {
        let e = phi_power(&int(3), &int(5), 0);
        assert_eq!(e, QuadraticElement::one(int(3), int(5)));
    }
}
