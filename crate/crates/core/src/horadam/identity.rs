//! Exact residuals of the classical identities for `W_n(0, 1; p, q)`.

use num_traits::Zero;

use super::{phi_power, HoradamSpec};
use crate::error::{Error, Result};
use crate::exact::{powi, Rational};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum IdentityKind {
    Convolution,
    Cassini,
    DOcagne,
    Johnson,
    PhiPower,
}

impl IdentityKind {
    pub const ALL: [IdentityKind; 5] = [
        IdentityKind::Convolution,
        IdentityKind::Cassini,
        IdentityKind::DOcagne,
        IdentityKind::Johnson,
        IdentityKind::PhiPower,
    ];

    pub fn name(self) -> &'static str {
        match self {
            IdentityKind::Convolution => "convolution",
            IdentityKind::Cassini => "cassini",
            IdentityKind::DOcagne => "docagne",
            IdentityKind::Johnson => "johnson",
            IdentityKind::PhiPower => "phi-power",
        }
    }
}

/// An identity together with the indices it is evaluated at.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Identity {
    /// `W_n = W_{k+1} W_{n-k} + q W_k W_{n-k-1}`, `n > k + 1`, `k >= 0`.
    Convolution { n: i64, k: i64 },
    /// `W_{n-1} W_{n+1} - W_n^2 = -(-q)^{n-1}`, `n > 0`.
    Cassini { n: i64 },
    /// `W_{n+r} W_{n+1} - W_{n+r+1} W_n = (-1)^n q^n W_r`, `n, r >= 1`.
    DOcagne { n: i64, r: i64 },
    /// `W_k W_l - W_m W_n = (-q)^r (W_{k-r} W_{l-r} - W_{m-r} W_{n-r})`, `k + l = m + n`.
    Johnson { k: i64, l: i64, m: i64, n: i64, r: i64 },
    /// `Φ^n = q W_{n-1} + W_n Φ`, `n > 0`.
    PhiPower { n: i64 },
}

impl Identity {
    pub fn kind(&self) -> IdentityKind {
        match self {
            Identity::Convolution { .. } => IdentityKind::Convolution,
            Identity::Cassini { .. } => IdentityKind::Cassini,
            Identity::DOcagne { .. } => IdentityKind::DOcagne,
            Identity::Johnson { .. } => IdentityKind::Johnson,
            Identity::PhiPower { .. } => IdentityKind::PhiPower,
        }
    }

    fn check_indices(&self) -> Result<()> {
        let violated = |reason: &str| {
            Err(Error::IndexConstraintViolated {
                identity: self.kind().name(),
                reason: reason.to_string(),
            })
        };
        match *self {
            Identity::Convolution { n, k } if k < 0 || n <= k + 1 => {
                violated("requires k >= 0 and n > k + 1")
            }
            Identity::Cassini { n } if n <= 0 => violated("requires n > 0"),
            Identity::DOcagne { n, r } if n < 1 || r < 1 => violated("requires n, r >= 1"),
            Identity::Johnson { k, l, m, n, .. } if k + l != m + n => {
                violated("requires k + l = m + n")
            }
            Identity::PhiPower { n } if n <= 0 || n > i64::from(u32::MAX) => {
                violated("requires n > 0")
            }
            _ => Ok(()),
        }
    }
}

/// `LHS - RHS` of an identity; exactly zero when it holds.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Residual {
    Scalar(Rational),
    /// Differences of the constant and `Φ` coefficients.
    Pair(Rational, Rational),
}

impl Residual {
    pub fn is_zero(&self) -> bool {
        match self {
            Residual::Scalar(r) => r.is_zero(),
            Residual::Pair(a, b) => a.is_zero() && b.is_zero(),
        }
    }
}

pub fn check_identity(identity: &Identity, spec: &HoradamSpec) -> Result<Residual> {
    spec.require_canonical()?;
    identity.check_indices()?;
    let w = |i: i64| spec.at(i);
    let q = spec.q();
    let neg_q = -q.clone();
    let residual = match *identity {
        Identity::Convolution { n, k } => {
            w(n) - (w(k + 1) * w(n - k) + q * w(k) * w(n - k - 1))
        }
        Identity::Cassini { n } => {
            w(n - 1) * w(n + 1) - w(n) * w(n) + powi(&neg_q, n - 1)
        }
        Identity::DOcagne { n, r } => {
            let sign = if n % 2 == 0 { 1 } else { -1 };
            w(n + r) * w(n + 1) - w(n + r + 1) * w(n)
                - Rational::from_integer(sign.into()) * powi(q, n) * w(r)
        }
        Identity::Johnson { k, l, m, n, r } => {
            w(k) * w(l) - w(m) * w(n)
                - powi(&neg_q, r) * (w(k - r) * w(l - r) - w(m - r) * w(n - r))
        }
        Identity::PhiPower { n } => {
            let e = phi_power(spec.p(), q, n as u32);
            return Ok(Residual::Pair(e.u - q * w(n - 1), e.v - w(n)));
        }
    };
    Ok(Residual::Scalar(residual))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{int, rat};

    #[test]
    fn spec_examples() {
        let cassini = check_identity(&Identity::Cassini { n: 4 }, &HoradamSpec::fibonacci());
        assert!(cassini.unwrap().is_zero());
        let docagne = check_identity(&Identity::DOcagne { n: 3, r: 2 }, &HoradamSpec::pell());
        assert!(docagne.unwrap().is_zero());
        let johnson = check_identity(
            &Identity::Johnson { k: 5, l: 1, m: 4, n: 2, r: 1 },
            &HoradamSpec::jacobsthal(),
        );
        assert!(johnson.unwrap().is_zero());
    }

    #[test]
    fn residual_is_nonzero_when_identity_is_perturbed() {
        // A wrong sign in d'Ocagne would leave 2 q^n W_r behind; make sure the
        // residual actually measures something.
        let spec = HoradamSpec::canonical(int(3), int(2)).unwrap();
        let lhs = spec.at(5) * spec.at(3) - spec.at(6) * spec.at(2);
        assert_ne!(lhs, Rational::zero());
        assert!(check_identity(&Identity::DOcagne { n: 2, r: 3 }, &spec)
            .unwrap()
            .is_zero());
    }

    #[test]
    fn johnson_with_negative_indices_and_shift() {
        let spec = HoradamSpec::canonical(rat(3, 2), int(5)).unwrap();
        let id = Identity::Johnson { k: -4, l: 9, m: 2, n: 3, r: -3 };
        assert!(check_identity(&id, &spec).unwrap().is_zero());
    }

    #[test]
    fn errors() {
        let non_canonical = HoradamSpec::new(int(2), int(1), int(1), int(1)).unwrap();
        assert_eq!(
            check_identity(&Identity::Cassini { n: 2 }, &non_canonical),
            Err(Error::SpecNotCanonical)
        );
        let fib = HoradamSpec::fibonacci();
        for bad in [
            Identity::Cassini { n: 0 },
            Identity::Convolution { n: 3, k: 2 },
            Identity::Convolution { n: 5, k: -1 },
            Identity::DOcagne { n: 0, r: 1 },
            Identity::Johnson { k: 1, l: 2, m: 3, n: 4, r: 0 },
            Identity::PhiPower { n: 0 },
        ] {
            assert!(matches!(
                check_identity(&bad, &fib),
                Err(Error::IndexConstraintViolated { .. })
            ));
        }
    }
}
