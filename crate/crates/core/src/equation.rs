use std::fmt;

use num_traits::Signed;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exact::{self, Rational};

/// Which of the two equations: `q/(p + x^nu)` or `q/(-p + x^nu)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Branch {
    Plus,
    Minus,
}

impl Branch {
    pub fn sign(self) -> i8 {
        match self {
            Branch::Plus => 1,
            Branch::Minus => -1,
        }
    }
}

impl fmt::Display for Branch {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Branch::Plus => "plus",
            Branch::Minus => "minus",
        })
    }
}

/// One difference equation `x_{n+1} = q / (±p + x_n^nu)`.
///
/// `p` and `q` are held exactly; their nearest doubles are cached for the
/// floating plane.
#[derive(Debug, Clone, PartialEq)]
pub struct EquationSpec {
    branch: Branch,
    p: Rational,
    q: Rational,
    nu: u32,
    p_f64: f64,
    q_f64: f64,
}

impl EquationSpec {
    pub fn new(branch: Branch, p: Rational, q: Rational, nu: u32) -> Result<Self> {
        if !p.is_positive() {
            return Err(Error::InvalidParameter(format!("p must be positive, got {p}")));
        }
        if !q.is_positive() {
            return Err(Error::InvalidParameter(format!("q must be positive, got {q}")));
        }
        if nu == 0 {
            return Err(Error::InvalidParameter("nu must be at least 1".into()));
        }
        let p_f64 = exact::to_f64(&p);
        let q_f64 = exact::to_f64(&q);
        Ok(Self {
            branch,
            p,
            q,
            nu,
            p_f64,
            q_f64,
        })
    }

    pub fn plus(p: Rational, q: Rational, nu: u32) -> Result<Self> {
        Self::new(Branch::Plus, p, q, nu)
    }

    pub fn minus(p: Rational, q: Rational, nu: u32) -> Result<Self> {
        Self::new(Branch::Minus, p, q, nu)
    }

    /// Build from doubles; the exact parameters are the doubles' binary values.
    pub fn from_f64(branch: Branch, p: f64, q: f64, nu: u32) -> Result<Self> {
        Self::new(branch, exact::from_f64(p)?, exact::from_f64(q)?, nu)
    }

    pub fn branch(&self) -> Branch {
        self.branch
    }

    pub fn p(&self) -> &Rational {
        &self.p
    }

    pub fn q(&self) -> &Rational {
        &self.q
    }

    pub fn nu(&self) -> u32 {
        self.nu
    }

    pub fn p_f64(&self) -> f64 {
        self.p_f64
    }

    pub fn q_f64(&self) -> f64 {
        self.q_f64
    }

    /// `+p` on the Plus branch, `-p` on the Minus branch.
    pub fn signed_p(&self) -> Rational {
        match self.branch {
            Branch::Plus => self.p.clone(),
            Branch::Minus => -self.p.clone(),
        }
    }

    pub fn signed_p_f64(&self) -> f64 {
        f64::from(self.branch.sign()) * self.p_f64
    }

    /// The same parameters on the other branch.
    pub fn with_branch(&self, branch: Branch) -> Self {
        Self { branch, ..self.clone() }
    }

    pub fn with_nu(&self, nu: u32) -> Result<Self> {
        Self::new(self.branch, self.p.clone(), self.q.clone(), nu)
    }

    pub(crate) fn require_linear(&self) -> Result<()> {
        if self.nu == 1 {
            Ok(())
        } else {
            Err(Error::RequiresLinearExponent { nu: self.nu })
        }
    }

    /// The map `x -> q / (±p + x^nu)` on doubles, without any guard.
    pub fn map_f64(&self, x: f64) -> f64 {
        self.q_f64 / (self.signed_p_f64() + x.powi(self.nu as i32))
    }

    /// Derivative of the map: `-q nu x^(nu-1) / (±p + x^nu)^2`.
    pub fn derivative_f64(&self, x: f64) -> f64 {
        let den = self.signed_p_f64() + x.powi(self.nu as i32);
        -self.q_f64 * f64::from(self.nu) * x.powi(self.nu as i32 - 1) / (den * den)
    }
}

impl fmt::Display for EquationSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let sign = match self.branch {
            Branch::Plus => "",
            Branch::Minus => "-",
        };
        write!(f, "x' = {}/({}{} + x^{})", self.q, sign, self.p, self.nu)
    }
}
