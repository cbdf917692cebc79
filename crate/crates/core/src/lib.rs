//! Exact and numerical machinery for the pair of rational difference equations
//!
//! ```text
//! x_{n+1} = q / ( p + x_n^nu)      (Branch::Plus)
//! y_{n+1} = q / (-p + y_n^nu)      (Branch::Minus)
//! ```
//!
//! with `p, q > 0` and `nu >= 1`.
//!
//! The crate is organised by concern:
//!
//! * [`horadam`] evaluates the Horadam sequence `W_n(a, b; p, q)` exactly, works in
//!   the quadratic ring generated by the roots of `x^2 = p x + q`, and checks the
//!   classical identities (Cassini, d'Ocagne, Johnson, convolution, powers of the root).
//! * [`closed_form`] covers `nu = 1`: explicit solutions in terms of Horadam numbers,
//!   forbidden initial conditions, limits, and product-of-orbit identities.
//! * [`dynamics`] iterates either equation for any `nu` on the exact or the floating
//!   plane and profiles the resulting orbits.
//! * [`analysis`] locates equilibria, classifies their linear stability and solves
//!   for prime period-two cycles.
//! * [`cli`] is the command-line front end used by the `ratdiff` binary.

pub mod analysis;
pub mod cli;
pub mod closed_form;
pub mod dynamics;
mod equation;
mod error;
pub mod exact;
pub mod horadam;

pub use crate::equation::{Branch, EquationSpec};
pub use crate::error::{Error, Result};
pub use crate::exact::Rational;
