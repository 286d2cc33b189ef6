//! Exact arithmetic for rational elliptic curves carrying a rational point of
//! odd prime order `l` in {3, 5, 7}, and for their `l`-isogenous quotients.
//!
//! The crate is organised bottom-up:
//!
//! * [`arith`]: valuations, residue symbols, factorization, power-free tests,
//!   the `a = c^3 d^2 e` decomposition and the solutions of `a^2 + 11ab - b^2 = 19`.
//! * [`curve`]: Weierstrass models, invariants, changes of variables, minimal
//!   and reduced minimal models, naive height.
//! * [`tate`]: Tate's algorithm (Kodaira type, local Tamagawa number, conductor
//!   exponent) and global Tamagawa numbers.
//! * [`parametric`]: the families `E_T(a,b)` and their quotients, Vélu's
//!   formulas and torsion-point checks.
//! * [`classifier`]: closed-form local Tamagawa numbers of both curves from
//!   the parameters alone.
//! * [`survey`]: enumeration by height and the statistics built on it.
//! * [`fixtures`]: a small offline corpus of curves with known data.

pub mod arith;
pub mod classifier;
pub mod curve;
mod error;
pub mod exec;
pub mod fixtures;
pub mod parametric;
pub mod survey;
pub mod tate;

pub use error::{Error, Result};
