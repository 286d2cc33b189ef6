//! Weierstrass models over the rationals.

mod height;
mod iso;
mod minimal;
mod model;

pub use height::{height, height_key, height_of_key, height_threshold, HeightThreshold};
pub use iso::IsomorphismData;
pub use minimal::{
    is_minimal, minimal_model, minimal_scaling, reduced_from_c4c6, reduced_minimal_model,
};
pub use model::{signature, Invariants, Signature, WeierstrassModel};

use num_bigint::BigInt;
use num_rational::BigRational;

pub(crate) fn q(n: impl Into<BigInt>) -> BigRational {
    BigRational::from_integer(n.into())
}
