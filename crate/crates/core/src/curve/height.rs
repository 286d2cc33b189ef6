use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::{is_minimal, WeierstrassModel};
use crate::{Error, Result};

/// `max(|c4|^3, c6^2)`, the integer whose logarithm defines the height.
pub fn height_key(c4: &BigInt, c6: &BigInt) -> BigInt {
    let a = c4.abs().pow(3);
    let b = c6 * c6;
    if a >= b {
        a
    } else {
        b
    }
}

/// `(1/12) log(key)` computed from the top bits of `key`.
pub fn height_of_key(key: &BigInt) -> f64 {
    let bits = key.bits();
    let shift = bits.saturating_sub(64);
    let top = (key >> shift).to_f64().unwrap_or(f64::INFINITY);
    (top.ln() + shift as f64 * std::f64::consts::LN_2) / 12.0
}

/// Naive height of a globally minimal model.
pub fn height(m: &WeierstrassModel) -> Result<f64> {
    if !is_minimal(m)? {
        return Err(Error::InvalidArgument(
            "height is defined on a globally minimal model".into(),
        ));
    }
    let inv = m.invariants()?;
    Ok(height_of_key(&height_key(
        &inv.c4.to_integer(),
        &inv.c6.to_integer(),
    )))
}

/// Exact form of the cutoff `ht < X`: `key < exp(12 X)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HeightThreshold {
    /// `floor(exp(12 X))`. For rational `X != 0` the exponential is irrational,
    /// so `ht < X` holds exactly when `key <= floor`.
    pub floor: BigInt,
}

impl HeightThreshold {
    pub fn admits(&self, key: &BigInt) -> bool {
        key <= &self.floor
    }
}

/// `floor(exp(12 X))` for the exact binary value of `x`, bracketed by
/// Taylor partial sums with a rigorous tail bound.
pub fn height_threshold(x: f64) -> Result<HeightThreshold> {
    if !(x.is_finite() && x > 0.0) {
        return Err(Error::InvalidArgument(format!("height cutoff {x} must be positive")));
    }
    let z = BigRational::from_float(12.0 * x).expect("finite");
    let floor = floor_exp(&z);
    Ok(HeightThreshold { floor })
}

fn floor_exp(z: &BigRational) -> BigInt {
    // exp(z) lies in [S_N, S_N + T_{N+1} / (1 - z/(N+2))] once N + 2 > z,
    // where S_N is the partial sum and T_k = z^k / k!.
    let mut sum = BigRational::one();
    let mut term = BigRational::one();
    let mut n: u64 = 0;
    loop {
        n += 1;
        term = term * z / BigRational::from_integer(BigInt::from(n));
        sum += &term;
        let next = &term * z / BigRational::from_integer(BigInt::from(n + 1));
        let ratio = z / BigRational::from_integer(BigInt::from(n + 2));
        if ratio >= BigRational::one() {
            continue;
        }
        let tail = next / (BigRational::one() - ratio);
        let lo = sum.floor().to_integer();
        let hi = (&sum + &tail).floor().to_integer();
        if lo == hi && !tail.is_zero() {
            return lo;
        }
    }
}
