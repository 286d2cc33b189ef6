//! Tate's algorithm and the data derived from it.

mod algorithm;
mod residue;
mod table;

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed};
use serde::{Deserialize, Serialize};

pub use algorithm::{tate_local, tate_local_ints};
pub use table::kodaira_from_signature;

use crate::arith::factorize;
use crate::curve::{minimal_model, WeierstrassModel};
use crate::{Error, Result};

/// Kodaira symbol of the special fibre.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Kodaira {
    I0,
    I(u32),
    II,
    III,
    IV,
    I0Star,
    IStar(u32),
    IVStar,
    IIIStar,
    IIStar,
}

impl fmt::Display for Kodaira {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Kodaira::I0 => write!(f, "I0"),
            Kodaira::I(n) => write!(f, "I{n}"),
            Kodaira::II => write!(f, "II"),
            Kodaira::III => write!(f, "III"),
            Kodaira::IV => write!(f, "IV"),
            Kodaira::I0Star => write!(f, "I0*"),
            Kodaira::IStar(n) => write!(f, "I{n}*"),
            Kodaira::IVStar => write!(f, "IV*"),
            Kodaira::IIIStar => write!(f, "III*"),
            Kodaira::IIStar => write!(f, "II*"),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum ReductionClass {
    Good,
    SplitMultiplicative,
    NonsplitMultiplicative,
    Additive,
}

impl fmt::Display for ReductionClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ReductionClass::Good => "good",
            ReductionClass::SplitMultiplicative => "split",
            ReductionClass::NonsplitMultiplicative => "nonsplit",
            ReductionClass::Additive => "additive",
        })
    }
}

/// Everything Tate's algorithm reports at one prime.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LocalReduction {
    pub p: BigInt,
    pub kodaira: Kodaira,
    /// Local Tamagawa number.
    pub c_p: u32,
    /// Exponent of `p` in the conductor.
    pub f_p: u32,
    /// `v_p` of the discriminant of a model minimal at `p`.
    pub v_min: u32,
    pub class: ReductionClass,
    /// The model minimal at `p` that the algorithm finished on.
    pub local_model: WeierstrassModel,
    /// Number of Step-11 rescalings performed.
    pub rescalings: u32,
}

/// Split/nonsplit/additive/good classification of a model minimal at `p`.
pub fn reduction_class(m: &WeierstrassModel, p: &BigInt) -> Result<ReductionClass> {
    let r = tate_local(m, p)?;
    if r.rescalings > 0 {
        return Err(Error::NonMinimal(format!("model is not minimal at {p}")));
    }
    Ok(r.class)
}

/// Integral model in the same isomorphism class (minimal when one is needed).
fn integral_model(m: &WeierstrassModel) -> Result<WeierstrassModel> {
    if m.is_integral() {
        Ok(m.clone())
    } else {
        Ok(minimal_model(m)?.0)
    }
}

/// Primes dividing the minimal discriminant.
pub fn bad_primes(m: &WeierstrassModel) -> Result<Vec<BigInt>> {
    Ok(global_tamagawa(m)?.1.into_iter().map(|r| r.p).collect())
}

/// Product of the local Tamagawa numbers, with the per-prime records of the
/// bad primes in increasing order.
pub fn global_tamagawa(m: &WeierstrassModel) -> Result<(u64, Vec<LocalReduction>)> {
    let m = integral_model(m)?;
    let disc = m.discriminant().to_integer();
    if disc.abs().is_one() {
        return Ok((1, Vec::new()));
    }
    let primes: Vec<BigInt> = factorize(&disc)?.primes().cloned().collect();
    tamagawa_at(&m, &primes)
}

/// Like [`global_tamagawa`] but over a caller-supplied set of candidate primes
/// that must include every prime of bad reduction.
pub fn tamagawa_at(m: &WeierstrassModel, primes: &[BigInt]) -> Result<(u64, Vec<LocalReduction>)> {
    let m = integral_model(m)?;
    let mut total = 1u64;
    let mut out = Vec::new();
    for p in primes {
        let r = tate_local(&m, p)?;
        if r.kodaira != Kodaira::I0 {
            total *= r.c_p as u64;
            out.push(r);
        }
    }
    out.sort_by(|x, y| x.p.cmp(&y.p));
    Ok((total, out))
}
