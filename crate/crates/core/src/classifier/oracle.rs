//! The same numbers computed the slow way, by Tate's algorithm on both curves.

use num_bigint::BigInt;
use num_traits::{One, Signed};

use crate::arith::factorize;
use crate::parametric::{build_pair, ParamSpec};
use crate::tate::{tate_local, tamagawa_at, LocalReduction};
use crate::Result;

/// Tate's algorithm on `E_T` and `Ẽ_T` at one prime.
#[derive(Debug, Clone)]
pub struct OraclePair {
    pub e: LocalReduction,
    pub e_tilde: LocalReduction,
}

impl OraclePair {
    pub fn c(&self) -> u32 {
        self.e.c_p
    }

    pub fn c_tilde(&self) -> u32 {
        self.e_tilde.c_p
    }
}

pub fn oracle_local(spec: &ParamSpec, p: &BigInt) -> Result<OraclePair> {
    let pair = build_pair(spec)?;
    Ok(OraclePair {
        e: tate_local(&pair.e, p)?,
        e_tilde: tate_local(&pair.e_tilde, p)?,
    })
}

/// Global Tamagawa numbers `(c, c̃)` of both curves from Tate's algorithm,
/// over the primes of the discriminant of `E_T` (isogenous curves share
/// their bad primes).
pub fn oracle_global(spec: &ParamSpec) -> Result<(u64, u64, Vec<OraclePair>)> {
    let pair = build_pair(spec)?;
    let disc = pair.e.discriminant().to_integer();
    let primes: Vec<BigInt> = if disc.abs().is_one() {
        Vec::new()
    } else {
        factorize(&disc)?.primes().cloned().collect()
    };
    let (c, e_loc) = tamagawa_at(&pair.e, &primes)?;
    let (ct, t_loc) = tamagawa_at(&pair.e_tilde, &primes)?;
    let mut out = Vec::new();
    for p in &primes {
        let e = e_loc.iter().find(|r| &r.p == p);
        let t = t_loc.iter().find(|r| &r.p == p);
        match (e, t) {
            (Some(e), Some(t)) => out.push(OraclePair {
                e: e.clone(),
                e_tilde: t.clone(),
            }),
            (None, None) => {}
            _ => out.push(OraclePair {
                e: tate_local(&pair.e, p)?,
                e_tilde: tate_local(&pair.e_tilde, p)?,
            }),
        }
    }
    Ok((c, ct, out))
}
