//! Exact integer arithmetic: valuations, residue symbols, factorization and
//! the small Diophantine helpers the classification relies on.

mod factor;
mod pell;
mod powers;
mod primes;
mod symbols;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

pub use factor::{factorize, factorize_u64, factorize_with, FactorBudget, Factorization};
pub use pell::{pell19_solutions, pell19_brute_force};
pub use powers::{
    cube_decompose, exact_root, is_kth_power_free, is_perfect_power, nth_root_floor,
    CubeDecomposition,
};
pub use primes::{is_prime, is_prime_u64, small_primes};
pub use symbols::{jacobi, jacobi_i128, legendre, legendre_i128};

/// p-adic valuation of an integer; zero has infinite valuation.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Valuation {
    Finite(u32),
    Infinite,
}

impl Valuation {
    pub fn finite(self) -> Option<u32> {
        match self {
            Valuation::Finite(v) => Some(v),
            Valuation::Infinite => None,
        }
    }

    /// True when the valuation is at least `k` (always true for infinity).
    pub fn at_least(self, k: u32) -> bool {
        match self {
            Valuation::Finite(v) => v >= k,
            Valuation::Infinite => true,
        }
    }
}

impl std::fmt::Display for Valuation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Valuation::Finite(v) => write!(f, "{v}"),
            Valuation::Infinite => write!(f, "inf"),
        }
    }
}

/// Largest `k` with `p^k | n`. `p` must be a prime (at least 2).
pub fn valuation(n: &BigInt, p: &BigInt) -> Valuation {
    if n.is_zero() {
        return Valuation::Infinite;
    }
    debug_assert!(*p > BigInt::one());
    if let (Some(n64), Some(p64)) = (n.abs().to_u64(), p.to_u64()) {
        return Valuation::Finite(valuation_u64(n64, p64));
    }
    let mut m = n.abs();
    let mut k = 0;
    loop {
        let (q, r) = m.div_rem(p);
        if !r.is_zero() {
            return Valuation::Finite(k);
        }
        m = q;
        k += 1;
    }
}

/// Finite valuation of a nonzero integer; panics on zero.
pub fn vp(n: &BigInt, p: &BigInt) -> u32 {
    valuation(n, p)
        .finite()
        .expect("valuation of zero requested where a finite value is required")
}

pub fn valuation_u64(mut n: u64, p: u64) -> u32 {
    debug_assert!(n != 0 && p > 1);
    let mut k = 0;
    while n % p == 0 {
        n /= p;
        k += 1;
    }
    k
}

/// Non-negative residue of `n` modulo `m > 0`.
pub fn modp(n: &BigInt, m: &BigInt) -> BigInt {
    n.mod_floor(m)
}
