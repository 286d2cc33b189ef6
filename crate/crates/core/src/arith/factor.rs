use std::collections::BTreeMap;
use std::sync::atomic::{AtomicU64, Ordering};

use num_bigint::{BigInt, Sign};
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::primes::{is_prime, is_prime_u64, mul_mod, small_primes};
use crate::{Error, Result};

/// Small primes tried by plain division before switching to Pollard rho.
const TRIAL_PRIMES_BELOW: u32 = 1 << 12;

/// Work limit for the Pollard-rho stage, in iterations of the polynomial map.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct FactorBudget {
    pub rho_iterations: u64,
}

impl Default for FactorBudget {
    fn default() -> Self {
        FactorBudget {
            rho_iterations: 1 << 24,
        }
    }
}

static CURRENT_RHO_ITERATIONS: AtomicU64 = AtomicU64::new(1 << 24);

impl FactorBudget {
    /// The process-wide budget used by [`factorize`].
    pub fn current() -> Self {
        FactorBudget {
            rho_iterations: CURRENT_RHO_ITERATIONS.load(Ordering::Relaxed),
        }
    }

    /// Replaces the process-wide budget used by [`factorize`].
    pub fn set_current(self) {
        CURRENT_RHO_ITERATIONS.store(self.rho_iterations, Ordering::Relaxed);
    }
}

/// Sign and prime-power decomposition of a nonzero integer.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Factorization {
    sign: i8,
    factors: Vec<(BigInt, u32)>,
}

impl Factorization {
    pub fn one() -> Self {
        Factorization {
            sign: 1,
            factors: Vec::new(),
        }
    }

    /// Builds from prime-power pairs; merges repeated primes and sorts.
    pub fn from_parts(sign: i8, parts: impl IntoIterator<Item = (BigInt, u32)>) -> Self {
        let mut map: BTreeMap<BigInt, u32> = BTreeMap::new();
        for (p, e) in parts {
            if e > 0 {
                *map.entry(p).or_insert(0) += e;
            }
        }
        Factorization {
            sign: if sign < 0 { -1 } else { 1 },
            factors: map.into_iter().collect(),
        }
    }

    pub fn sign(&self) -> i8 {
        self.sign
    }

    pub fn factors(&self) -> &[(BigInt, u32)] {
        &self.factors
    }

    pub fn primes(&self) -> impl Iterator<Item = &BigInt> {
        self.factors.iter().map(|(p, _)| p)
    }

    pub fn exponent_of(&self, p: &BigInt) -> u32 {
        self.factors
            .binary_search_by(|(q, _)| q.cmp(p))
            .map(|i| self.factors[i].1)
            .unwrap_or(0)
    }

    pub fn reconstruct(&self) -> BigInt {
        let mut n = BigInt::from(self.sign);
        for (p, e) in &self.factors {
            n *= p.pow(*e);
        }
        n
    }

    /// Factorization of the product of `self` and `other`.
    pub fn mul(&self, other: &Factorization) -> Factorization {
        Factorization::from_parts(
            self.sign * other.sign,
            self.factors.iter().chain(other.factors.iter()).cloned(),
        )
    }

    /// Factorization of `self^k`.
    pub fn pow(&self, k: u32) -> Factorization {
        Factorization {
            sign: if k % 2 == 0 { 1 } else { self.sign },
            factors: self.factors.iter().map(|(p, e)| (p.clone(), e * k)).collect(),
        }
    }
}

/// Factors a nonzero integer with the process-wide budget.
pub fn factorize(n: &BigInt) -> Result<Factorization> {
    factorize_with(n, &FactorBudget::current())
}

/// Trial division by the primes below 2^12, then Pollard rho with Brent's
/// cycle detection on each composite cofactor. Cofactors that fit in 64 bits
/// are handled with machine arithmetic.
pub fn factorize_with(n: &BigInt, budget: &FactorBudget) -> Result<Factorization> {
    if n.is_zero() {
        return Err(Error::InvalidArgument("cannot factor zero".into()));
    }
    let sign = if n.sign() == Sign::Minus { -1 } else { 1 };
    let m = n.abs();
    if let Some(m64) = m.to_u64() {
        let parts = factorize_u64(m64, budget)?;
        return Ok(Factorization::from_parts(
            sign,
            parts.into_iter().map(|(p, e)| (BigInt::from(p), e)),
        ));
    }
    let mut parts: Vec<(BigInt, u32)> = Vec::new();
    let mut rest = m;
    for &p in small_primes() {
        if p >= TRIAL_PRIMES_BELOW {
            break;
        }
        let pb = BigInt::from(p);
        let mut e = 0;
        loop {
            let (q, r) = rest.div_rem(&pb);
            if !r.is_zero() {
                break;
            }
            rest = q;
            e += 1;
        }
        if e > 0 {
            parts.push((pb, e));
        }
    }
    let mut remaining = budget.rho_iterations;
    let mut stack = vec![rest];
    while let Some(x) = stack.pop() {
        if x.is_one() {
            continue;
        }
        if let Some(x64) = x.to_u64() {
            let sub = factorize_u64(x64, budget)?;
            parts.extend(sub.into_iter().map(|(p, e)| (BigInt::from(p), e)));
            continue;
        }
        if is_prime(&x) {
            parts.push((x, 1));
            continue;
        }
        if let Some((root, k)) = super::powers::is_perfect_power(&x) {
            for _ in 0..k {
                stack.push(root.clone());
            }
            continue;
        }
        let d = rho_big(&x, &mut remaining).ok_or_else(|| Error::FactorizationIncomplete {
            cofactor: x.to_string(),
        })?;
        let other = &x / &d;
        stack.push(d);
        stack.push(other);
    }
    Ok(Factorization::from_parts(sign, parts))
}

/// Factorization of a positive 64-bit integer as sorted (prime, exponent) pairs.
pub fn factorize_u64(n: u64, budget: &FactorBudget) -> Result<Vec<(u64, u32)>> {
    assert!(n > 0, "factorize_u64 of zero");
    let mut parts: Vec<(u64, u32)> = Vec::new();
    let mut rest = n;
    for &p in small_primes() {
        if p >= TRIAL_PRIMES_BELOW {
            break;
        }
        let p = p as u64;
        if p * p > rest {
            break;
        }
        if rest % p == 0 {
            let mut e = 0;
            while rest % p == 0 {
                rest /= p;
                e += 1;
            }
            parts.push((p, e));
        }
    }
    let mut remaining = budget.rho_iterations;
    let mut stack = vec![rest];
    while let Some(x) = stack.pop() {
        if x == 1 {
            continue;
        }
        if x < (TRIAL_PRIMES_BELOW as u64).pow(2) || is_prime_u64(x) {
            parts.push((x, 1));
            continue;
        }
        let d = rho_u64(x, &mut remaining).ok_or_else(|| Error::FactorizationIncomplete {
            cofactor: x.to_string(),
        })?;
        stack.push(d);
        stack.push(x / d);
    }
    let mut map: BTreeMap<u64, u32> = BTreeMap::new();
    for (p, e) in parts {
        *map.entry(p).or_insert(0) += e;
    }
    Ok(map.into_iter().collect())
}

fn gcd_u64(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

/// A nontrivial divisor of the odd composite `n`, or `None` when the budget runs out.
fn rho_u64(n: u64, budget: &mut u64) -> Option<u64> {
    if n % 2 == 0 {
        return Some(2);
    }
    for c in 1..u64::MAX {
        let f = |x: u64| (mul_mod(x, x, n) + c) % n;
        let (mut y, mut r, mut q) = (2u64, 1u64, 1u64);
        let mut x = y;
        let mut ys = y;
        let mut g = 1u64;
        const M: u64 = 128;
        while g == 1 {
            x = y;
            for _ in 0..r {
                y = f(y);
            }
            let mut k = 0;
            while k < r && g == 1 {
                ys = y;
                let steps = M.min(r - k);
                for _ in 0..steps {
                    y = f(y);
                    q = mul_mod(q, x.abs_diff(y), n);
                }
                if *budget < steps {
                    return None;
                }
                *budget -= steps;
                g = gcd_u64(q, n);
                k += M;
            }
            r *= 2;
        }
        if g == n {
            loop {
                ys = f(ys);
                g = gcd_u64(x.abs_diff(ys), n);
                if g > 1 {
                    break;
                }
            }
        }
        if g != n {
            return Some(g);
        }
    }
    None
}

fn rho_big(n: &BigInt, budget: &mut u64) -> Option<BigInt> {
    if n.is_even() {
        return Some(BigInt::from(2));
    }
    for c in 1u32..1000 {
        let c = BigInt::from(c);
        let f = |x: &BigInt| (x * x + &c) % n;
        let mut y = BigInt::from(2);
        let mut x = y.clone();
        let mut ys = y.clone();
        let mut q = BigInt::one();
        let mut g = BigInt::one();
        let mut r: u64 = 1;
        const M: u64 = 128;
        while g.is_one() {
            x = y.clone();
            for _ in 0..r {
                y = f(&y);
            }
            let mut k = 0;
            while k < r && g.is_one() {
                ys = y.clone();
                let steps = M.min(r - k);
                for _ in 0..steps {
                    y = f(&y);
                    q = (q * (&x - &y).abs()) % n;
                }
                if *budget < steps {
                    return None;
                }
                *budget -= steps;
                g = q.gcd(n);
                k += M;
            }
            r *= 2;
        }
        if &g == n {
            loop {
                ys = f(&ys);
                g = (&x - &ys).abs().gcd(n);
                if !g.is_one() {
                    break;
                }
            }
        }
        if &g != n {
            return Some(g);
        }
    }
    None
}
