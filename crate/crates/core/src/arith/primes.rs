use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use once_cell::sync::Lazy;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

const SIEVE_LIMIT: usize = 1 << 16;

static SMALL_PRIMES: Lazy<Vec<u32>> = Lazy::new(|| {
    let mut composite = vec![false; SIEVE_LIMIT];
    let mut out = Vec::new();
    for i in 2..SIEVE_LIMIT {
        if !composite[i] {
            out.push(i as u32);
            let mut j = i * i;
            while j < SIEVE_LIMIT {
                composite[j] = true;
                j += i;
            }
        }
    }
    out
});

/// All primes below 2^16.
pub fn small_primes() -> &'static [u32] {
    &SMALL_PRIMES
}

#[inline]
pub(crate) fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

pub(crate) fn pow_mod(mut b: u64, mut e: u64, m: u64) -> u64 {
    let mut r = 1u64 % m;
    b %= m;
    while e > 0 {
        if e & 1 == 1 {
            r = mul_mod(r, b, m);
        }
        b = mul_mod(b, b, m);
        e >>= 1;
    }
    r
}

/// Deterministic Miller-Rabin for 64-bit integers.
pub fn is_prime_u64(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for &p in &[2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        if n % p == 0 {
            return n == p;
        }
    }
    let mut d = n - 1;
    let mut s = 0;
    while d % 2 == 0 {
        d /= 2;
        s += 1;
    }
    'bases: for &a in &[2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let mut x = pow_mod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'bases;
            }
        }
        return false;
    }
    true
}

fn strong_probable_prime(n: &BigInt, d: &BigInt, s: u32, a: &BigInt) -> bool {
    let n1 = n - 1u32;
    let mut x = a.modpow(d, n);
    if x.is_one() || x == n1 {
        return true;
    }
    for _ in 1..s {
        x = (&x * &x) % n;
        if x == n1 {
            return true;
        }
    }
    false
}

/// Primality test: exact below 2^64, otherwise 32 strong-probable-prime rounds
/// with bases drawn from a generator seeded by `n` itself (so the answer is
/// reproducible), giving error probability below 2^-64.
pub fn is_prime(n: &BigInt) -> bool {
    if n.is_negative() || n.is_zero() {
        return false;
    }
    if let Some(m) = n.to_u64() {
        return is_prime_u64(m);
    }
    for &p in SMALL_PRIMES.iter().take(200) {
        if (n % p).is_zero() {
            return false;
        }
    }
    let n1: BigInt = n - 1u32;
    let mut d = n1.clone();
    let mut s = 0u32;
    while d.is_even() {
        d >>= 1;
        s += 1;
    }
    if !strong_probable_prime(n, &d, s, &BigInt::from(2)) {
        return false;
    }
    let seed = n.iter_u64_digits().next().unwrap_or(0) ^ 0x9e37_79b9_7f4a_7c15;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let bits = n.bits();
    for _ in 0..32 {
        // a uniform-ish base in [2, n-2]
        let mut a = BigInt::zero();
        let words = bits.div_ceil(64);
        for _ in 0..words {
            a = (a << 64) + BigInt::from(rng.gen::<u64>());
        }
        let a = a.mod_floor(&(n - 3u32)) + 2u32;
        if !strong_probable_prime(n, &d, s, &a) {
            return false;
        }
    }
    true
}
