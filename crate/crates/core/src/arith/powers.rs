use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::factor::factorize;
use crate::Result;

/// `a = c^3 d^2 e` with `d e` squarefree.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CubeDecomposition {
    pub c: BigInt,
    pub d: BigInt,
    pub e: BigInt,
}

/// `floor(n^(1/k))` for `n >= 0`, by exact integer root extraction.
pub fn nth_root_floor(n: &BigInt, k: u32) -> BigInt {
    assert!(!n.is_negative() && k >= 1);
    n.nth_root(k)
}

/// The integer `r` with `r^k = n`, if any. Odd `k` accepts negative `n`.
pub fn exact_root(n: &BigInt, k: u32) -> Option<BigInt> {
    if n.is_negative() {
        if k % 2 == 0 {
            return None;
        }
        return exact_root(&-n, k).map(|r| -r);
    }
    let r = nth_root_floor(n, k);
    if r.pow(k) == *n {
        Some(r)
    } else {
        None
    }
}

/// If `|n| = r^k` with `k >= 2` maximal and `r > 1`, returns `(r, k)`.
pub fn is_perfect_power(n: &BigInt) -> Option<(BigInt, u32)> {
    let m = n.abs();
    if m <= BigInt::one() {
        return None;
    }
    let bits = m.bits() as u32;
    let mut best = None;
    for k in 2..=bits {
        if let Some(r) = exact_root(&m, k) {
            best = Some((r, k));
        }
    }
    best
}

/// True iff no prime appears in `n` with exponent `k` or more.
pub fn is_kth_power_free(n: &BigInt, k: u32) -> Result<bool> {
    assert!(k >= 2);
    if n.is_zero() {
        return Ok(false);
    }
    Ok(factorize(n)?.factors().iter().all(|(_, e)| *e < k))
}

/// Splits each prime exponent `3q + r` of `a` as `q` to `c` and the
/// remainder to `d` (r = 2) or `e` (r = 1).
pub fn cube_decompose(a: &BigInt) -> Result<CubeDecomposition> {
    assert!(a.is_positive(), "cube_decompose expects a positive integer");
    let mut c = BigInt::one();
    let mut d = BigInt::one();
    let mut e = BigInt::one();
    for (p, k) in factorize(a)?.factors() {
        c *= p.pow(k / 3);
        match k % 3 {
            2 => d *= p,
            1 => e *= p,
            _ => {}
        }
    }
    Ok(CubeDecomposition { c, d, e })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn b(n: i64) -> BigInt {
        BigInt::from(n)
    }

    fn dec(n: i64) -> (i64, i64, i64) {
        let x = cube_decompose(&b(n)).unwrap();
        (
            x.c.try_into().unwrap(),
            x.d.try_into().unwrap(),
            x.e.try_into().unwrap(),
        )
    }

    #[test]
    fn cube_examples() {
        assert_eq!(dec(24), (2, 1, 3));
        assert_eq!(dec(72), (2, 3, 1));
        assert_eq!(dec(1), (1, 1, 1));
    }

    #[test]
    fn power_free_examples() {
        assert!(!is_kth_power_free(&b(32), 5).unwrap());
        assert!(is_kth_power_free(&b(19), 5).unwrap());
        assert!(!is_kth_power_free(&b(972), 3).unwrap());
        assert!(is_kth_power_free(&b(-1), 2).unwrap());
    }

    #[test]
    fn roots() {
        assert_eq!(exact_root(&b(-27), 3), Some(b(-3)));
        assert_eq!(exact_root(&b(-4), 2), None);
        assert_eq!(exact_root(&b(1 << 40), 5), Some(b(256)));
        assert_eq!(exact_root(&b((1 << 40) + 1), 5), None);
        assert_eq!(is_perfect_power(&b(-243)), Some((b(3), 5)));
        assert_eq!(is_perfect_power(&b(64)), Some((b(2), 6)));
        assert_eq!(is_perfect_power(&b(12)), None);
        let big: BigInt = BigInt::from(10).pow(40u32) + 7;
        assert_eq!(nth_root_floor(&(big.pow(3u32) + 5), 3), big);
    }

    fn squarefree(mut n: u64) -> bool {
        let mut p = 2;
        while p * p <= n {
            if n % (p * p) == 0 {
                return false;
            }
            if n % p == 0 {
                n /= p;
            }
            p += 1;
        }
        true
    }

    #[test]
    fn cube_decompose_exhaustive() {
        for n in 1..=1_000_000i64 {
            let (c, d, e) = dec(n);
            assert_eq!(c * c * c * d * d * e, n);
            assert!(squarefree((d * e) as u64), "n={n}");
        }
    }

    #[test]
    fn power_free_matches_divisor_loop() {
        for k in [2u32, 3, 5, 7] {
            for n in 1..=100_000u64 {
                let mut direct = true;
                let mut m = 2u64;
                while m.pow(k) <= n {
                    if n % m.pow(k) == 0 {
                        direct = false;
                        break;
                    }
                    m += 1;
                }
                assert_eq!(is_kth_power_free(&BigInt::from(n), k).unwrap(), direct, "n={n} k={k}");
            }
        }
    }
}
