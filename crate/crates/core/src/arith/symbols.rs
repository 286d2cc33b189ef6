use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::primes::is_prime;
use crate::{Error, Result};

/// Jacobi symbol `(a/n)` for odd positive `n`.
pub fn jacobi(a: &BigInt, n: &BigInt) -> i8 {
    assert!(n.is_positive() && n.is_odd(), "jacobi needs an odd positive modulus");
    let mut a = a.mod_floor(n);
    let mut n = n.clone();
    let mut t = 1i8;
    let three = BigInt::from(3);
    let five = BigInt::from(5);
    let eight = BigInt::from(8);
    let four = BigInt::from(4);
    while !a.is_zero() {
        while a.is_even() {
            a >>= 1;
            let r = n.mod_floor(&eight);
            if r == three || r == five {
                t = -t;
            }
        }
        std::mem::swap(&mut a, &mut n);
        if a.mod_floor(&four) == three && n.mod_floor(&four) == three {
            t = -t;
        }
        a = a.mod_floor(&n);
    }
    if n.is_one() {
        t
    } else {
        0
    }
}

/// Jacobi symbol on machine integers; `n` odd and positive.
pub fn jacobi_i128(a: i128, n: i128) -> i8 {
    assert!(n > 0 && n % 2 == 1, "jacobi needs an odd positive modulus");
    let mut a = a.rem_euclid(n);
    let mut n = n;
    let mut t = 1i8;
    while a != 0 {
        while a % 2 == 0 {
            a /= 2;
            let r = n % 8;
            if r == 3 || r == 5 {
                t = -t;
            }
        }
        std::mem::swap(&mut a, &mut n);
        if a % 4 == 3 && n % 4 == 3 {
            t = -t;
        }
        a %= n;
    }
    if n == 1 {
        t
    } else {
        0
    }
}

/// Legendre symbol `(a/p)`; rejects moduli that are not odd primes.
pub fn legendre(a: &BigInt, p: &BigInt) -> Result<i8> {
    if !p.is_positive() || p.is_even() || !is_prime(p) {
        return Err(Error::InvalidArgument(format!("{p} is not an odd prime")));
    }
    Ok(jacobi(a, p))
}

/// Legendre symbol for a modulus already known to be an odd prime.
pub fn legendre_i128(a: i128, p: i128) -> i8 {
    jacobi_i128(a, p)
}
