//! Small computations over the residue field `F_p`.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::arith::jacobi;

pub(crate) fn divides(p: &BigInt, x: &BigInt) -> bool {
    x.mod_floor(p).is_zero()
}

pub(crate) fn inverse(x: &BigInt, p: &BigInt) -> BigInt {
    let e = x.extended_gcd(p);
    debug_assert!(e.gcd.is_one());
    e.x.mod_floor(p)
}

/// Number of distinct roots in `F_p` of `a X^2 + b X + c`, with `p ∤ a`.
pub(crate) fn quadratic_roots(a: &BigInt, b: &BigInt, c: &BigInt, p: &BigInt) -> usize {
    if *p == BigInt::from(2) {
        let at = |x: i32| (a * x * x + b * x + c).mod_floor(p).is_zero();
        return at(0) as usize + at(1) as usize;
    }
    let disc = b * b - 4 * a * c;
    match jacobi(&disc, p) {
        0 => 1,
        1 => 2,
        _ => 0,
    }
}

fn poly_mulmod(x: &[BigInt], y: &[BigInt], f: &[BigInt], p: &BigInt) -> Vec<BigInt> {
    // f is monic of degree 3, given low-to-high; x, y have degree < 3.
    let mut prod = vec![BigInt::zero(); 5];
    for (i, xi) in x.iter().enumerate() {
        for (j, yj) in y.iter().enumerate() {
            prod[i + j] += xi * yj;
        }
    }
    for k in (3..5).rev() {
        let lead = prod[k].mod_floor(p);
        if lead.is_zero() {
            continue;
        }
        for i in 0..3 {
            prod[k - 3 + i] -= &lead * &f[i];
        }
        prod[k] = BigInt::zero();
    }
    prod.truncate(3);
    prod.iter().map(|c| c.mod_floor(p)).collect()
}

fn poly_degree(x: &[BigInt]) -> Option<usize> {
    x.iter().rposition(|c| !c.is_zero())
}

fn poly_rem(mut x: Vec<BigInt>, y: &[BigInt], p: &BigInt) -> Vec<BigInt> {
    let dy = poly_degree(y).expect("nonzero divisor");
    let inv = inverse(&y[dy], p);
    while let Some(dx) = poly_degree(&x) {
        if dx < dy {
            break;
        }
        let coef = (&x[dx] * &inv).mod_floor(p);
        for i in 0..=dy {
            let t = (&x[dx - dy + i] - &coef * &y[i]).mod_floor(p);
            x[dx - dy + i] = t;
        }
    }
    x
}

/// Number of distinct roots in `F_p` of the monic cubic `T^3 + b T^2 + c T + d`.
pub(crate) fn cubic_roots(b: &BigInt, c: &BigInt, d: &BigInt, p: &BigInt) -> usize {
    if *p < BigInt::from(64) {
        let pi: i64 = p.try_into().unwrap();
        return (0..pi)
            .filter(|&t| {
                let t = BigInt::from(t);
                divides(p, &(&t * &t * &t + b * &t * &t + c * &t + d))
            })
            .count();
    }
    // deg gcd(T^p - T, f) counts the distinct roots.
    let f = [d.mod_floor(p), c.mod_floor(p), b.mod_floor(p)];
    let mut result = vec![BigInt::one(), BigInt::zero(), BigInt::zero()];
    let mut base = vec![BigInt::zero(), BigInt::one(), BigInt::zero()];
    let mut e = p.clone();
    while !e.is_zero() {
        if e.is_odd() {
            result = poly_mulmod(&result, &base, &f, p);
        }
        base = poly_mulmod(&base, &base, &f, p);
        e >>= 1;
    }
    result[1] = (&result[1] - 1u32).mod_floor(p);
    let mut a: Vec<BigInt> = vec![f[0].clone(), f[1].clone(), f[2].clone(), BigInt::one()];
    let mut r = result;
    while poly_degree(&r).is_some() {
        let next = poly_rem(a, &r, p);
        a = r;
        r = next;
    }
    poly_degree(&a).unwrap_or(0)
}
