//! Integer points on the conic `a^2 + 11ab - b^2 = 19`.
//!
//! The form has discriminant 125. The smallest solution of `t^2 - 125 u^2 = 4`
//! with `u > 0` is `(123, 11)`, which yields the proper automorphism
//! `(a, b) -> (a + 11 b, 11 a + 122 b)`. Every orbit of solutions has a member
//! of small height, so seeding from a modest box and walking each orbit in both
//! directions produces every solution up to any bound.

use std::collections::BTreeSet;

use num_integer::{Integer, Roots};

const SEED_BOX: i64 = 2000;

fn form(a: i128, b: i128) -> i128 {
    a * a + 11 * a * b - b * b
}

fn forward(a: i128, b: i128) -> (i128, i128) {
    (a + 11 * b, 11 * a + 122 * b)
}

fn backward(a: i128, b: i128) -> (i128, i128) {
    (122 * a - 11 * b, -11 * a + b)
}

/// Solutions with `|a| <= r`, found by solving the quadratic in `b` for each `a`.
fn seeds(r: i64) -> Vec<(i64, i64)> {
    let mut out = Vec::new();
    for a in -r..=r {
        let disc = 125 * (a as i128) * (a as i128) - 76;
        if disc < 0 {
            continue;
        }
        let s = disc.sqrt();
        if s * s != disc {
            continue;
        }
        for num in [11 * a as i128 + s, 11 * a as i128 - s] {
            if num.is_even() {
                out.push((a, (num / 2) as i64));
            }
        }
    }
    out
}

/// All integer solutions with `max(|a|, |b|) <= bound`, sorted.
pub fn pell19_solutions(bound: u64) -> Vec<(i64, i64)> {
    let bound = bound as i128;
    let inside = |a: i128, b: i128| a.abs() <= bound && b.abs() <= bound;
    let size = |a: i128, b: i128| a.abs().max(b.abs());
    let mut found = BTreeSet::new();
    for (a0, b0) in seeds(SEED_BOX) {
        for step in [forward, backward] {
            let (mut a, mut b) = (a0 as i128, b0 as i128);
            let mut prev = size(a, b);
            loop {
                if inside(a, b) {
                    debug_assert_eq!(form(a, b), 19);
                    found.insert((a as i64, b as i64));
                }
                let (na, nb) = step(a, b);
                let s = size(na, nb);
                // The orbit grows geometrically once it leaves the seed region.
                if s > bound && s > prev && prev > bound {
                    break;
                }
                if s > 1i128 << 100 {
                    break;
                }
                prev = s;
                a = na;
                b = nb;
            }
        }
    }
    found
        .into_iter()
        .filter(|&(a, b)| form(a as i128, b as i128) == 19 && a.gcd(&b) == 1)
        .collect()
}

/// Reference enumeration by a direct double loop over the box.
pub fn pell19_brute_force(bound: u64) -> Vec<(i64, i64)> {
    let r = bound as i64;
    let mut out = Vec::new();
    for a in -r..=r {
        for b in -r..=r {
            if form(a as i128, b as i128) == 19 {
                out.push((a, b));
            }
        }
    }
    out
}
