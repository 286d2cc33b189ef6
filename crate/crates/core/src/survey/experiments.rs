use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_integer::Integer;

use crate::arith::{factorize, is_prime_u64, small_primes, valuation_u64};
use crate::classifier::{classify_global, classify_global_with_primes};
use crate::exec::Exec;
use crate::parametric::{build_pair, Family, ParamSpec};
use crate::tate::tamagawa_at;
use crate::Result;

/// Number of `t` in `1..=x` for which the quotient of
/// `y^2 + (1-t)xy - ty = x^3 - tx^2` by its 5-torsion point has global
/// Tamagawa number divisible by 5. That curve is `E_C5(1, t)`.
pub fn intro_count(x: u64, exec: Exec) -> Result<u64> {
    let ts: Vec<u64> = (1..=x).collect();
    let hits = exec.map(ts, |t| -> Result<bool> {
        let spec = ParamSpec::new(Family::C5, 1, t)?;
        Ok(classify_global(&spec)?.c_tilde % 5 == 0)
    });
    let mut n = 0;
    for h in hits {
        n += h? as u64;
    }
    Ok(n)
}

fn coprime_box(lo: u64, hi: u64) -> Vec<(u64, u64)> {
    let mut v = Vec::new();
    for a in lo..=hi {
        for b in lo..=hi {
            if a.gcd(&b) == 1 {
                v.push((a, b));
            }
        }
    }
    v
}

/// The three factors of `f_5(s^5, t^5)`.
fn fifth_power_factors(s: &BigInt, t: &BigInt) -> [BigInt; 3] {
    let d1: BigInt = s * s + s * t - t * t;
    let d2: BigInt = s.pow(4) - 3 * s.pow(3) * t + 4 * s * s * t * t - 2 * s * t.pow(3) + t.pow(4);
    let d3: BigInt = s.pow(4) + 2 * s.pow(3) * t + 4 * s * s * t * t + 3 * s * t.pow(3) + t.pow(4);
    [d1, d2, d3]
}

fn fifth_power_primes(s: u64, t: u64) -> Result<(ParamSpec, Vec<BigInt>)> {
    let (sb, tb) = (BigInt::from(s), BigInt::from(t));
    let spec = ParamSpec::new(Family::C5, sb.pow(5), tb.pow(5))?;
    let mut primes = BTreeSet::new();
    primes.insert(BigInt::from(5));
    let [d1, d2, d3] = fifth_power_factors(&sb, &tb);
    for n in [sb, tb, d1, d2, d3] {
        if n != BigInt::from(1) && n != BigInt::from(-1) {
            primes.extend(factorize(&n)?.primes().cloned());
        }
    }
    Ok((spec, primes.into_iter().collect()))
}

fn not_divisible_by_5_5(locals: impl Iterator<Item = u64>) -> bool {
    locals.map(|c| valuation_u64(c, 5)).sum::<u32>() < 5
}

/// Over coprime `(s, t)` in `[2, range_max]^2`, the number of pairs where
/// `5^5` does not divide `c(Ẽ_C5(s^5, t^5))`, and the number where it does
/// not divide `c(E_C5(s^5, t^5))`.
pub fn fifth_power_experiment(range_max: u64, exec: Exec) -> Result<(u64, u64)> {
    let results = exec.map(coprime_box(2, range_max), |(s, t)| -> Result<(bool, bool)> {
        let (spec, primes) = fifth_power_primes(s, t)?;
        let g = classify_global_with_primes(&spec, &primes)?;
        Ok((
            not_divisible_by_5_5(g.local.iter().map(|l| l.c_tilde as u64)),
            not_divisible_by_5_5(g.local.iter().map(|l| l.c as u64)),
        ))
    });
    tally(results)
}

/// [`fifth_power_experiment`] with Tate's algorithm run on both curves in
/// place of the closed-form table.
pub fn fifth_power_experiment_oracle(range_max: u64, exec: Exec) -> Result<(u64, u64)> {
    let results = exec.map(coprime_box(2, range_max), |(s, t)| -> Result<(bool, bool)> {
        let (spec, primes) = fifth_power_primes(s, t)?;
        let pair = build_pair(&spec)?;
        let (_, e) = tamagawa_at(&pair.e, &primes)?;
        let (_, et) = tamagawa_at(&pair.e_tilde, &primes)?;
        Ok((
            not_divisible_by_5_5(et.iter().map(|r| r.c_p as u64)),
            not_divisible_by_5_5(e.iter().map(|r| r.c_p as u64)),
        ))
    });
    tally(results)
}

fn tally(results: Vec<Result<(bool, bool)>>) -> Result<(u64, u64)> {
    let (mut x, mut y) = (0, 0);
    for r in results {
        let (a, b) = r?;
        x += a as u64;
        y += b as u64;
    }
    Ok((x, y))
}

fn seventh_power_free(n: u64) -> bool {
    for &p in small_primes() {
        let p7 = (p as u64).checked_pow(7);
        match p7 {
            Some(q) if q <= n => {
                if n % q == 0 {
                    return false;
                }
            }
            _ => break,
        }
    }
    true
}

/// Number of distinct primes `q = f_7(a,b)` with `q ≡ -1 (mod 7)`, over
/// coprime `(a, b)` in `[1, range_max]^2` with `ab(a-b)` seventh-power free.
pub fn x7_prime_count(range_max: u64, exec: Exec) -> u64 {
    let rows: Vec<u64> = (1..=range_max).collect();
    let found = exec.map(rows, |a| {
        let mut qs = Vec::new();
        for b in 1..=range_max {
            if a == b || a.gcd(&b) != 1 {
                continue;
            }
            let (ai, bi) = (a as i128, b as i128);
            let f = ai * ai * ai + 5 * ai * ai * bi - 8 * ai * bi * bi + bi * bi * bi;
            if f <= 0 || f % 7 != 6 || f > u64::MAX as i128 {
                continue;
            }
            let f = f as u64;
            // a, b and a - b are pairwise coprime, so a seventh power dividing
            // their product divides one of them.
            if !(seventh_power_free(a) && seventh_power_free(b) && seventh_power_free(a.abs_diff(b))) {
                continue;
            }
            if is_prime_u64(f) {
                qs.push(f);
            }
        }
        qs
    });
    let distinct: BTreeSet<u64> = found.into_iter().flatten().collect();
    distinct.len() as u64
}
