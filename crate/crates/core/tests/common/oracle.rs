//! Comparison of the closed-form table with Tate's algorithm on both curves.

use std::collections::BTreeSet;

use num_bigint::BigInt;
use tamagawa::arith::{factorize, is_kth_power_free};
use tamagawa::exec::Exec;
use tamagawa::classifier::{candidate_primes, classify_local, oracle_local, Coverage};
use tamagawa::parametric::{build_pair, Family, ParamSpec};

pub fn primes_to_check(spec: &ParamSpec) -> Vec<BigInt> {
    let pair = build_pair(spec).unwrap();
    let disc = pair.e.discriminant().to_integer();
    let mut set: BTreeSet<BigInt> = factorize(&disc).unwrap().primes().cloned().collect();
    set.extend(candidate_primes(spec).unwrap());
    set.into_iter().collect()
}

/// Compares at every relevant prime; returns coverage and mismatch descriptions.
pub fn compare(spec: &ParamSpec) -> (Coverage, Vec<String>) {
    let mut cov = Coverage::new();
    let mut bad = Vec::new();
    for p in primes_to_check(spec) {
        let table = match classify_local(spec, &p) {
            Ok(t) => t,
            Err(e) => {
                bad.push(format!("{spec} at {p}: {e}"));
                continue;
            }
        };
        let oracle = oracle_local(spec, &p).unwrap();
        cov.record(table.rule);
        if (table.c, table.c_tilde) != (oracle.c(), oracle.c_tilde()) {
            bad.push(format!(
                "{spec} at {p}: table {:?} ({}, {}) vs Tate ({}, {}) [{} / {}]",
                table.rule,
                table.c,
                table.c_tilde,
                oracle.c(),
                oracle.c_tilde(),
                oracle.e.kodaira,
                oracle.e_tilde.kodaira
            ));
        }
    }
    (cov, bad)
}

/// Coverage and mismatches over a list of specs.
pub fn run(specs: Vec<ParamSpec>) -> (Coverage, Vec<String>) {
    let results: Vec<(Coverage, Vec<String>)> = Exec::Parallel.map(specs, |s| compare(&s));
    let mut cov = Coverage::new();
    let mut bad = Vec::new();
    for (c, b) in results {
        cov.merge(&c);
        bad.extend(b);
    }
    (cov, bad)
}

/// The full comparison range for one family: both signs of `b` for the
/// two-parameter families with `a + |b| <= 200` (plus targeted `p = 3` cases
/// for `C3`), and cube-free `a <= 500` for `C3^0`.
pub fn family_specs(family: Family) -> Vec<ParamSpec> {
    match family {
        Family::C3Zero => (1..=500i64)
            .filter(|a| is_kth_power_free(&BigInt::from(*a), 3).unwrap())
            .map(|a| ParamSpec::of(Family::C3Zero, a, 0).unwrap())
            .collect(),
        Family::C3 => {
            let mut specs = two_parameter(Family::C3, 200);
            specs.extend(c3_targeted());
            specs
        }
        f => two_parameter(f, 200),
    }
}

pub fn two_parameter(family: Family, max_sum: i64) -> Vec<ParamSpec> {
    let mut out = Vec::new();
    for a in 1..max_sum {
        for b in -(max_sum - a)..=(max_sum - a) {
            if let Ok(s) = ParamSpec::of(family, a, b) {
                out.push(s);
            }
        }
    }
    out
}

/// Extra parameters aimed at the rarer rows at `p = 3`.
pub fn c3_targeted() -> Vec<ParamSpec> {
    let mut out = Vec::new();
    let three = |k: u32| 3i64.pow(k);
    for b in -40i64..=40 {
        // v3(a - 27b) = k for k in 4..=10.
        for k in 4..=10u32 {
            for m in [1i64, 2, 4, 5, -1, -2, -4, -5, 7, -7] {
                let a = 27 * b + three(k) * m;
                if a > 0 {
                    out.extend(ParamSpec::of(Family::C3, a, b));
                }
            }
        }
        // v3(a) = j for j in 0..=10.
        for j in 0..=10u32 {
            for u in [1i64, 2, 4, 5, 7, 8, 10, 11, 13, 14] {
                out.extend(ParamSpec::of(Family::C3, three(j) * u, b));
            }
        }
        // v3(a) = 6 or 9 with a unit cofactor that is not a cube.
        for u in [2i64, 4, 10, 20, 25, 50] {
            out.extend(ParamSpec::of(Family::C3, three(6) * u, b));
            out.extend(ParamSpec::of(Family::C3, three(9) * u, b));
        }
    }
    out.sort_by(|x, y| (&x.a, &x.b).cmp(&(&y.a, &y.b)));
    out.dedup();
    out
}

