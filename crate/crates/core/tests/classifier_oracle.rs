//! The closed-form table against Tate's algorithm on both curves.

mod common;

use num_bigint::BigInt;
use num_integer::Integer;
use tamagawa::classifier::{classify_local, oracle_local, Rule};
use tamagawa::parametric::{Family, ParamSpec};

use common::oracle::{family_specs, run};

fn check_family(family: Family) {
    let (cov, bad) = run(family_specs(family));
    assert!(bad.is_empty(), "{} mismatches, first: {:#?}", bad.len(), &bad[..bad.len().min(20)]);
    for (rule, n) in cov.iter() {
        println!("{rule}: {n}");
    }
    assert!(cov.missing(family).is_empty(), "{:?}", cov.missing(family));
}

#[test]
fn c5_matches_tate() {
    check_family(Family::C5);
}

#[test]
fn c7_matches_tate() {
    check_family(Family::C7);
}

#[test]
fn c3_matches_tate() {
    check_family(Family::C3);
}

#[test]
fn c30_matches_tate() {
    check_family(Family::C3Zero);
}

#[test]
fn small_primes_never_divide_the_forms() {
    for a in 1..500i64 {
        for b in 1..(500 - a) {
            if a.gcd(&b) != 1 {
                continue;
            }
            let f5 = a * a + 11 * a * b - b * b;
            let f7 = a.pow(3) + 5 * a * a * b - 8 * a * b * b + b.pow(3);
            for p in [2, 3, 5] {
                assert!(f5 % p != 0 || p == 5, "f5({a},{b}) divisible by {p}");
            }
            for p in [2, 3, 5, 11] {
                assert!(f7 % p != 0, "f7({a},{b}) divisible by {p}");
            }
        }
    }
}

#[test]
fn good_rule_means_good_reduction() {
    let spec = ParamSpec::of(Family::C5, 1, 2).unwrap();
    assert_eq!(classify_local(&spec, &BigInt::from(3)).unwrap().rule, Rule::Good);
    let o = oracle_local(&spec, &BigInt::from(3)).unwrap();
    assert_eq!((o.c(), o.c_tilde()), (1, 1));
}
