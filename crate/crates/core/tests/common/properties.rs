//! Structural identities of the families, checked exhaustively on boxes.
//! Each check panics on the first violation.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use tamagawa::arith::{exact_root, factorize, is_prime, legendre, pell19_solutions};
use tamagawa::classifier::{classify_global, coprime_to_ell, family_forms, lemma65_check};
use tamagawa::curve::WeierstrassModel;
use tamagawa::exec::Exec;
use tamagawa::parametric::{
    build_pair, e_tilde_closed_form, tilde_c30_torsion, tilde_c3_torsion, torsion_point_order,
    Family, ParamSpec, Point,
};
use tamagawa::tate::tate_local;

fn big(n: i64) -> BigInt {
    BigInt::from(n)
}

fn coprime_pairs(max_sum: i64) -> Vec<(i64, i64)> {
    let mut v = Vec::new();
    for a in 1..max_sum {
        for b in 1..=(max_sum - a) {
            if a.gcd(&b) == 1 {
                v.push((a, b));
            }
        }
    }
    v
}

pub fn discriminants_factor_through_the_forms() {
    for (family, ell) in [(Family::C5, 5u32), (Family::C7, 7)] {
        for (a, b) in coprime_pairs(300) {
            let Ok(spec) = ParamSpec::of(family, a, b) else {
                continue;
            };
            let pair = build_pair(&spec).unwrap();
            let forms = family_forms(ell, &big(a), &big(b)).unwrap();
            // Both identities hold with an overall minus sign.
            assert_eq!(pair.e.discriminant().to_integer(), -forms.n.pow(ell) * &forms.f, "{spec}");
            assert_eq!(pair.e_tilde.discriminant().to_integer(), -&forms.n * forms.f.pow(ell), "{spec}");
        }
    }
}

pub fn fifth_power_discriminants() {
    for s in 1..=30i64 {
        for t in 1..=30i64 {
            if s.gcd(&t) != 1 {
                continue;
            }
            let (s, t) = (big(s), big(t));
            let Ok(spec) = ParamSpec::new(Family::C5, s.pow(5), t.pow(5)) else {
                continue;
            };
            let d1: BigInt = &s * &s + &s * &t - &t * &t;
            let d2: BigInt = s.pow(4) - 3 * s.pow(3) * &t + 4 * s.pow(2) * t.pow(2) - 2 * &s * t.pow(3) + t.pow(4);
            let d3: BigInt = s.pow(4) + 2 * s.pow(3) * &t + 4 * s.pow(2) * t.pow(2) + 3 * &s * t.pow(3) + t.pow(4);
            let d = &d1 * &d2 * &d3;
            let pair = build_pair(&spec).unwrap();
            assert_eq!(pair.e.discriminant().to_integer(), -s.pow(25) * t.pow(25) * &d);
            assert_eq!(pair.e_tilde.discriminant().to_integer(), -s.pow(5) * t.pow(5) * d.pow(5));
        }
    }
}

pub fn marked_point_has_order_ell() {
    let origin = Point::from_ints(0, 0);
    for family in [Family::C3, Family::C5, Family::C7] {
        for (a, b) in coprime_pairs(40) {
            for b in [b, -b] {
                if let Ok(spec) = ParamSpec::of(family, a, b) {
                    let e = build_pair(&spec).unwrap().e;
                    assert_eq!(torsion_point_order(&e, &origin).unwrap(), Some(spec.ell()), "{spec}");
                }
            }
        }
    }
    for a in 1..=60 {
        if let Ok(spec) = ParamSpec::of(Family::C3Zero, a, 0) {
            let e = build_pair(&spec).unwrap().e;
            assert_eq!(torsion_point_order(&e, &origin).unwrap(), Some(3));
        }
    }
}

/// Rational points of order 3 on an integral model, found by searching the
/// integer roots of the monic quartic `27 psi_3(X/3)` among the divisors of
/// its constant term and testing the `y`-discriminant for squareness.
fn has_rational_three_torsion(m: &WeierstrassModel) -> bool {
    let (b2, b4, b6, b8, ..) = m.raw_invariants();
    let [b2, b4, b6, b8] = [b2, b4, b6, b8].map(|x| x.to_integer());
    // Coefficients of X^4 + b2 X^3 + 9 b4 X^2 + 27 b6 X + 27 b8, highest first.
    let mut coeffs: Vec<BigInt> = vec![BigInt::one(), b2.clone(), 9 * &b4, 27 * &b6, 27 * &b8];
    let eval = |c: &[BigInt], x: &BigInt| c.iter().fold(BigInt::zero(), |acc, k| acc * x + k);
    let mut roots = Vec::new();
    while coeffs.last().is_some_and(|c| c.is_zero()) {
        coeffs.pop();
        roots.push(BigInt::zero());
    }
    let constant = coeffs.last().unwrap().clone();
    let mut divs = vec![BigInt::one()];
    if !constant.abs().is_one() {
        for (p, e) in factorize(&constant).unwrap().factors() {
            let mut next = Vec::new();
            for d in &divs {
                let mut pk = BigInt::one();
                for _ in 0..=*e {
                    next.push(d * &pk);
                    pk *= p;
                }
            }
            divs = next;
        }
    }
    roots.extend(divs.into_iter().flat_map(|d| [d.clone(), -d]).filter(|x| eval(&coeffs, x).is_zero()));
    let ysq = |x: &BigInt| -> BigInt { 3 * (4 * x.pow(3) + 3 * &b2 * x * x + 18 * &b4 * x + 27 * &b6) };
    let is_square = |n: &BigInt| !n.is_negative() && exact_root(n, 2).is_some();
    roots.iter().any(|x| is_square(&ysq(x)))
}

pub fn quotient_three_torsion_exactly_on_cube_pairs() {
    let pairs: Vec<(i64, i64)> = (1..=200i64)
        .flat_map(|a| (1..=200i64).map(move |b| (a, b)))
        .filter(|(a, b)| a.gcd(b) == 1 && *a != 27 * *b)
        .collect();
    let bad: Vec<String> = Exec::Parallel
        .map(pairs, |(a, b)| {
            let spec = ParamSpec::of(Family::C3, a, b).unwrap();
            let formula = tilde_c3_torsion(&big(a), &big(b)).unwrap();
            let brute = has_rational_three_torsion(&e_tilde_closed_form(&spec));
            if let Some((x, y)) = &formula {
                let m = e_tilde_closed_form(&spec);
                let p = Point::from_ints(x.clone(), y.clone());
                if torsion_point_order(&m, &p).unwrap() != Some(3) {
                    return Some(format!("({a},{b}): formula point not of order 3"));
                }
            }
            (formula.is_some() != brute).then(|| format!("({a},{b}): formula {formula:?}, brute {brute}"))
        })
        .into_iter()
        .flatten()
        .collect();
    assert!(bad.is_empty(), "{bad:?}");
    let m = e_tilde_closed_form(&ParamSpec::of(Family::C3, 2, 1).unwrap());
    assert!(!has_rational_three_torsion(&m));
}

pub fn one_parameter_quotient_torsion() {
    for a in 1..=200i64 {
        let Ok(spec) = ParamSpec::of(Family::C3Zero, a, 0) else {
            continue;
        };
        let brute = has_rational_three_torsion(&e_tilde_closed_form(&spec));
        let formula = tilde_c30_torsion(&big(a)).unwrap();
        assert_eq!(brute, formula.is_some(), "a = {a}");
        if let Some((x, y)) = formula {
            let m = e_tilde_closed_form(&spec);
            assert_eq!(torsion_point_order(&m, &Point::from_ints(x, y)).unwrap(), Some(3));
        }
    }
}

pub fn primes_dividing_the_cubic_norm_forms_split() {
    for c in 1..=10_000i64 {
        for n in [c * c + 3 * c + 9, c * c - 3 * c + 9] {
            for p in factorize(&big(n)).unwrap().primes() {
                if *p != big(3) {
                    assert!(p.mod_floor(&big(6)).is_one(), "c = {c}: {p} | {n}");
                }
            }
        }
    }
}

pub fn pell_solutions_are_nonsplit_at_19() {
    let sols = pell19_solutions(10_000);
    assert!(sols.contains(&(1, 2)));
    for (a, b) in sols {
        assert_eq!(a.gcd(&b), 1);
        let g = -5 * (big(a) * big(a) + big(b) * big(b));
        assert_eq!(legendre(&g, &big(19)).unwrap(), -1, "({a},{b})");
    }
}

pub fn seven_form_primes_obey_the_residue_rule() {
    let mut saw_plus = false;
    let mut saw_minus = false;
    for a in 1..=100i64 {
        for b in 1..=100i64 {
            if a.gcd(&b) != 1 {
                continue;
            }
            let f = family_forms(7, &big(a), &big(b)).unwrap().f;
            if !is_prime(&f.abs()) {
                continue;
            }
            assert!(lemma65_check(&big(a), &big(b)).unwrap(), "({a},{b}) f7 = {f}");
            match f.abs().mod_floor(&big(7)) {
                r if r.is_one() => saw_plus = true,
                r if r == big(6) => saw_minus = true,
                _ => {}
            }
        }
    }
    assert!(saw_plus && saw_minus);
    assert!(lemma65_check(&big(1), &big(3)).is_err() || is_prime(&family_forms(7, &big(1), &big(3)).unwrap().f.abs()));
}

pub fn coprimality_criterion_agrees_with_the_table() {
    for family in [Family::C5, Family::C7] {
        let ell = family.ell() as u64;
        for (a, b) in coprime_pairs(200) {
            for b in [b, -b] {
                let Ok(spec) = ParamSpec::of(family, a, b) else {
                    continue;
                };
                let c_tilde = classify_global(&spec).unwrap().c_tilde;
                assert_eq!(coprime_to_ell(&spec).unwrap(), c_tilde % ell != 0, "{spec}");
            }
        }
    }
}

pub fn conductor_exponents_agree_across_the_isogeny() {
    for family in [Family::C3, Family::C5, Family::C7] {
        for (a, b) in coprime_pairs(40) {
            let Ok(spec) = ParamSpec::of(family, a, b) else {
                continue;
            };
            let pair = build_pair(&spec).unwrap();
            let disc = pair.e.discriminant().to_integer();
            for p in factorize(&disc).unwrap().primes() {
                let f = tate_local(&pair.e, p).unwrap().f_p;
                let ft = tate_local(&pair.e_tilde, p).unwrap().f_p;
                assert_eq!(f, ft, "{spec} at {p}");
            }
        }
    }
}

/// Every property check, by name.
pub const CHECKS: &[(&str, fn())] = &[
    ("discriminants_factor_through_the_forms", discriminants_factor_through_the_forms),
    ("fifth_power_discriminants", fifth_power_discriminants),
    ("marked_point_has_order_ell", marked_point_has_order_ell),
    ("quotient_three_torsion_exactly_on_cube_pairs", quotient_three_torsion_exactly_on_cube_pairs),
    ("one_parameter_quotient_torsion", one_parameter_quotient_torsion),
    ("primes_dividing_the_cubic_norm_forms_split", primes_dividing_the_cubic_norm_forms_split),
    ("pell_solutions_are_nonsplit_at_19", pell_solutions_are_nonsplit_at_19),
    ("seven_form_primes_obey_the_residue_rule", seven_form_primes_obey_the_residue_rule),
    ("coprimality_criterion_agrees_with_the_table", coprimality_criterion_agrees_with_the_table),
    ("conductor_exponents_agree_across_the_isogeny", conductor_exponents_agree_across_the_isogeny),
];
