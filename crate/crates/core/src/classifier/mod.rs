//! Closed-form local Tamagawa numbers of `E_T(a,b)` and `Ẽ_T(a,b)`, read off
//! the parameters without running Tate's algorithm, together with the
//! coprimality criterion for `l in {5, 7}` and the sets built on it.

mod oracle;
mod rules;
mod table;

use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

pub use oracle::{oracle_global, oracle_local, OraclePair};
pub use rules::{Coverage, Rule};

use crate::arith::{factorize, is_kth_power_free, is_prime, legendre};
use crate::parametric::{normalize_params, Family, ParamSpec};
use crate::{Error, Result};

/// The binary forms `n_l`, `f_l`, `g_l` with `Δ(E) = n^l f` and `Δ(Ẽ) = n f^l`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FamilyForms {
    pub n: BigInt,
    pub f: BigInt,
    pub g: BigInt,
}

pub fn family_forms(ell: u32, a: &BigInt, b: &BigInt) -> Result<FamilyForms> {
    match ell {
        5 => Ok(FamilyForms {
            n: a * b,
            f: a * a + 11 * a * b - b * b,
            g: a * a + b * b,
        }),
        7 => Ok(FamilyForms {
            n: a * b * (a - b),
            f: a.pow(3) + 5 * a * a * b - 8 * a * b * b + b.pow(3),
            g: a * a - a * b + b * b,
        }),
        _ => Err(Error::InvalidArgument(format!("forms exist only for l = 5, 7, not {ell}"))),
    }
}

/// Local Tamagawa numbers of `E_T` and `Ẽ_T` at one prime, and the row used.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LocalPair {
    pub p: BigInt,
    pub c: u32,
    pub c_tilde: u32,
    pub rule: Rule,
}

/// Global Tamagawa numbers with the per-prime breakdown over bad primes.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GlobalPair {
    pub c: u64,
    pub c_tilde: u64,
    pub local: Vec<LocalPair>,
}

/// Parameters the table applies to: positive for `C5`/`C7`, verbatim otherwise.
fn table_spec(spec: &ParamSpec) -> Result<ParamSpec> {
    match spec.family {
        Family::C5 | Family::C7 if spec.b.is_negative() => {
            normalize_params(spec.family, spec.a.clone(), spec.b.clone())
        }
        _ => Ok(spec.clone()),
    }
}

/// The row of the table applying at `p`, or [`Rule::Good`].
pub fn classify_local(spec: &ParamSpec, p: &BigInt) -> Result<LocalPair> {
    let spec = table_spec(spec)?;
    classify_local_normalized(&spec, p)
}

fn classify_local_normalized(spec: &ParamSpec, p: &BigInt) -> Result<LocalPair> {
    let hits = table::matching_rows(spec, p)?;
    match hits.as_slice() {
        [] => Ok(LocalPair {
            p: p.clone(),
            c: 1,
            c_tilde: 1,
            rule: Rule::Good,
        }),
        [(rule, c, c_tilde)] => Ok(LocalPair {
            p: p.clone(),
            c: *c,
            c_tilde: *c_tilde,
            rule: *rule,
        }),
        many => Err(Error::Inconsistent(format!(
            "{spec} at {p}: rows {} all apply",
            many.iter().map(|h| h.0.id()).collect::<Vec<_>>().join(", ")
        ))),
    }
}

/// Every prime at which `E_T` can have bad reduction, from the factored forms.
pub fn candidate_primes(spec: &ParamSpec) -> Result<Vec<BigInt>> {
    let spec = table_spec(spec)?;
    let (a, b) = (&spec.a, &spec.b);
    let mut parts: Vec<BigInt> = match spec.family {
        Family::C3Zero => vec![a.clone()],
        Family::C3 => vec![a.clone(), b.clone(), a - 27 * b],
        Family::C5 | Family::C7 => {
            let ell = spec.family.ell();
            let forms = family_forms(ell, a, b)?;
            let mut v = vec![a.clone(), b.clone(), forms.f];
            if ell == 7 {
                v.push(a - b);
            }
            v
        }
    };
    if matches!(spec.family, Family::C3 | Family::C3Zero) {
        parts.push(BigInt::from(3));
    }
    let mut primes = BTreeSet::new();
    for n in parts {
        if n.is_zero() {
            return Err(Error::DegenerateParameters(spec.to_string()));
        }
        if n.abs().is_one() {
            continue;
        }
        primes.extend(factorize(&n)?.primes().cloned());
    }
    Ok(primes.into_iter().collect())
}

/// Global Tamagawa numbers of both curves from the table alone.
pub fn classify_global(spec: &ParamSpec) -> Result<GlobalPair> {
    let primes = candidate_primes(spec)?;
    classify_global_with_primes(spec, &primes)
}

/// [`classify_global`] over caller-supplied primes, which must include every
/// prime of bad reduction (extra primes are harmless). Useful when the forms
/// are known in factored form and factoring them whole would be wasteful.
pub fn classify_global_with_primes(spec: &ParamSpec, primes: &[BigInt]) -> Result<GlobalPair> {
    let norm = table_spec(spec)?;
    let mut out = GlobalPair {
        c: 1,
        c_tilde: 1,
        local: Vec::new(),
    };
    let mut primes = primes.to_vec();
    primes.sort();
    primes.dedup();
    for p in &primes {
        let pair = classify_local_normalized(&norm, p)?;
        if pair.rule != Rule::Good {
            out.c *= pair.c as u64;
            out.c_tilde *= pair.c_tilde as u64;
            out.local.push(pair);
        }
    }
    Ok(out)
}

/// Whether `c(Ẽ_T)` is prime to `l`, decided without computing it: no prime
/// may divide `n_l` to an exponent that is a multiple of `l`, and `-l g_l`
/// must be a non-residue modulo every prime `q != l` dividing `f_l`.
///
/// The first condition is weaker than `n_l` being `l`-th power free: at a
/// prime with `v_p(n_l) = k` the quotient has `c_p = k`, so for instance
/// `C5(64, 1)` has `c_2 = 6` on the quotient, which is prime to 5.
pub fn coprime_to_ell(spec: &ParamSpec) -> Result<bool> {
    let ell = spec.ell();
    if ell == 3 {
        return Err(Error::InvalidArgument("criterion needs l = 5 or 7".into()));
    }
    let spec = table_spec(spec)?;
    let forms = family_forms(ell, &spec.a, &spec.b)?;
    if !forms.n.abs().is_one()
        && factorize(&forms.n)?.factors().iter().any(|(_, k)| k % ell == 0)
    {
        return Ok(false);
    }
    let ell_big = BigInt::from(ell);
    let minus_lg = -&ell_big * &forms.g;
    if forms.f.abs().is_one() {
        return Ok(true);
    }
    for q in factorize(&forms.f)?.primes() {
        if *q != ell_big && legendre(&minus_lg, q)? != -1 {
            return Ok(false);
        }
    }
    Ok(true)
}

/// The criterion exactly as usually stated: `n_l` is `l`-th power free and
/// `-l g_l` is a non-residue modulo every prime `q != l` dividing `f_l`.
/// It implies [`coprime_to_ell`]; the two differ when some prime divides
/// `n_l` to an exponent above `l` that is not a multiple of `l`.
pub fn coprime_to_ell_power_free(spec: &ParamSpec) -> Result<bool> {
    let spec = table_spec(spec)?;
    let forms = family_forms(spec.ell(), &spec.a, &spec.b)?;
    Ok(is_kth_power_free(&forms.n, spec.ell())? && coprime_to_ell(&spec)?)
}

/// Membership in the set of coprime `(a, b)` with `a^2 + 11ab - b^2 = 19` and
/// both entries fifth-power free.
pub fn x5_member(a: &BigInt, b: &BigInt) -> bool {
    if a.is_zero() || b.is_zero() || !a.gcd(b).is_one() {
        return false;
    }
    if a * a + 11 * a * b - b * b != BigInt::from(19) {
        return false;
    }
    let free = |n: &BigInt| is_kth_power_free(n, 5).unwrap_or(false);
    free(a) && free(b)
}

/// Membership in the set of coprime `(a, b)` with `ab(a-b)` seventh-power free
/// and `f_7(a,b)` a (positive) prime congruent to `-1` modulo 7.
pub fn x7_member(a: &BigInt, b: &BigInt) -> Result<bool> {
    if !a.gcd(b).is_one() {
        return Ok(false);
    }
    let forms = family_forms(7, a, b)?;
    if forms.n.is_zero() || !forms.f.is_positive() {
        return Ok(false);
    }
    if forms.f.mod_floor(&BigInt::from(7)) != BigInt::from(6) || !is_prime(&forms.f) {
        return Ok(false);
    }
    is_kth_power_free(&forms.n, 7)
}

/// For coprime `(a, b)` with `q = |f_7(a,b)|` prime: `q = 7` or
/// `q ≡ ±1 (mod 7)`, and in the latter case the residue symbol of
/// `-7 g_7(a,b)` modulo `q` equals that sign.
pub fn lemma65_check(a: &BigInt, b: &BigInt) -> Result<bool> {
    let forms = family_forms(7, a, b)?;
    let q = forms.f.abs();
    if !is_prime(&q) {
        return Err(Error::InvalidArgument(format!("|f7({a}, {b})| = {q} is not prime")));
    }
    let seven = BigInt::from(7);
    if q == seven {
        return Ok(true);
    }
    let sign = match q.mod_floor(&seven) {
        r if r.is_one() => 1,
        r if r == BigInt::from(6) => -1,
        _ => return Ok(false),
    };
    Ok(legendre(&(-seven * forms.g), &q)? == sign)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn b(n: i64) -> BigInt {
        BigInt::from(n)
    }

    fn spec(f: Family, a: i64, bb: i64) -> ParamSpec {
        ParamSpec::of(f, a, bb).unwrap()
    }

    #[test]
    fn forms_examples() {
        assert_eq!(family_forms(5, &b(1), &b(2)).unwrap(), FamilyForms { n: b(2), f: b(19), g: b(5) });
        assert_eq!(family_forms(5, &b(1), &b(1)).unwrap(), FamilyForms { n: b(1), f: b(11), g: b(2) });
        assert_eq!(family_forms(7, &b(1), &b(2)).unwrap(), FamilyForms { n: b(-2), f: b(-13), g: b(3) });
        assert!(family_forms(3, &b(1), &b(2)).is_err());
    }

    #[test]
    fn local_examples() {
        let r = classify_local(&spec(Family::C5, 1, 2), &b(2)).unwrap();
        assert_eq!((r.c, r.c_tilde, r.rule), (5, 1, Rule::C5DividesAB));
        let r = classify_local(&spec(Family::C5, 1, 1), &b(11)).unwrap();
        assert_eq!((r.c, r.c_tilde, r.rule), (1, 5, Rule::C5FormSplit));
        let r = classify_local(&spec(Family::C3Zero, 1, 0), &b(3)).unwrap();
        assert_eq!((r.c, r.c_tilde), (1, 3));
        // v7(a + 4b) >= 1 with a = 3, b = 1.
        let r = classify_local(&spec(Family::C7, 3, 1), &b(7)).unwrap();
        assert_eq!((r.c, r.c_tilde, r.rule), (1, 1, Rule::C7Seven));
        let r = classify_local(&spec(Family::C5, 1, 2), &b(3)).unwrap();
        assert_eq!(r.rule, Rule::Good);
    }

    #[test]
    fn global_examples() {
        let g = classify_global(&spec(Family::C5, 1, 1)).unwrap();
        assert_eq!((g.c, g.c_tilde), (1, 5));
        let g = classify_global(&spec(Family::C3Zero, 1, 0)).unwrap();
        assert_eq!((g.c, g.c_tilde), (1, 3));
        let g = classify_global(&spec(Family::C3, 24, 1)).unwrap();
        assert_eq!((g.c, g.c_tilde), (3, 1));
        // a = 27 (3k+1)^3, b = (3k+1)^3 - 9: the quotient has c = 1 when b is
        // squarefree (k = 1) and picks up v_2(b) = 3 when k = 0.
        let g = classify_global(&spec(Family::C3, 27 * 64, 55)).unwrap();
        assert_eq!(g.c_tilde, 1);
        let g = classify_global(&spec(Family::C3, 27, -8)).unwrap();
        assert_eq!(g.c_tilde, 3);
    }

    #[test]
    fn coprimality_examples() {
        assert!(coprime_to_ell(&spec(Family::C5, 1, 2)).unwrap());
        assert!(!coprime_to_ell(&spec(Family::C5, 1, 1)).unwrap());
        assert!(!coprime_to_ell(&spec(Family::C5, 1, 32)).unwrap());
        assert!(coprime_to_ell(&spec(Family::C5, 64, 1)).unwrap());
        assert_eq!(classify_global(&spec(Family::C5, 64, 1)).unwrap().c_tilde % 5, 1);
    }

    #[test]
    fn set_membership() {
        assert!(x5_member(&b(1), &b(2)));
        assert!(!x5_member(&b(1), &b(1)));
        assert!(!x5_member(&b(2), &b(4)));
        assert!(!x7_member(&b(1), &b(1)).unwrap());
        assert!(!x7_member(&b(2), &b(4)).unwrap());
        let found = (1..=50i64)
            .flat_map(|x| (1..=50i64).map(move |y| (x, y)))
            .any(|(x, y)| x7_member(&b(x), &b(y)).unwrap());
        assert!(found);
    }
}
