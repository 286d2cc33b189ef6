//! A small offline corpus of curves with known arithmetic, plus the few
//! group-theoretic tools needed to check it: the rational torsion subgroup,
//! rational 2-isogenies, and point counts over prime fields.

use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::arith::{factorize, is_prime_u64, legendre_i128};
use crate::curve::{reduced_minimal_model, WeierstrassModel};
use crate::parametric::{build_pair, torsion_point_order, Family, ParamSpec, Point};
use crate::tate::{global_tamagawa, Kodaira};
use crate::{Error, Result};

/// The short model `Y^2 = X^3 + A X + B` with `A = -27 c4`, `B = -54 c6`,
/// integral and isomorphic to `m` over the rationals.
fn short_model(m: &WeierstrassModel) -> Result<(BigInt, BigInt)> {
    let inv = m.invariants()?;
    let c4 = inv.c4.to_integer();
    let c6 = inv.c6.to_integer();
    if !inv.c4.is_integer() || !inv.c6.is_integer() {
        return Err(Error::InvalidArgument("model is not integral".into()));
    }
    Ok((-27 * c4, -54 * c6))
}

fn cubic(x: &BigInt, a: &BigInt, c: &BigInt) -> BigInt {
    x * x * x + a * x + c
}

/// Finds an integer zero of `x^3 + a x + c` in `[lo, hi]`, on which the cubic
/// is monotone (increasing when `up`).
fn bisect(a: &BigInt, c: &BigInt, mut lo: BigInt, mut hi: BigInt, up: bool) -> Option<BigInt> {
    while lo <= hi {
        let mid: BigInt = (&lo + &hi).div_floor(&BigInt::from(2));
        let v = cubic(&mid, a, c);
        if v.is_zero() {
            return Some(mid);
        }
        if (v.is_positive()) == up {
            hi = mid - 1;
        } else {
            lo = mid + 1;
        }
    }
    None
}

/// Integer roots of the monic cubic `x^3 + a x + c`.
pub fn integer_roots(a: &BigInt, c: &BigInt) -> Vec<BigInt> {
    let bound: BigInt = a.abs().max(c.abs()) + 1;
    let mut roots = BTreeSet::new();
    if !a.is_negative() {
        roots.extend(bisect(a, c, -bound.clone(), bound, true));
    } else {
        // Monotone on x <= -t-1, on |x| <= t and on x >= t+1.
        let t: BigInt = (-a / BigInt::from(3)).sqrt();
        let t1: BigInt = &t + 1;
        roots.extend(bisect(a, c, -bound.clone(), -t1.clone(), true));
        roots.extend(bisect(a, c, -t.clone(), t, false));
        roots.extend(bisect(a, c, t1, bound, true));
    }
    roots.into_iter().collect()
}

/// Invariant factors of the rational torsion subgroup, e.g. `[]` for the
/// trivial group, `[5]`, or `[2, 4]` for `Z/2 x Z/4`.
pub fn torsion_structure(m: &WeierstrassModel) -> Result<Vec<u32>> {
    let (a, b) = short_model(m)?;
    let short = WeierstrassModel::from_ints([BigInt::zero(), BigInt::zero(), BigInt::zero(), a.clone(), b.clone()]);
    let disc: BigInt = 4 * &a * &a * &a + 27 * &b * &b;
    if disc.is_zero() {
        return Err(Error::Singular);
    }
    // Nagell-Lutz: a torsion point has integral coordinates and y = 0 or y^2 | disc.
    let mut ys = vec![BigInt::one()];
    for (p, e) in factorize(&disc)?.factors() {
        let mut next = Vec::new();
        for y in &ys {
            let mut pk = y.clone();
            for _ in 0..=e / 2 {
                next.push(pk.clone());
                pk *= p;
            }
        }
        ys = next;
    }
    ys.push(BigInt::zero());
    let mut order_two = 0;
    let mut total = 1u32;
    for y in ys {
        let c: BigInt = &b - &y * &y;
        for x in integer_roots(&a, &c) {
            let signs: &[i32] = if y.is_zero() { &[1] } else { &[1, -1] };
            for s in signs {
                let pt = Point::from_ints(x.clone(), &y * s);
                if let Some(k) = torsion_point_order(&short, &pt)? {
                    total += 1;
                    if k == 2 {
                        order_two += 1;
                    }
                }
            }
        }
    }
    Ok(match (total, order_two) {
        (1, _) => Vec::new(),
        (n, 3) => vec![2, n / 2],
        (n, _) => vec![n],
    })
}

/// Reduced minimal models of the curves 2-isogenous to `m` over the rationals,
/// one per rational point of order 2.
pub fn two_isogenous(m: &WeierstrassModel) -> Result<Vec<WeierstrassModel>> {
    let (a, b) = short_model(m)?;
    let mut out = Vec::new();
    for e in integer_roots(&a, &b) {
        // Move the 2-torsion point to the origin: y^2 = x^3 + s x^2 + t x.
        let s: BigInt = 3 * &e;
        let t: BigInt = 3 * &e * &e + &a;
        let z = BigInt::zero();
        let quotient = WeierstrassModel::from_ints([z.clone(), -2 * &s, z.clone(), &s * &s - 4 * &t, z]);
        out.push(reduced_minimal_model(&quotient)?);
    }
    Ok(out)
}

/// The isogeny class of `m` under rational 2-isogenies, as reduced minimal
/// models sorted lexicographically by their coefficients.
pub fn two_power_class(m: &WeierstrassModel) -> Result<Vec<WeierstrassModel>> {
    let start = reduced_minimal_model(m)?;
    let mut seen = vec![start.clone()];
    let mut queue = vec![start];
    while let Some(cur) = queue.pop() {
        for nb in two_isogenous(&cur)? {
            if !seen.contains(&nb) {
                seen.push(nb.clone());
                queue.push(nb);
            }
        }
    }
    seen.sort_by_key(int_coefficients);
    Ok(seen)
}

fn int_coefficients(m: &WeierstrassModel) -> [BigInt; 5] {
    m.integral_coefficients().expect("reduced minimal models are integral")
}

/// `#E(F_p)` for a prime `p >= 5` of good reduction.
pub fn count_points(m: &WeierstrassModel, p: u64) -> Result<u64> {
    let (a, b) = short_model(m)?;
    let pb = BigInt::from(p);
    let disc: BigInt = 4 * &a * &a * &a + 27 * &b * &b;
    if p < 5 || !is_prime_u64(p) || (&disc % &pb).is_zero() {
        return Err(Error::InvalidArgument(format!("{p} is not a good prime >= 5")));
    }
    let reduce = |n: &BigInt| n.mod_floor(&pb).to_i128().expect("residue fits");
    let (ar, br, pi) = (reduce(&a), reduce(&b), p as i128);
    let mut total = p as i128 + 1;
    for x in 0..pi {
        let v = ((x * x % pi * x + ar * x + br) % pi + pi) % pi;
        total += legendre_i128(v, pi) as i128;
    }
    Ok(total as u64)
}

/// Greatest common divisor of `#E(F_p)` over the good primes `5 <= p < bound`:
/// `E` locally has a subgroup of order `m` (on this range) exactly when `m`
/// divides the result.
pub fn local_point_gcd(m: &WeierstrassModel, bound: u64) -> Result<u64> {
    let (a, b) = short_model(m)?;
    let disc: BigInt = 4 * &a * &a * &a + 27 * &b * &b;
    let mut g = 0u64;
    for p in (5..bound).filter(|&p| is_prime_u64(p)) {
        if (&disc % BigInt::from(p)).is_zero() {
            continue;
        }
        g = g.gcd(&count_points(m, p)?);
    }
    Ok(g)
}

/// Conductor as the product of `p^f_p` over the bad primes.
pub fn conductor(m: &WeierstrassModel) -> Result<BigInt> {
    let (_, local) = global_tamagawa(m)?;
    Ok(local.iter().fold(BigInt::one(), |acc, r| acc * r.p.pow(r.f_p)))
}

/// Expected data at one bad prime.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct LocalExpectation {
    pub p: u64,
    pub kodaira: Kodaira,
    pub c_p: u32,
}

/// A curve from the public database with its known invariants.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Fixture {
    pub label: &'static str,
    pub a_invariants: [i64; 5],
    pub conductor: u64,
    pub tamagawa: u64,
    pub local: &'static [LocalExpectation],
    /// Invariant factors of the torsion subgroup.
    pub torsion: &'static [u32],
}

impl Fixture {
    pub fn model(&self) -> WeierstrassModel {
        WeierstrassModel::from_ints(self.a_invariants)
    }
}

const fn loc(p: u64, kodaira: Kodaira, c_p: u32) -> LocalExpectation {
    LocalExpectation { p, kodaira, c_p }
}

use Kodaira::*;

pub static FIXTURES: &[Fixture] = &[
    Fixture {
        label: "11.a1",
        a_invariants: [0, -1, 1, -7820, -263580],
        conductor: 11,
        tamagawa: 1,
        local: &[loc(11, I(1), 1)],
        torsion: &[],
    },
    Fixture {
        label: "11.a2",
        a_invariants: [0, -1, 1, -10, -20],
        conductor: 11,
        tamagawa: 5,
        local: &[loc(11, I(5), 5)],
        torsion: &[5],
    },
    Fixture {
        label: "11.a3",
        a_invariants: [0, -1, 1, 0, 0],
        conductor: 11,
        tamagawa: 1,
        local: &[loc(11, I(1), 1)],
        torsion: &[5],
    },
    Fixture {
        label: "27.a1",
        a_invariants: [0, 0, 1, -270, -1708],
        conductor: 27,
        tamagawa: 1,
        local: &[loc(3, IIStar, 1)],
        torsion: &[],
    },
    Fixture {
        label: "27.a2",
        a_invariants: [0, 0, 1, -30, 63],
        conductor: 27,
        tamagawa: 1,
        local: &[loc(3, IV, 1)],
        torsion: &[3],
    },
    Fixture {
        label: "27.a3",
        a_invariants: [0, 0, 1, 0, -7],
        conductor: 27,
        tamagawa: 3,
        local: &[loc(3, IVStar, 3)],
        torsion: &[3],
    },
    Fixture {
        label: "27.a4",
        a_invariants: [0, 0, 1, 0, 0],
        conductor: 27,
        tamagawa: 1,
        local: &[loc(3, II, 1)],
        torsion: &[3],
    },
    Fixture {
        label: "54.a1",
        a_invariants: [1, -1, 0, -123, -667],
        conductor: 54,
        tamagawa: 1,
        local: &[loc(2, I(9), 1), loc(3, IIStar, 1)],
        torsion: &[],
    },
    Fixture {
        label: "54.a2",
        a_invariants: [1, -1, 0, -3, 3],
        conductor: 54,
        tamagawa: 1,
        local: &[loc(2, I(1), 1), loc(3, II, 1)],
        torsion: &[3],
    },
    Fixture {
        label: "54.a3",
        a_invariants: [1, -1, 0, 12, 8],
        conductor: 54,
        tamagawa: 3,
        local: &[loc(2, I(3), 1), loc(3, IVStar, 3)],
        torsion: &[3],
    },
    Fixture {
        label: "880.h1",
        a_invariants: [0, 0, 0, -947, -11214],
        conductor: 880,
        tamagawa: 8,
        local: &[loc(2, IStar(4), 2), loc(5, I(4), 4), loc(11, I(1), 1)],
        torsion: &[2],
    },
    Fixture {
        label: "880.h2",
        a_invariants: [0, 0, 0, -467, 3794],
        conductor: 880,
        tamagawa: 16,
        local: &[loc(2, IStar(4), 4), loc(5, I(1), 1), loc(11, I(4), 4)],
        torsion: &[4],
    },
    Fixture {
        label: "880.h3",
        a_invariants: [0, 0, 0, -67, -126],
        conductor: 880,
        tamagawa: 16,
        local: &[loc(2, IStar(4), 4), loc(5, I(2), 2), loc(11, I(2), 2)],
        torsion: &[2, 2],
    },
    Fixture {
        label: "880.h4",
        a_invariants: [0, 0, 0, 13, -14],
        conductor: 880,
        tamagawa: 4,
        local: &[loc(2, IStar(4), 4), loc(5, I(1), 1), loc(11, I(1), 1)],
        torsion: &[2],
    },
    // A 2-isogenous pair of conductor 14400 whose local Tamagawa numbers at 2
    // differ by a factor of 4.
    Fixture {
        label: "14400.cr1",
        a_invariants: [0, 0, 0, -15, 0],
        conductor: 14400,
        tamagawa: 4,
        local: &[loc(2, II, 1), loc(3, III, 2), loc(5, III, 2)],
        torsion: &[2],
    },
    Fixture {
        label: "14400.cr2",
        a_invariants: [0, 0, 0, 60, 0],
        conductor: 14400,
        tamagawa: 16,
        local: &[loc(2, IStar(2), 4), loc(3, III, 2), loc(5, III, 2)],
        torsion: &[2],
    },
];

/// Looks a fixture up by label.
pub fn fixture(label: &str) -> Option<&'static Fixture> {
    FIXTURES.iter().find(|f| f.label == label)
}

/// Outcome of one check of the corpus; `failures` is empty on success.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FixtureOutcome {
    pub name: String,
    pub failures: Vec<String>,
}

impl FixtureOutcome {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Runs Tate's algorithm and the torsion computation on one fixture and
/// compares every field.
pub fn check_fixture(f: &Fixture) -> FixtureOutcome {
    let mut failures = Vec::new();
    let m = f.model();
    match global_tamagawa(&m) {
        Ok((c, local)) => {
            if c != f.tamagawa {
                failures.push(format!("Tamagawa number {c}, expected {}", f.tamagawa));
            }
            let got: Vec<LocalExpectation> = local
                .iter()
                .map(|r| LocalExpectation {
                    p: r.p.to_u64().unwrap_or(0),
                    kodaira: r.kodaira,
                    c_p: r.c_p,
                })
                .collect();
            if got != f.local {
                failures.push(format!("local data {got:?}, expected {:?}", f.local));
            }
            let n = local.iter().fold(BigInt::one(), |acc, r| acc * r.p.pow(r.f_p));
            if n != BigInt::from(f.conductor) {
                failures.push(format!("conductor {n}, expected {}", f.conductor));
            }
        }
        Err(e) => failures.push(format!("Tate's algorithm failed: {e}")),
    }
    match torsion_structure(&m) {
        Ok(t) if t == f.torsion => {}
        Ok(t) => failures.push(format!("torsion {t:?}, expected {:?}", f.torsion)),
        Err(e) => failures.push(format!("torsion failed: {e}")),
    }
    FixtureOutcome {
        name: f.label.to_string(),
        failures,
    }
}

fn require(label: &str) -> Result<&'static Fixture> {
    fixture(label).ok_or_else(|| Error::InvalidArgument(format!("unknown fixture {label}")))
}

/// Curves of the families that must be isomorphic to a fixture, as
/// `(label, family, a, b, use the quotient)`.
const FAMILY_LINKS: &[(&str, Family, i64, i64, bool)] = &[
    ("11.a3", Family::C5, 1, 1, false),
    ("11.a2", Family::C5, 1, 1, true),
    ("27.a4", Family::C3Zero, 1, 0, false),
    ("27.a3", Family::C3Zero, 1, 0, true),
    ("27.a3", Family::C3, 24, 1, false),
    ("27.a1", Family::C3, 24, 1, true),
    ("27.a2", Family::C3, 216, -1, false),
    ("27.a4", Family::C3, 216, -1, true),
    ("54.a2", Family::C3, 27, -1, false),
    ("54.a3", Family::C3, 27, -1, true),
];

fn family_links() -> Result<Vec<FixtureOutcome>> {
    let mut out = Vec::new();
    for &(label, family, a, b, tilde) in FAMILY_LINKS {
        let spec = ParamSpec::of(family, a, b)?;
        let pair = build_pair(&spec)?;
        let curve = if tilde { &pair.e_tilde } else { &pair.e };
        let got = reduced_minimal_model(curve)?;
        let want = reduced_minimal_model(&require(label)?.model())?;
        let which = if tilde { "~E" } else { "E" };
        let mut failures = Vec::new();
        if got != want {
            failures.push(format!("reduced model {:?}", got.integral_coefficients()));
        }
        out.push(FixtureOutcome {
            name: format!("{label} is {which} for {spec}"),
            failures,
        });
    }
    Ok(out)
}

fn class_check(labels: &[&str]) -> Result<FixtureOutcome> {
    let want: Vec<WeierstrassModel> = labels
        .iter()
        .map(|l| Ok(reduced_minimal_model(&require(l)?.model())?))
        .collect::<Result<_>>()?;
    let got = two_power_class(&want[0])?;
    let mut failures = Vec::new();
    if got != want {
        let coeffs: Vec<_> = got.iter().map(int_coefficients).collect();
        failures.push(format!("2-power isogeny class is {coeffs:?}"));
    }
    Ok(FixtureOutcome {
        name: format!("{} form one 2-power isogeny class", labels.join(", ")),
        failures,
    })
}

/// Good primes `5 <= p < LOCAL_BOUND` used for local subgroup checks.
const LOCAL_BOUND: u64 = 1000;

fn local_order_four(label: &str) -> Result<FixtureOutcome> {
    let m = require(label)?.model();
    let g = local_point_gcd(&m, LOCAL_BOUND)?;
    let mut failures = Vec::new();
    if g % 4 != 0 {
        failures.push(format!("gcd of #E(F_p) is {g}"));
    }
    Ok(FixtureOutcome {
        name: format!("{label} locally has a subgroup of order 4 (p < {LOCAL_BOUND})"),
        failures,
    })
}

/// Checks that the two curves are 2-isogenous and that the ratio of their
/// local Tamagawa numbers at `p` is `ratio`.
fn local_ratio(first: &str, second: &str, p: u64, ratio: u32) -> Result<FixtureOutcome> {
    let e1 = reduced_minimal_model(&require(first)?.model())?;
    let e2 = reduced_minimal_model(&require(second)?.model())?;
    let mut failures = Vec::new();
    if !two_isogenous(&e1)?.contains(&e2) {
        failures.push("curves are not 2-isogenous".to_string());
    }
    let at = |m: &WeierstrassModel| -> Result<u32> {
        let (_, local) = global_tamagawa(m)?;
        Ok(local.iter().find(|r| r.p == BigInt::from(p)).map_or(1, |r| r.c_p))
    };
    let (c1, c2) = (at(&e1)?, at(&e2)?);
    if c2 != ratio * c1 {
        failures.push(format!("c_{p} = {c1} and {c2}"));
    }
    Ok(FixtureOutcome {
        name: format!("c_{p}({second}) / c_{p}({first}) = {ratio}"),
        failures,
    })
}

/// Every check of the corpus: per-fixture Tate and torsion data, the links to
/// the parametrized families, isogeny-class structure, local subgroups and
/// the local Tamagawa ratio of 4 across a 2-isogeny.
pub fn verify_all() -> Result<Vec<FixtureOutcome>> {
    let mut out: Vec<FixtureOutcome> = FIXTURES.iter().map(check_fixture).collect();
    out.extend(family_links()?);
    out.push(class_check(&["880.h1", "880.h2", "880.h3", "880.h4"])?);
    for label in ["880.h1", "880.h4"] {
        out.push(local_order_four(label)?);
    }
    out.push(local_ratio("14400.cr1", "14400.cr2", 2, 4)?);
    Ok(out)
}
