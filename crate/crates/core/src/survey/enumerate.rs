use std::collections::{BTreeMap, HashSet};
use std::path::PathBuf;

use num_bigint::BigInt;
use num_integer::Integer;
use serde::{Deserialize, Serialize};

use super::output::{append_checkpoint, read_checkpoint, CheckpointBlock};
use super::SurveyRow;
use crate::arith::exact_root;
use crate::classifier::{classify_global, coprime_to_ell_power_free, Rule};
use crate::curve::{height_key, height_of_key, height_threshold};
use crate::exec::Exec;
use crate::parametric::{Family, ParamSpec};
use crate::{Error, Result};

fn family_of(ell: u32) -> Result<Family> {
    match ell {
        5 => Ok(Family::C5),
        7 => Ok(Family::C7),
        _ => Err(Error::InvalidArgument(format!(
            "height surveys cover l = 5 and l = 7, not {ell}"
        ))),
    }
}

/// `(a1, a2, a3)` of `E_T(a,b)` for `T = C5, C7` in any ring-like type.
macro_rules! tate_normal {
    ($family:expr, $a:expr, $b:expr) => {{
        let (a, b) = ($a, $b);
        match $family {
            Family::C5 => (a - b, -(a * b), -(a * a * b)),
            _ => (
                a * a + a * b - b * b,
                a * a * b * b - a * b * b * b,
                a * a * a * a * b * b - a * a * a * b * b * b,
            ),
        }
    }};
}

/// `c4` and `c6` of `E_T(a,b)` (`a4 = a6 = 0`).
pub fn family_c4_c6(family: Family, a: &BigInt, b: &BigInt) -> (BigInt, BigInt) {
    let (a1, a2, a3): (BigInt, BigInt, BigInt) = match family {
        Family::C5 | Family::C7 => tate_normal!(family, a, b),
        Family::C3 => (a.clone(), BigInt::from(0), a * a * b),
        Family::C3Zero => (BigInt::from(0), BigInt::from(0), a.clone()),
    };
    let b2: BigInt = &a1 * &a1 + 4 * &a2;
    let b4: BigInt = &a1 * &a3;
    let b6: BigInt = &a3 * &a3;
    let c4 = &b2 * &b2 - 24 * &b4;
    let c6 = -(&b2 * &b2 * &b2) + 36 * &b2 * &b4 - 216 * b6;
    (c4, c6)
}

fn c4_c6_f64(family: Family, a: f64, b: f64) -> (f64, f64) {
    let (a1, a2, a3) = tate_normal!(family, a, b);
    let b2 = a1 * a1 + 4.0 * a2;
    let b4 = a1 * a3;
    let b6 = a3 * a3;
    (b2 * b2 - 24.0 * b4, -b2 * b2 * b2 + 36.0 * b2 * b4 - 216.0 * b6)
}

/// Degree of `max(|c4|^3, c6^2)` as a form in `(a, b)`.
pub fn key_degree(ell: u32) -> Result<u32> {
    Ok(match family_of(ell)? {
        Family::C5 => 12,
        _ => 24,
    })
}

/// A bound `B` such that every coprime positive pair with `a + b >= B` has
/// height at least `x`.
///
/// The key is a form of degree `d`, so on `a + b = S` it equals `S^d` times
/// its value at `(t, 1 - t)`. Its minimum `m` over `0 <= t <= 1` is estimated
/// on a fine grid and halved as a safety margin; then `a + b >= S` forces
/// `ht >= (d log S + log m) / 12`. The result is padded by 25%.
pub fn sum_bound(ell: u32, x: f64) -> Result<u64> {
    let family = family_of(ell)?;
    let d = key_degree(ell)? as f64;
    const STEPS: u32 = 20_000;
    let mut m = f64::INFINITY;
    for i in 0..=STEPS {
        let t = i as f64 / STEPS as f64;
        let (c4, c6) = c4_c6_f64(family, t, 1.0 - t);
        m = m.min((c4.abs().powi(3)).max(c6 * c6));
    }
    let m = m / 2.0;
    if !(m > 0.0) {
        return Err(Error::Inconsistent("height form vanishes on the simplex".into()));
    }
    let s = ((12.0 * x - m.ln()) / d).exp();
    Ok((1.25 * s).ceil() as u64 + 2)
}

/// `E_T(a,b)` for a coprime positive pair, with its invariants.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Representative {
    pub spec: ParamSpec,
    pub c4: BigInt,
    pub c6: BigInt,
}

impl Representative {
    pub fn height_key(&self) -> BigInt {
        height_key(&self.c4, &self.c6)
    }

    pub fn height(&self) -> f64 {
        height_of_key(&self.height_key())
    }
}

/// Treatment of the `C5` pairs with `ab` a fifth power, whose quotient curve
/// still has a rational 5-torsion point.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
pub enum FifthPowers {
    /// Count them (this reproduces the published statistics).
    #[default]
    Include,
    /// Leave them out, so that every counted quotient lacks 5-torsion.
    Exclude,
}

fn excluded(family: Family, a: u64, b: u64, fifth: FifthPowers) -> bool {
    match family {
        Family::C5 => {
            fifth == FifthPowers::Exclude && exact_root(&BigInt::from(a * b), 5).is_some()
        }
        // The only coprime pair with a = b is singular.
        _ => a == b,
    }
}

/// One representative per isomorphism class among coprime positive pairs
/// with `a + b < sum_bound`. For `l = 5` pairs with `ab` a fifth power are
/// left out. Classes are identified by `(c4, c6)`, which for these globally
/// minimal models determines the reduced minimal model; the representative is
/// the lexicographically first pair.
pub fn enumerate_representatives(ell: u32, sum_bound: u64, exec: Exec) -> Result<Vec<Representative>> {
    let family = family_of(ell)?;
    let rows: Vec<u64> = (1..sum_bound.max(2)).collect();
    let found = exec.map(rows, |a| {
        let mut v = Vec::new();
        for b in 1..(sum_bound - a) {
            if a.gcd(&b) != 1 || excluded(family, a, b, FifthPowers::Exclude) {
                continue;
            }
            let (ab, bb) = (BigInt::from(a), BigInt::from(b));
            let (c4, c6) = family_c4_c6(family, &ab, &bb);
            v.push(Representative {
                spec: ParamSpec { family, a: ab, b: bb },
                c4,
                c6,
            });
        }
        v
    });
    Ok(dedup(found.into_iter().flatten()))
}

fn dedup(items: impl Iterator<Item = Representative>) -> Vec<Representative> {
    let mut seen = HashSet::new();
    items
        .filter(|r| seen.insert((r.c4.clone(), r.c6.clone())))
        .collect()
}

/// Coprime positive pairs with `a != b` and `a + b < bound` whose curve has
/// height below `x`, in lexicographic order. Also returns pairs whose key
/// sits within one of the exact threshold.
pub fn admitted_pairs(
    ell: u32,
    x: f64,
    bound: u64,
    fifth: FifthPowers,
    exec: Exec,
) -> Result<(Vec<(u64, u64)>, Vec<(u64, u64)>)> {
    let family = family_of(ell)?;
    let threshold = height_threshold(x)?;
    let limit = threshold.floor.clone();
    let limit_f = (12.0 * x).exp();
    let rows: Vec<u64> = (1..bound.max(2)).collect();
    let per_row = exec.map(rows, |a| {
        let mut inside = Vec::new();
        let mut boundary = Vec::new();
        for b in 1..(bound - a) {
            if a.gcd(&b) != 1 || excluded(family, a, b, fifth) {
                continue;
            }
            let (c4f, c6f) = c4_c6_f64(family, a as f64, b as f64);
            let approx = (c4f.abs().powi(3)).max(c6f * c6f);
            if approx > limit_f * 1.001 {
                continue;
            }
            let (c4, c6) = family_c4_c6(family, &BigInt::from(a), &BigInt::from(b));
            let key = height_key(&c4, &c6);
            if key <= limit {
                inside.push((a, b));
            }
            let diff: BigInt = &key - &limit;
            if diff == BigInt::from(0) || diff == BigInt::from(1) {
                boundary.push((a, b));
            }
        }
        (inside, boundary)
    });
    let mut inside = Vec::new();
    let mut boundary = Vec::new();
    for (i, b) in per_row {
        inside.extend(i);
        boundary.extend(b);
    }
    Ok((inside, boundary))
}

/// Which notion of "divisible by `l`" the survey counts.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
pub enum TildeCount {
    /// `l | c(Ẽ)` with `c(Ẽ)` from the local table.
    #[default]
    Table,
    /// The complement of [`coprime_to_ell_power_free`], i.e. the coprimality
    /// criterion with `n_l` required to be `l`-th power free.
    PowerFreeCriterion,
}

#[derive(Debug, Clone, Default)]
pub struct SurveyOptions {
    pub exec: Exec,
    pub count: TildeCount,
    /// Newline-delimited JSON file of finished blocks; read on start and
    /// appended to as blocks finish.
    pub checkpoint: Option<PathBuf>,
    /// Override for the derived bound on `a + b`.
    pub sum_bound: Option<u64>,
    pub fifth_powers: FifthPowers,
}

/// Everything the survey knows about one representative.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CurveRecord {
    pub a: u64,
    pub b: u64,
    pub c: u64,
    pub c_tilde: u64,
    /// Value of the power-free form of the coprimality criterion.
    pub power_free_coprime: bool,
    pub bad_primes: Vec<String>,
    pub rules: Vec<Rule>,
}

fn record(family: Family, a: u64, b: u64) -> Result<CurveRecord> {
    let spec = ParamSpec {
        family,
        a: BigInt::from(a),
        b: BigInt::from(b),
    };
    let g = classify_global(&spec)?;
    Ok(CurveRecord {
        a,
        b,
        c: g.c,
        c_tilde: g.c_tilde,
        power_free_coprime: coprime_to_ell_power_free(&spec)?,
        bad_primes: g.local.iter().map(|l| l.p.to_string()).collect(),
        rules: g.local.iter().map(|l| l.rule).collect(),
    })
}

/// Result of a full height survey.
#[derive(Debug, Clone)]
pub struct SurveyResult {
    pub row: SurveyRow,
    /// One record per isomorphism class, in lexicographic order of `(a, b)`.
    pub records: Vec<CurveRecord>,
    /// Pairs whose key equals the threshold or exceeds it by one; always
    /// empty in practice since `exp(12 X)` is irrational.
    pub boundary: Vec<(u64, u64)>,
    pub sum_bound: u64,
}

impl SurveyResult {
    pub fn family(&self) -> Family {
        if self.row.ell == 5 {
            Family::C5
        } else {
            Family::C7
        }
    }
}

const BLOCK: u64 = 64;

/// Curves `E_T(a,b)` with `ht(E_T) < x`, one per isomorphism class, with the
/// global Tamagawa numbers of `E_T` and its quotient.
pub fn tilde_survey(ell: u32, x: f64, opts: &SurveyOptions) -> Result<SurveyResult> {
    let family = family_of(ell)?;
    let bound = match opts.sum_bound {
        Some(b) => b,
        None => sum_bound(ell, x)?,
    };
    let (pairs, boundary) = admitted_pairs(ell, x, bound, opts.fifth_powers, opts.exec)?;

    // Group admitted pairs into blocks of consecutive `a`.
    let mut blocks: BTreeMap<u64, Vec<(u64, u64)>> = BTreeMap::new();
    for (a, b) in pairs {
        blocks.entry((a - 1) / BLOCK).or_default().push((a, b));
    }
    let mut done: BTreeMap<u64, Vec<CurveRecord>> = BTreeMap::new();
    if let Some(path) = &opts.checkpoint {
        for blk in read_checkpoint(path)? {
            if blk.ell == ell && blk.x == x && blk.sum_bound == bound && blk.fifth_powers == opts.fifth_powers {
                done.insert(blk.block, blk.records);
            }
        }
    }
    let todo: Vec<(u64, Vec<(u64, u64)>)> = blocks
        .iter()
        .filter(|(k, _)| !done.contains_key(*k))
        .map(|(k, v)| (*k, v.clone()))
        .collect();
    // Work through pending blocks in groups so progress is saved regularly.
    for group in todo.chunks(32) {
        let results = opts.exec.map(group.to_vec(), |(k, pairs)| {
            let recs: Result<Vec<CurveRecord>> =
                pairs.into_iter().map(|(a, b)| record(family, a, b)).collect();
            recs.map(|r| (k, r))
        });
        for res in results {
            let (k, recs) = res?;
            if let Some(path) = &opts.checkpoint {
                append_checkpoint(
                    path,
                    &CheckpointBlock {
                        ell,
                        x,
                        sum_bound: bound,
                        block: k,
                        fifth_powers: opts.fifth_powers,
                        records: recs.clone(),
                    },
                )?;
            }
            done.insert(k, recs);
        }
    }

    let mut seen = HashSet::new();
    let mut records = Vec::new();
    for (_, recs) in done.into_iter().filter(|(k, _)| blocks.contains_key(k)) {
        for r in recs {
            let key = family_c4_c6(family, &BigInt::from(r.a), &BigInt::from(r.b));
            if seen.insert(key) {
                records.push(r);
            }
        }
    }
    let g = records.len() as u64;
    let n = records
        .iter()
        .filter(|r| match opts.count {
            TildeCount::Table => r.c_tilde % ell as u64 == 0,
            TildeCount::PowerFreeCriterion => !r.power_free_coprime,
        })
        .count() as u64;
    Ok(SurveyResult {
        row: SurveyRow::new(ell, x, n, g),
        records,
        boundary,
        sum_bound: bound,
    })
}

/// Just the counts of [`tilde_survey`].
pub fn tilde_stats(ell: u32, x: f64, exec: Exec) -> Result<SurveyRow> {
    let opts = SurveyOptions {
        exec,
        ..SurveyOptions::default()
    };
    Ok(tilde_survey(ell, x, &opts)?.row)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::curve::{is_minimal, reduced_minimal_model};
    use crate::parametric::build_pair;

    #[test]
    fn invariants_match_the_model() {
        for family in [Family::C5, Family::C7] {
            for (a, b) in [(1, 2), (2, 3), (7, 2), (3, 11)] {
                let spec = ParamSpec::of(family, a, b).unwrap();
                let inv = build_pair(&spec).unwrap().e.invariants().unwrap();
                let (c4, c6) = family_c4_c6(family, &spec.a, &spec.b);
                assert_eq!(inv.c4.to_integer(), c4);
                assert_eq!(inv.c6.to_integer(), c6);
            }
        }
    }

    #[test]
    fn coprime_models_are_minimal() {
        for family in [Family::C5, Family::C7] {
            for a in 1..25i64 {
                for b in 1..25i64 {
                    if let Ok(spec) = ParamSpec::of(family, a, b) {
                        assert!(is_minimal(&build_pair(&spec).unwrap().e).unwrap(), "{spec}");
                    }
                }
            }
        }
    }

    #[test]
    fn small_enumeration_is_deduplicated_soundly() {
        for ell in [5, 7] {
            let reps = enumerate_representatives(ell, 10, Exec::Sequential).unwrap();
            let keys: HashSet<_> = reps
                .iter()
                .map(|r| {
                    let pair = build_pair(&r.spec).unwrap();
                    reduced_minimal_model(&pair.e).unwrap()
                })
                .collect();
            assert_eq!(keys.len(), reps.len());
            // Every coprime pair maps onto some representative.
            let family = family_of(ell).unwrap();
            for a in 1..10u64 {
                for b in 1..(10 - a) {
                    if a.gcd(&b) != 1 || excluded(family, a, b, FifthPowers::Exclude) {
                        continue;
                    }
                    let spec = ParamSpec::of(family, a as i64, b as i64).unwrap();
                    let m = reduced_minimal_model(&build_pair(&spec).unwrap().e).unwrap();
                    assert!(keys.contains(&m));
                }
            }
        }
        let five = enumerate_representatives(5, 3, Exec::Sequential).unwrap();
        assert!(five.is_empty(), "(1,1) has ab = 1^5 and is excluded");
    }

    #[test]
    fn sum_bound_is_conservative() {
        for (ell, x) in [(5u32, 3.0), (7, 9.0)] {
            let bound = sum_bound(ell, x).unwrap();
            let (inside, _) = admitted_pairs(ell, x, bound * 2, FifthPowers::Include, Exec::Sequential).unwrap();
            assert!(inside.iter().all(|(a, b)| a + b < bound));
        }
    }
}
