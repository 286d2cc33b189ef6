//! Row conditions of the local table. Every row is evaluated independently so
//! that overlapping conditions are detected rather than hidden by ordering.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};

use super::rules::Rule::{self, *};
use crate::arith::{cube_decompose, legendre, valuation, Valuation};
use crate::parametric::{Family, ParamSpec};
use crate::{Error, Result};

fn big(n: i64) -> BigInt {
    BigInt::from(n)
}

fn val(n: &BigInt, p: &BigInt) -> u32 {
    match valuation(n, p) {
        Valuation::Finite(v) => v,
        Valuation::Infinite => u32::MAX,
    }
}

/// `c_p` of a nonsplit multiplicative fibre `I_n`: 1 for odd `n`, 2 for even.
fn nonsplit(n: u32) -> u32 {
    if n % 2 == 1 {
        1
    } else {
        2
    }
}

fn p_mod6_is_one(p: &BigInt) -> bool {
    p.mod_floor(&big(6)).is_one()
}

type Hit = (Rule, u32, u32);

/// All rows whose conditions hold for `spec` at `p`. `spec` must already be
/// normalized for the five- and seven-torsion families.
pub(super) fn matching_rows(spec: &ParamSpec, p: &BigInt) -> Result<Vec<Hit>> {
    let (a, b) = (&spec.a, &spec.b);
    let mut hits: Vec<Hit> = Vec::new();
    let three = big(3);
    match spec.family {
        Family::C3Zero => {
            if *p != three {
                if val(a, p) > 0 {
                    hits.push(if p_mod6_is_one(p) {
                        (C30PowerSplit, 3, 3)
                    } else {
                        (C30PowerNonsplit, 3, 1)
                    });
                }
            } else {
                let r = a.mod_floor(&big(9)).to_u32().unwrap_or(0);
                hits.push(match r {
                    1 | 8 => (C30NineOne, 1, 3),
                    2 | 7 => (C30NineTwo, 2, 2),
                    4 | 5 => (C30NineFour, 1, 1),
                    _ => (C30ThreeDividesA, 3, 1),
                });
            }
        }
        Family::C3 => c3_rows(a, b, p, &mut hits)?,
        Family::C5 => {
            let n = val(&(a * b), p);
            if n > 0 {
                hits.push((C5DividesAB, 5 * n, n));
            }
            let f = a * a + 11 * a * b - b * b;
            if *p >= big(7) {
                let n = val(&f, p);
                if n > 0 {
                    let g = -5 * (a * a + b * b);
                    hits.push(match legendre(&g, p)? {
                        1 => (C5FormSplit, n, 5 * n),
                        _ => (C5FormNonsplit, nonsplit(n), nonsplit(n)),
                    });
                }
            }
            if *p == big(5) {
                match val(&(a + 18 * b), p) {
                    0 => {}
                    1 => hits.push((C5FiveOnce, 1, 1)),
                    _ => hits.push((C5FiveTwice, 2, 2)),
                }
            }
        }
        Family::C7 => {
            let n = val(&(a * b * (a - b)), p);
            if n > 0 {
                hits.push((C7DividesN, 7 * n, n));
            }
            if *p >= big(13) {
                let f: BigInt = a.pow(3) + 5 * a * a * b - 8 * a * b * b + b.pow(3);
                let n = val(&f, p);
                if n > 0 {
                    let g = -7 * (a * a - a * b + b * b);
                    hits.push(match legendre(&g, p)? {
                        1 => (C7FormSplit, n, 7 * n),
                        _ => (C7FormNonsplit, nonsplit(n), nonsplit(n)),
                    });
                }
            }
            if *p == big(7) && val(&(a + 4 * b), p) >= 1 {
                hits.push((C7Seven, 1, 1));
            }
        }
    }
    Ok(hits)
}

fn c3_rows(a: &BigInt, b: &BigInt, p: &BigInt, hits: &mut Vec<Hit>) -> Result<()> {
    let three = big(3);
    let line = a - 27 * b;
    let vb = val(b, p);
    if vb > 0 {
        hits.push((C3DividesB, 3 * vb, vb));
    }
    let va = val(a, p);
    let w = val(&line, p);
    if *p != three {
        if w > 0 {
            hits.push(if p_mod6_is_one(p) {
                (C3LineSplit, w, 3 * w)
            } else {
                (C3LineNonsplit, nonsplit(w), nonsplit(w))
            });
        }
        if va % 3 != 0 {
            hits.push(if p_mod6_is_one(p) {
                (C3CubeSplit, 3, 3)
            } else {
                (C3CubeNonsplit, 3, 1)
            });
        }
        return Ok(());
    }

    let cde = cube_decompose(a)?;
    let (c, d, e) = (&cde.c, &cde.d, &cde.e);
    let nine = big(9);
    let t = (b * d * d * e.pow(3) * (b.pow(3) * d * d * e.pow(5) - c)).mod_floor(&nine);
    let seven = t == big(7);
    let sym = |x: BigInt| legendre(&x, &three);

    if w == 4 {
        hits.push((C3ThreeLineFour, 1, 1));
    }
    if va == 3 && w == 3 && !seven {
        let x: BigInt = -b * (4 * a + 27 * b);
        let (q, r) = x.div_rem(&big(81));
        if !r.is_zero() {
            return Err(Error::Inconsistent(format!("81 does not divide {x}")));
        }
        hits.push(match sym(q)? {
            1 => (C3ThreeValThreeSquare, 1, 3),
            _ => (C3ThreeValThreeNonsquare, 1, 1),
        });
    }
    if va >= 6 && va % 3 == 0 && w == 3 && !seven {
        let x: BigInt = 4 - b * b * d * d * e.pow(4);
        let (q, r) = x.div_rem(&three);
        if !r.is_zero() {
            return Err(Error::Inconsistent(format!("3 does not divide {x}")));
        }
        hits.push(match sym(q)? {
            1 => (C3ThreeValSixSquare, 1, 3),
            _ => (C3ThreeValSixNonsquare, 1, 1),
        });
    }
    if va % 3 == 0 && w == 3 && seven {
        hits.push((C3ThreeSeven, 2, 2));
    }
    if va == 2 {
        hits.push(match sym(-b * c * e)? {
            1 => (C3ThreeValTwoSquare, 3, 3),
            _ => (C3ThreeValTwoNonsquare, 3, 1),
        });
    }
    if va % 3 == 2 && va != 2 {
        hits.push((C3ThreeValTwoMod3, 3, 1));
    }
    let prod = a * &line;
    let congruent = |k: u32| prod.mod_floor(&three.pow(k + 1)) == three.pow(k);
    if w == 5 {
        hits.push(if congruent(8) {
            (C3ThreeLineFiveSpecial, 3, 1)
        } else {
            (C3ThreeLineFiveGeneric, 1, 1)
        });
    }
    if w == 6 {
        hits.push(if congruent(9) {
            (C3ThreeLineSixSpecial, 1, 1)
        } else {
            (C3ThreeLineSixGeneric, 2, 2)
        });
    }
    if w >= 7 {
        let n = w - 6;
        hits.push(if congruent(9 + n) {
            (C3ThreeLineHighSpecial, 4, 4)
        } else {
            (C3ThreeLineHighGeneric, 2, 2)
        });
    }
    if va % 3 == 1 {
        hits.push((C3ThreeValOneMod3, 3, 1));
    }
    Ok(())
}
