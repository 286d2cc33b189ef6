use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::{q, IsomorphismData, WeierstrassModel};
use crate::arith::{factorize, valuation, Valuation};
use crate::{Error, Result};

/// Whether integral `(c4, c6)` come from an integral model (Kraus's conditions
/// at 2 and 3; every other prime imposes nothing).
fn kraus(c4: &BigInt, c6: &BigInt) -> bool {
    let v3 = valuation(c6, &BigInt::from(3));
    if v3 == Valuation::Finite(2) {
        return false;
    }
    let m4 = c6.mod_floor(&BigInt::from(4));
    if m4 == BigInt::from(3) {
        return true;
    }
    let m32 = c6.mod_floor(&BigInt::from(32));
    valuation(c4, &BigInt::from(2)).at_least(4) && (m32.is_zero() || m32 == BigInt::from(8))
}

/// The reduced model (`a1, a3` in {0,1}, `a2` in {-1,0,1}) with the given
/// invariants. The invariants must satisfy Kraus's conditions.
pub fn reduced_from_c4c6(c4: &BigInt, c6: &BigInt) -> WeierstrassModel {
    let twelve = BigInt::from(12);
    let mut b2 = (-c6).mod_floor(&twelve);
    if b2 > BigInt::from(6) {
        b2 -= &twelve;
    }
    let b4: BigInt = (&b2 * &b2 - c4) / 24;
    let b6: BigInt = (-(&b2 * &b2 * &b2) + 36 * &b2 * &b4 - c6) / 216;
    let a1 = b2.mod_floor(&BigInt::from(2));
    let a2 = (&b2 - &a1) / 4;
    let a3 = b6.mod_floor(&BigInt::from(2));
    let a4 = (&b4 - &a1 * &a3) / 2;
    let a6 = (&b6 - &a3) / 4;
    WeierstrassModel::from_ints([a1, a2, a3, a4, a6])
}

/// Denominator-clearing scale `D` (so `D^i a_i` is integral) for a rational model.
fn clearing_denominator(m: &WeierstrassModel) -> BigInt {
    m.coefficients()
        .iter()
        .fold(BigInt::one(), |acc, a| acc.lcm(a.denom()))
}

/// Integer `U` such that `c4 / U^4`, `c6 / U^6` are the invariants of a
/// minimal model, for integral invariants of some integral model.
pub fn minimal_scaling(c4: &BigInt, c6: &BigInt, disc: &BigInt) -> Result<BigInt> {
    let g = c4.gcd(c6);
    if g.is_zero() {
        return Err(Error::Singular);
    }
    let mut u = BigInt::one();
    let (mut c4, mut c6) = (c4.clone(), c6.clone());
    for (p, _) in factorize(&g)?.factors() {
        let v4 = valuation(&c4, p).finite().unwrap_or(u32::MAX) / 4;
        let v6 = valuation(&c6, p).finite().unwrap_or(u32::MAX) / 6;
        let vd = valuation(disc, p).finite().expect("nonzero discriminant") / 12;
        let mut d = v4.min(v6).min(vd);
        while d > 0 {
            let pd = p.pow(d);
            let cand4 = &c4 / pd.pow(4);
            let cand6 = &c6 / pd.pow(6);
            if *p > BigInt::from(3) || kraus(&cand4, &cand6) {
                break;
            }
            d -= 1;
        }
        if d > 0 {
            let pd = p.pow(d);
            c4 /= pd.pow(4);
            c6 /= pd.pow(6);
            u *= pd;
        }
    }
    Ok(u)
}

/// Globally minimal integral model and the change of variables reaching it.
///
/// An already minimal integral input is returned unchanged. If a pure scaling
/// `[u,0,0,0]` reaches an integral model, that image is returned; otherwise the
/// reduced minimal model is.
pub fn minimal_model(m: &WeierstrassModel) -> Result<(WeierstrassModel, IsomorphismData)> {
    let inv = m.invariants()?;
    let d = clearing_denominator(m);
    let dq = q(d.clone());
    let c4 = (&inv.c4 * dq.pow(4)).to_integer();
    let c6 = (&inv.c6 * dq.pow(6)).to_integer();
    let disc = (&inv.discriminant * dq.pow(12)).to_integer();
    let big_u = minimal_scaling(&c4, &c6, &disc)?;
    let u = BigRational::new(big_u.clone(), d);
    if u.is_one() && m.is_integral() {
        return Ok((m.clone(), IsomorphismData::identity()));
    }
    let scale = IsomorphismData::scaling(u.clone())?;
    let scaled = scale.apply(m);
    if scaled.is_integral() {
        return Ok((scaled, scale));
    }
    let c4m = &c4 / big_u.pow(4);
    let c6m = &c6 / big_u.pow(6);
    let target = reduced_from_c4c6(&c4m, &c6m);
    let iso = solve_isomorphism(m, &target, &u)?;
    Ok((target, iso))
}

/// The `[u, r, s, w]` carrying `m` to `target`, given `u`.
fn solve_isomorphism(
    m: &WeierstrassModel,
    target: &WeierstrassModel,
    u: &BigRational,
) -> Result<IsomorphismData> {
    let two = q(2);
    let s = (u * &target.a1 - &m.a1) / &two;
    let r = (u * u * &target.a2 - &m.a2 + &s * &m.a1 + &s * &s) / q(3);
    let w = (u * u * u * &target.a3 - &m.a3 - &r * &m.a1) / &two;
    let iso = IsomorphismData::new(u.clone(), r, s, w)?;
    if iso.apply(m) != *target {
        return Err(Error::Inconsistent(format!(
            "no isomorphism from {m} to {target} with u = {u}"
        )));
    }
    Ok(iso)
}

/// The unique reduced minimal model of the curve.
pub fn reduced_minimal_model(m: &WeierstrassModel) -> Result<WeierstrassModel> {
    let inv = m.invariants()?;
    let d = q(clearing_denominator(m));
    let c4 = (&inv.c4 * d.pow(4)).to_integer();
    let c6 = (&inv.c6 * d.pow(6)).to_integer();
    let disc = (&inv.discriminant * d.pow(12)).to_integer();
    let u = minimal_scaling(&c4, &c6, &disc)?;
    Ok(reduced_from_c4c6(&(&c4 / u.pow(4)), &(&c6 / u.pow(6))))
}

/// Whether an integral model is globally minimal.
pub fn is_minimal(m: &WeierstrassModel) -> Result<bool> {
    if !m.is_integral() {
        return Ok(false);
    }
    let inv = m.invariants()?;
    let u = minimal_scaling(
        &inv.c4.to_integer(),
        &inv.c6.to_integer(),
        &inv.discriminant.to_integer(),
    )?;
    Ok(u.abs().is_one())
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};

    fn frac(n: i64, d: i64) -> BigRational {
        BigRational::new(BigInt::from(n), BigInt::from(d))
    }

    #[test]
    fn x1_11_is_reduced() {
        let e = WeierstrassModel::from_ints([0, -1, 1, 0, 0]);
        assert_eq!(reduced_minimal_model(&e).unwrap(), e);
        let (m, iso) = minimal_model(&e).unwrap();
        assert_eq!(m, e);
        assert_eq!(iso, IsomorphismData::identity());
    }

    #[test]
    fn c5_member_reduces_to_x1_11() {
        // y^2 + 0xy - y = x^3 - x^2 : the a = b = 1 member with a3 = -1.
        let e = WeierstrassModel::from_ints([0, -1, -1, 0, 0]);
        assert_eq!(
            reduced_minimal_model(&e).unwrap(),
            WeierstrassModel::from_ints([0, -1, 1, 0, 0])
        );
    }

    #[test]
    fn scaling_is_undone() {
        let base = WeierstrassModel::from_ints([0, 0, 0, 1, 0]);
        let blown = IsomorphismData::scaling(frac(1, 2)).unwrap().apply(&base);
        assert_eq!(blown, WeierstrassModel::from_ints([0, 0, 0, 16, 0]));
        let (m, iso) = minimal_model(&blown).unwrap();
        assert_eq!(m, base);
        assert_eq!(iso.apply(&blown), m);
    }

    #[test]
    fn rational_input() {
        let base = WeierstrassModel::from_ints([1, -1, 1, -3, 7]);
        let iso = IsomorphismData::new(frac(5, 3), frac(1, 2), q(3), frac(-7, 5)).unwrap();
        let moved = iso.apply(&base);
        assert!(!moved.is_integral());
        let (m, back) = minimal_model(&moved).unwrap();
        assert!(m.is_integral());
        assert_eq!(back.apply(&moved), m);
        assert_eq!(reduced_minimal_model(&moved).unwrap(), reduced_minimal_model(&base).unwrap());
        assert_eq!(m.invariants().unwrap().j, base.invariants().unwrap().j);
    }

    #[test]
    fn reduction_is_isomorphism_invariant() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        let curves = [
            [0, -1, 1, 0, 0],
            [1, -1, 0, -123, -667],
            [0, 0, 1, -270, -1708],
            [1, 0, 1, 4, -6],
            [0, 0, 0, -1, 0],
            [1, 1, 1, -10, -10],
        ];
        for a in curves {
            let base = WeierstrassModel::from_ints(a);
            let red = reduced_minimal_model(&base).unwrap();
            assert_eq!(reduced_minimal_model(&red).unwrap(), red);
            for _ in 0..20 {
                let u = [q(1), q(2), q(3), frac(1, 2), q(-1)][rng.gen_range(0..5)].clone();
                let iso = IsomorphismData::new(
                    u,
                    q(rng.gen_range(-20..20)),
                    q(rng.gen_range(-20..20)),
                    q(rng.gen_range(-20..20)),
                )
                .unwrap();
                assert_eq!(reduced_minimal_model(&iso.apply(&base)).unwrap(), red);
            }
        }
    }
}
