use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed};

use super::families::{e_tilde_closed_form, Family, ParamSpec};
use crate::arith::{exact_root, is_kth_power_free};
use crate::{Error, Result};

/// A rational point of order 3 on `Ẽ_C3(a,b)`, present exactly when `a` and
/// `b` are both cubes `s^3`, `t^3`; it is `(s^4 t (s + 3t), 4 s^6 t^3)`.
pub fn tilde_c3_torsion(a: &BigInt, b: &BigInt) -> Result<Option<(BigInt, BigInt)>> {
    let spec = ParamSpec::new(Family::C3, a.clone(), b.clone())?;
    let (Some(s), Some(t)) = (exact_root(a, 3), exact_root(b, 3)) else {
        return Ok(None);
    };
    let x: BigInt = s.pow(4) * &t * (&s + 3 * &t);
    let y: BigInt = 4 * s.pow(6) * t.pow(3);
    debug_assert!(e_tilde_closed_form(&spec).contains(&crate::curve::q(x.clone()), &crate::curve::q(y.clone())));
    Ok(Some((x, y)))
}

/// A rational point of order 3 on `Ẽ_C3^0(a)`: on `y^2 + a y = x^3 - 7a^2`
/// the 3-division polynomial is `x (x^3 - 27 a^2)`, so a point exists exactly
/// when `27 a^2` is a cube, which for cubefree `a` means `a = 1`.
pub fn tilde_c30_torsion(a: &BigInt) -> Result<Option<(BigInt, BigInt)>> {
    if !a.is_positive() || !is_kth_power_free(a, 3)? {
        return Err(Error::InvalidArgument(format!("{a} is not a positive cubefree integer")));
    }
    let Some(x) = exact_root(&(27 * a * a), 3) else {
        return Ok(None);
    };
    // y^2 + a y - 20 a^2 = 0 has roots 4a and -5a.
    debug_assert!(x.is_positive() && a.is_one() || a.gcd(&x) > BigInt::one());
    Ok(Some((x, 4 * a)))
}
