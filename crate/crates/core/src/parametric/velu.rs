use super::points::{torsion_point_order, Point};
use crate::curve::{q, WeierstrassModel};
use crate::{Error, Result};

/// Quotient of `m` by the subgroup generated by `p`, of odd prime order `l`,
/// in Vélu's normalization: `a1, a2, a3` are kept and `a4, a6` are modified.
pub fn velu_quotient(m: &WeierstrassModel, p: &Point, l: u32) -> Result<WeierstrassModel> {
    if l < 3 || l % 2 == 0 {
        return Err(Error::InvalidArgument(format!("{l} is not an odd prime")));
    }
    if torsion_point_order(m, p)? != Some(l) {
        return Err(Error::InvalidArgument(format!("point does not have order {l}")));
    }
    let (a1, a2, a3, a4) = (&m.a1, &m.a2, &m.a3, &m.a4);
    let b2 = a1 * a1 + q(4) * a2;
    let mut v = q(0);
    let mut w = q(0);
    // The non-zero multiples come in pairs {kP, -kP} sharing x; one of each suffices.
    let mut acc = Point::Infinity;
    for _ in 0..(l - 1) / 2 {
        acc = acc.add(p, m);
        let Point::Affine(x, y) = &acc else {
            unreachable!("multiples below the order are affine")
        };
        let gx = q(3) * x * x + q(2) * a2 * x + a4 - a1 * y;
        let gy = q(-2) * y - a1 * x - a3;
        let vq = q(2) * &gx - a1 * &gy;
        let uq = &gy * &gy;
        w += uq + x * &vq;
        v += vq;
    }
    Ok(WeierstrassModel::new(
        a1.clone(),
        a2.clone(),
        a3.clone(),
        a4 - q(5) * &v,
        &m.a6 - b2 * &v - q(7) * &w,
    ))
}
