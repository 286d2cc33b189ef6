use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

use crate::curve::{q, WeierstrassModel};
use crate::{Error, Result};

/// A rational point in affine coordinates, or the point at infinity.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Point {
    Infinity,
    Affine(BigRational, BigRational),
}

impl Point {
    pub fn from_ints(x: impl Into<BigInt>, y: impl Into<BigInt>) -> Point {
        Point::Affine(q(x), q(y))
    }

    pub fn neg(&self, m: &WeierstrassModel) -> Point {
        match self {
            Point::Infinity => Point::Infinity,
            Point::Affine(x, y) => Point::Affine(x.clone(), -y - &m.a1 * x - &m.a3),
        }
    }

    /// Chord-and-tangent addition.
    pub fn add(&self, other: &Point, m: &WeierstrassModel) -> Point {
        let (x1, y1, x2, y2) = match (self, other) {
            (Point::Infinity, p) | (p, Point::Infinity) => return p.clone(),
            (Point::Affine(x1, y1), Point::Affine(x2, y2)) => (x1, y1, x2, y2),
        };
        let lambda = if x1 == x2 {
            let denom = q(2) * y1 + &m.a1 * x1 + &m.a3;
            if y1 + y2 + &m.a1 * x2 + &m.a3 == q(0) || denom.is_zero() {
                return Point::Infinity;
            }
            (q(3) * x1 * x1 + q(2) * &m.a2 * x1 + &m.a4 - &m.a1 * y1) / denom
        } else {
            (y2 - y1) / (x2 - x1)
        };
        let nu = y1 - &lambda * x1;
        let x3 = &lambda * &lambda + &m.a1 * &lambda - &m.a2 - x1 - x2;
        let y3 = -(&lambda + &m.a1) * &x3 - &nu - &m.a3;
        Point::Affine(x3, y3)
    }

    pub fn multiple(&self, k: u32, m: &WeierstrassModel) -> Point {
        let mut acc = Point::Infinity;
        for _ in 0..k {
            acc = acc.add(self, m);
        }
        acc
    }
}

/// Exact order of `p` when it is at most 12 (the largest possible rational
/// torsion order); `None` otherwise.
pub fn torsion_point_order(m: &WeierstrassModel, p: &Point) -> Result<Option<u32>> {
    if let Point::Affine(x, y) = p {
        if !m.contains(x, y) {
            return Err(Error::InvalidArgument("point is not on the curve".into()));
        }
    }
    let mut acc = p.clone();
    for k in 1..=12u32 {
        if acc == Point::Infinity {
            return Ok(Some(k));
        }
        acc = acc.add(p, m);
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn orders() {
        let x1 = WeierstrassModel::from_ints([0, -1, 1, 0, 0]);
        assert_eq!(torsion_point_order(&x1, &Point::from_ints(0, 0)).unwrap(), Some(5));
        let j0 = WeierstrassModel::from_ints([0, 0, 1, 0, 0]);
        assert_eq!(torsion_point_order(&j0, &Point::from_ints(0, 0)).unwrap(), Some(3));
        let tilde = WeierstrassModel::from_ints([1, 0, 1, -5, -8]);
        assert_eq!(torsion_point_order(&tilde, &Point::from_ints(4, 4)).unwrap(), Some(3));
        assert!(torsion_point_order(&tilde, &Point::from_ints(1, 1)).is_err());
        // (0,0) on y^2 + y = x^3 - x has infinite order.
        let rank1 = WeierstrassModel::from_ints([0, 0, 1, -1, 0]);
        assert_eq!(torsion_point_order(&rank1, &Point::from_ints(0, 0)).unwrap(), None);
    }

    #[test]
    fn group_law_is_associative_on_samples() {
        let m = WeierstrassModel::from_ints([0, 0, 1, -7, 6]);
        let p = Point::from_ints(0, 2);
        let r = Point::from_ints(1, 0);
        let s = Point::from_ints(2, 0);
        let lhs = p.add(&r, &m).add(&s, &m);
        let rhs = p.add(&r.add(&s, &m), &m);
        assert_eq!(lhs, rhs);
        assert_eq!(p.add(&p.neg(&m), &m), Point::Infinity);
    }
}
