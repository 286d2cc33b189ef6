use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use super::q;
use crate::arith::{valuation, Valuation};
use crate::{Error, Result};

/// `y^2 + a1 xy + a3 y = x^3 + a2 x^2 + a4 x + a6` with rational coefficients.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct WeierstrassModel {
    pub a1: BigRational,
    pub a2: BigRational,
    pub a3: BigRational,
    pub a4: BigRational,
    pub a6: BigRational,
}

/// The standard quantities attached to a model.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Invariants {
    pub b2: BigRational,
    pub b4: BigRational,
    pub b6: BigRational,
    pub b8: BigRational,
    pub c4: BigRational,
    pub c6: BigRational,
    pub discriminant: BigRational,
    pub j: BigRational,
}

/// `(v_p(c4), v_p(c6), v_p(Δ))`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Signature {
    pub c4: Valuation,
    pub c6: Valuation,
    pub disc: Valuation,
}

impl fmt::Display for Signature {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {}, {})", self.c4, self.c6, self.disc)
    }
}

impl WeierstrassModel {
    pub fn new(
        a1: BigRational,
        a2: BigRational,
        a3: BigRational,
        a4: BigRational,
        a6: BigRational,
    ) -> Self {
        WeierstrassModel { a1, a2, a3, a4, a6 }
    }

    pub fn from_ints<T: Into<BigInt>>(a: [T; 5]) -> Self {
        let [a1, a2, a3, a4, a6] = a;
        WeierstrassModel::new(q(a1), q(a2), q(a3), q(a4), q(a6))
    }

    pub fn coefficients(&self) -> [&BigRational; 5] {
        [&self.a1, &self.a2, &self.a3, &self.a4, &self.a6]
    }

    pub fn is_integral(&self) -> bool {
        self.coefficients().iter().all(|a| a.is_integer())
    }

    /// Integer coefficients, when every coefficient is integral.
    pub fn integral_coefficients(&self) -> Option<[BigInt; 5]> {
        if !self.is_integral() {
            return None;
        }
        Some(self.coefficients().map(|a| a.to_integer()))
    }

    /// b2, b4, b6, b8, c4, c6 and Δ without the singularity check.
    pub fn raw_invariants(&self) -> (BigRational, BigRational, BigRational, BigRational, BigRational, BigRational, BigRational) {
        let (a1, a2, a3, a4, a6) = (&self.a1, &self.a2, &self.a3, &self.a4, &self.a6);
        let b2 = a1 * a1 + q(4) * a2;
        let b4 = q(2) * a4 + a1 * a3;
        let b6 = a3 * a3 + q(4) * a6;
        let b8 = a1 * a1 * a6 + q(4) * a2 * a6 - a1 * a3 * a4 + a2 * a3 * a3 - a4 * a4;
        let c4 = &b2 * &b2 - q(24) * &b4;
        let c6 = -(&b2 * &b2 * &b2) + q(36) * &b2 * &b4 - q(216) * &b6;
        let disc = -(&b2 * &b2 * &b8) - q(8) * &b4 * &b4 * &b4 - q(27) * &b6 * &b6
            + q(9) * &b2 * &b4 * &b6;
        (b2, b4, b6, b8, c4, c6, disc)
    }

    pub fn discriminant(&self) -> BigRational {
        self.raw_invariants().6
    }

    pub fn invariants(&self) -> Result<Invariants> {
        let (b2, b4, b6, b8, c4, c6, discriminant) = self.raw_invariants();
        if discriminant.is_zero() {
            return Err(Error::Singular);
        }
        let j = &c4 * &c4 * &c4 / &discriminant;
        Ok(Invariants {
            b2,
            b4,
            b6,
            b8,
            c4,
            c6,
            discriminant,
            j,
        })
    }

    /// Whether `(x, y)` satisfies the equation.
    pub fn contains(&self, x: &BigRational, y: &BigRational) -> bool {
        let lhs = y * y + &self.a1 * x * y + &self.a3 * y;
        let rhs = x * x * x + &self.a2 * x * x + &self.a4 * x + &self.a6;
        lhs == rhs
    }
}

impl fmt::Display for WeierstrassModel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [a1, a2, a3, a4, a6] = self.coefficients();
        write!(f, "[{a1}, {a2}, {a3}, {a4}, {a6}]")
    }
}

/// p-adic signature of an integral model. The prime must be at least 2.
pub fn signature(m: &WeierstrassModel, p: &BigInt) -> Result<Signature> {
    if !m.is_integral() {
        return Err(Error::InvalidArgument(
            "signature requires an integral model".into(),
        ));
    }
    if *p <= BigInt::one() {
        return Err(Error::InvalidArgument(format!("{p} is not a prime")));
    }
    let inv = m.invariants()?;
    Ok(Signature {
        c4: valuation(&inv.c4.to_integer(), p),
        c6: valuation(&inv.c6.to_integer(), p),
        disc: valuation(&inv.discriminant.to_integer(), p),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn invariants_of_j_zero_curve() {
        let inv = WeierstrassModel::from_ints([0, 0, 1, 0, 0]).invariants().unwrap();
        assert_eq!(inv.c4, q(0));
        assert_eq!(inv.c6, q(-216));
        assert_eq!(inv.discriminant, q(-27));
        assert_eq!(inv.j, q(0));
    }

    #[test]
    fn invariants_of_x1_11() {
        let inv = WeierstrassModel::from_ints([0, -1, 1, 0, 0]).invariants().unwrap();
        assert_eq!(inv.c4, q(16));
        assert_eq!(inv.c6, q(-152));
        assert_eq!(inv.discriminant, q(-11));
        assert_eq!(q(1728) * &inv.discriminant, inv.c4.pow(3) - inv.c6.pow(2));
        assert_eq!(q(4) * &inv.b8, &inv.b2 * &inv.b6 - inv.b4.pow(2));
    }

    #[test]
    fn singular_rejected() {
        let m = WeierstrassModel::from_ints([0, 0, 0, 0, 0]);
        assert_eq!(m.invariants(), Err(Error::Singular));
    }

    #[test]
    fn signatures() {
        let e = WeierstrassModel::from_ints([0, -1, 1, 0, 0]);
        let s = signature(&e, &BigInt::from(11)).unwrap();
        assert_eq!(
            (s.c4, s.c6, s.disc),
            (Valuation::Finite(0), Valuation::Finite(0), Valuation::Finite(1))
        );
        let s = signature(&e, &BigInt::from(5)).unwrap();
        assert_eq!(s.disc, Valuation::Finite(0));
        // y^2 + 3y = x^3 - 63, the quotient of y^2 + 3y = x^3 by its 3-torsion.
        let t = WeierstrassModel::from_ints([0, 0, 3, 0, -63]);
        let s = signature(&t, &BigInt::from(3)).unwrap();
        assert_eq!(s.to_string(), "(inf, 8, 13)");
        let half = WeierstrassModel::new(q(0), q(0), q(0), BigRational::new(1.into(), 2.into()), q(0));
        assert!(signature(&half, &BigInt::from(3)).is_err());
    }
}
