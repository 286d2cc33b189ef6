use num_rational::BigRational;
use num_traits::{One, Zero};

use super::{q, WeierstrassModel};
use crate::{Error, Result};

/// The change of variables `x = u^2 x' + r`, `y = u^3 y' + u^2 s x' + w`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IsomorphismData {
    pub u: BigRational,
    pub r: BigRational,
    pub s: BigRational,
    pub w: BigRational,
}

impl IsomorphismData {
    pub fn new(u: BigRational, r: BigRational, s: BigRational, w: BigRational) -> Result<Self> {
        if u.is_zero() {
            return Err(Error::InvalidArgument("isomorphism with u = 0".into()));
        }
        Ok(IsomorphismData { u, r, s, w })
    }

    pub fn from_ints(u: i64, r: i64, s: i64, w: i64) -> Result<Self> {
        Self::new(q(u), q(r), q(s), q(w))
    }

    pub fn identity() -> Self {
        IsomorphismData {
            u: BigRational::one(),
            r: BigRational::zero(),
            s: BigRational::zero(),
            w: BigRational::zero(),
        }
    }

    pub fn scaling(u: BigRational) -> Result<Self> {
        Self::new(u, q(0), q(0), q(0))
    }

    /// The map that first applies `self`, then `next`.
    pub fn then(&self, next: &IsomorphismData) -> IsomorphismData {
        let (u1, r1, s1, w1) = (&self.u, &self.r, &self.s, &self.w);
        let (u2, r2, s2, w2) = (&next.u, &next.r, &next.s, &next.w);
        let u1sq = u1 * u1;
        IsomorphismData {
            u: u1 * u2,
            r: r1 + &u1sq * r2,
            s: s1 + u1 * s2,
            w: w1 + &u1sq * s1 * r2 + &u1sq * u1 * w2,
        }
    }

    pub fn inverse(&self) -> IsomorphismData {
        let (u, r, s, w) = (&self.u, &self.r, &self.s, &self.w);
        let usq = u * u;
        IsomorphismData {
            u: u.recip(),
            r: -r / &usq,
            s: -s / u,
            w: (r * s - w) / (&usq * u),
        }
    }

    /// Image of `m` under this change of variables.
    pub fn apply(&self, m: &WeierstrassModel) -> WeierstrassModel {
        let (u, r, s, t) = (&self.u, &self.r, &self.s, &self.w);
        let (a1, a2, a3, a4, a6) = (&m.a1, &m.a2, &m.a3, &m.a4, &m.a6);
        let u2 = u * u;
        let u3 = &u2 * u;
        let u4 = &u2 * &u2;
        let u6 = &u3 * &u3;
        WeierstrassModel {
            a1: (a1 + q(2) * s) / u,
            a2: (a2 - s * a1 + q(3) * r - s * s) / &u2,
            a3: (a3 + r * a1 + q(2) * t) / &u3,
            a4: (a4 - s * a3 + q(2) * r * a2 - (t + r * s) * a1 + q(3) * r * r - q(2) * s * t) / &u4,
            a6: (a6 + r * a4 + r * r * a2 + r * r * r - t * a3 - t * t - r * t * a1) / &u6,
        }
    }
}

impl WeierstrassModel {
    pub fn change_of_variables(&self, iso: &IsomorphismData) -> WeierstrassModel {
        iso.apply(self)
    }
}
