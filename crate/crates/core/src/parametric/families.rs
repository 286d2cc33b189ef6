use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use super::points::Point;
use super::velu::velu_quotient;
use crate::arith::is_kth_power_free;
use crate::curve::{q, WeierstrassModel};
use crate::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Family {
    /// 3-torsion, `j != 0` (plus the single `j = 0` member `(24, 1)`).
    C3,
    /// 3-torsion with `j = 0`, one parameter.
    C3Zero,
    C5,
    C7,
}

impl Family {
    /// Order of the marked point `(0,0)`.
    pub fn ell(self) -> u32 {
        match self {
            Family::C3 | Family::C3Zero => 3,
            Family::C5 => 5,
            Family::C7 => 7,
        }
    }

    pub fn has_b(self) -> bool {
        self != Family::C3Zero
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Family::C3 => "C3",
            Family::C3Zero => "C3^0",
            Family::C5 => "C5",
            Family::C7 => "C7",
        })
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Family> {
        match s.to_ascii_uppercase().as_str() {
            "C3" => Ok(Family::C3),
            "C30" | "C3^0" | "C3_0" | "C3⁰" | "C3ZERO" => Ok(Family::C3Zero),
            "C5" => Ok(Family::C5),
            "C7" => Ok(Family::C7),
            _ => Err(Error::InvalidArgument(format!("unknown family {s:?}"))),
        }
    }
}

/// A family together with admissible parameters.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ParamSpec {
    pub family: Family,
    pub a: BigInt,
    /// Zero for the one-parameter family.
    pub b: BigInt,
}

impl fmt::Display for ParamSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.family.has_b() {
            write!(f, "{}({}, {})", self.family, self.a, self.b)
        } else {
            write!(f, "{}({})", self.family, self.a)
        }
    }
}

impl ParamSpec {
    /// Validates positivity, coprimality, cubefreeness (one-parameter family)
    /// and non-degeneracy.
    pub fn new(family: Family, a: impl Into<BigInt>, b: impl Into<BigInt>) -> Result<ParamSpec> {
        let a = a.into();
        let b = if family.has_b() { b.into() } else { BigInt::zero() };
        if !a.is_positive() {
            return Err(Error::InvalidArgument(format!("parameter a = {a} must be positive")));
        }
        if family == Family::C3Zero {
            if !is_kth_power_free(&a, 3)? {
                return Err(Error::InvalidArgument(format!("a = {a} is not cubefree")));
            }
        } else if !a.gcd(&b).is_one() {
            return Err(Error::InvalidArgument(format!("gcd({a}, {b}) != 1")));
        }
        let spec = ParamSpec { family, a, b };
        spec.check_nondegenerate()?;
        Ok(spec)
    }

    /// Shorthand for small parameters.
    pub fn of(family: Family, a: i64, b: i64) -> Result<ParamSpec> {
        ParamSpec::new(family, a, b)
    }

    pub fn ell(&self) -> u32 {
        self.family.ell()
    }

    fn check_nondegenerate(&self) -> Result<()> {
        let (a, b) = (&self.a, &self.b);
        let degenerate = match self.family {
            Family::C3Zero => a.is_zero(),
            Family::C3 => b.is_zero() || a.is_zero() || *a == BigInt::from(27) * b,
            Family::C5 => a.is_zero() || b.is_zero(),
            Family::C7 => a.is_zero() || b.is_zero() || a == b,
        };
        if degenerate {
            return Err(Error::DegenerateParameters(format!(
                "{} has zero discriminant",
                self
            )));
        }
        Ok(())
    }
}

/// `E_T(a,b)` from its `a1, a2, a3` (the other coefficients vanish).
pub fn e_model(spec: &ParamSpec) -> WeierstrassModel {
    let (a, b) = (&spec.a, &spec.b);
    let z = BigInt::zero();
    let [a1, a2, a3] = match spec.family {
        Family::C3Zero => [z.clone(), z.clone(), a.clone()],
        Family::C3 => [a.clone(), z.clone(), a * a * b],
        Family::C5 => [a - b, -(a * b), -(a * a * b)],
        Family::C7 => [
            a * a + a * b - b * b,
            a * a * b * b - a * b * b * b,
            a.pow(4) * b * b - a.pow(3) * b.pow(3),
        ],
    };
    WeierstrassModel::from_ints([a1, a2, a3, z.clone(), z])
}

/// `Ẽ_T(a,b)` from the closed-form coefficients.
pub fn e_tilde_closed_form(spec: &ParamSpec) -> WeierstrassModel {
    let e = e_model(spec);
    let (a, b) = (&spec.a, &spec.b);
    let (a4, a6): (BigInt, BigInt) = match spec.family {
        Family::C3Zero => (BigInt::zero(), -7 * a * a),
        Family::C3 => (-5 * a.pow(3) * b, -a.pow(4) * b * (a + 7 * b)),
        Family::C5 => (
            5 * a * b * (a * a - 2 * a * b - b * b),
            a * b * (a.pow(4) - 15 * a.pow(3) * b + 5 * a * a * b * b - 10 * a * b.pow(3) - b.pow(4)),
        ),
        Family::C7 => {
            let ab = a * b * (a - b);
            let g = a * a - a * b + b * b;
            let h = a.pow(3) - 5 * a * a * b + 2 * a * b * b + b.pow(3);
            let nonic = a.pow(9) - 18 * a.pow(8) * b + 76 * a.pow(7) * b.pow(2)
                - 182 * a.pow(6) * b.pow(3)
                + 211 * a.pow(5) * b.pow(4)
                - 132 * a.pow(4) * b.pow(5)
                + 70 * a.pow(3) * b.pow(6)
                - 37 * a.pow(2) * b.pow(7)
                + 9 * a * b.pow(8)
                + b.pow(9);
            (5 * &ab * g * h, ab * nonic)
        }
    };
    WeierstrassModel::new(e.a1, e.a2, e.a3, q(a4), q(a6))
}

/// `E_T` and its quotient by `<(0,0)>`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CurvePair {
    pub spec: ParamSpec,
    pub e: WeierstrassModel,
    pub e_tilde: WeierstrassModel,
}

/// Builds both curves; the quotient comes from Vélu's formulas and is checked
/// against the closed form.
pub fn build_pair(spec: &ParamSpec) -> Result<CurvePair> {
    spec.check_nondegenerate()?;
    let e = e_model(spec);
    if e.discriminant().is_zero() {
        return Err(Error::DegenerateParameters(format!("{spec} is singular")));
    }
    let e_tilde = velu_quotient(&e, &Point::from_ints(0, 0), spec.ell())?;
    if e_tilde != e_tilde_closed_form(spec) {
        return Err(Error::Inconsistent(format!(
            "quotient of {spec} disagrees with the closed form"
        )));
    }
    Ok(CurvePair {
        spec: spec.clone(),
        e,
        e_tilde,
    })
}

/// Equivalent parameters with `a > 0`, and also `b > 0` for `C5` and `C7`.
///
/// Negating both parameters gives an isomorphic curve in every family. For
/// `C5` a negative `b` is moved by `(a, b) -> (-b, a)` and for `C7` by
/// `(a, b) -> (-b, a - b)`; both change the generator of `<(0,0)>` but not the
/// subgroup, so the quotient curve is preserved as well.
pub fn normalize_params(family: Family, a: impl Into<BigInt>, b: impl Into<BigInt>) -> Result<ParamSpec> {
    let (mut a, mut b) = (a.into(), b.into());
    if !family.has_b() {
        b = BigInt::zero();
    }
    if a.is_zero() || (family.has_b() && b.is_zero()) {
        return Err(Error::DegenerateParameters(format!("{family}({a}, {b})")));
    }
    if a.is_negative() {
        a = -a;
        b = -b;
    }
    if b.is_negative() {
        match family {
            Family::C5 => {
                let na = -&b;
                b = a;
                a = na;
            }
            Family::C7 => {
                let na = -&b;
                b = &a - &b;
                a = na;
            }
            Family::C3 | Family::C3Zero => {}
        }
    }
    ParamSpec::new(family, a, b)
}
