//! Tate's algorithm over `Z_(p)` for every prime, 2 and 3 included.
//!
//! The step structure follows Silverman's *Advanced Topics*, IV.9, with the
//! coordinate choices of Cremona's *Algorithms for Modular Elliptic Curves*,
//! 3.2. All residue-field work is exact.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use super::residue::{cubic_roots, divides, inverse, quadratic_roots};
use super::{Kodaira, LocalReduction, ReductionClass};
use crate::arith::vp;
use crate::curve::WeierstrassModel;
use crate::{Error, Result};

#[derive(Clone)]
struct Model {
    a1: BigInt,
    a2: BigInt,
    a3: BigInt,
    a4: BigInt,
    a6: BigInt,
}

struct Bs {
    b2: BigInt,
    b4: BigInt,
    b6: BigInt,
    b8: BigInt,
    c4: BigInt,
    c6: BigInt,
    disc: BigInt,
}

impl Model {
    fn bs(&self) -> Bs {
        let (a1, a2, a3, a4, a6) = (&self.a1, &self.a2, &self.a3, &self.a4, &self.a6);
        let b2: BigInt = a1 * a1 + 4 * a2;
        let b4: BigInt = 2 * a4 + a1 * a3;
        let b6: BigInt = a3 * a3 + 4 * a6;
        let b8: BigInt = a1 * a1 * a6 + 4 * a2 * a6 - a1 * a3 * a4 + a2 * a3 * a3 - a4 * a4;
        let c4: BigInt = &b2 * &b2 - 24 * &b4;
        let c6: BigInt = -(&b2 * &b2 * &b2) + 36 * &b2 * &b4 - 216 * &b6;
        let disc: BigInt = -(&b2 * &b2 * &b8) - 8 * &b4 * &b4 * &b4 - 27 * &b6 * &b6 + 9 * &b2 * &b4 * &b6;
        Bs {
            b2,
            b4,
            b6,
            b8,
            c4,
            c6,
            disc,
        }
    }

    /// Integral change of variables with `u = 1`.
    fn shift(&mut self, r: &BigInt, s: &BigInt, t: &BigInt) {
        let (a1, a2, a3, a4, a6) = (&self.a1, &self.a2, &self.a3, &self.a4, &self.a6);
        let n6 = a6 + r * a4 + r * r * a2 + r * r * r - t * a3 - t * t - r * t * a1;
        let n4 = a4 - s * a3 + 2 * r * a2 - (t + r * s) * a1 + 3 * r * r - 2 * s * t;
        let n3 = a3 + r * a1 + 2 * t;
        let n2 = a2 - s * a1 + 3 * r - s * s;
        let n1 = a1 + 2 * s;
        *self = Model {
            a1: n1,
            a2: n2,
            a3: n3,
            a4: n4,
            a6: n6,
        };
    }

    fn into_weierstrass(self) -> WeierstrassModel {
        WeierstrassModel::from_ints([self.a1, self.a2, self.a3, self.a4, self.a6])
    }
}

/// Tate's algorithm on an integral model at the prime `p`.
pub fn tate_local(m: &WeierstrassModel, p: &BigInt) -> Result<LocalReduction> {
    let a = m.integral_coefficients().ok_or_else(|| {
        Error::InvalidArgument("Tate's algorithm needs an integral model".into())
    })?;
    tate_local_ints(&a, p)
}

/// [`tate_local`] on integer coefficients `[a1, a2, a3, a4, a6]`.
pub fn tate_local_ints(a: &[BigInt; 5], p: &BigInt) -> Result<LocalReduction> {
    if *p < BigInt::from(2) {
        return Err(Error::InvalidArgument(format!("{p} is not a prime")));
    }
    let mut m = Model {
        a1: a[0].clone(),
        a2: a[1].clone(),
        a3: a[2].clone(),
        a4: a[3].clone(),
        a6: a[4].clone(),
    };
    if m.bs().disc.is_zero() {
        return Err(Error::Singular);
    }
    let two = BigInt::from(2);
    let three = BigInt::from(3);
    let is2 = *p == two;
    let is3 = *p == three;
    let p2 = p * p;
    let p3 = &p2 * p;
    let p4 = &p2 * &p2;
    let p6 = &p3 * &p3;
    let half = if is2 { BigInt::zero() } else { inverse(&two, p) };
    let mut rescalings = 0u32;

    loop {
        let bs = m.bs();
        let vd = vp(&bs.disc, p);
        let done = |m: Model, kodaira, c_p, f_p, class| LocalReduction {
            p: p.clone(),
            kodaira,
            c_p,
            f_p,
            v_min: vd,
            class,
            local_model: m.into_weierstrass(),
            rescalings,
        };

        // Step 1: good reduction.
        if vd == 0 {
            return Ok(done(m, Kodaira::I0, 1, 0, ReductionClass::Good));
        }

        // Step 2: move the singular point to (0, 0).
        let (r, t) = if is2 {
            if divides(p, &bs.b2) {
                let r = m.a4.mod_floor(p);
                let t = (&r * (&m.a2 + &m.a4 + 1u32) + &m.a6).mod_floor(p);
                (r, t)
            } else {
                let r = m.a3.mod_floor(p);
                let t = (&r + &m.a4).mod_floor(p);
                (r, t)
            }
        } else if is3 {
            let r = if divides(p, &bs.b2) {
                (-&bs.b6).mod_floor(p)
            } else {
                (-&bs.b2 * &bs.b4).mod_floor(p)
            };
            let t = (&m.a1 * &r + &m.a3).mod_floor(p);
            (r, t)
        } else {
            let r = if divides(p, &bs.c4) {
                (-&bs.b2 * inverse(&BigInt::from(12), p)).mod_floor(p)
            } else {
                (-(&bs.c6 + &bs.b2 * &bs.c4) * inverse(&(12 * &bs.c4), p)).mod_floor(p)
            };
            let t = (-(&half) * (&m.a1 * &r + &m.a3)).mod_floor(p);
            (r, t)
        };
        m.shift(&r, &BigInt::zero(), &t);
        let bs = m.bs();

        // Multiplicative reduction: the node's tangents are the roots of
        // T^2 + a1 T - a2.
        if !divides(p, &bs.c4) {
            let split = quadratic_roots(&BigInt::one(), &m.a1, &-&m.a2, p) > 0;
            let (c_p, class) = if split {
                (vd, ReductionClass::SplitMultiplicative)
            } else {
                (2 - vd % 2, ReductionClass::NonsplitMultiplicative)
            };
            return Ok(done(m, Kodaira::I(vd), c_p, 1, class));
        }

        let additive = ReductionClass::Additive;
        // Step 3.
        if !divides(&p2, &m.a6) {
            return Ok(done(m, Kodaira::II, 1, vd, additive));
        }
        // Step 4.
        if !divides(&p3, &bs.b8) {
            return Ok(done(m, Kodaira::III, 2, vd - 1, additive));
        }
        // Step 5.
        if !divides(&p3, &bs.b6) {
            let c_p = if quadratic_roots(&BigInt::one(), &(&m.a3 / p), &-(&m.a6 / &p2), p) > 0 {
                3
            } else {
                1
            };
            return Ok(done(m, Kodaira::IV, c_p, vd - 2, additive));
        }

        // Step 6: arrange p | a1, a2; p^2 | a3, a4; p^3 | a6.
        let (s, t) = if is2 {
            (m.a2.mod_floor(p), 2 * (&m.a6 / BigInt::from(4)).mod_floor(p))
        } else {
            (
                (-&m.a1 * &half).mod_floor(p),
                p * (-(&m.a3 / p) * &half).mod_floor(p),
            )
        };
        m.shift(&BigInt::zero(), &s, &t);
        debug_assert!(divides(p, &m.a1) && divides(p, &m.a2));
        debug_assert!(divides(&p2, &m.a3) && divides(&p2, &m.a4) && divides(&p3, &m.a6));

        let b = &m.a2 / p;
        let c = &m.a4 / &p2;
        let d = &m.a6 / &p3;
        let w = 27 * &d * &d - &b * &b * &c * &c + 4 * &b * &b * &b * &d - 18 * &b * &c * &d
            + 4 * &c * &c * &c;
        let x = 3 * &c - &b * &b;

        if !divides(p, &w) {
            let roots = cubic_roots(&b, &c, &d, p) as u32;
            return Ok(done(m, Kodaira::I0Star, 1 + roots, vd - 4, additive));
        }

        if !divides(p, &x) {
            // Step 7: one simple and one double root; move the double root to 0.
            let alpha = if is2 {
                c.mod_floor(p)
            } else if is3 {
                (&b * &c).mod_floor(p)
            } else {
                {
                let num: BigInt = &b * &c - 9 * &d;
                (num * inverse(&(2 * &x), p)).mod_floor(p)
            }
            };
            m.shift(&(&alpha * p), &BigInt::zero(), &BigInt::zero());
            let mut n = 1u32;
            let mut mx = p2.clone();
            let mut my = p2.clone();
            let c_p;
            loop {
                let xa2 = &m.a2 / p;
                let xa3 = &m.a3 / &my;
                let xa6 = &m.a6 / (&mx * &my);
                let disc_y = &xa3 * &xa3 + 4 * &xa6;
                if (is2 && !divides(p, &xa3)) || (!is2 && !divides(p, &disc_y)) {
                    c_p = if quadratic_roots(&BigInt::one(), &xa3, &-&xa6, p) > 0 { 4 } else { 2 };
                    break;
                }
                let root = if is2 {
                    xa6.mod_floor(p)
                } else {
                    (-&xa3 * &half).mod_floor(p)
                };
                m.shift(&BigInt::zero(), &BigInt::zero(), &(&my * root));
                my *= p;
                n += 1;
                let xa4 = &m.a4 / (p * &mx);
                let xa6 = &m.a6 / (&mx * &my);
                let disc_x = &xa4 * &xa4 - 4 * &xa2 * &xa6;
                if (is2 && !divides(p, &xa4)) || (!is2 && !divides(p, &disc_x)) {
                    c_p = if quadratic_roots(&xa2, &xa4, &xa6, p) > 0 { 4 } else { 2 };
                    break;
                }
                let root = if is2 {
                    (&xa6 * &xa2).mod_floor(p)
                } else {
                    (-&xa4 * inverse(&(2 * &xa2), p)).mod_floor(p)
                };
                m.shift(&(&mx * root), &BigInt::zero(), &BigInt::zero());
                mx *= p;
                n += 1;
            }
            return Ok(done(m, Kodaira::IStar(n), c_p, vd - 4 - n, additive));
        }

        // Triple root: translate it to 0.
        let alpha = if is2 {
            b.mod_floor(p)
        } else if is3 {
            (-&d).mod_floor(p)
        } else {
            (-&b * inverse(&three, p)).mod_floor(p)
        };
        m.shift(&(&alpha * p), &BigInt::zero(), &BigInt::zero());

        // Step 8.
        let ya3 = &m.a3 / &p2;
        let ya6 = &m.a6 / &p4;
        let disc_y = &ya3 * &ya3 + 4 * &ya6;
        if (is2 && !divides(p, &ya3)) || (!is2 && !divides(p, &disc_y)) {
            let c_p = if quadratic_roots(&BigInt::one(), &ya3, &-&ya6, p) > 0 { 3 } else { 1 };
            return Ok(done(m, Kodaira::IVStar, c_p, vd - 6, additive));
        }

        // Step 9.
        let root = if is2 {
            ya6.mod_floor(p)
        } else {
            (-&ya3 * &half).mod_floor(p)
        };
        m.shift(&BigInt::zero(), &BigInt::zero(), &(&p2 * root));
        if !divides(&p4, &m.a4) {
            return Ok(done(m, Kodaira::IIIStar, 2, vd - 7, additive));
        }
        // Step 10.
        if !divides(&p6, &m.a6) {
            return Ok(done(m, Kodaira::IIStar, 1, vd - 8, additive));
        }
        // Step 11: the model was not minimal; rescale and start over.
        m = Model {
            a1: &m.a1 / p,
            a2: &m.a2 / &p2,
            a3: &m.a3 / &p3,
            a4: &m.a4 / &p4,
            a6: &m.a6 / &p6,
        };
        rescalings += 1;
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run(a: [i64; 5], p: i64) -> LocalReduction {
        tate_local(&WeierstrassModel::from_ints(a), &BigInt::from(p)).unwrap()
    }

    fn summary(r: &LocalReduction) -> (String, u32, u32) {
        (r.kodaira.to_string(), r.c_p, r.f_p)
    }

    #[test]
    fn x1_11() {
        let r = run([0, -1, 1, 0, 0], 11);
        assert_eq!(summary(&r), ("I1".into(), 1, 1));
        assert_eq!(r.class, ReductionClass::SplitMultiplicative);
        let r = run([0, -1, 1, -10, -20], 11);
        assert_eq!(summary(&r), ("I5".into(), 5, 1));
        let r = run([0, -1, 1, -7820, -263580], 11);
        assert_eq!(summary(&r), ("I1".into(), 1, 1));
    }

    fn components(k: Kodaira) -> u32 {
        match k {
            Kodaira::I0 => 1,
            Kodaira::I(n) => n,
            Kodaira::II => 1,
            Kodaira::III => 2,
            Kodaira::IV => 3,
            Kodaira::I0Star => 5,
            Kodaira::IStar(n) => n + 5,
            Kodaira::IVStar => 7,
            Kodaira::IIIStar => 8,
            Kodaira::IIStar => 9,
        }
    }

    #[test]
    fn conductor_27_curves() {
        assert_eq!(summary(&run([0, 0, 1, 0, 0], 3)), ("II".into(), 1, 3));
        assert_eq!(summary(&run([0, 0, 1, 0, -7], 3)), ("IV*".into(), 3, 3));
        assert_eq!(run([0, 0, 1, -270, -1708], 3).c_p, 1);
        assert_eq!(run([0, 0, 1, -30, 63], 3).c_p, 1);
    }

    #[test]
    fn ogg_formula_on_a_grid() {
        // v(Δ_min) = f + (number of components) - 1 at every prime.
        for a1 in 0..2i64 {
            for a3 in 0..2i64 {
                for a4 in -12i64..=12 {
                    for a6 in -12i64..=12 {
                        let m = WeierstrassModel::from_ints([a1, -1, a3, a4 * 4, a6 * 8]);
                        let d = m.discriminant().to_integer();
                        if d.is_zero() {
                            continue;
                        }
                        for p in [2i64, 3, 5, 7] {
                            let r = tate_local(&m, &BigInt::from(p)).unwrap();
                            assert_eq!(r.v_min + 1, r.f_p + components(r.kodaira), "{m} at {p}");
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn good_prime() {
        let r = run([0, -1, 1, 0, 0], 7);
        assert_eq!((r.kodaira, r.c_p, r.f_p, r.v_min), (Kodaira::I0, 1, 0, 0));
    }

    #[test]
    fn rescaling() {
        // y^2 = x^3 + 2^12 x is y^2 = x^3 + x scaled by 1/8.
        let r = run([0, 0, 0, 1 << 12, 0], 2);
        assert_eq!(r.rescalings, 3);
        let base = run([0, 0, 0, 1, 0], 2);
        assert_eq!(summary(&r), summary(&base));
        assert_eq!(r.v_min, base.v_min);
    }

    #[test]
    fn starred_types_at_large_primes() {
        // y^2 = x^3 - p^2 x has I0* with four 2-torsion components.
        let r = run([0, 0, 0, -49, 0], 7);
        assert_eq!(summary(&r), ("I0*".into(), 4, 2));
        // y^2 = x^3 + 5x^2 + 5^4 x has v(Δ) = 10, hence I4*.
        let r = run([0, 5, 0, 625, 0], 5);
        assert_eq!(r.kodaira, Kodaira::IStar(4));
        assert_eq!(r.f_p, 2);
        let r = run([0, 0, 0, 0, 5 * 5 * 5 * 5], 5);
        assert_eq!(r.kodaira, Kodaira::IVStar);
        let r = run([0, 0, 0, 125, 0], 5);
        assert_eq!(r.kodaira, Kodaira::IIIStar);
        let r = run([0, 0, 0, 0, 3125], 5);
        assert_eq!(r.kodaira, Kodaira::IIStar);
    }
}
