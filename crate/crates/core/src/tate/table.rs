use num_bigint::BigInt;

use super::Kodaira;
use crate::arith::Valuation;
use crate::curve::Signature;
use crate::{Error, Result};

/// Kodaira type read off the signature of a model minimal at `p >= 5`.
pub fn kodaira_from_signature(sig: &Signature, p: &BigInt) -> Result<Kodaira> {
    if *p < BigInt::from(5) {
        return Err(Error::InvalidArgument(
            "the signature determines the type only for p >= 5".into(),
        ));
    }
    let vd = match sig.disc {
        Valuation::Finite(v) => v,
        Valuation::Infinite => return Err(Error::Singular),
    };
    if vd == 0 {
        return Ok(Kodaira::I0);
    }
    if sig.c4 == Valuation::Finite(0) {
        return Ok(Kodaira::I(vd));
    }
    let kodaira = match vd {
        2 => Kodaira::II,
        3 => Kodaira::III,
        4 => Kodaira::IV,
        6 if sig.c4.at_least(2) && sig.c6.at_least(3) => Kodaira::I0Star,
        v if v > 6 && sig.c4 == Valuation::Finite(2) && sig.c6 == Valuation::Finite(3) => {
            Kodaira::IStar(v - 6)
        }
        8 => Kodaira::IVStar,
        9 => Kodaira::IIIStar,
        10 => Kodaira::IIStar,
        _ => {
            return Err(Error::NonMinimal(format!(
                "signature {sig} does not occur for a minimal model"
            )))
        }
    };
    Ok(kodaira)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::curve::{signature, WeierstrassModel};
    use crate::tate::tate_local;
    use Valuation::{Finite, Infinite};

    fn sig(c4: Valuation, c6: Valuation, d: u32) -> Signature {
        Signature {
            c4,
            c6,
            disc: Finite(d),
        }
    }

    #[test]
    fn lookup() {
        let p = BigInt::from(7);
        assert_eq!(kodaira_from_signature(&sig(Finite(0), Finite(0), 5), &p).unwrap(), Kodaira::I(5));
        assert_eq!(kodaira_from_signature(&sig(Finite(0), Finite(0), 0), &p).unwrap(), Kodaira::I0);
        assert_eq!(kodaira_from_signature(&sig(Finite(2), Finite(3), 6), &p).unwrap(), Kodaira::I0Star);
        assert_eq!(kodaira_from_signature(&sig(Infinite, Finite(3), 6), &p).unwrap(), Kodaira::I0Star);
        assert_eq!(kodaira_from_signature(&sig(Finite(2), Finite(3), 9), &p).unwrap(), Kodaira::IStar(3));
        assert_eq!(kodaira_from_signature(&sig(Finite(3), Finite(5), 9), &p).unwrap(), Kodaira::IIIStar);
        assert!(matches!(
            kodaira_from_signature(&sig(Finite(4), Finite(6), 12), &p),
            Err(Error::NonMinimal(_))
        ));
        assert!(kodaira_from_signature(&sig(Finite(0), Finite(0), 1), &BigInt::from(3)).is_err());
    }

    #[test]
    fn agrees_with_tate_on_small_curves() {
        let primes = [5i64, 7, 11, 13];
        let mut checked = 0;
        for a4 in -30i64..=30 {
            for a6 in -30i64..=30 {
                for p in primes {
                    let m = WeierstrassModel::from_ints([0, 0, 0, a4 * p * p, a6 * p * p * p]);
                    if m.discriminant() == crate::curve::WeierstrassModel::from_ints([0, 0, 0, 0, 0]).discriminant() {
                        continue;
                    }
                    let pb = BigInt::from(p);
                    let r = tate_local(&m, &pb).unwrap();
                    let local = r.local_model;
                    let s = signature(&local, &pb).unwrap();
                    assert_eq!(kodaira_from_signature(&s, &pb).unwrap(), r.kodaira, "{m} at {p}");
                    checked += 1;
                }
            }
        }
        assert!(checked > 10_000);
    }
}
