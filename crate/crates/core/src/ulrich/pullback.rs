use serde::Serialize;

use super::{require_ulrich, UlrichCertificate};
use crate::error::{Error, Result};
use crate::sheaf::FormalSheaf;
use crate::variety::SegreVeronese;

/// A sheaf on a single-factor Veronese variety `(P^n, O(k))`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VeroneseBundle {
    pub sheaf: FormalSheaf,
    pub variety: SegreVeronese,
}

impl VeroneseBundle {
    pub fn new(sheaf: FormalSheaf, variety: SegreVeronese) -> Result<Self> {
        if variety.factors() != 1 {
            return Err(Error::Precondition(format!(
                "expected a Veronese variety, got {} factors",
                variety.factors()
            )));
        }
        variety.check_sheaf(&sheaf)?;
        Ok(VeroneseBundle { sheaf, variety })
    }
}

/// Which factor receives the shift.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum ShiftSide {
    /// `E(n k_1) ⊠ F`
    Left,
    /// `E ⊠ F(m k_2)`
    Right,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Pullback {
    pub sheaf: FormalSheaf,
    pub variety: SegreVeronese,
    pub certificate: UlrichCertificate,
}

/// For Ulrich `E` on `(P^m, O(k_1))` and `F` on `(P^n, O(k_2))`, both
/// `E(n k_1) ⊠ F` and `E ⊠ F(m k_2)` are Ulrich on `P^m x P^n` embedded by
/// `O(k_1, k_2)`. With no second factor, `E` is returned unchanged.
pub fn pullback_ulrich(
    left: &VeroneseBundle,
    right: Option<&VeroneseBundle>,
    side: ShiftSide,
) -> Result<Pullback> {
    let left_certificate = require_ulrich(&left.sheaf, &left.variety)?;
    let Some(right) = right else {
        return Ok(Pullback {
            sheaf: left.sheaf.clone(),
            variety: left.variety.clone(),
            certificate: left_certificate,
        });
    };
    require_ulrich(&right.sheaf, &right.variety)?;

    let m = i64::from(left.variety.dims()[0]);
    let n = i64::from(right.variety.dims()[0]);
    let k1 = i64::from(left.variety.degrees()[0]);
    let k2 = i64::from(right.variety.degrees()[0]);
    let sheaf = match side {
        ShiftSide::Left => left.sheaf.twist(&[n * k1]).boxprod(&right.sheaf),
        ShiftSide::Right => left.sheaf.boxprod(&right.sheaf.twist(&[m * k2])),
    };
    let variety = SegreVeronese::new(
        vec![left.variety.dims()[0], right.variety.dims()[0]],
        vec![left.variety.degrees()[0], right.variety.degrees()[0]],
    )?;
    let certificate = require_ulrich(&sheaf, &variety)?;
    Ok(Pullback {
        sheaf,
        variety,
        certificate,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn bundle(n: u32, k: u32, t: i64) -> VeroneseBundle {
        let x = SegreVeronese::veronese(n, k).unwrap();
        VeroneseBundle::new(x.line(&[t]).unwrap(), x).unwrap()
    }

    #[test]
    fn quadric_with_degrees_2_3() {
        // O(1) on (P^1, O(2)), O(2) on (P^1, O(3))
        let e = bundle(1, 2, 1);
        let f = bundle(1, 3, 2);
        let left = pullback_ulrich(&e, Some(&f), ShiftSide::Left).unwrap();
        assert_eq!(left.sheaf, FormalSheaf::line(&[1, 1], &[3, 2]).unwrap());
        assert!(left.certificate.verdict);
        let right = pullback_ulrich(&e, Some(&f), ShiftSide::Right).unwrap();
        assert_eq!(right.sheaf, FormalSheaf::line(&[1, 1], &[1, 5]).unwrap());
    }

    #[test]
    fn trivial_bundle_on_linear_factor() {
        // O on (P^1, O(1)), O on (P^2, O(1)): O(2, 0) on P^1 x P^2
        let e = bundle(1, 1, 0);
        let f = bundle(2, 1, 0);
        let v = pullback_ulrich(&e, Some(&f), ShiftSide::Left).unwrap();
        assert_eq!(v.sheaf, FormalSheaf::line(&[1, 2], &[2, 0]).unwrap());
        assert!(v.certificate.verdict);
    }

    #[test]
    fn single_factor_passthrough() {
        let e = bundle(1, 2, 1);
        let v = pullback_ulrich(&e, None, ShiftSide::Left).unwrap();
        assert_eq!(v.sheaf, e.sheaf);
        assert_eq!(v.variety, e.variety);
    }

    #[test]
    fn rejects_non_ulrich_factor() {
        let e = bundle(1, 2, 0);
        let f = bundle(1, 1, 0);
        assert!(matches!(
            pullback_ulrich(&e, Some(&f), ShiftSide::Left),
            Err(Error::NotUlrich { .. })
        ));
        assert!(matches!(
            pullback_ulrich(&f, Some(&e), ShiftSide::Right),
            Err(Error::NotUlrich { .. })
        ));
    }

    #[test]
    fn requires_veronese_inputs() {
        let x = SegreVeronese::segre(vec![1, 1]).unwrap();
        assert!(VeroneseBundle::new(x.line(&[0, 0]).unwrap(), x).is_err());
    }
}
