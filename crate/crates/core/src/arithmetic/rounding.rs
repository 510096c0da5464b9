use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed};

use crate::codec::CanonicalForm;
use crate::error::{Error, Result};
use crate::system::PreNumerationSystem;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum TieRule {
    #[default]
    HalfAwayFromZero,
    HalfToEven,
}

/// Nearest multiple of `grain`.
pub fn round_value(n: &BigInt, grain: &BigInt, tie: TieRule) -> Result<BigInt> {
    if grain < &BigInt::one() {
        return Err(Error::InvalidArgument(format!("grain must be at least 1, got {grain}")));
    }
    let (q, r): (BigInt, BigInt) = n.abs().div_rem(grain);
    let twice: BigInt = &r * 2u32;
    let up = match twice.cmp(grain) {
        std::cmp::Ordering::Greater => true,
        std::cmp::Ordering::Less => false,
        std::cmp::Ordering::Equal => match tie {
            TieRule::HalfAwayFromZero => true,
            TieRule::HalfToEven => q.is_odd(),
        },
    };
    let magnitude = if up { q + 1 } else { q } * grain;
    Ok(if n.is_negative() { -magnitude } else { magnitude })
}

/// Replaces the `k` rightmost numerals with zero.
pub fn truncate_at(system: &PreNumerationSystem, digits: &CanonicalForm, k: usize) -> Result<CanonicalForm> {
    system.radix()?;
    let len = digits.len();
    if k == 0 || k >= len {
        return Err(Error::CutOutOfRange { k, len });
    }
    let zero = system.alphabet().zero_index().ok_or(Error::NoZeroNumeral)?;
    let mut indices = digits.indices().to_vec();
    for i in &mut indices[len - k..] {
        *i = zero;
    }
    Ok(CanonicalForm::new_unchecked(crate::codec::DigitString::new(indices, digits.is_negative())))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::codec::{canonicalize, parse, render, value_of};
    use crate::system::builtin;

    fn round(n: i64, g: i64) -> i64 {
        i64::try_from(round_value(&n.into(), &g.into(), TieRule::HalfAwayFromZero).unwrap()).unwrap()
    }

    #[test]
    fn rounding_examples() {
        assert_eq!(round(284, 10), 280);
        assert_eq!(round(280, 100), 300);
        assert_eq!(round(145, 100), 100);
        assert_eq!(round(25, 10), 30);
        assert_eq!(round(-25, 10), -30);
        assert_eq!(round(-24, 10), -20);
        assert_eq!(round(7, 1), 7);
        let even = |n: i64| round_value(&n.into(), &10.into(), TieRule::HalfToEven).unwrap();
        assert_eq!(even(25), 20.into());
        assert_eq!(even(35), 40.into());
        assert!(round_value(&1.into(), &0.into(), TieRule::default()).is_err());
    }

    #[test]
    fn truncation_examples() {
        let sd = builtin("signed-decimal").unwrap();
        let s = canonicalize(&sd, &parse(&sd, "2εε").unwrap()).unwrap();
        assert_eq!(value_of(&sd, &s).unwrap(), 145.into());
        let t = truncate_at(&sd, &s, 2).unwrap();
        assert_eq!(render(&sd, &t), "200");
        assert_eq!(value_of(&sd, &t).unwrap(), 200.into());

        let s = canonicalize(&sd, &parse(&sd, "3β4").unwrap()).unwrap();
        assert_eq!(render(&sd, &truncate_at(&sd, &s, 1).unwrap()), "3β0");
        assert_eq!(truncate_at(&sd, &s, 3), Err(Error::CutOutOfRange { k: 3, len: 3 }));
        assert_eq!(truncate_at(&sd, &s, 0), Err(Error::CutOutOfRange { k: 0, len: 3 }));
    }
}
