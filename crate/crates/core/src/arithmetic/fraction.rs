//! Positional expansion of rationals with a recurring block.

use std::collections::HashMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::codec::{encode_radix, render, CanonicalForm};
use crate::error::{Error, Result};
use crate::system::PreNumerationSystem;

/// `±integer_part . preperiod (period)`; an empty period means the
/// expansion terminates.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FractionExpansion {
    pub negative: bool,
    pub integer_part: CanonicalForm,
    /// Alphabet indices of the non-repeating fractional numerals.
    pub preperiod: Vec<usize>,
    /// Alphabet indices of the minimal repeating block.
    pub period: Vec<usize>,
}

impl FractionExpansion {
    pub fn is_finite(&self) -> bool {
        self.period.is_empty()
    }

    /// `<integer>.<preperiod>(<period>)`, e.g. `0.(3)`; terminating
    /// expansions drop the parentheses, integers drop the point.
    pub fn render(&self, system: &PreNumerationSystem) -> String {
        let symbol = |i: &usize| system.alphabet().get(*i).symbol;
        let mut out = String::new();
        if self.negative {
            out.push('-');
        }
        out.push_str(&render(system, &self.integer_part));
        if !self.preperiod.is_empty() || !self.period.is_empty() {
            out.push('.');
            out.extend(self.preperiod.iter().map(symbol));
            if !self.period.is_empty() {
                out.push('(');
                out.extend(self.period.iter().map(symbol));
                out.push(')');
            }
        }
        out
    }

    /// The rational the expansion denotes.
    pub fn to_ratio(&self, system: &PreNumerationSystem) -> Result<BigRational> {
        let radix = system.radix()?;
        let base = BigInt::from(radix.base);
        let digits_value = |ds: &[usize]| {
            ds.iter().fold(BigInt::zero(), |acc, &i| acc * &base + radix.value_at(i))
        };
        let integer = crate::codec::value_of(system, &self.integer_part)?;
        let shift = num_traits::pow(base.clone(), self.preperiod.len());
        let mut total = BigRational::from_integer(integer)
            + BigRational::new(digits_value(&self.preperiod), shift.clone());
        if !self.period.is_empty() {
            let cycle = num_traits::pow(base.clone(), self.period.len()) - 1;
            total += BigRational::new(digits_value(&self.period), shift * cycle);
        }
        Ok(if self.negative { -total } else { total })
    }
}

/// Whether `1/q` terminates in base `base`: every prime factor of `q`
/// divides the base.
pub fn is_finite_fraction(base: &BigInt, q: &BigInt) -> bool {
    strip_base_factors(base, q).1.is_one()
}

/// Divides out of `q` every prime it shares with `base`. Returns the
/// number of rounds needed (the preperiod length) and the remaining
/// cofactor.
fn strip_base_factors(base: &BigInt, q: &BigInt) -> (usize, BigInt) {
    let mut rest = q.abs();
    let mut rounds = 0;
    loop {
        let g = rest.gcd(base);
        if g.is_one() || rest.is_zero() {
            return (rounds, rest);
        }
        rest /= g;
        rounds += 1;
    }
}

/// Long division of `p/q` with remainder-cycle detection. The system
/// must be geometric with numerals `0..base`.
pub fn fraction_expansion(
    system: &PreNumerationSystem,
    p: &BigInt,
    q: &BigInt,
    max_period: usize,
) -> Result<FractionExpansion> {
    let radix = system.radix()?;
    if radix.low != 0 {
        return Err(Error::NotRadixFamily(
            "fraction expansion needs numerals 0..base".into(),
        ));
    }
    if !q.is_positive() {
        return Err(Error::InvalidArgument(format!("denominator must be positive, got {q}")));
    }
    let negative = p.is_negative();
    if negative && !system.external_sign() {
        return Err(Error::NegativeWithoutSign(p.clone()));
    }
    let g = p.gcd(q);
    let (num, den) = (p.abs() / &g, q / &g);
    let base = BigInt::from(radix.base);
    let (pre_len, _) = strip_base_factors(&base, &den);

    let (integer, mut r) = num.div_rem(&den);
    let integer_part = encode_radix(system, &integer)?;
    let mut digits = Vec::new();
    let mut seen: HashMap<BigInt, usize> = HashMap::new();
    let mut period_start = None;
    while !r.is_zero() {
        if let Some(&at) = seen.get(&r) {
            period_start = Some(at);
            break;
        }
        if digits.len() >= pre_len + max_period {
            return Err(Error::PeriodExceedsBound { max_period });
        }
        seen.insert(r.clone(), digits.len());
        let (d, rem) = (&r * &base).div_rem(&den);
        digits.push(radix.index_of(d.to_i64().expect("digit below base")));
        r = rem;
    }
    let (preperiod, period) = match period_start {
        Some(at) => {
            let period = digits.split_off(at);
            (digits, period)
        }
        None => (digits, Vec::new()),
    };
    Ok(FractionExpansion {
        negative: negative && !num.is_zero(),
        integer_part,
        preperiod,
        period,
    })
}
