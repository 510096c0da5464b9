//! Digit strings: parsing, rendering, evaluation and encoding.

use std::cmp::Ordering;
use std::collections::HashSet;
use std::ops::Deref;

use num_bigint::{BigInt, Sign};
use num_integer::Integer;
use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::system::{PreNumerationSystem, Radix, WeightSequence};

/// Default cap on intermediate states for exhaustive searches.
pub const DEFAULT_BUDGET: u128 = 10_000_000;

/// Numerals of a string, most significant first, as indices into the
/// owning system's alphabet. `negative` is the external minus mark.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DigitString {
    digits: Vec<usize>,
    negative: bool,
}

impl DigitString {
    pub fn new(digits: Vec<usize>, negative: bool) -> Self {
        DigitString { digits, negative }
    }

    /// Alphabet indices, most significant first.
    pub fn indices(&self) -> &[usize] {
        &self.digits
    }

    pub fn len(&self) -> usize {
        self.digits.len()
    }

    pub fn is_empty(&self) -> bool {
        self.digits.is_empty()
    }

    pub fn is_negative(&self) -> bool {
        self.negative
    }

    /// Index of the numeral at `position`, 1 being the rightmost.
    pub fn at_position(&self, position: usize) -> Option<usize> {
        if position == 0 || position > self.digits.len() {
            return None;
        }
        Some(self.digits[self.digits.len() - position])
    }
}

/// A digit string without leading zero numerals. Only produced by this
/// module and by the arithmetic built on it.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CanonicalForm(DigitString);

impl CanonicalForm {
    pub(crate) fn new_unchecked(digits: DigitString) -> Self {
        CanonicalForm(digits)
    }

    pub fn into_inner(self) -> DigitString {
        self.0
    }
}

impl Deref for CanonicalForm {
    type Target = DigitString;

    fn deref(&self) -> &DigitString {
        &self.0
    }
}

impl AsRef<DigitString> for CanonicalForm {
    fn as_ref(&self) -> &DigitString {
        &self.0
    }
}

fn is_minus(c: char) -> bool {
    c == '-' || c == '−'
}

pub fn parse(system: &PreNumerationSystem, text: &str) -> Result<DigitString> {
    let mut chars = text.chars().peekable();
    let negative = system.external_sign() && chars.peek().copied().is_some_and(is_minus);
    let offset = usize::from(negative);
    if negative {
        chars.next();
    }
    let digits = chars
        .enumerate()
        .map(|(i, c)| {
            system
                .alphabet()
                .index_of_symbol(c)
                .ok_or(Error::UnknownSymbol { position: i + offset, symbol: c })
        })
        .collect::<Result<Vec<_>>>()?;
    if digits.is_empty() {
        return Err(Error::EmptyInput);
    }
    Ok(DigitString { digits, negative })
}

pub fn render(system: &PreNumerationSystem, digits: &DigitString) -> String {
    let mut out = String::with_capacity(digits.len() + 1);
    if digits.negative {
        out.push('-');
    }
    out.extend(digits.digits.iter().map(|&i| system.alphabet().get(i).symbol));
    out
}

pub fn value_of(system: &PreNumerationSystem, digits: &DigitString) -> Result<BigInt> {
    let alphabet = system.alphabet();
    let total = if let WeightSequence::Geometric(base) = system.weights() {
        digits.digits.iter().fold(BigInt::zero(), |acc, &i| acc * *base + &alphabet.get(i).value)
    } else {
        let weights = system.weights().prefix(digits.len())?;
        digits
            .digits
            .iter()
            .rev()
            .zip(&weights)
            .map(|(&i, w)| &alphabet.get(i).value * w)
            .sum()
    };
    Ok(if digits.negative { -total } else { total })
}

fn strip_leading_zeros(system: &PreNumerationSystem, digits: &[usize]) -> Vec<usize> {
    match system.alphabet().zero_index() {
        Some(z) => {
            let start = digits.iter().position(|&i| i != z).unwrap_or(digits.len());
            digits[start..].to_vec()
        }
        None => digits.to_vec(),
    }
}

fn zero(system: &PreNumerationSystem) -> Result<CanonicalForm> {
    let z = system.alphabet().zero_index().ok_or(Error::NoZeroNumeral)?;
    Ok(CanonicalForm(DigitString { digits: vec![z], negative: false }))
}

/// Encodes `n` digit by digit: `d = ((n + a) mod B) − a`, then
/// `n ← (n − d) / B`, where the numerals are `−a..=b`.
pub fn encode_radix(system: &PreNumerationSystem, n: &BigInt) -> Result<CanonicalForm> {
    let radix = system.radix()?;
    if n.is_zero() {
        return zero(system);
    }
    let reachable = if n.is_negative() { radix.low < 0 } else { radix.high > 0 };
    let (target, negative) = if reachable {
        (n.clone(), false)
    } else if system.external_sign() {
        (-n, true)
    } else if n.is_negative() {
        return Err(Error::NegativeWithoutSign(n.clone()));
    } else {
        return Err(Error::PositiveWithoutSign(n.clone()));
    };
    let base = BigInt::from(radix.base);
    let low = BigInt::from(radix.low);
    let mut rest = target;
    let mut lsb_first = Vec::new();
    while !rest.is_zero() {
        let d: BigInt = (&rest - &low).mod_floor(&base) + &low;
        rest = (&rest - &d) / &base;
        lsb_first.push(radix.index_of(i64::try_from(&d).expect("digit fits in i64")));
    }
    lsb_first.reverse();
    Ok(CanonicalForm(DigitString { digits: lsb_first, negative }))
}

/// Normalizes per-position sums (least significant first) into digits of
/// the radix range, carrying `(s − d) / B` upward. The caller guarantees
/// that the total has a sign the digit range can reach.
fn normalize(radix: &Radix, columns: &[i128]) -> Vec<usize> {
    let base = radix.base as i128;
    let mut out = Vec::with_capacity(columns.len() + 2);
    let mut carry: i128 = 0;
    for &c in columns {
        let s = c + carry;
        let d = radix.select_digit(s);
        carry = (s - d as i128) / base;
        out.push(d);
    }
    while carry != 0 {
        let d = radix.select_digit(carry);
        carry = (carry - d as i128) / base;
        out.push(d);
    }
    while out.len() > 1 && *out.last().unwrap() == 0 {
        out.pop();
    }
    if out.is_empty() {
        out.push(0);
    }
    out.iter().rev().map(|&d| radix.index_of(d)).collect()
}

fn columns_value(radix: &Radix, columns: &[i128]) -> BigInt {
    columns.iter().rev().fold(BigInt::zero(), |acc, &c| acc * radix.base + c)
}

/// Builds the canonical string of `Σ columns[i]·B^i`, using the external
/// sign when the digit range cannot reach the total's sign.
pub(crate) fn assemble(system: &PreNumerationSystem, columns: &[i128]) -> Result<CanonicalForm> {
    let radix = system.radix()?;
    if radix.low < 0 && radix.high > 0 {
        return Ok(CanonicalForm(DigitString { digits: normalize(radix, columns), negative: false }));
    }
    let total = columns_value(radix, columns);
    let reachable = match total.sign() {
        Sign::NoSign => true,
        Sign::Minus => radix.low < 0,
        Sign::Plus => radix.high > 0,
    };
    if reachable {
        return Ok(CanonicalForm(DigitString { digits: normalize(radix, columns), negative: false }));
    }
    if !system.external_sign() {
        return Err(if total.is_negative() {
            Error::NegativeWithoutSign(total)
        } else {
            Error::PositiveWithoutSign(total)
        });
    }
    let flipped: Vec<i128> = columns.iter().map(|c| -c).collect();
    Ok(CanonicalForm(DigitString { digits: normalize(radix, &flipped), negative: true }))
}

/// Signed digit values, least significant first, with the external mark
/// folded in.
pub(crate) fn signed_columns(radix: &Radix, digits: &DigitString) -> Vec<i128> {
    let sign = if digits.negative { -1 } else { 1 };
    digits.digits.iter().rev().map(|&i| sign * radix.value_at(i) as i128).collect()
}

pub fn canonicalize(system: &PreNumerationSystem, digits: &DigitString) -> Result<CanonicalForm> {
    if digits.is_empty() {
        return Err(Error::EmptyInput);
    }
    let value = value_of(system, digits)?;
    if value.is_zero() {
        return zero(system);
    }
    if digits.negative {
        if let Ok(radix) = system.radix() {
            if radix.low < 0 {
                return encode_radix(system, &value);
            }
        }
    }
    Ok(CanonicalForm(DigitString {
        digits: strip_leading_zeros(system, &digits.digits),
        negative: digits.negative,
    }))
}

/// Additive inverse, computed digit-wise with carry renormalization.
pub fn negate(system: &PreNumerationSystem, digits: &CanonicalForm) -> Result<CanonicalForm> {
    let radix = system.radix()?;
    let columns: Vec<i128> = signed_columns(radix, digits).into_iter().map(|c| -c).collect();
    assemble(system, &columns)
}

/// Sign of a canonical string. In radix-family systems this reads the
/// leading numeral; elsewhere it evaluates the string.
pub fn sign_of(system: &PreNumerationSystem, digits: &CanonicalForm) -> Result<Sign> {
    let sign = match system.radix() {
        Ok(radix) => {
            let lead = radix.value_at(digits.digits[0]);
            match lead.cmp(&0) {
                Ordering::Less => Sign::Minus,
                Ordering::Equal => Sign::NoSign,
                Ordering::Greater => Sign::Plus,
            }
        }
        Err(_) => return Ok(value_of(system, digits)?.sign()),
    };
    Ok(if digits.negative { -sign } else { sign })
}

pub fn compare(system: &PreNumerationSystem, x: &CanonicalForm, y: &CanonicalForm) -> Result<Ordering> {
    Ok(value_of(system, x)?.cmp(&value_of(system, y)?))
}

/// Values reachable by strings of each exact length, built one position
/// at a time: `R_k = { v + i(c)·a_k : v ∈ R_(k−1), c ∈ I }`.
pub(crate) struct Reach {
    weights: Vec<BigInt>,
    values: Vec<BigInt>,
    sets: Vec<HashSet<BigInt>>,
}

impl Reach {
    pub(crate) fn build(system: &PreNumerationSystem, max_len: usize, budget: u128) -> Result<Reach> {
        let max_len = system.weights().max_len().map_or(max_len, |t| t.min(max_len));
        let weights = system.weights().prefix(max_len)?;
        let values: Vec<BigInt> = system.alphabet().numerals().iter().map(|n| n.value.clone()).collect();
        let mut sets = vec![HashSet::from([BigInt::zero()])];
        let mut spent: u128 = 0;
        for w in &weights {
            let prev = sets.last().unwrap();
            spent += prev.len() as u128 * values.len() as u128;
            if spent > budget {
                return Err(Error::BudgetExceeded { needed: spent, budget });
            }
            let contributions: Vec<BigInt> = values.iter().map(|v| v * w).collect();
            let next: HashSet<BigInt> =
                prev.iter().flat_map(|p| contributions.iter().map(move |c| p + c)).collect();
            sets.push(next);
        }
        Ok(Reach { weights, values, sets })
    }

    pub(crate) fn shortest_len(&self, value: &BigInt) -> Option<usize> {
        (1..self.sets.len()).find(|&k| self.sets[k].contains(value))
    }

    /// Lexicographically least string (alphabet order, most significant
    /// first) of exactly `len` numerals with the given value.
    pub(crate) fn least_string(&self, len: usize, value: &BigInt) -> Option<Vec<usize>> {
        if !self.sets[len].contains(value) {
            return None;
        }
        let mut rest = value.clone();
        let mut out = Vec::with_capacity(len);
        for position in (1..=len).rev() {
            let w = &self.weights[position - 1];
            let (i, remainder) = self
                .values
                .iter()
                .enumerate()
                .map(|(i, v)| (i, &rest - v * w))
                .find(|(_, r)| self.sets[position - 1].contains(r))?;
            out.push(i);
            rest = remainder;
        }
        Some(out)
    }

    /// Shortest, then least, string for `value`; with `external_sign`,
    /// falls back to a marked string for `-value`.
    pub(crate) fn witness(&self, value: &BigInt, external_sign: bool) -> Option<DigitString> {
        if let Some(k) = self.shortest_len(value) {
            return Some(DigitString { digits: self.least_string(k, value)?, negative: false });
        }
        if external_sign {
            let flipped = -value;
            let k = self.shortest_len(&flipped)?;
            return Some(DigitString { digits: self.least_string(k, &flipped)?, negative: true });
        }
        None
    }
}

/// Exhaustive search for a representation of `n` with at most `max_len`
/// numerals. Ties go to the shortest string, then to the least one in
/// alphabet order.
pub fn encode_search(system: &PreNumerationSystem, n: &BigInt, max_len: usize) -> Result<CanonicalForm> {
    encode_search_with_budget(system, n, max_len, DEFAULT_BUDGET)
}

pub fn encode_search_with_budget(
    system: &PreNumerationSystem,
    n: &BigInt,
    max_len: usize,
    budget: u128,
) -> Result<CanonicalForm> {
    if max_len == 0 {
        return Err(Error::InvalidArgument("max_len must be at least 1".into()));
    }
    let reach = Reach::build(system, max_len, budget)?;
    reach
        .witness(n, system.external_sign())
        .map(CanonicalForm)
        .ok_or_else(|| Error::NotRepresentable { value: n.clone(), max_len })
}
