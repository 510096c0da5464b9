//! Numeral systems: an alphabet of valued numerals plus a weight for every
//! position, counted from 1 at the rightmost numeral.

mod builtin;
mod definition;
pub mod symbols;

use std::collections::HashMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, ToPrimitive, Zero};

use crate::error::{Error, Result};

pub use builtin::{builtin, BUILTIN_NAMES};
pub use definition::{parse_definition, parse_definition_unchecked, to_definition};

/// A single symbol and the integer it stands for.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Numeral {
    pub symbol: char,
    pub value: BigInt,
}

impl Numeral {
    pub fn new(symbol: char, value: impl Into<BigInt>) -> Self {
        Numeral { symbol, value: value.into() }
    }
}

/// Ordered, finite set of numerals. The order is significant: it drives
/// the lexicographic tie-break of searches and the row order of tables.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Alphabet {
    numerals: Vec<Numeral>,
    by_symbol: HashMap<char, usize>,
    by_value: HashMap<BigInt, usize>,
}

impl Alphabet {
    pub fn new(numerals: Vec<Numeral>) -> Self {
        let mut by_symbol = HashMap::new();
        let mut by_value = HashMap::new();
        for (i, n) in numerals.iter().enumerate() {
            by_symbol.entry(n.symbol).or_insert(i);
            by_value.entry(n.value.clone()).or_insert(i);
        }
        Alphabet { numerals, by_symbol, by_value }
    }

    pub fn numerals(&self) -> &[Numeral] {
        &self.numerals
    }

    pub fn len(&self) -> usize {
        self.numerals.len()
    }

    pub fn is_empty(&self) -> bool {
        self.numerals.is_empty()
    }

    pub fn get(&self, index: usize) -> &Numeral {
        &self.numerals[index]
    }

    pub fn index_of_symbol(&self, symbol: char) -> Option<usize> {
        self.by_symbol.get(&symbol).copied()
    }

    pub fn index_of_value(&self, value: &BigInt) -> Option<usize> {
        self.by_value.get(value).copied()
    }

    pub fn zero_index(&self) -> Option<usize> {
        self.index_of_value(&BigInt::zero())
    }
}

/// The weight attached to each position.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum WeightSequence {
    /// `base^(n-1)`.
    Geometric(u32),
    /// `n!`.
    Factorial,
    /// `n^n`.
    Power,
    /// The same weight everywhere; the order of numerals is irrelevant.
    Constant(BigInt),
    /// Explicit weights for positions `1..=len`.
    Table(Vec<BigInt>),
}

impl WeightSequence {
    pub fn weight(&self, position: usize) -> Result<BigInt> {
        if position == 0 {
            return Err(Error::PositionZero);
        }
        Ok(match self {
            WeightSequence::Geometric(base) => num_traits::pow(BigInt::from(*base), position - 1),
            WeightSequence::Factorial => (1..=position).fold(BigInt::one(), |acc, k| acc * k),
            WeightSequence::Power => num_traits::pow(BigInt::from(position), position),
            WeightSequence::Constant(c) => c.clone(),
            WeightSequence::Table(t) => t
                .get(position - 1)
                .cloned()
                .ok_or(Error::PositionOutOfTable { position, len: t.len() })?,
        })
    }

    /// Weights of positions `1..=len`.
    pub fn prefix(&self, len: usize) -> Result<Vec<BigInt>> {
        if let WeightSequence::Table(t) = self {
            if len > t.len() {
                return Err(Error::StringTooLongForTable { len, table_len: t.len() });
            }
            return Ok(t[..len].to_vec());
        }
        let mut out = Vec::with_capacity(len);
        let mut w = BigInt::one();
        for n in 1..=len {
            match self {
                WeightSequence::Geometric(base) => {
                    if n > 1 {
                        w *= *base;
                    }
                }
                WeightSequence::Factorial => w *= n,
                _ => w = self.weight(n)?,
            }
            out.push(w.clone());
        }
        Ok(out)
    }

    /// Longest string the sequence can weigh, if bounded.
    pub fn max_len(&self) -> Option<usize> {
        match self {
            WeightSequence::Table(t) => Some(t.len()),
            _ => None,
        }
    }
}

impl fmt::Display for WeightSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            WeightSequence::Geometric(b) => write!(f, "geometric {b}"),
            WeightSequence::Factorial => f.write_str("factorial"),
            WeightSequence::Power => f.write_str("power"),
            WeightSequence::Constant(c) => write!(f, "constant {c}"),
            WeightSequence::Table(t) => {
                f.write_str("table")?;
                for w in t {
                    write!(f, " {w}")?;
                }
                Ok(())
            }
        }
    }
}

/// A geometric system whose numeral values are exactly `low..=high`, with
/// `low <= 0 <= high` and `high - low + 1 == base`. Every integer has one
/// digit choice per position in such a system, which makes carry
/// arithmetic well defined.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Radix {
    pub base: u32,
    pub low: i64,
    pub high: i64,
    index_by_offset: Vec<usize>,
    digit_values: Vec<i64>,
}

impl Radix {
    fn detect(alphabet: &Alphabet, weights: &WeightSequence) -> std::result::Result<Radix, String> {
        let base = match weights {
            WeightSequence::Geometric(b) if *b >= 2 => *b,
            WeightSequence::Geometric(b) => return Err(format!("base {b} is below 2")),
            other => return Err(format!("weights are {other}, not geometric")),
        };
        if alphabet.len() != base as usize {
            return Err(format!("{} numerals for base {base}", alphabet.len()));
        }
        let mut values = Vec::with_capacity(alphabet.len());
        for n in alphabet.numerals() {
            match n.value.to_i64() {
                Some(v) => values.push(v),
                None => return Err(format!("numeral value {} out of range", n.value)),
            }
        }
        let low = *values.iter().min().unwrap();
        let high = *values.iter().max().unwrap();
        if low > 0 || high < 0 {
            return Err("numeral values do not include 0".into());
        }
        if high - low + 1 != base as i64 {
            return Err(format!("numeral values {low}..={high} are not contiguous"));
        }
        let mut index_by_offset = vec![usize::MAX; base as usize];
        for (i, v) in values.iter().enumerate() {
            let slot = &mut index_by_offset[(v - low) as usize];
            if *slot != usize::MAX {
                return Err(format!("numeral value {v} repeated"));
            }
            *slot = i;
        }
        Ok(Radix { base, low, high, index_by_offset, digit_values: values })
    }

    /// Alphabet index of the numeral with the given value.
    pub fn index_of(&self, value: i64) -> usize {
        self.index_by_offset[(value - self.low) as usize]
    }

    /// Value of the numeral at an alphabet index.
    pub fn value_at(&self, index: usize) -> i64 {
        self.digit_values[index]
    }

    /// The digit chosen for `n` at the lowest position: the unique
    /// `d` in `low..=high` with `d ≡ n (mod base)`.
    pub fn select_digit(&self, n: i128) -> i64 {
        let b = self.base as i128;
        ((n - self.low as i128).rem_euclid(b) + self.low as i128) as i64
    }

    /// Whether the system uses both negative and positive numerals.
    pub fn is_signed(&self) -> bool {
        self.low < 0
    }

    pub fn is_balanced(&self) -> bool {
        self.low == -self.high
    }
}

/// An alphabet, a valuation and a weight sequence. Immutable once built.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PreNumerationSystem {
    name: String,
    alphabet: Alphabet,
    weights: WeightSequence,
    external_sign: bool,
    radix: std::result::Result<Radix, String>,
}

impl PreNumerationSystem {
    /// Builds a system and rejects it if [`validate`] reports anything.
    pub fn new(
        name: impl Into<String>,
        numerals: Vec<Numeral>,
        weights: WeightSequence,
        external_sign: bool,
    ) -> Result<Self> {
        let system = Self::new_unchecked(name, numerals, weights, external_sign);
        let violations = validate(&system);
        if violations.is_empty() {
            Ok(system)
        } else {
            Err(Error::InvalidSystem(violations))
        }
    }

    /// Builds a system without checking its invariants, e.g. to report
    /// on it with [`validate`].
    pub fn new_unchecked(
        name: impl Into<String>,
        numerals: Vec<Numeral>,
        weights: WeightSequence,
        external_sign: bool,
    ) -> Self {
        let alphabet = Alphabet::new(numerals);
        let radix = Radix::detect(&alphabet, &weights);
        PreNumerationSystem { name: name.into(), alphabet, weights, external_sign, radix }
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    pub fn weights(&self) -> &WeightSequence {
        &self.weights
    }

    pub fn external_sign(&self) -> bool {
        self.external_sign
    }

    pub fn weight(&self, position: usize) -> Result<BigInt> {
        self.weights.weight(position)
    }

    /// Carry-arithmetic parameters, or why the system does not have them.
    pub fn radix(&self) -> Result<&Radix> {
        self.radix.as_ref().map_err(|why| Error::NotRadixFamily(why.clone()))
    }

    pub fn is_radix_family(&self) -> bool {
        self.radix.is_ok()
    }

    pub(crate) fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = name.into();
        self
    }
}

/// Builds `N(a,b)`: base `a + b + 1`, numerals valued `-a..=b`.
///
/// Symbols follow [`symbols::default_symbol`]. Systems without negative
/// numerals accept an external minus sign.
pub fn make_signed_system(a: u32, b: u32) -> Result<PreNumerationSystem> {
    if b == 0 {
        return Err(Error::InvalidArgument("N(a,b) needs at least one positive numeral".into()));
    }
    let (lo, hi) = (-(a as i64), b as i64);
    if lo < symbols::MIN_DEFAULT_VALUE || hi > symbols::MAX_DEFAULT_VALUE {
        return Err(Error::InvalidArgument(format!("no default symbols for N({a},{b})")));
    }
    let base = a as u64 + b as u64 + 1;
    let base = u32::try_from(base).map_err(|_| Error::InvalidArgument("base too large".into()))?;
    let numerals = (lo..=hi)
        .map(|v| Numeral::new(symbols::default_symbol(v).expect("range checked"), v))
        .collect();
    PreNumerationSystem::new(format!("N({a},{b})"), numerals, WeightSequence::Geometric(base), a == 0)
}

/// Base six with the glyphs `0 Γ Π Δ H ∀`.
pub fn make_base6() -> PreNumerationSystem {
    let numerals = ['0', 'Γ', 'Π', 'Δ', 'H', '∀']
        .into_iter()
        .enumerate()
        .map(|(v, c)| Numeral::new(c, v as i64))
        .collect();
    PreNumerationSystem::new("base6", numerals, WeightSequence::Geometric(6), true)
        .expect("base6 is valid")
}

/// Product of the first `k` primes.
pub fn primorial_base(k: usize) -> BigInt {
    let mut product = BigInt::one();
    let mut found = 0;
    let mut candidate: u64 = 2;
    while found < k {
        if (2..).take_while(|d: &u64| d * d <= candidate).all(|d| !candidate.is_multiple_of(d)) {
            product *= candidate;
            found += 1;
        }
        candidate += 1;
    }
    product
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OrderVerdict {
    Yes,
    No,
    YesOnCheckedPrefix,
}

impl fmt::Display for OrderVerdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            OrderVerdict::Yes => "yes",
            OrderVerdict::No => "no",
            OrderVerdict::YesOnCheckedPrefix => "yes-on-checked-prefix",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClassificationReport {
    pub finite: bool,
    pub perfectly_ordered: OrderVerdict,
    pub perfectly_disordered: bool,
    pub checked_prefix_length: usize,
}

/// Ordered / disordered classification of the weight sequence. Closed
/// forms are decided outright; tables are checked on their first
/// `prefix_length` entries.
pub fn classify(system: &PreNumerationSystem, prefix_length: usize) -> Result<ClassificationReport> {
    if prefix_length < 2 {
        return Err(Error::InvalidArgument("classification needs a prefix of at least 2".into()));
    }
    let (ordered, disordered, checked) = match system.weights() {
        WeightSequence::Geometric(_) | WeightSequence::Factorial | WeightSequence::Power => {
            (OrderVerdict::Yes, false, prefix_length)
        }
        WeightSequence::Constant(_) => (OrderVerdict::No, true, prefix_length),
        WeightSequence::Table(t) => {
            let checked = &t[..prefix_length.min(t.len())];
            let mut distinct = checked.to_vec();
            distinct.sort();
            distinct.dedup();
            let ordered = if distinct.len() == checked.len() {
                OrderVerdict::YesOnCheckedPrefix
            } else {
                OrderVerdict::No
            };
            (ordered, checked.len() >= 2 && distinct.len() == 1, checked.len())
        }
    };
    Ok(ClassificationReport {
        finite: true,
        perfectly_ordered: ordered,
        perfectly_disordered: disordered,
        checked_prefix_length: checked,
    })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Violation {
    InvalidName(String),
    EmptyAlphabet,
    DuplicateSymbol(char),
    DuplicateValue { value: BigInt, first: char, second: char },
    SignSymbol(char),
    BaseTooSmall(u32),
    ZeroConstant,
    EmptyTable,
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::InvalidName(n) => write!(f, "invalid name {n:?}"),
            Violation::EmptyAlphabet => f.write_str("alphabet is empty"),
            Violation::DuplicateSymbol(c) => write!(f, "symbol {c:?} is used more than once"),
            Violation::DuplicateValue { value, first, second } => {
                write!(f, "numerals {first:?} and {second:?} share the value {value}")
            }
            Violation::SignSymbol(c) => {
                write!(f, "symbol {c:?} clashes with the external minus sign")
            }
            Violation::BaseTooSmall(b) => write!(f, "geometric base {b} is below 2"),
            Violation::ZeroConstant => f.write_str("constant weight must be nonzero"),
            Violation::EmptyTable => f.write_str("weight table is empty"),
        }
    }
}

pub fn is_identifier(name: &str) -> bool {
    !name.is_empty()
        && name.chars().all(|c| c.is_alphanumeric() || matches!(c, '-' | '_' | '(' | ')' | ','))
}

/// Every broken invariant of the system; empty when it is well formed.
pub fn validate(system: &PreNumerationSystem) -> Vec<Violation> {
    let mut out = Vec::new();
    if !is_identifier(system.name()) {
        out.push(Violation::InvalidName(system.name().to_string()));
    }
    let numerals = system.alphabet().numerals();
    if numerals.is_empty() {
        out.push(Violation::EmptyAlphabet);
    }
    let mut symbols: HashMap<char, ()> = HashMap::new();
    let mut values: HashMap<&BigInt, char> = HashMap::new();
    for n in numerals {
        if symbols.insert(n.symbol, ()).is_some() {
            out.push(Violation::DuplicateSymbol(n.symbol));
        }
        if let Some(first) = values.insert(&n.value, n.symbol) {
            out.push(Violation::DuplicateValue {
                value: n.value.clone(),
                first,
                second: n.symbol,
            });
        }
        if system.external_sign() && matches!(n.symbol, '-' | '−') {
            out.push(Violation::SignSymbol(n.symbol));
        }
    }
    match system.weights() {
        WeightSequence::Geometric(b) if *b < 2 => out.push(Violation::BaseTooSmall(*b)),
        WeightSequence::Constant(c) if c.is_zero() => out.push(Violation::ZeroConstant),
        WeightSequence::Table(t) if t.is_empty() => out.push(Violation::EmptyTable),
        _ => {}
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn values(s: &PreNumerationSystem) -> Vec<i64> {
        s.alphabet().numerals().iter().map(|n| n.value.to_i64().unwrap()).collect()
    }

    fn symbols(s: &PreNumerationSystem) -> String {
        s.alphabet().numerals().iter().map(|n| n.symbol).collect()
    }

    #[test]
    fn signed_decimal_glyphs() {
        let s = make_signed_system(5, 4).unwrap();
        assert_eq!(symbols(&s), "εγδβα01234");
        assert_eq!(values(&s), (-5..=4).collect::<Vec<_>>());
        assert_eq!(s.weights(), &WeightSequence::Geometric(10));
        assert!(!s.external_sign());
    }

    #[test]
    fn decimal_is_n_0_9() {
        let s = make_signed_system(0, 9).unwrap();
        assert_eq!(symbols(&s), "0123456789");
        assert!(s.external_sign());
        assert_eq!(s.radix().unwrap().base, 10);
    }

    #[test]
    fn balanced7() {
        let s = make_signed_system(3, 3).unwrap();
        assert_eq!(s.weights(), &WeightSequence::Geometric(7));
        assert!(s.radix().unwrap().is_balanced());
        assert_eq!(symbols(&s), "δβα0123");
    }

    #[test]
    fn empty_signed_system_rejected() {
        assert!(make_signed_system(0, 0).is_err());
    }

    #[test]
    fn wide_signed_system_uses_fallbacks() {
        let s = make_signed_system(30, 40).unwrap();
        assert!(validate(&s).is_empty());
        assert_eq!(s.alphabet().len(), 71);
    }

    #[test]
    fn base6_glyphs() {
        let s = make_base6();
        assert_eq!(symbols(&s), "0ΓΠΔH∀");
        assert!(s.external_sign());
    }

    #[test]
    fn primorials() {
        let got: Vec<BigInt> = (1..=4).map(primorial_base).collect();
        assert_eq!(got, [2, 6, 30, 210].map(BigInt::from));
    }

    #[test]
    fn weights() {
        assert_eq!(WeightSequence::Geometric(10).weight(3).unwrap(), 100.into());
        assert_eq!(WeightSequence::Factorial.weight(2).unwrap(), 2.into());
        assert_eq!(WeightSequence::Power.weight(2).unwrap(), 4.into());
        assert_eq!(WeightSequence::Power.weight(1).unwrap(), 1.into());
        assert_eq!(WeightSequence::Constant(7.into()).weight(99).unwrap(), 7.into());
        let t = WeightSequence::Table(vec![1.into(), 3.into()]);
        assert_eq!(t.weight(2).unwrap(), 3.into());
        assert_eq!(t.weight(3), Err(Error::PositionOutOfTable { position: 3, len: 2 }));
        assert_eq!(t.weight(0), Err(Error::PositionZero));
    }

    #[test]
    fn prefix_matches_pointwise() {
        for w in [WeightSequence::Geometric(7), WeightSequence::Factorial, WeightSequence::Power] {
            let p = w.prefix(12).unwrap();
            for (i, x) in p.iter().enumerate() {
                assert_eq!(x, &w.weight(i + 1).unwrap());
            }
        }
    }

    #[test]
    fn geometric_ratio_holds_to_40() {
        for base in [2u32, 6, 7, 10, 30] {
            let w = WeightSequence::Geometric(base);
            for n in 1..=40 {
                assert_eq!(w.weight(n + 1).unwrap(), w.weight(n).unwrap() * base);
            }
        }
    }

    #[test]
    fn closed_forms_are_positive() {
        for w in [WeightSequence::Geometric(3), WeightSequence::Factorial, WeightSequence::Power] {
            for n in 1..=30 {
                assert!(w.weight(n).unwrap() > BigInt::zero());
            }
        }
    }

    fn with_weights(w: WeightSequence) -> PreNumerationSystem {
        PreNumerationSystem::new("t", vec![Numeral::new('0', 0), Numeral::new('1', 1)], w, false)
            .unwrap()
    }

    #[test]
    fn classification() {
        let r = classify(&with_weights(WeightSequence::Geometric(10)), 10).unwrap();
        assert_eq!(r.perfectly_ordered, OrderVerdict::Yes);
        assert!(!r.perfectly_disordered);
        assert!(r.finite);

        let r = classify(&with_weights(WeightSequence::Constant(1.into())), 10).unwrap();
        assert!(r.perfectly_disordered);
        assert_eq!(r.perfectly_ordered, OrderVerdict::No);

        let r = classify(&with_weights(WeightSequence::Table(vec![1.into(), 2.into(), 2.into()])), 5)
            .unwrap();
        assert_eq!(r.perfectly_ordered, OrderVerdict::No);
        assert!(!r.perfectly_disordered);
        assert_eq!(r.checked_prefix_length, 3);

        let r = classify(&with_weights(WeightSequence::Table(vec![1.into(), 5.into(), 2.into()])), 5)
            .unwrap();
        assert_eq!(r.perfectly_ordered, OrderVerdict::YesOnCheckedPrefix);

        let r = classify(&with_weights(WeightSequence::Table(vec![4.into(); 3])), 5).unwrap();
        assert!(r.perfectly_disordered);
        assert_eq!(r.perfectly_ordered, OrderVerdict::No);

        assert!(classify(&with_weights(WeightSequence::Factorial), 1).is_err());
    }

    #[test]
    fn constant_is_always_disordered() {
        for c in [-3i64, -1, 1, 2, 100] {
            for prefix in 2..20 {
                let r = classify(&with_weights(WeightSequence::Constant(c.into())), prefix).unwrap();
                assert!(r.perfectly_disordered);
                assert_ne!(r.perfectly_ordered, OrderVerdict::Yes);
            }
        }
    }

    #[test]
    fn duplicate_value_is_reported() {
        let s = PreNumerationSystem::new_unchecked(
            "bad",
            vec![Numeral::new('a', 3), Numeral::new('b', 3)],
            WeightSequence::Geometric(2),
            false,
        );
        let v = validate(&s);
        assert_eq!(v, vec![Violation::DuplicateValue { value: 3.into(), first: 'a', second: 'b' }]);
    }

    #[test]
    fn duplicate_symbol_is_reported() {
        let s = PreNumerationSystem::new_unchecked(
            "bad",
            vec![Numeral::new('∀', 0), Numeral::new('∀', 1)],
            WeightSequence::Geometric(2),
            false,
        );
        assert_eq!(validate(&s), vec![Violation::DuplicateSymbol('∀')]);
        assert!(PreNumerationSystem::new("bad", vec![Numeral::new('∀', 0), Numeral::new('∀', 1)], WeightSequence::Geometric(2), false).is_err());
    }

    #[test]
    fn degenerate_weights_are_reported() {
        let one = vec![Numeral::new('0', 0)];
        let v = validate(&PreNumerationSystem::new_unchecked("x", one.clone(), WeightSequence::Geometric(1), false));
        assert_eq!(v, vec![Violation::BaseTooSmall(1)]);
        let v = validate(&PreNumerationSystem::new_unchecked("x", one.clone(), WeightSequence::Constant(0.into()), false));
        assert_eq!(v, vec![Violation::ZeroConstant]);
        let v = validate(&PreNumerationSystem::new_unchecked("x", one, WeightSequence::Table(vec![]), false));
        assert_eq!(v, vec![Violation::EmptyTable]);
        let v = validate(&PreNumerationSystem::new_unchecked("", vec![], WeightSequence::Factorial, false));
        assert_eq!(v, vec![Violation::InvalidName(String::new()), Violation::EmptyAlphabet]);
    }

    #[test]
    fn radix_detection() {
        assert!(make_signed_system(5, 4).unwrap().is_radix_family());
        let gap = PreNumerationSystem::new(
            "gap",
            vec![Numeral::new('0', 0), Numeral::new('1', 1), Numeral::new('3', 3)],
            WeightSequence::Geometric(3),
            false,
        )
        .unwrap();
        assert!(matches!(gap.radix(), Err(Error::NotRadixFamily(_))));
        let no_zero = PreNumerationSystem::new(
            "nz",
            vec![Numeral::new('1', 1), Numeral::new('2', 2)],
            WeightSequence::Geometric(2),
            false,
        )
        .unwrap();
        assert!(!no_zero.is_radix_family());
        let fact = PreNumerationSystem::new(
            "f",
            vec![Numeral::new('0', 0), Numeral::new('1', 1)],
            WeightSequence::Factorial,
            false,
        )
        .unwrap();
        assert!(!fact.is_radix_family());
    }

    #[test]
    fn select_digit_matches_residue_formula() {
        let s = make_signed_system(5, 4).unwrap();
        let r = s.radix().unwrap();
        for n in -100i128..100 {
            let d = r.select_digit(n);
            assert!((-5..=4).contains(&d));
            assert_eq!((n - d as i128).rem_euclid(10), 0);
        }
    }
}
