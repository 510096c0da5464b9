//! Carry arithmetic on radix-family systems, times tables, rounding and
//! fraction expansion.

mod fraction;
mod rounding;

use std::collections::{BTreeMap, HashMap};

use num_rational::Ratio;

use crate::codec::{self, assemble, signed_columns, CanonicalForm};
use crate::error::Result;
use crate::system::{PreNumerationSystem, Radix};

pub use fraction::{fraction_expansion, is_finite_fraction, FractionExpansion};
pub use rounding::{round_value, truncate_at, TieRule};

pub fn add(system: &PreNumerationSystem, x: &CanonicalForm, y: &CanonicalForm) -> Result<CanonicalForm> {
    let radix = system.radix()?;
    let mut columns = signed_columns(radix, x);
    let other = signed_columns(radix, y);
    if other.len() > columns.len() {
        columns.resize(other.len(), 0);
    }
    for (c, o) in columns.iter_mut().zip(other) {
        *c += o;
    }
    assemble(system, &columns)
}

/// Digits (least significant first) of a single-digit product, as signed
/// contributions. Products the digit range cannot reach directly are
/// expanded as the negation of their opposite.
fn product_columns(radix: &Radix, p: i128) -> Vec<i128> {
    let reachable = (p >= 0 && radix.high > 0) || (p <= 0 && radix.low < 0);
    let (mut rest, sign) = if reachable { (p, 1) } else { (-p, -1) };
    let base = radix.base as i128;
    let mut out = Vec::with_capacity(2);
    while rest != 0 {
        let d = radix.select_digit(rest);
        rest = (rest - d as i128) / base;
        out.push(sign * d as i128);
    }
    out
}

/// Schoolbook multiplication: single-digit products from the times table,
/// shifted into place and summed with carries.
pub fn mul(system: &PreNumerationSystem, x: &CanonicalForm, y: &CanonicalForm) -> Result<CanonicalForm> {
    let radix = system.radix()?;
    let xs = signed_columns(radix, x);
    let ys = signed_columns(radix, y);
    let mut table: HashMap<(i128, i128), Vec<i128>> = HashMap::new();
    let mut columns = vec![0i128; xs.len() + ys.len() + 2];
    for (j, &dy) in ys.iter().enumerate() {
        if dy == 0 {
            continue;
        }
        for (i, &dx) in xs.iter().enumerate() {
            if dx == 0 {
                continue;
            }
            let entry = table.entry((dx, dy)).or_insert_with(|| product_columns(radix, dx * dy));
            for (k, d) in entry.iter().enumerate() {
                columns[i + j + k] += d;
            }
        }
    }
    assemble(system, &columns)
}

/// Every ordered single-digit product, rendered in the system.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TimesTable {
    pub base: u32,
    entries: BTreeMap<(usize, usize), CanonicalForm>,
}

impl TimesTable {
    /// Product of the numerals at alphabet indices `x` and `y`.
    pub fn entry(&self, x: usize, y: usize) -> Option<&CanonicalForm> {
        self.entries.get(&(x, y))
    }

    pub fn entry_by_symbols(&self, system: &PreNumerationSystem, x: char, y: char) -> Option<&CanonicalForm> {
        let a = system.alphabet();
        self.entry(a.index_of_symbol(x)?, a.index_of_symbol(y)?)
    }

    /// Entries in alphabet order.
    pub fn iter(&self) -> impl Iterator<Item = (&(usize, usize), &CanonicalForm)> {
        self.entries.iter()
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }
}

pub fn times_table(system: &PreNumerationSystem) -> Result<TimesTable> {
    let radix = system.radix()?;
    let n = system.alphabet().len();
    let mut entries = BTreeMap::new();
    for x in 0..n {
        for y in 0..n {
            let p = radix.value_at(x) as i128 * radix.value_at(y) as i128;
            entries.insert((x, y), assemble(system, &[p])?);
        }
    }
    Ok(TimesTable { base: radix.base, entries })
}

/// Difficulty counts for a times table. A pair is trivial when either
/// factor has magnitude at most 1, and carries when both factors have
/// magnitude at least 2 and the product's magnitude reaches the base.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct TableMetrics {
    pub total_pairs: u64,
    pub trivial_pairs: u64,
    pub nontrivial_no_carry: u64,
    pub carry_pairs: u64,
}

impl TableMetrics {
    /// `carry_pairs / total_pairs`, reduced.
    pub fn carry_ratio(&self) -> Ratio<u64> {
        Ratio::new(self.carry_pairs, self.total_pairs.max(1))
    }
}

pub fn table_metrics(system: &PreNumerationSystem) -> Result<TableMetrics> {
    let radix = system.radix()?;
    let values: Vec<i128> = (0..system.alphabet().len()).map(|i| radix.value_at(i) as i128).collect();
    let base = radix.base as i128;
    let mut m = TableMetrics { total_pairs: 0, trivial_pairs: 0, nontrivial_no_carry: 0, carry_pairs: 0 };
    for &x in &values {
        for &y in &values {
            m.total_pairs += 1;
            if x.abs() <= 1 || y.abs() <= 1 {
                m.trivial_pairs += 1;
            } else if (x * y).abs() >= base {
                m.carry_pairs += 1;
            } else {
                m.nontrivial_no_carry += 1;
            }
        }
    }
    Ok(m)
}

/// Subtraction via negation and addition.
pub fn sub(system: &PreNumerationSystem, x: &CanonicalForm, y: &CanonicalForm) -> Result<CanonicalForm> {
    add(system, x, &codec::negate(system, y)?)
}
