//! Completeness and univocality evidence on bounded windows.
//!
//! Completeness asks whether every integer in a window has a string of at
//! most `max_len` numerals; it is decided with per-length reachable value
//! sets. Univocality asks whether two distinct canonical strings share a
//! value; it enumerates canonical strings in shortlex order. Radix
//! families also get a closed-form verdict, which the brute force checks.

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fmt::Write as _;

use num_bigint::BigInt;
use num_traits::One;

use crate::codec::{encode_radix, render, DigitString, Reach, DEFAULT_BUDGET};
use crate::error::{Error, Result};
use crate::system::PreNumerationSystem;

type WitnessFn<'a> = dyn Fn(&BigInt) -> Option<DigitString> + 'a;

/// (chunk index, rank within the chunk) of an enumerated string.
type StringKey = (usize, u64);

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AnalysisConfig {
    /// Cap on intermediate states (reachable values or enumerated strings).
    pub budget: u128,
    /// Worker threads for univocality enumeration.
    pub jobs: usize,
    /// Answer from [`family_verdict`] when one exists.
    pub use_fast_path: bool,
    /// How many missing integers to list; the count is always exact.
    pub missing_limit: usize,
    /// How many duplicate pairs to list, lowest values first.
    pub duplicate_limit: usize,
}

impl Default for AnalysisConfig {
    fn default() -> Self {
        AnalysisConfig {
            budget: DEFAULT_BUDGET,
            jobs: 1,
            use_fast_path: false,
            missing_limit: 1000,
            duplicate_limit: 100,
        }
    }
}

/// Two canonical strings with the same value. `first` precedes `second`
/// in shortlex order.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct Duplicate {
    pub value: BigInt,
    pub first: DigitString,
    pub second: DigitString,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AnalysisReport {
    pub system_name: String,
    pub max_len: usize,
    pub window: Option<(BigInt, BigInt)>,
    pub complete_on_window: Option<bool>,
    pub missing: Vec<BigInt>,
    pub missing_count: usize,
    /// A representation of every representable integer in the window.
    pub witnesses: BTreeMap<BigInt, DigitString>,
    pub univocal_on_window: Option<bool>,
    pub duplicate_examples: Vec<Duplicate>,
    pub duplicate_count: usize,
    pub fast_path_used: Option<String>,
}

impl AnalysisReport {
    fn new(system: &PreNumerationSystem, max_len: usize) -> Self {
        AnalysisReport {
            system_name: system.name().to_string(),
            max_len,
            window: None,
            complete_on_window: None,
            missing: Vec::new(),
            missing_count: 0,
            witnesses: BTreeMap::new(),
            univocal_on_window: None,
            duplicate_examples: Vec::new(),
            duplicate_count: 0,
            fast_path_used: None,
        }
    }

    /// Stable line format: one `key value...` record per line.
    pub fn to_lines(&self, system: &PreNumerationSystem) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "system {}", self.system_name);
        let _ = writeln!(out, "max-len {}", self.max_len);
        if let Some(family) = &self.fast_path_used {
            let _ = writeln!(out, "fast-path {family}");
        }
        if let (Some((lo, hi)), Some(complete)) = (&self.window, self.complete_on_window) {
            let _ = writeln!(out, "window {lo} {hi}");
            let _ = writeln!(out, "complete {complete}");
            let _ = writeln!(out, "missing-count {}", self.missing_count);
            for n in &self.missing {
                let _ = writeln!(out, "missing {n}");
            }
        }
        if let Some(univocal) = self.univocal_on_window {
            let _ = writeln!(out, "univocal {univocal}");
            let _ = writeln!(out, "duplicate-count {}", self.duplicate_count);
            for d in &self.duplicate_examples {
                let _ = writeln!(
                    out,
                    "dup {} {} {}",
                    render(system, &d.first),
                    render(system, &d.second),
                    d.value
                );
            }
        }
        out
    }

    /// Prose summary.
    pub fn to_text(&self, system: &PreNumerationSystem) -> String {
        let mut out = format!("{} (strings of at most {} numerals)\n", self.system_name, self.max_len);
        if let Some(family) = &self.fast_path_used {
            let _ = writeln!(out, "  decided by the closed form for {family}");
        }
        if let (Some((lo, hi)), Some(complete)) = (&self.window, self.complete_on_window) {
            if complete {
                let _ = writeln!(out, "  every integer in [{lo}, {hi}] is representable");
            } else {
                let listed: Vec<String> = self.missing.iter().map(|n| n.to_string()).collect();
                let more = self.missing_count - self.missing.len();
                let _ = writeln!(
                    out,
                    "  {} integers in [{lo}, {hi}] are not representable: {}{}",
                    self.missing_count,
                    listed.join(", "),
                    if more > 0 { format!(" and {more} more") } else { String::new() }
                );
            }
        }
        if let Some(univocal) = self.univocal_on_window {
            if univocal {
                out.push_str("  no two canonical strings share a value\n");
            } else {
                let _ = writeln!(out, "  {} coincidences, for example:", self.duplicate_count);
                for d in &self.duplicate_examples {
                    let _ = writeln!(
                        out,
                        "    {} = {} = {}",
                        render(system, &d.first),
                        render(system, &d.second),
                        d.value
                    );
                }
            }
        }
        out
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Coverage {
    AllIntegers,
    Nonnegative,
    Nonpositive,
}

/// Closed-form verdict for a radix family `N(a,b)`: digit strings cover
/// `coverage`, the external sign (if enabled) covers the rest, and
/// representations are unique up to leading zeros.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FamilyVerdict {
    pub family: String,
    pub coverage: Coverage,
    pub complete: bool,
    pub univocal: bool,
}

pub fn family_verdict(system: &PreNumerationSystem) -> Option<FamilyVerdict> {
    let radix = system.radix().ok()?;
    let coverage = match (radix.low < 0, radix.high > 0) {
        (true, true) => Coverage::AllIntegers,
        (false, _) => Coverage::Nonnegative,
        (true, false) => Coverage::Nonpositive,
    };
    Some(FamilyVerdict {
        family: format!("N({},{})", -radix.low, radix.high),
        coverage,
        complete: coverage == Coverage::AllIntegers || system.external_sign(),
        univocal: true,
    })
}

fn window_size(lo: &BigInt, hi: &BigInt) -> Result<u128> {
    if lo > hi {
        return Err(Error::InvalidArgument(format!("empty window [{lo}, {hi}]")));
    }
    u128::try_from(hi - lo + BigInt::one())
        .map_err(|_| Error::InvalidArgument("window too wide".into()))
}

pub fn analyze_completeness(
    system: &PreNumerationSystem,
    lo: &BigInt,
    hi: &BigInt,
    max_len: usize,
    config: &AnalysisConfig,
) -> Result<AnalysisReport> {
    if max_len == 0 {
        return Err(Error::InvalidArgument("max_len must be at least 1".into()));
    }
    let width = window_size(lo, hi)?;
    if width > config.budget {
        return Err(Error::BudgetExceeded { needed: width, budget: config.budget });
    }
    let mut report = AnalysisReport::new(system, max_len);
    report.window = Some((lo.clone(), hi.clone()));

    let fast = if config.use_fast_path { family_verdict(system) } else { None };
    let witness: Box<WitnessFn> = match &fast {
        Some(verdict) => {
            report.fast_path_used = Some(verdict.family.clone());
            Box::new(move |n| {
                encode_radix(system, n)
                    .ok()
                    .filter(|s| s.len() <= max_len)
                    .map(|s| s.into_inner())
            })
        }
        None => {
            let reach = Reach::build(system, max_len, config.budget)?;
            let sign = system.external_sign();
            Box::new(move |n| reach.witness(n, sign))
        }
    };

    let mut n = lo.clone();
    while &n <= hi {
        match witness(&n) {
            Some(s) => {
                report.witnesses.insert(n.clone(), s);
            }
            None => {
                report.missing_count += 1;
                if report.missing.len() < config.missing_limit {
                    report.missing.push(n.clone());
                }
            }
        }
        n += 1;
    }
    report.complete_on_window = Some(report.missing_count == 0);
    Ok(report)
}

/// A contiguous slice of the shortlex enumeration: all canonical strings
/// of `len` numerals that start with the numeral at index `lead`.
#[derive(Debug, Clone, Copy)]
struct Chunk {
    len: usize,
    lead: usize,
}

impl Chunk {
    fn count(&self, alphabet: usize) -> u64 {
        (alphabet as u64).pow(self.len as u32 - 1)
    }

    /// The `rank`-th string of the chunk in lexicographic order.
    fn string(&self, alphabet: usize, mut rank: u64) -> Vec<usize> {
        let mut out = vec![0; self.len];
        out[0] = self.lead;
        for slot in out[1..].iter_mut().rev() {
            *slot = (rank % alphabet as u64) as usize;
            rank /= alphabet as u64;
        }
        out
    }

    /// Values of every string in the chunk, in rank order.
    fn values(&self, contributions: &[Vec<BigInt>]) -> Vec<BigInt> {
        let alphabet = contributions[0].len();
        let total = self.count(alphabet);
        let mut out = Vec::with_capacity(total as usize);
        let mut odometer = vec![0usize; self.len - 1];
        let head = &contributions[self.len - 1][self.lead];
        for _ in 0..total {
            let tail: BigInt = odometer
                .iter()
                .enumerate()
                .map(|(i, &d)| &contributions[self.len - 2 - i][d])
                .sum();
            out.push(head + tail);
            for slot in odometer.iter_mut().rev() {
                *slot += 1;
                if *slot < alphabet {
                    break;
                }
                *slot = 0;
            }
        }
        out
    }
}

pub fn analyze_univocality(
    system: &PreNumerationSystem,
    max_len: usize,
    config: &AnalysisConfig,
) -> Result<AnalysisReport> {
    if max_len == 0 {
        return Err(Error::InvalidArgument("max_len must be at least 1".into()));
    }
    let mut report = AnalysisReport::new(system, max_len);
    if config.use_fast_path {
        if let Some(verdict) = family_verdict(system) {
            report.fast_path_used = Some(verdict.family);
            report.univocal_on_window = Some(verdict.univocal);
            return Ok(report);
        }
    }

    let alphabet = system.alphabet().len();
    let max_len = system.weights().max_len().map_or(max_len, |t| t.min(max_len));
    let needed: u128 = (1..=max_len as u32).map(|k| (alphabet as u128).saturating_pow(k)).sum();
    if needed > config.budget {
        return Err(Error::BudgetExceeded { needed, budget: config.budget });
    }
    let weights = system.weights().prefix(max_len)?;
    let contributions: Vec<Vec<BigInt>> = weights
        .iter()
        .map(|w| system.alphabet().numerals().iter().map(|n| &n.value * w).collect())
        .collect();

    let zero = system.alphabet().zero_index();
    let chunks: Vec<Chunk> = (1..=max_len)
        .flat_map(|len| (0..alphabet).map(move |lead| Chunk { len, lead }))
        .filter(|c| c.len == 1 || Some(c.lead) != zero)
        .collect();
    let values = chunk_values(&chunks, &contributions, config.jobs.max(1));

    let mut first: HashMap<BigInt, StringKey> = HashMap::new();
    let mut kept: BTreeSet<(BigInt, StringKey, StringKey)> = BTreeSet::new();
    for (ci, chunk_values) in values.into_iter().enumerate() {
        for (rank, v) in chunk_values.into_iter().enumerate() {
            let here = (ci, rank as u64);
            match first.get(&v) {
                Some(&earlier) => {
                    report.duplicate_count += 1;
                    kept.insert((v, earlier, here));
                    if kept.len() > config.duplicate_limit {
                        kept.pop_last();
                    }
                }
                None => {
                    first.insert(v, here);
                }
            }
        }
    }
    let string = |(ci, rank): StringKey| {
        DigitString::new(chunks[ci].string(alphabet, rank), false)
    };
    report.duplicate_examples = kept
        .into_iter()
        .map(|(value, a, b)| Duplicate { value, first: string(a), second: string(b) })
        .collect();
    report.univocal_on_window = Some(report.duplicate_count == 0);
    Ok(report)
}

fn chunk_values(chunks: &[Chunk], contributions: &[Vec<BigInt>], jobs: usize) -> Vec<Vec<BigInt>> {
    if jobs == 1 || chunks.len() < 2 {
        return chunks.iter().map(|c| c.values(contributions)).collect();
    }
    let mut out: Vec<Vec<BigInt>> = vec![Vec::new(); chunks.len()];
    std::thread::scope(|scope| {
        let handles: Vec<_> = (0..jobs)
            .map(|worker| {
                scope.spawn(move || {
                    chunks
                        .iter()
                        .enumerate()
                        .skip(worker)
                        .step_by(jobs)
                        .map(|(i, c)| (i, c.values(contributions)))
                        .collect::<Vec<_>>()
                })
            })
            .collect();
        for h in handles {
            for (i, v) in h.join().expect("enumeration worker panicked") {
                out[i] = v;
            }
        }
    });
    out
}

/// Smallest missing nonnegative integer, if any, in a completeness report.
pub fn first_missing(report: &AnalysisReport) -> Option<&BigInt> {
    report.missing.first()
}
