#![allow(dead_code)]

use num_bigint::BigInt;
use numsys::codec::{canonicalize, CanonicalForm};
use numsys::{builtin, DigitString, PreNumerationSystem};

pub const RADIX_BUILTINS: [&str; 5] =
    ["decimal", "signed-decimal", "base6", "balanced-ternary", "balanced7"];

pub const SIGNED_BUILTINS: [&str; 3] = ["signed-decimal", "balanced-ternary", "balanced7"];

pub fn sys(name: &str) -> PreNumerationSystem {
    builtin(name).unwrap_or_else(|| panic!("no built-in {name}"))
}

/// Σ i(c_p)·a_p, with each weight taken from `weight(p)` on its own.
pub fn oracle_value(system: &PreNumerationSystem, digits: &DigitString) -> BigInt {
    let n = digits.len();
    let total: BigInt = digits
        .indices()
        .iter()
        .enumerate()
        .map(|(i, &idx)| &system.alphabet().get(idx).value * system.weight(n - i).unwrap())
        .sum();
    if digits.is_negative() {
        -total
    } else {
        total
    }
}

/// Every canonical, unmarked string of 1..=max_len numerals.
pub fn canonical_strings(system: &PreNumerationSystem, max_len: usize) -> Vec<CanonicalForm> {
    let a = system.alphabet().len();
    let zero = system.alphabet().zero_index();
    let mut out = Vec::new();
    let mut frontier: Vec<Vec<usize>> = (0..a).map(|i| vec![i]).collect();
    for len in 1..=max_len {
        let mut next = Vec::new();
        for d in frontier {
            let leading_zero = Some(d[0]) == zero;
            if len == 1 || !leading_zero {
                out.push(canonicalize(system, &DigitString::new(d.clone(), false)).unwrap());
            }
            if len < max_len && !leading_zero {
                for i in 0..a {
                    let mut e = d.clone();
                    e.push(i);
                    next.push(e);
                }
            }
        }
        frontier = next;
    }
    out
}
