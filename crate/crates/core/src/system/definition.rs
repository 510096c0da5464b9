//! Line-based text format for user-defined systems.
//!
//! ```text
//! # comment
//! name roman-additive
//! weights constant 1
//! numeral X 10
//! numeral V 5
//! numeral I 1
//! external-sign false
//! ```
//!
//! `weights` takes `geometric <base>`, `factorial`, `power`,
//! `constant <c>` or `table <w1> <w2> ...`. Numerals keep file order.

use num_bigint::BigInt;

use super::{is_identifier, validate, Numeral, PreNumerationSystem, WeightSequence};
use crate::error::{Error, Result};

fn err(line: usize, message: impl Into<String>) -> Error {
    Error::Definition { line, message: message.into() }
}

fn int(line: usize, token: &str) -> Result<BigInt> {
    token.parse().map_err(|_| err(line, format!("expected an integer, got {token:?}")))
}

/// Parses a definition and rejects systems that fail validation.
pub fn parse_definition(text: &str) -> Result<PreNumerationSystem> {
    let system = parse_definition_unchecked(text)?;
    let violations = validate(&system);
    if violations.is_empty() {
        Ok(system)
    } else {
        Err(Error::InvalidSystem(violations))
    }
}

/// Parses the syntax only; semantic problems are left to [`validate`].
pub fn parse_definition_unchecked(text: &str) -> Result<PreNumerationSystem> {
    let mut name: Option<String> = None;
    let mut weights: Option<WeightSequence> = None;
    let mut external_sign: Option<bool> = None;
    let mut numerals = Vec::new();

    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let content = raw.split('#').next().unwrap_or("").trim();
        if content.is_empty() {
            continue;
        }
        let mut tokens = content.split_whitespace();
        let keyword = tokens.next().unwrap();
        let rest: Vec<&str> = tokens.collect();
        match keyword {
            "name" => {
                if name.is_some() {
                    return Err(err(line, "duplicate `name`"));
                }
                let [id] = rest[..] else {
                    return Err(err(line, "`name` takes one identifier"));
                };
                if !is_identifier(id) {
                    return Err(err(line, format!("invalid identifier {id:?}")));
                }
                name = Some(id.to_string());
            }
            "weights" => {
                if weights.is_some() {
                    return Err(err(line, "duplicate `weights`"));
                }
                weights = Some(match rest.as_slice() {
                    ["geometric", base] => WeightSequence::Geometric(
                        base.parse().map_err(|_| err(line, format!("invalid base {base:?}")))?,
                    ),
                    ["factorial"] => WeightSequence::Factorial,
                    ["power"] => WeightSequence::Power,
                    ["constant", c] => WeightSequence::Constant(int(line, c)?),
                    ["table", ws @ ..] => WeightSequence::Table(
                        ws.iter().map(|w| int(line, w)).collect::<Result<_>>()?,
                    ),
                    _ => return Err(err(line, format!("unrecognised weights {:?}", rest.join(" ")))),
                });
            }
            "numeral" => {
                let [symbol, value] = rest[..] else {
                    return Err(err(line, "`numeral` takes a symbol and a value"));
                };
                let mut chars = symbol.chars();
                let (Some(c), None) = (chars.next(), chars.next()) else {
                    return Err(err(line, format!("symbol {symbol:?} is not a single character")));
                };
                numerals.push(Numeral::new(c, int(line, value)?));
            }
            "external-sign" => {
                if external_sign.is_some() {
                    return Err(err(line, "duplicate `external-sign`"));
                }
                external_sign = Some(match rest[..] {
                    ["true"] => true,
                    ["false"] => false,
                    _ => return Err(err(line, "`external-sign` takes true or false")),
                });
            }
            other => return Err(err(line, format!("unknown keyword {other:?}"))),
        }
    }

    let last = text.lines().count().max(1);
    let name = name.ok_or_else(|| err(last, "missing `name`"))?;
    let weights = weights.ok_or_else(|| err(last, "missing `weights`"))?;
    Ok(PreNumerationSystem::new_unchecked(name, numerals, weights, external_sign.unwrap_or(false)))
}

/// Writes a system in the definition format.
pub fn to_definition(system: &PreNumerationSystem) -> String {
    let mut out = format!("name {}\nweights {}\n", system.name(), system.weights());
    for n in system.alphabet().numerals() {
        out.push_str(&format!("numeral {} {}\n", n.symbol, n.value));
    }
    out.push_str(&format!("external-sign {}\n", system.external_sign()));
    out
}
