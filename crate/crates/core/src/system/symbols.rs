//! Default symbols for generated signed-digit systems.
//!
//! The mapping is fixed so that generated systems render identically
//! everywhere:
//!
//! | values          | symbols                                        |
//! |-----------------|------------------------------------------------|
//! | 0 ..= 9         | ASCII `0`..`9`                                 |
//! | −1 ..= −5       | `α β δ γ ε` (the directed-numeral glyphs)      |
//! | 10 ..= 35       | ASCII `A`..`Z`                                 |
//! | −6 ..= −24      | Greek lowercase `ζ η θ ι κ λ μ ν ξ ο π ρ σ τ υ φ χ ψ ω` |
//! | 36 ..= 4131     | private use area from U+E000                   |
//! | −25 ..= −2328   | private use area from U+F000                   |
//!
//! Values outside these ranges have no default symbol.

/// Glyphs for −1 through −5, in that order.
pub const NEGATIVE_GLYPHS: [char; 5] = ['α', 'β', 'δ', 'γ', 'ε'];

const GREEK_FALLBACK: [char; 19] = [
    'ζ', 'η', 'θ', 'ι', 'κ', 'λ', 'μ', 'ν', 'ξ', 'ο', 'π', 'ρ', 'σ', 'τ', 'υ', 'φ', 'χ', 'ψ', 'ω',
];

const POSITIVE_PUA: u32 = 0xE000;
const POSITIVE_PUA_LEN: i64 = 0x1000;
const NEGATIVE_PUA: u32 = 0xF000;
const NEGATIVE_PUA_LEN: i64 = 0x0900;

pub const MAX_DEFAULT_VALUE: i64 = 35 + POSITIVE_PUA_LEN;
pub const MIN_DEFAULT_VALUE: i64 = -24 - NEGATIVE_PUA_LEN;

pub fn default_symbol(value: i64) -> Option<char> {
    match value {
        0..=9 => char::from_digit(value as u32, 10),
        10..=35 => Some((b'A' + (value - 10) as u8) as char),
        -5..=-1 => Some(NEGATIVE_GLYPHS[(-value - 1) as usize]),
        -24..=-6 => Some(GREEK_FALLBACK[(-value - 6) as usize]),
        36..=MAX_DEFAULT_VALUE => char::from_u32(POSITIVE_PUA + (value - 36) as u32),
        MIN_DEFAULT_VALUE..=-25 => char::from_u32(NEGATIVE_PUA + (-value - 25) as u32),
        _ => None,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::HashSet;

    #[test]
    fn fixed_glyphs() {
        assert_eq!(default_symbol(0), Some('0'));
        assert_eq!(default_symbol(9), Some('9'));
        assert_eq!(default_symbol(-1), Some('α'));
        assert_eq!(default_symbol(-5), Some('ε'));
        assert_eq!(default_symbol(10), Some('A'));
        assert_eq!(default_symbol(-6), Some('ζ'));
        assert_eq!(default_symbol(MAX_DEFAULT_VALUE + 1), None);
        assert_eq!(default_symbol(MIN_DEFAULT_VALUE - 1), None);
    }

    #[test]
    fn mapping_is_injective() {
        let mut seen = HashSet::new();
        for v in MIN_DEFAULT_VALUE..=MAX_DEFAULT_VALUE {
            let c = default_symbol(v).unwrap();
            assert!(seen.insert(c), "symbol {c:?} reused at {v}");
            assert!(c != '-' && c != '−' && !c.is_whitespace());
        }
    }
}
