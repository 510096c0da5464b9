use super::{make_base6, make_signed_system, Numeral, PreNumerationSystem, WeightSequence};

pub const BUILTIN_NAMES: &[&str] = &[
    "decimal",
    "signed-decimal",
    "base6",
    "balanced-ternary",
    "balanced7",
    "factorial-decimal",
    "factorial-small",
    "power-decimal",
    "roman-additive",
];

fn ascii_digits(count: u32) -> Vec<Numeral> {
    (0..count)
        .map(|v| Numeral::new(char::from_digit(v, 10).unwrap(), v))
        .collect()
}

fn signed(a: u32, b: u32, name: &str) -> PreNumerationSystem {
    make_signed_system(a, b).expect("built-in parameters are valid").with_name(name)
}

/// Looks up a built-in system by name.
///
/// `roman-additive` lists its numerals largest first (`X V I`), so the
/// shortlex tie-break prefers `VI` over `IV`.
pub fn builtin(name: &str) -> Option<PreNumerationSystem> {
    let system = match name {
        "decimal" => signed(0, 9, name),
        "signed-decimal" => signed(5, 4, name),
        "base6" => make_base6(),
        "balanced-ternary" => signed(1, 1, name),
        "balanced7" => signed(3, 3, name),
        "factorial-decimal" => {
            PreNumerationSystem::new(name, ascii_digits(10), WeightSequence::Factorial, false).ok()?
        }
        "factorial-small" => {
            PreNumerationSystem::new(name, ascii_digits(4), WeightSequence::Factorial, false).ok()?
        }
        "power-decimal" => {
            PreNumerationSystem::new(name, ascii_digits(10), WeightSequence::Power, false).ok()?
        }
        "roman-additive" => PreNumerationSystem::new(
            name,
            vec![Numeral::new('X', 10), Numeral::new('V', 5), Numeral::new('I', 1)],
            WeightSequence::Constant(1.into()),
            false,
        )
        .ok()?,
        _ => return None,
    };
    Some(system)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::system::validate;

    #[test]
    fn every_builtin_resolves_and_validates() {
        for name in BUILTIN_NAMES {
            let s = builtin(name).unwrap_or_else(|| panic!("{name} missing"));
            assert_eq!(s.name(), *name);
            assert!(validate(&s).is_empty(), "{name}");
        }
        assert!(builtin("nope").is_none());
    }

    #[test]
    fn radix_family_membership() {
        for name in ["decimal", "signed-decimal", "base6", "balanced-ternary", "balanced7"] {
            assert!(builtin(name).unwrap().is_radix_family(), "{name}");
        }
        for name in ["factorial-decimal", "factorial-small", "power-decimal", "roman-additive"] {
            assert!(!builtin(name).unwrap().is_radix_family(), "{name}");
        }
    }
}
