mod common;

use std::cmp::Ordering;

use num_bigint::{BigInt, Sign};
use num_rational::BigRational;
use proptest::prelude::*;

use common::{canonical_strings, oracle_value, sys, RADIX_BUILTINS, SIGNED_BUILTINS};
use numsys::arithmetic::{self, fraction_expansion, is_finite_fraction};
use numsys::codec::{self, canonicalize, encode_radix, negate, parse, render, sign_of, value_of};
use numsys::DigitString;

fn radix_system() -> impl Strategy<Value = &'static str> {
    prop::sample::select(RADIX_BUILTINS.to_vec())
}

fn any_builtin() -> impl Strategy<Value = &'static str> {
    prop::sample::select(numsys::system::BUILTIN_NAMES.to_vec())
}

fn big(limit: i64) -> impl Strategy<Value = BigInt> {
    (-limit..=limit).prop_map(BigInt::from)
}

proptest! {
    #[test]
    fn parse_render_round_trip(name in any_builtin(), raw in prop::collection::vec(any::<usize>(), 1..12)) {
        let s = sys(name);
        let a = s.alphabet().len();
        let digits = DigitString::new(raw.iter().map(|i| i % a).collect(), false);
        let text = render(&s, &digits);
        prop_assert_eq!(&parse(&s, &text).unwrap(), &digits);
        prop_assert_eq!(render(&s, &parse(&s, &text).unwrap()), text);
    }

    #[test]
    fn value_matches_pointwise_oracle(name in any_builtin(), raw in prop::collection::vec(any::<usize>(), 1..10)) {
        let s = sys(name);
        let a = s.alphabet().len();
        let digits = DigitString::new(raw.iter().map(|i| i % a).collect(), false);
        prop_assert_eq!(value_of(&s, &digits).unwrap(), oracle_value(&s, &digits));
    }

    #[test]
    fn encode_radix_round_trips_large_values(name in radix_system(), digits in "-?[1-9][0-9]{0,60}") {
        let s = sys(name);
        let n: BigInt = digits.parse().unwrap();
        let e = encode_radix(&s, &n).unwrap();
        prop_assert_eq!(value_of(&s, &e).unwrap(), n.clone());
        prop_assert_eq!(canonicalize(&s, &e).unwrap(), e);
    }

    #[test]
    fn add_and_mul_match_integers(name in radix_system(), x in big(1_000_000_000), y in big(1_000_000_000)) {
        let s = sys(name);
        let (ex, ey) = (encode_radix(&s, &x).unwrap(), encode_radix(&s, &y).unwrap());
        let sum = arithmetic::add(&s, &ex, &ey).unwrap();
        let prod = arithmetic::mul(&s, &ex, &ey).unwrap();
        prop_assert_eq!(value_of(&s, &sum).unwrap(), &x + &y);
        prop_assert_eq!(value_of(&s, &prod).unwrap(), &x * &y);
        prop_assert_eq!(&sum, &encode_radix(&s, &(&x + &y)).unwrap());
        prop_assert_eq!(&prod, &encode_radix(&s, &(&x * &y)).unwrap());
    }

    #[test]
    fn fraction_reconstruction(name in prop::sample::select(vec!["decimal", "base6"]), p in -5000i64..5000, q in 1i64..2000) {
        let s = sys(name);
        let e = fraction_expansion(&s, &p.into(), &q.into(), 10_000).unwrap();
        prop_assert_eq!(e.to_ratio(&s).unwrap(), BigRational::new(p.into(), q.into()));
        let reduced_q = BigRational::new(p.into(), q.into()).denom().clone();
        let base = BigInt::from(s.radix().unwrap().base);
        prop_assert_eq!(e.is_finite(), is_finite_fraction(&base, &reduced_q));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn negation_is_an_involution_on_long_strings(
        name in prop::sample::select(SIGNED_BUILTINS.to_vec()),
        n in "-?[1-9][0-9]{4,40}",
    ) {
        let s = sys(name);
        let x = encode_radix(&s, &n.parse().unwrap()).unwrap();
        let y = negate(&s, &x).unwrap();
        prop_assert_eq!(value_of(&s, &y).unwrap(), -value_of(&s, &x).unwrap());
        prop_assert_eq!(negate(&s, &y).unwrap(), x);
    }
}

#[test]
fn negation_exhaustive_to_length_four() {
    for name in SIGNED_BUILTINS.iter().chain(["decimal", "base6"].iter()) {
        let s = sys(name);
        for x in canonical_strings(&s, 4) {
            let y = negate(&s, &x).unwrap();
            assert_eq!(value_of(&s, &y).unwrap(), -oracle_value(&s, &x), "{name}");
            assert_eq!(negate(&s, &y).unwrap(), x, "{name}");
        }
    }
}

#[test]
fn leading_numeral_gives_the_sign() {
    for name in SIGNED_BUILTINS {
        let s = sys(name);
        for x in canonical_strings(&s, 4) {
            assert_eq!(sign_of(&s, &x).unwrap(), oracle_value(&s, &x).sign(), "{name} {}", render(&s, &x));
        }
    }
    let d = sys("decimal");
    for x in canonical_strings(&d, 3) {
        let neg = negate(&d, &x).unwrap();
        assert_eq!(sign_of(&d, &neg).unwrap(), -oracle_value(&d, &x).sign());
    }
}

#[test]
fn compare_agrees_with_integers_to_length_three() {
    for name in RADIX_BUILTINS {
        let s = sys(name);
        let strings = canonical_strings(&s, 3);
        let values: Vec<BigInt> = strings.iter().map(|x| oracle_value(&s, x)).collect();
        for (x, vx) in strings.iter().zip(&values) {
            for (y, vy) in strings.iter().zip(&values) {
                assert_eq!(codec::compare(&s, x, y).unwrap(), vx.cmp(vy));
            }
        }
    }
}

#[test]
fn sign_of_zero() {
    for name in RADIX_BUILTINS {
        let s = sys(name);
        let z = encode_radix(&s, &0.into()).unwrap();
        assert_eq!(sign_of(&s, &z).unwrap(), Sign::NoSign);
        assert_eq!(codec::compare(&s, &z, &z).unwrap(), Ordering::Equal);
    }
}

#[test]
fn table_metrics_are_symmetric() {
    for name in RADIX_BUILTINS {
        let s = sys(name);
        let table = arithmetic::times_table(&s).unwrap();
        for (&(x, y), p) in table.iter() {
            assert_eq!(p, table.entry(y, x).unwrap());
        }
        let m = arithmetic::table_metrics(&s).unwrap();
        let values: Vec<i64> = s
            .alphabet()
            .numerals()
            .iter()
            .map(|n| i64::try_from(&n.value).unwrap())
            .collect();
        let base = s.radix().unwrap().base as i64;
        let mut carry_ordered = 0;
        let mut carry_swapped = 0;
        for &x in &values {
            for &y in &values {
                let carries = |a: i64, b: i64| a.abs() >= 2 && b.abs() >= 2 && (a * b).abs() >= base;
                carry_ordered += carries(x, y) as u64;
                carry_swapped += carries(y, x) as u64;
            }
        }
        assert_eq!(m.carry_pairs, carry_ordered);
        assert_eq!(carry_ordered, carry_swapped);
        assert_eq!(m.trivial_pairs + m.nontrivial_no_carry + m.carry_pairs, m.total_pairs);
    }
}

#[test]
fn balanced_truncation_is_rounding() {
    for name in ["balanced-ternary", "balanced7"] {
        let s = sys(name);
        let base = BigInt::from(s.radix().unwrap().base);
        for x in canonical_strings(&s, 4) {
            for k in 1..x.len() {
                let t = arithmetic::truncate_at(&s, &x, k).unwrap();
                let grain = num_traits::pow(base.clone(), k);
                let v = oracle_value(&s, &x);
                let rounded = arithmetic::round_value(&v, &grain, Default::default()).unwrap();
                assert_eq!(t, encode_radix(&s, &rounded).unwrap(), "{name} {} {k}", render(&s, &x));
                let tail = &v - value_of(&s, &t).unwrap();
                assert!(BigInt::from(2) * num_traits::abs(tail) < grain);
            }
        }
    }
}
