//! Generalized positional numeral systems.
//!
//! A system pairs a finite alphabet of valued numerals with a weight for
//! each position; a string `c_n … c_2 c_1` is worth `Σ i(c_p)·a_p`. The
//! crate covers signed-digit ("directed") systems `N(a,b)`, base six,
//! factorial, power and constant weights, and provides:
//!
//! - [`codec`]: parsing, rendering, evaluation, radix encoding, bounded
//!   search, canonical forms, negation, sign and comparison;
//! - [`arithmetic`]: carry addition and multiplication, times tables,
//!   rounding and truncation, and periodic fraction expansion;
//! - [`analysis`]: completeness and univocality on bounded windows, with
//!   closed-form verdicts for radix families;
//! - [`cli`]: the `numsys` command line.
//!
//! ```
//! use numsys::{builtin, codec};
//!
//! let sd = builtin("signed-decimal").unwrap();
//! let s = codec::encode_radix(&sd, &284.into()).unwrap();
//! assert_eq!(codec::render(&sd, &s), "3β4");
//! ```

pub mod analysis;
pub mod arithmetic;
pub mod cli;
pub mod codec;
pub mod error;
pub mod system;

pub use codec::{CanonicalForm, DigitString};
pub use error::{Error, Result};
pub use system::{
    builtin, classify, make_base6, make_signed_system, primorial_base, validate, Alphabet,
    ClassificationReport, Numeral, PreNumerationSystem, WeightSequence,
};
