use num_bigint::BigInt;
use thiserror::Error;

use crate::system::Violation;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("empty input")]
    EmptyInput,

    #[error("unknown symbol {symbol:?} at index {position}")]
    UnknownSymbol { position: usize, symbol: char },

    #[error("position {position} is outside the weight table of length {len}")]
    PositionOutOfTable { position: usize, len: usize },

    #[error("string of length {len} is longer than the weight table ({table_len})")]
    StringTooLongForTable { len: usize, table_len: usize },

    #[error("positions are numbered from 1")]
    PositionZero,

    #[error("not a radix-family system: {0}")]
    NotRadixFamily(String),

    #[error("negative value {0} needs a negative numeral or an external sign")]
    NegativeWithoutSign(BigInt),

    #[error("positive value {0} needs a positive numeral or an external sign")]
    PositiveWithoutSign(BigInt),

    #[error("{value} is not representable with at most {max_len} numerals")]
    NotRepresentable { value: BigInt, max_len: usize },

    #[error("the alphabet has no zero-valued numeral")]
    NoZeroNumeral,

    #[error("cut position {k} out of range for a string of length {len}")]
    CutOutOfRange { k: usize, len: usize },

    #[error("period exceeds the bound of {max_period} digits")]
    PeriodExceedsBound { max_period: usize },

    #[error("search needs {needed} states, budget is {budget}")]
    BudgetExceeded { needed: u128, budget: u128 },

    #[error("invalid system: {}", join_violations(.0))]
    InvalidSystem(Vec<Violation>),

    #[error("system definition line {line}: {message}")]
    Definition { line: usize, message: String },

    #[error("unknown system {0:?}")]
    UnknownSystem(String),

    #[error("{0}")]
    InvalidArgument(String),
}

fn join_violations(v: &[Violation]) -> String {
    v.iter().map(|v| v.to_string()).collect::<Vec<_>>().join("; ")
}
