use thiserror::Error;

use crate::eisenstein::EisensteinInt;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by zero in Z[J]")]
    DivisionByZero,
    #[error("{dividend} is not divisible by {divisor} in Z[J]")]
    NotDivisible {
        dividend: Box<EisensteinInt>,
        divisor: Box<EisensteinInt>,
    },
    #[error("{0} is not one of 0, ±1, ±J, ±J^2")]
    NotInValueSet(Box<EisensteinInt>),
    #[error("matrix order {requested} exceeds the oracle cap of {cap}")]
    CapExceeded { requested: usize, cap: usize },
    #[error("invalid size: {0}")]
    InvalidSize(String),
    #[error("index {index} out of range 1..={len}")]
    IndexOutOfRange { index: usize, len: usize },
    #[error("kernel automaton did not converge within {limit} states")]
    NonConvergence { limit: usize },
    #[error("automaton replay disagrees with the source column at n = {n}")]
    ReplayMismatch { n: u64 },
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
