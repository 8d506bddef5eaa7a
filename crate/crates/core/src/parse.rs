//! Parsing of nonnegative indices from text.
//!
//! An index is either a plain decimal string (`"1000000000000000000"`) or an
//! exact power `base^exp` of two decimal strings (`"10^18"`). Signs,
//! whitespace, separators and scientific notation (`"1e18"`) are rejected.

use num_bigint::BigUint;
use num_traits::{Num, One};

use crate::error::{Error, Result};

/// Largest exponent accepted in `base^exp`.
pub const MAX_EXPONENT: u32 = 4096;
/// Rough size limit (in bits) on the value of `base^exp`.
pub const MAX_POWER_BITS: u64 = 1 << 20;

fn decimal(s: &str, whole: &str) -> Result<BigUint> {
    if s.is_empty() || !s.bytes().all(|b| b.is_ascii_digit()) {
        return Err(Error::Parse(format!(
            "not a nonnegative decimal index: {whole:?}"
        )));
    }
    BigUint::from_str_radix(s, 10).map_err(|e| Error::Parse(format!("{whole:?}: {e}")))
}

pub fn parse_index(s: &str) -> Result<BigUint> {
    match s.split_once('^') {
        None => decimal(s, s),
        Some((base, exp)) => {
            let base = decimal(base, s)?;
            let exp = decimal(exp, s)?;
            let exp: u32 = match u32::try_from(&exp) {
                Ok(e) if e <= MAX_EXPONENT => e,
                _ => {
                    return Err(Error::Parse(format!(
                        "exponent in {s:?} exceeds {MAX_EXPONENT}"
                    )))
                }
            };
            if base > BigUint::one() && base.bits() * u64::from(exp) > MAX_POWER_BITS {
                return Err(Error::Parse(format!("{s:?} is too large")));
            }
            Ok(base.pow(exp))
        }
    }
}

/// Comma-separated indices; empty lists and empty items are errors.
pub fn parse_index_list(s: &str) -> Result<Vec<BigUint>> {
    if s.is_empty() {
        return Err(Error::Parse("empty index list".into()));
    }
    s.split(',').map(parse_index).collect()
}

/// Parses an index that must fit in a `usize` (matrix orders, counts).
pub fn parse_size(s: &str) -> Result<usize> {
    let v = parse_index(s)?;
    usize::try_from(&v)
        .map_err(|_| Error::Parse(format!("{s:?} does not fit in a machine integer")))
}
