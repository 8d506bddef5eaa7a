//! The sequences `c` (coefficients of `∏ (1 + J x^{3^k})`) and
//! `s_n = c_n + c_{n+1}`.
//!
//! Random access goes through the base-3 digit form of `c`; the three block
//! generators exist so that form can be cross-checked.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::ToPrimitive;
use serde::{Deserialize, Serialize};

use crate::eisenstein::{EisensteinInt, UnitOrZero};
use crate::error::Error;

/// A single sequence term. Terms of `c` and `s` always lie in the
/// seven-element value set, so they are stored in that form.
pub type Term = UnitOrZero;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum SequenceKind {
    C,
    S,
}

impl SequenceKind {
    pub fn term(self, n: &BigUint) -> Term {
        match self {
            SequenceKind::C => c_term(n),
            SequenceKind::S => s_term(n),
        }
    }

    pub fn term_u64(self, n: u64) -> Term {
        match self {
            SequenceKind::C => c_term_u64(n),
            SequenceKind::S => s_term_u64(n),
        }
    }

    /// First `count` terms.
    pub fn block(self, count: usize) -> Vec<Term> {
        (0..count as u64).map(|n| self.term_u64(n)).collect()
    }
}

impl fmt::Display for SequenceKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            SequenceKind::C => "c",
            SequenceKind::S => "s",
        })
    }
}

impl FromStr for SequenceKind {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self, Error> {
        match s {
            "c" | "C" => Ok(SequenceKind::C),
            "s" | "S" => Ok(SequenceKind::S),
            _ => Err(Error::Parse(format!("unknown sequence {s:?}"))),
        }
    }
}

/// `c_n`: zero if `n` has a base-3 digit 2, otherwise `J^(number of 1 digits)`.
pub fn c_term(n: &BigUint) -> Term {
    let mut ones = 0u32;
    for d in n.to_radix_le(3) {
        match d {
            0 => {}
            1 => ones += 1,
            _ => return UnitOrZero::Zero,
        }
    }
    UnitOrZero::j_pow(ones.into())
}

pub fn c_term_u64(mut n: u64) -> Term {
    let mut ones = 0i64;
    while n > 0 {
        match n % 3 {
            0 => {}
            1 => ones += 1,
            _ => return UnitOrZero::Zero,
        }
        n /= 3;
    }
    UnitOrZero::j_pow(ones)
}

/// `s_n` from the residue of `n` mod 3:
/// `s_{3m} = −J² c_m`, `s_{3m+1} = J c_m`, `s_{3m+2} = c_{m+1}`.
pub fn s_term(n: &BigUint) -> Term {
    let (m, r) = n.div_rem(&BigUint::from(3u32));
    match r.to_u8() {
        Some(0) => UnitOrZero::NEG_J2 * c_term(&m),
        Some(1) => UnitOrZero::J * c_term(&m),
        _ => c_term(&(m + 1u32)),
    }
}

pub fn s_term_u64(n: u64) -> Term {
    let m = n / 3;
    match n % 3 {
        0 => UnitOrZero::NEG_J2 * c_term_u64(m),
        1 => UnitOrZero::J * c_term_u64(m),
        _ => c_term_u64(m + 1),
    }
}

/// `c_0 .. c_{count-1}` filled bottom-up from
/// `c_0 = 1, c_{3n} = c_n, c_{3n+1} = J c_n, c_{3n+2} = 0`.
pub fn c_block_recurrence(count: usize) -> Vec<Term> {
    let mut out = Vec::with_capacity(count);
    for i in 0..count {
        let v = match (i, i % 3) {
            (0, _) => UnitOrZero::ONE,
            (_, 0) => out[i / 3],
            (_, 1) => UnitOrZero::J * out[i / 3],
            _ => UnitOrZero::Zero,
        };
        out.push(v);
    }
    out
}

/// The substitution `1 ↦ 1J0, J ↦ JJ²0, J² ↦ J²10, 0 ↦ 000`.
fn substitute(letter: Term) -> [Term; 3] {
    use UnitOrZero as U;
    match letter {
        U::ZERO => [U::ZERO; 3],
        l if l == U::ONE => [U::ONE, U::J, U::ZERO],
        l if l == U::J => [U::J, U::J2, U::ZERO],
        l if l == U::J2 => [U::J2, U::ONE, U::ZERO],
        other => unreachable!("{other} is not in the alphabet of c"),
    }
}

/// Prefix of the fixed point of the substitution starting at `1`.
pub fn c_block_morphism(count: usize) -> Vec<Term> {
    if count == 0 {
        return Vec::new();
    }
    let mut word = vec![UnitOrZero::ONE];
    while word.len() < count {
        word = word.into_iter().flat_map(substitute).collect();
    }
    word.truncate(count);
    word
}

/// Coefficients of `∏_{3^k < count} (1 + J x^{3^k})` truncated to degree
/// `count - 1`, multiplied out over `Z[J]`.
pub fn c_block_product(count: usize) -> Vec<Term> {
    if count == 0 {
        return Vec::new();
    }
    let mut poly = vec![EisensteinInt::zero(); count];
    poly[0] = EisensteinInt::one();
    let j = EisensteinInt::j();
    let mut step = 1usize;
    while step < count {
        // In-place multiply by (1 + J x^step), high degrees first.
        for i in (step..count).rev() {
            if !poly[i - step].is_zero() {
                let add = &j * &poly[i - step];
                poly[i] = &poly[i] + &add;
            }
        }
        step *= 3;
    }
    poly.iter()
        .map(|x| {
            x.classify()
                .expect("coefficients of the product are units or zero")
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use UnitOrZero as U;

    fn big(n: u64) -> BigUint {
        BigUint::from(n)
    }

    /// Direct recursion on `c_{3n+r}`, independent of the digit form.
    fn c_recursive(n: u64) -> Term {
        if n == 0 {
            return U::ONE;
        }
        match n % 3 {
            0 => c_recursive(n / 3),
            1 => U::J * c_recursive(n / 3),
            _ => U::ZERO,
        }
    }

    #[test]
    fn c_term_examples() {
        assert_eq!(c_term(&big(0)), U::ONE);
        assert_eq!(c_term(&big(4)), U::J2);
        assert_eq!(c_term(&big(13)), U::ONE);
        assert_eq!(c_term(&big(27)), U::J);
        assert_eq!(c_term(&big(2)), U::ZERO);
    }

    #[test]
    fn block_examples() {
        assert_eq!(
            c_block_recurrence(5),
            vec![U::ONE, U::J, U::ZERO, U::J, U::J2]
        );
        assert!(c_block_recurrence(0).is_empty());
        let b = c_block_recurrence(14);
        assert_eq!(b[13], U::ONE);
        assert_eq!(b[10], U::J2);

        assert_eq!(c_block_morphism(3), vec![U::ONE, U::J, U::ZERO]);
        assert_eq!(
            c_block_morphism(9),
            vec![
                U::ONE,
                U::J,
                U::ZERO,
                U::J,
                U::J2,
                U::ZERO,
                U::ZERO,
                U::ZERO,
                U::ZERO
            ]
        );
        assert_eq!(c_block_morphism(1), vec![U::ONE]);
        assert!(c_block_morphism(0).is_empty());

        assert_eq!(c_block_product(2), vec![U::ONE, U::J]);
        assert_eq!(c_block_product(1), vec![U::ONE]);
        assert_eq!(c_block_product(14), c_block_recurrence(14));
    }

    #[test]
    fn s_term_examples() {
        assert_eq!(s_term(&big(0)), U::NEG_J2);
        assert_eq!(s_term(&big(3)), U::NEG_ONE);
        assert_eq!(s_term(&big(8)), U::J);
        assert_eq!(s_term(&big(10)), U::J2);
    }

    #[test]
    fn generators_agree_small() {
        let n = 3usize.pow(6);
        let rec = c_block_recurrence(n);
        assert_eq!(c_block_morphism(n), rec);
        assert_eq!(c_block_product(n), rec);
        for (i, v) in rec.iter().enumerate() {
            assert_eq!(c_term(&big(i as u64)), *v);
            assert_eq!(c_recursive(i as u64), *v);
        }
    }

    #[test]
    fn recurrence_and_sum_laws() {
        for n in 0..100_000u64 {
            let cn = c_term_u64(n);
            assert_eq!(c_term_u64(3 * n), cn);
            assert_eq!(c_term_u64(3 * n + 1), U::J * cn);
            assert_eq!(c_term_u64(3 * n + 2), U::ZERO);
            let sum = c_term_u64(n).to_eisenstein() + c_term_u64(n + 1).to_eisenstein();
            assert_eq!(s_term_u64(n).to_eisenstein(), sum);
            assert!(matches!(
                cn,
                U::Zero
                    | U::Unit {
                        negative: false,
                        ..
                    }
            ));
        }
    }

    #[test]
    fn big_and_small_paths_agree() {
        for n in (0..5000u64).chain([u64::MAX - 3, u64::MAX - 1, 3u64.pow(40)]) {
            assert_eq!(c_term(&big(n)), c_term_u64(n));
            if n < u64::MAX - 1 {
                assert_eq!(s_term(&big(n)), s_term_u64(n));
            }
        }
    }
}
