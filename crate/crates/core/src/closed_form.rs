//! Logarithmic-time evaluation of `|H_n^p|` and `|Σ_n^p|`.
//!
//! [`Evaluator::eval`] descends through the relation table in [`crate::lemma`],
//! dividing both indices by three at each level. Orders `n ≤ 2` are
//! evaluated directly from the (at most 2×2) matrix.
//!
//! The `p = 0` and `p = 1` columns also have single-chain recurrences
//! ([`h_col0`] and friends) that need no memo at all.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;
use std::sync::Mutex;

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::ToPrimitive;
use serde::{Deserialize, Serialize};

use crate::eisenstein::UnitOrZero;
use crate::error::Error;
use crate::hankel::{HankelSpec, Oracle};
use crate::lemma::{relation_for, Rhs};

pub use crate::hankel::Family;

/// Key of one determinant, `|H_n^p|` or `|Σ_n^p|`, at arbitrary precision.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct DetKey {
    pub family: Family,
    pub n: BigUint,
    pub p: BigUint,
}

impl DetKey {
    pub fn new(family: Family, n: impl Into<BigUint>, p: impl Into<BigUint>) -> Self {
        DetKey {
            family,
            n: n.into(),
            p: p.into(),
        }
    }

    pub fn h(n: impl Into<BigUint>, p: impl Into<BigUint>) -> Self {
        Self::new(Family::H, n, p)
    }

    pub fn sigma(n: impl Into<BigUint>, p: impl Into<BigUint>) -> Self {
        Self::new(Family::Sigma, n, p)
    }
}

impl fmt::Display for DetKey {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "|{}_{}^{}|", self.family, self.n, self.p)
    }
}

/// `A_n^p = (−1)^n |H_n^{p+1}| |Σ_n^p|` and `B_n^p = (−1)^n |H_{n+1}^p| |Σ_n^{p+1}|`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ABValue {
    pub a: UnitOrZero,
    pub b: UnitOrZero,
}

/// Memoizing evaluator. The memo is a cache of a pure function, so a shared
/// evaluator may be queried from several threads.
#[derive(Debug, Default)]
pub struct Evaluator {
    memo: Mutex<HashMap<DetKey, UnitOrZero>>,
}

impl Evaluator {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn cached(&self) -> usize {
        self.memo.lock().unwrap().len()
    }

    pub fn eval(&self, key: &DetKey) -> UnitOrZero {
        if let Some(v) = self.memo.lock().unwrap().get(key) {
            return *v;
        }
        let v = self.compute(key);
        self.memo.lock().unwrap().insert(key.clone(), v);
        v
    }

    pub fn h(&self, n: impl Into<BigUint>, p: impl Into<BigUint>) -> UnitOrZero {
        self.eval(&DetKey::h(n, p))
    }

    pub fn sigma(&self, n: impl Into<BigUint>, p: impl Into<BigUint>) -> UnitOrZero {
        self.eval(&DetKey::sigma(n, p))
    }

    fn compute(&self, key: &DetKey) -> UnitOrZero {
        if let Some(small) = key.n.to_usize().filter(|&n| n <= 2) {
            return base_case(key.family, &key.p, small);
        }
        let three = BigUint::from(3u32);
        let (n, a) = key.n.div_rem(&three);
        let (p, b) = key.p.div_rem(&three);
        let rel = relation_for(key.family, small_residue(&a), small_residue(&b));
        let Rhs::Product { factors, .. } = rel.rhs else {
            return UnitOrZero::Zero;
        };
        let mut acc = rel.prefactor(n.is_odd());
        for f in factors {
            let sub = DetKey {
                family: f.family,
                n: &n + f.dn as u32,
                p: &p + f.dp as u32,
            };
            acc = acc * self.eval(&sub).pow(f.power);
            if acc.is_zero() {
                break;
            }
        }
        acc
    }

    pub fn ab(&self, n: &BigUint, p: &BigUint) -> ABValue {
        let sign = UnitOrZero::sign(n.is_odd());
        let n1 = n + 1u32;
        let p1 = p + 1u32;
        ABValue {
            a: sign * self.h(n.clone(), p1.clone()) * self.sigma(n.clone(), p.clone()),
            b: sign * self.h(n1, p.clone()) * self.sigma(n.clone(), p1),
        }
    }
}

fn small_residue(r: &BigUint) -> u8 {
    r.to_u8().expect("residue mod 3")
}

/// Orders 0, 1, 2 straight from the matrix.
fn base_case(family: Family, p: &BigUint, n: usize) -> UnitOrZero {
    let spec = HankelSpec {
        family,
        p: p.clone(),
        n,
    };
    Oracle::default()
        .unit_determinant(&spec)
        .unwrap_or_else(|e| panic!("determinant of order {n} left the value set: {e}"))
}

/// `|H_n^0|`: `|H_0^0| = |H_1^0| = 1`, `|H_{3m}^0| = |H_m^0|`,
/// `|H_{3m+1}^0| = |H_{m+1}^0|`, `|H_{3m+2}^0| = −J² |H_{m+1}^0|`.
pub fn h_col0(n: &BigUint) -> UnitOrZero {
    descend(n, 2, |r| match r {
        0 => (UnitOrZero::ONE, 0),
        1 => (UnitOrZero::ONE, 1),
        _ => (UnitOrZero::NEG_J2, 1),
    })
}

/// `|H_n^1|`: `|H_0^1| = 1`, `|H_{3m}^1| = |H_m^1|`, `|H_{3m+1}^1| = J |H_m^1|`,
/// `|H_{3m+2}^1| = J |H_{m+1}^1|`.
pub fn h_col1(n: &BigUint) -> UnitOrZero {
    descend(n, 1, |r| match r {
        0 => (UnitOrZero::ONE, 0),
        1 => (UnitOrZero::J, 0),
        _ => (UnitOrZero::J, 1),
    })
}

/// `|Σ_n^0|`: `|Σ_0^0| = 1`, `|Σ_{3m}^0| = |Σ_m^0|`, `|Σ_{3m+1}^0| = −J² |Σ_m^0|`,
/// `|Σ_{3m+2}^0| = −J² |Σ_{m+1}^0|`.
pub fn sigma_col0(n: &BigUint) -> UnitOrZero {
    descend(n, 1, |r| match r {
        0 => (UnitOrZero::ONE, 0),
        1 => (UnitOrZero::NEG_J2, 0),
        _ => (UnitOrZero::NEG_J2, 1),
    })
}

/// `|Σ_n^1|`: `|Σ_0^1| = 1`, `|Σ_{3m}^1| = |Σ_m^1|`, `|Σ_{3m+1}^1| = J |Σ_m^1|`,
/// `|Σ_{3m+2}^1| = |Σ_m^1|`.
pub fn sigma_col1(n: &BigUint) -> UnitOrZero {
    descend(n, 1, |r| match r {
        0 => (UnitOrZero::ONE, 0),
        1 => (UnitOrZero::J, 0),
        _ => (UnitOrZero::ONE, 0),
    })
}

/// Follows a single-chain recurrence `v(3m + r) = unit(r) · v(m + shift(r))`
/// down to an index below `base_below`, where the value is 1.
fn descend(n: &BigUint, base_below: u32, step: impl Fn(u8) -> (UnitOrZero, u32)) -> UnitOrZero {
    let three = BigUint::from(3u32);
    let mut acc = UnitOrZero::ONE;
    let mut n = n.clone();
    while n >= BigUint::from(base_below) {
        let (m, r) = n.div_rem(&three);
        let (unit, shift) = step(small_residue(&r));
        acc = acc * unit;
        n = m + shift;
    }
    acc
}

/// One of the four columns with a closed-form recurrence.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Column {
    H0,
    H1,
    Sigma0,
    Sigma1,
}

impl Column {
    pub const ALL: [Column; 4] = [Column::H0, Column::H1, Column::Sigma0, Column::Sigma1];

    pub fn value(self, n: &BigUint) -> UnitOrZero {
        match self {
            Column::H0 => h_col0(n),
            Column::H1 => h_col1(n),
            Column::Sigma0 => sigma_col0(n),
            Column::Sigma1 => sigma_col1(n),
        }
    }

    pub fn value_u64(self, n: u64) -> UnitOrZero {
        self.value(&BigUint::from(n))
    }

    pub fn family(self) -> Family {
        match self {
            Column::H0 | Column::H1 => Family::H,
            Column::Sigma0 | Column::Sigma1 => Family::Sigma,
        }
    }

    pub fn p(self) -> u32 {
        match self {
            Column::H0 | Column::Sigma0 => 0,
            Column::H1 | Column::Sigma1 => 1,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Column::H0 => "h0",
            Column::H1 => "h1",
            Column::Sigma0 => "s0",
            Column::Sigma1 => "s1",
        }
    }
}

impl fmt::Display for Column {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Column {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self, Error> {
        Column::ALL
            .into_iter()
            .find(|c| c.name() == s)
            .ok_or_else(|| Error::Parse(format!("unknown column {s:?}, expected h0, h1, s0 or s1")))
    }
}
