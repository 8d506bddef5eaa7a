//! The eighteen ternary recurrences relating `|H_{3n+a}^{3p+b}|` and
//! `|Σ_{3n+a}^{3p+b}|` to determinants of order `n` or `n + 1` at offsets
//! `p` or `p + 1`. Valid for `n ≥ 1`, `p ≥ 0`.
//!
//! Each relation reads
//!
//! ```text
//! |X_{3n+a}^{3p+b}| = (−1)^{n+sign_shift} · J^{j_exp} · ∏ |Y_{n+dn}^{p+dp}|^{power}
//! ```
//!
//! or is identically zero.

use crate::eisenstein::UnitOrZero;
use crate::hankel::Family;

/// One factor `|Y_{n+dn}^{p+dp}|^power` on the right-hand side.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Factor {
    pub family: Family,
    pub dn: u8,
    pub dp: u8,
    pub power: u32,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Rhs {
    Zero,
    Product {
        sign_shift: u8,
        j_exp: u8,
        factors: &'static [Factor],
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Relation {
    /// 1-based label, `L1` through `L18`.
    pub label: u8,
    pub family: Family,
    /// `a` in `3n + a`.
    pub n_residue: u8,
    /// `b` in `3p + b`.
    pub p_residue: u8,
    pub rhs: Rhs,
}

impl Relation {
    pub fn name(&self) -> String {
        format!("L{}", self.label)
    }

    /// Unit prefactor `(−1)^{n+sign_shift} J^{j_exp}` for a given parity of `n`.
    pub fn prefactor(&self, n_odd: bool) -> UnitOrZero {
        match self.rhs {
            Rhs::Zero => UnitOrZero::Zero,
            Rhs::Product {
                sign_shift, j_exp, ..
            } => UnitOrZero::sign(n_odd ^ (sign_shift % 2 == 1)) * UnitOrZero::j_pow(j_exp.into()),
        }
    }

    pub fn factors(&self) -> &'static [Factor] {
        match self.rhs {
            Rhs::Zero => &[],
            Rhs::Product { factors, .. } => factors,
        }
    }
}

const fn h(dn: u8, dp: u8, power: u32) -> Factor {
    Factor {
        family: Family::H,
        dn,
        dp,
        power,
    }
}

const fn s(dn: u8, dp: u8, power: u32) -> Factor {
    Factor {
        family: Family::Sigma,
        dn,
        dp,
        power,
    }
}

const fn rel(label: u8, family: Family, a: u8, b: u8, rhs: Rhs) -> Relation {
    Relation {
        label,
        family,
        n_residue: a,
        p_residue: b,
        rhs,
    }
}

const fn prod(sign_shift: u8, j_exp: u8, factors: &'static [Factor]) -> Rhs {
    Rhs::Product {
        sign_shift,
        j_exp,
        factors,
    }
}

use Family::{Sigma, H};

pub const RELATIONS: [Relation; 18] = [
    rel(
        1,
        H,
        0,
        0,
        prod(0, 0, &[h(0, 0, 1), h(0, 1, 1), s(0, 0, 1)]),
    ),
    rel(
        2,
        H,
        1,
        0,
        prod(0, 0, &[h(0, 1, 1), h(1, 0, 1), s(0, 0, 1)]),
    ),
    rel(3, H, 2, 0, prod(1, 2, &[h(1, 0, 2), s(0, 1, 1)])),
    rel(4, H, 0, 1, prod(0, 0, &[h(0, 1, 2), s(0, 0, 1)])),
    rel(
        5,
        H,
        1,
        1,
        prod(0, 1, &[h(0, 1, 1), h(1, 0, 1), s(0, 1, 1)]),
    ),
    rel(
        6,
        H,
        2,
        1,
        prod(0, 1, &[h(1, 1, 1), h(1, 0, 1), s(0, 1, 1)]),
    ),
    rel(7, H, 0, 2, prod(0, 0, &[h(0, 1, 2), s(0, 1, 1)])),
    rel(8, H, 1, 2, Rhs::Zero),
    rel(9, H, 2, 2, prod(1, 0, &[h(1, 1, 2), s(0, 1, 1)])),
    rel(10, Sigma, 0, 0, prod(0, 0, &[s(0, 0, 2), h(0, 1, 1)])),
    rel(
        11,
        Sigma,
        1,
        0,
        prod(1, 2, &[h(1, 0, 1), s(0, 0, 1), s(0, 1, 1)]),
    ),
    rel(
        12,
        Sigma,
        2,
        0,
        prod(1, 2, &[h(1, 0, 1), s(1, 0, 1), s(0, 1, 1)]),
    ),
    rel(
        13,
        Sigma,
        0,
        1,
        prod(0, 0, &[h(0, 1, 1), s(0, 0, 1), s(0, 1, 1)]),
    ),
    rel(14, Sigma, 1, 1, prod(0, 1, &[h(1, 0, 1), s(0, 1, 2)])),
    rel(
        15,
        Sigma,
        2,
        1,
        prod(1, 0, &[h(1, 1, 1), s(1, 0, 1), s(0, 1, 1)]),
    ),
    rel(16, Sigma, 0, 2, prod(0, 0, &[s(0, 1, 2), h(0, 1, 1)])),
    rel(17, Sigma, 1, 2, prod(0, 0, &[s(0, 1, 2), h(1, 1, 1)])),
    rel(18, Sigma, 2, 2, Rhs::Zero),
];

/// The relation for `|family_{3n+n_residue}^{3p+p_residue}|`.
pub fn relation_for(family: Family, n_residue: u8, p_residue: u8) -> &'static Relation {
    let base = match family {
        Family::H => 0,
        Family::Sigma => 9,
    };
    &RELATIONS[base + 3 * p_residue as usize + n_residue as usize]
}
