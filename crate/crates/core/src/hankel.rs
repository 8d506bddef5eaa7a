//! Dense matrices over `Z[J]`, Hankel matrices of `c` and `s`, and the
//! brute-force determinant oracle.
//!
//! Matrix positions are 1-based in the public API (`entry(1, 1)` is the top
//! left corner), matching the usual subscripts `H_n^p = (u_{p+i+j-2})`.

use std::fmt;
use std::ops::Add;
use std::str::FromStr;

use num_bigint::BigUint;
use serde::{Deserialize, Serialize};

use crate::eisenstein::{EisensteinInt, UnitOrZero};
use crate::error::{Error, Result};
use crate::sequences::SequenceKind;

pub const DEFAULT_ORACLE_CAP: usize = 512;

/// Environment variable overriding [`DEFAULT_ORACLE_CAP`].
pub const ORACLE_CAP_ENV: &str = "HANKEL_ORACLE_CAP";

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    entries: Vec<EisensteinInt>,
}

impl Matrix {
    pub fn from_vec(rows: usize, cols: usize, entries: Vec<EisensteinInt>) -> Result<Self> {
        if entries.len() != rows * cols {
            return Err(Error::InvalidSize(format!(
                "{} entries for a {rows}x{cols} matrix",
                entries.len()
            )));
        }
        Ok(Matrix {
            rows,
            cols,
            entries,
        })
    }

    /// Builds a matrix from a 1-based entry function.
    pub fn from_fn(
        rows: usize,
        cols: usize,
        mut f: impl FnMut(usize, usize) -> EisensteinInt,
    ) -> Self {
        let mut entries = Vec::with_capacity(rows * cols);
        for i in 1..=rows {
            for j in 1..=cols {
                entries.push(f(i, j));
            }
        }
        Matrix {
            rows,
            cols,
            entries,
        }
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            entries: vec![EisensteinInt::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        Self::from_fn(n, n, |i, j| {
            if i == j {
                EisensteinInt::one()
            } else {
                EisensteinInt::zero()
            }
        })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    /// Entry in row `i`, column `j` (1-based).
    pub fn entry(&self, i: usize, j: usize) -> &EisensteinInt {
        assert!(
            (1..=self.rows).contains(&i) && (1..=self.cols).contains(&j),
            "entry ({i},{j}) outside a {}x{} matrix",
            self.rows,
            self.cols
        );
        &self.entries[(i - 1) * self.cols + (j - 1)]
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |i, j| self.entry(j, i).clone())
    }

    pub fn is_symmetric(&self) -> bool {
        self.is_square()
            && (1..=self.rows).all(|i| (1..i).all(|j| self.entry(i, j) == self.entry(j, i)))
    }

    pub fn scale(&self, k: &EisensteinInt) -> Self {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().map(|x| k * x).collect(),
        }
    }

    pub fn mul(&self, rhs: &Matrix) -> Result<Matrix> {
        if self.cols != rhs.rows {
            return Err(Error::InvalidSize(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, rhs.rows, rhs.cols
            )));
        }
        Ok(Self::from_fn(self.rows, rhs.cols, |i, j| {
            (1..=self.cols).fold(EisensteinInt::zero(), |acc, k| {
                let (x, y) = (self.entry(i, k), rhs.entry(k, j));
                if x.is_zero() || y.is_zero() {
                    acc
                } else {
                    &acc + &(x * y)
                }
            })
        }))
    }

    /// `M^{(i)}`: `M` with column `i` removed.
    pub fn delete_column(&self, i: usize) -> Result<Matrix> {
        if !(1..=self.cols).contains(&i) {
            return Err(Error::IndexOutOfRange {
                index: i,
                len: self.cols,
            });
        }
        Ok(Self::from_fn(self.rows, self.cols - 1, |r, c| {
            self.entry(r, if c < i { c } else { c + 1 }).clone()
        }))
    }

    /// `M_{(i)}`: `M` with row `i` removed.
    pub fn delete_row(&self, i: usize) -> Result<Matrix> {
        if !(1..=self.rows).contains(&i) {
            return Err(Error::IndexOutOfRange {
                index: i,
                len: self.rows,
            });
        }
        Ok(Self::from_fn(self.rows - 1, self.cols, |r, c| {
            self.entry(if r < i { r } else { r + 1 }, c).clone()
        }))
    }

    /// The `rows × cols` sub-block whose top-left corner is `(row0, col0)` (1-based).
    pub fn submatrix(&self, row0: usize, col0: usize, rows: usize, cols: usize) -> Matrix {
        Self::from_fn(rows, cols, |i, j| {
            self.entry(row0 + i - 1, col0 + j - 1).clone()
        })
    }

    pub fn determinant(&self) -> Result<EisensteinInt> {
        det_bareiss(self)
    }
}

impl Add for &Matrix {
    type Output = Matrix;
    fn add(self, rhs: &Matrix) -> Matrix {
        assert_eq!(
            (self.rows, self.cols),
            (rhs.rows, rhs.cols),
            "shape mismatch"
        );
        Matrix {
            rows: self.rows,
            cols: self.cols,
            entries: self
                .entries
                .iter()
                .zip(&rhs.entries)
                .map(|(x, y)| x + y)
                .collect(),
        }
    }
}

impl fmt::Display for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 1..=self.rows {
            let row: Vec<String> = (1..=self.cols)
                .map(|j| self.entry(i, j).to_string())
                .collect();
            writeln!(f, "[{}]", row.join(", "))?;
        }
        Ok(())
    }
}

/// Exact determinant by fraction-free (Bareiss) elimination over `Z[J]`.
///
/// Zero pivots are swapped with the first lower row that has a nonzero entry
/// in the pivot column. The empty matrix has determinant 1.
pub fn det_bareiss(m: &Matrix) -> Result<EisensteinInt> {
    if !m.is_square() {
        return Err(Error::InvalidSize(format!(
            "determinant of a non-square {}x{} matrix",
            m.rows, m.cols
        )));
    }
    let n = m.rows;
    if n == 0 {
        return Ok(EisensteinInt::one());
    }
    let mut a: Vec<Vec<EisensteinInt>> = m.entries.chunks(n).map(|r| r.to_vec()).collect();
    let mut negate = false;
    let mut prev = EisensteinInt::one();
    for k in 0..n {
        if a[k][k].is_zero() {
            let Some(swap) = (k + 1..n).find(|&i| !a[i][k].is_zero()) else {
                return Ok(EisensteinInt::zero());
            };
            a.swap(k, swap);
            negate = !negate;
        }
        let (head, tail) = a.split_at_mut(k + 1);
        let pivot_row = &head[k];
        let pivot = &pivot_row[k];
        for row in tail.iter_mut() {
            let lead = row[k].clone();
            for j in k + 1..n {
                // row[j] = (row[j] * pivot - lead * pivot_row[j]) / prev
                let mut num = if row[j].is_zero() {
                    EisensteinInt::zero()
                } else {
                    &row[j] * pivot
                };
                if !lead.is_zero() && !pivot_row[j].is_zero() {
                    num = &num - &(&lead * &pivot_row[j]);
                }
                row[j] = num.exact_div(&prev)?;
            }
            row[k] = EisensteinInt::zero();
        }
        prev = a[k][k].clone();
    }
    let det = a[n - 1][n - 1].clone();
    Ok(if negate { -det } else { det })
}

/// Which Hankel family a determinant belongs to: `H` (sequence `c`) or
/// `Σ` (sequence `s`, equivalently `H_n^p + H_n^{p+1}`).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Family {
    H,
    Sigma,
}

impl Family {
    pub fn kind(self) -> SequenceKind {
        match self {
            Family::H => SequenceKind::C,
            Family::Sigma => SequenceKind::S,
        }
    }

    pub fn symbol(self) -> &'static str {
        match self {
            Family::H => "H",
            Family::Sigma => "Sigma",
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.symbol())
    }
}

impl FromStr for Family {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "H" | "h" => Ok(Family::H),
            "Sigma" | "sigma" | "S" | "s" | "Σ" => Ok(Family::Sigma),
            _ => Err(Error::Parse(format!("unknown determinant family {s:?}"))),
        }
    }
}

/// Names one Hankel determinant: `|H_n^p|` or `|Σ_n^p|`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct HankelSpec {
    pub family: Family,
    pub p: BigUint,
    pub n: usize,
}

impl HankelSpec {
    pub fn new(family: Family, p: impl Into<BigUint>, n: usize) -> Self {
        HankelSpec {
            family,
            p: p.into(),
            n,
        }
    }

    pub fn kind(&self) -> SequenceKind {
        self.family.kind()
    }
}

/// Builds Hankel-type matrices and computes their determinants exactly.
///
/// Matrix orders above `cap` are refused.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Oracle {
    pub cap: usize,
}

impl Default for Oracle {
    fn default() -> Self {
        Oracle {
            cap: DEFAULT_ORACLE_CAP,
        }
    }
}

impl Oracle {
    pub fn with_cap(cap: usize) -> Self {
        Oracle { cap }
    }

    /// Reads the cap from `HANKEL_ORACLE_CAP`, falling back to the default.
    pub fn from_env() -> Result<Self> {
        match std::env::var(ORACLE_CAP_ENV) {
            Ok(v) => v
                .trim()
                .parse()
                .map(Oracle::with_cap)
                .map_err(|_| Error::Parse(format!("{ORACLE_CAP_ENV}={v:?} is not a size"))),
            Err(_) => Ok(Oracle::default()),
        }
    }

    pub(crate) fn check(&self, n: usize) -> Result<()> {
        if n > self.cap {
            Err(Error::CapExceeded {
                requested: n,
                cap: self.cap,
            })
        } else {
            Ok(())
        }
    }

    /// `n × n` matrix with entry `(i, j) = u_{p + stride·(i+j-2)}`.
    fn strided(&self, kind: SequenceKind, p: &BigUint, n: usize, stride: usize) -> Result<Matrix> {
        self.check(n)?;
        let terms: Vec<EisensteinInt> = (0..(2 * n).saturating_sub(1))
            .map(|k| kind.term(&(p + BigUint::from(stride * k))).to_eisenstein())
            .collect();
        Ok(Matrix::from_fn(n, n, |i, j| terms[i + j - 2].clone()))
    }

    /// `H_n^p(u)` for `u = c` or `u = s`.
    pub fn hankel_matrix(&self, kind: SequenceKind, p: &BigUint, n: usize) -> Result<Matrix> {
        self.strided(kind, p, n, 1)
    }

    /// `Σ_n^p`, the Hankel matrix of `s`.
    pub fn sigma_matrix(&self, p: &BigUint, n: usize) -> Result<Matrix> {
        self.hankel_matrix(SequenceKind::S, p, n)
    }

    /// `Σ_n^p` assembled as `H_n^p + H_n^{p+1}`.
    pub fn sigma_matrix_as_sum(&self, p: &BigUint, n: usize) -> Result<Matrix> {
        let lo = self.hankel_matrix(SequenceKind::C, p, n)?;
        let hi = self.hankel_matrix(SequenceKind::C, &(p + 1u32), n)?;
        Ok(&lo + &hi)
    }

    /// `K_n^p(u) = (u_{p+3(i+j-2)})`.
    pub fn k_matrix(&self, kind: SequenceKind, p: &BigUint, n: usize) -> Result<Matrix> {
        self.strided(kind, p, n, 3)
    }

    pub fn matrix(&self, spec: &HankelSpec) -> Result<Matrix> {
        self.hankel_matrix(spec.kind(), &spec.p, spec.n)
    }

    pub fn determinant(&self, spec: &HankelSpec) -> Result<EisensteinInt> {
        det_bareiss(&self.matrix(spec)?)
    }

    /// Determinant classified into the seven-element value set.
    pub fn unit_determinant(&self, spec: &HankelSpec) -> Result<UnitOrZero> {
        self.determinant(spec)?.classify()
    }
}
