//! Verification sweeps: every identity is checked by exact comparison, with
//! determinants taken from the brute-force oracle unless a sweep is
//! explicitly about the fast path.

use std::collections::HashMap;
use std::fmt;
use std::ops::RangeInclusive;
use std::str::FromStr;
use std::sync::Mutex;

use num_bigint::BigUint;
use rand::{Rng, SeedableRng};
use rayon::prelude::*;

use crate::closed_form::{h_col0, h_col1, sigma_col0, sigma_col1, Column, DetKey, Evaluator};
use crate::eisenstein::{EisensteinInt, UnitOrZero};
use crate::error::{Error, Result};
use crate::hankel::{Family, HankelSpec, Matrix, Oracle};
use crate::lemma::RELATIONS;
use crate::sequences::{self, SequenceKind};
use crate::sudoku::{conjugate_blocks, k_specialization, sudoku_layout};

use UnitOrZero as U;

/// `|H_n^0|, |H_n^1|, |Σ_n^0|, |Σ_n^1|` for `n = 0..=11`.
pub const THEOREM_TABLES: [(Column, [UnitOrZero; 12]); 4] = [
    (
        Column::H0,
        [
            U::ONE,
            U::ONE,
            U::NEG_J2,
            U::ONE,
            U::NEG_J2,
            U::J,
            U::NEG_J2,
            U::ONE,
            U::NEG_J2,
            U::ONE,
            U::NEG_J2,
            U::J,
        ],
    ),
    (
        Column::H1,
        [
            U::ONE,
            U::J,
            U::J2,
            U::J,
            U::J2,
            U::ONE,
            U::J2,
            U::ONE,
            U::J2,
            U::J,
            U::J2,
            U::ONE,
        ],
    ),
    (
        Column::Sigma0,
        [
            U::ONE,
            U::NEG_J2,
            U::J,
            U::NEG_J2,
            U::J,
            U::NEG_ONE,
            U::J,
            U::NEG_ONE,
            U::J,
            U::NEG_J2,
            U::J,
            U::NEG_ONE,
        ],
    ),
    (
        Column::Sigma1,
        [
            U::ONE,
            U::J,
            U::ONE,
            U::J,
            U::J2,
            U::J,
            U::ONE,
            U::J,
            U::ONE,
            U::J,
            U::J2,
            U::J,
        ],
    ),
];

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Suite {
    Lemma,
    Corollary,
    TheoremTables,
    Blocks,
    Generators,
    Grid,
    All,
}

impl FromStr for Suite {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Ok(match s {
            "lemma" => Suite::Lemma,
            "corollary" => Suite::Corollary,
            "theorem-tables" => Suite::TheoremTables,
            "blocks" => Suite::Blocks,
            "generators" => Suite::Generators,
            "grid" => Suite::Grid,
            "all" => Suite::All,
            _ => return Err(Error::Parse(format!("unknown suite {s:?}"))),
        })
    }
}

/// The first identity instance that did not hold.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Failure {
    pub identity: String,
    pub n: String,
    pub p: String,
    pub lhs: String,
    pub rhs: String,
}

impl fmt::Display for Failure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} failed at n={} p={}: lhs={} rhs={}",
            self.identity, self.n, self.p, self.lhs, self.rhs
        )
    }
}

#[derive(Clone, Debug, Default)]
pub struct Check {
    pub identity: String,
    pub passed: usize,
    pub total: usize,
}

/// Per-identity pass counts plus the first failure, if any.
#[derive(Clone, Debug, Default)]
pub struct Report {
    pub checks: Vec<Check>,
    pub failure: Option<Failure>,
}

impl Report {
    pub fn ok(&self) -> bool {
        self.failure.is_none() && self.checks.iter().all(|c| c.passed == c.total)
    }

    pub fn merge(&mut self, other: Report) {
        self.checks.extend(other.checks);
        if self.failure.is_none() {
            self.failure = other.failure;
        }
    }

    fn record<T: fmt::Display + PartialEq>(
        &mut self,
        identity: &str,
        n: impl fmt::Display,
        p: impl fmt::Display,
        lhs: Result<T>,
        rhs: Result<T>,
    ) {
        let idx = match self.checks.iter().position(|c| c.identity == identity) {
            Some(i) => i,
            None => {
                self.checks.push(Check {
                    identity: identity.to_owned(),
                    ..Check::default()
                });
                self.checks.len() - 1
            }
        };
        let check = &mut self.checks[idx];
        check.total += 1;
        let show = |v: &Result<T>| match v {
            Ok(v) => v.to_string(),
            Err(e) => format!("error({e})"),
        };
        let pass = matches!((&lhs, &rhs), (Ok(a), Ok(b)) if a == b);
        if pass {
            check.passed += 1;
        } else if self.failure.is_none() {
            self.failure = Some(Failure {
                identity: identity.to_owned(),
                n: n.to_string(),
                p: p.to_string(),
                lhs: show(&lhs),
                rhs: show(&rhs),
            });
        }
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.checks {
            let status = if c.passed == c.total { "ok" } else { "FAIL" };
            writeln!(
                f,
                "{:<28} {:>6}/{:<6} {status}",
                c.identity, c.passed, c.total
            )?;
        }
        if let Some(fail) = &self.failure {
            writeln!(f, "first failure: {fail}")?;
        }
        Ok(())
    }
}

/// Memo of oracle determinants keyed by `(family, n, p)`.
#[derive(Debug, Default)]
pub struct OracleTable {
    oracle: Oracle,
    memo: Mutex<HashMap<(Family, usize, u64), Result<UnitOrZero>>>,
}

impl OracleTable {
    pub fn new(oracle: Oracle) -> Self {
        OracleTable {
            oracle,
            memo: Mutex::default(),
        }
    }

    fn compute(&self, family: Family, n: usize, p: u64) -> Result<UnitOrZero> {
        self.oracle
            .determinant(&HankelSpec::new(family, p, n))
            .and_then(|d| d.classify())
    }

    /// `|family_n^p|` classified into the value set; a value outside the set
    /// comes back as [`Error::NotInValueSet`].
    pub fn get(&self, family: Family, n: usize, p: u64) -> Result<UnitOrZero> {
        if let Some(v) = self.memo.lock().unwrap().get(&(family, n, p)) {
            return v.clone();
        }
        let v = self.compute(family, n, p);
        self.memo.lock().unwrap().insert((family, n, p), v.clone());
        v
    }

    /// Computes a batch of determinants in parallel.
    pub fn prefetch(&self, keys: impl IntoIterator<Item = (Family, usize, u64)>) {
        let missing: Vec<_> = {
            let memo = self.memo.lock().unwrap();
            let mut keys: Vec<_> = keys.into_iter().filter(|k| !memo.contains_key(k)).collect();
            keys.sort_unstable();
            keys.dedup();
            keys
        };
        let values: Vec<_> = missing
            .par_iter()
            .map(|&(f, n, p)| ((f, n, p), self.compute(f, n, p)))
            .collect();
        self.memo.lock().unwrap().extend(values);
    }

    pub fn h(&self, n: usize, p: u64) -> Result<UnitOrZero> {
        self.get(Family::H, n, p)
    }

    pub fn sigma(&self, n: usize, p: u64) -> Result<UnitOrZero> {
        self.get(Family::Sigma, n, p)
    }
}

/// Both tables, through the column recurrences, the general evaluator and
/// the oracle.
pub fn theorem_tables(table: &OracleTable) -> Report {
    let mut report = Report::default();
    let ev = Evaluator::new();
    for (column, values) in THEOREM_TABLES {
        for (n, &expected) in values.iter().enumerate() {
            let big = BigUint::from(n);
            let name = format!("table {column}");
            report.record(
                &format!("{name} (recurrence)"),
                n,
                column.p(),
                Ok(column.value(&big)),
                Ok(expected),
            );
            let key = DetKey::new(column.family(), n, column.p());
            report.record(
                &format!("{name} (eval)"),
                n,
                column.p(),
                Ok(ev.eval(&key)),
                Ok(expected),
            );
            let oracle = table.get(column.family(), n, column.p().into());
            report.record(
                &format!("{name} (oracle)"),
                n,
                column.p(),
                oracle,
                Ok(expected),
            );
        }
    }
    report
}

/// Each of the eighteen relations with oracle determinants on both sides,
/// for `1 ≤ n ≤ n_max`, `0 ≤ p ≤ p_max`.
pub fn lemma(table: &OracleTable, n_max: usize, p_max: u64) -> Report {
    relations_over(table, 1..=n_max, p_max)
}

/// The relations at `n = 0`, outside their stated range. Informational
/// only: the evaluator grounds `n ≤ 2` in the oracle and never uses this.
pub fn lemma_at_zero(table: &OracleTable, p_max: u64) -> Report {
    relations_over(table, 0..=0, p_max)
}

fn relations_over(table: &OracleTable, ns: RangeInclusive<usize>, p_max: u64) -> Report {
    let mut keys = Vec::new();
    for rel in &RELATIONS {
        for n in ns.clone() {
            for p in 0..=p_max {
                keys.push((
                    rel.family,
                    3 * n + rel.n_residue as usize,
                    3 * p + rel.p_residue as u64,
                ));
                for f in rel.factors() {
                    keys.push((f.family, n + f.dn as usize, p + f.dp as u64));
                }
            }
        }
    }
    table.prefetch(keys);

    let mut report = Report::default();
    for rel in &RELATIONS {
        for n in ns.clone() {
            for p in 0..=p_max {
                let lhs = table.get(
                    rel.family,
                    3 * n + rel.n_residue as usize,
                    3 * p + rel.p_residue as u64,
                );
                let rhs = rel
                    .factors()
                    .iter()
                    .try_fold(rel.prefactor(n % 2 == 1), |acc, f| {
                        table
                            .get(f.family, n + f.dn as usize, p + f.dp as u64)
                            .map(|v| acc * v.pow(f.power))
                    });
                report.record(&rel.name(), n, p, lhs, rhs);
            }
        }
    }
    report
}

/// `A_n^p` and `B_n^p` from oracle determinants.
fn ab_oracle(table: &OracleTable, n: usize, p: u64) -> Result<(UnitOrZero, UnitOrZero)> {
    let sign = UnitOrZero::sign(n % 2 == 1);
    let a = sign * table.h(n, p + 1)? * table.sigma(n, p)?;
    let b = sign * table.h(n + 1, p)? * table.sigma(n, p + 1)?;
    Ok((a, b))
}

/// The six `A`/`B` identities on the grid, the six `p_n`/`q_n`
/// recurrences and `p_n = q_n = 1` for `n ≤ n_max` (oracle), and the product
/// identities `|H_n^1||Σ_n^0| = |H_{n+1}^0||Σ_n^1| = (−1)^n` for
/// `n ≤ fast_n_max` (fast path).
pub fn corollary(table: &OracleTable, n_max: usize, p_max: u64, fast_n_max: u64) -> Report {
    let mut offsets: Vec<u64> = (0..=p_max)
        .flat_map(|p| [3 * p, 3 * p + 1, p, p + 1])
        .collect();
    offsets.sort_unstable();
    offsets.dedup();
    let keys: Vec<_> = (0..=3 * n_max + 3)
        .flat_map(|n| {
            offsets
                .iter()
                .flat_map(move |&p| [(Family::H, n, p), (Family::Sigma, n, p)])
        })
        .collect();
    table.prefetch(keys);

    let mut report = Report::default();
    let cube = |x: UnitOrZero| x.pow(3);
    let sq = |x: UnitOrZero| x.pow(2);
    for n in 1..=n_max {
        for p in 0..=p_max {
            let abn = ab_oracle(table, n, p);
            let abn1 = ab_oracle(table, n + 1, p);
            let lhs = |k: usize| ab_oracle(table, 3 * n + k, 3 * p);
            let ident: [(&str, Result<UnitOrZero>, Result<UnitOrZero>); 6] = [
                ("C1", lhs(0).map(|v| v.0), abn.clone().map(|(a, _)| cube(a))),
                (
                    "C2",
                    lhs(1).map(|v| v.0),
                    abn.clone().map(|(a, b)| a * sq(b)),
                ),
                (
                    "C3",
                    lhs(2).map(|v| v.0),
                    abn1.clone()
                        .and_then(|(a1, _)| abn.clone().map(|(_, b)| a1 * sq(b))),
                ),
                (
                    "C4",
                    lhs(0).map(|v| v.1),
                    abn.clone().map(|(a, b)| sq(a) * b),
                ),
                ("C5", lhs(1).map(|v| v.1), abn.clone().map(|(_, b)| cube(b))),
                (
                    "C6",
                    lhs(2).map(|v| v.1),
                    abn1.and_then(|(a1, _)| abn.clone().map(|(_, b)| sq(a1) * b)),
                ),
            ];
            for (name, l, r) in ident {
                report.record(name, n, p, l, r);
            }
        }
    }

    // p_n = A_n^0 and q_n = B_n^0.
    let pq = |n: usize| ab_oracle(table, n, 0);
    for n in 0..=n_max {
        let (l0, l1, l2, base, next) = (pq(3 * n), pq(3 * n + 1), pq(3 * n + 2), pq(n), pq(n + 1));
        let rec: [(&str, Result<UnitOrZero>, Result<UnitOrZero>); 6] = [
            (
                "p(3n) = p(n)^3",
                l0.clone().map(|v| v.0),
                base.clone().map(|(p, _)| cube(p)),
            ),
            (
                "p(3n+1) = p(n)q(n)^2",
                l1.clone().map(|v| v.0),
                base.clone().map(|(p, q)| p * sq(q)),
            ),
            (
                "p(3n+2) = p(n+1)q(n)^2",
                l2.clone().map(|v| v.0),
                next.clone()
                    .and_then(|(p1, _)| base.clone().map(|(_, q)| p1 * sq(q))),
            ),
            (
                "q(3n) = p(n)^2 q(n)",
                l0.map(|v| v.1),
                base.clone().map(|(p, q)| sq(p) * q),
            ),
            (
                "q(3n+1) = q(n)^3",
                l1.map(|v| v.1),
                base.clone().map(|(_, q)| cube(q)),
            ),
            (
                "q(3n+2) = p(n+1)^2 q(n)",
                l2.map(|v| v.1),
                next.and_then(|(p1, _)| base.clone().map(|(_, q)| sq(p1) * q)),
            ),
        ];
        for (name, l, r) in rec {
            report.record(name, n, 0, l, r);
        }
        report.record("p(n) = 1", n, 0, base.clone().map(|v| v.0), Ok(U::ONE));
        report.record("q(n) = 1", n, 0, base.map(|v| v.1), Ok(U::ONE));
    }

    let ev = Evaluator::new();
    for n in 0..=fast_n_max {
        let big = BigUint::from(n);
        let sign = UnitOrZero::sign(n % 2 == 1);
        report.record(
            "|H_n^1||S_n^0| = (-1)^n",
            n,
            0,
            Ok(h_col1(&big) * sigma_col0(&big)),
            Ok(sign),
        );
        report.record(
            "|H_n+1^0||S_n^1| = (-1)^n",
            n,
            1,
            Ok(h_col0(&(&big + 1u32)) * sigma_col1(&big)),
            Ok(sign),
        );
        let ab = ev.ab(&big, &BigUint::from(0u32));
        report.record(
            "A_n^0 = B_n^0 = 1 (eval)",
            n,
            0,
            Ok(fmt_pair((ab.a, ab.b))),
            Ok(fmt_pair((U::ONE, U::ONE))),
        );
    }
    report
}

fn fmt_pair((a, b): (UnitOrZero, UnitOrZero)) -> String {
    format!("({a}, {b})")
}

/// Fast evaluator against the oracle on `0 ≤ n ≤ n_max`, `0 ≤ p ≤ p_max`,
/// both families. Also records whether every oracle value is in the value set.
pub fn grid(table: &OracleTable, n_max: usize, p_max: u64) -> Report {
    let keys: Vec<_> = [Family::H, Family::Sigma]
        .into_iter()
        .flat_map(|f| (0..=n_max).flat_map(move |n| (0..=p_max).map(move |p| (f, n, p))))
        .collect();
    table.prefetch(keys.iter().copied());
    let ev = Evaluator::new();
    let mut report = Report::default();
    for &(family, n, p) in &keys {
        let oracle = table.get(family, n, p);
        report.record(
            "value set",
            n,
            p,
            oracle.as_ref().map(|_| true).map_err(Clone::clone),
            Ok(true),
        );
        let fast = ev.eval(&DetKey::new(family, n, p));
        report.record(&format!("eval = oracle ({family})"), n, p, Ok(fast), oracle);
    }
    report
}

/// The residue-block machinery: the subsampling formula on random
/// matrices, the stride-3 block layouts of Hankel matrices of order
/// `3n, 3n+1, 3n+2`, and the `K`-matrix specializations for `c` and `s`.
pub fn blocks(oracle: &Oracle, n_max: usize, p_max: u64, k_max: usize, seed: u64) -> Report {
    let mut report = Report::default();

    let mut rng = rand::rngs::StdRng::seed_from_u64(seed);
    for size in 1..=30usize {
        let m = Matrix::from_fn(size, size, |_, _| {
            EisensteinInt::new(rng.gen_range(-100..=100), rng.gen_range(-100..=100))
        });
        match conjugate_blocks(&m) {
            Ok(grid) => {
                for r in 1..=3 {
                    for c in 1..=3 {
                        let (rows, cols) = (grid.sizes[r - 1], grid.sizes[c - 1]);
                        let expect = Matrix::from_fn(rows, cols, |i, j| {
                            m.entry(3 * i + r - 3, 3 * j + c - 3).clone()
                        });
                        report.record(
                            "residue blocks",
                            size,
                            format!("({r},{c})"),
                            Ok(MatrixEq(grid.block(r, c).clone())),
                            Ok(MatrixEq(expect)),
                        );
                    }
                }
            }
            Err(e) => report.record::<MatrixEq>(
                "residue blocks",
                size,
                "-",
                Err(e),
                Ok(MatrixEq(m.clone())),
            ),
        }
    }

    let layouts: Vec<_> = [SequenceKind::C, SequenceKind::S]
        .into_iter()
        .flat_map(|kind| {
            (0..=n_max).flat_map(move |n| {
                (0..=p_max).flat_map(move |p| (0..3).map(move |r| (kind, n, p, r)))
            })
        })
        .filter(|&(_, n, _, r)| 3 * n + r > 0)
        .collect();
    let results: Vec<_> = layouts
        .par_iter()
        .map(|&(kind, n, p, r)| {
            let p_big = BigUint::from(p);
            let lhs = oracle
                .hankel_matrix(kind, &p_big, 3 * n + r)
                .and_then(|h| conjugate_blocks(&h))
                .map(|g| MatrixEq(g.assemble()));
            let rhs = sudoku_layout(oracle, kind, &p_big, n, r).map(|g| MatrixEq(g.assemble()));
            (kind, n, p, r, lhs, rhs)
        })
        .collect();
    for (kind, n, p, r, lhs, rhs) in results {
        let name = format!("block layout 3n+{r} ({kind})");
        report.record(&name, n, p, lhs, rhs);
    }

    for kind in [SequenceKind::C, SequenceKind::S] {
        for n in 0..=k_max {
            for p in 0..=k_max as u64 {
                for r in 0..3u64 {
                    let lhs = oracle
                        .k_matrix(kind, &BigUint::from(3 * p + r), n)
                        .map(MatrixEq);
                    let rhs = k_specialization(oracle, kind, &BigUint::from(p), n, r as usize)
                        .map(MatrixEq);
                    report.record(&format!("K^(3p+{r}) ({kind})"), n, p, lhs, rhs);
                }
            }
        }
    }
    report
}

/// Matrix wrapper with a one-line `Display`, for failure reports.
#[derive(Clone, Debug, PartialEq, Eq)]
struct MatrixEq(Matrix);

impl fmt::Display for MatrixEq {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let text = self.0.to_string();
        f.write_str(&text.trim_end().replace('\n', " "))
    }
}

/// The three generators of `c` agree through `count` terms, and agree with
/// random access; the defining recurrences of `c` and `s` hold for
/// `n < law_limit`.
pub fn generators(count: usize, law_limit: u64) -> Report {
    let mut report = Report::default();
    let rec = sequences::c_block_recurrence(count);
    let morph = sequences::c_block_morphism(count);
    let prod = sequences::c_block_product(count);
    report.record(
        "generator lengths",
        count,
        "-",
        Ok(morph.len()),
        Ok(rec.len()),
    );
    report.record(
        "generator lengths",
        count,
        "-",
        Ok(prod.len()),
        Ok(rec.len()),
    );
    for (i, &v) in rec.iter().enumerate() {
        report.record(
            "morphism = recurrence",
            i,
            "-",
            Ok(morph.get(i).copied().unwrap_or(U::ZERO)),
            Ok(v),
        );
        report.record(
            "product = recurrence",
            i,
            "-",
            Ok(prod.get(i).copied().unwrap_or(U::ZERO)),
            Ok(v),
        );
        report.record(
            "c_term = recurrence",
            i,
            "-",
            Ok(sequences::c_term_u64(i as u64)),
            Ok(v),
        );
    }
    for n in 0..law_limit {
        let cn = sequences::c_term_u64(n);
        report.record(
            "c(3n) = c(n)",
            n,
            "-",
            Ok(sequences::c_term_u64(3 * n)),
            Ok(cn),
        );
        report.record(
            "c(3n+1) = J c(n)",
            n,
            "-",
            Ok(sequences::c_term_u64(3 * n + 1)),
            Ok(U::J * cn),
        );
        report.record(
            "c(3n+2) = 0",
            n,
            "-",
            Ok(sequences::c_term_u64(3 * n + 2)),
            Ok(U::ZERO),
        );
        let sum = (cn.to_eisenstein() + sequences::c_term_u64(n + 1).to_eisenstein()).classify();
        report.record(
            "s(n) = c(n) + c(n+1)",
            n,
            "-",
            Ok(sequences::s_term_u64(n)),
            sum,
        );
        report.record(
            "s(3n) = -J^2 c(n)",
            n,
            "-",
            Ok(sequences::s_term_u64(3 * n)),
            Ok(U::NEG_J2 * cn),
        );
        report.record(
            "s(3n+1) = J c(n)",
            n,
            "-",
            Ok(sequences::s_term_u64(3 * n + 1)),
            Ok(U::J * cn),
        );
        report.record(
            "s(3n+2) = c(n+1)",
            n,
            "-",
            Ok(sequences::s_term_u64(3 * n + 2)),
            Ok(sequences::c_term_u64(n + 1)),
        );
    }
    report
}

/// Grid bounds for [`run`].
#[derive(Clone, Copy, Debug)]
pub struct Bounds {
    pub n_max: usize,
    pub p_max: u64,
}

pub fn run(suite: Suite, bounds: Bounds, oracle: Oracle) -> Report {
    let table = OracleTable::new(oracle);
    let Bounds { n_max, p_max } = bounds;
    match suite {
        Suite::Lemma => lemma(&table, n_max, p_max),
        Suite::Corollary => corollary(&table, n_max, p_max, 200),
        Suite::TheoremTables => theorem_tables(&table),
        Suite::Blocks => blocks(&oracle, n_max, p_max, 2 * n_max, 0x5eed),
        Suite::Generators => generators(3usize.pow(9), 100_000),
        Suite::Grid => grid(&table, n_max, p_max),
        Suite::All => {
            let mut report = theorem_tables(&table);
            report.merge(generators(3usize.pow(9), 100_000));
            report.merge(lemma(&table, n_max, p_max));
            report.merge(corollary(&table, n_max, p_max, 200));
            report.merge(blocks(&oracle, n_max, p_max, 2 * n_max, 0x5eed));
            report.merge(grid(&table, n_max, p_max));
            report
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_sweeps_pass() {
        let table = OracleTable::new(Oracle::default());
        for report in [
            theorem_tables(&table),
            lemma(&table, 4, 4),
            corollary(&table, 3, 3, 50),
            grid(&table, 8, 8),
            blocks(&Oracle::default(), 3, 3, 4, 1),
            generators(243, 1000),
        ] {
            assert!(report.ok(), "{report}");
        }
    }

    #[test]
    fn relations_also_hold_at_zero() {
        let report = lemma_at_zero(&OracleTable::new(Oracle::default()), 30);
        assert!(report.ok(), "{report}");
        assert_eq!(report.checks.len(), 18);
    }

    #[test]
    fn failures_are_reported() {
        let mut r = Report::default();
        r.record("x", 1, 2, Ok(U::J), Ok(U::J));
        r.record("x", 3, 4, Ok(U::J), Ok(U::J2));
        r.record::<UnitOrZero>("y", 5, 6, Err(Error::DivisionByZero), Ok(U::ONE));
        assert!(!r.ok());
        let f = r.failure.unwrap();
        assert_eq!(
            (f.identity.as_str(), f.n.as_str(), f.p.as_str()),
            ("x", "3", "4")
        );
        assert_eq!((f.lhs.as_str(), f.rhs.as_str()), ("J", "J^2"));
        assert_eq!(r.checks[0].passed, 1);
        assert_eq!(r.checks[0].total, 2);
    }

    #[test]
    fn suite_names() {
        for name in [
            "lemma",
            "corollary",
            "theorem-tables",
            "blocks",
            "generators",
            "grid",
            "all",
        ] {
            assert!(name.parse::<Suite>().is_ok());
        }
        assert!("tables".parse::<Suite>().is_err());
    }
}
