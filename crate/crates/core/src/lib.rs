//! Exact Hankel determinants of the coefficients of `∏ (1 + J x^{3^k})`
//! over the Eisenstein integers `Z[J]`.
//!
//! The crate has two independent routes to every determinant:
//!
//! * a brute-force oracle ([`hankel`]) that builds the Hankel matrix and runs
//!   fraction-free elimination over `Z[J]`, and
//! * a logarithmic-time evaluator ([`closed_form`]) driven by the ternary
//!   recurrences between `|H_n^p|` and `|Σ_n^p|`.
//!
//! [`verify`] cross-checks the two, and [`automaton`] extracts 3-kernel
//! automata for the `p = 0, 1` columns.

pub mod automaton;
pub mod closed_form;
pub mod eisenstein;
mod error;
pub mod hankel;
pub mod lemma;
pub mod parse;
pub mod sequences;
pub mod sudoku;
pub mod verify;

pub use closed_form::{DetKey, Evaluator, Family};
pub use eisenstein::{EisensteinInt, UnitOrZero};
pub use error::{Error, Result};
pub use hankel::{det_bareiss, Matrix, Oracle};
pub use sequences::SequenceKind;
