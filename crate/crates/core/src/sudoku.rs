//! Splitting a matrix into a 3×3 grid of blocks by grouping indices by their
//! residue mod 3.
//!
//! Conjugating by the permutation `P(n)` reorders rows and columns as
//! `1, 4, 7, …, 2, 5, 8, …, 3, 6, 9, …`. For Hankel matrices of order
//! `3n + r` every block of the result is (a trimmed copy of) a stride-3
//! matrix `K_m^q = (u_{q+3(i+j-2)})`, and for `c` and `s` those are in turn
//! scaled Hankel matrices of smaller order.

use num_bigint::BigUint;

use crate::eisenstein::{EisensteinInt, UnitOrZero};
use crate::error::{Error, Result};
use crate::hankel::{Matrix, Oracle};
use crate::sequences::SequenceKind;

/// A permutation of `1..=size`; column `j` of its matrix is `e_{image[j-1]}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Permutation {
    image: Vec<usize>,
}

impl Permutation {
    pub fn size(&self) -> usize {
        self.image.len()
    }

    /// 1-based images, one per column.
    pub fn image(&self) -> &[usize] {
        &self.image
    }

    pub fn to_matrix(&self) -> Matrix {
        let n = self.size();
        Matrix::from_fn(n, n, |i, j| {
            if self.image[j - 1] == i {
                EisensteinInt::one()
            } else {
                EisensteinInt::zero()
            }
        })
    }
}

/// `(n₁, n₂, n₃)`: how many of `1..=n` are ≡ 1, 2, 0 (mod 3).
pub fn residue_sizes(n: usize) -> [usize; 3] {
    [n.div_ceil(3), (n + 1) / 3, n / 3]
}

/// `P(n) = (e₁, e₄, …, e_{3n₁−2}, e₂, e₅, …, e_{3n₂−1}, e₃, e₆, …, e_{3n₃})`.
pub fn permutation_p(n: usize) -> Result<Permutation> {
    if n < 1 {
        return Err(Error::InvalidSize("P(n) needs n >= 1".into()));
    }
    let image = (1..=3).flat_map(|start| (start..=n).step_by(3)).collect();
    Ok(Permutation { image })
}

/// A square matrix cut into 3×3 blocks with row and column sizes `sizes`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BlockGrid {
    pub sizes: [usize; 3],
    pub blocks: [[Matrix; 3]; 3],
}

impl BlockGrid {
    /// Block in grid position `(r, c)`, 1-based.
    pub fn block(&self, r: usize, c: usize) -> &Matrix {
        &self.blocks[r - 1][c - 1]
    }

    pub fn order(&self) -> usize {
        self.sizes.iter().sum()
    }

    /// Glues the blocks back into one matrix.
    pub fn assemble(&self) -> Matrix {
        let offsets = [0, self.sizes[0], self.sizes[0] + self.sizes[1]];
        let locate = |k: usize| -> (usize, usize) {
            let r = (0..3)
                .rev()
                .find(|&r| k > offsets[r] && self.sizes[r] > 0)
                .unwrap();
            (r, k - offsets[r])
        };
        let n = self.order();
        Matrix::from_fn(n, n, |i, j| {
            let (br, ii) = locate(i);
            let (bc, jj) = locate(j);
            self.blocks[br][bc].entry(ii, jj).clone()
        })
    }
}

/// `P(n)ᵗ · M · P(n)` cut into its 3×3 residue blocks.
pub fn conjugate_blocks(m: &Matrix) -> Result<BlockGrid> {
    if !m.is_square() {
        return Err(Error::InvalidSize(format!(
            "conjugation needs a square matrix, got {}x{}",
            m.rows(),
            m.cols()
        )));
    }
    let n = m.rows();
    let p = permutation_p(n)?.to_matrix();
    let conj = p.transpose().mul(m)?.mul(&p)?;
    let sizes = residue_sizes(n);
    let offsets = [1, 1 + sizes[0], 1 + sizes[0] + sizes[1]];
    let blocks = std::array::from_fn(|r| {
        std::array::from_fn(|c| conj.submatrix(offsets[r], offsets[c], sizes[r], sizes[c]))
    });
    Ok(BlockGrid { sizes, blocks })
}

/// The block layout of `P H_{3n+residue}^p P` written in stride-3 matrices:
///
/// * order `3n`: block `(r, c)` is `K_n^{p+r+c-2}`;
/// * order `3n+1`: the first row and column of blocks use `K_{n+1}`, trimmed
///   by deleting row or column `n+1` where they meet an `n`-sized block;
/// * order `3n+2`: the first two block rows and columns use `K_{n+1}`,
///   trimmed the same way against the last block row and column.
pub fn sudoku_layout(
    oracle: &Oracle,
    kind: SequenceKind,
    p: &BigUint,
    n: usize,
    residue: usize,
) -> Result<BlockGrid> {
    if residue > 2 {
        return Err(Error::InvalidSize(format!(
            "residue {residue} is not 0, 1 or 2"
        )));
    }
    if 3 * n + residue == 0 {
        return Err(Error::InvalidSize(
            "empty Hankel matrix has no layout".into(),
        ));
    }
    let k = |order: usize, shift: u32| oracle.k_matrix(kind, &(p + shift), order);
    let big = n + 1;
    let blocks: [[Matrix; 3]; 3] = match residue {
        0 => [
            [k(n, 0)?, k(n, 1)?, k(n, 2)?],
            [k(n, 1)?, k(n, 2)?, k(n, 3)?],
            [k(n, 2)?, k(n, 3)?, k(n, 4)?],
        ],
        1 => [
            [
                k(big, 0)?,
                k(big, 1)?.delete_column(big)?,
                k(big, 2)?.delete_column(big)?,
            ],
            [k(big, 1)?.delete_row(big)?, k(n, 2)?, k(n, 3)?],
            [k(big, 2)?.delete_row(big)?, k(n, 3)?, k(n, 4)?],
        ],
        _ => [
            [k(big, 0)?, k(big, 1)?, k(big, 2)?.delete_column(big)?],
            [k(big, 1)?, k(big, 2)?, k(big, 3)?.delete_column(big)?],
            [
                k(big, 2)?.delete_row(big)?,
                k(big, 3)?.delete_row(big)?,
                k(n, 4)?,
            ],
        ],
    };
    Ok(BlockGrid {
        sizes: residue_sizes(3 * n + residue),
        blocks,
    })
}

/// `K_n^{3p+residue}(u)` expressed through Hankel matrices of `c`:
///
/// | residue | `u = c`      | `u = s`         |
/// |---------|--------------|-----------------|
/// | 0       | `H_n^p`      | `−J² H_n^p`     |
/// | 1       | `J H_n^p`    | `J H_n^p`       |
/// | 2       | `0`          | `H_n^{p+1}`     |
pub fn k_specialization(
    oracle: &Oracle,
    kind: SequenceKind,
    p: &BigUint,
    n: usize,
    residue: usize,
) -> Result<Matrix> {
    let h = |shift: u32| oracle.hankel_matrix(SequenceKind::C, &(p + shift), n);
    let scaled = |u: UnitOrZero, m: Matrix| m.scale(&u.to_eisenstein());
    Ok(match (kind, residue) {
        (SequenceKind::C, 0) => h(0)?,
        (SequenceKind::C, 1) => scaled(UnitOrZero::J, h(0)?),
        (SequenceKind::C, 2) => {
            oracle.check(n)?;
            Matrix::zeros(n, n)
        }
        (SequenceKind::S, 0) => scaled(UnitOrZero::NEG_J2, h(0)?),
        (SequenceKind::S, 1) => scaled(UnitOrZero::J, h(0)?),
        (SequenceKind::S, 2) => h(1)?,
        _ => {
            return Err(Error::InvalidSize(format!(
                "residue {residue} is not 0, 1 or 2"
            )))
        }
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hankel::det_bareiss;
    use rand::{Rng, SeedableRng};

    fn big(n: u64) -> BigUint {
        BigUint::from(n)
    }

    #[test]
    fn permutation_examples() {
        assert_eq!(permutation_p(3).unwrap().image(), &[1, 2, 3]);
        assert_eq!(permutation_p(4).unwrap().image(), &[1, 4, 2, 3]);
        assert_eq!(permutation_p(7).unwrap().image(), &[1, 4, 7, 2, 5, 3, 6]);
        assert!(matches!(permutation_p(0), Err(Error::InvalidSize(_))));
        for n in 1..=40 {
            let perm = permutation_p(n).unwrap();
            let mut seen = perm.image().to_vec();
            seen.sort_unstable();
            assert_eq!(seen, (1..=n).collect::<Vec<_>>());
            let d = det_bareiss(&perm.to_matrix()).unwrap();
            assert_eq!(d.norm(), 1.into());
            assert!(d == EisensteinInt::one() || d == -EisensteinInt::one());
        }
    }

    #[test]
    fn residue_table() {
        for n in 0..20 {
            assert_eq!(residue_sizes(3 * n), [n, n, n]);
            assert_eq!(residue_sizes(3 * n + 1), [n + 1, n, n]);
            assert_eq!(residue_sizes(3 * n + 2), [n + 1, n + 1, n]);
        }
    }

    #[test]
    fn identity_conjugates_to_block_identity() {
        let g = conjugate_blocks(&Matrix::identity(3)).unwrap();
        for r in 1..=3 {
            for c in 1..=3 {
                let expect = if r == c {
                    Matrix::identity(1)
                } else {
                    Matrix::zeros(1, 1)
                };
                assert_eq!(g.block(r, c), &expect);
            }
        }
    }

    /// Block (r, c), entry (i, j) is `m_{3i-(3-r), 3j-(3-c)}`.
    fn subsampled(m: &Matrix, r: usize, c: usize, rows: usize, cols: usize) -> Matrix {
        Matrix::from_fn(rows, cols, |i, j| {
            m.entry(3 * i + r - 3, 3 * j + c - 3).clone()
        })
    }

    #[test]
    fn blocks_follow_residue_formula_on_random_matrices() {
        let mut rng = rand::rngs::StdRng::seed_from_u64(7);
        for n in 1..=30 {
            let m = Matrix::from_fn(n, n, |_, _| {
                EisensteinInt::new(rng.gen_range(-50..=50), rng.gen_range(-50..=50))
            });
            let g = conjugate_blocks(&m).unwrap();
            for r in 1..=3 {
                for c in 1..=3 {
                    let expect = subsampled(&m, r, c, g.sizes[r - 1], g.sizes[c - 1]);
                    assert_eq!(g.block(r, c), &expect, "n={n} block ({r},{c})");
                }
            }
            let p = permutation_p(n).unwrap().to_matrix();
            assert_eq!(
                g.assemble(),
                p.transpose().mul(&m).unwrap().mul(&p).unwrap()
            );
            if n <= 8 {
                assert_eq!(
                    det_bareiss(&g.assemble()).unwrap(),
                    det_bareiss(&m).unwrap()
                );
            }
        }
    }

    #[test]
    fn top_left_blocks_are_k_matrices() {
        let o = Oracle::default();
        let g = conjugate_blocks(&o.hankel_matrix(SequenceKind::C, &big(0), 6).unwrap()).unwrap();
        assert_eq!(
            g.block(1, 1),
            &o.hankel_matrix(SequenceKind::C, &big(0), 2).unwrap()
        );
        let g = conjugate_blocks(&o.hankel_matrix(SequenceKind::S, &big(0), 6).unwrap()).unwrap();
        let h = o.hankel_matrix(SequenceKind::C, &big(0), 2).unwrap();
        assert_eq!(g.block(1, 1), &h.scale(&UnitOrZero::NEG_J2.to_eisenstein()));
    }

    #[test]
    fn k_matrix_example() {
        // c_0 = 1, c_3 = J, c_6 = 0.
        let o = Oracle::default();
        let k = o.k_matrix(SequenceKind::C, &big(0), 2).unwrap();
        let j = EisensteinInt::j();
        let expect = Matrix::from_vec(
            2,
            2,
            vec![EisensteinInt::one(), j.clone(), j, EisensteinInt::zero()],
        )
        .unwrap();
        assert_eq!(k, expect);
    }

    #[test]
    fn layout_matches_conjugation_small() {
        let o = Oracle::default();
        for kind in [SequenceKind::C, SequenceKind::S] {
            for p in 0..5u64 {
                for n in 0..5 {
                    for r in 0..3 {
                        if 3 * n + r == 0 {
                            continue;
                        }
                        let h = o.hankel_matrix(kind, &big(p), 3 * n + r).unwrap();
                        let lhs = conjugate_blocks(&h).unwrap();
                        let rhs = sudoku_layout(&o, kind, &big(p), n, r).unwrap();
                        assert_eq!(lhs, rhs, "{kind} p={p} n={n} r={r}");
                    }
                }
            }
        }
    }

    #[test]
    fn layout_rejects_bad_arguments() {
        let o = Oracle::default();
        assert!(sudoku_layout(&o, SequenceKind::C, &big(0), 0, 0).is_err());
        assert!(sudoku_layout(&o, SequenceKind::C, &big(0), 2, 3).is_err());
        assert!(conjugate_blocks(&Matrix::zeros(2, 3)).is_err());
    }

    #[test]
    fn k_specializations_small() {
        let o = Oracle::default();
        for kind in [SequenceKind::C, SequenceKind::S] {
            for p in 0..6u64 {
                for n in 0..6 {
                    for r in 0..3u64 {
                        let k = o.k_matrix(kind, &big(3 * p + r), n).unwrap();
                        let expect = k_specialization(&o, kind, &big(p), n, r as usize).unwrap();
                        assert_eq!(k, expect);
                    }
                }
            }
        }
    }
}
