//! Determinant, adjugate, cofactor sum, inverse and block-matrix plumbing.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::matrix::ExactMatrix;
use super::rational::{denominator_lcm, from_bigint, Rational};
use crate::error::{Error, Result};

/// Scales every row to integers. Returns the integer rows and the product
/// of the row scale factors, so `det(A) = det(int rows) / scale`.
fn integer_rows(a: &ExactMatrix) -> (Vec<Vec<BigInt>>, BigInt) {
    let mut scale = BigInt::one();
    let rows = (0..a.rows())
        .map(|i| {
            let row = a.row_slice(i);
            let l = denominator_lcm(row);
            let out = row.iter().map(|x| (x * from_bigint(l.clone())).to_integer()).collect();
            scale *= l;
            out
        })
        .collect();
    (rows, scale)
}

/// Fraction-free (Bareiss) determinant of an integer matrix, in place.
pub(crate) fn bareiss_det(mut m: Vec<Vec<BigInt>>) -> BigInt {
    let n = m.len();
    if n == 0 {
        return BigInt::one();
    }
    let mut sign = false;
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if m[k][k].is_zero() {
            match (k + 1..n).find(|&r| !m[r][k].is_zero()) {
                Some(r) => {
                    m.swap(k, r);
                    sign = !sign;
                }
                None => return BigInt::zero(),
            }
        }
        let (head, tail) = m.split_at_mut(k + 1);
        let pivot_row = &head[k];
        let pivot = &pivot_row[k];
        for row in tail.iter_mut() {
            let lead = row[k].clone();
            for j in k + 1..n {
                let v = &row[j] * pivot - &lead * &pivot_row[j];
                row[j] = v / &prev;
            }
            row[k] = BigInt::zero();
        }
        prev = pivot.clone();
    }
    let det = m[n - 1][n - 1].clone();
    if sign {
        -det
    } else {
        det
    }
}

/// Exact determinant; 1 for the `0 x 0` matrix.
pub fn determinant(a: &ExactMatrix) -> Result<Rational> {
    a.require_square()?;
    let (rows, scale) = integer_rows(a);
    Ok(Rational::new(bareiss_det(rows), scale))
}

/// Classical adjoint: `Adj(A)[i][j] = (-1)^(i+j) det A(j|i)`.
///
/// Built from cofactors directly, so it is defined for singular `A`.
pub fn adjugate(a: &ExactMatrix) -> Result<ExactMatrix> {
    let n = a.require_square()?;
    if n == 0 {
        return Err(Error::DimensionMismatch("adjugate of a 0x0 matrix".into()));
    }
    let mut out = ExactMatrix::zeros(n, n);
    for i in 0..n {
        for j in 0..n {
            let d = determinant(&a.minor(j, i))?;
            out[(i, j)] = if (i + j) % 2 == 0 { d } else { -d };
        }
    }
    Ok(out)
}

/// Sum of all cofactors, `1^t Adj(A) 1`.
///
/// Subtract the first row from every other row, then the first column from
/// every other column; the result is the determinant of what remains after
/// deleting the first row and column. Works for singular input.
pub fn cofactor_sum(a: &ExactMatrix) -> Result<Rational> {
    let n = a.require_square()?;
    if n == 0 {
        return Err(Error::DimensionMismatch("cofactor sum of a 0x0 matrix".into()));
    }
    let mut m = a.clone();
    for i in 1..n {
        for j in 0..n {
            let v = &m[(i, j)] - &m[(0, j)];
            m[(i, j)] = v;
        }
    }
    for j in 1..n {
        for i in 0..n {
            let v = &m[(i, j)] - &m[(i, 0)];
            m[(i, j)] = v;
        }
    }
    determinant(&m.minor(0, 0))
}

/// Exact inverse by Gauss-Jordan elimination over the rationals.
pub fn inverse(a: &ExactMatrix) -> Result<ExactMatrix> {
    let n = a.require_square()?;
    let mut work: Vec<Vec<Rational>> = (0..n).map(|i| a.row_slice(i).to_vec()).collect();
    let mut inv: Vec<Vec<Rational>> =
        (0..n).map(|i| (0..n).map(|j| if i == j { Rational::one() } else { Rational::zero() }).collect()).collect();
    for col in 0..n {
        let Some(p) = (col..n).find(|&r| !work[r][col].is_zero()) else {
            return Err(Error::Singular { det: Rational::zero() });
        };
        work.swap(col, p);
        inv.swap(col, p);
        let pivot_inv = work[col][col].recip();
        for x in work[col].iter_mut().chain(inv[col].iter_mut()) {
            *x *= &pivot_inv;
        }
        for r in 0..n {
            if r == col || work[r][col].is_zero() {
                continue;
            }
            let f = work[r][col].clone();
            for j in 0..n {
                if !work[col][j].is_zero() {
                    let d = &f * &work[col][j];
                    work[r][j] -= d;
                }
                if !inv[col][j].is_zero() {
                    let d = &f * &inv[col][j];
                    inv[r][j] -= d;
                }
            }
        }
    }
    ExactMatrix::new(n, n, inv.into_iter().flatten().collect())
}

/// `(aI_n + bJ_n)^{-1} = (1/a)(I_n - b/(a + nb) J_n)`.
pub fn inv_ai_bj(n: usize, a: &Rational, b: &Rational) -> Result<ExactMatrix> {
    let n_r = Rational::from_integer(BigInt::from(n));
    let top = a + &n_r * b;
    if a.is_zero() || top.is_zero() {
        return Err(Error::SingularFamily { n, a: Box::new(a.clone()), b: Box::new(b.clone()) });
    }
    let a_inv = a.recip();
    let off = -(b / &top) * &a_inv;
    Ok(ExactMatrix::from_fn(n, n, |i, j| if i == j { &a_inv + &off } else { off.clone() }))
}

/// `aI_n + bJ_n`.
pub fn ai_bj(n: usize, a: &Rational, b: &Rational) -> ExactMatrix {
    ExactMatrix::from_fn(n, n, |i, j| if i == j { a + b } else { b.clone() })
}

/// The four blocks of `B` when its leading block is `split x split`.
pub struct Partition {
    pub b11: ExactMatrix,
    pub b12: ExactMatrix,
    pub b21: ExactMatrix,
    pub b22: ExactMatrix,
}

pub fn partition(b: &ExactMatrix, split: usize) -> Result<Partition> {
    let n = b.require_square()?;
    if split > n {
        return Err(Error::DimensionMismatch(format!("split {split} exceeds dimension {n}")));
    }
    let rest = n - split;
    Ok(Partition {
        b11: b.block(0, 0, split, split)?,
        b12: b.block(0, split, split, rest)?,
        b21: b.block(split, 0, rest, split)?,
        b22: b.block(split, split, rest, rest)?,
    })
}

/// `B/B22 = B11 - B12 B22^{-1} B21`.
pub fn schur_complement(b: &ExactMatrix, split: usize) -> Result<ExactMatrix> {
    let p = partition(b, split)?;
    let b22_inv = inverse(&p.b22)?;
    p.b11.sub(&p.b12.mul(&b22_inv)?.mul(&p.b21)?)
}

/// Inverse of a partitioned matrix assembled from the Schur complement of
/// its trailing block.
pub fn schur_block_inverse(b: &ExactMatrix, split: usize) -> Result<ExactMatrix> {
    let p = partition(b, split)?;
    let b22_inv = inverse(&p.b22)?;
    let s_inv = inverse(&p.b11.sub(&p.b12.mul(&b22_inv)?.mul(&p.b21)?)?)?;
    let left = b22_inv.mul(&p.b21)?; // B22^{-1} B21
    let right = p.b12.mul(&b22_inv)?; // B12 B22^{-1}
    let top_right = s_inv.mul(&right)?.scale(&-Rational::one());
    let bottom_left = left.mul(&s_inv)?.scale(&-Rational::one());
    let bottom_right = b22_inv.add(&left.mul(&s_inv)?.mul(&right)?)?;
    block_assemble(&[vec![s_inv, top_right], vec![bottom_left, bottom_right]])
}

/// Dense concatenation of a grid of blocks.
///
/// All blocks in one grid row must share a row count and all blocks in one
/// grid column a column count. Blocks with a zero dimension contribute no
/// entries but still take part in the consistency check.
pub fn block_assemble(grid: &[Vec<ExactMatrix>]) -> Result<ExactMatrix> {
    let Some(first) = grid.first() else {
        return Ok(ExactMatrix::zeros(0, 0));
    };
    let width = first.len();
    if grid.iter().any(|r| r.len() != width) {
        return Err(Error::DimensionMismatch("ragged block grid".into()));
    }
    let heights: Vec<usize> = grid.iter().map(|r| r.first().map_or(0, ExactMatrix::rows)).collect();
    let widths: Vec<usize> = first.iter().map(ExactMatrix::cols).collect();
    for (bi, row) in grid.iter().enumerate() {
        for (bj, blk) in row.iter().enumerate() {
            if blk.rows() != heights[bi] || blk.cols() != widths[bj] {
                return Err(Error::DimensionMismatch(format!(
                    "block ({bi},{bj}) is {}x{}, expected {}x{}",
                    blk.rows(),
                    blk.cols(),
                    heights[bi],
                    widths[bj]
                )));
            }
        }
    }
    let total_rows: usize = heights.iter().sum();
    let total_cols: usize = widths.iter().sum();
    let mut data = Vec::with_capacity(total_rows * total_cols);
    for (bi, row) in grid.iter().enumerate() {
        for i in 0..heights[bi] {
            for blk in row {
                data.extend_from_slice(blk.row_slice(i));
            }
        }
    }
    ExactMatrix::new(total_rows, total_cols, data)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact_linalg::rational::{rat, ratio};

    fn k3() -> ExactMatrix {
        ExactMatrix::from_i64_rows(&[[0, 1, 1], [1, 0, 1], [1, 1, 0]])
    }

    #[test]
    fn determinant_examples() {
        let swap = ExactMatrix::from_i64_rows(&[[0, 1], [1, 0]]);
        assert_eq!(determinant(&swap).unwrap(), rat(-1));
        assert_eq!(determinant(&ExactMatrix::identity(3)).unwrap(), rat(1));
        assert_eq!(determinant(&k3()).unwrap(), rat(2));
        assert_eq!(determinant(&ExactMatrix::zeros(0, 0)).unwrap(), rat(1));
        assert!(determinant(&ExactMatrix::zeros(2, 3)).is_err());
    }

    #[test]
    fn determinant_with_fractions() {
        let a = ExactMatrix::new(2, 2, vec![ratio(1, 2), ratio(1, 3), ratio(1, 4), ratio(1, 5)]).unwrap();
        assert_eq!(determinant(&a).unwrap(), ratio(1, 10) - ratio(1, 12));
    }

    #[test]
    fn determinant_needs_row_swap() {
        let a = ExactMatrix::from_i64_rows(&[[0, 0, 1], [0, 2, 0], [3, 0, 0]]);
        assert_eq!(determinant(&a).unwrap(), rat(-6));
    }

    #[test]
    fn adjugate_examples() {
        let swap = ExactMatrix::from_i64_rows(&[[0, 1], [1, 0]]);
        assert_eq!(adjugate(&swap).unwrap(), ExactMatrix::from_i64_rows(&[[0, -1], [-1, 0]]));
        assert_eq!(adjugate(&ExactMatrix::identity(3)).unwrap(), ExactMatrix::identity(3));
    }

    #[test]
    fn cofactor_sum_examples() {
        assert_eq!(cofactor_sum(&k3()).unwrap(), rat(3));
        let k2 = ExactMatrix::from_i64_rows(&[[0, 1], [1, 0]]);
        assert_eq!(cofactor_sum(&k2).unwrap(), rat(-2));
        assert_eq!(cofactor_sum(&ExactMatrix::from_i64_rows(&[[7]])).unwrap(), rat(1));
    }

    #[test]
    fn inverse_of_singular_reports() {
        let a = ExactMatrix::from_i64_rows(&[[1, 2], [2, 4]]);
        assert!(matches!(inverse(&a), Err(Error::Singular { .. })));
        let inv = inverse(&k3()).unwrap();
        assert!(k3().mul(&inv).unwrap().is_identity());
    }

    #[test]
    fn ai_bj_examples() {
        assert_eq!(inv_ai_bj(2, &rat(1), &rat(0)).unwrap(), ExactMatrix::identity(2));
        let m = ai_bj(3, &rat(-2), &rat(2));
        assert_eq!(inv_ai_bj(3, &rat(-2), &rat(2)).unwrap(), inverse(&m).unwrap());
        assert_eq!(determinant(&ai_bj(4, &rat(3), &rat(1))).unwrap(), rat(189));
        assert!(inv_ai_bj(3, &rat(0), &rat(1)).is_err());
        assert!(inv_ai_bj(3, &rat(-3), &rat(1)).is_err());
    }

    #[test]
    fn schur_reconstructs_inverse() {
        let b = ExactMatrix::from_i64_rows(&[[2, 1, 0, 1], [1, 3, 1, 0], [0, 1, 4, 1], [1, 0, 1, 5]]);
        for split in 1..4 {
            assert_eq!(schur_block_inverse(&b, split).unwrap(), inverse(&b).unwrap());
        }
        let singular_b22 = ExactMatrix::from_i64_rows(&[[1, 1, 0], [1, 1, 1], [0, 1, 1]]);
        assert!(schur_complement(&singular_b22, 1).is_err());
    }

    #[test]
    fn block_assembly_with_empty_blocks() {
        let j = ExactMatrix::ones(2, 2);
        let empty_col = ExactMatrix::zeros(2, 0);
        let m = block_assemble(&[
            vec![j.clone(), empty_col.clone()],
            vec![ExactMatrix::zeros(0, 2), ExactMatrix::zeros(0, 0)],
        ])
        .unwrap();
        assert_eq!(m, j);
        assert!(block_assemble(&[vec![j.clone(), ExactMatrix::ones(3, 1)]]).is_err());
    }
}
