use serde::Serialize;

use crate::error::{Error, Result};
use crate::exact_linalg::{rat, ExactMatrix, Rational};

/// The four conditions of a one-sided LapExp structure.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct LapExpSide {
    /// `mu^t 1 = 1`
    pub mu_sums_to_one: bool,
    /// `L 1 = 0` (left) or `1^t L = 0` (right)
    pub lap_annihilates_ones: bool,
    /// `mu^t D = lambda 1^t` (left) or `D mu = lambda 1` (right)
    pub mu_eigen: bool,
    /// `L D + I = mu 1^t` (left) or `D L + I = 1 mu^t` (right)
    pub lap_identity: bool,
}

impl LapExpSide {
    pub fn all(&self) -> bool {
        self.mu_sums_to_one && self.lap_annihilates_ones && self.mu_eigen && self.lap_identity
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct LapExpReport {
    pub left: LapExpSide,
    pub right: LapExpSide,
}

impl LapExpReport {
    pub fn all(&self) -> bool {
        self.left.all() && self.right.all()
    }
}

/// Evaluates the left and right LapExp conditions for `(D, lambda, mu, L)`.
pub fn lapexp_check(d: &ExactMatrix, lambda: &Rational, mu: &[Rational], lap: &ExactMatrix) -> Result<LapExpReport> {
    let n = d.require_square()?;
    if lap.rows() != n || lap.cols() != n || mu.len() != n {
        return Err(Error::DimensionMismatch(format!(
            "D is {n}x{n}, L is {}x{}, mu has length {}",
            lap.rows(),
            lap.cols(),
            mu.len()
        )));
    }
    let ones = vec![rat(1); n];
    let lambda_ones = vec![lambda.clone(); n];
    let zero = vec![rat(0); n];
    let mu_sum: Rational = mu.iter().sum();
    let id = ExactMatrix::identity(n);
    let mu_col = ExactMatrix::column(mu.to_vec());
    let ones_row = ExactMatrix::row(ones.clone());

    let left = LapExpSide {
        mu_sums_to_one: mu_sum == rat(1),
        lap_annihilates_ones: lap.row_sums() == zero,
        mu_eigen: d.vec_mul(mu)? == lambda_ones,
        lap_identity: lap.mul(d)?.add(&id)? == mu_col.mul(&ones_row)?,
    };
    let right = LapExpSide {
        mu_sums_to_one: mu_sum == rat(1),
        lap_annihilates_ones: lap.col_sums() == zero,
        mu_eigen: d.mul_vec(mu)? == lambda_ones,
        lap_identity: d.mul(lap)?.add(&id)? == ones_row.transpose().mul(&mu_col.transpose())?,
    };
    Ok(LapExpReport { left, right })
}
