use num_bigint::BigInt;

use super::invariants::invariants;
use crate::error::{Error, Result};
use crate::exact_linalg::{determinant, from_bigint, rat, ExactMatrix, Rational};

/// The `m x m` matrix whose first row is `(n_1, 2(n_1 - 1), ..., 2(n_1 - 1))`
/// and whose row `i > 1` is `n_i` everywhere except a `2` on the diagonal.
pub fn c_matrix(n: &[usize]) -> ExactMatrix {
    let m = n.len();
    ExactMatrix::from_fn(m, m, |i, j| {
        let ni = n[i] as i64;
        match (i, j) {
            (0, 0) => rat(ni),
            (0, _) => rat(2 * (ni - 1)),
            _ if i == j => rat(2),
            _ => rat(ni),
        }
    })
}

/// `(-1)^{m-1} gamma(n)`.
pub fn det_cm_formula(n: &[usize]) -> Rational {
    let gamma = invariants(n).gamma;
    from_bigint(if n.len() % 2 == 1 { gamma } else { -gamma })
}

/// Determinant of [`c_matrix`], computed both by elimination and by the
/// closed formula; an error if the two differ.
pub fn det_cm(n: &[usize]) -> Result<Rational> {
    if n.is_empty() {
        return Err(Error::OutOfRange("C_m needs m >= 1".into()));
    }
    let direct = determinant(&c_matrix(n))?;
    let formula = det_cm_formula(n);
    if direct != formula {
        return Err(Error::IdentityFailure {
            name: "det C_m".into(),
            detail: format!("parts {n:?}: elimination gives {direct}, formula gives {formula}"),
        });
    }
    Ok(direct)
}

/// Positive integers `q_1..q_p` with `sum 1/q_i = r/2`, for `1 <= r <= 2p`.
pub fn reciprocal_sum_solution(p: usize, r: usize) -> Result<Vec<usize>> {
    if p == 0 || r == 0 || r > 2 * p {
        return Err(Error::OutOfRange(format!("need 1 <= r <= 2p, got p = {p}, r = {r}")));
    }
    let mut q = Vec::with_capacity(p);
    if r.is_multiple_of(2) {
        let k = r / 2;
        q.extend(std::iter::repeat_n(1, k - 1));
        q.extend(std::iter::repeat_n(p + 1 - k, p + 1 - k));
    } else if r == 1 {
        q.extend(std::iter::repeat_n(2 * p, p));
    } else {
        // r = 2k + 1: k ones leave 1/2 for the remaining p - k entries.
        let k = r / 2;
        q.extend(std::iter::repeat_n(1, k));
        q.extend(std::iter::repeat_n(2 * (p - k), p - k));
    }
    Ok(q)
}

/// `sum 1/q_i` exactly.
pub fn reciprocal_sum(q: &[usize]) -> Rational {
    q.iter().map(|&x| Rational::new(BigInt::from(1), BigInt::from(x))).sum()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact_linalg::ratio;

    #[test]
    fn cm_examples() {
        assert_eq!(det_cm(&[1, 1, 1]).unwrap(), rat(3));
        assert_eq!(det_cm(&[7]).unwrap(), rat(7));
        assert_eq!(det_cm(&[3, 3]).unwrap(), rat(-6));
        for a in 1..6 {
            for b in 1..6 {
                for c in 1..6 {
                    det_cm(&[a, b, c]).unwrap();
                    det_cm(&[a, b, c, a + 1]).unwrap();
                }
            }
        }
    }

    #[test]
    fn solver_examples() {
        assert_eq!(reciprocal_sum_solution(3, 1).unwrap(), vec![6, 6, 6]);
        assert_eq!(reciprocal_sum_solution(3, 6).unwrap(), vec![1, 1, 1]);
        assert_eq!(reciprocal_sum_solution(2, 3).unwrap(), vec![1, 2]);
        assert!(reciprocal_sum_solution(2, 5).is_err());
        assert!(reciprocal_sum_solution(2, 0).is_err());
    }

    #[test]
    fn solver_is_exact() {
        for p in 1..=12 {
            for r in 1..=2 * p {
                let q = reciprocal_sum_solution(p, r).unwrap();
                assert_eq!(q.len(), p);
                assert!(q.iter().all(|&x| x >= 1));
                assert_eq!(reciprocal_sum(&q), ratio(r as i64, 2), "p = {p}, r = {r}");
            }
        }
    }
}
