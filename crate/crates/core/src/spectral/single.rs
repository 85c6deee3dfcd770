use num_bigint::BigInt;
use num_traits::Zero;

use crate::closed_forms::{alpha_excluding, AlgebraicInvariants};
use crate::error::{Error, Result};
use crate::exact_linalg::{from_bigint, ratio, ExactMatrix, Rational};
use crate::graph_model::MultipartiteSpec;

fn nonzero_gamma(spec: &MultipartiteSpec) -> Result<AlgebraicInvariants> {
    let inv = AlgebraicInvariants::of(spec);
    if inv.gamma.is_zero() {
        return Err(Error::ZeroCofactor { block: 0, parts: spec.to_string() });
    }
    Ok(inv)
}

fn over(num: BigInt, den: &BigInt) -> Rational {
    Rational::new(num, den.clone())
}

/// `mu(v) = prod_{j != i} (n_j - 2) / gamma` for `v` in part `i`, listed in
/// part order.
pub fn mu_single(spec: &MultipartiteSpec) -> Result<Vec<Rational>> {
    let inv = nonzero_gamma(spec)?;
    let parts = spec.parts();
    Ok(spec.part_labels().into_iter().map(|i| over(alpha_excluding(parts, &[i]), &inv.gamma)).collect())
}

/// The Laplacian-like matrix of one block:
/// `a_i = ((n_i - 1) beta^_i - 2 gamma^_i) / (2 gamma)` on the diagonal,
/// `b_i = -beta^_i / (2 gamma)` within part `i`, and
/// `c_ij = prod_{l != i, j} (n_l - 2) / gamma` across parts.
pub fn lap_like_single(spec: &MultipartiteSpec) -> Result<ExactMatrix> {
    let inv = nonzero_gamma(spec)?;
    let parts = spec.parts();
    let two_gamma = 2 * &inv.gamma;
    let hats: Vec<AlgebraicInvariants> = (0..parts.len()).map(|i| inv.without(i)).collect();
    let a: Vec<Rational> = hats
        .iter()
        .zip(parts)
        .map(|(h, &n)| over(BigInt::from(n as i64 - 1) * &h.beta - 2 * &h.gamma, &two_gamma))
        .collect();
    let b: Vec<Rational> = hats.iter().map(|h| over(-h.beta.clone(), &two_gamma)).collect();
    let labels = spec.part_labels();
    let n = labels.len();
    Ok(ExactMatrix::from_fn(n, n, |u, v| {
        let (i, j) = (labels[u], labels[v]);
        if u == v {
            a[i].clone()
        } else if i == j {
            b[i].clone()
        } else {
            over(alpha_excluding(parts, &[i, j]), &inv.gamma)
        }
    }))
}

/// Inverse of `D(K)` in block form: within part `i`
/// `((2 beta^_i - gamma^_i) / (2 beta)) J - I/2`, across parts `i != j`
/// `-(prod_{l != i, j} (n_l - 2) / beta) J`.
pub fn inverse_single_block(spec: &MultipartiteSpec) -> Result<ExactMatrix> {
    let inv = AlgebraicInvariants::of(spec);
    if inv.beta.is_zero() {
        return Err(Error::ZeroDeterminant { parts: spec.to_string() });
    }
    let parts = spec.parts();
    let two_beta = 2 * &inv.beta;
    let diag: Vec<Rational> = (0..parts.len())
        .map(|i| {
            let h = inv.without(i);
            over(2 * &h.beta - &h.gamma, &two_beta)
        })
        .collect();
    let labels = spec.part_labels();
    let n = labels.len();
    Ok(ExactMatrix::from_fn(n, n, |u, v| {
        let (i, j) = (labels[u], labels[v]);
        if i == j {
            let half = if u == v { ratio(1, 2) } else { Rational::zero() };
            &diag[i] - half
        } else {
            -over(alpha_excluding(parts, &[i, j]), &inv.beta)
        }
    }))
}

/// `lambda = beta / gamma` for one block.
pub fn lambda_of(spec: &MultipartiteSpec) -> Result<Rational> {
    let inv = nonzero_gamma(spec)?;
    Ok(from_bigint(inv.beta) / from_bigint(inv.gamma))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact_linalg::{inverse, rat};
    use crate::graph_model::build_multipartite;

    fn spec(p: &[usize]) -> MultipartiteSpec {
        MultipartiteSpec::new(p.to_vec()).unwrap()
    }

    #[test]
    fn k2() {
        let k2 = spec(&[1, 1]);
        assert_eq!(mu_single(&k2).unwrap(), vec![ratio(1, 2), ratio(1, 2)]);
        let l = lap_like_single(&k2).unwrap();
        assert_eq!(l, ExactMatrix::from_i64_rows(&[[1, -1], [-1, 1]]).scale(&ratio(1, 2)));
        assert_eq!(inverse_single_block(&k2).unwrap(), ExactMatrix::from_i64_rows(&[[0, 1], [1, 0]]));
    }

    #[test]
    fn mu_of_t7() {
        // gamma(1,1,5) = -3 - 3 + 5 = -1
        let mu = mu_single(&spec(&[1, 1, 5])).unwrap();
        assert_eq!(mu, [3, 3, -1, -1, -1, -1, -1].map(rat).to_vec());
        assert_eq!(mu.iter().sum::<Rational>(), rat(1));
    }

    #[test]
    fn bipartite_inverse_matches_oracle() {
        for (a, b) in [(2, 3), (1, 3), (3, 4), (1, 5)] {
            let s = spec(&[a, b]);
            let oracle = inverse(build_multipartite(&s).matrix()).unwrap();
            assert_eq!(inverse_single_block(&s).unwrap(), oracle, "({a}, {b})");
        }
        let s = spec(&[1, 1, 3]);
        let prod = inverse_single_block(&s).unwrap().mul(build_multipartite(&s).matrix()).unwrap();
        assert!(prod.is_identity());
    }

    #[test]
    fn zero_invariants_are_errors() {
        assert!(matches!(mu_single(&spec(&[1, 1, 4])), Err(Error::ZeroCofactor { .. })));
        assert!(matches!(inverse_single_block(&spec(&[2, 2, 3])), Err(Error::ZeroDeterminant { .. })));
    }
}
