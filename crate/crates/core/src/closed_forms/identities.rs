use num_bigint::BigInt;
use num_traits::Zero;
use serde::Serialize;

use super::invariants::{invariants, AlgebraicInvariants};
use crate::error::{Error, Result};

/// How many instances of each identity were checked.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct IdentityCounts {
    pub beta_is_gamma_plus_alpha: usize,
    pub gamma_split: usize,
    pub beta_split: usize,
    pub single_deletion: usize,
    pub pair_deletion: usize,
    pub pair_product: usize,
    pub nonzero_deletion: usize,
}

fn fail(name: &str, parts: &[usize], detail: String) -> Error {
    Error::IdentityFailure { name: name.into(), detail: format!("parts {parts:?}: {detail}") }
}

fn expect_eq(name: &str, parts: &[usize], lhs: BigInt, rhs: BigInt, at: String) -> Result<()> {
    if lhs == rhs {
        Ok(())
    } else {
        Err(fail(name, parts, format!("{at}: {lhs} != {rhs}")))
    }
}

/// Checks the algebraic identities among `alpha`, `beta`, `gamma` and their
/// deletions for one composition:
///
/// * `beta = gamma + alpha` for the whole multiset and for every deletion;
/// * splitting along any sub-multiset `J` with `|J| <= subset_cap`:
///   `gamma_I = alpha_{J^c} gamma_J + alpha_J gamma_{J^c}` and
///   `beta_I = alpha_{J^c} beta_J + alpha_J gamma_{J^c}`;
/// * for each `i`: `n_i (gamma^_i + 2 alpha^_i) - beta = 2 beta^_i`;
/// * for each ordered pair `i != j`:
///   `n_j (gamma^_ij + 2 alpha^_ij) - beta^_i - 2 gamma^_ij = 2 alpha^_ij` and
///   `(gamma^_ij + 2 alpha^_ij) beta + 2 n_i (alpha^_ij)^2 = (2 beta^_j - gamma^_j) beta^_i`;
/// * if `beta != 0` then some single deletion has `beta^_i != 0`. The one
///   composition where this fails is `(1, 1)`: `beta = -1`, while both
///   deletions leave `(1)` with `beta = 0`. It is skipped.
///
/// Returns the first failing instance with its operands.
pub fn identity_suite(parts: &[usize], subset_cap: usize) -> Result<IdentityCounts> {
    let m = parts.len();
    if !(2..=63).contains(&m) {
        return Err(Error::OutOfRange(format!("identity suite needs 2 <= m <= 63, got {m}")));
    }
    let full = invariants(parts);
    let mut counts = IdentityCounts::default();

    let check_sum = |inv: &AlgebraicInvariants, counts: &mut IdentityCounts| -> Result<()> {
        counts.beta_is_gamma_plus_alpha += 1;
        expect_eq(
            "beta = gamma + alpha",
            parts,
            inv.beta.clone(),
            &inv.gamma + &inv.alpha,
            format!("subset {:?}", inv.parts),
        )
    };
    check_sum(&full, &mut counts)?;

    let all = (1u64 << m) - 1;
    for mask in 0..=all {
        if mask.count_ones() as usize > subset_cap {
            continue;
        }
        let j = full.subset(mask);
        let jc = full.subset(all & !mask);
        counts.gamma_split += 1;
        expect_eq(
            "gamma split",
            parts,
            full.gamma.clone(),
            &jc.alpha * &j.gamma + &j.alpha * &jc.gamma,
            format!("J = {:?}", j.parts),
        )?;
        counts.beta_split += 1;
        expect_eq(
            "beta split",
            parts,
            full.beta.clone(),
            &jc.alpha * &j.beta + &j.alpha * &jc.gamma,
            format!("J = {:?}", j.parts),
        )?;
    }

    let hats: Vec<AlgebraicInvariants> = (0..m).map(|i| full.without(i)).collect();
    for (i, hat) in hats.iter().enumerate() {
        check_sum(hat, &mut counts)?;
        let ni = BigInt::from(parts[i]);
        counts.single_deletion += 1;
        expect_eq(
            "single deletion",
            parts,
            &ni * (&hat.gamma + 2 * &hat.alpha) - &full.beta,
            2 * &hat.beta,
            format!("i = {i}"),
        )?;
    }

    for i in 0..m {
        for j in (0..m).filter(|&j| j != i) {
            let pair = full.without_pair(i, j);
            let nj = BigInt::from(parts[j]);
            let ni = BigInt::from(parts[i]);
            counts.pair_deletion += 1;
            expect_eq(
                "pair deletion",
                parts,
                &nj * (&pair.gamma + 2 * &pair.alpha) - &hats[i].beta - 2 * &pair.gamma,
                2 * &pair.alpha,
                format!("(i, j) = ({i}, {j})"),
            )?;
            counts.pair_product += 1;
            expect_eq(
                "pair product",
                parts,
                (&pair.gamma + 2 * &pair.alpha) * &full.beta + 2 * &ni * &pair.alpha * &pair.alpha,
                (2 * &hats[j].beta - &hats[j].gamma) * &hats[i].beta,
                format!("(i, j) = ({i}, {j})"),
            )?;
        }
    }

    if !full.beta.is_zero() && parts != [1, 1] {
        counts.nonzero_deletion += 1;
        if hats.iter().all(|h| h.beta.is_zero()) {
            return Err(fail("nonzero deletion", parts, "beta != 0 but every single deletion has beta = 0".into()));
        }
    }
    Ok(counts)
}
