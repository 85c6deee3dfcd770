use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::Serialize;

use crate::exact_linalg::{from_bigint, minus_two_pow, Rational};
use crate::graph_model::MultipartiteSpec;

/// `alpha = prod (n_i - 2)`, `gamma = sum_i n_i prod_{j != i} (n_j - 2)`,
/// `beta = gamma + alpha` for a multiset of part sizes.
///
/// The empty multiset gives `alpha = 1`, `gamma = 0`, `beta = 1`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AlgebraicInvariants {
    #[serde(serialize_with = "as_string")]
    pub alpha: BigInt,
    #[serde(serialize_with = "as_string")]
    pub beta: BigInt,
    #[serde(serialize_with = "as_string")]
    pub gamma: BigInt,
    pub parts: Vec<usize>,
}

fn as_string<S: serde::Serializer>(v: &BigInt, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_str(&v.to_string())
}

fn shifted(n: usize) -> BigInt {
    BigInt::from(n) - 2
}

/// Product of `n_l - 2` over the indices not in `skip`.
pub fn alpha_excluding(parts: &[usize], skip: &[usize]) -> BigInt {
    parts.iter().enumerate().filter(|(l, _)| !skip.contains(l)).map(|(_, &n)| shifted(n)).product()
}

pub fn invariants(parts: &[usize]) -> AlgebraicInvariants {
    let alpha: BigInt = parts.iter().map(|&n| shifted(n)).product();
    let gamma: BigInt = (0..parts.len()).map(|i| BigInt::from(parts[i]) * alpha_excluding(parts, &[i])).sum();
    AlgebraicInvariants { beta: &gamma + &alpha, alpha, gamma, parts: parts.to_vec() }
}

impl AlgebraicInvariants {
    pub fn of(spec: &MultipartiteSpec) -> Self {
        invariants(spec.parts())
    }

    /// Invariants with the index `i` deleted (the hatted quantities).
    pub fn without(&self, i: usize) -> Self {
        let mut rest = self.parts.clone();
        rest.remove(i);
        invariants(&rest)
    }

    /// Invariants with two distinct indices deleted.
    pub fn without_pair(&self, i: usize, j: usize) -> Self {
        assert_ne!(i, j, "pair deletion needs distinct indices");
        let rest: Vec<usize> =
            self.parts.iter().enumerate().filter(|&(l, _)| l != i && l != j).map(|(_, &n)| n).collect();
        invariants(&rest)
    }

    /// Invariants of the sub-multiset selected by `mask` (bit `l` keeps index `l`).
    pub fn subset(&self, mask: u64) -> Self {
        let rest: Vec<usize> =
            self.parts.iter().enumerate().filter(|&(l, _)| mask >> l & 1 == 1).map(|(_, &n)| n).collect();
        invariants(&rest)
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// `lambda = beta / gamma`, if `gamma != 0`.
    pub fn lambda(&self) -> Option<Rational> {
        (!self.gamma.is_zero()).then(|| Rational::new(self.beta.clone(), self.gamma.clone()))
    }

    pub fn sanity(&self) -> bool {
        self.beta == &self.gamma + &self.alpha && (!self.is_empty() || (self.alpha.is_one() && self.gamma.is_zero()))
    }
}

fn vertex_scale(spec: &MultipartiteSpec) -> Rational {
    minus_two_pow(spec.order() - spec.m())
}

/// `cof D(K) = (-2)^{|V| - m} gamma`.
pub fn cof_closed(spec: &MultipartiteSpec) -> Rational {
    vertex_scale(spec) * from_bigint(invariants(spec.parts()).gamma)
}

/// `det D(K) = (-2)^{|V| - m} beta`.
pub fn det_closed(spec: &MultipartiteSpec) -> Rational {
    vertex_scale(spec) * from_bigint(invariants(spec.parts()).beta)
}
