use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use super::enumerate::sorted_specs;
use super::verdict::{f_value, lambda_single, Sign};
use crate::error::{Error, Result};
use crate::exact_linalg::{rat, Rational};
use crate::graph_model::{generators::star, MultiBlockGraph, MultipartiteSpec};

/// All sorted specs with `m` parts of size at most `max_part` whose cofactor
/// is nonzero and whose `lambda` is negative.
///
/// A part of size 2 forces `lambda = 1` (or a vanishing cofactor), so only
/// specs of the form `l` ones followed by parts above 2 can qualify; for
/// those `lambda < 0` exactly when `-1 < f < 0`.
pub fn negative_lambda_classifier(m: usize, max_part: usize) -> Vec<MultipartiteSpec> {
    sorted_specs(m, max_part)
        .into_iter()
        .filter(|spec| match f_value(spec.parts()) {
            Some(f) => rat(-1) < f && f < rat(0),
            None => false,
        })
        .collect()
}

/// How a family case fills its tail after the leading ones and threes.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum TailPattern {
    /// `q` equal parts, each above `2(q + 1)`; tail reciprocal sum in `(0, 1/2)`.
    EqualLarge,
    /// A 4 followed by `q - 1` copies of `n(q - 1) + 2`; reciprocal sum `1/2 + 1/n`.
    FourThenEqual,
}

/// One admissible case of the negative-lambda family: `l` ones, `threes`
/// parts of size 3, and a tail of `q` larger parts.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct FamilyCase {
    pub m: usize,
    pub k: usize,
    pub l: usize,
    pub threes: usize,
    pub q: usize,
    pub pattern: TailPattern,
}

/// Admissible `(m, k)` cases for `m >= 5`, where `m = 4x + r` and `l = 2x + k`.
pub fn family_cases(m: usize) -> Vec<FamilyCase> {
    if m < 5 {
        return Vec::new();
    }
    let x = m / 4;
    let (ks, pattern): (Vec<usize>, TailPattern) = match m % 4 {
        0 => ((1..x).collect(), TailPattern::FourThenEqual),
        1 => ((1..=x).collect(), TailPattern::EqualLarge),
        2 => ((2..=x + 1).collect(), TailPattern::FourThenEqual),
        _ => ((2..=x + 2).collect(), TailPattern::EqualLarge),
    };
    let shift = if m % 4 < 2 { 1 } else { 2 };
    ks.into_iter()
        .map(|k| {
            let l = 2 * x + k;
            let threes = k - shift;
            FamilyCase { m, k, l, threes, q: m - l - threes, pattern }
        })
        .collect()
}

/// A concrete spec with negative `lambda` for case `(m, k)`; distinct seeds
/// give distinct specs. The result is checked exactly before returning.
pub fn negative_lambda_family(m: usize, k: usize, seed: u64) -> Result<MultipartiteSpec> {
    let case = family_cases(m)
        .into_iter()
        .find(|c| c.k == k)
        .ok_or_else(|| Error::OutOfRange(format!("no negative-lambda family case for m = {m}, k = {k}")))?;
    let seed = usize::try_from(seed).map_err(|_| Error::OutOfRange("seed too large".into()))?;
    let mut parts = vec![1; case.l];
    parts.extend(std::iter::repeat_n(3, case.threes));
    parts.extend(tail(case.pattern, case.q, seed));
    let spec = MultipartiteSpec::new(parts)?;
    let report = lambda_single(&spec)?;
    if report.sign != Sign::Negative {
        return Err(Error::IdentityFailure {
            name: "negative lambda family".into(),
            detail: format!("parts {spec}: lambda = {}", report.lambda),
        });
    }
    Ok(spec)
}

/// The tail alone, as in the two constructive solutions of the tail
/// inequality: `EqualLarge` with `q = 2`, seed 0 gives `(7, 7)`;
/// `FourThenEqual` with `q = 2`, seed 0 gives `(4, 5)`.
pub fn tail(pattern: TailPattern, q: usize, seed: usize) -> Vec<usize> {
    match pattern {
        TailPattern::EqualLarge => vec![2 * q + 3 + seed; q],
        TailPattern::FourThenEqual => {
            let n = 3 + seed;
            let mut t = vec![4];
            t.extend(std::iter::repeat_n(n * (q - 1) + 2, q - 1));
            t
        }
    }
}

/// Multi-block constructions with `lambda_G = 0` although every block has a
/// nonzero cofactor.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum ZeroLambdaFamily {
    /// `t3` copies of `T_3`, each balanced by `x` copies of `T_{3x+6}`;
    /// likewise `t4` copies of `T_4` with `y` copies of `T_{2y+6}` and `t5`
    /// copies of `T_5` with `z` copies of `T_{z+6}`.
    PairedT { t3: usize, x: usize, t4: usize, y: usize, t5: usize, z: usize },
    /// `K_4`, `K_{m,m}` and `9m - 4` copies of `T_{8m+6}`; `m != 2`.
    CompleteMix { m: usize },
}

impl ZeroLambdaFamily {
    pub fn blocks(&self) -> Result<Vec<MultipartiteSpec>> {
        let mut blocks = Vec::new();
        match *self {
            Self::PairedT { t3, x, t4, y, t5, z } => {
                for (count, base, mult, big) in [(t3, 3, x, 3 * x + 6), (t4, 4, y, 2 * y + 6), (t5, 5, z, z + 6)] {
                    if count > 0 && mult == 0 {
                        return Err(Error::OutOfRange(format!("T_{base} blocks need a positive multiplier")));
                    }
                    for _ in 0..count {
                        blocks.push(MultipartiteSpec::t(base)?);
                        blocks.extend(std::iter::repeat_n(MultipartiteSpec::t(big)?, mult));
                    }
                }
                if blocks.is_empty() {
                    return Err(Error::OutOfRange("at least one of t3, t4, t5 must be positive".into()));
                }
            }
            Self::CompleteMix { m } => {
                if m == 0 || m == 2 {
                    return Err(Error::OutOfRange(format!("m must be a positive integer other than 2, got {m}")));
                }
                blocks.push(MultipartiteSpec::complete(4)?);
                blocks.push(MultipartiteSpec::new(vec![m, m])?);
                blocks.extend(std::iter::repeat_n(MultipartiteSpec::t(8 * m + 6)?, 9 * m - 4));
            }
        }
        Ok(blocks)
    }
}

/// Glues the family's blocks at one common vertex and checks `lambda_G = 0`.
pub fn zero_lambda_multiblock(family: &ZeroLambdaFamily) -> Result<MultiBlockGraph> {
    let blocks = family.blocks()?;
    let total: Rational = blocks.iter().map(|b| lambda_single(b).map(|r| r.lambda)).sum::<Result<_>>()?;
    if total != rat(0) {
        return Err(Error::IdentityFailure {
            name: "zero lambda family".into(),
            detail: format!("{family:?}: lambda = {total}"),
        });
    }
    star(&blocks)
}

/// Brute-force sign of `beta / gamma`, used to cross-check the classifier.
pub fn lambda_sign_brute(spec: &MultipartiteSpec) -> Option<Sign> {
    let inv = crate::closed_forms::invariants(spec.parts());
    (inv.gamma != BigInt::from(0)).then(|| Sign::of(&Rational::new(inv.beta, inv.gamma)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::closed_forms::reciprocal_sum;
    use crate::exact_linalg::ratio;

    #[test]
    fn classifier_small_m() {
        assert!(negative_lambda_classifier(2, 12).is_empty());
        assert!(negative_lambda_classifier(4, 12).is_empty());
        let m3: Vec<String> = negative_lambda_classifier(3, 7).iter().map(ToString::to_string).collect();
        assert_eq!(m3, ["1,1,5", "1,1,6", "1,1,7"]);
        let m5 = negative_lambda_classifier(5, 10);
        assert!(m5.contains(&MultipartiteSpec::new(vec![1, 1, 1, 5, 9]).unwrap()));
        assert!(!m5.contains(&MultipartiteSpec::new(vec![1, 1, 1, 5, 8]).unwrap()));
    }

    #[test]
    fn tail_examples() {
        assert_eq!(tail(TailPattern::EqualLarge, 2, 0), vec![7, 7]);
        let s = reciprocal_sum(&[5, 5]);
        assert!(rat(0) < s && s < ratio(1, 2));
        assert_eq!(tail(TailPattern::FourThenEqual, 2, 0), vec![4, 5]);
        assert_eq!(reciprocal_sum(&[2, 3]), ratio(1, 2) + ratio(1, 3));
    }

    #[test]
    fn family_cases_and_specs() {
        assert!(family_cases(4).is_empty());
        assert_eq!(family_cases(5).len(), 1);
        for m in 5..=9 {
            let cases = family_cases(m);
            assert!(!cases.is_empty(), "m = {m}");
            for c in cases {
                for seed in 0..5 {
                    let spec = negative_lambda_family(m, c.k, seed).unwrap();
                    assert_eq!(spec.m(), m);
                }
            }
        }
        assert!(negative_lambda_family(5, 2, 0).is_err());
    }

    #[test]
    fn zero_lambda_examples() {
        let g = zero_lambda_multiblock(&ZeroLambdaFamily::PairedT { t3: 1, x: 1, t4: 0, y: 0, t5: 0, z: 0 }).unwrap();
        assert_eq!(g.block_count(), 2);
        let g = zero_lambda_multiblock(&ZeroLambdaFamily::CompleteMix { m: 1 }).unwrap();
        assert_eq!(g.block_count(), 7);
        assert!(zero_lambda_multiblock(&ZeroLambdaFamily::CompleteMix { m: 2 }).is_err());
    }
}
