use num_bigint::BigInt;
use num_traits::Zero;
use serde::Serialize;

use crate::closed_forms::invariants;
use crate::error::{Error, Result};
use crate::exact_linalg::{format_rational, rat, Rational};
use crate::graph_model::MultipartiteSpec;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum SingularityCase {
    /// At least two parts of size 2.
    TwoTwos,
    /// `l` ones followed by parts larger than 2, with the reciprocal sum of
    /// the tail hitting the critical value.
    ReciprocalEquality,
    Nonsingular,
}

/// Data certifying a reciprocal-equality zero: the sorted spec is `l` ones
/// then `tail`, and `sum 1/(n - 2)` over the tail equals `target`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ReciprocalWitness {
    pub l: usize,
    pub tail: Vec<usize>,
    #[serde(serialize_with = "as_string")]
    pub reciprocal_sum: Rational,
    #[serde(serialize_with = "as_string")]
    pub target: Rational,
    /// Whether `l` lies in the range forced by the equality.
    pub bound_holds: bool,
}

impl ReciprocalWitness {
    pub fn equality_holds(&self) -> bool {
        self.reciprocal_sum == self.target
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VanishingVerdict {
    pub zero: bool,
    pub case: SingularityCase,
    pub witness: Option<ReciprocalWitness>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SingularityVerdict {
    pub parts: Vec<usize>,
    pub det: VanishingVerdict,
    pub cof: VanishingVerdict,
}

fn as_string<S: serde::Serializer>(v: &Rational, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&format_rational(v))
}

/// `sum 1/(n - 2)` over parts larger than 2.
fn tail_reciprocal_sum(tail: &[usize]) -> Rational {
    tail.iter().map(|&n| Rational::new(BigInt::from(1), BigInt::from(n - 2))).sum()
}

fn classify_with(spec: &MultipartiteSpec, offset: usize, bound: impl Fn(usize, usize) -> bool) -> VanishingVerdict {
    let sorted = spec.canonical();
    let parts = sorted.parts();
    let twos = parts.iter().filter(|&&n| n == 2).count();
    if twos >= 2 {
        return VanishingVerdict { zero: true, case: SingularityCase::TwoTwos, witness: None };
    }
    if twos == 1 {
        // One part of size 2: det = cof != 0.
        return VanishingVerdict { zero: false, case: SingularityCase::Nonsingular, witness: None };
    }
    let m = parts.len();
    let l = parts.iter().take_while(|&&n| n == 1).count();
    let tail = parts[l..].to_vec();
    let reciprocal_sum = tail_reciprocal_sum(&tail);
    // 2 sum = 2l - (m + offset)
    let target = Rational::new(BigInt::from(2 * l as i64 - (m + offset) as i64), BigInt::from(2));
    if reciprocal_sum != target {
        return VanishingVerdict { zero: false, case: SingularityCase::Nonsingular, witness: None };
    }
    let witness = ReciprocalWitness { l, tail, reciprocal_sum, target, bound_holds: bound(m, l) };
    VanishingVerdict { zero: true, case: SingularityCase::ReciprocalEquality, witness: Some(witness) }
}

/// Whether `det D(K)` vanishes, decided from the shape of the sorted spec.
/// In the reciprocal case the witness records `(m+1)/2 < l <= (3m+1)/4`.
pub fn classify_det(spec: &MultipartiteSpec) -> VanishingVerdict {
    classify_with(spec, 1, |m, l| m + 1 < 2 * l && 4 * l <= 3 * m + 1)
}

/// Whether `cof D(K)` vanishes. In the reciprocal case the witness records
/// `m/2 < l <= 3m/4`.
pub fn classify_cof(spec: &MultipartiteSpec) -> VanishingVerdict {
    classify_with(spec, 0, |m, l| m < 2 * l && 4 * l <= 3 * m)
}

pub fn classify(spec: &MultipartiteSpec) -> SingularityVerdict {
    SingularityVerdict { parts: spec.parts().to_vec(), det: classify_det(spec), cof: classify_cof(spec) }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Sign {
    Negative,
    Zero,
    Positive,
}

impl Sign {
    pub fn of(r: &Rational) -> Self {
        match r.cmp(&rat(0)) {
            std::cmp::Ordering::Less => Self::Negative,
            std::cmp::Ordering::Equal => Self::Zero,
            std::cmp::Ordering::Greater => Self::Positive,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LambdaSignReport {
    pub parts: Vec<usize>,
    #[serde(serialize_with = "as_string")]
    pub lambda: Rational,
    pub sign: Sign,
    /// `f = sum n_i / (n_i - 2)`, defined when no part has size 2; then
    /// `lambda = 1 + 1/f`.
    #[serde(serialize_with = "opt_as_string")]
    pub f_value: Option<Rational>,
}

fn opt_as_string<S: serde::Serializer>(v: &Option<Rational>, s: S) -> std::result::Result<S::Ok, S::Error> {
    match v {
        Some(r) => s.serialize_str(&format_rational(r)),
        None => s.serialize_none(),
    }
}

/// `f = sum n_i / (n_i - 2)`, or `None` if some part equals 2.
pub fn f_value(parts: &[usize]) -> Option<Rational> {
    parts.iter().map(|&n| (n != 2).then(|| Rational::new(BigInt::from(n), BigInt::from(n as i64 - 2)))).sum()
}

/// `lambda = det D / cof D = beta / gamma` for one block.
pub fn lambda_single(spec: &MultipartiteSpec) -> Result<LambdaSignReport> {
    let inv = invariants(spec.parts());
    if inv.gamma.is_zero() {
        return Err(Error::ZeroCofactor { block: 0, parts: spec.to_string() });
    }
    let lambda = Rational::new(inv.beta, inv.gamma);
    let f = f_value(spec.parts());
    if let Some(f) = &f {
        if *f == rat(0) || lambda != rat(1) + f.recip() {
            return Err(Error::IdentityFailure {
                name: "lambda = 1 + 1/f".into(),
                detail: format!("parts {spec}: lambda = {lambda}, f = {f}"),
            });
        }
    }
    Ok(LambdaSignReport { parts: spec.parts().to_vec(), sign: Sign::of(&lambda), lambda, f_value: f })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact_linalg::ratio;

    fn spec(p: &[usize]) -> MultipartiteSpec {
        MultipartiteSpec::new(p.to_vec()).unwrap()
    }

    #[test]
    fn det_examples() {
        let v = classify_det(&spec(&[2, 2, 7]));
        assert!(v.zero);
        assert_eq!(v.case, SingularityCase::TwoTwos);
        assert!(!classify_det(&spec(&[1, 1, 5])).zero);
        assert!(!classify_det(&spec(&[1, 1, 1, 1, 1, 4, 4, 4, 4])).zero);
        let v = classify_det(&spec(&[6, 1, 1, 6, 1, 1, 6, 1, 1, 1, 6]));
        assert!(v.zero);
        let w = v.witness.unwrap();
        assert_eq!((w.l, w.bound_holds), (7, true));
        assert!(w.equality_holds());
    }

    #[test]
    fn cof_examples() {
        assert!(classify_cof(&spec(&[1, 1, 4])).zero);
        let v = classify_cof(&spec(&[1, 1, 1, 1, 8, 8, 8]));
        assert_eq!(v.case, SingularityCase::ReciprocalEquality);
        assert!(v.witness.unwrap().bound_holds);
        assert!(!classify_cof(&spec(&[1, 1, 5])).zero);
        assert!(!classify_cof(&spec(&[2, 3])).zero);
    }

    #[test]
    fn lambda_examples() {
        assert_eq!(lambda_single(&spec(&[1, 1, 5])).unwrap().lambda, rat(-2));
        let one_two = lambda_single(&spec(&[2, 3])).unwrap();
        assert_eq!((one_two.lambda, one_two.f_value), (rat(1), None));
        let k4 = lambda_single(&MultipartiteSpec::complete(4).unwrap()).unwrap();
        assert_eq!(k4.lambda, ratio(3, 4));
        assert_eq!(k4.f_value, Some(rat(-4)));
        assert!(matches!(lambda_single(&spec(&[1, 1, 4])), Err(Error::ZeroCofactor { .. })));
        for n in (3..=12).filter(|&n| n != 6) {
            let t = lambda_single(&MultipartiteSpec::t(n).unwrap()).unwrap();
            assert_eq!(t.lambda, ratio(-2, n as i64 - 6));
        }
        for m in (1..6).filter(|&m| m != 2) {
            let kmm = lambda_single(&spec(&[m, m])).unwrap();
            assert_eq!(kmm.lambda, ratio(3 * m as i64 - 2, 2 * m as i64));
        }
    }
}
