use serde::Serialize;

use super::blocks::{c_blocks, distance_blocks};
use super::T6TnSpec;
use crate::exact_linalg::{rat, ExactMatrix};

/// One block of `Y = D C` before the factor `1/(2(n-6))`: it must equal
/// `2(n-6) I` on the diagonal blocks and vanish elsewhere.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct StepOutcome {
    pub step: usize,
    pub expect_identity: bool,
    /// `false` when the block does not occur (two distinct `T_n` need `b >= 2`).
    pub applicable: bool,
    pub holds: bool,
}

fn sum(terms: &[ExactMatrix]) -> ExactMatrix {
    let mut it = terms.iter();
    let first = it.next().expect("at least one term").clone();
    it.fold(first, |acc, t| acc.add(t).expect("conformal step terms"))
}

fn mul(a: &ExactMatrix, b: &ExactMatrix) -> ExactMatrix {
    a.mul(b).expect("conformal step product")
}

fn k(m: ExactMatrix, c: usize) -> ExactMatrix {
    m.scale(&rat(c as i64))
}

/// Evaluates the ten block products of `D C` separately.
pub fn verify_steps(spec: &T6TnSpec) -> Vec<StepOutcome> {
    let d = distance_blocks(spec);
    let c = c_blocks(spec);
    let b = spec.b();
    let (d1, d2, d3, d4, d5, d6) = (&d.corner, &d.coupling, &d.center_t6, &d.diag, &d.off, &d.center_tn);
    let (c1, c2, c3, c4, c6) = (&c.corner, &c.coupling, &c.center_t6, &c.diag, &c.center_tn);
    let c7 = ExactMatrix::filled(1, 1, c.center.clone());
    let (d2t, c2t) = (d2.transpose(), c2.transpose());
    let (d3t, d6t) = (d3.transpose(), d6.transpose());
    let (c3t, c6t) = (c3.transpose(), c6.transpose());
    let scale = 2 * spec.n_minus_6();

    let steps: Vec<(bool, bool, ExactMatrix)> = vec![
        (true, true, sum(&[mul(d1, c1), k(mul(d2, &c2t), b), mul(d3, &c3t)])),
        (false, true, sum(&[mul(d1, c2), mul(d2, c4), mul(d3, &c6t)])),
        (false, true, sum(&[mul(d1, c3), k(mul(d2, c6), b), mul(d3, &c7)])),
        (false, true, sum(&[mul(&d2t, c1), mul(d4, &c2t), k(mul(d5, &c2t), b - 1), mul(d6, &c3t)])),
        (true, true, sum(&[mul(&d2t, c2), mul(d4, c4), mul(d6, &c6t)])),
        (false, b >= 2, sum(&[mul(&d2t, c2), mul(d5, c4), mul(d6, &c6t)])),
        (false, true, sum(&[mul(&d2t, c3), mul(d4, c6), k(mul(d5, c6), b - 1), mul(d6, &c7)])),
        (false, true, sum(&[mul(&d3t, c1), k(mul(&d6t, &c2t), b)])),
        (false, true, sum(&[mul(&d3t, c2), mul(&d6t, c4)])),
        (true, true, sum(&[mul(&d3t, c3), k(mul(&d6t, c6), b)])),
    ];
    steps
        .into_iter()
        .enumerate()
        .map(|(i, (expect_identity, applicable, y))| {
            let holds =
                if expect_identity { y == ExactMatrix::identity(y.rows()).scale(&rat(scale)) } else { y.is_zero() };
            StepOutcome { step: i + 1, expect_identity, applicable, holds }
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn all_steps_hold() {
        for n in [3, 4, 5, 7, 8] {
            for b in 1..=3 {
                let report = verify_steps(&T6TnSpec::new(n, b).unwrap());
                assert_eq!(report.len(), 10);
                assert!(report.iter().all(|s| s.holds), "n = {n}, b = {b}: {report:?}");
            }
        }
    }
}
