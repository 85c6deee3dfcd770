use super::T6TnSpec;
use crate::error::Result;
use crate::exact_linalg::{block_assemble, rat, ratio, ExactMatrix, Rational};

fn j(r: usize, c: usize) -> ExactMatrix {
    ExactMatrix::ones(r, c)
}

/// `jc J_n + ic I_n`.
fn lin(jc: i64, ic: i64, n: usize) -> ExactMatrix {
    ExactMatrix::from_fn(n, n, |a, b| rat(jc + if a == b { ic } else { 0 }))
}

fn times(m: ExactMatrix, k: i64) -> ExactMatrix {
    m.scale(&rat(k))
}

fn quad(a: ExactMatrix, b: ExactMatrix, c: ExactMatrix, d: ExactMatrix) -> ExactMatrix {
    block_assemble(&[vec![a, b], vec![c, d]]).expect("conformal quadrants")
}

/// Column `(top 1_2 ; bottom 1_k)`.
fn split_col(top: i64, bottom: i64, k: usize) -> ExactMatrix {
    let mut v = vec![rat(top); 2];
    v.extend(std::iter::repeat_n(rat(bottom), k));
    ExactMatrix::column(v)
}

/// Blocks shared by every matrix of the family, in the vertex order of the
/// module docs: a `5x5` corner for `T_6`, a `5x(n-1)` coupling to each
/// `T_n`, an `(n-1)`-square diagonal block per `T_n`, the block between two
/// different `T_n`, the two center columns and the center entry.
#[derive(Clone, Debug)]
pub(crate) struct FamilyBlocks {
    pub corner: ExactMatrix,
    pub coupling: ExactMatrix,
    pub center_t6: ExactMatrix,
    pub diag: ExactMatrix,
    pub off: ExactMatrix,
    pub center_tn: ExactMatrix,
    pub center: Rational,
}

impl FamilyBlocks {
    /// Symmetric assembly; the lower-left blocks are transposes.
    pub fn assemble(&self, b: usize) -> ExactMatrix {
        let mut grid = Vec::with_capacity(b + 2);
        let mut first = vec![self.corner.clone()];
        first.extend(std::iter::repeat_n(self.coupling.clone(), b));
        first.push(self.center_t6.clone());
        grid.push(first);
        for t in 0..b {
            let mut row = vec![self.coupling.transpose()];
            row.extend((0..b).map(|u| if u == t { self.diag.clone() } else { self.off.clone() }));
            row.push(self.center_tn.clone());
            grid.push(row);
        }
        let mut last = vec![self.center_t6.transpose()];
        last.extend(std::iter::repeat_n(self.center_tn.transpose(), b));
        last.push(ExactMatrix::filled(1, 1, self.center.clone()));
        grid.push(last);
        block_assemble(&grid).expect("family blocks are conformal")
    }
}

pub(crate) fn distance_blocks(spec: &T6TnSpec) -> FamilyBlocks {
    let a = spec.n() - 3;
    let far = quad(times(j(2, 2), 2), times(j(2, a), 3), times(j(3, 2), 3), times(j(3, a), 4));
    FamilyBlocks {
        corner: quad(lin(1, -1, 2), j(2, 3), j(3, 2), lin(2, -2, 3)),
        coupling: far,
        center_t6: split_col(1, 2, 3),
        diag: quad(lin(1, -1, 2), j(2, a), j(a, 2), lin(2, -2, a)),
        off: quad(times(j(2, 2), 2), times(j(2, a), 3), times(j(a, 2), 3), times(j(a, a), 4)),
        center_tn: split_col(1, 2, a),
        center: rat(0),
    }
}

pub(crate) fn laplacian_blocks(spec: &T6TnSpec) -> FamilyBlocks {
    let (n, a) = (spec.n(), spec.n() - 3);
    FamilyBlocks {
        corner: quad(lin(-1, 6, 2), times(j(2, 3), -1), times(j(3, 2), -1), lin(0, 2, 3)),
        coupling: ExactMatrix::zeros(5, n - 1),
        center_t6: split_col(-1, 0, 3),
        diag: quad(lin(-1, n as i64, 2), times(j(2, a), -1), times(j(a, 2), -1), lin(0, 2, a)),
        off: ExactMatrix::zeros(n - 1, n - 1),
        center_tn: split_col(-1, 0, a),
        center: rat(2 * (spec.b() as i64 + 1)),
    }
}

pub(crate) fn r_blocks(spec: &T6TnSpec) -> FamilyBlocks {
    let (n, a) = (spec.n() as i64, spec.n() - 3);
    let (b, b1, s) = (spec.b() as i64, spec.b() as i64 + 1, spec.n_minus_6());
    let corner_cross = -(2 * b * b1 + s);
    FamilyBlocks {
        corner: quad(
            lin(4 * b * b1 - (3 * b + 4) * s, 4 * s * b1, 2),
            times(j(2, 3), corner_cross),
            times(j(3, 2), corner_cross),
            lin(b * b1 - s, b1 * s, 3),
        ),
        coupling: quad(
            times(j(2, 2), -(2 * b1 * (n - 4) + s)),
            times(j(2, a), 2 * b1 - s),
            // Printed with a leading minus; only the positive sign makes
            // this agree with the block form of the inverse.
            times(j(3, 2), b1 * (n - 4) - s),
            times(j(3, a), -(b1 + s)),
        ),
        center_t6: split_col(s * (2 * b * b1 - 1), -s * (b * b1 + 1), 3),
        diag: quad(
            lin(b1 * (n - 2) - s, b1 * (n - 2) * s, 2),
            times(j(2, a), -(b1 * (n - 4) + s)),
            times(j(a, 2), -(b1 * (n - 4) + s)),
            lin(b1 - s, b1 * s, a),
        ),
        off: times(j(a + 2, a + 2), -s),
        center_tn: split_col(-s, -s, a),
        center: rat(-b * b * s),
    }
}

/// The inverse in its own block form, before the factor `1/(2(n-6))`.
pub(crate) fn c_blocks(spec: &T6TnSpec) -> FamilyBlocks {
    let (n, a) = (spec.n() as i64, spec.n() - 3);
    let (b, s) = (spec.b() as i64, spec.n_minus_6());
    FamilyBlocks {
        corner: quad(
            lin(2 * (2 * b - s), -2 * s, 2),
            times(j(2, 3), -(2 * b - s)),
            times(j(3, 2), -(2 * b - s)),
            lin(b, -s, 3),
        ),
        coupling: quad(times(j(2, 2), -2 * (n - 4)), times(j(2, a), 2), times(j(3, 2), n - 4), times(j(3, a), -1)),
        center_t6: split_col(s * (2 * b + 1), -s * b, 3),
        diag: quad(lin(2 * (n - 4), -2 * s, 2), times(j(2, a), -2), times(j(a, 2), -2), lin(1, -s, a)),
        off: ExactMatrix::zeros(a + 2, a + 2),
        center_tn: split_col(s, 0, a),
        center: rat(-s * (3 * b + 1)),
    }
}

/// `D`, the graph Laplacian `L` and the correction matrix `R`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct T6TnMatrices {
    pub d: ExactMatrix,
    pub l: ExactMatrix,
    pub r: ExactMatrix,
}

pub fn build_t6_tn(spec: &T6TnSpec) -> T6TnMatrices {
    T6TnMatrices {
        d: distance_blocks(spec).assemble(spec.b()),
        l: laplacian_blocks(spec).assemble(spec.b()),
        r: build_r(spec),
    }
}

pub fn build_r(spec: &T6TnSpec) -> ExactMatrix {
    r_blocks(spec).assemble(spec.b())
}

/// `C = -L/2 + J/(2(b+1)) + R/(2(b+1)(n-6))`.
pub fn inverse_t6_tn(spec: &T6TnSpec) -> Result<ExactMatrix> {
    let m = build_t6_tn(spec);
    let size = spec.vertex_count();
    let b1 = spec.b() as i64 + 1;
    m.l.scale(&ratio(-1, 2))
        .add(&ExactMatrix::ones(size, size).scale(&ratio(1, 2 * b1)))?
        .add(&m.r.scale(&ratio(1, 2 * b1 * spec.n_minus_6())))
}

/// The same inverse assembled directly from its block form.
pub fn inverse_t6_tn_blocks(spec: &T6TnSpec) -> ExactMatrix {
    c_blocks(spec).assemble(spec.b()).scale(&ratio(1, 2 * spec.n_minus_6()))
}
