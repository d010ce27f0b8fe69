#![allow(dead_code)]

use avgbi_core::bialgebra::AsiBialgebraData;
use avgbi_core::structures::{AveragingAlgebra, PermAlgebra, PreLieQuadratic};
use avgbi_core::ybe::coboundary_comultiplication;
use avgbi_core::{Matrix, Tensor3, TwoTensor};

/// Operator matrix from `(src, dst, coeff)` triples: `op(e_src)` has `coeff`
/// on `e_dst`.
pub fn op(n: usize, entries: &[(usize, usize, i64)]) -> Matrix {
    let mut m = Matrix::zeros(n, n);
    for &(s, d, c) in entries {
        m[(d, s)] = avgbi_core::scalar::int(c);
    }
    m
}

/// Two-dimensional algebra `e1e2 = e1`, `e2e2 = e2`.
pub fn two_dim_mul() -> Tensor3 {
    Tensor3::from_entries(2, &[(0, 1, 0, 1), (1, 1, 1, 1)])
}

pub fn two_dim(alpha: &[(usize, usize, i64)]) -> AveragingAlgebra {
    AveragingAlgebra::new(two_dim_mul(), op(2, alpha)).unwrap()
}

/// `e1e1 = e1`, `e1e2 = e2 = e2e1` in dimension `n`.
pub fn unital_mul(n: usize) -> Tensor3 {
    Tensor3::from_entries(n, &[(0, 0, 0, 1), (0, 1, 1, 1), (1, 0, 1, 1)])
}

pub fn antisym_r() -> TwoTensor {
    TwoTensor::from_entries(3, &[(1, 2, 1), (2, 1, -1)])
}

pub fn sym_r() -> TwoTensor {
    TwoTensor::from_entries(3, &[(2, 2, 1)])
}

/// Three-dimensional algebra with `α(e1) = α(e2) = e3`, `β(e1) = e3`,
/// `β(e2) = −e3`.
pub fn a3() -> (AveragingAlgebra, Matrix) {
    (
        AveragingAlgebra::new(unital_mul(3), op(3, &[(0, 2, 1), (1, 2, 1)])).unwrap(),
        op(3, &[(0, 2, 1), (1, 2, -1)]),
    )
}

/// Commutative three-dimensional algebra with `α(e1) = e3`, `β = 0`.
pub fn c3() -> (AveragingAlgebra, Matrix) {
    (AveragingAlgebra::new(unital_mul(3), op(3, &[(0, 2, 1)])).unwrap(), Matrix::zeros(3, 3))
}

pub fn coboundary_bialgebra(a: &AveragingAlgebra, beta: &Matrix, r: &TwoTensor) -> AsiBialgebraData {
    let comul = coboundary_comultiplication(&a.alg, r).unwrap();
    AsiBialgebraData::new(a.mul().clone(), comul, a.alpha.clone(), beta.clone()).unwrap()
}

pub fn a3_bialgebra() -> AsiBialgebraData {
    let (a, b) = a3();
    coboundary_bialgebra(&a, &b, &antisym_r())
}

pub fn c3_bialgebra() -> AsiBialgebraData {
    let (a, b) = c3();
    coboundary_bialgebra(&a, &b, &antisym_r())
}

/// Commutative and cocommutative two-dimensional bialgebra with
/// `α(e1) = e1`, `Δ(e2) = e2⊗e2`, `β(e2) = e2`.
pub fn bia2() -> AsiBialgebraData {
    AsiBialgebraData::new(
        unital_mul(2),
        Tensor3::from_entries(2, &[(1, 1, 1, 1)]),
        op(2, &[(0, 0, 1)]),
        op(2, &[(1, 1, 1)]),
    )
    .unwrap()
}

/// The two-dimensional quadruple whose operator is not averaging on the
/// coalgebra.
pub fn bad_bialgebra() -> AsiBialgebraData {
    AsiBialgebraData::new(
        two_dim_mul(),
        Tensor3::from_entries(2, &[(0, 0, 0, 1), (1, 1, 0, 1)]),
        op(2, &[(1, 1, 1)]),
        op(2, &[(0, 1, 1)]),
    )
    .unwrap()
}

/// `e1e1 = e2`, `e1e2 = e3 = e2e1` with the printed operators.
pub fn perm3_source() -> (AveragingAlgebra, Matrix) {
    (
        AveragingAlgebra::new(
            Tensor3::from_entries(3, &[(0, 0, 1, 1), (0, 1, 2, 1), (1, 0, 2, 1)]),
            op(3, &[(0, 1, 1), (0, 2, 1), (1, 1, -1), (2, 2, 1)]),
        )
        .unwrap(),
        op(3, &[(0, 0, -1), (2, 2, 1)]),
    )
}

/// Printed perm table `e1•e1 = e3 = e2•e1`.
pub fn perm3_printed() -> PermAlgebra {
    PermAlgebra::new(Tensor3::from_entries(3, &[(0, 0, 2, 1), (1, 0, 2, 1)])).unwrap()
}

/// `q1∘q2 = q1`, `q2∘q2 = q2`, `ω(q1, q2) = 1 = −ω(q2, q1)`.
pub fn prelie2() -> PreLieQuadratic {
    PreLieQuadratic::new(
        Tensor3::from_entries(2, &[(0, 1, 0, 1), (1, 1, 1, 1)]),
        Matrix::from_rows(&[&[0, 1], &[-1, 0]]),
    )
    .unwrap()
}

/// Every vector of length `len` over `vals`, first coordinate slowest.
pub fn all_vectors(len: usize, vals: &[i64]) -> Vec<Vec<i64>> {
    let mut out = vec![vec![]];
    for _ in 0..len {
        out = out
            .into_iter()
            .flat_map(|v| {
                vals.iter().map(move |&x| {
                    let mut w = v.clone();
                    w.push(x);
                    w
                })
            })
            .collect();
    }
    out
}

pub fn matrix_from(n: usize, m: usize, v: &[i64]) -> Matrix {
    Matrix::from_fn(n, m, |i, j| avgbi_core::scalar::int(v[i * m + j]))
}

pub fn tensor_from(n: usize, v: &[i64]) -> Tensor3 {
    Tensor3::from_fn(n, |i, j, k| avgbi_core::scalar::int(v[(i * n + j) * n + k]))
}

pub fn two_tensor_from(n: usize, v: &[i64]) -> TwoTensor {
    TwoTensor::new(matrix_from(n, n, v)).unwrap()
}

/// Every associative product on a space of dimension `n ≤ 2` with structure
/// constants in `{−1, 0, 1}`.
pub fn associative_tables(n: usize) -> Vec<Tensor3> {
    all_vectors(n * n * n, &[-1, 0, 1])
        .into_iter()
        .map(|v| tensor_from(n, &v))
        .filter(|t| avgbi_core::structures::verify_associative(t).passed())
        .collect()
}
