//! Order-3 structure constants and 2-tensors.

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::linalg::Matrix;
use crate::scalar::{self, Q};

/// Cubical order-3 array.
///
/// As a product: `e_i e_j = Σ_k t[i][j][k] e_k`. As a coproduct:
/// `Δ(e_i) = Σ_{j,k} t[i][j][k] e_j⊗e_k`. As an element of `A⊗A⊗A`: the
/// coefficient of `e_i⊗e_j⊗e_k`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Tensor3 {
    dim: usize,
    data: Vec<Q>,
}

/// Elements of `A⊗A⊗A` share the representation.
pub type ThreeTensor = Tensor3;

impl Tensor3 {
    pub fn zeros(dim: usize) -> Self {
        Tensor3 { dim, data: vec![Q::zero(); dim * dim * dim] }
    }

    pub fn from_fn(dim: usize, mut f: impl FnMut(usize, usize, usize) -> Q) -> Self {
        let mut data = Vec::with_capacity(dim * dim * dim);
        for i in 0..dim {
            for j in 0..dim {
                for k in 0..dim {
                    data.push(f(i, j, k));
                }
            }
        }
        Tensor3 { dim, data }
    }

    /// Sparse integer literal, `(i, j, k, c)` with zero-based indices.
    pub fn from_entries(dim: usize, entries: &[(usize, usize, usize, i64)]) -> Self {
        let mut t = Self::zeros(dim);
        for &(i, j, k, c) in entries {
            t.data[(i * dim + j) * dim + k] += scalar::int(c);
        }
        t
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn get(&self, i: usize, j: usize, k: usize) -> &Q {
        &self.data[(i * self.dim + j) * self.dim + k]
    }

    pub fn set(&mut self, i: usize, j: usize, k: usize, v: Q) {
        let d = self.dim;
        self.data[(i * d + j) * d + k] = v;
    }

    pub fn add_to(&mut self, i: usize, j: usize, k: usize, v: &Q) {
        let d = self.dim;
        self.data[(i * d + j) * d + k] += v;
    }

    pub fn entries(&self) -> &[Q] {
        &self.data
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Zero::is_zero)
    }

    /// Coordinates of `e_i e_j`.
    pub fn basis_product(&self, i: usize, j: usize) -> &[Q] {
        let d = self.dim;
        &self.data[(i * d + j) * d..(i * d + j + 1) * d]
    }

    /// Bilinear extension to arbitrary vectors.
    pub fn product(&self, x: &[Q], y: &[Q]) -> Vec<Q> {
        let mut out = vec![Q::zero(); self.dim];
        for (i, a) in x.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in y.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                let ab = a * b;
                for (o, c) in out.iter_mut().zip(self.basis_product(i, j)) {
                    if !c.is_zero() {
                        *o += &ab * c;
                    }
                }
            }
        }
        out
    }

    /// Matrix of `y ↦ e_i y`.
    pub fn left_basis(&self, i: usize) -> Matrix {
        Matrix::from_fn(self.dim, self.dim, |k, j| self.get(i, j, k).clone())
    }

    /// Matrix of `y ↦ y e_i`.
    pub fn right_basis(&self, i: usize) -> Matrix {
        Matrix::from_fn(self.dim, self.dim, |k, j| self.get(j, i, k).clone())
    }

    /// Matrix of `y ↦ x y`.
    pub fn left(&self, x: &[Q]) -> Matrix {
        Matrix::from_fn(self.dim, self.dim, |k, j| {
            x.iter().enumerate().fold(Q::zero(), |acc, (i, a)| acc + a * self.get(i, j, k))
        })
    }

    /// Matrix of `y ↦ y x`.
    pub fn right(&self, x: &[Q]) -> Matrix {
        Matrix::from_fn(self.dim, self.dim, |k, j| {
            x.iter().enumerate().fold(Q::zero(), |acc, (i, a)| acc + a * self.get(j, i, k))
        })
    }

    /// The `n×n` slice with first index fixed: `Δ(e_i)` as a 2-tensor.
    pub fn slice(&self, i: usize) -> Matrix {
        Matrix::from_fn(self.dim, self.dim, |j, k| self.get(i, j, k).clone())
    }

    /// `Δ(x)` as a 2-tensor coefficient matrix.
    pub fn coproduct(&self, x: &[Q]) -> Matrix {
        Matrix::from_fn(self.dim, self.dim, |j, k| {
            x.iter().enumerate().fold(Q::zero(), |acc, (i, a)| acc + a * self.get(i, j, k))
        })
    }

    /// Builds a coproduct table from the images `Δ(e_i)`.
    pub fn from_slices(slices: &[Matrix]) -> Self {
        let n = slices.len();
        Self::from_fn(n, |i, j, k| slices[i][(j, k)].clone())
    }

    /// Builds a product table from the coordinates of `e_i e_j`.
    pub fn from_products(n: usize, mut f: impl FnMut(usize, usize) -> Vec<Q>) -> Self {
        let mut t = Self::zeros(n);
        for i in 0..n {
            for j in 0..n {
                let v = f(i, j);
                for (k, c) in v.into_iter().enumerate() {
                    t.set(i, j, k, c);
                }
            }
        }
        t
    }

    /// Sum of the two tensors entrywise.
    pub fn plus(&self, other: &Tensor3) -> Tensor3 {
        assert_eq!(self.dim, other.dim);
        Tensor3 { dim: self.dim, data: scalar::add_vec(&self.data, &other.data) }
    }

    pub fn minus(&self, other: &Tensor3) -> Tensor3 {
        assert_eq!(self.dim, other.dim);
        Tensor3 { dim: self.dim, data: scalar::sub_vec(&self.data, &other.data) }
    }

    pub fn scale(&self, c: &Q) -> Tensor3 {
        Tensor3 { dim: self.dim, data: scalar::scale_vec(c, &self.data) }
    }

    /// Applies `f` to slot `slot` (0, 1 or 2) of an element of `A⊗A⊗A`.
    pub fn map_slot(&self, slot: usize, f: &Matrix) -> Tensor3 {
        let n = self.dim;
        let mut out = Tensor3::zeros(n);
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    let c = self.get(i, j, k);
                    if c.is_zero() {
                        continue;
                    }
                    let src = [i, j, k][slot];
                    for t in 0..n {
                        let m = &f[(t, src)];
                        if m.is_zero() {
                            continue;
                        }
                        let idx = match slot {
                            0 => (t, j, k),
                            1 => (i, t, k),
                            _ => (i, j, t),
                        };
                        out.add_to(idx.0, idx.1, idx.2, &(c * m));
                    }
                }
            }
        }
        out
    }
}

/// `r = Σ coeff[i][j] e_i⊗e_j`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct TwoTensor {
    coeff: Matrix,
}

impl TwoTensor {
    pub fn new(coeff: Matrix) -> Result<Self> {
        if !coeff.is_square() {
            return Err(Error::Shape(format!(
                "2-tensor coefficients must be square, got {}x{}",
                coeff.rows(),
                coeff.cols()
            )));
        }
        Ok(TwoTensor { coeff })
    }

    pub fn zero(dim: usize) -> Self {
        TwoTensor { coeff: Matrix::zeros(dim, dim) }
    }

    /// Sparse integer literal, `(i, j, c)` with zero-based indices.
    pub fn from_entries(dim: usize, entries: &[(usize, usize, i64)]) -> Self {
        let mut m = Matrix::zeros(dim, dim);
        for &(i, j, c) in entries {
            m[(i, j)] += scalar::int(c);
        }
        TwoTensor { coeff: m }
    }

    pub fn dim(&self) -> usize {
        self.coeff.rows()
    }

    pub fn coeff(&self) -> &Matrix {
        &self.coeff
    }

    pub fn into_coeff(self) -> Matrix {
        self.coeff
    }

    pub fn get(&self, i: usize, j: usize) -> &Q {
        &self.coeff[(i, j)]
    }

    pub fn is_zero(&self) -> bool {
        self.coeff.is_zero()
    }

    /// `τ(r)`.
    pub fn flip(&self) -> TwoTensor {
        TwoTensor { coeff: self.coeff.transpose() }
    }

    /// `(s, a)` with `s = (r+τr)/2`, `a = (r−τr)/2`.
    pub fn sym_split(&self) -> (TwoTensor, TwoTensor) {
        let half = scalar::frac(1, 2);
        let t = self.coeff.transpose();
        let s = (&self.coeff + &t).scale(&half);
        let a = (&self.coeff - &t).scale(&half);
        (TwoTensor { coeff: s }, TwoTensor { coeff: a })
    }

    pub fn is_symmetric(&self) -> bool {
        self.coeff == self.coeff.transpose()
    }

    pub fn is_antisymmetric(&self) -> bool {
        self.coeff == -&self.coeff.transpose()
    }

    /// `(f⊗g)(r)`, which is `F R Gᵀ` on coefficients.
    pub fn map(&self, f: &Matrix, g: &Matrix) -> TwoTensor {
        let fr = f * &self.coeff;
        TwoTensor { coeff: &fr * &g.transpose() }
    }

    pub fn plus(&self, other: &TwoTensor) -> TwoTensor {
        TwoTensor { coeff: &self.coeff + &other.coeff }
    }

    pub fn minus(&self, other: &TwoTensor) -> TwoTensor {
        TwoTensor { coeff: &self.coeff - &other.coeff }
    }

    pub fn scale(&self, c: &Q) -> TwoTensor {
        TwoTensor { coeff: self.coeff.scale(c) }
    }
}

/// `r₁₂r₁₃ + r₁₃r₂₃ − r₂₃r₁₂` for `r = Σ x_i⊗y_i`, where
/// `r₁₂r₁₃ = Σ x_i x_j⊗y_i⊗y_j`, `r₁₃r₂₃ = Σ x_i⊗x_j⊗y_i y_j` and
/// `r₂₃r₁₂ = Σ x_j⊗x_i y_j⊗y_i`.
pub fn ybe_triple(mul: &Tensor3, r: &TwoTensor) -> Result<Tensor3> {
    let n = mul.dim();
    if r.dim() != n {
        return Err(Error::dim(format!("product has dim {n} but r has dim {}", r.dim())));
    }
    let mut out = Tensor3::zeros(n);
    let nz: Vec<(usize, usize, &Q)> = (0..n)
        .flat_map(|a| (0..n).map(move |b| (a, b)))
        .map(|(a, b)| (a, b, r.get(a, b)))
        .filter(|(_, _, c)| !c.is_zero())
        .collect();
    for &(a, b, rab) in &nz {
        for &(c, d, rcd) in &nz {
            let w = rab * rcd;
            // x_i = e_a, y_i = e_b, x_j = e_c, y_j = e_d
            for (k, m) in mul.basis_product(a, c).iter().enumerate() {
                if !m.is_zero() {
                    out.add_to(k, b, d, &(&w * m));
                }
            }
            for (k, m) in mul.basis_product(b, d).iter().enumerate() {
                if !m.is_zero() {
                    out.add_to(a, c, k, &(&w * m));
                }
            }
            for (k, m) in mul.basis_product(a, d).iter().enumerate() {
                if !m.is_zero() {
                    out.add_to(c, k, b, &-(&w * m));
                }
            }
        }
    }
    Ok(out)
}

/// Nonzero coordinate positions of a 3-tensor, in index order.
pub fn first_nonzero(t: &Tensor3) -> Option<(usize, usize, usize)> {
    let n = t.dim();
    (0..n * n * n)
        .find(|&p| !t.entries()[p].is_zero())
        .map(|p| (p / (n * n), (p / n) % n, p % n))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn a3() -> Tensor3 {
        // e1e1=e1, e1e2=e2=e2e1
        Tensor3::from_entries(3, &[(0, 0, 0, 1), (0, 1, 1, 1), (1, 0, 1, 1)])
    }

    #[test]
    fn flip_of_antisymmetric_r() {
        let r = TwoTensor::from_entries(3, &[(1, 2, 1), (2, 1, -1)]);
        assert_eq!(r.flip(), TwoTensor::from_entries(3, &[(2, 1, 1), (1, 2, -1)]));
        assert_eq!(r.flip().flip(), r);
        let s = TwoTensor::from_entries(3, &[(2, 2, 1)]);
        assert_eq!(s.flip(), s);
        assert_eq!(TwoTensor::zero(2).flip(), TwoTensor::zero(2));
    }

    #[test]
    fn sym_split_examples() {
        let r = TwoTensor::from_entries(3, &[(1, 2, 1), (2, 1, -1)]);
        assert_eq!(r.sym_split(), (TwoTensor::zero(3), r.clone()));
        let s = TwoTensor::from_entries(3, &[(2, 2, 1)]);
        assert_eq!(s.sym_split(), (s.clone(), TwoTensor::zero(3)));
        let e = TwoTensor::from_entries(2, &[(0, 1, 1)]);
        let (sym, anti) = e.sym_split();
        let h = scalar::frac(1, 2);
        assert_eq!(sym.get(0, 1), &h);
        assert_eq!(sym.get(1, 0), &h);
        assert_eq!(anti.get(0, 1), &h);
        assert_eq!(anti.get(1, 0), &-h);
    }

    #[test]
    fn ybe_triple_vanishes_on_known_solutions() {
        let r = TwoTensor::from_entries(3, &[(1, 2, 1), (2, 1, -1)]);
        assert!(ybe_triple(&a3(), &r).unwrap().is_zero());
        let s = TwoTensor::from_entries(3, &[(2, 2, 1)]);
        assert!(ybe_triple(&a3(), &s).unwrap().is_zero());
        assert!(ybe_triple(&a3(), &TwoTensor::zero(3)).unwrap().is_zero());
    }

    #[test]
    fn ybe_triple_dimension_mismatch() {
        assert!(matches!(ybe_triple(&a3(), &TwoTensor::zero(2)), Err(Error::Dimension(_))));
    }

    #[test]
    fn left_and_right_multiplication() {
        let m = a3();
        let e1 = scalar::unit(3, 0);
        let e2 = scalar::unit(3, 1);
        assert_eq!(m.left(&e1).apply(&e2), e2);
        assert_eq!(m.right(&e1).apply(&e2), e2);
        assert_eq!(m.left_basis(1), m.left(&e2));
        assert_eq!(m.right_basis(1), m.right(&e2));
    }

    #[test]
    fn map_slot_matches_two_tensor_map() {
        let t = Tensor3::from_entries(2, &[(0, 1, 1, 2), (1, 0, 0, -1)]);
        let f = Matrix::from_rows(&[&[1, 2], &[0, 1]]);
        let mapped = t.map_slot(1, &f);
        // (id⊗f⊗id) on e1⊗e2⊗e2 gives 2·(2e1+e2) in the middle slot
        assert_eq!(mapped.get(0, 0, 1), &scalar::int(4));
        assert_eq!(mapped.get(0, 1, 1), &scalar::int(2));
    }
}
