//! Invariant tensors, quasi-triangular and factorizable classification,
//! factorization of elements, the correspondence with Rota-Baxter operators on
//! symmetric averaging Frobenius algebras, and the twisted bialgebra.

use num_traits::{One, Zero};

use crate::bialgebra::{adjoint_operator, dual_coproduct, BilinearForm};
use crate::error::{require, Error, Result};
use crate::linalg::Matrix;
use crate::report::{check_all, check_vanishes, kernel_axiom, CheckReport};
use crate::scalar::{self, unit, Q};
use crate::structures::{assoc_axiom, rota_baxter_report, Algebra, AveragingAlgebra};
use crate::tensor::{Tensor3, TwoTensor};
use crate::ybe::{check_avg_ybe, coboundary_comultiplication, r_maps, r_product};

/// LRINV-1: `(id⊗ℓ(a) − 𝔯(a)⊗id)(t) = 0` for every basis vector `a`.
pub fn check_lr_invariant(alg: &Algebra, t: &TwoTensor) -> Result<CheckReport> {
    let d = coboundary_comultiplication(alg, t)?;
    let n = alg.dim();
    let mut rep = CheckReport::new("(l,r)-invariance");
    rep.push(check_vanishes("LRINV-1", &[n], |x| d.slice(x[0]).entries().to_vec()));
    Ok(rep)
}

/// Everything needed downstream of a factorizable `r`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FactorizableData {
    pub algebra: AveragingAlgebra,
    pub beta: Matrix,
    pub r: TwoTensor,
    /// `𝓘 = r♯ − r♮`.
    pub i_map: Matrix,
    pub i_inv: Matrix,
    pub report: CheckReport,
}

impl FactorizableData {
    pub fn sharp(&self) -> Matrix {
        r_maps(&self.r).0
    }

    pub fn natural(&self) -> Matrix {
        r_maps(&self.r).1
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Classification {
    /// `r` fails the YBE or `𝔰(r)` is not invariant.
    NotSolution(CheckReport),
    /// FACT-1 and FACT-2 are recorded as informational entries.
    QuasiTriangular(CheckReport),
    Factorizable(Box<FactorizableData>),
}

impl Classification {
    pub fn name(&self) -> &'static str {
        match self {
            Classification::NotSolution(_) => "not-solution",
            Classification::QuasiTriangular(_) => "quasi-triangular",
            Classification::Factorizable(_) => "factorizable",
        }
    }

    pub fn report(&self) -> &CheckReport {
        match self {
            Classification::NotSolution(r) | Classification::QuasiTriangular(r) => r,
            Classification::Factorizable(f) => &f.report,
        }
    }

    pub fn factorizable(&self) -> Option<&FactorizableData> {
        match self {
            Classification::Factorizable(f) => Some(f),
            _ => None,
        }
    }

    pub fn is_quasi_triangular(&self) -> bool {
        !matches!(self, Classification::NotSolution(_))
    }
}

/// Quasi-triangular: YBE-1..3 and LRINV-1 on `𝔰(r)`. Factorizable: in addition
/// FACT-1 (`𝓘` invertible) and FACT-2 (`𝓘β* = α𝓘`).
pub fn classify_r(a: &AveragingAlgebra, beta: &Matrix, r: &TwoTensor) -> Result<Classification> {
    let mut rep = check_avg_ybe(a, beta, r)?;
    rep.kind = "factorizability".into();
    let (sym, _) = r.sym_split();
    rep.extend(check_lr_invariant(&a.alg, &sym)?);
    if !rep.passed() {
        return Ok(Classification::NotSolution(rep));
    }
    let n = a.dim();
    let i_map = r.coeff() + &r.coeff().transpose();
    let inv = i_map.inverse().ok();
    let fact1 = kernel_axiom("FACT-1", &i_map);
    let lhs = &i_map * &beta.transpose();
    let rhs = &a.alpha * &i_map;
    let fact2 = check_all("FACT-2", &[n], |x| (lhs.column(x[0]), rhs.column(x[0])));
    match inv {
        Some(i_inv) if fact2.pass => {
            rep.push(fact1);
            rep.push(fact2);
            Ok(Classification::Factorizable(Box::new(FactorizableData {
                algebra: a.clone(),
                beta: beta.clone(),
                r: r.clone(),
                i_map,
                i_inv,
                report: rep,
            })))
        }
        _ => {
            rep.push(fact1.informational());
            rep.push(fact2.informational());
            Ok(Classification::QuasiTriangular(rep))
        }
    }
}

/// `a = a₊ + a₋` with `a₊ = r♯(𝓘⁻¹a)` and `a₋ = −r♮(𝓘⁻¹a)`.
pub fn factorize_element(fact: &FactorizableData, a: &[Q]) -> Result<(Vec<Q>, Vec<Q>)> {
    let n = fact.algebra.dim();
    if a.len() != n {
        return Err(Error::dim(format!("element has {} coordinates, expected {n}", a.len())));
    }
    let x = fact.i_inv.apply(a);
    let plus = fact.sharp().apply(&x);
    let minus = scalar::scale_vec(&-Q::one(), &fact.natural().apply(&x));
    Ok((plus, minus))
}

/// A Rota-Baxter operator of weight `λ` on a symmetric averaging Frobenius
/// algebra together with its form and the report of all its identities.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RotaBaxterFrobenius {
    pub form: BilinearForm,
    pub operator: Matrix,
    pub report: CheckReport,
}

/// FORM-ND/SYM/INV, RB-λ-1/2, RB-FORM
/// `𝔅(R(a₁),a₂) + 𝔅(a₁,R(a₂)) + λ𝔅(a₁,a₂) = 0` and RB-ADJ `R + R̂ + λ·id = 0`.
pub fn rb_frobenius_report(a: &AveragingAlgebra, form: &BilinearForm, op: &Matrix, weight: &Q) -> Result<CheckReport> {
    let n = a.dim();
    if form.dim() != n {
        return Err(Error::dim("form and algebra dimensions differ"));
    }
    let mut rep = CheckReport::new("rota-baxter on frobenius");
    let mul = a.mul();
    rep.push(kernel_axiom("FORM-ND", &form.b));
    rep.push(check_all("FORM-SYM", &[n, n], |x| {
        (vec![form.b[(x[0], x[1])].clone()], vec![form.b[(x[1], x[0])].clone()])
    }));
    rep.push(check_all("FORM-INV", &[n, n, n], |x| {
        let lhs = form.value(mul.basis_product(x[0], x[1]), &unit(n, x[2]));
        (vec![lhs], vec![form.value(&unit(n, x[0]), mul.basis_product(x[1], x[2]))])
    }));
    rep.push(assoc_axiom("ASSOC-1", mul));
    rep.extend(rota_baxter_report(a, op, weight)?);
    let m = &(&(&op.transpose() * &form.b) + &(&form.b * op)) + &form.b.scale(weight);
    rep.push(check_vanishes("RB-FORM", &[n, n], |x| vec![m[(x[0], x[1])].clone()]));
    match adjoint_operator(op, form) {
        Ok(hat) => {
            let s = &(op + &hat) + &Matrix::identity(n).scale(weight);
            rep.push(check_vanishes("RB-ADJ", &[n, n], |x| vec![s[(x[0], x[1])].clone()]));
        }
        Err(_) => rep.push(kernel_axiom("RB-ADJ", &form.b)),
    }
    rep.kind = "rota-baxter on frobenius".into();
    Ok(rep)
}

/// `𝔅_𝓘(a₁,a₂) = ⟨𝓘⁻¹(a₁), a₂⟩` and `R = λ r♮ 𝓘⁻¹`.
pub fn rb_from_factorizable(fact: &FactorizableData, weight: &Q) -> Result<RotaBaxterFrobenius> {
    if weight.is_zero() {
        return Err(Error::ZeroWeight);
    }
    let form = BilinearForm { b: fact.i_inv.transpose() };
    let operator = (&fact.natural() * &fact.i_inv).scale(weight);
    let report = rb_frobenius_report(&fact.algebra, &form, &operator, weight)?;
    Ok(RotaBaxterFrobenius { form, operator, report })
}

/// `r` with `r♯ = (1/λ)(R + λ·id)𝓘_𝔅`, where `⟨𝓘_𝔅⁻¹(a₁), a₂⟩ = 𝔅(a₁, a₂)`.
pub fn factorizable_from_rb(a: &AveragingAlgebra, form: &BilinearForm, op: &Matrix, weight: &Q) -> Result<TwoTensor> {
    if weight.is_zero() {
        return Err(Error::ZeroWeight);
    }
    require(rb_frobenius_report(a, form, op, weight)?)?;
    factorizable_from_rb_unchecked(form, op, weight)
}

pub fn factorizable_from_rb_unchecked(form: &BilinearForm, op: &Matrix, weight: &Q) -> Result<TwoTensor> {
    if weight.is_zero() {
        return Err(Error::ZeroWeight);
    }
    let n = form.dim();
    if op.rows() != n || op.cols() != n {
        return Err(Error::dim(format!("operator must be {n}x{n}")));
    }
    let i_b = form.b.transpose().inverse().map_err(|_| Error::DegenerateForm)?;
    let shifted = op + &Matrix::identity(n).scale(weight);
    let sharp = (&shifted * &i_b).scale(&(Q::one() / weight));
    TwoTensor::new(sharp.transpose())
}

/// `(A, ·_R, Δ_𝓘)` with the isomorphism `(1/λ)𝓘` from `(A*, ·_r, Δ_{A*})`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TwistedBialgebra {
    /// `a·_R b = R(a)b + aR(b) + λab`.
    pub product: Tensor3,
    /// `Δ_𝓘`, dual to `(ξ, η) ↦ (1/λ)𝓘⁻¹(𝓘(ξ)𝓘(η))`.
    pub comul: Tensor3,
    pub iso: Matrix,
    /// TW-PROD, TW-COPROD, TW-OP-1 `fβ* = αf`, TW-OP-2 `fα* = βf`.
    pub report: CheckReport,
}

pub fn twisted_bialgebra(fact: &FactorizableData, weight: &Q) -> Result<TwistedBialgebra> {
    if weight.is_zero() {
        return Err(Error::ZeroWeight);
    }
    let a = &fact.algebra;
    let n = a.dim();
    let mul = a.mul();
    let inv_w = Q::one() / weight;
    let op = (&fact.natural() * &fact.i_inv).scale(weight);
    let product = Tensor3::from_products(n, |i, j| {
        let x = scalar::add_vec(&mul.product(&op.column(i), &unit(n, j)), &mul.product(&unit(n, i), &op.column(j)));
        scalar::add_vec(&x, &scalar::scale_vec(weight, mul.basis_product(i, j)))
    });
    let dual_prod = Tensor3::from_products(n, |j, k| {
        let p = mul.product(&fact.i_map.column(j), &fact.i_map.column(k));
        scalar::scale_vec(&inv_w, &fact.i_inv.apply(&p))
    });
    let comul = dual_coproduct(&dual_prod);
    let iso = fact.i_map.scale(&inv_w);

    let r_prod = r_product(&a.alg, &fact.r)?;
    let dual_comul = dual_coproduct(mul);
    let mut report = CheckReport::new("twisted bialgebra");
    report.push(check_all("TW-PROD", &[n, n], |x| {
        let lhs = iso.apply(r_prod.basis_product(x[0], x[1]));
        (lhs, product.product(&iso.column(x[0]), &iso.column(x[1])))
    }));
    report.push(check_all("TW-COPROD", &[n], |x| {
        let lhs = &(&iso * &dual_comul.slice(x[0])) * &iso.transpose();
        (lhs.entries().to_vec(), comul.coproduct(&iso.column(x[0])).entries().to_vec())
    }));
    let (l1, r1) = (&iso * &fact.beta.transpose(), &a.alpha * &iso);
    report.push(check_all("TW-OP-1", &[n], |x| (l1.column(x[0]), r1.column(x[0]))));
    let (l2, r2) = (&iso * &a.alpha.transpose(), &fact.beta * &iso);
    report.push(check_all("TW-OP-2", &[n], |x| (l2.column(x[0]), r2.column(x[0]))));
    Ok(TwistedBialgebra { product, comul, iso, report })
}
