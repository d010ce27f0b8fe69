//! Coalgebras, (averaging) ASI bialgebras, matched pairs, Frobenius forms,
//! double constructions, perm bialgebra induction and Manin triples of perm
//! algebras.
//!
//! The dual space always carries the coordinate dual basis, and `A ⊕ A*` lists
//! the `A` block first. The dual algebra multiplication is
//! `⟨ξ·η, a⟩ = ⟨ξ⊗η, Δ(a)⟩`.

use std::fmt;
use std::str::FromStr;

use num_traits::{One, Zero};

use crate::actions::{averaging_action_axioms, AveragingBimodule};
use crate::error::{require, Error, Result};
use crate::linalg::Matrix;
use crate::report::{check_all, check_vanishes, kernel_axiom, AxiomResult, CheckReport};
use crate::scalar::{self, unit, Q};
use crate::structures::{self, assoc_axiom, avg_axioms, comm_axiom, perm_axioms, Algebra, AveragingAlgebra, PermAlgebra};
use crate::tensor::{Tensor3, TwoTensor};
use crate::ybe::coboundary_comultiplication;

/// `Δ(e_i) = Σ d[i][j][k] e_j⊗e_k`.
pub type ComultTable = Tensor3;

/// The quadruple `(A, Δ, α, β)` together with the product of `A`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AsiBialgebraData {
    pub mul: Tensor3,
    pub comul: ComultTable,
    pub alpha: Matrix,
    pub beta: Matrix,
}

impl AsiBialgebraData {
    pub fn new(mul: Tensor3, comul: ComultTable, alpha: Matrix, beta: Matrix) -> Result<Self> {
        let b = AsiBialgebraData { mul, comul, alpha, beta };
        b.validate()?;
        Ok(b)
    }

    pub fn dim(&self) -> usize {
        self.mul.dim()
    }

    pub fn averaging_algebra(&self) -> AveragingAlgebra {
        AveragingAlgebra { alg: Algebra { mul: self.mul.clone() }, alpha: self.alpha.clone() }
    }

    fn validate(&self) -> Result<()> {
        let n = self.dim();
        if n == 0 {
            return Err(Error::dim("dimension must be at least 1"));
        }
        crate::check_dim(n)?;
        if self.comul.dim() != n {
            return Err(Error::dim("comultiplication dimension differs from the product"));
        }
        for (m, what) in [(&self.alpha, "alpha"), (&self.beta, "beta")] {
            if m.rows() != n || m.cols() != n {
                return Err(Error::dim(format!("{what} must be {n}x{n}")));
            }
        }
        Ok(())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BilinearForm {
    pub b: Matrix,
}

impl BilinearForm {
    pub fn new(b: Matrix) -> Result<Self> {
        if !b.is_square() {
            return Err(Error::Shape("bilinear form must be square".into()));
        }
        Ok(BilinearForm { b })
    }

    pub fn dim(&self) -> usize {
        self.b.rows()
    }

    pub fn value(&self, x: &[Q], y: &[Q]) -> Q {
        scalar::dot(x, &self.b.apply(y))
    }

    /// Matrix of `φ: A → A*`, `φ(a)(b) = 𝔅(a, b)`.
    pub fn phi(&self) -> Matrix {
        self.b.transpose()
    }

    pub fn is_nondegenerate(&self) -> bool {
        self.b.rank() == self.dim()
    }

    /// `𝔅_d((a₁,ξ₁),(a₂,ξ₂)) = ⟨ξ₂,a₁⟩ + ⟨ξ₁,a₂⟩` on `A ⊕ A*`.
    pub fn symmetric_pairing(n: usize) -> Self {
        BilinearForm {
            b: Matrix::from_fn(2 * n, 2 * n, |i, j| {
                if i + n == j || j + n == i {
                    Q::one()
                } else {
                    Q::zero()
                }
            }),
        }
    }

    /// `𝔅̃_d((a₁,ξ₁),(a₂,ξ₂)) = ⟨ξ₂,a₁⟩ − ⟨ξ₁,a₂⟩` on `P ⊕ P*`.
    pub fn antisymmetric_pairing(n: usize) -> Self {
        BilinearForm {
            b: Matrix::from_fn(2 * n, 2 * n, |i, j| {
                if i + n == j {
                    Q::one()
                } else if j + n == i {
                    -Q::one()
                } else {
                    Q::zero()
                }
            }),
        }
    }
}

/// Two averaging algebras acting on each other. `l_a[i]`, `r_a[i]` are the
/// actions of `a_i` on `B`; `l_b[j]`, `r_b[j]` those of `b_j` on `A`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MatchedPairData {
    pub alg_a: AveragingAlgebra,
    pub alg_b: AveragingAlgebra,
    pub l_a: Vec<Matrix>,
    pub r_a: Vec<Matrix>,
    pub l_b: Vec<Matrix>,
    pub r_b: Vec<Matrix>,
    /// `B` is the coordinate dual of `A`, so the bowtie carries `𝔅_d`.
    pub dual: bool,
}

/// A perm algebra with a comultiplication `Δ̄`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PermBialgebraData {
    pub mul: Tensor3,
    pub comul: ComultTable,
}

/// An averaging algebra on `A ⊕ A*` with a form, `split = dim A`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DoubleData {
    pub algebra: AveragingAlgebra,
    pub form: BilinearForm,
    pub split: usize,
}

/// A perm algebra on `P ⊕ P*` with a form, `split = dim P`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PermManinData {
    pub algebra: PermAlgebra,
    pub form: BilinearForm,
    pub split: usize,
}

/// Perm matched pair `(P, P', ℓ, 𝔯, ℓ', 𝔯')`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PermMatchedPair {
    pub perm_a: PermAlgebra,
    pub perm_b: PermAlgebra,
    pub l_a: Vec<Matrix>,
    pub r_a: Vec<Matrix>,
    pub l_b: Vec<Matrix>,
    pub r_b: Vec<Matrix>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BialgebraKind {
    Coassoc,
    Cocomm,
    AveragingCoalgebra,
    Asi,
    AveragingAsi,
    FrobeniusForm,
    MatchedPairAveraging,
    DoubleConstruction,
    PermBialgebra,
    PermManinTriple,
}

impl BialgebraKind {
    pub const ALL: [BialgebraKind; 10] = [
        BialgebraKind::Coassoc,
        BialgebraKind::Cocomm,
        BialgebraKind::AveragingCoalgebra,
        BialgebraKind::Asi,
        BialgebraKind::AveragingAsi,
        BialgebraKind::FrobeniusForm,
        BialgebraKind::MatchedPairAveraging,
        BialgebraKind::DoubleConstruction,
        BialgebraKind::PermBialgebra,
        BialgebraKind::PermManinTriple,
    ];

    pub fn name(self) -> &'static str {
        match self {
            BialgebraKind::Coassoc => "coassoc",
            BialgebraKind::Cocomm => "cocomm",
            BialgebraKind::AveragingCoalgebra => "averaging-coalgebra",
            BialgebraKind::Asi => "asi",
            BialgebraKind::AveragingAsi => "averaging-asi",
            BialgebraKind::FrobeniusForm => "frobenius-form",
            BialgebraKind::MatchedPairAveraging => "matched-pair-averaging",
            BialgebraKind::DoubleConstruction => "double-construction",
            BialgebraKind::PermBialgebra => "perm-bialgebra",
            BialgebraKind::PermManinTriple => "perm-manin-triple",
        }
    }
}

impl fmt::Display for BialgebraKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for BialgebraKind {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Self::ALL
            .into_iter()
            .find(|k| k.name() == s)
            .ok_or_else(|| Error::UnknownKind(s.to_string()))
    }
}

#[derive(Clone, Copy, Debug)]
pub enum BialgebraData<'a> {
    Asi(&'a AsiBialgebraData),
    Frobenius(&'a Algebra, &'a BilinearForm),
    MatchedPair(&'a MatchedPairData),
    Double(&'a DoubleData),
    Perm(&'a PermBialgebraData),
    PermManin(&'a PermManinData),
}

pub fn verify_bialgebra(kind: BialgebraKind, data: BialgebraData<'_>) -> Result<CheckReport> {
    use BialgebraData as D;
    use BialgebraKind as K;
    let mut rep = CheckReport::new(kind.name());
    match (kind, data) {
        (K::Coassoc, D::Asi(b)) => {
            b.validate()?;
            rep.push(coassoc_axiom(&b.comul));
        }
        (K::Cocomm, D::Asi(b)) => {
            b.validate()?;
            rep.push(coassoc_axiom(&b.comul));
            rep.push(cocomm_axiom(&b.comul));
        }
        (K::AveragingCoalgebra, D::Asi(b)) => {
            b.validate()?;
            rep.push(coassoc_axiom(&b.comul));
            for r in avgco_axioms(&b.comul, &b.beta) {
                rep.push(r);
            }
        }
        (K::Asi, D::Asi(b)) => {
            b.validate()?;
            rep.push(assoc_axiom("ASSOC-1", &b.mul));
            rep.push(coassoc_axiom(&b.comul));
            for r in asi_axioms(&b.mul, &b.comul) {
                rep.push(r);
            }
        }
        (K::AveragingAsi, D::Asi(b)) => {
            b.validate()?;
            rep = averaging_asi_report(b);
        }
        (K::FrobeniusForm, D::Frobenius(a, f)) => {
            if f.dim() != a.dim() {
                return Err(Error::dim("form and algebra dimensions differ"));
            }
            for r in form_axioms(&a.mul, f) {
                rep.push(r);
            }
        }
        (K::MatchedPairAveraging, D::MatchedPair(mp)) => {
            validate_matched_pair(mp)?;
            rep = matched_pair_report(mp);
        }
        (K::DoubleConstruction, D::Double(d)) => {
            rep = double_report(d)?;
        }
        (K::PermBialgebra, D::Perm(p)) => {
            if p.mul.dim() != p.comul.dim() {
                return Err(Error::dim("perm product and coproduct dimensions differ"));
            }
            rep = perm_bialgebra_report(p);
        }
        (K::PermManinTriple, D::PermManin(m)) => {
            rep = perm_manin_report(m)?;
        }
        _ => return Err(Error::Usage(format!("kind `{kind}` does not accept this data"))),
    }
    Ok(rep)
}

fn flat(m: &Matrix) -> Vec<Q> {
    m.entries().to_vec()
}

/// `(Δ⊗id)(t)` for a 2-tensor `t`.
fn delta_left(comul: &Tensor3, t: &Matrix) -> Tensor3 {
    let n = comul.dim();
    let mut out = Tensor3::zeros(n);
    for j in 0..n {
        for k in 0..n {
            let c = &t[(j, k)];
            if c.is_zero() {
                continue;
            }
            for a in 0..n {
                for b in 0..n {
                    let d = comul.get(j, a, b);
                    if !d.is_zero() {
                        out.add_to(a, b, k, &(c * d));
                    }
                }
            }
        }
    }
    out
}

/// `(id⊗Δ)(t)` for a 2-tensor `t`.
fn delta_right(comul: &Tensor3, t: &Matrix) -> Tensor3 {
    let n = comul.dim();
    let mut out = Tensor3::zeros(n);
    for j in 0..n {
        for k in 0..n {
            let c = &t[(j, k)];
            if c.is_zero() {
                continue;
            }
            for a in 0..n {
                for b in 0..n {
                    let d = comul.get(k, a, b);
                    if !d.is_zero() {
                        out.add_to(j, a, b, &(c * d));
                    }
                }
            }
        }
    }
    out
}

/// `(τ⊗id)` on `A⊗A⊗A`.
fn flip12(t: &Tensor3) -> Tensor3 {
    Tensor3::from_fn(t.dim(), |i, j, k| t.get(j, i, k).clone())
}

pub(crate) fn coassoc_axiom(comul: &Tensor3) -> AxiomResult {
    let n = comul.dim();
    check_all("COASSOC-1", &[n], |t| {
        let d = comul.slice(t[0]);
        (delta_left(comul, &d).entries().to_vec(), delta_right(comul, &d).entries().to_vec())
    })
}

fn cocomm_axiom(comul: &Tensor3) -> AxiomResult {
    let n = comul.dim();
    check_all("COCOMM-1", &[n], |t| {
        let d = comul.slice(t[0]);
        (flat(&d), flat(&d.transpose()))
    })
}

/// AVGCO-1a `(β⊗β)Δ = (β⊗id)Δβ`, AVGCO-1b `(β⊗β)Δ = (id⊗β)Δβ`.
fn avgco_axioms(comul: &Tensor3, beta: &Matrix) -> [AxiomResult; 2] {
    let n = comul.dim();
    let bt = beta.transpose();
    let lhs = |i: usize| flat(&(&(beta * &comul.slice(i)) * &bt));
    let a = check_all("AVGCO-1a", &[n], |t| {
        let db = comul.coproduct(&beta.column(t[0]));
        (lhs(t[0]), flat(&(beta * &db)))
    });
    let b = check_all("AVGCO-1b", &[n], |t| {
        let db = comul.coproduct(&beta.column(t[0]));
        (lhs(t[0]), flat(&(&db * &bt)))
    });
    [a, b]
}

/// ASI-1 `Δ(a₁a₂) = (𝔯(a₂)⊗id)Δ(a₁) + (id⊗ℓ(a₁))Δ(a₂)` and ASI-2
/// `(ℓ(a₁)⊗id − id⊗𝔯(a₁))Δ(a₂) = τ((id⊗𝔯(a₂) − ℓ(a₂)⊗id)Δ(a₁))`.
fn asi_axioms(mul: &Tensor3, comul: &Tensor3) -> [AxiomResult; 2] {
    let n = mul.dim();
    let l: Vec<Matrix> = (0..n).map(|i| mul.left_basis(i)).collect();
    let r: Vec<Matrix> = (0..n).map(|i| mul.right_basis(i)).collect();
    let d: Vec<Matrix> = (0..n).map(|i| comul.slice(i)).collect();
    let one = check_all("ASI-1", &[n, n], |t| {
        let (i, j) = (t[0], t[1]);
        let lhs = comul.coproduct(mul.basis_product(i, j));
        let rhs = &(&r[j] * &d[i]) + &(&d[j] * &l[i].transpose());
        (flat(&lhs), flat(&rhs))
    });
    let two = check_all("ASI-2", &[n, n], |t| {
        let (i, j) = (t[0], t[1]);
        let lhs = &(&l[i] * &d[j]) - &(&d[j] * &r[i].transpose());
        let inner = &(&d[i] * &r[j].transpose()) - &(&l[j] * &d[i]);
        (flat(&lhs), flat(&inner.transpose()))
    });
    [one, two]
}

/// Full averaging ASI suite: the averaging algebra, the averaging coalgebra,
/// the ASI compatibility, the regular bimodule `(A, ℓ, 𝔯, β)` over `(A, α)`
/// and the Δ-level identities `(β⊗α)Δ = (β⊗id)Δα = (id⊗α)Δα`,
/// `(α⊗β)Δ = (id⊗β)Δα = (α⊗id)Δα`.
fn averaging_asi_report(b: &AsiBialgebraData) -> CheckReport {
    let n = b.dim();
    let a = b.averaging_algebra();
    let mut rep = structures::verify_averaging(&a);
    rep.kind = "averaging-asi".into();
    rep.push(coassoc_axiom(&b.comul));
    for r in avgco_axioms(&b.comul, &b.beta) {
        rep.push(r);
    }
    for r in asi_axioms(&b.mul, &b.comul) {
        rep.push(r);
    }
    rep.extend(averaging_action_axioms(&AveragingBimodule::regular(&a, b.beta.clone())));
    let (al, be) = (&b.alpha, &b.beta);
    let (alt, bet) = (al.transpose(), be.transpose());
    let d = |i: usize| b.comul.slice(i);
    let da = |i: usize| b.comul.coproduct(&al.column(i));
    rep.push(check_all("AASI-4b.1", &[n], |t| {
        (flat(&(&(be * &d(t[0])) * &alt)), flat(&(be * &da(t[0]))))
    }));
    rep.push(check_all("AASI-4b.2", &[n], |t| {
        let x = da(t[0]);
        (flat(&(be * &x)), flat(&(&x * &alt)))
    }));
    rep.push(check_all("AASI-4b.3", &[n], |t| {
        (flat(&(&(al * &d(t[0])) * &bet)), flat(&(&da(t[0]) * &bet)))
    }));
    rep.push(check_all("AASI-4b.4", &[n], |t| {
        let x = da(t[0]);
        (flat(&(&x * &bet)), flat(&(al * &x)))
    }));
    rep
}

/// Averaging ASI suite on a quadruple.
pub fn verify_averaging_asi(b: &AsiBialgebraData) -> Result<CheckReport> {
    verify_bialgebra(BialgebraKind::AveragingAsi, BialgebraData::Asi(b))
}

/// FORM-ND, FORM-INV `𝔅(a₁a₂, a₃) = 𝔅(a₁, a₂a₃)`, FORM-SYM.
fn form_axioms(mul: &Tensor3, f: &BilinearForm) -> [AxiomResult; 3] {
    let n = mul.dim();
    let nd = kernel_axiom("FORM-ND", &f.b);
    let inv = check_all("FORM-INV", &[n, n, n], |t| {
        let lhs = f.value(mul.basis_product(t[0], t[1]), &unit(n, t[2]));
        let rhs = f.value(&unit(n, t[0]), mul.basis_product(t[1], t[2]));
        (vec![lhs], vec![rhs])
    });
    let sym = check_all("FORM-SYM", &[n, n], |t| {
        (vec![f.b[(t[0], t[1])].clone()], vec![f.b[(t[1], t[0])].clone()])
    });
    [nd, inv, sym]
}

/// `α̂` with `𝔅(α(a₁), a₂) = 𝔅(a₁, α̂(a₂))`, i.e. `α̂ = B⁻¹ αᵀ B`.
pub fn adjoint_operator(alpha: &Matrix, form: &BilinearForm) -> Result<Matrix> {
    if alpha.rows() != form.dim() || alpha.cols() != form.dim() {
        return Err(Error::dim("operator and form dimensions differ"));
    }
    let inv = form.b.inverse().map_err(|_| Error::DegenerateForm)?;
    Ok(&(&inv * &alpha.transpose()) * &form.b)
}

/// Intertwining identities of `φ` on a symmetric averaging Frobenius algebra:
/// PHI-1 `φℓ(a) = 𝔯*(a)φ`, PHI-2 `φ𝔯(a) = ℓ*(a)φ`, PHI-3 `φα = α̂*φ`.
pub fn frobenius_intertwiner(a: &AveragingAlgebra, form: &BilinearForm) -> Result<CheckReport> {
    let n = a.dim();
    let hat = adjoint_operator(&a.alpha, form)?;
    let phi = form.phi();
    let m = a.mul();
    let mut rep = CheckReport::new("frobenius intertwiner");
    rep.push(check_all("PHI-1", &[n, n], |t| {
        let lhs = &phi * &m.left_basis(t[0]);
        let rhs = &m.right_basis(t[0]).transpose() * &phi;
        (lhs.column(t[1]), rhs.column(t[1]))
    }));
    rep.push(check_all("PHI-2", &[n, n], |t| {
        let lhs = &phi * &m.right_basis(t[0]);
        let rhs = &m.left_basis(t[0]).transpose() * &phi;
        (lhs.column(t[1]), rhs.column(t[1]))
    }));
    let lhs = &phi * &a.alpha;
    let rhs = &hat.transpose() * &phi;
    rep.push(check_all("PHI-3", &[n], |t| (lhs.column(t[0]), rhs.column(t[0]))));
    Ok(rep)
}

fn validate_matched_pair(mp: &MatchedPairData) -> Result<()> {
    mp.alg_a.validate()?;
    mp.alg_b.validate()?;
    let (na, nb) = (mp.alg_a.dim(), mp.alg_b.dim());
    crate::check_dim(na + nb)?;
    let ok = |acts: &[Matrix], count: usize, size: usize| {
        acts.len() == count && acts.iter().all(|m| m.rows() == size && m.cols() == size)
    };
    if !(ok(&mp.l_a, na, nb) && ok(&mp.r_a, na, nb) && ok(&mp.l_b, nb, na) && ok(&mp.r_b, nb, na)) {
        return Err(Error::dim("matched pair action shapes are inconsistent"));
    }
    if mp.dual && na != nb {
        return Err(Error::dim("a dual matched pair needs equal dimensions"));
    }
    Ok(())
}

/// Product table on `A ⊕ B`:
/// `(a₁,b₁)(a₂,b₂) = (a₁a₂ + ℓ_B(b₁)a₂ + 𝔯_B(b₂)a₁, b₁b₂ + ℓ_A(a₁)b₂ + 𝔯_A(a₂)b₁)`.
fn bowtie_table(
    mul_a: &Tensor3,
    mul_b: &Tensor3,
    l_a: &[Matrix],
    r_a: &[Matrix],
    l_b: &[Matrix],
    r_b: &[Matrix],
) -> Tensor3 {
    let (na, nb) = (mul_a.dim(), mul_b.dim());
    let mut t = Tensor3::zeros(na + nb);
    for i in 0..na {
        for j in 0..na {
            for (k, c) in mul_a.basis_product(i, j).iter().enumerate() {
                t.set(i, j, k, c.clone());
            }
        }
        for j in 0..nb {
            for k in 0..na {
                t.set(i, na + j, k, r_b[j][(k, i)].clone());
                t.set(na + j, i, k, l_b[j][(k, i)].clone());
            }
            for k in 0..nb {
                t.set(i, na + j, na + k, l_a[i][(k, j)].clone());
                t.set(na + j, i, na + k, r_a[i][(k, j)].clone());
            }
        }
    }
    for i in 0..nb {
        for j in 0..nb {
            for (k, c) in mul_b.basis_product(i, j).iter().enumerate() {
                t.set(na + i, na + j, na + k, c.clone());
            }
        }
    }
    t
}

fn bowtie_algebra(mp: &MatchedPairData) -> AveragingAlgebra {
    let mul = bowtie_table(mp.alg_a.mul(), mp.alg_b.mul(), &mp.l_a, &mp.r_a, &mp.l_b, &mp.r_b);
    AveragingAlgebra { alg: Algebra { mul }, alpha: mp.alg_a.alpha.direct_sum(&mp.alg_b.alpha) }
}

/// MP-1 (the bowtie product is associative) and MP-AVG (`α⊕β` is averaging
/// on it).
fn matched_pair_report(mp: &MatchedPairData) -> CheckReport {
    let bt = bowtie_algebra(mp);
    let mut rep = CheckReport::new("matched-pair-averaging");
    rep.push(assoc_axiom("MP-1", bt.mul()));
    let [a, b] = avg_axioms(["MP-AVG", "MP-AVG"], bt.mul(), &bt.alpha);
    rep.push(if a.pass { b } else { a });
    rep
}

/// Matched pair `((A, α), (A*, β*), 𝔯*_A, ℓ*_A, 𝔯*_{A*}, ℓ*_{A*})`.
pub fn matched_pair_from_bialgebra(b: &AsiBialgebraData) -> Result<MatchedPairData> {
    b.validate()?;
    require(averaging_asi_report(b))?;
    Ok(matched_pair_from_bialgebra_unchecked(b))
}

pub fn matched_pair_from_bialgebra_unchecked(b: &AsiBialgebraData) -> MatchedPairData {
    let n = b.dim();
    let dual_mul = dual_product(&b.comul);
    let l_a = (0..n).map(|i| b.mul.right_basis(i).transpose()).collect();
    let r_a = (0..n).map(|i| b.mul.left_basis(i).transpose()).collect();
    let l_b = (0..n).map(|i| dual_mul.right_basis(i).transpose()).collect();
    let r_b = (0..n).map(|i| dual_mul.left_basis(i).transpose()).collect();
    MatchedPairData {
        alg_a: b.averaging_algebra(),
        alg_b: AveragingAlgebra { alg: Algebra { mul: dual_mul }, alpha: b.beta.transpose() },
        l_a,
        r_a,
        l_b,
        r_b,
        dual: true,
    }
}

/// Product of `A*` dual to `Δ`: `⟨ξ_j·ξ_k, e_i⟩ = d[i][j][k]`.
pub fn dual_product(comul: &Tensor3) -> Tensor3 {
    Tensor3::from_fn(comul.dim(), |j, k, i| comul.get(i, j, k).clone())
}

/// Coproduct of `A*` dual to the product: `Δ̃(e_k*) = Σ c[i][j][k] e_i*⊗e_j*`.
pub fn dual_coproduct(mul: &Tensor3) -> Tensor3 {
    Tensor3::from_fn(mul.dim(), |k, i, j| mul.get(i, j, k).clone())
}

/// `(A⋈B, α⊕β)`, plus `𝔅_d` when `B = A*`.
pub fn bowtie(mp: &MatchedPairData) -> Result<(AveragingAlgebra, Option<BilinearForm>)> {
    validate_matched_pair(mp)?;
    require(matched_pair_report(mp))?;
    Ok(bowtie_unchecked(mp))
}

pub fn bowtie_unchecked(mp: &MatchedPairData) -> (AveragingAlgebra, Option<BilinearForm>) {
    let form = mp.dual.then(|| BilinearForm::symmetric_pairing(mp.alg_a.dim()));
    (bowtie_algebra(mp), form)
}

/// DBL-1: `A` and `A*` are subalgebras of the double and the form is the
/// canonical pairing `𝔅_d` for the split.
fn dbl_axiom(d: &DoubleData) -> AxiomResult {
    let n = d.algebra.dim();
    let s = d.split;
    let canon = BilinearForm::symmetric_pairing(s);
    let mul = d.algebra.mul();
    check_all("DBL-1", &[n, n], |t| {
        let (i, j) = (t[0], t[1]);
        let mut lhs = vec![d.form.b[(i, j)].clone()];
        let mut rhs = vec![canon.b[(i, j)].clone()];
        let same = (i < s) == (j < s);
        for (k, c) in mul.basis_product(i, j).iter().enumerate() {
            if same && (k < s) != (i < s) {
                lhs.push(c.clone());
                rhs.push(Q::zero());
            }
        }
        (lhs, rhs)
    })
}

fn double_report(d: &DoubleData) -> Result<CheckReport> {
    let n = d.algebra.dim();
    d.algebra.validate()?;
    if d.form.dim() != n || d.split * 2 != n {
        return Err(Error::dim("double needs a form of the same dimension and an even split"));
    }
    let mut rep = structures::verify_averaging(&d.algebra);
    rep.kind = "double-construction".into();
    let [nd, inv, sym] = form_axioms(d.algebra.mul(), &d.form);
    rep.push(nd);
    rep.push(sym);
    rep.push(inv);
    rep.push(dbl_axiom(d));
    Ok(rep)
}

/// `(A⋈A*, Δ, α⊕β*, β⊕α*)` with `Δ` the coboundary of `r = Σ e_i⊗e_i*`.
pub fn double_bialgebra(b: &AsiBialgebraData) -> Result<(AsiBialgebraData, TwoTensor)> {
    b.validate()?;
    require(averaging_asi_report(b))?;
    crate::check_dim(2 * b.dim())?;
    Ok(double_bialgebra_unchecked(b))
}

pub fn double_bialgebra_unchecked(b: &AsiBialgebraData) -> (AsiBialgebraData, TwoTensor) {
    let n = b.dim();
    let (alg, _) = bowtie_unchecked(&matched_pair_from_bialgebra_unchecked(b));
    let r = canonical_r(n);
    let comul = coboundary_comultiplication(&alg.alg, &r).expect("dimensions agree");
    let beta = b.beta.direct_sum(&b.alpha.transpose());
    (AsiBialgebraData { mul: alg.alg.mul, comul, alpha: alg.alpha, beta }, r)
}

/// `Σ e_i⊗e_i*` in `(A ⊕ A*)⊗(A ⊕ A*)`.
pub fn canonical_r(n: usize) -> TwoTensor {
    let mut m = Matrix::zeros(2 * n, 2 * n);
    for i in 0..n {
        m[(i, n + i)] = Q::one();
    }
    TwoTensor::new(m).expect("square")
}

/// `(A*, Δ*, −Δ̃, β*, α*)`. Applying it twice negates both the product and
/// the coproduct.
pub fn dualize_bialgebra(b: &AsiBialgebraData) -> Result<AsiBialgebraData> {
    b.validate()?;
    require(averaging_asi_report(b))?;
    Ok(dualize_bialgebra_unchecked(b))
}

pub fn dualize_bialgebra_unchecked(b: &AsiBialgebraData) -> AsiBialgebraData {
    AsiBialgebraData {
        mul: dual_product(&b.comul),
        comul: dual_coproduct(&b.mul).scale(&-Q::one()),
        alpha: b.beta.transpose(),
        beta: b.alpha.transpose(),
    }
}

/// Result of the perm induction on a commutative cocommutative averaging ASI
/// bialgebra.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum PermInduction {
    /// COMPA-1 and COMPA-2 hold; the report covers the gate and INDBI-1..3.
    Induced { bialgebra: PermBialgebraData, report: CheckReport },
    GateFailure(CheckReport),
}

/// COMPA-1 `β(a₁a₂) = α(a₁)a₂ − a₁α(a₂)`, COMPA-2 `Δα = (β⊗id)Δ − (id⊗β)Δ`
/// and INDBI-1..3.
pub fn compa_report(b: &AsiBialgebraData) -> Result<CheckReport> {
    b.validate()?;
    let n = b.dim();
    let (mul, al, be) = (&b.mul, &b.alpha, &b.beta);
    let bet = be.transpose();
    let d: Vec<Matrix> = (0..n).map(|i| b.comul.slice(i)).collect();
    let da: Vec<Matrix> = (0..n).map(|i| b.comul.coproduct(&al.column(i))).collect();
    let l: Vec<Matrix> = (0..n).map(|i| mul.left_basis(i)).collect();
    let la: Vec<Matrix> = (0..n).map(|i| mul.left(&al.column(i))).collect();
    let ab = al * be;
    let mut rep = CheckReport::new("perm induction gate");
    rep.push(check_all("COMPA-1", &[n, n], |t| {
        let lhs = be.apply(mul.basis_product(t[0], t[1]));
        let rhs = scalar::sub_vec(
            &mul.product(&al.column(t[0]), &unit(n, t[1])),
            &mul.product(&unit(n, t[0]), &al.column(t[1])),
        );
        (lhs, rhs)
    }));
    rep.push(check_all("COMPA-2", &[n], |t| {
        let i = t[0];
        (flat(&da[i]), flat(&(&(be * &d[i]) - &(&d[i] * &bet))))
    }));
    rep.push(check_vanishes("INDBI-1", &[n, n], |t| {
        let (i, j) = (t[0], t[1]);
        let a = &(be * &l[j]) * &da[i];
        let b2 = &(be * &la[j]) * &d[i];
        let c = &(&l[i] * &ab) * &d[j];
        flat(&(&(&a - &b2) + &c))
    }));
    rep.push(check_vanishes("INDBI-2", &[n, n], |t| {
        let (i, j) = (t[0], t[1]);
        let a = &d[i] * &(&l[j] * &ab).transpose();
        let c = &(&l[i] * &ab) * &d[j];
        flat(&(&a - &c))
    }));
    rep.push(check_vanishes("INDBI-3", &[n, n], |t| {
        let (i, j) = (t[0], t[1]);
        let t1 = &(be * &l[j]) * &da[i];
        let t2 = &(&la[j] * be) * &d[i];
        let t3 = &(&l[j] * &ab) * &d[i];
        let t4 = &(&la[j] * &d[i]) * &bet;
        let t5 = &(&(&l[j] * al) * &d[i]) * &bet;
        flat(&(&(&(&(&t1 - &t2) + &t3) + &t4) - &t5))
    }));
    Ok(rep)
}

/// Perm bialgebra `(A, α(x)y, (β⊗id)Δ)` when the compatibility gate holds.
pub fn induce_perm_bialgebra(b: &AsiBialgebraData) -> Result<PermInduction> {
    b.validate()?;
    let mut pre = averaging_asi_report(b);
    pre.push(comm_axiom("COMM-1", &b.mul));
    pre.push(cocomm_axiom(&b.comul));
    require(pre)?;
    Ok(induce_perm_bialgebra_unchecked(b))
}

pub fn induce_perm_bialgebra_unchecked(b: &AsiBialgebraData) -> PermInduction {
    let report = compa_report(b).expect("validated shapes");
    if !(report.passes("COMPA-1") && report.passes("COMPA-2")) {
        return PermInduction::GateFailure(report);
    }
    let mul = structures::induce_perm_unchecked(&b.averaging_algebra()).mul;
    let n = b.dim();
    let slices: Vec<Matrix> = (0..n).map(|i| &b.beta * &b.comul.slice(i)).collect();
    PermInduction::Induced { bialgebra: PermBialgebraData { mul, comul: Tensor3::from_slices(&slices) }, report }
}

/// Perm bialgebra suite: PERM-1/2, the perm coalgebra identities
/// PCOALG-1 `(Δ̄⊗id)Δ̄ = (id⊗Δ̄)Δ̄`, PCOALG-2 `(Δ̄⊗id)Δ̄ = (τ⊗id)(Δ̄⊗id)Δ̄`,
/// and PBI-1..3.
fn perm_bialgebra_report(p: &PermBialgebraData) -> CheckReport {
    let n = p.mul.dim();
    let mut rep = CheckReport::new("perm-bialgebra");
    for r in perm_axioms(&p.mul) {
        rep.push(r);
    }
    let c = &p.comul;
    rep.push(check_all("PCOALG-1", &[n], |t| {
        let d = c.slice(t[0]);
        (delta_left(c, &d).entries().to_vec(), delta_right(c, &d).entries().to_vec())
    }));
    rep.push(check_all("PCOALG-2", &[n], |t| {
        let left = delta_left(c, &c.slice(t[0]));
        (left.entries().to_vec(), flip12(&left).entries().to_vec())
    }));
    let l: Vec<Matrix> = (0..n).map(|i| p.mul.left_basis(i)).collect();
    let r: Vec<Matrix> = (0..n).map(|i| p.mul.right_basis(i)).collect();
    let d: Vec<Matrix> = (0..n).map(|i| c.slice(i)).collect();
    rep.push(check_all("PBI-1", &[n, n], |t| {
        let (i, j) = (t[0], t[1]);
        let lhs = c.coproduct(p.mul.basis_product(i, j));
        let rhs = &(&(&l[i] - &r[i]) * &d[j]) + &(&d[i] * &r[j].transpose());
        (flat(&lhs), flat(&rhs))
    }));
    rep.push(check_all("PBI-2", &[n, n], |t| {
        let (i, j) = (t[0], t[1]);
        (flat(&(&r[j] * &d[i]).transpose()), flat(&(&r[i] * &d[j])))
    }));
    rep.push(check_all("PBI-3", &[n, n], |t| {
        let (i, j) = (t[0], t[1]);
        let lhs = c.coproduct(p.mul.basis_product(i, j));
        let anti = &d[i] - &d[i].transpose();
        let rhs = &(&d[j] * &l[i].transpose()) + &(&(&l[j] - &r[j]) * &anti);
        (flat(&lhs), flat(&rhs))
    }));
    rep
}

/// Perm-bialgebra suite.
pub fn verify_perm_bialgebra(p: &PermBialgebraData) -> CheckReport {
    perm_bialgebra_report(p)
}

/// PERM-1/2 on the whole algebra, PFORM-INV
/// `𝔅̃(p₁p₂, p₃) = 𝔅̃(p₁, p₂p₃ − p₃p₂)`, MANIN-1 (both blocks are
/// subalgebras), MANIN-2 (`𝔅̃` is nondegenerate and antisymmetric, so the
/// blocks form a direct sum of dual spaces), MANIN-3 (both blocks isotropic).
fn perm_manin_report(m: &PermManinData) -> Result<CheckReport> {
    let n = m.algebra.dim();
    let s = m.split;
    if m.form.dim() != n || 2 * s != n {
        return Err(Error::dim("Manin triple needs a form of the same dimension and an even split"));
    }
    let mul = &m.algebra.mul;
    let f = &m.form;
    let mut rep = CheckReport::new("perm-manin-triple");
    for r in perm_axioms(mul) {
        rep.push(r);
    }
    rep.push(check_all("PFORM-INV", &[n, n, n], |t| {
        let lhs = f.value(mul.basis_product(t[0], t[1]), &unit(n, t[2]));
        let diff = scalar::sub_vec(mul.basis_product(t[1], t[2]), mul.basis_product(t[2], t[1]));
        (vec![lhs], vec![f.value(&unit(n, t[0]), &diff)])
    }));
    rep.push(check_vanishes("MANIN-1", &[n, n], |t| {
        let (i, j) = (t[0], t[1]);
        if (i < s) != (j < s) {
            return vec![];
        }
        mul.basis_product(i, j)
            .iter()
            .enumerate()
            .filter(|(k, _)| (*k < s) != (i < s))
            .map(|(_, c)| c.clone())
            .collect()
    }));
    let nd = f.is_nondegenerate();
    rep.push(check_all("MANIN-2", &[n, n], |t| {
        let (i, j) = (t[0], t[1]);
        let lhs = vec![f.b[(i, j)].clone(), Q::from_integer((nd as i64).into())];
        (lhs, vec![-f.b[(j, i)].clone(), Q::one()])
    }));
    rep.push(check_vanishes("MANIN-3", &[n, n], |t| {
        let (i, j) = (t[0], t[1]);
        if (i < s) == (j < s) {
            vec![f.b[(i, j)].clone()]
        } else {
            vec![]
        }
    }));
    Ok(rep)
}

fn perm_dual_actions(mul: &Tensor3) -> (Vec<Matrix>, Vec<Matrix>) {
    let n = mul.dim();
    let l: Vec<Matrix> = (0..n).map(|i| mul.left_basis(i).transpose()).collect();
    let r = (0..n).map(|i| &l[i] - &mul.right_basis(i).transpose()).collect();
    (l, r)
}

/// The perm matched pair `(P, P*, ℓ̃*, ℓ̃*−𝔯̃*, ℓ̃*_{P*}, ℓ̃*_{P*}−𝔯̃*_{P*})`
/// of a perm algebra and a comultiplication.
pub fn perm_matched_pair_from_bialgebra(pb: &PermBialgebraData) -> PermMatchedPair {
    let dual = dual_product(&pb.comul);
    let (l_a, r_a) = perm_dual_actions(&pb.mul);
    let (l_b, r_b) = perm_dual_actions(&dual);
    PermMatchedPair {
        perm_a: PermAlgebra { mul: pb.mul.clone() },
        perm_b: PermAlgebra { mul: dual },
        l_a,
        r_a,
        l_b,
        r_b,
    }
}

impl PermMatchedPair {
    pub fn bowtie(&self) -> PermAlgebra {
        PermAlgebra {
            mul: bowtie_table(&self.perm_a.mul, &self.perm_b.mul, &self.l_a, &self.r_a, &self.l_b, &self.r_b),
        }
    }

    /// PERM-1/2 of the bowtie product.
    pub fn verify(&self) -> CheckReport {
        let mut rep = structures::verify_perm(&self.bowtie().mul);
        rep.kind = "perm-matched-pair".into();
        rep
    }
}

/// Manin triple `(P⋈P*, 𝔅̃_d)` of a perm bialgebra.
pub fn perm_manin_triple(pb: &PermBialgebraData) -> Result<(PermAlgebra, BilinearForm, CheckReport)> {
    if pb.mul.dim() != pb.comul.dim() {
        return Err(Error::dim("perm product and coproduct dimensions differ"));
    }
    crate::check_dim(2 * pb.mul.dim())?;
    require(perm_bialgebra_report(pb))?;
    Ok(perm_manin_triple_unchecked(pb))
}

pub fn perm_manin_triple_unchecked(pb: &PermBialgebraData) -> (PermAlgebra, BilinearForm, CheckReport) {
    let n = pb.mul.dim();
    let algebra = perm_matched_pair_from_bialgebra(pb).bowtie();
    let form = BilinearForm::antisymmetric_pairing(n);
    let data = PermManinData { algebra, form, split: n };
    let report = perm_manin_report(&data).expect("shapes by construction");
    (data.algebra, data.form, report)
}

/// Induced perm matched pair of a matched pair of commutative averaging
/// algebras with single actions `μ_A = ℓ_A = 𝔯_A`, `μ_B = ℓ_B = 𝔯_B`:
/// `B` is acted on by `ℓ(a) = μ_A(α(a))`, `𝔯(a) = μ_A(a)β` and symmetrically.
pub fn induce_perm_matched_pair(mp: &MatchedPairData) -> Result<PermMatchedPair> {
    validate_matched_pair(mp)?;
    if mp.l_a != mp.r_a || mp.l_b != mp.r_b {
        return Err(Error::Usage("induced perm matched pair needs equal left and right actions".into()));
    }
    let mut rep = structures::verify_commutative(mp.alg_a.mul());
    rep.extend(structures::verify_commutative(mp.alg_b.mul()));
    rep.kind = "commutative matched pair".into();
    require(rep)?;
    Ok(induce_perm_matched_pair_unchecked(mp))
}

pub fn induce_perm_matched_pair_unchecked(mp: &MatchedPairData) -> PermMatchedPair {
    let (na, nb) = (mp.alg_a.dim(), mp.alg_b.dim());
    let (alpha, beta) = (&mp.alg_a.alpha, &mp.alg_b.alpha);
    PermMatchedPair {
        perm_a: structures::induce_perm_unchecked(&mp.alg_a),
        perm_b: structures::induce_perm_unchecked(&mp.alg_b),
        l_a: (0..na).map(|i| Matrix::combination(&alpha.column(i), &mp.l_a, nb, nb)).collect(),
        r_a: mp.l_a.iter().map(|m| m * beta).collect(),
        l_b: (0..nb).map(|i| Matrix::combination(&beta.column(i), &mp.l_b, na, na)).collect(),
        r_b: mp.l_b.iter().map(|m| m * alpha).collect(),
    }
}

/// The matched pair `(P, P', ℓ̃*, ℓ̃*−𝔯̃*, ℓ̃'*, ℓ̃'*−𝔯̃'*)` built from the
/// regular perm bimodules of two perm algebras on dual spaces.
pub fn dual_action_perm_matched_pair(pa: &PermAlgebra, pb: &PermAlgebra) -> PermMatchedPair {
    let (l_a, r_a) = perm_dual_actions(&pa.mul);
    let (l_b, r_b) = perm_dual_actions(&pb.mul);
    PermMatchedPair { perm_a: pa.clone(), perm_b: pb.clone(), l_a, r_a, l_b, r_b }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn bia2() -> AsiBialgebraData {
        AsiBialgebraData::new(
            Tensor3::from_entries(2, &[(0, 0, 0, 1), (0, 1, 1, 1), (1, 0, 1, 1)]),
            Tensor3::from_entries(2, &[(1, 1, 1, 1)]),
            Matrix::from_rows(&[&[1, 0], &[0, 0]]),
            Matrix::from_rows(&[&[0, 0], &[0, 1]]),
        )
        .unwrap()
    }

    #[test]
    fn bia2_passes_averaging_asi() {
        let rep = verify_averaging_asi(&bia2()).unwrap();
        assert!(rep.passed(), "{rep}");
    }

    #[test]
    fn zero_comultiplication_passes_asi() {
        let mut b = bia2();
        b.comul = Tensor3::zeros(2);
        let rep = verify_bialgebra(BialgebraKind::Asi, BialgebraData::Asi(&b)).unwrap();
        assert!(rep.passes("ASI-1") && rep.passes("ASI-2"));
    }

    #[test]
    fn adjoint_of_identity_and_self_adjoint() {
        let f = BilinearForm::new(Matrix::identity(2)).unwrap();
        assert_eq!(adjoint_operator(&Matrix::identity(2), &f).unwrap(), Matrix::identity(2));
        let s = Matrix::from_rows(&[&[1, 2], &[2, 5]]);
        assert_eq!(adjoint_operator(&s, &f).unwrap(), s);
        let deg = BilinearForm::new(Matrix::zeros(2, 2)).unwrap();
        assert!(matches!(adjoint_operator(&s, &deg), Err(Error::DegenerateForm)));
    }

    #[test]
    fn zero_bowtie_keeps_a_nondegenerate_pairing() {
        let z = AveragingAlgebra::new(Tensor3::zeros(2), Matrix::zeros(2, 2)).unwrap();
        let mp = MatchedPairData {
            alg_a: z.clone(),
            alg_b: z,
            l_a: vec![Matrix::zeros(2, 2); 2],
            r_a: vec![Matrix::zeros(2, 2); 2],
            l_b: vec![Matrix::zeros(2, 2); 2],
            r_b: vec![Matrix::zeros(2, 2); 2],
            dual: true,
        };
        let (alg, form) = bowtie(&mp).unwrap();
        assert!(alg.mul().is_zero());
        let form = form.unwrap();
        assert!(form.is_nondegenerate());
        assert_eq!(form.b, form.b.transpose());
    }

    #[test]
    fn zero_bialgebra_on_dim_one_doubles() {
        let b = AsiBialgebraData::new(Tensor3::zeros(1), Tensor3::zeros(1), Matrix::zeros(1, 1), Matrix::zeros(1, 1))
            .unwrap();
        let (d, r) = double_bialgebra(&b).unwrap();
        assert_eq!(r, TwoTensor::from_entries(2, &[(0, 1, 1)]));
        assert!(d.mul.is_zero() && d.comul.is_zero());
    }

    #[test]
    fn self_dual_zero_structure() {
        let b = AsiBialgebraData::new(Tensor3::zeros(2), Tensor3::zeros(2), Matrix::zeros(2, 2), Matrix::zeros(2, 2))
            .unwrap();
        assert_eq!(dualize_bialgebra(&b).unwrap(), b);
    }

    #[test]
    fn compa_gate_fails_on_bia2() {
        match induce_perm_bialgebra(&bia2()).unwrap() {
            PermInduction::GateFailure(rep) => {
                let w = rep.witness("COMPA-1").unwrap();
                assert_eq!(w.indices, vec![1, 0]);
                assert_eq!(w.lhs, vec![scalar::zero(), scalar::int(1)]);
                assert_eq!(w.rhs, vec![scalar::zero(), scalar::int(-1)]);
            }
            other => panic!("expected a gate failure, got {other:?}"),
        }
    }

    #[test]
    fn zero_bialgebra_induces_trivial_perm_bialgebra() {
        let b = AsiBialgebraData::new(Tensor3::zeros(2), Tensor3::zeros(2), Matrix::zeros(2, 2), Matrix::zeros(2, 2))
            .unwrap();
        match induce_perm_bialgebra(&b).unwrap() {
            PermInduction::Induced { bialgebra, .. } => {
                assert!(bialgebra.mul.is_zero() && bialgebra.comul.is_zero());
            }
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn dim_one_zero_perm_manin_triple() {
        let pb = PermBialgebraData { mul: Tensor3::zeros(1), comul: Tensor3::zeros(1) };
        let (alg, form, rep) = perm_manin_triple(&pb).unwrap();
        assert_eq!(alg.dim(), 2);
        assert!(alg.mul.is_zero());
        assert_eq!(form.b, Matrix::from_rows(&[&[0, 1], &[-1, 0]]));
        assert!(rep.passed(), "{rep}");
    }

    #[test]
    fn bialgebra_kind_names() {
        for k in BialgebraKind::ALL {
            assert_eq!(k.name().parse::<BialgebraKind>().unwrap(), k);
        }
    }
}
