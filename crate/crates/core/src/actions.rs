//! Bimodules over averaging and perm algebras, semidirect products, dual
//! bimodules and induced perm bimodules.
//!
//! Actions are stored as one `m×m` matrix per base basis vector: `lact[i]` is
//! the matrix of `ℓ(e_i)` and `ract[i]` that of `𝔯(e_i)`.

use std::fmt;
use std::str::FromStr;

use crate::error::{require, Error, Result};
use crate::linalg::Matrix;
use crate::report::{check_all, CheckReport};
use crate::scalar::{self, unit, Q};
use crate::structures::{self, Algebra, AveragingAlgebra, PermAlgebra};
use crate::tensor::Tensor3;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AveragingBimodule {
    pub base: AveragingAlgebra,
    pub lact: Vec<Matrix>,
    pub ract: Vec<Matrix>,
    pub beta: Matrix,
}

fn check_actions(n: usize, m: usize, acts: &[Matrix], what: &str) -> Result<()> {
    if acts.len() != n {
        return Err(Error::dim(format!("{what} has {} matrices for a base of dim {n}", acts.len())));
    }
    for (i, a) in acts.iter().enumerate() {
        if a.rows() != m || a.cols() != m {
            return Err(Error::dim(format!("{what}[{i}] is {}x{}, expected {m}x{m}", a.rows(), a.cols())));
        }
    }
    Ok(())
}

impl AveragingBimodule {
    pub fn new(base: AveragingAlgebra, lact: Vec<Matrix>, ract: Vec<Matrix>, beta: Matrix) -> Result<Self> {
        let b = AveragingBimodule { base, lact, ract, beta };
        b.validate()?;
        Ok(b)
    }

    /// `(A, ℓ_A, 𝔯_A, β)`.
    pub fn regular(base: &AveragingAlgebra, beta: Matrix) -> Self {
        let n = base.dim();
        AveragingBimodule {
            lact: (0..n).map(|i| base.mul().left_basis(i)).collect(),
            ract: (0..n).map(|i| base.mul().right_basis(i)).collect(),
            base: base.clone(),
            beta,
        }
    }

    pub fn mdim(&self) -> usize {
        self.beta.rows()
    }

    pub(crate) fn validate(&self) -> Result<()> {
        self.base.validate()?;
        let m = self.mdim();
        if !self.beta.is_square() {
            return Err(Error::dim("module operator must be square"));
        }
        crate::check_dim(m)?;
        check_actions(self.base.dim(), m, &self.lact, "lact")?;
        check_actions(self.base.dim(), m, &self.ract, "ract")
    }

    /// Matrix of `ℓ(x)`.
    pub fn left(&self, x: &[Q]) -> Matrix {
        Matrix::combination(x, &self.lact, self.mdim(), self.mdim())
    }

    /// Matrix of `𝔯(x)`.
    pub fn right(&self, x: &[Q]) -> Matrix {
        Matrix::combination(x, &self.ract, self.mdim(), self.mdim())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PermBimodule {
    pub base: PermAlgebra,
    pub lact: Vec<Matrix>,
    pub ract: Vec<Matrix>,
}

impl PermBimodule {
    pub fn new(base: PermAlgebra, lact: Vec<Matrix>, ract: Vec<Matrix>) -> Result<Self> {
        let b = PermBimodule { base, lact, ract };
        b.validate()?;
        Ok(b)
    }

    /// `(P, ℓ̃, 𝔯̃)` with `ℓ̃(p)q = p•q`, `𝔯̃(p)q = q•p`.
    pub fn regular(base: &PermAlgebra) -> Self {
        let n = base.dim();
        PermBimodule {
            lact: (0..n).map(|i| base.mul.left_basis(i)).collect(),
            ract: (0..n).map(|i| base.mul.right_basis(i)).collect(),
            base: base.clone(),
        }
    }

    pub fn mdim(&self) -> usize {
        self.lact.first().map_or(0, Matrix::rows)
    }

    fn validate(&self) -> Result<()> {
        let n = self.base.dim();
        let m = self.mdim();
        crate::check_dim(m)?;
        check_actions(n, m, &self.lact, "lact")?;
        check_actions(n, m, &self.ract, "ract")
    }

    pub fn left(&self, x: &[Q]) -> Matrix {
        Matrix::combination(x, &self.lact, self.mdim(), self.mdim())
    }

    pub fn right(&self, x: &[Q]) -> Matrix {
        Matrix::combination(x, &self.ract, self.mdim(), self.mdim())
    }
}

/// An O-operator candidate `P: M → A`, stored as an `n×m` matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OOperatorData {
    pub bimod: AveragingBimodule,
    pub p: Matrix,
}

impl OOperatorData {
    pub fn new(bimod: AveragingBimodule, p: Matrix) -> Result<Self> {
        bimod.validate()?;
        if p.rows() != bimod.base.dim() || p.cols() != bimod.mdim() {
            return Err(Error::dim(format!(
                "operator is {}x{}, expected {}x{}",
                p.rows(),
                p.cols(),
                bimod.base.dim(),
                bimod.mdim()
            )));
        }
        Ok(OOperatorData { bimod, p })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ActionKind {
    AssocBimodule,
    AveragingBimodule,
    PermBimodule,
}

impl ActionKind {
    pub const ALL: [ActionKind; 3] =
        [ActionKind::AssocBimodule, ActionKind::AveragingBimodule, ActionKind::PermBimodule];

    pub fn name(self) -> &'static str {
        match self {
            ActionKind::AssocBimodule => "assoc-bimodule",
            ActionKind::AveragingBimodule => "averaging-bimodule",
            ActionKind::PermBimodule => "perm-bimodule",
        }
    }
}

impl fmt::Display for ActionKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for ActionKind {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Self::ALL
            .into_iter()
            .find(|k| k.name() == s)
            .ok_or_else(|| Error::UnknownKind(s.to_string()))
    }
}

#[derive(Clone, Copy, Debug)]
pub enum ActionData<'a> {
    Averaging(&'a AveragingBimodule),
    Perm(&'a PermBimodule),
}

pub fn verify_action(kind: ActionKind, data: ActionData<'_>) -> Result<CheckReport> {
    match (kind, data) {
        (ActionKind::AssocBimodule, ActionData::Averaging(m)) => {
            m.validate()?;
            let mut rep = CheckReport::new(kind.name());
            bimodule_axioms(m, &mut rep);
            Ok(rep)
        }
        (ActionKind::AveragingBimodule, ActionData::Averaging(m)) => {
            m.validate()?;
            let mut rep = CheckReport::new(kind.name());
            bimodule_axioms(m, &mut rep);
            rep.extend(averaging_action_axioms(m));
            Ok(rep)
        }
        (ActionKind::PermBimodule, ActionData::Perm(m)) => {
            m.validate()?;
            Ok(perm_bimodule_report(m))
        }
        _ => Err(Error::Usage(format!("kind `{kind}` does not accept this data"))),
    }
}

/// Full averaging-bimodule suite.
pub fn verify_averaging_bimodule(m: &AveragingBimodule) -> Result<CheckReport> {
    verify_action(ActionKind::AveragingBimodule, ActionData::Averaging(m))
}

fn bimodule_axioms(m: &AveragingBimodule, rep: &mut CheckReport) {
    let n = m.base.dim();
    let d = m.mdim();
    let mul = m.base.mul();
    rep.push(check_all("BIM-1", &[n, n, d], |t| {
        let lhs = m.left(mul.basis_product(t[0], t[1])).column(t[2]);
        let rhs = m.lact[t[0]].apply(&m.lact[t[1]].column(t[2]));
        (lhs, rhs)
    }));
    rep.push(check_all("BIM-2", &[n, n, d], |t| {
        let lhs = m.lact[t[0]].apply(&m.ract[t[1]].column(t[2]));
        let rhs = m.ract[t[1]].apply(&m.lact[t[0]].column(t[2]));
        (lhs, rhs)
    }));
    rep.push(check_all("BIM-3", &[n, n, d], |t| {
        let lhs = m.right(mul.basis_product(t[0], t[1])).column(t[2]);
        let rhs = m.ract[t[1]].apply(&m.ract[t[0]].column(t[2]));
        (lhs, rhs)
    }));
}

/// ADM-1a/1b and ADM-2a/2b:
/// `ℓ(α(a))β(m) = β(ℓ(α(a))m) = β(ℓ(a)β(m))` and the same for `𝔯`.
pub(crate) fn averaging_action_axioms(m: &AveragingBimodule) -> CheckReport {
    let n = m.base.dim();
    let d = m.mdim();
    let b = &m.beta;
    let mut rep = CheckReport::new("averaging action");
    let sides: [(&str, &str, &dyn Fn(&[Q]) -> Matrix); 2] =
        [("ADM-1a", "ADM-1b", &|x| m.left(x)), ("ADM-2a", "ADM-2b", &|x| m.right(x))];
    for (ida, idb, act) in sides {
        let on_alpha: Vec<Matrix> = (0..n).map(|i| act(&m.base.alpha.column(i))).collect();
        let plain: Vec<Matrix> = (0..n).map(|i| act(&unit(n, i))).collect();
        rep.push(check_all(ida, &[n, d], |t| {
            let lhs = on_alpha[t[0]].apply(&b.column(t[1]));
            let rhs = b.apply(&on_alpha[t[0]].column(t[1]));
            (lhs, rhs)
        }));
        rep.push(check_all(idb, &[n, d], |t| {
            let lhs = on_alpha[t[0]].apply(&b.column(t[1]));
            let rhs = b.apply(&plain[t[0]].apply(&b.column(t[1])));
            (lhs, rhs)
        }));
    }
    rep
}

/// PBIM-1 `ℓ(p₁•p₂) = ℓ(p₁)ℓ(p₂)`, PBIM-2 `ℓ(p₁)ℓ(p₂) = ℓ(p₂)ℓ(p₁)`,
/// PBIM-3 `𝔯(p₁•p₂) = 𝔯(p₂)𝔯(p₁)`, PBIM-4a `𝔯(p₂)𝔯(p₁) = 𝔯(p₂)ℓ(p₁)`,
/// PBIM-4b `𝔯(p₂)ℓ(p₁) = ℓ(p₁)𝔯(p₂)`.
fn perm_bimodule_report(m: &PermBimodule) -> CheckReport {
    let n = m.base.dim();
    let d = m.mdim();
    let mul = &m.base.mul;
    let (l, r) = (&m.lact, &m.ract);
    let mut rep = CheckReport::new("perm-bimodule");
    rep.push(check_all("PBIM-1", &[n, n, d], |t| {
        let lhs = m.left(mul.basis_product(t[0], t[1])).column(t[2]);
        (lhs, l[t[0]].apply(&l[t[1]].column(t[2])))
    }));
    rep.push(check_all("PBIM-2", &[n, n, d], |t| {
        (l[t[0]].apply(&l[t[1]].column(t[2])), l[t[1]].apply(&l[t[0]].column(t[2])))
    }));
    rep.push(check_all("PBIM-3", &[n, n, d], |t| {
        let lhs = m.right(mul.basis_product(t[0], t[1])).column(t[2]);
        (lhs, r[t[1]].apply(&r[t[0]].column(t[2])))
    }));
    rep.push(check_all("PBIM-4a", &[n, n, d], |t| {
        (r[t[1]].apply(&r[t[0]].column(t[2])), r[t[1]].apply(&l[t[0]].column(t[2])))
    }));
    rep.push(check_all("PBIM-4b", &[n, n, d], |t| {
        (r[t[1]].apply(&l[t[0]].column(t[2])), l[t[0]].apply(&r[t[1]].column(t[2])))
    }));
    rep
}

/// Product table of `A ⊕ M` with `(a₁,m₁)(a₂,m₂) = (a₁a₂, ℓ(a₁)m₂ + 𝔯(a₂)m₁)`.
fn semidirect_table(mul: &Tensor3, lact: &[Matrix], ract: &[Matrix], m: usize) -> Tensor3 {
    let n = mul.dim();
    let mut t = Tensor3::zeros(n + m);
    for i in 0..n {
        for j in 0..n {
            for (k, c) in mul.basis_product(i, j).iter().enumerate() {
                t.set(i, j, k, c.clone());
            }
        }
        for s in 0..m {
            for u in 0..m {
                t.set(i, n + s, n + u, lact[i][(u, s)].clone());
                t.set(n + s, i, n + u, ract[i][(u, s)].clone());
            }
        }
    }
    t
}

/// `(A ⋉ M, α ⊕ β)`, A block first.
pub fn semidirect_product(a: &AveragingAlgebra, m: &AveragingBimodule) -> Result<AveragingAlgebra> {
    m.validate()?;
    if m.base != *a {
        return Err(Error::Usage("bimodule is not based on the given algebra".into()));
    }
    let mul = semidirect_table(a.mul(), &m.lact, &m.ract, m.mdim());
    crate::check_dim(mul.dim())?;
    Ok(AveragingAlgebra { alg: Algebra { mul }, alpha: a.alpha.direct_sum(&m.beta) })
}

/// `(M*, 𝔯*, ℓ*, β*)`.
pub fn dual_averaging_bimodule(m: &AveragingBimodule) -> AveragingBimodule {
    AveragingBimodule {
        base: m.base.clone(),
        lact: m.ract.iter().map(Matrix::transpose).collect(),
        ract: m.lact.iter().map(Matrix::transpose).collect(),
        beta: m.beta.transpose(),
    }
}

/// `P ⋉ M` for a perm bimodule.
pub fn perm_semidirect(p: &PermAlgebra, m: &PermBimodule) -> Result<PermAlgebra> {
    m.validate()?;
    if m.base != *p {
        return Err(Error::Usage("bimodule is not based on the given perm algebra".into()));
    }
    let mul = semidirect_table(&p.mul, &m.lact, &m.ract, m.mdim());
    crate::check_dim(mul.dim())?;
    Ok(PermAlgebra { mul })
}

/// `(M*, ℓ*, ℓ* − 𝔯*)`.
pub fn perm_dual_bimodule(m: &PermBimodule) -> Result<PermBimodule> {
    m.validate()?;
    require(perm_bimodule_report(m))?;
    Ok(perm_dual_bimodule_unchecked(m))
}

pub fn perm_dual_bimodule_unchecked(m: &PermBimodule) -> PermBimodule {
    PermBimodule {
        base: m.base.clone(),
        lact: m.lact.iter().map(Matrix::transpose).collect(),
        ract: m.lact.iter().zip(&m.ract).map(|(l, r)| &l.transpose() - &r.transpose()).collect(),
    }
}

fn module_with_single_action(a: &AveragingAlgebra, mu: &[Matrix], beta: &Matrix) -> AveragingBimodule {
    AveragingBimodule { base: a.clone(), lact: mu.to_vec(), ract: mu.to_vec(), beta: beta.clone() }
}

/// Perm bimodule over `(A, •)` induced by a module `(M, μ, β)` of a
/// commutative averaging algebra: `ℓ(a)m = μ(α(a))m`, `𝔯(a)m = μ(a)β(m)`.
pub fn induce_perm_bimodule(a: &AveragingAlgebra, mu: &[Matrix], beta: &Matrix) -> Result<PermBimodule> {
    let module = module_with_single_action(a, mu, beta);
    module.validate()?;
    let mut rep = structures::verify_commutative(a.mul());
    rep.kind = "induced perm bimodule input".into();
    rep.extend(structures::verify_averaging(a));
    rep.extend(verify_averaging_bimodule(&module)?);
    require(rep)?;
    Ok(induce_perm_bimodule_unchecked(a, mu, beta))
}

pub fn induce_perm_bimodule_unchecked(a: &AveragingAlgebra, mu: &[Matrix], beta: &Matrix) -> PermBimodule {
    let n = a.dim();
    let m = beta.rows();
    let lact = (0..n).map(|i| Matrix::combination(&a.alpha.column(i), mu, m, m)).collect();
    let ract = mu.iter().map(|x| x * beta).collect();
    PermBimodule { base: structures::induce_perm_unchecked(a), lact, ract }
}

/// DUALCOMPAT: `β(μ(a)m) = μ(α(a))m − μ(a)β(m)` on all basis pairs.
pub fn dual_compat(a: &AveragingAlgebra, mu: &[Matrix], beta: &Matrix) -> Result<CheckReport> {
    let module = module_with_single_action(a, mu, beta);
    module.validate()?;
    let n = a.dim();
    let d = beta.rows();
    let mut rep = CheckReport::new("dual-compat");
    rep.push(check_all("DUALCOMPAT", &[n, d], |t| {
        let lhs = beta.apply(&mu[t[0]].column(t[1]));
        let rhs = scalar::sub_vec(
            &module.left(&a.alpha.column(t[0])).column(t[1]),
            &mu[t[0]].apply(&beta.column(t[1])),
        );
        (lhs, rhs)
    }));
    Ok(rep)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn bia2() -> AveragingAlgebra {
        // e1e1=e1, e1e2=e2=e2e1, α(e1)=e1
        AveragingAlgebra::new(
            Tensor3::from_entries(2, &[(0, 0, 0, 1), (0, 1, 1, 1), (1, 0, 1, 1)]),
            Matrix::from_rows(&[&[1, 0], &[0, 0]]),
        )
        .unwrap()
    }

    #[test]
    fn regular_bimodule_with_alpha_passes() {
        let a = bia2();
        let m = AveragingBimodule::regular(&a, a.alpha.clone());
        assert!(verify_averaging_bimodule(&m).unwrap().passed());
    }

    #[test]
    fn regular_bimodule_with_printed_beta_passes() {
        let a = bia2();
        let m = AveragingBimodule::regular(&a, Matrix::from_rows(&[&[0, 0], &[0, 1]]));
        let rep = verify_averaging_bimodule(&m).unwrap();
        assert!(rep.passed(), "{rep}");
        let s = semidirect_product(&a, &m).unwrap();
        assert_eq!(s.dim(), 4);
        assert!(structures::verify_averaging(&s).passed());
    }

    #[test]
    fn zero_actions_make_an_ideal_squaring_to_zero() {
        let a = bia2();
        let m = AveragingBimodule::new(a.clone(), vec![Matrix::zeros(1, 1); 2], vec![Matrix::zeros(1, 1); 2], Matrix::identity(1))
            .unwrap();
        let s = semidirect_product(&a, &m).unwrap();
        for i in 0..3 {
            assert!(scalar::is_zero_vec(s.mul().basis_product(i, 2)));
            assert!(scalar::is_zero_vec(s.mul().basis_product(2, i)));
        }
    }

    #[test]
    fn base_mismatch_is_rejected() {
        let a = bia2();
        let m = AveragingBimodule::regular(&a, a.alpha.clone());
        let other = AveragingAlgebra::new(a.mul().clone(), Matrix::identity(2)).unwrap();
        assert!(semidirect_product(&other, &m).is_err());
    }

    #[test]
    fn double_dual_restores_actions() {
        let a = bia2();
        let m = AveragingBimodule::regular(&a, Matrix::from_rows(&[&[0, 1], &[0, 1]]));
        assert_eq!(dual_averaging_bimodule(&dual_averaging_bimodule(&m)), m);
    }

    #[test]
    fn perm_dual_of_zero_actions_is_zero() {
        let p = PermAlgebra::new(Tensor3::zeros(2)).unwrap();
        let m = PermBimodule::new(p, vec![Matrix::zeros(3, 3); 2], vec![Matrix::zeros(3, 3); 2]).unwrap();
        let d = perm_dual_bimodule(&m).unwrap();
        assert!(d.lact.iter().chain(&d.ract).all(Matrix::is_zero));
    }

    #[test]
    fn zero_perm_semidirect() {
        let p = PermAlgebra::new(Tensor3::zeros(1)).unwrap();
        let m = PermBimodule::new(p.clone(), vec![Matrix::zeros(1, 1)], vec![Matrix::zeros(1, 1)]).unwrap();
        assert!(perm_semidirect(&p, &m).unwrap().mul.is_zero());
    }

    #[test]
    fn induced_actions_vanish_with_zero_operators() {
        let a = AveragingAlgebra::new(bia2().mul().clone(), Matrix::zeros(2, 2)).unwrap();
        let mu: Vec<Matrix> = (0..2).map(|i| a.mul().left_basis(i)).collect();
        let pb = induce_perm_bimodule(&a, &mu, &Matrix::zeros(2, 2)).unwrap();
        assert!(pb.lact.iter().chain(&pb.ract).all(Matrix::is_zero));
    }

    #[test]
    fn action_kind_names() {
        for k in ActionKind::ALL {
            assert_eq!(k.name().parse::<ActionKind>().unwrap(), k);
        }
    }
}
