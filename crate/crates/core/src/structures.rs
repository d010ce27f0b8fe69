//! Algebra kinds, their axiom suites and the constructions that stay inside
//! one underlying space: derived products, perm induction, the dendriform
//! associated algebra, Rota-Baxter dendriform splitting and the perm⊗pre-Lie
//! Lie algebra.

use std::fmt;
use std::str::FromStr;

use num_traits::Zero;

use crate::error::{require, Error, Result};
use crate::linalg::Matrix;
use crate::report::{check_all, check_vanishes, AxiomResult, CheckReport, Witness};
use crate::scalar::{self, unit, Q};
use crate::tensor::Tensor3;

fn check_square(m: &Matrix, n: usize, what: &str) -> Result<()> {
    if m.rows() != n || m.cols() != n {
        return Err(Error::dim(format!("{what} is {}x{}, expected {n}x{n}", m.rows(), m.cols())));
    }
    Ok(())
}

fn check_table(t: &Tensor3) -> Result<()> {
    if t.dim() == 0 {
        return Err(Error::dim("dimension must be at least 1"));
    }
    crate::check_dim(t.dim())
}

/// `(A, ·)` with `e_i e_j = Σ_k c[i][j][k] e_k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Algebra {
    pub mul: Tensor3,
}

impl Algebra {
    pub fn new(mul: Tensor3) -> Result<Self> {
        check_table(&mul)?;
        Ok(Algebra { mul })
    }

    pub fn dim(&self) -> usize {
        self.mul.dim()
    }
}

/// An algebra with an operator `α`; the averaging identities are checked, not
/// assumed.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AveragingAlgebra {
    pub alg: Algebra,
    pub alpha: Matrix,
}

impl AveragingAlgebra {
    pub fn new(mul: Tensor3, alpha: Matrix) -> Result<Self> {
        check_table(&mul)?;
        check_square(&alpha, mul.dim(), "alpha")?;
        Ok(AveragingAlgebra { alg: Algebra { mul }, alpha })
    }

    pub fn dim(&self) -> usize {
        self.alg.dim()
    }

    pub fn mul(&self) -> &Tensor3 {
        &self.alg.mul
    }

    pub(crate) fn validate(&self) -> Result<()> {
        check_table(self.mul())?;
        check_square(&self.alpha, self.dim(), "alpha")
    }
}

/// Left perm algebra: `p₁(p₂p₃) = (p₁p₂)p₃ = (p₂p₁)p₃`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PermAlgebra {
    pub mul: Tensor3,
}

impl PermAlgebra {
    pub fn new(mul: Tensor3) -> Result<Self> {
        check_table(&mul)?;
        Ok(PermAlgebra { mul })
    }

    pub fn dim(&self) -> usize {
        self.mul.dim()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DendriformData {
    /// `≻`
    pub succ: Tensor3,
    /// `≺`
    pub prec: Tensor3,
    pub alpha: Option<Matrix>,
}

impl DendriformData {
    pub fn new(succ: Tensor3, prec: Tensor3, alpha: Option<Matrix>) -> Result<Self> {
        let d = DendriformData { succ, prec, alpha };
        d.validate()?;
        Ok(d)
    }

    pub fn dim(&self) -> usize {
        self.succ.dim()
    }

    fn validate(&self) -> Result<()> {
        check_table(&self.succ)?;
        if self.prec.dim() != self.succ.dim() {
            return Err(Error::dim("succ and prec dimensions differ"));
        }
        if let Some(a) = &self.alpha {
            check_square(a, self.dim(), "alpha")?;
        }
        Ok(())
    }
}

/// Pre-Lie algebra `(Q, ∘)` with a bilinear form `ω`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PreLieQuadratic {
    pub circ: Tensor3,
    pub omega: Matrix,
}

impl PreLieQuadratic {
    pub fn new(circ: Tensor3, omega: Matrix) -> Result<Self> {
        check_table(&circ)?;
        check_square(&omega, circ.dim(), "omega")?;
        Ok(PreLieQuadratic { circ, omega })
    }

    pub fn dim(&self) -> usize {
        self.circ.dim()
    }

    pub fn omega_value(&self, x: &[Q], y: &[Q]) -> Q {
        scalar::dot(x, &self.omega.apply(y))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LieAlgebra {
    pub bracket: Tensor3,
}

impl LieAlgebra {
    pub fn new(bracket: Tensor3) -> Result<Self> {
        check_table(&bracket)?;
        Ok(LieAlgebra { bracket })
    }

    pub fn dim(&self) -> usize {
        self.bracket.dim()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum StructureKind {
    Associative,
    Commutative,
    AveragingAlgebra,
    Perm,
    Dendriform,
    AveragingDendriform,
    PreLie,
    QuadraticPreLie,
    Lie,
}

impl StructureKind {
    pub const ALL: [StructureKind; 9] = [
        StructureKind::Associative,
        StructureKind::Commutative,
        StructureKind::AveragingAlgebra,
        StructureKind::Perm,
        StructureKind::Dendriform,
        StructureKind::AveragingDendriform,
        StructureKind::PreLie,
        StructureKind::QuadraticPreLie,
        StructureKind::Lie,
    ];

    pub fn name(self) -> &'static str {
        match self {
            StructureKind::Associative => "associative",
            StructureKind::Commutative => "commutative",
            StructureKind::AveragingAlgebra => "averaging-algebra",
            StructureKind::Perm => "perm",
            StructureKind::Dendriform => "dendriform",
            StructureKind::AveragingDendriform => "averaging-dendriform",
            StructureKind::PreLie => "pre-lie",
            StructureKind::QuadraticPreLie => "quadratic-pre-lie",
            StructureKind::Lie => "lie",
        }
    }
}

impl fmt::Display for StructureKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for StructureKind {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Self::ALL
            .into_iter()
            .find(|k| k.name() == s)
            .ok_or_else(|| Error::UnknownKind(s.to_string()))
    }
}

#[derive(Clone, Copy, Debug)]
pub enum StructureData<'a> {
    Algebra(&'a Algebra),
    Averaging(&'a AveragingAlgebra),
    Perm(&'a PermAlgebra),
    Dendriform(&'a DendriformData),
    PreLie(&'a PreLieQuadratic),
    Lie(&'a LieAlgebra),
}

pub fn verify_structure(kind: StructureKind, data: StructureData<'_>) -> Result<CheckReport> {
    use StructureData as D;
    use StructureKind as K;
    let mismatch = || Error::Usage(format!("kind `{kind}` does not accept this data"));
    match (kind, data) {
        (K::Associative, D::Algebra(a)) => Ok(verify_associative(&a.mul)),
        (K::Associative, D::Averaging(a)) => Ok(verify_associative(a.mul())),
        (K::Commutative, D::Algebra(a)) => Ok(verify_commutative(&a.mul)),
        (K::Commutative, D::Averaging(a)) => Ok(verify_commutative(a.mul())),
        (K::AveragingAlgebra, D::Averaging(a)) => {
            a.validate()?;
            Ok(verify_averaging(a))
        }
        (K::Perm, D::Perm(p)) => Ok(verify_perm(&p.mul)),
        (K::Dendriform, D::Dendriform(d)) => {
            d.validate()?;
            Ok(verify_dendriform(d, false))
        }
        (K::AveragingDendriform, D::Dendriform(d)) => {
            d.validate()?;
            if d.alpha.is_none() {
                return Err(Error::Usage("averaging-dendriform needs an operator".into()));
            }
            Ok(verify_dendriform(d, true))
        }
        (K::PreLie, D::PreLie(q)) => Ok(verify_prelie(q, false)),
        (K::QuadraticPreLie, D::PreLie(q)) => {
            check_square(&q.omega, q.dim(), "omega")?;
            Ok(verify_prelie(q, true))
        }
        (K::Lie, D::Lie(l)) => Ok(verify_lie(&l.bracket)),
        _ => Err(mismatch()),
    }
}

pub(crate) fn assoc_axiom(id: &str, mul: &Tensor3) -> AxiomResult {
    let n = mul.dim();
    check_all(id, &[n, n, n], |t| {
        let (i, j, k) = (t[0], t[1], t[2]);
        let lhs = mul.product(mul.basis_product(i, j), &unit(n, k));
        let rhs = mul.product(&unit(n, i), mul.basis_product(j, k));
        (lhs, rhs)
    })
}

pub(crate) fn comm_axiom(id: &str, mul: &Tensor3) -> AxiomResult {
    let n = mul.dim();
    check_all(id, &[n, n], |t| {
        (mul.basis_product(t[0], t[1]).to_vec(), mul.basis_product(t[1], t[0]).to_vec())
    })
}

/// AVG-1a and AVG-1b under the given identifiers.
pub(crate) fn avg_axioms(ids: [&str; 2], mul: &Tensor3, alpha: &Matrix) -> [AxiomResult; 2] {
    let n = mul.dim();
    let a = |i: usize| alpha.column(i);
    let first = check_all(ids[0], &[n, n], |t| {
        let lhs = mul.product(&a(t[0]), &a(t[1]));
        let rhs = alpha.apply(&mul.product(&a(t[0]), &unit(n, t[1])));
        (lhs, rhs)
    });
    let second = check_all(ids[1], &[n, n], |t| {
        let lhs = mul.product(&a(t[0]), &a(t[1]));
        let rhs = alpha.apply(&mul.product(&unit(n, t[0]), &a(t[1])));
        (lhs, rhs)
    });
    [first, second]
}

pub(crate) fn perm_axioms(mul: &Tensor3) -> [AxiomResult; 2] {
    let n = mul.dim();
    let p1 = check_all("PERM-1", &[n, n, n], |t| {
        let lhs = mul.product(&unit(n, t[0]), mul.basis_product(t[1], t[2]));
        let rhs = mul.product(mul.basis_product(t[0], t[1]), &unit(n, t[2]));
        (lhs, rhs)
    });
    let p2 = check_all("PERM-2", &[n, n, n], |t| {
        let lhs = mul.product(mul.basis_product(t[0], t[1]), &unit(n, t[2]));
        let rhs = mul.product(mul.basis_product(t[1], t[0]), &unit(n, t[2]));
        (lhs, rhs)
    });
    [p1, p2]
}

pub fn verify_associative(mul: &Tensor3) -> CheckReport {
    CheckReport::new("associative").with(assoc_axiom("ASSOC-1", mul))
}

/// Commutative associative algebra.
pub fn verify_commutative(mul: &Tensor3) -> CheckReport {
    CheckReport::new("commutative")
        .with(assoc_axiom("ASSOC-1", mul))
        .with(comm_axiom("COMM-1", mul))
}

pub fn verify_averaging(a: &AveragingAlgebra) -> CheckReport {
    let mut rep = CheckReport::new("averaging-algebra").with(assoc_axiom("ASSOC-1", a.mul()));
    for r in avg_axioms(["AVG-1a", "AVG-1b"], a.mul(), &a.alpha) {
        rep.push(r);
    }
    rep
}

pub fn verify_perm(mul: &Tensor3) -> CheckReport {
    let mut rep = CheckReport::new("perm");
    for r in perm_axioms(mul) {
        rep.push(r);
    }
    rep
}

fn verify_dendriform(d: &DendriformData, averaging: bool) -> CheckReport {
    let n = d.dim();
    let s = &d.succ;
    let p = &d.prec;
    let e = |i| unit(n, i);
    let kind = if averaging { "averaging-dendriform" } else { "dendriform" };
    let mut rep = CheckReport::new(kind);
    rep.push(check_all("DEND-1", &[n, n, n], |t| {
        let lhs = p.product(p.basis_product(t[0], t[1]), &e(t[2]));
        let inner = scalar::add_vec(p.basis_product(t[1], t[2]), s.basis_product(t[1], t[2]));
        (lhs, p.product(&e(t[0]), &inner))
    }));
    rep.push(check_all("DEND-2", &[n, n, n], |t| {
        let lhs = p.product(s.basis_product(t[0], t[1]), &e(t[2]));
        (lhs, s.product(&e(t[0]), p.basis_product(t[1], t[2])))
    }));
    rep.push(check_all("DEND-3", &[n, n, n], |t| {
        let sum = scalar::add_vec(p.basis_product(t[0], t[1]), s.basis_product(t[0], t[1]));
        (s.product(&sum, &e(t[2])), s.product(&e(t[0]), s.basis_product(t[1], t[2])))
    }));
    if averaging {
        let alpha = d.alpha.as_ref().expect("checked by caller");
        for (ids, op) in [(["AVGDEND-1", "AVGDEND-2"], s), (["AVGDEND-3", "AVGDEND-4"], p)] {
            for r in avg_axioms(ids, op, alpha) {
                rep.push(r);
            }
        }
    }
    rep
}

fn verify_prelie(q: &PreLieQuadratic, quadratic: bool) -> CheckReport {
    let n = q.dim();
    let c = &q.circ;
    let e = |i| unit(n, i);
    let kind = if quadratic { "quadratic-pre-lie" } else { "pre-lie" };
    let mut rep = CheckReport::new(kind);
    rep.push(check_all("PRELIE-1", &[n, n, n], |t| {
        let (x, y, z) = (t[0], t[1], t[2]);
        let lhs = scalar::sub_vec(
            &c.product(c.basis_product(x, y), &e(z)),
            &c.product(&e(x), c.basis_product(y, z)),
        );
        let rhs = scalar::sub_vec(
            &c.product(c.basis_product(y, x), &e(z)),
            &c.product(&e(y), c.basis_product(x, z)),
        );
        (lhs, rhs)
    }));
    if !quadratic {
        return rep;
    }
    let w = &q.omega;
    rep.push(check_all("OMEGA-1", &[n, n], |t| {
        (vec![w[(t[0], t[1])].clone()], vec![-w[(t[1], t[0])].clone()])
    }));
    rep.push(match w.transpose().kernel_vector() {
        None => AxiomResult::pass("OMEGA-2"),
        Some(v) => AxiomResult::fail(
            "OMEGA-2",
            Witness { indices: vec![], rhs: vec![Q::zero(); v.len()], lhs: v },
        ),
    });
    rep.push(check_all("OMEGA-3", &[n, n, n], |t| {
        let (x, y, z) = (t[0], t[1], t[2]);
        let lhs = q.omega_value(c.basis_product(x, y), &e(z));
        let diff = scalar::sub_vec(c.basis_product(x, z), c.basis_product(z, x));
        let rhs = -q.omega_value(&e(y), &diff);
        (vec![lhs], vec![rhs])
    }));
    rep
}

pub fn verify_lie(bracket: &Tensor3) -> CheckReport {
    let n = bracket.dim();
    let b = bracket;
    let e = |i| unit(n, i);
    let mut rep = CheckReport::new("lie");
    rep.push(check_all("LIE-1", &[n, n], |t| {
        let rhs = b.basis_product(t[1], t[0]).iter().map(|x| -x).collect();
        (b.basis_product(t[0], t[1]).to_vec(), rhs)
    }));
    rep.push(check_vanishes("LIE-2", &[n, n, n], |t| {
        let (x, y, z) = (t[0], t[1], t[2]);
        let a = b.product(&e(x), b.basis_product(y, z));
        let bb = b.product(&e(y), b.basis_product(z, x));
        let c = b.product(&e(z), b.basis_product(x, y));
        scalar::add_vec(&scalar::add_vec(&a, &bb), &c)
    }));
    rep
}

/// Suite for a Rota-Baxter operator of weight `λ` commuting with `α`:
/// RB-λ-1 `Rα = αR`, RB-λ-2 `R(a)R(b) = R(R(a)b + aR(b) + λab)`.
pub fn rota_baxter_report(a: &AveragingAlgebra, r: &Matrix, weight: &Q) -> Result<CheckReport> {
    a.validate()?;
    check_square(r, a.dim(), "Rota-Baxter operator")?;
    let n = a.dim();
    let m = a.mul();
    let mut rep = CheckReport::new("rota-baxter");
    let ra = r * &a.alpha;
    let ar = &a.alpha * r;
    rep.push(check_all("RB-λ-1", &[n], |t| (ra.column(t[0]), ar.column(t[0]))));
    rep.push(check_all("RB-λ-2", &[n, n], |t| {
        let (x, y) = (t[0], t[1]);
        let rx = r.column(x);
        let ry = r.column(y);
        let lhs = m.product(&rx, &ry);
        let mut inner = scalar::add_vec(&m.product(&rx, &unit(n, y)), &m.product(&unit(n, x), &ry));
        if !weight.is_zero() {
            inner = scalar::add_vec(&inner, &scalar::scale_vec(weight, m.basis_product(x, y)));
        }
        (lhs, r.apply(&inner))
    }));
    Ok(rep)
}

/// `(A, •)` with `a•b = α(a)b` and `(A, ⋆)` with `a⋆b = aα(b)`, both with the
/// same `α`.
pub fn derived_products(a: &AveragingAlgebra) -> Result<(AveragingAlgebra, AveragingAlgebra)> {
    a.validate()?;
    require(verify_averaging(a))?;
    Ok(derived_products_unchecked(a))
}

pub fn derived_products_unchecked(a: &AveragingAlgebra) -> (AveragingAlgebra, AveragingAlgebra) {
    let n = a.dim();
    let m = a.mul();
    let bullet = Tensor3::from_products(n, |i, j| m.product(&a.alpha.column(i), &unit(n, j)));
    let star = Tensor3::from_products(n, |i, j| m.product(&unit(n, i), &a.alpha.column(j)));
    (
        AveragingAlgebra { alg: Algebra { mul: bullet }, alpha: a.alpha.clone() },
        AveragingAlgebra { alg: Algebra { mul: star }, alpha: a.alpha.clone() },
    )
}

/// Perm algebra `x•y = α(x)y` of a commutative averaging algebra.
pub fn induce_perm(a: &AveragingAlgebra) -> Result<PermAlgebra> {
    a.validate()?;
    let mut rep = verify_averaging(a);
    rep.kind = "commutative averaging algebra".into();
    rep.push(comm_axiom("COMM-1", a.mul()));
    require(rep)?;
    Ok(induce_perm_unchecked(a))
}

/// [`induce_perm`] without validating the input.
pub fn induce_perm_unchecked(a: &AveragingAlgebra) -> PermAlgebra {
    PermAlgebra { mul: derived_products_unchecked(a).0.alg.mul }
}

/// `(A, ≻ + ≺, α)`.
pub fn associated_averaging_algebra(d: &DendriformData) -> Result<AveragingAlgebra> {
    d.validate()?;
    let Some(alpha) = &d.alpha else {
        return Err(Error::Usage("dendriform data carries no operator".into()));
    };
    require(verify_dendriform(d, true))?;
    Ok(AveragingAlgebra { alg: Algebra { mul: d.succ.plus(&d.prec) }, alpha: alpha.clone() })
}

/// `a≻b = R(a)b`, `a≺b = aR(b)` for a weight-zero Rota-Baxter operator `R`
/// commuting with `α`.
pub fn dendriform_from_rota_baxter(a: &AveragingAlgebra, r: &Matrix) -> Result<DendriformData> {
    let mut rep = rota_baxter_report(a, r, &Q::zero())?;
    rep.push(assoc_axiom("ASSOC-1", a.mul()));
    require(rep)?;
    let n = a.dim();
    let m = a.mul();
    let succ = Tensor3::from_products(n, |i, j| m.product(&r.column(i), &unit(n, j)));
    let prec = Tensor3::from_products(n, |i, j| m.product(&unit(n, i), &r.column(j)));
    Ok(DendriformData { succ, prec, alpha: Some(a.alpha.clone()) })
}

/// Lie algebra on `P⊗Q` with
/// `[p₁⊗q₁, p₂⊗q₂] = (p₁•p₂)⊗(q₁∘q₂) − (p₂•p₁)⊗(q₂∘q₁)`.
/// The basis vector `e_i⊗q_j` has index `i·dim(Q) + j`.
pub fn tensor_lie(p: &PermAlgebra, q: &PreLieQuadratic) -> Result<LieAlgebra> {
    check_table(&p.mul)?;
    check_square(&q.omega, q.dim(), "omega")?;
    crate::check_dim(p.dim() * q.dim())?;
    let mut rep = verify_perm(&p.mul);
    rep.kind = "tensor-lie input".into();
    rep.extend(verify_prelie(q, true));
    require(rep)?;
    Ok(tensor_lie_unchecked(p, q))
}

pub fn tensor_lie_unchecked(p: &PermAlgebra, q: &PreLieQuadratic) -> LieAlgebra {
    let (np, nq) = (p.dim(), q.dim());
    let n = np * nq;
    let mut t = Tensor3::zeros(n);
    for i in 0..np {
        for j in 0..nq {
            for k in 0..np {
                for l in 0..nq {
                    let src = (i * nq + j, k * nq + l);
                    let pik = p.mul.basis_product(i, k);
                    let pki = p.mul.basis_product(k, i);
                    let qjl = q.circ.basis_product(j, l);
                    let qlj = q.circ.basis_product(l, j);
                    for a in 0..np {
                        for b in 0..nq {
                            let v = &pik[a] * &qjl[b] - &pki[a] * &qlj[b];
                            if !v.is_zero() {
                                t.add_to(src.0, src.1, a * nq + b, &v);
                            }
                        }
                    }
                }
            }
        }
    }
    LieAlgebra { bracket: t }
}
