//! Coboundary comultiplications, the Yang-Baxter equation in an averaging
//! algebra with respect to an operator, O-operators, the perm Yang-Baxter
//! equation, the classical Yang-Baxter equation and the lift from perm to Lie
//! solutions.

use num_traits::Zero;

use crate::actions::{dual_averaging_bimodule, semidirect_product, verify_averaging_bimodule, AveragingBimodule, OOperatorData};
use crate::error::{require, Error, Result};
use crate::linalg::Matrix;
use crate::report::{check_all, check_vanishes, AxiomResult, CheckReport};
use crate::scalar::{self, Q};
use crate::structures::{
    self, associated_averaging_algebra, verify_structure, Algebra, AveragingAlgebra, DendriformData, LieAlgebra,
    PermAlgebra, PreLieQuadratic, StructureData, StructureKind,
};
use crate::tensor::{ybe_triple, Tensor3, TwoTensor};

fn same_dim(n: usize, r: &TwoTensor) -> Result<()> {
    if r.dim() != n {
        return Err(Error::dim(format!("tensor has dimension {}, expected {n}", r.dim())));
    }
    Ok(())
}

fn square(m: &Matrix, n: usize, what: &str) -> Result<()> {
    if m.rows() != n || m.cols() != n {
        return Err(Error::dim(format!("{what} must be {n}x{n}")));
    }
    Ok(())
}

/// `Δ(a) = (id⊗ℓ(a) − 𝔯(a)⊗id)(r)`.
pub fn coboundary_comultiplication(alg: &Algebra, r: &TwoTensor) -> Result<Tensor3> {
    let n = alg.dim();
    same_dim(n, r)?;
    let rc = r.coeff();
    let slices: Vec<Matrix> = (0..n)
        .map(|i| &(rc * &alg.mul.left_basis(i).transpose()) - &(&alg.mul.right_basis(i) * rc))
        .collect();
    Ok(Tensor3::from_slices(&slices))
}

/// Matrices of `r♯: A* → A`, `r♯(ξ) = Σ⟨ξ, x_i⟩y_i`, and of `r♮`,
/// `⟨ξ, r♮(η)⟩ = −⟨ξ⊗η, r⟩`.
pub fn r_maps(r: &TwoTensor) -> (Matrix, Matrix) {
    (r.coeff().transpose(), -r.coeff())
}

fn ybe_kind(alpha: &Matrix, beta: &Matrix) -> &'static str {
    if alpha == beta {
        "YBE in averaging algebra"
    } else {
        "beta-YBE"
    }
}

/// YBE-1 `r₁₂r₁₃ + r₁₃r₂₃ − r₂₃r₁₂ = 0`, YBE-2 `(α⊗id − id⊗β)(r) = 0`,
/// YBE-3 `(β⊗id − id⊗α)(r) = 0`.
pub fn check_avg_ybe(a: &AveragingAlgebra, beta: &Matrix, r: &TwoTensor) -> Result<CheckReport> {
    let n = a.dim();
    same_dim(n, r)?;
    square(beta, n, "beta")?;
    let t = ybe_triple(a.mul(), r)?;
    let rc = r.coeff();
    let v = &(&a.alpha * rc) - &(rc * &beta.transpose());
    let u = &(beta * rc) - &(rc * &a.alpha.transpose());
    let mut rep = CheckReport::new(ybe_kind(&a.alpha, beta));
    rep.push(check_vanishes("YBE-1", &[n, n, n], |x| vec![t.get(x[0], x[1], x[2]).clone()]));
    rep.push(check_vanishes("YBE-2", &[n, n], |x| vec![v[(x[0], x[1])].clone()]));
    rep.push(check_vanishes("YBE-3", &[n, n], |x| vec![u[(x[0], x[1])].clone()]));
    Ok(rep)
}

/// COBA-1..COBA-8 for the comultiplication induced by `r`, with each composite
/// operator expanded term by term.
pub fn check_coboundary_conditions(a: &AveragingAlgebra, beta: &Matrix, r: &TwoTensor) -> Result<CheckReport> {
    let n = a.dim();
    same_dim(n, r)?;
    square(beta, n, "beta")?;
    let mul = a.mul();
    let al = &a.alpha;
    let rc = r.coeff();
    let s = rc + &rc.transpose();
    let t = ybe_triple(mul, r)?;
    let u = &(beta * rc) - &(rc * &al.transpose());
    let v = &(al * rc) - &(rc * &beta.transpose());
    let l: Vec<Matrix> = (0..n).map(|i| mul.left_basis(i)).collect();
    let rt: Vec<Matrix> = (0..n).map(|i| mul.right_basis(i)).collect();
    let l_of = |x: Vec<Q>| mul.left(&x);
    let r_of = |x: Vec<Q>| mul.right(&x);
    let two = Q::from_integer(2.into());
    let flat = |m: Matrix| m.entries().to_vec();

    let mut rep = CheckReport::new("coboundary conditions");
    rep.push(check_vanishes("COBA-1", &[n, n], |x| {
        let (i, j) = (x[0], x[1]);
        let inner = &(&s * &l[j].transpose()) - &(&rt[j] * &s);
        flat(&(&l[i] * &inner) - &(&inner * &rt[i].transpose()))
    }));
    rep.push(check_vanishes("COBA-2", &[n], |x| {
        let i = x[0];
        t.map_slot(2, &l[i]).minus(&t.map_slot(0, &rt[i])).entries().to_vec()
    }));
    rep.push(check_vanishes("COBA-3", &[n], |x| {
        let ba = beta.column(x[0]);
        flat(&(&u * &l_of(ba.clone()).transpose()) - &(&r_of(ba) * &v))
    }));
    rep.push(check_vanishes("COBA-4", &[n], |x| {
        let i = x[0];
        let ba = beta.column(i);
        let left = &(beta * &l[i]).scale(&two) - &l_of(ba.clone());
        let right = &(beta * &rt[i]).scale(&two) - &r_of(ba);
        flat(&(&u * &left.transpose()) + &(&right * &v))
    }));
    rep.push(check_vanishes("COBA-5", &[n], |x| {
        let aa = al.column(x[0]);
        flat(&(&u * &l_of(aa.clone()).transpose()) - &(&r_of(aa) * &u))
    }));
    rep.push(check_vanishes("COBA-6", &[n], |x| {
        let i = x[0];
        let aa = al.column(i);
        let t1 = &u * &(al * &l[i]).scale(&two).transpose();
        let t2 = &(beta * &rt[i]).scale(&two) * &u;
        let t3 = &u * &l_of(aa.clone()).transpose();
        let t4 = &r_of(aa) * &u;
        flat(&(&(&t1 + &t2) - &t3) - &t4)
    }));
    rep.push(check_vanishes("COBA-7", &[n], |x| {
        let aa = al.column(x[0]);
        flat(&(&v * &l_of(aa.clone()).transpose()) - &(&r_of(aa) * &v))
    }));
    rep.push(check_vanishes("COBA-8", &[n], |x| {
        let i = x[0];
        let aa = al.column(i);
        let t1 = &v * &(beta * &l[i]).scale(&two).transpose();
        let t2 = &(al * &rt[i]).scale(&two) * &v;
        let t3 = &v * &l_of(aa.clone()).transpose();
        let t4 = &r_of(aa) * &v;
        flat(&(&(&t1 + &t2) - &t3) - &t4)
    }));
    Ok(rep)
}

fn is_regular(m: &AveragingBimodule) -> bool {
    let n = m.base.dim();
    let mul = m.base.mul();
    m.mdim() == n && (0..n).all(|i| m.lact[i] == mul.left_basis(i) && m.ract[i] == mul.right_basis(i))
}

/// OOP-1 `αP = Pβ`, OOP-2 `P(m₁)P(m₂) = P(ℓ(P(m₁))m₂ + 𝔯(P(m₂))m₁)`; with a
/// weight, the Rota-Baxter suite RB-λ-1/2 on the regular bimodule.
pub fn verify_o_operator(data: &OOperatorData, weight: Option<&Q>) -> Result<CheckReport> {
    let bm = &data.bimod;
    if let Some(w) = weight {
        if !is_regular(bm) {
            return Err(Error::Usage("a weighted operator needs the regular bimodule".into()));
        }
        return structures::rota_baxter_report(&bm.base, &data.p, w);
    }
    let p = &data.p;
    let d = bm.mdim();
    let mul = bm.base.mul();
    let mut rep = CheckReport::new("o-operator");
    let ap = &bm.base.alpha * p;
    let pb = p * &bm.beta;
    rep.push(check_all("OOP-1", &[d], |x| (ap.column(x[0]), pb.column(x[0]))));
    rep.push(oop2(bm, p, mul, d));
    Ok(rep)
}

fn oop2(bm: &AveragingBimodule, p: &Matrix, mul: &Tensor3, d: usize) -> AxiomResult {
    check_all("OOP-2", &[d, d], |x| {
        let (p1, p2) = (p.column(x[0]), p.column(x[1]));
        let lhs = mul.product(&p1, &p2);
        let inner = scalar::add_vec(&bm.left(&p1).column(x[1]), &bm.right(&p2).column(x[0]));
        (lhs, p.apply(&inner))
    })
}

/// The outcome of turning an operator `P: M → A` into `r = P − τ(P)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OperatorYbe {
    /// `(A ⋉ M*, α ⊕ γ₁*)`.
    pub algebra: AveragingAlgebra,
    pub r: TwoTensor,
    /// The `(β ⊕ γ₂*)`-YBE report for `r`.
    pub ybe: CheckReport,
    /// OOP-2 together with OPEQ-1 `αP = Pγ₂` and OPEQ-2 `βP = Pγ₁`.
    pub conditions: CheckReport,
}

/// `r = Σ (P(e_i)⊗e_i* − e_i*⊗P(e_i))` on `A ⋉ M*`, with the YBE report and
/// the operator conditions reported separately.
pub fn ybe_from_o_operator(
    a: &AveragingAlgebra,
    bimod: &AveragingBimodule,
    p: &Matrix,
    beta: &Matrix,
    gamma2: &Matrix,
) -> Result<OperatorYbe> {
    let n = a.dim();
    require(verify_averaging_bimodule(bimod)?)?;
    if bimod.base != *a {
        return Err(Error::Usage("bimodule is not based on the given algebra".into()));
    }
    let m = bimod.mdim();
    if p.rows() != n || p.cols() != m {
        return Err(Error::dim(format!("operator must be {n}x{m}")));
    }
    square(beta, n, "beta")?;
    square(gamma2, m, "gamma2")?;
    let algebra = semidirect_product(a, &dual_averaging_bimodule(bimod))?;
    let mut pe = Matrix::zeros(n + m, n + m);
    for row in 0..n {
        for i in 0..m {
            pe[(row, n + i)] = p[(row, i)].clone();
        }
    }
    let pe = TwoTensor::new(pe)?;
    let r = pe.minus(&pe.flip());
    let ybe = check_avg_ybe(&algebra, &beta.direct_sum(&gamma2.transpose()), &r)?;
    let mut conditions = CheckReport::new("o-operator conditions");
    conditions.push(oop2(bimod, p, a.mul(), m));
    let (ap, pg2) = (&a.alpha * p, p * gamma2);
    conditions.push(check_all("OPEQ-1", &[m], |x| (ap.column(x[0]), pg2.column(x[0]))));
    let (bp, pg1) = (beta * p, p * &bimod.beta);
    conditions.push(check_all("OPEQ-2", &[m], |x| (bp.column(x[0]), pg1.column(x[0]))));
    Ok(OperatorYbe { algebra, r, ybe, conditions })
}

/// `m₁≻m₂ = ℓ(P(m₁))m₂`, `m₁≺m₂ = 𝔯(P(m₂))m₁` with operator `β`.
pub fn dendriform_from_o_operator(data: &OOperatorData) -> Result<DendriformData> {
    require(verify_o_operator(data, None)?)?;
    let bm = &data.bimod;
    let d = bm.mdim();
    let p = &data.p;
    let succ = Tensor3::from_products(d, |s, u| bm.left(&p.column(s)).column(u));
    let prec = Tensor3::from_products(d, |s, u| bm.right(&p.column(u)).column(s));
    Ok(DendriformData { succ, prec, alpha: Some(bm.beta.clone()) })
}

/// `r = Σ (e_i⊗e_i* − e_i*⊗e_i)` on `(A ⋉ A*, α ⊕ α*)` for an averaging
/// dendriform algebra, where `A*` carries the dual of `(A, ℓ_≻, 𝔯_≺, α)`.
pub fn canonical_ybe_from_dendriform(d: &DendriformData) -> Result<OperatorYbe> {
    let a = associated_averaging_algebra(d)?;
    let n = a.dim();
    let bimod = AveragingBimodule {
        base: a.clone(),
        lact: (0..n).map(|i| d.succ.left_basis(i)).collect(),
        ract: (0..n).map(|i| d.prec.right_basis(i)).collect(),
        beta: a.alpha.clone(),
    };
    let alpha = a.alpha.clone();
    ybe_from_o_operator(&a, &bimod, &Matrix::identity(n), &alpha, &alpha)
}

/// Calls `f(a, b, c, d, r_ab·r_cd)` for every pair of nonzero coefficients.
fn for_pairs(r: &TwoTensor, mut f: impl FnMut(usize, usize, usize, usize, &Q)) {
    let n = r.dim();
    let nz: Vec<(usize, usize, &Q)> = (0..n)
        .flat_map(|a| (0..n).map(move |b| (a, b)))
        .map(|(a, b)| (a, b, r.get(a, b)))
        .filter(|(_, _, c)| !c.is_zero())
        .collect();
    for &(a, b, x) in &nz {
        for &(c, d, y) in &nz {
            f(a, b, c, d, &(x * y));
        }
    }
}

/// `r₁₂•r₂₃ − r₁₃•r₂₃ + r₁₂•r₁₃ − r₁₃•r₁₂`.
pub fn perm_ybe_tensor(p: &PermAlgebra, r: &TwoTensor) -> Result<Tensor3> {
    let n = p.dim();
    same_dim(n, r)?;
    let mut t = Tensor3::zeros(n);
    for_pairs(r, |a, b, c, d, w| {
        for k in 0..n {
            let bc = p.mul.get(b, c, k);
            if !bc.is_zero() {
                t.add_to(a, k, d, &(w * bc));
            }
            let bd = p.mul.get(b, d, k);
            if !bd.is_zero() {
                t.add_to(a, c, k, &-(w * bd));
            }
            let ac = p.mul.get(a, c, k);
            if !ac.is_zero() {
                let x = w * ac;
                t.add_to(k, b, d, &x);
                t.add_to(k, d, b, &-x);
            }
        }
    });
    Ok(t)
}

/// PYBE-1: the perm Yang-Baxter tensor vanishes.
pub fn check_perm_ybe(p: &PermAlgebra, r: &TwoTensor) -> Result<CheckReport> {
    let t = perm_ybe_tensor(p, r)?;
    let n = p.dim();
    let mut rep = CheckReport::new("perm-YBE");
    rep.push(check_vanishes("PYBE-1", &[n, n, n], |x| vec![t.get(x[0], x[1], x[2]).clone()]));
    Ok(rep)
}

/// `[r₁₂, r₁₃] + [r₁₂, r₂₃] + [r₁₃, r₂₃]`.
pub fn cybe_tensor(l: &LieAlgebra, r: &TwoTensor) -> Result<Tensor3> {
    let n = l.dim();
    same_dim(n, r)?;
    let br = &l.bracket;
    let mut t = Tensor3::zeros(n);
    for_pairs(r, |a, b, c, d, w| {
        for k in 0..n {
            let ac = br.get(a, c, k);
            if !ac.is_zero() {
                t.add_to(k, b, d, &(w * ac));
            }
            let bc = br.get(b, c, k);
            if !bc.is_zero() {
                t.add_to(a, k, d, &(w * bc));
            }
            let bd = br.get(b, d, k);
            if !bd.is_zero() {
                t.add_to(a, c, k, &(w * bd));
            }
        }
    });
    Ok(t)
}

/// CYBE-1: the classical Yang-Baxter tensor vanishes.
pub fn check_cybe(l: &LieAlgebra, r: &TwoTensor) -> Result<CheckReport> {
    let t = cybe_tensor(l, r)?;
    let n = l.dim();
    let mut rep = CheckReport::new("CYBE");
    rep.push(check_vanishes("CYBE-1", &[n, n, n], |x| vec![t.get(x[0], x[1], x[2]).clone()]));
    Ok(rep)
}

/// `r̃ = Σ (x_i⊗q_j)⊗(y_i⊗f_j)` where `ω(q_i, f_j) = δ_ij`; the basis vector
/// `e_i⊗q_j` has index `i·dim(Q) + j`.
pub fn lift_r_to_lie(p: &PermAlgebra, q: &PreLieQuadratic, r: &TwoTensor) -> Result<TwoTensor> {
    let (np, nq) = (p.dim(), q.dim());
    same_dim(np, r)?;
    square(&q.omega, nq, "omega")?;
    crate::check_dim(np * nq)?;
    let f = q.omega.inverse().map_err(|_| Error::DegenerateForm)?;
    require(verify_structure(StructureKind::QuadraticPreLie, StructureData::PreLie(q))?)?;
    let mut out = Matrix::zeros(np * nq, np * nq);
    for a in 0..np {
        for b in 0..np {
            let w = r.get(a, b);
            if w.is_zero() {
                continue;
            }
            for j in 0..nq {
                for k in 0..nq {
                    let c = &f[(k, j)];
                    if !c.is_zero() {
                        out[(a * nq + j, b * nq + k)] += w * c;
                    }
                }
            }
        }
    }
    TwoTensor::new(out)
}

/// `ξ·_r η = 𝔯*(r♯(ξ))η + ℓ*(r♮(η))ξ` on `A*`.
pub fn r_product(alg: &Algebra, r: &TwoTensor) -> Result<Tensor3> {
    let n = alg.dim();
    same_dim(n, r)?;
    let (sharp, natural) = r_maps(r);
    Ok(Tensor3::from_products(n, |i, j| {
        let x = alg.mul.right(&sharp.column(i)).transpose().column(j);
        let y = alg.mul.left(&natural.column(j)).transpose().column(i);
        scalar::add_vec(&x, &y)
    }))
}

/// The coregular bimodule `(A*, 𝔯*, ℓ*, β*)` of `A` with operator `β`.
pub fn coregular_bimodule(a: &AveragingAlgebra, beta: &Matrix) -> AveragingBimodule {
    dual_averaging_bimodule(&AveragingBimodule::regular(a, beta.clone()))
}

/// `R_r = r♯∘φ` for a bilinear form with matrix `B`, `φ = Bᵀ`.
pub fn r_operator(r: &TwoTensor, form: &Matrix) -> Matrix {
    &r_maps(r).0 * &form.transpose()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn a3() -> AveragingAlgebra {
        AveragingAlgebra::new(
            Tensor3::from_entries(3, &[(0, 0, 0, 1), (0, 1, 1, 1), (1, 0, 1, 1)]),
            Matrix::from_rows(&[&[0, 0, 0], &[0, 0, 0], &[1, 1, 0]]),
        )
        .unwrap()
    }

    fn a3_beta() -> Matrix {
        Matrix::from_rows(&[&[0, 0, 0], &[0, 0, 0], &[1, -1, 0]])
    }

    fn anti() -> TwoTensor {
        TwoTensor::from_entries(3, &[(1, 2, 1), (2, 1, -1)])
    }

    #[test]
    fn coboundary_of_antisymmetric_r() {
        let d = coboundary_comultiplication(&a3().alg, &anti()).unwrap();
        let mut expect = Matrix::zeros(3, 3);
        expect[(1, 2)] = scalar::int(-1);
        expect[(2, 1)] = scalar::int(-1);
        assert_eq!(d.slice(0), expect);
        assert!(d.slice(1).is_zero() && d.slice(2).is_zero());
    }

    #[test]
    fn zero_r_gives_zero_coproduct_and_passes() {
        let z = TwoTensor::zero(3);
        assert!(coboundary_comultiplication(&a3().alg, &z).unwrap().is_zero());
        assert!(check_avg_ybe(&a3(), &a3_beta(), &z).unwrap().passed());
        assert!(check_coboundary_conditions(&a3(), &a3_beta(), &z).unwrap().passed());
    }

    #[test]
    fn antisymmetric_solution_passes() {
        let rep = check_avg_ybe(&a3(), &a3_beta(), &anti()).unwrap();
        assert!(rep.passed(), "{rep}");
        assert_eq!(rep.kind, "beta-YBE");
        let rep = check_coboundary_conditions(&a3(), &a3_beta(), &anti()).unwrap();
        assert!(rep.passed(), "{rep}");
    }

    #[test]
    fn sharp_map_of_antisymmetric_r() {
        let (sharp, natural) = r_maps(&anti());
        assert_eq!(sharp.column(1), vec![scalar::zero(), scalar::zero(), scalar::one()]);
        assert_eq!(sharp.column(2), vec![scalar::zero(), scalar::int(-1), scalar::zero()]);
        assert_eq!(sharp, natural);
    }

    #[test]
    fn symmetric_natural_map_is_negated_sharp() {
        let r = TwoTensor::from_entries(2, &[(0, 1, 1), (1, 0, 1), (1, 1, 3)]);
        let (sharp, natural) = r_maps(&r);
        assert_eq!(natural, -&sharp);
    }

    #[test]
    fn identity_is_o_operator_on_left_module() {
        let a = a3();
        let n = a.dim();
        let bm = AveragingBimodule {
            base: a.clone(),
            lact: (0..n).map(|i| a.mul().left_basis(i)).collect(),
            ract: vec![Matrix::zeros(n, n); n],
            beta: a.alpha.clone(),
        };
        let data = OOperatorData::new(bm.clone(), Matrix::identity(n)).unwrap();
        assert!(verify_o_operator(&data, None).unwrap().passed());
        let d = dendriform_from_o_operator(&data).unwrap();
        assert_eq!(d.succ, *a.mul());
        assert!(d.prec.is_zero());
        let w = scalar::one();
        assert!(matches!(verify_o_operator(&data, Some(&w)), Err(Error::Usage(_))));
    }

    #[test]
    fn perm_and_classical_zero_cases() {
        let p = PermAlgebra { mul: Tensor3::zeros(2) };
        let r = TwoTensor::from_entries(2, &[(0, 1, 1), (1, 1, 2)]);
        assert!(check_perm_ybe(&p, &r).unwrap().passed());
        let l = LieAlgebra { bracket: Tensor3::zeros(2) };
        assert!(check_cybe(&l, &r).unwrap().passed());
    }

    #[test]
    fn lift_uses_omega_dual_basis() {
        let perm = PermAlgebra { mul: Tensor3::from_entries(3, &[(0, 0, 2, 1), (1, 0, 2, 1)]) };
        let q = PreLieQuadratic {
            circ: Tensor3::from_entries(2, &[(0, 1, 0, 1), (1, 1, 1, 1)]),
            omega: Matrix::from_rows(&[&[0, 1], &[-1, 0]]),
        };
        let r = TwoTensor::from_entries(3, &[(2, 2, 1)]);
        let lifted = lift_r_to_lie(&perm, &q, &r).unwrap();
        assert_eq!(lifted, TwoTensor::from_entries(6, &[(4, 5, 1), (5, 4, -1)]));
        let lie = structures::tensor_lie(&perm, &q).unwrap();
        assert!(check_cybe(&lie, &lifted).unwrap().passed());
    }

    #[test]
    fn degenerate_omega_is_rejected() {
        let perm = PermAlgebra { mul: Tensor3::zeros(1) };
        let q = PreLieQuadratic { circ: Tensor3::zeros(1), omega: Matrix::zeros(1, 1) };
        let r = TwoTensor::zero(1);
        assert!(matches!(lift_r_to_lie(&perm, &q, &r), Err(Error::DegenerateForm)));
    }
}
