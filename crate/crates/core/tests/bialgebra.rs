mod common;

use avgbi_core::bialgebra::*;
use avgbi_core::scalar::int;
use avgbi_core::structures::{induce_perm, verify_associative, verify_averaging, verify_commutative, verify_perm, AveragingAlgebra};
use avgbi_core::{Matrix, Tensor3, TwoTensor, Q};
use common::*;
use std::sync::OnceLock;
use num_traits::Zero;

fn report(kind: BialgebraKind, b: &AsiBialgebraData) -> bool {
    verify_bialgebra(kind, BialgebraData::Asi(b)).unwrap().passed()
}

fn double_data(mp: &MatchedPairData) -> DoubleData {
    let (algebra, form) = bowtie_unchecked(mp);
    DoubleData { algebra, form: form.unwrap(), split: mp.alg_a.dim() }
}

fn mp_passes(mp: &MatchedPairData) -> bool {
    verify_bialgebra(BialgebraKind::MatchedPairAveraging, BialgebraData::MatchedPair(mp)).unwrap().passed()
}

fn double_passes(mp: &MatchedPairData) -> bool {
    let d = double_data(mp);
    verify_bialgebra(BialgebraKind::DoubleConstruction, BialgebraData::Double(&d)).unwrap().passed()
}

fn zero_bialgebra(n: usize) -> AsiBialgebraData {
    AsiBialgebraData::new(Tensor3::zeros(n), Tensor3::zeros(n), Matrix::zeros(n, n), Matrix::zeros(n, n)).unwrap()
}

fn passing_fixtures() -> Vec<AsiBialgebraData> {
    vec![bia2(), a3_bialgebra(), c3_bialgebra(), zero_bialgebra(1), zero_bialgebra(2)]
}

/// Quadruples `(A, Δ, α, β)` in dimension one with entries in {−1, 0, 1},
/// plus a sample in dimension two.
fn candidate_quadruples() -> Vec<AsiBialgebraData> {
    let mut out: Vec<AsiBialgebraData> = all_vectors(4, &[-1, 0, 1])
        .into_iter()
        .map(|v| {
            AsiBialgebraData::new(
                Tensor3::from_entries(1, &[(0, 0, 0, v[0])]),
                Tensor3::from_entries(1, &[(0, 0, 0, v[1])]),
                Matrix::from_rows(&[&[v[2]]]),
                Matrix::from_rows(&[&[v[3]]]),
            )
            .unwrap()
        })
        .collect();
    let muls = [unital_mul(2), two_dim_mul()];
    let comuls = [
        Tensor3::zeros(2),
        Tensor3::from_entries(2, &[(1, 1, 1, 1)]),
        dual_coproduct(&unital_mul(2)),
        Tensor3::from_entries(2, &[(0, 0, 0, 1), (1, 1, 0, 1)]),
    ];
    let ops = all_vectors(4, &[-1, 0, 1]);
    let mut idx = 0usize;
    for m in &muls {
        for c in &comuls {
            for a in &ops {
                for b in &ops {
                    idx += 1;
                    if idx % 5 != 0 {
                        continue;
                    }
                    out.push(AsiBialgebraData::new(m.clone(), c.clone(), matrix_from(2, 2, a), matrix_from(2, 2, b)).unwrap());
                }
            }
        }
    }
    out.extend(passing_fixtures());
    out.push(bad_bialgebra());
    out
}

#[test]
fn bialgebra_matched_pair_and_double_verdicts_agree() {
    let mut seen = [0usize; 2];
    for b in candidate_quadruples() {
        let asi = report(BialgebraKind::AveragingAsi, &b);
        let mp = matched_pair_from_bialgebra_unchecked(&b);
        assert_eq!(mp_passes(&mp), asi, "{b:?}");
        assert_eq!(double_passes(&mp), asi, "{b:?}");
        seen[asi as usize] += 1;
    }
    assert!(seen[0] > 0 && seen[1] > 10, "{seen:?}");
}

#[test]
fn checked_constructors_follow_the_verdict() {
    for b in passing_fixtures() {
        let mp = matched_pair_from_bialgebra(&b).unwrap();
        let (alg, form) = bowtie(&mp).unwrap();
        assert_eq!(alg.dim(), 2 * b.dim());
        assert!(form.is_some());
    }
    let bad = bad_bialgebra();
    assert!(matched_pair_from_bialgebra(&bad).is_err());
    assert!(bowtie(&matched_pair_from_bialgebra_unchecked(&bad)).is_err());
}

#[test]
fn coalgebra_operator_failure_on_printed_quadruple() {
    let b = bad_bialgebra();
    let rep = verify_bialgebra(BialgebraKind::AveragingCoalgebra, BialgebraData::Asi(&b)).unwrap();
    assert!(!rep.passes("AVGCO-1a"));
    let w = rep.witness("AVGCO-1a").unwrap();
    assert_eq!(w.indices, vec![0]);
    // (β⊗β)Δ(e₁) = e₂⊗e₂ and (β⊗id)Δβ(e₁) = (β⊗id)(e₂⊗e₁) = 0.
    let mut lhs = vec![Q::zero(); 4];
    lhs[3] = int(1);
    assert_eq!(w.lhs, lhs);
    assert_eq!(w.rhs, vec![Q::zero(); 4]);
}

#[test]
fn frobenius_intertwiner_on_doubles() {
    for b in passing_fixtures() {
        let mp = matched_pair_from_bialgebra(&b).unwrap();
        let d = double_data(&mp);
        let form_rep = verify_bialgebra(BialgebraKind::FrobeniusForm, BialgebraData::Frobenius(&d.algebra.alg, &d.form)).unwrap();
        assert!(form_rep.passed(), "{:?}", form_rep.failed_ids());
        let rep = frobenius_intertwiner(&d.algebra, &d.form).unwrap();
        assert!(rep.passed(), "{:?}", rep.failed_ids());
    }
}

#[test]
fn adjoint_of_double_operator_is_the_other_operator() {
    for b in passing_fixtures() {
        let (dbl, _) = double_bialgebra(&b).unwrap();
        let form = BilinearForm::symmetric_pairing(b.dim());
        assert_eq!(adjoint_operator(&dbl.alpha, &form).unwrap(), dbl.beta);
        assert_eq!(dbl.alpha, b.alpha.direct_sum(&b.beta.transpose()));
        let n = dbl.dim();
        for i in 0..n {
            for j in 0..n {
                let (ei, ej) = (avgbi_core::scalar::unit(n, i), avgbi_core::scalar::unit(n, j));
                assert_eq!(form.value(&dbl.alpha.apply(&ei), &ej), form.value(&ei, &dbl.beta.apply(&ej)));
            }
        }
    }
}

#[test]
fn adjoint_trivial_cases() {
    let form = BilinearForm::new(Matrix::identity(3)).unwrap();
    assert_eq!(adjoint_operator(&Matrix::identity(3), &form).unwrap(), Matrix::identity(3));
    let sym = Matrix::from_rows(&[&[1, 2, 0], &[2, -1, 3], &[0, 3, 5]]);
    assert_eq!(adjoint_operator(&sym, &form).unwrap(), sym);
    let degenerate = BilinearForm::new(Matrix::zeros(3, 3)).unwrap();
    assert!(adjoint_operator(&sym, &degenerate).is_err());
}

#[test]
fn canonical_r_intertwines_the_operators() {
    for b in passing_fixtures() {
        let (dbl, r) = double_bialgebra(&b).unwrap();
        let n = dbl.dim();
        let id = Matrix::identity(n);
        assert!(r.map(&dbl.alpha, &id).minus(&r.map(&id, &dbl.beta)).is_zero());
        let rep = verify_averaging_asi(&dbl).unwrap();
        assert!(rep.passed(), "{:?}", rep.failed_ids());
    }
}

#[test]
fn double_of_three_dimensional_bialgebra_matches_printed_entries() {
    let (dbl, r) = double_bialgebra(&a3_bialgebra()).unwrap();
    assert_eq!(dbl.dim(), 6);
    assert_eq!(r, TwoTensor::from_entries(6, &[(0, 3, 1), (1, 4, 1), (2, 5, 1)]));
    assert_eq!(dbl.mul.basis_product(0, 0), &avgbi_core::scalar::unit(6, 0)[..]);
    assert_eq!(dbl.mul.basis_product(1, 4), &avgbi_core::scalar::unit(6, 3)[..]);
    assert_eq!(dbl.mul.basis_product(4, 1), &avgbi_core::scalar::unit(6, 3)[..]);
    assert_eq!(dbl.comul.slice(3), TwoTensor::from_entries(6, &[(3, 3, -1)]).into_coeff());
    assert_eq!(dbl.comul.slice(0), TwoTensor::from_entries(6, &[(1, 2, -1), (2, 1, -1)]).into_coeff());
}

#[test]
fn dualized_bialgebra_passes_and_double_dual_negates() {
    for b in passing_fixtures() {
        let d = dualize_bialgebra(&b).unwrap();
        let rep = verify_averaging_asi(&d).unwrap();
        assert!(rep.passed(), "{:?}", rep.failed_ids());
        let dd = dualize_bialgebra(&d).unwrap();
        assert_eq!(dd.mul, b.mul.scale(&int(-1)));
        assert_eq!(dd.comul, b.comul.scale(&int(-1)));
        assert_eq!(dd.alpha, b.alpha);
        assert_eq!(dd.beta, b.beta);
    }
    assert!(dualize_bialgebra(&bad_bialgebra()).is_err());
}

fn comm_assoc_tables(n: usize) -> Vec<Tensor3> {
    all_vectors(n * n * n, &[-1, 0, 1])
        .into_iter()
        .map(|v| tensor_from(n, &v))
        .filter(|t| verify_commutative(t).passed() && verify_associative(t).passed())
        .collect()
}

fn averaging_ops(t: &Tensor3) -> Vec<Matrix> {
    let n = t.dim();
    all_vectors(n * n, &[-1, 0, 1])
        .into_iter()
        .map(|v| matrix_from(n, n, &v))
        .filter(|a| verify_averaging(&AveragingAlgebra::new(t.clone(), a.clone()).unwrap()).passed())
        .collect()
}

/// Commutative cocommutative averaging ASI bialgebras of dimension at most
/// two with entries in {−1, 0, 1}. In dimension two every thirteenth
/// product and coproduct pair is kept, with at most about 60 operator pairs
/// each.
fn commutative_bialgebras() -> &'static [AsiBialgebraData] {
    static CACHE: OnceLock<Vec<AsiBialgebraData>> = OnceLock::new();
    CACHE.get_or_init(|| {
        let mut out = Vec::new();
        for n in 1..=2 {
            let tables = comm_assoc_tables(n);
            let ops: Vec<Vec<Matrix>> = tables.iter().map(averaging_ops).collect();
            for (i, m) in tables.iter().enumerate() {
                for (j, dm) in tables.iter().enumerate() {
                    if n == 2 && (i * tables.len() + j) % 13 != 0 {
                        continue;
                    }
                    let comul = dual_coproduct(dm);
                    let plain = AsiBialgebraData::new(m.clone(), comul.clone(), Matrix::zeros(n, n), Matrix::zeros(n, n)).unwrap();
                    if !report(BialgebraKind::Asi, &plain) {
                        continue;
                    }
                    let pairs: Vec<(&Matrix, &Matrix)> =
                        ops[i].iter().flat_map(|a| ops[j].iter().map(move |b| (a, b))).collect();
                    let step = pairs.len().div_ceil(60).max(1);
                    for (a, bt) in pairs.into_iter().step_by(step) {
                        let b = AsiBialgebraData::new(m.clone(), comul.clone(), a.clone(), bt.transpose()).unwrap();
                        if report(BialgebraKind::AveragingAsi, &b) {
                            out.push(b);
                        }
                    }
                }
            }
        }
        out
    })
}

#[test]
fn induced_perm_matched_pair_is_dual_action_pair_exactly_under_the_gate() {
    let all = commutative_bialgebras();
    let mut seen = [0usize; 2];
    for b in all {
        let mp = matched_pair_from_bialgebra(b).unwrap();
        let induced = induce_perm_matched_pair(&mp).unwrap();
        let pa = induce_perm(&mp.alg_a).unwrap();
        let pb = induce_perm(&mp.alg_b).unwrap();
        let reference = dual_action_perm_matched_pair(&pa, &pb);
        let gate = compa_report(b).unwrap();
        let holds = gate.passes("COMPA-1") && gate.passes("COMPA-2");
        assert_eq!(induced == reference, holds, "{b:?}");
        assert!(induced.verify().passed());
        seen[holds as usize] += 1;
    }
    assert!(seen[0] > 0 && seen[1] > 0, "{seen:?}");
}

#[test]
fn induced_perm_bialgebras_pass_the_perm_suites() {
    let mut induced = 0;
    for b in commutative_bialgebras() {
        match induce_perm_bialgebra(b).unwrap() {
            PermInduction::Induced { bialgebra, report } => {
                induced += 1;
                assert!(report.passed(), "{:?}", report.failed_ids());
                let rep = verify_perm_bialgebra(&bialgebra);
                assert!(rep.passed(), "{:?}", rep.failed_ids());
                let (_, _, manin) = perm_manin_triple(&bialgebra).unwrap();
                assert!(manin.passed(), "{:?}", manin.failed_ids());
            }
            PermInduction::GateFailure(rep) => {
                assert!(!(rep.passes("COMPA-1") && rep.passes("COMPA-2")));
            }
        }
    }
    assert!(induced > 0);
}

#[test]
fn gate_failure_on_two_dimensional_bialgebra() {
    let PermInduction::GateFailure(rep) = induce_perm_bialgebra(&bia2()).unwrap() else {
        panic!("gate should fail");
    };
    let w = rep.witness("COMPA-1").unwrap();
    assert_eq!(w.indices, vec![1, 0]);
    assert_eq!(w.lhs, vec![int(0), int(1)]);
    assert_eq!(w.rhs, vec![int(0), int(-1)]);
}

#[test]
fn trivial_induced_perm_bialgebra_of_commutative_example() {
    let PermInduction::Induced { bialgebra, .. } = induce_perm_bialgebra(&c3_bialgebra()).unwrap() else {
        panic!("gate should hold");
    };
    assert!(bialgebra.mul.is_zero());
    assert!(bialgebra.comul.is_zero());
    let (alg, form, rep) = perm_manin_triple(&bialgebra).unwrap();
    assert!(rep.passed());
    assert!(alg.mul.is_zero());
    assert_eq!(form, BilinearForm::antisymmetric_pairing(3));
}

fn perm_tables(n: usize) -> Vec<Tensor3> {
    all_vectors(n * n * n, &[-1, 0, 1]).into_iter().map(|v| tensor_from(n, &v)).filter(|t| verify_perm(t).passed()).collect()
}

#[test]
fn perm_bialgebra_matched_pair_and_manin_verdicts_agree() {
    let mut cases = Vec::new();
    for c in all_vectors(2, &[-1, 0, 1]) {
        cases.push(PermBialgebraData {
            mul: Tensor3::from_entries(1, &[(0, 0, 0, c[0])]),
            comul: Tensor3::from_entries(1, &[(0, 0, 0, c[1])]),
        });
    }
    let perms = perm_tables(2);
    for (i, m) in perms.iter().enumerate() {
        for (j, v) in all_vectors(8, &[-1, 0, 1]).into_iter().enumerate() {
            if (i * 7 + j) % 23 == 0 {
                cases.push(PermBialgebraData { mul: m.clone(), comul: tensor_from(2, &v) });
            }
        }
        for dm in &perms {
            cases.push(PermBialgebraData { mul: m.clone(), comul: dual_coproduct(dm) });
        }
    }
    let mut seen = [0usize; 2];
    for pb in &cases {
        let bi = verify_bialgebra(BialgebraKind::PermBialgebra, BialgebraData::Perm(pb)).unwrap().passed();
        let mp = perm_matched_pair_from_bialgebra(pb).verify().passed();
        let (_, _, manin) = perm_manin_triple_unchecked(pb);
        assert_eq!(mp, bi, "{pb:?}");
        assert_eq!(manin.passed(), bi, "{pb:?}");
        seen[bi as usize] += 1;
    }
    assert!(seen[0] > 0 && seen[1] > 0, "{seen:?}");
}

#[test]
fn dim_one_zero_perm_bialgebra_gives_abelian_triple() {
    let pb = PermBialgebraData { mul: Tensor3::zeros(1), comul: Tensor3::zeros(1) };
    let (alg, form, rep) = perm_manin_triple(&pb).unwrap();
    assert!(rep.passed());
    assert!(alg.mul.is_zero());
    assert_eq!(form.b, Matrix::from_rows(&[&[0, 1], &[-1, 0]]));
}

