mod common;

use avgbi_core::bialgebra::{adjoint_operator, double_bialgebra, AsiBialgebraData, BilinearForm};
use avgbi_core::factorizable::*;
use avgbi_core::scalar::{frac, int, unit};
use avgbi_core::structures::{verify_averaging, Algebra, AveragingAlgebra};
use avgbi_core::ybe::{check_avg_ybe, r_maps, r_product};
use avgbi_core::{Matrix, Tensor3, TwoTensor, Q};
use common::*;
use num_traits::Zero;
use proptest::prelude::*;

fn zero_bialgebra(n: usize) -> AsiBialgebraData {
    AsiBialgebraData::new(Tensor3::zeros(n), Tensor3::zeros(n), Matrix::zeros(n, n), Matrix::zeros(n, n)).unwrap()
}

fn bialgebra_fixtures() -> Vec<AsiBialgebraData> {
    vec![zero_bialgebra(1), bia2(), a3_bialgebra(), c3_bialgebra()]
}

fn doubles() -> Vec<FactorizableData> {
    bialgebra_fixtures()
        .iter()
        .map(|b| {
            let (d, r) = double_bialgebra(b).unwrap();
            match classify_r(&d.averaging_algebra(), &d.beta, &r).unwrap() {
                Classification::Factorizable(f) => *f,
                other => panic!("double classified as {}", other.name()),
            }
        })
        .collect()
}

fn weights() -> [Q; 4] {
    [int(1), int(-1), int(2), frac(1, 2)]
}

/// `t♯(𝔯*(e_a)ξ) = e_a·t♯(ξ)` on all basis pairs, expanded coordinatewise.
fn sharp_intertwines(alg: &Algebra, t: &TwoTensor) -> bool {
    let n = alg.dim();
    let m = &alg.mul;
    for a in 0..n {
        for k in 0..n {
            let mut lhs = vec![Q::zero(); n];
            let mut rhs = vec![Q::zero(); n];
            for i in 0..n {
                for j in 0..n {
                    lhs[j] += t.get(i, j) * m.get(i, a, k);
                }
            }
            for j in 0..n {
                for s in 0..n {
                    rhs[s] += t.get(k, j) * m.get(a, j, s);
                }
            }
            if lhs != rhs {
                return false;
            }
        }
    }
    true
}

fn two_and_three_dim_algebras() -> Vec<(AveragingAlgebra, Matrix)> {
    let mut out = vec![a3(), c3()];
    for a in [two_dim(&[(1, 1, 1)]), AveragingAlgebra::new(unital_mul(2), op(2, &[(0, 0, 1)])).unwrap()] {
        for beta in [a.alpha.clone(), Matrix::zeros(2, 2), Matrix::identity(2), op(2, &[(1, 1, 1)])] {
            out.push((a.clone(), beta));
        }
    }
    out
}

fn tensors(n: usize) -> Vec<TwoTensor> {
    let step = if n == 2 { 1 } else { 7 };
    all_vectors(n * n, &[-1, 0, 1]).into_iter().step_by(step).map(|v| two_tensor_from(n, &v)).collect()
}

#[test]
fn invariance_matches_sharp_intertwining() {
    let mut seen = [0usize; 2];
    for (a, _) in two_and_three_dim_algebras() {
        for t in tensors(a.dim()) {
            let inv = check_lr_invariant(&a.alg, &t).unwrap().passed();
            assert_eq!(inv, sharp_intertwines(&a.alg, &t), "{t:?}");
            seen[inv as usize] += 1;
        }
    }
    assert!(seen[0] > 0 && seen[1] > 0);
}

#[test]
fn symmetric_part_invariance_matches_i_map_intertwining() {
    for (a, _) in two_and_three_dim_algebras() {
        let n = a.dim();
        for r in tensors(n) {
            let (s, _) = r.sym_split();
            let inv = check_lr_invariant(&a.alg, &s).unwrap().passed();
            let (sharp, natural) = r_maps(&r);
            let i_map = &sharp - &natural;
            let holds = (0..n).all(|i| &i_map * &a.mul().right_basis(i).transpose() == &a.mul().left_basis(i) * &i_map);
            assert_eq!(inv, holds, "{r:?}");
        }
    }
}

/// `(A*, ·_r, β*)` is an averaging algebra and `r♯`, `r♮` are homomorphisms
/// of averaging algebras into `(A, α)`.
fn dual_side_holds(a: &AveragingAlgebra, beta: &Matrix, r: &TwoTensor) -> bool {
    let n = a.dim();
    let prod = r_product(&a.alg, r).unwrap();
    let dual = AveragingAlgebra::new(prod.clone(), beta.transpose()).unwrap();
    if !verify_averaging(&dual).passed() {
        return false;
    }
    let (sharp, natural) = r_maps(r);
    for f in [&sharp, &natural] {
        if f * &beta.transpose() != &a.alpha * f {
            return false;
        }
        for i in 0..n {
            for j in 0..n {
                let lhs = f.apply(prod.basis_product(i, j));
                let rhs = a.mul().product(&f.column(i), &f.column(j));
                if lhs != rhs {
                    return false;
                }
            }
        }
    }
    true
}

#[test]
fn ybe_under_invariance_matches_dual_side() {
    let mut seen = [0usize; 2];
    for (a, beta) in two_and_three_dim_algebras() {
        for r in tensors(a.dim()) {
            let (s, _) = r.sym_split();
            if !check_lr_invariant(&a.alg, &s).unwrap().passed() {
                continue;
            }
            let ybe = check_avg_ybe(&a, &beta, &r).unwrap().passed();
            assert_eq!(ybe, dual_side_holds(&a, &beta, &r), "{a:?} {beta:?} {r:?}");
            seen[ybe as usize] += 1;
        }
    }
    assert!(seen[0] > 0 && seen[1] > 0, "{seen:?}");
}

#[test]
fn doubles_are_factorizable() {
    for f in doubles() {
        assert!(f.report.passed());
        let n = f.algebra.dim() / 2;
        let swap = Matrix::from_fn(2 * n, 2 * n, |i, j| if i == j + n || j == i + n { int(1) } else { Q::zero() });
        assert_eq!(f.i_map, swap);
    }
}

#[test]
fn factorization_on_the_six_dimensional_double() {
    let f = &doubles()[2];
    let (p, m) = factorize_element(f, &unit(6, 0)).unwrap();
    assert_eq!((p, m), (vec![Q::zero(); 6], unit(6, 0)));
    let (p, m) = factorize_element(f, &unit(6, 3)).unwrap();
    assert_eq!((p, m), (unit(6, 3), vec![Q::zero(); 6]));
    let (p, m) = factorize_element(f, &vec![Q::zero(); 6]).unwrap();
    assert!(p.iter().all(Q::is_zero) && m.iter().all(Q::is_zero));
    assert!(factorize_element(f, &unit(5, 0)).is_err());
}

#[test]
fn rota_baxter_round_trip_for_all_weights() {
    for f in doubles() {
        for w in weights() {
            let rb = rb_from_factorizable(&f, &w).unwrap();
            assert!(rb.report.passed(), "{:?}", rb.report.failed_ids());
            let r = factorizable_from_rb(&f.algebra, &rb.form, &rb.operator, &w).unwrap();
            assert_eq!(r, f.r);
            let hat = adjoint_operator(&f.algebra.alpha, &rb.form).unwrap();
            assert!(check_avg_ybe(&f.algebra, &hat, &r).unwrap().passed());
            let again = classify_r(&f.algebra, &f.beta, &r).unwrap();
            let again = again.factorizable().expect("factorizable");
            let rb2 = rb_from_factorizable(again, &w).unwrap();
            assert_eq!((rb2.form, rb2.operator), (rb.form.clone(), rb.operator.clone()));
        }
    }
}

#[test]
fn operator_on_the_six_dimensional_double() {
    let f = &doubles()[2];
    for w in [int(1), int(2)] {
        let rb = rb_from_factorizable(f, &w).unwrap();
        let expect = Matrix::from_fn(6, 6, |i, j| if i == j && i < 3 { -w.clone() } else { Q::zero() });
        assert_eq!(rb.operator, expect);
        assert_eq!(rb.form, BilinearForm::symmetric_pairing(3));
    }
    assert!(rb_from_factorizable(f, &Q::zero()).is_err());
}

#[test]
fn complementary_operator_passes_the_gate() {
    for f in doubles() {
        let n = f.algebra.dim();
        for w in weights() {
            let rb = rb_from_factorizable(&f, &w).unwrap();
            let other = &Matrix::identity(n).scale(&-w.clone()) - &rb.operator;
            let rep = rb_frobenius_report(&f.algebra, &rb.form, &other, &w).unwrap();
            assert!(rep.passed(), "{:?}", rep.failed_ids());
        }
    }
    let a = AveragingAlgebra::new(Tensor3::zeros(2), Matrix::identity(2)).unwrap();
    let form = BilinearForm::symmetric_pairing(1);
    let mut passing = 0;
    for w in [int(1), int(-1), int(2)] {
        for v in all_vectors(4, &[-2, -1, 0, 1, 2]) {
            let r = matrix_from(2, 2, &v);
            if rb_frobenius_report(&a, &form, &r, &w).unwrap().passed() {
                passing += 1;
                let other = &Matrix::identity(2).scale(&-w.clone()) - &r;
                assert!(rb_frobenius_report(&a, &form, &other, &w).unwrap().passed());
            }
        }
    }
    assert!(passing > 0);
}

#[test]
fn degenerate_rota_baxter_operator() {
    let f = &doubles()[2];
    let w = int(1);
    let minus_id = Matrix::identity(6).scale(&-w.clone());
    let form = BilinearForm::symmetric_pairing(3);
    assert!(factorizable_from_rb(&f.algebra, &form, &minus_id, &w).is_err());
    let r = factorizable_from_rb_unchecked(&form, &minus_id, &w).unwrap();
    assert!(r.is_zero());
    let c = classify_r(&f.algebra, &f.beta, &r).unwrap();
    assert!(c.is_quasi_triangular() && c.factorizable().is_none());
}

#[test]
fn twisted_bialgebra_isomorphism_holds() {
    for f in doubles() {
        for w in weights() {
            let t = twisted_bialgebra(&f, &w).unwrap();
            assert!(t.report.passed(), "{:?}", t.report.failed_ids());
            assert_eq!(t.iso, f.i_map.scale(&(Q::from_integer(1.into()) / &w)));
        }
    }
}

#[test]
fn classification_of_small_tensors() {
    let (a, beta) = a3();
    let zero = classify_r(&a, &beta, &TwoTensor::zero(3)).unwrap();
    assert_eq!(zero.name(), "quasi-triangular");
    let anti = classify_r(&a, &beta, &antisym_r()).unwrap();
    assert_eq!(anti.name(), "quasi-triangular");
    let i_map = antisym_r().coeff() + &antisym_r().coeff().transpose();
    assert!(i_map.is_zero());
    let t = TwoTensor::from_entries(3, &[(1, 2, 1)]);
    let rep = check_lr_invariant(&a.alg, &t).unwrap();
    assert_eq!(rep.witness("LRINV-1").unwrap().indices, vec![0]);
    assert!(check_lr_invariant(&a.alg, &TwoTensor::zero(3)).unwrap().passed());
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]

    #[test]
    fn factorization_recombines(v in prop::collection::vec(-5i64..=5, 6)) {
        let f = &doubles()[2];
        let x: Vec<Q> = v.iter().map(|&c| int(c)).collect();
        let (p, m) = factorize_element(f, &x).unwrap();
        let sum: Vec<Q> = p.iter().zip(&m).map(|(a, b)| a + b).collect();
        prop_assert_eq!(sum, x.clone());
        let y = f.i_inv.apply(&x);
        prop_assert_eq!(p, f.sharp().apply(&y));
    }
}
