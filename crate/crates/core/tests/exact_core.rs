mod common;

use avgbi_core::scalar::{self, int};
use avgbi_core::tensor::ybe_triple;
use avgbi_core::{Matrix, Tensor3, TwoTensor, Q};
use common::*;
use num_traits::Zero;
use proptest::prelude::*;

/// Direct expansion of `r₁₂r₁₃ + r₁₃r₂₃ − r₂₃r₁₂` coordinate by coordinate.
fn naive_triple(m: &Tensor3, r: &TwoTensor) -> Tensor3 {
    let n = m.dim();
    Tensor3::from_fn(n, |p, q, s| {
        let mut acc = Q::zero();
        for a in 0..n {
            for c in 0..n {
                acc += r.get(a, q) * r.get(c, s) * m.get(a, c, p);
            }
        }
        for b in 0..n {
            for d in 0..n {
                acc += r.get(p, b) * r.get(q, d) * m.get(b, d, s);
            }
        }
        for a in 0..n {
            for d in 0..n {
                acc -= r.get(a, s) * r.get(p, d) * m.get(a, d, q);
            }
        }
        acc
    })
}

fn table_and_r(max_dim: usize, lo: i64, hi: i64) -> impl Strategy<Value = (Tensor3, TwoTensor)> {
    (1..=max_dim).prop_flat_map(move |n| {
        (
            prop::collection::vec(lo..=hi, n * n * n),
            prop::collection::vec(lo..=hi, n * n),
        )
            .prop_map(move |(t, r)| (tensor_from(n, &t), two_tensor_from(n, &r)))
    })
}

fn square_matrix(max_dim: usize) -> impl Strategy<Value = Matrix> {
    (1..=max_dim).prop_flat_map(|n| {
        prop::collection::vec(-3i64..=3, n * n).prop_map(move |v| matrix_from(n, n, &v))
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn triple_matches_direct_expansion((m, r) in table_and_r(4, -2, 2)) {
        prop_assert_eq!(ybe_triple(&m, &r).unwrap(), naive_triple(&m, &r));
    }

    #[test]
    fn symmetric_split_recombines((_, r) in table_and_r(4, -3, 3)) {
        let (s, a) = r.sym_split();
        prop_assert_eq!(s.flip(), s.clone());
        prop_assert_eq!(a.flip(), a.scale(&int(-1)));
        prop_assert_eq!(s.plus(&a), r);
    }

    #[test]
    fn inverse_is_two_sided(m in square_matrix(4)) {
        if let Ok(inv) = m.inverse() {
            let n = m.rows();
            prop_assert_eq!(&inv * &m, Matrix::identity(n));
            prop_assert_eq!(&m * &inv, Matrix::identity(n));
        } else {
            prop_assert!(m.rank() < m.rows());
            let v = m.kernel_vector().unwrap();
            prop_assert!(!scalar::is_zero_vec(&v));
            prop_assert!(scalar::is_zero_vec(&m.apply(&v)));
        }
    }

    #[test]
    fn two_tensor_map_composes((_, r) in table_and_r(3, -2, 2), f in prop::collection::vec(-2i64..=2, 9), g in prop::collection::vec(-2i64..=2, 9)) {
        let n = r.dim();
        let f = matrix_from(3, 3, &f);
        let g = matrix_from(3, 3, &g);
        let f = Matrix::from_fn(n, n, |i, j| f[(i, j)].clone());
        let g = Matrix::from_fn(n, n, |i, j| g[(i, j)].clone());
        let mapped = r.map(&f, &g);
        // (F⊗G)(Σ r_ab e_a⊗e_b) expanded by hand.
        let expect = Matrix::from_fn(n, n, |p, q| {
            let mut acc = Q::zero();
            for a in 0..n {
                for b in 0..n {
                    acc += r.get(a, b) * &f[(p, a)] * &g[(q, b)];
                }
            }
            acc
        });
        prop_assert_eq!(mapped.coeff(), &expect);
    }
}

#[test]
fn triple_matches_direct_expansion_exhaustively_in_dim_two() {
    let tables = [two_dim_mul(), unital_mul(2), Tensor3::from_entries(2, &[(0, 0, 1, 1), (1, 0, 0, -1)])];
    for m in &tables {
        for v in all_vectors(4, &[-1, 0, 1]) {
            let r = two_tensor_from(2, &v);
            assert_eq!(ybe_triple(m, &r).unwrap(), naive_triple(m, &r));
        }
    }
}

#[test]
fn triple_rejects_mismatched_dimensions() {
    assert!(ybe_triple(&Tensor3::zeros(2), &TwoTensor::zero(3)).is_err());
}

#[test]
fn parse_and_format_round_trip() {
    for s in ["0", "1", "-1", "3/4", "-7/2"] {
        assert_eq!(scalar::format(&scalar::parse(s).unwrap()), s);
    }
    assert_eq!(scalar::format(&scalar::parse("6/4").unwrap()), "3/2");
    assert!(scalar::parse("1/0").is_none());
    assert!(scalar::parse("x").is_none());
}
