//! Property tests for the exact linear algebra kernel.

use nct_core::linalg::{FieldSpec, Matrix, Scalar, Subspace};
use proptest::prelude::*;

fn f101() -> FieldSpec {
    FieldSpec::prime(101).unwrap()
}

fn small_matrix(field: FieldSpec) -> impl Strategy<Value = Matrix> {
    (0usize..5, 0usize..5).prop_flat_map(move |(r, c)| {
        proptest::collection::vec(0i64..101, r * c)
            .prop_map(move |data| Matrix::from_ints(field, r, c, &data))
    })
}

fn rational_matrix() -> impl Strategy<Value = Matrix> {
    (0usize..4, 0usize..4).prop_flat_map(|(r, c)| {
        proptest::collection::vec((-9i64..=9, 1i64..=5), r * c).prop_map(move |data| {
            let f = FieldSpec::Rational;
            let entries: Vec<Scalar> = data
                .iter()
                .map(|(n, d)| f.parse_scalar(&format!("{n}/{d}")).unwrap())
                .collect();
            Matrix::from_entries(f, r, c, entries)
        })
    })
}

proptest! {
    #[test]
    fn rank_nullity_over_f101(m in small_matrix(FieldSpec::prime(101).unwrap())) {
        prop_assert_eq!(m.rank() + m.kernel().dim(), m.cols());
    }

    #[test]
    fn rank_nullity_over_q(m in rational_matrix()) {
        prop_assert_eq!(m.rank() + m.kernel().dim(), m.cols());
    }

    #[test]
    fn rref_is_idempotent(m in small_matrix(FieldSpec::prime(101).unwrap())) {
        let (r1, p1) = m.rref();
        let (r2, p2) = r1.rref();
        prop_assert_eq!(r1, r2);
        prop_assert_eq!(p1, p2);
    }

    #[test]
    fn kernel_vectors_are_killed(m in rational_matrix()) {
        let k = m.kernel();
        for v in k.basis_rows() {
            let col = Matrix::col_vector(FieldSpec::Rational, v);
            prop_assert!(m.matmul(&col).unwrap().is_zero());
        }
    }

    #[test]
    fn grassmann_identity(a in small_matrix(FieldSpec::prime(101).unwrap()),
                          b in small_matrix(FieldSpec::prime(101).unwrap())) {
        // row spaces in a common ambient dimension
        let ambient = 4usize;
        let pad = |m: &Matrix| {
            let rows: Vec<Vec<Scalar>> = (0..m.rows())
                .map(|r| {
                    let mut row: Vec<Scalar> =
                        m.row(r).iter().cloned().collect();
                    row.truncate(ambient);
                    while row.len() < ambient {
                        row.push(f101().zero());
                    }
                    row
                })
                .collect();
            Subspace::from_rows(f101(), ambient, rows)
        };
        let sa = pad(&a);
        let sb = pad(&b);
        let sum = sa.sum(&sb).unwrap();
        let inter = sa.intersect(&sb).unwrap();
        prop_assert_eq!(sa.dim() + sb.dim(), sum.dim() + inter.dim());
        prop_assert!(sum.contains(&sa) && sum.contains(&sb));
        prop_assert!(sa.contains(&inter) && sb.contains(&inter));
    }

    #[test]
    fn solve_produces_solutions(m in small_matrix(FieldSpec::prime(101).unwrap()),
                                xs in proptest::collection::vec(0i64..101, 0..5)) {
        // build a consistent system: b = m * x
        if xs.len() == m.cols() {
            let x = Matrix::from_ints(f101(), m.cols(), 1,
                &xs.iter().copied().collect::<Vec<_>>());
            let b = m.matmul(&x).unwrap();
            let sol = m.solve(&b).unwrap().expect("consistent by construction");
            prop_assert_eq!(m.matmul(&sol).unwrap(), b);
        }
    }
}
