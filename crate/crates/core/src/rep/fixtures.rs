//! Ready-made example algebras used across the test suites and docs.

use crate::algebra::{build_algebra, AlgebraHandle, Quiver, Relation};
use crate::linalg::FieldSpec;
use std::sync::Arc;

/// The A2 quiver 1 -a-> 2, no relations.
pub fn a2(field: FieldSpec) -> Arc<AlgebraHandle> {
    let q = Quiver::new(
        vec!["1".into(), "2".into()],
        vec![("a".into(), "1".into(), "2".into())],
    )
    .unwrap();
    Arc::new(build_algebra(field, q, vec![]).unwrap())
}

/// The A3 quiver 1 -a-> 2 -b-> 3 with the relation ab = 0.
pub fn a3r2(field: FieldSpec) -> Arc<AlgebraHandle> {
    let q = Quiver::new(
        vec!["1".into(), "2".into(), "3".into()],
        vec![
            ("a".into(), "1".into(), "2".into()),
            ("b".into(), "2".into(), "3".into()),
        ],
    )
    .unwrap();
    let rel = Relation::new(&q, vec![(field.one(), vec![0, 1])]).unwrap();
    Arc::new(build_algebra(field, q, vec![rel]).unwrap())
}

/// Two vertices, no arrows: a semisimple algebra k x k.
pub fn semisimple2(field: FieldSpec) -> Arc<AlgebraHandle> {
    let q = Quiver::new(vec!["1".into(), "2".into()], vec![]).unwrap();
    Arc::new(build_algebra(field, q, vec![]).unwrap())
}

/// One vertex with a loop x and the relation x^n = 0 (n >= 2).
pub fn loop_nilpotent(field: FieldSpec, n: usize) -> Arc<AlgebraHandle> {
    assert!(n >= 2);
    let q = Quiver::new(
        vec!["1".into()],
        vec![("x".into(), "1".into(), "1".into())],
    )
    .unwrap();
    let rel = Relation::new(&q, vec![(field.one(), vec![0; n])]).unwrap();
    Arc::new(build_algebra(field, q, vec![rel]).unwrap())
}
