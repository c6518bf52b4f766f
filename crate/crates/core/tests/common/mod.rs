//! Shared fixture builders for the integration suites.

use nct_core::algebra::AlgebraHandle;
use nct_core::linalg::FieldSpec;
use nct_core::radical::{build_ladder, RadicalLadder, Subcategory};
use nct_core::rep::{fixtures, Representation};
use nct_core::rng::{seeded, WorkRng};
use std::sync::Arc;

pub fn f101() -> FieldSpec {
    FieldSpec::prime(101).unwrap()
}

pub fn f2() -> FieldSpec {
    FieldSpec::prime(2).unwrap()
}

/// The three indecomposables of A2 over F_101, listed {S_1, S_2, P_1}.
pub fn a2_objects(alg: &Arc<AlgebraHandle>) -> Vec<Arc<Representation>> {
    vec![
        Arc::new(alg.simple(0)),
        Arc::new(alg.simple(1)),
        Arc::new(alg.projective(0)),
    ]
}

/// The five indecomposables of A3 with ab = 0, listed
/// {S_1, S_2, S_3, P_1, P_2}.
pub fn a3r2_objects(alg: &Arc<AlgebraHandle>) -> Vec<Arc<Representation>> {
    vec![
        Arc::new(alg.simple(0)),
        Arc::new(alg.simple(1)),
        Arc::new(alg.simple(2)),
        Arc::new(alg.projective(0)),
        Arc::new(alg.projective(1)),
    ]
}

/// The 2-cluster tilting list add(proj + inj) = {P_1, P_2, P_3, I_1}.
pub fn a3r2_ct2_objects(alg: &Arc<AlgebraHandle>) -> Vec<Arc<Representation>> {
    vec![
        Arc::new(alg.projective(0)),
        Arc::new(alg.projective(1)),
        Arc::new(alg.projective(2)),
        Arc::new(alg.injective(0).unwrap()),
    ]
}

pub struct Fixture {
    pub sub: Arc<Subcategory>,
    pub ladder: RadicalLadder,
}

pub fn fixture(name: &'static str, rng: &mut WorkRng) -> Fixture {
    let (alg, objects, n) = match name {
        "a2" => {
            let alg = fixtures::a2(f101());
            let objs = a2_objects(&alg);
            (alg, objs, 1)
        }
        "a3r2" => {
            let alg = fixtures::a3r2(f101());
            let objs = a3r2_objects(&alg);
            (alg, objs, 1)
        }
        "a3r2-ct2" => {
            let alg = fixtures::a3r2(f101());
            let objs = a3r2_ct2_objects(&alg);
            (alg, objs, 2)
        }
        _ => panic!("unknown fixture {name}"),
    };
    let sub = Arc::new(Subcategory::new(alg, objects, Some(n), true, rng).unwrap());
    let ladder = build_ladder(Arc::clone(&sub)).unwrap();
    Fixture { sub, ladder }
}

pub fn rng() -> WorkRng {
    seeded(20260809)
}
