//! Brute-force ground truth: exhaustive enumeration of indecomposables
//! over tiny prime fields, and radical powers as literal chain spans. Both
//! exist to validate the structural code paths, not to scale.

use crate::algebra::AlgebraHandle;
use crate::error::{Error, Result};
use crate::linalg::{FieldSpec, Matrix, Scalar, Subspace};
use crate::radical::{rad_basis, Subcategory};
use crate::rep::{is_indecomposable, is_isomorphic, ModuleMorphism, Representation};
use crate::rng::WorkRng;
use rand::SeedableRng;
use rayon::prelude::*;
use std::sync::Arc;

pub const DEFAULT_ENUM_BUDGET: usize = 10_000_000;
pub const DEFAULT_MAX_TOTAL_DIM: usize = 6;
pub const DEFAULT_BRUTE_DEPTH: usize = 5;

#[derive(Debug)]
pub struct EnumerationReport {
    pub field: FieldSpec,
    pub max_total_dim: usize,
    pub indecomposables: Vec<Arc<Representation>>,
    pub exhaustive: bool,
    pub candidates_swept: usize,
}

fn dim_vectors(nv: usize, max_total: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = vec![0usize; nv];
    fn rec(cur: &mut Vec<usize>, pos: usize, left: usize, out: &mut Vec<Vec<usize>>) {
        if pos == cur.len() {
            if cur.iter().sum::<usize>() >= 1 {
                out.push(cur.clone());
            }
            return;
        }
        for d in 0..=left {
            cur[pos] = d;
            rec(cur, pos + 1, left - d, out);
        }
        cur[pos] = 0;
    }
    rec(&mut cur, 0, max_total, &mut out);
    out.sort();
    out
}

/// Number of arrow-matrix tuples for one dimension vector: p^(total entries).
fn tuple_count(p: u64, alg: &AlgebraHandle, dims: &[usize]) -> Option<usize> {
    let mut entries = 0usize;
    for a in alg.quiver().arrows() {
        entries = entries.checked_add(dims[a.to].checked_mul(dims[a.from])?)?;
    }
    let mut total: usize = 1;
    for _ in 0..entries {
        total = total.checked_mul(p as usize)?;
    }
    Some(total)
}

fn sweep_dim_vector(
    alg: &Arc<AlgebraHandle>,
    dims: &[usize],
    seed: u64,
) -> Result<Vec<Arc<Representation>>> {
    let field = alg.field();
    let p = field.characteristic();
    let q = alg.quiver();
    let shapes: Vec<(usize, usize)> = q
        .arrows()
        .iter()
        .map(|a| (dims[a.to], dims[a.from]))
        .collect();
    let entries: usize = shapes.iter().map(|(r, c)| r * c).sum();
    let mut rng = WorkRng::seed_from_u64(seed);
    let mut found: Vec<Arc<Representation>> = Vec::new();
    let mut digits = vec![0u64; entries];
    let mut first = true;
    'sweep: loop {
        if !first {
            let mut i = 0;
            loop {
                if i == entries {
                    break 'sweep;
                }
                digits[i] += 1;
                if digits[i] < p {
                    break;
                }
                digits[i] = 0;
                i += 1;
            }
        }
        first = false;
        let mut mats = Vec::with_capacity(shapes.len());
        let mut off = 0;
        for &(r, c) in &shapes {
            let data: Vec<Scalar> = digits[off..off + r * c]
                .iter()
                .map(|&d| field.from_integer(d as i64))
                .collect();
            mats.push(Matrix::from_entries(field, r, c, data));
            off += r * c;
        }
        let Ok(rep) = Representation::new(Arc::clone(alg), dims.to_vec(), mats) else {
            continue; // relations not satisfied
        };
        let rep = Arc::new(rep);
        if !is_indecomposable(&rep, &mut rng)? {
            continue;
        }
        let mut fresh = true;
        for seen in &found {
            if is_isomorphic(seen, &rep, &mut rng)?.is_some() {
                fresh = false;
                break;
            }
        }
        if fresh {
            found.push(rep);
        }
    }
    Ok(found)
}

/// Sweep every dimension vector with total at most `max_total_dim` and every
/// arrow-matrix tuple over F_p (p in {2, 3}), keep the indecomposable ones,
/// and dedupe by isomorphism. Deterministic: parallel sweeps merge in
/// dimension-vector order.
pub fn enumerate_indecomposables(
    alg: &Arc<AlgebraHandle>,
    max_total_dim: usize,
    budget: usize,
    seed: u64,
) -> Result<EnumerationReport> {
    let field = alg.field();
    let p = match field {
        FieldSpec::Prime { p } if p <= 3 => p,
        _ => {
            return Err(Error::InvalidInput(
                "enumeration sweeps need a prime field with p in {2, 3}".into(),
            ))
        }
    };
    let vectors = dim_vectors(alg.quiver().vertex_count(), max_total_dim);
    let mut total: usize = 0;
    for dims in &vectors {
        let n = tuple_count(p, alg, dims)
            .ok_or_else(|| Error::BudgetExceeded("tuple count overflow".into()))?;
        total = total
            .checked_add(n)
            .ok_or_else(|| Error::BudgetExceeded("tuple count overflow".into()))?;
    }
    if total > budget {
        return Err(Error::BudgetExceeded(format!(
            "{total} candidate tuples exceed the budget {budget}"
        )));
    }

    let per_vector: Vec<Result<Vec<Arc<Representation>>>> = vectors
        .par_iter()
        .enumerate()
        .map(|(i, dims)| sweep_dim_vector(alg, dims, seed.wrapping_add(i as u64)))
        .collect();

    let mut rng = WorkRng::seed_from_u64(seed);
    let mut indecomposables: Vec<Arc<Representation>> = Vec::new();
    for result in per_vector {
        for rep in result? {
            let mut fresh = true;
            for seen in &indecomposables {
                if is_isomorphic(seen, &rep, &mut rng)?.is_some() {
                    fresh = false;
                    break;
                }
            }
            if fresh {
                indecomposables.push(rep);
            }
        }
    }
    Ok(EnumerationReport {
        field,
        max_total_dim,
        indecomposables,
        exhaustive: true,
        candidates_swept: total,
    })
}

/// rad^d(X, Y) as the literal span of all composites along length-d object
/// chains through the listed indecomposables, each factor running over a
/// basis of rad^1. Independent of the ladder iteration.
pub fn rad_power_bruteforce(
    sub: &Subcategory,
    x: usize,
    y: usize,
    d: usize,
    budget: usize,
) -> Result<Subspace> {
    assert!(d >= 1);
    let k = sub.len();
    let field = sub.algebra().field();

    // rad^1 morphism bases for every pair
    let mut rad1: Vec<Vec<Vec<ModuleMorphism>>> = Vec::with_capacity(k);
    for i in 0..k {
        let mut row = Vec::with_capacity(k);
        for j in 0..k {
            let space = rad_basis(sub, i, j)?;
            let morphisms = space
                .basis_rows()
                .map(|r| {
                    ModuleMorphism::from_flat(
                        Arc::clone(sub.object(i)),
                        Arc::clone(sub.object(j)),
                        r,
                    )
                })
                .collect::<Result<Vec<_>>>()?;
            row.push(morphisms);
        }
        rad1.push(row);
    }

    let ambient = crate::rep::hom_basis(sub.object(x), sub.object(y))?
        .space()
        .ambient_dim();
    let mut vectors: Vec<Vec<Scalar>> = Vec::new();
    let mut budget_left = budget;

    // walk object chains x = z_0 -> z_1 -> ... -> z_d = y, composing every
    // combination of basis morphisms along the way
    fn walk(
        rad1: &[Vec<Vec<ModuleMorphism>>],
        k: usize,
        z: usize,
        y: usize,
        left: usize,
        partials: &[ModuleMorphism],
        vectors: &mut Vec<Vec<Scalar>>,
        budget_left: &mut usize,
    ) -> Result<()> {
        if left == 0 {
            if z == y {
                for m in partials {
                    vectors.push(m.flatten());
                }
            }
            return Ok(());
        }
        for next in 0..k {
            let step = &rad1[z][next];
            if step.is_empty() {
                continue;
            }
            let mut extended = Vec::with_capacity(partials.len() * step.len());
            for m in partials {
                for g in step {
                    if *budget_left == 0 {
                        return Err(Error::BudgetExceeded(
                            "radical chain sweep budget".into(),
                        ));
                    }
                    *budget_left -= 1;
                    extended.push(g.compose(m)?);
                }
            }
            if !extended.is_empty() {
                walk(rad1, k, next, y, left - 1, &extended, vectors, budget_left)?;
            }
        }
        Ok(())
    }

    let identity = vec![ModuleMorphism::identity(sub.object(x))];
    walk(
        &rad1,
        k,
        x,
        y,
        d,
        &identity,
        &mut vectors,
        &mut budget_left,
    )?;
    Ok(Subspace::from_rows(field, ambient, vectors))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::radical::build_ladder;
    use crate::rep::fixtures;
    use crate::rng;

    #[test]
    fn a2_over_f2_has_exactly_three_indecomposables() {
        let alg = fixtures::a2(FieldSpec::prime(2).unwrap());
        let report = enumerate_indecomposables(&alg, 4, DEFAULT_ENUM_BUDGET, 1).unwrap();
        assert!(report.exhaustive);
        assert_eq!(report.indecomposables.len(), 3);
    }

    #[test]
    fn a3r2_over_f2_has_exactly_five_indecomposables() {
        let alg = fixtures::a3r2(FieldSpec::prime(2).unwrap());
        let report = enumerate_indecomposables(&alg, 4, DEFAULT_ENUM_BUDGET, 1).unwrap();
        assert_eq!(report.indecomposables.len(), 5);
    }

    #[test]
    fn semisimple_enumeration_finds_the_simples() {
        let alg = fixtures::semisimple2(FieldSpec::prime(2).unwrap());
        let report = enumerate_indecomposables(&alg, 3, DEFAULT_ENUM_BUDGET, 1).unwrap();
        assert_eq!(report.indecomposables.len(), 2);
        assert!(report
            .indecomposables
            .iter()
            .all(|r| r.total_dim() == 1));
    }

    #[test]
    fn enumeration_needs_a_tiny_prime_field() {
        let alg = fixtures::a2(FieldSpec::prime(101).unwrap());
        assert!(matches!(
            enumerate_indecomposables(&alg, 3, DEFAULT_ENUM_BUDGET, 1),
            Err(Error::InvalidInput(_))
        ));
    }

    #[test]
    fn budget_exceeded_is_reported() {
        let alg = fixtures::a2(FieldSpec::prime(2).unwrap());
        assert!(matches!(
            enumerate_indecomposables(&alg, 4, 3, 1),
            Err(Error::BudgetExceeded(_))
        ));
    }

    #[test]
    fn brute_force_depth_one_is_rad_basis() {
        let alg = fixtures::a2(FieldSpec::prime(101).unwrap());
        let mut rng = rng::seeded(1);
        let objects = vec![
            Arc::new(alg.simple(0)),
            Arc::new(alg.simple(1)),
            Arc::new(alg.projective(0)),
        ];
        let sub = Subcategory::new(alg, objects, Some(1), true, &mut rng).unwrap();
        for i in 0..3 {
            for j in 0..3 {
                assert_eq!(
                    rad_power_bruteforce(&sub, i, j, 1, 1_000_000).unwrap(),
                    rad_basis(&sub, i, j).unwrap()
                );
            }
        }
    }

    #[test]
    fn brute_force_matches_the_ladder_on_a2() {
        let alg = fixtures::a2(FieldSpec::prime(101).unwrap());
        let mut rng = rng::seeded(1);
        let objects = vec![
            Arc::new(alg.simple(0)),
            Arc::new(alg.simple(1)),
            Arc::new(alg.projective(0)),
        ];
        let sub =
            Arc::new(Subcategory::new(alg, objects, Some(1), true, &mut rng).unwrap());
        let ladder = build_ladder(Arc::clone(&sub)).unwrap();
        for d in 1..=4 {
            for i in 0..3 {
                for j in 0..3 {
                    assert_eq!(
                        &rad_power_bruteforce(&sub, i, j, d, 1_000_000).unwrap(),
                        ladder.power(d, i, j),
                        "pair ({i},{j}) at power {d}"
                    );
                }
            }
        }
    }
}
