//! Left and right approximations by an additively generated subcategory,
//! built from Hom spanning sets and greedily minimized.

use crate::error::{Error, Result};
use crate::linalg::{Matrix, Scalar};
use crate::rep::{direct_sum, hom_basis, ModuleMorphism, Representation};
use std::sync::Arc;

/// An approximation X -> M_0 or M_0 -> X with its summand bookkeeping.
#[derive(Clone, Debug)]
pub struct Approximation {
    /// The approximating object M_0 in add(sub).
    pub module: Arc<Representation>,
    /// r: M_0 -> X for right approximations, l: X -> M_0 for left ones.
    pub morphism: ModuleMorphism,
    /// Index into the subcategory list for each kept summand, in order.
    pub summands: Vec<usize>,
}

struct Candidate {
    sub_index: usize,
    map: ModuleMorphism,
    /// Flattened composites ψ.φ (right) or φ.ψ (left), one block of rows per
    /// test object.
    composites: Vec<Vec<Vec<Scalar>>>,
}

fn covers(
    candidates: &[Candidate],
    kept: &[bool],
    test_dims: &[usize],
    field: crate::linalg::FieldSpec,
    ambient: &[usize],
) -> bool {
    for (t, &need) in test_dims.iter().enumerate() {
        if need == 0 {
            continue;
        }
        let mut rows: Vec<Vec<Scalar>> = Vec::new();
        for (c, cand) in candidates.iter().enumerate() {
            if kept[c] {
                rows.extend(cand.composites[t].iter().cloned());
            }
        }
        let rank = if rows.is_empty() {
            0
        } else {
            Matrix::from_rows(field, ambient[t], &rows).rank()
        };
        if rank != need {
            return false;
        }
    }
    true
}

fn assemble(
    x: &Arc<Representation>,
    subs: &[Arc<Representation>],
    candidates: Vec<Candidate>,
    kept: Vec<bool>,
    right: bool,
) -> Result<Approximation> {
    let kept_candidates: Vec<&Candidate> = candidates
        .iter()
        .zip(&kept)
        .filter(|(_, &k)| k)
        .map(|(c, _)| c)
        .collect();
    if kept_candidates.is_empty() {
        let zero = Arc::new(Representation::zero(Arc::clone(x.algebra())));
        let morphism = if right {
            ModuleMorphism::zero(Arc::clone(&zero), Arc::clone(x))
        } else {
            ModuleMorphism::zero(Arc::clone(x), Arc::clone(&zero))
        };
        return Ok(Approximation {
            module: zero,
            morphism,
            summands: Vec::new(),
        });
    }
    let parts: Vec<Arc<Representation>> = kept_candidates
        .iter()
        .map(|c| Arc::clone(&subs[c.sub_index]))
        .collect();
    let se = direct_sum(&parts)?;
    let mut morphism = if right {
        ModuleMorphism::zero(Arc::clone(&se.sum), Arc::clone(x))
    } else {
        ModuleMorphism::zero(Arc::clone(x), Arc::clone(&se.sum))
    };
    for (k, cand) in kept_candidates.iter().enumerate() {
        let term = if right {
            cand.map.compose(&se.projections[k])?
        } else {
            se.injections[k].compose(&cand.map)?
        };
        morphism = morphism.add(&term)?;
    }
    Ok(Approximation {
        module: se.sum,
        morphism,
        summands: kept_candidates.iter().map(|c| c.sub_index).collect(),
    })
}

/// Right approximation: assemble spanning sets of Hom(G, X) over all G in
/// the list, so that Hom(G, M_0) -> Hom(G, X) is onto for every G, then
/// drop summands (in listed order) whose removal keeps it onto.
pub fn right_approximation(
    x: &Arc<Representation>,
    subs: &[Arc<Representation>],
) -> Result<Approximation> {
    let field = x.field();
    let mut candidates = Vec::new();
    let mut test_dims = Vec::with_capacity(subs.len());
    let mut ambient = Vec::with_capacity(subs.len());
    let test_homs: Vec<_> = subs
        .iter()
        .map(|g| hom_basis(g, x))
        .collect::<Result<Vec<_>>>()?;
    for h in &test_homs {
        test_dims.push(h.dim());
        ambient.push(h.space().ambient_dim());
    }
    for (gi, g) in subs.iter().enumerate() {
        for psi in test_homs[gi].basis() {
            let mut composites = Vec::with_capacity(subs.len());
            for g_test in subs {
                let inner = hom_basis(g_test, g)?;
                let mut rows = Vec::with_capacity(inner.dim());
                for phi in inner.basis() {
                    rows.push(psi.compose(phi)?.flatten());
                }
                composites.push(rows);
            }
            candidates.push(Candidate {
                sub_index: gi,
                map: psi.clone(),
                composites,
            });
        }
    }

    let mut kept = vec![true; candidates.len()];
    if !covers(&candidates, &kept, &test_dims, field, &ambient) {
        return Err(Error::Inconsistency(
            "full spanning set is not a right approximation".into(),
        ));
    }
    for c in 0..candidates.len() {
        kept[c] = false;
        if !covers(&candidates, &kept, &test_dims, field, &ambient) {
            kept[c] = true;
        }
    }
    let approx = assemble(x, subs, candidates, kept, true)?;
    verify_right_approximation(x, subs, &approx)?;
    Ok(approx)
}

/// Post-hoc contract check: Hom(G, M_0) -> Hom(G, X) surjective for all G.
pub fn verify_right_approximation(
    x: &Arc<Representation>,
    subs: &[Arc<Representation>],
    approx: &Approximation,
) -> Result<()> {
    for g in subs {
        let need = hom_basis(g, x)?;
        if need.dim() == 0 {
            continue;
        }
        let from = hom_basis(g, &approx.module)?;
        let mut rows = Vec::with_capacity(from.dim());
        for u in from.basis() {
            rows.push(approx.morphism.compose(u)?.flatten());
        }
        let rank = if rows.is_empty() {
            0
        } else {
            Matrix::from_rows(x.field(), need.space().ambient_dim(), &rows).rank()
        };
        if rank != need.dim() {
            return Err(Error::Inconsistency(
                "right approximation fails its surjectivity contract".into(),
            ));
        }
    }
    Ok(())
}

/// Left approximation: dual construction from spanning sets of Hom(X, G).
pub fn left_approximation(
    x: &Arc<Representation>,
    subs: &[Arc<Representation>],
) -> Result<Approximation> {
    let field = x.field();
    let mut candidates = Vec::new();
    // test objects: surjectivity of Hom(M_0, G') -> Hom(X, G')
    let test_homs: Vec<_> = subs
        .iter()
        .map(|g| hom_basis(x, g))
        .collect::<Result<Vec<_>>>()?;
    let test_dims: Vec<usize> = test_homs.iter().map(|h| h.dim()).collect();
    let ambient: Vec<usize> = test_homs.iter().map(|h| h.space().ambient_dim()).collect();
    for (gi, g) in subs.iter().enumerate() {
        for psi in test_homs[gi].basis() {
            let mut composites = Vec::with_capacity(subs.len());
            for g_test in subs {
                let outer = hom_basis(g, g_test)?;
                let mut rows = Vec::with_capacity(outer.dim());
                for phi in outer.basis() {
                    rows.push(phi.compose(psi)?.flatten());
                }
                composites.push(rows);
            }
            candidates.push(Candidate {
                sub_index: gi,
                map: psi.clone(),
                composites,
            });
        }
    }

    let mut kept = vec![true; candidates.len()];
    if !covers(&candidates, &kept, &test_dims, field, &ambient) {
        return Err(Error::Inconsistency(
            "full spanning set is not a left approximation".into(),
        ));
    }
    for c in 0..candidates.len() {
        kept[c] = false;
        if !covers(&candidates, &kept, &test_dims, field, &ambient) {
            kept[c] = true;
        }
    }
    let approx = assemble(x, subs, candidates, kept, false)?;
    verify_left_approximation(x, subs, &approx)?;
    Ok(approx)
}

/// Post-hoc contract check: Hom(M_0, G') -> Hom(X, G') surjective for all G'.
pub fn verify_left_approximation(
    x: &Arc<Representation>,
    subs: &[Arc<Representation>],
    approx: &Approximation,
) -> Result<()> {
    for g in subs {
        let need = hom_basis(x, g)?;
        if need.dim() == 0 {
            continue;
        }
        let from = hom_basis(&approx.module, g)?;
        let mut rows = Vec::with_capacity(from.dim());
        for u in from.basis() {
            rows.push(u.compose(&approx.morphism)?.flatten());
        }
        let rank = if rows.is_empty() {
            0
        } else {
            Matrix::from_rows(x.field(), need.space().ambient_dim(), &rows).rank()
        };
        if rank != need.dim() {
            return Err(Error::Inconsistency(
                "left approximation fails its surjectivity contract".into(),
            ));
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::FieldSpec;
    use crate::rep::fixtures;

    fn f101() -> FieldSpec {
        FieldSpec::prime(101).unwrap()
    }

    #[test]
    fn approximation_of_a_member_minimizes_to_an_iso() {
        let alg = fixtures::a2(f101());
        let subs: Vec<Arc<Representation>> = vec![
            Arc::new(alg.simple(0)),
            Arc::new(alg.simple(1)),
            Arc::new(alg.projective(0)),
        ];
        let x = Arc::clone(&subs[2]);
        let r = right_approximation(&x, &subs).unwrap();
        assert_eq!(r.summands, vec![2]);
        assert!(r.morphism.is_iso());
        let l = left_approximation(&x, &subs).unwrap();
        assert_eq!(l.summands, vec![2]);
        assert!(l.morphism.is_iso());
    }

    #[test]
    fn a3r2_right_approximation_of_s2_uses_p2() {
        // M = add {P_1, P_2, P_3, I_1}; the only maps onto S_2 come from P_2
        let alg = fixtures::a3r2(f101());
        let subs: Vec<Arc<Representation>> = vec![
            Arc::new(alg.projective(0)),
            Arc::new(alg.projective(1)),
            Arc::new(alg.projective(2)),
            Arc::new(alg.injective(0).unwrap()),
        ];
        let s2 = Arc::new(alg.simple(1));
        let r = right_approximation(&s2, &subs).unwrap();
        assert_eq!(r.summands, vec![1]);
        assert!(!r.morphism.is_zero());
        let l = left_approximation(&s2, &subs).unwrap();
        assert_eq!(l.summands, vec![0]);
        assert!(!l.morphism.is_zero());
    }

    #[test]
    fn unreachable_module_gets_the_zero_approximation() {
        // no maps from {S_2} to S_1 over A2
        let alg = fixtures::a2(f101());
        let subs = vec![Arc::new(alg.simple(1))];
        let s1 = Arc::new(alg.simple(0));
        let r = right_approximation(&s1, &subs).unwrap();
        assert!(r.module.is_zero());
        assert!(r.morphism.is_zero());
        assert!(r.summands.is_empty());
    }
}
