//! Projective covers, injective envelopes, minimal resolutions, Ext groups
//! and subcategory approximations.

mod approx;
mod resolution;

pub use approx::{
    left_approximation, right_approximation, verify_left_approximation,
    verify_right_approximation, Approximation,
};
pub use resolution::{ext, ExtGroup, HomologicalCtx, Resolution};

use crate::error::{Error, Result};
use crate::linalg::{Matrix, Subspace};
use crate::rep::{ModuleMorphism, Representation};
use std::sync::Arc;

/// Per-vertex radical subspaces of a module: the sum of the images of all
/// incoming arrow actions.
pub fn radical_subspaces(x: &Representation) -> Result<Vec<Subspace>> {
    let q = x.algebra().quiver();
    let f = x.field();
    let mut out = Vec::with_capacity(q.vertex_count());
    for v in 0..q.vertex_count() {
        let mut acc = Subspace::zero(f, x.dim_at(v));
        for (i, a) in q.arrows().iter().enumerate() {
            if a.to != v {
                continue;
            }
            let img = Subspace::from_span_matrix(&x.arrow_matrix(i).transpose());
            acc = acc.sum(&img)?;
        }
        out.push(acc);
    }
    Ok(out)
}

/// The projective cover P ->> X: one copy of the projective at vertex v for
/// every basis vector of top(X) at v, mapping basis paths to their action on
/// a lifted top representative.
pub fn projective_cover(
    x: &Arc<Representation>,
) -> Result<(Arc<Representation>, ModuleMorphism)> {
    let alg = x.algebra();
    let q = alg.quiver();
    let f = x.field();
    let rad = radical_subspaces(x)?;

    // lifted top representatives: standard coordinates away from the pivots
    let mut generators: Vec<(usize, Vec<crate::linalg::Scalar>)> = Vec::new();
    for v in 0..q.vertex_count() {
        let pivots: std::collections::BTreeSet<usize> = rad[v]
            .basis_rows()
            .map(|row| row.iter().position(|e| !e.is_zero()).unwrap())
            .collect();
        for c in (0..x.dim_at(v)).filter(|c| !pivots.contains(c)) {
            let mut e = vec![f.zero(); x.dim_at(v)];
            e[c] = f.one();
            generators.push((v, e));
        }
    }

    if generators.is_empty() {
        let p = Arc::new(Representation::zero(Arc::clone(alg)));
        let pi = ModuleMorphism::zero(Arc::clone(&p), Arc::clone(x));
        return Ok((p, pi));
    }

    let copies: Vec<Arc<Representation>> = generators
        .iter()
        .map(|(v, _)| Arc::new(alg.projective(*v)))
        .collect();
    let sum = crate::rep::direct_sum(&copies)?;

    // pi on each copy: basis path beta (v -> w) goes to beta acting on the
    // lifted generator.
    let mut blocks: Vec<Matrix> = (0..q.vertex_count())
        .map(|w| Matrix::zero(f, x.dim_at(w), sum.sum.dim_at(w)))
        .collect();
    let mut col_offsets = vec![0usize; q.vertex_count()];
    for ((v, gen), copy) in generators.iter().zip(&copies) {
        for w in 0..q.vertex_count() {
            for (pos, &b) in alg.pair_basis(*v, w).iter().enumerate() {
                let beta = &alg.basis_paths()[b];
                let act = x.path_matrix(*v, &beta.arrows);
                let img = act.matmul(&Matrix::col_vector(f, gen))?;
                for r in 0..x.dim_at(w) {
                    blocks[w].set(r, col_offsets[w] + pos, img.get(r, 0).clone());
                }
            }
            col_offsets[w] += copy.dim_at(w);
        }
    }
    let pi = ModuleMorphism::new(Arc::clone(&sum.sum), Arc::clone(x), blocks)?;

    // cover contract: surjective with superfluous kernel
    for v in 0..q.vertex_count() {
        if pi.block(v).rank() != x.dim_at(v) {
            return Err(Error::Inconsistency(
                "projective cover is not surjective".into(),
            ));
        }
    }
    let p_rad = radical_subspaces(&sum.sum)?;
    for (v, space) in p_rad.iter().enumerate() {
        let ker = pi.block(v).kernel();
        for kv in ker.basis_rows() {
            if !space.contains_vector(kv) {
                return Err(Error::Inconsistency(
                    "projective cover kernel is not superfluous".into(),
                ));
            }
        }
    }
    Ok((sum.sum, pi))
}

/// The injective envelope X >-> I: dualize, take the projective cover over
/// the opposite algebra, dualize back.
pub fn injective_envelope(
    x: &Arc<Representation>,
) -> Result<(Arc<Representation>, ModuleMorphism)> {
    let alg = x.algebra();
    let opp = Arc::new(alg.opposite()?);
    let dx = Arc::new(x.dualize_onto(Arc::clone(&opp)));
    let (p_op, pi_op) = projective_cover(&dx)?;
    let envelope = Arc::new(p_op.dualize_onto(Arc::clone(alg)));
    let blocks = pi_op.blocks().iter().map(Matrix::transpose).collect();
    let iota = ModuleMorphism::new(Arc::clone(x), Arc::clone(&envelope), blocks)?;
    // envelope contract: injective per vertex
    for v in 0..x.dims().len() {
        if iota.block(v).rank() != x.dim_at(v) {
            return Err(Error::Inconsistency(
                "injective envelope is not injective".into(),
            ));
        }
    }
    Ok((envelope, iota))
}

/// Everything the depth criteria need about one simple module S: projective
/// cover, injective envelope, both subcategory approximations, and the
/// composite theta = iota . pi.
pub struct SimpleKit {
    pub vertex: usize,
    pub simple: Arc<Representation>,
    pub p_s: Arc<Representation>,
    pub pi_s: ModuleMorphism,
    pub i_s: Arc<Representation>,
    pub iota_s: ModuleMorphism,
    pub right_approx: Approximation,
    pub left_approx: Approximation,
    pub theta: ModuleMorphism,
}

pub fn simple_kit(
    alg: &Arc<crate::algebra::AlgebraHandle>,
    vertex: usize,
    subs: &[Arc<Representation>],
) -> Result<SimpleKit> {
    let simple = Arc::new(alg.simple(vertex));
    let (p_s, pi_s) = projective_cover(&simple)?;
    let (i_s, iota_s) = injective_envelope(&simple)?;
    let right_approx = right_approximation(&simple, subs)?;
    let left_approx = left_approximation(&simple, subs)?;
    let theta = iota_s.compose(&pi_s)?;
    if theta.is_zero() {
        return Err(Error::Inconsistency(
            "theta = iota . pi vanished for a simple module".into(),
        ));
    }
    Ok(SimpleKit {
        vertex,
        simple,
        p_s,
        pi_s,
        i_s,
        iota_s,
        right_approx,
        left_approx,
        theta,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::FieldSpec;
    use crate::rep::{fixtures, hom_dim};

    fn f101() -> FieldSpec {
        FieldSpec::prime(101).unwrap()
    }

    #[test]
    fn cover_of_s1_in_a2_is_p1() {
        let alg = fixtures::a2(f101());
        let s1 = Arc::new(alg.simple(0));
        let (p, pi) = projective_cover(&s1).unwrap();
        assert_eq!(p.dims(), &[1, 1]);
        assert!(!pi.is_zero());
    }

    #[test]
    fn cover_of_a_projective_is_an_isomorphism() {
        let alg = fixtures::a3r2(f101());
        let p2 = Arc::new(alg.projective(1));
        let (p, pi) = projective_cover(&p2).unwrap();
        assert_eq!(p.total_dim(), p2.total_dim());
        assert!(pi.is_iso());
    }

    #[test]
    fn cover_of_s2_in_a3r2_has_kernel_s3() {
        let alg = fixtures::a3r2(f101());
        let s2 = Arc::new(alg.simple(1));
        let (p, pi) = projective_cover(&s2).unwrap();
        assert_eq!(p.dims(), &[0, 1, 1]);
        let (k, _) = crate::rep::kernel_rep(&pi).unwrap();
        assert_eq!(k.dims(), &[0, 0, 1]);
    }

    #[test]
    fn envelope_of_s2_in_a2_is_p1_shaped() {
        let alg = fixtures::a2(f101());
        let s2 = Arc::new(alg.simple(1));
        let (i, iota) = injective_envelope(&s2).unwrap();
        assert_eq!(i.dims(), &[1, 1]);
        assert!(!iota.is_zero());
        // and I_2 is isomorphic to P_1
        let p1 = Arc::new(alg.projective(0));
        let mut rng = crate::rng::seeded(2);
        assert!(crate::rep::is_isomorphic(&i, &p1, &mut rng)
            .unwrap()
            .is_some());
    }

    #[test]
    fn envelope_of_an_injective_simple_is_identity_sized() {
        let alg = fixtures::a2(f101());
        let s1 = Arc::new(alg.simple(0));
        let (i, iota) = injective_envelope(&s1).unwrap();
        assert_eq!(i.dims(), &[1, 0]);
        assert!(iota.is_iso());
    }

    #[test]
    fn injective_dims_match_opposite_projectives() {
        let alg = fixtures::a3r2(f101());
        let opp = Arc::new(alg.opposite().unwrap());
        for i in 0..3 {
            let inj = alg.injective(i).unwrap();
            let p_op = opp.projective(i);
            assert_eq!(inj.dims(), p_op.dims());
        }
    }

    #[test]
    fn theta_is_nonzero_for_every_simple() {
        let alg = fixtures::a3r2(f101());
        let subs: Vec<Arc<Representation>> =
            (0..3).map(|i| Arc::new(alg.projective(i))).collect();
        for v in 0..3 {
            let kit = simple_kit(&alg, v, &subs).unwrap();
            assert!(!kit.theta.is_zero());
            assert_eq!(kit.theta.source(), &kit.p_s);
            assert_eq!(kit.theta.target(), &kit.i_s);
        }
    }

    #[test]
    fn hom_duality_dimension_identity() {
        // dim Hom(X, Y) = dim Hom(DY, DX) across fixture pairs
        let alg = fixtures::a3r2(f101());
        let objects: Vec<Arc<Representation>> = (0..3)
            .map(|i| Arc::new(alg.projective(i)))
            .chain((0..3).map(|i| Arc::new(alg.simple(i))))
            .collect();
        for x in &objects {
            for y in &objects {
                let dx = Arc::new(x.dualize().unwrap());
                let dy = Arc::new(y.dualize().unwrap());
                assert_eq!(hom_dim(x, y).unwrap(), hom_dim(&dy, &dx).unwrap());
            }
        }
    }
}
