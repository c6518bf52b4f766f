//! Decomposition into indecomposables (Fitting's lemma), endomorphism
//! radicals via the trace form, isomorphism testing, composition length.

use super::hom::{hom_basis, HomBasis};
use super::morphism::{cokernel_rep, subrep_from_subspaces, ModuleMorphism};
use super::Representation;
use crate::error::{Error, Result};
use crate::linalg::{FieldSpec, Matrix, Scalar, Subspace};
use crate::rng::WorkRng;
use std::sync::Arc;

/// One direct summand with the maps realizing the splitting: the sum over
/// all pieces of `inclusion . projection` is the identity of the module.
#[derive(Clone, Debug)]
pub struct DecompPiece {
    pub rep: Arc<Representation>,
    pub inclusion: ModuleMorphism,
    pub projection: ModuleMorphism,
}

/// Random-search budget for splitting endomorphisms.
const RANDOM_TRIALS: usize = 64;
/// Exhaust all endomorphism combinations when the field is this small.
const EXHAUSTIVE_LIMIT: f64 = 65536.0;

fn combination(h: &HomBasis, coeffs: &[Scalar]) -> Result<ModuleMorphism> {
    let field = h.source().field();
    let ambient = h.space().ambient_dim();
    let mut flat = vec![field.zero(); ambient];
    for (c, m) in coeffs.iter().zip(h.basis()) {
        if c.is_zero() {
            continue;
        }
        for (slot, e) in flat.iter_mut().zip(m.flatten()) {
            *slot = slot.add(&c.mul(&e));
        }
    }
    ModuleMorphism::from_flat(Arc::clone(h.source()), Arc::clone(h.target()), &flat)
}

/// Fitting: for e in End(X), X = ker(e^N) + im(e^N) with N = dim X. A
/// proper split yields both halves with inclusions and projections.
fn try_fitting(
    x: &Arc<Representation>,
    e: &ModuleMorphism,
) -> Result<Option<(DecompPiece, DecompPiece)>> {
    let n = x.total_dim();
    let f = e.pow(n)?;
    let rank: usize = f.blocks().iter().map(Matrix::rank).sum();
    if rank == 0 || rank == n {
        return Ok(None);
    }
    let field = x.field();
    let ker_spaces: Vec<Subspace> = f.blocks().iter().map(Matrix::kernel).collect();
    let im_spaces: Vec<Subspace> = f
        .blocks()
        .iter()
        .map(|b| Subspace::from_span_matrix(&b.transpose()))
        .collect();
    let (ker_rep, ker_incl) = subrep_from_subspaces(x, &ker_spaces)?;
    let (im_rep, im_incl) = subrep_from_subspaces(x, &im_spaces)?;

    // projections along the decomposition: invert the stacked bases
    let mut ker_proj_blocks = Vec::new();
    let mut im_proj_blocks = Vec::new();
    for v in 0..x.dims().len() {
        let k = &ker_spaces[v];
        let i = &im_spaces[v];
        if k.dim() + i.dim() != x.dim_at(v) {
            return Err(Error::Inconsistency(
                "Fitting parts do not fill the module".into(),
            ));
        }
        let d = x.dim_at(v);
        let stacked = if k.dim() == 0 {
            i.basis_matrix().clone()
        } else if i.dim() == 0 {
            k.basis_matrix().clone()
        } else {
            k.basis_matrix().vstack(i.basis_matrix())
        };
        let inv = stacked
            .transpose()
            .inverse()
            .ok_or_else(|| Error::Inconsistency("Fitting parts are not complementary".into()))?;
        let mut kp = Matrix::zero(field, k.dim(), d);
        let mut ip = Matrix::zero(field, i.dim(), d);
        for c in 0..d {
            for r in 0..k.dim() {
                kp.set(r, c, inv.get(r, c).clone());
            }
            for r in 0..i.dim() {
                ip.set(r, c, inv.get(k.dim() + r, c).clone());
            }
        }
        ker_proj_blocks.push(kp);
        im_proj_blocks.push(ip);
    }
    let ker_proj = ModuleMorphism::new(Arc::clone(x), Arc::clone(&ker_rep), ker_proj_blocks)?;
    let im_proj = ModuleMorphism::new(Arc::clone(x), Arc::clone(&im_rep), im_proj_blocks)?;
    Ok(Some((
        DecompPiece {
            rep: ker_rep,
            inclusion: ker_incl,
            projection: ker_proj,
        },
        DecompPiece {
            rep: im_rep,
            inclusion: im_incl,
            projection: im_proj,
        },
    )))
}

fn exhaustible(field: FieldSpec, dim: usize) -> bool {
    match field {
        FieldSpec::Rational => false,
        FieldSpec::Prime { p } => (p as f64).powi(dim as i32) <= EXHAUSTIVE_LIMIT,
    }
}

fn find_split(
    x: &Arc<Representation>,
    endos: &HomBasis,
    rng: &mut WorkRng,
) -> Result<Option<(DecompPiece, DecompPiece)>> {
    // basis elements first: they catch block-diagonal splittings cheaply
    for e in endos.basis() {
        if let Some(split) = try_fitting(x, e)? {
            return Ok(Some(split));
        }
    }
    let field = x.field();
    let n = endos.dim();
    if exhaustible(field, n) {
        // complete scan: decides indecomposability over tiny fields
        let p = field.characteristic();
        let mut digits = vec![0u64; n];
        loop {
            let mut i = 0;
            loop {
                if i == n {
                    return Ok(None);
                }
                digits[i] += 1;
                if digits[i] < p {
                    break;
                }
                digits[i] = 0;
                i += 1;
            }
            let coeffs: Vec<Scalar> = digits
                .iter()
                .map(|&d| field.from_integer(d as i64))
                .collect();
            let e = combination(endos, &coeffs)?;
            if let Some(split) = try_fitting(x, &e)? {
                return Ok(Some(split));
            }
        }
    }
    for _ in 0..RANDOM_TRIALS {
        let coeffs: Vec<Scalar> = (0..n).map(|_| field.random_scalar(rng)).collect();
        let e = combination(endos, &coeffs)?;
        if let Some(split) = try_fitting(x, &e)? {
            return Ok(Some(split));
        }
    }
    Ok(None)
}

/// The Jacobson radical of End(X) as a subspace in flattened endomorphism
/// coordinates, computed as the kernel of the trace form of the regular
/// representation. Exact for characteristic 0 or p > dim End(X); smaller
/// primes are rejected.
pub fn endo_radical(x: &Arc<Representation>) -> Result<Subspace> {
    let endos = hom_basis(x, x)?;
    endo_radical_of(&endos)
}

fn endo_radical_of(endos: &HomBasis) -> Result<Subspace> {
    let x = endos.source();
    let field = x.field();
    let n = endos.dim();
    if n == 0 {
        return Ok(Subspace::zero(field, endos.space().ambient_dim()));
    }
    if let FieldSpec::Prime { p } = field {
        if (p as usize) <= n {
            return Err(Error::CharTooSmall { p, dim: n });
        }
    }
    // left-multiplication matrices in the hom basis
    let mut left = Vec::with_capacity(n);
    for ei in endos.basis() {
        let mut m = Matrix::zero(field, n, n);
        for (j, ej) in endos.basis().iter().enumerate() {
            let prod = ei.compose(ej)?;
            let coords = endos
                .coordinates_of(&prod)
                .ok_or_else(|| Error::Inconsistency("endo product left the Hom space".into()))?;
            for (i, c) in coords.into_iter().enumerate() {
                m.set(i, j, c);
            }
        }
        left.push(m);
    }
    // Gram matrix of (a, b) -> Tr(L_a L_b)
    let mut gram = Matrix::zero(field, n, n);
    for i in 0..n {
        for j in 0..=i {
            let mut t = field.zero();
            for k in 0..n {
                for l in 0..n {
                    t = t.add(&left[i].get(k, l).mul(left[j].get(l, k)));
                }
            }
            gram.set(i, j, t.clone());
            gram.set(j, i, t);
        }
    }
    // kernel vectors are coordinates in the endo basis; map to flat coords
    let coord_kernel = gram.kernel();
    let mut rows = Vec::new();
    for kv in coord_kernel.basis_rows() {
        let mut flat = vec![field.zero(); endos.space().ambient_dim()];
        for (c, m) in kv.iter().zip(endos.basis()) {
            if c.is_zero() {
                continue;
            }
            for (slot, e) in flat.iter_mut().zip(m.flatten()) {
                *slot = slot.add(&c.mul(&e));
            }
        }
        rows.push(flat);
    }
    Ok(Subspace::from_rows(
        field,
        endos.space().ambient_dim(),
        rows,
    ))
}

/// Decide indecomposability for a module none of whose endomorphisms split
/// it. Over a prime field the Wedderburn structure of End/rad is decided
/// exactly (commutative with a one-dimensional Frobenius fixed space means
/// a finite field, hence a local endomorphism ring).
fn confirm_indecomposable(endos: &HomBasis) -> Result<()> {
    let x = endos.source();
    let field = x.field();
    let n = endos.dim();
    if n == 1 {
        return Ok(());
    }
    let rad = endo_radical_of(endos)?;
    let q_dim = n - rad.dim();
    if q_dim == 1 {
        return Ok(());
    }
    // End/rad of dimension > 1: pick complement representatives and study
    // the quotient algebra.
    let ambient = endos.space().ambient_dim();
    let mut complement: Vec<ModuleMorphism> = Vec::new();
    let mut span = rad.clone();
    for m in endos.basis() {
        if span.contains_vector(&m.flatten()) {
            continue;
        }
        span = span.sum(&Subspace::from_rows(field, ambient, vec![m.flatten()]))?;
        complement.push(m.clone());
        if complement.len() == q_dim {
            break;
        }
    }
    let quotient_coords = |f: &ModuleMorphism| -> Result<Vec<Scalar>> {
        // write f = sum c_i z_i + radical: solve against [complement | rad]
        let mut rows: Vec<Vec<Scalar>> = complement.iter().map(|z| z.flatten()).collect();
        rows.extend(rad.basis_rows().map(<[Scalar]>::to_vec));
        let a = Matrix::from_rows(field, ambient, &rows).transpose();
        let b = Matrix::from_rows(field, ambient, &[f.flatten()]).transpose();
        let sol = a
            .solve(&b)?
            .ok_or_else(|| Error::Inconsistency("quotient coordinates failed".into()))?;
        Ok((0..q_dim).map(|i| sol.get(i, 0).clone()).collect())
    };
    // commutativity of the quotient
    for (i, zi) in complement.iter().enumerate() {
        for zj in complement.iter().skip(i + 1) {
            let c = zi.compose(zj)?.sub(&zj.compose(zi)?)?;
            if !rad.contains_vector(&c.flatten()) {
                return Err(Error::SplitFailure(
                    "End(X)/rad is noncommutative, so X is decomposable, but no splitting \
                     endomorphism was found; rerun with more random trials"
                        .into(),
                ));
            }
        }
    }
    match field {
        FieldSpec::Prime { p } => {
            // Frobenius fixed space on the commutative semisimple quotient:
            // its dimension counts the field factors.
            let mut frob = Matrix::zero(field, q_dim, q_dim);
            for (j, z) in complement.iter().enumerate() {
                let zp = z.pow(p as usize)?;
                for (i, c) in quotient_coords(&zp)?.into_iter().enumerate() {
                    frob.set(i, j, c);
                }
            }
            let fixed = frob
                .sub(&Matrix::identity(field, q_dim))?
                .kernel();
            if fixed.dim() == 1 {
                // a finite field: local endomorphism ring, nonsplit
                Ok(())
            } else {
                Err(Error::SplitFailure(format!(
                    "End(X)/rad is a product of {} fields, so X is decomposable, but no \
                     splitting endomorphism was found; rerun with more random trials",
                    fixed.dim()
                )))
            }
        }
        FieldSpec::Rational => Err(Error::SplitFailure(
            "End(X)/rad has dimension > 1 over Q: either X is decomposable and no splitting \
             was sampled, or End(X) is a nonsplit local ring; not decided here"
                .into(),
        )),
    }
}

/// Decompose into indecomposable direct summands, with the inclusion and
/// projection of every piece.
pub fn decompose(x: &Arc<Representation>, rng: &mut WorkRng) -> Result<Vec<DecompPiece>> {
    if x.is_zero() {
        return Ok(Vec::new());
    }
    let endos = hom_basis(x, x)?;
    if endos.dim() == 1 {
        return Ok(vec![DecompPiece {
            rep: Arc::clone(x),
            inclusion: ModuleMorphism::identity(x),
            projection: ModuleMorphism::identity(x),
        }]);
    }
    if let Some((a, b)) = find_split(x, &endos, rng)? {
        let mut out = Vec::new();
        for part in [a, b] {
            for piece in decompose(&part.rep, rng)? {
                out.push(DecompPiece {
                    rep: piece.rep,
                    inclusion: part.inclusion.compose(&piece.inclusion)?,
                    projection: piece.projection.compose(&part.projection)?,
                });
            }
        }
        return Ok(out);
    }
    confirm_indecomposable(&endos)?;
    Ok(vec![DecompPiece {
        rep: Arc::clone(x),
        inclusion: ModuleMorphism::identity(x),
        projection: ModuleMorphism::identity(x),
    }])
}

/// Decomposition grouped into isomorphism classes with multiplicities.
pub fn decompose_grouped(
    x: &Arc<Representation>,
    rng: &mut WorkRng,
) -> Result<Vec<(Arc<Representation>, usize)>> {
    let pieces = decompose(x, rng)?;
    let mut grouped: Vec<(Arc<Representation>, usize)> = Vec::new();
    for p in pieces {
        let mut placed = false;
        for (rep, count) in grouped.iter_mut() {
            if is_isomorphic(rep, &p.rep, rng)?.is_some() {
                *count += 1;
                placed = true;
                break;
            }
        }
        if !placed {
            grouped.push((p.rep, 1));
        }
    }
    Ok(grouped)
}

pub fn is_indecomposable(x: &Arc<Representation>, rng: &mut WorkRng) -> Result<bool> {
    if x.is_zero() {
        return Err(Error::InvalidInput(
            "the zero module is neither decomposable nor indecomposable here".into(),
        ));
    }
    Ok(decompose(x, rng)?.len() == 1)
}

/// Search for an isomorphism X -> Y. Dimension vectors must agree; then
/// basis elements of Hom are tried, all combinations over tiny fields, and
/// seeded random combinations otherwise, with a decomposition comparison as
/// the last resort.
pub fn is_isomorphic(
    x: &Arc<Representation>,
    y: &Arc<Representation>,
    rng: &mut WorkRng,
) -> Result<Option<ModuleMorphism>> {
    if !x.same_algebra(y) {
        return Err(Error::AlgebraMismatch("isomorphism test".into()));
    }
    if x.dims() != y.dims() {
        return Ok(None);
    }
    if x.is_zero() {
        return Ok(Some(ModuleMorphism::zero(Arc::clone(x), Arc::clone(y))));
    }
    let h = hom_basis(x, y)?;
    if h.dim() == 0 {
        return Ok(None);
    }
    if let Some(iso) = sample_iso(&h, rng)? {
        return Ok(Some(iso));
    }
    // fall back to matching the decompositions piece by piece
    let xs = decompose(x, rng)?;
    let ys = decompose(y, rng)?;
    if xs.len() == 1 && ys.len() == 1 {
        return Ok(None);
    }
    if xs.len() != ys.len() {
        return Ok(None);
    }
    let mut used = vec![false; ys.len()];
    let mut total: Option<ModuleMorphism> = None;
    for xp in &xs {
        let mut matched = false;
        for (j, yp) in ys.iter().enumerate() {
            if used[j] {
                continue;
            }
            if let Some(iso) = is_isomorphic(&xp.rep, &yp.rep, rng)? {
                used[j] = true;
                matched = true;
                let term = yp.inclusion.compose(&iso)?.compose(&xp.projection)?;
                total = Some(match total {
                    None => term,
                    Some(t) => t.add(&term)?,
                });
                break;
            }
        }
        if !matched {
            return Ok(None);
        }
    }
    let witness = total.expect("nonempty decomposition");
    if witness.is_iso() {
        Ok(Some(witness))
    } else {
        Err(Error::Inconsistency(
            "matched decompositions did not assemble into an isomorphism".into(),
        ))
    }
}

fn sample_iso(h: &HomBasis, rng: &mut WorkRng) -> Result<Option<ModuleMorphism>> {
    for m in h.basis() {
        if m.is_iso() {
            return Ok(Some(m.clone()));
        }
    }
    let field = h.source().field();
    let n = h.dim();
    if exhaustible(field, n) {
        let p = field.characteristic();
        let mut digits = vec![0u64; n];
        loop {
            let mut i = 0;
            loop {
                if i == n {
                    return Ok(None);
                }
                digits[i] += 1;
                if digits[i] < p {
                    break;
                }
                digits[i] = 0;
                i += 1;
            }
            let coeffs: Vec<Scalar> = digits
                .iter()
                .map(|&d| field.from_integer(d as i64))
                .collect();
            let m = combination(h, &coeffs)?;
            if m.is_iso() {
                return Ok(Some(m));
            }
        }
    }
    for _ in 0..RANDOM_TRIALS {
        let coeffs: Vec<Scalar> = (0..n).map(|_| field.random_scalar(rng)).collect();
        let m = combination(h, &coeffs)?;
        if m.is_iso() {
            return Ok(Some(m));
        }
    }
    Ok(None)
}

/// Composition-series length by iterated socle peeling. For the split
/// basic algebras built here every simple is one-dimensional, so the
/// length must equal the total dimension; that identity is checked, not
/// assumed.
pub fn module_length(x: &Arc<Representation>) -> Result<usize> {
    let mut cur = Arc::clone(x);
    let mut len = 0usize;
    while !cur.is_zero() {
        let soc = cur.socle_subspaces();
        let layer: usize = soc.iter().map(Subspace::dim).sum();
        if layer == 0 {
            return Err(Error::Inconsistency(
                "nonzero module with zero socle".into(),
            ));
        }
        len += layer;
        let (_, incl) = subrep_from_subspaces(&cur, &soc)?;
        let (quot, _) = cokernel_rep(&incl)?;
        cur = quot;
    }
    if len != x.total_dim() {
        return Err(Error::Inconsistency(format!(
            "socle length {len} differs from total dimension {}",
            x.total_dim()
        )));
    }
    Ok(len)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rep::{direct_sum, fixtures};
    use crate::rng;

    fn f101() -> FieldSpec {
        FieldSpec::prime(101).unwrap()
    }

    #[test]
    fn simple_module_is_indecomposable() {
        let alg = fixtures::a2(f101());
        let s1 = Arc::new(alg.simple(0));
        let mut rng = rng::seeded(7);
        let d = decompose(&s1, &mut rng).unwrap();
        assert_eq!(d.len(), 1);
    }

    #[test]
    fn p1_squared_decomposes_with_multiplicity_two() {
        let alg = fixtures::a2(f101());
        let p1 = Arc::new(alg.projective(0));
        let sum = direct_sum(&[Arc::clone(&p1), Arc::clone(&p1)]).unwrap().sum;
        let mut rng = rng::seeded(7);
        let grouped = decompose_grouped(&sum, &mut rng).unwrap();
        assert_eq!(grouped.len(), 1);
        assert_eq!(grouped[0].1, 2);
        assert!(is_isomorphic(&grouped[0].0, &p1, &mut rng).unwrap().is_some());
    }

    #[test]
    fn semisimple_rep_splits_into_both_simples() {
        // A2 representation (1,1) with arrow map 0 decomposes as S_1 + S_2
        let alg = fixtures::a2(f101());
        let rep = Arc::new(
            Representation::new(
                Arc::clone(&alg),
                vec![1, 1],
                vec![Matrix::zero(f101(), 1, 1)],
            )
            .unwrap(),
        );
        let mut rng = rng::seeded(7);
        let grouped = decompose_grouped(&rep, &mut rng).unwrap();
        assert_eq!(grouped.len(), 2);
        assert!(grouped.iter().all(|(_, m)| *m == 1));
    }

    #[test]
    fn decomposition_pieces_resolve_identity() {
        let alg = fixtures::a3r2(f101());
        let p1 = Arc::new(alg.projective(0));
        let s3 = Arc::new(alg.simple(2));
        let sum = direct_sum(&[p1, s3]).unwrap().sum;
        let mut rng = rng::seeded(11);
        let pieces = decompose(&sum, &mut rng).unwrap();
        assert_eq!(pieces.len(), 2);
        let mut acc = ModuleMorphism::zero(Arc::clone(&sum), Arc::clone(&sum));
        for p in &pieces {
            acc = acc.add(&p.inclusion.compose(&p.projection).unwrap()).unwrap();
        }
        assert_eq!(acc, ModuleMorphism::identity(&sum));
    }

    #[test]
    fn endo_radical_of_simples_and_projectives_vanishes() {
        let alg = fixtures::a2(f101());
        let s1 = Arc::new(alg.simple(0));
        let p1 = Arc::new(alg.projective(0));
        assert_eq!(endo_radical(&s1).unwrap().dim(), 0);
        assert_eq!(endo_radical(&p1).unwrap().dim(), 0);
    }

    #[test]
    fn endo_radical_of_a_semisimple_square_vanishes() {
        // End(S_1 + S_1) is a 2x2 matrix algebra; its radical is zero.
        let alg = fixtures::a2(f101());
        let s1 = Arc::new(alg.simple(0));
        let sum = direct_sum(&[Arc::clone(&s1), s1]).unwrap().sum;
        assert_eq!(endo_radical(&sum).unwrap().dim(), 0);
    }

    #[test]
    fn endo_radical_detects_nilpotents() {
        // End(P_1 + S_1) over A2 contains the nilpotent P_1 ->> S_1 -> 0
        let alg = fixtures::a2(f101());
        let p1 = Arc::new(alg.projective(0));
        let s1 = Arc::new(alg.simple(0));
        let sum = direct_sum(&[p1, s1]).unwrap().sum;
        // End has dim 3 (two identities + the quotient map); radical dim 1
        assert_eq!(endo_radical(&sum).unwrap().dim(), 1);
    }

    #[test]
    fn char_too_small_is_reported() {
        let alg = fixtures::semisimple2(FieldSpec::prime(2).unwrap());
        let s1 = Arc::new(alg.simple(0));
        let sum = direct_sum(&[Arc::clone(&s1), Arc::clone(&s1), s1])
            .unwrap()
            .sum;
        // dim End = 9 > 2
        assert!(matches!(
            endo_radical(&sum),
            Err(Error::CharTooSmall { .. })
        ));
    }

    #[test]
    fn isomorphism_with_base_change_witness() {
        // two presentations of P_1 over A2 differing by base change at
        // vertex 2
        let alg = fixtures::a2(f101());
        let p1 = Arc::new(alg.projective(0));
        let twisted = Arc::new(
            Representation::new(
                Arc::clone(&alg),
                vec![1, 1],
                vec![Matrix::from_ints(f101(), 1, 1, &[17])],
            )
            .unwrap(),
        );
        let mut rng = rng::seeded(3);
        let iso = is_isomorphic(&p1, &twisted, &mut rng).unwrap().unwrap();
        assert!(iso.is_iso());
        assert!(is_isomorphic(&p1, &Arc::new(alg.simple(0)), &mut rng)
            .unwrap()
            .is_none());
    }

    #[test]
    fn indecomposable_endos_are_invertible_or_nilpotent() {
        let alg = fixtures::a3r2(f101());
        let mut rng = rng::seeded(23);
        for rep in [alg.projective(0), alg.projective(1), alg.simple(1)] {
            let rep = Arc::new(rep);
            let endos = hom_basis(&rep, &rep).unwrap();
            let n = rep.total_dim();
            let check = |e: &ModuleMorphism| {
                let p = e.pow(n).unwrap();
                assert!(p.is_zero() || p.is_iso());
            };
            for e in endos.basis() {
                check(e);
            }
            for _ in 0..50 {
                let coeffs: Vec<Scalar> = (0..endos.dim())
                    .map(|_| f101().random_scalar(&mut rng))
                    .collect();
                check(&combination(&endos, &coeffs).unwrap());
            }
        }
    }

    #[test]
    fn krull_schmidt_stability_across_seeds() {
        let alg = fixtures::a3r2(f101());
        let p1 = Arc::new(alg.projective(0));
        let p2 = Arc::new(alg.projective(1));
        let s1 = Arc::new(alg.simple(0));
        let sum = direct_sum(&[p1, p2, s1]).unwrap().sum;
        let mut r1 = rng::seeded(1);
        let mut r2 = rng::seeded(99);
        let d1 = decompose_grouped(&sum, &mut r1).unwrap();
        let d2 = decompose_grouped(&sum, &mut r2).unwrap();
        assert_eq!(d1.len(), d2.len());
        let mut matched = 0;
        for (r, m) in &d1 {
            for (r2_, m2) in &d2 {
                if is_isomorphic(r, r2_, &mut r1).unwrap().is_some() {
                    assert_eq!(m, m2);
                    matched += 1;
                }
            }
        }
        assert_eq!(matched, d1.len());
    }

    #[test]
    fn length_by_socle_peeling_matches_dimension() {
        let alg = fixtures::a3r2(f101());
        for i in 0..3 {
            let p = Arc::new(alg.projective(i));
            assert_eq!(module_length(&p).unwrap(), p.total_dim());
        }
    }

    #[test]
    fn exhaustive_split_decides_over_f2() {
        let f2 = FieldSpec::prime(2).unwrap();
        let alg = fixtures::a2(f2);
        let p1 = Arc::new(alg.projective(0));
        let mut rng = rng::seeded(5);
        assert!(is_indecomposable(&p1, &mut rng).unwrap());
        let s1 = Arc::new(alg.simple(0));
        let sum = direct_sum(&[Arc::clone(&p1), s1]).unwrap().sum;
        assert!(!is_indecomposable(&sum, &mut rng).unwrap());
    }
}
