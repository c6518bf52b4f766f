//! Hom spaces between representations: the kernel of the intertwining
//! linear system, canonically echelonized.

use super::{block_offsets, Representation};
use super::morphism::ModuleMorphism;
use crate::error::{Error, Result};
use crate::linalg::{Matrix, Subspace};
use std::sync::Arc;

/// A canonical basis of Hom(X, Y). The subspace lives in the flattened
/// block coordinates shared with [`ModuleMorphism::flatten`].
#[derive(Clone, Debug)]
pub struct HomBasis {
    source: Arc<Representation>,
    target: Arc<Representation>,
    space: Subspace,
    morphisms: Vec<ModuleMorphism>,
}

impl HomBasis {
    pub fn dim(&self) -> usize {
        self.space.dim()
    }

    pub fn source(&self) -> &Arc<Representation> {
        &self.source
    }

    pub fn target(&self) -> &Arc<Representation> {
        &self.target
    }

    pub fn space(&self) -> &Subspace {
        &self.space
    }

    pub fn basis(&self) -> &[ModuleMorphism] {
        &self.morphisms
    }

    /// Coordinates of a morphism in this basis; `None` when it is not an
    /// intertwiner of the same pair.
    pub fn coordinates_of(&self, f: &ModuleMorphism) -> Option<Vec<crate::linalg::Scalar>> {
        self.space.coordinates_of(&f.flatten())
    }
}

/// Compute a canonical basis of Hom(X, Y).
pub fn hom_basis(x: &Arc<Representation>, y: &Arc<Representation>) -> Result<HomBasis> {
    if !x.same_algebra(y) {
        return Err(Error::AlgebraMismatch("hom".into()));
    }
    let f = x.field();
    let q = x.algebra().quiver();
    let (offsets, total) = block_offsets(y.dims(), x.dims());

    // unknowns: f_v[i, k] at offset(v) + i * dX_v + k
    let idx = |v: usize, i: usize, k: usize| offsets[v] + i * x.dim_at(v) + k;

    let mut rows: Vec<Vec<crate::linalg::Scalar>> = Vec::new();
    for (ai, a) in q.arrows().iter().enumerate() {
        let xa = x.arrow_matrix(ai);
        let ya = y.arrow_matrix(ai);
        // constraint: f_{a.to} * Xa - Ya * f_{a.from} = 0, one row per entry
        for i in 0..y.dim_at(a.to) {
            for j in 0..x.dim_at(a.from) {
                let mut row = vec![f.zero(); total];
                for k in 0..x.dim_at(a.to) {
                    let c = xa.get(k, j);
                    if !c.is_zero() {
                        let p = idx(a.to, i, k);
                        row[p] = row[p].add(c);
                    }
                }
                for l in 0..y.dim_at(a.from) {
                    let c = ya.get(i, l);
                    if !c.is_zero() {
                        let p = idx(a.from, l, j);
                        row[p] = row[p].sub(c);
                    }
                }
                if row.iter().any(|e| !e.is_zero()) {
                    rows.push(row);
                }
            }
        }
    }

    let space = if rows.is_empty() {
        Subspace::full(f, total)
    } else {
        Matrix::from_rows(f, total, &rows).kernel()
    };

    let mut morphisms = Vec::with_capacity(space.dim());
    for r in space.basis_rows() {
        morphisms.push(ModuleMorphism::from_flat(
            Arc::clone(x),
            Arc::clone(y),
            r,
        )?);
    }
    Ok(HomBasis {
        source: Arc::clone(x),
        target: Arc::clone(y),
        space,
        morphisms,
    })
}

/// Dimension of Hom(X, Y).
pub fn hom_dim(x: &Arc<Representation>, y: &Arc<Representation>) -> Result<usize> {
    Ok(hom_basis(x, y)?.dim())
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
    fn identity_lies_in_end() {
        let alg = fixtures::a2(f101());
        let p1 = Arc::new(alg.projective(0));
        let h = hom_basis(&p1, &p1).unwrap();
        let id = ModuleMorphism::identity(&p1);
        assert!(h.coordinates_of(&id).is_some());
    }

    #[test]
    fn a2_hom_dimensions() {
        let alg = fixtures::a2(f101());
        let s1 = Arc::new(alg.simple(0));
        let s2 = Arc::new(alg.simple(1));
        let p1 = Arc::new(alg.projective(0));
        assert_eq!(hom_dim(&s2, &s1).unwrap(), 0);
        assert_eq!(hom_dim(&p1, &s1).unwrap(), 1);
        assert_eq!(hom_dim(&s2, &p1).unwrap(), 1);
        assert_eq!(hom_dim(&p1, &p1).unwrap(), 1);
    }

    #[test]
    fn yoneda_dimension_check_on_projectives() {
        // dim Hom(P_i, X) = dim X at vertex i
        let alg = fixtures::a3r2(f101());
        for i in 0..3 {
            let p = Arc::new(alg.projective(i));
            for j in 0..3 {
                let x = Arc::new(alg.projective(j));
                assert_eq!(hom_dim(&p, &x).unwrap(), x.dim_at(i), "P_{i} vs P_{j}");
                let s = Arc::new(alg.simple(j));
                assert_eq!(hom_dim(&p, &s).unwrap(), s.dim_at(i));
            }
        }
    }

    #[test]
    fn hom_respects_duality_dimension() {
        let alg = fixtures::a3r2(f101());
        let p1 = Arc::new(alg.projective(0));
        let s2 = Arc::new(alg.simple(1));
        let d_p1 = Arc::new(p1.dualize().unwrap());
        let d_s2 = Arc::new(s2.dualize().unwrap());
        assert_eq!(
            hom_dim(&p1, &s2).unwrap(),
            hom_dim(&d_s2, &d_p1).unwrap()
        );
        assert_eq!(
            hom_dim(&s2, &p1).unwrap(),
            hom_dim(&d_p1, &d_s2).unwrap()
        );
    }

    #[test]
    fn mismatched_algebras_error() {
        let a2 = fixtures::a2(f101());
        let a3 = fixtures::a3r2(f101());
        let x = Arc::new(a2.simple(0));
        let y = Arc::new(a3.simple(0));
        assert!(matches!(
            hom_basis(&x, &y),
            Err(crate::error::Error::AlgebraMismatch(_))
        ));
    }
}
