//! Morphisms of representations and the surrounding categorical
//! constructions: kernels, images, cokernels, direct sums, composition.

use super::{block_offsets, flatten_blocks, Representation};
use crate::error::{Error, Result};
use crate::linalg::{Matrix, Scalar, Subspace};
use std::fmt;
use std::sync::Arc;

/// A module morphism: one matrix per vertex, intertwining all arrow
/// actions. The intertwining law is re-checked on every construction.
#[derive(Clone, PartialEq, Eq)]
pub struct ModuleMorphism {
    source: Arc<Representation>,
    target: Arc<Representation>,
    blocks: Vec<Matrix>,
}

impl ModuleMorphism {
    pub fn new(
        source: Arc<Representation>,
        target: Arc<Representation>,
        blocks: Vec<Matrix>,
    ) -> Result<Self> {
        if !source.same_algebra(&target) {
            return Err(Error::AlgebraMismatch("morphism endpoints".into()));
        }
        let nv = source.dims().len();
        if blocks.len() != nv {
            return Err(Error::ShapeMismatch(format!(
                "expected {nv} blocks, got {}",
                blocks.len()
            )));
        }
        for v in 0..nv {
            if blocks[v].rows() != target.dim_at(v) || blocks[v].cols() != source.dim_at(v) {
                return Err(Error::ShapeMismatch(format!(
                    "block at vertex {v} wants {}x{}, got {}x{}",
                    target.dim_at(v),
                    source.dim_at(v),
                    blocks[v].rows(),
                    blocks[v].cols()
                )));
            }
        }
        let m = ModuleMorphism {
            source,
            target,
            blocks,
        };
        m.verify_intertwining()?;
        Ok(m)
    }

    /// The intertwining invariant: for every arrow a: u -> v,
    /// block_v * X_a = Y_a * block_u.
    pub fn verify_intertwining(&self) -> Result<()> {
        let q = self.source.algebra().quiver();
        for (i, a) in q.arrows().iter().enumerate() {
            let lhs = self.blocks[a.to].matmul(self.source.arrow_matrix(i))?;
            let rhs = self.target.arrow_matrix(i).matmul(&self.blocks[a.from])?;
            if lhs != rhs {
                return Err(Error::Inconsistency(format!(
                    "intertwining fails at arrow {:?}",
                    a.name
                )));
            }
        }
        Ok(())
    }

    pub fn zero(source: Arc<Representation>, target: Arc<Representation>) -> Self {
        let f = source.field();
        let blocks = (0..source.dims().len())
            .map(|v| Matrix::zero(f, target.dim_at(v), source.dim_at(v)))
            .collect();
        ModuleMorphism {
            source,
            target,
            blocks,
        }
    }

    pub fn identity(rep: &Arc<Representation>) -> Self {
        let f = rep.field();
        let blocks = rep
            .dims()
            .iter()
            .map(|&d| Matrix::identity(f, d))
            .collect();
        ModuleMorphism {
            source: Arc::clone(rep),
            target: Arc::clone(rep),
            blocks,
        }
    }

    pub fn source(&self) -> &Arc<Representation> {
        &self.source
    }

    pub fn target(&self) -> &Arc<Representation> {
        &self.target
    }

    pub fn block(&self, v: usize) -> &Matrix {
        &self.blocks[v]
    }

    pub fn blocks(&self) -> &[Matrix] {
        &self.blocks
    }

    pub fn is_zero(&self) -> bool {
        self.blocks.iter().all(Matrix::is_zero)
    }

    /// Isomorphism test: every block square and invertible.
    pub fn is_iso(&self) -> bool {
        self.source.dims() == self.target.dims()
            && self.blocks.iter().all(Matrix::is_invertible)
    }

    pub fn inverse(&self) -> Option<ModuleMorphism> {
        if !self.is_iso() {
            return None;
        }
        let blocks: Option<Vec<Matrix>> = self.blocks.iter().map(Matrix::inverse).collect();
        Some(ModuleMorphism {
            source: Arc::clone(&self.target),
            target: Arc::clone(&self.source),
            blocks: blocks?,
        })
    }

    /// g.compose(f) = g after f; apply `f` first.
    pub fn compose(&self, f: &ModuleMorphism) -> Result<ModuleMorphism> {
        if !self.source.same_algebra(f.target()) || self.source.dims() != f.target().dims() {
            return Err(Error::ShapeMismatch(
                "compose: inner objects do not match".into(),
            ));
        }
        let blocks: Result<Vec<Matrix>> = (0..self.blocks.len())
            .map(|v| self.blocks[v].matmul(f.block(v)))
            .collect();
        Ok(ModuleMorphism {
            source: Arc::clone(f.source()),
            target: Arc::clone(&self.target),
            blocks: blocks?,
        })
    }

    pub fn add(&self, rhs: &ModuleMorphism) -> Result<ModuleMorphism> {
        let blocks: Result<Vec<Matrix>> = self
            .blocks
            .iter()
            .zip(rhs.blocks.iter())
            .map(|(a, b)| a.add(b))
            .collect();
        Ok(ModuleMorphism {
            source: Arc::clone(&self.source),
            target: Arc::clone(&self.target),
            blocks: blocks?,
        })
    }

    pub fn sub(&self, rhs: &ModuleMorphism) -> Result<ModuleMorphism> {
        self.add(&rhs.scale(&self.source.field().one().neg()))
    }

    pub fn scale(&self, s: &Scalar) -> ModuleMorphism {
        ModuleMorphism {
            source: Arc::clone(&self.source),
            target: Arc::clone(&self.target),
            blocks: self.blocks.iter().map(|b| b.scale(s)).collect(),
        }
    }

    /// Blockwise power of an endomorphism.
    pub fn pow(&self, e: usize) -> Result<ModuleMorphism> {
        if self.source.dims() != self.target.dims() {
            return Err(Error::ShapeMismatch("pow of a non-endomorphism".into()));
        }
        let blocks: Result<Vec<Matrix>> = self.blocks.iter().map(|b| b.pow(e)).collect();
        Ok(ModuleMorphism {
            source: Arc::clone(&self.source),
            target: Arc::clone(&self.target),
            blocks: blocks?,
        })
    }

    /// Flattened coordinates in the Hom-space convention.
    pub fn flatten(&self) -> Vec<Scalar> {
        flatten_blocks(&self.blocks)
    }

    /// Rebuild a morphism from flattened coordinates.
    pub fn from_flat(
        source: Arc<Representation>,
        target: Arc<Representation>,
        flat: &[Scalar],
    ) -> Result<ModuleMorphism> {
        let (offsets, total) = block_offsets(target.dims(), source.dims());
        if flat.len() != total {
            return Err(Error::ShapeMismatch(format!(
                "flat length {} vs expected {total}",
                flat.len()
            )));
        }
        let f = source.field();
        let mut blocks = Vec::with_capacity(source.dims().len());
        for v in 0..source.dims().len() {
            let r = target.dim_at(v);
            let c = source.dim_at(v);
            let entries = flat[offsets[v]..offsets[v] + r * c].to_vec();
            blocks.push(Matrix::from_entries(f, r, c, entries));
        }
        ModuleMorphism::new(source, target, blocks)
    }

    /// The dual morphism between the dualized modules over the opposite
    /// algebra (contravariant: source and target swap).
    pub fn dualize(&self) -> Result<ModuleMorphism> {
        let opp = Arc::new(self.source.algebra().opposite()?);
        let dsrc = Arc::new(self.target.dualize_onto(Arc::clone(&opp)));
        let dtgt = Arc::new(self.source.dualize_onto(opp));
        let blocks = self.blocks.iter().map(Matrix::transpose).collect();
        ModuleMorphism::new(dsrc, dtgt, blocks)
    }
}

impl fmt::Debug for ModuleMorphism {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Morphism({:?} -> {:?})", self.source, self.target)
    }
}

/// Build the subrepresentation spanned by per-vertex row subspaces, which
/// must be closed under the arrow actions; returns it with its inclusion.
pub(crate) fn subrep_from_subspaces(
    x: &Arc<Representation>,
    spaces: &[Subspace],
) -> Result<(Arc<Representation>, ModuleMorphism)> {
    let q = x.algebra().quiver();
    let f = x.field();
    let dims: Vec<usize> = spaces.iter().map(Subspace::dim).collect();
    let mut arrows = Vec::with_capacity(q.arrow_count());
    for (i, a) in q.arrows().iter().enumerate() {
        let mut m = Matrix::zero(f, dims[a.to], dims[a.from]);
        for (col, basis_vec) in spaces[a.from].basis_rows().enumerate() {
            // image of the basis vector under the arrow action, as a column
            let vec_col = Matrix::col_vector(f, basis_vec);
            let img = x.arrow_matrix(i).matmul(&vec_col)?;
            let img_row: Vec<Scalar> = (0..img.rows()).map(|r| img.get(r, 0).clone()).collect();
            let coords = spaces[a.to].coordinates_of(&img_row).ok_or_else(|| {
                Error::Inconsistency("subspaces are not closed under the arrows".into())
            })?;
            for (row, c) in coords.into_iter().enumerate() {
                m.set(row, col, c);
            }
        }
        arrows.push(m);
    }
    let sub = Arc::new(Representation::new(
        Arc::clone(x.algebra()),
        dims.clone(),
        arrows,
    )?);
    // inclusion blocks: columns are the subspace basis vectors
    let blocks: Vec<Matrix> = spaces
        .iter()
        .map(|s| s.basis_matrix().transpose())
        .collect();
    let incl = ModuleMorphism::new(Arc::clone(&sub), Arc::clone(x), blocks)?;
    Ok((sub, incl))
}

/// Kernel of `f` as a representation with its inclusion into the source.
pub fn kernel_rep(f: &ModuleMorphism) -> Result<(Arc<Representation>, ModuleMorphism)> {
    let spaces: Vec<Subspace> = f.blocks().iter().map(Matrix::kernel).collect();
    subrep_from_subspaces(f.source(), &spaces)
}

/// Image of `f` as a representation with its inclusion into the target.
pub fn image_rep(f: &ModuleMorphism) -> Result<(Arc<Representation>, ModuleMorphism)> {
    let spaces: Vec<Subspace> = f
        .blocks()
        .iter()
        .map(|b| Subspace::from_span_matrix(&b.transpose()))
        .collect();
    subrep_from_subspaces(f.target(), &spaces)
}

/// Cokernel of `f` as a representation with the projection from the target.
/// Coset representatives are the standard coordinates away from the pivots
/// of the echelonized image.
pub fn cokernel_rep(f: &ModuleMorphism) -> Result<(Arc<Representation>, ModuleMorphism)> {
    let y = f.target();
    let q = y.algebra().quiver();
    let fld = y.field();
    let images: Vec<Subspace> = f
        .blocks()
        .iter()
        .map(|b| Subspace::from_span_matrix(&b.transpose()))
        .collect();

    // projection per vertex: v -> residue of v, written on non-pivot coords
    let mut proj_blocks = Vec::new();
    let mut dims = Vec::new();
    let mut free_coords: Vec<Vec<usize>> = Vec::new();
    for v in 0..y.dims().len() {
        let img = &images[v];
        let pivots: std::collections::BTreeSet<usize> = img
            .basis_rows()
            .map(|row| row.iter().position(|e| !e.is_zero()).unwrap())
            .collect();
        let free: Vec<usize> = (0..y.dim_at(v)).filter(|c| !pivots.contains(c)).collect();
        let mut p = Matrix::zero(fld, free.len(), y.dim_at(v));
        for col in 0..y.dim_at(v) {
            let mut e = vec![fld.zero(); y.dim_at(v)];
            e[col] = fld.one();
            let residue = img.reduce(&e);
            for (row, &fc) in free.iter().enumerate() {
                p.set(row, col, residue[fc].clone());
            }
        }
        dims.push(free.len());
        free_coords.push(free);
        proj_blocks.push(p);
    }

    // induced arrow maps on the quotient
    let mut arrows = Vec::new();
    for (i, a) in q.arrows().iter().enumerate() {
        // quotient basis at a.from corresponds to free standard coords
        let mut m = Matrix::zero(fld, dims[a.to], dims[a.from]);
        for (col, &fc) in free_coords[a.from].iter().enumerate() {
            let mut e = vec![fld.zero(); y.dim_at(a.from)];
            e[fc] = fld.one();
            let e_col = Matrix::col_vector(fld, &e);
            let img = y.arrow_matrix(i).matmul(&e_col)?;
            let img_row: Vec<Scalar> = (0..img.rows()).map(|r| img.get(r, 0).clone()).collect();
            let residue = images[a.to].reduce(&img_row);
            for (row, &tc) in free_coords[a.to].iter().enumerate() {
                m.set(row, col, residue[tc].clone());
            }
        }
        arrows.push(m);
    }
    let coker = Arc::new(Representation::new(
        Arc::clone(y.algebra()),
        dims,
        arrows,
    )?);
    let proj = ModuleMorphism::new(Arc::clone(y), Arc::clone(&coker), proj_blocks)?;
    Ok((coker, proj))
}

/// A direct sum together with its canonical injections and projections.
pub struct SumEmbedding {
    pub sum: Arc<Representation>,
    pub injections: Vec<ModuleMorphism>,
    pub projections: Vec<ModuleMorphism>,
}

pub fn direct_sum(parts: &[Arc<Representation>]) -> Result<SumEmbedding> {
    assert!(!parts.is_empty(), "direct sum of nothing; pass the zero rep");
    let alg = Arc::clone(parts[0].algebra());
    let q = alg.quiver();
    let fld = alg.field();
    for p in parts {
        if !p.same_algebra(&parts[0]) {
            return Err(Error::AlgebraMismatch("direct sum".into()));
        }
    }
    let nv = q.vertex_count();
    let dims: Vec<usize> = (0..nv)
        .map(|v| parts.iter().map(|p| p.dim_at(v)).sum())
        .collect();
    let mut arrows = Vec::with_capacity(q.arrow_count());
    for (i, a) in q.arrows().iter().enumerate() {
        let mut m = Matrix::zero(fld, dims[a.to], dims[a.from]);
        let mut ro = 0;
        let mut co = 0;
        for p in parts {
            let blk = p.arrow_matrix(i);
            for r in 0..blk.rows() {
                for c in 0..blk.cols() {
                    m.set(ro + r, co + c, blk.get(r, c).clone());
                }
            }
            ro += p.dim_at(a.to);
            co += p.dim_at(a.from);
        }
        arrows.push(m);
    }
    let sum = Arc::new(Representation::new(alg, dims.clone(), arrows)?);

    let mut injections = Vec::new();
    let mut projections = Vec::new();
    let mut offsets = vec![0usize; nv];
    for p in parts {
        let mut inj_blocks = Vec::new();
        let mut proj_blocks = Vec::new();
        for v in 0..nv {
            let mut inj = Matrix::zero(fld, dims[v], p.dim_at(v));
            let mut proj = Matrix::zero(fld, p.dim_at(v), dims[v]);
            for r in 0..p.dim_at(v) {
                inj.set(offsets[v] + r, r, fld.one());
                proj.set(r, offsets[v] + r, fld.one());
            }
            inj_blocks.push(inj);
            proj_blocks.push(proj);
        }
        injections.push(ModuleMorphism::new(
            Arc::clone(p),
            Arc::clone(&sum),
            inj_blocks,
        )?);
        projections.push(ModuleMorphism::new(
            Arc::clone(&sum),
            Arc::clone(p),
            proj_blocks,
        )?);
        for v in 0..nv {
            offsets[v] += p.dim_at(v);
        }
    }
    Ok(SumEmbedding {
        sum,
        injections,
        projections,
    })
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
    fn kernel_of_identity_is_zero_module() {
        let alg = fixtures::a2(f101());
        let p1 = Arc::new(alg.projective(0));
        let id = ModuleMorphism::identity(&p1);
        let (k, incl) = kernel_rep(&id).unwrap();
        assert!(k.is_zero());
        assert!(incl.is_zero());
    }

    #[test]
    fn image_of_zero_is_zero() {
        let alg = fixtures::a2(f101());
        let p1 = Arc::new(alg.projective(0));
        let s1 = Arc::new(alg.simple(0));
        let z = ModuleMorphism::zero(Arc::clone(&p1), s1);
        let (im, _) = image_rep(&z).unwrap();
        assert!(im.is_zero());
    }

    #[test]
    fn cokernel_of_socle_inclusion_in_a2_is_the_top() {
        // S_2 -> P_1 has cokernel S_1
        let alg = fixtures::a2(f101());
        let p1 = Arc::new(alg.projective(0));
        let s2 = Arc::new(alg.simple(1));
        let f = alg.field();
        let blocks = vec![
            Matrix::zero(f, 1, 0),
            Matrix::from_ints(f, 1, 1, &[1]),
        ];
        let incl = ModuleMorphism::new(Arc::clone(&s2), Arc::clone(&p1), blocks).unwrap();
        let (coker, proj) = cokernel_rep(&incl).unwrap();
        assert_eq!(coker.dims(), &[1, 0]);
        assert!(!proj.is_zero());
        assert!(proj.compose(&incl).unwrap().is_zero());
    }

    #[test]
    fn direct_sum_resolves_identity() {
        let alg = fixtures::a2(f101());
        let p1 = Arc::new(alg.projective(0));
        let s1 = Arc::new(alg.simple(0));
        let se = direct_sum(&[p1, s1]).unwrap();
        assert_eq!(se.sum.total_dim(), 3);
        // sum of inj_i proj_i is the identity
        let mut acc = ModuleMorphism::zero(Arc::clone(&se.sum), Arc::clone(&se.sum));
        for (inj, proj) in se.injections.iter().zip(&se.projections) {
            acc = acc.add(&inj.compose(proj).unwrap()).unwrap();
        }
        assert_eq!(acc, ModuleMorphism::identity(&se.sum));
    }

    #[test]
    fn intertwining_violation_is_rejected() {
        let alg = fixtures::a2(f101());
        let p1 = Arc::new(alg.projective(0));
        let s1 = Arc::new(alg.simple(0));
        // a scaled identity block on one vertex only breaks the arrow square
        let f = alg.field();
        let bad = ModuleMorphism::new(
            Arc::clone(&p1),
            Arc::clone(&p1),
            vec![
                Matrix::from_ints(f, 1, 1, &[1]),
                Matrix::from_ints(f, 1, 1, &[2]),
            ],
        );
        assert!(bad.is_err());
        let _ = s1;
    }
}
