//! Modules over a bounded quiver algebra, presented as quiver
//! representations: a dimension per vertex and a matrix per arrow.

mod decomp;
pub mod fixtures;
mod hom;
mod morphism;

pub use decomp::{
    decompose, decompose_grouped, endo_radical, is_indecomposable, is_isomorphic, module_length,
    DecompPiece,
};
pub use hom::{hom_basis, hom_dim, HomBasis};
pub use morphism::{
    cokernel_rep, direct_sum, image_rep, kernel_rep, ModuleMorphism, SumEmbedding,
};

use crate::algebra::AlgebraHandle;
use crate::error::{Error, Result};
use crate::linalg::{Matrix, Scalar};
use std::fmt;
use std::sync::Arc;

/// A finite dimensional left module, stored as a representation. Arrow
/// matrices have shape `dims[target] x dims[source]`; a path `[a, b]` acts
/// as `matrix(b) * matrix(a)` (traverse `a` first).
#[derive(Clone)]
pub struct Representation {
    algebra: Arc<AlgebraHandle>,
    dims: Vec<usize>,
    arrows: Vec<Matrix>,
}

impl PartialEq for Representation {
    fn eq(&self, other: &Self) -> bool {
        self.same_algebra(other) && self.dims == other.dims && self.arrows == other.arrows
    }
}

impl Eq for Representation {}

impl Representation {
    pub fn new(algebra: Arc<AlgebraHandle>, dims: Vec<usize>, arrows: Vec<Matrix>) -> Result<Self> {
        let q = algebra.quiver();
        if dims.len() != q.vertex_count() {
            return Err(Error::ShapeMismatch(format!(
                "expected {} vertex dimensions, got {}",
                q.vertex_count(),
                dims.len()
            )));
        }
        if arrows.len() != q.arrow_count() {
            return Err(Error::ShapeMismatch(format!(
                "expected {} arrow matrices, got {}",
                q.arrow_count(),
                arrows.len()
            )));
        }
        for (i, m) in arrows.iter().enumerate() {
            let a = q.arrow(i);
            if m.rows() != dims[a.to] || m.cols() != dims[a.from] {
                return Err(Error::ShapeMismatch(format!(
                    "arrow {:?} wants {}x{}, got {}x{}",
                    a.name,
                    dims[a.to],
                    dims[a.from],
                    m.rows(),
                    m.cols()
                )));
            }
            if m.field() != algebra.field() {
                return Err(Error::FieldMismatch(format!("arrow {:?}", a.name)));
            }
        }
        let rep = Representation {
            algebra,
            dims,
            arrows,
        };
        rep.check_relations()?;
        Ok(rep)
    }

    pub fn zero(algebra: Arc<AlgebraHandle>) -> Self {
        let q = algebra.quiver();
        let dims = vec![0; q.vertex_count()];
        let arrows = q
            .arrows()
            .iter()
            .map(|_| Matrix::zero(algebra.field(), 0, 0))
            .collect();
        Representation {
            algebra,
            dims,
            arrows,
        }
    }

    fn check_relations(&self) -> Result<()> {
        for rel in self.algebra.relations() {
            let q = self.algebra.quiver();
            let s = rel.source(q);
            let t = rel.target(q);
            let mut acc = Matrix::zero(self.field(), self.dims[t], self.dims[s]);
            for (coef, term) in &rel.terms {
                let m = self.path_matrix(s, term);
                acc = acc.add(&m.scale(coef))?;
            }
            if !acc.is_zero() {
                return Err(Error::InvalidInput(
                    "representation does not satisfy the relations".into(),
                ));
            }
        }
        Ok(())
    }

    /// The linear map realizing a path starting at `source`, arrows applied
    /// left to right.
    pub fn path_matrix(&self, source: usize, arrows: &[usize]) -> Matrix {
        let mut m = Matrix::identity(self.field(), self.dims[source]);
        for &a in arrows {
            m = self.arrows[a].matmul(&m).expect("path is composable");
        }
        m
    }

    pub fn algebra(&self) -> &Arc<AlgebraHandle> {
        &self.algebra
    }

    pub fn field(&self) -> crate::linalg::FieldSpec {
        self.algebra.field()
    }

    pub fn dims(&self) -> &[usize] {
        &self.dims
    }

    pub fn dim_at(&self, v: usize) -> usize {
        self.dims[v]
    }

    pub fn total_dim(&self) -> usize {
        self.dims.iter().sum()
    }

    pub fn is_zero(&self) -> bool {
        self.total_dim() == 0
    }

    pub fn arrow_matrix(&self, a: usize) -> &Matrix {
        &self.arrows[a]
    }

    pub fn arrow_matrices(&self) -> &[Matrix] {
        &self.arrows
    }

    /// Same underlying algebra, by pointer or by presentation.
    pub fn same_algebra(&self, other: &Representation) -> bool {
        Arc::ptr_eq(&self.algebra, &other.algebra)
            || self.algebra.same_presentation(&other.algebra)
    }

    pub fn same_algebra_handle(&self, alg: &Arc<AlgebraHandle>) -> bool {
        Arc::ptr_eq(&self.algebra, alg) || self.algebra.same_presentation(alg)
    }

    /// The dual module over the opposite algebra: same dimensions, each
    /// arrow map replaced by its transpose on the reversed arrow.
    pub fn dualize_onto(&self, opposite: Arc<AlgebraHandle>) -> Representation {
        let q = self.algebra.quiver();
        let oq = opposite.quiver();
        assert_eq!(q.vertex_count(), oq.vertex_count(), "dualize vertex count");
        for i in 0..q.arrow_count() {
            let a = q.arrow(i);
            let o = oq.arrow(i);
            assert!(
                a.name == o.name && a.from == o.to && a.to == o.from,
                "dualize target must be the opposite algebra"
            );
        }
        let arrows = self.arrows.iter().map(Matrix::transpose).collect();
        Representation::new(opposite, self.dims.clone(), arrows)
            .expect("dual satisfies the reversed relations")
    }

    /// Dualize, building the opposite algebra on the fly.
    pub fn dualize(&self) -> Result<Representation> {
        let opp = Arc::new(self.algebra.opposite()?);
        Ok(self.dualize_onto(opp))
    }

    /// A deterministic structural key: dimensions plus all arrow entries.
    /// Used for caches keyed by the representation's content.
    pub fn structural_key(&self) -> String {
        use std::fmt::Write;
        let mut s = String::new();
        write!(s, "{:?}|", self.dims).unwrap();
        for m in &self.arrows {
            for e in m.entries() {
                write!(s, "{e},").unwrap();
            }
            s.push(';');
        }
        s
    }

    /// Kernel of the stacked action of all arrows leaving each vertex: the
    /// socle, as per-vertex subspaces.
    pub fn socle_subspaces(&self) -> Vec<crate::linalg::Subspace> {
        let q = self.algebra.quiver();
        (0..q.vertex_count())
            .map(|v| {
                let mut stacked: Option<Matrix> = None;
                for (i, a) in q.arrows().iter().enumerate() {
                    if a.from != v {
                        continue;
                    }
                    let m = self.arrows[i].clone();
                    stacked = Some(match stacked {
                        None => m,
                        Some(s) => s.vstack(&m),
                    });
                }
                match stacked {
                    None => crate::linalg::Subspace::full(self.field(), self.dims[v]),
                    Some(s) => s.kernel(),
                }
            })
            .collect()
    }
}

impl fmt::Debug for Representation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let q = self.algebra.quiver();
        let dims: Vec<String> = (0..q.vertex_count())
            .map(|v| format!("{}:{}", q.vertex_name(v), self.dims[v]))
            .collect();
        write!(f, "Rep({})", dims.join(", "))
    }
}

/// A scalar-indexed flattening of per-vertex blocks, shared by morphisms
/// and Hom-space coordinates: vertex blocks in order, each row-major.
pub(crate) fn block_offsets(rows: &[usize], cols: &[usize]) -> (Vec<usize>, usize) {
    let mut offsets = Vec::with_capacity(rows.len());
    let mut total = 0;
    for v in 0..rows.len() {
        offsets.push(total);
        total += rows[v] * cols[v];
    }
    (offsets, total)
}

pub(crate) fn flatten_blocks(blocks: &[Matrix]) -> Vec<Scalar> {
    let mut out = Vec::new();
    for b in blocks {
        out.extend(b.flatten());
    }
    out
}
