//! Subspaces as canonical reduced-row-echelon bases.
//!
//! Two subspaces are equal exactly when their structs are equal, which is
//! what makes radical-power comparisons and certificate diffs reliable.

use super::matrix::Matrix;
use super::scalar::{FieldSpec, Scalar};
use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Subspace {
    field: FieldSpec,
    ambient: usize,
    /// Echelonized basis rows (RREF, no zero rows).
    basis: Matrix,
    pivots: Vec<usize>,
}

impl Subspace {
    pub fn zero(field: FieldSpec, ambient: usize) -> Self {
        Subspace {
            field,
            ambient,
            basis: Matrix::zero(field, 0, ambient),
            pivots: Vec::new(),
        }
    }

    pub fn full(field: FieldSpec, ambient: usize) -> Self {
        let id = Matrix::identity(field, ambient);
        Subspace {
            field,
            ambient,
            pivots: (0..ambient).collect(),
            basis: id,
        }
    }

    /// Canonicalize a spanning set of row vectors.
    pub fn from_rows(field: FieldSpec, ambient: usize, rows: Vec<Vec<Scalar>>) -> Self {
        if rows.is_empty() {
            return Self::zero(field, ambient);
        }
        let m = Matrix::from_rows(field, ambient, &rows);
        Self::from_span_matrix(&m)
    }

    /// Canonicalize the row space of a matrix.
    pub fn from_span_matrix(m: &Matrix) -> Self {
        let (rref, pivots) = m.rref();
        let rank = pivots.len();
        let mut rows = Vec::with_capacity(rank);
        for r in 0..rank {
            rows.push(rref.row(r).to_vec());
        }
        Subspace {
            field: m.field(),
            ambient: m.cols(),
            basis: Matrix::from_rows(m.field(), m.cols(), &rows),
            pivots,
        }
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.basis.rows()
    }

    pub fn is_zero(&self) -> bool {
        self.dim() == 0
    }

    pub fn basis_matrix(&self) -> &Matrix {
        &self.basis
    }

    pub fn basis_row(&self, i: usize) -> &[Scalar] {
        self.basis.row(i)
    }

    pub fn basis_rows(&self) -> impl Iterator<Item = &[Scalar]> {
        (0..self.dim()).map(move |i| self.basis.row(i))
    }

    fn check_compatible(&self, rhs: &Subspace, what: &str) -> Result<()> {
        if self.field != rhs.field {
            return Err(Error::FieldMismatch(what.into()));
        }
        if self.ambient != rhs.ambient {
            return Err(Error::ShapeMismatch(format!(
                "{what}: ambient {} vs {}",
                self.ambient, rhs.ambient
            )));
        }
        Ok(())
    }

    /// Residue of `v` after reduction by the echelon basis; zero iff `v`
    /// lies in the subspace.
    pub fn reduce(&self, v: &[Scalar]) -> Vec<Scalar> {
        assert_eq!(v.len(), self.ambient, "vector length mismatch");
        let mut out = v.to_vec();
        for (row, &pc) in self.pivots.iter().enumerate() {
            if out[pc].is_zero() {
                continue;
            }
            let f = out[pc].clone();
            for c in 0..self.ambient {
                out[c] = out[c].sub(&f.mul(&self.basis.row(row)[c]));
            }
        }
        out
    }

    pub fn contains_vector(&self, v: &[Scalar]) -> bool {
        self.reduce(v).iter().all(Scalar::is_zero)
    }

    /// Coefficients of `v` in the echelon basis, if `v` lies in the span.
    pub fn coordinates_of(&self, v: &[Scalar]) -> Option<Vec<Scalar>> {
        if !self.contains_vector(v) {
            return None;
        }
        // RREF basis: the coefficient on row i is just v at the i-th pivot.
        Some(self.pivots.iter().map(|&pc| v[pc].clone()).collect())
    }

    pub fn contains(&self, other: &Subspace) -> bool {
        other.basis_rows().all(|r| self.contains_vector(r))
    }

    pub fn sum(&self, rhs: &Subspace) -> Result<Subspace> {
        self.check_compatible(rhs, "subspace sum")?;
        if self.is_zero() {
            return Ok(rhs.clone());
        }
        if rhs.is_zero() {
            return Ok(self.clone());
        }
        Ok(Self::from_span_matrix(&self.basis.vstack(&rhs.basis)))
    }

    /// Intersection via the left null space of the stacked bases: a vector
    /// (c, d) with c*A + d*B = 0 yields the intersection element c*A.
    pub fn intersect(&self, rhs: &Subspace) -> Result<Subspace> {
        self.check_compatible(rhs, "subspace intersection")?;
        if self.is_zero() || rhs.is_zero() {
            return Ok(Subspace::zero(self.field, self.ambient));
        }
        let stacked = self.basis.vstack(&rhs.basis);
        let left_null = stacked.transpose().kernel();
        let a = self.dim();
        let mut rows = Vec::new();
        for kv in left_null.basis_rows() {
            let mut row = vec![self.field.zero(); self.ambient];
            for (i, coef) in kv[..a].iter().enumerate() {
                if coef.is_zero() {
                    continue;
                }
                for c in 0..self.ambient {
                    row[c] = row[c].add(&coef.mul(&self.basis.row(i)[c]));
                }
            }
            rows.push(row);
        }
        Ok(Subspace::from_rows(self.field, self.ambient, rows))
    }
}
