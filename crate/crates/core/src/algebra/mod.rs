//! Bounded quiver algebras kQ/I: presentation, path basis, projectives,
//! injectives, simples, opposite algebra.

mod basis;

use crate::error::{Error, Result};
use crate::linalg::{FieldSpec, Matrix, Scalar};
use crate::rep::Representation;
use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::sync::Arc;

/// An arrow of the quiver, `from -> to` (vertex indices).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Arrow {
    pub name: String,
    pub from: usize,
    pub to: usize,
}

/// A finite quiver with named vertices and arrows.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Quiver {
    vertices: Vec<String>,
    arrows: Vec<Arrow>,
}

impl Quiver {
    pub fn new(vertices: Vec<String>, arrows: Vec<(String, String, String)>) -> Result<Self> {
        let mut vertex_index = HashMap::new();
        for (i, v) in vertices.iter().enumerate() {
            if vertex_index.insert(v.clone(), i).is_some() {
                return Err(Error::InvalidInput(format!("duplicate vertex {v:?}")));
            }
        }
        let mut seen = HashMap::new();
        let mut out = Vec::new();
        for (name, from, to) in arrows {
            if seen.insert(name.clone(), ()).is_some() {
                return Err(Error::InvalidInput(format!("duplicate arrow {name:?}")));
            }
            let from = *vertex_index
                .get(&from)
                .ok_or_else(|| Error::InvalidInput(format!("unknown vertex {from:?}")))?;
            let to = *vertex_index
                .get(&to)
                .ok_or_else(|| Error::InvalidInput(format!("unknown vertex {to:?}")))?;
            out.push(Arrow { name, from, to });
        }
        Ok(Quiver {
            vertices,
            arrows: out,
        })
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn arrow_count(&self) -> usize {
        self.arrows.len()
    }

    pub fn vertex_name(&self, i: usize) -> &str {
        &self.vertices[i]
    }

    pub fn vertex_names(&self) -> &[String] {
        &self.vertices
    }

    pub fn vertex_by_name(&self, name: &str) -> Option<usize> {
        self.vertices.iter().position(|v| v == name)
    }

    pub fn arrow(&self, i: usize) -> &Arrow {
        &self.arrows[i]
    }

    pub fn arrows(&self) -> &[Arrow] {
        &self.arrows
    }

    pub fn arrow_by_name(&self, name: &str) -> Option<usize> {
        self.arrows.iter().position(|a| a.name == name)
    }

    /// Same vertices, every arrow reversed (names kept).
    pub fn reversed(&self) -> Quiver {
        Quiver {
            vertices: self.vertices.clone(),
            arrows: self
                .arrows
                .iter()
                .map(|a| Arrow {
                    name: a.name.clone(),
                    from: a.to,
                    to: a.from,
                })
                .collect(),
        }
    }
}

/// One relation: a linear combination of parallel paths, each of length
/// at least two. Paths compose left to right: `[a, b]` traverses `a` first.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Relation {
    pub terms: Vec<(Scalar, Vec<usize>)>,
}

impl Relation {
    /// Validate a relation against the quiver: composable paths of length
    /// >= 2, all sharing one source and one target, nonzero coefficients.
    pub fn new(quiver: &Quiver, terms: Vec<(Scalar, Vec<usize>)>) -> Result<Self> {
        if terms.is_empty() {
            return Err(Error::NotAdmissible("empty relation".into()));
        }
        let mut st: Option<(usize, usize)> = None;
        for (coef, path) in &terms {
            if coef.is_zero() {
                return Err(Error::NotAdmissible("zero coefficient in relation".into()));
            }
            if path.len() < 2 {
                return Err(Error::NotAdmissible(format!(
                    "relation path of length {} < 2",
                    path.len()
                )));
            }
            for w in path.windows(2) {
                if quiver.arrow(w[0]).to != quiver.arrow(w[1]).from {
                    return Err(Error::NotAdmissible(format!(
                        "path not composable: {} then {}",
                        quiver.arrow(w[0]).name,
                        quiver.arrow(w[1]).name
                    )));
                }
            }
            let s = quiver.arrow(path[0]).from;
            let t = quiver.arrow(*path.last().unwrap()).to;
            match st {
                None => st = Some((s, t)),
                Some(p) if p != (s, t) => {
                    return Err(Error::NotAdmissible(
                        "relation terms do not share source and target".into(),
                    ))
                }
                _ => {}
            }
        }
        Ok(Relation { terms })
    }

    pub fn source(&self, quiver: &Quiver) -> usize {
        quiver.arrow(self.terms[0].1[0]).from
    }

    pub fn target(&self, quiver: &Quiver) -> usize {
        quiver.arrow(*self.terms[0].1.last().unwrap()).to
    }

    fn reversed(&self) -> Relation {
        Relation {
            terms: self
                .terms
                .iter()
                .map(|(c, p)| (c.clone(), p.iter().rev().copied().collect()))
                .collect(),
        }
    }
}

/// A residue-class representative path of the algebra.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BasisPath {
    pub source: usize,
    pub target: usize,
    pub arrows: Vec<usize>,
}

impl BasisPath {
    pub fn len(&self) -> usize {
        self.arrows.len()
    }

    pub fn is_trivial(&self) -> bool {
        self.arrows.is_empty()
    }

    pub fn display(&self, quiver: &Quiver) -> String {
        if self.arrows.is_empty() {
            format!("e_{}", quiver.vertex_name(self.source))
        } else {
            self.arrows
                .iter()
                .map(|&a| quiver.arrow(a).name.clone())
                .collect::<Vec<_>>()
                .join("*")
        }
    }
}

/// A bounded quiver algebra with its computed path basis and the action of
/// right multiplication by arrows, immutable after construction.
pub struct AlgebraHandle {
    field: FieldSpec,
    quiver: Quiver,
    relations: Vec<Relation>,
    basis: Vec<BasisPath>,
    /// (source, target) -> ordered basis indices.
    by_pair: BTreeMap<(usize, usize), Vec<usize>>,
    /// Position of each basis path inside its pair list.
    pair_pos: Vec<usize>,
    /// step[b][a] = expansion of (basis path b) * (arrow a) in the basis.
    step: Vec<HashMap<usize, Vec<(usize, Scalar)>>>,
}

impl fmt::Debug for AlgebraHandle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "AlgebraHandle(dim {}, {} vertices, {} arrows, {} relations, over {})",
            self.dim(),
            self.quiver.vertex_count(),
            self.quiver.arrow_count(),
            self.relations.len(),
            self.field
        )
    }
}

/// Hard cap on path length during basis construction.
pub const DEFAULT_LENGTH_CAP: usize = 32;
/// Hard cap on the number of free paths enumerated.
pub const DEFAULT_PATH_BUDGET: usize = 200_000;

pub fn build_algebra(
    field: FieldSpec,
    quiver: Quiver,
    relations: Vec<Relation>,
) -> Result<AlgebraHandle> {
    basis::build(field, quiver, relations, DEFAULT_LENGTH_CAP, DEFAULT_PATH_BUDGET)
}

impl AlgebraHandle {
    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn quiver(&self) -> &Quiver {
        &self.quiver
    }

    pub fn relations(&self) -> &[Relation] {
        &self.relations
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis_paths(&self) -> &[BasisPath] {
        &self.basis
    }

    /// Basis indices of paths from `i` to `j`.
    pub fn pair_basis(&self, i: usize, j: usize) -> &[usize] {
        self.by_pair.get(&(i, j)).map(|v| v.as_slice()).unwrap_or(&[])
    }

    /// Presentation equality: same field, vertices, arrows and relations.
    pub fn same_presentation(&self, other: &AlgebraHandle) -> bool {
        self.field == other.field
            && self.quiver == other.quiver
            && self.relations == other.relations
    }

    /// Expansion of (basis element b) * (arrow a) in the basis; zero when
    /// the paths do not compose.
    pub fn step(&self, b: usize, arrow: usize) -> &[(usize, Scalar)] {
        static EMPTY: &[(usize, Scalar)] = &[];
        self.step[b]
            .get(&arrow)
            .map(|v| v.as_slice())
            .unwrap_or(EMPTY)
    }

    /// Product of two basis elements, expanded in the basis.
    pub fn multiply_basis(&self, b1: usize, b2: usize) -> Vec<(usize, Scalar)> {
        if self.basis[b1].target != self.basis[b2].source {
            return Vec::new();
        }
        let mut acc: Vec<(usize, Scalar)> = vec![(b1, self.field.one())];
        for &a in &self.basis[b2].arrows {
            let mut next: BTreeMap<usize, Scalar> = BTreeMap::new();
            for (b, c) in &acc {
                for (nb, nc) in self.step(*b, a) {
                    let e = next.entry(*nb).or_insert_with(|| self.field.zero());
                    *e = e.add(&c.mul(nc));
                }
            }
            acc = next.into_iter().filter(|(_, c)| !c.is_zero()).collect();
            if acc.is_empty() {
                return acc;
            }
        }
        acc
    }

    /// The opposite algebra: reversed arrows, reversed relation paths.
    pub fn opposite(&self) -> Result<AlgebraHandle> {
        let quiver = self.quiver.reversed();
        let relations = self.relations.iter().map(Relation::reversed).collect();
        build_algebra(self.field, quiver, relations)
    }

    /// The indecomposable projective at vertex `i`, as a representation:
    /// the space at vertex `j` has the basis paths `i -> j`, and arrows act
    /// by path extension followed by reduction.
    pub fn projective(self: &Arc<Self>, i: usize) -> Representation {
        let nv = self.quiver.vertex_count();
        let dims: Vec<usize> = (0..nv).map(|j| self.pair_basis(i, j).len()).collect();
        let mut mats = Vec::with_capacity(self.quiver.arrow_count());
        for (aidx, arrow) in self.quiver.arrows().iter().enumerate() {
            let src_list = self.pair_basis(i, arrow.from).to_vec();
            let tgt_list = self.pair_basis(i, arrow.to).to_vec();
            let mut m = Matrix::zero(self.field, tgt_list.len(), src_list.len());
            for (col, &b) in src_list.iter().enumerate() {
                for (nb, c) in self.step(b, aidx) {
                    let row = self.pair_pos[*nb];
                    debug_assert_eq!(tgt_list[row], *nb);
                    m.set(row, col, c.clone());
                }
            }
            mats.push(m);
        }
        Representation::new(Arc::clone(self), dims, mats)
            .expect("projective representation must satisfy the relations")
    }

    /// The simple at vertex `i`: one-dimensional at `i`, zero elsewhere.
    pub fn simple(self: &Arc<Self>, i: usize) -> Representation {
        let nv = self.quiver.vertex_count();
        let dims: Vec<usize> = (0..nv).map(|j| usize::from(j == i)).collect();
        let mats = self
            .quiver
            .arrows()
            .iter()
            .map(|a| Matrix::zero(self.field, dims[a.to], dims[a.from]))
            .collect();
        Representation::new(Arc::clone(self), dims, mats).expect("simple is a representation")
    }

    /// The indecomposable injective at vertex `i`: the dual of the
    /// projective at `i` over the opposite algebra.
    pub fn injective(self: &Arc<Self>, i: usize) -> Result<Representation> {
        let opp = Arc::new(self.opposite()?);
        let p = opp.projective(i);
        Ok(p.dualize_onto(Arc::clone(self)))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rep::fixtures;

    #[test]
    fn a2_has_dimension_three() {
        let alg = fixtures::a2(FieldSpec::prime(101).unwrap());
        assert_eq!(alg.dim(), 3);
        let names: Vec<String> = alg
            .basis_paths()
            .iter()
            .map(|p| p.display(alg.quiver()))
            .collect();
        assert!(names.contains(&"e_1".to_string()));
        assert!(names.contains(&"e_2".to_string()));
        assert!(names.contains(&"a".to_string()));
    }

    #[test]
    fn a3r2_relation_kills_the_long_path() {
        let alg = fixtures::a3r2(FieldSpec::prime(101).unwrap());
        assert_eq!(alg.dim(), 5);
        // ab reduces to zero
        let a = alg.quiver().arrow_by_name("a").unwrap();
        let b_arrow = alg.quiver().arrow_by_name("b").unwrap();
        let a_basis = alg
            .basis_paths()
            .iter()
            .position(|p| p.arrows == vec![a])
            .unwrap();
        assert!(alg.step(a_basis, b_arrow).is_empty());
    }

    #[test]
    fn loop_without_relations_is_not_admissible() {
        let q = Quiver::new(
            vec!["1".into()],
            vec![("x".into(), "1".into(), "1".into())],
        )
        .unwrap();
        let err = build_algebra(FieldSpec::prime(101).unwrap(), q, vec![]);
        assert!(matches!(err, Err(Error::NotAdmissible(_))));
    }

    #[test]
    fn loop_with_nilpotency_relation_is_fine() {
        let f = FieldSpec::prime(101).unwrap();
        let q = Quiver::new(
            vec!["1".into()],
            vec![("x".into(), "1".into(), "1".into())],
        )
        .unwrap();
        let rel = Relation::new(&q, vec![(f.one(), vec![0, 0, 0])]).unwrap();
        let alg = build_algebra(f, q, vec![rel]).unwrap();
        // basis e, x, x^2
        assert_eq!(alg.dim(), 3);
    }

    #[test]
    fn opposite_is_an_involution() {
        let alg = fixtures::a3r2(FieldSpec::prime(101).unwrap());
        let opp = alg.opposite().unwrap();
        assert_eq!(opp.dim(), 5);
        let rel = &opp.relations()[0];
        assert_eq!(rel.terms[0].1.len(), 2);
        let back = opp.opposite().unwrap();
        assert!(back.same_presentation(&alg));
    }

    #[test]
    fn multiplication_table_is_associative() {
        let alg = fixtures::a3r2(FieldSpec::prime(101).unwrap());
        let f = alg.field();
        let n = alg.dim();
        let expand = |terms: Vec<(usize, Scalar)>, c: usize| {
            let mut acc: BTreeMap<usize, Scalar> = BTreeMap::new();
            for (b, coef) in terms {
                for (nb, nc) in alg.multiply_basis(b, c) {
                    let e = acc.entry(nb).or_insert_with(|| f.zero());
                    *e = e.add(&coef.mul(&nc));
                }
            }
            acc.into_iter().filter(|(_, c)| !c.is_zero()).collect::<Vec<_>>()
        };
        for x in 0..n {
            for y in 0..n {
                let xy = alg.multiply_basis(x, y);
                for z in 0..n {
                    let xy_z = expand(xy.clone(), z);
                    let yz = alg.multiply_basis(y, z);
                    let mut x_yz: BTreeMap<usize, Scalar> = BTreeMap::new();
                    for (b, coef) in &yz {
                        for (nb, nc) in alg.multiply_basis(x, *b) {
                            let e = x_yz.entry(nb).or_insert_with(|| f.zero());
                            *e = e.add(&coef.mul(&nc));
                        }
                    }
                    let x_yz: Vec<_> =
                        x_yz.into_iter().filter(|(_, c)| !c.is_zero()).collect();
                    assert_eq!(xy_z, x_yz, "associativity failed at ({x},{y},{z})");
                }
            }
        }
    }

    #[test]
    fn idempotents_sum_to_identity_dimension() {
        let alg = fixtures::a2(FieldSpec::Rational);
        let total: usize = (0..2)
            .flat_map(|i| (0..2).map(move |j| (i, j)))
            .map(|(i, j)| alg.pair_basis(i, j).len())
            .sum();
        assert_eq!(total, alg.dim());
    }
}
