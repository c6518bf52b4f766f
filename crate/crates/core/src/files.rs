//! On-disk JSON formats: algebra presentations, modules, morphisms and
//! subcategory lists. Scalars travel as strings ("a/b" or "a" over Q,
//! decimal residues over prime fields); matrices as row-major string rows.

use crate::algebra::{build_algebra, AlgebraHandle, Quiver, Relation};
use crate::error::{Error, Result};
use crate::linalg::{FieldSpec, Matrix, Scalar};
use crate::rep::{ModuleMorphism, Representation};
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;
use std::sync::Arc;

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ArrowDto {
    pub name: String,
    pub from: String,
    pub to: String,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct RelationTermDto {
    pub coef: String,
    pub path: Vec<String>,
}

/// An algebra presentation file (UTF-8 JSON).
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct AlgebraFile {
    pub field: FieldSpec,
    pub vertices: Vec<String>,
    pub arrows: Vec<ArrowDto>,
    #[serde(default)]
    pub relations: Vec<Vec<RelationTermDto>>,
}

pub fn algebra_from_file(file: &AlgebraFile) -> Result<AlgebraHandle> {
    if let FieldSpec::Prime { p } = file.field {
        // surfaces non-prime moduli before anything else runs
        FieldSpec::prime(p)?;
    }
    let quiver = Quiver::new(
        file.vertices.clone(),
        file.arrows
            .iter()
            .map(|a| (a.name.clone(), a.from.clone(), a.to.clone()))
            .collect(),
    )?;
    let mut relations = Vec::new();
    for rel in &file.relations {
        let mut terms = Vec::new();
        for term in rel {
            let coef = file.field.parse_scalar(&term.coef)?;
            let mut path = Vec::new();
            for name in &term.path {
                let idx = quiver
                    .arrow_by_name(name)
                    .ok_or_else(|| Error::InvalidInput(format!("unknown arrow {name:?}")))?;
                path.push(idx);
            }
            terms.push((coef, path));
        }
        relations.push(Relation::new(&quiver, terms)?);
    }
    build_algebra(file.field, quiver, relations)
}

pub fn algebra_to_file(alg: &AlgebraHandle) -> AlgebraFile {
    let q = alg.quiver();
    AlgebraFile {
        field: alg.field(),
        vertices: q.vertex_names().to_vec(),
        arrows: q
            .arrows()
            .iter()
            .map(|a| ArrowDto {
                name: a.name.clone(),
                from: q.vertex_name(a.from).to_string(),
                to: q.vertex_name(a.to).to_string(),
            })
            .collect(),
        relations: alg
            .relations()
            .iter()
            .map(|r| {
                r.terms
                    .iter()
                    .map(|(c, p)| RelationTermDto {
                        coef: c.to_string(),
                        path: p.iter().map(|&a| q.arrow(a).name.clone()).collect(),
                    })
                    .collect()
            })
            .collect(),
    }
}

pub fn parse_algebra(json: &str) -> Result<AlgebraHandle> {
    let file: AlgebraFile =
        serde_json::from_str(json).map_err(|e| Error::InvalidInput(format!("algebra file: {e}")))?;
    algebra_from_file(&file)
}

/// A module file: dimensions per vertex name; matrices per arrow name,
/// row-major, rows = dim(target). Missing arrows mean zero matrices.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ModuleFile {
    pub dims: BTreeMap<String, usize>,
    #[serde(default)]
    pub arrows: BTreeMap<String, Vec<Vec<String>>>,
}

fn parse_matrix(
    field: FieldSpec,
    rows: usize,
    cols: usize,
    data: &[Vec<String>],
    what: &str,
) -> Result<Matrix> {
    if data.len() != rows {
        return Err(Error::InvalidInput(format!(
            "{what}: expected {rows} rows, got {}",
            data.len()
        )));
    }
    let mut entries = Vec::with_capacity(rows * cols);
    for row in data {
        if row.len() != cols {
            return Err(Error::InvalidInput(format!(
                "{what}: expected {cols} columns, got {}",
                row.len()
            )));
        }
        for s in row {
            entries.push(field.parse_scalar(s)?);
        }
    }
    Ok(Matrix::from_entries(field, rows, cols, entries))
}

fn matrix_to_rows(m: &Matrix) -> Vec<Vec<String>> {
    (0..m.rows())
        .map(|r| m.row(r).iter().map(Scalar::to_string).collect())
        .collect()
}

pub fn module_from_file(alg: &Arc<AlgebraHandle>, file: &ModuleFile) -> Result<Representation> {
    let q = alg.quiver();
    let field = alg.field();
    let mut dims = vec![0usize; q.vertex_count()];
    for (name, d) in &file.dims {
        let v = q
            .vertex_by_name(name)
            .ok_or_else(|| Error::InvalidInput(format!("unknown vertex {name:?}")))?;
        dims[v] = *d;
    }
    for name in file.arrows.keys() {
        if q.arrow_by_name(name).is_none() {
            return Err(Error::InvalidInput(format!("unknown arrow {name:?}")));
        }
    }
    let mut mats = Vec::with_capacity(q.arrow_count());
    for (i, a) in q.arrows().iter().enumerate() {
        let rows = dims[a.to];
        let cols = dims[a.from];
        let m = match file.arrows.get(&a.name) {
            None => Matrix::zero(field, rows, cols),
            Some(data) => parse_matrix(field, rows, cols, data, &format!("arrow {:?}", a.name))?,
        };
        mats.push(m);
        let _ = i;
    }
    Representation::new(Arc::clone(alg), dims, mats)
}

pub fn module_to_file(rep: &Representation) -> ModuleFile {
    let q = rep.algebra().quiver();
    let dims = (0..q.vertex_count())
        .map(|v| (q.vertex_name(v).to_string(), rep.dim_at(v)))
        .collect();
    let arrows = q
        .arrows()
        .iter()
        .enumerate()
        .map(|(i, a)| (a.name.clone(), matrix_to_rows(rep.arrow_matrix(i))))
        .collect();
    ModuleFile { dims, arrows }
}

pub fn parse_module(alg: &Arc<AlgebraHandle>, json: &str) -> Result<Representation> {
    let file: ModuleFile =
        serde_json::from_str(json).map_err(|e| Error::InvalidInput(format!("module file: {e}")))?;
    module_from_file(alg, &file)
}

/// A morphism file: one block per vertex name, rows = dim of the target.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct MorphismFile {
    pub blocks: BTreeMap<String, Vec<Vec<String>>>,
}

pub fn morphism_from_file(
    source: &Arc<Representation>,
    target: &Arc<Representation>,
    file: &MorphismFile,
) -> Result<ModuleMorphism> {
    let q = source.algebra().quiver();
    let field = source.field();
    for name in file.blocks.keys() {
        if q.vertex_by_name(name).is_none() {
            return Err(Error::InvalidInput(format!("unknown vertex {name:?}")));
        }
    }
    let mut blocks = Vec::with_capacity(q.vertex_count());
    for v in 0..q.vertex_count() {
        let rows = target.dim_at(v);
        let cols = source.dim_at(v);
        let m = match file.blocks.get(q.vertex_name(v)) {
            None => Matrix::zero(field, rows, cols),
            Some(data) => parse_matrix(
                field,
                rows,
                cols,
                data,
                &format!("block at vertex {:?}", q.vertex_name(v)),
            )?,
        };
        blocks.push(m);
    }
    ModuleMorphism::new(Arc::clone(source), Arc::clone(target), blocks)
}

pub fn morphism_to_file(f: &ModuleMorphism) -> MorphismFile {
    let q = f.source().algebra().quiver();
    MorphismFile {
        blocks: (0..q.vertex_count())
            .map(|v| (q.vertex_name(v).to_string(), matrix_to_rows(f.block(v))))
            .collect(),
    }
}

/// A subcategory file: module file paths are resolved by the caller
/// (relative to the subcategory file's directory in the CLI).
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct SubcategoryFile {
    #[serde(default)]
    pub n: Option<usize>,
    #[serde(default)]
    pub claimed_complete: bool,
    pub modules: Vec<String>,
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rep::fixtures;

    #[test]
    fn algebra_file_round_trip() {
        let json = r#"{"field":{"kind":"prime","p":101},
            "vertices":["1","2"],
            "arrows":[{"name":"a","from":"1","to":"2"}],
            "relations":[]}"#;
        let alg = parse_algebra(json).unwrap();
        assert_eq!(alg.dim(), 3);
        let back = algebra_to_file(&alg);
        let again = algebra_from_file(&back).unwrap();
        assert!(again.same_presentation(&alg));
    }

    #[test]
    fn a3r2_relation_parses() {
        let json = r#"{"field":{"kind":"prime","p":101},
            "vertices":["1","2","3"],
            "arrows":[{"name":"a","from":"1","to":"2"},{"name":"b","from":"2","to":"3"}],
            "relations":[[{"coef":"1","path":["a","b"]}]]}"#;
        let alg = parse_algebra(json).unwrap();
        assert_eq!(alg.dim(), 5);
    }

    #[test]
    fn module_round_trip_with_missing_arrows_as_zero() {
        let alg = fixtures::a2(FieldSpec::prime(101).unwrap());
        let json = r#"{"dims":{"1":1,"2":1}}"#;
        let rep = Arc::new(parse_module(&alg, json).unwrap());
        assert!(rep.arrow_matrix(0).is_zero());
        let file = module_to_file(&rep);
        let again = module_from_file(&alg, &file).unwrap();
        assert_eq!(*rep, again);
    }

    #[test]
    fn rational_scalars_round_trip_in_files() {
        let alg = fixtures::a2(FieldSpec::Rational);
        let json = r#"{"dims":{"1":1,"2":1},"arrows":{"a":[["-3/2"]]}}"#;
        let rep = parse_module(&alg, json).unwrap();
        let file = module_to_file(&rep);
        assert_eq!(file.arrows["a"][0][0], "-3/2");
    }

    #[test]
    fn wrong_shape_is_an_input_error() {
        let alg = fixtures::a2(FieldSpec::prime(101).unwrap());
        let json = r#"{"dims":{"1":1,"2":1},"arrows":{"a":[["1","2"]]}}"#;
        assert!(matches!(
            parse_module(&alg, json),
            Err(Error::InvalidInput(_))
        ));
    }

    #[test]
    fn morphism_file_round_trip() {
        let alg = fixtures::a2(FieldSpec::prime(101).unwrap());
        let p1 = Arc::new(alg.projective(0));
        let s1 = Arc::new(alg.simple(0));
        let file = MorphismFile {
            blocks: [("1".to_string(), vec![vec!["1".to_string()]])]
                .into_iter()
                .collect(),
        };
        let f = morphism_from_file(&p1, &s1, &file).unwrap();
        assert!(!f.is_zero());
        let back = morphism_to_file(&f);
        let again = morphism_from_file(&p1, &s1, &back).unwrap();
        assert_eq!(f, again);
    }
}
