//! Path basis construction by linear reduction.
//!
//! Free paths are enumerated by increasing length and reduced modulo the
//! span of all relations multiplied by paths on both sides. Echelon pivots
//! are placed on the longest paths, so every pivot path rewrites into
//! strictly earlier ones and the surviving non-pivot paths form the basis.
//! The construction stops once a length adds no basis path and one further
//! stage confirms the ideal span has stabilized on everything shorter; this
//! is a linear stage-by-stage closure, not a noncommutative Groebner engine,
//! which is enough for the presentations this workbench targets.

use super::{AlgebraHandle, BasisPath, Quiver, Relation};
use crate::error::{Error, Result};
use crate::linalg::{FieldSpec, Matrix, Scalar};
use std::collections::{BTreeMap, BTreeSet, HashMap};

struct PathRegistry {
    paths: Vec<BasisPath>,
    index: HashMap<(usize, Vec<usize>), usize>,
    by_level: Vec<Vec<usize>>,
    by_target: Vec<Vec<usize>>,
    by_source: Vec<Vec<usize>>,
}

impl PathRegistry {
    fn new(quiver: &Quiver) -> Self {
        let nv = quiver.vertex_count();
        let mut reg = PathRegistry {
            paths: Vec::new(),
            index: HashMap::new(),
            by_level: vec![Vec::new()],
            by_target: vec![Vec::new(); nv],
            by_source: vec![Vec::new(); nv],
        };
        for v in 0..nv {
            reg.insert(BasisPath {
                source: v,
                target: v,
                arrows: Vec::new(),
            });
        }
        reg
    }

    fn insert(&mut self, p: BasisPath) -> usize {
        let level = p.arrows.len();
        while self.by_level.len() <= level {
            self.by_level.push(Vec::new());
        }
        let idx = self.paths.len();
        self.index.insert((p.source, p.arrows.clone()), idx);
        self.by_level[level].push(idx);
        self.by_target[p.target].push(idx);
        self.by_source[p.source].push(idx);
        self.paths.push(p);
        idx
    }

    fn lookup(&self, source: usize, arrows: &[usize]) -> Option<usize> {
        self.index.get(&(source, arrows.to_vec())).copied()
    }

    /// Extend every path of length `level - 1` by every composable arrow.
    fn grow_level(&mut self, quiver: &Quiver, level: usize, budget: usize) -> Result<usize> {
        assert!(level >= 1);
        let prev: Vec<usize> = self.by_level.get(level - 1).cloned().unwrap_or_default();
        let mut added = 0;
        for idx in prev {
            let (src, tgt, arrows) = {
                let p = &self.paths[idx];
                (p.source, p.target, p.arrows.clone())
            };
            for (aidx, arrow) in quiver.arrows().iter().enumerate() {
                if arrow.from != tgt {
                    continue;
                }
                let mut ext = arrows.clone();
                ext.push(aidx);
                self.insert(BasisPath {
                    source: src,
                    target: arrow.to,
                    arrows: ext,
                });
                added += 1;
                if self.paths.len() > budget {
                    return Err(Error::NotAdmissible(format!(
                        "more than {budget} paths enumerated; arrow ideal does not look nilpotent"
                    )));
                }
            }
        }
        Ok(added)
    }

    fn count_up_to(&self, level: usize) -> usize {
        self.by_level
            .iter()
            .take(level + 1)
            .map(Vec::len)
            .sum()
    }
}

struct Stage {
    /// Basis path indices (non-pivots), ascending registry order.
    basis: Vec<usize>,
    /// Pivot path -> linear combination of basis paths.
    reductions: HashMap<usize, Vec<(usize, Scalar)>>,
}

/// Linear reduction of all paths of length <= `level` modulo the products
/// u * r * v whose every term stays within `level`.
fn run_stage(
    field: FieldSpec,
    quiver: &Quiver,
    relations: &[Relation],
    reg: &PathRegistry,
    level: usize,
) -> Stage {
    let npaths = reg.count_up_to(level);
    // Columns: longest paths first so pivots rewrite long into short.
    let mut order: Vec<usize> = (0..npaths).collect();
    order.sort_by_key(|&i| (std::cmp::Reverse(reg.paths[i].arrows.len()), i));
    let mut col_of = vec![usize::MAX; npaths];
    for (c, &p) in order.iter().enumerate() {
        col_of[p] = c;
    }

    let mut rows: Vec<Vec<Scalar>> = Vec::new();
    for rel in relations {
        let rel_source = rel.source(quiver);
        let rel_target = rel.target(quiver);
        let max_len = rel.terms.iter().map(|(_, p)| p.len()).max().unwrap();
        if max_len > level {
            continue;
        }
        for &u in &reg.by_target[rel_source] {
            let ulen = reg.paths[u].arrows.len();
            if ulen + max_len > level {
                continue;
            }
            for &v in &reg.by_source[rel_target] {
                let vlen = reg.paths[v].arrows.len();
                if ulen + max_len + vlen > level {
                    continue;
                }
                let mut row = vec![field.zero(); npaths];
                for (coef, term) in &rel.terms {
                    let mut arrows = reg.paths[u].arrows.clone();
                    arrows.extend_from_slice(term);
                    arrows.extend_from_slice(&reg.paths[v].arrows);
                    let idx = reg
                        .lookup(reg.paths[u].source, &arrows)
                        .expect("composed relation path must be enumerated");
                    let c = col_of[idx];
                    row[c] = row[c].add(coef);
                }
                rows.push(row);
            }
        }
    }

    if rows.is_empty() {
        return Stage {
            basis: (0..npaths).collect(),
            reductions: HashMap::new(),
        };
    }

    let m = Matrix::from_rows(field, npaths, &rows);
    let (rref, pivots) = m.rref();
    let pivot_set: BTreeSet<usize> = pivots.iter().copied().collect();
    let mut basis: Vec<usize> = (0..npaths)
        .filter(|&p| !pivot_set.contains(&col_of[p]))
        .collect();
    basis.sort_unstable();

    let mut reductions = HashMap::new();
    for (r, &pc) in pivots.iter().enumerate() {
        let pivot_path = order[pc];
        let mut combo = Vec::new();
        for c in 0..npaths {
            if c == pc || pivot_set.contains(&c) {
                continue;
            }
            let e = rref.get(r, c);
            if !e.is_zero() {
                combo.push((order[c], e.neg()));
            }
        }
        combo.sort_by_key(|(p, _)| *p);
        reductions.insert(pivot_path, combo);
    }
    Stage { basis, reductions }
}

pub(super) fn build(
    field: FieldSpec,
    quiver: Quiver,
    relations: Vec<Relation>,
    length_cap: usize,
    path_budget: usize,
) -> Result<AlgebraHandle> {
    let mut reg = PathRegistry::new(&quiver);
    reg.grow_level(&quiver, 1, path_budget)?;

    // Stop once two consecutive stages agree: the later stage then both
    // confirms that the new length added no basis path and that the wider
    // product span changed nothing shorter.
    let mut level = 1usize;
    let mut prev_basis: Option<Vec<usize>> = None;
    let final_stage = loop {
        level += 1;
        if level > length_cap {
            return Err(Error::NotAdmissible(format!(
                "no basis-stable length below the cap {length_cap}; arrow ideal not nilpotent \
                 modulo the relations"
            )));
        }
        reg.grow_level(&quiver, level, path_budget)?;
        let stage = run_stage(field, &quiver, &relations, &reg, level);
        if prev_basis.as_ref() == Some(&stage.basis) {
            break stage;
        }
        prev_basis = Some(stage.basis);
    };

    // Assemble the handle: basis paths, pair tables, arrow step table.
    let basis_paths: Vec<BasisPath> = final_stage
        .basis
        .iter()
        .map(|&p| reg.paths[p].clone())
        .collect();
    let global_of_reg: HashMap<usize, usize> = final_stage
        .basis
        .iter()
        .enumerate()
        .map(|(g, &p)| (p, g))
        .collect();

    let mut by_pair: BTreeMap<(usize, usize), Vec<usize>> = BTreeMap::new();
    for (g, p) in basis_paths.iter().enumerate() {
        by_pair.entry((p.source, p.target)).or_default().push(g);
    }
    let mut pair_pos = vec![0usize; basis_paths.len()];
    for list in by_pair.values() {
        for (pos, &g) in list.iter().enumerate() {
            pair_pos[g] = pos;
        }
    }

    let reduce_to_basis = |reg_idx: usize| -> Vec<(usize, Scalar)> {
        if let Some(&g) = global_of_reg.get(&reg_idx) {
            vec![(g, field.one())]
        } else if let Some(combo) = final_stage.reductions.get(&reg_idx) {
            combo
                .iter()
                .map(|(p, c)| {
                    let g = *global_of_reg
                        .get(p)
                        .expect("reduction target must be a basis path");
                    (g, c.clone())
                })
                .collect()
        } else {
            panic!("path neither basis nor reducible");
        }
    };

    let mut step = Vec::with_capacity(basis_paths.len());
    for p in &basis_paths {
        let mut table = HashMap::new();
        for (aidx, arrow) in quiver.arrows().iter().enumerate() {
            if arrow.from != p.target {
                continue;
            }
            let mut arrows = p.arrows.clone();
            arrows.push(aidx);
            let ext = reg
                .lookup(p.source, &arrows)
                .expect("one-arrow extension of a basis path must be enumerated");
            let combo = reduce_to_basis(ext);
            if !combo.is_empty() {
                table.insert(aidx, combo);
            }
        }
        step.push(table);
    }

    Ok(AlgebraHandle {
        field,
        quiver,
        relations,
        basis: basis_paths,
        by_pair,
        pair_pos,
        step,
    })
}
