//! Writing a radical morphism as a sum of compositions of irreducible
//! morphisms between listed indecomposables, by repeatedly factoring
//! through minimal right almost split maps. Exactness is preserved at every
//! split, branches whose suffix composite dies are pruned (they contribute
//! nothing), and nilpotency of the ladder bounds the recursion.

use crate::error::{Error, Result};
use crate::linalg::{Matrix, Scalar};
use crate::radical::{minimal_right_almost_split, AlmostSplitMap, Depth, RadicalLadder};
use crate::rep::{hom_basis, ModuleMorphism};
use crate::rng::WorkRng;
use std::collections::HashMap;
use std::sync::Arc;

/// One summand: a composable chain of irreducible morphisms through listed
/// objects, applied first to last.
pub struct IrreducibleChain {
    /// Visited list indices, source first: o_0 -> o_1 -> ... -> o_k.
    pub objects: Vec<usize>,
    /// links[i]: L_{o_i} -> L_{o_{i+1}}.
    pub links: Vec<ModuleMorphism>,
}

impl IrreducibleChain {
    pub fn composite(&self) -> Result<ModuleMorphism> {
        let mut it = self.links.iter();
        let first = it.next().expect("chains are nonempty").clone();
        it.try_fold(first, |acc, next| next.compose(&acc))
    }
}

pub struct IrreducibleDecomposition {
    pub source_index: usize,
    pub target_index: usize,
    /// Depth of the input morphism.
    pub depth: usize,
    pub chains: Vec<IrreducibleChain>,
    /// The exact sum of the chain composites; equals the input morphism.
    pub reconstructed: ModuleMorphism,
}

struct Pending {
    /// The still-unexpanded head: L_a -> L_z.
    head: ModuleMorphism,
    at: usize,
    /// Suffix chain z -> ... -> b (objects after `at`).
    suffix_objects: Vec<usize>,
    suffix_links: Vec<ModuleMorphism>,
    /// Composite of the suffix links, None when the suffix is empty.
    suffix_composite: Option<ModuleMorphism>,
}

/// Decompose a nonzero radical morphism between listed indecomposables into
/// a sum of compositions of irreducible morphisms in the subcategory
/// (Theorem-B style), verified by exact re-evaluation.
pub fn decompose_into_irreducibles(
    ladder: &RadicalLadder,
    f: &ModuleMorphism,
    rng: &mut WorkRng,
) -> Result<IrreducibleDecomposition> {
    let sub = ladder.subcategory();
    if !ladder.rad_infinity_is_zero() {
        return Err(Error::LadderNotNilpotent);
    }
    let (a_idx, src) = sub.resolve_single(f.source(), rng)?;
    let (b_idx, tgt) = sub.resolve_single(f.target(), rng)?;
    let transported = tgt.blocks[0]
        .split
        .compose(f)?
        .compose(&src.blocks[0].embed)?;
    if transported.is_zero() {
        return Err(Error::InvalidInput(
            "cannot decompose the zero morphism".into(),
        ));
    }
    let depth = match ladder.depth_of(&transported, rng)? {
        Depth::Finite(0) => return Err(Error::NotInRadical),
        Depth::Finite(t) => t,
        Depth::Infinite => return Err(Error::LadderNotNilpotent),
    };

    let mut mras_cache: HashMap<usize, AlmostSplitMap> = HashMap::new();
    let mut chains: Vec<IrreducibleChain> = Vec::new();
    let mut work = vec![Pending {
        head: transported.clone(),
        at: b_idx,
        suffix_objects: Vec::new(),
        suffix_links: Vec::new(),
        suffix_composite: None,
    }];
    let mut steps = 0usize;
    while let Some(item) = work.pop() {
        steps += 1;
        if steps > 100_000 {
            return Err(Error::Inconsistency(
                "irreducible decomposition failed to terminate".into(),
            ));
        }
        if item.head.is_zero() {
            continue;
        }
        if let Some(c) = &item.suffix_composite {
            if c.is_zero() {
                continue; // this branch contributes nothing
            }
        }
        match ladder.depth_of(&item.head, rng)? {
            Depth::Infinite => continue, // zero head, already caught above
            Depth::Finite(0) => {
                // invertible head between indecomposables: fold it into the
                // first suffix link, which stays irreducible
                let Some(first) = item.suffix_links.first() else {
                    return Err(Error::NotInRadical);
                };
                let folded = first.compose(&item.head)?;
                let mut links = vec![folded];
                links.extend(item.suffix_links.iter().skip(1).cloned());
                let mut objects = vec![a_idx];
                objects.extend(item.suffix_objects.iter().copied());
                push_chain(&mut chains, objects, links)?;
            }
            Depth::Finite(1) => {
                // the head itself is irreducible: emit the full chain
                let mut links = vec![item.head.clone()];
                links.extend(item.suffix_links.iter().cloned());
                let mut objects = vec![a_idx, item.at];
                objects.extend(item.suffix_objects.iter().copied());
                push_chain(&mut chains, objects, links)?;
            }
            Depth::Finite(_) => {
                let mras = match mras_cache.get(&item.at) {
                    Some(m) => m,
                    None => {
                        let m = minimal_right_almost_split(ladder, item.at)?;
                        mras_cache.insert(item.at, m);
                        mras_cache.get(&item.at).unwrap()
                    }
                };
                if mras.degenerate {
                    return Err(Error::Inconsistency(
                        "a radical morphism points at an object with a vacuous almost split \
                         map"
                            .into(),
                    ));
                }
                // solve head = sum over copies of lift_c . h_c
                let source = Arc::clone(sub.object(a_idx));
                let mut columns: Vec<Vec<Scalar>> = Vec::new();
                let mut column_info: Vec<(usize, ModuleMorphism)> = Vec::new();
                for (copy_idx, (z, lift)) in mras.copies.iter().enumerate() {
                    let homs = hom_basis(&source, sub.object(*z))?;
                    for phi in homs.basis() {
                        columns.push(lift.compose(phi)?.flatten());
                        column_info.push((copy_idx, phi.clone()));
                    }
                }
                let field = sub.algebra().field();
                let ambient = item.head.flatten().len();
                let mut m = Matrix::zero(field, ambient, columns.len());
                for (c, col) in columns.iter().enumerate() {
                    for (r, e) in col.iter().enumerate() {
                        m.set(r, c, e.clone());
                    }
                }
                let rhs = Matrix::col_vector(field, &item.head.flatten());
                let sol = m.solve(&rhs)?.ok_or_else(|| {
                    Error::IncompleteList(
                        "a radical morphism does not factor through the minimal right almost \
                         split map"
                            .into(),
                    )
                })?;
                // group the solution by copy: h_c = sum coords * phi
                let mut per_copy: HashMap<usize, ModuleMorphism> = HashMap::new();
                for (c, (copy_idx, phi)) in column_info.iter().enumerate() {
                    let coef = sol.get(c, 0).clone();
                    if coef.is_zero() {
                        continue;
                    }
                    let term = phi.scale(&coef);
                    per_copy
                        .entry(*copy_idx)
                        .and_modify(|acc| *acc = acc.add(&term).expect("same shape"))
                        .or_insert(term);
                }
                let mut per_copy: Vec<(usize, ModuleMorphism)> = per_copy.into_iter().collect();
                per_copy.sort_by_key(|(c, _)| *c);
                for (copy_idx, h) in per_copy {
                    if h.is_zero() {
                        continue;
                    }
                    let (z, lift) = &mras.copies[copy_idx];
                    let suffix_composite = match &item.suffix_composite {
                        None => lift.clone(),
                        Some(c) => c.compose(lift)?,
                    };
                    let mut suffix_objects = vec![item.at];
                    suffix_objects.extend(item.suffix_objects.iter().copied());
                    let mut suffix_links = vec![lift.clone()];
                    suffix_links.extend(item.suffix_links.iter().cloned());
                    work.push(Pending {
                        head: h,
                        at: *z,
                        suffix_objects,
                        suffix_links,
                        suffix_composite: Some(suffix_composite),
                    });
                }
            }
        }
    }

    if chains.is_empty() {
        return Err(Error::Inconsistency(
            "no chains were emitted for a nonzero radical morphism".into(),
        ));
    }

    // exact re-evaluation and link certification
    let mut reconstructed = ModuleMorphism::zero(
        Arc::clone(sub.object(a_idx)),
        Arc::clone(sub.object(b_idx)),
    );
    for chain in &chains {
        for link in &chain.links {
            if !ladder.is_irreducible(link, rng)? {
                return Err(Error::Inconsistency(
                    "a decomposition link is not irreducible".into(),
                ));
            }
        }
        reconstructed = reconstructed.add(&chain.composite()?)?;
    }
    if reconstructed != transported {
        return Err(Error::Inconsistency(
            "irreducible decomposition does not re-evaluate to the input".into(),
        ));
    }

    Ok(IrreducibleDecomposition {
        source_index: a_idx,
        target_index: b_idx,
        depth,
        chains,
        reconstructed,
    })
}

fn push_chain(
    chains: &mut Vec<IrreducibleChain>,
    objects: Vec<usize>,
    links: Vec<ModuleMorphism>,
) -> Result<()> {
    debug_assert_eq!(objects.len(), links.len() + 1);
    let chain = IrreducibleChain { objects, links };
    if !chain.composite()?.is_zero() {
        chains.push(chain);
    }
    Ok(())
}
