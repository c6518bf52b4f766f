//! The radical ideal of an additively generated subcategory: powers and
//! stabilization, depth of morphisms, irreducibility, minimal almost split
//! morphisms.

mod almost_split;
mod ladder;

pub use almost_split::{
    map_lies_in_radical, minimal_left_almost_split, minimal_right_almost_split, AlmostSplitMap,
};
pub use ladder::{build_ladder, Depth, RadicalLadder};

use crate::algebra::AlgebraHandle;
use crate::error::{Error, Result};
use crate::linalg::Subspace;
use crate::rep::{
    decompose, endo_radical, hom_basis, is_isomorphic, ModuleMorphism, Representation,
};
use crate::rng::WorkRng;
use std::collections::HashMap;
use std::sync::{Arc, Mutex};

/// A finite list of pairwise non-isomorphic indecomposables whose additive
/// closure is the subcategory under study.
pub struct Subcategory {
    algebra: Arc<AlgebraHandle>,
    objects: Vec<Arc<Representation>>,
    n: Option<usize>,
    claimed_complete: bool,
    resolve_cache: Mutex<HashMap<String, Arc<AddObject>>>,
}

/// A fixed decomposition of an object of add(M) into listed summands.
/// The sum over blocks of `embed . split` is the identity.
pub struct AddObject {
    pub blocks: Vec<AddBlock>,
}

pub struct AddBlock {
    pub list_index: usize,
    /// L_{list_index} -> X
    pub embed: ModuleMorphism,
    /// X -> L_{list_index}
    pub split: ModuleMorphism,
}

impl Subcategory {
    /// Validate and wrap a list of candidate indecomposables. Every module
    /// must be indecomposable and no two may be isomorphic.
    pub fn new(
        algebra: Arc<AlgebraHandle>,
        objects: Vec<Arc<Representation>>,
        n: Option<usize>,
        claimed_complete: bool,
        rng: &mut WorkRng,
    ) -> Result<Self> {
        for (i, x) in objects.iter().enumerate() {
            if !x.same_algebra_handle(&algebra) {
                return Err(Error::AlgebraMismatch(format!("listed module {i}")));
            }
            if x.is_zero() {
                return Err(Error::InvalidInput(format!("listed module {i} is zero")));
            }
            if decompose(x, rng)?.len() != 1 {
                return Err(Error::InvalidInput(format!(
                    "listed module {i} is decomposable"
                )));
            }
        }
        for i in 0..objects.len() {
            for j in (i + 1)..objects.len() {
                if is_isomorphic(&objects[i], &objects[j], rng)?.is_some() {
                    return Err(Error::InvalidInput(format!(
                        "listed modules {i} and {j} are isomorphic"
                    )));
                }
            }
        }
        Ok(Subcategory {
            algebra,
            objects,
            n,
            claimed_complete,
            resolve_cache: Mutex::new(HashMap::new()),
        })
    }

    pub fn algebra(&self) -> &Arc<AlgebraHandle> {
        &self.algebra
    }

    pub fn objects(&self) -> &[Arc<Representation>] {
        &self.objects
    }

    pub fn len(&self) -> usize {
        self.objects.len()
    }

    pub fn is_empty(&self) -> bool {
        self.objects.is_empty()
    }

    pub fn object(&self, i: usize) -> &Arc<Representation> {
        &self.objects[i]
    }

    pub fn n(&self) -> Option<usize> {
        self.n
    }

    pub fn claimed_complete(&self) -> bool {
        self.claimed_complete
    }

    /// A copy of this subcategory with the completeness claim dropped or
    /// asserted; computed numbers are unaffected.
    pub fn with_claimed_complete(&self, claimed: bool) -> Subcategory {
        Subcategory {
            algebra: Arc::clone(&self.algebra),
            objects: self.objects.clone(),
            n: self.n,
            claimed_complete: claimed,
            resolve_cache: Mutex::new(HashMap::new()),
        }
    }

    /// Index of a listed object isomorphic to `x`, with a witness.
    pub fn locate(
        &self,
        x: &Arc<Representation>,
        rng: &mut WorkRng,
    ) -> Result<Option<(usize, ModuleMorphism)>> {
        for (i, obj) in self.objects.iter().enumerate() {
            if let Some(iso) = is_isomorphic(obj, x, rng)? {
                return Ok(Some((i, iso)));
            }
        }
        Ok(None)
    }

    /// Fix a decomposition of an add(M)-object into listed summands, with
    /// embeddings and splittings; decompositions are cached per ladder so
    /// later depth queries see the same choices.
    pub fn resolve(&self, x: &Arc<Representation>, rng: &mut WorkRng) -> Result<Arc<AddObject>> {
        let key = x.structural_key();
        if let Some(hit) = self.resolve_cache.lock().unwrap().get(&key) {
            return Ok(Arc::clone(hit));
        }
        let mut blocks = Vec::new();
        for piece in decompose(x, rng)? {
            let Some((idx, iso)) = self.locate(&piece.rep, rng)? else {
                return Err(Error::IncompleteList(format!(
                    "a summand with dimensions {:?} is not isomorphic to any listed object",
                    piece.rep.dims()
                )));
            };
            let embed = piece.inclusion.compose(&iso)?;
            let split = iso
                .inverse()
                .expect("locate returns isomorphisms")
                .compose(&piece.projection)?;
            blocks.push(AddBlock {
                list_index: idx,
                embed,
                split,
            });
        }
        let resolved = Arc::new(AddObject { blocks });
        self.resolve_cache
            .lock()
            .unwrap()
            .insert(key, Arc::clone(&resolved));
        Ok(resolved)
    }

    /// Resolve an object expected to be indecomposable in add(M): its list
    /// index and the fixed decomposition data.
    pub fn resolve_single(
        &self,
        x: &Arc<Representation>,
        rng: &mut WorkRng,
    ) -> Result<(usize, Arc<AddObject>)> {
        let r = self.resolve(x, rng)?;
        if r.blocks.len() != 1 {
            return Err(Error::InvalidInput(format!(
                "expected an indecomposable add-object, found {} summands",
                r.blocks.len()
            )));
        }
        Ok((r.blocks[0].list_index, r))
    }
}

/// rad(L_i, L_j): all of Hom for distinct listed objects, and the radical
/// of the endomorphism ring on the diagonal. The ladder's multiplicity
/// bookkeeping needs split endomorphism rings, so End/rad of dimension > 1
/// is rejected here.
pub fn rad_basis(sub: &Subcategory, i: usize, j: usize) -> Result<Subspace> {
    let x = sub.object(i);
    let y = sub.object(j);
    if i != j {
        return Ok(hom_basis(x, y)?.space().clone());
    }
    let rad = endo_radical(x)?;
    let end_dim = hom_basis(x, x)?.dim();
    if end_dim - rad.dim() != 1 {
        return Err(Error::NonSplitEndo(format!(
            "End/rad of listed object {i} has dimension {}",
            end_dim - rad.dim()
        )));
    }
    Ok(rad)
}
