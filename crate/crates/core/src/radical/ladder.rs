//! Radical powers per ordered pair of listed indecomposables, iterated to
//! stabilization, and the depth of morphisms against that ladder.

use super::{rad_basis, Subcategory};
use crate::error::{Error, Result};
use crate::linalg::{Scalar, Subspace};
use crate::rep::{hom_basis, HomBasis, ModuleMorphism, Representation};
use crate::rng::WorkRng;
use std::sync::Arc;

/// The depth of a morphism: the unique t with f in rad^t minus rad^{t+1},
/// or infinite when f survives every power.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Depth {
    Finite(usize),
    Infinite,
}

impl Depth {
    pub fn finite(&self) -> Option<usize> {
        match self {
            Depth::Finite(t) => Some(*t),
            Depth::Infinite => None,
        }
    }
}

type PairGrid<T> = Vec<Vec<T>>;

/// Bases of rad^1 over rad^2 over ... up to stabilization, for every ordered
/// pair of listed indecomposables.
pub struct RadicalLadder {
    sub: Arc<Subcategory>,
    hom: PairGrid<HomBasis>,
    /// levels[t - 1][i][j] = rad^t(L_i, L_j); the last two levels coincide.
    levels: Vec<PairGrid<Subspace>>,
    stable_index: usize,
    nilpotency: Option<usize>,
}

fn grids_equal(a: &PairGrid<Subspace>, b: &PairGrid<Subspace>) -> bool {
    a == b
}

fn grid_is_zero(g: &PairGrid<Subspace>) -> bool {
    g.iter().all(|row| row.iter().all(Subspace::is_zero))
}

/// Morphism representatives of a subspace of Hom(L_i, L_j).
fn morphisms_of(
    space: &Subspace,
    x: &Arc<Representation>,
    y: &Arc<Representation>,
) -> Result<Vec<ModuleMorphism>> {
    space
        .basis_rows()
        .map(|r| ModuleMorphism::from_flat(Arc::clone(x), Arc::clone(y), r))
        .collect()
}

/// Build the ladder: rad^1 from [`rad_basis`], and
/// rad^{t+1}(i, j) = sum over z of span { g . h } with h in rad^1(i, z) and
/// g in rad^t(z, j), iterated until one full pass changes nothing.
pub fn build_ladder(sub: Arc<Subcategory>) -> Result<RadicalLadder> {
    let k = sub.len();
    let mut hom: PairGrid<HomBasis> = Vec::with_capacity(k);
    for i in 0..k {
        let mut row = Vec::with_capacity(k);
        for j in 0..k {
            row.push(hom_basis(sub.object(i), sub.object(j))?);
        }
        hom.push(row);
    }

    let mut level1: PairGrid<Subspace> = Vec::with_capacity(k);
    for i in 0..k {
        let mut row = Vec::with_capacity(k);
        for j in 0..k {
            row.push(rad_basis(&sub, i, j)?);
        }
        level1.push(row);
    }

    // rad^1 morphism bases, reused in every pass
    let mut rad1_morphisms: PairGrid<Vec<ModuleMorphism>> = Vec::with_capacity(k);
    for i in 0..k {
        let mut row = Vec::with_capacity(k);
        for j in 0..k {
            row.push(morphisms_of(&level1[i][j], sub.object(i), sub.object(j))?);
        }
        rad1_morphisms.push(row);
    }

    let mut levels = vec![level1];
    loop {
        let prev = levels.last().unwrap();
        let mut next: PairGrid<Subspace> = Vec::with_capacity(k);
        for i in 0..k {
            let mut row = Vec::with_capacity(k);
            for j in 0..k {
                let ambient = hom[i][j].space().ambient_dim();
                let mut vectors: Vec<Vec<Scalar>> = Vec::new();
                for z in 0..k {
                    if prev[z][j].is_zero() || rad1_morphisms[i][z].is_empty() {
                        continue;
                    }
                    let tails = morphisms_of(&prev[z][j], sub.object(z), sub.object(j))?;
                    for g in &tails {
                        for h in &rad1_morphisms[i][z] {
                            vectors.push(g.compose(h)?.flatten());
                        }
                    }
                }
                let space = Subspace::from_rows(sub.algebra().field(), ambient, vectors);
                if !prev[i][j].contains(&space) {
                    return Err(Error::Inconsistency(
                        "radical powers failed to descend".into(),
                    ));
                }
                row.push(space);
            }
            next.push(row);
        }
        let stabilized = grids_equal(levels.last().unwrap(), &next);
        levels.push(next);
        if stabilized {
            break;
        }
    }
    let stable_index = levels.len() - 1;

    // idempotence of the stable state: one more pass changes nothing
    {
        let stable = levels.last().unwrap().clone();
        let mut check: PairGrid<Subspace> = Vec::with_capacity(k);
        for i in 0..k {
            let mut row = Vec::with_capacity(k);
            for j in 0..k {
                let ambient = hom[i][j].space().ambient_dim();
                let mut vectors: Vec<Vec<Scalar>> = Vec::new();
                for z in 0..k {
                    let tails = morphisms_of(&stable[z][j], sub.object(z), sub.object(j))?;
                    for g in &tails {
                        for h in &rad1_morphisms[i][z] {
                            vectors.push(g.compose(h)?.flatten());
                        }
                    }
                }
                row.push(Subspace::from_rows(sub.algebra().field(), ambient, vectors));
            }
            check.push(row);
        }
        if !grids_equal(&check, levels.last().unwrap()) {
            return Err(Error::Inconsistency(
                "stable radical level is not idempotent".into(),
            ));
        }
    }

    let nilpotency = if grid_is_zero(levels.last().unwrap()) {
        Some(
            (1..=levels.len())
                .find(|&t| grid_is_zero(&levels[t - 1]))
                .expect("the stable level is zero"),
        )
    } else {
        None
    };

    Ok(RadicalLadder {
        sub,
        hom,
        levels,
        stable_index,
        nilpotency,
    })
}

impl RadicalLadder {
    pub fn subcategory(&self) -> &Arc<Subcategory> {
        &self.sub
    }

    /// Least T with rad^T = rad^{T+1} on every pair.
    pub fn stable_index(&self) -> usize {
        self.stable_index
    }

    /// Least d with rad^d = 0, when the ladder stabilizes at zero.
    pub fn nilpotency_index(&self) -> Option<usize> {
        self.nilpotency
    }

    /// rad^infinity relative to the list: the stabilized subspaces.
    pub fn infinite_part(&self, i: usize, j: usize) -> &Subspace {
        &self.levels[self.stable_index - 1][i][j]
    }

    pub fn rad_infinity_is_zero(&self) -> bool {
        grid_is_zero(self.levels.last().unwrap())
    }

    /// rad^t(L_i, L_j) for t >= 1 (clamped to the stable level).
    pub fn power(&self, t: usize, i: usize, j: usize) -> &Subspace {
        assert!(t >= 1);
        let t = t.min(self.levels.len());
        &self.levels[t - 1][i][j]
    }

    pub fn hom(&self, i: usize, j: usize) -> &HomBasis {
        &self.hom[i][j]
    }

    /// Morphism representatives of a basis of rad^1(L_i, L_j).
    pub fn rad1_morphisms(&self, i: usize, j: usize) -> Result<Vec<ModuleMorphism>> {
        morphisms_of(
            self.power(1, i, j),
            self.sub.object(i),
            self.sub.object(j),
        )
    }

    /// Depth of a single block L_a -> L_b given by flattened coordinates.
    fn block_depth(&self, a: usize, b: usize, flat: &[Scalar]) -> Depth {
        if flat.iter().all(Scalar::is_zero) {
            return Depth::Infinite;
        }
        if !self.power(1, a, b).contains_vector(flat) {
            return Depth::Finite(0);
        }
        for t in 2..=self.stable_index {
            if !self.power(t, a, b).contains_vector(flat) {
                return Depth::Finite(t - 1);
            }
        }
        // contained in the stable level; nonzero, so rad^infinity is nonzero
        Depth::Infinite
    }

    /// Depth of a morphism between add(M)-objects: blockwise membership per
    /// the fixed decompositions, the minimum over all blocks.
    pub fn depth_of(&self, f: &ModuleMorphism, rng: &mut WorkRng) -> Result<Depth> {
        let src = self.sub.resolve(f.source(), rng)?;
        let tgt = self.sub.resolve(f.target(), rng)?;
        let mut best: Depth = Depth::Infinite;
        for sb in &src.blocks {
            for tb in &tgt.blocks {
                let block = tb.split.compose(f)?.compose(&sb.embed)?;
                let d = self.block_depth(sb.list_index, tb.list_index, &block.flatten());
                best = match (best, d) {
                    (Depth::Infinite, d) => d,
                    (b, Depth::Infinite) => b,
                    (Depth::Finite(x), Depth::Finite(y)) => Depth::Finite(x.min(y)),
                };
            }
        }
        Ok(best)
    }

    /// Irreducible in M means lying in rad but not rad^2: depth exactly 1.
    pub fn is_irreducible(&self, f: &ModuleMorphism, rng: &mut WorkRng) -> Result<bool> {
        Ok(self.depth_of(f, rng)? == Depth::Finite(1))
    }
}
