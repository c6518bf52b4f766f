//! Chain searches through the radical: the longest witnessed nonzero
//! composite, and the Harada-Sai fuzz.

use crate::error::Result;
use crate::radical::RadicalLadder;
use crate::rep::ModuleMorphism;
use crate::rng::WorkRng;
use rand::Rng;
use serde::Serialize;

pub const DEFAULT_CHAIN_BUDGET: usize = 1_000_000;

/// Restrict the chain search to monomorphisms or epimorphisms between the
/// listed indecomposables. Experimental: evidence gathering only.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum ChainFilter {
    All,
    Mono,
    Epi,
}

impl ChainFilter {
    fn admits(&self, f: &ModuleMorphism) -> bool {
        match self {
            ChainFilter::All => true,
            ChainFilter::Mono => f
                .blocks()
                .iter()
                .all(|b| b.rank() == b.cols()),
            ChainFilter::Epi => f
                .blocks()
                .iter()
                .all(|b| b.rank() == b.rows()),
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct ChainLink {
    pub from: usize,
    pub to: usize,
    pub basis_element: usize,
}

#[derive(Debug, Serialize)]
pub struct ChainSearchReport {
    pub filter: ChainFilter,
    pub max_nonzero_length: usize,
    pub witness: Vec<ChainLink>,
    pub chains_explored: usize,
    pub budget_reached: bool,
}

/// Breadth-first search over composites of rad^1 basis morphisms, keeping
/// only nonzero partial composites, up to `max_len` factors or the budget.
pub fn chain_search(
    ladder: &RadicalLadder,
    max_len: usize,
    budget: usize,
    filter: ChainFilter,
) -> Result<ChainSearchReport> {
    let sub = ladder.subcategory();
    let k = sub.len();

    // filtered rad^1 basis morphisms per pair
    let mut basis: Vec<Vec<Vec<ModuleMorphism>>> = Vec::with_capacity(k);
    for i in 0..k {
        let mut row = Vec::with_capacity(k);
        for j in 0..k {
            let all = ladder.rad1_morphisms(i, j)?;
            row.push(
                all.into_iter()
                    .filter(|f| filter.admits(f))
                    .collect::<Vec<_>>(),
            );
        }
        basis.push(row);
    }

    struct State {
        at: usize,
        composite: ModuleMorphism,
        links: Vec<ChainLink>,
    }

    let mut frontier: Vec<State> = Vec::new();
    let mut explored = 0usize;
    let mut budget_reached = false;
    let mut best_len = 0usize;
    let mut best_witness: Vec<ChainLink> = Vec::new();

    'seed: for i in 0..k {
        for j in 0..k {
            for (e, f) in basis[i][j].iter().enumerate() {
                if f.is_zero() {
                    continue;
                }
                explored += 1;
                if explored > budget {
                    budget_reached = true;
                    break 'seed;
                }
                let links = vec![ChainLink {
                    from: i,
                    to: j,
                    basis_element: e,
                }];
                if best_len < 1 {
                    best_len = 1;
                    best_witness = vec![ChainLink {
                        from: i,
                        to: j,
                        basis_element: e,
                    }];
                }
                frontier.push(State {
                    at: j,
                    composite: f.clone(),
                    links,
                });
            }
        }
    }

    let mut length = 1usize;
    while !frontier.is_empty() && length < max_len && !budget_reached {
        let mut next: Vec<State> = Vec::new();
        'extend: for state in &frontier {
            for j in 0..k {
                for (e, f) in basis[state.at][j].iter().enumerate() {
                    explored += 1;
                    if explored > budget {
                        budget_reached = true;
                        break 'extend;
                    }
                    let composite = f.compose(&state.composite)?;
                    if composite.is_zero() {
                        continue;
                    }
                    let mut links = state.links.clone();
                    links.push(ChainLink {
                        from: state.at,
                        to: j,
                        basis_element: e,
                    });
                    if links.len() > best_len {
                        best_len = links.len();
                        best_witness = links.clone();
                    }
                    next.push(State {
                        at: j,
                        composite,
                        links,
                    });
                }
            }
        }
        frontier = next;
        length += 1;
    }

    Ok(ChainSearchReport {
        filter,
        max_nonzero_length: best_len,
        witness: best_witness,
        chains_explored: explored,
        budget_reached,
    })
}

#[derive(Debug, Serialize)]
pub struct HaradaSaiReport {
    pub b: usize,
    pub chain_length: usize,
    pub trials: usize,
    pub all_composites_zero: bool,
    pub nonzero_composites: usize,
    /// The largest prefix length at which some sampled composite was still
    /// nonzero, plus one: the tightest observed vanishing point.
    pub max_first_zero: usize,
}

/// Sample random chains of 2^b - 1 radical basis morphisms and check that
/// every composite vanishes. Chains that run out of continuations continue
/// with zero morphisms, which vanish trivially.
pub fn harada_sai_check(
    ladder: &RadicalLadder,
    b: usize,
    trials: usize,
    rng: &mut WorkRng,
) -> Result<HaradaSaiReport> {
    let sub = ladder.subcategory();
    let k = sub.len();
    let chain_length = (1usize << b) - 1;

    let mut basis: Vec<Vec<Vec<ModuleMorphism>>> = Vec::with_capacity(k);
    for i in 0..k {
        let mut row = Vec::with_capacity(k);
        for j in 0..k {
            row.push(ladder.rad1_morphisms(i, j)?);
        }
        basis.push(row);
    }
    let starts: Vec<(usize, usize)> = (0..k)
        .flat_map(|i| (0..k).map(move |j| (i, j)))
        .filter(|&(i, j)| !basis[i][j].is_empty())
        .collect();

    let mut nonzero = 0usize;
    let mut max_first_zero = 0usize;
    for _ in 0..trials {
        if starts.is_empty() {
            max_first_zero = max_first_zero.max(0);
            break;
        }
        let (i, j) = starts[rng.gen_range(0..starts.len())];
        let first = &basis[i][j][rng.gen_range(0..basis[i][j].len())];
        let mut composite = first.clone();
        let mut at = j;
        let mut first_zero: Option<usize> = None;
        for step in 2..=chain_length {
            let continuations: Vec<usize> =
                (0..k).filter(|&n| !basis[at][n].is_empty()).collect();
            if continuations.is_empty() {
                // continue with a zero morphism
                first_zero = Some(first_zero.unwrap_or(step));
                break;
            }
            let n = continuations[rng.gen_range(0..continuations.len())];
            let f = &basis[at][n][rng.gen_range(0..basis[at][n].len())];
            composite = f.compose(&composite)?;
            at = n;
            if first_zero.is_none() && composite.is_zero() {
                first_zero = Some(step);
            }
        }
        match first_zero {
            Some(z) => max_first_zero = max_first_zero.max(z),
            None => {
                if composite.is_zero() {
                    max_first_zero = max_first_zero.max(chain_length);
                } else {
                    nonzero += 1;
                }
            }
        }
    }
    Ok(HaradaSaiReport {
        b,
        chain_length,
        trials,
        all_composites_zero: nonzero == 0,
        nonzero_composites: nonzero,
        max_first_zero,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::FieldSpec;
    use crate::radical::{build_ladder, Subcategory};
    use crate::rep::fixtures;
    use crate::rng;
    use std::sync::Arc;

    fn f101() -> FieldSpec {
        FieldSpec::prime(101).unwrap()
    }

    fn ladder_of(objects: Vec<Arc<crate::rep::Representation>>, alg: Arc<crate::algebra::AlgebraHandle>) -> crate::radical::RadicalLadder {
        let mut rng = rng::seeded(1);
        let sub = Arc::new(Subcategory::new(alg, objects, Some(1), true, &mut rng).unwrap());
        build_ladder(sub).unwrap()
    }

    #[test]
    fn semisimple_longest_chain_is_zero() {
        let alg = fixtures::semisimple2(f101());
        let objects = vec![Arc::new(alg.simple(0)), Arc::new(alg.simple(1))];
        let ladder = ladder_of(objects, alg);
        let report = chain_search(&ladder, 8, 10_000, ChainFilter::All).unwrap();
        assert_eq!(report.max_nonzero_length, 0);
        assert!(report.witness.is_empty());
    }

    #[test]
    fn a2_longest_chain_is_one() {
        let alg = fixtures::a2(f101());
        let objects = vec![
            Arc::new(alg.simple(0)),
            Arc::new(alg.simple(1)),
            Arc::new(alg.projective(0)),
        ];
        let ladder = ladder_of(objects, alg);
        let report = chain_search(&ladder, 8, 10_000, ChainFilter::All).unwrap();
        assert_eq!(report.max_nonzero_length, 1);
    }

    #[test]
    fn a3r2_full_category_longest_chain_is_two() {
        let alg = fixtures::a3r2(f101());
        let objects = vec![
            Arc::new(alg.simple(0)),
            Arc::new(alg.simple(1)),
            Arc::new(alg.simple(2)),
            Arc::new(alg.projective(0)),
            Arc::new(alg.projective(1)),
        ];
        let ladder = ladder_of(objects, alg);
        let report = chain_search(&ladder, 8, 100_000, ChainFilter::All).unwrap();
        assert_eq!(report.max_nonzero_length, 2);
        assert_eq!(report.witness.len(), 2);
    }

    #[test]
    fn harada_sai_fuzz_kills_length_three_chains_on_a2() {
        let alg = fixtures::a2(f101());
        let objects = vec![
            Arc::new(alg.simple(0)),
            Arc::new(alg.simple(1)),
            Arc::new(alg.projective(0)),
        ];
        let ladder = ladder_of(objects, alg);
        let mut rng = rng::seeded(99);
        let report = harada_sai_check(&ladder, 2, 100, &mut rng).unwrap();
        assert_eq!(report.chain_length, 3);
        assert!(report.all_composites_zero);
        assert!(report.max_first_zero <= 3);
    }
}
