//! Minimal projective resolutions and Ext via Hom complexes.

use super::projective_cover;
use crate::error::{Error, Result};
use crate::linalg::Matrix;
use crate::rep::{hom_basis, kernel_rep, ModuleMorphism, Representation};
use std::collections::HashMap;
use std::sync::{Arc, Mutex};

/// A minimal projective resolution up to a requested length:
/// P_len -> ... -> P_1 -> P_0 -> X -> 0, possibly stopping early when a
/// kernel vanishes.
pub struct Resolution {
    pub module: Arc<Representation>,
    pub augmentation: ModuleMorphism,
    /// projectives[0] is P_0; differentials[k] is d_{k+1}: P_{k+1} -> P_k.
    pub projectives: Vec<Arc<Representation>>,
    pub differentials: Vec<ModuleMorphism>,
    /// True when the resolution terminated (some syzygy was zero).
    pub finished: bool,
}

impl Resolution {
    pub fn projective(&self, k: usize) -> Option<&Arc<Representation>> {
        self.projectives.get(k)
    }
}

fn build_resolution(x: &Arc<Representation>, length: usize) -> Result<Resolution> {
    let (p0, aug) = projective_cover(x)?;
    let mut projectives = vec![Arc::clone(&p0)];
    let mut differentials = Vec::new();
    let mut last: ModuleMorphism = aug.clone();
    let mut finished = false;
    for _ in 0..length {
        let (syzygy, incl) = kernel_rep(&last)?;
        if syzygy.is_zero() {
            finished = true;
            break;
        }
        let (p_next, cover) = projective_cover(&syzygy)?;
        let d = incl.compose(&cover)?;
        // exactness: im d = ker(previous), checked by ranks
        let rank: usize = d.blocks().iter().map(Matrix::rank).sum();
        if rank != syzygy.total_dim() {
            return Err(Error::Inconsistency("resolution step is not exact".into()));
        }
        if !differentials.is_empty() {
            let prev: &ModuleMorphism = differentials.last().unwrap();
            if !prev.compose(&d)?.is_zero() {
                return Err(Error::Inconsistency(
                    "consecutive differentials do not compose to zero".into(),
                ));
            }
        } else if !last.compose(&d)?.is_zero() {
            return Err(Error::Inconsistency(
                "augmentation does not kill the first differential".into(),
            ));
        }
        projectives.push(Arc::clone(&p_next));
        differentials.push(d.clone());
        last = d;
    }
    Ok(Resolution {
        module: Arc::clone(x),
        augmentation: aug,
        projectives,
        differentials,
        finished,
    })
}

/// Ext^i(X, Y) with a basis of cocycles (morphisms P_i -> Y killing d_{i+1}).
pub struct ExtGroup {
    pub dim: usize,
    pub cocycles: Vec<ModuleMorphism>,
}

/// Resolutions are cached per module under a structural key; the cache is a
/// plain mutex, resolutions are shared out as Arcs.
#[derive(Default)]
pub struct HomologicalCtx {
    cache: Mutex<HashMap<String, Arc<Resolution>>>,
}

impl HomologicalCtx {
    pub fn new() -> Self {
        Self::default()
    }

    /// Fetch or build a resolution of length at least `length`.
    pub fn resolution(&self, x: &Arc<Representation>, length: usize) -> Result<Arc<Resolution>> {
        let key = x.structural_key();
        {
            let cache = self.cache.lock().unwrap();
            if let Some(r) = cache.get(&key) {
                if r.finished || r.differentials.len() >= length {
                    return Ok(Arc::clone(r));
                }
            }
        }
        let r = Arc::new(build_resolution(x, length)?);
        self.cache
            .lock()
            .unwrap()
            .insert(key, Arc::clone(&r));
        Ok(r)
    }

    /// dim Ext^i(X, Y) for i >= 1, from a minimal projective resolution of
    /// X, as the cohomology of the Hom complex at position i.
    pub fn ext(
        &self,
        x: &Arc<Representation>,
        y: &Arc<Representation>,
        i: usize,
    ) -> Result<ExtGroup> {
        if i == 0 {
            return Err(Error::InvalidInput("ext needs i >= 1".into()));
        }
        let res = self.resolution(x, i + 1)?;
        let p_i = match res.projective(i) {
            Some(p) => Arc::clone(p),
            None => {
                return Ok(ExtGroup {
                    dim: 0,
                    cocycles: Vec::new(),
                })
            }
        };
        let hom_i = hom_basis(&p_i, y)?;
        if hom_i.dim() == 0 {
            return Ok(ExtGroup {
                dim: 0,
                cocycles: Vec::new(),
            });
        }
        let field = x.field();

        // kernel of precomposition with d_{i+1}
        let (kernel_dim, kernel_vectors): (usize, Vec<Vec<crate::linalg::Scalar>>) =
            match res.differentials.get(i) {
                None => (
                    hom_i.dim(),
                    hom_i.space().basis_rows().map(<[_]>::to_vec).collect(),
                ),
                Some(d_next) => {
                    let p_next = Arc::clone(&res.projectives[i + 1]);
                    let hom_next = hom_basis(&p_next, y)?;
                    let mut m = Matrix::zero(field, hom_next.space().ambient_dim(), hom_i.dim());
                    for (col, g) in hom_i.basis().iter().enumerate() {
                        let composed = g.compose(d_next)?;
                        for (row, e) in composed.flatten().into_iter().enumerate() {
                            m.set(row, col, e);
                        }
                    }
                    let ker = m.kernel();
                    let vectors: Vec<Vec<crate::linalg::Scalar>> = ker
                        .basis_rows()
                        .map(|coords| {
                            // coords are in the hom_i basis; expand to flats
                            let mut flat =
                                vec![field.zero(); hom_i.space().ambient_dim()];
                            for (c, g) in coords.iter().zip(hom_i.basis()) {
                                if c.is_zero() {
                                    continue;
                                }
                                for (slot, e) in flat.iter_mut().zip(g.flatten()) {
                                    *slot = slot.add(&c.mul(&e));
                                }
                            }
                            flat
                        })
                        .collect();
                    (ker.dim(), vectors)
                }
            };

        // image of precomposition with d_i
        let image_rank = {
            let d_i = &res.differentials[i - 1];
            let p_prev = Arc::clone(&res.projectives[i - 1]);
            let hom_prev = hom_basis(&p_prev, y)?;
            if hom_prev.dim() == 0 {
                0
            } else {
                let rows: Result<Vec<Vec<crate::linalg::Scalar>>> = hom_prev
                    .basis()
                    .iter()
                    .map(|g| Ok(g.compose(d_i)?.flatten()))
                    .collect();
                Matrix::from_rows(field, hom_i.space().ambient_dim(), &rows?).rank()
            }
        };

        let dim = kernel_dim - image_rank;
        let cocycles = kernel_vectors
            .into_iter()
            .map(|flat| ModuleMorphism::from_flat(Arc::clone(&p_i), Arc::clone(y), &flat))
            .collect::<Result<Vec<_>>>()?;
        Ok(ExtGroup { dim, cocycles })
    }
}

/// One-shot Ext dimension without an external cache.
pub fn ext(x: &Arc<Representation>, y: &Arc<Representation>, i: usize) -> Result<ExtGroup> {
    HomologicalCtx::new().ext(x, y, i)
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
    fn ext_vanishes_on_projectives() {
        let alg = fixtures::a3r2(f101());
        let p1 = Arc::new(alg.projective(0));
        for j in 0..3 {
            let y = Arc::new(alg.simple(j));
            assert_eq!(ext(&p1, &y, 1).unwrap().dim, 0);
            assert_eq!(ext(&p1, &y, 2).unwrap().dim, 0);
        }
    }

    #[test]
    fn a2_ext1_s1_s2_is_one() {
        let alg = fixtures::a2(f101());
        let s1 = Arc::new(alg.simple(0));
        let s2 = Arc::new(alg.simple(1));
        assert_eq!(ext(&s1, &s2, 1).unwrap().dim, 1);
        assert_eq!(ext(&s1, &s1, 1).unwrap().dim, 0);
        assert_eq!(ext(&s2, &s1, 1).unwrap().dim, 0);
    }

    #[test]
    fn a3r2_ext_table() {
        let alg = fixtures::a3r2(f101());
        let s1 = Arc::new(alg.simple(0));
        let s2 = Arc::new(alg.simple(1));
        let s3 = Arc::new(alg.simple(2));
        assert_eq!(ext(&s1, &s2, 1).unwrap().dim, 1);
        assert_eq!(ext(&s1, &s3, 2).unwrap().dim, 1);
        assert_eq!(ext(&s2, &s3, 1).unwrap().dim, 1);
        assert_eq!(ext(&s1, &s3, 1).unwrap().dim, 0);
        assert_eq!(ext(&s2, &s1, 1).unwrap().dim, 0);
    }

    #[test]
    fn ext_matches_opposite_algebra_duals() {
        let alg = fixtures::a3r2(f101());
        let objects: Vec<Arc<Representation>> = (0..3)
            .map(|i| Arc::new(alg.simple(i)))
            .chain((0..3).map(|i| Arc::new(alg.projective(i))))
            .collect();
        for x in &objects {
            for y in &objects {
                for i in 1..=3 {
                    let dx = Arc::new(x.dualize().unwrap());
                    let dy = Arc::new(y.dualize().unwrap());
                    assert_eq!(
                        ext(x, y, i).unwrap().dim,
                        ext(&dy, &dx, i).unwrap().dim,
                        "Ext^{i} duality"
                    );
                }
            }
        }
    }

    #[test]
    fn resolution_of_s1_over_a3r2_reaches_p3() {
        let alg = fixtures::a3r2(f101());
        let s1 = Arc::new(alg.simple(0));
        let ctx = HomologicalCtx::new();
        let res = ctx.resolution(&s1, 4).unwrap();
        assert!(res.finished);
        assert_eq!(res.projectives.len(), 3);
        assert_eq!(res.projectives[0].dims(), &[1, 1, 0]);
        assert_eq!(res.projectives[1].dims(), &[0, 1, 1]);
        assert_eq!(res.projectives[2].dims(), &[0, 0, 1]);
    }
}
