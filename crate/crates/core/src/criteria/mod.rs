//! Executable finiteness criteria: n-cluster tilting verification, the
//! Harada-Sai bound, nilpotency indices, theta depths and the certificate
//! tying them together.

mod chains;
mod irreducible;

pub use chains::{
    chain_search, harada_sai_check, ChainFilter, ChainSearchReport, HaradaSaiReport,
    DEFAULT_CHAIN_BUDGET,
};
pub use irreducible::{decompose_into_irreducibles, IrreducibleChain, IrreducibleDecomposition};

use crate::error::{Error, Result};
use crate::files::{algebra_to_file, module_to_file, morphism_to_file, MorphismFile};
use crate::homalg::{simple_kit, HomologicalCtx, SimpleKit};
use crate::radical::{build_ladder, Depth, RadicalLadder, Subcategory};
use crate::rep::{module_length, Representation};
use crate::report::{content_hash, REPORT_FORMAT_VERSION};
use crate::rng::WorkRng;
use serde::Serialize;
use std::sync::Arc;

/// Depth rendered for reports: a number, or the string "infinite".
#[derive(Debug, Clone, Serialize, PartialEq, Eq)]
#[serde(untagged)]
pub enum DepthDto {
    Finite(usize),
    Infinite(&'static str),
}

impl From<Depth> for DepthDto {
    fn from(d: Depth) -> Self {
        match d {
            Depth::Finite(t) => DepthDto::Finite(t),
            Depth::Infinite => DepthDto::Infinite("infinite"),
        }
    }
}

/// Report of the n-cluster tilting verification of Definition-level checks:
/// Ext-orthogonality inside the list, the two-sided Ext characterization of
/// membership against a complete list of indecomposables, and approximation
/// witnesses for every module.
#[derive(Debug, Serialize)]
pub struct NctCheckReport {
    pub schema_version: String,
    pub n: usize,
    pub ext_self_orthogonal: bool,
    pub membership_characterized: bool,
    pub functorially_finite: bool,
    pub membership: Vec<MembershipRow>,
    pub verdict: bool,
}

#[derive(Debug, Serialize)]
pub struct MembershipRow {
    pub module: usize,
    pub dims: Vec<usize>,
    pub in_add: bool,
    pub left_orthogonal: bool,
    pub right_orthogonal: bool,
    pub right_approx_summands: Vec<usize>,
    pub left_approx_summands: Vec<usize>,
}

/// The executable version of the n-cluster tilting definition. The complete
/// list is trusted input (oracle enumeration or user supplied).
pub fn check_cluster_tilting(
    sub: &Subcategory,
    n: usize,
    complete: &[Arc<Representation>],
    rng: &mut WorkRng,
) -> Result<NctCheckReport> {
    if n == 0 {
        return Err(Error::InvalidInput("n must be at least 1".into()));
    }
    let ctx = HomologicalCtx::new();
    let exts_vanish = |x: &Arc<Representation>, y: &Arc<Representation>| -> Result<bool> {
        for i in 1..n {
            if ctx.ext(x, y, i)?.dim != 0 {
                return Ok(false);
            }
        }
        Ok(true)
    };

    let mut ext_self_orthogonal = true;
    for g in sub.objects() {
        for h in sub.objects() {
            if !exts_vanish(g, h)? {
                ext_self_orthogonal = false;
            }
        }
    }

    let mut membership_characterized = true;
    let mut functorially_finite = true;
    let mut membership = Vec::new();
    for (idx, x) in complete.iter().enumerate() {
        let in_add = sub.locate(x, rng)?.is_some();
        let mut left = true; // Ext^i(X, M) = 0
        let mut right = true; // Ext^i(M, X) = 0
        for g in sub.objects() {
            if !exts_vanish(x, g)? {
                left = false;
            }
            if !exts_vanish(g, x)? {
                right = false;
            }
        }
        if !(in_add == left && left == right) {
            membership_characterized = false;
        }
        let r = crate::homalg::right_approximation(x, sub.objects())?;
        let l = crate::homalg::left_approximation(x, sub.objects())?;
        if r.module.is_zero() && !x.is_zero() && in_add {
            functorially_finite = false;
        }
        membership.push(MembershipRow {
            module: idx,
            dims: x.dims().to_vec(),
            in_add,
            left_orthogonal: left,
            right_orthogonal: right,
            right_approx_summands: r.summands,
            left_approx_summands: l.summands,
        });
    }

    let verdict = ext_self_orthogonal && membership_characterized && functorially_finite;
    Ok(NctCheckReport {
        schema_version: REPORT_FORMAT_VERSION.to_string(),
        n,
        ext_self_orthogonal,
        membership_characterized,
        functorially_finite,
        membership,
        verdict,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Verdict {
    FiniteType,
    InconclusiveAtBound,
}

#[derive(Debug, Serialize)]
pub struct ThetaRow {
    pub simple: String,
    pub p_s: usize,
    pub i_s: usize,
    pub theta_depth: DepthDto,
    pub iota_r_depth: DepthDto,
    pub l_pi_depth: DepthDto,
    pub right_approx_summands: Vec<usize>,
    pub left_approx_summands: Vec<usize>,
    pub pi_s: MorphismFile,
    pub iota_s: MorphismFile,
    pub r_s: MorphismFile,
    pub l_s: MorphismFile,
}

#[derive(Debug, Serialize)]
pub struct VanishRow {
    pub object: usize,
    pub vanishes_at: usize,
}

#[derive(Debug, Serialize)]
pub struct CertificateChecks {
    /// d = m + 1 exactly.
    pub nilpotency_is_max_theta_depth_plus_one: bool,
    /// d <= 2^b - 1.
    pub harada_sai_bound_respected: bool,
    pub theta_depths_all_finite: bool,
    pub approx_composite_depths_all_finite: bool,
    /// rad^d(P_S, I_S) = 0 for every simple S.
    pub rad_ps_is_zero_at_d: bool,
    /// some simple has rad^{d-1}(P_S, I_S) != 0.
    pub rad_ps_is_nonzero_below_d: bool,
    /// per-object vanishing exponents exist, their max equals d, and
    /// rad^infinity = 0: the equivalent conditions agree.
    pub equivalences_consistent: bool,
}

#[derive(Debug, Serialize)]
pub struct FinitenessCertificate {
    pub schema_version: String,
    pub seed: u64,
    pub algebra_hash: String,
    pub subcategory_hash: String,
    pub claimed_complete: bool,
    pub object_count: usize,
    /// b: the maximal composition length of the listed indecomposables.
    pub max_length_b: usize,
    /// 2^b - 1.
    pub harada_sai_bound: usize,
    pub stable_index: usize,
    pub rad_infinity_zero: bool,
    /// least d with rad^d = 0 relative to the list.
    pub nilpotency_index: Option<usize>,
    /// m: the maximal depth of the morphisms theta_S.
    pub max_theta_depth: Option<usize>,
    pub theta: Vec<ThetaRow>,
    pub proj_vanishing: Vec<VanishRow>,
    pub inj_vanishing: Vec<VanishRow>,
    pub checks: CertificateChecks,
    pub verdict: Verdict,
}

/// Ladder and kits of a certification run, for callers that keep computing.
pub struct CertifyArtifacts {
    pub ladder: RadicalLadder,
    pub kits: Vec<SimpleKit>,
}

fn subcategory_hash(sub: &Subcategory) -> String {
    #[derive(Serialize)]
    struct SubContent {
        n: Option<usize>,
        claimed_complete: bool,
        modules: Vec<crate::files::ModuleFile>,
    }
    content_hash(&SubContent {
        n: sub.n(),
        claimed_complete: sub.claimed_complete(),
        modules: sub.objects().iter().map(|o| module_to_file(o)).collect(),
    })
}

/// Run every finiteness criterion over the listed subcategory and
/// cross-validate them; any disagreement between the equivalent conditions
/// is a hard error, never a silently patched report.
pub fn certify_finite(
    sub: Arc<Subcategory>,
    seed: u64,
) -> Result<(FinitenessCertificate, CertifyArtifacts)> {
    let mut rng = crate::rng::seeded(seed);
    let alg = Arc::clone(sub.algebra());
    let ladder = build_ladder(Arc::clone(&sub))?;

    let mut b = 0usize;
    for x in sub.objects() {
        b = b.max(module_length(x)?);
    }
    if b >= usize::BITS as usize - 1 {
        return Err(Error::BudgetExceeded("composition lengths too large".into()));
    }
    let harada_sai_bound = (1usize << b) - 1;

    let nilpotency = ladder.nilpotency_index();
    let rad_infinity_zero = ladder.rad_infinity_is_zero();

    // simple kits, theta depths and the recorded representatives
    let nv = alg.quiver().vertex_count();
    let mut kits = Vec::with_capacity(nv);
    let mut theta_rows = Vec::with_capacity(nv);
    let mut theta_depths = Vec::with_capacity(nv);
    let mut ps_is_indices = Vec::with_capacity(nv);
    let mut approx_depths_finite = true;
    for v in 0..nv {
        let kit = simple_kit(&alg, v, sub.objects())?;
        let theta_depth = ladder.depth_of(&kit.theta, &mut rng)?;
        let (p_idx, _) = sub.resolve_single(&kit.p_s, &mut rng)?;
        let (i_idx, _) = sub.resolve_single(&kit.i_s, &mut rng)?;
        let iota_r = kit.iota_s.compose(&kit.right_approx.morphism)?;
        let iota_r_depth = if kit.right_approx.module.is_zero() {
            Depth::Infinite
        } else {
            ladder.depth_of(&iota_r, &mut rng)?
        };
        let l_pi = kit.left_approx.morphism.compose(&kit.pi_s)?;
        let l_pi_depth = if kit.left_approx.module.is_zero() {
            Depth::Infinite
        } else {
            ladder.depth_of(&l_pi, &mut rng)?
        };
        if iota_r_depth == Depth::Infinite || l_pi_depth == Depth::Infinite {
            approx_depths_finite = false;
        }
        theta_depths.push(theta_depth);
        ps_is_indices.push((p_idx, i_idx));
        theta_rows.push(ThetaRow {
            simple: alg.quiver().vertex_name(v).to_string(),
            p_s: p_idx,
            i_s: i_idx,
            theta_depth: theta_depth.into(),
            iota_r_depth: iota_r_depth.into(),
            l_pi_depth: l_pi_depth.into(),
            right_approx_summands: kit.right_approx.summands.clone(),
            left_approx_summands: kit.left_approx.summands.clone(),
            pi_s: morphism_to_file(&kit.pi_s),
            iota_s: morphism_to_file(&kit.iota_s),
            r_s: morphism_to_file(&kit.right_approx.morphism),
            l_s: morphism_to_file(&kit.left_approx.morphism),
        });
        kits.push(kit);
    }
    let theta_all_finite = theta_depths.iter().all(|d| d.finite().is_some());
    let max_theta_depth = if theta_all_finite {
        theta_depths.iter().map(|d| d.finite().unwrap()).max()
    } else {
        None
    };

    // per-object vanishing exponents: least t with rad^t(X, -) = 0 resp.
    // rad^t(-, X) = 0, for the listed projectives and injectives
    let vanish_from = |idx: usize| -> Option<usize> {
        (1..=ladder.stable_index()).find(|&t| {
            (0..sub.len()).all(|j| ladder.power(t, idx, j).is_zero())
        })
    };
    let vanish_into = |idx: usize| -> Option<usize> {
        (1..=ladder.stable_index()).find(|&t| {
            (0..sub.len()).all(|j| ladder.power(t, j, idx).is_zero())
        })
    };
    let mut proj_vanishing = Vec::new();
    let mut inj_vanishing = Vec::new();
    for v in 0..nv {
        let (p_idx, i_idx) = ps_is_indices[v];
        let pv = vanish_from(p_idx).ok_or_else(|| {
            Error::Inconsistency(format!("no vanishing exponent for projective {p_idx}"))
        })?;
        let iv = vanish_into(i_idx).ok_or_else(|| {
            Error::Inconsistency(format!("no vanishing exponent for injective {i_idx}"))
        })?;
        if !proj_vanishing.iter().any(|r: &VanishRow| r.object == p_idx) {
            proj_vanishing.push(VanishRow {
                object: p_idx,
                vanishes_at: pv,
            });
        }
        if !inj_vanishing.iter().any(|r: &VanishRow| r.object == i_idx) {
            inj_vanishing.push(VanishRow {
                object: i_idx,
                vanishes_at: iv,
            });
        }
    }

    // cross-validation of the equivalent conditions
    let theorem_d = match (nilpotency, max_theta_depth) {
        (Some(d), Some(m)) => d == m + 1,
        _ => false,
    };
    let bound_ok = nilpotency.map(|d| d <= harada_sai_bound).unwrap_or(false);
    let lemma_zero_at_d = nilpotency
        .map(|d| {
            ps_is_indices
                .iter()
                .all(|&(p, i)| ladder.power(d, p, i).is_zero())
        })
        .unwrap_or(false);
    let lemma_tight = nilpotency
        .map(|d| {
            if d == 1 {
                // rad^0 = Hom contains the nonzero theta_S
                true
            } else {
                ps_is_indices
                    .iter()
                    .any(|&(p, i)| !ladder.power(d - 1, p, i).is_zero())
            }
        })
        .unwrap_or(false);
    let equivalences = {
        // per-object exponents exist for every listed object, the global
        // exponent is their max, and it is the nilpotency index
        let mut per_object = Vec::new();
        let mut all_exist = true;
        for i in 0..sub.len() {
            match vanish_from(i) {
                Some(t) => per_object.push(t),
                None => all_exist = false,
            }
        }
        let mut per_object_into = Vec::new();
        for i in 0..sub.len() {
            match vanish_into(i) {
                Some(t) => per_object_into.push(t),
                None => all_exist = false,
            }
        }
        let global_from = per_object.iter().copied().max();
        let global_into = per_object_into.iter().copied().max();
        all_exist
            && rad_infinity_zero
            && global_from == nilpotency
            && global_into == nilpotency
            && theta_all_finite
            && approx_depths_finite
    };

    let checks = CertificateChecks {
        nilpotency_is_max_theta_depth_plus_one: theorem_d,
        harada_sai_bound_respected: bound_ok,
        theta_depths_all_finite: theta_all_finite,
        approx_composite_depths_all_finite: approx_depths_finite,
        rad_ps_is_zero_at_d: lemma_zero_at_d,
        rad_ps_is_nonzero_below_d: lemma_tight,
        equivalences_consistent: equivalences,
    };
    if !(theorem_d
        && bound_ok
        && theta_all_finite
        && approx_depths_finite
        && lemma_zero_at_d
        && lemma_tight
        && equivalences)
    {
        return Err(Error::Inconsistency(format!(
            "finiteness criteria disagree: {checks:?}"
        )));
    }

    let verdict = if sub.claimed_complete() && rad_infinity_zero && nilpotency.is_some() {
        Verdict::FiniteType
    } else {
        Verdict::InconclusiveAtBound
    };

    let certificate = FinitenessCertificate {
        schema_version: REPORT_FORMAT_VERSION.to_string(),
        seed,
        algebra_hash: content_hash(&algebra_to_file(&alg)),
        subcategory_hash: subcategory_hash(&sub),
        claimed_complete: sub.claimed_complete(),
        object_count: sub.len(),
        max_length_b: b,
        harada_sai_bound,
        stable_index: ladder.stable_index(),
        rad_infinity_zero,
        nilpotency_index: nilpotency,
        max_theta_depth,
        theta: theta_rows,
        proj_vanishing,
        inj_vanishing,
        checks,
        verdict,
    };
    Ok((certificate, CertifyArtifacts { ladder, kits }))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::FieldSpec;
    use crate::rep::fixtures;
    use crate::rng;

    fn f101() -> FieldSpec {
        FieldSpec::prime(101).unwrap()
    }

    fn a2_sub(claimed: bool) -> Arc<Subcategory> {
        let alg = fixtures::a2(f101());
        let mut rng = rng::seeded(1);
        let objects = vec![
            Arc::new(alg.simple(0)),
            Arc::new(alg.simple(1)),
            Arc::new(alg.projective(0)),
        ];
        Arc::new(Subcategory::new(alg, objects, Some(1), claimed, &mut rng).unwrap())
    }

    fn a3r2_ct2(claimed: bool) -> Arc<Subcategory> {
        let alg = fixtures::a3r2(f101());
        let mut rng = rng::seeded(1);
        let objects = vec![
            Arc::new(alg.projective(0)),
            Arc::new(alg.projective(1)),
            Arc::new(alg.projective(2)),
            Arc::new(alg.injective(0).unwrap()),
        ];
        Arc::new(Subcategory::new(alg, objects, Some(2), claimed, &mut rng).unwrap())
    }

    fn a3r2_complete() -> Vec<Arc<crate::rep::Representation>> {
        let alg = fixtures::a3r2(f101());
        vec![
            Arc::new(alg.simple(0)),
            Arc::new(alg.simple(1)),
            Arc::new(alg.simple(2)),
            Arc::new(alg.projective(0)),
            Arc::new(alg.projective(1)),
        ]
    }

    #[test]
    fn a2_certificate_numbers() {
        let (cert, _) = certify_finite(a2_sub(true), 7).unwrap();
        assert_eq!(cert.nilpotency_index, Some(2));
        assert_eq!(cert.max_theta_depth, Some(1));
        assert_eq!(cert.max_length_b, 2);
        assert_eq!(cert.harada_sai_bound, 3);
        assert_eq!(cert.verdict, Verdict::FiniteType);
    }

    #[test]
    fn unclaimed_completeness_downgrades_the_verdict_only() {
        let (full, _) = certify_finite(a2_sub(true), 7).unwrap();
        let (partial, _) = certify_finite(a2_sub(false), 7).unwrap();
        assert_eq!(partial.verdict, Verdict::InconclusiveAtBound);
        assert_eq!(full.nilpotency_index, partial.nilpotency_index);
        assert_eq!(full.max_theta_depth, partial.max_theta_depth);
        assert_eq!(full.max_length_b, partial.max_length_b);
        assert_eq!(full.stable_index, partial.stable_index);
    }

    #[test]
    fn semisimple_certificate_is_trivial() {
        let alg = fixtures::semisimple2(f101());
        let mut rng = rng::seeded(1);
        let objects = vec![Arc::new(alg.simple(0)), Arc::new(alg.simple(1))];
        let sub = Arc::new(Subcategory::new(alg, objects, Some(1), true, &mut rng).unwrap());
        let (cert, _) = certify_finite(sub, 7).unwrap();
        assert_eq!(cert.nilpotency_index, Some(1));
        assert_eq!(cert.max_theta_depth, Some(0));
        assert_eq!(cert.verdict, Verdict::FiniteType);
    }

    #[test]
    fn a3r2_cluster_tilting_check_passes_and_fails_correctly() {
        let mut rng = rng::seeded(5);
        let complete = a3r2_complete();
        let report = check_cluster_tilting(&a3r2_ct2(true), 2, &complete, &mut rng).unwrap();
        assert!(report.verdict, "add(proj + inj) is 2-cluster tilting");

        // dropping I_1 breaks the membership characterization
        let alg = fixtures::a3r2(f101());
        let objects = vec![
            Arc::new(alg.projective(0)),
            Arc::new(alg.projective(1)),
            Arc::new(alg.projective(2)),
        ];
        let smaller =
            Arc::new(Subcategory::new(alg, objects, Some(2), true, &mut rng).unwrap());
        let report = check_cluster_tilting(&smaller, 2, &complete, &mut rng).unwrap();
        assert!(!report.verdict);
        assert!(!report.membership_characterized);
    }

    #[test]
    fn full_module_category_is_the_unique_1_cluster_tilting_subcategory() {
        let mut rng = rng::seeded(5);
        let complete = a3r2_complete();
        let alg = fixtures::a3r2(f101());
        let sub = Arc::new(
            Subcategory::new(alg, complete.clone(), Some(1), true, &mut rng).unwrap(),
        );
        let report = check_cluster_tilting(&sub, 1, &complete, &mut rng).unwrap();
        assert!(report.verdict);
        // a proper subcategory fails at n = 1
        let report = check_cluster_tilting(&a3r2_ct2(true), 1, &complete, &mut rng).unwrap();
        assert!(!report.verdict);
    }

    #[test]
    fn a3r2_ct2_certificate_has_d_equals_two() {
        let (cert, _) = certify_finite(a3r2_ct2(true), 7).unwrap();
        assert_eq!(cert.nilpotency_index, Some(2));
        assert_eq!(cert.max_theta_depth, Some(1));
        assert_eq!(cert.verdict, Verdict::FiniteType);
        assert!(cert.nilpotency_index.unwrap() <= cert.harada_sai_bound);
    }

    #[test]
    fn a3r2_full_category_certificate_has_d_equals_three() {
        let alg = fixtures::a3r2(f101());
        let mut rng = rng::seeded(1);
        let sub = Arc::new(
            Subcategory::new(alg, a3r2_complete(), Some(1), true, &mut rng).unwrap(),
        );
        let (cert, _) = certify_finite(sub, 7).unwrap();
        assert_eq!(cert.nilpotency_index, Some(3));
        assert_eq!(cert.max_theta_depth, Some(2));
        assert_eq!(cert.max_length_b, 2);
        assert_eq!(cert.harada_sai_bound, 3);
    }
}
