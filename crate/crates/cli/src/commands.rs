//! Command handlers: load inputs, run the core, emit canonical reports.

use crate::Command;
use nct_core::algebra::AlgebraHandle;
use nct_core::criteria::{
    chain_search, check_cluster_tilting, certify_finite, decompose_into_irreducibles,
    harada_sai_check, ChainFilter, DEFAULT_CHAIN_BUDGET,
};
use nct_core::error::{Error, Result};
use nct_core::files::{
    self, module_to_file, morphism_from_file, morphism_to_file, ModuleFile, MorphismFile,
    SubcategoryFile,
};
use nct_core::linalg::FieldSpec;
use nct_core::oracle;
use nct_core::radical::{build_ladder, Depth, Subcategory};
use nct_core::rep::{decompose_grouped, hom_basis, module_length, Representation};
use nct_core::report::{canonical_json, content_hash, REPORT_FORMAT_VERSION};
use nct_core::rng::{seeded, WorkRng};
use serde::Serialize;
use std::path::{Path, PathBuf};
use std::sync::Arc;

pub struct Config {
    pub seed: u64,
    pub budget: Option<usize>,
    pub verify: bool,
    pub out: Option<PathBuf>,
}

#[derive(Serialize)]
struct Envelope<T: Serialize> {
    command: &'static str,
    format_version: &'static str,
    seed: u64,
    report: T,
}

fn emit<T: Serialize>(config: &Config, command: &'static str, report: T) -> Result<()> {
    let envelope = Envelope {
        command,
        format_version: REPORT_FORMAT_VERSION,
        seed: config.seed,
        report,
    };
    let text = canonical_json(&envelope);
    match &config.out {
        None => {
            print!("{text}");
            Ok(())
        }
        Some(path) => std::fs::write(path, text)
            .map_err(|e| Error::InvalidInput(format!("cannot write {}: {e}", path.display()))),
    }
}

fn read_to_string(path: &Path) -> Result<String> {
    std::fs::read_to_string(path)
        .map_err(|e| Error::InvalidInput(format!("cannot read {}: {e}", path.display())))
}

fn load_algebra(path: &Path) -> Result<Arc<AlgebraHandle>> {
    Ok(Arc::new(files::parse_algebra(&read_to_string(path)?)?))
}

fn load_module(alg: &Arc<AlgebraHandle>, path: &Path) -> Result<Arc<Representation>> {
    Ok(Arc::new(files::parse_module(alg, &read_to_string(path)?)?))
}

fn load_subcategory(
    alg: &Arc<AlgebraHandle>,
    path: &Path,
    rng: &mut WorkRng,
) -> Result<Arc<Subcategory>> {
    let file: SubcategoryFile = serde_json::from_str(&read_to_string(path)?)
        .map_err(|e| Error::InvalidInput(format!("subcategory file: {e}")))?;
    let dir = path.parent().unwrap_or_else(|| Path::new("."));
    let mut objects = Vec::with_capacity(file.modules.len());
    for rel in &file.modules {
        objects.push(load_module(alg, &dir.join(rel))?);
    }
    Ok(Arc::new(Subcategory::new(
        Arc::clone(alg),
        objects,
        file.n,
        file.claimed_complete,
        rng,
    )?))
}

fn load_morphism_file(path: &Path) -> Result<MorphismFile> {
    serde_json::from_str(&read_to_string(path)?)
        .map_err(|e| Error::InvalidInput(format!("morphism file: {e}")))
}

#[derive(Serialize)]
struct ObjectRow {
    index: usize,
    dims: Vec<usize>,
    total_dim: usize,
}

fn object_rows(sub: &Subcategory) -> Vec<ObjectRow> {
    sub.objects()
        .iter()
        .enumerate()
        .map(|(index, o)| ObjectRow {
            index,
            dims: o.dims().to_vec(),
            total_dim: o.total_dim(),
        })
        .collect()
}

pub fn run(cmd: &Command, config: &Config) -> Result<bool> {
    let mut rng = seeded(config.seed);
    match cmd {
        Command::CheckAlgebra { algebra } => {
            let alg = load_algebra(algebra)?;
            #[derive(Serialize)]
            struct Report {
                admissible: bool,
                field: FieldSpec,
                dim: usize,
                vertices: Vec<String>,
                arrow_count: usize,
                relation_count: usize,
                algebra_hash: String,
            }
            emit(
                config,
                "check-algebra",
                Report {
                    admissible: true,
                    field: alg.field(),
                    dim: alg.dim(),
                    vertices: alg.quiver().vertex_names().to_vec(),
                    arrow_count: alg.quiver().arrow_count(),
                    relation_count: alg.relations().len(),
                    algebra_hash: content_hash(&files::algebra_to_file(&alg)),
                },
            )?;
            Ok(true)
        }
        Command::Basis { algebra } => {
            let alg = load_algebra(algebra)?;
            #[derive(Serialize)]
            struct PairRow {
                from: String,
                to: String,
                paths: Vec<String>,
            }
            let q = alg.quiver();
            let mut pairs = Vec::new();
            for i in 0..q.vertex_count() {
                for j in 0..q.vertex_count() {
                    let paths: Vec<String> = alg
                        .pair_basis(i, j)
                        .iter()
                        .map(|&b| alg.basis_paths()[b].display(q))
                        .collect();
                    if !paths.is_empty() {
                        pairs.push(PairRow {
                            from: q.vertex_name(i).to_string(),
                            to: q.vertex_name(j).to_string(),
                            paths,
                        });
                    }
                }
            }
            #[derive(Serialize)]
            struct Report {
                dim: usize,
                pairs: Vec<PairRow>,
            }
            emit(
                config,
                "basis",
                Report {
                    dim: alg.dim(),
                    pairs,
                },
            )?;
            Ok(true)
        }
        Command::Hom {
            algebra,
            source,
            target,
        } => {
            let alg = load_algebra(algebra)?;
            let x = load_module(&alg, source)?;
            let y = load_module(&alg, target)?;
            let h = hom_basis(&x, &y)?;
            let basis: Vec<MorphismFile> = h.basis().iter().map(morphism_to_file).collect();
            if config.verify {
                for file in &basis {
                    morphism_from_file(&x, &y, file)?;
                }
            }
            #[derive(Serialize)]
            struct Report {
                dim: usize,
                basis: Vec<MorphismFile>,
            }
            emit(
                config,
                "hom",
                Report {
                    dim: h.dim(),
                    basis,
                },
            )?;
            Ok(true)
        }
        Command::DecomposeModule { algebra, module } => {
            let alg = load_algebra(algebra)?;
            let x = load_module(&alg, module)?;
            let grouped = decompose_grouped(&x, &mut rng)?;
            #[derive(Serialize)]
            struct SummandRow {
                multiplicity: usize,
                total_dim: usize,
                module: ModuleFile,
            }
            #[derive(Serialize)]
            struct Report {
                total_dim: usize,
                summands: Vec<SummandRow>,
            }
            emit(
                config,
                "decompose-module",
                Report {
                    total_dim: x.total_dim(),
                    summands: grouped
                        .iter()
                        .map(|(rep, m)| SummandRow {
                            multiplicity: *m,
                            total_dim: rep.total_dim(),
                            module: module_to_file(rep),
                        })
                        .collect(),
                },
            )?;
            Ok(true)
        }
        Command::Enumerate { algebra, max_dim } => {
            let alg = load_algebra(algebra)?;
            let budget = config.budget.unwrap_or(oracle::DEFAULT_ENUM_BUDGET);
            let report = oracle::enumerate_indecomposables(&alg, *max_dim, budget, config.seed)?;
            #[derive(Serialize)]
            struct Report {
                field: FieldSpec,
                max_total_dim: usize,
                exhaustive: bool,
                candidates_swept: usize,
                count: usize,
                modules: Vec<ModuleFile>,
            }
            emit(
                config,
                "enumerate",
                Report {
                    field: report.field,
                    max_total_dim: report.max_total_dim,
                    exhaustive: report.exhaustive,
                    candidates_swept: report.candidates_swept,
                    count: report.indecomposables.len(),
                    modules: report
                        .indecomposables
                        .iter()
                        .map(|r| module_to_file(r))
                        .collect(),
                },
            )?;
            Ok(true)
        }
        Command::CheckNct {
            algebra,
            subcategory,
            complete,
        } => {
            let alg = load_algebra(algebra)?;
            let sub = load_subcategory(&alg, subcategory, &mut rng)?;
            let n = sub.n().ok_or_else(|| {
                Error::InvalidInput("the subcategory file must carry the degree n".into())
            })?;
            let complete_sub = load_subcategory(&alg, complete, &mut rng)?;
            let report =
                check_cluster_tilting(&sub, n, complete_sub.objects(), &mut rng)?;
            let ok = report.verdict;
            emit(config, "check-nct", report)?;
            Ok(ok)
        }
        Command::Radical {
            algebra,
            subcategory,
        } => {
            let alg = load_algebra(algebra)?;
            let sub = load_subcategory(&alg, subcategory, &mut rng)?;
            let ladder = build_ladder(Arc::clone(&sub))?;
            #[derive(Serialize)]
            struct PairRow {
                from: usize,
                to: usize,
                hom_dim: usize,
                power_dims: Vec<usize>,
            }
            let mut pairs = Vec::new();
            for i in 0..sub.len() {
                for j in 0..sub.len() {
                    pairs.push(PairRow {
                        from: i,
                        to: j,
                        hom_dim: ladder.hom(i, j).dim(),
                        power_dims: (1..=ladder.stable_index())
                            .map(|t| ladder.power(t, i, j).dim())
                            .collect(),
                    });
                }
            }
            #[derive(Serialize)]
            struct Report {
                objects: Vec<ObjectRow>,
                claimed_complete: bool,
                relative_to_list_only: bool,
                stable_index: usize,
                nilpotency_index: Option<usize>,
                rad_infinity_zero: bool,
                pairs: Vec<PairRow>,
            }
            emit(
                config,
                "radical",
                Report {
                    objects: object_rows(&sub),
                    claimed_complete: sub.claimed_complete(),
                    relative_to_list_only: !sub.claimed_complete(),
                    stable_index: ladder.stable_index(),
                    nilpotency_index: ladder.nilpotency_index(),
                    rad_infinity_zero: ladder.rad_infinity_is_zero(),
                    pairs,
                },
            )?;
            Ok(true)
        }
        Command::Depth {
            algebra,
            subcategory,
            morphism,
            source,
            target,
        } => {
            let alg = load_algebra(algebra)?;
            let sub = load_subcategory(&alg, subcategory, &mut rng)?;
            let x = load_module(&alg, source)?;
            let y = load_module(&alg, target)?;
            let file = load_morphism_file(morphism)?;
            let f = morphism_from_file(&x, &y, &file)?;
            let ladder = build_ladder(Arc::clone(&sub))?;
            let depth = ladder.depth_of(&f, &mut rng)?;
            #[derive(Serialize)]
            struct Report {
                depth: nct_core::criteria::DepthDto,
                claimed_complete: bool,
                relative_to_list_only: bool,
            }
            emit(
                config,
                "depth",
                Report {
                    depth: depth.into(),
                    claimed_complete: sub.claimed_complete(),
                    relative_to_list_only: !sub.claimed_complete(),
                },
            )?;
            Ok(true)
        }
        Command::Theta {
            algebra,
            subcategory,
        } => {
            let alg = load_algebra(algebra)?;
            let sub = load_subcategory(&alg, subcategory, &mut rng)?;
            let (cert, _) = certify_finite(Arc::clone(&sub), config.seed)?;
            #[derive(Serialize)]
            struct Report {
                objects: Vec<ObjectRow>,
                theta: Vec<nct_core::criteria::ThetaRow>,
                max_theta_depth: Option<usize>,
                nilpotency_index: Option<usize>,
            }
            emit(
                config,
                "theta",
                Report {
                    objects: object_rows(&sub),
                    max_theta_depth: cert.max_theta_depth,
                    nilpotency_index: cert.nilpotency_index,
                    theta: cert.theta,
                },
            )?;
            Ok(true)
        }
        Command::CertifyFinite {
            algebra,
            subcategory,
        } => {
            let alg = load_algebra(algebra)?;
            let sub = load_subcategory(&alg, subcategory, &mut rng)?;
            let (cert, artifacts) = certify_finite(Arc::clone(&sub), config.seed)?;
            if config.verify {
                // every recorded representative must re-parse and satisfy
                // the intertwining law against its endpoints
                for (v, row) in cert.theta.iter().enumerate() {
                    let kit = &artifacts.kits[v];
                    morphism_from_file(&kit.p_s, &kit.simple, &row.pi_s)?;
                    morphism_from_file(&kit.simple, &kit.i_s, &row.iota_s)?;
                }
            }
            emit(config, "certify-finite", cert)?;
            Ok(true)
        }
        Command::DecomposeMorphism {
            algebra,
            subcategory,
            morphism,
            source,
            target,
        } => {
            let alg = load_algebra(algebra)?;
            let sub = load_subcategory(&alg, subcategory, &mut rng)?;
            let x = load_module(&alg, source)?;
            let y = load_module(&alg, target)?;
            let file = load_morphism_file(morphism)?;
            let f = morphism_from_file(&x, &y, &file)?;
            let ladder = build_ladder(Arc::clone(&sub))?;
            let d = decompose_into_irreducibles(&ladder, &f, &mut rng)?;
            #[derive(Serialize)]
            struct ChainRow {
                scalar: String,
                objects: Vec<usize>,
                links: Vec<MorphismFile>,
            }
            #[derive(Serialize)]
            struct Report {
                objects: Vec<ObjectRow>,
                source: usize,
                target: usize,
                depth: usize,
                residual_zero: bool,
                chains: Vec<ChainRow>,
            }
            let chains: Vec<ChainRow> = d
                .chains
                .iter()
                .map(|c| ChainRow {
                    scalar: "1".to_string(),
                    objects: c.objects.clone(),
                    links: c.links.iter().map(morphism_to_file).collect(),
                })
                .collect();
            if config.verify {
                for (chain, row) in d.chains.iter().zip(&chains) {
                    for (link, file) in chain.links.iter().zip(&row.links) {
                        morphism_from_file(link.source(), link.target(), file)?;
                    }
                }
            }
            emit(
                config,
                "decompose-morphism",
                Report {
                    objects: object_rows(&sub),
                    source: d.source_index,
                    target: d.target_index,
                    depth: d.depth,
                    residual_zero: true,
                    chains,
                },
            )?;
            Ok(true)
        }
        Command::ChainSearch {
            algebra,
            subcategory,
            max_len,
            mono,
            epi,
        } => {
            let alg = load_algebra(algebra)?;
            let sub = load_subcategory(&alg, subcategory, &mut rng)?;
            let ladder = build_ladder(Arc::clone(&sub))?;
            let filter = if *mono {
                ChainFilter::Mono
            } else if *epi {
                ChainFilter::Epi
            } else {
                ChainFilter::All
            };
            let budget = config.budget.unwrap_or(DEFAULT_CHAIN_BUDGET);
            let report = chain_search(&ladder, *max_len, budget, filter)?;
            emit(config, "chain-search", report)?;
            Ok(true)
        }
        Command::HaradaSai {
            algebra,
            subcategory,
            trials,
        } => {
            let alg = load_algebra(algebra)?;
            let sub = load_subcategory(&alg, subcategory, &mut rng)?;
            let ladder = build_ladder(Arc::clone(&sub))?;
            let mut b = 0usize;
            for x in sub.objects() {
                b = b.max(module_length(x)?);
            }
            let report = harada_sai_check(&ladder, b, *trials, &mut rng)?;
            let ok = report.all_composites_zero;
            emit(config, "harada-sai", report)?;
            Ok(ok)
        }
    }
}
