//! A workbench for the radical of cluster tilting subcategories of module
//! categories of bounded quiver algebras.
//!
//! The crate builds a bounded quiver algebra from a presentation, works with
//! its finite dimensional modules as quiver representations, and computes:
//!
//! * Hom spaces, decompositions into indecomposables, endomorphism radicals;
//! * projective covers, injective envelopes, Ext groups, approximations;
//! * the radical ideal of an additively generated subcategory, its powers,
//!   depths of morphisms, irreducible morphisms, minimal almost split maps;
//! * finiteness certificates (nilpotency index, Harada-Sai bound, theta
//!   depths) and decompositions of radical morphisms into sums of
//!   composites of irreducibles;
//! * brute-force oracles (indecomposable enumeration over tiny fields,
//!   chain-span radical powers) that double-check the fast paths.
//!
//! All arithmetic is exact; all outputs are canonical so that reports can be
//! diffed and replayed byte for byte.

pub mod algebra;
pub mod criteria;
pub mod error;
pub mod files;
pub mod homalg;
pub mod linalg;
pub mod oracle;
pub mod radical;
pub mod rep;
pub mod report;
pub mod rng;

pub use error::{Error, Result};
