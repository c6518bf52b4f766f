//! Exact linear algebra over Q and prime fields; everything else in the
//! crate computes through this module.

mod matrix;
mod scalar;
mod subspace;

pub use matrix::Matrix;
pub use scalar::{FieldSpec, Scalar};
pub use subspace::Subspace;
