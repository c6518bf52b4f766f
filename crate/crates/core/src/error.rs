//! Error type shared by the whole workbench.

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    /// Presentation is not admissible: a relation of length < 2, or the
    /// arrow ideal fails to become nilpotent within the length cap.
    #[error("not admissible: {0}")]
    NotAdmissible(String),

    /// Matrix or morphism shapes do not line up.
    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),

    /// Two scalars or matrices from different base fields were combined.
    #[error("field mismatch: {0}")]
    FieldMismatch(String),

    /// Two representations over different algebras were combined.
    #[error("algebra mismatch: {0}")]
    AlgebraMismatch(String),

    /// The prime field is too small for the trace-form radical criterion.
    #[error("characteristic too small: p = {p} <= dim End = {dim}; enlarge the field")]
    CharTooSmall { p: u64, dim: usize },

    /// An endomorphism ring with End/rad of dimension > 1 was met where a
    /// split (End/rad = k) ring is required.
    #[error("non-split endomorphism ring: {0}")]
    NonSplitEndo(String),

    /// A decomposable module resisted every splitting attempt.
    #[error("failed to split a decomposable module: {0}")]
    SplitFailure(String),

    /// A factorization through an almost split map failed, so the listed
    /// indecomposables cannot be all of the subcategory.
    #[error("subcategory list is incomplete: {0}")]
    IncompleteList(String),

    /// The morphism handed to the irreducible-sum decomposition is not in
    /// the radical.
    #[error("morphism is not in the radical")]
    NotInRadical,

    /// The radical ladder stabilized at a nonzero ideal.
    #[error("radical ladder is not nilpotent relative to the list")]
    LadderNotNilpotent,

    /// A sweep or search exceeded its configured budget.
    #[error("budget exceeded: {0}")]
    BudgetExceeded(String),

    /// Malformed user input (files, presentations, flags).
    #[error("invalid input: {0}")]
    InvalidInput(String),

    /// A theorem-level identity failed to hold; never silently resolved.
    #[error("internal inconsistency: {0}")]
    Inconsistency(String),
}

pub type Result<T> = std::result::Result<T, Error>;
