//! Graded entailment in the density-matrix model of compositional
//! distributional semantics.
//!
//! Words are positive operators on the spaces their pregroup types map to.
//! Sentences are composed by contracting word tensors along the cups of a
//! type reduction, and entailment between any two operators `A`, `B` is graded
//! by the largest `k` for which `B - k A` is positive.

pub mod entailment;
pub mod error;
pub mod format;
pub mod pregroup;
pub mod psd;
pub mod random;
pub mod semantics;

pub use entailment::{
    bayes_transform, disc_grid, from_bloch, general_error, is_k_hyponym, k_max, normalize, set_entailment,
    supports_contained, to_bloch, DiscPoint, EntailmentResult, ErrorDecomposition, FiniteSetProposition,
    NormalizationStrategy,
};
pub use error::{Error, Result};
pub use pregroup::{is_grammatical, parse_type, reduce, PregroupType, ReductionPattern, SimpleType};
pub use psd::{
    eig, is_psd, loewner_leq, pseudo_inverse, satisfaction, sqrt_psd, support_projector, EigenDecomposition, SymMatrix,
    Tolerances,
};
pub use semantics::{
    double, evaluate, relative_clause, word_meaning, DensityTensor, IotaMode, Meaning, SpaceAssignment, WordEntry,
};
