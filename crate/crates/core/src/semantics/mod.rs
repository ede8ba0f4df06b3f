//! Sentence meanings as doubled tensor contractions.
//!
//! Every word meaning is a positive operator on the tensor product of the
//! spaces its grammatical type maps to. A reduction pattern is evaluated by
//! applying, for every cup, the doubled counit: ket legs contract with ket legs
//! and bra legs with bra legs. Adjoints share the space of their base type.

mod density;
mod evaluate;
pub mod frobenius;
mod tensor;

pub use density::{double, word_meaning, DensityTensor, Meaning, MixtureComponent, SpaceAssignment, WordEntry};
pub use evaluate::{evaluate, similarity, snake_check};
pub use frobenius::{frobenius_iota, frobenius_mu, relative_clause, subject_pronoun, IotaMode};
pub use tensor::MAX_ENTRIES;
