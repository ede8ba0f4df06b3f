//! Graded entailment between positive operators.
//!
//! `A` is a `k`-hyponym of `B` when `B - k A` is positive. Such a `k > 0`
//! exists iff `supp(A) ⊆ supp(B)`, and the largest one is
//! `1 / lambda_max(B^+ A)`.

mod bloch;
mod framework;
mod hyponymy;
mod normalize;

pub use bloch::{disc_grid, from_bloch, lattice_coordinate, to_bloch, write_disc_csv, DiscPoint};
pub use framework::{general_error, set_entailment, ErrorDecomposition, FiniteSetProposition, GradedEntailment};
pub use hyponymy::{is_k_hyponym, k_max, supports_contained, EntailmentResult};
pub use normalize::{bayes_transform, normalize, NormalizationStrategy};
