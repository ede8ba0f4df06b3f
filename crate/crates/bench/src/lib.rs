//! Fixtures shared by the benchmarks.

use densem_core::pregroup::{parse_type, reduce, PregroupType, ReductionPattern};
use densem_core::random::{random_psd_rank, seeded};
use densem_core::semantics::{DensityTensor, SpaceAssignment};
use densem_core::Tolerances;

/// A subject-verb-object sentence with random full-rank word meanings.
pub struct TransitiveFixture {
    pub words: Vec<DensityTensor>,
    pub types: Vec<PregroupType>,
    pub pattern: ReductionPattern,
    pub spaces: SpaceAssignment,
}

pub fn transitive(noun_dim: usize, sentence_dim: usize, seed: u64) -> TransitiveFixture {
    let mut rng = seeded(seed);
    let spaces = SpaceAssignment::new().with("n", noun_dim).with("s", sentence_dim);
    let types: Vec<PregroupType> = ["n", "n.r s n.l", "n"]
        .iter()
        .map(|t| parse_type(t).expect("valid type"))
        .collect();
    let pattern = reduce(&types, &parse_type("s").expect("valid type")).expect("grammatical");
    let words = types
        .iter()
        .map(|t| {
            let dims = spaces.dims_of(t).expect("declared bases");
            let flat = dims.iter().product();
            DensityTensor::new(dims, random_psd_rank(&mut rng, flat, flat), &Tolerances::default()).expect("positive")
        })
        .collect();
    TransitiveFixture {
        words,
        types,
        pattern,
        spaces,
    }
}

/// `len` simples of alternating adjoints that reduce to the unit type.
pub fn nested_cups(len: usize) -> Vec<PregroupType> {
    let half = len / 2;
    let mut out: Vec<PregroupType> = (0..half).map(|_| parse_type("n").expect("valid type")).collect();
    out.extend((0..half).map(|_| parse_type("n.r").expect("valid type")));
    out
}
