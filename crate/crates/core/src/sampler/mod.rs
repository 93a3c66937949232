//! Monte Carlo samplers and their empirical validation.

mod batch;
mod chain;
mod rng;
mod stats;
mod stick;

pub use batch::{sample_batch, sample_batch_with_cap, CHUNK_SIZE, DEFAULT_SAMPLE_CAP};
pub use chain::{grow_composition, growth_branches, push_forward_law, sample_by_growth, sample_composition};
pub use rng::RngStream;
pub use stats::{
    chi_square, chi_square_two_sample, empirical_law, ks_two_sample, tv_distance, ChiSquare, EmpiricalLaw,
    KolmogorovSmirnov, SampleSummary, MIN_EXPECTED_COUNT,
};
pub use stick::{
    sample_myriads_frequency, sample_stick_breaking, CutLaw, DEFAULT_MYRIADS_EPSILON, STICK_DRAW_CAP,
};
