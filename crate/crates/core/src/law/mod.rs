//! Exact laws of regenerative compositions.

mod composition;
mod eppf;
mod exact;
mod green;
mod moments;

pub use composition::{compositions, partitions, Composition};
pub use eppf::{eppf, eppf_with_cap, ordering_factor_sum, two_param_eppf, DEFAULT_EPPF_CAP};
pub use exact::{
    check_sampling_consistency, composition_probability, enumerate_law, enumerate_law_with_cap, extensions,
    CompositionLaw, ConsistencyReport, DEFAULT_ENUMERATION_CAP,
};
pub use green::{
    first_part_law, green_matrix, green_matrix_formula, last_part_law, last_part_law_from_phi,
    verify_green_recursion, GreenMatrix,
};
pub use moments::{singleton_frequency_moment, size_biased_part_probability, tripartite_moment};
