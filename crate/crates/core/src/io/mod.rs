//! Spec files and output encodings.

mod export;
pub mod rational_serde;
mod spec;

pub use export::{write_decrement_csv, write_green_csv, write_law_csv, write_phi_csv, write_samples};
pub use spec::{ModelSource, SpecFile};
