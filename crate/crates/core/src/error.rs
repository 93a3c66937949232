use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("invalid parameters: {0}")]
    InvalidParameters(String),

    #[error("{0} cannot be represented exactly; use the float backend")]
    BackendMismatch(String),

    #[error("sequence is not completely alternating: Phi({n}:{m}) = {value}")]
    NotCompletelyAlternating { n: usize, m: usize, value: String },

    #[error("Laplace exponent would be non-positive at n = {n} ({value})")]
    NonPositivePhi { n: usize, value: String },

    #[error("size {requested} exceeds the table size {available}")]
    SizeExceeded { requested: usize, available: usize },

    #[error("{what} cap exceeded: {requested} > {cap} (raise the cap explicitly to proceed)")]
    CapExceeded {
        what: &'static str,
        requested: usize,
        cap: usize,
    },

    #[error("malformed decrement matrix: {0}")]
    MalformedMatrix(String),

    #[error("invalid composition: {0}")]
    InvalidComposition(String),

    #[error("laws are over incompatible sizes: {0} and {1}")]
    MismatchedSizes(usize, usize),

    #[error(
        "symmetry test passed up to n_max but Phi(n) differs from the (alpha, alpha) exponent at n = {n}"
    )]
    SymmetryInconsistent { n: usize },

    #[error("sampler gave up after {0} stick breaks")]
    DrawCapExceeded(usize),

    #[error("spec file: {0}")]
    Spec(String),

    #[error("{0}")]
    Parse(String),

    #[error("i/o: {0}")]
    Io(String),
}
