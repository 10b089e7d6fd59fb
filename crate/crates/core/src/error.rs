use thiserror::Error;

/// Everything that can go wrong in the library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("parse error: {0}")]
    Parse(String),
    #[error("bad pair specifier `{spec}`: {reason}")]
    BadSpecifier { spec: String, reason: String },
    #[error("generators {0} do not generate a multiplicative subgroup")]
    NotASubgroup(String),
    #[error("element {0} is not tangible")]
    NonTangibleInput(String),
    #[error("pair {0} has no Property-N witness")]
    MissingDagger(String),
    #[error("undecidable: {0}")]
    Undecidable(String),
    #[error("element {0} is not a sum of tangibles")]
    Unreachable(String),
    #[error("pair is not metatangible: {0}")]
    NotMetatangible(String),
    #[error("no uniform presentation for {0}")]
    NoPresentation(String),
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("algebra mismatch: `{0}` vs `{1}`")]
    AlgebraMismatch(String, String),
    #[error("{what}: size {n} exceeds cap {cap}")]
    CapExceeded { what: &'static str, n: usize, cap: usize },
    #[error("matrix is singular")]
    SingularInput,
    #[error("determinant {0} is not invertible in T")]
    NonInvertibleDeterminant(String),
    #[error("coefficient domain is empty")]
    DomainEmpty,
    #[error("pair {0} has no modulus")]
    NoModulus(String),
    #[error("diagonal track is not dominant")]
    NotDominantDiagonal,
    #[error("matrix is not strictly nonsingular")]
    NotStrictlyNonsingular,
    #[error("diagonal entry {0} is not invertible")]
    NonInvertibleDiagonal(String),
    #[error("pair {0} registers no tangible lift")]
    NoLift(String),
    #[error("no convergence within {0} iterations")]
    NoConvergence(usize),
    #[error("unknown example `{0}`")]
    UnknownExample(String),
}

impl Error {
    /// Process exit code used by the command-line front end.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::CapExceeded { .. } | Error::Undecidable(_) | Error::NoConvergence(_) => 3,
            _ => 2,
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
