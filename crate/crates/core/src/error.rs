use thiserror::Error;

pub type Result<T, E = LabError> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum LabError {
    /// An input violated an operation's precondition (e.g. a non-antisymmetric
    /// matrix passed to the exponential).
    #[error("contract violation: {0}")]
    ContractViolation(String),

    #[error("unsupported group: {0}")]
    UnsupportedGroup(String),

    #[error("domain error: {0}")]
    Domain(String),

    /// A representation was evaluated on an element outside its group.
    #[error("wrong group: {0}")]
    WrongGroup(String),

    #[error("invalid highest weight: {0}")]
    InvalidWeight(String),

    #[error("dimension mismatch: {0}")]
    Dimension(String),

    /// A self-conjugate O(n)-type of dimension > 1 needs a concrete intertwiner.
    #[error("incomplete type: {0}")]
    IncompleteType(String),

    #[error("representation is reducible: {0}")]
    Reducible(String),

    #[error("multiplicity greater than one: {0}")]
    Multiplicity(String),

    /// Projector eigenvalues did not cluster near {0, 1}.
    #[error("quadrature under-resolved: {0}")]
    QuadratureUnderresolved(String),

    /// The K-type does not occur in the restriction of tau.
    #[error("K-type not contained in representation: {0}")]
    NotContained(String),

    /// A structural assumption of a theorem check failed; this flags a bug
    /// rather than a numerical miss.
    #[error("theorem precondition failed: {0}")]
    TheoremPrecondition(String),

    #[error("orientation failure: {0}")]
    Orientation(String),
}
