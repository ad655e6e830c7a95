use thiserror::Error;

use crate::linkpoly::ClassLabel;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("parse error at byte {position}: {message}")]
    Parse { position: usize, message: String },

    #[error("rule violation: {0}")]
    RuleViolation(String),

    #[error("ring variable {index} out of range for {rings} rings")]
    VariableOutOfRange { index: usize, rings: usize },

    #[error("ring count mismatch: {left} vs {right}")]
    RingCountMismatch { left: usize, right: usize },

    #[error("unsupported ring count {0}")]
    RingCountUnsupported(usize),

    #[error("no catalog loaded for {0} rings")]
    CatalogMissing(usize),

    #[error("polynomial {0} is not a connected link in the catalog")]
    NotInCatalog(String),

    #[error("malformed catalog: {0}")]
    Catalog(String),

    #[error("subsystem index {index} out of range for {count} subsystems")]
    IndexOutOfRange { index: usize, count: usize },

    #[error("partial trace needs at least one kept subsystem")]
    EmptyKeepSet,

    #[error("partial transpose needs a nonempty proper subset of subsystems")]
    FullOrEmptyPart,

    #[error("matrix is not Hermitian (max deviation {0:.3e})")]
    NotHermitian(f64),

    #[error("invalid density matrix: {0}")]
    InvalidDensity(String),

    #[error("state is not a pure qubit system: dims {0:?}")]
    NotAQubitSystem(Vec<usize>),

    #[error("GHZ state needs at least 2 qubits, got {0}")]
    BadCount(usize),

    #[error("invalid recipe: {0}")]
    InvalidRecipe(String),

    #[error("no catalog state for class {0}")]
    NoCatalogEntry(ClassLabel),

    #[error("no recipe found within {0} candidates")]
    SynthesisNotFound(usize),

    #[error("party {0} is in no allowed group")]
    IsolatedParty(String),

    #[error("allowed groups do not connect all parties")]
    DisconnectedNetwork,

    #[error("invalid network spec: {0}")]
    InvalidNetwork(String),
}

impl Error {
    pub(crate) fn parse(position: usize, message: impl Into<String>) -> Self {
        Error::Parse {
            position,
            message: message.into(),
        }
    }
}
