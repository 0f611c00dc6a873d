use thiserror::Error;

/// Errors shared by every module in the crate.
///
/// Witness-bearing variants carry element labels or index names rather than
/// raw indices so that messages stay meaningful once they leave the library.
#[derive(Debug, Error)]
pub enum Error {
    #[error("carrier must have at least two elements, got {0}")]
    CarrierTooSmall(usize),

    #[error("table `{table}` must be {n}x{n}, found row of length {found}")]
    MalformedTable { table: String, n: usize, found: usize },

    #[error("table `{table}` entry at ({row},{col}) is {value}, outside carrier of size {n}")]
    TableEntryOutOfRange { table: String, row: usize, col: usize, value: usize, n: usize },

    #[error("duplicate carrier label `{0}`")]
    DuplicateLabel(String),

    #[error("law `{law}` fails at ({})", witness.join(", "))]
    LawViolation { law: String, witness: Vec<String> },

    #[error("not supported on this structure: {0}")]
    UnsupportedStructure(String),

    #[error("could not parse `{input}` as an exact rational: {reason}")]
    BadRational { input: String, reason: String },

    #[error("label `{label}` is not in the carrier [{carrier}]")]
    LabelNotInCarrier { label: String, carrier: String },

    #[error("index set must not be empty")]
    EmptyIndexSet,

    #[error("duplicate index name `{0}`")]
    DuplicateIndex(String),

    #[error("unknown index name `{0}`")]
    UnknownIndex(String),

    #[error("duplicate entry for ({i}, {j})")]
    DuplicateEntry { i: String, j: String },

    #[error("operands live over different lattices")]
    LatticeMismatch,

    #[error("shape mismatch: {0}")]
    Shape(String),

    #[error("enumerating {needed} vectors exceeds the budget of {budget}")]
    BudgetExceeded { needed: u128, budget: usize },

    #[error("operator is not {expected}: {reason}")]
    WrongTypeClass { expected: String, reason: String },

    #[error("operator has no {direction} adjoint: {reason}")]
    NotAdjointable { direction: String, reason: String },

    #[error("operator is not expressible as {mode}: {reason}")]
    NotDecomposable { mode: String, reason: String },

    #[error("mappings are not a {kind} adjoint pair: {reason}")]
    NotGaloisPair { kind: String, reason: String },

    #[error("relation is not a fuzzy equivalence: law `{law}` fails at ({})", witness.join(", "))]
    NotEquivalence { law: String, witness: Vec<String> },

    #[error("{0}")]
    Io(#[from] std::io::Error),

    #[error("{file}: {message}")]
    FileFormat { file: String, message: String },
}

pub type Result<T> = std::result::Result<T, Error>;
