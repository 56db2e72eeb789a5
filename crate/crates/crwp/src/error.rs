use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("operands belong to different structures")]
    MixedOperands,
    #[error("unknown letter `{0}`")]
    UnknownLetter(String),
    #[error("empty word where a nonempty word is required")]
    EmptyWord,
    #[error("machines are defined over different alphabets")]
    AlphabetMismatch,
    #[error("triple is not an inner bitranslation")]
    NotInner,
    #[error("sandwich matrix is not normalized")]
    NotNormalized,
    #[error("element {0} is not expressible over the generating set")]
    NotExpressible(String),
    #[error("generating set does not generate the component: {0} unreachable")]
    NotGenerating(String),
    #[error("cannot take the union of an empty machine list")]
    EmptyUnion,
    #[error("invalid machine: {0}")]
    InvalidMachine(String),
    #[error("invalid group data: {0}")]
    InvalidGroup(String),
    #[error("invalid component data: {0}")]
    InvalidComponent(String),
    #[error("invalid semilattice: {0}")]
    InvalidSemilattice(String),
    #[error("invalid structure data: {0}")]
    InvalidStructure(String),
    #[error("{path}:{line}: {msg}")]
    Parse {
        path: String,
        line: usize,
        msg: String,
    },
    #[error("structure validation failed:\n{0}")]
    Validation(String),
    #[error("configuration-set simulation exceeded its growth cap (pushing epsilon-cycle?)")]
    SimulationDiverged,
    #[error("malformed word: {0}")]
    MalformedWord(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}
