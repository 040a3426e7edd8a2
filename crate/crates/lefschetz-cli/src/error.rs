use lefschetz::chain::ChainError;
use lefschetz::complex::ComplexError;
use lefschetz::corpus::CorpusError;
use lefschetz::engine::EngineError;
use lefschetz::io::ParseError;
use lefschetz::torus::TorusError;
use lefschetz::unbounded::UnboundedError;
use thiserror::Error;

/// Command failure, classified by exit code.
#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Parse(String),
    #[error("{0}")]
    Precondition(String),
    #[error("{0}")]
    Failure(String),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Precondition(_) => 1,
            CliError::Parse(_) => 2,
            CliError::Failure(_) => 3,
        }
    }
}

impl From<ParseError> for CliError {
    fn from(e: ParseError) -> Self {
        CliError::Parse(e.to_string())
    }
}

impl From<ComplexError> for CliError {
    fn from(e: ComplexError) -> Self {
        match e {
            ComplexError::NotASubcomplex { .. } | ComplexError::DomainMismatch => CliError::Precondition(e.to_string()),
            _ => CliError::Parse(e.to_string()),
        }
    }
}

impl From<ChainError> for CliError {
    fn from(e: ChainError) -> Self {
        match e {
            ChainError::Complex(c) => c.into(),
            ChainError::WrongArity { .. } | ChainError::MissingImage(_) | ChainError::DuplicateImage(_) => {
                CliError::Parse(e.to_string())
            }
            _ => CliError::Precondition(e.to_string()),
        }
    }
}

impl From<EngineError> for CliError {
    fn from(e: EngineError) -> Self {
        match e {
            EngineError::Complex(c) => c.into(),
            EngineError::Chain(c) => c.into(),
            _ => CliError::Precondition(e.to_string()),
        }
    }
}

impl From<UnboundedError> for CliError {
    fn from(e: UnboundedError) -> Self {
        match e {
            UnboundedError::Complex(c) => c.into(),
            UnboundedError::Engine(c) => c.into(),
            UnboundedError::ChiListMismatch => CliError::Parse(e.to_string()),
            _ => CliError::Precondition(e.to_string()),
        }
    }
}

impl From<TorusError> for CliError {
    fn from(e: TorusError) -> Self {
        match e {
            TorusError::Overflow => CliError::Precondition(e.to_string()),
            _ => CliError::Parse(e.to_string()),
        }
    }
}

impl From<CorpusError> for CliError {
    fn from(e: CorpusError) -> Self {
        CliError::Failure(e.to_string())
    }
}
