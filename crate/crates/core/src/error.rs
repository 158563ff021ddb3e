use thiserror::Error;

/// Every failure the library can report.
///
/// `Void` is deliberately absent: a void quantity is a value
/// ([`crate::EvalValue::Void`]), not an error.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division between different indices is undefined for bare indices")]
    MixedIndexDivision,
    #[error("division of a complex number by C(0,0)")]
    ZeroComplexDivisor,
    #[error("divisor has a vanishing part-sum; complete-number division is undefined")]
    SingularDenominator,
    #[error("up()/down() cannot re-tag a complete number with two parts")]
    RetagOfFull,
    #[error("modulus {radicand} is not a rational square")]
    IrrationalModulus { radicand: String },
    #[error("modulus is only defined for indexed complex numbers, not complete numbers")]
    ModulusOfFull,
    #[error("unexpected character {found:?} at offset {position}")]
    Lex { position: usize, found: char },
    #[error("expected {expected} but found {found} at offset {position}")]
    Parse {
        position: usize,
        expected: String,
        found: String,
    },
    #[error("unknown law identifier {0:?}")]
    UnknownLaw(String),
    #[error("invalid trial configuration: {0}")]
    InvalidConfig(String),
}

impl Error {
    /// Stable machine-readable name, used in JSON output.
    pub fn kind(&self) -> &'static str {
        match self {
            Error::MixedIndexDivision => "MixedIndexDivision",
            Error::ZeroComplexDivisor => "ZeroComplexDivisor",
            Error::SingularDenominator => "SingularDenominator",
            Error::RetagOfFull => "RetagOfFull",
            Error::IrrationalModulus { .. } => "IrrationalModulus",
            Error::ModulusOfFull => "ModulusOfFull",
            Error::Lex { .. } => "LexError",
            Error::Parse { .. } => "ParseError",
            Error::UnknownLaw(_) => "UnknownLaw",
            Error::InvalidConfig(_) => "InvalidConfig",
        }
    }

    /// Byte offset into the source, for lexer and parser errors.
    pub fn position(&self) -> Option<usize> {
        match self {
            Error::Lex { position, .. } | Error::Parse { position, .. } => Some(*position),
            _ => None,
        }
    }

    /// True for errors raised before evaluation starts.
    pub fn is_syntax(&self) -> bool {
        matches!(self, Error::Lex { .. } | Error::Parse { .. })
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
