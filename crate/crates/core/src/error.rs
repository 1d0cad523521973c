use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid {kind} {value:?}: {reason}")]
    InvalidIdentifier {
        kind: &'static str,
        value: String,
        reason: &'static str,
    },

    #[error("duplicate {kind} {id:?}")]
    Duplicate { kind: &'static str, id: String },

    #[error("{kind} {id:?} has empty text")]
    EmptyText { kind: &'static str, id: String },

    #[error("no attributes to compare")]
    NoAttributes,

    #[error("concept {0} has no attributes")]
    ConceptWithoutAttributes(String),

    #[error("context has no concepts: {0}")]
    EmptyContext(String),

    #[error("unannotated pair: {left} {right}")]
    UnannotatedPair { left: String, right: String },

    #[error("unknown reference {reference}{}", line_suffix(.line))]
    UnknownReference {
        reference: String,
        line: Option<usize>,
    },

    #[error("malformed reference {0:?}")]
    MalformedReference(String),

    #[error("level {0} outside 0..=3")]
    InvalidLevel(u32),

    #[error("threshold {0} outside 1..=3")]
    InvalidThreshold(u32),

    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("oracle bound exceeded: {left} x {right} attributes (limit {limit})")]
    OracleBoundExceeded {
        left: usize,
        right: usize,
        limit: usize,
    },
}

fn line_suffix(line: &Option<usize>) -> String {
    line.map(|l| format!(" at line {l}")).unwrap_or_default()
}

impl Error {
    pub(crate) fn unknown(reference: impl ToString) -> Self {
        Error::UnknownReference {
            reference: reference.to_string(),
            line: None,
        }
    }

    pub(crate) fn parse(line: usize, message: impl Into<String>) -> Self {
        Error::Parse {
            line,
            message: message.into(),
        }
    }

    /// Attach a line number to a validation error raised while building a value.
    pub(crate) fn at_line(self, line: usize) -> Self {
        match self {
            Error::Parse { .. } => self,
            Error::UnknownReference { reference, .. } => Error::UnknownReference {
                reference,
                line: Some(line),
            },
            other => Error::parse(line, other.to_string()),
        }
    }

    /// True for errors caused by a reference that does not resolve.
    pub fn is_reference(&self) -> bool {
        matches!(
            self,
            Error::UnknownReference { .. } | Error::UnannotatedPair { .. }
        )
    }
}
