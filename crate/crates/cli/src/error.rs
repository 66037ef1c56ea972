use thiserror::Error;

use crate::lexer::Pos;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("syntax error at {pos}: {message}")]
pub struct SyntaxError {
    pub pos: Pos,
    pub message: String,
}

impl SyntaxError {
    pub fn new(pos: Pos, message: impl Into<String>) -> Self {
        SyntaxError {
            pos,
            message: message.into(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EvalError {
    #[error("unknown {kind} `{name}`")]
    UnknownName { kind: &'static str, name: String },

    #[error("{kind} `{name}` is already defined")]
    Redefinition { kind: &'static str, name: String },

    #[error("cannot combine elements over bases `{0}` and `{1}`")]
    MixedBases(String, String),

    #[error("a coordinate tuple needs a basis here; write `W(…)` or use a named vector")]
    UntypedTuple,

    #[error("unknown option `{0}`")]
    UnknownOption(String),

    #[error("invalid value `{value}` for option `{option}`")]
    BadOption { option: String, value: String },

    #[error(transparent)]
    Engine(#[from] sweedler::Error),
}

impl EvalError {
    pub fn is_size_limit(&self) -> bool {
        matches!(self, EvalError::Engine(sweedler::Error::PartitionCap { .. }))
    }
}

/// An evaluation failure together with the statement that raised it.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("error at {pos} in `{source_text}`: {error}")]
pub struct CommandError {
    pub pos: Pos,
    pub source_text: String,
    pub error: EvalError,
}
