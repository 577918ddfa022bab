use thiserror::Error;

use crate::automaton::ValidationError;
use crate::format::ParseError;
use crate::word::{DataWord, WordError};

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid automaton: {}", join(.0))]
    Invalid(Vec<ValidationError>),
    #[error("letter `{letter}` at position {position} is not in the alphabet")]
    UnknownLetter { position: usize, letter: String },
    #[error("automaton is not deterministic")]
    NotDeterministic,
    #[error("alphabets differ: {left:?} vs {right:?}")]
    AlphabetMismatch { left: Vec<String>, right: Vec<String> },
    #[error("expected a singleton automaton (one set), found {0} sets")]
    NotSingleton(usize),
    #[error("word is not accepted")]
    NotAccepted,
    #[error("word of length {len} is shorter than the state count {states}")]
    WordTooShort { len: usize, states: usize },
    #[error("pump count must be at least 1")]
    ZeroPump,
    #[error("pumped word `{0}` is not accepted")]
    PumpNotAccepted(DataWord),
    #[error("search depth {required} exceeds the configured limit {limit}")]
    DepthLimit { required: usize, limit: usize },
    #[error("clause {0} is empty")]
    EmptyClause(usize),
    #[error("literal {literal} in clause {clause} exceeds variable count {variables}")]
    LiteralOutOfRange { clause: usize, literal: i64, variables: usize },
    #[error("formula has no variables")]
    NoVariables,
    #[error("unknown language `{0}`")]
    UnknownLanguage(String),
    #[error("unknown fixture `{0}`")]
    UnknownFixture(String),
    #[error(transparent)]
    Word(#[from] WordError),
    #[error(transparent)]
    Parse(#[from] ParseError),
}

fn join(errors: &[ValidationError]) -> String {
    errors.iter().map(|e| e.to_string()).collect::<Vec<_>>().join("; ")
}
