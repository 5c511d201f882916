use std::io;

use thiserror::Error;

/// Errors produced anywhere in the library.
#[derive(Debug, Error)]
pub enum Error {
    #[error("empty text")]
    EmptyText,
    #[error("empty sequence")]
    EmptySequence,
    #[error("empty alphabet")]
    EmptyAlphabet,
    #[error("symbol {symbol:?} at position {position} is not in the alphabet")]
    SymbolNotInAlphabet { symbol: char, position: usize },
    #[error("code {code} at position {position} is not a letter code")]
    InvalidCode { code: u32, position: usize },
    #[error("position {position} out of range for text of length {len}")]
    PositionOutOfRange { position: usize, len: usize },
    #[error("text too long: {0} symbols")]
    TextTooLong(usize),
    #[error("alphabet mismatch between compared sequences")]
    AlphabetMismatch,
    #[error("duplicate sequence id {0:?}")]
    DuplicateId(String),
    #[error("sequence {0:?} is empty")]
    EmptyRecord(String),
    #[error("sequence {0:?} has symbol {1:?} outside the alphabet")]
    RecordSymbol(String, char),
    #[error("line {0}: sequence data before the first header")]
    DataBeforeHeader(usize),
    #[error("line {0}: header without an id")]
    MissingId(usize),
    #[error("taxon name is empty")]
    EmptyName,
    #[error("malformed PHYLIP matrix: {0}")]
    Phylip(String),
    #[error("malformed Newick tree: {0}")]
    Newick(String),
    #[error("need at least {needed} sequences, got {got}")]
    TooFewSequences { needed: usize, got: usize },
    #[error("need at least {needed} taxa, got {got}")]
    TooFewTaxa { needed: usize, got: usize },
    #[error("trees have different leaf sets")]
    LeafSetMismatch,
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error(transparent)]
    Io(#[from] io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
