use thiserror::Error;

/// Which caller-supplied string failed validation.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Field {
    Seed,
    ItemId,
}

impl std::fmt::Display for Field {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Field::Seed => f.write_str("seed"),
            Field::ItemId => f.write_str("item id"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{field} must not contain a NUL byte")]
    ContainsNul { field: Field },

    #[error("{field} must not be empty")]
    EmptyField { field: Field },

    /// `index` is the zero-based position of the offending id in the input.
    #[error("invalid item id at position {index}: {source}")]
    InvalidItem {
        index: usize,
        #[source]
        source: Box<Error>,
    },

    #[error("tag part {part} contains a NUL byte")]
    NulInTag { part: usize },

    #[error("population must contain at least one item")]
    EmptyPopulation,

    #[error("duplicate item id {id:?} at position {index}")]
    DuplicateId { id: String, index: usize },

    #[error("sample size {requested} exceeds population size {population} when sampling without replacement")]
    SampleTooLarge { requested: usize, population: usize },

    #[error("invalid ticket number {0:?}")]
    InvalidTicket(String),

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
