use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("clause set is empty")]
    EmptyClauseSet,
    #[error("clause is empty")]
    EmptyClause,
    #[error("regulator index {index} is outside 1..={arity}")]
    IndexOutOfRange { index: usize, arity: usize },
    #[error("clause {absorbed} is absorbed by clause {by}")]
    NotAntichain { absorbed: String, by: String },
    #[error("regulator {index} appears in no clause")]
    NotCover { index: usize },
    #[error("arity {arity} exceeds the limit of {limit}")]
    ArityTooLarge { arity: usize, limit: usize },
    #[error("arity mismatch: expected {expected}, found {found}")]
    ArityMismatch { expected: usize, found: usize },
    #[error("threshold {threshold} outside 1..={arity}")]
    ThresholdOutOfRange { threshold: usize, arity: usize },
    #[error("regulator context has no activator")]
    NoActivators,
    #[error("{child} is not a child of {parent}")]
    NotAParent { child: String, parent: String },
    #[error("Dedekind number M({0}) is not known")]
    DedekindUnknown(usize),
    #[error("state space of {components} components exceeds the limit of {limit}")]
    StateSpaceTooLarge { components: usize, limit: usize },
    #[error("path is not an ascending Hasse chain at position {position}")]
    NotAChain { position: usize },
    #[error("component is not auto-regulated")]
    NotAutoregulated,
    #[error("auto-regulated component has a single regulator")]
    SingleRegulator,
    #[error("invalid probability {0}")]
    InvalidProbability(f64),
    #[error("network has no marker component {0}")]
    MissingMarker(String),
    #[error("invalid network: {0}")]
    InvalidNetwork(String),
    #[error("invalid state: {0}")]
    InvalidState(String),
    #[error("syntax error at column {column}: {message}")]
    Syntax { column: usize, message: String },
    #[error("variable {0} is used both as activator and inhibitor")]
    DualRegulation(String),
    #[error("expression is not in disjunctive normal form: {0}")]
    NotDnf(String),
    #[error("variable {0} is not essential in the expression")]
    NonEssential(String),
    #[error("expression is constant")]
    ConstantExpression,
    #[error("unknown variable {0}")]
    UnknownVariable(String),
    #[error("component {0} declared twice")]
    DuplicateComponent(String),
    #[error("line {line}: {source}")]
    AtLine {
        line: usize,
        #[source]
        source: Box<Error>,
    },
}

impl Error {
    pub(crate) fn at_line(self, line: usize) -> Self {
        match self {
            e @ Error::AtLine { .. } => e,
            e => Error::AtLine {
                line,
                source: Box::new(e),
            },
        }
    }

    /// True for errors raised while reading text input, as opposed to
    /// semantic validation failures.
    pub fn is_parse_error(&self) -> bool {
        match self {
            Error::AtLine { source, .. } => source.is_parse_error(),
            Error::Syntax { .. }
            | Error::DualRegulation(_)
            | Error::NotDnf(_)
            | Error::NonEssential(_)
            | Error::ConstantExpression
            | Error::UnknownVariable(_)
            | Error::DuplicateComponent(_)
            | Error::InvalidState(_) => true,
            _ => false,
        }
    }
}
