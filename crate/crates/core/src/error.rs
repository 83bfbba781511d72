use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("importance scale needs at least two levels, got {0}")]
    ScaleTooShort(usize),
    #[error("duplicate scale label `{0}`")]
    DuplicateLevelLabel(String),
    #[error("unknown importance level `{label}` on argument `{argument}`")]
    UnknownLevel { argument: String, label: String },
    #[error("level index {0} is outside the scale")]
    LevelOutOfRange(usize),
    #[error("duplicate argument name `{0}`")]
    DuplicateName(String),
    #[error("every argument has null importance; the universe is trivial")]
    TrivialUniverse,
    #[error("a universe holds at most {max} arguments, got {got}")]
    TooManyArguments { max: usize, got: usize },
    #[error("unknown argument `{argument}` in option `{option}`")]
    UnknownArgument { option: String, argument: String },
    #[error("argument `{argument}` listed more than once in option `{option}`")]
    RepeatedMember { option: String, argument: String },
    #[error("profiles belong to different universes")]
    UniverseMismatch,
    #[error("capacity evaluated on a set mixing pros and cons")]
    MixedPolarity,
    #[error("importance levels are not pairwise distinct: `{first}` and `{second}` share a level")]
    NonInjectiveImportance { first: String, second: String },
    #[error("universe has {size} arguments, enumeration bound is {bound}")]
    UniverseTooLarge { size: usize, bound: usize },
    #[error("no witness found in the enumerated search space")]
    NoWitnessFound,
    #[error("parse error at line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },
    #[error("unknown option `{0}`")]
    UnknownOption(String),
    #[error("unknown rule `{0}`")]
    UnknownRule(String),
    #[error("unknown axiom `{0}`")]
    UnknownAxiom(String),
    #[error("invalid generation bounds `{0}` (expected e.g. \"|X|=5,|L|=3\")")]
    InvalidBounds(String),
    #[error("{0}")]
    Io(String),
}

impl From<serde_json::Error> for Error {
    fn from(err: serde_json::Error) -> Self {
        Error::Parse {
            line: err.line(),
            column: err.column(),
            message: err.to_string(),
        }
    }
}
