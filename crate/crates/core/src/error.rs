use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("letter {letter} occurs {count} times")]
    LetterCount { letter: String, count: usize },
    #[error("both occurrences of {0} carry the same framing")]
    Framing(String),
    #[error("cannot parse {0:?}")]
    Parse(String),
    #[error("{0} is not a chord of the diagram")]
    Root(String),
    #[error("{0}")]
    Interval(String),
    #[error("expected {expected} parts, got {got}")]
    Arity { expected: usize, got: usize },
    #[error("graph does not satisfy EN1")]
    NotBicolourable,
    #[error("graph is not Gaussian")]
    NotGaussian,
    #[error("graph is not a circle graph")]
    NotCircleGraph,
    #[error("graph is disconnected")]
    Disconnected,
    #[error("graph is not prime")]
    NotPrime,
    #[error("graph is neither a clique nor a star")]
    NotDegenerate,
    #[error("{0} is not a leaf of the tree")]
    NotALeaf(usize),
    #[error("malformed graph-labelled tree: {0}")]
    MalformedGlt(String),
    #[error("weighting does not satisfy CL2")]
    NotCl2,
    #[error("{0} vertices exceed the supported maximum of 64")]
    TooLarge(usize),
    #[error("{0}")]
    Input(String),
}

impl Error {
    /// Stable machine-readable name, used by the CLI.
    pub fn kind(&self) -> &'static str {
        match self {
            Error::LetterCount { .. } => "LetterCountError",
            Error::Framing(_) => "FramingError",
            Error::Parse(_) => "ParseError",
            Error::Root(_) => "RootError",
            Error::Interval(_) => "IntervalError",
            Error::Arity { .. } => "ArityError",
            Error::NotBicolourable => "NotBicolourable",
            Error::NotGaussian => "NotGaussian",
            Error::NotCircleGraph => "NotCircleGraph",
            Error::Disconnected => "Disconnected",
            Error::NotPrime => "NotPrime",
            Error::NotDegenerate => "NotDegenerate",
            Error::NotALeaf(_) => "NotALeaf",
            Error::MalformedGlt(_) => "MalformedGLT",
            Error::NotCl2 => "NotCL2",
            Error::TooLarge(_) => "TooLarge",
            Error::Input(_) => "InputError",
        }
    }
}
