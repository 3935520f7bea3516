use alloc::string::String;
use core::fmt;

pub type Result<T> = core::result::Result<T, Error>;

/// Coarse classification used to pick process exit codes.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ErrorKind {
    /// Bad input: malformed structures, preconditions, caps.
    Domain,
    /// A theorem-backed identity failed. Always an implementation bug.
    TheoremViolation,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    EmptyLabel,
    DuplicateLabel(String),
    UnknownLabel(String),
    TooManyElements { count: usize, max: usize },
    EmptyFamily,
    BaseSize { base: String, expected: usize, found: usize },
    DuplicateBase(String),
    /// The base family fails the exchange axiom at `(base, other, element)`.
    NotAMatroid { base: String, other: String, element: String },
    DimensionMismatch { expected: usize, found: usize },
    Overflow,
    CapExceeded { what: &'static str, limit: usize, actual: usize },
    NotMember(String),
    HasLoops(String),
    NotSimple(String),
    FamilyMismatch,
    NotABase(String),
    SameElement(String),
    NoJointBase { first: String, second: String },
    NotInTightSpan,
    Incomparable,
    NotCoverChain(String),
    Inconclusive { depth: usize },
    Degenerate(String),
    InvalidTree(String),
    InvalidMatrix(String),
    Theorem(String),
}

impl Error {
    pub fn kind(&self) -> ErrorKind {
        match self {
            Error::Theorem(_) => ErrorKind::TheoremViolation,
            _ => ErrorKind::Domain,
        }
    }
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::EmptyLabel => write!(f, "element labels must be nonempty"),
            Error::DuplicateLabel(l) => write!(f, "duplicate element label `{l}`"),
            Error::UnknownLabel(l) => write!(f, "unknown element label `{l}`"),
            Error::TooManyElements { count, max } => {
                write!(f, "{count} elements exceed the supported maximum of {max}")
            }
            Error::EmptyFamily => write!(f, "base family is empty"),
            Error::BaseSize { base, expected, found } => {
                write!(f, "base {base} has {found} elements, expected {expected}")
            }
            Error::DuplicateBase(b) => write!(f, "duplicate base {b}"),
            Error::NotAMatroid { base, other, element } => write!(
                f,
                "not a matroid: removing {element} from {base} admits no exchange with {other}"
            ),
            Error::DimensionMismatch { expected, found } => {
                write!(f, "point has {found} coordinates, expected {expected}")
            }
            Error::Overflow => write!(f, "integer overflow"),
            Error::CapExceeded { what, limit, actual } => {
                write!(f, "{what}: {actual} exceeds the cap of {limit}")
            }
            Error::NotMember(p) => write!(f, "{p} is not in the tropical linear space"),
            Error::HasLoops(l) => write!(f, "underlying matroid has loops {l}"),
            Error::NotSimple(why) => write!(f, "valuation is not simple: {why}"),
            Error::FamilyMismatch => write!(f, "valuations live on different base families"),
            Error::NotABase(b) => write!(f, "{b} is not a base"),
            Error::SameElement(e) => write!(f, "distance of {e} to itself is infinite"),
            Error::NoJointBase { first, second } => {
                write!(f, "no base contains both {first} and {second}")
            }
            Error::NotInTightSpan => write!(f, "point is not in the tight span"),
            Error::Incomparable => write!(f, "points are not ordered"),
            Error::NotCoverChain(why) => write!(f, "not a cover chain: {why}"),
            Error::Inconclusive { depth } => {
                write!(f, "rays still agree at depth {depth}; increase depth")
            }
            Error::Degenerate(why) => write!(f, "degenerate input: {why}"),
            Error::InvalidTree(why) => write!(f, "invalid tree: {why}"),
            Error::InvalidMatrix(why) => write!(f, "invalid matrix: {why}"),
            Error::Theorem(why) => write!(f, "theorem violation: {why}"),
        }
    }
}

impl core::error::Error for Error {}
