use thiserror::Error;

use crate::exterior::Domain;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("coefficient domains differ: {0} vs {1}")]
    DomainMismatch(Domain, Domain),

    #[error("operation undefined on the zero element")]
    EmptyElement,

    #[error("leading coefficient {0} is not invertible over {1}")]
    NonInvertibleLead(String, Domain),

    #[error("{0} is not a field")]
    NotAField(Domain),

    #[error("invalid field tag {0:?}: expected q, f2, f3, f5 or f<p> with p prime below 2^31")]
    InvalidFieldTag(String),

    #[error("ground set of size {n} exceeds the limit of {max}")]
    TooManyElements { n: usize, max: usize },

    #[error("element {element} outside ground set of size {n}")]
    ElementOutOfRange { element: usize, n: usize },

    #[error("not a permutation of the ground set: {0}")]
    InvalidOrder(String),

    #[error("matroid is not simple: {0}")]
    NonSimple(String),

    #[error("circuits {0:?} and {1:?} are nested")]
    AntichainViolation(Vec<usize>, Vec<usize>),

    #[error("circuit list incomplete: eliminating {element} from {first:?} and {second:?} leaves no listed circuit")]
    IncompleteCircuits {
        first: Vec<usize>,
        second: Vec<usize>,
        element: usize,
    },

    #[error("set {0:?} is dependent")]
    Dependent(Vec<usize>),

    #[error("set {0:?} is not a circuit")]
    NotACircuit(Vec<usize>),

    #[error("invalid arrangement: {0}")]
    InvalidArrangement(String),

    #[error("exhaustive search over {n}! orders refused (limit n <= {max}); use a random strategy with an explicit seed")]
    SearchTooLarge { n: usize, max: usize },

    #[error("invalid search strategy: {0}")]
    InvalidStrategy(String),

    #[error("internal invariant violated: {0}")]
    Invariant(String),
}

impl Error {
    /// True for errors that point at a bug rather than at bad input.
    pub fn is_internal(&self) -> bool {
        matches!(self, Error::Invariant(_))
    }
}
