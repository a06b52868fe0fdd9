use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("duplicate vertex `{0}`")]
    DuplicateVertex(String),
    #[error("duplicate edge `{0}`-`{1}`")]
    DuplicateEdge(String, String),
    #[error("self-loop at `{0}`")]
    SelfLoop(String),
    #[error("edge endpoint `{0}` is not a declared vertex")]
    UnknownEndpoint(String),
    #[error("edge `{0}`-`{1}` has nonpositive weight {2}")]
    NonpositiveWeight(String, String, i64),
    #[error("invalid vertex label {0:?}")]
    InvalidLabel(String),
    #[error("unknown vertex `{0}`")]
    UnknownVertex(String),
    #[error("graph is not a tree")]
    NotATree,
    #[error("not a simple path: {0}")]
    NotAPath(String),
    #[error("graph is not an increasing weighted tree")]
    NotIncreasingTree,
    #[error("`{root}` is not a root of the weighted tree")]
    InvalidRoot { root: String },
    #[error("vertex `{0}` has no incident edges")]
    IsolatedVertex(String),
    #[error("vertex set is not independent: `{0}`-`{1}` is an edge")]
    NotIndependent(String, String),
    #[error("vertex `{0}` has no neighbor in the independent set")]
    NotInNeighborhood(String),
    #[error("component of G_S contains several neighborhood vertices: {0:?}")]
    MultipleRoots(Vec<String>),
    #[error("vertex set is not a vertex cover")]
    NotACover,
    #[error("invalid power t = {0}; powers start at 1")]
    InvalidPower(u64),
    #[error("trivial tree: the edge ideal is zero")]
    TrivialTree,
    #[error("{n} vertices exceeds the enumeration limit of {max}")]
    TooManyVertices { n: usize, max: usize },
    #[error("exponent arithmetic overflowed 64 bits")]
    Overflow,
    #[error("ideals live over different ambient variable lists")]
    AmbientMismatch,
    #[error("exponent vector has length {got}, ambient has {expected} variables")]
    LengthMismatch { expected: usize, got: usize },
    #[error("the zero ideal has no associated primes")]
    ZeroIdeal,
    #[error("the unit ideal has no associated primes")]
    UnitIdeal,
    #[error("prime support must be nonempty")]
    EmptySupport,
    #[error("witness search space of {size} exponent vectors exceeds the budget of {budget}; raise the budget to proceed")]
    SearchSpaceTooLarge { size: u128, budget: u64 },
    #[error("random generation needs at least {min} vertices, got {n}")]
    TooFewVertices { n: usize, min: usize },
    #[error("weight bound must be at least 1, got {0}")]
    InvalidWeightBound(u64),
    #[error("no increasing tree found after {0} attempts")]
    RejectionLimit(u64),
    #[error("parse error: {0}")]
    Parse(String),
}
