use thiserror::Error;

/// Errors raised by constructors, codecs and the combinatorial maps.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("parse error: {0}")]
    Parse(String),
    #[error("not a permutation of [{n}]: {detail}")]
    NotPermutation { n: usize, detail: String },
    #[error("value {value} is outside 1..={n}")]
    OutOfRange { value: usize, n: usize },
    #[error("overlapping cycles: {0} appears twice")]
    OverlappingCycles(usize),
    #[error("repeated letter {0}")]
    RepeatedLetter(usize),
    #[error("letter sets of the two words overlap at {0}")]
    OverlappingLetters(usize),
    #[error("not an involution")]
    NotInvolution,
    #[error("expected no fixed points, found {0}")]
    HasFixedPoints(usize),
    #[error("size {0} is odd, expected an even size")]
    OddSize(usize),
    #[error("size {0} exceeds the supported maximum of {max}", max = crate::MAX_N)]
    TooLarge(usize),
    #[error("invalid shape: {0}")]
    InvalidShape(String),
    #[error("invalid tableau: {0}")]
    InvalidTableau(String),
    #[error("tableaux have different shapes")]
    ShapeMismatch,
    #[error("letter {0} is already present")]
    LetterPresent(usize),
    #[error("letter {0} is absent")]
    LetterAbsent(usize),
    #[error("cell ({0},{1}) is not an addable corner")]
    InvalidCorner(usize, usize),
    #[error("tableau has {found} odd columns, expected {expected}")]
    OddColumns { found: usize, expected: usize },
    #[error("invalid parameters n={n}, k={k}: need 0 <= k <= n with n - k even")]
    Parity { n: usize, k: usize },
    #[error("invalid nesting parameter j={j} for n={n}, k={k}: need 0 <= j <= (n-k)/2")]
    InvalidNesting { n: usize, k: usize, j: usize },
    #[error("invalid oscillating tableau: {0}")]
    InvalidOscillating(String),
    #[error("invalid shuffle element: {0}")]
    InvalidShuffle(String),
    #[error("size mismatch: {0}")]
    SizeMismatch(String),
    #[error("subset oracle limited to {max} arcs, got {found}")]
    OracleGuard { found: usize, max: usize },
    #[error("map is not a bijection of the ground set: {0}")]
    NotBijective(String),
    #[error("cycle types share the part {0}")]
    SharedPart(usize),
    #[error("{0}")]
    Usage(String),
}

pub type Result<T> = std::result::Result<T, Error>;
