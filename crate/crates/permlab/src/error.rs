use thiserror::Error;

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, Error>;

/// All the ways an operation can refuse to produce an answer.
///
/// Invalid input and exhausted resource budgets are deliberately distinct
/// variants: the CLI maps them to different exit codes, and a search that
/// runs out of budget must never be mistaken for a negative result.
#[derive(Debug, Error)]
pub enum Error {
    /// A word used a value twice, e.g. `[1, 2, 1]`.
    #[error("invalid permutation: value {value} appears more than once")]
    DuplicateValue {
        /// The repeated value.
        value: u64,
    },

    /// A word of length `n` used a value outside `1..=n`.
    #[error("invalid permutation: value {value} is outside 1..={len}")]
    ValueOutOfRange {
        /// The offending value.
        value: u64,
        /// The length of the word it appeared in.
        len: usize,
    },

    /// Two entries given to pattern extraction compare equal.
    #[error("cannot take the pattern of a sequence with equal entries (positions {first} and {second})")]
    EqualEntries {
        /// 1-based position of the first copy.
        first: usize,
        /// 1-based position of the second copy.
        second: usize,
    },

    /// A permutation exceeded the configured length cap.
    #[error("permutation of length {len} exceeds the cap of {max}")]
    LengthCap {
        /// Requested length.
        len: usize,
        /// Configured maximum.
        max: usize,
    },

    /// Unparseable permutation or basis text.
    #[error("cannot parse {text:?} as a permutation: {reason} (at position {position})")]
    Parse {
        /// The rejected input.
        text: String,
        /// 1-based character position of the problem.
        position: usize,
        /// What went wrong there.
        reason: String,
    },

    /// An inflation was given an empty block.
    #[error("inflation block {position} is empty; every block must be nonempty")]
    EmptyInflationBlock {
        /// 1-based index of the empty block.
        position: usize,
    },

    /// An inflation was given the wrong number of blocks.
    #[error("inflation of a length-{expected} permutation needs {expected} blocks, got {got}")]
    BlockCountMismatch {
        /// Skeleton length.
        expected: usize,
        /// Number of blocks supplied.
        got: usize,
    },

    /// A composition contained a zero part.
    #[error("composition parts must be positive; part {position} is zero")]
    ZeroPart {
        /// 1-based index of the zero part.
        position: usize,
    },

    /// A configurable resource budget ran out before the answer was known.
    #[error("{what} budget exhausted (limit {limit}); the result is unknown, not negative")]
    BudgetExceeded {
        /// Which budget ran out.
        what: &'static str,
        /// Its configured limit.
        limit: u64,
    },

    /// A scan over lengths ran out of budget partway through.
    #[error("search budget exhausted after fully verifying length {last_complete}; longer lengths are unknown")]
    BudgetExceededMidScan {
        /// Last length for which the scan finished completely.
        last_complete: usize,
    },

    /// Too few sequence terms for the requested fit or verification.
    #[error("need at least {needed} terms, got {got}")]
    InsufficientTerms {
        /// Minimum number of terms required.
        needed: usize,
        /// Number supplied.
        got: usize,
    },

    /// Every supplied term is zero, so any coefficients "fit".
    #[error("the sequence is identically zero; a recurrence fit would be meaningless")]
    AllZeroSequence,

    /// A long-running computation was requested without the explicit opt-in.
    #[error("{what} is long-running ({estimate}); pass --opt-in-long to run it")]
    LongRunNotOptedIn {
        /// The gated computation.
        what: String,
        /// Rough cost estimate shown to the user.
        estimate: String,
    },

    /// Catch-all for arguments that fail a precondition.
    #[error("{0}")]
    InvalidArgument(String),

    /// A malformed line in a cache or sequence file.
    #[error("{path}:{line}: {reason}")]
    FileFormat {
        /// File being read.
        path: String,
        /// 1-based line number.
        line: usize,
        /// What was wrong with it.
        reason: String,
    },

    /// Underlying I/O failure.
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl Error {
    /// True for the budget-exhaustion variants, which the CLI reports with
    /// a dedicated exit code.
    pub fn is_budget(&self) -> bool {
        matches!(
            self,
            Error::BudgetExceeded { .. } | Error::BudgetExceededMidScan { .. }
        )
    }
}
