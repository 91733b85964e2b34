use alloc::string::String;
use core::fmt;

/// Failures of the similarity primitives and the synset computations.
#[derive(Debug, Clone, PartialEq)]
pub enum GeometryError {
    DimensionMismatch {
        expected: usize,
        found: usize,
    },
    /// A normalized mean was requested for an empty set.
    EmptySet,
    /// The vectors of a set sum to (numerically) zero, so their mean has no direction.
    Degenerate {
        norm: f64,
    },
    /// A degenerate block mean met while scoring one partition of a synset.
    DegeneratePartition {
        synset: String,
        focus: String,
        mask: u32,
        norm: f64,
    },
    TooSmall {
        synset: String,
        n: usize,
    },
    TooLarge {
        synset: String,
        n: usize,
        max: usize,
    },
    /// `enumerate_partitions` needs at least two elements.
    PartitionSize {
        m: usize,
    },
    FocusOutOfRange {
        index: usize,
        n: usize,
    },
    /// The mask does not describe a canonical split of the remaining words.
    InvalidPartition {
        mask: u32,
        m: usize,
    },
    DuplicateToken(String),
    NotUnitNorm {
        token: String,
        norm: f64,
    },
}

impl fmt::Display for GeometryError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GeometryError::DimensionMismatch { expected, found } => {
                write!(f, "dimension mismatch: expected {expected}, found {found}")
            }
            GeometryError::EmptySet => f.write_str("normalized mean of an empty set"),
            GeometryError::Degenerate { norm } => {
                write!(f, "degenerate geometry: vector sum has norm {norm:e}")
            }
            GeometryError::DegeneratePartition {
                synset,
                focus,
                mask,
                norm,
            } => write!(
                f,
                "degenerate geometry in synset {synset:?}, focus {focus:?}, mask {mask:#b}: \
                 block sum has norm {norm:e}"
            ),
            GeometryError::TooSmall { synset, n } => {
                write!(
                    f,
                    "synset {synset:?} has {n} words; at least 3 are required"
                )
            }
            GeometryError::TooLarge { synset, n, max } => write!(
                f,
                "synset {synset:?} has {n} words, above the size cap of {max}"
            ),
            GeometryError::PartitionSize { m } => {
                write!(f, "cannot split {m} elements into two nonempty blocks")
            }
            GeometryError::FocusOutOfRange { index, n } => {
                write!(
                    f,
                    "focus index {index} out of range for synset of {n} words"
                )
            }
            GeometryError::InvalidPartition { mask, m } => {
                write!(
                    f,
                    "mask {mask:#b} is not a canonical partition of {m} elements"
                )
            }
            GeometryError::DuplicateToken(t) => write!(f, "duplicate token {t:?} in synset"),
            GeometryError::NotUnitNorm { token, norm } => {
                write!(f, "vector for {token:?} has norm {norm}, expected 1")
            }
        }
    }
}

impl core::error::Error for GeometryError {}

/// Failures while building an [`EmbeddingModel`](crate::EmbeddingModel).
#[derive(Debug, Clone, PartialEq)]
pub enum ModelError {
    ZeroDimension,
    ComponentCount {
        token: String,
        expected: usize,
        found: usize,
    },
    DuplicateToken(String),
    EmptyToken,
    NonFinite {
        token: String,
        position: usize,
    },
    ZeroNorm(String),
}

impl fmt::Display for ModelError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ModelError::ZeroDimension => f.write_str("model dimension must be positive"),
            ModelError::ComponentCount {
                token,
                expected,
                found,
            } => write!(
                f,
                "token {token:?} has {found} components, expected {expected}"
            ),
            ModelError::DuplicateToken(t) => write!(f, "duplicate token {t:?}"),
            ModelError::EmptyToken => f.write_str("empty token"),
            ModelError::NonFinite { token, position } => {
                write!(
                    f,
                    "token {token:?} has a non-finite component at {position}"
                )
            }
            ModelError::ZeroNorm(t) => write!(f, "token {t:?} has a zero vector"),
        }
    }
}

impl core::error::Error for ModelError {}

/// A synset definition that violates the file-level invariants.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum RawSynsetError {
    EmptyId,
    EmptyWordList,
    EmptyWord,
    DuplicateWord(String),
}

impl fmt::Display for RawSynsetError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RawSynsetError::EmptyId => f.write_str("empty synset id"),
            RawSynsetError::EmptyWordList => f.write_str("empty word list"),
            RawSynsetError::EmptyWord => f.write_str("empty word in word list"),
            RawSynsetError::DuplicateWord(w) => write!(f, "duplicate word {w:?}"),
        }
    }
}

impl core::error::Error for RawSynsetError {}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ResolveError {
    /// Raised only under [`OovMode::Fail`](crate::OovMode::Fail).
    OutOfVocabulary {
        synset: String,
        token: String,
    },
    DuplicateSuffix(String),
}

impl fmt::Display for ResolveError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ResolveError::OutOfVocabulary { synset, token } => {
                write!(f, "word {token:?} of synset {synset:?} is not in the model")
            }
            ResolveError::DuplicateSuffix(s) => write!(f, "tag suffix {s:?} listed twice"),
        }
    }
}

impl core::error::Error for ResolveError {}
