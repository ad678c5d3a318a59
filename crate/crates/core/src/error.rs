use thiserror::Error;

/// Errors raised by braid, mixed-subgroup, surface and classifier operations.
#[derive(Error, Debug, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("strand count mismatch: {left} vs {right}")]
    StrandMismatch { left: usize, right: usize },
    #[error("index error: {0}")]
    Index(String),
    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),
    #[error("braid does not preserve the two blocks of {n} strands")]
    NotInBnn { n: usize },
    #[error("braid neither preserves nor swaps the two blocks of {n} strands")]
    NotInB2nn { n: usize },
    #[error(
        "image of generator {generator} does not lie in the block-preserving-or-swapping subgroup"
    )]
    ImageNotInB2nn { generator: String },
    #[error("odd crossing count between cross-block strands {first} and {second}")]
    OddCrossBlockCrossings { first: usize, second: usize },
    #[error("theta is not surjective")]
    ThetaNotSurjective,
    #[error("invalid transversal generator {0}: theta must be 1 on it")]
    InvalidTransversal(String),
    #[error("invalid presentation: {0}")]
    InvalidPresentation(String),
    #[error("hypothesis not met: {0}")]
    HypothesisNotMet(String),
    #[error("invalid descriptor: {0}")]
    InvalidDescriptor(String),
    #[error("witness failure: {0}")]
    WitnessFailure(String),
}

pub type Result<T> = std::result::Result<T, Error>;
