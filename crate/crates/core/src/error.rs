use thiserror::Error;

use crate::partition::{BoxPos, Partition};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("malformed partition: {0}")]
    Parse(String),

    #[error("parts must be weakly decreasing, got {0:?}")]
    NotWeaklyDecreasing(Vec<usize>),

    #[error("modulus must be at least {min}, got {ell}")]
    ModulusTooSmall { ell: usize, min: usize },

    #[error("box {pos} is not in the diagram of {partition}")]
    BoxNotInDiagram { pos: BoxPos, partition: Partition },

    #[error("boxes do not form a removable rim hook of {0}")]
    InvalidHook(Partition),

    #[error("rim hooks share a box")]
    OverlappingHooks,

    #[error("{0} is not an (l,0)-JM partition")]
    NotJm(Partition),

    #[error("invalid JM decomposition: {0}")]
    InvalidDecomposition(String),

    #[error("{0} is not a core for this modulus")]
    NotACore(Partition),

    #[error("{0} is not regular for this modulus")]
    NotRegular(Partition),

    /// A postcondition guaranteed by theory failed; never silently swallowed.
    #[error("internal invariant violated: {0}")]
    Invariant(String),
}

pub type Result<T> = std::result::Result<T, Error>;
