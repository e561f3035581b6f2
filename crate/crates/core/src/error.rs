use crate::partition::Partition;
use thiserror::Error;

/// Errors shared across the library.
#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum Error {
    /// A degree or size argument exceeds the configured bound.
    #[error("{what} {value} exceeds bound {bound}")]
    BoundExceeded {
        what: &'static str,
        value: u32,
        bound: u32,
    },

    /// Character values are only defined when |lambda| = |mu|.
    #[error("size mismatch: |{lambda}| != |{mu}|")]
    SizeMismatch { lambda: Partition, mu: Partition },

    /// Plethysm requires the right argument homogeneous of positive degree.
    #[error("plethysm argument must be homogeneous of positive degree")]
    InhomogeneousArgument,

    /// The outer subobject of beta is only determined for certain families.
    #[error("omega beta is not determined for nu = {0}; only Euler data is available")]
    UnsupportedFamily(Partition),

    /// Malformed CLI input.
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
