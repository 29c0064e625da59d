use thiserror::Error;

use crate::partition::Partition;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("cannot parse partition {input:?}: {reason}")]
    Parse { input: String, reason: String },

    #[error("{partition} is not in class {class}")]
    NotInClass {
        class: &'static str,
        partition: Partition,
    },

    #[error("{partition} cannot map onto domain (m={m}, n={n}): {reason}")]
    Domain {
        partition: Partition,
        m: u32,
        n: u32,
        reason: String,
    },

    #[error("{partition} is not a {orientation} minimal segment")]
    NotMinimalSegment {
        partition: Partition,
        orientation: &'static str,
    },

    #[error("maximal minimal segments overlap in {partition}: parts {first:?} and {second:?}")]
    SegmentOverlap {
        partition: Partition,
        first: (u32, u32),
        second: (u32, u32),
    },

    #[error("no {orientation} minimal segment has quadruple {quadruple}")]
    InvalidQuadruple {
        quadruple: String,
        orientation: &'static str,
    },

    #[error("shifting {partition} by {delta} leaves a non-positive part")]
    Shift { partition: Partition, delta: i32 },

    #[error("{what} out of range: {detail}")]
    OutOfRange { what: &'static str, detail: String },

    #[error("invalid 2-modular graph: {0}")]
    InvalidGraph(String),
}

impl Error {
    /// Stable machine-readable name, used in JSON error objects.
    pub fn kind(&self) -> &'static str {
        match self {
            Error::Parse { .. } => "parse",
            Error::NotInClass { .. } => "class",
            Error::Domain { .. } => "domain-index",
            Error::NotMinimalSegment { .. } => "not-minimal-segment",
            Error::SegmentOverlap { .. } => "segment-overlap",
            Error::InvalidQuadruple { .. } => "invalid-quadruple",
            Error::Shift { .. } => "shift",
            Error::OutOfRange { .. } => "out-of-range",
            Error::InvalidGraph(_) => "invalid-graph",
        }
    }
}
