use core::fmt;

/// Errors raised by precondition and validity checks across the crate.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// An argument lies outside the domain of a function.
    Domain(&'static str),
    /// A sequence with no positive entry where one is required.
    NoEdges,
    /// Degree sums must be even for any graph-level operation.
    OddDegreeSum(u64),
    /// The padding order is smaller than the number of positive degrees.
    PaddingTooSmall {
        padding: usize,
        required: usize,
    },
    /// Majorization compares sequences of equal total only.
    UnequalSums {
        left: u64,
        right: u64,
    },
    NotGraphical,
    /// Graphical, but every realization is disconnected.
    NoConnectedRealization,
    NoUniversalVertex,
    /// `(n, m)` outside the admissible range for the requested operation.
    OutOfRange {
        n: usize,
        m: usize,
        min_m: usize,
        max_m: usize,
    },
    /// `m` too small for the given minimum degree `b`.
    SizeBelowMinimum {
        m: u64,
        b: u64,
        min_m: u64,
    },
    InvalidEdge {
        u: usize,
        v: usize,
        n: usize,
    },
    DuplicateEdge {
        u: usize,
        v: usize,
    },
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::Domain(msg) => write!(f, "domain error: {msg}"),
            Error::NoEdges => f.write_str("domain error: degree sequence has no positive entry"),
            Error::OddDegreeSum(s) => write!(f, "invalid degree sequence: odd degree sum {s}"),
            Error::PaddingTooSmall { padding, required } => {
                write!(
                    f,
                    "padding order {padding} is below the {required} required vertices"
                )
            }
            Error::UnequalSums { left, right } => {
                write!(f, "majorization needs equal sums, got {left} and {right}")
            }
            Error::NotGraphical => f.write_str("degree sequence is not graphical"),
            Error::NoConnectedRealization => {
                f.write_str("degree sequence has no connected realization")
            }
            Error::NoUniversalVertex => f.write_str("graph has no universal vertex"),
            Error::OutOfRange { n, m, min_m, max_m } => write!(
                f,
                "(n, m) = ({n}, {m}) out of range: need n >= 2 and {min_m} <= m <= {max_m}"
            ),
            Error::SizeBelowMinimum { m, b, min_m } => {
                write!(
                    f,
                    "m = {m} is below {min_m}, the least size with minimum degree {b}"
                )
            }
            Error::InvalidEdge { u, v, n } => {
                write!(f, "invalid edge {u} {v} for a graph on {n} vertices")
            }
            Error::DuplicateEdge { u, v } => write!(f, "duplicate edge {u} {v}"),
        }
    }
}

impl core::error::Error for Error {}
