use std::fmt;

use thiserror::Error;

use crate::overlay::Level;

pub type Result<T, E = Error> = std::result::Result<T, E>;

/// Which condition of a strip-construction request failed.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Constraint {
    /// At least one strip is required.
    NoStrips,
    /// Rows must satisfy `2 <= r_1 < r_2 < ...`.
    RowsNotIncreasing,
    /// The row must lie in `2..=length`.
    RowOutOfRange,
    /// The row must start a corner: `parts[r-1] > parts[r]`.
    NotACorner,
    /// `1 <= t <= parts[r-1] - parts[r]`.
    BoxesOutOfRange,
    /// `1 <= m <= r_next - r`, with `r_next = length + 1` for the last strip.
    SpanOutOfRange,
}

impl fmt::Display for Constraint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Constraint::NoStrips => "at least one strip is required",
            Constraint::RowsNotIncreasing => "strip rows must be strictly increasing",
            Constraint::RowOutOfRange => "strip row must lie between 2 and the partition length",
            Constraint::NotACorner => "the row above a strip row must be strictly longer",
            Constraint::BoxesOutOfRange => "box count must lie in 1..=parts[r-1]-parts[r]",
            Constraint::SpanOutOfRange => "span must lie in 1..=r_next-r",
        };
        f.write_str(s)
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("sequence is not weakly decreasing at index {index}")]
    NotWeaklyDecreasing { index: usize },
    #[error("negative part {value} at index {index}")]
    NegativePart { index: usize, value: i64 },
    #[error("inner partition is not contained in the outer one (row {row})")]
    NotContained { row: usize },
    #[error("{rows} rows requested but the partition has length {length}")]
    RowsTooSmall { rows: usize, length: usize },
    #[error("point values are not strictly decreasing at index {index}")]
    NotStrictlyDecreasing { index: usize },
    #[error("point set encodes a negative part at row {row}")]
    NegativeResultingPart { row: usize },
    #[error("operation requires a nonempty partition")]
    EmptyPartition,
    #[error("row {row} is outside 1..={length}")]
    RowOutOfRange { row: usize, length: usize },
    #[error("box number {boxes} is outside 1..={max} for row {row}")]
    BoxNumberOutOfRange { row: usize, boxes: u32, max: u32 },
    #[error("strip (t={boxes}, r={row}, m={span}) does not fit: {reason}")]
    StripDoesNotFit {
        boxes: u32,
        row: usize,
        span: usize,
        reason: &'static str,
    },
    #[error("strip {index}: {constraint}")]
    ConstraintViolated { index: usize, constraint: Constraint },

    #[error("tableau has {found} rows but the shape needs {expected}")]
    ShapeMismatch { expected: usize, found: usize },
    #[error("row {row} is not weakly increasing at position {pos}")]
    RowViolation { row: usize, pos: usize },
    #[error("column is not strictly increasing at row {row}, position {pos}")]
    ColumnViolation { row: usize, pos: usize },
    #[error("entry at row {row}, position {pos} is outside 1..={n}")]
    EntryOutOfRange { row: usize, pos: usize, n: u32 },
    #[error("alphabet size must be at least 1")]
    EmptyAlphabet,

    #[error("malformed path family: {0}")]
    MalformedFamily(String),

    #[error("families end on different levels ({white} and {black})")]
    LevelMismatch { white: u32, black: u32 },
    #[error("overlays need at least two levels, got {0}")]
    TooFewLevels(u32),
    #[error("odd number of coloured points ({0})")]
    OddColouredCount(usize),
    #[error("({x}, {level}) is not a coloured point")]
    NotColouredPoint { x: i64, level: u32 },
    #[error("trace from ({x},{level}) does not terminate")]
    TraceDidNotTerminate { x: i64, level: u32 },
    #[error("bicoloured path does not belong to this overlay")]
    PathNotInOverlay,
    #[error("selected bicoloured paths share an arc")]
    SharedArc,
    #[error("configuration has {inward} inward and {outward} outward points")]
    NotAdmissibleConfiguration { inward: usize, outward: usize },

    #[error("polynomials in {left} and {right} variables")]
    VariableCountMismatch { left: usize, right: usize },

    #[error("circular orientation is not alternating")]
    NotAlternating,
    #[error("the selected point set S is empty")]
    EmptyS,
    #[error("S contains {x} on the {level} level, which is not an inward coloured point")]
    SNotInward { x: i64, level: Level },
    #[error("render scale must be positive")]
    NonPositiveScale,
}
