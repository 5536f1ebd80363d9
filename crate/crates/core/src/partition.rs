//! Partitions, skew shapes and their point-set encoding.
//!
//! A partition `p` with `r` rows and shift `t` is encoded by the strictly
//! decreasing integers `p[i] - i + t` (rows counted from 1). Every
//! border-strip operation in this module is defined by inserting or removing
//! points of that set and reading the result back as a partition.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Constraint, Error, Result};

/// A weakly decreasing sequence of positive integers, stored without
/// trailing zeros.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<i64>", into = "Vec<u32>")]
pub struct Partition(Vec<u32>);

impl Partition {
    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    /// Validates `seq` and drops trailing zeros.
    pub fn new<I>(seq: I) -> Result<Self>
    where
        I: IntoIterator,
        I::Item: Into<i64>,
    {
        let mut parts = Vec::new();
        let mut prev = i64::MAX;
        for (index, value) in seq.into_iter().enumerate() {
            let value = value.into();
            if value < 0 {
                return Err(Error::NegativePart { index, value });
            }
            if value > prev {
                return Err(Error::NotWeaklyDecreasing { index });
            }
            prev = value;
            let value = u32::try_from(value).map_err(|_| Error::NegativePart { index, value })?;
            parts.push(value);
        }
        while parts.last() == Some(&0) {
            parts.pop();
        }
        Ok(Partition(parts))
    }

    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    /// Number of nonzero parts.
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Sum of the parts.
    pub fn size(&self) -> u64 {
        self.0.iter().map(|&p| u64::from(p)).sum()
    }

    /// Part in 1-indexed row `row`; zero past the end (and for `row == 0`,
    /// which never names a real row).
    pub fn row(&self, row: usize) -> u32 {
        if row == 0 {
            return 0;
        }
        self.0.get(row - 1).copied().unwrap_or(0)
    }

    /// `true` when every part of `self` is at most the matching part of `other`.
    pub fn is_contained_in(&self, other: &Partition) -> bool {
        self.len() <= other.len() && self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    pub fn to_points(&self, rows: usize, shift: i64) -> Result<PointSet> {
        to_points(self, rows, shift)
    }
}

impl TryFrom<Vec<i64>> for Partition {
    type Error = Error;

    fn try_from(v: Vec<i64>) -> Result<Self> {
        Partition::new(v)
    }
}

impl From<Partition> for Vec<u32> {
    fn from(p: Partition) -> Self {
        p.0
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, p) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}

pub fn validate_partition<I>(seq: I) -> Result<Partition>
where
    I: IntoIterator,
    I::Item: Into<i64>,
{
    Partition::new(seq)
}

/// The skew shape `outer / inner`.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(try_from = "RawSkewShape")]
pub struct SkewShape {
    outer: Partition,
    inner: Partition,
}

#[derive(Deserialize)]
struct RawSkewShape {
    outer: Partition,
    #[serde(default)]
    inner: Partition,
}

impl TryFrom<RawSkewShape> for SkewShape {
    type Error = Error;

    fn try_from(raw: RawSkewShape) -> Result<Self> {
        SkewShape::new(raw.outer, raw.inner)
    }
}

impl SkewShape {
    pub fn new(outer: Partition, inner: Partition) -> Result<Self> {
        if let Some(row) = (1..=inner.len()).find(|&i| inner.row(i) > outer.row(i)) {
            return Err(Error::NotContained { row });
        }
        Ok(SkewShape { outer, inner })
    }

    pub fn straight(outer: Partition) -> Self {
        SkewShape { outer, inner: Partition::empty() }
    }

    pub fn outer(&self) -> &Partition {
        &self.outer
    }

    pub fn inner(&self) -> &Partition {
        &self.inner
    }

    /// The same cells translated so that the first nonempty row is row 1 and
    /// the leftmost cell sits in column 1. The skew Schur function depends
    /// only on this form.
    pub fn trimmed(&self) -> SkewShape {
        let busy: Vec<usize> = (1..=self.outer.len()).filter(|&i| self.row_len(i) > 0).collect();
        let (Some(&first), Some(&last)) = (busy.first(), busy.last()) else {
            return SkewShape::default();
        };
        let cut = self.inner.row(last);
        let take = |p: &Partition| Partition((first..=last).map(|i| p.row(i) - cut).filter(|&v| v > 0).collect());
        SkewShape { outer: take(&self.outer), inner: take(&self.inner) }
    }

    /// Number of cells.
    pub fn size(&self) -> u64 {
        self.outer.size() - self.inner.size()
    }

    /// Length of row `row` (1-indexed).
    pub fn row_len(&self, row: usize) -> u32 {
        self.outer.row(row) - self.inner.row(row)
    }

    /// Height of the tallest column; an alphabet smaller than this admits no
    /// semistandard filling.
    pub fn max_column_height(&self) -> usize {
        let width = self.outer.row(1);
        (0..width)
            .map(|col| {
                (1..=self.outer.len())
                    .filter(|&r| self.inner.row(r) <= col && col < self.outer.row(r))
                    .count()
            })
            .max()
            .unwrap_or(0)
    }
}

impl fmt::Display for SkewShape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.outer, self.inner)
    }
}

/// Strictly decreasing integers `p[i] - i + shift`, one per row.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct PointSet {
    values: Vec<i64>,
    shift: i64,
}

impl PointSet {
    pub fn new(values: Vec<i64>, shift: i64) -> Result<Self> {
        if let Some(i) = values.windows(2).position(|w| w[0] <= w[1]) {
            return Err(Error::NotStrictlyDecreasing { index: i + 1 });
        }
        Ok(PointSet { values, shift })
    }

    pub fn values(&self) -> &[i64] {
        &self.values
    }

    pub fn shift(&self) -> i64 {
        self.shift
    }

    pub fn rows(&self) -> usize {
        self.values.len()
    }

    pub fn contains(&self, value: i64) -> bool {
        self.values.binary_search_by(|v| value.cmp(v)).is_ok()
    }

    /// Adds `value`, keeping the order; `None` when it is already present.
    pub fn insert(&self, value: i64) -> Option<PointSet> {
        match self.values.binary_search_by(|v| value.cmp(v)) {
            Ok(_) => None,
            Err(pos) => {
                let mut values = self.values.clone();
                values.insert(pos, value);
                Some(PointSet { values, shift: self.shift })
            }
        }
    }

    /// Drops `value`; `None` when it is absent.
    pub fn remove(&self, value: i64) -> Option<PointSet> {
        let pos = self.values.binary_search_by(|v| value.cmp(v)).ok()?;
        let mut values = self.values.clone();
        values.remove(pos);
        Some(PointSet { values, shift: self.shift })
    }

    pub fn to_partition(&self) -> Result<Partition> {
        from_points(self)
    }
}

pub fn to_points(p: &Partition, rows: usize, shift: i64) -> Result<PointSet> {
    if rows < p.len() {
        return Err(Error::RowsTooSmall { rows, length: p.len() });
    }
    let values = (1..=rows).map(|i| i64::from(p.row(i)) - i as i64 + shift).collect();
    Ok(PointSet { values, shift })
}

pub fn from_points(ps: &PointSet) -> Result<Partition> {
    let mut parts = Vec::with_capacity(ps.rows());
    for (i, &v) in ps.values.iter().enumerate() {
        let part = v + (i as i64 + 1) - ps.shift;
        if part < 0 {
            return Err(Error::NegativeResultingPart { row: i + 1 });
        }
        parts.push(part);
    }
    Partition::new(parts)
}

/// A partial border strip: `boxes` cells in row `row`, spanning `span` rows.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct StripSpec {
    #[serde(rename = "t")]
    pub boxes: u32,
    #[serde(rename = "r")]
    pub row: usize,
    #[serde(rename = "m")]
    pub span: usize,
}

impl StripSpec {
    pub fn new(boxes: u32, row: usize, span: usize) -> Self {
        StripSpec { boxes, row, span }
    }
}

/// Removes the complete border strip: drops the largest point.
pub fn peel_complete(p: &Partition) -> Result<Partition> {
    if p.is_empty() {
        return Err(Error::EmptyPartition);
    }
    peel_down(p, 1)
}

/// Down-peeling of the partial border strip starting at row `row`: drops the
/// point `p[row] - row`.
pub fn peel_down(p: &Partition, row: usize) -> Result<Partition> {
    if row == 0 || row > p.len() {
        return Err(Error::RowOutOfRange { row, length: p.len() });
    }
    let points = p.to_points(p.len(), 0)?;
    let value = i64::from(p.row(row)) - row as i64;
    points
        .remove(value)
        .expect("point of an encoded row is present")
        .to_partition()
}

/// Up-peeling: drops the largest point and inserts `p[row+1] - (row+1) + boxes`.
/// Boxes are numbered left to right among the `p[row] - p[row+1]` candidates.
pub fn peel_up(p: &Partition, row: usize, boxes: u32) -> Result<Partition> {
    if row == 0 || row > p.len() {
        return Err(Error::RowOutOfRange { row, length: p.len() });
    }
    let max = p.row(row) - p.row(row + 1);
    if boxes == 0 || boxes > max {
        return Err(Error::BoxNumberOutOfRange { row, boxes, max });
    }
    let rows = p.len().max(row + 1);
    let points = p.to_points(rows, 0)?;
    let largest = points.values()[0];
    let inserted = i64::from(p.row(row + 1)) - (row as i64 + 1) + i64::from(boxes);
    points
        .remove(largest)
        .and_then(|ps| ps.insert(inserted))
        .expect("inserted point lies strictly between two neighbours")
        .to_partition()
}

/// Adds the partial border strip `strip`: inserts `p[r] - r + t` and removes
/// `p[r+m-1] - (r+m-1)`.
pub fn add_strip(p: &Partition, strip: StripSpec) -> Result<Partition> {
    let StripSpec { boxes, row, span } = strip;
    let unfit = |reason| Error::StripDoesNotFit { boxes, row, span, reason };
    if row < 2 || row > p.len() {
        return Err(unfit("row must lie in 2..=length"));
    }
    if boxes == 0 || boxes > p.row(row - 1) - p.row(row) {
        return Err(unfit("box count must lie in 1..=parts[r-1]-parts[r]"));
    }
    if span == 0 || row + span - 1 > p.len() {
        return Err(unfit("span must keep the strip inside the partition"));
    }
    let points = p.to_points(p.len(), 0)?;
    let inserted = i64::from(p.row(row)) - row as i64 + i64::from(boxes);
    let last = row + span - 1;
    let removed = i64::from(p.row(last)) - last as i64;
    points
        .insert(inserted)
        .and_then(|ps| ps.remove(removed))
        .expect("strip points are consistent")
        .to_partition()
}

/// Checks the strip constraints against `p` and reports the first failure.
pub fn check_strips(p: &Partition, strips: &[StripSpec]) -> Result<()> {
    let violated = |index, constraint| Err(Error::ConstraintViolated { index, constraint });
    if let Some(index) = (1..strips.len()).find(|&i| strips[i].row <= strips[i - 1].row) {
        return violated(index, Constraint::RowsNotIncreasing);
    }
    for (index, s) in strips.iter().enumerate() {
        if s.row < 2 || s.row > p.len() {
            return violated(index, Constraint::RowOutOfRange);
        }
        let gap = p.row(s.row - 1) - p.row(s.row);
        if gap == 0 {
            return violated(index, Constraint::NotACorner);
        }
        if s.boxes == 0 || s.boxes > gap {
            return violated(index, Constraint::BoxesOutOfRange);
        }
        let next = strips.get(index + 1).map_or(p.len() + 1, |n| n.row);
        if s.span == 0 || s.span > next - s.row {
            return violated(index, Constraint::SpanOutOfRange);
        }
    }
    Ok(())
}

/// Applies `strips` in order, after validating them against `p`.
pub fn build_nu(p: &Partition, strips: &[StripSpec]) -> Result<Partition> {
    check_strips(p, strips)?;
    strips.iter().try_fold(p.clone(), |acc, &s| add_strip(&acc, s))
}

/// All partitions of `size`, in reverse lexicographic order.
pub fn partitions(size: u32) -> Vec<Partition> {
    fn go(rest: u32, max: u32, prefix: &mut Vec<u32>, out: &mut Vec<Partition>) {
        if rest == 0 {
            out.push(Partition(prefix.clone()));
            return;
        }
        for part in (1..=rest.min(max)).rev() {
            prefix.push(part);
            go(rest - part, part, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    go(size, size, &mut Vec::new(), &mut out);
    out
}

/// Partitions contained in `p`, the empty one included.
pub fn subpartitions(p: &Partition) -> Vec<Partition> {
    fn go(p: &Partition, row: usize, max: u32, prefix: &mut Vec<u32>, out: &mut Vec<Partition>) {
        out.push(Partition(prefix.clone()));
        if row > p.len() {
            return;
        }
        for part in 1..=max.min(p.row(row)) {
            prefix.push(part);
            go(p, row + 1, part, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    go(p, 1, p.row(1), &mut Vec::new(), &mut out);
    out
}

/// Every skew shape whose outer partition has at most `max_size` cells.
pub fn skew_shapes(max_size: u32) -> Vec<SkewShape> {
    (0..=max_size)
        .flat_map(partitions)
        .flat_map(|outer| {
            subpartitions(&outer)
                .into_iter()
                .map(move |inner| SkewShape { outer: outer.clone(), inner })
        })
        .collect()
}
