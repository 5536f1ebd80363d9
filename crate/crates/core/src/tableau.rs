//! Semistandard skew Young tableaux.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::partition::SkewShape;
use crate::poly::Monomial;

/// An `n`-semistandard filling of a skew shape. `rows[i]` holds the entries
/// of row `i + 1`, left to right.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "RawTableau")]
pub struct Tableau {
    shape: SkewShape,
    rows: Vec<Vec<u32>>,
    #[serde(rename = "N")]
    n: u32,
}

#[derive(Deserialize)]
struct RawTableau {
    shape: SkewShape,
    rows: Vec<Vec<u32>>,
    #[serde(rename = "N")]
    n: u32,
}

impl TryFrom<RawTableau> for Tableau {
    type Error = Error;

    fn try_from(raw: RawTableau) -> Result<Self> {
        validate_tableau(raw.shape, raw.rows, raw.n)
    }
}

impl Tableau {
    pub fn shape(&self) -> &SkewShape {
        &self.shape
    }

    pub fn rows(&self) -> &[Vec<u32>] {
        &self.rows
    }

    /// Size of the alphabet `{1..n}`.
    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn weight(&self) -> Monomial {
        weight(self)
    }

    /// Entry in 1-indexed row `row` and absolute 0-indexed column `col`.
    pub fn entry_at(&self, row: usize, col: u32) -> Option<u32> {
        let start = self.shape.inner().row(row);
        let r = self.rows.get(row.checked_sub(1)?)?;
        r.get(col.checked_sub(start)? as usize).copied()
    }
}

/// Checks dimensions, the entry range and both monotonicity conditions.
/// Violations are reported with 0-indexed row and in-row position.
pub fn validate_tableau(shape: SkewShape, rows: Vec<Vec<u32>>, n: u32) -> Result<Tableau> {
    if n == 0 {
        return Err(Error::EmptyAlphabet);
    }
    let len = shape.outer().len();
    if rows.len() != len {
        return Err(Error::ShapeMismatch { expected: len, found: rows.len() });
    }
    for (i, row) in rows.iter().enumerate() {
        let expected = shape.row_len(i + 1) as usize;
        if row.len() != expected {
            return Err(Error::ShapeMismatch { expected, found: row.len() });
        }
    }
    for (i, row) in rows.iter().enumerate() {
        for (j, &e) in row.iter().enumerate() {
            if e == 0 || e > n {
                return Err(Error::EntryOutOfRange { row: i, pos: j, n });
            }
            if j > 0 && row[j - 1] > e {
                return Err(Error::RowViolation { row: i, pos: j });
            }
        }
    }
    let t = Tableau { shape, rows, n };
    for (i, row) in t.rows.iter().enumerate().skip(1) {
        let start = t.shape.inner().row(i + 1);
        for (j, &e) in row.iter().enumerate() {
            if let Some(above) = t.entry_at(i, start + j as u32) {
                if above >= e {
                    return Err(Error::ColumnViolation { row: i, pos: j });
                }
            }
        }
    }
    Ok(t)
}

/// Multiplicity of each entry `1..=n`.
pub fn weight(t: &Tableau) -> Monomial {
    let mut exps = vec![0u32; t.n as usize];
    for &e in t.rows.iter().flatten() {
        exps[e as usize - 1] += 1;
    }
    Monomial::new(exps)
}

#[derive(Clone, Debug)]
struct Cell {
    row: usize,
    /// Flat index of the cell to the left in the same row.
    left: Option<usize>,
    /// Flat index of the cell directly above.
    above: Option<usize>,
    /// Largest admissible entry: `n` minus the number of cells below.
    upper: u32,
}

/// Row-major lexicographic enumeration of all `n`-semistandard tableaux of a
/// skew shape.
///
/// Cells are filled in row-major order with the smallest value allowed by the
/// cell to the left and the cell above; the next tableau is obtained by
/// bumping the last cell that is below its column bound and refilling
/// everything after it minimally. Column bounds guarantee that the refill
/// never gets stuck.
#[derive(Clone, Debug)]
pub struct SsytIter {
    shape: SkewShape,
    n: u32,
    cells: Vec<Cell>,
    values: Vec<u32>,
    state: IterState,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum IterState {
    Fresh,
    Running,
    Done,
}

pub fn enumerate_ssyt(shape: &SkewShape, n: u32) -> SsytIter {
    let len = shape.outer().len();
    let mut cells = Vec::new();
    let mut index_of = std::collections::HashMap::new();
    for row in 1..=len {
        let start = shape.inner().row(row);
        for col in start..shape.outer().row(row) {
            let below = (row + 1..=len)
                .take_while(|&r| shape.inner().row(r) <= col && col < shape.outer().row(r))
                .count() as u32;
            let left = (col > start).then(|| cells.len() - 1);
            let above = index_of.get(&(row - 1, col)).copied();
            index_of.insert((row, col), cells.len());
            cells.push(Cell { row, left, above, upper: n.saturating_sub(below) });
        }
    }
    let feasible = n >= 1 && shape.max_column_height() <= n as usize;
    SsytIter {
        shape: shape.clone(),
        n,
        values: vec![0; cells.len()],
        cells,
        state: if feasible { IterState::Fresh } else { IterState::Done },
    }
}

impl SsytIter {
    fn lower(&self, k: usize) -> u32 {
        let cell = &self.cells[k];
        let from_left = cell.left.map_or(1, |l| self.values[l]);
        let from_above = cell.above.map_or(1, |a| self.values[a] + 1);
        from_left.max(from_above)
    }

    fn fill_from(&mut self, start: usize) {
        for k in start..self.cells.len() {
            self.values[k] = self.lower(k);
            debug_assert!(self.values[k] <= self.cells[k].upper);
        }
    }

    fn current(&self) -> Tableau {
        let mut rows = vec![Vec::new(); self.shape.outer().len()];
        for (cell, &v) in self.cells.iter().zip(&self.values) {
            rows[cell.row - 1].push(v);
        }
        Tableau { shape: self.shape.clone(), rows, n: self.n }
    }
}

impl Iterator for SsytIter {
    type Item = Tableau;

    fn next(&mut self) -> Option<Tableau> {
        match self.state {
            IterState::Done => return None,
            IterState::Fresh => {
                self.fill_from(0);
                self.state = IterState::Running;
                return Some(self.current());
            }
            IterState::Running => {}
        }
        let bump = (0..self.cells.len()).rev().find(|&k| self.values[k] < self.cells[k].upper);
        match bump {
            Some(k) => {
                self.values[k] += 1;
                self.fill_from(k + 1);
                Some(self.current())
            }
            None => {
                self.state = IterState::Done;
                None
            }
        }
    }
}

/// Draws one semistandard tableau by filling cells in row-major order with a
/// value chosen uniformly between the cell's lower and upper bound. Not a
/// uniform sample over tableaux. Returns `None` when the shape has none.
pub fn random_ssyt<R: rand::Rng + ?Sized>(shape: &SkewShape, n: u32, rng: &mut R) -> Option<Tableau> {
    let mut it = enumerate_ssyt(shape, n);
    if it.state == IterState::Done {
        return None;
    }
    for k in 0..it.cells.len() {
        let lo = it.lower(k);
        it.values[k] = rng.random_range(lo..=it.cells[k].upper);
    }
    Some(it.current())
}
