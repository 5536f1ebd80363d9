//! Tableaux as families of nonintersecting lattice paths.
//!
//! Row `i` of a tableau of shape `outer/inner` becomes a path from
//! `(inner[i] - i + shift, 1)` to `(outer[i] - i + shift, n)` whose horizontal
//! steps sit at the heights given by the row's entries. Paths are numbered
//! from the right, so path 1 carries row 1.

use std::collections::HashSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::partition::{PointSet, SkewShape};
use crate::poly::Monomial;
use crate::tableau::{validate_tableau, Tableau};

/// A lattice point; `y` is the level, from 1 to `n`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Point {
    pub x: i64,
    pub y: u32,
}

impl Point {
    pub const fn new(x: i64, y: u32) -> Self {
        Point { x, y }
    }

    pub fn step(self, dir: Step) -> Point {
        match dir {
            Step::Right => Point::new(self.x + 1, self.y),
            Step::Up => Point::new(self.x, self.y + 1),
        }
    }

    pub fn step_back(self, dir: Step) -> Point {
        match dir {
            Step::Right => Point::new(self.x - 1, self.y),
            Step::Up => Point::new(self.x, self.y - 1),
        }
    }
}

impl fmt::Display for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.x, self.y)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Step {
    Right,
    Up,
}

/// A directed lattice arc, identified by its tail and direction.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Arc {
    pub tail: Point,
    pub dir: Step,
}

impl Arc {
    pub fn head(&self) -> Point {
        self.tail.step(self.dir)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct LatticePath {
    pub start: Point,
    pub steps: Vec<Step>,
}

impl LatticePath {
    pub fn end(&self) -> Point {
        self.steps.iter().fold(self.start, |p, &s| p.step(s))
    }

    /// All lattice points, start first.
    pub fn points(&self) -> impl Iterator<Item = Point> + '_ {
        std::iter::once(self.start).chain(self.steps.iter().scan(self.start, |p, &s| {
            *p = p.step(s);
            Some(*p)
        }))
    }

    pub fn arcs(&self) -> impl Iterator<Item = Arc> + '_ {
        self.points().zip(&self.steps).map(|(tail, &dir)| Arc { tail, dir })
    }

    /// Levels of the horizontal steps, in order.
    pub fn horizontal_heights(&self) -> Vec<u32> {
        self.arcs().filter(|a| a.dir == Step::Right).map(|a| a.tail.y).collect()
    }

    /// The path from `start` with horizontal steps at `heights`, closed off by
    /// vertical steps up to `top`.
    pub fn from_heights(start: Point, heights: &[u32], top: u32) -> Self {
        let mut steps = Vec::new();
        let mut y = start.y;
        for &h in heights {
            debug_assert!(h >= y);
            steps.extend(std::iter::repeat_n(Step::Up, (h - y) as usize));
            steps.push(Step::Right);
            y = h;
        }
        steps.extend(std::iter::repeat_n(Step::Up, top.saturating_sub(y) as usize));
        LatticePath { start, steps }
    }
}

/// True when no lattice point lies on two of the paths.
pub fn is_nonintersecting(paths: &[LatticePath]) -> bool {
    let mut seen = HashSet::new();
    paths.iter().all(|p| p.points().all(|pt| seen.insert(pt)))
}

/// A family of nonintersecting paths for a skew shape. It may carry more
/// paths than the outer partition has parts; the extra ones are vertical
/// (empty rows).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PathFamily {
    paths: Vec<LatticePath>,
    shape: SkewShape,
    shift: i64,
    n: u32,
}

impl PathFamily {
    pub fn paths(&self) -> &[LatticePath] {
        &self.paths
    }

    pub fn shape(&self) -> &SkewShape {
        &self.shape
    }

    pub fn shift(&self) -> i64 {
        self.shift
    }

    /// Top level, i.e. the alphabet size.
    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn rows(&self) -> usize {
        self.paths.len()
    }

    pub fn starts(&self) -> Vec<i64> {
        self.paths.iter().map(|p| p.start.x).collect()
    }

    pub fn ends(&self) -> Vec<i64> {
        self.paths.iter().map(|p| p.end().x).collect()
    }

    /// Product of `x_k` over all horizontal steps at level `k`.
    pub fn weight(&self) -> Monomial {
        let mut e = vec![0u32; self.n as usize];
        for p in &self.paths {
            for h in p.horizontal_heights() {
                e[h as usize - 1] += 1;
            }
        }
        Monomial::new(e)
    }

    /// Builds the family of `t` with an explicit row count.
    pub fn from_tableau(t: &Tableau, shift: i64, rows: usize) -> Result<Self> {
        let shape = t.shape().clone();
        if rows < shape.outer().len() {
            return Err(Error::RowsTooSmall { rows, length: shape.outer().len() });
        }
        let n = t.n();
        let paths = (1..=rows)
            .map(|i| {
                let start = Point::new(i64::from(shape.inner().row(i)) - i as i64 + shift, 1);
                let heights = t.rows().get(i - 1).map_or(&[][..], |r| r.as_slice());
                LatticePath::from_heights(start, heights, n)
            })
            .collect();
        Ok(PathFamily { paths, shape, shift, n })
    }

    /// Reads a family back from raw paths. With `shift = None` the shift is
    /// chosen so that the last inner part is zero.
    pub fn from_paths(paths: Vec<LatticePath>, n: u32, shift: Option<i64>) -> Result<Self> {
        let bad = |msg: String| Error::MalformedFamily(msg);
        for (i, p) in paths.iter().enumerate() {
            if p.start.y != 1 {
                return Err(bad(format!("path {} starts on level {}", i + 1, p.start.y)));
            }
            if p.end().y != n {
                return Err(bad(format!("path {} ends on level {} instead of {n}", i + 1, p.end().y)));
            }
        }
        let rows = paths.len();
        let shift = shift.unwrap_or_else(|| paths.last().map_or(0, |p| p.start.x + rows as i64));
        let starts = PointSet::new(paths.iter().map(|p| p.start.x).collect(), shift)
            .map_err(|_| bad("starting points are not strictly decreasing".into()))?;
        let ends = PointSet::new(paths.iter().map(|p| p.end().x).collect(), shift)
            .map_err(|_| bad("ending points are not strictly decreasing".into()))?;
        let inner = starts.to_partition().map_err(|e| bad(format!("inner shape: {e}")))?;
        let outer = ends.to_partition().map_err(|e| bad(format!("outer shape: {e}")))?;
        let shape = SkewShape::new(outer, inner).map_err(|e| bad(e.to_string()))?;
        let fam = PathFamily { paths, shape, shift, n };
        // Confirms the horizontal steps form a semistandard filling.
        paths_to_tableau(&fam)?;
        Ok(fam)
    }

    /// The same family with every path translated by `dx`.
    pub fn translated(&self, dx: i64) -> Self {
        let paths = self
            .paths
            .iter()
            .map(|p| LatticePath { start: Point::new(p.start.x + dx, p.start.y), steps: p.steps.clone() })
            .collect();
        PathFamily { paths, shape: self.shape.clone(), shift: self.shift + dx, n: self.n }
    }
}

pub fn tableau_to_paths(t: &Tableau, shift: i64) -> PathFamily {
    PathFamily::from_tableau(t, shift, t.shape().outer().len()).expect("row count matches the shape")
}

/// Inverse of [`tableau_to_paths`]: entry `(i, j)` is the height of the
/// `j`-th horizontal step of path `i`.
pub fn paths_to_tableau(pf: &PathFamily) -> Result<Tableau> {
    let bad = |msg: String| Error::MalformedFamily(msg);
    let shape = &pf.shape;
    if pf.paths.len() < shape.outer().len() {
        return Err(bad("fewer paths than rows".into()));
    }
    let mut rows = Vec::with_capacity(shape.outer().len());
    for (i, p) in pf.paths.iter().enumerate() {
        let row = i + 1;
        let start = i64::from(shape.inner().row(row)) - row as i64 + pf.shift;
        let end = i64::from(shape.outer().row(row)) - row as i64 + pf.shift;
        if p.start != Point::new(start, 1) || p.end() != Point::new(end, pf.n) {
            return Err(bad(format!("path {row} has endpoints inconsistent with {shape}")));
        }
        let heights = p.horizontal_heights();
        if row <= shape.outer().len() {
            rows.push(heights);
        }
    }
    validate_tableau(shape.clone(), rows, pf.n).map_err(|e| bad(e.to_string()))
}

/// Starting points (level 1) and ending points (level `n`) of the paths for
/// `shape` with `rows` rows and the given shift.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Endpoints {
    pub starts: PointSet,
    pub ends: PointSet,
    #[serde(rename = "N")]
    pub n: u32,
}

pub fn endpoints(shape: &SkewShape, rows: usize, shift: i64, n: u32) -> Result<Endpoints> {
    Ok(Endpoints {
        starts: shape.inner().to_points(rows, shift)?,
        ends: shape.outer().to_points(rows, shift)?,
        n,
    })
}

#[derive(Serialize, Deserialize)]
struct PathFamilyJson {
    shape: SkewShape,
    shift: i64,
    #[serde(rename = "N")]
    n: u32,
    tableau: Vec<Vec<u32>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    rows: Option<usize>,
}

impl Serialize for PathFamily {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let t = paths_to_tableau(self).map_err(serde::ser::Error::custom)?;
        let rows = (self.rows() != self.shape.outer().len()).then_some(self.rows());
        PathFamilyJson { shape: self.shape.clone(), shift: self.shift, n: self.n, tableau: t.rows().to_vec(), rows }
            .serialize(s)
    }
}

impl<'de> Deserialize<'de> for PathFamily {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        use serde::de::Error as _;
        let raw = PathFamilyJson::deserialize(d)?;
        let t = validate_tableau(raw.shape, raw.tableau, raw.n).map_err(D::Error::custom)?;
        let rows = raw.rows.unwrap_or(t.shape().outer().len());
        PathFamily::from_tableau(&t, raw.shift, rows).map_err(D::Error::custom)
    }
}
