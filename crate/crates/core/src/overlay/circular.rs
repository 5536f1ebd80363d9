//! Coloured boundary points in circular order, their orientations and the
//! non-crossing matchings between them.

use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::partition::{from_points, PointSet, SkewShape};
use crate::paths::Endpoints;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Colour {
    White,
    Black,
}

impl Colour {
    pub fn other(self) -> Colour {
        match self {
            Colour::White => Colour::Black,
            Colour::Black => Colour::White,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Orientation {
    Inward,
    Outward,
}

/// Bottom is level 1, top is level `n`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Level {
    Top,
    Bottom,
}

impl fmt::Display for Level {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Level::Top => "top",
            Level::Bottom => "bottom",
        })
    }
}

impl Level {
    pub fn y(self, n: u32) -> u32 {
        match self {
            Level::Top => n,
            Level::Bottom => 1,
        }
    }
}

/// White paths run downwards and black paths upwards, so a white ending
/// point and a black starting point point into the picture.
pub fn orientation(colour: Colour, level: Level) -> Orientation {
    match (colour, level) {
        (Colour::White, Level::Top) | (Colour::Black, Level::Bottom) => Orientation::Inward,
        (Colour::Black, Level::Top) | (Colour::White, Level::Bottom) => Orientation::Outward,
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct ColouredPoint {
    pub x: i64,
    pub level: Level,
    pub colour: Colour,
    pub orientation: Orientation,
    /// Position in circular order, from 1.
    pub index: usize,
}

impl fmt::Display for ColouredPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let lvl = match self.level {
            Level::Top => "N",
            Level::Bottom => "1",
        };
        write!(f, "#{} ({},{}) {:?} {:?}", self.index, self.x, lvl, self.colour, self.orientation)
    }
}

/// Doubled points and the coloured points in circular order: the top level
/// from right to left, then the bottom level from left to right.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct CircularConfiguration {
    /// Doubled points on the top level, decreasing.
    pub doubled_top: Vec<i64>,
    /// Doubled points on the bottom level, decreasing.
    pub doubled_bottom: Vec<i64>,
    pub points: Vec<ColouredPoint>,
}

impl CircularConfiguration {
    /// Builds the configuration from the two endpoint sets. Positions are
    /// taken as given; the shifts of the point sets are ignored.
    pub fn from_endpoints(white: &Endpoints, black: &Endpoints) -> Result<Self> {
        if white.n != black.n {
            return Err(Error::LevelMismatch { white: white.n, black: black.n });
        }
        let split = |w: &PointSet, b: &PointSet| {
            let w: BTreeSet<i64> = w.values().iter().copied().collect();
            let b: BTreeSet<i64> = b.values().iter().copied().collect();
            let mut doubled: Vec<i64> = w.intersection(&b).copied().collect();
            doubled.reverse();
            let coloured: Vec<(i64, Colour)> = w
                .difference(&b)
                .map(|&x| (x, Colour::White))
                .chain(b.difference(&w).map(|&x| (x, Colour::Black)))
                .collect();
            (doubled, coloured)
        };
        let (doubled_top, mut top) = split(&white.ends, &black.ends);
        let (doubled_bottom, mut bottom) = split(&white.starts, &black.starts);
        top.sort_by_key(|p| std::cmp::Reverse(p.0));
        bottom.sort_by_key(|p| p.0);
        let points = top
            .into_iter()
            .map(|(x, c)| (x, Level::Top, c))
            .chain(bottom.into_iter().map(|(x, c)| (x, Level::Bottom, c)))
            .enumerate()
            .map(|(i, (x, level, colour))| ColouredPoint {
                x,
                level,
                colour,
                orientation: orientation(colour, level),
                index: i + 1,
            })
            .collect::<Vec<_>>();
        if points.len() % 2 == 1 {
            return Err(Error::OddColouredCount(points.len()));
        }
        Ok(CircularConfiguration { doubled_top, doubled_bottom, points })
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn find(&self, x: i64, level: Level) -> Option<&ColouredPoint> {
        self.points.iter().find(|p| p.x == x && p.level == level)
    }

    pub fn count(&self, o: Orientation) -> usize {
        self.points.iter().filter(|p| p.orientation == o).count()
    }

    pub fn is_admissible(&self) -> bool {
        self.count(Orientation::Inward) == self.count(Orientation::Outward)
    }

    /// Orientations change at every step around the circle.
    pub fn is_alternating(&self) -> bool {
        let m = self.points.len();
        m.is_multiple_of(2) && (0..m).all(|i| self.points[i].orientation != self.points[(i + 1) % m].orientation)
    }

    /// Flips colour and orientation of the points with the given circular
    /// indices.
    pub fn reoriented(&self, indices: &BTreeSet<usize>) -> Self {
        let mut out = self.clone();
        for p in out.points.iter_mut().filter(|p| indices.contains(&p.index)) {
            p.colour = p.colour.other();
            p.orientation = orientation(p.colour, p.level);
        }
        out
    }
}

/// A perfect matching on circular indices; each edge is stored as `(i, j)`
/// with `i < j`, edges sorted.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Matching {
    pub edges: Vec<(usize, usize)>,
}

impl Matching {
    pub fn new(mut edges: Vec<(usize, usize)>) -> Self {
        for e in &mut edges {
            if e.0 > e.1 {
                *e = (e.1, e.0);
            }
        }
        edges.sort_unstable();
        Matching { edges }
    }

    pub fn partner(&self, index: usize) -> Option<usize> {
        self.edges.iter().find_map(|&(a, b)| match index {
            i if i == a => Some(b),
            i if i == b => Some(a),
            _ => None,
        })
    }

    pub fn is_noncrossing(&self) -> bool {
        self.edges.iter().enumerate().all(|(k, &(a, b))| {
            self.edges[k + 1..].iter().all(|&(c, d)| !(a < c && c < b && b < d || c < a && a < d && d < b))
        })
    }

    /// Perfect, non-crossing and joining opposite orientations.
    pub fn is_admissible(&self, c: &CircularConfiguration) -> bool {
        let mut seen = BTreeSet::new();
        let covered = self.edges.iter().all(|&(a, b)| seen.insert(a) && seen.insert(b));
        let orient = |i: usize| c.points.get(i.wrapping_sub(1)).map(|p| p.orientation);
        covered
            && seen.len() == c.len()
            && seen.iter().all(|&i| (1..=c.len()).contains(&i))
            && self.edges.iter().all(|&(a, b)| orient(a) != orient(b))
            && self.is_noncrossing()
    }
}

/// All admissible matchings of `c`, in lexicographic order of their sorted
/// edge lists.
pub fn enumerate_admissible_matchings(c: &CircularConfiguration) -> Result<Vec<Matching>> {
    let inward = c.count(Orientation::Inward);
    let outward = c.count(Orientation::Outward);
    if inward != outward {
        return Err(Error::NotAdmissibleConfiguration { inward, outward });
    }
    let orient: Vec<Orientation> = c.points.iter().map(|p| p.orientation).collect();
    Ok(matchings_between(&orient, 0, orient.len())
        .into_iter()
        .map(|edges| Matching { edges: edges.into_iter().map(|(a, b)| (a + 1, b + 1)).collect() })
        .collect())
}

/// Matchings of the half-open range `lo..hi` (0-indexed), edges in sorted order.
fn matchings_between(orient: &[Orientation], lo: usize, hi: usize) -> Vec<Vec<(usize, usize)>> {
    if lo >= hi {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for j in (lo + 1..hi).step_by(2) {
        if orient[j] == orient[lo] {
            continue;
        }
        let inner = matchings_between(orient, lo + 1, j);
        if inner.is_empty() {
            continue;
        }
        let outer = matchings_between(orient, j + 1, hi);
        for a in &inner {
            for b in &outer {
                let mut edges = Vec::with_capacity(1 + a.len() + b.len());
                edges.push((lo, j));
                edges.extend_from_slice(a);
                edges.extend_from_slice(b);
                out.push(edges);
            }
        }
    }
    out
}

/// A skew shape together with the row count and shift of its path family.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct EmbeddedShape {
    pub shape: SkewShape,
    pub shift: i64,
    pub rows: usize,
}

impl EmbeddedShape {
    pub fn new(shape: SkewShape, shift: i64, rows: usize) -> Self {
        EmbeddedShape { shape, shift, rows }
    }

    pub fn endpoints(&self, n: u32) -> Result<Endpoints> {
        crate::paths::endpoints(&self.shape, self.rows, self.shift, n)
    }

    /// Reads a family's shape off its point sets, shifted so that the last
    /// inner part is zero. `None` when the points describe no skew shape.
    pub fn from_point_sets(starts: &[i64], ends: &[i64]) -> Option<Self> {
        if starts.len() != ends.len() {
            return None;
        }
        let rows = starts.len();
        let shift = starts.last().map_or(0, |&b| b + rows as i64);
        let inner = from_points(&PointSet::new(starts.to_vec(), shift).ok()?).ok()?;
        let outer = from_points(&PointSet::new(ends.to_vec(), shift).ok()?).ok()?;
        let shape = SkewShape::new(outer, inner).ok()?;
        Some(EmbeddedShape { shape, shift, rows })
    }
}

impl fmt::Display for EmbeddedShape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} (shift {}, {} rows)", self.shape, self.shift, self.rows)
    }
}

/// Raw starting and ending points of one colour, both decreasing.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct RawPoints {
    pub starts: Vec<i64>,
    pub ends: Vec<i64>,
}

/// The shape pair encoded by a configuration, or zero when one of the
/// colours encodes no skew shape.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ConfigShapes {
    Pair { white: EmbeddedShape, black: EmbeddedShape },
    Zero { white: RawPoints, black: RawPoints },
}

impl ConfigShapes {
    pub fn is_zero(&self) -> bool {
        matches!(self, ConfigShapes::Zero { .. })
    }
}

/// Reconstructs both colours' point sets from the doubled points and the
/// colours of the coloured points.
pub fn configuration_to_shapes(c: &CircularConfiguration) -> ConfigShapes {
    let collect = |colour: Colour| {
        let pick = |level: Level, doubled: &[i64]| {
            let mut v: Vec<i64> = doubled
                .iter()
                .copied()
                .chain(c.points.iter().filter(|p| p.colour == colour && p.level == level).map(|p| p.x))
                .collect();
            v.sort_unstable_by(|a, b| b.cmp(a));
            v
        };
        RawPoints { starts: pick(Level::Bottom, &c.doubled_bottom), ends: pick(Level::Top, &c.doubled_top) }
    };
    let white = collect(Colour::White);
    let black = collect(Colour::Black);
    let embed = |r: &RawPoints| EmbeddedShape::from_point_sets(&r.starts, &r.ends);
    match (embed(&white), embed(&black)) {
        (Some(w), Some(b)) => ConfigShapes::Pair { white: w, black: b },
        _ => ConfigShapes::Zero { white, black },
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partition::Partition;

    fn cfg(orients: &[Orientation]) -> CircularConfiguration {
        // Points along the top only; colours follow from the orientation.
        let points = orients
            .iter()
            .enumerate()
            .map(|(i, &o)| ColouredPoint {
                x: -(i as i64),
                level: Level::Top,
                colour: if o == Orientation::Inward { Colour::White } else { Colour::Black },
                orientation: o,
                index: i + 1,
            })
            .collect();
        CircularConfiguration { doubled_top: vec![], doubled_bottom: vec![], points }
    }

    use Orientation::{Inward as I, Outward as O};

    /// Every perfect matching, for filtering.
    fn all_perfect(m: usize) -> Vec<Matching> {
        fn go(free: Vec<usize>) -> Vec<Vec<(usize, usize)>> {
            if free.is_empty() {
                return vec![vec![]];
            }
            let a = free[0];
            let mut out = Vec::new();
            for k in 1..free.len() {
                let rest: Vec<usize> = free.iter().enumerate().filter(|&(i, _)| i != 0 && i != k).map(|(_, &v)| v).collect();
                for mut e in go(rest) {
                    e.push((a, free[k]));
                    out.push(e);
                }
            }
            out
        }
        go((1..=m).collect()).into_iter().map(Matching::new).collect()
    }

    #[test]
    fn small_counts() {
        assert_eq!(enumerate_admissible_matchings(&cfg(&[I, O])).unwrap().len(), 1);
        assert_eq!(enumerate_admissible_matchings(&cfg(&[I, O, I, O, I, O])).unwrap().len(), 5);
        let m = enumerate_admissible_matchings(&cfg(&[I, I, O, O])).unwrap();
        assert_eq!(m, vec![Matching::new(vec![(1, 4), (2, 3)])]);
        assert!(matches!(
            enumerate_admissible_matchings(&cfg(&[I, I])),
            Err(Error::NotAdmissibleConfiguration { inward: 2, outward: 0 })
        ));
        assert_eq!(enumerate_admissible_matchings(&cfg(&[])).unwrap(), vec![Matching::default()]);
    }

    #[test]
    fn matches_brute_force_filter() {
        let patterns: Vec<Vec<Orientation>> = (0u32..256)
            .map(|bits| (0..8).map(|i| if bits >> i & 1 == 1 { I } else { O }).collect())
            .collect();
        let catalan = [1, 1, 2, 5, 14];
        for p in patterns {
            let c = cfg(&p);
            let got = match enumerate_admissible_matchings(&c) {
                Ok(v) => v,
                Err(_) => {
                    assert!(!c.is_admissible());
                    continue;
                }
            };
            let want: Vec<Matching> = {
                let mut v: Vec<Matching> = all_perfect(8).into_iter().filter(|m| m.is_admissible(&c)).collect();
                v.sort();
                v
            };
            assert_eq!(got, want, "{p:?}");
            if c.is_alternating() {
                assert_eq!(got.len(), catalan[4]);
            }
        }
    }

    #[test]
    fn circular_order_and_orientation() {
        let lam = Partition::new([14i64, 13, 13, 11, 11, 9, 9, 8, 8, 7, 5, 3]).unwrap();
        let mu = Partition::new([9i64, 9, 9, 6, 6, 5, 4, 4, 4, 3, 1]).unwrap();
        let sigma = Partition::new([14i64, 14, 12, 12, 11, 11, 11, 9, 8, 7, 7, 5]).unwrap();
        let tau = Partition::new([10i64, 10, 8, 8, 8, 7, 6, 6, 6, 5, 2]).unwrap();
        let w = EmbeddedShape::new(SkewShape::new(lam, mu).unwrap(), 2, 12).endpoints(12).unwrap();
        let b = EmbeddedShape::new(SkewShape::new(sigma, tau).unwrap(), 0, 12).endpoints(12).unwrap();
        let c = CircularConfiguration::from_endpoints(&w, &b).unwrap();
        let summary: Vec<(i64, Level, Colour)> = c.points.iter().map(|p| (p.x, p.level, p.colour)).collect();
        use Colour::{Black as B, White as W};
        use Level::{Bottom as Bo, Top as T};
        assert_eq!(
            summary,
            vec![
                (15, T, W),
                (6, T, B),
                (2, T, W),
                (-3, T, B),
                (-12, Bo, B),
                (-10, Bo, W),
                (-9, Bo, B),
                (-8, Bo, W),
                (5, Bo, B),
                (10, Bo, W)
            ]
        );
        assert!(c.is_alternating());
        assert_eq!(c.points[0].orientation, Orientation::Inward);
        // Untouched configuration reproduces the input shapes up to the
        // normalised shift.
        match configuration_to_shapes(&c) {
            ConfigShapes::Pair { white, black } => {
                assert_eq!(white.shape.outer().parts()[0], 14);
                assert_eq!(white.shift, 2);
                assert_eq!(black.shift, 0);
            }
            z => panic!("unexpected {z:?}"),
        }
    }

    #[test]
    fn negative_row_is_zero() {
        // One white path from 0 at the bottom to -1 at the top.
        let c = CircularConfiguration {
            doubled_top: vec![],
            doubled_bottom: vec![],
            points: vec![
                ColouredPoint { x: -1, level: Level::Top, colour: Colour::White, orientation: I, index: 1 },
                ColouredPoint { x: 0, level: Level::Bottom, colour: Colour::White, orientation: O, index: 2 },
            ],
        };
        assert!(configuration_to_shapes(&c).is_zero());
        let flipped = c.reoriented(&[1, 2].into_iter().collect());
        assert!(configuration_to_shapes(&flipped).is_zero());
        let mut ok = c.clone();
        ok.points[0].x = 1;
        assert!(!configuration_to_shapes(&ok).is_zero());
    }
}
