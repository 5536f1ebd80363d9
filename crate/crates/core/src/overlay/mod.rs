//! Overlays of a white and a black path family, bicoloured paths and the
//! recolouring involution.
//!
//! Arcs and endpoints carried by both families are doubled and never take
//! part in tracing. At a lattice point visited by both families the white
//! incoming arc is paired with the black incoming arc and the white outgoing
//! arc with the black outgoing arc; a point visited by one family pairs that
//! family's incoming and outgoing arcs. Starting and ending points act as
//! stand-in arcs. A bicoloured path follows these pairings until it reaches a
//! coloured endpoint.

mod circular;

use std::collections::{BTreeSet, HashMap, HashSet};

use serde::{Deserialize, Serialize};

pub use circular::{
    configuration_to_shapes, enumerate_admissible_matchings, orientation, CircularConfiguration, Colour,
    ColouredPoint, ConfigShapes, EmbeddedShape, Level, Matching, Orientation, RawPoints,
};

use crate::error::{Error, Result};
use crate::partition::PointSet;
use crate::paths::{Arc, Endpoints, LatticePath, PathFamily, Point};
use crate::poly::Monomial;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
enum Item {
    Arc(Arc),
    Start,
    End,
}

const IN: usize = 0;
const OUT: usize = 1;

#[derive(Clone, Copy, Debug, Default)]
struct Slots {
    white: Option<[Item; 2]>,
    black: Option<[Item; 2]>,
}

impl Slots {
    fn get(&self, c: Colour) -> Option<[Item; 2]> {
        match c {
            Colour::White => self.white,
            Colour::Black => self.black,
        }
    }

    fn get_mut(&mut self, c: Colour) -> &mut Option<[Item; 2]> {
        match c {
            Colour::White => &mut self.white,
            Colour::Black => &mut self.black,
        }
    }

    /// The item paired with slot `slot` of colour `c`.
    fn partner(&self, c: Colour, slot: usize) -> (Colour, Item) {
        match self.get(c.other()) {
            Some(other) => (c.other(), other[slot]),
            None => (c, self.get(c).expect("colour visits this point")[1 - slot]),
        }
    }
}

/// A white and a black nonintersecting family on the same levels.
#[derive(Clone, Debug)]
pub struct Overlay {
    white: PathFamily,
    black: PathFamily,
    slots: HashMap<Point, Slots>,
    config: CircularConfiguration,
    arc_count: usize,
}

impl PartialEq for Overlay {
    fn eq(&self, other: &Self) -> bool {
        self.white == other.white && self.black == other.black
    }
}

impl Eq for Overlay {}

pub fn make_overlay(white: PathFamily, black: PathFamily) -> Result<Overlay> {
    if white.n() != black.n() {
        return Err(Error::LevelMismatch { white: white.n(), black: black.n() });
    }
    if white.n() < 2 {
        return Err(Error::TooFewLevels(white.n()));
    }
    let config = CircularConfiguration::from_endpoints(&family_endpoints(&white), &family_endpoints(&black))?;
    let mut slots: HashMap<Point, Slots> = HashMap::new();
    let mut arc_count = 0;
    for (colour, fam) in [(Colour::White, &white), (Colour::Black, &black)] {
        for p in fam.paths() {
            let points: Vec<Point> = p.points().collect();
            let arcs: Vec<Arc> = p.arcs().collect();
            arc_count += arcs.len();
            for (k, pt) in points.iter().enumerate() {
                let incoming = if k == 0 { Item::Start } else { Item::Arc(arcs[k - 1]) };
                let outgoing = arcs.get(k).map_or(Item::End, |&a| Item::Arc(a));
                *slots.entry(*pt).or_default().get_mut(colour) = Some([incoming, outgoing]);
            }
        }
    }
    Ok(Overlay { white, black, slots, config, arc_count })
}

fn family_endpoints(f: &PathFamily) -> Endpoints {
    let set = |v: Vec<i64>| PointSet::new(v, f.shift()).expect("family endpoints are strictly decreasing");
    Endpoints { starts: set(f.starts()), ends: set(f.ends()), n: f.n() }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Segment {
    pub arc: Arc,
    pub colour: Colour,
}

/// A path through coloured arcs joining two coloured points. Segments are
/// listed from `from` to `to`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct BicolouredPath {
    pub from: ColouredPoint,
    pub to: ColouredPoint,
    pub segments: Vec<Segment>,
}

impl BicolouredPath {
    pub fn reversed(&self) -> BicolouredPath {
        BicolouredPath { from: self.to, to: self.from, segments: self.segments.iter().rev().copied().collect() }
    }

    /// Lattice points visited, from `from` to `to`.
    pub fn points(&self, n: u32) -> Vec<Point> {
        let mut pts = vec![Point::new(self.from.x, self.from.level.y(n))];
        for s in &self.segments {
            let last = *pts.last().expect("nonempty");
            pts.push(if s.arc.tail == last { s.arc.head() } else { s.arc.tail });
        }
        pts
    }
}

impl Overlay {
    pub fn white(&self) -> &PathFamily {
        &self.white
    }

    pub fn black(&self) -> &PathFamily {
        &self.black
    }

    pub fn n(&self) -> u32 {
        self.white.n()
    }

    pub fn configuration(&self) -> &CircularConfiguration {
        &self.config
    }

    pub fn family(&self, c: Colour) -> &PathFamily {
        match c {
            Colour::White => &self.white,
            Colour::Black => &self.black,
        }
    }

    /// Arcs carried by exactly one family, with that family's colour.
    pub fn coloured_arcs(&self) -> Vec<Segment> {
        let white: HashSet<Arc> = self.white.paths().iter().flat_map(|p| p.arcs().collect::<Vec<_>>()).collect();
        let black: HashSet<Arc> = self.black.paths().iter().flat_map(|p| p.arcs().collect::<Vec<_>>()).collect();
        let mut out: Vec<Segment> = white
            .difference(&black)
            .map(|&arc| Segment { arc, colour: Colour::White })
            .chain(black.difference(&white).map(|&arc| Segment { arc, colour: Colour::Black }))
            .collect();
        out.sort_by_key(|s| (s.arc, s.colour));
        out
    }

    pub fn doubled_arcs(&self) -> Vec<Arc> {
        let white: HashSet<Arc> = self.white.paths().iter().flat_map(|p| p.arcs().collect::<Vec<_>>()).collect();
        let mut out: Vec<Arc> = self
            .black
            .paths()
            .iter()
            .flat_map(|p| p.arcs().collect::<Vec<_>>())
            .filter(|a| white.contains(a))
            .collect();
        out.sort();
        out
    }

    /// Product of both families' weights.
    pub fn weight(&self) -> Monomial {
        &self.white.weight() * &self.black.weight()
    }

    /// The same overlay with both families shifted so that their last inner
    /// parts vanish. Recolouring always produces overlays of this form.
    pub fn normalised(&self) -> Overlay {
        let norm = |f: &PathFamily| {
            PathFamily::from_paths(f.paths().to_vec(), f.n(), None).expect("a valid family stays valid")
        };
        make_overlay(norm(&self.white), norm(&self.black)).expect("levels are unchanged")
    }
}

/// Follows the bicoloured path starting at the coloured point `(x, level)`.
pub fn trace_bicoloured(ov: &Overlay, x: i64, level: Level) -> Result<BicolouredPath> {
    let n = ov.n();
    let from = *ov.config.find(x, level).ok_or(Error::NotColouredPoint { x, level: level.y(n) })?;
    let mut v = Point::new(x, level.y(n));
    let mut colour = from.colour;
    let mut slot = match level {
        Level::Top => OUT,
        Level::Bottom => IN,
    };
    let mut segments = Vec::new();
    loop {
        let (c, item) = ov.slots[&v].partner(colour, slot);
        let arc = match item {
            Item::Arc(a) => a,
            Item::Start | Item::End => {
                let lvl = if item == Item::Start { Level::Bottom } else { Level::Top };
                let to = *ov.config.find(v.x, lvl).expect("a trace ends at a coloured point");
                debug_assert_eq!(to.colour, c);
                return Ok(BicolouredPath { from, to, segments });
            }
        };
        segments.push(Segment { arc, colour: c });
        if segments.len() > ov.arc_count {
            return Err(Error::TraceDidNotTerminate { x, level: level.y(n) });
        }
        if arc.head() == v {
            v = arc.tail;
            slot = OUT;
        } else {
            v = arc.head();
            slot = IN;
        }
        colour = c;
    }
}

/// All bicoloured paths, each traced from its endpoint of smaller circular
/// index, together with the matching they induce.
pub fn all_bicoloured(ov: &Overlay) -> Result<(Vec<BicolouredPath>, Matching)> {
    let mut done = BTreeSet::new();
    let mut paths = Vec::new();
    for p in &ov.config.points {
        if done.contains(&p.index) {
            continue;
        }
        let b = trace_bicoloured(ov, p.x, p.level)?;
        done.insert(b.from.index);
        done.insert(b.to.index);
        paths.push(b);
    }
    let matching = Matching::new(paths.iter().map(|b| (b.from.index, b.to.index)).collect());
    Ok((paths, matching))
}

/// Swaps the colours of every arc and both endpoints of each chosen path.
pub fn recolour(ov: &Overlay, chosen: &[BicolouredPath]) -> Result<Overlay> {
    let mut used: HashSet<Arc> = HashSet::new();
    let mut flipped_points: HashSet<(i64, Level)> = HashSet::new();
    for b in chosen {
        let traced = trace_bicoloured(ov, b.from.x, b.from.level).map_err(|_| Error::PathNotInOverlay)?;
        if traced != *b && traced.reversed() != *b {
            return Err(Error::PathNotInOverlay);
        }
        if !flipped_points.insert((b.from.x, b.from.level)) || !flipped_points.insert((b.to.x, b.to.level)) {
            return Err(Error::SharedArc);
        }
        for s in &b.segments {
            if !used.insert(s.arc) {
                return Err(Error::SharedArc);
            }
        }
    }
    let flipped: HashMap<Arc, Colour> =
        chosen.iter().flat_map(|b| b.segments.iter().map(|s| (s.arc, s.colour))).collect();
    let n = ov.n();
    let rebuild = |colour: Colour| -> Result<PathFamily> {
        // Arcs of this colour after the swap.
        let mut arcs: HashMap<Point, Vec<Arc>> = HashMap::new();
        let mut total = 0;
        for (c, fam) in [(Colour::White, &ov.white), (Colour::Black, &ov.black)] {
            for a in fam.paths().iter().flat_map(|p| p.arcs().collect::<Vec<_>>()) {
                let keep = match flipped.get(&a) {
                    Some(&fc) => fc != colour && c != colour,
                    None => c == colour,
                };
                if keep {
                    arcs.entry(a.tail).or_default().push(a);
                    total += 1;
                }
            }
        }
        let mut starts: Vec<i64> = ov
            .family(colour)
            .starts()
            .into_iter()
            .filter(|&x| !flipped_points.contains(&(x, Level::Bottom)))
            .chain(
                ov.family(colour.other())
                    .starts()
                    .into_iter()
                    .filter(|&x| flipped_points.contains(&(x, Level::Bottom))),
            )
            .collect();
        starts.sort_unstable_by(|a, b| b.cmp(a));
        let mut paths = Vec::with_capacity(starts.len());
        let mut walked = 0;
        for x in starts {
            let start = Point::new(x, 1);
            let mut steps = Vec::new();
            let mut v = start;
            while let Some(out) = arcs.get(&v) {
                let [a] = out.as_slice() else {
                    return Err(Error::MalformedFamily(format!("two {colour:?} arcs leave {v}")));
                };
                steps.push(a.dir);
                walked += 1;
                v = a.head();
            }
            paths.push(LatticePath { start, steps });
        }
        if walked != total {
            return Err(Error::MalformedFamily(format!("{colour:?} arcs not reached from any start")));
        }
        PathFamily::from_paths(paths, n, None)
    };
    make_overlay(rebuild(Colour::White)?, rebuild(Colour::Black)?)
}

#[derive(Serialize, Deserialize)]
struct OverlayJson {
    white: PathFamily,
    black: PathFamily,
}

impl Serialize for Overlay {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        OverlayJson { white: self.white.clone(), black: self.black.clone() }.serialize(s)
    }
}

impl<'de> Deserialize<'de> for Overlay {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let raw = OverlayJson::deserialize(d)?;
        make_overlay(raw.white, raw.black).map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partition::{Partition, SkewShape};
    use crate::tableau::validate_tableau;

    fn fam(outer: &[i64], inner: &[i64], rows: Vec<Vec<u32>>, n: u32, shift: i64) -> PathFamily {
        let shape = SkewShape::new(
            Partition::new(outer.iter().copied()).unwrap(),
            Partition::new(inner.iter().copied()).unwrap(),
        )
        .unwrap();
        let t = validate_tableau(shape, rows, n).unwrap();
        crate::paths::tableau_to_paths(&t, shift)
    }

    #[test]
    fn identical_families_have_nothing_coloured() {
        let f = fam(&[2, 1], &[], vec![vec![1, 2], vec![3]], 3, 0);
        let ov = make_overlay(f.clone(), f).unwrap();
        assert!(ov.configuration().is_empty());
        assert!(ov.coloured_arcs().is_empty());
        let (paths, m) = all_bicoloured(&ov).unwrap();
        assert!(paths.is_empty() && m.edges.is_empty());
    }

    #[test]
    fn disjoint_single_paths() {
        // White path at x in -1..0, black path far to the right.
        let white = fam(&[1], &[], vec![vec![2]], 3, 0);
        let black = fam(&[1], &[], vec![vec![1]], 3, 5);
        let ov = make_overlay(white.clone(), black).unwrap();
        assert_eq!(ov.configuration().len(), 4);
        let b = trace_bicoloured(&ov, 0, Level::Top).unwrap();
        assert_eq!((b.to.x, b.to.level), (-1, Level::Bottom));
        assert_eq!(b.segments.len(), white.paths()[0].steps.len());
        assert!(b.segments.iter().all(|s| s.colour == Colour::White));
        assert_eq!(trace_bicoloured(&ov, -1, Level::Bottom).unwrap(), b.reversed());
        assert!(matches!(trace_bicoloured(&ov, 3, Level::Top), Err(Error::NotColouredPoint { .. })));
        // Recolouring the white path swaps it to black.
        let r = recolour(&ov, &[b]).unwrap();
        assert!(r.white().paths().iter().all(|p| p.steps.is_empty()) || r.white().rows() == 1);
        assert_eq!(r.black().rows(), 2);
        assert_eq!(r.weight(), ov.weight());
    }

    #[test]
    fn level_checks() {
        let a = fam(&[1], &[], vec![vec![1]], 2, 0);
        let b = fam(&[1], &[], vec![vec![1]], 3, 0);
        assert_eq!(make_overlay(a, b), Err(Error::LevelMismatch { white: 2, black: 3 }));
        let c = fam(&[1], &[], vec![vec![1]], 1, 0);
        assert_eq!(make_overlay(c.clone(), c), Err(Error::TooFewLevels(1)));
    }

    #[test]
    fn json_roundtrip() {
        let white = fam(&[2, 1], &[1], vec![vec![2], vec![3]], 3, 0);
        let black = fam(&[2], &[], vec![vec![1, 3]], 3, 1);
        let ov = make_overlay(white, black).unwrap();
        let s = serde_json::to_string(&ov).unwrap();
        assert_eq!(serde_json::from_str::<Overlay>(&s).unwrap(), ov);
    }
}
