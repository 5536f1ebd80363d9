//! Quadratic identities between products of skew Schur functions: the
//! recolouring sum over admissible matchings and its border-strip form.

use std::collections::BTreeSet;
use std::time::{Duration, Instant};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Constraint, Error, Result};
use crate::overlay::{
    configuration_to_shapes, enumerate_admissible_matchings, CircularConfiguration, ConfigShapes, EmbeddedShape,
    Level, Orientation, RawPoints,
};
use crate::par::{self, Execution};
use crate::partition::{build_nu, check_strips, peel_complete, peel_down, peel_up, Partition, SkewShape, StripSpec};
use crate::poly::Polynomial;
use crate::schur::{skew_schur, skew_schur_eval};

/// The two colours' point sets of a term that vanishes.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct ZeroTerm {
    pub white: RawPoints,
    pub black: RawPoints,
}

/// A product `s_A * s_B`, or a term known to vanish.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Term {
    Product(SkewShape, SkewShape),
    Zero { zero: ZeroTerm },
}

impl Term {
    pub fn is_zero(&self) -> bool {
        matches!(self, Term::Zero { .. })
    }

    pub fn shapes(&self) -> Option<(&SkewShape, &SkewShape)> {
        match self {
            Term::Product(a, b) => Some((a, b)),
            Term::Zero { .. } => None,
        }
    }

    /// Total number of cells; zero terms count as empty.
    pub fn size(&self) -> u64 {
        self.shapes().map_or(0, |(a, b)| a.size() + b.size())
    }

    fn max_column_height(&self) -> usize {
        self.shapes().map_or(0, |(a, b)| a.max_column_height().max(b.max_column_height()))
    }

    fn poly(&self, n: u32) -> Polynomial {
        match self.shapes() {
            Some((a, b)) => &skew_schur(a, n) * &skew_schur(b, n),
            None => Polynomial::zero(n as usize),
        }
    }

    fn eval(&self, point: &[BigInt]) -> BigInt {
        match self.shapes() {
            Some((a, b)) => skew_schur_eval(a, point) * skew_schur_eval(b, point),
            None => BigInt::zero(),
        }
    }
}

impl From<ConfigShapes> for Term {
    fn from(c: ConfigShapes) -> Self {
        match c {
            ConfigShapes::Pair { white, black } => Term::Product(white.shape, black.shape),
            ConfigShapes::Zero { white, black } => Term::Zero { zero: ZeroTerm { white, black } },
        }
    }
}

/// `sum(lhs) = sum(rhs)` in `n` variables.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Identity {
    pub lhs: Vec<Term>,
    pub rhs: Vec<Term>,
    #[serde(rename = "N")]
    pub n: u32,
    pub provenance: String,
}

impl Identity {
    /// Smallest alphabet in which every nonzero term can be nonzero.
    pub fn default_n(lhs: &[Term], rhs: &[Term]) -> u32 {
        lhs.iter().chain(rhs).map(Term::max_column_height).max().unwrap_or(0).max(1) as u32
    }

    pub fn with_n(mut self, n: u32) -> Self {
        self.n = n;
        self
    }
}

/// The right-hand side of the recolouring identity for `white * black`
/// with the coloured points in `s` selected: one term per configuration
/// reachable by swapping colours along the edges of an admissible matching
/// that touch `s`. Duplicates are merged; vanishing terms are kept.
pub fn theorem_rhs(white: &EmbeddedShape, black: &EmbeddedShape, s: &[(i64, Level)]) -> Result<Vec<ConfigShapes>> {
    // The levels only label top and bottom here.
    let config = CircularConfiguration::from_endpoints(&white.endpoints(2)?, &black.endpoints(2)?)?;
    if !config.is_alternating() {
        return Err(Error::NotAlternating);
    }
    if s.is_empty() {
        return Err(Error::EmptyS);
    }
    let mut selected = BTreeSet::new();
    for &(x, level) in s {
        match config.find(x, level) {
            Some(p) if p.orientation == Orientation::Inward => selected.insert(p.index),
            _ => return Err(Error::SNotInward { x, level }),
        };
    }
    let mut out = BTreeSet::new();
    for m in enumerate_admissible_matchings(&config)? {
        let flip: BTreeSet<usize> = selected
            .iter()
            .flat_map(|&i| [i, m.partner(i).expect("matching is perfect")])
            .collect();
        out.insert(configuration_to_shapes(&config.reoriented(&flip)));
    }
    Ok(out.into_iter().collect())
}

/// [`theorem_rhs`] packaged as an identity. `n` defaults to the largest
/// column height among the terms.
pub fn theorem_identity(
    white: &EmbeddedShape,
    black: &EmbeddedShape,
    s: &[(i64, Level)],
    n: Option<u32>,
) -> Result<Identity> {
    let lhs = vec![Term::Product(white.shape.clone(), black.shape.clone())];
    let rhs: Vec<Term> = theorem_rhs(white, black, s)?.into_iter().map(Term::from).collect();
    let n = n.unwrap_or_else(|| Identity::default_n(&lhs, &rhs));
    Ok(Identity { lhs, rhs, n, provenance: "recolouring".into() })
}

/// The border-strip identity built from `lambda`, `mu` and the strips.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GpsConstruction {
    pub nu: Partition,
    pub sigma: Partition,
    pub identity: Identity,
}

fn pair_term(a: &Partition, b: &Partition, mu: &Partition) -> Result<Term> {
    match (SkewShape::new(a.clone(), mu.clone()), SkewShape::new(b.clone(), mu.clone())) {
        (Ok(x), Ok(y)) => Ok(Term::Product(x, y)),
        _ => {
            let raw = |p: &Partition| -> Result<RawPoints> {
                let rows = p.len().max(mu.len());
                Ok(RawPoints {
                    starts: mu.to_points(rows, 0)?.values().to_vec(),
                    ends: p.to_points(rows, 0)?.values().to_vec(),
                })
            };
            Ok(Term::Zero { zero: ZeroTerm { white: raw(a)?, black: raw(b)? } })
        }
    }
}

/// `s_{lambda/mu} s_{sigma/mu}` expanded by peeling, with
/// `nu = build_nu(lambda, strips)` and `sigma = peel_complete(nu)`:
/// the terms are `(peel(lambda)/mu, nu/mu)` and, for each strip `(t, (r, m))`,
/// `(peel_up(lambda, r-1, t)/mu, peel_down(nu, r)/mu)`. Terms whose outer
/// shape does not contain `mu` vanish.
pub fn gps_identity(lambda: &Partition, mu: &Partition, strips: &[StripSpec]) -> Result<GpsConstruction> {
    if strips.is_empty() {
        return Err(Error::ConstraintViolated { index: 0, constraint: Constraint::NoStrips });
    }
    check_strips(lambda, strips)?;
    let nu = build_nu(lambda, strips)?;
    let sigma = peel_complete(&nu)?;
    let lhs = vec![Term::Product(
        SkewShape::new(lambda.clone(), mu.clone())?,
        SkewShape::new(sigma.clone(), mu.clone())?,
    )];
    let mut rhs = vec![pair_term(&peel_complete(lambda)?, &nu, mu)?];
    for s in strips {
        rhs.push(pair_term(&peel_up(lambda, s.row - 1, s.boxes)?, &peel_down(&nu, s.row)?, mu)?);
    }
    let n = Identity::default_n(&lhs, &rhs);
    Ok(GpsConstruction { nu, sigma, identity: Identity { lhs, rhs, n, provenance: "border-strips".into() } })
}

/// Checks that the peeling terms of [`gps_identity`] are exactly the terms
/// obtained by recolouring from the largest white ending point. Shapes are
/// compared after [`SkewShape::trimmed`].
pub fn gps_consistency(lambda: &Partition, mu: &Partition, strips: &[StripSpec]) -> Result<bool> {
    let gps = gps_identity(lambda, mu, strips)?;
    let r = lambda.len();
    let white = EmbeddedShape::new(SkewShape::new(lambda.clone(), mu.clone())?, 0, r);
    let black = EmbeddedShape::new(SkewShape::new(gps.sigma.clone(), mu.clone())?, 0, r - 1);
    let top = i64::from(lambda.row(1)) - 1;
    let recoloured: Vec<Term> = theorem_rhs(&white, &black, &[(top, Level::Top)])?.into_iter().map(Term::from).collect();
    let split = |terms: &[Term]| {
        let mut pairs: Vec<(SkewShape, SkewShape)> =
            terms.iter().filter_map(|t| t.shapes().map(|(a, b)| (a.trimmed(), b.trimmed()))).collect();
        pairs.sort();
        (pairs, terms.iter().filter(|t| t.is_zero()).count())
    };
    Ok(split(&recoloured) == split(&gps.identity.rhs))
}

/// How to compare the two sides.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Strategy {
    /// Expand both sides as polynomials.
    Full,
    /// Evaluate at `count` seeded points with entries in `0..=4`.
    Multipoint { count: usize, seed: u64 },
    /// Full expansion when the number of tableaux to enumerate is at most
    /// `budget`, multipoint otherwise.
    Auto { budget: u64, count: usize, seed: u64 },
}

pub const DEFAULT_BUDGET: u64 = 1_000_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Method {
    FullExpansion,
    Multipoint,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Verdict {
    Pass,
    Fail,
}

/// Where the two sides first differ. Values are decimal strings.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Witness {
    Point { point: Vec<u32>, lhs: String, rhs: String },
    Monomial { exp: Vec<u32>, lhs: String, rhs: String },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub method: Method,
    #[serde(rename = "N")]
    pub n: u32,
    /// Evaluation points tested; zero for full expansion.
    pub points: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
    pub verdict: Verdict,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Witness>,
    /// Largest absolute coefficient or value seen on either side.
    pub max_magnitude: String,
    /// Per-point values of both sides, in point order.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub values: Option<Vec<(Vec<u32>, String, String)>>,
    #[serde(skip)]
    pub elapsed: Duration,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.verdict == Verdict::Pass
    }
}

/// Number of tableaux a full expansion enumerates.
pub fn tableau_count(id: &Identity) -> BigInt {
    let ones = vec![BigInt::one(); id.n as usize];
    id.lhs
        .iter()
        .chain(&id.rhs)
        .filter_map(Term::shapes)
        .map(|(a, b)| skew_schur_eval(a, &ones) + skew_schur_eval(b, &ones))
        .sum()
}

/// Deterministic evaluation points.
pub fn sample_points(n: u32, count: usize, seed: u64) -> Vec<Vec<u32>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count).map(|_| (0..n).map(|_| rng.random_range(0..=4u32)).collect()).collect()
}

pub fn verify_identity(id: &Identity, strategy: Strategy, exec: Execution) -> VerificationReport {
    let started = Instant::now();
    let mut report = match strategy {
        Strategy::Full => verify_full(id, exec),
        Strategy::Multipoint { count, seed } => verify_points(id, count, seed, exec),
        Strategy::Auto { budget, count, seed } => {
            if tableau_count(id) <= BigInt::from(budget) {
                verify_full(id, exec)
            } else {
                verify_points(id, count, seed, exec)
            }
        }
    };
    report.elapsed = started.elapsed();
    report
}

fn side_poly(terms: &[Term], n: u32, exec: Execution) -> Polynomial {
    par::map(terms, exec, |t| t.poly(n))
        .iter()
        .fold(Polynomial::zero(n as usize), |acc, p| &acc + p)
}

fn verify_full(id: &Identity, exec: Execution) -> VerificationReport {
    let lhs = side_poly(&id.lhs, id.n, exec);
    let rhs = side_poly(&id.rhs, id.n, exec);
    let max = lhs.terms().chain(rhs.terms()).map(|(_, c)| c.abs()).max().unwrap_or_default();
    let witness = (lhs != rhs).then(|| {
        let monomials: BTreeSet<_> = lhs.terms().chain(rhs.terms()).map(|(m, _)| m.clone()).collect();
        let m = monomials
            .into_iter()
            .rev()
            .find(|m| lhs.coeff(m) != rhs.coeff(m))
            .expect("unequal polynomials differ somewhere");
        Witness::Monomial { exp: m.exponents().to_vec(), lhs: lhs.coeff(&m).to_string(), rhs: rhs.coeff(&m).to_string() }
    });
    VerificationReport {
        method: Method::FullExpansion,
        n: id.n,
        points: 0,
        seed: None,
        verdict: if witness.is_none() { Verdict::Pass } else { Verdict::Fail },
        witness,
        max_magnitude: max.to_string(),
        values: None,
        elapsed: Duration::ZERO,
    }
}

fn verify_points(id: &Identity, count: usize, seed: u64, exec: Execution) -> VerificationReport {
    let points = sample_points(id.n, count, seed);
    let values: Vec<(BigInt, BigInt)> = par::map(&points, exec, |p| {
        let big: Vec<BigInt> = p.iter().map(|&v| BigInt::from(v)).collect();
        let side = |terms: &[Term]| terms.iter().map(|t| t.eval(&big)).sum::<BigInt>();
        (side(&id.lhs), side(&id.rhs))
    });
    let max = values.iter().flat_map(|(l, r)| [l.abs(), r.abs()]).max().unwrap_or_default();
    let witness = points.iter().zip(&values).find(|(_, (l, r))| l != r).map(|(p, (l, r))| Witness::Point {
        point: p.clone(),
        lhs: l.to_string(),
        rhs: r.to_string(),
    });
    VerificationReport {
        method: Method::Multipoint,
        n: id.n,
        points: count,
        seed: Some(seed),
        verdict: if witness.is_none() { Verdict::Pass } else { Verdict::Fail },
        witness,
        max_magnitude: max.to_string(),
        values: Some(points.into_iter().zip(values).map(|(p, (l, r))| (p, l.to_string(), r.to_string())).collect()),
        elapsed: Duration::ZERO,
    }
}
