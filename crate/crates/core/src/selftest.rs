//! Golden checks against known values, bundled with the library so the
//! command-line tool can run them without the source tree.

use std::collections::BTreeSet;

use serde::Serialize;

use crate::identities::{gps_consistency, gps_identity, theorem_rhs, verify_identity, Strategy};
use crate::overlay::{recolour, trace_bicoloured, ConfigShapes, EmbeddedShape, Level, Overlay};
use crate::par::Execution;
use crate::partition::{peel_complete, peel_down, peel_up, Partition, SkewShape, StripSpec};

const LARGE: &str = include_str!("../tests/data/recolouring_large.json");
const SMALL: &str = include_str!("../tests/data/recolouring_small.json");

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CaseResult {
    pub name: &'static str,
    pub passed: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
}

type Check = std::result::Result<(), String>;
type Case = (&'static str, fn() -> Check);

fn part(v: &[i64]) -> Partition {
    Partition::new(v.iter().copied()).expect("literal partitions are valid")
}

fn expect<T: PartialEq + std::fmt::Debug>(what: &str, got: T, want: T) -> Check {
    if got == want {
        Ok(())
    } else {
        Err(format!("{what}: got {got:?}, want {want:?}"))
    }
}

fn err(e: impl std::fmt::Display) -> String {
    e.to_string()
}

fn points() -> Check {
    let lam = part(&[10, 7, 7, 6, 6, 4, 4, 3, 2, 2]);
    let ps = lam.to_points(10, 0).map_err(err)?;
    expect("points", ps.values(), &[9, 5, 4, 2, 1, -2, -3, -5, -7, -8][..])?;
    expect("roundtrip", ps.to_partition().map_err(err)?, lam)
}

fn peeling() -> Check {
    let nu = part(&[10, 9, 8, 8, 6, 5, 5, 3, 2, 2]);
    expect("complete", peel_complete(&nu).map_err(err)?, part(&[8, 7, 7, 5, 4, 4, 2, 1, 1]))?;
    expect("down 2", peel_down(&nu, 2).map_err(err)?, part(&[10, 7, 7, 5, 4, 4, 2, 1, 1]))?;
    expect("down 6", peel_down(&nu, 6).map_err(err)?, part(&[10, 9, 8, 8, 6, 4, 2, 1, 1]))?;
    let lam = part(&[10, 7, 7, 6, 6, 4, 4, 3, 2, 2]);
    expect("up 1,2", peel_up(&lam, 1, 2).map_err(err)?, part(&[8, 7, 7, 6, 6, 4, 4, 3, 2, 2]))?;
    expect("up 5,1", peel_up(&lam, 5, 1).map_err(err)?, part(&[6, 6, 5, 5, 4, 4, 4, 3, 2, 2]))
}

fn border_strips() -> Check {
    let lam = part(&[10, 7, 7, 6, 6, 4, 4, 3, 2, 2]);
    let strips = [StripSpec::new(2, 2, 3), StripSpec::new(1, 6, 2)];
    for mu in [part(&[4, 3, 3, 1]), Partition::empty()] {
        let g = gps_identity(&lam, &mu, &strips).map_err(err)?;
        expect("nu", &g.nu, &part(&[10, 9, 8, 8, 6, 5, 5, 3, 2, 2]))?;
        expect("sigma", &g.sigma, &part(&[8, 7, 7, 5, 4, 4, 2, 1, 1]))?;
        expect("consistency", gps_consistency(&lam, &mu, &strips).map_err(err)?, true)?;
        let r = verify_identity(&g.identity.with_n(11), Strategy::Multipoint { count: 20, seed: 42 }, Execution::default());
        if !r.passed() {
            return Err(format!("identity failed at {:?}", r.witness));
        }
    }
    Ok(())
}

fn example() -> Check {
    let mu = part(&[5, 4, 2, 2, 2, 1, 1, 1]);
    let emb = |o: &[i64]| SkewShape::new(part(o), mu.clone()).map(|s| EmbeddedShape::new(s, 0, 12));
    let white = emb(&[16, 15, 15, 13, 13, 11, 11, 10, 10, 9, 7, 5]).map_err(err)?;
    let black = emb(&[14, 14, 12, 12, 11, 11, 11, 9, 8, 7, 7, 5]).map_err(err)?;
    let got: BTreeSet<(Partition, Partition)> = theorem_rhs(&white, &black, &[(15, Level::Top)])
        .map_err(err)?
        .into_iter()
        .filter_map(|c| match c {
            ConfigShapes::Pair { white, black } => Some((white.shape.outer().clone(), black.shape.outer().clone())),
            ConfigShapes::Zero { .. } => None,
        })
        .collect();
    let want: BTreeSet<(Partition, Partition)> = [
        (part(&[14, 14, 12, 12, 11, 11, 11, 10, 10, 9, 7, 5]), part(&[16, 15, 15, 13, 13, 11, 11, 9, 8, 7, 7, 5])),
        (part(&[14, 14, 12, 12, 10, 10, 9, 9, 8, 7, 7, 5]), part(&[16, 15, 15, 13, 13, 12, 12, 12, 10, 9, 7, 5])),
    ]
    .into_iter()
    .collect();
    expect("pairs", got, want)
}

fn recolour_pair(json: &str, a: (i64, Level), b: (i64, Level)) -> std::result::Result<Overlay, String> {
    let ov: Overlay = serde_json::from_str(json).map_err(err)?;
    let p = trace_bicoloured(&ov, a.0, a.1).map_err(err)?;
    let q = trace_bicoloured(&ov, b.0, b.1).map_err(err)?;
    recolour(&ov, &[p, q]).map_err(err)
}

fn padded(p: &Partition, rows: usize) -> Vec<u32> {
    (1..=rows).map(|i| p.row(i)).collect()
}

fn large_recolouring() -> Check {
    let r = recolour_pair(LARGE, (15, Level::Top), (5, Level::Bottom))?;
    let (w, b) = (r.white(), r.black());
    expect("white outer", padded(w.shape().outer(), w.rows()), vec![13, 13, 11, 11, 9, 9, 8, 8, 7, 5, 3])?;
    expect("white inner", padded(w.shape().inner(), w.rows()), vec![9, 9, 7, 7, 7, 6, 5, 5, 5, 4, 0])?;
    expect("black outer", padded(b.shape().outer(), b.rows()), vec![15, 14, 14, 12, 12, 11, 11, 11, 9, 8, 7, 7, 5])?;
    expect("black inner", padded(b.shape().inner(), b.rows()), vec![10, 10, 10, 7, 7, 6, 5, 5, 5, 4, 2, 2, 0])?;
    expect("shifts", (w.shift(), b.shift()), (1, 1))
}

fn small_recolouring() -> Check {
    let r = recolour_pair(SMALL, (7, Level::Top), (-1, Level::Bottom))?;
    expect("white", r.white().shape().to_string(), "(9,5,5,1,1,1)/(4,3,1)".to_string())?;
    expect("black", r.black().shape().to_string(), "(5,3,3,2,2,1,1,1)/(2,1,1,1,1)".to_string())
}

/// Runs every golden check.
pub fn run() -> Vec<CaseResult> {
    let cases: [Case; 6] = [
        ("point sets", points),
        ("peeling", peeling),
        ("border-strip identity", border_strips),
        ("two-term example", example),
        ("recolouring, large overlay", large_recolouring),
        ("recolouring, small overlay", small_recolouring),
    ];
    cases
        .iter()
        .map(|&(name, f)| {
            let outcome = f();
            CaseResult { name, passed: outcome.is_ok(), detail: outcome.err() }
        })
        .collect()
}
