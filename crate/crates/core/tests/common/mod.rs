#![allow(dead_code)]

use rand::seq::IndexedRandom;
use rand::Rng;

use skewschur::overlay::{make_overlay, EmbeddedShape, Overlay};
use skewschur::partition::{partitions, subpartitions};
use skewschur::paths::PathFamily;
use skewschur::tableau::random_ssyt;
use skewschur::{Partition, SkewShape};

pub fn random_partition<R: Rng>(rng: &mut R, max_size: u32) -> Partition {
    let size = rng.random_range(0..=max_size);
    partitions(size).choose(rng).expect("at least one partition").clone()
}

pub fn random_skew<R: Rng>(rng: &mut R, max_size: u32) -> SkewShape {
    let outer = random_partition(rng, max_size);
    let inner = subpartitions(&outer).choose(rng).expect("empty is contained").clone();
    SkewShape::new(outer, inner).expect("inner is contained")
}

/// A skew shape with a random shift and up to `extra` padding rows.
pub fn random_embedded<R: Rng>(rng: &mut R, max_size: u32, extra: usize) -> EmbeddedShape {
    let shape = random_skew(rng, max_size);
    let rows = shape.outer().len() + rng.random_range(0..=extra);
    EmbeddedShape::new(shape, rng.random_range(-2..=2), rows)
}

pub fn random_family<R: Rng>(rng: &mut R, max_size: u32, n: u32) -> PathFamily {
    loop {
        let e = random_embedded(rng, max_size, 1);
        if let Some(t) = random_ssyt(&e.shape, n, rng) {
            return PathFamily::from_tableau(&t, e.shift, e.rows).expect("rows cover the shape");
        }
    }
}

pub fn random_overlay<R: Rng>(rng: &mut R, max_size: u32, n: u32) -> Overlay {
    let white = random_family(rng, max_size, n);
    let black = random_family(rng, max_size, n);
    make_overlay(white, black).expect("same levels")
}

pub fn load_overlay(name: &str) -> Overlay {
    let path = format!("{}/tests/data/{name}", env!("CARGO_MANIFEST_DIR"));
    let text = std::fs::read_to_string(&path).unwrap_or_else(|e| panic!("{path}: {e}"));
    serde_json::from_str(&text).unwrap_or_else(|e| panic!("{path}: {e}"))
}

pub fn part(v: &[i64]) -> Partition {
    Partition::new(v.iter().copied()).expect("valid partition")
}

/// Parts padded with zeros to `rows` entries.
pub fn padded(p: &Partition, rows: usize) -> Vec<u32> {
    (1..=rows).map(|i| p.row(i)).collect()
}
