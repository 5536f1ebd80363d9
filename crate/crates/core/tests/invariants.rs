mod common;

use num_bigint::BigInt;
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use common::{random_embedded, random_overlay, random_skew};
use skewschur::identities::{self, gps_consistency, gps_identity, theorem_identity, verify_identity, Verdict};
use skewschur::overlay::{all_bicoloured, recolour, trace_bicoloured, CircularConfiguration, Level, Orientation};
use skewschur::par::Execution;
use skewschur::partition::{add_strip, build_nu, check_strips, peel_complete, peel_down};
use skewschur::paths::{is_nonintersecting, paths_to_tableau, tableau_to_paths};
use skewschur::schur::{skew_schur, skew_schur_eval};
use skewschur::tableau::random_ssyt;
use skewschur::{Partition, StripSpec};

fn partition(max_part: u32, max_len: usize) -> impl Strategy<Value = Partition> {
    prop::collection::vec(0..=max_part, 0..=max_len).prop_map(|mut v| {
        v.sort_unstable_by(|a, b| b.cmp(a));
        Partition::new(v.into_iter().map(i64::from)).unwrap()
    })
}

/// A partition with at least one corner below the first row, and a valid
/// nonempty strip list for it.
fn partition_with_strips(max_part: u32, max_len: usize) -> impl Strategy<Value = (Partition, Vec<StripSpec>)> {
    let picks = prop::collection::vec((any::<bool>(), any::<prop::sample::Index>(), any::<prop::sample::Index>()), max_len);
    (partition(max_part, max_len), picks).prop_filter_map("no corner below the first row", |(lam, picks)| {
        let corners: Vec<usize> = (2..=lam.len()).filter(|&r| lam.row(r - 1) > lam.row(r)).collect();
        let rows: Vec<usize> = corners.iter().zip(&picks).filter(|(_, p)| p.0).map(|(&r, _)| r).collect();
        let rows = if rows.is_empty() { vec![*corners.first()?] } else { rows };
        let strips = rows
            .iter()
            .zip(&picks)
            .enumerate()
            .map(|(i, (&r, p))| {
                let gap = (lam.row(r - 1) - lam.row(r)) as usize;
                let room = rows.get(i + 1).map_or(lam.len() + 1, |&n| n) - r;
                StripSpec::new(p.1.index(gap) as u32 + 1, r, p.2.index(room) + 1)
            })
            .collect();
        Some((lam, strips))
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn points_roundtrip(p in partition(9, 8), extra in 0usize..3, shift in -3i64..=3) {
        let ps = p.to_points(p.len() + extra, shift).unwrap();
        prop_assert!(ps.values().windows(2).all(|w| w[0] > w[1]));
        prop_assert_eq!(ps.to_partition().unwrap(), p);
    }

    #[test]
    fn complete_peel_shifts_rows(p in partition(9, 8)) {
        prop_assume!(!p.is_empty());
        let q = peel_complete(&p).unwrap();
        for i in 1..=p.len() {
            prop_assert_eq!(q.row(i), p.row(i + 1).saturating_sub(1));
        }
        prop_assert_eq!(p.size() - q.size(), u64::from(p.row(1)) + p.len() as u64 - 1);
    }

    #[test]
    fn down_peel_after_strip((p, s) in partition_with_strips(8, 8)) {
        let s = s[0];
        let q = add_strip(&p, s).unwrap();
        let last = s.row + s.span - 1;
        prop_assert!(p.is_contained_in(&q));
        prop_assert_eq!(peel_down(&q, s.row).unwrap(), peel_down(&p, last).unwrap());
        let grown = u64::from(s.boxes) + (s.span as u64 - 1) + u64::from(p.row(s.row)) - u64::from(p.row(last));
        prop_assert_eq!(q.size(), p.size() + grown);
    }

    #[test]
    fn border_strip_terms_come_from_recolouring(
        (lam, s) in partition_with_strips(8, 8),
        pick in any::<prop::sample::Index>(),
    ) {
        prop_assert!(check_strips(&lam, &s).is_ok());
        let sigma = peel_complete(&build_nu(&lam, &s).unwrap()).unwrap();
        let inners: Vec<Partition> = skewschur::partition::subpartitions(&lam)
            .into_iter()
            .filter(|m| m.is_contained_in(&sigma))
            .collect();
        let mu = pick.get(&inners).clone();
        prop_assert!(gps_consistency(&lam, &mu, &s).unwrap());
    }

    #[test]
    fn schur_expansion_matches_determinant(seed in any::<u64>(), n in 1u32..=4, point in prop::collection::vec(-3i64..=3, 4)) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let shape = random_skew(&mut rng, 6);
        let x: Vec<BigInt> = point[..n as usize].iter().map(|&v| BigInt::from(v)).collect();
        prop_assert_eq!(skew_schur(&shape, n).eval(&x), skew_schur_eval(&shape, &x));
    }

    #[test]
    fn tableau_path_bijection(seed in any::<u64>(), n in 1u32..=4, shift in -2i64..=2) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let shape = random_skew(&mut rng, 7);
        if let Some(t) = random_ssyt(&shape, n, &mut rng) {
            let pf = tableau_to_paths(&t, shift);
            prop_assert!(is_nonintersecting(pf.paths()));
            prop_assert_eq!(pf.weight(), t.weight());
            prop_assert_eq!(paths_to_tableau(&pf).unwrap(), t);
        }
    }

    #[test]
    fn recolouring_is_an_involution(seed in any::<u64>(), n in 2u32..=4, mask in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let ov = random_overlay(&mut rng, 6, n);
        let (paths, matching) = all_bicoloured(&ov).unwrap();
        prop_assert!(matching.is_admissible(ov.configuration()));
        let chosen: Vec<_> = paths.into_iter().enumerate().filter(|(i, _)| mask >> (i % 64) & 1 == 1).map(|(_, b)| b).collect();
        let r = recolour(&ov, &chosen).unwrap();
        prop_assert!(is_nonintersecting(r.white().paths()));
        prop_assert!(is_nonintersecting(r.black().paths()));
        prop_assert_eq!(r.weight(), ov.weight());
        let again: Vec<_> = chosen.iter().map(|b| trace_bicoloured(&r, b.from.x, b.from.level).unwrap()).collect();
        prop_assert_eq!(recolour(&r, &again).unwrap(), ov.normalised());
    }
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 48, max_global_rejects: 1 << 16, ..ProptestConfig::default() })]

    #[test]
    fn recolouring_identity_holds(seed in any::<u64>(), mask in 1u32..64, n in 1u32..=3) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let w = random_embedded(&mut rng, 5, 1);
        let mut b = random_embedded(&mut rng, 5, 1);
        b.shift = w.shift + (seed % 5) as i64 - 2;
        let c = CircularConfiguration::from_endpoints(&w.endpoints(2).unwrap(), &b.endpoints(2).unwrap());
        let Ok(c) = c else { return Ok(()) };
        prop_assume!(!c.is_empty() && c.is_alternating());
        let s: Vec<(i64, Level)> = c
            .points
            .iter()
            .filter(|p| p.orientation == Orientation::Inward)
            .enumerate()
            .filter(|(i, _)| mask >> (i % 6) & 1 == 1)
            .map(|(_, p)| (p.x, p.level))
            .collect();
        prop_assume!(!s.is_empty());
        let id = theorem_identity(&w, &b, &s, Some(n)).unwrap();
        let r = verify_identity(&id, identities::Strategy::Full, Execution::Sequential);
        prop_assert_eq!(r.verdict, Verdict::Pass, "{:?}", r.witness);
    }

    #[test]
    fn border_strip_identity_holds((lam, s) in partition_with_strips(5, 6), seed in any::<u64>()) {
        let g = gps_identity(&lam, &Partition::empty(), &s).unwrap();
        let r = verify_identity(&g.identity, identities::Strategy::Multipoint { count: 4, seed }, Execution::Sequential);
        prop_assert_eq!(r.verdict, Verdict::Pass, "{:?}", r.witness);
    }
}
