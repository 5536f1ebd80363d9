mod common;

use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use common::{load_overlay, random_overlay, random_skew};
use skewschur::overlay::{all_bicoloured, enumerate_admissible_matchings, trace_bicoloured, Level};
use skewschur::render::{render_configuration, render_ferrers, render_overlay, FerrersStyle, RenderSpec};

fn group_children(svg: &str, class: &str, tag: &str) -> usize {
    let doc = roxmltree::Document::parse(svg).expect("well-formed svg");
    doc.descendants()
        .filter(|n| n.has_tag_name("g") && n.attribute("class") == Some(class))
        .flat_map(|g| g.children().filter(|c| c.has_tag_name(tag)).collect::<Vec<_>>())
        .count()
}

#[test]
fn small_overlay_with_highlights() {
    let ov = load_overlay("recolouring_small.json");
    let chosen = vec![
        trace_bicoloured(&ov, 7, Level::Top).unwrap(),
        trace_bicoloured(&ov, -1, Level::Bottom).unwrap(),
    ];
    let svg = render_overlay(&ov, &chosen, &RenderSpec::default());
    assert_eq!(group_children(&svg, "white", "polyline"), 7);
    assert_eq!(group_children(&svg, "black", "polyline"), 7);
    assert_eq!(group_children(&svg, "highlight", "polyline"), 2);
    assert_eq!(group_children(&svg, "coloured", "circle"), ov.configuration().len());
    let c = ov.configuration();
    assert_eq!(group_children(&svg, "doubled", "rect"), c.doubled_top.len() + c.doubled_bottom.len());
    assert_eq!(group_children(&svg, "axes", "line"), 8);
}

#[test]
fn white_paths_are_dashed() {
    let ov = load_overlay("recolouring_large.json");
    let svg = render_overlay(&ov, &[], &RenderSpec::default());
    let doc = roxmltree::Document::parse(&svg).unwrap();
    let group = |class| doc.descendants().find(|n| n.attribute("class") == Some(class)).unwrap();
    assert!(group("white").attribute("stroke-dasharray").is_some());
    assert!(group("black").attribute("stroke-dasharray").is_none());
}

#[test]
fn scale_sets_the_canvas() {
    let ov = load_overlay("recolouring_small.json");
    let size = |scale| {
        let svg = render_overlay(&ov, &[], &RenderSpec::new(scale).unwrap());
        let doc = roxmltree::Document::parse(&svg).unwrap();
        let root = doc.root_element();
        let num = |a| root.attribute(a).unwrap().parse::<f64>().unwrap();
        (num("width"), num("height"))
    };
    let (w1, h1) = size(10.0);
    let (w2, h2) = size(20.0);
    assert!((w2 - 2.0 * w1).abs() < 1e-6 && (h2 - 2.0 * h1).abs() < 1e-6);
    // 8 levels and a unit margin on each side.
    assert!((h1 - 90.0).abs() < 1e-6);
}

#[test]
fn configuration_with_matching() {
    let ov = load_overlay("recolouring_large.json");
    let c = ov.configuration();
    let m = &enumerate_admissible_matchings(c).unwrap()[0];
    let svg = render_configuration(c, Some(m), &RenderSpec::default());
    assert_eq!(group_children(&svg, "matching", "line"), c.len() / 2);
    assert_eq!(group_children(&svg, "points", "circle"), c.len());
    let bare = render_configuration(c, None, &RenderSpec::default());
    assert_eq!(group_children(&bare, "matching", "line"), 0);
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn overlay_element_counts(seed in any::<u64>(), n in 2u32..=4) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let ov = random_overlay(&mut rng, 6, n);
        let (paths, _) = all_bicoloured(&ov).unwrap();
        let svg = render_overlay(&ov, &paths, &RenderSpec::default());
        prop_assert_eq!(group_children(&svg, "white", "polyline"), ov.white().paths().len());
        prop_assert_eq!(group_children(&svg, "black", "polyline"), ov.black().paths().len());
        prop_assert_eq!(group_children(&svg, "highlight", "polyline"), paths.len());
        prop_assert_eq!(group_children(&svg, "coloured", "circle"), ov.configuration().len());
        prop_assert_eq!(group_children(&svg, "axes", "line"), n as usize);
    }

    #[test]
    fn one_rect_per_cell(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let a = random_skew(&mut rng, 8);
        let b = random_skew(&mut rng, 8);
        let svg = render_ferrers(&[(a.clone(), FerrersStyle::grey()), (b.clone(), FerrersStyle::black())], &RenderSpec::default());
        prop_assert_eq!(group_children(&svg, "ferrers", "rect") as u64, a.size() + b.size());
    }
}
