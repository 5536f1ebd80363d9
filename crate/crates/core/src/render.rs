//! SVG drawings of overlays, circular configurations and Ferrers diagrams.
//!
//! White paths are dashed, black paths solid, highlighted bicoloured paths
//! thick grey, and doubled endpoints sit in grey boxes.

use std::f64::consts::PI;
use std::fmt::Write;

use crate::error::{Error, Result};
use crate::overlay::{BicolouredPath, CircularConfiguration, Colour, Level, Matching, Orientation, Overlay};
use crate::partition::SkewShape;
use crate::paths::{LatticePath, Point};

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct RenderSpec {
    scale: f64,
}

impl RenderSpec {
    /// `scale` is the number of pixels per lattice unit.
    pub fn new(scale: f64) -> Result<Self> {
        if scale.is_finite() && scale > 0.0 {
            Ok(RenderSpec { scale })
        } else {
            Err(Error::NonPositiveScale)
        }
    }

    pub fn scale(&self) -> f64 {
        self.scale
    }
}

impl Default for RenderSpec {
    fn default() -> Self {
        RenderSpec { scale: 24.0 }
    }
}

const MARGIN: f64 = 1.0;

fn header(out: &mut String, width: f64, height: f64) {
    let _ = writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{width:.1}" height="{height:.1}" viewBox="0 0 {width:.1} {height:.1}">"#
    );
}

struct Frame {
    xmin: i64,
    n: u32,
    scale: f64,
}

impl Frame {
    fn px(&self, p: Point) -> (f64, f64) {
        let x = (MARGIN + (p.x - self.xmin) as f64) * self.scale;
        let y = (MARGIN + f64::from(self.n - p.y)) * self.scale;
        (x, y)
    }

    fn polyline(&self, pts: impl IntoIterator<Item = Point>) -> String {
        pts.into_iter()
            .map(|p| {
                let (x, y) = self.px(p);
                format!("{x:.1},{y:.1}")
            })
            .collect::<Vec<_>>()
            .join(" ")
    }
}

/// Draws both families of `ov`, the highlighted bicoloured paths on top.
pub fn render_overlay(ov: &Overlay, highlight: &[BicolouredPath], spec: &RenderSpec) -> String {
    let n = ov.n();
    let all: Vec<&LatticePath> = ov.white().paths().iter().chain(ov.black().paths()).collect();
    let xs = all.iter().flat_map(|p| p.points().map(|q| q.x).collect::<Vec<_>>());
    let (xmin, xmax) = xs.fold((0, 0), |(lo, hi), x| (lo.min(x), hi.max(x)));
    let frame = Frame { xmin, n, scale: spec.scale };
    let width = (2.0 * MARGIN + (xmax - xmin) as f64) * spec.scale;
    let height = (2.0 * MARGIN + f64::from(n - 1)) * spec.scale;
    let mut out = String::new();
    header(&mut out, width, height);
    let _ = writeln!(out, r#"<g class="axes" stroke="rgb(200,200,200)" stroke-width="0.5">"#);
    for y in 1..=n {
        let (x0, py) = frame.px(Point::new(xmin, y));
        let (x1, _) = frame.px(Point::new(xmax, y));
        let _ = writeln!(out, r#"<line x1="{x0:.1}" y1="{py:.1}" x2="{x1:.1}" y2="{py:.1}"/>"#);
    }
    let _ = writeln!(out, "</g>");

    let _ = writeln!(out, r#"<g class="highlight" fill="none" stroke="rgb(160,160,160)" stroke-width="{:.1}">"#, spec.scale * 0.4);
    for b in highlight {
        let _ = writeln!(out, r#"<polyline points="{}"/>"#, frame.polyline(b.points(n)));
    }
    let _ = writeln!(out, "</g>");

    for (class, fam, dash) in [("white", ov.white(), r#" stroke-dasharray="4,3""#), ("black", ov.black(), "")] {
        let _ = writeln!(out, r#"<g class="{class}" fill="none" stroke="black" stroke-width="1.5"{dash}>"#);
        for p in fam.paths() {
            let _ = writeln!(out, r#"<polyline points="{}"/>"#, frame.polyline(p.points()));
        }
        let _ = writeln!(out, "</g>");
    }

    let c = ov.configuration();
    let half = spec.scale * 0.3;
    let _ = writeln!(out, r#"<g class="doubled" fill="none" stroke="rgb(160,160,160)">"#);
    for (xs, level) in [(&c.doubled_top, Level::Top), (&c.doubled_bottom, Level::Bottom)] {
        for &x in xs {
            let (px, py) = frame.px(Point::new(x, level.y(n)));
            let _ = writeln!(
                out,
                r#"<rect x="{:.1}" y="{:.1}" width="{:.1}" height="{:.1}"/>"#,
                px - half,
                py - half,
                2.0 * half,
                2.0 * half
            );
        }
    }
    let _ = writeln!(out, "</g>");
    let _ = writeln!(out, r#"<g class="coloured" stroke="black">"#);
    for p in &c.points {
        let (px, py) = frame.px(Point::new(p.x, p.level.y(n)));
        let fill = match p.colour {
            Colour::White => "white",
            Colour::Black => "black",
        };
        let _ = writeln!(out, r#"<circle cx="{px:.1}" cy="{py:.1}" r="{:.1}" fill="{fill}"/>"#, spec.scale * 0.15);
    }
    let _ = writeln!(out, "</g>");
    out.push_str("</svg>\n");
    out
}

/// Coloured points on a circle in circular order, with an arrow for the
/// orientation and a chord for each matching edge.
pub fn render_configuration(c: &CircularConfiguration, matching: Option<&Matching>, spec: &RenderSpec) -> String {
    let radius = 4.0 * spec.scale;
    let size = 2.0 * (radius + 2.0 * spec.scale);
    let centre = size / 2.0;
    let m = c.len().max(1) as f64;
    let at = |index: usize, r: f64| {
        let angle = PI / 2.0 - 2.0 * PI * (index as f64 - 0.5) / m;
        (centre + r * angle.cos(), centre - r * angle.sin())
    };
    let mut out = String::new();
    header(&mut out, size, size);
    let _ = writeln!(
        out,
        r#"<circle class="boundary" cx="{centre:.1}" cy="{centre:.1}" r="{radius:.1}" fill="none" stroke="rgb(200,200,200)"/>"#
    );
    let _ = writeln!(out, r#"<g class="matching" stroke="rgb(160,160,160)" stroke-width="2">"#);
    for &(a, b) in matching.map_or(&[][..], |mm| mm.edges.as_slice()) {
        let (x1, y1) = at(a, radius);
        let (x2, y2) = at(b, radius);
        let _ = writeln!(out, r#"<line x1="{x1:.1}" y1="{y1:.1}" x2="{x2:.1}" y2="{y2:.1}"/>"#);
    }
    let _ = writeln!(out, "</g>");
    let _ = writeln!(out, r#"<g class="points" stroke="black">"#);
    for p in &c.points {
        let (x, y) = at(p.index, radius);
        let (inner, outer) = (at(p.index, radius - 0.6 * spec.scale), at(p.index, radius + 0.6 * spec.scale));
        let (from, to) = match p.orientation {
            Orientation::Inward => (outer, inner),
            Orientation::Outward => (inner, outer),
        };
        let fill = match p.colour {
            Colour::White => "white",
            Colour::Black => "black",
        };
        let _ = writeln!(
            out,
            r#"<line x1="{:.1}" y1="{:.1}" x2="{:.1}" y2="{:.1}"/><circle cx="{x:.1}" cy="{y:.1}" r="{:.1}" fill="{fill}"/>"#,
            from.0,
            from.1,
            to.0,
            to.1,
            spec.scale * 0.2
        );
    }
    let _ = writeln!(out, "</g>");
    out.push_str("</svg>\n");
    out
}

/// Drawing style of one diagram in [`render_ferrers`].
#[derive(Clone, Debug, PartialEq)]
pub struct FerrersStyle {
    pub stroke: String,
    pub width: f64,
}

impl FerrersStyle {
    pub fn grey() -> Self {
        FerrersStyle { stroke: "rgb(160,160,160)".into(), width: 3.0 }
    }

    pub fn black() -> Self {
        FerrersStyle { stroke: "black".into(), width: 1.0 }
    }
}

/// Left-justified cell grids, rows downwards, all on one board.
pub fn render_ferrers(shapes: &[(SkewShape, FerrersStyle)], spec: &RenderSpec) -> String {
    let cols = shapes.iter().map(|(s, _)| s.outer().row(1)).max().unwrap_or(0);
    let rows = shapes.iter().map(|(s, _)| s.outer().len()).max().unwrap_or(0);
    let width = (2.0 * MARGIN + f64::from(cols)) * spec.scale;
    let height = (2.0 * MARGIN + rows as f64) * spec.scale;
    let mut out = String::new();
    header(&mut out, width, height);
    for (shape, style) in shapes {
        let _ = writeln!(
            out,
            r#"<g class="ferrers" fill="none" stroke="{}" stroke-width="{:.1}">"#,
            style.stroke, style.width
        );
        for row in 1..=shape.outer().len() {
            for col in shape.inner().row(row)..shape.outer().row(row) {
                let _ = writeln!(
                    out,
                    r#"<rect x="{:.1}" y="{:.1}" width="{:.1}" height="{:.1}"/>"#,
                    (MARGIN + f64::from(col)) * spec.scale,
                    (MARGIN + (row - 1) as f64) * spec.scale,
                    spec.scale,
                    spec.scale
                );
            }
        }
        let _ = writeln!(out, "</g>");
    }
    out.push_str("</svg>\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partition::Partition;

    #[test]
    fn scale_must_be_positive() {
        assert_eq!(RenderSpec::new(0.0), Err(Error::NonPositiveScale));
        assert_eq!(RenderSpec::new(f64::NAN), Err(Error::NonPositiveScale));
        assert_eq!(RenderSpec::new(3.0).unwrap().scale(), 3.0);
    }

    #[test]
    fn ferrers_cells() {
        let s = SkewShape::straight(Partition::new([2i64, 1]).unwrap());
        let svg = render_ferrers(&[(s, FerrersStyle::black())], &RenderSpec::default());
        assert_eq!(svg.matches("<rect").count(), 3);
        let svg = render_ferrers(&[(SkewShape::default(), FerrersStyle::grey())], &RenderSpec::default());
        assert!(svg.contains(r#"<g class="ferrers""#));
        assert_eq!(svg.matches("<rect").count(), 0);
    }
}
