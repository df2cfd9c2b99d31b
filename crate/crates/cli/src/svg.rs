//! SVG figures. Coordinates are transformed exactly and only then printed as
//! decimals; nothing here feeds back into verification.

use std::cmp::Ordering;
use std::fmt::Write;

use equidissect::constructions::DissectionDocument;
use equidissect::geom::Point;
use equidissect::Scalar;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RenderOptions {
    pub width_px: u32,
    pub margin_px: u32,
    pub decimal_digits: usize,
    pub label_faces: bool,
}

impl RenderOptions {
    pub fn new(width_px: u32, margin_px: u32, decimal_digits: usize, label_faces: bool) -> Result<Self, String> {
        if width_px < 64 {
            return Err(format!("width must be at least 64 px, got {width_px}"));
        }
        if 2 * margin_px >= width_px {
            return Err(format!("margin {margin_px} leaves no room in width {width_px}"));
        }
        if decimal_digits < 4 {
            return Err(format!("need at least 4 decimal digits, got {decimal_digits}"));
        }
        Ok(RenderOptions { width_px, margin_px, decimal_digits, label_faces })
    }
}

/// Fixed-point decimal without trailing zeros.
fn decimal<T: Scalar>(v: &T, digits: usize) -> String {
    let text = v.to_decimal(digits);
    let text = if text.contains('.') { text.trim_end_matches('0').trim_end_matches('.') } else { &text };
    match text {
        "-0" => "0".to_string(),
        t => t.to_string(),
    }
}

fn extreme<'a, T: Scalar>(values: impl Iterator<Item = &'a T>, want: Ordering) -> T {
    values
        .reduce(|best, v| if v.exact_cmp(best) == want { v } else { best })
        .expect("polygons have vertices")
        .clone()
}

/// Maps the polygon's bounding box into the canvas, y axis pointing up.
struct Frame<T> {
    min_x: T,
    max_y: T,
    scale: T,
    margin: T,
    height: T,
}

impl<T: Scalar> Frame<T> {
    fn fit(outline: &[Point<T>], opts: &RenderOptions) -> Self {
        let min_x = extreme(outline.iter().map(|p| &p.x), Ordering::Less);
        let max_x = extreme(outline.iter().map(|p| &p.x), Ordering::Greater);
        let min_y = extreme(outline.iter().map(|p| &p.y), Ordering::Less);
        let max_y = extreme(outline.iter().map(|p| &p.y), Ordering::Greater);
        let (dx, dy) = (max_x.sub_ref(&min_x), max_y.sub_ref(&min_y));
        let span = if dx.exact_cmp(&dy).is_ge() { dx } else { dy.clone() };
        let margin = T::from_integer(opts.margin_px as i64);
        let inner = T::from_integer(opts.width_px as i64 - 2 * opts.margin_px as i64);
        let scale = inner.div_ref(&span);
        let height = margin.add_ref(&margin).add_ref(&dy.mul_ref(&scale));
        Frame { min_x, max_y, scale, margin, height }
    }

    fn map(&self, p: &Point<T>) -> (T, T) {
        (
            self.margin.add_ref(&p.x.sub_ref(&self.min_x).mul_ref(&self.scale)),
            self.margin.add_ref(&self.max_y.sub_ref(&p.y).mul_ref(&self.scale)),
        )
    }
}

fn points_attr<'a, T: Scalar>(
    frame: &Frame<T>,
    points: impl Iterator<Item = &'a Point<T>>,
    digits: usize,
) -> String {
    points
        .map(|p| {
            let (x, y) = frame.map(p);
            format!("{},{}", decimal(&x, digits), decimal(&y, digits))
        })
        .collect::<Vec<_>>()
        .join(" ")
}

pub fn render_svg<T: Scalar>(doc: &DissectionDocument<T>, opts: &RenderOptions) -> String {
    let outline = doc.polygon.vertices();
    let frame = Frame::fit(outline, opts);
    let digits = opts.decimal_digits;
    let width = opts.width_px;
    let height = decimal(&frame.height, digits);
    let mut svg = String::new();
    let _ = writeln!(svg, r#"<?xml version="1.0" encoding="UTF-8"?>"#);
    let _ = writeln!(
        svg,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}" viewBox="0 0 {width} {height}">"#
    );
    let _ = writeln!(svg, r#"  <rect width="100%" height="100%" fill="white"/>"#);
    let _ = writeln!(svg, r##"  <g fill="none" stroke="#d62728" stroke-width="1" stroke-linejoin="round">"##);
    for face in &doc.faces {
        let _ = writeln!(svg, r#"    <polygon points="{}"/>"#, points_attr(&frame, face.vertices.iter(), digits));
    }
    let _ = writeln!(svg, "  </g>");
    let _ = writeln!(
        svg,
        r#"  <polygon points="{}" fill="none" stroke="black" stroke-width="2" stroke-linejoin="round"/>"#,
        points_attr(&frame, outline.iter(), digits)
    );
    if opts.label_faces {
        let size = (width / 60).max(8);
        let _ = writeln!(
            svg,
            r##"  <g font-family="sans-serif" font-size="{size}" text-anchor="middle" dominant-baseline="central" fill="#333333">"##
        );
        for (i, face) in doc.faces.iter().enumerate() {
            let (x, y) = frame.map(&face.centroid());
            let _ = writeln!(svg, r#"    <text x="{}" y="{}">{i}</text>"#, decimal(&x, digits), decimal(&y, digits));
        }
        let _ = writeln!(svg, "  </g>");
    }
    svg.push_str("</svg>\n");
    svg
}
