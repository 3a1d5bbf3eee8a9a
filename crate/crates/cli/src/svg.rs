//! Fixed-style SVG rendering of a chain on the integer grid.

use std::fmt::Write;

use turnreach_core::{BoundingBox, Chain, Point};

pub const UNIT: i64 = 20;
const MARGIN: i64 = 1;

pub fn render(chain: &Chain, title: &str) -> String {
    let mut pts = chain.bends.clone();
    pts.push(Point::ORIGIN);
    let bb = BoundingBox::of(&pts);
    let (x0, x1) = (bb.xmin - MARGIN, bb.xmax + MARGIN);
    let (y0, y1) = (bb.ymin - MARGIN, bb.ymax + MARGIN);
    let (w, h) = ((x1 - x0) * UNIT, (y1 - y0) * UNIT);
    let sx = |x: i64| (x - x0) * UNIT;
    let sy = |y: i64| (y1 - y) * UNIT;

    let mut s = String::new();
    s.push_str("<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n");
    let _ = writeln!(s, "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{w}\" height=\"{h}\" viewBox=\"0 0 {w} {h}\">");
    let _ = writeln!(s, "  <title>{}</title>", escape(title));
    let _ = writeln!(s, "  <rect x=\"0\" y=\"0\" width=\"{w}\" height=\"{h}\" fill=\"#ffffff\"/>");
    s.push_str("  <g stroke=\"#e4e4e4\" stroke-width=\"1\">\n");
    for x in x0..=x1 {
        let _ = writeln!(s, "    <line x1=\"{0}\" y1=\"0\" x2=\"{0}\" y2=\"{h}\"/>", sx(x));
    }
    for y in y0..=y1 {
        let _ = writeln!(s, "    <line x1=\"0\" y1=\"{0}\" x2=\"{w}\" y2=\"{0}\"/>", sy(y));
    }
    s.push_str("  </g>\n");
    s.push_str("  <g stroke=\"#7a7a7a\" stroke-width=\"2\">\n");
    let _ = writeln!(s, "    <line x1=\"0\" y1=\"{0}\" x2=\"{w}\" y2=\"{0}\"/>", sy(0));
    let _ = writeln!(s, "    <line x1=\"{0}\" y1=\"0\" x2=\"{0}\" y2=\"{h}\"/>", sx(0));
    s.push_str("  </g>\n");
    let points: Vec<String> = chain.bends.iter().map(|p| format!("{},{}", sx(p.x), sy(p.y))).collect();
    let _ = writeln!(
        s,
        "  <polyline points=\"{}\" fill=\"none\" stroke=\"#1f4e9a\" stroke-width=\"3\" stroke-linejoin=\"miter\"/>",
        points.join(" ")
    );
    let o = chain.start();
    let _ = writeln!(s, "  <circle cx=\"{}\" cy=\"{}\" r=\"5\" fill=\"#2a9d3a\"/>", sx(o.x), sy(o.y));
    let p = chain.end();
    let _ = writeln!(s, "  <rect x=\"{}\" y=\"{}\" width=\"10\" height=\"10\" fill=\"#c0392b\"/>", sx(p.x) - 5, sy(p.y) - 5);
    s.push_str("</svg>\n");
    s
}

fn escape(t: &str) -> String {
    t.replace('&', "&amp;").replace('<', "&lt;").replace('>', "&gt;")
}
