//! SVG drawings of bounded trees.
//!
//! Edges are colored by their hop distance from the center, cycling through a
//! fixed 16-color palette; centers are drawn as filled squares.

use std::fmt::Write as _;
use std::fs;
use std::path::Path;

use powertree_core::{BoundedTree, Instance};

use crate::{Error, Result};

pub const PALETTE: [&str; 16] = [
    "#1f77b4", "#ff7f0e", "#2ca02c", "#d62728", "#9467bd", "#8c564b", "#e377c2", "#7f7f7f",
    "#bcbd22", "#17becf", "#393b79", "#637939", "#8c6d31", "#843c39", "#7b4173", "#3182bd",
];

const CANVAS: f64 = 800.0;
const MARGIN: f64 = 20.0;

/// Palette entry for the edge from `v` to its parent. The edge joining two
/// centers shares the color of the first level.
pub fn edge_color(tree: &BoundedTree, v: usize) -> &'static str {
    PALETTE[tree.level(v).saturating_sub(1) % PALETTE.len()]
}

pub fn svg_string(tree: &BoundedTree, inst: &Instance) -> String {
    let pts = inst.points();
    // The unit square plus any stray point.
    let (mut x0, mut y0, mut x1, mut y1) = (0.0f64, 0.0f64, 1.0f64, 1.0f64);
    for p in pts {
        x0 = x0.min(p.x);
        y0 = y0.min(p.y);
        x1 = x1.max(p.x);
        y1 = y1.max(p.y);
    }
    let scale = (CANVAS - 2.0 * MARGIN) / (x1 - x0).max(y1 - y0);
    let sx = |x: f64| MARGIN + (x - x0) * scale;
    let sy = |y: f64| CANVAS - MARGIN - (y - y0) * scale;

    let mut out = String::new();
    writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{CANVAS}" height="{CANVAS}" viewBox="0 0 {CANVAS} {CANVAS}">"#
    )
    .unwrap();
    writeln!(out, r#"<rect width="100%" height="100%" fill="white"/>"#).unwrap();
    writeln!(out, r#"<g stroke-width="1.5" stroke-linecap="round">"#).unwrap();
    for (v, p) in tree.edges() {
        writeln!(
            out,
            r#"<line x1="{:.2}" y1="{:.2}" x2="{:.2}" y2="{:.2}" stroke="{}"/>"#,
            sx(pts[v].x),
            sy(pts[v].y),
            sx(pts[p].x),
            sy(pts[p].y),
            edge_color(tree, v)
        )
        .unwrap();
    }
    writeln!(out, "</g>").unwrap();
    writeln!(out, r#"<g fill="black">"#).unwrap();
    for (v, p) in pts.iter().enumerate() {
        if tree.is_center(v) {
            writeln!(
                out,
                r#"<rect class="center" x="{:.2}" y="{:.2}" width="9" height="9" fill="crimson"/>"#,
                sx(p.x) - 4.5,
                sy(p.y) - 4.5
            )
            .unwrap();
        } else {
            writeln!(
                out,
                r#"<circle cx="{:.2}" cy="{:.2}" r="2.5"/>"#,
                sx(p.x),
                sy(p.y)
            )
            .unwrap();
        }
    }
    writeln!(out, "</g>").unwrap();
    writeln!(out, "</svg>").unwrap();
    out
}

pub fn render_svg(tree: &BoundedTree, inst: &Instance, path: impl AsRef<Path>) -> Result<()> {
    let path = path.as_ref();
    fs::write(path, svg_string(tree, inst)).map_err(|e| Error::io(path, e))
}

/// `{D}_{n}_{nr}_{algo}.svg`
pub fn file_name(hop_bound: usize, n: usize, nr: usize, algo: &str) -> String {
    format!("{hop_bound}_{n}_{nr}_{algo}.svg")
}
