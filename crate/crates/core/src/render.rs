//! SVG strips of Gray code listings: one panel per rectangulation, filled by
//! rectangle index and captioned by its gamma-preimage.

use std::fmt::Write;

use crate::floorplan::Floorplan;
use crate::permlang::{rho_boxes, Permutation};

const PANEL: f64 = 60.0;
const GAP: f64 = 14.0;
const CAPTION: f64 = 14.0;
const PER_ROW: usize = 12;
const PALETTE: [&str; 12] = [
    "#e6194b", "#3cb44b", "#ffe119", "#4363d8", "#f58231", "#911eb4", "#46f0f0", "#f032e6",
    "#bcf60c", "#fabebe", "#008080", "#e6beff",
];

/// How panel geometry is chosen.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Layout {
    /// Walls placed on the integer grid by their order.
    Grid,
    /// Every rectangle meets the diagonal in a segment of equal length.
    Diagonal,
}

pub struct Panel {
    pub code: Vec<usize>,
    pub perm: Permutation,
    /// Shown with a `*` after the caption.
    pub marked: bool,
}

/// Boxes with y pointing down, scaled to the unit square.
fn boxes(p: &Panel, layout: Layout) -> Vec<[f64; 4]> {
    let raw = match layout {
        Layout::Grid => Floorplan::from_code(&p.code).expect("valid code").layout(),
        Layout::Diagonal => rho_boxes(&p.perm),
    };
    let w = raw.iter().map(|b| b[2]).max().unwrap_or(1) as f64;
    let h = raw.iter().map(|b| b[3]).max().unwrap_or(1) as f64;
    raw.iter()
        .map(|b| {
            [
                b[0] as f64 / w,
                1.0 - b[3] as f64 / h,
                b[2] as f64 / w,
                1.0 - b[1] as f64 / h,
            ]
        })
        .collect()
}

fn strip_height(panels: usize) -> f64 {
    panels.div_ceil(PER_ROW).max(1) as f64 * (PANEL + CAPTION + GAP) + 2.0 * CAPTION
}

/// One SVG document with a strip per `(title, panels)` entry, stacked
/// vertically. Output depends only on the input.
pub fn render_strips(strips: &[(String, Vec<Panel>)], layout: Layout) -> String {
    let width = PER_ROW as f64 * (PANEL + GAP) + GAP;
    let height: f64 = strips
        .iter()
        .map(|(_, ps)| strip_height(ps.len()))
        .sum::<f64>()
        + GAP;
    let mut s = String::new();
    writeln!(
        s,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}" viewBox="0 0 {width} {height}" font-family="sans-serif">"#
    )
    .unwrap();
    let mut y0 = GAP;
    for (title, panels) in strips {
        writeln!(
            s,
            r#"<g class="strip"><text x="{GAP}" y="{}" font-size="12">{title}</text>"#,
            y0 + 10.0
        )
        .unwrap();
        for (i, p) in panels.iter().enumerate() {
            let x = GAP + (i % PER_ROW) as f64 * (PANEL + GAP);
            let y = y0 + 2.0 * CAPTION + (i / PER_ROW) as f64 * (PANEL + CAPTION + GAP);
            writeln!(s, r#"<g class="panel" transform="translate({x},{y})">"#).unwrap();
            for (k, b) in boxes(p, layout).iter().enumerate() {
                let (bx, by) = (b[0] * PANEL, b[1] * PANEL);
                let (bw, bh) = ((b[2] - b[0]) * PANEL, (b[3] - b[1]) * PANEL);
                writeln!(
                    s,
                    r##"<rect x="{bx:.2}" y="{by:.2}" width="{bw:.2}" height="{bh:.2}" fill="{}" stroke="#000" stroke-width="0.8"/>"##,
                    PALETTE[k % PALETTE.len()]
                )
                .unwrap();
                writeln!(
                    s,
                    r#"<text x="{:.2}" y="{:.2}" font-size="7" text-anchor="middle">{}</text>"#,
                    bx + bw / 2.0,
                    by + bh / 2.0 + 2.5,
                    k + 1
                )
                .unwrap();
            }
            let star = if p.marked { " *" } else { "" };
            writeln!(
                s,
                r#"<text class="caption" x="{}" y="{}" font-size="9" text-anchor="middle">{}{star}</text></g>"#,
                PANEL / 2.0,
                PANEL + 11.0,
                p.perm
            )
            .unwrap();
        }
        s.push_str("</g>\n");
        y0 += strip_height(panels.len());
    }
    s.push_str("</svg>\n");
    s
}
