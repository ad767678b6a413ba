//! Scatter plot of a root inventory on the chart plane.

use std::fmt::Write;

use mixedpoly::RootInventory;

const SIZE: f64 = 800.0;
const MARGIN: f64 = 40.0;
const MIN_DOT: f64 = 4.0;

pub fn render(inv: &RootInventory) -> String {
    let extent = inv.search_radius.max(f64::MIN_POSITIVE);
    let scale = (SIZE / 2.0 - MARGIN) / extent;
    let x = |re: f64| SIZE / 2.0 + re * scale;
    let y = |im: f64| SIZE / 2.0 - im * scale;

    let mut out = String::new();
    let _ = writeln!(out, r#"<?xml version="1.0" encoding="UTF-8"?>"#);
    let _ = writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="800" height="800" viewBox="0 0 800 800">"#
    );
    let _ = writeln!(out, r#"  <rect x="0" y="0" width="800" height="800" fill="white"/>"#);
    let _ = writeln!(
        out,
        r##"  <rect x="{m}" y="{m}" width="{w}" height="{w}" fill="none" stroke="#bbbbbb"/>"##,
        m = MARGIN,
        w = SIZE - 2.0 * MARGIN
    );
    let _ = writeln!(out, r##"  <line x1="{MARGIN}" y1="400" x2="{}" y2="400" stroke="#888888"/>"##, SIZE - MARGIN);
    let _ = writeln!(out, r##"  <line x1="400" y1="{MARGIN}" x2="400" y2="{}" stroke="#888888"/>"##, SIZE - MARGIN);
    let _ = writeln!(
        out,
        r#"  <text x="{}" y="395" font-family="monospace" font-size="12" text-anchor="end">{extent:.4}</text>"#,
        SIZE - MARGIN
    );
    let _ = writeln!(
        out,
        r#"  <text x="405" y="{}" font-family="monospace" font-size="12">{extent:.4}i</text>"#,
        MARGIN + 12.0
    );
    for r in &inv.roots {
        let (cx, cy) = (x(r.estimate.re), y(r.estimate.im));
        let radius = (r.root_box.circumradius() * scale).max(MIN_DOT);
        let colour = match r.index {
            0 => "#999999",
            i if i > 0 => "#1f5fbf",
            _ => "#bf3f1f",
        };
        let _ = writeln!(
            out,
            r#"  <circle cx="{cx:.3}" cy="{cy:.3}" r="{radius:.3}" fill="{colour}" fill-opacity="0.6"/>"#
        );
        let _ = writeln!(
            out,
            r#"  <text x="{:.3}" y="{:.3}" font-family="monospace" font-size="14">{}</text>"#,
            cx + radius + 3.0,
            cy - radius - 3.0,
            r.index
        );
    }
    out.push_str("</svg>\n");
    out
}
