//! SVG diagrams of representations: one row per vertex, a horizontal
//! segment for its interval and a dot for its point.

use std::fmt::Write;

use num_traits::ToPrimitive;

use crate::repr::{AnyRep, Rational};

const SPAN: f64 = 1000.0;
const LEFT: f64 = 60.0;
const RIGHT: f64 = 40.0;
const TOP: f64 = 30.0;
const ROW: f64 = 30.0;

/// Deterministic SVG document for `rep`. Coordinates are scaled so the
/// whole representation spans 1000 user units.
pub fn render_svg(rep: &AnyRep) -> String {
    let rows: Vec<(Rational, Rational, Mark)> = match rep {
        AnyRep::Point(r) => r
            .vertices()
            .iter()
            .map(|v| (v.a.clone(), v.b.clone(), Mark::Point(v.p.clone())))
            .collect(),
        AnyRep::Tolerance(r) => r
            .vertices()
            .iter()
            .map(|v| (v.a.clone(), v.b.clone(), Mark::Tolerance(v.t.clone())))
            .collect(),
    };
    let lo = rows.iter().map(|r| &r.0).min().cloned();
    let hi = rows.iter().map(|r| &r.1).max().cloned();
    let x = |c: &Rational| -> f64 {
        match (&lo, &hi) {
            (Some(lo), Some(hi)) if hi > lo => {
                let t = ((c - lo) / (hi - lo)).to_f64().unwrap_or(0.0);
                LEFT + t * SPAN
            }
            _ => LEFT + SPAN / 2.0,
        }
    };
    let width = LEFT + SPAN + RIGHT;
    let height = TOP * 2.0 + ROW * rows.len().saturating_sub(1) as f64;

    let mut out = String::new();
    let _ = writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}" viewBox="0 0 {width} {height}">"#
    );
    let _ = writeln!(out, r#"<rect width="100%" height="100%" fill="white"/>"#);
    for (v, (a, b, mark)) in rows.iter().enumerate() {
        let y = TOP + ROW * v as f64;
        let _ = writeln!(
            out,
            r#"<text x="{:.3}" y="{:.3}" font-family="sans-serif" font-size="14" text-anchor="end">v{}</text>"#,
            LEFT - 20.0,
            y + 5.0,
            v + 1
        );
        let _ = writeln!(
            out,
            r#"<line class="interval" x1="{:.3}" y1="{y:.3}" x2="{:.3}" y2="{y:.3}" stroke="black" stroke-width="2"/>"#,
            x(a),
            x(b)
        );
        match mark {
            Mark::Point(p) => {
                let _ = writeln!(
                    out,
                    r#"<circle class="point" cx="{:.3}" cy="{y:.3}" r="4" fill="crimson"/>"#,
                    x(p)
                );
            }
            Mark::Tolerance(t) => {
                let _ = writeln!(
                    out,
                    r#"<text class="tolerance" x="{:.3}" y="{:.3}" font-family="sans-serif" font-size="11">t={t}</text>"#,
                    x(b) + 6.0,
                    y + 4.0
                );
            }
        }
    }
    out.push_str("</svg>\n");
    out
}

enum Mark {
    Point(Rational),
    Tolerance(Rational),
}
