//! Deterministic SVG rendering of a representation.

use std::fmt::Write;

use crate::point::to_f64;
use crate::{crossing_profile, ContourWitness, StringRep};

#[derive(Debug, Clone)]
pub struct SvgOptions {
    /// Output width and height in pixels.
    pub size: f64,
    pub mark_crossings: bool,
    pub label_curves: bool,
}

impl Default for SvgOptions {
    fn default() -> Self {
        SvgOptions { size: 600.0, mark_crossings: false, label_curves: true }
    }
}

const PALETTE: [&str; 8] = ["#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#17becf", "#8c564b", "#e377c2"];

pub fn emit_svg(rep: &StringRep, opts: &SvgOptions) -> String {
    let mut pts: Vec<(f64, f64)> = rep.points().map(|p| p.to_f64()).collect();
    match &rep.witness {
        Some(ContourWitness::Circle { center, r2 }) => {
            let (cx, cy) = center.to_f64();
            let r = to_f64(r2).sqrt();
            pts.extend([(cx - r, cy - r), (cx + r, cy + r)]);
        }
        Some(ContourWitness::Polyline(ps)) => pts.extend(ps.iter().map(|p| p.to_f64())),
        None => {}
    }
    let (mut x0, mut y0, mut x1, mut y1) = (0.0f64, 0.0f64, 1.0f64, 1.0f64);
    if let Some(&(x, y)) = pts.first() {
        (x0, y0, x1, y1) = (x, y, x, y);
        for &(x, y) in &pts {
            x0 = x0.min(x);
            x1 = x1.max(x);
            y0 = y0.min(y);
            y1 = y1.max(y);
        }
    }
    let span = (x1 - x0).max(y1 - y0).max(1e-12);
    let pad = 20.0;
    let k = (opts.size - 2.0 * pad) / span;
    // y grows upwards in the model, downwards in SVG
    let tx = |x: f64| pad + (x - x0) * k;
    let ty = |y: f64| opts.size - pad - (y - y0) * k;
    let mut s = String::new();
    let _ = writeln!(
        s,
        r#"<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{0}" height="{0}" viewBox="0 0 {0} {0}">"#,
        opts.size
    );
    match &rep.witness {
        Some(ContourWitness::Circle { center, r2 }) => {
            let (cx, cy) = center.to_f64();
            let _ = writeln!(
                s,
                r##"<circle cx="{:.3}" cy="{:.3}" r="{:.3}" fill="none" stroke="#999" stroke-dasharray="4 3"/>"##,
                tx(cx),
                ty(cy),
                to_f64(r2).sqrt() * k
            );
        }
        Some(ContourWitness::Polyline(ps)) => {
            let d: Vec<String> = ps.iter().map(|p| p.to_f64()).map(|(x, y)| format!("{:.3},{:.3}", tx(x), ty(y))).collect();
            let _ = writeln!(s, r##"<polygon points="{}" fill="none" stroke="#999" stroke-dasharray="4 3"/>"##, d.join(" "));
        }
        None => {}
    }
    let mut curves: Vec<_> = rep.curves.iter().collect();
    curves.sort_by_key(|c| c.vertex);
    for c in curves {
        let col = PALETTE[c.vertex % PALETTE.len()];
        let d: Vec<String> = c.points.iter().map(|p| p.to_f64()).map(|(x, y)| format!("{:.3},{:.3}", tx(x), ty(y))).collect();
        let _ = writeln!(s, r#"<polyline points="{}" fill="none" stroke="{col}" stroke-width="1.5"/>"#, d.join(" "));
        let (hx, hy) = c.tail().to_f64();
        let _ = writeln!(s, r#"<circle cx="{:.3}" cy="{:.3}" r="2.5" fill="{col}"/>"#, tx(hx), ty(hy));
        if opts.label_curves {
            let _ = writeln!(
                s,
                r#"<text x="{:.3}" y="{:.3}" font-size="10" fill="{col}">{}</text>"#,
                tx(hx) + 3.0,
                ty(hy) - 3.0,
                c.vertex
            );
        }
    }
    if opts.mark_crossings {
        if let Ok(profile) = crossing_profile(rep) {
            for (_, _, p) in &profile.points {
                let (x, y) = p.to_f64();
                let _ = writeln!(s, r##"<circle cx="{:.3}" cy="{:.3}" r="2" fill="none" stroke="#000"/>"##, tx(x), ty(y));
            }
        }
    }
    s.push_str("</svg>\n");
    s
}
