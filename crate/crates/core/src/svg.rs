//! Deterministic SVG plots: ranked index triplets and nu-alpha step curves.
//!
//! Every panel uses a fixed 800x500 viewBox. Coordinates are printed with two
//! decimals so output is byte-stable.

use std::fmt::Write as _;

use crate::alpha::AlphaCurve;
use crate::analytics::AuthorIndexRow;

const W: f64 = 800.0;
const H: f64 = 500.0;
const LEFT: f64 = 60.0;
const RIGHT: f64 = 20.0;
const TOP: f64 = 40.0;
const BOTTOM: f64 = 50.0;

const COLORS: [&str; 3] = ["#1f77b4", "#d62728", "#2ca02c"];

struct Frame {
    x0: f64,
    x1: f64,
    y0: f64,
    y1: f64,
}

impl Frame {
    fn x(&self, v: f64) -> f64 {
        LEFT + (v - self.x0) / (self.x1 - self.x0) * (W - LEFT - RIGHT)
    }

    fn y(&self, v: f64) -> f64 {
        H - BOTTOM - (v - self.y0) / (self.y1 - self.y0) * (H - TOP - BOTTOM)
    }

    fn axes(&self, out: &mut String, x_label: &str, y_label: &str) {
        let (l, r, t, b) = (LEFT, W - RIGHT, TOP, H - BOTTOM);
        let _ = writeln!(
            out,
            r##"<rect x="{l:.2}" y="{t:.2}" width="{:.2}" height="{:.2}" fill="none" stroke="#333"/>"##,
            r - l,
            b - t
        );
        for k in 0..=4 {
            let v = self.y0 + (self.y1 - self.y0) * k as f64 / 4.0;
            let y = self.y(v);
            let _ = writeln!(
                out,
                r##"<line x1="{:.2}" y1="{y:.2}" x2="{l:.2}" y2="{y:.2}" stroke="#333"/>"##,
                l - 5.0
            );
            let _ = writeln!(
                out,
                r#"<text x="{:.2}" y="{:.2}" font-size="11" text-anchor="end">{}</text>"#,
                l - 8.0,
                y + 4.0,
                tick(v)
            );
            let v = self.x0 + (self.x1 - self.x0) * k as f64 / 4.0;
            let x = self.x(v);
            let _ = writeln!(
                out,
                r##"<line x1="{x:.2}" y1="{b:.2}" x2="{x:.2}" y2="{:.2}" stroke="#333"/>"##,
                b + 5.0
            );
            let _ = writeln!(
                out,
                r#"<text x="{x:.2}" y="{:.2}" font-size="11" text-anchor="middle">{}</text>"#,
                b + 18.0,
                tick(v)
            );
        }
        let _ = writeln!(
            out,
            r#"<text x="{:.2}" y="{:.2}" font-size="13" text-anchor="middle">{}</text>"#,
            (l + r) / 2.0,
            H - 10.0,
            escape(x_label)
        );
        let _ = writeln!(
            out,
            r#"<text x="15.00" y="{:.2}" font-size="13" text-anchor="middle" transform="rotate(-90 15.00 {:.2})">{}</text>"#,
            (t + b) / 2.0,
            (t + b) / 2.0,
            escape(y_label)
        );
    }
}

fn tick(v: f64) -> String {
    let s = format!("{v:.2}");
    s.trim_end_matches('0').trim_end_matches('.').to_string()
}

fn escape(s: &str) -> String {
    s.replace('&', "&amp;")
        .replace('<', "&lt;")
        .replace('>', "&gt;")
}

fn open(out: &mut String, y_offset: f64) {
    let _ = writeln!(
        out,
        r#"<svg x="0" y="{y_offset:.0}" width="{W:.0}" height="{H:.0}" viewBox="0 0 {W:.0} {H:.0}">"#
    );
    let _ = writeln!(
        out,
        r#"<rect width="{W:.0}" height="{H:.0}" fill="white"/>"#
    );
}

fn title(out: &mut String, text: &str) {
    let _ = writeln!(
        out,
        r#"<text x="{:.2}" y="24.00" font-size="15" text-anchor="middle">{}</text>"#,
        W / 2.0,
        escape(text)
    );
}

fn document(height: f64, body: &str) -> String {
    format!(
        "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{W:.0}\" height=\"{height:.0}\" viewBox=\"0 0 {W:.0} {height:.0}\" font-family=\"sans-serif\">\n{body}</svg>\n"
    )
}

/// Step plot of `nu_alpha` against alpha with the limit as a dashed line.
pub fn alpha_svg(curve: &AlphaCurve, caption: &str) -> String {
    let mut out = String::new();
    open(&mut out, 0.0);
    title(&mut out, caption);
    let (x0, x1) = match (curve.alphas.first(), curve.alphas.last()) {
        (Some(&a), Some(&b)) if b > a => (a, b),
        (Some(&a), _) => (a - 0.5, a + 0.5),
        _ => (0.0, 1.0),
    };
    let top = curve
        .values
        .iter()
        .copied()
        .chain([curve.nu_infinity])
        .max()
        .unwrap_or(0);
    let frame = Frame {
        x0,
        x1,
        y0: 0.0,
        y1: top.max(1) as f64 * 1.05,
    };
    frame.axes(&mut out, "alpha", "nu_alpha");
    let mut points = Vec::new();
    let samples: Vec<(f64, u64)> = curve.samples().collect();
    for (i, &(a, v)) in samples.iter().enumerate() {
        points.push((frame.x(a), frame.y(v as f64)));
        if let Some(&(next, _)) = samples.get(i + 1) {
            points.push((frame.x(next), frame.y(v as f64)));
        }
    }
    let path: Vec<String> = points
        .iter()
        .map(|(x, y)| format!("{x:.2},{y:.2}"))
        .collect();
    let _ = writeln!(
        out,
        r#"<polyline points="{}" fill="none" stroke="{}" stroke-width="2"/>"#,
        path.join(" "),
        COLORS[1]
    );
    let y = frame.y(curve.nu_infinity as f64);
    let _ = writeln!(
        out,
        r##"<line x1="{LEFT:.2}" y1="{y:.2}" x2="{:.2}" y2="{y:.2}" stroke="#555" stroke-dasharray="6 4"/>"##,
        W - RIGHT
    );
    let _ = writeln!(
        out,
        r#"<text x="{:.2}" y="{:.2}" font-size="12" text-anchor="end">nu_inf = {}</text>"#,
        W - RIGHT - 4.0,
        y - 6.0,
        curve.nu_infinity
    );
    out.push_str("</svg>\n");
    document(H, &out)
}

type Triplet = (&'static str, fn(&AuthorIndexRow) -> f64);

/// Two stacked panels of normalized index triplets, authors in the given order.
pub fn ranking_svg(ranked: &[AuthorIndexRow]) -> String {
    let panels: [[Triplet; 3]; 2] = [
        [
            ("h/m", |r| r.h_m),
            ("nu/m", |r| r.nu_m),
            ("g.star/m", |r| r.g_star_m),
        ],
        [
            ("h/m", |r| r.h_m),
            ("nu.bar/m", |r| r.nu_bar_m),
            ("g/m", |r| r.g_m),
        ],
    ];
    let mut out = String::new();
    for (p, series) in panels.iter().enumerate() {
        open(&mut out, p as f64 * H);
        let names: Vec<&str> = series.iter().map(|s| s.0).collect();
        title(&mut out, &names.join(" <= "));
        if ranked.is_empty() {
            let _ = writeln!(
                out,
                r#"<text x="{:.2}" y="{:.2}" font-size="16" text-anchor="middle">no data</text>"#,
                W / 2.0,
                H / 2.0
            );
            out.push_str("</svg>\n");
            continue;
        }
        let n = ranked.len() as f64;
        let peak = ranked
            .iter()
            .flat_map(|r| series.iter().map(move |s| (s.1)(r)))
            .fold(1.0, f64::max);
        let frame = Frame {
            x0: 0.0,
            x1: n + 1.0,
            y0: 0.0,
            y1: peak * 1.05,
        };
        frame.axes(&mut out, "authors ranked by h/m", "index / m");
        for (k, (_, value)) in series.iter().enumerate() {
            let _ = writeln!(out, r#"<g fill="{}">"#, COLORS[k]);
            for (i, r) in ranked.iter().enumerate() {
                let _ = writeln!(
                    out,
                    r#"<circle cx="{:.2}" cy="{:.2}" r="3"/>"#,
                    frame.x(i as f64 + 1.0),
                    frame.y(value(r))
                );
            }
            out.push_str("</g>\n");
            let ly = TOP + 14.0 + 16.0 * k as f64;
            let _ = writeln!(
                out,
                r#"<circle cx="{:.2}" cy="{:.2}" r="4" fill="{}"/>"#,
                LEFT + 14.0,
                ly - 4.0,
                COLORS[k]
            );
            let _ = writeln!(
                out,
                r#"<text x="{:.2}" y="{ly:.2}" font-size="12">{}</text>"#,
                LEFT + 24.0,
                escape(series[k].0)
            );
        }
        out.push_str("</svg>\n");
    }
    document(2.0 * H, &out)
}
