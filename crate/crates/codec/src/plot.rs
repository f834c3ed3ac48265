//! Two-panel SVG of a capacity sweep.

use std::fmt::Write;

use composite_codec_core::capacity::SweepRow;

const PANEL_W: f64 = 420.0;
const PANEL_H: f64 = 300.0;
const MARGIN: f64 = 55.0;

/// Legend name, stroke colour and points.
type Series<'a> = (&'a str, &'a str, Vec<(f64, f64)>);

struct Panel<'a> {
    x0: f64,
    title: &'a str,
    y_label: &'a str,
    y_max: f64,
    series: Vec<Series<'a>>,
}

fn panel(svg: &mut String, p: &Panel) {
    let (left, top) = (p.x0 + MARGIN, 30.0);
    let (w, h) = (PANEL_W - MARGIN - 15.0, PANEL_H - 80.0);
    let sx = |x: f64| left + x / 0.5 * w;
    let sy = |y: f64| top + h - y / p.y_max * h;
    let _ = writeln!(svg, r#"<text x="{}" y="18" text-anchor="middle" font-size="14">{}</text>"#, left + w / 2.0, p.title);
    let _ = writeln!(
        svg,
        r#"<rect x="{left}" y="{top}" width="{w}" height="{h}" fill="none" stroke="black"/>"#
    );
    for i in 0..=5 {
        let x = 0.1 * i as f64;
        let _ = writeln!(
            svg,
            r#"<text x="{:.1}" y="{:.1}" text-anchor="middle" font-size="11">{x:.1}</text>"#,
            sx(x),
            top + h + 15.0
        );
        let y = p.y_max * i as f64 / 5.0;
        let _ = writeln!(
            svg,
            r#"<text x="{:.1}" y="{:.1}" text-anchor="end" font-size="11">{y:.2}</text>"#,
            left - 5.0,
            sy(y) + 4.0
        );
    }
    let _ = writeln!(
        svg,
        r#"<text x="{:.1}" y="{:.1}" text-anchor="middle" font-size="13">p</text>"#,
        left + w / 2.0,
        top + h + 35.0
    );
    let _ = writeln!(
        svg,
        r#"<text x="{x:.1}" y="{y:.1}" text-anchor="middle" font-size="13" transform="rotate(-90 {x:.1} {y:.1})">{}</text>"#,
        p.y_label,
        x = p.x0 + 14.0,
        y = top + h / 2.0
    );
    for (i, (name, colour, pts)) in p.series.iter().enumerate() {
        let path: Vec<String> = pts.iter().map(|&(x, y)| format!("{:.2},{:.2}", sx(x), sy(y))).collect();
        let _ = writeln!(svg, r#"<polyline fill="none" stroke="{colour}" stroke-width="2" points="{}"/>"#, path.join(" "));
        let ly = top + 15.0 + 16.0 * i as f64;
        let _ = writeln!(
            svg,
            r#"<line x1="{:.1}" y1="{ly:.1}" x2="{:.1}" y2="{ly:.1}" stroke="{colour}" stroke-width="2"/><text x="{:.1}" y="{:.1}" font-size="12">{name}</text>"#,
            left + w - 120.0,
            left + w - 100.0,
            left + w - 95.0,
            ly + 4.0
        );
    }
}

/// Left: optimal input parameter against p. Right: both capacities against p.
pub fn sweep_svg(rows: &[SweepRow]) -> String {
    let mut svg = String::new();
    let _ = writeln!(
        svg,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{}" height="{PANEL_H}" font-family="sans-serif">"#,
        2.0 * PANEL_W
    );
    let alpha: Vec<_> = rows.iter().map(|r| (r.p, r.alpha_opt)).collect();
    let cap: Vec<_> = rows.iter().map(|r| (r.p, r.cap_c)).collect();
    let cap2: Vec<_> = rows.iter().map(|r| (r.p, r.cap_c2)).collect();
    panel(
        &mut svg,
        &Panel { x0: 0.0, title: "alpha_opt(p) versus p", y_label: "alpha_opt", y_max: 0.5, series: vec![("alpha_opt", "#1f77b4", alpha)] },
    );
    panel(
        &mut svg,
        &Panel {
            x0: PANEL_W,
            title: "cap(C) and cap(C2) as a function of p",
            y_label: "capacity (bits)",
            y_max: 1.6,
            series: vec![("cap(C)", "#1f77b4", cap), ("cap(C2)", "#d62728", cap2)],
        },
    );
    svg.push_str("</svg>\n");
    svg
}
