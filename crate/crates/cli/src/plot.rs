//! Minimal SVG 1.1 log-log plot of a convergence table against the DOF count.

use std::fmt::Write;

use symcurl::bench::ConvergenceRecord;

const WIDTH: f64 = 640.0;
const HEIGHT: f64 = 480.0;
const MARGIN: f64 = 70.0;
/// Errors below this are drawn at this value.
const FLOOR: f64 = 1e-16;

struct Axes {
    x: (f64, f64),
    y: (f64, f64),
}

impl Axes {
    fn px(&self, dofs: f64) -> f64 {
        let t = (dofs.log10() - self.x.0) / (self.x.1 - self.x.0);
        MARGIN + t * (WIDTH - 2.0 * MARGIN)
    }

    fn py(&self, err: f64) -> f64 {
        let t = (err.max(FLOOR).log10() - self.y.0) / (self.y.1 - self.y.0);
        HEIGHT - MARGIN - t * (HEIGHT - 2.0 * MARGIN)
    }
}

fn decades(values: impl Iterator<Item = f64>) -> (f64, f64) {
    let (lo, hi) = values.fold((f64::INFINITY, f64::NEG_INFINITY), |(lo, hi), v| {
        let l = v.max(FLOOR).log10();
        (lo.min(l), hi.max(l))
    });
    let (lo, hi) = (lo.floor(), hi.ceil());
    if hi > lo {
        (lo, hi)
    } else {
        (lo, lo + 1.0)
    }
}

/// Plots both error norms over the DOF count, with `h` and `h²` guide lines
/// (slopes `-1/3` and `-2/3` against the DOF count in three dimensions).
pub fn render(records: &[ConvergenceRecord], title: &str) -> String {
    let dofs: Vec<f64> = records.iter().map(|r| r.dofs as f64).collect();
    let series = [
        ("L2", "#1f77b4", records.iter().map(|r| r.l2_error).collect::<Vec<_>>()),
        ("H(sym Curl)", "#d62728", records.iter().map(|r| r.hsc_error).collect()),
    ];
    let axes = Axes {
        x: decades(dofs.iter().copied()),
        y: decades(series.iter().flat_map(|s| s.2.iter().copied())),
    };

    let mut s = String::new();
    let _ = writeln!(s, r#"<?xml version="1.0" encoding="UTF-8"?>"#);
    let _ = writeln!(
        s,
        r#"<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{WIDTH}" height="{HEIGHT}" font-family="sans-serif" font-size="12">"#
    );
    let _ = writeln!(s, r#"<rect width="100%" height="100%" fill="white"/>"#);
    let _ = writeln!(s, r#"<text x="{}" y="30" text-anchor="middle" font-size="14">{title}</text>"#, WIDTH / 2.0);

    let (left, right, top, bottom) = (MARGIN, WIDTH - MARGIN, MARGIN, HEIGHT - MARGIN);
    for d in axes.x.0 as i32..=axes.x.1 as i32 {
        let x = axes.px(10f64.powi(d));
        let _ = writeln!(s, r##"<line x1="{x:.1}" y1="{top}" x2="{x:.1}" y2="{bottom}" stroke="#ddd"/>"##);
        let _ = writeln!(s, r#"<text x="{x:.1}" y="{}" text-anchor="middle">1e{d}</text>"#, bottom + 18.0);
    }
    for d in axes.y.0 as i32..=axes.y.1 as i32 {
        let y = axes.py(10f64.powi(d));
        let _ = writeln!(s, r##"<line x1="{left}" y1="{y:.1}" x2="{right}" y2="{y:.1}" stroke="#ddd"/>"##);
        let _ = writeln!(s, r#"<text x="{}" y="{:.1}" text-anchor="end">1e{d}</text>"#, left - 6.0, y + 4.0);
    }
    let _ = writeln!(
        s,
        r#"<rect x="{left}" y="{top}" width="{}" height="{}" fill="none" stroke="black"/>"#,
        right - left,
        bottom - top
    );
    let _ = writeln!(s, r#"<text x="{}" y="{}" text-anchor="middle">degrees of freedom</text>"#, WIDTH / 2.0, HEIGHT - 25.0);
    let _ = writeln!(
        s,
        r#"<text x="20" y="{}" text-anchor="middle" transform="rotate(-90 20 {})">error</text>"#,
        HEIGHT / 2.0,
        HEIGHT / 2.0
    );

    if let (Some(&d0), Some(&d1)) = (dofs.first(), dofs.last()) {
        let e0 = series[0].2[0].max(FLOOR);
        for (order, dash) in [(1.0, "6 3"), (2.0, "2 3")] {
            let e1 = e0 * (d1 / d0).powf(-order / 3.0);
            let _ = writeln!(
                s,
                r#"<line x1="{:.1}" y1="{:.1}" x2="{:.1}" y2="{:.1}" stroke="gray" stroke-dasharray="{dash}"/>"#,
                axes.px(d0),
                axes.py(e0),
                axes.px(d1),
                axes.py(e1)
            );
            let _ = writeln!(s, r#"<text x="{:.1}" y="{:.1}" fill="gray">h^{order}</text>"#, axes.px(d1) + 4.0, axes.py(e1));
        }
    }

    for (i, (name, color, errors)) in series.iter().enumerate() {
        let points: Vec<String> = dofs
            .iter()
            .zip(errors)
            .map(|(&d, &e)| format!("{:.1},{:.1}", axes.px(d), axes.py(e)))
            .collect();
        let _ = writeln!(s, r#"<polyline points="{}" fill="none" stroke="{color}" stroke-width="2"/>"#, points.join(" "));
        for p in &points {
            let (x, y) = p.split_once(',').expect("formatted as x,y");
            let _ = writeln!(s, r#"<circle cx="{x}" cy="{y}" r="3" fill="{color}"/>"#);
        }
        let ly = top + 16.0 + 18.0 * i as f64;
        let _ = writeln!(
            s,
            r#"<line x1="{}" y1="{ly}" x2="{}" y2="{ly}" stroke="{color}" stroke-width="2"/>"#,
            right - 130.0,
            right - 105.0
        );
        let _ = writeln!(s, r#"<text x="{}" y="{}">{name}</text>"#, right - 100.0, ly + 4.0);
    }
    s.push_str("</svg>\n");
    s
}
