//! SVG pictures of realizations.
//!
//! Exact coordinates are only rounded at the very end, to three decimals,
//! so output is byte-stable. Ideal points are drawn as triangles on the
//! canvas border pointing along their direction; a listed line made only
//! of ideal points is drawn as a dashed border.

use std::fmt::Write as _;

use crate::field::{Field, Rational};
use crate::incidence::format::AnyRealization;
use crate::incidence::realization::Realization;
use crate::projective::{GeometryError, ProjectiveMap};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum RenderError {
    #[error("canvas and point radius must be positive")]
    BadSpec,
    #[error("chart line: {0}")]
    Chart(#[from] GeometryError),
}

#[derive(Clone, Debug, PartialEq)]
pub struct RenderSpec {
    pub width: f64,
    pub height: f64,
    pub radius: f64,
    pub labels: bool,
    /// Send the line `a x + b y + c w = 0` to infinity before drawing.
    pub chart: Option<[Rational; 3]>,
}

impl Default for RenderSpec {
    fn default() -> Self {
        Self {
            width: 400.0,
            height: 400.0,
            radius: 4.0,
            labels: false,
            chart: None,
        }
    }
}

/// Canvas position of a point: finite, or a direction at infinity.
#[derive(Clone, Copy, Debug)]
enum Spot {
    At(f64, f64),
    Toward(f64, f64),
}

fn num(v: f64) -> String {
    let s = format!("{v:.3}");
    if s == "-0.000" {
        "0.000".to_string()
    } else {
        s
    }
}

/// Clip the line through `p` with direction `d` to `[0, w] x [0, h]`.
fn clip(p: (f64, f64), d: (f64, f64), w: f64, h: f64) -> Option<((f64, f64), (f64, f64))> {
    let (mut lo, mut hi) = (f64::NEG_INFINITY, f64::INFINITY);
    for (pc, dc, max) in [(p.0, d.0, w), (p.1, d.1, h)] {
        if dc.abs() < 1e-12 {
            if pc < 0.0 || pc > max {
                return None;
            }
            continue;
        }
        let (t0, t1) = ((0.0 - pc) / dc, (max - pc) / dc);
        lo = lo.max(t0.min(t1));
        hi = hi.min(t0.max(t1));
    }
    (lo <= hi).then_some({
        (
            (p.0 + lo * d.0, p.1 + lo * d.1),
            (p.0 + hi * d.0, p.1 + hi * d.1),
        )
    })
}

pub fn render_svg(r: &AnyRealization, spec: &RenderSpec) -> Result<String, RenderError> {
    match r {
        AnyRealization::Rational(r) => render_generic(r, spec),
        AnyRealization::Quadratic { realization, .. } => render_generic(realization, spec),
    }
}

pub fn render_generic<F: Field>(
    r: &Realization<F>,
    spec: &RenderSpec,
) -> Result<String, RenderError> {
    if !(spec.width > 0.0 && spec.height > 0.0 && spec.radius > 0.0) {
        return Err(RenderError::BadSpec);
    }
    let r = match &spec.chart {
        Some([a, b, c]) => {
            r.transformed(&ProjectiveMap::relocation(a.clone(), b.clone(), c.clone())?)
        }
        None => r.clone(),
    };
    let (w, h) = (spec.width, spec.height);
    let raw: Vec<(bool, [f64; 3])> = r
        .coords()
        .iter()
        .map(|p| (p.is_finite(), p.coords().clone().map(|c| c.to_f64())))
        .collect();
    let finite: Vec<(f64, f64)> = raw
        .iter()
        .filter(|(f, _)| *f)
        .map(|(_, c)| (c[0] / c[2], c[1] / c[2]))
        .collect();
    let (mut x0, mut x1, mut y0, mut y1) = (
        f64::INFINITY,
        f64::NEG_INFINITY,
        f64::INFINITY,
        f64::NEG_INFINITY,
    );
    for &(x, y) in &finite {
        x0 = x0.min(x);
        x1 = x1.max(x);
        y0 = y0.min(y);
        y1 = y1.max(y);
    }
    if finite.is_empty() {
        (x0, x1, y0, y1) = (-1.0, 1.0, -1.0, 1.0);
    }
    // leave a band for ideal markers and labels
    let margin = 6.0 * spec.radius;
    let span = (x1 - x0).max(y1 - y0).max(1e-9);
    let scale = ((w - 2.0 * margin).min(h - 2.0 * margin) / span).max(1e-9);
    let (cx, cy) = ((x0 + x1) / 2.0, (y0 + y1) / 2.0);
    let to_canvas = |x: f64, y: f64| (w / 2.0 + (x - cx) * scale, h / 2.0 - (y - cy) * scale);
    let spots: Vec<Spot> = raw
        .iter()
        .map(|(f, c)| {
            if *f {
                let (x, y) = to_canvas(c[0] / c[2], c[1] / c[2]);
                Spot::At(x, y)
            } else {
                let len = c[0].hypot(c[1]);
                Spot::Toward(c[0] / len, -c[1] / len)
            }
        })
        .collect();

    let mut out = String::new();
    let s = &mut out;
    writeln!(
        s,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{}" height="{}" viewBox="0 0 {} {}">"#,
        num(w),
        num(h),
        num(w),
        num(h)
    )
    .unwrap();
    writeln!(
        s,
        r#"<rect x="0" y="0" width="{}" height="{}" fill="white"/>"#,
        num(w),
        num(h)
    )
    .unwrap();
    for line in r.structure().lines() {
        let at: Vec<(f64, f64)> = line
            .iter()
            .filter_map(|&p| {
                if let Spot::At(x, y) = spots[p] {
                    Some((x, y))
                } else {
                    None
                }
            })
            .collect();
        let toward = line.iter().find_map(|&p| {
            if let Spot::Toward(x, y) = spots[p] {
                Some((x, y))
            } else {
                None
            }
        });
        let seg = match (at.first(), at.get(1), toward) {
            (Some(&p), _, Some(d)) => clip(p, d, w, h),
            (Some(&p), Some(&q), None) => clip(p, (q.0 - p.0, q.1 - p.1), w, h),
            (None, _, _) => {
                let id = line
                    .iter()
                    .map(usize::to_string)
                    .collect::<Vec<_>>()
                    .join(" ");
                writeln!(
                    s,
                    r#"<rect class="ideal-line" data-points="{id}" x="1.000" y="1.000" width="{}" height="{}" fill="none" stroke="gray" stroke-dasharray="6 4"/>"#,
                    num(w - 2.0),
                    num(h - 2.0)
                )
                .unwrap();
                continue;
            }
            _ => unreachable!("a listed line has at least three points"),
        };
        if let Some((a, b)) = seg {
            writeln!(
                s,
                r#"<line x1="{}" y1="{}" x2="{}" y2="{}" stroke="black" stroke-width="1"/>"#,
                num(a.0),
                num(a.1),
                num(b.0),
                num(b.1)
            )
            .unwrap();
        }
    }
    let rad = spec.radius;
    for (id, spot) in spots.iter().enumerate() {
        let (lx, ly) = match *spot {
            Spot::At(x, y) => {
                writeln!(
                    s,
                    r#"<circle cx="{}" cy="{}" r="{}" fill="black"/>"#,
                    num(x),
                    num(y),
                    num(rad)
                )
                .unwrap();
                (x, y)
            }
            Spot::Toward(dx, dy) => {
                // walk from the center to just inside the border
                let t = ((w / 2.0 - 2.0 * rad) / dx.abs().max(1e-12))
                    .min((h / 2.0 - 2.0 * rad) / dy.abs().max(1e-12));
                let (x, y) = (w / 2.0 + t * dx, h / 2.0 + t * dy);
                let (nx, ny) = (-dy, dx);
                let tip = (x + 1.5 * rad * dx, y + 1.5 * rad * dy);
                let l = (x - rad * dx + rad * nx, y - rad * dy + rad * ny);
                let rr = (x - rad * dx - rad * nx, y - rad * dy - rad * ny);
                writeln!(
                    s,
                    r#"<polygon class="ideal" points="{},{} {},{} {},{}" fill="gray"/>"#,
                    num(tip.0),
                    num(tip.1),
                    num(l.0),
                    num(l.1),
                    num(rr.0),
                    num(rr.1)
                )
                .unwrap();
                (x - 3.0 * rad * dx, y - 3.0 * rad * dy)
            }
        };
        if spec.labels {
            writeln!(
                s,
                r#"<text x="{}" y="{}" font-size="{}">{id}</text>"#,
                num(lx + rad * 1.5),
                num(ly - rad * 1.5),
                num(rad * 3.0)
            )
            .unwrap();
        }
    }
    out.push_str("</svg>\n");
    Ok(out)
}
