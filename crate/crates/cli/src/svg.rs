//! Orbit drawings as plain SVG 1.1 polygons.

use std::fmt::Write;

use num_complex::Complex64;
use triop::TriangleTriple;

const WIDTH_PX: f64 = 800.0;
const PADDING: f64 = 0.05;

/// `(min_x, min_y, width, height)` in SVG user units, y pointing down.
pub type ViewBox = (f64, f64, f64, f64);

#[derive(Debug, Clone, PartialEq)]
pub struct SvgScene {
    polygons: Vec<([Complex64; 3], usize)>,
    viewbox: ViewBox,
}

impl SvgScene {
    /// `None` for an empty list.
    pub fn new(polygons: Vec<([Complex64; 3], usize)>) -> Option<Self> {
        let first = polygons.first()?.0[0];
        let (mut lo, mut hi) = (first, first);
        for z in polygons.iter().flat_map(|(v, _)| v.iter()) {
            lo = Complex64::new(lo.re.min(z.re), lo.im.min(z.im));
            hi = Complex64::new(hi.re.max(z.re), hi.im.max(z.im));
        }
        let extent = (hi.re - lo.re).max(hi.im - lo.im).max(f64::MIN_POSITIVE);
        let pad = PADDING * extent;
        let viewbox = (
            lo.re - pad,
            -hi.im - pad,
            hi.re - lo.re + 2.0 * pad,
            hi.im - lo.im + 2.0 * pad,
        );
        Some(SvgScene { polygons, viewbox })
    }

    /// One polygon per orbit element, coloured by step.
    pub fn from_orbit(orbit: &[TriangleTriple]) -> Option<Self> {
        Self::new(
            orbit
                .iter()
                .enumerate()
                .map(|(k, t)| (t.vertices(), k))
                .collect(),
        )
    }

    pub fn viewbox(&self) -> ViewBox {
        self.viewbox
    }

    pub fn len(&self) -> usize {
        self.polygons.len()
    }

    pub fn is_empty(&self) -> bool {
        self.polygons.is_empty()
    }
}

/// Hue `h ∈ [0, 1)` at fixed saturation and value, as `#rrggbb`.
fn hue_color(h: f64) -> String {
    let (s, v) = (0.75, 0.8);
    let h6 = h * 6.0;
    let f = h6 - h6.floor();
    let (p, q, t) = (v * (1.0 - s), v * (1.0 - s * f), v * (1.0 - s * (1.0 - f)));
    let (r, g, b) = match h6.floor() as u32 % 6 {
        0 => (v, t, p),
        1 => (q, v, p),
        2 => (p, v, t),
        3 => (p, q, v),
        4 => (t, p, v),
        _ => (v, p, q),
    };
    let byte = |x: f64| (x * 255.0).round() as u8;
    format!("#{:02x}{:02x}{:02x}", byte(r), byte(g), byte(b))
}

pub fn render_svg(scene: &SvgScene) -> String {
    let (x0, y0, w, h) = scene.viewbox;
    let stroke = 0.002 * w.max(h);
    let colors = scene.polygons.iter().map(|&(_, k)| k).max().unwrap_or(0) + 1;
    let mut out = String::new();
    out.push_str("<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n");
    writeln!(
        out,
        "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"{:.0}\" height=\"{:.0}\" viewBox=\"{:.6} {:.6} {:.6} {:.6}\">",
        WIDTH_PX,
        WIDTH_PX * h / w,
        x0,
        y0,
        w,
        h
    )
    .unwrap();
    for (vertices, k) in &scene.polygons {
        let points: Vec<String> = vertices
            .iter()
            .map(|z| format!("{:.6},{:.6}", z.re, -z.im))
            .collect();
        writeln!(
            out,
            "  <polygon points=\"{}\" fill=\"none\" stroke=\"{}\" stroke-width=\"{:.6}\"/>",
            points.join(" "),
            hue_color(*k as f64 / colors as f64),
            stroke
        )
        .unwrap();
    }
    out.push_str("</svg>\n");
    out
}
