//! SVG rendering of instances and line arrangements.
//!
//! Rendering is the only place floating point is used. Numbers are printed
//! with 12 significant digits, sector arcs are flattened into 32 chords, and
//! the y axis points up.

use std::collections::BTreeMap;
use std::fmt::Write;

use num_traits::ToPrimitive;
use thiserror::Error;

use crate::arrangement::{containing_slab, LineArrangement};
use crate::geometry::{ArrangementObject, Point, Rational};
use crate::transmission::{Instance, VertexLabel};

/// Chords per sector arc.
pub const ARC_CHORDS: usize = 32;

#[derive(Debug, Error, Clone, PartialEq)]
#[error("invalid render style: {0}")]
pub struct StyleError(String);

#[derive(Clone, Debug, PartialEq)]
pub struct RenderStyle {
    width: f64,
    height: f64,
    padding: f64,
    stroke_width: f64,
    colors: BTreeMap<String, String>,
    default_color: String,
}

impl Default for RenderStyle {
    fn default() -> Self {
        let colors = [
            ("C", "#1f77b4"),
            ("A", "#d62728"),
            ("B", "#2ca02c"),
            ("SC", "#1f77b4"),
            ("SA", "#d62728"),
            ("SB", "#2ca02c"),
            ("line", "#444444"),
        ]
        .into_iter()
        .map(|(k, v)| (k.to_string(), v.to_string()))
        .collect();
        RenderStyle {
            width: 800.0,
            height: 800.0,
            padding: 20.0,
            stroke_width: 1.0,
            colors,
            default_color: "#000000".to_string(),
        }
    }
}

impl RenderStyle {
    pub fn new(width: f64, height: f64, padding: f64, stroke_width: f64) -> Result<Self, StyleError> {
        let positive = |v: f64| v.is_finite() && v > 0.0;
        if !positive(width) || !positive(height) || !positive(stroke_width) {
            return Err(StyleError("width, height and stroke width must be positive".into()));
        }
        if !(padding.is_finite() && padding >= 0.0 && 2.0 * padding < width.min(height)) {
            return Err(StyleError("padding must be non-negative and leave room to draw".into()));
        }
        Ok(RenderStyle {
            width,
            height,
            padding,
            stroke_width,
            ..RenderStyle::default()
        })
    }

    /// Sets the stroke colour of a label family (`"C"`, `"SA"`, `"Free"`,
    /// `"line"`, ...).
    pub fn with_color(mut self, family: &str, color: &str) -> Self {
        self.colors.insert(family.to_string(), color.to_string());
        self
    }

    fn color(&self, family: &str) -> &str {
        self.colors.get(family).unwrap_or(&self.default_color)
    }
}

pub enum RenderSubject<'a> {
    Instance(&'a Instance),
    Arrangement(&'a LineArrangement),
}

/// Decimal text with 12 significant digits, no exponent, trailing zeros
/// trimmed.
pub fn format_number(v: f64) -> String {
    if v == 0.0 || !v.is_finite() {
        return "0".to_string();
    }
    let magnitude = v.abs().log10().floor() as i32;
    let decimals = (11 - magnitude).max(0) as usize;
    let mut s = format!("{v:.decimals$}");
    if s.contains('.') {
        s = s.trim_end_matches('0').trim_end_matches('.').to_string();
    }
    if s == "-0" {
        s = "0".to_string();
    }
    s
}

fn f(q: &Rational) -> f64 {
    q.to_f64().unwrap_or(0.0)
}

fn fp(p: &Point) -> (f64, f64) {
    (f(&p.x), f(&p.y))
}

fn escape(s: &str) -> String {
    s.replace('&', "&amp;")
        .replace('<', "&lt;")
        .replace('>', "&gt;")
        .replace('"', "&quot;")
}

enum Shape {
    Segment { p: (f64, f64), q: (f64, f64) },
    Wedge { apex: (f64, f64), arc: Vec<(f64, f64)> },
    Disk { c: (f64, f64), r: f64 },
}

fn shape(obj: &ArrangementObject) -> Shape {
    match obj {
        ArrangementObject::Segment(s) => Shape::Segment {
            p: fp(&s.p),
            q: fp(&s.q),
        },
        ArrangementObject::Sector(s) => {
            let apex = fp(&s.apex);
            let r = f(&s.radius_sq).sqrt();
            let theta = f(&s.direction.y).atan2(f(&s.direction.x));
            let half = f(&s.half_angle.s).atan2(f(&s.half_angle.c));
            let arc = (0..=ARC_CHORDS)
                .map(|j| {
                    let a = theta - half + 2.0 * half * j as f64 / ARC_CHORDS as f64;
                    (apex.0 + r * a.cos(), apex.1 + r * a.sin())
                })
                .collect();
            Shape::Wedge { apex, arc }
        }
        ArrangementObject::Disk(d) => Shape::Disk {
            c: fp(&d.center),
            r: f(&d.radius_sq).sqrt(),
        },
    }
}

struct Frame {
    min_x: f64,
    max_y: f64,
    scale: f64,
    pad: f64,
}

impl Frame {
    fn fit(points: &[(f64, f64)], style: &RenderStyle) -> Frame {
        let (mut min_x, mut max_x, mut min_y, mut max_y) = (f64::MAX, f64::MIN, f64::MAX, f64::MIN);
        for &(x, y) in points {
            min_x = min_x.min(x);
            max_x = max_x.max(x);
            min_y = min_y.min(y);
            max_y = max_y.max(y);
        }
        if points.is_empty() {
            (min_x, max_x, min_y, max_y) = (0.0, 1.0, 0.0, 1.0);
        }
        let span = (max_x - min_x).max(max_y - min_y).max(1e-300);
        let room = (style.width - 2.0 * style.padding).min(style.height - 2.0 * style.padding);
        Frame {
            min_x,
            max_y,
            scale: room / span,
            pad: style.padding,
        }
    }

    fn map(&self, (x, y): (f64, f64)) -> (String, String) {
        (
            format_number(self.pad + (x - self.min_x) * self.scale),
            format_number(self.pad + (self.max_y - y) * self.scale),
        )
    }
}

fn header(style: &RenderStyle) -> String {
    let (w, h) = (format_number(style.width), format_number(style.height));
    format!(
        "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{w}\" height=\"{h}\" viewBox=\"0 0 {w} {h}\">\n"
    )
}

fn render_instance(inst: &Instance, style: &RenderStyle) -> String {
    let shapes: Vec<(&VertexLabel, Shape)> = inst.entries.iter().map(|e| (&e.label, shape(&e.object))).collect();
    let mut pts = Vec::new();
    for (_, s) in &shapes {
        match s {
            Shape::Segment { p, q } => pts.extend([*p, *q]),
            Shape::Wedge { apex, arc } => {
                pts.push(*apex);
                pts.extend(arc.iter().copied());
            }
            Shape::Disk { c, r } => pts.extend([(c.0 - r, c.1 - r), (c.0 + r, c.1 + r)]),
        }
    }
    let frame = Frame::fit(&pts, style);
    let sw = format_number(style.stroke_width);
    let marker_r = format_number(2.0 * style.stroke_width);
    let mut out = header(style);
    for (label, s) in &shapes {
        let color = style.color(label.family());
        let name = escape(&label.to_string());
        match s {
            Shape::Segment { p, q } => {
                let (x1, y1) = frame.map(*p);
                let (x2, y2) = frame.map(*q);
                let _ = writeln!(
                    out,
                    "  <line data-label=\"{name}\" x1=\"{x1}\" y1=\"{y1}\" x2=\"{x2}\" y2=\"{y2}\" stroke=\"{color}\" stroke-width=\"{sw}\"/>"
                );
                let _ = writeln!(
                    out,
                    "  <circle data-label=\"{name}\" cx=\"{x1}\" cy=\"{y1}\" r=\"{marker_r}\" fill=\"{color}\"/>"
                );
            }
            Shape::Wedge { apex, arc } => {
                let (ax, ay) = frame.map(*apex);
                let mut d = format!("M {ax} {ay}");
                for p in arc {
                    let (x, y) = frame.map(*p);
                    let _ = write!(d, " L {x} {y}");
                }
                d.push_str(" Z");
                let _ = writeln!(
                    out,
                    "  <path data-label=\"{name}\" d=\"{d}\" fill=\"{color}\" fill-opacity=\"0.15\" stroke=\"{color}\" stroke-width=\"{sw}\"/>"
                );
            }
            Shape::Disk { c, r } => {
                let (cx, cy) = frame.map(*c);
                let rr = format_number(r * frame.scale);
                let _ = writeln!(
                    out,
                    "  <circle data-label=\"{name}\" cx=\"{cx}\" cy=\"{cy}\" r=\"{rr}\" fill=\"none\" stroke=\"{color}\" stroke-width=\"{sw}\"/>"
                );
            }
        }
    }
    out.push_str("</svg>\n");
    out
}

fn render_arrangement(l: &LineArrangement, style: &RenderStyle) -> String {
    let Ok(slab) = containing_slab(l) else {
        return format!("{}</svg>\n", header(style));
    };
    let ends: Vec<((f64, f64), (f64, f64))> = l
        .lines()
        .iter()
        .map(|line| (fp(&slab.left_point(line)), fp(&slab.right_point(line))))
        .collect();
    let pts: Vec<(f64, f64)> = ends.iter().flat_map(|(a, b)| [*a, *b]).collect();
    let frame = Frame::fit(&pts, style);
    let sw = format_number(style.stroke_width);
    let color = style.color("line");
    let mut out = header(style);
    for (i, (p, q)) in ends.iter().enumerate() {
        let (x1, y1) = frame.map(*p);
        let (x2, y2) = frame.map(*q);
        let _ = writeln!(
            out,
            "  <line data-label=\"l_{}\" x1=\"{x1}\" y1=\"{y1}\" x2=\"{x2}\" y2=\"{y2}\" stroke=\"{color}\" stroke-width=\"{sw}\"/>",
            i + 1
        );
    }
    out.push_str("</svg>\n");
    out
}

pub fn render_svg(subject: RenderSubject<'_>, style: &RenderStyle) -> String {
    match subject {
        RenderSubject::Instance(inst) => render_instance(inst, style),
        RenderSubject::Arrangement(l) => render_arrangement(l, style),
    }
}
