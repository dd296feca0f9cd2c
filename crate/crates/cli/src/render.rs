//! SVG drawings of planar polytopes, fans and vector configurations.
//!
//! Coordinates are decimal approximations of the exact values, for display
//! only. The y axis points up.

use std::fmt::Write;

use quasitoric_core::arith::FieldElement;
use quasitoric_core::config::{Triangulation, VectorConfiguration};
use quasitoric_core::geometry::{vertices_from_halfspaces, Fan, GeometryError, HalfspaceRep};

use crate::error::CliError;

const SIZE: f64 = 480.0;

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Target {
    Polytope,
    Fan,
    Configuration,
}

/// Decimal text with `digits` significant digits and no exponent.
pub fn decimal(x: f64, digits: usize) -> String {
    if x == 0.0 || !x.is_finite() {
        return "0".into();
    }
    let magnitude = x.abs().log10().floor() as i64;
    let places = (digits as i64 - 1 - magnitude).max(0) as usize;
    let mut s = format!("{x:.places$}");
    if s.contains('.') {
        s = s.trim_end_matches('0').trim_end_matches('.').to_string();
    }
    if s == "-0" {
        s = "0".into();
    }
    s
}

fn num(x: f64) -> String {
    decimal(x, 12)
}

fn approx(v: &[FieldElement]) -> (f64, f64) {
    (v[0].to_f64(), v[1].to_f64())
}

fn planar(n: usize) -> Result<(), CliError> {
    match n {
        2 => Ok(()),
        n if n > 2 => Err(GeometryError::DimensionTooHigh(n).into()),
        n => Err(CliError::NotPlanar(n)),
    }
}

struct Canvas {
    body: String,
    min: (f64, f64),
    max: (f64, f64),
}

impl Canvas {
    fn new() -> Self {
        Canvas { body: String::new(), min: (f64::INFINITY, f64::INFINITY), max: (f64::NEG_INFINITY, f64::NEG_INFINITY) }
    }

    fn include(&mut self, p: (f64, f64)) {
        self.min = (self.min.0.min(p.0), self.min.1.min(p.1));
        self.max = (self.max.0.max(p.0), self.max.1.max(p.1));
    }

    fn polygon(&mut self, pts: &[(f64, f64)], class: &str) {
        let coords: Vec<String> = pts.iter().map(|&(x, y)| format!("{},{}", num(x), num(-y))).collect();
        let _ = writeln!(self.body, r#"  <polygon class="{class}" points="{}"/>"#, coords.join(" "));
        pts.iter().for_each(|&p| self.include(p));
    }

    fn arrow(&mut self, from: (f64, f64), to: (f64, f64), class: &str) {
        let _ = writeln!(
            self.body,
            r#"  <line class="{class}" x1="{}" y1="{}" x2="{}" y2="{}" marker-end="url(#head)"/>"#,
            num(from.0),
            num(-from.1),
            num(to.0),
            num(-to.1)
        );
        self.include(from);
        self.include(to);
    }

    fn label(&mut self, at: (f64, f64), text: &str) {
        let _ = writeln!(self.body, r#"  <text x="{}" y="{}">{text}</text>"#, num(at.0), num(-at.1));
        self.include(at);
    }

    fn finish(self) -> String {
        let (lo, hi) = if self.min.0.is_finite() { (self.min, self.max) } else { ((-1.0, -1.0), (1.0, 1.0)) };
        let extent = (hi.0 - lo.0).max(hi.1 - lo.1).max(1e-9);
        let pad = 0.12 * extent;
        let (x, y, w, h) = (lo.0 - pad, -hi.1 - pad, hi.0 - lo.0 + 2.0 * pad, hi.1 - lo.1 + 2.0 * pad);
        let font = 0.045 * extent;
        let mut out = String::new();
        let _ = writeln!(
            out,
            r#"<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{}" height="{}" viewBox="{} {} {} {}">"#,
            num(SIZE),
            num(SIZE * h / w),
            num(x),
            num(y),
            num(w),
            num(h)
        );
        let _ = writeln!(out, "  <defs>");
        let _ = writeln!(
            out,
            r#"    <marker id="head" viewBox="0 0 10 10" refX="9" refY="5" markerWidth="6" markerHeight="6" orient="auto"><path d="M0,0 L10,5 L0,10 z"/></marker>"#
        );
        let _ = writeln!(out, "  </defs>");
        let _ = writeln!(
            out,
            "  <style>polygon.body{{fill:#e8eef7;stroke:#1f3b73;}} polygon.sector{{fill:#1f3b73;fill-opacity:0.12;stroke:none;}} line{{stroke:#b0302a;}} line.ghost{{stroke:#777;stroke-dasharray:4 3;}} line.ray{{stroke:#1f3b73;}} * {{vector-effect:non-scaling-stroke;}} text{{font-family:sans-serif;font-size:{}px;}}</style>",
            num(font)
        );
        out.push_str(&self.body);
        out.push_str("</svg>\n");
        out
    }
}

fn sort_ccw(points: &mut [(f64, f64)]) {
    let n = points.len() as f64;
    let c = points.iter().fold((0.0, 0.0), |acc, p| (acc.0 + p.0 / n, acc.1 + p.1 / n));
    points.sort_by(|a, b| (a.1 - c.1).atan2(a.0 - c.0).total_cmp(&(b.1 - c.1).atan2(b.0 - c.0)));
}

/// Outline plus one inward normal arrow per facet, labeled `X1, X2, …`.
pub fn polytope_svg(h: &HalfspaceRep) -> Result<String, CliError> {
    planar(h.dim())?;
    let v = vertices_from_halfspaces(h)?;
    let pts: Vec<(f64, f64)> = v.vertices.iter().map(|p| approx(p)).collect();
    let mut outline = pts.clone();
    sort_ccw(&mut outline);
    let mut c = Canvas::new();
    c.polygon(&outline, "body");
    pts.iter().for_each(|&p| c.include(p));
    let extent = (c.max.0 - c.min.0).max(c.max.1 - c.min.1);
    for (j, facet) in h.facets().iter().enumerate() {
        let on: Vec<(f64, f64)> =
            v.vertex_facets.iter().zip(&pts).filter(|(fs, _)| fs.contains(&j)).map(|(_, &p)| p).collect();
        if on.is_empty() {
            continue;
        }
        let mid = (on.iter().map(|p| p.0).sum::<f64>() / on.len() as f64, on.iter().map(|p| p.1).sum::<f64>() / on.len() as f64);
        let (nx, ny) = approx(&facet.normal);
        let len = (nx * nx + ny * ny).sqrt();
        let tip = (mid.0 + 0.2 * extent * nx / len, mid.1 + 0.2 * extent * ny / len);
        c.arrow(mid, tip, "normal");
        c.label(tip, &format!("X{}", j + 1));
    }
    Ok(c.finish())
}

/// Rays from the origin with each two-dimensional cone shaded.
pub fn fan_svg(f: &Fan) -> Result<String, CliError> {
    planar(f.dim())?;
    let unit: Vec<(f64, f64)> = f
        .rays()
        .iter()
        .map(|r| {
            let (x, y) = approx(r);
            let len = (x * x + y * y).sqrt();
            (x / len, y / len)
        })
        .collect();
    let mut c = Canvas::new();
    c.include((-1.0, -1.0));
    c.include((1.0, 1.0));
    for cone in f.maximal_cones().iter().filter(|s| s.len() == 2) {
        c.polygon(&[(0.0, 0.0), unit[cone[0]], unit[cone[1]]], "sector");
    }
    for (i, &u) in unit.iter().enumerate() {
        c.arrow((0.0, 0.0), u, "ray");
        c.label((1.08 * u.0, 1.08 * u.1), &format!("{}", i + 1));
    }
    Ok(c.finish())
}

/// Vectors drawn from the origin, ghosts dashed, with the cone of each
/// two-element simplex shaded.
pub fn configuration_svg(v: &VectorConfiguration, t: &Triangulation) -> Result<String, CliError> {
    planar(v.dim())?;
    let mut c = Canvas::new();
    c.include((0.0, 0.0));
    for s in t.maximal().iter().filter(|s| s.len() == 2) {
        c.polygon(&[(0.0, 0.0), approx(&v.vectors()[s[0]]), approx(&v.vectors()[s[1]])], "sector");
    }
    for (i, x) in v.vectors().iter().enumerate() {
        let p = approx(x);
        let class = if v.ghosts().contains(&i) { "ghost" } else { "vector" };
        c.arrow((0.0, 0.0), p, class);
        c.label((1.06 * p.0, 1.06 * p.1), &format!("{}", i + 1));
    }
    Ok(c.finish())
}

/// A drawing with nothing in it.
pub fn empty_svg() -> String {
    Canvas::new().finish()
}

#[cfg(test)]
mod tests {
    use super::*;
    use quasitoric_core::catalog;

    #[test]
    fn decimals() {
        assert_eq!(decimal(0.5, 12), "0.5");
        assert_eq!(decimal(-1.0 / 3.0, 12), "-0.333333333333");
        assert_eq!(decimal(1234.75, 3), "1235");
        assert_eq!(decimal(3.077683537175253, 12), "3.07768353718");
        assert_eq!(decimal(0.0, 12), "0");
    }

    #[test]
    fn pentagon_has_five_points_and_arrows() {
        let svg = polytope_svg(&catalog::pentagon()).unwrap();
        let points = svg.split("points=\"").nth(1).unwrap().split('"').next().unwrap();
        assert_eq!(points.split(' ').count(), 5);
        assert_eq!(svg.matches("<line class=\"normal\"").count(), 5);
        assert_eq!(svg, polytope_svg(&catalog::pentagon()).unwrap());
    }

    #[test]
    fn pyramid_is_not_drawn() {
        let e = polytope_svg(&catalog::square_pyramid()).unwrap_err();
        assert_eq!(e.class(), "DimensionTooHigh");
    }
}
