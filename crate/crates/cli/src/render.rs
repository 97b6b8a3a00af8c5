//! SVG and CSV output of the curve families.

use std::f64::consts::TAU;
use std::fmt::Write as _;
use std::str::FromStr;

use hedgehog::midpoint::circumscribed_polygon;
use hedgehog::preserving::k_central_symmetral;
use hedgehog::{Hedgehog, MidpointSet, Point2, PreservingSet};

use crate::error::{CliError, Result};

pub const MIN_SAMPLES: usize = 64;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum CurveSet {
    Oval,
    Perpendicular,
    Preserving,
    Midpoint,
    Symmetral,
    Polygon,
    SteinerDisk,
}

impl CurveSet {
    pub const ALL: [CurveSet; 7] = [
        CurveSet::Oval,
        CurveSet::Perpendicular,
        CurveSet::Preserving,
        CurveSet::Midpoint,
        CurveSet::Symmetral,
        CurveSet::Polygon,
        CurveSet::SteinerDisk,
    ];

    pub fn name(self) -> &'static str {
        match self {
            CurveSet::Oval => "oval",
            CurveSet::Perpendicular => "perpendicular",
            CurveSet::Preserving => "preserving",
            CurveSet::Midpoint => "midpoint",
            CurveSet::Symmetral => "symmetral",
            CurveSet::Polygon => "polygon",
            CurveSet::SteinerDisk => "steiner_disk",
        }
    }

    fn style(self) -> (&'static str, &'static str) {
        match self {
            CurveSet::Oval => ("#1f77b4", ""),
            CurveSet::Perpendicular => ("#ff7f0e", ""),
            CurveSet::Preserving => ("#2ca02c", ""),
            CurveSet::Midpoint => ("#d62728", ""),
            CurveSet::Symmetral => ("#9467bd", "6 4"),
            CurveSet::Polygon => ("#8c564b", ""),
            CurveSet::SteinerDisk => ("#7f7f7f", "2 3"),
        }
    }
}

impl FromStr for CurveSet {
    type Err = CliError;

    fn from_str(s: &str) -> Result<Self> {
        let key = s.trim().replace('-', "_");
        CurveSet::ALL
            .into_iter()
            .find(|c| c.name() == key)
            .ok_or_else(|| {
                let names: Vec<_> = CurveSet::ALL.iter().map(|c| c.name()).collect();
                CliError::Input(format!("unknown set '{s}'; expected one of {}", names.join(", ")))
            })
    }
}

/// Comma-separated set names, duplicates ignored, order kept.
pub fn parse_sets(text: &str) -> Result<Vec<CurveSet>> {
    let mut sets = Vec::new();
    for part in text.split(',').filter(|p| !p.trim().is_empty()) {
        let set: CurveSet = part.parse()?;
        if !sets.contains(&set) {
            sets.push(set);
        }
    }
    if sets.is_empty() {
        return Err(CliError::Input("--sets: no curve sets given".into()));
    }
    Ok(sets)
}

#[derive(Clone, Debug, PartialEq)]
pub struct RenderRequest {
    pub sets: Vec<CurveSet>,
    pub k: usize,
    pub samples: usize,
    pub polygon_base_angle: f64,
}

/// One sampled curve: parameter values and points.
#[derive(Clone, Debug, PartialEq)]
pub struct Layer {
    pub set: CurveSet,
    pub params: Vec<f64>,
    pub points: Vec<Point2>,
}

fn sample(samples: usize, period: f64, f: impl Fn(f64) -> Point2) -> (Vec<f64>, Vec<Point2>) {
    let params: Vec<f64> = (0..samples).map(|i| period * i as f64 / samples as f64).collect();
    let points = params.iter().map(|&s| f(s)).collect();
    (params, points)
}

/// Samples every requested set. Smooth curves get exactly `samples` points over one
/// period; the polygon gets its `k` vertices.
pub fn layers(h: &Hedgehog, req: &RenderRequest) -> Result<Vec<Layer>> {
    if req.samples < MIN_SAMPLES {
        return Err(CliError::Input(format!("--samples must be at least {MIN_SAMPLES}, got {}", req.samples)));
    }
    if !req.polygon_base_angle.is_finite() {
        return Err(CliError::Input("--polygon-angle must be finite".into()));
    }
    let n = req.samples;
    let mut out = Vec::with_capacity(req.sets.len());
    for &set in &req.sets {
        let (params, points) = match set {
            CurveSet::Oval => sample(n, TAU, |s| h.point_at(s)),
            CurveSet::Perpendicular => sample(n, TAU, |s| h.perp_point_at(s)),
            CurveSet::Preserving => {
                let p = PreservingSet::new(h, req.k)?;
                sample(n, TAU, |s| p.point_at(s))
            }
            CurveSet::Midpoint => {
                let m = MidpointSet::new(h, req.k)?;
                sample(n, m.period(), |s| m.point_at(s))
            }
            CurveSet::Symmetral => {
                let c = k_central_symmetral(h, req.k)?;
                sample(n, TAU, |s| c.point_at(s))
            }
            CurveSet::SteinerDisk => {
                let d = h.steiner_disk();
                sample(n, TAU, |s| d.center + d.radius * Point2::unit_dir(s))
            }
            CurveSet::Polygon => {
                let poly = circumscribed_polygon(h, req.k, req.polygon_base_angle)?;
                let params = (1..=req.k).map(|j| poly.edge_normal_angle(j)).collect();
                (params, poly.vertices)
            }
        };
        if let Some(bad) = points.iter().find(|p| !p.is_finite()) {
            return Err(CliError::Core(hedgehog::Error::Numerical(format!(
                "non-finite point {bad:?} in set {}",
                set.name()
            ))));
        }
        out.push(Layer { set, params, points });
    }
    Ok(out)
}

/// `set,s,x,y` rows, LF line endings.
pub fn to_csv(layers: &[Layer]) -> String {
    let mut out = String::from("set,s,x,y\n");
    for layer in layers {
        for (s, p) in layer.params.iter().zip(&layer.points) {
            let _ = writeln!(out, "{},{},{},{}", layer.set.name(), s, p.x, p.y);
        }
    }
    out
}

/// Layers as one SVG document. The y axis is flipped so counterclockwise curves
/// render counterclockwise.
pub fn to_svg(layers: &[Layer], title: Option<&str>) -> String {
    let all = layers.iter().flat_map(|l| l.points.iter());
    let (mut x0, mut x1, mut y0, mut y1) = (f64::INFINITY, f64::NEG_INFINITY, f64::INFINITY, f64::NEG_INFINITY);
    for p in all {
        x0 = x0.min(p.x);
        x1 = x1.max(p.x);
        y0 = y0.min(-p.y);
        y1 = y1.max(-p.y);
    }
    if !x0.is_finite() {
        (x0, x1, y0, y1) = (-1.0, 1.0, -1.0, 1.0);
    }
    let mut size = (x1 - x0).max(y1 - y0);
    if size <= 0.0 {
        size = 1.0;
        (x0, x1, y0, y1) = (x0 - 0.5, x1 + 0.5, y0 - 0.5, y1 + 0.5);
    }
    let margin = 0.05 * size;
    let (vx, vy) = (x0 - margin, y0 - margin);
    let (vw, vh) = (x1 - x0 + 2.0 * margin, y1 - y0 + 2.0 * margin);
    let stroke = 0.003 * size;

    let mut svg = String::new();
    let _ = writeln!(svg, r#"<?xml version="1.0" encoding="UTF-8"?>"#);
    let _ = writeln!(
        svg,
        "<!-- y axis flipped: a point (x, y) is drawn at (x, -y), so counterclockwise curves render counterclockwise -->"
    );
    let _ = writeln!(
        svg,
        r#"<svg xmlns="http://www.w3.org/2000/svg" viewBox="{vx} {vy} {vw} {vh}" width="800" height="{}">"#,
        (800.0 * vh / vw).round()
    );
    if let Some(t) = title {
        let _ = writeln!(svg, "  <title>{}</title>", escape(t));
    }
    for layer in layers {
        let (color, dash) = layer.set.style();
        let mut d = String::new();
        for (i, p) in layer.points.iter().enumerate() {
            let _ = write!(d, "{}{} {} ", if i == 0 { 'M' } else { 'L' }, p.x, -p.y);
        }
        d.push('Z');
        let dash_attr = if dash.is_empty() { String::new() } else { format!(r#" stroke-dasharray="{}""#, scale_dash(dash, stroke)) };
        let _ = writeln!(
            svg,
            r#"  <path class="{}" data-points="{}" d="{}" fill="none" stroke="{color}" stroke-width="{stroke}"{dash_attr}/>"#,
            layer.set.name(),
            layer.points.len(),
            d.trim_end()
        );
    }
    let font = 0.03 * size;
    let _ = writeln!(svg, r#"  <g class="legend" font-family="sans-serif" font-size="{font}">"#);
    for (i, layer) in layers.iter().enumerate() {
        let (color, _) = layer.set.style();
        let y = vy + font * (1.5 + 1.3 * i as f64);
        let x = vx + font;
        let _ = writeln!(
            svg,
            r#"    <line x1="{x}" y1="{}" x2="{}" y2="{}" stroke="{color}" stroke-width="{stroke}"/><text x="{}" y="{y}">{}</text>"#,
            y - 0.3 * font,
            x + 1.5 * font,
            y - 0.3 * font,
            x + 2.0 * font,
            layer.set.name()
        );
    }
    svg.push_str("  </g>\n</svg>\n");
    svg
}

fn scale_dash(pattern: &str, stroke: f64) -> String {
    pattern
        .split(' ')
        .map(|v| (v.parse::<f64>().unwrap_or(1.0) * stroke * 2.0).to_string())
        .collect::<Vec<_>>()
        .join(" ")
}

fn escape(s: &str) -> String {
    s.replace('&', "&amp;").replace('<', "&lt;").replace('>', "&gt;")
}

#[cfg(test)]
mod tests {
    use super::*;
    use hedgehog::TrigPoly;

    fn request(sets: &str, k: usize) -> RenderRequest {
        RenderRequest { sets: parse_sets(sets).unwrap(), k, samples: 128, polygon_base_angle: 0.0 }
    }

    #[test]
    fn set_names() {
        assert_eq!(parse_sets("oval, steiner-disk,oval").unwrap(), vec![CurveSet::Oval, CurveSet::SteinerDisk]);
        assert!(parse_sets("oval,bogus").is_err());
        assert!(parse_sets("").is_err());
    }

    #[test]
    fn sample_counts_and_finiteness() {
        let h = Hedgehog::new(TrigPoly::constant(30.0) + TrigPoly::sin(2, 1.0) + TrigPoly::cos(3, 1.0));
        let req = request("oval,perpendicular,preserving,midpoint,symmetral,polygon,steiner_disk", 3);
        let ls = layers(&h, &req).unwrap();
        for l in &ls {
            let expected = if l.set == CurveSet::Polygon { 3 } else { 128 };
            assert_eq!(l.points.len(), expected, "{:?}", l.set);
            assert!(l.points.iter().all(|p| p.is_finite()));
        }
        let svg = to_svg(&ls, Some("test"));
        assert!(svg.contains("y axis flipped"));
        assert_eq!(svg.matches("<path").count(), 7);
        assert!(svg.contains(r#"data-points="128""#));
        let csv = to_csv(&ls);
        assert!(csv.starts_with("set,s,x,y\n"));
        assert!(!csv.contains('\r'));
        assert_eq!(csv.lines().count(), 1 + 6 * 128 + 3);
    }

    #[test]
    fn rejects_small_sample_counts() {
        let h = Hedgehog::circle(1.0);
        let mut req = request("oval", 3);
        req.samples = 10;
        assert_eq!(layers(&h, &req).unwrap_err().exit_code(), 1);
    }

    #[test]
    fn viewbox_has_margin() {
        let ls = layers(&Hedgehog::circle(10.0), &request("oval", 3)).unwrap();
        let svg = to_svg(&ls, None);
        assert!(svg.contains(r#"viewBox="-11 -11 22 22""#), "{svg}");
    }
}
