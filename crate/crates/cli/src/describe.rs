//! Invariants of a single curve.

use std::fmt::Write as _;

use hedgehog::inequality::isoperimetric_deficit;
use hedgehog::{Convexity, Hedgehog, Point2, SingularPoint, SteinerDisk};
use serde::Serialize;

use crate::error::Result;
use crate::format::{exact_form, quantity};
use crate::spec::CurveSpec;

/// A value with its exact form when one is recognized.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Quantity {
    pub value: f64,
    pub exact: Option<String>,
}

impl From<f64> for Quantity {
    fn from(value: f64) -> Self {
        Quantity { value, exact: exact_form(value) }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Description {
    pub label: Option<String>,
    pub support: CurveSpec,
    pub length: Quantity,
    pub area: Quantity,
    pub average_width: Quantity,
    pub steiner_point: Point2,
    pub steiner_disk: SteinerDisk,
    pub convexity: Convexity,
    pub deficit: Quantity,
    /// True when the curve collapses to a point and has no isolated singularities.
    pub is_point: bool,
    pub singular_points: Vec<SingularPoint>,
    pub cusps: usize,
}

pub fn describe(spec: &CurveSpec) -> Result<Description> {
    let h = spec.to_hedgehog()?;
    describe_hedgehog(&h, spec.label.clone())
}

pub fn describe_hedgehog(h: &Hedgehog, label: Option<String>) -> Result<Description> {
    let singular_points = h.singular_points()?;
    Ok(Description {
        label: label.clone(),
        support: CurveSpec::from_poly(h.support(), label),
        length: h.algebraic_length().into(),
        area: h.oriented_area().into(),
        average_width: h.average_width().into(),
        steiner_point: h.steiner_point(),
        steiner_disk: h.steiner_disk(),
        convexity: h.convexity(),
        deficit: isoperimetric_deficit(h).into(),
        is_point: h.is_point(),
        cusps: singular_points.iter().filter(|p| p.is_cusp).count(),
        singular_points,
    })
}

impl Description {
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let mut line = |s: String| {
            out.push_str(&s);
            out.push('\n');
        };
        if let Some(label) = &self.label {
            line(format!("label: {label}"));
        }
        line(format!("h(s) = {}", self.support.to_expr()));
        line(format!("L = {}", quantity(self.length.value)));
        line(format!("A = {}", quantity(self.area.value)));
        line(format!("average width = {}", quantity(self.average_width.value)));
        let (c, r) = (self.steiner_disk.center, self.steiner_disk.radius);
        line(format!("Steiner point = ({}, {})", quantity(c.x), quantity(c.y)));
        line(format!("Steiner disk radius = {}", quantity(r)));
        line(format!("convexity: {}", convexity_name(self.convexity)));
        line(format!("L² - 4πA = {}", quantity(self.deficit.value)));
        if self.is_point {
            line("singular points: none isolated (the curve is a single point)".into());
        } else {
            line(format!("singular points: {} ({} cusps)", self.singular_points.len(), self.cusps));
        }
        for p in &self.singular_points {
            let mut row = format!("  s = {}  at ({}, {})", quantity(p.s), quantity(p.location.x), quantity(p.location.y));
            let _ = write!(row, "  {}", if p.is_cusp { "cusp" } else { "non-cusp" });
            line(row);
        }
        out
    }
}

fn convexity_name(c: Convexity) -> &'static str {
    match c {
        Convexity::Convex => "convex",
        Convexity::Nonconvex => "nonconvex",
        Convexity::Marginal => "marginal",
    }
}
