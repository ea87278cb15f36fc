//! SVG pictures of rank-two momentum polytopes.
//!
//! Fundamental weights are drawn through a fixed linear map per group
//! (scale `s = 100`, `y` pointing up before the SVG flip):
//!
//! | group  | `π1`            | `π2`            |
//! |--------|-----------------|-----------------|
//! | A2     | `(−1/2, √3/2)s` | `(1/2, √3/2)s`  |
//! | G2     | `(1/2, √3/2)s`  | `(0, √3)s`      |
//! | B2     | `(0, 1)s`       | `(1/2, 1/2)s`   |
//! | C2     | `(0, 1)s`       | `(1, 1)s`       |
//! | A1xA1  | `(1, 0)s`       | `(0, 1)s`       |
//!
//! Coordinates are exact numbers `a + b√3` until they are printed with six
//! decimals; that printing is the only inexact step.

use std::cmp::Ordering;
use std::collections::BTreeSet;
use std::fmt::Write;

use momentum_core::momentum::{momentum_polytope_projective, naive_polytope, BoundedAnswer};
use momentum_core::repweights::reducible_weights;
use momentum_core::rootsys::{CartanType, RootSystem};
use momentum_core::{Error, QPolyhedron, QVec, Rational};
use num_traits::{Signed, ToPrimitive, Zero};
use serde::Deserialize;

use crate::error::CliError;

pub const SCALE: i64 = 100;

/// Either highest weights, or explicit regions to draw.
#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RenderInput {
    #[serde(default)]
    hw: Option<Vec<QVec>>,
    #[serde(default)]
    polytope: Option<QPolyhedron>,
    #[serde(default)]
    light: Option<QPolyhedron>,
    #[serde(default)]
    weights: Vec<QVec>,
}

/// `a + b√3`.
#[derive(Clone, PartialEq, Debug)]
struct Surd {
    a: Rational,
    b: Rational,
}

impl Surd {
    fn to_f64(&self) -> f64 {
        let a = self.a.to_f64().expect("finite");
        let b = self.b.to_f64().expect("finite");
        a + b * 3f64.sqrt()
    }
}

/// Images of `π1` and `π2` as `(x, y)` pairs, in units of `s`.
struct DrawMap {
    images: [(Surd, Surd); 2],
}

fn r(n: i64, d: i64) -> Rational {
    Rational::new(n.into(), d.into())
}

fn surd(a: Rational, b: Rational) -> Surd {
    Surd { a, b }
}

impl DrawMap {
    fn for_group(rs: &RootSystem) -> Result<Self, CliError> {
        let spec = rs.spec();
        let unsupported = || {
            CliError::Core(Error::Unsupported {
                what: format!("drawing the group {spec}"),
                needs: "a rank-two semisimple group (A2, B2, C2, G2 or A1xA1) without central torus"
                    .into(),
            })
        };
        if spec.torus_rank != 0 || spec.semisimple_rank() != 2 {
            return Err(unsupported());
        }
        let (z, one, half) = (r(0, 1), r(1, 1), r(1, 2));
        let plain = |x: &Rational, y: &Rational| (surd(x.clone(), z.clone()), surd(y.clone(), z.clone()));
        let images = match spec.factors.as_slice() {
            [f] if f.kind == CartanType::A => [
                (surd(-half.clone(), z.clone()), surd(z.clone(), half.clone())),
                (surd(half.clone(), z.clone()), surd(z.clone(), half.clone())),
            ],
            [f] if f.kind == CartanType::G => [
                (surd(half.clone(), z.clone()), surd(z.clone(), half.clone())),
                (surd(z.clone(), z.clone()), surd(z.clone(), one.clone())),
            ],
            [f] if f.kind == CartanType::B => [plain(&z, &one), plain(&half, &half)],
            [f] if f.kind == CartanType::C => [plain(&z, &one), plain(&one, &one)],
            [_, _] => [plain(&one, &z), plain(&z, &one)],
            _ => return Err(unsupported()),
        };
        Ok(DrawMap { images })
    }

    fn apply(&self, v: &QVec) -> (f64, f64) {
        let s = Rational::from_integer(SCALE.into());
        let mut x = surd(r(0, 1), r(0, 1));
        let mut y = x.clone();
        for (c, (ix, iy)) in v.iter().zip(&self.images) {
            let c = c * &s;
            x.a += &c * &ix.a;
            x.b += &c * &ix.b;
            y.a += &c * &iy.a;
            y.b += &c * &iy.b;
        }
        (x.to_f64(), -y.to_f64())
    }
}

fn fmt6(x: f64) -> String {
    let s = format!("{:.6}", x);
    if s == "-0.000000" {
        "0.000000".into()
    } else {
        s
    }
}

fn cross(o: &QVec, a: &QVec, b: &QVec) -> Rational {
    (&a[0] - &o[0]) * (&b[1] - &o[1]) - (&a[1] - &o[1]) * (&b[0] - &o[0])
}

/// Vertices of a plane polytope in counterclockwise order, exactly.
fn cyclic_order(p: &QPolyhedron) -> Vec<QVec> {
    let mut pts: Vec<QVec> = p.points().to_vec();
    if pts.len() < 3 {
        pts.sort();
        return pts;
    }
    let n = Rational::from_integer((pts.len() as i64).into());
    let c: QVec = (0..2)
        .map(|i| pts.iter().map(|p| p[i].clone()).sum::<Rational>() / &n)
        .collect();
    // Upper half-plane first (angle in [0, π)), then by cross product.
    let half = |p: &QVec| {
        let (dx, dy) = (&p[0] - &c[0], &p[1] - &c[1]);
        if dy.is_positive() || (dy.is_zero() && dx.is_positive()) {
            0
        } else {
            1
        }
    };
    pts.sort_by(|a, b| {
        half(a).cmp(&half(b)).then_with(|| {
            let k = cross(&c, a, b);
            if k.is_positive() {
                Ordering::Less
            } else if k.is_negative() {
                Ordering::Greater
            } else {
                Ordering::Equal
            }
        })
    });
    pts
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
enum Glyph {
    Dot,
    Square,
}

struct Marker {
    at: (f64, f64),
    glyph: Glyph,
    label: Option<String>,
}

struct Scene {
    walls: Vec<(f64, f64)>,
    hull: Option<Vec<(f64, f64)>>,
    light: Option<Vec<(f64, f64)>>,
    dark: Option<Vec<(f64, f64)>>,
    markers: Vec<Marker>,
}

fn points_attr(pts: &[(f64, f64)]) -> String {
    pts.iter()
        .map(|&(x, y)| format!("{},{}", fmt6(x), fmt6(y)))
        .collect::<Vec<_>>()
        .join(" ")
}

impl Scene {
    fn to_svg(&self) -> String {
        let mut all: Vec<(f64, f64)> = self.walls.clone();
        for poly in [&self.hull, &self.light, &self.dark].into_iter().flatten() {
            all.extend(poly);
        }
        all.extend(self.markers.iter().map(|m| m.at));
        let (mut x0, mut y0, mut x1, mut y1) = (f64::MAX, f64::MAX, f64::MIN, f64::MIN);
        for &(x, y) in &all {
            x0 = x0.min(x);
            y0 = y0.min(y);
            x1 = x1.max(x);
            y1 = y1.max(y);
        }
        let floor = SCALE as f64;
        let (w, h) = ((x1 - x0).max(floor * 1e-3), (y1 - y0).max(floor * 1e-3));
        let (mx, my) = (0.05 * w, 0.05 * h);
        let dot = 0.02 * w.max(h);

        let mut s = String::new();
        s.push_str("<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n");
        let _ = writeln!(
            s,
            "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" viewBox=\"{} {} {} {}\">",
            fmt6(x0 - mx),
            fmt6(y0 - my),
            fmt6(w + 2.0 * mx),
            fmt6(h + 2.0 * my)
        );
        let stroke = fmt6(0.004 * w.max(h));
        let _ = writeln!(
            s,
            "<g id=\"walls\" fill=\"none\" stroke=\"black\" stroke-width=\"{stroke}\" stroke-dasharray=\"{} {}\">",
            fmt6(0.02 * w.max(h)),
            fmt6(0.02 * w.max(h))
        );
        let _ = writeln!(s, "<polyline points=\"{}\"/>", points_attr(&self.walls));
        s.push_str("</g>\n");
        let layers = [
            ("weight-hull", "fill=\"none\" stroke=\"gray\"", &self.hull),
            ("light", "fill=\"#d9d9d9\" stroke=\"none\"", &self.light),
            ("dark", "fill=\"#7f7f7f\" stroke=\"black\"", &self.dark),
        ];
        for (id, style, poly) in layers {
            let _ = writeln!(s, "<g id=\"{id}\" {style} stroke-width=\"{stroke}\">");
            if let Some(pts) = poly {
                let _ = writeln!(s, "<polygon points=\"{}\"/>", points_attr(pts));
            }
            s.push_str("</g>\n");
        }
        let font = fmt6(0.05 * w.max(h));
        let _ = writeln!(s, "<g id=\"markers\" fill=\"black\" font-size=\"{font}\">");
        for m in &self.markers {
            let (x, y) = m.at;
            match m.glyph {
                Glyph::Dot => {
                    let _ = writeln!(s, "<circle cx=\"{}\" cy=\"{}\" r=\"{}\"/>", fmt6(x), fmt6(y), fmt6(dot / 2.0));
                }
                Glyph::Square => {
                    let _ = writeln!(
                        s,
                        "<rect x=\"{}\" y=\"{}\" width=\"{}\" height=\"{}\"/>",
                        fmt6(x - dot / 2.0),
                        fmt6(y - dot / 2.0),
                        fmt6(dot),
                        fmt6(dot)
                    );
                }
            }
            if let Some(label) = &m.label {
                let _ = writeln!(
                    s,
                    "<text x=\"{}\" y=\"{}\">{label}</text>",
                    fmt6(x + dot),
                    fmt6(y - dot)
                );
            }
        }
        s.push_str("</g>\n</svg>\n");
        s
    }
}

fn region(map: &DrawMap, p: &QPolyhedron) -> Result<Option<Vec<(f64, f64)>>, CliError> {
    if p.dim() != 2 {
        return Err(Error::Shape { expected: 2, found: p.dim() }.into());
    }
    if p.is_empty() {
        return Ok(None);
    }
    if !p.is_polytope() {
        return Err(Error::NotPolytope.into());
    }
    Ok(Some(cyclic_order(p).iter().map(|v| map.apply(v)).collect()))
}

/// The SVG document, and the projective answer when highest weights were given.
pub fn render(rs: &RootSystem, input: RenderInput) -> Result<(String, Option<BoundedAnswer>), CliError> {
    let map = DrawMap::for_group(rs)?;
    let (dark, light, weights, answer, highest) = match (input.hw, input.polytope) {
        (Some(hw), None) => {
            let answer = momentum_polytope_projective(rs, &hw)?;
            let dark = answer.exact.clone().unwrap_or_else(|| answer.lower.clone());
            let light = naive_polytope(rs, &hw)?;
            let ws = reducible_weights(rs, &hw)?;
            let weights: Vec<QVec> = ws.entries(rs).into_keys().map(|w| rs.star_linear(&w)).collect();
            let highest: Vec<QVec> = hw.iter().map(|l| rs.star(l)).collect::<Result<_, _>>()?;
            (dark, Some(light), weights, Some(answer), highest)
        }
        (None, Some(poly)) => (poly, input.light, input.weights, None, Vec::new()),
        _ => {
            return Err(CliError::parse(
                "render payload needs exactly one of `hw` or `polytope`",
            ))
        }
    };
    for w in &weights {
        if w.len() != 2 {
            return Err(Error::Shape { expected: 2, found: w.len() }.into());
        }
    }

    let dark_pts = region(&map, &dark)?;
    let light_pts = light.as_ref().map(|l| region(&map, l)).transpose()?.flatten();
    let hull_pts = if weights.is_empty() {
        None
    } else {
        region(&map, &QPolyhedron::hull(weights.clone())?)?
    };

    let dominant: BTreeSet<QVec> = weights.iter().filter(|w| rs.is_dominant(w)).cloned().collect();
    let mut markers = Vec::new();
    for w in &dominant {
        let label = highest.iter().position(|h| h == w).map(|k| {
            if highest.len() == 1 {
                "λ*".to_string()
            } else {
                format!("λ{}*", k + 1)
            }
        });
        markers.push(Marker { at: map.apply(w), glyph: Glyph::Dot, label });
    }
    // Fundamental weights get their label on an existing dot, or a square.
    for i in (0..2).filter(|_| !weights.is_empty()) {
        let pi = QVec::unit(2, i);
        let name = format!("π{}", i + 1);
        match dominant.iter().position(|w| w == &pi) {
            Some(k) if markers[k].label.is_none() => markers[k].label = Some(name),
            Some(_) => {}
            None => markers.push(Marker { at: map.apply(&pi), glyph: Glyph::Square, label: Some(name) }),
        }
    }

    let mut reach = SCALE as f64;
    for poly in [&hull_pts, &light_pts, &dark_pts].into_iter().flatten() {
        for &(x, y) in poly {
            reach = reach.max((x * x + y * y).sqrt());
        }
    }
    let wall_end = |i: usize| {
        let (x, y) = map.apply(&QVec::unit(2, i));
        let len = (x * x + y * y).sqrt();
        (x * 1.1 * reach / len, y * 1.1 * reach / len)
    };
    let scene = Scene {
        walls: vec![wall_end(0), (0.0, 0.0), wall_end(1)],
        hull: hull_pts,
        light: light_pts,
        dark: dark_pts,
        markers,
    };
    Ok((scene.to_svg(), answer))
}
