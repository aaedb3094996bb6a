//! Deterministic SVG figures for planar inputs.
//!
//! Coordinates are converted to pixels with exact rational arithmetic and
//! rounded to three decimals, so output is byte-identical everywhere.

use std::fmt::Write;

use num_bigint::BigInt;
use polynormal_core::covering::ConvexCell;
use polynormal_core::rational::{ceil_int, floor_int};
use polynormal_core::{g_set, normal_fan, Budget, CoverVerdict, Point, Polytope, Rational};

use crate::CliError;

const UNIT: i64 = 60;
const PALETTE: [&str; 6] = ["#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#17becf"];

#[derive(Clone, Debug)]
enum Item {
    Polygon { points: Vec<Point>, class: String },
    Dot { at: Point, class: String },
    Line { from: Point, to: Point, class: String },
}

#[derive(Clone, Debug, Default)]
pub struct Figure {
    title: String,
    items: Vec<Item>,
}

impl Figure {
    fn new(title: impl Into<String>) -> Self {
        Figure {
            title: title.into(),
            items: Vec::new(),
        }
    }

    fn polygon(&mut self, points: Vec<Point>, class: impl Into<String>) {
        self.items.push(Item::Polygon {
            points,
            class: class.into(),
        });
    }

    fn dot(&mut self, at: Point, class: impl Into<String>) {
        self.items.push(Item::Dot {
            at,
            class: class.into(),
        });
    }

    fn line(&mut self, from: Point, to: Point, class: impl Into<String>) {
        self.items.push(Item::Line {
            from,
            to,
            class: class.into(),
        });
    }

    pub fn polygon_count(&self, class: &str) -> usize {
        self.items
            .iter()
            .filter(|i| matches!(i, Item::Polygon { class: c, .. } if c.split(' ').any(|w| w == class)))
            .count()
    }

    fn points(&self) -> impl Iterator<Item = &Point> {
        self.items.iter().flat_map(|i| match i {
            Item::Polygon { points, .. } => points.iter().collect::<Vec<_>>(),
            Item::Dot { at, .. } => vec![at],
            Item::Line { from, to, .. } => vec![from, to],
        })
    }

    pub fn render(&self) -> String {
        let (mut lo, mut hi) = ([BigInt::from(0), BigInt::from(0)], [BigInt::from(0), BigInt::from(0)]);
        let mut first = true;
        for p in self.points() {
            for k in 0..2 {
                let (f, c) = (floor_int(&p[k]), ceil_int(&p[k]));
                if first || f < lo[k] {
                    lo[k] = f;
                }
                if first || c > hi[k] {
                    hi[k] = c;
                }
            }
            first = false;
        }
        for k in 0..2 {
            lo[k] -= 1;
            hi[k] += 1;
        }
        let width = (&hi[0] - &lo[0]) * UNIT;
        let height = (&hi[1] - &lo[1]) * UNIT;
        let px = |p: &Point| -> (String, String) {
            let x = (&p[0] - Rational::from_integer(lo[0].clone())) * Rational::from_integer(UNIT.into());
            let y = (Rational::from_integer(hi[1].clone()) - &p[1]) * Rational::from_integer(UNIT.into());
            (fixed(&x), fixed(&y))
        };

        let mut s = String::new();
        writeln!(
            s,
            r#"<svg xmlns="http://www.w3.org/2000/svg" viewBox="0 0 {width} {height}" width="{width}" height="{height}">"#
        )
        .unwrap();
        writeln!(s, "<title>{}</title>", escape(&self.title)).unwrap();
        s.push_str("<style>\n");
        s.push_str(".grid{stroke:#e0e0e0;stroke-width:1}\n.axis{stroke:#9e9e9e;stroke-width:1.5}\n");
        s.push_str(".target{fill:#f5f5f5;stroke:#000;stroke-width:2.5}\n");
        s.push_str(".tile{fill:none;stroke-width:1.5;stroke-opacity:0.8}\n");
        s.push_str(".residual{fill:#e53935;fill-opacity:0.55;stroke:#b71c1c;stroke-width:2}\n");
        s.push_str(".sector{fill-opacity:0.25;stroke:none}\n.ray{stroke:#000;stroke-width:2}\n");
        s.push_str(".g-point{stroke:#000;stroke-width:0.75}\n.witness{fill:#000}\n");
        for (i, color) in PALETTE.iter().enumerate() {
            writeln!(s, ".origin-{i}{{stroke:{color};fill:{color}}}").unwrap();
            writeln!(s, ".tile.origin-{i}{{fill:none}}").unwrap();
        }
        s.push_str("</style>\n");

        let mut x = lo[0].clone();
        while x <= hi[0] {
            let class = if x == BigInt::from(0) { "axis" } else { "grid" };
            let xp = (&x - &lo[0]) * UNIT;
            writeln!(s, r#"<line class="{class}" x1="{xp}" y1="0" x2="{xp}" y2="{height}"/>"#).unwrap();
            x += 1;
        }
        let mut y = lo[1].clone();
        while y <= hi[1] {
            let class = if y == BigInt::from(0) { "axis" } else { "grid" };
            let yp = (&hi[1] - &y) * UNIT;
            writeln!(s, r#"<line class="{class}" x1="0" y1="{yp}" x2="{width}" y2="{yp}"/>"#).unwrap();
            y += 1;
        }

        for item in &self.items {
            match item {
                Item::Polygon { points, class } => {
                    let coords: Vec<String> = points
                        .iter()
                        .map(|p| {
                            let (a, b) = px(p);
                            format!("{a},{b}")
                        })
                        .collect();
                    writeln!(s, r#"<polygon class="{class}" points="{}"/>"#, coords.join(" ")).unwrap();
                }
                Item::Dot { at, class } => {
                    let (a, b) = px(at);
                    writeln!(s, r#"<circle class="{class}" cx="{a}" cy="{b}" r="5"/>"#).unwrap();
                }
                Item::Line { from, to, class } => {
                    let (a, b) = px(from);
                    let (c, d) = px(to);
                    writeln!(s, r#"<line class="{class}" x1="{a}" y1="{b}" x2="{c}" y2="{d}"/>"#).unwrap();
                }
            }
        }
        s.push_str("</svg>\n");
        s
    }
}

/// Exact three-decimal rendering, rounding half away from zero.
fn fixed(r: &Rational) -> String {
    let scaled = r * Rational::from_integer(1000.into());
    let neg = scaled < Rational::from_integer(0.into());
    let mag = if neg { -scaled } else { scaled };
    let n = (mag + Rational::new(1.into(), 2.into())).floor().to_integer();
    let (int, frac) = (&n / 1000, &n % 1000);
    let frac = format!("{frac:03}");
    let frac = frac.trim_end_matches('0');
    let sign = if neg && n != BigInt::from(0) { "-" } else { "" };
    if frac.is_empty() {
        format!("{sign}{int}")
    } else {
        format!("{sign}{int}.{frac}")
    }
}

fn escape(text: &str) -> String {
    text.replace('&', "&amp;").replace('<', "&lt;").replace('>', "&gt;")
}

fn require_planar(ps: &[&Polytope]) -> Result<(), CliError> {
    match ps.iter().find(|p| p.dim() != 2) {
        Some(p) => Err(CliError::NotTwoDimensional(p.dim())),
        None => Ok(()),
    }
}

/// Boundary of a polygon in counterclockwise order.
fn ring(p: &Polytope) -> Vec<Point> {
    ring_of(p.vertices())
}

fn ring_of(vertices: &[Point]) -> Vec<Point> {
    let Some(c) = Point::centroid(vertices) else {
        return Vec::new();
    };
    // Sort by angle around the centroid using exact half-plane and cross tests.
    let mut vs: Vec<Point> = vertices.to_vec();
    let half = |p: &Point| {
        let (dx, dy) = (&p[0] - &c[0], &p[1] - &c[1]);
        let zero = Rational::from_integer(0.into());
        !(dy > zero || (dy == zero && dx > zero))
    };
    vs.sort_by(|a, b| {
        half(a).cmp(&half(b)).then_with(|| {
            let cross = (&a[0] - &c[0]) * (&b[1] - &c[1]) - (&a[1] - &c[1]) * (&b[0] - &c[0]);
            cross.cmp(&Rational::from_integer(0.into())).reverse()
        })
    });
    vs
}

/// Index of the first vertex `v` of `q` with `g - v` integral.
fn origin_class(q: &Polytope, g: &Point) -> usize {
    q.vertices().iter().position(|v| (g - v).is_integral()).unwrap_or(0) % PALETTE.len()
}

fn cover_items(
    fig: &mut Figure,
    target: &Polytope,
    tile: &Polytope,
    base: &Polytope,
    bases: &[Point],
    verdict: &CoverVerdict,
) {
    fig.polygon(ring(target), "target");
    for cell in &verdict.residual_cells {
        fig.polygon(ring_of(ConvexCell::vertices(cell)), "residual");
    }
    for g in bases {
        let class = format!("tile origin-{}", origin_class(base, g));
        fig.polygon(ring(&tile.translate(g)), class);
    }
    for g in bases {
        fig.dot(g.clone(), format!("g-point origin-{}", origin_class(base, g)));
    }
    if let Some(w) = &verdict.witness {
        fig.dot(w.clone(), "witness");
    }
}

/// `cP` against the `G((c-1)P)`-translates of `P`.
pub fn cover_figure(p: &Polytope, c: &Rational, budget: Budget) -> Result<Figure, CliError> {
    require_planar(&[p])?;
    let verdict = polynormal_core::convex_normal_at(p, c, budget)?;
    let base = p.scale(&(c - Rational::from_integer(1.into())))?;
    let bases = g_set(&base, budget)?.to_vec();
    let mut fig = Figure::new(format!("c = {c}: {verdict}"));
    cover_items(&mut fig, &p.scale(c)?, p, &base, &bases, &verdict);
    Ok(fig)
}

/// `Q + P` against the `G(Q)`-translates of `P`.
pub fn pair_figure(q: &Polytope, p: &Polytope, budget: Budget) -> Result<Figure, CliError> {
    require_planar(&[q, p])?;
    let verdict = polynormal_core::pair_convex_normal(q, p, budget)?;
    let bases = g_set(q, budget)?.to_vec();
    let mut fig = Figure::new(format!("Q + P: {verdict}"));
    cover_items(&mut fig, &q.minkowski_sum(p)?, p, q, &bases, &verdict);
    Ok(fig)
}

/// Normal fan of a polygon: one shaded sector per vertex cone.
pub fn fan_figure(p: &Polytope) -> Result<Figure, CliError> {
    require_planar(&[p])?;
    let fan = normal_fan(p);
    let radius = Rational::from_integer(3.into());
    let tip = |g: &[BigInt]| {
        let m = g
            .iter()
            .map(|x| if x < &BigInt::from(0) { -x } else { x.clone() })
            .max()
            .unwrap();
        let s = &radius / Rational::from_integer(m);
        Point::from_big_ints(g).scaled(&s)
    };
    let mut fig = Figure::new(format!("normal fan, {} vertex cone(s)", p.vertices().len()));
    let origin = Point::zero(2);
    for (i, (face, cone)) in fan.iter().filter(|(f, _)| f.dim() == 0).enumerate() {
        let _ = face;
        let mut pts = vec![origin.clone()];
        pts.extend(cone.generators().iter().map(|g| tip(g)));
        fig.polygon(pts, format!("sector origin-{}", i % PALETTE.len()));
    }
    for (face, cone) in fan.iter().filter(|(f, _)| f.dim() == 1) {
        let _ = face;
        fig.line(origin.clone(), tip(&cone.generators()[0]), "ray");
    }
    Ok(fig)
}

#[cfg(test)]
mod tests {
    use super::*;
    use polynormal_core::paperlab::fixtures;
    use polynormal_core::rational::rat;

    #[test]
    fn fixed_point_rendering() {
        assert_eq!(fixed(&rat(3, 2)), "1.5");
        assert_eq!(fixed(&rat(-1, 3)), "-0.333");
        assert_eq!(fixed(&rat(2, 3)), "0.667");
        assert_eq!(fixed(&rat(-1, 10000)), "0");
        assert_eq!(fixed(&rat(7, 1)), "7");
    }

    #[test]
    fn figures() {
        let b = Budget::default();
        let f = cover_figure(&fixtures::simplex_three_halves(), &rat(2, 1), b).unwrap();
        assert_eq!(f.polygon_count("tile"), 9);
        assert_eq!(f.polygon_count("residual"), 0);
        let f = cover_figure(&fixtures::standard_simplex(2), &rat(2, 1), b).unwrap();
        assert_eq!(f.polygon_count("residual"), 1);
        let f = fan_figure(&fixtures::hexagon()).unwrap();
        assert_eq!(f.polygon_count("sector"), 6);
        assert_eq!(f.render(), fan_figure(&fixtures::hexagon()).unwrap().render());
        assert!(matches!(
            fan_figure(&fixtures::standard_simplex(3)),
            Err(CliError::NotTwoDimensional(3))
        ));
    }
}
