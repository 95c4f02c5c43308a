//! Points, instances, solutions and the checks shared by every solver.
//!
//! All real comparisons in the crate go through [`tolerance`], a single
//! absolute slack (default `1e-9`) that the CLI may override once at startup.

use std::sync::atomic::{AtomicU64, Ordering};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub const DEFAULT_TOLERANCE: f64 = 1e-9;

static TOLERANCE_BITS: AtomicU64 = AtomicU64::new(DEFAULT_TOLERANCE.to_bits());

/// Current absolute comparison tolerance.
#[inline]
pub fn tolerance() -> f64 {
    f64::from_bits(TOLERANCE_BITS.load(Ordering::Relaxed))
}

/// Overrides the global comparison tolerance. Meant to be called once,
/// before any solver runs.
pub fn set_tolerance(tol: f64) -> Result<()> {
    if !tol.is_finite() || tol < 0.0 {
        return Err(Error::InvalidInput(format!(
            "tolerance must be a finite nonnegative number, got {tol}"
        )));
    }
    TOLERANCE_BITS.store(tol.to_bits(), Ordering::Relaxed);
    Ok(())
}

/// A point in `R^d`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Point {
    coords: Vec<f64>,
}

impl Point {
    pub fn new(coords: Vec<f64>) -> Result<Self> {
        if coords.is_empty() {
            return Err(Error::InvalidInput("point has no coordinates".into()));
        }
        if let Some(c) = coords.iter().find(|c| !c.is_finite()) {
            return Err(Error::InvalidInput(format!("non-finite coordinate {c}")));
        }
        Ok(Point { coords })
    }

    /// Point on the x-axis of `R^dim`.
    pub fn on_axis(x: f64, dim: usize) -> Self {
        let mut coords = vec![0.0; dim.max(1)];
        coords[0] = x;
        Point { coords }
    }

    pub fn coords(&self) -> &[f64] {
        &self.coords
    }

    pub fn dim(&self) -> usize {
        self.coords.len()
    }

    pub fn x(&self) -> f64 {
        self.coords[0]
    }

    /// Squared distance from the x-axis, i.e. the sum of squares of all but
    /// the first coordinate.
    pub fn height_sq(&self) -> f64 {
        self.coords[1..].iter().map(|c| c * c).sum()
    }

    pub fn height(&self) -> f64 {
        self.height_sq().sqrt()
    }

    /// Euclidean distance; callers guarantee equal dimensions.
    #[inline]
    pub fn dist(&self, other: &Point) -> f64 {
        debug_assert_eq!(self.dim(), other.dim());
        self.coords
            .iter()
            .zip(&other.coords)
            .map(|(a, b)| (a - b) * (a - b))
            .sum::<f64>()
            .sqrt()
    }

    pub(crate) fn translated(&self, dx: f64) -> Point {
        let mut coords = self.coords.clone();
        coords[0] += dx;
        Point { coords }
    }
}

impl From<Vec<f64>> for Point {
    /// Unchecked conversion; use [`Point::new`] for untrusted input.
    fn from(coords: Vec<f64>) -> Self {
        Point { coords }
    }
}

impl<const D: usize> From<[f64; D]> for Point {
    fn from(coords: [f64; D]) -> Self {
        Point {
            coords: coords.to_vec(),
        }
    }
}

/// Euclidean distance between two points of equal dimension.
pub fn distance(a: &Point, b: &Point) -> Result<f64> {
    if a.dim() != b.dim() {
        return Err(Error::DimensionMismatch {
            expected: a.dim(),
            found: b.dim(),
        });
    }
    Ok(a.dist(b))
}

/// Max over `points` of the distance to the nearest center.
pub fn covering_radius(points: &[Point], centers: &[Point]) -> Result<f64> {
    if centers.is_empty() {
        return Err(Error::EmptyCenters);
    }
    let mut radius: f64 = 0.0;
    for p in points {
        let mut nearest = f64::INFINITY;
        for c in centers {
            nearest = nearest.min(distance(p, c)?);
        }
        radius = radius.max(nearest);
    }
    Ok(radius)
}

/// A line `origin + t * direction` with unit `direction`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Line {
    origin: Point,
    direction: Point,
}

impl Line {
    /// Builds a line, normalizing `direction` to unit length.
    pub fn new(origin: Point, direction: Point) -> Result<Self> {
        if origin.dim() != direction.dim() {
            return Err(Error::DimensionMismatch {
                expected: origin.dim(),
                found: direction.dim(),
            });
        }
        let norm = direction.coords.iter().map(|c| c * c).sum::<f64>().sqrt();
        if norm <= tolerance() || !norm.is_finite() {
            return Err(Error::DegenerateLine);
        }
        // already-unit directions are kept bit-for-bit
        let direction = if (norm - 1.0).abs() <= 4.0 * f64::EPSILON {
            direction
        } else {
            Point {
                coords: direction.coords.iter().map(|c| c / norm).collect(),
            }
        };
        Ok(Line { origin, direction })
    }

    pub fn x_axis(dim: usize) -> Self {
        Line {
            origin: Point::on_axis(0.0, dim),
            direction: Point::on_axis(1.0, dim),
        }
    }

    pub fn origin(&self) -> &Point {
        &self.origin
    }

    pub fn direction(&self) -> &Point {
        &self.direction
    }

    pub fn dim(&self) -> usize {
        self.origin.dim()
    }

    /// The point at parameter `t` along the line.
    pub fn at(&self, t: f64) -> Point {
        Point {
            coords: self
                .origin
                .coords
                .iter()
                .zip(&self.direction.coords)
                .map(|(o, u)| o + t * u)
                .collect(),
        }
    }
}

/// Problem input: points, the red and blue budgets, the separation, and an
/// optional line the centers must lie on.
#[derive(Debug, Clone, PartialEq)]
pub struct Instance {
    points: Vec<Point>,
    p: usize,
    q: usize,
    alpha: f64,
    line: Option<Line>,
}

impl Instance {
    pub fn new(points: Vec<Point>, p: usize, q: usize, alpha: f64) -> Result<Self> {
        if points.is_empty() {
            return Err(Error::InvalidInput("instance has no points".into()));
        }
        if p < 1 {
            return Err(Error::InvalidInput("p must be at least 1".into()));
        }
        if q < 1 {
            return Err(Error::InvalidInput("q must be at least 1".into()));
        }
        if !alpha.is_finite() || alpha < 0.0 {
            return Err(Error::InvalidInput(format!(
                "alpha must be finite and nonnegative, got {alpha}"
            )));
        }
        let dim = points[0].dim();
        for p in &points {
            if p.dim() != dim {
                return Err(Error::DimensionMismatch {
                    expected: dim,
                    found: p.dim(),
                });
            }
            if p.coords.iter().any(|c| !c.is_finite()) {
                return Err(Error::InvalidInput("non-finite coordinate".into()));
            }
        }
        Ok(Instance {
            points,
            p,
            q,
            alpha,
            line: None,
        })
    }

    pub fn with_line(mut self, line: Line) -> Result<Self> {
        if line.dim() != self.dim() {
            return Err(Error::DimensionMismatch {
                expected: self.dim(),
                found: line.dim(),
            });
        }
        self.line = Some(line);
        Ok(self)
    }

    pub fn without_line(mut self) -> Self {
        self.line = None;
        self
    }

    pub fn points(&self) -> &[Point] {
        &self.points
    }

    pub fn n(&self) -> usize {
        self.points.len()
    }

    pub fn dim(&self) -> usize {
        self.points[0].dim()
    }

    pub fn p(&self) -> usize {
        self.p
    }

    pub fn q(&self) -> usize {
        self.q
    }

    pub fn alpha(&self) -> f64 {
        self.alpha
    }

    pub fn line(&self) -> Option<&Line> {
        self.line.as_ref()
    }

    /// Largest distance between two input points.
    pub fn diameter(&self) -> f64 {
        let mut diam: f64 = 0.0;
        for (i, a) in self.points.iter().enumerate() {
            for b in &self.points[i + 1..] {
                diam = diam.max(a.dist(b));
            }
        }
        diam
    }
}

/// `p` red centers, `q` blue centers and the radius they are claimed to
/// cover the instance with. Centers may repeat.
#[derive(Debug, Clone, PartialEq)]
pub struct Solution {
    pub red: Vec<Point>,
    pub blue: Vec<Point>,
    pub radius: f64,
}

impl Solution {
    pub fn centers(&self) -> impl Iterator<Item = &Point> {
        self.red.iter().chain(self.blue.iter())
    }

    pub fn min_red_blue_separation(&self) -> f64 {
        let mut sep = f64::INFINITY;
        for r in &self.red {
            for b in &self.blue {
                sep = sep.min(r.dist(b));
            }
        }
        sep
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub covered: bool,
    pub min_red_blue_separation: f64,
    pub covering_radius_actual: f64,
}

impl VerificationReport {
    /// Covered, and every red-blue pair at least `required_separation` apart
    /// up to tolerance.
    pub fn passes(&self, required_separation: f64) -> bool {
        self.covered && self.min_red_blue_separation >= required_separation - tolerance()
    }
}

/// Checks a solution against an instance. Never fails: dimension problems
/// surface as an uncovered report with infinite radius.
pub fn verify(instance: &Instance, solution: &Solution) -> VerificationReport {
    let dim = instance.dim();
    let dims_ok = solution.centers().all(|c| c.dim() == dim);
    let centers: Vec<Point> = solution.centers().cloned().collect();
    let actual = if dims_ok {
        covering_radius(instance.points(), &centers).unwrap_or(f64::INFINITY)
    } else {
        f64::INFINITY
    };
    let separation = if dims_ok {
        solution.min_red_blue_separation()
    } else {
        f64::NEG_INFINITY
    };
    VerificationReport {
        covered: actual <= solution.radius + tolerance(),
        min_red_blue_separation: separation,
        covering_radius_actual: actual,
    }
}

/// An instance expressed in a frame where its constraint line is the x-axis,
/// together with the isometry that maps line coordinates back.
#[derive(Debug, Clone)]
pub struct AxisFrame {
    instance: Instance,
    line: Line,
}

impl AxisFrame {
    /// The transformed instance; its line is the x-axis.
    pub fn instance(&self) -> &Instance {
        &self.instance
    }

    /// The original constraint line.
    pub fn line(&self) -> &Line {
        &self.line
    }

    /// Maps a position on the transformed x-axis back to the original space.
    pub fn to_original(&self, x: f64) -> Point {
        self.line.at(x)
    }
}

/// Householder reflection taking unit `u` to `e1`. `None` when `u` already is `e1`.
fn reflector(u: &[f64]) -> Option<Vec<f64>> {
    let mut v = u.to_vec();
    v[0] -= 1.0;
    let norm_sq: f64 = v.iter().map(|c| c * c).sum();
    if norm_sq <= 1e-30 {
        None
    } else {
        Some(v)
    }
}

fn reflect(v: &[f64], x: &[f64]) -> Vec<f64> {
    let norm_sq: f64 = v.iter().map(|c| c * c).sum();
    let dot: f64 = v.iter().zip(x).map(|(a, b)| a * b).sum();
    let scale = 2.0 * dot / norm_sq;
    x.iter().zip(v).map(|(xi, vi)| xi - scale * vi).collect()
}

/// Moves the constraint line onto the x-axis: translates its origin to zero
/// and reflects its direction onto the first basis vector. Distances are
/// preserved exactly up to rounding.
pub fn to_x_axis(instance: &Instance) -> Result<AxisFrame> {
    let line = instance.line().ok_or(Error::MissingLine)?.clone();
    let dir_norm = line.direction.coords.iter().map(|c| c * c).sum::<f64>().sqrt();
    if dir_norm <= tolerance() {
        return Err(Error::DegenerateLine);
    }
    let v = reflector(line.direction.coords());
    let points = instance
        .points()
        .iter()
        .map(|p| {
            let shifted: Vec<f64> = p
                .coords
                .iter()
                .zip(&line.origin.coords)
                .map(|(a, o)| a - o)
                .collect();
            let coords = match &v {
                Some(v) => reflect(v, &shifted),
                None => shifted,
            };
            Point { coords }
        })
        .collect();
    let transformed = Instance {
        points,
        p: instance.p,
        q: instance.q,
        alpha: instance.alpha,
        line: Some(Line::x_axis(instance.dim())),
    };
    Ok(AxisFrame {
        instance: transformed,
        line,
    })
}
