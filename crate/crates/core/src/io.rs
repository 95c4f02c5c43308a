//! JSON instance and solution files, plus seeded instance generation.
//!
//! Instance file (`"v": 1`):
//!
//! ```json
//! {"v": 1, "points": [[0.0, 0.0], [10.0, 0.0]], "p": 1, "q": 1, "alpha": 3.0,
//!  "line": {"origin": [0.0, 0.0], "direction": [1.0, 0.0]}}
//! ```
//!
//! `line` is optional and only read by the constrained solver. Floats are
//! written in shortest round-trip form, so parsing a written file gives back
//! the identical doubles.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::{Distribution, Normal};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::geometry::{Instance, Line, Point, Solution, VerificationReport};

pub const FORMAT_VERSION: u32 = 1;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct LineFile {
    pub origin: Vec<f64>,
    pub direction: Vec<f64>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct InstanceFile {
    pub v: u32,
    pub points: Vec<Vec<f64>>,
    pub p: i64,
    pub q: i64,
    pub alpha: f64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub line: Option<LineFile>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Mode {
    Approx,
    Constrained,
}

impl Mode {
    /// Red-blue separation a solution of this mode must reach.
    pub fn required_separation(self, alpha: f64) -> f64 {
        match self {
            Mode::Approx => 0.75 * alpha,
            Mode::Constrained => alpha,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ReportFile {
    pub covered: bool,
    pub min_red_blue_separation: f64,
    pub covering_radius_actual: f64,
    pub required_separation: f64,
    pub passes: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SolutionFile {
    pub v: u32,
    pub mode: Mode,
    pub red: Vec<Vec<f64>>,
    pub blue: Vec<Vec<f64>>,
    pub radius: f64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub report: Option<ReportFile>,
}

fn point_at(coords: &[f64], path: &str, dim: Option<usize>) -> Result<Point> {
    if let Some(d) = dim {
        if coords.len() != d {
            return Err(Error::parse(path, format!("expected {d} coordinates, found {}", coords.len())));
        }
    }
    Point::new(coords.to_vec()).map_err(|e| Error::parse(path, e.to_string()))
}

fn from_json<T: serde::de::DeserializeOwned>(text: &str) -> Result<T> {
    let de = &mut serde_json::Deserializer::from_str(text);
    serde_path_to_error::deserialize(de).map_err(|e| {
        let path = e.path().to_string();
        Error::parse(path, e.into_inner().to_string())
    })
}

impl InstanceFile {
    pub fn from_instance(instance: &Instance) -> Self {
        InstanceFile {
            v: FORMAT_VERSION,
            points: instance.points().iter().map(|p| p.coords().to_vec()).collect(),
            p: instance.p() as i64,
            q: instance.q() as i64,
            alpha: instance.alpha(),
            line: instance.line().map(|l| LineFile {
                origin: l.origin().coords().to_vec(),
                direction: l.direction().coords().to_vec(),
            }),
        }
    }

    pub fn into_instance(self) -> Result<Instance> {
        if self.v != FORMAT_VERSION {
            return Err(Error::parse("v", format!("unsupported version {}", self.v)));
        }
        if self.points.is_empty() {
            return Err(Error::parse("points", "at least one point is required"));
        }
        let dim = self.points[0].len();
        let points = self
            .points
            .iter()
            .enumerate()
            .map(|(i, c)| point_at(c, &format!("points[{i}]"), Some(dim)))
            .collect::<Result<Vec<_>>>()?;
        if self.p < 1 {
            return Err(Error::parse("p", format!("must be at least 1, got {}", self.p)));
        }
        if self.q < 1 {
            return Err(Error::parse("q", format!("must be at least 1, got {}", self.q)));
        }
        if !self.alpha.is_finite() || self.alpha < 0.0 {
            return Err(Error::parse("alpha", format!("must be finite and nonnegative, got {}", self.alpha)));
        }
        let instance = Instance::new(points, self.p as usize, self.q as usize, self.alpha)?;
        match self.line {
            None => Ok(instance),
            Some(l) => {
                let origin = point_at(&l.origin, "line.origin", Some(dim))?;
                let direction = point_at(&l.direction, "line.direction", Some(dim))?;
                let line = Line::new(origin, direction).map_err(|e| Error::parse("line.direction", e.to_string()))?;
                instance.with_line(line)
            }
        }
    }
}

/// Parses and validates an instance file.
pub fn parse_instance(text: &str) -> Result<Instance> {
    from_json::<InstanceFile>(text)?.into_instance()
}

pub fn serialize_instance(instance: &Instance) -> String {
    serde_json::to_string_pretty(&InstanceFile::from_instance(instance)).expect("instance serializes")
}

impl SolutionFile {
    pub fn new(mode: Mode, solution: &Solution, report: Option<(&VerificationReport, f64)>) -> Self {
        SolutionFile {
            v: FORMAT_VERSION,
            mode,
            red: solution.red.iter().map(|p| p.coords().to_vec()).collect(),
            blue: solution.blue.iter().map(|p| p.coords().to_vec()).collect(),
            radius: solution.radius,
            report: report.map(|(r, required)| ReportFile {
                covered: r.covered,
                min_red_blue_separation: r.min_red_blue_separation,
                covering_radius_actual: r.covering_radius_actual,
                required_separation: required,
                passes: r.passes(required),
            }),
        }
    }

    pub fn to_solution(&self) -> Result<Solution> {
        if self.v != FORMAT_VERSION {
            return Err(Error::parse("v", format!("unsupported version {}", self.v)));
        }
        let conv = |pts: &[Vec<f64>], field: &str| -> Result<Vec<Point>> {
            pts.iter()
                .enumerate()
                .map(|(i, c)| point_at(c, &format!("{field}[{i}]"), None))
                .collect()
        };
        if !self.radius.is_finite() || self.radius < 0.0 {
            return Err(Error::parse("radius", format!("must be finite and nonnegative, got {}", self.radius)));
        }
        Ok(Solution {
            red: conv(&self.red, "red")?,
            blue: conv(&self.blue, "blue")?,
            radius: self.radius,
        })
    }
}

pub fn parse_solution(text: &str) -> Result<SolutionFile> {
    from_json(text)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Family {
    /// Uniform in `[0, 10)^d`.
    Uniform,
    /// Gaussian blobs (sd 0.5) around `min(n, p+q)` uniform centers.
    Clustered,
    /// Uniform on the x-axis between 0 and 10.
    Collinear,
}

impl std::str::FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "uniform" => Ok(Family::Uniform),
            "clustered" => Ok(Family::Clustered),
            "collinear" => Ok(Family::Collinear),
            other => Err(Error::InvalidInput(format!(
                "unknown family `{other}` (expected uniform, clustered or collinear)"
            ))),
        }
    }
}

/// Seeded random instance. Every family carries the x-axis as its line.
pub fn generate(seed: u64, n: usize, d: usize, p: usize, q: usize, alpha: f64, family: Family) -> Result<Instance> {
    if n == 0 || d == 0 {
        return Err(Error::InvalidInput("n and d must be positive".into()));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let points: Vec<Point> = match family {
        Family::Uniform => (0..n)
            .map(|_| Point::from((0..d).map(|_| rng.random_range(0.0..10.0)).collect::<Vec<f64>>()))
            .collect(),
        Family::Collinear => (0..n).map(|_| Point::on_axis(rng.random_range(0.0..10.0), d)).collect(),
        Family::Clustered => {
            let blob = Normal::new(0.0, 0.5).expect("valid sd");
            let centers: Vec<Vec<f64>> = (0..(p + q).min(n).max(1))
                .map(|_| (0..d).map(|_| rng.random_range(0.0..10.0)).collect())
                .collect();
            (0..n)
                .map(|i| {
                    let c = &centers[i % centers.len()];
                    Point::from(c.iter().map(|x| x + blob.sample(&mut rng)).collect::<Vec<f64>>())
                })
                .collect()
        }
    };
    Instance::new(points, p, q, alpha)?.with_line(Line::x_axis(d))
}
