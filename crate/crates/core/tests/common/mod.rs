#![allow(dead_code)]

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rbcenter::{Instance, Line, Point};

pub const ALPHAS: [f64; 4] = [0.0, 0.5, 3.0, 12.0];

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Small line-constrained instance: n in 1..=max_n, d in {1, 2}, p, q in
/// 1..=2, α from [`ALPHAS`]. Every other instance uses a tilted line so the
/// axis transform is exercised.
pub fn small_line_instance(seed: u64, max_n: usize) -> Instance {
    let mut r = rng(seed);
    let n = r.random_range(1..=max_n);
    let d = r.random_range(1..=2);
    let p = r.random_range(1..=2);
    let q = r.random_range(1..=2);
    let alpha = ALPHAS[r.random_range(0..ALPHAS.len())];
    let mut points: Vec<Point> = Vec::with_capacity(n);
    for _ in 0..n {
        // occasionally repeat the previous point
        if !points.is_empty() && r.random_bool(0.15) {
            points.push(points[points.len() - 1].clone());
            continue;
        }
        let mut c: Vec<f64> = (0..d).map(|_| r.random_range(0.0..10.0)).collect();
        if d == 2 {
            c[1] = r.random_range(0.0..2.0);
        }
        points.push(Point::from(c));
    }
    let line = if d == 2 && seed % 2 == 1 {
        let theta: f64 = r.random_range(-0.4..0.4);
        let origin = Point::from([r.random_range(-2.0..2.0), r.random_range(-1.0..1.0)]);
        Line::new(origin, Point::from([theta.cos(), theta.sin()])).unwrap()
    } else {
        Line::x_axis(d)
    };
    Instance::new(points, p, q, alpha).unwrap().with_line(line).unwrap()
}

/// Instance already on the x-axis frame with sizes up to `max_n`.
pub fn axis_instance(seed: u64, max_n: usize, max_budget: usize, alpha: Option<f64>) -> Instance {
    let mut r = rng(seed);
    let n = r.random_range(1..=max_n);
    let d = r.random_range(1..=2);
    let p = r.random_range(1..=max_budget);
    let q = r.random_range(1..=max_budget);
    let alpha = alpha.unwrap_or_else(|| ALPHAS[r.random_range(0..ALPHAS.len())]);
    let points: Vec<Point> = (0..n)
        .map(|_| {
            let mut c = vec![r.random_range(0.0..20.0)];
            if d == 2 {
                c.push(r.random_range(-2.0..2.0));
            }
            Point::from(c)
        })
        .collect();
    Instance::new(points, p, q, alpha).unwrap().with_line(Line::x_axis(d)).unwrap()
}

/// Unconstrained instance in `R^d`.
pub fn free_instance(seed: u64, max_n: usize, d: usize, max_budget: usize) -> Instance {
    let mut r = rng(seed);
    let n = r.random_range(1..=max_n);
    let p = r.random_range(1..=max_budget);
    let q = r.random_range(1..=max_budget);
    let alpha = ALPHAS[r.random_range(0..ALPHAS.len())];
    let points: Vec<Point> = (0..n)
        .map(|_| Point::from((0..d).map(|_| r.random_range(0.0..10.0)).collect::<Vec<f64>>()))
        .collect();
    Instance::new(points, p, q, alpha).unwrap()
}

pub fn heights_and_x(instance: &Instance) -> Vec<(f64, f64)> {
    instance.points().iter().map(|p| (p.x(), p.height())).collect()
}
