//! Brute-force reference solvers for desk-scale validation.
//!
//! Nothing here calls into [`crate::approx`] or [`crate::line`]; the only
//! shared code is [`crate::geometry`].

use crate::error::{Error, Result};
use crate::geometry::{to_x_axis, Instance, Point};
use crate::line::ConstrainedSolution;

/// Size limits beyond which the oracles refuse to run.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct OracleBudget {
    pub max_n: usize,
    pub max_p: usize,
    pub max_q: usize,
    /// Grid spacing for the unconstrained search.
    pub grid_pitch: f64,
    /// Cap on colored center tuples the grid search may evaluate.
    pub max_grid_tuples: f64,
}

impl Default for OracleBudget {
    fn default() -> Self {
        OracleBudget {
            max_n: 7,
            max_p: 2,
            max_q: 2,
            grid_pitch: 0.5,
            max_grid_tuples: 5e7,
        }
    }
}

impl OracleBudget {
    fn admit(&self, instance: &Instance) -> Result<()> {
        if instance.n() > self.max_n || instance.p() > self.max_p || instance.q() > self.max_q {
            return Err(Error::BudgetExceeded(format!(
                "n={} p={} q={} exceeds n<={} p<={} q<={}",
                instance.n(),
                instance.p(),
                instance.q(),
                self.max_n,
                self.max_p,
                self.max_q
            )));
        }
        if !(self.grid_pitch > 0.0) {
            return Err(Error::InvalidInput("grid pitch must be positive".into()));
        }
        Ok(())
    }
}

/// Exhaustive split of `counts` into a part within `p` and the rest within `q`.
pub fn oracle_partition(counts: &[usize], p: usize, q: usize) -> Result<bool> {
    if counts.len() > 20 {
        return Err(Error::BudgetExceeded(format!("{} counts, limit 20", counts.len())));
    }
    Ok((0u32..1 << counts.len()).any(|mask| {
        let (mut a, mut b) = (0, 0);
        for (i, &c) in counts.iter().enumerate() {
            if mask >> i & 1 == 1 {
                a += c;
            } else {
                b += c;
            }
        }
        a <= p && b <= q
    }))
}

// Slack for the oracle's own comparisons; much tighter than the solver's.
const ORACLE_EPS: f64 = 1e-12;

struct LineSearch<'a> {
    intervals: &'a [(f64, f64)],
    positions: &'a [f64],
    alpha: f64,
    red: Vec<f64>,
    blue: Vec<f64>,
    p: usize,
    q: usize,
}

impl LineSearch<'_> {
    fn hit(&self, iv: (f64, f64)) -> bool {
        self.red
            .iter()
            .chain(&self.blue)
            .any(|&c| iv.0 <= c + ORACLE_EPS && c <= iv.1 + ORACLE_EPS)
    }

    /// Every valid colored hitting set drawn from `positions` contains a
    /// center inside the first unhit interval, so branching on that center
    /// explores all of them.
    fn search(&mut self) -> bool {
        let Some(&target) = self
            .intervals
            .iter()
            .filter(|&&iv| !self.hit(iv))
            .min_by(|a, b| a.1.total_cmp(&b.1))
        else {
            return true;
        };
        if self.red.len() == self.p && self.blue.len() == self.q {
            return false;
        }
        for &c in self.positions {
            if c < target.0 - ORACLE_EPS || c > target.1 + ORACLE_EPS {
                continue;
            }
            if self.red.len() < self.p && self.blue.iter().all(|&b| (b - c).abs() >= self.alpha - ORACLE_EPS) {
                self.red.push(c);
                if self.search() {
                    return true;
                }
                self.red.pop();
            }
            if self.blue.len() < self.q && self.red.iter().all(|&r| (r - c).abs() >= self.alpha - ORACLE_EPS) {
                self.blue.push(c);
                if self.search() {
                    return true;
                }
                self.blue.pop();
            }
        }
        false
    }
}

fn chord(x: f64, h: f64, r: f64) -> Option<(f64, f64)> {
    if r + ORACLE_EPS < h {
        return None;
    }
    let w = (r * r - h * h).max(0.0).sqrt();
    Some((x - w, x + w))
}

/// Brute-force decision on the x-axis at radius `r`: the witness (red, blue)
/// positions actually placed, unused colors omitted.
fn line_witness(pts: &[(f64, f64)], p: usize, q: usize, alpha: f64, r: f64) -> Option<(Vec<f64>, Vec<f64>)> {
    let intervals: Vec<(f64, f64)> = pts.iter().map(|&(x, h)| chord(x, h, r)).collect::<Option<_>>()?;
    let mut positions: Vec<f64> = intervals
        .iter()
        .flat_map(|&(a, b)| [a, b])
        .flat_map(|e| (-2..=2).map(move |k| e + k as f64 * alpha))
        .collect();
    positions.sort_by(f64::total_cmp);
    positions.dedup_by(|a, b| (*a - *b).abs() <= ORACLE_EPS);
    let mut s = LineSearch {
        intervals: &intervals,
        positions: &positions,
        alpha,
        red: Vec::new(),
        blue: Vec::new(),
        p,
        q,
    };
    s.search().then(|| (s.red, s.blue))
}

/// Brute-force line-constrained decision at a fixed radius.
pub fn oracle_constrained_feasible(instance: &Instance, r: f64, budget: &OracleBudget) -> Result<bool> {
    budget.admit(instance)?;
    let frame = to_x_axis(instance)?;
    let pts: Vec<(f64, f64)> = frame.instance().points().iter().map(|p| (p.x(), p.height())).collect();
    Ok(line_witness(&pts, instance.p(), instance.q(), instance.alpha(), r).is_some())
}

/// Optimal radius of the line-constrained problem by bisection on a
/// brute-force decision procedure, with a witness at the returned radius.
///
/// The decision tries every colored hitting set of at most `p + q` centers
/// drawn from interval endpoints shifted by `0, ±α, ±2α`; a color left
/// unused is placed far from the other one.
pub fn oracle_constrained_optimum(instance: &Instance, budget: &OracleBudget) -> Result<ConstrainedSolution> {
    budget.admit(instance)?;
    let frame = to_x_axis(instance)?;
    let pts: Vec<(f64, f64)> = frame.instance().points().iter().map(|p| (p.x(), p.height())).collect();
    let (p, q, alpha) = (instance.p(), instance.q(), instance.alpha());

    let mut lo = pts.iter().map(|&(_, h)| h).fold(0.0, f64::max);
    let anchor = pts[0].0;
    let mut hi = pts
        .iter()
        .map(|&(x, h)| ((x - anchor).powi(2) + h * h).sqrt())
        .fold(0.0, f64::max);
    let decide = |r: f64| line_witness(&pts, p, q, alpha, r);

    let witness = if let Some(w) = decide(lo) {
        hi = lo;
        w
    } else {
        let mut best = decide(hi).ok_or_else(|| Error::NumericFailure("oracle upper bound infeasible".into()))?;
        for _ in 0..200 {
            if hi - lo <= 1e-13 * (1.0 + hi) {
                break;
            }
            let mid = 0.5 * (lo + hi);
            match decide(mid) {
                Some(w) => {
                    hi = mid;
                    best = w;
                }
                None => lo = mid,
            }
        }
        best
    };

    let (mut red, mut blue) = witness;
    if red.is_empty() {
        red.push(blue.iter().copied().fold(f64::NEG_INFINITY, f64::max) + alpha);
    }
    if blue.is_empty() {
        blue.push(red.iter().copied().fold(f64::NEG_INFINITY, f64::max) + alpha);
    }
    let (r0, b0) = (red[0], blue[0]);
    red.resize(p, r0);
    blue.resize(q, b0);
    Ok(ConstrainedSolution {
        red_positions: red,
        blue_positions: blue,
        radius: hi,
    })
}

/// Least radius achievable with centers restricted to a square grid over
/// the bounding box of the points inflated by `α`. An upper bound on the
/// true optimum, within `O(pitch)` of it.
pub fn oracle_unconstrained_optimum(instance: &Instance, budget: &OracleBudget) -> Result<f64> {
    budget.admit(instance)?;
    if instance.dim() > 2 {
        return Err(Error::BudgetExceeded(format!("dimension {} > 2", instance.dim())));
    }
    let pitch = budget.grid_pitch;
    let alpha = instance.alpha();
    let dim = instance.dim();
    let axis_ticks = |axis: usize| -> Vec<f64> {
        let lo = instance.points().iter().map(|p| p.coords()[axis]).fold(f64::INFINITY, f64::min) - alpha;
        let hi = instance.points().iter().map(|p| p.coords()[axis]).fold(f64::NEG_INFINITY, f64::max) + alpha;
        let steps = ((hi - lo) / pitch).ceil() as usize;
        (0..=steps).map(|s| lo + s as f64 * pitch).collect()
    };
    let grid: Vec<Point> = if dim == 1 {
        axis_ticks(0).into_iter().map(|x| Point::from([x])).collect()
    } else {
        let ys = axis_ticks(1);
        axis_ticks(0)
            .into_iter()
            .flat_map(|x| ys.iter().map(move |&y| Point::from([x, y])))
            .collect()
    };
    let k = instance.p() + instance.q();
    let tuples = (grid.len() as f64).powi(k as i32);
    if tuples > budget.max_grid_tuples {
        return Err(Error::BudgetExceeded(format!(
            "{tuples:.3e} grid tuples, limit {:.3e}",
            budget.max_grid_tuples
        )));
    }
    // dist[g][i]: grid point g to input point i
    let dist: Vec<Vec<f64>> = grid
        .iter()
        .map(|g| instance.points().iter().map(|p| g.dist(p)).collect())
        .collect();

    let mut best = f64::INFINITY;
    let mut red = Vec::with_capacity(instance.p());
    let mut blue = Vec::with_capacity(instance.q());
    grid_search(&grid, &dist, instance, 0, &mut red, &mut blue, &mut best);
    Ok(best)
}

fn grid_search(
    grid: &[Point],
    dist: &[Vec<f64>],
    instance: &Instance,
    from: usize,
    red: &mut Vec<usize>,
    blue: &mut Vec<usize>,
    best: &mut f64,
) {
    let alpha = instance.alpha();
    if red.len() == instance.p() && blue.len() == instance.q() {
        let n = instance.n();
        let mut radius: f64 = 0.0;
        for i in 0..n {
            let nearest = red.iter().chain(blue.iter()).map(|&g| dist[g][i]).fold(f64::INFINITY, f64::min);
            radius = radius.max(nearest);
            if radius >= *best {
                return;
            }
        }
        *best = radius;
        return;
    }
    // reds are chosen as a nondecreasing index sequence, then blues likewise
    if red.len() < instance.p() {
        for g in from..grid.len() {
            red.push(g);
            let next = if red.len() == instance.p() { 0 } else { g };
            grid_search(grid, dist, instance, next, red, blue, best);
            red.pop();
        }
    } else {
        for g in from..grid.len() {
            if red.iter().any(|&r| grid[r].dist(&grid[g]) < alpha) {
                continue;
            }
            blue.push(g);
            grid_search(grid, dist, instance, g, red, blue, best);
            blue.pop();
        }
    }
}

/// Optimal radius of classical `k`-center with centers on the x-axis and no
/// separation, via bisection on greedy interval stabbing.
pub fn greedy_line_kcenter(points: &[(f64, f64)], k: usize) -> f64 {
    let stab_count = |r: f64| -> Option<usize> {
        let mut ivs: Vec<(f64, f64)> = points.iter().map(|&(x, h)| chord(x, h, r)).collect::<Option<_>>()?;
        ivs.sort_by(|a, b| a.1.total_cmp(&b.1));
        let mut count = 0;
        let mut last = f64::NEG_INFINITY;
        for (a, b) in ivs {
            if a > last + ORACLE_EPS {
                count += 1;
                last = b;
            }
        }
        Some(count)
    };
    let fits = |r: f64| stab_count(r).is_some_and(|c| c <= k);
    let mut lo = points.iter().map(|&(_, h)| h).fold(0.0, f64::max);
    if fits(lo) {
        return lo;
    }
    let x0 = points[0].0;
    let mut hi = points
        .iter()
        .map(|&(x, h)| ((x - x0).powi(2) + h * h).sqrt())
        .fold(lo, f64::max);
    for _ in 0..200 {
        if hi - lo <= 1e-13 * (1.0 + hi) {
            break;
        }
        let mid = 0.5 * (lo + hi);
        if fits(mid) {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    hi
}
