//! Per-point intervals on the x-axis and the candidate center positions.

use crate::geometry::{tolerance, Point};

/// The part of the x-axis within distance `r` of one input point.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Interval {
    pub a: f64,
    pub b: f64,
    pub point_index: usize,
}

impl Interval {
    pub fn contains(&self, c: f64) -> bool {
        let tol = tolerance();
        self.a <= c + tol && c <= self.b + tol
    }
}

/// Half-width of the chord the `r`-ball around a point at height `h` cuts
/// from the x-axis. `None` when the ball misses the axis.
pub fn half_width(height: f64, r: f64) -> Option<f64> {
    if r < 0.0 || r < height - tolerance() {
        return None;
    }
    Some((r * r - height * height).max(0.0).sqrt())
}

/// `[a(r), b(r)]` for a single point, with `index` recorded as its identity.
pub fn point_interval(point: &Point, index: usize, r: f64) -> Option<Interval> {
    let w = half_width(point.height(), r)?;
    Some(Interval {
        a: point.x() - w,
        b: point.x() + w,
        point_index: index,
    })
}

/// All intervals at radius `r`, ordered by left endpoint, then right
/// endpoint, then point index. `None` if some ball misses the axis.
pub fn sorted_intervals(points: &[Point], r: f64) -> Option<Vec<Interval>> {
    let mut out = points
        .iter()
        .enumerate()
        .map(|(i, p)| point_interval(p, i, r))
        .collect::<Option<Vec<_>>>()?;
    out.sort_by(|u, v| {
        u.a.total_cmp(&v.a)
            .then(u.b.total_cmp(&v.b))
            .then(u.point_index.cmp(&v.point_index))
    });
    Some(out)
}

/// Sorted, deduplicated positions where a center may be placed, with the
/// index of the first position at least `α` to the right of each one.
///
/// Indices are zero-based; `next_of[j] == len()` means no such position.
#[derive(Debug, Clone, PartialEq)]
pub struct CandidateCenters {
    pub positions: Vec<f64>,
    pub next_of: Vec<usize>,
}

impl CandidateCenters {
    /// Every interval endpoint, shifted by `0`, `+α` and `-α`.
    pub fn build(intervals: &[Interval], alpha: f64) -> Self {
        let mut raw = Vec::with_capacity(intervals.len() * 6);
        for iv in intervals {
            for e in [iv.a, iv.b] {
                raw.push(e);
                if alpha > 0.0 {
                    raw.push(e + alpha);
                    raw.push(e - alpha);
                }
            }
        }
        raw.sort_by(f64::total_cmp);
        let tol = tolerance();
        let mut positions: Vec<f64> = Vec::with_capacity(raw.len());
        for x in raw {
            if positions.last().map_or(true, |&last| x - last > tol) {
                positions.push(x);
            }
        }
        let m = positions.len();
        let mut next_of = vec![m; m];
        let mut k = 0;
        for j in 0..m {
            k = k.max(j + 1);
            while k < m && positions[k] < positions[j] + alpha - tol {
                k += 1;
            }
            next_of[j] = k;
        }
        CandidateCenters { positions, next_of }
    }

    pub fn len(&self) -> usize {
        self.positions.len()
    }

    pub fn is_empty(&self) -> bool {
        self.positions.is_empty()
    }
}

/// First candidate index after `j` at least `alpha` to its right, or
/// `cands.len()` when there is none.
pub fn next_index(cands: &CandidateCenters, j: usize, alpha: f64) -> usize {
    let tol = tolerance();
    let base = cands.positions[j];
    (j + 1..cands.len())
        .find(|&k| cands.positions[k] >= base + alpha - tol)
        .unwrap_or(cands.len())
}

/// How a center at `c` meets the suffix of sorted intervals starting at `start`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Coverage {
    /// Suffix positions whose interval contains `c`.
    pub hit: Vec<usize>,
    /// Least unhit suffix position whose interval still reaches past `c`.
    pub first_unhit_alive: Option<usize>,
    /// Some unhit suffix interval ends before `c`; no center at or right of
    /// `c` can ever hit it.
    pub dead_exists: bool,
}

pub fn coverage_at(intervals: &[Interval], c: f64, start: usize) -> Coverage {
    let tol = tolerance();
    let mut hit = Vec::new();
    let mut first_unhit_alive = None;
    let mut dead_exists = false;
    for (u, iv) in intervals.iter().enumerate().skip(start) {
        if iv.contains(c) {
            hit.push(u);
        } else if iv.b < c - tol {
            dead_exists = true;
        } else if first_unhit_alive.is_none() {
            first_unhit_alive = Some(u);
        }
    }
    Coverage {
        hit,
        first_unhit_alive,
        dead_exists,
    }
}
