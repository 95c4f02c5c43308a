//! Decision procedure for the line-constrained problem at a fixed radius.
//!
//! Centers are placed left to right on candidate positions. A state
//! `(i, p', q', j)` asks whether the last `i` intervals (in sorted order) can
//! be hit with `p'` red and `q'` blue centers when the leftmost of them sits
//! on candidate `j` with a given color. The next center of the same color
//! may go on any later candidate; a center of the other color must go at or
//! after `next_of[j]`, which keeps every red-blue pair `α` apart.

use crate::geometry::{tolerance, Instance};

use super::intervals::{sorted_intervals, CandidateCenters, Interval};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Color {
    Red,
    Blue,
}

impl Color {
    fn other(self) -> Color {
        match self {
            Color::Red => Color::Blue,
            Color::Blue => Color::Red,
        }
    }
}

/// Center positions on the line, as parameters along it, and the radius.
#[derive(Debug, Clone, PartialEq)]
pub struct ConstrainedSolution {
    pub red_positions: Vec<f64>,
    pub blue_positions: Vec<f64>,
    pub radius: f64,
}

impl ConstrainedSolution {
    /// Lifts the positions onto `line` as points in the ambient space.
    pub fn to_solution(&self, line: &crate::geometry::Line) -> crate::geometry::Solution {
        crate::geometry::Solution {
            red: self.red_positions.iter().map(|&t| line.at(t)).collect(),
            blue: self.blue_positions.iter().map(|&t| line.at(t)).collect(),
            radius: self.radius,
        }
    }

    pub fn min_red_blue_separation(&self) -> f64 {
        let mut sep = f64::INFINITY;
        for r in &self.red_positions {
            for b in &self.blue_positions {
                sep = sep.min((r - b).abs());
            }
        }
        sep
    }
}

/// Per-candidate summary of how a center there meets the sorted intervals.
#[derive(Debug, Clone, Copy)]
struct Reach {
    /// Intervals `0..left_count` start at or before the candidate.
    left_count: usize,
    /// Largest interval index ending strictly before the candidate.
    last_dead: Option<usize>,
}

fn reach_table(intervals: &[Interval], cands: &CandidateCenters) -> Vec<Reach> {
    let tol = tolerance();
    cands
        .positions
        .iter()
        .map(|&c| Reach {
            left_count: intervals.partition_point(|iv| iv.a <= c + tol),
            last_dead: intervals.iter().rposition(|iv| iv.b < c - tol),
        })
        .collect()
}

/// The filled `TR` / `TB` tables for one radius.
#[derive(Debug, Clone)]
pub struct FeasibilityTables {
    n: usize,
    p: usize,
    q: usize,
    m: usize,
    red: Vec<bool>,
    blue: Vec<bool>,
    // suffix ORs over j of the two tables, same layout
    red_suffix: Vec<bool>,
    blue_suffix: Vec<bool>,
    reach: Vec<Reach>,
    cands: CandidateCenters,
}

impl FeasibilityTables {
    #[inline]
    fn idx(&self, i: usize, pr: usize, qb: usize, j: usize) -> usize {
        ((i * (self.p + 1) + pr) * (self.q + 1) + qb) * (self.m + 1) + j
    }

    pub fn get(&self, color: Color, i: usize, pr: usize, qb: usize, j: usize) -> bool {
        let k = self.idx(i, pr, qb, j);
        match color {
            Color::Red => self.red[k],
            Color::Blue => self.blue[k],
        }
    }

    fn suffix(&self, color: Color, i: usize, pr: usize, qb: usize, from: usize) -> bool {
        let k = self.idx(i, pr, qb, from.min(self.m));
        match color {
            Color::Red => self.red_suffix[k],
            Color::Blue => self.blue_suffix[k],
        }
    }

    /// Remaining unhit count after a center on candidate `j` starting the
    /// last `i` intervals, or `None` if that placement is rejected.
    fn remaining_after(&self, i: usize, j: usize) -> Option<usize> {
        let start = self.n - i;
        let reach = self.reach[j];
        // the first unhit interval must be hit, and nothing in the suffix
        // may already lie wholly to the left
        if reach.left_count <= start || reach.last_dead.is_some_and(|d| d >= start) {
            return None;
        }
        Some(self.n - reach.left_count)
    }

    fn build(intervals: &[Interval], cands: CandidateCenters, p: usize, q: usize) -> Self {
        let n = intervals.len();
        let m = cands.len();
        let size = (n + 1) * (p + 1) * (q + 1) * (m + 1);
        let reach = reach_table(intervals, &cands);
        let mut t = FeasibilityTables {
            n,
            p,
            q,
            m,
            red: vec![false; size],
            blue: vec![false; size],
            red_suffix: vec![false; size],
            blue_suffix: vec![false; size],
            reach,
            cands,
        };
        for i in 0..=n {
            for pr in 0..=p {
                for qb in 0..=q {
                    for j in 0..=m {
                        let k = t.idx(i, pr, qb, j);
                        if i == 0 {
                            t.red[k] = true;
                            t.blue[k] = true;
                            continue;
                        }
                        if j == m {
                            continue;
                        }
                        let Some(rest) = t.remaining_after(i, j) else {
                            continue;
                        };
                        if pr > 0 {
                            t.red[k] = rest == 0
                                || t.suffix(Color::Red, rest, pr - 1, qb, j + 1)
                                || t.suffix(Color::Blue, rest, pr - 1, qb, t.cands.next_of[j]);
                        }
                        if qb > 0 {
                            t.blue[k] = rest == 0
                                || t.suffix(Color::Blue, rest, pr, qb - 1, j + 1)
                                || t.suffix(Color::Red, rest, pr, qb - 1, t.cands.next_of[j]);
                        }
                    }
                    let mut red_acc = false;
                    let mut blue_acc = false;
                    for j in (0..=m).rev() {
                        let k = t.idx(i, pr, qb, j);
                        // the sentinel column never starts a placement
                        if j < m {
                            red_acc |= t.red[k];
                            blue_acc |= t.blue[k];
                        }
                        t.red_suffix[k] = red_acc;
                        t.blue_suffix[k] = blue_acc;
                    }
                }
            }
        }
        t
    }

    pub fn feasible(&self) -> bool {
        self.start().is_some()
    }

    fn start(&self) -> Option<(Color, usize)> {
        (0..self.m).find_map(|j| {
            if self.get(Color::Red, self.n, self.p, self.q, j) {
                Some((Color::Red, j))
            } else if self.get(Color::Blue, self.n, self.p, self.q, j) {
                Some((Color::Blue, j))
            } else {
                None
            }
        })
    }

    /// Colored positions of one witness, leftmost first.
    fn backtrack(&self) -> Option<Vec<(Color, f64)>> {
        let (mut color, mut j) = self.start()?;
        let (mut i, mut pr, mut qb) = (self.n, self.p, self.q);
        let mut placed = Vec::new();
        loop {
            placed.push((color, self.cands.positions[j]));
            let rest = self.remaining_after(i, j).expect("true entry is admissible");
            match color {
                Color::Red => pr -= 1,
                Color::Blue => qb -= 1,
            }
            if rest == 0 {
                return Some(placed);
            }
            let next_other = self.cands.next_of[j];
            let step = (j + 1..self.m).find_map(|k| {
                if self.get(color, rest, pr, qb, k) {
                    Some((color, k))
                } else if k >= next_other && self.get(color.other(), rest, pr, qb, k) {
                    Some((color.other(), k))
                } else {
                    None
                }
            });
            let (c, k) = step.expect("true entry has a true successor");
            color = c;
            j = k;
            i = rest;
        }
    }
}

/// Builds the tables for an instance whose constraint line is the x-axis.
/// `None` when some point is farther than `r` from the axis.
pub fn feasibility_tables(instance: &Instance, r: f64) -> Option<FeasibilityTables> {
    let intervals = sorted_intervals(instance.points(), r)?;
    let cands = CandidateCenters::build(&intervals, instance.alpha());
    Some(FeasibilityTables::build(&intervals, cands, instance.p(), instance.q()))
}

/// Unused budget goes on the last placed center of the same color; a color
/// never placed goes `α` right of the rightmost center of the other color.
fn pad_witness(placed: &[(Color, f64)], p: usize, q: usize, alpha: f64) -> (Vec<f64>, Vec<f64>) {
    let mut red: Vec<f64> = placed.iter().filter(|c| c.0 == Color::Red).map(|c| c.1).collect();
    let mut blue: Vec<f64> = placed.iter().filter(|c| c.0 == Color::Blue).map(|c| c.1).collect();
    let rightmost = |xs: &[f64]| xs.iter().copied().fold(f64::NEG_INFINITY, f64::max);
    if red.is_empty() {
        red.push(rightmost(&blue) + alpha);
    }
    if blue.is_empty() {
        blue.push(rightmost(&red) + alpha);
    }
    let last_red = *red.last().expect("nonempty");
    let last_blue = *blue.last().expect("nonempty");
    red.resize(p, last_red);
    blue.resize(q, last_blue);
    (red, blue)
}

/// A placement of `p` red and `q` blue centers on the x-axis covering every
/// point within `r`, with red-blue pairs at least `α` apart, if one exists.
/// The instance must already be expressed with its line as the x-axis.
pub fn feasible(instance: &Instance, r: f64) -> Option<ConstrainedSolution> {
    let tables = feasibility_tables(instance, r)?;
    let placed = tables.backtrack()?;
    let (red_positions, blue_positions) = pad_witness(&placed, instance.p(), instance.q(), instance.alpha());
    Some(ConstrainedSolution {
        red_positions,
        blue_positions,
        radius: r,
    })
}

pub fn feasible_bool(instance: &Instance, r: f64) -> bool {
    feasibility_tables(instance, r).is_some_and(|t| t.feasible())
}
