//! Candidate optimal radii and the search over them.
//!
//! At the optimum some pair of interval endpoints is exactly `0`, `α` or
//! `2α` apart (an endpoint of one interval against an endpoint of the same
//! or another interval). Each such coincidence is an equation in `r`:
//!
//! ```text
//! (x_i + s_i * w_i(r)) - (x_k + s_k * w_k(r)) = v,   w(r) = sqrt(r^2 - h^2)
//! ```
//!
//! with `s = -1` for a left endpoint and `+1` for a right one. Writing
//! `u = s_i w_i`, `t = s_k w_k` and `E = v - (x_i - x_k)`, the equation is
//! `u - t = E` while `u^2 - t^2 = h_k^2 - h_i^2`, which pins `u` and `t`
//! down in closed form whenever `E != 0`.

use crate::error::{Error, Result};
use crate::geometry::{to_x_axis, tolerance, Instance, Point};

use super::feasibility::{feasible, feasible_bool, ConstrainedSolution};
use super::intervals::half_width;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Side {
    /// `a(r)`, the left endpoint.
    Left,
    /// `b(r)`, the right endpoint.
    Right,
}

impl Side {
    pub fn sign(self) -> f64 {
        match self {
            Side::Left => -1.0,
            Side::Right => 1.0,
        }
    }
}

/// Target gap between two endpoints.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Gap {
    Zero,
    Alpha,
    TwoAlpha,
}

impl Gap {
    pub const ALL: [Gap; 3] = [Gap::Zero, Gap::Alpha, Gap::TwoAlpha];

    pub fn value(self, alpha: f64) -> f64 {
        match self {
            Gap::Zero => 0.0,
            Gap::Alpha => alpha,
            Gap::TwoAlpha => 2.0 * alpha,
        }
    }
}

/// One endpoint-gap equation: endpoint `side_i` of point `i` minus endpoint
/// `side_k` of point `k` equals `gap`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct PairSignature {
    pub i: usize,
    pub k: usize,
    pub side_i: Side,
    pub side_k: Side,
    pub gap: Gap,
}

impl PairSignature {
    /// Left side minus right side of the equation at radius `r`; `None` if
    /// either ball misses the axis.
    pub fn residual(&self, points: &[Point], alpha: f64, r: f64) -> Option<f64> {
        let (pi, pk) = (&points[self.i], &points[self.k]);
        let wi = half_width(pi.height(), r)?;
        let wk = half_width(pk.height(), r)?;
        let lhs = (pi.x() + self.side_i.sign() * wi) - (pk.x() + self.side_k.sign() * wk);
        Some(lhs - self.gap.value(alpha))
    }
}

/// A pair whose endpoint gap does not depend on `r`: both points at the same
/// height, matching endpoint kinds, and first coordinates exactly `α` or
/// `2α` apart in the signature's orientation.
pub fn is_exceptional(sig: &PairSignature, points: &[Point], alpha: f64) -> bool {
    let tol = tolerance();
    let (pi, pk) = (&points[sig.i], &points[sig.k]);
    let dx = pi.x() - pk.x();
    (pi.height() - pk.height()).abs() <= tol
        && ((dx - alpha).abs() <= tol || (dx - 2.0 * alpha).abs() <= tol)
        && sig.side_i == sig.side_k
}

/// Sorted candidate radii, deduplicated at tolerance.
#[derive(Debug, Clone, PartialEq)]
pub struct CandidateRadii {
    pub values: Vec<f64>,
}

/// Algebraic root of one equation, if any. Equations that hold for every `r`
/// (or for none) yield `None`.
fn solve_signature(sig: &PairSignature, points: &[Point], alpha: f64) -> Option<f64> {
    let tol = tolerance();
    let (pi, pk) = (&points[sig.i], &points[sig.k]);
    let (hi_sq, hk_sq) = (pi.height_sq(), pk.height_sq());
    let (si, sk) = (sig.side_i.sign(), sig.side_k.sign());
    let e = sig.gap.value(alpha) - (pi.x() - pk.x());
    let scale = 1.0 + pi.x().abs() + pk.x().abs() + alpha;
    if e.abs() <= tol * scale {
        // u = t and u^2 = t^2 + (h_k^2 - h_i^2)
        if (pi.height() - pk.height()).abs() > tol || si == sk {
            return None;
        }
        // opposite sides meeting: both half-widths vanish
        return Some(pi.height().max(pk.height()));
    }
    let sum = (hk_sq - hi_sq) / e;
    let u = 0.5 * (e + sum);
    let t = 0.5 * (sum - e);
    // u carries the sign of side_i, t that of side_k
    if u * si < -tol || t * sk < -tol {
        return None;
    }
    let r = (u * u + hi_sq).sqrt();
    r.is_finite().then_some(r)
}

/// Sharpens `r` by bisection on the residual inside a small bracket, when
/// the residual changes sign there.
fn refine(sig: &PairSignature, points: &[Point], alpha: f64, r: f64) -> f64 {
    let f = |x: f64| sig.residual(points, alpha, x);
    let Some(fr) = f(r) else { return r };
    if fr == 0.0 {
        return r;
    }
    let delta = 1e-9 * (1.0 + r);
    let floor = points[sig.i].height().max(points[sig.k].height());
    let (mut lo, mut hi) = ((r - delta).max(floor), r + delta);
    let (Some(mut flo), Some(fhi)) = (f(lo), f(hi)) else { return r };
    if flo.signum() == fhi.signum() {
        return r;
    }
    for _ in 0..80 {
        let mid = 0.5 * (lo + hi);
        let Some(fm) = f(mid) else { break };
        if fm.signum() == flo.signum() {
            lo = mid;
            flo = fm;
        } else {
            hi = mid;
        }
    }
    let refined = 0.5 * (lo + hi);
    match f(refined) {
        Some(fx) if fx.abs() <= fr.abs() => refined,
        _ => r,
    }
}

/// All signatures over ordered pairs (including `i == k`), endpoint sides
/// and gaps.
pub fn signatures(n: usize) -> impl Iterator<Item = PairSignature> {
    let sides = [Side::Left, Side::Right];
    (0..n).flat_map(move |i| {
        (0..n).flat_map(move |k| {
            sides.into_iter().flat_map(move |side_i| {
                sides.into_iter().flat_map(move |side_k| {
                    Gap::ALL.into_iter().map(move |gap| PairSignature {
                        i,
                        k,
                        side_i,
                        side_k,
                        gap,
                    })
                })
            })
        })
    })
}

/// Roots of every non-exceptional endpoint-gap equation, together with
/// their signatures, unsorted.
pub fn candidate_roots(points: &[Point], alpha: f64) -> Vec<(PairSignature, f64)> {
    signatures(points.len())
        .filter(|sig| !is_exceptional(sig, points, alpha))
        .filter_map(|sig| {
            let r = solve_signature(&sig, points, alpha)?;
            let r = refine(&sig, points, alpha, r);
            let residual = sig.residual(points, alpha, r)?;
            (residual.abs() <= 1e-7).then_some((sig, r))
        })
        .collect()
}

/// Candidate optimal radii for points already expressed with the constraint
/// line as the x-axis. Values below the largest distance to the axis are
/// dropped.
pub fn candidate_radii(points: &[Point], alpha: f64) -> CandidateRadii {
    let tol = tolerance();
    let floor = points.iter().map(Point::height).fold(0.0, f64::max);
    let mut values: Vec<f64> = candidate_roots(points, alpha)
        .into_iter()
        .map(|(_, r)| r)
        .filter(|&r| r >= floor - tol)
        .collect();
    values.push(floor);
    values.sort_by(f64::total_cmp);
    let mut out: Vec<f64> = Vec::with_capacity(values.len());
    for r in values {
        if out.last().map_or(true, |&last| r - last > tol) {
            out.push(r);
        }
    }
    CandidateRadii { values: out }
}

/// Index of the least feasible candidate, by binary search over the sorted
/// list (feasibility is monotone in the radius).
pub fn least_feasible(instance: &Instance, radii: &[f64]) -> Option<usize> {
    let last = radii.len().checked_sub(1)?;
    if !feasible_bool(instance, radii[last]) {
        return None;
    }
    let (mut lo, mut hi) = (0usize, last);
    while lo < hi {
        let mid = lo + (hi - lo) / 2;
        if feasible_bool(instance, radii[mid]) {
            hi = mid;
        } else {
            lo = mid + 1;
        }
    }
    Some(lo)
}

/// Exact optimum of the line-constrained problem. Positions in the result
/// are parameters along the instance's line.
pub fn solve_constrained(instance: &Instance) -> Result<ConstrainedSolution> {
    let frame = to_x_axis(instance)?;
    let axis = frame.instance();
    let radii = candidate_radii(axis.points(), axis.alpha());
    let best = least_feasible(axis, &radii.values).ok_or_else(|| {
        Error::NumericFailure(format!(
            "none of {} candidate radii is feasible",
            radii.values.len()
        ))
    })?;
    feasible(axis, radii.values[best])
        .ok_or_else(|| Error::NumericFailure("witness extraction failed".into()))
}
