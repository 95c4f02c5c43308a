//! Bi-criteria approximation for the unconstrained problem in `R^d`.
//!
//! Two branches run side by side. The farthest-first branch covers with a
//! Gonzalez `(p+q)`-center solution thinned to centers `3α/4` apart; it is
//! within `8r*` whenever `r* >= α/8`. The decision branch clusters the
//! neighborhood graph at threshold `3α/4`, scoops each component with `2R`
//! balls and splits the per-component counts between the two budgets; tried
//! at every interpoint distance `R`, it is within `4r*` whenever `r* < α/8`.
//! [`solve_approx`] keeps whichever covers with the smaller radius, so the
//! result always has red-blue separation at least `3α/4` and radius at most
//! `8r*`.

mod components;
mod partition;

pub use components::{connected_components, scoop, Component, DisjointSet, ScoopResult};
pub use partition::{partition_components, PartitionTable};

use crate::geometry::{covering_radius, tolerance, Instance, Point, Solution};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Branch {
    /// Farthest-first covering, good when `r* >= α/8`.
    LargeRadius,
    /// Decision procedure over interpoint distances, good when `r* < α/8`.
    SmallRadius,
}

#[derive(Debug, Clone)]
pub struct BranchOutcome {
    pub solution: Option<Solution>,
    pub branch: Branch,
    /// The interpoint distance at which the decision procedure first succeeded.
    pub decision_radius: Option<f64>,
}

/// Farthest-first traversal starting at the first point. Stops early once
/// every point coincides with a center.
pub fn gonzalez_centers(points: &[Point], k: usize) -> (Vec<Point>, f64) {
    if points.is_empty() || k == 0 {
        return (Vec::new(), 0.0);
    }
    let mut centers = vec![points[0].clone()];
    let mut nearest: Vec<f64> = points.iter().map(|p| p.dist(&points[0])).collect();
    while centers.len() < k {
        let (far, &far_dist) = nearest
            .iter()
            .enumerate()
            .max_by(|a, b| a.1.total_cmp(b.1).then(b.0.cmp(&a.0)))
            .expect("nonempty");
        if far_dist <= 0.0 {
            break;
        }
        let c = points[far].clone();
        for (d, p) in nearest.iter_mut().zip(points) {
            *d = d.min(p.dist(&c));
        }
        centers.push(c);
    }
    let radius = nearest.iter().copied().fold(0.0, f64::max);
    (centers, radius)
}

/// Greedy maximal subset, in input order, of centers pairwise at least
/// `threshold` apart.
pub fn separated_subset(centers: &[Point], threshold: f64) -> Vec<Point> {
    let mut kept: Vec<Point> = Vec::new();
    for c in centers {
        if kept.iter().all(|k| k.dist(c) >= threshold) {
            kept.push(c.clone());
        }
    }
    kept
}

fn exile_along_x(anchor: &Point, offset: f64) -> Point {
    anchor.translated(offset)
}

/// Fills both color classes up to exactly `p` and `q` centers.
///
/// Extras are co-located with the first center of their color. A color that
/// received no center at all is placed `gap` to the right (in x) of the
/// rightmost center of the other color, or co-located with it when `gap` is
/// zero.
fn pad_colors(mut red: Vec<Point>, mut blue: Vec<Point>, p: usize, q: usize, gap: f64, diameter: f64) -> (Vec<Point>, Vec<Point>) {
    debug_assert!(!(red.is_empty() && blue.is_empty()));
    fn exile(others: &[Point], gap: f64, diameter: f64) -> Point {
        let anchor = others
            .iter()
            .max_by(|a, b| a.x().total_cmp(&b.x()))
            .expect("opposite color nonempty");
        if gap <= 0.0 {
            return anchor.clone();
        }
        let spot = exile_along_x(anchor, gap);
        if others.iter().all(|o| o.dist(&spot) >= gap) {
            spot
        } else {
            exile_along_x(anchor, gap + diameter)
        }
    }
    if red.is_empty() {
        red.push(exile(&blue, gap, diameter));
    }
    if blue.is_empty() {
        blue.push(exile(&red, gap, diameter));
    }
    while red.len() < p {
        red.push(red[0].clone());
    }
    while blue.len() < q {
        blue.push(blue[0].clone());
    }
    (red, blue)
}

fn finish(instance: &Instance, red: Vec<Point>, blue: Vec<Point>) -> Solution {
    let centers: Vec<Point> = red.iter().chain(&blue).cloned().collect();
    let radius = covering_radius(instance.points(), &centers).expect("centers nonempty");
    Solution { red, blue, radius }
}

/// Farthest-first branch: Gonzalez with `k = p + q`, thinned to a subset
/// `3α/4`-separated, then colored and padded.
pub fn solve_large_branch(instance: &Instance) -> BranchOutcome {
    let (p, q) = (instance.p(), instance.q());
    let gap = 0.75 * instance.alpha();
    let (centers, _) = gonzalez_centers(instance.points(), p + q);
    let kept = separated_subset(&centers, gap);
    let t = kept.len();
    let (red, blue) = if t == 1 {
        let x1 = kept[0].clone();
        let blue = exile_along_x(&x1, gap);
        (vec![x1; p], vec![blue; q])
    } else {
        let reds = p.min(t - 1);
        let mut kept = kept;
        let blue = kept.split_off(reds);
        pad_colors(kept, blue, p, q, gap, instance.diameter())
    };
    BranchOutcome {
        solution: Some(finish(instance, red, blue)),
        branch: Branch::LargeRadius,
        decision_radius: None,
    }
}

/// Scoop sizes per component at radius `r`, or `None` once their total
/// exceeds `budget` (no split can then fit).
fn scoop_all(instance: &Instance, comps: &[Component], r: f64, budget: usize) -> Option<Vec<ScoopResult>> {
    let mut total = 0;
    let mut out = Vec::with_capacity(comps.len());
    for c in comps {
        let s = scoop(c, instance.points(), r);
        total += s.count;
        if total > budget {
            return None;
        }
        out.push(s);
    }
    Some(out)
}

fn decide_with_components(instance: &Instance, comps: &[Component], r: f64) -> Option<Solution> {
    let (p, q) = (instance.p(), instance.q());
    let scoops = scoop_all(instance, comps, r, p + q)?;
    // reversed so that backtracking hands the red budget to the
    // lowest-index components first
    let counts: Vec<usize> = scoops.iter().rev().map(|s| s.count).collect();
    let (red_parts, blue_parts) = partition_components(&counts, p, q)?;
    let last = scoops.len() - 1;
    let gather = |parts: &[usize]| -> Vec<Point> {
        let mut comps: Vec<usize> = parts.iter().map(|&i| last - i).collect();
        comps.sort_unstable();
        comps
            .into_iter()
            .flat_map(|c| scoops[c].centers.iter().cloned())
            .collect()
    };
    let (red, blue) = pad_colors(
        gather(&red_parts),
        gather(&blue_parts),
        p,
        q,
        0.75 * instance.alpha(),
        instance.diameter(),
    );
    Some(finish(instance, red, blue))
}

/// Decision procedure at radius `r`. On success the returned centers cover
/// within `2r` and red-blue pairs are more than `3α/4` apart (exactly `3α/4`
/// for an exiled color class).
pub fn decide_radius(instance: &Instance, r: f64) -> Option<Solution> {
    let comps = connected_components(instance.points(), 0.75 * instance.alpha());
    decide_with_components(instance, &comps, r)
}

/// Sorted distinct pairwise distances, always starting with zero.
pub fn interpoint_distances(points: &[Point]) -> Vec<f64> {
    let mut all = vec![0.0];
    for (i, a) in points.iter().enumerate() {
        for b in &points[i + 1..] {
            all.push(a.dist(b));
        }
    }
    all.sort_by(f64::total_cmp);
    let tol = tolerance();
    let mut out: Vec<f64> = Vec::with_capacity(all.len());
    for d in all {
        if out.last().map_or(true, |&last| d - last > tol) {
            out.push(d);
        }
    }
    out
}

/// Decision branch: the first interpoint distance, ascending, at which the
/// decision procedure succeeds.
pub fn solve_small_branch(instance: &Instance) -> BranchOutcome {
    let comps = connected_components(instance.points(), 0.75 * instance.alpha());
    // every component needs at least one center
    if comps.len() > instance.p() + instance.q() {
        return BranchOutcome {
            solution: None,
            branch: Branch::SmallRadius,
            decision_radius: None,
        };
    }
    for d in interpoint_distances(instance.points()) {
        if let Some(sol) = decide_with_components(instance, &comps, d) {
            return BranchOutcome {
                solution: Some(sol),
                branch: Branch::SmallRadius,
                decision_radius: Some(d),
            };
        }
    }
    BranchOutcome {
        solution: None,
        branch: Branch::SmallRadius,
        decision_radius: None,
    }
}

/// Runs both branches and returns the one with the smaller covering radius,
/// preferring the farthest-first branch on ties.
pub fn solve_approx_outcome(instance: &Instance) -> BranchOutcome {
    let large = solve_large_branch(instance);
    let small = solve_small_branch(instance);
    let large_r = large.solution.as_ref().map_or(f64::INFINITY, |s| s.radius);
    match &small.solution {
        Some(s) if s.radius < large_r => small,
        _ => large,
    }
}

/// `p` red and `q` blue centers with red-blue separation at least `3α/4`
/// and covering radius at most `8r*`.
pub fn solve_approx(instance: &Instance) -> Solution {
    solve_approx_outcome(instance)
        .solution
        .expect("farthest-first branch always yields a solution")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::verify;

    fn line(xs: &[f64]) -> Vec<Point> {
        xs.iter().map(|&x| Point::from([x])).collect()
    }

    fn inst(xs: &[f64], p: usize, q: usize, alpha: f64) -> Instance {
        Instance::new(line(xs), p, q, alpha).unwrap()
    }

    fn assert_bicriteria(instance: &Instance, sol: &Solution) {
        assert_eq!(sol.red.len(), instance.p());
        assert_eq!(sol.blue.len(), instance.q());
        let rep = verify(instance, sol);
        assert!(rep.covered, "{rep:?}");
        assert!(rep.min_red_blue_separation >= 0.75 * instance.alpha() - 1e-9, "{rep:?}");
    }

    /// Optimal 1-d k-center by brute force: every center sits at the
    /// midpoint of some pair of input points.
    fn kcenter_1d(xs: &[f64], k: usize) -> f64 {
        let mids: Vec<f64> = xs
            .iter()
            .flat_map(|a| xs.iter().map(move |b| (a + b) / 2.0))
            .collect();
        let mut best = f64::INFINITY;
        let mut idx = vec![0usize; k];
        loop {
            let r = xs
                .iter()
                .map(|x| idx.iter().map(|&i| (x - mids[i]).abs()).fold(f64::INFINITY, f64::min))
                .fold(0.0, f64::max);
            best = best.min(r);
            let mut pos = 0;
            loop {
                if pos == k {
                    return best;
                }
                idx[pos] += 1;
                if idx[pos] < mids.len() {
                    break;
                }
                idx[pos] = 0;
                pos += 1;
            }
        }
    }

    #[test]
    fn gonzalez_examples() {
        let (c, r) = gonzalez_centers(&line(&[0.0, 1.0, 10.0]), 2);
        assert_eq!(c, line(&[0.0, 10.0]));
        assert_eq!(r, 1.0);
        assert_eq!(kcenter_1d(&[0.0, 1.0, 10.0], 2), 0.5);

        let (c, r) = gonzalez_centers(&line(&[0.0, 1.0, 10.0]), 5);
        assert_eq!(c.len(), 3);
        assert_eq!(r, 0.0);
        let (c, _) = gonzalez_centers(&line(&[2.0, 2.0, 2.0]), 3);
        assert_eq!(c.len(), 1);

        let (c, r) = gonzalez_centers(&line(&[4.0, 1.0, 10.0]), 1);
        assert_eq!(c, line(&[4.0]));
        assert_eq!(r, 6.0);
    }

    #[test]
    fn gonzalez_two_approximation_on_small_lines() {
        let sets: &[&[f64]] = &[
            &[0.0, 1.0, 10.0],
            &[0.0, 2.0, 3.0, 7.0, 7.5],
            &[-4.0, 0.0, 0.5, 1.0, 6.0, 6.2, 9.0],
            &[3.0, 1.0, 4.0, 1.0, 5.0, 9.0, 2.0],
        ];
        for xs in sets {
            for k in 1..=3 {
                let (_, bound) = gonzalez_centers(&line(xs), k);
                assert!(bound <= 2.0 * kcenter_1d(xs, k) + 1e-12, "{xs:?} k={k}");
            }
        }
    }

    #[test]
    fn separated_subset_examples() {
        let pts = line(&[0.0, 1.0, 2.0]);
        assert_eq!(separated_subset(&pts, 0.0), pts);
        assert_eq!(separated_subset(&pts, 5.0), line(&[0.0]));
        assert_eq!(separated_subset(&pts, 1.5), line(&[0.0, 2.0]));
    }

    #[test]
    fn separated_subset_is_maximal_among_all_subsets() {
        let pts = line(&[0.0, 1.0, 2.0]);
        let kept = separated_subset(&pts, 1.5);
        // no valid subset strictly contains the greedy one
        for mask in 0u32..8 {
            let sub: Vec<&Point> = (0..3).filter(|i| mask >> i & 1 == 1).map(|i| &pts[i]).collect();
            let valid = sub.iter().enumerate().all(|(i, a)| sub[i + 1..].iter().all(|b| a.dist(b) >= 1.5));
            if valid && sub.len() > kept.len() {
                assert!(!kept.iter().all(|k| sub.contains(&k)));
            }
        }
        for p in &pts {
            assert!(kept.iter().any(|k| k.dist(p) < 1.5));
        }
    }

    #[test]
    fn large_branch_examples() {
        let i = inst(&[0.0, 1.0, 10.0, 11.0], 1, 1, 0.0);
        let out = solve_large_branch(&i);
        let sol = out.solution.unwrap();
        assert_eq!(sol.radius, gonzalez_centers(i.points(), 2).1);
        assert_bicriteria(&i, &sol);

        let single = Instance::new(vec![Point::from([1.0, 2.0])], 2, 3, 4.0).unwrap();
        let sol = solve_large_branch(&single).solution.unwrap();
        assert_eq!(sol.radius, 0.0);
        assert_eq!(sol.red, vec![Point::from([1.0, 2.0]); 2]);
        assert!((sol.blue[0].dist(&sol.red[0]) - 3.0).abs() < 1e-12);
        assert_bicriteria(&single, &sol);

        let two = inst(&[0.0, 100.0], 1, 1, 8.0);
        let sol = solve_large_branch(&two).solution.unwrap();
        assert_eq!(sol.red, line(&[0.0]));
        assert_eq!(sol.blue, line(&[100.0]));
        assert_eq!(sol.radius, 0.0);
    }

    #[test]
    fn decide_examples() {
        let two = inst(&[0.0, 100.0], 1, 1, 8.0);
        let sol = decide_radius(&two, 1.0).unwrap();
        assert_eq!(sol.red, line(&[0.0]));
        assert_eq!(sol.blue, line(&[100.0]));

        let three = inst(&[0.0, 100.0, 200.0], 1, 1, 8.0);
        assert!(decide_radius(&three, 1.0).is_none());

        // one component fits the red budget; blue is exiled 3α/4 away
        let tight = inst(&[0.0, 1.0, 2.0], 2, 2, 8.0);
        let sol = decide_radius(&tight, 0.5).unwrap();
        assert!(sol.blue.iter().all(|b| b.x() == 2.0 + 6.0));
        assert_bicriteria(&tight, &sol);
        assert!(sol.radius <= 1.0);

        let colocated = inst(&[2.0, 2.0], 1, 1, 0.0);
        let sol = decide_radius(&colocated, 0.5).unwrap();
        assert_eq!(sol.red, sol.blue);
    }

    #[test]
    fn exiled_color_keeps_gap_from_all_opposite_centers() {
        let reds = vec![Point::from([0.0, 0.0]), Point::from([0.0, 1.0])];
        let (_, blue) = pad_colors(reds.clone(), vec![], 2, 1, 3.0, 1.0);
        for r in &reds {
            assert!(r.dist(&blue[0]) >= 3.0);
        }
    }

    #[test]
    fn interpoint_distance_examples() {
        assert_eq!(interpoint_distances(&line(&[5.0])), vec![0.0]);
        assert_eq!(interpoint_distances(&line(&[0.0, 3.0, 7.0])), vec![0.0, 3.0, 4.0, 7.0]);
        assert_eq!(interpoint_distances(&line(&[1.0, 1.0, 2.0])), vec![0.0, 1.0]);
    }

    #[test]
    fn small_branch_examples() {
        let zero = inst(&[0.0, 1.0, 2.0], 2, 1, 0.0);
        let out = solve_small_branch(&zero);
        assert_eq!(out.decision_radius, Some(0.0));
        assert_eq!(out.solution.unwrap().radius, 0.0);

        let two = inst(&[0.0, 100.0], 1, 1, 8.0);
        let out = solve_small_branch(&two);
        assert_eq!(out.decision_radius, Some(0.0));
        assert_eq!(out.solution.unwrap().radius, 0.0);

        // three far-apart components, budgets of one each
        let three = inst(&[0.0, 100.0, 200.0], 1, 1, 8.0);
        let out = solve_small_branch(&three);
        assert!(out.solution.is_none());
        for d in interpoint_distances(three.points()) {
            assert!(decide_radius(&three, d).is_none());
        }
    }

    #[test]
    fn approx_examples() {
        let zero = inst(&[0.0, 1.0, 2.0, 10.0, 11.0], 1, 1, 0.0);
        let sol = solve_approx(&zero);
        assert!(sol.radius <= 2.0 * kcenter_1d(&[0.0, 1.0, 2.0, 10.0, 11.0], 2) + 1e-12);

        let single = Instance::new(vec![Point::from([3.0, 3.0])], 1, 1, 2.0).unwrap();
        assert_eq!(solve_approx(&single).radius, 0.0);

        for alpha in [0.0, 0.5, 3.0, 12.0, 40.0] {
            let i = inst(&[0.0, 0.4, 3.0, 3.1, 9.0, 20.0], 2, 1, alpha);
            assert_bicriteria(&i, &solve_approx(&i));
        }
    }
}
