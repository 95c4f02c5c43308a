//! Acceptance suite. Runs every criterion, prints one PASS/FAIL line each,
//! and exits nonzero if any fails.

mod common;

use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::{Distribution, Normal};
use rbcenter::approx::{decide_radius, interpoint_distances, partition_components};
use rbcenter::line::{candidate_radii, feasible, feasible_bool, solve_constrained};
use rbcenter::oracle::{
    greedy_line_kcenter, oracle_constrained_optimum, oracle_partition, oracle_unconstrained_optimum, OracleBudget,
};
use rbcenter::{solve_approx, to_x_axis, verify, Instance, Line, Point};

type Outcome = Result<String, String>;

fn check(ok: bool, detail: String) -> Outcome {
    if ok {
        Ok(detail)
    } else {
        Err(detail)
    }
}

/// 1. Exact constrained solver agrees with the brute-force optimum.
fn oracle_equivalence() -> Outcome {
    let budget = OracleBudget::default();
    let start = Instant::now();
    let mut worst: f64 = 0.0;
    for seed in 0..200 {
        let inst = common::small_line_instance(seed, 6);
        let sol = solve_constrained(&inst).map_err(|e| format!("seed {seed}: {e}"))?;
        let oracle = oracle_constrained_optimum(&inst, &budget).map_err(|e| format!("seed {seed}: {e}"))?;
        let gap = (sol.radius - oracle.radius).abs();
        worst = worst.max(gap);
        if gap > 1e-7 {
            return Err(format!("seed {seed}: solver {} vs oracle {}", sol.radius, oracle.radius));
        }
        let lifted = sol.to_solution(inst.line().unwrap());
        let rep = verify(&inst, &lifted);
        if !rep.passes(inst.alpha()) || lifted.red.len() != inst.p() || lifted.blue.len() != inst.q() {
            return Err(format!("seed {seed}: witness fails verification {rep:?}"));
        }
    }
    let elapsed = start.elapsed();
    check(
        elapsed < Duration::from_secs(60),
        format!("200 instances, max |r - r_oracle| = {worst:.2e}, {elapsed:.2?} (< 60 s)"),
    )
}

/// 2. Approximation radius within 8x the grid optimum, separation >= 3α/4.
fn bicriteria_guarantee() -> Outcome {
    let budget = OracleBudget::default();
    let start = Instant::now();
    let mut worst_ratio: f64 = 0.0;
    for seed in 0..50 {
        let mut r = common::rng(10_000 + seed);
        let n = r.random_range(1..=6);
        let alpha = common::ALPHAS[r.random_range(0..4)];
        let pts: Vec<Point> = (0..n)
            .map(|_| Point::from([r.random_range(0.0..10.0), r.random_range(0.0..10.0)]))
            .collect();
        let inst = Instance::new(pts, 1, 1, alpha).unwrap();
        let sol = solve_approx(&inst);
        let grid = oracle_unconstrained_optimum(&inst, &budget).map_err(|e| e.to_string())?;
        let bound = 8.0 * grid + 2.0 * budget.grid_pitch;
        if sol.radius > bound {
            return Err(format!("seed {seed}: radius {} > 8 * {grid} + 2 * pitch", sol.radius));
        }
        let rep = verify(&inst, &sol);
        if !rep.covered || rep.min_red_blue_separation < 0.75 * alpha - 1e-9 {
            return Err(format!("seed {seed}: {rep:?}"));
        }
        if grid > 0.0 {
            worst_ratio = worst_ratio.max(sol.radius / grid);
        }
    }
    let elapsed = start.elapsed();
    check(
        elapsed < Duration::from_secs(120),
        format!("50 instances, max radius / grid optimum = {worst_ratio:.3}, {elapsed:.2?} (< 120 s)"),
    )
}

/// 3. Every successful decision covers within 2R with separation > 3α/4.
fn decision_contract() -> Outcome {
    let mut successes = 0;
    for seed in 0..500 {
        let inst = common::free_instance(20_000 + seed, 10, 1 + (seed as usize % 3), 3);
        let mut r = common::rng(30_000 + seed);
        let dists = interpoint_distances(inst.points());
        let big = dists.last().copied().unwrap_or(0.0);
        let radius = if r.random_bool(0.5) {
            dists[r.random_range(0..dists.len())]
        } else {
            r.random_range(0.0..=big.max(1.0))
        };
        if let Some(sol) = decide_radius(&inst, radius) {
            successes += 1;
            let rep = verify(&inst, &sol);
            if !rep.covered || rep.covering_radius_actual > 2.0 * radius + 1e-9 {
                return Err(format!("seed {seed}: covering {rep:?} at R = {radius}"));
            }
            if rep.min_red_blue_separation <= 0.75 * inst.alpha() - 1e-9 {
                return Err(format!("seed {seed}: separation {rep:?}"));
            }
            if sol.red.len() != inst.p() || sol.blue.len() != inst.q() {
                return Err(format!("seed {seed}: wrong center counts"));
            }
        }
    }
    Ok(format!("500 pairs, {successes} successful decisions all verified"))
}

/// 4. Partition table agrees with exhaustive enumeration.
fn partition_vs_exhaustive() -> Outcome {
    let mut r = common::rng(40_000);
    let mut feasible_count = 0;
    for case in 0..1000 {
        let m = r.random_range(0..=15);
        let counts: Vec<usize> = (0..m).map(|_| r.random_range(1..=6)).collect();
        let p = r.random_range(0..=12);
        let q = r.random_range(0..=12);
        let dp = partition_components(&counts, p, q);
        let brute = oracle_partition(&counts, p, q).map_err(|e| e.to_string())?;
        if dp.is_some() != brute {
            return Err(format!("case {case}: counts {counts:?} p={p} q={q} dp={dp:?} brute={brute}"));
        }
        feasible_count += brute as usize;
    }
    Ok(format!("1000 count vectors agree ({feasible_count} feasible)"))
}

/// 5. Feasibility never flips from true to false as the radius grows.
fn feasibility_monotone() -> Outcome {
    for seed in 0..100 {
        let inst = common::axis_instance(50_000 + seed, 12, 3, None);
        let floor = inst.points().iter().map(Point::height).fold(0.0, f64::max);
        let mut r = common::rng(60_000 + seed);
        let mut radii: Vec<f64> = (0..20).map(|_| floor + r.random_range(0.0..12.0)).collect();
        radii.sort_by(f64::total_cmp);
        let flags: Vec<bool> = radii.iter().map(|&x| feasible_bool(&inst, x)).collect();
        if let Some(w) = flags.windows(2).position(|w| w[0] && !w[1]) {
            return Err(format!("seed {seed}: feasible at {} but not at {}", radii[w], radii[w + 1]));
        }
    }
    Ok("100 instances x 20 radii, no monotonicity violation".into())
}

/// 6. The brute-force optimum is among the candidate radii.
fn candidate_completeness() -> Outcome {
    let budget = OracleBudget::default();
    let mut worst: f64 = 0.0;
    for seed in 0..200 {
        let inst = common::small_line_instance(seed, 6);
        let frame = to_x_axis(&inst).map_err(|e| e.to_string())?;
        let cands = candidate_radii(frame.instance().points(), inst.alpha());
        let oracle = oracle_constrained_optimum(&inst, &budget).map_err(|e| e.to_string())?;
        let nearest = cands
            .values
            .iter()
            .map(|c| (c - oracle.radius).abs())
            .fold(f64::INFINITY, f64::min);
        worst = worst.max(nearest);
        if nearest > 1e-7 {
            return Err(format!("seed {seed}: oracle optimum {} not a candidate", oracle.radius));
        }
    }
    Ok(format!("200 instances, max distance to nearest candidate = {worst:.2e}"))
}

/// 7. With α = 0 the solver reduces to k-center on a line.
fn alpha_zero_reduction() -> Outcome {
    let mut worst: f64 = 0.0;
    for seed in 0..100 {
        let inst = common::axis_instance(70_000 + seed, 40, 3, Some(0.0));
        let sol = solve_constrained(&inst).map_err(|e| e.to_string())?;
        let greedy = greedy_line_kcenter(&common::heights_and_x(&inst), inst.p() + inst.q());
        let gap = (sol.radius - greedy).abs();
        worst = worst.max(gap);
        if gap > 1e-7 {
            return Err(format!("seed {seed}: solver {} vs greedy {greedy}", sol.radius));
        }
    }
    Ok(format!("100 instances, max |r - r_greedy| = {worst:.2e}"))
}

fn noisy_collinear(seed: u64, n: usize) -> Instance {
    let mut r = ChaCha8Rng::seed_from_u64(seed);
    let noise = Normal::new(0.0, 0.05).unwrap();
    let pts: Vec<Point> = (0..n)
        .map(|_| Point::from([r.random_range(0.0..100.0), noise.sample(&mut r)]))
        .collect();
    Instance::new(pts, 2, 2, 3.0).unwrap().with_line(Line::x_axis(2)).unwrap()
}

fn time_solve(seeds: std::ops::Range<u64>, n: usize) -> Result<Duration, String> {
    let start = Instant::now();
    for seed in seeds {
        let inst = noisy_collinear(seed, n);
        let sol = solve_constrained(&inst).map_err(|e| e.to_string())?;
        let lifted = sol.to_solution(inst.line().unwrap());
        if !verify(&inst, &lifted).passes(inst.alpha()) {
            return Err(format!("seed {seed}: n = {n} witness fails verification"));
        }
    }
    Ok(start.elapsed())
}

/// 8. Runtime at n = 100 and growth from n = 50.
fn scaling_smoke() -> Outcome {
    // warm-up, then three instances per size
    time_solve(0..1, 50)?;
    let t50 = time_solve(80_000..80_003, 50)? / 3;
    let t100 = time_solve(80_000..80_003, 100)? / 3;
    let ratio = t100.as_secs_f64() / t50.as_secs_f64().max(1e-9);
    check(
        t100 < Duration::from_secs(30) && ratio < 20.0,
        format!("n=50 {t50:.2?}, n=100 {t100:.2?} (< 30 s), ratio {ratio:.2} (< 20)"),
    )
}

fn main() {
    let criteria: [(&str, fn() -> Outcome); 8] = [
        ("1 constrained oracle equivalence", oracle_equivalence),
        ("2 bi-criteria guarantee", bicriteria_guarantee),
        ("3 decision procedure contract", decision_contract),
        ("4 partition DP vs exhaustive", partition_vs_exhaustive),
        ("5 feasibility monotonicity", feasibility_monotone),
        ("6 candidate completeness", candidate_completeness),
        ("7 alpha = 0 reduction", alpha_zero_reduction),
        ("8 scaling smoke test", scaling_smoke),
    ];
    let mut failed = 0;
    for (name, run) in criteria {
        match run() {
            Ok(detail) => println!("[PASS] criterion {name}: {detail}"),
            Err(detail) => {
                failed += 1;
                println!("[FAIL] criterion {name}: {detail}");
            }
        }
    }
    // witness extraction sanity on the smallest exiled-color case
    let exiled = Instance::new(vec![Point::from([0.0, 0.0]), Point::from([1.0, 0.0])], 1, 1, 10.0).unwrap();
    assert!(feasible(&exiled, 0.5).is_some());
    if failed > 0 {
        println!("{failed} acceptance criteria failed");
        std::process::exit(1);
    }
    println!("all 8 acceptance criteria passed");
}
