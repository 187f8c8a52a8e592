//! Benchmark harnesses reproducing the experiment suite: cost-versus-size
//! comparisons of the baseline, greedy, and exact solvers, the k-sparse
//! cost/size frontier, and the solver runtime check. Each harness returns
//! plot-ready rows and has a CSV rendering.

use std::time::Instant;

use crate::error::Result;
use crate::exact::exact_min_cost_coloring;
use crate::gen::{generate_chordal_with, GeneratorParams, WeightConvention};
use crate::greedy::{baseline_design, greedy_min_cost_design};
use crate::ksparse::{default_lambda_grid, frontier_sweep, ksparse_lower_bound};
use crate::separating::design_cost;
use crate::SolveError;

/// Empirical `d -> average degree` calibration at window `b = 10`,
/// measured over 20 seeds at n = 500. The generator has no closed-form
/// density map, so benchmark configs interpolate in this table.
pub const B10_DEGREE_CALIBRATION: &[(f64, f64)] = &[
    (0.0, 2.00),
    (0.25, 5.17),
    (0.5, 7.56),
    (0.75, 9.36),
    (0.85, 9.91),
    (1.0, 10.72),
    (1.25, 11.83),
    (1.5, 12.87),
    (1.75, 13.68),
    (2.0, 14.36),
    (2.5, 15.50),
    (3.0, 16.30),
    (4.0, 17.40),
    (5.0, 18.12),
];

/// Inverse interpolation of `B10_DEGREE_CALIBRATION`: the `d` whose
/// expected average degree at `b = 10` is closest to `target`.
pub fn d_for_average_degree_b10(target: f64) -> f64 {
    let table = B10_DEGREE_CALIBRATION;
    if target <= table[0].1 {
        return table[0].0;
    }
    for pair in table.windows(2) {
        let ((d0, a0), (d1, a1)) = (pair[0], pair[1]);
        if target <= a1 {
            let t = (target - a0) / (a1 - a0);
            return d0 + t * (d1 - d0);
        }
    }
    table[table.len() - 1].0
}

/// Cost-comparison figures: number of interventions fixed at 5, window 10,
/// classical Pareto(2) weights.
pub const FIG2_M: u32 = 5;
pub const FIG2_B: usize = 10;
pub const FIG2_PARETO_SHAPE: f64 = 2.0;
pub const FIG2A_N_LIST: &[usize] = &[100, 200, 300, 400, 500];
pub const FIG2A_AVG_DEGREE: f64 = 10.0;
pub const FIG2B_N: usize = 500;
pub const FIG2B_DEGREE_TARGETS: &[f64] = &[4.0, 6.0, 8.0, 10.0, 12.0, 14.0];

/// Frontier figure: n = 10000, max degree <= 20, average degree near 3
/// (d = 0.1 gives 3.5 and reproduces the reported covering lower bound),
/// shifted Pareto(2) weights, interventions of size at most 10.
pub const FIG3_N: usize = 10_000;
pub const FIG3_B: usize = 10;
pub const FIG3_D: f64 = 0.1;
pub const FIG3_K: usize = 10;
pub const FIG3_PARETO_SHAPE: f64 = 2.0;
pub const FIG3_WEIGHTS: WeightConvention = WeightConvention::MinimumZero;

/// Runtime check: n = 10000, max degree <= 20, 5 interventions.
pub const RUNTIME_N: usize = 10_000;
pub const RUNTIME_B: usize = 10;
pub const RUNTIME_M: u32 = 5;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RowStatus {
    Ok,
    /// The exact solver refused the instance under its state budget; the
    /// row is kept so the restriction is visible.
    BudgetExceeded,
}

/// One aggregated point of a cost-comparison series: mean `y` and sample
/// standard deviation `ey` over the seeds.
#[derive(Debug, Clone)]
pub struct SeriesRow {
    pub series: &'static str,
    pub x: f64,
    pub y: f64,
    pub ey: f64,
    pub status: RowStatus,
}

#[derive(Debug, Clone)]
pub struct Fig2Config {
    pub b: usize,
    pub m: u32,
    pub pareto_shape: f64,
    pub seeds: u64,
    pub dp_budget: Option<u128>,
}

fn mean_std(values: &[f64]) -> (f64, f64) {
    let n = values.len() as f64;
    let mean = values.iter().sum::<f64>() / n;
    let var = if values.len() > 1 {
        values.iter().map(|v| (v - mean).powi(2)).sum::<f64>() / (n - 1.0)
    } else {
        0.0
    };
    (mean, var.sqrt())
}

/// Baseline / greedy / optimal cost at each (n, d) point. `x` is the
/// caller-chosen axis value for the point.
fn cost_point(
    x: f64,
    n: usize,
    d: f64,
    cfg: &Fig2Config,
    rows: &mut Vec<SeriesRow>,
) -> Result<()> {
    let mut base = Vec::new();
    let mut greedy = Vec::new();
    let mut optimal = Vec::new();
    let mut optimal_ok = true;
    for seed in 0..cfg.seeds {
        let params = GeneratorParams {
            n,
            b: cfg.b,
            d,
            pareto_shape: cfg.pareto_shape,
            seed,
        };
        let g = generate_chordal_with(&params, WeightConvention::MinimumOne)?;
        let bd = baseline_design(&g, cfg.m)?;
        base.push(design_cost(&g, &bd).to_f64());
        let (gd, _) = greedy_min_cost_design(&g, cfg.m, true)?;
        greedy.push(design_cost(&g, &gd).to_f64());
        if optimal_ok {
            match exact_min_cost_coloring(&g, cfg.m, cfg.dp_budget) {
                Ok(sol) => optimal.push(sol.cost.to_f64()),
                Err(SolveError::BudgetExceeded { .. }) => optimal_ok = false,
                Err(e) => return Err(e),
            }
        }
    }
    let (y, ey) = mean_std(&base);
    rows.push(SeriesRow { series: "baseline", x, y, ey, status: RowStatus::Ok });
    let (y, ey) = mean_std(&greedy);
    rows.push(SeriesRow { series: "greedy", x, y, ey, status: RowStatus::Ok });
    if optimal_ok {
        let (y, ey) = mean_std(&optimal);
        rows.push(SeriesRow { series: "optimal", x, y, ey, status: RowStatus::Ok });
    } else {
        rows.push(SeriesRow {
            series: "optimal",
            x,
            y: f64::NAN,
            ey: f64::NAN,
            status: RowStatus::BudgetExceeded,
        });
    }
    Ok(())
}

/// Cost versus vertex count at roughly constant average degree.
pub fn figure2a(n_list: &[usize], avg_degree: f64, cfg: &Fig2Config) -> Result<Vec<SeriesRow>> {
    let d = d_for_average_degree_b10(avg_degree);
    let mut rows = Vec::new();
    for &n in n_list {
        cost_point(n as f64, n, d, cfg, &mut rows)?;
    }
    Ok(rows)
}

/// Cost versus average degree at fixed vertex count. `x` is the measured
/// mean average degree of the generated graphs, not the requested target.
pub fn figure2b(n: usize, degree_targets: &[f64], cfg: &Fig2Config) -> Result<Vec<SeriesRow>> {
    let mut rows = Vec::new();
    for &target in degree_targets {
        let d = d_for_average_degree_b10(target);
        let mut measured = Vec::new();
        for seed in 0..cfg.seeds {
            let params = GeneratorParams {
                n,
                b: cfg.b,
                d,
                pareto_shape: cfg.pareto_shape,
                seed,
            };
            let g = generate_chordal_with(&params, WeightConvention::MinimumOne)?;
            measured.push(2.0 * g.edge_count() as f64 / g.n() as f64);
        }
        let (x, _) = mean_std(&measured);
        cost_point(x, n, d, cfg, &mut rows)?;
    }
    Ok(rows)
}

/// CSV for the cost-comparison figures. Budget-exceeded rows keep empty
/// numeric fields; the header comment records the restriction.
pub fn series_csv(rows: &[SeriesRow]) -> String {
    let mut out = String::from(
        "# optimal series: exact clique-tree DP, restricted to instances within the state budget; \
         exceeded rows are marked, not dropped\nseries,x,y,ey,status\n",
    );
    for r in rows {
        let status = match r.status {
            RowStatus::Ok => "ok",
            RowStatus::BudgetExceeded => "budget_exceeded",
        };
        if r.status == RowStatus::Ok {
            out.push_str(&format!("{},{},{},{},{}\n", r.series, r.x, r.y, r.ey, status));
        } else {
            out.push_str(&format!("{},{},,,{}\n", r.series, r.x, status));
        }
    }
    out
}

#[derive(Debug, Clone)]
pub struct Fig3Row {
    pub seed: u64,
    pub lambda: String,
    pub size: usize,
    pub cost: f64,
    pub normalized_cost: f64,
    pub lower_bound: usize,
}

/// The k-sparse frontier at the calibrated regime, one sweep per seed.
/// Costs are normalized per seed so the largest cost in that sweep is 1.
pub fn figure3(seeds: u64) -> Result<Vec<Fig3Row>> {
    figure3_at(FIG3_N, FIG3_B, FIG3_D, FIG3_K, seeds)
}

pub fn figure3_at(n: usize, b: usize, d: f64, k: usize, seeds: u64) -> Result<Vec<Fig3Row>> {
    let mut rows = Vec::new();
    for seed in 0..seeds {
        let params = GeneratorParams { n, b, d, pareto_shape: FIG3_PARETO_SHAPE, seed };
        let g = generate_chordal_with(&params, FIG3_WEIGHTS)?;
        let lb = ksparse_lower_bound(&g, k)?;
        let grid = default_lambda_grid(&g);
        let points = frontier_sweep(&g, k, &grid)?;
        let max_cost = points.iter().map(|p| p.cost.to_f64()).fold(0.0f64, f64::max);
        for p in &points {
            let cost = p.cost.to_f64();
            rows.push(Fig3Row {
                seed,
                lambda: format!("{}", crate::weight::Weight::Finite(p.lambda.clone())),
                size: p.size,
                cost,
                normalized_cost: if max_cost > 0.0 { cost / max_cost } else { 0.0 },
                lower_bound: lb,
            });
        }
    }
    Ok(rows)
}

pub fn figure3_csv(rows: &[Fig3Row]) -> String {
    let mut out = String::from("seed,lambda,size,cost,normalized_cost,lower_bound\n");
    for r in rows {
        out.push_str(&format!(
            "{},{},{},{},{},{}\n",
            r.seed, r.lambda, r.size, r.cost, r.normalized_cost, r.lower_bound
        ));
    }
    out
}

#[derive(Debug, Clone)]
pub struct RuntimeRow {
    pub seed: u64,
    pub n: usize,
    pub m: u32,
    pub wall_ms: u128,
    pub cost: f64,
    pub colors_used: usize,
}

/// Greedy solve wall time at the large-instance regime.
pub fn runtime_bench(seeds: u64, avg_degree: f64) -> Result<Vec<RuntimeRow>> {
    let d = d_for_average_degree_b10(avg_degree);
    let mut rows = Vec::new();
    for seed in 0..seeds {
        let params = GeneratorParams {
            n: RUNTIME_N,
            b: RUNTIME_B,
            d,
            pareto_shape: FIG2_PARETO_SHAPE,
            seed,
        };
        let g = generate_chordal_with(&params, WeightConvention::MinimumOne)?;
        let start = Instant::now();
        let (design, trace) = greedy_min_cost_design(&g, RUNTIME_M, true)?;
        let wall_ms = start.elapsed().as_millis();
        rows.push(RuntimeRow {
            seed,
            n: RUNTIME_N,
            m: RUNTIME_M,
            wall_ms,
            cost: design_cost(&g, &design).to_f64(),
            colors_used: trace.colors_used,
        });
    }
    Ok(rows)
}

pub fn runtime_csv(rows: &[RuntimeRow]) -> String {
    let mut out = String::from("seed,n,m,wall_ms,cost,colors_used\n");
    for r in rows {
        out.push_str(&format!(
            "{},{},{},{},{},{}\n",
            r.seed, r.n, r.m, r.wall_ms, r.cost, r.colors_used
        ));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn calibration_inverse_is_monotone() {
        assert_eq!(d_for_average_degree_b10(1.0), 0.0);
        let d10 = d_for_average_degree_b10(10.0);
        assert!(d10 > 0.85 && d10 < 1.0, "{d10}");
        let d3 = d_for_average_degree_b10(3.0);
        assert!(d3 > 0.0 && d3 < 0.25, "{d3}");
        assert!(d_for_average_degree_b10(100.0) >= 5.0);
    }

    #[test]
    fn calibrated_d_hits_average_degree_ten_across_sizes() {
        let d = d_for_average_degree_b10(FIG2A_AVG_DEGREE);
        for n in [100usize, 500, 1000] {
            let mut total = 0.0;
            let seeds = 10u64;
            for seed in 0..seeds {
                let params = GeneratorParams { n, b: 10, d, pareto_shape: 2.0, seed };
                let g = generate_chordal_with(&params, WeightConvention::MinimumOne).unwrap();
                total += 2.0 * g.edge_count() as f64 / g.n() as f64;
            }
            let avg = total / seeds as f64;
            assert!((avg - 10.0).abs() < 1.0, "n = {n}: average degree {avg}");
        }
    }

    #[test]
    fn figure2a_small_instance_has_three_series() {
        let cfg = Fig2Config {
            b: 2,
            m: 5,
            pareto_shape: 2.0,
            seeds: 2,
            dp_budget: None,
        };
        let rows = figure2a(&[12, 16], 10.0, &cfg).unwrap();
        assert_eq!(rows.len(), 6);
        for chunk in rows.chunks(3) {
            let baseline = &chunk[0];
            let greedy = &chunk[1];
            let optimal = &chunk[2];
            assert_eq!(optimal.status, RowStatus::Ok);
            assert!(optimal.y <= greedy.y + 1e-9);
            assert!(greedy.y <= baseline.y + 1e-9);
        }
        let csv = series_csv(&rows);
        assert!(csv.lines().nth(1).unwrap().starts_with("series,x,y,ey,status"));
    }

    #[test]
    fn budget_exceeded_rows_are_marked() {
        let cfg = Fig2Config {
            b: 3,
            m: 5,
            pareto_shape: 2.0,
            seeds: 1,
            dp_budget: Some(10),
        };
        let rows = figure2a(&[30], 6.0, &cfg).unwrap();
        let optimal = rows.iter().find(|r| r.series == "optimal").unwrap();
        assert_eq!(optimal.status, RowStatus::BudgetExceeded);
        let csv = series_csv(&rows);
        assert!(csv.contains("budget_exceeded"));
    }
}

