//! k-sparse intervention design: every intervention may touch at most `k`
//! vertices.
//!
//! The pipeline: find a vertex cover, optimally color the graph it
//! induces, and split each color class into chunks of size at most `k`;
//! each chunk is one intervention. With the minimum-cardinality cover this
//! nearly minimizes the design size; with a minimum-weight cover under
//! per-vertex penalty `lambda` it trades size against cost, and sweeping
//! `lambda` traces that frontier.

use num_rational::BigRational;
use num_traits::{Signed, Zero};

use crate::chordal::{
    min_cardinality_vertex_cover, mwis_along, optimal_coloring, require_chordal, complement,
};
use crate::error::{Result, SolveError};
use crate::graph::WeightedGraph;
use crate::separating::InterventionDesign;
use crate::weight::Weight;

/// The covering-number lower bound `ceil(tau / k)`: any separating system's
/// union is a vertex cover, and each intervention contributes at most `k`
/// vertices to it.
pub fn ksparse_lower_bound(g: &WeightedGraph, k: usize) -> Result<usize> {
    require_k(k)?;
    let tau = min_cardinality_vertex_cover(g)?.len();
    Ok(tau.div_ceil(k))
}

/// Minimum-size pipeline: minimum-cardinality cover, optimal coloring of
/// the induced graph, color classes chunked into interventions of size at
/// most `k`. Every cover vertex appears exactly once and the never
/// intervened vertices form a maximum-cardinality independent set.
///
/// Among minimum-cardinality covers, ties go to the one leaving the
/// heaviest finite weight un-intervened; this matches the penalized
/// pipeline's large-lambda limit, so the two agree there.
pub fn min_size_ksparse_design(g: &WeightedGraph, k: usize) -> Result<InterventionDesign> {
    require_k(k)?;
    let peo = require_chordal(g)?;
    let proxy = lambda_infinity_proxy(g);
    let card_first: Vec<Weight> = g
        .weights()
        .iter()
        .map(|w| match w.as_finite() {
            Some(r) => Weight::Finite(BigRational::from_integer(1.into()) + r / &proxy),
            None => Weight::from_u64(1),
        })
        .collect();
    let mis = mwis_along(g, &card_first, &peo);
    let cover = complement(g.n(), &mis);
    chunked_design(g, &cover, k)
}

#[derive(Debug, Clone)]
pub struct WeightedKSparse {
    pub design: InterventionDesign,
    pub size: usize,
    pub cost: Weight,
}

/// Penalized pipeline: the cover is the minimum-weight vertex cover under
/// `w_v + lambda`. Larger penalties favor smaller covers (fewer, fuller
/// interventions); `lambda = 0` favors cheap covers.
pub fn weighted_ksparse_design(
    g: &WeightedGraph,
    k: usize,
    lambda: &BigRational,
) -> Result<WeightedKSparse> {
    require_k(k)?;
    if lambda.is_negative() {
        return Err(SolveError::InvalidParams(format!("lambda = {lambda} must be >= 0")));
    }
    let peo = require_chordal(g)?;
    if let Some((u, v)) = g.adjacent_infinite_pair() {
        // Both endpoints would have to stay out of every intervention,
        // leaving their edge uncut.
        return Err(SolveError::InfeasibleInfiniteCosts { u, v });
    }
    let penalized: Vec<Weight> = g
        .weights()
        .iter()
        .map(|w| match w {
            Weight::Finite(r) => Weight::Finite(r + lambda),
            Weight::Infinite => Weight::Infinite,
        })
        .collect();
    let mis = mwis_along(g, &penalized, &peo);
    let cover = complement(g.n(), &mis);
    let design = chunked_design(g, &cover, k)?;
    let size = design.size();
    let cost = crate::separating::design_cost(g, &design);
    Ok(WeightedKSparse { design, size, cost })
}

/// Colors the cover's induced graph and splits each color class into
/// ascending-id chunks of size at most `k`.
fn chunked_design(g: &WeightedGraph, cover: &[usize], k: usize) -> Result<InterventionDesign> {
    let induced = g.induced_subgraph(cover)?;
    let colors = optimal_coloring(&induced)?;
    let class_count = colors.iter().max().map_or(0, |&c| c + 1);
    let mut classes: Vec<Vec<usize>> = vec![Vec::new(); class_count];
    for (i, &c) in colors.iter().enumerate() {
        classes[c].push(cover[i]);
    }
    let mut interventions = Vec::new();
    for class in &classes {
        for chunk in class.chunks(k) {
            interventions.push(chunk.to_vec());
        }
    }
    Ok(InterventionDesign::new(interventions))
}

#[derive(Debug, Clone)]
pub struct FrontierPoint {
    pub lambda: BigRational,
    pub size: usize,
    pub cost: Weight,
}

/// Runs the penalized pipeline for every grid value. Records are sorted by
/// size, then by lambda.
pub fn frontier_sweep(
    g: &WeightedGraph,
    k: usize,
    grid: &[BigRational],
) -> Result<Vec<FrontierPoint>> {
    if grid.is_empty() {
        return Err(SolveError::InvalidParams("lambda grid must be non-empty".into()));
    }
    let mut points = Vec::with_capacity(grid.len());
    for lambda in grid {
        let got = weighted_ksparse_design(g, k, lambda)?;
        points.push(FrontierPoint { lambda: lambda.clone(), size: got.size, cost: got.cost });
    }
    points.sort_by(|a, b| a.size.cmp(&b.size).then_with(|| a.lambda.cmp(&b.lambda)));
    Ok(points)
}

/// Default grid: 0, a geometric ladder up to the infinity proxy
/// `1 + total finite weight` (which reduces cover comparison to
/// cardinality first), and the deciles of the weight distribution. Covers
/// both the weight-dominated and the count-dominated regimes.
pub fn default_lambda_grid(g: &WeightedGraph) -> Vec<BigRational> {
    let mut grid = vec![BigRational::zero()];
    let lambda_max = match g.total_weight() {
        Weight::Finite(total) => total + BigRational::from_integer(1.into()),
        Weight::Infinite => {
            let finite: Weight = g.weights().iter().filter(|w| !w.is_infinite()).sum();
            match finite {
                Weight::Finite(total) => total + BigRational::from_integer(1.into()),
                Weight::Infinite => unreachable!("sum of finite weights is finite"),
            }
        }
    };
    let two = BigRational::from_integer(2.into());
    let mut cur = lambda_max.clone();
    for _ in 0..15 {
        grid.push(cur.clone());
        cur /= &two;
    }
    let mut finite: Vec<BigRational> = g
        .weights()
        .iter()
        .filter_map(|w| w.as_finite().cloned())
        .collect();
    finite.sort();
    if !finite.is_empty() {
        for decile in 1..=9usize {
            let idx = (decile * finite.len()) / 10;
            grid.push(finite[idx.min(finite.len() - 1)].clone());
        }
    }
    grid.sort();
    grid.dedup();
    grid
}

/// The infinity-proxy penalty: with `lambda = 1 + total finite weight`,
/// minimizing total penalized weight minimizes cardinality first.
pub fn lambda_infinity_proxy(g: &WeightedGraph) -> BigRational {
    let finite: Weight = g.weights().iter().filter(|w| !w.is_infinite()).sum();
    match finite {
        Weight::Finite(total) => total + BigRational::from_integer(1.into()),
        Weight::Infinite => unreachable!("sum of finite weights is finite"),
    }
}

/// Pareto-minimal points: increasing size, strictly decreasing cost.
pub fn lower_envelope(points: &[FrontierPoint]) -> Vec<FrontierPoint> {
    let mut sorted: Vec<&FrontierPoint> = points.iter().collect();
    sorted.sort_by(|a, b| a.size.cmp(&b.size).then_with(|| a.cost.cmp(&b.cost)));
    let mut env: Vec<FrontierPoint> = Vec::new();
    for p in sorted {
        match env.last() {
            Some(last) if p.cost >= last.cost => {}
            _ => env.push(p.clone()),
        }
    }
    env
}

/// CSV with columns `lambda,size,cost,normalized_cost`; costs are
/// normalized so the largest in the sweep is 1.0. Numeric columns are f64
/// renderings of the exact values.
pub fn frontier_csv(points: &[FrontierPoint]) -> String {
    let max_cost = points
        .iter()
        .map(|p| p.cost.to_f64())
        .fold(0.0f64, f64::max);
    let mut out = String::from("lambda,size,cost,normalized_cost\n");
    for p in points {
        let cost = p.cost.to_f64();
        let norm = if max_cost > 0.0 { cost / max_cost } else { 0.0 };
        out.push_str(&format!(
            "{},{},{},{}\n",
            crate::weight::rational_to_decimal(&p.lambda)
                .unwrap_or_else(|| format!("{}/{}", p.lambda.numer(), p.lambda.denom())),
            p.size,
            cost,
            norm
        ));
    }
    out
}

fn require_k(k: usize) -> Result<()> {
    if k == 0 {
        return Err(SolveError::InvalidParams("k must be at least 1".into()));
    }
    Ok(())
}
