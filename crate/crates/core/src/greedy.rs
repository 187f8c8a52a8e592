//! The quantized greedy weighted-coloring solver for minimum-cost
//! intervention design, plus the sorted-independent-set baseline.
//!
//! Each round extracts a maximum-weight independent set of the residual
//! graph and hands it the next cheapest unused color vector. Quantizing the
//! weights to `floor(w * n^3 / w_max)` after setting aside the first
//! independent set bounds the number of rounds; vertices whose quantized
//! weight is zero are swept up afterwards by unweighted rounds, which are
//! plain greedy set cover by independent sets.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;
use serde::Serialize;

use crate::chordal::{
    chromatic_number, maximum_cardinality_search, mwis_along, optimal_coloring, require_chordal,
};
use crate::error::{Result, SolveError};
use crate::graph::WeightedGraph;
use crate::separating::{canonical_color, design_from_assignment, ColorVector, Coloring, InterventionDesign, MAX_DESIGN_SIZE};
use crate::weight::Weight;

/// One extraction round: the set, the color it received, and the set's
/// working weight (quantized when quantization was on).
#[derive(Debug, Clone, Serialize)]
pub struct GreedyRound {
    pub vertices: Vec<usize>,
    #[serde(serialize_with = "crate::io::serialize_color")]
    pub color: ColorVector,
    #[serde(serialize_with = "crate::io::serialize_weight")]
    pub weight: Weight,
}

/// Full solve record, serializable for debugging and regression tests.
#[derive(Debug, Clone, Serialize)]
pub struct GreedyTrace {
    pub rounds: Vec<GreedyRound>,
    /// `w_max / n^3`; `None` when quantization was off or had nothing to do.
    #[serde(serialize_with = "crate::io::serialize_opt_rational")]
    pub quantization_scale: Option<BigRational>,
    pub colors_used: usize,
}

/// Result of the weight-quantization step.
#[derive(Debug, Clone)]
pub struct Quantized {
    /// Same structure; vertices outside `s0` carry `floor(w * n^3 / w_max)`,
    /// members of `s0` are exempt and carry weight zero.
    pub graph: WeightedGraph,
    /// Maximum-weight independent set under the original weights; it will
    /// take the all-zero color.
    pub s0: Vec<usize>,
    /// `w_max / n^3`; `None` when every remaining weight is zero or no
    /// vertex remains outside `s0`.
    pub scale: Option<BigRational>,
}

/// Quantizes the vertex weights after removing the maximum-weight
/// independent set, mapping each remaining weight into `0..=n^3`.
pub fn quantize_weights(g: &WeightedGraph) -> Result<Quantized> {
    let peo = require_chordal(g)?;
    if let Some((u, v)) = g.adjacent_infinite_pair() {
        return Err(SolveError::InfeasibleInfiniteCosts { u, v });
    }
    let s0 = mwis_along(g, g.weights(), &peo);
    let mut in_s0 = vec![false; g.n()];
    for &v in &s0 {
        in_s0[v] = true;
    }
    let w_max = (0..g.n())
        .filter(|&v| !in_s0[v])
        .map(|v| match g.weight(v) {
            Weight::Finite(r) => r.clone(),
            // Infinite weights form an independent set here, so they are
            // all inside s0.
            Weight::Infinite => unreachable!("infinite vertex outside the first independent set"),
        })
        .max();
    let cubed = BigRational::from_integer(BigInt::from(g.n()).pow(3));
    let (weights, scale) = match w_max {
        Some(w_max) if !w_max.is_zero() => {
            let weights = (0..g.n())
                .map(|v| {
                    if in_s0[v] {
                        return Weight::zero();
                    }
                    let Weight::Finite(r) = g.weight(v) else { unreachable!() };
                    Weight::Finite((r * &cubed / &w_max).floor())
                })
                .collect();
            (weights, Some(w_max / cubed))
        }
        _ => (vec![Weight::zero(); g.n()], None),
    };
    Ok(Quantized { graph: g.with_weights(weights)?, s0, scale })
}

/// The greedy coloring solver. Extracts maximum-weight independent sets
/// from the residual graph round by round, assigning round `t` the `t`-th
/// cheapest color vector; with `quantize` the weights are first quantized.
/// Returns the separating design and the extraction trace.
pub fn greedy_min_cost_design(
    g: &WeightedGraph,
    m: u32,
    quantize: bool,
) -> Result<(InterventionDesign, GreedyTrace)> {
    if !(1..=MAX_DESIGN_SIZE).contains(&m) {
        return Err(SolveError::InvalidParams(format!(
            "m = {m} must be in 1..={MAX_DESIGN_SIZE}"
        )));
    }
    let peo = require_chordal(g)?;
    if let Some((u, v)) = g.adjacent_infinite_pair() {
        return Err(SolveError::InfeasibleInfiniteCosts { u, v });
    }
    let n = g.n();

    let (working, s0, scale) = if quantize {
        let q = quantize_weights(g)?;
        (q.graph.weights().to_vec(), q.s0, q.scale)
    } else {
        (g.weights().to_vec(), mwis_along(g, g.weights(), &peo), None)
    };

    let mut assignment: Vec<Option<ColorVector>> = vec![None; n];
    let mut rounds: Vec<GreedyRound> = Vec::new();
    let mut remaining: Vec<usize> = Vec::new();

    let commit = |set: &[usize], rounds: &mut Vec<GreedyRound>, assignment: &mut Vec<Option<ColorVector>>, working: &[Weight]| -> Result<()> {
        let t = rounds.len() as u128;
        let color = canonical_color(m, t).ok_or(SolveError::ColorsExhausted { m })?;
        for &v in set {
            assignment[v] = Some(color);
        }
        rounds.push(GreedyRound {
            vertices: set.to_vec(),
            color,
            weight: set.iter().map(|&v| &working[v]).sum(),
        });
        Ok(())
    };

    if n > 0 {
        commit(&s0, &mut rounds, &mut assignment, &working)?;
        remaining = (0..n).filter(|&v| assignment[v].is_none()).collect();
    }

    let unit = Weight::from_u64(1);
    while !remaining.is_empty() {
        let residual = g.induced_subgraph(&remaining)?;
        // Induced subgraphs of a chordal graph stay chordal; recompute the
        // ordering without re-verifying.
        let rpeo = maximum_cardinality_search(&residual);
        let any_positive = remaining.iter().any(|&v| !working[v].is_zero());
        let local_weights: Vec<Weight> = if any_positive {
            remaining.iter().map(|&v| working[v].clone()).collect()
        } else {
            // Set-cover sweep: all residual weight is gone, so cover the
            // leftovers with maximum-cardinality independent sets.
            vec![unit.clone(); remaining.len()]
        };
        let local = mwis_along(&residual, &local_weights, &rpeo);
        let set: Vec<usize> = local.iter().map(|&i| remaining[i]).collect();
        commit(&set, &mut rounds, &mut assignment, &working)?;
        remaining.retain(|&v| assignment[v].is_none());
    }

    let colors_used = rounds.len();
    if quantize && n > 0 {
        // Termination bound from the quantization analysis; a violation
        // would mean the extraction loop is broken.
        let chi = chromatic_number(g)? as f64;
        let bound = chi * (2.0 + 5.0 * (n as f64).ln()) + 1.0;
        assert!(
            colors_used as f64 <= bound + 1e-9,
            "greedy used {colors_used} colors, above the quantized bound {bound}"
        );
    }

    let coloring = Coloring::new(
        m,
        assignment.into_iter().map(|c| c.expect("all vertices colored")).collect(),
    );
    debug_assert!(coloring.is_proper(g));
    let design = design_from_assignment(&coloring);
    let trace = GreedyTrace { rounds, quantization_scale: scale, colors_used };
    Ok((design, trace))
}

/// The comparison baseline: color the maximum-weight independent set with
/// the zero vector, optimally color the rest, sort those color classes by
/// weight, and hand the cheapest remaining colors to the heaviest classes.
pub fn baseline_design(g: &WeightedGraph, m: u32) -> Result<InterventionDesign> {
    if !(1..=MAX_DESIGN_SIZE).contains(&m) {
        return Err(SolveError::InvalidParams(format!(
            "m = {m} must be in 1..={MAX_DESIGN_SIZE}"
        )));
    }
    let peo = require_chordal(g)?;
    let n = g.n();
    let s0 = mwis_along(g, g.weights(), &peo);
    let mut assignment: Vec<Option<ColorVector>> = vec![None; n];
    for &v in &s0 {
        assignment[v] = Some(ColorVector::zero(m));
    }
    let rest: Vec<usize> = (0..n).filter(|&v| assignment[v].is_none()).collect();
    if !rest.is_empty() {
        let residual = g.induced_subgraph(&rest)?;
        let colors = optimal_coloring(&residual)?;
        let class_count = colors.iter().max().map_or(0, |&c| c + 1);
        let mut classes: Vec<Vec<usize>> = vec![Vec::new(); class_count];
        for (i, &c) in colors.iter().enumerate() {
            classes[c].push(rest[i]);
        }
        // Heaviest class first; ties by the lexicographically smallest
        // member list so runs are reproducible.
        let mut order: Vec<usize> = (0..class_count).collect();
        let class_weight: Vec<Weight> =
            classes.iter().map(|cl| cl.iter().map(|&v| g.weight(v)).sum()).collect();
        order.sort_by(|&a, &b| {
            class_weight[b]
                .cmp(&class_weight[a])
                .then_with(|| classes[a].cmp(&classes[b]))
        });
        for (rank, &cls) in order.iter().enumerate() {
            let color = canonical_color(m, rank as u128 + 1)
                .ok_or(SolveError::ColorsExhausted { m })?;
            for &v in &classes[cls] {
                assignment[v] = Some(color);
            }
        }
    }
    let coloring = Coloring::new(
        m,
        assignment.into_iter().map(|c| c.expect("all vertices colored")).collect(),
    );
    debug_assert!(coloring.is_proper(g));
    Ok(design_from_assignment(&coloring))
}

/// Theorem-2 style size threshold: `ceil(log2 chi) + ceil(log2 log2 n) + 5`.
/// At or above it the quantized greedy never runs out of colors and stays
/// within Hamming weight `ceil(m/2)`.
pub fn termination_threshold(n: usize, chi: usize) -> u32 {
    let log_chi = crate::separating::ceil_log2(chi) as u32;
    let log2_n = (n.max(2) as f64).log2();
    let loglog = log2_n.log2().max(0.0).ceil() as u32;
    log_chi + loglog + 5
}
