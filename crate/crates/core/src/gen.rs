//! Random connected chordal graphs with bounded maximum degree, plus
//! heavy-tailed Pareto weight sampling.
//!
//! Construction: vertices are added in order; each new vertex picks one
//! mandatory neighbor uniformly from the previous `b` vertices (all prior
//! vertices while fewer than `b` exist), adds each other window member
//! independently with probability `d/b`, and then the chosen prior
//! neighbors are completed into a clique. Every prior neighbor of a vertex
//! lies within its window, so all edges span at most `b` positions and the
//! maximum degree is bounded by `2b`; the new vertex's earlier neighborhood
//! being a clique makes the insertion order a reverse perfect elimination
//! ordering, so the result is connected and chordal.

use num_bigint::BigInt;
use num_rational::BigRational;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha12Rng;

use crate::error::{Result, SolveError};
use crate::graph::WeightedGraph;
use crate::weight::Weight;

/// Weights are truncated to this fixed denominator (six decimal digits) so
/// that downstream arithmetic stays exact.
pub const WEIGHT_DENOMINATOR: u64 = 1_000_000;

/// Separates the weight stream from the structure stream for a given seed.
const WEIGHT_SEED_SALT: u64 = 0x9E37_79B9_7F4A_7C15;

#[derive(Debug, Clone, PartialEq)]
pub struct GeneratorParams {
    pub n: usize,
    /// Window size; bounds the maximum degree by `2b`.
    pub b: usize,
    /// Expected extra neighbors per vertex; each window member is added
    /// with probability `d/b`.
    pub d: f64,
    /// Pareto shape: draws have `P(X > x) = x^-shape` for `x >= 1`.
    pub pareto_shape: f64,
    pub seed: u64,
}

impl GeneratorParams {
    pub fn validate(&self) -> Result<()> {
        if self.n == 0 {
            return Err(SolveError::InvalidParams("n must be at least 1".into()));
        }
        if self.b == 0 {
            return Err(SolveError::InvalidParams("b must be at least 1".into()));
        }
        if self.n > 1 && self.b >= self.n {
            return Err(SolveError::InvalidParams(format!(
                "window b = {} must be smaller than n = {}",
                self.b, self.n
            )));
        }
        if !(self.d >= 0.0 && self.d <= self.b as f64) {
            return Err(SolveError::InvalidParams(format!(
                "d = {} must lie in [0, b = {}]",
                self.d, self.b
            )));
        }
        if self.pareto_shape.partial_cmp(&0.0) != Some(std::cmp::Ordering::Greater) {
            return Err(SolveError::InvalidParams(format!(
                "pareto shape = {} must be positive",
                self.pareto_shape
            )));
        }
        Ok(())
    }
}

/// Which Pareto convention the weights follow. Both share the tail
/// exponent; they differ in the support's lower end.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum WeightConvention {
    /// Classical Pareto: support `[1, inf)`, mean `shape/(shape-1)`.
    #[default]
    MinimumOne,
    /// Shifted (Lomax) form: support `[0, inf)`, mean `1/(shape-1)`. This
    /// is the convention common sampling libraries return and the one the
    /// cost/size trade-off benchmark regime is calibrated against.
    MinimumZero,
}

/// Generates a connected chordal graph with max degree <= 2b and i.i.d.
/// Pareto weights (classical convention), deterministically for a fixed
/// seed.
pub fn generate_chordal(params: &GeneratorParams) -> Result<WeightedGraph> {
    generate_chordal_with(params, WeightConvention::MinimumOne)
}

/// `generate_chordal` with an explicit weight convention.
pub fn generate_chordal_with(
    params: &GeneratorParams,
    convention: WeightConvention,
) -> Result<WeightedGraph> {
    params.validate()?;
    let n = params.n;
    let mut rng = ChaCha12Rng::seed_from_u64(params.seed);
    let mut adj: Vec<std::collections::BTreeSet<usize>> = vec![Default::default(); n];
    let p_extra = params.d / params.b as f64;
    let mut queue = std::collections::VecDeque::new();
    for i in 1..n {
        let lo = i.saturating_sub(params.b);
        let mandatory = rng.gen_range(lo..i);
        let mut prior: Vec<usize> = vec![mandatory];
        for u in lo..i {
            if u != mandatory && rng.gen_bool(p_extra) {
                prior.push(u);
            }
        }
        for &u in &prior {
            adj[i].insert(u);
            adj[u].insert(i);
        }
        // Close the "earlier neighbors form a clique" invariant. Completing
        // one neighborhood can grow another vertex's earlier neighborhood,
        // so re-complete until stable. Every added edge joins two window
        // mates of some vertex, hence spans at most b positions, which
        // keeps the maximum degree bounded by 2b.
        queue.push_back(i);
        while let Some(x) = queue.pop_front() {
            let earlier: Vec<usize> = adj[x].range(..x).copied().collect();
            for (a, &u) in earlier.iter().enumerate() {
                for &w in &earlier[a + 1..] {
                    if adj[u].insert(w) {
                        adj[w].insert(u);
                        queue.push_back(w);
                    }
                }
            }
        }
    }
    let mut edges = Vec::new();
    for (u, set) in adj.iter().enumerate() {
        for &v in set {
            if u < v {
                edges.push((u, v));
            }
        }
    }
    let weights = sample_weights_with(
        n,
        params.pareto_shape,
        params.seed ^ WEIGHT_SEED_SALT,
        convention,
    );
    WeightedGraph::new(n, &edges, weights)
}

/// `n` i.i.d. Pareto draws (minimum 1, the given shape), truncated to
/// `WEIGHT_DENOMINATOR` fixed-point precision.
pub fn sample_weights(n: usize, pareto_shape: f64, seed: u64) -> Vec<Weight> {
    sample_weights_with(n, pareto_shape, seed, WeightConvention::MinimumOne)
}

/// `sample_weights` with an explicit convention; the shifted form
/// subtracts 1 from each classical draw before truncation.
pub fn sample_weights_with(
    n: usize,
    pareto_shape: f64,
    seed: u64,
    convention: WeightConvention,
) -> Vec<Weight> {
    assert!(pareto_shape > 0.0, "pareto shape must be positive");
    let mut rng = ChaCha12Rng::seed_from_u64(seed);
    let shift = match convention {
        WeightConvention::MinimumOne => 0.0,
        WeightConvention::MinimumZero => 1.0,
    };
    (0..n)
        .map(|_| {
            let u: f64 = rng.gen();
            let x = (1.0 - u).powf(-1.0 / pareto_shape) - shift;
            let scaled = (x * WEIGHT_DENOMINATOR as f64).floor().max(0.0);
            let scaled = if scaled >= u64::MAX as f64 {
                u64::MAX
            } else {
                scaled as u64
            };
            Weight::Finite(BigRational::new(
                BigInt::from(scaled),
                BigInt::from(WEIGHT_DENOMINATOR),
            ))
        })
        .collect()
}
