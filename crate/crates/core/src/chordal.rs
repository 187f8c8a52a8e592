//! Exact polynomial-time primitives on chordal graphs: elimination
//! orderings, chordality verification, optimal coloring, maximum-weight
//! independent set, minimum-weight vertex cover, clique trees.
//!
//! Determinism: every routine breaks ties by vertex id. For independent
//! sets, among equal-weight optima the returned set is the one that
//! greedily prefers membership of smaller ids (vertex `v` is included iff
//! some optimum extends the already-fixed choices on `0..v` with `v` in).
//! Infinite weights compare by count first: an optimum maximizes the number
//! of infinite-weight members, then the finite total.

use std::cmp::Ordering;
use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Result, SolveError};
use crate::graph::WeightedGraph;
use crate::weight::Weight;

/// A vertex permutation; `order[0]` is eliminated first.
///
/// The ordering is perfect when every vertex's later neighbors form a
/// clique, which holds for the output of `maximum_cardinality_search`
/// exactly when the graph is chordal.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EliminationOrdering {
    pub order: Vec<usize>,
}

impl EliminationOrdering {
    /// `positions()[v]` = index of `v` in the order.
    pub fn positions(&self) -> Vec<usize> {
        let mut pos = vec![0; self.order.len()];
        for (i, &v) in self.order.iter().enumerate() {
            pos[v] = i;
        }
        pos
    }
}

/// Tree decomposition of a chordal graph into its maximal cliques.
#[derive(Debug, Clone)]
pub struct CliqueTree {
    /// Maximal cliques, each sorted by vertex id.
    pub bags: Vec<Vec<usize>>,
    /// Tree (forest, for disconnected graphs) edges between bag indices.
    pub edges: Vec<(usize, usize)>,
}

impl CliqueTree {
    pub fn treewidth(&self) -> usize {
        self.bags.iter().map(Vec::len).max().unwrap_or(0).saturating_sub(1)
    }
}

/// Maximum cardinality search. Visits vertices preferring the one with the
/// most already-visited neighbors (ties to the smallest id) and returns the
/// reverse of the visit order, so the result reads as an elimination
/// ordering with `order[0]` eliminated first.
pub fn maximum_cardinality_search(g: &WeightedGraph) -> EliminationOrdering {
    let n = g.n();
    let mut label = vec![0usize; n];
    let mut visited = vec![false; n];
    let mut buckets: Vec<BTreeSet<usize>> = vec![BTreeSet::new(); n + 1];
    for v in 0..n {
        buckets[0].insert(v);
    }
    let mut high = 0usize;
    let mut visit = Vec::with_capacity(n);
    for _ in 0..n {
        while buckets[high].is_empty() {
            high -= 1;
        }
        let v = *buckets[high].iter().next().expect("nonempty bucket");
        buckets[high].remove(&v);
        visited[v] = true;
        visit.push(v);
        for &u in g.neighbors(v) {
            if !visited[u] {
                buckets[label[u]].remove(&u);
                label[u] += 1;
                buckets[label[u]].insert(u);
                if label[u] > high {
                    high = label[u];
                }
            }
        }
    }
    visit.reverse();
    EliminationOrdering { order: visit }
}

/// Checks the perfect-elimination property: for each vertex, its neighbors
/// later in the order form a clique. Standard single-witness test against
/// the earliest later neighbor.
pub fn is_perfect_elimination_ordering(g: &WeightedGraph, ordering: &EliminationOrdering) -> bool {
    let n = g.n();
    if ordering.order.len() != n {
        return false;
    }
    let pos = ordering.positions();
    for v in 0..n {
        let later: Vec<usize> = g
            .neighbors(v)
            .iter()
            .copied()
            .filter(|&u| pos[u] > pos[v])
            .collect();
        let Some(&first) = later.iter().min_by_key(|&&u| pos[u]) else {
            continue;
        };
        for &u in &later {
            if u != first && !g.has_edge(first, u) {
                return false;
            }
        }
    }
    true
}

/// True iff maximum cardinality search yields a perfect elimination
/// ordering, i.e. iff the graph has no chordless cycle of length >= 4.
pub fn is_chordal(g: &WeightedGraph) -> bool {
    is_perfect_elimination_ordering(g, &maximum_cardinality_search(g))
}

pub(crate) fn require_chordal(g: &WeightedGraph) -> Result<EliminationOrdering> {
    let peo = maximum_cardinality_search(g);
    if is_perfect_elimination_ordering(g, &peo) {
        Ok(peo)
    } else {
        Err(SolveError::NonChordalInput)
    }
}

/// Proper coloring with exactly `max clique` colors, by greedy assignment
/// along the reverse perfect elimination ordering. Color indices are
/// `0..chromatic number`.
pub fn optimal_coloring(g: &WeightedGraph) -> Result<Vec<usize>> {
    let peo = require_chordal(g)?;
    Ok(coloring_along(g, &peo))
}

pub(crate) fn coloring_along(g: &WeightedGraph, peo: &EliminationOrdering) -> Vec<usize> {
    let n = g.n();
    let mut color = vec![usize::MAX; n];
    let mut used = vec![false; n + 1];
    for &v in peo.order.iter().rev() {
        let mut max_seen = 0;
        for &u in g.neighbors(v) {
            if color[u] != usize::MAX {
                used[color[u]] = true;
                max_seen = max_seen.max(color[u] + 1);
            }
        }
        let c = (0..=max_seen).find(|&c| !used[c]).expect("free color exists");
        color[v] = c;
        for &u in g.neighbors(v) {
            if color[u] != usize::MAX {
                used[color[u]] = false;
            }
        }
    }
    color
}

/// Number of colors used by `optimal_coloring`, which equals the size of
/// the largest clique.
pub fn chromatic_number(g: &WeightedGraph) -> Result<usize> {
    Ok(optimal_coloring(g)?.into_iter().map(|c| c + 1).max().unwrap_or(0))
}

/// Extraction value: infinite-member count, then finite weight, then the
/// id-preference bonus, compared lexicographically. The arithmetic stays in
/// an ordered abelian group, which is all the independent-set routine needs.
#[derive(Debug, Clone, PartialEq, Eq)]
struct ExtractionValue {
    inf: i64,
    finite: BigRational,
    bonus: BigInt,
}

impl ExtractionValue {
    fn zero() -> Self {
        ExtractionValue {
            inf: 0,
            finite: BigRational::zero(),
            bonus: BigInt::zero(),
        }
    }

    fn for_vertex(w: &Weight, v: usize, n: usize) -> Self {
        let (inf, finite) = match w {
            Weight::Infinite => (1, BigRational::zero()),
            Weight::Finite(r) => (0, r.clone()),
        };
        ExtractionValue {
            inf,
            finite,
            bonus: BigInt::one() << (n - 1 - v),
        }
    }

    fn is_positive(&self) -> bool {
        *self > ExtractionValue::zero()
    }

    fn sub_assign(&mut self, rhs: &ExtractionValue) {
        self.inf -= rhs.inf;
        self.finite -= &rhs.finite;
        self.bonus -= &rhs.bonus;
    }
}

impl PartialOrd for ExtractionValue {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for ExtractionValue {
    fn cmp(&self, other: &Self) -> Ordering {
        self.inf
            .cmp(&other.inf)
            .then_with(|| self.finite.cmp(&other.finite))
            .then_with(|| self.bonus.cmp(&other.bonus))
    }
}

/// Maximum-weight independent set of a chordal graph under the given
/// weights, via the residual-weight sweep along a perfect elimination
/// ordering. Returns vertex ids sorted ascending.
pub(crate) fn mwis_along(g: &WeightedGraph, weights: &[Weight], peo: &EliminationOrdering) -> Vec<usize> {
    let n = g.n();
    debug_assert_eq!(weights.len(), n);
    let pos = peo.positions();
    let mut residual: Vec<ExtractionValue> = (0..n)
        .map(|v| ExtractionValue::for_vertex(&weights[v], v, n))
        .collect();
    let mut candidates = Vec::new();
    for &v in &peo.order {
        if residual[v].is_positive() {
            let dec = residual[v].clone();
            candidates.push(v);
            for &u in g.neighbors(v) {
                if pos[u] > pos[v] {
                    residual[u].sub_assign(&dec);
                }
            }
        }
    }
    let mut in_set = vec![false; n];
    for &v in candidates.iter().rev() {
        if !g.neighbors(v).iter().any(|&u| in_set[u]) {
            in_set[v] = true;
        }
    }
    (0..n).filter(|&v| in_set[v]).collect()
}

/// Maximum-weight independent set using the graph's own weights.
///
/// Infinite-weight vertices count before any finite total, so every
/// infinite-weight vertex is in the result exactly when the infinite-weight
/// vertices form an independent set containing it.
pub fn max_weight_independent_set(g: &WeightedGraph) -> Result<Vec<usize>> {
    let peo = require_chordal(g)?;
    Ok(mwis_along(g, g.weights(), &peo))
}

/// Complement of `max_weight_independent_set`; covers every edge.
pub fn min_weight_vertex_cover(g: &WeightedGraph) -> Result<Vec<usize>> {
    let peo = require_chordal(g)?;
    let mis = mwis_along(g, g.weights(), &peo);
    Ok(complement(g.n(), &mis))
}

/// Minimum-cardinality vertex cover (unit weights); its size is the
/// covering number tau.
pub fn min_cardinality_vertex_cover(g: &WeightedGraph) -> Result<Vec<usize>> {
    let peo = require_chordal(g)?;
    let unit = vec![Weight::from_u64(1); g.n()];
    let mis = mwis_along(g, &unit, &peo);
    Ok(complement(g.n(), &mis))
}

pub(crate) fn complement(n: usize, sorted_subset: &[usize]) -> Vec<usize> {
    let mut inside = vec![false; n];
    for &v in sorted_subset {
        inside[v] = true;
    }
    (0..n).filter(|&v| !inside[v]).collect()
}

/// Clique tree of a chordal graph: maximal cliques from the elimination
/// ordering, joined by a maximum-weight spanning forest of the clique
/// intersection graph (weight = separator size), which yields the
/// running-intersection property.
pub fn build_clique_tree(g: &WeightedGraph) -> Result<CliqueTree> {
    let peo = require_chordal(g)?;
    let pos = peo.positions();
    let n = g.n();

    let mut bags: Vec<Vec<usize>> = Vec::new();
    for v in 0..n {
        let mut cand: Vec<usize> = g
            .neighbors(v)
            .iter()
            .copied()
            .filter(|&u| pos[u] > pos[v])
            .collect();
        cand.push(v);
        cand.sort_unstable();
        if is_maximal_clique(g, &cand) {
            bags.push(cand);
        }
    }

    // Candidate tree edges: bag pairs sharing vertices, weighted by the
    // intersection size counted through per-vertex bag membership.
    let mut bags_of: Vec<Vec<usize>> = vec![Vec::new(); n];
    for (i, bag) in bags.iter().enumerate() {
        for &v in bag {
            bags_of[v].push(i);
        }
    }
    let mut inter: std::collections::HashMap<(usize, usize), usize> = std::collections::HashMap::new();
    for list in &bags_of {
        for (a, &i) in list.iter().enumerate() {
            for &j in &list[a + 1..] {
                *inter.entry((i.min(j), i.max(j))).or_insert(0) += 1;
            }
        }
    }
    let mut cand_edges: Vec<(usize, usize, usize)> =
        inter.into_iter().map(|((i, j), w)| (w, i, j)).collect();
    cand_edges.sort_unstable_by(|a, b| b.0.cmp(&a.0).then(a.1.cmp(&b.1)).then(a.2.cmp(&b.2)));

    let mut parent: Vec<usize> = (0..bags.len()).collect();
    fn find(parent: &mut Vec<usize>, mut x: usize) -> usize {
        while parent[x] != x {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        x
    }
    let mut edges = Vec::new();
    for (_, i, j) in cand_edges {
        let (ri, rj) = (find(&mut parent, i), find(&mut parent, j));
        if ri != rj {
            parent[ri] = rj;
            edges.push((i, j));
        }
    }
    Ok(CliqueTree { bags, edges })
}

fn is_maximal_clique(g: &WeightedGraph, clique: &[usize]) -> bool {
    let probe = *clique
        .iter()
        .min_by_key(|&&v| g.degree(v))
        .expect("clique is nonempty");
    for &x in g.neighbors(probe) {
        if clique.binary_search(&x).is_ok() {
            continue;
        }
        if clique.iter().all(|&y| y == probe || g.has_edge(x, y)) {
            return false;
        }
    }
    true
}
