//! Graph separating systems and their coloring view.
//!
//! An intervention design, a family of vertex subsets `I_1..I_m`, separates
//! a graph when each edge is cut by some subset. Encoding membership as bit
//! `i` of a length-`m` color vector per vertex turns separation into proper
//! coloring, and the total cost (each vertex pays its weight once per
//! intervention containing it) into a weighted coloring objective.

use crate::error::{Result, SolveError};
use crate::graph::WeightedGraph;
use crate::weight::Weight;

/// Largest supported design size; `2^m` color vectors must stay enumerable.
pub const MAX_DESIGN_SIZE: u32 = 62;

/// A length-`m` bit vector; bit `i` means membership in intervention `i+1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct ColorVector {
    m: u32,
    bits: u64,
}

impl ColorVector {
    pub fn new(m: u32, bits: u64) -> Self {
        assert!(m <= MAX_DESIGN_SIZE, "m must be at most {MAX_DESIGN_SIZE}");
        assert!(m == 64 || bits < (1u64 << m), "bits out of range for m");
        ColorVector { m, bits }
    }

    pub fn zero(m: u32) -> Self {
        Self::new(m, 0)
    }

    pub fn m(&self) -> u32 {
        self.m
    }

    pub fn bits(&self) -> u64 {
        self.bits
    }

    pub fn bit(&self, i: u32) -> bool {
        (self.bits >> i) & 1 == 1
    }

    /// Number of interventions containing the vertex.
    pub fn hamming_weight(&self) -> u32 {
        self.bits.count_ones()
    }

    /// String form: character `i` is membership in intervention `i+1`.
    pub fn to_bit_string(&self) -> String {
        (0..self.m).map(|i| if self.bit(i) { '1' } else { '0' }).collect()
    }

    pub fn from_bit_string(s: &str) -> Option<Self> {
        if s.len() > MAX_DESIGN_SIZE as usize {
            return None;
        }
        let mut bits = 0u64;
        for (i, ch) in s.bytes().enumerate() {
            match ch {
                b'1' => bits |= 1 << i,
                b'0' => {}
                _ => return None,
            }
        }
        Some(ColorVector { m: s.len() as u32, bits })
    }
}

pub fn binomial(n: u32, k: u32) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * (n - i) as u128 / (i + 1) as u128;
    }
    acc
}

/// The `rank`-th color vector in the canonical order used by every solver:
/// Hamming weight ascending, ties by the numeric value of the bits read as
/// a little-endian integer. `None` once `rank >= 2^m`.
pub fn canonical_color(m: u32, rank: u128) -> Option<ColorVector> {
    assert!(m <= MAX_DESIGN_SIZE);
    if rank >= 1u128 << m {
        return None;
    }
    let mut rank = rank;
    let mut weight = 0u32;
    loop {
        let class = binomial(m, weight);
        if rank < class {
            break;
        }
        rank -= class;
        weight += 1;
    }
    // Combinadic unranking in colexicographic order, which coincides with
    // numeric order of the bit masks within a weight class.
    let mut bits = 0u64;
    let mut r = rank;
    for k in (1..=weight).rev() {
        let mut c = k - 1;
        while binomial(c + 1, k) <= r {
            c += 1;
        }
        r -= binomial(c, k);
        bits |= 1u64 << c;
    }
    Some(ColorVector { m, bits })
}

/// A total assignment of color vectors to vertices `0..n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Coloring {
    m: u32,
    assignment: Vec<ColorVector>,
}

impl Coloring {
    pub fn new(m: u32, assignment: Vec<ColorVector>) -> Self {
        assert!(assignment.iter().all(|c| c.m() == m));
        Coloring { m, assignment }
    }

    pub fn m(&self) -> u32 {
        self.m
    }

    pub fn n(&self) -> usize {
        self.assignment.len()
    }

    pub fn color(&self, v: usize) -> ColorVector {
        self.assignment[v]
    }

    pub fn assignment(&self) -> &[ColorVector] {
        &self.assignment
    }

    /// First monochromatic edge, if any.
    pub fn improper_edge(&self, g: &WeightedGraph) -> Option<(usize, usize)> {
        g.edges()
            .into_iter()
            .find(|&(u, v)| self.assignment[u] == self.assignment[v])
    }

    pub fn is_proper(&self, g: &WeightedGraph) -> bool {
        self.improper_edge(g).is_none()
    }

    pub fn distinct_colors(&self) -> usize {
        let mut seen: Vec<u64> = self.assignment.iter().map(|c| c.bits()).collect();
        seen.sort_unstable();
        seen.dedup();
        seen.len()
    }
}

/// An ordered list of vertex subsets, the interventions `I_1..I_m`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InterventionDesign {
    interventions: Vec<Vec<usize>>,
}

impl InterventionDesign {
    /// Each subset is sorted and deduplicated.
    pub fn new(mut interventions: Vec<Vec<usize>>) -> Self {
        for set in &mut interventions {
            set.sort_unstable();
            set.dedup();
        }
        InterventionDesign { interventions }
    }

    pub fn size(&self) -> usize {
        self.interventions.len()
    }

    pub fn interventions(&self) -> &[Vec<usize>] {
        &self.interventions
    }

    pub fn max_intervention_size(&self) -> usize {
        self.interventions.iter().map(Vec::len).max().unwrap_or(0)
    }

    pub fn is_k_sparse(&self, k: usize) -> bool {
        self.max_intervention_size() <= k
    }
}

/// Edges with exactly one endpoint in `s`. `s` may be in any order.
pub fn cut(g: &WeightedGraph, s: &[usize]) -> Vec<(usize, usize)> {
    let mut inside = vec![false; g.n()];
    for &v in s {
        inside[v] = true;
    }
    g.edges()
        .into_iter()
        .filter(|&(u, v)| inside[u] != inside[v])
        .collect()
}

/// True iff every edge of `g` is cut by some intervention.
pub fn verify_separating(g: &WeightedGraph, d: &InterventionDesign) -> bool {
    let c = design_to_coloring(d, g.n());
    c.is_proper(g)
}

/// The design whose `i`-th intervention is the set of vertices with bit `i`
/// set. Requires the coloring to be proper on `g` so the result separates.
pub fn coloring_to_design(g: &WeightedGraph, c: &Coloring) -> Result<InterventionDesign> {
    if let Some((u, v)) = c.improper_edge(g) {
        return Err(SolveError::ImproperColoring { u, v });
    }
    Ok(design_from_assignment(c))
}

/// The membership-to-bits construction without the properness check; the
/// result separates iff the coloring was proper.
pub fn design_from_assignment(c: &Coloring) -> InterventionDesign {
    let mut interventions = vec![Vec::new(); c.m() as usize];
    for v in 0..c.n() {
        let cv = c.color(v);
        for i in 0..c.m() {
            if cv.bit(i) {
                interventions[i as usize].push(v);
            }
        }
    }
    InterventionDesign { interventions }
}

/// Inverse construction: `c(v)_i = 1` iff `v` is in intervention `i+1`.
/// Members outside `0..n` are ignored. Proper iff `d` is separating.
pub fn design_to_coloring(d: &InterventionDesign, n: usize) -> Coloring {
    let m = d.size() as u32;
    assert!(m <= MAX_DESIGN_SIZE, "design size must be at most {MAX_DESIGN_SIZE}");
    let mut assignment = vec![ColorVector::zero(m); n];
    for (i, set) in d.interventions.iter().enumerate() {
        for &v in set {
            if v < n {
                assignment[v] = ColorVector::new(m, assignment[v].bits() | (1 << i));
            }
        }
    }
    Coloring { m, assignment }
}

/// Exact total cost of a coloring: each vertex pays its weight times the
/// Hamming weight of its color. Infinite as soon as an infinite-weight
/// vertex is in any intervention.
pub fn coloring_cost(g: &WeightedGraph, c: &Coloring) -> Weight {
    let mut total = Weight::zero();
    for v in 0..g.n() {
        total += &g.weight(v).times(c.color(v).hamming_weight() as u64);
    }
    total
}

/// Exact design cost with multiplicity: a vertex in several interventions
/// pays once per appearance.
pub fn design_cost(g: &WeightedGraph, d: &InterventionDesign) -> Weight {
    let mut total = Weight::zero();
    for set in &d.interventions {
        for &v in set {
            total += g.weight(v);
        }
    }
    total
}

/// Smallest possible separating-system size: `ceil(log2 chi)`; 0 for
/// edgeless graphs.
pub fn min_design_size(g: &WeightedGraph) -> Result<usize> {
    let chi = crate::chordal::chromatic_number(g)?;
    Ok(ceil_log2(chi))
}

pub fn ceil_log2(x: usize) -> usize {
    if x <= 1 {
        0
    } else {
        (usize::BITS - (x - 1).leading_zeros()) as usize
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn k(n: usize) -> WeightedGraph {
        let edges: Vec<(usize, usize)> =
            (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
        WeightedGraph::unit_weights(n, &edges).unwrap()
    }

    #[test]
    fn canonical_order_is_weight_then_numeric() {
        for m in 0..=4u32 {
            let mut expect: Vec<u64> = (0..(1u64 << m)).collect();
            expect.sort_by_key(|&b| (b.count_ones(), b));
            let got: Vec<u64> = (0..(1u128 << m))
                .map(|r| canonical_color(m, r).unwrap().bits())
                .collect();
            assert_eq!(got, expect, "m = {m}");
            assert!(canonical_color(m, 1u128 << m).is_none());
        }
    }

    #[test]
    fn binomial_matches_pascal() {
        assert_eq!(binomial(5, 2), 10);
        assert_eq!(binomial(5, 0), 1);
        assert_eq!(binomial(5, 6), 0);
        assert_eq!(binomial(62, 31), 465428353255261088);
    }

    #[test]
    fn cut_edge_cases() {
        let g = k(4);
        assert!(cut(&g, &[]).is_empty());
        assert!(cut(&g, &[0, 1, 2, 3]).is_empty());
        assert_eq!(cut(&g, &[0, 1]).len(), 4);
        let e = WeightedGraph::unit_weights(2, &[(0, 1)]).unwrap();
        assert_eq!(cut(&e, &[0]), vec![(0, 1)]);
    }

    #[test]
    fn k2_coloring_to_design_example() {
        // Colors 00 and 01 (m = 2): I_1 empty, I_2 = {1}.
        let g = WeightedGraph::unit_weights(2, &[(0, 1)]).unwrap();
        let c = Coloring::new(
            2,
            vec![
                ColorVector::from_bit_string("00").unwrap(),
                ColorVector::from_bit_string("01").unwrap(),
            ],
        );
        let d = coloring_to_design(&g, &c).unwrap();
        assert_eq!(d.interventions(), &[vec![], vec![1]]);
        assert!(verify_separating(&g, &d));
    }

    #[test]
    fn improper_coloring_is_rejected() {
        let g = k(3);
        let c = Coloring::new(1, vec![ColorVector::zero(1); 3]);
        assert!(matches!(
            coloring_to_design(&g, &c),
            Err(SolveError::ImproperColoring { .. })
        ));
        let d = design_from_assignment(&c);
        assert!(!verify_separating(&g, &d));
    }

    #[test]
    fn edgeless_design_is_separating_and_free() {
        let g = WeightedGraph::unit_weights(3, &[]).unwrap();
        let d = InterventionDesign::new(vec![vec![], vec![]]);
        assert!(verify_separating(&g, &d));
        assert!(design_cost(&g, &d).is_zero());
    }

    #[test]
    fn design_cost_counts_multiplicity() {
        let g = WeightedGraph::new(1, &[], vec![Weight::from_u64(4)]).unwrap();
        let d = InterventionDesign::new(vec![vec![0], vec![0], vec![0]]);
        assert_eq!(design_cost(&g, &d), Weight::from_u64(12));
    }

    #[test]
    fn coloring_cost_examples() {
        let g = WeightedGraph::new(
            2,
            &[(0, 1)],
            vec![Weight::from_u64(3), Weight::from_u64(5)],
        )
        .unwrap();
        let all_zero = Coloring::new(2, vec![ColorVector::zero(2); 2]);
        assert!(coloring_cost(&g, &all_zero).is_zero());
        let c = Coloring::new(
            2,
            vec![
                ColorVector::from_bit_string("00").unwrap(),
                ColorVector::from_bit_string("10").unwrap(),
            ],
        );
        assert_eq!(coloring_cost(&g, &c), Weight::from_u64(5));
        let inf = WeightedGraph::new(1, &[], vec![Weight::Infinite]).unwrap();
        let c1 = Coloring::new(1, vec![ColorVector::new(1, 1)]);
        assert!(coloring_cost(&inf, &c1).is_infinite());
    }

    #[test]
    fn min_design_size_examples() {
        assert_eq!(min_design_size(&k(2)).unwrap(), 1);
        assert_eq!(min_design_size(&k(3)).unwrap(), 2);
        assert_eq!(min_design_size(&k(5)).unwrap(), 3);
        assert_eq!(min_design_size(&WeightedGraph::unit_weights(4, &[]).unwrap()).unwrap(), 0);
        assert_eq!(min_design_size(&WeightedGraph::unit_weights(0, &[]).unwrap()).unwrap(), 0);
    }
}
