//! Ground-truth optimal solvers: clique-tree dynamic programming for
//! minimum-cost coloring with bit-vector colors, and brute-force
//! enumerators for tiny instances.

use std::collections::HashMap;
use std::time::Instant;

use crate::chordal::{build_clique_tree, chromatic_number, optimal_coloring};
use crate::error::{Result, SolveError};
use crate::graph::WeightedGraph;
use crate::separating::{binomial, canonical_color, ColorVector, Coloring, InterventionDesign};
use crate::weight::Weight;

/// Default cap on the estimated number of DP states.
pub const DEFAULT_DP_BUDGET: u128 = 50_000_000;

/// The color set `{0,1}^m` in canonical order: one weight-0 color,
/// `C(m,1)` weight-1 colors, and so on, `2^m` in total.
#[derive(Debug, Clone, Copy)]
pub struct ColorMenu {
    m: u32,
}

impl ColorMenu {
    pub fn new(m: u32) -> Self {
        assert!(m <= crate::separating::MAX_DESIGN_SIZE);
        ColorMenu { m }
    }

    pub fn m(&self) -> u32 {
        self.m
    }

    pub fn total(&self) -> u128 {
        1u128 << self.m
    }

    /// Number of colors of Hamming weight `j`.
    pub fn class_count(&self, j: u32) -> u128 {
        binomial(self.m, j)
    }

    /// Rank of the first color of Hamming weight `j` in canonical order.
    pub fn class_offset(&self, j: u32) -> u128 {
        (0..j).map(|i| binomial(self.m, i)).sum()
    }

    pub fn color(&self, rank: u128) -> Option<ColorVector> {
        canonical_color(self.m, rank)
    }
}

/// Caps for the exhaustive searches; they are oracles for small instances,
/// not production solvers.
#[derive(Debug, Clone, Copy)]
pub struct BruteForceLimits {
    pub max_n: usize,
    pub max_m: u32,
}

impl Default for BruteForceLimits {
    fn default() -> Self {
        BruteForceLimits { max_n: 12, max_m: 3 }
    }
}

/// Exhaustive minimum over all proper assignments `V -> {0,1}^m`.
/// Works on arbitrary graphs; serves as the oracle for every other solver.
pub fn brute_force_min_cost(
    g: &WeightedGraph,
    m: u32,
    limits: BruteForceLimits,
) -> Result<(Coloring, Weight)> {
    let n = g.n();
    if n > limits.max_n || m > limits.max_m {
        return Err(SolveError::BudgetExceeded {
            estimate: (1u128 << m).saturating_pow(n.min(100) as u32),
            budget: (1u128 << limits.max_m).saturating_pow(limits.max_n as u32),
        });
    }
    let menu = ColorMenu::new(m);
    let colors: Vec<ColorVector> = (0..menu.total()).map(|r| menu.color(r).unwrap()).collect();
    let mut assignment: Vec<usize> = vec![usize::MAX; n];
    let mut best: Option<(Vec<usize>, Weight)> = None;

    fn dfs(
        g: &WeightedGraph,
        colors: &[ColorVector],
        assignment: &mut Vec<usize>,
        v: usize,
        partial: Weight,
        best: &mut Option<(Vec<usize>, Weight)>,
    ) {
        if let Some((_, bound)) = best {
            if partial >= *bound {
                return;
            }
        }
        if v == g.n() {
            *best = Some((assignment.clone(), partial));
            return;
        }
        'colors: for (rank, &cv) in colors.iter().enumerate() {
            for &u in g.neighbors(v) {
                if u < v && assignment[u] == rank {
                    continue 'colors;
                }
            }
            assignment[v] = rank;
            let add = g.weight(v).times(cv.hamming_weight() as u64);
            dfs(g, colors, assignment, v + 1, partial.clone() + &add, best);
            assignment[v] = usize::MAX;
        }
    }

    dfs(g, &colors, &mut assignment, 0, Weight::zero(), &mut best);
    let (ranks, cost) = best.ok_or(SolveError::ColorsExhausted { m })?;
    let coloring = Coloring::new(m, ranks.into_iter().map(|r| colors[r]).collect());
    Ok((coloring, cost))
}

/// Clique-tree dynamic-programming statistics for reporting.
#[derive(Debug, Clone)]
pub struct DpStats {
    /// Estimated state count, `sum over bags of (m+1)^|bag|`.
    pub estimated_states: u128,
    pub bag_count: usize,
    pub treewidth: usize,
    pub wall_ms: u128,
}

#[derive(Debug, Clone)]
pub struct ExactSolution {
    pub coloring: Coloring,
    pub cost: Weight,
    pub stats: DpStats,
}

/// Provably minimum-cost proper coloring into `{0,1}^m` by dynamic
/// programming over the clique tree.
///
/// States assign Hamming-weight classes, not raw colors, to bag vertices:
/// colors of equal weight are exchangeable, so a class assignment whose
/// per-bag class counts stay within `C(m, j)` is realizable as a proper
/// coloring (each class induces a chordal subgraph whose clique number is
/// bounded by the largest in-bag count). This shrinks the per-vertex choice
/// from `2^m` colors to `m+1` classes.
pub fn exact_min_cost_coloring(
    g: &WeightedGraph,
    m: u32,
    budget: Option<u128>,
) -> Result<ExactSolution> {
    exact_min_cost_coloring_rooted(g, m, budget, 0)
}

/// Same solver with the root bag of each clique-tree component rotated by
/// `root_bias`; the optimal cost is invariant under the choice.
pub fn exact_min_cost_coloring_rooted(
    g: &WeightedGraph,
    m: u32,
    budget: Option<u128>,
    root_bias: usize,
) -> Result<ExactSolution> {
    let start = Instant::now();
    let budget = budget.unwrap_or(DEFAULT_DP_BUDGET);
    let chi = chromatic_number(g)?;
    if m > crate::separating::MAX_DESIGN_SIZE {
        return Err(SolveError::InvalidParams(format!(
            "m = {m} exceeds the supported maximum {}",
            crate::separating::MAX_DESIGN_SIZE
        )));
    }
    if (1u128 << m) < chi as u128 {
        return Err(SolveError::ColorsExhausted { m });
    }
    let tree = build_clique_tree(g)?;
    let n = g.n();

    let states_per_bag: Vec<u128> = tree
        .bags
        .iter()
        .map(|b| (m as u128 + 1).saturating_pow(b.len() as u32))
        .collect();
    let estimate: u128 = states_per_bag
        .iter()
        .fold(0u128, |acc, &s| acc.saturating_add(s));
    if estimate > budget {
        return Err(SolveError::BudgetExceeded { estimate, budget });
    }

    let caps: Vec<u128> = (0..=m).map(|j| binomial(m, j)).collect();
    let bag_count = tree.bags.len();
    let mut tree_adj: Vec<Vec<usize>> = vec![Vec::new(); bag_count];
    for &(a, b) in &tree.edges {
        tree_adj[a].push(b);
        tree_adj[b].push(a);
    }

    // Root each component, producing a global post-order.
    let mut parent: Vec<Option<usize>> = vec![None; bag_count];
    let mut visited = vec![false; bag_count];
    let mut post_order: Vec<usize> = Vec::with_capacity(bag_count);
    let mut roots: Vec<usize> = Vec::new();
    for comp_start in 0..bag_count {
        if visited[comp_start] {
            continue;
        }
        let mut comp = vec![comp_start];
        visited[comp_start] = true;
        let mut qi = 0;
        while qi < comp.len() {
            let b = comp[qi];
            qi += 1;
            for &c in &tree_adj[b] {
                if !visited[c] {
                    visited[c] = true;
                    comp.push(c);
                }
            }
        }
        let root = comp[root_bias % comp.len()];
        roots.push(root);
        // Iterative DFS from the chosen root for parents and post-order.
        let mut stack = vec![(root, usize::MAX, false)];
        while let Some((b, par, expanded)) = stack.pop() {
            if expanded {
                post_order.push(b);
                continue;
            }
            parent[b] = (par != usize::MAX).then_some(par);
            stack.push((b, par, true));
            for &c in &tree_adj[b] {
                if par != c {
                    stack.push((c, b, false));
                }
            }
        }
    }

    // Separator with the parent, and introduced vertices, per bag.
    let mut sep: Vec<Vec<usize>> = vec![Vec::new(); bag_count];
    let mut intro: Vec<Vec<usize>> = vec![Vec::new(); bag_count];
    for b in 0..bag_count {
        match parent[b] {
            Some(p) => {
                for &v in &tree.bags[b] {
                    if tree.bags[p].binary_search(&v).is_ok() {
                        sep[b].push(v);
                    } else {
                        intro[b].push(v);
                    }
                }
            }
            None => intro[b] = tree.bags[b].clone(),
        }
    }
    let children: Vec<Vec<usize>> = (0..bag_count)
        .map(|b| {
            tree_adj[b]
                .iter()
                .copied()
                .filter(|&c| parent[c] == Some(b))
                .collect()
        })
        .collect();

    // Bottom-up: per bag, min subtree cost per separator assignment.
    let mut marginal: Vec<HashMap<Vec<u8>, Weight>> = vec![HashMap::new(); bag_count];
    let mut total_cost = Weight::zero();
    for &b in &post_order {
        let mut best_root: Option<Weight> = None;
        let mut bag_marginal: HashMap<Vec<u8>, Weight> = HashMap::new();
        let is_root = parent[b].is_none();
        enumerate_bag(
            g,
            m,
            &caps,
            &tree.bags[b],
            &intro[b],
            &children[b],
            &sep,
            &marginal,
            None,
            &mut |assign, cost| {
                if is_root {
                    match &best_root {
                        Some(prev) if *prev <= cost => {}
                        _ => best_root = Some(cost),
                    }
                } else {
                    let key: Vec<u8> = sep[b]
                        .iter()
                        .map(|v| assign[tree.bags[b].binary_search(v).unwrap()])
                        .collect();
                    match bag_marginal.get(&key) {
                        Some(prev) if *prev <= cost => {}
                        _ => {
                            bag_marginal.insert(key, cost);
                        }
                    }
                }
            },
        );
        if is_root {
            total_cost += &best_root.ok_or(SolveError::ColorsExhausted { m })?;
        } else {
            marginal[b] = bag_marginal;
        }
    }

    // Top-down: fix separator assignments and re-enumerate each bag to
    // recover one optimal class per vertex.
    let mut class_of: Vec<u8> = vec![0; n];
    let mut pre_order: Vec<usize> = post_order.clone();
    pre_order.reverse();
    let mut fixed_sep: Vec<Option<Vec<u8>>> = vec![None; bag_count];
    for &r in &roots {
        fixed_sep[r] = Some(Vec::new());
    }
    for &b in &pre_order {
        let fixed = fixed_sep[b].clone().expect("parent fixed before child");
        let mut best: Option<(Weight, Vec<u8>)> = None;
        enumerate_bag(
            g,
            m,
            &caps,
            &tree.bags[b],
            &intro[b],
            &children[b],
            &sep,
            &marginal,
            Some(&fixed),
            &mut |assign, cost| match &best {
                Some((prev, _)) if *prev <= cost => {}
                _ => best = Some((cost, assign.to_vec())),
            },
        );
        let (_, assign) = best.expect("feasible assignment exists on reconstruction");
        for (i, &v) in tree.bags[b].iter().enumerate() {
            class_of[v] = assign[i];
        }
        for &c in &children[b] {
            let key: Vec<u8> = sep[c]
                .iter()
                .map(|v| assign[tree.bags[b].binary_search(v).unwrap()])
                .collect();
            fixed_sep[c] = Some(key);
        }
    }

    let coloring = realize_classes(g, m, &class_of)?;
    debug_assert!(coloring.is_proper(g));

    Ok(ExactSolution {
        cost: total_cost,
        coloring,
        stats: DpStats {
            estimated_states: estimate,
            bag_count,
            treewidth: tree.treewidth(),
            wall_ms: start.elapsed().as_millis(),
        },
    })
}

/// Enumerates class assignments for one bag and reports each feasible
/// state's cost (introduced-vertex cost plus child marginals). When
/// `fixed_sep` is given, the separator positions are pinned to it and only
/// introduced positions vary.
#[allow(clippy::too_many_arguments)]
fn enumerate_bag(
    g: &WeightedGraph,
    m: u32,
    caps: &[u128],
    bag: &[usize],
    intro: &[usize],
    children: &[usize],
    sep: &[Vec<usize>],
    marginal: &[HashMap<Vec<u8>, Weight>],
    fixed_sep: Option<&[u8]>,
    on_state: &mut dyn FnMut(&[u8], Weight),
) {
    let size = bag.len();
    if size == 0 {
        on_state(&[], Weight::zero());
        return;
    }
    let is_intro: Vec<bool> = bag.iter().map(|v| intro.binary_search(v).is_ok()).collect();
    // Positions of each child's separator inside this bag.
    let child_proj: Vec<(usize, Vec<usize>)> = children
        .iter()
        .map(|&c| {
            let pos = sep[c]
                .iter()
                .map(|v| bag.binary_search(v).expect("separator inside parent bag"))
                .collect();
            (c, pos)
        })
        .collect();

    let mut assign: Vec<u8> = vec![0; size];
    if let Some(fixed) = fixed_sep {
        // Separator vertices are exactly the non-introduced ones, in bag order.
        let mut fi = 0;
        for (i, &isin) in is_intro.iter().enumerate() {
            if !isin {
                assign[i] = fixed[fi];
                fi += 1;
            }
        }
        debug_assert_eq!(fi, fixed.len());
    }
    let free: Vec<usize> = (0..size)
        .filter(|&i| fixed_sep.is_none() || is_intro[i])
        .collect();

    let mut counts = vec![0u128; m as usize + 1];
    for &c in assign.iter() {
        counts[c as usize] += 1;
    }

    loop {
        if counts.iter().enumerate().all(|(j, &c)| c <= caps[j]) {
            let mut cost = Weight::zero();
            let mut feasible = true;
            for (i, &v) in bag.iter().enumerate() {
                if is_intro[i] && assign[i] > 0 {
                    cost += &g.weight(v).times(assign[i] as u64);
                }
            }
            for (c, proj) in &child_proj {
                let key: Vec<u8> = proj.iter().map(|&p| assign[p]).collect();
                match marginal[*c].get(&key) {
                    Some(w) => cost += w,
                    None => {
                        feasible = false;
                        break;
                    }
                }
            }
            if feasible {
                on_state(&assign, cost);
            }
        }
        // Advance the odometer over free positions.
        let mut pos = free.len();
        loop {
            if pos == 0 {
                return;
            }
            let i = free[pos - 1];
            counts[assign[i] as usize] -= 1;
            if assign[i] < m as u8 {
                assign[i] += 1;
                counts[assign[i] as usize] += 1;
                break;
            }
            assign[i] = 0;
            counts[0] += 1;
            pos -= 1;
        }
    }
}

/// Turns a Hamming-weight-class assignment into a concrete coloring: each
/// class's induced subgraph is properly colored and its color indices map
/// onto the canonical colors of that weight.
fn realize_classes(g: &WeightedGraph, m: u32, class_of: &[u8]) -> Result<Coloring> {
    let menu = ColorMenu::new(m);
    let n = g.n();
    let mut assignment = vec![ColorVector::zero(m); n];
    for j in 0..=m {
        let members: Vec<usize> = (0..n).filter(|&v| class_of[v] == j as u8).collect();
        if members.is_empty() {
            continue;
        }
        let sub = g.induced_subgraph(&members)?;
        let sub_colors = optimal_coloring(&sub)?;
        let offset = menu.class_offset(j);
        for (i, &v) in members.iter().enumerate() {
            debug_assert!((sub_colors[i] as u128) < menu.class_count(j));
            let rank = offset + sub_colors[i] as u128;
            assignment[v] = menu.color(rank).expect("rank within menu");
        }
    }
    Ok(Coloring::new(m, assignment))
}

/// A minimum-size k-sparse separating system for a tiny graph, found by
/// memoized search over which subset cuts the first uncovered edge.
pub fn brute_force_min_ksparse(
    g: &WeightedGraph,
    k: usize,
    max_n: usize,
) -> Result<(InterventionDesign, usize)> {
    let search = KSparseSearch::new(g, k, max_n)?;
    for size in 0..=g.n().max(1) * g.n().max(1) {
        if let Some(sets) = search.feasible_with(size) {
            return Ok((InterventionDesign::new(sets), size));
        }
    }
    unreachable!("a k-sparse separating system always exists for k >= 1");
}

/// Minimum-cost k-sparse separating system of size at most `max_size`, or
/// `None` when no such system fits in `max_size` sets.
pub fn brute_force_min_cost_ksparse(
    g: &WeightedGraph,
    k: usize,
    max_size: usize,
    max_n: usize,
) -> Result<Option<(InterventionDesign, Weight)>> {
    let search = KSparseSearch::new(g, k, max_n)?;
    Ok(search.min_cost(max_size))
}

struct KSparseSearch<'a> {
    g: &'a WeightedGraph,
    edges: Vec<(usize, usize)>,
    /// Edge bitmask cut by each vertex-subset mask.
    cut_mask: Vec<u64>,
    candidates: Vec<u32>,
}

impl<'a> KSparseSearch<'a> {
    fn new(g: &'a WeightedGraph, k: usize, max_n: usize) -> Result<Self> {
        let n = g.n();
        if n > max_n || n > 16 {
            return Err(SolveError::BudgetExceeded {
                estimate: 1u128 << n.min(127),
                budget: 1u128 << max_n.min(127),
            });
        }
        if k == 0 {
            return Err(SolveError::InvalidParams("k must be at least 1".into()));
        }
        let edges = g.edges();
        if edges.len() > 60 {
            return Err(SolveError::BudgetExceeded {
                estimate: edges.len() as u128,
                budget: 60,
            });
        }
        let mut cut_mask = vec![0u64; 1usize << n];
        for (mask, slot) in cut_mask.iter_mut().enumerate() {
            let mut cm = 0u64;
            for (e, &(u, v)) in edges.iter().enumerate() {
                if ((mask >> u) & 1) != ((mask >> v) & 1) {
                    cm |= 1 << e;
                }
            }
            *slot = cm;
        }
        let candidates: Vec<u32> = (1..(1u32 << n))
            .filter(|mask| mask.count_ones() as usize <= k)
            .collect();
        Ok(KSparseSearch { g, edges, cut_mask, candidates })
    }

    fn full_edge_mask(&self) -> u64 {
        if self.edges.is_empty() {
            0
        } else {
            (1u64 << self.edges.len()) - 1
        }
    }

    /// Branches on subsets cutting the first uncovered edge. Any feasible
    /// family can be reordered so its first member cuts that edge, so the
    /// restriction loses no solutions.
    fn feasible_with(&self, size: usize) -> Option<Vec<Vec<usize>>> {
        let mut failed: std::collections::HashSet<(u64, usize)> = std::collections::HashSet::new();
        let mut chosen: Vec<u32> = Vec::new();
        if self.search_size(self.full_edge_mask(), size, &mut failed, &mut chosen) {
            Some(chosen.iter().map(|&mask| mask_to_set(mask)).collect())
        } else {
            None
        }
    }

    fn search_size(
        &self,
        uncovered: u64,
        slots: usize,
        failed: &mut std::collections::HashSet<(u64, usize)>,
        chosen: &mut Vec<u32>,
    ) -> bool {
        if uncovered == 0 {
            return true;
        }
        if slots == 0 || failed.contains(&(uncovered, slots)) {
            return false;
        }
        let first = uncovered.trailing_zeros() as usize;
        let (eu, ev) = self.edges[first];
        for &mask in &self.candidates {
            if ((mask >> eu) & 1) == ((mask >> ev) & 1) {
                continue;
            }
            let next = uncovered & !self.cut_mask[mask as usize];
            chosen.push(mask);
            if self.search_size(next, slots - 1, failed, chosen) {
                return true;
            }
            chosen.pop();
        }
        failed.insert((uncovered, slots));
        false
    }

    fn min_cost(&self, max_size: usize) -> Option<(InterventionDesign, Weight)> {
        let mut memo: HashMap<(u64, usize), Option<(Weight, Vec<u32>)>> = HashMap::new();
        let (cost, masks) = self.search_cost(self.full_edge_mask(), max_size, &mut memo)?;
        let design = InterventionDesign::new(masks.iter().map(|&m| mask_to_set(m)).collect());
        Some((design, cost))
    }

    fn search_cost(
        &self,
        uncovered: u64,
        slots: usize,
        memo: &mut HashMap<(u64, usize), Option<(Weight, Vec<u32>)>>,
    ) -> Option<(Weight, Vec<u32>)> {
        if uncovered == 0 {
            return Some((Weight::zero(), Vec::new()));
        }
        if slots == 0 {
            return None;
        }
        if let Some(hit) = memo.get(&(uncovered, slots)) {
            return hit.clone();
        }
        let first = uncovered.trailing_zeros() as usize;
        let (eu, ev) = self.edges[first];
        let mut best: Option<(Weight, Vec<u32>)> = None;
        for &mask in &self.candidates {
            if ((mask >> eu) & 1) == ((mask >> ev) & 1) {
                continue;
            }
            let set_cost: Weight = mask_to_set(mask).iter().map(|&v| self.g.weight(v)).sum();
            if let Some((bound, _)) = &best {
                if set_cost >= *bound {
                    continue;
                }
            }
            let next = uncovered & !self.cut_mask[mask as usize];
            if let Some((sub_cost, sub_masks)) = self.search_cost(next, slots - 1, memo) {
                let total = set_cost + &sub_cost;
                let better = match &best {
                    Some((bound, _)) => total < *bound,
                    None => true,
                };
                if better {
                    let mut masks = vec![mask];
                    masks.extend(sub_masks);
                    best = Some((total, masks));
                }
            }
        }
        memo.insert((uncovered, slots), best.clone());
        best
    }
}

fn mask_to_set(mask: u32) -> Vec<usize> {
    (0..32).filter(|&b| (mask >> b) & 1 == 1).collect()
}
