//! Brute-force oracles for the integration suites. Everything here
//! enumerates exhaustively and stays independent of the library's solver
//! paths.

#![allow(dead_code)]

use sepsys::weight::Weight;
use sepsys::WeightedGraph;

/// Chordal iff no induced cycle of length >= 4: check every vertex subset
/// for inducing a cycle (all degrees 2 and connected). Usable to n ~ 16.
pub fn brute_is_chordal(g: &WeightedGraph) -> bool {
    let n = g.n();
    assert!(n <= 16);
    for mask in 0u32..(1 << n) {
        if (mask.count_ones() as usize) < 4 {
            continue;
        }
        let verts: Vec<usize> = (0..n).filter(|&v| mask >> v & 1 == 1).collect();
        let degs: Vec<usize> = verts
            .iter()
            .map(|&v| verts.iter().filter(|&&u| u != v && g.has_edge(u, v)).count())
            .collect();
        if !degs.iter().all(|&d| d == 2) {
            continue;
        }
        let mut seen = vec![false; verts.len()];
        let mut stack = vec![0usize];
        seen[0] = true;
        let mut count = 1;
        while let Some(i) = stack.pop() {
            for (j, &u) in verts.iter().enumerate() {
                if !seen[j] && g.has_edge(verts[i], u) {
                    seen[j] = true;
                    count += 1;
                    stack.push(j);
                }
            }
        }
        if count == verts.len() {
            return false;
        }
    }
    true
}

fn can_color(g: &WeightedGraph, k: usize, colors: &mut Vec<usize>, v: usize) -> bool {
    if v == g.n() {
        return true;
    }
    let max_used = colors[..v].iter().copied().max().map_or(0, |m| m + 1);
    for c in 0..k.min(max_used + 1) {
        if g.neighbors(v).iter().any(|&u| u < v && colors[u] == c) {
            continue;
        }
        colors[v] = c;
        if can_color(g, k, colors, v + 1) {
            return true;
        }
    }
    false
}

/// Smallest k admitting a proper k-coloring, by exhaustive search.
pub fn brute_chromatic_number(g: &WeightedGraph) -> usize {
    if g.n() == 0 {
        return 0;
    }
    for k in 1..=g.n() {
        let mut colors = vec![usize::MAX; g.n()];
        if can_color(g, k, &mut colors, 0) {
            return k;
        }
    }
    unreachable!("n colors always suffice")
}

/// Per-vertex values for the independent-set oracle; `None` means
/// infinite.
pub fn oracle_values(g: &WeightedGraph, scale: u64) -> Vec<Option<u128>> {
    g.weights()
        .iter()
        .map(|w| match w {
            Weight::Infinite => None,
            Weight::Finite(r) => {
                let scaled = r * num_rational::BigRational::from_integer(scale.into());
                assert!(scaled.is_integer(), "oracle weights must scale to integers");
                Some(u128::try_from(scaled.to_integer()).expect("non-negative"))
            }
        })
        .collect()
}

/// Exhaustive maximum-weight independent set maximizing the same
/// preference chain as the library: infinite-member count, then finite
/// weight, then inclusion of smaller vertex ids. Returns the set sorted.
pub fn brute_mwis(g: &WeightedGraph, values: &[Option<u128>]) -> Vec<usize> {
    let n = g.n();
    assert!(n <= 20);
    let adj: Vec<u32> = (0..n)
        .map(|v| g.neighbors(v).iter().fold(0u32, |m, &u| m | 1 << u))
        .collect();
    let mut independent = vec![false; 1 << n];
    independent[0] = true;
    let mut best: Option<(usize, u128, u64, u32)> = None;
    for mask in 0u32..(1 << n) {
        if mask != 0 {
            let low = mask.trailing_zeros() as usize;
            let rest = mask & (mask - 1);
            independent[mask as usize] = independent[rest as usize] && (adj[low] & rest) == 0;
        }
        if !independent[mask as usize] {
            continue;
        }
        let mut inf = 0usize;
        let mut finite: u128 = 0;
        let mut pref: u64 = 0;
        for v in 0..n {
            if mask >> v & 1 == 1 {
                match values[v] {
                    None => inf += 1,
                    Some(w) => finite += w,
                }
                pref |= 1 << (n - 1 - v);
            }
        }
        let cand = (inf, finite, pref, mask);
        if best.is_none_or(|b| (cand.0, cand.1, cand.2) > (b.0, b.1, b.2)) {
            best = Some(cand);
        }
    }
    let mask = best.expect("empty set is independent").3;
    (0..n).filter(|&v| mask >> v & 1 == 1).collect()
}

/// All maximal cliques, by subset enumeration. Usable to n ~ 12.
pub fn brute_maximal_cliques(g: &WeightedGraph) -> Vec<Vec<usize>> {
    let n = g.n();
    assert!(n <= 12);
    let mut out = Vec::new();
    for mask in 1u32..(1 << n) {
        let verts: Vec<usize> = (0..n).filter(|&v| mask >> v & 1 == 1).collect();
        let is_clique = verts
            .iter()
            .enumerate()
            .all(|(i, &u)| verts[i + 1..].iter().all(|&v| g.has_edge(u, v)));
        if !is_clique {
            continue;
        }
        let extendable =
            (0..n).any(|x| mask >> x & 1 == 0 && verts.iter().all(|&v| g.has_edge(x, v)));
        if !extendable {
            out.push(verts);
        }
    }
    out.sort();
    out
}

/// Running-intersection property: for each vertex, the bags containing it
/// induce a connected subtree.
pub fn check_running_intersection(g: &WeightedGraph, tree: &sepsys::CliqueTree) -> bool {
    let bag_count = tree.bags.len();
    let mut adj = vec![Vec::new(); bag_count];
    for &(a, b) in &tree.edges {
        adj[a].push(b);
        adj[b].push(a);
    }
    for v in 0..g.n() {
        let holders: Vec<usize> =
            (0..bag_count).filter(|&b| tree.bags[b].binary_search(&v).is_ok()).collect();
        if holders.is_empty() {
            return false;
        }
        let mut seen = vec![false; bag_count];
        let mut stack = vec![holders[0]];
        seen[holders[0]] = true;
        let mut reached = 1;
        while let Some(b) = stack.pop() {
            for &c in &adj[b] {
                if !seen[c] && tree.bags[c].binary_search(&v).is_ok() {
                    seen[c] = true;
                    reached += 1;
                    stack.push(c);
                }
            }
        }
        if reached != holders.len() {
            return false;
        }
    }
    true
}

/// Arbitrary (not necessarily chordal) graph from an edge bitmask seed.
pub fn arbitrary_graph(n: usize, edge_bits: u64) -> WeightedGraph {
    let mut edges = Vec::new();
    let mut bit = 0;
    for u in 0..n {
        for v in u + 1..n {
            if edge_bits >> (bit % 64) & 1 == 1 {
                edges.push((u, v));
            }
            bit += 1;
        }
    }
    WeightedGraph::unit_weights(n, &edges).unwrap()
}

/// Deterministic integer weights for oracle-checked instances.
pub fn integer_weights(n: usize, seed: u64, max: u64) -> Vec<Weight> {
    // splitmix64 stream
    let mut state = seed.wrapping_add(0x9E37_79B9_7F4A_7C15);
    let mut next = move || {
        state = state.wrapping_add(0x9E37_79B9_7F4A_7C15);
        let mut z = state;
        z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
        z ^ (z >> 31)
    };
    (0..n).map(|_| Weight::from_u64(next() % (max + 1))).collect()
}
