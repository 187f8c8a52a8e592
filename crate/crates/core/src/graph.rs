//! Undirected vertex-weighted graphs on ids `0..n`.

use crate::error::{Result, SolveError};
use crate::weight::Weight;

/// An undirected graph with per-vertex extended non-negative weights.
///
/// Values are immutable after construction and safe to share across threads.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeightedGraph {
    n: usize,
    adj: Vec<Vec<usize>>,
    weights: Vec<Weight>,
}

impl WeightedGraph {
    /// Builds a graph, rejecting self-loops, duplicate edges, out-of-range
    /// ids, and weight lists of the wrong length.
    pub fn new(n: usize, edges: &[(usize, usize)], weights: Vec<Weight>) -> Result<Self> {
        if weights.len() != n {
            return Err(SolveError::InvalidParams(format!(
                "expected {n} weights, got {}",
                weights.len()
            )));
        }
        let mut adj = vec![Vec::new(); n];
        for &(u, v) in edges {
            if u >= n {
                return Err(SolveError::UnknownVertex { id: u, n });
            }
            if v >= n {
                return Err(SolveError::UnknownVertex { id: v, n });
            }
            if u == v {
                return Err(SolveError::InvalidParams(format!("self-loop at vertex {u}")));
            }
            adj[u].push(v);
            adj[v].push(u);
        }
        for (v, list) in adj.iter_mut().enumerate() {
            list.sort_unstable();
            if list.windows(2).any(|w| w[0] == w[1]) {
                return Err(SolveError::InvalidParams(format!(
                    "duplicate edge at vertex {v}"
                )));
            }
        }
        Ok(WeightedGraph { n, adj, weights })
    }

    pub fn unit_weights(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        Self::new(n, edges, vec![Weight::from_u64(1); n])
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(Vec::len).sum::<usize>() / 2
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).max().unwrap_or(0)
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].binary_search(&v).is_ok()
    }

    pub fn weight(&self, v: usize) -> &Weight {
        &self.weights[v]
    }

    pub fn weights(&self) -> &[Weight] {
        &self.weights
    }

    /// Edges as `(u, v)` pairs with `u < v`, sorted.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for u in 0..self.n {
            for &v in &self.adj[u] {
                if u < v {
                    out.push((u, v));
                }
            }
        }
        out
    }

    /// Same structure with different weights.
    pub fn with_weights(&self, weights: Vec<Weight>) -> Result<Self> {
        if weights.len() != self.n {
            return Err(SolveError::InvalidParams(format!(
                "expected {} weights, got {}",
                self.n,
                weights.len()
            )));
        }
        Ok(WeightedGraph {
            n: self.n,
            adj: self.adj.clone(),
            weights,
        })
    }

    /// Subgraph induced by `verts`, which must be strictly increasing.
    /// New vertex `i` corresponds to `verts[i]`; weights are restricted.
    pub fn induced_subgraph(&self, verts: &[usize]) -> Result<WeightedGraph> {
        let mut index = vec![usize::MAX; self.n];
        let mut prev: Option<usize> = None;
        for (i, &v) in verts.iter().enumerate() {
            if v >= self.n {
                return Err(SolveError::UnknownVertex { id: v, n: self.n });
            }
            if prev.is_some_and(|p| p >= v) {
                return Err(SolveError::InvalidParams(
                    "vertex subset must be strictly increasing".into(),
                ));
            }
            prev = Some(v);
            index[v] = i;
        }
        let mut adj = vec![Vec::new(); verts.len()];
        for (i, &v) in verts.iter().enumerate() {
            for &u in &self.adj[v] {
                if index[u] != usize::MAX {
                    adj[i].push(index[u]);
                }
            }
            debug_assert!(adj[i].windows(2).all(|w| w[0] < w[1]));
        }
        Ok(WeightedGraph {
            n: verts.len(),
            adj,
            weights: verts.iter().map(|&v| self.weights[v].clone()).collect(),
        })
    }

    pub fn is_connected(&self) -> bool {
        if self.n <= 1 {
            return true;
        }
        let mut seen = vec![false; self.n];
        let mut stack = vec![0usize];
        seen[0] = true;
        let mut count = 1;
        while let Some(v) = stack.pop() {
            for &u in &self.adj[v] {
                if !seen[u] {
                    seen[u] = true;
                    count += 1;
                    stack.push(u);
                }
            }
        }
        count == self.n
    }

    /// Total weight of all vertices; `inf` if any vertex is infinite.
    pub fn total_weight(&self) -> Weight {
        self.weights.iter().sum()
    }

    /// First adjacent pair of infinite-weight vertices, if any.
    pub fn adjacent_infinite_pair(&self) -> Option<(usize, usize)> {
        for (u, v) in self.edges() {
            if self.weights[u].is_infinite() && self.weights[v].is_infinite() {
                return Some((u, v));
            }
        }
        None
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_self_loops_and_duplicates() {
        assert!(WeightedGraph::unit_weights(2, &[(0, 0)]).is_err());
        assert!(WeightedGraph::unit_weights(2, &[(0, 1), (1, 0)]).is_err());
        assert!(WeightedGraph::unit_weights(2, &[(0, 2)]).is_err());
    }

    #[test]
    fn induced_subgraph_cases() {
        let g = WeightedGraph::unit_weights(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)])
            .unwrap();
        // K4 minus one vertex is K3.
        let h = g.induced_subgraph(&[0, 1, 2]).unwrap();
        assert_eq!(h.n(), 3);
        assert_eq!(h.edge_count(), 3);
        // Whole vertex set gives the graph back.
        let whole = g.induced_subgraph(&[0, 1, 2, 3]).unwrap();
        assert_eq!(whole, g);
        // Empty subset gives the empty graph.
        let empty = g.induced_subgraph(&[]).unwrap();
        assert_eq!(empty.n(), 0);
        assert_eq!(empty.edge_count(), 0);
        // Unknown id is rejected.
        assert!(matches!(
            g.induced_subgraph(&[0, 7]),
            Err(SolveError::UnknownVertex { id: 7, .. })
        ));
    }

    #[test]
    fn connectivity() {
        let g = WeightedGraph::unit_weights(3, &[(0, 1)]).unwrap();
        assert!(!g.is_connected());
        let h = WeightedGraph::unit_weights(3, &[(0, 1), (1, 2)]).unwrap();
        assert!(h.is_connected());
        assert!(WeightedGraph::unit_weights(0, &[]).unwrap().is_connected());
    }
}
