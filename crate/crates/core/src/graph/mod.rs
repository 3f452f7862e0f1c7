//! Finite simple graphs on dense `0..n` vertex indices.

mod io;
mod partition;
mod vectors;

use std::collections::VecDeque;

pub use io::{GraphJson, VectorSetJson};
pub use partition::{is_coclique_transversal, is_transversal, verify_clique_partition, CliquePartition};
pub use vectors::{dot, orthogonality_graph, InnerProduct, VectorSet};

use crate::bitset::VertexSet;
use crate::error::{Error, Result};

/// Simple undirected graph with one adjacency bitset per vertex.
///
/// Labels are display metadata only: equality and every algorithm ignore them.
#[derive(Clone, Debug)]
pub struct Graph {
    adj: Vec<VertexSet>,
    labels: Option<Vec<String>>,
}

impl PartialEq for Graph {
    fn eq(&self, other: &Self) -> bool {
        self.adj == other.adj
    }
}

impl Eq for Graph {}

impl Graph {
    pub fn empty(n: usize) -> Self {
        Self {
            adj: vec![VertexSet::new(n); n],
            labels: None,
        }
    }

    /// Builds a graph from an edge list; duplicate and reversed pairs collapse.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = Self::empty(n);
        for &(u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    pub fn complete(n: usize) -> Self {
        let mut g = Self::empty(n);
        for u in 0..n {
            for v in u + 1..n {
                g.link(u, v);
            }
        }
        g
    }

    pub fn cycle(n: usize) -> Self {
        let mut g = Self::empty(n);
        for u in 0..n {
            let v = (u + 1) % n;
            if u != v {
                g.link(u, v);
            }
        }
        g
    }

    pub fn path(n: usize) -> Self {
        let mut g = Self::empty(n);
        for u in 1..n {
            g.link(u - 1, u);
        }
        g
    }

    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<()> {
        let n = self.n();
        for x in [u, v] {
            if x >= n {
                return Err(Error::VertexOutOfRange { index: x, n });
            }
        }
        if u == v {
            return Err(Error::LoopEdge(u));
        }
        self.link(u, v);
        Ok(())
    }

    #[inline]
    pub(crate) fn link(&mut self, u: usize, v: usize) {
        self.adj[u].insert(v);
        self.adj[v].insert(u);
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Result<Self> {
        if labels.len() != self.n() {
            return Err(Error::Parse(format!(
                "{} labels for {} vertices",
                labels.len(),
                self.n()
            )));
        }
        self.labels = Some(labels);
        Ok(self)
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    pub fn label(&self, v: usize) -> String {
        match &self.labels {
            Some(l) => l[v].clone(),
            None => v.to_string(),
        }
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.adj.len()
    }

    #[inline]
    pub fn neighbors(&self, v: usize) -> &VertexSet {
        &self.adj[v]
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].contains(v)
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn degrees(&self) -> Vec<usize> {
        (0..self.n()).map(|v| self.degree(v)).collect()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(VertexSet::len).sum::<usize>() / 2
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for u in 0..self.n() {
            out.extend(self.adj[u].iter().filter(|&v| v > u).map(|v| (u, v)));
        }
        out
    }

    /// Common degree if the graph is regular.
    pub fn regular_degree(&self) -> Option<usize> {
        let d = self.degrees();
        match d.first() {
            Some(&k) if d.iter().all(|&x| x == k) => Some(k),
            None => Some(0),
            _ => None,
        }
    }

    pub fn all_vertices(&self) -> VertexSet {
        VertexSet::full(self.n())
    }

    pub fn complement(&self) -> Graph {
        let n = self.n();
        let adj = (0..n)
            .map(|v| {
                let mut s = VertexSet::full(n);
                s.difference_with(&self.adj[v]);
                s.remove(v);
                s
            })
            .collect();
        Graph {
            adj,
            labels: self.labels.clone(),
        }
    }

    /// Adds an apex vertex (index `n`) adjacent to every original vertex.
    pub fn cone(&self) -> Graph {
        let n = self.n();
        let mut g = Graph::empty(n + 1);
        for (u, v) in self.edges() {
            g.link(u, v);
        }
        for v in 0..n {
            g.link(v, n);
        }
        if let Some(l) = &self.labels {
            let mut l = l.clone();
            l.push("apex".into());
            g.labels = Some(l);
        }
        g
    }

    /// Subgraph induced by `keep`, reindexed in ascending original order.
    pub fn induced_subgraph(&self, keep: &[usize]) -> Result<Graph> {
        let n = self.n();
        let mut order: Vec<usize> = keep.to_vec();
        order.sort_unstable();
        order.dedup();
        if let Some(&bad) = order.iter().find(|&&v| v >= n) {
            return Err(Error::VertexOutOfRange { index: bad, n });
        }
        let mut g = Graph::empty(order.len());
        for (i, &u) in order.iter().enumerate() {
            for (j, &v) in order.iter().enumerate().skip(i + 1) {
                if self.has_edge(u, v) {
                    g.link(i, j);
                }
            }
        }
        if let Some(l) = &self.labels {
            g.labels = Some(order.iter().map(|&v| l[v].clone()).collect());
        }
        Ok(g)
    }

    /// Image of the graph under the vertex map `v -> map[v]`.
    pub fn relabel(&self, map: &[usize]) -> Result<Graph> {
        check_bijection(map, self.n())?;
        let mut g = Graph::empty(self.n());
        for (u, v) in self.edges() {
            g.link(map[u], map[v]);
        }
        Ok(g)
    }

    pub fn components(&self) -> Vec<Vec<usize>> {
        let n = self.n();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for s in 0..n {
            if seen[s] {
                continue;
            }
            seen[s] = true;
            let mut comp = vec![s];
            let mut queue = VecDeque::from([s]);
            while let Some(u) = queue.pop_front() {
                for v in self.adj[u].iter() {
                    if !seen[v] {
                        seen[v] = true;
                        comp.push(v);
                        queue.push_back(v);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    /// The empty graph counts as connected.
    pub fn is_connected(&self) -> bool {
        self.components().len() <= 1
    }

    /// Vertices of the connected component containing `v`.
    pub fn component_of(&self, v: usize) -> Result<Vec<usize>> {
        if v >= self.n() {
            return Err(Error::VertexOutOfRange { index: v, n: self.n() });
        }
        Ok(self
            .components()
            .into_iter()
            .find(|c| c.binary_search(&v).is_ok())
            .unwrap_or_default())
    }

    pub fn is_clique(&self, set: &[usize]) -> bool {
        set.iter()
            .enumerate()
            .all(|(i, &u)| set[i + 1..].iter().all(|&v| u != v && self.has_edge(u, v)))
    }

    pub fn is_coclique(&self, set: &[usize]) -> bool {
        self.first_edge_within(set).is_none()
    }

    /// Some edge with both ends in `set`, if any.
    pub fn first_edge_within(&self, set: &[usize]) -> Option<(usize, usize)> {
        for (i, &u) in set.iter().enumerate() {
            for &v in &set[i + 1..] {
                if u < self.n() && v < self.n() && self.has_edge(u, v) {
                    return Some((u, v));
                }
            }
        }
        None
    }

    pub fn adjacency_matrix(&self) -> Vec<Vec<i64>> {
        (0..self.n())
            .map(|u| (0..self.n()).map(|v| self.has_edge(u, v) as i64).collect())
            .collect()
    }
}

pub(crate) fn check_bijection(map: &[usize], n: usize) -> Result<()> {
    if map.len() != n {
        return Err(Error::NotBijection(n));
    }
    let mut seen = vec![false; n];
    for &x in map {
        if x >= n || std::mem::replace(&mut seen[x], true) {
            return Err(Error::NotBijection(n));
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn path_from_edges() {
        let g = Graph::from_edges(3, &[(0, 1), (1, 2)]).unwrap();
        assert_eq!(g.degrees(), vec![1, 2, 1]);
    }

    #[test]
    fn complete_from_all_pairs() {
        let pairs: Vec<_> = (0..4).flat_map(|u| (u + 1..4).map(move |v| (u, v))).collect();
        let g = Graph::from_edges(4, &pairs).unwrap();
        assert_eq!(g.regular_degree(), Some(3));
        assert_eq!(g, Graph::complete(4));
    }

    #[test]
    fn duplicate_edges_collapse() {
        let g = Graph::from_edges(2, &[(0, 1), (1, 0)]).unwrap();
        assert_eq!(g.edge_count(), 1);
    }

    #[test]
    fn rejects_bad_edges() {
        assert_eq!(
            Graph::from_edges(2, &[(0, 2)]),
            Err(Error::VertexOutOfRange { index: 2, n: 2 })
        );
        assert_eq!(Graph::from_edges(2, &[(1, 1)]), Err(Error::LoopEdge(1)));
    }

    #[test]
    fn cone_examples() {
        assert_eq!(Graph::empty(1).cone(), Graph::complete(2));
        assert_eq!(Graph::complete(3).cone(), Graph::complete(4));
        let c = Graph::cycle(5).cone();
        assert_eq!(c.n(), 6);
        assert_eq!(c.edge_count(), 5 + 5);
    }

    #[test]
    fn connectivity() {
        assert!(Graph::path(3).is_connected());
        let two_edges = Graph::from_edges(4, &[(0, 1), (2, 3)]).unwrap();
        assert!(!two_edges.is_connected());
        assert_eq!(two_edges.components(), vec![vec![0, 1], vec![2, 3]]);
        assert_eq!(two_edges.component_of(3).unwrap(), vec![2, 3]);
    }

    #[test]
    fn induced_examples() {
        let k4 = Graph::complete(4);
        assert_eq!(k4.induced_subgraph(&[3, 0, 2]).unwrap(), Graph::complete(3));
        assert_eq!(k4.induced_subgraph(&[0, 1, 2, 3]).unwrap(), k4);
        assert!(k4.induced_subgraph(&[4]).is_err());
    }

    #[test]
    fn relabel_rejects_non_bijection() {
        assert_eq!(Graph::path(3).relabel(&[0, 0, 1]), Err(Error::NotBijection(3)));
    }

    fn arb_graph(max_n: usize) -> impl Strategy<Value = Graph> {
        (1..=max_n).prop_flat_map(|n| {
            prop::collection::vec(any::<bool>(), n * (n - 1) / 2).prop_map(move |bits| {
                let mut g = Graph::empty(n);
                let mut k = 0;
                for u in 0..n {
                    for v in u + 1..n {
                        if bits[k] {
                            g.link(u, v);
                        }
                        k += 1;
                    }
                }
                g
            })
        })
    }

    proptest! {
        #[test]
        fn edges_round_trip(g in arb_graph(12)) {
            let h = Graph::from_edges(g.n(), &g.edges()).unwrap();
            prop_assert_eq!(&h, &g);
            for v in 0..g.n() {
                prop_assert!(!g.has_edge(v, v));
                for u in g.neighbors(v).iter() {
                    prop_assert!(g.has_edge(u, v));
                }
            }
        }

        #[test]
        fn induced_matches_restriction(g in arb_graph(12), mask in any::<u16>()) {
            let keep: Vec<usize> = (0..g.n()).filter(|&v| mask >> v & 1 == 1).collect();
            let h = g.induced_subgraph(&keep).unwrap();
            for (i, &u) in keep.iter().enumerate() {
                for (j, &v) in keep.iter().enumerate() {
                    prop_assert_eq!(h.has_edge(i, j), g.has_edge(u, v));
                }
            }
        }
    }
}
