//! Simple undirected graphs in adjacency-list form, plus labeled multigraphs.
//!
//! Vertices are dense indices `0..n`. Human-readable provenance (like the
//! names a reduction assigns to its gadget vertices) lives in an optional
//! label table and never participates in algorithmic identity.

use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum GraphError {
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("vertex {vertex} out of range for graph on {n} vertices")]
    OutOfRange { vertex: usize, n: usize },
    #[error("duplicate edge label {0:?}")]
    DuplicateEdgeLabel(String),
    #[error("vertices {0} and {1} are identical")]
    EqualVertices(usize, usize),
}

/// Simple undirected graph. Neighbor lists are strictly increasing, free of
/// self-loops and duplicates, and symmetric.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    adj: Vec<Vec<usize>>,
    labels: Option<Vec<String>>,
}

impl Graph {
    /// Builds a graph from an edge list. Duplicate edges collapse silently;
    /// self-loops and out-of-range endpoints are rejected.
    pub fn new(n: usize, edges: &[(usize, usize)]) -> Result<Self, GraphError> {
        let mut adj = vec![Vec::new(); n];
        for &(u, v) in edges {
            if u >= n {
                return Err(GraphError::OutOfRange { vertex: u, n });
            }
            if v >= n {
                return Err(GraphError::OutOfRange { vertex: v, n });
            }
            if u == v {
                return Err(GraphError::SelfLoop(u));
            }
            adj[u].push(v);
            adj[v].push(u);
        }
        for list in &mut adj {
            list.sort_unstable();
            list.dedup();
        }
        Ok(Graph {
            n,
            adj,
            labels: None,
        })
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Self {
        assert_eq!(labels.len(), self.n);
        self.labels = Some(labels);
        self
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.adj.iter().map(Vec::len).sum::<usize>() / 2
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].binary_search(&v).is_ok()
    }

    pub fn label(&self, v: usize) -> Option<&str> {
        self.labels.as_ref().map(|l| l[v].as_str())
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    /// All edges as `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.m());
        for u in 0..self.n {
            for &v in &self.adj[u] {
                if u < v {
                    out.push((u, v));
                }
            }
        }
        out
    }

    pub fn vertices(&self) -> impl Iterator<Item = usize> {
        0..self.n
    }

    pub fn has_isolated_vertex(&self) -> bool {
        self.adj.iter().any(Vec::is_empty)
    }

    /// Connected components as sorted vertex sets, ordered by smallest member.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.n];
        let mut out = Vec::new();
        let mut stack = Vec::new();
        for start in 0..self.n {
            if seen[start] {
                continue;
            }
            seen[start] = true;
            stack.push(start);
            let mut comp = Vec::new();
            while let Some(u) = stack.pop() {
                comp.push(u);
                for &v in &self.adj[u] {
                    if !seen[v] {
                        seen[v] = true;
                        stack.push(v);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.components().len() <= 1
    }

    /// Subgraph induced by `set`, together with the map from new indices back
    /// to vertices of `self`. Labels are carried over.
    pub fn induced_subgraph(&self, set: &[usize]) -> Result<(Graph, Vec<usize>), GraphError> {
        let mut members: Vec<usize> = set.to_vec();
        members.sort_unstable();
        members.dedup();
        for &v in &members {
            if v >= self.n {
                return Err(GraphError::OutOfRange { vertex: v, n: self.n });
            }
        }
        let mut pos = vec![usize::MAX; self.n];
        for (i, &v) in members.iter().enumerate() {
            pos[v] = i;
        }
        let mut edges = Vec::new();
        for &u in &members {
            for &v in &self.adj[u] {
                if u < v && pos[v] != usize::MAX {
                    edges.push((pos[u], pos[v]));
                }
            }
        }
        let mut g = Graph::new(members.len(), &edges)?;
        if let Some(labels) = &self.labels {
            g = g.with_labels(members.iter().map(|&v| labels[v].clone()).collect());
        }
        Ok((g, members))
    }

    /// `N(u) ∩ N(v)` by merging the two sorted neighbor lists.
    pub fn common_neighbors(&self, u: usize, v: usize) -> Result<Vec<usize>, GraphError> {
        if u == v {
            return Err(GraphError::EqualVertices(u, v));
        }
        if u >= self.n {
            return Err(GraphError::OutOfRange { vertex: u, n: self.n });
        }
        if v >= self.n {
            return Err(GraphError::OutOfRange { vertex: v, n: self.n });
        }
        let (a, b) = (&self.adj[u], &self.adj[v]);
        let mut out = Vec::new();
        let (mut i, mut j) = (0, 0);
        while i < a.len() && j < b.len() {
            match a[i].cmp(&b[j]) {
                std::cmp::Ordering::Less => i += 1,
                std::cmp::Ordering::Greater => j += 1,
                std::cmp::Ordering::Equal => {
                    out.push(a[i]);
                    i += 1;
                    j += 1;
                }
            }
        }
        Ok(out)
    }

    /// Union of neighborhoods of the vertices in `set`.
    pub fn neighborhood_of_set(&self, set: &[usize]) -> Vec<usize> {
        let mut seen = vec![false; self.n];
        for &u in set {
            for &v in &self.adj[u] {
                seen[v] = true;
            }
        }
        (0..self.n).filter(|&v| seen[v]).collect()
    }
}

/// Undirected multigraph with labeled edges; parallel edges are permitted,
/// self-loops are not. Edge labels must be pairwise distinct.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Multigraph {
    n: usize,
    edges: Vec<(usize, usize, String)>,
    labels: Option<Vec<String>>,
}

impl Multigraph {
    pub fn new(n: usize, edges: Vec<(usize, usize, String)>) -> Result<Self, GraphError> {
        let mut seen = std::collections::HashSet::new();
        for (u, v, label) in &edges {
            if *u >= n {
                return Err(GraphError::OutOfRange { vertex: *u, n });
            }
            if *v >= n {
                return Err(GraphError::OutOfRange { vertex: *v, n });
            }
            if u == v {
                return Err(GraphError::SelfLoop(*u));
            }
            if !seen.insert(label.clone()) {
                return Err(GraphError::DuplicateEdgeLabel(label.clone()));
            }
        }
        Ok(Multigraph {
            n,
            edges,
            labels: None,
        })
    }

    pub fn with_vertex_labels(mut self, labels: Vec<String>) -> Self {
        assert_eq!(labels.len(), self.n);
        self.labels = Some(labels);
        self
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edges(&self) -> &[(usize, usize, String)] {
        &self.edges
    }

    pub fn vertex_label(&self, v: usize) -> Option<&str> {
        self.labels.as_ref().map(|l| l[v].as_str())
    }

    pub fn vertex_labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    /// Endpoints of the edge carrying `label`, if present.
    pub fn endpoints(&self, label: &str) -> Option<(usize, usize)> {
        self.edges
            .iter()
            .find(|(_, _, l)| l == label)
            .map(|&(u, v, _)| (u, v))
    }
}

/// Clique / independent-set bipartition of a split graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SplitPartition {
    pub clique: Vec<usize>,
    pub independent: Vec<usize>,
}

impl SplitPartition {
    /// Checks the defining properties against `g`: the two sides partition
    /// the vertex set, the clique side is pairwise adjacent, the independent
    /// side pairwise non-adjacent.
    pub fn is_valid(&self, g: &Graph) -> bool {
        let mut side = vec![0u8; g.n()];
        for &v in &self.clique {
            if v >= g.n() || side[v] != 0 {
                return false;
            }
            side[v] = 1;
        }
        for &v in &self.independent {
            if v >= g.n() || side[v] != 0 {
                return false;
            }
            side[v] = 2;
        }
        if side.contains(&0) {
            return false;
        }
        for (i, &u) in self.clique.iter().enumerate() {
            for &v in &self.clique[i + 1..] {
                if !g.has_edge(u, v) {
                    return false;
                }
            }
        }
        for (i, &u) in self.independent.iter().enumerate() {
            for &v in &self.independent[i + 1..] {
                if g.has_edge(u, v) {
                    return false;
                }
            }
        }
        true
    }
}

/// Sorts and checks a caller-supplied vertex set against a host graph:
/// out-of-range members and duplicates are errors.
pub fn checked_vertex_set(g: &Graph, set: &[usize]) -> Result<Vec<usize>, GraphError> {
    let mut s = set.to_vec();
    s.sort_unstable();
    for w in s.windows(2) {
        if w[0] == w[1] {
            return Err(GraphError::EqualVertices(w[0], w[1]));
        }
    }
    if let Some(&max) = s.last() {
        if max >= g.n() {
            return Err(GraphError::OutOfRange {
                vertex: max,
                n: g.n(),
            });
        }
    }
    Ok(s)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn build_path_and_cycle() {
        let p3 = Graph::new(3, &[(0, 1), (1, 2)]).unwrap();
        assert_eq!(
            (0..3).map(|v| p3.degree(v)).collect::<Vec<_>>(),
            vec![1, 2, 1]
        );
        let c4 = Graph::new(4, &[(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap();
        assert!(c4.vertices().all(|v| c4.degree(v) == 2));
    }

    #[test]
    fn rejects_self_loop_and_range() {
        assert_eq!(
            Graph::new(5, &[(0, 0)]).unwrap_err(),
            GraphError::SelfLoop(0)
        );
        assert!(matches!(
            Graph::new(2, &[(0, 5)]).unwrap_err(),
            GraphError::OutOfRange { .. }
        ));
    }

    #[test]
    fn duplicate_edges_collapse() {
        let g = Graph::new(2, &[(0, 1), (1, 0), (0, 1)]).unwrap();
        assert_eq!(g.m(), 1);
    }

    #[test]
    fn components_partition() {
        let g = Graph::new(4, &[(0, 1), (2, 3)]).unwrap();
        assert_eq!(g.components(), vec![vec![0, 1], vec![2, 3]]);
        let c5 = Graph::new(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)]).unwrap();
        assert_eq!(c5.components().len(), 1);
        let e3 = Graph::new(3, &[]).unwrap();
        assert_eq!(e3.components(), vec![vec![0], vec![1], vec![2]]);
    }

    #[test]
    fn induced_subgraphs() {
        let c5 = Graph::new(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)]).unwrap();
        let (p3, map) = c5.induced_subgraph(&[0, 1, 2]).unwrap();
        assert_eq!(p3.m(), 2);
        assert_eq!(map, vec![0, 1, 2]);
        let (e2, _) = c5.induced_subgraph(&[0, 2]).unwrap();
        assert_eq!(e2.m(), 0);
        let k4 = Graph::new(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap();
        let (k3, _) = k4.induced_subgraph(&[0, 1, 2]).unwrap();
        assert_eq!(k3.m(), 3);
        // identity map reproduces the graph
        let all: Vec<usize> = c5.vertices().collect();
        let (same, map) = c5.induced_subgraph(&all).unwrap();
        assert_eq!(same, c5);
        assert_eq!(map, all);
    }

    #[test]
    fn common_neighbor_queries() {
        let c4 = Graph::new(4, &[(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap();
        assert_eq!(c4.common_neighbors(0, 2).unwrap(), vec![1, 3]);
        let p3 = Graph::new(3, &[(0, 1), (1, 2)]).unwrap();
        assert_eq!(p3.common_neighbors(0, 2).unwrap(), vec![1]);
        let two_k2 = Graph::new(4, &[(0, 1), (2, 3)]).unwrap();
        assert!(two_k2.common_neighbors(0, 2).unwrap().is_empty());
        assert!(p3.common_neighbors(1, 1).is_err());
    }

    #[test]
    fn multigraph_rules() {
        let mg = Multigraph::new(
            2,
            vec![
                (0, 1, "a".to_string()),
                (0, 1, "b".to_string()),
            ],
        )
        .unwrap();
        assert_eq!(mg.edges().len(), 2);
        assert!(Multigraph::new(2, vec![(0, 0, "a".into())]).is_err());
        assert!(
            Multigraph::new(2, vec![(0, 1, "a".into()), (1, 0, "a".into())]).is_err()
        );
    }

    #[test]
    fn empty_graph_is_legal() {
        let g = Graph::new(0, &[]).unwrap();
        assert_eq!(g.components().len(), 0);
        assert_eq!(g.m(), 0);
    }
}
