//! Immutable simple graphs over at most 64 vertices, plus the primitive set
//! operations everything else is built from: open and closed neighborhoods,
//! the difference `d(X) = |X| - |N(X)|`, induced subgraphs and the bipartite
//! double cover.

use std::fmt;

use crate::error::{Error, Result};
use crate::set::{VertexSet, MAX_VERTICES};

/// A finite simple undirected graph on vertices `0..n`.
///
/// Adjacency is symmetric and irreflexive; every neighbor bit is below `n`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    adj: Vec<VertexSet>,
    labels: Option<Vec<String>>,
}

impl Graph {
    /// The graph on `n` vertices with no edges.
    pub fn empty(n: usize) -> Result<Self> {
        if n > MAX_VERTICES {
            return Err(Error::UnsupportedSize(n, MAX_VERTICES));
        }
        Ok(Graph {
            n,
            adj: vec![VertexSet::EMPTY; n],
            labels: None,
        })
    }

    /// Builds a graph from an edge list. Duplicate pairs collapse.
    pub fn from_edge_list(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = Graph::empty(n)?;
        for &(u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    /// Builds a graph from raw adjacency masks, checking every invariant.
    pub fn from_adjacency(adj: Vec<VertexSet>) -> Result<Self> {
        let n = adj.len();
        if n > MAX_VERTICES {
            return Err(Error::UnsupportedSize(n, MAX_VERTICES));
        }
        let full = VertexSet::full(n);
        for (v, &nb) in adj.iter().enumerate() {
            if nb.contains(v) {
                return Err(Error::SelfLoop(v));
            }
            if !nb.is_subset(full) {
                let bad = (nb - full).first().unwrap_or(n);
                return Err(Error::VertexOutOfRange { vertex: bad, n });
            }
            for u in nb {
                if !adj[u].contains(v) {
                    return Err(Error::Precondition(format!(
                        "adjacency is not symmetric at ({v},{u})"
                    )));
                }
            }
        }
        Ok(Graph {
            n,
            adj,
            labels: None,
        })
    }

    fn add_edge(&mut self, u: usize, v: usize) -> Result<()> {
        for w in [u, v] {
            if w >= self.n {
                return Err(Error::VertexOutOfRange { vertex: w, n: self.n });
            }
        }
        if u == v {
            return Err(Error::SelfLoop(u));
        }
        self.adj[u].insert(v);
        self.adj[v].insert(u);
        Ok(())
    }

    /// Attaches display names, one per vertex.
    pub fn with_labels<S: Into<String>>(mut self, labels: impl IntoIterator<Item = S>) -> Result<Self> {
        let labels: Vec<String> = labels.into_iter().map(Into::into).collect();
        if labels.len() != self.n {
            return Err(Error::Precondition(format!(
                "{} labels supplied for {} vertices",
                labels.len(),
                self.n
            )));
        }
        self.labels = Some(labels);
        Ok(self)
    }

    pub fn without_labels(mut self) -> Self {
        self.labels = None;
        self
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|s| s.len()).sum::<usize>() / 2
    }

    #[inline]
    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.n)
    }

    /// `N(v)`.
    #[inline]
    pub fn neighbors(&self, v: usize) -> VertexSet {
        self.adj[v]
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].contains(v)
    }

    pub fn adjacency(&self) -> &[VertexSet] {
        &self.adj
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    /// Display name of `v`: its label, or the id.
    pub fn label(&self, v: usize) -> String {
        match &self.labels {
            Some(l) => l[v].clone(),
            None => v.to_string(),
        }
    }

    /// Looks a vertex up by label.
    pub fn vertex_by_label(&self, name: &str) -> Option<usize> {
        self.labels.as_ref()?.iter().position(|l| l == name)
    }

    /// Builds a set from labels; panics on unknown names (fixture helper).
    pub fn set_of(&self, names: &[&str]) -> VertexSet {
        names
            .iter()
            .map(|n| {
                self.vertex_by_label(n)
                    .unwrap_or_else(|| panic!("no vertex labelled {n}"))
            })
            .collect()
    }

    pub fn render(&self, s: VertexSet) -> String {
        s.render(self.labels())
    }

    /// Edges `(u, v)` with `u < v`, sorted.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for u in 0..self.n {
            for v in self.adj[u] {
                if u < v {
                    out.push((u, v));
                }
            }
        }
        out
    }

    /// `N(X) = { v : N(v) ∩ X ≠ ∅ }`. May intersect `X` when `X` is not independent.
    #[inline]
    pub fn neighborhood(&self, x: VertexSet) -> VertexSet {
        let mut out = VertexSet::EMPTY;
        for v in x {
            out |= self.adj[v];
        }
        out
    }

    /// `N[X] = N(X) ∪ X`.
    #[inline]
    pub fn closed_neighborhood(&self, x: VertexSet) -> VertexSet {
        self.neighborhood(x) | x
    }

    /// `d(X) = |X| - |N(X)|`.
    #[inline]
    pub fn difference(&self, x: VertexSet) -> i64 {
        x.len() as i64 - self.neighborhood(x).len() as i64
    }

    #[inline]
    pub fn is_independent(&self, x: VertexSet) -> bool {
        self.neighborhood(x).is_disjoint(x)
    }

    /// Subgraph induced by `x`, re-indexed `0..|x|` in ascending order.
    /// The returned map sends new ids to original ids.
    pub fn induced_subgraph(&self, x: VertexSet) -> (Graph, Vec<usize>) {
        let map: Vec<usize> = (x & self.vertices()).to_vec();
        let mut inverse = [usize::MAX; MAX_VERTICES];
        for (i, &v) in map.iter().enumerate() {
            inverse[v] = i;
        }
        let adj = map
            .iter()
            .map(|&v| (self.adj[v] & x).iter().map(|u| inverse[u]).collect())
            .collect();
        let labels = self
            .labels
            .as_ref()
            .map(|l| map.iter().map(|&v| l[v].clone()).collect());
        (Graph { n: map.len(), adj, labels }, map)
    }

    /// Bipartite double cover: vertex `v` becomes `a_v = v` and `b_v = n + v`,
    /// with `a_u b_v` an edge iff `uv` is. Needs `2n <= 64`.
    pub fn bipartite_double_cover(&self) -> Result<DoubleCover> {
        let n = self.n;
        if 2 * n > MAX_VERTICES {
            return Err(Error::UnsupportedSize(2 * n, MAX_VERTICES));
        }
        let mut adj = vec![VertexSet::EMPTY; 2 * n];
        for u in 0..n {
            adj[u] = VertexSet::from_bits(self.adj[u].bits() << n);
            adj[n + u] = self.adj[u];
        }
        let labels = (0..2 * n).map(|i| {
            if i < n {
                format!("a{}", self.label(i))
            } else {
                format!("b{}", self.label(i - n))
            }
        });
        let graph = Graph { n: 2 * n, adj, labels: None }.with_labels(labels)?;
        Ok(DoubleCover {
            graph,
            part_a: VertexSet::full(n),
            part_b: VertexSet::from_bits(VertexSet::full(n).bits() << n),
        })
    }

    /// Whether the vertex set is connected (the empty graph counts as connected).
    pub fn is_connected(&self) -> bool {
        if self.n == 0 {
            return true;
        }
        let mut seen = VertexSet::singleton(0);
        let mut frontier = seen;
        while !frontier.is_empty() {
            let next = self.neighborhood(frontier) - seen;
            seen |= next;
            frontier = next;
        }
        seen == self.vertices()
    }

    /// Two-colourability test.
    pub fn is_bipartite(&self) -> bool {
        let mut colour = vec![None::<bool>; self.n];
        for start in 0..self.n {
            if colour[start].is_some() {
                continue;
            }
            colour[start] = Some(false);
            let mut stack = vec![start];
            while let Some(v) = stack.pop() {
                let c = colour[v].unwrap();
                for u in self.adj[v] {
                    match colour[u] {
                        None => {
                            colour[u] = Some(!c);
                            stack.push(u);
                        }
                        Some(cu) if cu == c => return false,
                        _ => {}
                    }
                }
            }
        }
        true
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let edges: Vec<String> = self
            .edges()
            .into_iter()
            .map(|(u, v)| format!("{}-{}", self.label(u), self.label(v)))
            .collect();
        write!(f, "Graph(n={}, [{}])", self.n, edges.join(" "))
    }
}

/// A double cover together with its declared bipartition.
#[derive(Clone, Debug)]
pub struct DoubleCover {
    pub graph: Graph,
    pub part_a: VertexSet,
    pub part_b: VertexSet,
}
