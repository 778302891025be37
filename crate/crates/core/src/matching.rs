//! Maximum matchings: Edmonds' blossom algorithm for general graphs, an
//! augmenting-path matcher for bipartite subgraphs, and an exhaustive oracle.

use std::collections::VecDeque;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::independence::independence_number;
use crate::set::VertexSet;

/// Default edge-count ceiling for [`brute_force_mu`].
pub const BRUTE_FORCE_EDGE_CAP: usize = 24;

/// A set of pairwise non-incident edges, stored `(min, max)` and sorted.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Matching {
    edges: Vec<(usize, usize)>,
    saturated: VertexSet,
}

impl Matching {
    /// Builds a matching from pairs, normalising and sorting them.
    /// Fails if two pairs share an endpoint.
    pub fn from_pairs(pairs: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        let mut edges = Vec::new();
        let mut saturated = VertexSet::EMPTY;
        for (u, v) in pairs {
            if u == v || saturated.contains(u) || saturated.contains(v) {
                return Err(Error::Precondition(format!("pair ({u},{v}) is incident to another pair")));
            }
            saturated.insert(u);
            saturated.insert(v);
            edges.push((u.min(v), u.max(v)));
        }
        edges.sort_unstable();
        Ok(Matching { edges, saturated })
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn size(&self) -> usize {
        self.edges.len()
    }

    pub fn saturated(&self) -> VertexSet {
        self.saturated
    }

    /// `M(A)`: the vertices matched by this matching with vertices of `a`.
    pub fn matched_partners(&self, a: VertexSet) -> VertexSet {
        let mut out = VertexSet::EMPTY;
        for &(u, v) in &self.edges {
            if a.contains(u) {
                out.insert(v);
            }
            if a.contains(v) {
                out.insert(u);
            }
        }
        out
    }

    /// Partner of `v`, if matched.
    pub fn partner(&self, v: usize) -> Option<usize> {
        self.edges.iter().find_map(|&(a, b)| match v {
            _ if v == a => Some(b),
            _ if v == b => Some(a),
            _ => None,
        })
    }

    /// Whether every edge is an edge of `g`.
    pub fn is_valid_in(&self, g: &Graph) -> bool {
        self.edges.iter().all(|&(u, v)| u < g.n() && v < g.n() && g.has_edge(u, v))
    }
}

/// Maximum matching of the bipartite graph with left side `left` and, for
/// each left vertex, right-side neighbors `nbrs(v)`. The right side lives in
/// its own id space, so `left` and the neighbor sets may overlap numerically
/// (the double cover uses this). Returns `(left, right)` pairs.
pub(crate) fn bipartite_pairs(left: VertexSet, nbrs: impl Fn(usize) -> VertexSet) -> Vec<(usize, usize)> {
    const NONE: usize = usize::MAX;
    let mut mate_right = [NONE; 64];
    let mut mate_left = [NONE; 64];

    fn augment(
        u: usize,
        nbrs: &impl Fn(usize) -> VertexSet,
        visited: &mut VertexSet,
        mate_left: &mut [usize; 64],
        mate_right: &mut [usize; 64],
    ) -> bool {
        for r in nbrs(u) - *visited {
            visited.insert(r);
            let owner = mate_right[r];
            if owner == NONE || augment(owner, nbrs, visited, mate_left, mate_right) {
                mate_right[r] = u;
                mate_left[u] = r;
                return true;
            }
        }
        false
    }

    // greedy start, then one augmenting search per unmatched left vertex
    let mut taken = VertexSet::EMPTY;
    for u in left {
        if let Some(r) = (nbrs(u) - taken).first() {
            taken.insert(r);
            mate_right[r] = u;
            mate_left[u] = r;
        }
    }
    for u in left {
        if mate_left[u] == NONE {
            let mut visited = VertexSet::EMPTY;
            augment(u, &nbrs, &mut visited, &mut mate_left, &mut mate_right);
        }
    }
    left.iter()
        .filter(|&u| mate_left[u] != NONE)
        .map(|u| (u, mate_left[u]))
        .collect()
}

/// Maximum matching of the bipartite subgraph of `g` between `part_a` and
/// `part_b`; only edges with one end in each part are used.
pub fn bipartite_maximum_matching(g: &Graph, part_a: VertexSet, part_b: VertexSet) -> Result<Matching> {
    if !part_a.is_disjoint(part_b) {
        return Err(Error::Precondition(format!(
            "parts overlap in {}",
            g.render(part_a & part_b)
        )));
    }
    let outside = (part_a | part_b) - g.vertices();
    if let Some(v) = outside.first() {
        return Err(Error::VertexOutOfRange { vertex: v, n: g.n() });
    }
    let pairs = bipartite_pairs(part_a, |v| g.neighbors(v) & part_b);
    Matching::from_pairs(pairs)
}

struct Blossom<'a> {
    g: &'a Graph,
    mate: Vec<usize>,
    parent: Vec<usize>,
    base: Vec<usize>,
    used: Vec<bool>,
    in_blossom: Vec<bool>,
    queue: VecDeque<usize>,
}

const UNMATCHED: usize = usize::MAX;

impl<'a> Blossom<'a> {
    fn new(g: &'a Graph) -> Self {
        let n = g.n();
        Blossom {
            g,
            mate: vec![UNMATCHED; n],
            parent: vec![UNMATCHED; n],
            base: (0..n).collect(),
            used: vec![false; n],
            in_blossom: vec![false; n],
            queue: VecDeque::with_capacity(n),
        }
    }

    fn lca(&self, mut a: usize, mut b: usize) -> usize {
        let mut seen = vec![false; self.g.n()];
        loop {
            a = self.base[a];
            seen[a] = true;
            if self.mate[a] == UNMATCHED {
                break;
            }
            a = self.parent[self.mate[a]];
        }
        loop {
            b = self.base[b];
            if seen[b] {
                return b;
            }
            b = self.parent[self.mate[b]];
        }
    }

    fn mark_path(&mut self, mut v: usize, b: usize, mut child: usize) {
        while self.base[v] != b {
            self.in_blossom[self.base[v]] = true;
            self.in_blossom[self.base[self.mate[v]]] = true;
            self.parent[v] = child;
            child = self.mate[v];
            v = self.parent[self.mate[v]];
        }
    }

    /// BFS for an augmenting path from `root`; returns its free endpoint.
    fn find_path(&mut self, root: usize) -> Option<usize> {
        let n = self.g.n();
        self.used.fill(false);
        self.parent.fill(UNMATCHED);
        for (i, b) in self.base.iter_mut().enumerate() {
            *b = i;
        }
        self.used[root] = true;
        self.queue.clear();
        self.queue.push_back(root);
        while let Some(v) = self.queue.pop_front() {
            for to in self.g.neighbors(v) {
                if self.base[v] == self.base[to] || self.mate[v] == to {
                    continue;
                }
                let to_is_outer =
                    to == root || (self.mate[to] != UNMATCHED && self.parent[self.mate[to]] != UNMATCHED);
                if to_is_outer {
                    let cur = self.lca(v, to);
                    self.in_blossom.fill(false);
                    self.mark_path(v, cur, to);
                    self.mark_path(to, cur, v);
                    for i in 0..n {
                        if self.in_blossom[self.base[i]] {
                            self.base[i] = cur;
                            if !self.used[i] {
                                self.used[i] = true;
                                self.queue.push_back(i);
                            }
                        }
                    }
                } else if self.parent[to] == UNMATCHED {
                    self.parent[to] = v;
                    if self.mate[to] == UNMATCHED {
                        return Some(to);
                    }
                    let next = self.mate[to];
                    self.used[next] = true;
                    self.queue.push_back(next);
                }
            }
        }
        None
    }

    fn run(mut self) -> Vec<usize> {
        let n = self.g.n();
        for v in 0..n {
            if self.mate[v] == UNMATCHED {
                if let Some(u) = self.g.neighbors(v).iter().find(|&u| self.mate[u] == UNMATCHED) {
                    self.mate[v] = u;
                    self.mate[u] = v;
                }
            }
        }
        for root in 0..n {
            if self.mate[root] != UNMATCHED {
                continue;
            }
            if let Some(mut v) = self.find_path(root) {
                while v != UNMATCHED {
                    let pv = self.parent[v];
                    let ppv = self.mate[pv];
                    self.mate[v] = pv;
                    self.mate[pv] = v;
                    v = ppv;
                }
            }
        }
        self.mate
    }
}

/// Maximum-cardinality matching of a general graph (Edmonds' blossom algorithm).
pub fn maximum_matching(g: &Graph) -> Matching {
    let mate = Blossom::new(g).run();
    let pairs = mate
        .iter()
        .enumerate()
        .filter(|&(v, &u)| u != UNMATCHED && v < u)
        .map(|(v, &u)| (v, u));
    Matching::from_pairs(pairs).expect("blossom output is a matching")
}

/// `μ(G)`.
pub fn matching_number(g: &Graph) -> usize {
    maximum_matching(g).size()
}

/// Exhaustive `μ(G)` over edge subsets (include/exclude per edge, skipping
/// incident choices). Refuses graphs with more than `edge_cap` edges.
pub fn brute_force_mu(g: &Graph, edge_cap: usize) -> Result<usize> {
    let edges = g.edges();
    if edges.len() > edge_cap {
        return Err(Error::BruteForceCap {
            edges: edges.len(),
            cap: edge_cap,
        });
    }
    fn go(edges: &[(usize, usize)], n: usize, k: usize, used: VertexSet, size: usize, best: &mut usize) {
        if size > *best {
            *best = size;
        }
        let room = (edges.len() - k).min((n - used.len()) / 2);
        if k == edges.len() || size + room <= *best {
            return;
        }
        let (u, v) = edges[k];
        if !used.contains(u) && !used.contains(v) {
            go(edges, n, k + 1, used.with(u).with(v), size + 1, best);
        }
        go(edges, n, k + 1, used, size, best);
    }
    let mut best = 0;
    go(&edges, g.n(), 0, VertexSet::EMPTY, 0, &mut best);
    Ok(best)
}

/// König–Egerváry test: `α(G) + μ(G) = |V(G)|`.
pub fn is_koenig_egervary(g: &Graph) -> bool {
    independence_number(g) + matching_number(g) == g.n()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures::fixture;
    use crate::generate::{make_graph, petersen, GraphSpec};

    fn g(spec: GraphSpec) -> Graph {
        make_graph(&spec).unwrap()
    }

    #[test]
    fn general_matching_examples() {
        assert_eq!(matching_number(&g(GraphSpec::Path { n: 4 })), 2);
        assert_eq!(matching_number(&g(GraphSpec::Complete { n: 3 })), 1);
        assert_eq!(matching_number(&petersen()), 5);
        assert_eq!(matching_number(&Graph::empty(0).unwrap()), 0);
        let m = maximum_matching(&g(GraphSpec::Cycle { n: 7 }));
        assert_eq!(m.size(), 3);
        assert!(m.is_valid_in(&g(GraphSpec::Cycle { n: 7 })));
        assert!(m.edges().windows(2).all(|w| w[0] < w[1]));
    }

    #[test]
    fn blossom_needs_contraction() {
        // triangle 0-1-2 with tails 2-3 and 0-4: greedy from vertex 0 can block
        let t = Graph::from_edge_list(6, &[(0, 1), (1, 2), (2, 0), (2, 3), (0, 4), (3, 5)]).unwrap();
        assert_eq!(matching_number(&t), 3);
        assert_eq!(brute_force_mu(&t, 24).unwrap(), 3);
    }

    #[test]
    fn bipartite_examples() {
        let k2 = g(GraphSpec::Path { n: 2 });
        let dc = k2.bipartite_double_cover().unwrap();
        let m = bipartite_maximum_matching(&dc.graph, dc.part_a, dc.part_b).unwrap();
        assert_eq!(m.size(), 2);

        let star = Graph::from_edge_list(4, &[(0, 1), (0, 2), (0, 3)]).unwrap();
        let leaves: VertexSet = [1, 2, 3].into_iter().collect();
        let m = bipartite_maximum_matching(&star, VertexSet::singleton(0), leaves).unwrap();
        assert_eq!(m.size(), 1);

        let c5 = g(GraphSpec::Cycle { n: 5 });
        let dc = c5.bipartite_double_cover().unwrap();
        let m = bipartite_maximum_matching(&dc.graph, dc.part_a, dc.part_b).unwrap();
        assert_eq!(m.size(), 5);
        assert_eq!(brute_force_mu(&dc.graph, 24).unwrap(), 5);
        assert_eq!(matching_number(&dc.graph), 5);
    }

    #[test]
    fn bipartite_rejects_overlap() {
        let p3 = g(GraphSpec::Path { n: 3 });
        let a: VertexSet = [0, 1].into_iter().collect();
        let b: VertexSet = [1, 2].into_iter().collect();
        assert!(matches!(bipartite_maximum_matching(&p3, a, b), Err(Error::Precondition(_))));
        assert!(bipartite_maximum_matching(&p3, a, VertexSet::singleton(7)).is_err());
    }

    #[test]
    fn brute_force_examples() {
        assert_eq!(brute_force_mu(&g(GraphSpec::Cycle { n: 4 }), 24).unwrap(), 2);
        assert_eq!(brute_force_mu(&g(GraphSpec::Empty { n: 5 }), 24).unwrap(), 0);
        assert_eq!(brute_force_mu(&fixture("fig3").unwrap(), 24).unwrap(), 2);
        assert!(matches!(
            brute_force_mu(&g(GraphSpec::Complete { n: 8 }), 24),
            Err(Error::BruteForceCap { edges: 28, cap: 24 })
        ));
    }

    #[test]
    fn matched_partners() {
        let m = Matching::from_pairs([(3, 1), (0, 2)]).unwrap();
        assert_eq!(m.edges(), &[(0, 2), (1, 3)]);
        assert_eq!(m.matched_partners([0, 1].into_iter().collect()), [2, 3].into_iter().collect());
        assert_eq!(m.partner(3), Some(1));
        assert_eq!(m.partner(4), None);
        assert!(Matching::from_pairs([(0, 1), (1, 2)]).is_err());
    }

    #[test]
    fn koenig_egervary_examples() {
        assert!(is_koenig_egervary(&fixture("fig5").unwrap()));
        assert!(!is_koenig_egervary(&fixture("fig1-g1").unwrap()));
        assert!(!is_koenig_egervary(&g(GraphSpec::Complete { n: 3 })));
        assert!(is_koenig_egervary(&g(GraphSpec::CompleteBipartite { left: 2, right: 4 })));
    }
}
