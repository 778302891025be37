//! Graph families and the seeded Erdős–Rényi generator.

use rand_chacha::rand_core::{RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::fixtures;
use crate::graph::Graph;
use crate::set::MAX_VERTICES;

/// Parameters for [`make_graph`].
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum GraphSpec {
    Path { n: usize },
    Cycle { n: usize },
    Complete { n: usize },
    Empty { n: usize },
    CompleteBipartite { left: usize, right: usize },
    Random { n: usize, p: f64, seed: u64 },
    Fixture { name: String },
}

pub fn make_graph(spec: &GraphSpec) -> Result<Graph> {
    let check_n = |n: usize| {
        if n > MAX_VERTICES {
            Err(Error::UnsupportedSize(n, MAX_VERTICES))
        } else {
            Ok(())
        }
    };
    match spec {
        GraphSpec::Path { n } => {
            check_n(*n)?;
            let edges: Vec<_> = (1..*n).map(|i| (i - 1, i)).collect();
            Graph::from_edge_list(*n, &edges)
        }
        GraphSpec::Cycle { n } => {
            if *n < 3 {
                return Err(Error::InvalidSpec(format!("cycle needs n >= 3, got {n}")));
            }
            check_n(*n)?;
            let edges: Vec<_> = (0..*n).map(|i| (i, (i + 1) % n)).collect();
            Graph::from_edge_list(*n, &edges)
        }
        GraphSpec::Complete { n } => {
            check_n(*n)?;
            let mut edges = Vec::new();
            for j in 1..*n {
                for i in 0..j {
                    edges.push((i, j));
                }
            }
            Graph::from_edge_list(*n, &edges)
        }
        GraphSpec::Empty { n } => Graph::empty(*n),
        GraphSpec::CompleteBipartite { left, right } => {
            let n = left + right;
            check_n(n)?;
            let mut edges = Vec::new();
            for i in 0..*left {
                for j in *left..n {
                    edges.push((i, j));
                }
            }
            Graph::from_edge_list(n, &edges)
        }
        GraphSpec::Random { n, p, seed } => {
            let mut gen = ErdosRenyi::new(*n, *p, *seed)?;
            Ok(gen.sample())
        }
        GraphSpec::Fixture { name } => fixtures::fixture(name),
    }
}

/// Seeded G(n, p) sampler.
///
/// The generator is ChaCha8 (`rand_chacha::ChaCha8Rng::seed_from_u64`). For
/// every pair in graph6 column order `(0,1),(0,2),(1,2),(0,3),...` one
/// `next_u64` is drawn; its top 53 bits give a uniform `u` in `[0,1)` and the
/// edge is present iff `u < p`. Successive calls to [`ErdosRenyi::sample`]
/// continue the same stream, so a `(n, p, seed)` triple fixes a whole sequence.
pub struct ErdosRenyi {
    n: usize,
    p: f64,
    rng: ChaCha8Rng,
}

impl ErdosRenyi {
    pub fn new(n: usize, p: f64, seed: u64) -> Result<Self> {
        if !(0.0..=1.0).contains(&p) {
            return Err(Error::InvalidSpec(format!("edge probability {p} outside [0,1]")));
        }
        if n > MAX_VERTICES {
            return Err(Error::UnsupportedSize(n, MAX_VERTICES));
        }
        Ok(ErdosRenyi {
            n,
            p,
            rng: ChaCha8Rng::seed_from_u64(seed),
        })
    }

    pub fn sample(&mut self) -> Graph {
        let mut edges = Vec::new();
        for j in 1..self.n {
            for i in 0..j {
                let u = (self.rng.next_u64() >> 11) as f64 * (1.0 / (1u64 << 53) as f64);
                if u < self.p {
                    edges.push((i, j));
                }
            }
        }
        Graph::from_edge_list(self.n, &edges).expect("generated edges are in range")
    }
}

/// The Petersen graph (outer 5-cycle, inner pentagram, spokes).
pub fn petersen() -> Graph {
    let mut edges = Vec::new();
    for i in 0..5 {
        edges.push((i, (i + 1) % 5));
        edges.push((5 + i, 5 + (i + 2) % 5));
        edges.push((i, 5 + i));
    }
    Graph::from_edge_list(10, &edges).expect("static edge list")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::formats::to_graph6;

    #[test]
    fn families() {
        let c5 = make_graph(&GraphSpec::Cycle { n: 5 }).unwrap();
        assert_eq!((c5.n(), c5.edge_count()), (5, 5));
        assert!((0..5).all(|v| c5.degree(v) == 2));
        let k5 = make_graph(&GraphSpec::Complete { n: 5 }).unwrap();
        assert_eq!(k5.edge_count(), 10);
        let k23 = make_graph(&GraphSpec::CompleteBipartite { left: 2, right: 3 }).unwrap();
        assert_eq!(k23.edge_count(), 6);
        assert!(k23.is_bipartite());
        assert_eq!(make_graph(&GraphSpec::Empty { n: 4 }).unwrap().edge_count(), 0);
        assert_eq!(make_graph(&GraphSpec::Path { n: 1 }).unwrap().edge_count(), 0);
        assert_eq!(petersen().edge_count(), 15);
        assert!((0..10).all(|v| petersen().degree(v) == 3));
    }

    #[test]
    fn invalid_specs() {
        assert!(make_graph(&GraphSpec::Cycle { n: 2 }).is_err());
        assert!(make_graph(&GraphSpec::Random { n: 5, p: 1.5, seed: 0 }).is_err());
        assert!(make_graph(&GraphSpec::Complete { n: 70 }).is_err());
        assert!(matches!(
            make_graph(&GraphSpec::Fixture { name: "nope".into() }),
            Err(Error::UnknownFixture(_))
        ));
    }

    #[test]
    fn random_is_deterministic() {
        let spec = GraphSpec::Random { n: 12, p: 0.3, seed: 7 };
        let a = to_graph6(&make_graph(&spec).unwrap()).unwrap();
        let b = to_graph6(&make_graph(&spec).unwrap()).unwrap();
        assert_eq!(a, b);
        let other = to_graph6(&make_graph(&GraphSpec::Random { n: 12, p: 0.3, seed: 8 }).unwrap()).unwrap();
        assert_ne!(a, other);
    }

    #[test]
    fn random_extremes() {
        let full = make_graph(&GraphSpec::Random { n: 6, p: 1.0, seed: 1 }).unwrap();
        assert_eq!(full.edge_count(), 15);
        let none = make_graph(&GraphSpec::Random { n: 6, p: 0.0, seed: 1 }).unwrap();
        assert_eq!(none.edge_count(), 0);
    }

    #[test]
    fn spec_serde() {
        let spec: GraphSpec = serde_json::from_str(r#"{"kind":"random","n":4,"p":0.5,"seed":3}"#).unwrap();
        assert_eq!(spec, GraphSpec::Random { n: 4, p: 0.5, seed: 3 });
    }
}
