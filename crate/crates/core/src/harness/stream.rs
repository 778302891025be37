//! Graph streams: every labeled graph in a vertex range, seeded G(n, p)
//! samples, graph files, or the built-in fixtures.

use std::fs;
use std::path::PathBuf;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::fixtures::all_fixtures;
use crate::formats::{parse_edge_list, parse_graph6};
use crate::generate::ErdosRenyi;
use crate::graph::Graph;
use crate::set::VertexSet;

/// Hard ceiling for exhaustive streams (`2^28` labeled graphs at `n = 8`).
pub const EXHAUSTIVE_MAX_N: usize = 8;

/// Exhaustive streams above this order need [`StreamSpec::allow_large`].
pub const EXHAUSTIVE_DEFAULT_MAX_N: usize = 7;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum FileFormat {
    /// One graph6 string per line; blank lines and lines starting with `#` skipped.
    Graph6,
    /// A single graph in the edge-list format.
    Edgelist,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum Source {
    /// Every labeled graph with `min_n ≤ n ≤ max_n`, by order and then by
    /// edge mask (bit `k` is the `k`-th pair in graph6 column order).
    Exhaustive { min_n: usize, max_n: usize },
    /// `count` consecutive samples of one seeded G(n, p) stream.
    Random { n: usize, p: f64, count: usize, seed: u64 },
    File { path: PathBuf, format: FileFormat },
    Fixtures,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Filters {
    #[serde(default)]
    pub connected_only: bool,
    #[serde(default)]
    pub min_edges: Option<usize>,
    #[serde(default)]
    pub max_edges: Option<usize>,
}

impl Filters {
    pub fn accepts(&self, g: &Graph) -> bool {
        let m = g.edge_count();
        self.min_edges.is_none_or(|lo| m >= lo)
            && self.max_edges.is_none_or(|hi| m <= hi)
            && (!self.connected_only || g.is_connected())
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct StreamSpec {
    pub source: Source,
    #[serde(default)]
    pub filters: Filters,
    /// Permits exhaustive streams up to [`EXHAUSTIVE_MAX_N`].
    #[serde(default)]
    pub allow_large: bool,
}

/// One graph from a stream, with its position (before filtering) and, for
/// fixtures, its name.
#[derive(Clone, Debug)]
pub struct StreamItem {
    pub index: usize,
    pub name: Option<String>,
    pub graph: Graph,
}

impl StreamSpec {
    pub fn new(source: Source) -> Self {
        StreamSpec {
            source,
            filters: Filters::default(),
            allow_large: false,
        }
    }

    pub fn exhaustive(min_n: usize, max_n: usize) -> Self {
        StreamSpec::new(Source::Exhaustive { min_n, max_n })
    }

    pub fn random(n: usize, p: f64, count: usize, seed: u64) -> Self {
        StreamSpec::new(Source::Random { n, p, count, seed })
    }

    pub fn fixtures() -> Self {
        StreamSpec::new(Source::Fixtures)
    }

    pub fn with_filters(mut self, filters: Filters) -> Self {
        self.filters = filters;
        self
    }

    pub fn validate(&self) -> Result<()> {
        match &self.source {
            Source::Exhaustive { min_n, max_n } => {
                let ceiling = if self.allow_large { EXHAUSTIVE_MAX_N } else { EXHAUSTIVE_DEFAULT_MAX_N };
                if min_n > max_n {
                    return Err(Error::InvalidSpec(format!("empty vertex range {min_n}..={max_n}")));
                }
                if *max_n > ceiling {
                    return Err(Error::InvalidSpec(format!(
                        "exhaustive streams stop at n = {ceiling}, asked for {max_n}"
                    )));
                }
            }
            Source::Random { n, p, .. } => {
                ErdosRenyi::new(*n, *p, 0)?;
            }
            Source::File { .. } | Source::Fixtures => {}
        }
        Ok(())
    }

    /// Number of graphs before filtering, when known without reading input.
    pub fn len_hint(&self) -> Option<usize> {
        match &self.source {
            Source::Exhaustive { min_n, max_n } => {
                Some((*min_n..=*max_n).map(|n| 1usize << (n * n.saturating_sub(1) / 2)).sum())
            }
            Source::Random { count, .. } => Some(*count),
            Source::Fixtures => Some(all_fixtures().len()),
            Source::File { .. } => None,
        }
    }

    /// The filtered stream, in stream order.
    pub fn iter(&self) -> Result<Box<dyn Iterator<Item = Result<StreamItem>> + Send>> {
        self.validate()?;
        let raw: Box<dyn Iterator<Item = Result<StreamItem>> + Send> = match &self.source {
            Source::Exhaustive { min_n, max_n } => Box::new(exhaustive(*min_n, *max_n).map(Ok)),
            Source::Random { n, p, count, seed } => {
                let mut gen = ErdosRenyi::new(*n, *p, *seed)?;
                Box::new((0..*count).map(move |index| {
                    Ok(StreamItem {
                        index,
                        name: None,
                        graph: gen.sample(),
                    })
                }))
            }
            Source::File { path, format } => {
                let text = fs::read_to_string(path)?;
                match format {
                    FileFormat::Graph6 => {
                        let lines: Vec<(usize, String)> = text
                            .lines()
                            .enumerate()
                            .map(|(i, l)| (i, l.trim().to_owned()))
                            .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'))
                            .collect();
                        Box::new(lines.into_iter().enumerate().map(|(index, (line, s))| {
                            let graph = parse_graph6(&s).map_err(|e| Error::InvalidSpec(format!("line {}: {e}", line + 1)))?;
                            Ok(StreamItem { index, name: None, graph })
                        }))
                    }
                    FileFormat::Edgelist => {
                        let graph = parse_edge_list(&text)?;
                        Box::new(std::iter::once(Ok(StreamItem { index: 0, name: None, graph })))
                    }
                }
            }
            Source::Fixtures => Box::new(all_fixtures().into_iter().enumerate().map(|(index, (name, graph))| {
                Ok(StreamItem {
                    index,
                    name: Some(name.to_owned()),
                    graph,
                })
            })),
        };
        let filters = self.filters.clone();
        Ok(Box::new(raw.filter(move |item| match item {
            Ok(it) => filters.accepts(&it.graph),
            Err(_) => true,
        })))
    }
}

/// Every labeled graph on `min_n..=max_n` vertices.
pub fn exhaustive(min_n: usize, max_n: usize) -> impl Iterator<Item = StreamItem> + Send {
    let mut index = 0usize;
    (min_n..=max_n).flat_map(|n| {
        let pairs: Vec<(usize, usize)> = (1..n).flat_map(|j| (0..j).map(move |i| (i, j))).collect();
        (0u64..1 << pairs.len()).map(move |mask| labeled_graph(n, &pairs, mask))
    })
    .map(move |graph| {
        let item = StreamItem {
            index,
            name: None,
            graph,
        };
        index += 1;
        item
    })
}

fn labeled_graph(n: usize, pairs: &[(usize, usize)], mask: u64) -> Graph {
    let mut adj = vec![VertexSet::EMPTY; n];
    let mut rest = mask;
    while rest != 0 {
        let k = rest.trailing_zeros() as usize;
        rest &= rest - 1;
        let (i, j) = pairs[k];
        adj[i].insert(j);
        adj[j].insert(i);
    }
    Graph::from_adjacency(adj).expect("pairs are in range")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::formats::to_graph6;

    fn count(spec: &StreamSpec) -> usize {
        spec.iter().unwrap().count()
    }

    #[test]
    fn exhaustive_counts() {
        assert_eq!(count(&StreamSpec::exhaustive(4, 4)), 64);
        assert_eq!(count(&StreamSpec::exhaustive(0, 3)), 1 + 1 + 2 + 8);
        assert_eq!(StreamSpec::exhaustive(1, 6).len_hint(), Some(1 + 2 + 8 + 64 + 1024 + 32768));
        let g6: Vec<String> = StreamSpec::exhaustive(3, 3)
            .iter()
            .unwrap()
            .map(|it| to_graph6(&it.unwrap().graph).unwrap())
            .collect();
        let mut uniq = g6.clone();
        uniq.sort();
        uniq.dedup();
        assert_eq!(uniq.len(), 8);
        assert_eq!(g6[0], "B?");
        assert_eq!(g6[7], "Bw");
    }

    #[test]
    fn filters() {
        let connected = StreamSpec::exhaustive(4, 4).with_filters(Filters {
            connected_only: true,
            ..Filters::default()
        });
        assert_eq!(count(&connected), 38);
        let sparse = StreamSpec::exhaustive(4, 4).with_filters(Filters {
            min_edges: Some(1),
            max_edges: Some(2),
            ..Filters::default()
        });
        assert_eq!(count(&sparse), 6 + 15);
    }

    #[test]
    fn ceilings() {
        assert!(StreamSpec::exhaustive(8, 8).validate().is_err());
        let mut big = StreamSpec::exhaustive(8, 8);
        big.allow_large = true;
        assert!(big.validate().is_ok());
        big.source = Source::Exhaustive { min_n: 9, max_n: 9 };
        assert!(big.validate().is_err());
        assert!(StreamSpec::exhaustive(5, 4).validate().is_err());
        assert!(StreamSpec::random(5, 2.0, 1, 0).validate().is_err());
    }

    #[test]
    fn random_stream_is_reproducible() {
        let spec = StreamSpec::random(10, 0.3, 5, 1);
        let a: Vec<String> = spec.iter().unwrap().map(|i| to_graph6(&i.unwrap().graph).unwrap()).collect();
        let b: Vec<String> = spec.iter().unwrap().map(|i| to_graph6(&i.unwrap().graph).unwrap()).collect();
        assert_eq!(a, b);
        assert_eq!(a.len(), 5);
    }

    #[test]
    fn fixture_stream_is_named() {
        let names: Vec<String> = StreamSpec::fixtures().iter().unwrap().map(|i| i.unwrap().name.unwrap()).collect();
        assert_eq!(names[0], "fig1-g1");
        assert_eq!(names.len(), 14);
    }

    #[test]
    fn graph6_file_stream() {
        let dir = std::env::temp_dir().join(format!("diadem-stream-{}", std::process::id()));
        fs::create_dir_all(&dir).unwrap();
        let path = dir.join("g.g6");
        fs::write(&path, "# comment\nC~\n\nCl\n").unwrap();
        let spec = StreamSpec::new(Source::File {
            path: path.clone(),
            format: FileFormat::Graph6,
        });
        let gs: Vec<Graph> = spec.iter().unwrap().map(|i| i.unwrap().graph).collect();
        assert_eq!(gs.len(), 2);
        assert_eq!(gs[0].edge_count(), 6);
        fs::write(&path, "C~\nC!\n").unwrap();
        let errs: Vec<_> = spec.iter().unwrap().filter_map(|i| i.err()).collect();
        assert_eq!(errs.len(), 1);
        assert!(errs[0].to_string().contains("line 2"));
        fs::remove_dir_all(&dir).unwrap();
    }
}
