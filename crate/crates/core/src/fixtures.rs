//! Hand-transcribed example graphs.
//!
//! Vertices carry the names used in the drawings; vertices drawn without a
//! name are called `o1, o2, ...`, numbered left to right along the bottom row
//! and then along the top row.

use crate::error::{Error, Result};
use crate::graph::Graph;

struct Fixture {
    name: &'static str,
    about: &'static str,
    labels: &'static [&'static str],
    edges: &'static [(&'static str, &'static str)],
}

const FIXTURES: &[Fixture] = &[
    Fixture {
        name: "fig1-g1",
        about: "non-KE, |core|+|corona| = 2α, corona not critical",
        labels: &["a", "b", "c", "d", "e", "f", "x", "y", "u", "v"],
        edges: &[
            ("a", "c"), ("c", "d"), ("d", "e"), ("e", "f"), ("b", "c"), ("x", "d"),
            ("x", "y"), ("d", "y"), ("d", "u"), ("u", "v"), ("f", "v"),
        ],
    },
    Fixture {
        name: "fig1-g2",
        about: "non-KE, |core|+|corona| > 2α, corona critical",
        labels: &["x", "y", "z", "v1", "v2", "v3", "v4", "v5", "v6", "v7", "v8", "v9"],
        edges: &[
            ("y", "v1"), ("x", "v1"), ("z", "v6"), ("v6", "v5"), ("v5", "v4"), ("v4", "v9"),
            ("z", "v1"), ("v6", "v2"), ("v2", "v3"), ("v3", "v4"), ("v7", "v8"), ("v7", "v9"),
            ("v9", "v8"),
        ],
    },
    Fixture {
        name: "fig2",
        about: "core {v1,v2,v6,v10} critical, d = 1",
        labels: &[
            "v1", "v2", "v3", "v4", "v5", "v6", "v7", "v8", "v9", "v10", "v11", "v12", "v13",
        ],
        edges: &[
            ("v1", "v5"), ("v2", "v5"), ("v3", "v4"), ("v3", "v5"), ("v4", "v5"), ("v5", "v6"),
            ("v5", "v7"), ("v6", "v9"), ("v7", "v8"), ("v8", "v9"), ("v9", "v10"), ("v10", "v12"),
            ("v11", "v12"), ("v11", "v13"), ("v12", "v13"),
        ],
    },
    Fixture {
        name: "fig3",
        about: "core = ker = {x,y}, non-KE",
        labels: &["x", "y", "z", "v", "u", "w"],
        edges: &[("x", "z"), ("y", "z"), ("z", "v"), ("v", "w"), ("v", "u"), ("w", "u")],
    },
    Fixture {
        name: "fig4",
        about: "non-KE, core = ker = {x,y}",
        labels: &["x", "y", "t", "u", "v", "w", "z", "a", "b", "c"],
        edges: &[
            ("x", "t"), ("t", "z"), ("z", "a"), ("a", "c"), ("y", "t"), ("t", "u"),
            ("t", "v"), ("u", "v"), ("z", "w"), ("a", "b"), ("c", "b"),
        ],
    },
    Fixture {
        name: "fig5",
        about: "KE with d = 1",
        labels: &["a", "b", "c", "d", "u", "v", "w"],
        edges: &[
            ("a", "v"), ("v", "w"), ("w", "c"), ("b", "u"), ("u", "v"), ("u", "w"), ("w", "d"),
        ],
    },
    Fixture {
        name: "fig6-g1",
        about: "KE, ker {x,y} ⊊ core {x,y,u,v}",
        labels: &["x", "y", "u", "v", "o1", "o2", "o3", "o4", "o5"],
        edges: &[
            ("o1", "o2"), ("o2", "o3"), ("o3", "o4"), ("o1", "y"), ("x", "o1"), ("o2", "u"),
            ("o2", "v"), ("u", "o3"), ("o3", "v"), ("o4", "o5"),
        ],
    },
    Fixture {
        name: "fig6-g2",
        about: "KE, ker empty, core {w}",
        labels: &["w", "o1", "o2", "o3"],
        edges: &[("w", "o1"), ("o1", "o2"), ("o1", "o3"), ("o2", "o3")],
    },
    Fixture {
        name: "fig7-g1",
        about: "non-bipartite KE with ker = core and diadem = corona",
        labels: &["a", "b", "o1", "o2", "o3", "o4", "o5", "o6", "o7", "o8", "o9"],
        edges: &[
            ("a", "o1"), ("o1", "o2"), ("o2", "o3"), ("o3", "o4"), ("b", "o1"), ("o5", "o1"),
            ("o5", "o6"), ("o1", "o6"), ("o1", "o7"), ("o7", "o8"), ("o8", "o9"), ("o3", "o8"),
        ],
    },
    Fixture {
        name: "fig7-g2",
        about: "non-KE, ker = core = {x,y}, diadem ⊊ corona",
        labels: &["x", "y", "z", "t", "u", "v", "w", "o1"],
        edges: &[
            ("x", "o1"), ("o1", "z"), ("z", "v"), ("v", "w"), ("o1", "y"), ("z", "t"),
            ("t", "v"), ("w", "u"),
        ],
    },
    Fixture {
        name: "fig8-g1",
        about: "non-KE, core {a,b,c,d} critical",
        labels: &["a", "b", "c", "d", "o1", "o2", "o3", "o4", "o5", "o6", "o7"],
        edges: &[
            ("b", "o1"), ("o1", "d"), ("d", "o2"), ("o2", "o3"), ("o3", "o4"), ("a", "o1"),
            ("o1", "c"), ("o5", "o2"), ("o5", "o6"), ("o2", "o6"), ("o7", "o4"), ("o3", "o7"),
        ],
    },
    Fixture {
        name: "fig8-g2",
        about: "non-KE, core {x,y,z,w} not critical",
        labels: &["x", "y", "z", "w", "o1", "o2", "o3", "o4", "o5", "o6", "o7", "o8", "o9"],
        edges: &[
            ("y", "o1"), ("o1", "o2"), ("o2", "w"), ("w", "o3"), ("o3", "o4"), ("o4", "o5"),
            ("x", "o1"), ("o1", "z"), ("o2", "o6"), ("o2", "o7"), ("o6", "o7"), ("o3", "o8"),
            ("o9", "o5"), ("o8", "o9"),
        ],
    },
    Fixture {
        name: "fig9-g1",
        about: "KE, core = ker = {x,y}",
        labels: &["x", "y", "o1", "o2", "o3", "o4", "o5"],
        edges: &[
            ("x", "o1"), ("o1", "o2"), ("o2", "o3"), ("o1", "y"), ("o3", "o5"), ("o4", "o5"),
            ("o1", "o4"),
        ],
    },
    Fixture {
        name: "fig9-g2",
        about: "non-KE, core = ker = {a,b}",
        labels: &["a", "b", "o1", "o2", "o3", "o4", "o5", "o6"],
        edges: &[
            ("a", "o1"), ("o1", "o2"), ("o2", "o3"), ("o3", "o4"), ("o1", "b"), ("o2", "o5"),
            ("o5", "o6"), ("o6", "o4"),
        ],
    },
];

/// Fixture names in listing order.
pub fn fixture_names() -> impl Iterator<Item = &'static str> {
    FIXTURES.iter().map(|f| f.name)
}

/// One-line summary of a fixture.
pub fn fixture_about(name: &str) -> Option<&'static str> {
    FIXTURES.iter().find(|f| f.name == name).map(|f| f.about)
}

pub fn fixture(name: &str) -> Result<Graph> {
    let fx = FIXTURES
        .iter()
        .find(|f| f.name == name)
        .ok_or_else(|| Error::UnknownFixture(name.to_owned()))?;
    let index = |l: &str| {
        fx.labels
            .iter()
            .position(|x| *x == l)
            .unwrap_or_else(|| panic!("fixture {}: unknown label {l}", fx.name))
    };
    let edges: Vec<_> = fx.edges.iter().map(|&(u, v)| (index(u), index(v))).collect();
    Graph::from_edge_list(fx.labels.len(), &edges)?.with_labels(fx.labels.iter().copied())
}

/// Every fixture, in listing order.
pub fn all_fixtures() -> Vec<(&'static str, Graph)> {
    FIXTURES
        .iter()
        .map(|f| (f.name, fixture(f.name).expect("static fixture")))
        .collect()
}
