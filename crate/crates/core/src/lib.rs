//! Exact independence structure of small simple graphs.
//!
//! Graphs have at most 64 vertices and vertex sets are single `u64` bitsets.
//! Everything is computed exactly: `α(G)` and `Ω(G)` by branch and bound,
//! `μ(G)` by Edmonds' blossom algorithm, `d(G)` through the bipartite double
//! cover, and `ker`/`diadem` by pruned enumeration of critical independent sets.
//! Brute-force oracles for `μ` and `d` sit alongside for cross-checking.

pub mod critical;
pub mod error;
pub mod fixtures;
pub mod formats;
pub mod generate;
pub mod graph;
pub mod harness;
pub mod independence;
pub mod matching;
pub mod oracle;
pub mod set;
pub mod theorems;

pub use critical::{
    critical_difference, critical_profile, diadem, enumerate_critical_independent_sets,
    independence_critical_difference, is_critical, kernel, max_critical_independent_set,
    neighborhood_matching, CriticalProfile,
};
pub use error::{Error, Result};
pub use fixtures::{all_fixtures, fixture, fixture_names};
pub use formats::{graph_id, parse_edge_list, parse_graph6, to_dot, to_edge_list, to_graph6};
pub use generate::{make_graph, ErdosRenyi, GraphSpec};
pub use graph::Graph;
pub use independence::{
    berge_matchable, core, corona, independence_number, maximum_independent_sets, OmegaFamily,
};
pub use matching::{
    bipartite_maximum_matching, brute_force_mu, is_koenig_egervary, matching_number, maximum_matching, Matching,
};
pub use set::VertexSet;
pub use theorems::{evaluate_claim, ClaimContext, ClaimId, ClaimOutcome, Status};

/// Environment variable overriding [`Limits::set_cap`].
pub const ENUM_CAP_ENV: &str = "DIADEM_ENUM_CAP";

/// Bounds on exhaustive enumerations.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Limits {
    /// Most sets any one enumeration may produce before failing with
    /// [`Error::EnumerationCap`].
    pub set_cap: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Limits { set_cap: 1_000_000 }
    }
}

impl Limits {
    /// Defaults, with `set_cap` taken from `DIADEM_ENUM_CAP` when it parses.
    pub fn from_env() -> Self {
        let mut limits = Limits::default();
        if let Some(cap) = std::env::var(ENUM_CAP_ENV).ok().and_then(|s| s.trim().parse().ok()) {
            limits.set_cap = cap;
        }
        limits
    }
}
