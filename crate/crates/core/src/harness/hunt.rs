//! Counterexample search for the two open conjectures.
//!
//! A graph flagged by the fast path is recomputed from scratch by the subset
//! oracle before it is reported, and the fast values must agree with the
//! oracle's; disagreement is an internal error, not a finding.

use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::stream::{StreamItem, StreamSpec};
use super::suite::CHUNK;
use crate::critical::{critical_difference, critical_independent_sets_with};
use crate::error::{Error, Result};
use crate::formats::graph_id;
use crate::graph::Graph;
use crate::independence::{independence_number, intersection_of, maximum_independent_sets, union_of};
use crate::matching::matching_number;
use crate::oracle::{brute_force_profile, OracleProfile};
use crate::set::VertexSet;
use crate::Limits;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Conjecture {
    /// `|ker(G)| + |diadem(G)| ≤ 2α(G)`.
    KerDiadem,
    /// `diadem(G) = corona(G)` implies KE.
    DiademCoronaKe,
}

impl Conjecture {
    pub fn as_str(self) -> &'static str {
        match self {
            Conjecture::KerDiadem => "ker-diadem",
            Conjecture::DiademCoronaKe => "diadem-corona-ke",
        }
    }
}

impl fmt::Display for Conjecture {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Conjecture {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "ker-diadem" => Ok(Conjecture::KerDiadem),
            "diadem-corona-ke" => Ok(Conjecture::DiademCoronaKe),
            _ => Err(Error::InvalidSpec(format!(
                "unknown conjecture `{s}` (expected ker-diadem or diadem-corona-ke)"
            ))),
        }
    }
}

/// An oracle-confirmed counterexample.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Finding {
    pub conjecture: Conjecture,
    pub graph_id: String,
    pub index: usize,
    pub n: usize,
    pub m: usize,
    pub alpha: usize,
    pub mu: usize,
    pub d: i64,
    pub ke: bool,
    pub core: VertexSet,
    pub corona: VertexSet,
    pub ker: VertexSet,
    pub diadem: VertexSet,
    pub ker_size: usize,
    pub diadem_size: usize,
    pub two_alpha: usize,
    pub violated: String,
    pub oracle_verified: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HuntSummary {
    pub summary: &'static str,
    pub conjecture: Conjecture,
    pub graphs: usize,
    pub findings: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HuntReport {
    pub findings: Vec<Finding>,
    pub summary: HuntSummary,
}

impl HuntReport {
    /// One JSON object per finding, then the summary object.
    pub fn to_json_lines(&self) -> String {
        let mut out = String::new();
        for f in &self.findings {
            out.push_str(&serde_json::to_string(f).expect("finding serializes"));
            out.push('\n');
        }
        out.push_str(&serde_json::to_string(&self.summary).expect("summary serializes"));
        out.push('\n');
        out
    }
}

/// Fast-path values relevant to the conjectures.
struct Fast {
    alpha: usize,
    ker: VertexSet,
    diadem: VertexSet,
    corona: Option<VertexSet>,
}

fn fast_candidate(g: &Graph, conj: Conjecture, limits: &Limits) -> Result<Option<Fast>> {
    let d = critical_difference(g);
    let crit = critical_independent_sets_with(g, d, limits)?;
    let (ker, diadem) = (intersection_of(&crit), union_of(&crit));
    match conj {
        Conjecture::KerDiadem => {
            let alpha = independence_number(g);
            Ok((ker.len() + diadem.len() > 2 * alpha).then_some(Fast {
                alpha,
                ker,
                diadem,
                corona: None,
            }))
        }
        Conjecture::DiademCoronaKe => {
            let omega = maximum_independent_sets(g, limits)?;
            let corona = omega.union();
            let hit = diadem == corona && omega.alpha + matching_number(g) != g.n();
            Ok(hit.then_some(Fast {
                alpha: omega.alpha,
                ker,
                diadem,
                corona: Some(corona),
            }))
        }
    }
}

fn violation(conj: Conjecture, o: &OracleProfile, n: usize) -> Option<String> {
    match conj {
        Conjecture::KerDiadem => {
            let lhs = o.ker.len() + o.diadem.len();
            (lhs > 2 * o.alpha).then(|| format!("|ker| + |diadem| = {lhs} > {} = 2α", 2 * o.alpha))
        }
        Conjecture::DiademCoronaKe => (o.diadem == o.corona && !o.ke).then(|| {
            format!(
                "diadem = corona but α + μ = {} + {} = {} < {n} = n",
                o.alpha,
                o.mu,
                o.alpha + o.mu
            )
        }),
    }
}

fn verify(item: &StreamItem, conj: Conjecture, fast: Fast) -> Result<Finding> {
    let g = &item.graph;
    let o = brute_force_profile(g)?;
    let agree = o.alpha == fast.alpha
        && o.ker == fast.ker
        && o.diadem == fast.diadem
        && fast.corona.is_none_or(|c| c == o.corona)
        && o.d == o.id;
    let Some(violated) = violation(conj, &o, g.n()).filter(|_| agree) else {
        return Err(Error::Internal(format!(
            "{}: fast path flagged {conj} but the subset oracle disagrees (oracle α={}, ker={}, diadem={}, corona={}, d={}, id={})",
            graph_id(g),
            o.alpha,
            o.ker,
            o.diadem,
            o.corona,
            o.d,
            o.id
        )));
    };
    Ok(Finding {
        conjecture: conj,
        graph_id: graph_id(g),
        index: item.index,
        n: g.n(),
        m: g.edge_count(),
        alpha: o.alpha,
        mu: o.mu,
        d: o.d,
        ke: o.ke,
        core: o.core,
        corona: o.corona,
        ker: o.ker,
        diadem: o.diadem,
        ker_size: o.ker.len(),
        diadem_size: o.diadem.len(),
        two_alpha: 2 * o.alpha,
        violated,
        oracle_verified: true,
    })
}

/// Searches `spec` for counterexamples to `conj`; findings are in stream order.
pub fn hunt(spec: &StreamSpec, conj: Conjecture, limits: &Limits) -> Result<HuntReport> {
    let mut findings = Vec::new();
    let mut graphs = 0usize;
    let mut stream = spec.iter()?;
    loop {
        let chunk: Vec<StreamItem> = stream.by_ref().take(CHUNK).collect::<Result<_>>()?;
        if chunk.is_empty() {
            break;
        }
        graphs += chunk.len();
        let found: Vec<Result<Option<Finding>>> = chunk
            .par_iter()
            .map(|it| match fast_candidate(&it.graph, conj, limits)? {
                Some(fast) => verify(it, conj, fast).map(Some),
                None => Ok(None),
            })
            .collect();
        for f in found {
            if let Some(f) = f? {
                findings.push(f);
            }
        }
    }
    Ok(HuntReport {
        summary: HuntSummary {
            summary: "hunt",
            conjecture: conj,
            graphs,
            findings: findings.len(),
        },
        findings,
    })
}
