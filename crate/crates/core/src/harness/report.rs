//! The per-graph structure report.

use std::fmt::Write as _;

use serde::Serialize;

use crate::critical::{critical_difference, critical_independent_sets_with, independence_critical_difference, kernel_of};
use crate::error::{Error, Result};
use crate::formats::graph_id;
use crate::graph::Graph;
use crate::independence::{maximum_independent_sets, union_of};
use crate::matching::matching_number;
use crate::set::VertexSet;
use crate::Limits;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct StructureReport {
    pub graph_id: String,
    pub n: usize,
    pub m: usize,
    pub alpha: usize,
    pub mu: usize,
    pub d: i64,
    pub id: i64,
    pub ke: bool,
    pub core: VertexSet,
    pub corona: VertexSet,
    pub ker: VertexSet,
    pub diadem: VertexSet,
    pub core_critical: bool,
    pub corona_critical: bool,
    pub omega_count: usize,
}

/// Full analysis of `g`. The report's invariants (`d = id`, `ker ⊆ core`,
/// `diadem ⊆ corona`, and for KE graphs `|core| + |corona| = 2α` and
/// `d = α − μ`) are checked; a violation is an internal error.
pub fn analyze(g: &Graph, limits: &Limits) -> Result<StructureReport> {
    let omega = maximum_independent_sets(g, limits)?;
    let mu = matching_number(g);
    let d = critical_difference(g);
    let id = independence_critical_difference(g);
    let crit = critical_independent_sets_with(g, d, limits)?;
    let ker = kernel_of(g, d, &crit)?;
    let (core, corona) = (omega.intersection(), omega.union());
    let alpha = omega.alpha;
    let report = StructureReport {
        graph_id: graph_id(g),
        n: g.n(),
        m: g.edge_count(),
        alpha,
        mu,
        d,
        id,
        ke: alpha + mu == g.n(),
        core,
        corona,
        ker,
        diadem: union_of(&crit),
        core_critical: g.difference(core) == d,
        corona_critical: g.difference(corona) == d,
        omega_count: omega.sets.len(),
    };
    check(&report)?;
    Ok(report)
}

fn check(r: &StructureReport) -> Result<()> {
    let mut broken = Vec::new();
    if r.d != r.id {
        broken.push(format!("d = {} but id = {}", r.d, r.id));
    }
    if !r.ker.is_subset(r.core) {
        broken.push("ker ⊄ core".to_owned());
    }
    if !r.diadem.is_subset(r.corona) {
        broken.push("diadem ⊄ corona".to_owned());
    }
    if r.ke && r.core.len() + r.corona.len() != 2 * r.alpha {
        broken.push("KE but |core| + |corona| ≠ 2α".to_owned());
    }
    if r.ke && r.d != r.alpha as i64 - r.mu as i64 {
        broken.push("KE but d ≠ α − μ".to_owned());
    }
    if r.alpha + r.mu > r.n {
        broken.push("α + μ > n".to_owned());
    }
    if broken.is_empty() {
        Ok(())
    } else {
        Err(Error::Internal(format!("{}: {}", r.graph_id, broken.join("; "))))
    }
}

/// Human-readable rendering, naming vertices by their labels.
pub fn render_text(g: &Graph, r: &StructureReport) -> String {
    let mut out = String::new();
    let rows: [(&str, String); 15] = [
        ("graph6", r.graph_id.clone()),
        ("n", r.n.to_string()),
        ("m", r.m.to_string()),
        ("alpha", r.alpha.to_string()),
        ("mu", r.mu.to_string()),
        ("d", r.d.to_string()),
        ("id", r.id.to_string()),
        ("KE", r.ke.to_string()),
        ("|Omega|", r.omega_count.to_string()),
        ("core", g.render(r.core)),
        ("corona", g.render(r.corona)),
        ("ker", g.render(r.ker)),
        ("diadem", g.render(r.diadem)),
        ("core critical", r.core_critical.to_string()),
        ("corona critical", r.corona_critical.to_string()),
    ];
    for (k, v) in rows {
        let _ = writeln!(out, "{k:<16}{v}");
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures::fixture;

    #[test]
    fn fig1_reports() {
        let lim = Limits::default();
        let g1 = fixture("fig1-g1").unwrap();
        let r = analyze(&g1, &lim).unwrap();
        assert!(!r.ke && r.core_critical && !r.corona_critical);
        assert_eq!((r.alpha, r.core.len() + r.corona.len()), (5, 10));
        let g2 = fixture("fig1-g2").unwrap();
        let r = analyze(&g2, &lim).unwrap();
        assert!(!r.ke && r.corona_critical);
        assert_eq!((2 * r.alpha, r.core.len() + r.corona.len()), (12, 13));
    }

    #[test]
    fn k1_report() {
        let k1 = Graph::empty(1).unwrap();
        let r = analyze(&k1, &Limits::default()).unwrap();
        assert_eq!((r.alpha, r.mu, r.ke), (1, 0, true));
        let one = VertexSet::singleton(0);
        assert!([r.core, r.corona, r.ker, r.diadem].iter().all(|&s| s == one));
        assert_eq!(r.graph_id, "@");
    }

    #[test]
    fn check_rejects_broken_reports() {
        let mut r = analyze(&Graph::empty(2).unwrap(), &Limits::default()).unwrap();
        r.id += 1;
        assert!(matches!(check(&r), Err(Error::Internal(_))));
    }

    #[test]
    fn text_uses_labels() {
        let g = fixture("fig3").unwrap();
        let text = render_text(&g, &analyze(&g, &Limits::default()).unwrap());
        assert!(text.contains("{x,y}"));
    }
}
