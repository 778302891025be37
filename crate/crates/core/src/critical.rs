//! Critical sets.
//!
//! `d(G)` is the maximum of `d(X) = |X| - |N(X)|` over all vertex sets. With
//! `X` on the left and the whole vertex set on the right, `N(X)` is exactly the
//! neighborhood of `X` in the bipartite double cover `B(G)`, so Hall's deficiency
//! formula gives `d(G) = n - μ(B(G))`. [`critical_difference`] uses that identity;
//! [`independence_critical_difference`] computes `id(G)` by enumeration, and the
//! two agree on every graph.
//!
//! A set is critical when it attains `d(G)`; `ker` and `diadem` are the
//! intersection and union of all critical independent sets.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::independence::{intersection_of, matching_into, union_of};
use crate::matching::{bipartite_pairs, Matching};
use crate::set::VertexSet;
use crate::Limits;

/// `d(G)`, via a maximum matching of the bipartite double cover.
pub fn critical_difference(g: &Graph) -> i64 {
    let matched = bipartite_pairs(g.vertices(), |v| g.neighbors(v)).len();
    g.n() as i64 - matched as i64
}

/// `id(G) = max { d(I) : I independent }`, by pruned enumeration.
pub fn independence_critical_difference(g: &Graph) -> i64 {
    fn go(g: &Graph, cur: VertexSet, cand: VertexSet, best: &mut i64) {
        let nb = g.neighborhood(cur).len() as i64;
        let here = cur.len() as i64 - nb;
        if here > *best {
            *best = here;
        }
        if cur.len() as i64 + cand.len() as i64 - nb <= *best {
            return;
        }
        for v in cand {
            let later = VertexSet::from_bits(cand.bits() & u64::MAX.checked_shl(v as u32 + 1).unwrap_or(0));
            go(g, cur.with(v), later - g.neighbors(v), best);
        }
    }
    let mut best = 0;
    go(g, VertexSet::EMPTY, g.vertices(), &mut best);
    best
}

/// `d(G)` by both routes; disagreement is an internal error.
pub fn critical_difference_checked(g: &Graph) -> Result<i64> {
    let d = critical_difference(g);
    let id = independence_critical_difference(g);
    if d != id {
        return Err(Error::Internal(format!("d(G) = {d} via double cover but id(G) = {id}")));
    }
    Ok(d)
}

/// Whether `x` attains `d(G)`. Applies to arbitrary vertex sets.
pub fn is_critical(g: &Graph, x: VertexSet) -> bool {
    g.difference(x) == critical_difference(g)
}

/// All critical independent sets for a known `d = d(G)`, sorted lexicographically.
pub(crate) fn critical_independent_sets_with(g: &Graph, d: i64, limits: &Limits) -> Result<Vec<VertexSet>> {
    struct Ctx<'a> {
        g: &'a Graph,
        d: i64,
        cap: usize,
        out: Vec<VertexSet>,
    }
    fn go(cx: &mut Ctx, cur: VertexSet, cand: VertexSet) -> Result<()> {
        let nb = cx.g.neighborhood(cur).len() as i64;
        // no extension by a subset of cand can beat |cur| + |cand| - |N(cur)|
        if cur.len() as i64 + cand.len() as i64 - nb < cx.d {
            return Ok(());
        }
        if cur.len() as i64 - nb == cx.d {
            if cx.out.len() == cx.cap {
                return Err(Error::EnumerationCap {
                    what: "critical independent sets",
                    cap: cx.cap,
                });
            }
            cx.out.push(cur);
        }
        for v in cand {
            let later = VertexSet::from_bits(cand.bits() & u64::MAX.checked_shl(v as u32 + 1).unwrap_or(0));
            go(cx, cur.with(v), later - cx.g.neighbors(v))?;
        }
        Ok(())
    }
    let mut cx = Ctx {
        g,
        d,
        cap: limits.set_cap,
        out: Vec::new(),
    };
    go(&mut cx, VertexSet::EMPTY, g.vertices())?;
    let mut out = cx.out;
    out.sort_by(|a, b| a.cmp_lex(*b));
    Ok(out)
}

/// Every independent set `I` with `d(I) = d(G)`.
pub fn enumerate_critical_independent_sets(g: &Graph, limits: &Limits) -> Result<Vec<VertexSet>> {
    critical_independent_sets_with(g, critical_difference(g), limits)
}

/// Intersection of `family` (the critical independent sets), checked to be
/// critical itself and minimal: dropping any one vertex loses criticality.
pub(crate) fn kernel_of(g: &Graph, d: i64, family: &[VertexSet]) -> Result<VertexSet> {
    if family.is_empty() {
        return Err(Error::Internal("graph has no critical independent set".into()));
    }
    let ker = intersection_of(family);
    if g.difference(ker) != d {
        return Err(Error::Internal(format!(
            "ker {} has difference {} but d(G) = {d}",
            g.render(ker),
            g.difference(ker)
        )));
    }
    if let Some(v) = ker.iter().find(|&v| g.difference(ker.without(v)) == d) {
        return Err(Error::Internal(format!(
            "ker {} is not minimal: dropping {} stays critical",
            g.render(ker),
            g.label(v)
        )));
    }
    Ok(ker)
}

/// `ker(G)`, the unique minimal critical independent set.
pub fn kernel(g: &Graph, limits: &Limits) -> Result<VertexSet> {
    let d = critical_difference(g);
    kernel_of(g, d, &critical_independent_sets_with(g, d, limits)?)
}

/// `diadem(G)`, the union of all critical independent sets.
pub fn diadem(g: &Graph, limits: &Limits) -> Result<VertexSet> {
    Ok(union_of(&enumerate_critical_independent_sets(g, limits)?))
}

/// Largest critical independent set; ties go to the lexicographically
/// smallest one. `family` must be sorted lexicographically.
pub(crate) fn max_critical_of(family: &[VertexSet]) -> VertexSet {
    let best = family.iter().map(|s| s.len()).max().unwrap_or(0);
    family.iter().copied().find(|s| s.len() == best).unwrap_or_default()
}

pub fn max_critical_independent_set(g: &Graph, limits: &Limits) -> Result<VertexSet> {
    Ok(max_critical_of(&enumerate_critical_independent_sets(g, limits)?))
}

/// A matching from `N(S)` into `S` for a critical independent set `S`.
/// One always exists; not finding it is an internal error.
pub fn neighborhood_matching(g: &Graph, s: VertexSet) -> Result<Matching> {
    if !g.is_independent(s) {
        return Err(Error::Precondition(format!("{} is not independent", g.render(s))));
    }
    let d = critical_difference(g);
    if g.difference(s) != d {
        return Err(Error::Precondition(format!(
            "{} has difference {} but d(G) = {d}",
            g.render(s),
            g.difference(s)
        )));
    }
    neighborhood_matching_unchecked(g, s)
}

pub(crate) fn neighborhood_matching_unchecked(g: &Graph, s: VertexSet) -> Result<Matching> {
    let ns = g.neighborhood(s);
    matching_into(g, ns, s).ok_or_else(|| {
        Error::Internal(format!(
            "no matching from N(S) = {} into critical S = {}",
            g.render(ns),
            g.render(s)
        ))
    })
}

/// Everything about the critical structure of one graph.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CriticalProfile {
    pub d: i64,
    pub id: i64,
    pub ker: VertexSet,
    pub diadem: VertexSet,
    pub max_critical_independent: VertexSet,
    pub critical_independent_count: usize,
}

/// Computes the full profile; `d = id`, `ker ⊆ diadem` and criticality of
/// `diadem` are asserted.
pub fn critical_profile(g: &Graph, limits: &Limits) -> Result<CriticalProfile> {
    let d = critical_difference_checked(g)?;
    let family = critical_independent_sets_with(g, d, limits)?;
    let ker = kernel_of(g, d, &family)?;
    let diadem = union_of(&family);
    if !ker.is_subset(diadem) || g.difference(diadem) != d {
        return Err(Error::Internal(format!(
            "diadem {} is not a critical superset of ker {}",
            g.render(diadem),
            g.render(ker)
        )));
    }
    Ok(CriticalProfile {
        d,
        id: d,
        ker,
        diadem,
        max_critical_independent: max_critical_of(&family),
        critical_independent_count: family.len(),
    })
}
