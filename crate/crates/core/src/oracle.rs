//! Reference computations by exhaustive scan of all `2^n` vertex subsets.
//!
//! Nothing here shares code with the fast paths beyond [`Graph`] itself and
//! the edge-subset matching search, so agreement is meaningful.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::matching::brute_force_mu;
use crate::set::VertexSet;

/// Largest order the subset scan accepts.
pub const ORACLE_MAX_N: usize = 20;

/// Edge cap passed to [`brute_force_mu`] by [`brute_force_profile`].
pub const ORACLE_MU_EDGE_CAP: usize = 256;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct OracleProfile {
    pub alpha: usize,
    pub omega: Vec<VertexSet>,
    pub core: VertexSet,
    pub corona: VertexSet,
    /// Maximum of `d(X)` over all subsets.
    pub d: i64,
    /// Maximum of `d(I)` over independent subsets.
    pub id: i64,
    /// Independent sets `I` with `d(I) = d`.
    pub critical_independent: Vec<VertexSet>,
    pub ker: VertexSet,
    pub diadem: VertexSet,
    pub mu: usize,
    pub ke: bool,
}

/// `N(X)` for every `X ⊆ V`, indexed by the bitmask of `X`.
fn all_neighborhoods(g: &Graph) -> Result<Vec<u64>> {
    let n = g.n();
    if n > ORACLE_MAX_N {
        return Err(Error::UnsupportedSize(n, ORACLE_MAX_N));
    }
    let mut nb = vec![0u64; 1 << n];
    for m in 1..1usize << n {
        let v = m.trailing_zeros() as usize;
        nb[m] = nb[m & (m - 1)] | g.neighbors(v).bits();
    }
    Ok(nb)
}

fn diff(m: usize, nb: u64) -> i64 {
    m.count_ones() as i64 - nb.count_ones() as i64
}

/// `d(G)` as the maximum of `|X| - |N(X)|` over all subsets.
pub fn brute_force_d(g: &Graph) -> Result<i64> {
    let nb = all_neighborhoods(g)?;
    Ok(nb.iter().enumerate().map(|(m, &b)| diff(m, b)).max().unwrap_or(0))
}

/// Every quantity of interest, straight from the definitions.
pub fn brute_force_profile(g: &Graph) -> Result<OracleProfile> {
    let nb = all_neighborhoods(g)?;
    let mut d = i64::MIN;
    let mut ind: Vec<(VertexSet, i64)> = Vec::new();
    for (m, &b) in nb.iter().enumerate() {
        let dm = diff(m, b);
        d = d.max(dm);
        if b & m as u64 == 0 {
            ind.push((VertexSet::from_bits(m as u64), dm));
        }
    }
    let alpha = ind.iter().map(|(s, _)| s.len()).max().unwrap_or(0);
    let id = ind.iter().map(|&(_, x)| x).max().unwrap_or(0);
    let mut omega: Vec<VertexSet> = ind.iter().map(|&(s, _)| s).filter(|s| s.len() == alpha).collect();
    omega.sort_by(|a, b| a.cmp_lex(*b));
    let mut crit: Vec<VertexSet> = ind.iter().filter(|&&(_, x)| x == d).map(|&(s, _)| s).collect();
    crit.sort_by(|a, b| a.cmp_lex(*b));
    let meet = |sets: &[VertexSet]| sets.iter().fold(VertexSet::full(g.n()), |a, &s| a & s);
    let join = |sets: &[VertexSet]| sets.iter().fold(VertexSet::EMPTY, |a, &s| a | s);
    let mu = brute_force_mu(g, ORACLE_MU_EDGE_CAP)?;
    Ok(OracleProfile {
        alpha,
        core: meet(&omega),
        corona: join(&omega),
        omega,
        d,
        id,
        ker: if crit.is_empty() { VertexSet::EMPTY } else { meet(&crit) },
        diadem: join(&crit),
        critical_independent: crit,
        mu,
        ke: alpha + mu == g.n(),
    })
}
