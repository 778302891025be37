//! Executable claim table.
//!
//! Each [`ClaimId`] is a predicate over a graph (and, for claims quantified
//! over families `Λ ⊆ Ω(G)`, over the families chosen by the sampling policy
//! below). Evaluation produces a [`ClaimOutcome`] whose witness holds every
//! quantity needed to re-check the verdict by hand.
//!
//! Family policy: when `|Ω| ≤ 12` every nonempty `Λ ⊆ Ω` is used, otherwise
//! all singletons, all pairs and `Λ = Ω`. Families with the same `(⋂Λ, ⋃Λ)`
//! are evaluated once.

use std::cell::OnceCell;
use std::collections::{BTreeMap, HashMap, HashSet};
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::critical::{critical_difference, critical_independent_sets_with};
use crate::error::{Error, Result};
use crate::formats::graph_id;
use crate::graph::Graph;
use crate::independence::{
    can_match_into, independent_sets, intersection_of, matching_into, maximum_independent_sets, union_of,
};
use crate::matching::matching_number;
use crate::set::VertexSet;
use crate::Limits;

macro_rules! witness {
    ($($k:expr => $v:expr),* $(,)?) => {{
        #[allow(unused_mut)]
        let mut w = BTreeMap::new();
        $( w.insert(String::from($k), json!($v)); )*
        w
    }};
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum ClaimId {
    Berge,
    MatchLemma,
    CritExtends,
    NsMatching,
    KeDiff,
    KeChar,
    Lattice,
    KerCore,
    KerMin,
    DiademCrit,
    KeCoreCoronaCrit,
    UnionDiff,
    KerEmptyProp,
    UnionCritImpl,
    CoronaCritImpl,
    KeCardinality,
    KeIffUnion,
    KeIffPair,
    KeIffAug,
    KeDiadem,
    KeIffCorona,
    CoronaLb,
}

impl ClaimId {
    pub const ALL: [ClaimId; 22] = [
        ClaimId::Berge,
        ClaimId::MatchLemma,
        ClaimId::CritExtends,
        ClaimId::NsMatching,
        ClaimId::KeDiff,
        ClaimId::KeChar,
        ClaimId::Lattice,
        ClaimId::KerCore,
        ClaimId::KerMin,
        ClaimId::DiademCrit,
        ClaimId::KeCoreCoronaCrit,
        ClaimId::UnionDiff,
        ClaimId::KerEmptyProp,
        ClaimId::UnionCritImpl,
        ClaimId::CoronaCritImpl,
        ClaimId::KeCardinality,
        ClaimId::KeIffUnion,
        ClaimId::KeIffPair,
        ClaimId::KeIffAug,
        ClaimId::KeDiadem,
        ClaimId::KeIffCorona,
        ClaimId::CoronaLb,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            ClaimId::Berge => "berge",
            ClaimId::MatchLemma => "match-lemma",
            ClaimId::CritExtends => "crit-extends",
            ClaimId::NsMatching => "ns-matching",
            ClaimId::KeDiff => "ke-diff",
            ClaimId::KeChar => "ke-char",
            ClaimId::Lattice => "lattice",
            ClaimId::KerCore => "ker-core",
            ClaimId::KerMin => "ker-min",
            ClaimId::DiademCrit => "diadem-crit",
            ClaimId::KeCoreCoronaCrit => "ke-core-corona-crit",
            ClaimId::UnionDiff => "union-diff",
            ClaimId::KerEmptyProp => "ker-empty-prop",
            ClaimId::UnionCritImpl => "union-crit-impl",
            ClaimId::CoronaCritImpl => "corona-crit-impl",
            ClaimId::KeCardinality => "ke-cardinality",
            ClaimId::KeIffUnion => "ke-iff-union",
            ClaimId::KeIffPair => "ke-iff-pair",
            ClaimId::KeIffAug => "ke-iff-aug",
            ClaimId::KeDiadem => "ke-diadem",
            ClaimId::KeIffCorona => "ke-iff-corona",
            ClaimId::CoronaLb => "corona-lb",
        }
    }

    /// One-line statement of the predicate.
    pub fn statement(self) -> &'static str {
        match self {
            ClaimId::Berge => "independent X is maximum iff every independent S disjoint from X can be matched into X",
            ClaimId::MatchLemma => "for A independent and Λ ⊆ Ω nonempty, A − ⋂Λ can be matched into ⋃Λ − A",
            ClaimId::CritExtends => "every critical independent set lies inside some maximum independent set",
            ClaimId::NsMatching => "every critical independent set S admits a matching from N(S) into S",
            ClaimId::KeDiff => "KE implies d(G) = α − μ",
            ClaimId::KeChar => "KE iff some S ∈ Ω is critical iff every S ∈ Ω is critical",
            ClaimId::Lattice => "unions and intersections of critical sets are critical",
            ClaimId::KerCore => "ker ⊆ core",
            ClaimId::KerMin => "ker is the unique minimal critical independent set",
            ClaimId::DiademCrit => "diadem is critical",
            ClaimId::KeCoreCoronaCrit => {
                "KE implies core and corona critical, and corona = ⋃ of maximum critical independent sets"
            }
            ClaimId::UnionDiff => "d(⋃Λ) = |⋂Λ| + |⋃Λ| − n ≥ max d(S) over S ∈ Λ",
            ClaimId::KerEmptyProp => "ker = ∅ and A critical independent imply |⋂{S ∈ Ω : A ∩ S = ∅}| ≥ |A|",
            ClaimId::UnionCritImpl => {
                "⋃Λ critical implies |N(⋂Λ)| + |⋃Λ| = n and ⋂Λ critical; ⋂Λ critical implies |N(⋂Λ)| + |⋃Λ| ≤ n and d(⋂Λ) ≥ 2α − n"
            }
            ClaimId::CoronaCritImpl => "corona critical implies |corona| + |N(core)| = n and core critical",
            ClaimId::KeCardinality => "KE implies |⋂Λ| + |⋃Λ| = 2α for every Λ, in particular |core| + |corona| = 2α",
            ClaimId::KeIffUnion => "KE iff ⋃Λ is critical and |⋂Λ| + |⋃Λ| = 2α",
            ClaimId::KeIffPair => "KE iff S1 ∪ S2 critical for all S1, S2 ∈ Ω iff for some S1, S2 ∈ Ω",
            ClaimId::KeIffAug => "KE iff every S ∈ Ω has an independent A with S ∪ A critical iff some S ∈ Ω does",
            ClaimId::KeDiadem => "diadem ⊆ corona; KE implies diadem = corona and |ker| + |diadem| ≤ 2α",
            ClaimId::KeIffCorona => {
                "KE iff (diadem = corona and |core| + |corona| = 2α) iff (corona critical and |core| + |corona| = 2α)"
            }
            ClaimId::CoronaLb => "2α ≤ |core| + |corona|",
        }
    }

    /// Whether the claim quantifies over families `Λ ⊆ Ω`.
    pub fn uses_lambda(self) -> bool {
        matches!(
            self,
            ClaimId::MatchLemma
                | ClaimId::UnionDiff
                | ClaimId::UnionCritImpl
                | ClaimId::KeCardinality
                | ClaimId::KeIffUnion
        )
    }
}

impl fmt::Display for ClaimId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for ClaimId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        ClaimId::ALL
            .into_iter()
            .find(|c| c.as_str() == s)
            .ok_or_else(|| Error::UnknownClaim(s.to_owned()))
    }
}

/// Parses `all` or a comma-separated list of claim ids.
pub fn parse_claims(spec: &str) -> Result<Vec<ClaimId>> {
    if spec.trim() == "all" {
        return Ok(ClaimId::ALL.to_vec());
    }
    let mut out = Vec::new();
    for part in spec.split(',').map(str::trim).filter(|s| !s.is_empty()) {
        let id: ClaimId = part.parse()?;
        if !out.contains(&id) {
            out.push(id);
        }
    }
    if out.is_empty() {
        return Err(Error::UnknownClaim(spec.to_owned()));
    }
    Ok(out)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Status {
    Holds,
    Fails,
    NotApplicable,
}

impl Status {
    pub fn as_str(self) -> &'static str {
        match self {
            Status::Holds => "holds",
            Status::Fails => "fails",
            Status::NotApplicable => "not-applicable",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ClaimOutcome {
    pub claim_id: ClaimId,
    pub status: Status,
    pub witness: BTreeMap<String, Value>,
    pub graph_id: String,
}

/// One family class: all sampled `Λ` sharing `(⋂Λ, ⋃Λ)`.
#[derive(Clone, Debug)]
struct LambdaClass {
    inter: VertexSet,
    union: VertexSet,
    /// Largest `max_{S∈Λ} d(S)` among the families in the class.
    max_member_d: i64,
    /// First family seen, as indices into `Ω`.
    example: Vec<usize>,
}

/// Most (A, Λ) pairs the matching-lemma check visits before sampling `A`.
pub const MATCH_LEMMA_BUDGET: usize = 4_000_000;

/// Largest `n` for which all `2^n` vertex subsets are scanned for the lattice claim.
pub const LATTICE_SCAN_MAX_N: usize = 20;

/// Everything the claims share about one graph, computed once.
pub struct ClaimContext<'g> {
    g: &'g Graph,
    limits: Limits,
    pub graph_id: String,
    pub alpha: usize,
    pub mu: usize,
    pub ke: bool,
    pub d: i64,
    pub omega: Vec<VertexSet>,
    pub core: VertexSet,
    pub corona: VertexSet,
    pub critical_independent: Vec<VertexSet>,
    pub ker: VertexSet,
    pub diadem: VertexSet,
    independent: OnceCell<Vec<VertexSet>>,
    lambdas: OnceCell<Vec<LambdaClass>>,
}

impl<'g> ClaimContext<'g> {
    pub fn new(g: &'g Graph, limits: &Limits) -> Result<Self> {
        let omega = maximum_independent_sets(g, limits)?;
        let d = critical_difference(g);
        let crit = critical_independent_sets_with(g, d, limits)?;
        if crit.is_empty() {
            return Err(Error::Internal(format!(
                "no independent set attains d(G) = {d} on {}",
                graph_id(g)
            )));
        }
        let mu = matching_number(g);
        Ok(ClaimContext {
            g,
            limits: *limits,
            graph_id: graph_id(g),
            alpha: omega.alpha,
            mu,
            ke: omega.alpha + mu == g.n(),
            d,
            core: omega.intersection(),
            corona: omega.union(),
            omega: omega.sets,
            ker: intersection_of(&crit),
            diadem: union_of(&crit),
            critical_independent: crit,
            independent: OnceCell::new(),
            lambdas: OnceCell::new(),
        })
    }

    pub fn graph(&self) -> &Graph {
        self.g
    }

    fn n(&self) -> usize {
        self.g.n()
    }

    fn dif(&self, x: VertexSet) -> i64 {
        self.g.difference(x)
    }

    fn crit(&self, x: VertexSet) -> bool {
        self.dif(x) == self.d
    }

    fn two_alpha(&self) -> usize {
        2 * self.alpha
    }

    fn independent(&self) -> Result<&[VertexSet]> {
        if self.independent.get().is_none() {
            let _ = self.independent.set(independent_sets(self.g, &self.limits)?);
        }
        Ok(self.independent.get().expect("just set"))
    }

    fn lambdas(&self) -> &[LambdaClass] {
        self.lambdas.get_or_init(|| {
            let k = self.omega.len();
            let families: Box<dyn Iterator<Item = Vec<usize>>> = if k <= 12 {
                Box::new((1u32..1 << k).map(move |m| (0..k).filter(|&i| m >> i & 1 == 1).collect()))
            } else {
                let singles = (0..k).map(|i| vec![i]);
                let pairs = (0..k).flat_map(move |i| (i + 1..k).map(move |j| vec![i, j]));
                Box::new(singles.chain(pairs).chain(std::iter::once((0..k).collect())))
            };
            self.classes(families)
        })
    }

    fn classes(&self, families: impl Iterator<Item = Vec<usize>>) -> Vec<LambdaClass> {
        let ds: Vec<i64> = self.omega.iter().map(|&s| self.dif(s)).collect();
        let mut index: HashMap<(VertexSet, VertexSet), usize> = HashMap::new();
        let mut out: Vec<LambdaClass> = Vec::new();
        for fam in families {
            let sets: Vec<VertexSet> = fam.iter().map(|&i| self.omega[i]).collect();
            let key = (intersection_of(&sets), union_of(&sets));
            let max_d = fam.iter().map(|&i| ds[i]).max().expect("nonempty family");
            match index.get(&key) {
                Some(&at) => out[at].max_member_d = out[at].max_member_d.max(max_d),
                None => {
                    index.insert(key, out.len());
                    out.push(LambdaClass {
                        inter: key.0,
                        union: key.1,
                        max_member_d: max_d,
                        example: fam,
                    });
                }
            }
        }
        out
    }

    fn explicit_lambda(&self, lambda: &[VertexSet]) -> Result<Vec<LambdaClass>> {
        if lambda.is_empty() {
            return Err(Error::Precondition("Λ must contain at least one set".into()));
        }
        let mut idx = Vec::new();
        for s in lambda {
            let i = self.omega.iter().position(|t| t == s).ok_or_else(|| {
                Error::Precondition(format!("{} is not a maximum independent set", self.g.render(*s)))
            })?;
            if !idx.contains(&i) {
                idx.push(i);
            }
        }
        idx.sort_unstable();
        Ok(self.classes(std::iter::once(idx)))
    }

    fn family_json(&self, cls: &LambdaClass) -> Value {
        json!(cls.example.iter().map(|&i| self.omega[i]).collect::<Vec<_>>())
    }

    fn outcome(&self, claim: ClaimId, status: Status, mut witness: BTreeMap<String, Value>) -> ClaimOutcome {
        if status == Status::Fails {
            witness.insert("severity".into(), json!("implementation-bug"));
        }
        ClaimOutcome {
            claim_id: claim,
            status,
            witness,
            graph_id: self.graph_id.clone(),
        }
    }

    /// Evaluates one claim. `lambda` restricts family-quantified claims to a
    /// single `Λ`, whose members must belong to `Ω(G)`.
    pub fn evaluate(&self, claim: ClaimId, lambda: Option<&[VertexSet]>) -> Result<ClaimOutcome> {
        let owned;
        let lambdas: &[LambdaClass] = match lambda {
            Some(l) if claim.uses_lambda() => {
                owned = self.explicit_lambda(l)?;
                &owned
            }
            _ if claim.uses_lambda() => self.lambdas(),
            _ => &[],
        };
        let (status, w) = match claim {
            ClaimId::Berge => self.berge()?,
            ClaimId::MatchLemma => self.match_lemma(lambdas)?,
            ClaimId::CritExtends => self.crit_extends(),
            ClaimId::NsMatching => self.ns_matching(),
            ClaimId::KeDiff => self.ke_diff(),
            ClaimId::KeChar => self.ke_char(),
            ClaimId::Lattice => self.lattice(),
            ClaimId::KerCore => self.ker_core(),
            ClaimId::KerMin => self.ker_min(),
            ClaimId::DiademCrit => self.diadem_crit(),
            ClaimId::KeCoreCoronaCrit => self.ke_core_corona_crit(),
            ClaimId::UnionDiff => self.union_diff(lambdas),
            ClaimId::KerEmptyProp => self.ker_empty_prop(),
            ClaimId::UnionCritImpl => self.union_crit_impl(lambdas),
            ClaimId::CoronaCritImpl => self.corona_crit_impl(),
            ClaimId::KeCardinality => self.ke_cardinality(lambdas),
            ClaimId::KeIffUnion => self.ke_iff_union(lambdas),
            ClaimId::KeIffPair => self.ke_iff_pair(),
            ClaimId::KeIffAug => self.ke_iff_aug()?,
            ClaimId::KeDiadem => self.ke_diadem(),
            ClaimId::KeIffCorona => self.ke_iff_corona(),
            ClaimId::CoronaLb => self.corona_lb(),
        };
        Ok(self.outcome(claim, status, w))
    }

    pub fn evaluate_all(&self, claims: &[ClaimId]) -> Result<Vec<ClaimOutcome>> {
        claims.iter().map(|&c| self.evaluate(c, None)).collect()
    }
}

type Verdict = (Status, BTreeMap<String, Value>);

fn verdict(ok: bool, w: BTreeMap<String, Value>) -> Verdict {
    (if ok { Status::Holds } else { Status::Fails }, w)
}

impl ClaimContext<'_> {
    /// First independent `S ⊆ V − X` that cannot be matched into `X`.
    /// Matchability passes to subsets, so the search only grows sets that match.
    fn unmatchable_into(&self, x: VertexSet) -> Option<VertexSet> {
        fn go(cx: &ClaimContext, x: VertexSet, cur: VertexSet, cand: VertexSet) -> Option<VertexSet> {
            for v in cand {
                let next = cur.with(v);
                if !can_match_into(cx.g, next, x) {
                    return Some(next);
                }
                let later = VertexSet::from_bits(cand.bits() & u64::MAX.checked_shl(v as u32 + 1).unwrap_or(0));
                if let Some(bad) = go(cx, x, next, later - cx.g.neighbors(v)) {
                    return Some(bad);
                }
            }
            None
        }
        go(self, x, VertexSet::EMPTY, self.g.vertices() - x)
    }

    fn berge(&self) -> Result<Verdict> {
        let ind = self.independent()?;
        for &x in ind {
            let maximum = x.len() == self.alpha;
            let bad = self.unmatchable_into(x);
            if maximum == bad.is_some() {
                return Ok(verdict(
                    false,
                    witness! {
                        "x" => x, "alpha" => self.alpha, "x_is_maximum" => maximum,
                        "unmatchable_s" => bad,
                        "n_of_s" => bad.map(|s| self.g.neighborhood(s)),
                    },
                ));
            }
        }
        Ok(verdict(true, witness! { "independent_sets_checked" => ind.len(), "alpha" => self.alpha }))
    }

    fn match_lemma(&self, lambdas: &[LambdaClass]) -> Result<Verdict> {
        let ind = self.independent()?;
        let total = ind.len() * lambdas.len().max(1);
        let sampled = total > MATCH_LEMMA_BUDGET;
        let mut pool: Vec<VertexSet> = if sampled {
            let stride = total.div_ceil(MATCH_LEMMA_BUDGET);
            ind.iter().copied().step_by(stride).collect()
        } else {
            ind.to_vec()
        };
        if sampled {
            pool.extend(self.omega.iter().copied());
            pool.extend(self.critical_independent.iter().copied());
            let mut seen = HashSet::new();
            pool.retain(|s| seen.insert(*s));
        }
        let mut done: HashSet<(VertexSet, VertexSet)> = HashSet::new();
        for cls in lambdas {
            for &a in &pool {
                let from = a - cls.inter;
                let into = cls.union - a;
                if from.is_empty() || !done.insert((from, into)) {
                    continue;
                }
                if !can_match_into(self.g, from, into) {
                    return Ok(verdict(
                        false,
                        witness! {
                            "a" => a, "lambda" => self.family_json(cls),
                            "intersection" => cls.inter, "union" => cls.union,
                            "from" => from, "into" => into,
                            "matchable_size" => crate::matching::bipartite_pairs(from, |v| self.g.neighbors(v) & into).len(),
                        },
                    ));
                }
            }
        }
        Ok(verdict(
            true,
            witness! {
                "independent_sets_used" => pool.len(), "independent_sets_total" => ind.len(),
                "lambda_classes" => lambdas.len(), "sampled" => sampled,
            },
        ))
    }

    fn crit_extends(&self) -> Verdict {
        for &i in &self.critical_independent {
            if !self.omega.iter().any(|&s| i.is_subset(s)) {
                return verdict(false, witness! { "critical_independent" => i, "alpha" => self.alpha, "omega" => &self.omega });
            }
        }
        verdict(true, witness! { "critical_independent_sets" => self.critical_independent.len() })
    }

    fn ns_matching(&self) -> Verdict {
        for &s in &self.critical_independent {
            let ns = self.g.neighborhood(s);
            if matching_into(self.g, ns, s).is_none() {
                return verdict(false, witness! { "s" => s, "n_of_s" => ns, "d" => self.d });
            }
        }
        let m = matching_into(self.g, self.g.neighborhood(self.ker), self.ker);
        verdict(
            true,
            witness! {
                "critical_independent_sets" => self.critical_independent.len(),
                "ker" => self.ker, "ker_matching" => m.map(|m| m.edges().to_vec()),
            },
        )
    }

    fn ke_diff(&self) -> Verdict {
        let w = witness! { "ke" => self.ke, "d" => self.d, "alpha" => self.alpha, "mu" => self.mu, "n" => self.n() };
        if !self.ke {
            return (Status::NotApplicable, w);
        }
        verdict(self.d == self.alpha as i64 - self.mu as i64, w)
    }

    fn ke_char(&self) -> Verdict {
        let some = self.omega.iter().copied().find(|&s| self.crit(s));
        let non = self.omega.iter().copied().find(|&s| !self.crit(s));
        let (ii, iii) = (some.is_some(), non.is_none());
        verdict(
            self.ke == ii && ii == iii,
            witness! {
                "ke" => self.ke, "alpha" => self.alpha, "mu" => self.mu, "d" => self.d,
                "some_critical" => ii, "all_critical" => iii,
                "critical_member" => some, "non_critical_member" => non,
                "non_critical_difference" => non.map(|s| self.dif(s)),
            },
        )
    }

    /// All critical vertex sets, by a full subset scan.
    fn critical_sets(&self) -> Option<Vec<VertexSet>> {
        let n = self.n();
        if n > LATTICE_SCAN_MAX_N {
            return None;
        }
        let mut nb = vec![0u64; 1 << n];
        let mut out = Vec::new();
        for m in 0..1usize << n {
            if m > 0 {
                let v = m.trailing_zeros() as usize;
                nb[m] = nb[m & (m - 1)] | self.g.neighbors(v).bits();
            }
            if (m.count_ones() as i64) - (nb[m].count_ones() as i64) == self.d {
                out.push(VertexSet::from_bits(m as u64));
            }
        }
        Some(out)
    }

    fn lattice(&self) -> Verdict {
        let (family, scope) = match self.critical_sets() {
            Some(f) => (f, "all-critical-sets"),
            None => (self.critical_independent.clone(), "critical-independent-sets"),
        };
        for (i, &a) in family.iter().enumerate() {
            for &b in &family[i + 1..] {
                let (u, x) = (a | b, a & b);
                if !self.crit(u) || !self.crit(x) {
                    return verdict(
                        false,
                        witness! {
                            "a" => a, "b" => b, "d" => self.d,
                            "d_union" => self.dif(u), "d_intersection" => self.dif(x),
                        },
                    );
                }
            }
        }
        verdict(true, witness! { "scope" => scope, "critical_sets" => family.len(), "d" => self.d })
    }

    fn ker_core(&self) -> Verdict {
        verdict(self.ker.is_subset(self.core), witness! { "ker" => self.ker, "core" => self.core })
    }

    fn ker_min(&self) -> Verdict {
        let fam = &self.critical_independent;
        let minimal: Vec<VertexSet> = fam
            .iter()
            .copied()
            .filter(|&s| !fam.iter().any(|&t| t != s && t.is_subset(s)))
            .collect();
        let ok = minimal == [self.ker] && self.crit(self.ker) && self.g.is_independent(self.ker);
        verdict(
            ok,
            witness! {
                "ker" => self.ker, "d_ker" => self.dif(self.ker), "d" => self.d,
                "minimal_critical_independent" => minimal,
            },
        )
    }

    fn diadem_crit(&self) -> Verdict {
        verdict(
            self.crit(self.diadem),
            witness! { "diadem" => self.diadem, "d_diadem" => self.dif(self.diadem), "d" => self.d },
        )
    }

    fn ke_core_corona_crit(&self) -> Verdict {
        let best = self.critical_independent.iter().map(|s| s.len()).max().unwrap_or(0);
        let maxima: Vec<VertexSet> =
            self.critical_independent.iter().copied().filter(|s| s.len() == best).collect();
        let max_union = union_of(&maxima);
        let w = witness! {
            "ke" => self.ke, "d" => self.d,
            "core" => self.core, "d_core" => self.dif(self.core),
            "corona" => self.corona, "d_corona" => self.dif(self.corona),
            "max_critical_independent_union" => max_union, "max_critical_independent_size" => best,
        };
        if !self.ke {
            return (Status::NotApplicable, w);
        }
        verdict(self.crit(self.core) && self.crit(self.corona) && max_union == self.corona, w)
    }

    fn union_diff(&self, lambdas: &[LambdaClass]) -> Verdict {
        let n = self.n() as i64;
        for cls in lambdas {
            let lhs = self.dif(cls.union);
            let rhs = cls.inter.len() as i64 + cls.union.len() as i64 - n;
            if lhs != rhs || lhs < cls.max_member_d {
                return verdict(
                    false,
                    witness! {
                        "lambda" => self.family_json(cls), "intersection" => cls.inter, "union" => cls.union,
                        "d_union" => lhs, "formula" => rhs, "max_member_d" => cls.max_member_d, "n" => n,
                    },
                );
            }
        }
        verdict(
            true,
            witness! {
                "lambda_classes" => lambdas.len(),
                "d_corona" => self.dif(self.corona), "core_size" => self.core.len(),
                "corona_size" => self.corona.len(), "n" => n,
                "two_alpha_minus_n" => self.two_alpha() as i64 - n,
            },
        )
    }

    fn ker_empty_prop(&self) -> Verdict {
        if !self.ker.is_empty() {
            return (Status::NotApplicable, witness! { "ker" => self.ker });
        }
        let mut checked = 0usize;
        for &a in &self.critical_independent {
            let lam: Vec<VertexSet> = self.omega.iter().copied().filter(|s| s.is_disjoint(a)).collect();
            if lam.is_empty() {
                continue;
            }
            checked += 1;
            let inter = intersection_of(&lam);
            if inter.len() < a.len() {
                return verdict(
                    false,
                    witness! { "a" => a, "lambda" => lam, "intersection" => inter, "d" => self.d },
                );
            }
        }
        let w = witness! { "ker" => self.ker, "instances" => checked };
        if checked == 0 {
            return (Status::NotApplicable, w);
        }
        verdict(true, w)
    }

    fn union_crit_impl(&self, lambdas: &[LambdaClass]) -> Verdict {
        let n = self.n();
        let mut fired = (0usize, 0usize);
        for cls in lambdas {
            let n_inter = self.g.neighborhood(cls.inter).len();
            let fail = |part: &str| {
                verdict(
                    false,
                    witness! {
                        "part" => part, "lambda" => self.family_json(cls),
                        "intersection" => cls.inter, "union" => cls.union,
                        "n_of_intersection_size" => n_inter, "n" => n, "d" => self.d,
                        "d_union" => self.dif(cls.union), "d_intersection" => self.dif(cls.inter),
                        "alpha" => self.alpha,
                    },
                )
            };
            if self.crit(cls.union) {
                fired.0 += 1;
                if n_inter + cls.union.len() != n || !self.crit(cls.inter) {
                    return fail("i");
                }
            }
            if self.crit(cls.inter) {
                fired.1 += 1;
                if n_inter + cls.union.len() > n || self.dif(cls.inter) < self.two_alpha() as i64 - n as i64 {
                    return fail("ii");
                }
            }
        }
        let w = witness! { "union_critical_instances" => fired.0, "intersection_critical_instances" => fired.1 };
        if fired == (0, 0) {
            return (Status::NotApplicable, w);
        }
        verdict(true, w)
    }

    fn corona_crit_impl(&self) -> Verdict {
        let n_core = self.g.neighborhood(self.core).len();
        let w = witness! {
            "corona" => self.corona, "d_corona" => self.dif(self.corona), "d" => self.d,
            "core" => self.core, "d_core" => self.dif(self.core), "n_of_core_size" => n_core, "n" => self.n(),
        };
        if !self.crit(self.corona) {
            return (Status::NotApplicable, w);
        }
        verdict(self.corona.len() + n_core == self.n() && self.crit(self.core), w)
    }

    fn ke_cardinality(&self, lambdas: &[LambdaClass]) -> Verdict {
        if !self.ke {
            return (Status::NotApplicable, witness! { "ke" => false });
        }
        let two_alpha = self.two_alpha();
        for cls in lambdas {
            if cls.inter.len() + cls.union.len() != two_alpha {
                return verdict(
                    false,
                    witness! {
                        "lambda" => self.family_json(cls), "intersection" => cls.inter,
                        "union" => cls.union, "two_alpha" => two_alpha,
                    },
                );
            }
        }
        verdict(
            self.core.len() + self.corona.len() == two_alpha,
            witness! {
                "lambda_classes" => lambdas.len(), "two_alpha" => two_alpha,
                "core_size" => self.core.len(), "corona_size" => self.corona.len(),
            },
        )
    }

    fn ke_iff_union(&self, lambdas: &[LambdaClass]) -> Verdict {
        let two_alpha = self.two_alpha();
        for cls in lambdas {
            let rhs = self.crit(cls.union) && cls.inter.len() + cls.union.len() == two_alpha;
            if rhs != self.ke {
                return verdict(
                    false,
                    witness! {
                        "ke" => self.ke, "lambda" => self.family_json(cls),
                        "intersection" => cls.inter, "union" => cls.union,
                        "d_union" => self.dif(cls.union), "d" => self.d, "two_alpha" => two_alpha,
                    },
                );
            }
        }
        verdict(true, witness! { "ke" => self.ke, "lambda_classes" => lambdas.len() })
    }

    fn ke_iff_pair(&self) -> Verdict {
        let mut critical_pair = None;
        let mut non_critical_pair = None;
        for (i, &s1) in self.omega.iter().enumerate() {
            for &s2 in &self.omega[i..] {
                let slot = if self.crit(s1 | s2) { &mut critical_pair } else { &mut non_critical_pair };
                if slot.is_none() {
                    *slot = Some([s1, s2]);
                }
            }
            if critical_pair.is_some() && non_critical_pair.is_some() {
                break;
            }
        }
        let (ii, iii) = (non_critical_pair.is_none(), critical_pair.is_some());
        verdict(
            self.ke == ii && ii == iii,
            witness! {
                "ke" => self.ke, "all_pairs_critical" => ii, "some_pair_critical" => iii,
                "critical_pair" => critical_pair, "non_critical_pair" => non_critical_pair,
            },
        )
    }

    fn ke_iff_aug(&self) -> Result<Verdict> {
        let ind = self.independent()?;
        // S ∪ A = S ∪ (A − S), so A disjoint from S covers every union
        let mut found: Option<(VertexSet, VertexSet)> = None;
        let mut stranded: Option<VertexSet> = None;
        for &s in &self.omega {
            let hit = ind.iter().copied().find(|&a| a.is_disjoint(s) && self.crit(s | a));
            match hit {
                Some(a) if found.is_none() => found = Some((s, a)),
                None if stranded.is_none() => stranded = Some(s),
                _ => {}
            }
            if found.is_some() && stranded.is_some() {
                break;
            }
        }
        let (ii, iii) = (stranded.is_none(), found.is_some());
        Ok(verdict(
            self.ke == ii && ii == iii,
            witness! {
                "ke" => self.ke, "every_s_augmentable" => ii, "some_s_augmentable" => iii,
                "augmented" => found.map(|(s, a)| json!({ "s": s, "a": a })),
                "s_without_augmentation" => stranded,
            },
        ))
    }

    fn ke_diadem(&self) -> Verdict {
        let sub = self.diadem.is_subset(self.corona);
        let eq = self.diadem == self.corona;
        let bound = self.ker.len() + self.diadem.len() <= self.two_alpha();
        verdict(
            sub && (!self.ke || (eq && bound)),
            witness! {
                "ke" => self.ke, "diadem" => self.diadem, "corona" => self.corona,
                "ker_size" => self.ker.len(), "diadem_size" => self.diadem.len(), "two_alpha" => self.two_alpha(),
            },
        )
    }

    fn ke_iff_corona(&self) -> Verdict {
        let sizes = self.core.len() + self.corona.len() == self.two_alpha();
        let ii = self.diadem == self.corona && sizes;
        let iii = self.crit(self.corona) && sizes;
        verdict(
            self.ke == ii && ii == iii,
            witness! {
                "ke" => self.ke, "diadem_equals_corona" => self.diadem == self.corona,
                "corona_critical" => self.crit(self.corona),
                "core_plus_corona" => self.core.len() + self.corona.len(), "two_alpha" => self.two_alpha(),
            },
        )
    }

    fn corona_lb(&self) -> Verdict {
        let total = self.core.len() + self.corona.len();
        verdict(
            self.two_alpha() <= total,
            witness! { "two_alpha" => self.two_alpha(), "core_plus_corona" => total },
        )
    }
}

/// Evaluates `claim` on `g`; see [`ClaimContext::evaluate`].
pub fn evaluate_claim(claim: ClaimId, g: &Graph, lambda: Option<&[VertexSet]>) -> Result<ClaimOutcome> {
    ClaimContext::new(g, &Limits::from_env())?.evaluate(claim, lambda)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures::{all_fixtures, fixture};
    use crate::generate::{make_graph, GraphSpec};

    fn all_on(g: &Graph) -> Vec<ClaimOutcome> {
        ClaimContext::new(g, &Limits::default())
            .unwrap()
            .evaluate_all(&ClaimId::ALL)
            .unwrap()
    }

    #[test]
    fn ids_round_trip() {
        for c in ClaimId::ALL {
            assert_eq!(c.as_str().parse::<ClaimId>().unwrap(), c);
            assert_eq!(serde_json::to_value(c).unwrap(), json!(c.as_str()));
        }
        assert!(matches!("nope".parse::<ClaimId>(), Err(Error::UnknownClaim(_))));
        assert_eq!(parse_claims("all").unwrap().len(), 22);
        assert_eq!(parse_claims("berge, ker-core,berge").unwrap(), vec![ClaimId::Berge, ClaimId::KerCore]);
        assert!(parse_claims("").is_err());
    }

    #[test]
    fn union_diff_on_fig1_g1() {
        let g = fixture("fig1-g1").unwrap();
        let cx = ClaimContext::new(&g, &Limits::default()).unwrap();
        let omega = cx.omega.clone();
        let out = cx.evaluate(ClaimId::UnionDiff, Some(&omega)).unwrap();
        assert_eq!(out.status, Status::Holds);
        assert_eq!(out.witness["d_corona"], json!(0));
        assert_eq!(out.witness["core_size"], json!(2));
        assert_eq!(out.witness["corona_size"], json!(8));
        assert_eq!(out.witness["n"], json!(10));
    }

    #[test]
    fn ke_char_on_k3() {
        let k3 = make_graph(&GraphSpec::Complete { n: 3 }).unwrap();
        let out = evaluate_claim(ClaimId::KeChar, &k3, None).unwrap();
        assert_eq!(out.status, Status::Holds);
        assert_eq!(out.witness["ke"], json!(false));
        assert_eq!(out.witness["some_critical"], json!(false));
        assert_eq!(out.witness["non_critical_difference"], json!(-1));
        assert_eq!(out.graph_id, "Bw");
    }

    #[test]
    fn every_claim_holds_on_fixtures() {
        for (name, g) in all_fixtures() {
            for out in all_on(&g) {
                assert_ne!(out.status, Status::Fails, "{name}: {} {:?}", out.claim_id, out.witness);
            }
        }
    }

    #[test]
    fn ker_core_holds_on_fixtures() {
        for (_, g) in all_fixtures() {
            assert_eq!(evaluate_claim(ClaimId::KerCore, &g, None).unwrap().status, Status::Holds);
        }
    }

    #[test]
    fn applicability() {
        let g1 = fixture("fig1-g1").unwrap();
        let cx = ClaimContext::new(&g1, &Limits::default()).unwrap();
        assert_eq!(cx.evaluate(ClaimId::KeDiff, None).unwrap().status, Status::NotApplicable);
        assert_eq!(cx.evaluate(ClaimId::CoronaCritImpl, None).unwrap().status, Status::NotApplicable);
        let g2 = fixture("fig1-g2").unwrap();
        let cx = ClaimContext::new(&g2, &Limits::default()).unwrap();
        assert_eq!(cx.evaluate(ClaimId::CoronaCritImpl, None).unwrap().status, Status::Holds);
        let f6 = fixture("fig6-g2").unwrap();
        assert_eq!(evaluate_claim(ClaimId::KerEmptyProp, &f6, None).unwrap().status, Status::Holds);
    }

    #[test]
    fn explicit_lambda_is_validated() {
        let g = fixture("fig3").unwrap();
        let cx = ClaimContext::new(&g, &Limits::default()).unwrap();
        assert!(matches!(cx.evaluate(ClaimId::UnionDiff, Some(&[])), Err(Error::Precondition(_))));
        let bogus = [g.set_of(&["x"])];
        assert!(matches!(cx.evaluate(ClaimId::UnionDiff, Some(&bogus)), Err(Error::Precondition(_))));
        let one = [g.set_of(&["x", "y", "u"])];
        assert_eq!(cx.evaluate(ClaimId::MatchLemma, Some(&one)).unwrap().status, Status::Holds);
    }

    #[test]
    fn lambda_policy_sizes() {
        let e = make_graph(&GraphSpec::Empty { n: 3 }).unwrap();
        let cx = ClaimContext::new(&e, &Limits::default()).unwrap();
        assert_eq!(cx.lambdas().len(), 1);
        // 4 disjoint edges: |Ω| = 16, so singletons + pairs + Ω
        let g = Graph::from_edge_list(8, &[(0, 1), (2, 3), (4, 5), (6, 7)]).unwrap();
        let cx = ClaimContext::new(&g, &Limits::default()).unwrap();
        assert_eq!(cx.omega.len(), 16);
        assert!(cx.lambdas().len() <= 16 + 120 + 1);
        assert!(cx.lambdas().iter().any(|c| c.inter.is_empty() && c.union == g.vertices()));
    }

    #[test]
    fn failing_outcome_is_flagged() {
        let g = fixture("fig3").unwrap();
        let cx = ClaimContext::new(&g, &Limits::default()).unwrap();
        let out = cx.outcome(ClaimId::KerCore, Status::Fails, witness! {});
        assert_eq!(out.witness["severity"], json!("implementation-bug"));
    }
}
