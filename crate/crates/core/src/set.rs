use std::fmt;
use std::ops::{BitAnd, BitAndAssign, BitOr, BitOrAssign, Not, Sub};

use serde::{Deserialize, Deserializer, Serialize, Serializer};

/// Largest vertex count representable by a single-word [`VertexSet`].
pub const MAX_VERTICES: usize = 64;

/// A subset of `0..n` stored as a 64-bit mask; bit `i` is vertex `i`.
#[derive(Clone, Copy, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct VertexSet(u64);

impl VertexSet {
    pub const EMPTY: VertexSet = VertexSet(0);

    #[inline]
    pub const fn from_bits(bits: u64) -> Self {
        VertexSet(bits)
    }

    #[inline]
    pub const fn bits(self) -> u64 {
        self.0
    }

    /// `{0, 1, ..., n-1}`.
    #[inline]
    pub fn full(n: usize) -> Self {
        debug_assert!(n <= MAX_VERTICES);
        if n == MAX_VERTICES {
            VertexSet(u64::MAX)
        } else {
            VertexSet((1u64 << n) - 1)
        }
    }

    #[inline]
    pub fn singleton(v: usize) -> Self {
        debug_assert!(v < MAX_VERTICES);
        VertexSet(1u64 << v)
    }

    #[inline]
    pub fn contains(self, v: usize) -> bool {
        v < MAX_VERTICES && self.0 >> v & 1 == 1
    }

    #[inline]
    pub fn insert(&mut self, v: usize) {
        self.0 |= 1u64 << v;
    }

    #[inline]
    pub fn remove(&mut self, v: usize) {
        self.0 &= !(1u64 << v);
    }

    #[inline]
    pub fn with(self, v: usize) -> Self {
        VertexSet(self.0 | 1u64 << v)
    }

    #[inline]
    pub fn without(self, v: usize) -> Self {
        VertexSet(self.0 & !(1u64 << v))
    }

    #[inline]
    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    #[inline]
    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    #[inline]
    pub fn is_subset(self, other: VertexSet) -> bool {
        self.0 & !other.0 == 0
    }

    #[inline]
    pub fn is_disjoint(self, other: VertexSet) -> bool {
        self.0 & other.0 == 0
    }

    /// Smallest member, if any.
    #[inline]
    pub fn first(self) -> Option<usize> {
        (self.0 != 0).then(|| self.0.trailing_zeros() as usize)
    }

    /// Members in ascending order.
    #[inline]
    pub fn iter(self) -> Iter {
        Iter(self.0)
    }

    /// Largest member plus one, i.e. the least `n` this set fits in.
    pub fn span(self) -> usize {
        64 - self.0.leading_zeros() as usize
    }

    pub fn to_vec(self) -> Vec<usize> {
        self.iter().collect()
    }

    /// Lexicographic comparison of the ascending member lists.
    pub fn cmp_lex(self, other: VertexSet) -> std::cmp::Ordering {
        self.iter().cmp(other.iter())
    }

    /// Renders `{a,b,c}` using `labels` when given, vertex ids otherwise.
    pub fn render(self, labels: Option<&[String]>) -> String {
        let names: Vec<String> = self
            .iter()
            .map(|v| match labels {
                Some(l) => l[v].clone(),
                None => v.to_string(),
            })
            .collect();
        format!("{{{}}}", names.join(","))
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        let mut s = VertexSet::EMPTY;
        for v in iter {
            s.insert(v);
        }
        s
    }
}

impl IntoIterator for VertexSet {
    type Item = usize;
    type IntoIter = Iter;
    fn into_iter(self) -> Iter {
        self.iter()
    }
}

/// Ascending iterator over the members of a [`VertexSet`].
#[derive(Clone)]
pub struct Iter(u64);

impl Iterator for Iter {
    type Item = usize;

    #[inline]
    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let v = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(v)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let k = self.0.count_ones() as usize;
        (k, Some(k))
    }
}

impl ExactSizeIterator for Iter {}

impl BitOr for VertexSet {
    type Output = VertexSet;
    #[inline]
    fn bitor(self, rhs: VertexSet) -> VertexSet {
        VertexSet(self.0 | rhs.0)
    }
}

impl BitOrAssign for VertexSet {
    #[inline]
    fn bitor_assign(&mut self, rhs: VertexSet) {
        self.0 |= rhs.0;
    }
}

impl BitAnd for VertexSet {
    type Output = VertexSet;
    #[inline]
    fn bitand(self, rhs: VertexSet) -> VertexSet {
        VertexSet(self.0 & rhs.0)
    }
}

impl BitAndAssign for VertexSet {
    #[inline]
    fn bitand_assign(&mut self, rhs: VertexSet) {
        self.0 &= rhs.0;
    }
}

impl Sub for VertexSet {
    type Output = VertexSet;
    #[inline]
    fn sub(self, rhs: VertexSet) -> VertexSet {
        VertexSet(self.0 & !rhs.0)
    }
}

impl Not for VertexSet {
    type Output = VertexSet;
    #[inline]
    fn not(self) -> VertexSet {
        VertexSet(!self.0)
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl fmt::Display for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render(None))
    }
}

// Serialized as an ascending array of vertex ids.
impl Serialize for VertexSet {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_seq(self.iter())
    }
}

impl<'de> Deserialize<'de> for VertexSet {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let ids = Vec::<usize>::deserialize(deserializer)?;
        if let Some(&bad) = ids.iter().find(|&&v| v >= MAX_VERTICES) {
            return Err(serde::de::Error::custom(format!("vertex {bad} out of range")));
        }
        Ok(ids.into_iter().collect())
    }
}
