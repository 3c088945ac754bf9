//! Vertex sets as multiword bitmasks.
//!
//! `VertexSet` is the small-set currency used by every solver in this crate.
//! Sets over universes of at most 128 vertices live inline; larger universes
//! spill to the heap, so the constructive algorithms (elimination trees for
//! long paths, for instance) are not capped at machine-word width.

use smallvec::SmallVec;
use std::fmt;

type Words = SmallVec<[u64; 2]>;

/// A set of vertices drawn from `0..n` for some graph universe of size `n`.
#[derive(Clone, Default)]
pub struct VertexSet {
    words: Words,
}

#[inline]
fn word_index(v: usize) -> (usize, u64) {
    (v / 64, 1u64 << (v % 64))
}

impl VertexSet {
    /// The empty set.
    pub fn new() -> Self {
        VertexSet { words: Words::new() }
    }

    /// The set `{0, 1, ..., n-1}`.
    pub fn full(n: usize) -> Self {
        let mut s = VertexSet::new();
        for v in 0..n {
            s.insert(v);
        }
        s
    }

    /// Singleton `{v}`.
    pub fn singleton(v: usize) -> Self {
        let mut s = VertexSet::new();
        s.insert(v);
        s
    }

    pub fn insert(&mut self, v: usize) {
        let (w, bit) = word_index(v);
        if self.words.len() <= w {
            self.words.resize(w + 1, 0);
        }
        self.words[w] |= bit;
    }

    pub fn remove(&mut self, v: usize) {
        let (w, bit) = word_index(v);
        if w < self.words.len() {
            self.words[w] &= !bit;
        }
    }

    #[inline]
    pub fn contains(&self, v: usize) -> bool {
        let (w, bit) = word_index(v);
        w < self.words.len() && self.words[w] & bit != 0
    }

    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    /// Number of vertices in the set.
    pub fn len(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    /// Smallest vertex, if any.
    pub fn min(&self) -> Option<usize> {
        for (i, &w) in self.words.iter().enumerate() {
            if w != 0 {
                return Some(i * 64 + w.trailing_zeros() as usize);
            }
        }
        None
    }

    /// Iterates vertices in ascending order.
    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(i, &w)| {
            let mut bits = w;
            std::iter::from_fn(move || {
                if bits == 0 {
                    None
                } else {
                    let v = bits.trailing_zeros() as usize;
                    bits &= bits - 1;
                    Some(i * 64 + v)
                }
            })
        })
    }

    pub fn to_vec(&self) -> Vec<usize> {
        self.iter().collect()
    }

    pub fn union(&self, other: &VertexSet) -> VertexSet {
        let mut words = Words::with_capacity(self.words.len().max(other.words.len()));
        for i in 0..self.words.len().max(other.words.len()) {
            words.push(self.word(i) | other.word(i));
        }
        VertexSet { words }
    }

    pub fn intersection(&self, other: &VertexSet) -> VertexSet {
        let n = self.words.len().min(other.words.len());
        let mut words = Words::with_capacity(n);
        for i in 0..n {
            words.push(self.words[i] & other.words[i]);
        }
        VertexSet { words }
    }

    /// Set difference `self \ other`.
    pub fn minus(&self, other: &VertexSet) -> VertexSet {
        let mut words = self.words.clone();
        for (i, w) in words.iter_mut().enumerate() {
            *w &= !other.word(i);
        }
        VertexSet { words }
    }

    pub fn with(&self, v: usize) -> VertexSet {
        let mut s = self.clone();
        s.insert(v);
        s
    }

    pub fn without(&self, v: usize) -> VertexSet {
        let mut s = self.clone();
        s.remove(v);
        s
    }

    pub fn intersects(&self, other: &VertexSet) -> bool {
        let n = self.words.len().min(other.words.len());
        (0..n).any(|i| self.words[i] & other.words[i] != 0)
    }

    pub fn is_subset(&self, other: &VertexSet) -> bool {
        self.words
            .iter()
            .enumerate()
            .all(|(i, &w)| w & !other.word(i) == 0)
    }

    #[inline]
    fn word(&self, i: usize) -> u64 {
        self.words.get(i).copied().unwrap_or(0)
    }

    /// Total order: ascending vertex sequences compared lexicographically,
    /// with a proper prefix sorting before its extensions. Used wherever the
    /// crate promises a deterministic "lexicographically first" witness.
    pub fn cmp_lex(&self, other: &VertexSet) -> std::cmp::Ordering {
        let mut a = self.iter();
        let mut b = other.iter();
        loop {
            match (a.next(), b.next()) {
                (None, None) => return std::cmp::Ordering::Equal,
                (None, Some(_)) => return std::cmp::Ordering::Less,
                (Some(_), None) => return std::cmp::Ordering::Greater,
                (Some(x), Some(y)) => {
                    if x != y {
                        return x.cmp(&y);
                    }
                }
            }
        }
    }

    /// Sort key pinning the canonical element order for certificates:
    /// smallest contained vertex first, then the mask as an integer.
    pub fn canonical_key(&self) -> (usize, Vec<u64>) {
        let mut words: Vec<u64> = self.words.to_vec();
        while words.last() == Some(&0) {
            words.pop();
        }
        words.reverse();
        (self.min().unwrap_or(usize::MAX), words)
    }
}

impl PartialEq for VertexSet {
    fn eq(&self, other: &Self) -> bool {
        let n = self.words.len().max(other.words.len());
        (0..n).all(|i| self.word(i) == other.word(i))
    }
}

impl Eq for VertexSet {}

impl std::hash::Hash for VertexSet {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        let mut last = self.words.len();
        while last > 0 && self.words[last - 1] == 0 {
            last -= 1;
        }
        self.words[..last].hash(state);
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        let mut s = VertexSet::new();
        for v in iter {
            s.insert(v);
        }
        s
    }
}
