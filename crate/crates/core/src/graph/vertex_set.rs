use std::fmt;

const WORD: usize = 64;

/// A set of vertex indices for a host graph on `n` vertices.
///
/// Backed by 64-bit words; graphs with at most 64 vertices use a single word,
/// which is the case the enumeration kernel works on directly.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct VertexSet {
    n: usize,
    words: Vec<u64>,
}

fn word_count(n: usize) -> usize {
    n.div_ceil(WORD).max(1)
}

impl VertexSet {
    pub fn empty(n: usize) -> Self {
        VertexSet {
            n,
            words: vec![0; word_count(n)],
        }
    }

    pub fn full(n: usize) -> Self {
        let mut s = Self::empty(n);
        for (i, w) in s.words.iter_mut().enumerate() {
            let lo = i * WORD;
            let hi = (lo + WORD).min(n);
            if hi > lo {
                let k = hi - lo;
                *w = if k == WORD { u64::MAX } else { (1u64 << k) - 1 };
            }
        }
        s
    }

    /// Builds a set from 0-indexed members; `None` if any index is `>= n`.
    pub fn from_indices<I: IntoIterator<Item = usize>>(n: usize, items: I) -> Option<Self> {
        let mut s = Self::empty(n);
        for v in items {
            if v >= n {
                return None;
            }
            s.insert(v);
        }
        Some(s)
    }

    /// Single-word constructor. Bits at or above `n` are discarded.
    pub fn from_mask(n: usize, mask: u64) -> Self {
        assert!(n <= WORD, "from_mask needs n <= 64");
        let full = if n == WORD { u64::MAX } else { (1u64 << n) - 1 };
        VertexSet {
            n,
            words: vec![mask & full],
        }
    }

    /// The single-word mask, when the host graph has at most 64 vertices.
    pub fn as_mask(&self) -> Option<u64> {
        (self.n <= WORD).then(|| self.words[0])
    }

    /// Size of the host vertex universe.
    pub fn universe(&self) -> usize {
        self.n
    }

    pub fn contains(&self, v: usize) -> bool {
        v < self.n && self.words[v / WORD] >> (v % WORD) & 1 == 1
    }

    pub fn insert(&mut self, v: usize) {
        assert!(v < self.n, "vertex {v} outside universe of {}", self.n);
        self.words[v / WORD] |= 1 << (v % WORD);
    }

    pub fn remove(&mut self, v: usize) {
        if v < self.n {
            self.words[v / WORD] &= !(1 << (v % WORD));
        }
    }

    pub fn len(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    /// True when every vertex of the universe is a member.
    pub fn is_full(&self) -> bool {
        self.len() == self.n
    }

    /// Members in increasing order.
    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(i, &w)| {
            let mut w = w;
            std::iter::from_fn(move || {
                if w == 0 {
                    None
                } else {
                    let b = w.trailing_zeros() as usize;
                    w &= w - 1;
                    Some(i * WORD + b)
                }
            })
        })
    }

    pub fn to_vec(&self) -> Vec<usize> {
        self.iter().collect()
    }

    fn zip_with(&self, other: &Self, f: impl Fn(u64, u64) -> u64) -> Self {
        assert_eq!(self.n, other.n, "vertex sets over different universes");
        VertexSet {
            n: self.n,
            words: self
                .words
                .iter()
                .zip(&other.words)
                .map(|(&a, &b)| f(a, b))
                .collect(),
        }
    }

    pub fn union(&self, other: &Self) -> Self {
        self.zip_with(other, |a, b| a | b)
    }

    pub fn intersection(&self, other: &Self) -> Self {
        self.zip_with(other, |a, b| a & b)
    }

    pub fn difference(&self, other: &Self) -> Self {
        self.zip_with(other, |a, b| a & !b)
    }

    pub fn complement(&self) -> Self {
        Self::full(self.n).difference(self)
    }

    pub fn is_subset(&self, other: &Self) -> bool {
        self.n == other.n
            && self
                .words
                .iter()
                .zip(&other.words)
                .all(|(&a, &b)| a & !b == 0)
    }

    /// Number of members shared with `other`, stopping once `limit` is reached.
    pub fn intersection_len_at_most(&self, other: &Self, limit: usize) -> usize {
        let mut count = 0;
        for (&a, &b) in self.words.iter().zip(&other.words) {
            count += (a & b).count_ones() as usize;
            if count >= limit {
                return limit;
            }
        }
        count
    }

    /// Ordering used for reporting: by size, then lexicographically by the
    /// increasing member list.
    pub fn cmp_size_lex(&self, other: &Self) -> std::cmp::Ordering {
        self.len()
            .cmp(&other.len())
            .then_with(|| self.iter().cmp(other.iter()))
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

/// Renders members 1-indexed, e.g. `{1, 4, 6}`.
impl fmt::Display for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, v) in self.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{}", v + 1)?;
        }
        f.write_str("}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn full_and_complement_across_word_boundary() {
        for n in [0, 1, 63, 64, 65, 130] {
            let full = VertexSet::full(n);
            assert_eq!(full.len(), n);
            assert!(full.complement().is_empty());
            assert_eq!(VertexSet::empty(n).complement(), full);
        }
    }

    #[test]
    fn iter_is_increasing() {
        let s = VertexSet::from_indices(100, [99, 0, 64, 63, 5]).unwrap();
        assert_eq!(s.to_vec(), vec![0, 5, 63, 64, 99]);
        assert_eq!(s.to_string(), "{1, 6, 64, 65, 100}");
    }

    #[test]
    fn from_indices_rejects_out_of_range() {
        assert!(VertexSet::from_indices(3, [3]).is_none());
    }

    #[test]
    fn capped_intersection() {
        let a = VertexSet::from_indices(70, [1, 2, 66, 67]).unwrap();
        let b = VertexSet::from_indices(70, [2, 66, 67]).unwrap();
        assert_eq!(a.intersection_len_at_most(&b, 2), 2);
        assert_eq!(a.intersection_len_at_most(&b, 5), 3);
    }

    #[test]
    fn size_lex_order() {
        let a = VertexSet::from_indices(5, [0, 2, 4]).unwrap();
        let b = VertexSet::from_indices(5, [0, 1, 3, 4]).unwrap();
        let c = VertexSet::from_indices(5, [0, 1, 4]).unwrap();
        assert!(a.cmp_size_lex(&b).is_lt());
        assert!(c.cmp_size_lex(&a).is_lt());
    }
}
