use std::cmp::Ordering;
use std::fmt;

use serde::{de, Deserialize, Deserializer, Serialize, Serializer};

/// Largest vertex count any [`crate::Graph`] can hold.
pub const MAX_VERTICES: usize = 128;

/// A set of vertices drawn from `0..128`, stored as a bitmask.
///
/// Serialized as a sorted list of vertex indices.
#[derive(Clone, Copy, Default, PartialEq, Eq, Hash)]
pub struct VertexSet(u128);

impl VertexSet {
    pub const EMPTY: VertexSet = VertexSet(0);

    pub const fn from_bits(bits: u128) -> Self {
        VertexSet(bits)
    }

    pub const fn bits(self) -> u128 {
        self.0
    }

    pub fn singleton(v: usize) -> Self {
        debug_assert!(v < MAX_VERTICES);
        VertexSet(1u128 << v)
    }

    /// `{0, ..., n-1}`.
    pub fn full(n: usize) -> Self {
        debug_assert!(n <= MAX_VERTICES);
        if n == MAX_VERTICES {
            VertexSet(u128::MAX)
        } else {
            VertexSet((1u128 << n) - 1)
        }
    }

    #[inline]
    pub fn contains(self, v: usize) -> bool {
        v < MAX_VERTICES && self.0 >> v & 1 == 1
    }

    #[inline]
    pub fn insert(&mut self, v: usize) {
        self.0 |= 1u128 << v;
    }

    #[inline]
    pub fn remove(&mut self, v: usize) {
        self.0 &= !(1u128 << v);
    }

    pub fn with(self, v: usize) -> Self {
        VertexSet(self.0 | 1u128 << v)
    }

    pub fn without(self, v: usize) -> Self {
        VertexSet(self.0 & !(1u128 << v))
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
    pub fn union(self, other: Self) -> Self {
        VertexSet(self.0 | other.0)
    }

    #[inline]
    pub fn intersection(self, other: Self) -> Self {
        VertexSet(self.0 & other.0)
    }

    #[inline]
    pub fn difference(self, other: Self) -> Self {
        VertexSet(self.0 & !other.0)
    }

    #[inline]
    pub fn intersects(self, other: Self) -> bool {
        self.0 & other.0 != 0
    }

    #[inline]
    pub fn is_subset(self, other: Self) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn min(self) -> Option<usize> {
        (self.0 != 0).then(|| self.0.trailing_zeros() as usize)
    }

    pub fn max(self) -> Option<usize> {
        (self.0 != 0).then(|| 127 - self.0.leading_zeros() as usize)
    }

    pub fn iter(self) -> Iter {
        Iter(self.0)
    }

    pub fn to_vec(self) -> Vec<usize> {
        self.iter().collect()
    }

    /// Size first, then lexicographic on the sorted vertex lists.
    pub fn canonical_cmp(&self, other: &Self) -> Ordering {
        self.len().cmp(&other.len()).then_with(|| {
            let diff = self.0 ^ other.0;
            if diff == 0 {
                Ordering::Equal
            } else if self.0 & (diff & diff.wrapping_neg()) != 0 {
                // The lowest differing vertex belongs to `self`, so `self`
                // has the smaller element at the first differing position.
                Ordering::Less
            } else {
                Ordering::Greater
            }
        })
    }

    /// All subsets of `self` with exactly `k` elements, in increasing bitmask order.
    pub fn subsets_of_size(self, k: usize) -> Vec<VertexSet> {
        let elems = self.to_vec();
        let mut out = Vec::new();
        if k > elems.len() {
            return out;
        }
        let mut idx: Vec<usize> = (0..k).collect();
        loop {
            out.push(idx.iter().map(|&i| elems[i]).collect());
            let mut i = k;
            loop {
                if i == 0 {
                    out.sort_by_key(|s: &VertexSet| s.0);
                    return out;
                }
                i -= 1;
                if idx[i] != i + elems.len() - k {
                    break;
                }
            }
            idx[i] += 1;
            for j in i + 1..k {
                idx[j] = idx[j - 1] + 1;
            }
        }
    }

    /// All subsets with at most `k` elements, grouped by size.
    pub fn subsets_up_to(self, k: usize) -> Vec<VertexSet> {
        (0..=k.min(self.len())).flat_map(|s| self.subsets_of_size(s)).collect()
    }
}

pub struct Iter(u128);

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
        let n = self.0.count_ones() as usize;
        (n, Some(n))
    }
}

impl ExactSizeIterator for Iter {}

impl IntoIterator for VertexSet {
    type Item = usize;
    type IntoIter = Iter;

    fn into_iter(self) -> Iter {
        self.iter()
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

impl<const N: usize> From<[usize; N]> for VertexSet {
    fn from(vs: [usize; N]) -> Self {
        vs.into_iter().collect()
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl fmt::Display for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, v) in self.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{v}")?;
        }
        f.write_str("}")
    }
}

impl Serialize for VertexSet {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_seq(self.iter())
    }
}

impl<'de> Deserialize<'de> for VertexSet {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let raw = Vec::<usize>::deserialize(d)?;
        let mut s = VertexSet::EMPTY;
        for v in raw {
            if v >= MAX_VERTICES {
                return Err(de::Error::custom(format!("vertex {v} out of range")));
            }
            if s.contains(v) {
                return Err(de::Error::custom(format!("vertex {v} listed twice")));
            }
            s.insert(v);
        }
        Ok(s)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn canonical_order_is_size_then_lex() {
        let mut sets: Vec<VertexSet> =
            vec![[1, 2].into(), [0].into(), [0, 3].into(), [2].into(), [0, 1, 2].into(), [0, 2].into()];
        sets.sort_by(VertexSet::canonical_cmp);
        let lists: Vec<Vec<usize>> = sets.iter().map(|s| s.to_vec()).collect();
        assert_eq!(lists, vec![vec![0], vec![2], vec![0, 2], vec![0, 3], vec![1, 2], vec![0, 1, 2]]);
    }

    #[test]
    fn subsets_of_size_counts() {
        let s = VertexSet::full(6);
        assert_eq!(s.subsets_of_size(3).len(), 20);
        assert_eq!(s.subsets_of_size(0), vec![VertexSet::EMPTY]);
        assert!(s.subsets_of_size(7).is_empty());
        assert_eq!(s.subsets_up_to(2).len(), 1 + 6 + 15);
        let odd: VertexSet = [1, 3, 5].into();
        assert!(odd.subsets_of_size(2).iter().all(|x| x.is_subset(odd)));
    }

    #[test]
    fn high_vertices() {
        let s: VertexSet = [0, 127].into();
        assert_eq!(s.max(), Some(127));
        assert_eq!(s.to_vec(), vec![0, 127]);
        assert_eq!(VertexSet::full(128).len(), 128);
    }

    #[test]
    fn serde_rejects_duplicates() {
        assert!(serde_json::from_str::<VertexSet>("[1,1]").is_err());
        let s: VertexSet = serde_json::from_str("[4,0]").unwrap();
        assert_eq!(serde_json::to_string(&s).unwrap(), "[0,4]");
    }
}
