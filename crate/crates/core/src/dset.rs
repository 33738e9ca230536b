//! Finite sets of positive integers written as strictly increasing sequences.

use std::cmp::Ordering;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A `d`-element subset of the positive integers, `u_1 < u_2 < ... < u_d`.
///
/// `Ord` is the squashed order within a grade; sets of different sizes
/// are ordered by size first so that mixed collections still sort
/// deterministically.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<u32>", into = "Vec<u32>")]
pub struct DSet(Vec<u32>);

impl DSet {
    /// Validates that `elements` is nonempty, strictly increasing and starts at 1 or above.
    pub fn new(elements: Vec<u32>) -> Result<Self> {
        if elements.is_empty() {
            return Err(Error::InvalidSet { elements, reason: "a set needs at least one element" });
        }
        if elements[0] == 0 {
            return Err(Error::InvalidSet { elements, reason: "elements start at 1" });
        }
        if elements.windows(2).any(|w| w[0] >= w[1]) {
            return Err(Error::InvalidSet { elements, reason: "elements must be strictly increasing" });
        }
        Ok(DSet(elements))
    }

    pub(crate) fn from_sorted_unchecked(elements: Vec<u32>) -> Self {
        debug_assert!(!elements.is_empty());
        debug_assert!(elements[0] >= 1);
        debug_assert!(elements.windows(2).all(|w| w[0] < w[1]));
        DSet(elements)
    }

    /// `(1, 2, ..., d)`, the smallest `d`-set in every order used here.
    pub fn first(d: usize) -> Result<Self> {
        if d == 0 {
            return Err(Error::InvalidArgument("set size must be at least 1".into()));
        }
        let d = u32::try_from(d).map_err(|_| Error::Overflow("set size"))?;
        Ok(DSet((1..=d).collect()))
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    /// Always false; kept for clippy's `len_without_is_empty`.
    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn elements(&self) -> &[u32] {
        &self.0
    }

    pub fn smallest(&self) -> u32 {
        self.0[0]
    }

    pub fn largest(&self) -> u32 {
        self.0[self.0.len() - 1]
    }

    pub fn contains(&self, x: u32) -> bool {
        self.0.binary_search(&x).is_ok()
    }

    /// `u + k`: adds `k` to every coordinate.
    pub fn shift_by(&self, k: u32) -> Result<DSet> {
        let elements = self
            .0
            .iter()
            .map(|&x| x.checked_add(k).ok_or(Error::Overflow("shifted element")))
            .collect::<Result<Vec<_>>>()?;
        Ok(DSet(elements))
    }

    /// `u - k`, the inverse of [`DSet::shift_by`]; `None` if some element would drop below 1.
    pub fn shift_down(&self, k: u32) -> Option<DSet> {
        if self.smallest() <= k {
            return None;
        }
        Some(DSet(self.0.iter().map(|&x| x - k).collect()))
    }

    /// Drops the smallest element. `None` for singletons.
    pub fn without_first(&self) -> Option<DSet> {
        (self.len() > 1).then(|| DSet(self.0[1..].to_vec()))
    }

    /// Drops the largest element. `None` for singletons.
    pub fn without_last(&self) -> Option<DSet> {
        (self.len() > 1).then(|| DSet(self.0[..self.0.len() - 1].to_vec()))
    }

    /// `(k, u)`; requires `k < u_1`.
    pub fn with_first(&self, k: u32) -> Result<DSet> {
        if k == 0 || k >= self.smallest() {
            return Err(Error::InvalidArgument(format!("cannot prepend {k} to {self}")));
        }
        let mut elements = Vec::with_capacity(self.len() + 1);
        elements.push(k);
        elements.extend_from_slice(&self.0);
        Ok(DSet(elements))
    }

    /// `(u, k)`; requires `k > u_d`.
    pub fn with_last(&self, k: u32) -> Result<DSet> {
        if k <= self.largest() {
            return Err(Error::InvalidArgument(format!("cannot append {k} to {self}")));
        }
        let mut elements = self.0.clone();
        elements.push(k);
        Ok(DSet(elements))
    }

    /// All `(d-1)`-subsets obtained by deleting one element.
    pub fn facets(&self) -> impl Iterator<Item = DSet> + '_ {
        (0..self.len())
            .filter(|_| self.len() > 1)
            .map(move |skip| DSet(self.0.iter().enumerate().filter(|&(i, _)| i != skip).map(|(_, &x)| x).collect()))
    }

    /// The successor in squashed order: increments the first coordinate that
    /// has room and resets everything below it to `1, 2, ...`.
    pub fn squashed_successor(&self) -> DSet {
        let mut next = self.0.clone();
        let d = next.len();
        let mut i = 0;
        while i + 1 < d && next[i] + 1 == next[i + 1] {
            i += 1;
        }
        next[i] += 1;
        for (j, x) in next.iter_mut().enumerate().take(i) {
            *x = j as u32 + 1;
        }
        DSet(next)
    }
}

impl Ord for DSet {
    fn cmp(&self, other: &Self) -> Ordering {
        self.len().cmp(&other.len()).then_with(|| self.0.iter().rev().cmp(other.0.iter().rev()))
    }
}

impl PartialOrd for DSet {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl TryFrom<Vec<u32>> for DSet {
    type Error = Error;

    fn try_from(elements: Vec<u32>) -> Result<Self> {
        DSet::new(elements)
    }
}

impl From<DSet> for Vec<u32> {
    fn from(u: DSet) -> Self {
        u.0
    }
}

impl fmt::Display for DSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, x) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{x}")?;
        }
        write!(f, ")")
    }
}

impl fmt::Debug for DSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Shorthand for building sets in tests and examples. Panics on invalid input.
#[macro_export]
macro_rules! dset {
    ($($x:expr),+ $(,)?) => {
        $crate::DSet::new(vec![$($x),+]).expect("valid d-set literal")
    };
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_bad_input() {
        assert!(DSet::new(vec![]).is_err());
        assert!(DSet::new(vec![0, 1]).is_err());
        assert!(DSet::new(vec![2, 2]).is_err());
        assert!(DSet::new(vec![3, 1]).is_err());
        assert!(DSet::new(vec![1, 3, 4]).is_ok());
    }

    #[test]
    fn shift_by() {
        assert_eq!(dset![1, 2, 4].shift_by(1).unwrap(), dset![2, 3, 5]);
        assert_eq!(dset![1, 2, 4].shift_by(0).unwrap(), dset![1, 2, 4]);
        assert_eq!(dset![1, 3].shift_by(2).unwrap(), dset![3, 5]);
        assert!(dset![u32::MAX].shift_by(1).is_err());
        assert_eq!(dset![3, 5].shift_down(2), Some(dset![1, 3]));
        assert_eq!(dset![3, 5].shift_down(3), None);
    }

    #[test]
    fn successor_walks_the_listed_prefix() {
        let listed = [
            dset![1, 2, 3],
            dset![1, 2, 4],
            dset![1, 3, 4],
            dset![2, 3, 4],
            dset![1, 2, 5],
            dset![1, 3, 5],
            dset![2, 3, 5],
        ];
        for w in listed.windows(2) {
            assert_eq!(w[0].squashed_successor(), w[1]);
            assert!(w[0] < w[1]);
        }
    }

    #[test]
    fn facets_of_triangle() {
        let f: Vec<_> = dset![1, 2, 3].facets().collect();
        assert_eq!(f, vec![dset![2, 3], dset![1, 3], dset![1, 2]]);
        assert_eq!(dset![4].facets().count(), 0);
    }

    #[test]
    fn serde_validates() {
        let u: DSet = serde_json::from_str("[1,2,4]").unwrap();
        assert_eq!(u, dset![1, 2, 4]);
        assert!(serde_json::from_str::<DSet>("[2,1]").is_err());
        assert_eq!(serde_json::to_string(&u).unwrap(), "[1,2,4]");
    }
}
