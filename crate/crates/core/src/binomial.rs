//! Checked binomial coefficients and the greedy `d`-binomial representation
//! `m = C(a_d, d) + C(a_{d-1}, d-1) + ... + C(a_s, s)`, `a_d > ... > a_s >= s >= 1`.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// `C(n, k)`, or `None` if it does not fit in a `u64`.
pub fn checked_binomial(n: u64, k: u64) -> Option<u64> {
    if k > n {
        return Some(0);
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 1..=k {
        // acc * (n - k + i) / i is C(n - k + i, i), always exact
        acc = acc.checked_mul(u128::from(n - k + i))? / u128::from(i);
        if acc > u128::from(u64::MAX) {
            return None;
        }
    }
    Some(acc as u64)
}

pub fn binomial(n: u64, k: u64) -> Result<u64> {
    checked_binomial(n, k).ok_or(Error::Overflow("binomial coefficient"))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct BinomialTerm {
    /// `a_i`
    pub top: u64,
    /// `i`
    pub bottom: usize,
}

/// The `d`-binomial representation of a nonnegative integer. Zero has no terms.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BinomialRep {
    d: usize,
    terms: Vec<BinomialTerm>,
}

impl BinomialRep {
    pub fn d(&self) -> usize {
        self.d
    }

    /// Terms in order `i = d, d-1, ..., s`.
    pub fn terms(&self) -> &[BinomialTerm] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// `s`, the smallest lower index; `None` for zero.
    pub fn lowest(&self) -> Option<usize> {
        self.terms.last().map(|t| t.bottom)
    }

    /// Re-sums the representation.
    pub fn value(&self) -> Result<u64> {
        self.sum_with(|t| binomial(t.top, t.bottom as u64))
    }

    /// `Σ f(term)` with overflow checking.
    pub(crate) fn sum_with(&self, mut f: impl FnMut(&BinomialTerm) -> Result<u64>) -> Result<u64> {
        self.terms.iter().try_fold(0u64, |acc, t| acc.checked_add(f(t)?).ok_or(Error::Overflow("binomial sum")))
    }

    /// Checks `a_d > ... > a_s >= s >= 1` with consecutive lower indices from `d`.
    pub fn is_well_formed(&self) -> bool {
        let mut expected = self.d;
        let mut prev_top = u64::MAX;
        for (n, t) in self.terms.iter().enumerate() {
            if t.bottom != expected || t.bottom == 0 {
                return false;
            }
            if n > 0 && t.top >= prev_top {
                return false;
            }
            if t.top < t.bottom as u64 {
                return false;
            }
            prev_top = t.top;
            expected = expected.wrapping_sub(1);
        }
        true
    }
}

/// Largest `a` with `C(a, k) <= r`; requires `r >= 1`, `k >= 1`.
fn largest_top(r: u64, k: u64) -> u64 {
    if k == 1 {
        return r;
    }
    let fits = |a: u64| checked_binomial(a, k).is_some_and(|c| c <= r);
    let mut lo = k; // C(k, k) = 1 <= r
    let mut step = 1u64;
    let mut hi = loop {
        let probe = lo.saturating_add(step);
        if !fits(probe) {
            break probe;
        }
        lo = probe;
        step = step.saturating_mul(2);
    };
    while hi - lo > 1 {
        let mid = lo + (hi - lo) / 2;
        if fits(mid) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    lo
}

/// Greedy `d`-binomial representation of `m`.
pub fn binomial_rep(m: u64, d: usize) -> Result<BinomialRep> {
    if d == 0 {
        return Err(Error::InvalidArgument("binomial representation needs d >= 1".into()));
    }
    let mut terms = Vec::new();
    let mut rest = m;
    let mut i = d;
    while rest > 0 {
        debug_assert!(i >= 1, "greedy expansion always terminates at i = 1");
        let top = largest_top(rest, i as u64);
        rest -= binomial(top, i as u64)?;
        terms.push(BinomialTerm { top, bottom: i });
        i -= 1;
    }
    Ok(BinomialRep { d, terms })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn tops(rep: &BinomialRep) -> Vec<(u64, usize)> {
        rep.terms().iter().map(|t| (t.top, t.bottom)).collect()
    }

    #[test]
    fn binomial_values() {
        assert_eq!(binomial(0, 0).unwrap(), 1);
        assert_eq!(binomial(5, 2).unwrap(), 10);
        assert_eq!(binomial(5, 6).unwrap(), 0);
        assert_eq!(binomial(67, 33).unwrap(), 14226520737620288370);
        assert!(binomial(68, 34).is_err());
        assert_eq!(binomial(u64::MAX, 1).unwrap(), u64::MAX);
    }

    #[test]
    fn representation_examples() {
        assert_eq!(tops(&binomial_rep(7, 3).unwrap()), vec![(4, 3), (3, 2)]);
        assert!(binomial_rep(0, 4).unwrap().is_zero());
        assert_eq!(tops(&binomial_rep(2, 2).unwrap()), vec![(2, 2), (1, 1)]);
        assert_eq!(tops(&binomial_rep(4, 3).unwrap()), vec![(4, 3)]);
        assert!(binomial_rep(3, 0).is_err());
    }

    #[test]
    fn huge_values_do_not_overflow_the_search() {
        let rep = binomial_rep(u64::MAX, 2).unwrap();
        assert!(rep.is_well_formed());
        assert_eq!(rep.value().unwrap(), u64::MAX);
        let rep = binomial_rep(u64::MAX, 1).unwrap();
        assert_eq!(tops(&rep), vec![(u64::MAX, 1)]);
    }

    #[test]
    fn well_formedness_rejects_bad_terms() {
        let bad =
            BinomialRep { d: 3, terms: vec![BinomialTerm { top: 4, bottom: 3 }, BinomialTerm { top: 4, bottom: 2 }] };
        assert!(!bad.is_well_formed());
        let gap =
            BinomialRep { d: 3, terms: vec![BinomialTerm { top: 4, bottom: 3 }, BinomialTerm { top: 2, bottom: 1 }] };
        assert!(!gap.is_well_formed());
    }
}
