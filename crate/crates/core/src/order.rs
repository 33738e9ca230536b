//! The squashed and Borel orders, the induced order on families, and
//! ranking within `binom(N, d)`.

use std::cmp::Ordering;

use crate::binomial::{binomial, binomial_rep};
use crate::dset::DSet;
use crate::error::{Error, Result};
use crate::family::Family;

fn same_grade(u: &DSet, v: &DSet) -> Result<()> {
    if u.len() != v.len() {
        return Err(Error::GradeMismatch { left: u.len(), right: v.len() });
    }
    Ok(())
}

/// `u < v` iff the largest element of the symmetric difference lies in `v`.
///
/// For equal-size sorted sequences this is lexicographic comparison read
/// from the top coordinate down.
pub fn squashed_cmp(u: &DSet, v: &DSet) -> Result<Ordering> {
    same_grade(u, v)?;
    Ok(u.cmp(v))
}

/// Coordinatewise `u_i <= v_i`.
pub fn borel_leq(u: &DSet, v: &DSet) -> Result<bool> {
    same_grade(u, v)?;
    Ok(u.elements().iter().zip(v.elements()).all(|(a, b)| a <= b))
}

/// `F < G` iff the squashed-largest member of the symmetric difference belongs to `G`.
pub fn family_squashed_cmp(f: &Family, g: &Family) -> Result<Ordering> {
    f.check_grade(g)?;
    // walking both families from the top, the first disagreement is the
    // largest element of the symmetric difference
    Ok(f.iter().rev().cmp(g.iter().rev()))
}

/// 1-based position of `u` in squashed order, `|C(u)|`.
pub fn rank(u: &DSet) -> Result<u64> {
    u.elements().iter().enumerate().try_fold(1u64, |acc, (i, &x)| {
        let c = binomial(u64::from(x) - 1, i as u64 + 1)?;
        acc.checked_add(c).ok_or(Error::Overflow("rank"))
    })
}

/// The `m`-th `d`-set in squashed order (1-based).
///
/// With `m = C(a_d,d) + ... + C(a_s,s)` the answer is
/// `(a_s-s+1, ..., a_s, a_{s+1}+1, ..., a_d+1)`.
pub fn unrank(m: u64, d: usize) -> Result<DSet> {
    if m == 0 {
        return Err(Error::InvalidArgument("ranks start at 1".into()));
    }
    let rep = binomial_rep(m, d)?;
    let terms = rep.terms();
    let low = terms.last().expect("m >= 1 has a nonempty representation");
    let s = low.bottom as u64;
    let to_elem = |x: u64| u32::try_from(x).map_err(|_| Error::Overflow("unranked element"));

    let mut elements = Vec::with_capacity(d);
    for x in (low.top - (s - 1))..=low.top {
        elements.push(to_elem(x)?);
    }
    for t in terms.iter().rev().skip(1) {
        elements.push(to_elem(t.top.checked_add(1).ok_or(Error::Overflow("unranked element"))?)?);
    }
    debug_assert_eq!(elements.len(), d);
    Ok(DSet::from_sorted_unchecked(elements))
}
