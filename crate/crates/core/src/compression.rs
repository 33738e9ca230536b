//! Compression to initial segments of the squashed order, Borel ideals,
//! left/right partial compressions and their common fixpoint.

use std::collections::BTreeSet;

use crate::dset::DSet;
use crate::error::{Error, Result};
use crate::family::Family;

/// The first `m` sets of `binom(N, d)` in squashed order.
pub fn initial_segment_of_size(d: usize, m: usize) -> Result<Family> {
    let mut segment = Family::empty(d)?;
    if m == 0 {
        return Ok(segment);
    }
    let mut u = DSet::first(d)?;
    let mut members = Vec::with_capacity(m);
    for _ in 1..m {
        let next = u.squashed_successor();
        members.push(u);
        u = next;
    }
    members.push(u);
    segment.extend_unchecked(members);
    Ok(segment)
}

/// `C(u)`: every `d`-set squashed-below or equal to `u`.
pub fn initial_segment(u: &DSet) -> Family {
    let mut members = Vec::new();
    let mut v = DSet::first(u.len()).expect("sets are nonempty");
    while &v != u {
        let next = v.squashed_successor();
        members.push(v);
        v = next;
    }
    members.push(v);
    let mut segment = Family::empty(u.len()).expect("sets are nonempty");
    segment.extend_unchecked(members);
    segment
}

/// `B(u)`: every `d`-set coordinatewise below or equal to `u`.
pub fn borel_ideal(u: &DSet) -> Family {
    fn go(bound: &[u32], start: u32, cur: &mut Vec<u32>, out: &mut Vec<DSet>) {
        let Some((&top, rest)) = bound.split_first() else {
            out.push(DSet::from_sorted_unchecked(cur.clone()));
            return;
        };
        for x in start..=top {
            cur.push(x);
            go(rest, x + 1, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(u.elements(), 1, &mut Vec::with_capacity(u.len()), &mut out);
    let mut ideal = Family::empty(u.len()).expect("sets are nonempty");
    ideal.extend_unchecked(out);
    ideal
}

/// `C(F)`: the initial segment with as many members as `F`.
pub fn compress(f: &Family) -> Family {
    initial_segment_of_size(f.d(), f.len()).expect("families have d >= 1")
}

/// `C_{>k}(F)`: the `|F|` squashed-smallest `d`-sets whose elements all exceed `k`.
///
/// Computed by conjugating plain compression with the shift `u ↦ u + k`.
pub fn compress_above(f: &Family, k: u32) -> Result<Family> {
    if let Some(bad) = f.iter().find(|u| u.smallest() <= k) {
        return Err(Error::NotAbove { member: bad.clone(), k });
    }
    let mut out = Family::empty(f.d())?;
    for u in compress(f).iter() {
        out.extend_unchecked([u.shift_by(k)?]);
    }
    Ok(out)
}

pub fn is_compressed(f: &Family) -> bool {
    *f == compress(f)
}

/// Closed under lowering any single coordinate by one, which generates the Borel order.
pub fn is_shifted(f: &Family) -> bool {
    f.iter().all(|u| borel_lower_covers(u).all(|v| f.contains(&v)))
}

/// Sets obtained from `u` by decreasing one coordinate by 1 while staying strictly increasing.
pub(crate) fn borel_lower_covers(u: &DSet) -> impl Iterator<Item = DSet> + '_ {
    let e = u.elements();
    (0..e.len()).filter_map(move |i| {
        let floor = if i == 0 { 0 } else { e[i - 1] };
        (e[i] - 1 > floor).then(|| {
            let mut lowered = e.to_vec();
            lowered[i] -= 1;
            DSet::from_sorted_unchecked(lowered)
        })
    })
}

fn need_two(op: &'static str, f: &Family) -> Result<()> {
    if f.d() < 2 {
        return Err(Error::GradeTooSmall { op, d: f.d(), min: 2 });
    }
    Ok(())
}

/// `\hat F_{1,k}`: members starting with `k`, with `k` removed.
pub fn slice_first(f: &Family, k: u32) -> Result<Family> {
    need_two("slice_first", f)?;
    let mut out = Family::empty(f.d() - 1)?;
    out.extend_unchecked(f.iter().filter(|u| u.smallest() == k).filter_map(DSet::without_first));
    Ok(out)
}

/// `\hat F_{d,k}`: members ending with `k`, with `k` removed.
pub fn slice_last(f: &Family, k: u32) -> Result<Family> {
    need_two("slice_last", f)?;
    let mut out = Family::empty(f.d() - 1)?;
    out.extend_unchecked(f.iter().filter(|u| u.largest() == k).filter_map(DSet::without_last));
    Ok(out)
}

/// `C^(l)(F)`: compresses every first-coordinate slice inside `N_{>k}`.
pub fn left_compress(f: &Family) -> Result<Family> {
    need_two("left_compress", f)?;
    let firsts: BTreeSet<u32> = f.iter().map(DSet::smallest).collect();
    let mut out = Family::empty(f.d())?;
    for k in firsts {
        for hat in compress_above(&slice_first(f, k)?, k)?.iter() {
            out.extend_unchecked([hat.with_first(k)?]);
        }
    }
    Ok(out)
}

/// `C^(r)(F)`: compresses every last-coordinate slice inside `N`.
pub fn right_compress(f: &Family) -> Result<Family> {
    need_two("right_compress", f)?;
    let lasts: BTreeSet<u32> = f.iter().map(DSet::largest).collect();
    let mut out = Family::empty(f.d())?;
    for k in lasts {
        // a compressed slice only moves down, so its elements stay below k
        for hat in compress(&slice_last(f, k)?).iter() {
            out.extend_unchecked([hat.with_last(k)?]);
        }
    }
    Ok(out)
}

pub fn is_left_compressed(f: &Family) -> bool {
    f.d() < 2 || left_compress(f).is_ok_and(|g| g == *f)
}

pub fn is_right_compressed(f: &Family) -> bool {
    f.d() < 2 || right_compress(f).is_ok_and(|g| g == *f)
}

/// Default bound on partial-compression steps for [`fixpoint_with_cap`].
pub fn default_fixpoint_cap(f: &Family) -> usize {
    10 * f.len() * f.d() + 16
}

/// `F^(∞)`: alternate left then right partial compressions until stable.
pub fn fixpoint(f: &Family) -> Result<Family> {
    fixpoint_with_cap(f, default_fixpoint_cap(f))
}

pub fn fixpoint_with_cap(f: &Family, cap: usize) -> Result<Family> {
    if f.d() == 1 {
        return Ok(compress(f));
    }
    // The first left step already makes the iterate left-compressed, so two
    // equal consecutive iterates from then on are both left- and right-compressed.
    let mut current = left_compress(f)?;
    let mut steps = 1;
    let mut left_next = false;
    loop {
        if steps >= cap {
            return Err(Error::FixpointCap { cap });
        }
        let next = if left_next { left_compress(&current)? } else { right_compress(&current)? };
        steps += 1;
        if next == current {
            return Ok(current);
        }
        current = next;
        left_next = !left_next;
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::order::{family_squashed_cmp, rank, unrank};
    use crate::{dset, family};
    use std::cmp::Ordering;

    fn example() -> Family {
        family![3; [1, 2, 6], [1, 3, 5], [2, 3, 5], [3, 5, 6]]
    }

    #[test]
    fn initial_segments() {
        assert_eq!(initial_segment(&dset![2, 3, 4]), family![3; [1, 2, 3], [1, 2, 4], [1, 3, 4], [2, 3, 4]]);
        assert_eq!(initial_segment(&dset![1, 2, 3, 4]), family![4; [1, 2, 3, 4]]);
        assert_eq!(initial_segment(&dset![1, 2, 5]), family![3; [1, 2, 3], [1, 2, 4], [1, 3, 4], [2, 3, 4], [1, 2, 5]]);
        for m in 1..=40 {
            let u = unrank(m, 3).unwrap();
            let seg = initial_segment(&u);
            assert_eq!(seg.len() as u64, rank(&u).unwrap());
            assert_eq!(seg, initial_segment_of_size(3, m as usize).unwrap());
        }
    }

    #[test]
    fn borel_ideals() {
        assert_eq!(borel_ideal(&dset![2, 3]), family![2; [1, 2], [1, 3], [2, 3]]);
        assert_eq!(borel_ideal(&dset![1, 2, 3]), family![3; [1, 2, 3]]);
        assert_eq!(borel_ideal(&dset![1, 4]), family![2; [1, 2], [1, 3], [1, 4]]);
    }

    #[test]
    fn compress_examples() {
        let f = family![3; [1, 3, 5], [2, 3, 4], [1, 2, 6]];
        assert_eq!(compress(&f), family![3; [1, 2, 3], [1, 2, 4], [1, 3, 4]]);
        let seg = initial_segment(&dset![1, 3, 5]);
        assert_eq!(compress(&seg), seg);
        assert_eq!(compress(&family![3]), family![3]);
    }

    #[test]
    fn compress_above_examples() {
        let f = family![2; [2, 5], [3, 4]];
        assert_eq!(compress_above(&f, 1).unwrap(), family![2; [2, 3], [2, 4]]);
        assert_eq!(compress_above(&f, 0).unwrap(), compress(&f));
        assert_eq!(compress_above(&family![2], 7).unwrap(), family![2]);
        assert!(matches!(compress_above(&f, 2), Err(Error::NotAbove { .. })));
    }

    #[test]
    fn predicates() {
        let f = family![2; [1, 2], [1, 3], [1, 4]];
        assert!(is_shifted(&f));
        assert!(!is_compressed(&f));
        let seg = initial_segment(&dset![2, 4, 5]);
        assert!(is_compressed(&seg));
        assert!(is_shifted(&seg));
        assert!(!is_shifted(&family![2; [1, 3]]));
    }

    #[test]
    fn slices_of_the_example() {
        assert_eq!(slice_first(&example(), 1).unwrap(), family![2; [2, 6], [3, 5]]);
        assert_eq!(slice_last(&example(), 5).unwrap(), family![2; [1, 3], [2, 3]]);
        assert_eq!(slice_first(&example(), 4).unwrap(), family![2]);
        assert!(slice_first(&family![1; [1]], 1).is_err());
        assert!(slice_last(&family![1; [1]], 1).is_err());
    }

    #[test]
    fn partial_compressions_of_the_example() {
        let f = example();
        let left = left_compress(&f).unwrap();
        let right = right_compress(&f).unwrap();
        assert_eq!(left, family![3; [1, 2, 3], [1, 2, 4], [2, 3, 4], [3, 4, 5]]);
        assert_eq!(right, family![3; [1, 2, 5], [1, 3, 5], [1, 2, 6], [1, 3, 6]]);
        assert_eq!(family_squashed_cmp(&left, &f).unwrap(), Ordering::Less);
        assert_eq!(left_compress(&left).unwrap(), left);
        assert_eq!(right_compress(&right).unwrap(), right);
        assert_eq!(left_compress(&family![3]).unwrap(), family![3]);
        assert_eq!(right_compress(&family![3]).unwrap(), family![3]);
        assert!(left_compress(&family![1; [2]]).is_err());
        assert!(right_compress(&family![1; [2]]).is_err());
    }

    #[test]
    fn fixpoint_of_the_example() {
        let fixed = fixpoint(&example()).unwrap();
        assert_eq!(fixed, family![3; [1, 2, 3], [1, 2, 4], [1, 3, 4], [1, 2, 5]]);
        assert!(is_left_compressed(&fixed) && is_right_compressed(&fixed));
        assert!(!is_left_compressed(&example()) && !is_right_compressed(&example()));
        assert!(is_left_compressed(&family![3]) && is_right_compressed(&family![3]));
        let seg = initial_segment(&dset![1, 4, 6]);
        assert_eq!(fixpoint(&seg).unwrap(), seg);
        assert_eq!(fixpoint(&family![3]).unwrap(), family![3]);
        assert_eq!(fixpoint(&family![1; [4], [9]]).unwrap(), family![1; [1], [2]]);
    }

    #[test]
    fn left_compressed_only_input_still_reaches_right_compression() {
        // already left-compressed, not right-compressed
        let f = family![2; [1, 2], [2, 3]];
        assert!(is_left_compressed(&f));
        assert!(!is_right_compressed(&f));
        let fixed = fixpoint(&f).unwrap();
        assert!(is_left_compressed(&fixed) && is_right_compressed(&fixed));
        assert_eq!(fixed, family![2; [1, 2], [1, 3]]);
    }

    #[test]
    fn cap_is_reported() {
        assert_eq!(fixpoint_with_cap(&example(), 1), Err(Error::FixpointCap { cap: 1 }));
    }
}
