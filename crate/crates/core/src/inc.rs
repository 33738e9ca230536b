//! The action of `Inc_1` (increasing maps with `π(j) <= j + 1`) on sets and
//! families, and the combinatorial shifting operator `S_i`.
//!
//! Every map in `Inc_1` is some `π_i`: identity below `i`, `j ↦ j + 1` from
//! `i` on. `π_i` fixes `u` once `i > u_d`, so the image of a single set is the
//! `d + 1` sets obtained by adding 1 to its top `t` coordinates, `t = 0..=d`.

use crate::dset::DSet;
use crate::error::{Error, Result};
use crate::family::Family;

/// `π_i(u)`, coordinatewise.
pub fn apply_pi(i: u32, u: &DSet) -> Result<DSet> {
    if i == 0 {
        return Err(Error::InvalidArgument("π_i needs i >= 1".into()));
    }
    let elements = u.elements().iter().map(|&x| if x < i { x } else { x + 1 }).collect();
    Ok(DSet::from_sorted_unchecked(elements))
}

/// The `d + 1` sets `u, (u_1, ..., u_d + 1), ..., (u_1 + 1, ..., u_d + 1)`.
pub fn inc_image_set(u: &DSet) -> Family {
    let mut image = Family::empty(u.len()).expect("sets are nonempty");
    image.extend_unchecked(inc_image_iter(u));
    image
}

pub(crate) fn inc_image_iter(u: &DSet) -> impl Iterator<Item = DSet> + '_ {
    let d = u.len();
    (0..=d).map(move |bumped| {
        let elements = u.elements().iter().enumerate().map(|(j, &x)| if j + bumped >= d { x + 1 } else { x }).collect();
        DSet::from_sorted_unchecked(elements)
    })
}

/// `Inc(F)`, the union of the images of the members.
pub fn inc_image_family(f: &Family) -> Family {
    let mut image = Family::empty(f.d()).expect("families have d >= 1");
    image.extend_unchecked(f.iter().flat_map(inc_image_iter));
    image
}

/// `t`-fold `Inc` image; `t = 0` returns a copy of `f`.
pub fn inc_iterate(f: &Family, t: usize) -> Family {
    let mut current = f.clone();
    for _ in 0..t {
        current = inc_image_family(&current);
    }
    current
}

/// `S_i(F)`: replaces `i` by 1 in every member containing `i` but not 1,
/// unless the replacement is already in `F`. All members are tested
/// against the original `F`.
pub fn comb_shift(i: u32, f: &Family) -> Result<Family> {
    if i <= 1 {
        return Err(Error::InvalidArgument(format!("shifting needs i > 1, got {i}")));
    }
    let mut shifted = Family::empty(f.d())?;
    shifted.extend_unchecked(f.iter().map(|u| match shift_one(i, u) {
        Some(v) if !f.contains(&v) => v,
        _ => u.clone(),
    }));
    Ok(shifted)
}

fn shift_one(i: u32, u: &DSet) -> Option<DSet> {
    if !u.contains(i) || u.contains(1) {
        return None;
    }
    let mut elements = Vec::with_capacity(u.len());
    elements.push(1);
    elements.extend(u.elements().iter().copied().filter(|&x| x != i));
    Some(DSet::from_sorted_unchecked(elements))
}
