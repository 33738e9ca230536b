//! Slice decompositions of `Inc` and partial compressions, evaluated
//! side by side with the direct computation.

use std::fmt;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::compression::{
    compress, compress_above, initial_segment_of_size, left_compress, right_compress, slice_first, slice_last,
};
use crate::dset::DSet;
use crate::error::{Error, Result};
use crate::family::Family;
use crate::inc::inc_image_family;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Identity {
    /// `C^(l)(Inc F)` by first-coordinate slices.
    LeftOfInc,
    /// `C^(r)(Inc F)` by last-coordinate slices.
    RightOfInc,
    /// `Inc(C^(l) F)` by first-coordinate slices.
    IncOfLeft,
    /// `Inc(C^(r) F)` by last-coordinate slices.
    IncOfRight,
    /// `Inc F` by first-coordinate slices.
    IncByFirst,
    /// `Inc F` by last-coordinate slices.
    IncByLast,
    /// `Inc(C_{>k}(G)) ⊆ C_{>k}(Inc G)`.
    Transfer,
    /// `Inc(C^(l) F) ⊆ C^(l)(Inc F)` and the same for `C^(r)`.
    PartialInclusion,
}

impl Identity {
    pub const ALL: [Identity; 8] = [
        Identity::LeftOfInc,
        Identity::RightOfInc,
        Identity::IncOfLeft,
        Identity::IncOfRight,
        Identity::IncByFirst,
        Identity::IncByLast,
        Identity::Transfer,
        Identity::PartialInclusion,
    ];
}

impl fmt::Display for Identity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = match self {
            Identity::LeftOfInc => "left-of-inc",
            Identity::RightOfInc => "right-of-inc",
            Identity::IncOfLeft => "inc-of-left",
            Identity::IncOfRight => "inc-of-right",
            Identity::IncByFirst => "inc-by-first",
            Identity::IncByLast => "inc-by-last",
            Identity::Transfer => "transfer",
            Identity::PartialInclusion => "partial-inclusion",
        };
        f.write_str(name)
    }
}

/// `π_1` applied to every member.
fn pi1(f: &Family) -> Result<Family> {
    Family::from_members(f.d(), f.iter().map(|u| u.shift_by(1)).collect::<Result<Vec<_>>>()?)
}

fn prepend(k: u32, hat: &Family, out: &mut Vec<DSet>) -> Result<()> {
    for v in hat.iter() {
        out.push(v.with_first(k)?);
    }
    Ok(())
}

fn append(k: u32, hat: &Family, out: &mut Vec<DSet>) -> Result<()> {
    for v in hat.iter() {
        out.push(v.with_last(k)?);
    }
    Ok(())
}

/// Assembles `⋃_k {(k, û) | û ∈ piece(k)}` or `{(û, k) | ...}` over `k = 1..=top`.
fn assemble(d: usize, top: u32, first: bool, mut piece: impl FnMut(u32) -> Result<Family>) -> Result<Family> {
    let mut members = Vec::new();
    for k in 1..=top {
        let hat = piece(k)?;
        if first {
            prepend(k, &hat, &mut members)?;
        } else {
            append(k, &hat, &mut members)?;
        }
    }
    Family::from_members(d, members)
}

/// Identities from [`Identity::ALL`] that fail for `f`. Needs `f.d() >= 2`.
pub fn identity_failures(f: &Family) -> Result<Vec<Identity>> {
    let d = f.d();
    if d < 2 {
        return Err(Error::GradeTooSmall { op: "verify_identities", d, min: 2 });
    }
    // every slice of Inc(F) has k <= max + 1
    let top = f.max_element() + 1;
    let first = |k: u32| if k == 0 { Family::empty(d - 1) } else { slice_first(f, k) };
    let last = |k: u32| if k == 0 { Family::empty(d - 1) } else { slice_last(f, k) };

    let inc_f = inc_image_family(f);
    let left = left_compress(f)?;
    let right = right_compress(f)?;
    let inc_left = inc_image_family(&left);
    let inc_right = inc_image_family(&right);
    let mut failures = Vec::new();

    let left_of_inc = assemble(d, top, true, |k| {
        let joined = inc_image_family(&first(k)?).union(&pi1(&first(k - 1)?)?)?;
        compress_above(&joined, k)
    })?;
    if left_of_inc != left_compress(&inc_f)? {
        failures.push(Identity::LeftOfInc);
    }

    let right_of_inc = assemble(d, top, false, |k| Ok(compress(&last(k)?.union(&inc_image_family(&last(k - 1)?))?)))?;
    if right_of_inc != right_compress(&inc_f)? {
        failures.push(Identity::RightOfInc);
    }

    let inc_of_left = assemble(d, top, true, |k| {
        let here = inc_image_family(&compress_above(&first(k)?, k)?);
        let below = pi1(&compress_above(&first(k - 1)?, k - 1)?)?;
        here.union(&below)
    })?;
    if inc_of_left != inc_left {
        failures.push(Identity::IncOfLeft);
    }

    let inc_of_right =
        assemble(d, top, false, |k| compress(&last(k)?).union(&inc_image_family(&compress(&last(k - 1)?))))?;
    if inc_of_right != inc_right {
        failures.push(Identity::IncOfRight);
    }

    let inc_by_first = assemble(d, top, true, |k| inc_image_family(&first(k)?).union(&pi1(&first(k - 1)?)?))?;
    if inc_by_first != inc_f {
        failures.push(Identity::IncByFirst);
    }

    let inc_by_last = assemble(d, top, false, |k| last(k)?.union(&inc_image_family(&last(k - 1)?)))?;
    if inc_by_last != inc_f {
        failures.push(Identity::IncByLast);
    }

    let mut transfer = true;
    for k in 0..top {
        let above = Family::from_members(d, f.iter().filter(|u| u.smallest() > k).cloned())?;
        let mut groups = vec![above];
        if k >= 1 {
            groups.push(first(k)?);
        }
        for g in groups {
            let lhs = inc_image_family(&compress_above(&g, k)?);
            let rhs = compress_above(&inc_image_family(&g), k)?;
            transfer &= lhs.is_subset(&rhs);
        }
    }
    if !transfer {
        failures.push(Identity::Transfer);
    }

    if !inc_left.is_subset(&left_compress(&inc_f)?) || !inc_right.is_subset(&right_compress(&inc_f)?) {
        failures.push(Identity::PartialInclusion);
    }
    Ok(failures)
}

/// Whether every identity in [`Identity::ALL`] holds for `f`.
pub fn verify_identities(f: &Family) -> Result<bool> {
    Ok(identity_failures(f)?.is_empty())
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct IdentityFailure {
    pub family: Family,
    pub identities: Vec<Identity>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct IdentityReport {
    pub seed: u64,
    pub max_element: u32,
    pub grades: Vec<usize>,
    pub checked: u64,
    pub failures: Vec<IdentityFailure>,
}

impl IdentityReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

/// A random subfamily of `binom([max_element], d)`: a density is drawn
/// uniformly, then every set is kept independently with that probability.
pub fn random_family<R: Rng>(rng: &mut R, d: usize, max_element: u32) -> Result<Family> {
    let all = initial_segment_of_size(d, crate::binomial::binomial(u64::from(max_element), d as u64)? as usize)?;
    let density: f64 = rng.random();
    Family::from_members(d, all.iter().filter(|_| rng.random_bool(density)).cloned())
}

/// Checks the identities on `samples` random families with grades drawn
/// uniformly from `grades` and elements at most `max_element`.
pub fn verify_identities_random(samples: u64, seed: u64, grades: &[usize], max_element: u32) -> Result<IdentityReport> {
    if grades.is_empty() {
        return Err(Error::InvalidArgument("no grades to sample from".into()));
    }
    if let Some(&d) = grades.iter().find(|&&d| d < 2 || d as u64 > u64::from(max_element)) {
        return Err(Error::InvalidArgument(format!("grade {d} outside 2..={max_element}")));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut failures = Vec::new();
    for _ in 0..samples {
        let d = grades[rng.random_range(0..grades.len())];
        let f = random_family(&mut rng, d, max_element)?;
        let identities = identity_failures(&f)?;
        if !identities.is_empty() {
            failures.push(IdentityFailure { family: f, identities });
        }
    }
    Ok(IdentityReport { seed, max_element, grades: grades.to_vec(), checked: samples, failures })
}
