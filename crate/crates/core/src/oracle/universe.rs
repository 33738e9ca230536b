//! Bitmask encoding of families inside `binom([n], d)`.
//!
//! `binom([n], d)` is exactly the first `C(n, d)` sets in squashed order, so
//! bit `r - 1` stands for the set of rank `r`. Inc-images of such sets lie in
//! `binom([n + 1], d)` and use the same indexing in a wider mask.

use crate::binomial::binomial;
use crate::compression::{borel_lower_covers, initial_segment_of_size};
use crate::dset::DSet;
use crate::error::{Error, Result};
use crate::family::Family;
use crate::inc::inc_image_iter;
use crate::order::rank;

pub type FamilyMask = u64;
pub type ImageMask = u128;

#[derive(Debug, Clone)]
pub struct Universe {
    n: u32,
    d: usize,
    sets: Vec<DSet>,
    inc: Vec<ImageMask>,
    covers: Vec<FamilyMask>,
    image_covers: Vec<ImageMask>,
}

impl Universe {
    pub fn new(n: u32, d: usize) -> Result<Self> {
        if d == 0 || d as u64 > u64::from(n) {
            return Err(Error::InvalidArgument(format!("need 1 <= d <= n, got n={n} d={d}")));
        }
        let size = binomial(u64::from(n), d as u64)?;
        let image_size = binomial(u64::from(n) + 1, d as u64)?;
        if size > FamilyMask::BITS as u64 || image_size > ImageMask::BITS as u64 {
            return Err(Error::UniverseTooLarge(format!(
                "binom([{n}],{d}) has {size} sets; at most {} supported (and {} for the Inc-image ambient)",
                FamilyMask::BITS,
                ImageMask::BITS
            )));
        }
        let sets: Vec<DSet> = initial_segment_of_size(d, size as usize)?.iter().cloned().collect();
        let index = |v: &DSet| -> Result<u32> { Ok((rank(v)? - 1) as u32) };

        let inc = sets
            .iter()
            .map(|u| inc_image_iter(u).try_fold(0u128, |acc, v| Ok::<_, Error>(acc | 1u128 << index(&v)?)))
            .collect::<Result<Vec<_>>>()?;
        let covers = sets
            .iter()
            .map(|u| borel_lower_covers(u).try_fold(0u64, |acc, v| Ok::<_, Error>(acc | 1u64 << index(&v)?)))
            .collect::<Result<Vec<_>>>()?;
        let image_sets = initial_segment_of_size(d, image_size as usize)?;
        let image_covers = image_sets
            .iter()
            .map(|u| borel_lower_covers(u).try_fold(0u128, |acc, v| Ok::<_, Error>(acc | 1u128 << index(&v)?)))
            .collect::<Result<Vec<_>>>()?;
        Ok(Universe { n, d, sets, inc, covers, image_covers })
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn d(&self) -> usize {
        self.d
    }

    /// `C(n, d)`.
    pub fn size(&self) -> usize {
        self.sets.len()
    }

    pub fn sets(&self) -> &[DSet] {
        &self.sets
    }

    pub fn family(&self, mask: FamilyMask) -> Family {
        let mut f = Family::empty(self.d).expect("d >= 1");
        f.extend_unchecked(bits(mask).map(|i| self.sets[i].clone()));
        f
    }

    pub fn mask_of(&self, f: &Family) -> Result<FamilyMask> {
        if f.d() != self.d {
            return Err(Error::GradeMismatch { left: self.d, right: f.d() });
        }
        f.iter().try_fold(0, |acc, u| {
            if u.largest() > self.n {
                return Err(Error::OutsideGround { face: u.clone(), n: self.n });
            }
            Ok(acc | 1 << (rank(u)? - 1))
        })
    }

    /// `Inc(F)` as a mask over `binom([n + 1], d)`.
    #[inline]
    pub fn inc_image(&self, mask: FamilyMask) -> ImageMask {
        let mut image = 0;
        let mut rest = mask;
        while rest != 0 {
            image |= self.inc[rest.trailing_zeros() as usize];
            rest &= rest - 1;
        }
        image
    }

    pub fn is_shifted(&self, mask: FamilyMask) -> bool {
        bits(mask).all(|i| self.covers[i] & !mask == 0)
    }

    pub fn image_is_shifted(&self, image: ImageMask) -> bool {
        let mut rest = image;
        while rest != 0 {
            let i = rest.trailing_zeros() as usize;
            if self.image_covers[i] & !image != 0 {
                return false;
            }
            rest &= rest - 1;
        }
        true
    }
}

pub(crate) fn bits(mask: FamilyMask) -> impl Iterator<Item = usize> {
    let mut rest = mask;
    std::iter::from_fn(move || {
        (rest != 0).then(|| {
            let i = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            i
        })
    })
}

/// Masks of width `width` with exactly `ones` set bits, ascending.
pub(crate) fn masks_with_ones(width: u32, ones: u32) -> impl Iterator<Item = FamilyMask> {
    debug_assert!(width < 64);
    let limit: FamilyMask = 1 << width;
    let mut next: Option<FamilyMask> = (ones <= width).then(|| if ones == 0 { 0 } else { (1 << ones) - 1 });
    std::iter::from_fn(move || {
        let current = next?;
        next = if current == 0 {
            None
        } else {
            // Gosper's hack
            let lowest: FamilyMask = current & current.wrapping_neg();
            let ripple = current + lowest;
            let succ = (((ripple ^ current) >> 2) / lowest) | ripple;
            (succ < limit).then_some(succ)
        };
        Some(current)
    })
}
