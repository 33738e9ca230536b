use serde::{Deserialize, Serialize};

use super::sweep::enum_families;
use crate::binomial::binomial;
use crate::error::{Error, Result};
use crate::family::Family;
use crate::inc::{comb_shift, inc_image_family};

/// A family and shift index where `Inc(S_i(F))` and `S_i(Inc(F))` are incomparable.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ShiftWitness {
    pub family: Family,
    pub i: u32,
    pub inc_of_shift: Family,
    pub shift_of_inc: Family,
}

/// First witness over sizes `1..=m`, then families in enumeration order,
/// then `i = 2..=n+1`. `None` if the universe has none.
pub fn search_shift_noninclusion(n: u32, d: usize, m: usize) -> Result<Option<ShiftWitness>> {
    if d == 0 || d as u64 > u64::from(n) {
        return Err(Error::InvalidArgument(format!("need 1 <= d <= n, got n={n} d={d}")));
    }
    let size = binomial(u64::from(n), d as u64)? as usize;
    for m in 1..=m.min(size) {
        for f in enum_families(n, d, m)? {
            let inc_f = inc_image_family(&f);
            for i in 2..=n + 1 {
                let inc_of_shift = inc_image_family(&comb_shift(i, &f)?);
                let shift_of_inc = comb_shift(i, &inc_f)?;
                if !inc_of_shift.is_subset(&shift_of_inc) && !shift_of_inc.is_subset(&inc_of_shift) {
                    return Ok(Some(ShiftWitness { family: f, i, inc_of_shift, shift_of_inc }));
                }
            }
        }
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn finds_witness_for_pairs() {
        let w = search_shift_noninclusion(6, 2, 4).unwrap().expect("witness");
        assert!(!w.inc_of_shift.is_subset(&w.shift_of_inc));
        assert!(!w.shift_of_inc.is_subset(&w.inc_of_shift));
        assert_eq!(w.inc_of_shift, inc_image_family(&comb_shift(w.i, &w.family).unwrap()));
    }

    #[test]
    fn empty_search() {
        assert_eq!(search_shift_noninclusion(6, 2, 0).unwrap(), None);
        assert!(search_shift_noninclusion(2, 3, 1).is_err());
    }
}
