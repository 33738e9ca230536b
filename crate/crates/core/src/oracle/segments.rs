use serde::{Deserialize, Serialize};

use super::report::{UniverseBounds, VerificationReport, Violation};
use crate::binomial::binomial;
use crate::compression::{borel_ideal, initial_segment, initial_segment_of_size};
use crate::error::{Error, Result};
use crate::family::Family;
use crate::inc::inc_image_family;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SegmentReport {
    /// `Inc(C(u)) = C(u + 1)`.
    pub initial_segments: VerificationReport,
    /// `Inc(B(u)) = B(u + 1)`.
    pub borel_ideals: VerificationReport,
}

impl SegmentReport {
    pub fn passed(&self) -> bool {
        self.initial_segments.passed() && self.borel_ideals.passed()
    }
}

/// Checks both segment lemmas for every `u` with `u_d <= max_elem` and `d <= max_d`.
pub fn verify_segment_lemmas(max_elem: u32, max_d: usize) -> Result<SegmentReport> {
    if max_elem == 0 || max_d == 0 {
        return Err(Error::InvalidArgument("segment bounds must be at least 1".into()));
    }
    let bounds = UniverseBounds { n: max_elem, d: max_d, m: None };
    let mut segments = VerificationReport::new(bounds);
    let mut ideals = VerificationReport::new(bounds);
    for d in 1..=max_d.min(max_elem as usize) {
        let count = binomial(u64::from(max_elem), d as u64)? as usize;
        for u in initial_segment_of_size(d, count)?.iter() {
            let up = u.shift_by(1)?;
            let witness = || Family::from_members(d, [u.clone()]);
            segments.checked += 1;
            if inc_image_family(&initial_segment(u)) != initial_segment(&up) {
                segments.violations.push(Violation { family: witness()?, detail: format!("Inc(C({u})) != C({up})") });
            }
            ideals.checked += 1;
            if inc_image_family(&borel_ideal(u)) != borel_ideal(&up) {
                ideals.violations.push(Violation { family: witness()?, detail: format!("Inc(B({u})) != B({up})") });
            }
        }
    }
    Ok(SegmentReport { initial_segments: segments, borel_ideals: ideals })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dset;

    #[test]
    fn examples() {
        let lhs = inc_image_family(&initial_segment(&dset![1, 2, 4]));
        assert_eq!(lhs, initial_segment(&dset![2, 3, 5]));
        assert_eq!(lhs.len(), 7);
        assert_eq!(inc_image_family(&borel_ideal(&dset![2, 3])), borel_ideal(&dset![3, 4]));
        assert_eq!(inc_image_family(&initial_segment(&dset![1, 2, 3])), initial_segment(&dset![2, 3, 4]));
    }

    #[test]
    fn small_sweep() {
        let r = verify_segment_lemmas(6, 3).unwrap();
        assert!(r.passed());
        assert_eq!(r.initial_segments.checked, 6 + 15 + 20);
        assert!(verify_segment_lemmas(0, 3).is_err());
        // grades above the ground set contribute nothing
        assert_eq!(verify_segment_lemmas(2, 4).unwrap().borel_ideals.checked, 3);
    }
}
