//! Brute-force checks over small universes.

mod identities;
mod report;
mod segments;
mod shifting;
mod sweep;
mod universe;

pub use identities::{
    identity_failures, random_family, verify_identities, verify_identities_random, Identity, IdentityFailure,
    IdentityReport,
};
pub use report::{UniverseBounds, VerificationReport, Violation};
pub use segments::{verify_segment_lemmas, SegmentReport};
pub use shifting::{search_shift_noninclusion, ShiftWitness};
pub use sweep::{
    enum_families, equality_cases, expected_family_count, verify_min_theorem, verify_min_theorem_all, verify_structure,
    StructureReport, SweepOptions,
};
pub use universe::{FamilyMask, ImageMask, Universe};
