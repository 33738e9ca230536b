use serde::{Deserialize, Serialize};

use crate::family::Family;

/// Bounds of an exhaustive check. `m` is absent when every size is swept
/// or the check is not indexed by family size.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct UniverseBounds {
    pub n: u32,
    pub d: usize,
    pub m: Option<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Violation {
    pub family: Family,
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub universe: UniverseBounds,
    /// Number of families (or sets) examined.
    pub checked: u64,
    pub violations: Vec<Violation>,
    /// Smallest `|Inc(F)|` seen, for minimization sweeps.
    pub minimum: Option<u64>,
    pub minimizers: Vec<Family>,
    /// `Inc^[d](m)`, the value the minimum is expected to attain.
    pub bound: Option<u64>,
    /// Wall-clock seconds; left empty unless timing was requested so that
    /// repeated runs serialize identically.
    pub elapsed: Option<f64>,
}

impl VerificationReport {
    pub fn new(universe: UniverseBounds) -> Self {
        VerificationReport {
            universe,
            checked: 0,
            violations: Vec::new(),
            minimum: None,
            minimizers: Vec::new(),
            bound: None,
            elapsed: None,
        }
    }

    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }

    /// Whether the recorded minimum equals the numeric bound.
    pub fn attains_bound(&self) -> bool {
        self.minimum.is_some() && self.minimum == self.bound
    }
}
