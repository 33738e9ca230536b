//! Exhaustive sweeps over all size-`m` families in `binom([n], d)`.
//!
//! Families are visited in ascending mask order. The mask range is cut by
//! its leading bits into blocks that can be swept independently; partial
//! results are merged left to right, so any number of workers yields the
//! same report as a single one.

use std::time::Instant;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::report::{UniverseBounds, VerificationReport, Violation};
use super::universe::{masks_with_ones, FamilyMask, Universe};
use crate::binomial::binomial;
use crate::error::{Error, Result};
use crate::family::Family;
use crate::numeric::inc_num;
use crate::order::rank;

const PREFIX_BITS: u32 = 6;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SweepOptions {
    /// Worker threads; 0 and 1 both mean sequential.
    pub jobs: usize,
    /// Record wall-clock time in reports.
    pub timing: bool,
}

impl Default for SweepOptions {
    fn default() -> Self {
        SweepOptions { jobs: 1, timing: false }
    }
}

fn split(u: &Universe) -> (u32, u32) {
    let width = u.size() as u32;
    let prefix = width.min(PREFIX_BITS);
    (prefix, width - prefix)
}

/// Size-`m` masks inside the block with leading bits `prefix`, ascending.
fn block_masks(u: &Universe, prefix: FamilyMask, m: usize) -> impl Iterator<Item = FamilyMask> {
    let (_, low) = split(u);
    let taken = prefix.count_ones() as usize;
    let wanted = m.checked_sub(taken).filter(|&r| r <= low as usize);
    wanted.into_iter().flat_map(move |r| masks_with_ones(low, r as u32).map(move |rest| prefix << low | rest))
}

fn all_masks(u: &Universe, m: usize) -> impl Iterator<Item = FamilyMask> + '_ {
    let (prefix, _) = split(u);
    (0..1u64 << prefix).flat_map(move |p| block_masks(u, p, m))
}

/// Runs `visit` on every block and merges the results in block order.
fn fold_blocks<A, V, M>(u: &Universe, jobs: usize, visit: V, merge: M) -> Result<A>
where
    A: Send + Default,
    V: Fn(FamilyMask) -> A + Sync + Send,
    M: Fn(A, A) -> A + Sync + Send,
{
    let (prefix, _) = split(u);
    let blocks = 0..1u64 << prefix;
    if jobs <= 1 {
        return Ok(blocks.map(&visit).fold(A::default(), &merge));
    }
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(jobs)
        .build()
        .map_err(|e| Error::InvalidArgument(format!("cannot start {jobs} workers: {e}")))?;
    Ok(pool.install(|| blocks.into_par_iter().map(&visit).reduce(A::default, &merge)))
}

fn check_size(u: &Universe, m: usize) -> Result<()> {
    if m > u.size() {
        return Err(Error::InvalidArgument(format!("m={m} exceeds C({},{}) = {}", u.n(), u.d(), u.size())));
    }
    Ok(())
}

fn compressed_mask(m: usize) -> FamilyMask {
    if m >= 64 {
        !0
    } else {
        (1 << m) - 1
    }
}

/// Every size-`m` subfamily of `binom([n], d)`, each once, in ascending mask order.
pub fn enum_families(n: u32, d: usize, m: usize) -> Result<impl Iterator<Item = Family>> {
    let u = Universe::new(n, d)?;
    check_size(&u, m)?;
    let masks: Vec<FamilyMask> = all_masks(&u, m).collect();
    Ok(masks.into_iter().map(move |mask| u.family(mask)))
}

#[derive(Default)]
struct MinPartial {
    checked: u64,
    violations: Vec<(FamilyMask, u32)>,
    minimum: Option<u32>,
    minimizers: Vec<FamilyMask>,
}

impl MinPartial {
    fn merge(mut self, other: MinPartial) -> MinPartial {
        self.checked += other.checked;
        self.violations.extend(other.violations);
        match (self.minimum, other.minimum) {
            (_, None) => {}
            (None, Some(_)) => {
                self.minimum = other.minimum;
                self.minimizers = other.minimizers;
            }
            (Some(a), Some(b)) if b < a => {
                self.minimum = other.minimum;
                self.minimizers = other.minimizers;
            }
            (Some(a), Some(b)) if b == a => self.minimizers.extend(other.minimizers),
            _ => {}
        }
        self
    }
}

/// Checks `|Inc(F)| >= |Inc(C(F))|` for every size-`m` family in `binom([n], d)`
/// and records the families of minimal Inc-image.
pub fn verify_min_theorem(n: u32, d: usize, m: usize, opts: SweepOptions) -> Result<VerificationReport> {
    let u = Universe::new(n, d)?;
    min_theorem_on(&u, m, opts)
}

/// [`verify_min_theorem`] for every `m` from 0 to `C(n, d)`.
pub fn verify_min_theorem_all(n: u32, d: usize, opts: SweepOptions) -> Result<Vec<VerificationReport>> {
    let u = Universe::new(n, d)?;
    (0..=u.size()).map(|m| min_theorem_on(&u, m, opts)).collect()
}

fn min_theorem_on(u: &Universe, m: usize, opts: SweepOptions) -> Result<VerificationReport> {
    check_size(u, m)?;
    let started = Instant::now();
    let bound = inc_num(m as u64, u.d())?;
    let compressed = u.inc_image(compressed_mask(m)).count_ones();

    let partial = fold_blocks(
        u,
        opts.jobs,
        |prefix| {
            let mut acc = MinPartial::default();
            for mask in block_masks(u, prefix, m) {
                let size = u.inc_image(mask).count_ones();
                acc.checked += 1;
                if size < compressed {
                    acc.violations.push((mask, size));
                }
                match acc.minimum {
                    Some(best) if size > best => {}
                    Some(best) if size == best => acc.minimizers.push(mask),
                    _ => {
                        acc.minimum = Some(size);
                        acc.minimizers = vec![mask];
                    }
                }
            }
            acc
        },
        MinPartial::merge,
    )?;

    let mut report = VerificationReport::new(UniverseBounds { n: u.n(), d: u.d(), m: Some(m) });
    if u64::from(compressed) != bound {
        report.violations.push(Violation {
            family: u.family(compressed_mask(m)),
            detail: format!("|Inc(C(F))| = {compressed} but Inc^[{}]({m}) = {bound}", u.d()),
        });
    }
    report.violations.extend(partial.violations.into_iter().map(|(mask, size)| Violation {
        family: u.family(mask),
        detail: format!("|Inc(F)| = {size} < |Inc(C(F))| = {compressed}"),
    }));
    report.checked = partial.checked;
    report.minimum = partial.minimum.map(u64::from);
    report.minimizers = partial.minimizers.into_iter().map(|mask| u.family(mask)).collect();
    report.bound = Some(bound);
    if opts.timing {
        report.elapsed = Some(started.elapsed().as_secs_f64());
    }
    Ok(report)
}

/// All size-`m` families in `binom([n], d)` with `|Inc(F)| = Inc^[d](m)`.
pub fn equality_cases(n: u32, d: usize, m: usize, opts: SweepOptions) -> Result<Vec<Family>> {
    let u = Universe::new(n, d)?;
    check_size(&u, m)?;
    let target = u32::try_from(inc_num(m as u64, d)?).unwrap_or(u32::MAX);
    let masks = fold_blocks(
        &u,
        opts.jobs,
        |prefix| {
            block_masks(&u, prefix, m).filter(|&mask| u.inc_image(mask).count_ones() == target).collect::<Vec<_>>()
        },
        |mut a, b| {
            a.extend(b);
            a
        },
    )?;
    Ok(masks.into_iter().map(|mask| u.family(mask)).collect())
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct StructureReport {
    /// Shifted families whose Inc-image is not shifted.
    pub shifted: VerificationReport,
    /// Initial segments `C(u)` whose Inc-image is not the initial segment `C(u + 1)`.
    pub compressed: VerificationReport,
}

impl StructureReport {
    pub fn passed(&self) -> bool {
        self.shifted.passed() && self.compressed.passed()
    }
}

/// Inc preserves shiftedness on every shifted subfamily of `binom([n], d)`,
/// and maps every initial segment inside it to an initial segment.
pub fn verify_structure(n: u32, d: usize, opts: SweepOptions) -> Result<StructureReport> {
    let u = Universe::new(n, d)?;
    let started = Instant::now();
    let bounds = UniverseBounds { n, d, m: None };

    let (checked, bad) = fold_blocks(
        &u,
        opts.jobs,
        |prefix| {
            let mut checked = 0u64;
            let mut bad = Vec::new();
            for m in 0..=u.size() {
                for mask in block_masks(&u, prefix, m).filter(|&mask| u.is_shifted(mask)) {
                    checked += 1;
                    if !u.image_is_shifted(u.inc_image(mask)) {
                        bad.push(mask);
                    }
                }
            }
            (checked, bad)
        },
        |(c1, mut b1), (c2, b2)| {
            b1.extend(b2);
            (c1 + c2, b1)
        },
    )?;
    let mut shifted = VerificationReport::new(bounds);
    shifted.checked = checked;
    shifted.violations = bad
        .into_iter()
        .map(|mask| Violation { family: u.family(mask), detail: "Inc(F) is not shifted".into() })
        .collect();

    let mut compressed = VerificationReport::new(bounds);
    for (k, top) in u.sets().iter().enumerate() {
        let image = u.inc_image(compressed_mask(k + 1));
        let expected = rank(&top.shift_by(1)?)?;
        compressed.checked += 1;
        let is_segment = image & image.wrapping_add(1) == 0;
        if !is_segment || u64::from(image.count_ones()) != expected {
            compressed.violations.push(Violation {
                family: u.family(compressed_mask(k + 1)),
                detail: format!("Inc(C({top})) is not C({})", top.shift_by(1)?),
            });
        }
    }
    if opts.timing {
        let secs = started.elapsed().as_secs_f64();
        shifted.elapsed = Some(secs);
        compressed.elapsed = Some(secs);
    }
    Ok(StructureReport { shifted, compressed })
}

/// `C(C(n, d), m)`, the number of families a size-`m` sweep must visit.
pub fn expected_family_count(n: u32, d: usize, m: usize) -> Result<u64> {
    binomial(binomial(u64::from(n), d as u64)?, m as u64)
}
