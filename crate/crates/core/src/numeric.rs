//! Numeric shadow and Inc-image operators on `d`-binomial representations,
//! with the f-vector and f-vector-chain feasibility tests built from them.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::binomial::{binomial, binomial_rep};
use crate::error::{Error, Result};

/// `∂_d(m) = C(a_d, d-1) + ... + C(a_s, s-1)`, with `∂_d(0) = 0`.
pub fn shadow_num(m: u64, d: usize) -> Result<u64> {
    binomial_rep(m, d)?.sum_with(|t| binomial(t.top, t.bottom as u64 - 1))
}

/// `Inc^[d](m) = C(a_d + 1, d) + ... + C(a_s + 1, s)`, with `Inc^[d](0) = 0`.
pub fn inc_num(m: u64, d: usize) -> Result<u64> {
    binomial_rep(m, d)?.sum_with(|t| {
        let top = t.top.checked_add(1).ok_or(Error::Overflow("Inc^[d]"))?;
        binomial(top, t.bottom as u64)
    })
}

/// `(f_0, f_1, ...)`; `f_{d-1}` counts `d`-sets. Entries past the end are zero.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct FVector(pub Vec<u64>);

impl FVector {
    /// Number of `d`-sets, i.e. `f_{d-1}`. Grade 0 is the implicit empty face.
    pub fn faces_of_size(&self, d: usize) -> u64 {
        if d == 0 {
            return 1;
        }
        self.0.get(d - 1).copied().unwrap_or(0)
    }

    /// Largest grade with a nonzero count.
    pub fn top_grade(&self) -> usize {
        self.0.iter().rposition(|&x| x != 0).map_or(0, |i| i + 1)
    }
}

impl fmt::Display for FVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, x) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{x}")?;
        }
        write!(f, ")")
    }
}

/// `f_1, f_2, ..., f_N`, one f-vector per chain index.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "Vec<FVector>", into = "Vec<FVector>")]
pub struct FVectorChain(Vec<FVector>);

impl FVectorChain {
    pub fn new(vectors: Vec<FVector>) -> Result<Self> {
        if vectors.is_empty() {
            return Err(Error::InvalidArgument("an f-vector chain needs at least one vector".into()));
        }
        Ok(FVectorChain(vectors))
    }

    pub fn vectors(&self) -> &[FVector] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }
}

impl TryFrom<Vec<FVector>> for FVectorChain {
    type Error = Error;

    fn try_from(v: Vec<FVector>) -> Result<Self> {
        FVectorChain::new(v)
    }
}

impl From<FVectorChain> for Vec<FVector> {
    fn from(c: FVectorChain) -> Self {
        c.0
    }
}

/// `∂_d(f_{d-1}) > f_{d-2}`: the `d`-faces need more `(d-1)`-faces than exist.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct ShadowViolation {
    pub grade: usize,
    pub required: u64,
    pub available: u64,
}

impl fmt::Display for ShadowViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "grade {}: shadow needs {} faces of size {}, only {} present",
            self.grade,
            self.required,
            self.grade - 1,
            self.available
        )
    }
}

/// First grade where the Kruskal-Katona inequality fails.
pub fn kk_violation(f: &FVector) -> Result<Option<ShadowViolation>> {
    for grade in 2..=f.top_grade() {
        if let Some(v) = shadow_check(f, grade)? {
            return Ok(Some(v));
        }
    }
    Ok(None)
}

pub fn kk_feasible(f: &FVector) -> Result<bool> {
    Ok(kk_violation(f)?.is_none())
}

fn shadow_check(f: &FVector, grade: usize) -> Result<Option<ShadowViolation>> {
    let required = shadow_num(f.faces_of_size(grade), grade)?;
    let available = f.faces_of_size(grade - 1);
    Ok((required > available).then_some(ShadowViolation { grade, required, available }))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "inequality", rename_all = "snake_case")]
pub enum ChainInequality {
    /// Kruskal-Katona inside one vector.
    Shadow { required: u64, available: u64 },
    /// `f_{n+1,d-1} >= Inc^[d](f_{n,d-1})`.
    Growth { required: u64, available: u64 },
}

/// Chain index `n` is 1-based; `grade` is the set size `d`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct ChainViolation {
    pub n: usize,
    pub grade: usize,
    #[serde(flatten)]
    pub inequality: ChainInequality,
}

impl fmt::Display for ChainViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.inequality {
            ChainInequality::Shadow { required, available } => write!(
                f,
                "n={} d={}: shadow inequality fails, need {} faces of size {}, have {}",
                self.n,
                self.grade,
                required,
                self.grade - 1,
                available
            ),
            ChainInequality::Growth { required, available } => write!(
                f,
                "n={} d={}: growth inequality fails, f_{{n+1}} needs {} faces of size {}, has {}",
                self.n, self.grade, required, self.grade, available
            ),
        }
    }
}

/// First violation in `(n, d)` order; at equal `(n, d)` the shadow inequality is reported first.
pub fn chain_violation(chain: &FVectorChain) -> Result<Option<ChainViolation>> {
    let vectors = chain.vectors();
    for (idx, f) in vectors.iter().enumerate() {
        let next = vectors.get(idx + 1);
        let top = f.top_grade().max(next.map_or(0, FVector::top_grade));
        for grade in 1..=top {
            if grade >= 2 {
                if let Some(v) = shadow_check(f, grade)? {
                    return Ok(Some(ChainViolation {
                        n: idx + 1,
                        grade,
                        inequality: ChainInequality::Shadow { required: v.required, available: v.available },
                    }));
                }
            }
            if let Some(g) = next {
                let required = inc_num(f.faces_of_size(grade), grade)?;
                let available = g.faces_of_size(grade);
                if available < required {
                    return Ok(Some(ChainViolation {
                        n: idx + 1,
                        grade,
                        inequality: ChainInequality::Growth { required, available },
                    }));
                }
            }
        }
    }
    Ok(None)
}

pub fn chain_feasible(chain: &FVectorChain) -> Result<bool> {
    Ok(chain_violation(chain)?.is_none())
}
