use std::collections::btree_set;
use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::dset::DSet;
use crate::error::{Error, Result};

/// A finite family of `d`-sets for one fixed `d`, iterated in ascending squashed order.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "RawFamily", into = "RawFamily")]
pub struct Family {
    d: usize,
    members: BTreeSet<DSet>,
}

#[derive(Serialize, Deserialize)]
struct RawFamily {
    d: usize,
    members: Vec<DSet>,
}

impl Family {
    pub fn empty(d: usize) -> Result<Self> {
        if d == 0 {
            return Err(Error::InvalidArgument("family grade must be at least 1".into()));
        }
        Ok(Family { d, members: BTreeSet::new() })
    }

    /// Collects `members` into a family of grade `d`. Repeated members collapse.
    pub fn from_members(d: usize, members: impl IntoIterator<Item = DSet>) -> Result<Self> {
        let mut family = Family::empty(d)?;
        for u in members {
            family.insert(u)?;
        }
        Ok(family)
    }

    pub(crate) fn from_set_unchecked(d: usize, members: BTreeSet<DSet>) -> Self {
        debug_assert!(members.iter().all(|u| u.len() == d));
        Family { d, members }
    }

    pub fn d(&self) -> usize {
        self.d
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, u: &DSet) -> bool {
        self.members.contains(u)
    }

    /// Returns whether `u` was newly inserted.
    pub fn insert(&mut self, u: DSet) -> Result<bool> {
        if u.len() != self.d {
            return Err(Error::GradeMismatch { left: self.d, right: u.len() });
        }
        Ok(self.members.insert(u))
    }

    pub fn iter(&self) -> btree_set::Iter<'_, DSet> {
        self.members.iter()
    }

    pub fn members(&self) -> &BTreeSet<DSet> {
        &self.members
    }

    /// The squashed-largest member.
    pub fn max(&self) -> Option<&DSet> {
        self.members.last()
    }

    /// Largest element appearing in any member, 0 for the empty family.
    pub fn max_element(&self) -> u32 {
        self.members.iter().map(DSet::largest).max().unwrap_or(0)
    }

    pub fn is_subset(&self, other: &Family) -> bool {
        self.d == other.d && self.members.is_subset(&other.members)
    }

    pub fn union(&self, other: &Family) -> Result<Family> {
        self.check_grade(other)?;
        Ok(Family::from_set_unchecked(self.d, self.members.union(&other.members).cloned().collect()))
    }

    /// Members of `self` absent from `other`.
    pub fn difference(&self, other: &Family) -> Result<Family> {
        self.check_grade(other)?;
        Ok(Family::from_set_unchecked(self.d, self.members.difference(&other.members).cloned().collect()))
    }

    pub(crate) fn check_grade(&self, other: &Family) -> Result<()> {
        if self.d != other.d {
            return Err(Error::GradeMismatch { left: self.d, right: other.d });
        }
        Ok(())
    }

    pub(crate) fn extend_unchecked(&mut self, members: impl IntoIterator<Item = DSet>) {
        for u in members {
            debug_assert_eq!(u.len(), self.d);
            self.members.insert(u);
        }
    }
}

/// `∂F`: every `(d-1)`-set obtained by deleting one element of a member.
pub fn shadow(f: &Family) -> Result<Family> {
    if f.d < 2 {
        return Err(Error::GradeTooSmall { op: "shadow", d: f.d, min: 2 });
    }
    Ok(Family::from_set_unchecked(f.d - 1, f.iter().flat_map(DSet::facets).collect()))
}

impl<'a> IntoIterator for &'a Family {
    type Item = &'a DSet;
    type IntoIter = btree_set::Iter<'a, DSet>;

    fn into_iter(self) -> Self::IntoIter {
        self.members.iter()
    }
}

impl TryFrom<RawFamily> for Family {
    type Error = Error;

    fn try_from(raw: RawFamily) -> Result<Self> {
        let mut family = Family::empty(raw.d)?;
        for u in raw.members {
            let shown = u.to_string();
            if !family.insert(u)? {
                return Err(Error::InvalidArgument(format!("duplicate member {shown}")));
            }
        }
        Ok(family)
    }
}

impl From<Family> for RawFamily {
    fn from(family: Family) -> Self {
        RawFamily { d: family.d, members: family.members.into_iter().collect() }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, u) in self.members.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{u}")?;
        }
        write!(f, "}}")
    }
}

impl fmt::Debug for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "d={} {}", self.d, self)
    }
}

/// Builds a family from set literals, e.g. `family![3; [1,2,4], [1,3,5]]`.
#[macro_export]
macro_rules! family {
    ($d:expr $(;)?) => {
        $crate::Family::empty($d).expect("valid grade")
    };
    ($d:expr; $([$($x:expr),+ $(,)?]),* $(,)?) => {
        $crate::Family::from_members($d, vec![$($crate::dset![$($x),+]),*]).expect("valid family literal")
    };
}
