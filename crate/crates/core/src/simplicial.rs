//! Simplicial complexes stored grade by grade, their f-vectors, Inc-images
//! and compressions, and combinatorial Inc-invariant chains.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::compression::{compress, initial_segment_of_size, is_compressed, is_shifted};
use crate::dset::DSet;
use crate::error::{Error, Result};
use crate::family::{shadow, Family};
use crate::inc::inc_image_family;
use crate::numeric::{chain_violation, FVector, FVectorChain};

/// An inclusion-closed collection of nonempty faces. The empty face is implicit.
#[derive(Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "RawComplex", into = "RawComplex")]
pub struct SimplicialComplex {
    /// Only nonempty grades are stored.
    grades: BTreeMap<usize, Family>,
}

#[derive(Serialize, Deserialize)]
struct RawComplex {
    grades: BTreeMap<usize, Vec<DSet>>,
}

impl SimplicialComplex {
    pub fn empty() -> Self {
        Self::default()
    }

    /// The complex generated by `faces`: every nonempty subset of every face.
    pub fn from_facets(faces: impl IntoIterator<Item = DSet>) -> Self {
        let mut grades: BTreeMap<usize, Family> = BTreeMap::new();
        for face in faces {
            let e = face.elements();
            for mask in 1u64..(1 << e.len()) {
                let sub: Vec<u32> = (0..e.len()).filter(|i| mask >> i & 1 == 1).map(|i| e[i]).collect();
                let d = sub.len();
                grades
                    .entry(d)
                    .or_insert_with(|| Family::empty(d).expect("d >= 1"))
                    .extend_unchecked([DSet::from_sorted_unchecked(sub)]);
            }
        }
        SimplicialComplex { grades }
    }

    /// The full simplex on `[n]`.
    pub fn simplex(n: u32) -> Self {
        if n == 0 {
            return Self::empty();
        }
        Self::from_facets([DSet::from_sorted_unchecked((1..=n).collect())])
    }

    /// `F_d(Δ)`, empty if the complex has no `d`-faces.
    pub fn grade(&self, d: usize) -> Family {
        self.grades.get(&d).cloned().unwrap_or_else(|| Family::empty(d.max(1)).expect("d >= 1"))
    }

    pub fn grades(&self) -> &BTreeMap<usize, Family> {
        &self.grades
    }

    pub fn top_grade(&self) -> usize {
        self.grades.keys().next_back().copied().unwrap_or(0)
    }

    pub fn num_faces(&self) -> usize {
        self.grades.values().map(Family::len).sum()
    }

    pub fn contains(&self, face: &DSet) -> bool {
        self.grades.get(&face.len()).is_some_and(|f| f.contains(face))
    }

    pub fn faces(&self) -> impl Iterator<Item = &DSet> {
        self.grades.values().flat_map(Family::iter)
    }

    pub fn max_vertex(&self) -> u32 {
        self.grades.values().map(Family::max_element).max().unwrap_or(0)
    }

    /// Gradewise inclusion.
    pub fn is_subcomplex_of(&self, other: &SimplicialComplex) -> bool {
        self.faces().all(|f| other.contains(f))
    }

    pub fn is_shifted(&self) -> bool {
        self.grades.values().all(is_shifted)
    }

    pub fn is_compressed(&self) -> bool {
        self.grades.values().all(is_compressed)
    }

    fn from_grades_unchecked(grades: impl IntoIterator<Item = Family>) -> Self {
        SimplicialComplex { grades: grades.into_iter().filter(|f| !f.is_empty()).map(|f| (f.d(), f)).collect() }
    }
}

/// Builds a complex from its grades, rejecting collections that are not closed under taking subsets.
pub fn validate_complex(grades: impl IntoIterator<Item = Family>) -> Result<SimplicialComplex> {
    let mut by_grade: BTreeMap<usize, Family> = BTreeMap::new();
    for family in grades {
        match by_grade.get_mut(&family.d()) {
            Some(existing) => *existing = existing.union(&family)?,
            None => {
                by_grade.insert(family.d(), family);
            }
        }
    }
    by_grade.retain(|_, f| !f.is_empty());
    for (&d, family) in &by_grade {
        if d < 2 {
            continue;
        }
        let below = by_grade.get(&(d - 1));
        for lower in shadow(family)?.iter() {
            if below.is_some_and(|b| b.contains(lower)) {
                continue;
            }
            let face = family
                .iter()
                .find(|u| u.facets().any(|f| &f == lower))
                .expect("shadow members come from some face")
                .clone();
            return Err(Error::MissingFace { missing: lower.clone(), face });
        }
    }
    Ok(SimplicialComplex { grades: by_grade })
}

/// `(f_0, f_1, ...)` up to the top grade.
pub fn f_vector(complex: &SimplicialComplex) -> FVector {
    FVector((1..=complex.top_grade()).map(|d| complex.grade(d).len() as u64).collect())
}

/// `Inc(Δ)`, gradewise.
pub fn inc_complex(complex: &SimplicialComplex) -> Result<SimplicialComplex> {
    validate_complex(complex.grades.values().map(inc_image_family))
}

/// `C(Δ)`, gradewise.
pub fn compress_complex(complex: &SimplicialComplex) -> Result<SimplicialComplex> {
    validate_complex(complex.grades.values().map(compress))
}

/// For every grade `1..=n`, the `d`-subsets of `[n]` that are not faces. Empty grades are omitted.
pub fn non_faces(complex: &SimplicialComplex, n: u32) -> Result<BTreeMap<usize, Family>> {
    if let Some(face) = complex.faces().find(|f| f.largest() > n) {
        return Err(Error::OutsideGround { face: face.clone(), n });
    }
    let mut out = BTreeMap::new();
    for d in 1..=n as usize {
        let all = initial_segment_of_size(d, crate::binomial::binomial(u64::from(n), d as u64)? as usize)?;
        let missing = all.difference(&complex.grade(d))?;
        if !missing.is_empty() {
            out.insert(d, missing);
        }
    }
    Ok(out)
}

/// A face of `Inc(Δ_n)` missing from `Δ_{n+1}`; `n` is 1-based.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ChainBreak {
    pub n: usize,
    pub face: DSet,
}

impl fmt::Display for ChainBreak {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "face {} of Inc(Δ_{}) is not in Δ_{}", self.face, self.n, self.n + 1)
    }
}

/// First `n` with `Inc(Δ_n) ⊄ Δ_{n+1}`, reporting its smallest offending face.
pub fn check_chain(chain: &[SimplicialComplex]) -> Option<ChainBreak> {
    chain.windows(2).enumerate().find_map(|(i, pair)| {
        pair[0].grades.values().find_map(|family| {
            inc_image_family(family)
                .iter()
                .find(|face| !pair[1].contains(face))
                .map(|face| ChainBreak { n: i + 1, face: face.clone() })
        })
    })
}

/// Realizes a feasible f-vector chain by gradewise initial segments.
pub fn construct_chain(chain: &FVectorChain) -> Result<Vec<SimplicialComplex>> {
    if let Some(v) = chain_violation(chain)? {
        return Err(Error::InfeasibleChain(v.to_string()));
    }
    chain
        .vectors()
        .iter()
        .map(|f| {
            let grades =
                f.0.iter()
                    .enumerate()
                    .map(|(i, &count)| {
                        let count = usize::try_from(count).map_err(|_| Error::Overflow("face count"))?;
                        initial_segment_of_size(i + 1, count)
                    })
                    .collect::<Result<Vec<_>>>()?;
            Ok(SimplicialComplex::from_grades_unchecked(grades))
        })
        .collect()
}

/// For each `n < N`, whether `Inc(Δ_n) = Δ_{n+1}` exactly.
pub fn stabilization_report(chain: &[SimplicialComplex]) -> Result<Vec<bool>> {
    if let Some(b) = check_chain(chain) {
        return Err(Error::NotInvariant(b.to_string()));
    }
    chain.windows(2).map(|pair| Ok(inc_complex(&pair[0])? == pair[1])).collect()
}

impl TryFrom<RawComplex> for SimplicialComplex {
    type Error = Error;

    fn try_from(raw: RawComplex) -> Result<Self> {
        let grades = raw
            .grades
            .into_iter()
            .map(|(d, members)| {
                if members.iter().any(|u| u.len() != d) {
                    return Err(Error::InvalidArgument(format!("grade {d} holds a face of another size")));
                }
                Family::from_members(d, members)
            })
            .collect::<Result<Vec<_>>>()?;
        validate_complex(grades)
    }
}

impl From<SimplicialComplex> for RawComplex {
    fn from(c: SimplicialComplex) -> Self {
        RawComplex { grades: c.grades.into_iter().map(|(d, f)| (d, f.iter().cloned().collect())).collect() }
    }
}

impl fmt::Display for SimplicialComplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{∅")?;
        for face in self.faces() {
            write!(f, ",{face}")?;
        }
        write!(f, "}}")
    }
}

impl fmt::Debug for SimplicialComplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::{dset, family};

    fn boundary(a: u32, b: u32, c: u32) -> SimplicialComplex {
        SimplicialComplex::from_facets([dset![a, b], dset![a, c], dset![b, c]])
    }

    #[test]
    fn validation() {
        let ok = validate_complex([family![1; [1], [2]], family![2; [1, 2]]]).unwrap();
        assert_eq!(ok.num_faces(), 3);
        let err = validate_complex([family![2; [1, 2]]]).unwrap_err();
        assert_eq!(err, Error::MissingFace { missing: dset![1], face: dset![1, 2] });
        assert_eq!(validate_complex([]).unwrap(), SimplicialComplex::empty());
        assert_eq!(validate_complex([family![2]]).unwrap(), SimplicialComplex::empty());
    }

    #[test]
    fn f_vectors() {
        assert_eq!(f_vector(&SimplicialComplex::simplex(3)), FVector(vec![3, 3, 1]));
        assert_eq!(f_vector(&SimplicialComplex::empty()), FVector(vec![]));
        assert_eq!(f_vector(&boundary(1, 2, 3)), FVector(vec![3, 3]));
    }

    #[test]
    fn inc_of_complexes() {
        assert_eq!(inc_complex(&SimplicialComplex::simplex(2)).unwrap(), boundary(1, 2, 3));
        assert_eq!(inc_complex(&SimplicialComplex::empty()).unwrap(), SimplicialComplex::empty());
        let shifted = SimplicialComplex::from_facets([dset![1, 2, 3], dset![1, 4]]);
        assert!(shifted.is_shifted());
        assert!(inc_complex(&shifted).unwrap().is_shifted());
    }

    #[test]
    fn compression_of_complexes() {
        assert_eq!(compress_complex(&boundary(2, 3, 4)).unwrap(), boundary(1, 2, 3));
        let c = SimplicialComplex::simplex(4);
        assert!(c.is_compressed());
        assert_eq!(compress_complex(&c).unwrap(), c);
        assert_eq!(compress_complex(&SimplicialComplex::empty()).unwrap(), SimplicialComplex::empty());
    }

    #[test]
    fn non_face_examples() {
        let c = SimplicialComplex::from_facets([dset![1], dset![2]]);
        let nf = non_faces(&c, 2).unwrap();
        assert_eq!(nf.len(), 1);
        assert_eq!(nf[&2], family![2; [1, 2]]);
        assert!(non_faces(&SimplicialComplex::simplex(4), 4).unwrap().is_empty());
        let nf = non_faces(&SimplicialComplex::empty(), 2).unwrap();
        assert_eq!(nf[&1], family![1; [1], [2]]);
        assert_eq!(nf[&2], family![2; [1, 2]]);
        assert!(matches!(non_faces(&c, 1), Err(Error::OutsideGround { .. })));
    }

    #[test]
    fn chain_checks() {
        let simplices: Vec<_> = (1..=4).map(SimplicialComplex::simplex).collect();
        assert_eq!(check_chain(&simplices), None);
        let one = SimplicialComplex::from_facets([dset![1]]);
        assert_eq!(check_chain(&[one.clone(), one.clone()]), Some(ChainBreak { n: 1, face: dset![2] }));
        assert_eq!(check_chain(&[one]), None);
    }

    #[test]
    fn construction() {
        let chain = FVectorChain::new(vec![FVector(vec![2]), FVector(vec![3])]).unwrap();
        let built = construct_chain(&chain).unwrap();
        assert_eq!(built[0], SimplicialComplex::from_facets([dset![1], dset![2]]));
        assert_eq!(built[1], SimplicialComplex::from_facets([dset![1], dset![2], dset![3]]));

        let simplex_chain =
            FVectorChain::new((1..=5).map(|n| f_vector(&SimplicialComplex::simplex(n))).collect()).unwrap();
        let built = construct_chain(&simplex_chain).unwrap();
        for (n, c) in built.iter().enumerate() {
            assert_eq!(c, &SimplicialComplex::simplex(n as u32 + 1));
        }
        let bad = FVectorChain::new(vec![FVector(vec![2]), FVector(vec![2])]).unwrap();
        assert!(matches!(construct_chain(&bad), Err(Error::InfeasibleChain(_))));
    }

    #[test]
    fn stabilization() {
        let start = SimplicialComplex::from_facets([dset![1, 2]]);
        let mut chain = vec![start];
        for _ in 0..3 {
            let next = inc_complex(chain.last().unwrap()).unwrap();
            chain.push(next);
        }
        assert_eq!(stabilization_report(&chain).unwrap(), vec![true, true, true]);

        let bigger = vec![SimplicialComplex::simplex(1), SimplicialComplex::simplex(3)];
        assert_eq!(stabilization_report(&bigger).unwrap(), vec![false]);
        assert!(stabilization_report(&[SimplicialComplex::simplex(2)]).unwrap().is_empty());
        let broken = vec![SimplicialComplex::simplex(2), SimplicialComplex::simplex(2)];
        assert!(matches!(stabilization_report(&broken), Err(Error::NotInvariant(_))));
    }

    #[test]
    fn json_shape() {
        let c = validate_complex([family![1; [1], [2]], family![2; [1, 2]]]).unwrap();
        let s = serde_json::to_string(&c).unwrap();
        assert_eq!(s, r#"{"grades":{"1":[[1],[2]],"2":[[1,2]]}}"#);
        assert_eq!(serde_json::from_str::<SimplicialComplex>(&s).unwrap(), c);
        assert!(serde_json::from_str::<SimplicialComplex>(r#"{"grades":{"2":[[1,2]]}}"#).is_err());
        assert!(serde_json::from_str::<SimplicialComplex>(r#"{"grades":{"1":[[1,2]]}}"#).is_err());
    }
}
