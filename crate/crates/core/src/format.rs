//! Plain-text and JSON input formats.
//!
//! A set is a line of space-separated integers (`1 2 4`). A family is a
//! header line `d=<d>` followed by one set per line. Blank lines and lines
//! starting with `#` are ignored. Every parser also accepts the JSON form of
//! its value when the input starts with `{` or `[`.

use serde::de::DeserializeOwned;

use crate::dset::DSet;
use crate::error::{Error, Result};
use crate::family::Family;
use crate::numeric::{FVector, FVectorChain};
use crate::simplicial::SimplicialComplex;

fn parse_error(location: impl Into<String>, message: impl ToString) -> Error {
    Error::Parse { location: location.into(), message: message.to_string() }
}

fn looks_like_json(input: &str) -> bool {
    matches!(input.trim_start().chars().next(), Some('{' | '['))
}

fn from_json<T: DeserializeOwned>(input: &str) -> Result<T> {
    serde_json::from_str(input).map_err(|e| parse_error(format!("line {} column {}", e.line(), e.column()), e))
}

/// Non-blank, non-comment lines with their 1-based line numbers.
fn content_lines(input: &str) -> impl Iterator<Item = (usize, &str)> {
    input
        .lines()
        .enumerate()
        .map(|(i, line)| (i + 1, line.trim()))
        .filter(|(_, line)| !line.is_empty() && !line.starts_with('#'))
}

fn parse_numbers<T: std::str::FromStr>(line: &str, location: &str) -> Result<Vec<T>>
where
    T::Err: std::fmt::Display,
{
    line.split(|c: char| c.is_whitespace() || c == ',')
        .filter(|t| !t.is_empty())
        .map(|t| t.parse::<T>().map_err(|e| parse_error(location, format!("`{t}`: {e}"))))
        .collect()
}

fn dset_at(line: &str, location: &str) -> Result<DSet> {
    let elements = parse_numbers::<u32>(line, location)?;
    DSet::new(elements).map_err(|e| parse_error(location, e))
}

/// One set, as text or a JSON array.
pub fn parse_dset(input: &str) -> Result<DSet> {
    if looks_like_json(input) {
        return from_json(input);
    }
    let mut lines = content_lines(input);
    let (no, line) = lines.next().ok_or_else(|| parse_error("line 1", "expected a set"))?;
    if let Some((extra, _)) = lines.next() {
        return Err(parse_error(format!("line {extra}"), "expected a single set"));
    }
    dset_at(line, &format!("line {no}"))
}

/// A family, as text with a `d=` header or as JSON.
pub fn parse_family(input: &str) -> Result<Family> {
    if looks_like_json(input) {
        return from_json(input);
    }
    let mut lines = content_lines(input);
    let (no, header) = lines.next().ok_or_else(|| parse_error("line 1", "expected header `d=<d>`"))?;
    let d = header
        .strip_prefix("d=")
        .or_else(|| header.strip_prefix("d ="))
        .ok_or_else(|| parse_error(format!("line {no}"), format!("expected header `d=<d>`, found `{header}`")))?
        .trim()
        .parse::<usize>()
        .map_err(|e| parse_error(format!("line {no}"), format!("header: {e}")))?;
    let mut family = Family::empty(d).map_err(|e| parse_error(format!("line {no}"), e))?;
    for (no, line) in lines {
        let location = format!("line {no}");
        let u = dset_at(line, &location)?;
        if u.len() != d {
            return Err(parse_error(location, format!("set {u} has {} elements, header says d={d}", u.len())));
        }
        if !family.insert(u.clone())? {
            return Err(parse_error(location, format!("duplicate set {u}")));
        }
    }
    Ok(family)
}

/// The text form accepted by [`parse_family`].
pub fn family_to_text(f: &Family) -> String {
    let mut out = format!("d={}\n", f.d());
    for u in f.iter() {
        out.push_str(&dset_to_text(u));
        out.push('\n');
    }
    out
}

pub fn dset_to_text(u: &DSet) -> String {
    u.elements().iter().map(u32::to_string).collect::<Vec<_>>().join(" ")
}

/// An f-vector: integers on one line, or a JSON array.
pub fn parse_fvector(input: &str) -> Result<FVector> {
    if looks_like_json(input) {
        return from_json(input);
    }
    let mut lines = content_lines(input);
    let Some((no, line)) = lines.next() else {
        return Ok(FVector::default());
    };
    if let Some((extra, _)) = lines.next() {
        return Err(parse_error(format!("line {extra}"), "expected a single f-vector"));
    }
    Ok(FVector(parse_numbers(line, &format!("line {no}"))?))
}

/// An f-vector chain: one f-vector per line, or a JSON array of arrays.
pub fn parse_fvector_chain(input: &str) -> Result<FVectorChain> {
    if looks_like_json(input) {
        return from_json(input);
    }
    let vectors = content_lines(input)
        .map(|(no, line)| Ok(FVector(parse_numbers(line, &format!("line {no}"))?)))
        .collect::<Result<Vec<_>>>()?;
    FVectorChain::new(vectors).map_err(|e| parse_error("input", e))
}

/// A complex in JSON.
pub fn parse_complex(input: &str) -> Result<SimplicialComplex> {
    from_json(input)
}

/// A chain of complexes as a JSON array.
pub fn parse_complex_chain(input: &str) -> Result<Vec<SimplicialComplex>> {
    from_json(input)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::{dset, family};

    #[test]
    fn sets() {
        assert_eq!(parse_dset("1 2 4\n").unwrap(), dset![1, 2, 4]);
        assert_eq!(parse_dset("[1,2,4]").unwrap(), dset![1, 2, 4]);
        assert!(matches!(parse_dset("2 1"), Err(Error::Parse { .. })));
        assert!(parse_dset("1 x").is_err());
        assert!(parse_dset("").is_err());
        assert!(parse_dset("1\n2").is_err());
    }

    #[test]
    fn families() {
        let f = family![3; [1, 2, 4], [1, 3, 5]];
        assert_eq!(parse_family("d=3\n1 2 4\n\n# comment\n1 3 5\n").unwrap(), f);
        assert_eq!(parse_family(&family_to_text(&f)).unwrap(), f);
        assert_eq!(parse_family(r#"{"d":3,"members":[[1,2,4],[1,3,5]]}"#).unwrap(), f);
        assert_eq!(parse_family("d=2\n").unwrap(), family![2]);
    }

    #[test]
    fn family_errors_name_the_line() {
        let err = parse_family("d=3\n1 2 4\n1 2\n").unwrap_err();
        assert_eq!(
            err,
            Error::Parse { location: "line 3".into(), message: "set (1,2) has 2 elements, header says d=3".into() }
        );
        let err = parse_family("d=2\n1 2\n1 2\n").unwrap_err();
        assert!(matches!(err, Error::Parse { location, .. } if location == "line 3"));
        assert!(matches!(parse_family("1 2 3"), Err(Error::Parse { location, .. }) if location == "line 1"));
        assert!(matches!(parse_family("{\"d\":3"), Err(Error::Parse { .. })));
    }

    #[test]
    fn vectors_and_chains() {
        assert_eq!(parse_fvector("3 3 1").unwrap(), FVector(vec![3, 3, 1]));
        assert_eq!(parse_fvector("[3,3,1]").unwrap(), FVector(vec![3, 3, 1]));
        let c = parse_fvector_chain("1\n2 1\n3 3 1\n").unwrap();
        assert_eq!(c.len(), 3);
        assert_eq!(parse_fvector_chain("[[1],[2,1]]").unwrap().len(), 2);
        assert!(parse_fvector_chain("").is_err());
        assert!(parse_fvector("1 -2").is_err());
    }

    #[test]
    fn complexes() {
        let c = parse_complex(r#"{"grades": {"1": [[1],[2]], "2": [[1,2]]}}"#).unwrap();
        assert_eq!(c.num_faces(), 3);
        assert!(parse_complex(r#"{"grades": {"2": [[1,2]]}}"#).is_err());
        assert_eq!(parse_complex_chain("[]").unwrap().len(), 0);
    }
}
