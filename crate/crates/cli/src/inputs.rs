//! Parsing of command-line values.

use std::str::FromStr;

use fatpoints::io::{read_scheme, SchemeInput};
use fatpoints::picard::DivClass;
use fatpoints::scheme::{random_generic_points, star_configuration};
use fatpoints::{Error, FatPointScheme, FieldSpec, ProjectivePoint, Result};

/// `rational`, `q`, or a prime modulus such as `32003`.
pub fn parse_field(s: &str) -> Result<FieldSpec> {
    let t = s.trim().to_ascii_lowercase();
    if t == "rational" || t == "q" {
        return Ok(FieldSpec::Rational);
    }
    let digits = t.strip_prefix("p=").or_else(|| t.strip_prefix("f")).unwrap_or(&t);
    let p: u64 = digits
        .parse()
        .map_err(|_| Error::parse("--field", format!("expected 'rational' or a prime, got {s:?}")))?;
    FieldSpec::prime(p).map_err(|e| Error::parse("--field", e.to_string()))
}

pub fn parse_list<T: FromStr>(s: &str, name: &str) -> Result<Vec<T>>
where
    T::Err: std::fmt::Display,
{
    let s = s.trim().trim_start_matches('(').trim_end_matches(')');
    if s.is_empty() {
        return Ok(Vec::new());
    }
    s.split(',')
        .enumerate()
        .map(|(i, x)| {
            x.trim()
                .parse()
                .map_err(|e: T::Err| Error::parse(format!("{name}[{i}]"), format!("{x:?}: {e}")))
        })
        .collect()
}

pub fn parse_point(s: &str, field: FieldSpec, n: usize) -> Result<ProjectivePoint> {
    let parts: Vec<&str> = s.trim().trim_start_matches('(').trim_end_matches(')').split(',').collect();
    if parts.len() != n + 1 {
        return Err(Error::parse("--point", format!("expected {} coordinates", n + 1)));
    }
    let coords = parts
        .iter()
        .enumerate()
        .map(|(i, c)| field.parse(c.trim()).map_err(|e| Error::parse(format!("--point[{i}]"), e.to_string())))
        .collect::<Result<Vec<_>>>()?;
    ProjectivePoint::new(coords).map_err(|e| Error::parse("--point", e.to_string()))
}

pub fn parse_class(s: &str, name: &str) -> Result<DivClass> {
    s.parse::<DivClass>().map_err(|e| match e {
        Error::Parse { message, .. } => Error::parse(name, message),
        other => Error::parse(name, other.to_string()),
    })
}

/// A scheme file, or `generic:R[xM]` / `star:S[xM]` drawn with the seed.
pub fn load_scheme(source: &str, field: FieldSpec, seed: u64) -> Result<SchemeInput> {
    for (prefix, star) in [("generic:", false), ("star:", true)] {
        if let Some(rest) = source.strip_prefix(prefix) {
            let (count, mult) = match rest.split_once('x') {
                Some((c, m)) => (c, m),
                None => (rest, "1"),
            };
            let count: usize = count
                .parse()
                .map_err(|_| Error::parse("scheme", format!("bad point count in {source:?}")))?;
            let mult: u32 = mult
                .parse()
                .map_err(|_| Error::parse("scheme", format!("bad multiplicity in {source:?}")))?;
            let points = if star {
                star_configuration(count, field, seed)?.points
            } else {
                random_generic_points(count, 2, field, seed)?
            };
            return Ok(SchemeInput {
                scheme: FatPointScheme::uniform(2, field, points, mult)?,
                curves: Vec::new(),
                lines: Vec::new(),
            });
        }
    }
    let text = std::fs::read_to_string(source)
        .map_err(|e| Error::parse("scheme file", format!("{source}: {e}")))?;
    read_scheme(&text)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fields() {
        assert_eq!(parse_field("Q").unwrap(), FieldSpec::Rational);
        assert_eq!(parse_field("32003").unwrap(), FieldSpec::Prime { p: 32003 });
        assert_eq!(parse_field("p=101").unwrap(), FieldSpec::Prime { p: 101 });
        assert!(matches!(parse_field("100"), Err(Error::Parse { .. })));
    }

    #[test]
    fn lists_and_points() {
        assert_eq!(parse_list::<u32>("(8,6, 5,2)", "d").unwrap(), vec![8, 6, 5, 2]);
        match parse_list::<u32>("8,x", "d") {
            Err(Error::Parse { field, .. }) => assert_eq!(field, "d[1]"),
            other => panic!("{other:?}"),
        }
        let p = parse_point("2,4,0", FieldSpec::Rational, 2).unwrap();
        assert_eq!(p.to_string(), "(1:2:0)");
        assert!(parse_point("1,0", FieldSpec::Rational, 2).is_err());
    }

    #[test]
    fn generated_schemes() {
        let f = FieldSpec::prime(2_147_483_647).unwrap();
        let a = load_scheme("generic:4x2", f, 5).unwrap();
        let b = load_scheme("generic:4x2", f, 5).unwrap();
        assert_eq!(a.scheme, b.scheme);
        assert_eq!(a.scheme.multiplicities(), &[2, 2, 2, 2]);
        assert_eq!(load_scheme("star:4", f, 0).unwrap().scheme.points().len(), 6);
    }
}
