//! Parsing of family sources and exponent vectors given on the command line.

use std::path::Path;

use crate::error::{Error, Result};
use crate::family::{ExponentVector, PrimeFamily, SigmaSet};
use crate::minors::{preset_generic, preset_pfaffian, preset_symmetric};
use crate::monomial::monomial_family;

fn parse_usize(text: &str, what: &str) -> Result<usize> {
    text.trim()
        .parse()
        .map_err(|_| Error::Parse(format!("{what}: expected a nonnegative integer, got {text:?}")))
}

/// A preset name (`monomial:n`, `generic:mxn`, `symmetric:m`, `pfaffian:m`)
/// or a path to a family JSON document.
pub fn load_family(source: &str) -> Result<PrimeFamily> {
    if let Some((kind, arg)) = source.split_once(':') {
        match kind {
            "monomial" => return monomial_family(parse_usize(arg, "monomial:n")?),
            "generic" => {
                let (m, n) = arg
                    .split_once('x')
                    .ok_or_else(|| Error::Parse(format!("generic preset wants mxn, got {arg:?}")))?;
                return preset_generic(parse_usize(m, "generic:mxn")?, parse_usize(n, "generic:mxn")?);
            }
            "symmetric" => return preset_symmetric(parse_usize(arg, "symmetric:m")?),
            "pfaffian" => return preset_pfaffian(parse_usize(arg, "pfaffian:m")?),
            _ if !Path::new(source).exists() => {
                return Err(Error::Parse(format!("unknown family preset {kind:?}")));
            }
            _ => {}
        }
    }
    let text = std::fs::read_to_string(source).map_err(|e| Error::Config(format!("reading {source}: {e}")))?;
    PrimeFamily::from_json(&text)
}

/// `"1,0,2"`.
pub fn parse_vector(text: &str) -> Result<ExponentVector> {
    text.split(',')
        .map(|part| {
            part.trim()
                .parse::<u32>()
                .map_err(|_| Error::Parse(format!("bad exponent {part:?} in {text:?}")))
        })
        .collect()
}

/// `"2,0;0,2"`.
pub fn parse_sigma_set(text: &str) -> Result<SigmaSet> {
    let rows = text.split(';').map(parse_vector).collect::<Result<Vec<_>>>()?;
    SigmaSet::new(rows).map_err(|e| Error::Parse(e.to_string()))
}

/// `"2,3,5"`.
pub fn parse_list(text: &str) -> Result<Vec<u64>> {
    text.split(',')
        .map(|p| p.trim().parse().map_err(|_| Error::Parse(format!("bad list entry {p:?}"))))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn presets_by_name() {
        assert_eq!(load_family("monomial:2").unwrap().m(), 2);
        assert_eq!(load_family("generic:2x3").unwrap().heights(), &[6, 2]);
        assert_eq!(load_family("pfaffian:1").unwrap().heights(), &[3]);
        assert_eq!(load_family("symmetric:2").unwrap().heights(), &[3, 1]);
        assert!(matches!(load_family("generic:23"), Err(Error::Parse(_))));
        assert!(matches!(load_family("cubic:2"), Err(Error::Parse(_))));
        assert!(matches!(load_family("/no/such/file.json"), Err(Error::Config(_))));
    }

    #[test]
    fn vectors() {
        assert_eq!(parse_vector("1, 0,2").unwrap(), vec![1, 0, 2]);
        assert!(parse_vector("1,-1").is_err());
        let set = parse_sigma_set("2,0;0,2").unwrap();
        assert_eq!(set.len(), 2);
        assert!(parse_sigma_set("2,0;1").is_err());
        assert_eq!(parse_list("2,3,5").unwrap(), vec![2, 3, 5]);
    }
}
