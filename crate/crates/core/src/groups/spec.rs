use std::str::FromStr;

use serde::Deserialize;

use super::{FiniteSymplecticGroup, DEFAULT_MAX_ORDER};
use crate::coeffs::{RatMatrix, Rational};
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum SymmetricRep {
    Reflection,
    Permutation,
}

#[derive(Clone, Debug, PartialEq, Deserialize)]
#[serde(deny_unknown_fields)]
struct Builtin {
    #[serde(rename = "type")]
    kind: String,
    n: usize,
    rep: SymmetricRep,
}

/// Group description as read from a JSON file: either explicit generators on `h` or a builtin.
#[derive(Clone, Debug, PartialEq, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GroupSpec {
    #[serde(default)]
    dim_h: Option<usize>,
    #[serde(default)]
    generators_on_h: Option<Vec<Vec<Vec<Rational>>>>,
    #[serde(default)]
    builtin: Option<Builtin>,
}

impl GroupSpec {
    pub fn symmetric(n: usize, rep: SymmetricRep) -> Self {
        GroupSpec { dim_h: None, generators_on_h: None, builtin: Some(Builtin { kind: "symmetric".into(), n, rep }) }
    }

    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::Parse(format!("group spec: {e}")))
    }

    /// The builtin data `(n, rep)` for symmetric groups.
    pub fn as_symmetric(&self) -> Option<(usize, SymmetricRep)> {
        self.builtin.as_ref().filter(|b| b.kind == "symmetric").map(|b| (b.n, b.rep))
    }

    pub fn build(&self) -> Result<FiniteSymplecticGroup> {
        if let Some(b) = &self.builtin {
            if b.kind != "symmetric" {
                return Err(Error::Parse(format!("unknown builtin group type {:?}", b.kind)));
            }
            return FiniteSymplecticGroup::symmetric(b.n, b.rep);
        }
        let dim_h = self.dim_h.ok_or_else(|| Error::Parse("group spec needs dim_h or builtin".into()))?;
        let gens = self
            .generators_on_h
            .as_ref()
            .ok_or_else(|| Error::Parse("group spec needs generators_on_h".into()))?
            .iter()
            .map(|rows| RatMatrix::from_rows(rows.clone()))
            .collect::<Result<Vec<_>>>()?;
        FiniteSymplecticGroup::from_h_generators(dim_h, &gens, DEFAULT_MAX_ORDER)
    }
}

/// Inline form `symmetric:<n>:<reflection|permutation>`.
impl FromStr for GroupSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let parts: Vec<&str> = s.trim().split(':').collect();
        match parts.as_slice() {
            ["symmetric", n, rep] => {
                let n = n.parse().map_err(|_| Error::Parse(format!("bad group order in {s:?}")))?;
                let rep = match *rep {
                    "reflection" => SymmetricRep::Reflection,
                    "permutation" => SymmetricRep::Permutation,
                    other => return Err(Error::Parse(format!("unknown representation {other:?}"))),
                };
                Ok(GroupSpec::symmetric(n, rep))
            }
            _ => Err(Error::Parse(format!("unrecognized inline group {s:?}"))),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn json_generators_and_builtin_agree() {
        let explicit = GroupSpec::from_json(r#"{"dim_h": 1, "generators_on_h": [[["-1"]]]}"#).unwrap();
        let builtin = GroupSpec::from_json(r#"{"builtin": {"type": "symmetric", "n": 2, "rep": "reflection"}}"#).unwrap();
        assert_eq!(explicit.build().unwrap().elements(), builtin.build().unwrap().elements());
        assert_eq!("symmetric:2:reflection".parse::<GroupSpec>().unwrap(), builtin);
    }

    #[test]
    fn malformed_specs_are_rejected() {
        assert!(GroupSpec::from_json(r#"{"dim_h": 1, "extra": 3}"#).is_err());
        assert!(GroupSpec::from_json(r#"{"dim_h": 1, "generators_on_h": [[["1/0"]]]}"#).is_err());
        assert!("cyclic:3".parse::<GroupSpec>().is_err());
        assert!(GroupSpec::from_json(r#"{"dim_h": 1}"#).unwrap().build().is_err());
    }

    #[test]
    fn permutation_rep_of_s3() {
        let g = GroupSpec::symmetric(3, SymmetricRep::Permutation).build().unwrap();
        assert_eq!(g.order(), 6);
        assert_eq!(g.dim(), 6);
    }
}
