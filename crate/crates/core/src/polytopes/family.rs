//! Family descriptors and their string grammar.
//!
//! ```text
//! spec     := pyramid* family
//! pyramid  := "pyr:" | "pyr^" k ":"
//! family   := tag ":" params
//! params   := key "=" int ("," key "=" int)*   (scalar families)
//!           | int ("," int)*                    (vector families, or a lone scalar)
//! ```
//!
//! Examples: `payne:r=0,s=3,k=2`, `lecture-hall:7,1,7`, `pyr^2:reeve:h=6`.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum FamilySpec {
    StandardSimplex { d: usize },
    CrossPolytope { d: usize },
    UnitCube { d: usize },
    PmCube { d: usize },
    Reeve { h: u64 },
    Delta1q { q: Vec<u64> },
    Payne { r: u64, s: u64, k: u64 },
    BaseR { r: u64, d: usize },
    LectureHall { s: Vec<u64> },
    ChiseledPmCube { d: usize },
    Hypersimplex { d: usize, k: usize },
    Permutahedron { d: usize },
    Pyramid { k: usize, base: Box<FamilySpec> },
}

impl FamilySpec {
    pub fn tag(&self) -> &'static str {
        match self {
            FamilySpec::StandardSimplex { .. } => "standard-simplex",
            FamilySpec::CrossPolytope { .. } => "cross-polytope",
            FamilySpec::UnitCube { .. } => "unit-cube",
            FamilySpec::PmCube { .. } => "pm-cube",
            FamilySpec::Reeve { .. } => "reeve",
            FamilySpec::Delta1q { .. } => "delta-1q",
            FamilySpec::Payne { .. } => "payne",
            FamilySpec::BaseR { .. } => "base-r",
            FamilySpec::LectureHall { .. } => "lecture-hall",
            FamilySpec::ChiseledPmCube { .. } => "chiseled-cube",
            FamilySpec::Hypersimplex { .. } => "hypersimplex",
            FamilySpec::Permutahedron { .. } => "permutahedron",
            FamilySpec::Pyramid { .. } => "pyr",
        }
    }

    /// Wraps in `k` further lattice pyramids (merging with an outer pyramid).
    pub fn pyramid(self, k: usize) -> FamilySpec {
        match (k, self) {
            (0, spec) => spec,
            (k, FamilySpec::Pyramid { k: inner, base }) => FamilySpec::Pyramid { k: k + inner, base },
            (k, spec) => FamilySpec::Pyramid { k, base: Box::new(spec) },
        }
    }
}

fn join(v: &[u64]) -> String {
    v.iter().map(u64::to_string).collect::<Vec<_>>().join(",")
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let tag = self.tag();
        match self {
            FamilySpec::StandardSimplex { d }
            | FamilySpec::CrossPolytope { d }
            | FamilySpec::UnitCube { d }
            | FamilySpec::PmCube { d }
            | FamilySpec::ChiseledPmCube { d }
            | FamilySpec::Permutahedron { d } => write!(f, "{tag}:d={d}"),
            FamilySpec::Reeve { h } => write!(f, "{tag}:h={h}"),
            FamilySpec::Delta1q { q } => write!(f, "{tag}:{}", join(q)),
            FamilySpec::Payne { r, s, k } => write!(f, "{tag}:r={r},s={s},k={k}"),
            FamilySpec::BaseR { r, d } => write!(f, "{tag}:r={r},d={d}"),
            FamilySpec::LectureHall { s } => write!(f, "{tag}:{}", join(s)),
            FamilySpec::Hypersimplex { d, k } => write!(f, "{tag}:d={d},k={k}"),
            FamilySpec::Pyramid { k: 1, base } => write!(f, "pyr:{base}"),
            FamilySpec::Pyramid { k, base } => write!(f, "pyr^{k}:{base}"),
        }
    }
}

fn parse_int<T: FromStr>(s: &str, what: &str) -> Result<T> {
    s.trim()
        .parse()
        .map_err(|_| Error::Parse(format!("{what}: expected a nonnegative integer, got {s:?}")))
}

struct Params {
    tag: String,
    named: BTreeMap<String, String>,
    positional: Vec<String>,
}

impl Params {
    fn parse(tag: &str, body: &str) -> Result<Params> {
        let mut named = BTreeMap::new();
        let mut positional = Vec::new();
        for item in body.split(',').map(str::trim).filter(|s| !s.is_empty()) {
            match item.split_once('=') {
                Some((k, v)) => {
                    if named.insert(k.trim().to_string(), v.trim().to_string()).is_some() {
                        return Err(Error::Parse(format!("{tag}: parameter {k} given twice")));
                    }
                }
                None => positional.push(item.to_string()),
            }
        }
        if !named.is_empty() && !positional.is_empty() {
            return Err(Error::Parse(format!("{tag}: mix of named and positional parameters")));
        }
        Ok(Params {
            tag: tag.to_string(),
            named,
            positional,
        })
    }

    /// Named scalars in the given order; a single positional value is accepted
    /// when exactly one key is expected.
    fn scalars<T: FromStr + Copy>(&self, keys: &[&str]) -> Result<Vec<T>> {
        if !self.positional.is_empty() {
            if keys.len() == 1 && self.positional.len() == 1 {
                return Ok(vec![parse_int(&self.positional[0], &self.tag)?]);
            }
            return Err(Error::Parse(format!(
                "{}: expected parameters {}",
                self.tag,
                keys.join(",")
            )));
        }
        if let Some(extra) = self.named.keys().find(|k| !keys.contains(&k.as_str())) {
            return Err(Error::Parse(format!("{}: unknown parameter {extra}", self.tag)));
        }
        keys.iter()
            .map(|k| {
                let v = self
                    .named
                    .get(*k)
                    .ok_or_else(|| Error::Parse(format!("{}: missing parameter {k}", self.tag)))?;
                parse_int(v, &format!("{}.{k}", self.tag))
            })
            .collect()
    }

    fn vector(&self) -> Result<Vec<u64>> {
        if !self.named.is_empty() || self.positional.is_empty() {
            return Err(Error::Parse(format!(
                "{}: expected a comma-separated integer list",
                self.tag
            )));
        }
        self.positional.iter().map(|p| parse_int(p, &self.tag)).collect()
    }
}

impl FromStr for FamilySpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let (head, rest) = s
            .split_once(':')
            .ok_or_else(|| Error::Parse(format!("{s:?}: expected tag:parameters")))?;
        let head = head.trim().to_ascii_lowercase().replace('_', "-");
        if head == "pyr" || head.starts_with("pyr^") {
            let k = match head.strip_prefix("pyr^") {
                Some(k) => parse_int::<usize>(k, "pyramid count")?,
                None => 1,
            };
            if k == 0 {
                return Err(Error::Parse("pyramid count must be at least 1".into()));
            }
            return Ok(rest.parse::<FamilySpec>()?.pyramid(k));
        }
        let p = Params::parse(&head, rest)?;
        let spec = match head.as_str() {
            "standard-simplex" | "simplex" => FamilySpec::StandardSimplex { d: p.scalars(&["d"])?[0] },
            "cross-polytope" | "cross" => FamilySpec::CrossPolytope { d: p.scalars(&["d"])?[0] },
            "unit-cube" | "cube" => FamilySpec::UnitCube { d: p.scalars(&["d"])?[0] },
            "pm-cube" => FamilySpec::PmCube { d: p.scalars(&["d"])?[0] },
            "reeve" => FamilySpec::Reeve { h: p.scalars(&["h"])?[0] },
            "delta-1q" => FamilySpec::Delta1q { q: p.vector()? },
            "payne" => {
                let v = p.scalars::<u64>(&["r", "s", "k"])?;
                FamilySpec::Payne { r: v[0], s: v[1], k: v[2] }
            }
            "base-r" => {
                let v = p.scalars::<u64>(&["r", "d"])?;
                FamilySpec::BaseR { r: v[0], d: v[1] as usize }
            }
            "lecture-hall" => FamilySpec::LectureHall { s: p.vector()? },
            "chiseled-cube" | "chiseled-pm-cube" => FamilySpec::ChiseledPmCube { d: p.scalars(&["d"])?[0] },
            "hypersimplex" => {
                let v = p.scalars::<usize>(&["d", "k"])?;
                FamilySpec::Hypersimplex { d: v[0], k: v[1] }
            }
            "permutahedron" => FamilySpec::Permutahedron { d: p.scalars(&["d"])?[0] },
            other => return Err(Error::Parse(format!("unknown family tag {other:?}"))),
        };
        Ok(spec)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn parses_documented_forms() {
        assert_eq!(
            "payne:r=0,s=3,k=2".parse::<FamilySpec>().unwrap(),
            FamilySpec::Payne { r: 0, s: 3, k: 2 }
        );
        assert_eq!(
            "lecture-hall:7,1,7".parse::<FamilySpec>().unwrap(),
            FamilySpec::LectureHall { s: vec![7, 1, 7] }
        );
        assert_eq!(
            "pyr^2:reeve:h=6".parse::<FamilySpec>().unwrap(),
            FamilySpec::Reeve { h: 6 }.pyramid(2)
        );
        assert_eq!(
            "pyr:pyr:reeve:6".parse::<FamilySpec>().unwrap(),
            FamilySpec::Reeve { h: 6 }.pyramid(2)
        );
        assert_eq!(
            "chiseled_cube:d=7".parse::<FamilySpec>().unwrap(),
            FamilySpec::ChiseledPmCube { d: 7 }
        );
    }

    #[test]
    fn rejects_malformed() {
        for bad in [
            "reeve",
            "nonsense:d=3",
            "payne:r=0,s=3",
            "payne:r=0,s=3,k=2,x=1",
            "reeve:h=six",
            "lecture-hall:s=3",
            "pyr^0:reeve:h=2",
            "payne:0,3,2",
            "reeve:h=1,h=2",
            "hypersimplex:d=4,2",
        ] {
            assert!(bad.parse::<FamilySpec>().is_err(), "{bad}");
        }
    }

    fn arb_base() -> impl Strategy<Value = FamilySpec> {
        prop_oneof![
            (1usize..9).prop_map(|d| FamilySpec::CrossPolytope { d }),
            (1u64..50).prop_map(|h| FamilySpec::Reeve { h }),
            (0u64..3, 3u64..5, 2u64..5).prop_map(|(r, s, k)| FamilySpec::Payne { r, s, k }),
            proptest::collection::vec(1u64..9, 1..5).prop_map(|s| FamilySpec::LectureHall { s }),
            proptest::collection::vec(1u64..9, 1..5).prop_map(|q| FamilySpec::Delta1q { q }),
            (2usize..7, 1usize..5).prop_map(|(d, k)| FamilySpec::Hypersimplex { d, k }),
        ]
    }

    proptest! {
        #[test]
        fn display_parses_back(base in arb_base(), k in 0usize..3) {
            let spec = base.pyramid(k);
            prop_assert_eq!(spec.to_string().parse::<FamilySpec>().unwrap(), spec);
        }
    }
}
