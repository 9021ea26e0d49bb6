//! Pair-spec files.
//!
//! One TOML document per pair:
//!
//! ```toml
//! name = "CnH4"
//! family = "C"
//! rank = "n"          # or a literal integer
//! min_n = 4
//! delta0 = [1, 3, "5..n"]
//! thetabar = []       # e.g. [[1, "n"]]
//! ```
//!
//! Indices are 1-based. A rank of `"n"` makes the file a template; index
//! entries may then be `"n"`, `"n-k"` or inclusive ranges `"a..b"` over those.
//! `family` may also be a product type such as `"A1xA1"`.

use std::path::{Path, PathBuf};

use serde::Deserialize;

use crate::error::{Error, Result};
use crate::rootsys::{CartanType, RootSystem};
use crate::scalar::Scalar;
use crate::sympair::{SatakeSpec, SymmetricPair};

#[derive(Clone, Debug, Deserialize)]
#[serde(untagged)]
pub enum Index {
    Int(i64),
    Expr(String),
}

#[derive(Clone, Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PairFile {
    pub name: String,
    pub family: String,
    #[serde(default)]
    pub rank: Option<Index>,
    #[serde(default)]
    pub min_n: Option<usize>,
    #[serde(default)]
    pub delta0: Vec<Index>,
    #[serde(default)]
    pub thetabar: Vec<[Index; 2]>,
    #[serde(default)]
    pub description: Option<String>,
}

fn eval(expr: &str, n: Option<usize>) -> Result<i64> {
    let e: String = expr.chars().filter(|c| !c.is_whitespace()).collect();
    if let Ok(v) = e.parse::<i64>() {
        return Ok(v);
    }
    let need_n = || n.map(|v| v as i64).ok_or_else(|| Error::PairSpec(format!("`{expr}` needs a parameter n")));
    if e == "n" {
        return need_n();
    }
    if let Some(rest) = e.strip_prefix("n-") {
        let k: i64 = rest.parse().map_err(|_| Error::PairSpec(format!("bad index `{expr}`")))?;
        return Ok(need_n()? - k);
    }
    if let Some(rest) = e.strip_prefix("n+") {
        let k: i64 = rest.parse().map_err(|_| Error::PairSpec(format!("bad index `{expr}`")))?;
        return Ok(need_n()? + k);
    }
    Err(Error::PairSpec(format!("bad index `{expr}`")))
}

fn expand(item: &Index, n: Option<usize>) -> Result<Vec<i64>> {
    match item {
        Index::Int(v) => Ok(vec![*v]),
        Index::Expr(s) => match s.split_once("..") {
            Some((a, b)) => {
                let (a, b) = (eval(a, n)?, eval(b, n)?);
                Ok((a..=b).collect())
            }
            None => Ok(vec![eval(s, n)?]),
        },
    }
}

fn single(item: &Index, n: Option<usize>) -> Result<i64> {
    match expand(item, n)?.as_slice() {
        [v] => Ok(*v),
        _ => Err(Error::PairSpec("a thetabar entry must name one node".into())),
    }
}

fn to_zero_based(v: i64, rank: usize) -> Result<usize> {
    if v < 1 || v as usize > rank {
        return Err(Error::PairSpec(format!("node {v} out of range 1..{rank}")));
    }
    Ok(v as usize - 1)
}

impl PairFile {
    pub fn parse(text: &str) -> Result<Self> {
        toml::from_str(text).map_err(|e| Error::PairSpec(e.to_string()))
    }

    pub fn load(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| Error::PairSpec(format!("{}: {e}", path.display())))?;
        Self::parse(&text)
    }

    pub fn is_template(&self) -> bool {
        matches!(&self.rank, Some(Index::Expr(_)))
    }

    /// Display name, with the parameter appended for templates.
    pub fn instance_name(&self, n: Option<usize>) -> String {
        match (self.is_template(), n) {
            (true, Some(n)) => format!("{}({n})", self.name),
            _ => self.name.clone(),
        }
    }

    fn cartan_type(&self, n: Option<usize>) -> Result<CartanType> {
        let fam = self.family.trim();
        if fam.len() > 1 {
            let t: CartanType = fam.parse()?;
            if let Some(r) = &self.rank {
                if single(r, n)? as usize != t.rank() {
                    return Err(Error::PairSpec("rank disagrees with family".into()));
                }
            }
            return Ok(t);
        }
        let rank = self
            .rank
            .as_ref()
            .ok_or_else(|| Error::PairSpec("missing rank".into()))?;
        let r = single(rank, n)?;
        if r < 1 {
            return Err(Error::PairSpec(format!("rank {r} is not positive")));
        }
        Ok(CartanType::simple(fam.parse()?, r as usize))
    }

    /// Instantiates the Satake data; `n` is required for templates.
    pub fn satake<T: Scalar>(&self, n: Option<usize>) -> Result<SatakeSpec<T>> {
        if self.is_template() {
            let Some(v) = n else {
                return Err(Error::InvalidParameter {
                    name: self.name.clone(),
                    reason: "this pair needs a parameter n".into(),
                });
            };
            if let Some(m) = self.min_n {
                if v < m {
                    return Err(Error::InvalidParameter {
                        name: self.name.clone(),
                        reason: format!("n = {v} is below the minimum {m}"),
                    });
                }
            }
        }
        let ctype = self.cartan_type(n)?;
        let rank = ctype.rank();
        let rs = RootSystem::new(ctype).map_err(|e| Error::InvalidParameter {
            name: self.name.clone(),
            reason: e.to_string(),
        })?;
        let mut d0 = Vec::new();
        for item in &self.delta0 {
            for v in expand(item, n)? {
                d0.push(to_zero_based(v, rank)?);
            }
        }
        let mut pairs = Vec::new();
        for [a, b] in &self.thetabar {
            pairs.push((
                to_zero_based(single(a, n)?, rank)?,
                to_zero_based(single(b, n)?, rank)?,
            ));
        }
        SatakeSpec::new(rs, &d0, &pairs)
    }

    pub fn build<T: Scalar>(&self, n: Option<usize>) -> Result<SymmetricPair<T>> {
        SymmetricPair::build(self.satake(n)?, self.instance_name(n))
    }
}

/// Looks for `<name>.toml` in each directory, in order.
pub fn find_in_dirs(name: &str, dirs: &[PathBuf]) -> Option<PathBuf> {
    dirs.iter()
        .map(|d| d.join(format!("{name}.toml")))
        .find(|p| p.is_file())
}
