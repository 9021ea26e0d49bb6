//! Built-in pairs, shipped as pair-spec files.

use crate::error::{Error, Result};
use crate::pairspec::PairFile;
use crate::scalar::Scalar;
use crate::sympair::SymmetricPair;

const FILES: &[(&str, &str)] = &[
    ("AI-1", include_str!("../catalog/AI-1.toml")),
    ("A1xA1", include_str!("../catalog/A1xA1.toml")),
    ("AII3", include_str!("../catalog/AII3.toml")),
    ("BII", include_str!("../catalog/BII.toml")),
    ("DII", include_str!("../catalog/DII.toml")),
    ("AIV", include_str!("../catalog/AIV.toml")),
    ("CII", include_str!("../catalog/CII.toml")),
    ("FII", include_str!("../catalog/FII.toml")),
    ("conics", include_str!("../catalog/conics.toml")),
    ("split-A", include_str!("../catalog/split-A.toml")),
    ("CnH4", include_str!("../catalog/CnH4.toml")),
    ("P2", include_str!("../catalog/P2.toml")),
];

/// The rank-one entries, in table order.
pub const RANK_ONE: &[&str] = &["AI-1", "A1xA1", "AII3", "BII", "DII", "AIV", "CII", "FII"];

/// All built-in names.
pub fn names() -> Vec<&'static str> {
    FILES.iter().map(|(n, _)| *n).collect()
}

/// The parsed pair-spec file of a built-in.
pub fn file(name: &str) -> Result<PairFile> {
    let (_, text) = FILES
        .iter()
        .find(|(n, _)| *n == name)
        .ok_or_else(|| Error::UnknownPair(name.to_string()))?;
    PairFile::parse(text)
}

/// Splits `"CnH4(5)"` into `("CnH4", Some(5))`.
pub fn split_name(s: &str) -> Result<(String, Option<usize>)> {
    let s = s.trim();
    match s.strip_suffix(')').and_then(|t| t.split_once('(')) {
        Some((base, arg)) => {
            let n = arg.trim().parse().map_err(|_| Error::InvalidParameter {
                name: base.to_string(),
                reason: format!("`{arg}` is not a nonnegative integer"),
            })?;
            Ok((base.to_string(), Some(n)))
        }
        None => Ok((s.to_string(), None)),
    }
}

/// Builds a built-in pair; templates need `n`.
pub fn catalog<T: Scalar>(name: &str, n: Option<usize>) -> Result<SymmetricPair<T>> {
    let (base, inline) = split_name(name)?;
    let f = file(&base)?;
    let n = inline.or(n);
    let n = if f.is_template() { n } else { None };
    f.build(n)
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_rational::Rational64 as Q;

    #[test]
    fn every_entry_builds() {
        for name in names() {
            let f = file(name).unwrap();
            let n = f.min_n.map(|m| m.max(4));
            let p: SymmetricPair<Q> = f.build(n).unwrap();
            assert!(p.rank_restricted() >= 1, "{name}");
        }
        let p: SymmetricPair<Q> = catalog("CnH4(4)", None).unwrap();
        assert_eq!(p.name(), "CnH4(4)");
        assert!(catalog::<Q>("nope", None).is_err());
        assert!(catalog::<Q>("CnH4", Some(3)).is_err());
    }
}
