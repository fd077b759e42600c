//! JSON file format.
//!
//! ```json
//! {"name": "ex44", "p": 2, "dim": 2, "basis": ["x", "t"],
//!  "brackets": [[0, 1, 0, 1]], "pmap": {"t": [[1, 1]]}}
//! ```
//!
//! `[i, j, k, c]` with `i < j` means `[b_i, b_j]` has coefficient `c` on
//! `b_k`; omitted pairs bracket to zero and omitted p-map entries are zero.
//! Indices are 0-based and coefficients are residues in `[0, p)`.

use std::collections::BTreeMap;
use std::fs;
use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::algebra::{AlgebraError, BracketEntry, RestrictedLieAlgebra, ValidationReport};
use crate::dispatch::AnyAlgebra;
use crate::field::{is_prime, is_supported_prime, PrimeField};
use crate::linalg::vector;
use crate::{F2, F3, F5, F7};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AlgebraFile {
    pub name: String,
    pub p: u64,
    pub dim: usize,
    pub basis: Vec<String>,
    #[serde(default)]
    pub brackets: Vec<[i64; 4]>,
    #[serde(default)]
    pub pmap: BTreeMap<String, Vec<[i64; 2]>>,
}

#[derive(Debug, Error)]
pub enum IoError {
    #[error("{path}: {source}")]
    Io { path: PathBuf, source: std::io::Error },
    #[error("line {line}, column {column}: {message}")]
    Syntax { line: usize, column: usize, message: String },
    #[error("field `{field}`: {message}")]
    Schema { field: String, message: String },
    #[error("algebra fails validation: {0}")]
    Invalid(ValidationReport),
}

fn schema(field: impl Into<String>, message: impl Into<String>) -> IoError {
    IoError::Schema { field: field.into(), message: message.into() }
}

impl AlgebraFile {
    pub fn from_algebra<F: PrimeField>(g: &RestrictedLieAlgebra<F>) -> Self {
        let brackets = g
            .bracket_entries()
            .into_iter()
            .map(|e| [e.i as i64, e.j as i64, e.k as i64, e.c.residue() as i64])
            .collect();
        let mut pmap = BTreeMap::new();
        for (i, label) in g.labels().iter().enumerate() {
            let terms: Vec<[i64; 2]> = g
                .basis_p_image(i)
                .iter()
                .enumerate()
                .filter(|(_, c)| !c.is_zero())
                .map(|(k, c)| [k as i64, c.residue() as i64])
                .collect();
            if !terms.is_empty() {
                pmap.insert(label.clone(), terms);
            }
        }
        AlgebraFile { name: g.name().to_string(), p: F::P as u64, dim: g.dim(), basis: g.labels().to_vec(), brackets, pmap }
    }

    /// Checks the schema, builds the algebra over the declared field, and
    /// validates it.
    pub fn to_algebra(&self) -> Result<AnyAlgebra, IoError> {
        if !is_prime(self.p) {
            return Err(schema("p", format!("{} is not prime", self.p)));
        }
        if !is_supported_prime(self.p as u32) {
            return Err(schema("p", format!("p = {} is not one of 2, 3, 5, 7", self.p)));
        }
        Ok(match self.p {
            2 => AnyAlgebra::F2(self.build::<F2>()?),
            3 => AnyAlgebra::F3(self.build::<F3>()?),
            5 => AnyAlgebra::F5(self.build::<F5>()?),
            _ => AnyAlgebra::F7(self.build::<F7>()?),
        })
    }

    fn build<F: PrimeField>(&self) -> Result<RestrictedLieAlgebra<F>, IoError> {
        let n = self.dim;
        if self.basis.len() != n {
            return Err(schema("basis", format!("{} labels for dim {n}", self.basis.len())));
        }
        let index = |v: i64, field: String| -> Result<usize, IoError> {
            usize::try_from(v)
                .ok()
                .filter(|&i| i < n)
                .ok_or_else(|| schema(field, format!("index {v} out of range for dim {n}")))
        };
        let coefficient = |v: i64, field: String| -> Result<F, IoError> {
            if (0..F::P as i64).contains(&v) {
                Ok(F::from_i64(v))
            } else {
                Err(schema(field, format!("coefficient {v} is not a residue in [0, {})", F::P)))
            }
        };
        let mut brackets = Vec::with_capacity(self.brackets.len());
        for (pos, &[i, j, k, c]) in self.brackets.iter().enumerate() {
            let field = format!("brackets[{pos}]");
            let (i, j, k) = (index(i, field.clone())?, index(j, field.clone())?, index(k, field.clone())?);
            if i >= j {
                return Err(schema(field, format!("needs i < j, got i = {i}, j = {j}")));
            }
            brackets.push(BracketEntry { i, j, k, c: coefficient(c, field)? });
        }
        let mut pmap = vec![vector::zeros::<F>(n); n];
        for (label, terms) in &self.pmap {
            let field = format!("pmap.{label}");
            let i = self
                .basis
                .iter()
                .position(|l| l == label)
                .ok_or_else(|| schema(field.clone(), "not a basis label"))?;
            for (pos, &[k, c]) in terms.iter().enumerate() {
                let field = format!("{field}[{pos}]");
                let k = index(k, field.clone())?;
                pmap[i][k] += coefficient(c, field)?;
            }
        }
        let g = RestrictedLieAlgebra::new_unchecked(self.name.clone(), self.basis.clone(), &brackets, pmap)
            .map_err(|e| match e {
                AlgebraError::DuplicateLabel(l) => schema("basis", format!("duplicate label `{l}`")),
                AlgebraError::DuplicateBracket { i, j, k } => {
                    schema("brackets", format!("entry ({i}, {j}, {k}) listed twice"))
                }
                other => schema("", other.to_string()),
            })?;
        let report = g.validate();
        if !report.is_valid() {
            return Err(IoError::Invalid(report));
        }
        Ok(g)
    }
}

pub fn from_json_str(text: &str) -> Result<AnyAlgebra, IoError> {
    let file: AlgebraFile = serde_json::from_str(text)
        .map_err(|e| IoError::Syntax { line: e.line(), column: e.column(), message: e.to_string() })?;
    file.to_algebra()
}

pub fn to_json_string(g: &AnyAlgebra) -> String {
    let file = crate::with_algebra!(g, g => AlgebraFile::from_algebra(g));
    serde_json::to_string_pretty(&file).expect("serializable")
}

pub fn load(path: impl AsRef<Path>) -> Result<AnyAlgebra, IoError> {
    let path = path.as_ref();
    let text = fs::read_to_string(path).map_err(|source| IoError::Io { path: path.to_path_buf(), source })?;
    from_json_str(&text)
}

pub fn save(g: &AnyAlgebra, path: impl AsRef<Path>) -> Result<(), IoError> {
    let path = path.as_ref();
    fs::write(path, to_json_string(g) + "\n").map_err(|source| IoError::Io { path: path.to_path_buf(), source })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus::{ex44, make_named};

    #[test]
    fn round_trip_sl2() {
        let g = make_named("sl2", Some(5)).unwrap();
        let back = from_json_str(&to_json_string(&g)).unwrap();
        match (g, back) {
            (AnyAlgebra::F5(a), AnyAlgebra::F5(b)) => assert_eq!(a, b),
            _ => panic!("field changed"),
        }
    }

    #[test]
    fn non_prime_p_is_a_schema_error() {
        let text = r#"{"name": "bad", "p": 4, "dim": 1, "basis": ["a"], "brackets": [], "pmap": {}}"#;
        assert!(matches!(from_json_str(text), Err(IoError::Schema { field, .. }) if field == "p"));
    }

    #[test]
    fn ex44_over_f3_from_text() {
        let text = r#"{"name": "ex44", "p": 3, "dim": 2, "basis": ["x", "t"],
                       "brackets": [[0, 1, 0, 2]], "pmap": {"t": [[1, 1]]}}"#;
        match from_json_str(text).unwrap() {
            AnyAlgebra::F3(g) => assert_eq!(g.with_name("ex44"), ex44::<F3>()),
            _ => panic!("wrong field"),
        }
    }

    #[test]
    fn diagnostics() {
        let err = from_json_str("{\n  \"name\": 1\n}").unwrap_err();
        assert!(matches!(err, IoError::Syntax { line: 2, .. }), "{err}");
        let text = r#"{"name": "a", "p": 3, "dim": 2, "basis": ["x", "y"], "brackets": [[1, 0, 0, 1]]}"#;
        assert!(matches!(from_json_str(text), Err(IoError::Schema { field, .. }) if field == "brackets[0]"));
        let text = r#"{"name": "a", "p": 3, "dim": 1, "basis": ["x"], "pmap": {"x": [[0, 3]]}}"#;
        assert!(matches!(from_json_str(text), Err(IoError::Schema { field, .. }) if field == "pmap.x[0]"));
        // [x, y] = x with x^[3] = x violates ad(x^[3]) = (ad x)^3.
        let text = r#"{"name": "a", "p": 3, "dim": 2, "basis": ["x", "y"], "brackets": [[0, 1, 0, 1]],
                       "pmap": {"x": [[0, 1]]}}"#;
        assert!(matches!(from_json_str(text), Err(IoError::Invalid(_))));
    }
}
