//! Canonical JSON form of a [`GradedAlgebra`].
//!
//! ```json
//! { "name": "K", "grading_dim": 1, "truncated": false,
//!   "basis": [{"label": "L_0", "degree": [0]}, ...],
//!   "cartan": [0],
//!   "brackets": [{"i": 0, "j": 1, "terms": [{"k": 1, "c": "1"}]}, ...] }
//! ```
//!
//! `truncated` marks a finite window of an infinite-dimensional algebra and
//! defaults to `false` when absent. Bracket keys need `i < j`, brackets are
//! sorted by `(i, j)`, terms by `k`, and no zero term or empty bracket is
//! allowed, so `save` output is the unique encoding of an algebra.

use std::collections::{BTreeMap, BTreeSet};

use serde::{Deserialize, Serialize};

use crate::algebra::{BasisElement, Degree, GradedAlgebra};
use crate::error::{Error, Result};
use crate::linalg::SparseVector;
use crate::rational::Rational;

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct AlgebraFile {
    name: String,
    grading_dim: usize,
    #[serde(default)]
    truncated: bool,
    basis: Vec<BasisEntry>,
    cartan: Vec<usize>,
    brackets: Vec<BracketEntry>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct BasisEntry {
    label: String,
    degree: Vec<i64>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct BracketEntry {
    i: usize,
    j: usize,
    terms: Vec<TermEntry>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct TermEntry {
    k: usize,
    c: Rational,
}

pub fn save(alg: &GradedAlgebra) -> Vec<u8> {
    let file = AlgebraFile {
        name: alg.name().to_string(),
        grading_dim: alg.grading_dim(),
        truncated: alg.is_truncated(),
        basis: alg
            .basis()
            .iter()
            .map(|b| BasisEntry {
                label: b.label.clone(),
                degree: b.degree.components().to_vec(),
            })
            .collect(),
        cartan: alg.cartan().iter().copied().collect(),
        brackets: alg
            .structure_constants()
            .iter()
            .map(|(&(i, j), v)| BracketEntry {
                i,
                j,
                terms: v
                    .iter()
                    .map(|(k, c)| TermEntry { k, c: c.clone() })
                    .collect(),
            })
            .collect(),
    };
    let mut out = serde_json::to_vec_pretty(&file).expect("algebra serializes");
    out.push(b'\n');
    out
}

/// Parses and structurally checks an algebra file without running
/// [`GradedAlgebra::validate`].
pub fn load_unchecked(bytes: &[u8]) -> Result<GradedAlgebra> {
    let file: AlgebraFile =
        serde_json::from_slice(bytes).map_err(|e| Error::Parse(e.to_string()))?;
    let n = file.basis.len();
    if !file.cartan.windows(2).all(|w| w[0] < w[1]) {
        return Err(Error::Parse(
            "cartan indices must be strictly increasing".into(),
        ));
    }
    let mut brackets = BTreeMap::new();
    let mut last: Option<(usize, usize)> = None;
    for b in &file.brackets {
        if b.i >= b.j {
            return Err(Error::Parse(format!(
                "bracket key ({}, {}) needs i < j",
                b.i, b.j
            )));
        }
        if b.j >= n {
            return Err(Error::Parse(format!(
                "bracket key ({}, {}) out of range",
                b.i, b.j
            )));
        }
        if last.is_some_and(|l| l >= (b.i, b.j)) {
            return Err(Error::Parse(format!(
                "bracket ({}, {}) is out of order or repeated",
                b.i, b.j
            )));
        }
        last = Some((b.i, b.j));
        if b.terms.is_empty() {
            return Err(Error::Parse(format!(
                "bracket ({}, {}) has no terms",
                b.i, b.j
            )));
        }
        if !b.terms.windows(2).all(|w| w[0].k < w[1].k) {
            return Err(Error::Parse(format!(
                "terms of bracket ({}, {}) must be sorted by k",
                b.i, b.j
            )));
        }
        if let Some(t) = b.terms.iter().find(|t| t.k >= n || t.c.is_zero()) {
            return Err(Error::Parse(format!(
                "bracket ({}, {}) has an invalid term on {}",
                b.i, b.j, t.k
            )));
        }
        let v = SparseVector::from_entries(b.terms.iter().map(|t| (t.k, t.c.clone())).collect());
        brackets.insert((b.i, b.j), v);
    }
    let basis = file
        .basis
        .into_iter()
        .map(|b| BasisElement {
            label: b.label,
            degree: Degree::new(b.degree),
        })
        .collect();
    let cartan: BTreeSet<usize> = file.cartan.into_iter().collect();
    GradedAlgebra::from_parts(
        file.name,
        file.grading_dim,
        file.truncated,
        basis,
        cartan,
        brackets,
    )
    .map_err(|e| Error::Parse(e.to_string()))
}

/// Parses an algebra file and rejects it unless it validates.
pub fn load(bytes: &[u8]) -> Result<GradedAlgebra> {
    let alg = load_unchecked(bytes)?;
    let report = alg.validate();
    if report.is_valid() {
        Ok(alg)
    } else {
        Err(Error::Validation(report))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::builders::{build_counterexample_k, build_sv, WindowSpec};

    #[test]
    fn round_trip_is_bit_exact() {
        let sv = build_sv(WindowSpec::new(1).unwrap());
        let bytes = save(&sv);
        let back = load(&bytes).unwrap();
        assert_eq!(back, sv);
        assert_eq!(save(&back), bytes);
    }

    #[test]
    fn rejects_reversed_key() {
        let text = r#"{"name":"x","grading_dim":1,"basis":[{"label":"a","degree":[0]},{"label":"b","degree":[0]}],
            "cartan":[],"brackets":[{"i":1,"j":0,"terms":[{"k":0,"c":"1"}]}]}"#;
        assert!(matches!(load(text.as_bytes()), Err(Error::Parse(_))));
    }

    #[test]
    fn rejects_unknown_fields_and_bad_rationals() {
        let k = String::from_utf8(save(&build_counterexample_k())).unwrap();
        let extra = k.replacen("\"name\"", "\"colour\": 1, \"name\"", 1);
        assert!(matches!(load(extra.as_bytes()), Err(Error::Parse(_))));
        let bad = k.replacen("\"c\": \"1\"", "\"c\": \"2/2\"", 1);
        assert!(matches!(load(bad.as_bytes()), Err(Error::Parse(_))));
    }

    #[test]
    fn tampered_sv_fails_validation() {
        let sv = build_sv(WindowSpec::new(2).unwrap());
        let (l1, lm1, l0) = (
            sv.index_of("L_1").unwrap(),
            sv.index_of("L_-1").unwrap(),
            sv.index_of("L_0").unwrap(),
        );
        let file: serde_json::Value = serde_json::from_slice(&save(&sv)).unwrap();
        let mut file = file;
        let (i, j, c) = if lm1 < l1 {
            (lm1, l1, "3")
        } else {
            (l1, lm1, "-3")
        };
        for b in file["brackets"].as_array_mut().unwrap() {
            if b["i"] == i && b["j"] == j {
                b["terms"] = serde_json::json!([{"k": l0, "c": c}]);
            }
        }
        let bytes = serde_json::to_vec(&file).unwrap();
        match load(&bytes) {
            Err(Error::Validation(r)) => assert!(r
                .violations
                .iter()
                .any(|v| matches!(v, crate::algebra::Violation::Jacobi { .. }))),
            other => panic!("expected validation error, got {other:?}"),
        }
    }
}
