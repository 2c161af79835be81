//! JSON and text renderings of lab results.
//!
//! JSON objects are built as `serde_json::Value`, whose maps keep keys
//! sorted, so output is byte-stable for identical inputs.

use std::fmt::Write as _;

use serde_json::{json, Value};

use crate::algebra::{Degree, GradedAlgebra, ValidationReport};
use crate::derivation::{ComparisonReport, HomogeneousMap, NderSolution, UnknownIndex};
use crate::linalg::SparseVector;
use crate::property_p::{PKind, PWitness};

pub fn to_bytes(value: &Value) -> Vec<u8> {
    let mut out = serde_json::to_vec_pretty(value).expect("report serializes");
    out.push(b'\n');
    out
}

fn degree(d: &Degree) -> Value {
    json!(d.components())
}

fn unknown_key(alg: &GradedAlgebra, index: &UnknownIndex, col: usize) -> String {
    let (b, t) = index.pair(col);
    format!("{},{}", alg.label(b), alg.label(t))
}

fn coordinates(alg: &GradedAlgebra, index: &UnknownIndex, v: &SparseVector) -> Value {
    Value::Array(
        v.iter()
            .map(|(col, c)| json!([unknown_key(alg, index, col), c.to_string()]))
            .collect(),
    )
}

fn coordinates_text(alg: &GradedAlgebra, index: &UnknownIndex, v: &SparseVector) -> String {
    let parts: Vec<String> = v
        .iter()
        .map(|(col, c)| {
            let (b, t) = index.pair(col);
            format!("{}->{}: {c}", alg.label(b), alg.label(t))
        })
        .collect();
    parts.join(", ")
}

pub fn solution_json(alg: &GradedAlgebra, sol: &NderSolution) -> Value {
    json!({
        "algebra": alg.name(),
        "N": sol.order,
        "gamma": degree(sol.index.gamma()),
        "unknowns": sol.index.len(),
        "constraints": sol.constraints,
        "nullity": sol.nullity(),
        "basis": sol.basis.vectors().iter().map(|v| coordinates(alg, &sol.index, v)).collect::<Vec<_>>(),
    })
}

pub fn solution_text(alg: &GradedAlgebra, sol: &NderSolution) -> String {
    let mut s = String::new();
    let _ = writeln!(s, "algebra      {}", alg.name());
    let _ = writeln!(s, "N            {}", sol.order);
    let _ = writeln!(s, "gamma        {}", sol.index.gamma());
    let _ = writeln!(s, "unknowns     {}", sol.index.len());
    let _ = writeln!(s, "constraints  {}", sol.constraints);
    let _ = writeln!(s, "nullity      {}", sol.nullity());
    for (i, v) in sol.basis.vectors().iter().enumerate() {
        let _ = writeln!(s, "  [{}] {}", i + 1, coordinates_text(alg, &sol.index, v));
    }
    s
}

pub fn comparison_json(alg: &GradedAlgebra, r: &ComparisonReport, index: &UnknownIndex) -> Value {
    let witness = match &r.witness {
        None => Value::Null,
        Some(w) => json!({ "order": w.order, "vector": coordinates(alg, index, &w.vector) }),
    };
    json!({
        "algebra": r.algebra,
        "orders": [r.orders.0, r.orders.1],
        "gamma": degree(&r.gamma),
        "inner_radius": r.inner_radius,
        "unknowns": r.unknowns,
        "projected_unknowns": r.projected_unknowns,
        "nullities": [r.nullities.0, r.nullities.1],
        "dims": [r.dims.0, r.dims.1, r.dims.2],
        "equal": r.equal,
        "witness": witness,
    })
}

pub fn comparison_text(alg: &GradedAlgebra, r: &ComparisonReport, index: &UnknownIndex) -> String {
    let mut s = format!(
        "N=({},{})  gamma {:<8} inner {:<3} nullities ({},{})  dims ({},{},{})  {}\n",
        r.orders.0,
        r.orders.1,
        r.gamma.to_string(),
        r.inner_radius,
        r.nullities.0,
        r.nullities.1,
        r.dims.0,
        r.dims.1,
        r.dims.2,
        if r.equal { "equal" } else { "NOT equal" }
    );
    if let Some(w) = &r.witness {
        let _ = writeln!(
            s,
            "  witness (N={}): {}",
            w.order,
            coordinates_text(alg, index, &w.vector)
        );
    }
    s
}

pub fn witness_json(alg: &GradedAlgebra, w: &PWitness) -> Value {
    let mut v = json!({
        "element": alg.format_element(&w.element),
        "degree": degree(&w.degree),
        "verified": w.verify(alg),
    });
    let obj = v.as_object_mut().expect("object");
    match &w.kind {
        PKind::P1 { beta, left, right } => {
            obj.insert("kind".into(), json!("P1"));
            obj.insert("beta".into(), degree(beta));
            obj.insert("left".into(), json!(alg.format_element(left)));
            obj.insert("right".into(), json!(alg.format_element(right)));
        }
        PKind::P2 { partner } => {
            obj.insert("kind".into(), json!("P2"));
            obj.insert("partner".into(), json!(alg.format_element(partner)));
        }
        PKind::NoneFound => {
            obj.insert("kind".into(), json!("none-found"));
        }
    }
    v
}

pub fn witness_text(alg: &GradedAlgebra, w: &PWitness) -> String {
    let x = alg.format_element(&w.element);
    let body = match &w.kind {
        PKind::P1 { beta, left, right } => format!(
            "P1  beta {beta}: [{}, {}]",
            alg.format_element(left),
            alg.format_element(right)
        ),
        PKind::P2 { partner } => format!("P2  partner {}", alg.format_element(partner)),
        PKind::NoneFound => "none-found (inconclusive)".to_string(),
    };
    format!("{x:<12} {:<8} {body}\n", w.degree.to_string())
}

pub fn validation_json(alg: &GradedAlgebra, r: &ValidationReport) -> Value {
    json!({
        "algebra": alg.name(),
        "dim": alg.dim(),
        "valid": r.is_valid(),
        "violations": r.violations.iter().map(|v| v.to_string()).collect::<Vec<_>>(),
        "warnings": r.warnings.iter().map(|w| w.to_string()).collect::<Vec<_>>(),
    })
}

pub fn validation_text(alg: &GradedAlgebra, r: &ValidationReport) -> String {
    let mut s = format!(
        "{}: dim {}, {}\n",
        alg.name(),
        alg.dim(),
        if r.is_valid() { "valid" } else { "INVALID" }
    );
    for (i, v) in r.violations.iter().enumerate() {
        let _ = writeln!(s, "  violation {}: {v}", i + 1);
    }
    for (i, w) in r.warnings.iter().enumerate() {
        let _ = writeln!(s, "  warning {}: {w}", i + 1);
    }
    s
}

fn images_json(alg: &GradedAlgebra, phi: &HomogeneousMap) -> Value {
    Value::Array(
        phi.images()
            .iter()
            .map(|(&b, img)| {
                json!({
                    "source": alg.label(b),
                    "value": img.terms().map(|(k, c)| json!({"label": alg.label(k), "c": c.to_string()})).collect::<Vec<_>>(),
                })
            })
            .collect(),
    )
}

pub fn decomposition_json(alg: &GradedAlgebra, parts: &[(Degree, HomogeneousMap)]) -> Value {
    json!({
        "algebra": alg.name(),
        "components": parts
            .iter()
            .map(|(g, phi)| json!({"gamma": degree(g), "images": images_json(alg, phi)}))
            .collect::<Vec<_>>(),
    })
}

pub fn decomposition_text(alg: &GradedAlgebra, parts: &[(Degree, HomogeneousMap)]) -> String {
    let mut s = String::new();
    for (g, phi) in parts {
        let _ = writeln!(s, "gamma {g}");
        for (&b, img) in phi.images() {
            let _ = writeln!(s, "  {:<12} -> {}", alg.label(b), alg.format_element(img));
        }
    }
    s
}
