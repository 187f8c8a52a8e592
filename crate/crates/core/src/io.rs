//! File formats.
//!
//! Graph: `{"n": int, "edges": [[u,v], ...], "weights": [w, ...]}` with an
//! optional `"meta"` object for provenance. A weight is a non-negative
//! number or the string `"inf"`; the loader additionally accepts exact
//! `"p/q"` strings, which the writer emits for weights with no finite
//! decimal form. Emission is canonical: loading a canonically written file
//! and re-emitting it reproduces the bytes.
//!
//! Design: `{"m": int, "interventions": [[v, ...], ...]}`.
//! Coloring: `{"m": int, "colors": ["0101", ...]}` where character `i` is
//! membership in intervention `i+1`.

use std::fmt::Write as _;

use num_rational::BigRational;
use serde::{Deserialize, Serialize, Serializer};
use thiserror::Error;

use crate::graph::WeightedGraph;
use crate::separating::{ColorVector, Coloring, InterventionDesign, MAX_DESIGN_SIZE};
use crate::weight::{rational_to_decimal, Weight};

#[derive(Debug, Error)]
pub enum LoadError {
    #[error("io: {0}")]
    Io(#[from] std::io::Error),
    #[error("json: {0}")]
    Json(#[from] serde_json::Error),
    #[error("{0}")]
    Invalid(String),
}

fn invalid(msg: impl Into<String>) -> LoadError {
    LoadError::Invalid(msg.into())
}

/// Parses the graph JSON format, reporting the offending field on error.
/// Returns the graph and the `meta` object when present.
pub fn load_graph(text: &str) -> Result<(WeightedGraph, Option<serde_json::Value>), LoadError> {
    let value: serde_json::Value = serde_json::from_str(text)?;
    let obj = value.as_object().ok_or_else(|| invalid("top level: expected an object"))?;
    for key in obj.keys() {
        if !matches!(key.as_str(), "n" | "edges" | "weights" | "meta") {
            return Err(invalid(format!("unknown field \"{key}\"")));
        }
    }
    let n = obj
        .get("n")
        .and_then(|v| v.as_u64())
        .ok_or_else(|| invalid("n: expected a non-negative integer"))? as usize;
    let edges_val = obj
        .get("edges")
        .and_then(|v| v.as_array())
        .ok_or_else(|| invalid("edges: expected an array"))?;
    let mut edges = Vec::with_capacity(edges_val.len());
    let mut seen = std::collections::HashSet::new();
    for (i, e) in edges_val.iter().enumerate() {
        let pair = e
            .as_array()
            .filter(|p| p.len() == 2)
            .ok_or_else(|| invalid(format!("edges[{i}]: expected a pair [u, v]")))?;
        let u = pair[0]
            .as_u64()
            .ok_or_else(|| invalid(format!("edges[{i}][0]: expected a vertex id")))? as usize;
        let v = pair[1]
            .as_u64()
            .ok_or_else(|| invalid(format!("edges[{i}][1]: expected a vertex id")))? as usize;
        if u >= n || v >= n {
            return Err(invalid(format!("edges[{i}]: vertex id out of range (n = {n})")));
        }
        if u == v {
            return Err(invalid(format!("edges[{i}]: self-loop at vertex {u}")));
        }
        if !seen.insert((u.min(v), u.max(v))) {
            return Err(invalid(format!("edges[{i}]: duplicate edge {u}-{v}")));
        }
        edges.push((u, v));
    }
    let weights_val = obj
        .get("weights")
        .and_then(|v| v.as_array())
        .ok_or_else(|| invalid("weights: expected an array"))?;
    if weights_val.len() != n {
        return Err(invalid(format!(
            "weights: expected {n} entries, got {}",
            weights_val.len()
        )));
    }
    let mut weights = Vec::with_capacity(n);
    for (i, w) in weights_val.iter().enumerate() {
        let parsed = match w {
            serde_json::Value::Number(num) => Weight::parse(&num.to_string()),
            serde_json::Value::String(s) => parse_weight_string(s),
            _ => None,
        };
        weights.push(parsed.ok_or_else(|| {
            invalid(format!(
                "weights[{i}]: expected a non-negative number, \"p/q\", or \"inf\""
            ))
        })?);
    }
    let graph = WeightedGraph::new(n, &edges, weights).map_err(|e| invalid(e.to_string()))?;
    Ok((graph, obj.get("meta").cloned()))
}

fn parse_weight_string(s: &str) -> Option<Weight> {
    if let Some(w) = Weight::parse(s) {
        return Some(w);
    }
    let (num, den) = s.split_once('/')?;
    let num: num_bigint::BigInt = num.parse().ok()?;
    let den: num_bigint::BigInt = den.parse().ok()?;
    if den == num_bigint::BigInt::from(0) {
        return None;
    }
    let r = BigRational::new(num, den);
    (r >= BigRational::from_integer(0.into())).then_some(Weight::Finite(r))
}

/// Canonical graph emission; see the module docs for the stability
/// guarantee the writer provides.
pub fn write_graph(g: &WeightedGraph, meta: Option<&serde_json::Value>) -> String {
    let mut out = String::new();
    out.push_str("{\n");
    let _ = writeln!(out, "  \"n\": {},", g.n());
    out.push_str("  \"edges\": [");
    for (i, (u, v)) in g.edges().into_iter().enumerate() {
        if i > 0 {
            out.push_str(", ");
        }
        let _ = write!(out, "[{u}, {v}]");
    }
    out.push_str("],\n");
    out.push_str("  \"weights\": [");
    for (i, w) in g.weights().iter().enumerate() {
        if i > 0 {
            out.push_str(", ");
        }
        out.push_str(&weight_to_json(w));
    }
    out.push(']');
    if let Some(meta) = meta {
        out.push_str(",\n  \"meta\": ");
        out.push_str(&serde_json::to_string(meta).expect("meta serializes"));
    }
    out.push_str("\n}\n");
    out
}

fn weight_to_json(w: &Weight) -> String {
    match w {
        Weight::Infinite => "\"inf\"".to_string(),
        Weight::Finite(r) => match rational_to_decimal(r) {
            Some(d) => d,
            None => format!("\"{}/{}\"", r.numer(), r.denom()),
        },
    }
}

#[derive(Debug, Serialize, Deserialize)]
struct DesignFile {
    m: usize,
    interventions: Vec<Vec<usize>>,
}

pub fn write_design(d: &InterventionDesign) -> String {
    let file = DesignFile {
        m: d.size(),
        interventions: d.interventions().to_vec(),
    };
    let mut s = serde_json::to_string_pretty(&file).expect("design serializes");
    s.push('\n');
    s
}

pub fn load_design(text: &str) -> Result<InterventionDesign, LoadError> {
    let file: DesignFile = serde_json::from_str(text)?;
    if file.m != file.interventions.len() {
        return Err(invalid(format!(
            "m = {} but {} interventions listed",
            file.m,
            file.interventions.len()
        )));
    }
    if file.m > MAX_DESIGN_SIZE as usize {
        return Err(invalid(format!("m = {} exceeds the maximum {MAX_DESIGN_SIZE}", file.m)));
    }
    Ok(InterventionDesign::new(file.interventions))
}

#[derive(Debug, Serialize, Deserialize)]
struct ColoringFile {
    m: u32,
    colors: Vec<String>,
}

pub fn write_coloring(c: &Coloring) -> String {
    let file = ColoringFile {
        m: c.m(),
        colors: c.assignment().iter().map(ColorVector::to_bit_string).collect(),
    };
    let mut s = serde_json::to_string_pretty(&file).expect("coloring serializes");
    s.push('\n');
    s
}

pub fn load_coloring(text: &str) -> Result<Coloring, LoadError> {
    let file: ColoringFile = serde_json::from_str(text)?;
    if file.m > MAX_DESIGN_SIZE {
        return Err(invalid(format!("m = {} exceeds the maximum {MAX_DESIGN_SIZE}", file.m)));
    }
    let mut assignment = Vec::with_capacity(file.colors.len());
    for (i, s) in file.colors.iter().enumerate() {
        if s.len() != file.m as usize {
            return Err(invalid(format!("colors[{i}]: expected {} bits", file.m)));
        }
        let cv = ColorVector::from_bit_string(s)
            .ok_or_else(|| invalid(format!("colors[{i}]: expected a 0/1 string")))?;
        assignment.push(cv);
    }
    Ok(Coloring::new(file.m, assignment))
}

pub fn serialize_color<S: Serializer>(c: &ColorVector, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_str(&c.to_bit_string())
}

pub fn serialize_weight<S: Serializer>(w: &Weight, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_str(&w.to_string())
}

pub fn serialize_opt_rational<S: Serializer>(
    r: &Option<BigRational>,
    s: S,
) -> Result<S::Ok, S::Error> {
    match r {
        Some(r) => s.serialize_str(&format!("{}/{}", r.numer(), r.denom())),
        None => s.serialize_none(),
    }
}
