use serde::de::DeserializeOwned;
use serde::{Deserialize, Serialize};

use super::model::{ClassTuple, SncComplex};
use crate::error::ParseError;
use crate::json_int::BAD_LITERAL;
use crate::lattice::IntegerMatrix;

/// Matrices supplied directly, bypassing geometric assembly.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RawDiagram {
    pub delta: IntegerMatrix,
    pub rho: IntegerMatrix,
    pub delta_prime: IntegerMatrix,
    pub rho_prime: IntegerMatrix,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub working_grade: Option<u32>,
}

/// Either input document kind.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Document {
    Complex(SncComplex),
    Raw(RawDiagram),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct LabeledCycle {
    pub label: String,
    pub vector: ClassTuple,
}

/// Labeled class tuples in component-block coordinates.
#[derive(Debug, Clone, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CycleDocument {
    pub cycles: Vec<LabeledCycle>,
}

pub(crate) fn decode<T: DeserializeOwned>(text: &str) -> Result<T, ParseError> {
    let mut de = serde_json::Deserializer::from_str(text);
    let value = serde_path_to_error::deserialize(&mut de).map_err(|e| {
        let path = e.path().to_string();
        classify(e.into_inner(), Some(path))
    })?;
    de.end().map_err(|e| classify(e, None))?;
    Ok(value)
}

fn classify(e: serde_json::Error, path: Option<String>) -> ParseError {
    use serde_json::error::Category;
    let message = e.to_string();
    let syntax =
        matches!(e.classify(), Category::Syntax | Category::Eof) || message.contains(BAD_LITERAL);
    match path {
        Some(path) if !syntax => ParseError::Schema { path, message },
        _ => ParseError::Syntax {
            line: e.line(),
            column: e.column(),
            message,
        },
    }
}

pub(crate) fn canonical_text<T: Serialize>(value: &T) -> String {
    // serde_json::Value objects are key-sorted maps
    let v = serde_json::to_value(value).expect("documents serialize infallibly");
    let mut s = serde_json::to_string_pretty(&v).expect("values serialize infallibly");
    s.push('\n');
    s
}

/// Parses a complex and normalizes pair/triple ordering.
pub fn parse(text: &str) -> Result<SncComplex, ParseError> {
    let mut c: SncComplex = decode(text)?;
    c.canonicalize();
    Ok(c)
}

/// Canonical text: sorted keys, pairs sorted by `(i, j)`, triples by
/// `(a, b, c)`.
pub fn serialize(complex: &SncComplex) -> String {
    canonical_text(&complex.canonical())
}

pub fn parse_raw(text: &str) -> Result<RawDiagram, ParseError> {
    decode(text)
}

pub fn serialize_raw(raw: &RawDiagram) -> String {
    canonical_text(raw)
}

/// Parses either a complex or a raw-matrix document, told apart by the
/// presence of a top-level `delta` key.
pub fn parse_document(text: &str) -> Result<Document, ParseError> {
    let probe: serde_json::Value = decode(text)?;
    if probe.get("delta").is_some() {
        parse_raw(text).map(Document::Raw)
    } else {
        parse(text).map(Document::Complex)
    }
}

pub fn parse_cycles(text: &str) -> Result<CycleDocument, ParseError> {
    decode(text)
}

pub fn serialize_cycles(doc: &CycleDocument) -> String {
    canonical_text(doc)
}
