//! Combinatorial model of a simple normal crossing variety with at worst
//! triple intersections, plus its JSON form.

pub(crate) mod io;
mod model;
mod validate;

pub use io::{
    parse, parse_cycles, parse_document, parse_raw, serialize, serialize_cycles, serialize_raw,
    CycleDocument, Document, LabeledCycle, RawDiagram,
};
pub use model::{ChowLattice, ClassTuple, Component, PairStratum, SncComplex, TripleStratum};
pub use validate::{has_errors, validate, Diagnostic, DiagnosticKind, Severity};
