use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use super::model::SncComplex;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Severity {
    Error,
    Warning,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum DiagnosticKind {
    IndexOutOfRange,
    SelfIntersectionPair,
    UnorderedPair,
    DuplicatePair,
    UnorderedTriple,
    DuplicateTriple,
    MissingPairForTriple,
    TripleNotListed,
    ForeignTriple,
    GradeOutOfRange,
    MissingLattice,
    PairingShape,
    AsymmetricPairing,
    ClassLength,
    ZeroStratumRank,
    Disconnected,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Diagnostic {
    pub severity: Severity,
    pub kind: DiagnosticKind,
    pub location: String,
    pub message: String,
}

impl fmt::Display for Diagnostic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let sev = match self.severity {
            Severity::Error => "error",
            Severity::Warning => "warning",
        };
        write!(f, "{sev}: {}: {}", self.location, self.message)
    }
}

struct Collector(Vec<Diagnostic>);

impl Collector {
    fn error(&mut self, kind: DiagnosticKind, location: String, message: String) {
        self.0.push(Diagnostic {
            severity: Severity::Error,
            kind,
            location,
            message,
        });
    }
}

/// Checks every structural invariant of the complex. Disconnection of the
/// dual graph is reported as a warning; everything else is an error.
pub fn validate(complex: &SncComplex) -> Vec<Diagnostic> {
    let mut out = Collector(Vec::new());
    let n = complex.components.len();
    let grade = complex.working_grade;

    for (k, c) in complex.components.iter().enumerate() {
        let loc = format!("components[{k}]");
        for (&g, lat) in &c.lattices {
            if g > c.dimension {
                out.error(
                    DiagnosticKind::GradeOutOfRange,
                    format!("{loc}.lattices.{g}"),
                    format!("grade {g} exceeds dimension {}", c.dimension),
                );
            }
            if let Some(p) = &lat.pairing {
                if p.rows() != lat.rank() || p.cols() != lat.rank() {
                    out.error(
                        DiagnosticKind::PairingShape,
                        format!("{loc}.lattices.{g}.pairing"),
                        format!(
                            "pairing is {}x{} but the basis has {} elements",
                            p.rows(),
                            p.cols(),
                            lat.rank()
                        ),
                    );
                } else if !p.is_symmetric() {
                    out.error(
                        DiagnosticKind::AsymmetricPairing,
                        format!("{loc}.lattices.{g}.pairing"),
                        "pairing matrix is not symmetric".into(),
                    );
                }
            }
        }
        if c.lattice(grade).is_none() {
            out.error(
                DiagnosticKind::MissingLattice,
                format!("{loc}.lattices"),
                format!("no lattice at working grade {grade}"),
            );
        }
    }

    let sizes = complex.block_sizes();
    let mut seen_pairs = BTreeSet::new();
    for (k, p) in complex.pairs.iter().enumerate() {
        let loc = format!("pairs[{k}]");
        let mut in_range = true;
        for (field, idx) in [("i", p.i), ("j", p.j)] {
            if idx >= n {
                in_range = false;
                out.error(
                    DiagnosticKind::IndexOutOfRange,
                    format!("{loc}.{field}"),
                    format!("component index {idx} out of range (have {n})"),
                );
            }
        }
        if p.i == p.j {
            out.error(
                DiagnosticKind::SelfIntersectionPair,
                loc.clone(),
                format!("pair joins component {} with itself", p.i),
            );
        } else if p.i > p.j {
            out.error(
                DiagnosticKind::UnorderedPair,
                loc.clone(),
                format!("pair ({}, {}) is not ordered i < j", p.i, p.j),
            );
        }
        let key = (p.i.min(p.j), p.i.max(p.j));
        if !seen_pairs.insert(key) {
            out.error(
                DiagnosticKind::DuplicatePair,
                loc.clone(),
                format!("pair {key:?} appears more than once"),
            );
        }
        if p.stratum_rank == 0 {
            out.error(
                DiagnosticKind::ZeroStratumRank,
                format!("{loc}.stratum_rank"),
                "stratum rank must be positive".into(),
            );
        }
        if in_range {
            for (field, comp, class) in [
                ("class_in_i", p.i, &p.class_in_i),
                ("class_in_j", p.j, &p.class_in_j),
            ] {
                if class.len() != sizes[comp] {
                    out.error(
                        DiagnosticKind::ClassLength,
                        format!("{loc}.{field}"),
                        format!(
                            "class has {} coordinates, component {comp} has basis size {}",
                            class.len(),
                            sizes[comp]
                        ),
                    );
                }
            }
        }
        for (q, &t) in p.triples_on.iter().enumerate() {
            match complex.triples.get(t) {
                None => out.error(
                    DiagnosticKind::IndexOutOfRange,
                    format!("{loc}.triples_on[{q}]"),
                    format!(
                        "triple index {t} out of range (have {})",
                        complex.triples.len()
                    ),
                ),
                Some(tr) => {
                    if !tr.pairs().contains(&key) {
                        out.error(
                            DiagnosticKind::ForeignTriple,
                            format!("{loc}.triples_on[{q}]"),
                            format!("triple {t} does not contain pair {key:?}"),
                        );
                    }
                }
            }
        }
    }

    let mut seen_triples = BTreeSet::new();
    for (k, t) in complex.triples.iter().enumerate() {
        let loc = format!("triples[{k}]");
        let idx = [t.a, t.b, t.c];
        if idx.iter().any(|&x| x >= n) {
            out.error(
                DiagnosticKind::IndexOutOfRange,
                loc.clone(),
                format!("triple {idx:?} references a component out of range (have {n})"),
            );
            continue;
        }
        if !(t.a < t.b && t.b < t.c) {
            out.error(
                DiagnosticKind::UnorderedTriple,
                loc.clone(),
                format!("triple {idx:?} is not strictly increasing"),
            );
            continue;
        }
        if !seen_triples.insert(*t) {
            out.error(
                DiagnosticKind::DuplicateTriple,
                loc.clone(),
                format!("triple {idx:?} appears more than once"),
            );
        }
        for (i, j) in t.pairs() {
            match complex.pair_index(i, j) {
                None => out.error(
                    DiagnosticKind::MissingPairForTriple,
                    loc.clone(),
                    format!("pair ({i}, {j}) of triple {idx:?} does not exist"),
                ),
                Some(p) => {
                    if !complex.pairs[p].triples_on.contains(&k) {
                        out.error(
                            DiagnosticKind::TripleNotListed,
                            format!("pairs[{p}].triples_on"),
                            format!("triple {k} lies on pair ({i}, {j}) but is not listed"),
                        );
                    }
                }
            }
        }
    }

    if n > 1 && !is_connected(complex) {
        out.0.push(Diagnostic {
            severity: Severity::Warning,
            kind: DiagnosticKind::Disconnected,
            location: "pairs".into(),
            message: "the dual graph of the components is disconnected".into(),
        });
    }
    out.0
}

pub fn has_errors(diags: &[Diagnostic]) -> bool {
    diags.iter().any(|d| d.severity == Severity::Error)
}

fn is_connected(complex: &SncComplex) -> bool {
    let n = complex.components.len();
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(parent: &mut [usize], x: usize) -> usize {
        let mut r = x;
        while parent[r] != r {
            r = parent[r];
        }
        let mut y = x;
        while parent[y] != r {
            let next = parent[y];
            parent[y] = r;
            y = next;
        }
        r
    }
    for p in &complex.pairs {
        if p.i < n && p.j < n {
            let (a, b) = (find(&mut parent, p.i), find(&mut parent, p.j));
            parent[a] = b;
        }
    }
    let root = find(&mut parent, 0);
    (0..n).all(|k| find(&mut parent, k) == root)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gallery;
    use crate::lattice::IntegerMatrix;

    fn kinds(c: &SncComplex) -> Vec<DiagnosticKind> {
        validate(c).into_iter().map(|d| d.kind).collect()
    }

    #[test]
    fn gallery_complexes_are_clean() {
        assert!(validate(&gallery::cubic_degeneration()).is_empty());
        assert!(validate(&gallery::elliptic_product_degeneration()).is_empty());
        assert!(validate(&gallery::p2_f1_example()).is_empty());
        assert!(validate(&SncComplex::empty()).is_empty());
    }

    #[test]
    fn out_of_range_pair() {
        let mut c = gallery::p2_f1_example();
        c.pairs[0].j = 99;
        assert_eq!(
            kinds(&c),
            vec![
                DiagnosticKind::IndexOutOfRange,
                DiagnosticKind::Disconnected
            ]
        );
        assert!(has_errors(&validate(&c)));
    }

    #[test]
    fn asymmetric_pairing() {
        let mut c = gallery::p2_f1_example();
        let lat = c.components[1].lattices.get_mut(&1).unwrap();
        lat.pairing = Some(IntegerMatrix::from_rows(&[[-1, 1], [0, 0]]));
        assert_eq!(kinds(&c), vec![DiagnosticKind::AsymmetricPairing]);
    }

    #[test]
    fn triple_bookkeeping() {
        let mut c = gallery::cubic_degeneration();
        c.pairs[1].triples_on.clear();
        assert_eq!(kinds(&c), vec![DiagnosticKind::TripleNotListed]);
        let mut c = gallery::cubic_degeneration();
        c.pairs.remove(2);
        assert_eq!(kinds(&c), vec![DiagnosticKind::MissingPairForTriple]);
    }

    #[test]
    fn disconnection_is_only_a_warning() {
        let mut c = gallery::p2_f1_example();
        c.pairs.clear();
        let d = validate(&c);
        assert_eq!(d.len(), 1);
        assert_eq!(d[0].severity, Severity::Warning);
        assert!(!has_errors(&d));
    }

    #[test]
    fn class_length_and_self_pair() {
        let mut c = gallery::p2_f1_example();
        c.pairs[0].class_in_j.pop();
        assert_eq!(kinds(&c), vec![DiagnosticKind::ClassLength]);
        let mut c = gallery::p2_f1_example();
        c.pairs[0].j = 0;
        c.pairs[0].class_in_j = c.pairs[0].class_in_i.clone();
        assert!(kinds(&c).contains(&DiagnosticKind::SelfIntersectionPair));
    }
}
