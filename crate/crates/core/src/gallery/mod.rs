//! Constructors for the worked geometries and their distinguished cycles.
//!
//! Every builder is deterministic: fixed component order, fixed basis
//! order, canonical pair and triple order.

mod cubic;
mod elliptic;
mod search;
mod toy;

use std::collections::BTreeMap;

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use crate::lattice::IntegerMatrix;
use crate::snc::{ChowLattice, ClassTuple, Component};

pub use cubic::{cubic_degeneration, cubic_lines};
pub use elliptic::{elliptic_line_cycles, elliptic_product_degeneration, hexagon_index};
pub use search::{find_generating_indices, find_generating_subset, unrank_combination};
pub use toy::p2_f1_example;

/// Labelled class tuples on one complex; `labels[k]` names `tuples[k]`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct NamedTupleSet {
    pub labels: Vec<String>,
    pub tuples: Vec<ClassTuple>,
}

impl NamedTupleSet {
    pub fn len(&self) -> usize {
        self.tuples.len()
    }

    pub fn is_empty(&self) -> bool {
        self.tuples.is_empty()
    }

    pub fn get(&self, label: &str) -> Option<&ClassTuple> {
        self.labels
            .iter()
            .position(|l| l == label)
            .map(|k| &self.tuples[k])
    }
}

/// Example names accepted by [`by_name`].
pub const EXAMPLE_NAMES: [&str; 3] = ["cubic", "elliptic", "p2f1"];

pub fn by_name(name: &str) -> Option<crate::snc::SncComplex> {
    match name {
        "cubic" => Some(cubic_degeneration()),
        "elliptic" => Some(elliptic_product_degeneration()),
        "p2f1" => Some(p2_f1_example()),
        _ => None,
    }
}

/// Surface component with a single divisor lattice in codimension 1.
pub(crate) fn surface(name: &str, basis: Vec<String>, pairing: IntegerMatrix) -> Component {
    let mut lattices = BTreeMap::new();
    lattices.insert(
        1,
        ChowLattice {
            basis_names: basis,
            pairing: Some(pairing),
        },
    );
    Component {
        name: name.to_string(),
        dimension: 2,
        lattices,
    }
}

/// `diag(1, -1, ..., -1)` of size `k + 1`.
pub(crate) fn blowup_pairing(k: usize) -> IntegerMatrix {
    let mut p = IntegerMatrix::identity(k + 1);
    for i in 1..=k {
        p[(i, i)] = BigInt::from(-1);
    }
    p
}

/// The plane blown up in `k` points: basis `H, E1, ..., Ek`.
pub fn blown_up_plane(k: usize) -> Component {
    let name = if k == 0 {
        "P2".to_string()
    } else {
        format!("Bl{k}P2")
    };
    let basis = std::iter::once("H".to_string())
        .chain((1..=k).map(|i| format!("E{i}")))
        .collect();
    surface(&name, basis, blowup_pairing(k))
}

/// `H·h + Σ e_i·E_i` on a plane blown up in `k` points; `e` lists
/// 1-based exceptional indices with coefficients.
pub(crate) fn plane_class(k: usize, h: i64, e: &[(usize, i64)]) -> Vec<BigInt> {
    let mut v = vec![BigInt::from(0); k + 1];
    v[0] = BigInt::from(h);
    for &(i, c) in e {
        v[i] += c;
    }
    v
}
