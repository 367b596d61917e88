use std::collections::BTreeMap;

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use crate::json_int;
use crate::lattice::IntegerMatrix;

/// Chow lattice of a component in one grade: a named basis and, for surface
/// divisors, the intersection pairing on that basis.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ChowLattice {
    pub basis_names: Vec<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub pairing: Option<IntegerMatrix>,
}

impl ChowLattice {
    pub fn rank(&self) -> usize {
        self.basis_names.len()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Component {
    pub name: String,
    pub dimension: u32,
    /// Keyed by codimension.
    pub lattices: BTreeMap<u32, ChowLattice>,
}

impl Component {
    pub fn lattice(&self, grade: u32) -> Option<&ChowLattice> {
        self.lattices.get(&grade)
    }
}

fn one() -> usize {
    1
}

/// The curve `X_i ∩ X_j`, with its class on each side.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PairStratum {
    pub i: usize,
    pub j: usize,
    #[serde(default = "one")]
    pub stratum_rank: usize,
    #[serde(with = "json_int::vec")]
    pub class_in_i: Vec<BigInt>,
    #[serde(with = "json_int::vec")]
    pub class_in_j: Vec<BigInt>,
    /// Indices into the complex's triple list.
    #[serde(default)]
    pub triples_on: Vec<usize>,
}

impl PairStratum {
    pub fn new(i: usize, j: usize, class_in_i: Vec<BigInt>, class_in_j: Vec<BigInt>) -> Self {
        Self {
            i,
            j,
            stratum_rank: 1,
            class_in_i,
            class_in_j,
            triples_on: Vec::new(),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TripleStratum {
    pub a: usize,
    pub b: usize,
    pub c: usize,
}

impl TripleStratum {
    pub fn new(a: usize, b: usize, c: usize) -> Self {
        let mut v = [a, b, c];
        v.sort_unstable();
        Self {
            a: v[0],
            b: v[1],
            c: v[2],
        }
    }

    /// The three induced pairs `(a,b), (a,c), (b,c)`.
    pub fn pairs(&self) -> [(usize, usize); 3] {
        [(self.a, self.b), (self.a, self.c), (self.b, self.c)]
    }
}

fn default_grade() -> u32 {
    1
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SncComplex {
    pub components: Vec<Component>,
    #[serde(default)]
    pub pairs: Vec<PairStratum>,
    #[serde(default)]
    pub triples: Vec<TripleStratum>,
    #[serde(default = "default_grade")]
    pub working_grade: u32,
}

/// Element of `⊕ CH(X_i)` in the working grade, blocks concatenated in
/// component order.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct ClassTuple(#[serde(with = "json_int::vec")] pub Vec<BigInt>);

impl ClassTuple {
    pub fn zeros(n: usize) -> Self {
        Self(vec![BigInt::default(); n])
    }

    pub fn as_slice(&self) -> &[BigInt] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

impl From<Vec<BigInt>> for ClassTuple {
    fn from(v: Vec<BigInt>) -> Self {
        Self(v)
    }
}

impl SncComplex {
    pub fn empty() -> Self {
        Self {
            components: Vec::new(),
            pairs: Vec::new(),
            triples: Vec::new(),
            working_grade: 1,
        }
    }

    /// Basis size of each component at the working grade (zero if absent).
    pub fn block_sizes(&self) -> Vec<usize> {
        self.components
            .iter()
            .map(|c| c.lattice(self.working_grade).map_or(0, ChowLattice::rank))
            .collect()
    }

    /// Start offset of each component block, plus the total at the end.
    pub fn block_offsets(&self) -> Vec<usize> {
        let mut out = Vec::with_capacity(self.components.len() + 1);
        let mut acc = 0;
        out.push(0);
        for s in self.block_sizes() {
            acc += s;
            out.push(acc);
        }
        out
    }

    pub fn ambient_rank(&self) -> usize {
        self.block_sizes().iter().sum()
    }

    pub fn pair_index(&self, i: usize, j: usize) -> Option<usize> {
        let (i, j) = if i < j { (i, j) } else { (j, i) };
        self.pairs.iter().position(|p| p.i == i && p.j == j)
    }

    pub fn component_index(&self, name: &str) -> Option<usize> {
        self.components.iter().position(|c| c.name == name)
    }

    /// Tuple with the given per-component blocks; missing blocks are zero.
    pub fn tuple_from_blocks(&self, blocks: &[(usize, Vec<BigInt>)]) -> ClassTuple {
        let offs = self.block_offsets();
        let mut v = ClassTuple::zeros(self.ambient_rank());
        for (c, block) in blocks {
            for (k, x) in block.iter().enumerate() {
                v.0[offs[*c] + k] = x.clone();
            }
        }
        v
    }

    /// Orders every pair as `i < j` (swapping classes), every triple as
    /// `a < b < c`, then sorts pairs and triples lexicographically and
    /// rewrites `triples_on` accordingly.
    pub fn canonicalize(&mut self) {
        for p in &mut self.pairs {
            if p.i > p.j {
                std::mem::swap(&mut p.i, &mut p.j);
                std::mem::swap(&mut p.class_in_i, &mut p.class_in_j);
            }
        }
        self.pairs.sort_by_key(|p| (p.i, p.j));
        for t in &mut self.triples {
            *t = TripleStratum::new(t.a, t.b, t.c);
        }
        let mut order: Vec<usize> = (0..self.triples.len()).collect();
        order.sort_by_key(|&k| self.triples[k]);
        let mut new_index = vec![0; self.triples.len()];
        for (new, &old) in order.iter().enumerate() {
            new_index[old] = new;
        }
        self.triples = order.iter().map(|&k| self.triples[k]).collect();
        for p in &mut self.pairs {
            for t in &mut p.triples_on {
                if let Some(&n) = new_index.get(*t) {
                    *t = n;
                }
            }
            p.triples_on.sort_unstable();
        }
    }

    pub fn canonical(&self) -> Self {
        let mut c = self.clone();
        c.canonicalize();
        c
    }

    /// Rebuilds every `triples_on` list from the triple list.
    pub fn attach_triples(&mut self) {
        for p in &mut self.pairs {
            p.triples_on.clear();
        }
        for (k, t) in self.triples.iter().enumerate() {
            for (i, j) in t.pairs() {
                if let Some(p) = self.pairs.iter_mut().find(|p| p.i == i && p.j == j) {
                    p.triples_on.push(k);
                }
            }
        }
    }

    /// Relabels components: component `k` moves to position `perm[k]`.
    pub fn permute_components(&self, perm: &[usize]) -> Self {
        let mut comps = vec![None; self.components.len()];
        for (k, c) in self.components.iter().enumerate() {
            comps[perm[k]] = Some(c.clone());
        }
        let mut out = Self {
            components: comps.into_iter().map(|c| c.expect("permutation")).collect(),
            pairs: self
                .pairs
                .iter()
                .map(|p| PairStratum {
                    i: perm[p.i],
                    j: perm[p.j],
                    ..p.clone()
                })
                .collect(),
            triples: self
                .triples
                .iter()
                .map(|t| TripleStratum {
                    a: perm[t.a],
                    b: perm[t.b],
                    c: perm[t.c],
                })
                .collect(),
            working_grade: self.working_grade,
        };
        out.canonicalize();
        out
    }
}
