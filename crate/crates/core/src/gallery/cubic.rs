use super::{blowup_pairing, plane_class, surface, NamedTupleSet};
use crate::snc::{PairStratum, SncComplex, TripleStratum};

/// `h, E{first}, ..., E{first + count - 1}`.
fn names(h: &str, first: usize, count: usize) -> Vec<String> {
    std::iter::once(h.to_string())
        .chain((first..first + count).map(|i| format!("E{i}")))
        .collect()
}

/// Three planes meeting like coordinate planes: `X1 = Bl6 P2` (points
/// `P1..P3` on `X12`, `P4..P6` on `X13`), `X2 = Bl3 P2` (points `P7..P9`
/// on `X23`), `X3 = P2`.
pub fn cubic_degeneration() -> SncComplex {
    let x1 = surface("X1", names("H1", 1, 6), blowup_pairing(6));
    let x2 = surface("X2", names("H2", 7, 3), blowup_pairing(3));
    let x3 = surface("X3", names("H3", 1, 0), blowup_pairing(0));
    let mut c = SncComplex::empty();
    c.components = vec![x1, x2, x3];
    c.pairs = vec![
        PairStratum::new(
            0,
            1,
            plane_class(6, 1, &[(1, -1), (2, -1), (3, -1)]),
            plane_class(3, 1, &[]),
        ),
        PairStratum::new(
            0,
            2,
            plane_class(6, 1, &[(4, -1), (5, -1), (6, -1)]),
            plane_class(0, 1, &[]),
        ),
        PairStratum::new(
            1,
            2,
            plane_class(3, 1, &[(1, -1), (2, -1), (3, -1)]),
            plane_class(0, 1, &[]),
        ),
    ];
    c.triples = vec![TripleStratum::new(0, 1, 2)];
    c.attach_triples();
    c
}

/// The 27 line tuples, in three families of nine.
pub fn cubic_lines() -> NamedTupleSet {
    let c = cubic_degeneration();
    let mut labels = Vec::with_capacity(27);
    let mut tuples = Vec::with_capacity(27);
    for i in 1..=3 {
        for j in 4..=6 {
            labels.push(format!("(H1-E{i}-E{j}, 0, 0)"));
            tuples.push(c.tuple_from_blocks(&[(0, plane_class(6, 1, &[(i, -1), (j, -1)]))]));
        }
    }
    for i in 1..=3 {
        for j in 7..=9 {
            labels.push(format!("(E{i}, H2-E{j}, 0)"));
            tuples.push(c.tuple_from_blocks(&[
                (0, plane_class(6, 0, &[(i, 1)])),
                (1, plane_class(3, 1, &[(j - 6, -1)])),
            ]));
        }
    }
    for i in 4..=6 {
        for j in 7..=9 {
            labels.push(format!("(E{i}, E{j}, H3)"));
            tuples.push(c.tuple_from_blocks(&[
                (0, plane_class(6, 0, &[(i, 1)])),
                (1, plane_class(3, 0, &[(j - 6, 1)])),
                (2, plane_class(0, 1, &[])),
            ]));
        }
    }
    NamedTupleSet { labels, tuples }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::engine::{is_prelog_class, DiagramMatrices};
    use crate::lattice::big_vec;

    #[test]
    fn shape() {
        let c = cubic_degeneration();
        assert_eq!(c.block_sizes(), vec![7, 4, 1]);
        assert_eq!(
            c.pairs
                .iter()
                .map(|p| p.triples_on.clone())
                .collect::<Vec<_>>(),
            vec![vec![0]; 3]
        );
    }

    #[test]
    fn lines_are_prelog() {
        let c = cubic_degeneration();
        let d = DiagramMatrices::from_complex(&c).unwrap();
        let lines = cubic_lines();
        assert_eq!(lines.len(), 27);
        for v in &lines.tuples {
            assert!(is_prelog_class(&d, v).unwrap());
        }
        let e1 = c.tuple_from_blocks(&[(0, big_vec(&[0, 1, 0, 0, 0, 0, 0]))]);
        assert!(!is_prelog_class(&d, &e1).unwrap());
    }
}
