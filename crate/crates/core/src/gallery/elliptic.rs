use super::{blown_up_plane, plane_class, NamedTupleSet};
use crate::snc::{PairStratum, SncComplex, TripleStratum};

/// Neighbour directions in `(Z/3)^2`, in the cyclic order matched with
/// [`boundary_classes`].
const DIRECTIONS: [(usize, usize); 6] = [(1, 0), (1, 1), (0, 1), (2, 0), (2, 2), (0, 2)];

/// `E1, H-E1-E2, E2, H-E2-E3, E3, H-E1-E3` on `Bl3 P2`.
fn boundary_classes() -> [Vec<num_bigint::BigInt>; 6] {
    [
        plane_class(3, 0, &[(1, 1)]),
        plane_class(3, 1, &[(1, -1), (2, -1)]),
        plane_class(3, 0, &[(2, 1)]),
        plane_class(3, 1, &[(2, -1), (3, -1)]),
        plane_class(3, 0, &[(3, 1)]),
        plane_class(3, 1, &[(1, -1), (3, -1)]),
    ]
}

/// Component index of hexagon `(a, b)`.
pub fn hexagon_index(a: usize, b: usize) -> usize {
    3 * (a % 3) + (b % 3)
}

fn shift(v: (usize, usize), d: (usize, usize)) -> (usize, usize) {
    ((v.0 + d.0) % 3, (v.1 + d.1) % 3)
}

/// Nine `Bl3 P2` hexagons tiling the torus, dual to the triangulation of
/// `(Z/3)^2` by the directions `(1,0), (0,1), (1,1)`. Hexagon `v` meets
/// `v + d` along the boundary curve assigned to `d`, which is the curve
/// assigned to `-d` on the other side.
pub fn elliptic_product_degeneration() -> SncComplex {
    let classes = boundary_classes();
    let mut c = SncComplex::empty();
    for a in 0..3 {
        for b in 0..3 {
            let mut comp = blown_up_plane(3);
            comp.name = format!("X({a},{b})");
            c.components.push(comp);
        }
    }
    for a in 0..3 {
        for b in 0..3 {
            for k in 0..3 {
                let w = shift((a, b), DIRECTIONS[k]);
                c.pairs.push(PairStratum::new(
                    hexagon_index(a, b),
                    hexagon_index(w.0, w.1),
                    classes[k].clone(),
                    classes[k + 3].clone(),
                ));
            }
            let v = (a, b);
            let (e, ne, n) = (shift(v, (1, 0)), shift(v, (1, 1)), shift(v, (0, 1)));
            c.triples.push(TripleStratum::new(
                hexagon_index(a, b),
                hexagon_index(e.0, e.1),
                hexagon_index(ne.0, ne.1),
            ));
            c.triples.push(TripleStratum::new(
                hexagon_index(a, b),
                hexagon_index(ne.0, ne.1),
                hexagon_index(n.0, n.1),
            ));
        }
    }
    c.canonicalize();
    c.attach_triples();
    c
}

/// Straight cycles through hexagon `(0,0)` in the three torus directions:
/// red `H-E1` along `(t,0)`, green `H-E3` along `(t,t)`, blue `H-E2`
/// along `(0,t)`.
pub fn elliptic_line_cycles() -> NamedTupleSet {
    let c = elliptic_product_degeneration();
    let line = |dir: (usize, usize), e: usize| {
        let blocks: Vec<_> = (0..3)
            .map(|t| {
                (
                    hexagon_index(t * dir.0, t * dir.1),
                    plane_class(3, 1, &[(e, -1)]),
                )
            })
            .collect();
        c.tuple_from_blocks(&blocks)
    };
    NamedTupleSet {
        labels: vec!["red".into(), "green".into(), "blue".into()],
        tuples: vec![line((1, 0), 1), line((1, 1), 3), line((0, 1), 2)],
    }
}
