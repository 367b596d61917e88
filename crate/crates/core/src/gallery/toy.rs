use super::surface;
use crate::lattice::{big_vec, IntegerMatrix};
use crate::snc::{PairStratum, SncComplex};

/// `P2 ∪ F1` glued along a line of `P2` and the `(-1)`-section `C0` of
/// `F1`. Bases: `L` on `P2`; `C0, F` on `F1`.
pub fn p2_f1_example() -> SncComplex {
    let p2 = surface("P2", vec!["L".into()], IntegerMatrix::from_rows(&[[1]]));
    let f1 = surface(
        "F1",
        vec!["C0".into(), "F".into()],
        IntegerMatrix::from_rows(&[[-1, 1], [1, 0]]),
    );
    let mut c = SncComplex::empty();
    c.components = vec![p2, f1];
    c.pairs = vec![PairStratum::new(0, 1, big_vec(&[1]), big_vec(&[1, 0]))];
    c
}
