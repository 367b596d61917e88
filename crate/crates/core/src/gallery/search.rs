use super::NamedTupleSet;
use crate::engine::PrelogReport;
use crate::exec::{self, Execution};
use crate::lattice::{is_saturated, rank_mod_p, IntegerMatrix, LatticeBasis};

fn binomial(n: u64, k: u64) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    (0..k).fold(1u64, |acc, i| acc * (n - i) / (i + 1))
}

/// The `index`-th `k`-subset of `0..n` in lexicographic order.
pub fn unrank_combination(n: usize, k: usize, mut index: u64) -> Vec<usize> {
    let mut out = Vec::with_capacity(k);
    let mut next = 0;
    for slot in 0..k {
        let remaining = (k - slot - 1) as u64;
        loop {
            let c = binomial((n - next - 1) as u64, remaining);
            if index < c {
                break;
            }
            index -= c;
            next += 1;
        }
        out.push(next);
        next += 1;
    }
    out
}

/// `size` free-quotient images, one per row.
fn image_matrix(images: &[Vec<num_bigint::BigInt>], subset: &[usize], dim: usize) -> IntegerMatrix {
    IntegerMatrix::from_big_rows(dim, subset.iter().map(|&k| images[k].clone()).collect())
        .expect("uniform image length")
}

fn spans_saturated(m: &IntegerMatrix, size: usize) -> bool {
    // saturated of full rank forces full rank mod every prime
    if rank_mod_p(m, 2).map_or(true, |r| r < size) {
        return false;
    }
    LatticeBasis::new(m.clone())
        .ok()
        .and_then(|l| is_saturated(&l).ok())
        .unwrap_or(false)
}

/// Indices of the first `size`-subset (lexicographic) whose images in the
/// free quotient of `coker delta` span a saturated lattice of rank `size`.
pub fn find_generating_indices(
    report: &PrelogReport,
    set: &NamedTupleSet,
    size: usize,
    exec: Execution,
) -> Option<Vec<usize>> {
    let n = set.len();
    if size > n {
        return None;
    }
    let images: Vec<_> = set
        .tuples
        .iter()
        .map(|t| report.free_class_of(t).ok())
        .collect::<Option<_>>()?;
    let dim = report.chow_of_x.free_rank;
    if size > dim || image_matrix(&images, &(0..n).collect::<Vec<_>>(), dim).rational_rank() < size
    {
        return None;
    }
    if size == 0 {
        return Some(Vec::new());
    }
    let total = binomial(n as u64, size as u64);
    let hit = exec::find_first(exec, total, |idx| {
        let subset = unrank_combination(n, size, idx);
        spans_saturated(&image_matrix(&images, &subset, dim), size)
    })?;
    Some(unrank_combination(n, size, hit))
}

/// Labels of [`find_generating_indices`].
pub fn find_generating_subset(
    report: &PrelogReport,
    set: &NamedTupleSet,
    size: usize,
    exec: Execution,
) -> Option<Vec<String>> {
    find_generating_indices(report, set, size, exec)
        .map(|ix| ix.into_iter().map(|k| set.labels[k].clone()).collect())
}
