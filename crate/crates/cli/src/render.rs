use std::fmt::Write;

use num_bigint::BigInt;

use prelog::engine::{FriedmanResult, PrelogReport};
use prelog::lattice::GroupElement;
use prelog::snc::SncComplex;

pub fn vector(v: &[BigInt]) -> String {
    let parts: Vec<String> = v.iter().map(ToString::to_string).collect();
    format!("({})", parts.join(", "))
}

/// `(free...)` or `(free... | torsion...)`.
pub fn element(e: &GroupElement) -> String {
    let free: Vec<String> = e.free.iter().map(ToString::to_string).collect();
    if e.torsion.is_empty() {
        format!("({})", free.join(", "))
    } else {
        let tors: Vec<String> = e.torsion.iter().map(ToString::to_string).collect();
        format!("({} | {})", free.join(", "), tors.join(", "))
    }
}

fn yes(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

pub fn report_text(r: &PrelogReport) -> String {
    let g = r.working_grade.map(|g| format!("^{g}")).unwrap_or_default();
    let mut s = String::new();
    let w = &mut s;
    let _ = writeln!(w, "CH{g}(X) = {}", r.chow_of_x.group_type());
    let _ = writeln!(w, "R(X) = Z^{}", r.compatible_basis.rank());
    let _ = writeln!(w, "CH{g}_prelog(X) = {}", r.prelog_group.group_type());
    let _ = writeln!(
        w,
        "CH{g}_prelog,sat(X) = Z^{}  (index {} over the prelog image)",
        r.saturated_basis.rank(),
        r.saturation_index
    );
    let _ = writeln!(w);
    let _ = writeln!(w, "rank of the prelog matrix:");
    let _ = writeln!(w, "  char 0: {}", r.rational_rank);
    for m in &r.modular_ranks {
        let _ = writeln!(w, "  char {}: {}", m.characteristic, m.rank);
    }
    let _ = writeln!(w);
    let _ = writeln!(w, "prelog generators in coker delta:");
    if r.prelog_generators.is_empty() {
        let _ = writeln!(w, "  (none)");
    }
    for (k, e) in r.prelog_generators.iter().enumerate() {
        let _ = writeln!(w, "  g{:<3} {}", k + 1, element(e));
    }
    let _ = writeln!(w, "saturated basis:");
    if r.saturated_basis.rank() == 0 {
        let _ = writeln!(w, "  (none)");
    }
    for (k, row) in r.saturated_basis.generators().row_iter().enumerate() {
        let _ = writeln!(w, "  s{:<3} {}", k + 1, vector(row));
    }
    let d = &r.diagnostics;
    let _ = writeln!(w);
    let _ = writeln!(w, "diagnostics:");
    let _ = writeln!(
        w,
        "  delta rank {}, injective: {}",
        d.delta_rank,
        yes(d.delta_injective)
    );
    let _ = writeln!(
        w,
        "  image of delta saturated: {}",
        yes(d.delta_image_saturated)
    );
    let _ = writeln!(
        w,
        "  rho rank {}, surjective: {}",
        d.rho_rank,
        yes(d.rho_surjective)
    );
    let _ = writeln!(w, "  rho.delta = delta'.rho': {}", yes(d.square_commutes));
    if let Some(n) = &r.numerical {
        let _ = writeln!(w);
        let _ = writeln!(w, "numerical:");
        let _ = writeln!(w, "  Num{g}(X) = {}", n.chow_of_x);
        let _ = writeln!(w, "  CH{g}_prelog,num(X) = {}", n.prelog_group);
        let _ = writeln!(w, "  Num{g}_prelog,sat index {}", n.saturation_index);
        let _ = writeln!(
            w,
            "  induced map injective: {}, surjective: {}",
            yes(n.induced_injective),
            yes(n.induced_surjective)
        );
    }
    s
}

pub fn friedman_text(c: &SncComplex, rows: &[FriedmanResult]) -> String {
    let mut s = String::new();
    for r in rows {
        let _ = writeln!(
            s,
            "{} ∩ {}: {} + {} + {} triple points = {}  {}",
            c.components[r.i].name,
            c.components[r.j].name,
            r.self_intersection_in_i,
            r.self_intersection_in_j,
            r.triple_points,
            &r.self_intersection_in_i + &r.self_intersection_in_j + BigInt::from(r.triple_points),
            if r.passes { "ok" } else { "FAILS" }
        );
    }
    let _ = writeln!(s, "all pass: {}", yes(rows.iter().all(|r| r.passes)));
    s
}
