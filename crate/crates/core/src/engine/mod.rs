//! Prelog pipeline: diagram matrices, `R(X)`, `coker delta`, the prelog
//! group, its saturation, and queries against a computed report.

mod diagram;
mod numerical;
mod queries;
mod report;

pub use diagram::{
    build_delta, build_delta_prime, build_rho, build_rho_prime, ensure_surface_case, ensure_valid,
    friedman_check, verify_square, BlockTable, DiagramMatrices, FriedmanResult,
};
pub use numerical::{
    numerical_complex, numerical_prelog_group, radical_quotient, NumericalPrelog, RadicalQuotient,
};
pub use queries::{
    batch_is_prelog, class_in_cokernel, divisibility_query, is_prelog_class, membership_query,
    pairing_total,
};
pub use report::{
    compatible_classes, parse_report, prelog_group, saturated_prelog_group, serialize_report,
    Diagnostics, ModularRank, NumericalSummary, PrelogReport,
};

use crate::snc::SncComplex;

/// Full pipeline on a geometric complex. The numerical summary is attached
/// when every component carries a pairing in the working grade.
pub fn analyze(complex: &SncComplex) -> Result<PrelogReport, crate::error::EngineError> {
    let mut report = prelog_group(&DiagramMatrices::from_complex(complex)?)?;
    let grade = complex.working_grade;
    let paired = complex
        .components
        .iter()
        .all(|c| c.lattice(grade).is_some_and(|l| l.pairing.is_some()));
    if paired {
        report.numerical = Some(numerical::numerical_against(complex, &report)?.summary());
    }
    Ok(report)
}
