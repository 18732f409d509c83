//! Selection of the coproduct convention from the declared family.

use std::sync::OnceLock;

use serde::Serialize;

use super::intertwiner::{build_r_pibar_pi, check_intertwiner, IntertwinerReport};
use super::RmatrixError;
use crate::uqrep::convention::{self, Convention, FAMILY};
use crate::uqrep::{RepModule, SuperIndex};

#[derive(Clone, Debug, Serialize)]
pub struct ConventionTrial {
    pub convention: Convention,
    pub label: String,
    pub intertwiner: IntertwinerReport,
    pub relation_failures: Vec<String>,
    pub passed: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct CalibrationReport {
    pub m: usize,
    pub n: usize,
    pub trials: Vec<ConventionTrial>,
    pub passing: Vec<Convention>,
    pub chosen: Option<Convention>,
    pub ambiguous: bool,
}

/// Test one convention: the closed-form R must intertwine `Δ` and `Δ'` on
/// `Ebar ⊗ E`, and the defining relations must hold on `E`, `Ebar`,
/// `E ⊗ E` and `Ebar ⊗ E`.
pub fn trial(idx: SuperIndex, conv: &Convention) -> ConventionTrial {
    let e = RepModule::vector(idx, conv);
    let eb = RepModule::dual(&e, conv);
    let r = build_r_pibar_pi(idx);
    let intertwiner = check_intertwiner(&r.operator, &eb, &e, conv).expect("shapes agree");
    let mut relation_failures = Vec::new();
    for (name, m) in [
        ("E", e.clone()),
        ("Ebar", eb.clone()),
        ("E*E", RepModule::tensor(&e, &e, conv)),
        ("Ebar*E", RepModule::tensor(&eb, &e, conv)),
    ] {
        relation_failures.extend(m.relation_failures(true).into_iter().map(|f| format!("{name}: {f}")));
    }
    ConventionTrial {
        convention: *conv,
        label: conv.to_string(),
        passed: intertwiner.passed && relation_failures.is_empty(),
        intertwiner,
        relation_failures,
    }
}

pub fn calibrate_coproduct(idx: SuperIndex) -> CalibrationReport {
    let trials: Vec<_> = FAMILY.iter().map(|c| trial(idx, c)).collect();
    let passing: Vec<_> = trials.iter().filter(|t| t.passed).map(|t| t.convention).collect();
    CalibrationReport {
        m: idx.m(),
        n: idx.n(),
        chosen: passing.first().copied(),
        ambiguous: passing.len() > 1,
        passing,
        trials,
    }
}

/// Calibrate on gl(1|1) once and publish the result globally.
pub fn ensure_calibrated() -> Result<Convention, RmatrixError> {
    static DONE: OnceLock<Result<Convention, RmatrixError>> = OnceLock::new();
    DONE.get_or_init(|| {
        let idx = SuperIndex::new(1, 1).expect("valid index");
        let report = calibrate_coproduct(idx);
        let chosen = report.chosen.ok_or_else(|| RmatrixError::NoPassingConvention {
            residuals: report
                .trials
                .iter()
                .map(|t| format!("{}: {} residuals", t.label, t.intertwiner.residuals.len()))
                .collect(),
        })?;
        convention::publish(chosen)?;
        Ok(chosen)
    })
    .clone()
}
