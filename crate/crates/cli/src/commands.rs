//! One function per subcommand; each returns a status and a JSON report.

use clap::Subcommand;
use serde::Serialize;
use serde_json::{json, Value};
use superq::coord::{check_independence, mixed_factorization, signs};
use superq::homogeneous::{
    block_words, borel_weil_report, check_action_axioms, check_closure, frobenius, induce, invariants_aq, Verdict,
};
use superq::rmatrix::calibrate::trial;
use superq::rmatrix::intertwiner::normalized_vector_r;
use superq::rmatrix::{build_r_pibar_pi, check_yang_baxter, ensure_calibrated, hecke_relation};
use superq::uqrep::{cache, decompose, RepModule, TensorWord};

use crate::config::RunConfig;
use crate::spec::{parse_weight, ModuleSpec};
use crate::CliError;

pub const SCHEMA: &str = "superq.report/1";

#[derive(Clone, Debug, Subcommand, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Command {
    /// Defining relations on the basic modules and their small tensor products.
    Repcheck,
    /// Decompose a tensor word module into irreducible summands.
    Decompose { word: String },
    /// Intertwiner checks for the closed-form R on Ebar⊗E and the derived R on E⊗E.
    Rmatrix,
    /// Invariant subalgebra blocks, its closure under products and the action axioms.
    Aq,
    /// Induced module blocks for a Levi module.
    Induce { v: String },
    /// Both sides of Frobenius reciprocity.
    Frobenius { w: String, v: String },
    /// Borel–Weil verdicts for a Levi highest weight.
    Borelweil {
        #[arg(allow_hyphen_values = true)]
        mu: String,
    },
    /// Peter–Weyl independence and the mixed factorization ranks.
    Peterweyl,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Usage,
    Inconclusive,
}

impl Status {
    pub fn exit_code(self) -> i32 {
        match self {
            Status::Pass => 0,
            Status::Fail => 1,
            Status::Usage => 2,
            Status::Inconclusive => 3,
        }
    }

    fn of(passed: bool) -> Status {
        if passed {
            Status::Pass
        } else {
            Status::Fail
        }
    }
}

#[derive(Clone, Debug)]
pub struct Outcome {
    pub status: Status,
    pub report: Value,
}

fn to_value<T: Serialize>(x: &T) -> Value {
    serde_json::to_value(x).expect("reports serialize")
}

/// Run a command; errors become usage (2) or failure (1) outcomes.
pub fn run(cmd: &Command, cfg: &RunConfig) -> Outcome {
    let (status, result) = match dispatch(cmd, cfg) {
        Ok(x) => x,
        Err(CliError::Usage(msg)) => (Status::Usage, json!({ "error": msg })),
        Err(e) => (Status::Fail, json!({ "error": e.to_string() })),
    };
    let report = json!({
        "schema": SCHEMA,
        "metadata": metadata(),
        "command": to_value(cmd),
        "config": to_value(cfg),
        "status": to_value(&status),
        "result": result,
    });
    Outcome { status, report }
}

/// Choices fixed by calibration rather than by input.
fn metadata() -> Value {
    json!({
        "weight_order": "lexicographic",
        "hopf_convention": ensure_calibrated().map(|c| c.to_string()).ok(),
        "coordinate_signs": signs::ensure().map(|c| c.to_string()).ok(),
    })
}

fn dispatch(cmd: &Command, cfg: &RunConfig) -> Result<(Status, Value), CliError> {
    let idx = cfg.index()?;
    let p = cfg.parabolic()?;
    let conv = ensure_calibrated()?;
    match cmd {
        Command::Repcheck => {
            let mut modules = Vec::new();
            let mut passed = true;
            for w in ["E", "Ebar", "E*E", "Ebar*E", "E*Ebar", "Ebar*Ebar", "E^3"] {
                let word: TensorWord = w.parse()?;
                let m = cache::module(idx, &word)?;
                let failures = m.relation_failures(true);
                passed &= failures.is_empty();
                modules.push(json!({ "word": w, "dim": m.dim(), "failures": failures }));
            }
            Ok((Status::of(passed), json!({ "convention": conv.to_string(), "modules": modules, "passed": passed })))
        }
        Command::Decompose { word } => {
            let w: TensorWord = word.parse().map_err(|e: superq::uqrep::RepError| CliError::Usage(e.to_string()))?;
            let d = cache::decomposition(idx, &w)?;
            let summands: Vec<Value> = d
                .summands
                .iter()
                .map(|s| json!({ "highest_weight": s.highest_weight, "parity": s.parity, "dim": s.module.dim() }))
                .collect();
            Ok((
                Status::Pass,
                json!({
                    "word": w.to_string(),
                    "dim": d.dim,
                    "summands": summands,
                    "residue_dim": d.residue_dim,
                    "completely_reducible": d.completely_reducible(),
                }),
            ))
        }
        Command::Rmatrix => {
            let t = trial(idx, &conv);
            let r = build_r_pibar_pi(idx);
            let e = RepModule::vector(idx, &conv);
            let ee = RepModule::tensor(&e, &e, &conv);
            let derived = normalized_vector_r(idx, &conv);
            let (ybe, hecke, dump) = match &derived {
                Some(rv) => (
                    Some(check_yang_baxter(&rv.operator, &idx.space())),
                    Some(hecke_relation(&rv.operator, &e, &ee)),
                    rv.operator.dump(),
                ),
                None => (None, None, String::new()),
            };
            let passed = t.passed
                && ybe.as_ref().is_some_and(|y| y.passed)
                && hecke.as_ref().is_some_and(|h| h.passed);
            Ok((
                Status::of(passed),
                json!({
                    "convention": conv.to_string(),
                    "r_pibar_pi": { "intertwiner": t.intertwiner, "relation_failures": t.relation_failures, "matrix": r.operator.dump() },
                    "r_pi_pi": { "found": derived.is_some(), "matrix": dump, "yang_baxter": ybe, "hecke": hecke },
                    "passed": passed,
                }),
            ))
        }
        Command::Aq => {
            let blocks = invariants_aq(&p, cfg.kmax, cfg.lmax)?;
            let dims: Vec<Value> = blocks.iter().map(|b| json!({ "k": b.k, "l": b.l, "dim": b.dim() })).collect();
            let closure = check_closure(&p, cfg.kmax.min(1), cfg.lmax.min(1), cfg.seed, cfg.samples)?;
            let axioms = check_action_axioms(idx, cfg.seed, cfg.samples)?;
            let passed = closure.passed && axioms.passed;
            Ok((
                Status::of(passed),
                json!({
                    "theta": p.theta(),
                    "coordinate_signs": signs::ensure()?.to_string(),
                    "blocks": dims,
                    "closure": closure,
                    "axioms": axioms,
                    "passed": passed,
                }),
            ))
        }
        Command::Induce { v } => {
            let spec: ModuleSpec = v.parse()?;
            let vm = spec.build(idx, &p)?;
            let vk = p.restrict(&vm, superq::homogeneous::Subalgebra::Levi);
            let s_k = p.s_k();
            let words = block_words(cfg.degree);
            let mut blocks = Vec::new();
            for w in &words {
                let (k, l) = w.bidegree();
                blocks.push(json!({ "k": k, "l": l, "dim": induce(&vk, &s_k, std::slice::from_ref(w))?.dim() }));
            }
            let space = induce(&vk, &s_k, &words)?;
            let summands: Vec<Value> = space
                .module
                .as_ref()
                .map(|m| {
                    decompose(m)
                        .summands
                        .iter()
                        .map(|s| json!({ "highest_weight": s.highest_weight, "dim": s.module.dim() }))
                        .collect()
                })
                .unwrap_or_default();
            let passed = space.conditions_hold && space.l_stable();
            Ok((
                Status::of(passed),
                json!({
                    "theta": p.theta(),
                    "v": spec.to_string(),
                    "degree": cfg.degree,
                    "blocks": blocks,
                    "dim": space.dim(),
                    "conditions_hold": space.conditions_hold,
                    "l_stable": space.l_stable(),
                    "summands": summands,
                    "passed": passed,
                }),
            ))
        }
        Command::Frobenius { w, v } => {
            let ws: ModuleSpec = w.parse()?;
            if !ws.has_tensor_provenance() {
                return Err(CliError::Usage(format!("W = `{ws}` must be a tensor word or one of its summands")));
            }
            let vs: ModuleSpec = v.parse()?;
            let wm = ws.build(idx, &p)?;
            let vm = vs.build(idx, &p)?;
            let r = frobenius(&p, &wm, &vm, cfg.degree)?;
            Ok((Status::of(r.passed), to_value(&r)))
        }
        Command::Borelweil { mu } => {
            let mu = parse_weight(mu)?;
            if mu.len() != idx.size() {
                return Err(CliError::Usage(format!("weight {mu} needs {} entries", idx.size())));
            }
            let r = borel_weil_report(&p, &mu, cfg.degree)?;
            let status = if r.verdicts().any(|v| v == Verdict::Mismatch) {
                Status::Fail
            } else if r.verdicts().any(|v| v == Verdict::Inconclusive) {
                Status::Inconclusive
            } else {
                Status::Pass
            };
            Ok((status, to_value(&r)))
        }
        Command::Peterweyl => {
            let ind = check_independence(idx, cfg.kmax, cfg.lmax, cfg.word_length)?;
            let mut fact = Vec::new();
            for k in 1..=cfg.kmax {
                for l in 1..=cfg.lmax {
                    fact.push(mixed_factorization(idx, k, l)?);
                }
            }
            let passed = ind.passed && fact.iter().all(|f| f.passed);
            Ok((
                Status::of(passed),
                json!({
                    "independence": ind,
                    "factorization": fact,
                    "coordinate_signs": signs::ensure()?.to_string(),
                    "passed": passed,
                }),
            ))
        }
    }
}

