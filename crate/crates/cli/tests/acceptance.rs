//! Acceptance suite: one PASS/FAIL line per criterion, exact arithmetic throughout.

use std::collections::BTreeSet;
use std::io::Write;
use std::process::Command as Process;

use serde_json::Value;
use superq::coord::{check_independence, mixed_factorization, signs};
use superq::homogeneous::{check_action_axioms, check_closure, ParabolicSpec};
use superq::rmatrix::calibrate::trial;
use superq::rmatrix::intertwiner::normalized_vector_r;
use superq::rmatrix::yang_baxter::{check_yang_baxter, hecke_relation};
use superq::rmatrix::{calibrate_coproduct, ensure_calibrated};
use superq::uqrep::{cache, dagger, enumerate_lambda, Factor, RepModule, SuperIndex, TensorWord, Variance};
use superq_cli::{run, Command, RunConfig, Status};

type Check = Result<String, String>;

fn idx(m: usize, n: usize) -> SuperIndex {
    SuperIndex::new(m, n).unwrap()
}

fn cfg(m: usize, n: usize, theta: &str, degree: usize) -> RunConfig {
    RunConfig { m, n, theta: theta.into(), degree, ..RunConfig::default() }
}

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn calibration() -> Check {
    let report = calibrate_coproduct(idx(1, 1));
    ensure(report.passing.len() == 1, || format!("{} coproduct conventions pass on gl(1|1)", report.passing.len()))?;
    let chosen = ensure_calibrated().map_err(|e| e.to_string())?;
    for (m, n) in [(2, 1), (2, 2), (3, 1)] {
        let t = trial(idx(m, n), &chosen);
        ensure(t.passed, || format!("convention {chosen} fails on gl({m}|{n})"))?;
    }
    let coord = signs::calibrate().map_err(|e| e.to_string())?;
    let clean = |ts: &[signs::SignTrial]| ts.iter().filter(|t| t.failures == 0).count();
    ensure(clean(&coord.product_trials) == 1 && clean(&coord.coproduct_trials) == 1, || {
        "coordinate product or coproduct sign is not unique".into()
    })?;
    Ok(format!("{chosen}; coordinate signs {}", coord.chosen.unwrap()))
}

fn yang_baxter() -> Check {
    let conv = ensure_calibrated().map_err(|e| e.to_string())?;
    for (m, n) in [(1, 1), (2, 1)] {
        let i = idx(m, n);
        let r = normalized_vector_r(i, &conv).ok_or_else(|| format!("no R on E⊗E for gl({m}|{n})"))?;
        ensure(check_yang_baxter(&r.operator, &i.space()).passed, || format!("YBE fails for gl({m}|{n})"))?;
        let e = RepModule::vector(i, &conv);
        let ee = RepModule::tensor(&e, &e, &conv);
        ensure(hecke_relation(&r.operator, &e, &ee).passed, || format!("Hecke relation fails for gl({m}|{n})"))?;
    }
    Ok("gl(1|1), gl(2|1)".into())
}

fn decompositions() -> Check {
    let mut count = 0;
    for (m, n) in [(1, 1), (2, 1)] {
        for f in [Factor::E, Factor::Ebar] {
            for k in 1..=4 {
                let w = TensorWord::power(f, k);
                let d = cache::decomposition(idx(m, n), &w).map_err(|e| e.to_string())?;
                let total: usize = d.summands.iter().map(|s| s.module.dim()).sum();
                ensure(d.dim == (m + n).pow(k as u32), || format!("{w}: dim {}", d.dim))?;
                ensure(d.residue_dim == 0 && total == d.dim, || format!("gl({m}|{n}) {w}: residue {}", d.residue_dim))?;
                count += 1;
            }
        }
    }
    Ok(format!("{count} tensor powers completely reducible"))
}

/// Partitions of size at most `k` fitting in the (m|n)-hook.
fn hook_partitions(m: usize, n: usize, k: usize) -> usize {
    fn go(rest: usize, max: usize, len: usize, m: usize, n: usize) -> usize {
        let mut c = 1;
        for part in 1..=rest.min(max) {
            if len >= m && part > n {
                continue;
            }
            c += go(rest - part, part, len + 1, m, n);
        }
        c
    }
    go(k, k, 0, m, n)
}

fn lambda_sets() -> Check {
    for (m, n) in [(1, 1), (2, 1)] {
        let i = idx(m, n);
        let l1 = enumerate_lambda(i, 3, Variance::Contravariant).map_err(|e| e.to_string())?;
        let l2 = enumerate_lambda(i, 3, Variance::Covariant).map_err(|e| e.to_string())?;
        let hooks = hook_partitions(m, n, 3);
        ensure(l1.len() == hooks && l2.len() == hooks, || {
            format!("gl({m}|{n}): |Λ1| = {}, |Λ2| = {}, hooks {hooks}", l1.len(), l2.len())
        })?;
        let meet: Vec<_> = l1.intersection(&l2).collect();
        ensure(meet == vec![&i.zero_weight()], || format!("gl({m}|{n}): Λ1 ∩ Λ2 = {meet:?}"))?;
        let mut image = BTreeSet::new();
        for l in &l1 {
            let d = dagger(i, l, Variance::Contravariant).map_err(|e| e.to_string())?;
            let back = dagger(i, &d, Variance::Covariant).map_err(|e| e.to_string())?;
            ensure(&back == l, || format!("dagger is not an involution at {l}"))?;
            image.insert(d);
        }
        ensure(image == l2, || format!("gl({m}|{n}): dagger(Λ1) ≠ Λ2"))?;
    }
    Ok("degree ≤ 3 on gl(1|1), gl(2|1)".into())
}

fn independence() -> Check {
    let r = check_independence(idx(1, 1), 2, 1, 4).map_err(|e| e.to_string())?;
    ensure(r.passed, || format!("rank {} of {}", r.rank, r.coefficients))?;
    Ok(format!("rank {} = {} coefficients", r.rank, r.coefficients))
}

fn factorization() -> Check {
    for (k, l) in [(1, 1), (2, 1), (1, 2), (2, 2)] {
        let r = mixed_factorization(idx(1, 1), k, l).map_err(|e| e.to_string())?;
        ensure(r.passed, || format!("block ({k},{l}) fails"))?;
    }
    Ok("blocks (1,1) (2,1) (1,2) (2,2)".into())
}

fn outcome(cmd: Command, c: &RunConfig) -> (Status, Value) {
    let o = run(&cmd, c);
    (o.status, o.report)
}

fn frobenius_triples() -> Check {
    let triples = [
        (1, 1, "none", "E", "line(1,0)"),
        (1, 1, "none", "E*Ebar", "line(0,0)"),
        (1, 1, "all", "E", "E|k"),
        (2, 1, "none", "E", "line(1,0,0)"),
        (2, 1, "1", "E", "E|k[hw=(1,0,0)]"),
        (2, 1, "1", "Ebar", "Ebar|k"),
        (2, 1, "1", "E*Ebar", "line(0,0,0)"),
        (2, 1, "all", "E", "E|k"),
    ];
    let mut nonzero = 0;
    for (m, n, theta, w, v) in triples {
        let (status, report) = outcome(Command::Frobenius { w: w.into(), v: v.into() }, &cfg(m, n, theta, 3));
        ensure(status == Status::Pass, || format!("gl({m}|{n}) Θ={theta} W={w} V={v}: {status:?}"))?;
        if report["result"]["hom_g"].as_u64().unwrap() > 0 {
            nonzero += 1;
        }
    }
    ensure(nonzero >= 6, || format!("only {nonzero} triples have nonzero Hom"))?;
    Ok(format!("{} triples, {nonzero} with nonzero Hom", triples.len()))
}

fn borel_weil() -> Check {
    let cases = [
        (1, 1, "1,0"),
        (1, 1, "2,0"),
        (1, 1, "0,-1"),
        (1, 1, "0,1"),
        (1, 1, "-1,0"),
        (2, 1, "1,0,0"),
        (2, 1, "0,0,-1"),
        (2, 1, "0,0,1"),
        (2, 1, "-1,0,0"),
    ];
    let (mut o_lambda1, mut obar_lambda2, mut dagger_rows, mut zero) = (0, 0, 0, 0);
    for (m, n, mu) in cases {
        let (status, report) = outcome(Command::Borelweil { mu: mu.into() }, &cfg(m, n, "none", 2));
        ensure(status == Status::Pass, || format!("gl({m}|{n}) μ=({mu}): {status:?}"))?;
        for row in report["result"]["rows"].as_array().unwrap() {
            ensure(row["verdict"] == "Match", || format!("gl({m}|{n}) μ=({mu}): {row}"))?;
            let predicted = !row["predicted"].is_null();
            match (row["space"].as_str().unwrap(), row["sign"].as_str().unwrap()) {
                ("O", "Minus") if predicted => o_lambda1 += 1,
                ("Obar", "Minus") if predicted => obar_lambda2 += 1,
                (_, "Plus") if predicted => dagger_rows += 1,
                _ => {}
            }
            if !predicted && row["zero_up_to"] == 2 {
                zero += 1;
            }
        }
    }
    ensure(o_lambda1 >= 3 && obar_lambda2 >= 2 && dagger_rows >= 2 && zero >= 2, || {
        format!("O {o_lambda1}, Obar {obar_lambda2}, dagger {dagger_rows}, zero {zero}")
    })?;
    Ok(format!("O(Λ1) {o_lambda1}, Obar(Λ2) {obar_lambda2}, p+ dagger {dagger_rows}, zero-certified {zero}"))
}

fn axioms_and_closure() -> Check {
    let samples = 20;
    for (m, n) in [(1, 1), (2, 1)] {
        let a = check_action_axioms(idx(m, n), 7, samples).map_err(|e| e.to_string())?;
        ensure(a.passed && a.samples >= samples, || format!("action axioms fail on gl({m}|{n})"))?;
    }
    for theta in [vec![], vec![1]] {
        let p = ParabolicSpec::new(idx(2, 1), theta.clone()).map_err(|e| e.to_string())?;
        let c = check_closure(&p, 1, 1, 7, samples).map_err(|e| e.to_string())?;
        ensure(c.passed && c.samples >= samples, || format!("A_q closure fails for Θ = {p}"))?;
    }
    Ok(format!("{samples} samples each, seed 7"))
}

fn determinism() -> Check {
    let exe = env!("CARGO_BIN_EXE_superq");
    let args = ["-m", "2", "-n", "1", "--theta", "1", "--degree", "2", "frobenius", "E", "E|k[hw=(1,0,0)]"];
    let a = Process::new(exe).args(args).output().map_err(|e| e.to_string())?;
    let b = Process::new(exe).args(args).output().map_err(|e| e.to_string())?;
    ensure(a.status.success() && b.status.success(), || "frobenius run failed".into())?;
    ensure(!a.stdout.is_empty() && a.stdout == b.stdout, || "outputs differ".into())?;
    Ok(format!("{} identical bytes", a.stdout.len()))
}

#[test]
fn acceptance() {
    let criteria: [(&str, fn() -> Check); 10] = [
        ("coproduct and coordinate sign calibration", calibration),
        ("Yang-Baxter and Hecke relations", yang_baxter),
        ("tensor power decompositions", decompositions),
        ("dominant weight sets and dagger", lambda_sets),
        ("matrix coefficient independence", independence),
        ("mixed block factorization", factorization),
        ("Frobenius reciprocity", frobenius_triples),
        ("Borel-Weil verdicts", borel_weil),
        ("action axioms and invariant closure", axioms_and_closure),
        ("deterministic reports", determinism),
    ];
    // Written to the real stdout so the lines survive output capture.
    let mut out = std::io::stdout().lock();
    writeln!(out).unwrap();
    let mut failed = Vec::new();
    for (i, (name, check)) in criteria.iter().enumerate() {
        match check() {
            Ok(detail) => writeln!(out, "criterion {:>2} PASS  {name}: {detail}", i + 1).unwrap(),
            Err(why) => {
                writeln!(out, "criterion {:>2} FAIL  {name}: {why}", i + 1).unwrap();
                failed.push(i + 1);
            }
        }
    }
    assert!(failed.is_empty(), "failed criteria: {failed:?}");
}
