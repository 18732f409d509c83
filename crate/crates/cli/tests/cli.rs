use std::process::{Command, Output};

fn superq(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_superq")).args(args).output().unwrap()
}

fn code(args: &[&str]) -> i32 {
    superq(args).status.code().unwrap()
}

#[test]
fn exit_codes() {
    assert_eq!(code(&["-m", "0", "repcheck"]), 2);
    assert_eq!(code(&["--theta", "5", "aq"]), 2);
    assert_eq!(code(&["frobenius", "line(1,0)", "line(1,0)"]), 2);
    assert_eq!(code(&["decompose", "E^x"]), 2);
    assert_eq!(code(&["-m", "2", "--theta", "1", "induce", "line(0,-1,0)"]), 2);
    assert_eq!(code(&["nonsense"]), 2);
    assert_eq!(code(&["borelweil", "1,0"]), 0);
    assert_eq!(code(&["borelweil", "-1,0"]), 0);
    assert_eq!(code(&["-m", "2", "rmatrix"]), 0);
    assert_eq!(code(&["decompose", "E^2*Ebar"]), 0);
}

#[test]
fn report_shape() {
    let out = superq(&["--format", "json", "decompose", "E^2"]);
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["schema"], "superq.report/1");
    assert_eq!(v["status"], "pass");
    assert_eq!(v["result"]["dim"], 4);
    assert_eq!(v["result"]["residue_dim"], 0);
}

#[test]
fn tsv_and_out_file() {
    let dir = std::env::temp_dir().join(format!("superq-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("r.tsv");
    let out = superq(&["--format", "tsv", "--out", path.to_str().unwrap(), "repcheck"]);
    assert!(out.status.success() && out.stdout.is_empty());
    let text = std::fs::read_to_string(&path).unwrap();
    assert!(text.lines().any(|l| l == "status\tpass"));
    std::fs::remove_dir_all(&dir).unwrap();
}
