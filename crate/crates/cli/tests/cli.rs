use std::process::Command;

fn covcert() -> Command {
    let mut c = Command::new(env!("CARGO_BIN_EXE_covcert"));
    c.env_remove("COVCERT_DATA_DIR");
    c
}

#[test]
fn prove_then_verify() {
    let dir = tempfile::tempdir().unwrap();
    let out = covcert().args(["prove", "--n", "3", "--format", "json"]).output().unwrap();
    assert_eq!(out.status.code(), Some(0));
    let report = dir.path().join("r3.json");
    std::fs::write(&report, &out.stdout).unwrap();
    let v = covcert().arg("verify").arg(&report).output().unwrap();
    assert_eq!(v.status.code(), Some(0));
    assert!(String::from_utf8_lossy(&v.stdout).contains("Proved"));

    let text = String::from_utf8(out.stdout).unwrap().replacen("\"verdict\": \"Proved\"", "\"verdict\": \"Failed\"", 1);
    std::fs::write(&report, text).unwrap();
    let v = covcert().arg("verify").arg(&report).output().unwrap();
    assert_eq!(v.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&v.stderr).contains("tamper"));
}

#[test]
fn text_output_is_deterministic() {
    let a = covcert().args(["prove", "--n", "4"]).output().unwrap();
    let b = covcert().args(["prove", "--n", "4"]).output().unwrap();
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    assert!(String::from_utf8_lossy(&a.stdout).contains("Sp_8(Z) uniquely minimal (mod axioms A1–A5)"));
}

#[test]
fn missing_data_exits_3() {
    let out = covcert().args(["prove", "--n", "2", "--odlyzko", "/nonexistent/odlyzko.csv"]).output().unwrap();
    assert_eq!(out.status.code(), Some(3));
    let dir = tempfile::tempdir().unwrap();
    let out = covcert().args(["prove", "--n", "2"]).env("COVCERT_DATA_DIR", dir.path()).output().unwrap();
    assert_eq!(out.status.code(), Some(3));
}

#[test]
fn failed_step_exits_2() {
    let dir = tempfile::tempdir().unwrap();
    let table = dir.path().join("odlyzko.csv");
    std::fs::write(&table, "A,E\n21.512,6.0001\n").unwrap();
    let out = covcert()
        .args(["prove", "--n", "5", "--format", "json", "--odlyzko"])
        .arg(&table)
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    let step = v["steps"].as_array().unwrap().iter().find(|s| s["id"] == "odlyzko_pair").unwrap();
    assert_eq!(step["verdict"], "Failed");
}

#[test]
fn optimize_cases() {
    let out = covcert().args(["optimize", "--case", "n3"]).output().unwrap();
    assert_eq!(out.status.code(), Some(0));
    let s = String::from_utf8_lossy(&out.stdout);
    assert!(s.contains("(13.047, 3.8667)"));
    assert!(s.contains("3.30724141644"));
    let out = covcert().args(["optimize", "--case", "n2", "--precision", "128"]).output().unwrap();
    let s = String::from_utf8_lossy(&out.stdout);
    assert!(s.contains("(21.512, 6.0001)") && s.contains("t         1.2"));
}

#[test]
fn field_ops() {
    let out = covcert().args(["field", "2.2.5.1", "--op", "splitting"]).output().unwrap();
    assert_eq!(out.status.code(), Some(0));
    let s = String::from_utf8_lossy(&out.stdout);
    assert!(s.contains("p = 2: Inert") && s.contains("q = [4]"));
    let out = covcert().args(["field", "3.3.49.1", "--op", "units"]).output().unwrap();
    assert!(String::from_utf8_lossy(&out.stdout).contains("[U+ : U^2] = 1"));
    let out = covcert().args(["field", "2.2.8.1", "--op", "zeta"]).output().unwrap();
    assert!(String::from_utf8_lossy(&out.stdout).contains("zeta_K(2) = [1.43497143373"));
    let out = covcert().args(["field", "9.9.9.9", "--op", "zeta"]).output().unwrap();
    assert_eq!(out.status.code(), Some(2));
}
