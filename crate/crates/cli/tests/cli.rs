//! End-to-end tests of the `qsynth4` binary: exit codes, report formats,
//! PLA ingestion and the benchmark table.

use std::path::Path;
use std::process::{Command, Output};

fn qsynth4<I, S>(args: I) -> Command
where
    I: IntoIterator<Item = S>,
    S: AsRef<std::ffi::OsStr>,
{
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_qsynth4"));
    cmd.args(args);
    cmd
}

fn run<I, S>(args: I) -> Output
where
    I: IntoIterator<Item = S>,
    S: AsRef<std::ffi::OsStr>,
{
    qsynth4(args).output().unwrap()
}

fn stdout(out: &Output) -> String {
    String::from_utf8_lossy(&out.stdout).to_string()
}

fn stderr(out: &Output) -> String {
    String::from_utf8_lossy(&out.stderr).to_string()
}

#[test]
fn tt_writes_a_parsable_table() {
    let out = run(["tt", "sum2"]);
    assert_eq!(out.status.code(), Some(0));
    let table = qsynth4_core::func::parse_qtt(&stdout(&out)).unwrap();
    assert_eq!(table.input_count(), 2);
    assert_eq!(table.name(), Some("sum2"));
}

#[test]
fn tt_unknown_generator_is_an_input_error() {
    let out = run(["tt", "frobnicate"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("unknown generator"));
}

#[test]
fn synth_stdout_netlist_with_report_on_stderr() {
    let dir = tempfile::tempdir().unwrap();
    let table = dir.path().join("sum2.qtt");
    let tt = run(["tt", "sum2"]);
    std::fs::write(&table, &tt.stdout).unwrap();

    let out = qsynth4([] as [&str; 0])
        .args(["synth"])
        .arg(&table)
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
    let circuit = qsynth4_core::circuit::parse(&stdout(&out)).unwrap();
    assert_eq!(circuit.primary_inputs().len(), 2);
    assert!(stderr(&out).contains("max ancilla"));
}

#[test]
fn synth_json_report_carries_gate_counts() {
    let dir = tempfile::tempdir().unwrap();
    let table = dir.path().join("mul2.qtt");
    std::fs::write(&table, run(["tt", "mul2"]).stdout).unwrap();
    let netlist = dir.path().join("mul2.qnl");

    let out = qsynth4([] as [&str; 0])
        .args(["synth"])
        .arg(&table)
        .arg("-o")
        .arg(&netlist)
        .args(["--lower", "--report", "json"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0), "{}", stderr(&out));
    let report: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(report["inputs"], 2);
    assert_eq!(report["max_ancilla"], 18);
    assert!(report["macro_level"]["gate_counts"].is_object());
    assert!(report["lowered"]["cost"].is_number());

    // The written netlist is the lowered one: primitives plus the kept
    // Max/Min/Toffoli macros, no gqg/c2cs/feynman/add lines left.
    let lowered = qsynth4_core::circuit::parse(&std::fs::read_to_string(&netlist).unwrap()).unwrap();
    assert!(lowered.gates().iter().all(|g| matches!(
        g.kind(),
        qsynth4_core::GateKind::Ms
            | qsynth4_core::GateKind::Shift
            | qsynth4_core::GateKind::Max
            | qsynth4_core::GateKind::Min
            | qsynth4_core::GateKind::Toffoli
    )));
}

#[test]
fn verify_arity_mismatch_is_an_input_error() {
    let dir = tempfile::tempdir().unwrap();
    let sum2 = dir.path().join("sum2.qtt");
    std::fs::write(&sum2, run(["tt", "sum2"]).stdout).unwrap();
    let halfadd_table = dir.path().join("halfadd.qtt");
    std::fs::write(&halfadd_table, run(["tt", "halfadd"]).stdout).unwrap();
    let netlist = dir.path().join("sum2.qnl");
    let out = qsynth4([] as [&str; 0])
        .args(["synth"])
        .arg(&sum2)
        .arg("-o")
        .arg(&netlist)
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));

    let out = qsynth4([] as [&str; 0])
        .args(["verify"])
        .arg(&netlist)
        .arg(&halfadd_table)
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("arity mismatch"));
}

#[test]
fn ingest_pla_packs_and_reports_errors() {
    let dir = tempfile::tempdir().unwrap();
    let pla = dir.path().join("xor2.pla");
    std::fs::write(&pla, ".i 2\n.o 1\n01 1\n10 1\n.e\n").unwrap();
    let out = qsynth4([] as [&str; 0])
        .args(["ingest-pla"])
        .arg(&pla)
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
    let f = qsynth4_core::func::parse_qtt(&stdout(&out)).unwrap();
    assert_eq!(f.input_count(), 1);
    assert_eq!(f.name(), Some("xor2"));

    let bad = dir.path().join("bad.pla");
    std::fs::write(&bad, ".i 2\n.o 1\n-1 1\n.e\n").unwrap();
    let out = qsynth4([] as [&str; 0])
        .args(["ingest-pla"])
        .arg(&bad)
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("don't-care"));

    let out = qsynth4([] as [&str; 0])
        .args(["ingest-pla"])
        .arg(dir.path().join("missing.pla"))
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn bench_builtins_verify_and_show_references() {
    let out = run(["bench", "halfadd", "fulladd"]);
    assert_eq!(out.status.code(), Some(0), "{}", stderr(&out));
    let text = stdout(&out);
    assert!(text.contains("halfadd"));
    for needle in ["46", "114", "128", "304", "verified"] {
        assert!(text.contains(needle), "missing {needle}:\n{text}");
    }
}

#[test]
fn bench_missing_pla_dir_marks_rows_skipped() {
    let dir = tempfile::tempdir().unwrap();
    let out = qsynth4([] as [&str; 0])
        .args(["bench", "xor5", "sum2", "--dir"])
        .arg(dir.path().join("nowhere"))
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0), "skipped rows are not fatal");
    let text = stdout(&out);
    assert!(text.contains("skipped"));
    assert!(text.contains("verified"));
}

#[test]
fn bench_shipped_pla_files_verify() {
    // The repo ships the PLA benchmark set; resolve it relative to the
    // workspace so the test runs from any cwd.
    let dir = Path::new(env!("CARGO_MANIFEST_DIR")).join("../../benchmarks");
    let out = qsynth4([] as [&str; 0])
        .args(["bench", "xor5", "ham3", "rd53", "--dir"])
        .arg(&dir)
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0), "{}", stderr(&out));
    let text = stdout(&out);
    assert_eq!(text.matches("verified").count(), 3, "{text}");
}

#[test]
fn bench_unknown_name_is_an_input_error() {
    let out = run(["bench", "nonesuch"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("unknown benchmark"));
}

#[test]
fn synth_report_counts_minterms_by_level() {
    let dir = tempfile::tempdir().unwrap();
    let table = dir.path().join("table4.qtt");
    std::fs::write(
        &table,
        ".i 2\n.o 1\n.name table4\n.ordered\n0\n3\n1\n2\n3\n3\n2\n0\n1\n2\n1\n3\n2\n1\n3\n2\n",
    )
    .unwrap();
    let out = qsynth4([] as [&str; 0])
        .args(["synth"])
        .arg(&table)
        .arg("-o")
        .arg(dir.path().join("table4.qnl"))
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0), "{}", stderr(&out));
    let report = stdout(&out);
    assert!(report.contains("14 (4, 5, 5)"), "{report}");
    assert!(report.contains("max ancilla       : 28"), "{report}");
}
