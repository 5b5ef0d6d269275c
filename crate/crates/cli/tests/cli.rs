use std::process::{Command, Output};

use serde::de::DeserializeOwned;
use serde::Serialize;
use takahashi::claims::ClaimStatus;
use takahashi_cli::report::*;

fn takahashi(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_takahashi")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn ok(args: &[&str]) -> String {
    let o = takahashi(args);
    assert_eq!(o.status.code(), Some(0), "{args:?}: {}", String::from_utf8_lossy(&o.stderr));
    stdout(&o)
}

fn exit_code(args: &[&str]) -> i32 {
    takahashi(args).status.code().unwrap()
}

/// Parse, check it re-serializes to the same JSON value, return it.
fn round_trip<T: Serialize + DeserializeOwned + PartialEq + std::fmt::Debug>(args: &[&str]) -> T {
    let mut full = vec!["--json"];
    full.extend_from_slice(args);
    let text = ok(&full);
    let parsed: T = serde_json::from_str(&text).unwrap();
    let again: T = serde_json::from_str(&serde_json::to_string(&parsed).unwrap()).unwrap();
    assert_eq!(parsed, again);
    let raw: serde_json::Value = serde_json::from_str(&text).unwrap();
    assert_eq!(raw, serde_json::to_value(&parsed).unwrap(), "fields lost in {args:?}");
    parsed
}

#[test]
fn h1_examples() {
    let r: H1Report = round_trip(&["h1", "3", "3", "-3"]);
    assert_eq!(r.order, "1296");
    assert_eq!(r.torsion, vec!["36", "36"]);
    let r: H1Report = round_trip(&["h1", "4", "3/2", "1"]);
    assert_eq!((r.order.as_str(), r.free_rank), ("15", 0));
    let r: H1Report = round_trip(&["h1", "1", "1/2", "1/5"]);
    assert!(r.torsion.is_empty());
    assert_eq!((r.order.as_str(), r.free_rank), ("1", 0));
    let r: H1Report = round_trip(&["h1", "2", "0", "inf"]);
    assert_eq!(r.order, "infinite");
    assert!(ok(&["h1", "3", "3", "-3"]).contains("1296"));
}

#[test]
fn h1_json_field_names() {
    let v: serde_json::Value = serde_json::from_str(&ok(&["--json", "h1", "3", "3", "-3"])).unwrap();
    for key in ["n", "pq", "rs", "torsion", "freeRank", "order"] {
        assert!(v.get(key).is_some(), "missing {key}");
    }
}

#[test]
fn presentation_examples() {
    let r: PresentationReport = round_trip(&["presentation", "1", "1", "1"]);
    assert_eq!((r.generators.len(), r.relators.len()), (2, 2));
    let r: PresentationReport = round_trip(&["presentation", "3", "1", "-1", "--cyclic"]);
    assert_eq!(r.generators, vec!["z1", "z2", "z3"]);
    assert_eq!(r.relators[0], "z1 z2^-1 z1 z3^-1 z1");
    let r: PresentationReport = round_trip(&["presentation", "2", "0/1", "0/1"]);
    assert_eq!(r.relators, vec!["x1 x3^-1", "x2 x4^-1", "x3 x1^-1", "x4 x2^-1"]);
    let text = ok(&["presentation", "2", "3", "-3"]);
    assert!(text.contains("x1 x2^-3 x3^-1"), "{text}");
}

#[test]
fn branch_knot_examples() {
    let r: BranchKnotReport = round_trip(&["branch-knot", "1", "-1"]);
    assert_eq!(r.knot, KnotReport { alpha: 5, beta: 3 });
    assert!(r.note.contains("figure-eight"));
    assert!(r.alternate_equivalent);
    assert_eq!(r.conway_form, vec![-2, -2]);
    let r: BranchKnotReport = round_trip(&["branch-knot", "1", "1"]);
    assert_eq!(r.knot, KnotReport { alpha: 3, beta: 2 });
    assert!(r.note.contains("trefoil"));
    let r: BranchKnotReport = round_trip(&["branch-knot", "2", "0"]);
    assert_eq!(r.knot, KnotReport { alpha: 1, beta: 0 });
    assert!(r.note.contains("unknot"));
}

#[test]
fn cover_order_examples() {
    let r: CoverReport = round_trip(&["cover-order", "5", "3", "3"]);
    assert_eq!((r.order.as_str(), r.resultant.as_str()), ("16", "16"));
    let r: CoverReport = round_trip(&["cover-order", "3", "1", "2"]);
    assert_eq!(r.order, "3");
    let r: CoverReport = round_trip(&["cover-order", "3", "1", "6"]);
    assert_eq!((r.order.as_str(), r.free_rank), ("infinite", 2));
}

#[test]
fn two_bridge_equiv() {
    let r: EquivalenceReport = round_trip(&["two-bridge-equiv", "5", "2", "5", "3"]);
    assert!(r.equivalent);
    let r: EquivalenceReport = round_trip(&["two-bridge-equiv", "7", "1", "7", "3"]);
    assert!(!r.equivalent);
    let r: EquivalenceReport = round_trip(&["two-bridge-equiv", "3", "1", "3", "2"]);
    assert!(!r.equivalent);
    let r: EquivalenceReport = round_trip(&["two-bridge-equiv", "3", "1", "3", "2", "--mirror"]);
    assert!(r.equivalent && r.allow_mirror);
}

#[test]
fn braid_alexander_examples() {
    assert_eq!(ok(&["braid-alexander", "1 1 1 2"]).trim(), "t^2 - t + 1");
    assert_eq!(ok(&["braid-alexander", "1 -2 1 -2"]).trim(), "t^2 - 3t + 1");
    assert_eq!(ok(&["braid-alexander", "1 2"]).trim(), "1");
    let r: BraidAlexanderReport = round_trip(&["braid-alexander", "-1 2 -1 2"]);
    assert_eq!(r.coefficients, vec!["1", "-3", "1"]);
}

#[test]
fn usage_errors_exit_2() {
    assert_eq!(exit_code(&["presentation", "2", "1", "2/3", "--cyclic"]), 2);
    assert_eq!(exit_code(&["cover-order", "4", "1", "2"]), 2);
    assert_eq!(exit_code(&["cover-order", "6", "3", "2"]), 2);
    assert_eq!(exit_code(&["h1", "0", "1", "1"]), 2);
    assert_eq!(exit_code(&["h1", "2", "0/0", "1"]), 2);
    assert_eq!(exit_code(&["h1", "2", "x", "1"]), 2);
    assert_eq!(exit_code(&["nonsense"]), 2);
    assert_eq!(exit_code(&[]), 2);
    assert_eq!(exit_code(&["braid-alexander", "1 3"]), 2);
    let o = takahashi(&["braid-alexander", "1 1"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("cycle type"));
}

#[test]
fn verify_paper_passes_and_is_deterministic() {
    let first = takahashi(&["--json", "verify-paper"]);
    let second = takahashi(&["--json", "verify-paper"]);
    assert_eq!(first.status.code(), Some(0));
    assert_eq!(first.stdout, second.stdout);
    let r: VerifyReport = round_trip(&["verify-paper"]);
    assert!(r.all_pass);
    assert_eq!(r.claims.len(), 9);
    for c in &r.claims {
        let expected = if c.claim_id == "R1-rational-135" { ClaimStatus::UnverifiedByDesign } else { ClaimStatus::Pass };
        assert_eq!(c.status, expected, "{}", c.claim_id);
    }
    let v: serde_json::Value = serde_json::from_slice(&first.stdout).unwrap();
    assert_eq!(v["claims"][0]["status"], "pass");
    assert!(v["claims"][0].get("claimId").is_some());
}

#[test]
fn conjecture_scan_table() {
    let r: ScanReport = round_trip(&["conjecture-scan", "--grid-max", "1", "--max-n", "3"]);
    // slots range over 0, 1, -1, inf
    assert_eq!(r.rows.len(), 2 * 4 * 4);
    assert!(r.rows.iter().any(|row| row.n == 2 && row.pq == "1/-1" && row.rs == "1" && row.order == "5"));
    assert_eq!(exit_code(&["conjecture-scan", "--grid-max", "-1"]), 2);
}
