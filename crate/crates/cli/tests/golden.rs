//! Golden outputs of the `hbcells` binary. Run with `UPDATE_GOLDEN=1` to
//! rewrite the stored files after an intentional change.

use std::path::PathBuf;
use std::process::Command;

fn hbcells(args: &[&str]) -> (String, String, i32) {
    let out = Command::new(env!("CARGO_BIN_EXE_hbcells")).args(args).output().expect("run hbcells");
    (
        String::from_utf8(out.stdout).unwrap(),
        String::from_utf8(out.stderr).unwrap(),
        out.status.code().expect("exit code"),
    )
}

fn golden(name: &str, args: &[&str], code: i32) {
    let (stdout, stderr, got) = hbcells(args);
    assert_eq!(got, code, "{name}: exit code {got}, stderr: {stderr}");
    let path = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/golden").join(name);
    if std::env::var_os("UPDATE_GOLDEN").is_some_and(|v| v == "1") {
        std::fs::create_dir_all(path.parent().unwrap()).unwrap();
        std::fs::write(&path, &stdout).unwrap();
        return;
    }
    let want = std::fs::read_to_string(&path)
        .unwrap_or_else(|e| panic!("{}: {e}; run with UPDATE_GOLDEN=1", path.display()));
    assert_eq!(stdout, want, "{name} differs from the stored output");
}

#[test]
fn staircase_reports() {
    golden("staircase_1_1_3.txt", &["staircase", "--m", "1,1,3"], 0);
    golden("staircase_2_2.txt", &["staircase", "--m", "2,2"], 0);
    golden("staircase_1.json", &["staircase", "--m", "1", "--json"], 0);
}

#[test]
fn resultant_reports() {
    golden("resultant_3_3_ab.txt", &["resultant", "--m", "3,3", "--restrict", "a[1,2,2],a[2,1,2]"], 0);
    golden("resultant_2_2_2.txt", &["resultant", "--m", "2,2,2"], 0);
    golden("resultant_1.json", &["resultant", "--m", "1", "--json"], 0);
}

#[test]
fn cell_reports() {
    golden("cell_1_2.txt", &["cell", "--m", "1,2", "--cochar", "1,-1"], 0);
    golden("cell_3_7_13.txt", &["cell", "--m", "3,7,13", "--cochar", "5,1"], 0);
    golden("cell_1_1.json", &["cell", "--m", "1,1", "--cochar", "0,1", "--json"], 0);
}

#[test]
fn verify_reports() {
    golden("verify_2_2.txt", &["verify", "--m", "2,2", "--cochar", "-7,-8", "--samples", "25", "--seed", "1"], 0);
    golden("verify_1_1_3.json", &["verify", "--m", "1,1,3", "--cochar", "-3,2", "--samples", "25", "--seed", "1", "--json"], 0);
    // no kept parameters: the origin alone
    golden("verify_origin.txt", &["verify", "--m", "1", "--cochar", "-1,-1", "--samples", "1", "--seed", "7"], 0);
}

#[test]
fn tangent_reports() {
    golden("tangent_1_1_3.txt", &["tangent", "--m", "1,1,3"], 0);
    golden("tangent_3_3.txt", &["tangent", "--m", "3,3"], 0);
    golden("tangent_1.json", &["tangent", "--m", "1", "--json"], 0);
}

#[test]
fn other_commands() {
    golden("matrix_1_1_3.txt", &["matrix", "--m", "1,1,3", "--cochar", "-3,2"], 0);
    golden("limit_3_7_13.txt", &["limit", "--m", "3,7,13", "--cochar", "4,1", "--assign", concat!(env!("CARGO_MANIFEST_DIR"), "/tests/data/opposite.json")], 0);
    golden("specialize_2_2.txt", &["specialize", "--m", "2,2", "--assign", concat!(env!("CARGO_MANIFEST_DIR"), "/tests/data/ab_one.json")], 0);
}

#[test]
fn json_output_is_deterministic() {
    let args = ["verify", "--m", "1,2,2", "--cochar", "-3,2", "--samples", "6", "--seed", "42", "--json"];
    assert_eq!(hbcells(&args).0, hbcells(&args).0);
}

#[test]
fn exit_codes() {
    assert_eq!(hbcells(&["staircase", "--m", "3,1"]).2, 2);
    assert_eq!(hbcells(&["staircase", "--m", "1,x"]).2, 2);
    assert_eq!(hbcells(&["staircase"]).2, 2);
    assert_eq!(hbcells(&["cell", "--m", "1", "--cochar", "0,0"]).2, 2);
    assert_eq!(hbcells(&["cell", "--m", "1"]).2, 2);
    assert_eq!(hbcells(&["verify", "--m", "1", "--cochar", "1,1", "--samples", "0"]).2, 2);
    assert_eq!(hbcells(&["specialize", "--m", "1", "--assign", "/nonexistent.json"]).2, 2);
    assert_eq!(hbcells(&["bogus"]).2, 2);
    // the minus construction on a plus cell changes the colength
    assert_eq!(hbcells(&["verify", "--m", "1,2", "--cochar", "-3,2", "--samples", "3", "--seed", "1", "--pi-minus"]).2, 1);
}
