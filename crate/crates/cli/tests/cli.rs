use assert_cmd::Command;
use predicates::prelude::*;
use tempfile::TempDir;

fn tyz(cache: &TempDir) -> Command {
    let mut cmd = Command::cargo_bin("tyz").unwrap();
    cmd.env("TYZ_CACHE_DIR", cache.path());
    cmd
}

fn cache() -> TempDir {
    tempfile::tempdir().unwrap()
}

#[test]
fn z_of_double_two_cycle() {
    let c = cache();
    tyz(&c)
        .args(["z", "--graph", "0 2;2 0"])
        .assert()
        .success()
        .stdout(predicate::str::contains("3/8"))
        .stdout(predicate::str::contains("strongly_connected"));
    tyz(&c)
        .args(["z", "--graph", "0 2;2 0", "--format", "json"])
        .assert()
        .success()
        .stdout(predicate::str::contains("\"z\": \"3/8\""))
        .stdout(predicate::str::contains("\"aut_order\": 8"));
}

#[test]
fn bad_input_exits_2() {
    let c = cache();
    tyz(&c)
        .args(["z", "--graph", "0 2;2"])
        .assert()
        .code(2)
        .stderr(predicate::str::contains("row 2"));
    tyz(&c).args(["z", "--graph", "0 1;1 0"]).assert().code(2);
    tyz(&c).args(["verify", "nonsense"]).assert().code(2);
    tyz(&c).args(["frobnicate"]).assert().code(2);
    tyz(&c).args(["classify", "--weight", "9"]).assert().code(2);
}

#[test]
fn semistable_needs_flag() {
    let c = cache();
    tyz(&c)
        .args(["z", "--graph", "1 0;1 1"])
        .assert()
        .code(2)
        .stderr(predicate::str::contains("--semistable"));
    tyz(&c)
        .args(["z", "--graph", "1 0;1 1", "--semistable"])
        .assert()
        .success()
        .stdout(predicate::str::contains("0/1"));
}

#[test]
fn classify_csv() {
    let c = cache();
    tyz(&c)
        .args(["classify", "--weight", "4", "--format", "csv"])
        .assert()
        .success()
        .stdout("weight,total,connected,strongly_connected,lambda\n4,82,61,51,45\n");
}

#[test]
fn weight_five_is_gated() {
    let c = cache();
    tyz(&c)
        .args(["classify", "--weight", "5"])
        .assert()
        .code(2)
        .stderr(predicate::str::contains("--allow-slow"));
    tyz(&c)
        .args([
            "classify",
            "--weight",
            "5",
            "--allow-slow",
            "--format",
            "csv",
        ])
        .assert()
        .success()
        .stdout(predicate::str::contains("5,589,474,373,316"));
}

#[test]
fn enumerate_json_is_a_readable_catalog() {
    let c = cache();
    let out = c.path().join("w3.jsonl");
    tyz(&c)
        .args(["enumerate", "--weight", "3", "--format", "json", "--out"])
        .arg(&out)
        .assert()
        .success()
        .stdout("");
    let records = tyz_core::catalog::read_catalog(&out).unwrap();
    assert_eq!(records.len(), 15);
    let first = std::fs::read_to_string(&out).unwrap();
    assert!(first.lines().next().unwrap().starts_with(
        "{\"vertices\":1,\"adjacency\":[[4]],\"weight\":3,\"edges\":4,\"class\":\"strongly_connected\",\"det_A_minus_I\":3"
    ));
    assert!(c.path().join("stable-j3-s6.jsonl").exists());
}

#[test]
fn expansion_lists_zero_terms() {
    let c = cache();
    tyz(&c)
        .args(["expansion", "--weight", "3"])
        .assert()
        .success()
        .stdout(predicate::str::contains("  0/1\n"))
        .stdout(predicate::str::contains("15 graphs, 13 nonzero"));
}

#[test]
fn verify_exit_status() {
    let c = cache();
    tyz(&c)
        .args(["verify", "weight4"])
        .assert()
        .success()
        .stdout(predicate::str::contains("52 passed, 0 failed"));
    tyz(&c)
        .args([
            "verify",
            "bernoulli",
            "--max-weight",
            "3",
            "--format",
            "csv",
        ])
        .assert()
        .success()
        .stdout(predicate::str::contains("bernoulli,k=3,0/1,0/1,pass"));
    // the printed bipartite formula has the wrong sign for odd m + n
    tyz(&c)
        .args(["verify", "families"])
        .assert()
        .code(1)
        .stdout(predicate::str::contains("K_{2,3}"))
        .stdout(predicate::str::contains("2 failed"));
    tyz(&c)
        .args(["verify", "table2", "--max-weight", "5"])
        .assert()
        .code(2);
}

#[test]
fn verify_output_is_deterministic() {
    let c = cache();
    let run = || {
        tyz(&c)
            .args(["verify", "oracle", "--max-weight", "3", "--format", "json"])
            .output()
            .unwrap()
            .stdout
    };
    let a = run();
    assert!(!a.is_empty());
    assert_eq!(a, run());
}

#[test]
fn euler_and_charpoly() {
    let c = cache();
    tyz(&c)
        .args(["euler", "--graph", "3", "--format", "json"])
        .assert()
        .success()
        .stdout(predicate::str::contains("\"euler_tours\": 2"));
    tyz(&c)
        .args([
            "charpoly",
            "--graph",
            "1 1 1;1 1 1;1 1 1",
            "--format",
            "csv",
        ])
        .assert()
        .success()
        .stdout("term,coefficient\nlambda^3,1\nlambda^2,-3\nlambda^1,0\nlambda^0,0\n");
}

#[test]
fn families_command() {
    let c = cache();
    tyz(&c)
        .args(["families", "--name", "D", "--n", "3", "--format", "csv"])
        .assert()
        .success()
        .stdout(predicate::str::contains("D_3"))
        .stdout(predicate::str::contains("1/2,1/2,true"));
    tyz(&c)
        .args(["families", "--name", "Kmn", "--n", "3"])
        .assert()
        .code(2)
        .stderr(predicate::str::contains("missing parameter m"));
}
