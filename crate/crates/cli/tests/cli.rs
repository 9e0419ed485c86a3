use std::path::PathBuf;
use std::process::{Command, Output};

fn dicodim(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_dicodim"))
        .args(args)
        .env_remove("DICODIM_MAX_FREE_DIM")
        .env_remove("DICODIM_MAX_ROWS")
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn golden(name: &str) -> String {
    let path = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/golden").join(name);
    std::fs::read_to_string(path).unwrap()
}

fn scratch(name: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("dicodim-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    dir.join(name)
}

#[test]
fn golden_outputs() {
    let cases: &[(&[&str], &str)] = &[
        (&["codim", "-v", "zoo:perm", "-n", "5"], "codim_perm.txt"),
        (&["verify", "--eq2", "-v", "zoo:com", "--n", "4", "--json"], "eq2_com.json"),
        (&["zoo", "list"], "zoo_list.txt"),
        (&["theorem4", "-a", "zoo:cyclic-leibniz", "-n", "4", "--csv"], "theorem4_cyclic.csv"),
        (&["pre", "-v", "zoo:com"], "pre_com.txt"),
    ];
    for (args, file) in cases {
        let o = dicodim(args);
        assert!(o.status.success(), "{args:?}");
        assert_eq!(stdout(&o), golden(file), "{args:?}");
    }
}

#[test]
fn json_is_byte_identical_across_runs() {
    let args = ["var-codim", "-a", "zoo:hemi-adjoint", "-n", "3", "--json"];
    let a = dicodim(&args);
    let b = dicodim(&args);
    assert_eq!(a.stdout, b.stdout);
    let v: serde_json::Value = serde_json::from_slice(&a.stdout).unwrap();
    assert_eq!(v["command"], "var-codim");
    assert_eq!(v["status"], "ok");
    assert!(v["results"]["3"]["var_codim"].is_u64());
}

#[test]
fn translated_presentations_feed_back_into_codim() {
    let di = scratch("di-lie.var");
    assert!(dicodim(&["di", "-v", "zoo:lie", "-o", di.to_str().unwrap()]).status.success());
    let o = dicodim(&["codim", "-v", di.to_str().unwrap(), "-n", "4", "--csv"]);
    assert!(o.status.success());
    let last: Vec<String> = stdout(&o).lines().skip(1).map(|l| l.rsplit(',').next().unwrap().to_string()).collect();
    assert_eq!(last, ["1", "2", "6", "24"]);
}

#[test]
fn hat_output_is_a_lie_algebra() {
    let out = scratch("hat.alg");
    let o = dicodim(&["hat", "-a", "zoo:hemi-adjoint", "-o", out.to_str().unwrap()]);
    assert!(o.status.success());
    assert!(stdout(&o).contains("monomorphism  true"));
    let c = dicodim(&["check", "-a", out.to_str().unwrap(), "-v", "zoo:lie"]);
    assert_eq!(c.status.code(), Some(0), "{}", stdout(&c));
}

#[test]
fn exit_codes() {
    let failed = dicodim(&["check", "-a", "zoo:lie2", "-v", "zoo:com"]);
    assert_eq!(failed.status.code(), Some(1));
    assert!(stdout(&failed).ends_with("FAILED\n"));

    let bad = scratch("bad.var");
    std::fs::write(&bad, "ops: *\nidentity (x1 *").unwrap();
    let parse = dicodim(&["codim", "-v", bad.to_str().unwrap(), "-n", "3"]);
    assert_eq!(parse.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&parse.stderr).contains("2:15"));

    let capped = dicodim(&["codim", "-v", "zoo:assoc", "-n", "6", "--max-free-dim", "1000"]);
    assert_eq!(capped.status.code(), Some(3));

    let env_capped = Command::new(env!("CARGO_BIN_EXE_dicodim"))
        .args(["codim", "-v", "zoo:assoc", "-n", "6"])
        .env("DICODIM_MAX_FREE_DIM", "1000")
        .output()
        .unwrap();
    assert_eq!(env_capped.status.code(), Some(3));

    assert_eq!(dicodim(&["codim", "-v", "zoo:nothing", "-n", "2"]).status.code(), Some(2));
    assert_eq!(dicodim(&["theorem4", "-a", "zoo:lie2", "-n", "3"]).status.code(), Some(2));
}

#[test]
fn verify_modes() {
    for args in [
        &["verify", "--lemma3", "--n", "4"][..],
        &["verify", "--zn-dim", "--n", "5"],
        &["verify", "--lemma1", "--n", "3"],
    ] {
        let o = dicodim(args);
        assert_eq!(o.status.code(), Some(0), "{args:?}: {}", stdout(&o));
        assert!(!stdout(&o).contains("false"));
    }
}
