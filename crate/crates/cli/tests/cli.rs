use std::process::{Command, Output};

fn entwine(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_entwine")).args(args).output().expect("run entwine")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn gamma_one_is_a_semi_entwining() {
    let o = entwine(&["verify", "gamma_q@Kx2-1,q=1", "semi-entwining"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).starts_with("semi-entwining: PASS\n"));
}

#[test]
fn corrupted_operator_fails_braid_with_a_witness() {
    let o = entwine(&["verify", "corrupt@[psi_A@Kx2-1],row=0,col=1,value=3", "braid"]);
    assert_eq!(o.status.code(), Some(1));
    let text = stdout(&o);
    assert!(text.contains("FAIL braid at ("), "{text}");
    assert!(text.contains("residual ["), "{text}");
}

#[test]
fn misspelled_check_is_an_input_error() {
    let o = entwine(&["verify", "gamma_q@Kx2-1,q=1", "semi-entwinig"]);
    assert_eq!(o.status.code(), Some(2));
    let err = String::from_utf8(o.stderr).unwrap();
    assert!(err.contains("semi-entwining"), "available checks should be listed: {err}");
}

#[test]
fn unknown_objects_and_bad_fields_are_input_errors() {
    assert_eq!(entwine(&["verify", "nope", "algebra"]).status.code(), Some(2));
    assert_eq!(entwine(&["--field", "fp:8", "list"]).status.code(), Some(2));
    assert_eq!(entwine(&["verify", "twist@K", "braid"]).status.code(), Some(2));
}

#[test]
fn json_report_is_machine_readable() {
    let o = entwine(&["--json", "verify", "gamma_q@Kx2-1,q=1", "semi-entwining"]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["passed"], true);
    assert_eq!(v["suite"], "semi-entwining");
}

#[test]
fn failed_precondition_prints_the_inner_report() {
    let o = entwine(&["construct", "biproduct@[gamma_q@Kx2-1,q=1],KZ2,integral=g"]);
    assert_eq!(o.status.code(), Some(1));
    let text = stdout(&o);
    assert!(text.contains("integral"), "{text}");
    assert!(text.contains("FAIL"), "{text}");
}

#[test]
fn constructed_objects_round_trip_through_a_file() {
    let o = entwine(&["construct", "gamma_q@M2,q=2", "--name", "g2"]);
    assert_eq!(o.status.code(), Some(0));
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("g2.json");
    std::fs::write(&path, &o.stdout).unwrap();
    let p = path.to_str().unwrap();
    for check in ["semi-entwining", "algebra-factorization", "tambara-relations"] {
        let direct = entwine(&["verify", "gamma_q@M2,q=2", check]);
        let loaded = entwine(&["verify", "--file", p, "g2", check]);
        assert_eq!(direct.status.code(), loaded.status.code(), "{check}");
        assert_eq!(stdout(&direct), stdout(&loaded), "{check}");
    }
}

#[test]
fn r_rs_emits_its_matrix() {
    let o = entwine(&["construct", "R_rs@Kx2-1,r=1,s=1"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    let map = &v["objects"]["constructed"]["map"];
    assert_eq!(map.as_array().unwrap().len(), 4);
}

#[test]
fn suite_filters_by_tag() {
    let o = entwine(&["suite", "--only", "type2"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert!(text.contains("type2-commutative: PASS"), "{text}");
    assert!(text.contains("type2-twisted: PASS"), "{text}");
    assert!(text.ends_with("2 rows, 2 passed, 0 failed\n"), "{text}");
}

#[test]
fn suite_output_does_not_depend_on_thread_count() {
    let grid = tempfile::NamedTempFile::new().unwrap();
    std::fs::write(grid.path(), r#"{"algebras": ["K", "Kx2-1", "M2"], "coalgebras": ["grouplike2"], "random": 3}"#)
        .unwrap();
    let g = grid.path().to_str().unwrap();
    let run = |jobs: &str| entwine(&["--jobs", jobs, "suite", "--grid", g, "--only", "entwine", "--only", "10"]);
    let one = run("1");
    let four = run("4");
    assert_eq!(one.status.code(), Some(0), "{}", stdout(&one));
    assert_eq!(stdout(&one), stdout(&four));
    assert!(stdout(&one).contains("field-independence: PASS"));
}

#[test]
fn list_names_objects_constructions_and_rows() {
    let o = entwine(&["list"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    for needle in ["M2 (algebra)", "gamma_q@ALGEBRA,q=S", "[9] quadratic-table", "[10] field-independence"] {
        assert!(text.contains(needle), "missing {needle}");
    }
}
