use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_totient-census"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

#[test]
fn census_csv_matches_reference_rows() {
    let out = run(&["census", "--checkpoints", "1002,10002", "--format", "csv"]);
    assert!(out.status.success());
    assert_eq!(
        stdout(&out),
        "x,pi,t0,t2,t4,t2_over_pi,t4_over_t2\n\
         1002,168,158,87,5,0.517857,0.057471\n\
         10002,1229,1867,625,8,0.508543,0.012800\n"
    );
}

#[derive(Debug, serde::Deserialize, PartialEq)]
struct Row {
    x: u64,
    pi: u64,
    t0: u64,
    t2: u64,
    t4: u64,
    t2_over_pi: String,
    t4_over_t2: String,
}

#[test]
fn census_csv_round_trips() {
    let out = run(&["census", "--format", "csv"]);
    assert!(out.status.success());
    let text = stdout(&out);
    let mut reader = csv::Reader::from_reader(text.as_bytes());
    let rows: Vec<Row> = reader.deserialize().collect::<Result<_, _>>().unwrap();
    assert_eq!(rows.len(), 4);

    let mut writer = csv::Writer::from_writer(Vec::new());
    writer
        .write_record(["x", "pi", "t0", "t2", "t4", "t2_over_pi", "t4_over_t2"])
        .unwrap();
    for r in &rows {
        writer
            .write_record([
                r.x.to_string(),
                r.pi.to_string(),
                r.t0.to_string(),
                r.t2.to_string(),
                r.t4.to_string(),
                r.t2_over_pi.clone(),
                r.t4_over_t2.clone(),
            ])
            .unwrap();
    }
    assert_eq!(String::from_utf8(writer.into_inner().unwrap()).unwrap(), text);
    let last = &rows[3];
    assert_eq!((last.x, last.pi, last.t2, last.t4), (1_000_002, 78_498, 39_400, 20));
    assert_eq!(last.t2_over_pi, "0.501923");
}

#[test]
fn census_json_lines() {
    let out = run(&["census", "--checkpoints", "6,1002", "--format", "json"]);
    assert!(out.status.success());
    let rows: Vec<serde_json::Value> = stdout(&out)
        .lines()
        .map(|l| serde_json::from_str(l).unwrap())
        .collect();
    assert_eq!(rows.len(), 2);
    assert_eq!(rows[0]["t4"], 1);
    assert_eq!(rows[0]["ratio_t4_t2"]["decimal"], serde_json::Value::Null);
    assert_eq!(rows[1]["ratio_t2_pi"]["num"], 87);
    assert_eq!(rows[1]["ratio_t2_pi"]["den"], 168);
    assert_eq!(rows[1]["exceptional"], true);
}

#[test]
fn classify_outputs() {
    let out = run(&["classify", "14", "--format", "json"]);
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_str(stdout(&out).trim()).unwrap();
    assert_eq!(v["multiplicity"], 0);

    let out = run(&["classify", "6", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_str(stdout(&out).trim()).unwrap();
    assert_eq!(v["preimage"], serde_json::json!([7, 9, 14, 18]));
    assert_eq!(v["power_certificate"], serde_json::json!({"p": 3, "e": 2}));

    let out = run(&["classify", "6", "--format", "csv"]);
    assert_eq!(
        stdout(&out),
        "m,multiplicity,preimage,prime_certificate,power_p,power_e,exceptional\n6,4,7;9;14;18,7,3,2,false\n"
    );
}

#[test]
fn usage_errors_exit_two() {
    for args in [
        &["classify", "0"][..],
        &["classify", "12"],
        &["classify", "abc"],
        &["census", "--checkpoints", "100,10"],
        &["pairs", "--gap", "3"],
        &["bogus"],
    ] {
        let out = run(args);
        assert_eq!(out.status.code(), Some(2), "{args:?}");
        assert!(!out.stderr.is_empty());
    }
}

#[test]
fn budget_overrun_exits_three() {
    let out = run(&["census", "--max", "100000000", "--memory-budget", "4K"]);
    assert_eq!(out.status.code(), Some(3));
    let err = String::from_utf8(out.stderr).unwrap();
    assert_eq!(err.lines().count(), 1);
}

#[test]
fn preimage_pairs_rt_vkl() {
    let out = run(&["preimage", "24", "--format", "csv"]);
    assert_eq!(stdout(&out), "m,multiplicity,preimage\n24,10,35;39;45;52;56;70;72;78;84;90\n");

    let out = run(&["pairs", "--max", "20", "--format", "csv"]);
    assert_eq!(stdout(&out), "x,gap,c,c1,c2,c_over_sqrt\n20,4,2,3,4,0.447213\n".replace("0.447213", "0.447214"));

    let out = run(&["rt", "--max", "1002", "--t", "2", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_str(stdout(&out).trim()).unwrap();
    assert_eq!(v["rt"], 7);

    let out = run(&["vkl", "--max", "6", "--k", "4", "--l", "2", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_str(stdout(&out).trim()).unwrap();
    assert_eq!((v["v_kl"].as_u64(), v["v_k"].as_u64()), (Some(1), Some(2)));
}

#[test]
fn vkl_uses_cache_directory() {
    let dir = tempfile::tempdir().unwrap();
    let args = ["vkl", "--max", "5000", "--k", "2", "--format", "csv"];
    let first = Command::new(env!("CARGO_BIN_EXE_totient-census"))
        .args(args)
        .env("TOTIENT_CENSUS_CACHE", dir.path())
        .output()
        .unwrap();
    assert!(first.status.success());
    let cached = dir.path().join("multiplicity-5000.bin");
    assert!(cached.exists());
    let second = Command::new(env!("CARGO_BIN_EXE_totient-census"))
        .args(args)
        .env("TOTIENT_CENSUS_CACHE", dir.path())
        .output()
        .unwrap();
    assert_eq!(first.stdout, second.stdout);
    assert_eq!(first.stdout, run(&args).stdout);
}

#[test]
fn report_writes_plot_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("report.txt");
    let out = run(&[
        "report",
        "--checkpoints",
        "1002,10002,100002",
        "--out",
        path.to_str().unwrap(),
    ]);
    assert!(out.status.success());
    let table = std::fs::read_to_string(&path).unwrap();
    assert!(table.contains("t4/t2 strictly decreasing: true"));
    let plot = std::fs::read_to_string(dir.path().join("report.txt.dat")).unwrap();
    assert_eq!(plot, "# x t2/pi\n1002 0.517857\n10002 0.508543\n100002 0.503648\n");
}
