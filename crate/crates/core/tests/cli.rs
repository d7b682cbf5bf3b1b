use std::process::{Command, Output};

use integer_triangles::cli::{recompute_ratio, OutputRecord, SCHEMA_VERSION};

fn itri(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_itri"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn code(out: &Output) -> i32 {
    out.status.code().expect("exit code")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn jsonl(out: &Output) -> Vec<OutputRecord> {
    stdout(out)
        .lines()
        .map(|l| serde_json::from_str(l).expect("valid JSONL line"))
        .collect()
}

fn sides(r: &OutputRecord) -> Option<(String, String, String)> {
    Some((r.f.clone()?, r.g.clone()?, r.h.clone()?))
}

fn has_triangle(records: &[OutputRecord], want: [&str; 3]) -> bool {
    records.iter().filter_map(sides).any(|(f, g, h)| {
        let mut got = [f, g, h];
        got.sort_by_key(|s| (s.len(), s.clone()));
        got == want
    })
}

#[test]
fn solve_exit_codes() {
    let out = itri(&["solve", "26", "--format", "jsonl"]);
    assert_eq!(code(&out), 0);
    let recs = jsonl(&out);
    assert!(has_triangle(&recs, ["11", "39", "49"]));
    for r in &recs {
        assert_eq!(r.schema_version, SCHEMA_VERSION);
        assert_eq!(r.component.as_deref(), Some("EGG"));
        assert_eq!(r.residue_mod_8, Some(2));
        assert_eq!(r.ratio.as_deref(), Some("26/1"));
    }

    let out = itri(&["solve", "3", "--denominator-bound", "50"]);
    assert_eq!(code(&out), 1);
    assert!(stdout(&out).contains("no triangles up to bound"));

    let out = itri(&["solve", "2"]);
    assert_eq!(code(&out), 2);
    let err = String::from_utf8_lossy(&out.stderr).to_lowercase();
    assert!(
        err.contains("equilateral") && err.contains("singular"),
        "{err}"
    );

    assert_eq!(code(&itri(&["solve", "1"])), 2);
    assert_eq!(code(&itri(&["solve", "26", "--denominator-bound", "0"])), 2);
    assert_eq!(code(&itri(&["solve", "26", "--format", "csv"])), 2);
    assert_eq!(code(&itri(&["solve"])), 2);
    assert_eq!(code(&itri(&["--help"])), 0);
}

#[test]
fn verify_exit_codes() {
    let out = itri(&["verify", "11", "39", "49", "--format", "jsonl"]);
    assert_eq!(code(&out), 0);
    let r = &jsonl(&out)[0];
    assert_eq!(r.ratio.as_deref(), Some("26/1"));
    assert_eq!(r.valid, Some(true));
    assert_eq!(r.angles.as_ref().map(Vec::len), Some(3));

    let out = itri(&["verify", "-13", "63", "80", "--format", "jsonl"]);
    assert_eq!(code(&out), 1);
    let r = &jsonl(&out)[0];
    assert_eq!(r.ratio.as_deref(), Some("7/1"));
    assert_eq!(r.valid, Some(false));

    assert_eq!(code(&itri(&["verify", "1", "2", "3"])), 2);
    assert_eq!(code(&itri(&["verify", "1", "x", "3"])), 2);
    // scaled rational sides reduce to the same triangle
    let out = itri(&["verify", "22/3", "26", "98/3", "--format", "jsonl"]);
    assert_eq!(code(&out), 0);
    assert_eq!(
        sides(&jsonl(&out)[0]),
        Some(("11".into(), "39".into(), "49".into()))
    );
    // 9/4 and 5/2 are of the form 2 + 1/M, 16/7 is not
    assert_eq!(code(&itri(&["verify", "2", "3", "3"])), 0);
    assert_eq!(code(&itri(&["verify", "3", "4", "5"])), 0);
    assert_eq!(code(&itri(&["verify", "4", "5", "6"])), 1);
}

#[test]
fn table1_builtin_and_file() {
    let out = itri(&["table1", "--format", "jsonl"]);
    assert_eq!(code(&out), 0);
    let recs = jsonl(&out);
    assert_eq!(recs.len(), 16);
    assert!(recs
        .iter()
        .all(|r| r.pass == Some(true) && r.residue_mod_8 == Some(2)));
    assert!(recs[0].note.as_deref().unwrap().contains("equilateral"));

    let out = itri(&["table1", "--format", "csv"]);
    assert_eq!(code(&out), 0);
    let text = stdout(&out);
    assert_eq!(text.lines().next(), Some("N,f,g,h,pass"));
    assert!(text.contains("866,3025,5629,8649,true"));

    let dir = std::env::temp_dir().join(format!("itri-table-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let good = dir.join("good.txt");
    std::fs::write(&good, "586 3809 18411 22201\n").unwrap();
    assert_eq!(code(&itri(&["table1", good.to_str().unwrap()])), 0);
    let bad = dir.join("bad.txt");
    std::fs::write(&bad, "# one corrupted row\n26 11 39 49\n74 259 475 730\n").unwrap();
    let out = itri(&["table1", bad.to_str().unwrap(), "--format", "csv"]);
    assert_eq!(code(&out), 1);
    assert!(stdout(&out).contains("74,259,475,730,false"));
    assert_eq!(
        code(&itri(&[
            "table1",
            dir.join("missing.txt").to_str().unwrap()
        ])),
        2
    );
    std::fs::remove_dir_all(&dir).ok();
}

#[test]
fn torsion_reports() {
    let out = itri(&["torsion", "--n", "7", "--format", "jsonl"]);
    assert_eq!(code(&out), 0);
    let recs = jsonl(&out);
    let orders: Vec<u32> = recs.iter().filter_map(|r| r.order).collect();
    assert_eq!(orders, vec![1, 2, 3, 3, 6, 6]);
    assert!(recs
        .last()
        .unwrap()
        .note
        .as_deref()
        .unwrap()
        .contains("Z/6"));
    assert!(out.stderr.is_empty());

    let out = itri(&["torsion", "--m", "4", "--format", "jsonl"]);
    assert_eq!(code(&out), 0);
    assert_eq!(jsonl(&out).iter().filter(|r| r.order == Some(2)).count(), 3);
    assert!(String::from_utf8_lossy(&out.stderr).contains("WARNING"));

    assert_eq!(code(&itri(&["torsion", "--n", "2"])), 2);
    assert_eq!(code(&itri(&["torsion"])), 2);
    assert_eq!(code(&itri(&["torsion", "--n", "7", "--m", "4"])), 2);
}

#[test]
fn near_equilateral_commands() {
    let out = itri(&["near-eq", "4", "--format", "jsonl"]);
    assert_eq!(code(&out), 0);
    let recs = jsonl(&out);
    assert!(has_triangle(&recs, ["2", "3", "3"]));
    assert!(recs.iter().all(|r| r.ratio.as_deref() == Some("9/4")));

    let out = itri(&["near-eq", "12", "--format", "jsonl"]);
    assert!(has_triangle(&jsonl(&out), ["4", "5", "5"]));

    let out = itri(&[
        "near-eq",
        "89",
        "--verify",
        "10188073747943",
        "10937217961673",
        "11065215566304",
        "--format",
        "jsonl",
    ]);
    assert_eq!(code(&out), 0);
    let r = &jsonl(&out)[0];
    assert_eq!(r.ratio.as_deref(), Some("179/89"));
    assert_eq!(r.pass, Some(true));

    let out = itri(&["near-eq", "89", "--verify", "11", "39", "49"]);
    assert_eq!(code(&out), 1);
    assert_eq!(code(&itri(&["near-eq", "0"])), 2);
    assert_eq!(
        code(&itri(&["near-eq", "6", "--denominator-bound", "10"])),
        1
    );
    let out = itri(&[
        "near-eq",
        "5",
        "--denominator-bound",
        "1",
        "--format",
        "jsonl",
    ]);
    assert!(has_triangle(&jsonl(&out), ["8", "9", "11"]));
}

#[test]
fn scan_commands() {
    let out = itri(&["scan", "3", "30", "--format", "jsonl"]);
    assert_eq!(code(&out), 0);
    let recs = jsonl(&out);
    let summary = recs.last().unwrap();
    assert_eq!(summary.command, "scan-summary");
    assert_eq!(summary.residues.as_ref().unwrap().get("2"), Some(&1));
    assert!(recs[..recs.len() - 1]
        .iter()
        .all(|r| r.target.as_deref() == Some("N=26")));

    let out = itri(&["scan", "3", "3", "--format", "jsonl"]);
    assert_eq!(code(&out), 0);
    assert_eq!(jsonl(&out).len(), 1);
    assert_eq!(code(&itri(&["scan", "100", "3"])), 2);
    assert_eq!(code(&itri(&["scan", "2", "10"])), 2);
}

#[test]
fn jsonl_is_self_consistent() {
    let out = itri(&["solve", "74", "--format", "jsonl"]);
    assert_eq!(code(&out), 0);
    let text = stdout(&out);
    for line in text.lines() {
        let rec: OutputRecord = serde_json::from_str(line).unwrap();
        assert_eq!(serde_json::to_string(&rec).unwrap(), line);
        assert_eq!(recompute_ratio(&rec), rec.ratio);
        assert!(rec.u.as_deref().unwrap().contains('/'));
    }
    assert!(has_triangle(&jsonl(&out), ["259", "475", "729"]));
}

#[test]
fn out_flag_writes_file() {
    let path = std::env::temp_dir().join(format!("itri-out-{}.jsonl", std::process::id()));
    let out = itri(&[
        "verify",
        "11",
        "39",
        "49",
        "--format",
        "jsonl",
        "--out",
        path.to_str().unwrap(),
    ]);
    assert_eq!(code(&out), 0);
    assert!(out.stdout.is_empty());
    let saved = std::fs::read_to_string(&path).unwrap();
    let rec: OutputRecord = serde_json::from_str(saved.trim()).unwrap();
    assert_eq!(rec.command, "verify");
    std::fs::remove_file(&path).ok();
}

#[test]
fn time_budget_is_accepted() {
    let out = itri(&["solve", "26", "--time-budget", "0", "--format", "jsonl"]);
    // the first batch of strata always completes, and it contains q = 3
    assert_eq!(code(&out), 0);
    assert_eq!(code(&itri(&["solve", "26", "--time-budget", "-1"])), 2);
}
