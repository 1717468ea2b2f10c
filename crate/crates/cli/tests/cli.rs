use std::fs;
use std::path::Path;
use std::process::{Command, Output};

use serde_json::Value;

fn bin() -> Command {
    let mut c = Command::new(env!("CARGO_BIN_EXE_hairycalc"));
    c.env_remove("HAIRYCALC_CACHE");
    c
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn code(o: &Output) -> i32 {
    o.status.code().expect("exit code")
}

fn json(o: &Output) -> Value {
    serde_json::from_slice(&o.stdout).expect("stdout is json")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn find_record<'a>(doc: &'a Value, s: &[u64], t: u64, degree: i64) -> Option<&'a Value> {
    doc["records"].as_array().unwrap().iter().find(|r| {
        r["s"] == serde_json::json!(s) && r["t"] == t && r["degree"] == degree && r["complex"] == "hairy"
    })
}

#[test]
fn line_graph_record() {
    let o = run(&["homology", "--m", "2", "--d", "6", "--max-hairs", "2", "--max-complexity", "1", "--complex", "hairy"]);
    assert_eq!(code(&o), 0);
    let doc = json(&o);
    let r = find_record(&doc, &[2], 1, 1).expect("line graph record");
    assert_eq!(r["homology_dim"], 1);
    assert!(doc["meta"]["wall_time_ms"].is_u64());
    assert_eq!(doc["meta"]["below_theorem_range"], false);
}

#[test]
fn tripod_record() {
    let o = run(&["homology", "--m", "2", "--d", "7", "--max-hairs", "3", "--max-complexity", "2"]);
    assert_eq!(code(&o), 0);
    let doc = json(&o);
    assert_eq!(find_record(&doc, &[3], 2, 5).expect("tripod")["homology_dim"], 1);
    assert!(find_record(&doc, &[3], 2, 7).is_none());
}

#[test]
fn zero_hairs_give_an_empty_table() {
    let o = run(&["homology", "--m", "2,3", "--d", "9", "--max-hairs", "0", "--max-complexity", "2"]);
    assert_eq!(code(&o), 0);
    assert_eq!(json(&o)["records"].as_array().unwrap().len(), 0);
}

#[test]
fn csv_output() {
    let o = run(&["homology", "--m", "2", "--d", "7", "--max-hairs", "3", "--max-complexity", "2", "--format", "csv"]);
    assert_eq!(code(&o), 0);
    let text = stdout(&o);
    let mut lines = text.lines();
    assert_eq!(
        lines.next().unwrap(),
        "complex,s,t,degree,chain_dim,rank_in,rank_out,homology_dim,zero_generators_discarded"
    );
    assert!(text.lines().any(|l| l == "hairy,3,2,5,1,0,0,1,0"));
}

#[test]
fn records_are_byte_stable() {
    let args = [
        "homology", "--m", "2,3", "--d", "9", "--max-hairs", "3", "--max-complexity", "2", "--complex", "all",
        "--format", "csv",
    ];
    let a = run(&args);
    let b = run(&args);
    let mut c_args = args.to_vec();
    c_args.extend(["--workers", "4"]);
    let c = run(&c_args);
    assert_eq!(code(&a), 0);
    assert_eq!(a.stdout, b.stdout);
    assert_eq!(a.stdout, c.stdout);

    let j = |w: &str| {
        let o = run(&["homology", "--m", "3", "--d", "8", "--max-hairs", "3", "--max-complexity", "2", "--workers", w]);
        json(&o)["records"].clone()
    };
    assert_eq!(j("1"), j("3"));
}

#[test]
fn degree_window_filters_records() {
    let o = run(&[
        "homology", "--m", "2", "--d", "6", "--max-hairs", "3", "--max-complexity", "2", "--degree-min", "-1",
        "--degree-max", "1",
    ]);
    assert_eq!(code(&o), 0);
    let doc = json(&o);
    let recs = doc["records"].as_array().unwrap();
    assert!(!recs.is_empty());
    assert!(recs.iter().all(|r| (-1..=1).contains(&r["degree"].as_i64().unwrap())));
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(code(&run(&["homology", "--m", "2"])), 2);
    assert_eq!(code(&run(&["homology", "--m", "2", "--d", "6", "--max-hairs", "2", "--max-complexity", "1", "--complex", "bogus"])), 2);
    assert_eq!(code(&run(&["homology", "--m", "0", "--d", "6", "--max-hairs", "2", "--max-complexity", "1"])), 2);
    assert_eq!(code(&run(&["homology", "--m", "2", "--d", "6", "--max-hairs", "2", "--max-complexity", "1", "--degree-min", "0"])), 2);
    assert_eq!(code(&run(&["oracle", "whitehead", "--m", "3", "--d", "5"])), 2);
    assert_eq!(code(&run(&["oracle", "config-poincare", "--k", "3", "--n", "1"])), 2);
    assert_eq!(code(&run(&["nonsense"])), 2);
}

#[test]
fn oracle_outputs() {
    let o = run(&["oracle", "config-poincare", "--k", "4", "--n", "3"]);
    assert_eq!(code(&o), 0);
    let coeffs: Vec<u64> =
        json(&o)["records"].as_array().unwrap().iter().map(|r| r["coefficient"].as_u64().unwrap()).collect();
    assert_eq!(coeffs, vec![1, 6, 11, 6]);

    for (d, want) in [("7", 1), ("8", 0), ("6", 1)] {
        let o = run(&["oracle", "whitehead", "--m", "3", "--d", d]);
        assert_eq!(json(&o)["records"][0]["kernel_dim"], want, "d = {d}");
    }

    let o = run(&["oracle", "lie", "--degrees", "1,1", "--max-weight", "2", "--format", "csv"]);
    let text = stdout(&o);
    assert_eq!(text.lines().next().unwrap(), "weight,degree,dim");
    assert_eq!(text.lines().count(), 1 + 2 + 3);

    let o = run(&["oracle", "kq", "--m", "2", "--s", "1", "--k", "2"]);
    assert_eq!(json(&o)["records"][0], serde_json::json!({"degree": 3, "dim": 1}));

    let o = run(&["oracle", "tree", "--m", "2", "--d", "7", "--s", "3"]);
    assert_eq!(json(&o)["records"][0], serde_json::json!({"s": [3], "degree": 5, "dim": 1}));
}

#[test]
fn check_passes_and_reports() {
    let o = run(&["check", "--m", "2,3", "--d", "9", "--max-hairs", "3", "--max-complexity", "2"]);
    assert_eq!(code(&o), 0, "{}", String::from_utf8_lossy(&o.stderr));
    let doc = json(&o);
    assert_eq!(doc["passed"], true);
    let names: Vec<&str> = doc["checks"].as_array().unwrap().iter().map(|c| c["check"].as_str().unwrap_or_else(|| c["name"].as_str().unwrap())).collect();
    assert_eq!(names, ["square-zero", "euler", "cache", "hairy-vs-koszul", "tree-vs-lie-oracle", "pi0-vs-whitehead", "genus-degree"]);
}

#[test]
fn codimension_two_is_flagged() {
    let o = run(&["check", "--m", "2", "--d", "4", "--max-hairs", "2", "--max-complexity", "1"]);
    assert_eq!(code(&o), 0);
    assert!(String::from_utf8_lossy(&o.stderr).contains("below-theorem-range"));
    let doc = json(&o);
    assert_eq!(doc["below_theorem_range"], true);
    let statuses: Vec<&str> = doc["checks"].as_array().unwrap().iter().map(|c| c["status"].as_str().unwrap()).collect();
    assert_eq!(statuses[0], "pass");
    assert_eq!(&statuses[4..], ["skipped", "skipped", "skipped"]);

    let o = run(&["homology", "--m", "2", "--d", "4", "--max-hairs", "2", "--max-complexity", "1"]);
    assert_eq!(json(&o)["meta"]["below_theorem_range"], true);
}

fn blk_files(dir: &Path) -> Vec<std::path::PathBuf> {
    let mut v: Vec<_> = fs::read_dir(dir)
        .unwrap()
        .map(|e| e.unwrap().path())
        .filter(|p| p.extension().is_some_and(|e| e == "blk"))
        .collect();
    v.sort();
    v
}

const GRID: [&str; 8] = ["--m", "2", "--d", "7", "--max-hairs", "3", "--max-complexity", "2"];

#[test]
fn cache_round_trip_reproduces_output() {
    let dir = tempfile::tempdir().unwrap();
    let cache = dir.path().to_str().unwrap();
    let mut args = vec!["homology", "--format", "csv", "--cache-dir", cache];
    args.extend(GRID);
    let first = run(&args);
    assert_eq!(code(&first), 0);
    let files = blk_files(dir.path());
    assert!(!files.is_empty());
    assert!(fs::read_to_string(&files[0]).unwrap().starts_with("hairycalc-block 1\n"));
    let second = run(&args);
    assert_eq!(first.stdout, second.stdout);
    let mut plain = vec!["homology", "--format", "csv"];
    plain.extend(GRID);
    assert_eq!(first.stdout, run(&plain).stdout);

    let mut check = vec!["check", "--cache-dir", cache];
    check.extend(GRID);
    let o = run(&check);
    assert_eq!(code(&o), 0);
    assert_eq!(json(&o)["checks"][2]["status"], "pass");
}

#[test]
fn corrupted_cache_fails_check() {
    let dir = tempfile::tempdir().unwrap();
    let cache = dir.path().to_str().unwrap();
    let grid = ["--m", "2", "--d", "6", "--max-hairs", "4", "--max-complexity", "2"];
    let mut args = vec!["homology", "--cache-dir", cache];
    args.extend(grid);
    assert_eq!(code(&run(&args)), 0);
    let victim = blk_files(dir.path())
        .into_iter()
        .find(|p| fs::read_to_string(p).unwrap().lines().any(|l| l.split(' ').count() == 3 && l.contains('/')))
        .expect("a block with a nonzero matrix entry");
    let text = fs::read_to_string(&victim).unwrap();
    let mut lines: Vec<String> = text.lines().map(String::from).collect();
    let i = lines.iter().position(|l| l.split(' ').count() == 3 && l.contains('/')).unwrap();
    let parts: Vec<&str> = lines[i].split(' ').collect();
    lines[i] = format!("{} {} 12345/7", parts[0], parts[1]);
    fs::write(&victim, lines.join("\n") + "\n").unwrap();

    let mut check = vec!["check", "--cache-dir", cache];
    check.extend(grid);
    let o = run(&check);
    assert_eq!(code(&o), 1);
    let doc = json(&o);
    assert_eq!(doc["passed"], false);
    assert_eq!(doc["checks"][2]["status"], "fail");

    fs::write(&victim, "not a block\n").unwrap();
    assert_eq!(code(&run(&check)), 1);
}

#[test]
fn cache_directory_from_environment_and_config() {
    let env_dir = tempfile::tempdir().unwrap();
    let mut args = vec!["homology"];
    args.extend(GRID);
    let o = bin().args(&args).env("HAIRYCALC_CACHE", env_dir.path()).output().unwrap();
    assert_eq!(code(&o), 0);
    assert!(!blk_files(env_dir.path()).is_empty());

    let work = tempfile::tempdir().unwrap();
    let file_dir = work.path().join("from-file");
    let config = work.path().join("job.toml");
    fs::write(
        &config,
        format!(
            "[job]\nm = [2]\nd = 7\nmax_hairs = 3\nmax_complexity = 2\nformat = \"csv\"\ncache_dir = {:?}\n",
            file_dir.to_str().unwrap()
        ),
    )
    .unwrap();
    let o = run(&["homology", "--config", config.to_str().unwrap()]);
    assert_eq!(code(&o), 0, "{}", String::from_utf8_lossy(&o.stderr));
    assert!(stdout(&o).lines().any(|l| l == "hairy,3,2,5,1,0,0,1,0"));
    assert!(!blk_files(&file_dir).is_empty());

    let flag_dir = work.path().join("from-flag");
    let o = bin()
        .args(["homology", "--config", config.to_str().unwrap(), "--d", "6", "--cache-dir", flag_dir.to_str().unwrap()])
        .env("HAIRYCALC_CACHE", env_dir.path())
        .output()
        .unwrap();
    assert_eq!(code(&o), 0);
    assert!(!blk_files(&flag_dir).is_empty());
    assert!(stdout(&o).lines().any(|l| l == "hairy,2,1,1,1,0,0,1,0"));

    fs::write(&config, "[job]\nm = [2]\nwat = 1\n").unwrap();
    assert_eq!(code(&run(&["homology", "--config", config.to_str().unwrap()])), 2);
}

#[test]
fn output_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("table.json");
    let mut args = vec!["homology", "--output", path.to_str().unwrap()];
    args.extend(GRID);
    let o = run(&args);
    assert_eq!(code(&o), 0);
    assert!(o.stdout.is_empty());
    let doc: Value = serde_json::from_str(&fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(doc["params"]["d"], 7);
}
