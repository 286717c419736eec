use std::process::Command;

const BIN: &str = env!("CARGO_BIN_EXE_evenmon");

fn run(args: &[&str], cache: &std::path::Path) -> (i32, String) {
    let out = Command::new(BIN)
        .args(args)
        .env("EVENMON_CACHE_DIR", cache)
        .output()
        .expect("binary runs");
    (
        out.status.code().unwrap_or(-1),
        String::from_utf8(out.stdout).unwrap(),
    )
}

fn cli(args: &[&str]) -> (i32, String) {
    let dir = tempfile::tempdir().unwrap();
    run(args, dir.path())
}

#[test]
fn member_verdicts() {
    let (code, out) = cli(&["member", "gamma", "4", "[2,3,4,1]"]);
    assert_eq!(code, 0);
    assert!(out.starts_with("yes"));

    let (_, out) = cli(&["member", "delta", "4", "[1,2,1,2]"]);
    assert!(out.starts_with("no"));
    assert!(out.contains("{1,3},{2,4}"), "{out}");

    let (_, out) = cli(&["--paranoid", "member", "sigma", "5", "[1,1,2,3,4]"]);
    assert!(out.starts_with("yes"));
    assert!(out.contains("oracle: agrees"));

    let (_, out) = cli(&["member", "delta", "6", "epsilon@6"]);
    assert!(out.starts_with("yes"), "{out}");
    let (_, out) = cli(&["member", "gamma", "4", "(1,2,3,4)"]);
    assert!(out.starts_with("yes"), "{out}");
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(cli(&["member", "gamma", "4", "[2,3"]).0, 2);
    assert_eq!(cli(&["member", "nonsense", "4", "[2,3,4,1]"]).0, 2);
    assert_eq!(cli(&["member", "gamma", "5", "[2,3,4,1]"]).0, 2);
    assert_eq!(cli(&["table"]).0, 2);
    assert_eq!(cli(&["enumerate", "7"]).0, 2);
    assert_eq!(cli(&["enumerate", "scriptX", "5"]).0, 2);
}

#[test]
fn table_formats() {
    let (code, out) = cli(&["table", "1", "--format", "csv"]);
    assert_eq!(code, 0);
    let lines: Vec<&str> = out.lines().collect();
    assert_eq!(lines.len(), 2);
    let header: Vec<&str> = lines[0].split(',').collect();
    let row: Vec<&str> = lines[1].split(',').collect();
    for col in ["n", "gamma", "sym", "delta", "sigma", "full"] {
        let i = header.iter().position(|h| *h == col).unwrap();
        assert_eq!(row[i], "1");
    }

    let (_, out) = cli(&["table", "3", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    let rows = v.as_array().unwrap();
    assert_eq!(rows.len(), 3);
    assert_eq!(rows[2]["delta"], rows[2]["sigma"]);
    assert_eq!(rows[2]["delta"], "10");

    let (_, out) = cli(&["table", "10"]);
    assert!(out.contains("9878449600"));
}

#[test]
fn enumerate_writes_then_reuses() {
    let dir = tempfile::tempdir().unwrap();
    let (code, out) = run(&["enumerate", "delta", "6"], dir.path());
    assert_eq!(code, 0);
    assert!(out.contains("count 33702"));
    assert!(out.contains("(written)"));
    let (_, again) = run(&["enumerate", "delta", "6"], dir.path());
    assert!(again.contains("count 33702"));
    assert!(again.contains("(reused)"));

    let (code, out) = run(
        &["enumerate", "--gens", "(1,3)(2,4);(3,5,7);(2,4,6)", "7"],
        dir.path(),
    );
    assert_eq!(code, 0);
    assert!(out.contains("count 72"));
}

#[test]
fn over_budget_exits_three() {
    assert_eq!(cli(&["enumerate", "sigma", "9"]).0, 3);
    assert_eq!(cli(&["--budget", "100", "enumerate", "delta", "5"]).0, 3);
    assert_eq!(cli(&["--subset-budget", "1", "rank", "sigma", "4"]).0, 3);
}

#[test]
fn rank_factor_orbits_probe() {
    let (code, out) = cli(&["rank", "gamma", "4"]);
    assert_eq!(code, 0);
    assert!(out.starts_with("rank 1"));
    let (_, out) = cli(&["rank", "delta", "4"]);
    assert!(out.starts_with("rank 2"));

    let (code, out) = cli(&["factor", "delta", "5", "[1,1,3,4,5]"]);
    assert_eq!(code, 0);
    assert!(out.contains("epsilon@5"), "{out}");
    assert_eq!(cli(&["factor", "delta", "4", "[1,2,1,2]"]).0, 2);

    let (_, out) = cli(&["orbits", "9"]);
    assert!(out.starts_with("orbits 5"));

    let (_, out) = cli(&["probe-conjecture", "2", "2"]);
    assert!(out.starts_with("generating pair found"));
    let (_, out) = cli(&["probe-conjecture", "3", "3"]);
    assert!(out.contains("rank is at least 3"));
}

#[test]
fn sabotage_is_caught() {
    let (code, out) = cli(&["verify", "paper-core", "--max-n", "4", "--sabotage"]);
    assert_eq!(code, 1);
    assert!(out.contains("FAIL  generation"), "{out}");
}
