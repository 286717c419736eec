//! One PASS/FAIL line per acceptance criterion.
//!
//! Criteria 2 to 11 are read off the `verify paper-core` report; criterion 1
//! reruns `table 10` against literal values and criterion 12 compares two
//! reports produced with different thread counts.

use std::process::Command;
use std::time::{Duration, Instant};

const BIN: &str = env!("CARGO_BIN_EXE_evenmon");

fn run(args: &[&str]) -> (i32, String, Duration) {
    let start = Instant::now();
    let out = Command::new(BIN).args(args).output().expect("binary runs");
    (
        out.status.code().unwrap_or(-1),
        String::from_utf8(out.stdout).expect("utf-8 output"),
        start.elapsed(),
    )
}

/// `(n, Γ, S, Δ, Σ, T)` for n = 1..10.
const TABLE: [[u64; 6]; 10] = [
    [1, 1, 1, 1, 1, 1],
    [2, 2, 2, 4, 4, 4],
    [3, 1, 6, 10, 10, 27],
    [4, 4, 24, 128, 140, 256],
    [5, 6, 120, 1911, 2171, 3125],
    [6, 36, 720, 33702, 38412, 46656],
    [7, 72, 5040, 651793, 742975, 823543],
    [8, 576, 40320, 14237912, 15931072, 16777216],
    [9, 1440, 362880, 342062865, 377624169, 387420489],
    [10, 14400, 3628800, 9120890710, 9878449600, 10000000000],
];

fn criterion_table() -> Result<(), String> {
    let (code, out, took) = run(&["table", "10", "--format", "csv"]);
    if code != 0 {
        return Err(format!("exit {code}"));
    }
    let mut lines = out.lines();
    let header: Vec<&str> = lines.next().unwrap_or("").split(',').collect();
    let col = |name: &str| header.iter().position(|h| *h == name);
    let cols: Vec<usize> = ["n", "gamma", "sym", "delta", "sigma", "full"]
        .iter()
        .map(|c| col(c).ok_or(format!("missing column {c}")))
        .collect::<Result<_, _>>()?;
    let rows: Vec<Vec<u64>> = lines
        .map(|l| l.split(',').map(|v| v.parse().unwrap_or(u64::MAX)).collect())
        .collect();
    if rows.len() != 10 {
        return Err(format!("{} rows", rows.len()));
    }
    for (row, want) in rows.iter().zip(TABLE) {
        let got: Vec<u64> = cols.iter().map(|&c| row[c]).collect();
        if got != want {
            return Err(format!("row {:?} versus {:?}", got, want));
        }
    }
    // the binary was just spawned; allow process start-up on top of the work
    if took > Duration::from_secs(1) {
        return Err(format!("took {took:?}"));
    }
    Ok(())
}

/// All report lines starting with `prefix` pass, and there is at least one.
fn lines_pass(report: &str, prefix: &str, needed: &[&str]) -> Result<(), String> {
    let lines: Vec<&str> = report
        .lines()
        .filter(|l| l.get(6..).is_some_and(|r| r.starts_with(prefix)))
        .collect();
    if lines.is_empty() {
        return Err(format!("no `{prefix}` checks in the report"));
    }
    if let Some(bad) = lines.iter().find(|l| !l.starts_with("PASS")) {
        return Err(bad.to_string());
    }
    for n in needed {
        if !lines.iter().any(|l| l.contains(n)) {
            return Err(format!("no `{prefix}` check mentions `{n}`"));
        }
    }
    Ok(())
}

fn main() {
    let (code1, one, took) = run(&["--threads", "1", "verify", "paper-core"]);
    let (code4, four, _) = run(&["--threads", "4", "verify", "paper-core"]);
    eprintln!("verify paper-core (1 thread) took {took:?}");

    let results: Vec<(&str, Result<(), String>)> = vec![
        ("1 table reproduction", criterion_table()),
        (
            "2 formula versus enumeration",
            lines_pass(
                &one,
                "generation: |<",
                &["card(gamma) at n = 4", "card(sigma) at n = 7", "card(delta) at n = 7"],
            ),
        ),
        (
            "3 membership equivalence",
            lines_pass(&one, "membership:", &["T_5", "degree 6", "degree 7"]),
        ),
        (
            "4 delta as sigma minus scriptX",
            lines_pass(&one, "delta:", &["n = 4", "n = 5", "n = 6"]),
        ),
        (
            "5 ranks",
            lines_pass(
                &one,
                "rank:",
                &[
                    "Gamma_4 has rank 1",
                    "Gamma_7 has rank 3",
                    "Gamma_10 has rank 2",
                    "Delta_3 has rank 3",
                    "Delta_4 has rank 2",
                    "Delta_6 has rank 3",
                    "Sigma_4 has rank 3",
                    "Sigma_6 has rank 5",
                    "Gamma_{2+2} has rank 1",
                    "Gamma_{4+4} has rank 3",
                ],
            ),
        ),
        (
            "6 kernel orbits",
            lines_pass(&one, "orbits:", &["n = 4,", "n = 11,"]),
        ),
        (
            "7 regularity",
            lines_pass(&one, "regular:", &["n = 5", "random elements"]),
        ),
        (
            "8 half of each kernel class",
            lines_pass(&one, "r-class:", &["Sigma_4", "Sigma_7"]),
        ),
        (
            "9 word identities",
            lines_pass(&one, "identities:", &["n <= 13"]),
        ),
        (
            "10 constructive lemmas",
            lines_pass(&one, "lemma:", &["every valid input at n = 5", "random valid inputs at n = 7"]),
        ),
        (
            "11 parity of chained partial permutations",
            lines_pass(&one, "parity:", &["n = 9"]),
        ),
        (
            "12 determinism across thread counts",
            if code1 == 0 && code4 == 0 && one == four {
                Ok(())
            } else {
                Err(format!("exit codes {code1}, {code4}; reports equal: {}", one == four))
            },
        ),
    ];

    let mut failed = 0;
    for (name, r) in &results {
        match r {
            Ok(()) => println!("PASS criterion {name}"),
            Err(why) => {
                failed += 1;
                println!("FAIL criterion {name}: {why}");
            }
        }
    }
    if failed > 0 {
        eprintln!("{failed} acceptance criteria failed");
        std::process::exit(1);
    }
}
