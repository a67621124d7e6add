use std::process::Command;

use clap::Parser;
use lucasdio_cli::output::{Outcome, Solution};
use lucasdio_cli::{execute, Cli, Format, Record};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_lucasdio"))
}

fn parse(args: &[&str]) -> Cli {
    let mut full = vec!["lucasdio"];
    full.extend_from_slice(args);
    Cli::try_parse_from(full).unwrap()
}

#[test]
fn json_lines_round_trip_to_in_memory_records() {
    let commands: [&[&str]; 7] = [
        &["solve", "main", "--n-max", "30", "--alpha-max", "6"],
        &["solve", "catalan", "--base-max", "20", "--exp-max", "8"],
        &["classify", "fib", "--k", "1", "--n-max", "300"],
        &["verify", "eq2", "--literal", "--hi", "100"],
        &["verify", "eq5", "--m-list", "2,4", "--hi", "50"],
        &["seq", "lucas", "500", "--mod", "1000000007"],
        &["jacobi", "-9", "7"],
    ];
    for args in commands {
        let cli = parse(args);
        let outcomes = execute(&cli).unwrap();
        for rec in &outcomes.records {
            let line = rec.render(Format::JsonLines);
            assert!(!line.contains('\n'));
            assert_eq!(&Record::parse_json(&line).unwrap(), rec, "{args:?}");
        }
    }
}

#[test]
fn summary_is_last_and_records_sorted() {
    let cli = parse(&["classify", "fib", "--k", "2", "--n-max", "2000"]);
    let outcomes = execute(&cli).unwrap();
    let last = outcomes.records.last().unwrap();
    assert!(matches!(last, Record::Summary(s) if s.status == Outcome::Ok));
    let ns: Vec<u64> = outcomes
        .records
        .iter()
        .filter_map(|r| match r {
            Record::Solution(s) => match s.solution {
                Solution::FibForm { n, .. } => Some(n),
                _ => None,
            },
            _ => None,
        })
        .collect();
    assert_eq!(ns, vec![0, 3, 6]);
}

#[test]
fn text_and_json_carry_the_same_fields() {
    let cli = parse(&["solve", "pyth", "--n-max", "50"]);
    let outcomes = execute(&cli).unwrap();
    let sol = &outcomes.records[0];
    assert_eq!(sol.render(Format::Text), "pyth n=2 x=5 [n_max=50]");
    let json: serde_json::Value = serde_json::from_str(&sol.render(Format::JsonLines)).unwrap();
    assert_eq!(json["equation"], "pyth");
    assert_eq!(json["n"], 2);
    assert_eq!(json["x"], "5");
    assert_eq!(json["bound"]["n_max"], 50);
}

#[test]
fn binary_exit_codes() {
    let out = bin().args(["seq", "lucas", "10"]).output().unwrap();
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(String::from_utf8_lossy(&out.stdout), "123\n");

    let out = bin()
        .args(["verify", "eq2", "--literal", "--hi", "100"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(1));
    let text = String::from_utf8_lossy(&out.stdout);
    assert!(text
        .lines()
        .next()
        .unwrap()
        .contains("FAIL 101 counterexamples: 0 1 2 3"));

    let out = bin()
        .args(["verify", "eq3", "--hi", "1000"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
    assert!(
        String::from_utf8_lossy(&out.stdout).starts_with("EQ3 [0,1000] PASS 0 counterexamples\n")
    );

    let out = bin()
        .args(["solve", "main", "--n-max", "x"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
    assert!(!out.stderr.is_empty());
    assert!(out.stdout.is_empty());

    let out = bin().args(["verify", "nonsense"]).output().unwrap();
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn flags_override_environment() {
    let out = bin()
        .args(["solve", "main"])
        .env("LUCASDIO_MAIN_N_MAX", "1")
        .env("LUCASDIO_MAIN_ALPHA_MAX", "3")
        .output()
        .unwrap();
    let text = String::from_utf8_lossy(&out.stdout);
    assert_eq!(
        text.lines().filter(|l| l.starts_with("main ")).count(),
        2,
        "{text}"
    );
    assert!(text.contains("[alpha_max=3 n_max=1]"));

    let out = bin()
        .args(["solve", "main", "--n-max", "2", "--alpha-max", "2"])
        .env("LUCASDIO_MAIN_N_MAX", "1")
        .env("LUCASDIO_MAIN_ALPHA_MAX", "3")
        .output()
        .unwrap();
    let text = String::from_utf8_lossy(&out.stdout);
    assert!(text.contains("[alpha_max=2 n_max=2]"), "{text}");

    let out = bin()
        .args(["seq", "fib", "7"])
        .env("LUCASDIO_FORMAT", "json-lines")
        .output()
        .unwrap();
    let line = String::from_utf8_lossy(&out.stdout);
    assert!(line.starts_with("{\"record\":\"value\""), "{line}");
}

#[test]
fn cap_truncates_listing_only() {
    let out = bin()
        .args([
            "--cap",
            "5",
            "--format",
            "json-lines",
            "verify",
            "eq2",
            "--literal",
            "--hi",
            "39",
        ])
        .output()
        .unwrap();
    let first = String::from_utf8_lossy(&out.stdout)
        .lines()
        .next()
        .unwrap()
        .to_string();
    let json: serde_json::Value = serde_json::from_str(&first).unwrap();
    assert_eq!(json["count"], 40);
    assert_eq!(json["counterexamples"], serde_json::json!([0, 1, 2, 3, 4]));
}
