//! Output records and their two renderings.
//!
//! Every line the CLI prints is one [`Record`]. `json-lines` writes each
//! record as a JSON object tagged by `"record"`; `text` writes the same
//! fields space separated. Big integers are decimal strings in JSON.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use lucasdio::{Natural, VerificationReport};
use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Text,
    JsonLines,
}

mod decimal {
    use lucasdio::Natural;
    use serde::{de::Error, Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(x: &Natural, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&x.to_string())
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Natural, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(D::Error::custom)
    }
}

mod decimal_opt {
    use lucasdio::Natural;
    use serde::{de::Error, Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(x: &Option<Natural>, s: S) -> Result<S::Ok, S::Error> {
        match x {
            Some(v) => s.serialize_some(&v.to_string()),
            None => s.serialize_none(),
        }
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Option<Natural>, D::Error> {
        Option::<String>::deserialize(d)?
            .map(|s| s.parse().map_err(D::Error::custom))
            .transpose()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ValueRecord {
    pub sequence: String,
    pub n: u64,
    #[serde(with = "decimal_opt", default, skip_serializing_if = "Option::is_none")]
    pub modulus: Option<Natural>,
    #[serde(with = "decimal")]
    pub value: Natural,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct JacobiRecord {
    pub a: String,
    #[serde(with = "decimal")]
    pub n: Natural,
    pub value: i8,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "equation", rename_all = "snake_case")]
pub enum Solution {
    Main {
        n: u64,
        alpha: u32,
        #[serde(with = "decimal")]
        x: Natural,
    },
    LucasForm {
        k: u64,
        n: u64,
        #[serde(with = "decimal")]
        x: Natural,
    },
    FibForm {
        k: u64,
        n: u64,
        #[serde(with = "decimal")]
        x: Natural,
    },
    Pyth {
        n: u64,
        #[serde(with = "decimal")]
        x: Natural,
    },
    Catalan {
        a: u64,
        b: u64,
        x: u32,
        y: u32,
    },
    Poonen {
        a: u64,
        b: u64,
        n: u32,
        #[serde(with = "decimal")]
        x: Natural,
    },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SolutionRecord {
    pub bound: BTreeMap<String, u64>,
    #[serde(flatten)]
    pub solution: Solution,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "UPPERCASE")]
pub enum Outcome {
    Ok,
    Fail,
    Unexpected,
}

impl Outcome {
    pub fn as_str(self) -> &'static str {
        match self {
            Outcome::Ok => "OK",
            Outcome::Fail => "FAIL",
            Outcome::Unexpected => "UNEXPECTED",
        }
    }
}

/// One audit line: what was checked, what came out, and whether that was
/// the expected outcome.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerdictRecord {
    pub check: String,
    pub status: Outcome,
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SummaryRecord {
    pub command: String,
    pub items: u64,
    pub status: Outcome,
    pub note: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "record", rename_all = "snake_case")]
pub enum Record {
    Value(ValueRecord),
    Jacobi(JacobiRecord),
    Report(VerificationReport),
    Solution(SolutionRecord),
    Verdict(VerdictRecord),
    Summary(SummaryRecord),
}

pub fn bound_text(bound: &BTreeMap<String, u64>) -> String {
    bound
        .iter()
        .map(|(k, v)| format!("{k}={v}"))
        .collect::<Vec<_>>()
        .join(" ")
}

/// `EQ3 [0,100000] PASS 0 counterexamples`, followed by the listed
/// counterexamples and `...` when the list was truncated.
pub fn report_text(r: &VerificationReport) -> String {
    let mut line = format!(
        "{} [{},{}] {} {} counterexamples",
        r.claim_id, r.range_lo, r.range_hi, r.status, r.count
    );
    if !r.counterexamples.is_empty() {
        line.push(':');
        for c in &r.counterexamples {
            let _ = write!(line, " {c}");
        }
        if r.is_truncated() {
            line.push_str(" ...");
        }
    }
    line
}

fn solution_text(s: &Solution) -> String {
    match s {
        Solution::Main { n, alpha, x } => format!("main n={n} alpha={alpha} x={x}"),
        Solution::LucasForm { k, n, x } => format!("lucas k={k} n={n} x={x}"),
        Solution::FibForm { k, n, x } => format!("fib k={k} n={n} x={x}"),
        Solution::Pyth { n, x } => format!("pyth n={n} x={x}"),
        Solution::Catalan { a, b, x, y } => format!("catalan a={a} b={b} x={x} y={y}"),
        Solution::Poonen { a, b, n, x } => format!("poonen a={a} b={b} n={n} x={x}"),
    }
}

impl Record {
    pub fn render(&self, format: Format) -> String {
        match format {
            Format::JsonLines => serde_json::to_string(self).expect("records always serialize"),
            Format::Text => match self {
                Record::Value(v) => v.value.to_string(),
                Record::Jacobi(j) => j.value.to_string(),
                Record::Report(r) => report_text(r),
                Record::Solution(s) => {
                    format!("{} [{}]", solution_text(&s.solution), bound_text(&s.bound))
                }
                Record::Verdict(v) => format!("{} {} {}", v.check, v.status.as_str(), v.detail),
                Record::Summary(s) => format!(
                    "summary {} {} {} {}",
                    s.command,
                    s.items,
                    s.status.as_str(),
                    s.note
                ),
            },
        }
    }

    pub fn parse_json(line: &str) -> serde_json::Result<Record> {
        serde_json::from_str(line)
    }
}
