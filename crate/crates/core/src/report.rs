//! Sweep reports.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::sequences::Index;

/// Default number of counterexamples kept in a report.
pub const DEFAULT_CAP: usize = 32;

/// The predicates the verifiers know how to sweep.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum ClaimId {
    /// `2 | L_n <=> 3 ∤ n`, as printed. False for every n.
    #[serde(rename = "EQ2_LITERAL")]
    Eq2Literal,
    /// `2 | L_n <=> 3 | n`.
    #[serde(rename = "EQ2_CORRECTED")]
    Eq2Corrected,
    /// `3 | L_n => n = 2 (mod 4)`.
    #[serde(rename = "EQ3")]
    Eq3,
    /// `2 | n, 3 ∤ n => L_n = 3 (mod 4)`.
    #[serde(rename = "EQ4")]
    Eq4,
    /// `L_{n+2m} = -L_n (mod L_m)` for `2 | m`, `3 ∤ m`.
    #[serde(rename = "EQ5")]
    Eq5,
    /// `F_n^2 + F_{n+1}^2 = F_{2n+1}`.
    #[serde(rename = "LEMMA21")]
    Lemma21,
    /// `L_n^2 = 4(-1)^n + 5 F_n^2`.
    #[serde(rename = "LUCAS_FIB_LINK")]
    LucasFibLink,
    /// `L_n^2 + L_{n+1}^2 = 5 F_{2n+1}`.
    #[serde(rename = "PYTH_LINK")]
    PythLink,
    /// `F_{5a} = 5 F_a (5 F_a^4 + 5(-1)^a F_a^2 + 1)`.
    #[serde(rename = "F5ALPHA")]
    F5Alpha,
    /// `gcd(L_n, L_{n+1}) = 1`.
    #[serde(rename = "COPRIME_CONSECUTIVE")]
    CoprimeConsecutive,
    /// `gcd(F_a, 5 F_a^4 + 5(-1)^a F_a^2 + 1) = 1`.
    #[serde(rename = "GCD_FALPHA")]
    GcdFAlpha,
    /// Jacobi certificate that `L_n != 3x^2` for `n = 2 (mod 4)`, `n > 2`.
    #[serde(rename = "LEMMA32_REPLAY")]
    Lemma32Replay,
    /// The same certificate restricted to the `n = 2 + 2·3^a·m` modulus.
    #[serde(rename = "LEMMA32_PAPER_ROUTE")]
    Lemma32PaperRoute,
}

impl ClaimId {
    pub const ALL: [ClaimId; 13] = [
        ClaimId::Eq2Literal,
        ClaimId::Eq2Corrected,
        ClaimId::Eq3,
        ClaimId::Eq4,
        ClaimId::Eq5,
        ClaimId::Lemma21,
        ClaimId::LucasFibLink,
        ClaimId::PythLink,
        ClaimId::F5Alpha,
        ClaimId::CoprimeConsecutive,
        ClaimId::GcdFAlpha,
        ClaimId::Lemma32Replay,
        ClaimId::Lemma32PaperRoute,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            ClaimId::Eq2Literal => "EQ2_LITERAL",
            ClaimId::Eq2Corrected => "EQ2_CORRECTED",
            ClaimId::Eq3 => "EQ3",
            ClaimId::Eq4 => "EQ4",
            ClaimId::Eq5 => "EQ5",
            ClaimId::Lemma21 => "LEMMA21",
            ClaimId::LucasFibLink => "LUCAS_FIB_LINK",
            ClaimId::PythLink => "PYTH_LINK",
            ClaimId::F5Alpha => "F5ALPHA",
            ClaimId::CoprimeConsecutive => "COPRIME_CONSECUTIVE",
            ClaimId::GcdFAlpha => "GCD_FALPHA",
            ClaimId::Lemma32Replay => "LEMMA32_REPLAY",
            ClaimId::Lemma32PaperRoute => "LEMMA32_PAPER_ROUTE",
        }
    }

    pub fn description(self) -> &'static str {
        match self {
            ClaimId::Eq2Literal => "2 | L_n iff 3 does not divide n (as printed)",
            ClaimId::Eq2Corrected => "2 | L_n iff 3 | n",
            ClaimId::Eq3 => "3 | L_n implies n = 2 (mod 4)",
            ClaimId::Eq4 => "2 | n and 3 does not divide n implies L_n = 3 (mod 4)",
            ClaimId::Eq5 => "L_{n+2m} = -L_n (mod L_m) for 2 | m, 3 not dividing m",
            ClaimId::Lemma21 => "F_n^2 + F_{n+1}^2 = F_{2n+1}",
            ClaimId::LucasFibLink => "L_n^2 = 4(-1)^n + 5 F_n^2",
            ClaimId::PythLink => "L_n^2 + L_{n+1}^2 = 5 F_{2n+1}",
            ClaimId::F5Alpha => "F_{5a} = 5 F_a (5 F_a^4 + 5(-1)^a F_a^2 + 1)",
            ClaimId::CoprimeConsecutive => "gcd(L_n, L_{n+1}) = 1",
            ClaimId::GcdFAlpha => "gcd(F_a, 5 F_a^4 + 5(-1)^a F_a^2 + 1) = 1",
            ClaimId::Lemma32Replay => {
                "jacobi certificate (3 L_n / L_m) = -1 for n = 2 (mod 4), n > 2"
            }
            ClaimId::Lemma32PaperRoute => "jacobi certificate using only m from n = 2 + 2 3^a m",
        }
    }
}

impl fmt::Display for ClaimId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// A point at which a claim was found false.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Counterexample {
    Index(Index),
    Shift { m: Index, n: Index },
}

impl fmt::Display for Counterexample {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Counterexample::Index(n) => write!(f, "{n}"),
            Counterexample::Shift { m, n } => write!(f, "(m={m},n={n})"),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "UPPERCASE")]
pub enum Status {
    Pass,
    Fail,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Pass => "PASS",
            Status::Fail => "FAIL",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub claim_id: ClaimId,
    pub range_lo: Index,
    pub range_hi: Index,
    pub status: Status,
    /// Total number of counterexamples found, including truncated ones.
    pub count: u64,
    /// The first `cap` counterexamples in ascending order.
    pub counterexamples: Vec<Counterexample>,
}

impl VerificationReport {
    /// Builds a report from every counterexample found. The list is sorted
    /// and deduplicated, so the result does not depend on how a sweep was
    /// partitioned.
    pub fn from_counterexamples(
        claim_id: ClaimId,
        range_lo: Index,
        range_hi: Index,
        mut found: Vec<Counterexample>,
        cap: usize,
    ) -> Self {
        found.sort_unstable();
        found.dedup();
        let count = found.len() as u64;
        found.truncate(cap);
        VerificationReport {
            claim_id,
            range_lo,
            range_hi,
            status: if count == 0 {
                Status::Pass
            } else {
                Status::Fail
            },
            count,
            counterexamples: found,
        }
    }

    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }

    pub fn is_truncated(&self) -> bool {
        (self.counterexamples.len() as u64) < self.count
    }
}
