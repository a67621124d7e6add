//! Exhaustive bounded search for every equation in the classification:
//! `L_n^a + L_{n+1}^a = x^2`, `L_n = k x^2`, `F_n = k x^2`,
//! `L_n^2 + L_{n+1}^2 = x^2`, Catalan's `a^x - b^y = 1`, and primitive
//! `a^n + b^n = x^2`.
//!
//! Everything here is plain enumeration with exact arithmetic. Searches
//! are split by the outer index and merged into ordered sets, so the
//! output does not depend on how rayon schedules the pieces.

use std::collections::{BTreeSet, HashMap};

use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::arith::{exact_sqrt, gcd, is_k_times_square};
use crate::error::{Error, Result};
use crate::sequences::{fibonacci, lucas, pairs, Index, Natural};

pub const DEFAULT_N_MAX: Index = 200;
pub const DEFAULT_ALPHA_MAX: u32 = 12;

/// Indices per work unit in the form scans.
const CHUNK: Index = 256;

/// `L_n^alpha + L_{n+1}^alpha = x^2`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct SolutionTriple {
    pub n: Index,
    pub alpha: u32,
    pub x: Natural,
}

impl SolutionTriple {
    pub fn satisfies(&self) -> bool {
        let lhs = lucas(self.n).pow(self.alpha) + lucas(self.n + 1).pow(self.alpha);
        lhs == &self.x * &self.x
    }
}

/// A sequence value at `n` equal to `form_k * x^2`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct IndexSolution {
    pub n: Index,
    pub x: Natural,
    pub form_k: u64,
}

/// `a^x - b^y = 1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct CatalanSolution {
    pub a: u64,
    pub b: u64,
    pub x: u32,
    pub y: u32,
}

impl CatalanSolution {
    pub fn satisfies(&self) -> bool {
        Natural::from(self.a).pow(self.x) == Natural::from(self.b).pow(self.y) + 1u32
    }
}

/// Primitive `a^n + b^n = x^2`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct PoonenSolution {
    pub a: u64,
    pub b: u64,
    pub x: Natural,
    pub n: u32,
}

impl PoonenSolution {
    pub fn satisfies(&self) -> bool {
        let lhs = Natural::from(self.a).pow(self.n) + Natural::from(self.b).pow(self.n);
        let g = gcd(
            &gcd(&Natural::from(self.a), &Natural::from(self.b)),
            &self.x,
        );
        lhs == &self.x * &self.x && g.is_one()
    }
}

/// Every `(n, alpha, x)` with `n <= n_max`, `alpha <= alpha_max` and
/// `L_n^alpha + L_{n+1}^alpha` a perfect square.
pub fn solve_main(n_max: Index, alpha_max: u32) -> BTreeSet<SolutionTriple> {
    (0..=n_max)
        .into_par_iter()
        .flat_map_iter(|n| {
            let a = lucas(n);
            let b = lucas(n + 1);
            let mut pa = Natural::one();
            let mut pb = Natural::one();
            let mut found = Vec::new();
            for alpha in 0..=alpha_max {
                if alpha > 0 {
                    pa *= &a;
                    pb *= &b;
                }
                if let Some(x) = exact_sqrt(&(&pa + &pb)) {
                    found.push(SolutionTriple { n, alpha, x });
                }
            }
            found
        })
        .collect()
}

/// Which sequence a form scan runs over.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Sequence {
    Lucas,
    Fib,
}

impl Sequence {
    pub fn as_str(self) -> &'static str {
        match self {
            Sequence::Lucas => "lucas",
            Sequence::Fib => "fib",
        }
    }

    pub fn supported_forms(self) -> &'static [u64] {
        match self {
            Sequence::Lucas => &[1, 2, 3],
            Sequence::Fib => &[1, 2, 5],
        }
    }

    /// Solutions known in closed form, as `(n, x)` over all `n >= 0`.
    pub fn known_solutions(self, k: u64) -> Option<&'static [(Index, u64)]> {
        Some(match (self, k) {
            (Sequence::Lucas, 1) => &[(1, 1), (3, 2)],
            (Sequence::Lucas, 2) => &[(0, 1), (6, 3)],
            (Sequence::Lucas, 3) => &[(2, 1)],
            (Sequence::Fib, 1) => &[(0, 0), (1, 1), (2, 1), (12, 12)],
            (Sequence::Fib, 2) => &[(0, 0), (3, 1), (6, 2)],
            (Sequence::Fib, 5) => &[(5, 1)],
            _ => return None,
        })
    }

    /// First index scanned. `F_0 = 0 = 5 * 0^2` is degenerate and the
    /// `F_n = 5x^2` classification covers positive `n` only.
    fn first_index(self, k: u64) -> Index {
        match (self, k) {
            (Sequence::Fib, 5) => 1,
            _ => 0,
        }
    }
}

fn check_form(seq: Sequence, k: u64) -> Result<()> {
    if seq.supported_forms().contains(&k) {
        Ok(())
    } else {
        Err(Error::UnsupportedForm {
            sequence: seq.as_str(),
            k,
        })
    }
}

fn scan_form(seq: Sequence, k: u64, lo: Index, hi: Index) -> BTreeSet<IndexSolution> {
    if lo > hi {
        return BTreeSet::new();
    }
    let kk = Natural::from(k);
    let chunks = (hi - lo) / CHUNK + 1;
    (0..chunks)
        .into_par_iter()
        .flat_map_iter(|c| {
            let start = lo + c * CHUNK;
            let end = (start + CHUNK - 1).min(hi);
            let kk = kk.clone();
            pairs(start, end).filter_map(move |(n, f, l)| {
                let v = match seq {
                    Sequence::Lucas => l,
                    Sequence::Fib => f,
                };
                let w = is_k_times_square(&v, &kk).expect("k >= 1");
                w.x.map(|x| IndexSolution { n, x, form_k: k })
            })
        })
        .collect()
}

/// All `n <= n_max` with `L_n = k x^2`, `k` in `{1, 2, 3}`.
pub fn solve_lucas_form(k: u64, n_max: Index) -> Result<BTreeSet<IndexSolution>> {
    check_form(Sequence::Lucas, k)?;
    Ok(scan_form(
        Sequence::Lucas,
        k,
        Sequence::Lucas.first_index(k),
        n_max,
    ))
}

/// All `n <= n_max` with `F_n = k x^2`, `k` in `{1, 2, 5}`.
pub fn solve_fib_form(k: u64, n_max: Index) -> Result<BTreeSet<IndexSolution>> {
    check_form(Sequence::Fib, k)?;
    Ok(scan_form(
        Sequence::Fib,
        k,
        Sequence::Fib.first_index(k),
        n_max,
    ))
}

pub fn solve_form(seq: Sequence, k: u64, n_max: Index) -> Result<BTreeSet<IndexSolution>> {
    match seq {
        Sequence::Lucas => solve_lucas_form(k, n_max),
        Sequence::Fib => solve_fib_form(k, n_max),
    }
}

/// `L_n^2 + L_{n+1}^2 = x^2` by testing the sum directly.
pub fn pythagorean_direct(n_max: Index) -> BTreeSet<IndexSolution> {
    (0..=n_max)
        .into_par_iter()
        .filter_map(|n| {
            let a = lucas(n);
            let b = lucas(n + 1);
            exact_sqrt(&(&a * &a + &b * &b)).map(|x| IndexSolution { n, x, form_k: 1 })
        })
        .collect()
}

/// The same equation through `L_n^2 + L_{n+1}^2 = 5 F_{2n+1}`: a square
/// needs `5 | x`, so `F_{2n+1} = 5 k^2` and `x = 5k`.
pub fn pythagorean_reduced(n_max: Index) -> BTreeSet<IndexSolution> {
    let five = Natural::from(5u32);
    (0..=n_max)
        .into_par_iter()
        .filter_map(|n| {
            let w = is_k_times_square(&fibonacci(2 * n + 1), &five).expect("k = 5");
            w.x.map(|k| IndexSolution {
                n,
                x: k * 5u32,
                form_k: 1,
            })
        })
        .collect()
}

/// Solutions of `L_n^2 + L_{n+1}^2 = x^2`, after checking that the direct
/// and reduced searches agree.
pub fn solve_pythagorean(n_max: Index) -> Result<BTreeSet<IndexSolution>> {
    let direct = pythagorean_direct(n_max);
    let reduced = pythagorean_reduced(n_max);
    if direct != reduced {
        return Err(Error::InvalidBound(format!(
            "direct and reduced searches disagree up to n = {n_max}"
        )));
    }
    Ok(direct)
}

/// Every `a^x - b^y = 1` with `2 <= a, b <= base_max`, `2 <= x, y <= exp_max`.
pub fn catalan_search(base_max: u64, exp_max: u32) -> Result<BTreeSet<CatalanSolution>> {
    if base_max < 2 || exp_max < 2 {
        return Err(Error::InvalidBound(format!(
            "catalan search needs base_max, exp_max >= 2 (got {base_max}, {exp_max})"
        )));
    }
    // a value may have several representations (16 = 2^4 = 4^2)
    let mut powers: HashMap<Natural, Vec<(u64, u32)>> = HashMap::new();
    for b in 2..=base_max {
        let base = Natural::from(b);
        let mut p = &base * &base;
        for y in 2..=exp_max {
            powers.entry(p.clone()).or_default().push((b, y));
            p *= &base;
        }
    }
    let powers = &powers;
    Ok((2..=base_max)
        .into_par_iter()
        .flat_map_iter(|a| {
            let base = Natural::from(a);
            let mut p = &base * &base;
            let mut found = Vec::new();
            for x in 2..=exp_max {
                let below = &p - 1u32;
                if let Some(reps) = powers.get(&below) {
                    found.extend(reps.iter().map(|&(b, y)| CatalanSolution { a, b, x, y }));
                }
                p *= &base;
            }
            found
        })
        .collect())
}

/// Primitive solutions of `a^n + b^n = x^2` with `1 <= a, b <= ab_max`,
/// `n_lo <= n <= n_hi` and `gcd(a, b, x) = 1`.
pub fn poonen_search(n_lo: u32, n_hi: u32, ab_max: u64) -> Result<BTreeSet<PoonenSolution>> {
    if n_lo < 4 || ab_max < 1 {
        return Err(Error::InvalidBound(format!(
            "poonen search needs n_lo >= 4 and ab_max >= 1 (got {n_lo}, {ab_max})"
        )));
    }
    if n_lo > n_hi {
        return Ok(BTreeSet::new());
    }
    let mut found = BTreeSet::new();
    for n in n_lo..=n_hi {
        let powers: Vec<Natural> = (0..=ab_max).map(|v| Natural::from(v).pow(n)).collect();
        let powers = &powers;
        let part: Vec<PoonenSolution> = (1..=ab_max)
            .into_par_iter()
            .flat_map_iter(|a| {
                (1..=ab_max).filter_map(move |b| {
                    let x = exact_sqrt(&(&powers[a as usize] + &powers[b as usize]))?;
                    let g = x.gcd(&Natural::from(a.gcd(&b)));
                    g.is_one().then_some(PoonenSolution { a, b, x, n })
                })
            })
            .collect();
        found.extend(part);
    }
    Ok(found)
}

/// The five cases of the classification of `L_n^a + L_{n+1}^a = x^2`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum AlphaCase {
    /// `a = 0`: `2 = x^2`.
    Unsatisfiable,
    /// `a = 1`: `L_{n+2} = x^2`.
    LucasSquare,
    /// `a = 2`: `F_{2n+1} = 5 k^2`, `x = 5k`.
    FibFiveSquare,
    /// `a = 3`: `L_{n+2} = x^2` or `L_{n+2} = 3 x^2`.
    CofactorSplit,
    /// `a >= 4`: no primitive solutions, and consecutive Lucas numbers are
    /// coprime.
    PrimitiveVacuous { alpha: u32 },
}

impl AlphaCase {
    pub fn label(self) -> &'static str {
        match self {
            AlphaCase::Unsatisfiable => "i",
            AlphaCase::LucasSquare => "ii",
            AlphaCase::FibFiveSquare => "iii",
            AlphaCase::CofactorSplit => "iv",
            AlphaCase::PrimitiveVacuous { .. } => "v",
        }
    }

    pub fn reduction(self) -> &'static str {
        match self {
            AlphaCase::Unsatisfiable => "2 = x^2, unsatisfiable",
            AlphaCase::LucasSquare => "L_{n+2} = x^2",
            AlphaCase::FibFiveSquare => "F_{2n+1} = 5k^2 with x = 5k",
            AlphaCase::CofactorSplit => "L_{n+2} = x^2 or L_{n+2} = 3x^2",
            AlphaCase::PrimitiveVacuous { .. } => {
                "vacuous: gcd(L_n, L_{n+1}) = 1 and no primitive a^p + b^p = x^2 for p >= 4"
            }
        }
    }

    /// The indices `n <= n_max` the reduced equation leaves open. Any
    /// solution of the main equation with this exponent must be among them.
    pub fn candidates(self, n_max: Index) -> BTreeSet<Index> {
        let shifted = |k: u64| -> BTreeSet<Index> {
            solve_lucas_form(k, n_max + 2)
                .expect("supported form")
                .into_iter()
                .filter(|s| s.n >= 2)
                .map(|s| s.n - 2)
                .collect()
        };
        match self {
            AlphaCase::Unsatisfiable => BTreeSet::new(),
            AlphaCase::LucasSquare => shifted(1),
            AlphaCase::FibFiveSquare => solve_fib_form(5, 2 * n_max + 1)
                .expect("supported form")
                .into_iter()
                .filter(|s| s.n % 2 == 1)
                .map(|s| (s.n - 1) / 2)
                .collect(),
            AlphaCase::CofactorSplit => {
                let mut c = shifted(1);
                c.extend(shifted(3));
                c
            }
            AlphaCase::PrimitiveVacuous { .. } => (0..=n_max)
                .into_par_iter()
                .filter(|&n| !gcd(&lucas(n), &lucas(n + 1)).is_one())
                .collect(),
        }
    }
}

pub fn classify_alpha_case(alpha: u32) -> AlphaCase {
    match alpha {
        0 => AlphaCase::Unsatisfiable,
        1 => AlphaCase::LucasSquare,
        2 => AlphaCase::FibFiveSquare,
        3 => AlphaCase::CofactorSplit,
        _ => AlphaCase::PrimitiveVacuous { alpha },
    }
}

/// The solutions the classification predicts, `(n, alpha, x)`.
pub const EXPECTED_MAIN: [(Index, u32, u64); 3] = [(0, 3, 3), (1, 1, 2), (2, 2, 5)];

/// `F_60` is not of the form `5 x^2`.
pub fn f60_is_five_square() -> bool {
    is_k_times_square(&fibonacci(60), &Natural::from(5u32))
        .expect("k = 5")
        .holds()
}

/// Small helper for callers that want machine integers back.
pub fn natural_to_u64(x: &Natural) -> Option<u64> {
    if x.is_zero() {
        Some(0)
    } else {
        x.to_u64()
    }
}
