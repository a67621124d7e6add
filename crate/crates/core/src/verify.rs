//! Bounded sweeps of the identities and congruences, and the step-by-step
//! replay of the Jacobi argument showing `L_n != 3x^2` for `n > 2`.
//!
//! Every claim has a single-point predicate (`*_holds`) that the sweeps
//! call and that can be re-run on any reported counterexample. Sweeps
//! split their range across the rayon pool; reports sort and dedup the
//! union, so results do not depend on scheduling.

use num_traits::{One, Zero};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::arith::{gcd, jacobi_natural, JacobiValue};
use crate::error::{Error, Result};
use crate::report::{ClaimId, Counterexample, VerificationReport, DEFAULT_CAP};
use crate::sequences::{fib_lucas_pair, fibonacci, lucas, lucas_mod, Index, Natural};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SweepConfig {
    /// Counterexamples listed per report; the total is always kept.
    pub cap: usize,
}

impl Default for SweepConfig {
    fn default() -> Self {
        SweepConfig { cap: DEFAULT_CAP }
    }
}

fn check_range(lo: Index, hi: Index) -> Result<()> {
    if lo > hi {
        return Err(Error::EmptyRange { lo, hi });
    }
    Ok(())
}

fn sweep<P>(
    claim: ClaimId,
    lo: Index,
    hi: Index,
    cfg: SweepConfig,
    holds: P,
) -> Result<VerificationReport>
where
    P: Fn(Index) -> bool + Sync + Send,
{
    check_range(lo, hi)?;
    let found: Vec<Counterexample> = (lo..=hi)
        .into_par_iter()
        .filter(|&n| !holds(n))
        .map(Counterexample::Index)
        .collect();
    Ok(VerificationReport::from_counterexamples(
        claim, lo, hi, found, cfg.cap,
    ))
}

fn small(v: u32) -> Natural {
    Natural::from(v)
}

fn residue_u32(n: Index, m: u32) -> u32 {
    let r = lucas_mod(n, &small(m)).expect("modulus is at least 2");
    u32::try_from(r.value()).expect("residue below a u32 modulus")
}

// ---- single-point predicates ----

pub fn sum_squares_holds(n: Index) -> bool {
    let a = fibonacci(n);
    let b = fibonacci(n + 1);
    &a * &a + &b * &b == fibonacci(2 * n + 1)
}

pub fn divisibility_2_literal_holds(n: Index) -> bool {
    (residue_u32(n, 2) == 0) == !n.is_multiple_of(3)
}

pub fn divisibility_2_corrected_holds(n: Index) -> bool {
    (residue_u32(n, 2) == 0) == n.is_multiple_of(3)
}

pub fn divisibility_3_holds(n: Index) -> bool {
    residue_u32(n, 3) != 0 || n % 4 == 2
}

pub fn mod4_holds(n: Index) -> bool {
    !(n.is_multiple_of(2) && !n.is_multiple_of(3)) || residue_u32(n, 4) == 3
}

fn check_shift_modulus(m: Index) -> Result<()> {
    if !m.is_multiple_of(2) || m.is_multiple_of(3) {
        return Err(Error::InvalidShiftModulus(m));
    }
    Ok(())
}

pub fn shift_congruence_holds(m: Index, n: Index) -> Result<bool> {
    check_shift_modulus(m)?;
    let lm = lucas(m);
    Ok(shift_congruence_with(&lm, m, n))
}

fn shift_congruence_with(lm: &Natural, m: Index, n: Index) -> bool {
    let shifted = lucas_mod(n + 2 * m, lm).expect("L_m >= 3 for valid m");
    let base = lucas_mod(n, lm).expect("L_m >= 3 for valid m");
    shifted == base.neg()
}

pub fn lucas_fib_link_holds(n: Index) -> bool {
    let (f, l) = fib_lucas_pair(n);
    let lhs = &l * &l;
    let five_f2 = &f * &f * 5u32;
    if n.is_multiple_of(2) {
        lhs == five_f2 + 4u32
    } else {
        lhs + 4u32 == five_f2
    }
}

pub fn pyth_link_holds(n: Index) -> bool {
    let a = lucas(n);
    let b = lucas(n + 1);
    &a * &a + &b * &b == fibonacci(2 * n + 1) * 5u32
}

/// `5 F^4 + 5(-1)^a F^2 + 1` for `F = F_a`.
pub fn f5alpha_cofactor(alpha: Index, f: &Natural) -> Natural {
    let f2 = f * f;
    let quartic = &f2 * &f2 * 5u32 + 1u32;
    let middle = f2 * 5u32;
    if alpha.is_multiple_of(2) {
        quartic + middle
    } else {
        // 5F^4 >= 5F^2 for every natural F
        quartic - middle
    }
}

pub fn f5alpha_holds(alpha: Index) -> bool {
    let f = fibonacci(alpha);
    let rhs = &f * f5alpha_cofactor(alpha, &f) * 5u32;
    fibonacci(5 * alpha) == rhs
}

pub fn coprime_consecutive_holds(n: Index) -> bool {
    gcd(&lucas(n), &lucas(n + 1)).is_one()
}

pub fn gcd_falpha_holds(alpha: Index) -> bool {
    let f = fibonacci(alpha);
    gcd(&f, &f5alpha_cofactor(alpha, &f)).is_one()
}

/// Re-evaluates a claim at a single point. `None` when the point does not
/// fit the claim's shape.
pub fn claim_holds_at(claim: ClaimId, point: Counterexample) -> Option<bool> {
    use Counterexample::{Index as At, Shift};
    Some(match (claim, point) {
        (ClaimId::Eq2Literal, At(n)) => divisibility_2_literal_holds(n),
        (ClaimId::Eq2Corrected, At(n)) => divisibility_2_corrected_holds(n),
        (ClaimId::Eq3, At(n)) => divisibility_3_holds(n),
        (ClaimId::Eq4, At(n)) => mod4_holds(n),
        (ClaimId::Eq5, Shift { m, n }) => shift_congruence_holds(m, n).ok()?,
        (ClaimId::Lemma21, At(n)) => sum_squares_holds(n),
        (ClaimId::LucasFibLink, At(n)) => lucas_fib_link_holds(n),
        (ClaimId::PythLink, At(n)) => pyth_link_holds(n),
        (ClaimId::F5Alpha, At(a)) => f5alpha_holds(a),
        (ClaimId::CoprimeConsecutive, At(n)) => coprime_consecutive_holds(n),
        (ClaimId::GcdFAlpha, At(a)) => gcd_falpha_holds(a),
        (ClaimId::Lemma32Replay, At(n)) => replay_lemma32(n).ok()?,
        (ClaimId::Lemma32PaperRoute, At(n)) => replay_lemma32_paper_route(n).ok()?.holds(),
        _ => return None,
    })
}

// ---- sweeps ----

pub fn verify_sum_squares(lo: Index, hi: Index, cfg: SweepConfig) -> Result<VerificationReport> {
    sweep(ClaimId::Lemma21, lo, hi, cfg, sum_squares_holds)
}

/// `literal = true` sweeps the printed biconditional `2 | L_n <=> 3 ∤ n`;
/// `literal = false` sweeps `2 | L_n <=> 3 | n`.
pub fn verify_divisibility_2(
    lo: Index,
    hi: Index,
    literal: bool,
    cfg: SweepConfig,
) -> Result<VerificationReport> {
    if literal {
        sweep(
            ClaimId::Eq2Literal,
            lo,
            hi,
            cfg,
            divisibility_2_literal_holds,
        )
    } else {
        sweep(
            ClaimId::Eq2Corrected,
            lo,
            hi,
            cfg,
            divisibility_2_corrected_holds,
        )
    }
}

pub fn verify_divisibility_3(lo: Index, hi: Index, cfg: SweepConfig) -> Result<VerificationReport> {
    sweep(ClaimId::Eq3, lo, hi, cfg, divisibility_3_holds)
}

pub fn verify_mod4(lo: Index, hi: Index, cfg: SweepConfig) -> Result<VerificationReport> {
    sweep(ClaimId::Eq4, lo, hi, cfg, mod4_holds)
}

pub fn verify_shift_congruence(
    m_list: &[Index],
    n_lo: Index,
    n_hi: Index,
    cfg: SweepConfig,
) -> Result<VerificationReport> {
    check_range(n_lo, n_hi)?;
    for &m in m_list {
        check_shift_modulus(m)?;
    }
    let found: Vec<Counterexample> = m_list
        .par_iter()
        .flat_map_iter(|&m| {
            let lm = lucas(m);
            (n_lo..=n_hi)
                .filter(move |&n| !shift_congruence_with(&lm, m, n))
                .map(move |n| Counterexample::Shift { m, n })
        })
        .collect();
    Ok(VerificationReport::from_counterexamples(
        ClaimId::Eq5,
        n_lo,
        n_hi,
        found,
        cfg.cap,
    ))
}

pub fn verify_lucas_fib_link(lo: Index, hi: Index, cfg: SweepConfig) -> Result<VerificationReport> {
    sweep(ClaimId::LucasFibLink, lo, hi, cfg, lucas_fib_link_holds)
}

pub fn verify_pyth_link(lo: Index, hi: Index, cfg: SweepConfig) -> Result<VerificationReport> {
    sweep(ClaimId::PythLink, lo, hi, cfg, pyth_link_holds)
}

pub fn verify_f5alpha(lo: Index, hi: Index, cfg: SweepConfig) -> Result<VerificationReport> {
    sweep(ClaimId::F5Alpha, lo, hi, cfg, f5alpha_holds)
}

pub fn verify_coprime_consecutive(
    lo: Index,
    hi: Index,
    cfg: SweepConfig,
) -> Result<VerificationReport> {
    sweep(
        ClaimId::CoprimeConsecutive,
        lo,
        hi,
        cfg,
        coprime_consecutive_holds,
    )
}

pub fn verify_gcd_falpha(lo: Index, hi: Index, cfg: SweepConfig) -> Result<VerificationReport> {
    sweep(ClaimId::GcdFAlpha, lo, hi, cfg, gcd_falpha_holds)
}

fn is_replayable(n: Index) -> bool {
    n > 2 && n % 4 == 2
}

/// Sweeps the Jacobi certificate over every `n = 2 (mod 4)`, `n > 2` in
/// `[lo, hi]`; other indices are outside the claim and skipped.
pub fn verify_lemma32_replay(lo: Index, hi: Index, cfg: SweepConfig) -> Result<VerificationReport> {
    sweep(ClaimId::Lemma32Replay, lo, hi, cfg, |n| {
        !is_replayable(n) || replay_lemma32(n).unwrap_or(false)
    })
}

pub fn verify_lemma32_paper_route(
    lo: Index,
    hi: Index,
    cfg: SweepConfig,
) -> Result<VerificationReport> {
    sweep(ClaimId::Lemma32PaperRoute, lo, hi, cfg, |n| {
        !is_replayable(n) || replay_lemma32_paper_route(n).is_ok_and(|s| s.holds())
    })
}

// ---- Jacobi replay ----

/// `n = 2 + 2 * 3^alpha * m` with `2 | m`, `3 ∤ m`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct ShiftDecomposition {
    pub alpha: u32,
    pub m: Index,
}

impl ShiftDecomposition {
    pub fn reconstruct(&self) -> Index {
        2 + 2 * 3u64.pow(self.alpha) * self.m
    }
}

pub fn decompose_shift(n: Index) -> Result<ShiftDecomposition> {
    if !is_replayable(n) {
        return Err(Error::InvalidShiftIndex(n));
    }
    let mut m = (n - 2) / 2;
    let mut alpha = 0;
    while m.is_multiple_of(3) {
        m /= 3;
        alpha += 1;
    }
    if !m.is_multiple_of(2) || m.is_multiple_of(3) {
        return Err(Error::InvalidShiftIndex(n));
    }
    Ok(ShiftDecomposition { alpha, m })
}

/// One attempt at the certificate with a fixed modulus index `m`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Lemma32Step {
    pub m: Index,
    pub lucas_m: Natural,
    /// `L_n mod L_m`.
    pub residue: Natural,
    /// `L_n = -3 (mod L_m)`.
    pub residue_is_minus_three: bool,
    /// `L_m = 3 (mod 4)`, so `(-1/L_m) = -1`.
    pub modulus_is_3_mod_4: bool,
    /// `(3 (L_n mod L_m) / L_m)`.
    pub jacobi: JacobiValue,
}

impl Lemma32Step {
    fn evaluate(n: Index, m: Index) -> Lemma32Step {
        let lucas_m = lucas(m);
        let residue = lucas_mod(n, &lucas_m)
            .expect("L_m >= 3 for even m")
            .value()
            .clone();
        let three = small(3);
        let minus_three = if lucas_m >= three {
            (&lucas_m - &three) % &lucas_m
        } else {
            Natural::zero()
        };
        let modulus_is_3_mod_4 = &lucas_m % 4u32 == three;
        let numerator = (&residue * 3u32) % &lucas_m;
        let jacobi = jacobi_natural(&numerator, &lucas_m).unwrap_or(JacobiValue::Zero);
        Lemma32Step {
            m,
            residue_is_minus_three: residue == minus_three,
            lucas_m,
            residue,
            modulus_is_3_mod_4,
            jacobi,
        }
    }

    /// All three checks pass, so `3 L_n` is a non-residue mod `L_m` and
    /// `L_n` cannot be `3x^2`.
    pub fn holds(&self) -> bool {
        self.residue_is_minus_three
            && self.modulus_is_3_mod_4
            && self.jacobi == JacobiValue::MinusOne
    }
}

/// Which modulus index certified the replay.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum ReplayRoute {
    /// `m` from [`decompose_shift`].
    Decomposition,
    /// `m = 2^s >= 4` with `n - 2 = 2m * odd`.
    PowerOfTwoBelow,
    /// `m = 2^s >= 4` with `n + 2 = 2m * odd`, using `L_{-2} = L_2`.
    PowerOfTwoAbove,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Lemma32Replay {
    pub n: Index,
    pub decomposition: ShiftDecomposition,
    /// The step with the decomposition's `m`.
    pub paper_step: Lemma32Step,
    pub route: ReplayRoute,
    /// The step that certifies `n` (equal to `paper_step` on that route).
    pub certificate: Lemma32Step,
}

impl Lemma32Replay {
    pub fn certified(&self) -> bool {
        self.certificate.holds()
    }
}

/// When `m = 2 (mod 4)` then `3 | L_m` and the decomposition's Jacobi
/// value is 0. A power-of-two `m' >= 4` always works instead: `3 ∤ L_m'`,
/// `L_m' = 3 (mod 4)`, and one of `n - 2`, `n + 2` is `2 m'` times an odd
/// number, giving `L_n = -L_{±2} = -3 (mod L_m')`.
fn power_of_two_modulus(n: Index) -> (ReplayRoute, Index) {
    let t = (n - 2) / 4;
    if t.is_multiple_of(2) {
        let s = t.trailing_zeros();
        (ReplayRoute::PowerOfTwoBelow, 1u64 << (s + 1))
    } else {
        let s = (t + 1).trailing_zeros();
        (ReplayRoute::PowerOfTwoAbove, 1u64 << (s + 1))
    }
}

pub fn replay_lemma32_steps(n: Index) -> Result<Lemma32Replay> {
    let decomposition = decompose_shift(n)?;
    let paper_step = Lemma32Step::evaluate(n, decomposition.m);
    let (route, certificate) = if paper_step.holds() {
        (ReplayRoute::Decomposition, paper_step.clone())
    } else {
        let (route, m) = power_of_two_modulus(n);
        (route, Lemma32Step::evaluate(n, m))
    };
    Ok(Lemma32Replay {
        n,
        decomposition,
        paper_step,
        route,
        certificate,
    })
}

/// True iff a Jacobi certificate shows `L_n != 3x^2`.
pub fn replay_lemma32(n: Index) -> Result<bool> {
    Ok(replay_lemma32_steps(n)?.certified())
}

/// The certificate attempted with the decomposition's `m` only.
pub fn replay_lemma32_paper_route(n: Index) -> Result<Lemma32Step> {
    let d = decompose_shift(n)?;
    Ok(Lemma32Step::evaluate(n, d.m))
}
