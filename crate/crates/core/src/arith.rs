//! Integer square roots, `k * x^2` form detection, gcd, the Jacobi symbol
//! and the cofactor gcd behind the `a^p + b^p` splitting argument.

use num_bigint::{BigInt, Sign};
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::sequences::Natural;

/// Floor square root by Newton iteration.
///
/// Starts from a power of two at or above `sqrt(n)`; from there the
/// iterates decrease strictly until they reach the floor, so the first
/// non-decrease ends the loop.
pub fn isqrt(n: &Natural) -> Natural {
    if n.is_zero() {
        return Natural::zero();
    }
    if let Some(small) = n.to_u64() {
        return Natural::from(isqrt_u64(small));
    }
    let bits = n.bits();
    let mut x = Natural::one() << bits.div_ceil(2);
    loop {
        let y = (&x + n / &x) >> 1usize;
        if y >= x {
            return x;
        }
        x = y;
    }
}

fn isqrt_u64(n: u64) -> u64 {
    let mut r = (n as f64).sqrt() as u64;
    while r.checked_mul(r).is_none_or(|sq| sq > n) {
        r -= 1;
    }
    while (r + 1).checked_mul(r + 1).is_some_and(|sq| sq <= n) {
        r += 1;
    }
    r
}

// Quadratic residue tables. A value whose residue is not a square mod
// 64, 63, 65 or 11 cannot be a square; survivors go to isqrt.
const fn square_table<const M: usize>() -> [bool; M] {
    let mut t = [false; M];
    let mut i = 0;
    while i < M {
        t[(i * i) % M] = true;
        i += 1;
    }
    t
}

static SQ64: [bool; 64] = square_table::<64>();
static SQ63: [bool; 63] = square_table::<63>();
static SQ65: [bool; 65] = square_table::<65>();
static SQ11: [bool; 11] = square_table::<11>();

fn may_be_square(n: &Natural) -> bool {
    let low = n.iter_u64_digits().next().unwrap_or(0);
    if !SQ64[(low & 63) as usize] {
        return false;
    }
    // 63 * 65 * 11 fits comfortably in u64
    let r = (n % 45_045u32).to_u64().unwrap_or(0);
    SQ63[(r % 63) as usize] && SQ65[(r % 65) as usize] && SQ11[(r % 11) as usize]
}

/// `Some(r)` with `r * r == n`, or `None`.
pub fn exact_sqrt(n: &Natural) -> Option<Natural> {
    if !may_be_square(n) {
        return None;
    }
    let r = isqrt(n);
    (&r * &r == *n).then_some(r)
}

pub fn is_square(n: &Natural) -> bool {
    exact_sqrt(n).is_some()
}

/// Outcome of testing `n = k * x^2`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FormWitness {
    pub k: Natural,
    /// The witness `x`, present exactly when the form holds.
    pub x: Option<Natural>,
}

impl FormWitness {
    pub fn holds(&self) -> bool {
        self.x.is_some()
    }
}

pub fn is_k_times_square(n: &Natural, k: &Natural) -> Result<FormWitness> {
    if k.is_zero() {
        return Err(Error::ZeroFormCoefficient);
    }
    let (q, r) = n.div_rem(k);
    let x = if r.is_zero() { exact_sqrt(&q) } else { None };
    Ok(FormWitness { k: k.clone(), x })
}

/// `gcd(0, 0) = 0`.
pub fn gcd(a: &Natural, b: &Natural) -> Natural {
    a.gcd(b)
}

/// Value of a Jacobi symbol.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum JacobiValue {
    MinusOne,
    Zero,
    PlusOne,
}

impl JacobiValue {
    pub fn as_i8(self) -> i8 {
        match self {
            JacobiValue::MinusOne => -1,
            JacobiValue::Zero => 0,
            JacobiValue::PlusOne => 1,
        }
    }

    fn from_sign(s: i8) -> Self {
        if s < 0 {
            JacobiValue::MinusOne
        } else {
            JacobiValue::PlusOne
        }
    }

    fn times(self, other: JacobiValue) -> JacobiValue {
        match self.as_i8() * other.as_i8() {
            0 => JacobiValue::Zero,
            s => JacobiValue::from_sign(s),
        }
    }
}

fn check_jacobi_denominator(n: &Natural) -> Result<()> {
    if n.is_zero() || n.is_even() {
        return Err(Error::BadJacobiDenominator(n.to_string()));
    }
    Ok(())
}

/// `(-1/n) = (-1)^((n-1)/2)`.
pub fn jacobi_minus_one(n: &Natural) -> Result<JacobiValue> {
    check_jacobi_denominator(n)?;
    Ok(if n % 4u32 == Natural::from(3u32) {
        JacobiValue::MinusOne
    } else {
        JacobiValue::PlusOne
    })
}

/// Jacobi symbol `(a/n)` for a non-negative numerator, by the binary
/// reciprocity loop (no factorization of `n`).
pub fn jacobi_natural(a: &Natural, n: &Natural) -> Result<JacobiValue> {
    check_jacobi_denominator(n)?;
    let mut a = a % n;
    let mut n = n.clone();
    let mut sign: i8 = 1;
    while !a.is_zero() {
        let tz = a.trailing_zeros().unwrap_or(0);
        a >>= tz;
        let n8 = (&n % 8u32).to_u32().unwrap_or(0);
        if tz % 2 == 1 && (n8 == 3 || n8 == 5) {
            sign = -sign;
        }
        std::mem::swap(&mut a, &mut n);
        let a4 = (&a % 4u32).to_u32().unwrap_or(0);
        let n4 = (&n % 4u32).to_u32().unwrap_or(0);
        if a4 == 3 && n4 == 3 {
            sign = -sign;
        }
        a %= &n;
    }
    Ok(if n.is_one() {
        JacobiValue::from_sign(sign)
    } else {
        JacobiValue::Zero
    })
}

/// Jacobi symbol `(a/n)` for any integer `a`. A negative numerator is
/// split as `(-1/n) * (|a|/n)`.
pub fn jacobi(a: &BigInt, n: &Natural) -> Result<JacobiValue> {
    check_jacobi_denominator(n)?;
    let magnitude = jacobi_natural(a.magnitude(), n)?;
    if a.sign() == Sign::Minus {
        Ok(jacobi_minus_one(n)?.times(magnitude))
    } else {
        Ok(magnitude)
    }
}

/// Convenience wrapper for machine integers.
pub fn jacobi_i64(a: i64, n: u64) -> Result<JacobiValue> {
    jacobi(&BigInt::from(a), &Natural::from(n))
}

/// Trial division. Inputs here are tiny exponents, so nothing smarter is
/// warranted.
pub fn is_odd_prime(p: u64) -> bool {
    if p < 3 || p.is_multiple_of(2) {
        return false;
    }
    let mut d = 3u64;
    while d.saturating_mul(d) <= p {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 2;
    }
    true
}

/// `gcd(a + b, (a^p + b^p) / (a + b))` for coprime `a, b` and an odd
/// prime `p`. Always `1` or `p`, namely `gcd(a + b, p)`.
pub fn zhang_cofactor_gcd(a: &Natural, b: &Natural, p: u64) -> Result<Natural> {
    if !is_odd_prime(p) {
        return Err(Error::NotOddPrime(p));
    }
    let sum = a + b;
    if sum.is_zero() {
        return Err(Error::ZeroSum);
    }
    if !gcd(a, b).is_one() {
        return Err(Error::NotCoprime {
            a: a.to_string(),
            b: b.to_string(),
        });
    }
    let exp = u32::try_from(p).map_err(|_| Error::NotOddPrime(p))?;
    let (cofactor, rem) = (a.pow(exp) + b.pow(exp)).div_rem(&sum);
    debug_assert!(rem.is_zero(), "a + b divides a^p + b^p for odd p");
    Ok(gcd(&sum, &cofactor))
}

/// Reduce a signed integer into `[0, n)`.
pub fn reduce_signed(a: &BigInt, n: &Natural) -> Natural {
    let m = BigInt::from_biguint(Sign::Plus, n.clone());
    let r = a.mod_floor(&m);
    debug_assert!(!r.is_negative());
    r.magnitude().clone()
}
