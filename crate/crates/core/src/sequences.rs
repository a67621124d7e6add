//! Lucas and Fibonacci numbers.
//!
//! Exact values come from the fast-doubling pair
//! `F_{2k} = F_k (2 F_{k+1} - F_k)`, `F_{2k+1} = F_k^2 + F_{k+1}^2`,
//! walked over the bits of `n` from the top. Lucas numbers follow from
//! `L_n = 2 F_{n+1} - F_n`, so one kernel serves both sequences and also
//! works over any modulus (no division by 2 is ever needed).

use num_bigint::BigUint;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Arbitrary precision non-negative integer.
pub type Natural = BigUint;

/// Sequence position. Machine width is plenty for every sweep we run.
pub type Index = u64;

/// A residue class `value mod modulus` with `0 <= value < modulus`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Residue {
    value: Natural,
    modulus: Natural,
}

impl Residue {
    pub fn new(value: Natural, modulus: Natural) -> Result<Self> {
        check_modulus(&modulus)?;
        Ok(Residue {
            value: value % &modulus,
            modulus,
        })
    }

    pub fn value(&self) -> &Natural {
        &self.value
    }

    pub fn modulus(&self) -> &Natural {
        &self.modulus
    }

    /// The additive inverse, `(-value) mod modulus`.
    pub fn neg(&self) -> Residue {
        let value = if self.value.is_zero() {
            Natural::zero()
        } else {
            &self.modulus - &self.value
        };
        Residue {
            value,
            modulus: self.modulus.clone(),
        }
    }
}

/// Returns `(F_n, F_{n+1})`.
fn fib_step_pair(n: Index) -> (Natural, Natural) {
    let mut a = Natural::zero();
    let mut b = Natural::one();
    if n == 0 {
        return (a, b);
    }
    let top = 63 - n.leading_zeros();
    for bit in (0..=top).rev() {
        // (a, b) = (F_k, F_{k+1}) -> (F_2k, F_2k+1)
        let two_b = &b << 1usize;
        let c = &a * (two_b - &a);
        let d = &a * &a + &b * &b;
        if (n >> bit) & 1 == 1 {
            b = c + &d;
            a = d;
        } else {
            a = c;
            b = d;
        }
    }
    (a, b)
}

/// Same walk as [`fib_step_pair`], every product reduced modulo `m`.
fn fib_step_pair_mod(n: Index, m: &Natural) -> (Natural, Natural) {
    let mut a = Natural::zero();
    let mut b = Natural::one() % m;
    if n == 0 {
        return (a, b);
    }
    let top = 63 - n.leading_zeros();
    for bit in (0..=top).rev() {
        // 2b - a, kept non-negative by adding m before subtracting
        let t = ((&b << 1usize) + m - &a) % m;
        let c = (&a * t) % m;
        let d = (&a * &a + &b * &b) % m;
        if (n >> bit) & 1 == 1 {
            b = (c + &d) % m;
            a = d;
        } else {
            a = c;
            b = d;
        }
    }
    (a, b)
}

fn check_modulus(m: &Natural) -> Result<()> {
    if *m < Natural::from(2u32) {
        return Err(Error::ModulusTooSmall(m.to_string()));
    }
    Ok(())
}

/// `(F_n, L_n)` in one fast-doubling pass.
pub fn fib_lucas_pair(n: Index) -> (Natural, Natural) {
    let (f, f_next) = fib_step_pair(n);
    let l = (f_next << 1usize) - &f;
    (f, l)
}

/// The `n`-th Fibonacci number, `F_0 = 0`, `F_1 = 1`.
pub fn fibonacci(n: Index) -> Natural {
    fib_step_pair(n).0
}

/// The `n`-th Lucas number, `L_0 = 2`, `L_1 = 1`.
pub fn lucas(n: Index) -> Natural {
    fib_lucas_pair(n).1
}

/// `L_n mod m` without materializing `L_n`.
pub fn lucas_mod(n: Index, m: &Natural) -> Result<Residue> {
    check_modulus(m)?;
    let (f, f_next) = fib_step_pair_mod(n, m);
    let value = ((f_next << 1usize) + m - f) % m;
    Ok(Residue {
        value,
        modulus: m.clone(),
    })
}

/// `F_n mod m` without materializing `F_n`.
pub fn fib_mod(n: Index, m: &Natural) -> Result<Residue> {
    check_modulus(m)?;
    let (value, _) = fib_step_pair_mod(n, m);
    Ok(Residue {
        value,
        modulus: m.clone(),
    })
}

/// Sign of a signed sequence value.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn as_i8(self) -> i8 {
        match self {
            Sign::Plus => 1,
            Sign::Minus => -1,
        }
    }
}

/// `L_{-n} = (-1)^n L_n`, split into sign and magnitude.
pub fn lucas_negative_reflect(n: Index) -> (Sign, Natural) {
    let sign = if n.is_multiple_of(2) {
        Sign::Plus
    } else {
        Sign::Minus
    };
    (sign, lucas(n))
}

/// Consecutive `(F_n, L_n)` pairs for `n` in `[lo, hi]`.
///
/// Seeded by fast doubling at `lo` and advanced by the recurrence, so a
/// sweep costs one addition per step instead of a fresh evaluation.
pub fn pairs(lo: Index, hi: Index) -> impl Iterator<Item = (Index, Natural, Natural)> {
    let (f0, l0) = fib_lucas_pair(lo);
    let (f1, l1) = fib_lucas_pair(lo + 1);
    let mut state = Some((f0, l0, f1, l1));
    (lo..=hi).map(move |n| {
        let (f, l, f_next, l_next) = state.take().expect("state is refilled every step");
        let f_after = &f + &f_next;
        let l_after = &l + &l_next;
        state = Some((f_next, l_next, f_after, l_after));
        (n, f, l)
    })
}
