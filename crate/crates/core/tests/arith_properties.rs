use std::collections::HashSet;

use lucasdio::arith::{
    gcd, is_k_times_square, isqrt, jacobi, jacobi_i64, zhang_cofactor_gcd, JacobiValue,
};
use lucasdio::sequences::Natural;
use num_bigint::{BigInt, RandBigInt};
use num_traits::{One, ToPrimitive};
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn primes_below(limit: usize) -> Vec<u64> {
    let mut sieve = vec![true; limit];
    sieve[0] = false;
    sieve[1] = false;
    for i in 2..limit {
        if sieve[i] {
            for j in (i * i..limit).step_by(i) {
                sieve[j] = false;
            }
        }
    }
    (0..limit).filter(|&i| sieve[i]).map(|i| i as u64).collect()
}

#[test]
fn isqrt_brackets_random_inputs() {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_0001);
    for _ in 0..100_000 {
        let bits = rng.gen_range(1..=512u64);
        let n = rng.gen_biguint(bits);
        let r = isqrt(&n);
        assert!(&r * &r <= n);
        let r1 = &r + 1u32;
        assert!(&r1 * &r1 > n);
        // independent route
        assert_eq!(r, n.sqrt());
    }
}

#[test]
fn k_times_square_round_trip() {
    for k in [1u64, 2, 3, 5] {
        let kk = Natural::from(k);
        for x in 0..=1_000u64 {
            let n = Natural::from(k * x * x);
            assert_eq!(
                is_k_times_square(&n, &kk).unwrap().x,
                Some(Natural::from(x)),
                "{k}*{x}^2"
            );
        }
    }
}

#[test]
fn k_times_square_rejects_everything_else() {
    for k in [1u64, 2, 3, 5] {
        // enumerate the form directly
        let forms: HashSet<u64> = (0..=100u64)
            .map(|x| k * x * x)
            .filter(|&v| v <= 10_000)
            .collect();
        let kk = Natural::from(k);
        for n in 0..=10_000u64 {
            let holds = is_k_times_square(&Natural::from(n), &kk).unwrap().holds();
            assert_eq!(holds, forms.contains(&n), "n = {n}, k = {k}");
        }
    }
}

#[test]
fn jacobi_matches_euler_criterion() {
    for p in primes_below(1000).into_iter().filter(|&p| p > 2) {
        let pp = Natural::from(p);
        let e = Natural::from((p - 1) / 2);
        for a in 0..p {
            let euler = Natural::from(a).modpow(&e, &pp).to_u64().unwrap();
            let expect = match euler {
                0 => JacobiValue::Zero,
                1 => JacobiValue::PlusOne,
                v if v == p - 1 => JacobiValue::MinusOne,
                v => panic!("euler criterion gave {v} mod {p}"),
            };
            assert_eq!(jacobi_i64(a as i64, p).unwrap(), expect, "({a}/{p})");
        }
    }
}

#[test]
fn jacobi_is_multiplicative() {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_0002);
    for _ in 0..10_000 {
        let n = rng.gen_range(0..500_000u64) * 2 + 1;
        let a = rng.gen_range(-1_000_000i64..1_000_000);
        let b = rng.gen_range(-1_000_000i64..1_000_000);
        let ab = BigInt::from(a) * BigInt::from(b);
        let nn = Natural::from(n);
        let lhs = jacobi(&ab, &nn).unwrap().as_i8();
        let rhs = jacobi_i64(a, n).unwrap().as_i8() * jacobi_i64(b, n).unwrap().as_i8();
        assert_eq!(lhs, rhs, "a={a} b={b} n={n}");
    }
}

#[test]
fn jacobi_zero_iff_common_factor() {
    for n in (1..400u64).step_by(2) {
        for a in 0..200u64 {
            let zero = jacobi_i64(a as i64, n).unwrap() == JacobiValue::Zero;
            let common = !gcd(&Natural::from(a), &Natural::from(n)).is_one();
            assert_eq!(zero, common, "({a}/{n})");
        }
    }
}

#[test]
fn cofactor_gcd_is_gcd_of_sum_and_p() {
    for p in [3u64, 5, 7, 11] {
        for a in 0..=50u64 {
            for b in 0..=50u64 {
                let (na, nb) = (Natural::from(a), Natural::from(b));
                if !gcd(&na, &nb).is_one() {
                    continue;
                }
                let got = zhang_cofactor_gcd(&na, &nb, p).unwrap();
                // direct: gcd(a + b, (a^p + b^p) / (a + b)) with u128 arithmetic
                let s = u128::from(a + b);
                let q = (u128::from(a).pow(p as u32) + u128::from(b).pow(p as u32)) / s;
                let direct = num_integer::gcd(s, q);
                assert_eq!(got, Natural::from(direct));
                assert_eq!(got, gcd(&Natural::from(a + b), &Natural::from(p)));
                assert!(got.is_one() || got == Natural::from(p));
            }
        }
    }
}

proptest! {
    #[test]
    fn jacobi_periodic_in_numerator(a in -10_000i64..10_000, half in 0u64..5_000, k in -5i64..5) {
        let n = 2 * half + 1;
        let shifted = a + k * n as i64;
        prop_assert_eq!(jacobi_i64(a, n).unwrap(), jacobi_i64(shifted, n).unwrap());
    }

    #[test]
    fn gcd_divides_both(a in 0u64..1_000_000, b in 0u64..1_000_000) {
        let g = gcd(&Natural::from(a), &Natural::from(b));
        let g = g.to_u64().unwrap();
        if g == 0 {
            prop_assert!(a == 0 && b == 0);
        } else {
            prop_assert_eq!(a % g, 0);
            prop_assert_eq!(b % g, 0);
            prop_assert_eq!(num_integer::gcd(a / g, b / g), 1);
        }
    }

    #[test]
    fn isqrt_of_square_is_exact(x in proptest::collection::vec(any::<u64>(), 1..6)) {
        let v = x.iter().fold(Natural::from(0u32), |acc, &d| (acc << 64usize) + d);
        prop_assert_eq!(isqrt(&(&v * &v)), v.clone());
        if v > Natural::from(0u32) {
            prop_assert_eq!(isqrt(&(&v * &v - 1u32)), v - 1u32);
        }
    }
}
