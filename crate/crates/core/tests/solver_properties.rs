use std::collections::BTreeSet;

use lucasdio::arith::isqrt;
use lucasdio::sequences::{fibonacci, lucas, Natural};
use lucasdio::solver::{
    catalan_search, classify_alpha_case, poonen_search, pythagorean_direct, pythagorean_reduced,
    solve_fib_form, solve_lucas_form, solve_main, CatalanSolution, SolutionTriple,
};
use num_traits::One;
use proptest::prelude::*;

fn lucas_table(n: usize) -> Vec<Natural> {
    let mut v = vec![Natural::from(2u32), Natural::one()];
    for i in 2..=n {
        let next = &v[i - 1] + &v[i - 2];
        v.push(next);
    }
    v
}

/// Double loop with isqrt only: no residue filters, no fast doubling.
fn naive_main(n_max: usize, alpha_max: u32) -> BTreeSet<SolutionTriple> {
    let l = lucas_table(n_max + 1);
    let mut out = BTreeSet::new();
    for n in 0..=n_max {
        for alpha in 0..=alpha_max {
            let v = l[n].pow(alpha) + l[n + 1].pow(alpha);
            let r = isqrt(&v);
            if &r * &r == v {
                out.insert(SolutionTriple {
                    n: n as u64,
                    alpha,
                    x: r,
                });
            }
        }
    }
    out
}

#[test]
fn main_matches_naive_oracle() {
    for (n_max, alpha_max) in [(0, 0), (3, 3), (50, 8), (200, 8)] {
        assert_eq!(
            solve_main(n_max as u64, alpha_max),
            naive_main(n_max, alpha_max),
            "n_max={n_max} alpha_max={alpha_max}"
        );
    }
}

#[test]
fn witnesses_satisfy_their_equations() {
    for t in solve_main(200, 12) {
        assert!(t.satisfies(), "{t:?}");
    }
    for k in [1, 2, 3] {
        for s in solve_lucas_form(k, 2_000).unwrap() {
            assert_eq!(lucas(s.n), Natural::from(k) * &s.x * &s.x);
        }
    }
    for k in [1, 2, 5] {
        for s in solve_fib_form(k, 2_000).unwrap() {
            assert_eq!(fibonacci(s.n), Natural::from(k) * &s.x * &s.x);
        }
    }
    for s in pythagorean_direct(500) {
        let (a, b) = (lucas(s.n), lucas(s.n + 1));
        assert_eq!(&a * &a + &b * &b, &s.x * &s.x);
    }
    for c in catalan_search(40, 12).unwrap() {
        assert!(c.satisfies());
    }
}

#[test]
fn case_reduction_identity() {
    for n in 0..=500u64 {
        let (a, b) = (lucas(n), lucas(n + 1));
        assert_eq!(&a * &a + &b * &b, fibonacci(2 * n + 1) * 5u32, "n = {n}");
    }
    assert_eq!(pythagorean_direct(500), pythagorean_reduced(500));
}

#[test]
fn every_main_solution_is_left_open_by_its_case() {
    let sols = solve_main(200, 12);
    for alpha in 0..=12 {
        let open = classify_alpha_case(alpha).candidates(200);
        for t in sols.iter().filter(|t| t.alpha == alpha) {
            assert!(open.contains(&t.n), "alpha={alpha} n={}", t.n);
        }
    }
}

#[test]
fn catalan_independent_of_enumeration_order() {
    // reversed nested loops over (y, b, x, a), exact arithmetic only
    let mut oracle = BTreeSet::new();
    for y in (2..=12u32).rev() {
        for b in (2..=40u64).rev() {
            let rhs = Natural::from(b).pow(y) + 1u32;
            for x in (2..=12u32).rev() {
                for a in (2..=40u64).rev() {
                    if Natural::from(a).pow(x) == rhs {
                        oracle.insert(CatalanSolution { a, b, x, y });
                    }
                }
            }
        }
    }
    assert_eq!(catalan_search(40, 12).unwrap(), oracle);
}

#[test]
fn poonen_empty_on_small_box() {
    assert!(poonen_search(4, 6, 60).unwrap().is_empty());
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn main_is_monotone(n1 in 0u64..40, dn in 0u64..40, a1 in 0u32..6, da in 0u32..4) {
        let small = solve_main(n1, a1);
        let large = solve_main(n1 + dn, a1 + da);
        prop_assert!(small.is_subset(&large));
    }

    #[test]
    fn form_scans_are_monotone(n1 in 0u64..600, dn in 0u64..600) {
        for k in [1, 2, 3] {
            let s = solve_lucas_form(k, n1).unwrap();
            prop_assert!(s.is_subset(&solve_lucas_form(k, n1 + dn).unwrap()));
        }
        for k in [1, 2, 5] {
            let s = solve_fib_form(k, n1).unwrap();
            prop_assert!(s.is_subset(&solve_fib_form(k, n1 + dn).unwrap()));
        }
    }
}
