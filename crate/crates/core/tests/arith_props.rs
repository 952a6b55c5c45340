mod common;

use proptest::prelude::*;
use quadrep::arith::{factorize, is_prime, legendre, pow_mod, sqrt_mod};

fn naive_pow_mod(base: u64, exp: u64, m: u64) -> u64 {
    let mut acc = 1 % m as u128;
    for _ in 0..exp {
        acc = acc * (base % m) as u128 % m as u128;
    }
    acc as u64
}

fn trial_is_prime(n: u64) -> bool {
    n >= 2
        && (2..)
            .take_while(|d| d * d <= n)
            .all(|d| !n.is_multiple_of(d))
}

#[test]
fn primality_matches_trial_division_below_10_5() {
    let sieve = common::primes_below(100_000);
    let from_test: Vec<u64> = (0..100_000).filter(|&n| is_prime(n)).collect();
    assert_eq!(from_test, sieve);
}

#[test]
fn legendre_of_minus_five_tracks_residue_mod_20() {
    for p in common::primes_below(100_000) {
        if p == 2 || p == 5 {
            continue;
        }
        let expected = if matches!(p % 20, 1 | 3 | 7 | 9) {
            1
        } else {
            -1
        };
        assert_eq!(legendre(-5, p).unwrap(), expected, "p = {p}");
    }
}

#[test]
fn sqrt_mod_exhaustive_for_small_primes() {
    for p in common::primes_below(2_000).into_iter().skip(1) {
        for a in 0..p {
            match sqrt_mod(a as i128, p) {
                Ok(r) => {
                    assert_eq!(r * r % p, a, "p = {p}, a = {a}");
                    assert!(
                        r <= p - r || r == 0,
                        "root {r} of {a} mod {p} is not the smaller one"
                    );
                }
                Err(_) => assert_eq!(legendre(a as i128, p).unwrap(), -1, "p = {p}, a = {a}"),
            }
        }
    }
}

proptest! {
    #[test]
    fn pow_mod_matches_repeated_multiplication(base in any::<u64>(), exp in 0u64..300, m in 2u64..u64::MAX) {
        prop_assert_eq!(pow_mod(base, exp, m).unwrap(), naive_pow_mod(base, exp, m));
    }

    #[test]
    fn factorize_reconstructs_small_inputs(n in 1u64..=1_000_000) {
        let f = factorize(n);
        prop_assert_eq!(f.product(), n as u128);
        for &(p, _) in f.iter() {
            prop_assert!(trial_is_prime(p));
        }
        prop_assert!(f.as_slice().windows(2).all(|w| w[0].0 < w[1].0));
    }

    #[test]
    fn factorize_reconstructs_any_u64(n in 1u64..) {
        let f = factorize(n);
        prop_assert_eq!(f.product(), n as u128);
        for &(p, _) in f.iter() {
            prop_assert!(is_prime(p));
        }
    }

    #[test]
    fn sqrt_mod_roots_square_back(a in any::<i64>(), idx in 0usize..1200) {
        let primes = common::primes_below(10_000);
        let p = primes[idx % primes.len()];
        if let Ok(r) = sqrt_mod(a as i128, p) {
            prop_assert_eq!((r as u128 * r as u128 % p as u128) as i128, (a as i128).rem_euclid(p as i128));
        }
    }

    #[test]
    fn semiprimes_of_large_primes_split(i in 0u64..1u64 << 31, j in 0u64..1u64 << 31) {
        let next_prime = |mut n: u64| { while !is_prime(n) { n += 1; } n };
        let (p, q) = (next_prime((1 << 31) + i), next_prime((1 << 31) + j));
        let f = factorize(p * q);
        prop_assert_eq!(f.product(), p as u128 * q as u128);
        prop_assert!(f.iter().all(|&(r, _)| r == p || r == q));
    }
}

#[test]
fn factorize_near_u64_max_does_not_overflow() {
    for n in [14_827_326_920_216_862_437u64, u64::MAX, u64::MAX - 58] {
        assert_eq!(factorize(n).product(), n as u128, "n = {n}");
    }
}
