//! Integer identities against exact big-integer arithmetic and naive loops.

use flagspace::num_theory::{
    divisors, euler_phi, factorize, gcd, gcd_with_power_minus_one, is_prime, multiplicative_order,
    odd_divisors_above_one, prime_power, verify_order_claim, GcdIdentityInstance,
};
use num_bigint::BigUint;
use proptest::prelude::*;

fn naive_gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        naive_gcd(b, a % b)
    }
}

/// `gcd(n, base^exp - 1)` with `base^exp` formed in full.
fn big_gcd(n: u64, base: u64, exp: u32) -> u64 {
    let power = BigUint::from(base).pow(exp) - 1u32;
    let r: u64 = (power % n).try_into().unwrap();
    naive_gcd(n, r)
}

fn naive_order(a: u64, n: u64) -> u64 {
    let mut x = a % n;
    let mut e = 1;
    while x != 1 {
        x = x * a % n;
        e += 1;
    }
    e
}

const QS: [u64; 8] = [2, 4, 5, 8, 11, 13, 17, 27];

#[test]
fn gcd_identity_grid_against_bigint() {
    let mut checked = 0;
    for q in QS {
        for d in odd_divisors_above_one(q + 1) {
            for t in 1..=3u32 {
                let dt = d.pow(t);
                if dt > 400 {
                    continue;
                }
                for i in (2..=2 * dt).step_by(2) {
                    let inst = GcdIdentityInstance::new(q, d, t, i).unwrap();
                    let n = dt * (q + 1);
                    let e = (i * d.pow(t - 1)) as u32;
                    let exact = big_gcd(n, q, e);
                    let (lhs, rhs) = inst.sides().unwrap();
                    assert_eq!(lhs, exact, "q={q} d={d} t={t} i={i}");
                    assert_eq!(rhs, exact, "q={q} d={d} t={t} i={i}");
                    checked += 1;
                }
            }
        }
    }
    assert!(checked > 500);
}

#[test]
fn order_claim_against_naive_order() {
    for q in QS {
        for d in odd_divisors_above_one(q + 1) {
            for t in 1..=3u32 {
                let n = d.pow(t) * (q + 1);
                let naive = naive_order(q, n);
                assert_eq!(multiplicative_order(q, n).unwrap(), naive);
                assert_eq!(naive, 2 * d.pow(t));
                assert!(verify_order_claim(q, d, t).unwrap());
            }
        }
    }
}

#[test]
fn gcd_identity_rejects_bad_parameters() {
    assert!(GcdIdentityInstance::new(6, 7, 1, 2).is_err()); // q not a prime power
    assert!(GcdIdentityInstance::new(5, 2, 1, 2).is_err()); // d even
    assert!(GcdIdentityInstance::new(5, 5, 1, 2).is_err()); // d does not divide q+1
    assert!(GcdIdentityInstance::new(5, 3, 0, 2).is_err());
    assert!(GcdIdentityInstance::new(5, 3, 1, 3).is_err()); // i odd
}

#[test]
fn phi_and_divisors_small() {
    for n in 1..2000u64 {
        let naive_phi = (1..=n).filter(|&a| naive_gcd(a, n) == 1).count() as u64;
        assert_eq!(euler_phi(n).unwrap(), naive_phi);
        let naive_div: Vec<u64> = (1..=n).filter(|d| n % d == 0).collect();
        assert_eq!(divisors(n), naive_div);
        let naive_prime = n > 1 && (2..n).take_while(|a| a * a <= n).all(|a| n % a != 0);
        assert_eq!(is_prime(n), naive_prime);
    }
}

proptest! {
    #[test]
    fn factorization_multiplies_back(n in 1u64..1_000_000_000_000) {
        let f = factorize(n).unwrap();
        prop_assert_eq!(f.iter().product::<u64>(), n);
        prop_assert!(f.iter().all(|&p| is_prime(p)));
        prop_assert!(f.windows(2).all(|w| w[0] <= w[1]));
    }

    #[test]
    fn gcd_matches_euclid(a in any::<u64>(), b in any::<u64>()) {
        prop_assert_eq!(gcd(a, b), naive_gcd(a, b));
    }

    #[test]
    fn gcd_with_power_matches_bigint(n in 2u64..100_000, base in 2u64..50, exp in 1u32..400) {
        prop_assert_eq!(gcd_with_power_minus_one(n, base, exp as u128).unwrap(), big_gcd(n, base, exp));
    }

    #[test]
    fn prime_power_round_trip(p_idx in 0usize..8, e in 1u32..8) {
        let p = [2u64, 3, 5, 7, 11, 13, 17, 19][p_idx];
        prop_assert_eq!(prime_power(p.pow(e)), Some((p, e)));
        prop_assert_eq!(prime_power(p.pow(e) * if p == 2 { 3 } else { 2 }), None);
    }
}
