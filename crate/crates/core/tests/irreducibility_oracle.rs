//! Irreducibility against an enumeration of all products of lower-degree
//! monic polynomials, with its own polynomial multiplication.

use std::collections::HashSet;

use flagspace::poly::odd_degree_descent;
use flagspace::{FieldElement, FieldTower, Level, PolyRing};

/// Monic polynomials of degree `n` as coefficient-rank vectors, ascending.
fn monic(size: u64, n: usize) -> Vec<Vec<u64>> {
    let count = size.pow(n as u32);
    (0..count)
        .map(|mut idx| {
            let mut c = Vec::with_capacity(n + 1);
            for _ in 0..n {
                c.push(idx % size);
                idx /= size;
            }
            c.push(1);
            c
        })
        .collect()
}

fn mul(t: &FieldTower, level: Level, a: &[u64], b: &[u64]) -> Vec<u64> {
    let mut out = vec![t.zero(level); a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        for (j, &y) in b.iter().enumerate() {
            let x = t.element(level, x).unwrap();
            let y = t.element(level, y).unwrap();
            out[i + j] = t.add(&out[i + j], &t.mul(&x, &y).unwrap()).unwrap();
        }
    }
    out.iter().map(FieldElement::rank).collect()
}

fn reducible(t: &FieldTower, level: Level, n: usize) -> HashSet<Vec<u64>> {
    let size = t.size(level);
    let mut set = HashSet::new();
    for da in 1..=n / 2 {
        for a in monic(size, da) {
            for b in monic(size, n - da) {
                set.insert(mul(t, level, &a, &b));
            }
        }
    }
    set
}

fn mobius(n: u64) -> i64 {
    let mut n = n;
    let mut mu = 1;
    let mut p = 2;
    while p * p <= n {
        if n % p == 0 {
            n /= p;
            if n % p == 0 {
                return 0;
            }
            mu = -mu;
        }
        p += 1;
    }
    if n > 1 {
        mu = -mu;
    }
    mu
}

fn irreducible_count(size: u64, n: u64) -> u64 {
    let total: i64 = (1..=n)
        .filter(|d| n % d == 0)
        .map(|d| mobius(d) * size.pow((n / d) as u32) as i64)
        .sum();
    total as u64 / n
}

fn check(t: &FieldTower, level: Level, max_degree: usize) {
    let ring = PolyRing::new(t, level);
    let size = t.size(level);
    for n in 1..=max_degree {
        let red = reducible(t, level, n);
        let mut irreducible = 0;
        for c in monic(size, n) {
            let f = ring.from_ranks(&c).unwrap();
            let expected = !red.contains(&c);
            assert_eq!(ring.is_irreducible(&f).unwrap(), expected, "size {size}: {c:?}");
            irreducible += expected as u64;
        }
        assert_eq!(irreducible, irreducible_count(size, n as u64), "size {size}, degree {n}");
    }
}

#[test]
fn prime_fields_up_to_degree_four() {
    for p in [2, 3, 5, 7] {
        let t = FieldTower::base(p, 1).unwrap();
        check(&t, Level::Prime, 4);
    }
}

#[test]
fn f4_and_f9_up_to_degree_four() {
    check(&FieldTower::base(2, 1).unwrap(), Level::Middle, 4);
    check(&FieldTower::base(3, 1).unwrap(), Level::Middle, 4);
}

#[test]
fn odd_degree_descent_matches_prime_field_oracle() {
    // F_q = F_p for these towers, so F_q-irreducibility is the prime-level oracle
    for p in [2, 3, 5] {
        let t = FieldTower::base(p, 1).unwrap();
        let middle = PolyRing::new(&t, Level::Middle);
        for n in [1usize, 3] {
            let red = reducible(&t, Level::Prime, n);
            for c in monic(p, n) {
                let f = middle.from_ranks(&c).unwrap();
                assert_eq!(odd_degree_descent(&t, &f).unwrap(), !red.contains(&c));
                assert_eq!(middle.is_irreducible(&f).unwrap(), !red.contains(&c));
            }
        }
    }
}

#[test]
fn reducible_inputs_rejected_as_moduli() {
    let t = FieldTower::base(2, 1).unwrap();
    let r = PolyRing::new(&t, Level::Middle);
    assert!(t.with_top_modulus(&r.from_ints(&[1, 1, 1]).coeffs()).is_err());
    assert!(t.with_top_modulus(&r.from_ints(&[1, 1, 0, 1]).coeffs()).is_ok());
}
