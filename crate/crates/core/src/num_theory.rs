//! Integer utilities and the arithmetic identities behind the order argument
//! for `g_n`.
//!
//! Everything here works in `u64` with `u128` intermediates. Quantities such
//! as `q^(i d^(t-1)) - 1` are never formed; gcds against them are computed one
//! prime power at a time through modular exponentiation.

use serde::{Deserialize, Serialize};

use crate::error::{check_bound, domain, Result};

pub fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        let r = a % b;
        a = b;
        b = r;
    }
    a
}

pub fn lcm(a: u64, b: u64) -> u64 {
    if a == 0 || b == 0 {
        0
    } else {
        a / gcd(a, b) * b
    }
}

#[inline]
pub fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

/// `base^exp mod modulus`; `modulus == 1` yields 0.
pub fn pow_mod(base: u64, mut exp: u128, modulus: u64) -> u64 {
    if modulus == 1 {
        return 0;
    }
    let mut result = 1u64;
    let mut b = base % modulus;
    while exp > 0 {
        if exp & 1 == 1 {
            result = mul_mod(result, b, modulus);
        }
        b = mul_mod(b, b, modulus);
        exp >>= 1;
    }
    result
}

// Witnesses 2..37 make Miller-Rabin deterministic below 3.3e24, which covers u64.
const MR_WITNESSES: [u64; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for &w in &MR_WITNESSES {
        if n == w {
            return true;
        }
        if n % w == 0 {
            return false;
        }
    }
    let s = (n - 1).trailing_zeros();
    let d = (n - 1) >> s;
    'witness: for &a in &MR_WITNESSES {
        let mut x = pow_mod(a, d as u128, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

/// Same as [`is_prime`] for wider inputs; values at or above 2^64 are rejected.
pub fn is_prime_u128(n: u128) -> Result<bool> {
    check_bound("primality test input", n, u64::MAX as u128)?;
    Ok(is_prime(n as u64))
}

/// Brent's variant of Pollard rho. `n` must be odd, composite and not a
/// perfect prime power of a tiny prime (trial division removes those).
fn pollard_brent(n: u64) -> u64 {
    let mut c = 1u64;
    loop {
        let f = |x: u64| (mul_mod(x, x, n) + c) % n;
        let mut y = 2u64;
        let mut r = 1u64;
        let mut q = 1u64;
        let mut g = 1u64;
        let mut x = y;
        let mut ys = y;
        let m = 128u64;
        while g == 1 {
            x = y;
            for _ in 0..r {
                y = f(y);
            }
            let mut k = 0;
            while k < r && g == 1 {
                ys = y;
                for _ in 0..m.min(r - k) {
                    y = f(y);
                    q = mul_mod(q, x.abs_diff(y), n);
                }
                g = gcd(q, n);
                k += m;
            }
            r *= 2;
        }
        if g == n {
            loop {
                ys = f(ys);
                g = gcd(x.abs_diff(ys), n);
                if g > 1 {
                    break;
                }
            }
        }
        if g != n {
            return g;
        }
        c += 1;
    }
}

fn split_into(n: u64, out: &mut Vec<u64>) {
    if n == 1 {
        return;
    }
    if is_prime(n) {
        out.push(n);
        return;
    }
    let f = pollard_brent(n);
    split_into(f, out);
    split_into(n / f, out);
}

/// Prime factors of `n` with multiplicity, ascending. `factorize(1)` is empty.
pub fn factorize(n: u64) -> Result<Vec<u64>> {
    if n == 0 {
        return domain("cannot factorize 0");
    }
    let mut n = n;
    let mut out = Vec::new();
    for p in [2u64, 3, 5] {
        while n % p == 0 {
            out.push(p);
            n /= p;
        }
    }
    // wheel over 6k +- 1 up to a small bound, rho for the cofactor
    let mut p = 7u64;
    let mut step = 4u64;
    while p <= 1000 && p * p <= n {
        while n % p == 0 {
            out.push(p);
            n /= p;
        }
        p += step;
        step = 6 - step;
    }
    if n > 1 {
        split_into(n, &mut out);
    }
    out.sort_unstable();
    Ok(out)
}

/// `(prime, exponent)` pairs of `n`, ascending by prime.
pub fn factor_pairs(n: u64) -> Result<Vec<(u64, u32)>> {
    let flat = factorize(n)?;
    let mut pairs: Vec<(u64, u32)> = Vec::new();
    for p in flat {
        match pairs.last_mut() {
            Some((last, e)) if *last == p => *e += 1,
            _ => pairs.push((p, 1)),
        }
    }
    Ok(pairs)
}

/// Splits `q = p^k` with `p` prime, or `None` when `q` is not a prime power.
pub fn prime_power(q: u64) -> Option<(u64, u32)> {
    if q < 2 {
        return None;
    }
    let pairs = factor_pairs(q).ok()?;
    match pairs.as_slice() {
        [(p, k)] => Some((*p, *k)),
        _ => None,
    }
}

pub fn divisors(n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut i = 1u64;
    while i * i <= n {
        if n % i == 0 {
            out.push(i);
            if i != n / i {
                out.push(n / i);
            }
        }
        i += 1;
    }
    out.sort_unstable();
    out
}

pub fn euler_phi(n: u64) -> Result<u64> {
    let mut phi = n;
    for (p, _) in factor_pairs(n)? {
        phi = phi / p * (p - 1);
    }
    Ok(phi)
}

/// Least `e > 0` with `g^e = 1`, given `g^order = 1` and the factorization of
/// `order`. `is_one_after` evaluates `g^e == 1`.
pub(crate) fn reduce_order(
    order: u64,
    factors: &[(u64, u32)],
    mut is_one_after: impl FnMut(u64) -> bool,
) -> u64 {
    let mut e = order;
    for &(p, _) in factors {
        while e % p == 0 && is_one_after(e / p) {
            e /= p;
        }
    }
    e
}

/// Order of `a` in `(Z/nZ)*`.
pub fn multiplicative_order(a: u64, n: u64) -> Result<u64> {
    if n == 0 {
        return domain("modulus must be positive");
    }
    if n == 1 {
        return Ok(1);
    }
    if gcd(a % n, n) != 1 {
        return domain(format!("{a} is not a unit modulo {n}"));
    }
    let phi = euler_phi(n)?;
    let factors = factor_pairs(phi)?;
    Ok(reduce_order(phi, &factors, |e| pow_mod(a, e as u128, n) == 1))
}

/// Parameters `(q, d, t, i)` of the gcd identity
/// `gcd(d^t (q+1), q^(i d^(t-1)) - 1) = (q+1) d^(t-1) gcd(d, i)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct GcdIdentityInstance {
    pub q: u64,
    pub d: u64,
    pub t: u32,
    pub i: u64,
}

impl GcdIdentityInstance {
    pub fn new(q: u64, d: u64, t: u32, i: u64) -> Result<Self> {
        if prime_power(q).is_none() {
            return domain(format!("q = {q} is not a prime power"));
        }
        if d <= 1 || d % 2 == 0 || (q + 1) % d != 0 {
            return domain(format!("d = {d} must be an odd divisor > 1 of q+1 = {}", q + 1));
        }
        if t == 0 {
            return domain("t must be positive");
        }
        if i == 0 || i % 2 != 0 {
            return domain(format!("i = {i} must be a positive even integer"));
        }
        let inst = Self { q, d, t, i };
        inst.modulus()?;
        Ok(inst)
    }

    /// `N = d^t (q+1)`.
    pub fn modulus(&self) -> Result<u64> {
        let dt = checked_pow(self.d, self.t)?;
        dt.checked_mul(self.q + 1)
            .ok_or_else(|| crate::Error::ResourceBound {
                what: "d^t (q+1)",
                needed: dt as u128 * (self.q as u128 + 1),
                limit: u64::MAX as u128,
            })
    }

    pub fn exponent(&self) -> Result<u128> {
        Ok(self.i as u128 * checked_pow(self.d, self.t - 1)? as u128)
    }

    /// Both sides of the identity, left computed prime power by prime power.
    pub fn sides(&self) -> Result<(u64, u64)> {
        let n = self.modulus()?;
        let e = self.exponent()?;
        let lhs = gcd_with_power_minus_one(n, self.q, e)?;
        let rhs = (self.q + 1) * checked_pow(self.d, self.t - 1)? * gcd(self.d, self.i);
        Ok((lhs, rhs))
    }
}

fn checked_pow(base: u64, exp: u32) -> Result<u64> {
    base.checked_pow(exp).ok_or(crate::Error::ResourceBound {
        what: "integer power",
        needed: (base as u128).saturating_pow(exp),
        limit: u64::MAX as u128,
    })
}

/// `gcd(n, base^exp - 1)` without forming `base^exp`: for each `l^e || n`
/// find the largest `e' <= e` with `base^exp = 1 mod l^e'`.
pub fn gcd_with_power_minus_one(n: u64, base: u64, exp: u128) -> Result<u64> {
    let mut g = 1u64;
    for (l, e) in factor_pairs(n)? {
        let mut modulus = 1u64;
        for _ in 0..e {
            let next = modulus * l;
            if pow_mod(base, exp, next) != 1 {
                break;
            }
            modulus = next;
        }
        g *= modulus;
    }
    Ok(g)
}

pub fn verify_gcd_identity(inst: &GcdIdentityInstance) -> Result<bool> {
    let (lhs, rhs) = inst.sides()?;
    Ok(lhs == rhs)
}

/// `ord_N(q) == 2 d^t` for `N = d^t (q+1)`.
pub fn verify_order_claim(q: u64, d: u64, t: u32) -> Result<bool> {
    if d <= 1 || d % 2 == 0 || (q + 1) % d != 0 || t == 0 {
        return domain(format!("(q, d, t) = ({q}, {d}, {t}) violates d odd, d > 1, d | q+1, t >= 1"));
    }
    let dt = checked_pow(d, t)?;
    let n = dt.checked_mul(q + 1).ok_or(crate::Error::ResourceBound {
        what: "d^t (q+1)",
        needed: dt as u128 * (q as u128 + 1),
        limit: u64::MAX as u128,
    })?;
    Ok(multiplicative_order(q, n)? == 2 * dt)
}

/// Odd divisors `d > 1` of `n`, ascending.
pub fn odd_divisors_above_one(n: u64) -> Vec<u64> {
    divisors(n)
        .into_iter()
        .filter(|d| *d > 1 && d % 2 == 1)
        .collect()
}
