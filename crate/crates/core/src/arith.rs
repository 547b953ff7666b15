//! Rank-level arithmetic kernels shared by the field tower and the polynomial
//! layer.
//!
//! An element of a level is identified with its *rank*: the integer whose
//! base-`p` digits are the element's flattened `F_p` coordinates, lowest
//! coefficient first. Because every level's basis starts with the basis of the
//! level below, subfield embeddings preserve ranks.

pub(crate) const MAX_DEGREE: usize = 64;

pub(crate) trait Arith {
    fn size(&self) -> u64;
    fn add(&self, a: u64, b: u64) -> u64;
    fn neg(&self, a: u64) -> u64;
    fn mul(&self, a: u64, b: u64) -> u64;
    /// Multiplicative inverse; `a` must be nonzero.
    fn inv(&self, a: u64) -> u64;

    fn sub(&self, a: u64, b: u64) -> u64 {
        self.add(a, self.neg(b))
    }

    fn pow(&self, a: u64, mut e: u128) -> u64 {
        let mut result = 1;
        let mut base = a;
        while e > 0 {
            if e & 1 == 1 {
                result = self.mul(result, base);
            }
            e >>= 1;
            if e > 0 {
                base = self.mul(base, base);
            }
        }
        result
    }
}

#[derive(Clone, Debug)]
pub(crate) struct PrimeArith {
    pub p: u64,
}

impl Arith for PrimeArith {
    fn size(&self) -> u64 {
        self.p
    }

    #[inline]
    fn add(&self, a: u64, b: u64) -> u64 {
        let s = a + b;
        if s >= self.p {
            s - self.p
        } else {
            s
        }
    }

    #[inline]
    fn neg(&self, a: u64) -> u64 {
        if a == 0 {
            0
        } else {
            self.p - a
        }
    }

    #[inline]
    fn mul(&self, a: u64, b: u64) -> u64 {
        ((a as u128 * b as u128) % self.p as u128) as u64
    }

    fn inv(&self, a: u64) -> u64 {
        debug_assert!(a != 0);
        self.pow(a, (self.p - 2) as u128)
    }
}

/// `B[y] / (modulus(y))` for a monic modulus irreducible over `B`.
#[derive(Clone, Debug)]
pub(crate) struct ExtArith<B> {
    pub base: B,
    pub p: u64,
    pub base_size: u64,
    pub degree: usize,
    /// Ascending base ranks, monic, length `degree + 1`.
    pub modulus: Vec<u64>,
    pub size: u64,
}

impl<B: Arith> ExtArith<B> {
    pub fn new(base: B, p: u64, modulus: Vec<u64>) -> Self {
        let degree = modulus.len() - 1;
        let base_size = base.size();
        let size = base_size.pow(degree as u32);
        Self {
            base,
            p,
            base_size,
            degree,
            modulus,
            size,
        }
    }

    #[inline]
    pub fn decode(&self, mut a: u64, out: &mut [u64]) {
        for slot in out.iter_mut().take(self.degree) {
            *slot = a % self.base_size;
            a /= self.base_size;
        }
    }

    #[inline]
    pub fn encode(&self, coeffs: &[u64]) -> u64 {
        coeffs[..self.degree]
            .iter()
            .rev()
            .fold(0u64, |acc, &c| acc * self.base_size + c)
    }

    pub fn to_poly(&self, a: u64) -> Vec<u64> {
        let mut buf = vec![0; self.degree];
        self.decode(a, &mut buf);
        trim(&mut buf);
        buf
    }
}

impl<B: Arith> Arith for ExtArith<B> {
    fn size(&self) -> u64 {
        self.size
    }

    #[inline]
    fn add(&self, mut a: u64, mut b: u64) -> u64 {
        let p = self.p;
        if p == 2 {
            return a ^ b;
        }
        let mut r = 0u64;
        let mut scale = 1u64;
        while a > 0 || b > 0 {
            let s = a % p + b % p;
            r += if s >= p { s - p } else { s } * scale;
            a /= p;
            b /= p;
            scale = scale.wrapping_mul(p);
        }
        r
    }

    #[inline]
    fn neg(&self, mut a: u64) -> u64 {
        let p = self.p;
        if p == 2 {
            return a;
        }
        let mut r = 0u64;
        let mut scale = 1u64;
        while a > 0 {
            let d = a % p;
            if d != 0 {
                r += (p - d) * scale;
            }
            a /= p;
            scale = scale.wrapping_mul(p);
        }
        r
    }

    fn mul(&self, a: u64, b: u64) -> u64 {
        let n = self.degree;
        if a == 0 || b == 0 {
            return 0;
        }
        if n == 1 {
            return self.base.mul(a, b);
        }
        let mut x = [0u64; MAX_DEGREE];
        let mut y = [0u64; MAX_DEGREE];
        self.decode(a, &mut x);
        self.decode(b, &mut y);
        let mut prod = [0u64; 2 * MAX_DEGREE];
        for i in 0..n {
            if x[i] == 0 {
                continue;
            }
            for j in 0..n {
                if y[j] == 0 {
                    continue;
                }
                prod[i + j] = self.base.add(prod[i + j], self.base.mul(x[i], y[j]));
            }
        }
        for i in (n..2 * n - 1).rev() {
            let c = prod[i];
            if c == 0 {
                continue;
            }
            for j in 0..n {
                let t = self.base.mul(c, self.modulus[j]);
                prod[i - n + j] = self.base.sub(prod[i - n + j], t);
            }
            prod[i] = 0;
        }
        self.encode(&prod[..n])
    }

    fn inv(&self, a: u64) -> u64 {
        debug_assert!(a != 0);
        let ap = self.to_poly(a);
        let inv = poly_inverse_mod(&self.base, &ap, &self.modulus)
            .expect("nonzero element of a field has an inverse");
        let mut buf = [0u64; MAX_DEGREE];
        buf[..inv.len()].copy_from_slice(&inv);
        self.encode(&buf[..self.degree])
    }
}

// ---- dense polynomials over an `Arith`, as ascending rank vectors ----

pub(crate) fn trim(f: &mut Vec<u64>) {
    while f.last() == Some(&0) {
        f.pop();
    }
}

pub(crate) fn poly_add<A: Arith + ?Sized>(ar: &A, f: &[u64], g: &[u64]) -> Vec<u64> {
    let n = f.len().max(g.len());
    let mut out: Vec<u64> = (0..n)
        .map(|i| {
            let a = f.get(i).copied().unwrap_or(0);
            let b = g.get(i).copied().unwrap_or(0);
            ar.add(a, b)
        })
        .collect();
    trim(&mut out);
    out
}

pub(crate) fn poly_neg<A: Arith + ?Sized>(ar: &A, f: &[u64]) -> Vec<u64> {
    f.iter().map(|&c| ar.neg(c)).collect()
}

pub(crate) fn poly_sub<A: Arith + ?Sized>(ar: &A, f: &[u64], g: &[u64]) -> Vec<u64> {
    poly_add(ar, f, &poly_neg(ar, g))
}

pub(crate) fn poly_scale<A: Arith + ?Sized>(ar: &A, f: &[u64], c: u64) -> Vec<u64> {
    let mut out: Vec<u64> = f.iter().map(|&a| ar.mul(a, c)).collect();
    trim(&mut out);
    out
}

pub(crate) fn poly_mul<A: Arith + ?Sized>(ar: &A, f: &[u64], g: &[u64]) -> Vec<u64> {
    if f.is_empty() || g.is_empty() {
        return Vec::new();
    }
    let mut out = vec![0u64; f.len() + g.len() - 1];
    for (i, &a) in f.iter().enumerate() {
        if a == 0 {
            continue;
        }
        for (j, &b) in g.iter().enumerate() {
            if b != 0 {
                out[i + j] = ar.add(out[i + j], ar.mul(a, b));
            }
        }
    }
    trim(&mut out);
    out
}

/// Quotient and remainder; `g` must be nonzero.
pub(crate) fn poly_divmod<A: Arith + ?Sized>(ar: &A, f: &[u64], g: &[u64]) -> (Vec<u64>, Vec<u64>) {
    debug_assert!(!g.is_empty() && *g.last().unwrap() != 0);
    let mut r = f.to_vec();
    trim(&mut r);
    if r.len() < g.len() {
        return (Vec::new(), r);
    }
    let dg = g.len() - 1;
    let lead_inv = ar.inv(g[dg]);
    let mut quot = vec![0u64; r.len() - dg];
    for i in (dg..r.len()).rev() {
        let c = r[i];
        if c == 0 {
            continue;
        }
        let factor = ar.mul(c, lead_inv);
        quot[i - dg] = factor;
        for (j, &gj) in g.iter().enumerate() {
            if gj != 0 {
                r[i - dg + j] = ar.sub(r[i - dg + j], ar.mul(factor, gj));
            }
        }
    }
    trim(&mut r);
    trim(&mut quot);
    (quot, r)
}

pub(crate) fn poly_rem<A: Arith + ?Sized>(ar: &A, f: &[u64], g: &[u64]) -> Vec<u64> {
    poly_divmod(ar, f, g).1
}

pub(crate) fn poly_monic<A: Arith + ?Sized>(ar: &A, f: &[u64]) -> Vec<u64> {
    match f.last() {
        None => Vec::new(),
        Some(&lc) => poly_scale(ar, f, ar.inv(lc)),
    }
}

/// Monic gcd; `gcd(0, 0) = 0`.
pub(crate) fn poly_gcd<A: Arith + ?Sized>(ar: &A, f: &[u64], g: &[u64]) -> Vec<u64> {
    let mut a = f.to_vec();
    let mut b = g.to_vec();
    trim(&mut a);
    trim(&mut b);
    while !b.is_empty() {
        let r = poly_rem(ar, &a, &b);
        a = b;
        b = r;
    }
    poly_monic(ar, &a)
}

/// Inverse of `a` modulo `f`, when `gcd(a, f) = 1`.
pub(crate) fn poly_inverse_mod<A: Arith + ?Sized>(ar: &A, a: &[u64], f: &[u64]) -> Option<Vec<u64>> {
    let mut r0 = f.to_vec();
    let mut r1 = poly_rem(ar, a, f);
    let mut s0: Vec<u64> = Vec::new();
    let mut s1: Vec<u64> = vec![1];
    while !r1.is_empty() {
        let (quot, rem) = poly_divmod(ar, &r0, &r1);
        let s2 = poly_sub(ar, &s0, &poly_mul(ar, &quot, &s1));
        r0 = std::mem::replace(&mut r1, rem);
        s0 = std::mem::replace(&mut s1, s2);
    }
    if r0.len() != 1 {
        return None;
    }
    let c = ar.inv(r0[0]);
    Some(poly_rem(ar, &poly_scale(ar, &s0, c), f))
}

pub(crate) fn poly_mulmod<A: Arith + ?Sized>(ar: &A, a: &[u64], b: &[u64], f: &[u64]) -> Vec<u64> {
    poly_rem(ar, &poly_mul(ar, a, b), f)
}

pub(crate) fn poly_powmod<A: Arith + ?Sized>(ar: &A, a: &[u64], mut e: u128, f: &[u64]) -> Vec<u64> {
    let mut result = poly_rem(ar, &[1], f);
    let mut base = poly_rem(ar, a, f);
    while e > 0 {
        if e & 1 == 1 {
            result = poly_mulmod(ar, &result, &base, f);
        }
        e >>= 1;
        if e > 0 {
            base = poly_mulmod(ar, &base, &base, f);
        }
    }
    result
}

pub(crate) fn poly_eval<A: Arith + ?Sized>(ar: &A, f: &[u64], x: u64) -> u64 {
    f.iter().rev().fold(0, |acc, &c| ar.add(ar.mul(acc, x), c))
}

fn distinct_primes(mut n: usize) -> Vec<usize> {
    let mut out = Vec::new();
    let mut p = 2;
    while p * p <= n {
        if n % p == 0 {
            out.push(p);
            while n % p == 0 {
                n /= p;
            }
        }
        p += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

/// Irreducibility of `f` over the subfield of size `sub_size` containing its
/// coefficients: `x^(S^n) = x mod f` and `gcd(x^(S^(n/l)) - x, f) = 1` for every
/// prime `l | n`, with `S = sub_size` and `n = deg f`.
pub(crate) fn is_irreducible<A: Arith + ?Sized>(ar: &A, f: &[u64], sub_size: u64) -> bool {
    let mut f = f.to_vec();
    trim(&mut f);
    let n = match f.len() {
        0 | 1 => return false,
        len => len - 1,
    };
    if n == 1 {
        return true;
    }
    let f = poly_monic(ar, &f);
    let x = vec![0, 1];
    // frob[i] = x^(S^i) mod f, for i = 0..=n
    let mut frob = Vec::with_capacity(n + 1);
    frob.push(x.clone());
    for i in 1..=n {
        let next = poly_powmod(ar, &frob[i - 1], sub_size as u128, &f);
        frob.push(next);
    }
    if frob[n] != x {
        return false;
    }
    distinct_primes(n).into_iter().all(|l| {
        let diff = poly_sub(ar, &frob[n / l], &x);
        poly_gcd(ar, &diff, &f).len() == 1
    })
}
