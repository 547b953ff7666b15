//! The polynomial families used by the constructions, and the root and
//! descent checks that accompany them.

use serde::{Deserialize, Serialize};

use super::{PolyRing, Polynomial};
use crate::error::{domain, Error, Result};
use crate::field::{FieldElement, FieldTower, Level};

/// Parameters `(d, u, t)` of `g_n` with `n = d^t u`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct GnParams {
    pub d: u64,
    pub u: u64,
    pub t: u32,
}

/// Degrees beyond this make the exhaustive downstream checks meaningless.
const MAX_GN_DEGREE: u64 = 256;

impl GnParams {
    pub fn new(q: u64, d: u64, u: u64, t: u32) -> Result<Self> {
        if d <= 1 || d % 2 == 0 {
            return domain(format!("d = {d} must be odd and greater than 1"));
        }
        if (q + 1) % d != 0 {
            return domain(format!("d = {d} does not divide q+1 = {}", q + 1));
        }
        if u == 0 || u >= d || d % u != 0 {
            return domain(format!("u = {u} is not a proper divisor of d = {d}"));
        }
        if t == 0 {
            return domain("t must be positive");
        }
        let params = Self { d, u, t };
        let n = params.n().ok_or_else(|| Error::Domain("n = d^t u overflows".into()))?;
        if n > MAX_GN_DEGREE {
            return Err(Error::ResourceBound {
                what: "degree of g_n",
                needed: n as u128,
                limit: MAX_GN_DEGREE as u128,
            });
        }
        Ok(params)
    }

    pub fn n(&self) -> Option<u64> {
        self.d.checked_pow(self.t)?.checked_mul(self.u)
    }
}

/// Row `n` of Pascal's triangle reduced mod `p`.
fn binomial_row_mod(n: usize, p: u64) -> Vec<u64> {
    let mut row = vec![1u64];
    for _ in 0..n {
        let mut next = vec![1u64; row.len() + 1];
        for j in 1..row.len() {
            next[j] = (row[j - 1] + row[j]) % p;
        }
        row = next;
    }
    row
}

/// `g_n(x) = ((δx - 1)^n - δ(x - δ)^n) / (δ^n - δ)` over `F_{q^2}`, for `δ`
/// of order `q + 1`.
///
/// The result is checked to be monic of degree `n`, to have coefficients in
/// `F_q`, and to be irreducible over `F_{q^2}`; a violation is reported as
/// [`Error::Internal`].
pub fn construct_gn(tower: &FieldTower, params: GnParams, delta: &FieldElement) -> Result<Polynomial> {
    let q = tower.q();
    let params = GnParams::new(q, params.d, params.u, params.t)?;
    tower.check_level(delta, Level::Middle)?;
    if delta.is_zero() || tower.element_order(delta)? != q + 1 {
        return domain(format!("delta must have multiplicative order q+1 = {}", q + 1));
    }
    let n = params.n().expect("validated") as usize;
    let ring = PolyRing::new(tower, Level::Middle);
    let binom = binomial_row_mod(n, tower.p());

    // coefficient of x^j: C(n,j) (δ^j (-1)^(n-j) - δ (-δ)^(n-j))
    let minus_one = tower.from_int(Level::Middle, -1);
    let minus_delta = tower.neg(delta)?;
    let mut numerator = Vec::with_capacity(n + 1);
    for (j, &c) in binom.iter().enumerate() {
        let first = tower.mul(&tower.pow(delta, j as u128)?, &tower.pow(&minus_one, (n - j) as u128)?)?;
        let second = tower.mul(delta, &tower.pow(&minus_delta, (n - j) as u128)?)?;
        let diff = tower.sub(&first, &second)?;
        numerator.push(tower.mul(&tower.from_int(Level::Middle, c as i64), &diff)?);
    }
    let numerator = ring.from_coeffs(&numerator)?;

    let denom = tower.sub(&tower.pow(delta, n as u128)?, delta)?;
    if denom.is_zero() {
        return Err(Error::Internal("delta^n = delta; q+1 divides n-1".into()));
    }
    let (g, rem) = ring.divmod(&numerator, &ring.constant(&denom)?)?;
    if !rem.is_zero() {
        return Err(Error::Internal("inexact division in g_n".into()));
    }
    if g.degree() != Some(n) || !g.is_monic() {
        return Err(Error::Internal(format!("g_n is not monic of degree {n}")));
    }
    for c in g.coeffs() {
        if tower.frobenius_q(&c)? != c {
            return Err(Error::Internal("g_n has a coefficient outside F_q".into()));
        }
    }
    if !ring.is_irreducible(&g)? {
        return Err(Error::Internal("g_n is reducible over F_{q^2}".into()));
    }
    Ok(g)
}

fn require_char3_fq_element(tower: &FieldTower, a: &FieldElement, name: &str) -> Result<()> {
    if tower.p() != 3 {
        return domain("this family lives in characteristic 3");
    }
    tower.check_level(a, Level::Middle)?;
    if !tower.is_in_fq(a)? {
        return domain(format!("{name} must lie in F_q"));
    }
    Ok(())
}

/// `x^3 + a x^2 - a x + 1` over `F_{q^2}` for `q = 3^k`, `a ∈ F_q*` with
/// `Tr_{q/3}(1/a) != 0`; asserted irreducible over `F_{q^2}`.
pub fn construct_theorem2_h(tower: &FieldTower, a: &FieldElement) -> Result<Polynomial> {
    require_char3_fq_element(tower, a, "a")?;
    if a.is_zero() {
        return domain("a must be nonzero");
    }
    let tr = tower.subfield_trace(&tower.inv(a)?, tower.k())?;
    if tr.is_zero() {
        return domain("Tr(1/a) = 0; the cubic need not be irreducible");
    }
    let ring = PolyRing::new(tower, Level::Middle);
    let one = tower.one(Level::Middle);
    let h = ring.from_coeffs(&[one, tower.neg(a)?, *a, one])?;
    if !ring.is_irreducible(&h)? {
        return Err(Error::Internal("x^3 + a x^2 - a x + 1 is reducible".into()));
    }
    Ok(h)
}

/// `(x^(p+1) - 1)/(x - 1) - 2 = x^p + ... + x - 1` over `F_{p^2}`, `p` odd.
pub fn construct_pb_polynomial(tower: &FieldTower) -> Result<Polynomial> {
    let p = tower.p();
    if p == 2 {
        return domain("p must be odd");
    }
    if tower.k() != 1 {
        return domain("this family is defined over F_{p^2}, so k must be 1");
    }
    let mut coeffs = vec![1i64; p as usize + 1];
    coeffs[0] = -1;
    Ok(PolyRing::new(tower, Level::Middle).from_ints(&coeffs))
}

/// Whether `x^3 - b x - c` has no root in `F_q`, `q = 3^k`, by exhaustive scan.
///
/// Debug builds also confirm the trace criterion: when `b = s^2` with `s != 0`
/// and `Tr(c/s^3) != 0`, the scan must find no root.
pub fn cubic_has_no_roots(tower: &FieldTower, b: &FieldElement, c: &FieldElement) -> Result<bool> {
    require_char3_fq_element(tower, b, "b")?;
    require_char3_fq_element(tower, c, "c")?;
    let fq = tower.subfield_elements(Level::Middle, tower.k())?;
    let ring = PolyRing::new(tower, Level::Middle);
    let cubic = ring.from_coeffs(&[tower.neg(c)?, tower.neg(b)?, tower.zero(Level::Middle), tower.one(Level::Middle)])?;
    let mut no_roots = true;
    for x in &fq {
        if ring.eval(&cubic, x)?.is_zero() {
            no_roots = false;
            break;
        }
    }
    if cfg!(debug_assertions) {
        for s in fq.iter().filter(|s| !s.is_zero()) {
            if tower.mul(s, s)? == *b {
                let ratio = tower.div(c, &tower.pow(s, 3)?)?;
                if !tower.subfield_trace(&ratio, tower.k())?.is_zero() {
                    assert!(no_roots, "trace criterion predicts no roots, scan found one");
                }
            }
        }
    }
    Ok(no_roots)
}

/// Irreducibility over `F_q` of an odd-degree polynomial with coefficients in
/// `F_q`, which equals irreducibility over `F_{q^2}`. Debug builds run both
/// tests and assert that they agree.
pub fn odd_degree_descent(tower: &FieldTower, f: &Polynomial) -> Result<bool> {
    let ring = PolyRing::new(tower, Level::Middle);
    let deg = f.degree().unwrap_or(0);
    if deg % 2 == 0 {
        return domain(format!("degree {deg} is not odd"));
    }
    for c in f.coeffs() {
        if !tower.is_in_fq(&c)? {
            return domain("coefficient outside F_q");
        }
    }
    let over_fq = ring.is_irreducible_over_subfield(f, tower.k())?;
    if cfg!(debug_assertions) {
        assert_eq!(over_fq, ring.is_irreducible(f)?, "odd-degree descent disagrees with the direct test");
    }
    Ok(over_fq)
}
