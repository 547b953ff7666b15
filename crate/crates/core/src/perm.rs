//! Permutation behaviour of maps on `F_{q^2}` and the ratio condition on
//! `φ(x) = x^m h(x^(q-1))^(m/d)` that characterizes transitive spreads.
//!
//! The brute-force scan is the ground truth. The closed-form criteria
//! ([`lemma22_predicate`], [`lemma23_predicate`]) are checked against it by the
//! sweeps in [`crate::sweep`].

use std::collections::HashMap;

use serde::{Deserialize, Serialize};

use crate::error::{check_bound, domain, Error, Result};
use crate::field::{FieldElement, FieldTower, Level};
use crate::num_theory::gcd;
use crate::poly::{PolyRing, Polynomial};

/// Field size above which exhaustive permutation scans refuse to run.
pub const MAX_BRUTE_FIELD: u64 = 1 << 24;

/// Field size above which the ratio condition refuses to run.
pub const MAX_CONDITION_FIELD: u64 = 1 << 16;

/// A total map on one level of a tower.
pub trait FieldMap {
    fn apply(&self, x: &FieldElement) -> Result<FieldElement>;
}

impl<F> FieldMap for F
where
    F: Fn(&FieldElement) -> Result<FieldElement>,
{
    fn apply(&self, x: &FieldElement) -> Result<FieldElement> {
        self(x)
    }
}

/// `x ↦ f(x)` for a polynomial over the map's level.
pub struct PolynomialMap<'t> {
    ring: PolyRing<'t>,
    f: Polynomial,
}

impl<'t> PolynomialMap<'t> {
    pub fn new(ring: PolyRing<'t>, f: Polynomial) -> Self {
        Self { ring, f }
    }
}

impl FieldMap for PolynomialMap<'_> {
    fn apply(&self, x: &FieldElement) -> Result<FieldElement> {
        self.ring.eval(&self.f, x)
    }
}

/// `x ↦ x^r h(x^s)`, evaluated at the level of `x`.
pub struct ClosedFormMap<'t> {
    tower: &'t FieldTower,
    r: u128,
    s: u128,
    h: Polynomial,
}

impl<'t> ClosedFormMap<'t> {
    pub fn new(tower: &'t FieldTower, r: u128, h: Polynomial, s: u128) -> Self {
        Self { tower, r, s, h }
    }

    /// `x^r h(x^(q-1))`, the shape used throughout the constructions.
    pub fn standard(tower: &'t FieldTower, r: u128, h: Polynomial) -> Self {
        Self::new(tower, r, h, tower.q() as u128 - 1)
    }
}

impl FieldMap for ClosedFormMap<'_> {
    fn apply(&self, x: &FieldElement) -> Result<FieldElement> {
        let ring = PolyRing::new(self.tower, self.h.level());
        let inner = self.tower.pow(x, self.s)?;
        let hv = ring.eval(&self.h, &inner)?;
        self.tower.mul(&self.tower.pow(x, self.r)?, &hv)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PermutationReport {
    pub is_permutation: bool,
    /// Two distinct inputs with the same image, when not a permutation.
    pub collision: Option<(FieldElement, FieldElement)>,
}

/// Evaluates `map` on every element of `level` and checks the images are
/// pairwise distinct.
pub fn permutation_report(tower: &FieldTower, level: Level, map: &dyn FieldMap) -> Result<PermutationReport> {
    let size = tower.size(level);
    check_bound("permutation scan field size", size as u128, MAX_BRUTE_FIELD as u128)?;
    // preimage rank + 1, 0 = unseen
    let mut seen = vec![0u64; size as usize];
    for x in tower.elements(level) {
        let y = map.apply(&x)?;
        tower.check_level(&y, level)?;
        let slot = &mut seen[y.rank() as usize];
        if *slot != 0 {
            let prev = tower.element(level, *slot - 1)?;
            return Ok(PermutationReport {
                is_permutation: false,
                collision: Some((prev, x)),
            });
        }
        *slot = x.rank() + 1;
    }
    Ok(PermutationReport {
        is_permutation: true,
        collision: None,
    })
}

pub fn is_permutation_brute(tower: &FieldTower, level: Level, map: &dyn FieldMap) -> Result<bool> {
    Ok(permutation_report(tower, level, map)?.is_permutation)
}

fn check_lemma22_inputs(tower: &FieldTower, d: u64, beta: &FieldElement, delta: &FieldElement) -> Result<()> {
    if d == 0 {
        return domain("d must be positive");
    }
    tower.check_level(beta, Level::Middle)?;
    tower.check_level(delta, Level::Middle)?;
    if !tower.pow(beta, tower.q() as u128 + 1)?.is_one() {
        return domain("beta^(q+1) must equal 1");
    }
    if tower.is_in_fq(delta)? {
        return domain("delta must lie outside F_q");
    }
    Ok(())
}

/// `gcd(d(d + 2k), q - 1) == 1`: whether
/// `x^(d+k(q+1)) ((δ x^(q-1) - β δ^q)^d - δ (x^(q-1) - β)^d)` permutes `F_{q^2}`.
pub fn lemma22_predicate(tower: &FieldTower, d: u64, k: u64, beta: &FieldElement, delta: &FieldElement) -> Result<bool> {
    check_lemma22_inputs(tower, d, beta, delta)?;
    Ok(gcd(d * (d + 2 * k), tower.q() - 1) == 1)
}

/// The trinomial-type map whose permutation behaviour [`lemma22_predicate`]
/// predicts. Maps 0 to 0.
pub struct Lemma22Map<'t> {
    tower: &'t FieldTower,
    d: u128,
    monomial_exp: u128,
    beta: FieldElement,
    delta: FieldElement,
    beta_delta_q: FieldElement,
}

impl FieldMap for Lemma22Map<'_> {
    fn apply(&self, x: &FieldElement) -> Result<FieldElement> {
        let t = self.tower;
        if x.is_zero() {
            return Ok(*x);
        }
        let z = t.pow(x, t.q() as u128 - 1)?;
        let a = t.pow(&t.sub(&t.mul(&self.delta, &z)?, &self.beta_delta_q)?, self.d)?;
        let b = t.mul(&self.delta, &t.pow(&t.sub(&z, &self.beta)?, self.d)?)?;
        t.mul(&t.pow(x, self.monomial_exp)?, &t.sub(&a, &b)?)
    }
}

pub fn lemma22_build_f<'t>(
    tower: &'t FieldTower,
    d: u64,
    k: u64,
    beta: &FieldElement,
    delta: &FieldElement,
) -> Result<Lemma22Map<'t>> {
    check_lemma22_inputs(tower, d, beta, delta)?;
    let q = tower.q() as u128;
    Ok(Lemma22Map {
        tower,
        d: d as u128,
        monomial_exp: d as u128 + k as u128 * (q + 1),
        beta: *beta,
        delta: *delta,
        beta_delta_q: tower.mul(beta, &tower.frobenius_q(delta)?)?,
    })
}

/// Which of the four sufficient conditions hold for the quadrinomial
/// `x^3 + a x^(q+2) - a x^(2q+1) + c x^(3q)` over `F_{q^2}`, `q = 3^k`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Lemma23Conditions {
    /// `c = a != -1` and `a^((q-1)/2) = 1`
    pub c_equals_a: bool,
    /// `c = a - 1` and `(-a)^((q-1)/2) = 1`
    pub c_equals_a_minus_one: bool,
    /// `c = 1 - a`, `a != -1`, `k` even
    pub c_equals_one_minus_a: bool,
    /// `c = 1`
    pub c_equals_one: bool,
}

impl Lemma23Conditions {
    pub fn any(&self) -> bool {
        self.c_equals_a || self.c_equals_a_minus_one || self.c_equals_one_minus_a || self.c_equals_one
    }
}

fn check_lemma23_inputs(tower: &FieldTower, a: &FieldElement, c: &FieldElement) -> Result<()> {
    if tower.p() != 3 {
        return domain("the quadrinomial criterion needs q = 3^k");
    }
    for (name, v) in [("a", a), ("c", c)] {
        tower.check_level(v, Level::Middle)?;
        if v.is_zero() || !tower.is_in_fq(v)? {
            return domain(format!("{name} must lie in F_q*"));
        }
    }
    Ok(())
}

pub fn lemma23_conditions(tower: &FieldTower, a: &FieldElement, c: &FieldElement) -> Result<Lemma23Conditions> {
    check_lemma23_inputs(tower, a, c)?;
    let half = (tower.q() as u128 - 1) / 2;
    let one = tower.one(Level::Middle);
    let minus_one = tower.neg(&one)?;
    let neg_a = tower.neg(a)?;
    Ok(Lemma23Conditions {
        c_equals_a: c == a && *a != minus_one && tower.pow(a, half)?.is_one(),
        c_equals_a_minus_one: *c == tower.sub(a, &one)? && tower.pow(&neg_a, half)?.is_one(),
        c_equals_one_minus_a: *c == tower.sub(&one, a)? && *a != minus_one && tower.k() % 2 == 0,
        c_equals_one: c.is_one(),
    })
}

/// True when any sufficient condition for the quadrinomial to permute holds.
/// A `false` says nothing about the quadrinomial itself.
pub fn lemma23_predicate(tower: &FieldTower, a: &FieldElement, c: &FieldElement) -> Result<bool> {
    Ok(lemma23_conditions(tower, a, c)?.any())
}

/// `x^3 + a x^(q+2) - a x^(2q+1) + c x^(3q)` as a polynomial over `F_{q^2}`.
pub fn lemma23_quadrinomial(tower: &FieldTower, a: &FieldElement, c: &FieldElement) -> Result<Polynomial> {
    check_lemma23_inputs(tower, a, c)?;
    let q = tower.q() as usize;
    let mut coeffs = vec![tower.zero(Level::Middle); 3 * q + 1];
    coeffs[3] = tower.one(Level::Middle);
    coeffs[q + 2] = *a;
    coeffs[2 * q + 1] = tower.neg(a)?;
    coeffs[3 * q] = *c;
    PolyRing::new(tower, Level::Middle).from_coeffs(&coeffs)
}

/// `h` over `F_{q^2}` together with the top degree `m`; `deg h` must divide `m`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConditionOneInstance {
    h: Polynomial,
    m: u32,
}

impl ConditionOneInstance {
    pub fn new(h: Polynomial, m: u32) -> Result<Self> {
        if h.level() != Level::Middle {
            return domain("h must have coefficients in F_{q^2}");
        }
        let d = h.degree().unwrap_or(0) as u32;
        if d == 0 {
            return domain("h must have positive degree");
        }
        if m == 0 || m % d != 0 {
            return domain(format!("deg h = {d} does not divide m = {m}"));
        }
        Ok(Self { h, m })
    }

    pub fn h(&self) -> &Polynomial {
        &self.h
    }

    pub fn d(&self) -> u32 {
        self.h.degree().unwrap_or(0) as u32
    }

    pub fn m(&self) -> u32 {
        self.m
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ConditionOneWitness {
    /// `φ(x) = 0` for a nonzero `x`.
    ZeroValue { x: FieldElement },
    /// `φ(x)/φ(y) ∈ F_q` while `x/y ∉ F_q`.
    Collision { x: FieldElement, y: FieldElement },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ConditionOneReport {
    pub holds: bool,
    pub witness: Option<ConditionOneWitness>,
}

/// `φ(x) = x^m h(x^(q-1))^(m/d)` for `x` in `F_{q^2}`.
pub fn phi(tower: &FieldTower, inst: &ConditionOneInstance, x: &FieldElement) -> Result<FieldElement> {
    let ring = PolyRing::new(tower, Level::Middle);
    let z = tower.pow(x, tower.q() as u128 - 1)?;
    let hv = ring.eval(&inst.h, &z)?;
    let m = inst.m as u128;
    tower.mul(&tower.pow(x, m)?, &tower.pow(&hv, m / inst.d() as u128)?)
}

/// Whether `φ(x)/φ(y) ∈ F_q` implies `x/y ∈ F_q` for all nonzero `x, y` in
/// `F_{q^2}`.
///
/// `F_{q^2}*` splits into `q+1` cosets of `F_q*`, and `u ↦ u^(q-1)` labels
/// them. The condition says the `φ`-classes reached from distinct `x`-cosets
/// are disjoint, which is checked in one pass over `F_{q^2}*` with a map from
/// `φ`-class to the first `x` seen in it. Every `φ(x)` lies in `F_{q^2}` since
/// `h` does, so no top-level arithmetic is needed.
pub fn condition_one_check(tower: &FieldTower, inst: &ConditionOneInstance) -> Result<ConditionOneReport> {
    let size = tower.size(Level::Middle);
    check_bound("condition (1) field size", size as u128, MAX_CONDITION_FIELD as u128)?;
    let ring = PolyRing::new(tower, Level::Middle);
    ring.eval(&inst.h, &tower.zero(Level::Middle))?; // ownership check
    let qm1 = tower.q() as u128 - 1;
    let mut owner: HashMap<u64, FieldElement> = HashMap::new();
    for x in tower.elements(Level::Middle).skip(1) {
        let value = phi(tower, inst, &x)?;
        if value.is_zero() {
            return Ok(ConditionOneReport {
                holds: false,
                witness: Some(ConditionOneWitness::ZeroValue { x }),
            });
        }
        let x_class = tower.pow(&x, qm1)?;
        let phi_class = tower.pow(&value, qm1)?.rank();
        match owner.get(&phi_class) {
            Some(y) if tower.pow(y, qm1)? != x_class => {
                return Ok(ConditionOneReport {
                    holds: false,
                    witness: Some(ConditionOneWitness::Collision { x, y: *y }),
                });
            }
            Some(_) => {}
            None => {
                owner.insert(phi_class, x);
            }
        }
    }
    Ok(ConditionOneReport {
        holds: true,
        witness: None,
    })
}

/// Scan whether `x^d h(x^(q-1))` permutes `F_{q^2}`, `d = deg h`, which
/// requires `gcd(d, q-1) = 1`. When it does, the ratio condition with `m = d`
/// follows; debug builds check that implication.
pub fn lemma31_reduction(tower: &FieldTower, h: &Polynomial) -> Result<bool> {
    let d = h.degree().unwrap_or(0) as u64;
    if d == 0 {
        return domain("h must have positive degree");
    }
    if gcd(d, tower.q() - 1) != 1 {
        return domain(format!("gcd(deg h = {d}, q-1 = {}) != 1", tower.q() - 1));
    }
    let map = ClosedFormMap::standard(tower, d as u128, h.clone());
    let permutes = is_permutation_brute(tower, Level::Middle, &map)?;
    if cfg!(debug_assertions) && permutes {
        let inst = ConditionOneInstance::new(h.clone(), d as u32)?;
        if !condition_one_check(tower, &inst)?.holds {
            return Err(Error::Internal("permutation does not imply the ratio condition".into()));
        }
    }
    Ok(permutes)
}
