//! The two-level tower `F_p ⊂ F_{q^2} ⊂ F_{q^{2m}}` with `q = p^k`.
//!
//! The middle level is `F_p[x]/(base_modulus)` and the top level is
//! `F_{q^2}[y]/(top_modulus)`. Elements are stored by rank (see the crate docs):
//! the integer whose base-`p` digits are the flattened coordinates, lowest
//! first. A consequence used throughout the crate is that the fixed embeddings
//! `F_p → F_{q^2} → F_{q^{2m}}` are the identity on ranks.

use std::collections::hash_map::DefaultHasher;
use std::fmt;
use std::hash::{Hash, Hasher};

use serde::{Deserialize, Serialize};

use crate::arith::{self, Arith, ExtArith, PrimeArith};
use crate::error::{check_bound, domain, structural, Error, Result};
use crate::num_theory;

/// Largest number of elements allowed at any level.
pub const MAX_FIELD_SIZE: u64 = 1 << 62;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Level {
    Prime,
    Middle,
    Top,
}

impl Level {
    pub const ALL: [Level; 3] = [Level::Prime, Level::Middle, Level::Top];

    fn index(self) -> usize {
        self as usize
    }

    pub fn below(self) -> Option<Level> {
        match self {
            Level::Prime => None,
            Level::Middle => Some(Level::Prime),
            Level::Top => Some(Level::Middle),
        }
    }
}

impl fmt::Display for Level {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Level::Prime => "prime",
            Level::Middle => "middle",
            Level::Top => "top",
        })
    }
}

/// An element of one level of a [`FieldTower`].
///
/// Immutable and `Copy`. Equality is equality of the canonical coordinates
/// together with the owning field, so elements of unrelated fields never
/// compare equal.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FieldElement {
    field: u64,
    level: Level,
    rank: u64,
}

impl FieldElement {
    pub(crate) fn from_parts(field: u64, level: Level, rank: u64) -> Self {
        Self { field, level, rank }
    }

    pub fn level(&self) -> Level {
        self.level
    }

    /// Canonical rank: base-`p` digits are the flattened coordinates.
    pub fn rank(&self) -> u64 {
        self.rank
    }

    pub fn is_zero(&self) -> bool {
        self.rank == 0
    }

    pub fn is_one(&self) -> bool {
        self.rank == 1
    }
}

/// Serializable description of a tower.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FieldDescription {
    pub p: u64,
    pub k: u32,
    /// Monic modulus of `F_{q^2}` over `F_p`, ascending.
    pub base_modulus: Vec<u64>,
    pub m: u32,
    /// Monic modulus of the top level over `F_{q^2}`, ascending; each
    /// coefficient is itself an ascending `F_p` coordinate list.
    pub top_modulus: Vec<Vec<u64>>,
}

/// JSON form of a single element: an integer at the prime level, an `F_p`
/// coordinate list at the middle level, a list of middle-level coordinate
/// lists at the top level.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum ElementRepr {
    Prime(u64),
    Middle(Vec<u64>),
    Top(Vec<Vec<u64>>),
}

#[derive(Clone, Debug)]
pub struct FieldTower {
    p: u64,
    k: u32,
    m: u32,
    q: u64,
    ids: [u64; 3],
    prime: PrimeArith,
    middle: ExtArith<PrimeArith>,
    top: ExtArith<ExtArith<PrimeArith>>,
    group_factors: [Vec<(u64, u32)>; 3],
}

impl PartialEq for FieldTower {
    fn eq(&self, other: &Self) -> bool {
        self.ids == other.ids
    }
}

impl Eq for FieldTower {}

fn fingerprint(parts: &[&[u64]]) -> u64 {
    let mut h = DefaultHasher::new();
    for part in parts {
        part.hash(&mut h);
    }
    h.finish()
}

/// First monic irreducible polynomial of `degree` over `ar`, in the order that
/// compares coefficient ranks from `x^(degree-1)` down to `x^0`.
fn least_irreducible<A: Arith>(ar: &A, degree: usize) -> Vec<u64> {
    let base = ar.size();
    let mut index: u64 = 0;
    loop {
        let mut coeffs = Vec::with_capacity(degree + 1);
        let mut rest = index;
        for _ in 0..degree {
            coeffs.push(rest % base);
            rest /= base;
        }
        coeffs.push(1);
        if arith::is_irreducible(ar, &coeffs, base) {
            return coeffs;
        }
        index += 1;
    }
}

impl FieldTower {
    /// Tower with canonical moduli: the least irreducible polynomials of
    /// degrees `2k` over `F_p` and `m` over `F_{q^2}`.
    pub fn new(p: u64, k: u32, m: u32) -> Result<Self> {
        Self::validate_shape(p, k, m)?;
        let prime = PrimeArith { p };
        let base_modulus = least_irreducible(&prime, 2 * k as usize);
        let middle = ExtArith::new(prime.clone(), p, base_modulus.clone());
        let top_modulus = least_irreducible(&middle, m as usize);
        Self::assemble(p, k, base_modulus, top_modulus)
    }

    /// Tower for `F_{q^2}` alone (top level of degree 1 over the middle).
    pub fn base(p: u64, k: u32) -> Result<Self> {
        Self::new(p, k, 1)
    }

    /// Tower for a prime power `q`, top degree `m`.
    pub fn for_q(q: u64, m: u32) -> Result<Self> {
        let (p, k) = num_theory::prime_power(q)
            .ok_or_else(|| Error::Domain(format!("q = {q} is not a prime power")))?;
        Self::new(p, k, m)
    }

    fn validate_shape(p: u64, k: u32, m: u32) -> Result<()> {
        if !num_theory::is_prime(p) {
            return domain(format!("p = {p} is not prime"));
        }
        if k == 0 || m == 0 {
            return domain("extension degrees k and m must be positive");
        }
        let digits = 2u128 * k as u128 * m as u128;
        let size = (p as u128).checked_pow(digits as u32).unwrap_or(u128::MAX);
        check_bound("top-level field size", size, MAX_FIELD_SIZE as u128)
    }

    fn assemble(p: u64, k: u32, base_modulus: Vec<u64>, top_modulus: Vec<u64>) -> Result<Self> {
        let m = (top_modulus.len() - 1) as u32;
        Self::validate_shape(p, k, m)?;
        let prime = PrimeArith { p };
        let middle = ExtArith::new(prime.clone(), p, base_modulus.clone());
        let top = ExtArith::new(middle.clone(), p, top_modulus.clone());
        let ids = [
            fingerprint(&[&[p]]),
            fingerprint(&[&[p], &base_modulus]),
            fingerprint(&[&[p], &base_modulus, &top_modulus]),
        ];
        let group_factors = [
            num_theory::factor_pairs(p - 1)?,
            num_theory::factor_pairs(middle.size - 1)?,
            num_theory::factor_pairs(top.size - 1)?,
        ];
        Ok(Self {
            p,
            k,
            m,
            q: p.pow(k),
            ids,
            prime,
            middle,
            top,
            group_factors,
        })
    }

    /// Tower from explicit moduli; both must be monic and irreducible.
    pub fn from_moduli(p: u64, k: u32, base_modulus: Vec<u64>, top_modulus: Vec<Vec<u64>>) -> Result<Self> {
        if !num_theory::is_prime(p) {
            return domain(format!("p = {p} is not prime"));
        }
        if base_modulus.len() != 2 * k as usize + 1 || base_modulus.last() != Some(&1) {
            return domain(format!("base modulus must be monic of degree {}", 2 * k));
        }
        if base_modulus.iter().any(|&c| c >= p) {
            return domain("base modulus coefficient out of range");
        }
        let prime = PrimeArith { p };
        if !arith::is_irreducible(&prime, &base_modulus, p) {
            return domain("base modulus is reducible over F_p");
        }
        let middle = ExtArith::new(prime, p, base_modulus.clone());
        let mut top = Vec::with_capacity(top_modulus.len());
        for coeff in &top_modulus {
            if coeff.len() > 2 * k as usize || coeff.iter().any(|&c| c >= p) {
                return domain("top modulus coefficient is not an F_{q^2} coordinate list");
            }
            let mut padded = coeff.clone();
            padded.resize(2 * k as usize, 0);
            top.push(padded.iter().rev().fold(0u64, |acc, &c| acc * p + c));
        }
        if top.len() < 2 || top.last() != Some(&1) {
            return domain("top modulus must be monic of positive degree");
        }
        if !arith::is_irreducible(&middle, &top, middle.size) {
            return domain("top modulus is reducible over F_{q^2}");
        }
        Self::assemble(p, k, base_modulus, top)
    }

    pub fn from_description(desc: &FieldDescription) -> Result<Self> {
        let tower = Self::from_moduli(desc.p, desc.k, desc.base_modulus.clone(), desc.top_modulus.clone())?;
        if tower.m != desc.m {
            return domain(format!("m = {} disagrees with the top modulus degree {}", desc.m, tower.m));
        }
        Ok(tower)
    }

    pub fn description(&self) -> FieldDescription {
        FieldDescription {
            p: self.p,
            k: self.k,
            base_modulus: self.middle.modulus.clone(),
            m: self.m,
            top_modulus: self
                .top
                .modulus
                .iter()
                .map(|&r| self.rank_digits(r, 2 * self.k as usize))
                .collect(),
        }
    }

    /// Same prime and middle level, new top level `F_{q^2}[y]/(modulus)`.
    /// `modulus` is given by its middle-level coefficients, ascending, and is
    /// normalized to be monic.
    pub fn with_top_modulus(&self, modulus: &[FieldElement]) -> Result<Self> {
        let mut ranks = Vec::with_capacity(modulus.len());
        for c in modulus {
            self.check_level(c, Level::Middle)?;
            ranks.push(c.rank);
        }
        arith::trim(&mut ranks);
        if ranks.len() < 2 {
            return domain("top modulus must have positive degree");
        }
        let monic = arith::poly_monic(&self.middle, &ranks);
        if !arith::is_irreducible(&self.middle, &monic, self.middle.size) {
            return domain("top modulus is reducible over F_{q^2}");
        }
        Self::assemble(self.p, self.k, self.middle.modulus.clone(), monic)
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn k(&self) -> u32 {
        self.k
    }

    pub fn q(&self) -> u64 {
        self.q
    }

    pub fn m(&self) -> u32 {
        self.m
    }

    /// Monic modulus of the middle level over `F_p`, ascending.
    pub fn base_modulus(&self) -> &[u64] {
        &self.middle.modulus
    }

    /// Monic modulus of the top level, as middle-level elements.
    pub fn top_modulus(&self) -> Vec<FieldElement> {
        self.top
            .modulus
            .iter()
            .map(|&r| self.raw(Level::Middle, r))
            .collect()
    }

    /// Degree of a level over `F_p`.
    pub fn degree(&self, level: Level) -> u32 {
        match level {
            Level::Prime => 1,
            Level::Middle => 2 * self.k,
            Level::Top => 2 * self.k * self.m,
        }
    }

    pub fn size(&self, level: Level) -> u64 {
        match level {
            Level::Prime => self.p,
            Level::Middle => self.middle.size,
            Level::Top => self.top.size,
        }
    }

    pub fn group_order(&self, level: Level) -> u64 {
        self.size(level) - 1
    }

    pub fn group_order_factors(&self, level: Level) -> &[(u64, u32)] {
        &self.group_factors[level.index()]
    }

    pub(crate) fn field_id(&self, level: Level) -> u64 {
        self.ids[level.index()]
    }

    pub(crate) fn arith(&self, level: Level) -> &dyn Arith {
        match level {
            Level::Prime => &self.prime,
            Level::Middle => &self.middle,
            Level::Top => &self.top,
        }
    }

    #[inline]
    pub(crate) fn raw(&self, level: Level, rank: u64) -> FieldElement {
        FieldElement::from_parts(self.ids[level.index()], level, rank)
    }

    #[inline]
    pub(crate) fn add_rank(&self, level: Level, a: u64, b: u64) -> u64 {
        match level {
            Level::Prime => self.prime.add(a, b),
            Level::Middle => self.middle.add(a, b),
            Level::Top => self.top.add(a, b),
        }
    }

    #[inline]
    pub(crate) fn mul_rank(&self, level: Level, a: u64, b: u64) -> u64 {
        match level {
            Level::Prime => self.prime.mul(a, b),
            Level::Middle => self.middle.mul(a, b),
            Level::Top => self.top.mul(a, b),
        }
    }

    #[inline]
    pub(crate) fn pow_rank(&self, level: Level, a: u64, e: u128) -> u64 {
        self.arith(level).pow(a, e)
    }

    /// Whether `a` belongs to this tower (at any level).
    pub fn owns(&self, a: &FieldElement) -> bool {
        self.ids[a.level.index()] == a.field
    }

    pub(crate) fn check(&self, a: &FieldElement) -> Result<()> {
        if self.owns(a) {
            Ok(())
        } else {
            structural(format!("element of a different field at the {} level", a.level))
        }
    }

    pub(crate) fn check_level(&self, a: &FieldElement, level: Level) -> Result<()> {
        self.check(a)?;
        if a.level != level {
            return structural(format!("expected a {level}-level element, got {}", a.level));
        }
        Ok(())
    }

    fn check_pair(&self, a: &FieldElement, b: &FieldElement) -> Result<Level> {
        self.check(a)?;
        self.check(b)?;
        if a.level != b.level {
            return structural(format!("level mismatch: {} vs {}", a.level, b.level));
        }
        Ok(a.level)
    }

    pub fn element(&self, level: Level, rank: u64) -> Result<FieldElement> {
        if rank >= self.size(level) {
            return domain(format!("rank {rank} out of range for the {level} level"));
        }
        Ok(self.raw(level, rank))
    }

    pub fn zero(&self, level: Level) -> FieldElement {
        self.raw(level, 0)
    }

    pub fn one(&self, level: Level) -> FieldElement {
        self.raw(level, 1)
    }

    /// Image of an integer under `Z → F_p → level`.
    pub fn from_int(&self, level: Level, n: i64) -> FieldElement {
        let r = n.rem_euclid(self.p as i64) as u64;
        self.raw(level, r)
    }

    /// The class of the adjoined variable: `δ` (root of the base modulus) at
    /// the middle level, the root `y` of the top modulus at the top level.
    pub fn adjoined_root(&self, level: Level) -> FieldElement {
        match level {
            Level::Prime => self.one(Level::Prime),
            Level::Middle => self.raw(Level::Middle, self.p),
            Level::Top => {
                // y reduced modulo the top modulus (matters only when m = 1)
                let y = arith::poly_rem(&self.middle, &[0, 1], &self.top.modulus);
                let mut buf = y.clone();
                buf.resize(self.m as usize, 0);
                self.raw(Level::Top, self.top.encode(&buf))
            }
        }
    }

    fn rank_digits(&self, mut rank: u64, len: usize) -> Vec<u64> {
        let mut out = Vec::with_capacity(len);
        for _ in 0..len {
            out.push(rank % self.p);
            rank /= self.p;
        }
        out
    }

    /// Flattened `F_p` coordinates, ascending.
    pub fn digits(&self, a: &FieldElement) -> Vec<u64> {
        self.rank_digits(a.rank, self.degree(a.level) as usize)
    }

    pub fn from_digits(&self, level: Level, digits: &[u64]) -> Result<FieldElement> {
        let n = self.degree(level) as usize;
        if digits.len() > n {
            return domain(format!("{} coordinates given for a degree-{n} level", digits.len()));
        }
        if digits.iter().any(|&d| d >= self.p) {
            return domain("coordinate out of range");
        }
        let rank = digits.iter().rev().fold(0u64, |acc, &d| acc * self.p + d);
        Ok(self.raw(level, rank))
    }

    /// Coefficients over the next-lower level (prime-level elements are their
    /// own single coefficient).
    pub fn coeffs(&self, a: &FieldElement) -> Vec<FieldElement> {
        match a.level {
            Level::Prime => vec![*a],
            Level::Middle => self
                .rank_digits(a.rank, 2 * self.k as usize)
                .into_iter()
                .map(|d| self.raw(Level::Prime, d))
                .collect(),
            Level::Top => {
                let mut buf = vec![0; self.m as usize];
                self.top.decode(a.rank, &mut buf);
                buf.into_iter().map(|r| self.raw(Level::Middle, r)).collect()
            }
        }
    }

    pub fn from_coeffs(&self, level: Level, coeffs: &[FieldElement]) -> Result<FieldElement> {
        let Some(lower) = level.below() else {
            return match coeffs {
                [c] => {
                    self.check_level(c, Level::Prime)?;
                    Ok(*c)
                }
                _ => domain("a prime-level element has exactly one coefficient"),
            };
        };
        let n = match level {
            Level::Middle => 2 * self.k as usize,
            _ => self.m as usize,
        };
        if coeffs.len() > n {
            return domain(format!("{} coefficients given, level degree is {n}", coeffs.len()));
        }
        let base = self.size(lower);
        let mut rank = 0u64;
        for c in coeffs.iter().rev() {
            self.check_level(c, lower)?;
            rank = rank * base + c.rank;
        }
        Ok(self.raw(level, rank))
    }

    /// All elements of a level in rank order.
    pub fn elements(&self, level: Level) -> impl Iterator<Item = FieldElement> + '_ {
        (0..self.size(level)).map(move |r| self.raw(level, r))
    }

    pub fn add(&self, a: &FieldElement, b: &FieldElement) -> Result<FieldElement> {
        let level = self.check_pair(a, b)?;
        Ok(self.raw(level, self.add_rank(level, a.rank, b.rank)))
    }

    pub fn sub(&self, a: &FieldElement, b: &FieldElement) -> Result<FieldElement> {
        let level = self.check_pair(a, b)?;
        Ok(self.raw(level, self.arith(level).sub(a.rank, b.rank)))
    }

    pub fn neg(&self, a: &FieldElement) -> Result<FieldElement> {
        self.check(a)?;
        Ok(self.raw(a.level, self.arith(a.level).neg(a.rank)))
    }

    pub fn mul(&self, a: &FieldElement, b: &FieldElement) -> Result<FieldElement> {
        let level = self.check_pair(a, b)?;
        Ok(self.raw(level, self.mul_rank(level, a.rank, b.rank)))
    }

    /// Inverse through the extended Euclidean algorithm on coordinate
    /// polynomials.
    pub fn inv(&self, a: &FieldElement) -> Result<FieldElement> {
        self.check(a)?;
        if a.is_zero() {
            return domain("zero has no inverse");
        }
        Ok(self.raw(a.level, self.arith(a.level).inv(a.rank)))
    }

    pub fn div(&self, a: &FieldElement, b: &FieldElement) -> Result<FieldElement> {
        let inv = self.inv(b)?;
        self.mul(a, &inv)
    }

    /// `a^e` by square and multiply; `0^0 = 1`.
    pub fn pow(&self, a: &FieldElement, e: u128) -> Result<FieldElement> {
        self.check(a)?;
        Ok(self.raw(a.level, self.pow_rank(a.level, a.rank, e)))
    }

    pub fn frobenius_p(&self, a: &FieldElement) -> Result<FieldElement> {
        self.pow(a, self.p as u128)
    }

    /// `a ↦ a^q`.
    pub fn frobenius_q(&self, a: &FieldElement) -> Result<FieldElement> {
        self.pow(a, self.q as u128)
    }

    /// Whether `a` lies in the subfield `F_{p^sub_degree}` of its level.
    pub fn is_in_subfield(&self, a: &FieldElement, sub_degree: u32) -> Result<bool> {
        self.check(a)?;
        if sub_degree == 0 || self.degree(a.level) % sub_degree != 0 {
            return domain(format!(
                "F_p^{sub_degree} is not a subfield of the {} level",
                a.level
            ));
        }
        let size = (self.p as u128).pow(sub_degree);
        Ok(self.pow_rank(a.level, a.rank, size) == a.rank)
    }

    /// Membership in the copy of `F_q` inside the middle or top level.
    pub fn is_in_fq(&self, a: &FieldElement) -> Result<bool> {
        self.is_in_subfield(a, self.k)
    }

    /// Elements of the subfield `F_{p^sub_degree}` of `level`, in rank order.
    pub fn subfield_elements(&self, level: Level, sub_degree: u32) -> Result<Vec<FieldElement>> {
        if sub_degree == 0 || self.degree(level) % sub_degree != 0 {
            return domain(format!("F_p^{sub_degree} is not a subfield of the {level} level"));
        }
        check_bound("subfield scan", self.size(level) as u128, 1 << 24)?;
        let size = (self.p as u128).pow(sub_degree);
        let ar = self.arith(level);
        Ok((0..self.size(level))
            .filter(|&r| ar.pow(r, size) == r)
            .map(|r| self.raw(level, r))
            .collect())
    }

    /// Absolute trace `Σ a^(p^i)` over the whole level, as a prime-level element.
    pub fn trace_to_prime(&self, a: &FieldElement) -> Result<FieldElement> {
        self.subfield_trace(a, self.degree(a.level))
    }

    /// `Tr_{p^s / p}(a) = a + a^p + ... + a^(p^(s-1))` for `a` in the subfield
    /// `F_{p^s}` of its level.
    pub fn subfield_trace(&self, a: &FieldElement, sub_degree: u32) -> Result<FieldElement> {
        if !self.is_in_subfield(a, sub_degree)? {
            return domain(format!("element is not in F_p^{sub_degree}"));
        }
        let ar = self.arith(a.level);
        let mut acc = 0u64;
        let mut conj = a.rank;
        for _ in 0..sub_degree {
            acc = ar.add(acc, conj);
            conj = ar.pow(conj, self.p as u128);
        }
        if acc >= self.p {
            return Err(Error::Internal("trace left the prime field".into()));
        }
        Ok(self.raw(Level::Prime, acc))
    }

    /// Absolute norm `a^((|level| - 1)/(p - 1))`, as a prime-level element.
    pub fn norm_to_prime(&self, a: &FieldElement) -> Result<FieldElement> {
        self.check(a)?;
        let e = (self.size(a.level) - 1) / (self.p - 1);
        let n = self.pow_rank(a.level, a.rank, e as u128);
        if n >= self.p {
            return Err(Error::Internal("norm left the prime field".into()));
        }
        Ok(self.raw(Level::Prime, n))
    }

    /// Multiplicative order of a nonzero element.
    pub fn element_order(&self, a: &FieldElement) -> Result<u64> {
        self.check(a)?;
        if a.is_zero() {
            return domain("zero has no multiplicative order");
        }
        let level = a.level;
        let ar = self.arith(level);
        Ok(num_theory::reduce_order(
            self.group_order(level),
            self.group_order_factors(level),
            |e| ar.pow(a.rank, e as u128) == 1,
        ))
    }

    /// First element, in rank order, generating the multiplicative group.
    pub fn primitive_element(&self, level: Level) -> FieldElement {
        let n = self.group_order(level);
        let factors = self.group_order_factors(level);
        let ar = self.arith(level);
        let rank = (1..self.size(level))
            .find(|&r| factors.iter().all(|&(l, _)| ar.pow(r, (n / l) as u128) != 1))
            .expect("multiplicative group of a finite field is cyclic");
        self.raw(level, rank)
    }

    /// `γ^(N/n)` for the primitive element `γ`; exact order `n`.
    pub fn find_element_of_order(&self, level: Level, n: u64) -> Result<FieldElement> {
        let order = self.group_order(level);
        if n == 0 || order % n != 0 {
            return domain(format!("{n} does not divide the group order {order}"));
        }
        let gamma = self.primitive_element(level);
        self.pow(&gamma, (order / n) as u128)
    }

    /// Image of `a` under the fixed embedding into `target`.
    pub fn embed(&self, a: &FieldElement, target: Level) -> Result<FieldElement> {
        self.check(a)?;
        if target < a.level {
            return structural(format!("no embedding from the {} level into the {target} level", a.level));
        }
        Ok(self.raw(target, a.rank))
    }

    /// Preimage of `a` under the embedding from `target`, if `a` lies in its image.
    pub fn restrict(&self, a: &FieldElement, target: Level) -> Result<FieldElement> {
        self.check(a)?;
        if target > a.level {
            return structural(format!("cannot restrict a {} element to the {target} level", a.level));
        }
        if a.rank >= self.size(target) {
            return domain(format!("element is not in the image of the {target} level"));
        }
        Ok(self.raw(target, a.rank))
    }

    pub fn to_repr(&self, a: &FieldElement) -> ElementRepr {
        match a.level {
            Level::Prime => ElementRepr::Prime(a.rank),
            Level::Middle => ElementRepr::Middle(self.digits(a)),
            Level::Top => ElementRepr::Top(
                self.coeffs(a)
                    .iter()
                    .map(|c| self.digits(c))
                    .collect(),
            ),
        }
    }

    pub fn from_repr(&self, level: Level, repr: &ElementRepr) -> Result<FieldElement> {
        match (level, repr) {
            (Level::Prime, ElementRepr::Prime(r)) => self.element(Level::Prime, *r),
            (Level::Middle, ElementRepr::Middle(d)) => self.from_digits(Level::Middle, d),
            (Level::Top, ElementRepr::Top(cs)) => {
                let coeffs = cs
                    .iter()
                    .map(|d| self.from_digits(Level::Middle, d))
                    .collect::<Result<Vec<_>>>()?;
                self.from_coeffs(Level::Top, &coeffs)
            }
            (Level::Top, ElementRepr::Middle(d)) if d.is_empty() => Ok(self.zero(Level::Top)),
            _ => Err(Error::Parse(format!("element representation does not match the {level} level"))),
        }
    }

    /// Human-readable coordinates, e.g. `[1,0]` or `[[1,0],[0,1]]`.
    pub fn format(&self, a: &FieldElement) -> String {
        serde_json::to_string(&self.to_repr(a)).unwrap_or_default()
    }
}
