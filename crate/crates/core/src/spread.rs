//! The line `ℓ_b = {x - b x^q : x ∈ F_{q^2}}` inside `F_{q^{2m}}`, its orbit
//! under the subgroup `C` of order `(q^{2m}-1)/(q+1)`, and the check that the
//! orbit is a 1-spread.

use std::collections::HashSet;

use serde::{Deserialize, Serialize};

use crate::error::{check_bound, domain, Error, Result};
use crate::field::{ElementRepr, FieldDescription, FieldElement, FieldTower, Level};
use crate::poly::{minimal_polynomial, PolyRing, Polynomial};

/// Largest top field for which spreads are built and partition-checked.
pub const MAX_SPREAD_FIELD: u64 = 1 << 24;

/// The multiplicative subgroup of order `(q^{2m}-1)/(q+1)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SubgroupC {
    pub generator: FieldElement,
    pub order: u64,
}

impl SubgroupC {
    /// Elements `g^0, g^1, ...` as top-level ranks.
    pub fn ranks<'a>(&self, tower: &'a FieldTower) -> impl Iterator<Item = u64> + 'a {
        let g = self.generator.rank();
        let mut u = 1u64;
        (0..self.order).map(move |_| {
            let cur = u;
            u = tower.mul_rank(Level::Top, u, g);
            cur
        })
    }
}

/// `γ^(q+1)` for the first primitive element `γ` of the top level.
pub fn build_subgroup_c(tower: &FieldTower) -> Result<SubgroupC> {
    let q = tower.q();
    let order = tower.group_order(Level::Top) / (q + 1);
    let gamma = tower.primitive_element(Level::Top);
    let generator = tower.pow(&gamma, q as u128 + 1)?;
    debug_assert_eq!(tower.element_order(&generator)?, order);
    Ok(SubgroupC { generator, order })
}

/// A set of top-level elements stored as sorted ranks.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LineSet {
    ranks: Vec<u64>,
}

impl LineSet {
    /// Sorts and deduplicates.
    pub fn from_ranks(mut ranks: Vec<u64>) -> Self {
        ranks.sort_unstable();
        ranks.dedup();
        Self { ranks }
    }

    pub fn ranks(&self) -> &[u64] {
        &self.ranks
    }

    pub fn len(&self) -> usize {
        self.ranks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.ranks.is_empty()
    }

    pub fn contains(&self, rank: u64) -> bool {
        self.ranks.binary_search(&rank).is_ok()
    }

    pub fn elements(&self, tower: &FieldTower) -> Result<Vec<FieldElement>> {
        self.ranks.iter().map(|&r| tower.element(Level::Top, r)).collect()
    }

    /// `{u s : s ∈ self}`.
    pub fn scaled(&self, tower: &FieldTower, u: u64) -> Self {
        Self::from_ranks(self.ranks.iter().map(|&s| tower.mul_rank(Level::Top, u, s)).collect())
    }
}

/// Whether `set` is an `F_q`-subspace of the top level.
///
/// The additive span is grown from the members one generator at a time; the
/// set is a subgroup exactly when the span has no more elements than the set.
pub fn is_fq_subspace(tower: &FieldTower, set: &LineSet) -> Result<bool> {
    if !set.contains(0) {
        return Ok(false);
    }
    let mut span: HashSet<u64> = HashSet::from([0]);
    let mut order: Vec<u64> = vec![0];
    for &s in set.ranks() {
        if span.contains(&s) {
            continue;
        }
        let mut next = Vec::with_capacity(order.len() * tower.p() as usize);
        let mut multiple = 0;
        for _ in 0..tower.p() {
            for &x in &order {
                next.push(tower.add_rank(Level::Top, x, multiple));
            }
            multiple = tower.add_rank(Level::Top, multiple, s);
        }
        if next.len() > set.len() {
            return Ok(false);
        }
        span.extend(next.iter().copied());
        order = next;
    }
    if order.len() != set.len() {
        return Ok(false);
    }
    if tower.q() > 2 {
        let gen_fq = tower.pow(&tower.primitive_element(Level::Middle), tower.q() as u128 + 1)?;
        let c = tower.embed(&gen_fq, Level::Top)?.rank();
        if set.ranks().iter().any(|&s| !set.contains(tower.mul_rank(Level::Top, c, s))) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// `ℓ_b = {x - b x^q : x ∈ F_{q^2}}`, which has `q^2` elements when
/// `b^(q+1) != 1`.
pub fn build_ell_b(tower: &FieldTower, b: &FieldElement) -> Result<LineSet> {
    tower.check_level(b, Level::Top)?;
    let q = tower.q() as u128;
    if tower.pow(b, q + 1)?.is_one() {
        return domain("b^(q+1) = 1, so x - b x^q is not injective on F_{q^2}");
    }
    let mut ranks = Vec::with_capacity(tower.size(Level::Middle) as usize);
    for x in tower.elements(Level::Middle) {
        let x = tower.embed(&x, Level::Top)?;
        let v = tower.sub(&x, &tower.mul(b, &tower.pow(&x, q)?)?)?;
        ranks.push(v.rank());
    }
    let line = LineSet::from_ranks(ranks);
    if line.len() as u64 != tower.size(Level::Middle) {
        return Err(Error::Internal("ell_b lost elements despite b^(q+1) != 1".into()));
    }
    if !is_fq_subspace(tower, &line)? {
        return Err(Error::Internal("ell_b is not an F_q-subspace".into()));
    }
    Ok(line)
}

#[derive(Debug, Clone)]
pub struct Spread {
    tower: FieldTower,
    b: FieldElement,
    c: SubgroupC,
    lines: Vec<LineSet>,
    base_index: usize,
    stabilizer_order: u64,
}

impl Spread {
    pub fn tower(&self) -> &FieldTower {
        &self.tower
    }

    pub fn b(&self) -> FieldElement {
        self.b
    }

    pub fn subgroup(&self) -> SubgroupC {
        self.c
    }

    /// Members in sorted order.
    pub fn lines(&self) -> &[LineSet] {
        &self.lines
    }

    pub fn len(&self) -> usize {
        self.lines.len()
    }

    pub fn is_empty(&self) -> bool {
        self.lines.is_empty()
    }

    /// `ℓ_b` itself.
    pub fn base_line(&self) -> &LineSet {
        &self.lines[self.base_index]
    }

    pub fn base_index(&self) -> usize {
        self.base_index
    }

    /// Number of members a spread of `F_{q^{2m}}` by `q^2`-subspaces has.
    pub fn expected_len(tower: &FieldTower) -> u64 {
        tower.group_order(Level::Top) / (tower.size(Level::Middle) - 1)
    }

    pub fn to_record(&self) -> SpreadRecord {
        let t = &self.tower;
        SpreadRecord {
            field: t.description(),
            b: t.to_repr(&self.b),
            lines: self
                .lines
                .iter()
                .map(|l| l.ranks().iter().map(|&r| t.to_repr(&t.raw(Level::Top, r))).collect())
                .collect(),
        }
    }
}

/// Serialized spread: field description, `b`, and each member's elements.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SpreadRecord {
    pub field: FieldDescription,
    pub b: ElementRepr,
    pub lines: Vec<Vec<ElementRepr>>,
}

impl SpreadRecord {
    /// Rebuilds the tower and the member sets, without checking anything.
    pub fn decode(&self) -> Result<(FieldTower, FieldElement, Vec<LineSet>)> {
        let tower = FieldTower::from_description(&self.field)?;
        let b = tower.from_repr(Level::Top, &self.b)?;
        let lines = self
            .lines
            .iter()
            .map(|l| {
                l.iter()
                    .map(|e| tower.from_repr(Level::Top, e).map(|x| x.rank()))
                    .collect::<Result<Vec<_>>>()
                    .map(LineSet::from_ranks)
            })
            .collect::<Result<Vec<_>>>()?;
        Ok((tower, b, lines))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum CoverageWitness {
    /// A nonzero element lying in two members.
    DoubleCover { rank: u64, first: usize, second: usize },
    /// A nonzero element lying in no member.
    Uncovered { rank: u64 },
    /// A member that is not an `F_q`-subspace of size `q^2`.
    NotSubspace { line: usize },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PartitionFailure {
    pub members: u64,
    pub expected: u64,
    pub witness: CoverageWitness,
}

#[derive(Debug, Clone)]
pub enum SpreadOutcome {
    Spread(Spread),
    Failed(PartitionFailure),
}

impl SpreadOutcome {
    pub fn is_spread(&self) -> bool {
        matches!(self, SpreadOutcome::Spread(_))
    }

    pub fn spread(self) -> Option<Spread> {
        match self {
            SpreadOutcome::Spread(s) => Some(s),
            SpreadOutcome::Failed(_) => None,
        }
    }

    pub fn failure(&self) -> Option<&PartitionFailure> {
        match self {
            SpreadOutcome::Spread(_) => None,
            SpreadOutcome::Failed(f) => Some(f),
        }
    }
}

/// Checks that `lines` are `F_q`-subspaces of size `q^2` whose nonzero parts
/// cover every nonzero top-level element exactly once.
pub fn check_partition(tower: &FieldTower, lines: &[LineSet]) -> Result<Option<PartitionFailure>> {
    let size = tower.size(Level::Top);
    check_bound("spread field size", size as u128, MAX_SPREAD_FIELD as u128)?;
    let expected = Spread::expected_len(tower);
    let fail = |witness| {
        Ok(Some(PartitionFailure {
            members: lines.len() as u64,
            expected,
            witness,
        }))
    };
    let k = tower.size(Level::Middle) as usize;
    // owner index + 1 per element, 0 = uncovered
    let mut owner = vec![0u32; size as usize];
    for (i, line) in lines.iter().enumerate() {
        if line.len() != k || !is_fq_subspace(tower, line)? {
            return fail(CoverageWitness::NotSubspace { line: i });
        }
        for &r in &line.ranks()[1..] {
            let slot = &mut owner[r as usize];
            if *slot != 0 {
                return fail(CoverageWitness::DoubleCover {
                    rank: r,
                    first: *slot as usize - 1,
                    second: i,
                });
            }
            *slot = i as u32 + 1;
        }
    }
    if let Some(r) = (1..size).find(|&r| owner[r as usize] == 0) {
        return fail(CoverageWitness::Uncovered { rank: r });
    }
    Ok(None)
}

/// The orbit `ℓ_b^C`, kept only if it partitions the nonzero elements.
pub fn build_spread(tower: &FieldTower, b: &FieldElement, c: &SubgroupC) -> Result<SpreadOutcome> {
    check_bound("spread field size", tower.size(Level::Top) as u128, MAX_SPREAD_FIELD as u128)?;
    tower.check_level(&c.generator, Level::Top)?;
    let base = build_ell_b(tower, b)?;
    let mut seen: HashSet<LineSet> = HashSet::new();
    let mut stabilizer_order = 0u64;
    for u in c.ranks(tower) {
        let image = base.scaled(tower, u);
        if image == base {
            stabilizer_order += 1;
        }
        seen.insert(image);
    }
    let mut lines: Vec<LineSet> = seen.into_iter().collect();
    lines.sort_unstable();
    if let Some(failure) = check_partition(tower, &lines)? {
        return Ok(SpreadOutcome::Failed(failure));
    }
    let base_index = lines
        .binary_search(&base)
        .map_err(|_| Error::Internal("ell_b missing from its own orbit".into()))?;
    Ok(SpreadOutcome::Spread(Spread {
        tower: tower.clone(),
        b: *b,
        c: *c,
        lines,
        base_index,
        stabilizer_order,
    }))
}

/// Whether `b` lies in the embedded `F_{q^2}`.
pub fn is_desarguesian(s: &Spread) -> Result<bool> {
    let t = s.tower();
    Ok(t.pow(&s.b, t.size(Level::Middle) as u128)? == s.b)
}

/// `|{u ∈ C : u ℓ_b = ℓ_b}|`, counted while the orbit was built.
pub fn stabilizer_order_in_c(s: &Spread) -> u64 {
    s.stabilizer_order
}

/// Builds the top level as `F_{q^2}[y]/(h)` and takes `b = y`, so `h` is the
/// minimal polynomial of `b` by construction. Any tower sharing `p` and the
/// middle level can be passed as `base`.
pub fn spread_from_polynomial(base: &FieldTower, h: &Polynomial) -> Result<(FieldTower, SpreadOutcome)> {
    if h.level() != Level::Middle {
        return domain("h must have coefficients in F_{q^2}");
    }
    let tower = base.with_top_modulus(&h.coeffs())?;
    let b = tower.adjoined_root(Level::Top);
    let ring = PolyRing::new(&tower, Level::Middle);
    if minimal_polynomial(&tower, &b)? != ring.monic(h)? {
        return Err(Error::Internal("adjoined root does not have h as minimal polynomial".into()));
    }
    let c = build_subgroup_c(&tower)?;
    let outcome = build_spread(&tower, &b, &c)?;
    Ok((tower, outcome))
}
