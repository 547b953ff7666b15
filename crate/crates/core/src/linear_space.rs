//! The André/Bruck–Bose linear space of a spread: points are the vectors of
//! the top field, lines are the cosets `S + w` of the spread members.

use std::collections::{HashMap, VecDeque};

use serde::{Deserialize, Serialize};

use crate::error::{check_bound, domain, Error, Result};
use crate::field::{FieldTower, Level};
use crate::num_theory::{divisors, gcd};
use crate::spread::{is_fq_subspace, LineSet, Spread};

/// Largest point set the construction accepts.
pub const MAX_POINTS: u64 = 1 << 20;
/// Lines are materialized only while `lines * k` stays below this.
pub const MAX_INCIDENCES: u64 = 1 << 25;
/// Largest point set for the all-pairs design check.
pub const MAX_FULL_CHECK_POINTS: u64 = 1 << 10;
/// Largest point set for explicit flag-orbit expansion.
pub const MAX_FLAG_ORBIT_POINTS: u64 = 1 << 12;

#[derive(Debug, Clone)]
enum LineStore {
    /// Flattened point lists, `k` per line, each sorted.
    Explicit(Vec<u32>),
    /// Lines are the cosets of `members`, never listed.
    Implicit { tower: FieldTower, members: Vec<LineSet> },
}

#[derive(Debug, Clone)]
pub struct LinearSpace {
    v: u64,
    k: u64,
    store: LineStore,
}

impl LinearSpace {
    /// A linear space given by explicit lines over points `0..v`. Line sizes
    /// are not checked here; [`verify_design`] reports them.
    pub fn from_lines(v: u64, k: u64, lines: &[Vec<u32>]) -> Result<Self> {
        if v > MAX_POINTS || k == 0 {
            return domain("need 0 < k and v within bounds");
        }
        let mut flat = Vec::with_capacity(lines.len() * k as usize);
        for line in lines {
            if line.len() as u64 != k {
                return domain(format!("line of size {} where k = {k}", line.len()));
            }
            if line.iter().any(|&x| x as u64 >= v) {
                return domain("point out of range");
            }
            let mut sorted = line.clone();
            sorted.sort_unstable();
            flat.extend(sorted);
        }
        Ok(Self {
            v,
            k,
            store: LineStore::Explicit(flat),
        })
    }

    pub fn v(&self) -> u64 {
        self.v
    }

    pub fn k(&self) -> u64 {
        self.k
    }

    pub fn line_count(&self) -> u64 {
        match &self.store {
            LineStore::Explicit(flat) => flat.len() as u64 / self.k,
            LineStore::Implicit { members, .. } => members.len() as u64 * (self.v / self.k),
        }
    }

    pub fn is_materialized(&self) -> bool {
        matches!(self.store, LineStore::Explicit(_))
    }

    /// Points of line `i`, sorted; `None` when lines are not materialized.
    pub fn line(&self, i: usize) -> Option<&[u32]> {
        match &self.store {
            LineStore::Explicit(flat) => {
                let k = self.k as usize;
                flat.get(i * k..(i + 1) * k)
            }
            LineStore::Implicit { .. } => None,
        }
    }

    pub fn lines(&self) -> impl Iterator<Item = &[u32]> {
        let flat: &[u32] = match &self.store {
            LineStore::Explicit(flat) => flat,
            LineStore::Implicit { .. } => &[],
        };
        flat.chunks(self.k as usize)
    }

    /// Copy with line `i` removed.
    pub fn without_line(&self, i: usize) -> Result<Self> {
        let LineStore::Explicit(flat) = &self.store else {
            return domain("lines are not materialized");
        };
        let k = self.k as usize;
        if (i + 1) * k > flat.len() {
            return domain(format!("no line {i}"));
        }
        let mut flat = flat.clone();
        flat.drain(i * k..(i + 1) * k);
        Ok(Self {
            v: self.v,
            k: self.k,
            store: LineStore::Explicit(flat),
        })
    }

    pub fn to_record(&self) -> Result<LinearSpaceRecord> {
        if !self.is_materialized() {
            return domain("lines are not materialized");
        }
        Ok(LinearSpaceRecord {
            v: self.v,
            k: self.k,
            lines: self.lines().map(|l| l.to_vec()).collect(),
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LinearSpaceRecord {
    pub v: u64,
    pub k: u64,
    pub lines: Vec<Vec<u32>>,
}

impl LinearSpaceRecord {
    pub fn decode(&self) -> Result<LinearSpace> {
        LinearSpace::from_lines(self.v, self.k, &self.lines)
    }
}

/// Lines of `s` translated through the whole top field, materialized when
/// small enough and kept implicit otherwise.
pub fn andre_bruck_bose(s: &Spread) -> Result<LinearSpace> {
    let t = s.tower();
    let v = t.size(Level::Top);
    check_bound("linear space points", v as u128, MAX_POINTS as u128)?;
    let incidences = s.len() as u128 * v as u128;
    if incidences > MAX_INCIDENCES as u128 {
        return andre_bruck_bose_implicit(s);
    }
    let k = t.size(Level::Middle);
    let mut flat = Vec::with_capacity(incidences as usize);
    let mut covered = vec![false; v as usize];
    for member in s.lines() {
        covered.iter_mut().for_each(|c| *c = false);
        for w in 0..v {
            if covered[w as usize] {
                continue;
            }
            let start = flat.len();
            for &x in member.ranks() {
                let y = t.add_rank(Level::Top, w, x);
                covered[y as usize] = true;
                flat.push(y as u32);
            }
            flat[start..].sort_unstable();
        }
    }
    Ok(LinearSpace {
        v,
        k,
        store: LineStore::Explicit(flat),
    })
}

/// The same linear space with lines left as cosets of the spread members.
pub fn andre_bruck_bose_implicit(s: &Spread) -> Result<LinearSpace> {
    let t = s.tower();
    let v = t.size(Level::Top);
    check_bound("linear space points", v as u128, MAX_POINTS as u128)?;
    Ok(LinearSpace {
        v,
        k: t.size(Level::Middle),
        store: LineStore::Implicit {
            tower: t.clone(),
            members: s.lines().to_vec(),
        },
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum DesignMode {
    /// Every point pair is looked up.
    Full,
    /// Line sizes, replication numbers and the counting identity only.
    Counting,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum DesignWitness {
    /// Two points on `lines != 1` common lines.
    Pair { a: u64, b: u64, lines: u64 },
    /// A point whose replication number is off.
    Point { point: u64, replication: u64 },
    /// A line with the wrong number of distinct points.
    Line { line: u64 },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DesignReport {
    pub mode: DesignMode,
    pub is_design: bool,
    pub v: u64,
    pub k: u64,
    pub line_count: u64,
    /// Common replication number when every point has the same one.
    pub replication: Option<u64>,
    /// Pairs covered exactly once (full mode).
    pub pairs_checked: Option<u64>,
    pub witness: Option<DesignWitness>,
}

/// Checks that `ls` is a 2-`(v, k, 1)` design.
///
/// Counting mode on implicit lines checks each member is an additive subgroup
/// of size `k`; every point then lies on exactly one coset of each member, so
/// the replication number is the member count.
pub fn verify_design(ls: &LinearSpace, mode: DesignMode) -> Result<DesignReport> {
    let (v, k) = (ls.v, ls.k);
    let mut report = DesignReport {
        mode,
        is_design: false,
        v,
        k,
        line_count: ls.line_count(),
        replication: None,
        pairs_checked: None,
        witness: None,
    };
    if k < 2 || v < k {
        return domain("need 2 <= k <= v");
    }
    let target_r = (v - 1) / (k - 1);
    let identity = report.line_count as u128 * (k * (k - 1)) as u128 == v as u128 * (v - 1) as u128
        && (v - 1) % (k - 1) == 0;

    let flat = match (&ls.store, mode) {
        (LineStore::Implicit { tower, members }, DesignMode::Counting) => {
            for (i, m) in members.iter().enumerate() {
                if m.len() as u64 != k || !is_fq_subspace(tower, m)? {
                    report.witness = Some(DesignWitness::Line { line: i as u64 });
                    return Ok(report);
                }
            }
            let r = members.len() as u64;
            report.replication = Some(r);
            report.is_design = identity && r == target_r;
            return Ok(report);
        }
        (LineStore::Implicit { .. }, DesignMode::Full) => {
            return domain("full design check needs materialized lines");
        }
        (LineStore::Explicit(flat), _) => flat,
    };

    for (i, line) in flat.chunks(k as usize).enumerate() {
        if line.windows(2).any(|w| w[0] >= w[1]) {
            report.witness = Some(DesignWitness::Line { line: i as u64 });
            return Ok(report);
        }
    }
    let mut repl = vec![0u64; v as usize];
    for &x in flat {
        repl[x as usize] += 1;
    }
    report.replication = repl.iter().all(|&r| r == repl[0]).then_some(repl[0]);

    match mode {
        DesignMode::Counting => {
            if let Some((point, &r)) = repl.iter().enumerate().find(|(_, &r)| r != target_r) {
                report.witness = Some(DesignWitness::Point {
                    point: point as u64,
                    replication: r,
                });
                return Ok(report);
            }
            report.is_design = identity;
        }
        DesignMode::Full => {
            check_bound("full design check points", v as u128, MAX_FULL_CHECK_POINTS as u128)?;
            let n = v as usize;
            let mut count = vec![0u8; n * n];
            for line in flat.chunks(k as usize) {
                for (i, &a) in line.iter().enumerate() {
                    for &b in &line[i + 1..] {
                        let c = &mut count[a as usize * n + b as usize];
                        *c = c.saturating_add(1);
                    }
                }
            }
            let mut pairs = 0u64;
            for a in 0..n {
                for b in a + 1..n {
                    let c = count[a * n + b];
                    if c != 1 {
                        report.witness = Some(DesignWitness::Pair {
                            a: a as u64,
                            b: b as u64,
                            lines: c as u64,
                        });
                        report.pairs_checked = Some(pairs);
                        return Ok(report);
                    }
                    pairs += 1;
                }
            }
            report.pairs_checked = Some(pairs);
            report.is_design = true;
        }
    }
    Ok(report)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct FlagOrbitReport {
    pub flag_count: u64,
    /// Orbit of the base flag under translations alone.
    pub translation_orbit: u64,
    /// Orbit under translations and `C`.
    pub orbit: u64,
    pub transitive: bool,
}

/// Orbit of the flag `(0, ℓ_b)` under the translations `x ↦ x + w` and the
/// multiplications `x ↦ u x`, `u ∈ C`, by breadth-first search over flags.
pub fn flag_transitivity_witness(ls: &LinearSpace, s: &Spread) -> Result<FlagOrbitReport> {
    let t = s.tower();
    check_bound("flag orbit points", ls.v as u128, MAX_FLAG_ORBIT_POINTS as u128)?;
    if ls.v != t.size(Level::Top) {
        return domain("linear space and spread live in different fields");
    }
    let LineStore::Explicit(flat) = &ls.store else {
        return domain("flag orbit needs materialized lines");
    };
    let k = ls.k as usize;
    let n_lines = flat.len() / k;
    // two points determine a line
    let mut by_pair: HashMap<(u32, u32), u32> = HashMap::with_capacity(n_lines);
    for (i, line) in flat.chunks(k).enumerate() {
        by_pair.insert((line[0], line[1]), i as u32);
    }
    let v = ls.v;
    let digits = t.degree(Level::Top);
    let mut translations = Vec::new();
    let mut basis = 1u64;
    for _ in 0..digits {
        translations.push((0..v).map(|x| t.add_rank(Level::Top, x, basis) as u32).collect::<Vec<_>>());
        basis *= t.p();
    }
    let g = s.subgroup().generator.rank();
    let scaling: Vec<u32> = (0..v).map(|x| t.mul_rank(Level::Top, g, x) as u32).collect();

    let base = s.base_line();
    let start_line = *by_pair
        .get(&(base.ranks()[0] as u32, base.ranks()[1] as u32))
        .ok_or_else(|| Error::Internal("ell_b is not a line".into()))?;
    let flag_count = flat.len() as u64;
    let mut seen = vec![false; flat.len()];
    let mut order = vec![start_line as usize * k];
    seen[order[0]] = true;

    let mut image = vec![0u32; k];
    let mut expand = |perms: &[&Vec<u32>], order: &mut Vec<usize>, seen: &mut Vec<bool>| -> Result<()> {
        let mut queue: VecDeque<usize> = order.iter().copied().collect();
        while let Some(flag) = queue.pop_front() {
            let (line, pos) = (flag / k, flag % k);
            let pts = &flat[line * k..(line + 1) * k];
            for perm in perms {
                for (dst, &x) in image.iter_mut().zip(pts) {
                    *dst = perm[x as usize];
                }
                let point = image[pos];
                image.sort_unstable();
                let id = *by_pair
                    .get(&(image[0], image[1]))
                    .ok_or_else(|| Error::Internal("image of a line is not a line".into()))?
                    as usize;
                let target = &flat[id * k..(id + 1) * k];
                if target != &image[..] {
                    return Err(Error::Internal("image of a line is not a line".into()));
                }
                let p = target.binary_search(&point).expect("point on its own line");
                let f = id * k + p;
                if !seen[f] {
                    seen[f] = true;
                    order.push(f);
                    queue.push_back(f);
                }
            }
        }
        Ok(())
    };
    let trans_refs: Vec<&Vec<u32>> = translations.iter().collect();
    expand(&trans_refs, &mut order, &mut seen)?;
    let translation_orbit = order.len() as u64;
    let mut all = trans_refs.clone();
    all.push(&scaling);
    expand(&all, &mut order, &mut seen)?;
    let orbit = order.len() as u64;
    debug_assert_eq!(flag_count % translation_orbit, 0);
    Ok(FlagOrbitReport {
        flag_count,
        translation_orbit,
        orbit,
        transitive: orbit == flag_count && flag_count as usize == n_lines * k,
    })
}

/// Whether the space from `h` (degree `d`) in `F_{q^{2 m m'}}` is an inflation
/// of one in `F_{q^{2m}}`: `d | m` and `gcd(m', q+1) = 1`.
pub fn inflation_criterion(d: u64, m: u64, m_prime: u64, q: u64) -> bool {
    m % d == 0 && gcd(m_prime, q + 1) == 1
}

/// Whether some proper subfield `F_{q^{2m}}`, `m m' = n`, `m' > 1`, passes
/// [`inflation_criterion`] for a degree-`d` polynomial in `F_{q^{2n}}`.
pub fn inflation_from_subfield(d: u64, n: u64, q: u64) -> bool {
    divisors(n)
        .into_iter()
        .filter(|&mp| mp > 1)
        .any(|mp| inflation_criterion(d, n / mp, mp, q))
}

/// Whether `n | q-1`, the only way `q^{2n}` points with `q^2` per line could
/// match a Kantor type 4 space.
pub fn kantor_type4_parameter_clash(q: u64, n: u64) -> bool {
    (q - 1) % n == 0
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::PolyRing;
    use crate::spread::spread_from_polynomial;

    fn smallest() -> Spread {
        let base = FieldTower::base(2, 1).unwrap();
        let h = PolyRing::new(&base, Level::Middle).from_ints(&[1, 1, 0, 1]);
        spread_from_polynomial(&base, &h).unwrap().1.spread().unwrap()
    }

    #[test]
    fn smallest_design() {
        let s = smallest();
        let ls = andre_bruck_bose(&s).unwrap();
        assert_eq!((ls.v(), ls.k(), ls.line_count()), (64, 4, 336));
        let full = verify_design(&ls, DesignMode::Full).unwrap();
        assert!(full.is_design);
        assert_eq!(full.pairs_checked, Some(2016));
        assert_eq!(full.replication, Some(21));
        let counting = verify_design(&ls, DesignMode::Counting).unwrap();
        assert!(counting.is_design);
        let implicit = andre_bruck_bose_implicit(&s).unwrap();
        let r = verify_design(&implicit, DesignMode::Counting).unwrap();
        assert!(r.is_design);
        assert_eq!(r.line_count, 336);
    }

    #[test]
    fn corrupted_design() {
        let ls = andre_bruck_bose(&smallest()).unwrap().without_line(5).unwrap();
        let full = verify_design(&ls, DesignMode::Full).unwrap();
        assert!(!full.is_design);
        assert!(matches!(full.witness, Some(DesignWitness::Pair { lines: 0, .. })));
        assert!(!verify_design(&ls, DesignMode::Counting).unwrap().is_design);
    }

    #[test]
    fn smallest_flag_orbit() {
        let s = smallest();
        let ls = andre_bruck_bose(&s).unwrap();
        let r = flag_transitivity_witness(&ls, &s).unwrap();
        assert_eq!(r.flag_count, 1344);
        assert_eq!(r.translation_orbit, 64);
        assert!(r.transitive);
    }

    #[test]
    fn record_round_trip() {
        let ls = andre_bruck_bose(&smallest()).unwrap();
        let rec = ls.to_record().unwrap();
        let json = serde_json::to_string(&rec).unwrap();
        let back: LinearSpaceRecord = serde_json::from_str(&json).unwrap();
        assert_eq!(back, rec);
        assert_eq!(back.decode().unwrap().line_count(), 336);
    }

    #[test]
    fn section_five_arithmetic() {
        assert!(inflation_criterion(3, 3, 2, 2));
        assert!(!inflation_criterion(3, 3, 3, 2));
        assert!(!inflation_from_subfield(3, 3, 2));
        assert!(!inflation_from_subfield(9, 9, 2));
        assert!(!kantor_type4_parameter_clash(2, 3));
        assert!(!kantor_type4_parameter_clash(3, 3));
        assert!(kantor_type4_parameter_clash(7, 3));
    }
}
