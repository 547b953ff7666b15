//! Grid sweeps comparing the closed-form criteria with exhaustive checks.
//! A counterexample here is a bug in this crate, not in the criteria.

use serde::{Deserialize, Serialize};

use crate::error::Result;
use crate::field::{FieldTower, Level};
use crate::num_theory::{odd_divisors_above_one, verify_gcd_identity, verify_order_claim, GcdIdentityInstance};
use crate::perm::{
    is_permutation_brute, lemma22_build_f, lemma22_predicate, lemma23_predicate, lemma23_quadrinomial,
    PolynomialMap,
};
use crate::poly::PolyRing;

/// Counterexamples kept in a report.
const MAX_RECORDED: usize = 16;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SweepReport {
    pub lemma: String,
    pub cases: u64,
    /// Cases where the criterion held (for sufficiency sweeps, the ones
    /// actually tested against the scan).
    pub predicate_true: u64,
    pub agreements: u64,
    pub counterexamples: Vec<String>,
}

impl SweepReport {
    fn new(lemma: &str) -> Self {
        Self {
            lemma: lemma.into(),
            cases: 0,
            predicate_true: 0,
            agreements: 0,
            counterexamples: Vec::new(),
        }
    }

    fn tally(&mut self, ok: bool, describe: impl FnOnce() -> String) {
        self.cases += 1;
        if ok {
            self.agreements += 1;
        } else if self.counterexamples.len() < MAX_RECORDED {
            self.counterexamples.push(describe());
        }
    }

    pub fn passed(&self) -> bool {
        self.cases == self.agreements
    }
}

/// Predicate against the exhaustive scan for every `q` in `qs`, `1 <= d <=
/// d_max`, `0 <= k <= k_max`, `β` of order dividing `q+1`, `δ ∉ F_q`.
pub fn sweep_lemma22(qs: &[u64], d_max: u64, k_max: u64) -> Result<SweepReport> {
    let mut report = SweepReport::new("2.2");
    for &q in qs {
        let tower = FieldTower::for_q(q, 1)?;
        let betas: Vec<_> = tower
            .elements(Level::Middle)
            .filter(|b| tower.pow(b, q as u128 + 1).map(|v| v.is_one()).unwrap_or(false))
            .collect();
        let mut deltas = Vec::new();
        for x in tower.elements(Level::Middle) {
            if !tower.is_in_fq(&x)? {
                deltas.push(x);
            }
        }
        for d in 1..=d_max {
            for k in 0..=k_max {
                for beta in &betas {
                    for delta in &deltas {
                        let predicted = lemma22_predicate(&tower, d, k, beta, delta)?;
                        let f = lemma22_build_f(&tower, d, k, beta, delta)?;
                        let actual = is_permutation_brute(&tower, Level::Middle, &f)?;
                        report.predicate_true += predicted as u64;
                        report.tally(predicted == actual, || {
                            format!(
                                "q={q} d={d} k={k} beta={} delta={}: predicate {predicted}, scan {actual}",
                                tower.format(beta),
                                tower.format(delta)
                            )
                        });
                    }
                }
            }
        }
    }
    Ok(report)
}

/// For every `q = 3^k` in `qs` and `a, c ∈ F_q*`: a true predicate must be
/// matched by the scan of the quadrinomial. Cases with a false predicate count
/// as agreements without a scan.
pub fn sweep_lemma23(qs: &[u64]) -> Result<SweepReport> {
    let mut report = SweepReport::new("2.3");
    for &q in qs {
        let tower = FieldTower::for_q(q, 1)?;
        let fq: Vec<_> = tower.subfield_elements(Level::Middle, tower.k())?;
        let ring = PolyRing::new(&tower, Level::Middle);
        for a in fq.iter().filter(|x| !x.is_zero()) {
            for c in fq.iter().filter(|x| !x.is_zero()) {
                if !lemma23_predicate(&tower, a, c)? {
                    report.tally(true, String::new);
                    continue;
                }
                report.predicate_true += 1;
                let f = PolynomialMap::new(ring, lemma23_quadrinomial(&tower, a, c)?);
                let ok = is_permutation_brute(&tower, Level::Middle, &f)?;
                report.tally(ok, || {
                    format!("q={q} a={} c={}: predicate true, scan false", tower.format(a), tower.format(c))
                });
            }
        }
    }
    Ok(report)
}

/// Gcd identity for every odd `d > 1` dividing `q+1`, `t <= t_max`, even
/// `i <= 2 d^t`, plus the order claim once per `(q, d, t)`.
pub fn sweep_lemma32(qs: &[u64], t_max: u32) -> Result<SweepReport> {
    let mut report = SweepReport::new("3.2");
    for &q in qs {
        for d in odd_divisors_above_one(q + 1) {
            for t in 1..=t_max {
                let order_ok = verify_order_claim(q, d, t)?;
                report.tally(order_ok, || format!("q={q} d={d} t={t}: order claim fails"));
                let bound = 2 * d.pow(t);
                for i in (2..=bound).step_by(2) {
                    let inst = GcdIdentityInstance::new(q, d, t, i)?;
                    let ok = verify_gcd_identity(&inst)?;
                    report.tally(ok, || {
                        let (l, r) = inst.sides().unwrap_or((0, 0));
                        format!("q={q} d={d} t={t} i={i}: {l} != {r}")
                    });
                }
            }
        }
    }
    report.predicate_true = report.cases;
    Ok(report)
}
