//! End-to-end constructions: polynomial, permutation checks, spread, linear
//! space, design and flag orbit, each recorded as a named stage.

use serde::{Deserialize, Serialize};

use crate::error::{domain, Error, Result};
use crate::field::{ElementRepr, FieldDescription, FieldElement, FieldTower, Level};
use crate::linear_space::{
    andre_bruck_bose, andre_bruck_bose_implicit, flag_transitivity_witness, inflation_from_subfield,
    kantor_type4_parameter_clash, verify_design, DesignMode, DesignReport, FlagOrbitReport,
};
use crate::num_theory::gcd;
use crate::perm::{
    condition_one_check, lemma22_predicate, lemma23_predicate, lemma31_reduction, ConditionOneInstance,
    ConditionOneWitness,
};
use crate::poly::{construct_gn, construct_theorem2_h, GnParams, PolyRing, Polynomial};
use crate::spread::{is_desarguesian, spread_from_polynomial, PartitionFailure, Spread, SpreadOutcome};

pub const SCHEMA: &str = "flagspace/1";

pub const STAGES: [&str; 9] = [
    "construct",
    "irreducible",
    "pp_criterion",
    "pp_brute",
    "condition_one",
    "spread",
    "design",
    "flag_transitive",
    "non_desarguesian",
];

/// Size thresholds that pick the verification tier of each stage.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct ResourceLimits {
    /// All-pairs design check up to this many points, counting mode beyond.
    pub full_design_points: u64,
    /// Flag orbit expansion up to this many points, skipped beyond.
    pub flag_orbit_points: u64,
    /// Materialize lines up to this many incidences.
    pub materialized_incidences: u64,
}

impl Default for ResourceLimits {
    fn default() -> Self {
        Self {
            full_design_points: crate::linear_space::MAX_FULL_CHECK_POINTS,
            flag_orbit_points: crate::linear_space::MAX_FLAG_ORBIT_POINTS,
            materialized_incidences: crate::linear_space::MAX_INCIDENCES,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum StageStatus {
    Pass,
    Fail,
    Skipped,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct StageReport {
    pub name: String,
    pub status: StageStatus,
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PipelineParams {
    pub theorem: u8,
    pub q: u64,
    pub n: u64,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub gn: Option<GnParams>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub k: Option<u32>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub a: Option<ElementRepr>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PipelineReport {
    pub schema: String,
    pub params: PipelineParams,
    /// Coefficients of `h` over `F_{q^2}`, ascending.
    pub polynomial: Vec<ElementRepr>,
    pub polynomial_text: String,
    pub field: Option<FieldDescription>,
    pub stages: Vec<StageReport>,
    pub spread_members: Option<u64>,
    pub spread_failure: Option<PartitionFailure>,
    pub design: Option<DesignReport>,
    pub flag_orbit: Option<FlagOrbitReport>,
    /// Whether some subfield inflation or Kantor type 4 parameter match is
    /// arithmetically possible.
    pub inflation_possible: bool,
    pub kantor_clash: bool,
}

impl PipelineReport {
    /// No stage failed; skipped stages are allowed.
    pub fn passed(&self) -> bool {
        self.stages.iter().all(|s| s.status != StageStatus::Fail)
    }

    pub fn stage(&self, name: &str) -> Option<&StageReport> {
        self.stages.iter().find(|s| s.name == name)
    }

    pub fn status(&self, name: &str) -> Option<StageStatus> {
        self.stage(name).map(|s| s.status)
    }
}

struct Recorder {
    stages: Vec<StageReport>,
}

impl Recorder {
    fn record(&mut self, name: &str, ok: bool, detail: impl Into<String>) -> bool {
        debug_assert!(STAGES.contains(&name));
        self.stages.push(StageReport {
            name: name.into(),
            status: if ok { StageStatus::Pass } else { StageStatus::Fail },
            detail: detail.into(),
        });
        ok
    }

    fn skip(&mut self, name: &str, detail: impl Into<String>) {
        self.stages.push(StageReport {
            name: name.into(),
            status: StageStatus::Skipped,
            detail: detail.into(),
        });
    }

    /// Marks every stage not yet recorded as skipped.
    fn finish(mut self, reason: &str) -> Vec<StageReport> {
        for name in STAGES {
            if self.stages.iter().all(|s| s.name != name) {
                self.skip(name, reason);
            }
        }
        self.stages
    }
}

fn describe_condition_witness(tower: &FieldTower, w: Option<ConditionOneWitness>) -> String {
    match w {
        Some(ConditionOneWitness::ZeroValue { x }) => format!("phi({}) = 0", tower.format(&x)),
        Some(ConditionOneWitness::Collision { x, y }) => {
            format!("phi({})/phi({}) in F_q", tower.format(&x), tower.format(&y))
        }
        None => "holds".into(),
    }
}

/// Shared tail: condition (1), spread, design, flag orbit, non-Desarguesian.
fn geometric_stages(
    base: &FieldTower,
    h: &Polynomial,
    limits: &ResourceLimits,
    rec: &mut Recorder,
    report: &mut PipelineReport,
) -> Result<()> {
    let n = report.params.n as u32;
    let inst = ConditionOneInstance::new(h.clone(), n)?;
    let cond = condition_one_check(base, &inst)?;
    if !rec.record("condition_one", cond.holds, describe_condition_witness(base, cond.witness)) {
        return Ok(());
    }

    let (tower, outcome) = spread_from_polynomial(base, h)?;
    report.field = Some(tower.description());
    let spread: Spread = match outcome {
        SpreadOutcome::Spread(s) => s,
        SpreadOutcome::Failed(f) => {
            rec.record("spread", false, format!("{:?}", f.witness));
            report.spread_failure = Some(f);
            return Ok(());
        }
    };
    report.spread_members = Some(spread.len() as u64);
    rec.record(
        "spread",
        true,
        format!(
            "{} members partition the {} nonzero elements",
            spread.len(),
            tower.group_order(Level::Top)
        ),
    );

    let v = tower.size(Level::Top);
    let incidences = spread.len() as u128 * v as u128;
    let ls = if incidences <= limits.materialized_incidences as u128 {
        andre_bruck_bose(&spread)?
    } else {
        andre_bruck_bose_implicit(&spread)?
    };
    let mode = if v <= limits.full_design_points && ls.is_materialized() {
        DesignMode::Full
    } else {
        DesignMode::Counting
    };
    let design = verify_design(&ls, mode)?;
    rec.record(
        "design",
        design.is_design,
        format!(
            "2-({}, {}, 1), {} lines, {:?} mode",
            design.v, design.k, design.line_count, design.mode
        ),
    );
    report.design = Some(design);

    if v <= limits.flag_orbit_points && ls.is_materialized() {
        let orbit = flag_transitivity_witness(&ls, &spread)?;
        rec.record(
            "flag_transitive",
            orbit.transitive,
            format!("orbit {} of {} flags", orbit.orbit, orbit.flag_count),
        );
        report.flag_orbit = Some(orbit);
    } else {
        rec.skip("flag_transitive", format!("{v} points exceed the orbit bound"));
    }

    let desarguesian = is_desarguesian(&spread)?;
    rec.record(
        "non_desarguesian",
        !desarguesian,
        if desarguesian { "b lies in F_{q^2}" } else { "b lies outside F_{q^2}" },
    );
    Ok(())
}

fn new_report(params: PipelineParams, tower: &FieldTower, h: &Polynomial) -> Result<PipelineReport> {
    let ring = PolyRing::new(tower, Level::Middle);
    let (q, n) = (params.q, params.n);
    Ok(PipelineReport {
        schema: SCHEMA.into(),
        params,
        polynomial: ring.to_repr(h)?,
        polynomial_text: ring.format(h),
        field: None,
        stages: Vec::new(),
        spread_members: None,
        spread_failure: None,
        design: None,
        flag_orbit: None,
        inflation_possible: inflation_from_subfield(n, n, q),
        kantor_clash: kantor_type4_parameter_clash(q, n),
    })
}

/// `g_n` with `n = d^t u`, `d` an odd divisor of `q+1`, through every stage.
pub fn end_to_end_theorem1(q: u64, d: u64, u: u64, t: u32, limits: &ResourceLimits) -> Result<PipelineReport> {
    let params = GnParams::new(q, d, u, t)?;
    let n = params.n().ok_or_else(|| Error::Domain("n overflows".into()))?;
    let tower = FieldTower::for_q(q, 1)?;
    let delta = tower.find_element_of_order(Level::Middle, q + 1)?;
    let h = construct_gn(&tower, params, &delta)?;
    let mut report = new_report(
        PipelineParams {
            theorem: 1,
            q,
            n,
            gn: Some(params),
            k: None,
            a: None,
        },
        &tower,
        &h,
    )?;
    let mut rec = Recorder { stages: Vec::new() };
    let text = PolyRing::new(&tower, Level::Middle).format(&h);
    rec.record("construct", h.degree() == Some(n as usize), format!("g_{n} = {text}"));
    run_common(&tower, &h, limits, &mut rec, &mut report, |rec| {
        let ok = lemma22_predicate(&tower, n, 0, &delta, &delta)?;
        rec.record(
            "pp_criterion",
            ok,
            format!("gcd(n^2, q-1) = {}", gcd(n * n, q - 1)),
        );
        Ok(ok)
    })?;
    report.stages = rec.finish("an earlier stage failed");
    Ok(report)
}

/// Least `a ∈ F_q*` in rank order with `Tr_{q/3}(1/a) != 0`.
pub fn theorem2_parameter(tower: &FieldTower) -> Result<FieldElement> {
    if tower.p() != 3 {
        return domain("needs q = 3^k");
    }
    for a in tower.elements(Level::Middle).skip(1) {
        if tower.is_in_fq(&a)? && !tower.subfield_trace(&tower.inv(&a)?, tower.k())?.is_zero() {
            return Ok(a);
        }
    }
    Err(Error::Internal("no a in F_q* with nonzero trace of 1/a".into()))
}

/// The cubic `x^3 + a x^2 - a x + 1` over `F_{q^2}`, `q = 3^k`, through every
/// stage.
pub fn end_to_end_theorem2(k: u32, limits: &ResourceLimits) -> Result<PipelineReport> {
    if k == 0 {
        return domain("k must be positive");
    }
    let tower = FieldTower::new(3, k, 1)?;
    let q = tower.q();
    let a = theorem2_parameter(&tower)?;
    let h = construct_theorem2_h(&tower, &a)?;
    let mut report = new_report(
        PipelineParams {
            theorem: 2,
            q,
            n: 3,
            gn: None,
            k: Some(k),
            a: Some(tower.to_repr(&a)),
        },
        &tower,
        &h,
    )?;
    let mut rec = Recorder { stages: Vec::new() };
    let text = PolyRing::new(&tower, Level::Middle).format(&h);
    rec.record("construct", true, format!("a = {}, h = {text}", tower.format(&a)));
    run_common(&tower, &h, limits, &mut rec, &mut report, |rec| {
        // x^3 h(x^(q-1)) is the quadrinomial with parameters (-a, 1)
        let ok = lemma23_predicate(&tower, &tower.neg(&a)?, &tower.one(Level::Middle))?;
        rec.record("pp_criterion", ok, "quadrinomial with c = 1");
        Ok(ok)
    })?;
    report.stages = rec.finish("an earlier stage failed");
    Ok(report)
}

fn run_common(
    tower: &FieldTower,
    h: &Polynomial,
    limits: &ResourceLimits,
    rec: &mut Recorder,
    report: &mut PipelineReport,
    criterion: impl FnOnce(&mut Recorder) -> Result<bool>,
) -> Result<()> {
    let ring = PolyRing::new(tower, Level::Middle);
    if !rec.record("irreducible", ring.is_irreducible(h)?, "over F_{q^2}") {
        return Ok(());
    }
    if !criterion(rec)? {
        return Ok(());
    }
    let n = report.params.n;
    if !rec.record(
        "pp_brute",
        lemma31_reduction(tower, h)?,
        format!("x^{n} h(x^(q-1)) scanned over F_{{q^2}}"),
    ) {
        return Ok(());
    }
    geometric_stages(tower, h, limits, rec, report)
}
