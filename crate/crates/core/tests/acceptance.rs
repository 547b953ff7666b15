//! Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any
//! failure. Built without the libtest harness so the lines always print.

use std::process::ExitCode;
use std::time::Instant;

use flagspace::linear_space::{andre_bruck_bose, inflation_from_subfield, kantor_type4_parameter_clash, verify_design, DesignMode, DesignWitness};
use flagspace::perm::{condition_one_check, ConditionOneInstance, ConditionOneWitness};
use flagspace::pipeline::{end_to_end_theorem1, end_to_end_theorem2, PipelineReport, ResourceLimits, StageStatus};
use flagspace::poly::construct_pb_polynomial;
use flagspace::spread::spread_from_polynomial;
use flagspace::sweep::{sweep_lemma22, sweep_lemma23, sweep_lemma32};
use flagspace::{FieldTower, Level, PolyRing};

type Check = Result<String, String>;

fn ensure(ok: bool, msg: impl Into<String>) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg.into())
    }
}

fn all_pass(r: &PipelineReport) -> Result<(), String> {
    for s in &r.stages {
        ensure(s.status == StageStatus::Pass, format!("stage {} is {:?}: {}", s.name, s.status, s.detail))?;
    }
    Ok(())
}

fn e<E: std::fmt::Display>(x: E) -> String {
    x.to_string()
}

struct Runs {
    t1_q2: Option<PipelineReport>,
    t2_q3: Option<PipelineReport>,
    t1_q5: Option<PipelineReport>,
    t1_q2_t2: Option<PipelineReport>,
}

fn criterion1(runs: &mut Runs) -> Check {
    let r = end_to_end_theorem1(2, 3, 1, 1, &ResourceLimits::default()).map_err(e)?;
    ensure(r.polynomial_text == "x^3 + x + 1", format!("g_3 = {}", r.polynomial_text))?;
    all_pass(&r)?;
    let d = r.design.as_ref().ok_or("no design report")?;
    ensure(d.mode == DesignMode::Full && d.is_design, "design check")?;
    ensure((d.v, d.k, d.line_count) == (64, 4, 336), format!("{d:?}"))?;
    let f = r.flag_orbit.ok_or("no flag orbit")?;
    ensure(f.orbit == 1344 && f.flag_count == 1344, format!("{f:?}"))?;
    runs.t1_q2 = Some(r);
    Ok("x^3+x+1, 2-(64,4,1), 336 lines, flag orbit 1344, non-Desarguesian".into())
}

fn criterion2(runs: &mut Runs) -> Check {
    let r = end_to_end_theorem2(1, &ResourceLimits::default()).map_err(e)?;
    all_pass(&r)?;
    ensure(r.spread_members == Some(91), format!("{:?} members", r.spread_members))?;
    let d = r.design.as_ref().ok_or("no design report")?;
    ensure(d.mode == DesignMode::Full && d.is_design, "design check")?;
    ensure((d.v, d.k, d.line_count) == (729, 9, 7371), format!("{d:?}"))?;
    ensure(d.pairs_checked == Some(265356), format!("{:?} pairs", d.pairs_checked))?;
    let f = r.flag_orbit.ok_or("no flag orbit")?;
    ensure(f.transitive && f.orbit == 7371 * 9, format!("{f:?}"))?;
    runs.t2_q3 = Some(r);
    Ok("91 members, 7371 lines, 265356 pairs each on one line, flag orbit 66339".into())
}

fn criterion3(runs: &mut Runs) -> Check {
    let r = end_to_end_theorem1(5, 3, 1, 1, &ResourceLimits::default()).map_err(e)?;
    ensure(r.status("spread") == Some(StageStatus::Pass), "spread stage")?;
    ensure(r.spread_members == Some(651), format!("{:?} members", r.spread_members))?;
    let d = r.design.as_ref().ok_or("no design report")?;
    ensure(d.mode == DesignMode::Counting && d.is_design, "counting-mode design check")?;
    ensure(
        (d.v, d.k, d.replication, d.line_count) == (15625, 25, Some(651), 406875),
        format!("{d:?}"),
    )?;
    ensure(r.status("non_desarguesian") == Some(StageStatus::Pass), "non-Desarguesian")?;
    runs.t1_q5 = Some(r);
    Ok("651 members partition F_{5^6}*, v=15625 k=25 r=651, 406875 lines".into())
}

fn criterion4(runs: &mut Runs) -> Check {
    let r = end_to_end_theorem1(2, 3, 1, 2, &ResourceLimits::default()).map_err(e)?;
    ensure(r.status("spread") == Some(StageStatus::Pass), "spread stage")?;
    ensure(r.spread_members == Some(87381), format!("{:?} members", r.spread_members))?;
    let field = r.field.as_ref().ok_or("no field")?;
    ensure(field.p == 2 && field.k == 1 && field.m == 9, "field is not F_{2^18}")?;
    runs.t1_q2_t2 = Some(r);
    Ok("87381 members partition the 262143 nonzero elements of F_{2^18}".into())
}

fn criterion5() -> Check {
    let r = sweep_lemma32(&[2, 4, 5, 8, 13], 3).map_err(e)?;
    ensure(r.cases > 0 && r.passed(), format!("{:?}", r.counterexamples))?;
    Ok(format!("{} gcd and order instances, no counterexample", r.cases))
}

fn criterion6() -> Check {
    let r = sweep_lemma22(&[2, 3, 4, 5], 7, 3).map_err(e)?;
    ensure(r.cases > 0 && r.passed(), format!("{:?}", r.counterexamples))?;
    Ok(format!("{} (q, d, k, β, δ) cases, criterion equals scan", r.cases))
}

fn criterion7() -> Check {
    let r = sweep_lemma23(&[3, 9, 27]).map_err(e)?;
    ensure(r.cases == 4 + 64 + 676 && r.passed(), format!("{} cases {:?}", r.cases, r.counterexamples))?;
    ensure(r.predicate_true > 0, "no case satisfied the criterion")?;
    Ok(format!("{} (a, c) pairs, {} certified, all confirmed by scan", r.cases, r.predicate_true))
}

fn criterion8() -> Check {
    for p in [3u64, 5, 7] {
        let t = FieldTower::base(p, 1).map_err(e)?;
        let h = construct_pb_polynomial(&t).map_err(e)?;
        ensure(PolyRing::new(&t, Level::Middle).is_irreducible(&h).map_err(e)?, format!("p={p}: reducible"))?;
        let inst = ConditionOneInstance::new(h.clone(), p as u32).map_err(e)?;
        ensure(condition_one_check(&t, &inst).map_err(e)?.holds, format!("p={p}: condition fails"))?;
        if p == 3 {
            let (_, outcome) = spread_from_polynomial(&t, &h).map_err(e)?;
            let s = outcome.spread().ok_or("p=3: orbit is not a spread")?;
            ensure(s.len() == 91, format!("p=3: {} members", s.len()))?;
        }
    }
    Ok("p = 3, 5, 7 irreducible with the condition at m = p; 91-member spread for p = 3".into())
}

fn criterion9() -> Check {
    let t = FieldTower::base(2, 1).map_err(e)?;
    let ring = PolyRing::new(&t, Level::Middle);
    let inst = ConditionOneInstance::new(ring.from_ints(&[1, 1, 1]), 2).map_err(e)?;
    let rep = condition_one_check(&t, &inst).map_err(e)?;
    let witness = match rep.witness {
        Some(ConditionOneWitness::ZeroValue { x }) => format!("phi({}) = 0", t.format(&x)),
        Some(ConditionOneWitness::Collision { x, y }) => format!("collision at {}, {}", t.format(&x), t.format(&y)),
        None => return Err("x^2+x+1 passed".into()),
    };

    let h = ring.from_ints(&[1, 1, 0, 1]);
    let s = spread_from_polynomial(&t, &h).map_err(e)?.1.spread().ok_or("no spread")?;
    let ls = andre_bruck_bose(&s).map_err(e)?.without_line(0).map_err(e)?;
    let d = verify_design(&ls, DesignMode::Full).map_err(e)?;
    ensure(!d.is_design, "corrupted line set passed")?;
    let Some(DesignWitness::Pair { a, b, lines }) = d.witness else {
        return Err(format!("no witness pair: {:?}", d.witness));
    };
    Ok(format!("x^2+x+1 fails with {witness}; corrupted design fails at pair ({a}, {b}) on {lines} lines"))
}

fn criterion10(runs: &Runs) -> Check {
    let mut instances: Vec<(u64, u64)> = [&runs.t1_q2, &runs.t2_q3, &runs.t1_q5, &runs.t1_q2_t2]
        .into_iter()
        .flatten()
        .map(|r| (r.params.q, r.params.n))
        .collect();
    ensure(instances.len() == 4, "earlier constructions missing")?;
    instances.extend([(3, 3), (5, 5), (7, 7)]);
    for &(q, n) in &instances {
        ensure(!inflation_from_subfield(n, n, q), format!("q={q} n={n}: inflation criterion holds"))?;
        ensure(!kantor_type4_parameter_clash(q, n), format!("q={q} n={n}: n divides q-1"))?;
    }
    for r in [&runs.t1_q2, &runs.t2_q3, &runs.t1_q5, &runs.t1_q2_t2].into_iter().flatten() {
        ensure(!r.inflation_possible && !r.kantor_clash, "report flags disagree")?;
    }
    Ok(format!("no inflation from a subfield and no Kantor type 4 match for {instances:?}"))
}

fn main() -> ExitCode {
    let mut runs = Runs {
        t1_q2: None,
        t2_q3: None,
        t1_q5: None,
        t1_q2_t2: None,
    };
    let mut failed = 0;
    let mut report = |n: u32, start: Instant, r: Check| {
        let secs = start.elapsed().as_secs_f64();
        match r {
            Ok(msg) => println!("criterion {n:>2}: PASS  {msg}  [{secs:.1}s]"),
            Err(msg) => {
                failed += 1;
                println!("criterion {n:>2}: FAIL  {msg}  [{secs:.1}s]");
            }
        }
    };
    let s = Instant::now();
    let r = criterion1(&mut runs);
    report(1, s, r);
    let s = Instant::now();
    let r = criterion2(&mut runs);
    report(2, s, r);
    let s = Instant::now();
    let r = criterion3(&mut runs);
    report(3, s, r);
    let s = Instant::now();
    let r = criterion4(&mut runs);
    report(4, s, r);
    let s = Instant::now();
    report(5, s, criterion5());
    let s = Instant::now();
    report(6, s, criterion6());
    let s = Instant::now();
    report(7, s, criterion7());
    let s = Instant::now();
    report(8, s, criterion8());
    let s = Instant::now();
    report(9, s, criterion9());
    let s = Instant::now();
    let r = criterion10(&runs);
    report(10, s, r);
    if failed == 0 {
        println!("acceptance: all 10 criteria pass");
        ExitCode::SUCCESS
    } else {
        println!("acceptance: {failed} criteria failed");
        ExitCode::FAILURE
    }
}
