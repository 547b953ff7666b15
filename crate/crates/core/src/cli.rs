//! Command-line front end. [`run_with`] is the whole program; the binary only
//! forwards `std::env::args` and the exit code.
//!
//! Exit codes: 0 every check true, 1 a check false, 2 bad usage or
//! parameters, 3 a resource bound was hit.

use std::fs;
use std::io::Write;
use std::path::PathBuf;

use clap::{ArgGroup, Args, Parser, Subcommand, ValueEnum};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::field::{ElementRepr, FieldDescription, FieldElement, FieldTower, Level};
use crate::linear_space::andre_bruck_bose;
use crate::perm::{
    condition_one_check, lemma22_build_f, lemma22_predicate, lemma23_conditions, lemma23_quadrinomial,
    permutation_report, ClosedFormMap, ConditionOneInstance, ConditionOneWitness, FieldMap, Lemma23Conditions,
    PolynomialMap,
};
use crate::pipeline::{end_to_end_theorem1, end_to_end_theorem2, theorem2_parameter, ResourceLimits, SCHEMA};
use crate::poly::{construct_gn, construct_pb_polynomial, construct_theorem2_h, GnParams, PolyRing, Polynomial};
use crate::spread::{
    check_partition, is_desarguesian, spread_from_polynomial, stabilizer_order_in_c, PartitionFailure, Spread,
    SpreadOutcome, SpreadRecord,
};
use crate::sweep::{sweep_lemma22, sweep_lemma23, sweep_lemma32};

const POLY_HELP: &str = "\
Polynomials are ascending coefficient lists. With only commas, each entry is an
integer reduced mod p (coefficients in F_p):  1,1,0,1  is x^3 + x + 1.
With semicolons, each ';'-separated entry is one F_{q^2} coefficient, written
either as an integer mod p or as a comma list of its 2k digits over F_p in the
basis 1, z, z^2, ... of F_{q^2} = F_p[z]/(base modulus):  1;0,1;1  is
x^2 + z x + 1. Single field elements (--a, --c, --beta, --delta) use the same
element syntax: an integer mod p or a digit list.";

#[derive(Parser, Debug)]
#[command(name = "flagspace", version, about = "Flag-transitive linear spaces from spreads over F_{q^2}")]
#[command(after_help = POLY_HELP)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Run a full construction and report every stage.
    Construct(ConstructArgs),
    /// Check whether a map permutes F_{q^2}.
    CheckPp(CheckPpArgs),
    /// Check the ratio condition on x^m h(x^(q-1))^(m/d).
    CheckCondition(CheckConditionArgs),
    /// Compare closed-form criteria with exhaustive checks over a grid.
    Sweep(SweepArgs),
    /// Build or load a spread and check it partitions the nonzero vectors.
    VerifySpread(VerifySpreadArgs),
    /// Write a spread or linear space as JSON.
    Export(ExportArgs),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Args, Debug)]
struct OutputArgs {
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Write to this file instead of standard output.
    #[arg(long)]
    output: Option<PathBuf>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Family {
    /// g_n from (d, u, t)
    Gn,
    /// x^p + ... + x - 1 over F_{p^2}
    Pb,
    /// x^3 + a x^2 - a x + 1, q = 3^k
    Theorem2,
}

#[derive(Args, Debug)]
struct PolyArgs {
    /// Polynomial over F_{q^2}, ascending (see the grammar below).
    #[arg(long)]
    h: Option<String>,
    #[arg(long, value_enum)]
    family: Option<Family>,
    /// Odd divisor of q+1 (gn family), or the exponent d (--lemma22).
    #[arg(long)]
    d: Option<u64>,
    #[arg(long, default_value_t = 1)]
    u: u64,
    #[arg(long, default_value_t = 1)]
    t: u32,
    /// Parameter a in F_q (theorem2 family, --lemma23).
    #[arg(long, allow_hyphen_values = true)]
    a: Option<String>,
}

#[derive(Args, Debug)]
struct ConstructArgs {
    #[arg(long, value_parser = clap::value_parser!(u8).range(1..=2))]
    theorem: u8,
    #[arg(long)]
    q: Option<u64>,
    #[arg(long)]
    d: Option<u64>,
    #[arg(long, default_value_t = 1)]
    u: u64,
    #[arg(long, default_value_t = 1)]
    t: u32,
    /// q = 3^k for theorem 2.
    #[arg(long)]
    k: Option<u32>,
    /// All-pairs design check up to this many points.
    #[arg(long)]
    max_full_design_points: Option<u64>,
    /// Flag orbit expansion up to this many points.
    #[arg(long)]
    max_flag_orbit_points: Option<u64>,
    /// Materialize lines up to this many incidences.
    #[arg(long)]
    max_incidences: Option<u64>,
    #[command(flatten)]
    out: OutputArgs,
}

#[derive(Args, Debug)]
#[command(group(ArgGroup::new("map").required(true).args(["lemma22", "lemma23", "f", "h", "family"])))]
struct CheckPpArgs {
    #[arg(long)]
    q: u64,
    /// x^(d+k(q+1)) ((δ x^(q-1) - β δ^q)^d - δ (x^(q-1) - β)^d)
    #[arg(long)]
    lemma22: bool,
    /// x^3 + a x^(q+2) - a x^(2q+1) + c x^(3q)
    #[arg(long)]
    lemma23: bool,
    /// A polynomial map, scanned directly.
    #[arg(long)]
    f: Option<String>,
    #[command(flatten)]
    poly: PolyArgs,
    #[arg(long, default_value_t = 0)]
    k: u64,
    /// Defaults to δ.
    #[arg(long)]
    beta: Option<String>,
    /// Defaults to the first element of order q+1.
    #[arg(long)]
    delta: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    c: Option<String>,
    /// Exponent r of x^r h(x^(q-1)); defaults to deg h.
    #[arg(long)]
    r: Option<u64>,
    #[command(flatten)]
    out: OutputArgs,
}

#[derive(Args, Debug)]
#[command(group(ArgGroup::new("poly").required(true).args(["h", "family"])))]
struct CheckConditionArgs {
    #[arg(long)]
    q: u64,
    #[command(flatten)]
    poly: PolyArgs,
    /// Defaults to deg h.
    #[arg(long)]
    m: Option<u32>,
    #[command(flatten)]
    out: OutputArgs,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Lemma {
    #[value(name = "2.2")]
    PermutationBiconditional,
    #[value(name = "2.3")]
    Quadrinomial,
    #[value(name = "3.2")]
    GcdIdentity,
}

#[derive(Args, Debug)]
struct SweepArgs {
    #[arg(long, value_enum)]
    lemma: Lemma,
    /// Explicit values of q, comma separated.
    #[arg(long, value_delimiter = ',')]
    q: Option<Vec<u64>>,
    /// Every admissible q up to this bound.
    #[arg(long, conflicts_with = "q")]
    qmax: Option<u64>,
    #[arg(long, default_value_t = 7)]
    dmax: u64,
    #[arg(long, default_value_t = 3)]
    kmax: u64,
    #[arg(long, default_value_t = 3)]
    tmax: u32,
    #[command(flatten)]
    out: OutputArgs,
}

#[derive(Args, Debug)]
#[command(group(ArgGroup::new("source").required(true).args(["h", "family", "input"])))]
struct VerifySpreadArgs {
    #[arg(long, required_unless_present = "input")]
    q: Option<u64>,
    #[command(flatten)]
    poly: PolyArgs,
    /// A spread JSON file written by `export spread`.
    #[arg(long)]
    input: Option<PathBuf>,
    #[command(flatten)]
    out: OutputArgs,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum ExportKind {
    Spread,
    LinearSpace,
}

#[derive(Args, Debug)]
#[command(group(ArgGroup::new("poly").required(true).args(["h", "family"])))]
struct ExportArgs {
    #[arg(value_enum)]
    what: ExportKind,
    #[arg(long)]
    q: u64,
    #[command(flatten)]
    poly: PolyArgs,
    /// Write to this file instead of standard output.
    #[arg(long)]
    output: Option<PathBuf>,
}

/// JSON wrapper around every command result.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Envelope<T> {
    pub schema: String,
    pub command: String,
    pub ok: bool,
    pub result: T,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum WitnessRepr {
    ZeroValue { x: ElementRepr },
    Collision { x: ElementRepr, y: ElementRepr },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PermutationCheck {
    pub q: u64,
    pub map: String,
    /// Closed-form criterion, when one applies.
    pub predicate: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub conditions: Option<Lemma23Conditions>,
    pub permutation: bool,
    pub collision: Option<(ElementRepr, ElementRepr)>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConditionCheck {
    pub q: u64,
    pub h: Vec<ElementRepr>,
    pub h_text: String,
    pub m: u32,
    pub holds: bool,
    pub witness: Option<WitnessRepr>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SpreadCheck {
    pub field: FieldDescription,
    pub members: u64,
    pub expected: u64,
    pub is_spread: bool,
    pub desarguesian: Option<bool>,
    pub stabilizer_order: Option<u64>,
    pub failure: Option<PartitionFailure>,
}

/// Parses `args` (including the program name), runs the command and returns
/// the exit code.
pub fn run_with<I, S>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let sink: &mut dyn Write = if e.use_stderr() { err } else { out };
            let _ = write!(sink, "{}", e.render());
            return code;
        }
    };
    match dispatch(cli.command, out) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            exit_code(&e)
        }
    }
}

pub fn run() -> i32 {
    run_with(std::env::args_os(), &mut std::io::stdout(), &mut std::io::stderr())
}

pub fn exit_code(e: &Error) -> i32 {
    match e {
        Error::ResourceBound { .. } => 3,
        Error::Internal(_) => 1,
        Error::Structural(_) | Error::Domain(_) | Error::Parse(_) => 2,
    }
}

fn dispatch(command: Command, out: &mut dyn Write) -> Result<i32> {
    match command {
        Command::Construct(a) => construct(a, out),
        Command::CheckPp(a) => check_pp(a, out),
        Command::CheckCondition(a) => check_condition(a, out),
        Command::Sweep(a) => sweep(a, out),
        Command::VerifySpread(a) => verify_spread(a, out),
        Command::Export(a) => export(a, out),
    }
}

fn emit<T: Serialize>(out: &mut dyn Write, args: &OutputArgs, command: &str, ok: bool, result: &T, text: String) -> Result<i32> {
    let body = match args.format {
        Format::Json => {
            let env = Envelope {
                schema: SCHEMA.to_string(),
                command: command.to_string(),
                ok,
                result,
            };
            serde_json::to_string_pretty(&env).map_err(|e| Error::Internal(e.to_string()))? + "\n"
        }
        Format::Text => text,
    };
    write_body(out, args.output.as_ref(), &body)?;
    Ok(if ok { 0 } else { 1 })
}

fn write_body(out: &mut dyn Write, path: Option<&PathBuf>, body: &str) -> Result<()> {
    match path {
        Some(p) => fs::write(p, body).map_err(|e| Error::Parse(format!("{}: {e}", p.display()))),
        None => out.write_all(body.as_bytes()).map_err(|e| Error::Internal(e.to_string())),
    }
}

/// An element of `F_{q^2}`: an integer mod `p`, or a comma list of digits.
pub fn parse_element(tower: &FieldTower, s: &str) -> Result<FieldElement> {
    let s = s.trim();
    if s.contains(',') {
        let digits = s
            .split(',')
            .map(|d| parse_int(d).map(|v| v.rem_euclid(tower.p() as i64) as u64))
            .collect::<Result<Vec<_>>>()?;
        if digits.len() > tower.degree(Level::Middle) as usize {
            return Err(Error::Parse(format!(
                "'{s}' has more than {} digits",
                tower.degree(Level::Middle)
            )));
        }
        tower.from_digits(Level::Middle, &digits)
    } else {
        Ok(tower.from_int(Level::Middle, parse_int(s)?))
    }
}

fn parse_int(s: &str) -> Result<i64> {
    s.trim()
        .parse::<i64>()
        .map_err(|_| Error::Parse(format!("'{}' is not an integer", s.trim())))
}

/// A polynomial over `F_{q^2}` in the grammar of [`POLY_HELP`].
pub fn parse_polynomial(tower: &FieldTower, s: &str) -> Result<Polynomial> {
    let s = s.trim();
    if s.is_empty() {
        return Err(Error::Parse("empty polynomial".into()));
    }
    let coeffs = if s.contains(';') {
        s.split(';').map(|c| parse_element(tower, c)).collect::<Result<Vec<_>>>()?
    } else {
        s.split(',')
            .map(|c| parse_int(c).map(|v| tower.from_int(Level::Middle, v)))
            .collect::<Result<Vec<_>>>()?
    };
    PolyRing::new(tower, Level::Middle).from_coeffs(&coeffs)
}

fn resolve_polynomial(tower: &FieldTower, args: &PolyArgs) -> Result<Polynomial> {
    if let Some(h) = &args.h {
        return parse_polynomial(tower, h);
    }
    match args.family {
        Some(Family::Gn) => {
            let d = args.d.ok_or_else(|| Error::Parse("--family gn needs --d".into()))?;
            let params = GnParams::new(tower.q(), d, args.u, args.t)?;
            let delta = tower.find_element_of_order(Level::Middle, tower.q() + 1)?;
            construct_gn(tower, params, &delta)
        }
        Some(Family::Pb) => construct_pb_polynomial(tower),
        Some(Family::Theorem2) => {
            let a = match &args.a {
                Some(a) => parse_element(tower, a)?,
                None => theorem2_parameter(tower)?,
            };
            construct_theorem2_h(tower, &a)
        }
        None => Err(Error::Parse("give --h or --family".into())),
    }
}

fn repr_witness(tower: &FieldTower, w: Option<ConditionOneWitness>) -> Option<WitnessRepr> {
    w.map(|w| match w {
        ConditionOneWitness::ZeroValue { x } => WitnessRepr::ZeroValue { x: tower.to_repr(&x) },
        ConditionOneWitness::Collision { x, y } => WitnessRepr::Collision {
            x: tower.to_repr(&x),
            y: tower.to_repr(&y),
        },
    })
}

fn construct(a: ConstructArgs, out: &mut dyn Write) -> Result<i32> {
    let mut limits = ResourceLimits::default();
    if let Some(v) = a.max_full_design_points {
        limits.full_design_points = v;
    }
    if let Some(v) = a.max_flag_orbit_points {
        limits.flag_orbit_points = v;
    }
    if let Some(v) = a.max_incidences {
        limits.materialized_incidences = v;
    }
    let report = if a.theorem == 1 {
        let q = a.q.ok_or_else(|| Error::Parse("theorem 1 needs --q".into()))?;
        let d = a.d.ok_or_else(|| Error::Parse("theorem 1 needs --d".into()))?;
        end_to_end_theorem1(q, d, a.u, a.t, &limits)?
    } else {
        let k = match (a.k, a.q) {
            (Some(k), _) => k,
            (None, Some(q)) => match crate::num_theory::prime_power(q) {
                Some((3, k)) => k,
                _ => return Err(Error::Domain(format!("theorem 2 needs q = 3^k, got {q}"))),
            },
            (None, None) => return Err(Error::Parse("theorem 2 needs --k or --q".into())),
        };
        end_to_end_theorem2(k, &limits)?
    };
    let mut text = format!(
        "theorem {}: q = {}, n = {}, h = {}\n",
        report.params.theorem, report.params.q, report.params.n, report.polynomial_text
    );
    for s in &report.stages {
        text += &format!("  {:<17} {:<7} {}\n", s.name, format!("{:?}", s.status).to_lowercase(), s.detail);
    }
    emit(out, &a.out, "construct", report.passed(), &report, text)
}

fn check_pp(a: CheckPpArgs, out: &mut dyn Write) -> Result<i32> {
    let tower = FieldTower::for_q(a.q, 1)?;
    let ring = PolyRing::new(&tower, Level::Middle);
    let mut predicate = None;
    let mut conditions = None;
    let (map, label): (Box<dyn FieldMap + '_>, String) = if a.lemma22 {
        let d = a.poly.d.ok_or_else(|| Error::Parse("--lemma22 needs --d".into()))?;
        let delta = match &a.delta {
            Some(s) => parse_element(&tower, s)?,
            None => tower.find_element_of_order(Level::Middle, a.q + 1)?,
        };
        let beta = match &a.beta {
            Some(s) => parse_element(&tower, s)?,
            None => delta,
        };
        predicate = Some(lemma22_predicate(&tower, d, a.k, &beta, &delta)?);
        let label = format!(
            "lemma22 d={d} k={} beta={} delta={}",
            a.k,
            tower.format(&beta),
            tower.format(&delta)
        );
        (Box::new(lemma22_build_f(&tower, d, a.k, &beta, &delta)?), label)
    } else if a.lemma23 {
        let av = parse_element(&tower, a.poly.a.as_deref().ok_or_else(|| Error::Parse("--lemma23 needs --a".into()))?)?;
        let cv = parse_element(&tower, a.c.as_deref().ok_or_else(|| Error::Parse("--lemma23 needs --c".into()))?)?;
        let cond = lemma23_conditions(&tower, &av, &cv)?;
        predicate = Some(cond.any());
        conditions = Some(cond);
        let f = lemma23_quadrinomial(&tower, &av, &cv)?;
        let label = format!("lemma23 a={} c={}: {}", tower.format(&av), tower.format(&cv), ring.format(&f));
        (Box::new(PolynomialMap::new(ring, f)), label)
    } else if let Some(f) = &a.f {
        let f = parse_polynomial(&tower, f)?;
        let label = format!("f = {}", ring.format(&f));
        (Box::new(PolynomialMap::new(ring, f)), label)
    } else {
        let h = resolve_polynomial(&tower, &a.poly)?;
        let r = a.r.unwrap_or(h.degree().unwrap_or(0) as u64);
        let label = format!("x^{r} h(x^(q-1)), h = {}", ring.format(&h));
        (Box::new(ClosedFormMap::standard(&tower, r as u128, h)), label)
    };
    let rep = permutation_report(&tower, Level::Middle, map.as_ref())?;
    let result = PermutationCheck {
        q: a.q,
        map: label.clone(),
        predicate,
        conditions,
        permutation: rep.is_permutation,
        collision: rep.collision.map(|(x, y)| (tower.to_repr(&x), tower.to_repr(&y))),
    };
    let mut text = format!("{label}\n  permutes F_{{q^2}}: {}\n", rep.is_permutation);
    if let Some(p) = predicate {
        text += &format!("  criterion: {p}\n");
    }
    if let Some((x, y)) = rep.collision {
        text += &format!("  collision: f({}) = f({})\n", tower.format(&x), tower.format(&y));
    }
    emit(out, &a.out, "check-pp", rep.is_permutation, &result, text)
}

fn check_condition(a: CheckConditionArgs, out: &mut dyn Write) -> Result<i32> {
    let tower = FieldTower::for_q(a.q, 1)?;
    let h = resolve_polynomial(&tower, &a.poly)?;
    let m = a.m.unwrap_or(h.degree().unwrap_or(0) as u32);
    let inst = ConditionOneInstance::new(h.clone(), m)?;
    let rep = condition_one_check(&tower, &inst)?;
    let ring = PolyRing::new(&tower, Level::Middle);
    let result = ConditionCheck {
        q: a.q,
        h: ring.to_repr(&h)?,
        h_text: ring.format(&h),
        m,
        holds: rep.holds,
        witness: repr_witness(&tower, rep.witness),
    };
    let mut text = format!("h = {}, m = {m}\n  condition holds: {}\n", result.h_text, rep.holds);
    match rep.witness {
        Some(ConditionOneWitness::ZeroValue { x }) => text += &format!("  witness: phi({}) = 0\n", tower.format(&x)),
        Some(ConditionOneWitness::Collision { x, y }) => {
            text += &format!(
                "  witness: phi({})/phi({}) lies in F_q\n",
                tower.format(&x),
                tower.format(&y)
            )
        }
        None => {}
    }
    emit(out, &a.out, "check-condition", rep.holds, &result, text)
}

fn sweep(a: SweepArgs, out: &mut dyn Write) -> Result<i32> {
    let admissible = |q: u64| match crate::num_theory::prime_power(q) {
        Some((p, _)) => match a.lemma {
            Lemma::Quadrinomial => p == 3,
            _ => true,
        },
        None => false,
    };
    let qs: Vec<u64> = match (&a.q, a.qmax) {
        (Some(qs), _) => qs.clone(),
        (None, Some(max)) => (2..=max).filter(|&q| admissible(q)).collect(),
        (None, None) => match a.lemma {
            Lemma::PermutationBiconditional => vec![2, 3, 4, 5],
            Lemma::Quadrinomial => vec![3, 9, 27],
            Lemma::GcdIdentity => vec![2, 4, 5, 8, 13],
        },
    };
    let report = match a.lemma {
        Lemma::PermutationBiconditional => sweep_lemma22(&qs, a.dmax, a.kmax)?,
        Lemma::Quadrinomial => sweep_lemma23(&qs)?,
        Lemma::GcdIdentity => sweep_lemma32(&qs, a.tmax)?,
    };
    let mut text = format!(
        "sweep {} over q in {:?}: {} cases, {} agree, {} counterexamples\n",
        report.lemma,
        qs,
        report.cases,
        report.agreements,
        report.cases - report.agreements
    );
    for c in &report.counterexamples {
        text += &format!("  {c}\n");
    }
    emit(out, &a.out, "sweep", report.passed(), &report, text)
}

fn build_spread_from_args(q: u64, poly: &PolyArgs) -> Result<(FieldTower, SpreadOutcome)> {
    let base = FieldTower::for_q(q, 1)?;
    let h = resolve_polynomial(&base, poly)?;
    spread_from_polynomial(&base, &h)
}

fn spread_check(tower: &FieldTower, members: u64, spread: Option<&Spread>, failure: Option<PartitionFailure>) -> Result<SpreadCheck> {
    Ok(SpreadCheck {
        field: tower.description(),
        members,
        expected: Spread::expected_len(tower),
        is_spread: failure.is_none(),
        desarguesian: spread.map(is_desarguesian).transpose()?,
        stabilizer_order: spread.map(stabilizer_order_in_c),
        failure,
    })
}

fn verify_spread(a: VerifySpreadArgs, out: &mut dyn Write) -> Result<i32> {
    let result = if let Some(path) = &a.input {
        let text = fs::read_to_string(path).map_err(|e| Error::Parse(format!("{}: {e}", path.display())))?;
        let record: SpreadRecord = match serde_json::from_str::<Envelope<SpreadRecord>>(&text) {
            Ok(env) => env.result,
            Err(_) => serde_json::from_str(&text).map_err(|e| Error::Parse(e.to_string()))?,
        };
        let (tower, _, lines) = record.decode()?;
        let failure = check_partition(&tower, &lines)?;
        spread_check(&tower, lines.len() as u64, None, failure)?
    } else {
        let q = a.q.ok_or_else(|| Error::Parse("--q is required".into()))?;
        let (tower, outcome) = build_spread_from_args(q, &a.poly)?;
        match &outcome {
            SpreadOutcome::Spread(s) => spread_check(&tower, s.len() as u64, Some(s), None)?,
            SpreadOutcome::Failed(f) => spread_check(&tower, f.members, None, Some(f.clone()))?,
        }
    };
    let mut text = format!(
        "{} members (expected {}), partition: {}\n",
        result.members, result.expected, result.is_spread
    );
    if let Some(d) = result.desarguesian {
        text += &format!("  desarguesian: {d}\n");
    }
    if let Some(f) = &result.failure {
        text += &format!("  witness: {:?}\n", f.witness);
    }
    emit(out, &a.out, "verify-spread", result.is_spread, &result, text)
}

fn export(a: ExportArgs, out: &mut dyn Write) -> Result<i32> {
    let (_, outcome) = build_spread_from_args(a.q, &a.poly)?;
    let spread = match outcome {
        SpreadOutcome::Spread(s) => s,
        SpreadOutcome::Failed(f) => {
            return Err(Error::Domain(format!("orbit is not a spread: {:?}", f.witness)));
        }
    };
    let args = OutputArgs {
        format: Format::Json,
        output: a.output,
    };
    match a.what {
        ExportKind::Spread => emit(out, &args, "export", true, &spread.to_record(), String::new()),
        ExportKind::LinearSpace => {
            let ls = andre_bruck_bose(&spread)?;
            emit(out, &args, "export", true, &ls.to_record()?, String::new())
        }
    }
}
