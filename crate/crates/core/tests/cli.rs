//! The command-line front end driven in-process.

use flagspace::cli::{run_with, ConditionCheck, Envelope, PermutationCheck, SpreadCheck};
use flagspace::linear_space::LinearSpaceRecord;
use flagspace::pipeline::{PipelineReport, SCHEMA};
use flagspace::spread::SpreadRecord;
use flagspace::sweep::SweepReport;
use serde::de::DeserializeOwned;

fn run(args: &[&str]) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let code = run_with(std::iter::once("flagspace").chain(args.iter().copied()), &mut out, &mut err);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

fn json<T: DeserializeOwned + serde::Serialize>(args: &[&str]) -> (i32, Envelope<T>) {
    let mut full = args.to_vec();
    full.extend(["--format", "json"]);
    let (code, out, err) = run(&full);
    let env: Envelope<T> = serde_json::from_str(&out).unwrap_or_else(|e| panic!("{e}: {out}{err}"));
    assert_eq!(env.schema, SCHEMA);
    assert_eq!(env.ok, code == 0);
    // stable round trip at the value level
    let original: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(serde_json::to_value(&env).unwrap(), original);
    (code, env)
}

fn temp(name: &str) -> std::path::PathBuf {
    std::env::temp_dir().join(format!("flagspace-{}-{name}", std::process::id()))
}

#[test]
fn construct_reports() {
    let (code, env) = json::<PipelineReport>(&["construct", "--theorem", "1", "--q", "2", "--d", "3"]);
    assert_eq!(code, 0);
    assert_eq!(env.command, "construct");
    assert!(env.result.passed());
    let (code, env) = json::<PipelineReport>(&["construct", "--theorem", "2", "--k", "1"]);
    assert_eq!(code, 0);
    assert_eq!(env.result.params.q, 3);
    let (code, out, _) = run(&["construct", "--theorem", "1", "--q", "2", "--d", "3"]);
    assert_eq!(code, 0);
    assert!(out.contains("flag_transitive"));
}

#[test]
fn construct_exit_codes() {
    assert_eq!(run(&["construct", "--theorem", "1", "--q", "2", "--d", "3", "--t", "3"]).0, 3);
    assert_eq!(run(&["construct", "--theorem", "1", "--q", "4", "--d", "3"]).0, 2);
    assert_eq!(run(&["construct", "--theorem", "3"]).0, 2);
    assert_eq!(run(&["construct", "--theorem", "1"]).0, 2);
}

#[test]
fn check_pp_variants() {
    let (code, env) = json::<PermutationCheck>(&["check-pp", "--q", "4", "--lemma22", "--d", "5"]);
    assert_eq!(code, 0);
    assert_eq!(env.result.predicate, Some(true));
    assert!(env.result.permutation);
    let (code, env) = json::<PermutationCheck>(&["check-pp", "--q", "5", "--lemma22", "--d", "2"]);
    assert_eq!(code, 1);
    assert!(!env.result.permutation && env.result.collision.is_some());
    // x^2 is not a permutation of F_9, x^3 is
    assert_eq!(run(&["check-pp", "--q", "3", "--f", "0,0,1"]).0, 1);
    assert_eq!(run(&["check-pp", "--q", "3", "--f", "0,0,0,1"]).0, 0);
    let (code, env) = json::<PermutationCheck>(&["check-pp", "--q", "3", "--lemma23", "--a", "-1", "--c", "1"]);
    assert_eq!(env.result.permutation, code == 0);
    assert_eq!(run(&["check-pp", "--q", "3", "--family", "theorem2", "--a", "1"]).0, 0);
    assert_eq!(run(&["check-pp", "--q", "3"]).0, 2);
}

#[test]
fn check_condition_variants() {
    let (code, env) = json::<ConditionCheck>(&["check-condition", "--q", "2", "--h", "1,1,0,1"]);
    assert_eq!((code, env.result.m, env.result.holds), (0, 3, true));
    let (code, env) = json::<ConditionCheck>(&["check-condition", "--q", "2", "--h", "1,1,1", "--m", "2"]);
    assert_eq!(code, 1);
    assert!(env.result.witness.is_some());
    assert_eq!(run(&["check-condition", "--q", "4", "--h", "1;0,1;1"]).0 <= 1, true);
    assert_eq!(run(&["check-condition", "--q", "512", "--h", "1,1"]).0, 3);
    assert_eq!(run(&["check-condition", "--q", "6", "--h", "1,1"]).0, 2);
    assert_eq!(run(&["check-condition", "--q", "2", "--h", "1,x"]).0, 2);
    assert_eq!(run(&["check-condition", "--q", "5", "--family", "gn", "--d", "3"]).0, 0);
    assert_eq!(run(&["check-condition", "--q", "5", "--family", "pb"]).0 <= 1, true);
}

#[test]
fn sweeps() {
    let (code, env) = json::<SweepReport>(&["sweep", "--lemma", "2.2", "--q", "2,3", "--dmax", "3", "--kmax", "1"]);
    assert_eq!(code, 0);
    assert!(env.result.cases > 0 && env.result.passed());
    assert_eq!(run(&["sweep", "--lemma", "2.3", "--q", "3,9"]).0, 0);
    let (code, env) = json::<SweepReport>(&["sweep", "--lemma", "3.2", "--qmax", "20", "--tmax", "2"]);
    assert_eq!(code, 0);
    assert!(env.result.cases > 50);
    assert_eq!(run(&["sweep", "--lemma", "9.9"]).0, 2);
}

#[test]
fn export_then_verify() {
    let path = temp("spread.json");
    let p = path.to_str().unwrap();
    assert_eq!(run(&["export", "spread", "--q", "2", "--h", "1,1,0,1", "--output", p]).0, 0);
    let text = std::fs::read_to_string(&path).unwrap();
    let env: Envelope<SpreadRecord> = serde_json::from_str(&text).unwrap();
    assert_eq!(env.result.lines.len(), 21);

    let (code, env) = json::<SpreadCheck>(&["verify-spread", "--input", p]);
    assert_eq!(code, 0);
    assert!(env.result.is_spread);
    assert_eq!(env.result.members, 21);

    // drop a member and the partition fails
    let mut rec: SpreadRecord = serde_json::from_str::<Envelope<SpreadRecord>>(&text).unwrap().result;
    rec.lines.pop();
    std::fs::write(&path, serde_json::to_string(&rec).unwrap()).unwrap();
    let (code, env) = json::<SpreadCheck>(&["verify-spread", "--input", p]);
    assert_eq!(code, 1);
    assert!(env.result.failure.is_some());

    std::fs::write(&path, "not json").unwrap();
    assert_eq!(run(&["verify-spread", "--input", p]).0, 2);
    std::fs::remove_file(&path).unwrap();
    assert_eq!(run(&["verify-spread", "--input", p]).0, 2);
}

#[test]
fn verify_spread_from_polynomials() {
    let (code, env) = json::<SpreadCheck>(&["verify-spread", "--q", "2", "--h", "1,1,0,1"]);
    assert_eq!(code, 0);
    assert_eq!(env.result.desarguesian, Some(false));
    assert_eq!(env.result.stabilizer_order, Some(1));
    // reducible h is rejected before any spread is built
    assert_eq!(run(&["verify-spread", "--q", "2", "--h", "1,0,1"]).0, 2);
    // irreducible over F_9 but every m = 2 orbit falls short
    let (code, env) = json::<SpreadCheck>(&["verify-spread", "--q", "3", "--h", "0,1;1;1"]);
    assert_eq!(code, 1);
    assert!(!env.result.is_spread && env.result.failure.is_some());
    assert_eq!(run(&["verify-spread", "--q", "3", "--h", "1;0,1;1"]).0, 2);
}

#[test]
fn export_linear_space_and_output_file() {
    let (code, out, _) = run(&["export", "linear-space", "--q", "2", "--h", "1,1,0,1"]);
    assert_eq!(code, 0);
    let env: Envelope<LinearSpaceRecord> = serde_json::from_str(&out).unwrap();
    assert_eq!((env.result.v, env.result.k, env.result.lines.len()), (64, 4, 336));

    let path = temp("report.txt");
    let p = path.to_str().unwrap();
    let (code, out, _) = run(&["check-condition", "--q", "2", "--h", "1,1,0,1", "--output", p]);
    assert_eq!(code, 0);
    assert!(out.is_empty());
    assert!(!std::fs::read_to_string(&path).unwrap().is_empty());
    std::fs::remove_file(&path).unwrap();
}

#[test]
fn help_and_version() {
    let (code, out, _) = run(&["--help"]);
    assert_eq!(code, 0);
    for cmd in ["construct", "check-pp", "check-condition", "sweep", "verify-spread", "export"] {
        assert!(out.contains(cmd), "{cmd}");
    }
    assert_eq!(run(&["--version"]).0, 0);
}
