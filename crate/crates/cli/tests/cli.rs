use std::process::{Command, Output};

use serde::de::DeserializeOwned;
use serde::Serialize;

use parkspace::certify::{BinomialCertificate, PeriodOutcome, QBinomialCertificate};
use parkspace::characters::{Coefficient, Decomposition};
use parkspace::exact::{int, Polynomial, RationalFunction, UPolynomial};
use parkspace::groups::{PolynomialityConditions, ResidueCondition, TableReport};
use parkspace_cli::output::*;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_parkspace"))
        .args(args)
        .env_remove("PARKSPACE_THREADS")
        .output()
        .expect("binary runs")
}

fn stdout(args: &[&str]) -> String {
    let out = run(args);
    assert!(out.status.success(), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    String::from_utf8(out.stdout).unwrap().trim_end().to_string()
}

/// Parse into `T` and check that serializing again gives the same text.
fn round_trip<T: DeserializeOwned + Serialize>(args: &[&str]) -> T {
    let s = stdout(args);
    let v: T = serde_json::from_str(&s).unwrap_or_else(|e| panic!("{args:?}: {e}\n{s}"));
    assert_eq!(serde_json::to_string(&v).unwrap(), s, "{args:?}");
    v
}

#[test]
fn catalan_at_one() {
    assert_eq!(stdout(&["catalan", "--group", "S3", "--k", "4", "--at-one"]), "\"5\"");
    assert_eq!(stdout(&["--format", "text", "catalan", "--group", "S3", "--k", "4", "--at-one"]), "5");
    let v: CatalanValue = round_trip(&["catalan", "--group", "D5", "--k", "2", "--at-one"]);
    assert!(matches!(v, CatalanValue::Rational(_)));
}

#[test]
fn catalan_graded_and_dual() {
    let v: CatalanValue = round_trip(&["catalan", "--group", "S3", "--k", "4", "--q"]);
    let CatalanValue::RationalFunction(f) = v else { panic!() };
    assert_eq!(f.value_at(&int(1)).unwrap(), int(5));
    let d: CatalanValue = round_trip(&["catalan", "--group", "S3", "--k", "4", "--dual"]);
    let CatalanValue::RationalFunction(g) = d else { panic!() };
    assert_eq!(g.value_at(&int(1)).unwrap(), int(1));
}

#[test]
fn condition_for_h3() {
    let c: ResidueCondition = round_trip(&["condition", "--group", "G23"]);
    assert_eq!(c, ResidueCondition::new(10, [1, 5, 9]));
    assert_eq!(stdout(&["condition", "--group", "G23"]), r#"{"modulus":10,"residues":[1,5,9]}"#);
    let full: PolynomialityConditions = round_trip(&["condition", "--group", "G36", "--kind", "full"]);
    assert_eq!(full.both, ResidueCondition::new(6, [1, 5]));
    let dual: ResidueCondition = round_trip(&["condition", "--group", "G36", "--kind", "integral", "--dual"]);
    assert!(dual.contains(9) && !dual.contains(153));
    let ch: ResidueCondition = round_trip(&["condition", "--group", "D4", "--kind", "character"]);
    assert_eq!(ch.min_k, Some(3));
}

#[test]
fn gcd_matches_prediction() {
    let g: GcdValue = round_trip(&["gcd", "--n", "2", "--k", "3", "--q"]);
    assert_eq!(g, GcdValue::Polynomial(Polynomial::from_i64s(&[1, 1, 1])));
    let i: GcdValue = round_trip(&["gcd", "--n", "4", "--k", "6"]);
    assert_eq!(i, GcdValue::Integer("3".into()));
    assert_eq!(stdout(&["gcd", "--n", "4", "--k", "6", "--predicted"]), "\"3\"");
}

#[test]
fn decompositions_round_trip() {
    let d: Decomposition = round_trip(&["decompose", "--group", "S4", "--k", "5"]);
    assert!(d.representation_valid);
    let g: Decomposition = round_trip(&["decompose", "--group", "G(2,1,2)", "--k", "3", "--q"]);
    assert!(g.entries.iter().all(|e| matches!(e.coeff, Coefficient::RationalFunction(_))));
    let h: Decomposition = round_trip(&["decompose", "--group", "G(3,1,2)"]);
    assert!(h.entries.iter().all(|e| matches!(e.coeff, Coefficient::UPolynomial(_))));
    assert!(!h.representation_valid);
    let p: Decomposition = round_trip(&["decompose", "--group", "G(2,1,3)", "--k", "5", "--basis", "permutation"]);
    assert!(p.representation_valid);
    let o: Decomposition = round_trip(&["decompose", "--group", "G(4,2,3)", "--k", "3"]);
    assert!(!o.representation_valid);
    let dd: Decomposition = round_trip(&["decompose", "--group", "G(5,5,2)", "--k", "4", "--q"]);
    assert_eq!(dd.group, "D5");
}

#[test]
fn mult_selects_one_entry() {
    let d: Decomposition = round_trip(&["mult", "--group", "S3", "--k", "4", "--label", "2,1"]);
    assert_eq!(d.entries.len(), 1);
    assert_eq!(d.entries[0].coeff.as_rational().unwrap(), &int(5));
    let x: Decomposition = round_trip(&["mult", "--group", "D4", "--k", "3", "--q", "--label", "chi1"]);
    assert_eq!(x.entries[0].coeff, Coefficient::RationalFunction(Polynomial::from_i64s(&[0, 1, 0, 1]).into()));
    assert_eq!(run(&["mult", "--group", "S3", "--k", "4", "--label", "5"]).status.code(), Some(1));
}

#[test]
fn dihedral_reports() {
    let r: DihedralReport = round_trip(&["dihedral", "--m", "4", "--k", "3"]);
    assert!(r.is_character && r.perm_decomposable);
    let r: DihedralReport = round_trip(&["dihedral", "--m", "4", "--k", "2"]);
    assert!(!r.is_character);
    let s: DihedralSymbolic = round_trip(&["dihedral", "--m", "6"]);
    assert!(s.reconstruction_ok);
}

#[test]
fn unimodality_counterexample() {
    let r: UnimodalityReport = round_trip(&["unimodality", "--partition", "2", "--k", "3"]);
    assert_eq!(r.quotient, Polynomial::from_i64s(&[1, 0, 1]));
    assert!(r.even_ok && r.odd_ok && !r.whole_ok);
}

#[test]
fn stirling_checks() {
    let r: StirlingRow = round_trip(&["stirling", "--n", "5"]);
    assert_eq!(r.row, ["0", "24", "50", "35", "10", "1"]);
    assert!(r.divisible);
    let c: StirlingClass = round_trip(&["stirling", "--partition", "2,1,1"]);
    assert!(c.divisible);
    assert_eq!(run(&["stirling", "--partition", "3"]).status.code(), Some(1));
}

#[test]
fn certificates_round_trip() {
    let b: BinomialCertificate = round_trip(&["certify", "binomial", "--poly", "0,0,1"]);
    assert!(b.all_nonneg_integers);
    let half: BinomialCertificate = round_trip(&["certify", "binomial", "--poly", "0,1/2"]);
    assert!(!half.all_nonneg_integers);
    let p: PeriodOutcome = round_trip(&["certify", "period", "--poly", "-1/2,1/2", "--period", "2", "--divisor", "2"]);
    assert_eq!(p, PeriodOutcome::Condition(ResidueCondition::new(2, [1])));
    let h = serde_json::to_string(&UPolynomial::one_minus(RationalFunction::one())).unwrap();
    let q: QBinomialCertificate = round_trip(&["certify", "q-binomial", "--h", &h, "--base", "1"]);
    assert!(!q.all_in_nq);
    let d: DihedralCertificates = round_trip(&["certify", "dihedral", "--m", "6"]);
    assert!(d.soundness.all_certified);
    assert!(d.expansions.iter().all(|e| e.matches));
}

#[test]
fn verify_tables_exits_zero() {
    let t: TableReport = round_trip(&["verify-tables"]);
    assert!(t.all_ok);
    assert!(!t.checks.is_empty());
}

#[test]
fn exit_codes() {
    assert_eq!(run(&["catalan", "--group", "X1", "--k", "1"]).status.code(), Some(1));
    assert_eq!(run(&["unimodality", "--partition", "2,x", "--k", "3"]).status.code(), Some(1));
    assert_eq!(run(&["decompose", "--group", "G4", "--k", "1"]).status.code(), Some(1));
    assert_eq!(run(&["catalan", "--group", "S3"]).status.code(), Some(2));
    assert_eq!(run(&["frobnicate"]).status.code(), Some(2));
    assert_eq!(run(&["gcd", "--n", "two", "--k", "3"]).status.code(), Some(2));
    assert_eq!(run(&["--help"]).status.code(), Some(0));
}

#[test]
fn threads_flag_and_env() {
    let a = stdout(&["--threads", "1", "condition", "--group", "G37", "--kind", "integral"]);
    let out = Command::new(env!("CARGO_BIN_EXE_parkspace"))
        .args(["condition", "--group", "G37", "--kind", "integral"])
        .env("PARKSPACE_THREADS", "3")
        .output()
        .unwrap();
    assert!(out.status.success());
    assert_eq!(String::from_utf8(out.stdout).unwrap().trim_end(), a);
    assert_eq!(run(&["--threads", "0", "verify-tables"]).status.code(), Some(2));
}
