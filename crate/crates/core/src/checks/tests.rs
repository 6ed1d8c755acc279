use super::*;
use crate::constructions::lookup;
use crate::registry;
use crate::scalar::Field;

#[test]
fn registry_gamma_is_semi() {
    let d = registry::load(Field::Rational).unwrap();
    let e = lookup(&d, "gamma_q@Kx2-1,q=1").unwrap();
    assert!(run_check(&e, "semi-entwining").unwrap().passed);
}

#[test]
fn corrupted_operator_fails_braid_with_a_witness() {
    let d = registry::load(Field::Rational).unwrap();
    let y = lookup(&d, "corrupt@[psi_A@Kx2-1],row=0,col=1,value=3").unwrap();
    let r = run_check(&y, "braid").unwrap();
    assert!(!r.passed);
    let w = r.verdicts[0].witness.as_ref().unwrap();
    assert_eq!(w.tuple.len(), 3);
    assert!(run_check(&lookup(&d, "psi_A@Kx2-1").unwrap(), "braid").unwrap().passed);
}

#[test]
fn unknown_and_inapplicable_checks_are_errors() {
    let d = registry::load(Field::Rational).unwrap();
    let e = lookup(&d, "gamma_q@Kx2-1,q=1").unwrap();
    assert!(matches!(run_check(&e, "semi-entwinning"), Err(Error::Unknown { .. })));
    assert!(matches!(run_check(d.get("M2").unwrap(), "braid"), Err(Error::Unknown { .. })));
}

#[test]
fn every_listed_check_runs_on_registry_objects() {
    let d = registry::load(Field::Rational).unwrap();
    for (name, obj) in d.objects() {
        for c in checks_for(obj) {
            run_check(obj, c).unwrap_or_else(|e| panic!("{name} {c}: {e}"));
        }
    }
    let e = lookup(&d, "twist@Kx2-1,Kx2-1").unwrap();
    for c in checks_for(&e) {
        match run_check(&e, c) {
            Ok(r) => assert!(r.passed || c.contains("co") || c == "entwining-ll" || c == "entwining-rr", "{c}"),
            Err(err) => assert!(matches!(err, Error::MissingStructure(_) | Error::Precondition { .. }), "{c}: {err}"),
        }
    }
}
