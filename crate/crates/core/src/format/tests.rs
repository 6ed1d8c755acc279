use super::*;
use crate::entwine::gamma_q;
use crate::fixtures::*;
use crate::registry;

const SMALL: &str = r#"{
  "field": "q",
  "objects": {
    "A": {
      "kind": "algebra",
      "mult": [
        ["1", "0", "0", "1/2"],
        ["0", "1", "1", "0"]
      ],
      "space": ["V"],
      "unit": [
        ["1"],
        ["0"]
      ]
    },
    "V": {
      "kind": "space",
      "labels": ["1", "x"]
    }
  },
  "version": 1
}
"#;

#[test]
fn parse_then_emit_is_identity_on_canonical_text() {
    assert_eq!(StructureFile::parse(SMALL).unwrap().emit(), SMALL);
    assert_eq!(registry::file().emit(), registry::REGISTRY);
}

#[test]
fn fractions_resolve_exactly_and_reduce_over_a_prime_field() {
    let doc = Document::parse(SMALL, None).unwrap();
    assert_eq!(doc.algebra("A").unwrap(), Algebra::quadratic(Field::Rational, &Field::Rational.ratio(1, 2).unwrap()));
    let f7 = Field::prime(7).unwrap();
    let doc = Document::parse(SMALL, Some(f7)).unwrap();
    assert_eq!(doc.algebra("A").unwrap().mult().entry(0, 3), f7.int(4));
}

#[test]
fn input_errors_are_reported() {
    let bad_scalar = SMALL.replace("1/2", "1/0");
    assert!(matches!(Document::parse(&bad_scalar, None), Err(Error::Parse(_))));
    let decimal = SMALL.replace("1/2", "0.5");
    assert!(matches!(Document::parse(&decimal, None), Err(Error::Parse(_))));
    let short = SMALL.replace("        [\"1\"],\n        [\"0\"]", "        [\"1\"]");
    assert!(matches!(Document::parse(&short, None), Err(Error::ShapeMismatch { .. })));
    let dangling = SMALL.replace(r#"["V"]"#, r#"["W"]"#);
    assert!(matches!(Document::parse(&dangling, None), Err(Error::Unknown { .. })));
    let extra = SMALL.replace(r#""version": 1"#, r#""version": 1, "extra": 0"#);
    assert!(matches!(StructureFile::parse(&extra), Err(Error::Parse(_))));
    let version = SMALL.replace(r#""version": 1"#, r#""version": 9"#);
    assert!(matches!(StructureFile::parse(&version), Err(Error::Parse(_))));
    let field = SMALL.replace(r#""field": "q""#, r#""field": "fp:8""#);
    assert!(Document::parse(&field, None).is_err());
    let cycle = r#"{"version":1,"field":"q","objects":{"H":{"kind":"bialgebra","algebra":"H","coalgebra":"H"}}}"#;
    assert!(Document::parse(cycle, None).is_err());
}

#[test]
fn added_objects_resolve_to_themselves() {
    let f = Field::Rational;
    let mut file = StructureFile::new(f);
    let e = gamma_q(&m2(f), &f.int(2));
    let objects = [
        Object::Entwining(e.clone()),
        Object::Module(sign(f)),
        Object::Comodule(grading(f)),
        Object::Bialgebra(absorbing(f)),
        Object::Tambara(crate::tambara::action_from_semi(&e).unwrap()),
        Object::Operator(crate::yangbaxter::psi_a(&cubic(f))),
        Object::Type2(crate::yangbaxter::commutative_type2(&cubic(f), &f.one(), &f.int(2), false).unwrap()),
    ];
    let names: Vec<String> = objects.iter().map(|o| file.add(o.kind(), o)).collect();
    let text = file.emit();
    let doc = Document::parse(&text, None).unwrap();
    for (n, o) in names.iter().zip(&objects) {
        assert_eq!(doc.get(n).unwrap(), o, "{n}");
    }
    assert_eq!(doc.file().emit(), text);
}

#[test]
fn interning_reuses_spaces_with_equal_labels() {
    let f = Field::Rational;
    let mut file = StructureFile::new(f);
    let a = file.add_algebra("A", &quadratic(f, 1));
    let b = file.add_algebra("B", &quadratic(f, 2));
    let again = file.add_algebra("C", &quadratic(f, 1));
    assert_eq!(again, a);
    assert_ne!(a, b);
    let spaces = file.objects.values().filter(|d| matches!(d, ObjectDef::Space { .. })).count();
    assert_eq!(spaces, 1);
}
