use entwine_core::entwine::{check_semi_entwining, gamma_q};
use entwine_core::format::{Document, Object, StructureFile};
use entwine_core::structures::Algebra;
use entwine_core::{Field, LinearMap, Space};
use proptest::prelude::*;

fn fields() -> impl Strategy<Value = Field> {
    prop_oneof![Just(Field::Rational), Just(Field::prime(7).unwrap()), Just(Field::prime(2).unwrap())]
}

fn space(dim: usize) -> Space {
    Space::numbered("e", dim).unwrap()
}

fn map(field: Field, rows: usize, cols: usize) -> impl Strategy<Value = LinearMap> {
    prop::collection::vec(-3i64..=3, rows * cols).prop_map(move |v| {
        let rows_v = v.chunks(cols).map(|r| r.iter().map(|&x| field.int(x)).collect()).collect();
        LinearMap::from_rows(field, space(cols), space(rows), rows_v).unwrap()
    })
}

fn chain() -> impl Strategy<Value = (LinearMap, LinearMap, LinearMap)> {
    (fields(), 1usize..4, 1usize..4, 1usize..4, 1usize..4)
        .prop_flat_map(|(f, a, b, c, d)| (map(f, b, a), map(f, c, b), map(f, d, c)))
}

fn square_pair() -> impl Strategy<Value = (LinearMap, LinearMap, LinearMap, LinearMap)> {
    (fields(), 1usize..3, 1usize..3).prop_flat_map(|(f, m, n)| (map(f, m, m), map(f, m, m), map(f, n, n), map(f, n, n)))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn composition_is_associative((f, g, h) in chain()) {
        let left = h.compose(&g).unwrap().compose(&f).unwrap();
        let right = h.compose(&g.compose(&f).unwrap()).unwrap();
        prop_assert_eq!(left, right);
    }

    #[test]
    fn kron_is_bilinear((a, b, c, _) in square_pair(), s in -4i64..=4) {
        let s = a.field().int(s);
        prop_assert_eq!(a.add(&b).unwrap().kron(&c), a.kron(&c).add(&b.kron(&c)).unwrap());
        prop_assert_eq!(c.kron(&a.add(&b).unwrap()), c.kron(&a).add(&c.kron(&b)).unwrap());
        prop_assert_eq!(a.scale(&s).kron(&c), a.kron(&c).scale(&s));
    }

    #[test]
    fn kron_interchanges_with_composition((f, h, g, k) in square_pair()) {
        let left = f.kron(&g).compose(&h.kron(&k)).unwrap();
        let right = f.compose(&h).unwrap().kron(&g.compose(&k).unwrap());
        prop_assert_eq!(left, right);
    }

    #[test]
    fn twist_is_natural((f, _, g, _) in square_pair()) {
        let field = f.field();
        let before = LinearMap::twist(field, f.codomain(), g.codomain()).compose(&f.kron(&g)).unwrap();
        let after = g.kron(&f).compose(&LinearMap::twist(field, f.domain(), g.domain())).unwrap();
        prop_assert_eq!(before, after);
        let tt = LinearMap::twist(field, g.domain(), f.domain()).compose(&LinearMap::twist(field, f.domain(), g.domain())).unwrap();
        prop_assert_eq!(tt, LinearMap::identity(field, &f.domain().tensor(g.domain())));
    }

    #[test]
    fn emitted_maps_parse_back((f, _, _) in chain()) {
        let mut file = StructureFile::new(f.field());
        let name = file.add("m", &Object::Map(f.clone()));
        let text = file.emit();
        let doc = Document::parse(&text, None).unwrap();
        prop_assert_eq!(doc.get(&name).unwrap(), &Object::Map(f));
        prop_assert_eq!(doc.file().emit(), text);
    }

    #[test]
    fn scalars_print_and_parse_back(f in fields(), n in -50i64..50, d in 1i64..20) {
        prop_assume!(f.ratio(n, d).is_ok());
        let x = f.ratio(n, d).unwrap();
        prop_assert_eq!(f.parse(&x.to_string()).unwrap(), x);
    }

    #[test]
    fn reduction_mod_seven_is_a_homomorphism(a in -30i64..30, b in 1i64..30, c in -30i64..30, d in 1i64..30) {
        prop_assume!(b % 7 != 0 && d % 7 != 0);
        let (q, p) = (Field::Rational, Field::prime(7).unwrap());
        let x = q.ratio(a, b).unwrap();
        let y = q.ratio(c, d).unwrap();
        let reduce = |s: &entwine_core::Scalar| p.parse(&s.to_string()).unwrap();
        prop_assert_eq!(reduce(&(&x * &y)), &reduce(&x) * &reduce(&y));
        prop_assert_eq!(reduce(&(&x + &y)), &reduce(&x) + &reduce(&y));
    }

    #[test]
    fn gamma_is_semi_on_commutative_quadratic_algebras(f in fields(), lambda in -3i64..=3, q in -3i64..=3) {
        let a = Algebra::quadratic(f, &f.int(lambda));
        let report = check_semi_entwining(&gamma_q(&a, &f.int(q))).unwrap();
        prop_assert!(report.passed, "{}", report);
    }
}
