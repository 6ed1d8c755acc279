use super::*;
use crate::fixtures::*;

fn q() -> Field {
    Field::Rational
}

fn qs() -> Vec<Scalar> {
    let f = q();
    vec![f.zero(), f.one(), f.int(-1), f.int(2), f.ratio(1, 2).unwrap()]
}

fn col(e: &EntwiningData, input: [&str; 2]) -> Vec<Scalar> {
    let dom = e.psi().domain();
    let i = dom.index_of(&input.join("⊗")).unwrap();
    e.psi().column(i)
}

fn vec_of(space: &Space, terms: &[(&str, i64)]) -> Vec<Scalar> {
    let mut v = vec![q().zero(); space.dim()];
    for (label, c) in terms {
        let i = space.index_of(label).unwrap();
        v[i] = &v[i] + &q().int(*c);
    }
    v
}

#[test]
fn gamma_and_eta_are_semi_entwinings_on_every_algebra() {
    for (name, a) in all_algebras(q()) {
        for s in qs() {
            assert!(check_semi_entwining(&gamma_q(&a, &s)).unwrap().passed, "gamma {name} {s}");
            assert!(check_semi_entwining(&eta_q(&a, &s)).unwrap().passed, "eta {name} {s}");
        }
    }
}

#[test]
fn gamma_values() {
    let a = quadratic(q(), 1);
    let sq = a.space().tensor(a.space());
    assert_eq!(col(&gamma_q(&a, &q().zero()), ["x", "x"]), vec_of(&sq, &[("1⊗1", 1)]));
    assert_eq!(col(&gamma_q(&a, &q().one()), ["x", "x"]), vec_of(&sq, &[("1⊗1", 2), ("x⊗x", -1)]));
}

#[test]
fn eta_is_twist_on_commutative_algebras() {
    for p in 0..3 {
        let a = quadratic(q(), p);
        let tw = LinearMap::twist(q(), a.space(), a.space());
        for s in qs() {
            assert_eq!(eta_q(&a, &s).psi(), &tw);
        }
    }
    let m = m2(q());
    assert_ne!(eta_q(&m, &q().one()).psi(), &LinearMap::twist(q(), m.space(), m.space()));
}

#[test]
fn regular_module_map_is_semi() {
    for (name, a) in all_algebras(q()) {
        let e = module_semi(&ModuleAction::regular(&a));
        assert!(check_semi_entwining(&e).unwrap().passed, "{name}");
    }
}

#[test]
fn twist_is_semi_and_a_factorization() {
    let algebras = all_algebras(q());
    let a = quadratic(q(), 0);
    let t = EntwiningData::twist(q(), Carrier::algebra(&a), Carrier::algebra(&a), Kind::Semi);
    assert!(check_semi_entwining(&t).unwrap().passed);
    for (_, b) in &algebras {
        for (_, a) in &algebras {
            let t = EntwiningData::twist(q(), Carrier::algebra(b), Carrier::algebra(a), Kind::Factorization);
            assert!(check_algebra_factorization(&t).unwrap().passed);
        }
    }
}

#[test]
fn gamma_one_is_a_factorization_and_gamma_two_is_not() {
    for (name, a) in all_algebras(q()) {
        assert!(check_algebra_factorization(&gamma_q(&a, &q().one())).unwrap().passed, "{name}");
    }
    let e = gamma_q(&m2(q()), &q().int(2));
    let r = check_algebra_factorization(&e).unwrap();
    assert!(!r.passed);
    assert!(r.holds("unit") && r.holds("multiplicative"));
    let v = r.verdict("left-multiplicative").unwrap();
    assert!(!v.passed);
    assert_eq!(v.witness.as_ref().unwrap().tuple.len(), 3);
}

#[test]
fn missing_structure_is_an_error() {
    let a = quadratic(q(), 1);
    let e = module_semi(&ModuleAction::regular(&a));
    assert!(matches!(check_algebra_factorization(&e), Err(Error::MissingStructure(_))));
    assert!(matches!(check_cosemi_entwining(&e), Err(Error::MissingStructure(_))));
}

#[test]
fn twist_over_grouplike_coalgebra_passes_every_coalgebra_check() {
    let c = grouplike2(q());
    let k = Bialgebra::new(Algebra::ground(q()), Coalgebra::grouplike(q(), &Space::ground())).unwrap();
    let t = EntwiningData::twist(q(), Carrier::bialgebra(&k), Carrier::coalgebra(&c), Kind::Cosemi);
    assert!(check_cosemi_entwining(&t).unwrap().passed);
    assert!(check_coalgebra_factorization(&t).unwrap().passed);
    assert!(check_entwining_rr(&t).unwrap().passed);
}

#[test]
fn alternative_doi_koppinen_on_dual_numbers() {
    let f = q();
    let h = z2(f);
    let e = alt_doi_koppinen(&h, &dual_numbers(f), &grading(f), &sign(f), None, None).unwrap();
    assert_eq!(e.kind(), Kind::Cosemi);
    assert!(check_cosemi_entwining(&e).unwrap().passed);
    // ψ(s ⊗ e1) = e1 ⊗ s·g = -e1 ⊗ s
    assert_eq!(col(&e, ["s", "e1"]), vec_of(e.psi().codomain(), &[("e1⊗s", -1)]));
}

#[test]
fn group_algebra_is_not_a_comodule_coalgebra_over_itself() {
    let f = q();
    let h = z2(f);
    let regular = ComoduleCoaction::regular(h.coalgebra(), Side::Right);
    let r = crate::structures::check_comodule_coalgebra(h.coalgebra(), &regular, &h).unwrap();
    assert!(!r.passed);
    let err = alt_doi_koppinen(&h, h.coalgebra(), &regular, &sign(f), None, None).unwrap_err();
    assert!(err.report().is_some());
}

#[test]
fn corrupted_entry_gives_first_witness() {
    let a = quadratic(q(), 1);
    let e = gamma_q(&a, &q().one());
    // ψ(x ⊗ 1) should be 1 ⊗ x; add a stray x ⊗ x
    let bad = e.with_entry(3, 2, q().one());
    let r = check_semi_entwining(&bad).unwrap();
    assert!(!r.passed);
    let v = r.verdict("unit").unwrap();
    assert_eq!(v.witness.as_ref().unwrap().tuple, vec!["x", "1"]);
    let dual = dualize_semi(&e).unwrap();
    let bad = dual.with_entry(3, 2, q().one());
    assert!(!check_cosemi_entwining(&bad).unwrap().passed);
}

#[test]
fn doi_koppinen_examples() {
    let f = q();
    let h = z2(f);
    let a = h.algebra().clone();
    let rho = ComoduleCoaction::regular(h.coalgebra(), Side::Right);

    let e = doi_koppinen(&h, &a, &rho, &trivial(f), None, None).unwrap();
    assert!(check_semi_entwining(&e).unwrap().passed);
    assert_eq!(e.psi(), &LinearMap::twist(f, e.left().space(), a.space()));

    let e = doi_koppinen(&h, &a, &rho, &sign(f), None, None).unwrap();
    assert_eq!(col(&e, ["s", "g"]), vec_of(e.psi().codomain(), &[("g⊗s", -1)]));
    assert!(check_semi_entwining(&e).unwrap().passed);

    let regular = ModuleAction::regular(h.algebra());
    let e = doi_koppinen(&h, &a, &rho, &regular, None, None).unwrap();
    assert_eq!(col(&e, ["g", "g"]), vec_of(e.psi().codomain(), &[("g⊗1", 1)]));
    assert_eq!(col(&e, ["1", "g"]), vec_of(e.psi().codomain(), &[("g⊗g", 1)]));
    assert!(check_semi_entwining(&e).unwrap().passed);
    // the regular action does not respect products, so it is no module algebra
    assert!(doi_koppinen(&h, &a, &rho, &regular, Some(h.algebra()), None).is_err());

    let k = Algebra::ground(f);
    let e = doi_koppinen(&h, &a, &rho, &trivial(f), Some(&k), None).unwrap();
    assert_eq!(e.kind(), Kind::Factorization);
    assert!(check_algebra_factorization(&e).unwrap().passed);
}

#[test]
fn doi_koppinen_rejects_non_module_algebra() {
    let f = q();
    let h = z2(f);
    let rho = ComoduleCoaction::regular(h.coalgebra(), Side::Right);
    let k = Algebra::ground(f);
    let err = doi_koppinen(&h, h.algebra(), &rho, &sign(f), Some(&k), None).unwrap_err();
    assert!(matches!(err, Error::Precondition { .. }));
}

#[test]
fn induced_module_examples() {
    let f = q();
    let a = quadratic(f, 1);
    let e = gamma_q(&a, &f.one());
    let m = induced_module(&e).unwrap();
    let sq = m.module().clone();
    let input = vec_of(&sq.tensor(a.space()), &[("1⊗x⊗x", 1)]);
    assert_eq!(m.action().apply(&input).unwrap(), vec_of(&sq, &[("1⊗1", 2), ("x⊗x", -1)]));

    let t = EntwiningData::twist(f, Carrier::algebra(&a), Carrier::algebra(&a), Kind::Semi);
    let m = induced_module(&t).unwrap();
    let input = vec_of(&sq.tensor(a.space()), &[("x⊗1⊗x", 1)]);
    assert_eq!(m.action().apply(&input).unwrap(), vec_of(&sq, &[("1⊗1", 1)]));

    for (name, a) in all_algebras(f) {
        for s in [0, 1, 2] {
            let m = induced_module(&gamma_q(&a, &f.int(s))).unwrap();
            assert!(check_module(&m).unwrap().passed, "{name} {s}");
        }
    }
}

#[test]
fn factorization_product_agreement() {
    let f = q();
    let a = quadratic(f, 0);
    let t = EntwiningData::twist(f, Carrier::algebra(&a), Carrier::algebra(&a), Kind::Factorization);
    let (product, agreement) = factorization_product(&t).unwrap();
    assert!(agreement.agrees() && agreement.axioms.passed);
    assert_eq!(product.mult(), a.tensor(&a).mult());

    let (_, agreement) = factorization_product(&gamma_q(&m2(f), &f.int(2))).unwrap();
    assert!(agreement.agrees());
    assert!(!agreement.construction.passed);
    assert!(agreement.report("agreement").passed);
}

#[test]
fn cofactorization_coproduct_agreement() {
    let f = q();
    let c = grouplike2(f);
    let d = Coalgebra::grouplike(f, &Space::new(["h0", "h1"]).unwrap());
    let t = EntwiningData::twist(f, Carrier::coalgebra(&d), Carrier::coalgebra(&c), Kind::Cofactorization);
    let (_, agreement) = cofactorization_coproduct(&t).unwrap();
    assert!(agreement.agrees() && agreement.construction.passed);
    let bad = t.with_entry(1, 0, f.one());
    let (_, agreement) = cofactorization_coproduct(&bad).unwrap();
    assert!(agreement.agrees() && !agreement.construction.passed);
}

#[test]
fn dualize_cosemi_examples() {
    let f = q();
    let c = grouplike2(f);
    let t = EntwiningData::twist(f, Carrier::plain(&Space::ground()), Carrier::coalgebra(&c), Kind::Cosemi);
    let d = dualize_cosemi(&t).unwrap();
    assert_eq!(d.psi(), &LinearMap::twist(f, &Space::ground(), &c.space().dual()));
    assert!(check_semi_entwining(&d).unwrap().passed);

    let alt = alt_doi_koppinen(&z2(f), &dual_numbers(f), &grading(f), &sign(f), None, None).unwrap();
    let d = dualize_cosemi(&alt).unwrap();
    assert!(check_semi_entwining(&d).unwrap().passed);
}

#[test]
fn dualize_semi_round_trip() {
    let f = q();
    for (name, a) in all_algebras(f) {
        for s in [0, 1, 2] {
            let e = gamma_q(&a, &f.int(s));
            let co = dualize_semi(&e).unwrap();
            assert!(check_cosemi_entwining(&co).unwrap().passed, "{name}");
            let back = dualize_cosemi(&co).unwrap();
            assert_eq!(back.psi().to_rows(), e.psi().to_rows(), "{name}");
        }
    }
}

#[test]
fn dualize_both_maps_kinds() {
    let f = q();
    let a = quadratic(f, 1);
    let t = EntwiningData::twist(f, Carrier::algebra(&a), Carrier::algebra(&a), Kind::Factorization);
    let d = dualize_both(&t).unwrap();
    assert_eq!(d.kind(), Kind::Cofactorization);
    assert!(d.check().unwrap().passed);
    for (name, a) in all_algebras(f) {
        let e = gamma_q(&a, &f.int(2));
        assert!(check_cosemi_entwining(&dualize_both(&e).unwrap()).unwrap().passed, "{name}");
        assert_eq!(dualize_both(&dualize_both(&e).unwrap()).unwrap().psi(), e.psi());
    }
}

#[test]
fn biproduct_over_absorbing_monoid_with_integral() {
    let f = q();
    let h = absorbing(f);
    let t = EntwiningData::twist(f, Carrier::plain(&Space::ground()), Carrier::algebra(h.algebra()), Kind::Semi);
    let b = biproduct(&t, &h, Some(&[f.zero(), f.one()])).unwrap();
    assert_eq!(b.algebra.dim(), 3);
    assert!(b.report.passed, "{}", b.report);
    assert!(b.report.verdicts.iter().any(|v| v.name.starts_with("comodule-algebra/")));
}

#[test]
fn biproduct_over_group_algebra_with_gamma() {
    let f = q();
    let h = z2(f);
    let e = gamma_q(h.algebra(), &f.one());
    let b = biproduct(&e, &h, None).unwrap();
    assert!(b.report.passed, "{}", b.report);
    let err = biproduct(&e, &h, Some(&[f.zero(), f.one()])).unwrap_err();
    assert_eq!(err.report().unwrap().suite, "grouplike-bilateral-integral");
}

#[test]
fn measured_module_examples() {
    let f = q();
    for (name, a) in all_algebras(f) {
        let regular = ModuleAction::regular(&a);
        for s in [0, 1, 2] {
            let mm = MeasuredModule::semi_module(&regular, a.space(), a.mult()).unwrap();
            assert!(check_entwined_variant(&mm, &gamma_q(&a, &f.int(s))).unwrap().passed, "{name} {s}");
        }
        let mm = MeasuredModule::semi_module(&regular, a.space(), a.mult()).unwrap();
        assert!(check_entwined_variant(&mm, &eta_q(&a, &f.one())).unwrap().passed, "{name}");
        let rho = id(f, a.space()).kron(a.unit());
        let mm = MeasuredModule::semi_comodule(&regular, a.space(), &rho).unwrap();
        assert!(check_entwined_variant(&mm, &gamma_q(&a, &f.one())).unwrap().passed, "{name}");
        for s in qs() {
            assert!(check_entwined_variant(&mm, &eta_q(&a, &s)).unwrap().passed, "{name}");
        }
    }
}

#[test]
fn zero_measuring_fails() {
    let f = q();
    let a = quadratic(f, 1);
    let regular = ModuleAction::regular(&a);
    let zero = LinearMap::zero(f, &a.space().tensor(a.space()), a.space());
    let mm = MeasuredModule::semi_module(&regular, a.space(), &zero).unwrap();
    let e = EntwiningData::twist(f, Carrier::algebra(&a), Carrier::algebra(&a), Kind::Semi);
    // zero measuring satisfies both sides trivially; use a nonzero one that ignores ψ
    assert!(check_entwined_variant(&mm, &e).unwrap().passed);
    let unit_only = a.unit().compose(&LinearMap::from_covector(f, &a.space().tensor(a.space()), &vec_of(&a.space().tensor(a.space()), &[("1⊗1", 1)])).unwrap()).unwrap();
    let mm = MeasuredModule::semi_module(&regular, a.space(), &unit_only).unwrap();
    let r = check_entwined_variant(&mm, &e).unwrap();
    assert!(!r.passed);
    assert!(r.verdicts[0].witness.is_some());
}

#[test]
fn variant_kind_mismatch_is_an_error() {
    let f = q();
    let a = quadratic(f, 1);
    let regular = ModuleAction::regular(&a);
    let mm = MeasuredModule::semi_module(&regular, a.space(), a.mult()).unwrap();
    let co = dualize_semi(&gamma_q(&a, &f.one())).unwrap();
    assert!(matches!(check_entwined_variant(&mm, &co), Err(Error::InvalidArgument(_))));
}

#[test]
fn cosemi_entwined_variants() {
    let f = q();
    let c = grouplike2(f);
    let left = ComoduleCoaction::regular(&c, Side::Left);
    let v = Space::new(["v"]).unwrap();
    let t = EntwiningData::twist(f, Carrier::plain(&v), Carrier::coalgebra(&c), Kind::Cosemi);
    let measuring = id(f, c.space()).reshape(&v.tensor(c.space()), c.space()).unwrap();
    let mm = MeasuredModule::cosemi_module(&left, &v, &measuring).unwrap();
    assert!(check_entwined_variant(&mm, &t).unwrap().passed);
    let comeasuring = id(f, c.space()).reshape(c.space(), &v.tensor(c.space())).unwrap();
    let mm = MeasuredModule::cosemi_comodule(&left, &v, &comeasuring).unwrap();
    assert!(check_entwined_variant(&mm, &t).unwrap().passed);
    let swap = LinearMap::from_sparse_fn(f, c.space().clone(), v.tensor(c.space()), |i| vec![(1 - i, f.one())]);
    let mm = MeasuredModule::cosemi_comodule(&left, &v, &swap).unwrap();
    assert!(!check_entwined_variant(&mm, &t).unwrap().passed);
}

#[test]
fn roundtrip_for_twist_and_tensor_product() {
    let f = q();
    for (_, a) in all_algebras(f).into_iter().take(5) {
        let t = EntwiningData::twist(f, Carrier::algebra(&a), Carrier::algebra(&a), Kind::Factorization);
        let regular = ModuleAction::regular(&a);
        let r = entwined_roundtrip(&t, &regular, &regular).unwrap();
        assert!(r.passed, "{r}");
    }
}

#[test]
fn intertwining_for_semi_entwinings() {
    let f = q();
    for (name, a) in all_algebras(f) {
        for s in [0, 1, 2] {
            let r = check_intertwining(&gamma_q(&a, &f.int(s))).unwrap();
            assert!(r.passed, "{name}: {r}");
        }
    }
    let bad = gamma_q(&quadratic(f, 1), &f.one()).with_entry(1, 3, f.one());
    assert!(!check_semi_entwining(&bad).unwrap().passed);
    assert!(!check_intertwining(&bad).unwrap().holds("intertwining"));
}
