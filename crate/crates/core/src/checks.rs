//! Checks addressable by name, as used by the command line.

use crate::entwine::{
    check_algebra_factorization, check_coalgebra_factorization, check_cosemi_entwining, check_entwining_ll,
    check_entwining_rr, check_intertwining, check_semi_entwining, cofactorization_coproduct, factorization_product,
    EntwiningData,
};
use crate::error::{Error, Result};
use crate::format::Object;
use crate::report::Report;
use crate::structures::{check_algebra, check_bialgebra, check_coalgebra, check_comodule, check_module};
use crate::tambara::{
    check_cotambara_relations, check_module_algebra_refinement, check_module_coalgebra_refinement,
    check_tambara_relations, cotambara_generator_action, generator_action,
};
use crate::tensorlin::LinearMap;
use crate::yangbaxter::{
    check_braid, check_braided_algebra, check_factorization_system_equivalence, check_opposite_factorization,
    check_qybe, check_r_commutative, check_semi_system, check_semi_system_equivalence, check_type2, check_wxz,
    check_yb_operator, psi_a, YbCandidate,
};

const OPERATOR: [&str; 3] = ["braid", "yb-operator", "qybe"];

/// The checks that apply to `obj`, in a fixed order.
pub fn checks_for(obj: &Object) -> Vec<&'static str> {
    let mut v: Vec<&'static str> = match obj {
        Object::Space(_) => vec![],
        Object::Algebra(_) => vec!["algebra", "commutative-braided"],
        Object::Coalgebra(_) => vec!["coalgebra"],
        Object::Bialgebra(_) => vec!["bialgebra", "algebra", "coalgebra"],
        Object::Map(_) => vec![],
        Object::Module(_) => vec!["module"],
        Object::Comodule(_) => vec!["comodule"],
        Object::Entwining(_) => vec![
            "declared",
            "semi-entwining",
            "algebra-factorization",
            "entwining-ll",
            "cosemi-entwining",
            "coalgebra-factorization",
            "entwining-rr",
            "intertwining",
            "factorization-product",
            "cofactorization-coproduct",
            "tambara-relations",
            "module-algebra-refinement",
            "cotambara-relations",
            "module-coalgebra-refinement",
            "semi-system",
            "factorization-system",
            "opposite-factorization",
        ],
        Object::Operator(_) => vec![],
        Object::Type1(_) => vec!["wxz", "semi-system"],
        Object::Type2(_) => vec!["type2", "wxz"],
        Object::Tambara(_) => vec!["tambara-relations", "module-algebra-refinement"],
        Object::Cotambara(_) => vec!["cotambara-relations", "module-coalgebra-refinement"],
    };
    if operator(obj).is_some() {
        v.extend(OPERATOR);
    }
    v
}

/// The object viewed as a map on `V ⊗ V`, when it is one.
fn operator(obj: &Object) -> Option<YbCandidate> {
    let square = |m: &LinearMap| {
        let f = m.domain().factors();
        if f.len() == 2 && f[0] == f[1] && m.codomain() == m.domain() {
            YbCandidate::new(&f[0], m).ok()
        } else {
            None
        }
    };
    match obj {
        Object::Operator(y) => Some(y.clone()),
        Object::Map(m) => square(m),
        Object::Entwining(e) if e.left().space() == e.right().space() => square(e.psi()),
        _ => None,
    }
}

fn entwining(obj: &Object, check: &str) -> Result<Report> {
    let Object::Entwining(e) = obj else { unreachable!() };
    let e: &EntwiningData = e;
    let u = e.field().one();
    Ok(match check {
        "declared" => e.check()?,
        "semi-entwining" => check_semi_entwining(e)?,
        "algebra-factorization" => check_algebra_factorization(e)?,
        "entwining-ll" => check_entwining_ll(e)?,
        "cosemi-entwining" => check_cosemi_entwining(e)?,
        "coalgebra-factorization" => check_coalgebra_factorization(e)?,
        "entwining-rr" => check_entwining_rr(e)?,
        "intertwining" => check_intertwining(e)?,
        "factorization-product" => factorization_product(e)?.1.report("factorization-product"),
        "cofactorization-coproduct" => cofactorization_coproduct(e)?.1.report("cofactorization-coproduct"),
        "tambara-relations" => check_tambara_relations(&generator_action(e)?)?,
        "module-algebra-refinement" => check_module_algebra_refinement(&generator_action(e)?)?,
        "cotambara-relations" => check_cotambara_relations(&cotambara_generator_action(e)?)?,
        "module-coalgebra-refinement" => check_module_coalgebra_refinement(&cotambara_generator_action(e)?)?,
        "semi-system" => check_semi_system_equivalence(e, &u, &u)?.report("semi-system"),
        "factorization-system" => check_factorization_system_equivalence(e, &u, &u, &u, &u)?.report("factorization-system"),
        "opposite-factorization" => check_opposite_factorization(e)?.report("opposite-factorization"),
        _ => unreachable!("listed in checks_for"),
    })
}

/// Runs the named check. Unknown or inapplicable names are input errors.
pub fn run_check(obj: &Object, check: &str) -> Result<Report> {
    if !checks_for(obj).contains(&check) {
        return Err(Error::Unknown {
            kind: "check",
            name: format!("{check} (for a {}; available: {})", obj.kind(), checks_for(obj).join(", ")),
        });
    }
    if OPERATOR.contains(&check) {
        let y = operator(obj).expect("listed only for operators");
        return match check {
            "braid" => check_braid(&y),
            "yb-operator" => check_yb_operator(&y),
            _ => check_qybe(&y),
        };
    }
    match (obj, check) {
        (Object::Algebra(a), "algebra") => check_algebra(a),
        (Object::Algebra(a), "commutative-braided") => {
            let y = psi_a(a);
            let mut r = Report::new("commutative-braided");
            r.absorb("braided", check_braided_algebra(a, &y)?);
            r.absorb("r-commutative", check_r_commutative(a, &y)?);
            r.identity("involution", &y.map().compose(y.map())?, &LinearMap::identity(a.field(), y.map().domain()))?;
            Ok(r)
        }
        (Object::Coalgebra(c), _) => check_coalgebra(c),
        (Object::Bialgebra(h), "bialgebra") => check_bialgebra(h),
        (Object::Bialgebra(h), "algebra") => check_algebra(h.algebra()),
        (Object::Bialgebra(h), _) => check_coalgebra(h.coalgebra()),
        (Object::Module(m), _) => check_module(m),
        (Object::Comodule(c), _) => check_comodule(c),
        (Object::Entwining(_), _) => entwining(obj, check),
        (Object::Type1(s), "wxz") => check_wxz(s),
        (Object::Type1(s), _) => check_semi_system(s),
        (Object::Type2(s), "type2") => check_type2(s),
        (Object::Type2(s), _) => check_wxz(&s.as_wxz()),
        (Object::Tambara(g), "tambara-relations") => check_tambara_relations(g),
        (Object::Tambara(g), _) => check_module_algebra_refinement(g),
        (Object::Cotambara(g), "cotambara-relations") => check_cotambara_relations(g),
        (Object::Cotambara(g), _) => check_module_coalgebra_refinement(g),
        _ => unreachable!("listed in checks_for"),
    }
}

#[cfg(test)]
mod tests;
